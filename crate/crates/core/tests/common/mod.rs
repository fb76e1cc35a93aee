//! Published listings shared by the golden and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use fullcomm::Word;

pub fn words(list: &[&str]) -> Vec<Word> {
    let mut v: Vec<Word> = list.iter().map(|s| s.parse().unwrap()).collect();
    v.sort();
    v
}

pub fn d4_table() -> BTreeMap<(usize, Word), Vec<Word>> {
    let rows: [(usize, &str, &[&str]); 8] = [
        (0, "[4,2,1,3]", &["[4,2,1,3]"]),
        (0, "[4,2,1,3,2]", &["[4,2,1,3,2]"]),
        (0, "[4,2,1,3,2,4]", &["[4,2,1,3,2,4]"]),
        (
            1,
            "[4,2,1]",
            &["[4,2,1]", "[3,4,2,1]", "[2,3,4,2,1]", "[1,2,3,4,2,1]"],
        ),
        (
            1,
            "[4,2,3]",
            &["[3,2,1,4,2,3]", "[2,1,4,2,3]", "[1,4,2,3]", "[4,2,3]"],
        ),
        (
            2,
            "[4,2]",
            &[
                "[4,2]",
                "[3,2,1,4,2]",
                "[2,1,4,2]",
                "[1,4,2]",
                "[2,1,3,4,2]",
                "[1,3,4,2]",
                "[3,4,2]",
                "[2,3,4,2]",
                "[1,2,3,4,2]",
            ],
        ),
        (
            3,
            "[4]",
            &[
                "[1,2,3,4]",
                "[1,2,4]",
                "[1,3,2,4]",
                "[1,3,4]",
                "[1,4]",
                "[2,1,3,2,4]",
                "[2,1,3,4]",
                "[2,1,4]",
                "[2,3,4]",
                "[2,4]",
                "[3,2,1,4]",
                "[3,2,4]",
                "[3,4]",
                "[4]",
            ],
        ),
        (
            4,
            "[]",
            &[
                "[1,2,3]",
                "[1,2]",
                "[1,3,2]",
                "[1,3]",
                "[1]",
                "[2,1,3,2]",
                "[2,1,3]",
                "[2,1]",
                "[2,3]",
                "[2]",
                "[3,2,1]",
                "[3,2]",
                "[3]",
                "[]",
            ],
        ),
    ];
    rows.iter()
        .map(|(k, s, ws)| ((*k, s.parse().unwrap()), words(ws)))
        .collect()
}

/// The four word lists of the n = 5, k = 2 figure: the two domains of phi and
/// the two halves of its codomain.
pub struct PhiFigure {
    pub upper: Vec<Word>,
    pub lower: Vec<Word>,
    pub target_from_upper: Vec<Word>,
    pub target_from_lower: Vec<Word>,
}

pub fn phi_figure() -> PhiFigure {
    let upper = words(&[
        "[4,3,2,1,5,3,2,4]",
        "[3,2,1,5,3,2,4]",
        "[2,1,5,3,2,4]",
        "[1,5,3,2,4]",
        "[5,3,2,4]",
    ]);
    let lower = words(&[
        "[3,2,1,4,2]",
        "[2,1,4,2]",
        "[1,4,2]",
        "[4,2]",
        "[2,1,3,4,2]",
        "[1,3,4,2]",
        "[3,4,2]",
        "[2,3,4,2]",
        "[1,2,3,4,2]",
    ]);
    let target_from_upper = words(&[
        "[4,3,2,1,5,3,2]",
        "[3,2,1,5,3,2]",
        "[2,1,5,3,2]",
        "[1,5,3,2]",
        "[5,3,2]",
    ]);
    let target_from_lower = words(&[
        "[3,2,1,4,5,3,2]",
        "[2,1,4,5,3,2]",
        "[1,4,5,3,2]",
        "[4,5,3,2]",
        "[2,1,3,4,5,3,2]",
        "[1,3,4,5,3,2]",
        "[3,4,5,3,2]",
        "[2,3,4,5,3,2]",
        "[1,2,3,4,5,3,2]",
    ]);
    PhiFigure {
        upper,
        lower,
        target_from_upper,
        target_from_lower,
    }
}
