//! Acceptance gate: one PASS/FAIL line per criterion. Every tolerance is
//! exact equality; time budgets are pinned below.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fullcomm::canonical::{fc_count_formula_d, homogeneous_canonical, homogeneous_type_a};
use fullcomm::klr::{check_modules, components_for_words};
use fullcomm::packets::catalan::{catalan, CatalanTriangle, Method};
use fullcomm::packets::verify::{verify_phi_rho, verify_sigma_tau};
use fullcomm::packets::{
    packet_size_formula, phi, rho, sigma, tau, verify_identity, verify_theorem, Decomposition,
    Suffix,
};
use fullcomm::weight_graph::DEFAULT_HEIGHT_CAP;
use fullcomm::{build_graph, homogeneous_components, Content, DynkinGraph, HomogeneityCheck, Word};
use num_bigint::BigUint;

const COUNTS_BUDGET: Duration = Duration::from_secs(5);
const TYPE_A_BUDGET: Duration = Duration::from_secs(10);
const KLR_BUDGET: Duration = Duration::from_secs(60);

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn fc_words(n: usize) -> Vec<Word> {
    homogeneous_canonical(n)
        .unwrap()
        .into_iter()
        .map(|f| f.word)
        .collect()
}

fn c1_fc_counts() -> Outcome {
    // oracle: (n+3)/2 · C_n − 1, evaluated independently of the crate
    let expected = [48usize, 167, 593, 2144, 7864];
    let start = Instant::now();
    let found: Vec<usize> = (4..=8)
        .map(|n| homogeneous_canonical(n).unwrap().len())
        .collect();
    let elapsed = start.elapsed();
    let formula: Vec<BigUint> = (4..=8).map(fc_count_formula_d).collect();
    let ok = found == expected
        && formula
            .iter()
            .zip(expected)
            .all(|(f, e)| f == &BigUint::from(e))
        && elapsed < COUNTS_BUDGET;
    (ok, format!("counts {found:?} in {elapsed:.2?}"))
}

fn c2_type_a() -> Outcome {
    let start = Instant::now();
    let totals: Vec<usize> = (2..=4)
        .map(|n| {
            let g = DynkinGraph::type_a(n).unwrap();
            components_for_words(&homogeneous_type_a(n).unwrap(), &g)
                .unwrap()
                .len()
        })
        .collect();
    let elapsed = start.elapsed();
    (
        totals == [5, 14, 42] && elapsed < TYPE_A_BUDGET,
        format!("homogeneous components {totals:?} in {elapsed:.2?}"),
    )
}

fn c3_collection_sizes() -> Outcome {
    let mut collections = 0;
    let mut bad = 0;
    for n in 4..=8 {
        let rep = verify_theorem(n).unwrap();
        collections += rep.checks.len();
        bad += rep.violations().count();
    }
    (
        bad == 0,
        format!("{collections} collections, {bad} of wrong size"),
    )
}

fn c4_table() -> Outcome {
    let dec = Decomposition::new(4).unwrap();
    let mut found = BTreeMap::new();
    for p in &dec.packets {
        for c in &p.collections {
            found.insert((p.k, c.suffix.word()), c.words.clone());
        }
    }
    let expected = common::d4_table();
    (
        found == expected,
        format!("{} collections compared word for word", expected.len()),
    )
}

fn c5_sigma_tau() -> Outcome {
    let rows = [
        (w("[2,1,4,5,3,2]"), w("[2,1,4,3,2,5,3,4]")),
        (w("[3,2,1,5,3,2]"), w("[3,2,1,5,3,4]")),
        (w("[1,2,3,4,5,3,2]"), w("[1,2,5,3,4]")),
    ];
    let mut ok = rows.iter().all(|(a, b)| &sigma(a, 5, 2).unwrap() == b)
        && tau(&w("[2,5,3,4]"), 5, 2).unwrap() == w("[2,3,4,5,3,2]");
    let mut maps = 0;
    for n in 4..=7 {
        let dec = Decomposition::new(n).unwrap();
        for k in 1..=n - 3 {
            let rep = verify_sigma_tau(&dec, k).unwrap();
            ok &= rep.passed();
            maps += 1;
        }
    }
    (
        ok,
        format!("example rows match, {maps} collection pairs inverse"),
    )
}

fn c6_phi_rho() -> Outcome {
    let fig = common::phi_figure();
    let coll = |dec: &Decomposition, s: &str| {
        let s = Suffix::from_word(dec.n, &w(s)).unwrap();
        dec.collection(&s).unwrap().words.clone()
    };
    let d5 = Decomposition::new(5).unwrap();
    let d4 = Decomposition::new(4).unwrap();
    let mut ok = coll(&d5, "[5,3,2,4]") == fig.upper
        && coll(&d4, "[4,2]") == fig.lower
        && coll(&d5, "[5,3,2]").len() == 14;
    let mut img: Vec<Word> = fig.upper.iter().map(|x| phi(x, 5, 2).unwrap()).collect();
    img.sort();
    ok &= img == fig.target_from_upper;
    let mut img: Vec<Word> = fig.lower.iter().map(|x| phi(x, 5, 2).unwrap()).collect();
    img.sort();
    ok &= img == fig.target_from_lower;
    ok &= fig
        .target_from_lower
        .iter()
        .all(|x| &phi(&rho(x, 5, 2).unwrap(), 5, 2).unwrap() == x);
    let mut maps = 0;
    for n in 5..=7 {
        let dec = Decomposition::new(n).unwrap();
        let lower = Decomposition::new(n - 1).unwrap();
        for k in 1..=n - 2 {
            let rep = verify_phi_rho(&dec, &lower, k).unwrap();
            ok &= rep.passed() && rep.domain_size == rep.codomain_size;
            maps += 1;
        }
    }
    (
        ok,
        format!("figure lists 5/9/14 match, {maps} maps additive and inverse"),
    )
}

fn c7_identity() -> Outcome {
    let mut ok = true;
    let mut direct = 0;
    for n in 4..=12 {
        let rep = verify_identity(n, 8).unwrap();
        ok &= rep.passed();
        direct += rep.direct.is_some() as usize;
    }
    (
        ok && direct == 5,
        format!("n = 4..12 exact, {direct} cross-checked by enumeration"),
    )
}

fn c8_packet_sizes() -> Outcome {
    let mut ok = true;
    for n in 4..=12 {
        let mut found = vec![0usize; n + 1];
        for s in Suffix::all(n).unwrap() {
            found[s.packet_index()] += 1;
        }
        let formula: Vec<BigUint> = (0..=n).map(|k| packet_size_formula(n, k)).collect();
        ok &= found
            .iter()
            .zip(&formula)
            .all(|(a, b)| &BigUint::from(*a) == b);
        ok &= found.iter().sum::<usize>() == 1 << (n - 1);
    }
    let row7: Vec<usize> = Decomposition::new(7)
        .unwrap()
        .packets
        .iter()
        .map(|p| p.size())
        .collect();
    ok &= row7 == [31, 16, 8, 4, 2, 1, 1, 1];
    (ok, format!("n = 4..12, row 7 = {row7:?}"))
}

fn c9_weight_graph() -> Outcome {
    let g = DynkinGraph::type_a(3).unwrap();
    let wg = build_graph(&Content::new(vec![1, 2, 1]), &g, DEFAULT_HEIGHT_CAP).unwrap();
    let hom = homogeneous_components(&wg, &g, HomogeneityCheck::Paranoid);
    let ok = wg.vertex_count() == 12
        && wg.edge_count() == 3
        && hom.len() == 1
        && hom[0].words == [w("[2,1,3,2]"), w("[2,3,1,2]")];
    (
        ok,
        format!(
            "{} words, {} edges, {} homogeneous component",
            wg.vertex_count(),
            wg.edge_count(),
            hom.len()
        ),
    )
}

fn c10_klr() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut modules = 0;
    let mut max_height = 0;
    let cases = [
        (
            DynkinGraph::type_a(3).unwrap(),
            homogeneous_type_a(3).unwrap(),
        ),
        (DynkinGraph::type_d(4).unwrap(), fc_words(4)),
        (DynkinGraph::type_d(5).unwrap(), fc_words(5)),
    ];
    for (g, words) in &cases {
        let comps = components_for_words(words, g).unwrap();
        max_height = comps
            .iter()
            .map(|c| c.representative().len())
            .fold(max_height, usize::max);
        let checks = check_modules(&comps, g).unwrap();
        ok &= checks.iter().all(|m| m.passed());
        modules += checks.len();
    }
    let elapsed = start.elapsed();
    (
        ok && max_height <= 10 && elapsed < KLR_BUDGET,
        format!("{modules} modules, both orientations, height ≤ {max_height}, {elapsed:.2?}"),
    )
}

fn c11_catalan() -> Outcome {
    let t = CatalanTriangle::new(60);
    let mut ok = true;
    for n in 0..=60 {
        for k in 0..=n {
            let closed = catalan(n, k, Method::Closed).unwrap();
            ok &=
                t.get(n, k) == Some(&closed) && catalan(n, k, Method::Recursive).unwrap() == closed;
        }
    }
    let block: [&[u32]; 8] = [
        &[1],
        &[1, 1],
        &[1, 2, 2],
        &[1, 3, 5, 5],
        &[1, 4, 9, 14, 14],
        &[1, 5, 14, 28, 42, 42],
        &[1, 6, 20, 48, 90, 132, 132],
        &[1, 7, 27, 75, 165, 297, 429, 429],
    ];
    for (n, row) in block.iter().enumerate() {
        ok &= row
            .iter()
            .enumerate()
            .all(|(k, &v)| t.get(n, k) == Some(&BigUint::from(v)));
    }
    (ok, "methods agree for n ≤ 60, rows 0..7 match".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("fully commutative counts D4..D8", c1_fc_counts),
        ("type A component totals", c2_type_a),
        ("collection sizes are C(n,k)", c3_collection_sizes),
        ("D4 packet listing", c4_table),
        ("sigma/tau examples and inverses", c5_sigma_tau),
        ("phi/rho figure and inverses", c6_phi_rho),
        ("packet identity n = 4..12", c7_identity),
        ("packet sizes", c8_packet_sizes),
        ("A3 weight graph example", c9_weight_graph),
        ("KLR relation suite", c10_klr),
        ("Catalan triangle", c11_catalan),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (ok, detail) = f();
        failed += !ok as usize;
        println!(
            "{} {:>2}. {name}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
