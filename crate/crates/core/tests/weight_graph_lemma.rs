//! Homogeneous components of weight graphs versus commutation classes.

use std::collections::BTreeSet;

use fullcomm::canonical::{homogeneous_canonical, homogeneous_type_a};
use fullcomm::klr::components_for_words;
use fullcomm::weight_graph::{homogeneous_components_of, DEFAULT_HEIGHT_CAP};
use fullcomm::{
    build_graph, commutation_class, homogeneous_components, Content, DynkinGraph, HomogeneityCheck,
    Word,
};

fn classes(words: &[Word], g: &DynkinGraph) -> BTreeSet<Vec<Word>> {
    words
        .iter()
        .map(|w| commutation_class(w, g).unwrap())
        .collect()
}

fn components_are_classes(words: &[Word], g: &DynkinGraph) {
    let comps = components_for_words(words, g).unwrap();
    let found: BTreeSet<Vec<Word>> = comps.into_iter().map(|c| c.words).collect();
    assert_eq!(found.len(), words.len());
    assert_eq!(found, classes(words, g));
}

#[test]
fn type_d_components_are_commutation_classes() {
    for n in [4, 5] {
        let g = DynkinGraph::type_d(n).unwrap();
        let words: Vec<Word> = homogeneous_canonical(n)
            .unwrap()
            .into_iter()
            .map(|f| f.word)
            .collect();
        components_are_classes(&words, &g);
    }
}

#[test]
fn type_a_components_are_commutation_classes() {
    for n in 2..=5 {
        let g = DynkinGraph::type_a(n).unwrap();
        components_are_classes(&homogeneous_type_a(n).unwrap(), &g);
    }
}

#[test]
fn type_a_totals_are_catalan() {
    for (n, total) in [(2, 5), (3, 14), (4, 42), (5, 132)] {
        let g = DynkinGraph::type_a(n).unwrap();
        let comps = components_for_words(&homogeneous_type_a(n).unwrap(), &g).unwrap();
        assert_eq!(comps.len(), total, "A{n}");
    }
}

#[test]
fn three_routes_agree() {
    for g in [
        DynkinGraph::type_a(3).unwrap(),
        DynkinGraph::type_d(4).unwrap(),
    ] {
        let words: Vec<Word> = if g.rank() == 3 {
            homogeneous_type_a(3).unwrap()
        } else {
            homogeneous_canonical(4)
                .unwrap()
                .into_iter()
                .map(|f| f.word)
                .collect()
        };
        let contents: BTreeSet<Content> = words
            .iter()
            .map(|w| Content::of_word(w, g.rank()))
            .collect();
        for alpha in contents {
            let wg = build_graph(&alpha, &g, DEFAULT_HEIGHT_CAP).unwrap();
            let rep = homogeneous_components(&wg, &g, HomogeneityCheck::Representative);
            let par = homogeneous_components(&wg, &g, HomogeneityCheck::Paranoid);
            let fast = homogeneous_components_of(&alpha, &g).unwrap();
            assert_eq!(rep, par, "{alpha}");
            assert_eq!(rep, fast, "{alpha}");
        }
    }
}

#[test]
fn a3_example_graph() {
    let g = DynkinGraph::type_a(3).unwrap();
    let alpha = Content::new(vec![1, 2, 1]);
    let wg = build_graph(&alpha, &g, DEFAULT_HEIGHT_CAP).unwrap();
    assert_eq!(wg.vertex_count(), 12);
    assert_eq!(wg.edge_count(), 3);
    let hom = homogeneous_components(&wg, &g, HomogeneityCheck::Paranoid);
    assert_eq!(hom.len(), 1);
    assert_eq!(
        hom[0].words,
        vec![
            "[2,1,3,2]".parse::<Word>().unwrap(),
            "[2,3,1,2]".parse().unwrap()
        ]
    );
}
