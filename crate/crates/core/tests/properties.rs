//! Randomized invariants.

use fullcomm::canonical::{homogeneous_canonical, CanonicalForm};
use fullcomm::klr::{
    act_e, act_psi, build_module, components_for_words, verify_relations, LinearOp, OrientedQuiver,
};
use fullcomm::packets::{sigma, tau, Decomposition};
use fullcomm::{is_fully_commutative, is_homogeneous, realize, split, DynkinGraph, Word};
use proptest::prelude::*;

fn arb_form(n: usize) -> impl Strategy<Value = CanonicalForm> {
    let prefix = proptest::collection::vec(any::<u8>(), n - 1).prop_map(move |raw| {
        raw.iter()
            .enumerate()
            .map(|(k, r)| 1 + r % (k as u8 + 2))
            .collect::<Vec<u8>>()
    });
    let suffixes = fullcomm::canonical::suffix_params_all(n);
    (prefix, 0..suffixes.len())
        .prop_map(move |(p, i)| CanonicalForm::new(n, p, suffixes[i].clone()).unwrap())
}

proptest! {
    #[test]
    fn split_inverts_realize(f in (4usize..=7).prop_flat_map(arb_form)) {
        let w = realize(&f);
        prop_assert_eq!(split(&w, f.rank()).unwrap(), f);
    }

    #[test]
    fn word_text_round_trip(letters in proptest::collection::vec(1u8..=9, 0..12)) {
        let w = Word::from(letters);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn homogeneous_iff_fully_commutative(f in (4usize..=6).prop_flat_map(arb_form)) {
        let g = DynkinGraph::type_d(f.rank()).unwrap();
        let w = realize(&f);
        prop_assert_eq!(is_homogeneous(&w, &g), is_fully_commutative(&w, &g).unwrap());
    }
}

#[test]
fn sigma_tau_are_inverse_for_small_ranks() {
    for n in 4..=7 {
        let dec = Decomposition::new(n).unwrap();
        for k in 1..=n - 3 {
            let mut mapped = 0;
            for c in dec.collections() {
                for w in &c.words {
                    if let Ok(image) = sigma(w, n, k) {
                        assert_eq!(&tau(&image, n, k).unwrap(), w);
                        mapped += 1;
                    }
                }
            }
            assert!(mapped > 0, "n={n} k={k}");
        }
    }
}

#[test]
fn module_generators_commute_with_idempotents() {
    let g = DynkinGraph::type_d(5).unwrap();
    let q = OrientedQuiver::default_for(&g);
    let words: Vec<Word> = homogeneous_canonical(5)
        .unwrap()
        .into_iter()
        .map(|f| f.word)
        .collect();
    for c in components_for_words(&words, &g).unwrap() {
        let m = build_module(&c, &q).unwrap();
        let d = m.height();
        for k in 1..d {
            let psi = act_psi(&m, k).unwrap();
            for w in m.basis() {
                let lhs = &psi * &act_e(&m, w).unwrap();
                let rhs = &act_e(&m, &w.swapped(k).unwrap()).unwrap() * &psi;
                assert_eq!(lhs, rhs);
            }
            for l in k + 2..d {
                let other = act_psi(&m, l).unwrap();
                assert_eq!(&psi * &other, &other * &psi);
            }
        }
        let sum = m.basis().iter().fold(LinearOp::zero(m.dim()), |acc, w| {
            &acc + &act_e(&m, w).unwrap()
        });
        assert_eq!(sum, LinearOp::identity(m.dim()));
        assert!(verify_relations(&m, &q.reversed()).passed());
    }
}
