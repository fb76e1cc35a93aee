//! Split reduced words of D_n into prefix segments and alternating suffix,
//! then rebuild them.
//!
//!     cargo run --example canonical_forms -- 5

use fullcomm::canonical::CanonicalForm;
use fullcomm::{enumerate_canonical, homogeneous_canonical, realize, split, DynkinGraph, Word};

fn main() -> fullcomm::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let g = DynkinGraph::type_d(n)?;

    for text in [
        "[2,1,5,3,2,4]",
        "[4,3,2,1,5,3,2]",
        "[1,2,3,4,5,3,4]",
        "[2,1,3,4,2]",
    ] {
        let w: Word = text.parse()?;
        match split(&w, n) {
            Ok(cf) => {
                println!(
                    "{w}: prefix {:?} -> {}, suffix {:?} -> {}",
                    cf.prefix_indices(),
                    cf.prefix_word(),
                    cf.suffix_params(),
                    cf.suffix_word()
                );
                assert_eq!(realize(&cf), w);
            }
            Err(e) => println!("{w}: not canonical in {g} ({e})"),
        }
    }

    let id = CanonicalForm::identity(n)?;
    println!("identity realizes to {}", id.realize());

    let all = enumerate_canonical(n)?.count();
    let fc = homogeneous_canonical(n)?;
    println!("{g}: {all} canonical words, {} homogeneous", fc.len());
    for f in fc.iter().take(5) {
        println!("  {}", f.word);
    }
    Ok(())
}
