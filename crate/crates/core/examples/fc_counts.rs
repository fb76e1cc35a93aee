//! Number of fully commutative elements of D_n, enumerated and by formula.

use std::time::Instant;

use fullcomm::canonical::fc_count_formula_d;
use fullcomm::homogeneous_canonical;

fn main() -> fullcomm::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    println!(
        "{:>3} {:>10} {:>10} {:>10}",
        "n", "enumerated", "formula", "time"
    );
    for n in 4..=max {
        let start = Instant::now();
        let found = homogeneous_canonical(n)?.len();
        let t = start.elapsed();
        println!(
            "{n:>3} {found:>10} {:>10} {t:>10.2?}",
            fc_count_formula_d(n)
        );
    }
    Ok(())
}
