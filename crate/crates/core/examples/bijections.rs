//! The maps between collections for n = 5, k = 2.

use fullcomm::packets::verify::verify_bijections;
use fullcomm::packets::{phi, rho_tagged, sigma, tau};
use fullcomm::Word;

fn main() -> fullcomm::Result<()> {
    for text in ["[2,1,4,5,3,2]", "[3,2,1,5,3,2]"] {
        let w: Word = text.parse()?;
        let s = sigma(&w, 5, 2)?;
        println!("sigma({w}) = {s}, tau back = {}", tau(&s, 5, 2)?);
    }
    for text in ["[4,3,2,1,5,3,2,4]", "[3,2,1,4,2]"] {
        let w: Word = text.parse()?;
        let image = phi(&w, 5, 2)?;
        println!(
            "phi({w}) = {image}, rho back = {:?}",
            rho_tagged(&image, 5, 2)?
        );
    }
    for rep in verify_bijections(6)? {
        println!(
            "{} n={} k={}: {} -> {}, {}",
            rep.name,
            rep.n,
            rep.k,
            rep.domain_size,
            rep.codomain_size,
            if rep.passed() { "bijective" } else { "FAILED" }
        );
    }
    Ok(())
}
