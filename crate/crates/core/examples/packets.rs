//! Packet decomposition of D_n with collection sizes against Catalan's triangle.
//!
//!     cargo run --example packets -- 6

use fullcomm::packets::{packet_size_formula, CatalanTriangle, Decomposition};

fn main() -> fullcomm::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let dec = Decomposition::new(n)?;
    let t = CatalanTriangle::new(n);
    for p in &dec.packets {
        println!(
            "P({n},{}): {} collections (formula {}), each of size {:?}, C({n},{}) = {}",
            p.k,
            p.size(),
            packet_size_formula(n, p.k),
            p.collection_size(),
            p.k,
            t.get(n, p.k).unwrap()
        );
        if n <= 4 {
            for c in &p.collections {
                println!("  c_{}: {:?}", c.suffix.word(), c.words);
            }
        }
    }
    println!("{} fully commutative elements", dec.word_count());
    Ok(())
}
