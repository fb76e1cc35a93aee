use fullcomm::packets::catalan::{catalan, CatalanTriangle, Method};

fn main() -> fullcomm::Result<()> {
    let rows: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let t = CatalanTriangle::new(rows - 1);
    for n in 0..rows {
        let row: Vec<String> = t.row(n).iter().map(|v| v.to_string()).collect();
        println!("{}", row.join(" "));
    }
    let big = catalan(100, 57, Method::Closed)?;
    assert_eq!(big, catalan(100, 57, Method::Recursive)?);
    println!("C(100,57) = {big}");
    Ok(())
}
