//! The weight graph of α1 + 2α2 + α3 in type A3 and its components.

use fullcomm::weight_graph::DEFAULT_HEIGHT_CAP;
use fullcomm::{
    build_graph, components, homogeneous_components, Content, DynkinGraph, HomogeneityCheck,
};

fn main() -> fullcomm::Result<()> {
    let g = DynkinGraph::type_a(3)?;
    let alpha = Content::new(vec![1, 2, 1]);
    let wg = build_graph(&alpha, &g, DEFAULT_HEIGHT_CAP)?;
    println!(
        "G_α for α = {alpha} on {g}: {} words, {} edges",
        wg.vertex_count(),
        wg.edge_count()
    );
    for (a, b) in wg.edge_words() {
        println!("  {a} -- {b}");
    }
    for c in components(&wg) {
        let words: Vec<String> = c.words.iter().map(|w| w.to_string()).collect();
        println!("component {{{}}}", words.join(", "));
    }
    for c in homogeneous_components(&wg, &g, HomogeneityCheck::Paranoid) {
        println!("homogeneous: {:?}", c.words);
    }
    Ok(())
}
