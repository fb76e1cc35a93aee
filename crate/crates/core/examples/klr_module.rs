//! The homogeneous module attached to the component {[2,1,3,2], [2,3,1,2]}
//! of type A3: generator matrices, relation report and q-character.

use fullcomm::klr::{
    act_e, act_psi, build_module, q_character, verify_grading, verify_relations, OrientedQuiver,
};
use fullcomm::{commutation_class, Component, DynkinGraph, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = DynkinGraph::type_a(3)?;
    let q = OrientedQuiver::default_for(&g);
    let w: Word = "[2,1,3,2]".parse()?;
    let c = Component::from_words(commutation_class(&w, &g)?, &g);
    let m = build_module(&c, &q)?;
    println!("basis {:?}, dimension {}", m.basis(), m.dim());

    println!("e({w}) = {:?}", act_e(&m, &w)?);
    for r in 1..m.height() {
        println!("psi_{r} = {:?}", act_psi(&m, r)?);
    }

    for q in [q.clone(), q.reversed()] {
        let rep = verify_relations(&m, &q);
        println!(
            "arrows {:?}: {} instances, passed = {}",
            rep.arrows,
            rep.checked(),
            rep.passed()
        );
        for r in &rep.relations {
            println!("  {:<16} {}/{}", r.relation.name(), r.passed, r.checked);
        }
    }
    println!("grading passed = {}", verify_grading(&m, &q).passed());
    println!("ch_q = {}", q_character(&m));

    println!("psi_2 as triplets:");
    act_psi(&m, 2)?.write_triplet_csv(std::io::stdout())?;
    Ok(())
}
