//! Fuzzy, intuitionistic and bifuzzy decompositions, and how the
//! neutrosophic ones reduce to them.
//!
//!     cargo run --example bifuzzy

use neutrosophic::prelude::*;

fn main() -> Result<()> {
    println!("fuzzy3(0.75) = {:?}", fuzzy3(UnitDegree::new(0.75)?));
    println!("ifs4(0.5, 0.3) = {:?}", ifs4(BifuzzyPair::new(0.5, 0.3)?)?);
    if let Err(e) = ifs4(BifuzzyPair::new(0.7, 0.5)?) {
        println!("ifs4(0.7, 0.5): {e}");
    }

    let p = BifuzzyPair::new(0.7, 0.5)?;
    println!("\n(mu, nu) = (0.7, 0.5)");
    println!("  bifuzzy3     {:?}", bifuzzy3(p));
    println!("  bifuzzy4_def {:?}", bifuzzy4_def(p));
    println!("  bifuzzy4_ign {:?}", bifuzzy4_ign(p));
    println!("  bifuzzy5     {:?}", bifuzzy5(p));

    // With no indeterminacy the tetra reading is the three-valued bifuzzy one.
    let v = decompose4(NeutrosophicTriple::new(p.mu(), 0.0, p.nu())?);
    println!("\ndecompose4(0.7, 0, 0.5) = {v:?}");

    // On the fuzzy line the entropies become the classical fuzzy ones.
    println!("\n{:>5} {:>10} {:>10}", "mu", "E_C", "E_R");
    for mu in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let q = NeutrosophicTriple::new(mu, 0.0, 1.0 - mu)?;
        println!(
            "{mu:>5} {:>10.6} {:>10.6}",
            entropy_czekanowski(q),
            entropy_ruzicka(q)
        );
    }
    Ok(())
}
