//! Five-valued reading with saturation: mass that truth, indeterminacy and
//! falsity all share is pulled out into its own component.
//!
//!     cargo run --example saturation

use neutrosophic::penta_sat::decompose5s_via_beta;
use neutrosophic::prelude::*;

fn main() -> Result<()> {
    for (t, i, f) in [
        (0.6, 0.5, 0.4),
        (0.9, 0.8, 0.85),
        (1.0, 1.0, 1.0),
        (0.8, 0.9, 0.0),
    ] {
        let q = NeutrosophicTriple::new(t, i, f)?;
        let (v4, v5) = (decompose4(q), decompose5s(q));
        println!("{q:?}");
        println!("  tetra      {v4:?}");
        println!(
            "  penta-sat  {v5:?}  indeterminacy {:.4}",
            indeterminacy5s(&v5)
        );
        println!("  beta route {:?}", decompose5s_via_beta(q));
    }

    let a = decompose5s(NeutrosophicTriple::new(0.9, 0.8, 0.85)?);
    let b = decompose5s(NeutrosophicTriple::new(0.2, 0.1, 0.7)?);
    let fam = TNormFamily::frank(2.0)?;
    let u = union5s(&a, &b, fam);
    println!("\n{fam}: a or b = {u:?} (sum {})", u.component_sum());
    println!("{fam}: a and b = {:?}", intersect5s(&a, &b, fam));
    Ok(())
}
