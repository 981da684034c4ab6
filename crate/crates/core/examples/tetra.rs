//! Four-valued reading: true, neutral, unknown, false.
//!
//!     cargo run --example tetra

use neutrosophic::prelude::*;

fn main() -> Result<()> {
    let q = NeutrosophicTriple::new(0.6, 0.5, 0.4)?;
    let v = decompose4(q);
    println!("{q:?} -> {v:?}");
    println!(
        "  sum = {}, indeterminacy = {:.6}",
        v.component_sum(),
        indeterminacy4(&v)
    );

    let prototypes = [
        ("T", TetraVector::TRUE),
        ("N", TetraVector::NEUTRAL),
        ("W", TetraVector::UNKNOWN),
        ("F", TetraVector::FALSE),
    ];
    for fam in [TNormFamily::Godel, TNormFamily::Lukasiewicz] {
        println!("\nunion table, {fam}");
        print!("     ");
        for (b, _) in prototypes {
            print!("{b:>3}");
        }
        println!();
        for (a, x) in prototypes {
            print!("  {a:>2} ");
            for (_, y) in prototypes {
                let r = union4(&x, &y, fam);
                let name = prototypes
                    .iter()
                    .find(|(_, p)| *p == r)
                    .map_or("?", |(n, _)| n);
                print!("{name:>3}");
            }
            println!();
        }
    }

    let a = decompose4(NeutrosophicTriple::new(0.7, 0.2, 0.1)?);
    let b = decompose4(NeutrosophicTriple::new(0.3, 0.4, 0.6)?);
    let fam = TNormFamily::Product;
    println!("\na = {a:?}\nb = {b:?}");
    println!("a or b  = {:?}", union4(&a, &b, fam));
    println!("a and b = {:?}", intersect4(&a, &b, fam));
    println!("not a   = {:?}", negate4(&a));
    Ok(())
}
