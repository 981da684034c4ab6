//! Five-valued reading by definedness: triples whose components add up to
//! more than one carry over-definedness, those adding up to less carry
//! under-definedness.
//!
//!     cargo run --example definedness

use neutrosophic::prelude::*;

fn main() -> Result<()> {
    let triples = [
        (0.6, 0.5, 0.4),
        (0.1, 0.1, 0.1),
        (0.8, 0.9, 0.0),
        (1.0, 0.0, 0.0),
        (1.0, 1.0, 1.0),
    ];
    for p in [DefinednessProfile::Rational, DefinednessProfile::Sine] {
        println!("profile {p}");
        for (t, i, f) in triples {
            let q = NeutrosophicTriple::new(t, i, f)?;
            let v = decompose5d(q, p);
            println!(
                "  ({t}, {i}, {f}) -> t {:.4} n {:.4} f {:.4} o {:.4} u {:.4}  indeterminacy {:.4}",
                v.t,
                v.n,
                v.f,
                v.o,
                v.u,
                indeterminacy5d(&v)
            );
        }
    }

    // (0.8, 0.9, 0) is over-defined but has no saturation.
    let q = NeutrosophicTriple::new(0.8, 0.9, 0.0)?;
    println!(
        "\n(0.8, 0.9, 0): saturation {} vs over-definedness {:.4}",
        decompose5s(q).s,
        decompose5d(q, DefinednessProfile::Rational).o
    );

    let a = decompose5d(
        NeutrosophicTriple::new(0.9, 0.7, 0.6)?,
        DefinednessProfile::Rational,
    );
    let b = decompose5d(
        NeutrosophicTriple::new(0.1, 0.2, 0.3)?,
        DefinednessProfile::Rational,
    );
    println!("a or b  = {:?}", union5d(&a, &b, TNormFamily::Product));
    println!("a and b = {:?}", intersect5d(&a, &b, TNormFamily::Product));
    println!("not a   = {:?}", negate5d(&a));
    Ok(())
}
