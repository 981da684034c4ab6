//! Scalar features of a few triples under every definedness profile.
//!
//!     cargo run --example scores

use neutrosophic::prelude::*;

fn main() -> Result<()> {
    let triples = [
        ("crisp true", (1.0, 0.0, 0.0)),
        ("balanced", (0.5, 0.2, 0.5)),
        ("leaning true", (0.6, 0.5, 0.4)),
        ("everything", (1.0, 1.0, 1.0)),
        ("nothing", (0.0, 0.0, 0.0)),
    ];

    println!(
        "{:<14} {:>8} {:>8} {:>8} {:>8}",
        "triple", "tau", "lambda", "E_C", "E_R"
    );
    for (name, (t, i, f)) in triples {
        let r = ScalarReport::of(
            NeutrosophicTriple::new(t, i, f)?,
            DefinednessProfile::Rational,
        );
        println!(
            "{name:<14} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            r.tau, r.lambda, r.entropy_c, r.entropy_r
        );
    }

    // Only omega (and therefore eta) depends on the profile.
    let q = NeutrosophicTriple::new(0.6, 0.5, 0.4)?;
    println!("\nprofiles at {q:?}");
    for p in DefinednessProfile::ALL {
        let r = ScalarReport::of(q, p);
        println!(
            "  {:<10} omega = {:>8.5}  eta = {:>8.5}",
            p.name(),
            r.omega,
            r.eta
        );
    }

    // Swapping truth and falsity flips the score and keeps the entropies.
    let m = swap_tf(q);
    println!(
        "\nswap_tf: eta {:.4} -> {:.4}, E_C {:.4} -> {:.4}",
        score(q, DefinednessProfile::Rational),
        score(m, DefinednessProfile::Rational),
        entropy_czekanowski(q),
        entropy_czekanowski(m),
    );
    println!(
        "compare(q, swap_tf(q)) = {:?}",
        compare(q, m, DefinednessProfile::Rational)
    );
    Ok(())
}
