//! The Frank t-norm family and its dual conorms.
//!
//!     cargo run --example tnorms

use neutrosophic::norms::TNormFamily;

fn main() -> neutrosophic::Result<()> {
    let (x, y) = (0.5, 0.7);
    println!("x = {x}, y = {y}");
    println!(
        "{:<16} {:>10} {:>10} {:>12}",
        "family", "tnorm", "tconorm", "sum - (x+y)"
    );
    for fam in TNormFamily::standard_members() {
        let (t, s) = (fam.tnorm(x, y), fam.tconorm(x, y));
        println!(
            "{:<16} {t:>10.6} {s:>10.6} {:>12.1e}",
            fam.to_string(),
            t + s - (x + y)
        );
    }

    // Small s approaches min, large s approaches the Lukasiewicz norm, slowly:
    // the gap shrinks like 1/|ln s|.
    println!("\ndistance of Frank(s) from its limits at (0.5, 0.5)");
    let godel = TNormFamily::Godel.tnorm(0.5, 0.5);
    let luk = TNormFamily::Lukasiewicz.tnorm(0.5, 0.5);
    for e in [2, 6, 20, 100, 300] {
        let small = TNormFamily::frank(10f64.powi(-e))?.tnorm(0.5, 0.5);
        let large = TNormFamily::frank(10f64.powi(e))?.tnorm(0.5, 0.5);
        println!(
            "  s = 1e-{e:<3}  |T - min| = {:.3e}    s = 1e{e:<3}  |T - luk| = {:.3e}",
            (small - godel).abs(),
            (large - luk).abs()
        );
    }

    let fam: TNormFamily = "frank:2".parse()?;
    println!("\nparsed {fam}: T(0.5, 0.5) = {:.12}", fam.tnorm(0.5, 0.5));
    Ok(())
}
