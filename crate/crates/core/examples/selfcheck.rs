//! Seeded invariant check over every module; `neutro selfcheck` runs the same.
//!
//!     cargo run --release --example selfcheck -- [samples] [seed]

use neutrosophic::selfcheck::run_selfcheck;

fn main() -> neutrosophic::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(2_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);

    let summary = run_selfcheck(samples, seed, 1e-9)?;
    print!("{}", summary.render());
    std::process::exit(summary.exit_code());
}
