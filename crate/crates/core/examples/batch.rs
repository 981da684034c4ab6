//! Feature report and ranking for an in-memory CSV batch; this is what the
//! `neutro analyze` and `neutro rank` subcommands print.
//!
//!     cargo run --example batch

use neutrosophic::batch::{parse_input, InputFormat, Source};
use neutrosophic::prelude::*;
use neutrosophic::report::{run_analyze, run_logic, run_rank, LogicOp, Scheme};

const CSV: &str = "\
id,T,I,F
supplier-a,0.6,0.5,0.4
supplier-b,0.7,0.1,0.2
supplier-c,0.5,0.9,0.5
supplier-d,0.2,0.3,0.8
";

fn main() -> Result<()> {
    let batch = parse_input(CSV.as_bytes(), InputFormat::Csv, Source::Stdin)?;

    let ranking = run_rank(&batch, DefinednessProfile::Rational);
    for e in &ranking.ranking {
        println!(
            "{}. {:<12} eta = {:+.4}",
            e.rank,
            e.id.as_deref().unwrap_or("-"),
            e.eta
        );
    }

    let report = run_analyze(&batch, DefinednessProfile::Rational, TNormFamily::Product);
    let first = &report.records[0];
    println!(
        "\n{} indeterminacy: {:?}",
        first.id.as_deref().unwrap_or("-"),
        first.indeterminacy
    );
    println!(
        "\nfull report is {} bytes of JSON; first lines:",
        report.to_json().len()
    );
    for line in report.to_json().lines().take(8) {
        println!("  {line}");
    }

    let out = run_logic(
        LogicOp::Union,
        Scheme::PentaSat,
        TNormFamily::Godel,
        DefinednessProfile::Rational,
        batch.records[0].triple,
        Some(batch.records[1].triple),
    )?;
    println!(
        "\nunion of the first two in penta-sat: {:?} (sum {})",
        out.result, out.result_sum
    );

    let bad = parse_input(
        "id,T,I,F\nx,0.2,1.4,0\n".as_bytes(),
        InputFormat::Csv,
        Source::Stdin,
    );
    println!("rejected row: {}", bad.unwrap_err());
    Ok(())
}
