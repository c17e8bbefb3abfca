// Running the exhaustive checks and reading their reports.
//
// ```bash
// cargo run --release -p matchstat --example verify_identities
// ```

use std::error::Error;

use matchstat::verify::{run_check, CheckId, CheckParams, Status};
use matchstat::{check_theorem1, Limits, Matching, Preset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let limits = Limits::default();
    let small = CheckParams { n: Some(4), depth: Some(2) };
    for id in [CheckId::Desainte, CheckId::Symmetric, CheckId::CrMneN, CheckId::RiordanParity] {
        let report = run_check(id, small, &limits)?;
        println!("[{}] {} {}", report.status, report.id, report.params);
        assert_eq!(report.status, Status::Pass);
    }

    let figures = run_check(CheckId::Figures, CheckParams::default(), &limits)?;
    println!("[{}] figures: {}", figures.status, figures.details["warning"]);

    let m: Matching = "1-2,3-5,4-6".parse()?;
    let n: Matching = "1-3,2-4,5-6".parse()?;
    let report = check_theorem1(&m, &n, &Preset::Cr.spec(), false, 3, &limits)?;
    println!("{}", report.without_timing().to_json());
    assert_eq!(report.status, Status::Pass);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
