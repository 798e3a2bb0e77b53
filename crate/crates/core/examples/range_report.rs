// A parallel range sweep and its three report formats.
//
// `cargo run --example range_report`

use std::error::Error;
use std::io::stdout;

use phi_systems::sweep::{emit_report, run_sweep, Format, SweepConfig, SweepOptions, Task};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let options = SweepOptions {
        config: SweepConfig { verify_against_oracle: true, ..SweepConfig::default() },
        threads: 4,
        ..SweepOptions::default()
    };
    let report = run_sweep(Task::Binary, 2, 12, &options)?;
    for format in [Format::Table, Format::Csv, Format::Json] {
        emit_report(&report, format, stdout().lock())?;
        println!();
    }

    // first-witness mode keeps large sweeps cheap
    let options = SweepOptions {
        config: SweepConfig { first_witness_only: true, ..SweepConfig::default() },
        per_n: false,
        ..SweepOptions::default()
    };
    for task in [Task::Bertrand, Task::Binary, Task::Ternary, Task::Peculiar, Task::Proposition] {
        let r = run_sweep(task, 2, 100_000, &options)?;
        println!("{task:<12} checked {:>6}, failures {:?}", r.checked, r.failures);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
