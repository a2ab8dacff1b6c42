//! Runs a worked example and writes its JSON report and figure, as the
//! `tropcover run` command does.
//!
//! Usage: `cargo run --example scenario_report -- [scenario] [out-dir]`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use tropcover::scenarios::{run_scenario, scenario_figure, scenario_names};

fn main() -> tropcover::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "line".into());
    let out = PathBuf::from(args.next().unwrap_or_else(|| std::env::temp_dir().display().to_string()));
    println!("scenarios: {}", scenario_names().join(", "));

    let report = run_scenario(&name, &BTreeMap::new(), 7)?;
    for c in &report.checks {
        println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
    }
    let json = out.join(format!("{name}.json"));
    std::fs::write(&json, report.to_json())?;
    println!("report: {}", json.display());
    if let Ok(svg) = scenario_figure(&name) {
        let path = out.join(format!("{name}.svg"));
        std::fs::write(&path, svg)?;
        println!("figure: {}", path.display());
    }
    Ok(())
}
