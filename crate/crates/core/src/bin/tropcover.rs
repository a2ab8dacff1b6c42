use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropcover::constructions::{combine_reparams, puiseux_roots, upoly_coefficients};
use tropcover::laurent::{compose_maps, parse_map, parse_poly_file};
use tropcover::polyhedra::covers;
use tropcover::scenarios::io::{map_to_text, read_complex, read_trop_poly, HypersurfaceJson, MapImageJson};
use tropcover::scenarios::{run_scenario_with, scenario_figure, RunOptions, SCENARIOS};
use tropcover::tropical::{linearity_complex, pl_image, trop_hypersurface, tropicalize_map};
use tropcover::Error;

/// Exact tropical images of rational maps and tropical surjectivity checks.
///
/// Arguments naming a map or polynomial accept a file path or the text
/// itself.
#[derive(Parser)]
#[command(name = "tropcover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a worked example and report every check.
    Run {
        scenario: String,
        /// Scenario parameter, `key=value`; repeatable.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the scenario's figure here.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// List scenarios and their parameters.
    List,
    /// The tropical hypersurface of a polynomial, as JSON.
    TropHypersurface {
        #[arg(short = 'f', long = "file")]
        file: String,
    },
    /// Linearity cells and tropical image of a rational map, as JSON.
    MapImage {
        #[arg(short = 'm', long = "map")]
        map: String,
    },
    /// Whether the cover complex contains the target complex.
    Covers {
        #[arg(short = 't', long = "target")]
        target: PathBuf,
        #[arg(short = 'c', long = "cover")]
        cover: PathBuf,
        /// Exit with status 1 unless the verdict is this.
        #[arg(long)]
        expect: Option<bool>,
    },
    /// Combine two reparameterisations of a map and check that the result
    /// contains both tropical images.
    Combine {
        #[arg(short = 'm', long = "map")]
        map: String,
        #[arg(short = 'a')]
        alpha1: String,
        #[arg(short = 'b')]
        alpha2: String,
    },
    /// Puiseux expansions of the roots of a polynomial in one variable.
    Roots {
        #[arg(short = 'p', long = "poly")]
        poly: String,
        #[arg(short = 'k', default_value_t = 3)]
        terms: usize,
    },
}

/// Outcome of a command that ran to completion.
enum Verdict {
    Ok,
    Mismatch,
}

fn source(arg: &str) -> Result<String, Error> {
    let p = Path::new(arg);
    if p.is_file() {
        Ok(std::fs::read_to_string(p)?)
    } else {
        Ok(arg.replace("\\n", "\n"))
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), Error> {
    if path == Path::new("-") {
        print!("{text}");
        Ok(())
    } else {
        Ok(std::fs::write(path, text)?)
    }
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, String>, Error> {
    raw.iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::InvalidInput(format!("expected key=value, got `{kv}`")))
        })
        .collect()
}

fn execute(cmd: Command) -> Result<Verdict, Error> {
    match cmd {
        Command::Run { scenario, params, seed, json, svg, timings } => {
            let params = parse_params(&params)?;
            let report = run_scenario_with(&scenario, &params, RunOptions { seed, timings })?;
            if json.as_deref() != Some(Path::new("-")) {
                for c in &report.checks {
                    println!(
                        "{} {}{}",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.name,
                        if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) }
                    );
                }
                for d in &report.discrepancies {
                    println!("NOTE {}: printed `{}`, computed `{}`", d.id, d.printed, d.computed);
                }
                let failures = report.containment_failures();
                let points: usize = report.containment.iter().map(|c| c.points).sum();
                println!("containment: {failures} failures in {points} sampled points");
                println!("{}: {}", scenario, if report.passed { "passed" } else { "FAILED" });
            }
            if let Some(path) = json {
                write_out(&path, &report.to_json())?;
            }
            if let Some(path) = svg {
                write_out(&path, &scenario_figure(&scenario)?)?;
            }
            Ok(if report.passed { Verdict::Ok } else { Verdict::Mismatch })
        }
        Command::List => {
            for (name, params) in SCENARIOS {
                let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!("{name:16} {}", ps.join(" "));
            }
            Ok(Verdict::Ok)
        }
        Command::TropHypersurface { file } => {
            let (p, vars) = read_trop_poly(&source(&file)?)?;
            let x = trop_hypersurface(&p);
            println!("{}", serde_json::to_string_pretty(&HypersurfaceJson::new(&p, vars, &x))?);
            Ok(Verdict::Ok)
        }
        Command::MapImage { map } => {
            let m = parse_map(&source(&map)?)?;
            let pl = linearity_complex(&tropicalize_map(&m)?)?;
            let im = pl_image(&pl);
            println!("{}", serde_json::to_string_pretty(&MapImageJson::new(&m, &pl, im))?);
            Ok(Verdict::Ok)
        }
        Command::Covers { target, cover, expect } => {
            let t = read_complex(&std::fs::read_to_string(target)?)?;
            let c = read_complex(&std::fs::read_to_string(cover)?)?;
            let r = covers(&t, &c)?;
            println!("{}", serde_json::to_string_pretty(&r)?);
            Ok(match expect {
                Some(e) if e != r.covered => Verdict::Mismatch,
                _ => Verdict::Ok,
            })
        }
        Command::Combine { map, alpha1, alpha2 } => {
            let phi = parse_map(&source(&map)?)?;
            let a1 = parse_map(&source(&alpha1)?)?;
            let a2 = parse_map(&source(&alpha2)?)?;
            let (alpha, deg) = combine_reparams(&phi, &a1, &a2)?;
            print!("{}", map_to_text(&alpha));
            let image =
                |a: &tropcover::laurent::RationalMap| -> Result<_, Error> { Ok(pl_image(&linearity_complex(&tropicalize_map(&compose_maps(&phi, a)?)?)?)) };
            let big = image(&alpha)?;
            let mut ok = true;
            for (k, a) in [&a1, &a2].into_iter().enumerate() {
                let r = covers(&image(a)?, &big)?;
                eprintln!("im Trop(phi . alpha{}) inside im Trop(phi . alpha): {} (d = {}, e = {})", k + 1, r.covered, deg.d, deg.e);
                ok &= r.covered;
            }
            Ok(if ok { Verdict::Ok } else { Verdict::Mismatch })
        }
        Command::Roots { poly, terms } => {
            let (p, _) = parse_poly_file(&source(&poly)?)?;
            for r in puiseux_roots(&upoly_coefficients(&p)?, terms)? {
                println!("{}{}", r.series, if r.exact { "  (exact)" } else { "" });
            }
            Ok(Verdict::Ok)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
