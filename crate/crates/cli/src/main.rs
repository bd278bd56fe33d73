//! `ringlab` — build finite rings, report on them, check properties and run the
//! theorem suite.
//!
//! Exit codes: 0 success / property holds / nothing found, 1 property fails or a
//! counterexample or violated claim was found, 2 usage or I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ringlab::elements::{element_property, ring_property, spectral_candidates, PropertyName, SpectralFlavor};
use ringlab::verify::{
    analyze_entries, analyze_rings, default_catalog, render_table, search_counterexample, suite_passes,
    theorem_suite, AnalyzedRing, SuiteOptions, DEFAULT_PRODUCT_ORDER_LIMIT,
};
use ringlab::{build_from_input, Analysis, Error, FiniteRing, Limits, RingReport};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "Finite rings, δ(R) and quasipolar-type properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a ring from a preset (e.g. `tri:2:zmod:2`) or a JSON description file and write its ring file.
    Build {
        input: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the full report for a ring file.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide a property for the whole ring, or for one element.
    Check {
        file: PathBuf,
        property: String,
        element: Option<usize>,
    },
    /// Print all five δ(R) computations.
    Delta {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the theorem suite over a catalog.
    VerifyPaper {
        /// `default`, a directory of ring files, or a JSON file with one ring or an array of rings.
        #[arg(long, default_value = "default")]
        catalog: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest product ring built by the product-closure check.
        #[arg(long, default_value_t = DEFAULT_PRODUCT_ORDER_LIMIT)]
        product_limit: usize,
    },
    /// Find the first catalog ring satisfying every hypothesis but not the conclusion.
    Search {
        #[arg(long = "hyp", value_delimiter = ',', required = true)]
        hypotheses: Vec<String>,
        #[arg(long = "concl")]
        conclusion: String,
        #[arg(long, default_value = "default")]
        catalog: String,
    },
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// exit 1
    Negative,
    /// exit 2
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn load(path: &Path) -> Result<FiniteRing, Failure> {
    FiniteRing::load(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn property(name: &str) -> Result<PropertyName, Failure> {
    name.parse().map_err(|e: Error| {
        let known: Vec<&str> = PropertyName::ALL.iter().map(|p| p.as_str()).collect();
        Failure::Usage(format!("{e}; known properties: {}", known.join(", ")))
    })
}

fn flavor_of(p: PropertyName) -> Option<SpectralFlavor> {
    [
        SpectralFlavor::Quasipolar,
        SpectralFlavor::Nil,
        SpectralFlavor::Jacobson,
        SpectralFlavor::Delta,
        SpectralFlavor::WeaklyDelta,
    ]
    .into_iter()
    .find(|f| f.property() == p)
}

fn load_catalog(source: &str, limits: &Limits) -> Result<Vec<AnalyzedRing>, Failure> {
    if source == "default" {
        return Ok(analyze_entries(&default_catalog(), limits)?);
    }
    let path = Path::new(source);
    let mut rings = Vec::new();
    if path.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| Failure::Usage(format!("{source}: {e}")))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        for file in files {
            rings.push(load(&file)?);
        }
    } else {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
        let items = match value {
            serde_json::Value::Array(items) => items,
            single => vec![single],
        };
        for item in items {
            let file: ringlab::ring::RingFile =
                serde_json::from_value(item).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
            rings.push(file.into_ring().map_err(|e| Failure::Usage(format!("{source}: {e}")))?);
        }
    }
    if rings.is_empty() {
        return Err(Failure::Usage(format!("{source}: catalog is empty")));
    }
    Ok(analyze_rings(rings, limits)?)
}

fn cmd_build(input: &str, output: &Path, limits: &Limits) -> Outcome {
    let ring = build_from_input(input, limits)?;
    ring.save(output).map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
    println!("{} (order {})", ring.name(), ring.order());
    Ok(())
}

fn cmd_report(file: &Path, format: Format, limits: &Limits) -> Outcome {
    let an = Analysis::new(load(file)?, limits)?;
    let report = RingReport::new(&an)?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(())
}

fn cmd_check(file: &Path, name: &str, element: Option<usize>, limits: &Limits) -> Outcome {
    let p = property(name)?;
    let ring = load(file)?;
    if let Some(a) = element {
        if !p.is_element_level() {
            return Err(Failure::Usage(format!("`{p}` is a ring-level property; drop the element argument")));
        }
        ring.check_element(a)?;
    }
    let an = Analysis::new(ring, limits)?;
    match element {
        Some(a) => match element_property(&an, a, p)? {
            Some(cert) => {
                println!("{}", cert.to_json());
                Ok(())
            }
            None => {
                let mut refutation = json!({ "property": p, "element": a, "holds": false });
                if let Some(flavor) = flavor_of(p) {
                    refutation["spectral_candidates"] = json!(spectral_candidates(&an, a, flavor));
                }
                print_json(&refutation);
                Err(Failure::Negative)
            }
        },
        None => {
            let verdict = ring_property(&an, p)?;
            let mut out = serde_json::to_value(&verdict).expect("verdict serializes");
            if let (Some(a), Some(flavor)) = (verdict.failing_element, flavor_of(p)) {
                out["spectral_candidates"] = json!(spectral_candidates(&an, a, flavor));
            }
            print_json(&out);
            if verdict.holds {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
    }
}

fn cmd_delta(file: &Path, format: Format, limits: &Limits) -> Outcome {
    let an = Analysis::new(load(file)?, limits)?;
    let d = &an.delta;
    match format {
        Format::Json => print_json(&serde_json::to_value(d).expect("delta serializes")),
        Format::Text => {
            for (i, mask) in d.masks().iter().enumerate() {
                println!("R{} {:?}", i + 1, mask);
            }
            println!("delta {:?} ({})", d.consensus, if d.agree { "all routes agree" } else { "routes disagree" });
        }
    }
    Ok(())
}

fn cmd_verify(catalog: &str, format: Format, product_limit: usize, limits: &Limits) -> Outcome {
    let rings = load_catalog(catalog, limits)?;
    let options = SuiteOptions { product_order_limit: product_limit, limits: *limits };
    let results = theorem_suite(&rings, &options)?;
    match format {
        Format::Json => print_json(&serde_json::to_value(&results).expect("results serialize")),
        Format::Text => print!("{}", render_table(&results)),
    }
    if suite_passes(&results) {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn cmd_search(hypotheses: &[String], conclusion: &str, catalog: &str, limits: &Limits) -> Outcome {
    let hyps = hypotheses.iter().map(|h| property(h)).collect::<Result<Vec<_>, _>>()?;
    let concl = property(conclusion)?;
    let rings = load_catalog(catalog, limits)?;
    match search_counterexample(&hyps, concl, &rings) {
        Some(found) => {
            print_json(&serde_json::to_value(&found).expect("counterexample serializes"));
            Err(Failure::Negative)
        }
        None => {
            print_json(&json!({ "hypotheses": hyps, "conclusion": concl, "counterexample": null }));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let outcome = match &cli.command {
        Command::Build { input, output } => cmd_build(input, output, &limits),
        Command::Report { file, format } => cmd_report(file, *format, &limits),
        Command::Check { file, property, element } => cmd_check(file, property, *element, &limits),
        Command::Delta { file, format } => cmd_delta(file, *format, &limits),
        Command::VerifyPaper { catalog, format, product_limit } => cmd_verify(catalog, *format, *product_limit, &limits),
        Command::Search { hypotheses, conclusion, catalog } => cmd_search(hypotheses, conclusion, catalog, &limits),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
