use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use k3verify::{bundled, emit, parse_scenarios, run_all, Format, RunOptions, Scenario};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Run k3kit verification scenarios.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Cli {
    /// Run every bundled scenario.
    #[arg(long)]
    all: bool,
    /// Scenario file to run; may be repeated.
    #[arg(long = "scenario", value_name = "PATH")]
    scenarios: Vec<PathBuf>,
    /// Keep only scenarios whose name matches this glob.
    #[arg(long, value_name = "GLOB")]
    filter: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trial count for randomized scenarios, overriding the files.
    #[arg(long)]
    trials: Option<usize>,
}

fn select(cli: &Cli) -> Result<Vec<Scenario>, String> {
    let mut list = Vec::new();
    if cli.all {
        list.extend(bundled());
    }
    for path in &cli.scenarios {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        list.extend(parse_scenarios(&text).map_err(|e| format!("{}: {e}", path.display()))?);
    }
    if !cli.all && cli.scenarios.is_empty() {
        return Err("nothing to run: pass --all or --scenario PATH".into());
    }
    let mut seen = BTreeSet::new();
    for s in &list {
        if !seen.insert(s.name.as_str()) {
            return Err(format!("duplicate scenario name {:?}", s.name));
        }
    }
    if let Some(f) = &cli.filter {
        let pat = glob::Pattern::new(f).map_err(|e| format!("bad filter {f:?}: {e}"))?;
        list.retain(|s| pat.matches(&s.name));
        if list.is_empty() {
            return Err(format!("no scenario matches {f:?}"));
        }
    }
    Ok(list)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let list = match select(&cli) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("verify: {e}");
            return ExitCode::from(2);
        }
    };
    let opts = RunOptions { seed: cli.seed, trials: cli.trials };
    let report = run_all(&list, &opts);
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    print!("{}", emit(&report, format));
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
