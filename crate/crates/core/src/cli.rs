//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification/tolerance check failed,
//! 2 bad usage or unparsable input, 3 a resource cap was exceeded.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::forest::{enumerate_forests, Forest};
use crate::harmonic::{diamond, harub, star};
use crate::hopf::{antipode, coproduct, ForestSum};
use crate::mzv::{
    relation_from_rtm, verify_relation_numeric, word_index, zeta_numeric, Index, DEFAULT_TERMS,
    DEFAULT_TOL,
};
use crate::rational::render_q;
use crate::rtm::{f_poly, g_poly, rtm_apply, span_rank};
use crate::verify::{verify_all, verify_identity, Bounds, IdentityName, VerificationReport};
use crate::word::{parse_word, WordSum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Runtime configuration, sourced from defaults, an optional flat
/// `key=value` file, and `RTMAPS_*` environment variables (in that order).
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub max_degree: usize,
    pub format: Format,
    pub terms: usize,
    pub tol: f64,
    pub parallelism: Option<usize>,
}

impl Default for CliConfig {
    fn default() -> CliConfig {
        CliConfig {
            max_degree: 8,
            format: Format::Text,
            terms: DEFAULT_TERMS,
            tol: DEFAULT_TOL,
            parallelism: None,
        }
    }
}

impl CliConfig {
    pub fn load(path: Option<&PathBuf>) -> Result<CliConfig, String> {
        let mut cfg = CliConfig::default();
        if let Some(p) = path {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {}", p.display(), e))?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line
                    .split_once('=')
                    .ok_or_else(|| format!("config line {}: expected key=value", lineno + 1))?;
                cfg.set(key.trim(), value.trim())
                    .map_err(|e| format!("config line {}: {}", lineno + 1, e))?;
            }
        }
        for (key, var) in [
            ("max_degree", "RTMAPS_MAX_DEGREE"),
            ("format", "RTMAPS_FORMAT"),
            ("terms", "RTMAPS_TERMS"),
            ("tol", "RTMAPS_TOL"),
            ("parallelism", "RTMAPS_PARALLELISM"),
        ] {
            if let Ok(value) = std::env::var(var) {
                cfg.set(key, &value).map_err(|e| format!("{}: {}", var, e))?;
            }
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "max_degree" => self.max_degree = parse_num(value)?,
            "format" => {
                self.format = match value {
                    "text" => Format::Text,
                    "json" => Format::Json,
                    _ => return Err(format!("unknown format {:?}", value)),
                }
            }
            "terms" => self.terms = parse_num(value)?,
            "tol" => self.tol = value.parse().map_err(|_| format!("bad float {:?}", value))?,
            "parallelism" => self.parallelism = Some(parse_num(value)?),
            _ => return Err(format!("unknown key {:?}", key)),
        }
        Ok(())
    }
}

fn parse_num(value: &str) -> Result<usize, String> {
    value.parse().map_err(|_| format!("bad number {:?}", value))
}

#[derive(Parser, Debug)]
#[command(name = "rtmaps", version, about = "Rooted-tree Hopf algebra, word maps, and zeta relations", disable_help_subcommand = true)]
struct Cli {
    /// Flat key=value configuration file
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Shorthand for --format json
    #[arg(long, global = true, conflicts_with = "format")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all forests of the given degree in canonical order
    Forests {
        #[arg(long)]
        degree: usize,
    },
    /// Coproduct of a forest
    Coproduct { forest: String },
    /// Antipode of a forest
    Antipode { forest: String },
    /// Apply the linear map attached to a forest to a word polynomial
    Rtm { forest: String, word: String },
    /// The F polynomial of a forest
    Fpoly { forest: String },
    /// The G polynomial of a forest
    Gpoly { forest: String },
    /// Multiply two word polynomials under a harmonic-type product
    Product {
        #[arg(long, value_parser = ["star", "harub", "diamond"])]
        op: String,
        left: String,
        right: String,
    },
    /// Verify one named identity, or `all`, over bounded grids
    Check {
        identity: String,
        #[arg(long)]
        max_forest_degree: Option<usize>,
        #[arg(long)]
        max_word_length: Option<usize>,
    },
    /// Generate zeta relations from all forests of one degree
    Relations {
        #[arg(long)]
        forest_degree: usize,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        numeric: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Rank of the span of the degree-n images among words of degree n
    Rank {
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate a multiple zeta value numerically
    Zeta {
        index: String,
        #[arg(long)]
        terms: Option<usize>,
    },
}

/// Parses `argv` (without the program name) and runs one command.
pub fn dispatch(argv: &[String]) -> i32 {
    let mut full = vec!["rtmaps".to_string()];
    full.extend_from_slice(argv);
    let cli = match Cli::try_parse_from(&full) {
        Ok(c) => c,
        Err(e) => {
            // clap renders --help/--version through the error path too
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let mut cfg = match CliConfig::load(cli.config.as_ref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e);
            return EXIT_USAGE;
        }
    };
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if cli.json {
        cfg.format = Format::Json;
    }
    if let Some(width) = cfg.parallelism {
        // ignore the error if a pool is already installed in this process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(width).build_global();
    }
    match run_command(cli.command, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            EXIT_USAGE
        }
    }
}

fn parse_forest(text: &str) -> Result<Forest, String> {
    Forest::parse(text).map_err(|e| format!("forest {:?}: {}", text, e))
}

fn parse_sum(text: &str) -> Result<WordSum, String> {
    parse_word(text).map_err(|e| format!("word {:?}: {}", text, e))
}

fn word_sum_json(p: &WordSum) -> serde_json::Value {
    p.to_json()
}

fn emit_word_sum(p: &WordSum, cfg: &CliConfig) {
    match cfg.format {
        Format::Text => println!("{}", p.render()),
        Format::Json => println!("{}", word_sum_json(p)),
    }
}

fn run_command(cmd: Command, cfg: &CliConfig) -> Result<i32, String> {
    match cmd {
        Command::Forests { degree } => {
            if degree > cfg.max_degree {
                eprintln!("error: degree {} exceeds cap {}", degree, cfg.max_degree);
                return Ok(EXIT_RESOURCE);
            }
            let forests = enumerate_forests(degree);
            match cfg.format {
                Format::Text => {
                    for f in &forests {
                        println!("{}", f);
                    }
                }
                Format::Json => {
                    let list: Vec<String> = forests.iter().map(|f| f.render()).collect();
                    println!(
                        "{}",
                        json!({"degree": degree, "count": list.len(), "forests": list})
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Coproduct { forest } => {
            let f = parse_forest(&forest)?;
            guard_degree(f.degree(), cfg)?;
            let t = coproduct(&ForestSum::from_forest(f));
            match cfg.format {
                Format::Text => println!("{}", t.render()),
                Format::Json => {
                    let terms: Vec<serde_json::Value> = t
                        .terms()
                        .map(|((a, b), c)| {
                            json!({"coeff": render_q(c), "left": a.render(), "right": b.render()})
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(terms));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Antipode { forest } => {
            let f = parse_forest(&forest)?;
            guard_degree(f.degree(), cfg)?;
            let s = antipode(&ForestSum::from_forest(f));
            match cfg.format {
                Format::Text => println!("{}", s.render()),
                Format::Json => println!("{}", s.to_json()),
            }
            Ok(EXIT_OK)
        }
        Command::Rtm { forest, word } => {
            let f = parse_forest(&forest)?;
            guard_degree(f.degree(), cfg)?;
            let w = parse_sum(&word)?;
            emit_word_sum(&rtm_apply(&ForestSum::from_forest(f), &w), cfg);
            Ok(EXIT_OK)
        }
        Command::Fpoly { forest } => {
            let f = parse_forest(&forest)?;
            guard_degree(f.degree(), cfg)?;
            emit_word_sum(&f_poly(&ForestSum::from_forest(f)), cfg);
            Ok(EXIT_OK)
        }
        Command::Gpoly { forest } => {
            let f = parse_forest(&forest)?;
            guard_degree(f.degree(), cfg)?;
            emit_word_sum(&g_poly(&ForestSum::from_forest(f)), cfg);
            Ok(EXIT_OK)
        }
        Command::Product { op, left, right } => {
            let a = parse_sum(&left)?;
            let b = parse_sum(&right)?;
            let result = match op.as_str() {
                "star" => star(&a, &b).map_err(|e| e.to_string())?,
                "harub" => harub(&a, &b).map_err(|e| e.to_string())?,
                "diamond" => diamond(&a, &b),
                _ => unreachable!("clap restricts the operator names"),
            };
            emit_word_sum(&result, cfg);
            Ok(EXIT_OK)
        }
        Command::Check { identity, max_forest_degree, max_word_length } => {
            let reports = if identity == "all" {
                if max_forest_degree.is_some() || max_word_length.is_some() {
                    return Err("bound overrides apply to a single identity, not `all`".into());
                }
                verify_all()
            } else {
                let name: IdentityName = identity.parse()?;
                let mut bounds = name.default_bounds();
                if let Some(a) = max_forest_degree {
                    bounds.max_forest_degree = a;
                }
                if let Some(b) = max_word_length {
                    bounds.max_word_length = b;
                }
                if bounds.max_forest_degree > cfg.max_degree {
                    eprintln!(
                        "error: forest degree {} exceeds cap {}",
                        bounds.max_forest_degree, cfg.max_degree
                    );
                    return Ok(EXIT_RESOURCE);
                }
                vec![verify_identity(name, bounds)]
            };
            emit_reports(&reports, cfg);
            Ok(if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Relations { forest_degree, seed, numeric, tol } => {
            if forest_degree > cfg.max_degree {
                eprintln!("error: degree {} exceeds cap {}", forest_degree, cfg.max_degree);
                return Ok(EXIT_RESOURCE);
            }
            if forest_degree == 0 {
                return Err("forest degree must be positive".into());
            }
            let seed_sum = parse_sum(&seed)?;
            let mut it = seed_sum.terms();
            let seed_word = match (it.next(), it.next()) {
                (Some((w, c)), None) if c == &crate::rational::q_one() => w.clone(),
                _ => return Err("seed must be a single monic word".into()),
            };
            let tol = tol.unwrap_or(cfg.tol);
            let mut all_ok = true;
            let mut entries = Vec::new();
            for f in enumerate_forests(forest_degree) {
                let rel = relation_from_rtm(&ForestSum::from_forest(f), &seed_word)
                    .map_err(|e| e.to_string())?;
                let residual = if numeric {
                    let (ok, res) =
                        verify_relation_numeric(&rel, tol, cfg.terms).map_err(|e| e.to_string())?;
                    all_ok &= ok;
                    Some(res)
                } else {
                    None
                };
                entries.push((rel, residual));
            }
            match cfg.format {
                Format::Text => {
                    for (rel, residual) in &entries {
                        let mut line = String::new();
                        for (i, (w, c)) in rel.lhs.terms().enumerate() {
                            let idx = word_index(w).map_err(|e| e.to_string())?;
                            crate::hopf::push_signed_term(
                                &mut line,
                                i == 0,
                                c,
                                &format!("z{}", idx.render()),
                            );
                        }
                        if rel.lhs.is_zero() {
                            line.push('0');
                        }
                        line.push_str(" = 0");
                        if let Some(res) = residual {
                            line.push_str(&format!("   [residual {:.3e}]", res));
                        }
                        println!("{}", line);
                    }
                }
                Format::Json => {
                    let list: Vec<serde_json::Value> =
                        entries.iter().map(|(rel, res)| rel.to_json(*res)).collect();
                    println!("{}", serde_json::Value::Array(list));
                }
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Rank { degree } => {
            if degree > cfg.max_degree {
                eprintln!("error: degree {} exceeds cap {}", degree, cfg.max_degree);
                return Ok(EXIT_RESOURCE);
            }
            if degree == 0 {
                return Err("degree must be positive".into());
            }
            let (rank, dim) = span_rank(degree);
            match cfg.format {
                Format::Text => println!("rank {} of {}", rank, dim),
                Format::Json => {
                    println!("{}", json!({"degree": degree, "rank": rank, "dimension": dim}))
                }
            }
            Ok(EXIT_OK)
        }
        Command::Zeta { index, terms } => {
            let idx = Index::parse(&index).ok_or_else(|| format!("bad index {:?}", index))?;
            let terms = terms.unwrap_or(cfg.terms);
            let value = zeta_numeric(&idx, terms).map_err(|e| e.to_string())?;
            match cfg.format {
                Format::Text => println!("{:.15}", value),
                Format::Json => {
                    println!("{}", json!({"index": idx.parts(), "terms": terms, "value": value}))
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn guard_degree(degree: usize, cfg: &CliConfig) -> Result<(), String> {
    if degree > cfg.max_degree {
        Err(format!("degree {} exceeds cap {}", degree, cfg.max_degree))
    } else {
        Ok(())
    }
}

fn emit_reports(reports: &[VerificationReport], cfg: &CliConfig) {
    match cfg.format {
        Format::Text => {
            for r in reports {
                let verdict = if r.passed() { "pass" } else { "fail" };
                let mut line = format!(
                    "{}: {} (checked {}, {} ms)",
                    r.identity, verdict, r.checked, r.millis
                );
                if let Some(ce) = &r.counterexample {
                    line.push_str(&format!("  counterexample: {}", ce));
                }
                println!("{}", line);
            }
        }
        Format::Json => {
            if reports.len() == 1 {
                println!("{}", serde_json::to_string(&reports[0]).unwrap());
            } else {
                println!("{}", serde_json::to_string(reports).unwrap());
            }
        }
    }
}

/// Lets integration tests exercise a full dispatch with fresh bounds.
pub fn check_bounds_for(identity: &str) -> Option<Bounds> {
    identity.parse::<IdentityName>().ok().map(|n| n.default_bounds())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(dispatch(&args(&["nonsense"])), EXIT_USAGE);
        assert_eq!(dispatch(&args(&["rtm", "[oops", "yx"])), EXIT_USAGE);
        assert_eq!(dispatch(&args(&["zeta", "1"])), EXIT_USAGE);
    }

    #[test]
    fn resource_cap_exits_3() {
        assert_eq!(dispatch(&args(&["forests", "--degree", "40"])), EXIT_RESOURCE);
    }

    #[test]
    fn config_file_and_defaults() {
        let dir = std::env::temp_dir().join("rtmaps-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("config");
        std::fs::write(&path, "max_degree = 3\nformat = json\n# comment\n").unwrap();
        let cfg = CliConfig::load(Some(&path)).unwrap();
        assert_eq!(cfg.max_degree, 3);
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.terms, DEFAULT_TERMS);
        assert!(CliConfig::load(Some(&dir.join("missing"))).is_err());
        std::fs::write(&path, "max_degree\n").unwrap();
        assert!(CliConfig::load(Some(&path)).is_err());
    }

    #[test]
    fn check_bounds_lookup() {
        assert!(check_bounds_for("thm1").is_some());
        assert!(check_bounds_for("nope").is_none());
    }
}
