//! Subcommand dispatch. [`run`] captures output so tests can call it
//! in-process; the binary only forwards the [`Outcome`].

use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cherryvine_core::density::{cherry_log_density, gaussian_copula_log_density, markov_projection, UnitPoint, VinePlan};
use cherryvine_core::generate::{
    random_bushy_cherry_tree, random_cherry_tree, random_correlation, random_junction_tree, random_unit_point,
    random_vine,
};
use cherryvine_core::{
    backward, edge_labels, embed, is_truncated_rvine, separator_table, two_separator_check, validate_sequence,
    CherryTree, Error, TruncationWitness,
};

use crate::dot::emit_dot;
use crate::fixtures;
use crate::format::{format, parse, parse_assignment, ErrorKind, ParseError, Structure};

/// Success.
pub const EXIT_OK: i32 = 0;
/// Decision came out negative, e.g. not a truncated R-vine.
pub const EXIT_NEGATIVE: i32 = 1;
/// Bad command line, unreadable file or syntax error.
pub const EXIT_USAGE: i32 = 2;
/// Well-formed input that the operation cannot accept.
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr + "\n",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cherryvine", version, about = "Cherry-tree and truncated R-vine structure tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a structure file and check its invariants.
    Validate { file: PathBuf },
    /// Decide whether a cherry-tree is the top tree of a truncated R-vine.
    Check {
        file: PathBuf,
        /// Also require the backward construction to succeed.
        #[arg(long)]
        exact: bool,
    },
    /// Build the full vine below a cherry-tree.
    Backward { file: PathBuf },
    /// Embed a cherry-tree of order k into one of order k+1 that is a truncated R-vine.
    Embed { file: PathBuf },
    /// Evaluate the log copula density of a vine at a point.
    Density {
        file: PathBuf,
        /// Assignment file with one `pair a b | S : family [param]` line per label.
        #[arg(long)]
        assign: PathBuf,
        /// Comma-separated coordinates u1,...,ud in [0,1].
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Print the density instead of its logarithm.
        #[arg(long)]
        linear: bool,
    },
    /// Print a structure as Graphviz DOT.
    Dot { file: PathBuf },
    /// Print one of the worked examples.
    Demo { name: Demo },
    /// Run randomized consistency checks.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials per check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Demo {
    Fig1,
    Fig3,
    Fig4,
    Fig5,
    Fig7,
    Example22,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Validate { file } => load(&file).map_or_else(|o| o, |s| validate(&s)),
        Command::Check { file, exact } => load_cherry(&file).map_or_else(|o| o, |ct| check(&ct, exact)),
        Command::Backward { file } => load_cherry(&file).map_or_else(|o| o, |ct| run_backward(&ct)),
        Command::Embed { file } => load_cherry(&file).map_or_else(|o| o, |ct| run_embed(&ct)),
        Command::Density {
            file,
            assign,
            point,
            linear,
        } => density(&file, &assign, &point, linear),
        Command::Dot { file } => load(&file).map_or_else(|o| o, |s| Outcome::ok(emit_dot(&s))),
        Command::Demo { name } => Outcome::ok(demo(name)),
        Command::Selfcheck { seed, trials } => selfcheck(seed, trials),
    }
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn parse_failure(path: &Path, e: &ParseError) -> Outcome {
    let code = match e.kind {
        ErrorKind::Syntax => EXIT_USAGE,
        ErrorKind::Semantic => EXIT_SEMANTIC,
    };
    Outcome::fail(code, format!("{}:{e}", path.display()))
}

fn load(path: &Path) -> Result<Structure, Outcome> {
    let text = read(path)?;
    parse(&text).map_err(|e| parse_failure(path, &e))
}

fn load_cherry(path: &Path) -> Result<CherryTree, Outcome> {
    match load(path)? {
        Structure::CherryTree(ct) => Ok(ct),
        other => Err(Outcome::fail(
            EXIT_USAGE,
            format!("{}: expected a cherry-tree file, found {}", path.display(), other.kind()),
        )),
    }
}

fn validate(s: &Structure) -> Outcome {
    let text = match s {
        Structure::JunctionTree(jt) => {
            format!("valid junction-tree: {} vertices, {} clusters\n", jt.vertices().len(), jt.len())
        }
        Structure::CherryTree(ct) => format!(
            "valid cherry-tree: order {}, {} vertices, {} clusters\n",
            ct.order(),
            ct.vertices().len(),
            ct.len()
        ),
        Structure::Vine(v) => format!(
            "valid vine: {} vertices, truncation level {}\n",
            v.dimension(),
            v.truncation_level()
        ),
    };
    Outcome::ok(text)
}

/// Verdict lines for a check, shared by `check` and the demos.
fn witness_text(w: &TruncationWitness) -> (String, String) {
    match w {
        TruncationWitness::Truncated { separator_tree } => {
            let mut out = String::from("truncated R-vine\n");
            match separator_tree {
                None => out.push_str("separator tree: none\n"),
                Some(st) => {
                    let seps: Vec<String> = st.sorted_clusters().iter().map(|c| c.to_string()).collect();
                    writeln!(out, "separator tree: order {}, clusters {}", st.order(), seps.join(" ")).unwrap();
                    let mut links: Vec<String> = st
                        .edge_contents()
                        .into_iter()
                        .map(|(a, b)| if a <= b { format!("{a}-{b}") } else { format!("{b}-{a}") })
                        .collect();
                    links.sort();
                    if !links.is_empty() {
                        writeln!(out, "separator links: {}", links.join(" ")).unwrap();
                    }
                }
            }
            (out, String::new())
        }
        TruncationWitness::NotTruncated { offender } => {
            let why = match offender {
                Some(o) => format!("offender: {o}\n"),
                None => "offender: none found\n".to_string(),
            };
            ("not a truncated R-vine\n".to_string(), why)
        }
    }
}

fn check(ct: &CherryTree, exact: bool) -> Outcome {
    let w = is_truncated_rvine(ct);
    let (stdout, stderr) = witness_text(&w);
    if !w.verdict() {
        return Outcome {
            code: EXIT_NEGATIVE,
            stdout,
            stderr,
        };
    }
    if exact {
        if let Err(e) = backward(ct) {
            return Outcome {
                code: EXIT_NEGATIVE,
                stdout: "not a truncated R-vine\n".to_string(),
                stderr: format!("backward construction failed: {e}\n"),
            };
        }
    }
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr,
    }
}

fn core_failure(e: &Error) -> Outcome {
    match e {
        Error::NotTruncated { .. } | Error::NoValidSequence => Outcome {
            code: EXIT_NEGATIVE,
            stdout: "not a truncated R-vine\n".to_string(),
            stderr: format!("{e}\n"),
        },
        _ => Outcome::fail(EXIT_SEMANTIC, e.to_string()),
    }
}

fn run_backward(ct: &CherryTree) -> Outcome {
    match backward(ct) {
        Ok(v) => Outcome::ok(format(&Structure::Vine(v))),
        Err(e) => core_failure(&e),
    }
}

fn run_embed(ct: &CherryTree) -> Outcome {
    match embed(ct) {
        Ok(up) => Outcome::ok(format(&Structure::CherryTree(up))),
        Err(e) => core_failure(&e),
    }
}

fn parse_point(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("--point: `{}` is not a number", t.trim()))
        })
        .collect()
}

fn density(file: &Path, assign: &Path, point: &str, linear: bool) -> Outcome {
    let vine = match load(file) {
        Ok(Structure::Vine(v)) => v,
        Ok(other) => {
            return Outcome::fail(
                EXIT_USAGE,
                format!("{}: expected a vine file, found {}", file.display(), other.kind()),
            )
        }
        Err(o) => return o,
    };
    let assignment = match read(assign).and_then(|t| parse_assignment(&t).map_err(|e| parse_failure(assign, &e))) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let labels = edge_labels(&vine);
    if let Some((l, _)) = assignment.iter().find(|(l, _)| !labels.contains(l)) {
        return Outcome::fail(EXIT_SEMANTIC, format!("{}: {l} is not an edge of the vine", assign.display()));
    }
    let coords = match parse_point(point) {
        Ok(c) => c,
        Err(msg) => return Outcome::fail(EXIT_USAGE, msg),
    };
    let result = UnitPoint::new(coords).and_then(|u| VinePlan::new(&vine)?.log_density(&assignment, &u));
    match result {
        Ok(ld) => {
            let x = if linear { ld.exp() } else { ld };
            Outcome::ok(format!("{}\n", format_g(x, 12)))
        }
        Err(e) => Outcome::fail(EXIT_SEMANTIC, e.to_string()),
    }
}

/// `%.<sig>g` formatting: fixed notation for exponents in `[-4, sig)`,
/// scientific otherwise, trailing zeros removed.
pub fn format_g(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if exp < -4 || exp >= sig as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mant), exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}"))
    }
}

fn demo(name: Demo) -> String {
    match name {
        Demo::Fig1 => {
            let s = Structure::CherryTree(fixtures::fig1());
            format!("{}{}", format(&s), emit_dot(&s))
        }
        Demo::Fig3 => {
            let ct = fixtures::fig3();
            let (verdict, _) = witness_text(&is_truncated_rvine(&ct));
            format!("{}{}", format(&Structure::CherryTree(ct)), commented(&verdict))
        }
        Demo::Fig4 => {
            let s = Structure::Vine(fixtures::fig4());
            format!("{}{}", format(&s), emit_dot(&s))
        }
        Demo::Fig5 => {
            let ct = fixtures::fig5();
            let (verdict, why) = witness_text(&is_truncated_rvine(&ct));
            format!(
                "{}{}{}",
                format(&Structure::CherryTree(ct)),
                commented(&verdict),
                commented(&why)
            )
        }
        Demo::Fig7 => {
            let (ct, up) = fixtures::fig7();
            let (verdict, why) = witness_text(&is_truncated_rvine(&ct));
            let (up_verdict, _) = witness_text(&is_truncated_rvine(&up));
            format!(
                "{}{}{}# embedded:\n{}{}",
                format(&Structure::CherryTree(ct)),
                commented(&verdict),
                commented(&why),
                format(&Structure::CherryTree(up)),
                commented(&up_verdict)
            )
        }
        Demo::Example22 => {
            let mut out = String::new();
            for l in edge_labels(&fixtures::example22()) {
                writeln!(out, "{l}").unwrap();
            }
            out
        }
    }
}

fn commented(text: &str) -> String {
    text.lines().map(|l| format!("# {l}\n")).collect()
}

/// Randomized consistency checks over the core library. Every check
/// compares two independent computations; the run fails if any disagree.
fn selfcheck(seed: u64, trials: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = String::new();
    let mut failures = 0;
    let mut report = |name: &str, passed: usize, total: usize| {
        writeln!(out, "{name}: {passed}/{total}").unwrap();
        if passed != total {
            failures += 1;
        }
    };

    let mut agree = 0;
    for i in 0..trials {
        let d = rng.gen_range(3..=10);
        let k = rng.gen_range(2..=d.min(5));
        let ct = if i % 2 == 0 {
            random_cherry_tree(&mut rng, d, k)
        } else {
            random_bushy_cherry_tree(&mut rng, d, k)
        };
        if is_truncated_rvine(&ct).verdict() == two_separator_check(&ct).verdict() {
            agree += 1;
        }
    }
    report("recognition criteria agree", agree, trials);

    let mut round_trips = 0;
    for _ in 0..trials {
        let d = rng.gen_range(4..=10);
        let k = rng.gen_range(3..=d.min(5));
        let v = random_vine(&mut rng, d, k);
        let top = v.top().expect("k >= 2").clone();
        let ok = backward(&top).is_ok_and(|w| {
            validate_sequence(w.base(), w.levels()).is_ok()
                && w.top().is_some_and(|t| {
                    t.sorted_clusters() == top.sorted_clusters() && separator_table(t) == separator_table(&top)
                })
        });
        round_trips += usize::from(ok);
    }
    report("backward round trip", round_trips, trials);

    let mut embeds = 0;
    for _ in 0..trials {
        let d = rng.gen_range(4..=10);
        let k = rng.gen_range(2..=(d - 1).min(5));
        let ct = random_bushy_cherry_tree(&mut rng, d, k);
        let ok = embed(&ct).is_ok_and(|up| {
            up.order() == k + 1
                && is_truncated_rvine(&up).verdict()
                && up.separators().iter().all(|s| ct.position(s).is_some())
        });
        embeds += usize::from(ok);
    }
    report("embedding", embeds, trials);

    let mut factor = 0;
    let density_trials = trials.div_ceil(10);
    for _ in 0..density_trials {
        let d = rng.gen_range(2..=8);
        let jt = random_junction_tree(&mut rng, d, 4);
        let sigma = random_correlation(&mut rng, d);
        let ok = markov_projection(&sigma, &jt).is_ok_and(|proj| {
            (0..10).all(|_| {
                let u = random_unit_point(&mut rng, d);
                match (cherry_log_density(&jt, &sigma, &u), gaussian_copula_log_density(&proj, &u)) {
                    (Ok(a), Ok(b)) => (a - b).abs() < 1e-8,
                    _ => false,
                }
            })
        });
        factor += usize::from(ok);
    }
    report("factorisation identity", factor, density_trials);

    let code = if failures == 0 { EXIT_OK } else { EXIT_NEGATIVE };
    Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_formatting() {
        assert_eq!(format_g(1.0, 12), "1");
        assert_eq!(format_g(-0.5, 12), "-0.5");
        assert_eq!(format_g(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_g(123456.789, 12), "123456.789");
        assert_eq!(format_g(1e-5, 12), "1e-05");
        assert_eq!(format_g(2.5e20, 12), "2.5e+20");
        assert_eq!(format_g(999999999999.6, 12), "1e+12");
        assert_eq!(format_g(0.0001234, 12), "0.0001234");
    }

    #[test]
    fn usage_errors() {
        let o = run(["cherryvine", "frobnicate"]);
        assert_eq!(o.code, EXIT_USAGE);
        let o = run(["cherryvine", "--help"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("selfcheck"));
        let o = run(["cherryvine", "validate", "/nonexistent/file"]);
        assert_eq!(o.code, EXIT_USAGE);
    }

    #[test]
    fn demos_run() {
        for name in ["fig1", "fig3", "fig4", "fig5", "fig7", "example22"] {
            let o = run(["cherryvine", "demo", name]);
            assert_eq!(o.code, 0, "{name}");
        }
        let o = run(["cherryvine", "demo", "example22"]);
        assert_eq!(o.stdout.lines().count(), 15);
        assert_eq!(o.stdout.lines().last(), Some("c_{1,6|2,3,4,5}"));
    }

    #[test]
    fn selfcheck_passes() {
        let o = run(["cherryvine", "selfcheck", "--seed", "7", "--trials", "30"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        let again = run(["cherryvine", "selfcheck", "--seed", "7", "--trials", "30"]);
        assert_eq!(o, again);
    }
}
