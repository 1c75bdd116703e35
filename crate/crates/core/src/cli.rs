//! The `chordal` command-line tool.
//!
//! Exit codes: 0 when the verdict holds (or the command only reports a
//! value), 1 when it fails, 2 on errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::chain::is_cycle;
use crate::chordality::{
    betti_table, check_propagation, decompose_cycle, has_linear_resolution, is_cohen_macaulay, is_decomposition_chordal,
    is_relative_resolution_chordal, leray_number, resolve_relative_cycle, ChordalityVerdict, LinearResolution,
};
use crate::complex::{RelativeComplex, SimplicialComplex};
use crate::corpus::{CorpusArg, CorpusSpec, NAMED};
use crate::cuts::{check_reverse_propagation, find_extended_link_minimal_cut, CutContext, CutMode};
use crate::dirac::{is_k_dirac, verify_certificate, DiracOutcome, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::field::{Field, FieldSpec};
use crate::format::{dump_complex, format_chain, parse_chain, parse_complex};
use crate::homology::betti_numbers;

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "chordal", version, about = "Higher-dimensional chordality of simplicial complexes")]
pub struct Cli {
    /// Facet file of the complex.
    #[arg(long, global = true)]
    pub complex: Option<PathBuf>,
    /// Build the complex from a corpus spec instead, e.g. `cone(cycle(4))`.
    #[arg(long, global = true, conflicts_with = "complex")]
    pub corpus: Option<String>,
    /// Coefficient field: q, f2, or fp:P.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,
    /// Write a JSON report to this path (`-` for stdout).
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for random corpus models.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Resolution,
    Decomposition,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide resolution or decomposition k-chordality.
    Check {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: i32,
        /// Subcomplex file; decides relative resolution chordality of the pair.
        #[arg(long)]
        removed: Option<PathBuf>,
    },
    /// Find a resolution of a cycle.
    Resolve {
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long)]
        removed: Option<PathBuf>,
    },
    /// Write a cycle as a combination of complete cycles.
    Decompose {
        #[arg(long)]
        cycle: PathBuf,
    },
    /// Leray number.
    Leray,
    /// Castelnuovo-Mumford regularity of the Stanley-Reisner ring.
    Regularity {
        /// Print the graded Betti table.
        #[arg(long)]
        table: bool,
    },
    /// Reduced Betti numbers.
    Betti,
    /// Does the Stanley-Reisner ideal have a linear resolution?
    LinearResolution,
    /// Cohen-Macaulay test.
    Cm,
    /// Alexander dual over the declared vertex set.
    Dual {
        /// Extra ground-set labels, comma separated.
        #[arg(long, value_delimiter = ',')]
        ground: Vec<String>,
    },
    /// Decide whether the complex is k-Dirac.
    Dirac {
        #[arg(long)]
        k: i32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Test a relative k-cut, or compute a minimal one.
    Cut {
        /// Face as comma-separated labels.
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        k: i32,
        /// Cut faces: `a,b;c,d`.
        #[arg(long, required_unless_present = "minimal")]
        cut: Option<String>,
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        homology: bool,
        #[arg(long, default_value = "edge")]
        cut_mode: CutMode,
    },
    /// Find a face whose extended link is a minimal k-cut.
    Elkcut {
        #[arg(long)]
        k: i32,
        #[arg(long, default_value = "edge")]
        cut_mode: CutMode,
    },
    /// Check the reverse-propagation hypotheses and conclusion at a k-face.
    ReverseProp {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        k: i32,
        #[arg(long, default_value = "edge")]
        cut_mode: CutMode,
    },
    /// Check chordality propagation in degree k.
    Propagation {
        #[arg(long)]
        k: i32,
    },
    /// Print a corpus complex as a facet file.
    Corpus {
        /// Complex name, e.g. `cycle`.
        #[arg(long, required_unless_present_any = ["spec", "list"])]
        name: Option<String>,
        /// Integer parameters, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<i64>,
        /// Full spec expression, e.g. `join(cycle(4),simplex(0))`.
        #[arg(long, conflicts_with = "name")]
        spec: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Resolve { .. } => "resolve",
            Command::Decompose { .. } => "decompose",
            Command::Leray => "leray",
            Command::Regularity { .. } => "regularity",
            Command::Betti => "betti",
            Command::LinearResolution => "linear-resolution",
            Command::Cm => "cm",
            Command::Dual { .. } => "dual",
            Command::Dirac { .. } => "dirac",
            Command::Cut { .. } => "cut",
            Command::Elkcut { .. } => "elkcut",
            Command::ReverseProp { .. } => "reverse-prop",
            Command::Propagation { .. } => "propagation",
            Command::Corpus { .. } => "corpus",
        }
    }
}

/// What a command produced: a verdict (if it decides something), text for
/// stdout, and the JSON `result` object.
struct Outcome {
    verdict: Option<bool>,
    text: String,
    result: Value,
}

impl Outcome {
    fn verdict(v: bool, text: String, result: Value) -> Self {
        Outcome {
            verdict: Some(v),
            text,
            result,
        }
    }

    fn value(text: String, result: Value) -> Self {
        Outcome {
            verdict: None,
            text,
            result,
        }
    }
}

/// Runs the tool on the given arguments and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: thread pool already initialised: {e}");
        }
    }
    match execute(&cli, &argv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli, argv: &[OsString]) -> Result<i32> {
    let start = Instant::now();
    let mut hasher = Sha256::new();
    let out = if let Command::Corpus { .. } = cli.command {
        corpus_command(cli, &mut hasher)?
    } else {
        let complex = load_complex(cli)?;
        hasher.update(dump_complex(&complex).as_bytes());
        crate::with_field!(cli.field, |f| dispatch(&f, cli, &complex, &mut hasher))?
    };
    let timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    if !out.text.is_empty() {
        print!("{}", out.text);
        if !out.text.ends_with('\n') {
            println!();
        }
    }
    if let Some(path) = &cli.json {
        let report = json!({
            "schema": SCHEMA,
            "command": cli.command.name(),
            "argv": argv.iter().map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>(),
            "input_hash": hex::encode(hasher.finalize()),
            "field": cli.field.to_string(),
            "verdict": out.verdict,
            "result": out.result,
            "timing_ms": timing_ms,
        });
        let body = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
        if path.as_os_str() == "-" {
            print!("{body}");
        } else {
            fs::write(path, body).map_err(|e| Error::Corpus(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(match out.verdict {
        Some(false) => 1,
        _ => 0,
    })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn load_complex(cli: &Cli) -> Result<SimplicialComplex> {
    match (&cli.complex, &cli.corpus) {
        (Some(p), _) => parse_complex(&read(p)?),
        (None, Some(s)) => s.parse::<CorpusSpec>()?.with_seed(cli.seed).build(),
        (None, None) => Err(Error::Hypothesis("no input: pass --complex FILE or --corpus SPEC".into())),
    }
}

/// A subcomplex file, re-indexed onto the ambient complex's labels.
fn load_subcomplex(total: &SimplicialComplex, path: &Path) -> Result<SimplicialComplex> {
    let sub = parse_complex(&read(path)?)?;
    let faces = sub
        .facets()
        .iter()
        .map(|&f| total.face_from_labels(&sub.face_labels(f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplicialComplex::from_facets(total.labels().clone(), faces))
}

fn parse_face(c: &SimplicialComplex, s: &str) -> Result<Face> {
    let labels: Vec<&str> = s.split([',', ' ']).filter(|t| !t.is_empty()).collect();
    let f = c.face_from_labels(&labels)?;
    if !c.contains(f) {
        return Err(Error::NotAFace(c.format_face(f)));
    }
    Ok(f)
}

fn labels_json(c: &SimplicialComplex, faces: &[Face]) -> Value {
    json!(faces.iter().map(|&f| c.face_labels(f)).collect::<Vec<_>>())
}

fn verdict_json<F: Field>(f: &F, c: &SimplicialComplex, v: &ChordalityVerdict<F::Elem>) -> (String, Value) {
    let kind = format!("{:?}", v.kind).to_lowercase();
    let mut text = format!("{kind} {}-chordal over {}: {}\n", v.k, v.field, v.holds);
    let witness = v.witness.as_ref().map(|w| {
        let lines = format_chain(f, &w.cycle, c);
        text += &format!("witness vertices: {} (betti {})\n", c.format_face(w.vertices), w.betti);
        for l in &lines {
            text += &format!("  {l}\n");
        }
        json!({
            "vertices": c.face_labels(w.vertices),
            "betti": w.betti,
            "cycle": lines,
        })
    });
    (
        text,
        json!({ "kind": kind, "k": v.k, "holds": v.holds, "witness": witness }),
    )
}

fn dispatch<F: Field>(f: &F, cli: &Cli, c: &SimplicialComplex, hasher: &mut Sha256) -> Result<Outcome> {
    Ok(match &cli.command {
        Command::Check { kind, k, removed } => {
            let v = match (kind, removed) {
                (Kind::Resolution, r) => {
                    let gamma = match r {
                        Some(p) => load_subcomplex(c, p)?,
                        None => SimplicialComplex::void(c.labels().clone()),
                    };
                    hasher.update(dump_complex(&gamma).as_bytes());
                    is_relative_resolution_chordal(f, &RelativeComplex::new(c.clone(), gamma)?, *k)?
                }
                (Kind::Decomposition, None) => is_decomposition_chordal(f, c, *k)?,
                (Kind::Decomposition, Some(_)) => {
                    return Err(Error::Hypothesis("--removed applies to resolution chordality only".into()))
                }
            };
            let (text, result) = verdict_json(f, c, &v);
            Outcome::verdict(v.holds, text, result)
        }
        Command::Resolve { cycle, removed } => {
            let gamma = match removed {
                Some(p) => load_subcomplex(c, p)?,
                None => SimplicialComplex::void(c.labels().clone()),
            };
            let pair = RelativeComplex::new(c.clone(), gamma)?;
            let text = read(cycle)?;
            hasher.update(text.as_bytes());
            let z = parse_chain(f, &text, &pair)?;
            if !is_cycle(f, &z, &pair) {
                return Err(Error::NotACycle);
            }
            let r = resolve_relative_cycle(f, &pair, &z)?;
            let lines = r.as_ref().map(|c2| format_chain(f, c2, c));
            let text = match &lines {
                Some(ls) => format!("resolution:\n{}", ls.iter().map(|l| format!("  {l}\n")).collect::<String>()),
                None => "no resolution supported on the cycle's vertices\n".into(),
            };
            Outcome::verdict(r.is_some(), text, json!({ "resolution": lines }))
        }
        Command::Decompose { cycle } => {
            let amb = RelativeComplex::absolute(c.clone());
            let text = read(cycle)?;
            hasher.update(text.as_bytes());
            let z = parse_chain(f, &text, &amb)?;
            let d = decompose_cycle(f, c, &z)?;
            let terms = d.as_ref().map(|ts| {
                ts.iter()
                    .map(|(x, s)| format!("{} : {}", f.format(x), c.face_labels(*s).join(" ")))
                    .collect::<Vec<_>>()
            });
            let text = match &terms {
                Some(ts) => format!(
                    "decomposition into complete cycles:\n{}",
                    ts.iter().map(|l| format!("  {l}\n")).collect::<String>()
                ),
                None => "no decomposition into complete cycles on the cycle's vertices\n".into(),
            };
            Outcome::verdict(d.is_some(), text, json!({ "decomposition": terms }))
        }
        Command::Leray => {
            let l = leray_number(f, c)?;
            Outcome::value(format!("{l}\n"), json!({ "leray": l }))
        }
        Command::Regularity { table } => {
            let t = betti_table(f, c)?;
            let reg = t.regularity();
            let mut text = format!("{reg}\n");
            if *table {
                for (a, row) in t.entries.iter().enumerate() {
                    if row.iter().any(|&b| b != 0) {
                        let cells: Vec<String> = row.iter().enumerate().filter(|(_, &b)| b != 0).map(|(j, b)| format!("b({a},{j})={b}")).collect();
                        text += &format!("{}\n", cells.join(" "));
                    }
                }
            }
            Outcome::value(
                text,
                json!({
                    "regularity": reg,
                    "table": if *table { Some(&t.entries) } else { None },
                    "herzog_srinivasan_violations": t.herzog_srinivasan_violations(),
                }),
            )
        }
        Command::Betti => {
            let b = betti_numbers(f, c);
            let text = b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n";
            Outcome::value(text, json!({ "reduced_betti_from_minus_one": b }))
        }
        Command::LinearResolution => {
            let r = has_linear_resolution(f, c)?;
            let text = format!("{}\n", serde_json::to_value(r).expect("enum").as_str().unwrap_or_default());
            Outcome::verdict(r == LinearResolution::Linear, text, json!({ "linear_resolution": r }))
        }
        Command::Cm => {
            let cm = is_cohen_macaulay(f, c);
            Outcome::verdict(cm, format!("{cm}\n"), json!({ "cohen_macaulay": cm }))
        }
        Command::Dual { ground } => {
            let base = if ground.is_empty() { c.clone() } else { c.extend_ground(ground)? };
            let d = base.alexander_dual();
            let dump = dump_complex(&d);
            Outcome::value(dump.clone(), json!({ "dual": dump }))
        }
        Command::Dirac { k, budget } => match is_k_dirac(c, *k, *budget)? {
            DiracOutcome::Certified(cert) => {
                verify_certificate(c, *k, &cert).map_err(Error::Hypothesis)?;
                let cj = cert.to_json(c);
                let elim: Vec<String> = cert.eliminations().iter().map(|&s| c.format_face(s)).collect();
                let text = format!("{k}-Dirac: true\neliminations: {}\n", elim.join(" "));
                Outcome::verdict(true, text, json!({ "status": "certified", "certificate": cj }))
            }
            DiracOutcome::NotDirac => Outcome::verdict(
                false,
                format!("{k}-Dirac: false (search exhausted)\n"),
                json!({ "status": "not_dirac" }),
            ),
            DiracOutcome::Unknown { explored } => {
                return Err(Error::Hypothesis(format!(
                    "undecided: budget exhausted after {explored} states (raise --budget)"
                )))
            }
        },
        Command::Cut {
            sigma,
            tau,
            k,
            cut,
            minimal,
            homology,
            cut_mode,
        } => {
            let s = parse_face(c, sigma)?;
            let t = parse_face(c, tau)?;
            let ctx = CutContext::new(f, c, *k, *cut_mode)?;
            let mut r = if *minimal {
                ctx.minimal_cut(s, t)?
            } else {
                let faces = cut
                    .as_deref()
                    .unwrap_or("")
                    .split(';')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| parse_face(c, x))
                    .collect::<Result<Vec<_>>>()?;
                ctx.is_cut(&faces, s, t)?
            };
            if *homology && r.is_cut {
                r = ctx.is_homology_cut(&r.cut, s, t)?;
            }
            let holds = r.is_cut && (!*homology || r.two_sided() == Some(true));
            let cut_txt: Vec<String> = r.cut.iter().map(|&x| c.format_face(x)).collect();
            let mut text = format!("cut: {}\nis_cut: {}\nminimal: {}\n", cut_txt.join(" "), r.is_cut, r.is_minimal);
            if let (Some(a), Some(b)) = (r.homology_sigma, r.homology_tau) {
                text += &format!("homology sides: {a} {b}\n");
            }
            Outcome::verdict(holds, text, r.to_json(c))
        }
        Command::Elkcut { k, cut_mode } => {
            let e = find_extended_link_minimal_cut(f, c, *k, *cut_mode)?;
            let text = format!(
                "sigma: {}\ntarget: {}\ncut: {}\nroute: {:?}\nhomology on the star side: {}\n",
                c.format_face(e.sigma),
                c.format_face(e.report.tau),
                e.report.cut.iter().map(|&x| c.format_face(x)).collect::<Vec<_>>().join(" "),
                e.route,
                e.report.homology_sigma.unwrap_or(false),
            );
            let holds = e.report.is_minimal && e.report.homology_sigma == Some(true);
            Outcome::verdict(
                holds,
                text,
                json!({ "sigma": c.face_labels(e.sigma), "route": e.route, "report": e.report.to_json(c) }),
            )
        }
        Command::ReverseProp { sigma, k, cut_mode } => {
            let s = parse_face(c, sigma)?;
            let r = check_reverse_propagation(f, c, s, *k, *cut_mode)?;
            let text = format!(
                "decomposition {k}-chordal: {}\ntwo-sided homology cut: {}\nhigher cut: {:?}\nhypotheses hold: {}\nconclusion: {}\n",
                r.decomposition_chordal,
                r.two_sided_pair.is_some(),
                r.higher_cut,
                r.hypotheses_hold,
                r.conclusion
            );
            Outcome::verdict(r.conclusion, text, r.to_json(c))
        }
        Command::Propagation { k } => {
            let r = check_propagation(f, c, *k)?;
            let mut text = format!(
                "hypotheses hold: {}\nconclusions hold: {}\nleray: {}\nregularity: {}\n",
                r.hypotheses_hold,
                r.conclusions_hold(),
                r.leray,
                r.regularity.map_or("n/a".into(), |x| x.to_string())
            );
            for v in &r.violations {
                text += &format!("violation: {v}\n");
            }
            Outcome::verdict(r.conclusions_hold(), text, serde_json::to_value(&r).expect("serializable"))
        }
        Command::Corpus { .. } => unreachable!("handled before loading a complex"),
    })
}

fn corpus_command(cli: &Cli, hasher: &mut Sha256) -> Result<Outcome> {
    let Command::Corpus { name, params, spec, list } = &cli.command else { unreachable!() };
    if *list {
        let text = NAMED.join("\n") + "\n";
        return Ok(Outcome::value(text, json!({ "named": NAMED })));
    }
    let spec = match (spec, name) {
        (Some(s), _) => s.parse::<CorpusSpec>()?,
        (None, Some(n)) => CorpusSpec {
            name: n.clone(),
            args: params.iter().map(|&p| CorpusArg::Int(p)).collect(),
            seed: None,
        },
        (None, None) => return Err(Error::Corpus("pass --name, --spec or --list".into())),
    }
    .with_seed(cli.seed);
    let c = spec.build()?;
    let dump = dump_complex(&c);
    hasher.update(dump.as_bytes());
    Ok(Outcome::value(
        dump.clone(),
        json!({ "spec": spec.to_string(), "f_vector": c.f_vector(), "facets": labels_json(&c, c.facets()) }),
    ))
}
