//! The command-line front end.
//!
//! Exit codes: 0 when the checked property holds, 1 when it fails, 2 on a
//! usage or parse error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Error;
use crate::identities::run_suites;
use crate::indexing::Index2;
use crate::level::{congruence_class, level_generators, IdealSpec};
use crate::linalg::InvPair;
use crate::pluecker::{is_member, ColumnVector};
use crate::rdu::{Decomposer, DecompositionResult, GeneratorTarget};
use crate::ring::{RingDescriptor, RingElem};
use crate::sample::random_wedge_pair;
use crate::stabilizer::{t_one, t_star_col, t_star_row, RowVector};
use crate::words::{ConjWord, ElemWord};

pub const HOLDS: i32 = 0;
pub const FAILS: i32 = 1;
pub const USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "exterior-rdu", version, about = "Exact reverse decomposition for the exterior square of GL_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// int, zmod:<m> or poly:<v1,v2,...>
    #[arg(long, default_value = "zmod:97")]
    ring: String,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random transvections in a generated source matrix.
    #[arg(long, default_value_t = 40)]
    len: usize,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every symbolic identity suite.
    Identities {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Emit seeded random members of ∧²E_n as inverse pairs.
    Gen {
        #[command(flatten)]
        common: Common,
    },
    /// Decompose one level generator, or all of them with --all.
    Decompose {
        /// entry:a,b:c,d or diag:a,b:c,d
        #[arg(long, required_unless_present = "all")]
        target: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Check that a conjugate word multiplies out to ∧²t_{k,l}(ξ).
    Verify {
        /// A conjugate word, or a decomposition result.
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        l: usize,
        /// Defaults to the "param" of a decomposition result.
        #[arg(long)]
        xi: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the membership criterion on a matrix.
    Member {
        #[command(flatten)]
        common: Common,
    },
    /// List the level generators of a matrix.
    Level {
        #[arg(long)]
        modulus: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Build an exterior elementary word fixing a vector.
    Stabilize {
        #[arg(long, conflicts_with_all = ["row", "t1"])]
        col: Option<usize>,
        #[arg(long, conflicts_with = "t1")]
        row: Option<usize>,
        #[arg(long)]
        t1: bool,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Property(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Membership | Error::NotWedgeColumn | Error::StepViolated(_) | Error::NonUnit => {
                Failure::Property(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Usage(format!("parse error: {e}"))
    }
}

type Outcome = std::result::Result<(i32, String), Failure>;

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Results go to `out` unless `--out` names a file.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { HOLDS };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let dest = common(&cli.command).out.clone();
    match dispatch(cli.command) {
        Ok((code, text)) => {
            let written = match dest {
                Some(p) => fs::write(&p, &text).map_err(|e| e.to_string()),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    USAGE
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            USAGE
        }
        Err(Failure::Property(msg)) => {
            let _ = writeln!(err, "fails: {msg}");
            FAILS
        }
    }
}

fn common(c: &Command) -> &Common {
    match c {
        Command::Identities { common, .. }
        | Command::Gen { common }
        | Command::Decompose { common, .. }
        | Command::Verify { common, .. }
        | Command::Member { common }
        | Command::Level { common, .. }
        | Command::Stabilize { common, .. } => common,
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Identities { max_n, .. } => identities(max_n),
        Command::Gen { common } => gen(&common),
        Command::Decompose { target, all, k, l, common } => decompose(&common, target.as_deref(), all, k, l),
        Command::Verify { word, k, l, xi, common } => verify(&common, &word, k, l, xi.as_deref()),
        Command::Member { common } => member(&common),
        Command::Level { modulus, common } => level(&common, modulus),
        Command::Stabilize { col, row, t1, common } => stabilize(&common, col, row, t1),
    }
}

fn line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

fn read_json(path: &Option<PathBuf>) -> std::result::Result<Value, Failure> {
    let p = path.as_ref().ok_or_else(|| Failure::Usage("--in is required".into()))?;
    Ok(serde_json::from_str(&fs::read_to_string(p)?)?)
}

fn read_pair(c: &Common) -> std::result::Result<InvPair, Failure> {
    Ok(InvPair::from_json(&read_json(&c.input)?)?)
}

fn ring_of(c: &Common) -> std::result::Result<RingDescriptor, Failure> {
    Ok(c.ring.parse::<RingDescriptor>()?)
}

fn identities(max_n: usize) -> Outcome {
    let reports = run_suites(max_n)?;
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let code = if reports.iter().any(|r| r.failed()) { FAILS } else { HOLDS };
    Ok((code, text))
}

/// The generator for trial `t`: stream `t` of the seeded ChaCha generator.
pub fn trial_rng(seed: u64, t: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t as u64);
    rng
}

fn gen(c: &Common) -> Outcome {
    let ring = ring_of(c)?;
    if matches!(ring, RingDescriptor::PolyInt { .. }) {
        return Err(Failure::Usage("gen needs an int or zmod ring".into()));
    }
    if c.n < 3 {
        return Err(Failure::Usage(format!("n = {} < 3", c.n)));
    }
    let pairs = (0..c.trials.max(1))
        .map(|t| Ok(random_wedge_pair(&mut trial_rng(c.seed, t), c.n, c.len, &ring)?.to_json(Some(c.n))))
        .collect::<std::result::Result<Vec<_>, Failure>>()?;
    Ok((HOLDS, if c.trials <= 1 { line(&pairs[0]) } else { line(&Value::Array(pairs)) }))
}

fn parse_target(s: &str, n: usize, k: usize, l: usize) -> std::result::Result<GeneratorTarget, Failure> {
    let bad = || Failure::Usage(format!("target {s:?} is not entry:a,b:c,d or diag:a,b:c,d"));
    let parts: Vec<&str> = s.split(':').collect();
    let [kind, a, b] = parts[..] else { return Err(bad()) };
    let pair = |p: &str| -> std::result::Result<Index2, Failure> {
        let xs: Vec<usize> =
            p.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<std::result::Result<_, _>>()?;
        let [x, y] = xs[..] else { return Err(bad()) };
        Ok(Index2::new(x.min(y), x.max(y), n)?)
    };
    match kind {
        "entry" => Ok(GeneratorTarget::entry(pair(a)?, pair(b)?, k, l)),
        "diag" => Ok(GeneratorTarget::diag(pair(a)?, pair(b)?, k, l)),
        _ => Err(bad()),
    }
}

fn decompose(c: &Common, target: Option<&str>, all: bool, k: usize, l: usize) -> Outcome {
    let g = read_pair(c)?;
    let d = Decomposer::new(&g)?;
    let n = d.n();
    if all {
        let mut out = Vec::new();
        for gen in level_generators(g.fwd())? {
            let res = d.decompose(&GeneratorTarget::from_level(&gen, k, l))?;
            out.push(json!({"generator": gen.to_json(), "result": res.to_json()}));
        }
        return Ok((HOLDS, line(&Value::Array(out))));
    }
    let t = parse_target(target.expect("clap requires --target without --all"), n, k, l)?;
    Ok((HOLDS, line(&d.decompose(&t)?.to_json())))
}

fn verify(c: &Common, word: &PathBuf, k: usize, l: usize, xi: Option<&str>) -> Outcome {
    let g = read_pair(c)?;
    let ring = g.ring().clone();
    let v: Value = serde_json::from_str(&fs::read_to_string(word)?)?;
    let (w, param) = if v.get("case").is_some() {
        let r = DecompositionResult::from_json(&v, &ring)?;
        (r.word, Some(r.param))
    } else {
        (ConjWord::from_json(&v, &ring)?, None)
    };
    let xi: RingElem = match (xi, param) {
        (Some(s), _) => ring.parse_elem(s)?,
        (None, Some(p)) => p,
        (None, None) => return Err(Failure::Usage("--xi is required for a bare word".into())),
    };
    let ok = crate::rdu::verify(&w, &g, k, l, &xi)?;
    Ok((if ok { HOLDS } else { FAILS }, line(&json!({"verified": ok, "length": w.len()}))))
}

fn member(c: &Common) -> Outcome {
    let g = read_pair(c)?;
    let ok = is_member(g.fwd())?;
    let mut v = json!({"member": ok});
    if g.fwd().ambient_rank() == Some(4) {
        v["note"] = json!("criterion (n=4 caveat noted)");
    }
    Ok((if ok { HOLDS } else { FAILS }, line(&v)))
}

fn level(c: &Common, modulus: Option<u64>) -> Outcome {
    let g = read_pair(c)?;
    let gens = level_generators(g.fwd())?;
    let mut v = json!({"generators": gens.iter().map(|l| l.to_json()).collect::<Vec<_>>()});
    if let Ok(d) = IdealSpec::level_of(g.fwd())?.principal_generator() {
        v["ideal"] = json!(d.to_string());
    }
    if let Some(d) = modulus {
        v["class"] = json!(congruence_class(g.fwd(), d)?.as_str());
    }
    Ok((HOLDS, line(&v)))
}

fn stabilize(c: &Common, col: Option<usize>, row: Option<usize>, t1: bool) -> Outcome {
    let ring = ring_of(c)?;
    let w = ColumnVector::from_json(&read_json(&c.input)?, &ring)?;
    let (word, image): (ElemWord, Vec<RingElem>) = match (col, row, t1) {
        (Some(j), None, false) => {
            let word = t_star_col(j, &w)?;
            let image = word.eval(&ring)?.fwd().mul_vec(w.entries())?;
            (word, image)
        }
        (None, Some(i), false) => {
            let z = RowVector::from(w.clone());
            let word = t_star_row(i, &z)?;
            let image = word.eval(&ring)?.fwd().vec_mul(z.entries())?;
            (word, image)
        }
        (None, None, true) => {
            let word = t_one(&w)?;
            let image = word.eval(&ring)?.fwd().mul_vec(w.entries())?;
            (word, image)
        }
        _ => return Err(Failure::Usage("give exactly one of --col, --row, --t1".into())),
    };
    let fixed = image == w.entries();
    Ok((if fixed { HOLDS } else { FAILS }, line(&json!({"word": word.to_json(), "fixed": fixed}))))
}
