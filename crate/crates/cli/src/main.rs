//! Command-line frontend: every library operation behind a small flag
//! grammar, with canonical JSON or aligned text output.
//!
//! Exit codes: 0 success, 1 selftest failure, 2 usage error, 3 domain error.

mod emit;

use std::collections::HashMap;
use std::process::ExitCode;

use num_traits::Zero;
use ocnu::cat_o;
use ocnu::classical;
use ocnu::params::{
    self, CParam, CertifiedKind, ClassifyReport, Intersection, LengthVerdict, LineInB, ParamPoint,
    UnresolvedFlag, Verdict,
};
use ocnu::partition::{gamma, rec_nu_with_index, Partition};
use ocnu::symfun;
use ocnu::Rat;

use emit::{partition, to_json, to_text, Out};

const GRAMMAR: &str = "\
usage: ocnu [--json|--text] [--N <int>] [--bound <int>] [--cap <int>] <command>
  diagram transpose|content|f|hooks|pieri --lambda <parts>
  diagram core --tau <parts> --s <int>
  diagram rec --l <int> --eta <parts>
  diagram gamma --tau <parts> --s <int> --l <int>
  diagram tilde --lambda <parts> --n <int>
  diagram cset --tau <parts> [--max <int>]
  line of|in-b --tau <parts> --mu <parts> --m <int>
  line intersect --tau <parts> --mu <parts> --m <int> --tau2 <parts> --mu2 <parts> --m2 <int>
  point classify --tau <parts> (--c-prime <rat> --nu <rat> | --c <rat> [--nu <rat>] | --generic)
  singular ... (alias of point classify)
  char verma --tau <parts> (--mu <parts> | --bound <int>) [--c-prime <rat> --nu <rat>]
  char simple --mu <parts> --tau <parts> --s <int> --r <int>
  char l-empty --mu <parts> --k <int>
  resolution --tau <parts> --s <int> --r <int> [--max-l <int>]
  kronecker classical --lambda <parts> --mu <parts> --nu-d <parts>
  kronecker reduced --lambda <parts> --tau <parts> --mu <parts>
  length classify --tau <parts> --c <rat>|irrational --nu <rat>
  classical core --lambda <parts> --e <int>
  classical hooks --lambda <parts> --e <int>
  classical rec --l <int> --beta <parts> --e <int>
  classical block-chain --beta <parts> --n <int> --s <int>
  classical simple --lambda <parts> --n <int> --s <int>
  classical char --mu <parts> --tau <parts> --n <int>
  selftest
partitions are comma-separated parts, or the literal `empty`";

enum Failure {
    Usage(String),
    Domain(ocnu::Error),
}

impl From<ocnu::Error> for Failure {
    fn from(e: ocnu::Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

// -------------------------------------------------------------------------
// Flag scanning and configuration.

const BOOL_FLAGS: [&str; 3] = ["--json", "--text", "--generic"];

struct Args {
    positional: Vec<String>,
    flags: HashMap<String, String>,
    bools: Vec<String>,
}

fn scan(argv: &[String]) -> Run<Args> {
    let mut positional = Vec::new();
    let mut flags = HashMap::new();
    let mut bools = Vec::new();
    let mut it = argv.iter().peekable();
    while let Some(tok) = it.next() {
        if let Some(name) = tok.strip_prefix("--") {
            if BOOL_FLAGS.contains(&tok.as_str()) {
                bools.push(tok.clone());
                continue;
            }
            let value = it
                .next()
                .ok_or_else(|| usage(format!("flag '--{name}' needs a value")))?;
            if flags.insert(name.to_string(), value.clone()).is_some() {
                return Err(usage(format!("flag '--{name}' given twice")));
            }
        } else {
            positional.push(tok.clone());
        }
    }
    Ok(Args {
        positional,
        flags,
        bools,
    })
}

impl Args {
    fn take(&self, name: &str) -> Run<&str> {
        self.flags
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| usage(format!("missing required flag '--{name}'")))
    }

    fn maybe(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    fn has_bool(&self, name: &str) -> bool {
        self.bools.iter().any(|b| b == name)
    }
}

#[derive(Clone)]
struct Config {
    trunc: usize,
    size_bound: u32,
    cap: u32,
    json: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            trunc: 12,
            size_bound: 8,
            cap: 20,
            json: false,
        }
    }
}

fn load_config(args: &Args) -> Run<Config> {
    let mut cfg = Config::default();
    if let Ok(path) = std::env::var("OCNU_CONFIG") {
        if !path.is_empty() {
            let body = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read config file '{path}': {e}")))?;
            let value: serde_json::Value = serde_json::from_str(&body)
                .map_err(|e| usage(format!("config file '{path}' is not valid JSON: {e}")))?;
            if let Some(n) = value.get("truncation").and_then(|v| v.as_u64()) {
                cfg.trunc = n as usize;
            }
            if let Some(n) = value.get("size_bound").and_then(|v| v.as_u64()) {
                cfg.size_bound = n as u32;
            }
            if let Some(n) = value.get("stabilization_cap").and_then(|v| v.as_u64()) {
                cfg.cap = n as u32;
            }
            match value.get("format").and_then(|v| v.as_str()) {
                Some("json") => cfg.json = true,
                Some("text") | None => {}
                Some(other) => {
                    return Err(usage(format!("config format '{other}' (want json|text)")))
                }
            }
        }
    }
    if let Some(n) = args.maybe("N") {
        cfg.trunc = parse_unsigned(n, "N")? as usize;
    }
    if let Some(n) = args.maybe("bound") {
        cfg.size_bound = parse_unsigned(n, "bound")? as u32;
    }
    if let Some(n) = args.maybe("cap") {
        cfg.cap = parse_unsigned(n, "cap")? as u32;
    }
    if args.has_bool("--json") {
        cfg.json = true;
    }
    if args.has_bool("--text") {
        cfg.json = false;
    }
    Ok(cfg)
}

// -------------------------------------------------------------------------
// Token parsers.

fn parse_int(token: &str, flag: &str) -> Run<i64> {
    token
        .parse()
        .map_err(|_| usage(format!("flag '--{flag}': '{token}' is not an integer")))
}

fn parse_unsigned(token: &str, flag: &str) -> Run<u64> {
    token.parse().map_err(|_| {
        usage(format!(
            "flag '--{flag}': '{token}' is not a nonnegative integer"
        ))
    })
}

fn parse_rat(token: &str, flag: &str) -> Run<Rat> {
    token.parse().map_err(|_| {
        usage(format!(
            "flag '--{flag}': '{token}' is not a rational (a or a/b)"
        ))
    })
}

fn parse_partition(token: &str, flag: &str) -> Run<Partition> {
    if token == "empty" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in token.split(',') {
        let part: u32 = piece
            .trim()
            .parse()
            .map_err(|_| usage(format!("flag '--{flag}': '{piece}' is not a positive part")))?;
        parts.push(part);
    }
    if parts.len() > 100_000 || parts.iter().map(|&p| u64::from(p)).sum::<u64>() > 1_000_000 {
        return Err(Failure::Domain(ocnu::Error::InvalidPartition(
            "partition too large for exact processing".into(),
        )));
    }
    Ok(Partition::try_new(parts)?)
}

// -------------------------------------------------------------------------
// Output helpers.

fn int_out(v: impl ToString) -> Out {
    Out::Int(v.to_string())
}

fn gamma_out(g: &ocnu::partition::GammaResult) -> Out {
    Out::Map(vec![
        ("diagram", partition(&g.diagram)),
        ("j_s", Out::Num(i64::from(g.j_s))),
        ("k_insert", Out::Num(i64::from(g.k_insert))),
        ("s", Out::Num(i64::from(g.s))),
        ("l", Out::Num(g.l)),
    ])
}

fn report_out(report: &ClassifyReport) -> Out {
    let verdict = match report.verdict {
        Verdict::Reducible => "Reducible",
        Verdict::SimpleCertified => "SimpleCertified",
        Verdict::Unknown => "Unknown",
    };
    let certified = report
        .certified
        .iter()
        .map(|c| {
            let mut entry = vec![("mu", partition(&c.mu)), ("m", Out::Num(i64::from(c.m)))];
            match c.kind {
                CertifiedKind::GammaLine { s, r } => {
                    entry.push(("s", Out::Num(i64::from(s))));
                    entry.push(("r", Out::Num(r)));
                }
                CertifiedKind::DegreeOne => entry.push(("kind", Out::Str("degree-one".into()))),
            }
            Out::Map(entry)
        })
        .collect();
    let chain = report
        .chain
        .iter()
        .map(|(mu, m)| Out::Map(vec![("mu", partition(mu)), ("m", Out::Num(i64::from(*m)))]))
        .collect();
    let unresolved = report
        .unresolved
        .iter()
        .map(|u| {
            let flag = match u.flag {
                UnresolvedFlag::FiniteException => "finite-exception",
                UnresolvedFlag::EqualSizeUnknown => "equal-size-unknown",
            };
            Out::Map(vec![
                ("mu", partition(&u.mu)),
                ("m", Out::Num(i64::from(u.m))),
                ("flag", Out::Str(flag.into())),
            ])
        })
        .collect();
    Out::Map(vec![
        ("verdict", Out::Str(verdict.into())),
        ("certified", Out::List(certified)),
        ("chain", Out::List(chain)),
        ("unresolved", Out::List(unresolved)),
    ])
}

// -------------------------------------------------------------------------
// Command handlers.

fn cmd_diagram(sub: &str, args: &Args) -> Run<Out> {
    match sub {
        "transpose" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            Ok(partition(&lam.transpose()))
        }
        "content" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            Ok(int_out(lam.content()))
        }
        "f" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            Ok(int_out(lam.f_value()))
        }
        "hooks" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let rows = lam
                .hook_lengths()
                .into_iter()
                .map(|((i, j), h)| {
                    Out::List(vec![
                        Out::Num(i as i64),
                        Out::Num(j as i64),
                        Out::Num(i64::from(h)),
                    ])
                })
                .collect();
            Ok(Out::List(rows))
        }
        "pieri" => {
            let lam = match args.maybe("tau") {
                Some(tok) => parse_partition(tok, "tau")?,
                None => parse_partition(args.take("lambda")?, "lambda")?,
            };
            let e = lam.pieri_expand();
            Ok(Out::Map(vec![
                ("plus", Out::List(e.plus.iter().map(partition).collect())),
                ("minus", Out::List(e.minus.iter().map(partition).collect())),
                ("zero", Out::List(e.zero.iter().map(partition).collect())),
                ("corner_count", Out::Num(i64::from(e.corner_count))),
            ]))
        }
        "core" => {
            let tau = parse_partition(args.take("tau")?, "tau")?;
            let s = parse_int(args.take("s")?, "s")?;
            Ok(partition(&tau.core_nu(s)?))
        }
        "rec" => {
            let eta = parse_partition(args.take("eta")?, "eta")?;
            let l = parse_unsigned(args.take("l")?, "l")? as u32;
            let (diagram, k) = rec_nu_with_index(l, &eta);
            Ok(Out::Map(vec![
                ("diagram", partition(&diagram)),
                ("k", Out::Num(i64::from(k))),
            ]))
        }
        "gamma" => {
            let tau = parse_partition(args.take("tau")?, "tau")?;
            let s = parse_int(args.take("s")?, "s")?;
            let l = parse_int(args.take("l")?, "l")?;
            Ok(gamma_out(&gamma(&tau, s, l)?))
        }
        "tilde" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let n = parse_unsigned(args.take("n")?, "n")?;
            Ok(partition(&lam.tilde(n)?))
        }
        "cset" => {
            let tau = parse_partition(args.take("tau")?, "tau")?;
            if let Some(max) = args.maybe("max") {
                let max = parse_int(max, "max")?;
                let members: Vec<Out> = (0..=max)
                    .filter(|&s| tau.c_set_witness(s).is_some())
                    .map(Out::Num)
                    .collect();
                Ok(Out::Map(vec![
                    ("members", Out::List(members)),
                    ("max", Out::Num(max)),
                ]))
            } else {
                let sporadic = tau.c_set_sporadic().into_iter().map(Out::Num).collect();
                Ok(Out::Map(vec![
                    ("sporadic", Out::List(sporadic)),
                    ("tail_from", Out::Num(tau.c_set_tail_start())),
                ]))
            }
        }
        _ => Err(usage(format!("unknown diagram subcommand '{sub}'"))),
    }
}

fn cmd_line(sub: &str, args: &Args) -> Run<Out> {
    let tau = parse_partition(args.take("tau")?, "tau")?;
    let mu = parse_partition(args.take("mu")?, "mu")?;
    let m = parse_unsigned(args.take("m")?, "m")? as u32;
    if m == 0 {
        return Err(usage("flag '--m': degrees are positive"));
    }
    match sub {
        "of" => {
            let line = params::line_of(&tau, &mu, m);
            Ok(Out::Map(vec![
                ("tau", partition(&line.tau)),
                ("mu", partition(&line.mu)),
                ("m", Out::Num(i64::from(line.m))),
                ("a", Out::Num(line.a)),
                ("b", Out::Num(line.b)),
                ("empty", Out::Bool(line.is_empty())),
            ]))
        }
        "in-b" => Ok(match params::line_in_b(&tau, &mu, m)? {
            LineInB::Yes { s, sign } => Out::Map(vec![
                ("result", Out::Str("yes".into())),
                ("s", Out::Num(i64::from(s))),
                ("sign", Out::Num(i64::from(sign))),
            ]),
            LineInB::No => Out::Map(vec![("result", Out::Str("no".into()))]),
            LineInB::Unknown => Out::Map(vec![("result", Out::Str("unknown".into()))]),
        }),
        "intersect" => {
            let tau2 = parse_partition(args.take("tau2")?, "tau2")?;
            let mu2 = parse_partition(args.take("mu2")?, "mu2")?;
            let m2 = parse_unsigned(args.take("m2")?, "m2")? as u32;
            if m2 == 0 {
                return Err(usage("flag '--m2': degrees are positive"));
            }
            let l1 = params::line_of(&tau, &mu, m);
            let l2 = params::line_of(&tau2, &mu2, m2);
            Ok(match params::intersect_lines(&l1, &l2)? {
                Intersection::Disjoint => Out::Map(vec![("result", Out::Str("disjoint".into()))]),
                Intersection::Coincide => Out::Map(vec![("result", Out::Str("coincide".into()))]),
                Intersection::Point { c_prime, nu } => Out::Map(vec![
                    ("result", Out::Str("point".into())),
                    ("c_prime", Out::Rat(c_prime)),
                    ("nu", Out::Rat(nu)),
                ]),
            })
        }
        _ => Err(usage(format!("unknown line subcommand '{sub}'"))),
    }
}

fn cmd_point_classify(args: &Args, cfg: &Config) -> Run<Out> {
    let tau = parse_partition(args.take("tau")?, "tau")?;
    let report = if args.has_bool("--generic") {
        params::classify_point(&tau, &ParamPoint::FullyGeneric, cfg.size_bound)?
    } else if let Some(c_token) = args.maybe("c") {
        let c = parse_rat(c_token, "c")?;
        if c.is_zero() {
            ClassifyReport::c_zero()
        } else {
            let nu = parse_rat(args.take("nu")?, "nu")?;
            let point = ParamPoint::exact(Rat::new(1.into(), 1.into()) / c, nu)?;
            params::classify_point(&tau, &point, cfg.size_bound)?
        }
    } else {
        let c_prime = parse_rat(args.take("c-prime")?, "c-prime")?;
        let nu = parse_rat(args.take("nu")?, "nu")?;
        let point = ParamPoint::exact(c_prime, nu)?;
        params::classify_point(&tau, &point, cfg.size_bound)?
    };
    Ok(report_out(&report))
}

fn cmd_char(sub: &str, args: &Args, cfg: &Config) -> Run<Out> {
    match sub {
        "verma" => {
            let tau = parse_partition(args.take("tau")?, "tau")?;
            let h = match (args.maybe("c-prime"), args.maybe("nu")) {
                (Some(cp), Some(nu)) => Some(params::h_lowest(
                    &tau,
                    &parse_rat(cp, "c-prime")?,
                    &parse_rat(nu, "nu")?,
                )?),
                (None, None) => None,
                _ => return Err(usage("flags '--c-prime' and '--nu' go together")),
            };
            if let Some(mu) = args.maybe("mu") {
                let mu = parse_partition(mu, "mu")?;
                let series = cat_o::verma_char_component(&mu, &tau, cfg.trunc);
                let mut entries = vec![("series", Out::Series(series))];
                if let Some(h) = h {
                    entries.push(("h", Out::Rat(h)));
                }
                Ok(Out::Map(entries))
            } else {
                let table = cat_o::character_table_of_verma(&tau, cfg.size_bound, cfg.trunc);
                let components = table
                    .iter()
                    .map(|(mu, series)| {
                        Out::Map(vec![
                            ("mu", partition(mu)),
                            ("series", Out::Series(series.clone())),
                        ])
                    })
                    .collect();
                let mut entries = vec![("components", Out::List(components))];
                if let Some(h) = h {
                    entries.push(("h", Out::Rat(h)));
                }
                Ok(Out::Map(entries))
            }
        }
        "simple" => {
            let mu = parse_partition(args.take("mu")?, "mu")?;
            let tau = parse_partition(args.take("tau")?, "tau")?;
            let s = parse_int(args.take("s")?, "s")?;
            let r = parse_int(args.take("r")?, "r")?;
            Ok(Out::Series(cat_o::simple_char_component(
                &mu, &tau, s, r, cfg.trunc,
            )?))
        }
        "l-empty" => {
            let mu = parse_partition(args.take("mu")?, "mu")?;
            let k = parse_unsigned(args.take("k")?, "k")? as u32;
            Ok(Out::Series(cat_o::simple_char_l_empty_closed(
                &mu, k, cfg.trunc,
            )?))
        }
        _ => Err(usage(format!("unknown char subcommand '{sub}'"))),
    }
}

fn cmd_resolution(args: &Args) -> Run<Out> {
    let tau = parse_partition(args.take("tau")?, "tau")?;
    let s = parse_int(args.take("s")?, "s")?;
    let r = parse_int(args.take("r")?, "r")?;
    let max_l = match args.maybe("max-l") {
        Some(v) => parse_unsigned(v, "max-l")? as u32,
        None => 6,
    };
    let sign: i8 = if r >= 0 { 1 } else { -1 };
    let res = cat_o::resolution(&tau, s, sign, r, max_l)?;
    Ok(Out::Map(vec![
        ("tau", partition(&res.tau)),
        ("s", Out::Num(i64::from(res.s))),
        ("sign", Out::Num(i64::from(res.sign))),
        ("r", Out::Num(res.r)),
        (
            "terms",
            Out::List(res.terms.iter().map(gamma_out).collect()),
        ),
        (
            "offsets",
            Out::List(res.offsets.iter().map(|&o| Out::Num(o as i64)).collect()),
        ),
    ]))
}

fn cmd_kronecker(sub: &str, args: &Args, cfg: &Config) -> Run<Out> {
    match sub {
        "classical" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let mu = parse_partition(args.take("mu")?, "mu")?;
            let nu_d = parse_partition(args.take("nu-d")?, "nu-d")?;
            let value = symfun::kronecker(&lam, &mu, &nu_d)?;
            Ok(Out::Map(vec![("value", int_out(value))]))
        }
        "reduced" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let tau = parse_partition(args.take("tau")?, "tau")?;
            let mu = parse_partition(args.take("mu")?, "mu")?;
            let (value, stabilized_at) =
                symfun::reduced_kronecker_capped(&lam, &tau, &mu, cfg.cap)?;
            Ok(Out::Map(vec![
                ("value", int_out(value)),
                ("stabilized_at", Out::Num(i64::from(stabilized_at))),
            ]))
        }
        _ => Err(usage(format!("unknown kronecker subcommand '{sub}'"))),
    }
}

fn cmd_length(args: &Args) -> Run<Out> {
    let tau = parse_partition(args.take("tau")?, "tau")?;
    let c_token = args.take("c")?;
    let c = if c_token == "irrational" {
        CParam::Irrational
    } else {
        let c = parse_rat(c_token, "c")?;
        if c.is_zero() {
            CParam::Zero
        } else {
            CParam::Of(c)
        }
    };
    let nu = parse_rat(args.take("nu")?, "nu")?;
    Ok(match params::length_classification(&tau, &c, &nu) {
        LengthVerdict::Finite => Out::Map(vec![("verdict", Out::Str("Finite".into()))]),
        LengthVerdict::Unknown => Out::Map(vec![("verdict", Out::Str("Unknown".into()))]),
        LengthVerdict::Infinite {
            start,
            step,
            first_r,
        } => Out::Map(vec![
            ("verdict", Out::Str("Infinite".into())),
            ("start", Out::Num(start as i64)),
            ("step", Out::Num(step as i64)),
            ("first_r", Out::List(first_r.iter().map(int_out).collect())),
        ]),
    })
}

fn cmd_classical(sub: &str, args: &Args, cfg: &Config) -> Run<Out> {
    match sub {
        "core" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let e = parse_unsigned(args.take("e")?, "e")? as u32;
            if e == 0 {
                return Err(usage("flag '--e': hook lengths are positive"));
            }
            Ok(partition(&classical::classical_core(&lam, e)))
        }
        "hooks" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let e = parse_unsigned(args.take("e")?, "e")? as u32;
            let hooks = classical::e_hooks(&lam, e)
                .into_iter()
                .map(|h| {
                    Out::Map(vec![
                        (
                            "vertex",
                            Out::List(vec![
                                Out::Num(i64::from(h.vertex.0)),
                                Out::Num(i64::from(h.vertex.1)),
                            ]),
                        ),
                        ("length", Out::Num(i64::from(h.length))),
                        ("leg", Out::Num(i64::from(h.leg))),
                        ("arm", Out::Num(i64::from(h.arm()))),
                    ])
                })
                .collect();
            Ok(Out::List(hooks))
        }
        "rec" => {
            let beta = parse_partition(args.take("beta")?, "beta")?;
            let l = parse_unsigned(args.take("l")?, "l")? as u32;
            let e = parse_unsigned(args.take("e")?, "e")? as u32;
            Ok(partition(&classical::classical_rec(l, &beta, e)?))
        }
        "block-chain" => {
            let beta = parse_partition(args.take("beta")?, "beta")?;
            let n = parse_unsigned(args.take("n")?, "n")?;
            let s = parse_unsigned(args.take("s")?, "s")?;
            let chain = classical::block_chain(&beta, n, s)?;
            Ok(Out::List(chain.iter().map(partition).collect()))
        }
        "simple" => {
            let lam = parse_partition(args.take("lambda")?, "lambda")?;
            let n = parse_unsigned(args.take("n")?, "n")?;
            let s = parse_unsigned(args.take("s")?, "s")?;
            Ok(Out::Map(vec![(
                "simple",
                Out::Bool(classical::verma_simple_classical(&lam, n, s)?),
            )]))
        }
        "char" => {
            let mu = parse_partition(args.take("mu")?, "mu")?;
            let tau = parse_partition(args.take("tau")?, "tau")?;
            let n = parse_unsigned(args.take("n")?, "n")?;
            Ok(Out::Series(classical::classical_graded_char(
                &mu, &tau, n, cfg.trunc,
            )?))
        }
        _ => Err(usage(format!("unknown classical subcommand '{sub}'"))),
    }
}

fn run_selftest() -> ExitCode {
    let outcomes = ocnu::selftest::run_all();
    let mut all_ok = true;
    let mut total = 0u128;
    for o in &outcomes {
        total += o.millis;
        match &o.result {
            Ok(detail) => println!(
                "criterion {} [{}]: PASS ({detail}) [{} ms]",
                o.number, o.name, o.millis
            ),
            Err(msg) => {
                all_ok = false;
                println!(
                    "criterion {} [{}]: FAIL ({msg}) [{} ms]",
                    o.number, o.name, o.millis
                );
            }
        }
    }
    println!(
        "selftest: {}/{} criteria passed in {total} ms",
        outcomes.iter().filter(|o| o.passed()).count(),
        outcomes.len()
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn dispatch(args: &Args, cfg: &Config) -> Run<Out> {
    let mut pos = args.positional.iter().map(String::as_str);
    let cmd = pos.next().ok_or_else(|| usage("missing command"))?;
    let out = match cmd {
        "diagram" => {
            let sub = pos
                .next()
                .ok_or_else(|| usage("diagram needs a subcommand"))?;
            cmd_diagram(sub, args)?
        }
        "line" => {
            let sub = pos.next().ok_or_else(|| usage("line needs a subcommand"))?;
            cmd_line(sub, args)?
        }
        "point" => match pos.next() {
            Some("classify") => cmd_point_classify(args, cfg)?,
            other => return Err(usage(format!("unknown point subcommand {other:?}"))),
        },
        "singular" => cmd_point_classify(args, cfg)?,
        "char" => {
            let sub = pos.next().ok_or_else(|| usage("char needs a subcommand"))?;
            cmd_char(sub, args, cfg)?
        }
        "resolution" => cmd_resolution(args)?,
        "kronecker" => {
            let sub = pos
                .next()
                .ok_or_else(|| usage("kronecker needs a subcommand"))?;
            cmd_kronecker(sub, args, cfg)?
        }
        "length" => match pos.next() {
            Some("classify") => cmd_length(args)?,
            other => return Err(usage(format!("unknown length subcommand {other:?}"))),
        },
        "classical" => {
            let sub = pos
                .next()
                .ok_or_else(|| usage("classical needs a subcommand"))?;
            cmd_classical(sub, args, cfg)?
        }
        other => return Err(usage(format!("unknown command '{other}'"))),
    };
    if let Some(extra) = pos.next() {
        return Err(usage(format!("unexpected token '{extra}'")));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    if argv.first().map(String::as_str) == Some("selftest") {
        return run_selftest();
    }
    let args = match scan(&argv) {
        Ok(a) => a,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n{GRAMMAR}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(_)) => unreachable!("scanning raises usage errors only"),
    };
    let cfg = match load_config(&args) {
        Ok(c) => c,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n{GRAMMAR}");
            return ExitCode::from(2);
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    match dispatch(&args, &cfg) {
        Ok(out) => {
            if cfg.json {
                println!("{}", to_json(&out));
            } else {
                print!("{}", to_text(&out));
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}\n{GRAMMAR}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
