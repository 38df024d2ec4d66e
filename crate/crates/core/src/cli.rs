//! Command-line front end.
//!
//! ```text
//! wsing weights (brieskorn A1 A2 A3 | cyclic N Q)
//! wsing generators N Q
//! wsing classify (weights LIST | brieskorn A1 A2 A3 | cyclic N Q)
//! wsing compare --left SOURCE --right SOURCE
//! wsing link A1 A2 A3
//! wsing corollary
//! ```
//!
//! `--json` switches to a single-line JSON object
//! `{"command", "input", "result"}` with sorted keys. Rationals are always
//! written as `"p/q"` strings. Exit code 0 means a result was produced and
//! 2 means the input was rejected before any computation.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::classify::{
    compare_weights, conical_cyclic, conical_from_weights, corollary_report, CompareVerdict,
    ConicalVerdict, CorollarySide, Mechanism,
};
use crate::cyclic_quotient::{diagonal_weights, minimal_generators, CyclicQuotient, InvariantMonomial};
use crate::error::{Error, Result};
use crate::exactnum::Ratio;
use crate::link_topology::{seifert_data, SeifertData};
use crate::weights::{brieskorn_weights, BrieskornTriple, WeightVector};

/// Default bound on `n` for cyclic inputs.
pub const DEFAULT_MAX_N: u64 = 5000;
/// Default bound on `n` for anything that computes a Hilbert basis.
pub const DEFAULT_MAX_HILBERT_N: u64 = 500;

#[derive(Debug, Parser)]
#[command(name = "wsing", version, about = "Weights, invariant generators, link invariants and bi-Lipschitz verdicts for weighted homogeneous surface singularities")]
struct Args {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest n accepted for a cyclic quotient.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N, value_name = "N")]
    max_n: u64,

    /// Largest n for which the invariant generators are computed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_HILBERT_N, value_name = "N")]
    max_hilbert_n: u64,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Weights of a Brieskorn hypersurface or of a cyclic quotient.
    Weights {
        #[arg(required = true, num_args = 1.., value_name = "SOURCE")]
        source: Vec<String>,
    },
    /// Minimal generators of the invariant ring of C^2/mu_N.
    Generators {
        n: String,
        q: String,
    },
    /// Metric-conicalness verdict.
    Classify {
        #[arg(required = true, num_args = 1.., value_name = "SOURCE")]
        source: Vec<String>,
    },
    /// Bi-Lipschitz distinguishability of two germs from their weights.
    Compare {
        #[arg(long, required = true, num_args = 2..=4, value_name = "SOURCE")]
        left: Vec<String>,
        #[arg(long, required = true, num_args = 2..=4, value_name = "SOURCE")]
        right: Vec<String>,
    },
    /// Seifert invariants of the link of z1^A1 + z2^A2 + z3^A3 = 0.
    Link {
        a1: String,
        a2: String,
        a3: String,
    },
    /// The homeomorphic but not bi-Lipschitz Brieskorn pair (2,51,102) / (12,15,20).
    Corollary,
}

/// Result of one invocation: exit code plus the text for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn rejected(message: String) -> Self {
        Self { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn parse_and_run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let first = text.lines().next().unwrap_or("error: invalid arguments");
                Outcome::rejected(format!("{first}\n"))
            } else {
                Outcome::ok(text)
            };
        }
    };
    match run(&args) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::rejected(format!("error: {e}\n")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Source {
    Brieskorn(BrieskornTriple),
    Cyclic(CyclicQuotient),
    Weights(WeightVector),
}

struct Limits {
    max_n: u64,
    max_hilbert_n: u64,
}

impl Limits {
    fn check(&self, cq: &CyclicQuotient) -> Result<()> {
        let n = cq.n();
        if n > self.max_n {
            return Err(Error::InvalidArgument(format!(
                "n = {n} exceeds --max-n {}",
                self.max_n
            )));
        }
        if n > self.max_hilbert_n {
            return Err(Error::InvalidArgument(format!(
                "n = {n} exceeds the generator computation bound --max-hilbert-n {}",
                self.max_hilbert_n
            )));
        }
        Ok(())
    }
}

fn parse_u64(text: &str, what: &str) -> Result<u64> {
    text.parse::<u64>()
        .map_err(|_| Error::InvalidArgument(format!("malformed {what} `{text}`")))
}

fn parse_triple(a1: &str, a2: &str, a3: &str) -> Result<BrieskornTriple> {
    BrieskornTriple::new(
        parse_u64(a1, "exponent")?,
        parse_u64(a2, "exponent")?,
        parse_u64(a3, "exponent")?,
    )
}

fn parse_cyclic(n: &str, q: &str, limits: &Limits) -> Result<CyclicQuotient> {
    let cq = CyclicQuotient::new(parse_u64(n, "n")?, parse_u64(q, "q")?)?;
    limits.check(&cq)?;
    Ok(cq)
}

fn parse_weight_list(text: &str) -> Result<WeightVector> {
    let mut values = Vec::new();
    for part in text.split(',') {
        if part.starts_with('-') && part[1..].parse::<BigUint>().is_ok() {
            return Err(Error::InvalidWeights(format!("entry {part} is not positive")));
        }
        let v: BigUint = part
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("malformed weight `{part}` in `{text}`")))?;
        values.push(v);
    }
    WeightVector::from_list(values)
}

fn parse_source(tokens: &[String], limits: &Limits) -> Result<Source> {
    let (kind, rest) = tokens
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("missing source".into()))?;
    let arity = |expected: usize| -> Result<()> {
        if rest.len() == expected {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "source `{kind}` takes {expected} argument(s), got {}",
                rest.len()
            )))
        }
    };
    match kind.as_str() {
        "brieskorn" => {
            arity(3)?;
            Ok(Source::Brieskorn(parse_triple(&rest[0], &rest[1], &rest[2])?))
        }
        "cyclic" => {
            arity(2)?;
            Ok(Source::Cyclic(parse_cyclic(&rest[0], &rest[1], limits)?))
        }
        "weights" => {
            arity(1)?;
            Ok(Source::Weights(parse_weight_list(&rest[0])?))
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown source `{other}` (expected brieskorn, cyclic or weights)"
        ))),
    }
}

fn source_weights(source: &Source) -> WeightVector {
    match source {
        Source::Brieskorn(t) => brieskorn_weights(t),
        Source::Cyclic(cq) => diagonal_weights(cq),
        Source::Weights(w) => w.clone(),
    }
}

fn big(v: &BigUint) -> Value {
    Value::Number(v.to_string().parse().expect("decimal integer"))
}

fn weights_json(w: &WeightVector) -> Value {
    Value::Array(w.entries().iter().map(big).collect())
}

fn monomial_json(m: &InvariantMonomial) -> Value {
    json!([m.a, m.b])
}

fn ratio_json(r: &Ratio) -> Value {
    Value::String(r.to_string())
}

fn source_json(source: &Source) -> Value {
    match source {
        Source::Brieskorn(t) => json!({"source": "brieskorn", "exponents": t.exponents()}),
        Source::Cyclic(cq) => json!({"source": "cyclic", "n": cq.n(), "q": cq.q()}),
        Source::Weights(w) => json!({"source": "weights", "weights": weights_json(w)}),
    }
}

fn source_text(source: &Source) -> String {
    match source {
        Source::Brieskorn(t) => {
            let [a1, a2, a3] = t.exponents();
            format!("brieskorn z1^{a1} + z2^{a2} + z3^{a3}")
        }
        Source::Cyclic(cq) => format!("cyclic n={} q={}", cq.n(), cq.q()),
        Source::Weights(w) => format!("weights {w}"),
    }
}

fn source_with_weights(source: &Source, w: &WeightVector) -> String {
    match source {
        Source::Weights(_) => source_text(source),
        _ => format!("{} weights {w}", source_text(source)),
    }
}

fn link_json(s: &SeifertData) -> Value {
    let fibers: Vec<Value> = s.fibers.iter().map(|(m, c)| json!([big(m), big(c)])).collect();
    json!({"genus": big(&s.genus), "euler": ratio_json(&s.euler), "fibers": fibers})
}

fn link_text(s: &SeifertData, out: &mut String, indent: &str) {
    let fibers = if s.fibers.is_empty() {
        "none".to_string()
    } else {
        s.fibers
            .iter()
            .map(|(m, c)| format!("{c} of multiplicity {m}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "{indent}genus: {}", s.genus);
    let _ = writeln!(out, "{indent}euler: {}", s.euler);
    let _ = writeln!(out, "{indent}exceptional fibers: {fibers}");
}

fn conical_json(v: &ConicalVerdict) -> Value {
    let mechanism = v.mechanism.as_ref().map(|m| m.as_str());
    let witness = match &v.mechanism {
        Some(Mechanism::Theorem1_5 { action, generator, .. }) => json!({
            "alpha": action.alpha,
            "beta": action.beta,
            "generator": monomial_json(generator),
        }),
        _ => Value::Null,
    };
    json!({"verdict": v.kind.as_str(), "mechanism": mechanism, "witness": witness})
}

fn conical_text(v: &ConicalVerdict) -> String {
    let mut out = format!("verdict: {}\n", v.kind.as_str());
    match &v.mechanism {
        Some(Mechanism::Theorem1 { weights }) => {
            let (second, lowest) = weights.two_lowest();
            let _ = writeln!(out, "mechanism: theorem_1");
            let _ = writeln!(out, "weights: {weights} (two lowest {second} != {lowest})");
        }
        Some(Mechanism::Theorem1_5 { weights, action, generator }) => {
            let _ = writeln!(out, "mechanism: theorem_1_5");
            let _ = writeln!(out, "weights: {weights}");
            let _ = writeln!(
                out,
                "witness: alpha={} beta={} generator={generator}",
                action.alpha, action.beta
            );
        }
        None => {}
    }
    out
}

fn compare_json(c: &CompareVerdict) -> Value {
    let certificate = match &c.certificate {
        Some(cert) => json!({
            "side": cert.side.as_str(),
            "lhs": ratio_json(&cert.lhs),
            "rhs": ratio_json(&cert.rhs),
        }),
        None => Value::Null,
    };
    json!({"verdict": c.kind.as_str(), "certificate": certificate})
}

fn compare_text(c: &CompareVerdict) -> String {
    let mut out = format!("verdict: {}\n", c.kind.as_str());
    if let Some(cert) = &c.certificate {
        let _ = writeln!(out, "certificate: {} {} > {}", cert.side.as_str(), cert.lhs, cert.rhs);
    }
    out
}

fn corollary_side_json(s: &CorollarySide) -> Value {
    json!({
        "exponents": s.triple.exponents(),
        "weights": weights_json(&s.weights),
        "link": link_json(&s.link),
    })
}

fn envelope(command: &str, input: Value, result: Value) -> String {
    let mut obj = Map::new();
    obj.insert("command".into(), Value::String(command.into()));
    obj.insert("input".into(), input);
    obj.insert("result".into(), result);
    let mut text = Value::Object(obj).to_string();
    text.push('\n');
    text
}

fn run(args: &Args) -> Result<String> {
    let limits = Limits {
        max_n: args.max_n,
        max_hilbert_n: args.max_hilbert_n,
    };
    match &args.verb {
        Verb::Weights { source } => {
            let source = parse_source(source, &limits)?;
            if matches!(source, Source::Weights(_)) {
                return Err(Error::InvalidArgument(
                    "`weights` takes a brieskorn or cyclic source".into(),
                ));
            }
            let w = source_weights(&source);
            let normalized = w.normalize();
            if args.json {
                let result = json!({"weights": weights_json(&w), "normalized": weights_json(&normalized)});
                Ok(envelope("weights", source_json(&source), result))
            } else {
                Ok(format!(
                    "{}\nweights: {w}\nnormalized: {normalized}\n",
                    source_text(&source)
                ))
            }
        }
        Verb::Generators { n, q } => {
            let cq = parse_cyclic(n, q, &limits)?;
            let gens = minimal_generators(&cq);
            let weights = diagonal_weights(&cq);
            let source = Source::Cyclic(cq);
            if args.json {
                let list: Vec<Value> = gens.elements().iter().map(monomial_json).collect();
                let result = json!({"generators": list, "weights": weights_json(&weights)});
                Ok(envelope("generators", source_json(&source), result))
            } else {
                let mut out = format!("{}\ngenerators (u1^a u2^b as (a,b), weight = a+b):\n", source_text(&source));
                for m in gens.elements() {
                    let _ = writeln!(out, "  {m}  weight {}", m.weight());
                }
                let _ = writeln!(out, "weights: {weights}");
                Ok(out)
            }
        }
        Verb::Classify { source } => {
            let source = parse_source(source, &limits)?;
            let verdict = match &source {
                Source::Cyclic(cq) => conical_cyclic(cq),
                other => conical_from_weights(&source_weights(other)),
            };
            if args.json {
                Ok(envelope("classify", source_json(&source), conical_json(&verdict)))
            } else {
                Ok(format!("{}\n{}", source_text(&source), conical_text(&verdict)))
            }
        }
        Verb::Compare { left, right } => {
            let left = parse_source(left, &limits)?;
            let right = parse_source(right, &limits)?;
            let (v, w) = (source_weights(&left), source_weights(&right));
            let verdict = compare_weights(&v, &w);
            if args.json {
                let input = json!({"left": source_json(&left), "right": source_json(&right)});
                Ok(envelope("compare", input, compare_json(&verdict)))
            } else {
                Ok(format!(
                    "left: {}\nright: {}\n{}",
                    source_with_weights(&left, &v),
                    source_with_weights(&right, &w),
                    compare_text(&verdict)
                ))
            }
        }
        Verb::Link { a1, a2, a3 } => {
            let triple = parse_triple(a1, a2, a3)?;
            let link = seifert_data(&triple);
            let source = Source::Brieskorn(triple);
            if args.json {
                Ok(envelope("link", source_json(&source), link_json(&link)))
            } else {
                let mut out = format!("{}\n", source_text(&source));
                link_text(&link, &mut out, "");
                Ok(out)
            }
        }
        Verb::Corollary => {
            let r = corollary_report();
            if args.json {
                let result = json!({
                    "v": corollary_side_json(&r.v),
                    "w": corollary_side_json(&r.w),
                    "same_link": r.link_comparison.as_str(),
                    "compare": compare_json(&r.compare),
                    "paper_stated_genus": r.stated_genus,
                    "computed_genus": big(&r.computed_genus),
                });
                Ok(envelope("corollary", Value::Null, result))
            } else {
                let mut out = String::new();
                for (name, side) in [("V", &r.v), ("W", &r.w)] {
                    let _ = writeln!(out, "{name}: {}", source_text(&Source::Brieskorn(side.triple)));
                    let _ = writeln!(out, "  weights: {}", side.weights);
                    link_text(&side.link, &mut out, "  ");
                }
                let _ = writeln!(out, "links: {}", r.link_comparison.as_str());
                let _ = writeln!(out, "computed genus: {}", r.computed_genus);
                let _ = writeln!(out, "stated genus: {}", r.stated_genus);
                out.push_str(&compare_text(&r.compare));
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        parse_and_run(std::iter::once("wsing").chain(args.iter().copied()))
    }

    #[test]
    fn weight_list_parsing() {
        let w = parse_weight_list("2,3,2").unwrap();
        assert_eq!(w.to_string(), "(3,2,2)");
        assert!(matches!(parse_weight_list("5"), Err(Error::InvalidWeights(_))));
        assert!(matches!(parse_weight_list("3,-1"), Err(Error::InvalidWeights(_))));
        assert!(matches!(parse_weight_list("3,0"), Err(Error::InvalidWeights(_))));
        assert!(matches!(parse_weight_list("3, 2"), Err(Error::InvalidArgument(_))));
        assert!(matches!(parse_weight_list("3,,2"), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn source_arity_and_mismatch() {
        assert_eq!(run_args(&["weights", "brieskorn", "2", "3"]).code, 2);
        assert_eq!(run_args(&["weights", "weights", "3,2,1"]).code, 2);
        assert_eq!(run_args(&["classify", "torus", "1"]).code, 2);
        assert_eq!(run_args(&["generators", "8"]).code, 2);
    }

    #[test]
    fn limits_are_enforced() {
        let out = run_args(&["generators", "501", "2"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("--max-hilbert-n"));
        assert_eq!(run_args(&["--max-hilbert-n", "600", "generators", "501", "2"]).code, 0);
        let out = run_args(&["--max-hilbert-n", "9000", "generators", "5003", "2"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("--max-n"));
    }
}
