//! Output model shared by the JSON and text emitters, plus the parsers that
//! make the JSON forms round-trip.

use num_traits::One;
use ocnu::partition::Partition;
use ocnu::symfun::QSeries;
use ocnu::Rat;
use serde_json::{json, Map, Value};

/// Everything the CLI can print.
#[derive(Debug, Clone)]
pub enum Out {
    Part(Partition),
    /// Arbitrary-precision integer, kept as a decimal string.
    Int(String),
    Rat(Rat),
    Series(QSeries),
    Str(String),
    Bool(bool),
    Num(i64),
    List(Vec<Out>),
    Map(Vec<(&'static str, Out)>),
}

pub fn partition(p: &Partition) -> Out {
    Out::Part(p.clone())
}

fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_json(out: &Out) -> Value {
    match out {
        Out::Part(p) => Value::Array(p.parts().iter().map(|&x| json!(x)).collect()),
        Out::Int(s) => Value::String(s.clone()),
        Out::Rat(r) => json!({
            "num": r.numer().to_string(),
            "den": r.denom().to_string(),
        }),
        Out::Series(s) => json!({
            "trunc": s.trunc(),
            "coeffs": s.coeffs().iter().map(rat_string).collect::<Vec<_>>(),
        }),
        Out::Str(s) => Value::String(s.clone()),
        Out::Bool(b) => Value::Bool(*b),
        Out::Num(n) => json!(n),
        Out::List(items) => Value::Array(items.iter().map(to_json).collect()),
        Out::Map(entries) => {
            let mut map = Map::new();
            for (k, v) in entries {
                map.insert((*k).to_string(), to_json(v));
            }
            Value::Object(map)
        }
    }
}

pub fn to_text(out: &Out) -> String {
    let mut buf = String::new();
    render(out, 0, &mut buf);
    buf
}

fn scalar(out: &Out) -> Option<String> {
    match out {
        Out::Part(p) => Some(p.to_string()),
        Out::Int(s) => Some(s.clone()),
        Out::Rat(r) => Some(rat_string(r)),
        Out::Series(s) => Some(series_text(s)),
        Out::Str(s) => Some(s.clone()),
        Out::Bool(b) => Some(b.to_string()),
        Out::Num(n) => Some(n.to_string()),
        _ => None,
    }
}

fn series_text(s: &QSeries) -> String {
    let coeffs: Vec<String> = s.coeffs().iter().map(rat_string).collect();
    format!("[{}] + O(q^{})", coeffs.join(","), s.trunc() + 1)
}

fn render(out: &Out, indent: usize, buf: &mut String) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar(out) {
        buf.push_str(&pad);
        buf.push_str(&s);
        buf.push('\n');
        return;
    }
    match out {
        Out::List(items) => {
            if items.is_empty() {
                buf.push_str(&pad);
                buf.push_str("(none)\n");
            }
            for item in items {
                if let Some(s) = scalar(item) {
                    buf.push_str(&pad);
                    buf.push_str(&s);
                    buf.push('\n');
                } else {
                    render(item, indent, buf);
                }
            }
        }
        Out::Map(entries) => {
            for (k, v) in entries {
                if let Some(s) = scalar(v) {
                    buf.push_str(&pad);
                    buf.push_str(k);
                    buf.push_str(": ");
                    buf.push_str(&s);
                    buf.push('\n');
                } else {
                    buf.push_str(&pad);
                    buf.push_str(k);
                    buf.push_str(":\n");
                    render(v, indent + 1, buf);
                }
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
