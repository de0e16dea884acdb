//! Deterministic JSON emission: fixed field order and a fixed 12-significant
//! digit float rendering, so identical inputs produce byte-identical output.
//! Parsing goes through serde_json.

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Num(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
    /// Object with runtime keys (maps with data-dependent keys).
    DynObj(Vec<(String, Json)>),
}

impl Json {
    pub fn arr<I: IntoIterator<Item = Json>>(items: I) -> Json {
        Json::Arr(items.into_iter().collect())
    }

    pub fn str(s: &str) -> Json {
        Json::Str(s.to_string())
    }

    pub fn write(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Json::Num(v) => out.push_str(&fmt_f64(*v)),
            Json::Str(s) => write_string(s, out),
            Json::Arr(items) => {
                out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (k, (name, value)) in fields.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    write_string(name, out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
            Json::DynObj(fields) => {
                out.push('{');
                for (k, (name, value)) in fields.iter().enumerate() {
                    if k > 0 {
                        out.push(',');
                    }
                    write_string(name, out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }

    pub fn to_string_pretty(&self) -> String {
        // one canonical compact form plus a trailing newline
        let mut s = String::new();
        self.write(&mut s);
        s.push('\n');
        s
    }
}

fn write_string(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

/// Render with 12 significant digits. Integral values below 2^53 print as
/// integers; magnitudes far from 1 use exponent notation. The rendering is
/// a fixed point of emit-parse-emit.
pub fn fmt_f64(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        // the formats never carry non-finite values; guard anyway
        return "null".to_string();
    }
    if v == v.trunc() && v.abs() < 9.0e15 {
        return format!("{}", v as i64);
    }
    // 12 significant digits via the exponential form
    let exp_form = format!("{:.11e}", v);
    let (mantissa, exp) = exp_form.split_once('e').expect("exponential form");
    let exp: i32 = exp.parse().expect("exponent");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (-4..12).contains(&exp) {
        // positional rendering
        if exp >= 0 {
            let point = (exp + 1) as usize;
            if digits.len() <= point {
                out.push_str(digits);
                for _ in digits.len()..point {
                    out.push('0');
                }
            } else {
                out.push_str(&digits[..point]);
                out.push('.');
                out.push_str(&digits[point..]);
            }
        } else {
            out.push_str("0.");
            for _ in 0..(-exp - 1) {
                out.push('0');
            }
            out.push_str(digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        let _ = write!(out, "e{exp}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rendering_is_idempotent() {
        for v in [
            core::f64::consts::PI,
            1.0 / 3.0,
            -0.25,
            1234.5,
            1e-7,
            -3.5e17,
            42.0,
            0.123456789012345,
        ] {
            let a = fmt_f64(v);
            let reparsed: f64 = a.parse().unwrap();
            let b = fmt_f64(reparsed);
            assert_eq!(a, b, "not a fixed point for {v}");
        }
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(64.0), "64");
        assert_eq!(fmt_f64(0.5), "0.5");
    }

    #[test]
    fn object_field_order_is_fixed() {
        let j = Json::Obj(vec![
            ("b", Json::Int(1)),
            ("a", Json::arr([Json::Bool(true), Json::Null])),
        ]);
        let mut s = String::new();
        j.write(&mut s);
        assert_eq!(s, r#"{"b":1,"a":[true,null]}"#);
    }
}
