//! Exact JSON encoding of coefficients and symmetric functions.
//!
//! A coefficient is `{"num": [[c, eq, et], ...], "den": [...]}`. `c` is a
//! decimal string; exponents are integers, or `"n/2"` strings off the
//! integer lattice. Coefficients involving κ carry a fourth exponent.

use macbax_core::partition::Partition;
use macbax_core::poly::{Mono, Poly, NVARS};
use macbax_core::symfunc::SymFunc;
use macbax_core::{RatFunc, Var};
use num_bigint::BigInt;
use serde_json::{json, Value};

fn half(e: u32) -> Value {
    if e % 2 == 0 {
        json!(e / 2)
    } else {
        json!(format!("{}/2", e))
    }
}

fn parse_half(v: &Value) -> Result<u32, String> {
    if let Some(n) = v.as_u64() {
        return u32::try_from(2 * n).map_err(|_| format!("exponent {} too large", n));
    }
    let s = v.as_str().ok_or_else(|| format!("bad exponent {}", v))?;
    match s.strip_suffix("/2") {
        Some(n) => n.parse().map_err(|_| format!("bad exponent {:?}", s)),
        None => s.parse::<u32>().map(|n| 2 * n).map_err(|_| format!("bad exponent {:?}", s)),
    }
}

/// Number of exponent slots needed for a coefficient.
fn width(r: &RatFunc) -> usize {
    if r.uses_var(Var::U) {
        4
    } else if r.uses_var(Var::K) {
        3
    } else {
        2
    }
}

fn encode_poly(p: &Poly, w: usize) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut t = vec![json!(c.to_string())];
            t.extend((0..w).map(|i| half(m.get(i))));
            Value::Array(t)
        })
        .collect();
    Value::Array(terms)
}

pub fn encode_coeff(r: &RatFunc) -> Value {
    let w = width(r);
    json!({ "num": encode_poly(r.numer(), w), "den": encode_poly(r.denom(), w) })
}

fn decode_poly(v: &Value) -> Result<Poly, String> {
    let arr = v.as_array().ok_or("polynomial must be an array")?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let t = t.as_array().ok_or("term must be an array")?;
        if t.is_empty() || t.len() > NVARS + 1 {
            return Err(format!("term has {} entries", t.len()));
        }
        let c: BigInt = t[0].as_str().ok_or("coefficient must be a string")?.parse().map_err(|_| format!("bad integer {}", t[0]))?;
        let mut e = [0u32; NVARS];
        for (i, x) in t[1..].iter().enumerate() {
            e[i] = parse_half(x)?;
        }
        terms.push((Mono::new(e), c));
    }
    Ok(Poly::from_terms(terms))
}

pub fn decode_coeff(v: &Value) -> Result<RatFunc, String> {
    let num = decode_poly(v.get("num").ok_or("missing num")?)?;
    let den = decode_poly(v.get("den").ok_or("missing den")?)?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(RatFunc::new(num, den))
}

pub fn encode_partition(p: &Partition) -> Value {
    json!(p.parts())
}

/// Terms sorted graded-lex on partitions.
pub fn encode_symfunc(f: &SymFunc) -> Value {
    let mut terms: Vec<(&Partition, &RatFunc)> = f.terms().collect();
    terms.sort_by(|a, b| a.0.cmp_graded(b.0));
    Value::Array(
        terms
            .into_iter()
            .map(|(p, c)| json!({ "partition": encode_partition(p), "coeff": encode_coeff(c) }))
            .collect(),
    )
}

pub fn decode_symfunc(v: &Value, rank: usize) -> Result<SymFunc, String> {
    let arr = v.as_array().ok_or("polynomial must be an array")?;
    let mut f = SymFunc::zero(rank);
    for t in arr {
        let parts: Vec<i64> = t
            .get("partition")
            .and_then(Value::as_array)
            .ok_or("missing partition")?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| format!("bad part {}", x)))
            .collect::<Result<_, _>>()?;
        let p = Partition::new(&parts).map_err(|e| e.to_string())?;
        if p.len() > rank {
            return Err(format!("partition {:?} longer than rank {}", p, rank));
        }
        f.add_term(p, decode_coeff(t.get("coeff").ok_or("missing coeff")?)?);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use macbax_core::ratfunc::{int, kappa, q, t};

    #[test]
    fn half_exponents() {
        assert_eq!(half(3), json!("3/2"));
        assert_eq!(half(4), json!(2));
        assert_eq!(parse_half(&json!("3/2")).unwrap(), 3);
        assert_eq!(parse_half(&json!(2)).unwrap(), 4);
        assert!(parse_half(&json!("x")).is_err());
    }

    #[test]
    fn coefficient_round_trip() {
        let half_q = RatFunc::lmono([1, 0, 0, 0]);
        for r in [
            int(0),
            int(-7),
            int(1).sub(&t()).div(&int(1).sub(&q().mul(&t()))),
            half_q.mul(&t()).add(&int(3)),
            kappa().add(&int(1)).div(&kappa().scale_int(2)),
            q().pow(-2),
        ] {
            let v = encode_coeff(&r);
            assert_eq!(decode_coeff(&v).unwrap(), r, "{}", v);
        }
        let v = encode_coeff(&int(1).sub(&q()));
        let mut num: Vec<String> = v["num"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        num.sort();
        assert_eq!(num, vec![r#"["-1",1,0]"#, r#"["1",0,0]"#]);
        assert_eq!(v["den"], json!([["1", 0, 0]]));
    }
}
