//! expand, table and baxter.

use macbax_core::baxter::{baxter_eigenvalue, baxter_eigenvalue_at, dual_baxter_apply};
use macbax_core::jack::{jack_baxter_eigenvalue, jack_dual_baxter_apply, jack_gs, sekiguchi_eigenvalue};
use macbax_core::macdonald::{macdonald_eigenvalue, macdonald_gs};
use macbax_core::partition::Partition;
use macbax_core::qwhittaker::{qwhit, qwhit_baxter_apply, qwhit_dual_eigenvalue, toda_dual_eigenvalue};
use macbax_core::symfunc::SymFunc;
use macbax_core::RatFunc;
use serde_json::{json, Value};

use crate::cache;
use crate::job::{invalid, specialize, specialize_sym, CliError, Family, JobArgs, Param};
use crate::json::{encode_coeff, encode_partition, encode_symfunc};

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Macdonald => "macdonald",
        Family::Qwhittaker => "qwhittaker",
        Family::Jack => "jack",
    }
}

/// The monic family polynomial in rank n under the regime.
pub fn family_poly(f: Family, lam: &Partition, n: usize, p: Param) -> Result<SymFunc, CliError> {
    let s = match f {
        Family::Macdonald => macdonald_gs(lam, n)?,
        Family::Qwhittaker => qwhit(lam, n)?,
        Family::Jack => jack_gs(lam, n)?,
    };
    Ok(specialize_sym(&s, p)?)
}

fn header(cmd: &str, a: &JobArgs) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(cmd));
    m.insert("parameters".into(), serde_json::to_value(a.params()).expect("params serialize"));
    m
}

pub fn expand(a: &JobArgs) -> Result<Value, CliError> {
    let (f, p) = a.family_param()?;
    let n = a.rank()?;
    let lam = a.required_partition()?;
    let compute = || family_poly(f, &lam, n, p).map(|s| encode_symfunc(&s));
    let poly = match cache::dir_from_env() {
        Some(dir) => {
            let key = cache::key(family_name(f), &p.to_string(), n, lam.parts());
            match cache::load(&dir, &key) {
                Some(v) => v,
                None => {
                    let v = compute()?;
                    cache::store(&dir, &key, &v).map_err(|e| CliError::Invalid(format!("cache {}: {}", dir.display(), e)))?;
                    v
                }
            }
        }
        None => compute()?,
    };
    let mut m = header("expand", a);
    m.insert("polynomial".into(), poly);
    Ok(Value::Object(m))
}

fn coeffs(cs: &[RatFunc], p: Param) -> Result<Value, CliError> {
    let v: Result<Vec<Value>, CliError> = cs.iter().map(|c| Ok(encode_coeff(&specialize(c, p)?))).collect();
    Ok(Value::Array(v?))
}

/// Hamiltonian eigenvalues: e_r(t^ϱq^λ) for Macdonald, q^{λ_{n−r+1}+…+λ_n}
/// for the dual q-Toda operators, and the X-coefficients of the Sekiguchi
/// eigenvalue ∏(X+λᵢ+ϱᵢκ) for Jack.
pub fn table(a: &JobArgs) -> Result<Value, CliError> {
    let (f, p) = a.family_param()?;
    let n = a.rank()?;
    let mut rows = Vec::new();
    for lam in a.row_partitions(n)? {
        let ev: Vec<RatFunc> = match f {
            Family::Macdonald => (1..=n).map(|r| macdonald_eigenvalue(&lam, r, n)).collect(),
            Family::Qwhittaker => (1..=n).map(|r| toda_dual_eigenvalue(&lam, r, n)).collect(),
            Family::Jack => sekiguchi_eigenvalue(&lam, n),
        };
        rows.push(json!({ "partition": encode_partition(&lam), "eigenvalues": coeffs(&ev, p)? }));
    }
    let mut m = header("table", a);
    let op = match f {
        Family::Macdonald => "macdonald M_r, r = 1..n",
        Family::Qwhittaker => "dual q-Toda H_r, r = 1..n",
        Family::Jack => "sekiguchi D(X), coefficients of X^0..X^n",
    };
    m.insert("operator".into(), json!(op));
    m.insert("rows".into(), Value::Array(rows));
    Ok(Value::Object(m))
}

/// With --z-order: z-coefficients of the z-type operator on the family
/// polynomial. Otherwise: the γ-type eigenvalue table.
pub fn baxter(a: &JobArgs) -> Result<Value, CliError> {
    let (f, p) = a.family_param()?;
    let n = a.rank()?;
    let mut m = header("baxter", a);
    if let Some(zo) = a.z_order {
        let lam = a.required_partition()?;
        let cs = match f {
            Family::Macdonald => dual_baxter_apply(&lam, n, zo)?,
            Family::Qwhittaker => qwhit_baxter_apply(&lam, n, zo)?,
            Family::Jack => jack_dual_baxter_apply(&lam, n, zo)?,
        };
        let v: Result<Vec<Value>, CliError> = cs.iter().map(|c| Ok(encode_symfunc(&specialize_sym(c, p)?))).collect();
        m.insert("z_coefficients".into(), Value::Array(v?));
        return Ok(Value::Object(m));
    }
    let gamma = JobArgs::need(a.gamma, "--gamma (or --z-order)")?;
    let mut rows = Vec::new();
    for lam in a.row_partitions(n)? {
        let v = match (f, p) {
            (Family::Macdonald, Param::TPow(k)) => baxter_eigenvalue_at(&lam, gamma, n, k)?,
            (Family::Macdonald, _) => match baxter_eigenvalue(&lam, gamma, n) {
                None => RatFunc::zero(),
                Some(g) => g.value().map_err(|e| {
                    CliError::Invalid(format!("symbolic eigenvalue does not close ({}); pass --t-spec", e))
                })?,
            },
            (Family::Qwhittaker, _) => qwhit_dual_eigenvalue(&lam, gamma, n),
            (Family::Jack, Param::Kappa(k)) => jack_baxter_eigenvalue(&lam, gamma, n, k)?,
            (Family::Jack, _) => return invalid("jack baxter eigenvalues need --kappa"),
        };
        rows.push(json!({ "partition": encode_partition(&lam), "value": encode_coeff(&v) }));
    }
    m.insert("rows".into(), Value::Array(rows));
    Ok(Value::Object(m))
}
