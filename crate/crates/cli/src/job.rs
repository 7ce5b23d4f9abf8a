//! Command-line job description and its validation.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use macbax_core::partition::{partitions_up_to, Partition};
use macbax_core::symfunc::SymFunc;
use macbax_core::{Error, RatFunc, Var};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Macdonald,
    Qwhittaker,
    Jack,
}

/// Specialization of the family's deformation parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    Symbolic,
    /// t = q^k
    TPow(i64),
    Kappa(u32),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Symbolic => write!(f, "symbolic"),
            Param::TPow(k) => write!(f, "t=q^{}", k),
            Param::Kappa(k) => write!(f, "kappa={}", k),
        }
    }
}

/// Errors that map to exit code 2.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Compute(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(s) => write!(f, "invalid job: {}", s),
            CliError::Compute(e) => write!(f, "{}", e),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

pub fn invalid<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Invalid(msg.into()))
}

#[derive(Args, Debug, Clone)]
pub struct JobArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Comma-separated parts, e.g. 2,1,0
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// t = q^k, written q^k
    #[arg(long, conflicts_with_all = ["kappa", "symbolic"])]
    pub t_spec: Option<String>,
    #[arg(long, conflicts_with = "symbolic")]
    pub kappa: Option<u32>,
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<i64>,
    #[arg(long)]
    pub q_order: Option<u32>,
    #[arg(long)]
    pub z_order: Option<u32>,
    #[arg(long)]
    pub max_degree: Option<u32>,
    #[arg(long)]
    pub max_weight: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| CliError::Invalid(format!("bad part {:?}", x))))
        .collect::<Result<_, _>>()?;
    Partition::new(&parts).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn parse_t_spec(s: &str) -> Result<i64, CliError> {
    let k = match s.trim() {
        "q" => Some(1),
        x => x.strip_prefix("q^").and_then(|k| k.trim_matches(|c| c == '(' || c == ')').parse::<i64>().ok()),
    };
    match k {
        Some(k) if k >= 1 => Ok(k),
        _ => invalid(format!("--t-spec must be q^k with integer k >= 1, got {:?}", s)),
    }
}

/// Serialized parameters of a job; excludes anything that does not change
/// the result (jobs, out).
#[derive(Serialize, Debug, Clone, Default)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
    pub regime: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_weight: Option<u32>,
}

impl JobArgs {
    pub fn param(&self) -> Result<Param, CliError> {
        if let Some(s) = &self.t_spec {
            return Ok(Param::TPow(parse_t_spec(s)?));
        }
        if let Some(k) = self.kappa {
            if k == 0 {
                return invalid("--kappa must be a positive integer");
            }
            return Ok(Param::Kappa(k));
        }
        Ok(Param::Symbolic)
    }

    pub fn family(&self) -> Result<Family, CliError> {
        self.family.ok_or_else(|| CliError::Invalid("--family is required".into()))
    }

    pub fn rank(&self) -> Result<usize, CliError> {
        match self.rank {
            Some(n) if n >= 1 => Ok(n),
            Some(_) => invalid("--rank must be at least 1"),
            None => invalid("--rank is required"),
        }
    }

    pub fn partition(&self) -> Result<Option<Partition>, CliError> {
        let Some(s) = &self.partition else { return Ok(None) };
        let p = parse_partition(s)?;
        if let Some(n) = self.rank {
            if p.len() > n {
                return invalid(format!("partition {:?} has more than {} parts", p, n));
            }
        }
        Ok(Some(p))
    }

    pub fn required_partition(&self) -> Result<Partition, CliError> {
        self.partition()?.ok_or_else(|| CliError::Invalid("--partition is required".into()))
    }

    pub fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Invalid(format!("{} is required here", flag)))
    }

    /// Checks the parameter spec against the family.
    pub fn family_param(&self) -> Result<(Family, Param), CliError> {
        let f = self.family()?;
        let p = self.param()?;
        match (f, p) {
            (Family::Macdonald, Param::Kappa(_)) => invalid("--kappa does not apply to macdonald"),
            (Family::Qwhittaker, Param::Kappa(_)) => invalid("--kappa does not apply to qwhittaker"),
            (Family::Qwhittaker, Param::TPow(_)) => invalid("qwhittaker has t = 0; --t-spec does not apply"),
            (Family::Jack, Param::TPow(_)) => invalid("--t-spec does not apply to jack"),
            _ => Ok((f, p)),
        }
    }

    pub fn params(&self) -> Params {
        Params {
            family: self.family,
            rank: self.rank,
            partition: self.partition.as_deref().and_then(|s| parse_partition(s).ok()).map(|p| p.parts().to_vec()),
            regime: self.param().map(|p| p.to_string()).unwrap_or_default(),
            gamma: self.gamma,
            q_order: self.q_order,
            z_order: self.z_order,
            max_degree: self.max_degree,
            max_weight: self.max_weight,
        }
    }

    /// Rows of a table: the given partition, or all λ with at most n parts
    /// and λ₁ ≤ W.
    pub fn row_partitions(&self, n: usize) -> Result<Vec<Partition>, CliError> {
        if let Some(p) = self.partition()? {
            return Ok(vec![p]);
        }
        let w = JobArgs::need(self.max_weight, "--partition or --max-weight")?;
        let mut ps: Vec<Partition> = partitions_up_to(w * n as u32, n).into_iter().filter(|p| p.part(0) <= w).collect();
        ps.sort_by(|a, b| a.cmp_graded(b));
        Ok(ps)
    }

    /// Sweep partitions: at most n parts and |λ| ≤ W.
    pub fn sweep_partitions(&self, n: usize) -> Result<Vec<Partition>, CliError> {
        if let Some(p) = self.partition()? {
            return Ok(vec![p]);
        }
        let w = JobArgs::need(self.max_weight, "--max-weight")?;
        let mut ps = partitions_up_to(w, n);
        ps.sort_by(|a, b| a.cmp_graded(b));
        Ok(ps)
    }
}

pub fn specialize(c: &RatFunc, p: Param) -> Result<RatFunc, Error> {
    match p {
        Param::Symbolic => Ok(c.clone()),
        Param::TPow(k) => c.subs_mono(Var::T, [2 * k as i32, 0, 0, 0]),
        Param::Kappa(k) => c.subs_int(Var::K, k as i64),
    }
}

pub fn specialize_sym(f: &SymFunc, p: Param) -> Result<SymFunc, Error> {
    f.try_map(|c| specialize(c, p))
}
