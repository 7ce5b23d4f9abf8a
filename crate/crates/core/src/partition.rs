//! Integer partitions: orders, conjugation, interlacing and enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::Error;

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// not stored; `part(i)` returns 0 past the end.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[i64]) -> Result<Partition, Error> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{:?} is not weakly decreasing", parts)));
            }
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition(format!("{:?} has a negative part", parts)));
        }
        Ok(Partition::from_sorted(parts.iter().map(|&p| p as u32).collect()))
    }

    /// Builds from parts known to be weakly decreasing.
    pub fn from_sorted(mut parts: Vec<u32>) -> Partition {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(parts: &[u32]) -> Partition {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(v)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn row(m: u32) -> Partition {
        Partition::from_sorted(vec![m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        (0..n.max(self.len())).map(|i| self.part(i) as i64).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Multiplicities m_k for k = 1..=λ₁.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.part(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// z_λ = ∏ k^{m_k} m_k!.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (k, &mk) in self.multiplicities().iter().enumerate().skip(1) {
            for i in 1..=mk {
                z *= BigInt::from(k) * BigInt::from(i);
            }
        }
        z
    }

    /// Σ (i−1) λᵢ.
    pub fn n_stat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Subtracts `c` from each of the first `n` parts.
    pub fn shift_down(&self, c: u32, n: usize) -> Option<Partition> {
        let p = self.padded(n);
        if p.len() > n || p.iter().any(|&x| x < c as i64) {
            return None;
        }
        Some(Partition::from_sorted(p.iter().map(|&x| (x - c as i64) as u32).collect()))
    }

    /// Adds `c` to each of the first `n` parts.
    pub fn shift_up(&self, c: u32, n: usize) -> Partition {
        Partition::from_sorted(self.padded(n).iter().map(|&x| x as u32 + c).collect())
    }

    /// The first `l` parts.
    pub fn truncate(&self, l: usize) -> Partition {
        Partition::from_sorted(self.0.iter().take(l).copied().collect())
    }

    /// Graded order: by weight, then reverse lexicographic so that larger
    /// partitions of the same weight come first.
    pub fn cmp_graded(&self, o: &Partition) -> Ordering {
        self.weight().cmp(&o.weight()).then_with(|| o.0.cmp(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// λ ≤ μ in dominance order.
pub fn dominance_leq(lam: &Partition, mu: &Partition) -> bool {
    let n = lam.len().max(mu.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..n {
        a += lam.part(i) as u64;
        b += mu.part(i) as u64;
        if a > b {
            return false;
        }
    }
    true
}

/// μ₁ ≥ λ₁ ≥ μ₂ ≥ λ₂ ≥ … with both padded to a common length.
pub fn interlaces(mu: &Partition, lam: &Partition) -> bool {
    let n = mu.len().max(lam.len());
    (0..n).all(|i| mu.part(i) >= lam.part(i) && lam.part(i) >= mu.part(i + 1))
}

/// Partitions of `w` with at most `max_len` parts, in decreasing
/// lexicographic order.
pub fn partitions_of(w: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            rec(rem - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    rec(w, w, max_len, &mut cur, &mut out);
    out
}

/// All partitions of weight ≤ `w` with at most `max_len` parts, graded.
pub fn partitions_up_to(w: u32, max_len: usize) -> Vec<Partition> {
    (0..=w).flat_map(|d| partitions_of(d, max_len)).collect()
}

/// μ of length ≤ n with μᵢ ≥ λᵢ ≥ μ_{i+1} and |μ| − |λ| = `extra`.
pub fn interlacing_above(lam: &Partition, n: usize, extra: u32) -> Vec<Partition> {
    let l = lam.padded(n);
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, rem: i64, l: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        let n = l.len();
        if i == n {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.iter().map(|&x| x as u32).collect()));
            }
            return;
        }
        let lo = l[i];
        let hi = if i == 0 { l[0] + rem } else { (l[i - 1]).min(l[i] + rem) };
        for v in (lo..=hi).rev() {
            cur[i] = v;
            rec(i + 1, rem - (v - l[i]), l, cur, out);
        }
    }
    if l.len() > n {
        return out;
    }
    rec(0, extra as i64, &l, &mut cur, &mut out);
    out
}

/// μ of length ≤ n−1 interlacing below λ (λ₁ ≥ μ₁ ≥ λ₂ ≥ … ≥ μ_{n−1} ≥ λ_n).
pub fn interlacing_below(lam: &Partition, n: usize) -> Vec<Partition> {
    let l = lam.padded(n);
    if l.len() > n || n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n - 1];
    fn rec(i: usize, l: &[i64], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for v in (l[i + 1]..=l[i]).rev() {
            cur[i] = v as u32;
            rec(i + 1, l, cur, out);
        }
    }
    rec(0, &l, &mut cur, &mut out);
    out
}

/// A linear extension of dominance on partitions of equal weight: larger
/// n-statistic first is smaller in dominance.
pub fn dominance_extension(parts: &mut [Partition]) {
    parts.sort_by(|a, b| b.n_stat().cmp(&a.n_stat()).then_with(|| a.0.cmp(&b.0)));
}

/// A second linear extension: reverse lexicographic.
pub fn lex_extension(parts: &mut [Partition]) {
    parts.sort_by(|a, b| a.0.cmp(&b.0));
}
