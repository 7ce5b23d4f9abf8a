//! Functions on partitions and the shift operators acting on them.

use std::collections::BTreeMap;

use crate::partition::Partition;
use crate::ratfunc::RatFunc;
use crate::symfunc::SymFunc;

/// Values that can be combined linearly over ℚ(q,t,κ).
pub trait Linear: Clone {
    fn zero_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn scale(&self, c: &RatFunc) -> Self;
    fn is_zero(&self) -> bool;
}

impl Linear for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero()
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn scale(&self, c: &RatFunc) -> Self {
        self.mul(c)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Linear for SymFunc {
    fn zero_like(&self) -> Self {
        SymFunc::zero(self.rank())
    }
    fn add(&self, o: &Self) -> Self {
        SymFunc::add(self, o)
    }
    fn scale(&self, c: &RatFunc) -> Self {
        SymFunc::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
}

/// A finitely supported function on partitions of length ≤ n; zero off the
/// support.
pub type PartitionFunction<V> = BTreeMap<Partition, V>;

/// A shift operator: for λ (padded to n) returns the pairs (λ + s, c) with
/// (F ↦ Σ c·F(λ + s)). Shifts `s` are 0/1 vectors.
pub type ShiftTerms<'a> = dyn Fn(&[i64]) -> Vec<(Vec<i64>, RatFunc)> + 'a;

/// All r-element subsets of 0..n as sorted index lists.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == r {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

/// λ + ε_I as a tuple.
pub fn shifted(lam: &[i64], idx: &[usize]) -> Vec<i64> {
    let mut v = lam.to_vec();
    for &i in idx {
        v[i] += 1;
    }
    v
}

pub fn is_partition_tuple(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1]) && v.last().map_or(true, |&x| x >= 0)
}

/// Applies a 0/1-shift operator to F. Candidates λ are F's support points
/// minus every 0/1 vector, kept when they are partitions of length ≤ n.
pub fn apply_shift<V: Linear>(n: usize, f: &PartitionFunction<V>, terms: &ShiftTerms<'_>) -> PartitionFunction<V> {
    let mut cands = std::collections::BTreeSet::new();
    for mu in f.keys() {
        let m = mu.padded(n);
        for mask in 0u32..(1 << n) {
            let v: Vec<i64> = (0..n).map(|i| m[i] - ((mask >> i) & 1) as i64).collect();
            if is_partition_tuple(&v) {
                cands.insert(v);
            }
        }
    }
    let mut out = PartitionFunction::new();
    for lam in cands {
        let mut acc: Option<V> = None;
        for (s, c) in terms(&lam) {
            if c.is_zero() || !is_partition_tuple(&s) {
                continue;
            }
            let p = Partition::new(&s).expect("checked");
            if let Some(v) = f.get(&p) {
                let x = v.scale(&c);
                acc = Some(match acc {
                    Some(a) => a.add(&x),
                    None => x,
                });
            }
        }
        if let Some(a) = acc {
            if !a.is_zero() {
                out.insert(Partition::new(&lam).expect("checked"), a);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(shifted(&[1, 1], &[1]), vec![1, 2]);
        assert!(!is_partition_tuple(&[1, 2]));
    }

    #[test]
    fn shift_applies() {
        // (T F)(λ) = F(λ + e₁)
        let mut f = PartitionFunction::new();
        f.insert(Partition::new(&[2]).unwrap(), RatFunc::from_int(5));
        let op = |l: &[i64]| vec![(shifted(l, &[0]), RatFunc::one())];
        let g = apply_shift(2, &f, &op);
        assert_eq!(g.len(), 1);
        assert_eq!(g[&Partition::new(&[1]).unwrap()], RatFunc::from_int(5));
    }
}
