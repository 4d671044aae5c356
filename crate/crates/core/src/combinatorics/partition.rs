use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer partition with parts stored in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Pairs (part, multiplicity), largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of k-tuples of partitions of total size n: the coefficient of x^n
/// in ∏_j (1 - x^j)^{-k}.
pub fn colored_partition_count(n: usize, k: u32) -> u128 {
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for _ in 0..k {
        for j in 1..=n {
            for i in j..=n {
                c[i] += c[i - j];
            }
        }
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    // independent recursive count p(n, max part)
    fn count(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|p| count(n - p, p)).sum()
    }

    #[test]
    fn small_counts() {
        assert_eq!(partitions(0), vec![Partition::new(vec![])]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        for n in 0..=15 {
            assert_eq!(partitions(n).len(), count(n, n));
        }
    }

    #[test]
    fn ordering_is_descending_and_unique() {
        let ps = partitions(8);
        for w in ps.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert_eq!(ps[0].parts(), &[8]);
        assert_eq!(ps.last().unwrap().parts(), &[1; 8]);
        assert!(ps.iter().all(|p| p.n() == 8));
    }

    #[test]
    fn multiplicities() {
        let p = Partition::new(vec![1, 2, 2, 1, 3]);
        assert_eq!(p.parts(), &[3, 2, 2, 1, 1]);
        assert_eq!(p.multiplicities(), vec![(3, 1), (2, 2), (1, 2)]);
        assert_eq!(p.to_string(), "(3,2,2,1,1)");
    }

    #[test]
    fn colored_counts() {
        assert_eq!(colored_partition_count(6, 1), 11);
        assert_eq!(colored_partition_count(2, 2), 5);
        assert_eq!(colored_partition_count(6, 3), 221);
        assert_eq!(colored_partition_count(6, 4), 574);
    }
}
