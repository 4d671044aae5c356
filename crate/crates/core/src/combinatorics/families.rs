//! The partition families used by the lower-bound and Brauer arguments.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::partition::{partitions, Partition};
use crate::arith::require_prime;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Shapes `(a^b, 1^{m-ab})` with `a > 1`, plus `(1^m)`.
    W { m: usize },
    /// Shapes `(r^a, 1^b)` of `n` with `r > 1` coprime to `p`, plus `(1^n)`.
    A { p: u64, n: usize },
    /// Partitions of `n` whose parts are all coprime to `p`.
    X { p: u64, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFamily {
    pub kind: FamilyKind,
    pub members: Vec<Partition>,
}

impl PartitionFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Re-evaluates the defining predicate on one partition.
    pub fn admits(&self, lambda: &Partition) -> bool {
        match self.kind {
            FamilyKind::W { m } => lambda.n() == m && is_single_part_plus_ones(lambda, |_| true),
            FamilyKind::A { p, n } => {
                lambda.n() == n
                    && is_single_part_plus_ones(lambda, |r| !(r as u64).is_multiple_of(p))
            }
            FamilyKind::X { p, n } => {
                lambda.n() == n
                    && lambda
                        .parts()
                        .iter()
                        .all(|&r| !(r as u64).is_multiple_of(p))
            }
        }
    }
}

/// `(r^a, 1^b)` with `r > 1` satisfying `ok`, or all ones.
fn is_single_part_plus_ones(lambda: &Partition, ok: impl Fn(usize) -> bool) -> bool {
    let big: Vec<usize> = lambda.parts().iter().copied().filter(|&r| r > 1).collect();
    match big.first() {
        None => true,
        Some(&r) => ok(r) && big.iter().all(|&s| s == r),
    }
}

fn hooks_of(total: usize, r: usize) -> impl Iterator<Item = Partition> {
    (1..=total / r).map(move |a| {
        let mut parts = vec![r; a];
        parts.extend(std::iter::repeat_n(1, total - r * a));
        Partition::new(parts)
    })
}

fn sorted_desc(mut members: Vec<Partition>) -> Vec<Partition> {
    members.sort_unstable_by(|a, b| b.cmp(a));
    members
}

/// The family W_m. `m = 0` gives the single empty partition.
pub fn w_set(m: usize) -> PartitionFamily {
    let mut members = vec![Partition::new(vec![1; m])];
    for a in 2..=m {
        members.extend(hooks_of(m, a));
    }
    PartitionFamily {
        kind: FamilyKind::W { m },
        members: sorted_desc(members),
    }
}

pub fn a_set(p: u64, n: usize) -> Result<PartitionFamily> {
    require_prime(p)?;
    let mut members = vec![Partition::new(vec![1; n])];
    for r in (2..=n).filter(|&r| !(r as u64).is_multiple_of(p)) {
        members.extend(hooks_of(n, r));
    }
    Ok(PartitionFamily {
        kind: FamilyKind::A { p, n },
        members: sorted_desc(members),
    })
}

pub fn x_set(p: u64, n: usize) -> Result<PartitionFamily> {
    require_prime(p)?;
    let members = partitions(n)
        .into_iter()
        .filter(|l| l.parts().iter().all(|&r| !(r as u64).is_multiple_of(p)))
        .collect();
    Ok(PartitionFamily {
        kind: FamilyKind::X { p, n },
        members,
    })
}

/// `1 + Σ_{t=2}^m ⌊m/t⌋`.
pub fn w_count(m: usize) -> usize {
    1 + (2..=m).map(|t| m / t).sum::<usize>()
}

/// `1 + Σ_{1<r≤n, gcd(p,r)=1} ⌊n/r⌋`.
pub fn a_count(p: u64, n: usize) -> usize {
    1 + (2..=n)
        .filter(|&r| (r as u64).gcd(&p) == 1)
        .map(|r| n / r)
        .sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(f: &PartitionFamily) -> Vec<Vec<usize>> {
        f.members.iter().map(|l| l.parts().to_vec()).collect()
    }

    #[test]
    fn w_examples() {
        assert_eq!(parts(&w_set(1)), vec![vec![1]]);
        assert_eq!(
            parts(&w_set(4)),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(w_set(5).len(), 6);
        assert_eq!(w_set(0).len(), 1);
    }

    #[test]
    fn a_examples() {
        assert_eq!(parts(&a_set(2, 2).unwrap()), vec![vec![1, 1]]);
        assert_eq!(
            parts(&a_set(3, 4).unwrap()),
            vec![vec![4], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(parts(&a_set(2, 3).unwrap()), vec![vec![3], vec![1, 1, 1]]);
        assert!(a_set(4, 3).is_err());
    }

    #[test]
    fn closed_form_counts_and_predicates() {
        for m in 1..=40 {
            let w = w_set(m);
            assert_eq!(w.len(), w_count(m), "m={m}");
            // predicate re-evaluation against a brute-force filter of Par(m)
            if m <= 20 {
                let brute: Vec<Partition> =
                    partitions(m).into_iter().filter(|l| w.admits(l)).collect();
                assert_eq!(brute, w.members);
            }
            for p in [2u64, 3, 5, 7] {
                let a = a_set(p, m).unwrap();
                assert_eq!(a.len(), a_count(p, m), "p={p} n={m}");
                assert!(a
                    .members
                    .iter()
                    .all(|l| l.parts().iter().all(|&r| !(r as u64).is_multiple_of(p))));
                if m <= 20 {
                    let brute: Vec<Partition> =
                        partitions(m).into_iter().filter(|l| a.admits(l)).collect();
                    assert_eq!(brute, a.members);
                    let x = x_set(p, m).unwrap();
                    assert!(a.members.iter().all(|l| x.admits(l)));
                    assert!(x.members.iter().all(|l| x.admits(l)));
                }
            }
        }
    }

    #[test]
    fn x_examples() {
        assert_eq!(
            parts(&x_set(2, 4).unwrap()),
            vec![vec![3, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(
            parts(&x_set(3, 3).unwrap()),
            vec![vec![2, 1], vec![1, 1, 1]]
        );
    }
}
