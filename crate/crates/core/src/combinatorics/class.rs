//! Conjugacy classes of C_k ≀ S_n and their monomial-matrix representatives.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::partition::{partitions, Partition};
use crate::algebra::CycloNumber;
use crate::arith::{require_prime, root_order};
use crate::error::{Error, Result};

/// A conjugacy class of C_k ≀ S_n: cycle lengths paired with the exponent `a`
/// of the cycle product ζ_k^a. Pairs are kept sorted by part descending,
/// then exponent ascending, so equal classes compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassLabel {
    k: u32,
    pairs: Vec<(usize, u32)>,
}

impl ClassLabel {
    pub fn new(k: u32, mut pairs: Vec<(usize, u32)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput("wreath order k must be >= 1".into()));
        }
        if pairs.iter().any(|&(part, _)| part == 0) {
            return Err(Error::InvalidInput("cycle lengths must be positive".into()));
        }
        for p in pairs.iter_mut() {
            p.1 %= k;
        }
        pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(ClassLabel { k, pairs })
    }

    /// Builds a class from parallel part and exponent lists.
    pub fn from_parts(k: u32, parts: &[usize], exponents: &[u32]) -> Result<Self> {
        if parts.len() != exponents.len() {
            return Err(Error::InvalidInput(format!(
                "{} parts but {} exponents",
                parts.len(),
                exponents.len()
            )));
        }
        Self::new(
            k,
            parts
                .iter()
                .copied()
                .zip(exponents.iter().copied())
                .collect(),
        )
    }

    /// The class of the identity of C_k ≀ S_n.
    pub fn identity(n: usize, k: u32) -> Result<Self> {
        Self::new(k, vec![(1, 0); n])
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.pairs.iter().map(|p| p.0).sum()
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.pairs.iter().map(|p| p.0).collect())
    }

    /// The cycle products t_i = ζ_k^{a_i}.
    pub fn cycle_products(&self) -> Vec<CycloNumber> {
        self.pairs
            .iter()
            .map(|&(_, a)| CycloNumber::root_of_unity(self.k, a))
            .collect()
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (part, a)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({part},{a})")?;
        }
        write!(f, "}}")
    }
}

/// Non-decreasing exponent sequences of length `len` over `0..k`.
fn exponent_multisets(len: usize, k: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, min: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for a in min..k {
            cur.push(a);
            go(len, a, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 0, k, &mut Vec::new(), &mut out);
    out
}

fn classes_with_partition(lambda: &Partition, k: u32) -> Vec<ClassLabel> {
    let mut acc: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
    for (part, mult) in lambda.multiplicities() {
        let choices = exponent_multisets(mult, k);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |exps| {
                    let mut v = prefix.clone();
                    v.extend(exps.iter().map(|&a| (part, a)));
                    v
                })
            })
            .collect();
    }
    acc.into_iter()
        .map(|pairs| ClassLabel { k, pairs })
        .collect()
}

/// Lazily enumerates the classes of C_k ≀ S_n, grouped by cycle type in
/// descending lexicographic order.
pub fn class_iter(n: usize, k: u32) -> impl Iterator<Item = ClassLabel> {
    assert!(k >= 1, "wreath order k must be >= 1");
    partitions(n)
        .into_iter()
        .flat_map(move |lambda| classes_with_partition(&lambda, k))
}

/// One label per conjugacy class of C_k ≀ S_n.
pub fn classes(n: usize, k: u32) -> Vec<ClassLabel> {
    class_iter(n, k).collect()
}

/// Whether elements of the class have order coprime to `p`.
pub fn is_p_regular(c: &ClassLabel, p: u64) -> Result<bool> {
    require_prime(p)?;
    Ok(c.pairs.iter().all(|&(part, a)| {
        !(part as u64).is_multiple_of(p) && u64::from(root_order(c.k, a)) % p != 0
    }))
}

/// A monomial (generalised permutation) matrix with entries in {0} ∪ μ_k.
/// Column `j` holds `ζ^a` in row `i` where `images[j] = (i, a)`, i.e. the
/// matrix sends `e_j` to `ζ^a e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    k: u32,
    images: Vec<(usize, u32)>,
}

impl MonomialMatrix {
    pub fn new(k: u32, images: Vec<(usize, u32)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput("wreath order k must be >= 1".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &(i, _) in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput(
                    "underlying map is not a permutation".into(),
                ));
            }
        }
        let images = images.into_iter().map(|(i, a)| (i, a % k)).collect();
        Ok(MonomialMatrix { k, images })
    }

    /// Reads a dense matrix of exponents, `None` for zero entries.
    pub fn from_dense(k: u32, rows: &[Vec<Option<u32>>]) -> Result<Self> {
        let n = rows.len();
        let mut images = Vec::with_capacity(n);
        for j in 0..n {
            let nonzero: Vec<(usize, u32)> = rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(j).copied().flatten().map(|a| (i, a)))
                .collect();
            match nonzero.as_slice() {
                [one] => images.push(*one),
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "column {j} must have exactly one nonzero entry"
                    )))
                }
            }
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        Self::new(k, images)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[(usize, u32)] {
        &self.images
    }

    pub fn to_dense(&self) -> Vec<Vec<Option<u32>>> {
        let n = self.n();
        let mut m = vec![vec![None; n]; n];
        for (j, &(i, a)) in self.images.iter().enumerate() {
            m[i][j] = Some(a);
        }
        m
    }

    /// The cycle type of the underlying permutation with the exponent of
    /// each cycle's entry product.
    pub fn class_label(&self) -> ClassLabel {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut pairs = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let (mut len, mut exp, mut j) = (0usize, 0u32, start);
            while !visited[j] {
                visited[j] = true;
                let (i, a) = self.images[j];
                len += 1;
                exp = (exp + a) % self.k;
                j = i;
            }
            pairs.push((len, exp));
        }
        ClassLabel::new(self.k, pairs).expect("cycle lengths are positive")
    }

    /// det = sign(π) · ∏ entries, as an exponent of ζ_k and a sign.
    pub fn determinant(&self) -> CycloNumber {
        let label = self.class_label();
        let mut det = CycloNumber::one(self.k);
        for (&(part, _), t) in label.pairs().iter().zip(label.cycle_products()) {
            det = &det * &t;
            if part.is_even() {
                det = -det;
            }
        }
        det
    }
}

/// A representative with consecutive cycle supports, one cycle per pair,
/// carrying ζ^a on the entry that closes the cycle.
pub fn class_representative(c: &ClassLabel) -> MonomialMatrix {
    let mut images = Vec::with_capacity(c.n());
    let mut start = 0;
    for &(part, a) in &c.pairs {
        for i in 0..part - 1 {
            images.push((start + i + 1, 0));
        }
        images.push((start, a));
        start += part;
    }
    MonomialMatrix { k: c.k, images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::colored_partition_count;

    #[test]
    fn small_class_lists() {
        assert_eq!(classes(1, 4).len(), 4);
        assert_eq!(classes(3, 1).len(), 3);
        let c22 = classes(2, 2);
        let expected = [
            vec![(2, 0)],
            vec![(2, 1)],
            vec![(1, 0), (1, 0)],
            vec![(1, 0), (1, 1)],
            vec![(1, 1), (1, 1)],
        ];
        let got: Vec<Vec<(usize, u32)>> = c22.iter().map(|c| c.pairs().to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn class_counts_match_colored_partitions() {
        for n in 0..=10 {
            for k in 1..=4 {
                let cs = classes(n, k);
                assert_eq!(
                    cs.len() as u128,
                    colored_partition_count(n, k),
                    "n={n} k={k}"
                );
                let mut dedup = cs.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), cs.len());
            }
        }
    }

    #[test]
    fn k1_classes_are_partitions() {
        for n in 0..=9 {
            let from_classes: Vec<Partition> =
                classes(n, 1).iter().map(ClassLabel::partition).collect();
            assert_eq!(from_classes, partitions(n));
        }
    }

    #[test]
    fn canonical_ordering() {
        let a = ClassLabel::new(3, vec![(1, 2), (2, 4), (2, 0)]).unwrap();
        assert_eq!(a.pairs(), &[(2, 0), (2, 1), (1, 2)]);
        let b = ClassLabel::from_parts(3, &[1, 2, 2], &[5, 0, 1]).unwrap();
        assert_eq!(a, b);
        assert!(ClassLabel::from_parts(3, &[1, 2], &[0]).is_err());
        assert!(ClassLabel::new(0, vec![]).is_err());
    }

    #[test]
    fn p_regularity() {
        let c = ClassLabel::from_parts(1, &[2, 1], &[0, 0]).unwrap();
        assert!(!is_p_regular(&c, 2).unwrap());
        let c = ClassLabel::from_parts(2, &[3], &[1]).unwrap();
        assert!(!is_p_regular(&c, 2).unwrap());
        let c = ClassLabel::from_parts(2, &[3, 1], &[0, 0]).unwrap();
        assert!(is_p_regular(&c, 2).unwrap());
        // ζ_6^2 has order 3
        let c = ClassLabel::from_parts(6, &[1], &[2]).unwrap();
        assert!(is_p_regular(&c, 2).unwrap());
        assert!(!is_p_regular(&c, 3).unwrap());
        assert!(matches!(is_p_regular(&c, 6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn representative_of_trivial_class() {
        let c = ClassLabel::identity(1, 1).unwrap();
        assert_eq!(class_representative(&c).to_dense(), vec![vec![Some(0)]]);
    }

    #[test]
    fn signed_permutation_example() {
        // cycle type (2,2,1) with cycle products 1, -1, 1 in C_2 ≀ S_5
        let c = ClassLabel::from_parts(2, &[2, 2, 1], &[0, 1, 0]).unwrap();
        let m = class_representative(&c);
        let dense = m.to_dense();
        let expected = vec![
            vec![None, Some(0), None, None, None],
            vec![Some(0), None, None, None, None],
            vec![None, None, None, Some(1), None],
            vec![None, None, Some(0), None, None],
            vec![None, None, None, None, Some(0)],
        ];
        assert_eq!(dense, expected);
        assert_eq!(m.class_label(), c);

        // the matrix from the worked example, with -1 = ζ_2
        let example = vec![
            vec![None, Some(1), None, None, None],
            vec![Some(1), None, None, None, None],
            vec![None, None, Some(0), None, None],
            vec![None, None, None, None, Some(1)],
            vec![None, None, None, Some(0), None],
        ];
        let m = MonomialMatrix::from_dense(2, &example).unwrap();
        assert_eq!(m.class_label(), c);
    }

    #[test]
    fn three_cycle_with_zeta() {
        let c = ClassLabel::from_parts(3, &[3], &[1]).unwrap();
        let m = class_representative(&c);
        assert_eq!(m.images(), &[(1, 0), (2, 0), (0, 1)]);
        assert_eq!(m.class_label(), c);
    }

    #[test]
    fn representative_roundtrip() {
        for n in 1..=6 {
            for k in 1..=4 {
                for c in classes(n, k) {
                    assert_eq!(class_representative(&c).class_label(), c);
                }
            }
        }
    }

    #[test]
    fn rejects_non_monomial() {
        assert!(MonomialMatrix::new(2, vec![(0, 0), (0, 1)]).is_err());
        let two_in_column = vec![vec![Some(0), Some(0)], vec![Some(0), None]];
        assert!(MonomialMatrix::from_dense(2, &two_in_column).is_err());
    }
}
