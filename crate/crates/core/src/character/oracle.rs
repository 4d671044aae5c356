//! Brute-force traces on explicit bases of Sym^r V and Λ^r V. These never
//! touch the generating functions and serve as their independent check.

use crate::algebra::CycloNumber;
use crate::combinatorics::MonomialMatrix;
use crate::error::{Error, Result};

pub const SYM_ORACLE_MAX_N: usize = 6;
pub const SYM_ORACLE_MAX_R: usize = 8;
pub const EXT_ORACLE_MAX_N: usize = 8;

/// Exponent vectors `c ∈ N^n` with `Σ c = r`.
fn monomials(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = rest;
            out.push(cur.clone());
            return;
        }
        for c in 0..=rest {
            cur[i] = c;
            go(i + 1, rest - c, cur, out);
        }
    }
    if n == 0 {
        return if r == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(0, r, &mut vec![0; n], &mut out);
    out
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Trace of `m` on Sym^r V in the monomial basis.
pub fn brute_force_sym_trace(m: &MonomialMatrix, r: usize) -> Result<CycloNumber> {
    let n = m.n();
    if n > SYM_ORACLE_MAX_N || r > SYM_ORACLE_MAX_R {
        return Err(Error::ScaleLimit(format!(
            "symmetric oracle limited to n <= {SYM_ORACLE_MAX_N}, r <= {SYM_ORACLE_MAX_R} (got n={n}, r={r})"
        )));
    }
    let k = m.k();
    let mut trace = CycloNumber::zero(k);
    for c in monomials(n, r) {
        // e_j^{c_j} ↦ (ζ^{a_j} e_{π(j)})^{c_j}
        let mut image = vec![0usize; n];
        let mut exp: u64 = 0;
        for (j, &(i, a)) in m.images().iter().enumerate() {
            image[i] += c[j];
            exp += u64::from(a) * c[j] as u64;
        }
        if image == c {
            trace += &CycloNumber::root_of_unity(k, (exp % u64::from(k)) as u32);
        }
    }
    Ok(trace)
}

/// Parity of the permutation that sorts `v` (distinct entries).
fn sort_sign(v: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Trace of `m` on Λ^r V in the wedge basis, including the reordering sign.
pub fn brute_force_ext_trace(m: &MonomialMatrix, r: usize) -> Result<CycloNumber> {
    let n = m.n();
    if n > EXT_ORACLE_MAX_N || r > n {
        return Err(Error::ScaleLimit(format!(
            "exterior oracle limited to n <= {EXT_ORACLE_MAX_N}, r <= n (got n={n}, r={r})"
        )));
    }
    let k = m.k();
    let mut trace = CycloNumber::zero(k);
    for s in subsets(n, r) {
        let mut exp: u64 = 0;
        let image: Vec<usize> = s
            .iter()
            .map(|&j| {
                let (i, a) = m.images()[j];
                exp += u64::from(a);
                i
            })
            .collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        if sorted != s {
            continue;
        }
        let z = CycloNumber::root_of_unity(k, (exp % u64::from(k)) as u32);
        if sort_sign(&image) {
            trace -= &z;
        } else {
            trace += &z;
        }
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{class_representative, ClassLabel};

    fn perm(k: u32, images: &[usize]) -> MonomialMatrix {
        MonomialMatrix::new(k, images.iter().map(|&i| (i, 0)).collect()).unwrap()
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(6, 8).len(), 1287);
        assert_eq!(subsets(5, 2).len(), 10);
    }

    #[test]
    fn sym_examples() {
        let id = perm(1, &[0, 1]);
        assert_eq!(
            brute_force_sym_trace(&id, 3).unwrap(),
            CycloNumber::from_integer(1, 4)
        );
        let t = perm(1, &[1, 0, 2]);
        assert_eq!(
            brute_force_sym_trace(&t, 2).unwrap(),
            CycloNumber::from_integer(1, 2)
        );
        // [[0,-1],[-1,0]] with -1 = ζ_2
        let m = MonomialMatrix::from_dense(2, &[vec![None, Some(1)], vec![Some(1), None]]).unwrap();
        assert_eq!(
            brute_force_sym_trace(&m, 2).unwrap(),
            CycloNumber::from_integer(2, 1)
        );
    }

    #[test]
    fn ext_examples() {
        let c = ClassLabel::from_parts(3, &[2, 1, 1], &[1, 0, 2]).unwrap();
        let rep = class_representative(&c);
        assert!(brute_force_ext_trace(&rep, 0).unwrap().is_one());
        assert_eq!(
            brute_force_ext_trace(&perm(1, &[1, 0]), 2).unwrap(),
            CycloNumber::from_integer(1, -1)
        );
        assert!(brute_force_ext_trace(&perm(1, &[1, 2, 0]), 3)
            .unwrap()
            .is_one());
    }

    #[test]
    fn scale_limits() {
        let big = perm(1, &[0, 1, 2, 3, 4, 5, 6]);
        assert!(matches!(
            brute_force_sym_trace(&big, 1),
            Err(Error::ScaleLimit(_))
        ));
        assert!(matches!(
            brute_force_sym_trace(&perm(1, &[0]), 9),
            Err(Error::ScaleLimit(_))
        ));
        assert!(matches!(
            brute_force_ext_trace(&perm(1, &[0, 1]), 3),
            Err(Error::ScaleLimit(_))
        ));
    }

    #[test]
    fn top_wedge_is_determinant() {
        let c = ClassLabel::from_parts(4, &[3, 2], &[1, 3]).unwrap();
        let rep = class_representative(&c);
        assert_eq!(brute_force_ext_trace(&rep, 5).unwrap(), rep.determinant());
    }
}
