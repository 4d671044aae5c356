//! Exact rank over Q(ζ_k) by Gaussian elimination.

use super::cyclo::CycloNumber;
use crate::error::{Error, Result};

fn check_conductors<'a>(mut entries: impl Iterator<Item = &'a CycloNumber>) -> Result<Option<u32>> {
    let Some(first) = entries.next() else {
        return Ok(None);
    };
    let k = first.conductor();
    for e in entries {
        if e.conductor() != k {
            return Err(Error::MixedConductors {
                expected: k,
                found: e.conductor(),
            });
        }
    }
    Ok(Some(k))
}

/// Pivot cost: fewest nonzero coordinates first, then smallest bit size.
fn pivot_cost(c: &CycloNumber) -> (usize, u64) {
    (c.nonzero_coords(), c.bit_size())
}

/// Rank of a rectangular matrix given as rows. All entries must share one
/// conductor; ragged rows are rejected.
pub fn exact_rank(rows: &[Vec<CycloNumber>]) -> Result<usize> {
    check_conductors(rows.iter().flatten())?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    let mut m: Vec<Vec<CycloNumber>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .cloned()
        .collect();

    let mut rank = 0;
    for col in 0..width {
        if rank == m.len() {
            break;
        }
        let pivot = (rank..m.len())
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| pivot_cost(&m[i][col]));
        let Some(p) = pivot else { continue };
        m.swap(rank, p);

        let inv = m[rank][col].inverse()?;
        if !inv.is_one() {
            for c in m[rank][col..].iter_mut() {
                if !c.is_zero() {
                    *c = &*c * &inv;
                }
            }
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut row[col], CycloNumber::zero(pivot_row[col].conductor()));
            for j in col + 1..width {
                row[j].sub_mul_assign(&f, &pivot_row[j]);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// An incrementally grown row-echelon basis with unit pivots, for streaming
/// vectors whose full matrix would not fit in memory.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    width: usize,
    conductor: u32,
    // (pivot column, row); rows are normalised so the pivot entry is 1
    rows: Vec<(usize, Vec<CycloNumber>)>,
}

impl EchelonBasis {
    pub fn new(conductor: u32, width: usize) -> Self {
        EchelonBasis {
            width,
            conductor,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduces `v` against the basis and keeps the remainder if nonzero.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<CycloNumber>) -> Result<bool> {
        if v.len() != self.width {
            return Err(Error::InvalidInput(format!(
                "vector of length {} in a basis of width {}",
                v.len(),
                self.width
            )));
        }
        if let Some(c) = v.iter().find(|c| c.conductor() != self.conductor) {
            return Err(Error::MixedConductors {
                expected: self.conductor,
                found: c.conductor(),
            });
        }
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for j in *pc..self.width {
                v[j].sub_mul_assign(&f, &row[j]);
            }
        }
        let Some(pc) = v.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = v[pc].inverse()?;
        for c in v[pc..].iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        // keep pivots sorted so a single forward pass reduces completely
        let at = self.rows.partition_point(|(c, _)| *c < pc);
        self.rows.insert(at, (pc, v));
        Ok(true)
    }
}
