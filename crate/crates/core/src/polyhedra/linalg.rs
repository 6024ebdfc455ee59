//! Exact rank computation and an incremental row-reduced equality system.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, entry_gcd, Rational};

/// Rank of a family of rational vectors, by fraction-free (Bareiss)
/// Gaussian elimination on the denominator-cleared integer matrix.
pub fn rank(vectors: &[Vec<Rational>]) -> Result<usize> {
    if vectors.is_empty() {
        return Err(Error::invalid("rank of an empty family".to_string()));
    }
    let cols = vectors[0].len();
    if vectors.iter().any(|v| v.len() != cols) {
        return Err(Error::invalid("vectors have mixed lengths".to_string()));
    }
    let mut m: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| {
            let lcm = denominator_lcm(v);
            let row: Vec<BigInt> = v
                .iter()
                .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer())
                .collect();
            // scale down for compactness; rank is invariant
            let g = entry_gcd(&row);
            if g > BigInt::one() {
                row.into_iter().map(|x| x / &g).collect()
            } else {
                row
            }
        })
        .collect();

    let rows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    Ok(r)
}

/// Outcome of pushing a row into an [`RrefSystem`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum AddOutcome {
    /// The row increased the rank.
    Added,
    /// The row is implied by the current system.
    Redundant,
    /// The row contradicts the current system.
    Inconsistent,
}

/// A row reduced against a system but not yet inserted.
#[derive(Clone, Debug)]
pub(crate) enum ReducedRow {
    Redundant,
    Inconsistent,
    Independent(RrefRow),
}

#[derive(Clone, Debug)]
pub(crate) struct RrefRow {
    coeffs: Vec<Rational>,
    rhs: Rational,
    pivot: usize,
}

/// An equality system Ax = b kept in reduced row echelon form, supporting
/// incremental row insertion with consistency detection.
#[derive(Clone, Debug)]
pub(crate) struct RrefSystem {
    ncols: usize,
    rows: Vec<RrefRow>,
}

impl RrefSystem {
    pub fn new(ncols: usize) -> Self {
        RrefSystem { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce one equation Σ coeffs·x = rhs against the system without
    /// inserting it.
    pub fn reduce_row(&self, mut coeffs: Vec<Rational>, mut rhs: Rational) -> ReducedRow {
        debug_assert_eq!(coeffs.len(), self.ncols);
        // forward elimination against existing pivots
        for row in &self.rows {
            let factor = coeffs[row.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (c, rc) in coeffs.iter_mut().zip(&row.coeffs) {
                *c -= &factor * rc;
            }
            rhs -= &factor * &row.rhs;
        }
        let Some(pivot) = coeffs.iter().position(|c| !c.is_zero()) else {
            return if rhs.is_zero() {
                ReducedRow::Redundant
            } else {
                ReducedRow::Inconsistent
            };
        };
        // normalize
        let lead = coeffs[pivot].clone();
        for c in coeffs.iter_mut() {
            *c /= lead.clone();
        }
        rhs /= lead;
        ReducedRow::Independent(RrefRow { coeffs, rhs, pivot })
    }

    /// Insert a reduced independent row, back-substituting into the rest.
    pub fn push_reduced(&mut self, row: RrefRow) {
        for existing in self.rows.iter_mut() {
            let factor = existing.coeffs[row.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (c, rc) in existing.coeffs.iter_mut().zip(&row.coeffs) {
                *c -= &factor * rc;
            }
            existing.rhs -= &factor * &row.rhs;
        }
        self.rows.push(row);
    }

    /// Reduce and insert one equation Σ coeffs·x = rhs.
    pub fn add_row(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> AddOutcome {
        match self.reduce_row(coeffs, rhs) {
            ReducedRow::Redundant => AddOutcome::Redundant,
            ReducedRow::Inconsistent => AddOutcome::Inconsistent,
            ReducedRow::Independent(row) => {
                self.push_reduced(row);
                AddOutcome::Added
            }
        }
    }

    /// The unique solution when the system has full column rank.
    pub fn full_rank_solution(&self) -> Option<Vec<Rational>> {
        if self.rows.len() != self.ncols {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for row in &self.rows {
            x[row.pivot] = row.rhs.clone();
        }
        Some(x)
    }

    /// Visit each row as (coefficients, rhs).
    pub fn for_each_row(&self, mut f: impl FnMut(&[Rational], &Rational)) {
        for row in &self.rows {
            f(&row.coeffs, &row.rhs);
        }
    }
}
