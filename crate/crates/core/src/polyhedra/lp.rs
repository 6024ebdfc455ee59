//! Exact rational LP feasibility.
//!
//! Primal simplex on the phase-1 form: to decide whether {x ≥ 0 : Ax = b}
//! is nonempty, add one artificial variable per row and minimize their sum
//! with Bland's anti-cycling pivot rule. The optimum is zero exactly when
//! the system is feasible, and the structural part of the optimal basic
//! solution is then a feasible point. All arithmetic is exact, so
//! feasibility answers carry no tolerance.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// Find x ≥ 0 with Ax = b, or report infeasibility.
///
/// `a` is a list of m rows of equal length n; `b` has length m. Termination
/// is guaranteed by Bland's rule (entering: lowest-index variable with
/// negative reduced cost; leaving: lowest-index basic variable among the
/// minimum-ratio rows).
pub(crate) fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    assert_eq!(b.len(), m, "row/rhs count mismatch");
    let n = a.first().map_or(0, |row| row.len());
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    assert!(a.iter().all(|row| row.len() == n), "ragged matrix");
    if n == 0 {
        return if b.iter().all(|bi| bi.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }

    let total = n + m; // structural then artificial variables
    // tableau rows: coefficients over all variables plus rhs, with b >= 0
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = Vec::with_capacity(total + 1);
        let flip = b[i].is_negative();
        for v in &a[i] {
            row.push(if flip { -v.clone() } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..total).collect();

    // reduced costs for minimizing the sum of artificials
    let mut cost = vec![Rational::zero(); total + 1];
    for j in 0..=total {
        let mut s = Rational::zero();
        for row in t.iter() {
            s += &row[j];
        }
        if j < n {
            cost[j] = -s;
        } else if j < total {
            // 1 - (sum of the unit column) = 0
            cost[j] = Rational::from_integer(1.into()) - s;
        } else {
            cost[j] = -s; // negative of the current objective value
        }
    }

    while let Some(entering) = (0..total).find(|&j| cost[j].is_negative()) {
        // ratio test with Bland tie-breaking on the basic variable index
        let mut leaving: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[entering].is_positive() {
                let ratio = &row[total] / &row[entering];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leaving else {
            // the phase-1 objective is bounded below by zero, so this
            // cannot happen; bail out as infeasible rather than loop
            debug_assert!(false, "unbounded phase-1 objective");
            return None;
        };
        // pivot
        let lead = t[pivot_row][entering].clone();
        for v in t[pivot_row].iter_mut() {
            *v /= lead.clone();
        }
        let pivot_vals = t[pivot_row].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == pivot_row {
                continue;
            }
            let factor = row[entering].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, p) in row.iter_mut().zip(&pivot_vals) {
                *v -= &factor * p;
            }
        }
        let factor = cost[entering].clone();
        if !factor.is_zero() {
            for (c, p) in cost.iter_mut().zip(&pivot_vals) {
                *c -= &factor * p;
            }
        }
        basis[pivot_row] = entering;
    }

    // optimal value is -cost[total]
    if !cost[total].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][total].clone();
        }
    }
    Some(x)
}
