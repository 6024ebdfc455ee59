//! Brute-force oracle for GIT polarization degrees on four points of a line.
//!
//! The degree of the natural polarization on the quotient of four weighted
//! points of the projective line is, on one hand, given by a closed min
//! formula, and on the other hand computable from classical invariant theory:
//! invariants of multidegree Y are spanned by semistandard 2×(ΣY/2) tableaux
//! with content Y, and the degree is (number of tableaux − 1) divided by the
//! denominator-clearing factor. Keeping both routes independent is the point
//! of this module; they are checked against each other, and the closed form
//! is what the divisor formulas reduce to on the smallest F-curve.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{denominator_lcm, Rational};

/// A semistandard 2×width tableau with entries in {1,2,3,4}.
///
/// Rows weakly increase left to right, columns strictly increase top to
/// bottom, and entry i appears exactly content(i) times.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau {
    width: usize,
    rows: [Vec<u8>; 2],
}

impl Tableau {
    /// Number of columns.
    pub fn width(&self) -> usize {
        self.width
    }

    /// The two rows, top first.
    pub fn rows(&self) -> &[Vec<u8>; 2] {
        &self.rows
    }
}

impl std::fmt::Display for Tableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// All semistandard 2×(ΣY/2) tableaux with content `content`, sorted
/// lexicographically on (top row, bottom row).
///
/// Errors when ΣY is odd (there are no invariants of that multidegree).
pub fn enumerate_tableaux(content: [i64; 4]) -> Result<Vec<Tableau>> {
    if content.iter().any(|&c| c < 0) {
        return Err(Error::invalid("content entries must be nonnegative".to_string()));
    }
    let total: i64 = content.iter().sum();
    if total % 2 != 0 {
        return Err(Error::invalid(format!(
            "content sum {total} is odd; no tableaux of that multidegree"
        )));
    }
    let width = (total / 2) as usize;
    // columns are pairs (top, bottom) with top < bottom; both rows must
    // weakly increase, so the pair sequence is monotone in both coordinates
    const PAIRS: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let mut counts = content.map(|c| c as usize);
    let mut cols: Vec<(u8, u8)> = Vec::with_capacity(width);
    let mut out = Vec::new();

    fn rec(
        col: usize,
        width: usize,
        last: (u8, u8),
        counts: &mut [usize; 4],
        cols: &mut Vec<(u8, u8)>,
        out: &mut Vec<Tableau>,
    ) {
        if col == width {
            let rows = [
                cols.iter().map(|c| c.0).collect::<Vec<_>>(),
                cols.iter().map(|c| c.1).collect::<Vec<_>>(),
            ];
            out.push(Tableau { width, rows });
            return;
        }
        let left = width - col;
        // 1s only fit in the top row, 4s only in the bottom row
        if counts[0] > left || counts[3] > left {
            return;
        }
        for &(t, b) in PAIRS.iter() {
            if t < last.0 || b < last.1 {
                continue;
            }
            let (ti, bi) = ((t - 1) as usize, (b - 1) as usize);
            if counts[ti] == 0 || counts[bi] == 0 {
                continue;
            }
            counts[ti] -= 1;
            counts[bi] -= 1;
            cols.push((t, b));
            rec(col + 1, width, (t, b), counts, cols, out);
            cols.pop();
            counts[ti] += 1;
            counts[bi] += 1;
        }
    }
    rec(0, width, (1, 1), &mut counts, &mut cols, &mut out);
    out.sort();
    Ok(out)
}

fn check_point(y: &[Rational; 4]) -> Result<()> {
    let two = Rational::from_integer(2.into());
    let sum: Rational = y.iter().cloned().sum();
    if sum != two {
        return Err(Error::invalid(format!("weights must sum to 2, got {sum}")));
    }
    if y.iter().any(|v| v.is_negative() || *v > Rational::one()) {
        return Err(Error::invalid("weights must lie in [0, 1]".to_string()));
    }
    Ok(())
}

/// Polarization degree at `y` by invariant counting.
///
/// Clears denominators with N = lcm(denominators), counts tableaux of
/// content N·y, and returns (count − 1)/N; empty or single-point quotients
/// (count ≤ 1) give degree 0.
pub fn degree_bruteforce(y: &[Rational; 4]) -> Result<Rational> {
    check_point(y)?;
    let n = denominator_lcm(y);
    let content: [i64; 4] = std::array::from_fn(|i| {
        let scaled = &y[i] * Rational::from_integer(n.clone());
        i64::try_from(scaled.to_integer()).expect("cleared weight fits in i64")
    });
    let count = enumerate_tableaux(content)?.len();
    if count <= 1 {
        return Ok(Rational::zero());
    }
    Ok(Rational::new((count - 1).into(), n))
}

/// Polarization degree at `y` by the closed min formula.
pub fn degree_closedform(y: &[Rational; 4]) -> Result<Rational> {
    check_point(y)?;
    let min = y
        .iter()
        .flat_map(|v| [v.clone(), Rational::one() - v])
        .min()
        .expect("eight candidates");
    Ok(min)
}
