//! F-curve partitions: partitions of {1,…,n} into four nonempty blocks.
//!
//! F-curves span the 1-cycles on the moduli space of stable n-pointed
//! rational curves, so a divisor class is recorded as its vector of
//! intersection numbers over the canonical F-curve list produced by
//! [`enumerate_fcurves`]. The canonical form sorts each block ascending and
//! orders blocks by minimum element; the list order is lexicographic on that
//! representation. Indices are 1-based.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::{dist_to_integer, Rational};

/// A partition of {1,…,n} into four nonempty blocks, in canonical form.
///
/// Canonical form: each block sorted ascending, blocks ordered by their
/// minimum element (so the first block always contains 1). The derived `Ord`
/// compares block representations lexicographically, which is exactly the
/// order used to index divisor-class vectors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FCurvePartition {
    n: usize,
    blocks: [Vec<usize>; 4],
}

impl FCurvePartition {
    /// Build the canonical representative of the partition given by `blocks`.
    ///
    /// The blocks may be in any order and any internal order; they must be
    /// pairwise disjoint, nonempty, and cover {1,…,n} exactly.
    pub fn new(n: usize, blocks: [Vec<usize>; 4]) -> Result<Self> {
        if n < 4 {
            return Err(Error::invalid(format!("n must be at least 4, got {n}")));
        }
        let mut blocks = blocks;
        let mut seen = vec![false; n + 1];
        let mut total = 0usize;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in block.iter() {
                if i < 1 || i > n {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} out of range 1..={n}"
                    )));
                }
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "index {i} appears in two blocks"
                    )));
                }
                seen[i] = true;
                total += 1;
            }
            block.sort_unstable();
        }
        if total != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {total} of {n} indices"
            )));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(FCurvePartition { n, blocks })
    }

    /// Number of marked points.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The four blocks in canonical order.
    pub fn blocks(&self) -> &[Vec<usize>; 4] {
        &self.blocks
    }

    /// Sizes of the four blocks, sorted descending (the partition "shape").
    pub fn shape(&self) -> [usize; 4] {
        let mut s = [0usize; 4];
        for (i, b) in self.blocks.iter().enumerate() {
            s[i] = b.len();
        }
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Apply a permutation of {1,…,n} and re-canonicalize.
    ///
    /// `sigma[i-1]` is the image of `i`; it must be a bijection of {1,…,n}.
    pub fn permute(&self, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != self.n {
            return Err(Error::invalid(format!(
                "permutation has length {}, expected {}",
                sigma.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n + 1];
        for &img in sigma {
            if img < 1 || img > self.n || hit[img] {
                return Err(Error::invalid("not a bijection of 1..=n".to_string()));
            }
            hit[img] = true;
        }
        let blocks = self
            .blocks
            .clone()
            .map(|b| b.into_iter().map(|i| sigma[i - 1]).collect::<Vec<_>>());
        FCurvePartition::new(self.n, blocks)
    }

    /// Drop marked point `i` and relabel {1,…,n}\{i} to {1,…,n−1}.
    ///
    /// Returns `None` when {i} is a singleton block: the F-curve is contracted
    /// by the forgetful map and has no image partition.
    pub fn forget(&self, i: usize) -> Result<Option<Self>> {
        if self.n == 4 {
            return Err(Error::invalid(
                "cannot forget a point of a 4-point partition".to_string(),
            ));
        }
        if i < 1 || i > self.n {
            return Err(Error::invalid(format!(
                "index {i} out of range 1..={}",
                self.n
            )));
        }
        if self.blocks.iter().any(|b| b.len() == 1 && b[0] == i) {
            return Ok(None);
        }
        let relabel = |j: usize| if j > i { j - 1 } else { j };
        let blocks = self.blocks.clone().map(|b| {
            b.into_iter()
                .filter(|&j| j != i)
                .map(relabel)
                .collect::<Vec<_>>()
        });
        FCurvePartition::new(self.n - 1, blocks).map(Some)
    }

    /// Block sums, floors, and distances to the integers of `v` over the four
    /// blocks; residues mod `modulus` when a modulus is given (then `v` must
    /// have integer entries).
    pub fn evaluate_blocks(
        &self,
        v: &[Rational],
        modulus: Option<i64>,
    ) -> Result<FCurveEvaluation> {
        if v.len() != self.n {
            return Err(Error::invalid(format!(
                "vector has length {}, expected {}",
                v.len(),
                self.n
            )));
        }
        let block_sums: [Rational; 4] = std::array::from_fn(|b| {
            self.blocks[b]
                .iter()
                .map(|&i| v[i - 1].clone())
                .sum::<Rational>()
        });
        let floors: [BigInt; 4] = std::array::from_fn(|b| block_sums[b].floor().to_integer());
        let dists: [Rational; 4] = std::array::from_fn(|b| dist_to_integer(&block_sums[b]));
        let residues = match modulus {
            None => None,
            Some(m) => {
                if m < 1 {
                    return Err(Error::invalid(format!("modulus must be positive, got {m}")));
                }
                if v.iter().any(|r| !r.is_integer()) {
                    return Err(Error::invalid(
                        "modulus given but vector has non-integer entries".to_string(),
                    ));
                }
                Some(std::array::from_fn(|b| {
                    let m_big = BigInt::from(m);
                    let r = num_integer::Integer::mod_floor(
                        &block_sums[b].to_integer(),
                        &m_big,
                    );
                    // residues are < m <= i64::MAX by construction
                    i64::try_from(r).expect("residue fits in i64")
                }))
            }
        };
        Ok(FCurveEvaluation {
            block_sums,
            floors,
            dists,
            residues,
        })
    }
}

/// Result of evaluating a rational vector on the blocks of an F-curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCurveEvaluation {
    /// Sum of the entries of `v` over each block.
    pub block_sums: [Rational; 4],
    /// Floor of each block sum.
    pub floors: [BigInt; 4],
    /// Distance of each block sum to the nearest integer, in [0, 1/2].
    pub dists: [Rational; 4],
    /// Block sums reduced mod the given modulus, when one was given.
    pub residues: Option<[i64; 4]>,
}

/// All partitions of {1,…,n} into four nonempty blocks, in canonical order.
///
/// The list is generated as restricted growth strings filtered to exactly
/// four blocks (each partition appears once) and sorted lexicographically on
/// the canonical block representation. This order is the index set for every
/// divisor-class vector, so it must never change.
pub fn enumerate_fcurves(n: usize) -> Result<Vec<FCurvePartition>> {
    if n < 4 {
        return Err(Error::invalid(format!("n must be at least 4, got {n}")));
    }
    let mut out = Vec::new();
    // rgs[i] = block of element i+1; rgs[i] <= max(rgs[..i]) + 1, capped at 3
    let mut rgs = vec![0usize; n];
    fn rec(rgs: &mut Vec<usize>, pos: usize, max_used: usize, n: usize, out: &mut Vec<FCurvePartition>) {
        if pos == n {
            if max_used == 3 {
                let mut blocks: [Vec<usize>; 4] = Default::default();
                for (i, &b) in rgs.iter().enumerate() {
                    blocks[b].push(i + 1);
                }
                out.push(FCurvePartition { n, blocks });
            }
            return;
        }
        // elements left must still be able to open the remaining blocks
        let remaining = n - pos;
        let needed = 3usize.saturating_sub(max_used);
        if remaining < needed {
            return;
        }
        let hi = (max_used + 1).min(3);
        for b in 0..=hi {
            rgs[pos] = b;
            rec(rgs, pos + 1, max_used.max(b), n, out);
        }
    }
    rec(&mut rgs, 1, 0, n, &mut out);
    out.sort();
    Ok(out)
}
