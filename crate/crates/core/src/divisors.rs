//! Conformal blocks and GIT divisor classes as F-curve degree vectors.
//!
//! A level-one type A conformal blocks datum (m, c) pairs with a fractional
//! GIT polarization x on the hypersimplex Δ(d+1,n) through x = c/m. Both
//! sides assign a degree to every F-curve:
//!
//! * conformal blocks: reduce the block sums of c mod m to residues ν; the
//!   degree is min{ν_min, m − ν_max} when Σν = 2m and 0 otherwise;
//! * GIT: the degree is the least distance of a block sum of x to the
//!   integers when the block-sum floors add to d − 1, and 0 otherwise.
//!
//! The degree vectors over the canonical F-curve list determine the divisor
//! class, since F-curves span the 1-cycles. The two formulas agree up to the
//! factor m, which is tested exhaustively rather than assumed.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fcurves::{enumerate_fcurves, FCurvePartition};
use crate::rational::{rat, rat_int, Rational};

/// A type A, level one conformal blocks weight datum (m, c_1,…,c_n).
///
/// Each c_i indexes a fundamental weight of sl_m, with 0 and m standing for
/// the trivial weight; the level is fixed at one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightData {
    m: i64,
    c: Vec<i64>,
}

impl WeightData {
    /// Validate 0 ≤ c_i ≤ m, m ≥ 2, n ≥ 4.
    pub fn new(m: i64, c: Vec<i64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid(format!("m must be at least 2, got {m}")));
        }
        if c.len() < 4 {
            return Err(Error::invalid(format!(
                "need at least 4 weights, got {}",
                c.len()
            )));
        }
        if let Some(bad) = c.iter().find(|&&ci| ci < 0 || ci > m) {
            return Err(Error::invalid(format!(
                "weight {bad} outside 0..={m}"
            )));
        }
        Ok(WeightData { m, c })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn weights(&self) -> &[i64] {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// The dual datum (m − c_1,…,m − c_n); same divisor class.
    pub fn dual(&self) -> WeightData {
        WeightData {
            m: self.m,
            c: self.c.iter().map(|ci| self.m - ci).collect(),
        }
    }

    /// The datum (km, kc) entering the scaling identity.
    pub fn scaled(&self, k: i64) -> Result<WeightData> {
        if k < 1 {
            return Err(Error::invalid(format!("scale factor must be positive, got {k}")));
        }
        WeightData::new(self.m * k, self.c.iter().map(|ci| ci * k).collect())
    }

    /// Move the weight of point i to σ(i).
    pub fn permuted(&self, sigma: &[usize]) -> Result<WeightData> {
        let mut c = vec![0i64; self.c.len()];
        if sigma.len() != self.c.len() {
            return Err(Error::invalid("permutation length mismatch".to_string()));
        }
        for (i, &img) in sigma.iter().enumerate() {
            if img < 1 || img > self.c.len() {
                return Err(Error::invalid("not a bijection of 1..=n".to_string()));
            }
            c[img - 1] = self.c[i];
        }
        WeightData::new(self.m, c)
    }
}

/// A rational point of the hypersimplex Δ(d+1,n): a GIT polarization choice
/// for configurations of n points in projective d-space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Linearization {
    d: i64,
    x: Vec<Rational>,
}

impl Linearization {
    /// Validate 1 ≤ d ≤ n−3, 0 ≤ x_i ≤ 1 and Σx_i = d+1.
    ///
    /// The closed hypersimplex is allowed: boundary linearizations (zeros and
    /// ones among the x_i) are valid and simply yield degenerate classes.
    pub fn new(d: i64, x: Vec<Rational>) -> Result<Self> {
        let n = x.len() as i64;
        if n < 4 {
            return Err(Error::invalid(format!("need at least 4 coordinates, got {n}")));
        }
        if d < 1 || d > n - 3 {
            return Err(Error::invalid(format!(
                "d must satisfy 1 <= d <= n-3 = {}, got {d}",
                n - 3
            )));
        }
        if x.iter().any(|xi| xi < &rat_int(0) || xi > &rat_int(1)) {
            return Err(Error::invalid("coordinates must lie in [0, 1]".to_string()));
        }
        let sum: Rational = x.iter().cloned().sum();
        if sum != rat_int(d + 1) {
            return Err(Error::invalid(format!(
                "coordinates sum to {sum}, expected {}",
                d + 1
            )));
        }
        Ok(Linearization { d, x })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn coords(&self) -> &[Rational] {
        &self.x
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Move the weight of point i to σ(i).
    pub fn permuted(&self, sigma: &[usize]) -> Result<Linearization> {
        if sigma.len() != self.x.len() {
            return Err(Error::invalid("permutation length mismatch".to_string()));
        }
        let mut x = vec![Rational::zero(); self.x.len()];
        for (i, &img) in sigma.iter().enumerate() {
            if img < 1 || img > self.x.len() {
                return Err(Error::invalid("not a bijection of 1..=n".to_string()));
            }
            x[img - 1] = self.x[i].clone();
        }
        Linearization::new(self.d, x)
    }
}

/// The numerical class of a divisor: its intersection numbers over the
/// canonical F-curve list for n points.
///
/// Two divisors are equal in the numerical class group iff these vectors are
/// equal, since F-curves span the 1-cycles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorClass {
    n: usize,
    values: Vec<Rational>,
}

impl DivisorClass {
    /// Wrap a value vector, checking its length against the F-curve count.
    pub fn from_values(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = fcurve_count(n)?;
        if values.len() as u128 != expected {
            return Err(Error::invalid(format!(
                "class vector has length {}, expected {expected} for n={n}",
                values.len()
            )));
        }
        Ok(DivisorClass { n, values })
    }

    /// The zero class on n points.
    pub fn zero(n: usize) -> Result<Self> {
        let len = fcurve_count(n)?;
        Ok(DivisorClass {
            n,
            values: vec![Rational::zero(); len as usize],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Componentwise scaling by a rational factor.
    pub fn scale(&self, factor: &Rational) -> DivisorClass {
        DivisorClass {
            n: self.n,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Number of F-curves on n points, by inclusion-exclusion:
/// (4^n − 4·3^n + 6·2^n − 4) / 24.
pub fn fcurve_count(n: usize) -> Result<u128> {
    if n < 4 {
        return Err(Error::invalid(format!("n must be at least 4, got {n}")));
    }
    if n > 30 {
        return Err(Error::UnsupportedSize(format!(
            "F-curve count overflows for n={n}"
        )));
    }
    let pow = |b: i128, e: usize| b.pow(e as u32);
    let signed = (pow(4, n) - 4 * pow(3, n) + 6 * pow(2, n) - 4) / 24;
    Ok(signed as u128)
}

/// The integer d with Σc_i = m(d+1) and 1 ≤ d ≤ n−3, when it exists.
///
/// When it does not — the weight sum misses the root lattice, or d falls
/// outside the range — the divisor class is zero and `None` is returned.
pub fn nontrivial_level(w: &WeightData) -> Option<i64> {
    let total: i64 = w.c.iter().sum();
    if total % w.m != 0 {
        return None;
    }
    let d = total / w.m - 1;
    if d >= 1 && d <= w.n() as i64 - 3 {
        Some(d)
    } else {
        None
    }
}

fn block_residues(w: &WeightData, p: &FCurvePartition) -> [i64; 4] {
    std::array::from_fn(|b| {
        p.blocks()[b]
            .iter()
            .map(|&i| w.c[i - 1])
            .sum::<i64>()
            .rem_euclid(w.m)
    })
}

/// Degree of the conformal blocks divisor of `w` on the F-curve `p`.
///
/// Zero when the datum has no nontrivial level or when the block residues
/// miss Σν = 2m; otherwise min{ν_min, m − ν_max}.
pub fn cb_fcurve_degree(w: &WeightData, p: &FCurvePartition) -> Result<i64> {
    if p.n() != w.n() {
        return Err(Error::invalid(format!(
            "partition is on {} points but weights on {}",
            p.n(),
            w.n()
        )));
    }
    if nontrivial_level(w).is_none() {
        return Ok(0);
    }
    let nu = block_residues(w, p);
    if nu.iter().sum::<i64>() != 2 * w.m {
        return Ok(0);
    }
    let nu_min = *nu.iter().min().expect("four residues");
    let nu_max = *nu.iter().max().expect("four residues");
    Ok(nu_min.min(w.m - nu_max))
}

/// Degree of the pulled-back GIT polarization of `l` on the F-curve `p`.
///
/// The least distance of a block sum to the integers when the block-sum
/// floors add to d − 1, and zero otherwise.
pub fn git_fcurve_degree(l: &Linearization, p: &FCurvePartition) -> Result<Rational> {
    if p.n() != l.n() {
        return Err(Error::invalid(format!(
            "partition is on {} points but linearization on {}",
            p.n(),
            l.n()
        )));
    }
    let eval = p.evaluate_blocks(&l.x, None)?;
    let floor_sum: num_bigint::BigInt = eval.floors.iter().sum();
    if floor_sum != num_bigint::BigInt::from(l.d - 1) {
        return Ok(Rational::zero());
    }
    Ok(eval.dists.iter().min().expect("four distances").clone())
}

/// The full conformal blocks divisor class of `w`, over the canonical
/// F-curve list. The zero vector when the datum has no nontrivial level.
pub fn cb_class(w: &WeightData) -> DivisorClass {
    let curves = enumerate_fcurves(w.n()).expect("n >= 4 by construction");
    let values: Vec<Rational> = curves
        .par_iter()
        .map(|p| rat_int(cb_fcurve_degree(w, p).expect("sizes match")))
        .collect();
    DivisorClass { n: w.n(), values }
}

/// The divisor class of the pulled-back GIT polarization of `l`.
pub fn git_class(l: &Linearization) -> DivisorClass {
    let curves = enumerate_fcurves(l.n()).expect("n >= 4 by construction");
    let values: Vec<Rational> = curves
        .par_iter()
        .map(|p| git_fcurve_degree(l, p).expect("sizes match"))
        .collect();
    DivisorClass { n: l.n(), values }
}

/// The Gale transform x ↦ (1 − x_1,…,1 − x_n), landing in Δ(n−d−1, n).
///
/// An involution exchanging degree d with degree n − d − 2; it preserves the
/// pulled-back polarization class.
pub fn gale(l: &Linearization) -> Result<Linearization> {
    let n = l.n() as i64;
    let d_out = n - l.d - 2;
    if d_out < 1 {
        return Err(Error::invalid(format!(
            "Gale transform needs n-d-2 >= 1, got {d_out}"
        )));
    }
    let x = l.x.iter().map(|xi| rat_int(1) - xi).collect();
    Linearization::new(d_out, x)
}

/// One F-curve on which the scaling identity failed.
#[derive(Clone, Debug)]
pub struct ScalingMismatch {
    pub partition: FCurvePartition,
    pub base_degree: Rational,
    pub scaled_degree: Rational,
}

/// Outcome of checking the scaling identity for one (w, k).
#[derive(Clone, Debug)]
pub struct ScalingCheck {
    pub equal: bool,
    pub mismatches: Vec<ScalingMismatch>,
}

/// Check the divisor-class identity: the class of (m, c) equals 1/k times
/// the class of (km, kc), componentwise over all F-curves.
pub fn check_scaling_identity(w: &WeightData, k: i64) -> Result<ScalingCheck> {
    let scaled = w.scaled(k)?;
    let base = cb_class(w);
    let big = cb_class(&scaled).scale(&rat(1, k));
    let mut mismatches = Vec::new();
    if base != big {
        let curves = enumerate_fcurves(w.n())?;
        for (i, p) in curves.into_iter().enumerate() {
            if base.values[i] != big.values[i] {
                mismatches.push(ScalingMismatch {
                    partition: p,
                    base_degree: base.values[i].clone(),
                    scaled_degree: big.values[i].clone(),
                });
            }
        }
    }
    Ok(ScalingCheck {
        equal: mismatches.is_empty(),
        mismatches,
    })
}

/// Which covering-locus pullback of the Hodge class to compute.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambdaKind {
    Hyperelliptic,
    Trigonal,
}

impl std::str::FromStr for LambdaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hyperelliptic" => Ok(LambdaKind::Hyperelliptic),
            "trigonal" => Ok(LambdaKind::Trigonal),
            other => Err(Error::invalid(format!(
                "unknown kind {other:?}; expected hyperelliptic or trigonal"
            ))),
        }
    }
}

/// Pullback of the Hodge class under the hyperelliptic (n = 2g+2) or cyclic
/// trigonal (n = g+2, 3 | g+2) covering map, as a divisor class on n points.
///
/// Hyperelliptic: one half of the class of (2, (1,…,1)).
/// Trigonal: two thirds of the class of (g+2, ((g+2)/3,…,(g+2)/3)).
pub fn special_lambda_class(kind: LambdaKind, g: i64) -> Result<DivisorClass> {
    if g < 2 {
        return Err(Error::invalid(format!("genus must be at least 2, got {g}")));
    }
    match kind {
        LambdaKind::Hyperelliptic => {
            let n = (2 * g + 2) as usize;
            let w = WeightData::new(2, vec![1; n])?;
            Ok(cb_class(&w).scale(&rat(1, 2)))
        }
        LambdaKind::Trigonal => {
            if (g + 2) % 3 != 0 {
                return Err(Error::invalid(format!(
                    "trigonal class needs 3 | (g+2); got g = {g}"
                )));
            }
            let n = (g + 2) as usize;
            let w = WeightData::new(g + 2, vec![(g + 2) / 3; n])?;
            Ok(cb_class(&w).scale(&rat(2, 3)))
        }
    }
}
