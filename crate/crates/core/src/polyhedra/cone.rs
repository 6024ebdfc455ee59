//! Rational polyhedral cones: primitive ray generators, exact membership
//! with certificates, and extremal-ray extraction.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyhedra::lp::feasible_point;
use crate::rational::{denominator_lcm, entry_gcd, Rational};

/// A finitely generated cone, stored as primitive integer ray generators
/// with extremality flags.
///
/// Generators are deduplicated up to positive scaling and sorted
/// lexicographically; no two are positive multiples of one another.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<Vec<BigInt>>,
    extremal: Vec<bool>,
}

impl RationalCone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// All ray generators, primitive and lexicographically sorted.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Extremality flag per generator.
    pub fn extremal_flags(&self) -> &[bool] {
        &self.extremal
    }

    /// Indices of the extremal generators.
    pub fn extremal_indices(&self) -> Vec<usize> {
        (0..self.generators.len())
            .filter(|&i| self.extremal[i])
            .collect()
    }

    /// The extremal generators themselves.
    pub fn extremal_generators(&self) -> Vec<Vec<BigInt>> {
        self.extremal_indices()
            .into_iter()
            .map(|i| self.generators[i].clone())
            .collect()
    }
}

/// The primitive integer vector spanning the same ray as `v`: denominators
/// cleared and the entry gcd divided out. Errors on the zero vector.
pub fn primitive(v: &[Rational]) -> Result<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::invalid(
            "the zero vector spans no ray".to_string(),
        ));
    }
    let lcm = denominator_lcm(v);
    let ints: Vec<BigInt> = v
        .iter()
        .map(|r| (r * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = entry_gcd(&ints);
    debug_assert!(g.is_positive());
    Ok(ints.into_iter().map(|x| x / &g).collect())
}

/// Decide whether `v` lies in the cone spanned by `generators`, exactly.
///
/// Returns `Some(λ)` with nonnegative rational coefficients satisfying
/// Σ λ_j g_j = v when it does, and `None` when it does not.
pub fn cone_contains(
    generators: &[Vec<Rational>],
    v: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    let dim = v.len();
    if generators.iter().any(|g| g.len() != dim) {
        return Err(Error::invalid(
            "generator dimension does not match the test vector".to_string(),
        ));
    }
    // coordinate rows, generator columns
    let a: Vec<Vec<Rational>> = (0..dim)
        .map(|i| generators.iter().map(|g| g[i].clone()).collect())
        .collect();
    let lambda = feasible_point(&a, v);
    if let Some(ref l) = lambda {
        debug_assert!(certificate_holds(generators, l, v));
    }
    Ok(lambda)
}

fn certificate_holds(generators: &[Vec<Rational>], lambda: &[Rational], v: &[Rational]) -> bool {
    if lambda.len() != generators.len() || lambda.iter().any(|c| c.is_negative()) {
        return false;
    }
    (0..v.len()).all(|i| {
        let s: Rational = generators
            .iter()
            .zip(lambda)
            .map(|(g, c)| &g[i] * c)
            .sum();
        s == v[i]
    })
}

/// Normalize, deduplicate, and flag the extremal rays of a generating set.
///
/// A generator is extremal exactly when it is not a nonnegative combination
/// of the remaining generators. Zero vectors are discarded; an all-zero
/// input yields the empty cone.
pub fn extremal_rays(generators: &[Vec<Rational>]) -> Result<RationalCone> {
    if generators.is_empty() {
        return Err(Error::invalid("empty generator list".to_string()));
    }
    let dim = generators[0].len();
    if generators.iter().any(|g| g.len() != dim) {
        return Err(Error::invalid("generators have mixed lengths".to_string()));
    }
    let mut prim: Vec<Vec<BigInt>> = Vec::new();
    for g in generators {
        if g.iter().all(|x| x.is_zero()) {
            continue;
        }
        prim.push(primitive(g)?);
    }
    prim.sort();
    prim.dedup();
    from_primitive_generators(dim, prim)
}

/// Build a cone from already-primitive, sorted, deduplicated generators,
/// computing extremality flags by LP.
pub(crate) fn from_primitive_generators(
    ambient_dim: usize,
    generators: Vec<Vec<BigInt>>,
) -> Result<RationalCone> {
    let as_rational: Vec<Vec<Rational>> = generators
        .iter()
        .map(|g| g.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let extremal: Vec<bool> = (0..generators.len())
        .into_par_iter()
        .map(|i| {
            let others: Vec<Vec<Rational>> = as_rational
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let contained = cone_contains(&others, &as_rational[i])
                .expect("dimensions agree")
                .is_some();
            !contained
        })
        .collect();
    Ok(RationalCone {
        ambient_dim,
        generators,
        extremal,
    })
}
