//! Hypersimplex wall arrangements and chamber-decomposition vertices.
//!
//! The GIT chamber decomposition of Δ(d+1,n) is cut out by the walls
//! Σ_{i∈I} x_i = k for proper nonempty subsets I and integer levels
//! 1 ≤ k ≤ d, together with the box facets x_i = 0 and x_i = 1. A vertex is
//! a point of the closed hypersimplex where the active constraints, together
//! with the ambient equation Σx = d+1, have rank n.
//!
//! Enumeration is a depth-first search over active-constraint sets in
//! canonical order, pruning by incremental rank and by exact interval
//! propagation of the partial bounding box. The search is restricted to
//! representatives with weakly decreasing coordinates; since the wall family
//! is permutation-stable, expanding each representative's orbit under
//! coordinate permutations recovers the full vertex set.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polyhedra::linalg::{AddOutcome, ReducedRow, RrefSystem};
use crate::rational::{rat_int, Rational};

/// One hyperplane of the chamber decomposition: Σ_{i∈I} x_i = level.
///
/// Interior walls have 1 ≤ level ≤ d and are stored with 1 ∈ I, the
/// canonical representative of the pair (I, k) ~ (I^c, d+1−k) on the ambient
/// hyperplane. Box facets are singletons with level 0 or 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Wall {
    subset: Vec<usize>,
    level: i64,
    kind: WallKind,
}

/// Whether a wall is an interior chamber wall or a facet of the cube.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum WallKind {
    Interior,
    BoxFacet,
}

impl Wall {
    /// The index set I, sorted ascending (1-based).
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// The level k of the equation Σ_{i∈I} x_i = k.
    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn kind(&self) -> WallKind {
        self.kind
    }
}

fn check_range(d: i64, n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::invalid(format!("n must be at least 4, got {n}")));
    }
    if d < 1 || d > n as i64 - 3 {
        return Err(Error::invalid(format!(
            "d must satisfy 1 <= d <= n-3 = {}, got {d}",
            n as i64 - 3
        )));
    }
    Ok(())
}

/// Interior wall representatives as (bitmask, level); bit i stands for
/// coordinate i+1, and every mask contains bit 0.
fn interior_masks(d: i64, n: usize) -> Vec<(u64, i64)> {
    let full: u64 = (1 << n) - 1;
    let mut out = Vec::new();
    for rest in 0..(1u64 << (n - 1)) {
        let mask = 1 | (rest << 1);
        if mask == full {
            continue;
        }
        for k in 1..=d {
            out.push((mask, k));
        }
    }
    out
}

fn mask_to_subset(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// All walls of the chamber decomposition of Δ(d+1,n): interior walls up to
/// the complement identification (sorted by subset, then level), followed by
/// the 2n box facets.
pub fn walls(d: i64, n: usize) -> Result<Vec<Wall>> {
    check_range(d, n)?;
    let mut interior: Vec<Wall> = interior_masks(d, n)
        .into_iter()
        .map(|(mask, level)| Wall {
            subset: mask_to_subset(mask, n),
            level,
            kind: WallKind::Interior,
        })
        .collect();
    interior.sort();
    let mut out = interior;
    for i in 1..=n {
        for level in 0..=1 {
            out.push(Wall {
                subset: vec![i],
                level,
                kind: WallKind::BoxFacet,
            });
        }
    }
    Ok(out)
}

/// Feasibility caps of the vertex enumeration; larger inputs fail fast.
fn check_caps(d: i64, n: usize) -> Result<()> {
    let cap = if d == 1 { 7 } else { 6 };
    if n > cap {
        return Err(Error::UnsupportedSize(format!(
            "chamber vertex enumeration supports n <= {cap} at d = {d}, got n = {n}"
        )));
    }
    Ok(())
}

/// Exact interval bounds for the coordinates of any solution of `sys` that
/// lies in the cube [0,1]^n with weakly decreasing coordinates. Returns
/// `None` when propagation proves there is no such solution.
fn propagate_bounds(sys: &RrefSystem, n: usize) -> Option<(Vec<Rational>, Vec<Rational>)> {
    let mut lo = vec![Rational::zero(); n];
    let mut hi = vec![Rational::one(); n];
    for _ in 0..3 {
        let mut changed = false;
        for i in 1..n {
            if hi[i] > hi[i - 1] {
                hi[i] = hi[i - 1].clone();
                changed = true;
            }
        }
        for i in (0..n - 1).rev() {
            if lo[i] < lo[i + 1] {
                lo[i] = lo[i + 1].clone();
                changed = true;
            }
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return None;
        }
        let mut ok = true;
        sys.for_each_row(|coeffs, rhs| {
            if !ok {
                return;
            }
            // per-variable contribution intervals to Σ coeffs[j]·x_j
            let mut sum_min = Rational::zero();
            let mut sum_max = Rational::zero();
            let mut contrib: Vec<(usize, Rational, Rational)> = Vec::new();
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let a = c * &lo[j];
                let b = c * &hi[j];
                let (cmin, cmax) = if a <= b { (a, b) } else { (b, a) };
                sum_min += &cmin;
                sum_max += &cmax;
                contrib.push((j, cmin, cmax));
            }
            if &sum_min > rhs || &sum_max < rhs {
                ok = false;
                return;
            }
            for (j, cmin, cmax) in contrib {
                let c = &coeffs[j];
                // coeffs[j]·x_j = rhs − Σ_{k≠j} coeffs[k]·x_k
                let rest_min = &sum_min - &cmin;
                let rest_max = &sum_max - &cmax;
                let target_lo = rhs - &rest_max;
                let target_hi = rhs - &rest_min;
                let (nlo, nhi) = if c > &Rational::zero() {
                    (&target_lo / c, &target_hi / c)
                } else {
                    (&target_hi / c, &target_lo / c)
                };
                if nlo > lo[j] {
                    lo[j] = nlo;
                    changed = true;
                }
                if nhi < hi[j] {
                    hi[j] = nhi;
                    changed = true;
                }
                if lo[j] > hi[j] {
                    ok = false;
                    return;
                }
            }
        });
        if !ok {
            return None;
        }
        if !changed {
            break;
        }
    }
    Some((lo, hi))
}

fn is_box_descending(x: &[Rational]) -> bool {
    let one = Rational::one();
    if x.iter().any(|v| v < &Rational::zero() || v > &one) {
        return false;
    }
    x.windows(2).all(|w| w[0] >= w[1])
}

fn try_candidate(
    sys: &RrefSystem,
    cons: &[(u64, i64)],
    idx: usize,
    n: usize,
    lo: &[Rational],
    hi: &[Rational],
    out: &mut BTreeSet<Vec<Rational>>,
) {
    let (mask, k) = cons[idx];
    // the wall must be reachable inside the current bounding box
    let mut smin = Rational::zero();
    let mut smax = Rational::zero();
    for i in 0..n {
        if mask >> i & 1 == 1 {
            smin += &lo[i];
            smax += &hi[i];
        }
    }
    let k_rat = rat_int(k);
    if smin > k_rat || smax < k_rat {
        return;
    }
    let row: Vec<Rational> = (0..n)
        .map(|i| {
            if mask >> i & 1 == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    match sys.reduce_row(row, k_rat) {
        ReducedRow::Redundant | ReducedRow::Inconsistent => {}
        ReducedRow::Independent(reduced) => {
            let mut child = sys.clone();
            child.push_reduced(reduced);
            search(&child, cons, idx + 1, n, out);
        }
    }
}

fn search(
    sys: &RrefSystem,
    cons: &[(u64, i64)],
    start: usize,
    n: usize,
    out: &mut BTreeSet<Vec<Rational>>,
) {
    if sys.rank() == n {
        let x = sys.full_rank_solution().expect("full rank");
        if is_box_descending(&x) {
            out.insert(x);
        }
        return;
    }
    let Some((lo, hi)) = propagate_bounds(sys, n) else {
        return;
    };
    let last = cons.len() - (n - sys.rank());
    for idx in start..=last {
        try_candidate(sys, cons, idx, n, &lo, &hi, out);
    }
}

/// Enumerate multiset permutations of `asc` (given ascending) in
/// lexicographic order.
fn next_permutation(v: &mut [Rational]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All vertices of the GIT chamber decomposition of Δ(d+1,n).
///
/// The result is deduplicated, sorted lexicographically, and closed under
/// coordinate permutations. Inputs above the documented caps (n ≤ 7 for
/// d = 1, n ≤ 6 for d ≥ 2) fail fast with an unsupported-size error.
pub fn chamber_vertices(d: i64, n: usize) -> Result<Vec<Vec<Rational>>> {
    check_range(d, n)?;
    check_caps(d, n)?;

    let mut cons: BTreeSet<(u64, i64)> = BTreeSet::new();
    for i in 0..n {
        cons.insert((1 << i, 0));
        cons.insert((1 << i, 1));
    }
    for w in interior_masks(d, n) {
        cons.insert(w);
    }
    // singletons and small subsets first: they pin coordinates early
    let mut cons: Vec<(u64, i64)> = cons.into_iter().collect();
    cons.sort_by_key(|&(mask, k)| (mask.count_ones(), mask, k));

    let mut sys = RrefSystem::new(n);
    let ambient = vec![Rational::one(); n];
    assert_eq!(sys.add_row(ambient, rat_int(d + 1)), AddOutcome::Added);

    // branch the first level in parallel; each branch owns its state and the
    // merged set is order-independent
    let root_bounds = propagate_bounds(&sys, n);
    let mut reps: BTreeSet<Vec<Rational>> = BTreeSet::new();
    if let Some((lo, hi)) = root_bounds {
        let last = cons.len() - (n - sys.rank());
        let branches: Vec<BTreeSet<Vec<Rational>>> = (0..=last)
            .into_par_iter()
            .map(|idx| {
                let mut local = BTreeSet::new();
                try_candidate(&sys, &cons, idx, n, &lo, &hi, &mut local);
                local
            })
            .collect();
        for branch in branches {
            reps.extend(branch);
        }
    }

    let mut all: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for rep in reps {
        let mut asc: Vec<Rational> = rep;
        asc.reverse();
        loop {
            all.insert(asc.clone());
            if !next_permutation(&mut asc) {
                break;
            }
        }
    }
    Ok(all.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn wall_counts() {
        let w = walls(1, 4).unwrap();
        let interior = w.iter().filter(|x| x.kind() == WallKind::Interior).count();
        let facets = w.iter().filter(|x| x.kind() == WallKind::BoxFacet).count();
        assert_eq!((interior, facets), (7, 8));

        let w = walls(1, 5).unwrap();
        let interior = w.iter().filter(|x| x.kind() == WallKind::Interior).count();
        let facets = w.iter().filter(|x| x.kind() == WallKind::BoxFacet).count();
        assert_eq!((interior, facets), (15, 10));

        let w = walls(2, 6).unwrap();
        let interior = w.iter().filter(|x| x.kind() == WallKind::Interior).count();
        let facets = w.iter().filter(|x| x.kind() == WallKind::BoxFacet).count();
        assert_eq!((interior, facets), (62, 12));

        assert!(walls(0, 5).is_err());
        assert!(walls(3, 5).is_err());
    }

    #[test]
    fn wall_representatives_contain_one() {
        for w in walls(2, 6).unwrap() {
            match w.kind() {
                WallKind::Interior => {
                    assert_eq!(w.subset()[0], 1);
                    assert!((1..=2).contains(&w.level()));
                }
                WallKind::BoxFacet => {
                    assert_eq!(w.subset().len(), 1);
                    assert!((0..=1).contains(&w.level()));
                }
            }
        }
    }

    #[test]
    fn vertices_of_the_smallest_case() {
        let verts = chamber_vertices(1, 4).unwrap();
        let mut expected: Vec<Vec<Rational>> = vec![vec![rat(1, 2); 4]];
        // six permutations of (1,1,0,0)
        for i in 0..4 {
            for j in (i + 1)..4 {
                let mut v = vec![rat(0, 1); 4];
                v[i] = rat(1, 1);
                v[j] = rat(1, 1);
                expected.push(v);
            }
        }
        expected.sort();
        assert_eq!(verts, expected);
    }

    #[test]
    fn vertices_n5_contain_the_known_points() {
        let verts = chamber_vertices(1, 5).unwrap();
        let set: BTreeSet<_> = verts.iter().cloned().collect();
        // all permutations of (1,1,0,0,0)
        for i in 0..5 {
            for j in (i + 1)..5 {
                let mut v = vec![rat(0, 1); 5];
                v[i] = rat(1, 1);
                v[j] = rat(1, 1);
                assert!(set.contains(&v));
            }
        }
        // all permutations of (1/2,1/2,1/2,1/2,0)
        for z in 0..5 {
            let mut v = vec![rat(1, 2); 5];
            v[z] = rat(0, 1);
            assert!(set.contains(&v));
        }
    }

    #[test]
    fn vertices_lie_in_the_hypersimplex_and_are_symmetric() {
        for (d, n) in [(1usize, 5usize), (2, 5)] {
            let d = d as i64;
            let verts = chamber_vertices(d, n).unwrap();
            let set: BTreeSet<_> = verts.iter().cloned().collect();
            let one = Rational::one();
            for v in &verts {
                let s: Rational = v.iter().cloned().sum();
                assert_eq!(s, rat_int(d + 1));
                assert!(v.iter().all(|x| x >= &Rational::zero() && x <= &one));
                // a transposition and a cycle stay inside the set
                let mut t = v.clone();
                t.swap(0, n - 1);
                assert!(set.contains(&t));
                let mut c = v.clone();
                c.rotate_left(1);
                assert!(set.contains(&c));
            }
        }
    }

    #[test]
    fn gale_maps_vertex_sets_to_vertex_sets() {
        let v15 = chamber_vertices(1, 5).unwrap();
        let v25 = chamber_vertices(2, 5).unwrap();
        let mapped: BTreeSet<Vec<Rational>> = v15
            .iter()
            .map(|v| v.iter().map(|x| Rational::one() - x).collect())
            .collect();
        let target: BTreeSet<Vec<Rational>> = v25.into_iter().collect();
        assert_eq!(mapped, target);
    }

    #[test]
    fn caps_fail_fast() {
        assert!(matches!(
            chamber_vertices(1, 8),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(
            chamber_vertices(2, 7),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(chamber_vertices(4, 6), Err(Error::InvalidInput(_))));
    }
}
