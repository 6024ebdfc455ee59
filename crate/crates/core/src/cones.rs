//! GIT cones and the conformal blocks cone.
//!
//! The degree-d GIT cone is spanned by the classes of the chamber vertices
//! of Δ(d+1,n): polarizations vary linearly within chambers, so every
//! extremal ray of the cone of pulled-back polarizations comes from a
//! vertex. The conformal blocks cone coincides with the union of the GIT
//! cones over d, and by Gale duality the degrees d and n−d−2 give the same
//! cone, so d ≤ ⌊n/2⌋−1 suffices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::divisors::{cb_class, git_class, nontrivial_level, DivisorClass, Linearization, WeightData};
use crate::error::{Error, Result};
use crate::polyhedra::{chamber_vertices, from_primitive_generators, primitive, rank, RationalCone};
use crate::rational::{rat, Rational};

/// What produced a cone generator: a chamber vertex linearization or a
/// conformal blocks weight datum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeneratorSource {
    Vertex { d: i64, x: Vec<Rational> },
    Weight { m: i64, c: Vec<i64> },
}

/// A generated cone of divisor classes with provenance per generator.
#[derive(Clone, Debug)]
pub struct ConeReport {
    n: usize,
    cone: RationalCone,
    /// Sources aligned with `cone.generators()`; one generator can arise
    /// from several vertices.
    sources: Vec<Vec<GeneratorSource>>,
    rank: usize,
}

impl ConeReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn sources(&self) -> &[Vec<GeneratorSource>] {
        &self.sources
    }

    /// Rank of the span of the generators.
    pub fn rank(&self) -> usize {
        self.rank
    }
}

type GeneratorMap = BTreeMap<Vec<BigInt>, Vec<GeneratorSource>>;

/// Nonzero primitive vertex classes of the degree-d decomposition, keyed by
/// the class vector, with the vertices that produced each one.
fn git_generators(d: i64, n: usize) -> Result<GeneratorMap> {
    let verts = chamber_vertices(d, n)?;
    let classes: Vec<Option<(Vec<BigInt>, Vec<Rational>)>> = verts
        .into_par_iter()
        .map(|x| {
            let l = Linearization::new(d, x.clone()).expect("vertex lies in the hypersimplex");
            let cls = git_class(&l);
            if cls.is_zero() {
                None
            } else {
                let prim = primitive(cls.values()).expect("nonzero class");
                Some((prim, x))
            }
        })
        .collect();
    let mut map: GeneratorMap = BTreeMap::new();
    for entry in classes.into_iter().flatten() {
        let (prim, x) = entry;
        map.entry(prim)
            .or_default()
            .push(GeneratorSource::Vertex { d, x });
    }
    Ok(map)
}

fn report_from_map(n: usize, map: GeneratorMap) -> Result<ConeReport> {
    let ambient = crate::divisors::fcurve_count(n)? as usize;
    let mut generators: Vec<Vec<BigInt>> = Vec::with_capacity(map.len());
    let mut sources: Vec<Vec<GeneratorSource>> = Vec::with_capacity(map.len());
    for (g, srcs) in map {
        generators.push(g);
        sources.push(srcs);
    }
    let rank = if generators.is_empty() {
        0
    } else {
        let as_rat: Vec<Vec<Rational>> = generators
            .iter()
            .map(|g| g.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        rank(&as_rat)?
    };
    let cone = from_primitive_generators(ambient, generators)?;
    Ok(ConeReport {
        n,
        cone,
        sources,
        rank,
    })
}

/// The degree-d GIT cone on n points: nonzero primitive classes of all
/// chamber vertices, with extremal rays flagged.
pub fn git_cone(d: i64, n: usize) -> Result<ConeReport> {
    report_from_map(n, git_generators(d, n)?)
}

/// The cone spanned by all level-one type A conformal blocks classes on n
/// points: the union of the degree-d GIT cones for d = 1,…,⌊n/2⌋−1 (Gale
/// duality covers the remaining degrees).
pub fn cb_cone(n: usize) -> Result<ConeReport> {
    if n < 4 {
        return Err(Error::invalid(format!("n must be at least 4, got {n}")));
    }
    let d_max = (n / 2) as i64 - 1;
    let mut merged: GeneratorMap = BTreeMap::new();
    for d in 1..=d_max {
        for (g, srcs) in git_generators(d, n)? {
            merged.entry(g).or_default().extend(srcs);
        }
    }
    report_from_map(n, merged)
}

/// One weight datum inspected by the symmetric-ray census.
#[derive(Clone, Debug)]
pub struct SymmetricEntry {
    pub m: i64,
    pub j: i64,
    /// The level d when the datum is nontrivial.
    pub level: Option<i64>,
    pub is_zero: bool,
    /// Expected proportionality factor j/(d+1) against the reference class
    /// with m = n and c = (d+1,…,d+1), for nonzero entries.
    pub factor: Option<Rational>,
    /// Whether class(m, j^n) equals factor times the reference class.
    pub proportional: bool,
}

/// Census of the symmetric conformal blocks rays on n points.
#[derive(Clone, Debug)]
pub struct SymmetricReport {
    pub n: usize,
    pub m_max: i64,
    pub entries: Vec<SymmetricEntry>,
    /// Number of distinct nonzero rays among the symmetric classes.
    pub distinct_rays: usize,
    /// The predicted count ⌊n/2⌋ − 1.
    pub expected_rays: usize,
    /// Whether class(n, k^n) = class(n, (n−k)^n) held for all 1 ≤ k ≤ n−1.
    pub gale_pairing_ok: bool,
    /// Whether class(n, 1^n) is the zero vector.
    pub unit_class_zero: bool,
    pub all_proportional: bool,
}

/// Sweep all symmetric weight data (m, (j,…,j)) with 2 ≤ m ≤ m_max and
/// 1 ≤ j ≤ m−1 whose total weight is divisible by m, verify each nonzero
/// class is j/(d+1) times the reference class with m = n, c = (d+1,…,d+1),
/// and count the distinct nonzero rays.
pub fn symmetric_report(n: usize, m_max: i64) -> Result<SymmetricReport> {
    if n < 5 {
        return Err(Error::invalid(format!("census needs n >= 5, got {n}")));
    }
    if m_max < n as i64 {
        return Err(Error::invalid(format!(
            "census needs m_max >= n = {n}, got {m_max}"
        )));
    }
    let mut entries = Vec::new();
    let mut rays: std::collections::BTreeSet<Vec<BigInt>> = std::collections::BTreeSet::new();
    // reference classes class(n, k^n), computed once per k
    let mut reference: BTreeMap<i64, DivisorClass> = BTreeMap::new();
    let mut reference_class = |k: i64| -> DivisorClass {
        reference
            .entry(k)
            .or_insert_with(|| {
                let w = WeightData::new(n as i64, vec![k; n]).expect("0 <= k <= n");
                cb_class(&w)
            })
            .clone()
    };

    for m in 2..=m_max {
        for j in 1..m {
            if (n as i64 * j) % m != 0 {
                continue;
            }
            let w = WeightData::new(m, vec![j; n])?;
            let cls = cb_class(&w);
            let level = nontrivial_level(&w);
            let is_zero = cls.is_zero();
            let (factor, proportional) = match level {
                Some(d) => {
                    let f = rat(j, d + 1);
                    let reference = reference_class(d + 1);
                    (Some(f.clone()), cls == reference.scale(&f))
                }
                // trivial level: the class must simply vanish
                None => (None, is_zero),
            };
            if !is_zero {
                rays.insert(primitive(cls.values())?);
            }
            entries.push(SymmetricEntry {
                m,
                j,
                level,
                is_zero,
                factor,
                proportional,
            });
        }
    }

    let mut gale_pairing_ok = true;
    for k in 1..n as i64 {
        let a = reference_class(k);
        let b = reference_class(n as i64 - k);
        if a != b {
            gale_pairing_ok = false;
        }
    }
    let unit_class_zero = reference_class(1).is_zero();
    let all_proportional = entries.iter().all(|e| e.proportional);

    Ok(SymmetricReport {
        n,
        m_max,
        entries,
        distinct_rays: rays.len(),
        expected_rays: n / 2 - 1,
        gale_pairing_ok,
        unit_class_zero,
        all_proportional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use num_traits::Zero;

    #[test]
    fn git_cone_minimal_case() {
        // the only nonzero vertex class at (1,4) is the one from the
        // symmetric vertex; boundary vertices of type (1,1,0,0) contract
        let report = git_cone(1, 4).unwrap();
        assert_eq!(report.cone().generators(), &[vec![BigInt::from(1)]]);
        assert_eq!(report.cone().extremal_flags(), &[true]);
        assert_eq!(report.rank(), 1);
        let srcs = &report.sources()[0];
        assert_eq!(
            srcs,
            &vec![GeneratorSource::Vertex {
                d: 1,
                x: vec![rat(1, 2); 4],
            }]
        );
    }

    #[test]
    fn git_cone_generators_are_nef() {
        let report = git_cone(1, 5).unwrap();
        assert!(!report.cone().generators().is_empty());
        for g in report.cone().generators() {
            assert!(g.iter().all(|x| x >= &BigInt::zero()));
        }
    }

    #[test]
    fn git_cone_n5_contains_the_forgetful_pullback_generator() {
        // the class of (1/2,1/2,1/2,1/2,0) pulls back the n=4 generator:
        // zero exactly on F-curves where {5} is a singleton block
        let report = git_cone(1, 5).unwrap();
        let x = vec![rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2), rat_int(0)];
        let l = Linearization::new(1, x.clone()).unwrap();
        let cls = git_class(&l);
        assert!(!cls.is_zero());
        let prim = primitive(cls.values()).unwrap();
        assert!(report.cone().generators().contains(&prim));
        let curves = crate::fcurves::enumerate_fcurves(5).unwrap();
        for (i, q) in curves.iter().enumerate() {
            match q.forget(5).unwrap() {
                None => assert_eq!(cls.values()[i], rat_int(0)),
                Some(_) => assert_eq!(cls.values()[i], rat(1, 2)),
            }
        }
    }

    #[test]
    fn cb_cone_small_ranks() {
        let report = cb_cone(4).unwrap();
        assert_eq!(report.cone().generators().len(), 1);
        assert_eq!(report.rank(), 1);

        let report = cb_cone(5).unwrap();
        assert_eq!(report.rank(), 5);
    }

    #[test]
    fn symmetric_census_n6() {
        let report = symmetric_report(6, 12).unwrap();
        assert_eq!(report.distinct_rays, 2);
        assert_eq!(report.expected_rays, 2);
        assert!(report.all_proportional);
        assert!(report.gale_pairing_ok);
        assert!(report.unit_class_zero);
        // the (m=2, j=1) entry is a third of the reference class at k = 3
        let e = report
            .entries
            .iter()
            .find(|e| e.m == 2 && e.j == 1)
            .unwrap();
        assert_eq!(e.level, Some(2));
        assert_eq!(e.factor, Some(rat(1, 3)));
        assert!(e.proportional && !e.is_zero);
    }

    #[test]
    fn symmetric_census_rejects_small_inputs() {
        assert!(symmetric_report(4, 10).is_err());
        assert!(symmetric_report(6, 5).is_err());
    }
}
