//! Cross-module properties: the bridge between the conformal blocks and GIT
//! degree formulas, the class identities, and the polyhedral certificates.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cbcones::cones::git_cone;
use cbcones::divisors::{
    cb_class, cb_fcurve_degree, gale, git_class, git_fcurve_degree, nontrivial_level,
    Linearization, WeightData,
};
use cbcones::fcurves::enumerate_fcurves;
use cbcones::polyhedra::{cone_contains, extremal_rays};
use cbcones::rational::{rat, rat_int, Rational};

/// All weight vectors with entries in lo..=hi.
fn weight_vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// A random rational point of Δ(d+1,n) with denominator q.
fn random_linearization(rng: &mut StdRng, d: i64, n: usize, q: i64) -> Linearization {
    let target = q * (d + 1);
    let mut a: Vec<i64> = (0..n).map(|_| rng.random_range(0..=q)).collect();
    let mut sum: i64 = a.iter().sum();
    while sum != target {
        let i = rng.random_range(0..n);
        if sum < target && a[i] < q {
            a[i] += 1;
            sum += 1;
        } else if sum > target && a[i] > 0 {
            a[i] -= 1;
            sum -= 1;
        }
    }
    Linearization::new(d, a.into_iter().map(|p| rat(p, q)).collect()).unwrap()
}

#[test]
fn cb_and_git_degrees_agree_up_to_m() {
    // x = c/m turns the residue formula into m times the distance formula
    for n in [5usize, 6] {
        let curves = enumerate_fcurves(n).unwrap();
        for m in 2..=3i64 {
            for c in weight_vectors(n, 1, m - 1) {
                let w = WeightData::new(m, c.clone()).unwrap();
                let Some(d) = nontrivial_level(&w) else { continue };
                let x: Vec<Rational> = c.iter().map(|&ci| rat(ci, m)).collect();
                let l = Linearization::new(d, x).unwrap();
                for p in &curves {
                    let lhs = rat_int(cb_fcurve_degree(&w, p).unwrap());
                    let rhs = git_fcurve_degree(&l, p).unwrap() * rat_int(m);
                    assert_eq!(lhs, rhs, "w=({m},{c:?}), p={p:?}");
                }
            }
        }
    }
}

#[test]
fn residue_and_floor_gates_agree() {
    let n = 6usize;
    let curves = enumerate_fcurves(n).unwrap();
    for m in 2..=4i64 {
        for c in weight_vectors(n, 1, m - 1) {
            let w = WeightData::new(m, c.clone()).unwrap();
            let Some(d) = nontrivial_level(&w) else { continue };
            let x: Vec<Rational> = c.iter().map(|&ci| rat(ci, m)).collect();
            let int_c: Vec<Rational> = c.iter().map(|&ci| rat_int(ci)).collect();
            let l = Linearization::new(d, x.clone()).unwrap();
            for p in &curves {
                let ev = p.evaluate_blocks(&int_c, Some(m)).unwrap();
                let nu_sum: i64 = ev.residues.unwrap().iter().sum();
                let ev_x = p.evaluate_blocks(l.coords(), None).unwrap();
                let floor_sum: BigInt = ev_x.floors.iter().sum();
                assert_eq!(
                    nu_sum == 2 * m,
                    floor_sum == BigInt::from(d - 1),
                    "gates disagree at w=({m},{c:?}), p={p:?}"
                );
            }
        }
    }
}

#[test]
fn duality_fixes_every_class() {
    for n in [5usize, 6] {
        for m in 2..=3i64 {
            for c in weight_vectors(n, 0, m) {
                let w = WeightData::new(m, c).unwrap();
                assert_eq!(cb_class(&w), cb_class(&w.dual()));
            }
        }
    }
}

#[test]
fn gale_transform_preserves_classes() {
    let mut rng = StdRng::seed_from_u64(0x67_61_6c_65);
    for n in [5usize, 6, 7] {
        for _ in 0..40 {
            let d = rng.random_range(1..=(n as i64 - 3));
            let q = rng.random_range(2..=10);
            let l = random_linearization(&mut rng, d, n, q);
            let g = gale(&l).unwrap();
            assert_eq!(gale(&g).unwrap(), l, "Gale is an involution");
            assert_eq!(git_class(&l), git_class(&g), "classes differ at {l:?}");
        }
    }
}

#[test]
fn trivial_weights_propagate_through_forgetful_maps() {
    for n in [5usize, 6] {
        let curves = enumerate_fcurves(n).unwrap();
        let small = enumerate_fcurves(n - 1).unwrap();
        for m in 2..=3i64 {
            for mut c in weight_vectors(n - 1, 1, m - 1) {
                for trivial in [0, m] {
                    c.push(trivial);
                    let w = WeightData::new(m, c.clone()).unwrap();
                    let mut c_small = c.clone();
                    c_small.pop();
                    let w_small = WeightData::new(m, c_small).unwrap();
                    for p in &curves {
                        let deg = cb_fcurve_degree(&w, p).unwrap();
                        match p.forget(n).unwrap() {
                            None => assert_eq!(deg, 0, "contracted curve must be trivial"),
                            Some(img) => {
                                let j = small.binary_search(&img).unwrap();
                                assert_eq!(
                                    deg,
                                    cb_fcurve_degree(&w_small, &small[j]).unwrap(),
                                    "w=({m},{c:?}), p={p:?}"
                                );
                            }
                        }
                    }
                    c.pop();
                }
            }
        }
    }
}

#[test]
fn contraction_witnesses_force_degree_zero() {
    // if x_{n_i} >= alpha_i with alpha summing to d, or x_{n_i} <= beta_i
    // with beta_i >= 1 summing to d+2, the curve is contracted
    let mut rng = StdRng::seed_from_u64(0xa1fa);
    let compositions = |total: i64, min: i64| -> Vec<[i64; 4]> {
        let mut out = Vec::new();
        for a in min..=total {
            for b in min..=total {
                for c in min..=total {
                    let d = total - a - b - c;
                    if d >= min {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    };
    for n in [5usize, 6] {
        let curves = enumerate_fcurves(n).unwrap();
        for _ in 0..30 {
            let d = rng.random_range(1..=(n as i64 - 3));
            let q = rng.random_range(2..=8);
            let l = random_linearization(&mut rng, d, n, q);
            let alphas = compositions(d, 0);
            let betas = compositions(d + 2, 1);
            for p in &curves {
                let ev = p.evaluate_blocks(l.coords(), None).unwrap();
                let has_alpha = alphas.iter().any(|alpha| {
                    (0..4).all(|i| ev.block_sums[i] >= rat_int(alpha[i]))
                });
                let has_beta = betas.iter().any(|beta| {
                    (0..4).all(|i| ev.block_sums[i] <= rat_int(beta[i]))
                });
                if has_alpha || has_beta {
                    assert_eq!(
                        git_fcurve_degree(&l, p).unwrap(),
                        rat_int(0),
                        "witnessed contraction must have degree zero: {l:?} {p:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn degrees_are_permutation_equivariant() {
    let mut rng = StdRng::seed_from_u64(0x5e_71);
    let n = 6usize;
    let curves = enumerate_fcurves(n).unwrap();
    for _ in 0..10 {
        // random permutation of 1..=n
        let mut sigma: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            sigma.swap(i, j);
        }
        let c: Vec<i64> = (0..n).map(|_| rng.random_range(0..=4)).collect();
        let w = WeightData::new(4, c).unwrap();
        let w_perm = w.permuted(&sigma).unwrap();
        let d = rng.random_range(1..=(n as i64 - 3));
        let l = random_linearization(&mut rng, d, n, 6);
        let l_perm = l.permuted(&sigma).unwrap();
        for p in &curves {
            let p_perm = p.permute(&sigma).unwrap();
            assert_eq!(
                cb_fcurve_degree(&w, p).unwrap(),
                cb_fcurve_degree(&w_perm, &p_perm).unwrap()
            );
            assert_eq!(
                git_fcurve_degree(&l, p).unwrap(),
                git_fcurve_degree(&l_perm, &p_perm).unwrap()
            );
        }
    }
}

#[test]
fn git_degrees_stay_within_half() {
    let mut rng = StdRng::seed_from_u64(0xb0b);
    for _ in 0..50 {
        let n = rng.random_range(5..=7);
        let d = rng.random_range(1..=(n as i64 - 3));
        let q = rng.random_range(2..=12);
        let l = random_linearization(&mut rng, d, n, q);
        for v in git_class(&l).values() {
            assert!(!v.is_negative());
            assert!(*v <= rat(1, 2));
        }
    }
}

#[test]
fn symmetric_weight_classes_are_fixed_vectors() {
    // S_n-invariant weights give class vectors constant on F-curve orbits,
    // i.e. invariant under relabeling
    let n = 6usize;
    let curves = enumerate_fcurves(n).unwrap();
    let w = WeightData::new(6, vec![2; n]).unwrap();
    let cls = cb_class(&w);
    let sigma = [2usize, 3, 4, 5, 6, 1];
    for (i, p) in curves.iter().enumerate() {
        let j = curves.binary_search(&p.permute(&sigma).unwrap()).unwrap();
        assert_eq!(cls.values()[i], cls.values()[j]);
    }
}

#[test]
fn git_cones_pair_up_under_gale() {
    let a = git_cone(1, 5).unwrap();
    let b = git_cone(2, 5).unwrap();
    assert_eq!(a.cone().generators(), b.cone().generators());
    assert_eq!(a.cone().extremal_indices(), b.cone().extremal_indices());
}

#[test]
fn every_generator_lies_in_the_extremal_subcone() {
    let report = git_cone(1, 5).unwrap();
    let extremal: Vec<Vec<Rational>> = report
        .cone()
        .extremal_generators()
        .iter()
        .map(|g| g.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    for g in report.cone().generators() {
        let v: Vec<Rational> = g.iter().map(|x| Rational::from_integer(x.clone())).collect();
        assert!(cone_contains(&extremal, &v).unwrap().is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Known-feasible combinations are always certified feasible, and the
    /// certificate reproduces the vector exactly.
    #[test]
    fn lp_certifies_known_members(
        gens in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..6),
        coeffs in prop::collection::vec((0i64..=5, 1i64..=4), 1..6),
    ) {
        let gens: Vec<Vec<Rational>> = gens
            .into_iter()
            .map(|g| g.into_iter().map(rat_int).collect())
            .collect();
        let mut v = vec![Rational::zero(); 4];
        for (g, (p, q)) in gens.iter().zip(coeffs.iter()) {
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi += gi * rat(*p, *q);
            }
        }
        let cert = cone_contains(&gens, &v).unwrap();
        prop_assert!(cert.is_some());
        let lambda = cert.unwrap();
        prop_assert!(lambda.iter().all(|c| !c.is_negative()));
        for i in 0..4 {
            let s: Rational = gens.iter().zip(&lambda).map(|(g, c)| &g[i] * c).sum();
            prop_assert_eq!(s, v[i].clone());
        }
    }

    /// Extremal-ray extraction is idempotent and its output spans the input.
    #[test]
    fn extremal_extraction_is_idempotent(
        gens in prop::collection::vec(prop::collection::vec(0i64..=5, 3), 1..7),
    ) {
        let gens: Vec<Vec<Rational>> = gens
            .into_iter()
            .map(|g| g.into_iter().map(rat_int).collect())
            .collect();
        let cone = extremal_rays(&gens).unwrap();
        let extremal: Vec<Vec<Rational>> = cone
            .extremal_generators()
            .iter()
            .map(|g| g.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        if !extremal.is_empty() {
            let again = extremal_rays(&extremal).unwrap();
            prop_assert_eq!(again.extremal_generators(), cone.extremal_generators());
            prop_assert!(again.extremal_flags().iter().all(|&b| b));
        }
        for g in &gens {
            if g.iter().all(|x| x.is_zero()) {
                continue;
            }
            prop_assert!(cone_contains(&extremal, g).unwrap().is_some());
        }
    }

    /// The two tableaux-degree routes agree on random rational points.
    #[test]
    fn tableaux_oracles_agree_on_random_points(
        a in 0i64..=12, b in 0i64..=12, c in 0i64..=12, q in 2i64..=12,
    ) {
        let d = 2 * q - a - b - c;
        prop_assume!((0..=q).contains(&a) && (0..=q).contains(&b) && (0..=q).contains(&c) && (0..=q).contains(&d));
        let y = [rat(a, q), rat(b, q), rat(c, q), rat(d, q)];
        let brute = cbcones::tableaux::degree_bruteforce(&y).unwrap();
        let closed = cbcones::tableaux::degree_closedform(&y).unwrap();
        prop_assert_eq!(brute, closed);
    }
}

/// Full-strength membership sweep at n = 6 (minutes of LP); run with
/// `cargo test -p cbcones --test invariants -- --ignored`.
#[test]
#[ignore]
fn cb_classes_lie_in_the_cone_n6() {
    use std::collections::BTreeSet;
    let report = cbcones::cones::cb_cone(6).unwrap();
    let gens: Vec<Vec<Rational>> = report
        .cone()
        .generators()
        .iter()
        .map(|g| g.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let mut distinct: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for m in 2..=6i64 {
        for c in weight_vectors(6, 0, m) {
            let w = WeightData::new(m, c).unwrap();
            let cls = cb_class(&w);
            if !cls.is_zero() {
                distinct.insert(cls.values().to_vec());
            }
        }
    }
    for cls in &distinct {
        assert!(cone_contains(&gens, cls).unwrap().is_some());
    }
}
