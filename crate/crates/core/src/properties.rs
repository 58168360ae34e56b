//! Cross-module invariants over random monoids, cones and triples.

use std::collections::BTreeSet;

use proptest::prelude::*;

use crate::admissibility::{is_admissible, AdmissibleTriple};
use crate::linalg::cone::{dual_cone_rays, extreme_rays, facet_normals};
use crate::linalg::matrix::{int_vec, rat_vec};
use crate::linalg::Sublattice;
use crate::model::full_weight_monoid;
use crate::rootdata::{parse_type_string, BasedRootDatum, SimpleType};
use crate::smoothness::{decide_smooth, s_gamma};
use crate::sphericalroots::{enumerate_sigma_sc, sigma_n_of_gsaturated, sigma_sc_of_monoid, Pattern};
use crate::weightmonoid::WeightMonoid;

const SMALL: [&str; 8] = ["A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "A2xA1"];

fn sc(s: &str) -> BasedRootDatum {
    BasedRootDatum::simply_connected(&parse_type_string(s).unwrap(), 0).unwrap()
}

fn permuted(v: &[i64], perm: &[usize]) -> Vec<i64> {
    let mut out = vec![0; v.len()];
    for (i, &c) in v.iter().enumerate() {
        out[perm[i]] = c;
    }
    out
}

/// Random dominant generators over one of the small simply connected data.
fn monoid_strategy() -> impl Strategy<Value = WeightMonoid> {
    (0..SMALL.len(), prop::collection::vec(prop::collection::vec(0i64..3, 3), 1..4)).prop_map(|(t, raw)| {
        let d = sc(SMALL[t]);
        let n = d.dim();
        let gens: Vec<Vec<i64>> =
            raw.into_iter().map(|g| g[..n].to_vec()).filter(|g| g.iter().any(|&x| x != 0)).collect();
        WeightMonoid::new(d, gens).unwrap()
    })
}

#[test]
fn computed_s_lambda_plus_is_certified() {
    // Types where the exact computation departs from the tabulated closed form.
    let cases: [(&str, &[usize]); 6] = [
        ("A1", &[0]),
        ("A2", &[]),
        ("B4", &[1, 2, 3]),
        ("B6", &[1, 2, 3, 4, 5]),
        ("D5", &[1, 2, 3, 4]),
        ("E6", &[1, 2, 3, 4]),
    ];
    for (t, want) in cases {
        let m = full_weight_monoid(&sc(t)).unwrap();
        let sn = sigma_n_of_gsaturated(&m).unwrap();
        let sg = s_gamma(&m, &sn);
        assert_eq!(sg.members, want, "{t}");
        assert!(sg.verify(&m, &sn), "{t}");
    }
}

#[test]
fn catalog_is_automorphism_stable() {
    for t in ["A3", "D4", "E6", "A2xA2", "A1xA1xA1"] {
        let d = sc(t);
        let cat: BTreeSet<Vec<i64>> = enumerate_sigma_sc(&d).into_iter().map(|s| s.coeffs).collect();
        for perm in d.diagram().automorphisms() {
            let moved: BTreeSet<Vec<i64>> = cat.iter().map(|v| permuted(v, &perm)).collect();
            assert_eq!(moved, cat, "{t} {perm:?}");
        }
    }
}

#[test]
fn automorphisms_form_a_group() {
    for t in ["A3", "D4", "A2xA2", "B3", "A1xA1xA1"] {
        let d = sc(t);
        let auts: BTreeSet<Vec<usize>> = d.diagram().automorphisms().into_iter().collect();
        for p in &auts {
            for i in 0..p.len() {
                for j in 0..p.len() {
                    assert_eq!(d.cartan_entry(p[i], p[j]), d.cartan_entry(i, j));
                }
            }
            for q in &auts {
                let comp: Vec<usize> = (0..p.len()).map(|i| p[q[i]]).collect();
                assert!(auts.contains(&comp), "{t}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simple_type_round_trip(i in 0usize..40) {
        let all: Vec<SimpleType> = (1..=8).flat_map(SimpleType::all_of_rank).collect();
        let t = all[i % all.len()];
        prop_assert_eq!(t.to_string().parse::<SimpleType>().unwrap(), t);
        prop_assert_eq!(parse_type_string(&t.to_string().to_lowercase()).unwrap(), vec![t]);
    }

    #[test]
    fn typing_survives_root_permutation(t in 0..SMALL.len(), seed in any::<u64>()) {
        let d = sc(SMALL[t]);
        let n = d.num_simple();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let roots = perm.iter().map(|&i| d.simple_root(i).to_vec()).collect();
        let coroots = perm.iter().map(|&i| d.coroot(i).to_vec()).collect();
        let e = BasedRootDatum::from_vectors(roots, coroots, d.dim()).unwrap();
        let mut a = d.component_types();
        let mut b = e.component_types();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dual_of_dual_returns_extreme_rays(raw in prop::collection::vec(prop::collection::vec(0i64..4, 3), 3..6)) {
        let gens: Vec<_> = raw.iter().map(|g| int_vec(g)).filter(|g| g.iter().any(|x| *x != 0.into())).collect();
        prop_assume!(crate::linalg::matrix::rank_int(&gens, 3) == 3);
        let full = Sublattice::full(3);
        let dual = dual_cone_rays(&gens.iter().map(|g| rat_vec(g)).collect::<Vec<_>>(), &full).unwrap();
        let back = dual_cone_rays(&dual.iter().map(|g| rat_vec(g)).collect::<Vec<_>>(), &full).unwrap();
        let normals = facet_normals(&gens, 3).unwrap();
        let rays: BTreeSet<_> = extreme_rays(&gens, &normals, 3)
            .into_iter()
            .map(|r| crate::linalg::matrix::primitive_int(&r))
            .collect();
        prop_assert_eq!(back.into_iter().collect::<BTreeSet<_>>(), rays);
    }

    #[test]
    fn saturated_monoids_are_normal(m in monoid_strategy()) {
        if m.is_g_saturated() {
            prop_assert!(m.is_normal());
        }
    }

    #[test]
    fn simple_adapted_roots_have_one_functional(m in monoid_strategy()) {
        prop_assume!(m.is_g_saturated());
        for s in sigma_sc_of_monoid(&m).unwrap() {
            if let Some(a) = s.as_simple() {
                prop_assert_eq!(m.a_set(a).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn n_roots_are_sc_roots_with_simple_ones_doubled(m in monoid_strategy()) {
        prop_assume!(m.is_g_saturated());
        let n = m.datum().num_simple();
        let sc_set: BTreeSet<Vec<i64>> = sigma_sc_of_monoid(&m)
            .unwrap()
            .into_iter()
            .map(|s| match s.as_simple() {
                Some(a) => (0..n).map(|i| if i == a { 2 } else { 0 }).collect(),
                None => s.coeffs,
            })
            .collect();
        let n_set: BTreeSet<Vec<i64>> = sigma_n_of_gsaturated(&m).unwrap().into_iter().map(|s| s.coeffs).collect();
        prop_assert_eq!(n_set, sc_set);
    }

    #[test]
    fn verdicts_carry_checkable_certificates(m in monoid_strategy()) {
        let v = decide_smooth(&m);
        prop_assert_eq!(v.smooth.is_some(), v.g_saturated);
        if let Some(c) = v.certificate {
            prop_assert!(c.s_gamma.verify(&m, &c.sigma_n));
            for &p in &c.s_p {
                prop_assert!(c.s_gamma.members.contains(&p));
            }
            prop_assert!(c.sigma_n.iter().all(|s| s.as_simple().is_none()));
            if let Some(dec) = &c.condition_c.decomposition {
                let triple = AdmissibleTriple::new(
                    m.datum(),
                    &c.s_gamma.members,
                    &c.s_p,
                    &c.condition_c.sigma,
                ).unwrap();
                prop_assert!(dec.reassembles(&triple));
            }
        }
    }

    #[test]
    fn admissibility_is_automorphism_invariant(
        t in 0..5usize,
        s_mask in any::<u16>(),
        p_mask in any::<u16>(),
        sig_mask in any::<u32>(),
    ) {
        let d = sc(["A3", "D4", "A2xA2", "A5", "A1xA1xA1"][t]);
        let n = d.num_simple();
        let s: Vec<usize> = (0..n).filter(|i| s_mask & (1 << i) != 0).collect();
        let s_p: Vec<usize> = s.iter().copied().filter(|i| p_mask & (1 << i) != 0).collect();
        let sigma: Vec<Vec<i64>> = enumerate_sigma_sc(&d)
            .into_iter()
            .filter(|r| r.support().iter().all(|i| s.contains(i)))
            .enumerate()
            .filter(|(k, _)| sig_mask & (1 << (k % 32)) != 0)
            .map(|(_, r)| r.coeffs)
            .collect();
        let base = AdmissibleTriple::new(&d, &s, &s_p, &sigma).unwrap();
        let verdict = is_admissible(&base);
        if let Some(dec) = &verdict {
            prop_assert!(dec.reassembles(&base));
        }
        for perm in d.diagram().automorphisms() {
            let moved = AdmissibleTriple::new(
                &d,
                &s.iter().map(|&i| perm[i]).collect::<Vec<_>>(),
                &s_p.iter().map(|&i| perm[i]).collect::<Vec<_>>(),
                &sigma.iter().map(|v| permuted(v, &perm)).collect::<Vec<_>>(),
            ).unwrap();
            prop_assert_eq!(is_admissible(&moved).is_some(), verdict.is_some());
        }
    }

    #[test]
    fn b_sum_compatibility_matches_direct_rule(mask in any::<u8>()) {
        // B3 sum: α2 must lie in S^p and α3 must not; other roots are free
        // only if orthogonal to σ.
        let d = sc("B3");
        let s_p: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
        let sigma = enumerate_sigma_sc(&d).into_iter().find(|r| r.pattern == Pattern::BSum && r.support().len() == 3).unwrap();
        let direct = s_p.contains(&1) && !s_p.contains(&2) && !s_p.contains(&0);
        prop_assert_eq!(crate::sphericalroots::is_compatible(&sigma, &s_p, &d), direct);
    }
}
