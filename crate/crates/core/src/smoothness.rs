//! The smoothness criterion for G-saturated weight monoids.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::admissibility::{is_admissible, AdmissibleTriple, Decomposition};
use crate::linalg::fm::{feasible_strict, FarkasCertificate, Feasibility, Inequality, InequalitySystem, Relation};
use crate::linalg::lattice::extension_divisors;
use crate::linalg::{IntVector, RatVector};
use crate::sphericalroots::{sigma_n_filter, SphericalRoot};
use crate::weightmonoid::{Saturation, WeightMonoid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    A,
    B,
    C,
}

impl Condition {
    pub fn as_str(&self) -> &'static str {
        match self {
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `S_Γ` with a positive witness for every member and a Farkas refusal for
/// every other simple root.
#[derive(Clone, Debug, PartialEq)]
pub struct SGamma {
    pub members: Vec<usize>,
    pub witnesses: Vec<(usize, RatVector)>,
    pub refusals: Vec<(usize, FarkasCertificate)>,
    /// Sum of the member witnesses; positive exactly on `members`.
    pub combined: RatVector,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Feasibility system for `α`: `c ≥ 0`, `c_α ≥ 1`, `Σ_β c_β ⟨β∨, σ⟩ ≤ 0` for each σ.
pub fn s_gamma_system(m: &WeightMonoid, sigma_n: &[SphericalRoot], alpha: usize) -> InequalitySystem {
    let datum = m.datum();
    let n = datum.num_simple();
    let mut sys = InequalitySystem::new(n);
    for b in 0..n {
        let mut row = vec![rat(0); n];
        row[b] = rat(1);
        sys.push(Inequality::homogeneous(row, Relation::Ge));
    }
    let mut row = vec![rat(0); n];
    row[alpha] = rat(1);
    sys.push(Inequality::new(row, rat(-1), Relation::Ge));
    for s in sigma_n {
        let row = (0..n).map(|b| rat(s.coroot_value(datum, b))).collect();
        sys.push(Inequality::homogeneous(row, Relation::Le));
    }
    sys
}

/// The valuation-cone condition on a coefficient vector over `S`.
pub fn in_valuation_cone(m: &WeightMonoid, sigma_n: &[SphericalRoot], c: &[BigRational]) -> bool {
    let datum = m.datum();
    sigma_n.iter().all(|s| {
        let v: BigRational = c.iter().enumerate().map(|(b, x)| x * rat(s.coroot_value(datum, b))).sum();
        !v.is_positive()
    })
}

pub fn s_gamma(m: &WeightMonoid, sigma_n: &[SphericalRoot]) -> SGamma {
    let n = m.datum().num_simple();
    let mut members = Vec::new();
    let mut witnesses = Vec::new();
    let mut refusals = Vec::new();
    let mut combined = vec![rat(0); n];
    for alpha in 0..n {
        match feasible_strict(&s_gamma_system(m, sigma_n, alpha)) {
            Feasibility::Feasible(w) => {
                for (c, x) in combined.iter_mut().zip(&w) {
                    *c += x;
                }
                members.push(alpha);
                witnesses.push((alpha, w));
            }
            Feasibility::Infeasible(cert) => refusals.push((alpha, cert)),
        }
    }
    SGamma { members, witnesses, refusals, combined }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionA {
    pub holds: bool,
    /// Distinct restrictions `α∨|ZΓ` for `α ∈ S_Γ \ S^p`, sorted.
    pub vectors: Vec<IntVector>,
    pub divisors: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionB {
    pub holds: bool,
    pub violating_pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionC {
    pub holds: bool,
    /// `Σ^N(Γ) ∩ ZS_Γ` as coefficient vectors.
    pub sigma: Vec<Vec<i64>>,
    pub decomposition: Option<Decomposition>,
}

fn active(m: &WeightMonoid, s_gamma: &[usize]) -> Vec<usize> {
    s_gamma.iter().copied().filter(|a| !m.s_p().contains(a)).collect()
}

pub fn condition_a(m: &WeightMonoid, s_gamma: &[usize]) -> ConditionA {
    let mut vectors: Vec<IntVector> = active(m, s_gamma).into_iter().map(|a| m.restrict_coroot(a).clone()).collect();
    vectors.sort();
    vectors.dedup();
    let (holds, divisors) = extension_divisors(&vectors, m.rank()).expect("deduplicated vectors of the right length");
    ConditionA { holds, vectors, divisors }
}

pub fn condition_b(m: &WeightMonoid, s_gamma: &[usize]) -> ConditionB {
    let act = active(m, s_gamma);
    let datum = m.datum();
    let mut violating_pairs = Vec::new();
    for (i, &a) in act.iter().enumerate() {
        for &b in &act[i + 1..] {
            if m.restrict_coroot(a) != m.restrict_coroot(b) {
                continue;
            }
            let sum: Vec<i64> = datum.simple_root(a).iter().zip(datum.simple_root(b)).map(|(x, y)| x + y).collect();
            if !m.contains_in_lattice(&sum) {
                violating_pairs.push((a, b));
            }
        }
    }
    ConditionB { holds: violating_pairs.is_empty(), violating_pairs }
}

pub fn condition_c(m: &WeightMonoid, s_gamma: &[usize], sigma_n: &[SphericalRoot]) -> ConditionC {
    let sigma: Vec<Vec<i64>> = sigma_n
        .iter()
        .filter(|s| s.support().iter().all(|i| s_gamma.contains(i)))
        .map(|s| s.coeffs.clone())
        .collect();
    let triple = AdmissibleTriple::new(m.datum(), s_gamma, m.s_p(), &sigma).expect("S^p ⊆ S_Γ and supports inside S_Γ");
    let decomposition = is_admissible(&triple);
    ConditionC { holds: decomposition.is_some(), sigma: triple.sigma().to_vec(), decomposition }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub s_p: Vec<usize>,
    pub sigma_n: Vec<SphericalRoot>,
    pub s_gamma: SGamma,
    pub restricted_coroots: Vec<IntVector>,
    pub condition_a: ConditionA,
    pub condition_b: ConditionB,
    pub condition_c: ConditionC,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub g_saturated: bool,
    pub normal: bool,
    /// A dominant element of `ZΓ` missing from `Γ`, when not G-saturated.
    pub saturation_witness: Option<Vec<i64>>,
    /// `None` when the monoid is not G-saturated.
    pub smooth: Option<bool>,
    pub failed_conditions: Vec<Condition>,
    pub certificate: Option<Certificate>,
}

pub fn decide_smooth(m: &WeightMonoid) -> Verdict {
    if let Saturation::Missing(w) = m.saturation() {
        return Verdict {
            g_saturated: false,
            normal: m.is_normal(),
            saturation_witness: Some(w),
            smooth: None,
            failed_conditions: Vec::new(),
            certificate: None,
        };
    }
    let sigma_n = sigma_n_filter(m);
    let sg = s_gamma(m, &sigma_n);
    debug_assert!(m.s_p().iter().all(|a| sg.members.contains(a)));
    let a = condition_a(m, &sg.members);
    let b = condition_b(m, &sg.members);
    let c = condition_c(m, &sg.members, &sigma_n);
    let mut failed = Vec::new();
    for (holds, cond) in [(a.holds, Condition::A), (b.holds, Condition::B), (c.holds, Condition::C)] {
        if !holds {
            failed.push(cond);
        }
    }
    Verdict {
        g_saturated: true,
        normal: true,
        saturation_witness: None,
        smooth: Some(failed.is_empty()),
        failed_conditions: failed,
        certificate: Some(Certificate {
            s_p: m.s_p().to_vec(),
            sigma_n,
            s_gamma: sg,
            restricted_coroots: m.restricted_coroots().to_vec(),
            condition_a: a,
            condition_b: b,
            condition_c: c,
        }),
    }
}

impl SGamma {
    /// Re-check every witness and refusal against freshly built systems.
    pub fn verify(&self, m: &WeightMonoid, sigma_n: &[SphericalRoot]) -> bool {
        let witnesses_ok =
            self.witnesses.iter().all(|(a, w)| s_gamma_system(m, sigma_n, *a).is_satisfied_by(w));
        let refusals_ok = self.refusals.iter().all(|(a, cert)| cert.verify(&s_gamma_system(m, sigma_n, *a)));
        let combined_ok = in_valuation_cone(m, sigma_n, &self.combined)
            && self
                .combined
                .iter()
                .enumerate()
                .all(|(b, x)| x.is_positive() == self.members.contains(&b) && !x.is_negative());
        let partition = self.members.len() + self.refusals.len() == m.datum().num_simple();
        witnesses_ok && refusals_ok && combined_ok && partition
    }
}
