//! Spherically closed spherical roots, compatibility with `S^p`, and the
//! root sets `Σ^N(Γ)` and `Σ^sc(Γ)` attached to a weight monoid.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::fm::{Inequality, InequalitySystem, Relation};
use crate::linalg::matrix::dot;
use crate::linalg::IntVector;
use crate::rootdata::{BasedRootDatum, Family, SimpleType};
use crate::weightmonoid::{MonoidError, Saturation, WeightMonoid};

/// Row of the catalog of spherically closed spherical roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    A1Simple,
    A1Double,
    A1xA1,
    ASum,
    A3Middle,
    BSum,
    BSumDouble,
    B3,
    CN,
    DN,
    F4,
    G2Long,
    G2Short,
}

impl Pattern {
    pub fn tag(&self) -> &'static str {
        match self {
            Pattern::A1Simple => "A1 simple",
            Pattern::A1Double => "A1 double",
            Pattern::A1xA1 => "A1×A1",
            Pattern::ASum => "A_n sum",
            Pattern::A3Middle => "A3 1-2-1",
            Pattern::BSum => "B_n sum",
            Pattern::BSumDouble => "2·B_n sum",
            Pattern::B3 => "B3 1-2-3",
            Pattern::CN => "C_n",
            Pattern::DN => "D_n",
            Pattern::F4 => "F4",
            Pattern::G2Long => "G2 4-2",
            Pattern::G2Short => "G2 1-1",
        }
    }

    /// Coefficients in Bourbaki label order for a connected support of the
    /// given type, if this row applies to it.
    fn coefficients(&self, t: SimpleType) -> Option<Vec<i64>> {
        let n = t.rank();
        let f = t.family();
        match (self, f) {
            (Pattern::ASum, Family::A) if n >= 2 => Some(vec![1; n]),
            (Pattern::A3Middle, Family::A) if n == 3 => Some(vec![1, 2, 1]),
            (Pattern::BSum, Family::B) => Some(vec![1; n]),
            (Pattern::BSumDouble, Family::B) => Some(vec![2; n]),
            (Pattern::B3, Family::B) if n == 3 => Some(vec![1, 2, 3]),
            (Pattern::CN, Family::C) if n >= 3 => {
                let mut v = vec![2; n];
                v[0] = 1;
                v[n - 1] = 1;
                Some(v)
            }
            (Pattern::DN, Family::D) => {
                let mut v = vec![2; n];
                v[n - 2] = 1;
                v[n - 1] = 1;
                Some(v)
            }
            (Pattern::F4, Family::F) => Some(vec![1, 2, 3, 2]),
            (Pattern::G2Long, Family::G) => Some(vec![4, 2]),
            (Pattern::G2Short, Family::G) => Some(vec![1, 1]),
            _ => None,
        }
    }

    const CONNECTED: [Pattern; 10] = [
        Pattern::ASum,
        Pattern::A3Middle,
        Pattern::BSum,
        Pattern::BSumDouble,
        Pattern::B3,
        Pattern::CN,
        Pattern::DN,
        Pattern::F4,
        Pattern::G2Long,
        Pattern::G2Short,
    ];
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An element of `NS` from the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphericalRoot {
    /// Coefficients over all simple roots of the datum.
    pub coeffs: Vec<i64>,
    pub pattern: Pattern,
    /// Support type; `None` for the `A1×A1` row.
    pub support_type: Option<SimpleType>,
    /// Bourbaki labeling of the support used to match the pattern.
    pub labeling: Vec<usize>,
}

impl SphericalRoot {
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.coeffs[i] != 0).collect()
    }

    pub fn as_simple(&self) -> Option<usize> {
        (self.pattern == Pattern::A1Simple).then(|| self.labeling[0])
    }

    pub fn doubled_simple(&self) -> Option<usize> {
        (self.pattern == Pattern::A1Double).then(|| self.labeling[0])
    }

    pub fn orthogonal_pair(&self) -> Option<(usize, usize)> {
        (self.pattern == Pattern::A1xA1).then(|| (self.labeling[0], self.labeling[1]))
    }

    /// The root as a character.
    pub fn character(&self, datum: &BasedRootDatum) -> Vec<i64> {
        datum.root_combination(&self.coeffs)
    }

    /// `⟨σ, α_i∨⟩` computed from the Cartan matrix.
    pub fn coroot_value(&self, datum: &BasedRootDatum, i: usize) -> i64 {
        self.coeffs.iter().enumerate().map(|(j, c)| c * datum.cartan_entry(i, j)).sum()
    }

    /// Human-readable form such as `α1+2α2` (1-based indices).
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 => parts.push(format!("α{}", i + 1)),
                _ => parts.push(format!("{c}α{}", i + 1)),
            }
        }
        parts.join("+")
    }
}

fn unit_coeffs(n: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(i, c) in entries {
        v[i] = c;
    }
    v
}

/// All connected subsets of the diagram, each sorted.
pub(crate) fn connected_subsets(datum: &BasedRootDatum) -> BTreeSet<Vec<usize>> {
    let n = datum.num_simple();
    let adjacent = |a: usize, b: usize| a != b && !datum.orthogonal(a, b);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while let Some(set) = frontier.pop() {
        if !seen.insert(set.clone()) {
            continue;
        }
        for v in 0..n {
            if set.contains(&v) || !set.iter().any(|&u| adjacent(u, v)) {
                continue;
            }
            let mut bigger = set.clone();
            bigger.push(v);
            bigger.sort_unstable();
            if !seen.contains(&bigger) {
                frontier.push(bigger);
            }
        }
    }
    seen
}

/// `Σ^sc(G)`: every element of `NS` matching a catalog row, sorted by support then coefficients.
pub fn enumerate_sigma_sc(datum: &BasedRootDatum) -> Vec<SphericalRoot> {
    let n = datum.num_simple();
    let a1 = SimpleType::new(Family::A, 1).expect("A1");
    let mut out: Vec<SphericalRoot> = Vec::new();
    for i in 0..n {
        for (pattern, c) in [(Pattern::A1Simple, 1), (Pattern::A1Double, 2)] {
            out.push(SphericalRoot {
                coeffs: unit_coeffs(n, &[(i, c)]),
                pattern,
                support_type: Some(a1),
                labeling: vec![i],
            });
        }
        for j in i + 1..n {
            if datum.orthogonal(i, j) {
                out.push(SphericalRoot {
                    coeffs: unit_coeffs(n, &[(i, 1), (j, 1)]),
                    pattern: Pattern::A1xA1,
                    support_type: None,
                    labeling: vec![i, j],
                });
            }
        }
    }
    for subset in connected_subsets(datum).into_iter().filter(|s| s.len() >= 2) {
        let diagram = datum.subdiagram(&subset);
        let (t, _) = diagram.type_of().expect("subdiagram of a finite-type diagram");
        let labelings = diagram.labelings(t);
        for pattern in Pattern::CONNECTED {
            let Some(pc) = pattern.coefficients(t) else { continue };
            let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
            for lab in &labelings {
                let coeffs = unit_coeffs(n, &lab.iter().copied().zip(pc.iter().copied()).collect::<Vec<_>>());
                if found.insert(coeffs.clone()) {
                    out.push(SphericalRoot { coeffs, pattern, support_type: Some(t), labeling: lab.clone() });
                }
            }
        }
    }
    out.sort_by(|a, b| (a.support(), &a.coeffs).cmp(&(b.support(), &b.coeffs)));
    out
}

/// Compatibility of `σ` with a set of simple roots playing the role of `S^p`.
pub fn is_compatible(sigma: &SphericalRoot, s_p: &[usize], datum: &BasedRootDatum) -> bool {
    let support = sigma.support();
    let zero: Vec<usize> = (0..datum.num_simple()).filter(|&i| sigma.coroot_value(datum, i) == 0).collect();
    let mut lower: Vec<usize> = zero.iter().copied().filter(|i| support.contains(i)).collect();
    let mut upper = zero;
    match sigma.pattern {
        Pattern::BSum => {
            let last = *sigma.labeling.last().expect("nonempty support");
            lower.retain(|&i| i != last);
            upper.retain(|&i| i != last);
        }
        Pattern::CN => {
            let first = sigma.labeling[0];
            lower.retain(|&i| i != first);
        }
        _ => {}
    }
    lower.iter().all(|i| s_p.contains(i)) && s_p.iter().all(|i| upper.contains(i))
}

fn sigma_in_lattice(m: &WeightMonoid, sigma: &SphericalRoot) -> Option<IntVector> {
    m.coordinates(&sigma.character(m.datum()))
}

fn all_even(values: &[i64]) -> bool {
    values.iter().all(|v| v % 2 == 0)
}

/// `Σ^N(Γ)` for a G-saturated monoid.
pub fn sigma_n_of_gsaturated(m: &WeightMonoid) -> Result<Vec<SphericalRoot>, MonoidError> {
    if m.saturation() != Saturation::Saturated {
        return Err(MonoidError::NotGSaturated);
    }
    Ok(sigma_n_filter(m))
}

/// The five-condition filter, without checking saturation first.
pub(crate) fn sigma_n_filter(m: &WeightMonoid) -> Vec<SphericalRoot> {
    let datum = m.datum();
    enumerate_sigma_sc(datum).into_iter().filter(|s| is_n_spherical(m, s)).collect()
}

/// Conditions (i)–(v) for membership in `Σ^N(Γ)` of a G-saturated `Γ`.
pub fn is_n_spherical(m: &WeightMonoid, sigma: &SphericalRoot) -> bool {
    if sigma.as_simple().is_some() {
        return false;
    }
    if sigma_in_lattice(m, sigma).is_none() {
        return false;
    }
    if !is_compatible(sigma, m.s_p(), m.datum()) {
        return false;
    }
    if let Some(a) = sigma.doubled_simple() {
        if !all_even(&m.coroot_on_generators(a)) {
            return false;
        }
    }
    if let Some((a, b)) = sigma.orthogonal_pair() {
        if m.coroot_on_generators(a) != m.coroot_on_generators(b) {
            return false;
        }
    }
    true
}

/// Is `r` a positive multiple of `d`?
fn positive_multiple(r: &[BigInt], d: &[BigInt]) -> bool {
    if r.iter().all(Zero::is_zero) {
        return false;
    }
    let parallel = (0..r.len()).all(|i| (0..r.len()).all(|j| &r[i] * &d[j] == &r[j] * &d[i]));
    parallel && dot(r, d).is_positive()
}

/// Conditions (1)–(6) for `σ ∈ Σ^sc(Γ)` of a normal `Γ`.
pub fn is_adapted_root(m: &WeightMonoid, sigma: &SphericalRoot) -> bool {
    let Some(coords) = sigma_in_lattice(m, sigma) else { return false };
    if !is_compatible(sigma, m.s_p(), m.datum()) {
        return false;
    }
    match sigma.as_simple() {
        None => {
            let n = m.datum().num_simple();
            for d in m.facets() {
                if dot(d, &coords).is_positive() {
                    let ok = (0..n)
                        .filter(|b| !m.s_p().contains(b))
                        .any(|b| positive_multiple(m.restrict_coroot(b), d));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        Some(alpha) => {
            let a = m.a_set(alpha).expect("α lies in ZΓ");
            if a.is_empty() || a.len() > 2 {
                return false;
            }
            if !a.iter().all(|d| m.nonnegative_on_generators(d)) {
                return false;
            }
            let one = BigInt::from(1);
            if m.facets().iter().any(|d| dot(d, &coords) > one) {
                return false;
            }
        }
    }
    if let Some(a) = sigma.doubled_simple() {
        if m.contains_in_lattice(m.datum().simple_root(a)) || !all_even(&m.coroot_on_generators(a)) {
            return false;
        }
    }
    if let Some((a, b)) = sigma.orthogonal_pair() {
        if m.coroot_on_generators(a) != m.coroot_on_generators(b) {
            return false;
        }
    }
    true
}

/// `Σ^sc(Γ)` for a normal monoid.
pub fn sigma_sc_of_monoid(m: &WeightMonoid) -> Result<Vec<SphericalRoot>, MonoidError> {
    if !m.is_normal() {
        return Err(MonoidError::NotNormal);
    }
    Ok(enumerate_sigma_sc(m.datum()).into_iter().filter(|s| is_adapted_root(m, s)).collect())
}

/// Is a set of catalog roots (given by coefficient vectors) adapted to `Γ`?
pub fn is_adapted_set(sigmas: &[Vec<i64>], m: &WeightMonoid) -> Result<bool, MonoidError> {
    let adapted = sigma_sc_of_monoid(m)?;
    let mut roots = Vec::new();
    for s in sigmas {
        match adapted.iter().find(|r| &r.coeffs == s) {
            Some(r) => roots.push(r),
            None => return Ok(false),
        }
    }
    for alpha_root in &roots {
        let Some(alpha) = alpha_root.as_simple() else { continue };
        for d in m.a_set(alpha).expect("α ∈ ZΓ") {
            for gamma in &roots {
                let gc = sigma_in_lattice(m, gamma).expect("adapted roots lie in ZΓ");
                if !dot(&d, &gc).is_positive() {
                    continue;
                }
                let ok = match gamma.as_simple() {
                    Some(g) => m.a_set(g).expect("γ ∈ ZΓ").contains(&d),
                    None => false,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `𝒱(Γ)`: one inequality `⟨ν, σ⟩ ≤ 0` per root, over `(ZΓ)*` coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ValuationCone {
    pub system: InequalitySystem,
}

pub fn valuation_cone(m: &WeightMonoid, sigma_n: &[SphericalRoot]) -> ValuationCone {
    let mut system = InequalitySystem::new(m.rank());
    for s in sigma_n {
        let c = sigma_in_lattice(m, s).expect("N-spherical roots lie in ZΓ");
        system.push(Inequality::homogeneous(
            c.into_iter().map(BigRational::from_integer).collect(),
            Relation::Le,
        ));
    }
    ValuationCone { system }
}
