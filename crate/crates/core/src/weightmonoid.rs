//! Weight monoids and their lattice invariants.
//!
//! The lattice `ZΓ` is stored with its Hermite basis `b_1, …, b_r`; a
//! functional on `ZΓ` is written as its values on that basis, so that
//! `⟨f, λ⟩ = f · coords(λ)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::cone::{facet_normals, hilbert_basis_full, in_monoid, positive_grading};
use crate::linalg::matrix::{dot, int_vec, is_zero_vec, nullspace_rat, primitive, rank_int, rat_vec};
use crate::linalg::{IntVector, LinalgError, Sublattice};
use crate::rootdata::{BasedRootDatum, RootDataError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("generator {index} has length {found}, expected {expected}")]
    GeneratorLength { index: usize, expected: usize, found: usize },
    #[error("generator {index} is not dominant")]
    NotDominant { index: usize },
    #[error("the cone spanned by the generators is not pointed")]
    NotPointed,
    #[error("the monoid is not normal")]
    NotNormal,
    #[error("the monoid is not G-saturated")]
    NotGSaturated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMonoid {
    datum: BasedRootDatum,
    generators: Vec<Vec<i64>>,
    lattice: Sublattice,
    gen_coords: Vec<IntVector>,
    restrictions: Vec<IntVector>,
    facets: Vec<IntVector>,
    s_p: Vec<usize>,
}

/// `E(Γ)` together with `a(α)` for the simple roots lying in `ZΓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFacetData {
    pub facets: Vec<IntVector>,
    /// `(α index, a(α))`, in index order, for every `α ∈ S ∩ ZΓ`.
    pub a_map: Vec<(usize, Vec<IntVector>)>,
}

/// Outcome of the saturation test; a counterexample is a dominant lattice
/// point of `ZΓ` outside `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Saturation {
    Saturated,
    Missing(Vec<i64>),
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("weight fits in i64")).collect()
}

impl WeightMonoid {
    pub fn new(datum: BasedRootDatum, generators: Vec<Vec<i64>>) -> Result<Self, MonoidError> {
        let n = datum.dim();
        for (index, g) in generators.iter().enumerate() {
            if g.len() != n {
                return Err(MonoidError::GeneratorLength { index, expected: n, found: g.len() });
            }
            if !datum.is_dominant(g) {
                return Err(MonoidError::NotDominant { index });
            }
        }
        let big: Vec<IntVector> = generators.iter().map(|g| int_vec(g)).collect();
        let lattice = Sublattice::hermite_basis(&big, n)?;
        let r = lattice.rank();
        let gen_coords: Vec<IntVector> =
            big.iter().map(|g| lattice.coordinates(g).expect("generator lies in its own span")).collect();
        if r > 0 && positive_grading(&gen_coords, r).is_none() {
            return Err(MonoidError::NotPointed);
        }
        let restrictions: Vec<IntVector> = datum
            .simple_coroots()
            .iter()
            .map(|c| {
                let c = int_vec(c);
                lattice.basis().iter().map(|b| dot(&c, b)).collect()
            })
            .collect();
        let s_p = (0..datum.num_simple()).filter(|&i| is_zero_vec(&restrictions[i])).collect();
        let facets = if r == 0 { Vec::new() } else { facet_normals(&gen_coords, r)? };
        Ok(Self { datum, generators, lattice, gen_coords, restrictions, facets, s_p })
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// `ZΓ` inside the character lattice.
    pub fn lattice(&self) -> &Sublattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// Generators in `ZΓ` coordinates.
    pub fn generator_coordinates(&self) -> &[IntVector] {
        &self.gen_coords
    }

    /// Coordinates of a character in `ZΓ`, if it lies there.
    pub fn coordinates(&self, weight: &[i64]) -> Option<IntVector> {
        if weight.len() != self.datum.dim() {
            return None;
        }
        self.lattice.coordinates(&int_vec(weight))
    }

    pub fn contains_in_lattice(&self, weight: &[i64]) -> bool {
        self.coordinates(weight).is_some()
    }

    /// `α∨|ZΓ` in `(ZΓ)*` coordinates.
    pub fn restrict_coroot(&self, alpha: usize) -> &IntVector {
        &self.restrictions[alpha]
    }

    pub fn restricted_coroots(&self) -> &[IntVector] {
        &self.restrictions
    }

    /// `S^p(Γ)` as sorted simple-root indices.
    pub fn s_p(&self) -> &[usize] {
        &self.s_p
    }

    /// `E(Γ)`, sorted.
    pub fn facets(&self) -> &[IntVector] {
        &self.facets
    }

    /// Pairing of a `(ZΓ)*` functional with a weight of `ZΓ`.
    pub fn evaluate(&self, functional: &[BigInt], weight: &[i64]) -> Option<BigInt> {
        self.coordinates(weight).map(|c| dot(functional, &c))
    }

    /// `a(α)` for a simple root `α ∈ ZΓ`; `None` if `α ∉ ZΓ`.
    pub fn a_set(&self, alpha: usize) -> Option<Vec<IntVector>> {
        let c = self.coordinates(self.datum.simple_root(alpha))?;
        let res = &self.restrictions[alpha];
        let one = BigInt::from(1);
        let mut out: Vec<IntVector> = Vec::new();
        for d in &self.facets {
            if dot(d, &c) == one {
                let other: IntVector = res.iter().zip(d).map(|(a, b)| a - b).collect();
                out.push(d.clone());
                out.push(other);
            }
        }
        out.sort();
        out.dedup();
        Some(out)
    }

    pub fn facet_data(&self) -> DualFacetData {
        let a_map = (0..self.datum.num_simple()).filter_map(|i| self.a_set(i).map(|a| (i, a))).collect();
        DualFacetData { facets: self.facets.clone(), a_map }
    }

    /// Does `Γ` contain the given weight?
    pub fn contains(&self, weight: &[i64]) -> bool {
        match self.coordinates(weight) {
            Some(c) => in_monoid(&c, &self.gen_coords).expect("cone is pointed"),
            None => false,
        }
    }

    /// `ZΓ ∩ Q≥0Γ = Γ`.
    pub fn is_normal(&self) -> bool {
        let r = self.rank();
        if r == 0 {
            return true;
        }
        let hb = hilbert_basis_full(&self.gen_coords, r).expect("pointed full-dimensional cone");
        hb.iter().all(|h| in_monoid(h, &self.gen_coords).expect("cone is pointed"))
    }

    pub fn is_g_saturated(&self) -> bool {
        self.saturation() == Saturation::Saturated
    }

    /// Test `ZΓ ∩ Λ+ = Γ`, producing a missing dominant element otherwise.
    pub fn saturation(&self) -> Saturation {
        let r = self.rank();
        if r == 0 {
            return Saturation::Saturated;
        }
        let rows = &self.restrictions;
        if rank_int(rows, r) < r {
            // The dominant part of ZΓ ⊗ Q contains a line, Γ does not.
            let kernel = nullspace_rat(&rows.iter().map(|v| rat_vec(v)).collect::<Vec<_>>(), r);
            let v = primitive(&kernel[0]);
            let neg: IntVector = v.iter().map(|x| -x).collect();
            let pick = if in_monoid(&v, &self.gen_coords).expect("pointed") { neg } else { v };
            return Saturation::Missing(to_i64(&self.lattice.point(&pick)));
        }
        let rays = facet_normals(rows, r).expect("restrictions span");
        let hb = hilbert_basis_full(&rays, r).expect("dominant cone is pointed here");
        for h in hb {
            if !in_monoid(&h, &self.gen_coords).expect("pointed") {
                return Saturation::Missing(to_i64(&self.lattice.point(&h)));
            }
        }
        Saturation::Saturated
    }

    /// Values `⟨α∨, γ⟩` on the generators.
    pub fn coroot_on_generators(&self, alpha: usize) -> Vec<i64> {
        self.generators.iter().map(|g| crate::linalg::matrix::dot_i64(self.datum.coroot(alpha), g)).collect()
    }

    /// Is the functional nonnegative on every generator?
    pub fn nonnegative_on_generators(&self, functional: &[BigInt]) -> bool {
        self.gen_coords.iter().all(|g| !dot(functional, g).is_negative())
    }

    pub fn is_zero_functional(f: &[BigInt]) -> bool {
        f.iter().all(Zero::is_zero)
    }
}
