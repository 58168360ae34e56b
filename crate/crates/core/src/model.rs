//! Model varieties: the full dominant monoid `Λ+` and closed forms for
//! simply connected semisimple groups.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::linalg::cone::{facet_normals, hilbert_basis_full};
use crate::linalg::matrix::int_vec;
use crate::linalg::IntMatrix;
use crate::rootdata::{BasedRootDatum, Family, SimpleType};
use crate::smoothness::{decide_smooth, Verdict};
use crate::weightmonoid::{MonoidError, WeightMonoid};

/// `Λ+` as a monoid, generated by the Hilbert basis of the dominant cone.
pub fn full_weight_monoid(datum: &BasedRootDatum) -> Result<WeightMonoid, MonoidError> {
    if !datum.is_semisimple() {
        return Err(MonoidError::NotPointed);
    }
    let n = datum.dim();
    let gens = if n == 0 {
        Vec::new()
    } else {
        let coroots: Vec<_> = datum.simple_coroots().iter().map(|c| int_vec(c)).collect();
        let rays = facet_normals(&coroots, n)?;
        hilbert_basis_full(&rays, n)?
            .into_iter()
            .map(|v| v.iter().map(|x| i64::try_from(x).expect("small weight")).collect())
            .collect()
    };
    WeightMonoid::new(datum.clone(), gens)
}

/// Do the simple coroots form a basis of the cocharacter lattice?
pub fn is_simply_connected(datum: &BasedRootDatum) -> bool {
    datum.is_semisimple() && {
        let m = IntMatrix::from_i64(datum.simple_coroots(), datum.dim());
        m.det().abs() == 1.into()
    }
}

/// `{α + α' : α ≠ α', α not orthogonal to α'}` as coefficient vectors.
pub fn sigma_n_closed_form(datum: &BasedRootDatum) -> BTreeSet<Vec<i64>> {
    let n = datum.num_simple();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if !datum.orthogonal(a, b) {
                let mut v = vec![0; n];
                v[a] = 1;
                v[b] = 1;
                out.insert(v);
            }
        }
    }
    out
}

/// Tabulated Bourbaki labels (0-based) of `S' ∩ S_{Λ+}` for a simple factor
/// of a simply connected group.
///
/// This is the tabulated closed form, kept verbatim as an oracle. The exact
/// computation in [`crate::smoothness::s_gamma`] disagrees with it for `A_n`
/// (parity swapped), `B4`, `B6`, `D5` and `E6`, and each refusal there comes
/// with a Farkas certificate.
pub fn s_lambda_plus_closed_form(t: SimpleType) -> Vec<usize> {
    let n = t.rank();
    match t.family() {
        Family::A if n % 2 == 1 => Vec::new(),
        Family::A => (0..n).step_by(2).collect(),
        // C2 in the stored B2 orientation: the short root has label 2.
        Family::B if n == 2 => vec![1],
        Family::C => (0..n).step_by(2).collect(),
        Family::E if n == 6 => vec![2, 3, 4],
        Family::F => vec![0, 1, 2],
        Family::B | Family::D | Family::E | Family::G => (0..n).collect(),
    }
}

/// Closed-form `S_{Λ+}` over the simple-root indices of the datum.
pub fn s_lambda_plus_of_datum(datum: &BasedRootDatum) -> Vec<usize> {
    let mut out: Vec<usize> = datum
        .components()
        .iter()
        .flat_map(|c| s_lambda_plus_closed_form(c.simple_type).into_iter().map(|l| c.labeling[l]))
        .collect();
    out.sort_unstable();
    out
}

/// Smooth models exist exactly when every simple factor is of type A or C.
pub fn factor_rule(types: &[SimpleType]) -> bool {
    types.iter().all(|t| t.family() == Family::A || t.family() == Family::C || t.is_b2())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelReport {
    pub smooth: bool,
    pub verdict: Verdict,
    /// Factor-type prediction, for simply connected input only.
    pub factor_rule: Option<bool>,
}

pub fn has_smooth_model(datum: &BasedRootDatum) -> Result<ModelReport, MonoidError> {
    let m = full_weight_monoid(datum)?;
    let verdict = decide_smooth(&m);
    let smooth = verdict.smooth.ok_or(MonoidError::NotGSaturated)?;
    let factor_rule = is_simply_connected(datum).then(|| factor_rule(&datum.component_types()));
    Ok(ModelReport { smooth, verdict, factor_rule })
}
