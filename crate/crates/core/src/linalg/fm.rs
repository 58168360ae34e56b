//! Exact feasibility of mixed strict/non-strict linear systems by
//! Fourier–Motzkin elimination.
//!
//! Every derived inequality remembers the nonnegative combination of input
//! rows it came from, so an infeasible system comes back with a Farkas
//! certificate that can be checked independently of the elimination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{dot_rat, RatVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `a·x + b ≥ 0`
    Ge,
    /// `a·x + b > 0`
    Gt,
    /// `a·x + b ≤ 0`
    Le,
    /// `a·x + b = 0`
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Inequality {
    pub coeffs: RatVector,
    pub constant: BigRational,
    pub relation: Relation,
}

impl Inequality {
    pub fn new(coeffs: RatVector, constant: BigRational, relation: Relation) -> Self {
        Self { coeffs, constant, relation }
    }

    pub fn homogeneous(coeffs: RatVector, relation: Relation) -> Self {
        Self::new(coeffs, BigRational::zero(), relation)
    }

    pub fn value_at(&self, x: &[BigRational]) -> BigRational {
        dot_rat(&self.coeffs, x) + &self.constant
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let v = self.value_at(x);
        match self.relation {
            Relation::Ge => !v.is_negative(),
            Relation::Gt => v.is_positive(),
            Relation::Le => !v.is_positive(),
            Relation::Eq => v.is_zero(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct InequalitySystem {
    pub num_vars: usize,
    pub rows: Vec<Inequality>,
}

impl InequalitySystem {
    pub fn new(num_vars: usize) -> Self {
        Self { num_vars, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Inequality) {
        assert_eq!(row.coeffs.len(), self.num_vars, "row width does not match variable count");
        self.rows.push(row);
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        x.len() == self.num_vars && self.rows.iter().all(|r| r.is_satisfied_by(x))
    }
}

/// Multipliers `y_i` (one per input row) with `Σ y_i a_i = 0` and either
/// `Σ y_i b_i < 0`, or `Σ y_i b_i = 0` with some strict row used. Signs:
/// `y_i ≥ 0` for `≥`/`>`, `y_i ≤ 0` for `≤`, free for `=`.
#[derive(Clone, Debug, PartialEq)]
pub struct FarkasCertificate {
    pub multipliers: RatVector,
}

impl FarkasCertificate {
    pub fn verify(&self, sys: &InequalitySystem) -> bool {
        if self.multipliers.len() != sys.rows.len() {
            return false;
        }
        let mut combo = vec![BigRational::zero(); sys.num_vars];
        let mut constant = BigRational::zero();
        let mut strict_used = false;
        for (y, row) in self.multipliers.iter().zip(&sys.rows) {
            let sign_ok = match row.relation {
                Relation::Ge | Relation::Gt => !y.is_negative(),
                Relation::Le => !y.is_positive(),
                Relation::Eq => true,
            };
            if !sign_ok {
                return false;
            }
            if row.relation == Relation::Gt && y.is_positive() {
                strict_used = true;
            }
            for (c, a) in combo.iter_mut().zip(&row.coeffs) {
                *c += y * a;
            }
            constant += y * &row.constant;
        }
        combo.iter().all(Zero::is_zero) && (constant.is_negative() || (constant.is_zero() && strict_used))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(RatVector),
    Infeasible(FarkasCertificate),
}

impl Feasibility {
    pub fn witness(&self) -> Option<&RatVector> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible(_) => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// `a·x + b ≥ 0` (or `> 0`) together with its provenance over input rows.
#[derive(Clone, Debug)]
struct Row {
    coeffs: RatVector,
    constant: BigRational,
    strict: bool,
    origin: RatVector,
}

impl Row {
    fn scaled(&self, f: &BigRational) -> Row {
        Row {
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
            constant: &self.constant * f,
            strict: self.strict,
            origin: self.origin.iter().map(|c| c * f).collect(),
        }
    }

    fn add(&self, other: &Row) -> Row {
        Row {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            constant: &self.constant + &other.constant,
            strict: self.strict || other.strict,
            origin: self.origin.iter().zip(&other.origin).map(|(a, b)| a + b).collect(),
        }
    }

    /// Rescale by a positive factor so the first nonzero coefficient is ±1.
    fn normalized(self) -> Row {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => {
                let f = c.abs().recip();
                self.scaled(&f)
            }
            None => self,
        }
    }

    /// For a row with no variables left: is `b ≥ 0` (resp. `b > 0`) true?
    fn trivially_true(&self) -> bool {
        if self.strict {
            self.constant.is_positive()
        } else {
            !self.constant.is_negative()
        }
    }
}

fn normalize_input(sys: &InequalitySystem) -> Vec<Row> {
    let m = sys.rows.len();
    let unit = |i: usize, s: i64| {
        let mut o = vec![BigRational::zero(); m];
        o[i] = BigRational::from_integer(s.into());
        o
    };
    let mut rows = Vec::new();
    for (i, r) in sys.rows.iter().enumerate() {
        let pos = Row { coeffs: r.coeffs.clone(), constant: r.constant.clone(), strict: false, origin: unit(i, 1) };
        let neg = || Row {
            coeffs: r.coeffs.iter().map(|c| -c).collect(),
            constant: -r.constant.clone(),
            strict: false,
            origin: unit(i, -1),
        };
        match r.relation {
            Relation::Ge => rows.push(pos),
            Relation::Gt => rows.push(Row { strict: true, ..pos }),
            Relation::Le => rows.push(neg()),
            Relation::Eq => {
                rows.push(pos);
                rows.push(neg());
            }
        }
    }
    rows
}

/// Pairwise dominance pruning: among rows with identical coefficient vectors
/// keep the tightest one.
fn prune(rows: Vec<Row>) -> Vec<Row> {
    let mut kept: Vec<Row> = Vec::with_capacity(rows.len());
    for row in rows.into_iter().map(Row::normalized) {
        if let Some(existing) = kept.iter_mut().find(|k| k.coeffs == row.coeffs) {
            let tighter = row.constant < existing.constant
                || (row.constant == existing.constant && row.strict && !existing.strict);
            if tighter {
                *existing = row;
            }
        } else {
            kept.push(row);
        }
    }
    kept
}

fn eliminate(rows: &[Row], var: usize) -> Vec<Row> {
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows {
        if r.coeffs[var].is_positive() {
            pos.push(r);
        } else if r.coeffs[var].is_negative() {
            neg.push(r);
        } else {
            out.push(r.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let combined = p.scaled(&-n.coeffs[var].clone()).add(&n.scaled(&p.coeffs[var]));
            out.push(combined);
        }
    }
    out
}

fn certificate_from(row: &Row) -> FarkasCertificate {
    FarkasCertificate { multipliers: row.origin.clone() }
}

/// Pick a value for variable `var` from the rows of the stage in which it is
/// the last remaining unassigned variable.
fn choose_value(rows: &[Row], var: usize, assigned: &[BigRational]) -> BigRational {
    let mut lower: Option<(BigRational, bool)> = None;
    let mut upper: Option<(BigRational, bool)> = None;
    for r in rows {
        let a = &r.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let rest = r.coeffs[..var].iter().zip(assigned).fold(r.constant.clone(), |acc, (c, x)| acc + c * x);
        let bound = -rest / a;
        if a.is_positive() {
            let replace = match &lower {
                None => true,
                Some((l, s)) => bound > *l || (bound == *l && r.strict && !s),
            };
            if replace {
                lower = Some((bound, r.strict));
            }
        } else {
            let replace = match &upper {
                None => true,
                Some((u, s)) => bound < *u || (bound == *u && r.strict && !s),
            };
            if replace {
                upper = Some((bound, r.strict));
            }
        }
    }
    let one = BigRational::one();
    match (lower, upper) {
        (None, None) => BigRational::zero(),
        (Some((l, s)), None) => {
            if s {
                l + one
            } else {
                l
            }
        }
        (None, Some((u, s))) => {
            if s {
                u - one
            } else {
                u
            }
        }
        (Some((l, _)), Some((u, _))) => {
            debug_assert!(l <= u, "elimination left an empty interval");
            (l + u) / BigRational::from_integer(2.into())
        }
    }
}

/// Decide feasibility; a returned witness satisfies every row exactly, and a
/// returned certificate passes [`FarkasCertificate::verify`].
pub fn feasible_strict(sys: &InequalitySystem) -> Feasibility {
    let n = sys.num_vars;
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(n + 1);
    let mut current = prune(normalize_input(sys));
    for var in (0..n).rev() {
        if let Some(bad) = current.iter().find(|r| r.coeffs.iter().all(Zero::is_zero) && !r.trivially_true()) {
            return Feasibility::Infeasible(certificate_from(bad));
        }
        current.retain(|r| r.coeffs.iter().any(|c| !c.is_zero()));
        let next = prune(eliminate(&current, var));
        stages.push(current);
        current = next;
    }
    if let Some(bad) = current.iter().find(|r| !r.trivially_true()) {
        return Feasibility::Infeasible(certificate_from(bad));
    }
    // stages[k] is the system over variables 0..n-k.
    let mut x: RatVector = Vec::with_capacity(n);
    for var in 0..n {
        let stage = &stages[n - 1 - var];
        let v = choose_value(stage, var, &x);
        x.push(v);
    }
    debug_assert!(sys.is_satisfied_by(&x), "back-substitution produced a non-witness");
    Feasibility::Feasible(x)
}
