//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use smoothwm::linalg::fm::{feasible_strict, Feasibility, Inequality, InequalitySystem, Relation};
use smoothwm::linalg::matrix::{dot, int_vec, is_zero_vec};
use smoothwm::linalg::{hilbert_basis, smith_normal_form, IntMatrix, IntVector, Sublattice};
use smoothwm::model::{full_weight_monoid, has_smooth_model, s_lambda_plus_closed_form, sigma_n_closed_form};
use smoothwm::rootdata::{parse_type_string, BasedRootDatum, Family, SimpleType};
use smoothwm::smoothness::{decide_smooth, Condition, Verdict};
use smoothwm::sphericalroots::{enumerate_sigma_sc, is_adapted_set, sigma_n_of_gsaturated, sigma_sc_of_monoid};
use smoothwm::weightmonoid::WeightMonoid;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn sc(s: &str) -> BasedRootDatum {
    BasedRootDatum::simply_connected(&parse_type_string(s).unwrap(), 0).unwrap()
}

fn adj(s: &str) -> BasedRootDatum {
    BasedRootDatum::adjoint(&parse_type_string(s).unwrap()).unwrap()
}

fn coeff_set(v: &[smoothwm::sphericalroots::SphericalRoot]) -> BTreeSet<Vec<i64>> {
    v.iter().map(|s| s.coeffs.clone()).collect()
}

// 1 ------------------------------------------------------------------------

fn model_matrix() -> Outcome {
    let expect_true = ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "C2", "C3", "C4"];
    let expect_false = ["B3", "B4", "D4", "D5", "E6", "F4", "G2"];
    let mut bad = Vec::new();
    for (names, want) in [(&expect_true[..], true), (&expect_false[..], false)] {
        for t in names {
            match has_smooth_model(&sc(t)) {
                Ok(r) if r.smooth == want && r.factor_rule == Some(want) => {}
                Ok(r) => bad.push(format!("{t}: smooth={} rule={:?}", r.smooth, r.factor_rule)),
                Err(e) => bad.push(format!("{t}: {e}")),
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "17 types as predicted".into() } else { bad.join("; ") })
}

// 2 ------------------------------------------------------------------------

fn sl3_pair() -> Outcome {
    let m = WeightMonoid::new(sc("A2xA2"), vec![vec![1, 0, 1, 0]]).unwrap();
    let v = decide_smooth(&m);
    let Some(cert) = v.certificate.as_ref() else { return outcome(false, "no certificate") };
    let checks = [
        ("g_saturated", v.g_saturated),
        ("S^p = {α2, α2'}", cert.s_p == vec![1, 3]),
        ("Σ^N = ∅", cert.sigma_n.is_empty()),
        ("S_Γ = S", cert.s_gamma.members == vec![0, 1, 2, 3]),
        ("(a) holds", cert.condition_a.holds),
        ("(c) holds", cert.condition_c.holds),
        ("(b) fails on (α1, α1')", !cert.condition_b.holds && cert.condition_b.violating_pairs == vec![(0, 2)]),
        ("smooth = false", v.smooth == Some(false) && v.failed_conditions == vec![Condition::B]),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(failed.is_empty(), if failed.is_empty() { "all invariants match".into() } else { failed.join(", ") })
}

// 3 ------------------------------------------------------------------------

fn odd_orthogonal() -> Outcome {
    let mut bad = Vec::new();
    for t in ["A1", "B2", "B3"] {
        match has_smooth_model(&adj(t)) {
            Ok(r) if r.smooth => {}
            Ok(r) => bad.push(format!("{t}: failed {:?}", r.verdict.failed_conditions)),
            Err(e) => bad.push(format!("{t}: {e}")),
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "SO(3), SO(5), SO(7) smooth".into() } else { bad.join("; ") })
}

// 4 ------------------------------------------------------------------------

fn unsaturated_sl2_pair() -> Outcome {
    let m = WeightMonoid::new(sc("A1xA1"), vec![vec![2, 0], vec![4, 2]]).unwrap();
    let sat = m.is_g_saturated();
    let sigma = sigma_sc_of_monoid(&m).map(|v| coeff_set(&v));
    let expected: BTreeSet<Vec<i64>> = BTreeSet::from([vec![1, 0], vec![0, 2]]);
    let adapted = is_adapted_set(&[vec![1, 0], vec![0, 2]], &m);
    let ok_sat = !sat;
    let ok_sigma = sigma.as_ref().is_ok_and(|s| *s == expected);
    let ok_adapt = adapted == Ok(false);
    outcome(
        ok_sat && ok_sigma && ok_adapt,
        format!(
            "g_saturated={sat} (want false); Σ^sc(Γ)={:?} (want {:?}); adapted({{α,2α'}})={:?} (want false)",
            sigma.unwrap_or_default(),
            expected,
            adapted
        ),
    )
}

// 5 ------------------------------------------------------------------------

fn types_of_rank(r: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        if let Ok(t) = SimpleType::new(f, r) {
            if t.family() == f && !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out
}

/// Multisets of simple types with total rank in `1..=max`.
fn semisimple_types(max: usize) -> Vec<Vec<SimpleType>> {
    let all: Vec<SimpleType> = (1..=max).flat_map(types_of_rank).collect();
    let mut out = Vec::new();
    fn rec(all: &[SimpleType], start: usize, left: usize, cur: &mut Vec<SimpleType>, out: &mut Vec<Vec<SimpleType>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..all.len() {
            if all[i].rank() <= left {
                cur.push(all[i]);
                rec(all, i, left - all[i].rank(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&all, 0, max, &mut Vec::new(), &mut out);
    out
}

fn closed_forms() -> Outcome {
    let mut sigma_bad = Vec::new();
    let mut table_bad: BTreeSet<String> = BTreeSet::new();
    let data = semisimple_types(6);
    for types in &data {
        let d = BasedRootDatum::simply_connected(types, 0).unwrap();
        let m = full_weight_monoid(&d).unwrap();
        let name = types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x");
        if !m.is_g_saturated() || !m.s_p().is_empty() {
            sigma_bad.push(format!("{name}: Λ+ not saturated or S^p nonempty"));
            continue;
        }
        let sn = sigma_n_of_gsaturated(&m).unwrap();
        if coeff_set(&sn) != sigma_n_closed_form(&d) {
            sigma_bad.push(format!("{name}: Σ^N mismatch"));
        }
        let sg: BTreeSet<usize> = smoothwm::smoothness::s_gamma(&m, &sn).members.into_iter().collect();
        for c in d.components() {
            let got: Vec<usize> = (0..c.labeling.len()).filter(|&l| sg.contains(&c.labeling[l])).collect();
            let want = s_lambda_plus_closed_form(c.simple_type);
            if got != want {
                table_bad.insert(format!("{} computed {:?} table {:?}", c.simple_type, got, want));
            }
        }
    }
    let ok = sigma_bad.is_empty() && table_bad.is_empty();
    let mut detail = format!("{} simply connected data; Σ^N {}", data.len(), if sigma_bad.is_empty() { "matches" } else { "differs" });
    if !sigma_bad.is_empty() {
        detail.push_str(&format!(" ({})", sigma_bad.join("; ")));
    }
    if !table_bad.is_empty() {
        detail.push_str(&format!("; S_Γ differs from the table (0-based labels): {}", table_bad.into_iter().collect::<Vec<_>>().join("; ")));
    }
    outcome(ok, detail)
}

// 6 ------------------------------------------------------------------------

/// Reference Cartan matrices for the rank ≤ 2 types, written out by hand.
fn reference_cartans() -> Vec<(&'static str, Vec<Vec<i64>>)> {
    vec![
        ("A1", vec![vec![2]]),
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -1], vec![-2, 2]]),
        ("G2", vec![vec![2, -3], vec![-1, 2]]),
    ]
}

/// Catalog rows for the small types, as coefficient lists in Bourbaki order.
fn reference_rows(name: &str) -> Vec<Vec<i64>> {
    match name {
        "A1" => vec![vec![1], vec![2]],
        "A2" => vec![vec![1, 1]],
        "B2" => vec![vec![1, 1], vec![2, 2]],
        "G2" => vec![vec![4, 2], vec![1, 1]],
        _ => vec![],
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn brute_force_catalog(d: &BasedRootDatum) -> BTreeSet<Vec<i64>> {
    let n = d.num_simple();
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        // Orthogonal pair row.
        if subset.len() == 2 && d.cartan_entry(subset[0], subset[1]) == 0 && d.cartan_entry(subset[1], subset[0]) == 0 {
            let mut v = vec![0; n];
            v[subset[0]] = 1;
            v[subset[1]] = 1;
            out.insert(v);
        }
        for (name, cartan) in reference_cartans() {
            if cartan.len() != subset.len() {
                continue;
            }
            for lab in permutations(&subset) {
                let matches = (0..lab.len()).all(|a| (0..lab.len()).all(|b| d.cartan_entry(lab[a], lab[b]) == cartan[a][b]));
                if !matches {
                    continue;
                }
                for row in reference_rows(name) {
                    let mut v = vec![0; n];
                    for (l, c) in lab.iter().zip(row) {
                        v[*l] = c;
                    }
                    out.insert(v);
                }
            }
        }
    }
    out
}

fn catalog_counts() -> Outcome {
    let mut bad = Vec::new();
    for (t, want) in [("A1", 2), ("A2", 5), ("G2", 6)] {
        let d = sc(t);
        let got = coeff_set(&enumerate_sigma_sc(&d));
        let oracle = brute_force_catalog(&d);
        if got.len() != want || got != oracle {
            bad.push(format!("{t}: {} roots, oracle {}", got.len(), oracle.len()));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "2, 5, 6 (oracle agrees)".into() } else { bad.join("; ") })
}

// 7 ------------------------------------------------------------------------

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> IntMatrix {
    IntMatrix::from_i64(
        &(0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect::<Vec<_>>(),
        cols,
    )
}

/// `b` lies in the row lattice of `m`, decided from a Smith decomposition.
fn in_row_lattice_snf(m: &IntMatrix, b: &[BigInt]) -> bool {
    let s = smith_normal_form(m);
    let bv: Vec<BigInt> = (0..m.ncols()).map(|j| (0..m.ncols()).map(|k| &b[k] * s.v.get(k, j)).sum()).collect();
    let d = s.diagonal();
    bv.iter().enumerate().all(|(j, x)| match d.get(j) {
        Some(dj) if !dj.is_zero() => x.is_multiple_of(dj),
        _ => x.is_zero(),
    })
}

fn snf_hnf_suite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for case in 0..500 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = random_matrix(rng, rows, cols);
        let s = smith_normal_form(&m);
        if s.u.mul(&m).mul(&s.v) != s.d || !s.d.is_diagonal() {
            return Err(format!("case {case}: U·M·V ≠ D"));
        }
        if s.u.det().abs() != BigInt::one() || s.v.det().abs() != BigInt::one() {
            return Err(format!("case {case}: transform not unimodular"));
        }
        let diag = s.diagonal();
        if diag.iter().any(|x| x.is_negative()) {
            return Err(format!("case {case}: negative divisor"));
        }
        for w in diag.windows(2) {
            let ok = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            if !ok {
                return Err(format!("case {case}: divisibility chain broken"));
            }
        }
        let lat = Sublattice::hermite_basis(m.rows(), cols).unwrap();
        // Shape.
        let mut last_pivot: Option<usize> = None;
        for (i, row) in lat.basis().iter().enumerate() {
            let p = row.iter().position(|x| !x.is_zero()).ok_or(format!("case {case}: zero HNF row"))?;
            if last_pivot.is_some_and(|q| p <= q) || !row[p].is_positive() {
                return Err(format!("case {case}: HNF not echelon"));
            }
            for above in &lat.basis()[..i] {
                if above[p].is_negative() || above[p] >= row[p] {
                    return Err(format!("case {case}: HNF not reduced"));
                }
            }
            last_pivot = Some(p);
        }
        // Same lattice, checked both ways.
        if m.rows().iter().any(|r| !lat.contains(r)) || lat.basis().iter().any(|b| !in_row_lattice_snf(&m, b)) {
            return Err(format!("case {case}: HNF lattice differs"));
        }
    }
    Ok(())
}

fn oracle_normals(gens: &[IntVector], dim: usize) -> Vec<IntVector> {
    let mut cands: Vec<IntVector> = Vec::new();
    match dim {
        1 => cands.push(int_vec(&[1])),
        2 => {
            for g in gens {
                cands.push(vec![-g[1].clone(), g[0].clone()]);
            }
        }
        3 => {
            for a in gens {
                for b in gens {
                    cands.push(vec![
                        &a[1] * &b[2] - &a[2] * &b[1],
                        &a[2] * &b[0] - &a[0] * &b[2],
                        &a[0] * &b[1] - &a[1] * &b[0],
                    ]);
                }
            }
        }
        _ => unreachable!(),
    }
    let mut out = Vec::new();
    for c in cands.into_iter().filter(|c| !is_zero_vec(c)) {
        for s in [c.clone(), c.iter().map(|x| -x).collect::<IntVector>()] {
            if gens.iter().all(|g| !dot(&s, g).is_negative()) && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

fn brute_hilbert(gens: &[IntVector], dim: usize) -> Option<BTreeSet<IntVector>> {
    let normals = oracle_normals(gens, dim);
    let in_cone = |x: &[BigInt]| normals.iter().all(|n| !dot(n, x).is_negative());
    // A functional positive on the cone minus the origin.
    let grade: IntVector = (0..dim).map(|i| normals.iter().map(|n| n[i].clone()).sum()).collect();
    let g = |x: &[BigInt]| dot(&grade, x);
    if gens.iter().any(|x| !g(x).is_positive()) {
        return None;
    }
    let mut ray_grades: Vec<BigInt> = gens.iter().map(|x| g(x)).collect();
    ray_grades.sort();
    ray_grades.reverse();
    let bound: BigInt = ray_grades.iter().take(dim).sum();
    let min_grade = ray_grades.last().unwrap().clone();
    let max_entry = gens.iter().flat_map(|x| x.iter().map(|v| v.abs())).max().unwrap();
    let box_r = i64::try_from((&bound * &max_entry) / &min_grade + 1).ok()?;
    if bound > BigInt::from(12) || box_r > 40 {
        return None;
    }
    let mut points: Vec<IntVector> = Vec::new();
    let mut cur = vec![-box_r; dim];
    loop {
        let v = int_vec(&cur);
        if !is_zero_vec(&v) && in_cone(&v) && g(&v) <= bound {
            points.push(v);
        }
        let mut i = 0;
        loop {
            if i == dim {
                let set: BTreeSet<IntVector> = points
                    .iter()
                    .filter(|x| {
                        !points.iter().any(|y| {
                            let diff: IntVector = x.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
                            *x != y && !is_zero_vec(&diff) && in_cone(&diff)
                        })
                    })
                    .cloned()
                    .collect();
                return Some(set);
            }
            cur[i] += 1;
            if cur[i] <= box_r {
                break;
            }
            cur[i] = -box_r;
            i += 1;
        }
    }
}

fn hilbert_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut done = 0;
    let mut attempts = 0;
    while done < 100 {
        attempts += 1;
        if attempts > 20_000 {
            return Err(format!("only {done} usable random cones"));
        }
        let dim = rng.gen_range(1..=3);
        let count = rng.gen_range(dim..=dim + 2);
        let gens: Vec<IntVector> =
            (0..count).map(|_| int_vec(&(0..dim).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>())).collect();
        if gens.iter().any(|g| is_zero_vec(g)) || smoothwm::linalg::matrix::rank_int(&gens, dim) < dim {
            continue;
        }
        let Some(oracle) = brute_hilbert(&gens, dim) else { continue };
        let got: BTreeSet<IntVector> = hilbert_basis(&gens, &Sublattice::full(dim))
            .map_err(|e| format!("{gens:?}: {e}"))?
            .into_iter()
            .collect();
        if got != oracle {
            return Err(format!("{gens:?}: got {got:?}, oracle {oracle:?}"));
        }
        done += 1;
    }
    Ok(done)
}

fn fm_suite(rng: &mut ChaCha8Rng) -> Result<(usize, usize), String> {
    let (mut feasible, mut infeasible) = (0, 0);
    for case in 0..400 {
        let vars = rng.gen_range(1..=3);
        let rows = rng.gen_range(2..=6);
        let strict_allowed = case % 2 == 0;
        let mut sys = InequalitySystem::new(vars);
        for _ in 0..rows {
            let coeffs = (0..vars).map(|_| BigRational::from_integer(rng.gen_range(-3..=3).into())).collect();
            let constant = BigRational::from_integer(rng.gen_range(-3..=3).into());
            let rel = match rng.gen_range(0..if strict_allowed { 4 } else { 3 }) {
                0 => Relation::Ge,
                1 => Relation::Le,
                2 => Relation::Eq,
                _ => Relation::Gt,
            };
            sys.push(Inequality::new(coeffs, constant, rel));
        }
        match feasible_strict(&sys) {
            Feasibility::Feasible(w) => {
                if !sys.is_satisfied_by(&w) {
                    return Err(format!("case {case}: witness fails substitution"));
                }
                feasible += 1;
            }
            Feasibility::Infeasible(cert) => {
                if !cert.verify(&sys) {
                    return Err(format!("case {case}: Farkas certificate rejected"));
                }
                infeasible += 1;
            }
        }
    }
    Ok((feasible, infeasible))
}

struct CorpusEntry {
    name: &'static str,
    datum: BasedRootDatum,
    generators: Vec<Vec<i64>>,
}

fn corpus() -> Vec<CorpusEntry> {
    let mut out = vec![
        CorpusEntry { name: "SL3xSL3 pair", datum: sc("A2xA2"), generators: vec![vec![1, 0, 1, 0]] },
        CorpusEntry { name: "SL2xSL2 unsaturated", datum: sc("A1xA1"), generators: vec![vec![2, 0], vec![4, 2]] },
        CorpusEntry { name: "trivial A2", datum: sc("A2"), generators: vec![] },
        CorpusEntry { name: "A1xA1 diagonal", datum: sc("A1xA1"), generators: vec![vec![1, 1]] },
    ];
    for (name, d) in [
        ("Λ+ C2", sc("C2")),
        ("Λ+ B3", sc("B3")),
        ("Λ+ A3", sc("A3")),
        ("Λ+ G2", sc("G2")),
        ("Λ+ D4", sc("D4")),
        ("Λ+ A2xA1", sc("A2xA1")),
        ("SO(3)", adj("A1")),
        ("SO(5)", adj("B2")),
        ("SO(7)", adj("B3")),
        ("PGL3", adj("A2")),
    ] {
        let generators = full_weight_monoid(&d).unwrap().generators().to_vec();
        out.push(CorpusEntry { name, datum: d, generators });
    }
    out
}

fn summary(v: &Verdict) -> (bool, Option<bool>, Vec<Condition>, usize, usize) {
    let (s_gamma, sigma) = v.certificate.as_ref().map_or((0, 0), |c| (c.s_gamma.members.len(), c.sigma_n.len()));
    (v.g_saturated, v.smooth, v.failed_conditions.clone(), s_gamma, sigma)
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n < 2 {
        return u;
    }
    for _ in 0..6 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = rng.gen_range(-2..=2);
        let row_j = u[j].clone();
        for (x, y) in u[i].iter_mut().zip(row_j) {
            *x += c * y;
        }
    }
    u
}

fn mul_row(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    (0..m.len()).map(|j| v.iter().zip(m).map(|(a, row)| a * row[j]).sum()).collect()
}

fn inverse_transpose(u: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = IntMatrix::from_i64(u, u.len());
    let inv = m.unimodular_inverse().expect("unimodular");
    let n = u.len();
    (0..n).map(|i| (0..n).map(|j| i64::try_from(inv.get(j, i)).unwrap()).collect()).collect()
}

fn invariance_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checks = 0;
    for entry in corpus() {
        let base = decide_smooth(&WeightMonoid::new(entry.datum.clone(), entry.generators.clone()).unwrap());
        let base_s = summary(&base);
        // Generator permutation.
        let mut gens = entry.generators.clone();
        gens.shuffle(rng);
        gens.reverse();
        let v = decide_smooth(&WeightMonoid::new(entry.datum.clone(), gens).unwrap());
        if summary(&v) != base_s {
            return Err(format!("{}: generator permutation changed the verdict", entry.name));
        }
        checks += 1;
        // Unimodular change of character coordinates.
        let n = entry.datum.dim();
        for _ in 0..3 {
            let u = random_unimodular(rng, n);
            let ut = inverse_transpose(&u);
            let roots = entry.datum.simple_roots().iter().map(|r| mul_row(r, &u)).collect();
            let coroots = entry.datum.simple_coroots().iter().map(|c| mul_row(c, &ut)).collect();
            let d = BasedRootDatum::from_vectors(roots, coroots, n).map_err(|e| e.to_string())?;
            let gens = entry.generators.iter().map(|g| mul_row(g, &u)).collect();
            let v = decide_smooth(&WeightMonoid::new(d, gens).unwrap());
            if summary(&v) != base_s {
                return Err(format!("{}: coordinate change changed the verdict", entry.name));
            }
            checks += 1;
        }
        // Diagram automorphisms, applied as a relabeling of the simple roots.
        for perm in entry.datum.diagram().automorphisms() {
            let roots = perm.iter().map(|&i| entry.datum.simple_root(i).to_vec()).collect();
            let coroots = perm.iter().map(|&i| entry.datum.coroot(i).to_vec()).collect();
            let d = BasedRootDatum::from_vectors(roots, coroots, n).map_err(|e| e.to_string())?;
            let v = decide_smooth(&WeightMonoid::new(d, entry.generators.clone()).unwrap());
            if summary(&v) != base_s {
                return Err(format!("{}: automorphism {perm:?} changed the verdict", entry.name));
            }
            if let (Some(a), Some(b)) = (&base.certificate, &v.certificate) {
                let mapped: BTreeSet<usize> = b.s_gamma.members.iter().map(|&i| perm[i]).collect();
                if mapped != a.s_gamma.members.iter().copied().collect() {
                    return Err(format!("{}: S_Γ not equivariant under {perm:?}", entry.name));
                }
            }
            checks += 1;
        }
    }
    Ok(checks)
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut parts = Vec::new();
    let mut ok = true;
    match snf_hnf_suite(&mut rng) {
        Ok(()) => parts.push("SNF/HNF 500".to_string()),
        Err(e) => {
            ok = false;
            parts.push(format!("SNF/HNF: {e}"));
        }
    }
    match hilbert_suite(&mut rng) {
        Ok(n) => parts.push(format!("Hilbert {n}")),
        Err(e) => {
            ok = false;
            parts.push(format!("Hilbert: {e}"));
        }
    }
    match fm_suite(&mut rng) {
        Ok((f, i)) => parts.push(format!("FM {f} witnesses/{i} certificates")),
        Err(e) => {
            ok = false;
            parts.push(format!("FM: {e}"));
        }
    }
    match invariance_suite(&mut rng) {
        Ok(n) => parts.push(format!("invariance {n}")),
        Err(e) => {
            ok = false;
            parts.push(format!("invariance: {e}"));
        }
    }
    outcome(ok, parts.join(", "))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 model matrix", Duration::from_secs(60), model_matrix),
        ("2 SL3xSL3 pair", Duration::from_secs(1), sl3_pair),
        ("3 SO(2n+1)", Duration::from_secs(5), odd_orthogonal),
        ("4 SL2xSL2 unsaturated", Duration::from_secs(1), unsaturated_sl2_pair),
        ("5 closed forms", Duration::from_secs(30), closed_forms),
        ("6 catalog counts", Duration::from_secs(60), catalog_counts),
        ("7 property suites", Duration::from_secs(120), property_suites),
    ];
    let mut failures = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let pass = out.ok && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "{} criterion {name}: {} ({:.2?}, limit {:?}{})",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            limit,
            if in_time { "" } else { ", over time" }
        );
    }
    println!("acceptance: {} failed", failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
