//! Admissible triples `(S', S^p', Σ')`: decompositions of the Dynkin diagram
//! into primitive pieces from a fixed catalog of six families.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::rootdata::{BasedRootDatum, DynkinDiagram, Family, SimpleType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdmissibilityError {
    #[error("simple root index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("S^p contains {0}, which is not in S'")]
    SpNotSubset(usize),
    #[error("a root has support outside S'")]
    SigmaOutside,
    #[error("coefficient vector has length {found}, expected {expected}")]
    SigmaLength { expected: usize, found: usize },
    #[error("parameters out of range for family {family}: {detail}")]
    Parameters { family: u8, detail: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyParams {
    /// `(S, S, ∅)` for an irreducible `S`.
    Full(SimpleType),
    /// `A_n` with `S^p = {α2, …, αn}`.
    ATail(usize),
    /// `A_n`, `n ≥ 4` even, with the alternating `S^p` and the `1-2-1` roots.
    AEven(usize),
    /// `A_n × A_k`, `n > k ≥ 2`.
    AProduct(usize, usize),
    /// `C_n` with `S^p = {α2, …, αn}`.
    CTail(usize),
    D5,
}

impl FamilyParams {
    pub fn family_id(&self) -> u8 {
        match self {
            FamilyParams::Full(_) => 1,
            FamilyParams::ATail(_) => 2,
            FamilyParams::AEven(_) => 3,
            FamilyParams::AProduct(..) => 4,
            FamilyParams::CTail(_) => 5,
            FamilyParams::D5 => 6,
        }
    }

    /// `(n, k)` parameters; `n` is the rank for single-component families.
    pub fn parameters(&self) -> (usize, Option<usize>) {
        match *self {
            FamilyParams::Full(t) => (t.rank(), None),
            FamilyParams::ATail(n) | FamilyParams::AEven(n) | FamilyParams::CTail(n) => (n, None),
            FamilyParams::AProduct(n, k) => (n, Some(k)),
            FamilyParams::D5 => (5, None),
        }
    }
}

fn label_range(a: usize, b: usize) -> String {
    match b.cmp(&a) {
        std::cmp::Ordering::Less => "∅".into(),
        std::cmp::Ordering::Equal => format!("{{α{a}}}"),
        std::cmp::Ordering::Greater => format!("{{α{a}..α{b}}}"),
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::Full(t) => write!(f, "({t}, S, ∅)"),
            FamilyParams::ATail(n) => write!(f, "(A{n}, {}, ∅)", label_range(2, *n)),
            FamilyParams::AEven(n) => write!(f, "(A{n}, odd, 1-2-1 roots)"),
            FamilyParams::AProduct(n, k) => write!(f, "(A{n}×A{k}, {}, αi+αi')", label_range(k + 2, *n)),
            FamilyParams::CTail(n) => write!(f, "(C{n}, {}, ∅)", label_range(2, *n)),
            FamilyParams::D5 => write!(f, "(D5, {{α2,α3,α4}}, α2+2α3+α4+2α5)"),
        }
    }
}

/// A catalog triple over abstract labels `0..rank` (concatenated over its
/// components, Bourbaki order within each).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveTriple {
    pub params: FamilyParams,
    pub types: Vec<SimpleType>,
    pub s_p: Vec<usize>,
    pub sigma: Vec<Vec<i64>>,
}

impl PrimitiveTriple {
    pub fn rank(&self) -> usize {
        self.types.iter().map(|t| t.rank()).sum()
    }
}

fn param_err(family: u8, detail: &str) -> AdmissibilityError {
    AdmissibilityError::Parameters { family, detail: detail.to_string() }
}

fn a_type(n: usize) -> SimpleType {
    SimpleType::new(Family::A, n).expect("n ≥ 1")
}

/// The literal catalog triple for the given parameters.
pub fn catalog_instance(params: FamilyParams) -> Result<PrimitiveTriple, AdmissibilityError> {
    let id = params.family_id();
    let (types, s_p, sigma) = match params {
        FamilyParams::Full(t) => (vec![t], (0..t.rank()).collect(), vec![]),
        FamilyParams::ATail(n) => {
            if n < 1 {
                return Err(param_err(id, "n ≥ 1"));
            }
            (vec![a_type(n)], (1..n).collect(), vec![])
        }
        FamilyParams::AEven(n) => {
            if n < 4 || n % 2 == 1 {
                return Err(param_err(id, "n ≥ 4 even"));
            }
            let s_p = (0..n).step_by(2).collect();
            let sigma = (0..n - 2)
                .step_by(2)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[i + 1] = 2;
                    v[i + 2] = 1;
                    v
                })
                .collect();
            (vec![a_type(n)], s_p, sigma)
        }
        FamilyParams::AProduct(n, k) => {
            if !(n > k && k >= 2) {
                return Err(param_err(id, "n > k ≥ 2"));
            }
            let s_p = (k + 1..n).collect();
            let sigma = (0..k)
                .map(|i| {
                    let mut v = vec![0; n + k];
                    v[i] = 1;
                    v[n + i] = 1;
                    v
                })
                .collect();
            (vec![a_type(n), a_type(k)], s_p, sigma)
        }
        FamilyParams::CTail(n) => {
            if n < 2 {
                return Err(param_err(id, "n ≥ 2"));
            }
            if n == 2 {
                // Stored as B2: the long root carries label 1.
                (vec![SimpleType::new(Family::B, 2).expect("B2")], vec![0], vec![])
            } else {
                (vec![SimpleType::new(Family::C, n).expect("C_n")], (1..n).collect(), vec![])
            }
        }
        FamilyParams::D5 => (
            vec![SimpleType::new(Family::D, 5).expect("D5")],
            vec![1, 2, 3],
            vec![vec![0, 1, 2, 1, 2]],
        ),
    };
    Ok(PrimitiveTriple { params, types, s_p, sigma })
}

/// Triple over a subset of the simple roots of a datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTriple {
    s: Vec<usize>,
    s_p: Vec<usize>,
    sigma: Vec<Vec<i64>>,
    diagram: DynkinDiagram,
    num_simple: usize,
}

impl AdmissibleTriple {
    /// `sigma` holds coefficient vectors over all simple roots of `datum`.
    pub fn new(
        datum: &BasedRootDatum,
        s: &[usize],
        s_p: &[usize],
        sigma: &[Vec<i64>],
    ) -> Result<Self, AdmissibilityError> {
        let n = datum.num_simple();
        let mut s = s.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&i| i >= n) {
            return Err(AdmissibilityError::IndexOutOfRange(bad));
        }
        let mut s_p = s_p.to_vec();
        s_p.sort_unstable();
        s_p.dedup();
        if let Some(&bad) = s_p.iter().find(|i| !s.contains(i)) {
            return Err(AdmissibilityError::SpNotSubset(bad));
        }
        let mut sig: Vec<Vec<i64>> = Vec::new();
        for v in sigma {
            if v.len() != n {
                return Err(AdmissibilityError::SigmaLength { expected: n, found: v.len() });
            }
            if v.iter().enumerate().any(|(i, &c)| c != 0 && !s.contains(&i)) {
                return Err(AdmissibilityError::SigmaOutside);
            }
            if !sig.contains(v) {
                sig.push(v.clone());
            }
        }
        sig.sort();
        let diagram = datum.subdiagram(&s);
        Ok(Self { s, s_p, sigma: sig, diagram, num_simple: n })
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn s_p(&self) -> &[usize] {
        &self.s_p
    }

    pub fn sigma(&self) -> &[Vec<i64>] {
        &self.sigma
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }
}

/// One primitive piece: `embedding[label]` is the simple root that label is sent to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub params: FamilyParams,
    pub embedding: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
}

fn embed_sigma(prim: &PrimitiveTriple, embedding: &[usize], n: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = prim
        .sigma
        .iter()
        .map(|v| {
            let mut w = vec![0; n];
            for (l, &c) in v.iter().enumerate() {
                w[embedding[l]] = c;
            }
            w
        })
        .collect();
    out.sort();
    out
}

impl Decomposition {
    /// Re-assemble the pieces and compare with the triple.
    pub fn reassembles(&self, triple: &AdmissibleTriple) -> bool {
        let mut nodes: Vec<usize> = Vec::new();
        let mut s_p: BTreeSet<usize> = BTreeSet::new();
        let mut sigma: BTreeSet<Vec<i64>> = BTreeSet::new();
        for piece in &self.pieces {
            let Ok(prim) = catalog_instance(piece.params) else { return false };
            if prim.rank() != piece.embedding.len() {
                return false;
            }
            // The embedding must carry the reference Cartan matrix onto the diagram.
            let mut offset = 0;
            for t in &prim.types {
                let c = t.cartan_matrix();
                let labels = &piece.embedding[offset..offset + t.rank()];
                if labels.iter().any(|l| !triple.diagram.contains(*l)) {
                    return false;
                }
                for a in 0..t.rank() {
                    for b in 0..t.rank() {
                        if triple.diagram.cartan_entry(labels[a], labels[b]) != c[a][b] {
                            return false;
                        }
                    }
                }
                offset += t.rank();
            }
            nodes.extend(&piece.embedding);
            s_p.extend(prim.s_p.iter().map(|&l| piece.embedding[l]));
            sigma.extend(embed_sigma(&prim, &piece.embedding, triple.num_simple));
        }
        let count = nodes.len();
        nodes.sort_unstable();
        nodes.dedup();
        // Distinct pieces must not be joined by an edge.
        let separated = self.pieces.iter().enumerate().all(|(i, p)| {
            self.pieces[i + 1..].iter().all(|q| {
                p.embedding.iter().all(|&a| q.embedding.iter().all(|&b| triple.diagram.cartan_entry(a, b) == 0))
            })
        });
        separated
            && count == nodes.len()
            && nodes == triple.s
            && s_p.into_iter().collect::<Vec<_>>() == triple.s_p
            && sigma.into_iter().collect::<Vec<_>>() == triple.sigma
    }
}

struct Comp {
    nodes: Vec<usize>,
    ty: SimpleType,
    labelings: Vec<Vec<usize>>,
}

struct Search<'a> {
    triple: &'a AdmissibleTriple,
    comps: Vec<Comp>,
}

impl Search<'_> {
    fn local(&self, nodes: &[usize]) -> (Vec<usize>, Vec<Vec<i64>>) {
        let sp = self.triple.s_p.iter().copied().filter(|i| nodes.contains(i)).collect();
        let sigma = self
            .triple
            .sigma
            .iter()
            .filter(|v| v.iter().enumerate().all(|(i, &c)| c == 0 || nodes.contains(&i)))
            .cloned()
            .collect();
        (sp, sigma)
    }

    fn try_piece(&self, params: FamilyParams, comps: &[usize]) -> Option<Piece> {
        let prim = catalog_instance(params).ok()?;
        if prim.types.len() != comps.len() || prim.types.iter().zip(comps).any(|(t, &c)| *t != self.comps[c].ty) {
            return None;
        }
        let nodes: Vec<usize> = comps.iter().flat_map(|&c| self.comps[c].nodes.iter().copied()).collect();
        let (sp, sigma) = self.local(&nodes);
        let mut choice = vec![0usize; comps.len()];
        loop {
            let embedding: Vec<usize> =
                comps.iter().zip(&choice).flat_map(|(&c, &j)| self.comps[c].labelings[j].iter().copied()).collect();
            let mut esp: Vec<usize> = prim.s_p.iter().map(|&l| embedding[l]).collect();
            esp.sort_unstable();
            if esp == sp && embed_sigma(&prim, &embedding, self.triple.num_simple) == sigma {
                return Some(Piece { params, embedding });
            }
            // Advance the mixed-radix counter over labelings.
            let mut pos = 0;
            loop {
                if pos == comps.len() {
                    return None;
                }
                choice[pos] += 1;
                if choice[pos] < self.comps[comps[pos]].labelings.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    fn single_candidates(&self, c: usize) -> Vec<FamilyParams> {
        let t = self.comps[c].ty;
        let n = t.rank();
        let mut out = vec![FamilyParams::Full(t)];
        match t.family() {
            Family::A => {
                out.push(FamilyParams::ATail(n));
                if n >= 4 && n.is_multiple_of(2) {
                    out.push(FamilyParams::AEven(n));
                }
            }
            Family::B if n == 2 => out.push(FamilyParams::CTail(2)),
            Family::C => out.push(FamilyParams::CTail(n)),
            Family::D if n == 5 => out.push(FamilyParams::D5),
            _ => {}
        }
        out
    }

    fn run(&self, used: &mut Vec<bool>, pieces: &mut Vec<Piece>) -> bool {
        let Some(c) = (0..self.comps.len()).find(|&i| !used[i]) else {
            // Roots whose support straddles two pieces are consumed by none.
            let consumed: usize =
                pieces.iter().map(|p| catalog_instance(p.params).map_or(0, |t| t.sigma.len())).sum();
            return consumed == self.triple.sigma.len();
        };
        used[c] = true;
        if self.comps[c].ty.family() == Family::A {
            let n = self.comps[c].ty.rank();
            for d in 0..self.comps.len() {
                let k = self.comps[d].ty.rank();
                if used[d] || self.comps[d].ty.family() != Family::A || !(n > k && k >= 2) {
                    continue;
                }
                if let Some(p) = self.try_piece(FamilyParams::AProduct(n, k), &[c, d]) {
                    used[d] = true;
                    pieces.push(p);
                    if self.run(used, pieces) {
                        return true;
                    }
                    pieces.pop();
                    used[d] = false;
                }
            }
        }
        for params in self.single_candidates(c) {
            if let Some(p) = self.try_piece(params, &[c]) {
                pieces.push(p);
                if self.run(used, pieces) {
                    return true;
                }
                pieces.pop();
            }
        }
        used[c] = false;
        false
    }
}

/// A decomposition witnessing admissibility, or `None`.
pub fn is_admissible(triple: &AdmissibleTriple) -> Option<Decomposition> {
    let diagram_comps = triple.diagram.components();
    let mut comps: Vec<Comp> = diagram_comps
        .into_iter()
        .map(|d| {
            let (ty, _) = d.type_of().expect("finite type");
            let labelings = d.labelings(ty);
            Comp { nodes: d.nodes().to_vec(), ty, labelings }
        })
        .collect();
    comps.sort_by(|a, b| b.nodes.len().cmp(&a.nodes.len()).then(a.nodes[0].cmp(&b.nodes[0])));
    let search = Search { triple, comps };
    let mut used = vec![false; search.comps.len()];
    let mut pieces = Vec::new();
    if search.run(&mut used, &mut pieces) {
        let d = Decomposition { pieces };
        debug_assert!(d.reassembles(triple));
        Some(d)
    } else {
        None
    }
}
