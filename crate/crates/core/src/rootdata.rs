//! Based root data of connected reductive groups, Dynkin diagrams and their
//! Bourbaki labelings.
//!
//! Conventions: the character lattice is `Z^N`, simple roots and coroots
//! are integer vectors in it, and the pairing `⟨λ, α∨⟩` is the dot product.
//! The Cartan entry at `(i, j)` is `⟨α_j, α_i∨⟩`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::matrix::{dot_i64, int_vec, rank_int};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("type {family}{rank} does not exist")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse root system type `{0}`")]
    Parse(String),
    #[error("{roots} simple roots but {coroots} simple coroots")]
    CountMismatch { roots: usize, coroots: usize },
    #[error("vector of length {found} in a character lattice of rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("simple {0} are linearly dependent")]
    Dependent(&'static str),
    #[error("pairing matrix is not the Cartan matrix of a finite root system")]
    NotFiniteType,
    #[error("simple root index {0} out of range")]
    IndexOutOfRange(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootDataError::Parse(s.to_string())),
        }
    }
}

/// Type of an irreducible root system, stored in normalized form: `C2` is
/// kept as `B2` (α1 long) and `D3` as `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(RootDataError::InvalidRank { family, rank });
        }
        let family = match (family, rank) {
            (Family::C, 2) => Family::B,
            (Family::D, 3) => Family::A,
            (f, _) => f,
        };
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The rank-2 doubly laced type, which is simultaneously `B2` and `C2`.
    pub fn is_b2(&self) -> bool {
        self.family == Family::B && self.rank == 2
    }

    /// All types of the given rank, in normalized form.
    pub fn all_of_rank(rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = SimpleType::new(fam, rank) {
                if t.family == fam && !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Bourbaki edges as `(i, j, multiplicity)` with `i` the long end of a
    /// multiple bond (0-based labels).
    fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => chain(n),
            Family::B => {
                let mut e = chain(n - 1);
                e.push((n - 2, n - 1, 2));
                e
            }
            Family::C => {
                let mut e = chain(n - 1);
                e.push((n - 1, n - 2, 2));
                e
            }
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1, 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2, 1), (1, 3, 1)];
                e.extend((2..n - 1).map(|i| (i, i + 1, 1)));
                e
            }
            Family::F => vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
            Family::G => vec![(1, 0, 3)],
        }
    }

    /// Cartan matrix `A[i][j] = ⟨α_j, α_i∨⟩` in Bourbaki labeling.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (long, short, m) in self.edges() {
            a[long][short] = -1;
            a[short][long] = -m;
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootDataError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = t.chars();
        let fam: Family = chars.next().ok_or_else(|| RootDataError::Parse(s.to_string()))?.to_string().parse()?;
        let rank: usize = chars.as_str().parse().map_err(|_| RootDataError::Parse(s.to_string()))?;
        SimpleType::new(fam, rank)
    }
}

/// Parse `"A2xC3"`-style products; whitespace is ignored, case-insensitive.
pub fn parse_type_string(s: &str) -> Result<Vec<SimpleType>, RootDataError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(['x', 'X', '×']).map(str::parse).collect()
}

/// A connected component of the Dynkin diagram with its Bourbaki labeling:
/// `labeling[k]` is the simple-root index carrying label `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub simple_type: SimpleType,
    pub labeling: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedRootDatum {
    dim: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    components: Vec<Component>,
}

fn block_cartan(types: &[SimpleType]) -> Vec<Vec<i64>> {
    let n: usize = types.iter().map(|t| t.rank()).sum();
    let mut a = vec![vec![0i64; n]; n];
    let mut off = 0;
    for t in types {
        let c = t.cartan_matrix();
        for i in 0..t.rank() {
            for j in 0..t.rank() {
                a[off + i][off + j] = c[i][j];
            }
        }
        off += t.rank();
    }
    a
}

impl BasedRootDatum {
    /// Validate raw vectors and recover the component types.
    pub fn from_vectors(roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>, dim: usize) -> Result<Self, RootDataError> {
        if roots.len() != coroots.len() {
            return Err(RootDataError::CountMismatch { roots: roots.len(), coroots: coroots.len() });
        }
        for v in roots.iter().chain(&coroots) {
            if v.len() != dim {
                return Err(RootDataError::DimensionMismatch { expected: dim, found: v.len() });
            }
        }
        let n = roots.len();
        if rank_int(&roots.iter().map(|r| int_vec(r)).collect::<Vec<_>>(), dim) < n {
            return Err(RootDataError::Dependent("roots"));
        }
        if rank_int(&coroots.iter().map(|r| int_vec(r)).collect::<Vec<_>>(), dim) < n {
            return Err(RootDataError::Dependent("coroots"));
        }
        let cartan: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| dot_i64(&roots[j], &coroots[i])).collect()).collect();
        let full = DynkinDiagram { nodes: (0..n).collect(), cartan: cartan.clone() };
        if (0..n).any(|i| cartan[i][i] != 2) {
            return Err(RootDataError::NotFiniteType);
        }
        let mut components = Vec::new();
        for comp in full.components() {
            let (simple_type, labeling) = comp.type_of().ok_or(RootDataError::NotFiniteType)?;
            components.push(Component { simple_type, labeling });
        }
        Ok(Self { dim, roots, coroots, cartan, components })
    }

    /// Fundamental weights as the standard basis; simple roots are the Cartan
    /// columns and coroots the dual basis vectors.
    pub fn simply_connected(types: &[SimpleType], torus_rank: usize) -> Result<Self, RootDataError> {
        let a = block_cartan(types);
        let n = a.len();
        let dim = n + torus_rank;
        let roots = (0..n)
            .map(|j| {
                let mut v = vec![0i64; dim];
                for i in 0..n {
                    v[i] = a[i][j];
                }
                v
            })
            .collect();
        let coroots = (0..n)
            .map(|i| {
                let mut v = vec![0i64; dim];
                v[i] = 1;
                v
            })
            .collect();
        Self::from_vectors(roots, coroots, dim)
    }

    /// Root lattice coordinates: `α_i = e_i`, coroots are the Cartan rows.
    pub fn adjoint(types: &[SimpleType]) -> Result<Self, RootDataError> {
        let a = block_cartan(types);
        let n = a.len();
        let roots = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v
            })
            .collect();
        Self::from_vectors(roots, a, n)
    }

    /// Append `k` central torus coordinates on which every root and coroot vanishes.
    pub fn with_central_torus(&self, k: usize) -> Self {
        let pad = |v: &Vec<i64>| {
            let mut w = v.clone();
            w.extend(std::iter::repeat_n(0, k));
            w
        };
        Self {
            dim: self.dim + k,
            roots: self.roots.iter().map(pad).collect(),
            coroots: self.coroots.iter().map(pad).collect(),
            cartan: self.cartan.clone(),
            components: self.components.clone(),
        }
    }

    /// Rank of the character lattice.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_simple(&self) -> usize {
        self.roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `⟨α_j, α_i∨⟩`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_types(&self) -> Vec<SimpleType> {
        self.components.iter().map(|c| c.simple_type).collect()
    }

    /// Is the datum semisimple, i.e. do the coroots span the cocharacters rationally?
    pub fn is_semisimple(&self) -> bool {
        self.num_simple() == self.dim
    }

    pub fn pairing(&self, coroot_index: usize, weight: &[i64]) -> Result<i64, RootDataError> {
        let c = self.coroots.get(coroot_index).ok_or(RootDataError::IndexOutOfRange(coroot_index))?;
        if weight.len() != self.dim {
            return Err(RootDataError::DimensionMismatch { expected: self.dim, found: weight.len() });
        }
        Ok(dot_i64(c, weight))
    }

    pub fn is_dominant(&self, weight: &[i64]) -> bool {
        weight.len() == self.dim && self.coroots.iter().all(|c| dot_i64(c, weight) >= 0)
    }

    /// `α_i ⊥ α_j` (for distinct simple roots: zero Cartan entry).
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0 && self.cartan[j][i] == 0
    }

    /// `Σ n_i α_i` as a character.
    pub fn root_combination(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.dim];
        for (c, r) in coeffs.iter().zip(&self.roots) {
            for (x, y) in v.iter_mut().zip(r) {
                *x += c * y;
            }
        }
        v
    }

    pub fn subdiagram(&self, subset: &[usize]) -> DynkinDiagram {
        let mut nodes = subset.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        let cartan = nodes.iter().map(|&i| nodes.iter().map(|&j| self.cartan[i][j]).collect()).collect();
        DynkinDiagram { nodes, cartan }
    }

    pub fn diagram(&self) -> DynkinDiagram {
        self.subdiagram(&(0..self.num_simple()).collect::<Vec<_>>())
    }
}

/// Dynkin diagram on a subset of the simple roots; the Cartan submatrix is
/// indexed by position in `nodes`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    nodes: Vec<usize>,
    cartan: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: i64,
    /// The long end of a multiple bond.
    pub long_end: Option<usize>,
}

impl DynkinDiagram {
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    fn pos(&self, node: usize) -> usize {
        self.nodes.binary_search(&node).expect("node in diagram")
    }

    /// `⟨α_j, α_i∨⟩` for nodes `i`, `j` of the diagram.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[self.pos(i)][self.pos(j)]
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for p in 0..self.len() {
            for q in p + 1..self.len() {
                let (x, y) = (self.cartan[p][q], self.cartan[q][p]);
                if x == 0 && y == 0 {
                    continue;
                }
                let long_end = match x.cmp(&y) {
                    std::cmp::Ordering::Equal => None,
                    // |⟨α_q, α_p∨⟩| < |⟨α_p, α_q∨⟩| means α_p is the longer root.
                    std::cmp::Ordering::Greater => Some(self.nodes[p]),
                    std::cmp::Ordering::Less => Some(self.nodes[q]),
                };
                out.push(Edge { a: self.nodes[p], b: self.nodes[q], multiplicity: x * y, long_end });
            }
        }
        out
    }

    fn adjacent(&self, p: usize, q: usize) -> bool {
        self.cartan[p][q] != 0 || self.cartan[q][p] != 0
    }

    /// Connected components, each with nodes in increasing order; components
    /// are ordered by their smallest node.
    pub fn components(&self) -> Vec<DynkinDiagram> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut members = Vec::new();
            seen[start] = true;
            while let Some(p) = stack.pop() {
                members.push(p);
                let next: Vec<usize> = (0..n).filter(|&q| !seen[q] && self.adjacent(p, q)).collect();
                for q in next {
                    seen[q] = true;
                    stack.push(q);
                }
            }
            members.sort_unstable();
            let nodes: Vec<usize> = members.iter().map(|&p| self.nodes[p]).collect();
            let cartan = members.iter().map(|&p| members.iter().map(|&q| self.cartan[p][q]).collect()).collect();
            out.push(DynkinDiagram { nodes, cartan });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Every bijection `label → position` under which the reference matrix
    /// equals this diagram's Cartan matrix.
    fn matchings(&self, reference: &[Vec<i64>]) -> Vec<Vec<usize>> {
        let n = self.len();
        if reference.len() != n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut assign: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_matching(reference, &mut assign, &mut used, &mut out);
        out
    }

    fn extend_matching(
        &self,
        reference: &[Vec<i64>],
        assign: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let label = assign.len();
        if label == reference.len() {
            out.push(assign.clone());
            return;
        }
        for p in 0..self.len() {
            if used[p] || self.cartan[p][p] != reference[label][label] {
                continue;
            }
            let consistent = assign.iter().enumerate().all(|(l, &q)| {
                self.cartan[p][q] == reference[label][l] && self.cartan[q][p] == reference[l][label]
            });
            if !consistent {
                continue;
            }
            used[p] = true;
            assign.push(p);
            self.extend_matching(reference, assign, used, out);
            assign.pop();
            used[p] = false;
        }
    }

    /// All Bourbaki labelings of a connected diagram of the given type, as
    /// lists of simple-root indices; sorted lexicographically.
    pub fn labelings(&self, t: SimpleType) -> Vec<Vec<usize>> {
        let mut labs: Vec<Vec<usize>> = self
            .matchings(&t.cartan_matrix())
            .into_iter()
            .map(|m| m.into_iter().map(|p| self.nodes[p]).collect())
            .collect();
        labs.sort();
        labs
    }

    /// Type and canonical (lexicographically smallest) Bourbaki labeling of a
    /// connected diagram; `None` for disconnected, empty or non-finite input.
    pub fn type_of(&self) -> Option<(SimpleType, Vec<usize>)> {
        if self.is_empty() || !self.is_connected() {
            return None;
        }
        SimpleType::all_of_rank(self.len())
            .into_iter()
            .find_map(|t| self.labelings(t).into_iter().next().map(|l| (t, l)))
    }

    /// Node permutations preserving the Cartan matrix. Each permutation
    /// lists, for every node in `nodes()` order, the simple-root index it is
    /// sent to. The identity comes first.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let mut perms: Vec<Vec<usize>> = self
            .matchings(&self.cartan)
            .into_iter()
            .map(|m| m.into_iter().map(|p| self.nodes[p]).collect())
            .collect();
        perms.sort();
        perms
    }
}
