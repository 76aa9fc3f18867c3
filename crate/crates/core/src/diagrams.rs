//! Cartan matrices, acyclic orientations, catalog classification and
//! additive functions.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CartanError {
    #[error("matrix is empty or not square")]
    NotSquare,
    #[error("diagonal entry ({0},{0}) is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entry ({0},{1}) is zero but ({1},{0}) is not")]
    AsymmetricZeroPattern(usize, usize),
    #[error("the underlying graph is disconnected")]
    Disconnected,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

pub fn validate_cartan(rows: Vec<Vec<i64>>) -> Result<CartanMatrix, CartanError> {
    CartanMatrix::new(rows)
}

impl CartanMatrix {
    /// Checks the axioms in order: shape, diagonal, sign, zero pattern,
    /// connectivity. The first failure is reported.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<CartanMatrix, CartanError> {
        let d = rows.len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(CartanError::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 2 {
                return Err(CartanError::DiagonalNotTwo(i));
            }
        }
        for i in 0..d {
            for j in 0..d {
                if i != j && rows[i][j] > 0 {
                    return Err(CartanError::PositiveOffDiagonal(i, j));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                if i != j && rows[i][j] == 0 && rows[j][i] != 0 {
                    return Err(CartanError::AsymmetricZeroPattern(i, j));
                }
            }
        }
        let c = CartanMatrix { entries: rows };
        if !c.is_connected() {
            return Err(CartanError::Disconnected);
        }
        Ok(c)
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// |C_ij|, the exponent of a(i,·) in the equation at vertex j.
    pub fn weight(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j].unsigned_abs() as u32
    }

    /// Unordered edges {i, j} with i < j.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let d = self.d();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if self.entries[i][j] != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.d()).filter(move |&i| i != j && self.entries[i][j] != 0)
    }

    pub fn transpose(&self) -> CartanMatrix {
        let d = self.d();
        let entries = (0..d)
            .map(|i| (0..d).map(|j| self.entries[j][i]).collect())
            .collect();
        CartanMatrix { entries }
    }

    /// Relabels vertex i as perm[i].
    pub fn permuted(&self, perm: &[usize]) -> CartanMatrix {
        let d = self.d();
        let mut entries = vec![vec![0; d]; d];
        for i in 0..d {
            for j in 0..d {
                entries[perm[i]][perm[j]] = self.entries[i][j];
            }
        }
        CartanMatrix { entries }
    }

    fn is_connected(&self) -> bool {
        let d = self.d();
        let mut seen = vec![false; d];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Per-vertex sorted (outgoing, incoming) weights, sorted; equal for
    /// isomorphic diagrams.
    fn signature(&self) -> Vec<(Vec<u32>, Vec<u32>)> {
        let d = self.d();
        let mut sig: Vec<(Vec<u32>, Vec<u32>)> = (0..d)
            .map(|i| {
                let mut out: Vec<u32> = self.neighbors(i).map(|j| self.weight(i, j)).collect();
                let mut inc: Vec<u32> = self.neighbors(i).map(|j| self.weight(j, i)).collect();
                out.sort();
                inc.sort();
                (out, inc)
            })
            .collect();
        sig.sort();
        sig
    }

    fn weighted_graph(&self) -> DiGraph<(), u32> {
        let d = self.d();
        let mut g = DiGraph::with_capacity(d, 2 * d);
        let nodes: Vec<_> = (0..d).map(|_| g.add_node(())).collect();
        for i in 0..d {
            for j in self.neighbors(i) {
                g.add_edge(nodes[i], nodes[j], self.weight(i, j));
            }
        }
        g
    }

    /// Isomorphism of valued graphs: a simultaneous row/column permutation
    /// carries one matrix to the other.
    pub fn is_isomorphic(&self, other: &CartanMatrix) -> bool {
        self.d() == other.d()
            && self.signature() == other.signature()
            && is_isomorphic_matching(
                &self.weighted_graph(),
                &other.weighted_graph(),
                |_, _| true,
                |a, b| a == b,
            )
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("edge {{{0},{1}}} has no orientation")]
    MissingOrientation(usize, usize),
    #[error("arrow {0}->{1} is not an edge of the diagram")]
    NotAnEdge(usize, usize),
    #[error("edge {{{0},{1}}} is oriented twice")]
    DuplicateArrow(usize, usize),
    #[error("the orientation contains a directed cycle")]
    Cyclic,
    #[error("malformed diagram description: {0}")]
    Format(String),
}

/// A Cartan matrix with an acyclic orientation of its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    cartan: CartanMatrix,
    arrows: Vec<(usize, usize)>,
    topo: Vec<usize>,
}

impl Quiver {
    pub fn new(cartan: CartanMatrix, arrows: Vec<(usize, usize)>) -> Result<Quiver, QuiverError> {
        let d = cartan.d();
        let mut oriented = vec![vec![false; d]; d];
        for &(i, j) in &arrows {
            if i >= d || j >= d || i == j || cartan.entry(i, j) == 0 {
                return Err(QuiverError::NotAnEdge(i, j));
            }
            if oriented[i][j] || oriented[j][i] {
                return Err(QuiverError::DuplicateArrow(i.min(j), i.max(j)));
            }
            oriented[i][j] = true;
        }
        for (i, j) in cartan.edges() {
            if !oriented[i][j] && !oriented[j][i] {
                return Err(QuiverError::MissingOrientation(i, j));
            }
        }
        let topo = topological_order(d, &arrows).ok_or(QuiverError::Cyclic)?;
        Ok(Quiver { cartan, arrows, topo })
    }

    /// Every edge oriented from the lower to the higher index.
    pub fn increasing(cartan: CartanMatrix) -> Quiver {
        let arrows = cartan.edges();
        Quiver::new(cartan, arrows).expect("increasing orientation is acyclic")
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn d(&self) -> usize {
        self.cartan.d()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Vertices i with i → j, paired with |C_ij|.
    pub fn predecessors(&self, j: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.arrows
            .iter()
            .filter(move |a| a.1 == j)
            .map(move |&(i, _)| (i, self.cartan.weight(i, j)))
    }

    /// Vertices i with j → i, paired with |C_ij|.
    pub fn successors(&self, j: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.arrows
            .iter()
            .filter(move |a| a.0 == j)
            .map(move |&(_, i)| (i, self.cartan.weight(i, j)))
    }

    /// All acyclic orientations of the diagram, in a fixed order.
    pub fn all_orientations(cartan: &CartanMatrix) -> Vec<Quiver> {
        let edges = cartan.edges();
        assert!(edges.len() < 24, "too many edges to enumerate orientations");
        (0u32..1 << edges.len())
            .filter_map(|mask| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(i, j))| if mask >> k & 1 == 0 { (i, j) } else { (j, i) })
                    .collect();
                Quiver::new(cartan.clone(), arrows).ok()
            })
            .collect()
    }

    /// `{"vertices": d, "edges": [{"from": i, "to": j, "val": [|C_ji|, |C_ij|]}]}`.
    pub fn from_json(text: &str) -> Result<Quiver, QuiverError> {
        let file: DiagramFile =
            serde_json::from_str(text).map_err(|e| QuiverError::Format(e.to_string()))?;
        let d = file.vertices;
        let mut rows = vec![vec![0i64; d]; d];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut arrows = Vec::new();
        for e in &file.edges {
            if e.from >= d || e.to >= d || e.from == e.to {
                return Err(QuiverError::NotAnEdge(e.from, e.to));
            }
            let [a, b] = e.val;
            rows[e.to][e.from] = -(a as i64);
            rows[e.from][e.to] = -(b as i64);
            arrows.push((e.from, e.to));
        }
        Quiver::new(CartanMatrix::new(rows)?, arrows)
    }

    pub fn to_json(&self) -> String {
        let edges = self
            .arrows
            .iter()
            .map(|&(i, j)| DiagramEdge {
                from: i,
                to: j,
                val: [self.cartan.weight(j, i), self.cartan.weight(i, j)],
            })
            .collect();
        serde_json::to_string(&DiagramFile { vertices: self.d(), edges }).expect("serializable")
    }

    /// Catalog shorthand such as `A3`, `Atilde3`, `Dtilde7` or `kronecker`,
    /// with the default orientation of [`default_quiver`].
    pub fn from_shorthand(name: &str) -> Result<Quiver, QuiverError> {
        let (kind, m) = parse_shorthand(name)
            .ok_or_else(|| QuiverError::Format(format!("unknown diagram {name:?}")))?;
        default_quiver(kind, m)
            .ok_or_else(|| QuiverError::Format(format!("{name:?} is outside the series range")))
    }

    /// Shorthand, then JSON text.
    pub fn parse(spec: &str) -> Result<Quiver, QuiverError> {
        let t = spec.trim();
        if t.starts_with('{') {
            Quiver::from_json(t)
        } else {
            Quiver::from_shorthand(t)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramFile {
    vertices: usize,
    edges: Vec<DiagramEdge>,
}

#[derive(Serialize, Deserialize)]
struct DiagramEdge {
    from: usize,
    to: usize,
    val: [u32; 2],
}

fn topological_order(d: usize, arrows: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; d];
    for &(_, j) in arrows {
        indeg[j] += 1;
    }
    let mut ready: VecDeque<usize> = (0..d).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(d);
    while let Some(v) = ready.pop_front() {
        order.push(v);
        for &(i, j) in arrows {
            if i == v {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push_back(j);
                }
            }
        }
    }
    (order.len() == d).then_some(order)
}

/// Catalog series and exceptional shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    ATilde,
    BTilde,
    CTilde,
    DTilde,
    BCTilde,
    BDTilde,
    CDTilde,
    E6Tilde,
    E7Tilde,
    E8Tilde,
    F41Tilde,
    F42Tilde,
    G21Tilde,
    G22Tilde,
    A11Tilde,
}

const DYNKIN_SERIES: [(Kind, usize); 4] = [(Kind::A, 1), (Kind::B, 2), (Kind::C, 3), (Kind::D, 4)];
const DYNKIN_EXCEPTIONAL: [(Kind, usize); 5] =
    [(Kind::E6, 6), (Kind::E7, 7), (Kind::E8, 8), (Kind::F4, 4), (Kind::G2, 2)];
const EUCLIDEAN_SERIES: [(Kind, usize); 7] = [
    (Kind::ATilde, 1),
    (Kind::BTilde, 2),
    (Kind::CTilde, 2),
    (Kind::BCTilde, 2),
    (Kind::BDTilde, 3),
    (Kind::CDTilde, 3),
    (Kind::DTilde, 4),
];
const EUCLIDEAN_EXCEPTIONAL: [(Kind, usize); 8] = [
    (Kind::E6Tilde, 6),
    (Kind::E7Tilde, 7),
    (Kind::E8Tilde, 8),
    (Kind::F41Tilde, 4),
    (Kind::F42Tilde, 4),
    (Kind::G21Tilde, 2),
    (Kind::G22Tilde, 2),
    (Kind::A11Tilde, 1),
];

impl Kind {
    pub fn is_euclidean(self) -> bool {
        self >= Kind::ATilde
    }

    /// Exceptional Euclidean types, whose rationality is not asserted.
    pub fn is_exceptional_euclidean(self) -> bool {
        self >= Kind::E6Tilde
    }

    /// Vertex count of the member of rank index m.
    pub fn vertices(self, m: usize) -> usize {
        if self.is_euclidean() {
            m + 1
        } else {
            m
        }
    }

    fn min_rank(self) -> usize {
        DYNKIN_SERIES
            .iter()
            .chain(&DYNKIN_EXCEPTIONAL)
            .chain(&EUCLIDEAN_SERIES)
            .chain(&EUCLIDEAN_EXCEPTIONAL)
            .find(|(k, _)| *k == self)
            .map(|&(_, m)| m)
            .expect("every kind is listed")
    }

    fn is_series(self) -> bool {
        DYNKIN_SERIES.iter().chain(&EUCLIDEAN_SERIES).any(|(k, _)| *k == self)
    }

    /// Shorthand name of the member of rank index m.
    pub fn name(self, m: usize) -> String {
        let base = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::E6 => "E6",
            Kind::E7 => "E7",
            Kind::E8 => "E8",
            Kind::F4 => "F4",
            Kind::G2 => "G2",
            Kind::ATilde => "Atilde",
            Kind::BTilde => "Btilde",
            Kind::CTilde => "Ctilde",
            Kind::DTilde => "Dtilde",
            Kind::BCTilde => "BCtilde",
            Kind::BDTilde => "BDtilde",
            Kind::CDTilde => "CDtilde",
            Kind::E6Tilde => "Etilde6",
            Kind::E7Tilde => "Etilde7",
            Kind::E8Tilde => "Etilde8",
            Kind::F41Tilde => "Ftilde41",
            Kind::F42Tilde => "Ftilde42",
            Kind::G21Tilde => "Gtilde21",
            Kind::G22Tilde => "Gtilde22",
            Kind::A11Tilde => "Atilde1_4",
        };
        if self.is_series() {
            format!("{base}{m}")
        } else {
            base.to_string()
        }
    }
}

fn parse_shorthand(name: &str) -> Option<(Kind, usize)> {
    let lower = name.trim().to_ascii_lowercase();
    if lower == "kronecker" {
        return Some((Kind::ATilde, 1));
    }
    let all = DYNKIN_SERIES
        .iter()
        .chain(&DYNKIN_EXCEPTIONAL)
        .chain(&EUCLIDEAN_SERIES)
        .chain(&EUCLIDEAN_EXCEPTIONAL);
    for &(kind, min) in all.clone() {
        if !kind.is_series() && kind.name(min).to_ascii_lowercase() == lower {
            return Some((kind, min));
        }
    }
    // Longest prefix first so that "BCtilde3" is not read as "B".
    let mut series: Vec<(Kind, String)> = all
        .filter(|(k, _)| k.is_series())
        .map(|&(k, _)| (k, k.name(0).trim_end_matches('0').to_ascii_lowercase()))
        .collect();
    series.sort_by_key(|(_, p)| std::cmp::Reverse(p.len()));
    for (kind, prefix) in series {
        if let Some(rest) = lower.strip_prefix(&prefix) {
            if let Ok(m) = rest.parse::<usize>() {
                return Some((kind, m));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiagramClass {
    Dynkin(Kind, usize),
    Euclidean(Kind, usize),
    Indefinite,
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramClass::Dynkin(k, m) => write!(f, "Dynkin {}", k.name(*m)),
            DiagramClass::Euclidean(k, m) => write!(f, "Euclidean {}", k.name(*m)),
            DiagramClass::Indefinite => write!(f, "Indefinite"),
        }
    }
}

fn path_rows(n: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = 2;
        if i + 1 < n {
            rows[i][i + 1] = -1;
            rows[i + 1][i] = -1;
        }
    }
    rows
}

fn join(rows: &mut [Vec<i64>], i: usize, j: usize) {
    rows[i][j] = -1;
    rows[j][i] = -1;
}

/// Rows i and j of a valued edge: C_ij = -a, C_ji = -b.
fn valued(rows: &mut [Vec<i64>], i: usize, j: usize, a: i64, b: i64) {
    rows[i][j] = -a;
    rows[j][i] = -b;
}

/// Path 0..n with leaves 0 and 1 both attached to 2.
fn fork_rows(n: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 2;
    }
    join(&mut rows, 0, 2);
    for i in 1..n - 1 {
        join(&mut rows, i, i + 1);
    }
    rows
}

/// The catalog Cartan matrix of the given kind and rank index, or `None`
/// outside the series range.
///
/// Vertex numbering: paths run 0..n-1; forks put leaves 0 and 1 on vertex 2;
/// B-type ends carry C[end][inner] = -2, C-type ends the transpose.
pub fn catalog_matrix(kind: Kind, m: usize) -> Option<CartanMatrix> {
    if m < kind.min_rank() || (!kind.is_series() && m != kind.min_rank()) {
        return None;
    }
    let n = kind.vertices(m);
    let rows = match kind {
        Kind::A => path_rows(n),
        Kind::B => {
            let mut r = path_rows(n);
            valued(&mut r, n - 1, n - 2, 2, 1);
            r
        }
        Kind::C => {
            let mut r = path_rows(n);
            valued(&mut r, n - 2, n - 1, 2, 1);
            r
        }
        Kind::D | Kind::DTilde => {
            let mut r = fork_rows(n);
            if kind == Kind::DTilde {
                // Second fork: n-2 and n-1 both hang on n-3.
                r[n - 2][n - 1] = 0;
                r[n - 1][n - 2] = 0;
                join(&mut r, n - 3, n - 1);
            }
            r
        }
        Kind::E6 | Kind::E7 | Kind::E8 => {
            let mut r = path_rows(n);
            r[n - 2][n - 1] = 0;
            r[n - 1][n - 2] = 0;
            join(&mut r, 2, n - 1);
            r
        }
        Kind::F4 => {
            let mut r = path_rows(4);
            valued(&mut r, 1, 2, 2, 1);
            r
        }
        Kind::G2 => {
            let mut r = path_rows(2);
            valued(&mut r, 0, 1, 3, 1);
            r
        }
        Kind::ATilde => {
            if m == 1 {
                vec![vec![2, -2], vec![-2, 2]]
            } else {
                let mut r = path_rows(n);
                join(&mut r, 0, n - 1);
                r
            }
        }
        Kind::BTilde | Kind::CTilde | Kind::BCTilde => {
            let mut r = path_rows(n);
            // Right end B-type for B̃ and B̃C, C-type for C̃.
            let right_b = kind != Kind::CTilde;
            // Left end B-type for B̃ only.
            let left_b = kind == Kind::BTilde;
            if right_b {
                valued(&mut r, n - 1, n - 2, 2, 1);
            } else {
                valued(&mut r, n - 2, n - 1, 2, 1);
            }
            if left_b {
                valued(&mut r, 0, 1, 2, 1);
            } else {
                valued(&mut r, 1, 0, 2, 1);
            }
            r
        }
        Kind::BDTilde | Kind::CDTilde => {
            let mut r = fork_rows(n);
            if kind == Kind::BDTilde {
                valued(&mut r, n - 1, n - 2, 2, 1);
            } else {
                valued(&mut r, n - 2, n - 1, 2, 1);
            }
            r
        }
        Kind::E6Tilde => {
            let mut r = path_rows(7);
            r[5][6] = 0;
            r[6][5] = 0;
            r[4][5] = 0;
            r[5][4] = 0;
            join(&mut r, 2, 5);
            join(&mut r, 5, 6);
            r
        }
        Kind::E7Tilde => {
            let mut r = path_rows(8);
            r[6][7] = 0;
            r[7][6] = 0;
            join(&mut r, 3, 7);
            r
        }
        Kind::E8Tilde => {
            let mut r = path_rows(9);
            r[7][8] = 0;
            r[8][7] = 0;
            join(&mut r, 2, 8);
            r
        }
        Kind::F41Tilde | Kind::F42Tilde => {
            let mut r = path_rows(5);
            if kind == Kind::F41Tilde {
                valued(&mut r, 2, 3, 2, 1);
            } else {
                valued(&mut r, 3, 2, 2, 1);
            }
            r
        }
        Kind::G21Tilde | Kind::G22Tilde => {
            let mut r = path_rows(3);
            if kind == Kind::G21Tilde {
                valued(&mut r, 1, 2, 3, 1);
            } else {
                valued(&mut r, 2, 1, 3, 1);
            }
            r
        }
        Kind::A11Tilde => vec![vec![2, -4], vec![-1, 2]],
    };
    Some(CartanMatrix::new(rows).expect("catalog matrices satisfy the axioms"))
}

/// Catalog member with its default orientation: increasing indices, except
/// D̃_m whose last leaf points back into the second fork.
pub fn default_quiver(kind: Kind, m: usize) -> Option<Quiver> {
    let c = catalog_matrix(kind, m)?;
    if kind == Kind::DTilde {
        let mut arrows = c.edges();
        let last = arrows.iter_mut().find(|a| **a == (m - 2, m)).expect("fork edge");
        *last = (m, m - 2);
        return Some(Quiver::new(c, arrows).expect("acyclic"));
    }
    Some(Quiver::increasing(c))
}

/// Every catalog (class, matrix) pair on exactly `d` vertices.
pub fn catalog(d: usize) -> Vec<(DiagramClass, CartanMatrix)> {
    let mut out = Vec::new();
    for &(kind, _) in DYNKIN_SERIES.iter().chain(&DYNKIN_EXCEPTIONAL) {
        if let Some(c) = catalog_matrix(kind, d) {
            out.push((DiagramClass::Dynkin(kind, d), c));
        }
    }
    for &(kind, _) in EUCLIDEAN_SERIES.iter().chain(&EUCLIDEAN_EXCEPTIONAL) {
        if d >= 1 {
            if let Some(c) = catalog_matrix(kind, d - 1) {
                out.push((DiagramClass::Euclidean(kind, d - 1), c));
            }
        }
    }
    out
}

pub fn classify(c: &CartanMatrix) -> DiagramClass {
    catalog(c.d())
        .into_iter()
        .find(|(_, member)| member.is_isomorphic(c))
        .map(|(class, _)| class)
        .unwrap_or(DiagramClass::Indefinite)
}

/// Strictly positive rational values on the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunction {
    values: Vec<BigRational>,
}

impl VertexFunction {
    pub fn new(values: Vec<BigRational>) -> Option<VertexFunction> {
        values.iter().all(|v| v.is_positive()).then_some(VertexFunction { values })
    }

    pub fn from_integers(values: &[i64]) -> Option<VertexFunction> {
        VertexFunction::new(values.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Subadditivity {
    Additive,
    StrictlySubadditive,
    Violated,
}

/// Compares 2f(j) with Σ_{i≠j} f(i)|C_ij| at every vertex.
pub fn check_subadditive(c: &CartanMatrix, f: &VertexFunction) -> Subadditivity {
    assert_eq!(f.values.len(), c.d(), "function must cover every vertex");
    let mut strict = false;
    for j in 0..c.d() {
        let two_f = &f.values[j] * BigRational::from_integer(2.into());
        let sum: BigRational = c
            .neighbors(j)
            .map(|i| &f.values[i] * BigRational::from_integer(c.weight(i, j).into()))
            .sum();
        if two_f < sum {
            return Subadditivity::Violated;
        }
        strict |= two_f > sum;
    }
    if strict {
        Subadditivity::StrictlySubadditive
    } else {
        Subadditivity::Additive
    }
}

/// Basis of the rational null space of `a` (rows × cols), by reduced row
/// echelon form.
pub fn null_space(a: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in 0..cols {
                    let delta = &factor * &m[row][k];
                    m[r][k] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); cols];
            v[fc] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            v
        })
        .collect()
}

/// The positive generator of {f : Σ_i f(i) C_ij = 0 for all j}, normalized
/// to minimum 1, when the solution space is a single positive ray.
pub fn find_additive_function(c: &CartanMatrix) -> Option<VertexFunction> {
    let d = c.d();
    let ct: Vec<Vec<BigRational>> = (0..d)
        .map(|j| (0..d).map(|i| BigRational::from_integer(BigInt::from(c.entry(i, j)))).collect())
        .collect();
    let basis = null_space(&ct, d);
    if basis.len() != 1 {
        return None;
    }
    let mut v = basis.into_iter().next().expect("one vector");
    if v.iter().all(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -x.clone());
    }
    let min = v.iter().min()?.clone();
    if !min.is_positive() {
        return None;
    }
    VertexFunction::new(v.into_iter().map(|x| x / &min).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_cartan(vec![vec![2, -1], vec![-1, 2]]).is_ok());
        assert!(validate_cartan(vec![vec![2, -2], vec![-2, 2]]).is_ok());
        assert_eq!(
            validate_cartan(vec![vec![2, 0], vec![-1, 2]]),
            Err(CartanError::AsymmetricZeroPattern(0, 1))
        );
        assert_eq!(
            validate_cartan(vec![vec![2, 0], vec![0, 2]]),
            Err(CartanError::Disconnected)
        );
        assert_eq!(
            validate_cartan(vec![vec![1, -1], vec![-1, 2]]),
            Err(CartanError::DiagonalNotTwo(0))
        );
        assert_eq!(
            validate_cartan(vec![vec![2, 1], vec![1, 2]]),
            Err(CartanError::PositiveOffDiagonal(0, 1))
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&catalog_matrix(Kind::A, 3).unwrap()), DiagramClass::Dynkin(Kind::A, 3));
        let cycle = Quiver::from_shorthand("Atilde3").unwrap();
        assert_eq!(classify(cycle.cartan()), DiagramClass::Euclidean(Kind::ATilde, 3));
        let k4 = CartanMatrix::new(
            (0..4).map(|i| (0..4).map(|j| if i == j { 2 } else { -1 }).collect()).collect(),
        )
        .unwrap();
        assert_eq!(classify(&k4), DiagramClass::Indefinite);
        assert!(find_additive_function(&k4).is_none());
        assert_eq!(
            check_subadditive(&k4, &VertexFunction::from_integers(&[1, 1, 1, 1]).unwrap()),
            Subadditivity::Violated
        );
    }

    #[test]
    fn additive_examples() {
        let kron = validate_cartan(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(find_additive_function(&kron).unwrap().values(), rat(&[1, 1]).as_slice());
        let a2 = catalog_matrix(Kind::A, 2).unwrap();
        assert!(find_additive_function(&a2).is_none());
        for m in 2..7 {
            let c = catalog_matrix(Kind::ATilde, m).unwrap();
            assert_eq!(find_additive_function(&c).unwrap().values(), rat(&vec![1; m + 1]).as_slice());
        }
        let d4 = catalog_matrix(Kind::D, 4).unwrap();
        let f = VertexFunction::from_integers(&[1, 1, 2, 1]).unwrap();
        assert_eq!(check_subadditive(&d4, &f), Subadditivity::StrictlySubadditive);
        let f = VertexFunction::from_integers(&[1, 1]).unwrap();
        assert_eq!(check_subadditive(&a2, &f), Subadditivity::StrictlySubadditive);
        let e8t = catalog_matrix(Kind::E8Tilde, 8).unwrap();
        let f = find_additive_function(&e8t).unwrap();
        assert_eq!(f.values().iter().max().unwrap(), &BigRational::from_integer(6.into()));
    }

    #[test]
    fn shorthand_round_trip() {
        for d in 1..=9 {
            for (class, _) in catalog(d) {
                let (DiagramClass::Dynkin(k, m) | DiagramClass::Euclidean(k, m)) = class else {
                    unreachable!()
                };
                let q = Quiver::from_shorthand(&k.name(m)).unwrap();
                assert_eq!(classify(q.cartan()), class, "{}", k.name(m));
            }
        }
        assert_eq!(Quiver::from_shorthand("kronecker").unwrap().d(), 2);
        assert!(Quiver::from_shorthand("Q7").is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices": 2, "edges": [{"from": 0, "to": 1, "val": [2, 2]}]}"#;
        let q = Quiver::from_json(text).unwrap();
        assert_eq!(q.cartan().rows(), &[vec![2, -2], vec![-2, 2]]);
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
        let g2 = r#"{"vertices": 2, "edges": [{"from": 0, "to": 1, "val": [1, 3]}]}"#;
        let q = Quiver::from_json(g2).unwrap();
        assert_eq!(q.cartan().entry(0, 1), -3);
        assert_eq!(q.cartan().entry(1, 0), -1);
    }

    #[test]
    fn cyclic_orientation_rejected() {
        let c = catalog_matrix(Kind::ATilde, 3).unwrap();
        let arrows = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        assert_eq!(Quiver::new(c, arrows), Err(QuiverError::Cyclic));
    }
}
