//! Explicit cluster variables: the Kronecker closed form, the cross
//! construction of type A frieze patterns, and enumeration for A_n and Ã_m.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::correspondence::atilde_quiver;
use crate::diagrams::{default_quiver, Kind, Quiver};
use crate::frises::{frise_extend, frise_extend_vars_with, FriseError, Limits};
use crate::laurent::{row_times, Label, LabelPattern, LaurentError, LaurentMat2, LaurentPoly, VarFrontier};
use crate::report::Report;
use crate::tilings::{Frontier, Grid, Point, Rect};
use crate::word::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClusterError {
    #[error("cross seed {0:?} must alternate labels and letters x/y, with at least one letter")]
    BadSeed(String),
    #[error("region {0:?} leaves the figure of the cross construction")]
    RegionOutsideComponents(Rect),
    #[error("{len} values cannot witness three repetitions of any period")]
    WindowTooShort { len: usize },
    #[error("unknown cluster type {0:?}; expected An or Atildem")]
    UnknownType(String),
    #[error("orientation has {got} vertices, the type needs {want}")]
    OrientationSize { got: usize, want: usize },
    #[error("the symbolic frise does not repeat within {0} steps")]
    NotPeriodic(usize),
    #[error("orientation {0:?} is not a cyclic Ã orientation over 0..d")]
    UnsupportedOrientation(Vec<(usize, usize)>),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Frise(#[from] FriseError),
}

/// M = [[a²+1, b], [b, b²]].
pub fn kronecker_matrix(a: &LaurentPoly, b: &LaurentPoly) -> LaurentMat2 {
    let one = LaurentPoly::one();
    LaurentMat2([[&(a * a) + &one, b.clone()], [b.clone(), b * b]])
}

/// u_n = (1,b)·M^{n−2}·(1,b)ᵀ / (a^{n−1} b^{n−2}) for n ≥ 2; u_0 = a and
/// u_1 = b.
pub fn kronecker_closed_form(n: usize, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    match n {
        0 => return Ok(a.clone()),
        1 => return Ok(b.clone()),
        _ => {}
    }
    let m = kronecker_matrix(a, b);
    let mut col = (LaurentPoly::one(), b.clone());
    for _ in 0..n - 2 {
        let [[p, q], [r, s]] = &m.0;
        col = (&(p * &col.0) + &(q * &col.1), &(r * &col.0) + &(s * &col.1));
    }
    let num = &col.0 + &(b * &col.1);
    let den = &a.pow(n as u32 - 1) * &b.pow(n as u32 - 2);
    num.div_exact(&den)
}

/// ab·u_{n+2} + ab·u_n = (a²+b²+1)·u_{n+1} for n ≤ steps − 2.
pub fn kronecker_linear_recurrence_check(steps: usize, a: &LaurentPoly, b: &LaurentPoly) -> Result<Report, LaurentError> {
    let u = (0..=steps).map(|n| kronecker_closed_form(n, a, b)).collect::<Result<Vec<_>, _>>()?;
    let ab = a * b;
    let c = &(&(a * a) + &(b * b)) + &LaurentPoly::one();
    let mut r = Report::new("Kronecker linear recurrence");
    for n in 0..steps.saturating_sub(1) {
        let lhs = &(&ab * &u[n + 2]) + &(&ab * &u[n]);
        r.check(lhs == &c * &u[n + 1], || format!("fails at n = {n}"));
    }
    Ok(r)
}

/// A word a_0 x_1 a_1 … x_k a_k: letters over {x, y} between labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSeed {
    pub word: Word,
    pub labels: Vec<Label>,
}

impl CrossSeed {
    pub fn new(word: Word, labels: Vec<Label>) -> Result<CrossSeed, ClusterError> {
        if word.is_empty() || labels.len() != word.len() + 1 {
            return Err(ClusterError::BadSeed(format!("{word} with {} labels", labels.len())));
        }
        Ok(CrossSeed { word, labels })
    }

    /// Alternating tokens, either one character each (`aybycx…`) or
    /// separated by whitespace (`u1 x u2 y 1`).
    pub fn parse(text: &str) -> Result<CrossSeed, ClusterError> {
        let bad = || ClusterError::BadSeed(text.to_string());
        let tokens: Vec<String> = if text.trim().contains(char::is_whitespace) {
            text.split_whitespace().map(str::to_string).collect()
        } else {
            text.trim().chars().map(|c| c.to_string()).collect()
        };
        if tokens.len() < 3 || tokens.len() % 2 == 0 {
            return Err(bad());
        }
        let mut letters = Vec::new();
        let mut labels = Vec::new();
        for (i, t) in tokens.iter().enumerate() {
            if i % 2 == 1 {
                let mut cs = t.chars();
                match (cs.next().and_then(Letter::from_char), cs.next()) {
                    (Some(l), None) => letters.push(l),
                    _ => return Err(bad()),
                }
            } else {
                labels.push(Label::parse(t));
            }
        }
        CrossSeed::new(Word::new(letters), labels)
    }

    /// Every label replaced by 1.
    pub fn ones(word: Word) -> CrossSeed {
        let labels = vec![Label::One; word.len() + 1];
        CrossSeed { word, labels }
    }

    /// The seed of the next block: ᵗw with the labels reversed.
    pub fn transposed(&self) -> CrossSeed {
        let mut labels = self.labels.clone();
        labels.reverse();
        CrossSeed { word: self.word.transpose(), labels }
    }

    pub fn letters(&self) -> usize {
        self.word.len()
    }

    pub fn variables(&self) -> usize {
        self.labels.len()
    }
}

impl fmt::Display for CrossSeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.labels.iter().any(|l| l.to_string().chars().count() > 1);
        let sep = if wide { " " } else { "" };
        let mut parts = vec![self.labels[0].to_string()];
        for (l, a) in self.word.letters().iter().zip(&self.labels[1..]) {
            parts.push(l.as_char().to_string());
            parts.push(a.to_string());
        }
        write!(f, "{}", parts.join(sep))
    }
}

/// A finite labelled lattice path.
#[derive(Clone, Debug)]
struct Path {
    letters: Vec<Letter>,
    labels: Vec<LaurentPoly>,
    verts: Vec<Point>,
}

impl Path {
    fn new(start: Point, letters: Vec<Letter>, labels: Vec<LaurentPoly>) -> Path {
        let mut verts = vec![start];
        for l in &letters {
            let (u, v) = *verts.last().unwrap();
            verts.push(match l {
                Letter::X => (u + 1, v),
                Letter::Y => (u, v + 1),
            });
        }
        Path { letters, labels, verts }
    }

    fn row(&self, v: i64) -> impl Iterator<Item = usize> + '_ {
        (0..self.verts.len()).filter(move |&i| self.verts[i].1 == v)
    }

    fn col(&self, u: i64) -> impl Iterator<Item = usize> + '_ {
        (0..self.verts.len()).filter(move |&i| self.verts[i].0 == u)
    }
}

/// Which quarter of a block a value was read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    NorthWest,
    NorthEast,
    SouthEast,
    SouthWest,
}

/// How the chain formula treats each end of a word.
#[derive(Clone, Copy)]
struct Ends {
    /// (a_0, 1) instead of (1, a_0).
    first_swapped: bool,
    /// (a_k, 1)ᵀ instead of (1, a_k)ᵀ.
    last_swapped: bool,
    /// x and y exchanged in the interior.
    mirrored: bool,
}

/// (1/(a_1⋯a_{k−1})) · row(a_0) · Π M(a_{i−1}, x_i, a_i) · col(a_k), the
/// product over the interior letters x_2..x_{k−1}.
fn chain(letters: &[Letter], labels: &[LaurentPoly], ends: Ends) -> LaurentPoly {
    let k = letters.len();
    let one = LaurentPoly::one();
    let mut row = if ends.first_swapped { (labels[0].clone(), one.clone()) } else { (one.clone(), labels[0].clone()) };
    for t in 1..k - 1 {
        let l = if ends.mirrored { letters[t].swap() } else { letters[t] };
        row = row_times(row, &labels[t], l, &labels[t + 1]);
    }
    let col = if ends.last_swapped { (labels[k].clone(), one) } else { (one, labels[k].clone()) };
    let value = &(&row.0 * &col.0) + &(&row.1 * &col.1);
    let den = labels[1..k].iter().fold(LaurentPoly::one(), |acc, x| &acc * x);
    value.monomial_div(&den).expect("labels are unit monomials")
}

/// One cross: the NW path `y w x` from (−1−n_x, 0) and the SE path
/// `x ᵗw y` from (0, −1−n_x), both relative to the centre, with the border
/// diagonals u+v = −1−n_x and u+v = 1+n_y through their ends.
#[derive(Clone, Debug)]
struct Block {
    centre: Point,
    nw: Path,
    se: Path,
    lo: i64,
    hi: i64,
}

impl Block {
    fn new(seed: &CrossSeed, centre: Point) -> Block {
        let nx = seed.word.count(Letter::X) as i64;
        let ny = seed.word.count(Letter::Y) as i64;
        let (cu, cv) = centre;
        let one = LaurentPoly::one();
        let mut labels: Vec<LaurentPoly> = std::iter::once(one.clone())
            .chain(seed.labels.iter().map(Label::value))
            .chain(std::iter::once(one))
            .collect();
        let nw_letters = [&[Letter::Y][..], seed.word.letters(), &[Letter::X]].concat();
        let nw = Path::new((cu - 1 - nx, cv), nw_letters, labels.clone());
        labels.reverse();
        let se_letters = [&[Letter::X][..], seed.word.transpose().letters(), &[Letter::Y]].concat();
        let se = Path::new((cu, cv - 1 - nx), se_letters, labels);
        Block { centre, nw, se, lo: cu + cv - 1 - nx, hi: cu + cv + 1 + ny }
    }

    /// Index of the vertex of the NW path carrying the same label as SE
    /// vertex `i`.
    fn dual(&self, i: usize) -> usize {
        self.nw.verts.len() - 1 - i
    }

    fn bounds(&self) -> Rect {
        let nw = self.nw.verts[0];
        let top = *self.nw.verts.last().unwrap();
        let se = *self.se.verts.last().unwrap();
        Rect::new(nw.0, self.se.verts[0].1, se.0, top.1)
    }

    /// Every component reading of `p`, in the order NW, NE, SE, SW.
    fn readings(&self, p: Point) -> Vec<(Component, LaurentPoly)> {
        let (u, v) = (p.0 - self.centre.0, p.1 - self.centre.1);
        let s = p.0 + p.1;
        let one = LaurentPoly::one;
        let mut out = Vec::new();
        let plain = Ends { first_swapped: false, last_swapped: false, mirrored: false };
        if let Some(i) = self.nw.verts.iter().position(|&q| q == p) {
            out.push((Component::NorthWest, self.nw.labels[i].clone()));
        }
        if let Some(i) = self.se.verts.iter().position(|&q| q == p) {
            out.push((Component::SouthEast, self.se.labels[i].clone()));
        }
        if u <= 0 && v >= 0 {
            if let (Some(a), Some(b)) = (self.nw.row(p.1).last(), self.nw.col(p.0).next()) {
                if a < b {
                    out.push((Component::NorthWest, chain(&self.nw.letters[a..b], &self.nw.labels[a..=b], plain)));
                }
            }
        }
        if u >= 0 && v >= 0 && s <= self.hi {
            if s == self.hi {
                out.push((Component::NorthEast, one()));
            } else if let (Some(a), Some(i)) = (self.nw.row(p.1).last(), self.se.col(p.0).last()) {
                let b = self.dual(i);
                if b > a + 1 {
                    let ends = Ends { last_swapped: true, ..plain };
                    out.push((Component::NorthEast, chain(&self.nw.letters[a..b], &self.nw.labels[a..=b], ends)));
                }
            }
        }
        if u >= 0 && v <= 0 {
            if let (Some(a), Some(b)) = (self.se.col(p.0).last(), self.se.row(p.1).next()) {
                if a < b {
                    let ends = Ends { mirrored: true, ..plain };
                    out.push((Component::SouthEast, chain(&self.se.letters[a..b], &self.se.labels[a..=b], ends)));
                }
            }
        }
        if u <= 0 && v <= 0 && s >= self.lo {
            if s == self.lo {
                out.push((Component::SouthWest, one()));
            } else if let (Some(b), Some(i)) = (self.nw.col(p.0).next(), self.se.row(p.1).next()) {
                let a = self.dual(i);
                if b > a + 1 {
                    let ends = Ends { first_swapped: true, ..plain };
                    out.push((Component::SouthWest, chain(&self.nw.letters[a..b], &self.nw.labels[a..=b], ends)));
                }
            }
        }
        out
    }
}

/// The partial tiling of one cross, relative to its centre.
#[derive(Clone, Debug)]
pub struct CrossTiling {
    pub seed: CrossSeed,
    block: Block,
}

impl CrossTiling {
    pub fn new(seed: CrossSeed) -> CrossTiling {
        let block = Block::new(&seed, (0, 0));
        CrossTiling { seed, block }
    }

    /// Smallest rectangle holding the figure.
    pub fn bounds(&self) -> Rect {
        self.block.bounds()
    }

    /// Border diagonals u+v = lo and u+v = hi.
    pub fn diagonals(&self) -> (i64, i64) {
        (self.block.lo, self.block.hi)
    }

    /// The value at `p`, or None outside the four components.
    pub fn value(&self, p: Point) -> Option<LaurentPoly> {
        self.block.readings(p).into_iter().next().map(|(_, x)| x)
    }

    /// Every component's reading of `p`; more than one on the cross.
    pub fn readings(&self, p: Point) -> Vec<(Component, LaurentPoly)> {
        self.block.readings(p)
    }

    /// The labelled path `y w x`, vertex by vertex.
    pub fn nw_path(&self) -> Vec<(Point, LaurentPoly)> {
        let p = &self.block.nw;
        p.verts.iter().cloned().zip(p.labels.iter().cloned()).collect()
    }

    /// The labelled path `x ᵗw y`.
    pub fn se_path(&self) -> Vec<(Point, LaurentPoly)> {
        let p = &self.block.se;
        p.verts.iter().cloned().zip(p.labels.iter().cloned()).collect()
    }
}

/// The cross construction on `region`; cells of the bounding box outside
/// the four components are None.
pub fn cross_construct(seed: &CrossSeed, region: Rect) -> Result<Grid<Option<LaurentPoly>>, ClusterError> {
    let t = CrossTiling::new(seed.clone());
    let b = t.bounds();
    if region.u0 < b.u0 || region.v0 < b.v0 || region.u1 > b.u1 || region.v1 > b.v1 {
        return Err(ClusterError::RegionOutsideComponents(region));
    }
    Ok(Grid::from_fn(region, |p| t.value(p)))
}

/// Blank for holes, values otherwise, all labels set to 1.
pub fn ones_tsv(grid: &Grid<Option<LaurentPoly>>) -> String {
    let mut out = String::new();
    for row in grid.rows() {
        let cells: Vec<String> = row.iter().map(|c| c.as_ref().map_or(String::new(), |x| x.at_ones().to_string())).collect();
        out.push_str(cells.join("\t").trim_end());
        out.push('\n');
    }
    out
}

/// Symbolic values in canonical variable order, blank for holes.
pub fn laurent_tsv(grid: &Grid<Option<LaurentPoly>>) -> String {
    let mut out = String::new();
    for row in grid.rows() {
        let cells: Vec<String> = row.iter().map(|c| c.as_ref().map_or(String::new(), |x| x.canonical().to_string())).collect();
        out.push_str(cells.join("\t").trim_end());
        out.push('\n');
    }
    out
}

/// Crosses repeated along the strip, each continuing the previous one's
/// SE path: the seeds alternate between w and ᵗw.
#[derive(Clone, Debug)]
pub struct FriezePattern {
    pub seed: CrossSeed,
    blocks: Vec<Block>,
}

impl FriezePattern {
    pub fn new(seed: &CrossSeed, blocks: usize) -> FriezePattern {
        let mut out = Vec::with_capacity(blocks);
        let mut s = seed.clone();
        let mut centre = (0, 0);
        for _ in 0..blocks.max(1) {
            out.push(Block::new(&s, centre));
            let nx = s.word.count(Letter::X) as i64;
            let ny = s.word.count(Letter::Y) as i64;
            centre = (centre.0 + 2 + ny, centre.1 - 2 - nx);
            s = s.transposed();
        }
        FriezePattern { seed: seed.clone(), blocks: out }
    }

    pub fn diagonals(&self) -> (i64, i64) {
        (self.blocks[0].lo, self.blocks[0].hi)
    }

    pub fn value(&self, p: Point) -> Option<LaurentPoly> {
        self.blocks.iter().find_map(|b| b.readings(p).into_iter().next()).map(|(_, x)| x)
    }

    /// Every reading of `p` by every block.
    pub fn readings(&self, p: Point) -> Vec<(usize, Component, LaurentPoly)> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(k, b)| b.readings(p).into_iter().map(move |(c, x)| (k, c, x)))
            .collect()
    }

    /// The longest run u0..=u1 over which every diagonal u+v = s between
    /// the borders has a value at (u, s−u).
    pub fn covered_span(&self) -> Option<(i64, i64)> {
        let (lo, hi) = self.diagonals();
        let first = self.blocks[0].bounds();
        let last = self.blocks.last().unwrap().bounds();
        let covered = |u: i64| (lo..=hi).all(|s| self.value((u, s - u)).is_some());
        let mut best: Option<(i64, i64)> = None;
        let mut run: Option<i64> = None;
        for u in first.u0 - 1..=last.u1 + 1 {
            if covered(u) {
                let start = *run.get_or_insert(u);
                if best.is_none_or(|(a, b)| b - a < u - start) {
                    best = Some((start, u));
                }
            } else {
                run = None;
            }
        }
        best
    }

    /// Values along each diagonal strictly between the borders, indexed by
    /// u over the covered span.
    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        let (lo, hi) = self.diagonals();
        let Some((u0, u1)) = self.covered_span() else { return Vec::new() };
        (lo + 1..hi)
            .map(|s| (u0..=u1).map(|u| self.value((u, s - u)).expect("covered")).collect())
            .collect()
    }
}

/// Smallest p with rows[i][n] = rows[i][n+p] throughout and at least three
/// full periods in the window.
pub fn smallest_period<T: PartialEq>(rows: &[Vec<T>]) -> Result<Option<usize>, ClusterError> {
    let len = rows.first().map_or(0, Vec::len);
    if len < 3 {
        return Err(ClusterError::WindowTooShort { len });
    }
    Ok((1..=len / 3).find(|&p| rows.iter().all(|r| (0..len - p).all(|n| r[n] == r[n + p]))))
}

/// The empirical period of a repeated cross construction, next to
/// readings of "2 + the length of w": |w| counted in letters, in
/// variables, and in letters of the bordered path `y w x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezePeriod {
    pub period: Option<usize>,
    pub window: usize,
    pub letters: usize,
    pub variables: usize,
    /// ᵗw = w and the labels read the same backwards, so consecutive
    /// crosses coincide.
    pub halved: bool,
}

impl FriezePeriod {
    /// (name, predicted period), halved when consecutive crosses coincide;
    /// None when the halving is not an integer.
    pub fn readings(&self) -> [(&'static str, Option<usize>); 3] {
        let pred = |n: usize| match (self.halved, (n + 2) % 2) {
            (false, _) => Some(n + 2),
            (true, 0) => Some((n + 2) / 2),
            (true, _) => None,
        };
        [("letters", pred(self.letters)), ("variables", pred(self.variables)), ("bordered", pred(self.letters + 2))]
    }

    pub fn matches(&self) -> [bool; 3] {
        self.readings().map(|(_, r)| r.is_some() && r == self.period)
    }

    pub fn to_json(&self) -> Value {
        let readings: Vec<Value> = self
            .readings()
            .iter()
            .zip(self.matches())
            .map(|((name, p), m)| json!({ "length": name, "predicted": p, "matches": m }))
            .collect();
        json!({
            "period": self.period,
            "window": self.window,
            "letters": self.letters,
            "variables": self.variables,
            "halved": self.halved,
            "readings": readings,
        })
    }
}

impl fmt::Display for FriezePeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: Option<usize>| x.map_or("none".to_string(), |p| p.to_string());
        write!(f, "period {} over {} columns", show(self.period), self.window)?;
        for ((name, p), m) in self.readings().iter().zip(self.matches()) {
            write!(f, "; 2 + {name}: {} ({})", show(*p), if m { "match" } else { "no match" })?;
        }
        Ok(())
    }
}

/// Detects the translation period of the frieze along its diagonals,
/// symbolically or with every label set to 1.
pub fn frieze_period(seed: &CrossSeed, ones: bool, blocks: usize) -> Result<FriezePeriod, ClusterError> {
    let fp = FriezePattern::new(seed, blocks);
    let rows = fp.rows();
    let window = rows.first().map_or(0, Vec::len);
    let period = if ones {
        let rows: Vec<Vec<BigUint>> = rows.iter().map(|r| r.iter().map(LaurentPoly::at_ones).collect()).collect();
        smallest_period(&rows)?
    } else {
        smallest_period(&rows)?
    };
    Ok(FriezePeriod {
        period,
        window,
        letters: seed.letters(),
        variables: seed.variables(),
        halved: seed.word.is_anti_palindrome() && (ones || seed.labels.iter().eq(seed.labels.iter().rev())),
    })
}

/// Cluster types with explicit variable formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClusterType {
    A(usize),
    ATilde(usize),
}

impl ClusterType {
    pub fn parse(text: &str) -> Result<ClusterType, ClusterError> {
        let t = text.trim();
        let bad = || ClusterError::UnknownType(text.to_string());
        if t.eq_ignore_ascii_case("kronecker") {
            return Ok(ClusterType::ATilde(1));
        }
        let (rest, tilde) = match t.strip_prefix("Atilde") {
            Some(r) => (r, true),
            None => (t.strip_prefix('A').ok_or_else(bad)?, false),
        };
        let n: usize = rest.parse().map_err(|_| bad())?;
        match (tilde, n) {
            (_, 0) => Err(bad()),
            (true, m) => Ok(ClusterType::ATilde(m)),
            (false, n) => Ok(ClusterType::A(n)),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            ClusterType::A(n) => n,
            ClusterType::ATilde(m) => m + 1,
        }
    }

    pub fn default_quiver(&self) -> Quiver {
        match *self {
            ClusterType::A(n) => default_quiver(Kind::A, n),
            ClusterType::ATilde(m) => default_quiver(Kind::ATilde, m),
        }
        .expect("every rank has a catalog entry")
    }
}

impl fmt::Display for ClusterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterType::A(n) => write!(f, "A{n}"),
            ClusterType::ATilde(m) => write!(f, "Atilde{m}"),
        }
    }
}

/// Distinct cluster variables in discovery order, with the structural
/// certificate of each.
#[derive(Clone, Debug)]
pub struct ClusterVars {
    pub ty: ClusterType,
    pub steps: usize,
    pub vars: Vec<LaurentPoly>,
    pub certificate: Report,
}

impl ClusterVars {
    pub fn to_json(&self) -> Value {
        json!({
            "type": self.ty.to_string(),
            "steps": self.steps,
            "count": self.vars.len(),
            "vars": self.vars.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Cluster variables a(j, n) of the frise with a(j, 0) = u_{j+1}.
///
/// A_n runs the symbolic recursion over one full period. Ã_m reads
/// `bound` + 1 terms per vertex from rays of the tiling whose periodic
/// frontier carries the variables, and Ã_1 uses the closed form; neither
/// divides by a non-monomial. Every value is certified to have a monomial
/// denominator and positive coefficients, to specialize to the integer
/// frise, and to satisfy the recursion at random points modulo a prime.
pub fn enumerate_cluster_vars(
    ty: ClusterType,
    orientation: Option<&Quiver>,
    bound: usize,
    limits: Limits,
) -> Result<ClusterVars, ClusterError> {
    let q = orientation.cloned().unwrap_or_else(|| ty.default_quiver());
    if q.d() != ty.rank() {
        return Err(ClusterError::OrientationSize { got: q.d(), want: ty.rank() });
    }
    let (table, steps) = match ty {
        ClusterType::A(n) => {
            let window = 3 * (n + 3);
            let vf = frise_extend_vars_with(&q, window, q.d(), limits)?;
            let p = smallest_period(&vf.table)?.ok_or(ClusterError::NotPeriodic(window))?;
            let table: Vec<Vec<LaurentPoly>> = vf.table.into_iter().map(|row| row[..p].to_vec()).collect();
            (table, p)
        }
        ClusterType::ATilde(1) => (kronecker_table(&q, bound)?, bound),
        ClusterType::ATilde(_) => (atilde_table(&q, bound)?, bound),
    };
    let ints = frise_extend(&q, table[0].len() - 1)?;
    let mut certificate = Report::new(format!("cluster variables of {ty}"));
    for (j, row) in table.iter().enumerate() {
        for (n, x) in row.iter().enumerate() {
            certificate.check(!x.is_zero() && x.denominator().is_monomial(), || format!("a({j},{n}) has a non-monomial denominator"));
            certificate.check(x.terms().all(|(_, c)| !c.is_zero()), || format!("a({j},{n}) has a zero coefficient"));
            certificate.check(x.at_ones() == ints.table[j][n], || format!("a({j},{n}) does not specialize to the frise"));
        }
    }
    certificate.absorb(recursion_mod_prime(&q, &table));
    let cells = (0..table[0].len()).flat_map(|n| table.iter().map(move |row| &row[n]));
    Ok(ClusterVars { ty, steps, vars: distinct(cells), certificate })
}

fn variable_names(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("u{i}")).collect()
}

/// u_{2n} at the first vertex to mutate, u_{2n+1} at the other.
fn kronecker_table(q: &Quiver, bound: usize) -> Result<Vec<Vec<LaurentPoly>>, ClusterError> {
    let names = variable_names(2);
    let first = if q.arrows().contains(&(0, 1)) { 0 } else { 1 };
    let (a, b) = (LaurentPoly::var(&names[first]), LaurentPoly::var(&names[1 - first]));
    let u = (0..2 * bound + 2).map(|n| kronecker_closed_form(n, &a, &b)).collect::<Result<Vec<_>, _>>()?;
    let mut table = vec![Vec::new(), Vec::new()];
    for n in 0..=bound {
        table[first].push(u[2 * n].clone());
        table[1 - first].push(u[2 * n + 1].clone());
    }
    Ok(table)
}

/// Rays from V_j in direction (1, −1) of the frontier ^∞w^∞ labelled
/// periodically by u_1..u_d, where w[j] = x iff j → j+1 (mod d).
fn atilde_table(q: &Quiver, bound: usize) -> Result<Vec<Vec<LaurentPoly>>, ClusterError> {
    let d = q.d();
    let letters: Vec<Letter> = (0..d).map(|j| if q.arrows().contains(&(j, (j + 1) % d)) { Letter::X } else { Letter::Y }).collect();
    let w = Word::new(letters);
    let expected = atilde_quiver(&w).map_err(|_| ClusterError::UnsupportedOrientation(q.arrows().to_vec()))?;
    let same = |a: &Quiver, b: &Quiver| a.arrows().iter().all(|x| b.arrows().contains(x)) && a.arrows().len() == b.arrows().len();
    if !same(&expected, q) {
        return Err(ClusterError::UnsupportedOrientation(q.arrows().to_vec()));
    }
    let labels = LabelPattern::periodic(variable_names(d).into_iter().map(Label::Var).collect());
    let frontier = Frontier::periodic(w).map_err(|_| ClusterError::UnsupportedOrientation(q.arrows().to_vec()))?;
    let vf = VarFrontier::new(frontier, labels);
    Ok((0..d as i64)
        .map(|j| {
            let (u, v) = vf.embedding.vertex(j);
            (0..=bound as i64).map(|n| vf.tile_value((u + n, v - n))).collect()
        })
        .collect())
}

/// a(j,n)·a(j,n+1) = 1 + Π… checked at three pseudo-random points modulo
/// the prime 2⁶¹ − 1.
fn recursion_mod_prime(q: &Quiver, table: &[Vec<LaurentPoly>]) -> Report {
    const P: u64 = (1 << 61) - 1;
    let mut r = Report::new("recursion modulo a prime");
    for seed in 1..=3u64 {
        let value = |name: &str| {
            let k: u64 = name.trim_start_matches('u').parse().unwrap_or(0);
            (seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ k.wrapping_mul(0xBF58_476D_1CE4_E5B9)) % (P - 1) + 1
        };
        let vals: Vec<Vec<u64>> = table.iter().map(|row| row.iter().map(|x| x.eval_mod(value, P)).collect()).collect();
        let mul = |a: u64, b: u64| ((a as u128 * b as u128) % P as u128) as u64;
        let pow = |b: u64, k: u32| (0..k).fold(1, |acc, _| mul(acc, b));
        for n in 0..vals[0].len() - 1 {
            for j in 0..q.d() {
                let mut prod = 1;
                for (i, w) in q.successors(j) {
                    prod = mul(prod, pow(vals[i][n], w));
                }
                for (i, w) in q.predecessors(j) {
                    prod = mul(prod, pow(vals[i][n + 1], w));
                }
                r.check(mul(vals[j][n], vals[j][n + 1]) == (prod + 1) % P, || format!("vertex {j}, step {n}, point {seed}"));
            }
        }
    }
    r
}

/// Distinct values, in order of first appearance.
pub fn distinct<'a>(values: impl IntoIterator<Item = &'a LaurentPoly>) -> Vec<LaurentPoly> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in values {
        let x = x.canonical();
        if seen.insert(x.to_string()) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_round_trip() {
        let s = CrossSeed::parse("aybycxdxexfxgyhyiyj").unwrap();
        assert_eq!((s.letters(), s.variables()), (9, 10));
        assert_eq!(s.to_string(), "aybycxdxexfxgyhyiyj");
        assert_eq!(s.transposed().to_string(), "jxixhxgyfyeydycxbxa");
        let wide = CrossSeed::parse("u1 x u2 y 1").unwrap();
        assert_eq!(wide.to_string(), "u1 x u2 y 1");
        assert!(CrossSeed::parse("ab").is_err());
        assert!(CrossSeed::parse("a").is_err());
        assert!(CrossSeed::parse("azb").is_err());
    }

    #[test]
    fn type_names() {
        assert_eq!(ClusterType::parse("A5").unwrap(), ClusterType::A(5));
        assert_eq!(ClusterType::parse("Atilde3").unwrap(), ClusterType::ATilde(3));
        assert_eq!(ClusterType::parse("kronecker").unwrap(), ClusterType::ATilde(1));
        assert!(ClusterType::parse("B3").is_err());
        assert!(ClusterType::parse("A0").is_err());
    }

    #[test]
    fn closed_form_at_ones() {
        let one = LaurentPoly::one();
        let u: Vec<BigUint> = (2..8).map(|n| kronecker_closed_form(n, &one, &one).unwrap().at_ones()).collect();
        assert_eq!(u, [2u32, 5, 13, 34, 89, 233].map(BigUint::from));
    }
}
