//! Frontiers, the tiling they determine, a completion oracle, rays, and the
//! square and quadratic identities satisfied along periodic frontiers.
//!
//! Coordinates are (u, v) with u growing east and v growing north. Vertex
//! V_i of a frontier sits between letters i-1 and i; V_0 is the anchor and
//! V_{i+1} = V_i + step(letter i).

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::report::Report;
use crate::word::{Letter, Mat2, Word, WordError};

pub type Point = (i64, i64);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TilingError {
    #[error("inadmissible frontier: {0}")]
    InadmissibleFrontier(String),
    #[error("malformed frontier {0:?}; expected `[LEFT]* CENTER [RIGHT]*`")]
    Syntax(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("point {0:?} is on or above the frontier")]
    PointOnOrAboveFrontier(Point),
    #[error("completion at {0:?} is not integral")]
    NonIntegralCompletion(Point),
    #[error("cell {0:?} cannot be reached by 2x2 completions")]
    UnreachableCell(Point),
    #[error("direction {0:?} must be nonzero with ab <= 0")]
    BadDirection(Point),
}

/// An ultimately periodic bi-infinite word: `left` repeated towards -∞ (its
/// last letter at index -1), `center` at indices 0..|center|, and `right`
/// repeated towards +∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frontier {
    left: Word,
    center: Word,
    right: Word,
}

impl Frontier {
    pub fn new(left: Word, center: Word, right: Word) -> Result<Frontier, TilingError> {
        for (side, w) in [("left", &left), ("right", &right)] {
            if !w.contains_both() {
                return Err(TilingError::InadmissibleFrontier(format!(
                    "{side} period {w:?} must contain both x and y",
                    w = w.to_string()
                )));
            }
        }
        Ok(Frontier { left, center, right })
    }

    /// `^∞w w^∞`, with the period anchored at index 0.
    pub fn periodic(w: Word) -> Result<Frontier, TilingError> {
        Frontier::new(w.clone(), Word::default(), w)
    }

    /// Parses `[LEFT]* CENTER [RIGHT]*`; the center may be empty.
    pub fn parse(text: &str) -> Result<Frontier, TilingError> {
        let syntax = || TilingError::Syntax(text.to_string());
        let t = text.trim();
        let t = t.strip_prefix('[').ok_or_else(syntax)?;
        let (left, rest) = t.split_once("]*").ok_or_else(syntax)?;
        let rest = rest.trim_end();
        let rest = rest.strip_suffix("]*").ok_or_else(syntax)?;
        let (center, right) = rest.rsplit_once('[').ok_or_else(syntax)?;
        Frontier::new(Word::parse(left)?, Word::parse(center)?, Word::parse(right)?)
    }

    pub fn left(&self) -> &Word {
        &self.left
    }

    pub fn center(&self) -> &Word {
        &self.center
    }

    pub fn right(&self) -> &Word {
        &self.right
    }

    pub fn letter(&self, i: i64) -> Letter {
        let c = self.center.len() as i64;
        if i < 0 {
            self.left.0[i.rem_euclid(self.left.len() as i64) as usize]
        } else if i < c {
            self.center.0[i as usize]
        } else {
            self.right.0[((i - c) % self.right.len() as i64) as usize]
        }
    }

    /// Letters at indices lo..hi.
    pub fn factor(&self, lo: i64, hi: i64) -> Word {
        Word((lo..hi).map(|i| self.letter(i)).collect())
    }

    /// Frontier with x and y exchanged; its embedding is the reflection of
    /// this one through the diagonal u = v.
    pub fn swapped(&self) -> Frontier {
        Frontier {
            left: self.left.swapped(),
            center: self.center.swapped(),
            right: self.right.swapped(),
        }
    }

    /// Signed count of `l` in [0, i): negative of the count in [i, 0) when
    /// i < 0.
    fn count_to(&self, l: Letter, i: i64) -> i64 {
        let c = self.center.len() as i64;
        if i >= 0 {
            if i <= c {
                return self.center.0[..i as usize].iter().filter(|&&x| x == l).count() as i64;
            }
            let r = self.right.len() as i64;
            let (full, rem) = (i - c).div_rem(&r);
            self.center.count(l) as i64
                + full * self.right.count(l) as i64
                + self.right.0[..rem as usize].iter().filter(|&&x| x == l).count() as i64
        } else {
            let len = self.left.len() as i64;
            let (full, rem) = (-i).div_rem(&len);
            let tail = &self.left.0[(len - rem) as usize..];
            -(full * self.left.count(l) as i64 + tail.iter().filter(|&&x| x == l).count() as i64)
        }
    }

    /// Index of the k-th occurrence of `l`: k = 0 is the first at an index
    /// ≥ 0, k = -1 the first at an index < 0.
    pub fn nth(&self, l: Letter, k: i64) -> i64 {
        let cc = self.center.count(l) as i64;
        if k >= 0 {
            if k < cc {
                return position(&self.center, l, k as usize);
            }
            let per = self.right.count(l) as i64;
            let (full, rem) = (k - cc).div_rem(&per);
            self.center.len() as i64
                + full * self.right.len() as i64
                + position(&self.right, l, rem as usize)
        } else {
            let per = self.left.count(l) as i64;
            let (full, rem) = (-k - 1).div_rem(&per);
            let len = self.left.len();
            let from_end = self.left.0.iter().rev().enumerate().filter(|(_, &x)| x == l);
            let back = from_end.map(|(t, _)| t).nth(rem as usize).expect("period has the letter");
            -full * len as i64 - 1 - back as i64
        }
    }

    /// Position of V_i relative to the anchor.
    pub fn vertex(&self, i: i64) -> Point {
        (self.count_to(Letter::X, i), self.count_to(Letter::Y, i))
    }

    /// Index of the y leaving row v; V_{row_last(v)} is the last vertex on row v.
    pub fn row_last(&self, v: i64) -> i64 {
        self.nth(Letter::Y, v)
    }

    /// Index of the first vertex on row v.
    pub fn row_first(&self, v: i64) -> i64 {
        self.nth(Letter::Y, v - 1) + 1
    }

    /// Index of the first vertex on column u.
    pub fn col_first(&self, u: i64) -> i64 {
        self.nth(Letter::X, u - 1) + 1
    }

    /// Index of the last vertex on column u.
    pub fn col_last(&self, u: i64) -> i64 {
        self.nth(Letter::X, u)
    }

    /// Where a point (relative to the anchor) lies.
    pub fn locate(&self, p: Point) -> Location {
        let (u, v) = p;
        let (a, b) = (self.row_last(v), self.col_first(u));
        if a < b {
            return Location::Below(a, b);
        }
        let (a, b) = (self.col_last(u), self.row_first(v));
        if a < b {
            return Location::Above(a, b);
        }
        let first = self.row_first(v);
        let i = first + (u - self.vertex(first).0);
        debug_assert_eq!(self.vertex(i), p);
        Location::On(i)
    }
}

fn position(w: &Word, l: Letter, k: usize) -> i64 {
    w.0.iter()
        .enumerate()
        .filter(|(_, &x)| x == l)
        .nth(k)
        .map(|(i, _)| i as i64)
        .expect("occurrence exists")
}

impl fmt::Display for Frontier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]* {} [{}]*", self.left, self.center, self.right)
    }
}

impl std::str::FromStr for Frontier {
    type Err = TilingError;
    fn from_str(s: &str) -> Result<Frontier, TilingError> {
        Frontier::parse(s)
    }
}

/// Position of a point relative to a frontier path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Strictly below; the word is letters a..b.
    Below(i64, i64),
    /// Strictly above; the mirrored word is letters a..b with x and y
    /// exchanged.
    Above(i64, i64),
    /// The frontier vertex V_i.
    On(i64),
}

/// A frontier placed in the plane with V_0 at `anchor`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub frontier: Frontier,
    pub anchor: Point,
}

/// The word of a point strictly below the frontier, with the frontier
/// index of its first letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointWord {
    pub start: i64,
    pub letters: Word,
}

impl PointWord {
    /// Letters x_2..x_n.
    pub fn interior(&self) -> &[Letter] {
        let l = &self.letters.0;
        &l[1..l.len() - 1]
    }
}

impl Embedding {
    pub fn new(frontier: Frontier) -> Embedding {
        Embedding { frontier, anchor: (0, 0) }
    }

    pub fn with_anchor(frontier: Frontier, anchor: Point) -> Embedding {
        Embedding { frontier, anchor }
    }

    fn relative(&self, p: Point) -> Point {
        (p.0 - self.anchor.0, p.1 - self.anchor.1)
    }

    pub fn vertex(&self, i: i64) -> Point {
        let (u, v) = self.frontier.vertex(i);
        (u + self.anchor.0, v + self.anchor.1)
    }

    pub fn locate(&self, p: Point) -> Location {
        self.frontier.locate(self.relative(p))
    }

    /// The reflected embedding and point map: (u, v) ↦ (v, u).
    pub fn mirrored(&self) -> Embedding {
        Embedding {
            frontier: self.frontier.swapped(),
            anchor: (self.anchor.1, self.anchor.0),
        }
    }

    pub fn word_of_point(&self, p: Point) -> Result<PointWord, TilingError> {
        match self.locate(p) {
            Location::Below(a, b) => Ok(PointWord { start: a, letters: self.frontier.factor(a, b) }),
            _ => Err(TilingError::PointOnOrAboveFrontier(p)),
        }
    }

    /// The tiling value at any lattice point.
    pub fn tile_value(&self, p: Point) -> BigUint {
        match self.locate(p) {
            Location::On(_) => BigUint::one(),
            Location::Below(a, b) => word_value(&self.frontier.factor(a + 1, b - 1).0),
            Location::Above(a, b) => word_value(&self.frontier.factor(a + 1, b - 1).swapped().0),
        }
    }

    pub fn grid(&self, region: Rect) -> Grid<BigUint> {
        Grid::from_fn(region, |p| self.tile_value(p))
    }

    /// Values of the tiling at origin + n·dir for n = 0..count.
    pub fn ray_values(&self, origin: Point, dir: Point, count: usize) -> Result<Ray, TilingError> {
        check_direction(dir)?;
        let values = (0..count as i64)
            .map(|n| self.tile_value((origin.0 + n * dir.0, origin.1 + n * dir.1)))
            .collect();
        Ok(Ray { origin, direction: dir, values })
    }

    /// Solves the tiling from the frontier alone by repeated 2×2
    /// completions; independent of the matrix formula.
    pub fn brute_fill(&self, region: Rect) -> Result<Grid<BigUint>, TilingError> {
        brute_fill_with(self, region, |_| BigUint::one())
    }
}

pub(crate) fn check_direction(dir: Point) -> Result<(), TilingError> {
    if dir == (0, 0) || dir.0 * dir.1 > 0 {
        return Err(TilingError::BadDirection(dir));
    }
    Ok(())
}

/// (1,1)·M(w)·(1,1)ᵀ.
pub fn word_value(interior: &[Letter]) -> BigUint {
    Mat2::of_word(interior).sum()
}

/// Inclusive lattice rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rect {
    pub u0: i64,
    pub v0: i64,
    pub u1: i64,
    pub v1: i64,
}

impl Rect {
    pub fn new(u0: i64, v0: i64, u1: i64, v1: i64) -> Rect {
        Rect { u0: u0.min(u1), v0: v0.min(v1), u1: u0.max(u1), v1: v0.max(v1) }
    }

    pub fn width(&self) -> usize {
        (self.u1 - self.u0 + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.v1 - self.v0 + 1) as usize
    }

    pub fn contains(&self, p: Point) -> bool {
        (self.u0..=self.u1).contains(&p.0) && (self.v0..=self.v1).contains(&p.1)
    }

    /// Points row by row from the top row down, west to east.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.v0..=self.v1).rev().flat_map(move |v| (self.u0..=self.u1).map(move |u| (u, v)))
    }

    pub fn hull(&self, other: &Rect) -> Rect {
        Rect {
            u0: self.u0.min(other.u0),
            v0: self.v0.min(other.v0),
            u1: self.u1.max(other.u1),
            v1: self.v1.max(other.v1),
        }
    }
}

/// Values on a rectangle, displayed with north at the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid<T> {
    pub region: Rect,
    cells: Vec<T>,
}

impl<T> Grid<T> {
    pub fn from_fn(region: Rect, mut f: impl FnMut(Point) -> T) -> Grid<T> {
        let mut cells = Vec::with_capacity(region.width() * region.height());
        for v in region.v0..=region.v1 {
            for u in region.u0..=region.u1 {
                cells.push(f((u, v)));
            }
        }
        Grid { region, cells }
    }

    fn index(&self, p: Point) -> usize {
        debug_assert!(self.region.contains(p));
        (p.1 - self.region.v0) as usize * self.region.width() + (p.0 - self.region.u0) as usize
    }

    pub fn get(&self, p: Point) -> &T {
        &self.cells[self.index(p)]
    }

    /// Rows from north to south.
    pub fn rows(&self) -> Vec<Vec<&T>> {
        let r = self.region;
        (r.v0..=r.v1)
            .rev()
            .map(|v| (r.u0..=r.u1).map(|u| self.get((u, v))).collect())
            .collect()
    }

    pub fn map<S>(&self, f: impl Fn(&T) -> S) -> Grid<S> {
        Grid { region: self.region, cells: self.cells.iter().map(f).collect() }
    }

    /// Tab separated, north row first.
    pub fn to_tsv(&self) -> String
    where
        T: fmt::Display,
    {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    }
}

impl Grid<BigUint> {
    /// Every adjacent 2×2 block [[NW, NE], [SW, SE]] has NW·SE − NE·SW = 1.
    pub fn is_sl2(&self) -> bool {
        self.sl2_violation().is_none()
    }

    /// South-west corner of the first block whose determinant is not 1.
    pub fn sl2_violation(&self) -> Option<Point> {
        let r = self.region;
        for v in r.v0..r.v1 {
            for u in r.u0..r.u1 {
                let nw = self.get((u, v + 1));
                let ne = self.get((u + 1, v + 1));
                let sw = self.get((u, v));
                let se = self.get((u + 1, v));
                if nw * se != ne * sw + 1u32 {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

/// Values that support the 2×2 completion `(1 + p·q) / d`.
pub trait Completable: Clone {
    /// Exact quotient, or `None` if `d` does not divide `1 + p·q`.
    fn complete(p: &Self, q: &Self, d: &Self) -> Option<Self>;
}

impl Completable for BigUint {
    fn complete(p: &Self, q: &Self, d: &Self) -> Option<Self> {
        let (quot, rem) = (p * q + 1u32).div_rem(d);
        rem.bits().eq(&0).then_some(quot)
    }
}

/// Fixed-point completion from the frontier vertices (valued by `label`)
/// over the smallest box containing `region` and the projections of its
/// points onto the frontier.
pub fn brute_fill_with<T: Completable>(
    e: &Embedding,
    region: Rect,
    label: impl Fn(i64) -> T,
) -> Result<Grid<T>, TilingError> {
    let f = &e.frontier;
    let rel = Rect::new(
        region.u0 - e.anchor.0,
        region.v0 - e.anchor.1,
        region.u1 - e.anchor.0,
        region.v1 - e.anchor.1,
    );
    let mut bx = rel;
    for v in rel.v0..=rel.v1 {
        bx.u0 = bx.u0.min(f.vertex(f.row_last(v)).0);
        bx.u1 = bx.u1.max(f.vertex(f.row_first(v)).0);
    }
    for u in rel.u0..=rel.u1 {
        bx.v1 = bx.v1.max(f.vertex(f.col_first(u)).1);
        bx.v0 = bx.v0.min(f.vertex(f.col_last(u)).1);
    }
    let mut known: Grid<Option<T>> = Grid::from_fn(bx, |_| None);
    let mut i = f.row_first(bx.v0);
    loop {
        let p = f.vertex(i);
        if p.1 > bx.v1 {
            break;
        }
        if bx.contains(p) {
            let k = known.index(p);
            known.cells[k] = Some(label(i));
        }
        i += 1;
    }
    loop {
        let mut progress = false;
        for forward in [true, false] {
            let pts: Vec<Point> = if forward {
                bx.points().collect()
            } else {
                let mut v: Vec<Point> = bx.points().collect();
                v.reverse();
                v
            };
            for p in pts {
                if known.get(p).is_some() {
                    continue;
                }
                let (u, v) = p;
                let at = |q: Point| if bx.contains(q) { known.get(q).as_ref() } else { None };
                // p as the south-east corner, then as the north-west corner.
                let solved = match (at((u - 1, v + 1)), at((u, v + 1)), at((u - 1, v))) {
                    (Some(d), Some(n), Some(w)) => Some((n.clone(), w.clone(), d.clone())),
                    _ => match (at((u + 1, v - 1)), at((u, v - 1)), at((u + 1, v))) {
                        (Some(d), Some(s), Some(e)) => Some((s.clone(), e.clone(), d.clone())),
                        _ => None,
                    },
                };
                if let Some((a, b, d)) = solved {
                    let value = T::complete(&a, &b, &d).ok_or(TilingError::NonIntegralCompletion(
                        (u + e.anchor.0, v + e.anchor.1),
                    ))?;
                    let k = known.index(p);
                    known.cells[k] = Some(value);
                    progress = true;
                }
            }
        }
        if !progress {
            break;
        }
    }
    let mut out = Vec::with_capacity(region.width() * region.height());
    for v in rel.v0..=rel.v1 {
        for u in rel.u0..=rel.u1 {
            match known.get((u, v)) {
                Some(x) => out.push(x.clone()),
                None => return Err(TilingError::UnreachableCell((u + e.anchor.0, v + e.anchor.1))),
            }
        }
    }
    Ok(Grid { region, cells: out })
}

/// A sequence t(origin + n·direction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub origin: Point,
    pub direction: Point,
    pub values: Vec<BigUint>,
}

fn step(p: Point, d: Point, n: i64) -> Point {
    (p.0 + n * d.0, p.1 + n * d.1)
}

const EAST: Point = (1, 0);
const SOUTH: Point = (0, -1);
const DIAGONAL: Point = (1, -1);

/// The frontier ᵗs·y xʰ y·s with the points I, J, K of the square identity.
#[derive(Clone, Debug)]
pub struct SquareFrontier {
    pub embedding: Embedding,
    pub h: usize,
    /// Vertex between xʰ and the second y.
    pub i: Point,
    pub j: Point,
    pub k: Point,
}

/// s = prefix · period^∞.
pub fn square_frontier(prefix: &Word, period: &Word, h: usize) -> Result<SquareFrontier, TilingError> {
    let middle = Word::concat(&[&Word::parse("y")?, &Word::power(Letter::X, h), &Word::parse("y")?]);
    let center = Word::concat(&[&prefix.transpose(), &middle, prefix]);
    let frontier = Frontier::new(period.transpose(), center, period.clone())?;
    let embedding = Embedding::new(frontier);
    let i = embedding.vertex(prefix.len() as i64 + 1 + h as i64);
    Ok(SquareFrontier { embedding, h, i, j: (i.0, i.1 - 1), k: (i.0, i.1 - 2) })
}

impl SquareFrontier {
    pub fn i_ray(&self, n: usize) -> Vec<BigUint> {
        self.embedding.ray_values(self.i, EAST, n).expect("valid direction").values
    }

    pub fn j_ray(&self, n: usize) -> Vec<BigUint> {
        self.embedding.ray_values(self.j, DIAGONAL, n).expect("valid direction").values
    }

    pub fn k_ray(&self, n: usize) -> Vec<BigUint> {
        self.embedding.ray_values(self.k, DIAGONAL, n).expect("valid direction").values
    }

    /// k′_n, the value immediately east of j_n.
    pub fn k_prime(&self, n: usize) -> BigUint {
        self.embedding.tile_value(step((self.j.0 + 1, self.j.1), DIAGONAL, n as i64))
    }
}

/// j_n = (h+1)i_n² and k_n + 1 = (h+1)i_n i_{n+1} for n = 0..=max_n, and the
/// companion k′_n − 1 = (h+1)i_n i_{n+1}.
pub fn verify_square_lemma(sq: &SquareFrontier, max_n: usize) -> Report {
    let h1 = BigUint::from(sq.h + 1);
    let (i, j, k) = (sq.i_ray(max_n + 2), sq.j_ray(max_n + 1), sq.k_ray(max_n + 1));
    let mut r = Report::new(format!("square identities, h = {}", sq.h));
    for n in 0..=max_n {
        let sq_n = &h1 * &i[n] * &i[n];
        r.check(j[n] == sq_n, || format!("j_{n} = {} but (h+1)i_{n}^2 = {sq_n}", j[n]));
        let prod = &h1 * &i[n] * &i[n + 1];
        r.check(&k[n] + 1u32 == prod, || format!("k_{n} + 1 = {} but (h+1)i_n i_(n+1) = {prod}", &k[n] + 1u32));
        let kp = sq.k_prime(n);
        r.check(&kp - 1u32 == prod, || format!("k'_{n} - 1 = {} but (h+1)i_n i_(n+1) = {prod}", &kp - 1u32));
    }
    r
}

/// (j_{n+1} + j_n, j_{n+1} − j_n, k_n + k′_n), asserted to satisfy a² = b² + c².
pub fn pythagorean_triple(sq: &SquareFrontier, n: usize) -> (BigUint, BigUint, BigUint) {
    let j = sq.j_ray(n + 2);
    let k = &sq.k_ray(n + 1)[n];
    let (a, b, c) = (&j[n + 1] + &j[n], &j[n + 1] - &j[n], k + sq.k_prime(n));
    assert_eq!(&a * &a, &b * &b + &c * &c, "not a Pythagorean triple at n = {n}");
    (a, b, c)
}

/// The periodic frontier built from w, h and h′, with its named points.
#[derive(Clone, Debug)]
pub struct LemmaFrontier {
    pub embedding: Embedding,
    pub w: Word,
    pub h: usize,
    pub h_prime: usize,
    /// P_0..P_k, the vertices bounding the letters of w.
    pub p: Vec<Point>,
    pub i: Point,
    pub j: Point,
    pub k: Point,
    pub i_prime: Point,
    pub j_prime: Point,
    pub k_prime: Point,
}

/// `^∞(x y^{h′} x w x yʰ x ᵗw) | x y^{h′} x w y xʰ y | (ᵗw y x^{h′} y w y xʰ y)^∞`,
/// with the bars marking index 0 and the end of the center.
pub fn periodic_frontier(w: &Word, h: usize, h_prime: usize) -> Result<LemmaFrontier, TilingError> {
    let x = Word::parse("x")?;
    let y = Word::parse("y")?;
    let xh = Word::power(Letter::X, h);
    let yh = Word::power(Letter::Y, h);
    let xh_p = Word::power(Letter::X, h_prime);
    let yh_p = Word::power(Letter::Y, h_prime);
    let tw = w.transpose();
    let left = Word::concat(&[&x, &yh_p, &x, w, &x, &yh, &x, &tw]);
    let center = Word::concat(&[&x, &yh_p, &x, w, &y, &xh, &y]);
    let right = Word::concat(&[&tw, &y, &xh_p, &y, w, &y, &xh, &y]);
    let frontier = Frontier::new(left, center, right)?;

    let start_w = 2 + h_prime as i64;
    let end_w = start_w + w.len() as i64;
    let start_s = end_w + 2 + h as i64;
    for t in 0..50 {
        // ᵗs read from its right end against s′xy^{h′}xw read from the right.
        assert_eq!(frontier.letter(start_s + t).swap(), frontier.letter(end_w - 1 - t));
        // ᵗs′ read from its left end against w y xʰ y s.
        assert_eq!(frontier.letter(-1 - t).swap(), frontier.letter(start_w + t));
    }

    let embedding = Embedding::new(frontier);
    let p = (0..=w.len() as i64).map(|j| embedding.vertex(start_w + j)).collect();
    let i = embedding.vertex(end_w + 1 + h as i64);
    let i_prime = embedding.vertex(1);
    Ok(LemmaFrontier {
        embedding,
        w: w.clone(),
        h,
        h_prime,
        p,
        i,
        j: (i.0, i.1 - 1),
        k: (i.0, i.1 - 2),
        i_prime,
        j_prime: (i_prime.0 + 1, i_prime.1),
        k_prime: (i_prime.0 + 2, i_prime.1),
    })
}

impl LemmaFrontier {
    fn ray(&self, origin: Point, dir: Point, n: usize) -> Vec<BigUint> {
        self.embedding.ray_values(origin, dir, n).expect("valid direction").values
    }

    pub fn i_ray(&self, n: usize) -> Vec<BigUint> {
        self.ray(self.i, EAST, n)
    }

    pub fn j_ray(&self, n: usize) -> Vec<BigUint> {
        self.ray(self.j, DIAGONAL, n)
    }

    pub fn k_ray(&self, n: usize) -> Vec<BigUint> {
        self.ray(self.k, DIAGONAL, n)
    }

    pub fn i_prime_ray(&self, n: usize) -> Vec<BigUint> {
        self.ray(self.i_prime, SOUTH, n)
    }

    pub fn j_prime_ray(&self, n: usize) -> Vec<BigUint> {
        self.ray(self.j_prime, DIAGONAL, n)
    }

    pub fn k_prime_ray(&self, n: usize) -> Vec<BigUint> {
        self.ray(self.k_prime, DIAGONAL, n)
    }

    /// b(j, ·), the diagonal ray from P_j.
    pub fn b_ray(&self, j: usize, n: usize) -> Vec<BigUint> {
        self.ray(self.p[j], DIAGONAL, n)
    }
}

/// The quadratic relations b(j,n)b(j,n+1) = 1 + B, with B chosen by the
/// letters x_j x_{j+1} of w, plus the square identities on both sides.
pub fn verify_quadratic_lemma(lf: &LemmaFrontier, max_n: usize) -> Report {
    let mut r = Report::new(format!("quadratic relations, w = {}, h = {}, h' = {}", lf.w, lf.h, lf.h_prime));
    let len = max_n + 2;
    let b: Vec<Vec<BigUint>> = (0..lf.p.len()).map(|j| lf.b_ray(j, len)).collect();
    let k = lf.w.len();
    for jj in 1..k {
        let (xj, xj1) = (lf.w.0[jj - 1], lf.w.0[jj]);
        for n in 0..=max_n {
            let big_b = match (xj, xj1) {
                (Letter::X, Letter::X) => &b[jj - 1][n + 1] * &b[jj + 1][n],
                (Letter::Y, Letter::Y) => &b[jj - 1][n] * &b[jj + 1][n + 1],
                (Letter::X, Letter::Y) => &b[jj - 1][n + 1] * &b[jj + 1][n + 1],
                (Letter::Y, Letter::X) => &b[jj - 1][n] * &b[jj + 1][n],
            };
            let lhs = &b[jj][n] * &b[jj][n + 1];
            r.check(lhs == &big_b + 1u32, || {
                format!("b({jj},{n})b({jj},{}) = {lhs} but 1 + B = {}", n + 1, &big_b + 1u32)
            });
        }
    }
    let squares = |r: &mut Report, side: &str, h: usize, i: Vec<BigUint>, j: Vec<BigUint>, kk: Vec<BigUint>| {
        let h1 = BigUint::from(h + 1);
        for n in 0..=max_n {
            let sq = &h1 * &i[n] * &i[n];
            r.check(j[n] == sq, || format!("{side}: j_{n} = {} but (h+1)i_n^2 = {sq}", j[n]));
            let prod = &h1 * &i[n] * &i[n + 1];
            r.check(&kk[n] + 1u32 == prod, || format!("{side}: k_{n} + 1 != (h+1)i_n i_(n+1) = {prod}"));
        }
    };
    squares(&mut r, "unprimed", lf.h, lf.i_ray(len), lf.j_ray(len), lf.k_ray(len));
    squares(&mut r, "primed", lf.h_prime, lf.i_prime_ray(len), lf.j_prime_ray(len), lf.k_prime_ray(len));
    r
}
