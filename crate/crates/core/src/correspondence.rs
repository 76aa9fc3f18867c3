//! Frises of Ã_m and D̃_m read off rays of periodic tilings, and the
//! conjecture probe over arbitrary quivers.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::diagrams::{catalog_matrix, classify, DiagramClass, Kind, Quiver};
use crate::frises::{detect_period_of, frise_extend_with, FriseError, Limits, Periodicity};
use crate::recurrences::{find_min_recurrence, LinearRecurrence, RecurrenceError};
use crate::report::Report;
use crate::tilings::{periodic_frontier, Embedding, Frontier, TilingError};
use crate::word::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorrespondenceError {
    #[error("orientation word {0} needs both letters and length at least 3")]
    BadOrientationWord(String),
    #[error("middle word {0} must start with x and have length m - 3 ≥ 1")]
    BadMiddleWord(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Frise(#[from] FriseError),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
}

/// The Ã_m quiver on vertices 0..=m with j → j+1 (mod m+1) iff w[j] = x.
pub fn atilde_quiver(w: &Word) -> Result<Quiver, CorrespondenceError> {
    if w.len() < 3 || !w.contains_both() {
        return Err(CorrespondenceError::BadOrientationWord(w.to_string()));
    }
    let d = w.len();
    let c = catalog_matrix(Kind::ATilde, d - 1).expect("Ã_m for m ≥ 2");
    let arrows = w
        .letters()
        .iter()
        .enumerate()
        .map(|(j, &l)| match l {
            Letter::X => (j, (j + 1) % d),
            Letter::Y => ((j + 1) % d, j),
        })
        .collect();
    Ok(Quiver::new(c, arrows).expect("both letters occur, so no cycle"))
}

/// b(j, n) for the frontier ^∞w^∞: diagonal rays from V_j, j = 0..|w|.
pub fn atilde_rays(w: &Word, steps: usize) -> Result<Vec<Vec<BigUint>>, CorrespondenceError> {
    let e = Embedding::new(Frontier::periodic(w.clone())?);
    (0..w.len() as i64)
        .map(|j| Ok(e.ray_values(e.vertex(j), (1, -1), steps + 1)?.values))
        .collect()
}

/// Compares every ray b(j, n) with the frise a(j, n) for n ≤ steps.
pub fn atilde_check(w: &Word, steps: usize) -> Result<Report, CorrespondenceError> {
    let q = atilde_quiver(w)?;
    let fr = frise_extend_with(&q, steps, Limits::default())?;
    let rays = atilde_rays(w, steps)?;
    let mut r = Report::new(format!("Ã rays, w = {w}"));
    for (j, ray) in rays.iter().enumerate() {
        for n in 0..=steps {
            r.check(ray[n] == fr.table[j][n], || {
                format!("b({j},{n}) = {} but a({j},{n}) = {}", ray[n], fr.table[j][n])
            });
        }
    }
    Ok(r)
}

/// D̃_m with the fork orientation 0→2, 1→2, m−2→m−1, m→m−2, and middle
/// edge {i, i+1} oriented i→i+1 iff w[i−1] = x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTildeSpec {
    pub m: usize,
    pub w: Word,
}

impl DTildeSpec {
    pub fn new(w: Word) -> Result<DTildeSpec, CorrespondenceError> {
        if w.letters().first() != Some(&Letter::X) {
            return Err(CorrespondenceError::BadMiddleWord(w.to_string()));
        }
        Ok(DTildeSpec { m: w.len() + 3, w })
    }

    pub fn quiver(&self) -> Quiver {
        let m = self.m;
        let c = catalog_matrix(Kind::DTilde, m).expect("m ≥ 4");
        let mut arrows = vec![(0, 2), (1, 2), (m - 2, m - 1), (m, m - 2)];
        for i in 2..=m - 3 {
            arrows.push(match self.w.letters()[i - 1] {
                Letter::X => (i, i + 1),
                Letter::Y => (i + 1, i),
            });
        }
        Quiver::new(c, arrows).expect("a tree has no cycle")
    }
}

/// The rays behind the construction, each with steps + 2 terms.
#[derive(Clone, Debug)]
pub struct DTildeRays {
    pub i: Vec<BigUint>,
    pub i_prime: Vec<BigUint>,
    pub j: Vec<BigUint>,
    pub k: Vec<BigUint>,
    pub k_prime: Vec<BigUint>,
    /// b[j] for j = 0..=m−3.
    pub b: Vec<Vec<BigUint>>,
}

pub fn dtilde_rays(spec: &DTildeSpec, steps: usize) -> Result<DTildeRays, CorrespondenceError> {
    let lf = periodic_frontier(&spec.w, 1, 0)?;
    let len = steps + 2;
    Ok(DTildeRays {
        i: lf.i_ray(len),
        i_prime: lf.i_prime_ray(len),
        j: lf.j_ray(len),
        k: lf.k_ray(len),
        k_prime: lf.k_prime_ray(len),
        b: (0..=spec.w.len()).map(|j| lf.b_ray(j, len)).collect(),
    })
}

/// a′(j, n) for j = 0..=m, n = 0..=steps, assembled from the rays.
pub fn dtilde_construct(spec: &DTildeSpec, steps: usize) -> Result<Vec<Vec<BigUint>>, CorrespondenceError> {
    let rays = dtilde_rays(spec, steps)?;
    Ok(assemble(spec, &rays, steps))
}

fn assemble(spec: &DTildeSpec, rays: &DTildeRays, steps: usize) -> Vec<Vec<BigUint>> {
    let m = spec.m;
    let doubled = |x: &BigUint, n: usize| if n % 2 == 0 { x.clone() } else { x * 2u32 };
    let mut t = vec![Vec::with_capacity(steps + 1); m + 1];
    for n in 0..=steps {
        t[0].push(rays.i_prime[n].clone());
        t[1].push(rays.i_prime[n].clone());
        for j in 2..=m - 2 {
            t[j].push(rays.b[j - 1][n].clone());
        }
        t[m - 1].push(doubled(&rays.i[n], n));
        t[m].push(if n == 0 { BigUint::from(1u32) } else { doubled(&rays.i[n - 1], n) });
    }
    t
}

/// Cell-exact comparison of the construction with the D̃_m frise.
pub fn dtilde_check(spec: &DTildeSpec, steps: usize) -> Result<Report, CorrespondenceError> {
    let built = dtilde_construct(spec, steps)?;
    let fr = frise_extend_with(&spec.quiver(), steps, Limits::default())?;
    let mut r = Report::new(format!("D̃_{} construction, w = {}", spec.m, spec.w));
    for j in 0..=spec.m {
        for n in 0..=steps {
            r.check(built[j][n] == fr.table[j][n], || {
                format!("a'({j},{n}) = {} but a({j},{n}) = {}", built[j][n], fr.table[j][n])
            });
        }
    }
    Ok(r)
}

/// The intermediate identities of the construction, each checked at
/// every n < steps.
pub fn dtilde_identities(spec: &DTildeSpec, steps: usize) -> Result<Report, CorrespondenceError> {
    let rays = dtilde_rays(spec, steps + 1)?;
    let a = assemble(spec, &rays, steps + 1);
    let (m, w) = (spec.m, spec.w.letters());
    let x2 = w.get(1).copied();
    let last = w[w.len() - 1];
    let mut r = Report::new(format!("D̃_{} identities, w = {}", m, spec.w));
    let one = BigUint::from(1u32);
    for n in 0..steps {
        let two_i2 = &rays.i[n] * &rays.i[n] * 2u32;
        r.check(&a[m - 1][n] * &a[m][n + 1] == two_i2, || format!("a'(m-1,{n})a'(m,{}) ≠ 2i_n²", n + 1));
        r.check(rays.k[n] == rays.b[m - 3][n + 1], || format!("k_{n} ≠ b(m-3,{})", n + 1));
        r.check(rays.k_prime[n] == rays.b[1][n], || format!("k'_{n} ≠ b(1,{n})"));
        for j in [0, 1] {
            r.check(&a[j][n + 1] * &a[j][n] == &one + &a[2][n], || format!("step 6 fails at n = {n}"));
        }
        if m > 4 {
            let np = if x2 == Some(Letter::Y) { n + 1 } else { n };
            let rhs = &one + &a[0][n + 1] * &a[1][n + 1] * &a[3][np];
            r.check(&a[2][n + 1] * &a[2][n] == rhs, || format!("step 7 fails at n = {n}"));
            let npp = if last == Letter::X { n + 1 } else { n };
            let rhs = &one + &a[m - 3][npp] * &a[m - 1][n] * &a[m][n + 1];
            r.check(&a[m - 2][n + 1] * &a[m - 2][n] == rhs, || format!("step 8 fails at n = {n}"));
        }
        r.check(&a[m - 1][n + 1] * &a[m - 1][n] == &one + &a[m - 2][n + 1], || format!("step 9 (m-1) fails at n = {n}"));
        let rhs = if n == 0 { BigUint::from(2u32) } else { &one + &a[m - 2][n] };
        r.check(&a[m][n + 1] * &a[m][n] == rhs, || format!("step 9 (m) fails at n = {n}"));
    }
    Ok(r)
}

/// What the dichotomy predicts for a diagram class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Expectation {
    /// Dynkin: periodic, hence bounded.
    BoundedPeriodic,
    /// Non-exceptional Euclidean: unbounded, every vertex recurrent.
    UnboundedRecurrent,
    /// Exceptional Euclidean or indefinite: observed only.
    ReportOnly,
}

impl Expectation {
    pub fn of(class: DiagramClass) -> Expectation {
        match class {
            DiagramClass::Dynkin(..) => Expectation::BoundedPeriodic,
            DiagramClass::Euclidean(k, _) if !k.is_exceptional_euclidean() => Expectation::UnboundedRecurrent,
            _ => Expectation::ReportOnly,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub class: DiagramClass,
    pub steps: usize,
    pub period: Option<Periodicity>,
    /// Largest value computed, in bits.
    pub max_bits: u64,
    /// Minimal recurrence per vertex, None when no order ≤ max_order fits.
    pub recurrences: Vec<Option<LinearRecurrence>>,
    pub expectation: Expectation,
}

impl ProbeReport {
    pub fn bounded(&self) -> bool {
        self.period.is_some()
    }

    pub fn recurrence_found(&self) -> bool {
        self.recurrences.iter().all(Option::is_some)
    }

    /// Agreement with the expectation; None when nothing is predicted.
    pub fn consistent(&self) -> Option<bool> {
        match self.expectation {
            Expectation::BoundedPeriodic => Some(self.bounded() && self.recurrence_found()),
            Expectation::UnboundedRecurrent => Some(!self.bounded() && self.recurrence_found()),
            Expectation::ReportOnly => None,
        }
    }

    pub fn max_order(&self) -> Option<usize> {
        self.recurrences.iter().map(|r| r.as_ref().map(|r| r.order())).collect::<Option<Vec<_>>>()?.into_iter().max()
    }
}

/// Frise to depth `steps`, periodicity, and per-vertex recurrence fitting.
pub fn probe_conjecture(
    q: &Quiver,
    steps: usize,
    max_order: usize,
    limits: Limits,
) -> Result<ProbeReport, CorrespondenceError> {
    let class = classify(q.cartan());
    let fr = frise_extend_with(q, steps, limits)?;
    let period = detect_period_of(&fr.table)?;
    let max_bits = fr.table.iter().flatten().map(|x| x.bits()).max().unwrap_or(0);
    let recurrences = fr
        .table
        .iter()
        .map(|seq| find_min_recurrence(seq, max_order))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProbeReport { class, steps, period, max_bits, recurrences, expectation: Expectation::of(class) })
}
