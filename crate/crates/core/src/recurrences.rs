//! Minimal linear recurrences of integer sequences and N-rational matrix
//! witnesses for tiling rays.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::Report;
use crate::tilings::{check_direction, Embedding, Location, Point, TilingError};
use crate::word::{Letter, Mat2, Word};

/// Prefix terms required beyond 2·max_order.
pub const GUARD: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("prefix of {len} terms cannot certify order ≤ {max_order}; need {needed}")]
    PrefixTooShort { len: usize, max_order: usize, needed: usize },
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

/// u[n+k] = α_1 u[n+k-1] + … + α_k u[n].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub coeffs: Vec<BigRational>,
}

impl LinearRecurrence {
    pub fn new(coeffs: Vec<BigRational>) -> LinearRecurrence {
        assert!(!coeffs.is_empty(), "order is at least 1");
        LinearRecurrence { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> LinearRecurrence {
        LinearRecurrence::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Term n + k from the k terms ending before it.
    pub fn next(&self, window: &[BigRational]) -> BigRational {
        let k = self.order();
        (0..k).fold(BigRational::zero(), |acc, i| acc + &self.coeffs[i] * &window[k - 1 - i])
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| json!([c.numer().to_string(), c.denom().to_string()]))
            .collect();
        json!({ "order": self.order(), "coeffs": coeffs })
    }
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.order();
        let index = |s: usize| if s == 0 { "u[n]".to_string() } else { format!("u[n+{s}]") };
        write!(f, "{} =", index(k))?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{mag} ") };
            let term = format!("{coeff}{}", index(k - 1 - i));
            match (first, c.is_negative()) {
                (true, false) => write!(f, " {term}")?,
                (true, true) => write!(f, " -{term}")?,
                (false, false) => write!(f, " + {term}")?,
                (false, true) => write!(f, " - {term}")?,
            }
            first = false;
        }
        if first {
            write!(f, " 0")?;
        }
        Ok(())
    }
}

pub fn to_rationals(seq: &[BigUint]) -> Vec<BigRational> {
    seq.iter().map(|x| BigRational::from_integer(BigInt::from(x.clone()))).collect()
}

/// True iff the recurrence holds at every index of the prefix.
pub fn verify_recurrence(prefix: &[BigUint], rec: &LinearRecurrence) -> bool {
    verify_rational(&to_rationals(prefix), rec)
}

pub fn verify_rational(prefix: &[BigRational], rec: &LinearRecurrence) -> bool {
    let k = rec.order();
    prefix.len() > k && prefix.windows(k + 1).all(|w| rec.next(&w[..k]) == w[k])
}

pub fn find_min_recurrence(prefix: &[BigUint], max_order: usize) -> Result<Option<LinearRecurrence>, RecurrenceError> {
    find_min_recurrence_rational(&to_rationals(prefix), max_order)
}

/// Berlekamp–Massey over the rationals. An order returned from a prefix of
/// at least 2·max_order + GUARD terms is the minimal one on that prefix.
pub fn find_min_recurrence_rational(
    s: &[BigRational],
    max_order: usize,
) -> Result<Option<LinearRecurrence>, RecurrenceError> {
    let needed = 2 * max_order + GUARD;
    if s.len() < needed {
        return Err(RecurrenceError::PrefixTooShort { len: s.len(), max_order, needed });
    }
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = BigRational::one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l {
            d += &c[i] * &s[n - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let factor = &d / &bd;
        let previous = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &factor * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = previous;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    if l > max_order {
        return Ok(None);
    }
    c.resize(l.max(1) + 1, BigRational::zero());
    let coeffs = (1..=l.max(1)).map(|i| -c[i].clone()).collect();
    Ok(Some(LinearRecurrence::new(coeffs)))
}

/// Rank of a rational matrix.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for j in c..cols {
                let sub = &f * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
    }
    r
}

/// Whether some order-k recurrence fits the whole prefix; consistency of
/// the Hankel system by rank comparison.
pub fn order_fits(s: &[BigRational], k: usize) -> bool {
    if k == 0 {
        return s.iter().all(|x| x.is_zero());
    }
    if s.len() <= k {
        return true;
    }
    let system: Vec<Vec<BigRational>> = (0..s.len() - k).map(|n| (0..k).map(|i| s[n + k - 1 - i].clone()).collect()).collect();
    let augmented: Vec<Vec<BigRational>> = system
        .iter()
        .enumerate()
        .map(|(n, row)| {
            let mut r = row.clone();
            r.push(s[n + k].clone());
            r
        })
        .collect();
    rank(system) == rank(augmented)
}

/// Minimality of `rec` on the prefix: no order below it fits.
pub fn is_minimal(s: &[BigRational], rec: &LinearRecurrence) -> bool {
    !order_fits(s, rec.order() - 1)
}

/// Dense matrix with natural entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigUint>,
}

impl NatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> NatMatrix {
        NatMatrix { rows, cols, data: vec![BigUint::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> NatMatrix {
        let mut m = NatMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigUint::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> NatMatrix {
        let (r, c) = (rows.len(), rows[0].len());
        NatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().map(BigUint::from).collect() }
    }

    pub fn from_mat2(m: &Mat2) -> NatMatrix {
        NatMatrix { rows: 2, cols: 2, data: m.0.iter().flatten().cloned().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, other: &NatMatrix) -> NatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = NatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn pow(&self, mut n: u64) -> NatMatrix {
        let mut base = self.clone();
        let mut acc = NatMatrix::identity(self.rows);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> NatMatrix {
        let mut out = NatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, other: &NatMatrix) -> NatMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = NatMatrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = self.get(i, j) * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum()).collect()
    }
}

fn kron_vec(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

fn dot(a: &[BigUint], b: &[BigUint]) -> BigUint {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// a_n = λ·Mⁿ·γ with natural entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinglePower {
    pub lambda: Vec<BigUint>,
    pub m: NatMatrix,
    pub gamma: Vec<BigUint>,
}

impl SinglePower {
    pub fn value(&self, n: u64) -> BigUint {
        dot(&self.lambda, &self.m.pow(n).apply(&self.gamma))
    }

    pub fn values(&self, count: usize) -> Vec<BigUint> {
        let mut v = self.gamma.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(dot(&self.lambda, &v));
            v = self.m.apply(&v);
        }
        out
    }
}

/// Witness for the coefficientwise product a_n·b_n.
pub fn tensor_hadamard(a: &SinglePower, b: &SinglePower) -> SinglePower {
    SinglePower {
        lambda: kron_vec(&a.lambda, &b.lambda),
        m: a.m.kron(&b.m),
        gamma: kron_vec(&a.gamma, &b.gamma),
    }
}

/// One residue class of a ray: w_{i+nq} = u′ⁿ v uⁿ, so that
/// a_{i+nq} = λ M(u′)ⁿ M(v) M(u)ⁿ γ with λ = (0,1), γ = (0,1)ᵀ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueWitness {
    pub u_prime: Word,
    pub v: Word,
    pub u: Word,
    pub lambda: [BigUint; 2],
    pub m_prime: Mat2,
    pub n: Mat2,
    pub m: Mat2,
    pub gamma: [BigUint; 2],
}

impl ResidueWitness {
    fn new(u_prime: Word, v: Word, u: Word) -> ResidueWitness {
        let unit = [BigUint::zero(), BigUint::one()];
        ResidueWitness {
            m_prime: Mat2::of_word(&u_prime.0),
            n: Mat2::of_word(&v.0),
            m: Mat2::of_word(&u.0),
            u_prime,
            v,
            u,
            lambda: unit.clone(),
            gamma: unit,
        }
    }

    /// λ M′ⁿ N Mⁿ γ.
    pub fn value(&self, n: u64) -> BigUint {
        let mp = NatMatrix::from_mat2(&self.m_prime).pow(n);
        let mm = NatMatrix::from_mat2(&self.m).pow(n);
        let x = mp.mul(&NatMatrix::from_mat2(&self.n)).mul(&mm);
        dot(&self.lambda, &x.apply(&self.gamma))
    }

    /// The same sequence as (λ⊗γ)·(M′ ⊗ Mᵀ)ⁿ·vec(N), vec row by row.
    pub fn single_power(&self) -> SinglePower {
        let mp = NatMatrix::from_mat2(&self.m_prime);
        let mt = NatMatrix::from_mat2(&self.m).transpose();
        SinglePower {
            lambda: kron_vec(&self.lambda, &self.gamma),
            m: mp.kron(&mt),
            gamma: self.n.0.iter().flatten().cloned().collect(),
        }
    }
}

/// a_n for a ray: explicit terms below `base`, then residue classes mod q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRationalWitness {
    pub origin: Point,
    pub direction: Point,
    pub mirrored: bool,
    pub q: usize,
    pub base: usize,
    pub prefix: Vec<BigUint>,
    pub residues: Vec<ResidueWitness>,
}

impl NRationalWitness {
    pub fn value(&self, n: usize) -> BigUint {
        if n < self.base {
            return self.prefix[n].clone();
        }
        let (k, i) = (n - self.base).div_rem(&self.q);
        self.residues[i].value(k as u64)
    }

    /// Compares against the tiling formula for n < count.
    pub fn validate(&self, e: &Embedding, count: usize) -> Report {
        let mut r = Report::new(format!("witness of ray {:?} + n·{:?}", self.origin, self.direction));
        let ray = e.ray_values(self.origin, self.direction, count).expect("direction was checked");
        for (n, expected) in ray.values.iter().enumerate() {
            let got = self.value(n);
            r.check(&got == expected, || format!("n = {n}: witness {got}, tiling {expected}"));
        }
        r
    }
}

/// The pumped decomposition of the ray origin + n·dir.
pub fn nrational_witness(e: &Embedding, origin: Point, dir: Point) -> Result<NRationalWitness, RecurrenceError> {
    check_direction(dir)?;
    let (a, b) = dir;
    // Rays heading north-west live above the frontier: reflect to the
    // south-east case.
    let mirrored = a <= 0 && b >= 0;
    let (work, o, d) = if mirrored {
        (e.mirrored(), (origin.1, origin.0), (b, a))
    } else {
        (e.clone(), origin, dir)
    };
    let f = &work.frontier;
    let (a, b) = d;
    let y_left = f.left().count(Letter::Y) as i64;
    let x_right = f.right().count(Letter::X) as i64;
    let x_center = f.center().count(Letter::X) as i64;
    let step_period = |per: i64, shift: i64| if shift == 0 { 1 } else { per / per.gcd(&shift) };
    let q = step_period(y_left, -b).lcm(&step_period(x_right, a)) as usize;
    let rel = |n: i64| (o.0 + n * a - work.anchor.0, o.1 + n * b - work.anchor.1);
    let bounds = |n: i64| match f.locate(rel(n)) {
        Location::Below(s, t) => Some((s, t)),
        _ => None,
    };
    // Past base every point is below, its row start is inside the left
    // period and its column end inside the right period.
    let settled = |n: i64| {
        let (u, v) = rel(n);
        bounds(n).is_some() && (b == 0 || v <= -1) && (a == 0 || u - 1 >= x_center)
    };
    let mut base = 0i64;
    while !settled(base) {
        base += 1;
    }
    let prefix = (0..base).map(|n| e.tile_value((origin.0 + n * dir.0, origin.1 + n * dir.1))).collect();
    let qi = q as i64;
    let residues = (0..qi)
        .map(|i| {
            let m = base + i;
            let (s0, e0) = bounds(m).expect("settled");
            let (s1, e1) = bounds(m + qi).expect("settled");
            ResidueWitness::new(f.factor(s1, s0), f.factor(s0, e0), f.factor(e0, e1))
        })
        .collect();
    Ok(NRationalWitness { origin, direction: dir, mirrored, q, base: base as usize, prefix, residues })
}

/// Convenience: the recurrence of a finite sequence of machine naturals.
pub fn naturals(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

/// Largest absolute numerator or denominator of the coefficients, in bits.
pub fn coefficient_bits(rec: &LinearRecurrence) -> u64 {
    rec.coeffs
        .iter()
        .map(|c| c.numer().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

/// Integer coefficients as machine integers, when they are.
pub fn integer_coeffs(rec: &LinearRecurrence) -> Option<Vec<i64>> {
    rec.coeffs.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(LinearRecurrence::from_integers(&[3, -1]).to_string(), "u[n+2] = 3 u[n+1] - u[n]");
        assert_eq!(LinearRecurrence::from_integers(&[1]).to_string(), "u[n+1] = u[n]");
        assert_eq!(LinearRecurrence::from_integers(&[0, -2]).to_string(), "u[n+2] = -2 u[n]");
        let half = LinearRecurrence::new(vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(half.to_string(), "u[n+1] = 1/2 u[n]");
    }

    #[test]
    fn bm_examples() {
        let fib = naturals(&[1, 1, 2, 5, 13, 34, 89, 233]);
        let rec = find_min_recurrence(&fib, 2).unwrap().unwrap();
        assert_eq!(integer_coeffs(&rec), Some(vec![3, -1]));
        let ones = naturals(&[1; 6]);
        assert_eq!(integer_coeffs(&find_min_recurrence(&ones, 1).unwrap().unwrap()), Some(vec![1]));
        let pow2 = naturals(&[1, 2, 4, 8, 16, 32, 64, 128]);
        assert_eq!(integer_coeffs(&find_min_recurrence(&pow2, 2).unwrap().unwrap()), Some(vec![2]));
        assert!(matches!(find_min_recurrence(&pow2, 3), Err(RecurrenceError::PrefixTooShort { needed: 10, .. })));
    }
}
