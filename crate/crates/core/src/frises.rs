//! Frises of acyclic valued quivers: the sequences a(j, n) with
//! a(j,0) = 1 and
//! a(j,n)·a(j,n+1) = 1 + Π_{j→i} a(i,n)^{|C_ij|} · Π_{i→j} a(i,n+1)^{|C_ij|}.

use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::diagrams::Quiver;
use crate::laurent::{big_json, LaurentError, LaurentPoly};
use crate::report::Report;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FriseError {
    #[error("division at vertex {vertex}, step {step} is not exact")]
    NonIntegralStep { vertex: usize, step: usize },
    #[error("vertex {vertex}, step {step}: the quotient is not a Laurent polynomial")]
    NonMonomialDenominator { vertex: usize, step: usize },
    #[error("vertex {vertex}, step {step}: the quotient has a negative coefficient")]
    NegativeCoefficient { vertex: usize, step: usize },
    #[error("{steps} steps cannot witness three repetitions of any period")]
    WindowTooShort { steps: usize },
    #[error("vertex {vertex}, step {step}: value exceeds {max_bits} bits")]
    ResourceLimit { vertex: usize, step: usize, max_bits: u64 },
    #[error("{vars} variables exceed the budget of {budget}")]
    VariableBudget { vars: usize, budget: usize },
}

/// Caps on the size of computed values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_bits: Option<u64>,
}

/// Values the recursion can run over.
trait FriseValue: Clone {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
    fn plus_one(&self) -> Self;
    fn divide(&self, d: &Self, vertex: usize, step: usize) -> Result<Self, FriseError>;
    fn bits(&self) -> u64;
}

impl FriseValue for BigUint {
    fn unit() -> Self {
        BigUint::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn plus_one(&self) -> Self {
        self + 1u32
    }
    fn divide(&self, d: &Self, vertex: usize, step: usize) -> Result<Self, FriseError> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(FriseError::NonIntegralStep { vertex, step })
        }
    }
    fn bits(&self) -> u64 {
        BigUint::bits(self)
    }
}

impl FriseValue for LaurentPoly {
    fn unit() -> Self {
        LaurentPoly::one()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn plus_one(&self) -> Self {
        self + &LaurentPoly::one()
    }
    fn divide(&self, d: &Self, vertex: usize, step: usize) -> Result<Self, FriseError> {
        self.div_exact(d).map_err(|e| match e {
            LaurentError::NegativeCoefficient => FriseError::NegativeCoefficient { vertex, step },
            _ => FriseError::NonMonomialDenominator { vertex, step },
        })
    }
    fn bits(&self) -> u64 {
        self.terms().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

fn power<T: FriseValue>(x: &T, k: u32) -> T {
    (0..k).fold(T::unit(), |acc, _| acc.times(x))
}

/// The right-hand side of the recursion for vertex j between steps n, n+1.
fn numerator<T: FriseValue>(q: &Quiver, table: &[Vec<T>], j: usize, n: usize) -> T {
    let mut prod = T::unit();
    for (i, w) in q.successors(j) {
        prod = prod.times(&power(&table[i][n], w));
    }
    for (i, w) in q.predecessors(j) {
        prod = prod.times(&power(&table[i][n + 1], w));
    }
    prod.plus_one()
}

/// Runs the recursion from `init`, in topological order inside each step.
fn extend<T: FriseValue>(q: &Quiver, steps: usize, init: Vec<T>, limits: Limits) -> Result<Vec<Vec<T>>, FriseError> {
    let mut table: Vec<Vec<T>> = init.into_iter().map(|x| vec![x]).collect();
    for n in 0..steps {
        for &j in q.topological_order() {
            let value = numerator(q, &table, j, n).divide(&table[j][n], j, n + 1)?;
            if let Some(max_bits) = limits.max_bits {
                if value.bits() > max_bits {
                    return Err(FriseError::ResourceLimit { vertex: j, step: n + 1, max_bits });
                }
            }
            table[j].push(value);
        }
    }
    Ok(table)
}

/// A frise over the naturals: `table[j][n]` for 0 ≤ n ≤ steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frise {
    pub quiver: Quiver,
    pub table: Vec<Vec<BigUint>>,
}

pub fn frise_extend(q: &Quiver, steps: usize) -> Result<Frise, FriseError> {
    frise_extend_with(q, steps, Limits::default())
}

pub fn frise_extend_with(q: &Quiver, steps: usize, limits: Limits) -> Result<Frise, FriseError> {
    let table = extend(q, steps, vec![BigUint::one(); q.d()], limits)?;
    Ok(Frise { quiver: q.clone(), table })
}

impl Frise {
    pub fn steps(&self) -> usize {
        self.table[0].len() - 1
    }

    pub fn value(&self, j: usize, n: usize) -> &BigUint {
        &self.table[j][n]
    }

    pub fn sequence(&self, j: usize) -> &[BigUint] {
        &self.table[j]
    }

    /// Checks the recursion by multiplication at every cell.
    pub fn verify(&self) -> Report {
        verify_table(&self.quiver, &self.table, "frise recursion", true)
    }

    /// Rows are vertices, columns are steps.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("vertex");
        for n in 0..=self.steps() {
            out.push_str(&format!("\t{n}"));
        }
        out.push('\n');
        for (j, row) in self.table.iter().enumerate() {
            out.push_str(&j.to_string());
            for x in row {
                out.push_str(&format!("\t{x}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self.table.iter().map(|r| r.iter().map(big_json).collect()).collect();
        json!({ "steps": self.steps(), "table": rows })
    }
}

/// The recursion at every cell, and a unit initial row when `unit_start`.
fn verify_table<T: FriseValue + PartialEq>(q: &Quiver, table: &[Vec<T>], name: &str, unit_start: bool) -> Report {
    let mut r = Report::new(name);
    if unit_start {
        for (j, row) in table.iter().enumerate() {
            r.check(row[0] == T::unit(), || format!("a({j},0) ≠ 1"));
        }
    }
    let steps = table[0].len() - 1;
    for n in 0..steps {
        for j in 0..q.d() {
            let lhs = table[j][n].times(&table[j][n + 1]);
            let rhs = numerator(q, table, j, n);
            r.check(lhs == rhs, || format!("recursion fails at vertex {j}, step {n}"));
        }
    }
    r
}

/// A frise of variables: a(j, 0) = u_{j+1}.
#[derive(Clone, Debug)]
pub struct VarFrise {
    pub quiver: Quiver,
    pub vars: Arc<Vec<String>>,
    pub table: Vec<Vec<LaurentPoly>>,
}

pub fn frise_extend_vars(q: &Quiver, steps: usize, budget: usize) -> Result<VarFrise, FriseError> {
    frise_extend_vars_with(q, steps, budget, Limits::default())
}

pub fn frise_extend_vars_with(q: &Quiver, steps: usize, budget: usize, limits: Limits) -> Result<VarFrise, FriseError> {
    if q.d() > budget {
        return Err(FriseError::VariableBudget { vars: q.d(), budget });
    }
    let vars: Arc<Vec<String>> = Arc::new((1..=q.d()).map(|i| format!("u{i}")).collect());
    let init = (0..q.d())
        .map(|j| {
            let mut e = vec![0; q.d()];
            e[j] = 1;
            LaurentPoly::monomial(vars.clone(), e, BigUint::one())
        })
        .collect();
    let table = extend(q, steps, init, limits)?;
    Ok(VarFrise { quiver: q.clone(), vars, table })
}

impl VarFrise {
    pub fn steps(&self) -> usize {
        self.table[0].len() - 1
    }

    pub fn verify(&self) -> Report {
        verify_table(&self.quiver, &self.table, "variable frise recursion", false)
    }

    /// Every variable set to 1.
    pub fn specialize(&self) -> Vec<Vec<BigUint>> {
        self.table.iter().map(|r| r.iter().map(|p| p.at_ones()).collect()).collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("vertex");
        for n in 0..=self.steps() {
            out.push_str(&format!("\t{n}"));
        }
        out.push('\n');
        for (j, row) in self.table.iter().enumerate() {
            out.push_str(&j.to_string());
            for x in row {
                out.push_str(&format!("\t{x}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self
            .table
            .iter()
            .map(|r| r.iter().map(|p| p.with_vars(self.vars.clone()).to_json()).collect())
            .collect();
        json!({ "steps": self.steps(), "vars": self.vars.as_slice(), "table": rows })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub preperiod: usize,
    pub period: usize,
}

/// Smallest period p, then smallest preperiod n₀, such that every
/// sequence satisfies a(j,n) = a(j,n+p) on n₀ ≤ n ≤ N−p with at least
/// three full periods inside n₀..=N.
pub fn detect_period(fr: &Frise) -> Result<Option<Periodicity>, FriseError> {
    detect_period_of(&fr.table)
}

pub fn detect_period_of(table: &[Vec<BigUint>]) -> Result<Option<Periodicity>, FriseError> {
    let len = table.first().map_or(0, |r| r.len());
    if len < 3 {
        return Err(FriseError::WindowTooShort { steps: len.saturating_sub(1) });
    }
    for p in 1..=len / 3 {
        for n0 in 0..=len - 3 * p {
            let holds = table.iter().all(|row| (n0..len - p).all(|n| row[n] == row[n + p]));
            if holds {
                return Ok(Some(Periodicity { preperiod: n0, period: p }));
            }
        }
    }
    Ok(None)
}
