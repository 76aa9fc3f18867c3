//! Oracles shared by the integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::HashMap;

use frises::laurent::LaurentPoly;
use frises::tilings::{Completable, Point};

/// Fills the strip lo ≤ u+v ≤ hi over columns u0..=u1 from the given
/// cells and the two border diagonals of 1s, by 2×2 completions only.
pub fn strip_fill<T: Completable>(
    cells: impl IntoIterator<Item = (Point, T)>,
    lo: i64,
    hi: i64,
    u0: i64,
    u1: i64,
    one: T,
) -> HashMap<Point, T> {
    let mut known: HashMap<Point, T> = cells.into_iter().collect();
    let width = hi - lo + 2;
    for u in u0 - width..=u1 + width {
        known.insert((u, lo - u), one.clone());
        known.insert((u, hi - u), one.clone());
    }
    let points: Vec<Point> = (u0..=u1).flat_map(|u| (lo + 1..hi).map(move |s| (u, s - u))).collect();
    loop {
        let mut progress = false;
        for &(u, v) in points.iter().chain(points.iter().rev()) {
            if known.contains_key(&(u, v)) {
                continue;
            }
            let se = match (known.get(&(u - 1, v + 1)), known.get(&(u, v + 1)), known.get(&(u - 1, v))) {
                (Some(d), Some(n), Some(w)) => Some(T::complete(n, w, d).expect("exact completion")),
                _ => None,
            };
            let value = se.or_else(|| match (known.get(&(u + 1, v - 1)), known.get(&(u, v - 1)), known.get(&(u + 1, v))) {
                (Some(d), Some(s), Some(e)) => Some(T::complete(s, e, d).expect("exact completion")),
                _ => None,
            });
            if let Some(x) = value {
                known.insert((u, v), x);
                progress = true;
            }
        }
        if !progress {
            return known;
        }
    }
}

/// u_{n+2} = (1 + u_{n+1}²)/u_n from u_0 = a, u_1 = b.
pub fn kronecker_recursion(a: &LaurentPoly, b: &LaurentPoly, count: usize) -> Vec<LaurentPoly> {
    let mut u = vec![a.clone(), b.clone()];
    while u.len() < count {
        let k = u.len();
        let num = &LaurentPoly::one() + &(&u[k - 1] * &u[k - 1]);
        u.push(num.div_exact(&u[k - 2]).expect("Laurent phenomenon"));
    }
    u.truncate(count);
    u
}
