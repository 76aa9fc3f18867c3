mod common;

use frises::cluster::*;
use frises::diagrams::Quiver;
use frises::frises::{detect_period, frise_extend, frise_extend_vars, Limits};
use frises::laurent::{Label, LaurentPoly};
use frises::tilings::{Grid, Point, Rect};
use frises::word::{Letter, Word};
use num_bigint::BigUint;
use proptest::prelude::*;

fn paper_seed() -> CrossSeed {
    CrossSeed::parse("aybycxdxexfxgyhyiyj").unwrap()
}

fn var(name: &str) -> LaurentPoly {
    LaurentPoly::var(name)
}

/// Every reading of every block agrees with the strip oracle on the
/// covered span.
fn agrees_with_oracle(seed: &CrossSeed, blocks: usize) {
    let fp = FriezePattern::new(seed, blocks);
    let (lo, hi) = fp.diagonals();
    let (u0, u1) = fp.covered_span().unwrap();
    let cross = CrossTiling::new(seed.clone());
    let west = cross.bounds().u0.min(u0);
    let oracle = common::strip_fill(cross.nw_path(), lo, hi, west - 2, u1 + 2, LaurentPoly::one());
    for u in west..=u1 {
        for s in lo..=hi {
            let p = (u, s - u);
            let want = oracle.get(&p).unwrap_or_else(|| panic!("oracle misses {p:?}"));
            for (k, c, x) in fp.readings(p) {
                assert_eq!(&x, want, "{seed}: block {k} {c:?} at {p:?}");
            }
        }
    }
}

/// NW·SE − NE·SW over every 2×2 square with four values.
fn minors_are_one(grid: &Grid<Option<LaurentPoly>>) -> usize {
    let r = grid.region;
    let mut count = 0;
    for v in r.v0..r.v1 {
        for u in r.u0..r.u1 {
            let cell = |p: Point| grid.get(p).as_ref();
            if let (Some(nw), Some(ne), Some(sw), Some(se)) =
                (cell((u, v + 1)), cell((u + 1, v + 1)), cell((u, v)), cell((u + 1, v)))
            {
                let det = &(nw * se).to_signed() - &(ne * sw).to_signed();
                assert_eq!(det, LaurentPoly::one().to_signed(), "square at {:?}", (u, v));
                count += 1;
            }
        }
    }
    count
}

#[test]
fn kronecker_closed_form_matches_the_recursion() {
    let (a, b) = (var("a"), var("b"));
    let u = common::kronecker_recursion(&a, &b, 13);
    for (n, want) in u.iter().enumerate().skip(2) {
        assert_eq!(&kronecker_closed_form(n, &a, &b).unwrap(), want, "n = {n}");
    }
    let u2 = (&LaurentPoly::one() + &(&b * &b)).monomial_div(&a).unwrap();
    assert_eq!(kronecker_closed_form(2, &a, &b).unwrap(), u2);
    let one = LaurentPoly::one();
    let ones: Vec<u64> = (2..8).map(|n| kronecker_closed_form(n, &one, &one).unwrap().at_ones().try_into().unwrap()).collect();
    assert_eq!(ones, vec![2, 5, 13, 34, 89, 233]);
}

#[test]
fn kronecker_linear_recurrence() {
    let one = LaurentPoly::one();
    assert!(kronecker_linear_recurrence_check(10, &one, &one).unwrap().passed());
    let r = kronecker_linear_recurrence_check(8, &var("a"), &var("b")).unwrap();
    assert!(r.passed() && r.checked == 7, "{r}");
    // Expanded by hand at n = 0: ab·u₂ + ab·u₀ = b(a² + b² + 1).
    let (a, b) = (var("a"), var("b"));
    let u2 = kronecker_closed_form(2, &a, &b).unwrap();
    let lhs = &(&(&a * &b) * &u2) + &(&(&a * &b) * &a);
    let rhs = &b * &(&(&(&a * &a) + &(&b * &b)) + &LaurentPoly::one());
    assert_eq!(lhs, rhs);
}

#[test]
fn paper_grid_is_reproduced() {
    let seed = paper_seed();
    let t = CrossTiling::new(seed.clone());
    assert_eq!(t.bounds(), Rect::new(-5, -5, 6, 6));
    let ones = CrossSeed::ones(seed.word.clone());
    let grid = cross_construct(&ones, t.bounds()).unwrap();
    let golden = include_str!("../fixtures/frieze_ones.tsv");
    assert_eq!(ones_tsv(&grid), golden);
    let symbolic = cross_construct(&seed, t.bounds()).unwrap();
    assert_eq!(ones_tsv(&symbolic), golden);
}

#[test]
fn point_p_matches_the_worked_formula() {
    let seed = paper_seed();
    let t = CrossTiling::new(seed.clone());
    let p = t.value((2, 2)).unwrap();
    let v: Vec<LaurentPoly> = "abcdefghij".chars().map(|c| var(&c.to_string())).collect();
    let [_, b, c, d, e, f, g, h, i, _] = &v[..] else { unreachable!() };
    // (1, b) M(c,x,d) M(d,x,e) M(e,x,f) M(f,x,g) M(g,y,h) (i, 1)ᵀ.
    let mx = |a: &LaurentPoly, z: &LaurentPoly| [[a.clone(), LaurentPoly::one()], [LaurentPoly::zero(), z.clone()]];
    let my = |a: &LaurentPoly, z: &LaurentPoly| [[z.clone(), LaurentPoly::zero()], [LaurentPoly::one(), a.clone()]];
    let mut row = [LaurentPoly::one(), b.clone()];
    for m in [mx(c, d), mx(d, e), mx(e, f), mx(f, g), my(g, h)] {
        row = [&(&row[0] * &m[0][0]) + &(&row[1] * &m[1][0]), &(&row[0] * &m[0][1]) + &(&row[1] * &m[1][1])];
    }
    let num = &(&row[0] * i) + &row[1];
    let den = [c, d, e, f, g, h].iter().fold(LaurentPoly::one(), |acc, x| &acc * x);
    assert_eq!(p, num.monomial_div(&den).unwrap());
    assert_eq!(p.denominator(), den);
    assert_eq!(p.at_ones(), BigUint::from(11u32));
}

#[test]
fn cross_rules_match_the_oracle() {
    agrees_with_oracle(&paper_seed(), 4);
    agrees_with_oracle(&CrossSeed::ones(paper_seed().word), 4);
    agrees_with_oracle(&CrossSeed::parse("u1 x u2 y 1 y u3").unwrap(), 5);
}

#[test]
fn minors_are_unimodular() {
    let seed = paper_seed();
    let t = CrossTiling::new(seed.clone());
    let grid = cross_construct(&seed, t.bounds()).unwrap();
    assert!(minors_are_one(&grid) > 50);
    let fp = FriezePattern::new(&seed, 4);
    let (u0, u1) = fp.covered_span().unwrap();
    let (lo, hi) = fp.diagonals();
    let region = Rect::new(u0, lo - u1, u1, hi - u0);
    let grid = Grid::from_fn(region, |p| (p.0 >= u0 && p.0 <= u1 && p.0 + p.1 >= lo && p.0 + p.1 <= hi).then(|| fp.value(p)).flatten());
    let n = minors_are_one(&grid);
    assert!(n > 150, "{n} squares");
}

#[test]
fn the_se_path_carries_the_transposed_labels() {
    let seed = paper_seed();
    let t = CrossTiling::new(seed.clone());
    let se = t.se_path();
    assert_eq!(se.len(), seed.letters() + 3);
    for (p, label) in se {
        assert_eq!(t.value(p).as_ref(), Some(&label), "{p:?}");
        let oracle = common::strip_fill(t.nw_path(), -5, 6, -8, 8, LaurentPoly::one());
        assert_eq!(oracle[&p], label, "{p:?}");
    }
}

#[test]
fn regions_outside_the_figure_are_rejected() {
    let seed = paper_seed();
    assert!(matches!(cross_construct(&seed, Rect::new(-6, 0, 0, 0)), Err(ClusterError::RegionOutsideComponents(_))));
    let grid = cross_construct(&seed, Rect::new(-5, 5, -4, 5)).unwrap();
    assert!(grid.get((-4, 5)).is_none());
}

#[test]
fn paper_seed_period() {
    for ones in [true, false] {
        let r = frieze_period(&paper_seed(), ones, 8).unwrap();
        assert_eq!(r.period, Some(13), "{r}");
        assert_eq!(r.readings().map(|(_, p)| p), [Some(11), Some(12), Some(13)]);
        assert_eq!(r.matches(), [false, false, true]);
    }
}

#[test]
fn anti_palindromes_halve_the_period() {
    let seed = CrossSeed::parse("axbyc").unwrap();
    assert!(seed.word.is_anti_palindrome());
    let ones = frieze_period(&seed, true, 12).unwrap();
    let symbolic = frieze_period(&seed, false, 12).unwrap();
    assert_eq!((ones.period, symbolic.period), (Some(3), Some(6)));
    assert!(ones.halved && !symbolic.halved);
    // Palindromic labels make consecutive crosses coincide symbolically.
    let even = frieze_period(&CrossSeed::parse("axbya").unwrap(), false, 12).unwrap();
    assert_eq!(even.period, Some(3));
}

#[test]
fn single_letter_seed_is_the_a2_frise() {
    let q = Quiver::parse("A2").unwrap();
    let want = detect_period(&frise_extend(&q, 20).unwrap()).unwrap().unwrap().period;
    for w in ["axb", "ayb"] {
        let r = frieze_period(&CrossSeed::parse(w).unwrap(), false, 12).unwrap();
        assert_eq!(r.period, Some(want), "{w}");
    }
}

#[test]
fn short_windows_are_reported() {
    let r = smallest_period::<u8>(&[vec![1, 1]]);
    assert_eq!(r, Err(ClusterError::WindowTooShort { len: 2 }));
}

#[test]
fn a2_cluster_variables() {
    let cv = enumerate_cluster_vars(ClusterType::A(2), None, 0, Limits::default()).unwrap();
    assert!(cv.certificate.passed(), "{}", cv.certificate);
    let (u1, u2, one) = (var("u1"), var("u2"), LaurentPoly::one());
    let want = [
        u1.clone(),
        u2.clone(),
        (&one + &u2).monomial_div(&u1).unwrap(),
        (&(&u1 + &u2) + &one).monomial_div(&(&u1 * &u2)).unwrap(),
        (&one + &u1).monomial_div(&u2).unwrap(),
    ];
    assert_eq!(cv.vars.len(), 5);
    for w in &want {
        assert!(cv.vars.contains(w), "{w} missing");
    }
}

#[test]
fn type_a_counts() {
    for n in 1..=5 {
        for q in Quiver::all_orientations(Quiver::parse(&format!("A{n}")).unwrap().cartan()) {
            let cv = enumerate_cluster_vars(ClusterType::A(n), Some(&q), 0, Limits::default()).unwrap();
            assert!(cv.certificate.passed(), "{}", cv.certificate);
            assert_eq!(cv.vars.len(), n * (n + 3) / 2, "A{n} {:?}", q.arrows());
        }
    }
}

#[test]
fn type_a_counts_from_friezes() {
    // A frieze with n interior diagonals holds n(n+3)/2 distinct values
    // per period.
    for len in 1..=4 {
        for bits in 0..1u32 << len {
            let letters: Vec<Letter> = (0..len).map(|i| if bits >> i & 1 == 1 { Letter::Y } else { Letter::X }).collect();
            let labels = (0..=len).map(|i| Label::Var(format!("u{i}"))).collect();
            let seed = CrossSeed::new(Word::new(letters), labels).unwrap();
            let r = frieze_period(&seed, false, 12).unwrap();
            let p = r.period.unwrap();
            let rows = FriezePattern::new(&seed, 12).rows();
            let vars = distinct(rows.iter().flat_map(|row| &row[..p]));
            let n = len + 1;
            assert_eq!(vars.len(), n * (n + 3) / 2, "{seed}");
        }
    }
}

#[test]
fn atilde_cluster_variables_are_positive() {
    for m in 1..=3 {
        let cv = enumerate_cluster_vars(ClusterType::ATilde(m), None, 12, Limits::default()).unwrap();
        assert!(cv.certificate.passed(), "{}", cv.certificate);
        assert_eq!(cv.vars.len(), (m + 1) * 13);
    }
}

#[test]
fn atilde_rays_agree_with_frise_division() {
    for m in 1..=4 {
        let ty = ClusterType::ATilde(m);
        let cv = enumerate_cluster_vars(ty, None, 4, Limits::default()).unwrap();
        let q = ty.default_quiver();
        let vf = frise_extend_vars(&q, 4, q.d()).unwrap();
        let mut direct: Vec<String> = Vec::new();
        for n in 0..=4 {
            for row in &vf.table {
                let s = row[n].canonical().to_string();
                if !direct.contains(&s) {
                    direct.push(s);
                }
            }
        }
        let rays: Vec<String> = cv.vars.iter().map(|x| x.to_string()).collect();
        assert_eq!(rays, direct, "Ã{m}");
    }
}

#[test]
fn kronecker_cluster_variables_follow_the_closed_form() {
    let cv = enumerate_cluster_vars(ClusterType::ATilde(1), None, 6, Limits::default()).unwrap();
    let (a, b) = (var("u1"), var("u2"));
    for (n, x) in cv.vars.iter().enumerate() {
        assert_eq!(x, &kronecker_closed_form(n, &a, &b).unwrap(), "u_{n}");
    }
}

#[test]
fn orientation_size_is_checked() {
    let q = Quiver::parse("A3").unwrap();
    let err = enumerate_cluster_vars(ClusterType::A(2), Some(&q), 0, Limits::default()).unwrap_err();
    assert_eq!(err, ClusterError::OrientationSize { got: 3, want: 2 });
}

fn seed_strategy() -> impl Strategy<Value = CrossSeed> {
    (1usize..7).prop_flat_map(|len| {
        (prop::collection::vec(any::<bool>(), len), prop::collection::vec(0u8..3, len + 1)).prop_map(|(ys, kinds)| {
            let letters = ys.into_iter().map(|y| if y { Letter::Y } else { Letter::X }).collect();
            // Kind 0 is the constant 1, otherwise a fresh variable.
            let labels = kinds.iter().enumerate().map(|(i, &k)| if k == 0 { Label::One } else { Label::Var(format!("v{i}")) }).collect();
            CrossSeed::new(Word::new(letters), labels).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fuzzed_crosses_match_the_oracle(seed in seed_strategy()) {
        agrees_with_oracle(&seed, 3);
        let t = CrossTiling::new(seed.clone());
        let grid = cross_construct(&seed, t.bounds()).unwrap();
        minors_are_one(&grid);
        let ones = cross_construct(&CrossSeed::ones(seed.word.clone()), t.bounds()).unwrap();
        prop_assert_eq!(ones_tsv(&grid), ones_tsv(&ones));
    }
}
