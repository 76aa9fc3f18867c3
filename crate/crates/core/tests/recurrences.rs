use frises::diagrams::{catalog, DiagramClass, Quiver};
use frises::frises::frise_extend;
use frises::recurrences::*;
use frises::tilings::{Embedding, Frontier};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn embed(text: &str) -> Embedding {
    Embedding::new(Frontier::parse(text).unwrap())
}

fn small(values: &[BigUint]) -> Vec<u64> {
    values.iter().map(|x| x.try_into().unwrap()).collect()
}

#[test]
fn verify_examples() {
    let s = naturals(&[1, 1, 2, 5, 13, 34]);
    assert!(verify_recurrence(&s, &LinearRecurrence::from_integers(&[3, -1])));
    assert!(!verify_recurrence(&s, &LinearRecurrence::from_integers(&[2, 1])));
    assert!(!verify_recurrence(&s[..2], &LinearRecurrence::from_integers(&[3, -1, 0])));
}

#[test]
fn minimality_is_certified_independently() {
    let s = naturals(&[1, 1, 2, 5, 13, 34, 89, 233, 610, 1597]);
    let q = to_rationals(&s);
    let rec = find_min_recurrence(&s, 3).unwrap().unwrap();
    assert_eq!(rec.order(), 2);
    assert!(is_minimal(&q, &rec));
    assert!(order_fits(&q, 2) && order_fits(&q, 3));
    assert!(!order_fits(&q, 1));
}

#[test]
fn json_and_text() {
    let rec = LinearRecurrence::from_integers(&[3, -1]);
    assert_eq!(rec.to_json().to_string(), r#"{"coeffs":[["3","1"],["-1","1"]],"order":2}"#);
}

#[test]
fn ultimately_recurrent_sequences() {
    // Any order-3 recurrence forces u[3] = 0; u[n+4] = u[n+3] fits.
    let s = naturals(&[0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
    let rec = find_min_recurrence(&s, 5).unwrap().unwrap();
    assert!(verify_recurrence(&s, &rec));
    assert_eq!(rec.order(), 4);
    assert!(is_minimal(&to_rationals(&s), &rec));
}

#[test]
fn kronecker_style_diagonal_witness() {
    let e = embed("[xy]* [xy]*");
    let w = nrational_witness(&e, (1, -1), (1, -1)).unwrap();
    assert!(w.validate(&e, 16).passed());
    let ray = e.ray_values((1, -1), (1, -1), 8).unwrap();
    let rec = find_min_recurrence(&ray.values, 2).unwrap().unwrap();
    assert!(verify_recurrence(&ray.values, &rec));
}

#[test]
fn atilde3_witnesses() {
    let e = embed("[xxxy]* [xxxy]*");
    let ray = e.ray_values((-5, -2), (3, 0), 4).unwrap();
    assert_eq!(small(&ray.values), vec![1, 2, 9, 43]);
    for (origin, dir) in [((-5, -2), (3, 0)), ((0, 0), (1, -1)), ((1, 0), (1, -1)), ((2, 0), (0, -1)), ((-3, 2), (-1, 1)), ((-20, 3), (5, -2))] {
        let w = nrational_witness(&e, origin, dir).unwrap();
        let r = w.validate(&e, 20);
        assert!(r.passed(), "{origin:?} {dir:?}: {r}");
    }
}

#[test]
fn horizontal_rays_are_single_power() {
    let e = embed("[xxy]* yx [xyy]*");
    let w = nrational_witness(&e, (-2, -1), (1, 0)).unwrap();
    assert!(w.residues.iter().all(|r| r.u_prime.is_empty()));
    assert!(w.validate(&e, 20).passed());
}

#[test]
fn north_west_rays_mirror() {
    let e = embed("[xxy]* yx [xyy]*");
    let w = nrational_witness(&e, (0, 1), (-2, 1)).unwrap();
    assert!(w.mirrored);
    assert!(w.validate(&e, 20).passed());
}

#[test]
fn bad_direction() {
    let e = embed("[xy]* [xy]*");
    assert!(nrational_witness(&e, (0, 0), (1, 1)).is_err());
    assert!(nrational_witness(&e, (0, 0), (0, 0)).is_err());
}

#[test]
fn two_power_form_converts_to_single_power() {
    let e = embed("[xxxy]* x [xyy]*");
    let w = nrational_witness(&e, (1, -1), (1, -2)).unwrap();
    let ray = e.ray_values((1, -1), (1, -2), 40).unwrap();
    for (i, r) in w.residues.iter().enumerate() {
        let sp = r.single_power();
        assert_eq!(sp.m.rows, 4);
        for (k, value) in sp.values(6).into_iter().enumerate() {
            assert_eq!(value, r.value(k as u64));
            let n = w.base + i + k * w.q;
            if n < ray.values.len() {
                assert_eq!(value, ray.values[n]);
            }
        }
    }
}

#[test]
fn hadamard_examples() {
    let geo = |r: u64| SinglePower { lambda: naturals(&[1]), m: NatMatrix::from_rows(vec![vec![r]]), gamma: naturals(&[1]) };
    let six = tensor_hadamard(&geo(2), &geo(3));
    assert_eq!(small(&six.values(11)), (0..11).map(|n| 6u64.pow(n)).collect::<Vec<_>>());
    let linear = SinglePower {
        lambda: naturals(&[1, 0]),
        m: NatMatrix::from_rows(vec![vec![1, 1], vec![0, 1]]),
        gamma: naturals(&[1, 1]),
    };
    assert_eq!(small(&linear.values(4)), vec![1, 2, 3, 4]);
    let square = tensor_hadamard(&linear, &linear);
    assert_eq!(small(&square.values(11)), (1..=11).map(|n| n * n).collect::<Vec<_>>());
    assert_eq!(square.value(10), BigUint::from(121u32));
}

#[test]
fn hadamard_of_ray_witnesses() {
    let e = embed("[xxxy]* [xxxy]*");
    let a = nrational_witness(&e, (0, 0), (1, -1)).unwrap();
    let b = nrational_witness(&e, (2, 0), (1, -1)).unwrap();
    let (ra, rb) = (&a.residues[0], &b.residues[0]);
    let prod = tensor_hadamard(&ra.single_power(), &rb.single_power());
    for k in 0..6 {
        assert_eq!(prod.value(k), ra.value(k) * rb.value(k));
    }
}

#[test]
fn dynkin_frises_fit_recurrences() {
    for d in 1..=6 {
        for (class, c) in catalog(d) {
            if !matches!(class, DiagramClass::Dynkin(..)) {
                continue;
            }
            let q = Quiver::increasing(c);
            let fr = frise_extend(&q, 80).unwrap();
            for j in 0..q.d() {
                let rec = find_min_recurrence(fr.sequence(j), 36).unwrap();
                let rec = rec.unwrap_or_else(|| panic!("{class}: vertex {j}"));
                assert!(verify_recurrence(fr.sequence(j), &rec));
            }
        }
    }
}

fn recurrence_and_seed() -> impl Strategy<Value = (Vec<i64>, Vec<u64>)> {
    (1usize..4).prop_flat_map(|k| (prop::collection::vec(-3i64..4, k), prop::collection::vec(0u64..6, k)))
}

proptest! {
    #[test]
    fn bm_is_sound_and_minimal((coeffs, seed) in recurrence_and_seed()) {
        let rec = LinearRecurrence::from_integers(&coeffs);
        let mut s: Vec<BigRational> = seed.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        while s.len() < 2 * 4 + GUARD + 2 {
            let k = rec.order();
            let next = rec.next(&s[s.len() - k..]);
            s.push(next);
        }
        let found = find_min_recurrence_rational(&s, 4).unwrap().unwrap();
        prop_assert!(verify_rational(&s, &found));
        prop_assert!(found.order() <= rec.order() || found.order() == 1);
        prop_assert!(found.order() == 1 || is_minimal(&s, &found));
    }
}
