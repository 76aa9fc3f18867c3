use frises::tilings::{
    periodic_frontier, pythagorean_triple, square_frontier, verify_quadratic_lemma,
    verify_square_lemma, Embedding, Frontier, Location, Rect,
};
use frises::word::Word;
use num_bigint::BigUint;

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Printed rows as (display row, first display column, values).
type Transcript = &'static [(i64, i64, &'static [u64])];

const SQUARE_TILING: Transcript = &[
    (0, 10, &[1, 1, 1, 1]),
    (1, 9, &[1, 1, 2, 3, 4]),
    (2, 9, &[1, 2, 5, 8, 11]),
    (3, 9, &[1, 3, 8, 13, 18]),
    (4, 8, &[1, 1, 4, 11, 18, 25]),
    (5, 8, &[1, 2, 9, 25, 41, 57]),
    (6, 8, &[1, 3, 14, 39, 64, 89]),
    (7, 3, &[1, 1, 1, 1, 1, 1, 4, 19, 53, 87, 121]),
    (8, 0, &[1, 1, 1, 1, 2, 3, 4, 5, 6, 25, 119, 332, 545, 758]),
    (9, 0, &[1, 2, 3, 4, 9, 14, 19, 24, 29, 121, 576, 1607, 2638, 3669]),
];

const LEMMA_TILING: Transcript = &[
    (0, 9, &[1, 1]),
    (1, 9, &[1, 2]),
    (2, 9, &[1, 3]),
    (3, 8, &[1, 1, 4]),
    (4, 8, &[1, 2, 9]),
    (5, 8, &[1, 3, 14]),
    (6, 7, &[1, 1, 4, 19]),
    (7, 5, &[1, 1, 1, 2, 9, 43]),
    (8, 2, &[1, 1, 1, 1, 2, 3, 7, 32, 153]),
    (9, 1, &[1, 1, 2, 3, 4, 9, 14, 33, 151, 722]),
    (10, 1, &[1, 2, 5, 8, 11, 25, 39]),
    (11, 0, &[1, 1, 3, 8]),
];

fn square_example() -> Embedding {
    square_frontier(&w("xyxxxyyyyyxyyyx"), &w("xy"), 0).unwrap().embedding
}

fn check_transcript(e: &Embedding, rows: Transcript, to_point: impl Fn(i64, i64) -> (i64, i64)) {
    for &(r, c0, values) in rows {
        for (k, &val) in values.iter().enumerate() {
            let p = to_point(r, c0 + k as i64);
            assert_eq!(e.tile_value(p), big(val), "display row {r}, column {}", c0 + k as i64);
        }
    }
}

#[test]
fn square_tiling_is_reproduced() {
    check_transcript(&square_example(), SQUARE_TILING, |r, c| (c, 9 - r));
}

#[test]
fn lemma_tiling_is_reproduced() {
    let lf = periodic_frontier(&w("xyxx"), 1, 0).unwrap();
    check_transcript(&lf.embedding, LEMMA_TILING, |r, c| (c - 2, 8 - r));
    assert_eq!(lf.p, vec![(2, 0), (3, 0), (3, 1), (4, 1), (5, 1)]);
    assert_eq!((lf.i, lf.i_prime, lf.j_prime, lf.k_prime), ((6, 2), (1, 0), (2, 0), (3, 0)));
    let e = &lf.embedding;
    assert_eq!(e.tile_value(lf.k), big(7));
    assert_eq!(lf.j_ray(3), vec![big(2), big(32), big(722)]);
    assert_eq!(lf.i_ray(4), vec![big(1), big(4), big(19), big(53)]);
}

#[test]
fn words_of_points() {
    let e = Embedding::new(Frontier::parse("[xy]* yyyxxyx [xy]*").unwrap());
    assert_eq!(e.word_of_point((3, 0)).unwrap().letters, w("yyyxxyx"));
    let corner = Embedding::new(Frontier::parse("[xy]* yx [xy]*").unwrap());
    let pw = corner.word_of_point((1, 0)).unwrap();
    assert_eq!(pw.letters, w("yx"));
    assert_eq!(corner.tile_value((1, 0)), big(2));
    let e = Embedding::new(Frontier::parse("[xy]* yyxyyyx [xy]*").unwrap());
    assert_eq!(e.word_of_point((2, 0)).unwrap().letters, w("yyxyyyx"));
    assert_eq!(e.tile_value((2, 0)), big(14));
    assert!(e.word_of_point((0, 0)).is_err());
    assert!(e.word_of_point((-1, 1)).is_err());
}

#[test]
fn locations_partition_the_plane() {
    let f = Frontier::parse("[xxy]* yxyyx [xyyy]*").unwrap();
    for u in -12..12 {
        for v in -12..12 {
            match f.locate((u, v)) {
                Location::On(i) => assert_eq!(f.vertex(i), (u, v)),
                Location::Below(a, b) | Location::Above(a, b) => assert!(a < b),
            }
        }
    }
}

#[test]
fn brute_fill_matches_formula_on_examples() {
    let e = square_example();
    let region = Rect::new(0, -4, 13, 9);
    let oracle = e.brute_fill(region).unwrap();
    assert_eq!(oracle, e.grid(region));
    assert!(oracle.is_sl2());
    let lf = periodic_frontier(&w("xyxx"), 1, 0).unwrap();
    let region = Rect::new(-3, -4, 9, 9);
    assert_eq!(lf.embedding.brute_fill(region).unwrap(), lf.embedding.grid(region));
}

#[test]
fn brute_fill_on_frontier_cells_only() {
    let e = Embedding::new(Frontier::parse("[xy]* [xy]*").unwrap());
    let g = e.brute_fill(Rect::new(0, 0, 0, 0)).unwrap();
    assert_eq!(g.get((0, 0)), &big(1));
    let g = e.brute_fill(Rect::new(0, 0, 1, 1)).unwrap();
    assert_eq!(g.get((1, 1)), &big(1));
    assert_eq!(g.get((1, 0)), &big(1));
    assert!(e.ray_values((1, 0), (1, 1), 3).is_err());
}

#[test]
fn atilde_rays() {
    let e = Embedding::new(Frontier::parse("[xxxy]* [xxxy]*").unwrap());
    let ray = |o, d, n| e.ray_values(o, d, n).unwrap().values;
    // Diagonals of the displayed Ã₃ tiling.
    assert_eq!(ray((0, 0), (1, -1), 3), [1u64, 2, 14].map(big).to_vec());
    assert_eq!(ray((1, 0), (1, -1), 3), [1u64, 3, 19].map(big).to_vec());
    assert_eq!(ray((2, 0), (1, -1), 3), [1u64, 4, 43].map(big).to_vec());
    assert_eq!(ray((3, 0), (1, -1), 3), [1u64, 9, 67].map(big).to_vec());
    // Every third entry of its bottom row.
    assert_eq!(ray((-5, -2), (3, 0), 4), [1u64, 2, 9, 43].map(big).to_vec());
    assert_eq!(ray((-4, -2), (3, 0), 4), [1u64, 3, 14, 67].map(big).to_vec());
}

#[test]
fn square_identities_and_triples() {
    let sq = square_frontier(&w("xyxxxyyyyyxyyyx"), &w("xy"), 0).unwrap();
    let r = verify_square_lemma(&sq, 20);
    assert!(r.passed(), "{r}");
    let i: Vec<BigUint> = sq.i_ray(5);
    assert_eq!(i, [1u64, 2, 5, 8, 11].map(big).to_vec());
    assert_eq!(sq.j_ray(5), [1u64, 4, 25, 64, 121].map(big).to_vec());
    assert_eq!(sq.k_ray(4), [1u64, 9, 39, 87].map(big).to_vec());
    assert_eq!(pythagorean_triple(&sq, 0), (big(5), big(3), big(4)));
    assert_eq!(pythagorean_triple(&sq, 1), (big(29), big(21), big(20)));
    for h in 0..3 {
        for period in ["xy", "xxy", "xyy"] {
            let sq = square_frontier(&w("xyx"), &w(period), h).unwrap();
            assert!(verify_square_lemma(&sq, 12).passed());
            for n in 0..4 {
                pythagorean_triple(&sq, n);
            }
        }
    }
}

#[test]
fn quadratic_relations_on_the_illustration() {
    let lf = periodic_frontier(&w("xyxx"), 1, 0).unwrap();
    let r = verify_quadratic_lemma(&lf, 6);
    assert!(r.passed(), "{r}");
    // With w empty and h = h' = 0 the left period is xxxx.
    assert!(periodic_frontier(&w(""), 0, 0).is_err());
    for (word, h) in [("", 1), ("x", 0), ("y", 0)] {
        let lf = periodic_frontier(&w(word), h, 0).unwrap();
        let r = verify_quadratic_lemma(&lf, 5);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn frontier_grammar() {
    let f = Frontier::parse("[xxxy]* yxy [xyyy]*").unwrap();
    assert_eq!(f.to_string(), "[xxxy]* yxy [xyyy]*");
    assert_eq!(Frontier::parse(&f.to_string()).unwrap(), f);
    assert!(Frontier::parse("[xxx]* y [xy]*").is_err());
    assert!(Frontier::parse("xy").is_err());
    assert_eq!(Frontier::parse("[xxxy]* [xxxy]*").unwrap().center().len(), 0);
}
