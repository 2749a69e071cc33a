use exact_algebra::{BigRational, RatPoly};
use irreducibility::{
    algorithm_1, certify, charpoly_decompose, enumerate_quadratic_fields, field_scan,
    has_root_of_unity_root, inert_scan, pair_product_quartic, Conclusion, IrrError,
    PinnedWitnesses, QuadraticField,
};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

type Table = BTreeMap<u64, Option<RatPoly>>;

fn rp(coeffs: &[(i64, i64)]) -> RatPoly {
    RatPoly::from_ratios(coeffs)
}

/// Degree-5 Frobenius polynomials, ascending coefficients; None = bad prime.
fn case1_table() -> Table {
    BTreeMap::from([
        (2, Some(rp(&[(-1, 1), (1, 2), (-3, 4), (3, 4), (-1, 2), (1, 1)]))),
        (3, None),
        (5, Some(rp(&[(-1, 1), (-4, 5), (-22, 25), (22, 25), (4, 5), (1, 1)]))),
        (7, None),
        (11, Some(rp(&[(-1, 1), (-14, 11), (-42, 121), (42, 121), (14, 11), (1, 1)]))),
        (13, Some(rp(&[(-1, 1), (6, 13), (4, 169), (-4, 169), (-6, 13), (1, 1)]))),
    ])
}

fn case2_table() -> Table {
    BTreeMap::from([
        (2, Some(rp(&[(-1, 1), (1, 2), (-3, 4), (3, 4), (-1, 2), (1, 1)]))),
        (3, None),
        (5, Some(rp(&[(-1, 1), (-4, 5), (2, 25), (-2, 25), (4, 5), (1, 1)]))),
        (7, Some(rp(&[(-1, 1), (0, 1), (22, 49), (-22, 49), (0, 1), (1, 1)]))),
        (11, Some(rp(&[(-1, 1), (1, 1), (-58, 121), (58, 121), (-1, 1), (1, 1)]))),
        (13, Some(rp(&[(-1, 1), (6, 13), (4, 169), (-4, 169), (-6, 13), (1, 1)]))),
    ])
}

fn case3i_table() -> Table {
    BTreeMap::from([
        (2, None),
        (3, None),
        (5, Some(rp(&[(-1, 1), (-4, 5), (1, 5), (-1, 5), (4, 5), (1, 1)]))),
        (7, Some(rp(&[(-1, 1), (-4, 7), (5, 49), (-5, 49), (4, 7), (1, 1)]))),
        (11, Some(rp(&[(-1, 1), (2, 11), (13, 11), (-13, 11), (-2, 11), (1, 1)]))),
        (13, Some(rp(&[(-1, 1), (-19, 13), (-142, 169), (142, 169), (19, 13), (1, 1)]))),
    ])
}

fn case3ii_table() -> Table {
    BTreeMap::from([
        (2, None),
        (3, None),
        (5, Some(rp(&[(-1, 1), (1, 5), (2, 25), (-2, 25), (-1, 5), (1, 1)]))),
        (7, None),
        (11, Some(rp(&[(-1, 1), (-2, 11), (-19, 121), (19, 121), (2, 11), (1, 1)]))),
        (13, Some(rp(&[(-1, 1), (-1, 13), (56, 169), (-56, 169), (1, 13), (1, 1)]))),
        (17, Some(rp(&[(-1, 1), (11, 17), (404, 289), (-404, 289), (-11, 17), (1, 1)]))),
    ])
}

fn set(ps: &[u64]) -> BTreeSet<u64> {
    ps.iter().copied().collect()
}

#[test]
fn decompose_fixtures() {
    let t = case1_table();
    let q5 = t[&5].clone().unwrap();
    let (s1, e) = charpoly_decompose(&q5).unwrap();
    assert_eq!(s1, BigRational::new((-9).into(), 5.into()));
    assert_eq!(e, BigRational::new(17.into(), 25.into()));

    let split = RatPoly::from_i64(&[-1, 1]).pow(5);
    let (s1, e) = charpoly_decompose(&split).unwrap();
    assert_eq!(s1, BigRational::from_integer(4.into()));
    assert_eq!(e, BigRational::from_integer(4.into()));

    // Q_2 of the first table decomposes by exact division.
    let q2 = t[&2].clone().unwrap();
    let (s1, e) = charpoly_decompose(&q2).unwrap();
    let quartic = RatPoly::new(vec![
        BigRational::from_integer(1.into()),
        -s1.clone(),
        e + BigRational::from_integer(2.into()),
        -s1,
        BigRational::from_integer(1.into()),
    ]);
    assert_eq!(RatPoly::from_i64(&[-1, 1]).mul(&quartic), q2);

    // X = 1 not a root, or non-palindromic cofactor: rejected.
    assert!(matches!(
        charpoly_decompose(&RatPoly::from_i64(&[1, 0, 0, 0, 0, 1])),
        Err(IrrError::InputError(_))
    ));
    // (X - 1)(X^4 + 2X^3 + 1): cofactor not palindromic.
    assert!(matches!(
        charpoly_decompose(&RatPoly::from_i64(&[-1, 1, 0, -2, 1, 1])),
        Err(IrrError::InputError(_))
    ));
}

#[test]
fn pair_product_fixtures() {
    let s1 = BigRational::new((-9).into(), 5.into());
    let e = BigRational::new(17.into(), 25.into());
    let w = pair_product_quartic(&s1, &e);
    assert_eq!(
        w,
        rp(&[(1, 1), (-17, 25), (-3, 25), (-17, 25), (1, 1)])
    );

    // All eigenvalues 1: W = (X - 1)^4.
    let four = BigRational::from_integer(4.into());
    let w = pair_product_quartic(&four, &four);
    assert_eq!(w, RatPoly::from_i64(&[-1, 1]).pow(4));

    // W is always palindromic with W(0) = 1.
    for (s1n, en) in [(3i64, -2i64), (0, 7), (-5, 5)] {
        let w = pair_product_quartic(
            &BigRational::from_integer(s1n.into()),
            &BigRational::from_integer(en.into()),
        );
        let c: Vec<_> = w.coeffs().to_vec();
        assert_eq!(c[0], c[4]);
        assert_eq!(c[1], c[3]);
        assert_eq!(c[0], BigRational::from_integer(1.into()));
    }
}

#[test]
fn root_of_unity_detection() {
    let s1 = BigRational::new((-9).into(), 5.into());
    let e = BigRational::new(17.into(), 25.into());
    assert!(!has_root_of_unity_root(&pair_product_quartic(&s1, &e)));
    assert!(has_root_of_unity_root(&RatPoly::from_i64(&[-1, 1]).pow(4)));
    // Phi_5 itself.
    assert!(has_root_of_unity_root(&RatPoly::from_i64(&[1, 1, 1, 1, 1])));
}

#[test]
fn algorithm_1_fixtures() {
    // Least break is p = 2 for the first two tables, p = 5 for the others;
    // the pinned break prime 5 verifies everywhere.
    let cases: Vec<(Table, Vec<u64>, u64, u64)> = vec![
        (case1_table(), vec![3, 7], 13, 2),
        (case2_table(), vec![3, 61, 307], 13, 2),
        (case3i_table(), vec![2, 3], 13, 5),
        (case3ii_table(), vec![2, 3, 7], 17, 5),
    ];
    for (mut table, s, bound, least) in cases {
        let s = set(&s);
        let out = algorithm_1(&mut table, &s, bound, Some(5)).unwrap();
        assert!(out.terminated);
        assert_eq!(out.least, Some(least));
        assert_eq!(out.witness, Some(5));
    }

    // A stream of (X - 1)^5 never terminates.
    let mut flat: Table = [2u64, 3, 5, 7, 11, 13]
        .into_iter()
        .map(|p| (p, Some(RatPoly::from_i64(&[-1, 1]).pow(5))))
        .collect();
    let out = algorithm_1(&mut flat, &set(&[]), 13, None).unwrap();
    assert!(!out.terminated && out.witness.is_none());
}

#[test]
fn quadratic_field_enumeration_matches_the_nine_lists() {
    let ms = |fs: &[QuadraticField]| fs.iter().map(|f| f.m).collect::<Vec<_>>();
    assert_eq!(ms(&enumerate_quadratic_fields(&set(&[3, 7]), true)), vec![21]);
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[3, 7]), false)),
        vec![-3, -7]
    );
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[3, 61, 307]), true)),
        vec![61, 921, 56181]
    );
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[3, 61, 307]), false)),
        vec![-3, -183, -307, -18727]
    );
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[2, 3]), true)),
        vec![2, 3, 6]
    );
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[2, 3]), false)),
        vec![-1, -2, -3, -6]
    );
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[2, 3, 7]), true)),
        vec![2, 3, 6, 7, 14, 21, 42]
    );
    assert_eq!(
        ms(&enumerate_quadratic_fields(&set(&[2, 3, 7]), false)),
        vec![-1, -2, -3, -6, -7, -14, -21, -42]
    );
    // Discriminants are 0 or 1 mod 4 and supported inside S.
    for s in [set(&[3, 7]), set(&[3, 61, 307]), set(&[2, 3]), set(&[2, 3, 7])] {
        for real in [true, false] {
            for f in enumerate_quadratic_fields(&s, real) {
                assert!(f.disc.rem_euclid(4) <= 1);
                let mut n = f.disc.unsigned_abs();
                for &p in &s {
                    while n % p == 0 {
                        n /= p;
                    }
                }
                assert!(n == 1 || (n == 4 && s.contains(&2)), "disc {} vs S", f.disc);
            }
        }
    }
}

#[test]
fn inert_scan_fixtures() {
    let mut t = case1_table();
    let s = set(&[3, 7]);
    let f21 = QuadraticField::new(21).unwrap();
    let fm3 = QuadraticField::new(-3).unwrap();
    let fm7 = QuadraticField::new(-7).unwrap();
    // Least witnesses; 11 also qualifies for sqrt(21) since Q_11(-1) != 0.
    assert_eq!(inert_scan(&f21, &s, &mut t, 13).unwrap(), Some(2));
    assert_eq!(inert_scan(&fm3, &s, &mut t, 13).unwrap(), Some(2));
    assert_eq!(inert_scan(&fm7, &s, &mut t, 13).unwrap(), Some(5));
    let q11 = t[&11].clone().unwrap();
    assert_eq!(
        q11.eval(&-BigRational::from_integer(1.into())),
        BigRational::new((-18).into(), 121.into())
    );
    assert!(f21.is_inert(11));
}

#[test]
fn inert_scan_keys_only_on_minus_one_value() {
    // If Q_2 and Q_5 are replaced by polynomials divisible by (X+1)^2, the
    // scan for sqrt(-3) must skip to the next inert prime, p = 11.
    let mut t = case1_table();
    let double = RatPoly::from_i64(&[-1, 1]).mul(&RatPoly::from_i64(&[1, 1]).pow(4));
    assert!(double.eval(&-BigRational::from_integer(1.into())).is_zero());
    t.insert(2, Some(double.clone()));
    t.insert(5, Some(double));
    let s = set(&[3, 7]);
    let fm3 = QuadraticField::new(-3).unwrap();
    assert_eq!(inert_scan(&fm3, &s, &mut t, 13).unwrap(), Some(11));
    // A table where every scanned value vanishes yields no witness.
    assert_eq!(inert_scan(&fm3, &s, &mut t, 5).unwrap(), None);
}

#[test]
fn pinned_witnesses_reported_with_least_alongside() {
    let mut t = case1_table();
    let s = set(&[3, 7]);
    let fields = enumerate_quadratic_fields(&s, true);
    let out = field_scan(2, &fields, &s, &mut t, 13, &|m| (m == 21).then_some(11)).unwrap();
    assert!(out.terminated);
    assert_eq!(out.fields[0].pinned, Some(11));
    assert_eq!(out.fields[0].pinned_valid, Some(true));
    assert_eq!(out.fields[0].witness, Some(11));
    assert_eq!(out.fields[0].least, Some(2));
}

#[test]
fn algorithm_1_monotone_in_bound() {
    let s = set(&[3, 7]);
    let small = algorithm_1(&mut case1_table(), &s, 2, None).unwrap();
    let large = algorithm_1(&mut case1_table(), &s, 13, None).unwrap();
    assert!(small.terminated);
    assert!(large.terminated);
    assert_eq!(small.least, large.least);
}

#[test]
fn certify_terminating_case() {
    let mut t = case1_table();
    let s = set(&[3, 7]);
    let pins = PinnedWitnesses {
        alg1: Some(5),
        real: BTreeMap::from([(21, 11)]),
        imaginary: BTreeMap::from([(-3, 5), (-7, 5)]),
    };
    let cert = certify("case1", &mut t, &s, "pinned", 13, Some(&pins)).unwrap();
    assert_eq!(cert.conclusion, Conclusion::LieIrreducibleSo5);
    assert_eq!(cert.alg1.witness, Some(5));
    assert_eq!(cert.alg1.least, Some(2));
    let w2: Vec<_> = cert.alg2.fields.iter().map(|f| (f.m, f.witness)).collect();
    assert_eq!(w2, vec![(21, Some(11))]);
    let w3: Vec<_> = cert.alg3.fields.iter().map(|f| (f.m, f.witness)).collect();
    assert_eq!(w3, vec![(-3, Some(5)), (-7, Some(5))]);
}

#[test]
fn certify_inconclusive_when_a_field_has_no_witness() {
    // The third table has (X+1)^2 | Q_p at every inert prime of Q(sqrt(-3))
    // within the bound, so algorithm 3 cannot terminate.
    let mut t = case3i_table();
    let s = set(&[2, 3]);
    let pins = PinnedWitnesses {
        alg1: Some(5),
        real: BTreeMap::from([(2, 5), (3, 5), (6, 13)]),
        imaginary: BTreeMap::from([(-1, 11), (-2, 5), (-3, 5), (-6, 13)]),
    };
    let cert = certify("case3i", &mut t, &s, "pinned", 13, Some(&pins)).unwrap();
    assert_eq!(cert.conclusion, Conclusion::InconclusiveUpToBound);
    assert!(cert.alg1.terminated && cert.alg2.terminated && !cert.alg3.terminated);
    // The pinned witnesses 2 -> 5, 3 -> 5 fail verification: Q_5(-1) = 0.
    let by_m = |out: &irreducibility::AlgorithmOutcome, m: i64| {
        out.fields.iter().find(|f| f.m == m).unwrap().clone()
    };
    for m in [2i64, 3] {
        let f = by_m(&cert.alg2, m);
        assert_eq!(f.pinned_valid, Some(false));
        assert!(f.witness.is_some()); // the least-scan witness still exists
    }
    assert_eq!(by_m(&cert.alg2, 6).pinned_valid, Some(true));
    assert_eq!(by_m(&cert.alg3, -6).pinned_valid, Some(true));
    assert_eq!(by_m(&cert.alg3, -3).witness, None);
    assert_eq!(by_m(&cert.alg3, -1).pinned_valid, Some(false));
}

#[test]
fn certify_missing_data_errors() {
    let mut empty: Table = BTreeMap::new();
    let s = set(&[3, 7]);
    assert!(matches!(
        certify("case1", &mut empty, &s, "computed", 13, None),
        Err(IrrError::MissingCharPoly(2))
    ));
}

#[test]
fn case2_and_case3ii_witness_bullets() {
    // Second table: sqrt(61), sqrt(56181) -> 2; sqrt(921) -> 11;
    // sqrt(-3), sqrt(-307) -> 2; sqrt(-183), sqrt(-18727) -> 5.
    let mut t = case2_table();
    let s = set(&[3, 61, 307]);
    for (m, p) in [(61i64, 2u64), (56181, 2), (921, 11), (-3, 2), (-307, 2), (-183, 5), (-18727, 5)] {
        let f = QuadraticField::new(m).unwrap();
        assert!(f.is_inert(p), "m = {m}, p = {p}");
        let q = t[&p].clone().unwrap();
        assert!(!q.eval(&-BigRational::from_integer(1.into())).is_zero());
        // The scan reproduces the bullet when it is the least witness.
        let least = inert_scan(&f, &s, &mut t, 13).unwrap().unwrap();
        assert!(least <= p);
    }

    // Fourth table: sqrt(2), sqrt(3), sqrt(7), sqrt(42), and the imaginary
    // counterparts -> 5; sqrt(+-6), sqrt(+-21) -> 13; sqrt(+-14) -> 17;
    // sqrt(-1) -> 11.
    let mut t = case3ii_table();
    let s = set(&[2, 3, 7]);
    let pins: Vec<(i64, u64)> = vec![
        (2, 5), (3, 5), (7, 5), (42, 5), (6, 13), (21, 13), (14, 17),
        (-2, 5), (-3, 5), (-7, 5), (-42, 5), (-1, 11), (-6, 13), (-21, 13), (-14, 17),
    ];
    for (m, p) in pins {
        let f = QuadraticField::new(m).unwrap();
        assert!(f.is_inert(p), "m = {m}, p = {p}");
        let q = t[&p].clone().unwrap();
        assert!(
            !q.eval(&-BigRational::from_integer(1.into())).is_zero(),
            "m = {m}, p = {p}"
        );
        assert!(inert_scan(&f, &s, &mut t, 17).unwrap().is_some());
    }
}
