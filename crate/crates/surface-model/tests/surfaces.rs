use exact_algebra::{BigInt, BigRational, IntPoly, RatPoly};
use surface_model::{
    bad_primes, classify_fibers, cover_dimension, invariants, parse_descriptor, parse_poly,
    pullback, ramification_profile, shioda_tate_rho, FiberKind, PlaceOfP1, RamTarget, RationalMap,
    WeierstrassSurface,
};

fn ip(s: &str) -> IntPoly {
    parse_poly(s).unwrap().to_int_poly().expect("integral")
}

fn rp(s: &str) -> RatPoly {
    parse_poly(s).unwrap()
}

/// The base surface y^2 + (t+3) x y + y = x^3 (parameter written as s).
fn x0() -> WeierstrassSurface {
    WeierstrassSurface::new_integral(
        "x0",
        ip("s + 3"),
        IntPoly::zero(),
        IntPoly::one(),
        IntPoly::zero(),
        IntPoly::zero(),
    )
    .unwrap()
}

struct CoverSpec {
    name: &'static str,
    map_num: &'static str,
    map_den: &'static str,
    a1: &'static str,
    a3: &'static str,
    // (place poly or "inf", multiplicity)
    fibers: Vec<(&'static str, u32)>,
    refined: Vec<u64>,
    prof_zero: Vec<usize>,
    prof_inf: Vec<usize>,
    prof_pair: Vec<usize>,
}

fn covers() -> Vec<CoverSpec> {
    vec![
        CoverSpec {
            name: "case1",
            map_num: "1",
            map_den: "s^2*(s - 1)",
            a1: "3*s^3 - 3*s^2 + 1",
            a3: "s^6*(s - 1)^3",
            fibers: vec![
                ("s", 18),
                ("s - 1", 9),
                ("3*s^2 - 3*s + 1", 1),
                ("9*s^4 - 9*s^3 - 3*s^2 + 3*s + 1", 1),
                ("inf", 3),
            ],
            refined: vec![3, 7],
            prof_zero: vec![3],
            prof_inf: vec![1, 2],
            prof_pair: vec![1, 1, 1, 1, 1, 1],
        },
        CoverSpec {
            name: "case2",
            map_num: "s^2*(s - 1)",
            map_den: "1",
            a1: "s^3 - s^2 + 3",
            a3: "1",
            fibers: vec![
                ("s", 2),
                ("s - 1", 1),
                ("s^6 - 2*s^5 + s^4 + 9*s^3 - 9*s^2 + 27", 1),
                ("inf", 27),
            ],
            refined: vec![3, 61, 307],
            prof_zero: vec![1, 2],
            prof_inf: vec![3],
            prof_pair: vec![1, 1, 1, 1, 1, 1],
        },
        CoverSpec {
            name: "case3i",
            map_num: "-(4*s^3 + 6*s - 1)",
            map_den: "s",
            a1: "-4*s^3 - 3*s + 1",
            a3: "s^3",
            fibers: vec![
                ("s", 9),
                ("s^2 + s + 1", 1),
                ("4*s^2 - 2*s + 1", 2),
                ("4*s^3 + 6*s - 1", 1),
                ("inf", 18),
            ],
            refined: vec![2, 3],
            prof_zero: vec![1, 1, 1],
            prof_inf: vec![1, 2],
            prof_pair: vec![1, 1, 2, 2],
        },
        CoverSpec {
            name: "case3ii",
            map_num: "-32*s^3 - 162*s + 243",
            map_den: "54*(s - 1)",
            a1: "-32*s^3 + 81",
            a3: "157464*(s - 1)^3",
            fibers: vec![
                ("s - 1", 9),
                ("4*s^2 + 18*s + 27", 1),
                ("16*s^2 - 36*s + 27", 2),
                ("32*s^3 + 162*s - 243", 1),
                ("inf", 18),
            ],
            refined: vec![2, 3, 7],
            prof_zero: vec![1, 1, 1],
            prof_inf: vec![1, 2],
            prof_pair: vec![1, 1, 2, 2],
        },
        CoverSpec {
            name: "case4i",
            map_num: "19683*s",
            map_den: "-4*s^3 - 4374*s + 19683",
            a1: "-12*s^3 + 6561*s + 59049",
            a3: "(-4*s^3 - 4374*s + 19683)^3",
            fibers: vec![
                ("s", 1),
                ("s^2 + 27*s + 729", 1),
                ("4*s^2 - 54*s + 729", 2),
                ("4*s^3 + 4374*s - 19683", 9),
                ("inf", 2),
            ],
            refined: vec![2, 3],
            prof_zero: vec![1, 2],
            prof_inf: vec![1, 1, 1],
            prof_pair: vec![1, 1, 2, 2],
        },
        CoverSpec {
            name: "case4ii",
            map_num: "1458*(s - 1)",
            map_den: "-32*s^3 - 162*s + 243",
            a1: "-96*s^3 + 972*s - 729",
            a3: "(-32*s^3 - 162*s + 243)^3",
            fibers: vec![
                ("s - 1", 1),
                ("4*s^2 + 18*s + 27", 1),
                ("16*s^2 - 36*s + 27", 2),
                ("32*s^3 + 162*s - 243", 9),
                ("inf", 2),
            ],
            refined: vec![2, 3, 7],
            prof_zero: vec![1, 2],
            prof_inf: vec![1, 1, 1],
            prof_pair: vec![1, 1, 2, 2],
        },
    ]
}

fn fiber_multiset(s: &WeierstrassSurface) -> Vec<(String, u32, usize)> {
    let mut v: Vec<(String, u32, usize)> = classify_fibers(s)
        .unwrap()
        .into_iter()
        .map(|f| {
            let (name, deg) = match &f.place {
                PlaceOfP1::Finite(pi) => (pi.to_string_var("s"), pi.deg()),
                PlaceOfP1::Infinity => ("inf".to_string(), 1),
            };
            assert!(matches!(f.kind, FiberKind::Multiplicative { .. }));
            (name, f.m, deg)
        })
        .collect();
    v.sort();
    v
}

#[test]
fn x0_classification_and_invariants() {
    let s = x0();
    let fibers = fiber_multiset(&s);
    let mut expected = vec![
        ("s".to_string(), 1, 1),
        ("s^2 + 9*s + 27".to_string(), 1, 2),
        ("inf".to_string(), 9, 1),
    ];
    expected.sort();
    assert_eq!(fibers, expected);
    let inv = invariants(&s).unwrap();
    assert_eq!(inv.a, 1);
    assert_eq!(inv.e, 12);
    assert_eq!(inv.chi, 1);
    assert_eq!(inv.p_g, 0);
    assert_eq!(inv.ntriv_rank, 0);
    assert_eq!(shioda_tate_rho(&s, 0).unwrap(), 10);
    let bp = bad_primes(&s).unwrap();
    assert_eq!(bp.refined.iter().copied().collect::<Vec<u64>>(), vec![3]);
}

#[test]
fn pullbacks_match_closed_forms() {
    let base = x0();
    for c in covers() {
        let map = RationalMap::new(ip(c.map_num), ip(c.map_den)).unwrap();
        let cover = pullback(&base, &map, c.name).unwrap();
        assert_eq!(cover.a1, ip(c.a1), "{} a1", c.name);
        assert_eq!(cover.a3, ip(c.a3), "{} a3", c.name);
        assert!(cover.a2.is_zero() && cover.a4.is_zero() && cover.a6.is_zero());
    }
}

#[test]
fn cover_fibers_and_invariants() {
    let base = x0();
    for c in covers() {
        let map = RationalMap::new(ip(c.map_num), ip(c.map_den)).unwrap();
        let cover = pullback(&base, &map, c.name).unwrap();
        let mut expected: Vec<(String, u32, usize)> = c
            .fibers
            .iter()
            .map(|(f, m)| {
                if *f == "inf" {
                    ("inf".to_string(), *m, 1)
                } else {
                    let pi = ip(f).primitive_positive();
                    (pi.to_string_var("s"), *m, pi.deg())
                }
            })
            .collect();
        expected.sort();
        assert_eq!(fiber_multiset(&cover), expected, "{} fibers", c.name);
        let inv = invariants(&cover).unwrap();
        assert_eq!(inv.a, 3, "{}", c.name);
        assert_eq!(inv.e, 36, "{}", c.name);
        assert_eq!(inv.p_g, 2, "{}", c.name);
        assert_eq!(inv.ntriv_rank, 5, "{}", c.name);
    }
}

#[test]
fn case1_shioda_tate_consistency() {
    let base = x0();
    let map = RationalMap::new(ip("1"), ip("s^2*(s - 1)")).unwrap();
    let cover = pullback(&base, &map, "case1").unwrap();
    // rho at Mordell-Weil rank 0, plus the non-trivial rank, fills out b2.
    let rho = shioda_tate_rho(&cover, 0).unwrap();
    assert_eq!(rho, 29);
    let inv = invariants(&cover).unwrap();
    assert_eq!(rho + inv.ntriv_rank, inv.e as i64 - 2);
}

#[test]
fn refined_bad_primes_match() {
    let base = x0();
    for c in covers() {
        let map = RationalMap::new(ip(c.map_num), ip(c.map_den)).unwrap();
        let cover = pullback(&base, &map, c.name).unwrap();
        let bp = bad_primes(&cover).unwrap();
        assert_eq!(
            bp.refined.iter().copied().collect::<Vec<u64>>(),
            c.refined,
            "{} refined",
            c.name
        );
        for p in &c.refined {
            assert!(bp.candidates.contains(p));
        }
    }
}

#[test]
fn ramification_profiles_match() {
    for c in covers() {
        let map = RationalMap::new(ip(c.map_num), ip(c.map_den)).unwrap();
        let zero = ramification_profile(&map, &RamTarget::Rational(BigRational::from(BigInt::from(0)))).unwrap();
        let inf = ramification_profile(&map, &RamTarget::Infinity).unwrap();
        let pair =
            ramification_profile(&map, &RamTarget::QuadraticPair(ip("s^2 + 9*s + 27"))).unwrap();
        assert_eq!(zero, c.prof_zero, "{} over 0", c.name);
        assert_eq!(inf, c.prof_inf, "{} over inf", c.name);
        assert_eq!(pair, c.prof_pair, "{} over the pair", c.name);
        // Dimension count: 4 geometric bad points on the base, ramification
        // excess subtracted, minus 4.
        let dim = cover_dimension(
            map.degree,
            4,
            &[zero.clone(), inf.clone(), pair.clone()],
        );
        assert_eq!(dim, 5, "{} dimension", c.name);
    }
}

#[test]
fn pullback_multiplies_fiber_orders() {
    // The multiset of cover fiber orders equals, over each base bad point of
    // order n, the parts of the ramification partition each multiplied by n.
    let base = x0();
    for c in covers() {
        let map = RationalMap::new(ip(c.map_num), ip(c.map_den)).unwrap();
        let cover = pullback(&base, &map, c.name).unwrap();
        let mut got: Vec<u32> = classify_fibers(&cover)
            .unwrap()
            .iter()
            .flat_map(|f| std::iter::repeat(f.m).take(f.place.residue_degree()))
            .collect();
        got.sort_unstable();
        let mut want: Vec<u32> = Vec::new();
        for (target, n) in [
            (RamTarget::Rational(BigRational::from(BigInt::from(0))), 1u32),
            (RamTarget::Infinity, 9),
            (RamTarget::QuadraticPair(ip("s^2 + 9*s + 27")), 1),
        ] {
            for e in ramification_profile(&map, &target).unwrap() {
                want.push(e as u32 * n);
            }
        }
        want.sort_unstable();
        assert_eq!(got, want, "{}", c.name);
    }
}

#[test]
fn normalization_scales_and_descales() {
    // Scaling up by 2 must normalize back down.
    let up = WeierstrassSurface::normalize_integral_model(
        "up",
        [
            rp("2*(s + 3)"),
            RatPoly::zero(),
            rp("8"),
            RatPoly::zero(),
            RatPoly::zero(),
        ],
    )
    .unwrap();
    assert_eq!(up.a1, ip("s + 3"));
    assert_eq!(up.a3, IntPoly::one());
    assert_eq!(up.lambda, BigRational::new(BigInt::from(1), BigInt::from(2)));

    // Denominators must be cleared by the least admissible factor.
    let down = WeierstrassSurface::normalize_integral_model(
        "down",
        [
            rp("(s + 3)/2"),
            RatPoly::zero(),
            rp("1/8"),
            RatPoly::zero(),
            RatPoly::zero(),
        ],
    )
    .unwrap();
    assert_eq!(down.a1, ip("s + 3"));
    assert_eq!(down.a3, IntPoly::one());
    assert_eq!(down.lambda, BigRational::from(BigInt::from(2)));

    // The printed non-integral model normalizes with factor 54.
    let c3ii = WeierstrassSurface::normalize_integral_model(
        "case3ii",
        [
            rp("-16/27*s^3 + 3/2"),
            RatPoly::zero(),
            rp("(s - 1)^3"),
            RatPoly::zero(),
            RatPoly::zero(),
        ],
    )
    .unwrap();
    assert_eq!(c3ii.lambda, BigRational::from(BigInt::from(54)));
    assert_eq!(c3ii.a1, ip("-32*s^3 + 81"));
    assert_eq!(c3ii.a3, ip("157464*(s - 1)^3"));
}

#[test]
fn euler_identity_holds() {
    let base = x0();
    for c in covers() {
        let map = RationalMap::new(ip(c.map_num), ip(c.map_den)).unwrap();
        let cover = pullback(&base, &map, c.name).unwrap();
        // c4^3 - c6^2 = 1728 * delta
        let lhs = cover.c4.mul(&cover.c4).mul(&cover.c4).sub(&cover.c6.mul(&cover.c6));
        assert_eq!(lhs, cover.delta.scale(&BigInt::from(1728)), "{}", c.name);
    }
}

#[test]
fn descriptor_parsing() {
    let text = r#"
# a surface
name = demo
a1 = "1 + 3*s^2*(s - 1)"
a3 = "s^6*(s - 1)^3"
bad_primes = [3, 7]
expected.rank = 5
"#;
    let d = parse_descriptor(text).unwrap();
    assert_eq!(d.name, "demo");
    assert_eq!(d.expected.get("rank").map(String::as_str), Some("5"));
    assert_eq!(d.bad_primes, Some(vec![3, 7]));
    let s = d.into_surface().unwrap();
    assert_eq!(s.a1, ip("3*s^3 - 3*s^2 + 1"));
    assert_eq!(s.declared_bad_primes, Some(vec![3, 7]));

    // Implicit multiplication is rejected.
    assert!(parse_poly("3s").is_err());
    assert!(parse_poly("3*(s + 1)(s + 2)").is_err());
    assert!(parse_poly("s^2*(s - 1)").is_ok());
}
