use exact_algebra::IntPoly;
use irreducibility::PinnedWitnesses;
use std::collections::BTreeMap;
use surface_model::{parse_poly, RationalMap, WeierstrassSurface};

use crate::{CliError, Result};

/// A pinned surface: its integral model, bad-prime set, cover map down to the
/// base surface, expected characteristic-polynomial table, expected witness
/// primes, and expected ramification profiles of the cover map.
pub struct RegistryEntry {
    pub id: &'static str,
    pub surface: WeierstrassSurface,
    pub s: Vec<u64>,
    /// Cover map t = P(s)/Q(s) to the base surface (None for the base).
    pub map: Option<RationalMap>,
    /// Expected rows by prime: None marks a bad prime, Some gives the six
    /// ascending coefficients of Q_p as (numerator, denominator).
    pub table: Vec<(u64, Option<Vec<(i64, i64)>>)>,
    pub pinned: PinnedWitnesses,
    /// Ramification partitions over t = 0, t = infinity, and the quadratic
    /// pair t^2 + 9t + 27 (for covers only).
    pub profiles: Option<[Vec<usize>; 3]>,
}

pub const SURFACE_IDS: [&str; 7] =
    ["x0", "case1", "case2", "case3i", "case3ii", "case4i", "case4ii"];

fn ip(s: &str) -> IntPoly {
    parse_poly(s).unwrap().to_int_poly().expect("integral")
}

fn surface(name: &str, a1: &str, a3: &str) -> WeierstrassSurface {
    WeierstrassSurface::new_integral(
        name,
        ip(a1),
        IntPoly::zero(),
        ip(a3),
        IntPoly::zero(),
        IntPoly::zero(),
    )
    .unwrap()
}

/// The base surface y^2 + (t+3) x y + y = x^3 (rank 0, e = 12).
pub fn x0_surface() -> WeierstrassSurface {
    surface("x0", "s + 3", "1")
}

fn pins(
    alg1: u64,
    real: &[(i64, u64)],
    imaginary: &[(i64, u64)],
) -> PinnedWitnesses {
    PinnedWitnesses {
        alg1: Some(alg1),
        real: real.iter().copied().collect::<BTreeMap<_, _>>(),
        imaginary: imaginary.iter().copied().collect::<BTreeMap<_, _>>(),
    }
}

type Row = (u64, Option<Vec<(i64, i64)>>);

fn row(p: u64, coeffs: &[(i64, i64); 6]) -> Row {
    (p, Some(coeffs.to_vec()))
}

fn bad(p: u64) -> Row {
    (p, None)
}

fn table_a() -> Vec<Row> {
    vec![
        row(2, &[(-1, 1), (1, 2), (-3, 4), (3, 4), (-1, 2), (1, 1)]),
        bad(3),
        row(5, &[(-1, 1), (-4, 5), (-22, 25), (22, 25), (4, 5), (1, 1)]),
        bad(7),
        row(11, &[(-1, 1), (-14, 11), (-42, 121), (42, 121), (14, 11), (1, 1)]),
        row(13, &[(-1, 1), (6, 13), (4, 169), (-4, 169), (-6, 13), (1, 1)]),
    ]
}

fn table_b() -> Vec<Row> {
    vec![
        row(2, &[(-1, 1), (1, 2), (-3, 4), (3, 4), (-1, 2), (1, 1)]),
        bad(3),
        row(5, &[(-1, 1), (-4, 5), (2, 25), (-2, 25), (4, 5), (1, 1)]),
        row(7, &[(-1, 1), (0, 1), (22, 49), (-22, 49), (0, 1), (1, 1)]),
        row(11, &[(-1, 1), (1, 1), (-58, 121), (58, 121), (-1, 1), (1, 1)]),
        row(13, &[(-1, 1), (6, 13), (4, 169), (-4, 169), (-6, 13), (1, 1)]),
    ]
}

fn table_c() -> Vec<Row> {
    vec![
        bad(2),
        bad(3),
        row(5, &[(-1, 1), (-4, 5), (1, 5), (-1, 5), (4, 5), (1, 1)]),
        row(7, &[(-1, 1), (-4, 7), (5, 49), (-5, 49), (4, 7), (1, 1)]),
        row(11, &[(-1, 1), (2, 11), (13, 11), (-13, 11), (-2, 11), (1, 1)]),
        row(13, &[(-1, 1), (-19, 13), (-142, 169), (142, 169), (19, 13), (1, 1)]),
    ]
}

fn table_d() -> Vec<Row> {
    vec![
        bad(2),
        bad(3),
        row(5, &[(-1, 1), (-1, 5), (2, 25), (-2, 25), (1, 5), (1, 1)]),
        bad(7),
        row(11, &[(-1, 1), (2, 11), (-19, 121), (19, 121), (-2, 11), (1, 1)]),
        row(13, &[(-1, 1), (-1, 13), (56, 169), (-56, 169), (1, 13), (1, 1)]),
        row(17, &[(-1, 1), (11, 17), (404, 289), (-404, 289), (-11, 17), (1, 1)]),
    ]
}

fn pins_small() -> PinnedWitnesses {
    pins(
        5,
        &[(2, 5), (3, 5), (6, 13)],
        &[(-1, 11), (-2, 5), (-3, 5), (-6, 13)],
    )
}

fn pins_seven() -> PinnedWitnesses {
    pins(
        5,
        &[(2, 5), (3, 5), (6, 13), (7, 5), (14, 17), (21, 13), (42, 5)],
        &[
            (-1, 11),
            (-2, 5),
            (-3, 5),
            (-6, 13),
            (-7, 5),
            (-14, 17),
            (-21, 13),
            (-42, 5),
        ],
    )
}

fn map(num: &str, den: &str) -> Option<RationalMap> {
    Some(RationalMap::new(ip(num), ip(den)).unwrap())
}

pub fn registry_lookup(id: &str) -> Result<RegistryEntry> {
    let entry = match id {
        "x0" => RegistryEntry {
            id: "x0",
            surface: x0_surface(),
            s: vec![3],
            map: None,
            table: Vec::new(),
            pinned: PinnedWitnesses::default(),
            profiles: None,
        },
        "case1" => RegistryEntry {
            id: "case1",
            surface: surface("case1", "3*s^3 - 3*s^2 + 1", "s^6*(s - 1)^3"),
            s: vec![3, 7],
            map: map("1", "s^2*(s - 1)"),
            table: table_a(),
            pinned: pins(5, &[(21, 11)], &[(-3, 5), (-7, 5)]),
            profiles: Some([vec![3], vec![1, 2], vec![1, 1, 1, 1, 1, 1]]),
        },
        "case2" => RegistryEntry {
            id: "case2",
            surface: surface("case2", "s^3 - s^2 + 3", "1"),
            s: vec![3, 61, 307],
            map: map("s^2*(s - 1)", "1"),
            table: table_b(),
            pinned: pins(
                5,
                &[(61, 2), (921, 11), (56181, 2)],
                &[(-3, 2), (-183, 5), (-307, 2), (-18727, 5)],
            ),
            profiles: Some([vec![1, 2], vec![3], vec![1, 1, 1, 1, 1, 1]]),
        },
        "case3i" => RegistryEntry {
            id: "case3i",
            surface: surface("case3i", "-4*s^3 - 3*s + 1", "s^3"),
            s: vec![2, 3],
            map: map("-(4*s^3 + 6*s - 1)", "s"),
            table: table_c(),
            pinned: pins_small(),
            profiles: Some([vec![1, 1, 1], vec![1, 2], vec![1, 1, 2, 2]]),
        },
        "case3ii" => RegistryEntry {
            id: "case3ii",
            surface: surface("case3ii", "-32*s^3 + 81", "157464*(s - 1)^3"),
            s: vec![2, 3, 7],
            map: map("-32*s^3 - 162*s + 243", "54*(s - 1)"),
            table: table_d(),
            pinned: pins_seven(),
            profiles: Some([vec![1, 1, 1], vec![1, 2], vec![1, 1, 2, 2]]),
        },
        "case4i" => RegistryEntry {
            id: "case4i",
            surface: surface(
                "case4i",
                "-12*s^3 + 6561*s + 59049",
                "(-4*s^3 - 4374*s + 19683)^3",
            ),
            s: vec![2, 3],
            map: map("19683*s", "-4*s^3 - 4374*s + 19683"),
            table: table_c(),
            pinned: pins_small(),
            profiles: Some([vec![1, 2], vec![1, 1, 1], vec![1, 1, 2, 2]]),
        },
        "case4ii" => RegistryEntry {
            id: "case4ii",
            surface: surface(
                "case4ii",
                "-96*s^3 + 972*s - 729",
                "(-32*s^3 - 162*s + 243)^3",
            ),
            s: vec![2, 3, 7],
            map: map("1458*(s - 1)", "-32*s^3 - 162*s + 243"),
            table: table_d(),
            pinned: pins_seven(),
            profiles: Some([vec![1, 2], vec![1, 1, 1], vec![1, 1, 2, 2]]),
        },
        other => return Err(CliError::UnknownSurface(other.to_string())),
    };
    Ok(entry)
}
