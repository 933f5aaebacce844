use std::collections::BTreeMap;

use crate::expr::{
    abs, area_of, circ_perim, circ_perim0, d, deficit, k, long_edge_area, long_edge_perim, pi,
    reg_perim, tau0, var, Expr,
};
use crate::functional::{a_of, rho_floor};
use crate::interval::{dec, Interval};
use crate::prover::{Inequality, Sign};

use super::{CaseSpec, Goal, GoalKind, ParamTables, SmallPolygonParams};

/// Catalog ids in report order.
pub const CASE_IDS: [&str; 18] = [
    "N5-A",
    "N5-B",
    "N5-C",
    "N5-D",
    "N5-E",
    "N5-F",
    "N5-G",
    "N8-TAIL",
    "N4",
    "N3",
    "N2-GC",
    "N2-SA",
    "AUX-SECOND-DERIV",
    "AUX-CONCAVITY",
    "AUX-SMALL-AREA",
    "AUX-MERGE",
    "AUX-DODEC",
    "AUX-EQUALITY",
];

/// `[lo(a), hi(b)]` for decimal literals `a ≤ b`.
fn span(a: &str, b: &str) -> Interval {
    Interval::new(dec(a).lo(), dec(b).hi())
}

fn closed(e: &Expr) -> Interval {
    e.value().expect("closed catalog expression evaluates")
}

fn lt(label: &str, lhs: Expr, rhs: Expr) -> Inequality {
    Inequality::new(label, lhs, rhs)
}

fn positive(label: &str, e: Expr) -> Inequality {
    lt(label, k(0.0), e)
}

/// `B′ < 0` and `p5′ < 0`, the signs that let larger `n` and larger `t`
/// only improve the deficit.
fn sign_facts() -> Vec<Inequality> {
    vec![
        lt("B' < 0", Expr::BPrime, k(0.0)),
        lt("p5' < 0", Expr::P5Prime, k(0.0)),
    ]
}

fn rho() -> Expr {
    var(0)
}

fn t() -> Expr {
    var(1)
}

/// `I(circ_perim0(ρπ/3 + extra), n, t, ρ)`.
fn circle_deficit(extra: Option<Expr>, n: Expr, t: Expr) -> Expr {
    let area = match extra {
        Some(e) => area_of(rho()) + e,
        None => area_of(rho()),
    };
    deficit(circ_perim0(area), n, t, rho())
}

/// `I(reg_perim(ρπ/3 - t, n), n, t, ρ)`.
fn polygon_deficit(n: Expr) -> Expr {
    deficit(reg_perim(area_of(rho()) - t(), n.clone()), n, t(), rho())
}

/// Deficit after reflecting a negative edge area `s`:
/// `I(circ_perim0(ρπ/3 + 2s), n, τ₀ - s, ρ)`.
fn reflection_deficit(n: Expr) -> Expr {
    circle_deficit(Some(k(2.0) * t()), n, tau0() - t())
}

/// Lower end of the area-fraction range for an `n`-gon: 0 where the
/// inequality holds all the way down, the hypothesis floor otherwise.
fn rho_start(n: u32) -> Interval {
    if n == 5 {
        Interval::point(rho_floor(5).lo())
    } else {
        Interval::ZERO
    }
}

/// An area-fraction range for an `n`-gon, checked against the hypothesis
/// `mrr(area) > a(n)` of the theorem.
fn guarded(n: u32, rho: Interval) -> Interval {
    assert!(
        super::meets_area_hypothesis(rho, n),
        "ρ range {rho} lies below the area hypothesis for n = {n}"
    );
    rho
}

fn params(entries: &[(&str, &str)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn n5_a() -> CaseSpec {
    let slope = d("1.301") * circ_perim0(k(2.0) * tau0()) / (k(2.0) * tau0());
    let mut chain = vec![positive(
        "I(1.301·circ_perim0(2τ0)/(2τ0), 5, -1.301, 1) > 0",
        deficit(slope, k(5.0), -d("1.301"), k(1.0)),
    )];
    chain.extend(sign_facts());
    CaseSpec {
        id: "N5-A",
        section: "at least five sides, large total truncated area",
        description: "Total absolute truncated edge area at least 1.301: the edges are \
                      bounded by half circles whose length per unit area is least at 2τ0."
            .into(),
        goals: vec![Goal::chain("deficit at the slope bound", chain)],
        params: params(&[("T_abs", "1.301"), ("tau0", "0.32")]),
    }
}

fn n5_b() -> CaseSpec {
    let mut chain = vec![positive(
        "I(circ_perim0(3.474), 5, -1.301, 1) > 0",
        deficit(circ_perim0(d("3.474")), k(5.0), -d("1.301"), k(1.0)),
    )];
    chain.extend(sign_facts());
    CaseSpec {
        id: "N5-B",
        section: "at least five sides, large area",
        description: "Area at least 3.474: the perimeter is at least that of a circle of that area.".into(),
        goals: vec![Goal::chain("large-area circle bound", chain)],
        params: params(&[("area", "3.474"), ("T_abs", "1.301")]),
    }
}

fn n5_c() -> CaseSpec {
    CaseSpec {
        id: "N5-C",
        section: "at least five sides, some edge area above τ0",
        description: "An edge area above τ0: after contraction and reflection of negative \
                      edge areas the circle bound with the reflected area applies."
            .into(),
        goals: vec![
            Goal::positive(
                "I(circ_perim0(ρπ/3 + 2s), 5, τ0 - s, ρ) > 0",
                reflection_deficit(k(5.0)),
                vec![Interval::new(0.0, 1.0), span("0", "1.301")],
            ),
            Goal::chain(
                "reflected area stays below 2π",
                vec![lt(
                    "3.474 + 2·1.301 < 2π",
                    d("3.474") + k(2.0) * d("1.301"),
                    k(2.0) * pi(),
                )],
            ),
        ],
        params: params(&[("s_max", "1.301"), ("area", "3.474")]),
    }
}

fn n5_d() -> CaseSpec {
    let x = || var(0);
    let half_pi = closed(&(pi() / k(2.0)));
    let mut chain = vec![
        lt("perim(0.7) > 3.8", d("3.8"), long_edge_perim(d("0.7"))),
        positive(
            "I(3.8, 5, -0.0711, 1) > 0",
            deficit(d("3.8"), k(5.0), -d("0.0711"), k(1.0)),
        ),
        lt("area(0.6) < 0.82", long_edge_area(d("0.6")), d("0.82")),
        lt(
            "0.82 < 0.9957π/3 - 0.117",
            d("0.82"),
            d("0.9957") * pi() / k(3.0) - d("0.117"),
        ),
    ];
    chain.extend(sign_facts());
    CaseSpec {
        id: "N5-D",
        section: "pentagon near the regular one with an edge of length at least 1",
        description: "Pentagon with a long edge: the extremal pentagon is inscribed in a \
                      circle of radius x with edges 1, u, u, u, u."
            .into(),
        goals: vec![
            Goal::derivative_sign(
                "perimeter increasing in the radius",
                long_edge_perim(x()),
                vec![span("0.5005", "1.5")],
                0,
                1,
                Sign::Positive,
            ),
            // perim(x) = perim(π - x), so the slope vanishes at π/2 and
            // stays positive below it while the perimeter is concave.
            Goal::derivative_sign(
                "perimeter concave up to π/2",
                long_edge_perim(x()),
                vec![Interval::new(dec("1.5").lo(), half_pi.hi())],
                0,
                2,
                Sign::Negative,
            ),
            Goal::vanishes(
                "perimeter slope at π/2",
                long_edge_perim(x()),
                vec![half_pi],
                1,
                0,
                1e-8,
            ),
            Goal::derivative_sign(
                "area increasing in the radius",
                long_edge_area(x()),
                vec![span("0.5005", "0.7")],
                0,
                1,
                Sign::Positive,
            ),
            Goal::positive(
                "area below 0.82 for radius up to 0.6",
                d("0.82") - long_edge_area(x()),
                vec![span("0.5", "0.6")],
            ),
            Goal::chain("threshold comparisons", chain),
            Goal::positive(
                "I(perim(x), 5, π/3 - area(x), 1) > 0",
                deficit(
                    long_edge_perim(x()),
                    k(5.0),
                    pi() / k(3.0) - long_edge_area(x()),
                    k(1.0),
                ),
                vec![span("0.6", "0.7")],
            ),
        ],
        params: params(&[
            ("x_low", "0.6"),
            ("x_high", "0.7"),
            ("perim_threshold", "3.8"),
            ("area_threshold", "0.82"),
        ]),
    }
}

/// `I(C(ρ, t), 5, t, ρ)` with
/// `C(ρ, t) = circ_perim(1, t/3.65)·reg_perim(ρπ/3 - t, 5)`, for given
/// expressions of `ρ` and `t`.
pub fn bulged_deficit(rho: Expr, t: Expr) -> Expr {
    let c = circ_perim(k(1.0), t.clone() / d("3.65")) * reg_perim(area_of(rho.clone()) - t.clone(), k(5.0));
    deficit(c, k(5.0), t, rho)
}

fn n5_e() -> CaseSpec {
    let f = bulged_deficit(rho(), t());
    let one = Interval::ONE;
    let outer_rho = span("0.9957", "1");
    let inner_rho = span("0.999", "1");
    CaseSpec {
        id: "N5-E",
        section: "pentagon near the regular one",
        description: "Area fraction at least 0.9957 and truncated area in [-0.0711, 0.117]: \
                      edges are arcs of equal curvature, bounded by C(ρ, t). The bound is \
                      positive away from (1, 0), decreasing in ρ near it, and strictly \
                      convex in t at ρ = 1 with a double zero at t = 0."
            .into(),
        goals: vec![
            Goal::positive(
                "outer region, ρ below 0.999",
                f.clone(),
                vec![Interval::new(outer_rho.lo(), dec("0.999").hi()), span("-0.0711", "0.117")],
            ),
            Goal::positive(
                "outer region, t below -0.04",
                f.clone(),
                vec![inner_rho, span("-0.0711", "-0.04")],
            ),
            Goal::positive(
                "outer region, t above 0.043",
                f.clone(),
                vec![inner_rho, span("0.043", "0.117")],
            ),
            Goal::derivative_sign(
                "ρ-derivative negative on the inner box",
                f.clone(),
                vec![inner_rho, span("-0.04", "0.043")],
                0,
                1,
                Sign::Negative,
            ),
            Goal::positive(
                "ρ = 1, t in [-0.04, -0.005]",
                f.clone(),
                vec![one, span("-0.04", "-0.005")],
            ),
            Goal::positive(
                "ρ = 1, t in [0.005, 0.043]",
                f.clone(),
                vec![one, span("0.005", "0.043")],
            ),
            Goal::derivative_sign(
                "second t-derivative positive near t = 0",
                f.clone(),
                vec![one, span("-0.005", "0.005")],
                1,
                2,
                Sign::Positive,
            ),
            Goal::vanishes("value at the regular pentagon", f.clone(), vec![one, Interval::ZERO], 0, 0, 1e-10),
            Goal::vanishes("t-derivative at the regular pentagon", f, vec![one, Interval::ZERO], 1, 1, 1e-10),
        ],
        params: params(&[
            ("rho_cap", "0.9957"),
            ("t_low", "-0.0711"),
            ("t_high", "0.117"),
            ("inner_rho", "0.999"),
            ("inner_t_low", "-0.04"),
            ("inner_t_high", "0.043"),
            ("convex_half_width", "0.005"),
            ("perimeter_floor", "3.65"),
        ]),
    }
}

/// Area-fraction cap of the polygon-bound goals.
fn cap(n: u32) -> &'static str {
    if n == 5 {
        "0.9957"
    } else {
        "1"
    }
}

fn n5_f(p: &ParamTables) -> CaseSpec {
    let mut goals = Vec::new();
    for n in 5..=7u32 {
        let nk = k(f64::from(n));
        let rho1 = p.rho1[&n];
        let t1 = p.t1[&n];
        goals.push(Goal::positive(
            format!("n = {n}: circle bound, t = 0, ρ ≤ {rho1}"),
            circle_deficit(None, nk.clone(), k(0.0)),
            vec![guarded(n, Interval::new(rho_start(n).lo(), dec(rho1).hi()))],
        ));
        goals.push(Goal::positive(
            format!("n = {n}: circle bound, t = {t1}, ρ ≥ {rho1}"),
            circle_deficit(None, nk.clone(), d(t1)),
            vec![span(rho1, "1")],
        ));
        goals.push(Goal::positive(
            format!("n = {n}: polygon bound, t in [0, {t1}]"),
            polygon_deficit(nk),
            vec![span(rho1, cap(n)), span("0", t1)],
        ));
    }
    goals.push(Goal::chain("larger t only helps", sign_facts()));
    CaseSpec {
        id: "N5-F",
        section: "five to seven sides, non-negative truncated area",
        description: "T ≥ 0 with n in {5, 6, 7}: circle bounds below ρ1(n) and above T1(n), \
                      the regular-polygon bound in between."
            .into(),
        goals,
        params: params(&[
            ("rho1(5)", p.rho1[&5]),
            ("rho1(6)", p.rho1[&6]),
            ("rho1(7)", p.rho1[&7]),
            ("T1(5)", p.t1[&5]),
            ("T1(6)", p.t1[&6]),
            ("T1(7)", p.t1[&7]),
        ]),
    }
}

fn n5_g(p: &ParamTables) -> CaseSpec {
    let mut goals = Vec::new();
    for n in 5..=7u32 {
        let nk = k(f64::from(n));
        let t0 = p.t0[&n];
        let rho2 = p.rho2[&n];
        let reflected = || circle_deficit(Some(-(k(2.0) * t())), nk.clone(), t());
        goals.push(Goal::positive(
            format!("n = {n}: circle bound, t in [-1.301, {t0}]"),
            reflected(),
            vec![Interval::new(0.0, 1.0), span("-1.301", t0)],
        ));
        goals.push(Goal::positive(
            format!("n = {n}: circle bound, t in [{t0}, 0], ρ ≤ {rho2}"),
            reflected(),
            vec![guarded(n, Interval::new(rho_start(n).lo(), dec(rho2).hi())), span(t0, "0")],
        ));
        goals.push(Goal::positive(
            format!("n = {n}: polygon bound, t in [{t0}, 0]"),
            polygon_deficit(nk.clone()),
            vec![span(rho2, cap(n)), span(t0, "0")],
        ));
    }
    goals.push(Goal::chain("larger n only helps", sign_facts()));
    CaseSpec {
        id: "N5-G",
        section: "five to seven sides, non-positive truncated area",
        description: "T ≤ 0 with n in {5, 6, 7}: circle bound with reflected area below T0(n) \
                      or ρ2(n), the regular-polygon bound otherwise."
            .into(),
        goals,
        params: params(&[
            ("T0(5)", p.t0[&5]),
            ("T0(6)", p.t0[&6]),
            ("T0(7)", p.t0[&7]),
            ("rho2(5)", p.rho2[&5]),
            ("rho2(6)", p.rho2[&6]),
            ("rho2(7)", p.rho2[&7]),
        ]),
    }
}

fn n8_tail(p: &ParamTables) -> CaseSpec {
    let tail = k(3.0) * abs(Expr::P5Prime);
    let forward = circ_perim0(area_of(rho())) + tail.clone() - rho() * Expr::P5;
    let mirrored = circ_perim0(area_of(rho()) - k(2.0) * t()) - t() * Expr::BPrime + tail - rho() * Expr::P5;
    let t0 = p.t0[&8];
    CaseSpec {
        id: "N8-TAIL",
        section: "eight or more sides",
        description: "n ≥ 8: (5 - n)p5' ≥ 3|p5'|, so the n = 8 circle bounds dominate for every \
                      larger n, with ρ1 = 1 and T0 = 0."
            .into(),
        goals: vec![
            Goal::positive(
                "circle_perim0(ρπ/3) + 3|p5'| - ρp5 > 0",
                forward,
                vec![span("0", p.rho1[&8])],
            ),
            Goal::positive(
                "circle_perim0(ρπ/3 - 2t) - tB' + 3|p5'| - ρp5 > 0",
                mirrored,
                vec![Interval::new(0.0, 1.0), span("-1.301", t0)],
            ),
            Goal::chain("p5' < 0 gives the tail bound", sign_facts()),
        ],
        params: params(&[("rho1(8+)", p.rho1[&8]), ("T0(8+)", t0)]),
    }
}

/// Goals of the quadrilateral case, or of the triangle case when given
/// the substituted constants.
pub fn small_polygon_goals(p: &SmallPolygonParams) -> Vec<Goal> {
    let n = || d(p.n);
    let neg_bound = || d(p.neg_mult) * tau0();
    let t_neg = -closed(&neg_bound());
    let s_max = closed(&(d(p.reflect_mult) * tau0()));
    let sides: u32 = p.n.parse().expect("integer side count");
    let low = |hi: &str| guarded(sides, span(p.rho_min, hi));
    vec![
        Goal::positive(
            format!("large T: I(circle_perim0(ρπ/3), {}, {}, ρ) > 0", p.n, p.t_pos),
            circle_deficit(None, n(), d(p.t_pos)),
            vec![low("1")],
        ),
        Goal::chain(
            "large area",
            vec![
                positive(
                    &format!("I(circ_perim0({}), {}, -{}τ0, 1) > 0", p.big_area, p.n, p.neg_mult),
                    deficit(circ_perim0(d(p.big_area)), n(), -neg_bound(), k(1.0)),
                ),
                lt(
                    &format!("{} + 2τ0 < 2π", p.big_area),
                    d(p.big_area) + k(2.0) * tau0(),
                    k(2.0) * pi(),
                ),
            ],
        ),
        Goal::positive(
            "reflection of negative edge areas",
            reflection_deficit(n()),
            vec![Interval::new(0.0, 1.0), Interval::new(0.0, s_max.hi())],
        ),
        Goal::positive(
            "circle bound, t ≥ 0, small ρ",
            circle_deficit(None, n(), t()),
            vec![low(p.rho_split), span("0", p.t_pos)],
        ),
        Goal::positive(
            "polygon bound, t ≥ 0, large ρ",
            polygon_deficit(n()),
            vec![span(p.rho_split, "1"), span("0", p.t_pos)],
        ),
        Goal::positive(
            "reflected circle bound, t ≤ 0, small ρ",
            circle_deficit(Some(-(k(2.0) * t())), n(), t()),
            vec![low(p.rho_split), Interval::new(t_neg.lo(), 0.0)],
        ),
        Goal::positive(
            "reflected circle bound, very negative t",
            circle_deficit(Some(-(k(2.0) * t())), n(), t()),
            vec![low("1"), Interval::new(t_neg.lo(), dec(p.t_split).hi())],
        ),
        Goal::positive(
            "polygon bound, t ≤ 0, large ρ",
            polygon_deficit(n()),
            vec![span(p.rho_split, "1"), span(p.t_split, "0")],
        ),
    ]
}

fn small_polygon_params(p: &SmallPolygonParams) -> BTreeMap<String, String> {
    params(&[
        ("n", p.n),
        ("t_pos", p.t_pos),
        ("big_area", p.big_area),
        ("neg_mult", p.neg_mult),
        ("reflect_mult", p.reflect_mult),
        ("rho_split", p.rho_split),
        ("t_split", p.t_split),
        ("rho_min", p.rho_min),
    ])
}

fn n4(p: &ParamTables) -> CaseSpec {
    CaseSpec {
        id: "N4",
        section: "quadrilaterals",
        description: "n = 4, with a(4) = 0.1 and T ≥ -4τ0.".into(),
        goals: small_polygon_goals(&p.n4),
        params: small_polygon_params(&p.n4),
    }
}

fn n3(p: &ParamTables) -> CaseSpec {
    let q = p.n3();
    CaseSpec {
        id: "N3",
        section: "triangles",
        description: "n = 3: the quadrilateral argument with substituted constants.".into(),
        goals: small_polygon_goals(&q),
        params: small_polygon_params(&q),
    }
}

fn n2_gc() -> CaseSpec {
    let two_pi = || k(2.0) * pi();
    let four_pi = || k(4.0) * pi();
    CaseSpec {
        id: "N2-GC",
        section: "digons on a great circle",
        description: "Great-circle digons: area at least 2.29 directly, smaller areas after \
                      reflecting one edge region into [2.29, 4π - 2.29]."
            .into(),
        goals: vec![Goal::chain(
            "digon inequality and reflection ranges",
            vec![
                positive(
                    "I(circ_perim0(2.29), 2, -2τ0, 1) > 0",
                    deficit(circ_perim0(d("2.29")), k(2.0), -(k(2.0) * tau0()), k(1.0)),
                ),
                positive("|x1| ≥ π - 2.29 > 0", pi() - d("2.29")),
                lt(
                    "π/3 + 2(π - 2.29) > 2.29",
                    d("2.29"),
                    pi() / k(3.0) + k(2.0) * (pi() - d("2.29")),
                ),
                lt("2.29 + 2π < 4π - 2.29", d("2.29") + two_pi(), four_pi() - d("2.29")),
                lt("2·(2π/3) > 2.29", d("2.29"), k(2.0) * (two_pi() / k(3.0))),
                lt("π/3 + 2π < 4π - 2.29", pi() / k(3.0) + two_pi(), four_pi() - d("2.29")),
            ],
        )],
        params: params(&[("digon_area", "2.29")]),
    }
}

fn n2_sa() -> CaseSpec {
    let s_lo = closed(&(tau0() - d("0.271")));
    CaseSpec {
        id: "N2-SA",
        section: "digons along a simple arc",
        description: "Simple-arc digons: large T, reflection of the smaller edge area, and \
                      same-sign edge areas with ρ ≥ a(2) = 0.1."
            .into(),
        goals: vec![
            Goal::positive(
                "I(circ_perim0(ρπ/3), 2, 0.271, ρ) > 0",
                circle_deficit(None, k(2.0), d("0.271")),
                vec![Interval::new(0.0, 1.0)],
            ),
            Goal::vanishes(
                "0.271 - τ0 = -0.049",
                d("0.271") - tau0() + d("0.049"),
                vec![],
                0,
                0,
                1e-12,
            ),
            Goal::positive(
                "I(circ_perim0(ρπ/3 + 2s), 2, τ0 - s, ρ) > 0",
                reflection_deficit(k(2.0)),
                vec![Interval::new(0.0, 1.0), Interval::new(s_lo.lo(), dec("0.32").hi())],
            ),
            Goal::positive(
                "I(circ_perim0(ρπ/3), 2, ρπ/3, ρ) > 0",
                circle_deficit(None, k(2.0), area_of(rho())),
                vec![span("0.1", "1")],
            ),
        ],
        params: params(&[("T", "0.271"), ("t_min", "0.049"), ("rho_min", "0.1")]),
    }
}

fn aux_second_deriv() -> CaseSpec {
    let goals = (3..=7)
        .map(|n| Goal {
            label: format!("n = {n}"),
            kind: GoalKind::MaxSecond {
                f: reg_perim(var(0), k(f64::from(n))),
                start: dec("0.03"),
                end: dec("2.33"),
            },
        })
        .collect();
    CaseSpec {
        id: "AUX-SECOND-DERIV",
        section: "concavity of the regular-polygon perimeter",
        description: "The second area-derivative of reg_perim(x, n) is negative for x in \
                      [0.03, 2.33] and n = 3..7."
            .into(),
        goals,
        params: params(&[("start", "0.03"), ("end", "2.33")]),
    }
}

fn aux_concavity() -> CaseSpec {
    let x = var(0);
    let eps = dec("0.000001");
    let four_pi = Interval::four_pi();
    CaseSpec {
        id: "AUX-CONCAVITY",
        section: "circle perimeter per unit area",
        description: "circ_perim0(x)/x is decreasing, equivalently \
                      y·circ_perim0(x) ≥ x·circ_perim0(y) for x ≤ y."
            .into(),
        goals: vec![Goal::derivative_sign(
            "d/dx circ_perim0(x)/x < 0",
            circ_perim0(x.clone()) / x,
            vec![Interval::new(eps.lo(), (four_pi - eps).hi())],
            0,
            1,
            Sign::Negative,
        )],
        params: params(&[("margin", "0.000001")]),
    }
}

fn aux_small_area() -> CaseSpec {
    let lhs = d("4.0") * circ_perim0(d("0.1")) / d("0.2");
    let target = k(6.0) * Expr::P5;
    CaseSpec {
        id: "AUX-SMALL-AREA",
        section: "cells with small components",
        description: "Small total component area forces perimeter above the dodecahedral value.".into(),
        goals: vec![Goal::chain(
            "small-area perimeter",
            vec![
                lt("6·p5 < 4.0·circ_perim0(0.1)/0.2", target.clone(), lhs.clone()),
                lt("6·p5 + 0.4 < 4.0·circ_perim0(0.1)/0.2", target + d("0.4"), lhs),
            ],
        )],
        params: params(&[("area", "0.1"), ("gap", "0.4")]),
    }
}

/// `2·circ_perim0(x)/N - 3x·p5/π`.
pub(crate) fn merge_gain(cells: u32) -> Expr {
    let x = var(0);
    k(2.0) * circ_perim0(x.clone()) / k(f64::from(cells)) - k(3.0) * x * Expr::P5 / pi()
}

fn aux_merge() -> CaseSpec {
    let floor = dec("0.000000001");
    let mut goals: Vec<Goal> = (1..=64u32)
        .map(|n| {
            Goal::positive(
                format!("N = {n}"),
                merge_gain(n),
                vec![Interval::new(floor.lo(), a_of(n).hi())],
            )
        })
        .collect();
    let n_max = k(64.0);
    goals.push(Goal::chain(
        "every N > 64",
        vec![lt(
            "3.75·9·p5²/(4π²) + 3.75/64² < 4π",
            d("3.75") * k(9.0) * Expr::P5 * Expr::P5 / (k(4.0) * pi() * pi())
                + d("3.75") / (n_max.clone() * n_max),
            k(4.0) * pi(),
        )],
    ));
    goals.push(Goal::vanishes("zero at x = 0", merge_gain(1), vec![Interval::ZERO], 0, 0, 1e-300));
    CaseSpec {
        id: "AUX-MERGE",
        section: "merging small components",
        description: "Merging a component of area x ≤ a(N) never increases the normalized \
                      perimeter; the gain is zero only at x = 0."
            .into(),
        goals,
        params: params(&[("floor", "0.000000001"), ("a(N)", "min(3.75/N², 0.1)")]),
    }
}

fn aux_dodec() -> CaseSpec {
    CaseSpec {
        id: "AUX-DODEC",
        section: "dodecahedral tiling",
        description: "Geometric edge total of the spherical dodecahedron equals 6·p5.".into(),
        goals: vec![Goal::vanishes(
            "dodecahedral_total() - 6·p5",
            Expr::DodecTotal - k(6.0) * Expr::P5,
            vec![],
            0,
            0,
            1e-8,
        )],
        params: BTreeMap::new(),
    }
}

fn aux_equality() -> CaseSpec {
    CaseSpec {
        id: "AUX-EQUALITY",
        section: "equality case",
        description: "The regular pentagon of area π/3 has zero deficit.".into(),
        goals: vec![Goal::vanishes(
            "I(p5, 5, 0, 1)",
            deficit(Expr::P5, k(5.0), k(0.0), k(1.0)),
            vec![],
            0,
            0,
            1e-10,
        )],
        params: BTreeMap::new(),
    }
}

/// The full catalog, in [`CASE_IDS`] order.
pub fn list_cases() -> Vec<CaseSpec> {
    let p = ParamTables::standard();
    vec![
        n5_a(),
        n5_b(),
        n5_c(),
        n5_d(),
        n5_e(),
        n5_f(&p),
        n5_g(&p),
        n8_tail(&p),
        n4(&p),
        n3(&p),
        n2_gc(),
        n2_sa(),
        aux_second_deriv(),
        aux_concavity(),
        aux_small_area(),
        aux_merge(),
        aux_dodec(),
        aux_equality(),
    ]
}
