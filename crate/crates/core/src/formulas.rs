//! Closed counting formulas in `(g, i)` and their certification.
//!
//! Engine quantities are computed for concrete integers by the Chow-ring
//! and Chern-class code. A closed form is certified by comparing it with
//! the engine on a grid: two polynomials of degree at most `d` in each
//! variable that agree on a `(d+1) x (d+1)` grid are identical.
//!
//! # Degree audit
//!
//! Every engine quantity is a polynomial in `(g, i)` of degree at most 6 in
//! each variable, and the certifier uses a bound of 8:
//!
//! * `[W_i]` has coefficients of degree 2 in `(g, i)`; so do the jet `c1`
//!   coefficients, being sums over `g + i + 1` graded pieces whose classes
//!   are linear in the summation index.
//! * `[SW_i] = [W_i](K2 + [W_i])` is a product of two such divisors, so its
//!   coefficients on `K1K2, K2 Delta, Delta^2, K1 Delta` have degree 4. The
//!   intersection numbers `2g - 2` and `4(g-1)^2` add at most 2 in `g`.
//! * Jet `c2` is a double sum over index pairs `l < m <= g+i+1` of
//!   products linear in `l` and `m` with coefficients linear in `i`, which
//!   is degree 4 in `(g, i)` jointly; integrating adds 1 in `g`. The
//!   correction `c1(J) c1(E_i)` is degree 4 before integrating.
//! * `E_i = E_i^+ - (g+1) W_i.Delta` and `D_i = SW_i - E_i` inherit those
//!   bounds.

use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::bundles::{c1_e, chern_jet, class_e_plus, class_sw, class_w_derived, w_delta_degree};
use crate::chow::ChowRing;
use crate::numeric::{int, rat, render, ParamPoly, Rational};

/// Per-variable degree bound assumed for every engine quantity.
pub const DEGREE_BOUND: (u32, u32) = (8, 8);

/// Default grid: `g in 1..=9`, `i in 0..=8`.
pub const DEFAULT_G_RANGE: RangeInclusive<i64> = 1..=9;
pub const DEFAULT_I_RANGE: RangeInclusive<i64> = 0..=8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("grid insufficient for degree bound in {name}: need more than {bound:?} points per variable, got {grid:?}")]
    InsufficientGrid {
        name: String,
        bound: (u32, u32),
        grid: (usize, usize),
    },
    #[error(
        "invalid grid: g must start at 1 or more and i at 0 or more (got g {g_start}, i {i_start})"
    )]
    InvalidGrid { g_start: i64, i_start: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub name: String,
    pub expr: ParamPoly,
    pub degree_bound: (u32, u32),
    /// Human-readable statement of what the form counts.
    pub anchor: String,
}

impl ClosedForm {
    fn new(name: &str, expr: ParamPoly, anchor: &str) -> Self {
        Self {
            name: name.to_string(),
            expr,
            degree_bound: DEGREE_BOUND,
            anchor: anchor.to_string(),
        }
    }

    pub fn bound_dominates_degree(&self) -> bool {
        self.expr.degree_g() <= self.degree_bound.0 && self.expr.degree_i() <= self.degree_bound.1
    }

    /// Same form with a constant added; used as a negative control.
    pub fn offset(&self, name: &str, c: i64) -> Self {
        Self {
            name: name.to_string(),
            expr: &self.expr + &ParamPoly::int(c),
            ..self.clone()
        }
    }
}

fn g() -> ParamPoly {
    ParamPoly::g()
}
fn i() -> ParamPoly {
    ParamPoly::i()
}
fn c(n: i64) -> ParamPoly {
    ParamPoly::int(n)
}
fn half() -> Rational {
    rat(1, 2)
}

/// Total weight of `V(i, P)`: `g (g+i)^2`.
pub fn total_weight() -> ClosedForm {
    ClosedForm::new(
        "total_weight",
        g() * (g() + i()).pow(2),
        "total weight of omega((i+1)P): g(g+i)^2",
    )
}

/// Brill-Segre count `(r+1)(d + (g-1) r)` with `r = g+i-1`, `d = 2g-1+i`.
pub fn brill_segre() -> ClosedForm {
    let r = g() + i() - c(1);
    let d = c(2) * g() - c(1) + i();
    let expr = (&r + &c(1)) * (d + (g() - c(1)) * &r);
    ClosedForm::new(
        "brill_segre",
        expr,
        "Brill-Segre total weight (r+1)(d+(g-1)r)",
    )
}

pub fn transversality() -> ClosedForm {
    ClosedForm::new(
        "W_delta_transversality",
        g().pow(3) - g(),
        "int [W_i][Delta] = g^3 - g",
    )
}

pub fn sw_degree() -> ClosedForm {
    let s = g() + i();
    let expr = c(2) * i() * g() * (g() - c(1)) * ((i() + c(2)) * s.pow(2) + c(2) * &s + c(2));
    ClosedForm::new(
        "SW_degree",
        expr,
        "int [SW_i] = 2ig(g-1)((i+2)(g+i)^2+2(g+i)+2)",
    )
}

pub fn e_plus_degree() -> ClosedForm {
    let expr = (i() + c(1)).pow(2) * g() * (g() - c(1)) * (g() + i() + c(1)).pow(2);
    ClosedForm::new(
        "E_plus_degree",
        expr,
        "int [E_i^+] = (i+1)^2 g(g-1)(g+i+1)^2",
    )
}

pub fn d_degree() -> ClosedForm {
    let expr = g()
        * (g() - c(1))
        * ((g() + i() - c(1)).pow(2) * (i() + c(1)).pow(2) - (g() - c(1)).pow(2));
    ClosedForm::new(
        "D_degree",
        expr,
        "int [D_i] = g(g-1)((g+i-1)^2(i+1)^2-(g-1)^2)",
    )
}

pub fn e_degree() -> ClosedForm {
    let expr = g()
        * (g() - c(1))
        * ((g() + i() + c(1)).pow(2) * (i() + c(1)).pow(2) - (g() + c(1)).pow(2));
    ClosedForm::new(
        "E_degree",
        expr,
        "int [E_i] = g(g-1)((g+i+1)^2(i+1)^2-(g+1)^2)",
    )
}

/// The three coefficients of `[W_i]` on `K1`, `K2`, `Delta`.
pub fn w_class_coefficients() -> [ClosedForm; 3] {
    [
        ClosedForm::new(
            "W_class_K1",
            (i() * (i() + c(1))).scale(&half()),
            "[W_i] K1-coefficient i(i+1)/2",
        ),
        ClosedForm::new(
            "W_class_K2",
            ((g() + i()) * (g() + i() + c(1))).scale(&half()),
            "[W_i] K2-coefficient (g+i)(g+i+1)/2",
        ),
        ClosedForm::new(
            "W_class_Delta",
            i() * (g() + i() + c(1)),
            "[W_i] Delta-coefficient i(g+i+1)",
        ),
    ]
}

pub fn c1_e_coefficient() -> ClosedForm {
    ClosedForm::new(
        "c1_E",
        (i() * (i() + c(1))).scale(&rat(-1, 2)),
        "c1(E_i) = -i(i+1)/2 K1",
    )
}

pub fn jet_c1_coefficients() -> [ClosedForm; 2] {
    [
        ClosedForm::new(
            "jet_c1_K2",
            ((g() + i() + c(1)) * (g() + i() + c(2))).scale(&half()),
            "c1(J^{g+i}(L_i)) K2-coefficient (g+i+1)(g+i+2)/2",
        ),
        ClosedForm::new(
            "jet_c1_Delta",
            (i() + c(1)) * (g() + i() + c(1)),
            "c1(J^{g+i}(L_i)) Delta-coefficient (i+1)(g+i+1)",
        ),
    ]
}

/// `c2` of the jet bundle as `a K2 Delta + b Delta^2`, integrated:
/// `(2g-2)(a - b)`.
pub fn jet_c2_degree() -> ClosedForm {
    let s = g() + i();
    let k2_delta = ((i() + c(1)) * &s * (&s + c(1)) * (&s + c(2))).scale(&half());
    let delta_sq = ((i() + c(1)).pow(2) * &s * (&s + c(1))).scale(&half());
    let expr = (c(2) * g() - c(2)) * (k2_delta - delta_sq);
    ClosedForm::new(
        "jet_c2_degree",
        expr,
        "c2(J^{g+i}(L_i)) = (i+1)(g+i)(g+i+1)(g+i+2)/2 K2 Delta + (i+1)^2(g+i)(g+i+1)/2 Delta^2",
    )
}

/// Engine value of a named quantity at `(g, i)`.
pub type EngineFn = fn(i64, i64) -> Rational;

fn ring(g: i64) -> ChowRing {
    ChowRing::new(g).expect("grid validated g >= 1")
}

pub fn engine_sw_degree(g: i64, i: i64) -> Rational {
    let r = ring(g);
    r.integrate(&class_sw(&r, i))
}

pub fn engine_e_plus_degree(g: i64, i: i64) -> Rational {
    let r = ring(g);
    r.integrate(&class_e_plus(&r, i))
}

pub fn engine_e_degree(g: i64, i: i64) -> Rational {
    engine_e_plus_degree(g, i) - int(g + 1) * engine_transversality(g, i)
}

pub fn engine_d_degree(g: i64, i: i64) -> Rational {
    engine_sw_degree(g, i) - engine_e_degree(g, i)
}

pub fn engine_transversality(g: i64, i: i64) -> Rational {
    w_delta_degree(&ring(g), i)
}

fn engine_w_k1(g: i64, i: i64) -> Rational {
    class_w_derived(&ring(g), i).k1
}
fn engine_w_k2(g: i64, i: i64) -> Rational {
    class_w_derived(&ring(g), i).k2
}
fn engine_w_delta(g: i64, i: i64) -> Rational {
    class_w_derived(&ring(g), i).delta
}
fn engine_c1_e(g: i64, i: i64) -> Rational {
    c1_e(&ring(g), i).k1
}
fn engine_jet_c1_k2(g: i64, i: i64) -> Rational {
    chern_jet(&ring(g), i, g + i).c1().k2.clone()
}
fn engine_jet_c1_delta(g: i64, i: i64) -> Rational {
    chern_jet(&ring(g), i, g + i).c1().delta.clone()
}
fn engine_jet_c2_degree(g: i64, i: i64) -> Rational {
    let r = ring(g);
    r.integrate(chern_jet(&r, i, g + i).c2())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Grid,
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub g: i64,
    pub i: i64,
    pub engine: Rational,
    pub closed_form: Rational,
}

impl GridPoint {
    pub fn agrees(&self) -> bool {
        self.engine == self.closed_form
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub name: String,
    pub anchor: String,
    pub method: Method,
    pub grid: Vec<GridPoint>,
    pub grid_size: (usize, usize),
    pub degree_bound: (u32, u32),
    /// `lhs - rhs` for symbolic identities.
    pub residual: Option<ParamPoly>,
    pub verdict: Verdict,
}

/// One entry of `failures[]` in the serialized report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FailureRecord {
    Point {
        g: i64,
        i: i64,
        engine: String,
        closed_form: String,
    },
    Residual {
        residual: String,
    },
}

/// Serialized form of a report; rationals are strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub name: String,
    pub verdict: Verdict,
    pub method: Method,
    pub grid_size: [usize; 2],
    pub degree_bound: [u32; 2],
    pub anchor: String,
    pub failures: Vec<FailureRecord>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &GridPoint> {
        self.grid.iter().filter(|p| !p.agrees())
    }

    pub fn record(&self) -> ReportRecord {
        let mut failures: Vec<FailureRecord> = self
            .failures()
            .map(|p| FailureRecord::Point {
                g: p.g,
                i: p.i,
                engine: render(&p.engine),
                closed_form: render(&p.closed_form),
            })
            .collect();
        if let Some(res) = self.residual.as_ref().filter(|r| !r.is_zero()) {
            failures.push(FailureRecord::Residual {
                residual: res.to_string(),
            });
        }
        ReportRecord {
            name: self.name.clone(),
            verdict: self.verdict,
            method: self.method,
            grid_size: [self.grid_size.0, self.grid_size.1],
            degree_bound: [self.degree_bound.0, self.degree_bound.1],
            anchor: self.anchor.clone(),
            failures,
        }
    }
}

fn check_grid(
    name: &str,
    bound: (u32, u32),
    g_range: &RangeInclusive<i64>,
    i_range: &RangeInclusive<i64>,
) -> Result<(usize, usize), FormulaError> {
    if *g_range.start() < 1 || *i_range.start() < 0 {
        return Err(FormulaError::InvalidGrid {
            g_start: *g_range.start(),
            i_start: *i_range.start(),
        });
    }
    let size = (g_range.clone().count(), i_range.clone().count());
    if size.0 <= bound.0 as usize || size.1 <= bound.1 as usize {
        return Err(FormulaError::InsufficientGrid {
            name: name.to_string(),
            bound,
            grid: size,
        });
    }
    Ok(size)
}

/// Compares `engine` with `form` at every grid point.
///
/// Refuses to run when the grid is too small for the form's degree bound,
/// since agreement would then prove nothing.
pub fn certify(
    name: &str,
    engine: impl Fn(i64, i64) -> Rational,
    form: &ClosedForm,
    g_range: RangeInclusive<i64>,
    i_range: RangeInclusive<i64>,
) -> Result<CertificationReport, FormulaError> {
    let grid_size = check_grid(name, form.degree_bound, &g_range, &i_range)?;
    let mut grid = Vec::with_capacity(grid_size.0 * grid_size.1);
    for gv in g_range {
        for iv in i_range.clone() {
            grid.push(GridPoint {
                g: gv,
                i: iv,
                engine: engine(gv, iv),
                closed_form: form.expr.eval(gv, iv),
            });
        }
    }
    let verdict = if grid.iter().all(GridPoint::agrees) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CertificationReport {
        name: name.to_string(),
        anchor: form.anchor.clone(),
        method: Method::Grid,
        grid,
        grid_size,
        degree_bound: form.degree_bound,
        residual: None,
        verdict,
    })
}

/// Exact equality of two closed forms as polynomials.
pub fn certify_identity(
    name: &str,
    anchor: &str,
    lhs: &ParamPoly,
    rhs: &ParamPoly,
) -> CertificationReport {
    let residual = lhs - rhs;
    CertificationReport {
        name: name.to_string(),
        anchor: anchor.to_string(),
        method: Method::Symbolic,
        grid: Vec::new(),
        grid_size: (0, 0),
        degree_bound: (
            lhs.degree_g().max(rhs.degree_g()),
            lhs.degree_i().max(rhs.degree_i()),
        ),
        verdict: if residual.is_zero() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        residual: Some(residual),
    }
}

/// A named check: engine-versus-form on a grid, or a symbolic identity.
#[derive(Clone, Debug)]
pub enum Check {
    Grid {
        form: ClosedForm,
        engine: EngineFn,
    },
    Identity {
        name: String,
        anchor: String,
        lhs: ParamPoly,
        rhs: ParamPoly,
    },
}

impl Check {
    pub fn name(&self) -> &str {
        match self {
            Check::Grid { form, .. } => &form.name,
            Check::Identity { name, .. } => name,
        }
    }

    pub fn run(
        &self,
        g_range: RangeInclusive<i64>,
        i_range: RangeInclusive<i64>,
    ) -> Result<CertificationReport, FormulaError> {
        match self {
            Check::Grid { form, engine } => certify(&form.name, engine, form, g_range, i_range),
            Check::Identity {
                name,
                anchor,
                lhs,
                rhs,
            } => Ok(certify_identity(name, anchor, lhs, rhs)),
        }
    }
}

/// `int [SW_i] = int [D_i] + int [E_i]` as closed forms.
pub fn identity_a() -> Check {
    Check::Identity {
        name: "identity_a".into(),
        anchor: "[SW_i] = [D_i] + [E_i]".into(),
        lhs: sw_degree().expr,
        rhs: d_degree().expr + e_degree().expr,
    }
}

/// `int [E_i^+] = int [E_i] + (g+1)(g^3 - g)` as closed forms.
pub fn identity_b() -> Check {
    Check::Identity {
        name: "identity_b".into(),
        anchor: "[E_i^+] = [E_i] + (g+1)[W_i . Delta]".into(),
        lhs: e_plus_degree().expr,
        rhs: e_degree().expr + (g() + c(1)) * transversality().expr,
    }
}

fn w_class_checks() -> Vec<Check> {
    let [k1, k2, delta] = w_class_coefficients();
    vec![
        Check::Grid {
            form: k1,
            engine: engine_w_k1,
        },
        Check::Grid {
            form: k2,
            engine: engine_w_k2,
        },
        Check::Grid {
            form: delta,
            engine: engine_w_delta,
        },
    ]
}

/// Every check, sorted by name.
pub fn all_checks() -> Vec<Check> {
    let [jet_k2, jet_delta] = jet_c1_coefficients();
    let mut checks = vec![
        Check::Grid {
            form: sw_degree(),
            engine: engine_sw_degree,
        },
        Check::Grid {
            form: e_plus_degree(),
            engine: engine_e_plus_degree,
        },
        Check::Grid {
            form: e_degree(),
            engine: engine_e_degree,
        },
        Check::Grid {
            form: d_degree(),
            engine: engine_d_degree,
        },
        Check::Grid {
            form: transversality(),
            engine: engine_transversality,
        },
        Check::Grid {
            form: c1_e_coefficient(),
            engine: engine_c1_e,
        },
        Check::Grid {
            form: jet_k2,
            engine: engine_jet_c1_k2,
        },
        Check::Grid {
            form: jet_delta,
            engine: engine_jet_c1_delta,
        },
        Check::Grid {
            form: jet_c2_degree(),
            engine: engine_jet_c2_degree,
        },
        identity_a(),
        identity_b(),
    ];
    checks.extend(w_class_checks());
    checks.sort_by(|a, b| a.name().cmp(b.name()));
    checks
}

/// Runs checks on a grid using up to `jobs` threads; the output order is the
/// input order regardless of scheduling.
pub fn run_checks(
    checks: &[Check],
    g_range: RangeInclusive<i64>,
    i_range: RangeInclusive<i64>,
    jobs: usize,
) -> Result<Vec<CertificationReport>, FormulaError> {
    use rayon::prelude::*;
    for check in checks {
        if let Check::Grid { form, .. } = check {
            check_grid(&form.name, form.degree_bound, &g_range, &i_range)?;
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        checks
            .par_iter()
            .map(|c| c.run(g_range.clone(), i_range.clone()))
            .collect()
    })
}

/// The two closed-form decompositions plus the coefficientwise check of the
/// derived `[W_i]` class, on the default grid.
pub fn identity_suite() -> Vec<CertificationReport> {
    let mut checks = vec![identity_a(), identity_b()];
    checks.extend(w_class_checks());
    checks
        .iter()
        .map(|c| {
            c.run(DEFAULT_G_RANGE, DEFAULT_I_RANGE)
                .expect("default grid is large enough")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sw_certifies() {
        let rep = certify("SW_degree", engine_sw_degree, &sw_degree(), 1..=9, 0..=8).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.grid.len(), 81);
        assert_eq!(rep.grid_size, (9, 9));
    }

    #[test]
    fn e_plus_certifies() {
        let rep = certify(
            "E_plus_degree",
            engine_e_plus_degree,
            &e_plus_degree(),
            1..=9,
            0..=8,
        )
        .unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn broken_control_fails_at_origin() {
        let broken = sw_degree().offset("broken", 1);
        let rep = certify("broken", engine_sw_degree, &broken, 1..=9, 0..=8).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        let first = rep.failures().next().unwrap();
        assert_eq!(
            (
                first.g,
                first.i,
                first.engine.clone(),
                first.closed_form.clone()
            ),
            (1, 0, int(0), int(1))
        );
        assert_eq!(rep.record().failures.len(), 81);
    }

    #[test]
    fn refuses_small_grid() {
        let err = certify("SW_degree", engine_sw_degree, &sw_degree(), 1..=2, 0..=1).unwrap_err();
        assert!(matches!(
            err,
            FormulaError::InsufficientGrid { grid: (2, 2), .. }
        ));
        assert!(err
            .to_string()
            .contains("grid insufficient for degree bound"));
        let err = certify("SW_degree", engine_sw_degree, &sw_degree(), 0..=9, 0..=8).unwrap_err();
        assert!(matches!(err, FormulaError::InvalidGrid { .. }));
    }

    #[test]
    fn identities_at_sample_points() {
        assert_eq!(sw_degree().expr.eval(2, 1), int(140));
        assert_eq!(d_degree().expr.eval(2, 1), int(30));
        assert_eq!(e_degree().expr.eval(2, 1), int(110));
        assert_eq!(e_plus_degree().expr.eval(2, 1), int(128));
        assert_eq!(transversality().expr.eval(2, 1), int(6));
        for i in 0..5 {
            assert_eq!(sw_degree().expr.eval(1, i), int(0));
            assert_eq!(d_degree().expr.eval(1, i), int(0));
            assert_eq!(e_degree().expr.eval(1, i), int(0));
        }
    }

    #[test]
    fn identity_suite_passes() {
        let reports = identity_suite();
        assert_eq!(reports.len(), 5);
        assert!(
            reports.iter().all(CertificationReport::passed),
            "{reports:?}"
        );
    }

    #[test]
    fn every_form_respects_its_bound() {
        let mut forms = vec![
            total_weight(),
            brill_segre(),
            transversality(),
            sw_degree(),
            e_plus_degree(),
            d_degree(),
            e_degree(),
            c1_e_coefficient(),
            jet_c2_degree(),
        ];
        forms.extend(w_class_coefficients());
        forms.extend(jet_c1_coefficients());
        for f in &forms {
            assert!(f.bound_dominates_degree(), "{}", f.name);
        }
    }

    #[test]
    fn brill_segre_is_total_weight() {
        assert_eq!(brill_segre().expr, total_weight().expr);
    }

    #[test]
    fn counts_are_nonnegative_and_vanish_at_i_zero() {
        for gv in 1..=9 {
            for iv in 0..=8 {
                assert!(d_degree().expr.eval(gv, iv) >= int(0));
                assert!(e_degree().expr.eval(gv, iv) >= int(0));
            }
        }
        assert!(e_degree().expr.at_i(0).is_zero());
        assert!(d_degree().expr.at_i(0).is_zero());
    }

    #[test]
    fn full_run_is_sorted_and_green() {
        let checks = all_checks();
        let names: Vec<&str> = checks.iter().map(Check::name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        let reports = run_checks(&checks, DEFAULT_G_RANGE, DEFAULT_I_RANGE, 4).unwrap();
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.name, r.record());
        }
    }

    #[test]
    fn symbolic_failure_carries_residual() {
        let rep = certify_identity(
            "bad",
            "x",
            &sw_degree().expr,
            &(sw_degree().expr + ParamPoly::g()),
        );
        assert_eq!(rep.verdict, Verdict::Fail);
        assert_eq!(
            rep.record().failures,
            vec![FailureRecord::Residual {
                residual: "-g".into()
            }]
        );
    }
}
