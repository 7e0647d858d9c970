//! Obstruction criteria for cusp configurations on a curve class.
//!
//! Three checks, sharing a common verdict shape:
//!
//! - **algebraic** (Bezout-type): for a divisor `D` with `C.D >= 0` such
//!   that no section of `O(D)` vanishes identically on `C`,
//!   `R(C.D + 1) >= h^0(D)`;
//! - **topological** (Heegaard-Floer): for a rational cuspidal `C` on a
//!   projective surface with `p_g = 0`, `C^2 > 0`, `K.C <= 1`, and a
//!   divisor with `C.D + 1 in [0, 2g]`,
//!   `R(C.D + 1) >= chi(D) + b_1/2`;
//! - **almost-complex**: for a surface with `b_2^+ = 1` carrying cone
//!   singularities of L-space knots with `2g < C^2`, and any class `E` with
//!   `C.E in [0, 2g]`, `R(C.E + 1) >= E.(E-K)/2 + 1` (the endpoint of the
//!   derivation); the variant right-hand side `E.(E+K)/2` is available
//!   behind a flag, and both values are always reported.
//!
//! A verdict is `FAIL` only when every assumption of the theorem holds and
//! the margin is negative; an obstruction must never be claimed for a
//! divisor whose hypotheses were not actually established. Divisors outside
//! the admissible window, or with an unverifiable hypothesis, are `SKIPPED`
//! with a machine-readable reason.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rfunction::{r_value, Configuration};
use crate::surface::{DivisorClass, SurfaceData, SurfaceKind};
use crate::Result;

/// Which criterion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Algebraic,
    Topological,
    AlmostComplex,
}

/// The divisor classes to test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scan {
    /// An explicit list of classes.
    Explicit(Vec<DivisorClass>),
    /// The ray `{ j * base : lo <= j <= hi }`.
    Ray {
        base: DivisorClass,
        lo: i64,
        hi: i64,
    },
    /// A coordinate box, iterated lexicographically.
    Box { lo: Vec<i64>, hi: Vec<i64> },
}

impl Scan {
    /// Expand to the concrete, deterministically ordered list of classes.
    pub fn expand(&self, rank: usize) -> Result<Vec<DivisorClass>> {
        let classes = match self {
            Scan::Explicit(list) => {
                if list.is_empty() {
                    return Err(Error::InvalidArgument("scan must be nonempty".into()));
                }
                list.clone()
            }
            Scan::Ray { base, lo, hi } => {
                if lo > hi {
                    return Err(Error::InvalidArgument(format!(
                        "empty ray range [{}, {}]",
                        lo, hi
                    )));
                }
                (*lo..=*hi).map(|j| base.scale(j)).collect()
            }
            Scan::Box { lo, hi } => {
                if lo.len() != hi.len() {
                    return Err(Error::DimensionMismatch(
                        "box bounds have different lengths".into(),
                    ));
                }
                if lo.iter().zip(hi).any(|(a, b)| a > b) {
                    return Err(Error::InvalidArgument("empty box range".into()));
                }
                let mut out = Vec::new();
                let mut cur = lo.clone();
                loop {
                    out.push(DivisorClass(cur.clone()));
                    // odometer increment, last coordinate fastest
                    let mut i = cur.len();
                    loop {
                        if i == 0 {
                            return check_dims(out, rank);
                        }
                        i -= 1;
                        if cur[i] < hi[i] {
                            cur[i] += 1;
                            break;
                        }
                        cur[i] = lo[i];
                    }
                }
            }
        };
        check_dims(classes, rank)
    }
}

fn check_dims(classes: Vec<DivisorClass>, rank: usize) -> Result<Vec<DivisorClass>> {
    if let Some(bad) = classes.iter().find(|d| d.dim() != rank) {
        return Err(Error::DimensionMismatch(format!(
            "scan class {} has {} coordinates, lattice rank is {}",
            bad,
            bad.dim(),
            rank
        )));
    }
    Ok(classes)
}

/// A request to evaluate one criterion over a scan of divisor classes.
#[derive(Debug, Clone)]
pub struct CheckRequest {
    pub surface: SurfaceData,
    pub curve: DivisorClass,
    pub cfg: Configuration,
    pub scan: Scan,
    pub mode: Mode,
    /// Use the statement form `E.(E+K)/2` of the almost-complex bound
    /// instead of the derivation's `E.(E-K)/2 + 1`.
    pub statement_form: bool,
    /// Caller asserts the non-vanishing hypothesis of the algebraic
    /// criterion on surfaces where no preset rule can decide it.
    pub assert_nonvanishing: bool,
}

/// Outcome of testing one divisor class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped { reason: String },
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail)
    }
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

/// One hypothesis of a criterion, with whether it held and the numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

fn assumption(name: &str, holds: bool, detail: String) -> Assumption {
    Assumption {
        name: name.into(),
        holds,
        detail,
    }
}

/// The verdict for one divisor class.
///
/// `status` is `Fail` exactly when every assumption holds and
/// `margin = lhs - rhs` is negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub divisor: Vec<i64>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub margin: Option<i64>,
    pub status: Status,
    pub assumptions: Vec<Assumption>,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub detail: Option<String>,
}

impl Verdict {
    fn skipped(divisor: &DivisorClass, reason: &str, assumptions: Vec<Assumption>) -> Self {
        Verdict {
            divisor: divisor.coords().to_vec(),
            lhs: None,
            rhs: None,
            margin: None,
            status: Status::Skipped {
                reason: reason.into(),
            },
            assumptions,
            detail: None,
        }
    }

    fn decided(
        divisor: &DivisorClass,
        lhs: i64,
        rhs: i64,
        assumptions: Vec<Assumption>,
        detail: Option<String>,
    ) -> Self {
        let margin = lhs - rhs;
        Verdict {
            divisor: divisor.coords().to_vec(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(margin),
            status: if margin < 0 {
                Status::Fail
            } else {
                Status::Pass
            },
            assumptions,
            detail,
        }
    }
}

/// Ensure the surface passes every validation finding of the given regime.
fn require_valid_surface(surface: &SurfaceData, kind: SurfaceKind) -> Result<()> {
    if let Some(f) = surface.validate_for(kind).iter().find(|f| !f.holds) {
        return Err(Error::InvalidSurface {
            finding: f.name.clone(),
            detail: f.detail.clone(),
        });
    }
    Ok(())
}

/// The algebraic and topological criteria live on projective surfaces; a
/// surface declared almost-complex is rejected even if its numbers fit.
fn require_projective(surface: &SurfaceData) -> Result<()> {
    if surface.kind() != SurfaceKind::Projective {
        return Err(Error::InvalidArgument(
            "this criterion needs a surface declared projective".into(),
        ));
    }
    Ok(())
}

/// Genus feasibility: a rational cuspidal curve in class `C` exists only if
/// the configured `sum delta_i` equals the arithmetic genus of `C`.
/// Returns `(pass, configured, required)`.
pub fn check_genus_feasibility(
    surface: &SurfaceData,
    curve: &DivisorClass,
    cfg: &Configuration,
) -> Result<(bool, u64, i64)> {
    let required = surface.required_genus(curve)?;
    let configured = cfg.g();
    Ok((configured as i64 == required, configured, required))
}

/// Evaluate the topological criterion over the scan.
pub fn check_topological(req: &CheckRequest) -> Result<Vec<Verdict>> {
    require_projective(&req.surface)?;
    require_valid_surface(&req.surface, SurfaceKind::Projective)?;
    let s = &req.surface;
    let c = &req.curve;
    let g = req.cfg.g() as i64;

    let c2 = s.self_intersection(c)?;
    let kc = s.pair(s.canonical_class(), c)?;
    let (feasible, configured, required) = check_genus_feasibility(s, c, &req.cfg)?;
    let rhs_shift = s.b1() / 2;

    let global = vec![
        assumption("pg-zero", s.pg() == 0, format!("pg = {}", s.pg())),
        assumption("c-squared-positive", c2 > 0, format!("C^2 = {}", c2)),
        assumption("kc-at-most-one", kc <= 1, format!("K.C = {}", kc)),
        assumption(
            "genus-feasible",
            feasible,
            format!("sum delta = {}, required genus = {}", configured, required),
        ),
    ];
    let first_bad = global.iter().find(|a| !a.holds).map(|a| a.name.clone());

    let mut out = Vec::new();
    for d in req.scan.expand(s.rank())? {
        let arg = s.pair(c, &d)? + 1;
        if !(0 <= arg && arg <= 2 * g) {
            let mut a = global.clone();
            a.push(assumption(
                "window",
                false,
                format!("C.D + 1 = {} not in [0, {}]", arg, 2 * g),
            ));
            out.push(Verdict::skipped(&d, "window", a));
            continue;
        }
        let mut a = global.clone();
        a.push(assumption(
            "window",
            true,
            format!("C.D + 1 = {} in [0, {}]", arg, 2 * g),
        ));
        if let Some(name) = &first_bad {
            out.push(Verdict::skipped(&d, &format!("hypothesis:{}", name), a));
            continue;
        }
        let lhs = r_value(&req.cfg, arg);
        let rhs = s.chi_divisor(&d)? + rhs_shift;
        out.push(Verdict::decided(&d, lhs, rhs, a, None));
    }
    Ok(out)
}

/// Evaluate the algebraic criterion over the scan.
pub fn check_algebraic(req: &CheckRequest) -> Result<Vec<Verdict>> {
    require_projective(&req.surface)?;
    require_valid_surface(&req.surface, SurfaceKind::Projective)?;
    let s = &req.surface;
    let c = &req.curve;

    let mut out = Vec::new();
    for d in req.scan.expand(s.rank())? {
        let cd = s.pair(c, &d)?;
        let mut a = Vec::new();
        a.push(assumption(
            "cd-nonnegative",
            cd >= 0,
            format!("C.D = {}", cd),
        ));
        let nonvanishing = match s.nonvanishing_guaranteed(c, &d) {
            Some(holds) => assumption(
                "non-vanishing",
                holds,
                if holds {
                    "preset rule: D - C is not effective".into()
                } else {
                    "preset rule: D - C is effective, a section may vanish on C".into()
                },
            ),
            None => assumption(
                "non-vanishing",
                req.assert_nonvanishing,
                if req.assert_nonvanishing {
                    "user-asserted".into()
                } else {
                    "no preset rule and not user-asserted".into()
                },
            ),
        };
        let nv_ok = nonvanishing.holds;
        a.push(nonvanishing);

        if cd < 0 {
            out.push(Verdict::skipped(&d, "hypothesis:cd-nonnegative", a));
            continue;
        }
        if !nv_ok {
            out.push(Verdict::skipped(&d, "hypothesis:non-vanishing", a));
            continue;
        }
        match s.h0(&d)? {
            None => out.push(Verdict::skipped(&d, "no-oracle", a)),
            Some(h0) => {
                let lhs = r_value(&req.cfg, cd + 1);
                out.push(Verdict::decided(&d, lhs, h0, a, None));
            }
        }
    }
    Ok(out)
}

/// Evaluate the almost-complex criterion over the scan.
pub fn check_almost_complex(req: &CheckRequest) -> Result<Vec<Verdict>> {
    require_valid_surface(&req.surface, SurfaceKind::AlmostComplex)?;
    let s = &req.surface;
    let c = &req.curve;
    let k = s.canonical_class().clone();
    let g = req.cfg.g() as i64;

    let c2 = s.self_intersection(c)?;
    let largeness = assumption(
        "largeness",
        2 * g < c2,
        format!("2g = {}, C^2 = {}", 2 * g, c2),
    );

    let mut out = Vec::new();
    for e in req.scan.expand(s.rank())? {
        if !largeness.holds {
            out.push(Verdict::skipped(&e, "largeness", vec![largeness.clone()]));
            continue;
        }
        let ce = s.pair(c, &e)?;
        let mut a = vec![largeness.clone()];
        if !(0 <= ce && ce <= 2 * g) {
            a.push(assumption(
                "window",
                false,
                format!("C.E = {} not in [0, {}]", ce, 2 * g),
            ));
            out.push(Verdict::skipped(&e, "window", a));
            continue;
        }
        a.push(assumption(
            "window",
            true,
            format!("C.E = {} in [0, {}]", ce, 2 * g),
        ));
        let rhs_proof = half_pair(s, &e, &(&e - &k))? + 1;
        let rhs_statement = half_pair(s, &e, &(&e + &k))?;
        let rhs = if req.statement_form {
            rhs_statement
        } else {
            rhs_proof
        };
        let lhs = r_value(&req.cfg, ce + 1);
        out.push(Verdict::decided(
            &e,
            lhs,
            rhs,
            a,
            Some(format!(
                "rhs derivation-form E.(E-K)/2+1 = {}, statement-form E.(E+K)/2 = {}",
                rhs_proof, rhs_statement
            )),
        ));
    }
    Ok(out)
}

/// `A.B / 2` with a parity check.
fn half_pair(s: &SurfaceData, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
    let t = s.pair(a, b)?;
    if t % 2 != 0 {
        return Err(Error::ParityViolation(format!(
            "{}.{} = {} is odd; K is not characteristic",
            a, b, t
        )));
    }
    Ok(t / 2)
}

/// Dispatch on the request's mode.
pub fn run_check(req: &CheckRequest) -> Result<Vec<Verdict>> {
    match req.mode {
        Mode::Algebraic => check_algebraic(req),
        Mode::Topological => check_topological(req),
        Mode::AlmostComplex => check_almost_complex(req),
    }
}

/// Both sides of the derivation chain, before and after the substitution
/// `D = C + K + D'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationCheck {
    /// `(C.D' + C.(C+K) + 1,  C.D + 1)`
    pub lhs_args: (i64, i64),
    /// `(D'.(D'+K)/2 + C.D' + C.(C+K)/2 + 1,  D.(D-K)/2 + 1)`
    pub rhs_values: (i64, i64),
    pub pass: bool,
}

/// Verify that the substitution `D = C + K + D'` turns the raw inequality
/// of the derivation into the final one: both the `R`-argument and the
/// right-hand side must coincide as integers. This is an exact algebraic
/// identity, so a failure indicates lattice bookkeeping is broken.
pub fn derivation_chain_check(
    surface: &SurfaceData,
    curve: &DivisorClass,
    dprime: &DivisorClass,
) -> Result<DerivationCheck> {
    let s = surface;
    let c = curve;
    if c.dim() != s.rank() || dprime.dim() != s.rank() {
        return Err(Error::DimensionMismatch(format!(
            "classes of dimension {} and {} in a rank-{} lattice",
            c.dim(),
            dprime.dim(),
            s.rank()
        )));
    }
    let k = s.canonical_class().clone();
    let d = &(c + &k) + dprime;

    let c_dp = s.pair(c, dprime)?;
    let c_ck = s.pair(c, &(c + &k))?;
    let arg_raw = c_dp + c_ck + 1;
    let arg_final = s.pair(c, &d)? + 1;

    let rhs_raw = half_pair(s, dprime, &(dprime + &k))? + c_dp + half_pair(s, c, &(c + &k))? + 1;
    let rhs_final = half_pair(s, &d, &(&d - &k))? + 1;

    Ok(DerivationCheck {
        lhs_args: (arg_raw, arg_final),
        rhs_values: (rhs_raw, rhs_final),
        pass: arg_raw == arg_final && rhs_raw == rhs_final,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{build_semigroup, CuspDescriptor};

    fn cfg_of(gen_lists: &[&[u64]]) -> Configuration {
        let cusps = gen_lists
            .iter()
            .map(|g| build_semigroup(&CuspDescriptor::Generators(g.to_vec())).unwrap())
            .collect();
        Configuration::new(cusps).unwrap()
    }

    fn dc(v: &[i64]) -> DivisorClass {
        DivisorClass(v.to_vec())
    }

    fn cp2_request(d: i64, gens: &[u64], mode: Mode, lo: i64, hi: i64) -> CheckRequest {
        CheckRequest {
            surface: SurfaceData::cp2(),
            curve: dc(&[d]),
            cfg: cfg_of(&[gens]),
            scan: Scan::Ray {
                base: dc(&[1]),
                lo,
                hi,
            },
            mode,
            statement_form: false,
            assert_nonvanishing: false,
        }
    }

    #[test]
    fn genus_feasibility_examples() {
        let cp2 = SurfaceData::cp2();
        let (ok, got, need) =
            check_genus_feasibility(&cp2, &dc(&[3]), &cfg_of(&[&[2, 3]])).unwrap();
        assert!(ok);
        assert_eq!((got, need), (1, 1));
        let (ok, got, need) =
            check_genus_feasibility(&cp2, &dc(&[4]), &cfg_of(&[&[3, 4]])).unwrap();
        assert!(ok);
        assert_eq!((got, need), (3, 3));
        let (ok, got, need) =
            check_genus_feasibility(&cp2, &dc(&[4]), &cfg_of(&[&[2, 3]])).unwrap();
        assert!(!ok);
        assert_eq!((got, need), (1, 3));
    }

    #[test]
    fn topological_cubic() {
        let req = cp2_request(3, &[2, 3], Mode::Topological, 0, 2);
        let verdicts = check_topological(&req).unwrap();
        assert_eq!(verdicts.len(), 3);
        // D = 0: window [0,2], C.D+1 = 1, R(1) = 1 >= chi(0) = 1
        assert_eq!(verdicts[0].status, Status::Pass);
        assert_eq!(verdicts[0].margin, Some(0));
        // D = H, 2H: out of window
        assert!(matches!(verdicts[1].status, Status::Skipped { ref reason } if reason == "window"));
        assert!(matches!(verdicts[2].status, Status::Skipped { .. }));
    }

    #[test]
    fn topological_quartic_and_quintic() {
        let req = cp2_request(4, &[3, 4], Mode::Topological, 1, 1);
        let v = &check_topological(&req).unwrap()[0];
        assert_eq!(v.status, Status::Pass);
        assert_eq!((v.lhs, v.rhs), (Some(3), Some(3)));

        let req = cp2_request(5, &[4, 5], Mode::Topological, 2, 2);
        let v = &check_topological(&req).unwrap()[0];
        assert_eq!(v.status, Status::Pass);
        assert_eq!((v.lhs, v.rhs), (Some(6), Some(6)));
    }

    #[test]
    fn topological_infeasible_genus_skips() {
        let req = cp2_request(4, &[2, 3], Mode::Topological, 0, 1);
        let verdicts = check_topological(&req).unwrap();
        // D = 0 is in window [0,2] but the genus gate fails
        assert!(matches!(
            verdicts[0].status,
            Status::Skipped { ref reason } if reason == "hypothesis:genus-feasible"
        ));
        // D = H has C.D+1 = 5 outside [0,2]
        assert!(matches!(
            verdicts[1].status,
            Status::Skipped { ref reason } if reason == "window"
        ));
    }

    #[test]
    fn algebraic_examples() {
        let req = cp2_request(3, &[2, 3], Mode::Algebraic, 0, 0);
        let v = &check_algebraic(&req).unwrap()[0];
        assert_eq!(v.status, Status::Pass);
        assert_eq!((v.lhs, v.rhs), (Some(1), Some(1)));

        let req = cp2_request(5, &[4, 5], Mode::Algebraic, 1, 1);
        let v = &check_algebraic(&req).unwrap()[0];
        assert_eq!(v.status, Status::Pass);
        assert_eq!(v.margin, Some(0));

        // D = 5H = C: a section may vanish on C, preset rule refuses
        let req = cp2_request(5, &[4, 5], Mode::Algebraic, 5, 5);
        let v = &check_algebraic(&req).unwrap()[0];
        assert!(matches!(
            v.status,
            Status::Skipped { ref reason } if reason == "hypothesis:non-vanishing"
        ));
    }

    #[test]
    fn algebraic_no_oracle_skips() {
        let surface =
            SurfaceData::custom(vec![vec![1]], vec![-3], 0, 0, SurfaceKind::Projective, None)
                .unwrap();
        let req = CheckRequest {
            surface,
            curve: dc(&[3]),
            cfg: cfg_of(&[&[2, 3]]),
            scan: Scan::Explicit(vec![dc(&[1])]),
            mode: Mode::Algebraic,
            statement_form: false,
            assert_nonvanishing: true,
        };
        let v = &check_algebraic(&req).unwrap()[0];
        assert!(matches!(v.status, Status::Skipped { ref reason } if reason == "no-oracle"));
        // and without the user assertion the hypothesis is not established
        let req = CheckRequest {
            assert_nonvanishing: false,
            ..req
        };
        let v = &check_algebraic(&req).unwrap()[0];
        assert!(
            matches!(v.status, Status::Skipped { ref reason } if reason == "hypothesis:non-vanishing")
        );
    }

    #[test]
    fn almost_complex_cubic() {
        let req = cp2_request(3, &[2, 3], Mode::AlmostComplex, 0, 0);
        let v = &check_almost_complex(&req).unwrap()[0];
        // E = 0: derivation form rhs = 1, R(1) = 1
        assert_eq!(v.status, Status::Pass);
        assert_eq!((v.lhs, v.rhs), (Some(1), Some(1)));
        assert!(v.detail.as_ref().unwrap().contains("statement-form"));

        let req = CheckRequest {
            statement_form: true,
            ..cp2_request(3, &[2, 3], Mode::AlmostComplex, 0, 0)
        };
        let v = &check_almost_complex(&req).unwrap()[0];
        assert_eq!(v.rhs, Some(0));
        assert_eq!(v.status, Status::Pass);
    }

    #[test]
    fn almost_complex_largeness_skips_globally() {
        // 2g = 12 >= C^2 = 9
        let req = cp2_request(3, &[4, 5], Mode::AlmostComplex, 0, 2);
        let verdicts = check_almost_complex(&req).unwrap();
        assert_eq!(verdicts.len(), 3);
        for v in verdicts {
            assert!(matches!(v.status, Status::Skipped { ref reason } if reason == "largeness"));
        }
    }

    #[test]
    fn projective_declaration_is_required() {
        let ac = SurfaceData::custom(
            vec![vec![1]],
            vec![-3],
            0,
            0,
            SurfaceKind::AlmostComplex,
            None,
        )
        .unwrap();
        let req = CheckRequest {
            surface: ac,
            curve: dc(&[3]),
            cfg: cfg_of(&[&[2, 3]]),
            scan: Scan::Explicit(vec![dc(&[0])]),
            mode: Mode::Topological,
            statement_form: false,
            assert_nonvanishing: false,
        };
        assert!(check_topological(&req).is_err());
        assert!(check_algebraic(&req).is_err());
        // the almost-complex criterion accepts it
        assert!(check_almost_complex(&req).is_ok());
    }

    #[test]
    fn invalid_surface_is_an_error() {
        let bad = SurfaceData::custom(vec![vec![1]], vec![-2], 0, 0, SurfaceKind::Projective, None)
            .unwrap();
        let req = CheckRequest {
            surface: bad,
            curve: dc(&[3]),
            cfg: cfg_of(&[&[2, 3]]),
            scan: Scan::Explicit(vec![dc(&[0])]),
            mode: Mode::Topological,
            statement_form: false,
            assert_nonvanishing: false,
        };
        assert!(matches!(
            check_topological(&req),
            Err(Error::InvalidSurface { .. })
        ));
    }

    #[test]
    fn derivation_chain_is_exact() {
        let cp2 = SurfaceData::cp2();
        let chk = derivation_chain_check(&cp2, &dc(&[3]), &dc(&[-2])).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.lhs_args.0, chk.lhs_args.1);
        // D' = -C - K gives D = 0 and rhs = 1 on both sides
        let chk = derivation_chain_check(&cp2, &dc(&[3]), &dc(&[0])).unwrap();
        assert!(chk.pass);
        let chk = derivation_chain_check(&cp2, &dc(&[5]), &dc(&[-2])).unwrap();
        assert_eq!(chk.rhs_values.0, chk.rhs_values.1);
        let f2 = SurfaceData::hirzebruch(2).unwrap();
        for f in -3..=3 {
            for b in -3..=3 {
                let chk = derivation_chain_check(&f2, &dc(&[3, 2]), &dc(&[f, b])).unwrap();
                assert!(chk.pass);
            }
        }
    }

    #[test]
    fn scan_expansion() {
        let ray = Scan::Ray {
            base: dc(&[2]),
            lo: -1,
            hi: 1,
        };
        assert_eq!(ray.expand(1).unwrap(), vec![dc(&[-2]), dc(&[0]), dc(&[2])]);
        let boxed = Scan::Box {
            lo: vec![0, 0],
            hi: vec![1, 1],
        };
        assert_eq!(
            boxed.expand(2).unwrap(),
            vec![dc(&[0, 0]), dc(&[0, 1]), dc(&[1, 0]), dc(&[1, 1])]
        );
        assert!(Scan::Explicit(vec![]).expand(1).is_err());
        assert!(boxed.expand(3).is_err());
    }
}
