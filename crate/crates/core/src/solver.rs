//! Radius computation: bisection on the disk-containment condition, closed
//! forms, and reconciliation of the two.

use std::f64::consts::{E, FRAC_PI_2, SQRT_2};
use std::fmt;

use crate::classes::ClassId;
use crate::error::{Error, Result};
use crate::regions::{Region, RegionId};

pub const DEFAULT_TOL: f64 = 1e-14;

/// Residual above which a closed form no longer counts as agreeing.
pub const AGREEMENT_TOL: f64 = 1e-10;

const MAX_BISECTIONS: usize = 200;

/// Gap between a tabulated decimal and its formula that rounding or
/// truncation to four places cannot explain.
const TABULATION_GAP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Attained by the class's extremal function.
    Sharp,
    /// Only a lower bound on the true radius is claimed.
    LowerBound,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Sharp => "sharp",
            Status::LowerBound => "lower-bound",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A discrepancy attached to a radius row.
#[derive(Debug, Clone, PartialEq)]
pub struct Flag {
    pub code: &'static str,
    pub note: String,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.note)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult {
    pub class: ClassId,
    pub region: RegionId,
    pub numeric: f64,
    pub closed_form: Option<f64>,
    /// `|numeric - closed_form|`, zero when there is no closed form.
    pub residual: f64,
    pub status: Status,
    pub flags: Vec<Flag>,
}

impl RadiusResult {
    pub fn is_flagged(&self) -> bool {
        !self.flags.is_empty()
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if (1e-14..=1e-6).contains(&tol) {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "tol = {tol:e} not in [1e-14, 1e-6]"
        )))
    }
}

/// Largest `r` in `(0, univalence_radius]` whose covering disk lies in the
/// region's inscribed disk `|w - center(r)| <= rho_max(center(r))`.
pub fn disk_radius(class: ClassId, region: &Region, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    let range = region.center_range();
    let feasible = |r: f64| {
        let a = class.center(r);
        range.admits(a)
            && match region.max_inradius(a) {
                Ok(rho) => class.radius(r) <= rho,
                Err(_) => false,
            }
    };
    let start = class.center(0.0);
    if !range.admits(start) || region.max_inradius(start)? <= 0.0 {
        return Err(Error::NoSolution(format!(
            "{class} covering disk is not interior to {} near r = 0",
            region.id()
        )));
    }
    let upper = class.univalence_radius();
    if feasible(upper) {
        return Ok(upper);
    }
    let (mut lo, mut hi) = (0.0, upper);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol * upper {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Solves for the radius and reconciles it with the closed form.
pub fn solve_radius(class: ClassId, region: RegionId, tol: f64) -> Result<RadiusResult> {
    let reg = Region::new(region)?;
    let numeric = disk_radius(class, &reg, tol)?;
    let closed_form = closed_form_radius(class, region);
    let residual = closed_form.map_or(0.0, |c| (numeric - c).abs());
    let status = status_of(class, region, numeric);
    let mut flags = Vec::new();

    let reference = closed_form.unwrap_or(numeric);
    if let Some(printed) = tabulated_decimal(class, region) {
        if (printed - reference).abs() >= TABULATION_GAP {
            flags.push(Flag {
                code: "tabulated-decimal",
                note: format!(
                    "tabulated value {printed} disagrees with its formula, {reference:.6}"
                ),
            });
        }
    }
    match region {
        RegionId::HalfPlane { alpha } if alpha == 0.0 && class == ClassId::F4 => flags.push(Flag {
            code: "univalence-decimal",
            note: "univalence radius 2 - sqrt 3 = 0.267949 is also printed as 0.276949".into(),
        }),
        RegionId::Sector { .. } if class == ClassId::F2 => flags.push(Flag {
            code: "ambiguous-closed-form",
            note: "closed form sin(pi g/2)/(2 + sqrt(4 + sin(pi g/2)) is unbalanced; \
                   read as s/(2 + sqrt(4 + s)), s = sin(pi g/2)"
                .into(),
        }),
        _ => {}
    }

    Ok(RadiusResult {
        class,
        region,
        numeric,
        closed_form,
        residual,
        status,
        flags,
    })
}

/// Which real point, `+R` or `-R`, the extremal function sends onto the
/// region boundary.
pub fn touch_sign(class: ClassId, region: RegionId, r: f64) -> f64 {
    match region {
        RegionId::Lemniscate | RegionId::Sine => -1.0,
        RegionId::JanowskiDisk { center, .. } if class.center(r) >= center => -1.0,
        _ => 1.0,
    }
}

fn status_of(class: ClassId, region: RegionId, r: f64) -> Status {
    match region {
        RegionId::Sector { .. } => Status::LowerBound,
        RegionId::Lemniscate | RegionId::Sine | RegionId::ReverseLemniscate
            if class == ClassId::F2 =>
        {
            Status::LowerBound
        }
        // The second class's extremal value at -r stops short of center + radius.
        RegionId::JanowskiDisk { .. }
            if class == ClassId::F2 && touch_sign(class, region, r) < 0.0 =>
        {
            Status::LowerBound
        }
        _ => Status::Sharp,
    }
}

/// Closed-form radius where one is known; the reverse lemniscate's is the
/// root of a polynomial-radical equation, found by bracketing.
pub fn closed_form_radius(class: ClassId, region: RegionId) -> Option<f64> {
    let s1 = 1f64.sin();
    let r2 = SQRT_2;
    let value = match region {
        RegionId::HalfPlane { alpha } => return starlike_order_radius(class, alpha).ok(),
        RegionId::Sector { gamma } => return strong_starlike_closed_form(class, gamma).ok(),
        RegionId::JanowskiDisk { .. } => return None,
        RegionId::ReverseLemniscate => return reverse_lemniscate_root(class),
        RegionId::Lemniscate => match class {
            ClassId::F1 => (2.0 * r2 - 2.0) / (5.0 + (33.0 - 4.0 * r2).sqrt()),
            ClassId::F2 | ClassId::F4 => (5f64.sqrt() - 2.0) / (1.0 + r2),
            ClassId::F3 => (2.0 * r2 - 2.0) / (3.0 + (9.0 - 4.0 * r2 * (1.0 - r2)).sqrt()),
        },
        RegionId::Parabola => match class {
            ClassId::F1 => 1.0 / (5.0 + 2.0 * 6f64.sqrt()),
            ClassId::F2 => 1.0 / (17f64.sqrt() + 4.0),
            ClassId::F3 => 1.0 / (3.0 + 2.0 * r2),
            ClassId::F4 => 1.0 / (4.0 + 13f64.sqrt()),
        },
        RegionId::Exponential => match class {
            ClassId::F1 => (2.0 * E - 2.0) / (5.0 * E + (25.0 * E * E + 4.0 * (1.0 - E)).sqrt()),
            ClassId::F2 => (2.0 * E - 2.0) / (4.0 * E + (20.0 * E * E - 8.0 * E + 4.0).sqrt()),
            ClassId::F3 => (2.0 * E - 2.0) / (3.0 * E + (9.0 * E * E + 4.0 * (1.0 - E)).sqrt()),
            ClassId::F4 => (E - 1.0) / (2.0 * E + (3.0 * E * E + 1.0).sqrt()),
        },
        RegionId::Cardioid => match class {
            ClassId::F1 => 4.0 / (15.0 + 217f64.sqrt()),
            ClassId::F2 => 1.0 / (10f64.sqrt() + 3.0),
            ClassId::F3 => 4.0 / (9.0 + 73f64.sqrt()),
            ClassId::F4 => 1.0 / (3.0 + 7f64.sqrt()),
        },
        RegionId::Sine => match class {
            ClassId::F1 => 2.0 * s1 / (5.0 + (25.0 + 4.0 * s1 * (1.0 + s1)).sqrt()),
            ClassId::F2 | ClassId::F4 => s1 / (2.0 + (4.0 + s1 * (2.0 + s1)).sqrt()),
            ClassId::F3 => 2.0 * s1 / (3.0 + (9.0 + 4.0 * s1 * (1.0 + s1)).sqrt()),
        },
        RegionId::Lune => match class {
            ClassId::F1 => (4.0 - 2.0 * r2) / (5.0 + (41.0 - 12.0 * r2).sqrt()),
            ClassId::F2 => (2.0 - r2) / (2.0 + (10.0 - 4.0 * r2).sqrt()),
            ClassId::F3 => (4.0 - 2.0 * r2) / (3.0 + (25.0 - 12.0 * r2).sqrt()),
            ClassId::F4 => (r2 - 1.0) / (r2 + (3.0 - r2).sqrt()),
        },
        RegionId::Rational => match class {
            ClassId::F1 => (6.0 - 4.0 * r2) / (5.0 + (81.0 - 40.0 * r2).sqrt()),
            ClassId::F2 => (3.0 - 2.0 * r2) / (2.0 + (21.0 - 12.0 * r2).sqrt()),
            ClassId::F3 => (6.0 - 4.0 * r2) / (3.0 + (65.0 - 40.0 * r2).sqrt()),
            ClassId::F4 => (3.0 - 2.0 * r2) / (2.0 + (15.0 - 8.0 * r2).sqrt()),
        },
    };
    Some(value)
}

/// Left-hand side of the reverse-lemniscate radius equation; its smallest
/// positive root is the radius.
pub fn reverse_lemniscate_equation(class: ClassId, r: f64) -> f64 {
    let r2 = SQRT_2;
    let q = r * r - 1.0;
    match class {
        ClassId::F4 => {
            let lin = 1.0 - r2 + (1.0 + r2) * r * r;
            16.0 * r * r + q * q - lin * lin
                + q * (2.0 * r2 - 2.0 - 2.0 * (1.0 + r2) * r.powi(4))
                    .max(0.0)
                    .sqrt()
        }
        _ => {
            let lead = match class {
                ClassId::F1 => 25.0 * r * r,
                ClassId::F2 => (r * (r + 4.0)).powi(2),
                _ => 9.0 * r * r,
            };
            let root = ((r * r + r2) * (2.0 - r2 - r * r)).max(0.0).sqrt();
            let tail = 1.0 + r2 * q;
            lead + q * q + q * root - tail * tail
        }
    }
}

fn reverse_lemniscate_root(class: ClassId) -> Option<f64> {
    let f = |r: f64| reverse_lemniscate_equation(class, r);
    let upper = class.univalence_radius();
    let steps = 4096;
    let mut prev = (0.0, f(0.0));
    for k in 1..=steps {
        let r = upper * k as f64 / steps as f64;
        let v = f(r);
        if prev.1.signum() != v.signum() {
            let (mut lo, mut hi) = (prev.0, r);
            let lo_sign = prev.1.signum();
            for _ in 0..MAX_BISECTIONS {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if f(mid).signum() == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Some(0.5 * (lo + hi));
        }
        prev = (r, v);
    }
    None
}

/// Radius of starlikeness of order `alpha`.
pub fn starlike_order_radius(class: ClassId, alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::domain("alpha", alpha, "[0, 1)"));
    }
    let b = 1.0 - alpha;
    let value = match class {
        ClassId::F1 => 2.0 * b / (5.0 + (25.0 - 4.0 * alpha * b).sqrt()),
        ClassId::F2 => b / (2.0 + (4.0 + b * b).sqrt()),
        ClassId::F3 => 2.0 * b / (3.0 + (9.0 - 4.0 * alpha * b).sqrt()),
        ClassId::F4 => b / (2.0 + (3.0 + alpha * alpha).sqrt()),
    };
    Ok(value)
}

fn strong_starlike_closed_form(class: ClassId, gamma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::domain("gamma", gamma, "(0, 1]"));
    }
    let s = (gamma * FRAC_PI_2).sin();
    let value = match class {
        ClassId::F1 => s / 5.0,
        ClassId::F2 => s / (2.0 + (4.0 + s).sqrt()),
        ClassId::F3 => s / 3.0,
        ClassId::F4 => s / (2.0 + (4.0 - s * s).sqrt()),
    };
    Ok(value)
}

/// Radius of strong starlikeness of order `gamma`.
pub fn strong_starlike_radius(class: ClassId, gamma: f64) -> Result<RadiusResult> {
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::domain("gamma", gamma, "(0, 1]"));
    }
    solve_radius(class, RegionId::Sector { gamma }, DEFAULT_TOL)
}

/// Largest `r` with `|center(r) - c0| + radius(r) <= d`.
pub fn janowski_disk_radius(class: ClassId, c0: f64, d: f64) -> Result<f64> {
    if d.is_nan() || d <= 0.0 {
        return Err(Error::domain("d", d, "(0, inf)"));
    }
    let reg = Region::new(RegionId::JanowskiDisk {
        center: c0,
        radius: d,
    })?;
    disk_radius(class, &reg, DEFAULT_TOL)
}

/// The 4 x 10 radius table for the given half-plane and sector parameters.
pub fn radius_table(alpha: f64, gamma: f64, tol: f64) -> Result<Vec<RadiusResult>> {
    let mut rows = Vec::with_capacity(40);
    for class in ClassId::ALL {
        for region in RegionId::catalogue(alpha, gamma) {
            rows.push(solve_radius(class, region, tol)?);
        }
    }
    Ok(rows)
}

/// The two disk rows tied to equalities among the first class's radii:
/// `|w - 1| < 1/2`, claimed equal to the parabola radius, and
/// `|w - 1| < sqrt 2 - 1`, equal to the lemniscate radius.
pub fn disk_equality_rows(tol: f64) -> Result<Vec<RadiusResult>> {
    let class = ClassId::F1;
    let half = RegionId::JanowskiDisk {
        center: 1.0,
        radius: 0.5,
    };
    let mut first = solve_radius(class, half, tol)?;
    let claimed = closed_form_radius(class, RegionId::Parabola);
    first.closed_form = claimed;
    first.residual = claimed.map_or(0.0, |c| (first.numeric - c).abs());
    first.flags.push(Flag {
        code: "claimed-equality",
        note: format!(
            "claimed equal to the parabola radius 5 - 2 sqrt 6 = {:.6}; disk containment gives (2 sqrt 7 - 5)/3 = {:.6}",
            claimed.unwrap_or(f64::NAN),
            first.numeric
        ),
    });

    let lem = RegionId::JanowskiDisk {
        center: 1.0,
        radius: SQRT_2 - 1.0,
    };
    let mut second = solve_radius(class, lem, tol)?;
    second.closed_form = closed_form_radius(class, RegionId::Lemniscate);
    second.residual = second
        .closed_form
        .map_or(0.0, |c| (second.numeric - c).abs());
    Ok(vec![first, second])
}

/// Four-place decimals printed alongside the closed forms.
pub fn tabulated_decimal(class: ClassId, region: RegionId) -> Option<f64> {
    use ClassId::*;
    use RegionId::*;
    let v = match (class, region) {
        (F1, Lemniscate) => 0.0809,
        (F1, Parabola) => 0.1010,
        (F1, Exponential) => 0.1276,
        (F1, Cardioid) => 0.1345,
        (F1, Sine) => 0.1589,
        (F1, Lune) => 0.1183,
        (F1, Rational) => 0.0342,
        (F1, ReverseLemniscate) => 0.0566,
        (F2, Lemniscate) => 0.0977,
        (F2, Parabola) => 0.1231,
        (F2, Exponential) => 0.1543,
        (F2, Cardioid) => 0.1623,
        (F2, Sine) => 0.1858,
        (F2, Lune) => 0.1434,
        (F2, Rational) => 0.0428,
        (F2, ReverseLemniscate) => 0.0692,
        (F3, Lemniscate) => 0.1301,
        (F3, Parabola) => 0.1716,
        (F3, Exponential) => 0.2165,
        (F3, Cardioid) => 0.2279,
        (F3, Sine) => 0.2439,
        (F3, Lune) => 0.2008,
        (F3, Rational) => 0.0581,
        (F3, ReverseLemniscate) => 0.0926,
        (F4, Lemniscate) => 0.9778,
        (F4, Parabola) => 0.1315,
        (F4, Exponential) => 0.1676,
        (F4, Cardioid) => 0.1771,
        (F4, Sine) => 0.1858,
        (F4, Lune) => 0.1549,
        (F4, Rational) => 0.0438,
        (F4, ReverseLemniscate) => 0.0694,
        _ => return None,
    };
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_examples() {
        let r = solve_radius(ClassId::F1, RegionId::Parabola, DEFAULT_TOL).unwrap();
        assert!((r.numeric - (5.0 - 2.0 * 6f64.sqrt())).abs() < 1e-12);
        let r = solve_radius(ClassId::F3, RegionId::Parabola, DEFAULT_TOL).unwrap();
        assert!((r.numeric - (3.0 - 2.0 * SQRT_2)).abs() < 1e-12);
        let r = solve_radius(ClassId::F2, RegionId::Cardioid, DEFAULT_TOL).unwrap();
        assert!((r.numeric - (10f64.sqrt() - 3.0)).abs() < 1e-12);
    }

    #[test]
    fn tolerance_is_validated() {
        for tol in [1e-15, 1e-5, f64::NAN] {
            assert!(matches!(
                solve_radius(ClassId::F1, RegionId::Parabola, tol),
                Err(Error::Parameter(_))
            ));
        }
    }

    #[test]
    fn unflagged_closed_forms_agree() {
        for row in radius_table(0.0, 1.0, DEFAULT_TOL).unwrap() {
            let closed = row.closed_form.expect("catalogue rows have closed forms");
            let flagged_decimal = row.flags.iter().any(|f| f.code == "tabulated-decimal");
            if !flagged_decimal {
                assert!(
                    row.residual <= AGREEMENT_TOL,
                    "{} {}: {:e}",
                    row.class,
                    row.region,
                    row.residual
                );
            }
            assert!(
                (row.numeric - closed).abs() <= AGREEMENT_TOL,
                "{} {}",
                row.class,
                row.region
            );
            assert!(row.numeric > 0.0 && row.numeric <= row.class.univalence_radius());
        }
    }

    #[test]
    fn decimal_flags_are_raised() {
        let f4 = solve_radius(ClassId::F4, RegionId::Lemniscate, DEFAULT_TOL).unwrap();
        assert!(f4.flags.iter().any(|f| f.code == "tabulated-decimal"));
        assert!((f4.numeric - 0.097783).abs() < 1e-6);
        let f4 =
            solve_radius(ClassId::F4, RegionId::HalfPlane { alpha: 0.0 }, DEFAULT_TOL).unwrap();
        assert!(f4.flags.iter().any(|f| f.code == "univalence-decimal"));
        let f1 = solve_radius(ClassId::F1, RegionId::Parabola, DEFAULT_TOL).unwrap();
        assert!(f1.flags.is_empty());
    }

    #[test]
    fn statuses() {
        let lb = |c, r| solve_radius(c, r, DEFAULT_TOL).unwrap().status == Status::LowerBound;
        assert!(lb(ClassId::F2, RegionId::Lemniscate));
        assert!(lb(ClassId::F2, RegionId::Sine));
        assert!(lb(ClassId::F2, RegionId::ReverseLemniscate));
        assert!(lb(ClassId::F3, RegionId::Sector { gamma: 0.5 }));
        assert!(!lb(ClassId::F1, RegionId::Lemniscate));
        assert!(!lb(ClassId::F2, RegionId::Lune));
    }

    #[test]
    fn order_examples() {
        assert!((starlike_order_radius(ClassId::F1, 0.0).unwrap() - 0.2).abs() < 1e-16);
        let p = starlike_order_radius(ClassId::F1, 0.5).unwrap();
        assert!((p - (5.0 - 2.0 * 6f64.sqrt())).abs() < 1e-15);
        assert!(
            (starlike_order_radius(ClassId::F2, 0.0).unwrap() - (5f64.sqrt() - 2.0)).abs() < 1e-15
        );
        assert!(starlike_order_radius(ClassId::F2, 1.0).is_err());
        assert!(starlike_order_radius(ClassId::F2, -0.5).is_err());
    }

    #[test]
    fn strong_starlike_examples() {
        let r = strong_starlike_radius(ClassId::F1, 1.0).unwrap();
        assert!((r.numeric - 0.2).abs() < 1e-13);
        assert_eq!(r.status, Status::LowerBound);
        let r = strong_starlike_radius(ClassId::F4, 1.0).unwrap();
        assert!((r.numeric - (2.0 - 3f64.sqrt())).abs() < 1e-13);
        let r = strong_starlike_radius(ClassId::F1, 0.5).unwrap();
        assert!((r.numeric - SQRT_2 / 10.0).abs() < 1e-12);
        assert!(strong_starlike_radius(ClassId::F1, 0.0).is_err());
        assert!(strong_starlike_radius(ClassId::F1, 1.5).is_err());
    }

    #[test]
    fn janowski_examples() {
        let lem = closed_form_radius(ClassId::F1, RegionId::Lemniscate).unwrap();
        assert!(
            (janowski_disk_radius(ClassId::F1, 1.0, SQRT_2 - 1.0).unwrap() - lem).abs() < 1e-10
        );
        let half = janowski_disk_radius(ClassId::F1, 1.0, 0.5).unwrap();
        // positive root of 3r^2 + 10r - 1 = 0
        assert!((half - (2.0 * 7f64.sqrt() - 5.0) / 3.0).abs() < 1e-12);
        assert!(janowski_disk_radius(ClassId::F1, 1.0, 1e-9).unwrap() < 1e-9);
        assert!(janowski_disk_radius(ClassId::F1, 1.0, 0.0).is_err());
        assert!(matches!(
            janowski_disk_radius(ClassId::F1, 5.0, 0.5),
            Err(Error::NoSolution(_))
        ));
    }

    #[test]
    fn disk_equality_rows_carry_flag_only_on_first() {
        let rows = disk_equality_rows(DEFAULT_TOL).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].flags.iter().any(|f| f.code == "claimed-equality"));
        assert!(rows[1].flags.is_empty());
        assert!(rows[1].residual < 1e-10);
    }

    #[test]
    fn reverse_lemniscate_roots() {
        let f1 = closed_form_radius(ClassId::F1, RegionId::ReverseLemniscate).unwrap();
        assert!((f1 - 0.0566).abs() < 5e-5);
        let f3 = closed_form_radius(ClassId::F3, RegionId::ReverseLemniscate).unwrap();
        assert!((f3 - 0.0926).abs() < 1e-4);
        for class in ClassId::ALL {
            let root = closed_form_radius(class, RegionId::ReverseLemniscate).unwrap();
            assert!(reverse_lemniscate_equation(class, root).abs() < 1e-12);
        }
    }
}
