//! Catalogue of target regions in the `w`-plane.
//!
//! Each region carries an open-membership predicate, a counterclockwise
//! boundary parametrization over `theta in [0, 2 pi)`, and the maximal
//! radius `rho_max(a)` of a disk centered at real `a` that is known to lie
//! inside it. All regions are symmetric about the real axis.
//!
//! Unbounded regions (half-plane, parabola, sector) are closed off for
//! boundary purposes by a fixed clipping window; membership itself is exact.

use std::f64::consts::{E, FRAC_PI_2, PI, SQRT_2, TAU};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::winding::Polyline;

/// Constant of the rational region, `k = sqrt(2) + 1`.
pub const RATIONAL_K: f64 = SQRT_2 + 1.0;

/// Half-width of the clipping window used for unbounded boundaries.
pub const CLIP: f64 = 8.0;

const PARABOLA_CLIP_V: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegionId {
    /// `Re w > alpha`, `0 <= alpha < 1`.
    HalfPlane { alpha: f64 },
    /// Right loop of `|w^2 - 1| = 1`.
    Lemniscate,
    /// `Re w > |w - 1|`.
    Parabola,
    /// `|Log w| < 1`.
    Exponential,
    /// Image of the unit disk under `1 + 4z/3 + 2z^2/3`.
    Cardioid,
    /// Image of the unit disk under `1 + sin z`.
    Sine,
    /// `|w^2 - 1| < 2|w|`, right component.
    Lune,
    /// Image of the unit disk under `1 + (zk + z^2)/(k^2 - kz)`.
    Rational,
    /// Left loop of `|(w - sqrt 2)^2 - 1| = 1`.
    ReverseLemniscate,
    /// `|Arg w| < pi gamma / 2`, `0 < gamma <= 1`.
    Sector { gamma: f64 },
    /// `|w - center| < radius`.
    JanowskiDisk { center: f64, radius: f64 },
}

impl RegionId {
    /// The ten regions of the radius table, with the given half-plane and
    /// sector parameters.
    pub fn catalogue(alpha: f64, gamma: f64) -> [RegionId; 10] {
        [
            RegionId::HalfPlane { alpha },
            RegionId::Lemniscate,
            RegionId::Parabola,
            RegionId::Exponential,
            RegionId::Cardioid,
            RegionId::Sine,
            RegionId::Lune,
            RegionId::Rational,
            RegionId::ReverseLemniscate,
            RegionId::Sector { gamma },
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            RegionId::HalfPlane { .. } => "half-plane",
            RegionId::Lemniscate => "lemniscate",
            RegionId::Parabola => "parabola",
            RegionId::Exponential => "exponential",
            RegionId::Cardioid => "cardioid",
            RegionId::Sine => "sine",
            RegionId::Lune => "lune",
            RegionId::Rational => "rational",
            RegionId::ReverseLemniscate => "reverse-lemniscate",
            RegionId::Sector { .. } => "sector",
            RegionId::JanowskiDisk { .. } => "janowski-disk",
        }
    }

    /// Named parameters, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            RegionId::HalfPlane { alpha } => vec![("alpha", alpha)],
            RegionId::Sector { gamma } => vec![("gamma", gamma)],
            RegionId::JanowskiDisk { center, radius } => vec![("c0", center), ("d", radius)],
            _ => Vec::new(),
        }
    }

    /// Regions whose primary membership test is the inverse of a univalent
    /// boundary map.
    pub fn is_mapped(&self) -> bool {
        matches!(
            self,
            RegionId::Cardioid | RegionId::Sine | RegionId::Rational
        )
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for (i, (k, v)) in self.params().iter().enumerate() {
            // 12 significant digits keeps irrational defaults readable
            let v: f64 = format!("{v:.11e}").parse().map_err(|_| fmt::Error)?;
            write!(f, "{}{k}={v}", if i == 0 { "(" } else { ", " })?;
        }
        if !self.params().is_empty() {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Interval of admissible real disk centers. `rho_max` is defined on the
/// closure, endpoints by continuous extension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterRange {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl CenterRange {
    fn closed(lo: f64, hi: f64) -> Self {
        CenterRange {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    fn open(lo: f64, hi: f64) -> Self {
        CenterRange {
            lo,
            hi,
            lo_open: true,
            hi_open: true,
        }
    }

    fn left_open(lo: f64, hi: f64) -> Self {
        CenterRange {
            lo,
            hi,
            lo_open: true,
            hi_open: false,
        }
    }

    fn right_open(lo: f64, hi: f64) -> Self {
        CenterRange {
            lo,
            hi,
            lo_open: false,
            hi_open: true,
        }
    }

    /// Whether `a` lies in the closure of the interval.
    pub fn admits(&self, a: f64) -> bool {
        a >= self.lo && a <= self.hi
    }
}

/// A fully specified target region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    id: RegionId,
}

/// Validates the parameters of `id` and returns its region.
pub fn region(id: RegionId) -> Result<Region> {
    Region::new(id)
}

impl Region {
    pub fn new(id: RegionId) -> Result<Self> {
        match id {
            RegionId::HalfPlane { alpha } if !(0.0..1.0).contains(&alpha) => {
                return Err(Error::Parameter(format!("alpha = {alpha} not in [0, 1)")))
            }
            RegionId::Sector { gamma } if !(gamma > 0.0 && gamma <= 1.0) => {
                return Err(Error::Parameter(format!("gamma = {gamma} not in (0, 1]")))
            }
            RegionId::JanowskiDisk { center, radius }
                if !(radius > 0.0 && radius.is_finite() && center.is_finite()) =>
            {
                return Err(Error::Parameter(format!(
                    "disk (c0 = {center}, d = {radius}) needs finite c0 and d > 0"
                )))
            }
            _ => {}
        }
        Ok(Region { id })
    }

    pub fn id(&self) -> RegionId {
        self.id
    }

    /// Signed membership margin: positive exactly on the open region.
    ///
    /// Analytic regions use the slack of their defining inequality; mapped
    /// regions use `1 - |z|` for the preimage `z` of `w` in the unit disk.
    pub fn margin(&self, w: Complex64) -> f64 {
        match self.id {
            RegionId::HalfPlane { alpha } => w.re - alpha,
            RegionId::Lemniscate => (1.0 - (w * w - 1.0).norm()).min(w.re),
            RegionId::Parabola => w.re - (w - 1.0).norm(),
            RegionId::Exponential => {
                if w.norm() == 0.0 {
                    -1.0
                } else {
                    1.0 - w.ln().norm()
                }
            }
            RegionId::Lune => (SQRT_2 - (w - 1.0).norm()).min((w + 1.0).norm() - SQRT_2),
            RegionId::ReverseLemniscate => {
                let s = w - SQRT_2;
                (1.0 - (s * s - 1.0).norm()).min(SQRT_2 - w.re)
            }
            RegionId::Sector { gamma } => {
                if w.norm() == 0.0 {
                    0.0
                } else {
                    gamma * FRAC_PI_2 - w.arg().abs()
                }
            }
            RegionId::JanowskiDisk { center, radius } => radius - (w - center).norm(),
            RegionId::Cardioid | RegionId::Sine | RegionId::Rational => {
                1.0 - self.preimage_modulus(w)
            }
        }
    }

    /// Open membership; boundary points are outside.
    pub fn contains(&self, w: Complex64) -> bool {
        self.margin(w) > 0.0
    }

    /// Smallest `|z|` over solutions of `phi(z) = w` for the mapped regions.
    fn preimage_modulus(&self, w: Complex64) -> f64 {
        match self.id {
            RegionId::Cardioid => {
                // (z + 1)^2 = (3w - 1)/2; the principal root gives the smaller |z|.
                let s = ((3.0 * w - 1.0) * 0.5).sqrt();
                (s - 1.0).norm()
            }
            RegionId::Sine => {
                // sin is injective on the strip |Re z| < pi/2, which holds the disk.
                (w - 1.0).asin().norm()
            }
            RegionId::Rational => {
                // z^2 + k w z - k^2 (w - 1) = 0
                let k = RATIONAL_K;
                let b = k * w;
                let c = -k * k * (w - 1.0);
                let disc = (b * b - 4.0 * c).sqrt();
                let q = if (b.conj() * disc).re >= 0.0 {
                    -(b + disc) * 0.5
                } else {
                    -(b - disc) * 0.5
                };
                let z1 = q;
                let z2 = if q.norm() == 0.0 { q } else { c / q };
                z1.norm().min(z2.norm())
            }
            _ => unreachable!("preimage requested for an unmapped region"),
        }
    }

    /// Point on the counterclockwise boundary curve, `theta in [0, 2 pi)`.
    pub fn boundary_point(&self, theta: f64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let e = Complex64::from_polar(1.0, theta);
        match self.id {
            RegionId::Lemniscate => (one + e).sqrt(),
            RegionId::ReverseLemniscate => SQRT_2 - (one + e).sqrt(),
            RegionId::Exponential => e.exp(),
            RegionId::Cardioid => cardioid_map(e),
            RegionId::Sine => sine_map(e),
            RegionId::Rational => rational_map(e),
            RegionId::JanowskiDisk { center, radius } => center + radius * e,
            RegionId::Lune => lune_boundary(theta),
            RegionId::HalfPlane { alpha } => {
                let corners = [
                    Complex64::new(alpha, -CLIP),
                    Complex64::new(CLIP, -CLIP),
                    Complex64::new(CLIP, CLIP),
                    Complex64::new(alpha, CLIP),
                ];
                closed_path_point(&corners, theta)
            }
            RegionId::Sector { gamma } => sector_boundary(gamma * FRAC_PI_2, theta),
            RegionId::Parabola => parabola_boundary(theta),
        }
    }

    /// `m` boundary samples as a closed polyline.
    pub fn boundary_polyline(&self, m: usize) -> Result<Polyline> {
        Polyline::sample(|t| self.boundary_point(t), m)
    }

    /// Ordered `(re, im)` pairs of `m` boundary samples.
    pub fn boundary_export(&self, m: usize) -> Vec<(f64, f64)> {
        let step = TAU / m as f64;
        (0..m)
            .map(|k| {
                let w = self.boundary_point(k as f64 * step);
                (w.re, w.im)
            })
            .collect()
    }

    pub fn center_range(&self) -> CenterRange {
        match self.id {
            RegionId::HalfPlane { alpha } => CenterRange::open(alpha, f64::INFINITY),
            RegionId::Lemniscate => CenterRange::closed(2.0 - SQRT_2, SQRT_2),
            RegionId::Parabola => CenterRange::open(0.5, 1.5),
            RegionId::Exponential => CenterRange::closed(1.0 / E, (E + 1.0 / E) / 2.0),
            RegionId::Cardioid => CenterRange::left_open(1.0 / 3.0, 5.0 / 3.0),
            RegionId::Sine => {
                let s = 1f64.sin();
                CenterRange::closed(1.0 - s, 1.0 + s)
            }
            RegionId::Lune => CenterRange::open(SQRT_2 - 1.0, SQRT_2 + 1.0),
            RegionId::Rational => CenterRange::left_open(2.0 * (SQRT_2 - 1.0), SQRT_2),
            RegionId::ReverseLemniscate => CenterRange::right_open(SQRT_2 / 3.0, SQRT_2),
            RegionId::Sector { .. } => CenterRange::open(0.0, f64::INFINITY),
            RegionId::JanowskiDisk { center, radius } => {
                CenterRange::closed(center - radius, center + radius)
            }
        }
    }

    /// Largest radius of a disk centered at `a` known to lie in the region.
    pub fn max_inradius(&self, a: f64) -> Result<f64> {
        if !self.center_range().admits(a) {
            return Err(Error::domain(
                "center",
                a,
                "the region's admissible centers",
            ));
        }
        let rho = match self.id {
            RegionId::HalfPlane { alpha } => a - alpha,
            RegionId::Lemniscate => SQRT_2 - 1.0 - (a - 1.0).abs(),
            RegionId::Parabola => a - 0.5,
            RegionId::Exponential => a - 1.0 / E,
            RegionId::Cardioid => (3.0 * a - 1.0) / 3.0,
            RegionId::Sine => 1f64.sin() - (a - 1.0).abs(),
            RegionId::Lune => 1.0 - (SQRT_2 - a).abs(),
            RegionId::Rational => a - 2.0 * (SQRT_2 - 1.0),
            RegionId::ReverseLemniscate => reverse_lemniscate_inradius(a),
            RegionId::Sector { gamma } => a * (PI * gamma / 2.0).sin(),
            RegionId::JanowskiDisk { center, radius } => (radius - (a - center).abs()).max(0.0),
        };
        Ok(rho.max(0.0))
    }
}

pub fn contains(region: &Region, w: Complex64) -> bool {
    region.contains(w)
}

pub fn max_inradius(region: &Region, a: f64) -> Result<f64> {
    region.max_inradius(a)
}

/// `((1 - s^2)^{1/2} - (1 - s^2))^{1/2}` with `s = sqrt 2 - a`.
pub fn reverse_lemniscate_inradius(a: f64) -> f64 {
    let s = SQRT_2 - a;
    let t = 1.0 - s * s;
    (t.sqrt() - t).max(0.0).sqrt()
}

pub fn cardioid_map(z: Complex64) -> Complex64 {
    1.0 + z * (4.0 / 3.0) + z * z * (2.0 / 3.0)
}

pub fn sine_map(z: Complex64) -> Complex64 {
    1.0 + z.sin()
}

pub fn rational_map(z: Complex64) -> Complex64 {
    let k = RATIONAL_K;
    1.0 + (z * k + z * z) / (k * k - k * z)
}

// Outer arc |w - 1| = sqrt 2 from -i to i over the first half of theta,
// inner arc |w + 1| = sqrt 2 from i back to -i over the second half.
fn lune_boundary(theta: f64) -> Complex64 {
    let t = theta / PI;
    if t < 1.0 {
        let phi = -0.75 * PI + 1.5 * PI * t;
        1.0 + Complex64::from_polar(SQRT_2, phi)
    } else {
        let phi = 0.25 * PI - 0.5 * PI * (t - 1.0);
        -1.0 + Complex64::from_polar(SQRT_2, phi)
    }
}

// Parabola u = (1 + v^2)/2 traversed from v = V down to v = -V, closed by
// the vertical chord at u = (1 + V^2)/2. Parameter split by arc length.
fn parabola_boundary(theta: f64) -> Complex64 {
    let v_max = PARABOLA_CLIP_V;
    let u_max = (1.0 + v_max * v_max) / 2.0;
    // arc length of u = (1 + v^2)/2 over [0, V]
    let half_arc = 0.5 * (v_max * (1.0 + v_max * v_max).sqrt() + v_max.asinh());
    let arc = 2.0 * half_arc;
    let chord = 2.0 * v_max;
    let s = theta / TAU * (arc + chord);
    if s < arc {
        // invert arc length from the top; signed length from the vertex
        let target = half_arc - s;
        let v = invert_parabola_arc(target);
        Complex64::new((1.0 + v * v) / 2.0, v)
    } else {
        let v = -v_max + (s - arc);
        Complex64::new(u_max, v)
    }
}

fn invert_parabola_arc(target: f64) -> f64 {
    let arc = |v: f64| 0.5 * (v * (1.0 + v * v).sqrt() + v.asinh());
    let (mut lo, mut hi) = (-PARABOLA_CLIP_V, PARABOLA_CLIP_V);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if arc(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

// Lower ray out from the origin, arc of radius CLIP, upper ray back in.
fn sector_boundary(half_angle: f64, theta: f64) -> Complex64 {
    let arc = 2.0 * half_angle * CLIP;
    let total = 2.0 * CLIP + arc;
    let s = theta / TAU * total;
    if s < CLIP {
        Complex64::from_polar(s, -half_angle)
    } else if s < CLIP + arc {
        Complex64::from_polar(CLIP, -half_angle + (s - CLIP) / CLIP)
    } else {
        Complex64::from_polar(total - s, half_angle)
    }
}

fn closed_path_point(corners: &[Complex64], theta: f64) -> Complex64 {
    let n = corners.len();
    let lengths: Vec<f64> = (0..n)
        .map(|i| (corners[(i + 1) % n] - corners[i]).norm())
        .collect();
    let total: f64 = lengths.iter().sum();
    let mut s = theta / TAU * total;
    for i in 0..n {
        if s <= lengths[i] {
            let dir = (corners[(i + 1) % n] - corners[i]) / lengths[i];
            return corners[i] + dir * s;
        }
        s -= lengths[i];
    }
    corners[0]
}
