//! Complex-arithmetic kernel: the extremal functions of the four classes,
//! their logarithmic derivatives `z f'(z) / f(z)` in closed form, disk images
//! of the two bilinear maps used to build the covering disks, and the
//! logarithmic-derivative bound for functions with real part above `alpha`.

use num_complex::Complex64;

use crate::classes::ClassId;
use crate::error::{Error, Result};

/// A disk in the `w`-plane with real center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: f64,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: f64, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::domain("center", center, "finite reals"));
        }
        if radius.is_nan() || radius < 0.0 || !radius.is_finite() {
            return Err(Error::domain("radius", radius, "[0, inf)"));
        }
        Ok(Disk { center, radius })
    }

    /// Leftmost real point, `center - radius`.
    pub fn left(&self) -> f64 {
        self.center - self.radius
    }

    /// Rightmost real point, `center + radius`.
    pub fn right(&self) -> f64 {
        self.center + self.radius
    }

    /// Point on the boundary circle at angle `theta`.
    pub fn boundary_point(&self, theta: f64) -> Complex64 {
        Complex64::new(self.center, 0.0) + Complex64::from_polar(self.radius, theta)
    }

    /// `n` equally spaced boundary points starting at `theta = 0`.
    pub fn boundary_samples(&self, n: usize) -> impl Iterator<Item = Complex64> + '_ {
        let step = std::f64::consts::TAU / n as f64;
        (0..n).map(move |k| self.boundary_point(k as f64 * step))
    }

    /// Closed-disk membership with an absolute slack.
    pub fn contains_with_slack(&self, w: Complex64, slack: f64) -> bool {
        (w - self.center).norm() <= self.radius + slack
    }
}

/// The two bilinear maps whose images of `|z| <= r` enter the covering disks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusKind {
    /// `z -> 1 / (1 + z)`
    ReciprocalOnePlus,
    /// `z -> (1 - z) / (1 + z)`
    Cayley,
}

fn check_unit_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::domain("r", r, "[0, 1)"))
    }
}

fn check_open_disk(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() || z.norm() >= 1.0 {
        return Err(Error::domain("|z|", z.norm(), "[0, 1)"));
    }
    Ok(())
}

/// Image of the closed disk `|z| <= r` under the given bilinear map.
pub fn mobius_disk_image(kind: MobiusKind, r: f64) -> Result<Disk> {
    check_unit_radius(r)?;
    let q = 1.0 - r * r;
    let disk = match kind {
        MobiusKind::ReciprocalOnePlus => Disk {
            center: 1.0 / q,
            radius: r / q,
        },
        MobiusKind::Cayley => Disk {
            center: (1.0 + r * r) / q,
            radius: 2.0 * r / q,
        },
    };
    Ok(disk)
}

/// Sharp bound on `|z p'(z) / p(z)|` over `|z| <= r` for `p(0) = 1`,
/// `Re p > alpha`.
pub fn logderiv_bound(alpha: f64, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::domain("alpha", alpha, "[0, 1)"));
    }
    check_unit_radius(r)?;
    Ok(2.0 * (1.0 - alpha) * r / ((1.0 - r) * (1.0 + (1.0 - 2.0 * alpha) * r)))
}

/// Value of the class's extremal function at `z`.
pub fn eval_extremal_f(class: ClassId, z: Complex64) -> Result<Complex64> {
    check_open_disk(z)?;
    let one = Complex64::new(1.0, 0.0);
    let (a, b) = (one - z, one + z);
    let value = match class {
        ClassId::F1 => z * a * a / (b * b * b),
        ClassId::F2 => z * a * a / (b * b),
        ClassId::F3 => z * a / (b * b),
        ClassId::F4 => z * a / (b * b * b),
    };
    Ok(value)
}

/// `z f'(z) / f(z)` of the class's extremal function, from its rational
/// closed form.
pub fn eval_extremal_w(class: ClassId, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && (z.re == 1.0 || z.re == -1.0) {
        return Err(Error::Pole(z.re));
    }
    check_open_disk(z)?;
    let z2 = z * z;
    let num = match class {
        ClassId::F1 => 1.0 - 5.0 * z,
        ClassId::F2 => 1.0 - 4.0 * z - z2,
        ClassId::F3 => 1.0 - 3.0 * z,
        ClassId::F4 => 1.0 - 4.0 * z + z2,
    };
    Ok(num / (1.0 - z2))
}
