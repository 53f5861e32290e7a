//! The four ratio-characterized classes as parametric covering disks.
//!
//! For `f` in a class and `|z| <= r`, the value `z f'(z) / f(z)` lies in the
//! disk returned by [`disk_at`]. Every radius computation in this crate uses
//! that disk as the sufficient bound.

use std::fmt;
use std::str::FromStr;

use crate::analytic::Disk;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    /// `f/g` and `(1+z)g/z` both have positive real part.
    F1,
    /// `|f/g - 1| < 1` with `(1+z)g/z` of positive real part.
    F2,
    /// `(1+z)f/z` has positive real part.
    F3,
    /// `(1+z)^2 f/z` has positive real part.
    F4,
}

impl ClassId {
    pub const ALL: [ClassId; 4] = [ClassId::F1, ClassId::F2, ClassId::F3, ClassId::F4];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::F1 => "f1",
            ClassId::F2 => "f2",
            ClassId::F3 => "f3",
            ClassId::F4 => "f4",
        }
    }

    /// Center of the covering disk at radius `r`.
    pub fn center(self, r: f64) -> f64 {
        let q = 1.0 - r * r;
        match self {
            ClassId::F4 => (1.0 + r * r) / q,
            _ => 1.0 / q,
        }
    }

    /// Radius of the covering disk at radius `r`.
    pub fn radius(self, r: f64) -> f64 {
        let q = 1.0 - r * r;
        match self {
            ClassId::F1 => 5.0 * r / q,
            ClassId::F2 => (4.0 * r + r * r) / q,
            ClassId::F3 => 3.0 * r / q,
            ClassId::F4 => 4.0 * r / q,
        }
    }

    /// Radius at which the covering disk first reaches `w = 0`.
    pub fn univalence_radius(self) -> f64 {
        match self {
            ClassId::F1 => 0.2,
            ClassId::F2 => 5f64.sqrt() - 2.0,
            ClassId::F3 => 1.0 / 3.0,
            ClassId::F4 => 2.0 - 3f64.sqrt(),
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(ClassId::F1),
            "f2" => Ok(ClassId::F2),
            "f3" => Ok(ClassId::F3),
            "f4" => Ok(ClassId::F4),
            other => Err(Error::Parameter(format!("unknown class `{other}`"))),
        }
    }
}

/// Covering disk of `{z f'(z)/f(z) : |z| <= r}` for every member of the class.
pub fn disk_at(class: ClassId, r: f64) -> Result<Disk> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::domain("r", r, "[0, 1)"));
    }
    Ok(Disk {
        center: class.center(r),
        radius: class.radius(r),
    })
}

pub fn univalence_radius(class: ClassId) -> f64 {
    class.univalence_radius()
}

/// Largest `|w - 1|` over the covering disk: `|center - 1| + radius`.
pub fn max_dist_to_one(class: ClassId, r: f64) -> Result<f64> {
    let disk = disk_at(class, r)?;
    Ok((disk.center - 1.0).abs() + disk.radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{logderiv_bound, mobius_disk_image, MobiusKind};

    // Independent route: bilinear-map disk plus one logarithmic-derivative
    // bound per Caratheodory factor.
    fn disk_from_parts(class: ClassId, r: f64) -> Disk {
        let (kind, alphas): (_, &[f64]) = match class {
            ClassId::F1 => (MobiusKind::ReciprocalOnePlus, &[0.0, 0.0]),
            ClassId::F2 => (MobiusKind::ReciprocalOnePlus, &[0.0, 0.5]),
            ClassId::F3 => (MobiusKind::ReciprocalOnePlus, &[0.0]),
            ClassId::F4 => (MobiusKind::Cayley, &[0.0]),
        };
        let base = mobius_disk_image(kind, r).unwrap();
        let extra: f64 = alphas.iter().map(|&a| logderiv_bound(a, r).unwrap()).sum();
        Disk {
            center: base.center,
            radius: base.radius + extra,
        }
    }

    #[test]
    fn disk_matches_decomposition() {
        for class in ClassId::ALL {
            for k in 0..100 {
                let r = k as f64 / 101.0;
                let a = disk_at(class, r).unwrap();
                let b = disk_from_parts(class, r);
                let scale = a.center.max(a.radius);
                assert!((a.center - b.center).abs() < 1e-13 * scale, "{class} r={r}");
                assert!((a.radius - b.radius).abs() < 1e-13 * scale, "{class} r={r}");
            }
        }
    }

    #[test]
    fn disk_examples() {
        let d = disk_at(ClassId::F1, 0.2).unwrap();
        assert!((d.center - 25.0 / 24.0).abs() < 1e-15);
        assert!((d.radius - 25.0 / 24.0).abs() < 1e-15);
        assert!(d.left().abs() < 1e-15);
        assert_eq!(
            disk_at(ClassId::F3, 0.0).unwrap(),
            Disk::new(1.0, 0.0).unwrap()
        );
        let d = disk_at(ClassId::F4, 2.0 - 3f64.sqrt()).unwrap();
        assert!(d.left().abs() < 1e-15);
        assert!(disk_at(ClassId::F2, 1.0).is_err());
    }

    #[test]
    fn univalence_radii() {
        assert_eq!(univalence_radius(ClassId::F1), 0.2);
        assert!((univalence_radius(ClassId::F2) - 0.236_067_977_499_79).abs() < 1e-13);
        assert!((univalence_radius(ClassId::F3) - 1.0 / 3.0).abs() < 1e-16);
        assert!((univalence_radius(ClassId::F4) - 0.267_949_192_431_12).abs() < 1e-13);
    }

    #[test]
    fn max_dist_to_one_forms() {
        let r: f64 = 0.1;
        let q = 1.0 - r * r;
        assert!((max_dist_to_one(ClassId::F1, r).unwrap() - 0.51 / 0.99).abs() < 1e-15);
        assert!(
            (max_dist_to_one(ClassId::F2, r).unwrap() - (4.0 * r + 2.0 * r * r) / q).abs() < 1e-15
        );
        assert!((max_dist_to_one(ClassId::F3, r).unwrap() - (3.0 * r + r * r) / q).abs() < 1e-15);
        assert!(
            (max_dist_to_one(ClassId::F4, r).unwrap() - (4.0 * r + 2.0 * r * r) / q).abs() < 1e-15
        );
        assert_eq!(max_dist_to_one(ClassId::F2, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn class_round_trips_through_str() {
        for class in ClassId::ALL {
            assert_eq!(class.as_str().parse::<ClassId>().unwrap(), class);
        }
        assert!("f5".parse::<ClassId>().is_err());
    }
}
