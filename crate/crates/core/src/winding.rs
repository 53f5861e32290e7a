//! Sampled boundary polylines: winding-number membership and distances.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points closer than this to a sampled edge are not classified.
pub const EDGE_TOLERANCE: f64 = 1e-9;

pub const MIN_SAMPLES: usize = 64;

/// Closed polyline through `m` samples of a boundary curve `theta -> w`,
/// `theta = 2 pi k / m`.
#[derive(Debug, Clone)]
pub struct Polyline {
    points: Vec<Complex64>,
}

/// Winding number and distance of a query point, computed in one pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub winding: i32,
    pub distance: f64,
}

impl Polyline {
    pub fn sample<F>(boundary: F, m: usize) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        if m < MIN_SAMPLES {
            return Err(Error::Parameter(format!(
                "need at least {MIN_SAMPLES} boundary samples, got {m}"
            )));
        }
        let step = TAU / m as f64;
        let points = (0..m).map(|k| boundary(k as f64 * step)).collect();
        Ok(Polyline { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let n = self.points.len();
        (0..n).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    /// Winding number about `w` together with the distance from `w` to the
    /// polyline.
    pub fn classify(&self, w: Complex64) -> Classification {
        let mut winding = 0;
        let mut distance = f64::INFINITY;
        for (a, b) in self.edges() {
            distance = distance.min(segment_distance(w, a, b));
            if a.im <= w.im {
                if b.im > w.im && is_left(a, b, w) > 0.0 {
                    winding += 1;
                }
            } else if b.im <= w.im && is_left(a, b, w) < 0.0 {
                winding -= 1;
            }
        }
        Classification { winding, distance }
    }

    pub fn winding_number(&self, w: Complex64) -> Result<i32> {
        let c = self.classify(w);
        if c.distance <= EDGE_TOLERANCE {
            return Err(Error::Indeterminate {
                re: w.re,
                im: w.im,
                tol: EDGE_TOLERANCE,
            });
        }
        Ok(c.winding)
    }

    /// Interior iff the polyline winds once around `w`.
    pub fn contains(&self, w: Complex64) -> Result<bool> {
        Ok(self.winding_number(w)? == 1)
    }

    pub fn distance(&self, w: Complex64) -> f64 {
        self.edges()
            .map(|(a, b)| segment_distance(w, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance between the polyline and the circle `|w - center| = radius`,
    /// with the polyline point that attains it.
    pub fn distance_to_circle(&self, center: Complex64, radius: f64) -> (f64, Complex64) {
        let mut best = (f64::INFINITY, self.points[0]);
        for (a, b) in self.edges() {
            let candidate = segment_circle_distance(a, b, center, radius);
            if candidate.0 < best.0 {
                best = candidate;
            }
        }
        best
    }
}

/// Membership by winding number of the `m`-gon sampled from `boundary`.
pub fn winding_membership<F>(boundary: F, w: Complex64, m: usize) -> Result<bool>
where
    F: Fn(f64) -> Complex64,
{
    Polyline::sample(boundary, m)?.contains(w)
}

fn is_left(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    (b.re - a.re) * (p.im - a.im) - (p.re - a.re) * (b.im - a.im)
}

fn closest_on_segment(p: Complex64, a: Complex64, b: Complex64) -> Complex64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return a;
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    a + ab * t.clamp(0.0, 1.0)
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    (p - closest_on_segment(p, a, b)).norm()
}

// |x - c| is convex along the segment, so ||x - c| - radius| is minimised
// either at a crossing (distance zero) or at the nearer extreme.
fn segment_circle_distance(
    a: Complex64,
    b: Complex64,
    center: Complex64,
    radius: f64,
) -> (f64, Complex64) {
    let near = closest_on_segment(center, a, b);
    let d_near = (near - center).norm();
    let (da, db) = ((a - center).norm(), (b - center).norm());
    let (far, d_far) = if da >= db { (a, da) } else { (b, db) };
    if radius < d_near {
        (d_near - radius, near)
    } else if radius > d_far {
        (radius - d_far, far)
    } else {
        // The circle crosses this segment; locate the crossing on the far side.
        let (mut lo, mut hi) = (near, far);
        for _ in 0..60 {
            let mid = (lo + hi) * 0.5;
            if (mid - center).norm() < radius {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (0.0, (lo + hi) * 0.5)
    }
}
