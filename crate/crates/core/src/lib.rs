//! Radii of starlikeness for four classes of normalized analytic functions
//! characterized by ratio conditions, with respect to a catalogue of target
//! regions in the plane.
//!
//! Every radius is computed twice: from a closed form, and by bisection on the
//! condition that the class's covering disk for `z f'(z)/f(z)` fits inside
//! the target region. The [`verify`] module certifies each answer by sampling.
//!
//! ```
//! use starlike_core::{solve_radius, ClassId, RegionId};
//!
//! let res = solve_radius(ClassId::F1, RegionId::Parabola, 1e-14).unwrap();
//! assert!((res.numeric - (5.0 - 2.0 * 6f64.sqrt())).abs() < 1e-12);
//! ```

pub mod analytic;
pub mod classes;
pub mod error;
pub mod regions;
pub mod solver;
pub mod verify;
pub mod winding;

pub use num_complex::Complex64;

pub use analytic::{
    eval_extremal_f, eval_extremal_w, logderiv_bound, mobius_disk_image, Disk, MobiusKind,
};
pub use classes::{disk_at, max_dist_to_one, univalence_radius, ClassId};
pub use error::{Error, Result};
pub use regions::{contains, max_inradius, region, CenterRange, Region, RegionId};
pub use solver::{
    closed_form_radius, disk_equality_rows, janowski_disk_radius, radius_table, solve_radius,
    starlike_order_radius, strong_starlike_radius, Flag, RadiusResult, Status, DEFAULT_TOL,
};
pub use verify::{
    run_full_suite, run_suite, verify_containment, verify_sharpness, verify_tangency,
    verify_violation, ReportKind, Suite, SuiteConfig, VerificationReport,
};
pub use winding::{winding_membership, Polyline};
