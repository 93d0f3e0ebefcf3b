//! Cubic Hermite segments with zero end derivatives.
//!
//! Waypoint trajectories are densified one segment at a time; clamping the
//! derivative to zero at every knot keeps contact transitions smooth and
//! makes each segment depend only on its own two endpoints.

use crate::num::Real;

/// Value at parameter `u` in [0, 1] of the cubic interpolating `a` at 0 and
/// `b` at 1 with zero derivatives at both ends (the smoothstep cubic).
pub fn hermite_zero_vel<R: Real>(a: R, b: R, u: R) -> R {
    let u2 = u * u;
    let s = u2 * (R::c(3.0) - R::c(2.0) * u);
    a + (b - a) * s
}

/// Derivative with respect to time of [`hermite_zero_vel`] over a segment
/// of duration `dur`.
pub fn hermite_zero_vel_dot<R: Real>(a: R, b: R, u: R, dur: R) -> R {
    let ds = R::c(6.0) * u * (R::one() - u);
    (b - a) * ds / dur
}

/// Second time derivative of [`hermite_zero_vel`] over a segment of
/// duration `dur`.
pub fn hermite_zero_vel_ddot<R: Real>(a: R, b: R, u: R, dur: R) -> R {
    let dds = R::c(6.0) - R::c(12.0) * u;
    (b - a) * dds / (dur * dur)
}
