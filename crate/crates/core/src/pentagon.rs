//! The two-parameter pentagon family.
//!
//! Vertices are labelled `A..E` counterclockwise with edges
//! `a = AB`, `b = BC`, `c = CD`, `e = DE`, `d = EA`. Four edges have unit
//! length; only `e` varies. A shape is fixed by the angle `alpha` (with
//! `A = 180 - 2 alpha`) and the angle `theta` (with `B = 90 + theta`).
//! Shapes that tile n-fold symmetric patterns use `alpha = 90 - 180/n`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{check_simple, interior_angles, polygon_area, Point};

/// Angle tolerance (degrees) used when snapping to degenerate classes.
pub const DEFAULT_EPS_ANG: f64 = 1e-6;

/// Closure tolerance of the unit-scale edge walk.
const CLOSURE_EPS: f64 = 1e-9;

/// Denominators of the delta arctangent below this are treated as zero.
const DELTA_SINGULAR_EPS: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapeError {
    #[error("rotational order n must be at least 3, got {0}")]
    OrderTooSmall(u32),
    #[error("theta must lie strictly between 0 and 180 degrees, got {0}")]
    ThetaOutOfRange(f64),
    #[error("alpha must lie strictly between 0 and 90 degrees, got {0}")]
    AlphaOutOfRange(f64),
    #[error("delta is undefined at alpha = {alpha}, theta = {theta} (tan alpha = cos theta)")]
    DeltaUndefined { alpha: f64, theta: f64 },
    #[error("edge e does not exist at alpha = {alpha}, theta = {theta} (negative radicand)")]
    EdgeUndefined { alpha: f64, theta: f64 },
    #[error("edge walk does not close: gap {gap:e}")]
    ClosureFailure { gap: f64 },
    #[error("pentagon at alpha = {alpha}, theta = {theta} is self-intersecting")]
    SelfIntersecting { alpha: f64, theta: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ShapeClass {
    ConvexPentagon,
    /// `E > 180`.
    ConcaveAtE,
    /// `B > 180`, i.e. `theta > 90`.
    ConcaveAtB,
    /// `D > 180`; only occurs for `n = 3` with `theta < 30`.
    ConcaveAtD,
    /// One of `D`, `E` equals 180: the pentagon collapses to a trapezoid.
    Trapezoid,
    /// `B = 180`.
    Parallelogram,
}

/// Interior angles in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angles {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
}

impl Angles {
    pub fn to_array(self) -> [f64; 5] {
        [self.a, self.b, self.c, self.d, self.e]
    }

    pub fn sum(self) -> f64 {
        self.to_array().iter().sum()
    }
}

fn check_alpha_theta(alpha: f64, theta: f64) -> Result<(), ShapeError> {
    if !(alpha > 0.0 && alpha < 90.0) {
        return Err(ShapeError::AlphaOutOfRange(alpha));
    }
    if !(theta > 0.0 && theta < 180.0) {
        return Err(ShapeError::ThetaOutOfRange(theta));
    }
    Ok(())
}

fn check_n_theta(n: u32, theta: f64) -> Result<(), ShapeError> {
    if n < 3 {
        return Err(ShapeError::OrderTooSmall(n));
    }
    if !(theta > 0.0 && theta < 180.0) {
        return Err(ShapeError::ThetaOutOfRange(theta));
    }
    Ok(())
}

/// `alpha` for the family that tiles n-fold symmetric patterns.
pub fn alpha_of(n: u32) -> f64 {
    90.0 - 180.0 / n as f64
}

/// `delta = atan(sin theta / (tan alpha - cos theta))`, lifted into (0, 180).
pub fn delta_of(alpha: f64, theta: f64) -> Result<f64, ShapeError> {
    check_alpha_theta(alpha, theta)?;
    let (st, ct) = theta.to_radians().sin_cos();
    let denom = alpha.to_radians().tan() - ct;
    if denom.abs() < DELTA_SINGULAR_EPS {
        return Err(ShapeError::DeltaUndefined { alpha, theta });
    }
    // atan2 with a positive numerator already lands in (0, 180)
    Ok(st.atan2(denom).to_degrees())
}

pub fn angles_from_alpha(alpha: f64, theta: f64) -> Result<Angles, ShapeError> {
    let delta = delta_of(alpha, theta)?;
    Ok(Angles {
        a: 180.0 - 2.0 * alpha,
        b: 90.0 + theta,
        c: 2.0 * alpha,
        d: 90.0 - alpha + delta,
        e: 180.0 + alpha - theta - delta,
    })
}

pub fn angles_from_n(n: u32, theta: f64) -> Result<Angles, ShapeError> {
    check_n_theta(n, theta)?;
    let k = 180.0 / n as f64;
    let delta = delta_of(alpha_of(n), theta)?;
    Ok(Angles {
        a: 2.0 * k,
        b: 90.0 + theta,
        c: 180.0 - 2.0 * k,
        d: delta + k,
        e: 270.0 - theta - delta - k,
    })
}

/// Length of edge `e` when the other four edges are 1.
pub fn edge_e(alpha: f64, theta: f64) -> Result<f64, ShapeError> {
    check_alpha_theta(alpha, theta)?;
    let radicand = 1.0 - (2.0 * alpha).to_radians().sin() * theta.to_radians().cos();
    if radicand < 0.0 {
        return Err(ShapeError::EdgeUndefined { alpha, theta });
    }
    Ok(2.0 * radicand.sqrt())
}

/// `theta` at which the family reaches the D = 180 or E = 180 degeneration.
fn trapezoid_theta(n: u32) -> Option<f64> {
    match n {
        // D reaches 180 at theta = 30 for the three-fold family
        3 => Some(30.0),
        4 => None,
        _ => Some(90.0 - 360.0 / n as f64),
    }
}

pub fn classify(n: u32, theta: f64) -> Result<ShapeClass, ShapeError> {
    classify_with(n, theta, DEFAULT_EPS_ANG)
}

/// [`classify`] with an explicit snapping tolerance in degrees.
pub fn classify_with(n: u32, theta: f64, eps_ang: f64) -> Result<ShapeClass, ShapeError> {
    check_n_theta(n, theta)?;
    if (theta - 90.0).abs() <= eps_ang {
        return Ok(ShapeClass::Parallelogram);
    }
    if theta > 90.0 {
        return Ok(ShapeClass::ConcaveAtB);
    }
    match trapezoid_theta(n) {
        Some(t) if (theta - t).abs() <= eps_ang => Ok(ShapeClass::Trapezoid),
        Some(t) if theta < t => Ok(if n == 3 {
            ShapeClass::ConcaveAtD
        } else {
            ShapeClass::ConcaveAtE
        }),
        _ => Ok(ShapeClass::ConvexPentagon),
    }
}

/// Classification read off the angles, for shapes not tied to an order n.
pub fn classify_angles(angles: &Angles, eps_ang: f64) -> ShapeClass {
    if (angles.b - 180.0).abs() <= eps_ang {
        ShapeClass::Parallelogram
    } else if (angles.d - 180.0).abs() <= eps_ang || (angles.e - 180.0).abs() <= eps_ang {
        ShapeClass::Trapezoid
    } else if angles.b > 180.0 {
        ShapeClass::ConcaveAtB
    } else if angles.e > 180.0 {
        ShapeClass::ConcaveAtE
    } else if angles.d > 180.0 {
        ShapeClass::ConcaveAtD
    } else {
        ShapeClass::ConvexPentagon
    }
}

/// The `theta` making all five edges equal, if one exists in (0, 180).
pub fn equilateral_theta(n: u32) -> Option<f64> {
    if n < 3 {
        return None;
    }
    let c = 0.75 / (2.0 * alpha_of(n)).to_radians().sin();
    if c > 1.0 {
        return None;
    }
    Some(c.acos().to_degrees())
}

/// A member of the family together with its canonical coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PentagonShape {
    /// Rotational order, when built from `(n, theta)`.
    pub n: Option<u32>,
    pub alpha: f64,
    pub theta: f64,
    pub delta: f64,
    pub angles: Angles,
    pub edge_e: f64,
    pub shape_class: ShapeClass,
    /// `A..E` in the canonical pose: `A` at the origin, `B = (1, 0)`,
    /// counterclockwise.
    pub vertices: [Point; 5],
}

impl PentagonShape {
    pub fn from_alpha(alpha: f64, theta: f64) -> Result<Self, ShapeError> {
        let angles = angles_from_alpha(alpha, theta)?;
        let class = classify_angles(&angles, DEFAULT_EPS_ANG);
        Self::assemble(None, alpha, theta, angles, class)
    }

    fn assemble(
        n: Option<u32>,
        alpha: f64,
        theta: f64,
        angles: Angles,
        shape_class: ShapeClass,
    ) -> Result<Self, ShapeError> {
        let delta = delta_of(alpha, theta)?;
        let e = edge_e(alpha, theta)?;
        let vertices = edge_walk(&angles, e)?;
        if check_simple(&vertices, CLOSURE_EPS).is_err() {
            return Err(ShapeError::SelfIntersecting { alpha, theta });
        }
        Ok(PentagonShape {
            n,
            alpha,
            theta,
            delta,
            angles,
            edge_e: e,
            shape_class,
            vertices,
        })
    }

    /// Length of the diagonal AC, equal to `2 sin(B/2)`.
    pub fn diagonal_ac(&self) -> f64 {
        self.vertices[0].dist(self.vertices[2])
    }

    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices).unwrap_or(0.0)
    }

    /// Interior angles re-measured from the canonical coordinates.
    pub fn measured_angles(&self) -> [f64; 5] {
        let v = interior_angles(&self.vertices);
        [v[0], v[1], v[2], v[3], v[4]]
    }
}

/// Builds the `(n, theta)` pentagon in canonical pose.
pub fn build_shape(n: u32, theta: f64) -> Result<PentagonShape, ShapeError> {
    let class = classify(n, theta)?;
    let angles = angles_from_n(n, theta)?;
    PentagonShape::assemble(Some(n), alpha_of(n), theta, angles, class)
}

/// Walks AB, BC, CD, DE, EA turning by the exterior angle at each vertex.
fn edge_walk(angles: &Angles, e: f64) -> Result<[Point; 5], ShapeError> {
    let interior = angles.to_array();
    let lengths = [1.0, 1.0, 1.0, e, 1.0];
    let mut pts = [Point::ORIGIN; 5];
    let mut heading = 0.0;
    let mut p = Point::ORIGIN;
    for (k, len) in lengths.into_iter().enumerate() {
        p += Point::unit(heading) * len;
        let next = (k + 1) % 5;
        if next == 0 {
            let gap = p.norm();
            if gap.is_nan() || gap > CLOSURE_EPS {
                return Err(ShapeError::ClosureFailure { gap });
            }
        } else {
            pts[next] = p;
            heading += 180.0 - interior[next];
        }
    }
    Ok(pts)
}
