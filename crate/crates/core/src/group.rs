//! Iwasawa coordinates g = n[x] a[y] k[θ] on SL(2, ℝ), where
//! n[x] = (1 x; 0 1), a[y] = (√y 0; 0 1/√y) and k[θ] = (cos θ sin θ; −sin θ cos θ).

use core::f64::consts::PI;

use crate::{Error, Result};

/// Real 2×2 matrix, rows first.
pub type Mat2 = [[f64; 2]; 2];

/// A point of G in Iwasawa coordinates. θ is kept in [0, π), since ±k[θ]
/// act identically in PSL(2, ℝ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupPoint {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

fn reduce_angle(theta: f64) -> f64 {
    let r = theta - PI * libm::floor(theta / PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

impl GroupPoint {
    pub fn new(x: f64, y: f64, theta: f64) -> Result<Self> {
        if !x.is_finite() || !theta.is_finite() || !(y > 0.0) || !y.is_finite() {
            return Err(Error::domain("group point needs finite x, θ and finite y > 0"));
        }
        Ok(GroupPoint {
            x,
            y,
            theta: reduce_angle(theta),
        })
    }

    /// n[x] a[y], the point x + iy of the upper half-plane.
    pub fn upper(x: f64, y: f64) -> Result<Self> {
        Self::new(x, y, 0.0)
    }

    pub fn to_matrix(&self) -> Mat2 {
        let sy = libm::sqrt(self.y);
        let (s, c) = libm::sincos(self.theta);
        [[sy * c - self.x * s / sy, sy * s + self.x * c / sy], [-s / sy, c / sy]]
    }

    /// Iwasawa coordinates of a real matrix of determinant 1.
    pub fn from_matrix(g: &Mat2) -> Result<Self> {
        let [[a, b], [c, d]] = *g;
        let det = a * d - b * c;
        if !(libm::fabs(det - 1.0) <= 1e-9 * (1.0 + libm::fabs(a * d) + libm::fabs(b * c))) {
            return Err(Error::domain("matrix must have determinant 1"));
        }
        let r2 = c * c + d * d;
        Self::new((a * c + b * d) / r2, 1.0 / r2, libm::atan2(-c, d))
    }

    /// The point h·g.
    pub fn left_mul(&self, h: &Mat2) -> Result<Self> {
        Self::from_matrix(&mat_mul(h, &self.to_matrix()))
    }

    /// n[u]·g, exactly: only x moves.
    pub fn translate(&self, u: f64) -> Result<Self> {
        Self::new(self.x + u, self.y, self.theta)
    }
}

pub fn mat_mul(p: &Mat2, q: &Mat2) -> Mat2 {
    [
        [p[0][0] * q[0][0] + p[0][1] * q[1][0], p[0][0] * q[0][1] + p[0][1] * q[1][1]],
        [p[1][0] * q[0][0] + p[1][1] * q[1][0], p[1][0] * q[0][1] + p[1][1] * q[1][1]],
    ]
}
