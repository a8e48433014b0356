//! Minimal 3-vector for Earth-centered geometry, in km.

use crate::math;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, other: &Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.dot(self))
    }

    pub fn sub(&self, other: &Vec3) -> Vec3 {
        Vec3::new(self.x - other.x, self.y - other.y, self.z - other.z)
    }

    pub fn scale(&self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }

    /// Unit vector in the same direction. Undefined for the zero vector.
    pub fn normalized(&self) -> Vec3 {
        self.scale(1.0 / self.norm())
    }

    /// Rotation about the x-axis by `angle_deg` degrees.
    pub fn rotate_x(&self, angle_deg: f64) -> Vec3 {
        let a = angle_deg.to_radians();
        let (s, c) = (math::sin(a), math::cos(a));
        Vec3::new(self.x, self.y * c - self.z * s, self.y * s + self.z * c)
    }

    /// Angle between two vectors in degrees, in [0, 180].
    pub fn angle_deg(&self, other: &Vec3) -> f64 {
        let cos_a = self.dot(other) / (self.norm() * other.norm());
        math::acos(cos_a.clamp(-1.0, 1.0)).to_degrees()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotate_x_preserves_norm() {
        let v = Vec3::new(1.0, 2.0, 3.0);
        for deg in [0.0, 17.0, 90.0, 180.0, 271.5] {
            let r = v.rotate_x(deg);
            assert!((r.norm() - v.norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn angle_between_axes_is_90() {
        let x = Vec3::new(1.0, 0.0, 0.0);
        let y = Vec3::new(0.0, 1.0, 0.0);
        assert!((x.angle_deg(&y) - 90.0).abs() < 1e-12);
        assert!(x.angle_deg(&x).abs() < 1e-6);
    }
}
