//! Hyperboloid-model kernels for the hyperbolic plane.
//!
//! Points live on the upper sheet of `-x0^2 + x1^2 + x2^2 = -1`, `x0 >= 1`,
//! with the Minkowski bilinear form of signature `(-, +, +)`.

use super::sphere::Vec3;

pub fn mink_dot(x: &Vec3, y: &Vec3) -> f64 {
    -x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

/// Distance `arccosh(-<x, y>)`, with the product clamped below at 1 to
/// absorb roundoff.
pub fn distance(x: &Vec3, y: &Vec3) -> f64 {
    (-mink_dot(x, y)).max(1.0).acosh()
}

/// Re-project a near-hyperboloid vector onto the sheet by solving for x0.
pub fn reproject(x: &Vec3) -> Vec3 {
    [(1.0 + x[1] * x[1] + x[2] * x[2]).sqrt(), x[1], x[2]]
}

/// Unit tangent at `p` pointing toward `q`. Requires `p != q`.
fn tangent_toward(p: &Vec3, q: &Vec3) -> Option<Vec3> {
    let d = distance(p, q);
    if d < 1e-15 {
        return None;
    }
    let ch = d.cosh();
    let sh = d.sinh();
    Some([
        (q[0] - ch * p[0]) / sh,
        (q[1] - ch * p[1]) / sh,
        (q[2] - ch * p[2]) / sh,
    ])
}

/// Point at arc length `s` on the unit-speed geodesic from `p` with unit
/// tangent `u`.
pub fn flow(p: &Vec3, u: &Vec3, s: f64) -> Vec3 {
    let (ch, sh) = (s.cosh(), s.sinh());
    reproject(&[
        ch * p[0] + sh * u[0],
        ch * p[1] + sh * u[1],
        ch * p[2] + sh * u[2],
    ])
}

/// Point at parameter `t in [0, 1]` of the geodesic from `p` to `q`.
pub fn geodesic_point(p: &Vec3, q: &Vec3, t: f64) -> Vec3 {
    match tangent_toward(p, q) {
        Some(u) => flow(p, &u, t * distance(p, q)),
        None => *p,
    }
}

/// Point at arc length `s >= 0` on the ray from `origin` through `through`.
pub fn ray_point(origin: &Vec3, through: &Vec3, s: f64) -> Option<Vec3> {
    tangent_toward(origin, through).map(|u| flow(origin, &u, s))
}

/// Minkowski-orthonormal tangent frame at `p`.
pub fn tangent_frame(p: &Vec3) -> (Vec3, Vec3) {
    // Project ambient axes onto the tangent plane and Gram-Schmidt them.
    let project = |v: &Vec3| {
        let d = mink_dot(p, v);
        [v[0] + d * p[0], v[1] + d * p[1], v[2] + d * p[2]]
    };
    let seed1 = project(&[0.0, 1.0, 0.0]);
    let n1 = mink_dot(&seed1, &seed1).sqrt();
    let e1 = [seed1[0] / n1, seed1[1] / n1, seed1[2] / n1];
    let mut seed2 = project(&[0.0, 0.0, 1.0]);
    let c = mink_dot(&seed2, &e1);
    for k in 0..3 {
        seed2[k] -= c * e1[k];
    }
    let n2 = mink_dot(&seed2, &seed2).sqrt();
    (e1, [seed2[0] / n2, seed2[1] / n2, seed2[2] / n2])
}

/// Exponential map at `p` of the tangent vector `v1*e1 + v2*e2` in the frame
/// returned by [`tangent_frame`].
pub fn exp_in_frame(p: &Vec3, e1: &Vec3, e2: &Vec3, v1: f64, v2: f64) -> Vec3 {
    let s = (v1 * v1 + v2 * v2).sqrt();
    if s < 1e-15 {
        return *p;
    }
    let u = [
        (v1 * e1[0] + v2 * e2[0]) / s,
        (v1 * e1[1] + v2 * e2[1]) / s,
        (v1 * e1[2] + v2 * e2[2]) / s,
    ];
    flow(p, &u, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const ORIGIN: Vec3 = [1.0, 0.0, 0.0];

    #[test]
    fn boost_distance_is_rapidity() {
        // arccosh of minus the Minkowski product, evaluated directly.
        let q = [1.0f64.cosh(), 1.0f64.sinh(), 0.0];
        assert_abs_diff_eq!(distance(&ORIGIN, &q), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn ray_through_boosted_point() {
        let q = [1.0f64.cosh(), 1.0f64.sinh(), 0.0];
        let r = ray_point(&ORIGIN, &q, 2.0).unwrap();
        assert_abs_diff_eq!(r[0], 2.0f64.cosh(), epsilon = 1e-12);
        assert_abs_diff_eq!(r[1], 2.0f64.sinh(), epsilon = 1e-12);
        assert_abs_diff_eq!(r[2], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn frame_is_minkowski_orthonormal() {
        let p = reproject(&[0.0, 0.7, -1.3]);
        let (e1, e2) = tangent_frame(&p);
        assert_abs_diff_eq!(mink_dot(&e1, &e1), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mink_dot(&e2, &e2), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mink_dot(&e1, &e2), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mink_dot(&p, &e1), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mink_dot(&p, &e2), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn exp_map_distance_matches_norm() {
        let p = reproject(&[0.0, -0.4, 0.9]);
        let (e1, e2) = tangent_frame(&p);
        let q = exp_in_frame(&p, &e1, &e2, 0.6, -0.8);
        assert_abs_diff_eq!(distance(&p, &q), 1.0, epsilon = 1e-12);
    }
}
