//! Unit-sphere kernels and the filled spherical triangles used by the
//! triangle chain.
//!
//! The triangle with index `n >= 2` has vertices
//! `a_n = (1/(2n), sqrt(3)/(2n), sqrt(1 - 1/n^2))`, `b = (sqrt(3)/2, 1/2, 0)`
//! and `c = (0, 1, 0)`. "Filled" means the spherically convex hull of the
//! three vertices: geodesics between interior points are great-circle arcs
//! and the induced metric is the restricted spherical distance.

pub type Vec3 = [f64; 3];

pub fn dot(u: &Vec3, v: &Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub fn norm(u: &Vec3) -> f64 {
    dot(u, u).sqrt()
}

pub fn normalize(u: &Vec3) -> Vec3 {
    let n = norm(u);
    [u[0] / n, u[1] / n, u[2] / n]
}

/// Great-circle distance, with the inner product clamped to [-1, 1] to
/// absorb roundoff.
pub fn distance(u: &Vec3, v: &Vec3) -> f64 {
    dot(u, v).clamp(-1.0, 1.0).acos()
}

/// Point at parameter `t` of the minor arc from `u` to `v`.
pub fn geodesic_point(u: &Vec3, v: &Vec3, t: f64) -> Vec3 {
    let theta = distance(u, v);
    if theta < 1e-15 {
        return *u;
    }
    let s = theta.sin();
    let (wu, wv) = (((1.0 - t) * theta).sin() / s, (t * theta).sin() / s);
    normalize(&[
        wu * u[0] + wv * v[0],
        wu * u[1] + wv * v[1],
        wu * u[2] + wv * v[2],
    ])
}

/// Vertices `(a_n, b, c)` of triangle `n`.
pub fn triangle_vertices(n: u32) -> (Vec3, Vec3, Vec3) {
    let nf = f64::from(n);
    let a = [
        1.0 / (2.0 * nf),
        3f64.sqrt() / (2.0 * nf),
        (1.0 - 1.0 / (nf * nf)).sqrt(),
    ];
    let b = [3f64.sqrt() / 2.0, 0.5, 0.0];
    let c = [0.0, 1.0, 0.0];
    (a, b, c)
}

/// Side length from `a_n` to `b` (equals the side to `c`): arccos(sqrt(3)/(2n)).
pub fn triangle_side(n: u32) -> f64 {
    (3f64.sqrt() / (2.0 * f64::from(n))).clamp(-1.0, 1.0).acos()
}

/// Containment in the closed filled triangle `n`: the point must lie on the
/// inner side of each of the three great-circle planes through vertex pairs,
/// within `tol` (a signed-sine slack).
pub fn triangle_contains(n: u32, p: &Vec3, tol: f64) -> bool {
    let (a, b, c) = triangle_vertices(n);
    for (u, v, w) in [(&a, &b, &c), (&b, &c, &a), (&c, &a, &b)] {
        let nrm = cross(u, v);
        let scale = norm(&nrm);
        let side_w = dot(&nrm, w);
        let side_p = dot(&nrm, p);
        if side_p * side_w.signum() < -tol * scale {
            return false;
        }
    }
    true
}

/// Interior angle of the triangle at vertex `at`, between the arcs to `u` and `v`.
fn vertex_angle(at: &Vec3, u: &Vec3, v: &Vec3) -> f64 {
    let proj = |x: &Vec3| {
        let d = dot(at, x);
        normalize(&[x[0] - d * at[0], x[1] - d * at[1], x[2] - d * at[2]])
    };
    let (tu, tv) = (proj(u), proj(v));
    dot(&tu, &tv).clamp(-1.0, 1.0).acos()
}

/// Spherical area of triangle `n` by angle excess.
pub fn triangle_area(n: u32) -> f64 {
    let (a, b, c) = triangle_vertices(n);
    vertex_angle(&a, &b, &c) + vertex_angle(&b, &c, &a) + vertex_angle(&c, &a, &b)
        - std::f64::consts::PI
}

/// Diameter of the filled triangle `n`, computed over a boundary grid.
/// On the sphere the distance to a fixed point is maximized on the boundary
/// of a convex region, so a fine grid on the three edges suffices.
pub fn triangle_diameter(n: u32) -> f64 {
    let (a, b, c) = triangle_vertices(n);
    const STEPS: usize = 192;
    let mut pts = Vec::with_capacity(3 * STEPS + 3);
    for (u, v) in [(&a, &b), (&b, &c), (&c, &a)] {
        for k in 0..=STEPS {
            pts.push(geodesic_point(u, v, k as f64 / STEPS as f64));
        }
    }
    let mut best = 0.0f64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            best = best.max(distance(&pts[i], &pts[j]));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn vertex_constants() {
        let (a2, b, c) = triangle_vertices(2);
        assert_abs_diff_eq!(a2[0], 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(a2[1], 0.4330127018922193, epsilon = 1e-15);
        assert_abs_diff_eq!(a2[2], 0.8660254037844386, epsilon = 1e-15);
        assert_abs_diff_eq!(norm(&a2), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(distance(&b, &c), PI / 3.0, epsilon = 1e-15);
        // d(a_2, b) = d(a_2, c) = arccos(sqrt(3)/4)
        assert_abs_diff_eq!(distance(&a2, &b), 1.1229639298659642, epsilon = 1e-14);
        assert_abs_diff_eq!(distance(&a2, &c), 1.1229639298659642, epsilon = 1e-14);
    }

    #[test]
    fn midpoint_of_bc() {
        let (_, b, c) = triangle_vertices(2);
        let m = geodesic_point(&b, &c, 0.5);
        assert_abs_diff_eq!(m[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(m[1], 0.8660254037844386, epsilon = 1e-15);
        assert_abs_diff_eq!(m[2], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn containment_accepts_vertices_and_interior() {
        let (a, b, c) = triangle_vertices(3);
        for p in [&a, &b, &c] {
            assert!(triangle_contains(3, p, 1e-9));
        }
        let inside = normalize(&[a[0] + b[0] + c [0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]]);
        assert!(triangle_contains(3, &inside, 1e-9));
        assert!(!triangle_contains(3, &[0.0, 0.0, 1.0], 1e-9));
        assert!(!triangle_contains(3, &[-1.0, 0.0, 0.0], 1e-9));
    }

    #[test]
    fn diameter_below_right_angle() {
        for n in [2, 3, 5, 10, 40] {
            let d = triangle_diameter(n);
            assert!(d < PI / 2.0, "diam {d} for n={n}");
            // at least as large as the longest vertex pair
            assert!(d >= triangle_side(n) - 1e-12);
        }
    }
}
