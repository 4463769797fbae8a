//! Seeded point samplers used by the convexity estimators.
//!
//! Ball samplers draw from `B(center, r)` in any space kind. The stream is
//! a half/half mixture of a bulk draw and a boundary-biased draw: infima of
//! midpoint depth are attained near the ball boundary, and the biased half
//! sharpens the estimate without losing full support. Composite spaces
//! (chain, glued pair) are sampled per component, weighted by pilot
//! estimates of the ball mass each component carries.

use crate::error::{Error, Result};
use crate::geometry::{self, sphere, hyperbolic, Point, SpaceHandle, SpaceKind};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sphere::Vec3;

/// Radius of the window used when drawing unconstrained configuration
/// points in unbounded spaces.
pub(crate) const DOMAIN_RADIUS: f64 = 2.5;

fn barycentric_triangle(n: u32, rng: &mut ChaCha8Rng) -> Vec3 {
    // Uniform simplex weights, then radial projection to the sphere.
    let (a, b, c) = sphere::triangle_vertices(n);
    let (e1, e2, e3): (f64, f64, f64) = (
        -rng.gen::<f64>().max(1e-300).ln(),
        -rng.gen::<f64>().max(1e-300).ln(),
        -rng.gen::<f64>().max(1e-300).ln(),
    );
    let s = e1 + e2 + e3;
    let (w1, w2, w3) = (e1 / s, e2 / s, e3 / s);
    sphere::normalize(&[
        w1 * a[0] + w2 * b[0] + w3 * c[0],
        w1 * a[1] + w2 * b[1] + w3 * c[1],
        w1 * a[2] + w2 * b[2] + w3 * c[2],
    ])
}

/// Radius fraction for the bulk half of the mixture (area-uniform in 2D).
fn bulk_rho(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen::<f64>().sqrt()
}

/// Radius fraction for the boundary-biased half.
fn shell_rho(rng: &mut ChaCha8Rng) -> f64 {
    0.85 + 0.15 * rng.gen::<f64>().sqrt()
}

/// Ball sampler for one component of a space.
enum PartBall {
    Euclidean { center: Vec<f64>, r: f64 },
    Hyperbolic { center: Vec3, e1: Vec3, e2: Vec3, r: f64 },
    /// Points of triangle `n` within spherical distance `r` of `gateway`.
    Triangle { n: u32, gateway: Vec3, r: f64 },
}

impl PartBall {
    fn sample(&self, rng: &mut ChaCha8Rng, shell: bool) -> Vec<f64> {
        match self {
            PartBall::Euclidean { center, r } => {
                // Rejection from the bounding box, with an optional radial
                // push toward the boundary for the biased half.
                let d = center.len();
                loop {
                    let v: Vec<f64> = (0..d).map(|_| (rng.gen::<f64>() * 2.0 - 1.0) * r).collect();
                    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                    if norm <= *r && norm > 0.0 {
                        let scale = if shell { shell_rho(rng) * r / norm } else { 1.0 };
                        return center
                            .iter()
                            .zip(&v)
                            .map(|(c, x)| c + x * scale)
                            .collect();
                    }
                }
            }
            PartBall::Hyperbolic { center, e1, e2, r } => loop {
                let v1 = (rng.gen::<f64>() * 2.0 - 1.0) * r;
                let v2 = (rng.gen::<f64>() * 2.0 - 1.0) * r;
                let norm = (v1 * v1 + v2 * v2).sqrt();
                if norm <= *r && norm > 0.0 {
                    let scale = if shell { shell_rho(rng) * r / norm } else { 1.0 };
                    return hyperbolic::exp_in_frame(center, e1, e2, v1 * scale, v2 * scale)
                        .to_vec();
                }
            },
            PartBall::Triangle { n, gateway, r } => {
                // Draw a direction point in the triangle and pull it toward
                // the gateway so the arc length stays within the ball. The
                // arc stays inside the (convex) triangle.
                let dir = barycentric_triangle(*n, rng);
                let d = sphere::distance(gateway, &dir);
                let rho = if shell { shell_rho(rng) } else { bulk_rho(rng) } * r;
                let target = rho.min(d);
                let t = if d > 0.0 { target / d } else { 0.0 };
                sphere::geodesic_point(gateway, &dir, t).to_vec()
            }
        }
    }
}

struct Part {
    component: u32,
    ball: PartBall,
    weight: f64,
}

/// Seeded sampler over `B(center, r)` in `space`.
pub struct BallSampler {
    space: SpaceHandle,
    parts: Vec<Part>,
    total_weight: f64,
}

impl BallSampler {
    pub fn new(space: &SpaceHandle, center: &Point, r: f64, pilot_rng: &mut ChaCha8Rng) -> Result<BallSampler> {
        if !(r > 0.0) {
            return Err(Error::Domain("ball radius must be positive".into()));
        }
        if center.space() != space {
            return Err(Error::SpaceMismatch("center not in the given space".into()));
        }
        let mut parts = Vec::new();
        match space.kind() {
            SpaceKind::Euclidean { .. } => parts.push(Part {
                component: 0,
                ball: PartBall::Euclidean {
                    center: center.coords().to_vec(),
                    r,
                },
                weight: 1.0,
            }),
            SpaceKind::Hyperbolic2 => {
                let c = [center.coords()[0], center.coords()[1], center.coords()[2]];
                let (e1, e2) = hyperbolic::tangent_frame(&c);
                parts.push(Part {
                    component: 0,
                    ball: PartBall::Hyperbolic { center: c, e1, e2, r },
                    weight: 1.0,
                });
            }
            SpaceKind::SphericalTriangle { n } => {
                let c = [center.coords()[0], center.coords()[1], center.coords()[2]];
                parts.push(Part {
                    component: 0,
                    ball: PartBall::Triangle { n: *n, gateway: c, r },
                    weight: 1.0,
                });
            }
            SpaceKind::TriangleChain { len } => {
                chain_parts(*len, center, r, pilot_rng, &mut parts);
            }
            SpaceKind::GluedPair { .. } => {
                glued_parts(space, center, r, pilot_rng, &mut parts)?;
            }
        }
        let total_weight = parts.iter().map(|p| p.weight).sum();
        Ok(BallSampler {
            space: space.clone(),
            parts,
            total_weight,
        })
    }

    /// Draw one point; `shell` selects the boundary-biased half of the
    /// mixture.
    pub fn sample(&self, rng: &mut ChaCha8Rng, shell: bool) -> Point {
        let mut pick = rng.gen::<f64>() * self.total_weight;
        let mut idx = 0;
        for (i, p) in self.parts.iter().enumerate() {
            idx = i;
            if pick < p.weight {
                break;
            }
            pick -= p.weight;
        }
        let part = &self.parts[idx];
        let coords = part.ball.sample(rng, shell);
        self.space
            .point_with_tol(part.component, coords, 1e-9)
            .expect("sampler produced an invalid point")
    }
}

/// Per-component gateway decomposition of a chain ball: the slice of
/// `B(center, r)` in component `c` is the child ball around the vertex
/// through which geodesics enter `c`, with the connecting legs subtracted
/// from the radius.
fn chain_parts(len: u32, center: &Point, r: f64, pilot_rng: &mut ChaCha8Rng, parts: &mut Vec<Part>) {
    let c0 = center.component();
    let n0 = c0 + 1;
    let x = [center.coords()[0], center.coords()[1], center.coords()[2]];
    let b = sphere::triangle_vertices(2).1;

    let mut push = |component: u32, gateway: Vec3, rc: f64, rng: &mut ChaCha8Rng| {
        if rc <= 0.0 {
            return;
        }
        let n = component + 1;
        const PILOT: u32 = 48;
        let mut hits = 0u32;
        for _ in 0..PILOT {
            let p = barycentric_triangle(n, rng);
            if sphere::distance(&gateway, &p) <= rc {
                hits += 1;
            }
        }
        let frac = (f64::from(hits) / f64::from(PILOT)).max(1.0 / f64::from(2 * PILOT));
        parts.push(Part {
            component,
            ball: PartBall::Triangle { n, gateway, r: rc },
            weight: frac * sphere::triangle_area(n),
        });
    };

    // Own component: gateway is the center itself.
    push(c0, x, r, pilot_rng);

    // Components above: exit through b, cross intermediate triangles.
    let mut base = sphere::distance(&x, &b);
    let mut c = c0 + 1;
    while c <= len + 1 && base < r {
        let n = c + 1;
        push(c, sphere::triangle_vertices(n).0, r - base, pilot_rng);
        base += sphere::triangle_side(n);
        c += 1;
    }

    // Components below: exit through a_{n0}, cross downward.
    if c0 > 1 {
        let mut base = sphere::distance(&x, &sphere::triangle_vertices(n0).0);
        let mut c = c0 - 1;
        loop {
            if base >= r {
                break;
            }
            push(c, b, r - base, pilot_rng);
            base += sphere::triangle_side(c + 1);
            if c == 1 {
                break;
            }
            c -= 1;
        }
    }
}

fn glued_parts(
    space: &SpaceHandle,
    center: &Point,
    r: f64,
    pilot_rng: &mut ChaCha8Rng,
    parts: &mut Vec<Part>,
) -> Result<()> {
    let SpaceKind::GluedPair {
        left,
        right,
        left_glue,
        right_glue,
    } = space.kind()
    else {
        unreachable!()
    };
    let (own, other, own_child, other_child, own_glue, other_glue) = if center.component() == 0 {
        (0u32, 1u32, left, right, left_glue, right_glue)
    } else {
        (1, 0, right, left, right_glue, left_glue)
    };
    let own_center = own_child.point(0, center.coords().to_vec())?;
    let glue_own = own_child.attach(own_glue)?;
    let to_seam = geometry::distance(own_child, &own_center, &glue_own)?;

    let simple_ball = |child: &SpaceHandle, at: &Point, rc: f64| -> Result<PartBall> {
        Ok(match child.kind() {
            SpaceKind::Euclidean { .. } => PartBall::Euclidean {
                center: at.coords().to_vec(),
                r: rc,
            },
            SpaceKind::Hyperbolic2 => {
                let c = [at.coords()[0], at.coords()[1], at.coords()[2]];
                let (e1, e2) = hyperbolic::tangent_frame(&c);
                PartBall::Hyperbolic { center: c, e1, e2, r: rc }
            }
            SpaceKind::SphericalTriangle { n } => PartBall::Triangle {
                n: *n,
                gateway: [at.coords()[0], at.coords()[1], at.coords()[2]],
                r: rc,
            },
            _ => return Err(Error::Capability("glued-pair children must be simple".into())),
        })
    };

    let _ = pilot_rng;
    parts.push(Part {
        component: own,
        ball: simple_ball(own_child, &own_center, r)?,
        weight: 1.0,
    });
    let rc = r - to_seam;
    if rc > 0.0 {
        let glue_other = other_child.attach(other_glue)?;
        parts.push(Part {
            component: other,
            ball: simple_ball(other_child, &glue_other, rc)?,
            weight: (rc / r).clamp(0.05, 1.0),
        });
    }
    Ok(())
}

/// Unconstrained configuration point in a bounded window of the space.
pub fn domain_point(space: &SpaceHandle, rng: &mut ChaCha8Rng) -> Point {
    match space.kind() {
        SpaceKind::Euclidean { dim } => {
            let coords = (0..*dim)
                .map(|_| (rng.gen::<f64>() * 2.0 - 1.0) * DOMAIN_RADIUS)
                .collect();
            space.point_with_tol(0, coords, 1e-9).expect("valid euclidean point")
        }
        SpaceKind::Hyperbolic2 => {
            let origin = [1.0, 0.0, 0.0];
            let (e1, e2) = hyperbolic::tangent_frame(&origin);
            let (v1, v2) = loop {
                let v1 = (rng.gen::<f64>() * 2.0 - 1.0) * DOMAIN_RADIUS;
                let v2 = (rng.gen::<f64>() * 2.0 - 1.0) * DOMAIN_RADIUS;
                if v1 * v1 + v2 * v2 <= DOMAIN_RADIUS * DOMAIN_RADIUS {
                    break (v1, v2);
                }
            };
            let coords = hyperbolic::exp_in_frame(&origin, &e1, &e2, v1, v2).to_vec();
            space.point_with_tol(0, coords, 1e-9).expect("valid hyperbolic point")
        }
        SpaceKind::SphericalTriangle { n } => {
            let coords = barycentric_triangle(*n, rng).to_vec();
            space.point_with_tol(0, coords, 1e-9).expect("valid triangle point")
        }
        SpaceKind::TriangleChain { len } => {
            let component = 1 + rng.gen_range(0..len + 1);
            let coords = barycentric_triangle(component + 1, rng).to_vec();
            space
                .point_with_tol(component, coords, 1e-9)
                .expect("valid chain point")
        }
        SpaceKind::GluedPair { left, right, .. } => {
            let component = u32::from(rng.gen::<bool>());
            let child = if component == 0 { left } else { right };
            let inner = domain_point(child, rng);
            space
                .point_with_tol(component, inner.coords().to_vec(), 1e-9)
                .expect("valid glued point")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn ball_samples_stay_in_ball() {
        let spaces = [
            SpaceHandle::euclidean(2).unwrap(),
            SpaceHandle::hyperbolic2(),
            SpaceHandle::spherical_triangle(2).unwrap(),
        ];
        let centers = [
            geometry::euclidean_point(&spaces[0], &[0.3, -0.2]).unwrap(),
            geometry::hyperbolic_point(&spaces[1], 0.2, 0.1).unwrap(),
            geometry::triangle_vertex(&spaces[2], geometry::TriangleVertex::B).unwrap(),
        ];
        let radii = [1.5, 1.0, 0.6];
        for ((space, center), r) in spaces.iter().zip(&centers).zip(radii) {
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            let sampler = BallSampler::new(space, center, r, &mut rng).unwrap();
            for k in 0..400 {
                let p = sampler.sample(&mut rng, k % 2 == 0);
                let d = geometry::distance(space, center, &p).unwrap();
                assert!(d <= r + 1e-9, "sample at distance {d} > {r}");
            }
        }
    }

    #[test]
    fn chain_ball_reaches_other_components() {
        let chain = SpaceHandle::triangle_chain(6).unwrap();
        let center = geometry::chain_vertex(&chain, 1, geometry::TriangleVertex::C).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let r = 4.0;
        let sampler = BallSampler::new(&chain, &center, r, &mut rng).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for k in 0..2000 {
            let p = sampler.sample(&mut rng, k % 2 == 0);
            let d = geometry::chain_distance(&chain, &center, &p).unwrap();
            assert!(d <= r + 1e-9);
            seen.insert(p.component());
        }
        assert!(seen.len() >= 3, "expected several components, got {seen:?}");
    }
}
