//! Concrete geodesic model spaces: Euclidean d-space, the hyperbolic plane
//! (hyperboloid model), filled spherical triangles, a two-space gluing, and
//! the chain of spherical triangles glued corner to corner.
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to share across threads.

pub mod hyperbolic;
pub mod sphere;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use sphere::Vec3;
use std::sync::Arc;

/// Default tolerance for closed-form identity checks (unit norms etc.).
pub const TOL_IDENTITY: f64 = 1e-12;
/// Default tolerance for composed geometric operations.
pub const TOL_COMPOSED: f64 = 1e-9;

/// Coordinates plus component index, before being attached to a space.
///
/// This is the serialization form of a point: a flat real array and a
/// component index (0 for non-glued spaces).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawPoint {
    #[serde(default)]
    pub component: u32,
    pub coords: Vec<f64>,
}

impl RawPoint {
    pub fn new(component: u32, coords: Vec<f64>) -> Self {
        RawPoint { component, coords }
    }
}

/// Description of a concrete geodesic space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceKind {
    /// Flat d-dimensional space with the Euclidean metric.
    Euclidean { dim: usize },
    /// Hyperbolic plane, upper hyperboloid sheet in Minkowski 3-space.
    Hyperbolic2,
    /// Filled spherical triangle with index `n >= 2`.
    SphericalTriangle { n: u32 },
    /// Two spaces joined by identifying one point of each. Children must be
    /// non-composite kinds; component 0 is `left`, component 1 is `right`.
    GluedPair {
        left: SpaceHandle,
        right: SpaceHandle,
        left_glue: RawPoint,
        right_glue: RawPoint,
    },
    /// Chain of triangles glued corner to corner. A chain of length `len`
    /// has components `1..=len+1`, component `c` hosting triangle `c + 1`.
    TriangleChain { len: u32 },
}

/// Shared, immutable handle to a space description.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct SpaceHandle(Arc<SpaceKind>);

impl PartialEq for SpaceHandle {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl<'de> Deserialize<'de> for SpaceHandle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(SpaceHandle(Arc::new(SpaceKind::deserialize(d)?)))
    }
}

/// A point of a concrete space: ambient coordinates plus a component index
/// for glued spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    space: SpaceHandle,
    component: u32,
    coords: Vec<f64>,
}

impl Point {
    pub fn space(&self) -> &SpaceHandle {
        &self.space
    }
    pub fn component(&self) -> u32 {
        self.component
    }
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }
    pub fn raw(&self) -> RawPoint {
        RawPoint::new(self.component, self.coords.clone())
    }
    fn v3(&self) -> Vec3 {
        [self.coords[0], self.coords[1], self.coords[2]]
    }
    fn from_v3(space: &SpaceHandle, component: u32, v: Vec3) -> Point {
        Point {
            space: space.clone(),
            component,
            coords: v.to_vec(),
        }
    }
}

impl SpaceHandle {
    pub fn euclidean(dim: usize) -> Result<SpaceHandle> {
        if dim == 0 {
            return Err(Error::Domain("euclidean dimension must be positive".into()));
        }
        Ok(SpaceHandle(Arc::new(SpaceKind::Euclidean { dim })))
    }

    pub fn hyperbolic2() -> SpaceHandle {
        SpaceHandle(Arc::new(SpaceKind::Hyperbolic2))
    }

    pub fn spherical_triangle(n: u32) -> Result<SpaceHandle> {
        if n < 2 {
            return Err(Error::Domain(format!("triangle index {n} < 2")));
        }
        Ok(SpaceHandle(Arc::new(SpaceKind::SphericalTriangle { n })))
    }

    /// Glue `left` and `right` by identifying `left_glue` with `right_glue`.
    pub fn glued_pair(
        left: SpaceHandle,
        left_glue: &Point,
        right: SpaceHandle,
        right_glue: &Point,
    ) -> Result<SpaceHandle> {
        for child in [&left, &right] {
            if matches!(
                child.kind(),
                SpaceKind::GluedPair { .. } | SpaceKind::TriangleChain { .. }
            ) {
                return Err(Error::Capability(
                    "glued-pair children must be non-composite spaces".into(),
                ));
            }
        }
        if left_glue.space() != &left || right_glue.space() != &right {
            return Err(Error::SpaceMismatch(
                "gluing points must belong to the respective children".into(),
            ));
        }
        Ok(SpaceHandle(Arc::new(SpaceKind::GluedPair {
            left,
            right,
            left_glue: left_glue.raw(),
            right_glue: right_glue.raw(),
        })))
    }

    pub fn triangle_chain(len: u32) -> Result<SpaceHandle> {
        if len < 1 {
            return Err(Error::Domain("chain length must be >= 1".into()));
        }
        Ok(SpaceHandle(Arc::new(SpaceKind::TriangleChain { len })))
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.0
    }

    pub fn from_kind(kind: SpaceKind) -> SpaceHandle {
        SpaceHandle(Arc::new(kind))
    }

    /// Attach raw coordinates to this space, validating all invariants with
    /// the default identity tolerance.
    pub fn point(&self, component: u32, coords: Vec<f64>) -> Result<Point> {
        self.point_with_tol(component, coords, TOL_IDENTITY)
    }

    pub fn attach(&self, raw: &RawPoint) -> Result<Point> {
        self.point(raw.component, raw.coords.clone())
    }

    /// Attach raw coordinates with an explicit validation tolerance.
    pub fn point_with_tol(&self, component: u32, coords: Vec<f64>, tol: f64) -> Result<Point> {
        self.validate_coords(component, &coords, tol)?;
        Ok(Point {
            space: self.clone(),
            component,
            coords,
        })
    }

    fn validate_coords(&self, component: u32, coords: &[f64], tol: f64) -> Result<()> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint("non-finite coordinate".into()));
        }
        match self.kind() {
            SpaceKind::Euclidean { dim } => {
                if component != 0 {
                    return Err(Error::InvalidPoint("component must be 0".into()));
                }
                if coords.len() != *dim {
                    return Err(Error::InvalidPoint(format!(
                        "expected {dim} coordinates, got {}",
                        coords.len()
                    )));
                }
            }
            SpaceKind::Hyperbolic2 => {
                if component != 0 {
                    return Err(Error::InvalidPoint("component must be 0".into()));
                }
                if coords.len() != 3 {
                    return Err(Error::InvalidPoint("expected hyperboloid triple".into()));
                }
                let q = -coords[0] * coords[0] + coords[1] * coords[1] + coords[2] * coords[2];
                if (q + 1.0).abs() > tol * (1.0 + coords[0] * coords[0]) {
                    return Err(Error::InvalidPoint(format!(
                        "Minkowski norm {q} differs from -1"
                    )));
                }
                if coords[0] < 1.0 - tol {
                    return Err(Error::InvalidPoint("not on the upper sheet".into()));
                }
            }
            SpaceKind::SphericalTriangle { n } => {
                if component != 0 {
                    return Err(Error::InvalidPoint("component must be 0".into()));
                }
                validate_triangle_coords(*n, coords, tol)?;
            }
            SpaceKind::GluedPair { left, right, .. } => {
                let child = match component {
                    0 => left,
                    1 => right,
                    _ => {
                        return Err(Error::InvalidPoint(format!(
                            "glued-pair component {component} out of range"
                        )))
                    }
                };
                child.validate_coords(0, coords, tol)?;
            }
            SpaceKind::TriangleChain { len } => {
                if component < 1 || component > len + 1 {
                    return Err(Error::InvalidPoint(format!(
                        "chain component {component} outside 1..={}",
                        len + 1
                    )));
                }
                validate_triangle_coords(component + 1, coords, tol)?;
            }
        }
        Ok(())
    }
}

fn validate_triangle_coords(n: u32, coords: &[f64], tol: f64) -> Result<()> {
    if coords.len() != 3 {
        return Err(Error::InvalidPoint("expected unit 3-vector".into()));
    }
    let v = [coords[0], coords[1], coords[2]];
    if (sphere::norm(&v) - 1.0).abs() > tol {
        return Err(Error::InvalidPoint("not a unit vector".into()));
    }
    // Containment slack is a composed-geometry check, not an identity check.
    let contain_tol = tol.max(TOL_COMPOSED);
    if !sphere::triangle_contains(n, &v, contain_tol) {
        return Err(Error::InvalidPoint(format!(
            "point lies outside filled triangle {n}"
        )));
    }
    Ok(())
}

fn check_membership(space: &SpaceHandle, p: &Point, q: &Point) -> Result<()> {
    if p.space() != space || q.space() != space {
        return Err(Error::SpaceMismatch(
            "points do not belong to the given space".into(),
        ));
    }
    Ok(())
}

/// Closed-form vertex and distance data for triangle `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleData {
    pub n: u32,
    pub a: Vec3,
    pub b: Vec3,
    pub c: Vec3,
    /// Midpoint of the arc from `b` to `c`.
    pub mid_bc: Vec3,
    pub d_bc: f64,
    pub d_ab: f64,
    pub d_ac: f64,
    /// Distance from `a` to the midpoint of `[b, c]`.
    pub d_a_mid: f64,
}

/// Vertex coordinates and the four reference distances of triangle `n`.
pub fn triangle_data(n: u32) -> Result<TriangleData> {
    if n < 2 {
        return Err(Error::Domain(format!("triangle index {n} < 2")));
    }
    let (a, b, c) = sphere::triangle_vertices(n);
    let mid_bc = sphere::geodesic_point(&b, &c, 0.5);
    Ok(TriangleData {
        n,
        a,
        b,
        c,
        mid_bc,
        d_bc: sphere::distance(&b, &c),
        d_ab: sphere::distance(&a, &b),
        d_ac: sphere::distance(&a, &c),
        d_a_mid: sphere::distance(&a, &mid_bc),
    })
}

/// Numerically computed diameter of the filled triangle `n`.
pub fn triangle_diameter(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("triangle index {n} < 2")));
    }
    Ok(sphere::triangle_diameter(n))
}

// ---------------------------------------------------------------------------
// Chain internals
// ---------------------------------------------------------------------------

/// Triangle index hosted by chain component `c`.
fn chain_triangle(c: u32) -> u32 {
    c + 1
}

/// Length of the crossing of triangle `m` from its entry vertex `a_m` to its
/// exit vertex `b_m`.
fn bridge_len(m: u32) -> f64 {
    sphere::triangle_side(m)
}

/// Exit vertex (`b`) of every triangle; shared coordinates.
fn vertex_b() -> Vec3 {
    [3f64.sqrt() / 2.0, 0.5, 0.0]
}

/// Entry vertex `a_m` of triangle `m`.
fn vertex_a(m: u32) -> Vec3 {
    sphere::triangle_vertices(m).0
}

/// One leg of a cross-component chain geodesic: an arc inside a single
/// component from `from` to `to`.
struct ChainLeg {
    component: u32,
    from: Vec3,
    to: Vec3,
    len: f64,
}

/// Decompose the geodesic from `x` to `y` (in components `cx <= cy`) into
/// per-component legs. For `cx == cy` this is a single spherical arc.
fn chain_legs(x: &Point, y: &Point) -> Vec<ChainLeg> {
    let (cx, cy) = (x.component(), y.component());
    let (xv, yv) = (x.v3(), y.v3());
    if cx == cy {
        return vec![ChainLeg {
            component: cx,
            from: xv,
            to: yv,
            len: sphere::distance(&xv, &yv),
        }];
    }
    let b = vertex_b();
    let (lo_c, lo_v, hi_c, hi_v, reversed) = if cx < cy {
        (cx, xv, cy, yv, false)
    } else {
        (cy, yv, cx, xv, true)
    };
    let mut legs = Vec::new();
    legs.push(ChainLeg {
        component: lo_c,
        from: lo_v,
        to: b,
        len: sphere::distance(&lo_v, &b),
    });
    for c in (lo_c + 1)..hi_c {
        let m = chain_triangle(c);
        legs.push(ChainLeg {
            component: c,
            from: vertex_a(m),
            to: b,
            len: bridge_len(m),
        });
    }
    let a_hi = vertex_a(chain_triangle(hi_c));
    legs.push(ChainLeg {
        component: hi_c,
        from: a_hi,
        to: hi_v,
        len: sphere::distance(&a_hi, &hi_v),
    });
    if reversed {
        legs.reverse();
        for leg in &mut legs {
            std::mem::swap(&mut leg.from, &mut leg.to);
        }
    }
    legs
}

/// Distance in the triangle chain. Within one component this is the
/// spherical distance; across components the legs through the gluing
/// points add up.
pub fn chain_distance(chain: &SpaceHandle, x: &Point, y: &Point) -> Result<f64> {
    let SpaceKind::TriangleChain { .. } = chain.kind() else {
        return Err(Error::Capability("chain_distance needs a triangle chain".into()));
    };
    check_membership(chain, x, y)?;
    Ok(chain_legs(x, y).iter().map(|l| l.len).sum())
}

/// Smallest chain prefix index `N` such that the closed ball `B(a, r)` is
/// contained in the prefix `Y_N`, for a point of the prefix `Y_i`:
/// `N = i + ceil(r / arccos(sqrt(3)/(2i+4)))`.
pub fn chain_locality_index(i: u32, r: f64) -> Result<u32> {
    if i < 1 {
        return Err(Error::Domain("prefix index must be >= 1".into()));
    }
    if !(r > 0.0) {
        return Err(Error::Domain("radius must be positive".into()));
    }
    let step = (3f64.sqrt() / f64::from(2 * i + 4)).acos();
    Ok(i + (r / step).ceil() as u32)
}

/// [`chain_locality_index`] with the prefix index derived from the point's
/// component: component `c` lies in the prefix `Y_max(1, c-1)`.
pub fn chain_locality(chain: &SpaceHandle, a: &Point, r: f64) -> Result<u32> {
    let SpaceKind::TriangleChain { .. } = chain.kind() else {
        return Err(Error::Capability("chain_locality needs a triangle chain".into()));
    };
    if a.space() != chain {
        return Err(Error::SpaceMismatch("point not in the given chain".into()));
    }
    chain_locality_index(a.component().saturating_sub(1).max(1), r)
}

// ---------------------------------------------------------------------------
// Glued pair internals
// ---------------------------------------------------------------------------

struct GluedView<'a> {
    left: &'a SpaceHandle,
    right: &'a SpaceHandle,
    left_glue: Point,
    right_glue: Point,
}

fn glued_view(space: &SpaceHandle) -> Result<GluedView<'_>> {
    let SpaceKind::GluedPair {
        left,
        right,
        left_glue,
        right_glue,
    } = space.kind()
    else {
        return Err(Error::Capability("operation needs a glued pair".into()));
    };
    Ok(GluedView {
        left,
        right,
        left_glue: left.attach(left_glue)?,
        right_glue: right.attach(right_glue)?,
    })
}

fn glued_child_point(view: &GluedView<'_>, p: &Point) -> Result<Point> {
    let child = if p.component() == 0 { view.left } else { view.right };
    child.point(0, p.coords().to_vec())
}

// ---------------------------------------------------------------------------
// Public metric operations
// ---------------------------------------------------------------------------

/// Distance between two points of `space`.
pub fn distance(space: &SpaceHandle, p: &Point, q: &Point) -> Result<f64> {
    check_membership(space, p, q)?;
    Ok(match space.kind() {
        SpaceKind::Euclidean { .. } => p
            .coords()
            .iter()
            .zip(q.coords())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt(),
        SpaceKind::Hyperbolic2 => hyperbolic::distance(&p.v3(), &q.v3()),
        SpaceKind::SphericalTriangle { .. } => sphere::distance(&p.v3(), &q.v3()),
        SpaceKind::TriangleChain { .. } => chain_distance(space, p, q)?,
        SpaceKind::GluedPair { .. } => {
            let view = glued_view(space)?;
            if p.component() == q.component() {
                let child = if p.component() == 0 { view.left } else { view.right };
                distance(child, &glued_child_point(&view, p)?, &glued_child_point(&view, q)?)?
            } else {
                let (xp, yp) = if p.component() == 0 { (p, q) } else { (q, p) };
                distance(view.left, &glued_child_point(&view, xp)?, &view.left_glue)?
                    + distance(view.right, &view.right_glue, &glued_child_point(&view, yp)?)?
            }
        }
    })
}

/// Point `z = (1-t) p + t q` on the geodesic from `p` to `q`, `t in [0, 1]`.
pub fn geodesic_point(space: &SpaceHandle, p: &Point, q: &Point, t: f64) -> Result<Point> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("parameter {t} outside [0, 1]")));
    }
    check_membership(space, p, q)?;
    Ok(match space.kind() {
        SpaceKind::Euclidean { .. } => {
            let coords = p
                .coords()
                .iter()
                .zip(q.coords())
                .map(|(a, b)| (1.0 - t) * a + t * b)
                .collect();
            Point {
                space: space.clone(),
                component: 0,
                coords,
            }
        }
        SpaceKind::Hyperbolic2 => {
            Point::from_v3(space, 0, hyperbolic::geodesic_point(&p.v3(), &q.v3(), t))
        }
        SpaceKind::SphericalTriangle { .. } => {
            Point::from_v3(space, 0, sphere::geodesic_point(&p.v3(), &q.v3(), t))
        }
        SpaceKind::TriangleChain { .. } => {
            let legs = chain_legs(p, q);
            let total: f64 = legs.iter().map(|l| l.len).sum();
            locate_on_legs(space, &legs, t * total)
        }
        SpaceKind::GluedPair { .. } => {
            let view = glued_view(space)?;
            if p.component() == q.component() {
                let child = if p.component() == 0 { view.left } else { view.right };
                let z = geodesic_point(
                    child,
                    &glued_child_point(&view, p)?,
                    &glued_child_point(&view, q)?,
                    t,
                )?;
                Point {
                    space: space.clone(),
                    component: p.component(),
                    coords: z.coords().to_vec(),
                }
            } else {
                // Concatenated path through the identified gluing points.
                let (first, second, flip) = if p.component() == 0 {
                    (p, q, false)
                } else {
                    (q, p, true)
                };
                let lp = distance(
                    view.left,
                    &glued_child_point(&view, first)?,
                    &view.left_glue,
                )?;
                let lq = distance(
                    view.right,
                    &view.right_glue,
                    &glued_child_point(&view, second)?,
                )?;
                let total = lp + lq;
                let s = if flip { (1.0 - t) * total } else { t * total };
                if s <= lp {
                    let tt = if lp > 0.0 { s / lp } else { 0.0 };
                    let z = geodesic_point(
                        view.left,
                        &glued_child_point(&view, first)?,
                        &view.left_glue,
                        tt,
                    )?;
                    Point {
                        space: space.clone(),
                        component: 0,
                        coords: z.coords().to_vec(),
                    }
                } else {
                    let tt = if lq > 0.0 { (s - lp) / lq } else { 1.0 };
                    let z = geodesic_point(
                        view.right,
                        &view.right_glue,
                        &glued_child_point(&view, second)?,
                        tt,
                    )?;
                    Point {
                        space: space.clone(),
                        component: 1,
                        coords: z.coords().to_vec(),
                    }
                }
            }
        }
    })
}

/// Locate arc length `s` along concatenated chain legs. When `s` lands
/// exactly on a gluing point the earlier leg keeps it, so the shared point
/// is returned with the lower component tag.
fn locate_on_legs(space: &SpaceHandle, legs: &[ChainLeg], s: f64) -> Point {
    let mut remaining = s;
    for (idx, leg) in legs.iter().enumerate() {
        let last = idx + 1 == legs.len();
        if remaining <= leg.len || last {
            let t = if leg.len > 0.0 {
                (remaining / leg.len).clamp(0.0, 1.0)
            } else {
                0.0
            };
            let v = sphere::geodesic_point(&leg.from, &leg.to, t);
            return Point::from_v3(space, leg.component, v);
        }
        remaining -= leg.len;
    }
    unreachable!("legs are nonempty")
}

/// Midpoint `m(p, q)`.
pub fn midpoint(space: &SpaceHandle, p: &Point, q: &Point) -> Result<Point> {
    geodesic_point(space, p, q, 0.5)
}

/// Point `gamma(s)` on the unit-speed ray from `origin` through `through`.
/// Only complete model spaces support indefinite extension.
pub fn ray_point(space: &SpaceHandle, origin: &Point, through: &Point, s: f64) -> Result<Point> {
    check_membership(space, origin, through)?;
    if s < 0.0 {
        return Err(Error::Domain("ray parameter must be nonnegative".into()));
    }
    match space.kind() {
        SpaceKind::Euclidean { .. } => {
            let d = distance(space, origin, through)?;
            if d < 1e-15 {
                return Err(Error::Domain("ray direction undefined: origin = through".into()));
            }
            let coords = origin
                .coords()
                .iter()
                .zip(through.coords())
                .map(|(o, w)| o + (w - o) * s / d)
                .collect();
            Ok(Point {
                space: space.clone(),
                component: 0,
                coords,
            })
        }
        SpaceKind::Hyperbolic2 => hyperbolic::ray_point(&origin.v3(), &through.v3(), s)
            .map(|v| Point::from_v3(space, 0, v))
            .ok_or_else(|| Error::Domain("ray direction undefined: origin = through".into())),
        _ => Err(Error::Capability(
            "rays extend indefinitely only in euclidean and hyperbolic2".into(),
        )),
    }
}

/// A geodesic segment with cached endpoints and length.
#[derive(Debug, Clone)]
pub struct GeodesicSegment {
    space: SpaceHandle,
    p: Point,
    q: Point,
    length: f64,
}

impl GeodesicSegment {
    pub fn new(space: &SpaceHandle, p: Point, q: Point) -> Result<GeodesicSegment> {
        let length = distance(space, &p, &q)?;
        Ok(GeodesicSegment {
            space: space.clone(),
            p,
            q,
            length,
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }
    pub fn start(&self) -> &Point {
        &self.p
    }
    pub fn end(&self) -> &Point {
        &self.q
    }

    /// Evaluate at parameter `t in [0, 1]`.
    pub fn eval(&self, t: f64) -> Result<Point> {
        geodesic_point(&self.space, &self.p, &self.q, t)
    }

    /// Evaluate at arc length `s in [0, length]`.
    pub fn eval_arc(&self, s: f64) -> Result<Point> {
        if self.length == 0.0 {
            return Ok(self.p.clone());
        }
        if s < -TOL_COMPOSED || s > self.length + TOL_COMPOSED {
            return Err(Error::Domain(format!(
                "arc length {s} outside [0, {}]",
                self.length
            )));
        }
        self.eval((s / self.length).clamp(0.0, 1.0))
    }
}

// ---------------------------------------------------------------------------
// Convenience constructors used across the crate
// ---------------------------------------------------------------------------

/// Euclidean point from a slice.
pub fn euclidean_point(space: &SpaceHandle, coords: &[f64]) -> Result<Point> {
    space.point(0, coords.to_vec())
}

/// Lift planar coordinates onto the hyperboloid sheet.
pub fn hyperbolic_point(space: &SpaceHandle, x1: f64, x2: f64) -> Result<Point> {
    space.point(0, hyperbolic::reproject(&[0.0, x1, x2]).to_vec())
}

/// Vertex selector for triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleVertex {
    A,
    B,
    C,
}

/// A vertex of the triangle hosted by chain component `c`, tagged with `c`.
pub fn chain_vertex(chain: &SpaceHandle, c: u32, which: TriangleVertex) -> Result<Point> {
    let SpaceKind::TriangleChain { len } = chain.kind() else {
        return Err(Error::Capability("chain_vertex needs a triangle chain".into()));
    };
    if c < 1 || c > len + 1 {
        return Err(Error::Domain(format!("component {c} outside 1..={}", len + 1)));
    }
    let (a, b, cc) = sphere::triangle_vertices(chain_triangle(c));
    let v = match which {
        TriangleVertex::A => a,
        TriangleVertex::B => b,
        TriangleVertex::C => cc,
    };
    chain.point(c, v.to_vec())
}

/// A vertex of a standalone spherical triangle space.
pub fn triangle_vertex(space: &SpaceHandle, which: TriangleVertex) -> Result<Point> {
    let SpaceKind::SphericalTriangle { n } = space.kind() else {
        return Err(Error::Capability("triangle_vertex needs a spherical triangle".into()));
    };
    let (a, b, c) = sphere::triangle_vertices(*n);
    let v = match which {
        TriangleVertex::A => a,
        TriangleVertex::B => b,
        TriangleVertex::C => c,
    };
    space.point(0, v.to_vec())
}
