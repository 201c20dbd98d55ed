//! Planar primitives shared by every other module: points, rigid motions,
//! tolerances, polygon measures and the tolerant predicates used to compare
//! vertices coming from different placements.
//!
//! Angles are carried in degrees everywhere; radians only appear inside the
//! trigonometric calls.

use std::collections::HashMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    NonSimple(usize, usize),
    #[error("tolerances must be strictly positive (eps_len = {eps_len}, eps_ang = {eps_ang})")]
    InvalidTolerance { eps_len: f64, eps_ang: f64 },
}

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at `deg` degrees from the positive x-axis.
    pub fn unit(deg: f64) -> Self {
        let (s, c) = deg.to_radians().sin_cos();
        Point::new(c, s)
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3-d cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Direction of this vector in degrees, in (-180, 180].
    pub fn heading(self) -> f64 {
        self.y.atan2(self.x).to_degrees()
    }

    pub fn rotate(self, deg: f64) -> Point {
        let (s, c) = deg.to_radians().sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn rotate_about(self, center: Point, deg: f64) -> Point {
        center + (self - center).rotate(deg)
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point {
    fn add_assign(&mut self, o: Point) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Rigid motion `p -> R(rotation) * F * p + translation`, where `F` mirrors
/// across the x-axis when `reflect` is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    /// Degrees, counterclockwise.
    pub rotation: f64,
    pub translation: Point,
    pub reflect: bool,
}

impl Default for Isometry {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        rotation: 0.0,
        translation: Point::ORIGIN,
        reflect: false,
    };

    pub fn new(rotation: f64, translation: Point, reflect: bool) -> Self {
        Isometry {
            rotation,
            translation,
            reflect,
        }
    }

    pub fn rotation(deg: f64) -> Self {
        Isometry::new(deg, Point::ORIGIN, false)
    }

    pub fn translation(t: Point) -> Self {
        Isometry::new(0.0, t, false)
    }

    /// Rotation by `deg` about `center`.
    pub fn rotation_about(center: Point, deg: f64) -> Self {
        Isometry::new(deg, center - center.rotate(deg), false)
    }

    pub fn apply(&self, p: Point) -> Point {
        let q = if self.reflect { Point::new(p.x, -p.y) } else { p };
        q.rotate(self.rotation) + self.translation
    }

    /// Determinant of the linear part: `-1` iff the motion reverses orientation.
    pub fn determinant(&self) -> f64 {
        if self.reflect {
            -1.0
        } else {
            1.0
        }
    }

    /// The motion `self` followed by `next`.
    pub fn then(&self, next: &Isometry) -> Isometry {
        let rotation = if next.reflect {
            next.rotation - self.rotation
        } else {
            next.rotation + self.rotation
        };
        Isometry {
            rotation,
            translation: next.apply(self.translation),
            reflect: self.reflect ^ next.reflect,
        }
    }
}

pub fn apply_isometry(iso: &Isometry, p: Point) -> Point {
    iso.apply(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Absolute length tolerance.
    pub eps_len: f64,
    /// Angle tolerance in degrees.
    pub eps_ang: f64,
}

impl Tolerance {
    pub fn new(eps_len: f64, eps_ang: f64) -> Result<Self, GeomError> {
        if eps_len > 0.0 && eps_ang > 0.0 {
            Ok(Tolerance { eps_len, eps_ang })
        } else {
            Err(GeomError::InvalidTolerance { eps_len, eps_ang })
        }
    }

    /// Default tolerance for a patch whose rhombi have side `side_len`.
    pub fn for_side(side_len: f64) -> Self {
        Tolerance {
            eps_len: 1e-7 * side_len,
            eps_ang: 1e-6,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::for_side(1.0)
    }
}

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl BBox {
    pub fn of(points: &[Point]) -> BBox {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        BBox { min, max }
    }

    pub fn overlaps(&self, o: &BBox, pad: f64) -> bool {
        self.min.x <= o.max.x + pad
            && o.min.x <= self.max.x + pad
            && self.min.y <= o.max.y + pad
            && o.min.y <= self.max.y + pad
    }

    pub fn contains(&self, p: Point, pad: f64) -> bool {
        p.x >= self.min.x - pad
            && p.x <= self.max.x + pad
            && p.y >= self.min.y - pad
            && p.y <= self.max.y + pad
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }
}

/// Signed shoelace area without input checks.
pub(crate) fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut twice = 0.0;
    for i in 0..n {
        twice += vertices[i].cross(vertices[(i + 1) % n]);
    }
    0.5 * twice
}

/// Signed shoelace area, positive iff the vertices run counterclockwise.
pub fn polygon_area(vertices: &[Point]) -> Result<f64, GeomError> {
    if vertices.len() < 3 {
        return Err(GeomError::TooFewVertices(vertices.len()));
    }
    Ok(signed_area(vertices))
}

pub fn centroid(vertices: &[Point]) -> Point {
    let mut c = Point::ORIGIN;
    for &p in vertices {
        c += p;
    }
    c * (1.0 / vertices.len() as f64)
}

/// Interior angle at every vertex, in degrees, measured from coordinates.
/// Works for either orientation; reflex corners come out above 180.
pub fn interior_angles(vertices: &[Point]) -> Vec<f64> {
    let n = vertices.len();
    let ccw = signed_area(vertices) >= 0.0;
    (0..n)
        .map(|i| {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let vin = cur - prev;
            let vout = next - cur;
            let turn = vin.cross(vout).atan2(vin.dot(vout)).to_degrees();
            if ccw {
                180.0 - turn
            } else {
                180.0 + turn
            }
        })
        .collect()
}

pub fn distance_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a + ab * t)
}

fn segments_touch(p1: Point, p2: Point, q1: Point, q2: Point, eps: f64) -> bool {
    let d1 = (q2 - q1).cross(p1 - q1);
    let d2 = (q2 - q1).cross(p2 - q1);
    let d3 = (p2 - p1).cross(q1 - p1);
    let d4 = (p2 - p1).cross(q2 - p1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    distance_to_segment(p1, q1, q2) <= eps
        || distance_to_segment(p2, q1, q2) <= eps
        || distance_to_segment(q1, p1, p2) <= eps
        || distance_to_segment(q2, p1, p2) <= eps
}

/// Checks that no two non-adjacent edges meet and no edge is degenerate.
pub fn check_simple(vertices: &[Point], eps: f64) -> Result<(), GeomError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices(n));
    }
    for i in 0..n {
        if vertices[i].dist(vertices[(i + 1) % n]) <= eps {
            return Err(GeomError::NonSimple(i, i));
        }
    }
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (p1, p2) = (vertices[i], vertices[(i + 1) % n]);
            let (q1, q2) = (vertices[j], vertices[(j + 1) % n]);
            if segments_touch(p1, p2, q1, q2, eps) {
                return Err(GeomError::NonSimple(i, j));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    OnBoundary,
    Outside,
}

/// Point location against a simple polygon of either orientation.
pub fn locate(p: Point, vertices: &[Point], eps: f64) -> Location {
    let n = vertices.len();
    for i in 0..n {
        if distance_to_segment(p, vertices[i], vertices[(i + 1) % n]) <= eps {
            return Location::OnBoundary;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Ear-clipping triangulation of a simple polygon. Triangles come out
/// counterclockwise; straight (180 degree) vertices are dropped first.
pub fn triangulate(vertices: &[Point]) -> Vec<[Point; 3]> {
    let mut poly: Vec<Point> = vertices.to_vec();
    if signed_area(&poly) < 0.0 {
        poly.reverse();
    }
    let scale = BBox::of(&poly);
    let tiny = 1e-14 * (scale.width() + scale.height()).powi(2).max(f64::MIN_POSITIVE);

    // drop straight vertices
    let mut i = 0;
    while poly.len() > 3 && i < poly.len() {
        let n = poly.len();
        let (a, b, c) = (poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]);
        if (b - a).cross(c - b).abs() <= tiny && (b - a).dot(c - b) > 0.0 {
            poly.remove(i);
        } else {
            i += 1;
        }
    }

    let mut out = Vec::with_capacity(poly.len().saturating_sub(2));
    let mut guard = 0;
    while poly.len() > 3 && guard < 10_000 {
        guard += 1;
        let n = poly.len();
        let mut clipped = false;
        for i in 0..n {
            let (a, b, c) = (poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]);
            if (b - a).cross(c - b) <= tiny {
                continue;
            }
            let blocked = poly.iter().enumerate().any(|(k, &q)| {
                if k == i || k == (i + n - 1) % n || k == (i + 1) % n {
                    return false;
                }
                if q == a || q == b || q == c {
                    return false;
                }
                (b - a).cross(q - a) >= -tiny
                    && (c - b).cross(q - b) >= -tiny
                    && (a - c).cross(q - c) >= -tiny
            });
            if !blocked {
                out.push([a, b, c]);
                poly.remove(i);
                clipped = true;
                break;
            }
        }
        if !clipped {
            // numerically stuck; fan out the remainder
            break;
        }
    }
    if poly.len() >= 3 {
        for k in 1..poly.len() - 1 {
            out.push([poly[0], poly[k], poly[k + 1]]);
        }
    }
    out
}

/// Sutherland-Hodgman clip of a convex polygon by a counterclockwise
/// convex clip polygon.
fn clip_convex(subject: &[Point], clip: &[Point]) -> Vec<Point> {
    let mut output: Vec<Point> = subject.to_vec();
    let m = clip.len();
    for i in 0..m {
        if output.is_empty() {
            break;
        }
        let a = clip[i];
        let b = clip[(i + 1) % m];
        let edge = b - a;
        let input = std::mem::take(&mut output);
        let k = input.len();
        for j in 0..k {
            let cur = input[j];
            let prev = input[(j + k - 1) % k];
            let dc = edge.cross(cur - a);
            let dp = edge.cross(prev - a);
            if dc >= 0.0 {
                if dp < 0.0 {
                    output.push(prev.lerp(cur, dp / (dp - dc)));
                }
                output.push(cur);
            } else if dp >= 0.0 {
                output.push(prev.lerp(cur, dp / (dp - dc)));
            }
        }
    }
    output
}

/// Area of the intersection of two simple polygons, via triangle pairs.
pub fn intersection_area(a: &[Point], b: &[Point]) -> f64 {
    if !BBox::of(a).overlaps(&BBox::of(b), 0.0) {
        return 0.0;
    }
    triangulated_intersection_area(&triangulate(a), &triangulate(b))
}

/// [`intersection_area`] for polygons already split by [`triangulate`].
pub fn triangulated_intersection_area(ta: &[[Point; 3]], tb: &[[Point; 3]]) -> f64 {
    let mut total = 0.0;
    for s in ta {
        let sb = BBox::of(s);
        for t in tb {
            if !sb.overlaps(&BBox::of(t), 0.0) {
                continue;
            }
            let piece = clip_convex(s, t);
            if piece.len() >= 3 {
                total += signed_area(&piece).abs();
            }
        }
    }
    total
}

/// True iff the open interiors share a region of area above `eps_len^2`.
/// Shared edges and touching corners do not count.
pub fn interiors_intersect(a: &[Point], b: &[Point], tol: &Tolerance) -> Result<bool, GeomError> {
    check_simple(a, tol.eps_len)?;
    check_simple(b, tol.eps_len)?;
    Ok(intersection_area(a, b) > tol.eps_len * tol.eps_len)
}

/// Quantized coordinate key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnapKey(pub i64, pub i64);

/// Rounds onto a lattice of pitch `2 * eps_len`: two points sharing a key
/// are never more than `2*sqrt(2)*eps_len` apart. Points that straddle a
/// cell border can still get different keys; [`PointIndex`] resolves those.
pub fn snap_key(p: Point, tol: &Tolerance) -> SnapKey {
    let cell = 2.0 * tol.eps_len;
    SnapKey((p.x / cell).round() as i64, (p.y / cell).round() as i64)
}

/// Tolerant vertex identification: a point within `eps_len` of an already
/// registered point receives that point's id. Ids follow insertion order.
#[derive(Debug, Clone)]
pub struct PointIndex {
    tol: Tolerance,
    points: Vec<Point>,
    cells: HashMap<SnapKey, Vec<usize>>,
}

impl PointIndex {
    pub fn new(tol: Tolerance) -> Self {
        PointIndex {
            tol,
            points: Vec::new(),
            cells: HashMap::new(),
        }
    }

    pub fn find(&self, p: Point) -> Option<usize> {
        let SnapKey(kx, ky) = snap_key(p, &self.tol);
        let mut best: Option<(f64, usize)> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&SnapKey(kx + dx, ky + dy)) {
                    for &id in ids {
                        let d = self.points[id].dist(p);
                        if d <= self.tol.eps_len
                            && best.is_none_or(|(bd, bid)| d < bd || (d == bd && id < bid))
                        {
                            best = Some((d, id));
                        }
                    }
                }
            }
        }
        best.map(|(_, id)| id)
    }

    pub fn insert(&mut self, p: Point) -> usize {
        if let Some(id) = self.find(p) {
            return id;
        }
        let id = self.points.len();
        self.points.push(p);
        self.cells.entry(snap_key(p, &self.tol)).or_default().push(id);
        id
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Uniform-grid bucket index over bounding boxes, used to prune pair tests.
#[derive(Debug, Clone)]
pub struct SpatialGrid {
    cell: f64,
    cells: HashMap<(i64, i64), Vec<usize>>,
}

impl SpatialGrid {
    pub fn new(cell: f64) -> Self {
        SpatialGrid {
            cell: if cell > 0.0 { cell } else { 1.0 },
            cells: HashMap::new(),
        }
    }

    fn key(&self, p: Point) -> (i64, i64) {
        ((p.x / self.cell).floor() as i64, (p.y / self.cell).floor() as i64)
    }

    pub fn insert(&mut self, id: usize, bbox: &BBox) {
        let (x0, y0) = self.key(bbox.min);
        let (x1, y1) = self.key(bbox.max);
        for x in x0..=x1 {
            for y in y0..=y1 {
                self.cells.entry((x, y)).or_default().push(id);
            }
        }
    }

    /// Ids whose boxes share a cell with `bbox`, sorted and deduplicated.
    pub fn query(&self, bbox: &BBox) -> Vec<usize> {
        let (x0, y0) = self.key(bbox.min);
        let (x1, y1) = self.key(bbox.max);
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if let Some(ids) = self.cells.get(&(x, y)) {
                    out.extend_from_slice(ids);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn query_point(&self, p: Point, pad: f64) -> Vec<usize> {
        self.query(&BBox {
            min: Point::new(p.x - pad, p.y - pad),
            max: Point::new(p.x + pad, p.y + pad),
        })
    }
}
