//! Exact integer geometry for complete geometric graphs.
//!
//! Coordinates are integers with |x|, |y| bounded by [`COORD_LIMIT`], which
//! keeps every predicate in this module exact: 3-point orientation fits in
//! `i64`, and angle comparison needs at most a 256-bit product comparison,
//! done here with schoolbook limbs.  No floating point anywhere.
//!
//! A [`PointSet`] is a validated instance: at least three points, within
//! bounds, pairwise distinct, and in general position (no collinear triple).
//! Validation is eager and O(n³); instances are desk-scale.

use std::cmp::Ordering;

use crate::bitset::BitSet;

/// Coordinates must satisfy |x|, |y| <= COORD_LIMIT (2^20).
///
/// With this bound, coordinate differences fit in 22 bits, orientation
/// determinants in 45 bits, and the squared dot/norm products compared by
/// [`angle_compare`] in 86 bits each — so the final cross-multiplied
/// comparison needs 172 bits, covered by the 256-bit helper below.
pub const COORD_LIMIT: i64 = 1 << 20;

/// Hard cap on instance size so edge indices fit the 128-bit [`BitSet`]
/// (C(16,2) = 120).
pub const MAX_POINTS: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

/// Sign of the signed area of the triangle `p`, `q`, `r`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match orientation_det(p, q, r).cmp(&0) {
        Ordering::Greater => Orientation::CounterClockwise,
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// The determinant (q - p) x (r - p).  Exact for in-bounds coordinates.
pub fn orientation_det(p: Point, q: Point, r: Point) -> i64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

/// Proper (interior) crossing test for two closed segments.
///
/// Returns true iff the open segments share a point.  Segments that merely
/// share an endpoint do not cross; collinear overlaps cannot occur between
/// edges of a general-position point set and report false here.
pub fn segments_cross(e: (Point, Point), f: (Point, Point)) -> bool {
    let o1 = orientation(e.0, e.1, f.0);
    let o2 = orientation(e.0, e.1, f.1);
    let o3 = orientation(f.0, f.1, e.0);
    let o4 = orientation(f.0, f.1, e.1);
    strictly_opposite(o1, o2) && strictly_opposite(o3, o4)
}

fn strictly_opposite(a: Orientation, b: Orientation) -> bool {
    matches!(
        (a, b),
        (Orientation::CounterClockwise, Orientation::Clockwise)
            | (Orientation::Clockwise, Orientation::CounterClockwise)
    )
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("too many points: {0} exceeds the supported maximum of {MAX_POINTS}")]
    TooManyPoints(usize),
    #[error("coordinate out of range at point {index}: ({x}, {y}) exceeds ±{COORD_LIMIT}")]
    CoordinateOverflow { index: usize, x: i64, y: i64 },
    #[error("duplicate point: indices {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("collinear triple: points {0}, {1}, {2}")]
    CollinearTriple(usize, usize, usize),
    #[error("angle apex coincides with a ray endpoint")]
    ApexCoincides,
}

/// An unordered pair of point indices, normalised to `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    a: usize,
    b: usize,
}

impl EdgeId {
    /// Panics if `a == b`; edges of a complete graph are loopless.
    pub fn new(a: usize, b: usize) -> EdgeId {
        assert!(a != b, "loop edge ({a}, {a}) is not a valid EdgeId");
        EdgeId {
            a: a.min(b),
            b: a.max(b),
        }
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn touches(self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl std::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl std::fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A validated general-position point set with its convex hull.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point>,
    /// Hull point indices in counter-clockwise order, starting at the
    /// lexicographically smallest point.
    hull: Vec<usize>,
    /// Indices not on the hull, ascending.
    interior: Vec<usize>,
}

impl PointSet {
    /// Validates the raw coordinates and computes the hull partition.
    ///
    /// Checks run in a fixed order so the reported indices are
    /// deterministic: bounds first, then duplicates, then collinearity.
    pub fn build(raw: &[(i64, i64)]) -> Result<PointSet, GeomError> {
        if raw.len() < 3 {
            return Err(GeomError::TooFewPoints(raw.len()));
        }
        if raw.len() > MAX_POINTS {
            return Err(GeomError::TooManyPoints(raw.len()));
        }
        for (index, &(x, y)) in raw.iter().enumerate() {
            if x.abs() > COORD_LIMIT || y.abs() > COORD_LIMIT {
                return Err(GeomError::CoordinateOverflow { index, x, y });
            }
        }
        let points: Vec<Point> = raw.iter().map(|&(x, y)| Point::new(x, y)).collect();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(GeomError::DuplicatePoint(i, j));
                }
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                for k in j + 1..points.len() {
                    if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                        return Err(GeomError::CollinearTriple(i, j, k));
                    }
                }
            }
        }
        let hull = convex_hull(&points);
        let on_hull: BitSet = hull.iter().copied().collect();
        let interior = (0..points.len()).filter(|&i| !on_hull.contains(i)).collect();
        Ok(PointSet {
            points,
            hull,
            interior,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    pub fn interior(&self) -> &[usize] {
        &self.interior
    }

    /// Number of points strictly inside the hull, written i(P) in reports.
    pub fn interior_count(&self) -> usize {
        self.interior.len()
    }

    /// Number of edges of the complete geometric graph on these points.
    pub fn edge_count(&self) -> usize {
        self.points.len() * (self.points.len() - 1) / 2
    }

    /// Position of `e` in the lexicographic edge order
    /// (0,1), (0,2), ..., (0,n-1), (1,2), ...
    pub fn edge_index(&self, e: EdgeId) -> usize {
        let n = self.points.len();
        debug_assert!(e.b < n);
        e.a * n - e.a * (e.a + 1) / 2 + (e.b - e.a - 1)
    }

    /// Inverse of [`edge_index`](Self::edge_index).
    pub fn edge_at(&self, index: usize) -> EdgeId {
        let n = self.points.len();
        let mut rest = index;
        for a in 0..n - 1 {
            let row = n - 1 - a;
            if rest < row {
                return EdgeId::new(a, a + 1 + rest);
            }
            rest -= row;
        }
        panic!("edge index {index} out of range for {n} points");
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        let n = self.points.len();
        (0..n).flat_map(move |a| (a + 1..n).map(move |b| EdgeId::new(a, b)))
    }

    pub fn segment(&self, e: EdgeId) -> (Point, Point) {
        (self.points[e.a], self.points[e.b])
    }

    /// True iff the endpoints of `e` are consecutive on the hull cycle.
    pub fn is_hull_edge(&self, e: EdgeId) -> bool {
        let h = &self.hull;
        (0..h.len()).any(|i| {
            let (u, v) = (h[i], h[(i + 1) % h.len()]);
            EdgeId::new(u, v) == e
        })
    }

    /// Edge indices of the hull boundary.
    pub fn hull_edge_set(&self) -> BitSet {
        let h = &self.hull;
        (0..h.len())
            .map(|i| self.edge_index(EdgeId::new(h[i], h[(i + 1) % h.len()])))
            .collect()
    }
}

/// Andrew's monotone chain; returns hull indices counter-clockwise starting
/// at the lexicographically smallest point.  Assumes general position.
fn convex_hull(points: &[Point]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| points[i]);
    let chain = |iter: &mut dyn Iterator<Item = usize>| {
        let mut hull: Vec<usize> = Vec::new();
        for i in iter {
            while hull.len() >= 2 {
                let p = points[hull[hull.len() - 2]];
                let q = points[hull[hull.len() - 1]];
                if orientation(p, q, points[i]) == Orientation::CounterClockwise {
                    break;
                }
                hull.pop();
            }
            hull.push(i);
        }
        hull
    };
    let mut lower = chain(&mut order.iter().copied());
    let mut upper = chain(&mut order.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

/// Compares the convex angles ∠`u1 w v1` and ∠`u2 w v2` exactly.
///
/// Both angles lie in [0, π); for rays taken from a general-position point
/// set they lie in (0, π), so the comparison below never sees a degenerate
/// straight angle.  Strategy: classify each angle as acute / right / obtuse
/// by the sign of the dot product, then within a class compare squared
/// cosines as integer cross-products.
pub fn angle_compare(
    w: Point,
    first: (Point, Point),
    second: (Point, Point),
) -> Result<Ordering, GeomError> {
    if [first.0, first.1, second.0, second.1].contains(&w) {
        return Err(GeomError::ApexCoincides);
    }
    let ray = |p: Point| (p.x - w.x, p.y - w.y);
    let dot = |a: (i64, i64), b: (i64, i64)| a.0 * b.0 + a.1 * b.1;
    let norm2 = |a: (i64, i64)| a.0 * a.0 + a.1 * a.1;
    let (a1, b1) = (ray(first.0), ray(first.1));
    let (a2, b2) = (ray(second.0), ray(second.1));
    let (d1, d2) = (dot(a1, b1), dot(a2, b2));
    // 0 = acute, 1 = right, 2 = obtuse; the class orders the angles coarsely.
    let class = |d: i64| (d <= 0) as u8 + (d < 0) as u8;
    if class(d1) != class(d2) {
        return Ok(class(d1).cmp(&class(d2)));
    }
    if class(d1) == 1 {
        return Ok(Ordering::Equal);
    }
    // cos²θᵢ = dᵢ² / (|aᵢ|²|bᵢ|²); compare d1²·q2 with d2²·q1.
    let sq = |d: i64| (d as i128 * d as i128) as u128;
    let q1 = norm2(a1) as u128 * norm2(b1) as u128;
    let q2 = norm2(a2) as u128 * norm2(b2) as u128;
    let cos2 = cmp_products(sq(d1), q2, sq(d2), q1);
    Ok(if class(d1) == 0 {
        cos2.reverse() // both cosines positive: larger cosine, smaller angle
    } else {
        cos2 // both negative: larger squared cosine, larger angle
    })
}

/// Compares `a * b` with `c * d` exactly via 256-bit schoolbook products.
fn cmp_products(a: u128, b: u128, c: u128, d: u128) -> Ordering {
    let left = wide_mul(a, b);
    let right = wide_mul(c, d);
    left.iter().rev().cmp(right.iter().rev())
}

/// Full 256-bit product of two u128 values, as little-endian u64 limbs.
fn wide_mul(x: u128, y: u128) -> [u64; 4] {
    let xs = [x as u64, (x >> 64) as u64];
    let ys = [y as u64, (y >> 64) as u64];
    let mut out = [0u64; 4];
    for i in 0..2 {
        let mut carry = 0u128;
        for j in 0..2 {
            let cur = out[i + j] as u128 + xs[i] as u128 * ys[j] as u128 + carry;
            out[i + j] = cur as u64;
            carry = cur >> 64;
        }
        out[i + 2] = (out[i + 2] as u128 + carry) as u64;
    }
    out
}
