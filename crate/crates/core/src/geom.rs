//! Small 2D/3D vector types and planar geometry helpers.

use crate::real::Real;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// 2D point / vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector2<R> {
    pub x: R,
    pub y: R,
}

/// 3D point / vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3<R> {
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Real> Vector2<R> {
    pub fn new(x: R, y: R) -> Self {
        Self { x, y }
    }

    pub fn zero() -> Self {
        Self {
            x: R::zero(),
            y: R::zero(),
        }
    }

    pub fn dot(self, o: Self) -> R {
        self.x * o.x + self.y * o.y
    }

    /// 2D cross product (z component).
    pub fn cross(self, o: Self) -> R {
        self.x * o.y - self.y * o.x
    }

    pub fn norm_sq(self) -> R {
        self.dot(self)
    }

    pub fn norm(self) -> R {
        self.norm_sq().sqrt()
    }

    pub fn distance(self, o: Self) -> R {
        (self - o).norm()
    }

    /// Heading of the vector measured from +x, in `(-pi, pi]`.
    pub fn heading(self) -> R {
        self.y.atan2(self.x)
    }

    pub fn from_heading(heading: R) -> Self {
        Self::new(heading.cos(), heading.sin())
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        if n == R::zero() {
            Self::zero()
        } else {
            self / n
        }
    }
}

impl<R: Real> Vector3<R> {
    pub fn new(x: R, y: R, z: R) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self {
            x: R::zero(),
            y: R::zero(),
            z: R::zero(),
        }
    }

    pub fn dot(self, o: Self) -> R {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn norm(self) -> R {
        self.dot(self).sqrt()
    }

    pub fn distance(self, o: Self) -> R {
        (self - o).norm()
    }

    pub fn xy(self) -> Vector2<R> {
        Vector2::new(self.x, self.y)
    }
}

macro_rules! impl_vec_ops {
    ($t:ident, $($f:ident),+) => {
        impl<R: Real> Add for $t<R> {
            type Output = Self;
            fn add(self, o: Self) -> Self {
                Self { $($f: self.$f + o.$f),+ }
            }
        }
        impl<R: Real> AddAssign for $t<R> {
            fn add_assign(&mut self, o: Self) {
                $(self.$f = self.$f + o.$f;)+
            }
        }
        impl<R: Real> Sub for $t<R> {
            type Output = Self;
            fn sub(self, o: Self) -> Self {
                Self { $($f: self.$f - o.$f),+ }
            }
        }
        impl<R: Real> Mul<R> for $t<R> {
            type Output = Self;
            fn mul(self, s: R) -> Self {
                Self { $($f: self.$f * s),+ }
            }
        }
        impl<R: Real> Div<R> for $t<R> {
            type Output = Self;
            fn div(self, s: R) -> Self {
                Self { $($f: self.$f / s),+ }
            }
        }
        impl<R: Real> Neg for $t<R> {
            type Output = Self;
            fn neg(self) -> Self {
                Self { $($f: -self.$f),+ }
            }
        }
    };
}

impl_vec_ops!(Vector2, x, y);
impl_vec_ops!(Vector3, x, y, z);

/// Distance from point `p` to the segment `a`-`b`.
pub fn point_segment_distance<R: Real>(p: Vector2<R>, a: Vector2<R>, b: Vector2<R>) -> R {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == R::zero() {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len_sq).max(R::zero()).min(R::one());
    p.distance(a + ab * t)
}

fn orient<R: Real>(a: Vector2<R>, b: Vector2<R>, c: Vector2<R>) -> R {
    (b - a).cross(c - a)
}

/// Proper or touching intersection test for segments `a`-`b` and `c`-`d`.
pub fn segments_intersect<R: Real>(
    a: Vector2<R>,
    b: Vector2<R>,
    c: Vector2<R>,
    d: Vector2<R>,
) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > R::zero() && d2 < R::zero()) || (d1 < R::zero() && d2 > R::zero()))
        && ((d3 > R::zero() && d4 < R::zero()) || (d3 < R::zero() && d4 > R::zero()))
    {
        return true;
    }
    let on = |p: Vector2<R>, q: Vector2<R>, r: Vector2<R>| -> bool {
        orient(p, q, r) == R::zero()
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    on(c, d, a) || on(c, d, b) || on(a, b, c) || on(a, b, d)
}

/// Minimum distance between segments `a`-`b` and `c`-`d` (zero if they cross).
pub fn segment_segment_distance<R: Real>(
    a: Vector2<R>,
    b: Vector2<R>,
    c: Vector2<R>,
    d: Vector2<R>,
) -> R {
    if segments_intersect(a, b, c, d) {
        return R::zero();
    }
    point_segment_distance(a, c, d)
        .min(point_segment_distance(b, c, d))
        .min(point_segment_distance(c, a, b))
        .min(point_segment_distance(d, a, b))
}

/// Simple polygon stored as counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<R> {
    pub vertices: Vec<Vector2<R>>,
}

impl<R: Real> Polygon<R> {
    /// Builds a polygon, reversing the vertex order if it is clockwise.
    pub fn new(mut vertices: Vec<Vector2<R>>) -> Self {
        if signed_area(&vertices) < R::zero() {
            vertices.reverse();
        }
        Self { vertices }
    }

    pub fn rectangle(lower: Vector2<R>, upper: Vector2<R>) -> Self {
        Self::new(vec![
            lower,
            Vector2::new(upper.x, lower.y),
            upper,
            Vector2::new(lower.x, upper.y),
        ])
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> R {
        signed_area(&self.vertices).abs()
    }

    pub fn centroid(&self) -> Vector2<R> {
        let n = self.vertices.len();
        let a = signed_area(&self.vertices);
        if a == R::zero() {
            // degenerate: fall back to vertex mean
            let mut s = Vector2::zero();
            for v in &self.vertices {
                s += *v;
            }
            return s / R::of(n as f64);
        }
        let mut cx = R::zero();
        let mut cy = R::zero();
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            cx = cx + (p.x + q.x) * w;
            cy = cy + (p.y + q.y) * w;
        }
        let six = R::of(6.0);
        Vector2::new(cx / (six * a), cy / (six * a))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vector2<R>, Vector2<R>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Point containment (boundary counts as inside).
    pub fn contains(&self, p: Vector2<R>) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[j];
            if point_segment_distance(p, a, b) == R::zero() {
                return true;
            }
            if (a.y > p.y) != (b.y > p.y) {
                let x_int = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
                if p.x < x_int {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Distance from a point to the polygon (zero inside).
    pub fn distance(&self, p: Vector2<R>) -> R {
        if self.contains(p) {
            return R::zero();
        }
        let mut best = R::infinity();
        for (a, b) in self.edges() {
            best = best.min(point_segment_distance(p, a, b));
        }
        best
    }

    /// Minimum distance from segment `a`-`b` to the polygon (zero if it
    /// crosses or an endpoint lies inside).
    pub fn segment_clearance(&self, a: Vector2<R>, b: Vector2<R>) -> R {
        if self.contains(a) || self.contains(b) {
            return R::zero();
        }
        let mut best = R::infinity();
        for (p, q) in self.edges() {
            best = best.min(segment_segment_distance(a, b, p, q));
        }
        best
    }

    /// Convex-polygon offset: each vertex moved outward by `margin` along
    /// the bisector of its adjacent edge normals (miter join). The result
    /// circumscribes the true Minkowski inflation.
    pub fn inflate(&self, margin: R) -> Self {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let prev = self.vertices[(i + n - 1) % n];
            let cur = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            // outward normals of both incident edges (CCW polygon)
            let n1 = rot_right((cur - prev).normalized());
            let n2 = rot_right((next - cur).normalized());
            let bisector = (n1 + n2).normalized();
            let denom = (R::one() + n1.dot(n2)) / R::of(2.0);
            let scale = if denom > R::of(1e-9) {
                margin / denom.sqrt()
            } else {
                margin
            };
            out.push(cur + bisector * scale);
        }
        Self { vertices: out }
    }
}

fn rot_right<R: Real>(v: Vector2<R>) -> Vector2<R> {
    Vector2::new(v.y, -v.x)
}

pub fn signed_area<R: Real>(vertices: &[Vector2<R>]) -> R {
    let n = vertices.len();
    if n < 3 {
        return R::zero();
    }
    let mut s = R::zero();
    for i in 0..n {
        s = s + vertices[i].cross(vertices[(i + 1) % n]);
    }
    s / R::of(2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn unit_square() -> Polygon<f64> {
        Polygon::rectangle(Vector2::new(0.0, 0.0), Vector2::new(1.0, 1.0))
    }

    #[test]
    fn centroid_of_square() {
        let c = unit_square().centroid();
        assert_relative_eq!(c.x, 0.5, epsilon = 1e-12);
        assert_relative_eq!(c.y, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn containment_and_distance() {
        let sq = unit_square();
        assert!(sq.contains(Vector2::new(0.5, 0.5)));
        assert!(sq.contains(Vector2::new(0.0, 0.5))); // boundary
        assert!(!sq.contains(Vector2::new(1.5, 0.5)));
        assert_relative_eq!(sq.distance(Vector2::new(2.0, 0.5)), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn segment_clearance_through_square() {
        let sq = unit_square();
        let through = sq.segment_clearance(Vector2::new(-1.0, 0.5), Vector2::new(2.0, 0.5));
        assert_eq!(through, 0.0);
        let above = sq.segment_clearance(Vector2::new(-1.0, 2.0), Vector2::new(2.0, 2.0));
        assert_relative_eq!(above, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn inflate_square_grows_outward() {
        let sq = unit_square();
        let big = sq.inflate(0.5);
        // corners move out along the diagonal by 0.5/cos(45deg)
        let d = big.vertices[0].distance(Vector2::new(0.0, 0.0));
        assert_relative_eq!(d, 0.5 * 2.0_f64.sqrt(), epsilon = 1e-9);
        assert!(big.contains(Vector2::new(-0.4, 0.5)));
    }

    #[test]
    fn intersection_cases() {
        let a = Vector2::new(0.0, 0.0);
        let b = Vector2::new(1.0, 1.0);
        let c = Vector2::new(0.0, 1.0);
        let d = Vector2::new(1.0, 0.0);
        assert!(segments_intersect(a, b, c, d));
        assert!(!segments_intersect(a, b, c, Vector2::new(-1.0, 2.0)));
        // collinear touching
        assert!(segments_intersect(
            a,
            b,
            Vector2::new(1.0, 1.0),
            Vector2::new(2.0, 2.0)
        ));
    }
}
