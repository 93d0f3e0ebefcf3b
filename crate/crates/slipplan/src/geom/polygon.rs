//! 2D convex polygons for support regions and footprint checks.

use nalgebra::Vector2;

use crate::Float;

/// Convex hull of a point set (Andrew's monotone chain), counter-clockwise,
/// without repeated first vertex. Collinear points on the hull boundary are
/// dropped.
pub fn convex_hull(points: &[Vector2<Float>]) -> Vec<Vector2<Float>> {
    let mut pts: Vec<Vector2<Float>> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| (a.x - b.x).abs() < 1e-15 && (a.y - b.y).abs() < 1e-15);
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let cross = |o: &Vector2<Float>, a: &Vector2<Float>, b: &Vector2<Float>| {
        (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    };
    let mut hull: Vec<Vector2<Float>> = Vec::with_capacity(2 * n);
    for p in &pts {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(*p);
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev() {
        while hull.len() >= lower_len
            && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(*p);
    }
    hull.pop();
    hull
}

/// Convex polygon stored as CCW vertices plus outward edge half-planes
/// `n · p <= d`.
#[derive(Debug, Clone)]
pub struct ConvexPolygon {
    verts: Vec<Vector2<Float>>,
    normals: Vec<Vector2<Float>>,
    offsets: Vec<Float>,
}

impl ConvexPolygon {
    /// Build from the convex hull of `points`. Fails when the hull is
    /// degenerate (fewer than 3 vertices).
    pub fn from_points(points: &[Vector2<Float>]) -> Option<Self> {
        let verts = convex_hull(points);
        if verts.len() < 3 {
            return None;
        }
        let mut normals = Vec::with_capacity(verts.len());
        let mut offsets = Vec::with_capacity(verts.len());
        for i in 0..verts.len() {
            let a = verts[i];
            let b = verts[(i + 1) % verts.len()];
            let e = b - a;
            let n = Vector2::new(e.y, -e.x).normalize();
            normals.push(n);
            offsets.push(n.dot(&a));
        }
        Some(ConvexPolygon {
            verts,
            normals,
            offsets,
        })
    }

    pub fn vertices(&self) -> &[Vector2<Float>] {
        &self.verts
    }

    /// Outward half-planes `(normal, offset)` with inside meaning
    /// `normal · p <= offset`.
    pub fn half_planes(&self) -> impl Iterator<Item = (Vector2<Float>, Float)> + '_ {
        self.normals.iter().copied().zip(self.offsets.iter().copied())
    }

    /// Largest half-plane violation; negative strictly inside.
    pub fn violation(&self, p: &Vector2<Float>) -> Float {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(n, d)| n.dot(p) - d)
            .fold(Float::NEG_INFINITY, Float::max)
    }

    pub fn contains(&self, p: &Vector2<Float>, tol: Float) -> bool {
        self.violation(p) <= tol
    }

    /// Polygon shrunk inward by `margin`, computed by clipping a bounding
    /// box against every inset half-plane. `None` when the inset region
    /// vanishes.
    pub fn shrink(&self, margin: Float) -> Option<Self> {
        let (mut lo, mut hi) = (self.verts[0], self.verts[0]);
        for v in &self.verts {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        let pad = 1.0;
        let mut region = vec![
            Vector2::new(lo.x - pad, lo.y - pad),
            Vector2::new(hi.x + pad, lo.y - pad),
            Vector2::new(hi.x + pad, hi.y + pad),
            Vector2::new(lo.x - pad, hi.y + pad),
        ];
        for (n, d) in self.normals.iter().zip(&self.offsets) {
            region = clip_halfplane(&region, n, d - margin);
            if region.len() < 3 {
                return None;
            }
        }
        ConvexPolygon::from_points(&region)
    }

    pub fn centroid(&self) -> Vector2<Float> {
        let mut c = Vector2::zeros();
        for v in &self.verts {
            c += v;
        }
        c / self.verts.len() as Float
    }
}

// Sutherland-Hodgman against one half-plane `n · p <= d`.
fn clip_halfplane(
    poly: &[Vector2<Float>],
    n: &Vector2<Float>,
    d: Float,
) -> Vec<Vector2<Float>> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        let fa = n.dot(&a) - d;
        let fb = n.dot(&b) - d;
        if fa <= 0.0 {
            out.push(a);
        }
        if (fa < 0.0) != (fb < 0.0) && (fb - fa).abs() > 1e-15 {
            let t = fa / (fa - fb);
            out.push(a + (b - a) * t);
        }
    }
    out
}

/// Overlap test between two yawed rectangles in the plane (separating
/// axis over both rectangles' edge normals).
pub fn rects_overlap(
    c1: Vector2<Float>,
    half1: Vector2<Float>,
    yaw1: Float,
    c2: Vector2<Float>,
    half2: Vector2<Float>,
    yaw2: Float,
) -> bool {
    let corners = |c: Vector2<Float>, h: Vector2<Float>, yaw: Float| {
        let (s, co) = yaw.sin_cos();
        let ex = Vector2::new(co, s) * h.x;
        let ey = Vector2::new(-s, co) * h.y;
        [c + ex + ey, c + ex - ey, c - ex + ey, c - ex - ey]
    };
    let k1 = corners(c1, half1, yaw1);
    let k2 = corners(c2, half2, yaw2);
    let axes = {
        let (s1, c1c) = yaw1.sin_cos();
        let (s2, c2c) = yaw2.sin_cos();
        [
            Vector2::new(c1c, s1),
            Vector2::new(-s1, c1c),
            Vector2::new(c2c, s2),
            Vector2::new(-s2, c2c),
        ]
    };
    for ax in &axes {
        let pr = |ks: &[Vector2<Float>; 4]| {
            let mut lo = Float::INFINITY;
            let mut hi = Float::NEG_INFINITY;
            for k in ks {
                let v = ax.dot(k);
                lo = lo.min(v);
                hi = hi.max(v);
            }
            (lo, hi)
        };
        let (l1, h1) = pr(&k1);
        let (l2, h2) = pr(&k2);
        if h1 < l2 || h2 < l1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_of_square_with_interior_points() {
        let pts = vec![
            Vector2::new(0.0, 0.0),
            Vector2::new(1.0, 0.0),
            Vector2::new(1.0, 1.0),
            Vector2::new(0.0, 1.0),
            Vector2::new(0.5, 0.5),
            Vector2::new(0.3, 0.7),
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn polygon_contains_and_violation() {
        let poly = ConvexPolygon::from_points(&[
            Vector2::new(0.0, 0.0),
            Vector2::new(2.0, 0.0),
            Vector2::new(2.0, 1.0),
            Vector2::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(poly.contains(&Vector2::new(1.0, 0.5), 0.0));
        assert!(!poly.contains(&Vector2::new(2.5, 0.5), 1e-9));
        assert!((poly.violation(&Vector2::new(1.0, 0.5)) + 0.5).abs() < 1e-12);
        assert!((poly.violation(&Vector2::new(2.5, 0.5)) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn shrink_rectangle() {
        let poly = ConvexPolygon::from_points(&[
            Vector2::new(0.0, 0.0),
            Vector2::new(2.0, 0.0),
            Vector2::new(2.0, 1.0),
            Vector2::new(0.0, 1.0),
        ])
        .unwrap();
        let s = poly.shrink(0.1).unwrap();
        assert!(s.contains(&Vector2::new(1.0, 0.5), 0.0));
        assert!(!s.contains(&Vector2::new(0.05, 0.5), 1e-9));
        assert!(s.contains(&Vector2::new(0.15, 0.5), 1e-9));
        // Overshrink vanishes.
        assert!(poly.shrink(0.6).is_none());
    }

    #[test]
    fn rect_overlap_cases() {
        let h = Vector2::new(0.11, 0.055);
        // Same spot overlaps; far apart does not.
        assert!(rects_overlap(
            Vector2::new(0.0, 0.0),
            h,
            0.0,
            Vector2::new(0.05, 0.0),
            h,
            0.0
        ));
        assert!(!rects_overlap(
            Vector2::new(0.0, 0.0),
            h,
            0.0,
            Vector2::new(0.5, 0.0),
            h,
            0.0
        ));
        // Rotation changes the footprint: side by side clears when
        // parallel, collides when the neighbor turns across.
        assert!(!rects_overlap(
            Vector2::new(0.0, 0.0),
            h,
            0.0,
            Vector2::new(0.0, 0.12),
            h,
            0.0
        ));
        assert!(rects_overlap(
            Vector2::new(0.0, 0.0),
            h,
            0.0,
            Vector2::new(0.0, 0.12),
            h,
            std::f64::consts::FRAC_PI_2
        ));
    }
}
