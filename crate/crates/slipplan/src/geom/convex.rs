//! Signed distance between convex shapes via support-function descent,
//! with expanding-polytope refinement for penetration depth.
//!
//! Queries return witness points and a normal chosen so that translating
//! shape A along the normal increases the signed distance, which is what
//! the collision-cost gradients consume.

use nalgebra::{Rotation3, Vector3};

use crate::Float;

/// Convex support map. The tag identifies which sub-shape produced the
/// support point (swept pairs report 0 or 1; simple shapes report 0).
pub trait Support {
    fn support(&self, dir: &Vector3<Float>) -> (Vector3<Float>, usize);
    /// Any point inside the shape, used to seed the search.
    fn center(&self) -> Vector3<Float>;
}

/// Oriented box in world coordinates.
#[derive(Debug, Clone)]
pub struct Obb {
    pub center: Vector3<Float>,
    pub rot: Rotation3<Float>,
    pub half: Vector3<Float>,
}

impl Obb {
    pub fn new(center: Vector3<Float>, rot: Rotation3<Float>, half: Vector3<Float>) -> Self {
        Obb { center, rot, half }
    }

    pub fn axis_aligned(center: Vector3<Float>, half: Vector3<Float>) -> Self {
        Obb::new(center, Rotation3::identity(), half)
    }

    pub fn corners(&self) -> [Vector3<Float>; 8] {
        let mut out = [Vector3::zeros(); 8];
        let mut k = 0;
        for sx in [-1.0, 1.0] {
            for sy in [-1.0, 1.0] {
                for sz in [-1.0, 1.0] {
                    let local = Vector3::new(
                        sx * self.half.x,
                        sy * self.half.y,
                        sz * self.half.z,
                    );
                    out[k] = self.center + self.rot * local;
                    k += 1;
                }
            }
        }
        out
    }
}

impl Support for Obb {
    fn support(&self, dir: &Vector3<Float>) -> (Vector3<Float>, usize) {
        let local = self.rot.inverse() * dir;
        let pick = Vector3::new(
            self.half.x.copysign(local.x),
            self.half.y.copysign(local.y),
            self.half.z.copysign(local.z),
        );
        (self.center + self.rot * pick, 0)
    }

    fn center(&self) -> Vector3<Float> {
        self.center
    }
}

/// Convex hull of two shapes, used for swept volumes between consecutive
/// waypoints. Support tags report which end produced the point.
pub struct SweptPair<'a, S: Support> {
    pub first: &'a S,
    pub second: &'a S,
}

impl<'a, S: Support> Support for SweptPair<'a, S> {
    fn support(&self, dir: &Vector3<Float>) -> (Vector3<Float>, usize) {
        let (a, _) = self.first.support(dir);
        let (b, _) = self.second.support(dir);
        if a.dot(dir) >= b.dot(dir) {
            (a, 0)
        } else {
            (b, 1)
        }
    }

    fn center(&self) -> Vector3<Float> {
        (self.first.center() + self.second.center()) / 2.0
    }
}

/// Result of a signed-distance query between shapes A and B.
#[derive(Debug, Clone)]
pub struct Witness {
    /// Signed distance: positive separation, negative penetration depth.
    pub dist: Float,
    /// Unit direction along which translating A increases the distance.
    pub normal: Vector3<Float>,
    pub point_a: Vector3<Float>,
    pub point_b: Vector3<Float>,
    /// Per-tag convex weights and weighted support centroids on A.
    pub parts_a: Vec<(usize, Float, Vector3<Float>)>,
}

#[derive(Clone, Copy)]
struct MinkVert {
    w: Vector3<Float>,
    a: Vector3<Float>,
    b: Vector3<Float>,
    tag_a: usize,
}

fn minkowski_support<A: Support, B: Support>(
    a: &A,
    b: &B,
    dir: &Vector3<Float>,
) -> MinkVert {
    let (pa, tag_a) = a.support(dir);
    let (pb, _) = b.support(&-dir);
    MinkVert {
        w: pa - pb,
        a: pa,
        b: pb,
        tag_a,
    }
}

const GJK_TOL: Float = 1e-12;
const GJK_MAX_ITERS: usize = 128;

/// Signed distance between two convex support maps.
pub fn signed_distance<A: Support, B: Support>(a: &A, b: &B) -> Witness {
    let mut dir = a.center() - b.center();
    if dir.norm_squared() < 1e-18 {
        dir = Vector3::x();
    }
    let mut simplex: Vec<MinkVert> = vec![minkowski_support(a, b, &dir)];
    let mut lambdas = vec![1.0];
    let mut v = simplex[0].w;

    for _ in 0..GJK_MAX_ITERS {
        let vn2 = v.norm_squared();
        if vn2 < GJK_TOL {
            return epa(a, b, &simplex);
        }
        let new = minkowski_support(a, b, &(-v));
        // No closer support along -v: v is the closest point.
        if vn2 - v.dot(&new.w) <= GJK_TOL * vn2.max(1.0) {
            break;
        }
        if simplex.iter().any(|s| (s.w - new.w).norm_squared() < 1e-24) {
            break;
        }
        simplex.push(new);
        let (closest, bary, keep) = closest_to_origin(&simplex);
        if keep.len() == 4 {
            return epa(a, b, &simplex);
        }
        simplex = keep.iter().map(|&i| simplex[i]).collect();
        lambdas = bary;
        v = closest;
        if simplex.len() == 4 {
            return epa(a, b, &simplex);
        }
    }

    witness_from_simplex(&simplex, &lambdas, v.norm())
}

fn witness_from_simplex(simplex: &[MinkVert], lambdas: &[Float], dist: Float) -> Witness {
    let mut pa = Vector3::zeros();
    let mut pb = Vector3::zeros();
    let mut parts: Vec<(usize, Float, Vector3<Float>)> = Vec::new();
    for (s, &l) in simplex.iter().zip(lambdas) {
        pa += s.a * l;
        pb += s.b * l;
        if l > 0.0 {
            match parts.iter_mut().find(|(t, _, _)| *t == s.tag_a) {
                Some((_, w, c)) => {
                    *w += l;
                    *c += s.a * l;
                }
                None => parts.push((s.tag_a, l, s.a * l)),
            }
        }
    }
    for (_, w, c) in &mut parts {
        *c /= *w;
    }
    let diff = pa - pb;
    let normal = if diff.norm() > 1e-12 {
        diff.normalize()
    } else {
        Vector3::z()
    };
    Witness {
        dist,
        normal,
        point_a: pa,
        point_b: pb,
        parts_a: parts,
    }
}

/// Closest point to the origin on the simplex, its barycentric weights, and
/// the indices of the supporting sub-simplex.
fn closest_to_origin(simplex: &[MinkVert]) -> (Vector3<Float>, Vec<Float>, Vec<usize>) {
    match simplex.len() {
        1 => (simplex[0].w, vec![1.0], vec![0]),
        2 => {
            let (p, l, keep) = closest_on_segment(simplex[0].w, simplex[1].w);
            (p, l, keep)
        }
        3 => closest_on_triangle(simplex[0].w, simplex[1].w, simplex[2].w),
        4 => closest_on_tetra(simplex),
        _ => unreachable!("simplex size bounded by 4"),
    }
}

fn closest_on_segment(
    a: Vector3<Float>,
    b: Vector3<Float>,
) -> (Vector3<Float>, Vec<Float>, Vec<usize>) {
    let ab = b - a;
    let denom = ab.norm_squared();
    if denom < 1e-24 {
        return (a, vec![1.0], vec![0]);
    }
    let t = (-a.dot(&ab) / denom).clamp(0.0, 1.0);
    if t <= 0.0 {
        (a, vec![1.0], vec![0])
    } else if t >= 1.0 {
        (b, vec![1.0], vec![1])
    } else {
        (a + ab * t, vec![1.0 - t, t], vec![0, 1])
    }
}

// Ericson-style closest point on triangle to the origin.
fn closest_on_triangle(
    a: Vector3<Float>,
    b: Vector3<Float>,
    c: Vector3<Float>,
) -> (Vector3<Float>, Vec<Float>, Vec<usize>) {
    let ab = b - a;
    let ac = c - a;
    let ap = -a;
    let d1 = ab.dot(&ap);
    let d2 = ac.dot(&ap);
    if d1 <= 0.0 && d2 <= 0.0 {
        return (a, vec![1.0], vec![0]);
    }
    let bp = -b;
    let d3 = ab.dot(&bp);
    let d4 = ac.dot(&bp);
    if d3 >= 0.0 && d4 <= d3 {
        return (b, vec![1.0], vec![1]);
    }
    let vc = d1 * d4 - d3 * d2;
    if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
        let t = d1 / (d1 - d3);
        return (a + ab * t, vec![1.0 - t, t], vec![0, 1]);
    }
    let cp = -c;
    let d5 = ab.dot(&cp);
    let d6 = ac.dot(&cp);
    if d6 >= 0.0 && d5 <= d6 {
        return (c, vec![1.0], vec![2]);
    }
    let vb = d5 * d2 - d1 * d6;
    if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
        let t = d2 / (d2 - d6);
        return (a + ac * t, vec![1.0 - t, t], vec![0, 2]);
    }
    let va = d3 * d6 - d5 * d4;
    if va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 {
        let t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return (b + (c - b) * t, vec![1.0 - t, t], vec![1, 2]);
    }
    let denom = 1.0 / (va + vb + vc);
    let v = vb * denom;
    let w = vc * denom;
    (
        a + ab * v + ac * w,
        vec![1.0 - v - w, v, w],
        vec![0, 1, 2],
    )
}

fn closest_on_tetra(simplex: &[MinkVert]) -> (Vector3<Float>, Vec<Float>, Vec<usize>) {
    // Origin inside: signal with the full keep set; caller hands off to EPA.
    if origin_in_tetra(
        simplex[0].w,
        simplex[1].w,
        simplex[2].w,
        simplex[3].w,
    ) {
        return (Vector3::zeros(), vec![0.25; 4], vec![0, 1, 2, 3]);
    }
    let faces: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut best: Option<(Float, Vector3<Float>, Vec<Float>, Vec<usize>)> = None;
    for f in &faces {
        let (p, l, keep) =
            closest_on_triangle(simplex[f[0]].w, simplex[f[1]].w, simplex[f[2]].w);
        let d = p.norm_squared();
        if best.as_ref().is_none_or(|(bd, _, _, _)| d < *bd) {
            let keep_global: Vec<usize> = keep.iter().map(|&i| f[i]).collect();
            best = Some((d, p, l, keep_global));
        }
    }
    let (_, p, l, keep) = best.unwrap();
    (p, l, keep)
}

fn origin_in_tetra(
    a: Vector3<Float>,
    b: Vector3<Float>,
    c: Vector3<Float>,
    d: Vector3<Float>,
) -> bool {
    let same_side = |p0: Vector3<Float>,
                     p1: Vector3<Float>,
                     p2: Vector3<Float>,
                     apex: Vector3<Float>| {
        let n = (p1 - p0).cross(&(p2 - p0));
        let sign_apex = n.dot(&(apex - p0));
        let sign_origin = n.dot(&-p0);
        sign_apex * sign_origin >= 0.0
    };
    same_side(a, b, c, d) && same_side(a, b, d, c) && same_side(a, c, d, b) && same_side(b, c, d, a)
}

const EPA_TOL: Float = 1e-9;
const EPA_MAX_ITERS: usize = 96;

struct EpaFace {
    verts: [usize; 3],
    normal: Vector3<Float>,
    /// Signed plane offset from the origin; negative while the growing
    /// polytope does not yet cover the origin in this direction.
    dist: Float,
}

// Faces are oriented away from a fixed interior point of the polytope;
// orienting away from the origin is ambiguous for faces through it.
fn make_face(
    verts: &[MinkVert],
    i: usize,
    j: usize,
    k: usize,
    interior: &Vector3<Float>,
) -> Option<EpaFace> {
    let a = verts[i].w;
    let n = (verts[j].w - a).cross(&(verts[k].w - a));
    let norm = n.norm();
    if norm < 1e-18 {
        return None;
    }
    let mut normal = n / norm;
    let mut tri = [i, j, k];
    if normal.dot(&(a - interior)) < 0.0 {
        normal = -normal;
        tri.swap(1, 2);
    }
    Some(EpaFace {
        verts: tri,
        normal,
        dist: normal.dot(&a),
    })
}

/// Expanding-polytope refinement: penetration depth and push-out normal for
/// intersecting shapes.
fn epa<A: Support, B: Support>(a: &A, b: &B, seed: &[MinkVert]) -> Witness {
    let mut verts: Vec<MinkVert> = seed.to_vec();
    // Grow a non-degenerate tetrahedron around the origin.
    let axes = [
        Vector3::x(),
        Vector3::y(),
        Vector3::z(),
        -Vector3::x(),
        -Vector3::y(),
        -Vector3::z(),
        Vector3::new(1.0, 1.0, 1.0),
        Vector3::new(-1.0, 1.0, -1.0),
    ];
    let mut ai = 0;
    while verts.len() < 4 && ai < axes.len() {
        let cand = minkowski_support(a, b, &axes[ai]);
        ai += 1;
        if verts
            .iter()
            .all(|v| (v.w - cand.w).norm_squared() > 1e-20)
        {
            // Reject candidates that keep the set degenerate.
            let degen = match verts.len() {
                2 => (verts[1].w - verts[0].w)
                    .cross(&(cand.w - verts[0].w))
                    .norm_squared()
                    < 1e-20,
                3 => {
                    let n = (verts[1].w - verts[0].w).cross(&(verts[2].w - verts[0].w));
                    n.dot(&(cand.w - verts[0].w)).abs() < 1e-12
                }
                _ => false,
            };
            if !degen {
                verts.push(cand);
            }
        }
    }
    if verts.len() < 4 {
        // Flat difference set; treat as touching contact.
        let lam = vec![1.0 / verts.len() as Float; verts.len()];
        return witness_from_simplex(&verts, &lam, 0.0);
    }

    let interior = (verts[0].w + verts[1].w + verts[2].w + verts[3].w) / 4.0;
    let mut faces: Vec<EpaFace> = Vec::new();
    for f in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        if let Some(face) = make_face(&verts, f[0], f[1], f[2], &interior) {
            faces.push(face);
        }
    }

    for _ in 0..EPA_MAX_ITERS {
        let Some((best_idx, _)) = faces
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| x.dist.partial_cmp(&y.dist).unwrap())
            .map(|(i, f)| (i, f.dist))
        else {
            break;
        };
        let n = faces[best_idx].normal;
        let cand = minkowski_support(a, b, &n);
        let grow = cand.w.dot(&n) - faces[best_idx].dist;
        if grow < EPA_TOL
            || verts
                .iter()
                .any(|v| (v.w - cand.w).norm_squared() < 1e-20)
        {
            return epa_witness(&verts, &faces[best_idx]);
        }
        let new_idx = verts.len();
        verts.push(cand);
        // Remove faces seen from the new point, keep their boundary.
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        let mut kept: Vec<EpaFace> = Vec::new();
        for f in faces.drain(..) {
            let visible = f.normal.dot(&(cand.w - verts[f.verts[0]].w)) > 0.0;
            if visible {
                for e in [
                    (f.verts[0], f.verts[1]),
                    (f.verts[1], f.verts[2]),
                    (f.verts[2], f.verts[0]),
                ] {
                    if let Some(pos) = horizon
                        .iter()
                        .position(|&(x, y)| (x, y) == (e.1, e.0) || (x, y) == e)
                    {
                        horizon.remove(pos);
                    } else {
                        horizon.push(e);
                    }
                }
            } else {
                kept.push(f);
            }
        }
        faces = kept;
        for (i, j) in horizon {
            if let Some(face) = make_face(&verts, i, j, new_idx, &interior) {
                faces.push(face);
            }
        }
        if faces.is_empty() {
            break;
        }
    }

    // Ran out of budget: report the best face found so far.
    let best = faces
        .iter()
        .min_by(|x, y| x.dist.partial_cmp(&y.dist).unwrap());
    match best {
        Some(f) => epa_witness(&verts, f),
        None => witness_from_simplex(&verts[..1], &[1.0], 0.0),
    }
}

fn epa_witness(verts: &[MinkVert], face: &EpaFace) -> Witness {
    let tri = [
        verts[face.verts[0]],
        verts[face.verts[1]],
        verts[face.verts[2]],
    ];
    // Barycentrics of the face point closest to the origin.
    let p = face.normal * face.dist;
    let (l0, l1, l2) = barycentric(tri[0].w, tri[1].w, tri[2].w, p);
    let lam = vec![l0, l1, l2];
    let mut w = witness_from_simplex(&tri, &lam, -face.dist);
    // Moving A against the outward face normal reduces the overlap.
    w.normal = -face.normal;
    w
}

fn barycentric(
    a: Vector3<Float>,
    b: Vector3<Float>,
    c: Vector3<Float>,
    p: Vector3<Float>,
) -> (Float, Float, Float) {
    let v0 = b - a;
    let v1 = c - a;
    let v2 = p - a;
    let d00 = v0.dot(&v0);
    let d01 = v0.dot(&v1);
    let d11 = v1.dot(&v1);
    let d20 = v2.dot(&v0);
    let d21 = v2.dot(&v1);
    let denom = d00 * d11 - d01 * d01;
    if denom.abs() < 1e-24 {
        return (1.0, 0.0, 0.0);
    }
    let v = (d11 * d20 - d01 * d21) / denom;
    let w = (d00 * d21 - d01 * d20) / denom;
    let u = 1.0 - v - w;
    (u.max(0.0), v.max(0.0), w.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: Float, b: Float, tol: Float) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn separated_axis_aligned_boxes() {
        let a = Obb::axis_aligned(Vector3::new(0.0, 0.0, 0.0), Vector3::new(1.0, 1.0, 1.0));
        let b = Obb::axis_aligned(Vector3::new(3.5, 0.0, 0.0), Vector3::new(1.0, 1.0, 1.0));
        let w = signed_distance(&a, &b);
        assert_close(w.dist, 1.5, 1e-9);
        assert_close(w.normal.x, -1.0, 1e-9);
        assert_close(w.point_a.x, 1.0, 1e-9);
        assert_close(w.point_b.x, 2.5, 1e-9);
    }

    #[test]
    fn corner_to_corner_distance() {
        let a = Obb::axis_aligned(Vector3::zeros(), Vector3::new(1.0, 1.0, 1.0));
        let b = Obb::axis_aligned(Vector3::new(3.0, 3.0, 3.0), Vector3::new(1.0, 1.0, 1.0));
        let w = signed_distance(&a, &b);
        assert_close(w.dist, (3.0f64).sqrt(), 1e-9);
    }

    #[test]
    fn penetrating_boxes_match_axis_overlap() {
        let a = Obb::axis_aligned(Vector3::zeros(), Vector3::new(1.0, 1.0, 1.0));
        let b = Obb::axis_aligned(Vector3::new(1.7, 0.0, 0.0), Vector3::new(1.0, 1.0, 1.0));
        let w = signed_distance(&a, &b);
        // Overlap 0.3 along x is the smallest push-out.
        assert_close(w.dist, -0.3, 1e-7);
        assert_close(w.normal.x, -1.0, 1e-7);
    }

    #[test]
    fn signed_distance_is_continuous_across_contact() {
        let a = Obb::axis_aligned(Vector3::zeros(), Vector3::new(0.5, 0.5, 0.5));
        let mut prev = None;
        for i in 0..40 {
            let x = 0.7 + 0.02 * i as Float;
            let b = Obb::axis_aligned(Vector3::new(x, 0.0, 0.0), Vector3::new(0.5, 0.5, 0.5));
            let w = signed_distance(&b, &a);
            let expect = x - 1.0;
            assert_close(w.dist, expect, 1e-6);
            if let Some(p) = prev {
                assert!(w.dist > p);
            }
            prev = Some(w.dist);
        }
    }

    #[test]
    fn translation_gradient_matches_finite_difference() {
        // d(sd)/dt along u must equal normal . u for shape A.
        let b = Obb::new(
            Vector3::new(0.2, -0.1, 0.05),
            Rotation3::from_euler_angles(0.3, -0.2, 0.5),
            Vector3::new(0.4, 0.3, 0.2),
        );
        for (cx, expect_pen) in [(1.2, false), (0.5, true)] {
            let a = Obb::new(
                Vector3::new(cx, 0.1, 0.0),
                Rotation3::from_euler_angles(-0.1, 0.25, 0.0),
                Vector3::new(0.3, 0.25, 0.35),
            );
            let w = signed_distance(&a, &b);
            assert_eq!(w.dist < 0.0, expect_pen, "dist = {}", w.dist);
            let h = 1e-6;
            for u in [Vector3::x(), Vector3::y(), Vector3::z()] {
                let mut ap = a.clone();
                ap.center += u * h;
                let mut am = a.clone();
                am.center -= u * h;
                let fd =
                    (signed_distance(&ap, &b).dist - signed_distance(&am, &b).dist) / (2.0 * h);
                let analytic = w.normal.dot(&u);
                assert!(
                    (fd - analytic).abs() < 1e-4,
                    "u={u:?} fd={fd} analytic={analytic} dist={}",
                    w.dist
                );
            }
        }
    }

    #[test]
    fn swept_pair_covers_the_gap() {
        let lo = Obb::axis_aligned(Vector3::new(0.0, 0.0, 0.0), Vector3::new(0.1, 0.1, 0.1));
        let hi = Obb::axis_aligned(Vector3::new(1.0, 0.0, 0.0), Vector3::new(0.1, 0.1, 0.1));
        let wall = Obb::axis_aligned(Vector3::new(0.5, 0.0, 0.0), Vector3::new(0.01, 0.5, 0.5));
        // Both endpoints clear the wall; the swept hull does not.
        assert!(signed_distance(&lo, &wall).dist > 0.0);
        assert!(signed_distance(&hi, &wall).dist > 0.0);
        let swept = SweptPair {
            first: &lo,
            second: &hi,
        };
        let w = signed_distance(&swept, &wall);
        assert!(w.dist < 0.0, "swept hull must hit the wall: {}", w.dist);
        // Both ends contribute support points.
        let tags: Vec<usize> = w.parts_a.iter().map(|p| p.0).collect();
        assert!(!tags.is_empty());
    }

    #[test]
    fn random_boxes_sandwich_bounds() {
        // Support-function lower bound and point-sampling upper bound
        // bracket the reported distance for separated shapes.
        let mut seed = 0x12345678u64;
        let mut rng = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) as Float / (1u64 << 31) as Float) - 1.0
        };
        for _ in 0..40 {
            let a = Obb::new(
                Vector3::new(rng() * 0.5, rng() * 0.5, rng() * 0.5),
                Rotation3::from_euler_angles(rng(), rng(), rng()),
                Vector3::new(
                    0.1 + 0.3 * rng().abs(),
                    0.1 + 0.3 * rng().abs(),
                    0.1 + 0.3 * rng().abs(),
                ),
            );
            let b = Obb::new(
                Vector3::new(3.0 + rng(), rng() * 2.0, rng() * 2.0),
                Rotation3::from_euler_angles(rng(), rng(), rng()),
                Vector3::new(
                    0.1 + 0.3 * rng().abs(),
                    0.1 + 0.3 * rng().abs(),
                    0.1 + 0.3 * rng().abs(),
                ),
            );
            let w = signed_distance(&a, &b);
            assert!(w.dist > 0.0);
            // Every direction gives a support-gap lower bound on the
            // distance: gap(d) = d . (support_a(-d) - support_b(d)).
            let mut lower: Float = 0.0;
            for _ in 0..500 {
                let d = Vector3::new(rng(), rng(), rng());
                if d.norm() < 1e-6 {
                    continue;
                }
                let d = d.normalize();
                let (sa, _) = a.support(&-d);
                let (sb, _) = b.support(&d);
                lower = lower.max(d.dot(&(sa - sb)));
            }
            assert!(
                w.dist >= lower - 1e-7,
                "gjk {} below support lower bound {lower}",
                w.dist
            );
            // Upper bound: witness points must realize the distance.
            let realized = (w.point_a - w.point_b).norm();
            assert_close(realized, w.dist, 1e-7);
        }
    }
}
