//! Orthonormal `2×3` frames `B` whose rows span a plane through a positive
//! direction; `φ_B` is then the projection of the plane chart onto a line.

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) fn dot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub(crate) fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn norm(v: [f64; 3]) -> f64 {
    dot(v, v).sqrt()
}

pub(crate) fn scaled(v: [f64; 3], k: f64) -> [f64; 3] {
    v.map(|x| x * k)
}

pub(crate) fn sub(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
}

/// Flip `v` so that its first nonzero coordinate is positive.
pub(crate) fn canonical_sign(v: [f64; 3]) -> [f64; 3] {
    match v.iter().find(|x| **x != 0.0) {
        Some(x) if *x < 0.0 => scaled(v, -1.0),
        _ => v,
    }
}

const UNIT_TOL: f64 = 1e-9;

/// A `2×3` matrix with rows `r1`, `r2`; `r2` is a nonnegative unit vector.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PlaneFrame {
    pub rows: [[f64; 3]; 2],
}

impl PlaneFrame {
    /// Checks that `r2` is a nonnegative unit vector independent of `r1`.
    pub fn new(r1: [f64; 3], r2: [f64; 3]) -> Result<Self> {
        if r2.iter().any(|x| *x < 0.0) || (norm(r2) - 1.0).abs() > UNIT_TOL {
            return Err(Error::BadDirection(format!(
                "{r2:?} is not a nonnegative unit vector"
            )));
        }
        if norm(cross(r1, r2)) <= UNIT_TOL * norm(r1).max(1.0) {
            return Err(Error::BadDirection("frame rows are parallel".into()));
        }
        Ok(PlaneFrame { rows: [r1, r2] })
    }

    pub fn r1(&self) -> [f64; 3] {
        self.rows[0]
    }

    pub fn r2(&self) -> [f64; 3] {
        self.rows[1]
    }

    pub fn is_orthonormal(&self) -> bool {
        (norm(self.rows[0]) - 1.0).abs() <= UNIT_TOL
            && dot(self.rows[0], self.rows[1]).abs() <= UNIT_TOL
    }

    /// Unit normal of the plane spanned by the rows, sign-normalized.
    pub fn normal(&self) -> [f64; 3] {
        let n = cross(self.rows[0], self.rows[1]);
        canonical_sign(scaled(n, 1.0 / norm(n)))
    }

    /// `φ_B` evaluated on any representative `y` of a line, `⟨r1,y⟩/⟨r2,y⟩`.
    #[inline]
    pub fn project_vector(&self, y: [f64; 3]) -> Result<f64> {
        let den = dot(self.rows[1], y);
        if den == 0.0 {
            return Err(Error::DenominatorZero);
        }
        Ok(dot(self.rows[0], y) / den)
    }

    /// `φ_B(x)` for `x` in the plane chart.
    #[inline]
    pub fn project(&self, x: [f64; 2]) -> Result<f64> {
        self.project_vector([x[0], x[1], 1.0])
    }
}

/// Orthonormal frame with `r2 = direction`, completed by Gram–Schmidt
/// against `e1` (or `e2` when `direction` is parallel to `e1`).
pub fn plane_frame_orthonormal(direction: [f64; 3]) -> Result<PlaneFrame> {
    let n = norm(direction);
    if !(n > 0.0) || direction.iter().any(|x| *x < 0.0) {
        return Err(Error::BadDirection(format!(
            "{direction:?} must be nonzero with nonnegative coordinates"
        )));
    }
    let r2 = scaled(direction, 1.0 / n);
    for e in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]] {
        let v = sub(e, scaled(r2, dot(e, r2)));
        let len = norm(v);
        if len > 1e-9 {
            return PlaneFrame::new(scaled(v, 1.0 / len), r2);
        }
    }
    unreachable!("a unit vector cannot be parallel to both e1 and e2")
}

/// Orthonormal frame spanning the plane `normal^⊥`. The second row is the
/// normalized midpoint of the segment where the plane crosses the simplex,
/// so the plane must meet the positive cone in more than a ray.
pub fn frame_for_plane(normal: [f64; 3]) -> Result<PlaneFrame> {
    let nn = norm(normal);
    if !(nn > 0.0) || !nn.is_finite() {
        return Err(Error::BadDirection("zero normal".into()));
    }
    let n = scaled(normal, 1.0 / nn);
    // points of the simplex on the plane: vertices with n_i = 0 and edge
    // crossings where n_i, n_j have strictly opposite signs
    let e = |i: usize| {
        let mut v = [0.0; 3];
        v[i] = 1.0;
        v
    };
    let mut pts: Vec<[f64; 3]> = Vec::new();
    for i in 0..3 {
        if n[i] == 0.0 {
            pts.push(e(i));
        }
        for j in i + 1..3 {
            if n[i] * n[j] < 0.0 {
                let t = n[i] / (n[i] - n[j]);
                pts.push(sub(e(i), scaled(sub(e(i), e(j)), t)));
            }
        }
    }
    let (mut best, mut pair) = (0.0, None);
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let d = norm(sub(pts[a], pts[b]));
            if d > best {
                best = d;
                pair = Some((pts[a], pts[b]));
            }
        }
    }
    let Some((p, q)) = pair.filter(|_| best > 1e-12) else {
        return Err(Error::BadDirection(format!(
            "plane with normal {normal:?} misses the open positive cone"
        )));
    };
    let mid = scaled([p[0] + q[0], p[1] + q[1], p[2] + q[2]], 0.5);
    let r2 = scaled(mid, 1.0 / norm(mid)).map(|x| x.max(0.0));
    let r1 = cross(n, r2);
    PlaneFrame::new(scaled(r1, 1.0 / norm(r1)), r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertical_direction() {
        let b = plane_frame_orthonormal([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(b.rows, [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        assert_eq!(b.project([0.3, 7.0]).unwrap(), 0.3);
    }

    #[test]
    fn parallel_to_e1_falls_back() {
        let b = plane_frame_orthonormal([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(b.r1(), [0.0, 1.0, 0.0]);
        assert!(b.is_orthonormal());
    }

    #[test]
    fn bad_directions() {
        assert!(matches!(
            plane_frame_orthonormal([0.0; 3]),
            Err(Error::BadDirection(_))
        ));
        assert!(matches!(
            plane_frame_orthonormal([1.0, -0.1, 0.2]),
            Err(Error::BadDirection(_))
        ));
        assert!(matches!(
            frame_for_plane([1.0, 1.0, 1.0]),
            Err(Error::BadDirection(_))
        ));
    }

    #[test]
    fn frame_for_plane_spans_the_plane() {
        for normal in [
            [1.0, -1.0, 0.0],
            [0.3, 0.5, -0.8],
            [-2.0, 1.0, 0.5],
            [0.0, 0.0, 1.0],
        ] {
            let b = frame_for_plane(normal).unwrap();
            assert!(b.is_orthonormal());
            assert!(b.r2().iter().all(|x| *x >= 0.0));
            let n = scaled(normal, 1.0 / norm(normal));
            assert!(dot(n, b.r1()).abs() < 1e-12 && dot(n, b.r2()).abs() < 1e-12);
            assert!(norm(cross(b.normal(), n)) < 1e-12);
        }
    }
}
