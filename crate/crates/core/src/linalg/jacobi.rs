//! Cyclic Jacobi eigensolver for symmetric 3×3 matrices.

use super::matrix::Float3;

const OFF_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition `S = Q diag(values) Qᵀ`, values sorted descending.
/// Column `k` of `vectors` is the unit eigenvector for `values[k]`.
#[derive(Clone, Copy, Debug)]
pub struct SymEigen {
    pub values: [f64; 3],
    pub vectors: Float3,
}

fn off_mass(a: &Float3) -> f64 {
    (2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2])).sqrt()
}

fn frobenius(a: &Float3) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn symmetric_eigen(s: &Float3) -> SymEigen {
    let mut a = *s;
    let mut q = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let scale = frobenius(&a);
    if scale > 0.0 {
        for _ in 0..MAX_SWEEPS {
            if off_mass(&a) <= OFF_TOL * scale {
                break;
            }
            for (p, r) in [(0usize, 1usize), (0, 2), (1, 2)] {
                if a[p][r] == 0.0 {
                    continue;
                }
                let theta = (a[r][r] - a[p][p]) / (2.0 * a[p][r]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                // A <- Jᵀ A J with J the (p, r) rotation
                for k in 0..3 {
                    let akp = a[k][p];
                    let akr = a[k][r];
                    a[k][p] = c * akp - sn * akr;
                    a[k][r] = sn * akp + c * akr;
                }
                for k in 0..3 {
                    let apk = a[p][k];
                    let ark = a[r][k];
                    a[p][k] = c * apk - sn * ark;
                    a[r][k] = sn * apk + c * ark;
                }
                for row in q.iter_mut() {
                    let qp = row[p];
                    let qr = row[r];
                    row[p] = c * qp - sn * qr;
                    row[r] = sn * qp + c * qr;
                }
            }
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[j][j].total_cmp(&a[i][i]));
    let values = order.map(|k| a[k][k]);
    let vectors = std::array::from_fn(|row| std::array::from_fn(|col| q[row][order[col]]));
    SymEigen { values, vectors }
}

/// `Mᵀ M` in floating point.
pub fn gram(m: &Float3) -> Float3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| m[k][i] * m[k][j]).sum()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_is_fixed() {
        let e = symmetric_eigen(&[[2.0, 0.0, 0.0], [0.0, 5.0, 0.0], [0.0, 0.0, -1.0]]);
        assert_eq!(e.values, [5.0, 2.0, -1.0]);
    }

    #[test]
    fn reconstructs_input() {
        let s = [[3.0, 1.0, 1.0], [1.0, 1.0, 0.0], [1.0, 0.0, 1.0]];
        let e = symmetric_eigen(&s);
        for i in 0..3 {
            for j in 0..3 {
                let r: f64 = (0..3)
                    .map(|k| e.vectors[i][k] * e.values[k] * e.vectors[j][k])
                    .sum();
                assert!((r - s[i][j]).abs() < 1e-13, "{r} vs {}", s[i][j]);
            }
        }
        let tr: f64 = e.values.iter().sum();
        assert!((tr - 5.0).abs() < 1e-13);
    }
}
