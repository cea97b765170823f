//! The Rauzy alphabet, its Γ_N subsystems and the `M_ε` conjugator.

use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::system::SystemSpec;
use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix3};

/// `A₁, A₂, A₃`: identity plus a row of ones in position `i`.
pub fn rauzy_alphabet() -> [Matrix3; 3] {
    [
        Matrix3::from_integers([[1, 1, 1], [0, 1, 0], [0, 0, 1]]),
        Matrix3::from_integers([[1, 0, 0], [1, 1, 1], [0, 0, 1]]),
        Matrix3::from_integers([[1, 0, 0], [0, 1, 0], [1, 1, 1]]),
    ]
}

pub fn rauzy_system() -> SystemSpec {
    SystemSpec::uniform("rauzy", rauzy_alphabet().to_vec(), None)
        .expect("Rauzy letters are unimodular")
}

/// Ordered pairs `(i, j)`, `i != j`, indexing the Γ letters `A_iⁿA_j`.
pub const GAMMA_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

/// `A_iⁿA_j` in closed form: row `i` is `a_ii = n+1, a_ij = n, a_ik = 2n`,
/// row `j` is all ones and row `k` is `e_k`.
pub fn gamma_letter(i: usize, j: usize, n: i64) -> Matrix3 {
    assert!(i != j && i < 3 && j < 3);
    let k = 3 - i - j;
    let mut rows = [[0i64; 3]; 3];
    rows[i][i] = n + 1;
    rows[i][j] = n;
    rows[i][k] = 2 * n;
    rows[j] = [1, 1, 1];
    rows[k][k] = 1;
    Matrix3::from_integers(rows)
}

/// `Γ_N` in the order `n = 1..=N`, then pair order [`GAMMA_PAIRS`].
pub fn gamma_letters(n_max: usize) -> Vec<Matrix3> {
    (1..=n_max as i64)
        .flat_map(|n| GAMMA_PAIRS.iter().map(move |&(i, j)| gamma_letter(i, j, n)))
        .collect()
}

/// `M_ε`: ones on the diagonal, `-ε` elsewhere.
pub fn m_epsilon(eps: &BigRational) -> Matrix3 {
    let o = || BigRational::one();
    let e = || -eps.clone();
    Matrix3::from_rationals([[o(), e(), e()], [e(), o(), e()], [e(), e(), o()]])
}

/// Default conjugation parameter of the Γ pipeline.
pub fn default_epsilon() -> BigRational {
    rat(1, 6)
}

/// `Γ_N` conjugated by `M_ε`, uniform weights; every conjugated letter is
/// checked to be entrywise positive in exact arithmetic.
pub fn rauzy_gamma_system(n_max: usize, eps: &BigRational) -> Result<SystemSpec> {
    if n_max == 0 {
        return Err(Error::DomainError {
            value: 0.0,
            domain: "N >= 1",
        });
    }
    if !eps.is_positive() || *eps > rat(1, 5) {
        return Err(Error::DomainError {
            value: num::ToPrimitive::to_f64(eps).unwrap_or(f64::NAN),
            domain: "0 < epsilon <= 1/5",
        });
    }
    let sys = SystemSpec::uniform(
        format!("rauzy_gamma_{n_max}"),
        gamma_letters(n_max),
        Some(m_epsilon(eps)),
    )?;
    if let Some(bad) = sys.letters().iter().position(|a| !a.all_positive()) {
        let n = bad / GAMMA_PAIRS.len() + 1;
        let (i, j) = GAMMA_PAIRS[bad % GAMMA_PAIRS.len()];
        let (lo, _) = sys.letters()[bad].entry_range();
        return Err(Error::NotPositive(format!(
            "conjugated A_{}^{n} A_{} has minimum entry {lo} at epsilon = {eps}",
            i + 1,
            j + 1
        )));
    }
    Ok(sys)
}

/// Positivity of every conjugated `A_iⁿA_j`, `n <= n_max`, reported per `n`.
pub fn gamma_positivity_by_level(
    n_max: usize,
    eps: &BigRational,
) -> Vec<(usize, bool, BigRational)> {
    let m = m_epsilon(eps);
    let inv = m
        .inverse()
        .expect("M_epsilon is invertible for epsilon != 1/2, -1");
    (1..=n_max)
        .map(|n| {
            let mut all = true;
            let mut min = None::<BigRational>;
            for &(i, j) in &GAMMA_PAIRS {
                let c = gamma_letter(i, j, n as i64).conjugate_by(&m, &inv);
                all &= c.all_positive();
                let (lo, _) = c.entry_range();
                min = Some(match min {
                    Some(x) if x < lo => x,
                    _ => lo,
                });
            }
            (n, all, min.unwrap_or_else(BigRational::zero))
        })
        .collect()
}

/// Derivatives at `x = 0` of the curves `x ↦ B_x` through the Γ letters,
/// in the order `C₁ … C₆` (pairs (1,2), (1,3), (2,3), (2,1), (3,2), (3,1)).
/// These have trace 1 as matrices.
pub fn rauzy_curve_derivatives() -> [Matrix3; 6] {
    const ORDER: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 2), (1, 0), (2, 1), (2, 0)];
    ORDER.map(|(i, j)| gamma_letter(i, j, 1).sub(&gamma_letter(i, j, 0)))
}

/// Traceless parts `X - tr(X)/3·I` of [`rauzy_curve_derivatives`].
pub fn rauzy_lie_generators() -> [Matrix3; 6] {
    rauzy_curve_derivatives().map(|c| traceless_part(&c))
}

pub fn traceless_part(x: &Matrix3) -> Matrix3 {
    let t = x.trace() / BigRational::from_integer(3.into());
    x.sub(&Matrix3::identity().scale(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_matches_powers() {
        let a = rauzy_alphabet();
        for &(i, j) in &GAMMA_PAIRS {
            for n in 1..=6u32 {
                assert_eq!(a[i].pow(n).mul(&a[j]), gamma_letter(i, j, n as i64));
            }
        }
        let l = gamma_letter(0, 1, 7);
        assert_eq!(
            l,
            Matrix3::from_integers([[8, 7, 14], [1, 1, 1], [0, 0, 1]])
        );
    }

    #[test]
    fn derivative_matrices() {
        let c = rauzy_curve_derivatives();
        assert_eq!(
            c[0],
            Matrix3::from_integers([[1, 1, 2], [0, 0, 0], [0, 0, 0]])
        );
        assert_eq!(
            c[1],
            Matrix3::from_integers([[1, 2, 1], [0, 0, 0], [0, 0, 0]])
        );
        assert_eq!(
            c[2],
            Matrix3::from_integers([[0, 0, 0], [2, 1, 1], [0, 0, 0]])
        );
        assert_eq!(
            c[3],
            Matrix3::from_integers([[0, 0, 0], [1, 1, 2], [0, 0, 0]])
        );
        assert_eq!(
            c[4],
            Matrix3::from_integers([[0, 0, 0], [0, 0, 0], [2, 1, 1]])
        );
        assert_eq!(
            c[5],
            Matrix3::from_integers([[0, 0, 0], [0, 0, 0], [1, 2, 1]])
        );
        let c7 = c[0].commutator(&c[4]);
        assert_eq!(
            c7,
            Matrix3::from_integers([[4, 2, 2], [0, 0, 0], [-2, -2, -4]])
        );
        let c8 = c[1].commutator(&c[3]);
        assert_eq!(
            c8,
            Matrix3::from_integers([[2, 2, 4], [-1, -2, -1], [0, 0, 0]])
        );
        assert!(rauzy_lie_generators().iter().all(Matrix3::is_traceless));
    }

    #[test]
    fn conjugated_product_by_hand() {
        let [a1, a2, _] = rauzy_alphabet();
        let m = m_epsilon(&rat(1, 5));
        let inv = m.inverse().unwrap();
        let expected_inv = Matrix3::from_rationals([
            [rat(10, 9), rat(5, 18), rat(5, 18)],
            [rat(5, 18), rat(10, 9), rat(5, 18)],
            [rat(5, 18), rat(5, 18), rat(10, 9)],
        ]);
        assert_eq!(inv, expected_inv);
        let c = a1.mul(&a2).conjugate_by(&m, &inv);
        let expected = Matrix3::from_rationals([
            [rat(5, 3), rat(1, 3), rat(2, 1)],
            [rat(1, 1), rat(2, 3), rat(4, 3)],
            [rat(1, 3), rat(0, 1), rat(5, 3)],
        ]);
        assert_eq!(c, expected);
        assert!(!c.all_positive());
    }

    #[test]
    fn gamma_system_positivity() {
        let sys = rauzy_gamma_system(3, &default_epsilon()).unwrap();
        assert_eq!(sys.len(), 18);
        assert!(sys.letters().iter().all(Matrix3::all_positive));
        assert!(matches!(
            rauzy_gamma_system(1, &rat(1, 5)),
            Err(Error::NotPositive(_))
        ));
        assert!(rauzy_gamma_system(1, &rat(1, 4)).is_err());
    }
}
