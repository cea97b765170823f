//! Exact 3×3 rational matrices.
//!
//! Entries are stored as integer numerators over one positive common
//! denominator, kept in lowest terms so that equality and hashing are exact.
//! A float view rounded from the exact entries is cached alongside.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Float3 = [[f64; 3]; 3];

/// Exact 3×3 matrix over the rationals with a cached `f64` view.
#[derive(Clone)]
pub struct Matrix3 {
    num: [[BigInt; 3]; 3],
    den: BigInt,
    unimodular: bool,
    float: Float3,
}

impl PartialEq for Matrix3 {
    fn eq(&self, other: &Self) -> bool {
        self.den == other.den && self.num == other.num
    }
}

impl Eq for Matrix3 {}

impl Hash for Matrix3 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.den.hash(state);
        self.num.hash(state);
    }
}

impl fmt::Debug for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..3)
            .map(|i| (0..3).map(|j| self.entry(i, j).to_string()).collect())
            .collect();
        f.debug_struct("Matrix3").field("rows", &rows).finish()
    }
}

const EXACT_F64_LIMIT: u64 = 1 << 53;

fn small_to_f64(x: &BigInt) -> Option<f64> {
    let v = x.to_i64()?;
    (v.unsigned_abs() < EXACT_F64_LIMIT).then_some(v as f64)
}

/// Nearest-float rounding of `num / den` (den > 0).
pub(crate) fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if den.is_one() {
        if let Some(v) = small_to_f64(num) {
            return v;
        }
    } else if let (Some(n), Some(d)) = (small_to_f64(num), small_to_f64(den)) {
        return n / d;
    }
    BigRational::new_raw(num.clone(), den.clone())
        .to_f64()
        .unwrap_or(f64::NAN)
}

fn zero_grid() -> [[BigInt; 3]; 3] {
    std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero()))
}

impl Matrix3 {
    fn from_parts(mut num: [[BigInt; 3]; 3], mut den: BigInt, unimodular: Option<bool>) -> Self {
        if den.is_negative() {
            den = -den;
            for row in num.iter_mut() {
                for x in row.iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for row in num.iter() {
                for x in row.iter() {
                    if g.is_one() {
                        break;
                    }
                    g = g.gcd(x);
                }
            }
            if !g.is_one() && !g.is_zero() {
                for row in num.iter_mut() {
                    for x in row.iter_mut() {
                        *x /= &g;
                    }
                }
                den /= &g;
            }
        }
        let float =
            std::array::from_fn(|i| std::array::from_fn(|j| ratio_to_f64(&num[i][j], &den)));
        let mut m = Matrix3 {
            num,
            den,
            unimodular: false,
            float,
        };
        m.unimodular = match unimodular {
            Some(tag) => tag,
            None => m.det().is_one(),
        };
        m
    }

    pub fn from_integers(rows: [[i64; 3]; 3]) -> Self {
        let num = rows.map(|r| r.map(BigInt::from));
        Self::from_parts(num, BigInt::one(), None)
    }

    pub fn from_rationals(rows: [[BigRational; 3]; 3]) -> Self {
        let mut den = BigInt::one();
        for r in rows.iter() {
            for x in r.iter() {
                den = den.lcm(x.denom());
            }
        }
        let num = rows.map(|r| r.map(|x| x.numer() * (&den / x.denom())));
        Self::from_parts(num, den, None)
    }

    pub fn identity() -> Self {
        Self::diagonal([1i64, 1, 1].map(|x| BigRational::from_integer(x.into())))
    }

    pub fn diagonal(d: [BigRational; 3]) -> Self {
        let z = || BigRational::zero();
        let [a, b, c] = d;
        Self::from_rationals([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn zero() -> Self {
        Self::from_parts(zero_grid(), BigInt::one(), Some(false))
    }

    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(self.num[i][j].clone(), self.den.clone())
    }

    pub fn entries(&self) -> [[BigRational; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }

    pub fn numerators(&self) -> &[[BigInt; 3]; 3] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Float view, each entry the nearest `f64` to the exact value.
    pub fn f(&self) -> &Float3 {
        &self.float
    }

    /// Tagged unimodular: the exact determinant is 1.
    pub fn is_unimodular(&self) -> bool {
        self.unimodular
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn det(&self) -> BigRational {
        let n = &self.num;
        let d = n[0][0].clone() * (&n[1][1] * &n[2][2] - &n[1][2] * &n[2][1])
            - n[0][1].clone() * (&n[1][0] * &n[2][2] - &n[1][2] * &n[2][0])
            + n[0][2].clone() * (&n[1][0] * &n[2][1] - &n[1][1] * &n[2][0]);
        let den3 = &self.den * &self.den * &self.den;
        BigRational::new(d, den3)
    }

    pub fn trace(&self) -> BigRational {
        BigRational::new(
            &self.num[0][0] + &self.num[1][1] + &self.num[2][2],
            self.den.clone(),
        )
    }

    pub fn mul(&self, other: &Matrix3) -> Matrix3 {
        let a = &self.num;
        let b = &other.num;
        let num = std::array::from_fn(|i| {
            std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j] + &a[i][2] * &b[2][j])
        });
        let den = &self.den * &other.den;
        Self::from_parts(num, den, Some(self.unimodular && other.unimodular))
    }

    pub fn add(&self, other: &Matrix3) -> Matrix3 {
        let num = std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.num[i][j] * &other.den + &other.num[i][j] * &self.den)
        });
        Self::from_parts(num, &self.den * &other.den, None)
    }

    pub fn sub(&self, other: &Matrix3) -> Matrix3 {
        self.add(&other.scale(&BigRational::from_integer((-1).into())))
    }

    pub fn scale(&self, k: &BigRational) -> Matrix3 {
        let num = self.num.clone().map(|r| r.map(|x| x * k.numer()));
        Self::from_parts(num, &self.den * k.denom(), None)
    }

    /// Lie bracket `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Matrix3) -> Matrix3 {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Matrix3 {
        let num = std::array::from_fn(|i| std::array::from_fn(|j| self.num[j][i].clone()));
        Self::from_parts(num, self.den.clone(), Some(self.unimodular))
    }

    /// Exact inverse via the adjugate; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix3> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let n = &self.num;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &n[r0][c0] * &n[r1][c1] - &n[r0][c1] * &n[r1][c0]
        };
        // adj(N)[i][j] = cofactor(j, i)
        let adj: [[BigInt; 3]; 3] = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        // A = N/d, det A = det N / d^3, A^{-1} = adj(N) d^2 / (d^3 det A) ... scaled:
        // A^{-1} = adj(A)/det A with adj(A) = adj(N)/d^2.
        let scale = BigRational::new(BigInt::one(), &self.den * &self.den) / det;
        let num = adj.map(|r| r.map(|x| x * scale.numer()));
        Some(Self::from_parts(
            num,
            scale.denom().clone(),
            Some(self.unimodular),
        ))
    }

    /// `M^{-1} A M`.
    pub fn conjugate_by(&self, m: &Matrix3, m_inv: &Matrix3) -> Matrix3 {
        let out = m_inv.mul(self).mul(m);
        Self::from_parts(out.num, out.den, Some(self.unimodular))
    }

    /// Matrix of 2×2 minors: the action on `∧²R³` in the basis
    /// `{e1∧e2, e1∧e3, e2∧e3}`.
    pub fn exterior_square(&self) -> Matrix3 {
        const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
        let n = &self.num;
        let num = std::array::from_fn(|r| {
            let (i0, i1) = PAIRS[r];
            std::array::from_fn(|c| {
                let (j0, j1) = PAIRS[c];
                &n[i0][j0] * &n[i1][j1] - &n[i0][j1] * &n[i1][j0]
            })
        });
        Self::from_parts(num, &self.den * &self.den, Some(self.unimodular))
    }

    pub fn pow(&self, k: u32) -> Matrix3 {
        let mut out = Matrix3::identity();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn all_positive(&self) -> bool {
        self.num.iter().flatten().all(|x| x.sign() == Sign::Plus)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.num.iter().flatten().all(|x| !x.is_negative())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| i == j || self.num[i][j].is_zero()))
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    /// Smallest and largest entry.
    pub fn entry_range(&self) -> (BigRational, BigRational) {
        let mut lo = &self.num[0][0];
        let mut hi = &self.num[0][0];
        for x in self.num.iter().flatten() {
            if x < lo {
                lo = x;
            }
            if x > hi {
                hi = x;
            }
        }
        (
            BigRational::new(lo.clone(), self.den.clone()),
            BigRational::new(hi.clone(), self.den.clone()),
        )
    }

    /// Squared Frobenius norm, exact.
    pub fn frobenius_sq(&self) -> BigRational {
        let s: BigInt = self.num.iter().flatten().map(|x| x * x).sum();
        BigRational::new(s, &self.den * &self.den)
    }

    /// Entries flattened row-major, as exact rationals.
    pub fn to_vec9(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .flatten()
            .map(|x| BigRational::new(x.clone(), self.den.clone()))
            .collect()
    }

    pub fn to_strings(&self) -> [[String; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| format_rational(&self.entry(i, j))))
    }

    pub fn from_strings<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Matrix3> {
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(Error::Parse("matrix must be 3×3".into()));
        }
        let mut out: [[BigRational; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| BigRational::zero()));
        for (i, r) in rows.iter().enumerate() {
            for (j, s) in r.iter().enumerate() {
                out[i][j] = parse_rational(s.as_ref())?;
            }
        }
        Ok(Matrix3::from_rationals(out))
    }
}

/// `"p/q"` with `q > 0`; integers are written `"p/1"`.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

impl Serialize for Matrix3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        Matrix3::from_strings(&rows).map_err(D::Error::custom)
    }
}

/// Integer shorthand used throughout tests and constructors.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::rauzy::rauzy_alphabet;

    #[test]
    fn identity_is_neutral() {
        let [a1, _, _] = rauzy_alphabet();
        assert_eq!(a1.mul(&Matrix3::identity()), a1);
        assert_eq!(Matrix3::identity().mul(&a1), a1);
    }

    #[test]
    fn rauzy_product_by_hand() {
        let [a1, a2, _] = rauzy_alphabet();
        let expected = Matrix3::from_integers([[2, 1, 2], [1, 1, 1], [0, 0, 1]]);
        assert_eq!(a1.mul(&a2), expected);
        assert_eq!(
            a1.mul(&a2).f(),
            &[[2.0, 1.0, 2.0], [1.0, 1.0, 1.0], [0.0, 0.0, 1.0]]
        );
    }

    #[test]
    fn inverse_round_trip() {
        let [a1, _, _] = rauzy_alphabet();
        let inv = a1.inverse().unwrap();
        assert_eq!(a1.mul(&inv), Matrix3::identity());
        let q = Matrix3::from_rationals([
            [rat(1, 2), rat(3, 7), rat(-2, 5)],
            [rat(0, 1), rat(5, 3), rat(1, 9)],
            [rat(4, 11), rat(1, 1), rat(2, 1)],
        ]);
        assert_eq!(q.inverse().unwrap().mul(&q), Matrix3::identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Matrix3::from_integers([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert!(m.inverse().is_none());
        assert!(!m.is_unimodular());
    }

    #[test]
    fn exterior_square_of_diagonal() {
        let d = Matrix3::diagonal([rat(3, 1), rat(5, 2), rat(7, 4)]);
        let expected = Matrix3::diagonal([rat(15, 2), rat(21, 4), rat(35, 8)]);
        assert_eq!(d.exterior_square(), expected);
        assert_eq!(Matrix3::identity().exterior_square(), Matrix3::identity());
    }

    #[test]
    fn canonical_form_makes_equal_rationals_equal() {
        let a = Matrix3::from_rationals([
            [rat(2, 4), rat(0, 1), rat(0, 1)],
            [rat(0, 1), rat(1, 1), rat(0, 1)],
            [rat(0, 1), rat(0, 1), rat(2, 1)],
        ]);
        let b = Matrix3::diagonal([rat(1, 2), rat(1, 1), rat(2, 1)]);
        assert_eq!(a, b);
        assert!(a.is_unimodular());
    }

    #[test]
    fn float_view_rounds_to_nearest() {
        let m = Matrix3::diagonal([rat(1, 3), rat(3, 1), rat(1, 1)]);
        assert_eq!(m.f()[0][0], 1.0 / 3.0);
        let big = BigInt::from(1u64 << 60) + 1;
        let x = ratio_to_f64(&big, &BigInt::from(3));
        assert_eq!(x, (2f64.powi(60) + 1.0) / 3.0);
    }

    #[test]
    fn string_round_trip() {
        let m = Matrix3::from_rationals([
            [rat(-1, 2), rat(3, 1), rat(0, 1)],
            [rat(7, 5), rat(1, 1), rat(2, 3)],
            [rat(0, 1), rat(0, 1), rat(1, 1)],
        ]);
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"-1/2\""));
        let back: Matrix3 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
    }
}
