//! Exact scalar domain for the torsion pipeline.
//!
//! Every quantity the pipeline produces — volumes, square roots of volumes,
//! per-degree determinants, torsions — lies in the set `sqrt(s * pi^u)` with
//! `s` a strictly positive rational and `u` an integer. [`PiRadical`] stores
//! that pair in canonical form; since pi is transcendental, two values are
//! equal iff their components are equal, so equality is structural.
//!
//! The domain is closed under multiplication, division and integer powers.
//! Square roots are partial: they exist exactly when `s` is a rational square
//! and `u` is even (nested radicals never arise here).

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use num::traits::Pow;
use thiserror::Error;

/// Arbitrary-precision rational, the base scalar of the library.
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// The represented value has no square root inside the domain.
    #[error("not a representable square root: s must be a rational square and the pi exponent even")]
    NotASquare,
    /// Conversion to `f64` left the finite range.
    #[error("value out of f64 range")]
    FloatOverflow,
    /// Attempted to build a value that is not strictly positive.
    #[error("pi-radical values must be strictly positive")]
    NotPositive,
}

/// Positive exact value `sqrt(s * pi^u)`, i.e. `sqrt(s) * pi^(u/2)`.
///
/// A plain positive rational `q` embeds as `(s, u) = (q^2, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiRadical {
    s: Rational,
    u: i64,
}

impl PiRadical {
    /// Builds `sqrt(s * pi^u)`. Fails unless `s > 0`.
    pub fn new(s: Rational, u: i64) -> Result<Self, ScalarError> {
        if s.is_positive() {
            Ok(PiRadical { s, u })
        } else {
            Err(ScalarError::NotPositive)
        }
    }

    /// Embeds a strictly positive rational `q` as `(q^2, 0)`.
    pub fn from_rational(q: &Rational) -> Result<Self, ScalarError> {
        if q.is_positive() {
            Ok(PiRadical { s: q * q, u: 0 })
        } else {
            Err(ScalarError::NotPositive)
        }
    }

    pub fn from_integer(n: i64) -> Result<Self, ScalarError> {
        Self::from_rational(&Rational::from(BigInt::from(n)))
    }

    /// The multiplicative identity.
    pub fn one() -> Self {
        PiRadical { s: Rational::one(), u: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.s.is_one() && self.u == 0
    }

    /// The radicand component `s` of `sqrt(s * pi^u)`.
    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// The pi exponent component `u` of `sqrt(s * pi^u)`.
    pub fn u(&self) -> i64 {
        self.u
    }

    /// `self^k` for any integer `k` (negative powers invert).
    pub fn powi(&self, k: i64) -> PiRadical {
        let e = i32::try_from(k).expect("pi-radical exponent out of range");
        PiRadical {
            s: Pow::pow(self.s.clone(), e),
            u: self.u.checked_mul(k).expect("pi exponent overflow"),
        }
    }

    /// Exact square root, defined when `s` is a rational square and `u` even.
    pub fn sqrt(&self) -> Result<PiRadical, ScalarError> {
        if self.u % 2 != 0 {
            return Err(ScalarError::NotASquare);
        }
        let root = rational_sqrt(&self.s).ok_or(ScalarError::NotASquare)?;
        Ok(PiRadical { s: root, u: self.u / 2 })
    }

    /// Whether [`PiRadical::sqrt`] would succeed.
    pub fn is_square(&self) -> bool {
        self.u % 2 == 0 && rational_sqrt(&self.s).is_some()
    }

    /// If the value is a plain rational (square `s`, even `u = 0`), returns it.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.u == 0 {
            rational_sqrt(&self.s)
        } else {
            None
        }
    }

    /// Nearest double, within relative `1e-14` of the true value.
    ///
    /// Computed as `sqrt(s * p^u)` with `p` a 50-digit rational approximation
    /// of pi and all intermediate arithmetic exact, so the only rounding is
    /// the final conversion.
    pub fn to_f64(&self) -> Result<f64, ScalarError> {
        let pi = pi_rational();
        let e = i32::try_from(self.u).expect("pi exponent out of range");
        let squared = &self.s * Pow::pow(pi, e);
        let f = positive_rational_to_f64(&squared).ok_or(ScalarError::FloatOverflow)?;
        Ok(f.sqrt())
    }
}

impl std::ops::Mul for &PiRadical {
    type Output = PiRadical;
    fn mul(self, rhs: &PiRadical) -> PiRadical {
        PiRadical {
            s: &self.s * &rhs.s,
            u: self.u.checked_add(rhs.u).expect("pi exponent overflow"),
        }
    }
}

impl std::ops::Mul for PiRadical {
    type Output = PiRadical;
    fn mul(self, rhs: PiRadical) -> PiRadical {
        &self * &rhs
    }
}

impl std::ops::Div for &PiRadical {
    type Output = PiRadical;
    fn div(self, rhs: &PiRadical) -> PiRadical {
        PiRadical {
            s: &self.s / &rhs.s,
            u: self.u.checked_sub(rhs.u).expect("pi exponent overflow"),
        }
    }
}

impl std::ops::Div for PiRadical {
    type Output = PiRadical;
    fn div(self, rhs: PiRadical) -> PiRadical {
        &self / &rhs
    }
}

/// Exact square root of a positive rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if !r.is_positive() {
        return None;
    }
    let num_root = r.numer().sqrt();
    let den_root = r.denom().sqrt();
    if &(&num_root * &num_root) == r.numer() && &(&den_root * &den_root) == r.denom() {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}

/// pi to 50 decimal digits, as an exact rational.
fn pi_rational() -> Rational {
    let numer = BigInt::parse_bytes(
        b"314159265358979323846264338327950288419716939937510",
        10,
    )
    .unwrap();
    let denom = Pow::pow(BigInt::from(10), 50u32);
    Rational::new(numer, denom)
}

/// Nearest double to an arbitrary rational; `None` outside the finite range.
pub fn rational_to_f64(r: &Rational) -> Option<f64> {
    if r.is_zero() {
        return Some(0.0);
    }
    if r.is_negative() {
        return positive_rational_to_f64(&(-r)).map(|f| -f);
    }
    positive_rational_to_f64(r)
}

/// Nearest double to a strictly positive rational.
///
/// The quotient is first scaled by a power of two so that the integer part
/// carries ~64 significant bits, converted, then rescaled. This keeps the
/// total rounding within a couple of ulps regardless of magnitude.
fn positive_rational_to_f64(r: &Rational) -> Option<f64> {
    let num = r.numer();
    let den = r.denom();
    let shift = 64 - (num.bits() as i64 - den.bits() as i64);
    let q: BigInt = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let qf = q.to_f64()?;
    let out = ldexp(qf, -shift);
    if out.is_finite() && out > 0.0 {
        Some(out)
    } else {
        None
    }
}

/// `x * 2^e` with stepping so intermediate factors stay representable.
fn ldexp(x: f64, e: i64) -> f64 {
    let mut out = x;
    let mut rem = e;
    while rem != 0 {
        let step = rem.clamp(-1000, 1000);
        out *= 2f64.powi(step as i32);
        rem -= step;
        if !out.is_finite() || out == 0.0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pr(s_num: i64, s_den: i64, u: i64) -> PiRadical {
        PiRadical::new(rat(s_num, s_den), u).unwrap()
    }

    #[test]
    fn mul_components() {
        // 2 * pi = sqrt(4 * pi^2)
        assert_eq!(&pr(4, 1, 0) * &pr(1, 1, 2), pr(4, 1, 2));
        let x = pr(7, 3, 5);
        assert_eq!(&PiRadical::one() * &x, x);
        // sqrt(Vol S^3) squared recovers Vol S^3 = 2 pi^2
        let vol = pr(4, 1, 4);
        let root = vol.sqrt().unwrap();
        assert_eq!(&root * &root, vol);
    }

    #[test]
    fn div_components() {
        let x = pr(7, 3, 5);
        assert_eq!(&x / &x, PiRadical::one());
        assert_eq!(&pr(4, 1, 4) / &pr(4, 1, 0), pr(1, 1, 4));
        let vol = pr(4, 1, 4);
        let root = vol.sqrt().unwrap();
        assert_eq!(&vol / &root, root);
    }

    #[test]
    fn integer_powers() {
        let x = pr(7, 3, 5);
        assert_eq!(x.powi(0), PiRadical::one());
        assert_eq!(pr(4, 1, 2).powi(2), pr(16, 1, 4));
        // Vol(S^1)^3 = (2 pi)^3 = 8 pi^3
        assert_eq!(pr(4, 1, 2).powi(3), pr(64, 1, 6));
        assert_eq!(&x.powi(-2) * &x.powi(2), PiRadical::one());
    }

    #[test]
    fn sqrt_partiality() {
        assert_eq!(pr(4, 1, 4).sqrt().unwrap(), pr(2, 1, 2));
        assert_eq!(PiRadical::one().sqrt().unwrap(), PiRadical::one());
        assert_eq!(pr(2, 1, 0).sqrt(), Err(ScalarError::NotASquare));
        assert_eq!(pr(4, 1, 3).sqrt(), Err(ScalarError::NotASquare));
        assert_eq!(pr(9, 4, -2).sqrt().unwrap(), pr(3, 2, -1));
    }

    #[test]
    fn float_values() {
        let two_pi_sq = pr(4, 1, 4).to_f64().unwrap();
        let expected = 2.0 * std::f64::consts::PI * std::f64::consts::PI;
        assert!((two_pi_sq - expected).abs() / expected < 1e-14);
        assert_eq!(PiRadical::one().to_f64().unwrap(), 1.0);
        let two_pi = pr(4, 1, 2).to_f64().unwrap();
        assert!((two_pi - std::f64::consts::TAU).abs() / two_pi < 1e-14);
    }

    #[test]
    fn float_overflow_reported() {
        let huge = Pow::pow(Rational::from(BigInt::from(10)), 400u32);
        let v = PiRadical::new(huge, 0).unwrap();
        assert_eq!(v.to_f64(), Err(ScalarError::FloatOverflow));
    }

    #[test]
    fn nonpositive_rejected() {
        assert!(PiRadical::new(rat(0, 1), 0).is_err());
        assert!(PiRadical::new(rat(-3, 1), 2).is_err());
        assert!(PiRadical::from_rational(&rat(-1, 2)).is_err());
    }

    #[test]
    fn rational_embedding() {
        let q = rat(3, 5);
        let v = PiRadical::from_rational(&q).unwrap();
        assert_eq!(v, pr(9, 25, 0));
        assert_eq!(v.as_rational(), Some(q));
        assert_eq!(pr(2, 1, 0).as_rational(), None);
    }

    fn arb_pi_radical() -> impl Strategy<Value = PiRadical> {
        (1i64..400, 1i64..400, -6i64..7)
            .prop_map(|(n, d, u)| PiRadical::new(rat(n, d), u).unwrap())
    }

    proptest! {
        #[test]
        fn mul_matches_floats(a in arb_pi_radical(), b in arb_pi_radical()) {
            let lhs = (&a * &b).to_f64().unwrap();
            let rhs = a.to_f64().unwrap() * b.to_f64().unwrap();
            prop_assert!((lhs - rhs).abs() / rhs <= 1e-12);
        }

        #[test]
        fn mul_commutes_and_associates(
            a in arb_pi_radical(),
            b in arb_pi_radical(),
            c in arb_pi_radical(),
        ) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn sqrt_of_square_roundtrips(x in arb_pi_radical()) {
            let sq = &x * &x;
            prop_assert_eq!(sq.sqrt().unwrap(), x);
        }

        #[test]
        fn div_is_exact_inverse(a in arb_pi_radical(), b in arb_pi_radical()) {
            let q = &a / &b;
            prop_assert_eq!(&q * &b, a);
        }

        #[test]
        fn representation_is_unique(a in arb_pi_radical(), b in arb_pi_radical()) {
            // distinct components never collide in value (checked via floats)
            let fa = a.to_f64().unwrap();
            let fb = b.to_f64().unwrap();
            if a == b {
                prop_assert_eq!(fa, fb);
            } else {
                prop_assert!((fa - fb).abs() / fa.max(fb) > 1e-12);
            }
        }

        #[test]
        fn products_stay_canonical(a in arb_pi_radical(), b in arb_pi_radical()) {
            // canonicalization is idempotent: rebuilding from components is a no-op
            let p = &a * &b;
            let rebuilt = PiRadical::new(p.s().clone(), p.u()).unwrap();
            prop_assert_eq!(rebuilt, p);
        }
    }
}
