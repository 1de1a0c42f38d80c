use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Integer};

/// An element `alpha + beta*t` of `Z[t, 1/3]/(t^2 - t + 1)`.
///
/// Both coefficients are rationals whose denominators are powers of 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EisensteinLoc {
    alpha: BigRational,
    beta: BigRational,
}

fn is_three_local(q: &BigRational) -> bool {
    let mut d = q.denom().clone();
    let three = Integer::from(3);
    while (&d % &three).is_zero() {
        d /= &three;
    }
    d.is_one()
}

impl EisensteinLoc {
    pub fn new(alpha: BigRational, beta: BigRational) -> Result<Self, ArithError> {
        for q in [&alpha, &beta] {
            if !is_three_local(q) {
                return Err(ArithError::NotThreeLocal(q.denom().to_string()));
            }
        }
        Ok(Self { alpha, beta })
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Self {
        Self {
            alpha: BigRational::from_integer(alpha.into()),
            beta: BigRational::from_integer(beta.into()),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ints(n, 0)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn t() -> Self {
        Self::from_ints(0, 1)
    }

    /// The element `1/3`.
    pub fn third() -> Self {
        Self {
            alpha: BigRational::new(1.into(), 3.into()),
            beta: BigRational::zero(),
        }
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    /// `N(a + bt) = a^2 + ab + b^2`, from `t + t' = 1` and `t t' = 1`.
    pub fn norm(&self) -> BigRational {
        &self.alpha * &self.alpha + &self.alpha * &self.beta + &self.beta * &self.beta
    }

    /// Inverse via the conjugate `a + b(1 - t)`; exists iff the norm is `3^k`.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() || !n.is_positive() || !is_power_of_three(&n) {
            return Err(ArithError::NotAUnit(self.to_string()));
        }
        let conj_a = &self.alpha + &self.beta;
        let conj_b = -&self.beta;
        Ok(Self {
            alpha: conj_a / &n,
            beta: conj_b / &n,
        })
    }

    pub fn pow(&self, exp: i32) -> Result<Self, ArithError> {
        let base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

fn is_power_of_three(q: &BigRational) -> bool {
    let three = Integer::from(3);
    let strip = |x: &Integer| {
        let mut x = x.clone();
        while !x.is_zero() && (&x % &three).is_zero() {
            x /= &three;
        }
        x
    };
    strip(q.numer()).is_one() && strip(q.denom()).is_one()
}

impl Add<&EisensteinLoc> for &EisensteinLoc {
    type Output = EisensteinLoc;
    fn add(self, rhs: &EisensteinLoc) -> EisensteinLoc {
        EisensteinLoc {
            alpha: &self.alpha + &rhs.alpha,
            beta: &self.beta + &rhs.beta,
        }
    }
}

impl Sub<&EisensteinLoc> for &EisensteinLoc {
    type Output = EisensteinLoc;
    fn sub(self, rhs: &EisensteinLoc) -> EisensteinLoc {
        EisensteinLoc {
            alpha: &self.alpha - &rhs.alpha,
            beta: &self.beta - &rhs.beta,
        }
    }
}

impl Mul<&EisensteinLoc> for &EisensteinLoc {
    type Output = EisensteinLoc;
    fn mul(self, rhs: &EisensteinLoc) -> EisensteinLoc {
        // (a + bt)(c + et) = ac + (ae + bc)t + be t^2, with t^2 = t - 1.
        let be = &self.beta * &rhs.beta;
        EisensteinLoc {
            alpha: &self.alpha * &rhs.alpha - &be,
            beta: &self.alpha * &rhs.beta + &self.beta * &rhs.alpha + be,
        }
    }
}

impl Neg for &EisensteinLoc {
    type Output = EisensteinLoc;
    fn neg(self) -> EisensteinLoc {
        EisensteinLoc {
            alpha: -&self.alpha,
            beta: -&self.beta,
        }
    }
}

impl fmt::Display for EisensteinLoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.alpha;
        let b = &self.beta;
        match (a.is_zero(), b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{a}"),
            (az, false) => {
                let bt = if b.abs().is_one() {
                    "t".to_string()
                } else {
                    format!("{}*t", b.abs())
                };
                if az {
                    if b.is_negative() {
                        write!(f, "-{bt}")
                    } else {
                        write!(f, "{bt}")
                    }
                } else {
                    let sign = if b.is_negative() { "-" } else { "+" };
                    write!(f, "{a} {sign} {bt}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn t_inverse_is_one_minus_t() {
        let t = EisensteinLoc::t();
        assert_eq!(t.inverse().unwrap(), EisensteinLoc::from_ints(1, -1));
    }

    #[test]
    fn two_minus_t_inverse() {
        let x = EisensteinLoc::from_ints(2, -1);
        let expected = EisensteinLoc::new(r(1, 3), r(1, 3)).unwrap();
        assert_eq!(x.norm(), r(3, 1));
        assert_eq!(x.inverse().unwrap(), expected);
    }

    #[test]
    fn two_is_not_a_unit() {
        let two = EisensteinLoc::from_int(2);
        assert_eq!(two.norm(), r(4, 1));
        assert!(matches!(two.inverse(), Err(ArithError::NotAUnit(_))));
        assert!(EisensteinLoc::zero().inverse().is_err());
    }

    #[test]
    fn defining_relation_and_order_six() {
        let t = EisensteinLoc::t();
        let rel = &(&(&t * &t) - &t) + &EisensteinLoc::one();
        assert!(rel.is_zero());
        assert_eq!(t.pow(6).unwrap(), EisensteinLoc::one());
        assert_eq!(t.pow(3).unwrap(), EisensteinLoc::from_int(-1));
    }

    #[test]
    fn rejects_non_three_denominators() {
        assert!(EisensteinLoc::new(r(1, 2), r(0, 1)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(EisensteinLoc::from_ints(1, -1).to_string(), "1 - t");
        assert_eq!(
            EisensteinLoc::new(r(2, 3), r(-1, 3)).unwrap().to_string(),
            "2/3 - 1/3*t"
        );
    }

    fn arb() -> impl Strategy<Value = EisensteinLoc> {
        (-9i64..=9, -9i64..=9, 0u32..=2, 0u32..=2).prop_map(|(a, b, ka, kb)| {
            EisensteinLoc::new(r(a, 3i64.pow(ka)), r(b, 3i64.pow(kb))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn units_invert(k in -3i32..=3, j in 0i32..6, sign in proptest::bool::ANY) {
            // Units: +-3^k (2 - t)^? t^j; build from known units.
            let mut u = EisensteinLoc::t().pow(j).unwrap();
            u = &u * &EisensteinLoc::from_ints(2, -1).pow(k).unwrap();
            if sign { u = -&u; }
            let inv = u.inverse().unwrap();
            prop_assert_eq!(&u * &inv, EisensteinLoc::one());
        }
    }
}
