use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Integer;

/// Element `c0 + c1*s + c2*z` of `Z[s,z]/((s-1)(z-2), s^2-2z-1, z^2-2z)`.
///
/// Products use `s^2 = 2z + 1`, `z^2 = 2z`, `sz = 2s + z - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SZBase(pub [Integer; 3]);

impl SZBase {
    pub fn new(c0: i64, c1: i64, c2: i64) -> Self {
        Self([c0.into(), c1.into(), c2.into()])
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn s() -> Self {
        Self::new(0, 1, 0)
    }

    pub fn z() -> Self {
        Self::new(0, 0, 1)
    }

    /// Products of the basis elements `1, s, z`.
    pub fn basis_product(i: usize, j: usize) -> Self {
        match (i.min(j), i.max(j)) {
            (0, k) => {
                let mut v = Self::default();
                v.0[k] = 1.into();
                v
            }
            (1, 1) => Self::new(1, 0, 2),
            (1, 2) => Self::new(-2, 2, 1),
            (2, 2) => Self::new(0, 0, 2),
            _ => unreachable!("basis index out of range"),
        }
    }
}

impl Add<&SZBase> for &SZBase {
    type Output = SZBase;
    fn add(self, rhs: &SZBase) -> SZBase {
        SZBase([
            &self.0[0] + &rhs.0[0],
            &self.0[1] + &rhs.0[1],
            &self.0[2] + &rhs.0[2],
        ])
    }
}

impl Sub<&SZBase> for &SZBase {
    type Output = SZBase;
    fn sub(self, rhs: &SZBase) -> SZBase {
        self + &(-rhs)
    }
}

impl Neg for &SZBase {
    type Output = SZBase;
    fn neg(self) -> SZBase {
        SZBase([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl Mul<&SZBase> for &SZBase {
    type Output = SZBase;
    fn mul(self, rhs: &SZBase) -> SZBase {
        let mut out = SZBase::default();
        for i in 0..3 {
            for j in 0..3 {
                let k: Integer = &self.0[i] * &rhs.0[j];
                let p = SZBase::basis_product(i, j);
                for (o, c) in out.0.iter_mut().zip(p.0.iter()) {
                    *o += &k * c;
                }
            }
        }
        out
    }
}

impl fmt::Display for SZBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*s + {}*z", self.0[0], self.0[1], self.0[2])
    }
}
