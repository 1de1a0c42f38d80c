use std::fmt;

use num_integer::Integer as _;

use super::ArithError;

/// A residue class modulo `n`, stored in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModularInt {
    value: u64,
    modulus: u64,
}

impl ModularInt {
    pub fn new(value: i64, modulus: i64) -> Result<Self, ArithError> {
        if modulus <= 0 {
            return Err(ArithError::BadModulus(modulus));
        }
        let value = value.mod_floor(&modulus) as u64;
        Ok(Self {
            value,
            modulus: modulus as u64,
        })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn with(self, value: u128) -> Self {
        Self {
            value: (value % self.modulus as u128) as u64,
            modulus: self.modulus,
        }
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli {} and {}",
            self.modulus, other.modulus
        );
    }

    pub fn add(self, other: Self) -> Self {
        self.check(other);
        self.with(self.value as u128 + other.value as u128)
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    pub fn neg(self) -> Self {
        self.with(self.modulus as u128 - self.value as u128)
    }

    pub fn mul(self, other: Self) -> Self {
        self.check(other);
        self.with(self.value as u128 * other.value as u128)
    }

    pub fn is_unit(self) -> bool {
        (self.value as i64).gcd(&(self.modulus as i64)) == 1
    }

    pub fn inv(self) -> Result<Self, ArithError> {
        let e = (self.value as i64).extended_gcd(&(self.modulus as i64));
        if e.gcd != 1 {
            return Err(ArithError::NotAUnit(self.to_string()));
        }
        Self::new(e.x, self.modulus as i64)
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = self.with(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for ModularInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_inverts() {
        let x = ModularInt::new(-3, 5).unwrap();
        assert_eq!(x.value(), 2);
        assert_eq!(x.inv().unwrap().value(), 3);
        assert!(ModularInt::new(2, 4).unwrap().inv().is_err());
        assert_eq!(ModularInt::new(3, 7).unwrap().pow(6).value(), 1);
    }

    #[test]
    fn rejects_bad_modulus() {
        assert_eq!(ModularInt::new(1, 0), Err(ArithError::BadModulus(0)));
    }
}
