use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ArithError, Integer};

/// A named variable. Laurent variables may carry negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub name: String,
    pub laurent: bool,
}

impl Var {
    pub fn poly(name: &str) -> Self {
        Self {
            name: name.to_string(),
            laurent: false,
        }
    }

    pub fn laurent(name: &str) -> Self {
        Self {
            name: name.to_string(),
            laurent: true,
        }
    }
}

/// Exponent vector; zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<Var, i32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(var: Var, exp: i32) -> Result<Self, ArithError> {
        if exp < 0 && !var.laurent {
            return Err(ArithError::NegativeExponent { var: var.name, exp });
        }
        let mut m = BTreeMap::new();
        if exp != 0 {
            m.insert(var, exp);
        }
        Ok(Self(m))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, i32)> {
        self.0.iter().map(|(v, &e)| (v, e))
    }

    pub fn exponent(&self, name: &str) -> i32 {
        self.0
            .iter()
            .find(|(v, _)| v.name == name)
            .map(|(_, &e)| e)
            .unwrap_or(0)
    }

    fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        let mut out = self.0.clone();
        for (v, &e) in &other.0 {
            let entry = out.entry(v.clone()).or_insert(0);
            *entry += e;
            if *entry < 0 && !v.laurent {
                return Err(ArithError::NegativeExponent {
                    var: v.name.clone(),
                    exp: *entry,
                });
            }
            if *entry == 0 {
                out.remove(v);
            }
        }
        Ok(Self(out))
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.keys().all(|v| v.laurent) {
            Some(Self(self.0.iter().map(|(v, &e)| (v.clone(), -e)).collect()))
        } else {
            None
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| {
                if e == 1 {
                    v.name.clone()
                } else {
                    format!("{}^{}", v.name, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse multivariate (Laurent) polynomial with integer coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by monomial, so two polynomials are
/// equal iff they are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Integer>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_integer(Integer::from(c))
    }

    pub fn from_integer(c: Integer) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Integer, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// A polynomial variable.
    pub fn var(name: &str) -> Self {
        Self::term(Integer::one(), Monomial::new(Var::poly(name), 1).unwrap())
    }

    /// A Laurent variable (invertible).
    pub fn laurent(name: &str) -> Self {
        Self::term(
            Integer::one(),
            Monomial::new(Var::laurent(name), 1).unwrap(),
        )
    }

    pub fn monomial(var: Var, exp: i32) -> Result<Self, ArithError> {
        Ok(Self::term(Integer::one(), Monomial::new(var, exp)?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Integer)> {
        self.terms.iter()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Integer> {
        match self.terms.len() {
            0 => Some(Integer::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Integer {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.keys().cloned())
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), ArithError> {
        let mine = self.vars();
        for v in other.vars() {
            if mine
                .iter()
                .any(|w| w.name == v.name && w.laurent != v.laurent)
            {
                return Err(ArithError::IncompatibleVariables(v.name));
            }
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: Integer) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.check_compatible(other)?;
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Integer) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit: `±m` with `m` a monomial in Laurent variables only.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !c.abs().is_one() {
            return None;
        }
        Some(Self::term(c.clone(), m.inverse()?))
    }

    /// Substitutes `value` for every occurrence of variable `name`.
    pub fn substitute(&self, name: &str, value: &Self) -> Result<Self, ArithError> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = Monomial::one();
            let mut factor = Self::one();
            for (v, e) in m.iter() {
                if v.name == name {
                    let base = if e < 0 {
                        value
                            .unit_inverse()
                            .ok_or_else(|| ArithError::NotAUnit(value.to_string()))?
                    } else {
                        value.clone()
                    };
                    factor = factor.try_mul(&base.pow(e.unsigned_abs()))?;
                } else {
                    rest = rest.mul(&Monomial::new(v.clone(), e)?)?;
                }
            }
            out = out.try_add(&Self::term(c.clone(), rest).try_mul(&factor)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest monomials first.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            let body = if m.is_one() {
                a.to_string()
            } else if a.is_one() {
                m.to_string()
            } else {
                format!("{a}*{m}")
            };
            match (k, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("incompatible polynomial rings")
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("incompatible polynomial rings")
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("incompatible polynomial rings")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}
