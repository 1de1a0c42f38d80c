use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::Integer;

/// A noncommutative rational expression.
///
/// Built through the smart constructors, which flatten sums and products,
/// pull signs out of products and cancel double inverses and negations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingExpr {
    Int(Integer),
    Atom(String),
    Add(Vec<RingExpr>),
    Mul(Vec<RingExpr>),
    Neg(Box<RingExpr>),
    Inv(Box<RingExpr>),
}

impl RingExpr {
    pub fn int(n: i64) -> Self {
        RingExpr::Int(n.into())
    }

    pub fn one() -> Self {
        RingExpr::int(1)
    }

    pub fn atom(name: impl Into<String>) -> Self {
        RingExpr::Atom(name.into())
    }

    pub fn add(terms: Vec<RingExpr>) -> Self {
        let mut flat = Vec::with_capacity(terms.len());
        for t in terms {
            match t {
                RingExpr::Add(inner) => flat.extend(inner),
                RingExpr::Int(n) if n.is_zero() => {}
                t => flat.push(t),
            }
        }
        match flat.len() {
            0 => RingExpr::int(0),
            1 => flat.pop().expect("one term"),
            _ => RingExpr::Add(flat),
        }
    }

    pub fn sub(a: RingExpr, b: RingExpr) -> Self {
        RingExpr::add(vec![a, RingExpr::neg(b)])
    }

    pub fn mul(factors: Vec<RingExpr>) -> Self {
        let mut negative = false;
        let mut flat = Vec::with_capacity(factors.len());
        let mut stack: Vec<RingExpr> = factors.into_iter().rev().collect();
        while let Some(f) = stack.pop() {
            match f {
                RingExpr::Mul(inner) => stack.extend(inner.into_iter().rev()),
                RingExpr::Neg(inner) => {
                    negative = !negative;
                    stack.push(*inner);
                }
                RingExpr::Int(n) if n.is_one() => {}
                RingExpr::Int(n) if n.is_zero() => return RingExpr::int(0),
                RingExpr::Int(n) if n.is_negative() => {
                    negative = !negative;
                    stack.push(RingExpr::Int(-n));
                }
                f => flat.push(f),
            }
        }
        let body = match flat.len() {
            0 => RingExpr::one(),
            1 => flat.pop().expect("one factor"),
            _ => RingExpr::Mul(flat),
        };
        if negative {
            RingExpr::neg(body)
        } else {
            body
        }
    }

    pub fn neg(e: RingExpr) -> Self {
        match e {
            RingExpr::Neg(inner) => *inner,
            RingExpr::Int(n) => RingExpr::Int(-n),
            e => RingExpr::Neg(Box::new(e)),
        }
    }

    pub fn inv(e: RingExpr) -> Self {
        match e {
            RingExpr::Inv(inner) => *inner,
            RingExpr::Neg(inner) => RingExpr::neg(RingExpr::inv(*inner)),
            RingExpr::Int(n) if n.is_one() => RingExpr::one(),
            RingExpr::Int(n) if n == Integer::from(-1) => RingExpr::int(-1),
            e => RingExpr::Inv(Box::new(e)),
        }
    }

    pub fn pow(e: RingExpr, exp: i64) -> Self {
        let base = if exp < 0 { RingExpr::inv(e) } else { e };
        RingExpr::mul(vec![base; exp.unsigned_abs() as usize])
    }

    /// Structural substitution of atoms.
    pub fn map_atoms(&self, f: &impl Fn(&str) -> RingExpr) -> RingExpr {
        match self {
            RingExpr::Int(_) => self.clone(),
            RingExpr::Atom(a) => f(a),
            RingExpr::Add(ts) => RingExpr::add(ts.iter().map(|t| t.map_atoms(f)).collect()),
            RingExpr::Mul(fs) => RingExpr::mul(fs.iter().map(|t| t.map_atoms(f)).collect()),
            RingExpr::Neg(e) => RingExpr::neg(e.map_atoms(f)),
            RingExpr::Inv(e) => RingExpr::inv(e.map_atoms(f)),
        }
    }

    pub fn atoms(&self, out: &mut Vec<String>) {
        match self {
            RingExpr::Int(_) => {}
            RingExpr::Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
            RingExpr::Add(ts) | RingExpr::Mul(ts) => ts.iter().for_each(|t| t.atoms(out)),
            RingExpr::Neg(e) | RingExpr::Inv(e) => e.atoms(out),
        }
    }

    /// Inverted subexpressions that are not atoms, innermost first.
    pub fn compound_inverses(&self, out: &mut Vec<RingExpr>) {
        match self {
            RingExpr::Int(_) | RingExpr::Atom(_) => {}
            RingExpr::Add(ts) | RingExpr::Mul(ts) => {
                ts.iter().for_each(|t| t.compound_inverses(out))
            }
            RingExpr::Neg(e) => e.compound_inverses(out),
            RingExpr::Inv(e) => {
                e.compound_inverses(out);
                if !matches!(e.as_ref(), RingExpr::Atom(_)) && !out.contains(e) {
                    out.push((**e).clone());
                }
            }
        }
    }

    fn write_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Add(_) | RingExpr::Neg(_) => write!(f, "({self})"),
            RingExpr::Int(n) if n.is_negative() => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Int(n) => write!(f, "{n}"),
            RingExpr::Atom(a) => f.write_str(a),
            RingExpr::Add(ts) => {
                for (n, t) in ts.iter().enumerate() {
                    let (negative, body) = match t {
                        RingExpr::Neg(inner) => (true, inner.as_ref().clone()),
                        RingExpr::Int(k) if k.is_negative() => (true, RingExpr::Int(-k)),
                        t => (false, t.clone()),
                    };
                    match (n, negative) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    if matches!(body, RingExpr::Add(_)) {
                        write!(f, "({body})")?;
                    } else {
                        write!(f, "{body}")?;
                    }
                }
                Ok(())
            }
            RingExpr::Mul(fs) => {
                for (n, x) in fs.iter().enumerate() {
                    if n > 0 {
                        f.write_str(" ")?;
                    }
                    x.write_factor(f)?;
                }
                Ok(())
            }
            RingExpr::Neg(e) => {
                f.write_str("-")?;
                e.write_factor(f)
            }
            RingExpr::Inv(e) => match e.as_ref() {
                RingExpr::Atom(a) => write!(f, "{a}^-1"),
                e => write!(f, "({e})^-1"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> RingExpr {
        RingExpr::atom(s)
    }

    #[test]
    fn constructors_normalize() {
        let e = RingExpr::mul(vec![RingExpr::neg(a("x")), a("y"), RingExpr::neg(a("z"))]);
        assert_eq!(e.to_string(), "x y z");
        let e = RingExpr::mul(vec![RingExpr::neg(a("x")), a("y")]);
        assert_eq!(e.to_string(), "-x y");
        assert_eq!(RingExpr::inv(RingExpr::inv(a("x"))), a("x"));
        assert_eq!(RingExpr::neg(RingExpr::neg(a("x"))), a("x"));
        assert_eq!(RingExpr::pow(a("x"), -2).to_string(), "x^-1 x^-1");
        assert_eq!(RingExpr::pow(a("x"), 0), RingExpr::one());
    }

    #[test]
    fn printing() {
        let one_minus = RingExpr::sub(
            RingExpr::one(),
            RingExpr::inv(RingExpr::mul(vec![a("w_x"), a("w_y")])),
        );
        assert_eq!(
            RingExpr::inv(one_minus).to_string(),
            "(1 - (w_x w_y)^-1)^-1"
        );
        let s = RingExpr::add(vec![a("x"), RingExpr::int(-2), RingExpr::neg(a("y"))]);
        assert_eq!(s.to_string(), "x - 2 - y");
        let m = RingExpr::mul(vec![s.clone(), a("z")]);
        assert_eq!(m.to_string(), "(x - 2 - y) z");
    }

    #[test]
    fn compound_inverses_are_collected() {
        let inner = RingExpr::sub(RingExpr::one(), RingExpr::inv(a("w")));
        let e = RingExpr::mul(vec![RingExpr::inv(inner.clone()), RingExpr::inv(a("v"))]);
        let mut out = Vec::new();
        e.compound_inverses(&mut out);
        assert_eq!(out, vec![inner]);
    }
}
