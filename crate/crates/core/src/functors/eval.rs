use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use thiserror::Error;

use super::emit::RingPresentation;
use super::expr::RingExpr;
use crate::arith::{EisensteinLoc, FiniteRing, Integer, ModularInt, Vector};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value assigned to atom `{0}`")]
    MissingAtom(String),
    #[error("`{0}` is not invertible in the model")]
    NotInvertible(String),
}

/// A concrete ring with exact equality and partial inversion.
pub trait RingModel {
    type Elem: Clone;

    fn from_integer(&self, n: &Integer) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn same(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn show(&self, a: &Self::Elem) -> String;
}

/// `Z[t, 1/3]/(t^2 - t + 1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct EisensteinModel;

impl RingModel for EisensteinModel {
    type Elem = EisensteinLoc;

    fn from_integer(&self, n: &Integer) -> EisensteinLoc {
        let q = num_rational::BigRational::from_integer(n.clone());
        EisensteinLoc::new(q, num_rational::BigRational::from_integer(0.into())).expect("integer")
    }
    fn add(&self, a: &EisensteinLoc, b: &EisensteinLoc) -> EisensteinLoc {
        a + b
    }
    fn mul(&self, a: &EisensteinLoc, b: &EisensteinLoc) -> EisensteinLoc {
        a * b
    }
    fn neg(&self, a: &EisensteinLoc) -> EisensteinLoc {
        -a
    }
    fn inv(&self, a: &EisensteinLoc) -> Option<EisensteinLoc> {
        a.inverse().ok()
    }
    fn same(&self, a: &EisensteinLoc, b: &EisensteinLoc) -> bool {
        a == b
    }
    fn show(&self, a: &EisensteinLoc) -> String {
        a.to_string()
    }
}

/// Residues modulo a fixed positive modulus.
#[derive(Debug, Clone, Copy)]
pub struct ModularModel(pub i64);

impl RingModel for ModularModel {
    type Elem = ModularInt;

    fn from_integer(&self, n: &Integer) -> ModularInt {
        let m = Integer::from(self.0);
        let r = ((n % &m) + &m) % &m;
        ModularInt::new(r.to_i64().expect("residue fits"), self.0).expect("positive modulus")
    }
    fn add(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        a.add(*b)
    }
    fn mul(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        a.mul(*b)
    }
    fn neg(&self, a: &ModularInt) -> ModularInt {
        a.neg()
    }
    fn inv(&self, a: &ModularInt) -> Option<ModularInt> {
        a.inv().ok()
    }
    fn same(&self, a: &ModularInt, b: &ModularInt) -> bool {
        a == b
    }
    fn show(&self, a: &ModularInt) -> String {
        a.to_string()
    }
}

impl RingModel for FiniteRing {
    type Elem = Vector;

    fn from_integer(&self, n: &Integer) -> Vector {
        self.scale(&self.one(), n)
    }
    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        FiniteRing::add(self, a, b)
    }
    fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        FiniteRing::mul(self, a, b)
    }
    fn neg(&self, a: &Vector) -> Vector {
        FiniteRing::neg(self, a)
    }
    fn inv(&self, a: &Vector) -> Option<Vector> {
        self.inverse(a).ok()
    }
    fn same(&self, a: &Vector, b: &Vector) -> bool {
        FiniteRing::same(self, a, b)
    }
    fn show(&self, a: &Vector) -> String {
        self.format(a)
    }
}

pub fn evaluate<M: RingModel>(
    model: &M,
    e: &RingExpr,
    assign: &BTreeMap<String, M::Elem>,
) -> Result<M::Elem, EvalError> {
    Ok(match e {
        RingExpr::Int(n) => model.from_integer(n),
        RingExpr::Atom(a) => assign
            .get(a)
            .cloned()
            .ok_or_else(|| EvalError::MissingAtom(a.clone()))?,
        RingExpr::Add(ts) => {
            let mut acc = model.from_integer(&Integer::from(0));
            for t in ts {
                acc = model.add(&acc, &evaluate(model, t, assign)?);
            }
            acc
        }
        RingExpr::Mul(fs) => {
            let mut acc = model.from_integer(&Integer::from(1));
            for f in fs {
                acc = model.mul(&acc, &evaluate(model, f, assign)?);
            }
            acc
        }
        RingExpr::Neg(x) => model.neg(&evaluate(model, x, assign)?),
        RingExpr::Inv(x) => {
            let v = evaluate(model, x, assign)?;
            model
                .inv(&v)
                .ok_or_else(|| EvalError::NotInvertible(x.to_string()))?
        }
    })
}

/// Evaluates both sides of every relation. A missing atom is an error; a
/// failed inversion is recorded as a failing check naming the expression.
pub fn verify_in_model<M: RingModel>(
    suite: &str,
    pres: &RingPresentation,
    assign: &BTreeMap<String, M::Elem>,
    model: &M,
) -> Result<Report, EvalError> {
    if let Some(a) = pres.atoms().into_iter().find(|a| !assign.contains_key(a)) {
        return Err(EvalError::MissingAtom(a));
    }
    let mut report = Report::new(suite);
    for ((l, r), line) in pres.relations.iter().zip(pres.relation_lines()) {
        match (evaluate(model, l, assign), evaluate(model, r, assign)) {
            (Ok(lv), Ok(rv)) => {
                let ok = model.same(&lv, &rv);
                report.check_with(line, ok, || {
                    format!("{} != {}", model.show(&lv), model.show(&rv))
                });
            }
            (Err(EvalError::NotInvertible(x)), _) | (_, Err(EvalError::NotInvertible(x))) => {
                report.fail(line, format!("not invertible: {x}"));
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Ok(report)
}
