use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::*;
use crate::arith::FiniteRing;
use crate::functors::{evaluate, EisensteinModel, RingExpr, RingModel};
use crate::report::Report;

/// Search bound used by the bundled Hurwitz check.
pub const HURWITZ_BOUND: i64 = 2;

pub fn verify_hurwitz(m: &FiniteRing, bound: i64) -> Report {
    let mut r = Report::new("Hurwitz");
    match hurwitz_check(m, bound) {
        Ok(w) => {
            r.check(format!("witness a -> {}, g -> {}", w.a, w.g), true);
            r.check_eq("image lattice covolume = 8", &w.covolume, &8.into());
        }
        Err(e) => r.fail("witness within bound", e.to_string()),
    }
    r
}

pub fn trefoil_suites() -> Result<Vec<Report>, KnotError> {
    Ok(vec![verify_trefoil_a()?, verify_trefoil_b()?])
}

pub fn fig8_suites() -> Result<Vec<Report>, KnotError> {
    let q = build_f8q()?;
    let m = build_f8a()?;
    Ok(vec![
        verify_f8_r(),
        verify_trace_generators(),
        verify_f8q(&q)?,
        verify_ideal_elements(&q)?,
        check_projection_multiplicative(&q)?,
        verify_trace_closure(&q)?,
        verify_center(&q)?,
        verify_mod_eps_symmetric(&q)?,
        verify_f8_b_end_to_end(&q)?,
        verify_f8a(&m),
        verify_f8a_presentation(&m)?,
        verify_alpha(&q, &m)?,
        verify_j(&m)?,
        verify_hurwitz(&m, HURWITZ_BOUND),
    ])
}

/// Models accepted by `dg eval`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalModel {
    TrefoilA,
    F8R,
    F8B,
    F8A,
}

impl EvalModel {
    pub const ALL: [EvalModel; 4] = [
        EvalModel::TrefoilA,
        EvalModel::F8R,
        EvalModel::F8B,
        EvalModel::F8A,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EvalModel::TrefoilA => "trefoil-a",
            EvalModel::F8R => "f8-r",
            EvalModel::F8B => "f8-b",
            EvalModel::F8A => "f8-a",
        }
    }

    pub fn atoms(self) -> &'static [&'static str] {
        match self {
            EvalModel::TrefoilA => &["t", "w_x", "w_y"],
            EvalModel::F8R => &["a", "b", "c", "d", "w", "eps", "q"],
            EvalModel::F8B => &["a", "b", "c", "d", "w", "eps", "q"],
            EvalModel::F8A => &["a", "g", "s", "z"],
        }
    }
}

impl fmt::Display for EvalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EvalModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown model `{s}`"))
    }
}

fn run<M: RingModel>(
    model: &M,
    e: &RingExpr,
    assign: BTreeMap<String, M::Elem>,
) -> Result<String, KnotError> {
    Ok(model.show(&evaluate(model, e, &assign)?))
}

fn named<T>(pairs: impl IntoIterator<Item = (&'static str, T)>) -> BTreeMap<String, T> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Normal form of `e` in the chosen model.
pub fn eval_in_model(model: EvalModel, e: &RingExpr) -> Result<String, KnotError> {
    match model {
        EvalModel::TrefoilA => {
            let t = crate::arith::EisensteinLoc::t();
            run(
                &EisensteinModel,
                e,
                named([("t", t.clone()), ("w_x", t), ("w_y", trefoil_phi_w_y())]),
            )
        }
        EvalModel::F8R => {
            let r = F8R::new();
            let q = f8_commutator(&r).q;
            let assign = named([
                ("a", r.a()),
                ("b", r.b()),
                ("c", r.c()),
                ("d", r.d()),
                ("w", r.w()),
                ("eps", r.eps()),
                ("q", q),
            ]);
            run(&r, e, assign)
        }
        EvalModel::F8B => {
            let ring = build_f8q()?;
            let r = F8R::new();
            let q = f8_project(&ring, &f8_commutator(&r).q)?;
            let c = f8_project(&ring, &r.c())?;
            let b = |n: &str| f8q_vec(&[(1, n)]);
            let assign = named([
                ("a", b("a")),
                ("b", b("b")),
                ("c", c),
                ("d", b("d")),
                ("w", b("w")),
                ("eps", b("eps")),
                ("q", q),
            ]);
            run(&ring, e, assign)
        }
        EvalModel::F8A => {
            let ring = build_f8a()?;
            let assign = named(["a", "g", "s", "z"].map(|n| (n, f8a_vec(&[(1, n)]))));
            run(&ring, e, assign)
        }
    }
}
