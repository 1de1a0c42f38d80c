use std::fmt;

use super::expr::RingExpr;
use crate::triangulation::{DeltaPresentation, DeltaWord, S3};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functor {
    A,
    B,
}

/// Generators (all invertible), the compound expressions that the relations
/// invert, and the relations themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub functor: Functor,
    pub generators: Vec<String>,
    pub localizations: Vec<RingExpr>,
    pub relations: Vec<(RingExpr, RingExpr)>,
}

impl RingPresentation {
    fn new(
        functor: Functor,
        generators: Vec<String>,
        relations: Vec<(RingExpr, RingExpr)>,
    ) -> Self {
        let mut localizations = Vec::new();
        for (l, r) in &relations {
            l.compound_inverses(&mut localizations);
            r.compound_inverses(&mut localizations);
        }
        Self {
            functor,
            generators,
            localizations,
            relations,
        }
    }

    /// Atoms referenced by relations, in order of first appearance.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (l, r) in &self.relations {
            l.atoms(&mut out);
            r.atoms(&mut out);
        }
        out
    }

    pub fn relation_lines(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|(l, r)| format!("{l} = {r}"))
            .collect()
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.functor {
            Functor::A => "A'",
            Functor::B => "B'",
        };
        writeln!(f, "ring: {name}")?;
        writeln!(f, "invertible generators: {}", self.generators.join(", "))?;
        if !self.localizations.is_empty() {
            writeln!(f, "inverted expressions:")?;
            for l in &self.localizations {
                writeln!(f, "  {l}")?;
            }
        }
        writeln!(f, "relations:")?;
        for line in self.relation_lines() {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Image of a Δ-word under the A′ functor.
pub fn a_image(w: &DeltaWord) -> RingExpr {
    match w {
        DeltaWord::Gen(g) => RingExpr::atom(format!("w_{g}")),
        DeltaWord::Prod(fs) => RingExpr::mul(fs.iter().map(a_image).collect()),
        DeltaWord::Act(s, inner) => {
            s.ops().chars().rev().fold(a_image(inner), |e, c| match c {
                'i' => RingExpr::inv(e),
                'k' => RingExpr::sub(RingExpr::one(), e),
                // j = iki: w -> (1 - w^-1)^-1
                _ => RingExpr::inv(RingExpr::sub(RingExpr::one(), RingExpr::inv(e))),
            })
        }
    }
}

/// Image of a Δ-word under the B′ functor, as a pair `(U, V)`.
pub fn b_image(w: &DeltaWord) -> (RingExpr, RingExpr) {
    match w {
        DeltaWord::Gen(g) => (
            RingExpr::atom(format!("u_{g}")),
            RingExpr::atom(format!("v_{g}")),
        ),
        DeltaWord::Prod(fs) => {
            let mut it = fs.iter().map(b_image);
            let first = it.next().expect("non-empty product");
            it.fold(first, |(u1, v1), (u2, v2)| {
                (
                    RingExpr::mul(vec![u1.clone(), u2]),
                    RingExpr::add(vec![RingExpr::mul(vec![u1, v2]), v1]),
                )
            })
        }
        DeltaWord::Act(s, inner) => {
            s.ops()
                .chars()
                .rev()
                .fold(b_image(inner), |(u, v), c| match c {
                    'k' => (v, u),
                    'i' => {
                        let ui = RingExpr::inv(u);
                        (ui.clone(), RingExpr::neg(RingExpr::mul(vec![ui, v])))
                    }
                    // j = iki: (u, v) -> (-v^-1 u, v^-1)
                    _ => {
                        let vi = RingExpr::inv(v);
                        (RingExpr::neg(RingExpr::mul(vec![vi.clone(), u])), vi)
                    }
                })
        }
    }
}

/// `(U, V)` image of `σ(x)` for a single generator, used to cross-check the
/// action rules.
pub fn b_atom_image(s: S3, g: &str) -> (RingExpr, RingExpr) {
    b_image(&DeltaWord::act(s, DeltaWord::gen(g)))
}

pub fn emit_a(p: &DeltaPresentation) -> RingPresentation {
    let generators = p.generators.iter().map(|g| format!("w_{g}")).collect();
    let relations = p
        .relations
        .iter()
        .map(|r| (a_image(&r.lhs), a_image(&r.rhs)))
        .collect();
    RingPresentation::new(Functor::A, generators, relations)
}

fn strip_common_sign(l: RingExpr, r: RingExpr) -> (RingExpr, RingExpr) {
    match (l, r) {
        (RingExpr::Neg(l), RingExpr::Neg(r)) => (*l, *r),
        (l, r) => (l, r),
    }
}

pub fn emit_b(p: &DeltaPresentation) -> RingPresentation {
    let generators = p
        .generators
        .iter()
        .flat_map(|g| [format!("u_{g}"), format!("v_{g}")])
        .collect();
    let mut relations = Vec::new();
    for r in &p.relations {
        let (lu, lv) = b_image(&r.lhs);
        let (ru, rv) = b_image(&r.rhs);
        relations.push(strip_common_sign(lu, ru));
        relations.push(strip_common_sign(lv, rv));
    }
    RingPresentation::new(Functor::B, generators, relations)
}

/// The natural map `u_g -> w_g`, `v_g -> 1 - w_g`.
pub fn alpha_image(e: &RingExpr) -> RingExpr {
    e.map_atoms(&|a| {
        if let Some(g) = a.strip_prefix("u_") {
            RingExpr::atom(format!("w_{g}"))
        } else if let Some(g) = a.strip_prefix("v_") {
            RingExpr::sub(RingExpr::one(), RingExpr::atom(format!("w_{g}")))
        } else {
            RingExpr::atom(a)
        }
    })
}
