//! The A′ and B′ ring functors on Δ-presentations, and evaluation of the
//! emitted ring presentations in concrete model rings.

mod emit;
mod eval;
mod expr;
mod parse;

pub use emit::{
    a_image, alpha_image, b_atom_image, b_image, emit_a, emit_b, Functor, RingPresentation,
};
pub use eval::{evaluate, verify_in_model, EisensteinModel, EvalError, ModularModel, RingModel};
pub use expr::RingExpr;
pub use parse::{parse_expr, ExprParseError};

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::arith::{EisensteinLoc, ModularInt};
    use crate::delta::{build_example, ExampleKind};
    use crate::triangulation::{
        eval_word, fig8, reduce, trefoil, DeltaPresentation, DeltaWord, S3,
    };

    fn fig8_unwrapped() -> DeltaPresentation {
        reduce(&fig8()).unwrap().unwrap()
    }

    #[test]
    fn fig8_a_presentation() {
        let p = emit_a(&fig8_unwrapped());
        assert_eq!(p.generators, ["w_x", "w_y"]);
        let lines = p.relation_lines();
        assert!(lines.contains(&"(1 - (w_x w_y)^-1)^-1 = (1 - w_y) (1 - w_x^-1)^-1".to_string()));
        assert!(lines.contains(&"(1 - (w_y w_x)^-1)^-1 = (1 - w_x) (1 - w_y^-1)^-1".to_string()));
    }

    #[test]
    fn fig8_b_presentation() {
        let p = emit_b(&fig8_unwrapped());
        assert_eq!(p.generators, ["u_x", "v_x", "u_y", "v_y"]);
        assert_eq!(
            p.relation_lines(),
            [
                "(u_y v_x + v_y)^-1 u_y u_x = v_x v_y^-1 u_y",
                "(u_y v_x + v_y)^-1 = v_x v_y^-1 + u_x",
                "(u_x v_y + v_x)^-1 u_x u_y = v_y v_x^-1 u_x",
                "(u_x v_y + v_x)^-1 = v_y v_x^-1 + u_y",
            ]
        );
        assert_eq!(p.localizations.len(), 2);
    }

    #[test]
    fn trivial_presentations() {
        let empty = DeltaPresentation {
            generators: vec![],
            relations: vec![],
            h_words: vec![],
        };
        let a = emit_a(&empty);
        assert!(a.generators.is_empty() && a.relations.is_empty());
        let report = verify_in_model("empty", &a, &BTreeMap::new(), &EisensteinModel).unwrap();
        assert!(report.all_pass() && report.checks.is_empty());

        let single = DeltaPresentation {
            generators: vec!["g".into()],
            relations: vec![],
            h_words: vec![],
        };
        let b = emit_b(&single);
        assert_eq!(b.generators, ["u_g", "v_g"]);
        assert!(b.relations.is_empty());
    }

    #[test]
    fn alpha_substitutes() {
        assert_eq!(alpha_image(&RingExpr::atom("u_x")).to_string(), "w_x");
        assert_eq!(alpha_image(&RingExpr::atom("v_x")).to_string(), "1 - w_x");
        assert_eq!(alpha_image(&RingExpr::one()), RingExpr::one());
        let s = RingExpr::add(vec![
            RingExpr::atom("u_x"),
            RingExpr::atom("v_x"),
            RingExpr::int(-1),
        ]);
        let m = BTreeMap::from([("w_x".to_string(), EisensteinLoc::t())]);
        let v = evaluate(&EisensteinModel, &alpha_image(&s), &m).unwrap();
        assert!(v.is_zero());
    }

    fn phi(w_y: EisensteinLoc) -> BTreeMap<String, EisensteinLoc> {
        BTreeMap::from([
            ("w_x".to_string(), EisensteinLoc::t()),
            ("w_y".to_string(), w_y),
        ])
    }

    fn two_minus_t_over_three() -> EisensteinLoc {
        &EisensteinLoc::third() * &EisensteinLoc::from_ints(2, -1)
    }

    #[test]
    fn trefoil_a_in_eisenstein_model() {
        let p = emit_a(&reduce(&trefoil()).unwrap());
        let good = verify_in_model(
            "trefoil",
            &p,
            &phi(two_minus_t_over_three()),
            &EisensteinModel,
        )
        .unwrap();
        assert!(good.all_pass(), "{good}");
        let bad =
            verify_in_model("trefoil", &p, &phi(EisensteinLoc::t()), &EisensteinModel).unwrap();
        assert!(!bad.all_pass());
        let missing = BTreeMap::from([("w_x".to_string(), EisensteinLoc::t())]);
        assert_eq!(
            verify_in_model("trefoil", &p, &missing, &EisensteinModel).unwrap_err(),
            EvalError::MissingAtom("w_y".into())
        );
    }

    #[test]
    fn alpha_pushes_b_relations_to_a_relations() {
        let d = reduce(&trefoil()).unwrap();
        let a = emit_a(&d);
        let mut b = emit_b(&d);
        for (l, r) in &mut b.relations {
            *l = alpha_image(l);
            *r = alpha_image(r);
        }
        for w_y in [
            two_minus_t_over_three(),
            EisensteinLoc::t(),
            EisensteinLoc::from_ints(1, 1),
        ] {
            let m = phi(w_y);
            let ra = verify_in_model("a", &a, &m, &EisensteinModel).unwrap();
            let rb = verify_in_model("b", &b, &m, &EisensteinModel).unwrap();
            assert_eq!(ra.all_pass(), rb.all_pass());
        }
    }

    #[test]
    fn inversion_failures_are_reported() {
        let p = emit_a(&reduce(&trefoil()).unwrap());
        let r =
            verify_in_model("trefoil", &p, &phi(EisensteinLoc::one()), &EisensteinModel).unwrap();
        assert!(r.failures().any(|c| c
            .detail
            .as_deref()
            .is_some_and(|d| d.starts_with("not invertible"))));
    }

    fn br_pair(name: &str) -> (i64, i64) {
        let inner = name.trim_start_matches('(').trim_end_matches(')');
        let (x, y) = inner.split_once(',').unwrap();
        (x.parse().unwrap(), y.parse().unwrap())
    }

    /// Images of products and S3-images evaluated in `Z/n` agree with the
    /// group law and the `j` of the BR model.
    #[test]
    fn b_images_match_br_models() {
        let p = DeltaWord::gen("p");
        let q = DeltaWord::gen("q");
        let mut words = vec![DeltaWord::prod(vec![p.clone(), q.clone()])];
        for s in S3::ALL {
            words.push(DeltaWord::act(s, p.clone()));
            words.push(DeltaWord::act(
                s,
                DeltaWord::prod(vec![p.clone(), q.clone()]),
            ));
            words.push(DeltaWord::prod(vec![
                DeltaWord::act(s, p.clone()),
                q.clone(),
            ]));
        }
        for n in 2..=9 {
            let m = build_example(&ExampleKind::Br(n)).unwrap();
            let ring = ModularModel(n as i64);
            let h = m.data.h();
            let mut compared = 0;
            for &hp in &h {
                for &hq in &h {
                    let assign = BTreeMap::from([("p".to_string(), hp), ("q".to_string(), hq)]);
                    let mut vals = BTreeMap::new();
                    for (g, e) in [("p", hp), ("q", hq)] {
                        let (x, y) = br_pair(m.groupoid.name(e));
                        vals.insert(format!("u_{g}"), ModularInt::new(y, n as i64).unwrap());
                        vals.insert(format!("v_{g}"), ModularInt::new(x, n as i64).unwrap());
                    }
                    for w in &words {
                        let Some(e) = eval_word(&m, w, &assign) else {
                            continue;
                        };
                        let (x, y) = br_pair(m.groupoid.name(e));
                        let (u, v) = b_image(w);
                        let u = evaluate(&ring, &u, &vals).unwrap();
                        let v = evaluate(&ring, &v, &vals).unwrap();
                        assert_eq!((v.value() as i64, u.value() as i64), (x, y), "n={n} {w}");
                        compared += 1;
                    }
                }
            }
            assert!(compared > 0);
        }
    }
}
