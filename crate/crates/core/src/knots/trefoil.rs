use std::collections::BTreeMap;

use super::KnotError;
use crate::arith::EisensteinLoc;
use crate::functors::{emit_a, emit_b, verify_in_model, EisensteinModel};
use crate::report::Report;
use crate::triangulation::{atom, reduce, trefoil, DeltaPresentation, DeltaWord, Relation, S3};

/// `{ i(x) = k(x), y = j(xx) }`, the trefoil presentation after solving the
/// reduced relations.
pub fn trefoil_final_presentation() -> DeltaPresentation {
    let x = DeltaWord::gen("x");
    DeltaPresentation {
        generators: vec!["x".into(), "y".into()],
        relations: vec![
            Relation::new(atom(S3::I, "x"), atom(S3::K, "x")),
            Relation::new(
                DeltaWord::gen("y"),
                DeltaWord::act(S3::J, DeltaWord::prod(vec![x.clone(), x])),
            ),
        ],
        h_words: vec![],
    }
}

fn t() -> EisensteinLoc {
    EisensteinLoc::t()
}

fn int(n: i64) -> EisensteinLoc {
    EisensteinLoc::from_int(n)
}

fn inv(e: &EisensteinLoc) -> Result<EisensteinLoc, KnotError> {
    Ok(e.inverse()?)
}

/// `phi(w_y) = (2 - t)/3`.
pub fn trefoil_phi_w_y() -> EisensteinLoc {
    &EisensteinLoc::third() * &(&int(2) - &t())
}

pub fn verify_trefoil_a() -> Result<Report, KnotError> {
    verify_trefoil_a_with(trefoil_phi_w_y())
}

/// The A′ checks with `phi(w_x) = t` and the given value for `phi(w_y)`.
pub fn verify_trefoil_a_with(w_y: EisensteinLoc) -> Result<Report, KnotError> {
    let mut r = Report::new("trefoil A'");
    let assign = BTreeMap::from([("w_x".to_string(), t()), ("w_y".to_string(), w_y.clone())]);
    r.extend(verify_in_model(
        "trefoil A'",
        &emit_a(&trefoil_final_presentation()),
        &assign,
        &EisensteinModel,
    )?);
    r.extend(verify_in_model(
        "trefoil A'",
        &emit_a(&reduce(&trefoil())?),
        &assign,
        &EisensteinModel,
    )?);

    let one = int(1);
    let ti = inv(&t())?;
    r.check_eq("t^-1 = 1 - t", &ti, &(&one - &t()));
    let lhs = &int(3) * &inv(&(&int(2) - &t()))?;
    r.check_eq("3(2 - t)^-1 = 1 + t", &lhs, &(&one + &t()));
    r.check_eq("2 - t = 1 + t^-1", &(&int(2) - &t()), &(&one + &ti));
    let both = &(&one + &ti) * &(&one + &t());
    r.check_eq("(1 + t^-1)(1 + t) = 3", &both, &int(3));
    r.check_eq("1 + t = 1 - t^-2", &(&one + &t()), &(&one - &(&ti * &ti)));
    match w_y.inverse() {
        Ok(wyi) => {
            r.check_eq(
                "phi(w_y)^-1 = 1 - phi(w_x)^-2",
                &wyi,
                &(&one - &(&ti * &ti)),
            );
        }
        Err(_) => r.fail(
            "phi(w_y)^-1 = 1 - phi(w_x)^-2",
            "phi(w_y) is not invertible",
        ),
    }
    // The inverse map: t -> w_x, 1/3 -> w_x w_y^2.
    r.check_eq(
        "phi(w_x w_y^2) = 3^-1",
        &(&t() * &(&w_y * &w_y)),
        &EisensteinLoc::third(),
    );
    r.check_eq("phi(w_x) = t", &t(), &t());
    Ok(r)
}

/// The B′ proof chain with `u_x = t`.
pub fn verify_trefoil_b() -> Result<Report, KnotError> {
    let mut r = Report::new("trefoil B'");
    let one = int(1);
    let u_x = t();
    let v_x = inv(&u_x)?;
    let v_y = inv(&(&one + &v_x))?;
    let u_y = -&(&v_y * &(&u_x * &u_x));
    let assign = BTreeMap::from([
        ("u_x".to_string(), u_x.clone()),
        ("v_x".to_string(), v_x.clone()),
        ("u_y".to_string(), u_y.clone()),
        ("v_y".to_string(), v_y.clone()),
    ]);
    r.extend(verify_in_model(
        "trefoil B'",
        &emit_b(&trefoil_final_presentation()),
        &assign,
        &EisensteinModel,
    )?);
    r.extend(verify_in_model(
        "trefoil B'",
        &emit_b(&reduce(&trefoil())?),
        &assign,
        &EisensteinModel,
    )?);

    let t3 = &(&t() * &t()) * &t();
    let alexander = &(&(&t() * &t()) - &t()) + &one;
    r.check_eq(
        "t^3 + 1 = (t + 1)(t^2 - t + 1)",
        &(&t3 + &one),
        &(&(&t() + &one) * &alexander),
    );
    r.check_eq("t^3 + 1 = 0", &(&t3 + &one), &int(0));
    r.check_eq("t^3 = -1", &t3, &int(-1));
    r.check_eq("t^2 - t + 1 = 0", &alexander, &int(0));
    r.check_eq("u_x + v_x = 1", &(&u_x + &v_x), &one);
    r.check_eq("t + t^-1 = 1", &(&t() + &inv(&t())?), &one);
    r.check_eq("u_y + v_y = 1", &(&u_y + &v_y), &one);
    r.check_eq(
        "(1 + t^-1)^-1 (t^-1 + 1) = 1",
        &(&v_y * &(&v_x + &one)),
        &one,
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{build_example, ExampleKind, FiniteGroup};
    use crate::triangulation::count_solutions;

    #[test]
    fn trefoil_suites_pass() {
        let a = verify_trefoil_a().unwrap();
        assert!(a.all_pass(), "{a}");
        let b = verify_trefoil_b().unwrap();
        assert!(b.all_pass(), "{b}");
    }

    #[test]
    fn wrong_phi_fails() {
        let r = verify_trefoil_a_with(t()).unwrap();
        assert!(!r.all_pass());
    }

    #[test]
    fn final_presentation_is_equivalent() {
        let reduced = reduce(&trefoil()).unwrap();
        let fin = trefoil_final_presentation();
        let models = [
            ExampleKind::Ar(7),
            ExampleKind::Ar(13),
            ExampleKind::Br(7),
            ExampleKind::Triple(3),
            ExampleKind::Coarse(FiniteGroup::cyclic(3)),
        ];
        let mut nonzero = 0;
        for kind in models {
            let m = build_example(&kind).unwrap();
            let n = count_solutions(&m, &reduced);
            assert_eq!(n, count_solutions(&m, &fin), "{kind:?}");
            nonzero += usize::from(n > 0);
        }
        assert!(nonzero >= 2);
    }
}
