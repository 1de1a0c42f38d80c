use std::collections::BTreeMap;

use num_traits::Zero;

use super::{f8q_vec, KnotError};
use crate::arith::{FiniteRing, Integer, Vector};
use crate::functors::{alpha_image, emit_a, emit_b, verify_in_model, RingPresentation};
use crate::report::Report;
use crate::triangulation::{fig8, reduce};

pub const F8A_BASIS: [&str; 6] = ["1", "s", "z", "a", "g", "ag"];

pub fn f8a_vec(terms: &[(i64, &str)]) -> Vector {
    let mut v = vec![Integer::zero(); 6];
    for (c, name) in terms {
        let i = F8A_BASIS
            .iter()
            .position(|b| b == name)
            .unwrap_or_else(|| panic!("unknown basis element {name}"));
        v[i] += Integer::from(*c);
    }
    v
}

fn product(x: &str, y: &str) -> Vector {
    let v = f8a_vec;
    match (x, y) {
        ("1", y) => v(&[(1, y)]),
        (x, "1") => v(&[(1, x)]),
        ("s", "s") => v(&[(2, "z"), (1, "1")]),
        ("z", "z") => v(&[(2, "z")]),
        ("s", "z") | ("z", "s") => v(&[(2, "s"), (1, "z"), (-2, "1")]),
        ("s", "a") | ("a", "s") => v(&[(1, "a"), (-1, "s"), (1, "z"), (1, "1")]),
        ("s", "g") | ("g", "s") => v(&[(1, "g")]),
        ("s", "ag") | ("ag", "s") => v(&[(1, "ag")]),
        ("z", "a") | ("a", "z") => v(&[(1, "s"), (-1, "1")]),
        ("z", _) | (_, "z") => v(&[]),
        ("a", "a") => v(&[(1, "a"), (1, "z"), (-1, "s")]),
        ("a", "g") => v(&[(1, "ag")]),
        ("a", "ag") => v(&[(1, "ag"), (-1, "g")]),
        ("g", "a") => v(&[(2, "1"), (-1, "z"), (1, "g"), (-1, "ag")]),
        ("g", "g") => v(&[(1, "z"), (-2, "1")]),
        ("g", "ag") => v(&[(2, "a"), (2, "g"), (1, "z"), (-1, "s"), (-1, "1")]),
        ("ag", "a") => v(&[(2, "a"), (-1, "s"), (1, "1"), (1, "g")]),
        ("ag", "g") => v(&[(1, "s"), (-1, "1"), (-2, "a")]),
        ("ag", "ag") => v(&[(2, "ag"), (1, "z"), (-2, "1")]),
        _ => unreachable!(),
    }
}

/// The A′ figure-eight ring over `Z[s, z]/((s−1)(z−2), s² − 2z − 1, z² − 2z)`
/// with `s`, `z` central.
pub fn build_f8a() -> Result<FiniteRing, KnotError> {
    let table = F8A_BASIS
        .iter()
        .map(|x| F8A_BASIS.iter().map(|y| product(x, y)).collect())
        .collect();
    let names = F8A_BASIS.iter().map(|s| s.to_string()).collect();
    Ok(FiniteRing::new(
        names,
        vec![Integer::zero(); 6],
        table,
        f8a_vec(&[(1, "1")]),
    )?)
}

pub fn verify_f8a(m: &FiniteRing) -> Report {
    let mut r = Report::new("A' figure-eight");
    let assoc = m.check_associativity();
    r.check_with("associativity on all basis triples", assoc.is_ok(), || {
        format!("{assoc:?}")
    });
    let e = |t: &[(i64, &str)]| f8a_vec(t);
    let (s, z, a, g) = (
        e(&[(1, "s")]),
        e(&[(1, "z")]),
        e(&[(1, "a")]),
        e(&[(1, "g")]),
    );
    let one = m.one();
    for (n, x) in [("s", &s), ("z", &z)] {
        let central = (0..6).all(|i| m.is_zero(&m.commutator(x, &m.basis(i))));
        r.check(format!("{n} central"), central);
    }
    let mut eq = |name: &str, lhs: Vector, rhs: Vector| {
        r.check_with(name, m.same(&lhs, &rhs), || {
            format!("{} != {}", m.format(&lhs), m.format(&rhs))
        });
    };
    eq(
        "(s-1)(z-2) = 0",
        m.mul(&m.sub(&s, &one), &m.sub(&z, &m.from_int(2))),
        m.zero(),
    );
    eq("s^2 = 2z + 1", m.mul(&s, &s), e(&[(2, "z"), (1, "1")]));
    eq("z^2 = 2z", m.mul(&z, &z), e(&[(2, "z")]));
    eq("a^2 - a = z - s", m.sub(&m.mul(&a, &a), &a), m.sub(&z, &s));
    eq("g^2 = z - 2", m.mul(&g, &g), e(&[(1, "z"), (-2, "1")]));
    eq(
        "ag + ga = 2 - z + g",
        m.add(&m.mul(&a, &g), &m.mul(&g, &a)),
        e(&[(2, "1"), (-1, "z"), (1, "g")]),
    );
    eq(
        "sa = a - s + z + 1",
        m.mul(&s, &a),
        e(&[(1, "a"), (-1, "s"), (1, "z"), (1, "1")]),
    );
    eq("sg = g", m.mul(&s, &g), g.clone());
    eq("za = s - 1", m.mul(&z, &a), e(&[(1, "s"), (-1, "1")]));
    eq("zg = 0", m.mul(&z, &g), m.zero());
    eq("z ag = 0", m.mul(&z, &m.mul(&a, &g)), m.zero());
    eq("s ag = ag", m.mul(&s, &m.mul(&a, &g)), e(&[(1, "ag")]));
    r
}

/// `w_x ↦ a`, `w_y ↦ a + g`.
pub fn f8a_assignment() -> BTreeMap<String, Vector> {
    BTreeMap::from([
        ("w_x".to_string(), f8a_vec(&[(1, "a")])),
        ("w_y".to_string(), f8a_vec(&[(1, "a"), (1, "g")])),
    ])
}

/// The emitted A′ relations of the reduced figure-eight presentation hold
/// under `w_x ↦ a`, `w_y ↦ a + g`, and so do the B′ relations pushed through
/// `α`.
pub fn verify_f8a_presentation(m: &FiniteRing) -> Result<Report, KnotError> {
    let p = reduce(&fig8())?.unwrap();
    let assign = f8a_assignment();
    let mut r = verify_in_model("A' figure-eight relations", &emit_a(&p), &assign, m)?;
    let b = emit_b(&p);
    let pushed = RingPresentation {
        relations: b
            .relations
            .iter()
            .map(|(l, rr)| (alpha_image(l), alpha_image(rr)))
            .collect(),
        ..b
    };
    r.extend(verify_in_model("alpha(B' relations)", &pushed, &assign, m)?);
    Ok(r)
}

/// `α(a) = (1 − a)⁻¹a(1 − a − g)`, `α(b) = (1 − a − g)⁻¹(a + g)(1 − a)`,
/// read from `a = v_x⁻¹u_xv_y`, `b = v_y⁻¹u_yv_x`.
pub fn alpha_generators(m: &FiniteRing) -> Result<(Vector, Vector), KnotError> {
    let one = m.one();
    let a = f8a_vec(&[(1, "a")]);
    let ag = f8a_vec(&[(1, "a"), (1, "g")]);
    let vx = m.sub(&one, &a);
    let vy = m.sub(&one, &ag);
    let big_a = m.mul(&m.mul(&m.inverse(&vx)?, &a), &vy);
    let big_b = m.mul(&m.mul(&m.inverse(&vy)?, &ag), &vx);
    Ok((big_a, big_b))
}

/// Images of the 13-model basis under `α`: `ε ↦ 0`, `w ↦ A(A + 1) + 1`,
/// `d ↦ AB + BA + A + B`, extended multiplicatively.
pub fn alpha_images(m: &FiniteRing) -> Result<Vec<Vector>, KnotError> {
    let (a, b) = alpha_generators(m)?;
    let one = m.one();
    let w = m.add(&m.mul(&a, &m.add(&a, &one)), &one);
    let d = m.add(&m.add(&m.mul(&a, &b), &m.mul(&b, &a)), &m.add(&a, &b));
    let mus = [one.clone(), w, d];
    let nus = [one, a.clone(), b.clone(), m.mul(&a, &b)];
    let mut out = vec![m.zero()];
    for nu in &nus {
        for mu in &mus {
            out.push(m.mul(mu, nu));
        }
    }
    Ok(out)
}

/// Compares `q / (gens)` with the A′ ring through the map induced by `α`.
/// `None` when the quotient is free of rank 6 and the structure constants
/// agree; otherwise the reason.
fn quotient_mismatch(
    q: &FiniteRing,
    gens: &[Vector],
    m: &FiniteRing,
    images: &[Vector],
) -> Result<Option<String>, KnotError> {
    let (quot, proj, _) = q.quotient(gens)?;
    if proj.free_rank() != m.rank() || proj.rank() != m.rank() {
        return Ok(Some(format!(
            "quotient has rank {} with torsion {:?}",
            proj.rank(),
            proj.torsion_invariants()
        )));
    }
    let lin = |v: &[Integer], basis: &[Vector]| {
        v.iter()
            .zip(basis)
            .fold(m.zero(), |acc, (c, im)| m.add(&acc, &m.scale(im, c)))
    };
    let induced: Vec<Vector> = proj
        .section_basis()
        .iter()
        .map(|rep| lin(rep, images))
        .collect();
    let full = m.span(&(0..m.rank()).map(|i| m.basis(i)).collect::<Vec<_>>())?;
    if m.span(&induced)? != full {
        return Ok(Some("induced map is not onto".into()));
    }
    let mut bad = Vec::new();
    for i in 0..quot.rank() {
        for j in 0..quot.rank() {
            let lhs = lin(quot.structure_constant(i, j), &induced);
            if !m.same(&lhs, &m.mul(&induced[i], &induced[j])) {
                bad.push(format!("({i},{j})"));
            }
        }
    }
    Ok((!bad.is_empty()).then(|| format!("products differ at {}", bad.join(", "))))
}

/// `α`: the 13-model onto the A′ ring. Its kernel contains `(ε, w − d)`
/// with index 5; the extra class is `wa − wb`.
pub fn verify_alpha(q: &FiniteRing, m: &FiniteRing) -> Result<Report, KnotError> {
    let mut r = Report::new("alpha");
    let images = alpha_images(m)?;
    let hom = q.check_homomorphism(m, &images);
    r.check_with("alpha is a ring homomorphism", hom.is_ok(), || {
        hom.clone().unwrap_err()
    });
    let full = m.span(&(0..6).map(|i| m.basis(i)).collect::<Vec<_>>())?;
    r.check("alpha is surjective", m.span(&images)? == full);

    let gens = [f8q_vec(&[(1, "eps")]), f8q_vec(&[(1, "w"), (-1, "d")])];
    let ideal = q.ideal(&gens)?;
    let kernel = q.kernel_of(m, &images)?;
    r.check_with("ker alpha = (eps, w - d)", kernel == ideal, || {
        "wa - wb lies in the kernel but not in the ideal".into()
    });
    let extra = f8q_vec(&[(1, "wa"), (-1, "wb")]);
    let mut with_extra = gens.to_vec();
    with_extra.push(extra.clone());
    r.check(
        "ker alpha = (eps, w - d) + Z(wa - wb), with 5(wa - wb) in (eps, w - d)",
        ideal.is_subset(&kernel)
            && !ideal.contains(&extra)
            && ideal.contains(&q.scale(&extra, &Integer::from(5)))
            && q.ideal(&with_extra)? == kernel,
    );

    let stated = quotient_mismatch(q, &gens, m, &images)?;
    r.check_with(
        "13-model / (eps, w - d) matches the A' ring",
        stated.is_none(),
        || stated.clone().unwrap_or_default(),
    );
    let kernel_gens = kernel.basis().to_vec();
    let actual = quotient_mismatch(q, &kernel_gens, m, &images)?;
    r.check_with(
        "13-model / ker alpha matches the A' ring",
        actual.is_none(),
        || actual.clone().unwrap_or_default(),
    );
    Ok(r)
}

/// `J = Z(s − 1) + Zz`: already a two-sided ideal, with torsion-free quotient
/// of rank 4.
pub fn f8a_mod_j(m: &FiniteRing) -> Result<(FiniteRing, crate::arith::Quotient), KnotError> {
    let gens = [f8a_vec(&[(1, "s"), (-1, "1")]), f8a_vec(&[(1, "z")])];
    let (quot, proj, _) = m.quotient(&gens)?;
    Ok((quot, proj))
}

pub fn verify_j(m: &FiniteRing) -> Result<Report, KnotError> {
    let mut r = Report::new("J");
    let gens = [f8a_vec(&[(1, "s"), (-1, "1")]), f8a_vec(&[(1, "z")])];
    r.check("J is a two-sided ideal", m.ideal(&gens)? == m.span(&gens)?);
    let (_, proj) = f8a_mod_j(m)?;
    r.check(
        "A'/J is torsion-free of rank 4",
        proj.rank() == 4 && proj.free_rank() == 4,
    );
    Ok(r)
}
