use deltagpd::arith::{FiniteRing, Integer, MultiPoly, Vector};
use deltagpd::knots::{alpha_images, build_f8a, build_f8q, f8_project, f8q_mod_eps, Quat, F8R};
use deltagpd::m2::M2Elem;
use num_rational::Rational64;
use proptest::prelude::*;
use std::sync::OnceLock;

fn f8q() -> &'static FiniteRing {
    static Q: OnceLock<FiniteRing> = OnceLock::new();
    Q.get_or_init(|| build_f8q().unwrap())
}

fn f8a() -> &'static FiniteRing {
    static A: OnceLock<FiniteRing> = OnceLock::new();
    A.get_or_init(|| build_f8a().unwrap())
}

fn vector(rank: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, rank).prop_map(|v| v.into_iter().map(Integer::from).collect())
}

fn linear(ring: &FiniteRing, images: &[Vector], x: &[Integer]) -> Vector {
    x.iter().zip(images).fold(ring.zero(), |acc, (c, im)| {
        ring.add(&acc, &ring.scale(im, c))
    })
}

/// Scalars `±c^i d^j` with small exponents.
fn scalar() -> impl Strategy<Value = MultiPoly> {
    (-2i64..=2, -2i32..=2, 0u32..=2).prop_map(|(k, i, j)| {
        let c = F8R::c_poly();
        let base = if i < 0 { F8R::ci_poly() } else { c };
        &(&base.pow(i.unsigned_abs()) * &F8R::d_poly().pow(j)) * &MultiPoly::constant(k)
    })
}

fn r_elem() -> impl Strategy<Value = M2Elem> {
    [scalar(), scalar(), scalar(), scalar()].prop_map(M2Elem)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn thirteen_model_is_associative(x in vector(13), y in vector(13), z in vector(13)) {
        let q = f8q();
        prop_assert!(q.same(&q.mul(&q.mul(&x, &y), &z), &q.mul(&x, &q.mul(&y, &z))));
    }

    #[test]
    fn thirteen_model_distributes(x in vector(13), y in vector(13), z in vector(13)) {
        let q = f8q();
        prop_assert!(q.same(&q.mul(&x, &q.add(&y, &z)), &q.add(&q.mul(&x, &y), &q.mul(&x, &z))));
        prop_assert!(q.same(&q.mul(&q.add(&x, &y), &z), &q.add(&q.mul(&x, &z), &q.mul(&y, &z))));
    }

    #[test]
    fn eps_kills_five_times_anything(x in vector(13)) {
        let q = f8q();
        let eps = q.basis(0);
        let e = q.mul(&eps, &x);
        prop_assert!(q.is_zero(&q.scale(&e, &Integer::from(5))));
        prop_assert!(q.is_zero(&q.mul(&e, &eps)));
    }

    #[test]
    fn quotient_by_eps_is_symmetric(x in vector(12), y in vector(12)) {
        let (m, _) = f8q_mod_eps(f8q()).unwrap();
        let tr = |v: &[Integer]| m.trace(v).unwrap();
        let qf = |v: &[Integer]| m.sub(&m.mul(&tr(v), v), &m.mul(v, v));
        let (xy, yx) = (m.mul(&x, &y), m.mul(&y, &x));
        prop_assert!(m.same(&tr(&xy), &tr(&yx)));
        prop_assert!(m.same(&qf(&xy), &m.mul(&qf(&x), &qf(&y))));
        let two = Integer::from(2);
        prop_assert!(m.same(&tr(&tr(&x)), &m.scale(&tr(&x), &two)));
    }

    #[test]
    fn alpha_is_multiplicative(x in vector(13), y in vector(13)) {
        let (q, a) = (f8q(), f8a());
        let images = alpha_images(a).unwrap();
        let lhs = linear(a, &images, &q.mul(&x, &y));
        let rhs = a.mul(&linear(a, &images, &x), &linear(a, &images, &y));
        prop_assert!(a.same(&lhs, &rhs));
    }

    #[test]
    fn projection_is_multiplicative(u in r_elem(), v in r_elem()) {
        let q = f8q();
        let r = F8R::new();
        let lhs = f8_project(q, &r.mul(&u, &v)).unwrap();
        let rhs = q.mul(&f8_project(q, &u).unwrap(), &f8_project(q, &v).unwrap());
        prop_assert!(q.same(&lhs, &rhs));
    }

    #[test]
    fn projection_is_additive(u in r_elem(), v in r_elem()) {
        let q = f8q();
        let lhs = f8_project(q, &u.add(&v)).unwrap();
        let rhs = q.add(&f8_project(q, &u).unwrap(), &f8_project(q, &v).unwrap());
        prop_assert!(q.same(&lhs, &rhs));
    }

    #[test]
    fn quaternion_norm_is_multiplicative(a in prop::array::uniform4(-4i64..=4), b in prop::array::uniform4(-4i64..=4)) {
        let norm = |q: &Quat| q.0.iter().fold(Rational64::from_integer(0), |s, x| s + x * x);
        let (p, q) = (Quat::halves(a), Quat::halves(b));
        prop_assert_eq!(norm(&(p * q)), norm(&p) * norm(&q));
    }

    #[test]
    fn hurwitz_order_is_closed(a in prop::array::uniform4(-3i64..=3), b in prop::array::uniform4(-3i64..=3), ha: bool, hb: bool) {
        // Integer quaternions, optionally shifted by (1+i+j+k)/2.
        let make = |v: [i64; 4], half: bool| {
            let k = v.map(|x| 2 * x + i64::from(half));
            Quat::halves(k)
        };
        let prod = make(a, ha) * make(b, hb);
        let doubled = prod.doubled().expect("half-integer coordinates");
        let parity: Vec<bool> = doubled.iter().map(|x| x % 2 != Integer::from(0)).collect();
        prop_assert!(parity.iter().all(|&p| p) || parity.iter().all(|&p| !p));
    }
}
