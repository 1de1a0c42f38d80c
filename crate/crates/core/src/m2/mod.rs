//! Formal M₂-rings `R(K, x, y, p, q)`: normal forms over `K[z]`, the trace,
//! the quadratic form, the 4×4 representation and the symmetric identities.

mod checks;
mod closure;
mod ring;

pub use checks::{
    centrality_check, check_faithfulness, check_structure, check_symmetric, check_symmetric_finite,
};
pub use closure::ideal_trace_closure;
pub use ring::{M2Elem, M2Ring, Mat4, BASIS};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum M2Error {
    #[error("the model carries no trace")]
    NoTrace,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ivec, FiniteRing, Integer, MultiPoly};

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(s)
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(n)
    }

    fn mat(rows: [[MultiPoly; 4]; 4]) -> Mat4 {
        Mat4(rows)
    }

    #[test]
    fn products() {
        let r = M2Ring::generic();
        let (a, b) = (r.a(), r.b());
        assert_eq!(r.mul(&a, &a), M2Elem([-v("p"), v("x"), c(0), c(0)]));
        assert_eq!(r.mul(&b, &a), M2Elem([-v("z"), v("y"), v("x"), c(-1)]));
        let e = M2Elem([v("z"), c(3), v("q"), c(-1)]);
        assert_eq!(r.mul(&r.one(), &e), e);
        assert_eq!(r.mul(&e, &r.one()), e);
    }

    #[test]
    fn generator_matrices_are_the_displayed_ones() {
        let r = M2Ring::generic();
        let (x, y, p, q, z) = (v("x"), v("y"), v("p"), v("q"), v("z"));
        let o = c(0);
        let ma = mat([
            [o.clone(), -&p, o.clone(), o.clone()],
            [c(1), x.clone(), o.clone(), o.clone()],
            [o.clone(), o.clone(), o.clone(), -&p],
            [o.clone(), o.clone(), c(1), x.clone()],
        ]);
        let mb = mat([
            [o.clone(), -&z, -&q, -&(&q * &x)],
            [o.clone(), y.clone(), o.clone(), q.clone()],
            [c(1), x.clone(), y.clone(), &(&x * &y) - &z],
            [o.clone(), c(-1), o.clone(), o.clone()],
        ]);
        assert_eq!(r.rep4(&r.a()), ma);
        assert_eq!(r.rep4(&r.b()), mb);
        assert_eq!(r.rep4(&r.one()), Mat4::identity());
    }

    #[test]
    fn structure_and_faithfulness() {
        let r = M2Ring::generic();
        let s = check_structure(&r);
        assert!(s.all_pass(), "{s}");
        let f = check_faithfulness(&r, 3);
        assert!(f.all_pass(), "{f}");
    }

    #[test]
    fn forms() {
        let r = M2Ring::generic();
        assert_eq!(r.qform(&r.one()), r.one());
        assert_eq!(r.bilinear(&r.a(), &r.b()), r.scalar(v("z")));
        for i in 0..4 {
            let e = r.basis(i);
            assert_eq!(r.scalar(r.trace(&e)), r.bilinear(&e, &r.one()));
        }
    }

    #[test]
    fn symmetric_identities() {
        let r = M2Ring::generic();
        let mut samples: Vec<M2Elem> = (0..4).map(|i| r.basis(i)).collect();
        samples.push(r.scalar(v("z")));
        samples.push(r.a().scale(&v("z")).add(&r.b()));
        let rep = check_symmetric(&r, &samples);
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn corrupted_trace_breaks_symmetry() {
        let r = M2Ring::generic();
        let t = r.trace_table().clone();
        let bad = r
            .clone()
            .with_trace([t[0].clone(), &v("x") + &c(1), t[2].clone(), t[3].clone()]);
        let samples: Vec<M2Elem> = (0..4).map(|i| bad.basis(i)).collect();
        let rep = check_symmetric(&bad, &samples);
        assert!(rep
            .failures()
            .any(|f| f.name.starts_with("(a, b) = L(a)L(b)") || f.name.starts_with("(a, 1)")));
    }

    #[test]
    fn brackets() {
        let rep = centrality_check(&M2Ring::generic());
        assert!(rep.all_pass(), "{rep}");
    }

    fn figure_eight() -> M2Ring {
        let cc = MultiPoly::laurent("c");
        let ci = cc.unit_inverse().unwrap();
        M2Ring::new(c(-1), c(-1), -&cc, -&ci, -&MultiPoly::var("d"))
    }

    #[test]
    fn figure_eight_specialization() {
        let r = figure_eight();
        let (a, b) = (r.a(), r.b());
        let d = r.mul(&a, &b).add(&r.mul(&b, &a)).add(&a).add(&b);
        assert_eq!(d, r.scalar(v("d")));
        assert_eq!(r.trace(&r.basis(3)), &c(1) + &v("d"));
        let ma = r.rep4(&a);
        let lhs = ma.mul(&ma.add(&Mat4::identity()));
        assert_eq!(lhs, Mat4::identity().scale(&MultiPoly::laurent("c")));
        let ai = r.inverse(&a).unwrap();
        assert_eq!(r.mul(&a, &ai), r.one());
        assert!(centrality_check(&r).all_pass());
    }

    fn dual_numbers_with_trace() -> FiniteRing {
        // Z[e]/(e^2); traces are attached per test.
        let names = vec!["1".to_string(), "e".to_string()];
        let table = vec![
            vec![ivec(&[1, 0]), ivec(&[0, 1])],
            vec![ivec(&[0, 1]), ivec(&[0, 0])],
        ];
        FiniteRing::new(names, vec![Integer::from(0); 2], table, ivec(&[1, 0])).unwrap()
    }

    #[test]
    fn trace_closure() {
        let plain = dual_numbers_with_trace();
        assert_eq!(
            ideal_trace_closure(&plain, &[ivec(&[0, 1])]).unwrap_err(),
            M2Error::NoTrace
        );
        let ring = plain
            .clone()
            .with_trace(vec![ivec(&[2, 0]), ivec(&[1, 0])])
            .unwrap();
        let zero = ideal_trace_closure(&ring, &[]).unwrap();
        assert_eq!(zero.lattice_rank(), 0);
        let closed = ideal_trace_closure(&ring, &[ivec(&[0, 1])]).unwrap();
        assert!(closed.contains(&ivec(&[1, 0])));
        let traceless = plain
            .with_trace(vec![ivec(&[2, 0]), ivec(&[0, 0])])
            .unwrap();
        let same = ideal_trace_closure(&traceless, &[ivec(&[0, 1])]).unwrap();
        assert!(!same.contains(&ivec(&[1, 0])) && same.contains(&ivec(&[0, 1])));
    }
}
