use std::collections::BTreeMap;

use super::ring::{M2Elem, M2Ring, Mat4, BASIS};
use super::M2Error;
use crate::arith::{FiniteRing, Integer, MultiPoly, Vector};
use crate::report::Report;

fn label(e: &M2Elem) -> String {
    e.to_string()
}

/// Identities of a symmetric formal M₂-ring on the given samples:
/// `L(1) = 2`, `L∘L = 2L`, centrality of `Q`, `L∘Q = 2Q` for each sample,
/// and for each ordered pair `(u, v) = L(u)L(v) − L(uv)`, `L(uv) = L(vu)`,
/// `Q(uv) = Q(u)Q(v)` and `uv + vu = −(u, v) + L(u)v + L(v)u`.
pub fn check_symmetric(ring: &M2Ring, samples: &[M2Elem]) -> Report {
    let mut r = Report::new("symmetric M2");
    let two = MultiPoly::constant(2);
    r.check_eq("L(1) = 2", &ring.trace(&ring.one()), &two);
    for e in samples {
        let n = label(e);
        let l = ring.trace(e);
        r.check_eq(
            format!("L(L({n})) = 2L({n})"),
            &ring.trace(&ring.scalar(l.clone())),
            &(&two * &l),
        );
        let q = ring.qform(e);
        r.check_with(format!("Q({n}) central"), q.as_scalar().is_some(), || {
            q.to_string()
        });
        r.check_eq(
            format!("L(Q({n})) = 2Q({n})"),
            &ring.scalar(ring.trace(&q)),
            &q.scale(&two),
        );
    }
    for u in samples {
        for v in samples {
            let (nu, nv) = (label(u), label(v));
            let uv = ring.mul(u, v);
            let vu = ring.mul(v, u);
            let (lu, lv) = (ring.trace(u), ring.trace(v));
            let form = ring.bilinear(u, v);
            r.check_eq(
                format!("({nu}, {nv}) = L({nu})L({nv}) - L({nu}*{nv})"),
                &form,
                &ring.scalar(&(&lu * &lv) - &ring.trace(&uv)),
            );
            r.check_eq(
                format!("L({nu}*{nv}) = L({nv}*{nu})"),
                &ring.trace(&uv),
                &ring.trace(&vu),
            );
            r.check_eq(
                format!("Q({nu}*{nv}) = Q({nu})Q({nv})"),
                &ring.qform(&uv),
                &ring.mul(&ring.qform(u), &ring.qform(v)),
            );
            let rhs = form.neg().add(&v.scale(&lu)).add(&u.scale(&lv));
            r.check_eq(
                format!("{nu}*{nv} + {nv}*{nu} polarization"),
                &uv.add(&vu),
                &rhs,
            );
        }
    }
    r
}

/// The symmetric M₂-ring identities in a finite-rank model with a trace.
/// `Q(e) = L(e)e − e²` and `(u, v) = Q(u + v) − Q(u) − Q(v)`.
pub fn check_symmetric_finite(ring: &FiniteRing, samples: &[Vector]) -> Result<Report, M2Error> {
    let tr = |e: &[Integer]| ring.trace(e).ok_or(M2Error::NoTrace);
    let q = |e: &[Integer]| -> Result<Vector, M2Error> {
        Ok(ring.sub(&ring.mul(&tr(e)?, e), &ring.mul(e, e)))
    };
    let gens: Vec<Vector> = (0..ring.rank()).map(|i| ring.basis(i)).collect();
    let central = |e: &[Integer]| gens.iter().all(|g| ring.is_zero(&ring.commutator(e, g)));
    let two = Integer::from(2);
    let mut r = Report::new("symmetric M2");
    let one = ring.one();
    r.check_with("L(1) = 2", ring.same(&tr(&one)?, &ring.from_int(2)), || {
        ring.format(&tr(&one).unwrap_or_default())
    });
    for e in samples {
        let n = ring.format(e);
        let l = tr(e)?;
        r.check(format!("L({n}) central"), central(&l));
        r.check(
            format!("L(L({n})) = 2L({n})"),
            ring.same(&tr(&l)?, &ring.scale(&l, &two)),
        );
        let qe = q(e)?;
        r.check(format!("Q({n}) central"), central(&qe));
        r.check(
            format!("L(Q({n})) = 2Q({n})"),
            ring.same(&tr(&qe)?, &ring.scale(&qe, &two)),
        );
    }
    for u in samples {
        for v in samples {
            let (nu, nv) = (ring.format(u), ring.format(v));
            let uv = ring.mul(u, v);
            let vu = ring.mul(v, u);
            let (lu, lv) = (tr(u)?, tr(v)?);
            let form = ring.sub(&ring.sub(&q(&ring.add(u, v))?, &q(u)?), &q(v)?);
            r.check(
                format!("({nu}, {nv}) = L({nu})L({nv}) - L({nu}*{nv})"),
                ring.same(&form, &ring.sub(&ring.mul(&lu, &lv), &tr(&uv)?)),
            );
            r.check(
                format!("L({nu}*{nv}) = L({nv}*{nu})"),
                ring.same(&tr(&uv)?, &tr(&vu)?),
            );
            r.check(
                format!("Q({nu}*{nv}) = Q({nu})Q({nv})"),
                ring.same(&q(&uv)?, &ring.mul(&q(u)?, &q(v)?)),
            );
        }
    }
    Ok(r)
}

/// Associativity on all basis triples and the homomorphism property of the
/// 4×4 representation on all basis pairs.
pub fn check_structure(ring: &M2Ring) -> Report {
    let mut r = Report::new("M2 structure");
    let basis: Vec<M2Elem> = (0..4).map(|i| ring.basis(i)).collect();
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let uv = ring.mul(u, v);
            r.check_eq(
                format!("rep4({0}*{1}) = rep4({0})rep4({1})", BASIS[i], BASIS[j]),
                &ring.rep4(&uv),
                &ring.rep4(u).mul(&ring.rep4(v)),
            );
            for (k, w) in basis.iter().enumerate() {
                r.check_eq(
                    format!(
                        "({0}*{1})*{2} = {0}*({1}*{2})",
                        BASIS[i], BASIS[j], BASIS[k]
                    ),
                    &ring.mul(&uv, w),
                    &ring.mul(u, &ring.mul(v, w)),
                );
            }
        }
    }
    r
}

fn words(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| [format!("{w}a"), format!("{w}b")])
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// For all words in `a, b` up to `max_len`: the normal form maps to the
/// product of the generator matrices, and two normal forms agree iff their
/// matrices agree.
pub fn check_faithfulness(ring: &M2Ring, max_len: usize) -> Report {
    let mut r = Report::new("rep4 faithfulness");
    let ma = ring.rep4(&ring.a());
    let mb = ring.rep4(&ring.b());
    let mut forms = Vec::new();
    for w in words(max_len) {
        let nf = ring.word(&w);
        let m = w.chars().fold(Mat4::identity(), |acc, c| {
            acc.mul(if c == 'a' { &ma } else { &mb })
        });
        let name = if w.is_empty() {
            "1".to_string()
        } else {
            w.clone()
        };
        r.check_eq(
            format!("rep4({name}) = matrix product"),
            &ring.rep4(&nf),
            &m,
        );
        forms.push((name, nf, m));
    }
    let mut mismatches = Vec::new();
    for (n1, f1, m1) in &forms {
        for (n2, f2, m2) in &forms {
            if (f1 == f2) != (m1 == m2) {
                mismatches.push(format!("{n1} vs {n2}"));
            }
        }
    }
    r.check_with(
        "normal forms agree iff matrices agree",
        mismatches.is_empty(),
        || mismatches.join(", "),
    );
    r
}

/// Noncommutative polynomials in `a, b` over `Z[x, y]`, for checking
/// bracket identities before any relation is imposed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Free(BTreeMap<String, MultiPoly>);

impl Free {
    fn letter(c: char) -> Self {
        Self(BTreeMap::from([(c.to_string(), MultiPoly::one())]))
    }

    fn scalar(k: MultiPoly) -> Self {
        Self(BTreeMap::from([(String::new(), k)]))
    }

    fn add(&self, o: &Self) -> Self {
        let mut out = self.0.clone();
        for (w, c) in &o.0 {
            let e = out.entry(w.clone()).or_default();
            *e = &*e + c;
            if e.is_zero() {
                out.remove(w);
            }
        }
        Self(out)
    }

    fn neg(&self) -> Self {
        Self(self.0.iter().map(|(w, c)| (w.clone(), -c)).collect())
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = Self::default();
        for (w1, c1) in &self.0 {
            for (w2, c2) in &o.0 {
                out = out.add(&Self(BTreeMap::from([(format!("{w1}{w2}"), c1 * c2)])));
            }
        }
        out
    }

    fn bracket(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }
}

/// The bracket identities `[a, z] = [p, b]` and `[b, z] = [q, a]` for
/// `z = ya + xb − ab − ba`, `p = xa − a²`, `q = yb − b²`, checked in the free
/// algebra; then centrality of `z`, `p`, `q` inside `ring`.
pub fn centrality_check(ring: &M2Ring) -> Report {
    let mut r = Report::new("centrality");
    let (a, b) = (Free::letter('a'), Free::letter('b'));
    let x = Free::scalar(ring.x.clone());
    let y = Free::scalar(ring.y.clone());
    let ab = a.mul(&b);
    let ba = b.mul(&a);
    let z = y.mul(&a).add(&x.mul(&b)).sub(&ab).sub(&ba);
    let p = x.mul(&a).sub(&a.mul(&a));
    let q = y.mul(&b).sub(&b.mul(&b));
    r.check("free: [a,z] = [p,b]", a.bracket(&z) == p.bracket(&b));
    r.check("free: [b,z] = [q,a]", b.bracket(&z) == q.bracket(&a));

    let (ea, eb) = (ring.a(), ring.b());
    let z_elem = ea
        .scale(&ring.y)
        .add(&eb.scale(&ring.x))
        .sub(&ring.mul(&ea, &eb))
        .sub(&ring.mul(&eb, &ea));
    r.check_eq(
        "ya + xb - ab - ba = z",
        &z_elem,
        &ring.scalar(ring.z.clone()),
    );
    let p_elem = ea.scale(&ring.x).sub(&ring.mul(&ea, &ea));
    let q_elem = eb.scale(&ring.y).sub(&ring.mul(&eb, &eb));
    r.check_eq("xa - a^2 = p", &p_elem, &ring.scalar(ring.p.clone()));
    r.check_eq("yb - b^2 = q", &q_elem, &ring.scalar(ring.q.clone()));
    let zero = M2Elem::zero();
    r.check_eq(
        "[a,z] - [p,b] = 0",
        &ring
            .commutator(&ea, &z_elem)
            .sub(&ring.commutator(&p_elem, &eb)),
        &zero,
    );
    r.check_eq(
        "[b,z] - [q,a] = 0",
        &ring
            .commutator(&eb, &z_elem)
            .sub(&ring.commutator(&q_elem, &ea)),
        &zero,
    );
    r.check_eq("za - az = 0", &ring.commutator(&z_elem, &ea), &zero);
    r.check_eq("zb - bz = 0", &ring.commutator(&z_elem, &eb), &zero);
    r
}
