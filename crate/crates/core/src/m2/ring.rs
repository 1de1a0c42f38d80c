use std::fmt;

use crate::arith::{Integer, MultiPoly};

pub const BASIS: [&str; 4] = ["1", "a", "b", "ab"];

/// Coordinates over `K[z]` on the basis `(1, a, b, ab)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct M2Elem(pub [MultiPoly; 4]);

impl M2Elem {
    pub fn zero() -> Self {
        Self(Default::default())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(MultiPoly::is_zero)
    }

    /// The coefficient of `1` if every other coordinate vanishes.
    pub fn as_scalar(&self) -> Option<&MultiPoly> {
        self.0[1..]
            .iter()
            .all(MultiPoly::is_zero)
            .then_some(&self.0[0])
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn neg(&self) -> Self {
        Self(std::array::from_fn(|i| -&self.0[i]))
    }

    pub fn scale(&self, k: &MultiPoly) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * k))
    }
}

impl fmt::Display for M2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(BASIS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| match (b, c.len()) {
                ("1", _) => c.to_string(),
                (_, 1) if c.is_one() => b.to_string(),
                (_, 1) if c.as_constant() == Some(Integer::from(-1)) => format!("-{b}"),
                (_, 1) => format!("{c}*{b}"),
                _ => format!("({c})*{b}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + ").replace("+ -", "- "))
        }
    }
}

/// A 4×4 matrix over `K[z]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat4(pub [[MultiPoly; 4]; 4]);

impl Mat4 {
    pub fn identity() -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    MultiPoly::one()
                } else {
                    MultiPoly::zero()
                }
            })
        }))
    }

    pub fn zero() -> Self {
        Self(Default::default())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..4).fold(MultiPoly::zero(), |acc, k| {
                    &acc + &(&self.0[i][k] * &o.0[k][j])
                })
            })
        }))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][j] + &o.0[i][j])
        }))
    }

    pub fn scale(&self, k: &MultiPoly) -> Self {
        Self(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][j] * k)
        }))
    }

    pub fn column(&self, j: usize) -> [MultiPoly; 4] {
        std::array::from_fn(|i| self.0[i][j].clone())
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `R(K, x, y, p, q) = K<a, b | a² = xa − p, b² = yb − q>`, free over
/// `K[z]` on `(1, a, b, ab)` with `z = ya + xb − ab − ba` central.
///
/// `z` is stored as a value so that specializations may rename it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M2Ring {
    pub x: MultiPoly,
    pub y: MultiPoly,
    pub p: MultiPoly,
    pub q: MultiPoly,
    pub z: MultiPoly,
    trace: [MultiPoly; 4],
}

impl M2Ring {
    pub fn new(x: MultiPoly, y: MultiPoly, p: MultiPoly, q: MultiPoly, z: MultiPoly) -> Self {
        let trace = [
            MultiPoly::constant(2),
            x.clone(),
            y.clone(),
            &(&x * &y) - &z,
        ];
        Self {
            x,
            y,
            p,
            q,
            z,
            trace,
        }
    }

    /// `K = Z[x, y, p, q]` with `z` a further polynomial variable.
    pub fn generic() -> Self {
        Self::new(
            MultiPoly::var("x"),
            MultiPoly::var("y"),
            MultiPoly::var("p"),
            MultiPoly::var("q"),
            MultiPoly::var("z"),
        )
    }

    /// Replaces the trace table `(L(1), L(a), L(b), L(ab))`.
    pub fn with_trace(mut self, trace: [MultiPoly; 4]) -> Self {
        self.trace = trace;
        self
    }

    pub fn trace_table(&self) -> &[MultiPoly; 4] {
        &self.trace
    }

    pub fn scalar(&self, c: MultiPoly) -> M2Elem {
        let mut e = M2Elem::zero();
        e.0[0] = c;
        e
    }

    pub fn from_int(&self, n: i64) -> M2Elem {
        self.scalar(MultiPoly::constant(n))
    }

    pub fn one(&self) -> M2Elem {
        self.basis(0)
    }

    pub fn basis(&self, i: usize) -> M2Elem {
        let mut e = M2Elem::zero();
        e.0[i] = MultiPoly::one();
        e
    }

    pub fn a(&self) -> M2Elem {
        self.basis(1)
    }

    pub fn b(&self) -> M2Elem {
        self.basis(2)
    }

    fn elem(&self, c: [MultiPoly; 4]) -> M2Elem {
        M2Elem(c)
    }

    /// Product of two basis elements.
    pub fn basis_product(&self, i: usize, j: usize) -> M2Elem {
        let (x, y, p, q, z) = (&self.x, &self.y, &self.p, &self.q, &self.z);
        let o = MultiPoly::zero;
        let one = MultiPoly::one;
        let xy_z = &(x * y) - z;
        match (i, j) {
            (0, j) => self.basis(j),
            (i, 0) => self.basis(i),
            (1, 1) => self.elem([-p, x.clone(), o(), o()]),
            (1, 2) => self.basis(3),
            (1, 3) => self.elem([o(), o(), -p, x.clone()]),
            (2, 1) => self.elem([-z, y.clone(), x.clone(), -&one()]),
            (2, 2) => self.elem([-q, o(), y.clone(), o()]),
            (2, 3) => self.elem([-&(x * q), q.clone(), xy_z, o()]),
            (3, 1) => self.elem([-&(y * p), xy_z, p.clone(), o()]),
            (3, 2) => self.elem([o(), -q, o(), y.clone()]),
            (3, 3) => self.elem([-&(p * q), o(), o(), xy_z]),
            _ => panic!("basis index out of range"),
        }
    }

    pub fn mul(&self, u: &M2Elem, v: &M2Elem) -> M2Elem {
        let mut out = M2Elem::zero();
        for (i, ui) in u.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, vj) in v.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out = out.add(&self.basis_product(i, j).scale(&(ui * vj)));
            }
        }
        out
    }

    pub fn pow(&self, u: &M2Elem, exp: u32) -> M2Elem {
        (0..exp).fold(self.one(), |acc, _| self.mul(&acc, u))
    }

    /// The element spelled by a word in the letters `a` and `b`.
    pub fn word(&self, w: &str) -> M2Elem {
        w.chars().fold(self.one(), |acc, c| match c {
            'a' => self.mul(&acc, &self.a()),
            'b' => self.mul(&acc, &self.b()),
            _ => panic!("words use the letters a and b"),
        })
    }

    pub fn commutator(&self, u: &M2Elem, v: &M2Elem) -> M2Elem {
        self.mul(u, v).sub(&self.mul(v, u))
    }

    pub fn trace(&self, e: &M2Elem) -> MultiPoly {
        e.0.iter()
            .zip(&self.trace)
            .fold(MultiPoly::zero(), |acc, (c, l)| &acc + &(c * l))
    }

    /// `Q(e) = L(e)e − e²`.
    pub fn qform(&self, e: &M2Elem) -> M2Elem {
        e.scale(&self.trace(e)).sub(&self.mul(e, e))
    }

    /// `(u, v) = Q(u + v) − Q(u) − Q(v)`.
    pub fn bilinear(&self, u: &M2Elem, v: &M2Elem) -> M2Elem {
        self.qform(&u.add(v))
            .sub(&self.qform(u))
            .sub(&self.qform(v))
    }

    /// `Q(e)⁻¹(L(e) − e)` when `Q(e)` is a scalar unit.
    pub fn inverse(&self, e: &M2Elem) -> Option<M2Elem> {
        let qi = self.qform(e).as_scalar()?.unit_inverse()?;
        Some(self.scalar(self.trace(e)).sub(e).scale(&qi))
    }

    /// Matrix of left multiplication by `e`; column `j` holds `e·basis_j`.
    pub fn rep4(&self, e: &M2Elem) -> Mat4 {
        let cols: Vec<M2Elem> = (0..4).map(|j| self.mul(e, &self.basis(j))).collect();
        Mat4(std::array::from_fn(|i| {
            std::array::from_fn(|j| cols[j].0[i].clone())
        }))
    }
}
