//! Integer lattices with torsion relations.
//!
//! A module `Z^r / T` is described by the ambient rank `r` and the relation
//! lattice `T`; a submodule is a lattice `S` with `T <= S <= Z^r`. Lattices
//! are kept in row-style Hermite normal form, which makes equality and
//! membership exact.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{unit_vec, zero_vec, ArithError, Integer, Vector};

/// Row echelon form `U * A = H` with `U` unimodular.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub transform: Vec<Vector>,
    pub pivots: Vec<usize>,
}

fn row_axpy(rows: &mut [Vector], target: usize, source: usize, q: &Integer) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

fn identity(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vec(n, i)).collect()
}

/// Hermite normal form of the row lattice of `a` (`ncols` columns), with
/// the unimodular transform.
pub fn echelon(a: &[Vector], ncols: usize) -> Echelon {
    let m = a.len();
    let mut h = a.to_vec();
    let mut u = identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !h[i][col].is_zero())
                .min_by(|&i, &j| h[i][col].abs().cmp(&h[j][col].abs()));
            let Some(p) = best else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if !h[i][col].is_zero() {
                    let q = h[i][col].div_floor(&h[r][col]);
                    row_axpy(&mut h, i, r, &q);
                    row_axpy(&mut u, i, r, &q);
                    if !h[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][col].div_floor(&h[r][col]);
            row_axpy(&mut h, i, r, &q);
            row_axpy(&mut u, i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    Echelon {
        rows: h,
        transform: u,
        pivots,
    }
}

/// Basis of the left kernel `{x : x * A = 0}` of an `m x ncols` matrix.
pub fn integer_kernel(a: &[Vector], ncols: usize) -> Vec<Vector> {
    let e = echelon(a, ncols);
    e.transform[e.pivots.len()..].to_vec()
}

/// Some integer `x` with `x * A = target`.
pub fn solve_integer(a: &[Vector], ncols: usize, target: &[Integer]) -> Result<Vector, ArithError> {
    if target.len() != ncols {
        return Err(ArithError::DimensionMismatch {
            expected: ncols,
            found: target.len(),
        });
    }
    let e = echelon(a, ncols);
    let mut residual = target.to_vec();
    let mut y = Vec::with_capacity(e.pivots.len());
    for (r, &c) in e.pivots.iter().enumerate() {
        let (q, rem) = residual[c].div_mod_floor(&e.rows[r][c]);
        if !rem.is_zero() {
            return Err(ArithError::NoSolution);
        }
        for (x, h) in residual.iter_mut().zip(e.rows[r].iter()) {
            *x -= &q * h;
        }
        y.push(q);
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Err(ArithError::NoSolution);
    }
    let mut x = zero_vec(a.len());
    for (q, urow) in y.iter().zip(e.transform.iter()) {
        for (xi, ui) in x.iter_mut().zip(urow.iter()) {
            *xi += q * ui;
        }
    }
    Ok(x)
}

/// A `Z`-linear endomorphism of `Z^r`, given by the images of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endo {
    images: Vec<Vector>,
}

impl Endo {
    pub fn new(images: Vec<Vector>) -> Result<Self, ArithError> {
        let r = images.len();
        if let Some(bad) = images.iter().find(|v| v.len() != r) {
            return Err(ArithError::DimensionMismatch {
                expected: r,
                found: bad.len(),
            });
        }
        Ok(Self { images })
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn apply(&self, v: &[Integer]) -> Vector {
        let mut out = zero_vec(self.images.len());
        for (c, img) in v.iter().zip(&self.images) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(img) {
                *o += c * x;
            }
        }
        out
    }
}

/// A sublattice of `Z^r` that contains a fixed relation lattice.
#[derive(Debug, Clone)]
pub struct MixedLattice {
    rank: usize,
    basis: Vec<Vector>,
    torsion: Vec<Vector>,
}

impl PartialEq for MixedLattice {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.basis == other.basis
    }
}

impl Eq for MixedLattice {}

impl MixedLattice {
    pub fn new(rank: usize, gens: Vec<Vector>, torsion: Vec<Vector>) -> Result<Self, ArithError> {
        if let Some(bad) = gens.iter().chain(torsion.iter()).find(|v| v.len() != rank) {
            return Err(ArithError::DimensionMismatch {
                expected: rank,
                found: bad.len(),
            });
        }
        let mut all = gens;
        all.extend(torsion.iter().cloned());
        let e = echelon(&all, rank);
        let basis = e.rows[..e.pivots.len()].to_vec();
        Ok(Self {
            rank,
            basis,
            torsion,
        })
    }

    /// The relation lattice alone: the zero submodule.
    pub fn zero(rank: usize, torsion: Vec<Vector>) -> Result<Self, ArithError> {
        Self::new(rank, Vec::new(), torsion)
    }

    pub fn full(rank: usize) -> Self {
        Self::new(rank, identity(rank), Vec::new()).expect("square identity")
    }

    /// Relations `m_i e_i` for every positive modulus.
    pub fn diagonal_torsion(moduli: &[Integer]) -> Vec<Vector> {
        moduli
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_positive())
            .map(|(i, m)| {
                let mut v = zero_vec(moduli.len());
                v[i] = m.clone();
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Hermite basis (including the relation lattice).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn torsion(&self) -> &[Vector] {
        &self.torsion
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[Integer]) -> Vector {
        let mut v = v.to_vec();
        for row in &self.basis {
            let c = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let q = v[c].div_floor(&row[c]);
            if !q.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Integer]) -> bool {
        v.len() == self.rank && self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.rank == other.rank && self.basis.iter().all(|b| other.contains(b))
    }

    /// Rank of `S / T` modulo torsion, i.e. `rank_Z(S) - rank_Z(T)`.
    pub fn lattice_rank(&self) -> usize {
        self.basis.len()
    }

    /// Smallest lattice containing `self` that is closed under every action.
    pub fn saturate(&self, actions: &[Endo]) -> Result<Self, ArithError> {
        let torsion_lattice = Self::zero(self.rank, self.torsion.clone())?;
        for a in actions {
            if a.dim() != self.rank {
                return Err(ArithError::DimensionMismatch {
                    expected: self.rank,
                    found: a.dim(),
                });
            }
            for t in &self.torsion {
                if !torsion_lattice.contains(&a.apply(t)) {
                    return Err(ArithError::IllDefinedQuotient(
                        "action does not preserve the relation lattice".into(),
                    ));
                }
            }
        }
        let mut current = self.clone();
        loop {
            let mut fresh = Vec::new();
            for b in &current.basis {
                for a in actions {
                    let img = a.apply(b);
                    if !current.contains(&img) {
                        fresh.push(img);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(current);
            }
            let mut gens = current.basis.clone();
            gens.extend(fresh);
            current = Self::new(self.rank, gens, self.torsion.clone())?;
        }
    }
}

/// `Z^r / S` in Smith form: `Z/d_1 + ... + Z/d_m + Z^k`, with a projection
/// from `Z^r` and a section back.
#[derive(Debug, Clone)]
pub struct Quotient {
    moduli: Vec<Integer>,
    proj: Vec<Vector>,
    section: Vec<Vector>,
}

impl Quotient {
    /// Per-coordinate modulus; zero means a free coordinate.
    pub fn moduli(&self) -> &[Integer] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|m| m.is_zero()).count()
    }

    pub fn torsion_invariants(&self) -> Vec<Integer> {
        self.moduli
            .iter()
            .filter(|m| !m.is_zero())
            .cloned()
            .collect()
    }

    pub fn project(&self, v: &[Integer]) -> Vector {
        let mut out = zero_vec(self.moduli.len());
        for (c, row) in v.iter().zip(&self.proj) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        for (o, m) in out.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *o = o.mod_floor(m);
            }
        }
        out
    }

    pub fn section(&self, y: &[Integer]) -> Vector {
        let r = self.proj.len();
        let mut out = zero_vec(r);
        for (c, row) in y.iter().zip(&self.section) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    pub fn section_basis(&self) -> &[Vector] {
        &self.section
    }
}

/// Quotient of `Z^r / T` (`ambient` = the relation lattice `T`) by `sub`.
pub fn module_quotient(ambient: &MixedLattice, sub: &MixedLattice) -> Result<Quotient, ArithError> {
    if ambient.rank != sub.rank {
        return Err(ArithError::DimensionMismatch {
            expected: ambient.rank,
            found: sub.rank,
        });
    }
    if !ambient.is_subset(sub) {
        return Err(ArithError::NotContained);
    }
    let r = sub.rank;
    let mut m = sub.basis.clone();
    let k = m.len();
    let mut v = identity(r);
    let mut vinv = identity(r);

    let swap_cols =
        |m: &mut Vec<Vector>, v: &mut Vec<Vector>, vinv: &mut Vec<Vector>, a: usize, b: usize| {
            if a == b {
                return;
            }
            for row in m.iter_mut().chain(v.iter_mut()) {
                row.swap(a, b);
            }
            vinv.swap(a, b);
        };
    // col_j -= q col_t
    let col_op = |m: &mut Vec<Vector>,
                  v: &mut Vec<Vector>,
                  vinv: &mut Vec<Vector>,
                  j: usize,
                  t: usize,
                  q: &Integer| {
        for row in m.iter_mut().chain(v.iter_mut()) {
            let s = &row[t] * q;
            row[j] -= s;
        }
        let add: Vector = vinv[j].iter().map(|x| x * q).collect();
        for (x, y) in vinv[t].iter_mut().zip(add) {
            *x += y;
        }
    };

    let mut t = 0;
    while t < k.min(r) {
        let mut found = false;
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..r {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            found = true;
            m.swap(t, pi);
            swap_cols(&mut m, &mut v, &mut vinv, t, pj);
            let mut clean = true;
            for i in t + 1..k {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    row_axpy(&mut m, i, t, &q);
                    clean &= m[i][t].is_zero();
                }
            }
            for j in t + 1..r {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    col_op(&mut m, &mut v, &mut vinv, j, t, &q);
                    clean &= m[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let pivot = m[t][t].clone();
            let bad = (t + 1..k).find(|&i| (t + 1..r).any(|j| !m[i][j].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let minus_one = -Integer::one();
                    row_axpy(&mut m, t, i, &minus_one);
                }
                None => break,
            }
        }
        if !found {
            break;
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }

    let mut moduli = Vec::new();
    let mut proj_cols = Vec::new();
    for c in 0..r {
        let d = if c < t {
            m[c][c].clone()
        } else {
            Integer::zero()
        };
        if d.is_one() {
            continue;
        }
        moduli.push(d);
        proj_cols.push(c);
    }
    let proj = v
        .iter()
        .map(|row| proj_cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let section = proj_cols.iter().map(|&c| vinv[c].clone()).collect();
    Ok(Quotient {
        moduli,
        proj,
        section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ivec;
    use proptest::prelude::*;

    #[test]
    fn hermite_form_is_canonical() {
        let a = MixedLattice::new(2, vec![ivec(&[2, 4]), ivec(&[3, 1])], vec![]).unwrap();
        let b = MixedLattice::new(2, vec![ivec(&[1, -3]), ivec(&[0, 10])], vec![]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[ivec(&[1, 7]), ivec(&[0, 10])]);
        assert!(a.contains(&ivec(&[5, 5])));
        assert!(!a.contains(&ivec(&[0, 5])));
    }

    #[test]
    fn kernel_and_solve() {
        let a = vec![ivec(&[1, 2]), ivec(&[2, 4]), ivec(&[0, 3])];
        let k = integer_kernel(&a, 2);
        assert_eq!(k.len(), 1);
        let kv = &k[0];
        for c in 0..2 {
            let s: Integer = (0..3).map(|i| &kv[i] * &a[i][c]).sum();
            assert!(s.is_zero());
        }
        let x = solve_integer(&a, 2, &ivec(&[1, 5])).unwrap();
        let img: Vec<Integer> = (0..2)
            .map(|c| (0..3).map(|i| &x[i] * &a[i][c]).sum())
            .collect();
        assert_eq!(img, ivec(&[1, 5]));
        assert_eq!(
            solve_integer(&[ivec(&[2, 0])], 2, &ivec(&[1, 0])),
            Err(ArithError::NoSolution)
        );
    }

    #[test]
    fn quotient_by_diagonal_relation() {
        let amb = MixedLattice::zero(2, vec![]).unwrap();
        let sub = MixedLattice::new(2, vec![ivec(&[5, 0])], vec![]).unwrap();
        let q = module_quotient(&amb, &sub).unwrap();
        assert_eq!(q.torsion_invariants(), vec![Integer::from(5)]);
        assert_eq!(q.free_rank(), 1);
    }

    #[test]
    fn quotient_by_everything_is_zero() {
        let amb = MixedLattice::zero(3, vec![]).unwrap();
        let q = module_quotient(&amb, &MixedLattice::full(3)).unwrap();
        assert_eq!(q.rank(), 0);
    }

    #[test]
    fn quotient_requires_containment() {
        let amb = MixedLattice::zero(2, vec![ivec(&[5, 0])]).unwrap();
        let sub = MixedLattice::new(2, vec![ivec(&[0, 1])], vec![]).unwrap();
        assert!(matches!(
            module_quotient(&amb, &sub),
            Err(ArithError::NotContained)
        ));
    }

    #[test]
    fn saturation_fixed_points() {
        let swap = Endo::new(vec![ivec(&[0, 1]), ivec(&[1, 0])]).unwrap();
        let full = MixedLattice::full(2);
        assert_eq!(full.saturate(&[swap.clone()]).unwrap(), full);
        let zero = MixedLattice::zero(2, vec![]).unwrap();
        assert_eq!(zero.saturate(&[swap.clone()]).unwrap(), zero);
        let line = MixedLattice::new(2, vec![ivec(&[1, 0])], vec![]).unwrap();
        assert_eq!(line.saturate(&[swap]).unwrap(), full);
    }

    #[test]
    fn saturation_rejects_dimension_mismatch() {
        let e = Endo::new(vec![ivec(&[1])]).unwrap();
        assert!(MixedLattice::full(2).saturate(&[e]).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vector>> {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, 3), 0..5)
            .prop_map(|rows| rows.iter().map(|r| ivec(r)).collect())
    }

    proptest! {
        #[test]
        fn projection_after_section_is_identity(rows in arb_matrix()) {
            let amb = MixedLattice::zero(3, vec![]).unwrap();
            let sub = MixedLattice::new(3, rows.clone(), vec![]).unwrap();
            let q = module_quotient(&amb, &sub).unwrap();
            for k in 0..q.rank() {
                let e = unit_vec(q.rank(), k);
                prop_assert_eq!(q.project(&q.section(&e)), e);
            }
            for r in &rows {
                prop_assert!(q.project(r).iter().all(|x| x.is_zero()));
            }
            // Torsion invariants multiply to the index on the torsion part.
            prop_assert_eq!(q.free_rank() + sub.lattice_rank(), 3);
        }

        #[test]
        fn saturation_is_idempotent_and_monotone(rows in arb_matrix()) {
            let a = Endo::new(vec![ivec(&[0, 1, 0]), ivec(&[0, 0, 1]), ivec(&[2, 0, 0])]).unwrap();
            let l = MixedLattice::new(3, rows, vec![]).unwrap();
            let s = l.saturate(std::slice::from_ref(&a)).unwrap();
            prop_assert!(l.is_subset(&s));
            prop_assert_eq!(s.saturate(&[a]).unwrap(), s);
        }
    }
}
