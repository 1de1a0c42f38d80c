use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::lattice::{
    integer_kernel, module_quotient, solve_integer, Endo, MixedLattice, Quotient,
};
use super::{unit_vec, zero_vec, ArithError, Integer, Vector};

/// An associative ring whose additive group is `Z/m_1 + ... + Z^k`, given
/// by structure constants on a named basis.
///
/// Coordinates with modulus zero are free. Elements are coordinate vectors
/// kept reduced: torsion coordinates live in `[0, m)`.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    names: Vec<String>,
    moduli: Vec<Integer>,
    table: Vec<Vec<Vector>>,
    one: Vector,
    trace: Option<Vec<Vector>>,
}

impl FiniteRing {
    pub fn new(
        names: Vec<String>,
        moduli: Vec<Integer>,
        table: Vec<Vec<Vector>>,
        one: Vector,
    ) -> Result<Self, ArithError> {
        let n = names.len();
        let dim_err = |found| ArithError::DimensionMismatch { expected: n, found };
        if moduli.len() != n {
            return Err(dim_err(moduli.len()));
        }
        if one.len() != n {
            return Err(dim_err(one.len()));
        }
        if table.len() != n {
            return Err(dim_err(table.len()));
        }
        for row in &table {
            if row.len() != n {
                return Err(dim_err(row.len()));
            }
            if let Some(v) = row.iter().find(|v| v.len() != n) {
                return Err(dim_err(v.len()));
            }
        }
        let mut ring = Self {
            names,
            moduli,
            table,
            one,
            trace: None,
        };
        ring.one = ring.reduce(&ring.one);
        for i in 0..n {
            for j in 0..n {
                ring.table[i][j] = ring.reduce(&ring.table[i][j]);
            }
        }
        // Products must respect the torsion relations.
        for i in 0..n {
            let m = ring.moduli[i].clone();
            if m.is_zero() {
                continue;
            }
            for j in 0..n {
                for v in [&ring.table[i][j], &ring.table[j][i]] {
                    let scaled: Vector = v.iter().map(|x| x * &m).collect();
                    if !ring.is_zero(&scaled) {
                        return Err(ArithError::IllDefinedQuotient(format!(
                            "torsion of `{}` is not respected by products with `{}`",
                            ring.names[i], ring.names[j]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let e = unit_vec(n, i);
            if ring.mul(&ring.one, &e) != ring.reduce(&e)
                || ring.mul(&e, &ring.one) != ring.reduce(&e)
            {
                return Err(ArithError::IllDefinedQuotient(format!(
                    "the unit does not act trivially on `{}`",
                    ring.names[i]
                )));
            }
        }
        Ok(ring)
    }

    /// Attaches a trace table: the trace of every basis element.
    pub fn with_trace(mut self, trace: Vec<Vector>) -> Result<Self, ArithError> {
        if trace.len() != self.rank() {
            return Err(ArithError::DimensionMismatch {
                expected: self.rank(),
                found: trace.len(),
            });
        }
        self.trace = Some(trace.iter().map(|v| self.reduce(v)).collect());
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn moduli(&self) -> &[Integer] {
        &self.moduli
    }

    pub fn one(&self) -> Vector {
        self.one.clone()
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.rank())
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.reduce(&unit_vec(self.rank(), i))
    }

    pub fn basis_by_name(&self, name: &str) -> Option<Vector> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.basis(i))
    }

    pub fn has_trace(&self) -> bool {
        self.trace.is_some()
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn reduce(&self, v: &[Integer]) -> Vector {
        v.iter()
            .zip(&self.moduli)
            .map(|(x, m)| {
                if m.is_zero() {
                    x.clone()
                } else {
                    x.mod_floor(m)
                }
            })
            .collect()
    }

    pub fn is_zero(&self, v: &[Integer]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn same(&self, u: &[Integer], v: &[Integer]) -> bool {
        self.reduce(u) == self.reduce(v)
    }

    pub fn from_int(&self, n: i64) -> Vector {
        self.scale(&self.one, &Integer::from(n))
    }

    pub fn add(&self, u: &[Integer], v: &[Integer]) -> Vector {
        let s: Vector = u.iter().zip(v).map(|(a, b)| a + b).collect();
        self.reduce(&s)
    }

    pub fn sub(&self, u: &[Integer], v: &[Integer]) -> Vector {
        let s: Vector = u.iter().zip(v).map(|(a, b)| a - b).collect();
        self.reduce(&s)
    }

    pub fn neg(&self, u: &[Integer]) -> Vector {
        let s: Vector = u.iter().map(|a| -a).collect();
        self.reduce(&s)
    }

    pub fn scale(&self, u: &[Integer], k: &Integer) -> Vector {
        let s: Vector = u.iter().map(|a| a * k).collect();
        self.reduce(&s)
    }

    pub fn mul(&self, u: &[Integer], v: &[Integer]) -> Vector {
        let n = self.rank();
        let mut acc = zero_vec(n);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let k = ui * vj;
                for (a, c) in acc.iter_mut().zip(&self.table[i][j]) {
                    if !c.is_zero() {
                        *a += &k * c;
                    }
                }
            }
        }
        self.reduce(&acc)
    }

    pub fn pow(&self, u: &[Integer], exp: u32) -> Vector {
        let mut acc = self.one();
        for _ in 0..exp {
            acc = self.mul(&acc, u);
        }
        acc
    }

    pub fn commutator(&self, u: &[Integer], v: &[Integer]) -> Vector {
        self.sub(&self.mul(u, v), &self.mul(v, u))
    }

    /// The relation lattice `sum m_i e_i Z` (the zero submodule).
    pub fn relations(&self) -> MixedLattice {
        MixedLattice::zero(self.rank(), MixedLattice::diagonal_torsion(&self.moduli))
            .expect("consistent dimensions")
    }

    pub fn span(&self, gens: &[Vector]) -> Result<MixedLattice, ArithError> {
        MixedLattice::new(
            self.rank(),
            gens.to_vec(),
            MixedLattice::diagonal_torsion(&self.moduli),
        )
    }

    /// Left multiplication `x -> e x` as an endomorphism of the lifted lattice.
    pub fn left_mul(&self, e: &[Integer]) -> Endo {
        Endo::new(
            (0..self.rank())
                .map(|j| self.mul(e, &self.basis(j)))
                .collect(),
        )
        .expect("square")
    }

    /// Right multiplication `x -> x e`.
    pub fn right_mul(&self, e: &[Integer]) -> Endo {
        Endo::new(
            (0..self.rank())
                .map(|j| self.mul(&self.basis(j), e))
                .collect(),
        )
        .expect("square")
    }

    /// Exhaustive associativity on basis triples; the first failure is reported.
    pub fn check_associativity(&self) -> Result<(), ArithError> {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i][j];
                for k in 0..n {
                    let left = self.mul(ij, &self.basis(k));
                    let right = self.mul(&self.basis(i), &self.table[j][k]);
                    if left != right {
                        return Err(ArithError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Two-sided ideal generated by `gens`.
    pub fn ideal(&self, gens: &[Vector]) -> Result<MixedLattice, ArithError> {
        let mut actions = Vec::with_capacity(2 * self.rank());
        for i in 0..self.rank() {
            let e = self.basis(i);
            actions.push(self.left_mul(&e));
            actions.push(self.right_mul(&e));
        }
        self.span(gens)?.saturate(&actions)
    }

    /// The additive span of all words in `gens`, starting from `1`.
    pub fn subring_span(&self, gens: &[Vector]) -> Result<MixedLattice, ArithError> {
        let actions: Vec<Endo> = gens.iter().map(|g| self.left_mul(g)).collect();
        self.span(&[self.one()])?.saturate(&actions)
    }

    /// Elements commuting with every element of `elems`.
    pub fn centralizer(&self, elems: &[Vector]) -> Result<MixedLattice, ArithError> {
        let n = self.rank();
        let blocks = elems.len();
        let width = n * blocks;
        let mut rows = Vec::new();
        for i in 0..n {
            let e = self.basis(i);
            let mut row = Vec::with_capacity(width);
            for g in elems {
                row.extend(self.commutator(&e, g));
            }
            rows.push(row);
        }
        for b in 0..blocks {
            for (p, m) in self.moduli.iter().enumerate() {
                if m.is_positive() {
                    let mut row = zero_vec(width);
                    row[b * n + p] = m.clone();
                    rows.push(row);
                }
            }
        }
        let kernel = integer_kernel(&rows, width);
        let gens: Vec<Vector> = kernel.iter().map(|k| k[..n].to_vec()).collect();
        self.span(&gens)
    }

    pub fn center(&self) -> Result<MixedLattice, ArithError> {
        let basis: Vec<Vector> = (0..self.rank()).map(|i| self.basis(i)).collect();
        self.centralizer(&basis)
    }

    /// Two-sided inverse, found by solving `x e = 1` over the lifted lattice.
    pub fn inverse(&self, e: &[Integer]) -> Result<Vector, ArithError> {
        let n = self.rank();
        let mut rows: Vec<Vector> = (0..n).map(|j| self.mul(&self.basis(j), e)).collect();
        rows.extend(MixedLattice::diagonal_torsion(&self.moduli));
        let not_unit = || ArithError::NotAUnit(self.format(e));
        let x = solve_integer(&rows, n, &self.one).map_err(|_| not_unit())?;
        let x = self.reduce(&x[..n]);
        if self.mul(e, &x) != self.one || self.mul(&x, e) != self.one {
            return Err(not_unit());
        }
        Ok(x)
    }

    pub fn trace(&self, v: &[Integer]) -> Option<Vector> {
        let table = self.trace.as_ref()?;
        let mut acc = zero_vec(self.rank());
        for (c, t) in v.iter().zip(table) {
            for (a, x) in acc.iter_mut().zip(t) {
                *a += c * x;
            }
        }
        Some(self.reduce(&acc))
    }

    /// Checks that the linear map `e_i -> images[i]` is a unital ring
    /// homomorphism into `target`.
    pub fn check_homomorphism(&self, target: &FiniteRing, images: &[Vector]) -> Result<(), String> {
        let n = self.rank();
        if images.len() != n {
            return Err(format!("expected {n} images, got {}", images.len()));
        }
        let apply = |v: &[Integer]| {
            let mut acc = target.zero();
            for (c, img) in v.iter().zip(images) {
                acc = target.add(&acc, &target.scale(img, c));
            }
            acc
        };
        for (i, m) in self.moduli.iter().enumerate() {
            if m.is_positive() && !target.is_zero(&target.scale(&images[i], m)) {
                return Err(format!("torsion of `{}` is not killed", self.names[i]));
            }
        }
        if !target.same(&apply(&self.one), &target.one()) {
            return Err("unit is not preserved".into());
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = apply(&self.table[i][j]);
                let rhs = target.mul(&images[i], &images[j]);
                if !target.same(&lhs, &rhs) {
                    return Err(format!(
                        "product {} * {} is not preserved",
                        self.names[i], self.names[j]
                    ));
                }
            }
        }
        Ok(())
    }

    /// Kernel of the additive map `e_i -> images[i]` into `target`.
    pub fn kernel_of(
        &self,
        target: &FiniteRing,
        images: &[Vector],
    ) -> Result<MixedLattice, ArithError> {
        let n = self.rank();
        let m = target.rank();
        let mut rows: Vec<Vector> = images.iter().map(|v| target.reduce(v)).collect();
        rows.extend(MixedLattice::diagonal_torsion(&target.moduli));
        let kernel = integer_kernel(&rows, m);
        let gens: Vec<Vector> = kernel.iter().map(|k| k[..n].to_vec()).collect();
        self.span(&gens)
    }

    /// Quotient by the two-sided ideal generated by `gens`.
    ///
    /// Returns the quotient ring, the module projection and the ideal.
    pub fn quotient(
        &self,
        gens: &[Vector],
    ) -> Result<(FiniteRing, Quotient, MixedLattice), ArithError> {
        let ideal = self.ideal(gens)?;
        let proj = module_quotient(&self.relations(), &ideal)?;
        for b in ideal.basis() {
            for j in 0..self.rank() {
                let e = self.basis(j);
                if !ideal.contains(&self.mul(b, &e)) || !ideal.contains(&self.mul(&e, b)) {
                    return Err(ArithError::IllDefinedQuotient(format!(
                        "ideal is not closed under multiplication by `{}`",
                        self.names[j]
                    )));
                }
            }
        }
        let k = proj.rank();
        let reps: Vec<Vector> = (0..k).map(|i| proj.section(&unit_vec(k, i))).collect();
        let names = reps
            .iter()
            .map(|r| {
                let f = self.format(r);
                if self.names.contains(&f) {
                    f
                } else {
                    format!("[{f}]")
                }
            })
            .collect();
        let table = reps
            .iter()
            .map(|u| reps.iter().map(|v| proj.project(&self.mul(u, v))).collect())
            .collect();
        let one = proj.project(&self.one);
        let mut ring = FiniteRing::new(names, proj.moduli().to_vec(), table, one)?;
        if self.trace.is_some() {
            let preserved = ideal
                .basis()
                .iter()
                .all(|b| ideal.contains(&self.trace(b).expect("trace present")));
            if preserved {
                let tr = reps
                    .iter()
                    .map(|r| proj.project(&self.trace(r).expect("trace present")))
                    .collect();
                ring = ring.with_trace(tr)?;
            }
        }
        Ok((ring, proj, ideal))
    }

    /// Human-readable form: free coordinates from the last basis element
    /// down, then torsion coordinates.
    pub fn format(&self, v: &[Integer]) -> String {
        let v = self.reduce(v);
        let n = self.rank();
        let order = (0..n)
            .rev()
            .filter(|&i| self.moduli[i].is_zero())
            .chain((0..n).filter(|&i| !self.moduli[i].is_zero()));
        let mut out = String::new();
        for i in order {
            let c = &v[i];
            if c.is_zero() {
                continue;
            }
            let name = &self.names[i];
            let a = c.abs();
            let body = if name == "1" {
                a.to_string()
            } else if a.is_one() {
                name.clone()
            } else {
                format!("{a}*{name}")
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ivec;

    /// Z[i]/(5) over basis (1, i) with both coordinates mod 5.
    fn gaussian_mod5() -> FiniteRing {
        let five = Integer::from(5);
        FiniteRing::new(
            vec!["1".into(), "i".into()],
            vec![five.clone(), five],
            vec![
                vec![ivec(&[1, 0]), ivec(&[0, 1])],
                vec![ivec(&[0, 1]), ivec(&[-1, 0])],
            ],
            ivec(&[1, 0]),
        )
        .unwrap()
    }

    /// Z[x]/(x^2) with x nilpotent.
    fn dual_numbers() -> FiniteRing {
        FiniteRing::new(
            vec!["1".into(), "x".into()],
            vec![Integer::zero(), Integer::zero()],
            vec![
                vec![ivec(&[1, 0]), ivec(&[0, 1])],
                vec![ivec(&[0, 1]), ivec(&[0, 0])],
            ],
            ivec(&[1, 0]),
        )
        .unwrap()
    }

    #[test]
    fn associativity_and_inverse() {
        let r = gaussian_mod5();
        r.check_associativity().unwrap();
        // 1 + 2i has norm 5: a zero divisor mod 5.
        assert!(r.inverse(&ivec(&[1, 2])).is_err());
        let x = ivec(&[1, 1]);
        let inv = r.inverse(&x).unwrap();
        assert_eq!(r.mul(&x, &inv), r.one());
    }

    #[test]
    fn quotient_of_dual_numbers_by_x() {
        let r = dual_numbers();
        let (q, proj, ideal) = r.quotient(&[ivec(&[0, 1])]).unwrap();
        assert_eq!(q.rank(), 1);
        assert_eq!(proj.free_rank(), 1);
        assert!(ideal.contains(&ivec(&[0, 7])));
        assert_eq!(q.format(&q.one()), "1");
        assert_eq!(r.format(&ivec(&[-2, 3])), "3*x - 2");
    }

    #[test]
    fn quotient_by_one_is_zero_ring() {
        let r = dual_numbers();
        let (q, _, _) = r.quotient(&[r.one()]).unwrap();
        assert_eq!(q.rank(), 0);
        assert!(q.center().unwrap().basis().is_empty());
    }

    #[test]
    fn center_of_commutative_ring_is_everything() {
        let r = dual_numbers();
        assert_eq!(r.center().unwrap(), MixedLattice::full(2));
        let s = r.subring_span(&[ivec(&[0, 1])]).unwrap();
        assert_eq!(s, MixedLattice::full(2));
    }

    #[test]
    fn torsion_must_be_respected() {
        let bad = FiniteRing::new(
            vec!["1".into(), "x".into()],
            vec![Integer::zero(), Integer::from(2)],
            vec![
                vec![ivec(&[1, 0]), ivec(&[0, 1])],
                vec![ivec(&[0, 1]), ivec(&[1, 0])],
            ],
            ivec(&[1, 0]),
        );
        assert!(matches!(bad, Err(ArithError::IllDefinedQuotient(_))));
    }
}
