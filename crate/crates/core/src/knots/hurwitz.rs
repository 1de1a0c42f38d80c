use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use super::{f8a_mod_j, KnotError};
use crate::arith::{FiniteRing, Integer, MixedLattice, Vector};

/// `r + xi + yj + zk` with rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quat(pub [Rational64; 4]);

impl Quat {
    pub fn zero() -> Self {
        Quat([Rational64::zero(); 4])
    }

    pub fn from_int(n: i64) -> Self {
        let mut q = Self::zero();
        q.0[0] = Rational64::from_integer(n);
        q
    }

    /// Coordinates given as numerators over 2.
    pub fn halves(k: [i64; 4]) -> Self {
        Quat(k.map(|x| Rational64::new(x, 2)))
    }

    pub fn scale(self, k: Rational64) -> Self {
        Quat(self.0.map(|x| x * k))
    }

    /// Doubled coordinates, when they are integers.
    pub fn doubled(&self) -> Option<Vector> {
        self.0
            .iter()
            .map(|x| {
                let y = x * Rational64::from_integer(2);
                y.is_integer().then(|| Integer::from(y.to_integer()))
            })
            .collect()
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, o: Quat) -> Quat {
        Quat(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, o: Quat) -> Quat {
        self + (-o)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat(self.0.map(|x| -x))
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        let [a1, b1, c1, d1] = self.0;
        let [a2, b2, c2, d2] = o.0;
        Quat([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (x, unit) in self.0.iter().zip(["", "i", "j", "k"]) {
            if x.is_zero() {
                continue;
            }
            let sign = if x.is_negative() { "-" } else { "+" };
            match (first, x.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let m = x.abs();
            match (m.is_one() && !unit.is_empty(), unit) {
                (true, u) => f.write_str(u)?,
                (false, "") => write!(f, "{m}")?,
                (false, u) => write!(f, "{m}{u}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct HurwitzWitness {
    pub a: Quat,
    pub g: Quat,
    /// Images of `1, s, z, a, g, ag`.
    pub images: Vec<Quat>,
    /// Index of the image lattice in `Z⁴`, in doubled coordinates.
    pub covolume: Integer,
}

/// The Hurwitz order in doubled coordinates.
pub fn hurwitz_lattice() -> MixedLattice {
    let gens = [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [1, 1, 1, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
        .collect();
    MixedLattice::new(4, gens, vec![]).expect("rank 4")
}

fn det(m: &[Vector]) -> Integer {
    match m.len() {
        0 => Integer::one(),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vector> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(Integer::zero(), |a, b| a + b),
    }
}

fn apply(images: &[Quat], v: &[Integer]) -> Option<Quat> {
    v.iter().zip(images).try_fold(Quat::zero(), |acc, (c, q)| {
        let c: i64 = c.try_into().ok()?;
        Some(acc + q.scale(Rational64::from_integer(c)))
    })
}

/// Quaternions with coordinates `k/2`, `|k| ≤ 2·bound`.
fn candidates(bound: i64) -> impl Iterator<Item = Quat> {
    let r = -2 * bound..=2 * bound;
    let rs = [r.clone(), r.clone(), r.clone(), r];
    rs[0].clone().flat_map(move |x| {
        let rs = rs.clone();
        rs[1].clone().flat_map(move |y| {
            let rs = rs.clone();
            rs[2]
                .clone()
                .flat_map(move |z| rs[3].clone().map(move |t| Quat::halves([x, y, z, t])))
        })
    })
}

/// Searches for images of `a`, `g` in the quaternions with `a² = a − 1`,
/// `g² = −2`, `ag + ga = 2 + g`, such that `s ↦ 1`, `z ↦ 0` is a ring map
/// from the A′ ring onto the Hurwitz order.
pub fn hurwitz_check(m: &FiniteRing, bound: i64) -> Result<HurwitzWitness, KnotError> {
    let (quot, proj) = f8a_mod_j(m)?;
    if proj.rank() != 4 || proj.free_rank() != 4 {
        return Err(KnotError::Mismatch(format!(
            "A'/J has rank {}",
            quot.rank()
        )));
    }
    let one = Quat::from_int(1);
    let two = Quat::from_int(2);
    let a_cands: Vec<Quat> = candidates(bound).filter(|&a| a * a == a - one).collect();
    let g_cands: Vec<Quat> = candidates(bound)
        .filter(|&g| g * g == Quat::from_int(-2))
        .collect();
    let target = hurwitz_lattice();
    let hurwitz_covolume = det(target.basis()).abs();
    for &a in &a_cands {
        for &g in &g_cands {
            if a * g + g * a != two + g {
                continue;
            }
            let images = vec![one, one, Quat::zero(), a, g, a * g];
            let hom = (0..6).all(|i| {
                (0..6).all(|j| {
                    apply(&images, m.structure_constant(i, j)) == Some(images[i] * images[j])
                })
            });
            if !hom {
                continue;
            }
            // The image of the quotient basis.
            let Some(section) = proj
                .section_basis()
                .iter()
                .map(|rep| apply(&images, rep).and_then(|q| q.doubled()))
                .collect::<Option<Vec<Vector>>>()
            else {
                continue;
            };
            let lattice = MixedLattice::new(4, section.clone(), vec![])?;
            let covolume = det(&section).abs();
            if lattice == target && covolume == hurwitz_covolume {
                return Ok(HurwitzWitness {
                    a,
                    g,
                    images,
                    covolume,
                });
            }
        }
    }
    Err(KnotError::NoWitness(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units() {
        let i = Quat::halves([0, 2, 0, 0]);
        let j = Quat::halves([0, 0, 2, 0]);
        let k = Quat::halves([0, 0, 0, 2]);
        assert_eq!(i * j, k);
        assert_eq!(j * i, -k);
        assert_eq!(i * i, Quat::from_int(-1));
        assert_eq!(k.to_string(), "k");
        assert_eq!(
            Quat::halves([1, 1, 1, 1]).to_string(),
            "1/2 + 1/2i + 1/2j + 1/2k"
        );
    }

    #[test]
    fn quoted_candidates() {
        let a = Quat::halves([1, 1, 1, 1]);
        let g = -Quat::halves([0, 2, 2, 0]);
        assert_eq!(a * a, a - Quat::from_int(1));
        assert_eq!(g * g, Quat::from_int(-2));
        assert_eq!(a * g + g * a, Quat::from_int(2) + g);
    }

    #[test]
    fn lattice_covolume() {
        assert_eq!(det(hurwitz_lattice().basis()).abs(), Integer::from(8));
    }
}
