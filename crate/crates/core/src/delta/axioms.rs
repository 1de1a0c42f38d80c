use std::fmt;

use super::groupoid::FiniteGroupoid;
use super::DeltaError;

/// The subset `H` and the involution `j` on it.
#[derive(Debug, Clone)]
pub struct DeltaData {
    in_h: Vec<bool>,
    j: Vec<Option<usize>>,
}

impl DeltaData {
    /// `j_of(x)` is consulted for every `x` in `h`.
    pub fn new(
        g: &FiniteGroupoid,
        h: &[usize],
        mut j_of: impl FnMut(usize) -> usize,
    ) -> Result<Self, DeltaError> {
        let n = g.num_morphisms();
        let mut in_h = vec![false; n];
        for &x in h {
            if x >= n {
                return Err(DeltaError::Malformed(format!("H element {x} out of range")));
            }
            in_h[x] = true;
        }
        let mut j = vec![None; n];
        for x in (0..n).filter(|&x| in_h[x]) {
            let y = j_of(x);
            if y >= n || !in_h[y] {
                return Err(DeltaError::Malformed(format!(
                    "j({}) is not in H",
                    g.name(x)
                )));
            }
            j[x] = Some(y);
        }
        Ok(Self { in_h, j })
    }

    pub fn in_h(&self, x: usize) -> bool {
        self.in_h[x]
    }

    pub fn h(&self) -> Vec<usize> {
        (0..self.in_h.len()).filter(|&x| self.in_h[x]).collect()
    }

    pub fn j(&self, x: usize) -> Option<usize> {
        self.j[x]
    }

    /// `k = iji`, defined when `i(x)` lies in `H`.
    pub fn k(&self, g: &FiniteGroupoid, x: usize) -> Option<usize> {
        self.j(g.inv(x)).map(|y| g.inv(y))
    }

    pub fn h_composable(&self, g: &FiniteGroupoid, x: usize, y: usize) -> bool {
        self.in_h(x) && self.in_h(y) && g.mul(x, y).is_some_and(|p| self.in_h(p))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    InverseClosed,
    S3Action,
    Composable,
    HComposable,
    Generates,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::InverseClosed,
        Axiom::S3Action,
        Axiom::Composable,
        Axiom::HComposable,
        Axiom::Generates,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::InverseClosed => "(i) i(H) = H",
            Axiom::S3Action => "(ii) j^2 = id, iji = jij",
            Axiom::Composable => "(iii) (k(x), j(y)) composable",
            Axiom::HComposable => "(iv) j(xy) = j(x) j(k(x) j(y))",
            Axiom::Generates => "H generates G",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// First counterexample in index order, as morphism names.
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn passes(&self, axiom: Axiom) -> bool {
        self.witness(axiom).is_none()
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&[String]> {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .and_then(|c| c.witness.as_deref())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "PASS {}", c.axiom.label())?,
                Some(w) => writeln!(f, "FAIL {} witness: {}", c.axiom.label(), w.join(", "))?,
            }
        }
        Ok(())
    }
}

fn first_pair(
    g: &FiniteGroupoid,
    d: &DeltaData,
    mut bad: impl FnMut(usize, usize) -> bool,
) -> Option<Vec<String>> {
    let h = d.h();
    for &x in &h {
        for y in g.composable_after(x).filter(|&y| d.in_h(y)) {
            if bad(x, y) {
                return Some(vec![g.name(x).into(), g.name(y).into()]);
            }
        }
    }
    None
}

/// Exhaustive check of the four axioms and of generation.
pub fn check_delta(g: &FiniteGroupoid, d: &DeltaData) -> AxiomReport {
    let h = d.h();
    let single = |x: usize| Some(vec![g.name(x).to_string()]);

    let inverse_closed = h
        .iter()
        .find(|&&x| !d.in_h(g.inv(x)))
        .and_then(|&x| single(x));

    let s3 = h
        .iter()
        .find(|&&x| {
            let jj = d.j(x).and_then(|y| d.j(y));
            let iji = d.k(g, x);
            let jij = d.j(x).and_then(|y| d.j(g.inv(y)));
            jj != Some(x) || iji.is_none() || iji != jij
        })
        .and_then(|&x| single(x));

    let composable = first_pair(g, d, |x, y| match (d.k(g, x), d.j(y)) {
        (Some(kx), Some(jy)) => !g.composable(kx, jy),
        _ => true,
    });

    let h_composable = first_pair(g, d, |x, y| {
        if !d.h_composable(g, x, y) {
            return false;
        }
        let (Some(kx), Some(jy), Some(jx)) = (d.k(g, x), d.j(y), d.j(x)) else {
            return true;
        };
        if !d.h_composable(g, kx, jy) {
            return true;
        }
        let lhs = g.mul(x, y).and_then(|p| d.j(p));
        let rhs = g
            .mul(kx, jy)
            .and_then(|p| d.j(p))
            .and_then(|t| g.mul(jx, t));
        lhs.is_none() || lhs != rhs
    });

    let reach = g.generated_by(&h);
    let generates = (0..g.num_morphisms()).find(|&x| !reach[x]).and_then(single);

    AxiomReport {
        checks: vec![
            AxiomCheck {
                axiom: Axiom::InverseClosed,
                witness: inverse_closed,
            },
            AxiomCheck {
                axiom: Axiom::S3Action,
                witness: s3,
            },
            AxiomCheck {
                axiom: Axiom::Composable,
                witness: composable,
            },
            AxiomCheck {
                axiom: Axiom::HComposable,
                witness: h_composable,
            },
            AxiomCheck {
                axiom: Axiom::Generates,
                witness: generates,
            },
        ],
    }
}

/// First H-composable pair violating `k(xy) = k(k(x)j(y)) k(y)`.
pub fn k_identity_violation(g: &FiniteGroupoid, d: &DeltaData) -> Option<(usize, usize)> {
    for x in d.h() {
        for y in g.composable_after(x) {
            if !d.h_composable(g, x, y) {
                continue;
            }
            let lhs = g.mul(x, y).and_then(|p| d.k(g, p));
            let rhs = (|| {
                let t = g.mul(d.k(g, x)?, d.j(y)?)?;
                g.mul(d.k(g, t)?, d.k(g, y)?)
            })();
            if lhs.is_none() || lhs != rhs {
                return Some((x, y));
            }
        }
    }
    None
}

/// `x * y = j(k(x) j(y))` for an H-composable pair.
pub fn star(g: &FiniteGroupoid, d: &DeltaData, x: usize, y: usize) -> Result<usize, DeltaError> {
    let not_hc = || DeltaError::NotHComposable(g.name(x).into(), g.name(y).into());
    if !d.h_composable(g, x, y) {
        return Err(not_hc());
    }
    let kx = d.k(g, x).ok_or_else(not_hc)?;
    let jy = d.j(y).ok_or_else(not_hc)?;
    let t = g.mul(kx, jy).ok_or_else(not_hc)?;
    d.j(t).ok_or_else(not_hc)
}

/// The canonical involution on objects, `A* = dom(j(x))` for any `x` in `H`
/// with `dom(x) = A`; every such `x` is checked to agree.
pub fn object_dual(g: &FiniteGroupoid, d: &DeltaData, a: usize) -> Result<usize, DeltaError> {
    let mut dual = None;
    for x in d.h().into_iter().filter(|&x| g.dom(x) == a) {
        let b = g.dom(d.j(x).expect("j defined on H"));
        match dual {
            None => dual = Some(b),
            Some(prev) if prev != b => {
                return Err(DeltaError::InconsistentDual(g.object_name(a).into()));
            }
            _ => {}
        }
    }
    dual.ok_or_else(|| DeltaError::NoWitness(g.object_name(a).into()))
}

/// Orbits of the action of `<i, j>` on `H`, each sorted, in order of their
/// smallest element.
pub fn s3_orbits(g: &FiniteGroupoid, d: &DeltaData) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.num_morphisms()];
    let mut orbits = Vec::new();
    for x in d.h() {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut idx = 0;
        while idx < orbit.len() {
            let y = orbit[idx];
            idx += 1;
            let next = [Some(g.inv(y)), d.j(y)];
            for z in next.into_iter().flatten() {
                if d.in_h(z) && !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}
