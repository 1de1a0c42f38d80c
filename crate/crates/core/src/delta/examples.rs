use std::collections::BTreeMap;

use super::axioms::DeltaData;
use super::group::FiniteGroup;
use super::groupoid::FiniteGroupoid;
use super::DeltaError;

/// A groupoid together with its Δ-structure.
#[derive(Debug, Clone)]
pub struct DeltaModel {
    pub groupoid: FiniteGroupoid,
    pub data: DeltaData,
}

#[derive(Debug, Clone)]
pub enum ExampleKind {
    /// Coarse groupoid `G^2` with `j(f,g) = (f^-1, f^-1 g)`.
    Coarse(FiniteGroup),
    /// `X^3` over an `n`-element set with `j(a,b,c) = (b,a,c)`.
    Triple(usize),
    /// `AR` for `R = Z/n`: units generated by `(1 - R*) ∩ R*`, `k(x) = 1 - x`.
    Ar(u64),
    /// `BR` for `R = Z/n`: inside `R ⋊ R*`, generated by `R* x R*`, `k(x,y) = (y,x)`.
    Br(u64),
    /// Groupoid of the free action of a malnormal subgroup on its
    /// non-trivial cosets; `sub` lists generators of the subgroup.
    Malnormal { group: FiniteGroup, sub: Vec<usize> },
    /// The short-edge groupoid of a truncated tetrahedron: four triangular
    /// faces, each a coarse groupoid on three corners.
    TruncatedTetrahedron,
}

fn letter(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

pub fn build_example(kind: &ExampleKind) -> Result<DeltaModel, DeltaError> {
    match kind {
        ExampleKind::Coarse(group) => coarse(group),
        ExampleKind::Triple(n) => triples(*n, |_, _, _| true),
        ExampleKind::Ar(n) => ar(*n),
        ExampleKind::Br(n) => br(*n),
        ExampleKind::Malnormal { group, sub } => malnormal(group, sub),
        ExampleKind::TruncatedTetrahedron => triples(4, |a, b, c| b != a && c != a),
    }
}

fn coarse(group: &FiniteGroup) -> Result<DeltaModel, DeltaError> {
    let n = group.order();
    let objects = (0..n).map(|f| group.name(f).to_string()).collect();
    let morphisms = (0..n * n)
        .map(|m| {
            let (f, g) = (m / n, m % n);
            (format!("({},{})", group.name(f), group.name(g)), f, g)
        })
        .collect();
    let groupoid = FiniteGroupoid::from_fn(objects, morphisms, |x, y| Some((x / n) * n + y % n))?;
    let h: Vec<usize> = (0..n * n).collect();
    let data = DeltaData::new(&groupoid, &h, |m| {
        let (f, g) = (m / n, m % n);
        let fi = group.inv(f);
        fi * n + group.mul(fi, g)
    })?;
    Ok(DeltaModel { groupoid, data })
}

/// `X^3` restricted to the triples accepted by `keep`; `H` is the set of
/// triples with pairwise distinct entries when restricted, all triples otherwise.
fn triples(n: usize, keep: impl Fn(usize, usize, usize) -> bool) -> Result<DeltaModel, DeltaError> {
    if n == 0 {
        return Err(DeltaError::BadSize("X^3 needs a non-empty set".into()));
    }
    let full = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| keep(a, b, c))));
    let mut objects = Vec::new();
    let mut obj_index = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if keep(a, b, b) {
                obj_index.insert((a, b), objects.len());
                objects.push(format!("({},{})", letter(a), letter(b)));
            }
        }
    }
    let mut triples = Vec::new();
    let mut index = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if keep(a, b, c) {
                    index.insert((a, b, c), triples.len());
                    triples.push((a, b, c));
                }
            }
        }
    }
    let morphisms = triples
        .iter()
        .map(|&(a, b, c)| {
            (
                format!("({},{},{})", letter(a), letter(b), letter(c)),
                obj_index[&(a, b)],
                obj_index[&(a, c)],
            )
        })
        .collect();
    let groupoid = FiniteGroupoid::from_fn(objects, morphisms, |x, y| {
        let (a, b, _) = triples[x];
        let (_, _, d) = triples[y];
        index.get(&(a, b, d)).copied()
    })?;
    let h: Vec<usize> = (0..triples.len())
        .filter(|&x| {
            let (a, b, c) = triples[x];
            full || (a != b && b != c && a != c)
        })
        .collect();
    let data = DeltaData::new(&groupoid, &h, |x| {
        let (a, b, c) = triples[x];
        index[&(b, a, c)]
    })?;
    Ok(DeltaModel { groupoid, data })
}

struct Zn(u64);

impl Zn {
    fn units(&self) -> Vec<u64> {
        (0..self.0).filter(|&x| self.inv(x).is_some()).collect()
    }

    fn inv(&self, x: u64) -> Option<u64> {
        (0..self.0).find(|&y| (x * y) % self.0 == 1 % self.0)
    }

    fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.0 - y % self.0) % self.0
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        (x * y) % self.0
    }
}

/// Closure of `gens` under a group product, starting from `one`.
fn generated<T: Ord + Clone>(one: T, gens: &[T], mul: impl Fn(&T, &T) -> T) -> Vec<T> {
    let mut set = std::collections::BTreeSet::from([one]);
    let mut frontier: Vec<T> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let p = mul(&x, g);
            if set.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    set.into_iter().collect()
}

fn ar(n: u64) -> Result<DeltaModel, DeltaError> {
    if n < 2 {
        return Err(DeltaError::BadSize("AR needs n >= 2".into()));
    }
    let r = Zn(n);
    let units = r.units();
    let h: Vec<u64> = units
        .iter()
        .copied()
        .filter(|&x| r.inv(r.sub(1, x)).is_some())
        .collect();
    let elems = generated(1u64, &h, |a, b| r.mul(*a, *b));
    let pos: BTreeMap<u64, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let groupoid = FiniteGroupoid::from_fn(
        vec!["*".into()],
        elems.iter().map(|e| (e.to_string(), 0, 0)).collect(),
        |x, y| pos.get(&r.mul(elems[x], elems[y])).copied(),
    )?;
    let h_idx: Vec<usize> = h.iter().map(|x| pos[x]).collect();
    // j = iki: x -> (1 - x^-1)^-1
    let data = DeltaData::new(&groupoid, &h_idx, |x| {
        let xi = r.inv(elems[x]).expect("unit");
        let t = r.inv(r.sub(1, xi)).expect("H is closed under j");
        pos[&t]
    })?;
    Ok(DeltaModel { groupoid, data })
}

fn br(n: u64) -> Result<DeltaModel, DeltaError> {
    if n < 2 {
        return Err(DeltaError::BadSize("BR needs n >= 2".into()));
    }
    let r = Zn(n);
    let units = r.units();
    let h: Vec<(u64, u64)> = units
        .iter()
        .flat_map(|&x| units.iter().map(move |&y| (x, y)))
        .collect();
    // (x,y)(u,v) = (x + yu, yv)
    let mul = |a: &(u64, u64), b: &(u64, u64)| ((a.0 + r.mul(a.1, b.0)) % n, r.mul(a.1, b.1));
    let elems = generated((0u64, 1u64), &h, mul);
    let pos: BTreeMap<(u64, u64), usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let groupoid = FiniteGroupoid::from_fn(
        vec!["*".into()],
        elems
            .iter()
            .map(|(x, y)| (format!("({x},{y})"), 0, 0))
            .collect(),
        |a, b| pos.get(&mul(&elems[a], &elems[b])).copied(),
    )?;
    let h_idx: Vec<usize> = h.iter().map(|e| pos[e]).collect();
    // j = iki: (x,y) -> (x^-1, -x^-1 y)
    let data = DeltaData::new(&groupoid, &h_idx, |a| {
        let (x, y) = elems[a];
        let xi = r.inv(x).expect("unit");
        pos[&(xi, r.sub(0, r.mul(xi, y)))]
    })?;
    Ok(DeltaModel { groupoid, data })
}

fn malnormal(group: &FiniteGroup, sub_gens: &[usize]) -> Result<DeltaModel, DeltaError> {
    let sub = group.subgroup(sub_gens);
    if let Some(a) = group.malnormal_violation(&sub) {
        return Err(DeltaError::NotMalnormal(group.name(a).into()));
    }
    let order = group.order();
    // Left cosets aB, keyed by their smallest element.
    let coset_of = |a: usize| {
        sub.iter()
            .map(|&b| group.mul(a, b))
            .min()
            .expect("non-empty")
    };
    let mut coset_ids: BTreeMap<usize, usize> = BTreeMap::new();
    for a in 0..order {
        if !sub.contains(&a) {
            let key = coset_of(a);
            let next = coset_ids.len();
            coset_ids.entry(key).or_insert(next);
        }
    }
    let cosets: Vec<usize> = {
        let mut v = vec![0; coset_ids.len()];
        for (&k, &i) in &coset_ids {
            v[i] = k;
        }
        v
    };
    let coset_index = |a: usize| coset_ids[&coset_of(a)];
    let act = |b: usize, x: usize| coset_index(group.mul(b, cosets[x]));
    let canon_pair = |x: usize, y: usize| {
        sub.iter()
            .map(|&b| (act(b, x), act(b, y)))
            .min()
            .expect("non-empty")
    };
    let canon_obj = |x: usize| sub.iter().map(|&b| act(b, x)).min().expect("non-empty");

    let mut objects_key = Vec::new();
    for x in 0..cosets.len() {
        let o = canon_obj(x);
        if !objects_key.contains(&o) {
            objects_key.push(o);
        }
    }
    objects_key.sort_unstable();
    let obj_of = |x: usize| objects_key.binary_search(&canon_obj(x)).expect("object");

    let mut morph_key = Vec::new();
    for x in 0..cosets.len() {
        for y in 0..cosets.len() {
            let p = canon_pair(x, y);
            if !morph_key.contains(&p) {
                morph_key.push(p);
            }
        }
    }
    morph_key.sort_unstable();
    let morph_of = |x: usize, y: usize| {
        morph_key
            .binary_search(&canon_pair(x, y))
            .expect("morphism")
    };

    let objects = objects_key.iter().map(|o| format!("B.c{o}")).collect();
    let morphisms = morph_key
        .iter()
        .map(|&(x, y)| (format!("B(c{x},c{y})"), obj_of(x), obj_of(y)))
        .collect();
    let groupoid = FiniteGroupoid::from_fn(objects, morphisms, |m1, m2| {
        let (x, y) = morph_key[m1];
        let (y2, z) = morph_key[m2];
        let b = sub.iter().copied().find(|&b| act(b, y2) == y)?;
        Some(morph_of(x, act(b, z)))
    })?;

    let h: Vec<usize> = (0..groupoid.num_morphisms())
        .filter(|&m| !groupoid.is_identity(m))
        .collect();
    let mut inconsistent = None;
    // j: B(aB, a'B) -> B(a^-1 B, a^-1 a' B), checked over every representative.
    let data = DeltaData::new(&groupoid, &h, |m| {
        let (x, y) = morph_key[m];
        let mut image = None;
        for &b in &sub {
            for &c in &sub {
                let a = group.mul(group.mul(b, cosets[x]), c);
                let a2 = group.mul(b, cosets[y]);
                let ai = group.inv(a);
                let img = morph_of(coset_index(ai), coset_index(group.mul(ai, a2)));
                match image {
                    None => image = Some(img),
                    Some(prev) if prev != img => inconsistent = Some(m),
                    _ => {}
                }
            }
        }
        image.expect("non-empty subgroup")
    })?;
    if let Some(m) = inconsistent {
        return Err(DeltaError::Malformed(format!(
            "j is not well defined at {}",
            groupoid.name(m)
        )));
    }
    Ok(DeltaModel { groupoid, data })
}
