use std::collections::{BTreeMap, VecDeque};

use super::group::FiniteGroup;
use super::DeltaError;

/// A finite groupoid with an explicit composition table.
///
/// `(x, y)` is composable iff `cod(x) == dom(y)`, and the product is
/// written `xy` (first `x`, then `y`).
#[derive(Debug, Clone)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    names: Vec<String>,
    dom: Vec<usize>,
    cod: Vec<usize>,
    compose: Vec<Option<usize>>,
    inv: Vec<usize>,
    id: Vec<usize>,
}

impl FiniteGroupoid {
    /// Builds and validates a groupoid. `product(x, y)` is only consulted on
    /// composable pairs.
    pub fn from_fn(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        mut product: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self, DeltaError> {
        let bad = |m: String| Err(DeltaError::InvalidGroupoid(m));
        let n = morphisms.len();
        let nobj = objects.len();
        let mut names = Vec::with_capacity(n);
        let mut dom = Vec::with_capacity(n);
        let mut cod = Vec::with_capacity(n);
        for (name, d, c) in morphisms {
            if d >= nobj || c >= nobj {
                return bad(format!("morphism `{name}` has an unknown endpoint"));
            }
            names.push(name);
            dom.push(d);
            cod.push(c);
        }
        let mut compose = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                if cod[x] != dom[y] {
                    continue;
                }
                let Some(p) = product(x, y) else {
                    return bad(format!("product {} {} is undefined", names[x], names[y]));
                };
                if p >= n || dom[p] != dom[x] || cod[p] != cod[y] {
                    return bad(format!(
                        "product {} {} has the wrong endpoints",
                        names[x], names[y]
                    ));
                }
                compose[x * n + y] = Some(p);
            }
        }
        let mut g = Self {
            objects,
            names,
            dom,
            cod,
            compose,
            inv: Vec::new(),
            id: Vec::new(),
        };
        for x in 0..n {
            for y in g.composable_after(x) {
                let xy = g.mul(x, y).expect("composable");
                for z in g.composable_after(y) {
                    let yz = g.mul(y, z).expect("composable");
                    if g.mul(xy, z) != g.mul(x, yz) {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            g.names[x], g.names[y], g.names[z]
                        ));
                    }
                }
            }
        }
        for a in 0..nobj {
            let found = (0..n).find(|&e| {
                g.dom[e] == a
                    && g.cod[e] == a
                    && (0..n).all(|x| {
                        (g.dom[x] != a || g.mul(e, x) == Some(x))
                            && (g.cod[x] != a || g.mul(x, e) == Some(x))
                    })
            });
            match found {
                Some(e) => g.id.push(e),
                None => return bad(format!("object `{}` has no identity", g.objects[a])),
            }
        }
        for x in 0..n {
            let found = (0..n).find(|&y| {
                g.mul(x, y) == Some(g.id[g.dom[x]]) && g.mul(y, x) == Some(g.id[g.cod[x]])
            });
            match found {
                Some(y) => g.inv.push(y),
                None => return bad(format!("morphism `{}` has no inverse", g.names[x])),
            }
        }
        Ok(g)
    }

    /// A group as a one-object groupoid, restricted to the listed elements
    /// (which must form a subgroup).
    pub fn from_group(group: &FiniteGroup, elements: &[usize]) -> Result<Self, DeltaError> {
        let pos: BTreeMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let morphisms = elements
            .iter()
            .map(|&e| (group.name(e).to_string(), 0, 0))
            .collect();
        Self::from_fn(vec!["*".into()], morphisms, |x, y| {
            pos.get(&group.mul(elements[x], elements[y])).copied()
        })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.names.len()
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn object_by_name(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|n| n == name)
    }

    pub fn dom(&self, x: usize) -> usize {
        self.dom[x]
    }

    pub fn cod(&self, x: usize) -> usize {
        self.cod[x]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn id(&self, a: usize) -> usize {
        self.id[a]
    }

    pub fn is_identity(&self, x: usize) -> bool {
        self.id[self.dom[x]] == x
    }

    pub fn composable(&self, x: usize, y: usize) -> bool {
        self.cod[x] == self.dom[y]
    }

    pub fn mul(&self, x: usize, y: usize) -> Option<usize> {
        self.compose[x * self.num_morphisms() + y]
    }

    /// All `y` with `(x, y)` composable, in index order.
    pub fn composable_after(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let c = self.cod[x];
        (0..self.num_morphisms()).filter(move |&y| self.dom[y] == c)
    }

    /// Morphisms reachable from `gens` and the identities by products and
    /// inverses.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let n = self.num_morphisms();
        let mut inside = vec![false; n];
        let mut queue = VecDeque::new();
        for &x in gens.iter().chain(&self.id) {
            if !inside[x] {
                inside[x] = true;
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            let mut fresh = vec![self.inv[x]];
            for y in 0..n {
                if inside[y] {
                    fresh.extend(self.mul(x, y));
                    fresh.extend(self.mul(y, x));
                }
            }
            for p in fresh {
                if !inside[p] {
                    inside[p] = true;
                    queue.push_back(p);
                }
            }
        }
        inside
    }

    /// Connected components as sorted lists of objects.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let nobj = self.num_objects();
        let mut parent: Vec<usize> = (0..nobj).collect();
        fn find(p: &mut [usize], a: usize) -> usize {
            let mut r = a;
            while p[r] != r {
                r = p[r];
            }
            p[a] = r;
            r
        }
        for x in 0..self.num_morphisms() {
            let (a, b) = (
                find(&mut parent, self.dom[x]),
                find(&mut parent, self.cod[x]),
            );
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for a in 0..nobj {
            let r = find(&mut parent, a);
            comps.entry(r).or_default().push(a);
        }
        comps.into_values().collect()
    }

    /// Whether the full subgroupoid on `objects` is coarse: exactly one
    /// morphism between every ordered pair.
    pub fn is_coarse_on(&self, objects: &[usize]) -> bool {
        objects.iter().all(|&a| {
            objects.iter().all(|&b| {
                (0..self.num_morphisms())
                    .filter(|&x| self.dom[x] == a && self.cod[x] == b)
                    .count()
                    == 1
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_as_groupoid() {
        let s3 = FiniteGroup::symmetric(3);
        let all: Vec<usize> = (0..6).collect();
        let g = FiniteGroupoid::from_group(&s3, &all).unwrap();
        assert_eq!(g.num_objects(), 1);
        assert_eq!(g.id(0), 0);
        for x in 0..6 {
            assert_eq!(g.mul(x, g.inv(x)), Some(0));
        }
        assert_eq!(g.components(), vec![vec![0]]);
        assert!(g.generated_by(&[1, 2]).iter().all(|&b| b));
        assert_eq!(g.generated_by(&[]).iter().filter(|&&b| b).count(), 1);
    }

    #[test]
    fn rejects_non_associative_tables() {
        // Z/3 with a broken product 1*1 = 0.
        let r = FiniteGroupoid::from_fn(
            vec!["*".into()],
            (0..3).map(|i| (i.to_string(), 0, 0)).collect(),
            |x, y| Some(if (x, y) == (1, 1) { 0 } else { (x + y) % 3 }),
        );
        assert!(r.is_err());
    }

    #[test]
    fn rejects_missing_products() {
        let r = FiniteGroupoid::from_fn(vec!["A".into()], vec![("e".into(), 0, 0)], |_, _| None);
        assert!(matches!(r, Err(DeltaError::InvalidGroupoid(_))));
    }
}
