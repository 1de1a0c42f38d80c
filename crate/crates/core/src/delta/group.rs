use std::collections::{BTreeMap, VecDeque};

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

impl FiniteGroup {
    /// Subgroup of `Sym(n)` generated by the given permutations; elements are
    /// listed in breadth-first order from the identity.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Self {
        let id: Vec<usize> = (0..degree).collect();
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { (0..degree).map(|x| q[p[x]]).collect() };
        let mut index = BTreeMap::new();
        let mut elems = vec![id.clone()];
        index.insert(id, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[e], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| index[&compose(&elems[a], &elems[b])])
                    .collect()
            })
            .collect();
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == 0).expect("group inverse"))
            .collect();
        let names = elems.iter().map(|p| cycle_name(p)).collect();
        Self {
            names,
            table,
            inverse,
        }
    }

    pub fn trivial() -> Self {
        Self::from_permutations(1, &[])
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let rot: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        Self::from_permutations(n, &[rot])
    }

    /// The dihedral group of order `2n` acting on an `n`-gon, `n >= 3`.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|x| (n - x) % n).collect();
        Self::from_permutations(n, &[rot, refl])
    }

    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return Self::trivial();
        }
        let swap: Vec<usize> = (0..n).map(|x| if x < 2 { 1 - x } else { x }).collect();
        let cyc: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        Self::from_permutations(n, &[swap, cyc])
    }

    pub fn alternating4() -> Self {
        Self::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    pub fn klein4() -> Self {
        Self::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
    }

    /// One representative of every isomorphism class of groups of order at most 6.
    pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
        vec![
            ("C1", Self::trivial()),
            ("C2", Self::cyclic(2)),
            ("C3", Self::cyclic(3)),
            ("C4", Self::cyclic(4)),
            ("C2xC2", Self::klein4()),
            ("C5", Self::cyclic(5)),
            ("C6", Self::cyclic(6)),
            ("S3", Self::symmetric(3)),
        ]
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// Subgroup generated by `gens`, as a sorted list of elements.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(e, g);
                if !inside[p] {
                    inside[p] = true;
                    queue.push_back(p);
                }
            }
        }
        (0..self.order()).filter(|&e| inside[e]).collect()
    }

    /// `aBa^-1 ∩ B = {1}` for every `a` outside `B`; returns the first
    /// offending `a` otherwise.
    pub fn malnormal_violation(&self, sub: &[usize]) -> Option<usize> {
        let in_sub = |x: usize| sub.contains(&x);
        (0..self.order()).filter(|&a| !in_sub(a)).find(|&a| {
            sub.iter()
                .any(|&b| b != 0 && in_sub(self.mul(self.mul(a, b), self.inv(a))))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group(g: &FiniteGroup) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn orders() {
        let orders: Vec<usize> = FiniteGroup::small_groups()
            .iter()
            .map(|(_, g)| g.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6]);
        assert_eq!(FiniteGroup::dihedral(5).order(), 10);
        assert_eq!(FiniteGroup::alternating4().order(), 12);
        for (_, g) in FiniteGroup::small_groups() {
            assert_group(&g);
        }
    }

    #[test]
    fn names_use_cycle_notation() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.name(0), "()");
        assert!((0..6).any(|e| s3.name(e) == "(0 1 2)"));
    }

    #[test]
    fn malnormality() {
        let d5 = FiniteGroup::dihedral(5);
        let s = (0..d5.order())
            .find(|&e| d5.name(e) == "(1 4)(2 3)")
            .unwrap();
        let b = d5.subgroup(&[s]);
        assert_eq!(b.len(), 2);
        assert_eq!(d5.malnormal_violation(&b), None);

        let d4 = FiniteGroup::dihedral(4);
        let s = (0..d4.order()).find(|&e| d4.name(e) == "(1 3)").unwrap();
        assert!(d4.malnormal_violation(&d4.subgroup(&[s])).is_some());
    }
}
