use std::collections::BTreeSet;
use std::fmt;

use super::s3::S3;

/// A word in a Δ-groupoid presentation: generators, S3-images of words and
/// (composable) products.
///
/// Built through [`DeltaWord::act`] and [`DeltaWord::prod`], which keep the
/// tree canonical: no identity actions, no nested actions, no nested or
/// singleton products.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaWord {
    Gen(String),
    Act(S3, Box<DeltaWord>),
    Prod(Vec<DeltaWord>),
}

impl DeltaWord {
    pub fn gen(name: impl Into<String>) -> Self {
        DeltaWord::Gen(name.into())
    }

    pub fn act(s: S3, w: DeltaWord) -> Self {
        match (s, w) {
            (S3::E, w) => w,
            (s, DeltaWord::Act(t, inner)) => DeltaWord::act(s.then_apply(t), *inner),
            (s, w) => DeltaWord::Act(s, Box::new(w)),
        }
    }

    pub fn prod(factors: Vec<DeltaWord>) -> Self {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                DeltaWord::Prod(inner) => flat.extend(inner),
                f => flat.push(f),
            }
        }
        if flat.len() == 1 {
            flat.pop().expect("one factor")
        } else {
            DeltaWord::Prod(flat)
        }
    }

    /// `x * y = j(k(x) j(y))`.
    pub fn star(x: DeltaWord, y: DeltaWord) -> Self {
        DeltaWord::act(
            S3::J,
            DeltaWord::prod(vec![DeltaWord::act(S3::K, x), DeltaWord::act(S3::J, y)]),
        )
    }

    /// Recognizes `j(k(a) j(b))` and returns `(a, b)`.
    pub fn as_star(&self) -> Option<(DeltaWord, DeltaWord)> {
        let DeltaWord::Act(S3::J, inner) = self else {
            return None;
        };
        let DeltaWord::Prod(fs) = inner.as_ref() else {
            return None;
        };
        match fs.as_slice() {
            [f1 @ DeltaWord::Act(..), f2 @ DeltaWord::Act(..)] => Some((
                DeltaWord::act(S3::K, f1.clone()),
                DeltaWord::act(S3::J, f2.clone()),
            )),
            _ => None,
        }
    }

    pub fn is_compound(&self) -> bool {
        matches!(self, DeltaWord::Prod(_)) || self.as_star().is_some()
    }

    pub fn mentions(&self, g: &str) -> bool {
        match self {
            DeltaWord::Gen(h) => h == g,
            DeltaWord::Act(_, w) => w.mentions(g),
            DeltaWord::Prod(fs) => fs.iter().any(|f| f.mentions(g)),
        }
    }

    pub fn generators(&self, out: &mut BTreeSet<String>) {
        match self {
            DeltaWord::Gen(h) => {
                out.insert(h.clone());
            }
            DeltaWord::Act(_, w) => w.generators(out),
            DeltaWord::Prod(fs) => fs.iter().for_each(|f| f.generators(out)),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            DeltaWord::Gen(_) => 1,
            DeltaWord::Act(_, w) => 1 + w.size(),
            DeltaWord::Prod(fs) => 1 + fs.iter().map(DeltaWord::size).sum::<usize>(),
        }
    }

    /// Replaces every occurrence of `g` by `w`; an occurrence under `σ`
    /// becomes the formal image `σ(w)`.
    pub fn substitute(&self, g: &str, w: &DeltaWord) -> DeltaWord {
        match self {
            DeltaWord::Gen(h) if h == g => w.clone(),
            DeltaWord::Gen(_) => self.clone(),
            DeltaWord::Act(s, inner) => DeltaWord::act(*s, inner.substitute(g, w)),
            DeltaWord::Prod(fs) => DeltaWord::prod(fs.iter().map(|f| f.substitute(g, w)).collect()),
        }
    }

    fn long_labels(&self) -> bool {
        let mut gens = BTreeSet::new();
        self.generators(&mut gens);
        gens.iter().any(|g| g.chars().count() > 1)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, sep: &str) -> fmt::Result {
        if let Some((a, b)) = self.as_star() {
            a.write_operand(f, sep)?;
            f.write_str("*")?;
            return b.write_operand(f, sep);
        }
        match self {
            DeltaWord::Gen(g) => f.write_str(g),
            DeltaWord::Act(s, w) => {
                write!(f, "{s}(")?;
                w.write(f, sep)?;
                f.write_str(")")
            }
            DeltaWord::Prod(fs) => {
                for (n, x) in fs.iter().enumerate() {
                    if n > 0 {
                        f.write_str(sep)?;
                    }
                    x.write_operand(f, sep)?;
                }
                Ok(())
            }
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, sep: &str) -> fmt::Result {
        if self.is_compound() {
            f.write_str("(")?;
            self.write(f, sep)?;
            f.write_str(")")
        } else {
            self.write(f, sep)
        }
    }

    pub(crate) fn separator(words: &[&DeltaWord]) -> &'static str {
        if words.iter().any(|w| w.long_labels()) {
            "·"
        } else {
            ""
        }
    }

    pub(crate) fn display_with<'a>(&'a self, sep: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a DeltaWord, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write(f, self.1)
            }
        }
        D(self, sep)
    }
}

impl fmt::Display for DeltaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, DeltaWord::separator(&[self]))
    }
}
