use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::s3::S3;
use super::word::DeltaWord;
use super::TriangulationError;

/// A labeled oriented truncated tetrahedron `(g1, g2, g3, g4)`, encoding
/// `g2 = g1 g3` and `g4 = g1 * g3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LotTet(pub [String; 4]);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub tets: Vec<LotTet>,
}

fn valid_label(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `tet L1 L2 L3 L4` lines; `#` starts a comment line.
///
/// Every label must occur exactly twice (a face gluing), or once when
/// `allow_free_faces` is set.
pub fn parse_diagram(text: &str, allow_free_faces: bool) -> Result<Diagram, TriangulationError> {
    let mut tets = Vec::new();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let labels = match words.as_slice() {
            ["tet", a, b, c, d] => [*a, *b, *c, *d],
            _ => {
                return Err(TriangulationError::Parse {
                    line,
                    msg: format!("expected `tet L1 L2 L3 L4`, got `{content}`"),
                })
            }
        };
        if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
            return Err(TriangulationError::Parse {
                line,
                msg: format!("invalid label `{bad}`"),
            });
        }
        for l in labels {
            *counts.entry(l.to_string()).or_default() += 1;
        }
        tets.push(LotTet(labels.map(String::from)));
    }
    for (label, &count) in &counts {
        if count > 2 || (count == 1 && !allow_free_faces) {
            return Err(TriangulationError::LabelCount {
                label: label.clone(),
                count,
            });
        }
    }
    Ok(Diagram { tets })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: DeltaWord,
    pub rhs: DeltaWord,
}

impl Relation {
    pub fn new(lhs: DeltaWord, rhs: DeltaWord) -> Self {
        Self { lhs, rhs }
    }

    fn mentions(&self, g: &str) -> bool {
        self.lhs.mentions(g) || self.rhs.mentions(g)
    }

    /// `W` if the relation reads `g = W` or `W = g` with `W` free of `g`.
    fn definition_of(&self, g: &str) -> Option<&DeltaWord> {
        let is_g = |w: &DeltaWord| matches!(w, DeltaWord::Gen(h) if h == g);
        if is_g(&self.lhs) && !self.rhs.mentions(g) {
            Some(&self.rhs)
        } else if is_g(&self.rhs) && !self.lhs.mentions(g) {
            Some(&self.lhs)
        } else {
            None
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = DeltaWord::separator(&[&self.lhs, &self.rhs]);
        write!(
            f,
            "{}={}",
            self.lhs.display_with(sep),
            self.rhs.display_with(sep)
        )
    }
}

/// Generators (all in `H`) and relations between Δ-words.
///
/// `h_words` records the defining words of eliminated generators: each must
/// still evaluate into `H`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DeltaPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    pub h_words: Vec<(String, DeltaWord)>,
}

/// One generator per label, two relations per tetrahedron.
pub fn delta_presentation(d: &Diagram) -> DeltaPresentation {
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    for LotTet(t) in &d.tets {
        for l in t {
            if !generators.contains(l) {
                generators.push(l.clone());
            }
        }
        let g = |i: usize| DeltaWord::gen(t[i].clone());
        relations.push(Relation::new(g(1), DeltaWord::prod(vec![g(0), g(2)])));
        relations.push(Relation::new(g(3), DeltaWord::star(g(0), g(2))));
    }
    DeltaPresentation {
        generators,
        relations,
        h_words: Vec::new(),
    }
}

impl DeltaPresentation {
    /// Removes `g` using its defining relation with the smallest right-hand
    /// side (first one on ties), substituting the formal images elsewhere.
    pub fn eliminate(&self, g: &str) -> Result<DeltaPresentation, TriangulationError> {
        if !self.generators.iter().any(|h| h == g) {
            return Err(TriangulationError::UnknownGenerator(g.into()));
        }
        let (pos, def) = self
            .relations
            .iter()
            .enumerate()
            .filter_map(|(n, r)| r.definition_of(g).map(|w| (n, w.clone())))
            .min_by_key(|(n, w)| (w.size(), *n))
            .ok_or_else(|| TriangulationError::NoDefiningRelation(g.into()))?;
        let relations = self
            .relations
            .iter()
            .enumerate()
            .filter(|&(n, _)| n != pos)
            .map(|(_, r)| {
                if r.mentions(g) {
                    Relation::new(r.lhs.substitute(g, &def), r.rhs.substitute(g, &def))
                } else {
                    r.clone()
                }
            })
            .collect();
        let mut h_words: Vec<(String, DeltaWord)> = self
            .h_words
            .iter()
            .map(|(h, w)| (h.clone(), w.substitute(g, &def)))
            .collect();
        h_words.push((g.to_string(), def));
        Ok(DeltaPresentation {
            generators: self
                .generators
                .iter()
                .filter(|h| *h != g)
                .cloned()
                .collect(),
            relations,
            h_words,
        })
    }

    /// Rewrites `L = σ(W)` with compound `W` as `σ^-1(L) = W`.
    pub fn unwrap(&self) -> DeltaPresentation {
        let relations = self
            .relations
            .iter()
            .map(|r| match &r.rhs {
                DeltaWord::Act(s, w) if matches!(w.as_ref(), DeltaWord::Prod(_)) => {
                    Relation::new(DeltaWord::act(s.inverse(), r.lhs.clone()), (**w).clone())
                }
                _ => r.clone(),
            })
            .collect();
        DeltaPresentation {
            relations,
            ..self.clone()
        }
    }

    pub fn mentioned_generators(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for r in &self.relations {
            r.lhs.generators(&mut out);
            r.rhs.generators(&mut out);
        }
        out
    }
}

/// Keeps the first tetrahedron's `g1` and `g3` and eliminates every other
/// label in lexicographic order.
pub fn reduce(d: &Diagram) -> Result<DeltaPresentation, TriangulationError> {
    let mut p = delta_presentation(d);
    let Some(LotTet(first)) = d.tets.first() else {
        return Ok(p);
    };
    let keep = [first[0].clone(), first[2].clone()];
    let mut others: Vec<String> = p
        .generators
        .iter()
        .filter(|g| !keep.contains(g))
        .cloned()
        .collect();
    others.sort();
    for g in others {
        p = p.eliminate(&g)?;
    }
    Ok(p)
}

impl fmt::Display for DeltaPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.generators.join(", "))?;
        writeln!(f, "relations:")?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

/// Atom `σ(g)` for a generator name.
pub fn atom(s: S3, g: &str) -> DeltaWord {
    DeltaWord::act(s, DeltaWord::gen(g))
}
