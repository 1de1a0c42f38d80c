use std::collections::BTreeMap;

use super::presentation::DeltaPresentation;
use super::s3::S3;
use super::word::DeltaWord;
use crate::delta::DeltaModel;

fn apply(m: &DeltaModel, s: S3, x: usize) -> Option<usize> {
    let g = &m.groupoid;
    s.letters().chars().rev().try_fold(x, |x, c| match c {
        'i' => Some(g.inv(x)),
        'j' => m.data.j(x),
        _ => unreachable!("letters are i and j"),
    })
}

/// Value of a word in a finite model; `None` when a product is not
/// composable or `j` is applied outside `H`.
pub fn eval_word(m: &DeltaModel, w: &DeltaWord, assign: &BTreeMap<String, usize>) -> Option<usize> {
    match w {
        DeltaWord::Gen(g) => assign.get(g).copied(),
        DeltaWord::Act(s, inner) => apply(m, *s, eval_word(m, inner, assign)?),
        DeltaWord::Prod(fs) => {
            let mut it = fs.iter();
            let first = eval_word(m, it.next()?, assign)?;
            it.try_fold(first, |acc, f| {
                m.groupoid.mul(acc, eval_word(m, f, assign)?)
            })
        }
    }
}

/// Whether an assignment of generators to `H` satisfies every relation and
/// keeps every eliminated generator in `H`.
pub fn satisfies(m: &DeltaModel, p: &DeltaPresentation, assign: &BTreeMap<String, usize>) -> bool {
    p.relations.iter().all(|r| {
        let l = eval_word(m, &r.lhs, assign);
        l.is_some() && l == eval_word(m, &r.rhs, assign)
    }) && p
        .h_words
        .iter()
        .all(|(_, w)| eval_word(m, w, assign).is_some_and(|x| m.data.in_h(x)))
}

/// Number of Δ-groupoid morphisms from the presented groupoid into `m`, i.e.
/// assignments of the generators to `H` satisfying the presentation.
pub fn count_solutions(m: &DeltaModel, p: &DeltaPresentation) -> usize {
    let h = m.data.h();
    let n = p.generators.len();
    if h.is_empty() {
        return usize::from(n == 0 && satisfies(m, p, &BTreeMap::new()));
    }
    let mut idx = vec![0usize; n];
    let mut assign: BTreeMap<String, usize> =
        p.generators.iter().map(|g| (g.clone(), h[0])).collect();
    let mut count = 0;
    loop {
        for (g, &i) in p.generators.iter().zip(&idx) {
            *assign.get_mut(g).expect("generator") = h[i];
        }
        if satisfies(m, p, &assign) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            idx[pos] += 1;
            if idx[pos] < h.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
