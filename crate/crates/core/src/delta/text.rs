//! Plain-text format for finite Δ-groupoids.
//!
//! ```text
//! # comment
//! object A
//! morphism x A A
//! compose x x x
//! h x
//! j x x
//! ```
//!
//! Every composable pair needs a `compose` line. `h` lines may list several
//! morphisms; `j` lines give one value each.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::axioms::DeltaData;
use super::examples::DeltaModel;
use super::groupoid::FiniteGroupoid;
use super::DeltaError;

fn parse_err(line: usize, msg: impl Into<String>) -> DeltaError {
    DeltaError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_model(text: &str) -> Result<DeltaModel, DeltaError> {
    let mut objects: Vec<String> = Vec::new();
    let mut morphisms: Vec<(String, usize, usize)> = Vec::new();
    let mut products: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut h = Vec::new();
    let mut j: BTreeMap<usize, usize> = BTreeMap::new();

    let find_obj = |objs: &[String], name: &str, line| {
        objs.iter()
            .position(|o| o == name)
            .ok_or_else(|| parse_err(line, format!("unknown object `{name}`")))
    };
    let find_mor = |ms: &[(String, usize, usize)], name: &str, line| {
        ms.iter()
            .position(|m| m.0 == name)
            .ok_or_else(|| parse_err(line, format!("unknown morphism `{name}`")))
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words.as_slice() {
            ["object", name] => {
                if objects.iter().any(|o| o == name) {
                    return Err(parse_err(line, format!("duplicate object `{name}`")));
                }
                objects.push(name.to_string());
            }
            ["morphism", name, d, c] => {
                if morphisms.iter().any(|m| m.0 == *name) {
                    return Err(parse_err(line, format!("duplicate morphism `{name}`")));
                }
                let d = find_obj(&objects, d, line)?;
                let c = find_obj(&objects, c, line)?;
                morphisms.push((name.to_string(), d, c));
            }
            ["compose", x, y, p] => {
                let key = (
                    find_mor(&morphisms, x, line)?,
                    find_mor(&morphisms, y, line)?,
                );
                let p = find_mor(&morphisms, p, line)?;
                if products.insert(key, p).is_some() {
                    return Err(parse_err(line, format!("product {x} {y} given twice")));
                }
            }
            ["h", names @ ..] if !names.is_empty() => {
                for n in names {
                    h.push(find_mor(&morphisms, n, line)?);
                }
            }
            ["j", x, y] => {
                let x = find_mor(&morphisms, x, line)?;
                let y = find_mor(&morphisms, y, line)?;
                if j.insert(x, y).is_some() {
                    return Err(parse_err(line, "j value given twice"));
                }
            }
            _ => return Err(parse_err(line, format!("cannot parse `{content}`"))),
        }
    }
    let groupoid =
        FiniteGroupoid::from_fn(objects, morphisms, |x, y| products.get(&(x, y)).copied())?;
    if let Some(&x) = h.iter().find(|x| !j.contains_key(x)) {
        return Err(DeltaError::Malformed(format!(
            "j({}) is not given",
            groupoid.name(x)
        )));
    }
    let data = DeltaData::new(&groupoid, &h, |x| j[&x])?;
    Ok(DeltaModel { groupoid, data })
}

pub fn write_model(model: &DeltaModel) -> String {
    let g = &model.groupoid;
    let mut out = String::new();
    for a in 0..g.num_objects() {
        writeln!(out, "object {}", g.object_name(a)).expect("string write");
    }
    for x in 0..g.num_morphisms() {
        writeln!(
            out,
            "morphism {} {} {}",
            g.name(x),
            g.object_name(g.dom(x)),
            g.object_name(g.cod(x))
        )
        .expect("string write");
    }
    for x in 0..g.num_morphisms() {
        for y in g.composable_after(x) {
            let p = g.mul(x, y).expect("composable");
            writeln!(out, "compose {} {} {}", g.name(x), g.name(y), g.name(p))
                .expect("string write");
        }
    }
    let h = model.data.h();
    if !h.is_empty() {
        let names: Vec<&str> = h.iter().map(|&x| g.name(x)).collect();
        writeln!(out, "h {}", names.join(" ")).expect("string write");
    }
    for x in h {
        let jx = model.data.j(x).expect("j on H");
        writeln!(out, "j {} {}", g.name(x), g.name(jx)).expect("string write");
    }
    out
}
