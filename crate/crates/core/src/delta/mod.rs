//! Finite Δ-groupoids: groupoids with a generating subset `H` and an
//! involution `j` on it, the axiom checker and the standard example families.

mod axioms;
mod examples;
mod group;
mod groupoid;
mod text;

pub use axioms::{
    check_delta, k_identity_violation, object_dual, s3_orbits, star, Axiom, AxiomCheck,
    AxiomReport, DeltaData,
};
pub use examples::{build_example, DeltaModel, ExampleKind};
pub use group::FiniteGroup;
pub use groupoid::FiniteGroupoid;
pub use text::{parse_model, write_model};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("malformed Δ-data: {0}")]
    Malformed(String),
    #[error("({0}, {1}) is not H-composable")]
    NotHComposable(String, String),
    #[error("no element of H has domain {0}")]
    NoWitness(String),
    #[error("object dual of {0} depends on the witness")]
    InconsistentDual(String),
    #[error("subgroup is not malnormal: conjugation by {0} meets it")]
    NotMalnormal(String),
    #[error("bad size: {0}")]
    BadSize(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl DeltaModel {
    pub fn check(&self) -> AxiomReport {
        check_delta(&self.groupoid, &self.data)
    }

    pub fn morphism(&self, name: &str) -> usize {
        self.groupoid
            .morphism_by_name(name)
            .unwrap_or_else(|| panic!("no morphism named {name}"))
    }

    pub fn star(&self, x: &str, y: &str) -> Result<String, DeltaError> {
        let r = star(
            &self.groupoid,
            &self.data,
            self.morphism(x),
            self.morphism(y),
        )?;
        Ok(self.groupoid.name(r).to_string())
    }

    pub fn object_dual(&self, object: &str) -> Result<String, DeltaError> {
        let a = self
            .groupoid
            .object_by_name(object)
            .ok_or_else(|| DeltaError::NoWitness(object.into()))?;
        let d = object_dual(&self.groupoid, &self.data, a)?;
        Ok(self.groupoid.object_name(d).to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_models() -> Vec<(String, DeltaModel)> {
        let mut v = Vec::new();
        for n in 1..=4 {
            v.push((
                format!("X^3 n={n}"),
                build_example(&ExampleKind::Triple(n)).unwrap(),
            ));
        }
        for (name, g) in FiniteGroup::small_groups() {
            v.push((
                format!("coarse {name}"),
                build_example(&ExampleKind::Coarse(g)).unwrap(),
            ));
        }
        for n in 2..=9 {
            v.push((
                format!("AR {n}"),
                build_example(&ExampleKind::Ar(n)).unwrap(),
            ));
            v.push((
                format!("BR {n}"),
                build_example(&ExampleKind::Br(n)).unwrap(),
            ));
        }
        v
    }

    #[test]
    fn every_family_passes_with_k_identity() {
        for (name, m) in all_models() {
            let r = m.check();
            assert!(r.all_pass(), "{name}:\n{r}");
            assert_eq!(k_identity_violation(&m.groupoid, &m.data), None, "{name}");
        }
    }

    #[test]
    fn triples_with_identity_j() {
        let m = build_example(&ExampleKind::Triple(2)).unwrap();
        let h = m.data.h();
        let data = DeltaData::new(&m.groupoid, &h, |x| x).unwrap();
        let r = check_delta(&m.groupoid, &data);
        // k = iji collapses to the identity, so (iii) holds trivially while
        // the S3 relation and the product identity break.
        assert!(r.passes(Axiom::InverseClosed));
        assert!(r.passes(Axiom::Composable));
        assert!(!r.passes(Axiom::S3Action));
        assert!(!r.passes(Axiom::HComposable));
        assert_eq!(r.witness(Axiom::S3Action).unwrap(), ["(a,a,b)"]);
    }

    #[test]
    fn star_examples() {
        let x3 = build_example(&ExampleKind::Triple(4)).unwrap();
        assert_eq!(x3.star("(a,b,c)", "(a,c,d)").unwrap(), "(b,c,d)");
        assert!(x3.star("(a,b,c)", "(a,b,c)").is_err());

        let ar = build_example(&ExampleKind::Ar(5)).unwrap();
        assert_eq!(ar.star("2", "4").unwrap(), "2");

        let c = build_example(&ExampleKind::Coarse(FiniteGroup::cyclic(3))).unwrap();
        let e = c.groupoid.name(c.groupoid.id(0)).to_string();
        assert_eq!(c.star(&e, &e).unwrap(), e);
    }

    #[test]
    fn object_duals() {
        let x3 = build_example(&ExampleKind::Triple(3)).unwrap();
        assert_eq!(x3.object_dual("(a,b)").unwrap(), "(b,a)");
        assert_eq!(x3.object_dual("(c,c)").unwrap(), "(c,c)");
        let g = &x3.groupoid;
        for a in 0..g.num_objects() {
            let d = object_dual(g, &x3.data, a).unwrap();
            assert_eq!(object_dual(g, &x3.data, d).unwrap(), a);
        }

        let s3 = FiniteGroup::symmetric(3);
        let c = build_example(&ExampleKind::Coarse(s3.clone())).unwrap();
        for f in 0..6 {
            assert_eq!(c.object_dual(s3.name(f)).unwrap(), s3.name(s3.inv(f)));
        }
    }

    #[test]
    fn ar_and_br_small_cases() {
        let ar5 = build_example(&ExampleKind::Ar(5)).unwrap();
        let h: Vec<&str> = ar5.data.h().iter().map(|&x| ar5.groupoid.name(x)).collect();
        assert_eq!(h, ["2", "3", "4"]);
        assert_eq!(ar5.groupoid.num_morphisms(), 4);

        let ar2 = build_example(&ExampleKind::Ar(2)).unwrap();
        assert!(ar2.data.h().is_empty());
        assert_eq!(ar2.groupoid.num_morphisms(), 1);
        assert!(ar2.check().all_pass());

        let br3 = build_example(&ExampleKind::Br(3)).unwrap();
        assert_eq!(br3.data.h().len(), 4);
        let g = &br3.groupoid;
        let k12 = br3.data.k(g, br3.morphism("(1,2)")).unwrap();
        assert_eq!(g.name(k12), "(2,1)");
    }

    #[test]
    fn malnormal_models() {
        for n in [3usize, 5, 7] {
            let d = FiniteGroup::dihedral(n);
            let s = (0..d.order())
                .find(|&e| d.mul(e, e) == 0 && e != 0)
                .unwrap();
            let m = build_example(&ExampleKind::Malnormal {
                group: d,
                sub: vec![s],
            })
            .unwrap();
            assert!(m.check().all_pass(), "D{n}");
            assert_eq!(k_identity_violation(&m.groupoid, &m.data), None);
        }
        let a4 = FiniteGroup::alternating4();
        let c3 = (0..12).find(|&e| a4.name(e) == "(0 1 2)").unwrap();
        let m = build_example(&ExampleKind::Malnormal {
            group: a4,
            sub: vec![c3],
        })
        .unwrap();
        assert!(m.check().all_pass());
        assert_eq!(m.groupoid.num_objects(), 1);
        assert_eq!(m.groupoid.num_morphisms(), 3);

        let d4 = FiniteGroup::dihedral(4);
        let s = (0..8).find(|&e| d4.name(e) == "(1 3)").unwrap();
        let r = build_example(&ExampleKind::Malnormal {
            group: d4,
            sub: vec![s],
        });
        assert!(matches!(r, Err(DeltaError::NotMalnormal(_))));
    }

    #[test]
    fn truncated_tetrahedron() {
        let m = build_example(&ExampleKind::TruncatedTetrahedron).unwrap();
        let g = &m.groupoid;
        assert!(m.check().all_pass());
        let comps = g.components();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 3 && g.is_coarse_on(c)));
        assert_eq!(m.data.h().len(), 24);
        let orbits = s3_orbits(g, &m.data);
        assert_eq!(orbits.len(), 4);
        assert!(orbits.iter().all(|o| o.len() == 6));
    }

    #[test]
    fn triples_over_three_letters() {
        let m = build_example(&ExampleKind::Triple(3)).unwrap();
        let g = &m.groupoid;
        assert_eq!(g.num_objects(), 9);
        assert_eq!(g.num_morphisms(), 27);
        let comps = g.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 3 && g.is_coarse_on(c)));
        let orbits = s3_orbits(g, &m.data);
        let distinct: Vec<_> = orbits.iter().filter(|o| o.len() == 6).collect();
        assert_eq!(distinct.len(), 1);
        let names: Vec<&str> = distinct[0].iter().map(|&x| g.name(x)).collect();
        assert_eq!(
            names,
            ["(a,b,c)", "(a,c,b)", "(b,a,c)", "(b,c,a)", "(c,a,b)", "(c,b,a)"]
        );
    }

    #[test]
    fn malformed_j_is_an_error() {
        let m = build_example(&ExampleKind::Triple(2)).unwrap();
        let r = DeltaData::new(&m.groupoid, &[0], |_| 1);
        assert!(matches!(r, Err(DeltaError::Malformed(_))));
    }

    #[test]
    fn text_round_trip() {
        let m = build_example(&ExampleKind::Triple(2)).unwrap();
        let text = write_model(&m);
        let back = parse_model(&text).unwrap();
        assert_eq!(write_model(&back), text);
        assert!(back.check().all_pass());
        let err = parse_model("object A\nmorphism e A B\n").unwrap_err();
        assert_eq!(
            err,
            DeltaError::Parse {
                line: 2,
                msg: "unknown object `B`".into()
            }
        );
    }
}
