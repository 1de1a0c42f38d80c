//! Acceptance criteria 1 to 9, one PASS/FAIL line each.
//!
//! Each criterion is evaluated exactly as stated. Three of them do not hold;
//! `KNOWN_FAILURES` pins the sub-checks that fail, and the process exits
//! nonzero only when the observed failures differ from that list.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use deltagpd::arith::MultiPoly;
use deltagpd::delta::{
    build_example, k_identity_violation, s3_orbits, DeltaModel, ExampleKind, FiniteGroup,
};
use deltagpd::knots::{
    build_f8a, build_f8q, f8a_mod_j, hurwitz_check, verify_alpha, verify_center, verify_f8_r,
    verify_f8q, verify_mod_eps_symmetric, verify_trace_generators, verify_trefoil_a,
    verify_trefoil_b,
};
use deltagpd::m2::{check_faithfulness, check_structure, check_symmetric, M2Elem, M2Ring};
use deltagpd::report::Report;

const KNOWN_FAILURES: &[(u8, &str)] = &[
    (2, "X^3 with |X| = 3 has 4 components"),
    (4, "trace generators: L(xi ba) = (1+d)eps"),
    (7, "alpha: 13-model / (eps, w - d) matches the A' ring"),
];

struct Criterion {
    id: u8,
    title: &'static str,
    bound: Option<Duration>,
    failures: Vec<String>,
    elapsed: Duration,
}

impl Criterion {
    fn run(
        id: u8,
        title: &'static str,
        bound: Option<Duration>,
        f: impl FnOnce(&mut Vec<String>),
    ) -> Self {
        let start = Instant::now();
        let mut failures = Vec::new();
        f(&mut failures);
        let elapsed = start.elapsed();
        if let Some(b) = bound {
            if elapsed > b {
                failures.push(format!("runtime {:.2?} exceeds {:.0?}", elapsed, b));
            }
        }
        Self {
            id,
            title,
            bound,
            failures,
            elapsed,
        }
    }

    fn line(&self) -> String {
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let bound = self
            .bound
            .map(|b| format!(" < {:.0?}", b))
            .unwrap_or_default();
        let mut s = format!(
            "{status} criterion {}: {} [{:.2?}{bound}]",
            self.id, self.title, self.elapsed
        );
        for f in &self.failures {
            s.push_str(&format!("\n    failed: {f}"));
        }
        s
    }
}

fn expect(failures: &mut Vec<String>, name: impl Into<String>, ok: bool) {
    if !ok {
        failures.push(name.into());
    }
}

fn report_failures(failures: &mut Vec<String>, r: &Report) {
    failures.extend(r.failures().map(|c| format!("{}: {}", r.suite, c.name)));
}

fn delta_models() -> Vec<(String, DeltaModel)> {
    let mut v = Vec::new();
    for n in 1..=4 {
        v.push((
            format!("X^3 |X|={n}"),
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
            format!("AR Z/{n}"),
            build_example(&ExampleKind::Ar(n)).unwrap(),
        ));
        v.push((
            format!("BR Z/{n}"),
            build_example(&ExampleKind::Br(n)).unwrap(),
        ));
    }
    let d3 = FiniteGroup::dihedral(3);
    let s = (0..d3.order())
        .find(|&e| e != d3.identity() && d3.mul(e, e) == d3.identity())
        .unwrap();
    v.push((
        "malnormal D3".into(),
        build_example(&ExampleKind::Malnormal {
            group: d3,
            sub: vec![s],
        })
        .unwrap(),
    ));
    v
}

fn criterion_1(f: &mut Vec<String>) {
    for (name, m) in delta_models() {
        let r = m.check();
        expect(f, format!("{name}: axioms"), r.all_pass());
        expect(
            f,
            format!("{name}: k(xy) = k(k(x)j(y))k(y)"),
            k_identity_violation(&m.groupoid, &m.data).is_none(),
        );
    }
}

fn criterion_2(f: &mut Vec<String>) {
    let m = build_example(&ExampleKind::Triple(3)).unwrap();
    let g = &m.groupoid;
    let comps = g.components();
    if comps.len() != 4 {
        f.push("X^3 with |X| = 3 has 4 components".into());
    }
    expect(
        f,
        "each component is coarse on 3 objects",
        comps.iter().all(|c| c.len() == 3 && g.is_coarse_on(c)),
    );
    expect(f, "|H| = 27", m.data.h().len() == 27);
    let distinct: BTreeSet<String> = (0..g.num_morphisms())
        .map(|x| g.name(x).to_string())
        .filter(|n| {
            let cs: Vec<char> = n.chars().filter(char::is_ascii_lowercase).collect();
            cs.len() == 3 && cs[0] != cs[1] && cs[1] != cs[2] && cs[0] != cs[2]
        })
        .collect();
    let orbits = s3_orbits(g, &m.data);
    let orbit: BTreeSet<String> = orbits
        .iter()
        .find(|o| o.iter().any(|&x| g.name(x) == "(a,b,c)"))
        .map(|o| o.iter().map(|&x| g.name(x).to_string()).collect())
        .unwrap_or_default();
    expect(
        f,
        "distinct-coordinate triples form one free S3 orbit of 6",
        distinct.len() == 6 && orbit == distinct,
    );
}

fn criterion_3(f: &mut Vec<String>) {
    for r in [verify_trefoil_a().unwrap(), verify_trefoil_b().unwrap()] {
        report_failures(f, &r);
        expect(f, format!("{}: non-empty", r.suite), !r.checks.is_empty());
    }
}

fn criterion_4(f: &mut Vec<String>) {
    report_failures(f, &verify_f8_r());
    // Only the four stated formulas; the sign-corrected variant is extra.
    let t = verify_trace_generators();
    let stated: Vec<_> = t
        .checks
        .iter()
        .filter(|c| !c.name.contains("sign-corrected"))
        .collect();
    expect(f, "four trace formulas present", stated.len() == 4);
    f.extend(
        stated
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", t.suite, c.name)),
    );
}

fn criterion_5(f: &mut Vec<String>) {
    let q = build_f8q().unwrap();
    report_failures(f, &verify_f8q(&q).unwrap());
}

fn criterion_6(f: &mut Vec<String>) {
    let q = build_f8q().unwrap();
    report_failures(f, &verify_center(&q).unwrap());
}

fn criterion_7(f: &mut Vec<String>) {
    let q = build_f8q().unwrap();
    let m = build_f8a().unwrap();
    report_failures(f, &verify_mod_eps_symmetric(&q).unwrap());
    let alpha = verify_alpha(&q, &m).unwrap();
    for c in alpha
        .checks
        .iter()
        .filter(|c| c.name == "13-model / (eps, w - d) matches the A' ring")
    {
        expect(f, format!("{}: {}", alpha.suite, c.name), c.passed);
    }
    let (_, proj) = f8a_mod_j(&m).unwrap();
    expect(
        f,
        "A'/J torsion-free of rank 4",
        proj.rank() == 4 && proj.free_rank() == 4,
    );
    expect(
        f,
        "Hurwitz witness with bound 2",
        hurwitz_check(&m, 2).is_ok(),
    );
}

fn criterion_8(f: &mut Vec<String>) {
    let r = M2Ring::generic();
    let z = MultiPoly::var("z");
    let mut samples: Vec<M2Elem> = (0..4).map(|i| r.basis(i)).collect();
    samples.push(r.a().scale(&z).add(&r.b()));
    report_failures(f, &check_symmetric(&r, &samples));
    report_failures(f, &check_structure(&r));
    report_failures(f, &check_faithfulness(&r, 3));
}

fn dg(args: &[&str]) -> Option<String> {
    let o = Command::new(env!("CARGO_BIN_EXE_dg"))
        .args(args)
        .output()
        .ok()?;
    o.status
        .success()
        .then(|| String::from_utf8_lossy(&o.stdout).into_owned())
}

fn relation_lines(out: &str) -> Vec<String> {
    out.lines()
        .skip_while(|l| *l != "relations:")
        .skip(1)
        .map(|l| l.trim().to_string())
        .collect()
}

fn criterion_9(f: &mut Vec<String>) {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/");
    let trefoil = format!("{data}trefoil.tri");
    let fig8 = format!("{data}fig8.tri");
    match dg(&["present", &trefoil, "--reduce"]) {
        Some(out) => expect(
            f,
            "trefoil reduced relations",
            relation_lines(&out) == ["y=(x*y)xy", "x=(x*y)*(xy)"],
        ),
        None => f.push("dg present failed".into()),
    }
    // The printed B′ presentation, in the output syntax.
    let printed: BTreeSet<&str> = [
        "(u_x v_y + v_x)^-1 u_x u_y = v_y v_x^-1 u_x",
        "(u_x v_y + v_x)^-1 = v_y v_x^-1 + u_y",
        "(u_y v_x + v_y)^-1 u_y u_x = v_x v_y^-1 u_y",
        "(u_y v_x + v_y)^-1 = v_x v_y^-1 + u_x",
    ]
    .into();
    match dg(&["rings", &fig8, "--functor", "b"]) {
        Some(out) => {
            let lines = relation_lines(&out);
            let got: BTreeSet<&str> = lines.iter().map(String::as_str).collect();
            expect(
                f,
                "figure-eight B' relations",
                lines.len() == 4 && got == printed,
            );
        }
        None => f.push("dg rings failed".into()),
    }
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion::run(1, "Delta-axiom suite", secs(5), criterion_1),
        Criterion::run(2, "truncated-tetrahedron model", None, criterion_2),
        Criterion::run(3, "trefoil", secs(1), criterion_3),
        Criterion::run(4, "figure-eight R", secs(1), criterion_4),
        Criterion::run(5, "13-model", secs(10), criterion_5),
        Criterion::run(6, "center", None, criterion_6),
        Criterion::run(7, "quotients", secs(10), criterion_7),
        Criterion::run(8, "formal M2 generic suite", secs(5), criterion_8),
        Criterion::run(9, "golden files", None, criterion_9),
    ];
    for c in &criteria {
        println!("{}", c.line());
    }
    let passed = criteria.iter().filter(|c| c.failures.is_empty()).count();
    println!(
        "acceptance: {passed} passed, {} failed",
        criteria.len() - passed
    );

    let observed: BTreeSet<(u8, String)> = criteria
        .iter()
        .flat_map(|c| c.failures.iter().map(move |f| (c.id, f.clone())))
        .collect();
    let known: BTreeSet<(u8, String)> = KNOWN_FAILURES
        .iter()
        .map(|(i, s)| (*i, s.to_string()))
        .collect();
    if observed == known {
        ExitCode::SUCCESS
    } else {
        for (i, s) in observed.difference(&known) {
            println!("unexpected failure in criterion {i}: {s}");
        }
        for (i, s) in known.difference(&observed) {
            println!("recorded failure no longer observed in criterion {i}: {s}");
        }
        ExitCode::FAILURE
    }
}
