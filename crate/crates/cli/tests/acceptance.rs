//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hyperconn::constructions::{
    affine_doubled_family, affine_hypergraph, circulant_graph, cyclic_difference_hypergraph,
    glued_complete_family, random_uniform_hypergraph, standard_corpus, Family,
};
use hyperconn::verify::{deletion_check, random_deletion_cases};
use hyperconn::*;

fn hyperconn(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperconn"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.code().is_some(), "terminated by signal");
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

fn write_family(dir: &Path, family: &Family) -> String {
    let path = dir.join(format!("{}.hg", family.slug()));
    fs::write(&path, family.render().unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn machine_fields(text: &str) -> BTreeMap<String, String> {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn analyze_machine(dir: &Path, family: &Family) -> (BTreeMap<String, String>, Duration) {
    let path = write_family(dir, family);
    let start = Instant::now();
    let (out, code) = hyperconn(&[
        "analyze",
        &path,
        "--connectivity",
        "--transitivity",
        "--machine",
    ]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0);
    (machine_fields(&out), elapsed)
}

fn expect_fields(fields: &BTreeMap<String, String>, expected: &[(&str, &str)]) {
    for (k, v) in expected {
        assert_eq!(fields.get(*k).map(String::as_str), Some(*v), "field {k}");
    }
}

fn corpus() -> Vec<(String, Hypergraph)> {
    standard_corpus()
        .into_iter()
        .map(|f| (f.slug(), f.build().unwrap()))
        .collect()
}

fn ac1_doubled_k3(dir: &Path) -> String {
    let (fields, elapsed) = analyze_machine(dir, &Family::AffineDoubled { k: 3 });
    expect_fields(
        &fields,
        &[
            ("n", "18"),
            ("m", "21"),
            ("kappa", "3"),
            ("delta", "4"),
            ("Delta", "4"),
            ("linear", "true"),
            ("uniform_k", "none"),
            ("transitive", "true"),
            ("maximal", "false"),
        ],
    );
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    format!("kappa=3 delta=Delta=4 transitive, {elapsed:.2?}")
}

fn ac2_doubled_k5() -> String {
    let h = affine_doubled_family(5).unwrap();
    assert_eq!(h.vertex_count(), 50);
    let start = Instant::now();
    let transitive = is_vertex_transitive(&h);
    let elapsed = start.elapsed();
    assert!(transitive);
    assert!(
        elapsed < Duration::from_secs(60),
        "transitivity took {elapsed:?}"
    );
    assert_eq!(edge_connectivity(&h).unwrap().value, 5);
    assert_eq!(h.degree_extremes(), (6, 6));
    assert_eq!(h.uniform_k(), None);
    assert!(h.is_linear());
    assert!(!is_maximally_edge_connected(&h).unwrap());
    format!("kappa=5 Delta=6 transitive in {elapsed:.2?}")
}

fn ac3_glued(dir: &Path) -> String {
    let start = Instant::now();
    let family = Family::GluedComplete {
        n: 5,
        k: 3,
        permissive: false,
    };
    let (fields, _) = analyze_machine(dir, &family);
    expect_fields(
        &fields,
        &[
            ("Delta", "7"),
            ("uniform_k", "3"),
            ("linear", "false"),
            ("transitive", "true"),
            ("maximal", "false"),
        ],
    );
    let kappa: usize = fields["kappa"].parse().unwrap();
    assert!(kappa <= 5);
    let (oracle, code) = hyperconn(&["oracle", &write_family(dir, &family)]);
    assert_eq!(code, 0);
    assert_eq!(machine_fields(&oracle)["kappa"], kappa.to_string());
    let h = glued_complete_family(5, 3).unwrap();
    assert_eq!(edge_connectivity_oracle(&h).unwrap().value, kappa);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    format!("kappa={kappa} (<= 5, oracle agrees) Delta=7, {elapsed:.2?}")
}

fn ac4_main_theorem(dir: &Path) -> String {
    let corpus_dir = dir.join("main");
    fs::create_dir_all(&corpus_dir).unwrap();
    for f in [
        Family::Affine { k: 3 },
        Family::Affine { k: 5 },
        Family::CyclicDifference {
            n: 13,
            base: vec![0, 1, 4],
        },
        Family::CyclicDifference {
            n: 21,
            base: vec![0, 3, 7],
        },
    ] {
        write_family(&corpus_dir, &f);
    }
    let start = Instant::now();
    let (out, code) = hyperconn(&[
        "verify",
        "theorem",
        "--corpus",
        corpus_dir.to_str().unwrap(),
        "--which",
        "main",
    ]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("summary: 4 pass, 0 fail, 0 skipped"), "{out}");
    assert!(elapsed < Duration::from_secs(60));
    for h in [
        affine_hypergraph(3).unwrap(),
        affine_hypergraph(5).unwrap(),
        cyclic_difference_hypergraph(13, &[0, 1, 4]).unwrap(),
        cyclic_difference_hypergraph(21, &[0, 3, 7]).unwrap(),
    ] {
        assert_eq!(edge_connectivity(&h).unwrap().value, h.min_degree());
    }
    format!("4 gated instances, kappa = delta on all, {elapsed:.2?}")
}

fn ac5_mader(dir: &Path) -> String {
    let corpus_dir = dir.join("mader");
    fs::create_dir_all(&corpus_dir).unwrap();
    let cases: [(usize, &[usize]); 5] = [
        (6, &[1]),
        (7, &[1, 2]),
        (8, &[1, 2]),
        (9, &[1, 3]),
        (10, &[1, 2, 5]),
    ];
    for (n, offsets) in cases {
        write_family(
            &corpus_dir,
            &Family::Circulant {
                n,
                offsets: offsets.to_vec(),
            },
        );
        let h = circulant_graph(n, offsets).unwrap();
        if h.is_connected() {
            assert_eq!(
                edge_connectivity(&h).unwrap().value,
                h.min_degree(),
                "C({n}, {offsets:?})"
            );
        }
    }
    let (out, code) = hyperconn(&[
        "verify",
        "theorem",
        "--corpus",
        corpus_dir.to_str().unwrap(),
        "--which",
        "mader",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("summary: 5 pass, 0 fail, 0 skipped"), "{out}");
    "5 circulants, kappa = delta on all".to_string()
}

fn ac6_lemma() -> String {
    let start = Instant::now();
    let (out, code) = hyperconn(&[
        "verify", "lemma", "--trials", "1000", "--seed", "7", "--nmax", "10",
    ]);
    let elapsed = start.elapsed();
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("violations: 0"));
    assert!(out.contains("random: 1000 samples"));
    let expected = corpus()
        .iter()
        .filter(|(_, h)| h.vertex_count() <= 8 && h.uniform_k().is_some())
        .count();
    assert!(
        out.contains(&format!("exhaustive: {expected} instances")),
        "{out}"
    );
    assert!(elapsed < Duration::from_secs(120));
    format!("{expected} exhaustive instances + 1000 samples, 0 violations, {elapsed:.2?}")
}

fn ac7_oracle_equivalence() -> String {
    let mut checked = 0;
    for (name, h) in corpus() {
        if h.vertex_count() <= 12 {
            assert_eq!(
                edge_connectivity(&h).unwrap().value,
                edge_connectivity_oracle(&h).unwrap().value,
                "{name}"
            );
            checked += 1;
        }
    }
    for seed in 0..200u64 {
        let n = 2 + (seed % 9) as usize;
        let k = (2 + (seed / 9 % 3) as usize).min(n);
        let m = (seed % 13) as usize + n / 2;
        let h = random_uniform_hypergraph(n, k, m, seed).unwrap();
        assert_eq!(
            edge_connectivity(&h).unwrap().value,
            edge_connectivity_oracle(&h).unwrap().value,
            "random n={n} k={k} m={m} seed={seed}"
        );
    }
    format!("{checked} corpus instances + 200 random, all equal")
}

fn ac8_deletion_identity() -> String {
    for (k, seed) in [(3, 11u64), (5, 13)] {
        let h = affine_hypergraph(k).unwrap();
        for (set, y) in random_deletion_cases(h.vertex_count(), 100, seed) {
            let check = deletion_check(&h, &set, y).unwrap();
            assert!(
                check.integral(),
                "non-integral fraction for X={set:?}, y={y}"
            );
            assert!(
                check.holds(),
                "identity fails for X={set:?}, y={y}: {check:?}"
            );
        }
    }
    "200 (X, y) pairs on affine k=3,5, 0 violations".to_string()
}

fn ac9_atoms() -> String {
    let mut instances = 0;
    let mut universal = 0;
    for (name, h) in corpus() {
        let n = h.vertex_count();
        if n > 12 || !h.is_connected() || !is_vertex_transitive(&h) {
            continue;
        }
        instances += 1;
        let atoms = edge_atoms(&h).unwrap();
        let autos = enumerate_automorphisms(&h, 1_000_000).unwrap();
        let blocks: Vec<&CutResult> = atoms
            .iter()
            .filter(|a| {
                is_block_of_imprimitivity(&h, &a.side, &autos)
                    .unwrap()
                    .is_block()
            })
            .collect();
        let atom = blocks
            .first()
            .unwrap_or_else(|| panic!("{name}: no minimum atom is a block"));
        assert!(2 * atom.side.len() <= n, "{name}");
        if blocks.len() == atoms.len() {
            universal += 1;
        }
        if h.uniform_k().is_some() && h.is_linear() {
            let first = h.vertex_profile(&atom.side, atom.side[0]).unwrap();
            for &x in &atom.side {
                assert_eq!(
                    h.vertex_profile(&atom.side, x).unwrap(),
                    first,
                    "{name}: profile varies"
                );
            }
        }
    }
    format!("{instances} instances; every minimum atom a block on {universal}/{instances}")
}

fn machine_run(dir: &Path) -> String {
    let mut out = String::new();
    for family in standard_corpus() {
        let path = write_family(dir, &family);
        out.push_str(
            &hyperconn(&[
                "analyze",
                &path,
                "--connectivity",
                "--transitivity",
                "--machine",
            ])
            .0,
        );
        if family.build().unwrap().vertex_count() <= 20 {
            out.push_str(&hyperconn(&["oracle", &path]).0);
        }
    }
    out.push_str(
        &hyperconn(&[
            "verify", "lemma", "--trials", "300", "--seed", "99", "--nmax", "9",
        ])
        .0,
    );
    out.push_str(
        &hyperconn(&[
            "verify",
            "theorem",
            "--corpus",
            dir.to_str().unwrap(),
            "--which",
            "main",
        ])
        .0,
    );
    out
}

fn ac10_determinism(dir: &Path) -> String {
    let a = dir.join("run-a");
    let b = dir.join("run-b");
    fs::create_dir_all(&a).unwrap();
    fs::create_dir_all(&b).unwrap();
    let first = machine_run(&a);
    let second = machine_run(&b);
    assert_eq!(first, second);
    format!("{} bytes identical across two runs", first.len())
}

type Criterion<'a> = Box<dyn Fn() -> String + 'a>;

fn main() -> ExitCode {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "AC1 doubled affine family k=3",
            Box::new(|| ac1_doubled_k3(d)),
        ),
        ("AC2 doubled affine family k=5", Box::new(ac2_doubled_k5)),
        (
            "AC3 glued complete family n=5 k=3",
            Box::new(|| ac3_glued(d)),
        ),
        (
            "AC4 linear uniform corpus",
            Box::new(|| ac4_main_theorem(d)),
        ),
        ("AC5 circulant corpus", Box::new(|| ac5_mader(d))),
        ("AC6 uncrossing inequality", Box::new(ac6_lemma)),
        (
            "AC7 flow vs exhaustive oracle",
            Box::new(ac7_oracle_equivalence),
        ),
        ("AC8 deletion identity", Box::new(ac8_deletion_identity)),
        ("AC9 edge atoms are blocks", Box::new(ac9_atoms)),
        ("AC10 determinism", Box::new(|| ac10_determinism(d))),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in &criteria {
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL {name}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
