//! Empirical checks of the structural claims: the uncrossing inequality for
//! boundaries, the single-vertex deletion identity, and the two
//! maximal-edge-connectivity theorems on corpora.

use rand_core::RngCore;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;

use crate::connectivity::edge_connectivity;
use crate::constructions::random_uniform_hypergraph;
use crate::error::{Error, Result};
use crate::model::{Hypergraph, Vertex};
use crate::symmetry::is_vertex_transitive;

/// Largest vertex count for exhaustive pair enumeration.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 12;

/// The four boundary sizes in `|∂(X∪Y)| + |∂(X∩Y)| <= |∂(X)| + |∂(Y)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UncrossingValues {
    pub x: usize,
    pub y: usize,
    pub union: usize,
    pub intersection: usize,
}

impl UncrossingValues {
    pub fn holds(&self) -> bool {
        self.union + self.intersection <= self.x + self.y
    }
}

pub fn uncrossing_values(h: &Hypergraph, x: &[Vertex], y: &[Vertex]) -> UncrossingValues {
    let in_x = h.membership(x);
    let in_y = h.membership(y);
    let union: Vec<bool> = in_x.iter().zip(&in_y).map(|(a, b)| *a || *b).collect();
    let inter: Vec<bool> = in_x.iter().zip(&in_y).map(|(a, b)| *a && *b).collect();
    UncrossingValues {
        x: h.boundary_of_mask(&in_x).len(),
        y: h.boundary_of_mask(&in_y).len(),
        union: h.boundary_of_mask(&union).len(),
        intersection: h.boundary_of_mask(&inter).len(),
    }
}

/// A pair `(X, Y)` breaking the inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UncrossingViolation {
    pub instance: String,
    pub hypergraph: Hypergraph,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub values: UncrossingValues,
}

fn mask_vertices(mask: u64, n: usize) -> Vec<Vertex> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn boundary_table(h: &Hypergraph) -> Vec<u32> {
    let n = h.vertex_count();
    let edges: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    (0..1u64 << n)
        .map(|mask| {
            edges
                .iter()
                .filter(|&&e| e & mask != 0 && e & !mask != 0)
                .count() as u32
        })
        .collect()
}

/// A pair `(X, Y)` together with its four boundary sizes.
pub type CrossingPair = (Vec<Vertex>, Vec<Vertex>, UncrossingValues);

/// Checks every ordered pair of vertex subsets. Returns the number of pairs
/// checked and the first violation, if any.
pub fn exhaustive_uncrossing(h: &Hypergraph) -> Result<(u64, Option<CrossingPair>)> {
    let n = h.vertex_count();
    if n > EXHAUSTIVE_PAIR_LIMIT {
        return Err(Error::GuardExceeded {
            what: "exhaustive uncrossing check",
            n,
            limit: EXHAUSTIVE_PAIR_LIMIT,
        });
    }
    let table = boundary_table(h);
    let size = 1u64 << n;
    for x in 0..size {
        for y in 0..size {
            let values = UncrossingValues {
                x: table[x as usize] as usize,
                y: table[y as usize] as usize,
                union: table[(x | y) as usize] as usize,
                intersection: table[(x & y) as usize] as usize,
            };
            if !values.holds() {
                return Ok((
                    x * size + y + 1,
                    Some((mask_vertices(x, n), mask_vertices(y, n), values)),
                ));
            }
        }
    }
    Ok((size * size, None))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub exhaustive_instances: Vec<String>,
    pub exhaustive_pairs: u64,
    pub random_samples: usize,
    pub violation: Option<UncrossingViolation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// A seeded random uniform instance with `2 <= n <= nmax`, `k` in
/// `2..=min(4, n)` and up to `2n` edges, followed by two random subsets.
fn sample_case(
    rng: &mut SplitMix64,
    nmax: usize,
) -> Result<(Hypergraph, Vec<Vertex>, Vec<Vertex>)> {
    let n = 2 + (rng.next_u64() % (nmax as u64 - 1)) as usize;
    let k = 2 + (rng.next_u64() % (n.min(4) as u64 - 1)) as usize;
    let m = (rng.next_u64() % (2 * n as u64 + 1)) as usize;
    let h = random_uniform_hypergraph(n, k, m, rng.next_u64())?;
    let x = mask_vertices(rng.next_u64(), n);
    let y = mask_vertices(rng.next_u64(), n);
    Ok((h, x, y))
}

/// Exhaustive check on the uniform instances of `corpus` with at most 8
/// vertices, then `trials` random samples with at most `nmax` vertices.
pub fn verify_uncrossing(
    corpus: &[(String, Hypergraph)],
    trials: usize,
    seed: u64,
    nmax: usize,
) -> Result<LemmaReport> {
    if !(2..=64).contains(&nmax) {
        return Err(Error::InvalidParameter(format!(
            "nmax must lie in 2..=64, got {nmax}"
        )));
    }
    let mut report = LemmaReport {
        exhaustive_instances: Vec::new(),
        exhaustive_pairs: 0,
        random_samples: 0,
        violation: None,
    };
    for (name, h) in corpus {
        if h.vertex_count() > 8 || h.uniform_k().is_none() {
            continue;
        }
        let (pairs, found) = exhaustive_uncrossing(h)?;
        report.exhaustive_instances.push(name.clone());
        report.exhaustive_pairs += pairs;
        if let Some((x, y, values)) = found {
            report.violation = Some(UncrossingViolation {
                instance: name.clone(),
                hypergraph: h.clone(),
                x,
                y,
                values,
            });
            return Ok(report);
        }
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    for trial in 0..trials {
        let (h, x, y) = sample_case(&mut rng, nmax)?;
        report.random_samples += 1;
        let values = uncrossing_values(&h, &x, &y);
        if !values.holds() {
            report.violation = Some(UncrossingViolation {
                instance: format!("random sample {trial}"),
                hypergraph: h,
                x,
                y,
                values,
            });
            return Ok(report);
        }
    }
    Ok(report)
}

/// Both sides of `|∂(X - y)| = |∂(X)| + a_k(y)/(k-1) - b_1(y)/(k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeletionCheck {
    pub k: usize,
    pub before: usize,
    pub after: usize,
    pub a_k: usize,
    pub b_1: usize,
}

impl DeletionCheck {
    pub fn integral(&self) -> bool {
        self.a_k.is_multiple_of(self.k - 1) && self.b_1.is_multiple_of(self.k - 1)
    }

    pub fn holds(&self) -> bool {
        self.integral()
            && self.after + self.b_1 / (self.k - 1) == self.before + self.a_k / (self.k - 1)
    }
}

pub fn deletion_check(h: &Hypergraph, set: &[Vertex], y: Vertex) -> Result<DeletionCheck> {
    let profile = h.vertex_profile(set, y)?;
    let k = profile.k();
    let reduced: Vec<Vertex> = set.iter().copied().filter(|&v| v != y).collect();
    Ok(DeletionCheck {
        k,
        before: h.boundary_size(set),
        after: h.boundary_size(&reduced),
        a_k: profile.a(k),
        b_1: profile.b(1),
    })
}

/// `count` seeded pairs `(X, y)` with `X` a nonempty random subset and `y` in `X`.
pub fn random_deletion_cases(n: usize, count: usize, seed: u64) -> Vec<(Vec<Vertex>, Vertex)> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let set: Vec<Vertex> = (0..n).filter(|_| rng.next_u64() & 1 == 1).collect();
        if set.is_empty() {
            continue;
        }
        let y = set[(rng.next_u64() % set.len() as u64) as usize];
        out.push((set, y));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// 2-uniform, connected, vertex-transitive.
    Mader,
    /// Linear, `k`-uniform with `k >= 3`, connected, vertex-transitive.
    Main,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    pub uniform_k: Option<usize>,
    pub linear: bool,
    pub connected: bool,
    pub transitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoremVerdict {
    Holds,
    Fails,
    Skipped(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub instance: String,
    pub hypotheses: Hypotheses,
    pub kappa: Option<usize>,
    pub delta: usize,
    pub verdict: TheoremVerdict,
}

impl Theorem {
    /// The first unmet hypothesis, if any.
    pub fn gate(&self, hyp: &Hypotheses) -> Option<&'static str> {
        match self {
            Theorem::Mader if hyp.uniform_k != Some(2) => Some("not a graph (2-uniform)"),
            Theorem::Main if hyp.uniform_k.is_none() => Some("not uniform"),
            Theorem::Main if hyp.uniform_k < Some(3) => Some("uniform with k < 3"),
            Theorem::Main if !hyp.linear => Some("not linear"),
            _ if !hyp.connected => Some("disconnected"),
            _ if !hyp.transitive => Some("not vertex-transitive"),
            _ => None,
        }
    }
}

/// Evaluates one instance: hypotheses, `κ'`, `δ` and the verdict.
pub fn check_theorem(instance: &str, h: &Hypergraph, which: Theorem) -> TheoremRow {
    let hypotheses = Hypotheses {
        uniform_k: h.uniform_k(),
        linear: h.is_linear(),
        connected: h.is_connected(),
        transitive: is_vertex_transitive(h),
    };
    let delta = h.min_degree();
    let kappa = edge_connectivity(h).ok().map(|c| c.value);
    let verdict = match which.gate(&hypotheses) {
        Some(reason) => TheoremVerdict::Skipped(reason),
        None if kappa == Some(delta) => TheoremVerdict::Holds,
        None => TheoremVerdict::Fails,
    };
    TheoremRow {
        instance: instance.to_string(),
        hypotheses,
        kappa,
        delta,
        verdict,
    }
}
