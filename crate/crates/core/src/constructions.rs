//! Deterministic generators for the instance families.
//!
//! Every generator returns edges in lexicographic order without duplicates,
//! so the serialized form is canonical. Labels are 0-based; constructions
//! that are naturally described with 1-based labels document the offset.

use std::fmt;

use rand_core::RngCore;
use rand_xoshiro::rand_core::SeedableRng;
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::model::{Hypergraph, Vertex};

/// The `k + 1` parallel classes of the affine plane of prime order `k`.
///
/// Points are the cells of a `k x k` array read row by row, so the point in
/// row `r` and column `c` (both 0-based) is `r * k + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelClasses {
    k: usize,
    classes: Vec<Vec<Vec<Vertex>>>,
}

impl ParallelClasses {
    pub fn order(&self) -> usize {
        self.k
    }

    /// Class `i` for `i = 0..=k`; class 0 holds the rows of the array.
    pub fn class(&self, i: usize) -> &[Vec<Vertex>] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<Vec<Vertex>>] {
        &self.classes
    }

    /// Line `j` (1-based, `1..=k`) of class `i` (`1..=k`).
    pub fn line(&self, i: usize, j: usize) -> &[Vertex] {
        &self.classes[i][j - 1]
    }
}

pub fn is_odd_prime(k: usize) -> bool {
    if k < 3 || k.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut current: Vec<Vertex> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - k + i {
                break;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// The complete `k`-uniform hypergraph on `n` vertices.
pub fn complete_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!(
            "complete uniform needs 2 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Hypergraph::from_generated(n, k_subsets(n, k))
}

/// `k` disjoint copies of the complete `k`-uniform hypergraph on `n` vertices,
/// joined by the `n` edges that collect each point's `k` copies.
///
/// Copy `i` (1-based) of point `v` (1-based) is vertex `(i - 1) * n + (v - 1)`.
/// Requires `k >= 3` and `n >= k + 2`.
pub fn glued_complete_family(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 3 || n < k + 2 {
        return Err(Error::InvalidParameter(format!(
            "glued complete family needs k >= 3 and n >= k + 2, got n = {n}, k = {k}"
        )));
    }
    build_glued(n, k)
}

/// As [`glued_complete_family`] but accepts `n >= k + 1`.
pub fn glued_complete_family_permissive(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 3 || n < k + 1 {
        return Err(Error::InvalidParameter(format!(
            "glued complete family needs k >= 3 and n >= k + 1, got n = {n}, k = {k}"
        )));
    }
    build_glued(n, k)
}

fn build_glued(n: usize, k: usize) -> Result<Hypergraph> {
    let block = k_subsets(n, k);
    let mut edges = Vec::with_capacity(k * block.len() + n);
    for copy in 0..k {
        let offset = copy * n;
        edges.extend(
            block
                .iter()
                .map(|e| e.iter().map(|&v| v + offset).collect::<Vec<_>>()),
        );
    }
    for v in 0..n {
        edges.push((0..k).map(|copy| copy * n + v).collect());
    }
    Hypergraph::from_generated(n * k, edges)
}

/// Parallel classes of the affine plane of odd prime order `k`.
///
/// Class 0 is the set of rows. For `i` and `j` in `1..=k`, line `j` of class
/// `i` takes from row `t` the column `((i - 1) t + j - 1) mod k`.
pub fn affine_plane_classes(k: usize) -> Result<ParallelClasses> {
    if !is_odd_prime(k) {
        return Err(Error::NotOddPrime { k });
    }
    let mut classes = Vec::with_capacity(k + 1);
    classes.push((0..k).map(|r| (r * k..(r + 1) * k).collect()).collect());
    for i in 1..=k {
        let class = (1..=k)
            .map(|j| {
                (0..k)
                    .map(|t| t * k + ((i - 1) * t + j - 1) % k)
                    .collect::<Vec<_>>()
            })
            .collect();
        classes.push(class);
    }
    Ok(ParallelClasses { k, classes })
}

/// The affine plane of order `k` with the row class left out: `k^2` points,
/// `k^2` lines of size `k`, every point on `k` lines.
pub fn affine_hypergraph(k: usize) -> Result<Hypergraph> {
    let planes = affine_plane_classes(k)?;
    let edges = planes.classes[1..].iter().flatten().cloned().collect();
    Hypergraph::from_generated(k * k, edges)
}

/// Two copies of [`affine_hypergraph`] (the second shifted by `k^2`) plus, for
/// each row of the array, one edge of size `2k` holding the row and its copy.
pub fn affine_doubled_family(k: usize) -> Result<Hypergraph> {
    let planes = affine_plane_classes(k)?;
    let shift = k * k;
    let mut edges = Vec::with_capacity(2 * k * k + k);
    for line in planes.classes[1..].iter().flatten() {
        edges.push(line.clone());
        edges.push(line.iter().map(|&v| v + shift).collect());
    }
    for row in &planes.classes[0] {
        edges.push(
            row.iter()
                .copied()
                .chain(row.iter().map(|&v| v + shift))
                .collect(),
        );
    }
    Hypergraph::from_generated(2 * shift, edges)
}

/// All cyclic translates `base + t (mod n)`, deduplicated.
pub fn cyclic_difference_hypergraph(n: usize, base: &[Vertex]) -> Result<Hypergraph> {
    let mut block = base.to_vec();
    block.sort_unstable();
    block.dedup();
    if block.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "base block needs at least 2 distinct elements, got {base:?}"
        )));
    }
    if let Some(&b) = block.iter().find(|&&b| b >= n) {
        return Err(Error::InvalidParameter(format!(
            "base element {b} outside 0..{n}"
        )));
    }
    let edges = (0..n)
        .map(|t| block.iter().map(|&b| (b + t) % n).collect())
        .collect();
    Hypergraph::from_generated(n, edges)
}

/// Whether the nonzero differences `a - b (mod n)` over ordered pairs of
/// distinct base elements are pairwise distinct.
pub fn has_distinct_differences(n: usize, base: &[Vertex]) -> bool {
    let mut seen = vec![false; n];
    for (i, &a) in base.iter().enumerate() {
        for (j, &b) in base.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = (a + n - b % n) % n;
            if d == 0 || seen[d] {
                return false;
            }
            seen[d] = true;
        }
    }
    true
}

/// Circulant graph on `Z_n`: `v ~ v + d` for every `d` in `offsets`.
pub fn circulant_graph(n: usize, offsets: &[usize]) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "circulant graph needs n >= 2, got {n}"
        )));
    }
    if let Some(&d) = offsets.iter().find(|&&d| d == 0 || d > n / 2) {
        return Err(Error::InvalidParameter(format!(
            "offset {d} outside 1..={}",
            n / 2
        )));
    }
    let mut edges = Vec::with_capacity(n * offsets.len());
    for v in 0..n {
        for &d in offsets {
            edges.push(vec![v, (v + d) % n]);
        }
    }
    Hypergraph::from_generated(n, edges)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The offsets generate `Z_n` exactly when their gcd with `n` is 1.
pub fn circulant_is_connected(n: usize, offsets: &[usize]) -> bool {
    offsets.iter().fold(n, |g, &d| gcd(g, d)) == 1
}

/// `m` edges drawn independently and uniformly from the `k`-subsets of `0..n`.
///
/// The stream is SplitMix64 seeded with `seed`. Each edge is a partial
/// Fisher-Yates shuffle of `0..n`: for `i = 0..k`, swap position `i` with
/// `i + (next_u64() mod (n - i))`, then sort the first `k` entries.
pub fn random_uniform_hypergraph(n: usize, k: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!(
            "random uniform needs 2 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut pool: Vec<Vertex> = (0..n).collect();
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        for (i, v) in pool.iter_mut().enumerate() {
            *v = i;
        }
        for i in 0..k {
            let j = i + (rng.next_u64() % (n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut edge = pool[..k].to_vec();
        edge.sort_unstable();
        edges.push(edge);
    }
    Hypergraph::new(n, edges)
}

/// A named, parameterised generator. Used by the CLI and the built-in corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete {
        n: usize,
        k: usize,
    },
    GluedComplete {
        n: usize,
        k: usize,
        permissive: bool,
    },
    Affine {
        k: usize,
    },
    AffineDoubled {
        k: usize,
    },
    CyclicDifference {
        n: usize,
        base: Vec<usize>,
    },
    Circulant {
        n: usize,
        offsets: Vec<usize>,
    },
    Random {
        n: usize,
        k: usize,
        m: usize,
        seed: u64,
    },
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "complete",
        "glued-complete",
        "affine",
        "affine-doubled",
        "cyclic-difference",
        "circulant",
        "random",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::GluedComplete { .. } => "glued-complete",
            Family::Affine { .. } => "affine",
            Family::AffineDoubled { .. } => "affine-doubled",
            Family::CyclicDifference { .. } => "cyclic-difference",
            Family::Circulant { .. } => "circulant",
            Family::Random { .. } => "random",
        }
    }

    pub fn params(&self) -> String {
        match self {
            Family::Complete { n, k } => format!("n={n},k={k}"),
            Family::GluedComplete { n, k, permissive } => {
                if *permissive {
                    format!("n={n},k={k},permissive")
                } else {
                    format!("n={n},k={k}")
                }
            }
            Family::Affine { k } | Family::AffineDoubled { k } => format!("k={k}"),
            Family::CyclicDifference { n, base } => format!("n={n},base={}", join(base)),
            Family::Circulant { n, offsets } => format!("n={n},offsets={}", join(offsets)),
            Family::Random { n, k, m, seed } => format!("n={n},k={k},m={m},seed={seed}"),
        }
    }

    /// File-name friendly identifier, e.g. `circulant-n8-o1.2`.
    pub fn slug(&self) -> String {
        let tail = match self {
            Family::Complete { n, k } => format!("n{n}-k{k}"),
            Family::GluedComplete { n, k, .. } => format!("n{n}-k{k}"),
            Family::Affine { k } | Family::AffineDoubled { k } => format!("k{k}"),
            Family::CyclicDifference { n, base } => {
                format!("n{n}-b{}", join(base).replace(',', "."))
            }
            Family::Circulant { n, offsets } => {
                format!("n{n}-o{}", join(offsets).replace(',', "."))
            }
            Family::Random { n, k, m, seed } => format!("n{n}-k{k}-m{m}-s{seed}"),
        };
        format!("{}-{tail}", self.name())
    }

    /// How vertex labels relate to the 1-based description of the family.
    pub fn label_note(&self) -> Option<String> {
        match self {
            Family::GluedComplete { n, .. } => Some(format!(
                "vertex (i-1)*{n}+(v-1) is point v (1..{n}) of copy i"
            )),
            Family::Affine { k } => Some(format!(
                "vertex p-1 is array cell p = (row-1)*{k}+col of the {k}x{k} array"
            )),
            Family::AffineDoubled { k } => Some(format!(
                "vertex p-1 is array cell p of the first copy, vertex {}+p-1 is cell p of the second",
                k * k
            )),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            Family::Complete { n, k } => complete_uniform(*n, *k),
            Family::GluedComplete { n, k, permissive } => {
                if *permissive {
                    glued_complete_family_permissive(*n, *k)
                } else {
                    glued_complete_family(*n, *k)
                }
            }
            Family::Affine { k } => affine_hypergraph(*k),
            Family::AffineDoubled { k } => affine_doubled_family(*k),
            Family::CyclicDifference { n, base } => cyclic_difference_hypergraph(*n, base),
            Family::Circulant { n, offsets } => circulant_graph(*n, offsets),
            Family::Random { n, k, m, seed } => random_uniform_hypergraph(*n, *k, *m, *seed),
        }
    }

    /// Canonical serialization preceded by provenance comments.
    pub fn render(&self) -> Result<String> {
        let h = self.build()?;
        let mut out = format!("# family={} params={}\n", self.name(), self.params());
        if let Some(note) = self.label_note() {
            out.push_str(&format!("# labels: {note}\n"));
        }
        out.push_str(&h.serialize());
        Ok(out)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.params())
    }
}

/// The built-in corpus: every family at small parameters plus the
/// Theorem-style positive instances and a few negative controls.
pub fn standard_corpus() -> Vec<Family> {
    use Family::*;
    vec![
        Complete { n: 3, k: 3 },
        Complete { n: 4, k: 2 },
        Complete { n: 4, k: 3 },
        Complete { n: 5, k: 3 },
        Complete { n: 6, k: 3 },
        GluedComplete {
            n: 5,
            k: 3,
            permissive: false,
        },
        GluedComplete {
            n: 4,
            k: 3,
            permissive: true,
        },
        Affine { k: 3 },
        Affine { k: 5 },
        AffineDoubled { k: 3 },
        AffineDoubled { k: 5 },
        CyclicDifference {
            n: 7,
            base: vec![0, 1, 3],
        },
        CyclicDifference {
            n: 13,
            base: vec![0, 1, 4],
        },
        CyclicDifference {
            n: 21,
            base: vec![0, 3, 7],
        },
        CyclicDifference {
            n: 6,
            base: vec![0, 1, 2],
        },
        CyclicDifference {
            n: 8,
            base: vec![0, 1, 3],
        },
        Circulant {
            n: 5,
            offsets: vec![1],
        },
        Circulant {
            n: 6,
            offsets: vec![1],
        },
        Circulant {
            n: 6,
            offsets: vec![3],
        },
        Circulant {
            n: 7,
            offsets: vec![1, 2],
        },
        Circulant {
            n: 7,
            offsets: vec![1, 2, 3],
        },
        Circulant {
            n: 8,
            offsets: vec![1, 2],
        },
        Circulant {
            n: 8,
            offsets: vec![2],
        },
        Circulant {
            n: 9,
            offsets: vec![1, 3],
        },
        Circulant {
            n: 10,
            offsets: vec![1, 2, 5],
        },
        Random {
            n: 8,
            k: 3,
            m: 10,
            seed: 42,
        },
        Random {
            n: 7,
            k: 4,
            m: 6,
            seed: 7,
        },
    ]
}
