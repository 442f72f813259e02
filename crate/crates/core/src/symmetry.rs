//! Automorphisms, orbits, vertex-transitivity and blocks of imprimitivity.
//!
//! The search is individualisation plus refinement. Both the source and the
//! target copy of the hypergraph carry a vertex colouring. The initial colour
//! of a vertex is its degree together with the sorted sizes of its edges.
//! After each individualisation the colourings are refined: edge colours
//! come from the multiset of their vertex colours, vertex colours from the
//! multiset of their edge colours, until the number of cells stops growing.
//! A branch dies as soon as the two colourings stop matching, or when a
//! fixed vertex's edges cannot map onto edges of the same size. The left
//! colouring never depends on the right-hand choices, so enumeration visits
//! every automorphism exactly once.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Hypergraph, Vertex};

/// A bijection on `0..n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<Vertex>,
}

impl Permutation {
    pub fn new(image: Vec<Vertex>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation { n });
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    /// The cyclic shift `v -> v + by (mod n)`.
    pub fn rotation(n: usize, by: usize) -> Self {
        Self {
            image: (0..n).map(|v| (v + by) % n).collect(),
        }
    }

    /// The permutation swapping `a` and `b`.
    pub fn transposition(n: usize, a: Vertex, b: Vertex) -> Self {
        let mut image: Vec<Vertex> = (0..n).collect();
        image.swap(a, b);
        Self { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    /// `self after other`: `v -> self(other(v))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Self { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Sorted image of a vertex set.
    pub fn map_set(&self, set: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = set.iter().map(|&v| self.image[v]).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("p")?;
        for v in &self.image {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Whether `p` maps the edge multiset of `h` onto itself.
pub fn is_automorphism(h: &Hypergraph, p: &Permutation) -> Result<bool> {
    if p.len() != h.vertex_count() {
        return Err(Error::PermutationLength {
            expected: h.vertex_count(),
            found: p.len(),
        });
    }
    Ok(preserves_edges(&h.canonical_edges(), h, p))
}

fn preserves_edges(canonical: &[Vec<Vertex>], h: &Hypergraph, p: &Permutation) -> bool {
    let mut mapped: Vec<Vec<Vertex>> = h.edges().iter().map(|e| p.map_set(e)).collect();
    mapped.sort();
    mapped == canonical
}

type Colours = Vec<u32>;

struct Searcher<'a> {
    h: &'a Hypergraph,
    canonical: Vec<Vec<Vertex>>,
    edge_set: HashSet<Vec<Vertex>>,
}

/// Replaces each signature by its rank among the distinct left signatures.
/// Fails unless both sides carry the same multiset of signatures.
fn rank_signatures(left: Vec<Vec<u32>>, right: Vec<Vec<u32>>) -> Option<(Colours, Colours)> {
    let mut sorted_left = left.clone();
    sorted_left.sort_unstable();
    let mut sorted_right = right.clone();
    sorted_right.sort_unstable();
    if sorted_left != sorted_right {
        return None;
    }
    sorted_left.dedup();
    let rank = |sig: &Vec<u32>| sorted_left.binary_search(sig).unwrap() as u32;
    Some((
        left.iter().map(rank).collect(),
        right.iter().map(rank).collect(),
    ))
}

fn cell_count(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

enum Flow {
    Continue,
    Stop,
}

impl<'a> Searcher<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let canonical = h.canonical_edges();
        let edge_set = canonical.iter().cloned().collect();
        Self {
            h,
            canonical,
            edge_set,
        }
    }

    fn initial_colours(&self) -> Colours {
        let sigs: Vec<Vec<u32>> = (0..self.h.vertex_count())
            .map(|v| {
                let edges = self.h.incident_edges(v);
                let mut sig = vec![edges.len() as u32];
                let mut sizes: Vec<u32> =
                    edges.iter().map(|&e| self.h.edge(e).len() as u32).collect();
                sizes.sort_unstable();
                sig.extend(sizes);
                sig
            })
            .collect();
        rank_signatures(sigs.clone(), sigs).unwrap().0
    }

    fn edge_signatures(&self, colours: &[u32]) -> Vec<Vec<u32>> {
        self.h
            .edges()
            .iter()
            .map(|e| {
                let mut sig: Vec<u32> = e.iter().map(|&v| colours[v]).collect();
                sig.sort_unstable();
                sig.insert(0, e.len() as u32);
                sig
            })
            .collect()
    }

    fn vertex_signatures(&self, colours: &[u32], edge_colours: &[u32]) -> Vec<Vec<u32>> {
        (0..self.h.vertex_count())
            .map(|v| {
                let mut sig: Vec<u32> = self
                    .h
                    .incident_edges(v)
                    .iter()
                    .map(|&e| edge_colours[e])
                    .collect();
                sig.sort_unstable();
                sig.insert(0, colours[v]);
                sig
            })
            .collect()
    }

    fn refine(&self, left: &mut Colours, right: &mut Colours) -> bool {
        let mut cells = cell_count(left);
        loop {
            let Some((le, re)) =
                rank_signatures(self.edge_signatures(left), self.edge_signatures(right))
            else {
                return false;
            };
            let Some((lv, rv)) = rank_signatures(
                self.vertex_signatures(left, &le),
                self.vertex_signatures(right, &re),
            ) else {
                return false;
            };
            *left = lv;
            *right = rv;
            let refined = cell_count(left);
            if refined == cells {
                return true;
            }
            cells = refined;
        }
    }

    /// Source-to-target assignments for vertices in singleton cells.
    fn fixed_images(&self, left: &[u32], right: &[u32]) -> Vec<Option<Vertex>> {
        let n = left.len();
        let mut size = vec![0usize; n];
        let mut target = vec![0usize; n];
        for &c in left {
            size[c as usize] += 1;
        }
        for (v, &c) in right.iter().enumerate() {
            target[c as usize] = v;
        }
        left.iter()
            .map(|&c| (size[c as usize] == 1).then_some(target[c as usize]))
            .collect()
    }

    /// Every edge with fixed vertices must have those images inside some edge
    /// of the same size; fully fixed edges must map onto an edge.
    fn partial_edges_extend(&self, images: &[Option<Vertex>]) -> bool {
        let mut buf = Vec::new();
        for edge in self.h.edges() {
            buf.clear();
            buf.extend(edge.iter().filter_map(|&v| images[v]));
            if buf.is_empty() {
                continue;
            }
            buf.sort_unstable();
            if buf.len() == edge.len() {
                if !self.edge_set.contains(&buf) {
                    return false;
                }
                continue;
            }
            let extends = self.h.incident_edges(buf[0]).iter().any(|&f| {
                let f = self.h.edge(f);
                f.len() == edge.len() && buf.iter().all(|v| f.binary_search(v).is_ok())
            });
            if !extends {
                return false;
            }
        }
        true
    }

    /// Largest non-singleton cell of the left colouring, ties to the cell
    /// holding the smallest vertex.
    fn target_cell(&self, left: &[u32]) -> Option<u32> {
        let n = left.len();
        let mut size = vec![0usize; n];
        let mut first = vec![usize::MAX; n];
        for (v, &c) in left.iter().enumerate() {
            size[c as usize] += 1;
            first[c as usize] = first[c as usize].min(v);
        }
        (0..n)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (std::cmp::Reverse(size[c]), first[c]))
            .map(|c| c as u32)
    }

    fn individualise(colours: &mut [u32], v: Vertex) {
        colours[v] = u32::MAX;
    }

    fn search(
        &self,
        left: &[u32],
        right: &[u32],
        visit: &mut dyn FnMut(Permutation) -> Flow,
    ) -> Flow {
        let images = self.fixed_images(left, right);
        if !self.partial_edges_extend(&images) {
            return Flow::Continue;
        }
        let Some(cell) = self.target_cell(left) else {
            let p = Permutation {
                image: images.into_iter().map(Option::unwrap).collect(),
            };
            if preserves_edges(&self.canonical, self.h, &p) {
                return visit(p);
            }
            return Flow::Continue;
        };
        let x = left.iter().position(|&c| c == cell).unwrap();
        for y in (0..right.len()).filter(|&y| right[y] == cell) {
            let mut l = left.to_vec();
            let mut r = right.to_vec();
            Self::individualise(&mut l, x);
            Self::individualise(&mut r, y);
            if self.refine(&mut l, &mut r) {
                if let Flow::Stop = self.search(&l, &r, visit) {
                    return Flow::Stop;
                }
            }
        }
        Flow::Continue
    }

    fn find_mapping(&self, u: Vertex, v: Vertex) -> Option<Permutation> {
        let init = self.initial_colours();
        if init[u] != init[v] {
            return None;
        }
        let mut left = init.clone();
        let mut right = init;
        Self::individualise(&mut left, u);
        Self::individualise(&mut right, v);
        if !self.refine(&mut left, &mut right) {
            return None;
        }
        let mut found = None;
        self.search(&left, &right, &mut |p| {
            found = Some(p);
            Flow::Stop
        });
        found
    }
}

/// Some automorphism sending `u` to `v`, if one exists.
pub fn find_automorphism_mapping(
    h: &Hypergraph,
    u: Vertex,
    v: Vertex,
) -> Result<Option<Permutation>> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    Ok(Searcher::new(h).find_mapping(u, v))
}

/// Orbit labels of the group generated by `generators`: `label[v]` is the
/// smallest vertex in the orbit of `v`.
fn orbit_labels(n: usize, generators: &[Permutation]) -> Vec<Vertex> {
    let mut parent: Vec<Vertex> = (0..n).collect();
    fn root(parent: &mut [Vertex], mut v: Vertex) -> Vertex {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for g in generators {
        for v in 0..n {
            let (a, b) = (root(&mut parent, v), root(&mut parent, g.apply(v)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| root(&mut parent, v)).collect()
}

/// Whether the automorphism group is transitive on the vertices.
///
/// Vertices already in the orbit of 0 under the automorphisms found so far
/// are not searched again.
pub fn is_vertex_transitive(h: &Hypergraph) -> bool {
    let n = h.vertex_count();
    let searcher = Searcher::new(h);
    let init = searcher.initial_colours();
    if init.iter().any(|&c| c != init[0]) {
        return false;
    }
    let mut generators = Vec::new();
    let mut labels = orbit_labels(n, &generators);
    for v in 1..n {
        if labels[v] == 0 {
            continue;
        }
        match searcher.find_mapping(0, v) {
            Some(p) => {
                generators.push(p);
                labels = orbit_labels(n, &generators);
            }
            None => return false,
        }
    }
    true
}

/// Orbits of the automorphism group, each sorted, ordered by smallest vertex.
pub fn vertex_orbits(h: &Hypergraph) -> Vec<Vec<Vertex>> {
    let n = h.vertex_count();
    let searcher = Searcher::new(h);
    let mut generators = Vec::new();
    let mut labels = orbit_labels(n, &generators);
    for v in 0..n {
        if labels[v] != v {
            continue;
        }
        for w in v + 1..n {
            if labels[w] != w || labels[v] == labels[w] {
                continue;
            }
            if let Some(p) = searcher.find_mapping(v, w) {
                generators.push(p);
                labels = orbit_labels(n, &generators);
            }
        }
    }
    let mut orbits: Vec<Vec<Vertex>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for (v, &r) in labels.iter().enumerate() {
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(v);
    }
    orbits
}

/// Every automorphism, in search order, or an error once more than `cap` are found.
pub fn enumerate_automorphisms(h: &Hypergraph, cap: usize) -> Result<Vec<Permutation>> {
    let searcher = Searcher::new(h);
    let mut left = searcher.initial_colours();
    let mut right = left.clone();
    searcher.refine(&mut left, &mut right);
    let mut out = Vec::new();
    let mut overflow = false;
    searcher.search(&left, &right, &mut |p| {
        if out.len() == cap {
            overflow = true;
            return Flow::Stop;
        }
        out.push(p);
        Flow::Continue
    });
    if overflow {
        return Err(Error::AutomorphismCapExceeded { cap });
    }
    Ok(out)
}

/// Outcome of [`is_block_of_imprimitivity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockVerdict {
    Block,
    /// `permutation` (at `index` in the supplied list) moves the set onto a
    /// proper, nonempty part of itself.
    Violated {
        index: usize,
        permutation: Permutation,
    },
}

impl BlockVerdict {
    pub fn is_block(&self) -> bool {
        matches!(self, BlockVerdict::Block)
    }
}

/// Checks `φ(X) ∩ X ∈ {∅, X}` for every `φ` in `autos`.
pub fn is_block_of_imprimitivity(
    h: &Hypergraph,
    set: &[Vertex],
    autos: &[Permutation],
) -> Result<BlockVerdict> {
    let canonical = h.canonical_edges();
    for (index, p) in autos.iter().enumerate() {
        if p.len() != h.vertex_count() {
            return Err(Error::PermutationLength {
                expected: h.vertex_count(),
                found: p.len(),
            });
        }
        if !preserves_edges(&canonical, h, p) {
            return Err(Error::NotAnAutomorphism { index });
        }
    }
    let inside = h.membership(set);
    let distinct: Vec<Vertex> = (0..h.vertex_count()).filter(|&v| inside[v]).collect();
    for (index, p) in autos.iter().enumerate() {
        let shared = distinct.iter().filter(|&&v| inside[p.apply(v)]).count();
        if shared != 0 && shared != distinct.len() {
            return Ok(BlockVerdict::Violated {
                index,
                permutation: p.clone(),
            });
        }
    }
    Ok(BlockVerdict::Block)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        affine_hypergraph, circulant_graph, complete_uniform, glued_complete_family,
    };

    fn path3() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap()
    }

    /// Every permutation of `0..n` in lexicographic order.
    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation::new(prefix.clone()).unwrap());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn brute_force_group(h: &Hypergraph) -> Vec<Permutation> {
        all_permutations(h.vertex_count())
            .into_iter()
            .filter(|p| is_automorphism(h, p).unwrap())
            .collect()
    }

    #[test]
    fn permutation_basics() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        let r = Permutation::rotation(5, 2);
        assert_eq!(r.compose(&r.inverse()), Permutation::identity(5));
        assert_eq!(r.to_string(), "p 2 3 4 0 1");
        assert_eq!(r.map_set(&[3, 4]), vec![0, 1]);
    }

    #[test]
    fn automorphism_checks() {
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(is_automorphism(&single, &Permutation::identity(3)).unwrap());
        assert!(is_automorphism(&single, &Permutation::transposition(3, 0, 1)).unwrap());
        let path4 = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(!is_automorphism(&path4, &Permutation::transposition(4, 0, 1)).unwrap());
        assert_eq!(
            is_automorphism(&path4, &Permutation::identity(3)),
            Err(Error::PermutationLength {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn multiplicities_must_be_preserved() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1], vec![1, 2]]).unwrap();
        assert!(!is_automorphism(&h, &Permutation::new(vec![2, 1, 0]).unwrap()).unwrap());
        assert_eq!(vertex_orbits(&h), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn mapping_examples() {
        let p = path3();
        let id = find_automorphism_mapping(&p, 1, 1).unwrap().unwrap();
        assert_eq!(id.apply(1), 1);
        let rev = find_automorphism_mapping(&p, 0, 2).unwrap().unwrap();
        assert_eq!(rev, Permutation::new(vec![2, 1, 0]).unwrap());
        assert_eq!(find_automorphism_mapping(&p, 0, 1).unwrap(), None);
        assert!(find_automorphism_mapping(&p, 0, 3).is_err());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_vertex_transitive(&affine_hypergraph(3).unwrap()));
        assert!(is_vertex_transitive(&glued_complete_family(5, 3).unwrap()));
        assert!(!is_vertex_transitive(&path3()));
        assert!(is_vertex_transitive(&Hypergraph::new(3, vec![]).unwrap()));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(vertex_orbits(&path3()), vec![vec![0, 2], vec![1]]);
        assert_eq!(
            vertex_orbits(&affine_hypergraph(3).unwrap()),
            vec![(0..9).collect::<Vec<_>>()]
        );
        assert_eq!(
            vertex_orbits(&Hypergraph::new(3, vec![]).unwrap()),
            vec![vec![0, 1, 2]]
        );
    }

    #[test]
    fn enumeration_examples() {
        let single = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(enumerate_automorphisms(&single, 100).unwrap().len(), 6);
        assert_eq!(brute_force_group(&path3()).len(), 2);
        let mut autos = enumerate_automorphisms(&path3(), 100).unwrap();
        autos.sort();
        assert_eq!(autos, brute_force_group(&path3()));
        let c5 = circulant_graph(5, &[1]).unwrap();
        assert_eq!(brute_force_group(&c5).len(), 10);
        assert_eq!(enumerate_automorphisms(&c5, 100).unwrap().len(), 10);
        assert_eq!(
            enumerate_automorphisms(&c5, 9),
            Err(Error::AutomorphismCapExceeded { cap: 9 })
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let cases = [
            complete_uniform(4, 3).unwrap(),
            circulant_graph(6, &[1]).unwrap(),
            circulant_graph(6, &[1, 3]).unwrap(),
            Hypergraph::new(
                6,
                vec![vec![0, 1, 2], vec![2, 3], vec![3, 4, 5], vec![0, 5]],
            )
            .unwrap(),
            Hypergraph::new(5, vec![vec![0, 1], vec![1, 2, 3], vec![3, 4]]).unwrap(),
            Hypergraph::new(6, vec![vec![0, 1], vec![0, 1], vec![2, 3, 4]]).unwrap(),
        ];
        for h in &cases {
            let mut found = enumerate_automorphisms(h, 10_000).unwrap();
            found.sort();
            let len = found.len();
            found.dedup();
            assert_eq!(found.len(), len, "duplicates in enumeration");
            assert_eq!(found, brute_force_group(h), "{h}");
        }
    }

    #[test]
    fn block_examples() {
        let c6 = circulant_graph(6, &[1]).unwrap();
        let autos = enumerate_automorphisms(&c6, 100).unwrap();
        assert_eq!(autos.len(), 12);
        let all: Vec<_> = (0..6).collect();
        assert!(is_block_of_imprimitivity(&c6, &all, &autos)
            .unwrap()
            .is_block());
        assert!(is_block_of_imprimitivity(&c6, &[4], &autos)
            .unwrap()
            .is_block());
        let rot = Permutation::rotation(6, 1);
        match is_block_of_imprimitivity(&c6, &[0, 1], std::slice::from_ref(&rot)).unwrap() {
            BlockVerdict::Violated { index, permutation } => {
                assert_eq!(index, 0);
                assert_eq!(permutation.map_set(&[0, 1]), vec![1, 2]);
            }
            BlockVerdict::Block => panic!("rotation breaks the pair"),
        }
        assert!(!is_block_of_imprimitivity(&c6, &[0, 1], &autos)
            .unwrap()
            .is_block());
        assert!(is_block_of_imprimitivity(&c6, &[0, 3], &autos)
            .unwrap()
            .is_block());
        let not_auto = Permutation::transposition(6, 0, 2);
        assert_eq!(
            is_block_of_imprimitivity(&c6, &[0], &[not_auto]),
            Err(Error::NotAnAutomorphism { index: 0 })
        );
    }
}
