//! Edge-connectivity, minimum-cut witnesses and edge atoms.
//!
//! The exact routine reduces each `s`-`t` question to a maximum flow. Every
//! hyperedge becomes a unit-capacity arc `e_in -> e_out`, and each vertex `v`
//! of the edge gets arcs `v -> e_in` and `e_out -> v` of capacity `m + 1`.
//! Only the unit arcs can be saturated, and the vertices on the source side
//! of a minimum cut form a set whose boundary is exactly the cut.
//!
//! The oracle and atom routines enumerate vertex subsets as bitmasks and are
//! guarded at `n <= 20`.

use crate::error::{Error, Result};
use crate::flow::Dinic;
use crate::model::{EdgeIndex, Hypergraph, Vertex};

/// Largest vertex count accepted by the enumeration routines.
pub const ENUMERATION_LIMIT: usize = 20;

/// A vertex set `side` with its boundary edges and their number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub side: Vec<Vertex>,
    pub cut_edges: Vec<EdgeIndex>,
    pub value: usize,
}

impl CutResult {
    fn from_side(h: &Hypergraph, side: Vec<Vertex>) -> Self {
        let cut_edges = h.boundary(&side);
        let value = cut_edges.len();
        Self {
            side,
            cut_edges,
            value,
        }
    }

    fn from_mask(h: &Hypergraph, mask: u32) -> Self {
        Self::from_side(h, mask_to_vertices(mask, h.vertex_count()))
    }
}

fn mask_to_vertices(mask: u32, n: usize) -> Vec<Vertex> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Minimum number of edges whose removal separates `s` from `t`, with a
/// witness side containing `s`.
pub fn st_edge_connectivity(h: &Hypergraph, s: Vertex, t: Vertex) -> Result<CutResult> {
    h.check_vertex(s)?;
    h.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints { vertex: s });
    }
    Ok(st_cut(h, s, t))
}

fn st_cut(h: &Hypergraph, s: Vertex, t: Vertex) -> CutResult {
    let n = h.vertex_count();
    let m = h.edge_count();
    let big = m as u64 + 1;
    let mut net = Dinic::new(n + 2 * m);
    for (i, edge) in h.edges().iter().enumerate() {
        let e_in = n + 2 * i;
        let e_out = e_in + 1;
        net.add_arc(e_in, e_out, 1);
        for &v in edge {
            net.add_arc(v, e_in, big);
            net.add_arc(e_out, v, big);
        }
    }
    let flow = net.max_flow(s, t) as usize;
    let reach = net.source_side(s);
    let side: Vec<Vertex> = (0..n).filter(|&v| reach[v]).collect();
    let cut = CutResult::from_side(h, side);
    debug_assert_eq!(cut.value, flow);
    cut
}

/// Edge-connectivity with a minimum cut witness.
///
/// The source is the lowest-indexed vertex of minimum degree; every other
/// vertex is tried as a sink and the first sink achieving the minimum
/// supplies the witness. A disconnected input yields value 0 and the
/// source's component.
pub fn edge_connectivity(h: &Hypergraph) -> Result<CutResult> {
    let n = h.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n });
    }
    let delta = h.min_degree();
    let s = (0..n)
        .find(|&v| h.incident_edges(v).len() == delta)
        .unwrap();
    let mut best: Option<CutResult> = None;
    for t in (0..n).filter(|&t| t != s) {
        let cut = st_cut(h, s, t);
        if best.as_ref().is_none_or(|b| cut.value < b.value) {
            let done = cut.value == 0;
            best = Some(cut);
            if done {
                break;
            }
        }
    }
    Ok(best.unwrap())
}

fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect()
}

fn mask_boundary(edges: &[u32], mask: u32) -> usize {
    edges
        .iter()
        .filter(|&&e| e & mask != 0 && e & !mask != 0)
        .count()
}

fn check_guard(h: &Hypergraph, what: &'static str) -> Result<()> {
    let n = h.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { n });
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded {
            what,
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(())
}

/// Exhaustive edge-connectivity: the minimum boundary over every nonempty
/// proper set containing vertex 0. The witness is the first minimiser in
/// increasing bitmask order.
pub fn edge_connectivity_oracle(h: &Hypergraph) -> Result<CutResult> {
    check_guard(h, "exhaustive edge-connectivity")?;
    let n = h.vertex_count();
    let edges = edge_masks(h);
    let full = (1u32 << n) - 1;
    let mut best = (usize::MAX, 0u32);
    for rest in 0..1u32 << (n - 1) {
        let mask = 1 | rest << 1;
        if mask == full {
            continue;
        }
        let value = mask_boundary(&edges, mask);
        if value < best.0 {
            best = (value, mask);
        }
    }
    Ok(CutResult::from_mask(h, best.1))
}

/// Every edge atom: the nonempty proper sets of minimum boundary that are of
/// minimum size among those, in lexicographic order of their sorted vertices.
pub fn edge_atoms(h: &Hypergraph) -> Result<Vec<CutResult>> {
    check_guard(h, "edge atom search")?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = h.vertex_count();
    let edges = edge_masks(h);
    let full = (1u32 << n) - 1;
    let mut best = (usize::MAX, u32::MAX);
    let mut ties: Vec<u32> = Vec::new();
    for mask in 1..full {
        let key = (mask_boundary(&edges, mask), mask.count_ones());
        if key < best {
            best = key;
            ties.clear();
        }
        if key == best {
            ties.push(mask);
        }
    }
    let mut atoms: Vec<CutResult> = ties
        .into_iter()
        .map(|m| CutResult::from_mask(h, m))
        .collect();
    atoms.sort_by(|a, b| a.side.cmp(&b.side));
    Ok(atoms)
}

/// The lexicographically smallest edge atom.
pub fn edge_atom(h: &Hypergraph) -> Result<CutResult> {
    Ok(edge_atoms(h)?.swap_remove(0))
}

/// Whether the edge-connectivity equals the minimum degree.
pub fn is_maximally_edge_connected(h: &Hypergraph) -> Result<bool> {
    Ok(edge_connectivity(h)?.value == h.min_degree())
}
