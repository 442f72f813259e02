//! Fixed instances shared by the benchmarks in `benches/`.

use hyperconn::constructions::{
    affine_doubled_family, affine_hypergraph, circulant_graph, glued_complete_family,
};
use hyperconn::Hypergraph;

/// Named instances for the connectivity benchmarks, smallest first.
pub fn connectivity_fixtures() -> Vec<(&'static str, Hypergraph)> {
    vec![
        ("circulant-n10", circulant_graph(10, &[1, 2, 5]).unwrap()),
        ("glued-n5-k3", glued_complete_family(5, 3).unwrap()),
        ("affine-k5", affine_hypergraph(5).unwrap()),
        ("affine-k7", affine_hypergraph(7).unwrap()),
        ("affine-doubled-k5", affine_doubled_family(5).unwrap()),
    ]
}

pub fn transitivity_fixture() -> Hypergraph {
    affine_doubled_family(5).unwrap()
}

pub fn oracle_fixture() -> Hypergraph {
    glued_complete_family(5, 3).unwrap()
}
