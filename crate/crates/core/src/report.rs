//! One-instance analysis summary shared by the CLI and the test suites.

use std::fmt::Write as _;
use std::time::Instant;

use crate::connectivity::{edge_atom, edge_connectivity, CutResult};
use crate::error::Error;
use crate::model::{Hypergraph, Linearity};
use crate::symmetry::is_vertex_transitive;

/// Keys of the machine-readable block, in output order.
pub const MACHINE_KEYS: [&str; 10] = [
    "n",
    "m",
    "delta",
    "Delta",
    "uniform_k",
    "linear",
    "connected",
    "kappa",
    "transitive",
    "maximal",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub connectivity: bool,
    pub transitivity: bool,
    pub atom: bool,
}

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    /// `(size, count)` pairs, ascending by size.
    pub edge_sizes: Vec<(usize, usize)>,
    pub delta: usize,
    pub max_degree: usize,
    pub uniform_k: Option<usize>,
    pub linearity: Linearity,
    pub components: usize,
    /// `None` when not requested.
    pub kappa: Option<Result<CutResult, Error>>,
    pub transitive: Option<bool>,
    pub atom: Option<Result<CutResult, Error>>,
    /// Milliseconds per phase.
    pub timings: Vec<(&'static str, f64)>,
}

fn timed<T>(
    timings: &mut Vec<(&'static str, f64)>,
    phase: &'static str,
    f: impl FnOnce() -> T,
) -> T {
    let start = Instant::now();
    let out = f();
    timings.push((phase, start.elapsed().as_secs_f64() * 1e3));
    out
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn list(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl AnalysisReport {
    pub fn analyze(h: &Hypergraph, options: AnalysisOptions) -> Self {
        let mut timings = Vec::new();
        let (delta, max_degree, uniform_k, linearity, components) =
            timed(&mut timings, "structure", || {
                let (lo, hi) = h.degree_extremes();
                (lo, hi, h.uniform_k(), h.linearity(), h.components().len())
            });
        let kappa = options
            .connectivity
            .then(|| timed(&mut timings, "connectivity", || edge_connectivity(h)));
        let transitive = options
            .transitivity
            .then(|| timed(&mut timings, "transitivity", || is_vertex_transitive(h)));
        let atom = options
            .atom
            .then(|| timed(&mut timings, "atom", || edge_atom(h)));
        Self {
            n: h.vertex_count(),
            m: h.edge_count(),
            edge_sizes: h.edge_size_counts(),
            delta,
            max_degree,
            uniform_k,
            linearity,
            components,
            kappa,
            transitive,
            atom,
            timings,
        }
    }

    pub fn connected(&self) -> bool {
        self.components == 1
    }

    pub fn kappa_value(&self) -> Option<usize> {
        match &self.kappa {
            Some(Ok(cut)) => Some(cut.value),
            _ => None,
        }
    }

    /// `κ' = δ`, when `κ'` was computed.
    pub fn maximal(&self) -> Option<bool> {
        self.kappa_value().map(|k| k == self.delta)
    }

    /// `key=value` lines in the order of [`MACHINE_KEYS`]. `-` marks a field
    /// that was not requested, `undefined` one that could not be computed,
    /// `none` a non-uniform instance.
    pub fn machine_block(&self) -> String {
        let kappa = match &self.kappa {
            None => "-".to_string(),
            Some(Ok(cut)) => cut.value.to_string(),
            Some(Err(_)) => "undefined".to_string(),
        };
        let maximal = match (&self.kappa, self.maximal()) {
            (None, _) => "-",
            (Some(_), None) => "undefined",
            (Some(_), Some(b)) => flag(b),
        };
        let values = [
            self.n.to_string(),
            self.m.to_string(),
            self.delta.to_string(),
            self.max_degree.to_string(),
            self.uniform_k.map_or("none".to_string(), |k| k.to_string()),
            flag(self.linearity.is_linear()).to_string(),
            flag(self.connected()).to_string(),
            kappa,
            self.transitive.map_or("-", flag).to_string(),
            maximal.to_string(),
        ];
        MACHINE_KEYS
            .iter()
            .zip(values)
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let sizes = self
            .edge_sizes
            .iter()
            .map(|(s, c)| format!("{s}x{c}"))
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "vertices: {}", self.n).unwrap();
        writeln!(
            out,
            "edges: {} (sizes {})",
            self.m,
            if sizes.is_empty() { "-" } else { &sizes }
        )
        .unwrap();
        writeln!(out, "degree: min {} max {}", self.delta, self.max_degree).unwrap();
        match self.uniform_k {
            Some(k) => writeln!(out, "uniform: {k}-uniform").unwrap(),
            None if self.m == 0 => writeln!(out, "uniform: no edges").unwrap(),
            None => writeln!(out, "uniform: no").unwrap(),
        }
        match self.linearity {
            Linearity::Linear => writeln!(out, "linear: yes").unwrap(),
            Linearity::NonLinear { pair, edges } => writeln!(
                out,
                "linear: no (pair {} {} lies in edges {} and {})",
                pair.0, pair.1, edges.0, edges.1
            )
            .unwrap(),
        }
        writeln!(
            out,
            "connected: {} ({} components)",
            flag(self.connected()),
            self.components
        )
        .unwrap();
        match &self.kappa {
            None => {}
            Some(Ok(cut)) => {
                writeln!(
                    out,
                    "edge-connectivity: {} (side {{{}}}, cut edges {{{}}})",
                    cut.value,
                    list(&cut.side),
                    list(&cut.cut_edges)
                )
                .unwrap();
                writeln!(
                    out,
                    "maximally edge-connected: {}",
                    flag(cut.value == self.delta)
                )
                .unwrap();
            }
            Some(Err(e)) => writeln!(out, "edge-connectivity: unavailable ({e})").unwrap(),
        }
        if let Some(t) = self.transitive {
            writeln!(out, "vertex-transitive: {}", flag(t)).unwrap();
        }
        match &self.atom {
            None => {}
            Some(Ok(cut)) => writeln!(
                out,
                "edge atom: {{{}}} with boundary {}",
                list(&cut.side),
                cut.value
            )
            .unwrap(),
            Some(Err(e)) => writeln!(out, "edge atom: unavailable ({e})").unwrap(),
        }
        for (phase, ms) in &self.timings {
            writeln!(out, "time {phase}: {ms:.3} ms").unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::affine_doubled_family;

    #[test]
    fn single_edge_block() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let r = AnalysisReport::analyze(
            &h,
            AnalysisOptions {
                connectivity: true,
                ..Default::default()
            },
        );
        assert_eq!(
            r.machine_block(),
            "n=3\nm=1\ndelta=1\nDelta=1\nuniform_k=3\nlinear=true\nconnected=true\nkappa=1\ntransitive=-\nmaximal=true\n"
        );
    }

    #[test]
    fn doubled_family_block() {
        let h = affine_doubled_family(3).unwrap();
        let r = AnalysisReport::analyze(
            &h,
            AnalysisOptions {
                connectivity: true,
                transitivity: true,
                atom: true,
            },
        );
        let block = r.machine_block();
        assert!(block.contains("kappa=3\n"));
        assert!(block.contains("uniform_k=none\n"));
        assert!(block.contains("maximal=false\n"));
        assert!(block.contains("transitive=true\n"));
        assert!(r.human().contains("edge atom: {"));
    }

    #[test]
    fn guard_failures_stay_per_field() {
        let h = Hypergraph::new(1, vec![]).unwrap();
        let r = AnalysisReport::analyze(
            &h,
            AnalysisOptions {
                connectivity: true,
                transitivity: true,
                atom: true,
            },
        );
        let block = r.machine_block();
        assert!(block.contains("kappa=undefined\n"));
        assert!(block.contains("maximal=undefined\n"));
        assert!(block.contains("transitive=true\n"));
        assert!(r.human().contains("edge atom: unavailable"));
    }
}
