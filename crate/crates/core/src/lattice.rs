//! The non-vanishing `ST(λ)` for a fixed `d`, ordered by refinement after
//! padding with ones, and its Hasse diagram.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::limits::Limits;
use crate::partition::{is_refinement, pad_with_ones, partitions_of, Partition};
use crate::tpi::is_tpi;

/// Every `λ` with `1 ≤ |λ| ≤ k_max` and all parts `≥ min_part` for which
/// `ST(λ)` is not a TPI, plus the single box `(1)`. Sorted by weight
/// descending, then reverse-lexicographically.
pub fn non_tpi_set(d: usize, min_part: usize, k_max: usize) -> Result<Vec<Partition>> {
    Limits::default().check_dimension(d)?;
    let top = k_max.min(d * d);
    let candidates: Vec<Partition> = (1..=top)
        .rev()
        .flat_map(|k| partitions_of(k, None).collect::<Vec<_>>())
        .filter(|p| p.weight() == 1 || p.parts().iter().all(|&x| x >= min_part))
        .collect();
    let keep: Vec<bool> = candidates.par_iter().map(|p| is_tpi(p, d).map(|v| !v.is_tpi)).collect::<Result<_>>()?;
    Ok(candidates.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect())
}

/// `finer ≤ coarser` when the parts of `finer ⊕ 1^{d²-|finer|}` group into
/// those of `coarser ⊕ 1^{d²-|coarser|}`. Both weights must be at most `d²`.
pub fn padded_refines(finer: &Partition, coarser: &Partition, d: usize) -> Result<bool> {
    let top = d * d;
    Ok(is_refinement(&pad_with_ones(finer, top)?, &pad_with_ones(coarser, top)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub d: usize,
    pub nodes: Vec<Partition>,
    /// `(coarser, finer)` index pairs into `nodes` with nothing in between.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(a, b)| (self.nodes[a].to_string(), self.nodes[b].to_string())).collect()
    }

    /// Graphviz rendering; nodes are labelled `5,3`, edges point from the
    /// coarser partition to its refinement.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph non_tpi_d{} {{", self.d);
        let _ = writeln!(out, "  rankdir=TB;");
        let _ = writeln!(out, "  node [shape=box];");
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{p}\"];");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Transitive reduction of the padded refinement order on `nodes`.
pub fn hasse_diagram(nodes: Vec<Partition>, d: usize) -> Result<HasseDiagram> {
    let n = nodes.len();
    let rows: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|b| if a == b { Ok(false) } else { padded_refines(&nodes[b], &nodes[a], d) })
                .collect::<Result<Vec<bool>>>()
        })
        .collect::<Result<_>>()?;
    // rows[a][b]: b is a strict refinement of a. Distinct partitions of
    // equal padding cannot refine each other both ways, so this is strict.
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !rows[a][b] {
                continue;
            }
            let covered = (0..n).any(|c| c != a && c != b && rows[a][c] && rows[c][b]);
            if !covered {
                edges.push((a, b));
            }
        }
    }
    Ok(HasseDiagram { d, nodes, edges })
}

/// `non_tpi_set` followed by `hasse_diagram`.
pub fn non_tpi_lattice(d: usize, min_part: usize, k_max: usize) -> Result<HasseDiagram> {
    hasse_diagram(non_tpi_set(d, min_part, k_max)?, d)
}

/// DOT text for the full non-TPI lattice of `d` with every part size.
pub fn lattice_dot(d: usize) -> Result<String> {
    Ok(non_tpi_lattice(d, 1, d * d)?.to_dot())
}
