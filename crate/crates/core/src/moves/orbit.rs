//! Breadth-first exploration of the move-group orbit of a diagram, with nodes
//! identified up to equivalence via [`canonical_form`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::diagram::{DiagramError, Genus2Diagram, InvariantVector, Monodromy, TorusDiagram};
use crate::exec::Execution;
use crate::moves::{apply_sigma1, apply_sigma1_inverse, canonical_form, Move, Sigma2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitNode {
    pub id: usize,
    /// BFS depth at which the class was first reached.
    pub depth: usize,
    /// Canonical torus representative.
    pub diagram: TorusDiagram,
    pub invariant: InvariantVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrbitEdge {
    pub from: usize,
    pub generator: Move,
    pub to: usize,
}

/// Nodes are numbered layer by layer, and by canonical form within a layer;
/// edges are sorted. The result is independent of the execution mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGraph {
    pub nodes: Vec<OrbitNode>,
    pub edges: Vec<OrbitEdge>,
}

type Expansion<S> = Vec<(Move, TorusDiagram, S)>;

fn explore<S, Step, Key>(
    start: S,
    depth: usize,
    exec: Execution,
    generators: &[Move],
    step: Step,
    key: Key,
) -> Result<OrbitGraph, DiagramError>
where
    S: Clone + Send + Sync,
    Step: Fn(&S, Move) -> Result<S, DiagramError> + Sync + Send,
    Key: Fn(&S) -> Result<TorusDiagram, DiagramError> + Sync + Send,
{
    let root = key(&start)?;
    let mut seen: BTreeMap<TorusDiagram, usize> = BTreeMap::new();
    let mut nodes = vec![OrbitNode {
        id: 0,
        depth: 0,
        invariant: root.invariant()?,
        diagram: root.clone(),
    }];
    seen.insert(root, 0);
    let mut edges = Vec::new();
    let mut frontier = vec![(0usize, start)];

    for level in 1..=depth {
        if frontier.is_empty() {
            break;
        }
        let expanded: Vec<Result<Expansion<S>, DiagramError>> =
            exec.map(&frontier, |(_, state)| {
                generators
                    .iter()
                    .map(|&g| {
                        let next = step(state, g)?;
                        Ok((g, key(&next)?, next))
                    })
                    .collect()
            });

        let mut layer: BTreeMap<TorusDiagram, S> = BTreeMap::new();
        let mut pending = Vec::new();
        for ((from, _), result) in frontier.iter().zip(expanded) {
            for (g, k, next) in result? {
                if !seen.contains_key(&k) {
                    layer.entry(k.clone()).or_insert(next);
                }
                pending.push((*from, g, k));
            }
        }
        let mut next_frontier = Vec::with_capacity(layer.len());
        for (k, state) in layer {
            let id = nodes.len();
            nodes.push(OrbitNode {
                id,
                depth: level,
                invariant: k.invariant()?,
                diagram: k.clone(),
            });
            seen.insert(k, id);
            next_frontier.push((id, state));
        }
        edges.extend(pending.into_iter().map(|(from, generator, k)| OrbitEdge {
            from,
            generator,
            to: seen[&k],
        }));
        frontier = next_frontier;
    }
    edges.sort();
    Ok(OrbitGraph { nodes, edges })
}

/// Orbit of a torus diagram under `sigma2` and `sigma2^{-1}` up to `depth`.
pub fn orbit(d: &TorusDiagram, depth: usize, exec: Execution) -> Result<OrbitGraph, DiagramError> {
    let start = canonical_form(d)?.0;
    explore(
        start,
        depth,
        exec,
        &[Move::D2, Move::D2Inv],
        |s, g| match g {
            Move::D2 => s.sigma2(),
            _ => s.sigma2_inverse(),
        },
        |s| Ok(canonical_form(s)?.0),
    )
}

/// Orbit of a genus-2 diagram under all four generators.
///
/// Nodes are keyed by the canonical form of the surgered torus, so two lifts
/// with equivalent projections share a node; the first lift reached (in node
/// order) is the one expanded further.
pub fn orbit_genus2(
    d: &Genus2Diagram,
    depth: usize,
    exec: Execution,
) -> Result<OrbitGraph, DiagramError> {
    explore(
        d.clone(),
        depth,
        exec,
        &[Move::D1, Move::D1Inv, Move::D2, Move::D2Inv],
        |s, g| match g {
            Move::D1 => apply_sigma1(s),
            Move::D1Inv => apply_sigma1_inverse(s),
            Move::D2 => s.sigma2(),
            Move::D2Inv => s.sigma2_inverse(),
        },
        |s| Ok(canonical_form(&s.surgery_project()?)?.0),
    )
}

impl OrbitGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let d = &n.diagram;
            let _ = write!(
                out,
                "node {} depth {} I = {} a2 = {} b2 = {} c2 = {}",
                n.id, n.depth, n.invariant, d.a2, d.b2, d.c2
            );
            match &d.monodromy {
                Monodromy::Identity => out.push_str(" mu = id\n"),
                Monodromy::Twist { core, exponent } => {
                    let _ = writeln!(out, " d = {core} k = {exponent}");
                }
            }
        }
        for e in &self.edges {
            let _ = writeln!(out, "edge {} -{}-> {}", e.from, e.generator, e.to);
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbit {\n");
        for n in &self.nodes {
            let _ = writeln!(
                out,
                "  n{} [label=\"{}: I = {}\\ndepth {}\"];",
                n.id, n.id, n.invariant, n.depth
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                e.from, e.to, e.generator
            );
        }
        out.push_str("}\n");
        out
    }
}
