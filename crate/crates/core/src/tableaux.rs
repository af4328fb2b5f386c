//! Semistandard tableaux `SStd(λ, μ)` and their degrees.
//!
//! A tableau of shape `λ` and weight `μ` sends each node of `[λ]` to a
//! distinct point of the loading `i_μ` with the same residue. Its degree is
//! the degree of the basis diagram `C_T`: solid strands run from the
//! position of each node in `i_λ` to the point it is sent to, every solid
//! strand drags a ghost `ℓ` units to its left, and each component contributes
//! a vertical red strand at `θ_m`. `C_T` has the minimal number of crossings,
//! so two strands cross exactly when their endpoint order is inverted.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{Multipartition, Node, Params, Residue};
use crate::error::{Error, Result};
use crate::exactpos::Position;
use crate::graded::GradedPoly;
use crate::loading::{charged_loading, node_position, ChargedLoading};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    shape: Multipartition,
    weight: Multipartition,
    /// One entry per node of the shape, in `Multipartition::nodes` order.
    assignment: Vec<Filling>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Filling {
    pub node: Node,
    pub target: Position,
    pub res: Residue,
}

impl Tableau {
    /// Build a tableau from a node → position map, checking that it is a
    /// residue-respecting bijection onto `i_weight`. Semistandardness is not
    /// checked here; see [`Tableau::is_semistandard`].
    pub fn from_map(
        shape: Multipartition,
        weight: Multipartition,
        targets: &HashMap<Node, Position>,
        p: &Params,
    ) -> Result<Tableau> {
        if shape.size() != weight.size() {
            return Err(Error::SizeMismatch { left: shape.size(), right: weight.size() });
        }
        let loading = charged_loading(&weight, p);
        let mut used = vec![false; loading.len()];
        let mut assignment = Vec::with_capacity(shape.size());
        for node in shape.nodes() {
            let target = targets.get(&node).ok_or_else(|| Error::Tableau(format!("node {node} has no entry")))?;
            let k = loading
                .find(target)
                .ok_or_else(|| Error::Tableau(format!("{target} is not a point of the loading of {weight}")))?;
            if std::mem::replace(&mut used[k], true) {
                return Err(Error::Tableau(format!("{target} is used twice")));
            }
            let res = loading.entries()[k].res;
            if res != p.residue(node) {
                return Err(Error::Tableau(format!("residue mismatch at node {node}")));
            }
            assignment.push(Filling { node, target: target.clone(), res });
        }
        Ok(Tableau { shape, weight, assignment })
    }

    /// The tableau `T^λ` sending every node to its own position.
    pub fn identity(lambda: &Multipartition, p: &Params) -> Tableau {
        let assignment = lambda
            .nodes()
            .into_iter()
            .map(|node| Filling { node, target: node_position(node, p), res: p.residue(node) })
            .collect();
        Tableau { shape: lambda.clone(), weight: lambda.clone(), assignment }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn weight(&self) -> &Multipartition {
        &self.weight
    }

    pub fn fillings(&self) -> &[Filling] {
        &self.assignment
    }

    pub fn get(&self, node: Node) -> Option<&Position> {
        self.assignment.iter().find(|f| f.node == node).map(|f| &f.target)
    }

    pub fn is_semistandard(&self, p: &Params) -> bool {
        let ell = p.ell as i64;
        let lookup: HashMap<Node, &Position> = self.assignment.iter().map(|f| (f.node, &f.target)).collect();
        self.assignment.iter().all(|f| {
            let Node { row, col, comp } = f.node;
            let origin_ok = (row, col) != (1, 1) || f.target > Position::from_int(p.theta[comp - 1], 0);
            let above_ok =
                row == 1 || lookup.get(&Node::new(row - 1, col, comp)).is_none_or(|a| f.target > a.shift_int(ell));
            let left_ok =
                col == 1 || lookup.get(&Node::new(row, col - 1, comp)).is_none_or(|l| f.target > l.shift_int(-ell));
            origin_ok && above_ok && left_ok
        })
    }
}

impl fmt::Display for Tableau {
    /// One `node → position` line per node.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fill in &self.assignment {
            writeln!(f, "{} → {}", fill.node, fill.target)?;
        }
        Ok(())
    }
}

/// All semistandard tableaux of shape `shape` and weight `weight`, in
/// lexicographic order of the filling sequence.
///
/// Backtracks over the nodes of the shape in row-major order so that the
/// nodes above and to the left of the current node are already filled.
pub fn enumerate_sstd(shape: &Multipartition, weight: &Multipartition, p: &Params) -> Result<Vec<Tableau>> {
    if shape.size() != weight.size() {
        return Err(Error::SizeMismatch { left: shape.size(), right: weight.size() });
    }
    shape.check_level(p.ell)?;
    weight.check_level(p.ell)?;

    let nodes = shape.nodes();
    let loading = charged_loading(weight, p);
    let ell = p.ell as i64;

    let mut need: HashMap<Residue, usize> = HashMap::new();
    for &node in &nodes {
        *need.entry(p.residue(node)).or_default() += 1;
    }
    let mut have: HashMap<Residue, usize> = HashMap::new();
    for e in loading.entries() {
        *have.entry(e.res).or_default() += 1;
    }
    if need != have {
        return Ok(Vec::new());
    }

    let index: HashMap<Node, usize> = nodes.iter().enumerate().map(|(k, &n)| (n, k)).collect();
    let steps: Vec<Step> = nodes
        .iter()
        .map(|&node| {
            let res = p.residue(node);
            Step {
                candidates: (0..loading.len()).filter(|&k| loading.entries()[k].res == res).collect(),
                origin: (node.row == 1 && node.col == 1).then(|| Position::from_int(p.theta[node.comp - 1], 0)),
                above: (node.row > 1).then(|| index[&Node::new(node.row - 1, node.col, node.comp)]),
                left: (node.col > 1).then(|| index[&Node::new(node.row, node.col - 1, node.comp)]),
            }
        })
        .collect();
    let plus_ell: Vec<Position> = loading.entries().iter().map(|e| e.pos.shift_int(ell)).collect();
    let minus_ell: Vec<Position> = loading.entries().iter().map(|e| e.pos.shift_int(-ell)).collect();

    let search = Search { steps: &steps, loading: &loading, plus_ell: &plus_ell, minus_ell: &minus_ell };
    let mut chosen = Vec::with_capacity(nodes.len());
    let mut used = vec![false; loading.len()];
    let mut found = Vec::new();
    search.run(&mut chosen, &mut used, &mut found);

    Ok(found
        .into_iter()
        .map(|choice| Tableau {
            shape: shape.clone(),
            weight: weight.clone(),
            assignment: nodes
                .iter()
                .zip(choice)
                .map(|(&node, k)| {
                    let e = &loading.entries()[k];
                    Filling { node, target: e.pos.clone(), res: e.res }
                })
                .collect(),
        })
        .collect())
}

struct Step {
    candidates: Vec<usize>,
    origin: Option<Position>,
    above: Option<usize>,
    left: Option<usize>,
}

struct Search<'a> {
    steps: &'a [Step],
    loading: &'a ChargedLoading,
    plus_ell: &'a [Position],
    minus_ell: &'a [Position],
}

impl Search<'_> {
    fn run(&self, chosen: &mut Vec<usize>, used: &mut [bool], found: &mut Vec<Vec<usize>>) {
        let depth = chosen.len();
        if depth == self.steps.len() {
            found.push(chosen.clone());
            return;
        }
        let step = &self.steps[depth];
        for &k in &step.candidates {
            if used[k] {
                continue;
            }
            let pos = &self.loading.entries()[k].pos;
            if step.origin.as_ref().is_some_and(|o| pos <= o) {
                continue;
            }
            if step.above.is_some_and(|a| pos <= &self.plus_ell[chosen[a]]) {
                continue;
            }
            if step.left.is_some_and(|l| pos <= &self.minus_ell[chosen[l]]) {
                continue;
            }
            used[k] = true;
            chosen.push(k);
            self.run(chosen, used, found);
            chosen.pop();
            used[k] = false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strand {
    pub node: Node,
    pub label: Residue,
    pub bottom: Position,
    pub top: Position,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RedStrand {
    pub comp: usize,
    pub label: Residue,
    pub x: Position,
}

/// Endpoint data of `C_T`. Ghosts are implicit: each solid strand's ghost
/// has both endpoints shifted by `-ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandDiagram {
    pub ell: usize,
    pub strands: Vec<Strand>,
    pub reds: Vec<RedStrand>,
}

impl StrandDiagram {
    pub fn ghost_bottom(&self, k: usize) -> Position {
        self.strands[k].bottom.shift_int(-(self.ell as i64))
    }

    pub fn ghost_top(&self, k: usize) -> Position {
        self.strands[k].top.shift_int(-(self.ell as i64))
    }

    pub fn is_vertical(&self) -> bool {
        self.strands.iter().all(|s| s.bottom == s.top)
    }
}

pub fn build_diagram(t: &Tableau, p: &Params) -> StrandDiagram {
    let strands = t
        .assignment
        .iter()
        .map(|f| Strand { node: f.node, label: f.res, bottom: node_position(f.node, p), top: f.target.clone() })
        .collect();
    let reds = (0..p.ell)
        .map(|m| RedStrand { comp: m + 1, label: p.e.reduce(p.kappa[m]), x: Position::from_int(p.theta[m], 0) })
        .collect();
    StrandDiagram { ell: p.ell, strands, reds }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    /// Index of the solid strand.
    pub solid: usize,
    /// Index of the other solid strand, of the strand whose ghost is
    /// crossed, or of the red strand.
    pub other: usize,
    pub solid_label: Residue,
    pub other_label: Residue,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub solid_solid: Vec<Crossing>,
    pub solid_ghost: Vec<Crossing>,
    pub solid_red: Vec<Crossing>,
}

impl CrossingReport {
    /// `-2` per equal-label solid crossing, `+1` per solid `i` over ghost
    /// `i-1`, `+1` per solid crossing a red strand of the same label.
    pub fn degree(&self, p: &Params) -> i64 {
        let ss = self.solid_solid.iter().filter(|c| c.solid_label == c.other_label).count() as i64;
        let sg = self.solid_ghost.iter().filter(|c| c.other_label == p.predecessor(c.solid_label)).count() as i64;
        let sr = self.solid_red.iter().filter(|c| c.solid_label == c.other_label).count() as i64;
        -2 * ss + sg + sr
    }

    pub fn total(&self) -> usize {
        self.solid_solid.len() + self.solid_ghost.len() + self.solid_red.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Thread {
    Solid(usize),
    Ghost(usize),
    Red(usize),
}

/// Crossings of the minimal diagram with the given endpoints.
///
/// All solid, ghost and red threads are laid out in bottom order and
/// bubble-sorted into top order; every adjacent transposition is one
/// crossing of a reduced drawing, so no pair is counted twice.
pub fn count_crossings(d: &StrandDiagram) -> Result<CrossingReport> {
    let mut threads: Vec<(Thread, Position, Position)> = Vec::new();
    for (k, s) in d.strands.iter().enumerate() {
        threads.push((Thread::Solid(k), s.bottom.clone(), s.top.clone()));
        threads.push((Thread::Ghost(k), d.ghost_bottom(k), d.ghost_top(k)));
    }
    for (m, r) in d.reds.iter().enumerate() {
        threads.push((Thread::Red(m), r.x.clone(), r.x.clone()));
    }

    let describe = |t: Thread| match t {
        Thread::Solid(k) => format!("solid strand of node {}", d.strands[k].node),
        Thread::Ghost(k) => format!("ghost of node {}", d.strands[k].node),
        Thread::Red(m) => format!("red strand {}", d.reds[m].comp),
    };
    let mut by_bottom: Vec<usize> = (0..threads.len()).collect();
    by_bottom.sort_by(|&a, &b| threads[a].1.cmp(&threads[b].1));
    let mut by_top: Vec<usize> = (0..threads.len()).collect();
    by_top.sort_by(|&a, &b| threads[a].2.cmp(&threads[b].2));
    for (order, end, pick) in [(&by_bottom, "bottom", 1usize), (&by_top, "top", 2)] {
        for w in order.windows(2) {
            let (x, y) = (&threads[w[0]], &threads[w[1]]);
            let (px, py) = if pick == 1 { (&x.1, &y.1) } else { (&x.2, &y.2) };
            if px == py {
                return Err(Error::CoincidentEndpoints(format!(
                    "{} and {} share the {end} coordinate {px}",
                    describe(x.0),
                    describe(y.0)
                )));
            }
        }
    }

    let mut top_rank = vec![0usize; threads.len()];
    for (rank, &t) in by_top.iter().enumerate() {
        top_rank[t] = rank;
    }
    let mut line: Vec<usize> = by_bottom;
    let mut report = CrossingReport::default();
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 0..line.len().saturating_sub(1) {
            if top_rank[line[i]] > top_rank[line[i + 1]] {
                line.swap(i, i + 1);
                sorted = false;
                record(d, threads[line[i]].0, threads[line[i + 1]].0, &mut report);
            }
        }
    }
    Ok(report)
}

fn record(d: &StrandDiagram, a: Thread, b: Thread, report: &mut CrossingReport) {
    let label = |k: usize| d.strands[k].label;
    let (a, b) = match (a, b) {
        (Thread::Solid(_), _) => (a, b),
        _ => (b, a),
    };
    match (a, b) {
        (Thread::Solid(x), Thread::Solid(y)) => {
            let (x, y) = (x.min(y), x.max(y));
            report.solid_solid.push(Crossing { solid: x, other: y, solid_label: label(x), other_label: label(y) });
        }
        (Thread::Solid(x), Thread::Ghost(y)) => {
            report.solid_ghost.push(Crossing { solid: x, other: y, solid_label: label(x), other_label: label(y) });
        }
        (Thread::Solid(x), Thread::Red(m)) => {
            report.solid_red.push(Crossing { solid: x, other: m, solid_label: label(x), other_label: d.reds[m].label });
        }
        // Ghost/ghost and ghost/red crossings carry no degree.
        _ => {}
    }
}

/// `deg(T) = deg(C_T)`.
///
/// Panics if the diagram has coincident endpoints, which the weighting
/// condition rules out for tableaux built by this crate.
pub fn tableau_degree(t: &Tableau, p: &Params) -> i64 {
    let d = build_diagram(t, p);
    count_crossings(&d).expect("tableau diagrams have distinct endpoints").degree(p)
}

/// `Σ_{T ∈ SStd(λ, μ)} t^{deg T}`.
pub fn sstd_generating_poly(shape: &Multipartition, weight: &Multipartition, p: &Params) -> Result<GradedPoly> {
    let mut poly = GradedPoly::zero();
    for t in enumerate_sstd(shape, weight, p)? {
        poly.add_term(tableau_degree(&t, p), 1);
    }
    Ok(poly)
}
