//! Charged loadings and the θ-dominance order.
//!
//! Node `(r, c, m)` sits at `θ_m + ℓ(r − c) + (r + c)ε` in the Russian
//! array. The weighting condition (no two `θ` in the same class mod `ℓ`)
//! separates components, and within a component `(r − c, r + c)` determines
//! the node, so all positions of one multipartition are distinct.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{enumerate_multipartitions, Multipartition, Node, Params, Residue};
use crate::error::{Error, Result};
use crate::exactpos::Position;

pub fn node_position(node: Node, p: &Params) -> Position {
    let ell = p.ell as i64;
    let base = p.theta[node.comp - 1] + ell * (node.row as i64 - node.col as i64);
    Position::from_int(base, (node.row + node.col) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LoadingEntry {
    pub pos: Position,
    pub res: Residue,
    pub node: Node,
}

/// Position/residue pairs of a multipartition, sorted by position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ChargedLoading {
    entries: Vec<LoadingEntry>,
}

impl ChargedLoading {
    /// Sorts the entries; positions must be pairwise distinct.
    pub fn from_entries(mut entries: Vec<LoadingEntry>) -> Self {
        entries.sort_by(|a, b| a.pos.cmp(&b.pos));
        debug_assert!(entries.windows(2).all(|w| w[0].pos < w[1].pos));
        ChargedLoading { entries }
    }

    pub fn entries(&self) -> &[LoadingEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn residues(&self) -> Vec<Residue> {
        self.entries.iter().map(|e| e.res).collect()
    }

    /// Index of the entry at exactly `pos`, if any.
    pub fn find(&self, pos: &Position) -> Option<usize> {
        self.entries.binary_search_by(|e| e.pos.cmp(pos)).ok()
    }

    /// `(position, residue)` pairs, forgetting the originating nodes.
    pub fn charged_points(&self) -> Vec<(&Position, Residue)> {
        self.entries.iter().map(|e| (&e.pos, e.res)).collect()
    }

    fn positions_of(&self, r: Residue) -> impl Iterator<Item = &Position> {
        self.entries.iter().filter(move |e| e.res == r).map(|e| &e.pos)
    }

    /// Whether this loading dominates `other`: `r`-dominates for every residue.
    pub fn dominates(&self, other: &ChargedLoading) -> bool {
        let residues: BTreeSet<Residue> = self.entries.iter().chain(&other.entries).map(|e| e.res).collect();
        residues.into_iter().all(|r| r_dominates(self, other, r))
    }
}

pub fn charged_loading(lambda: &Multipartition, p: &Params) -> ChargedLoading {
    let entries = lambda
        .nodes()
        .into_iter()
        .map(|node| LoadingEntry { pos: node_position(node, p), res: p.residue(node), node })
        .collect();
    ChargedLoading::from_entries(entries)
}

pub fn residue_sequence(lambda: &Multipartition, p: &Params) -> Vec<Residue> {
    charged_loading(lambda, p).residues()
}

/// For every threshold `a`, `i` has at least as many residue-`r` points left
/// of `a` as `j` does.
///
/// Prefix counts only change at points of either loading, so it suffices to
/// test thresholds just to the right of each event point.
pub fn r_dominates(i: &ChargedLoading, j: &ChargedLoading, r: Residue) -> bool {
    let mut left = i.positions_of(r).peekable();
    let mut right = j.positions_of(r).peekable();
    let (mut count_i, mut count_j) = (0usize, 0usize);
    loop {
        let next = match (left.peek(), right.peek()) {
            (None, None) => return true,
            (Some(x), None) => (*x).clone(),
            (None, Some(y)) => (*y).clone(),
            (Some(x), Some(y)) => std::cmp::min(*x, *y).clone(),
        };
        while left.next_if(|x| **x <= next).is_some() {
            count_i += 1;
        }
        while right.next_if(|y| **y <= next).is_some() {
            count_j += 1;
        }
        if count_i < count_j {
            return false;
        }
    }
}

/// `μ ⊴_θ λ`, i.e. `i_λ` dominates `i_μ`.
pub fn theta_dominates(lambda: &Multipartition, mu: &Multipartition, p: &Params) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    Ok(charged_loading(lambda, p).dominates(&charged_loading(mu, p)))
}

/// The θ-dominance order on all ℓ-multipartitions of `n`, materialized as a
/// relation matrix.
#[derive(Clone, Debug)]
pub struct DominancePoset {
    elements: Vec<Multipartition>,
    // geq[a * len + b]: elements[a] θ-dominates elements[b]
    geq: Vec<bool>,
}

impl DominancePoset {
    pub fn new(n: usize, p: &Params) -> Self {
        Self::from_elements(enumerate_multipartitions(n, p.ell), p)
    }

    pub fn from_elements(elements: Vec<Multipartition>, p: &Params) -> Self {
        let loadings: Vec<ChargedLoading> = elements.par_iter().map(|l| charged_loading(l, p)).collect();
        let len = elements.len();
        let geq = (0..len * len)
            .into_par_iter()
            .map(|k| {
                let (a, b) = (k / len, k % len);
                a == b || loadings[a].dominates(&loadings[b])
            })
            .collect();
        DominancePoset { elements, geq }
    }

    pub fn elements(&self) -> &[Multipartition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, lambda: &Multipartition) -> Option<usize> {
        self.elements.binary_search(lambda).ok()
    }

    /// `elements[a]` θ-dominates `elements[b]`.
    pub fn geq(&self, a: usize, b: usize) -> bool {
        self.geq[a * self.elements.len() + b]
    }

    pub fn gt(&self, a: usize, b: usize) -> bool {
        a != b && self.geq(a, b)
    }

    /// Smallest downward-closed superset of `q` (indices, sorted).
    pub fn saturated_closure(&self, q: &[usize]) -> Vec<usize> {
        self.close(q, |poset, member, candidate| poset.geq(member, candidate))
    }

    /// Smallest upward-closed superset of `q` (indices, sorted).
    pub fn cosaturated_closure(&self, q: &[usize]) -> Vec<usize> {
        self.close(q, |poset, member, candidate| poset.geq(candidate, member))
    }

    // Fixed-point iteration: keep adding anything related to a current member
    // until nothing changes.
    fn close(&self, q: &[usize], related: impl Fn(&Self, usize, usize) -> bool) -> Vec<usize> {
        let mut inside = vec![false; self.len()];
        let mut frontier: Vec<usize> = q.to_vec();
        for &a in q {
            inside[a] = true;
        }
        while let Some(member) = frontier.pop() {
            for (candidate, seen) in inside.iter_mut().enumerate() {
                if !*seen && related(self, member, candidate) {
                    *seen = true;
                    frontier.push(candidate);
                }
            }
        }
        (0..self.len()).filter(|&k| inside[k]).collect()
    }

    pub fn is_saturated(&self, q: &[usize]) -> bool {
        q.iter().all(|&a| (0..self.len()).all(|b| !self.geq(a, b) || q.contains(&b)))
    }

    pub fn is_cosaturated(&self, q: &[usize]) -> bool {
        q.iter().all(|&a| (0..self.len()).all(|b| !self.geq(b, a) || q.contains(&b)))
    }
}
