//! θ-diagonal cuts.
//!
//! A vertical line `x = a` splits the loading of a multipartition into three
//! regions: the left part `L_a` (positions below `a − ℓ`), the diagonal band
//! `I_a` (positions in `(a − ℓ, a)`) and the right part `R_a` (above `a`).
//! Within one component the band meets at most one diagonal of the Young
//! diagram, because node positions on a diagonal share their rational part
//! and consecutive diagonals are `ℓ` apart.
//!
//! A pair `(λ, μ)` admits the cut when both have the same band entries and
//! the same number of left and right entries. Cutting then replaces `λ` by
//! the smallest multipartitions `λ^L ⊇ I ∪ L` and `λ^R ⊇ I ∪ R`, which share
//! an `r × c` rectangle hanging off the highest diagonal node `(r, c, m)`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Multipartition, Node, Params};
use crate::error::{Error, Result};
use crate::exactpos::{is_integer, is_multiple_of, Position};
use crate::graded::GradedPoly;
use crate::loading::{charged_loading, node_position, ChargedLoading, DominancePoset};
use crate::tableaux::{enumerate_sstd, sstd_generating_poly, tableau_degree, Tableau};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutMode {
    /// Reject any `a` (or `a − ℓ`) equal to the rational part of a node
    /// position that some multipartition of `n` can have.
    Strict,
    /// Accept any rational `a`; exact ε-comparison keeps the classification
    /// unambiguous.
    #[default]
    Lenient,
}

impl std::str::FromStr for CutMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(CutMode::Strict),
            "lenient" => Ok(CutMode::Lenient),
            _ => Err(Error::Parse(format!("cut mode must be strict or lenient, got {s:?}"))),
        }
    }
}

impl fmt::Display for CutMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutMode::Strict => "strict",
            CutMode::Lenient => "lenient",
        })
    }
}

/// A cut abscissa `a` (with no ε part) and its validation mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCut", into = "RawCut")]
pub struct CutSpec {
    a: Position,
    mode: CutMode,
}

#[derive(Serialize, Deserialize)]
struct RawCut {
    a: Position,
    #[serde(default)]
    mode: CutMode,
}

impl TryFrom<RawCut> for CutSpec {
    type Error = Error;

    fn try_from(raw: RawCut) -> Result<Self> {
        CutSpec::new(raw.a, raw.mode)
    }
}

impl From<CutSpec> for RawCut {
    fn from(c: CutSpec) -> Self {
        RawCut { a: c.a, mode: c.mode }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Left,
    Diagonal,
    Right,
}

impl CutSpec {
    pub fn new(a: Position, mode: CutMode) -> Result<Self> {
        if a.eps() != 0 {
            return Err(Error::InvalidCut(format!("cut abscissa {a} has an ε part")));
        }
        Ok(CutSpec { a, mode })
    }

    pub fn lenient(a: BigRational) -> Self {
        CutSpec { a: Position::rational(a), mode: CutMode::Lenient }
    }

    pub fn strict(a: BigRational) -> Self {
        CutSpec { a: Position::rational(a), mode: CutMode::Strict }
    }

    pub fn parse(a: &str, mode: CutMode) -> Result<Self> {
        CutSpec::new(a.parse()?, mode)
    }

    pub fn a(&self) -> &BigRational {
        self.a.base()
    }

    pub fn position(&self) -> &Position {
        &self.a
    }

    pub fn mode(&self) -> CutMode {
        self.mode
    }

    /// In strict mode, neither `a` nor `a − ℓ` may coincide with the
    /// rational part `θ_m + ℓd` (`|d| < n`) of a possible node position.
    pub fn validate(&self, n: usize, p: &Params) -> Result<()> {
        if self.mode == CutMode::Lenient || n == 0 {
            return Ok(());
        }
        let ell = BigRational::from_integer(BigInt::from(p.ell));
        let bound = BigRational::from_integer(BigInt::from(n as i64 - 1));
        for (m, &theta) in p.theta.iter().enumerate() {
            let theta = BigRational::from_integer(BigInt::from(theta));
            for (label, x) in [("a", self.a().clone()), ("a - ell", self.a() - &ell)] {
                let offset = &x - &theta;
                if is_integer(&offset) && is_multiple_of(&offset, p.ell as i64) {
                    let d = &offset / &ell;
                    if d <= bound && -d.clone() <= bound {
                        return Err(Error::InvalidCut(format!(
                            "{label} = {x} is the x-coordinate of a node on diagonal {d} of component {}",
                            m + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn region(&self, pos: &Position, ell: usize) -> Region {
        if pos > &self.a {
            Region::Right
        } else if pos > &self.a.shift_int(-(ell as i64)) {
            Region::Diagonal
        } else {
            Region::Left
        }
    }
}

impl fmt::Display for CutSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x = {} ({})", self.a, self.mode)
    }
}

/// `I_a(λ)`, `L_a(λ)` and `R_a(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutDecomposition {
    pub diagonal: ChargedLoading,
    pub left: ChargedLoading,
    pub right: ChargedLoading,
    /// Components whose red line `θ_m` falls strictly inside `(a − ℓ, a)`.
    pub red_lines_in_band: Vec<usize>,
}

pub fn diagonal_sets(lambda: &Multipartition, cut: &CutSpec, p: &Params) -> Result<CutDecomposition> {
    lambda.check_level(p.ell)?;
    cut.validate(lambda.size(), p)?;
    let (mut diagonal, mut left, mut right) = (Vec::new(), Vec::new(), Vec::new());
    for entry in charged_loading(lambda, p).entries() {
        match cut.region(&entry.pos, p.ell) {
            Region::Left => left.push(entry.clone()),
            Region::Diagonal => diagonal.push(entry.clone()),
            Region::Right => right.push(entry.clone()),
        }
    }
    Ok(CutDecomposition {
        diagonal: ChargedLoading::from_entries(diagonal),
        left: ChargedLoading::from_entries(left),
        right: ChargedLoading::from_entries(right),
        red_lines_in_band: red_lines_in_band(cut, p),
    })
}

pub fn red_lines_in_band(cut: &CutSpec, p: &Params) -> Vec<usize> {
    let low = cut.position().shift_int(-(p.ell as i64));
    p.theta
        .iter()
        .enumerate()
        .filter(|(_, &t)| {
            let x = Position::from_int(t, 0);
            low < x && &x < cut.position()
        })
        .map(|(m, _)| m + 1)
        .collect()
}

/// `I_a(λ) = I_a(μ)`, `|L_a(λ)| = |L_a(μ)|` and `|R_a(λ)| = |R_a(μ)|`.
pub fn admits_cut(lambda: &Multipartition, mu: &Multipartition, cut: &CutSpec, p: &Params) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let x = diagonal_sets(lambda, cut, p)?;
    let y = diagonal_sets(mu, cut, p)?;
    Ok(same_cut_profile(&x, &y))
}

fn same_cut_profile(x: &CutDecomposition, y: &CutDecomposition) -> bool {
    x.diagonal.charged_points() == y.diagonal.charged_points()
        && x.left.len() == y.left.len()
        && x.right.len() == y.right.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPieces {
    pub left: Multipartition,
    pub right: Multipartition,
}

/// `λ ↦ (λ^L, λ^R)`.
///
/// A component meeting the band at a highest node `(r, c, m)` keeps its first
/// `r` rows on the left and becomes `(c^r, λ_{r+1}, …)` on the right. A
/// component missing the band lies wholly on one side and is empty on the
/// other.
pub fn split(lambda: &Multipartition, cut: &CutSpec, p: &Params) -> Result<SplitPieces> {
    lambda.check_level(p.ell)?;
    cut.validate(lambda.size(), p)?;
    let mut left = Vec::with_capacity(p.ell);
    let mut right = Vec::with_capacity(p.ell);
    for m in 1..=p.ell {
        let part = lambda.component(m);
        let nodes: Vec<Node> = lambda.nodes().into_iter().filter(|n| n.comp == m).collect();
        let highest = nodes
            .iter()
            .filter(|&&n| cut.region(&node_position(n, p), p.ell) == Region::Diagonal)
            .max_by_key(|n| n.row + n.col);
        match highest {
            Some(&Node { row, col, .. }) => {
                left.push(part[..row].to_vec());
                let mut r = vec![col; row];
                r.extend_from_slice(&part[row..]);
                right.push(r);
            }
            None if nodes.is_empty() => {
                left.push(Vec::new());
                right.push(Vec::new());
            }
            None => {
                let side = cut.region(&node_position(nodes[0], p), p.ell);
                debug_assert!(nodes.iter().all(|&n| cut.region(&node_position(n, p), p.ell) == side));
                if side == Region::Left {
                    left.push(part.to_vec());
                    right.push(Vec::new());
                } else {
                    left.push(Vec::new());
                    right.push(part.to_vec());
                }
            }
        }
    }
    Ok(SplitPieces { left: Multipartition::from_components(left), right: Multipartition::from_components(right) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPair {
    pub lambda_left: Multipartition,
    pub mu_left: Multipartition,
    pub lambda_right: Multipartition,
    pub mu_right: Multipartition,
    pub n_left: usize,
    pub n_right: usize,
}

pub fn split_pair(lambda: &Multipartition, mu: &Multipartition, cut: &CutSpec, p: &Params) -> Result<SplitPair> {
    if !admits_cut(lambda, mu, cut, p)? {
        return Err(Error::NoCut(cut.position().to_string()));
    }
    let l = split(lambda, cut, p)?;
    let m = split(mu, cut, p)?;
    if l.left.size() != m.left.size() || l.right.size() != m.right.size() {
        return Err(Error::InvalidCut(format!("pieces of {lambda} and {mu} have different sizes")));
    }
    Ok(SplitPair {
        n_left: l.left.size(),
        n_right: l.right.size(),
        lambda_left: l.left,
        mu_left: m.left,
        lambda_right: l.right,
        mu_right: m.right,
    })
}

/// `Λ_a` relative to a reference multipartition, with its saturated and
/// cosaturated closures in the θ-dominance order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSet {
    pub reference: Multipartition,
    pub cut: CutSpec,
    pub members: Vec<Multipartition>,
    pub saturated: Vec<Multipartition>,
    pub cosaturated: Vec<Multipartition>,
}

impl CutSet {
    pub fn contains(&self, mu: &Multipartition) -> bool {
        self.members.binary_search(mu).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn lambda_set(lambda: &Multipartition, cut: &CutSpec, p: &Params) -> Result<CutSet> {
    let poset = DominancePoset::new(lambda.size(), p);
    lambda_set_in(&poset, lambda, cut, p)
}

/// [`lambda_set`] over an already materialized poset of all multipartitions
/// of `|λ|`.
pub fn lambda_set_in(poset: &DominancePoset, lambda: &Multipartition, cut: &CutSpec, p: &Params) -> Result<CutSet> {
    lambda.check_level(p.ell)?;
    let reference = diagonal_sets(lambda, cut, p)?;
    let flags: Vec<bool> = poset
        .elements()
        .par_iter()
        .map(|mu| {
            let d = diagonal_sets(mu, cut, p).expect("cut already validated for this size");
            same_cut_profile(&reference, &d)
        })
        .collect();
    let indices: Vec<usize> = (0..poset.len()).filter(|&k| flags[k]).collect();
    let pick = |ix: Vec<usize>| ix.into_iter().map(|k| poset.elements()[k].clone()).collect();
    Ok(CutSet {
        reference: lambda.clone(),
        cut: cut.clone(),
        members: pick(indices.clone()),
        saturated: pick(poset.saturated_closure(&indices)),
        cosaturated: pick(poset.cosaturated_closure(&indices)),
    })
}

fn indices_in(poset: &DominancePoset, q: &[Multipartition]) -> Result<Vec<usize>> {
    q.iter()
        .map(|mu| poset.index_of(mu).ok_or_else(|| Error::Multipartition(format!("{mu} is not in the poset"))))
        .collect()
}

/// Smallest saturated (downward closed) set of multipartitions containing `q`.
pub fn saturated_closure(q: &[Multipartition], p: &Params) -> Result<Vec<Multipartition>> {
    let Some(first) = q.first() else { return Ok(Vec::new()) };
    let poset = DominancePoset::new(first.size(), p);
    let ix = indices_in(&poset, q)?;
    Ok(poset.saturated_closure(&ix).into_iter().map(|k| poset.elements()[k].clone()).collect())
}

/// Smallest cosaturated (upward closed) set of multipartitions containing `q`.
pub fn cosaturated_closure(q: &[Multipartition], p: &Params) -> Result<Vec<Multipartition>> {
    let Some(first) = q.first() else { return Ok(Vec::new()) };
    let poset = DominancePoset::new(first.size(), p);
    let ix = indices_in(&poset, q)?;
    Ok(poset.cosaturated_closure(&ix).into_iter().map(|k| poset.elements()[k].clone()).collect())
}

/// `S ↦ (S^L, S^R)`: on `[μ^L]` keep `S` left of `a` and fill every node
/// right of `a` with its own position; symmetrically for `[μ^R]`.
pub fn split_tableau(t: &Tableau, cut: &CutSpec, p: &Params) -> Result<(Tableau, Tableau)> {
    let pieces = split_pair(t.shape(), t.weight(), cut, p).map_err(|e| match e {
        Error::NoCut(_) => {
            Error::Tableau(format!("shape {} and weight {} do not admit the cut {cut}", t.shape(), t.weight()))
        }
        other => other,
    })?;
    let half = |shape: &Multipartition, keep: Region| -> Result<HashMap<Node, Position>> {
        shape
            .nodes()
            .into_iter()
            .map(|node| {
                let own = node_position(node, p);
                let kept = match keep {
                    Region::Left => own < *cut.position(),
                    _ => own > *cut.position(),
                };
                let target = if kept {
                    t.get(node).cloned().ok_or_else(|| Error::Tableau(format!("node {node} is not in the shape")))?
                } else {
                    own
                };
                Ok((node, target))
            })
            .collect()
    };
    let left_map = half(&pieces.lambda_left, Region::Left)?;
    let right_map = half(&pieces.lambda_right, Region::Right)?;
    let left = Tableau::from_map(pieces.lambda_left, pieces.mu_left, &left_map, p)?;
    let right = Tableau::from_map(pieces.lambda_right, pieces.mu_right, &right_map, p)?;
    Ok((left, right))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub count: usize,
    pub left_count: usize,
    pub right_count: usize,
    pub injective: bool,
    pub lands_in_product: bool,
    pub surjective: bool,
    pub bijective: bool,
    pub degree_additive: bool,
    pub failures: Vec<String>,
}

/// Check that `T ↦ (T^L, T^R)` is a degree-additive bijection
/// `SStd(μ, ν) → SStd(μ^L, ν^L) × SStd(μ^R, ν^R)`, enumerating all three
/// sets independently.
pub fn verify_tableau_bijection(
    mu: &Multipartition,
    nu: &Multipartition,
    cut: &CutSpec,
    p: &Params,
) -> Result<BijectionReport> {
    let pieces = split_pair(mu, nu, cut, p)?;
    let all = enumerate_sstd(mu, nu, p)?;
    let lefts: HashSet<Tableau> = enumerate_sstd(&pieces.lambda_left, &pieces.mu_left, p)?.into_iter().collect();
    let rights: HashSet<Tableau> = enumerate_sstd(&pieces.lambda_right, &pieces.mu_right, p)?.into_iter().collect();

    let mut failures = Vec::new();
    let mut image: HashSet<(Tableau, Tableau)> = HashSet::new();
    let mut lands = true;
    let mut additive = true;
    for t in &all {
        match split_tableau(t, cut, p) {
            Ok((tl, tr)) => {
                if !lefts.contains(&tl) || !rights.contains(&tr) {
                    lands = false;
                    failures.push(format!("split of a tableau is not semistandard:\n{t}"));
                }
                let (d, dl, dr) = (tableau_degree(t, p), tableau_degree(&tl, p), tableau_degree(&tr, p));
                if d != dl + dr {
                    additive = false;
                    failures.push(format!("degree {d} != {dl} + {dr} for tableau:\n{t}"));
                }
                image.insert((tl, tr));
            }
            Err(e) => {
                lands = false;
                failures.push(e.to_string());
            }
        }
    }
    let injective = image.len() == all.len();
    let surjective = lands && image.len() == lefts.len() * rights.len();
    if !injective {
        failures.push(format!("{} tableaux have only {} distinct splits", all.len(), image.len()));
    }
    if !surjective {
        failures.push(format!("image has {} elements, product has {}", image.len(), lefts.len() * rights.len()));
    }
    Ok(BijectionReport {
        count: all.len(),
        left_count: lefts.len(),
        right_count: rights.len(),
        injective,
        lands_in_product: lands,
        surjective,
        bijective: injective && lands && surjective,
        degree_additive: additive,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexBijectionReport {
    pub lambda_left: Multipartition,
    pub lambda_right: Multipartition,
    pub size: usize,
    pub left_size: usize,
    pub right_size: usize,
    pub injective: bool,
    pub onto_product: bool,
}

/// Compare `μ ↦ (μ^L, μ^R)` on `Λ_a` against `Λ^L_a × Λ^R_a` computed from
/// `λ^L` and `λ^R`.
pub fn verify_index_bijection(set: &CutSet, p: &Params) -> Result<IndexBijectionReport> {
    let cut = &set.cut;
    let reference = split(&set.reference, cut, p)?;
    let left_set = lambda_set(&reference.left, cut, p)?;
    let right_set = lambda_set(&reference.right, cut, p)?;
    let image: BTreeSet<(Multipartition, Multipartition)> =
        set.members.iter().map(|mu| split(mu, cut, p).map(|s| (s.left, s.right))).collect::<Result<_>>()?;
    let product: BTreeSet<(Multipartition, Multipartition)> =
        left_set.members.iter().flat_map(|l| right_set.members.iter().map(move |r| (l.clone(), r.clone()))).collect();
    Ok(IndexBijectionReport {
        lambda_left: reference.left,
        lambda_right: reference.right,
        size: set.len(),
        left_size: left_set.len(),
        right_size: right_set.len(),
        injective: image.len() == set.len(),
        onto_product: image == product,
    })
}

/// Graded dimension of the subquotient algebra indexed by a cut set:
/// `Σ_{α,β,γ} P(α,β) · P(α,γ)` with `P` the tableau generating polynomial,
/// evaluated as `Σ_α (Σ_β P(α,β))²`.
pub fn subquotient_graded_dim(set: &CutSet, p: &Params) -> Result<GradedPoly> {
    let rows: Vec<GradedPoly> = set
        .members
        .par_iter()
        .map(|alpha| {
            set.members
                .iter()
                .map(|beta| sstd_generating_poly(alpha, beta, p))
                .sum::<Result<GradedPoly>>()
                .map(|row| &row * &row)
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().sum())
}
