//! Multipartitions, nodes and residues.

use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::{Error, Result};

/// The quantum characteristic `e`: an integer `≥ 3` or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Finite(u32),
    Infinite,
}

impl Characteristic {
    /// Reduce an integer residue to its canonical representative.
    pub fn reduce(self, value: i64) -> Residue {
        match self {
            Characteristic::Finite(e) => Residue(value.rem_euclid(e as i64)),
            Characteristic::Infinite => Residue(value),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Finite(e) => write!(f, "{e}"),
            Characteristic::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Characteristic::Finite(e) => serializer.serialize_u32(*e),
            Characteristic::Infinite => serializer.serialize_str("infinity"),
        }
    }
}

impl<'de> Deserialize<'de> for Characteristic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(e) if e >= 3 => Ok(Characteristic::Finite(e)),
            Raw::Int(e) => Err(de::Error::custom(format!("e must be at least 3, got {e}"))),
            Raw::Text(s) if s == "infinity" => Ok(Characteristic::Infinite),
            Raw::Text(s) => Err(de::Error::custom(format!("e must be an integer or \"infinity\", got {s:?}"))),
        }
    }
}

/// A residue in `ℤ/eℤ`, stored as its canonical representative
/// (`0..e` for finite `e`, any integer otherwise).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(pub i64);

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Size, level, characteristic, weighting and multicharge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub ell: usize,
    pub e: Characteristic,
    pub theta: Vec<i64>,
    pub kappa: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParamsViolation {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("theta has {found} entries but ell = {ell}")]
    ThetaLength { ell: usize, found: usize },
    #[error("kappa has {found} entries but ell = {ell}")]
    KappaLength { ell: usize, found: usize },
    #[error("theta is not strictly increasing at index {index}")]
    NotIncreasing { index: usize },
    #[error("theta[{j}] - theta[{i}] = {diff} lies in {ell}Z")]
    DifferenceInEllZ { i: usize, j: usize, diff: i64, ell: usize },
    #[error("kappa[{index}] = {value} is not a canonical residue mod {e}")]
    ResidueOutOfRange { index: usize, value: i64, e: u32 },
    #[error("quantum characteristic e = {e} must be at least 3")]
    CharacteristicTooSmall { e: u32 },
}

impl Params {
    pub fn new(n: usize, e: Characteristic, theta: Vec<i64>, kappa: Vec<i64>) -> Result<Self> {
        let p = Params { n, ell: theta.len(), e, theta, kappa };
        p.validate()?;
        Ok(p)
    }

    /// Check the weighting and multicharge, reporting the first violation.
    pub fn validate(&self) -> std::result::Result<(), ParamsViolation> {
        if self.ell == 0 {
            return Err(ParamsViolation::ZeroLevel);
        }
        if self.theta.len() != self.ell {
            return Err(ParamsViolation::ThetaLength { ell: self.ell, found: self.theta.len() });
        }
        if self.kappa.len() != self.ell {
            return Err(ParamsViolation::KappaLength { ell: self.ell, found: self.kappa.len() });
        }
        if let Some(index) = (1..self.ell).find(|&i| self.theta[i] <= self.theta[i - 1]) {
            return Err(ParamsViolation::NotIncreasing { index });
        }
        let ell = self.ell as i64;
        for j in 0..self.ell {
            for i in 0..j {
                let diff = self.theta[j] - self.theta[i];
                if diff % ell == 0 {
                    return Err(ParamsViolation::DifferenceInEllZ { i, j, diff, ell: self.ell });
                }
            }
        }
        if let Characteristic::Finite(e) = self.e {
            if e < 3 {
                return Err(ParamsViolation::CharacteristicTooSmall { e });
            }
            if let Some((index, &value)) = self.kappa.iter().enumerate().find(|(_, &k)| k < 0 || k >= e as i64) {
                return Err(ParamsViolation::ResidueOutOfRange { index, value, e });
            }
        }
        Ok(())
    }

    /// Every pairwise gap in `theta` exceeds `n·ℓ`.
    pub fn is_well_separated(&self) -> bool {
        let bound = (self.n * self.ell) as i64;
        (0..self.ell).all(|j| (0..j).all(|i| (self.theta[j] - self.theta[i]).abs() > bound))
    }

    pub fn residue(&self, node: Node) -> Residue {
        self.e.reduce(self.kappa[node.comp - 1] + node.col as i64 - node.row as i64)
    }

    /// The label one below `r`, i.e. `r - 1` in `ℤ/eℤ`.
    pub fn predecessor(&self, r: Residue) -> Residue {
        self.e.reduce(r.0 - 1)
    }

    pub fn with_n(&self, n: usize) -> Params {
        Params { n, ..self.clone() }
    }
}

/// A box `(r, c, m)` of a Young diagram; all indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Node { row, col, comp }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// An ℓ-tuple of partitions. Components carry no trailing zeros; empty
/// components are kept in place.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Vec<usize>>,
}

impl Multipartition {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        for (m, part) in components.iter().enumerate() {
            if part.contains(&0) {
                return Err(Error::Multipartition(format!("component {} has a zero part", m + 1)));
            }
            if part.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Multipartition(format!("component {} is not weakly decreasing", m + 1)));
            }
        }
        Ok(Multipartition { components })
    }

    /// Build from trusted data. Panics in debug builds if malformed.
    pub(crate) fn from_components(components: Vec<Vec<usize>>) -> Self {
        debug_assert!(Multipartition::new(components.clone()).is_ok());
        Multipartition { components }
    }

    pub fn empty(ell: usize) -> Self {
        Multipartition { components: vec![Vec::new(); ell] }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, m: usize) -> &[usize] {
        &self.components[m - 1]
    }

    pub fn size(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.row >= 1
            && node.col >= 1
            && self.components[node.comp - 1].get(node.row - 1).is_some_and(|&len| node.col <= len)
    }

    /// The Young diagram, ordered by component, then row, then column.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (m, part) in self.components.iter().enumerate() {
            for (r, &len) in part.iter().enumerate() {
                out.extend((1..=len).map(|c| Node::new(r + 1, c, m + 1)));
            }
        }
        out
    }

    /// Nodes whose removal leaves a multipartition.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (m, part) in self.components.iter().enumerate() {
            for (r, &len) in part.iter().enumerate() {
                let next = part.get(r + 1).copied().unwrap_or(0);
                if next < len {
                    out.push(Node::new(r + 1, len, m + 1));
                }
            }
        }
        out
    }

    pub fn remove_node(&self, node: Node) -> Result<Multipartition> {
        if !self.removable_nodes().contains(&node) {
            return Err(Error::Multipartition(format!("node {node} is not removable")));
        }
        let mut components = self.components.clone();
        let part = &mut components[node.comp - 1];
        part[node.row - 1] -= 1;
        if part[node.row - 1] == 0 {
            part.pop();
        }
        Ok(Multipartition { components })
    }

    pub fn check_level(&self, ell: usize) -> Result<()> {
        if self.level() != ell {
            return Err(Error::LevelMismatch { expected: ell, found: self.level() });
        }
        Ok(())
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (m, part) in self.components.iter().enumerate() {
            if m > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (i, x) in part.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.components.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let components = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Multipartition::new(components).map_err(de::Error::custom)
    }
}

/// All partitions of `n`, in lexicographically increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=remaining.min(max) {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `|𝒫_ℓ(n)|` without enumerating; saturates at `u128::MAX`.
pub fn count_multipartitions(n: usize, ell: usize) -> u128 {
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for k in 1..=n {
        for _ in 0..ell {
            for i in k..=n {
                c[i] = c[i].saturating_add(c[i - k]);
            }
        }
    }
    c[n]
}

/// All ℓ-multipartitions of `n`, sorted lexicographically on the sequence
/// of components.
pub fn enumerate_multipartitions(n: usize, ell: usize) -> Vec<Multipartition> {
    assert!(ell >= 1, "level must be positive");
    let by_size: Vec<Vec<Vec<usize>>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::with_capacity(ell);
    fn go(
        m: usize,
        ell: usize,
        remaining: usize,
        by_size: &[Vec<Vec<usize>>],
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Multipartition>,
    ) {
        if m + 1 == ell {
            for part in &by_size[remaining] {
                current.push(part.clone());
                out.push(Multipartition { components: current.clone() });
                current.pop();
            }
            return;
        }
        for size in 0..=remaining {
            for part in &by_size[size] {
                current.push(part.clone());
                go(m + 1, ell, remaining - size, by_size, current, out);
                current.pop();
            }
        }
    }
    go(0, ell, n, &by_size, &mut current, &mut out);
    out.sort();
    out
}
