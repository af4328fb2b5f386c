//! Laurent polynomials in `t` with nonnegative integer coefficients, used for
//! graded multiplicities and graded dimensions, plus tables of Ext dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// `Σ_k c_k t^k` with `c_k ≥ 0`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedPoly {
    coeffs: BTreeMap<i64, u64>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn one() -> Self {
        GradedPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: u64) -> Self {
        let mut p = GradedPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut p = GradedPoly::zero();
        for (exp, coeff) in terms {
            p.add_term(exp, coeff);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: u64) {
        if coeff != 0 {
            *self.coeffs.entry(exp).or_insert(0) += coeff;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> u64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn bottom_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Value at `t = 1`, i.e. the ungraded dimension.
    pub fn eval_one(&self) -> u64 {
        self.coeffs.values().sum()
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;

    fn add(self, other: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;

    fn mul(self, other: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl std::iter::Sum for GradedPoly {
    fn sum<I: Iterator<Item = GradedPoly>>(iter: I) -> GradedPoly {
        iter.fold(GradedPoly::zero(), |acc, p| &acc + &p)
    }
}

pub fn poly_mul(f: &GradedPoly, g: &GradedPoly) -> GradedPoly {
    f * g
}

/// `d_{λμ}(t) = d_{λ^L μ^L}(t) · d_{λ^R μ^R}(t)` for a pair admitting a diagonal
/// cut. The caller is responsible for having checked the cut.
pub fn factor_decomposition(left: &GradedPoly, right: &GradedPoly) -> GradedPoly {
    left * right
}

impl fmt::Display for GradedPoly {
    /// Highest degree first, e.g. `t^12 + 2t^10 + 1 + t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (*e, *c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, c) => write!(f, "{c}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for GradedPoly {
    /// `{"5": 1, "3": 1}` for `t^5 + t^3`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.coeffs.iter().rev().map(|(e, c)| (e.to_string(), c)))
    }
}

impl<'de> Deserialize<'de> for GradedPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(deserializer)?;
        let mut p = GradedPoly::zero();
        for (key, coeff) in raw {
            let exp: i64 =
                key.trim().parse().map_err(|_| de::Error::custom(format!("exponent {key:?} is not an integer")))?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

/// `k ↦ dim Ext^k`, each entry a graded dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtTable {
    groups: BTreeMap<u32, GradedPoly>,
}

impl ExtTable {
    pub fn new() -> Self {
        ExtTable::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u32, GradedPoly)>) -> Self {
        let mut t = ExtTable::new();
        for (k, p) in entries {
            t.insert(k, p);
        }
        t
    }

    /// Zero entries are dropped so the table stays finitely supported and canonical.
    pub fn insert(&mut self, k: u32, p: GradedPoly) {
        if p.is_zero() {
            self.groups.remove(&k);
        } else {
            self.groups.insert(k, p);
        }
    }

    pub fn get(&self, k: u32) -> GradedPoly {
        self.groups.get(&k).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &GradedPoly)> {
        self.groups.iter().map(|(&k, p)| (k, p))
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Sum of all dimensions at `t = 1`.
    pub fn total_dimension(&self) -> u64 {
        self.groups.values().map(GradedPoly::eval_one).sum()
    }
}

/// `result[k] = Σ_{i+j=k} left[i] · right[j]`.
pub fn kunneth_combine(left: &ExtTable, right: &ExtTable) -> ExtTable {
    let mut out: BTreeMap<u32, GradedPoly> = BTreeMap::new();
    for (i, f) in left.entries() {
        for (j, g) in right.entries() {
            let slot = out.entry(i + j).or_default();
            *slot = &*slot + &(f * g);
        }
    }
    ExtTable::from_entries(out)
}

impl Serialize for ExtTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.groups.iter().map(|(k, p)| (k.to_string(), p)))
    }
}

impl<'de> Deserialize<'de> for ExtTable {
    /// Accepts `{"0": {"1": 1}, "1": 3}`: each entry is a polynomial or a
    /// plain (ungraded) dimension.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Plain(u64),
            Graded(GradedPoly),
        }
        let raw = BTreeMap::<String, Entry>::deserialize(deserializer)?;
        let mut table = ExtTable::new();
        for (key, entry) in raw {
            let k: u32 = key
                .trim()
                .parse()
                .map_err(|_| de::Error::custom(format!("Ext degree {key:?} is not a nonnegative integer")))?;
            let p = match entry {
                Entry::Plain(d) => GradedPoly::monomial(0, d),
                Entry::Graded(p) => p,
            };
            table.insert(k, p);
        }
        Ok(table)
    }
}
