//! Integer partitions, Young-diagram hook lengths, and β-sets.
//!
//! The β-set of a partition λ = (λ₁, ..., λₙ) is {λᵢ + n − i}, the set of
//! first-column hook lengths. It is a bijection onto finite sets of distinct
//! positive integers, and it turns the core and distinctness predicates into
//! plain membership tests: λ is an s-core iff its β-set is closed under
//! subtracting s (staying positive), and λ is d-distinct iff β-elements are
//! pairwise more than d apart.

use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing tuple of positive integers, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p < 1) {
            return Err(Error::InvalidInput(format!(
                "partition part {p} is not a positive integer"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Hook length of every cell: cells to the right, cells below, and the
    /// cell itself. Row `i`, column `j` holds `(parts[i] - j) + leg(i, j)`
    /// where `leg` counts the lower rows that still reach column `j`.
    pub fn hook_grid(&self) -> HookGrid {
        let width = self.parts.first().copied().unwrap_or(0);
        // column_height[j] = number of rows with a cell in column j
        let column_height: Vec<i64> = (0..width)
            .map(|j| self.parts.partition_point(|&p| p > j) as i64)
            .collect();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (0..p)
                    .map(|j| (p - j) + (column_height[j as usize] - i as i64 - 1))
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    /// The β-set {parts[i] + n − 1 − i}: first-column hook lengths.
    pub fn beta_set(&self) -> BetaSet {
        let n = self.parts.len() as i64;
        let elements = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + n - 1 - i as i64)
            .collect();
        // strictly decreasing positives by construction
        BetaSet::from_sorted_desc_unchecked(elements)
    }

    /// Maximum hook length, `parts[0] + n − 1`; absent for the empty partition.
    pub fn max_hook(&self) -> Option<i64> {
        self.parts.first().map(|&p| p + self.parts.len() as i64 - 1)
    }

    /// s-core test: every β-element x with x ≥ s has x − s positive and in
    /// the β-set. Equivalent to "no cell has hook length s".
    pub fn is_s_core(&self, s: i64) -> bool {
        assert!(s >= 1, "hook value s must be positive");
        let beta = self.beta_set();
        beta.elements_desc()
            .iter()
            .all(|&x| x < s || (x - s > 0 && beta.contains(x - s)))
    }

    /// No cell has hook length s or t.
    pub fn is_st_core(&self, s: i64, t: i64) -> bool {
        self.is_s_core(s) && self.is_s_core(t)
    }

    /// Consecutive parts differ by at least d. Every partition is 0-distinct.
    pub fn is_d_distinct(&self, d: i64) -> bool {
        assert!(d >= 0, "distinctness gap d must be nonnegative");
        self.parts.windows(2).all(|w| w[0] - w[1] >= d)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A finite set of distinct positive integers, held in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    elements: Vec<i64>, // strictly decreasing
}

impl BetaSet {
    /// Builds a β-set from arbitrary elements, rejecting duplicates and
    /// non-positive values.
    pub fn new<I: IntoIterator<Item = i64>>(elements: I) -> Result<Self> {
        let mut v: Vec<i64> = elements.into_iter().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(&min) = v.last() {
            if min < 1 {
                return Err(Error::InvalidInput(format!(
                    "β-set element {min} is not a positive integer"
                )));
            }
        }
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "β-set element {} is duplicated",
                w[0]
            )));
        }
        Ok(BetaSet { elements: v })
    }

    pub fn empty() -> Self {
        BetaSet {
            elements: Vec::new(),
        }
    }

    pub(crate) fn from_sorted_desc_unchecked(elements: Vec<i64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(elements.last().is_none_or(|&x| x >= 1));
        BetaSet { elements }
    }

    /// Elements in descending order.
    pub fn elements_desc(&self) -> &[i64] {
        &self.elements
    }

    pub fn iter_desc(&self) -> impl Iterator<Item = i64> + '_ {
        self.elements.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> Option<i64> {
        self.elements.first().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search_by(|e| x.cmp(e)).is_ok()
    }

    /// Smallest distance between two distinct elements; `None` with fewer
    /// than two elements.
    pub fn min_gap(&self) -> Option<i64> {
        self.elements.windows(2).map(|w| w[0] - w[1]).min()
    }

    /// Pairwise distances all exceed d.
    pub fn is_d_distinct(&self, d: i64) -> bool {
        self.min_gap().is_none_or(|g| g > d)
    }

    /// Inverse of [`Partition::beta_set`]: with elements x₁ > ... > xₙ,
    /// part i is xᵢ₊₁ − (n − 1 − i).
    pub fn to_partition(&self) -> Partition {
        let n = self.elements.len() as i64;
        let parts: Vec<i64> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (n - 1 - i as i64))
            .collect();
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Partition { parts }
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Ragged grid of hook lengths; row i has `parts[i]` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<i64>>,
}

impl HookGrid {
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// First-column entries, top to bottom (strictly decreasing).
    pub fn first_column(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.rows.iter().any(|r| r.contains(&value))
    }

    pub fn max(&self) -> Option<i64> {
        self.rows.first().map(|r| r[0])
    }
}
