//! The poset of numerical-semigroup gaps and its bottom edge.
//!
//! For coprime s and t = s + k, the positive integers not of the form
//! a·s + b·t form a finite poset whose order ideals are exactly the β-sets
//! of (s,t)-cores. Its largest element is the Frobenius number
//! M = st − s − t. The bottom edge E = P ∩ [s+k−1] carries a total order
//! (covers step by +s or −k), and partitioning E by residue classes mod k
//! yields the "ledges" whose sizes admit a closed form. These pieces drive
//! the closed-form maximum hook length in [`crate::maxhook`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Generators are capped so every intermediate value stays far inside i64.
pub const MAX_GENERATOR: i64 = 1_000_000;

/// Cap on the Frobenius number for operations that materialize the whole
/// poset (sieves and edge walks stay desk-scale).
pub const MAX_MATERIALIZED: i64 = 20_000_000;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m` via extended Euclid; `None` if gcd(a, m) ≠ 1.
pub(crate) fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    assert!(m >= 1);
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m))
}

/// ⌈a / b⌉ for a ≥ 0, b > 0.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(a >= 0 && b > 0);
    (a + b - 1).div_euclid(b)
}

/// Validated parameter pair: s ≥ 2 and k ≥ 1 coprime, giving generators
/// (s, s+k).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoreParams {
    s: i64,
    k: i64,
}

impl CoreParams {
    pub fn new(s: i64, k: i64) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidInput(format!("s = {s} must be at least 2")));
        }
        if k < 1 {
            return Err(Error::InvalidInput(format!("k = {k} must be at least 1")));
        }
        if s + k > MAX_GENERATOR {
            return Err(Error::InvalidInput(format!(
                "t = s + k = {} exceeds the supported bound {MAX_GENERATOR}",
                s + k
            )));
        }
        if gcd(s, k) != 1 {
            return Err(Error::InvalidInput(format!(
                "s = {s} and t = {} must be coprime (gcd = {})",
                s + k,
                gcd(s, k)
            )));
        }
        Ok(CoreParams { s, k })
    }

    pub fn from_st(s: i64, t: i64) -> Result<Self> {
        if t <= s {
            return Err(Error::InvalidInput(format!(
                "generators must satisfy s < t, got s = {s}, t = {t}"
            )));
        }
        Self::new(s, t - s)
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn t(&self) -> i64 {
        self.s + self.k
    }

    /// s mod k, in [0, k). Equal to s when k > s.
    pub fn s_bar(&self) -> i64 {
        self.s.rem_euclid(self.k)
    }

    /// Largest gap: M = s·t − s − t.
    pub fn frobenius(&self) -> i64 {
        self.s * self.t() - self.s - self.t()
    }
}

impl fmt::Debug for CoreParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoreParams(s={}, t={})", self.s, self.t())
    }
}

/// Does x = a·s + b·t admit a solution with a, b ≥ 0? Zero is representable.
pub fn is_representable(x: i64, s: i64, t: i64) -> bool {
    assert!(s >= 1 && t >= 1, "generators must be positive");
    if x < 0 {
        return false;
    }
    let (lo, hi) = if s < t { (s, t) } else { (t, s) };
    (0..=x / hi).any(|b| (x - b * hi) % lo == 0)
}

/// The finite set of gaps of ⟨s, t⟩, sorted ascending.
#[derive(Clone, Debug)]
pub struct GapPoset {
    params: CoreParams,
    gaps: Vec<i64>,
}

/// Sieves [1, M] once and keeps the non-representable values.
pub fn gap_poset(params: &CoreParams) -> GapPoset {
    let (s, t, m) = (params.s(), params.t(), params.frobenius());
    assert!(
        m <= MAX_MATERIALIZED,
        "gap poset with M = {m} is beyond desk scale"
    );
    let mut representable = vec![false; (m + 1) as usize];
    let mut a_s = 0;
    while a_s <= m {
        let mut v = a_s;
        while v <= m {
            representable[v as usize] = true;
            v += t;
        }
        a_s += s;
    }
    let gaps = (1..=m).filter(|&x| !representable[x as usize]).collect();
    GapPoset {
        params: *params,
        gaps,
    }
}

impl GapPoset {
    pub fn params(&self) -> &CoreParams {
        &self.params
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn max(&self) -> Option<i64> {
        self.gaps.last().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.gaps.binary_search(&x).is_ok()
    }
}

/// Order ideal generated by the gap x: {x − a·s − b·t > 0}, sorted ascending.
/// Every element is itself a gap. Rejects x that is representable or ≤ 0.
pub fn principal_ideal(x: i64, params: &CoreParams) -> Result<Vec<i64>> {
    let (s, t) = (params.s(), params.t());
    if x <= 0 {
        return Err(Error::InvalidInput(format!(
            "{x} is not a positive integer"
        )));
    }
    if is_representable(x, s, t) {
        return Err(Error::InvalidInput(format!(
            "{x} is representable by {s} and {t}, hence not in the gap poset"
        )));
    }
    let mut members = BTreeSet::new();
    let mut a_s = 0;
    while a_s < x {
        let mut v = x - a_s;
        while v > 0 {
            members.insert(v);
            v -= t;
        }
        a_s += s;
    }
    Ok(members.into_iter().collect())
}

/// The bottom edge E = P ∩ [s+k−1] listed in its total order.
#[derive(Clone, Debug)]
pub struct BottomEdge {
    params: CoreParams,
    ordered: Vec<i64>,
}

/// Builds E and orders it constructively: start from the unique element with
/// no predecessor (x − s ∉ E and x + k ∉ E), then follow the successor map
/// x ↦ x + s when x < k, x ↦ x − k when x > k, stopping at k.
///
/// Panics if the chain fails to visit all of E exactly once — that would
/// contradict the totality of the edge order.
pub fn bottom_edge(params: &CoreParams) -> BottomEdge {
    let (s, k, t) = (params.s(), params.k(), params.t());
    assert!(
        s + k <= MAX_MATERIALIZED,
        "bottom edge with s + k = {} is beyond desk scale",
        s + k
    );
    let edge_set: BTreeSet<i64> = (1..=s + k - 1)
        .filter(|&x| !is_representable(x, s, t))
        .collect();

    let starts: Vec<i64> = edge_set
        .iter()
        .copied()
        .filter(|&x| !edge_set.contains(&(x - s)) && !edge_set.contains(&(x + k)))
        .collect();
    assert_eq!(
        starts.len(),
        1,
        "edge order must have a unique start, found {starts:?} for {params:?}"
    );

    let mut ordered = Vec::with_capacity(edge_set.len());
    let mut seen = BTreeSet::new();
    let mut x = starts[0];
    loop {
        assert!(
            edge_set.contains(&x) && seen.insert(x),
            "edge chain left E or revisited {x} for {params:?}"
        );
        ordered.push(x);
        if x == k {
            break;
        }
        x = if x < k { x + s } else { x - k };
    }
    assert_eq!(
        ordered.len(),
        edge_set.len(),
        "edge chain did not cover E for {params:?}"
    );
    BottomEdge {
        params: *params,
        ordered,
    }
}

impl BottomEdge {
    pub fn params(&self) -> &CoreParams {
        &self.params
    }

    /// Elements of E in the edge order (last entry is always k).
    pub fn ordered(&self) -> &[i64] {
        &self.ordered
    }

    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    pub fn position(&self, x: i64) -> Option<usize> {
        self.ordered.iter().position(|&y| y == x)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.ordered.contains(&x)
    }
}

/// Number of elements of ⟨x⟩ lying on the bottom edge: ⌊x/s⌋ + 1.
///
/// Requires x to be a gap.
pub fn edge_count(x: i64, params: &CoreParams) -> i64 {
    assert!(
        x > 0 && !is_representable(x, params.s(), params.t()),
        "{x} is not in the gap poset"
    );
    x / params.s() + 1
}

/// First element of ⟨x⟩ ∩ E in the edge order: x mod s.
///
/// Requires x to be a gap.
pub fn edge_start(x: i64, params: &CoreParams) -> i64 {
    assert!(
        x > 0 && !is_representable(x, params.s(), params.t()),
        "{x} is not in the gap poset"
    );
    x.rem_euclid(params.s())
}

/// Elements of E in one residue class mod k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ledge {
    residue: i64,
    members: Vec<i64>, // ascending
}

impl Ledge {
    pub fn residue(&self) -> i64 {
        self.residue
    }

    /// Members in ascending numeric order.
    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// First member in the edge order. Within a ledge the edge order steps
    /// by −k, so this is the numeric maximum.
    pub fn first_in_edge_order(&self) -> Option<i64> {
        self.members.last().copied()
    }

    /// Last member in the edge order (numeric minimum).
    pub fn last_in_edge_order(&self) -> Option<i64> {
        self.members.first().copied()
    }
}

/// The ledge of residue i: {x ∈ E : x ≡ i (mod k)}.
pub fn ledge(i: i64, params: &CoreParams) -> Ledge {
    let (s, k, t) = (params.s(), params.k(), params.t());
    assert!((0..k).contains(&i), "residue {i} out of range [0, {k})");
    let members = (1..=s + k - 1)
        .filter(|&x| x.rem_euclid(k) == i && !is_representable(x, s, t))
        .collect();
    Ledge {
        residue: i,
        members,
    }
}

/// Closed form for the ledge size, evaluated case by case.
// two branches share a value; they are distinct cases of the closed form
#[allow(clippy::if_same_then_else)]
pub fn ledge_len_formula(i: i64, params: &CoreParams) -> i64 {
    let (s, k) = (params.s(), params.k());
    assert!((0..k).contains(&i), "residue {i} out of range [0, {k})");
    let s_bar = params.s_bar();
    let base = (s - 1) / k;
    if i > 0 && i % s == 0 {
        0
    } else if i == s_bar {
        base
    } else if k > s && i == (ceil_div(k, s) * s).rem_euclid(k) {
        1
    } else if i == 0 && k > 1 {
        base + 1
    } else if i > s_bar && i % s != 0 {
        base + 1
    } else if i > 0 && i < s_bar && i != (ceil_div(k, s) * s).rem_euclid(k) {
        base + 2
    } else {
        unreachable!("ledge size cases are exhaustive over [0, k); got i = {i} for {params:?}")
    }
}

/// Residue interval (a, b) mod k, wrapping around when the reduced endpoints
/// invert: (a, k−1] ∪ [0, b) in that case. `closed_left` / `closed_right`
/// include the endpoints a mod k / b mod k themselves.
pub fn wrap_interval(
    a: i64,
    b: i64,
    k: i64,
    closed_left: bool,
    closed_right: bool,
) -> BTreeSet<i64> {
    assert!(k >= 1, "modulus must be positive");
    let a = a.rem_euclid(k);
    let b = b.rem_euclid(k);
    let mut out = BTreeSet::new();
    if a == b {
        // degenerate one-point interval: nonempty only when fully closed
        if closed_left && closed_right {
            out.insert(a);
        }
        return out;
    }
    if a < b {
        out.extend(a + 1..b);
    } else {
        out.extend(a + 1..=k - 1);
        out.extend(0..b);
    }
    if closed_left {
        out.insert(a);
    }
    if closed_right {
        out.insert(b);
    }
    out
}

/// The largest number of adjacent ledges with no two in residue classes
/// within d of each other: min of ℓ·(s̄)⁻¹ mod k over 0 < |ℓ| ≤ d.
///
/// Only defined for k ≥ 2 and d < k.
pub fn s_tilde(params: &CoreParams, d: i64) -> Result<i64> {
    let k = params.k();
    if k < 2 {
        return Err(Error::InvalidInput(
            "s̃ requires k ≥ 2 (for k = 1 the closed form never consumes it)".into(),
        ));
    }
    if d < 1 || d >= k {
        return Err(Error::InvalidInput(format!(
            "s̃ requires 1 ≤ d < k, got d = {d}, k = {k}"
        )));
    }
    let inv = mod_inverse(params.s_bar(), k).expect("s̄ is invertible mod k since gcd(s, k) = 1");
    let min = (1..=d)
        .flat_map(|l| [(l * inv).rem_euclid(k), (-l * inv).rem_euclid(k)])
        .min()
        .expect("d ≥ 1 gives a nonempty range");
    debug_assert!(min >= 1);
    Ok(min)
}

/// A contiguous run of the bottom edge that is also an order ideal of the
/// gap poset. Nonempty interval ideals correspond bijectively to gaps x via
/// x ↦ ⟨x⟩ ∩ E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalIdeal {
    params: CoreParams,
    run: Vec<i64>, // in edge order
}

impl IntervalIdeal {
    pub(crate) fn new_unchecked(params: CoreParams, run: Vec<i64>) -> Self {
        IntervalIdeal { params, run }
    }

    pub fn params(&self) -> &CoreParams {
        &self.params
    }

    /// Members in edge order.
    pub fn run(&self) -> &[i64] {
        &self.run
    }

    pub fn len(&self) -> usize {
        self.run.len()
    }

    pub fn is_empty(&self) -> bool {
        self.run.is_empty()
    }

    /// First member in the edge order.
    pub fn first(&self) -> Option<i64> {
        self.run.first().copied()
    }

    /// The generating gap, recovered as first + (len − 1)·s.
    pub fn generator(&self) -> Option<i64> {
        self.first()
            .map(|f| f + (self.run.len() as i64 - 1) * self.params.s())
    }
}

/// Number of long ledges met by the run of s̃ adjacent ledges starting at
/// residue i: |{i, i+s̄, ..., i+s̄(s̃−1)} ∩ {1, ..., s̄−1}| by direct
/// enumeration. Runs containing both residues 0 and s̄ are rejected.
pub fn long_ledge_count(i: i64, params: &CoreParams, d: i64) -> Result<i64> {
    let k = params.k();
    assert!((0..k).contains(&i), "residue {i} out of range [0, {k})");
    let s_bar = params.s_bar();
    let span = s_tilde(params, d)?;
    let run: BTreeSet<i64> = (0..span).map(|j| (i + s_bar * j).rem_euclid(k)).collect();
    if run.contains(&0) && run.contains(&s_bar) {
        return Err(Error::InvalidInput(format!(
            "the s̃-interval at {i} contains both 0 and s̄ = {s_bar}"
        )));
    }
    Ok(run.iter().filter(|&&r| r >= 1 && r < s_bar).count() as i64)
}
