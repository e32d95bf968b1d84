//! Brute-force ground truth, kept independent of the closed forms.
//!
//! Nothing here consults [`crate::maxhook`] or [`crate::core_poset`] beyond
//! raw representability: the scan re-derives validity and distinctness from
//! first principles so that agreement with the formulas is meaningful.
//!
//! A d-distinct core with greatest β-element x contains the whole positive
//! down-set of x (closure forces every x − a·s − b·t > 0 into the set), so
//! the largest x whose down-set is a valid d-distinct β-set IS the maximum
//! hook length. The scan cap s·t is sufficient: coprime maxima are gaps,
//! bounded by st − s − t, and scaled maxima are b(H' + 2) − 1 < s·t. The
//! scan additionally insists no passing x shows up in the top tenth of the
//! range, as a runtime check of that argument.

use std::collections::BTreeSet;

use crate::core_poset::{gcd, is_representable};
use crate::error::{Error, Result};
use crate::partitions::BetaSet;

/// Result of a downward brute-force scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    /// Largest attainable maximum hook length; absent only if no nonempty
    /// valid core exists.
    pub h_true: Option<i64>,
    /// β-sets attaining it (the inclusion-minimal witness).
    pub witnesses: Vec<BetaSet>,
    /// Upper end of the scanned range (s·t).
    pub scanned_up_to: i64,
    pub finite: bool,
}

/// Finite iff gcd(s,t) ≤ d or the generators are coprime (the d = 0 case is
/// admitted for the unconstrained core count, where coprimality alone makes
/// the family finite).
fn ensure_finite(s: i64, t: i64, d: i64) -> Result<()> {
    let g = gcd(s, t);
    if g > d && g > 1 {
        return Err(Error::InfiniteFamily { s, t, gcd: g, d });
    }
    Ok(())
}

/// Brute force is only meant for desk-scale scan ranges.
pub const MAX_SCAN: i64 = 10_000_000;

fn validate_pair(s: i64, t: i64) -> Result<()> {
    if s < 2 {
        return Err(Error::InvalidInput(format!("s = {s} must be at least 2")));
    }
    if t <= s {
        return Err(Error::InvalidInput(format!(
            "generators must satisfy s < t, got s = {s}, t = {t}"
        )));
    }
    if s.saturating_mul(t) > MAX_SCAN {
        return Err(Error::InvalidInput(format!(
            "scan range s·t = {} is beyond desk scale ({MAX_SCAN})",
            s.saturating_mul(t)
        )));
    }
    Ok(())
}

/// Is X the β-set of an (s,t)-core? For every x ∈ X and generator u,
/// x ≥ u forces x − u to be a positive member of X.
pub fn is_core_beta_set(beta: &BetaSet, s: i64, t: i64) -> bool {
    beta.iter_desc().all(|x| {
        [s, t]
            .iter()
            .all(|&u| x < u || (x - u > 0 && beta.contains(x - u)))
    })
}

/// Same closure test on a raw sorted set.
fn is_core_set(set: &BTreeSet<i64>, s: i64, t: i64) -> bool {
    set.iter().all(|&x| {
        [s, t]
            .iter()
            .all(|&u| x < u || (x - u > 0 && set.contains(&(x - u))))
    })
}

fn min_gap(set: &BTreeSet<i64>) -> Option<i64> {
    set.iter().zip(set.iter().skip(1)).map(|(a, b)| b - a).min()
}

/// Positive down-set {x − a·s − b·t > 0} by direct double enumeration.
fn down_set(x: i64, s: i64, t: i64) -> BTreeSet<i64> {
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
    members
}

/// Scans x from s·t down to 1 and reports the largest x whose positive
/// down-set is a valid d-distinct core β-set.
pub fn max_hook_scan(s: i64, t: i64, d: i64) -> Result<OracleReport> {
    validate_pair(s, t)?;
    if d < 0 {
        return Err(Error::InvalidInput(format!("d = {d} must be nonnegative")));
    }
    ensure_finite(s, t, d)?;
    let cap = s * t;
    for x in (1..=cap).rev() {
        if is_representable(x, s, t) {
            continue;
        }
        let candidate = down_set(x, s, t);
        if !is_core_set(&candidate, s, t) {
            continue;
        }
        if min_gap(&candidate).is_some_and(|g| g <= d) {
            continue;
        }
        assert!(
            x <= cap - cap / 10,
            "passing x = {x} in the top tenth of the scan range [1, {cap}]"
        );
        let witness = BetaSet::new(candidate).expect("down-set elements are distinct positives");
        return Ok(OracleReport {
            h_true: Some(x),
            witnesses: vec![witness],
            scanned_up_to: cap,
            finite: true,
        });
    }
    Ok(OracleReport {
        h_true: None,
        witnesses: Vec::new(),
        scanned_up_to: cap,
        finite: true,
    })
}

/// All d-distinct (s,t)-core β-sets, the empty set included, in lexicographic
/// order of their descending element lists.
///
/// Depth-first extension over candidate values from s·t downward: including
/// a value forces its closure descendants in, and branches die on duplicate
/// gaps ≤ d, on representable values, or on a forced value that cannot be
/// taken. d = 0 is admitted (all cores).
pub fn enumerate_cores(s: i64, t: i64, d: i64) -> Result<Vec<BetaSet>> {
    validate_pair(s, t)?;
    if d < 0 {
        return Err(Error::InvalidInput(format!("d = {d} must be nonnegative")));
    }
    ensure_finite(s, t, d)?;
    let cap = s * t;
    let mut state = DfsState {
        s,
        t,
        d,
        chosen: Vec::new(),
        required: BTreeSet::new(),
        out: Vec::new(),
    };
    dfs(cap, &mut state);
    let mut out = state.out;
    out.sort_by(|a, b| a.elements_desc().cmp(b.elements_desc()));
    Ok(out)
}

struct DfsState {
    s: i64,
    t: i64,
    d: i64,
    chosen: Vec<i64>, // decreasing
    required: BTreeSet<i64>,
    out: Vec<BetaSet>,
}

/// Walks v downward, treating each value as excluded; at every value that
/// could be included, branches into a recursive call that includes it.
/// Recursion depth is the number of included elements only.
fn dfs(start: i64, st: &mut DfsState) {
    let mut v = start;
    loop {
        if v == 0 {
            debug_assert!(st.required.is_empty());
            let beta = BetaSet::from_sorted_desc_unchecked(st.chosen.clone());
            debug_assert!(is_core_beta_set(&beta, st.s, st.t));
            debug_assert!(beta.is_d_distinct(st.d));
            st.out.push(beta);
            return;
        }
        let forced = st.required.contains(&v);
        let gap_ok = st.chosen.last().is_none_or(|&m| m - v > st.d);
        let include_ok = gap_ok && v != st.s && v != st.t && !is_representable(v, st.s, st.t);
        if include_ok {
            let mut fresh = Vec::new();
            for u in [st.s, st.t] {
                if v > u && st.required.insert(v - u) {
                    fresh.push(v - u);
                }
            }
            if forced {
                st.required.remove(&v);
            }
            st.chosen.push(v);
            dfs(v - 1, st);
            st.chosen.pop();
            if forced {
                st.required.insert(v);
            }
            for w in fresh {
                st.required.remove(&w);
            }
        }
        if forced {
            // a forced value could not be skipped: dead branch
            return;
        }
        v -= 1;
    }
}

/// Number of (s,t)-core β-sets for coprime generators, counted by the d = 0
/// enumeration. Equals the binomial count C(s+t, s)/(s+t).
pub fn count_cores(s: i64, t: i64) -> Result<i64> {
    if gcd(s, t) != 1 {
        return Err(Error::InvalidInput(format!(
            "core counting requires coprime generators, gcd({s}, {t}) = {}",
            gcd(s, t)
        )));
    }
    Ok(enumerate_cores(s, t, 0)?.len() as i64)
}
