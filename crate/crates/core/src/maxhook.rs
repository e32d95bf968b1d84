//! Closed-form maximum hook length of d-distinct (s,t)-cores.
//!
//! For coprime generators the maximum is a six-case formula in s, k = t − s,
//! d, s̄ = s mod k and s̃; the maximizing core is recovered as the β-inverse
//! of the principal down-set of the maximum. Non-coprime generators with
//! gcd(s,t) ≤ d reduce to the coprime case: divide everything by b = gcd,
//! compute the coprime maximum H, and scale back as b(H+1)−1 or b(H+2)−1
//! depending on the coprime branch taken.

use std::collections::BTreeSet;
use std::fmt;

use crate::core_poset::{
    bottom_edge, ceil_div, gcd, ledge, principal_ideal, s_tilde, CoreParams, IntervalIdeal,
    MAX_GENERATOR,
};
use crate::error::{Error, Result};
use crate::partitions::{BetaSet, Partition};

/// Which branch of the closed form produced the maximum. The string forms
/// are stable and exposed through the CLI JSON output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// k = 1, or both k and s are at most d: H = s − 1.
    K1OrKsLeD,
    /// 1 < k ≤ d < s: H = s + k − 1.
    KLeDLtS,
    /// d < k and s̄s̃ ≡ 1 (mod k): H = B − 2.
    BMinus2,
    /// 1 < s̄s̃ mod k ≤ d < k: H = B − s − 1.
    BMinusSMinus1,
    /// d < s̄s̃ mod k < k − 1: H = B + k − (s̄s̃ mod k) − 1.
    BPlusKMinusSsMinus1,
    /// d < s̄s̃ mod k = k − 1: H = B − 1.
    BMinus1,
    /// Scaled from a coprime maximum with k = 1 and d < s: H = b(H' + 2) − 1.
    ScaledK1Plus2,
    /// Scaled with k = 1 and d ≥ s: H = b(H' + 1) − 1.
    ScaledK1Plus1,
    /// Scaled from the B − 2 or B − 1 coprime branches: H = b(H' + 2) − 1.
    ScaledPlus2,
    /// Every other scaled branch: H = b(H' + 1) − 1.
    ScaledPlus1,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::K1OrKsLeD => "K1_OR_KS_LE_D",
            CaseTag::KLeDLtS => "K_LE_D_LT_S",
            CaseTag::BMinus2 => "B_MINUS_2",
            CaseTag::BMinusSMinus1 => "B_MINUS_S_MINUS_1",
            CaseTag::BPlusKMinusSsMinus1 => "B_PLUS_K_MINUS_SS_MINUS_1",
            CaseTag::BMinus1 => "B_MINUS_1",
            CaseTag::ScaledK1Plus2 => "SCALED_K1_PLUS_2",
            CaseTag::ScaledK1Plus1 => "SCALED_K1_PLUS_1",
            CaseTag::ScaledPlus2 => "SCALED_PLUS_2",
            CaseTag::ScaledPlus1 => "SCALED_PLUS_1",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Maximum hook length together with the branch taken and the maximizing
/// core. The witness β-set is the positive down-set of H under the original
/// generators; the witness partition is its β-inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxHookResult {
    pub h: i64,
    pub case: CaseTag,
    /// The quantity B of the closed form; present exactly when the d < k
    /// coprime branches apply.
    pub b: Option<i64>,
    pub s_bar: Option<i64>,
    pub s_tilde: Option<i64>,
    pub witness_beta: BetaSet,
    pub witness: Partition,
}

/// Positive down-set {x − a·s − b·t > 0}, packaged as a β-set.
fn down_set_beta(x: i64, s: i64, t: i64) -> BetaSet {
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
    BetaSet::new(members).expect("down-set elements are distinct positives")
}

fn finish(
    h: i64,
    case: CaseTag,
    extras: Option<(i64, i64, i64)>,
    s: i64,
    t: i64,
    d: i64,
) -> MaxHookResult {
    let witness_beta = down_set_beta(h, s, t);
    let witness = witness_beta.to_partition();
    assert!(
        witness.is_st_core(s, t),
        "witness for (s={s}, t={t}, d={d}) is not an (s,t)-core"
    );
    assert!(
        witness.is_d_distinct(d),
        "witness for (s={s}, t={t}, d={d}) is not d-distinct"
    );
    assert_eq!(
        witness.max_hook(),
        Some(h),
        "witness for (s={s}, t={t}, d={d}) misses the maximum"
    );
    let (b, s_bar, s_til) = match extras {
        Some((b, sb, st)) => (Some(b), Some(sb), Some(st)),
        None => (None, None, None),
    };
    MaxHookResult {
        h,
        case,
        b,
        s_bar,
        s_tilde: s_til,
        witness_beta,
        witness,
    }
}

/// Maximum hook length of a d-distinct (s, s+k)-core for coprime parameters.
pub fn max_hook_coprime(params: &CoreParams, d: i64) -> Result<MaxHookResult> {
    if d < 1 {
        return Err(Error::InvalidInput(format!("d = {d} must be at least 1")));
    }
    let (s, k, t) = (params.s(), params.k(), params.t());
    if k == 1 || (k <= d && s <= d) {
        return Ok(finish(s - 1, CaseTag::K1OrKsLeD, None, s, t, d));
    }
    if k <= d {
        // 1 < k ≤ d < s
        return Ok(finish(s + k - 1, CaseTag::KLeDLtS, None, s, t, d));
    }
    // d < k: the formula runs on s̄, s̃ and B. B uses the raw product s̄s̃;
    // the case dispatch and the case-5 correction use it reduced mod k.
    let s_bar = params.s_bar();
    let s_til = s_tilde(params, d)?;
    let raw = s_bar * s_til;
    let r = raw.rem_euclid(k);
    let b = (s - 1) / k * (k + s * s_til) + s * (ceil_div(raw - 1, k) + s_til - 1) + s_bar;
    let (h, case) = if r == 1 {
        (b - 2, CaseTag::BMinus2)
    } else if r <= d {
        (b - s - 1, CaseTag::BMinusSMinus1)
    } else if r < k - 1 {
        (b + k - r - 1, CaseTag::BPlusKMinusSsMinus1)
    } else {
        (b - 1, CaseTag::BMinus1)
    };
    Ok(finish(h, case, Some((b, s_bar, s_til)), s, t, d))
}

/// Maximum hook length of a d-distinct (s,t)-core for any 2 ≤ s < t with
/// gcd(s,t) ≤ d. Non-coprime inputs are reduced by b = gcd(s,t) (d becomes
/// ⌊d/b⌋, which changes nothing since the maximum is constant on each block
/// bd, bd+1, ..., bd+b−1) and the coprime maximum is scaled back.
pub fn max_hook(s_in: i64, t_in: i64, d_in: i64) -> Result<MaxHookResult> {
    if d_in < 1 {
        return Err(Error::InvalidInput(format!(
            "d = {d_in} must be at least 1"
        )));
    }
    if s_in < 2 {
        return Err(Error::InvalidInput(format!(
            "s = {s_in} must be at least 2"
        )));
    }
    if s_in == t_in {
        return Err(Error::Degenerate(format!("s = t = {s_in} is out of scope")));
    }
    if t_in < s_in {
        return Err(Error::InvalidInput(format!(
            "generators must satisfy s < t, got s = {s_in}, t = {t_in}"
        )));
    }
    if t_in > MAX_GENERATOR {
        return Err(Error::InvalidInput(format!(
            "t = {t_in} exceeds the supported bound {MAX_GENERATOR}"
        )));
    }
    let b = gcd(s_in, t_in);
    if b > d_in {
        return Err(Error::InfiniteFamily {
            s: s_in,
            t: t_in,
            gcd: b,
            d: d_in,
        });
    }
    if b == 1 {
        return max_hook_coprime(&CoreParams::from_st(s_in, t_in)?, d_in);
    }
    let s = s_in / b;
    let k = (t_in - s_in) / b;
    if s < 2 {
        return Err(Error::Degenerate(format!(
            "s / gcd = {s} is below 2, the closed form does not apply"
        )));
    }
    let d = d_in / b;
    assert!(d >= 1, "gcd ≤ d guarantees a positive reduced d");
    let params = CoreParams::new(s, k)?;
    let inner = max_hook_coprime(&params, d)?;
    let plus_two = match inner.case {
        CaseTag::BMinus2 | CaseTag::BMinus1 => true,
        CaseTag::K1OrKsLeD => k == 1 && d < s,
        _ => false,
    };
    let h = if plus_two {
        b * (inner.h + 2) - 1
    } else {
        b * (inner.h + 1) - 1
    };
    let case = if k == 1 {
        if d < s {
            CaseTag::ScaledK1Plus2
        } else {
            CaseTag::ScaledK1Plus1
        }
    } else if plus_two {
        CaseTag::ScaledPlus2
    } else {
        CaseTag::ScaledPlus1
    };
    Ok(finish(h, case, None, s_in, t_in, d_in))
}

/// The maximizing core alone: its β-set and partition.
pub fn witness_core(s: i64, t: i64, d: i64) -> Result<(BetaSet, Partition)> {
    let result = max_hook(s, t, d)?;
    Ok((result.witness_beta, result.witness))
}

/// The interval ideal ⟨H⟩ ∩ E built directly from the ledge description:
/// a run of s̃ adjacent ledges starting at a case-dependent residue, with
/// the non-minimal element of the first ledge dropped and up to two extra
/// boundary elements added. Only defined for d < k.
///
/// Panics if the construction disagrees with ⟨H⟩ ∩ E or fails to be a
/// contiguous run of the edge — either would contradict the closed form.
pub fn best_interval_ideal(params: &CoreParams, d: i64) -> Result<IntervalIdeal> {
    let (s, k) = (params.s(), params.k());
    if d < 1 || d >= k {
        return Err(Error::InvalidInput(format!(
            "the interval-ideal description requires 1 ≤ d < k, got d = {d}, k = {k}"
        )));
    }
    let s_bar = params.s_bar();
    let s_til = s_tilde(params, d)?;
    let r = (s_bar * s_til).rem_euclid(k);
    let start_residue = if r == 1 {
        s_bar - 2
    } else if r <= d || r == k - 1 {
        s_bar - 1
    } else {
        s_bar - s_bar * s_til - 1
    };

    let mut chosen: BTreeSet<i64> = BTreeSet::new();
    for j in 0..s_til {
        let lg = ledge((start_residue + s_bar * j).rem_euclid(k), params);
        if j == 0 {
            // drop the non-minimal element: the unique member above s − 1
            chosen.extend(lg.members().iter().filter(|&&x| x < s));
        } else {
            chosen.extend(lg.members());
        }
    }
    if r == 1 || d < r {
        let lg = ledge((start_residue + s_bar * s_til).rem_euclid(k), params);
        chosen.extend(lg.first_in_edge_order());
    }
    if d < r && r < k - 1 {
        let lg = ledge((start_residue - s_bar).rem_euclid(k), params);
        chosen.extend(lg.last_in_edge_order());
        // the first element of the start ledge comes back in
        let lg = ledge(start_residue.rem_euclid(k), params);
        chosen.extend(lg.first_in_edge_order());
    }

    let edge = bottom_edge(params);
    let run: Vec<i64> = edge
        .ordered()
        .iter()
        .copied()
        .filter(|x| chosen.contains(x))
        .collect();
    assert_eq!(
        run.len(),
        chosen.len(),
        "selection left the edge for {params:?}"
    );
    let first_pos = edge.position(run[0]).unwrap();
    assert_eq!(
        &edge.ordered()[first_pos..first_pos + run.len()],
        run.as_slice(),
        "selection is not contiguous in the edge order for {params:?}, d = {d}"
    );

    // cross-check against the closed form: the run must be ⟨H⟩ ∩ E and
    // reconstruct H as first + (len − 1)·s
    let h = max_hook_coprime(params, d)?.h;
    assert_eq!(
        run[0] + (run.len() as i64 - 1) * s,
        h,
        "interval ideal does not reconstruct the maximum for {params:?}, d = {d}"
    );
    let ideal_edge: BTreeSet<i64> = principal_ideal(h, params)?
        .into_iter()
        .filter(|&x| x < s + k)
        .collect();
    assert_eq!(
        chosen, ideal_edge,
        "interval ideal differs from ⟨H⟩ ∩ E for {params:?}, d = {d}"
    );

    Ok(IntervalIdeal::new_unchecked(*params, run))
}

/// Down-set of x under the scaled generators: {x − a₁·scale·s − a₂·scale·t ≥ 0}.
/// Unlike [`principal_ideal`] this admits 0 and arbitrary nonnegative x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledIdeal {
    pub base: i64,
    pub scale: i64,
    members: Vec<i64>, // ascending
}

impl ScaledIdeal {
    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn scaled_ideal(x: i64, s: i64, t: i64, scale: i64) -> ScaledIdeal {
    assert!(
        s >= 1 && t >= 1 && scale >= 1,
        "generators and scale must be positive"
    );
    let (gs, gt) = (scale * s, scale * t);
    let mut members = BTreeSet::new();
    if x >= 0 {
        let mut a_s = 0;
        while a_s <= x {
            let mut v = x - a_s;
            while v >= 0 {
                members.insert(v);
                v -= gt;
            }
            a_s += gs;
        }
    }
    ScaledIdeal {
        base: x,
        scale,
        members: members.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: i64, k: i64) -> CoreParams {
        CoreParams::new(s, k).unwrap()
    }

    #[test]
    fn coprime_worked_examples() {
        let r = max_hook_coprime(&params(7, 3), 1).unwrap();
        assert_eq!(r.h, 19);
        assert_eq!(r.case, CaseTag::BMinus2);
        assert_eq!(r.b, Some(21));
        assert_eq!(r.s_bar, Some(1));
        assert_eq!(r.s_tilde, Some(1));

        let r = max_hook_coprime(&params(8, 5), 2).unwrap();
        assert_eq!(r.h, 25);
        assert_eq!(r.case, CaseTag::BPlusKMinusSsMinus1);
        assert_eq!(r.b, Some(24));
    }

    #[test]
    fn coprime_small_cases() {
        let r = max_hook_coprime(&params(3, 1), 1).unwrap();
        assert_eq!((r.h, r.case), (2, CaseTag::K1OrKsLeD));
        assert_eq!(r.b, None);

        let r = max_hook_coprime(&params(7, 3), 3).unwrap();
        assert_eq!((r.h, r.case), (9, CaseTag::KLeDLtS));
    }

    #[test]
    fn general_examples() {
        let r = max_hook(14, 20, 2).unwrap();
        assert_eq!(r.h, 41);
        assert_eq!(r.case, CaseTag::ScaledPlus2);

        let r = max_hook(4, 6, 2).unwrap();
        assert_eq!(r.h, 5);
        assert_eq!(r.case, CaseTag::ScaledK1Plus2);
        assert_eq!(r.witness.parts(), &[4, 1]);

        assert_eq!(
            max_hook(4, 6, 1),
            Err(Error::InfiniteFamily {
                s: 4,
                t: 6,
                gcd: 2,
                d: 1
            })
        );
    }

    #[test]
    fn general_validation() {
        assert!(matches!(max_hook(7, 7, 1), Err(Error::Degenerate(_))));
        assert!(matches!(max_hook(10, 7, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(max_hook(2, 4, 2), Err(Error::Degenerate(_))));
        assert!(matches!(max_hook(7, 10, 0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn witness_examples() {
        let (beta, witness) = witness_core(7, 10, 1).unwrap();
        assert_eq!(beta.elements_desc(), &[19, 12, 9, 5, 2]);
        assert_eq!(witness.parts(), &[15, 9, 7, 4, 2]);

        let (beta, witness) = witness_core(3, 4, 1).unwrap();
        assert_eq!(beta.elements_desc(), &[2]);
        assert_eq!(witness.parts(), &[2]);

        let (beta, witness) = witness_core(7, 10, 3).unwrap();
        assert_eq!(beta.elements_desc(), &[9, 2]);
        assert_eq!(witness.parts(), &[8, 2]);
    }

    #[test]
    fn best_interval_ideal_examples() {
        let ideal = best_interval_ideal(&params(7, 3), 1).unwrap();
        assert_eq!(ideal.run(), &[5, 2, 9]);
        assert_eq!(ideal.generator(), Some(19));

        let ideal = best_interval_ideal(&params(8, 5), 2).unwrap();
        assert_eq!(ideal.run(), &[1, 9, 4, 12]);
        assert_eq!(ideal.first(), Some(1));
        assert_eq!(ideal.generator(), Some(25));

        let ideal = best_interval_ideal(&params(14, 9), 2).unwrap();
        assert_eq!(ideal.len() as i64, 70 / 14);
        assert_eq!(ideal.first(), Some(12));

        assert!(best_interval_ideal(&params(7, 3), 3).is_err());
    }

    #[test]
    fn scaled_ideal_examples() {
        let si = scaled_ideal(41, 7, 10, 2);
        assert_eq!(si.members(), &[1, 7, 13, 21, 27, 41]);

        let si = scaled_ideal(5, 2, 3, 2);
        assert_eq!(si.members(), &[1, 5]);

        let si = scaled_ideal(0, 7, 10, 1);
        assert_eq!(si.members(), &[0]);
    }
}
