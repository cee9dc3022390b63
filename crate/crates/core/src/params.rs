//! Construction parameters and their validation.
//!
//! The construction is driven by one odd parameter `t` (the edge gain is
//! `36t`) and a vertex budget `n >= n_t`. In canonical form `t = 1260r + 169`
//! for some `r >= 1`; relaxed mode accepts any odd `t >= 801` for which
//! the catalog index ranges are pairwise disjoint and nonempty, which is
//! re-checked here rather than assumed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Accounting mode for the two degenerate catalog indices 1 and 2.
///
/// `Strict` keeps them as formal entries (a loop and a doubled edge at the
/// hub) so the totals reproduce the `n + 36t` arithmetic exactly; `Simple`
/// drops them, giving a guaranteed-simple graph with `n + 36t - 2` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Simple,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Strict => write!(f, "strict"),
            Mode::Simple => write!(f, "simple"),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "strict" => Ok(Mode::Strict),
            "simple" => Ok(Mode::Simple),
            other => Err(format!("unknown mode '{other}' (expected strict|simple)")),
        }
    }
}

/// How the size parameter is supplied: the canonical `r`, or `t` directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamInput {
    R(u64),
    T(u64),
}

/// Validated construction parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Params {
    /// `r` when `t` has the canonical form `1260r + 169`.
    pub r: Option<u64>,
    pub t: u64,
    /// Vertex budget; the tail path absorbs `n - n_t`.
    pub n: u128,
    /// Minimum vertex budget `540t^2 + (175811t + 7989)/2`.
    pub n_t: u128,
    pub mode: Mode,
    pub relaxed: bool,
}

/// Exact minimum vertex count `540t^2 + (175811/2)t + 7989/2`.
///
/// Computed as `(1080t^2 + 175811t + 7989) / 2`; the numerator is even
/// exactly when `t` is odd, which is required upstream.
pub fn n_t(t: u64) -> Result<u128> {
    let t = t as u128;
    let num = 1080u128
        .checked_mul(t * t)
        .and_then(|a| a.checked_add(175_811 * t))
        .and_then(|a| a.checked_add(7_989))
        .ok_or(Error::ArithmeticOverflow)?;
    if !num.is_multiple_of(2) {
        return Err(Error::EvenT(t as u64));
    }
    Ok(num / 2)
}

/// One index set of the catalog: `{start, start+step, ..., end}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct IndexSet {
    pub start: u64,
    pub end: u64,
    pub step: u64,
}

impl IndexSet {
    fn contiguous(start: u64, end: u64) -> Self {
        IndexSet {
            start,
            end,
            step: 1,
        }
    }

    fn is_empty(&self) -> bool {
        self.start > self.end
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.end - self.start) / self.step + 1
        }
    }

    /// Exact intersection test for step-1/step-2 arithmetic ranges.
    fn intersects(&self, other: &IndexSet) -> bool {
        if self.is_empty() || other.is_empty() {
            return false;
        }
        let lo = self.start.max(other.start);
        let hi = self.end.min(other.end);
        if lo > hi {
            return false;
        }
        match (self.step, other.step) {
            (1, 1) => true,
            // A step-2 set only holds values with its start's parity: the
            // intersection interval must contain one of that parity.
            (2, 1) | (1, 2) => {
                let par = if self.step == 2 {
                    self.start % 2
                } else {
                    other.start % 2
                };
                first_at_parity(lo, par) <= hi
            }
            (2, 2) => {
                if self.start % 2 != other.start % 2 {
                    return false;
                }
                first_at_parity(lo, self.start % 2) <= hi
            }
            _ => unreachable!("catalog uses steps 1 and 2 only"),
        }
    }
}

fn first_at_parity(lo: u64, parity: u64) -> u64 {
    if lo % 2 == parity {
        lo
    } else {
        lo + 1
    }
}

/// The eleven contiguous index ranges of the catalog, ascending.
pub fn contiguous_ranges(t: u64) -> [(u64, u64); 11] {
    [
        (0, 21 * t - 1),
        (27 * t, 28 * t + 64),
        (29 * t - 734, 29 * t + 267),
        (30 * t - 531, 30 * t + 57),
        (31 * t - 741, 31 * t + 58),
        (32 * t - 740, 32 * t + 57),
        (33 * t - 741, 33 * t + 57),
        (34 * t - 741, 34 * t + 52),
        (35 * t - 746, 35 * t + 60),
        (36 * t - 738, 36 * t + 60),
        (37 * t - 738, 37 * t + 799),
    ]
}

/// All fifteen index sets of the catalog (eleven contiguous ranges, the
/// three arithmetic families, and the singleton `26t`).
pub(crate) fn index_sets(t: u64) -> Vec<IndexSet> {
    let mut sets: Vec<IndexSet> = contiguous_ranges(t)
        .iter()
        .map(|&(s, e)| IndexSet::contiguous(s, e))
        .collect();
    // i = 21t + 2j + 1, 0 <= j <= t-1
    sets.push(IndexSet {
        start: 21 * t + 1,
        end: 23 * t - 1,
        step: 2,
    });
    // i = 21t + 2j, 0 <= j <= (t-1)/2
    sets.push(IndexSet {
        start: 21 * t,
        end: 22 * t - 1,
        step: 2,
    });
    // i = 23t + 2j + 1, 0 <= j <= (t-1)/2
    sets.push(IndexSet {
        start: 23 * t + 1,
        end: 24 * t,
        step: 2,
    });
    sets.push(IndexSet::contiguous(26 * t, 26 * t));
    sets
}

/// Number of catalog indices: the sum of the set cardinalities, `24t + 7993`.
pub fn catalog_size(t: u64) -> u64 {
    index_sets(t).iter().map(IndexSet::len).sum()
}

/// One catalog index set with its symbolic label, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IndexSetInfo {
    pub label: &'static str,
    pub first: u64,
    pub last: u64,
    pub step: u64,
    pub len: u64,
}

/// The fifteen index sets with first/last indices, O(1) in `t`.
pub fn index_set_summary(t: u64) -> Vec<IndexSetInfo> {
    const LABELS: [&str; 15] = [
        "0 <= i <= 21t-1",
        "27t <= i <= 28t+64",
        "29t-734 <= i <= 29t+267",
        "30t-531 <= i <= 30t+57",
        "31t-741 <= i <= 31t+58",
        "32t-740 <= i <= 32t+57",
        "33t-741 <= i <= 33t+57",
        "34t-741 <= i <= 34t+52",
        "35t-746 <= i <= 35t+60",
        "36t-738 <= i <= 36t+60",
        "37t-738 <= i <= 37t+799",
        "i = 21t+2j+1, 0 <= j <= t-1",
        "i = 21t+2j, 0 <= j <= (t-1)/2",
        "i = 23t+2j+1, 0 <= j <= (t-1)/2",
        "i = 26t",
    ];
    index_sets(t)
        .into_iter()
        .zip(LABELS)
        .map(|(s, label)| IndexSetInfo {
            label,
            first: s.start,
            last: s.end,
            step: s.step,
            len: s.len(),
        })
        .collect()
}

/// Checks that the fifteen index sets are pairwise disjoint and that every
/// family is nonempty. Small `t` fails here, never silently.
fn check_ranges(t: u64) -> Result<()> {
    // Also guards the subtractions in the range table.
    if t < 800 {
        return Err(Error::TooSmallT {
            t,
            reason: "ten-chord family 58 <= i <= t-742 is empty".into(),
        });
    }
    let sets = index_sets(t);
    for (a, sa) in sets.iter().enumerate() {
        if sa.is_empty() {
            return Err(Error::TooSmallT {
                t,
                reason: format!("index set #{a} is empty"),
            });
        }
        for (b, sb) in sets.iter().enumerate().skip(a + 1) {
            if sa.intersects(sb) {
                return Err(Error::TooSmallT {
                    t,
                    reason: format!(
                        "index sets #{a} [{}..={} /{}] and #{b} [{}..={} /{}] overlap",
                        sa.start, sa.end, sa.step, sb.start, sb.end, sb.step
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Validates parameters and computes `n_t` exactly.
///
/// `n = None` defaults to `n_t` (tail length zero in strict mode). `relaxed`
/// admits any odd `t >= 801` passing the range checks, without asserting the
/// headline edge gain for it; distinctness is still verified per instance
/// downstream.
pub fn validate_params(
    input: ParamInput,
    n: Option<u128>,
    mode: Mode,
    relaxed: bool,
) -> Result<Params> {
    let t = match input {
        ParamInput::R(r) => {
            if r < 1 {
                return Err(Error::NotCanonicalForm(0));
            }
            1260u64
                .checked_mul(r)
                .and_then(|x| x.checked_add(169))
                .ok_or(Error::ArithmeticOverflow)?
        }
        ParamInput::T(t) => t,
    };
    if t.is_multiple_of(2) {
        return Err(Error::EvenT(t));
    }
    let canonical = t >= 1429 && t % 1260 == 169;
    if !relaxed && !canonical {
        return Err(Error::NotCanonicalForm(t));
    }
    check_ranges(t)?;
    let n_t = n_t(t)?;
    let n = n.unwrap_or(n_t);
    if n < n_t {
        return Err(Error::BudgetTooSmall { n, n_t });
    }
    let r = if canonical {
        Some((t - 169) / 1260)
    } else {
        None
    };
    Ok(Params {
        r,
        t,
        n,
        n_t,
        mode,
        relaxed,
    })
}

impl Params {
    /// Length of the tail path `B_0`.
    ///
    /// Everything except the tail accounts for `n_t` vertices in strict mode
    /// and `n_t - 1` in simple mode (the doubled-edge entry carries one
    /// vertex); the tail absorbs the rest so the total is always `n`.
    pub fn tail_len(&self) -> u128 {
        match self.mode {
            Mode::Strict => self.n - self.n_t,
            Mode::Simple => self.n - self.n_t + 1,
        }
    }
}
