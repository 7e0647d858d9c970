//! The aggregated counting function `R(m)` of a configuration of cusps.
//!
//! For cusps with semigroups `S_1, ..., S_n`,
//!
//! ```text
//! R(m) = min { sum_i #S_i cap [0, m_i)  :  m_1 + ... + m_n = m, m_i >= 0 }
//! ```
//!
//! which is the min-plus (infimal) convolution of the individual counting
//! functions. `R` is extended by `R(m) = 0` for `m <= 0`; the d-invariant
//! formula evaluates `R(m+g)` at arguments that can be negative, and this
//! extension is the unique one consistent with the symmetry identity
//! `R(g+m) - R(g-m) = m` and with the stable regime `R(k) = k - g`.
//!
//! Tables are computed by pairwise min-plus convolution in `O(n M^2)`; the
//! horizons involved are small enough that the naive DP is exact and fast.

use crate::error::Error;
use crate::semigroup::SemigroupTable;
use crate::Result;

/// Largest eagerly computed table horizon.
const HORIZON_CAP: u64 = 10_000_000;

/// Cap on the min-plus convolution work `(n-1) * horizon^2`.
const WORK_CAP: u128 = 4_000_000_000;

/// An ordered multiset of cusps with the derived genus `g = sum delta_i`.
///
/// The order is irrelevant to every derived quantity. A configuration is
/// never empty; a smooth point is modelled by the trivial cusp with no gaps
/// (see [`Configuration::smooth`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    cusps: Vec<SemigroupTable>,
    g: u64,
    /// R-table on `[0, stable_horizon]`; beyond it `R(k) = k - g`.
    base: Vec<i64>,
}

impl Configuration {
    /// Build a configuration from cusp tables. Fails on an empty list.
    pub fn new(cusps: Vec<SemigroupTable>) -> Result<Self> {
        if cusps.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let g = cusps.iter().map(|c| c.delta()).sum();
        let stable: u64 = cusps.iter().map(|c| c.conductor()).sum();
        if stable > HORIZON_CAP {
            return Err(Error::CapExceeded(format!(
                "combined conductor {} exceeds table cap {}",
                stable, HORIZON_CAP
            )));
        }
        let work = (cusps.len() as u128 - 1) * (stable as u128) * (stable as u128);
        if work > WORK_CAP {
            return Err(Error::CapExceeded(format!(
                "min-plus convolution would take ~{} steps (cap {})",
                work, WORK_CAP
            )));
        }
        let base = min_plus_fold(&cusps, stable as usize);
        Ok(Configuration { cusps, g, base })
    }

    /// The configuration of a smooth point: one trivial cusp, `g = 0`.
    pub fn smooth() -> Self {
        let trivial =
            crate::semigroup::build_semigroup(&crate::semigroup::CuspDescriptor::smooth())
                .expect("trivial cusp");
        Configuration::new(vec![trivial]).expect("nonempty")
    }

    pub fn cusps(&self) -> &[SemigroupTable] {
        &self.cusps
    }

    /// Seifert genus of the connected sum of the links: `sum delta_i`.
    pub fn g(&self) -> u64 {
        self.g
    }

    /// Horizon past which `R(k) = k - g` holds unconditionally
    /// (the sum of the conductors).
    pub fn stable_horizon(&self) -> u64 {
        self.cusps.iter().map(|c| c.conductor()).sum()
    }

    /// True when every cusp came from a semigroup description (not a raw
    /// gap set). Such configurations satisfy the symmetry identity.
    pub fn semigroup_mode(&self) -> bool {
        self.cusps.iter().all(|c| !c.from_gap_set())
    }

    /// True when every cusp's gap set is symmetric, whatever its origin.
    pub fn all_symmetric(&self) -> bool {
        self.cusps.iter().all(|c| c.symmetric())
    }
}

/// Min-plus convolution of all counting functions up to `horizon`.
fn min_plus_fold(cusps: &[SemigroupTable], horizon: usize) -> Vec<i64> {
    let mut acc: Vec<i64> = (0..=horizon as i64).map(|k| cusps[0].count_at(k)).collect();
    for cusp in &cusps[1..] {
        let mut next = vec![i64::MAX; horizon + 1];
        for (m, slot) in next.iter_mut().enumerate() {
            let mut best = i64::MAX;
            for (a, &head) in acc.iter().enumerate().take(m + 1) {
                let v = head + cusp.count_at((m - a) as i64);
                if v < best {
                    best = v;
                }
            }
            *slot = best;
        }
        acc = next;
    }
    acc
}

/// Values `R[0..=horizon]` of the aggregated counting function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTable {
    values: Vec<i64>,
}

impl RTable {
    pub fn horizon(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, m: usize) -> i64 {
        self.values[m]
    }
}

/// One validation finding about an R-table.
///
/// `enforced` distinguishes invariants that must hold for every
/// configuration from those that are only guaranteed in semigroup mode
/// (symmetry and the `2g` stability onset) and are otherwise reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFinding {
    pub name: &'static str,
    pub holds: bool,
    pub enforced: bool,
    pub detail: String,
}

/// Compute `R[0..=m]`.
///
/// The table always satisfies `R[0] = 0` and unit steps
/// `R[k+1] - R[k] in {0,1}`; both are asserted on every build.
pub fn r_table(cfg: &Configuration, m: usize) -> RTable {
    let mut values: Vec<i64> = Vec::with_capacity(m + 1);
    for k in 0..=m {
        values.push(r_value(cfg, k as i64));
    }
    assert_eq!(values[0], 0, "R[0] must be 0");
    for k in 0..m {
        let step = values[k + 1] - values[k];
        assert!(step == 0 || step == 1, "R must grow by unit steps at {}", k);
    }
    RTable { values }
}

/// `R(m)`, with `R(m) = 0` for `m <= 0` and `R(m) = m - g` beyond the
/// combined conductor.
pub fn r_value(cfg: &Configuration, m: i64) -> i64 {
    if m <= 0 {
        0
    } else if (m as usize) < cfg.base.len() {
        cfg.base[m as usize]
    } else {
        m - cfg.g as i64
    }
}

/// Codimension bound `sum_i #S_i cap [0, k_i)` for a multiplicity vector.
pub fn codim_bound(cfg: &Configuration, ks: &[i64]) -> Result<i64> {
    if ks.len() != cfg.cusps.len() {
        return Err(Error::LengthMismatch {
            expected: cfg.cusps.len(),
            got: ks.len(),
        });
    }
    if let Some(&k) = ks.iter().find(|&&k| k < 0) {
        return Err(Error::InvalidArgument(format!(
            "multiplicities must be nonnegative, got {}",
            k
        )));
    }
    Ok(cfg.cusps.iter().zip(ks).map(|(c, &k)| c.count_at(k)).sum())
}

/// `R[0..=m]` together with, for each value, the lexicographically smallest
/// composition `(m_1, ..., m_n)` attaining the minimum.
pub fn r_table_with_witness(cfg: &Configuration, m: usize) -> (RTable, Vec<Vec<i64>>) {
    let n = cfg.cusps.len();
    // suffix[i][k] = min-plus convolution of cusps i.. at k
    let mut suffix: Vec<Vec<i64>> = vec![Vec::new(); n];
    suffix[n - 1] = (0..=m as i64)
        .map(|k| cfg.cusps[n - 1].count_at(k))
        .collect();
    for i in (0..n - 1).rev() {
        let mut row = vec![i64::MAX; m + 1];
        for (k, slot) in row.iter_mut().enumerate() {
            let mut best = i64::MAX;
            for a in 0..=k {
                let v = cfg.cusps[i].count_at(a as i64) + suffix[i + 1][k - a];
                if v < best {
                    best = v;
                }
            }
            *slot = best;
        }
        suffix[i] = row;
    }
    let table = RTable {
        values: suffix[0].clone(),
    };
    let mut witnesses = Vec::with_capacity(m + 1);
    for target in 0..=m {
        let mut parts = Vec::with_capacity(n);
        let mut rem = target;
        for i in 0..n {
            if i == n - 1 {
                parts.push(rem as i64);
                break;
            }
            // smallest first part preserving optimality
            let total = suffix[i][rem];
            let choice = (0..=rem)
                .find(|&a| cfg.cusps[i].count_at(a as i64) + suffix[i + 1][rem - a] == total)
                .expect("optimal split exists");
            parts.push(choice as i64);
            rem -= choice;
        }
        witnesses.push(parts);
    }
    (table, witnesses)
}

/// Validate an R-table against the structural invariants.
///
/// `r0-zero` and `unit-steps` are enforced for every configuration;
/// `symmetry` (`R[g+m] - R[g-m] = m`) and `stability` (`R[k] = k - g` for
/// `k >= 2g`) are enforced only in semigroup mode and reported otherwise,
/// since a raw L-space-knot gap set need not satisfy them.
pub fn validate_r_table(cfg: &Configuration, table: &RTable) -> Vec<RFinding> {
    let g = cfg.g as i64;
    let horizon = table.horizon() as i64;
    let enforced_shape = cfg.semigroup_mode();
    let mut findings = Vec::new();

    let r0 = table.value(0) == 0;
    findings.push(RFinding {
        name: "r0-zero",
        holds: r0,
        enforced: true,
        detail: format!("R[0] = {}", table.value(0)),
    });

    let bad_step =
        (0..table.horizon()).find(|&k| !matches!(table.value(k + 1) - table.value(k), 0 | 1));
    findings.push(RFinding {
        name: "unit-steps",
        holds: bad_step.is_none(),
        enforced: true,
        detail: match bad_step {
            None => "R[k+1] - R[k] in {0,1} for all k".into(),
            Some(k) => format!("step {} at k={}", table.value(k + 1) - table.value(k), k),
        },
    });

    let bad_sym = (0..=g)
        .filter(|&m| g + m <= horizon)
        .find(|&m| r_value(cfg, g + m) - r_value(cfg, g - m) != m);
    findings.push(RFinding {
        name: "symmetry",
        holds: bad_sym.is_none(),
        enforced: enforced_shape,
        detail: match bad_sym {
            None => format!("R[g+m] - R[g-m] = m for 0 <= m <= g = {}", g),
            Some(m) => format!(
                "R[{}] - R[{}] = {} != {}",
                g + m,
                g - m,
                r_value(cfg, g + m) - r_value(cfg, g - m),
                m
            ),
        },
    });

    let bad_stab = (2 * g..=horizon).find(|&k| table.value(k as usize) != k - g);
    findings.push(RFinding {
        name: "stability",
        holds: bad_stab.is_none(),
        enforced: enforced_shape,
        detail: match bad_stab {
            None => format!("R[k] = k - {} for {} <= k <= {}", g, 2 * g, horizon),
            Some(k) => format!("R[{}] = {} != {}", k, table.value(k as usize), k - g),
        },
    });

    findings
}
