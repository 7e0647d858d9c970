//! Configuration search: enumerate cusp-type catalogs and partitions of a
//! delta budget, then run the selected criterion on every candidate.
//!
//! The catalog holds coprime pairs `(p, q)`, `p < q`, with
//! `(p-1)(q-1)/2 <= budget`, and (when two characteristic pairs are
//! allowed) sequences `(b0; b1, b2)` within the budget, pruned by the
//! closed form `2 delta = (e0-e1) b1 + (e1-1) b2 - b0 + 1`. Entries are
//! sorted by `(delta, descriptor kind, numbers)` so search reports are
//! stable across runs and platforms. Candidate configurations are the
//! multisets of catalog entries with `sum delta_i` equal to the budget and
//! at most `maxCusps` members, enumerated in lexicographic catalog order.

use cuspidal_core::{build_semigroup, Configuration, Error, SemigroupTable};

use crate::request::CuspSpec;

/// One candidate cusp type.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: CuspSpec,
    pub delta: u64,
    pub table: SemigroupTable,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All cusp types with `delta <= budget`, sorted by (delta, kind, numbers).
pub fn build_catalog(budget: u64, max_pairs: u32) -> Result<Vec<CatalogEntry>, Error> {
    if !(1..=2).contains(&max_pairs) {
        return Err(Error::InvalidArgument(format!(
            "maxPairs must be 1 or 2, got {}",
            max_pairs
        )));
    }
    let mut entries = Vec::new();
    let mut p = 2u64;
    while (p - 1) * p / 2 <= budget {
        let mut q = p + 1;
        while (p - 1) * (q - 1) / 2 <= budget {
            if gcd(p, q) == 1 {
                let spec = CuspSpec::Gens { gens: vec![p, q] };
                let table = build_semigroup(&spec.to_descriptor())?;
                entries.push(CatalogEntry {
                    delta: table.delta(),
                    spec,
                    table,
                });
            }
            q += 1;
        }
        p += 1;
    }
    if max_pairs >= 2 {
        for b0 in 4..=budget.saturating_add(1) {
            for e1 in 2..b0 {
                if b0 % e1 != 0 {
                    continue;
                }
                let mut b1 = b0 + 1;
                loop {
                    let min_two_delta = (b0 - e1) * b1 + (e1 - 1) * (b1 + 1) - b0 + 1;
                    if min_two_delta > 2 * budget {
                        break;
                    }
                    if gcd(b0, b1) == e1 {
                        let mut b2 = b1 + 1;
                        loop {
                            let two_delta = (b0 - e1) * b1 + (e1 - 1) * b2 - b0 + 1;
                            if two_delta > 2 * budget {
                                break;
                            }
                            if gcd(e1, b2) == 1 {
                                let spec = CuspSpec::Char {
                                    char_seq: vec![b0, b1, b2],
                                };
                                let table = build_semigroup(&spec.to_descriptor())?;
                                debug_assert_eq!(table.delta(), two_delta / 2);
                                entries.push(CatalogEntry {
                                    delta: table.delta(),
                                    spec,
                                    table,
                                });
                            }
                            b2 += 1;
                        }
                    }
                    b1 += 1;
                }
            }
        }
    }
    entries.sort_by(|a, b| (a.delta, &a.spec).cmp(&(b.delta, &b.spec)));
    Ok(entries)
}

/// Multisets of catalog indices (nondecreasing) with `sum delta = budget`
/// and at most `max_cusps` members, in lexicographic index order.
/// `budget = 0` yields the single empty (smooth) configuration.
pub fn enumerate_partitions(
    catalog: &[CatalogEntry],
    budget: u64,
    max_cusps: usize,
    max_candidates: u64,
) -> Result<Vec<Vec<usize>>, Error> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    rec(
        catalog,
        budget,
        max_cusps,
        max_candidates,
        0,
        &mut current,
        &mut out,
    )?;
    return Ok(out);

    fn rec(
        catalog: &[CatalogEntry],
        remaining: u64,
        slots: usize,
        cap: u64,
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), Error> {
        if remaining == 0 {
            if out.len() as u64 >= cap {
                return Err(Error::CapExceeded(format!(
                    "search would exceed {} candidate configurations",
                    cap
                )));
            }
            out.push(current.clone());
            return Ok(());
        }
        if slots == 0 {
            return Ok(());
        }
        for i in from..catalog.len() {
            if catalog[i].delta > remaining {
                // catalog is sorted by delta, nothing later can fit
                break;
            }
            current.push(i);
            rec(
                catalog,
                remaining - catalog[i].delta,
                slots - 1,
                cap,
                i,
                current,
                out,
            )?;
            current.pop();
        }
        Ok(())
    }
}

/// Assemble the configuration of one candidate.
pub fn candidate_configuration(
    catalog: &[CatalogEntry],
    indices: &[usize],
) -> Result<Configuration, Error> {
    if indices.is_empty() {
        return Ok(Configuration::smooth());
    }
    Configuration::new(indices.iter().map(|&i| catalog[i].table.clone()).collect())
}

/// The cusp specs of one candidate, for the report.
pub fn candidate_specs(catalog: &[CatalogEntry], indices: &[usize]) -> Vec<CuspSpec> {
    indices.iter().map(|&i| catalog[i].spec.clone()).collect()
}
