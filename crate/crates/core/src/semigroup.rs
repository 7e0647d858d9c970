//! Numerical semigroup of a single cuspidal singularity.
//!
//! A cusp (a locally irreducible plane-curve singularity) determines a
//! numerical semigroup `S`: the set of local intersection multiplicities of
//! the germ with other curve germs. The complement `Z_{>=0} \ S` is the
//! finite set of *gaps*; the number of gaps is the delta-invariant, which
//! equals the Seifert genus of the link of the singularity. The Alexander
//! polynomial of the link is `1 + (t-1) * sum_{k gap} t^k`.
//!
//! A cusp can be described in three ways:
//! - by semigroup generators with gcd 1 (e.g. `{4,5}` for the (4,5) torus
//!   knot cusp),
//! - by a Puiseux characteristic sequence `(b0; b1, ..., bk)`,
//! - by an explicit finite gap set (L-space-knot mode: the exponent set of
//!   the Alexander polynomial written as `1 + (t-1)(t^{g1}+...+t^{gk})`;
//!   such a set need not be the gap set of a semigroup).
//!
//! Gap enumeration is a representability sieve over `[0, prod generators)`,
//! which safely bounds the conductor; tables are truncated at the true
//! conductor afterwards. Semigroups of plane-curve cusps are symmetric
//! (`k in S  iff  2*delta-1-k not in S`), and every build from generators or
//! a characteristic sequence is validated against that symmetry; failures
//! abort with a diagnostic since they indicate inputs that do not come from
//! a cusp. Gap-set mode records symmetry instead of enforcing it.

use crate::error::Error;
use crate::Result;

/// Largest sieve horizon we are willing to allocate (in entries).
const SIEVE_CAP: u64 = 100_000_000;

/// One cuspidal singularity, in any of the supported descriptions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CuspDescriptor {
    /// Semigroup generators, positive integers with gcd 1.
    Generators(Vec<u64>),
    /// Puiseux characteristic sequence `(b0; b1, ..., bk)`, stored flat.
    CharSequence(Vec<u64>),
    /// Explicit finite gap set; positive integers (L-space-knot mode).
    GapSet(Vec<u64>),
}

impl CuspDescriptor {
    /// The trivial descriptor of a smooth point: semigroup `Z_{>=0}`.
    pub fn smooth() -> Self {
        CuspDescriptor::Generators(vec![1])
    }
}

/// Normalized numerical data of one cusp: gap set, delta-invariant,
/// conductor and the counting table `count[k] = #S cap [0,k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    gaps: Vec<u64>,
    delta: u64,
    conductor: u64,
    /// `count[k]` for `0 <= k <= conductor + 1`.
    count: Vec<u64>,
    /// Whether the table was built from an explicit gap set rather than a
    /// semigroup description.
    from_gap_set: bool,
    /// Whether `k in S iff 2*delta-1-k not in S` holds on `[0, 2*delta)`.
    /// Always true for semigroup-mode tables; recorded as-is for gap sets.
    symmetric: bool,
}

impl SemigroupTable {
    /// Sorted gap set.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps; equals the Seifert genus of the link of the cusp.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Least `c` such that `[c, infinity)` is contained in the set.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// True when the table came from an explicit gap set.
    pub fn from_gap_set(&self) -> bool {
        self.from_gap_set
    }

    /// True when the gap set satisfies the plane-curve symmetry.
    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    /// Membership test `k in S`.
    pub fn contains(&self, k: u64) -> bool {
        if k >= self.conductor {
            true
        } else {
            self.gaps.binary_search(&k).is_err()
        }
    }

    /// Counting function `#S cap [0, k)`, extended by 0 for `k <= 0` and by
    /// `k - delta` beyond the conductor.
    pub fn count_at(&self, k: i64) -> i64 {
        if k <= 0 {
            0
        } else if (k as u64) < self.count.len() as u64 {
            self.count[k as usize] as i64
        } else {
            k - self.delta as i64
        }
    }

    fn from_gaps(gaps: Vec<u64>, from_gap_set: bool) -> Self {
        let delta = gaps.len() as u64;
        let conductor = gaps.last().map_or(0, |g| g + 1);
        let mut count = Vec::with_capacity(conductor as usize + 2);
        count.push(0u64);
        let mut members = 0u64;
        for k in 0..=conductor {
            if gaps.binary_search(&k).is_err() {
                members += 1;
            }
            count.push(members);
        }
        let mut table = SemigroupTable {
            gaps,
            delta,
            conductor,
            count,
            from_gap_set,
            symmetric: false,
        };
        table.symmetric = table.check_symmetry();
        table
    }

    /// `k in S iff 2*delta-1-k not in S` for `0 <= k < 2*delta`.
    fn check_symmetry(&self) -> bool {
        let two_delta = 2 * self.delta;
        (0..two_delta).all(|k| self.contains(k) != self.contains(two_delta - 1 - k))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Convert a Puiseux characteristic sequence `(b0; b1, ..., bk)` into
/// semigroup generators via the standard recursion
/// `g0 = b0`, `g1 = b1`, `g_{i+1} = (e_{i-1}/e_i) * g_i + b_{i+1} - b_i`,
/// where `e_0 = b0` and `e_i = gcd(e_{i-1}, b_i)`.
pub fn char_sequence_to_generators(beta: &[u64]) -> Result<Vec<u64>> {
    if beta.len() < 2 {
        return Err(Error::InvalidCharSequence(format!(
            "need at least (b0; b1), got {} entries",
            beta.len()
        )));
    }
    if beta[0] < 2 {
        return Err(Error::InvalidCharSequence(format!(
            "b0 must be >= 2, got {}",
            beta[0]
        )));
    }
    for w in beta.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidCharSequence(format!(
                "entries must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
    }
    // e-chain must strictly decrease and end at 1.
    let mut e = beta[0];
    let mut es = vec![e];
    for &b in &beta[1..] {
        let next = gcd(e, b);
        if next >= e {
            return Err(Error::InvalidCharSequence(format!(
                "gcd chain must strictly decrease: e={} stays at gcd(e,{})={}",
                e, b, next
            )));
        }
        e = next;
        es.push(e);
    }
    if e != 1 {
        return Err(Error::InvalidCharSequence(format!(
            "gcd chain must end at 1, got {}",
            e
        )));
    }
    let mut gens = vec![beta[0], beta[1]];
    for i in 1..beta.len() - 1 {
        let quot = es[i - 1] / es[i];
        let next = quot
            .checked_mul(gens[i])
            .and_then(|x| x.checked_add(beta[i + 1] - beta[i]))
            .ok_or_else(|| Error::Overflow("characteristic sequence recursion".into()))?;
        gens.push(next);
    }
    Ok(gens)
}

fn gaps_from_generators(gens: &[u64]) -> Result<Vec<u64>> {
    if gens.is_empty() {
        return Err(Error::InvalidGenerators("empty generator list".into()));
    }
    if gens.contains(&0) {
        return Err(Error::InvalidGenerators(
            "generators must be positive".into(),
        ));
    }
    let g = gens.iter().copied().fold(0, gcd);
    if g != 1 {
        return Err(Error::InvalidGenerators(format!(
            "gcd of generators must be 1, got {}",
            g
        )));
    }
    let mut sorted: Vec<u64> = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted[0] == 1 {
        return Ok(Vec::new());
    }
    // Conductor bound: the product of the generators. Coarse but always
    // sufficient, and the tables are truncated at the true conductor below.
    let mut bound: u64 = 1;
    for &g in &sorted {
        bound = bound
            .checked_mul(g)
            .ok_or_else(|| Error::Overflow("conductor bound".into()))?;
    }
    if bound > SIEVE_CAP {
        return Err(Error::CapExceeded(format!(
            "gap sieve horizon {} exceeds cap {}",
            bound, SIEVE_CAP
        )));
    }
    let bound = bound as usize;
    let mut reachable = vec![false; bound];
    reachable[0] = true;
    for x in 1..bound {
        for &g in &sorted {
            let g = g as usize;
            if g <= x && reachable[x - g] {
                reachable[x] = true;
                break;
            }
        }
    }
    Ok((1..bound as u64)
        .filter(|&k| !reachable[k as usize])
        .collect())
}

/// Build the [`SemigroupTable`] of a cusp from any supported descriptor.
///
/// Generators and characteristic-sequence modes enumerate gaps by a
/// representability sieve and then enforce the plane-curve symmetry of the
/// result; gap-set mode takes the complement literally and only records
/// whether the symmetry happens to hold.
pub fn build_semigroup(d: &CuspDescriptor) -> Result<SemigroupTable> {
    match d {
        CuspDescriptor::Generators(gens) => {
            let gaps = gaps_from_generators(gens)?;
            let table = SemigroupTable::from_gaps(gaps, false);
            if !table.symmetric {
                return Err(Error::NotSymmetric(format!(
                    "generators {:?} give gap set {:?} (delta {}), which is not the \
                     semigroup of a plane-curve cusp",
                    gens,
                    table.gaps(),
                    table.delta()
                )));
            }
            Ok(table)
        }
        CuspDescriptor::CharSequence(beta) => {
            let gens = char_sequence_to_generators(beta)?;
            let gaps = gaps_from_generators(&gens)?;
            let table = SemigroupTable::from_gaps(gaps, false);
            if !table.symmetric {
                return Err(Error::NotSymmetric(format!(
                    "characteristic sequence {:?} converts to generators {:?} whose \
                     semigroup is not symmetric; check the sequence",
                    beta, gens
                )));
            }
            Ok(table)
        }
        CuspDescriptor::GapSet(set) => {
            if set.contains(&0) {
                return Err(Error::InvalidGapSet("0 is always in the semigroup".into()));
            }
            let mut gaps = set.clone();
            gaps.sort_unstable();
            gaps.dedup();
            Ok(SemigroupTable::from_gaps(gaps, true))
        }
    }
}

/// Delta-invariant (number of gaps) of the cusp.
pub fn delta(d: &CuspDescriptor) -> Result<u64> {
    Ok(build_semigroup(d)?.delta())
}

/// Seifert genus of the link of the cusp; equals the delta-invariant.
pub fn seifert_genus(d: &CuspDescriptor) -> Result<u64> {
    delta(d)
}

/// Alexander polynomial `Delta(t)` of the link of a cusp, as a dense
/// integer coefficient list starting at degree 0.
///
/// For the gap set `G`, `Delta(t) = 1 + (t-1) * sum_{k in G} t^k`. This
/// forces `Delta(1) = 1`, and for plane-curve cusps the polynomial is
/// palindromic of degree `2*delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPoly {
    coeffs: Vec<i64>,
}

impl AlexanderPoly {
    /// Expand `1 + (t-1) P(t)` with `P(t) = sum of t^k over the gaps`.
    pub fn from_table(table: &SemigroupTable) -> Self {
        let deg = table.gaps().last().map_or(0, |g| g + 1) as usize;
        let mut coeffs = vec![0i64; deg + 1];
        coeffs[0] = 1;
        for &k in table.gaps() {
            coeffs[k as usize + 1] += 1;
            coeffs[k as usize] -= 1;
        }
        AlexanderPoly { coeffs }
    }

    /// Coefficients, lowest degree first. The leading coefficient is nonzero.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluate at `t = 1`; identically 1 by construction.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Whether the coefficient list equals its reverse.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

/// Alexander polynomial of the link of the cusp described by `d`.
pub fn alexander(d: &CuspDescriptor) -> Result<AlexanderPoly> {
    Ok(AlexanderPoly::from_table(&build_semigroup(d)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(v: &[u64]) -> CuspDescriptor {
        CuspDescriptor::Generators(v.to_vec())
    }

    #[test]
    fn trefoil_cusp() {
        let t = build_semigroup(&gens(&[2, 3])).unwrap();
        assert_eq!(t.gaps(), &[1]);
        assert_eq!(t.delta(), 1);
        assert_eq!(t.conductor(), 2);
    }

    #[test]
    fn gaps_of_4_5() {
        // Oracle: brute-force representability scan up to 4*5.
        let t = build_semigroup(&gens(&[4, 5])).unwrap();
        assert_eq!(t.gaps(), &[1, 2, 3, 6, 7, 11]);
        assert_eq!(t.delta(), 6);
        assert_eq!(t.conductor(), 12);
    }

    #[test]
    fn char_sequence_4_6_7() {
        assert_eq!(
            char_sequence_to_generators(&[4, 6, 7]).unwrap(),
            vec![4, 6, 13]
        );
        let t = build_semigroup(&CuspDescriptor::CharSequence(vec![4, 6, 7])).unwrap();
        assert_eq!(t.gaps(), &[1, 2, 3, 5, 7, 9, 11, 15]);
        assert_eq!(t.delta(), 8);
    }

    #[test]
    fn char_sequence_single_pair_is_a_torus_knot() {
        assert_eq!(char_sequence_to_generators(&[2, 3]).unwrap(), vec![2, 3]);
        let via_char = build_semigroup(&CuspDescriptor::CharSequence(vec![3, 5])).unwrap();
        let via_gens = build_semigroup(&gens(&[3, 5])).unwrap();
        assert_eq!(via_char, via_gens);
    }

    #[test]
    fn sieve_horizon_is_capped() {
        assert!(matches!(
            build_semigroup(&gens(&[99991, 99989])),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn smooth_point() {
        let t = build_semigroup(&CuspDescriptor::smooth()).unwrap();
        assert_eq!(t.gaps(), &[] as &[u64]);
        assert_eq!(t.delta(), 0);
        assert_eq!(t.conductor(), 0);
        assert_eq!(
            alexander(&CuspDescriptor::smooth()).unwrap().coefficients(),
            &[1]
        );
    }

    #[test]
    fn delta_of_torus_knot_cusps() {
        assert_eq!(delta(&gens(&[2, 3])).unwrap(), 1);
        assert_eq!(delta(&gens(&[4, 5])).unwrap(), 6);
        // (p-1)(q-1)/2 cross-checked by the gap count.
        assert_eq!(delta(&gens(&[6, 7])).unwrap(), 15);
        assert_eq!(seifert_genus(&gens(&[6, 7])).unwrap(), 15);
    }

    #[test]
    fn alexander_examples() {
        // 1 + (t-1) t  =  t^2 - t + 1
        assert_eq!(
            alexander(&gens(&[2, 3])).unwrap().coefficients(),
            &[1, -1, 1]
        );
        // gaps {1,3}: 1 + (t-1)(t + t^3) = t^4 - t^3 + t^2 - t + 1
        assert_eq!(
            alexander(&gens(&[2, 5])).unwrap().coefficients(),
            &[1, -1, 1, -1, 1]
        );
    }

    #[test]
    fn alexander_degree_and_symmetry() {
        for v in [&[2u64, 3][..], &[4, 5], &[3, 4], &[5, 6], &[6, 7]] {
            let t = build_semigroup(&gens(v)).unwrap();
            let a = AlexanderPoly::from_table(&t);
            assert_eq!(a.eval_at_one(), 1);
            assert!(a.is_palindromic());
            assert_eq!(a.degree() as u64, 2 * t.delta());
        }
    }

    #[test]
    fn count_table_shape() {
        let t = build_semigroup(&gens(&[4, 5])).unwrap();
        assert_eq!(t.count_at(0), 0);
        for k in 0..40i64 {
            let step = t.count_at(k + 1) - t.count_at(k);
            assert!(step == 0 || step == 1);
        }
        for k in t.conductor() as i64..40 {
            assert_eq!(t.count_at(k), k - t.delta() as i64);
        }
        assert_eq!(t.count_at(-5), 0);
        assert_eq!(t.count_at(11), 6);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            build_semigroup(&gens(&[4, 6])),
            Err(Error::InvalidGenerators(_))
        ));
        assert!(matches!(
            build_semigroup(&CuspDescriptor::GapSet(vec![0, 2])),
            Err(Error::InvalidGapSet(_))
        ));
        // <3,4,5> is a numerical semigroup but not symmetric, hence not the
        // semigroup of a cusp.
        assert!(matches!(
            build_semigroup(&gens(&[3, 4, 5])),
            Err(Error::NotSymmetric(_))
        ));
        assert!(matches!(
            char_sequence_to_generators(&[4, 6, 8]),
            Err(Error::InvalidCharSequence(_))
        ));
        assert!(matches!(
            char_sequence_to_generators(&[4, 8, 9]),
            Err(Error::InvalidCharSequence(_))
        ));
        assert!(matches!(
            char_sequence_to_generators(&[1, 2]),
            Err(Error::InvalidCharSequence(_))
        ));
    }

    #[test]
    fn gap_set_mode_is_literal() {
        let t = build_semigroup(&CuspDescriptor::GapSet(vec![1, 3])).unwrap();
        assert_eq!(t.delta(), 2);
        assert!(t.symmetric());
        assert!(t.from_gap_set());
        // {5} is not symmetric; accepted in gap-set mode, recorded as such.
        let t = build_semigroup(&CuspDescriptor::GapSet(vec![5])).unwrap();
        assert!(!t.symmetric());
        assert_eq!(t.conductor(), 6);
    }
}
