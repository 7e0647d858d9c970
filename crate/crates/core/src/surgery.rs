//! Spin-c structures and d-invariants of large positive surgeries.
//!
//! For a knot `J = J_1 # ... # J_n` that is a connected sum of algebraic (or
//! L-space) knots, and a surgery coefficient `q > 2 g(J)`, the Ozsvath-Szabo
//! correction terms of `Y = S^3_q(J)` have a closed form in terms of the
//! aggregated counting function `R` of the configuration:
//!
//! ```text
//! d(Y, s_m) = ((q - 2m)^2 - q) / 4q  -  2 (R(m + g) - m)
//! ```
//!
//! where the spin-c structures of `Y` are indexed by the integers
//! `m in [-q/2, q/2)` via the pairing of the first Chern class with the
//! capped Seifert surface. All values are exact rationals with denominator
//! dividing `4q`; floating point would corrupt verdicts near equality, so it
//! is never used.

use num::rational::BigRational;
use num::BigInt;

use crate::error::Error;
use crate::rfunction::{r_value, Configuration};
use crate::Result;

/// A spin-c structure index on a `q`-surgery: an integer in `[-q/2, q/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpinCIndex {
    m: i64,
}

impl SpinCIndex {
    /// Validate `-q/2 <= m < q/2` (as rationals) and wrap the index.
    pub fn new(q: i64, m: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::InvalidArgument(format!(
                "surgery coefficient must be positive, got {}",
                q
            )));
        }
        if -q <= 2 * m && 2 * m < q {
            Ok(SpinCIndex { m })
        } else {
            Err(Error::SpinCOutOfRange { q, m })
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }
}

/// A large positive surgery on the connected sum of the links of a
/// configuration of cusps.
#[derive(Debug, Clone)]
pub struct SurgeryProblem {
    cfg: Configuration,
    q: i64,
}

impl SurgeryProblem {
    /// Requires `q > 2 g`; outside that range the closed-form formula is
    /// wrong, so the constructor refuses rather than return silent garbage.
    pub fn new(cfg: Configuration, q: i64) -> Result<Self> {
        let two_g = 2 * cfg.g() as i64;
        if q <= two_g {
            return Err(Error::SurgeryNotLarge { q, two_g });
        }
        Ok(SurgeryProblem { cfg, q })
    }

    pub fn cfg(&self) -> &Configuration {
        &self.cfg
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// All spin-c indices of a `q`-surgery, ascending: the integers in
/// `[-q/2, q/2)`. The left endpoint is closed, so even `q` includes `-q/2`.
pub fn spinc_range(q: i64) -> Result<Vec<SpinCIndex>> {
    if q <= 0 {
        return Err(Error::InvalidArgument(format!(
            "surgery coefficient must be positive, got {}",
            q
        )));
    }
    Ok((-(q / 2)..=(q - 1) / 2).map(|m| SpinCIndex { m }).collect())
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `c_1^2` of the spin-c structure `t_m` on the two-handle cobordism:
/// exactly `(q - 2m)^2 / q`.
pub fn c1_squared(q: i64, m: i64) -> Result<BigRational> {
    let m = SpinCIndex::new(q, m)?.m;
    let num = big(q - 2 * m) * big(q - 2 * m);
    Ok(BigRational::new(num, big(q)))
}

/// d-invariant `d(S^3_q(J), s_m)` of a large surgery.
pub fn d_invariant(prob: &SurgeryProblem, m: i64) -> Result<BigRational> {
    let q = prob.q;
    let m = SpinCIndex::new(q, m)?.m;
    let g = prob.cfg.g() as i64;
    let lens = BigRational::new(big(q - 2 * m) * big(q - 2 * m) - big(q), big(4 * q));
    let correction = 2 * (r_value(&prob.cfg, m + g) - m);
    Ok(lens - BigRational::from(big(correction)))
}

/// The full map `m -> d(Y, s_m)` of a surgery, ascending in `m`.
pub type DInvariantTable = Vec<(i64, BigRational)>;

/// d-invariants for every spin-c index of the surgery, ascending in `m`.
pub fn d_invariant_table(prob: &SurgeryProblem) -> Result<DInvariantTable> {
    spinc_range(prob.q)?
        .into_iter()
        .map(|s| Ok((s.m(), d_invariant(prob, s.m())?)))
        .collect()
}

/// The Ozsvath-Szabo bound `(c_1^2(t) - 3 sigma(W) - 2 chi(W)) / 4` for a
/// spin-c structure on a negative-definite four-manifold `W`.
pub fn os_bound(c1sq: &BigRational, sigma_w: i64, chi_w: i64) -> BigRational {
    (c1sq - BigRational::from(big(3 * sigma_w + 2 * chi_w))) / BigRational::from(big(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{build_semigroup, CuspDescriptor};

    fn trefoil_cfg() -> Configuration {
        let t = build_semigroup(&CuspDescriptor::Generators(vec![2, 3])).unwrap();
        Configuration::new(vec![t]).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn spinc_ranges() {
        let ms = |q| {
            spinc_range(q)
                .unwrap()
                .iter()
                .map(|s| s.m())
                .collect::<Vec<_>>()
        };
        assert_eq!(ms(1), vec![0]);
        assert_eq!(ms(9), (-4..=4).collect::<Vec<_>>());
        assert_eq!(ms(10), (-5..=4).collect::<Vec<_>>());
        assert!(spinc_range(0).is_err());
    }

    #[test]
    fn c1_squared_values() {
        assert_eq!(c1_squared(9, 0).unwrap(), rat(9, 1));
        assert_eq!(c1_squared(9, 4).unwrap(), rat(1, 9));
        assert!(c1_squared(9, 5).is_err());
        // m = q/2 sits outside the half-open interval even for even q
        assert!(c1_squared(10, 5).is_err());
        assert!(c1_squared(10, -5).is_ok());
    }

    #[test]
    fn trefoil_surgery_9() {
        let prob = SurgeryProblem::new(trefoil_cfg(), 9).unwrap();
        assert_eq!(d_invariant(&prob, 0).unwrap(), rat(0, 1));
        assert_eq!(d_invariant(&prob, 4).unwrap(), rat(-2, 9));
        // full table, brute-forced independently
        let expect = [
            (-4, rat(-2, 9)),
            (-3, rat(0, 1)),
            (-2, rat(4, 9)),
            (-1, rat(10, 9)),
            (0, rat(0, 1)),
            (1, rat(10, 9)),
            (2, rat(4, 9)),
            (3, rat(0, 1)),
            (4, rat(-2, 9)),
        ];
        let table = d_invariant_table(&prob).unwrap();
        assert_eq!(table.len(), expect.len());
        for ((m, d), (em, ed)) in table.iter().zip(expect.iter()) {
            assert_eq!(m, em);
            assert_eq!(d, ed);
        }
    }

    #[test]
    fn smooth_gives_lens_space_values() {
        let prob = SurgeryProblem::new(Configuration::smooth(), 5).unwrap();
        assert_eq!(d_invariant(&prob, 0).unwrap(), rat(1, 1));
        // g = 0 forces d(s_m) = c1^2/4 - 1/4 for m >= 0; negative indices
        // carry the conjugation-symmetric value.
        for q in 1..=10 {
            let prob = SurgeryProblem::new(Configuration::smooth(), q).unwrap();
            for s in spinc_range(q).unwrap() {
                let m = s.m();
                let d = d_invariant(&prob, m).unwrap();
                if m >= 0 {
                    let expected = c1_squared(q, m).unwrap() / rat(4, 1) - rat(1, 4);
                    assert_eq!(d, expected);
                } else if 2 * -m < q {
                    // m = -q/2 is self-conjugate; no partner index to compare
                    assert_eq!(d, d_invariant(&prob, -m).unwrap());
                }
            }
        }
    }

    #[test]
    fn largeness_is_enforced() {
        assert!(matches!(
            SurgeryProblem::new(trefoil_cfg(), 2),
            Err(Error::SurgeryNotLarge { .. })
        ));
        // q = 2g + 1 is the smallest admissible coefficient
        assert!(SurgeryProblem::new(trefoil_cfg(), 3).is_ok());
    }

    #[test]
    fn os_bound_values() {
        assert_eq!(os_bound(&rat(0, 1), 0, 0), rat(0, 1));
        assert_eq!(os_bound(&rat(9, 1), -1, 1), rat(5, 2));
        assert_eq!(os_bound(&rat(1, 9), 0, 2), rat(-35, 36));
    }

    #[test]
    fn denominators_divide_4q() {
        let prob = SurgeryProblem::new(trefoil_cfg(), 12).unwrap();
        for s in spinc_range(12).unwrap() {
            let d = d_invariant(&prob, s.m()).unwrap();
            let four_q = BigInt::from(48);
            assert_eq!(&four_q % d.denom(), BigInt::from(0));
        }
    }
}
