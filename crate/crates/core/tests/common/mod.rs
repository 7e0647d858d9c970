//! Shared helpers for the integration tests: seeded random configurations
//! and a brute-force oracle for the aggregated counting function.
#![allow(dead_code)] // each test binary uses its own subset

use cuspidal_core::{build_semigroup, Configuration, CuspDescriptor, SemigroupTable};
use rand::Rng;

/// A random coprime pair (p, q), p < q, with delta = (p-1)(q-1)/2 <= max_delta.
pub fn random_pair<R: Rng>(rng: &mut R, max_delta: u64) -> (u64, u64) {
    loop {
        let p = rng.gen_range(2..=6u64);
        let q = rng.gen_range(p + 1..=p + 20);
        if gcd(p, q) != 1 {
            continue;
        }
        if (p - 1) * (q - 1) / 2 <= max_delta {
            return (p, q);
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn pair_table(p: u64, q: u64) -> SemigroupTable {
    build_semigroup(&CuspDescriptor::Generators(vec![p, q])).unwrap()
}

/// Random configuration with up to `max_n` torus-knot cusps.
pub fn random_config<R: Rng>(rng: &mut R, max_n: usize, max_delta: u64) -> Configuration {
    let n = rng.gen_range(1..=max_n);
    let cusps = (0..n)
        .map(|_| {
            let (p, q) = random_pair(rng, max_delta);
            pair_table(p, q)
        })
        .collect();
    Configuration::new(cusps).unwrap()
}

/// Exhaustive minimization over all compositions m_1 + ... + m_n = m.
pub fn r_brute_force(cusps: &[SemigroupTable], m: i64) -> i64 {
    if m <= 0 {
        return 0;
    }
    fn rec(cusps: &[SemigroupTable], rem: i64) -> i64 {
        if cusps.len() == 1 {
            return cusps[0].count_at(rem);
        }
        (0..=rem)
            .map(|v| cusps[0].count_at(v) + rec(&cusps[1..], rem - v))
            .min()
            .unwrap()
    }
    rec(cusps, m)
}
