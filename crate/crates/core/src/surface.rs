//! Numerical model of the ambient surface.
//!
//! A surface is described by the integer Gram matrix of its intersection
//! form on a chosen basis of the divisor/homology lattice, the canonical
//! class `K` in coordinates, the first Betti number and the geometric genus.
//! From these the module derives the signature (exactly, by congruence
//! elimination over the rationals, no floating point), `b_2^+`, the
//! topological Euler characteristic, sheaf and divisor Euler
//! characteristics via Riemann-Roch, and the genus formulas.
//!
//! Consistency requirements:
//! - the Gram matrix is nondegenerate;
//! - `K` is characteristic: `K.x = x.x (mod 2)` for all lattice vectors;
//! - `K^2 = 3 sigma + 2 chi` (Hirzebruch signature identity, which also
//!   holds for almost complex four-manifolds);
//! - projective surfaces have `b_2^+ = p_g + 1` and even `b_1`; the
//!   almost-complex mode instead requires `b_2^+ = 1`.
//!
//! `h^0` is an oracle, not an algorithm: the CP^2 and Hirzebruch presets
//! count lattice points of the standard toric polygons, and custom surfaces
//! may supply an explicit table; anything else is reported as unavailable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::rational::BigRational;
use num::{BigInt, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// An integer coordinate vector in the chosen lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass(pub Vec<i64>);

impl DivisorClass {
    pub fn zero(rank: usize) -> Self {
        DivisorClass(vec![0; rank])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn scale(&self, s: i64) -> DivisorClass {
        DivisorClass(self.0.iter().map(|&x| x * s).collect())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.dim(), rhs.dim());
        DivisorClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.dim(), rhs.dim());
        DivisorClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass(self.0.iter().map(|&x| -x).collect())
    }
}

/// Validation regime for a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    /// Smooth projective surface: `b_2^+ = p_g + 1`, `b_1` even.
    Projective,
    /// Smooth four-manifold with an almost complex structure: `b_2^+ = 1`.
    AlmostComplex,
}

/// Built-in surfaces with toric `h^0` and effective-cone rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Rank-1 lattice generated by the hyperplane class `H`; `K = -3H`.
    Cp2,
    /// Hirzebruch surface `F_e`, basis (fiber `F`, section `B` with
    /// `B^2 = -e`); `K = -(e+2)F - 2B`.
    Hirzebruch { e: i64 },
}

/// Source of `h^0` values for a surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum H0Oracle {
    Preset(Preset),
    Table(BTreeMap<Vec<i64>, i64>),
}

/// One pass/fail validation finding with the numbers that produced it.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SurfaceFinding {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

fn finding(name: &str, holds: bool, detail: String) -> SurfaceFinding {
    SurfaceFinding {
        name: name.to_string(),
        holds,
        detail,
    }
}

/// Intersection lattice, canonical class and characteristic numbers of the
/// ambient surface. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceData {
    gram: Vec<Vec<i64>>,
    k: DivisorClass,
    b1: i64,
    pg: i64,
    kind: SurfaceKind,
    preset: Option<Preset>,
    h0_table: Option<BTreeMap<Vec<i64>, i64>>,
}

impl SurfaceData {
    /// The projective plane: lattice `<H>` with `H^2 = 1`, `K = -3H`.
    pub fn cp2() -> Self {
        SurfaceData {
            gram: vec![vec![1]],
            k: DivisorClass(vec![-3]),
            b1: 0,
            pg: 0,
            kind: SurfaceKind::Projective,
            preset: Some(Preset::Cp2),
            h0_table: None,
        }
    }

    /// Hirzebruch surface `F_e` (`e >= 0`), basis (F, B).
    pub fn hirzebruch(e: i64) -> Result<Self> {
        if e < 0 {
            return Err(Error::InvalidArgument(format!(
                "Hirzebruch parameter must be >= 0, got {}",
                e
            )));
        }
        Ok(SurfaceData {
            gram: vec![vec![0, 1], vec![1, -e]],
            k: DivisorClass(vec![-(e + 2), -2]),
            b1: 0,
            pg: 0,
            kind: SurfaceKind::Projective,
            preset: Some(Preset::Hirzebruch { e }),
            h0_table: None,
        })
    }

    /// Parse a preset identifier: `cp2` or `hirzebruch:e`.
    pub fn from_preset_id(id: &str) -> Result<Self> {
        if id == "cp2" {
            return Ok(Self::cp2());
        }
        if let Some(e) = id.strip_prefix("hirzebruch:") {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad preset id '{}'", id)))?;
            return Self::hirzebruch(e);
        }
        Err(Error::InvalidArgument(format!(
            "unknown preset '{}'; expected 'cp2' or 'hirzebruch:e'",
            id
        )))
    }

    /// A user-declared surface with an explicit Gram matrix.
    pub fn custom(
        gram: Vec<Vec<i64>>,
        k: Vec<i64>,
        b1: i64,
        pg: i64,
        kind: SurfaceKind,
        h0_table: Option<BTreeMap<Vec<i64>, i64>>,
    ) -> Result<Self> {
        let n = gram.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty Gram matrix".into()));
        }
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch("Gram matrix is not square".into()));
        }
        for (i, row) in gram.iter().enumerate() {
            for (j, &x) in row.iter().enumerate().take(i) {
                if x != gram[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "Gram matrix not symmetric at ({}, {})",
                        i, j
                    )));
                }
            }
        }
        if k.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "canonical class has {} coordinates, lattice rank is {}",
                k.len(),
                n
            )));
        }
        if b1 < 0 || pg < 0 {
            return Err(Error::InvalidArgument(
                "b1 and pg must be nonnegative".into(),
            ));
        }
        Ok(SurfaceData {
            gram,
            k: DivisorClass(k),
            b1,
            pg,
            kind,
            preset: None,
            h0_table,
        })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical_class(&self) -> &DivisorClass {
        &self.k
    }

    pub fn b1(&self) -> i64 {
        self.b1
    }

    pub fn pg(&self) -> i64 {
        self.pg
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn preset(&self) -> Option<Preset> {
        self.preset
    }

    /// Intersection pairing `A . B` in the lattice.
    pub fn pair(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        let n = self.rank();
        if a.dim() != n || b.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "pairing {}-dim and {}-dim classes in a rank-{} lattice",
                a.dim(),
                b.dim(),
                n
            )));
        }
        let mut acc: i128 = 0;
        for (&ai, row) in a.0.iter().zip(&self.gram) {
            for (&gij, &bj) in row.iter().zip(&b.0) {
                acc += ai as i128 * gij as i128 * bj as i128;
            }
        }
        i64::try_from(acc).map_err(|_| Error::Overflow("intersection pairing".into()))
    }

    pub fn self_intersection(&self, a: &DivisorClass) -> Result<i64> {
        self.pair(a, a)
    }

    /// Exact inertia `(n_+, n_-, n_0)` of the intersection form.
    pub fn inertia(&self) -> (usize, usize, usize) {
        signature_of(&self.gram)
    }

    /// Signature `sigma = n_+ - n_-`.
    pub fn sigma(&self) -> i64 {
        let (p, m, _) = self.inertia();
        p as i64 - m as i64
    }

    pub fn b2_plus(&self) -> i64 {
        self.inertia().0 as i64
    }

    /// Topological Euler characteristic `2 - 2 b_1 + b_2`.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.b1 + self.rank() as i64
    }

    /// `K.x = x.x (mod 2)` for every basis vector (hence for every vector).
    pub fn k_is_characteristic(&self) -> bool {
        (0..self.rank()).all(|i| {
            let kx: i128 = self
                .k
                .0
                .iter()
                .zip(&self.gram)
                .map(|(&kj, row)| kj as i128 * row[i] as i128)
                .sum();
            (kx - self.gram[i][i] as i128) % 2 == 0
        })
    }

    /// `chi(O_X) = 1 - b_1/2 + p_g`.
    pub fn chi_sheaf(&self) -> Result<i64> {
        if self.b1 % 2 != 0 {
            return Err(Error::ParityViolation(format!(
                "irregularity b1/2 needs even b1, got {}",
                self.b1
            )));
        }
        Ok(1 - self.b1 / 2 + self.pg)
    }

    /// Riemann-Roch: `chi(D) = D.(D-K)/2 + chi(O_X)`.
    pub fn chi_divisor(&self, d: &DivisorClass) -> Result<i64> {
        let t = self.pair(d, &(d - &self.k))?;
        if t % 2 != 0 {
            return Err(Error::ParityViolation(format!(
                "D.(D-K) = {} is odd; K is not characteristic",
                t
            )));
        }
        Ok(t / 2 + self.chi_sheaf()?)
    }

    /// Arithmetic genus `p_a(C) = C.(C+K)/2 + 1`.
    pub fn arithmetic_genus(&self, c: &DivisorClass) -> Result<i64> {
        let t = self.pair(c, &(c + &self.k))?;
        if t % 2 != 0 {
            return Err(Error::ParityViolation(format!(
                "C.(C+K) = {} is odd; K is not characteristic",
                t
            )));
        }
        Ok(t / 2 + 1)
    }

    /// The Seifert genus a rational cuspidal curve in class `C` must carry:
    /// its cusps' delta-invariants must sum to `p_a(C)`, since the geometric
    /// genus is `p_a(C) - sum delta_i` and vanishes for a rational curve.
    pub fn required_genus(&self, c: &DivisorClass) -> Result<i64> {
        self.arithmetic_genus(c)
    }

    /// The source of `h^0` values, if the surface has one.
    pub fn h0_oracle(&self) -> Option<H0Oracle> {
        match (self.preset, &self.h0_table) {
            (Some(p), _) => Some(H0Oracle::Preset(p)),
            (None, Some(t)) => Some(H0Oracle::Table(t.clone())),
            (None, None) => None,
        }
    }

    /// `h^0(D)` if an oracle covers `D`; `None` otherwise.
    pub fn h0(&self, d: &DivisorClass) -> Result<Option<i64>> {
        if d.dim() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "h0 of a {}-dim class in a rank-{} lattice",
                d.dim(),
                self.rank()
            )));
        }
        match self.preset {
            Some(Preset::Cp2) => Ok(Some(h0_cp2(d.0[0])?)),
            Some(Preset::Hirzebruch { e }) => Ok(Some(h0_hirzebruch(e, d.0[0], d.0[1])?)),
            None => Ok(self.h0_table.as_ref().and_then(|t| t.get(&d.0).copied())),
        }
    }

    /// Whether a class lies in the effective cone of the preset.
    /// `None` when the surface has no preset rule.
    pub fn preset_effective(&self, d: &DivisorClass) -> Option<bool> {
        match self.preset {
            Some(Preset::Cp2) => Some(d.0[0] >= 0),
            Some(Preset::Hirzebruch { .. }) => Some(d.0[0] >= 0 && d.0[1] >= 0),
            None => None,
        }
    }

    /// Whether no section of `O(D)` can vanish identically on `C`:
    /// guaranteed exactly when `D - C` is not effective. Decidable only on
    /// presets; `None` otherwise.
    pub fn nonvanishing_guaranteed(&self, c: &DivisorClass, d: &DivisorClass) -> Option<bool> {
        self.preset_effective(&(d - c)).map(|eff| !eff)
    }

    /// All validation findings in the surface's own regime.
    pub fn validate(&self) -> Vec<SurfaceFinding> {
        self.validate_for(self.kind)
    }

    /// Validation findings for the given regime.
    pub fn validate_for(&self, kind: SurfaceKind) -> Vec<SurfaceFinding> {
        let mut out = Vec::new();
        let (p, m, z) = self.inertia();
        out.push(finding(
            "gram-nondegenerate",
            z == 0,
            format!("inertia n+ = {}, n- = {}, n0 = {}", p, m, z),
        ));
        out.push(finding(
            "k-characteristic",
            self.k_is_characteristic(),
            format!("K = {}", self.k),
        ));
        match kind {
            SurfaceKind::Projective => {
                out.push(finding(
                    "b2plus-consistency",
                    p as i64 == self.pg + 1,
                    format!("b2+ = {}, pg + 1 = {}", p, self.pg + 1),
                ));
                out.push(finding(
                    "b1-parity",
                    self.b1 % 2 == 0,
                    format!("b1 = {}", self.b1),
                ));
            }
            SurfaceKind::AlmostComplex => {
                out.push(finding("b2plus-one", p as i64 == 1, format!("b2+ = {}", p)));
            }
        }
        let sig = self.sigma();
        let chi = self.euler_characteristic();
        match self.pair(&self.k, &self.k) {
            Ok(k2) => out.push(finding(
                "signature-identity",
                k2 == 3 * sig + 2 * chi,
                format!("K^2 = {}, 3 sigma + 2 chi = {}", k2, 3 * sig + 2 * chi),
            )),
            Err(e) => out.push(finding("signature-identity", false, e.to_string())),
        }
        out
    }
}

/// `h^0(jH)` on CP^2: `(j+1)(j+2)/2` lattice points for `j >= 0`, else 0.
fn h0_cp2(j: i64) -> Result<i64> {
    if j < 0 {
        return Ok(0);
    }
    let v = (j as i128 + 1) * (j as i128 + 2) / 2;
    i64::try_from(v).map_err(|_| Error::Overflow("h0 on CP^2".into()))
}

/// `h^0(fF + bB)` on `F_e`: lattice points of the trapezoid
/// `{0 <= y <= b, 0 <= x <= f - e y}`, i.e. `sum_{i=0}^{b} max(0, f - ie + 1)`.
fn h0_hirzebruch(e: i64, f: i64, b: i64) -> Result<i64> {
    if b < 0 || f < 0 {
        return Ok(0);
    }
    let (f, b, e) = (f as i128, b as i128, e as i128);
    let top = if e == 0 { b } else { b.min(f / e) };
    // sum_{i=0}^{top} (f + 1 - i e)
    let v = (top + 1) * (f + 1) - e * top * (top + 1) / 2;
    i64::try_from(v).map_err(|_| Error::Overflow("h0 on Hirzebruch surface".into()))
}

/// Exact inertia of a symmetric integer matrix by congruence elimination
/// over the rationals.
fn signature_of(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = gram.len();
    let mut a: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    loop {
        if active.is_empty() {
            return (pos, neg, 0);
        }
        if let Some(pi) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pi);
            if a[p][p].is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            // Schur complement: a[i][j] -= a[i][p] a[p][j] / a[p][p]
            let pivot = a[p][p].clone();
            for &i in &active {
                if a[i][p].is_zero() {
                    continue;
                }
                let factor = &a[i][p] / &pivot;
                for &j in &active {
                    let delta = &factor * &a[p][j];
                    a[i][j] = &a[i][j] - &delta;
                }
            }
        } else if let Some((i, j)) = first_offdiagonal(&a, &active) {
            // all active diagonal entries vanish; fold index j into i to
            // expose a nonzero diagonal entry (congruence transformation)
            let row_j = a[j].clone();
            for (col, t) in row_j.iter().enumerate() {
                a[i][col] = &a[i][col] + t;
            }
            for row in a.iter_mut() {
                let t = row[j].clone();
                row[i] = &row[i] + &t;
            }
        } else {
            return (pos, neg, active.len());
        }
    }
}

fn first_offdiagonal(a: &[Vec<BigRational>], active: &[usize]) -> Option<(usize, usize)> {
    for &i in active {
        for &j in active {
            if i != j && !a[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}
