//! JSON request schemas and their conversion into library types.
//!
//! A check request is a single JSON document:
//!
//! ```json
//! {
//!   "surface": { "preset": "cp2" },
//!   "curve": [5],
//!   "cusps": [ { "gens": [4, 5] } ],
//!   "mode": "topological",
//!   "scan": { "ray": { "base": [1], "from": 0, "to": 2 } },
//!   "flags": { "useStatementForm": false, "assertNonVanishing": false }
//! }
//! ```
//!
//! Custom surfaces replace the preset with `gram`, `k`, `b1`, `pg`, an
//! optional `h0Table` and an optional `projective` flag. Rationals never
//! appear in requests; reports serialize them as `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use cuspidal_core::{
    build_semigroup, Configuration, CuspDescriptor, DivisorClass, Error, Mode, Scan, SurfaceData,
    SurfaceKind,
};

/// One cusp, described exactly one way.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CuspSpec {
    Gens {
        gens: Vec<u64>,
    },
    Char {
        #[serde(rename = "char")]
        char_seq: Vec<u64>,
    },
    Gaps {
        gaps: Vec<u64>,
    },
}

impl CuspSpec {
    pub fn to_descriptor(&self) -> CuspDescriptor {
        match self {
            CuspSpec::Gens { gens } => CuspDescriptor::Generators(gens.clone()),
            CuspSpec::Char { char_seq } => CuspDescriptor::CharSequence(char_seq.clone()),
            CuspSpec::Gaps { gaps } => CuspDescriptor::GapSet(gaps.clone()),
        }
    }
}

/// Build a configuration from cusp specs; an empty list means a smooth
/// curve and yields the trivial configuration.
pub fn configuration_from(cusps: &[CuspSpec]) -> Result<Configuration, Error> {
    if cusps.is_empty() {
        return Ok(Configuration::smooth());
    }
    let tables = cusps
        .iter()
        .map(|c| build_semigroup(&c.to_descriptor()))
        .collect::<Result<Vec<_>, _>>()?;
    Configuration::new(tables)
}

/// One `class -> h^0` entry of a user-provided table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Entry {
    pub class: Vec<i64>,
    pub h0: i64,
}

/// Surface description: either a preset id or an explicit lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SurfaceSpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gram: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pg: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h0_table: Option<Vec<H0Entry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub projective: Option<bool>,
}

impl SurfaceSpec {
    pub fn to_surface(&self) -> Result<SurfaceData, Error> {
        if let Some(id) = &self.preset {
            if self.gram.is_some() || self.k.is_some() {
                return Err(Error::InvalidArgument(
                    "give either a preset or an explicit lattice, not both".into(),
                ));
            }
            return SurfaceData::from_preset_id(id);
        }
        let gram = self
            .gram
            .clone()
            .ok_or_else(|| Error::InvalidArgument("surface needs 'preset' or 'gram'".into()))?;
        let k = self
            .k
            .clone()
            .ok_or_else(|| Error::InvalidArgument("custom surface needs 'k'".into()))?;
        let kind = match self.projective.unwrap_or(true) {
            true => SurfaceKind::Projective,
            false => SurfaceKind::AlmostComplex,
        };
        let table = self.h0_table.as_ref().map(|entries| {
            entries
                .iter()
                .map(|e| (e.class.clone(), e.h0))
                .collect::<BTreeMap<_, _>>()
        });
        SurfaceData::custom(
            gram,
            k,
            self.b1.unwrap_or(0),
            self.pg.unwrap_or(0),
            kind,
            table,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RaySpec {
    pub base: Vec<i64>,
    pub from: i64,
    pub to: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct BoxSpec {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

/// The divisor classes to test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScanSpec {
    Explicit { explicit: Vec<Vec<i64>> },
    Ray { ray: RaySpec },
    Box { r#box: BoxSpec },
}

impl ScanSpec {
    pub fn to_scan(&self) -> Scan {
        match self {
            ScanSpec::Explicit { explicit } => {
                Scan::Explicit(explicit.iter().cloned().map(DivisorClass).collect())
            }
            ScanSpec::Ray { ray } => Scan::Ray {
                base: DivisorClass(ray.base.clone()),
                lo: ray.from,
                hi: ray.to,
            },
            ScanSpec::Box { r#box } => Scan::Box {
                lo: r#box.lo.clone(),
                hi: r#box.hi.clone(),
            },
        }
    }
}

/// Optional request flags, all off by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FlagsSpec {
    /// Use the statement form `E.(E+K)/2` of the almost-complex bound.
    #[serde(default)]
    pub use_statement_form: bool,
    /// Assert the algebraic non-vanishing hypothesis on non-preset surfaces.
    #[serde(default)]
    pub assert_non_vanishing: bool,
}

/// A full check request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CheckDoc {
    pub surface: SurfaceSpec,
    pub curve: Vec<i64>,
    #[serde(default)]
    pub cusps: Vec<CuspSpec>,
    pub mode: Mode,
    pub scan: ScanSpec,
    #[serde(default)]
    pub flags: FlagsSpec,
}

/// A cusps-only document for `r-table` and `d-invariants`; extra fields of
/// a full check request are tolerated and ignored.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct CuspsDoc {
    #[serde(default)]
    pub cusps: Vec<CuspSpec>,
}

fn default_max_pairs() -> u32 {
    1
}

fn default_max_candidates() -> u64 {
    1_000_000
}

/// Bounds of the configuration search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SearchParams {
    /// 1 = torus-knot cusps only; 2 = also two-pair characteristic sequences.
    #[serde(default = "default_max_pairs")]
    pub max_pairs: u32,
    /// Total delta to distribute; defaults to the required genus of the curve.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta_budget: Option<u64>,
    /// Maximum number of cusps per configuration; defaults to the budget.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_cusps: Option<usize>,
    /// Abort when the enumeration would exceed this many configurations.
    #[serde(default = "default_max_candidates")]
    pub max_candidates: u64,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            max_pairs: 1,
            delta_budget: None,
            max_cusps: None,
            max_candidates: default_max_candidates(),
        }
    }
}

/// A configuration-search request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SearchDoc {
    pub surface: SurfaceSpec,
    pub curve: Vec<i64>,
    pub mode: Mode,
    pub scan: ScanSpec,
    #[serde(default)]
    pub flags: FlagsSpec,
    #[serde(default)]
    pub search: SearchParams,
}

/// A bare surface document for `validate-surface`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct SurfaceDoc {
    pub surface: SurfaceSpec,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_spec_forms() {
        let g: CuspSpec = serde_json::from_str(r#"{"gens": [4,5]}"#).unwrap();
        assert_eq!(g, CuspSpec::Gens { gens: vec![4, 5] });
        let c: CuspSpec = serde_json::from_str(r#"{"char": [4,6,7]}"#).unwrap();
        assert!(matches!(c, CuspSpec::Char { .. }));
        let s: CuspSpec = serde_json::from_str(r#"{"gaps": [1,3]}"#).unwrap();
        assert!(matches!(s, CuspSpec::Gaps { .. }));
        // round trip
        let j = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<CuspSpec>(&j).unwrap(), g);
    }

    #[test]
    fn check_doc_parses() {
        let doc: CheckDoc = serde_json::from_str(
            r#"{
                "surface": {"preset": "cp2"},
                "curve": [5],
                "cusps": [{"gens": [4,5]}],
                "mode": "topological",
                "scan": {"ray": {"base": [1], "from": 0, "to": 2}}
            }"#,
        )
        .unwrap();
        assert_eq!(doc.mode, Mode::Topological);
        assert!(!doc.flags.use_statement_form);
        let surface = doc.surface.to_surface().unwrap();
        assert_eq!(surface.rank(), 1);
    }

    #[test]
    fn unknown_fields_rejected() {
        let r = serde_json::from_str::<CheckDoc>(
            r#"{"surface": {"preset": "cp2"}, "curve": [3], "mode": "algebraic",
                "scan": {"explicit": [[0]]}, "typo": 1}"#,
        );
        assert!(r.is_err());
    }

    #[test]
    fn custom_surface_with_table() {
        let spec: SurfaceSpec = serde_json::from_str(
            r#"{"gram": [[1]], "k": [-3], "h0Table": [{"class": [2], "h0": 6}]}"#,
        )
        .unwrap();
        let s = spec.to_surface().unwrap();
        assert_eq!(s.h0(&DivisorClass(vec![2])).unwrap(), Some(6));
        assert_eq!(s.h0(&DivisorClass(vec![1])).unwrap(), None);
    }

    #[test]
    fn smooth_configuration_from_empty() {
        let cfg = configuration_from(&[]).unwrap();
        assert_eq!(cfg.g(), 0);
    }
}
