//! Serializable pair specifications: the JSON input format of the tool.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jsonnum::ExactRat;
use crate::weights::{
    build_generic, build_sl_blocks, build_so_blocks, build_so_in_sl, RestrictedPairData,
};

/// Ambient group family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", deny_unknown_fields)]
pub enum Ambient {
    #[serde(rename = "SL")]
    Sl { n: u32 },
    #[serde(rename = "SO")]
    So { p: u32, q: u32 },
}

impl Ambient {
    /// Whether the ambient group is semisimple, which is the hypothesis the
    /// temperedness equivalence carries.
    pub fn is_semisimple(&self) -> bool {
        match *self {
            Ambient::Sl { n } => n >= 2,
            Ambient::So { p, q } => p + q >= 3,
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            Ambient::Sl { n } => format!("SL({n},R)"),
            Ambient::So { p, q } => format!("SO({p},{q})"),
        }
    }
}

/// One generic weight: covector entries (exact rationals) and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightEntry {
    pub coeffs: Vec<ExactRat>,
    pub multiplicity: u64,
}

/// Subgroup description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Subgroup {
    /// ∏ SL(n_k, R) block-diagonal in SL(n, R).
    SlBlocks { blocks: Vec<u32> },
    /// ∏ SO(p_k, q_k) block-diagonal in SO(p, q).
    SoBlocks { blocks: Vec<(u32, u32)> },
    /// SO(p, q) standardly embedded in SL(n, R).
    SoInSl { p: u32, q: u32 },
    /// Raw weight data for an arbitrary reductive pair.
    Generic {
        dim_a: usize,
        g_weights: Vec<WeightEntry>,
        h_weights: Vec<WeightEntry>,
    },
}

/// A validated pair (G, H) description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub ambient: Ambient,
    pub subgroup: Subgroup,
}

impl PairSpec {
    /// Build the weight data, enforcing the family constraints.
    pub fn build(&self) -> Result<RestrictedPairData> {
        match (&self.ambient, &self.subgroup) {
            (Ambient::Sl { n }, Subgroup::SlBlocks { blocks }) => {
                build_sl_blocks(*n, blocks).map_err(|e| prefix_field(e, "subgroup.blocks"))
            }
            (Ambient::So { p, q }, Subgroup::SoBlocks { blocks }) => {
                build_so_blocks(*p, *q, blocks).map_err(|e| prefix_field(e, "subgroup.blocks"))
            }
            (Ambient::Sl { n }, Subgroup::SoInSl { p, q }) => {
                build_so_in_sl(*n, *p, *q).map_err(|e| prefix_field(e, "subgroup"))
            }
            (
                _,
                Subgroup::Generic {
                    dim_a,
                    g_weights,
                    h_weights,
                },
            ) => {
                let unpack =
                    |entries: &[WeightEntry]| -> Vec<(Vec<num_rational::BigRational>, u64)> {
                        entries
                            .iter()
                            .map(|e| {
                                (
                                    e.coeffs.iter().map(|c| c.0.clone()).collect(),
                                    e.multiplicity,
                                )
                            })
                            .collect()
                    };
                build_generic(*dim_a, &unpack(g_weights), &unpack(h_weights))
                    .map_err(|e| prefix_field(e, "subgroup"))
            }
            (Ambient::So { .. }, Subgroup::SlBlocks { .. }) => Err(Error::InvalidSpec(
                "subgroup.type: sl_blocks requires an SL ambient group".into(),
            )),
            (Ambient::Sl { .. }, Subgroup::SoBlocks { .. }) => Err(Error::InvalidSpec(
                "subgroup.type: so_blocks requires an SO ambient group".into(),
            )),
            (Ambient::So { .. }, Subgroup::SoInSl { .. }) => Err(Error::InvalidSpec(
                "subgroup.type: so_in_sl requires an SL ambient group".into(),
            )),
        }
    }

    pub fn describe_subgroup(&self) -> String {
        match &self.subgroup {
            Subgroup::SlBlocks { blocks } => {
                let parts: Vec<String> = blocks.iter().map(|b| format!("SL({b})")).collect();
                if parts.is_empty() {
                    "trivial".into()
                } else {
                    parts.join(" x ")
                }
            }
            Subgroup::SoBlocks { blocks } => {
                let parts: Vec<String> =
                    blocks.iter().map(|(a, b)| format!("SO({a},{b})")).collect();
                if parts.is_empty() {
                    "trivial".into()
                } else {
                    parts.join(" x ")
                }
            }
            Subgroup::SoInSl { p, q } => format!("SO({p},{q})"),
            Subgroup::Generic { dim_a, .. } => format!("generic (dim_a = {dim_a})"),
        }
    }
}

fn prefix_field(e: Error, field: &str) -> Error {
    match e {
        Error::InvalidSpec(msg) if !msg.contains(':') => {
            Error::InvalidSpec(format!("{field}: {msg}"))
        }
        other => other,
    }
}

/// Parse and validate a JSON pair specification. Unknown fields are
/// rejected; errors carry the offending field path.
pub fn parse_spec(document: &str) -> Result<PairSpec> {
    let mut de = serde_json::Deserializer::from_str(document);
    let spec: PairSpec = serde_path_to_error::deserialize(&mut de)
        .map_err(|e| Error::InvalidSpec(format!("{}: {}", e.path(), e.inner())))?;
    // Surface family-constraint violations at parse time.
    spec.build()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sl_blocks() {
        let spec = parse_spec(
            r#"{"ambient":{"family":"SL","n":5},"subgroup":{"type":"sl_blocks","blocks":[2,2,1]}}"#,
        )
        .unwrap();
        assert_eq!(spec.ambient, Ambient::Sl { n: 5 });
        assert_eq!(
            spec.subgroup,
            Subgroup::SlBlocks {
                blocks: vec![2, 2, 1]
            }
        );
    }

    #[test]
    fn parses_so_blocks() {
        let spec = parse_spec(
            r#"{"ambient":{"family":"SO","p":4,"q":3},"subgroup":{"type":"so_blocks","blocks":[[2,1]]}}"#,
        )
        .unwrap();
        assert_eq!(spec.ambient, Ambient::So { p: 4, q: 3 });
        assert_eq!(
            spec.subgroup,
            Subgroup::SoBlocks {
                blocks: vec![(2, 1)]
            }
        );
    }

    #[test]
    fn rejects_oversized_blocks() {
        let err = parse_spec(
            r#"{"ambient":{"family":"SL","n":3},"subgroup":{"type":"sl_blocks","blocks":[4]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(_)));
    }

    #[test]
    fn rejects_unknown_fields() {
        let err = parse_spec(
            r#"{"ambient":{"family":"SL","n":3,"extra":1},"subgroup":{"type":"sl_blocks","blocks":[2]}}"#,
        )
        .unwrap_err();
        let Error::InvalidSpec(msg) = err else {
            panic!("wrong error kind")
        };
        assert!(msg.contains("extra"), "message was: {msg}");
    }

    #[test]
    fn parses_generic_with_rational_strings() {
        let spec = parse_spec(
            r#"{"ambient":{"family":"SL","n":3},
                "subgroup":{"type":"generic","dim_a":1,
                  "g_weights":[{"coeffs":["1/2"],"multiplicity":4}],
                  "h_weights":[]}}"#,
        )
        .unwrap();
        let data = spec.build().unwrap();
        assert_eq!(data.dim_a(), 1);
        assert_eq!(data.g_weights().total_multiplicity(), 4);
    }

    #[test]
    fn rejects_mismatched_family() {
        let err = parse_spec(
            r#"{"ambient":{"family":"SO","p":3,"q":2},"subgroup":{"type":"sl_blocks","blocks":[2]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidSpec(_)));
    }
}
