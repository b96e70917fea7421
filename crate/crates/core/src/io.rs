//! JSON input schemas (semigroups, actions, group representations) and
//! the deterministic report envelope shared by the CLI subcommands.

use std::collections::HashMap;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::germs::FiniteAction;
use crate::matrix::Matrix;
use crate::reps::GroupRep;
use crate::semigroup::{BuildOptions, InverseSemigroup, PartialBijection, SubGroup};

/// A semigroup input file: either partial-bijection generators or a raw
/// multiplication table with optional involution.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum SemigroupInput {
    Generators {
        degree: usize,
        /// Each generator as a list of [point, image] pairs.
        generators: Vec<Vec<(usize, usize)>>,
    },
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        star: Option<Vec<usize>>,
    },
}

pub fn parse_semigroup(json: &str, opts: &BuildOptions) -> Result<InverseSemigroup> {
    let input: SemigroupInput = serde_json::from_str(json)
        .map_err(|e| Error::InvalidInput(format!("bad semigroup JSON: {e}")))?;
    match input {
        SemigroupInput::Generators { degree, generators } => {
            let gens = generators
                .iter()
                .map(|pairs| PartialBijection::from_pairs(degree, pairs))
                .collect::<Result<Vec<_>>>()?;
            InverseSemigroup::closure(&gens, opts)
        }
        SemigroupInput::Table { order, table, star } => {
            if table.len() != order {
                return Err(Error::InvalidInput(
                    "declared order does not match the table".into(),
                ));
            }
            InverseSemigroup::from_table(table, star, opts)
        }
    }
}

/// An action input file: the semigroup acting, the point count, and
/// per-element defined pairs. Elements omitted from the list act
/// nowhere.
#[derive(Debug, Deserialize)]
pub struct ActionInput {
    pub semigroup: Value,
    #[serde(rename = "X")]
    pub x: usize,
    pub elements: Vec<ActionElement>,
}

#[derive(Debug, Deserialize)]
pub struct ActionElement {
    pub s: usize,
    pub pairs: Vec<(usize, usize)>,
}

pub fn parse_action(json: &str, opts: &BuildOptions) -> Result<FiniteAction> {
    let input: ActionInput = serde_json::from_str(json)
        .map_err(|e| Error::InvalidInput(format!("bad action JSON: {e}")))?;
    let sg = parse_semigroup(&input.semigroup.to_string(), opts)?;
    let mut maps = vec![vec![None; input.x]; sg.order];
    for el in &input.elements {
        if el.s >= sg.order {
            return Err(Error::InvalidInput(format!(
                "action element {} out of range",
                el.s
            )));
        }
        for &(a, b) in &el.pairs {
            if a >= input.x || b >= input.x {
                return Err(Error::InvalidInput(format!(
                    "action pair ({a},{b}) out of range"
                )));
            }
            maps[el.s][a] = Some(b);
        }
    }
    FiniteAction::new(sg, input.x, maps)
}

/// Group representation input: a Cayley table, a dimension, one
/// integer matrix per group element, and the field validator.
#[derive(Debug, Deserialize)]
pub struct GroupRepInput {
    pub group_table: Vec<Vec<usize>>,
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
    pub field: FieldValue,
}

#[derive(Debug, Deserialize, Serialize, PartialEq)]
#[serde(untagged)]
pub enum FieldValue {
    Prime { p: u64 },
    Rational(String),
}

impl FieldValue {
    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldValue::Prime { p } => FieldSpec::Prime(*p).checked(),
            FieldValue::Rational(s) if s == "Q" => Ok(FieldSpec::Rational),
            FieldValue::Rational(s) => Err(Error::InvalidInput(format!("unknown field {s}"))),
        }
    }
}

/// Parses a map from D-class representative indices to supplied
/// irreducible lists: {"reps": {"<class rep>": [GroupRepInput, ...]}}.
pub fn parse_group_reps(json: &str, field: &FieldSpec) -> Result<HashMap<usize, Vec<GroupRep>>> {
    #[derive(Deserialize)]
    struct File {
        reps: HashMap<String, Vec<GroupRepInput>>,
    }
    let file: File = serde_json::from_str(json)
        .map_err(|e| Error::InvalidInput(format!("bad group-reps JSON: {e}")))?;
    let mut out = HashMap::new();
    for (key, list) in file.reps {
        let rep: usize = key.parse().map_err(|_| {
            Error::InvalidInput(format!("class representative {key} is not an index"))
        })?;
        let reps = list
            .iter()
            .map(|input| {
                if input.field.to_spec()? != *field {
                    return Err(Error::FieldMismatch {
                        expected: field.to_string(),
                        found: format!("{:?}", input.field),
                    });
                }
                let n = input.group_table.len();
                let identity = (0..n)
                    .find(|&i| (0..n).all(|j| input.group_table[i][j] == j))
                    .ok_or_else(|| Error::InvalidInput("group table has no identity".into()))?;
                let group = SubGroup {
                    elements: (0..n).collect(),
                    table: input.group_table.clone(),
                    identity,
                };
                let matrices: Vec<Matrix> = input
                    .matrices
                    .iter()
                    .map(|rows| {
                        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
                        Matrix::from_i64(input.dim, input.dim, *field, &flat)
                    })
                    .collect();
                GroupRep::new(group, matrices, *field)
            })
            .collect::<Result<Vec<_>>>()?;
        out.insert(rep, reps);
    }
    Ok(out)
}

/// Exact JSON rendering of a scalar: prime-field values as numbers,
/// rationals as "a/b" strings.
pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Fp { v, .. } => json!(v),
        Scalar::Rat(r) => json!(format!("{r}")),
    }
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|i| Value::Array((0..m.cols).map(|j| scalar_json(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn bigint_json(b: &BigInt) -> Value {
    json!(b.to_string())
}

/// The deterministic envelope wrapped around every CLI report.
pub fn envelope(
    field: &FieldSpec,
    seed: u64,
    cap_order: usize,
    cap_slices: usize,
    report: Value,
) -> Value {
    json!({
        "tool": "galg",
        "version": env!("CARGO_PKG_VERSION"),
        "field": field.to_string(),
        "seed": seed,
        "caps": {"order": cap_order, "slices": cap_slices},
        "report": report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_generators_for_i2() {
        let json = r#"{"degree": 2, "generators": [[[0,1],[1,0]], [[1,1]]]}"#;
        let s = parse_semigroup(json, &BuildOptions::default()).unwrap();
        assert_eq!(s.order, 7);
    }

    #[test]
    fn parse_table_chain() {
        let json = r#"{"order": 2, "table": [[0,0],[0,1]]}"#;
        let s = parse_semigroup(json, &BuildOptions::default()).unwrap();
        assert_eq!(s.order, 2);
        assert_eq!(s.idempotents, vec![0, 1]);
    }

    #[test]
    fn parse_rejects_malformed_json() {
        assert!(matches!(
            parse_semigroup("{not json", &BuildOptions::default()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn parse_action_roundtrip() {
        // the chain semilattice of length 2 acting on itself
        let json = r#"{
            "semigroup": {"order": 2, "table": [[0,0],[0,1]]},
            "X": 2,
            "elements": [
                {"s": 0, "pairs": [[0,0]]},
                {"s": 1, "pairs": [[0,0],[1,1]]}
            ]
        }"#;
        let act = parse_action(json, &BuildOptions::default()).unwrap();
        assert_eq!(act.n_points, 2);
        assert_eq!(act.apply(0, 0), Some(0));
        assert_eq!(act.apply(0, 1), None);
    }

    #[test]
    fn parse_group_reps_sign() {
        let json = r#"{"reps": {"3": [
            {"group_table": [[0,1],[1,0]], "dim": 1, "matrices": [[[1]],[[1]]], "field": {"p": 5}},
            {"group_table": [[0,1],[1,0]], "dim": 1, "matrices": [[[1]],[[-1]]], "field": {"p": 5}}
        ]}}"#;
        let reps = parse_group_reps(json, &FieldSpec::Prime(5)).unwrap();
        assert_eq!(reps[&3].len(), 2);
    }

    #[test]
    fn field_value_parsing() {
        assert_eq!(
            serde_json::from_str::<FieldValue>(r#"{"p": 7}"#)
                .unwrap()
                .to_spec()
                .unwrap(),
            FieldSpec::Prime(7)
        );
        assert_eq!(
            serde_json::from_str::<FieldValue>(r#""Q""#)
                .unwrap()
                .to_spec()
                .unwrap(),
            FieldSpec::Rational
        );
    }
}
