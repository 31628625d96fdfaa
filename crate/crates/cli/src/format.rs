//! On-disk formats: the dessin file (a single JSON object with fixed field
//! names `degree`, `x`, `y` and optional `name`) and the classification
//! report record. Both round-trip losslessly through JSON.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use dessin_core::dessin::DualKind;
use dessin_core::permgroup::Permutation;
use dessin_core::symmetry::{self, ConditionThree, GrowthStep, SymmetryReport};
use dessin_core::{Error, OrientedMap, RegularDessin};

/// Errors carrying the process exit code contract: 1 parse, 2 not-regular,
/// 3 construction, 4 internal invariant.
#[derive(Debug, Clone)]
pub enum CliError {
    Parse(String),
    NotRegular(String),
    Construction(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::NotRegular(_) => 2,
            CliError::Construction(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    pub fn construction(e: Error) -> CliError {
        match e {
            Error::InternalInvariant(msg) => CliError::Internal(msg),
            other => CliError::Construction(other.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::NotRegular(m) => write!(f, "not a regular dessin: {m}"),
            CliError::Construction(m) => write!(f, "construction error: {m}"),
            CliError::Internal(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

/// Serialized dessin: image arrays of zero-based points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DessinFile {
    pub degree: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl DessinFile {
    pub fn from_dessin(d: &RegularDessin, name: Option<String>) -> Self {
        DessinFile {
            degree: d.degree(),
            x: d.x().images().to_vec(),
            y: d.y().images().to_vec(),
            name,
        }
    }

    /// Validates the arrays and the regularity of the pair.
    pub fn to_dessin(&self) -> Result<RegularDessin, CliError> {
        if self.x.len() != self.degree || self.y.len() != self.degree {
            return Err(CliError::Parse(format!(
                "arrays must have length degree = {}, got {} and {}",
                self.degree,
                self.x.len(),
                self.y.len()
            )));
        }
        let x = Permutation::from_images(self.x.clone())
            .map_err(|e| CliError::Parse(format!("x: {e}")))?;
        let y = Permutation::from_images(self.y.clone())
            .map_err(|e| CliError::Parse(format!("y: {e}")))?;
        RegularDessin::from_perms(x, y).map_err(|e| match e {
            Error::NotRegular(msg) => CliError::NotRegular(msg),
            other => CliError::Parse(other.to_string()),
        })
    }
}

/// Loads a single dessin object from a JSON file; the fallback name is the
/// file stem.
pub fn load_dessin(path: &Path) -> Result<(RegularDessin, String), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let file: DessinFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "dessin".into())
    });
    Ok((file.to_dessin()?, name))
}

/// Loads a census file: a JSON array of dessin objects. Validation happens
/// per record later, so a malformed pair does not sink the whole batch.
pub fn load_census(path: &Path) -> Result<Vec<DessinFile>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn save_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Construction(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionOneRecord {
    pub present: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionTwoRecord {
    pub present: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionThreeRecord {
    pub present: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<u8>,
    /// The transposing automorphism degenerated to the identity (`x = y`);
    /// no extension witnesses are produced in that case.
    pub identity_gamma: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<usize>>,
    /// Acts on the `2|G|` points of the extension's regular action.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsRecord {
    pub c1: ConditionOneRecord,
    pub c2: ConditionTwoRecord,
    pub c3: ConditionThreeRecord,
    pub c4: bool,
}

/// One classification result; `witnesses` are image arrays so external tools
/// can re-verify equivariance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub name: String,
    pub degree: usize,
    #[serde(rename = "type")]
    pub dessin_type: [u64; 3],
    pub genus: u64,
    pub reflexible: bool,
    pub conditions: ConditionsRecord,
    pub symmetric: bool,
    pub degenerate: bool,
    pub maximal_rule: bool,
    pub growth: Vec<String>,
    pub table1: Vec<String>,
}

fn images(p: &Permutation) -> Vec<usize> {
    p.images().to_vec()
}

fn conditions_record(report: &SymmetryReport) -> ConditionsRecord {
    let c1 = ConditionOneRecord {
        present: report.c1.is_some(),
        witness: report.c1.as_ref().map(images),
    };
    let c2 = ConditionTwoRecord {
        present: report.c2.is_some(),
        rotation: report.c2.as_ref().map(|c| c.rotation),
        witness: report.c2.as_ref().map(|c| images(&c.witness)),
    };
    let c3 = match &report.c3 {
        Some(ConditionThree::Holds {
            rotation,
            gamma,
            delta,
        }) => ConditionThreeRecord {
            present: true,
            rotation: Some(*rotation),
            identity_gamma: false,
            gamma: Some(images(gamma)),
            delta: Some(images(delta)),
        },
        Some(ConditionThree::IdentityGamma { rotation }) => ConditionThreeRecord {
            present: true,
            rotation: Some(*rotation),
            identity_gamma: true,
            gamma: None,
            delta: None,
        },
        None => ConditionThreeRecord {
            present: false,
            rotation: None,
            identity_gamma: false,
            gamma: None,
            delta: None,
        },
    };
    ConditionsRecord {
        c1,
        c2,
        c3,
        c4: report.c4,
    }
}

/// Classifies one dessin into a report record. With `maximal` the verdict
/// follows the stricter two-condition rule; genus-1 inputs are rejected then,
/// since no maximal triangle group normalises a genus-1 uniformising
/// subgroup.
pub fn report_for(
    d: &RegularDessin,
    name: String,
    maximal: bool,
) -> Result<ReportRecord, CliError> {
    let report = if maximal {
        if d.genus() == 1 {
            return Err(CliError::Construction(
                "genus-1 input is incompatible with the asserted maximality".into(),
            ));
        }
        symmetry::decide_symmetric_maximal(d, true).map_err(CliError::construction)?
    } else {
        symmetry::decide_symmetric(d)
    };
    let growth: Vec<String> = symmetry::grow_normal(d)
        .iter()
        .map(|s: &GrowthStep| s.rule.to_string())
        .collect();
    let table1: Vec<String> = symmetry::table1_candidates(&d.dessin_type())
        .iter()
        .map(|m| m.row.case_label.to_string())
        .collect();
    Ok(ReportRecord {
        name,
        degree: d.degree(),
        dessin_type: d.dessin_type().as_array(),
        genus: d.genus(),
        reflexible: d.is_reflexible(),
        conditions: conditions_record(&report),
        symmetric: report.symmetric,
        degenerate: report.degenerate,
        maximal_rule: report.maximal_rule,
        growth,
        table1,
    })
}

/// Serialized oriented map, for the Walsh export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedMapFile {
    pub dart_count: usize,
    pub rotation: Vec<usize>,
    pub edge_involution: Vec<usize>,
}

impl OrientedMapFile {
    pub fn from_map(m: &OrientedMap) -> Self {
        OrientedMapFile {
            dart_count: m.dart_count(),
            rotation: m.rotation().images().to_vec(),
            edge_involution: m.edge_involution().images().to_vec(),
        }
    }
}

pub fn parse_dual_kind(s: &str) -> Result<DualKind, CliError> {
    match s {
        "01" => Ok(DualKind::BlackWhite),
        "02" => Ok(DualKind::BlackRed),
        "12" => Ok(DualKind::WhiteRed),
        other => Err(CliError::Parse(format!(
            "unknown dual '{other}', expected 01, 02 or 12"
        ))),
    }
}
