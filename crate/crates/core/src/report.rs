//! Serializable report documents for every computation.
//!
//! Rationals serialize as exact strings `p/q` in lowest terms with positive
//! denominator (`p` when the denominator is 1). F-curve partitions serialize
//! as sorted arrays of sorted integer arrays, e.g. `[[1,3],[2],[4,5],[6]]`.
//! JSON output is canonical: keys sorted, no floating point anywhere.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cones::{ConeReport, GeneratorSource, SymmetricReport};
use crate::divisors::{DivisorClass, Linearization, ScalingCheck};
use crate::error::{Error, Result};
use crate::fcurves::{enumerate_fcurves, FCurvePartition};
use crate::rational::{parse_rational, Rational};
use crate::tableaux::Tableau;

impl Serialize for FCurvePartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FCurvePartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks: [Vec<usize>; 4] = Deserialize::deserialize(deserializer)?;
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        FCurvePartition::new(n, blocks).map_err(D::Error::custom)
    }
}

/// Exact string forms of a rational vector.
pub fn rationals_to_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

/// Parse a vector of `p/q` strings.
pub fn strings_to_rationals(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

/// Render any serializable value as canonical JSON (sorted keys, exact
/// rational strings, two-space indentation).
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)
        .map_err(|e| Error::invalid(format!("serialization failed: {e}")))?;
    serde_json::to_string_pretty(&v).map_err(|e| Error::invalid(format!("serialization failed: {e}")))
}

/// A divisor class with its F-curve index, as emitted and parsed by the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DivisorClassDoc {
    pub n: usize,
    pub fcurves: Vec<FCurvePartition>,
    pub values: Vec<String>,
}

impl DivisorClassDoc {
    pub fn from_class(cls: &DivisorClass) -> Result<Self> {
        Ok(DivisorClassDoc {
            n: cls.n(),
            fcurves: enumerate_fcurves(cls.n())?,
            values: rationals_to_strings(cls.values()),
        })
    }

    /// Rebuild the in-memory class, checking the F-curve index against the
    /// canonical list.
    pub fn to_class(&self) -> Result<DivisorClass> {
        let canonical = enumerate_fcurves(self.n)?;
        if self.fcurves != canonical {
            return Err(Error::invalid(
                "fcurves field does not match the canonical F-curve list".to_string(),
            ));
        }
        DivisorClass::from_values(self.n, strings_to_rationals(&self.values)?)
    }
}

/// A linearization document: the degree and the exact coordinates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinearizationDoc {
    pub d: i64,
    pub x: Vec<String>,
}

impl LinearizationDoc {
    pub fn from_linearization(l: &Linearization) -> Self {
        LinearizationDoc {
            d: l.d(),
            x: rationals_to_strings(l.coords()),
        }
    }

    pub fn to_linearization(&self) -> Result<Linearization> {
        Linearization::new(self.d, strings_to_rationals(&self.x)?)
    }
}

/// Vertex list document: an array of arrays of exact rational strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerticesDoc {
    pub d: i64,
    pub n: usize,
    pub count: usize,
    pub vertices: Vec<Vec<String>>,
}

impl VerticesDoc {
    pub fn new(d: i64, n: usize, vertices: &[Vec<Rational>]) -> Self {
        VerticesDoc {
            d,
            n,
            count: vertices.len(),
            vertices: vertices.iter().map(|v| rationals_to_strings(v)).collect(),
        }
    }

    pub fn to_vertices(&self) -> Result<Vec<Vec<Rational>>> {
        self.vertices
            .iter()
            .map(|v| strings_to_rationals(v))
            .collect()
    }
}

/// Provenance of one cone generator.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum SourceDoc {
    Vertex { d: i64, x: Vec<String> },
    Weight { m: i64, c: Vec<i64> },
}

impl SourceDoc {
    fn from_source(s: &GeneratorSource) -> Self {
        match s {
            GeneratorSource::Vertex { d, x } => SourceDoc::Vertex {
                d: *d,
                x: rationals_to_strings(x),
            },
            GeneratorSource::Weight { m, c } => SourceDoc::Weight { m: *m, c: c.clone() },
        }
    }
}

/// A cone of divisor classes: primitive integer generators over the
/// canonical F-curve order, extremal indices, span rank, and sources.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeReportDoc {
    pub n: usize,
    pub ambient_dim: usize,
    pub generators: Vec<Vec<String>>,
    pub extremal: Vec<usize>,
    pub rank: usize,
    pub sources: Vec<Vec<SourceDoc>>,
}

impl ConeReportDoc {
    pub fn from_report(report: &ConeReport) -> Self {
        ConeReportDoc {
            n: report.n(),
            ambient_dim: report.cone().ambient_dim(),
            generators: report
                .cone()
                .generators()
                .iter()
                .map(|g| g.iter().map(|x| x.to_string()).collect())
                .collect(),
            extremal: report.cone().extremal_indices(),
            rank: report.rank(),
            sources: report
                .sources()
                .iter()
                .map(|srcs| srcs.iter().map(SourceDoc::from_source).collect())
                .collect(),
        }
    }
}

/// Scaling identity check document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScalingCheckDoc {
    pub equal: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<ScalingMismatchDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScalingMismatchDoc {
    pub fcurve: FCurvePartition,
    pub base_degree: String,
    pub scaled_degree: String,
}

impl ScalingCheckDoc {
    pub fn from_check(check: &ScalingCheck) -> Self {
        ScalingCheckDoc {
            equal: check.equal,
            mismatches: check
                .mismatches
                .iter()
                .map(|m| ScalingMismatchDoc {
                    fcurve: m.partition.clone(),
                    base_degree: m.base_degree.to_string(),
                    scaled_degree: m.scaled_degree.to_string(),
                })
                .collect(),
        }
    }
}

/// Tableaux enumeration document; each tableau is its two rows.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableauxDoc {
    pub content: [i64; 4],
    pub count: usize,
    pub tableaux: Vec<[Vec<u8>; 2]>,
}

impl TableauxDoc {
    pub fn new(content: [i64; 4], tableaux: &[Tableau]) -> Self {
        TableauxDoc {
            content,
            count: tableaux.len(),
            tableaux: tableaux.iter().map(|t| t.rows().clone()).collect(),
        }
    }
}

/// Symmetric-ray census document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetricReportDoc {
    pub n: usize,
    pub m_max: i64,
    pub distinct_rays: usize,
    pub expected_rays: usize,
    pub gale_pairing_ok: bool,
    pub unit_class_zero: bool,
    pub all_proportional: bool,
    pub entries: Vec<SymmetricEntryDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymmetricEntryDoc {
    pub m: i64,
    pub j: i64,
    pub level: Option<i64>,
    pub is_zero: bool,
    pub factor: Option<String>,
    pub proportional: bool,
}

impl SymmetricReportDoc {
    pub fn from_report(report: &SymmetricReport) -> Self {
        SymmetricReportDoc {
            n: report.n,
            m_max: report.m_max,
            distinct_rays: report.distinct_rays,
            expected_rays: report.expected_rays,
            gale_pairing_ok: report.gale_pairing_ok,
            unit_class_zero: report.unit_class_zero,
            all_proportional: report.all_proportional,
            entries: report
                .entries
                .iter()
                .map(|e| SymmetricEntryDoc {
                    m: e.m,
                    j: e.j,
                    level: e.level,
                    is_zero: e.is_zero,
                    factor: e.factor.as_ref().map(|f| f.to_string()),
                    proportional: e.proportional,
                })
                .collect(),
        }
    }
}
