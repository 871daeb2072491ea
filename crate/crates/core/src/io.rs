//! Document formats, exact-value rendering, and machine-readable reports.
//!
//! All files are UTF-8 JSON under the fixed schema tag `torsion-lab/1`.
//! Exact fractions travel as strings (`"p/q"` or `"p"`); plain integers are
//! accepted on input. A complex document carries the degree dimensions and
//! one boundary matrix per positive degree; adding a `representation` block
//! switches the entries to group-ring form (`[[coeff, [[gen, exp], ...]], ...]`),
//! in which case the degrees count free-module generators and the parsed
//! complex is the twist through the representation.
//!
//! Exact values render through a small grammar: `R`, `R*pi^K`, or
//! `sqrt(R*pi^K)` with `R` a rational in lowest terms and `K` a nonzero
//! integer; values whose rational part is a perfect square with even pi
//! exponent render without the radical. [`parse_exact`] inverts
//! [`render_exact`] on every value.

use crate::chain::{
    self, ChainComplex, GroupRingElement, GroupRingMatrix, GroupWord, Representation,
};
use crate::mat::RatMatrix;
use crate::scalar::{rational_sqrt, PiRadical, Rational, ScalarError};
use crate::selfcheck::SuiteResult;
use crate::torsion::{GradedBasis, ScaledVector};
use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Schema tag shared by every document and report.
pub const SCHEMA: &str = "torsion-lab/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {got:?}, expected \"torsion-lab/1\"")]
    Schema { got: String },
    #[error("{0}")]
    Document(String),
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("invalid exact literal {0:?}")]
    BadExact(String),
    #[error("complex fails validation: {0}")]
    Complex(#[from] chain::ComplexViolation),
    #[error("{0}")]
    Chain(#[from] chain::ChainError),
    #[error("basis fails verification: {0}")]
    Basis(#[from] chain::BasisViolation),
    #[error("{0}")]
    Scalar(#[from] ScalarError),
}

/// Renders a rational in lowest terms: `p` when integral, else `p/q`.
pub fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational, IoError> {
    let bad = || IoError::BadRational(text.to_string());
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical text form of an exact value.
pub fn render_exact(v: &PiRadical) -> String {
    if v.u() % 2 == 0 {
        if let Some(root) = rational_sqrt(v.s()) {
            let k = v.u() / 2;
            return if k == 0 {
                render_rational(&root)
            } else {
                format!("{}*pi^{}", render_rational(&root), k)
            };
        }
    }
    if v.u() == 0 {
        format!("sqrt({})", render_rational(v.s()))
    } else {
        format!("sqrt({}*pi^{})", render_rational(v.s()), v.u())
    }
}

/// Inverse of [`render_exact`]; also accepts non-canonical spellings that
/// stay within the grammar.
pub fn parse_exact(text: &str) -> Result<PiRadical, IoError> {
    let bad = || IoError::BadExact(text.to_string());
    let (inner, radical) = match text.strip_prefix("sqrt(").and_then(|t| t.strip_suffix(')')) {
        Some(inner) => (inner, true),
        None => (text, false),
    };
    let (r_text, k) = match inner.split_once("*pi^") {
        None => (inner, 0i64),
        Some((r_text, k_text)) => {
            let k: i64 = k_text.parse().map_err(|_| bad())?;
            if k == 0 {
                return Err(bad());
            }
            (r_text, k)
        }
    };
    let r = parse_rational(r_text).map_err(|_| bad())?;
    if !r.is_positive() {
        return Err(bad());
    }
    let v = if radical {
        PiRadical::new(r, k)
    } else {
        PiRadical::new(&r * &r, k.checked_mul(2).ok_or_else(bad)?)
    };
    v.map_err(|_| bad())
}

/// Exact number in a document: an integer or a fraction string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberDoc {
    Int(i64),
    Text(String),
}

impl NumberDoc {
    fn to_rational(&self) -> Result<Rational, IoError> {
        match self {
            NumberDoc::Int(n) => Ok(Rational::from(BigInt::from(*n))),
            NumberDoc::Text(t) => parse_rational(t),
        }
    }

    fn from_rational(r: &Rational) -> NumberDoc {
        NumberDoc::Text(render_rational(r))
    }
}

/// Boundary entry: a plain number, or a group-ring sum `[[coeff, word], ...]`
/// with each word a list of `[generator, exponent]` pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Int(i64),
    Text(String),
    Terms(Vec<(NumberDoc, Vec<(usize, i64)>)>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationDoc {
    pub rank: usize,
    pub images: Vec<Vec<Vec<NumberDoc>>>,
}

/// On-disk form of a chain complex, plain or group-ring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema: String,
    pub degrees: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<EntryDoc>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationDoc>,
}

/// Result of parsing a complex document.
#[derive(Debug, Clone)]
pub enum ParsedComplex {
    Plain(ChainComplex),
    Twisted {
        complex: ChainComplex,
        boundaries: Vec<GroupRingMatrix>,
        representation: Representation,
    },
}

impl ParsedComplex {
    pub fn complex(&self) -> &ChainComplex {
        match self {
            ParsedComplex::Plain(c) => c,
            ParsedComplex::Twisted { complex, .. } => complex,
        }
    }
}

fn check_schema(got: &str) -> Result<(), IoError> {
    if got == SCHEMA {
        Ok(())
    } else {
        Err(IoError::Schema { got: got.to_string() })
    }
}

fn boundary_shape(
    doc: &ComplexDocument,
    q: usize,
) -> Result<(usize, usize, &Vec<Vec<EntryDoc>>), IoError> {
    let rows = doc.degrees[q - 1];
    let cols = doc.degrees[q];
    let matrix = &doc.boundaries[q - 1];
    if matrix.len() != rows || matrix.iter().any(|r| r.len() != cols) {
        return Err(IoError::Document(format!(
            "boundary {q} must be a {rows}x{cols} array to match the degrees"
        )));
    }
    Ok((rows, cols, matrix))
}

/// Parses and fully validates a complex document. Group-ring documents are
/// twisted through their representation before returning.
pub fn parse_complex_document(text: &str) -> Result<ParsedComplex, IoError> {
    let doc: ComplexDocument = serde_json::from_str(text)?;
    check_schema(&doc.schema)?;
    if doc.degrees.is_empty() {
        return Err(IoError::Document("degrees must be nonempty".into()));
    }
    if doc.boundaries.len() + 1 != doc.degrees.len() {
        return Err(IoError::Document(format!(
            "{} boundary matrices for {} degrees (need one per positive degree)",
            doc.boundaries.len(),
            doc.degrees.len()
        )));
    }
    match &doc.representation {
        None => {
            let mut boundaries = Vec::with_capacity(doc.boundaries.len());
            for q in 1..doc.degrees.len() {
                let (rows, cols, matrix) = boundary_shape(&doc, q)?;
                let mut out = RatMatrix::zeros(rows, cols);
                for (i, row) in matrix.iter().enumerate() {
                    for (j, entry) in row.iter().enumerate() {
                        let value = match entry {
                            EntryDoc::Int(n) => Rational::from(BigInt::from(*n)),
                            EntryDoc::Text(t) => parse_rational(t)?,
                            EntryDoc::Terms(_) => {
                                return Err(IoError::Document(format!(
                                    "boundary {q} entry ({i},{j}) is in group-ring form but the document has no representation block"
                                )));
                            }
                        };
                        out.set(i, j, value);
                    }
                }
                boundaries.push(out);
            }
            let complex = ChainComplex::new(doc.degrees.clone(), boundaries)?;
            complex.validate()?;
            Ok(ParsedComplex::Plain(complex))
        }
        Some(rep_doc) => {
            let mut images = Vec::with_capacity(rep_doc.images.len());
            for (index, image) in rep_doc.images.iter().enumerate() {
                let rows: Vec<Vec<Rational>> = image
                    .iter()
                    .map(|row| row.iter().map(NumberDoc::to_rational).collect())
                    .collect::<Result<_, _>>()?;
                let m = RatMatrix::from_rows(rows).ok_or_else(|| {
                    IoError::Document(format!("representation image {index} is ragged"))
                })?;
                images.push(m);
            }
            let representation = Representation::new(rep_doc.rank, images)?;
            let mut boundaries = Vec::with_capacity(doc.boundaries.len());
            for q in 1..doc.degrees.len() {
                let (rows, cols, matrix) = boundary_shape(&doc, q)?;
                let mut out = GroupRingMatrix::zeros(rows, cols);
                for (i, row) in matrix.iter().enumerate() {
                    for (j, entry) in row.iter().enumerate() {
                        let element = match entry {
                            EntryDoc::Int(n) => {
                                GroupRingElement::constant(Rational::from(BigInt::from(*n)))
                            }
                            EntryDoc::Text(t) => GroupRingElement::constant(parse_rational(t)?),
                            EntryDoc::Terms(terms) => {
                                let mut parsed = Vec::with_capacity(terms.len());
                                for (coeff, letters) in terms {
                                    parsed.push((
                                        coeff.to_rational()?,
                                        GroupWord::new(letters.clone()),
                                    ));
                                }
                                GroupRingElement::new(parsed)
                            }
                        };
                        out.set(i, j, element);
                    }
                }
                boundaries.push(out);
            }
            let complex = chain::twist(&boundaries, &representation)?;
            Ok(ParsedComplex::Twisted { complex, boundaries, representation })
        }
    }
}

/// Serializes a plain complex.
pub fn complex_to_document(c: &ChainComplex) -> ComplexDocument {
    let boundaries = (1..=c.top_degree())
        .map(|q| {
            let b = c.boundary(q).expect("degree in range");
            (0..b.rows())
                .map(|i| {
                    (0..b.cols())
                        .map(|j| EntryDoc::Text(render_rational(b.get(i, j))))
                        .collect()
                })
                .collect()
        })
        .collect();
    ComplexDocument {
        schema: SCHEMA.to_string(),
        degrees: c.degrees().to_vec(),
        boundaries,
        representation: None,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScaleDoc {
    pub s: NumberDoc,
    pub u: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VectorDoc {
    pub scale: ScaleDoc,
    pub coords: Vec<NumberDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisDegreeDoc {
    pub degree: usize,
    pub vectors: Vec<VectorDoc>,
}

/// On-disk form of a graded homology basis. Degrees without vectors may be
/// omitted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisDocument {
    pub schema: String,
    pub basis: Vec<BasisDegreeDoc>,
}

/// Parses a basis document for a complex with `num_degrees` degrees.
pub fn parse_basis_document(text: &str, num_degrees: usize) -> Result<GradedBasis, IoError> {
    let doc: BasisDocument = serde_json::from_str(text)?;
    check_schema(&doc.schema)?;
    basis_from_document(&doc, num_degrees)
}

pub fn basis_from_document(doc: &BasisDocument, num_degrees: usize) -> Result<GradedBasis, IoError> {
    let mut by_degree = vec![Vec::new(); num_degrees];
    for entry in &doc.basis {
        if entry.degree >= num_degrees {
            return Err(IoError::Document(format!(
                "basis lists degree {} but the complex has degrees 0..{}",
                entry.degree,
                num_degrees - 1
            )));
        }
        if !by_degree[entry.degree].is_empty() {
            return Err(IoError::Document(format!(
                "basis lists degree {} twice",
                entry.degree
            )));
        }
        for (index, v) in entry.vectors.iter().enumerate() {
            let scale = PiRadical::new(v.scale.s.to_rational()?, v.scale.u)?;
            let coords = v
                .coords
                .iter()
                .map(NumberDoc::to_rational)
                .collect::<Result<Vec<_>, _>>()?;
            let vector = ScaledVector::new(scale, coords).ok_or_else(|| {
                IoError::Document(format!(
                    "basis vector {index} in degree {} has all-zero coordinates",
                    entry.degree
                ))
            })?;
            by_degree[entry.degree].push(vector);
        }
    }
    Ok(GradedBasis::new(by_degree))
}

/// Serializes a graded basis; empty degrees are omitted.
pub fn basis_to_document(h: &GradedBasis) -> BasisDocument {
    let basis = h
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, vectors)| !vectors.is_empty())
        .map(|(degree, vectors)| BasisDegreeDoc {
            degree,
            vectors: vectors
                .iter()
                .map(|v| VectorDoc {
                    scale: ScaleDoc {
                        s: NumberDoc::from_rational(v.scale().s()),
                        u: v.scale().u(),
                    },
                    coords: v.coords().iter().map(NumberDoc::from_rational).collect(),
                })
                .collect(),
        })
        .collect();
    BasisDocument { schema: SCHEMA.to_string(), basis }
}

/// Exact string plus float rendering of one value.
#[derive(Debug, Clone, Serialize)]
pub struct ValueReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<f64>,
}

impl ValueReport {
    pub fn from_exact(v: &PiRadical) -> ValueReport {
        ValueReport {
            exact: Some(render_exact(v)),
            float: v.to_f64().ok(),
            error_bound: None,
        }
    }

    pub fn from_float(value: f64, error_bound: f64) -> ValueReport {
        ValueReport { exact: None, float: Some(value), error_bound: Some(error_bound) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub det: ValueReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadratureReport {
    pub panels: usize,
    pub value: f64,
    pub relative_difference: f64,
}

/// Machine-readable report printed to standard output by the CLI.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<ValueReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<ValueReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quadrature: Option<QuadratureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_degree: Option<Vec<DegreeReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<SuiteResult>>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: f64,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            input: None,
            torsion: None,
            volume: None,
            quadrature: None,
            per_degree: None,
            suites: None,
            status: "ok".to_string(),
            error: None,
            timing_ms: 0.0,
        }
    }
}
