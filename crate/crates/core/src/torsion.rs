//! Torsion of a based chain complex with respect to a graded homology basis.
//!
//! In each degree `q` the engine assembles the change-of-basis matrix whose
//! columns are, in order: the boundaries of the chosen lift in degree `q+1`,
//! the homology basis vectors of degree `q`, and the lift chains of degree `q`
//! themselves (unit coordinate vectors). Counting ranks shows the matrix is
//! square of size `dim C_q`. The torsion is the alternating product of the
//! absolute determinants,
//!
//! `tau = prod_q |det_q|^((-1)^q)`.
//!
//! The pi-radical scale of each homology vector is factored out of its column
//! first, so the core determinant is a plain rational and the whole product
//! stays exact. Degrees of dimension zero contribute the empty determinant, 1.
//!
//! The value does not depend on the lift choice; [`torsion_exact_with_lifts`]
//! accepts any independent column selection so that invariance can be
//! exercised directly.

use crate::chain::{BasisViolation, BoundaryLift, ChainComplex, ComplexViolation};
use crate::mat::{self, RatMatrix};
use crate::scalar::{rational_to_f64, PiRadical, Rational, ScalarError};
use nalgebra::DMatrix;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TorsionError {
    #[error(transparent)]
    Complex(#[from] ComplexViolation),
    #[error(transparent)]
    Basis(#[from] BasisViolation),
    #[error("zero determinant at degree {degree}: the assembled base is degenerate")]
    SingularDegree { degree: usize },
    #[error("assembled matrix at degree {degree} is not square ({got} columns for dimension {want})")]
    NotSquare { degree: usize, got: usize, want: usize },
    #[error("lift for degree {degree} is invalid: need {want} independent columns of the boundary")]
    BadLift { degree: usize, want: usize },
    #[error("expected one scale per degree: got {got}, want {want}")]
    AlphaCount { got: usize, want: usize },
    #[error("tolerance must lie in (0, 1e-3]")]
    InvalidTolerance,
    #[error("numerically degenerate basis at degree {degree} (|det| = {det:.3e} below {floor:.3e})")]
    DegenerateBasis { degree: usize, det: f64, floor: f64 },
    #[error("float complex shapes are inconsistent at degree {degree}")]
    FloatShape { degree: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A chain expressed as an exact scale times rational coordinates in the
/// preferred basis of its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledVector {
    scale: PiRadical,
    coords: Vec<Rational>,
}

impl ScaledVector {
    /// Requires at least one nonzero coordinate.
    pub fn new(scale: PiRadical, coords: Vec<Rational>) -> Option<Self> {
        if coords.iter().all(Rational::is_zero) {
            None
        } else {
            Some(ScaledVector { scale, coords })
        }
    }

    pub fn scale(&self) -> &PiRadical {
        &self.scale
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Same chain with the scale multiplied by `alpha`.
    pub fn rescaled(&self, alpha: &PiRadical) -> ScaledVector {
        ScaledVector { scale: &self.scale * alpha, coords: self.coords.clone() }
    }
}

/// Ordered homology basis vectors for every degree of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBasis {
    by_degree: Vec<Vec<ScaledVector>>,
}

impl GradedBasis {
    pub fn new(by_degree: Vec<Vec<ScaledVector>>) -> Self {
        GradedBasis { by_degree }
    }

    /// All degrees empty: the basis of an acyclic complex.
    pub fn empty(num_degrees: usize) -> Self {
        GradedBasis { by_degree: vec![Vec::new(); num_degrees] }
    }

    pub fn num_degrees(&self) -> usize {
        self.by_degree.len()
    }

    pub fn degree(&self, q: usize) -> &[ScaledVector] {
        self.by_degree.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn degrees(&self) -> &[Vec<ScaledVector>] {
        &self.by_degree
    }
}

/// Torsion as computed by the exact or the floating-point path.
#[derive(Debug, Clone, PartialEq)]
pub enum TorsionValue {
    Exact(PiRadical),
    Float { value: f64, relative_error: f64 },
}

impl TorsionValue {
    pub fn exact(&self) -> Option<&PiRadical> {
        match self {
            TorsionValue::Exact(v) => Some(v),
            TorsionValue::Float { .. } => None,
        }
    }

    pub fn to_f64(&self) -> Result<f64, ScalarError> {
        match self {
            TorsionValue::Exact(v) => v.to_f64(),
            TorsionValue::Float { value, .. } => Ok(*value),
        }
    }
}

/// Torsion together with the per-degree determinants that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionBreakdown {
    pub torsion: PiRadical,
    /// `|det_q|` for each degree `0..=N`.
    pub degree_dets: Vec<PiRadical>,
}

/// Exact torsion with the deterministic (leftmost-pivot) boundary lifts.
pub fn torsion_exact(c: &ChainComplex, h: &GradedBasis) -> Result<TorsionValue, TorsionError> {
    torsion_exact_breakdown(c, h).map(|b| TorsionValue::Exact(b.torsion))
}

/// Exact torsion, also reporting each degree's determinant.
pub fn torsion_exact_breakdown(
    c: &ChainComplex,
    h: &GradedBasis,
) -> Result<TorsionBreakdown, TorsionError> {
    let lifts: Vec<BoundaryLift> = (1..=c.top_degree()).map(|q| c.boundary_lift(q)).collect();
    torsion_with_lifts(c, h, lifts)
}

/// Exact torsion with caller-chosen boundary lifts.
///
/// `lifts[q-1]` lists column indices of `∂_q`; each set must consist of
/// independent columns spanning the boundary space (size `rank ∂_q`). The
/// result is the same for every valid choice.
pub fn torsion_exact_with_lifts(
    c: &ChainComplex,
    h: &GradedBasis,
    lifts: &[Vec<usize>],
) -> Result<TorsionValue, TorsionError> {
    if lifts.len() != c.top_degree() {
        return Err(TorsionError::BadLift { degree: lifts.len(), want: c.top_degree() });
    }
    let mut prepared = Vec::with_capacity(lifts.len());
    for (i, columns) in lifts.iter().enumerate() {
        let q = i + 1;
        let boundary = c.boundary(q).expect("degree in range");
        let want = c.boundary_rank(q);
        if columns.len() != want || columns.iter().any(|&j| j >= boundary.cols()) {
            return Err(TorsionError::BadLift { degree: q, want });
        }
        let image = boundary.select_columns(columns);
        if mat::rank_of(&image) != want {
            return Err(TorsionError::BadLift { degree: q, want });
        }
        prepared.push(BoundaryLift { columns: columns.clone(), image });
    }
    torsion_with_lifts(c, h, prepared).map(|b| TorsionValue::Exact(b.torsion))
}

fn torsion_with_lifts(
    c: &ChainComplex,
    h: &GradedBasis,
    lifts: Vec<BoundaryLift>,
) -> Result<TorsionBreakdown, TorsionError> {
    c.validate()?;
    c.verify_basis(h)?;
    let top = c.top_degree();
    let empty_lift = BoundaryLift { columns: Vec::new(), image: RatMatrix::zeros(c.dim(top), 0) };
    let mut torsion = PiRadical::one();
    let mut degree_dets = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let dim = c.dim(q);
        let upper = if q < top { &lifts[q] } else { &empty_lift };
        let own = if q > 0 { &lifts[q - 1] } else { &empty_lift };
        let vectors = h.degree(q);

        if dim == 0 {
            degree_dets.push(PiRadical::one());
            continue;
        }

        // columns: boundaries of the upper lift, then homology vectors,
        // then this degree's lift chains as unit vectors
        let total = upper.columns.len() + vectors.len() + own.columns.len();
        if total != dim {
            return Err(TorsionError::NotSquare { degree: q, got: total, want: dim });
        }
        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(dim);
        for j in 0..upper.columns.len() {
            columns.push(upper.image.column(j));
        }
        let mut scale = PiRadical::one();
        for v in vectors {
            scale = &scale * v.scale();
            columns.push(v.coords().to_vec());
        }
        for &j in &own.columns {
            let mut unit = vec![Rational::zero(); dim];
            unit[j] = Rational::one();
            columns.push(unit);
        }
        let assembled = RatMatrix::from_columns(dim, &columns).expect("square assembly");
        let det = mat::det(&assembled);
        if det.is_zero() {
            return Err(TorsionError::SingularDegree { degree: q });
        }
        let det_abs = PiRadical::from_rational(&det.abs()).expect("nonzero absolute value");
        let degree_det = &det_abs * &scale;
        torsion = &torsion * &degree_det.powi(if q % 2 == 0 { 1 } else { -1 });
        degree_dets.push(degree_det);
    }
    Ok(TorsionBreakdown { torsion, degree_dets })
}

/// Scales the volume element of each degree by `alphas[q]`, implemented by
/// rescaling the first basis vector of the degree. Degrees without homology
/// are unaffected.
pub fn scale_basis(h: &GradedBasis, alphas: &[PiRadical]) -> Result<GradedBasis, TorsionError> {
    if alphas.len() != h.num_degrees() {
        return Err(TorsionError::AlphaCount { got: alphas.len(), want: h.num_degrees() });
    }
    let by_degree = h
        .degrees()
        .iter()
        .zip(alphas)
        .map(|(vectors, alpha)| {
            let mut out = vectors.clone();
            if let Some(first) = out.first_mut() {
                *first = first.rescaled(alpha);
            }
            out
        })
        .collect();
    Ok(GradedBasis::new(by_degree))
}

/// Chain complex with double-precision boundary matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatComplex {
    degrees: Vec<usize>,
    boundaries: Vec<DMatrix<f64>>,
}

impl FloatComplex {
    pub fn new(degrees: Vec<usize>, boundaries: Vec<DMatrix<f64>>) -> Result<Self, TorsionError> {
        if degrees.is_empty() || boundaries.len() != degrees.len() - 1 {
            return Err(TorsionError::FloatShape { degree: 0 });
        }
        for (q, b) in boundaries.iter().enumerate() {
            if b.nrows() != degrees[q] || b.ncols() != degrees[q + 1] {
                return Err(TorsionError::FloatShape { degree: q + 1 });
            }
        }
        Ok(FloatComplex { degrees, boundaries })
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn dim(&self, q: usize) -> usize {
        self.degrees.get(q).copied().unwrap_or(0)
    }

    pub fn boundary(&self, q: usize) -> Option<&DMatrix<f64>> {
        if q == 0 {
            None
        } else {
            self.boundaries.get(q - 1)
        }
    }
}

/// Graded basis with double-precision coordinates (scales already applied).
#[derive(Debug, Clone, PartialEq)]
pub struct FloatBasis {
    by_degree: Vec<Vec<Vec<f64>>>,
}

impl FloatBasis {
    pub fn new(by_degree: Vec<Vec<Vec<f64>>>) -> Self {
        FloatBasis { by_degree }
    }

    pub fn degree(&self, q: usize) -> &[Vec<f64>] {
        self.by_degree.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn num_degrees(&self) -> usize {
        self.by_degree.len()
    }
}

/// Converts an exact complex to the float domain.
pub fn to_float_complex(c: &ChainComplex) -> Result<FloatComplex, ScalarError> {
    let mut boundaries = Vec::with_capacity(c.top_degree());
    for q in 1..=c.top_degree() {
        let b = c.boundary(q).expect("degree in range");
        let mut out = DMatrix::<f64>::zeros(b.rows(), b.cols());
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out[(i, j)] = rational_to_f64(b.get(i, j)).ok_or(ScalarError::FloatOverflow)?;
            }
        }
        boundaries.push(out);
    }
    Ok(FloatComplex { degrees: c.degrees().to_vec(), boundaries })
}

/// Converts an exact basis to the float domain, folding each scale into the
/// coordinates.
pub fn to_float_basis(h: &GradedBasis) -> Result<FloatBasis, ScalarError> {
    let mut by_degree = Vec::with_capacity(h.num_degrees());
    for vectors in h.degrees() {
        let mut out = Vec::with_capacity(vectors.len());
        for v in vectors {
            let scale = v.scale().to_f64()?;
            let coords = v
                .coords()
                .iter()
                .map(|c| rational_to_f64(c).map(|f| f * scale).ok_or(ScalarError::FloatOverflow))
                .collect::<Result<Vec<f64>, _>>()?;
            out.push(coords);
        }
        by_degree.push(out);
    }
    Ok(FloatBasis { by_degree })
}

fn singular_values(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    m.clone().svd(false, false).singular_values.iter().copied().collect()
}

/// Numerical rank: singular values at or above `tol` times the largest.
fn numerical_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    let sv = singular_values(m);
    let largest = sv.iter().cloned().fold(0.0f64, f64::max);
    if largest == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s >= tol * largest).count()
}

/// Leftmost columns that are numerically independent at tolerance `tol`.
fn float_lift(b: &DMatrix<f64>, tol: f64) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    for j in 0..b.ncols() {
        let mut candidate = kept.clone();
        candidate.push(j);
        let sub = b.select_columns(candidate.iter());
        if numerical_rank(&sub, tol) == candidate.len() {
            kept = candidate;
        }
    }
    kept
}

/// Floating-point torsion, mirroring the exact construction with numerical
/// rank decisions. `tol` must lie in `(0, 1e-3]`.
pub fn torsion_float(
    c: &FloatComplex,
    h: &FloatBasis,
    tol: f64,
) -> Result<TorsionValue, TorsionError> {
    if !(tol > 0.0 && tol <= 1e-3) {
        return Err(TorsionError::InvalidTolerance);
    }
    let top = c.top_degree();
    if h.num_degrees() != top + 1 {
        return Err(BasisViolation::DegreeCount { got: h.num_degrees(), want: top + 1 }.into());
    }
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|q| c.boundary(q).map_or(0, |b| numerical_rank(b, tol)))
        .collect();
    let lifts: Vec<Vec<usize>> = (0..=top)
        .map(|q| c.boundary(q + 1).map_or(Vec::new(), |b| float_lift(b, tol)))
        .collect();

    let mut value = 1.0f64;
    let mut relative_error = 0.0f64;
    for q in 0..=top {
        let dim = c.dim(q);
        let vectors = h.degree(q);
        let homology = dim - ranks[q] - ranks[q + 1];
        if vectors.len() != homology {
            return Err(BasisViolation::WrongCount { degree: q, got: vectors.len(), want: homology }.into());
        }
        for (index, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(BasisViolation::WrongLength { degree: q, index, got: v.len(), want: dim }.into());
            }
        }
        if dim == 0 {
            continue;
        }
        let upper_lift = &lifts[q];
        let own_lift: Vec<usize> = if q > 0 { lifts[q - 1].clone() } else { Vec::new() };
        let total = upper_lift.len() + vectors.len() + own_lift.len();
        if total != dim {
            return Err(TorsionError::NotSquare { degree: q, got: total, want: dim });
        }
        let mut assembled = DMatrix::<f64>::zeros(dim, dim);
        let mut col = 0usize;
        if let Some(b) = c.boundary(q + 1) {
            for &j in upper_lift {
                assembled.set_column(col, &b.column(j));
                col += 1;
            }
        }
        for v in vectors {
            for (i, &x) in v.iter().enumerate() {
                assembled[(i, col)] = x;
            }
            col += 1;
        }
        for &j in &own_lift {
            assembled[(j, col)] = 1.0;
            col += 1;
        }
        let sv = singular_values(&assembled);
        let det: f64 = sv.iter().product();
        let floor = tol.powi(dim as i32);
        if det.is_nan() || det <= floor {
            return Err(TorsionError::DegenerateBasis { degree: q, det, floor });
        }
        let largest = sv.iter().cloned().fold(0.0f64, f64::max);
        let smallest = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        let condition = largest / smallest;
        relative_error += (dim * dim) as f64 * f64::EPSILON * condition;
        if q % 2 == 0 {
            value *= det;
        } else {
            value /= det;
        }
    }
    Ok(TorsionValue::Float { value, relative_error })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainComplex;
    use crate::scalar::rat;

    fn rm(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect())
            .unwrap()
    }

    fn pr(s_num: i64, s_den: i64, u: i64) -> PiRadical {
        PiRadical::new(rat(s_num, s_den), u).unwrap()
    }

    fn minimal_sphere(n: usize, vol: &PiRadical) -> (ChainComplex, GradedBasis) {
        let mut degrees = vec![0usize; n + 1];
        degrees[0] = 1;
        degrees[n] = 1;
        let boundaries = (1..=n).map(|q| RatMatrix::zeros(degrees[q - 1], degrees[q])).collect();
        let c = ChainComplex::new(degrees, boundaries).unwrap();
        let root = vol.sqrt().unwrap();
        let mut by_degree = vec![Vec::new(); n + 1];
        by_degree[0] = vec![ScaledVector::new(root.clone(), vec![rat(1, 1)]).unwrap()];
        by_degree[n] = vec![ScaledVector::new(PiRadical::one() / root, vec![rat(1, 1)]).unwrap()];
        (c, GradedBasis::new(by_degree))
    }

    #[test]
    fn degree_zero_only_complex() {
        let c = ChainComplex::new(vec![1], vec![]).unwrap();
        let h = GradedBasis::new(vec![vec![
            ScaledVector::new(PiRadical::one(), vec![rat(1, 1)]).unwrap(),
        ]]);
        let t = torsion_exact(&c, &h).unwrap();
        assert_eq!(t.exact().unwrap(), &PiRadical::one());
    }

    #[test]
    fn degree_one_concentrated_scale() {
        // 0 -> R -> 0 concentrated in degree 1, basis scaled by 3
        let c = ChainComplex::new(vec![0, 1], vec![RatMatrix::zeros(0, 1)]).unwrap();
        let h = GradedBasis::new(vec![
            vec![],
            vec![ScaledVector::new(PiRadical::from_integer(3).unwrap(), vec![rat(1, 1)]).unwrap()],
        ]);
        let t = torsion_exact(&c, &h).unwrap();
        // |det_1| = 3 with exponent -1
        assert_eq!(t.exact().unwrap(), &pr(1, 9, 0));
    }

    #[test]
    fn acyclic_identity_and_scaled() {
        let id = ChainComplex::new(vec![1, 1], vec![rm(&[&[1]])]).unwrap();
        let h = GradedBasis::empty(2);
        let t = torsion_exact(&id, &h).unwrap();
        assert_eq!(t.exact().unwrap(), &PiRadical::one());

        let doubled = ChainComplex::new(vec![1, 1], vec![rm(&[&[2]])]).unwrap();
        let t = torsion_exact(&doubled, &h).unwrap();
        assert_eq!(t.exact().unwrap(), &PiRadical::from_integer(2).unwrap());
    }

    #[test]
    fn minimal_model_closed_form() {
        // S^3 with Vol = 2 pi^2: torsion equals the volume
        let vol = pr(4, 1, 4);
        let (c, h) = minimal_sphere(3, &vol);
        let t = torsion_exact(&c, &h).unwrap();
        assert_eq!(t.exact().unwrap(), &vol);

        // S^2 with Vol = 4 pi: torsion is 1
        let (c, h) = minimal_sphere(2, &pr(16, 1, 2));
        let t = torsion_exact(&c, &h).unwrap();
        assert_eq!(t.exact().unwrap(), &PiRadical::one());
    }

    #[test]
    fn breakdown_reports_each_degree() {
        let vol = pr(4, 1, 4);
        let (c, h) = minimal_sphere(3, &vol);
        let b = torsion_exact_breakdown(&c, &h).unwrap();
        let root = vol.sqrt().unwrap();
        assert_eq!(b.degree_dets.len(), 4);
        assert_eq!(b.degree_dets[0], root);
        assert_eq!(b.degree_dets[1], PiRadical::one());
        assert_eq!(b.degree_dets[3], PiRadical::one() / root);
    }

    #[test]
    fn scale_basis_law_on_sphere() {
        let vol = pr(4, 1, 4);
        let (c, h) = minimal_sphere(3, &vol);
        let base = torsion_exact(&c, &h).unwrap().exact().unwrap().clone();

        // alpha_0 = 2 doubles the torsion
        let mut alphas = vec![PiRadical::one(); 4];
        alphas[0] = PiRadical::from_integer(2).unwrap();
        let t = torsion_exact(&c, &scale_basis(&h, &alphas).unwrap()).unwrap();
        assert_eq!(
            t.exact().unwrap(),
            &(&base * &PiRadical::from_integer(2).unwrap())
        );

        // alpha_3 = 5 divides it by 5
        let mut alphas = vec![PiRadical::one(); 4];
        alphas[3] = PiRadical::from_integer(5).unwrap();
        let t = torsion_exact(&c, &scale_basis(&h, &alphas).unwrap()).unwrap();
        assert_eq!(
            t.exact().unwrap(),
            &(&base / &PiRadical::from_integer(5).unwrap())
        );

        // all ones: untouched
        let same = scale_basis(&h, &vec![PiRadical::one(); 4]).unwrap();
        assert_eq!(same, h);
    }

    #[test]
    fn custom_lift_agrees() {
        // hemispheric circle: both columns of the boundary are valid lifts
        let c = ChainComplex::new(vec![2, 2], vec![rm(&[&[1, -1], &[-1, 1]])]).unwrap();
        let h = GradedBasis::new(vec![
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1), rat(1, 1)]).unwrap()],
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1), rat(1, 1)]).unwrap()],
        ]);
        let default = torsion_exact(&c, &h).unwrap();
        let other = torsion_exact_with_lifts(&c, &h, &[vec![1]]).unwrap();
        assert_eq!(default, other);
        assert!(matches!(
            torsion_exact_with_lifts(&c, &h, &[vec![0, 1]]),
            Err(TorsionError::BadLift { degree: 1, .. })
        ));
    }

    #[test]
    fn float_path_matches_exact() {
        let vol = pr(4, 1, 4);
        let (c, h) = minimal_sphere(3, &vol);
        let exact = torsion_exact(&c, &h).unwrap().to_f64().unwrap();
        let t = torsion_float(&to_float_complex(&c).unwrap(), &to_float_basis(&h).unwrap(), 1e-9)
            .unwrap();
        let TorsionValue::Float { value, relative_error } = t else { panic!("float path") };
        assert!((value - exact).abs() / exact < 1e-9);
        assert!(relative_error < 1e-9);
        // 2 pi^2
        assert!((value - 19.739208802178716).abs() / value < 1e-12);
    }

    #[test]
    fn float_path_acyclic_values() {
        let id = FloatComplex::new(vec![1, 1], vec![DMatrix::from_element(1, 1, 1.0)]).unwrap();
        let h = FloatBasis::new(vec![vec![], vec![]]);
        let TorsionValue::Float { value, .. } = torsion_float(&id, &h, 1e-9).unwrap() else {
            panic!()
        };
        assert!((value - 1.0).abs() < 1e-12);

        let doubled = FloatComplex::new(vec![1, 1], vec![DMatrix::from_element(1, 1, 2.0)]).unwrap();
        let h = FloatBasis::new(vec![vec![], vec![]]);
        let TorsionValue::Float { value, .. } = torsion_float(&doubled, &h, 1e-9).unwrap() else {
            panic!()
        };
        assert!((value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn float_path_rejects_bad_tolerance() {
        let id = FloatComplex::new(vec![1, 1], vec![DMatrix::from_element(1, 1, 1.0)]).unwrap();
        let h = FloatBasis::new(vec![vec![], vec![]]);
        assert_eq!(torsion_float(&id, &h, 0.0), Err(TorsionError::InvalidTolerance));
        assert_eq!(torsion_float(&id, &h, 0.01), Err(TorsionError::InvalidTolerance));
    }
}
