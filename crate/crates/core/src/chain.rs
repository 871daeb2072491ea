//! Chain complexes over the rationals, with validation, homology ranks,
//! boundary-lift selection, and twisting by orthogonal representations.
//!
//! A [`ChainComplex`] stores the module dimension of every degree together
//! with the boundary matrices; columns of the boundary in degree `q` are the
//! images of the preferred basis of `C_q` expressed in the preferred basis of
//! `C_{q-1}`. Homology is taken over a field, so Betti numbers follow from
//! ranks alone.
//!
//! The group-ring layer ([`GroupRingMatrix`], [`Representation`]) turns a
//! presentation of the equivariant complex of a universal cover into an
//! ordinary rational complex by evaluating each word through an orthogonal
//! representation ([`twist`]).

use crate::mat::{self, RatMatrix};
use crate::scalar::Rational;
use crate::torsion::GradedBasis;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("boundary {index} has shape {got_rows}x{got_cols}, expected {want_rows}x{want_cols}")]
    BoundaryShape {
        index: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("a complex needs at least one degree")]
    NoDegrees,
    #[error("{got} boundary matrices for {want} degrees (need one per positive degree)")]
    BoundaryCount { got: usize, want: usize },
    #[error("word references generator {index} but the representation has {available}")]
    UnknownGenerator { index: usize, available: usize },
    #[error("generator image {index} is not orthogonal (R^T R != I)")]
    NotOrthogonal { index: usize },
    #[error("generator image {index} is {got_rows}x{got_cols}, expected {rank}x{rank}")]
    ImageShape { index: usize, got_rows: usize, got_cols: usize, rank: usize },
    #[error("group-ring boundaries are empty; the complex shape cannot be inferred")]
    EmptyPresentation,
    #[error("twisted complex violates the boundary condition at degree {degree}; the presentation is inconsistent with the representation")]
    InconsistentPresentation { degree: usize },
}

/// Failure report from [`ChainComplex::validate`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexViolation {
    #[error("boundary composition is nonzero at degree {degree}")]
    Composition { degree: usize },
}

/// Failure report from [`ChainComplex::verify_basis`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisViolation {
    #[error("degree {degree}: basis has {got} vectors, homology has dimension {want}")]
    WrongCount { degree: usize, got: usize, want: usize },
    #[error("degree {degree}: vector {index} has {got} coordinates, expected {want}")]
    WrongLength { degree: usize, index: usize, got: usize, want: usize },
    #[error("degree {degree}: vector {index} is not a cycle")]
    NotACycle { degree: usize, index: usize },
    #[error("degree {degree}: basis vectors are dependent modulo boundaries")]
    Dependent { degree: usize },
    #[error("basis covers {got} degrees, complex has {want}")]
    DegreeCount { got: usize, want: usize },
}

/// Finite chain complex `C_N -> ... -> C_0` of rational vector spaces.
///
/// `degrees[q]` is `dim C_q`; `boundaries[q-1]` is the matrix of
/// `∂_q : C_q -> C_{q-1}`, of shape `dim C_{q-1} x dim C_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    degrees: Vec<usize>,
    boundaries: Vec<RatMatrix>,
}

/// A boundary lift in degree `q`: column indices of `∂_q` whose images form a
/// basis of the boundary space `B_{q-1}`, plus those image columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLift {
    pub columns: Vec<usize>,
    pub image: RatMatrix,
}

impl ChainComplex {
    /// Builds a complex after checking that the boundary shapes match the
    /// degree list. The boundary condition itself is checked by [`validate`].
    ///
    /// [`validate`]: ChainComplex::validate
    pub fn new(degrees: Vec<usize>, boundaries: Vec<RatMatrix>) -> Result<Self, ChainError> {
        if degrees.is_empty() {
            return Err(ChainError::NoDegrees);
        }
        if boundaries.len() != degrees.len() - 1 {
            return Err(ChainError::BoundaryCount {
                got: boundaries.len(),
                want: degrees.len(),
            });
        }
        for (q, b) in boundaries.iter().enumerate() {
            let (want_rows, want_cols) = (degrees[q], degrees[q + 1]);
            if b.rows() != want_rows || b.cols() != want_cols {
                return Err(ChainError::BoundaryShape {
                    index: q + 1,
                    got_rows: b.rows(),
                    got_cols: b.cols(),
                    want_rows,
                    want_cols,
                });
            }
        }
        Ok(ChainComplex { degrees, boundaries })
    }

    /// Highest degree `N`.
    pub fn top_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `dim C_q`, zero outside the stored range.
    pub fn dim(&self, q: usize) -> usize {
        self.degrees.get(q).copied().unwrap_or(0)
    }

    pub fn total_dimension(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// The matrix of `∂_q`, for `1 <= q <= N`.
    pub fn boundary(&self, q: usize) -> Option<&RatMatrix> {
        if q == 0 {
            None
        } else {
            self.boundaries.get(q - 1)
        }
    }

    /// Checks `∂_q ∘ ∂_{q+1} = 0` in every degree.
    pub fn validate(&self) -> Result<(), ComplexViolation> {
        for q in 1..self.top_degree() {
            let lower = &self.boundaries[q - 1];
            let upper = &self.boundaries[q];
            if !lower.matmul(upper).is_zero() {
                return Err(ComplexViolation::Composition { degree: q });
            }
        }
        Ok(())
    }

    /// Exact rank of `∂_q`; zero for `q = 0` or `q > N`.
    pub fn boundary_rank(&self, q: usize) -> usize {
        self.boundary(q).map_or(0, mat::rank_of)
    }

    /// `dim H_q = dim C_q - rank ∂_q - rank ∂_{q+1}` for every degree.
    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.top_degree())
            .map(|q| self.dim(q) - self.boundary_rank(q) - self.boundary_rank(q + 1))
            .collect()
    }

    /// Deterministic boundary lift in degree `q`: the leftmost independent
    /// columns of `∂_q` under fraction-free elimination.
    pub fn boundary_lift(&self, q: usize) -> BoundaryLift {
        match self.boundary(q) {
            None => BoundaryLift { columns: Vec::new(), image: RatMatrix::zeros(self.dim(q.saturating_sub(1)), 0) },
            Some(b) => {
                let columns = mat::leftmost_independent_columns(b);
                let image = b.select_columns(&columns);
                BoundaryLift { columns, image }
            }
        }
    }

    /// Checks that `h` is a graded homology basis: right count per degree,
    /// every vector a cycle, and classes independent modulo boundaries.
    pub fn verify_basis(&self, h: &GradedBasis) -> Result<(), BasisViolation> {
        if h.num_degrees() != self.degrees.len() {
            return Err(BasisViolation::DegreeCount {
                got: h.num_degrees(),
                want: self.degrees.len(),
            });
        }
        let betti = self.betti_numbers();
        for q in 0..=self.top_degree() {
            let vectors = h.degree(q);
            if vectors.len() != betti[q] {
                return Err(BasisViolation::WrongCount { degree: q, got: vectors.len(), want: betti[q] });
            }
            for (index, v) in vectors.iter().enumerate() {
                if v.coords().len() != self.dim(q) {
                    return Err(BasisViolation::WrongLength {
                        degree: q,
                        index,
                        got: v.coords().len(),
                        want: self.dim(q),
                    });
                }
                if let Some(b) = self.boundary(q) {
                    if b.apply(v.coords()).iter().any(|c| !c.is_zero()) {
                        return Err(BasisViolation::NotACycle { degree: q, index });
                    }
                }
            }
            if vectors.is_empty() {
                continue;
            }
            // classes independent in Z_q / B_q: adjoining the full boundary
            // image must add exactly rank ∂_{q+1} to the span
            let mut columns: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
            let upper_rank = self.boundary_rank(q + 1);
            if let Some(b) = self.boundary(q + 1) {
                for j in 0..b.cols() {
                    columns.push(b.column(j));
                }
            }
            let stacked = RatMatrix::from_columns(self.dim(q), &columns)
                .expect("verified coordinate lengths");
            if mat::rank_of(&stacked) != vectors.len() + upper_rank {
                return Err(BasisViolation::Dependent { degree: q });
            }
        }
        Ok(())
    }
}

/// Exact rank of a rational matrix.
pub fn rank_of(m: &RatMatrix) -> usize {
    mat::rank_of(m)
}

/// Freely reduced word in the generators of a group: pairs of
/// (generator index, nonzero exponent) with adjacent indices distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<(usize, i64)>,
}

impl GroupWord {
    /// Builds a word, merging adjacent letters on the same generator and
    /// dropping zero exponents.
    pub fn new(letters: Vec<(usize, i64)>) -> Self {
        let mut reduced: Vec<(usize, i64)> = Vec::with_capacity(letters.len());
        for (gen, exp) in letters {
            if exp == 0 {
                continue;
            }
            match reduced.last_mut() {
                Some((last_gen, last_exp)) if *last_gen == gen => {
                    *last_exp += exp;
                    if *last_exp == 0 {
                        reduced.pop();
                    }
                }
                _ => reduced.push((gen, exp)),
            }
        }
        GroupWord { letters: reduced }
    }

    pub fn identity() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &GroupWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord::new(letters)
    }
}

/// Element of the rational group ring: a sum of words with nonzero rational
/// coefficients, kept sorted with distinct words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: Vec<(Rational, GroupWord)>,
}

impl GroupRingElement {
    pub fn new(terms: Vec<(Rational, GroupWord)>) -> Self {
        let mut merged: Vec<(Rational, GroupWord)> = Vec::new();
        let mut sorted = terms;
        sorted.sort_by(|a, b| a.1.cmp(&b.1));
        for (coeff, word) in sorted {
            if coeff.is_zero() {
                continue;
            }
            match merged.last_mut() {
                Some((c, w)) if *w == word => {
                    *c += coeff;
                    if c.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push((coeff, word)),
            }
        }
        GroupRingElement { terms: merged }
    }

    pub fn zero() -> Self {
        GroupRingElement { terms: Vec::new() }
    }

    /// The constant `c * identity`.
    pub fn constant(c: Rational) -> Self {
        GroupRingElement::new(vec![(c, GroupWord::identity())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rational, GroupWord)] {
        &self.terms
    }
}

/// Matrix with group-ring entries, presenting one boundary map of an
/// equivariant complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl GroupRingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GroupRingMatrix { rows, cols, entries: vec![GroupRingElement::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: GroupRingElement) {
        self.entries[i * self.cols + j] = e;
    }
}

/// Orthogonal representation of a finitely generated group: one exactly
/// orthogonal rational matrix per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    rank: usize,
    images: Vec<RatMatrix>,
}

impl Representation {
    /// Validates that every image is `rank x rank` with `R^T R = I` exactly.
    pub fn new(rank: usize, images: Vec<RatMatrix>) -> Result<Self, ChainError> {
        for (index, image) in images.iter().enumerate() {
            if image.rows() != rank || image.cols() != rank {
                return Err(ChainError::ImageShape {
                    index,
                    got_rows: image.rows(),
                    got_cols: image.cols(),
                    rank,
                });
            }
            if !image.transpose().matmul(image).is_identity() {
                return Err(ChainError::NotOrthogonal { index });
            }
        }
        Ok(Representation { rank, images })
    }

    /// The trivial representation: every generator maps to the identity.
    pub fn trivial(rank: usize, generators: usize) -> Self {
        Representation { rank, images: vec![RatMatrix::identity(rank); generators] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> usize {
        self.images.len()
    }

    /// Evaluates a word; the inverse of an orthogonal image is its transpose.
    pub fn evaluate_word(&self, word: &GroupWord) -> Result<RatMatrix, ChainError> {
        let mut out = RatMatrix::identity(self.rank);
        for &(gen, exp) in word.letters() {
            let image = self.images.get(gen).ok_or(ChainError::UnknownGenerator {
                index: gen,
                available: self.images.len(),
            })?;
            let factor = if exp < 0 { image.transpose() } else { image.clone() };
            for _ in 0..exp.unsigned_abs() {
                out = out.matmul(&factor);
            }
        }
        Ok(out)
    }

    /// Evaluates a group-ring element to an `rank x rank` rational block.
    pub fn evaluate_element(&self, e: &GroupRingElement) -> Result<RatMatrix, ChainError> {
        let mut out = RatMatrix::zeros(self.rank, self.rank);
        for (coeff, word) in e.terms() {
            let m = self.evaluate_word(word)?;
            for i in 0..self.rank {
                for j in 0..self.rank {
                    if !m.get(i, j).is_zero() {
                        let v = out.get(i, j) + coeff * m.get(i, j);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Twists a group-ring boundary sequence by an orthogonal representation.
///
/// Each entry becomes an `m x m` rational block, so the cell count in every
/// degree is multiplied by the rank. Basis order is cell-major: cell `j`
/// occupies coordinates `j*m .. (j+1)*m`. The result is validated; a nonzero
/// composition means the presentation and representation are inconsistent.
pub fn twist(
    boundaries: &[GroupRingMatrix],
    rep: &Representation,
) -> Result<ChainComplex, ChainError> {
    if boundaries.is_empty() {
        return Err(ChainError::EmptyPresentation);
    }
    let mut cells = Vec::with_capacity(boundaries.len() + 1);
    cells.push(boundaries[0].rows());
    for (q, b) in boundaries.iter().enumerate() {
        if b.rows() != cells[q] {
            return Err(ChainError::BoundaryShape {
                index: q + 1,
                got_rows: b.rows(),
                got_cols: b.cols(),
                want_rows: cells[q],
                want_cols: b.cols(),
            });
        }
        cells.push(b.cols());
    }
    let m = rep.rank();
    let mut twisted = Vec::with_capacity(boundaries.len());
    for b in boundaries {
        let mut out = RatMatrix::zeros(b.rows() * m, b.cols() * m);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                let block = rep.evaluate_element(b.get(i, j))?;
                for r in 0..m {
                    for c in 0..m {
                        if !block.get(r, c).is_zero() {
                            out.set(i * m + r, j * m + c, block.get(r, c).clone());
                        }
                    }
                }
            }
        }
        twisted.push(out);
    }
    let degrees = cells.iter().map(|&c| c * m).collect();
    let complex = ChainComplex::new(degrees, twisted)?;
    complex
        .validate()
        .map_err(|ComplexViolation::Composition { degree }| ChainError::InconsistentPresentation { degree })?;
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::torsion::ScaledVector;
    use crate::PiRadical;

    fn im(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect())
            .unwrap()
    }

    fn minimal_s2() -> ChainComplex {
        ChainComplex::new(
            vec![1, 0, 1],
            vec![RatMatrix::zeros(1, 0), RatMatrix::zeros(0, 1)],
        )
        .unwrap()
    }

    fn hemispheric(n: usize) -> ChainComplex {
        let boundaries = (1..=n)
            .map(|q| {
                let sign = if q % 2 == 0 { 1 } else { -1 };
                im(&[&[1, sign], &[sign, 1]])
            })
            .collect();
        ChainComplex::new(vec![2; n + 1], boundaries).unwrap()
    }

    #[test]
    fn validation() {
        assert!(minimal_s2().validate().is_ok());
        assert!(hemispheric(3).validate().is_ok());
        let bad = ChainComplex::new(vec![1, 1, 1], vec![im(&[&[1]]), im(&[&[1]])]).unwrap();
        assert_eq!(bad.validate(), Err(ComplexViolation::Composition { degree: 1 }));
    }

    #[test]
    fn shape_errors() {
        assert!(ChainComplex::new(vec![], vec![]).is_err());
        assert!(ChainComplex::new(vec![1, 2], vec![im(&[&[1]])]).is_err());
    }

    #[test]
    fn betti_of_models() {
        assert_eq!(minimal_s2().betti_numbers(), vec![1, 0, 1]);
        assert_eq!(hemispheric(4).betti_numbers(), vec![1, 0, 0, 0, 1]);
        assert_eq!(hemispheric(1).betti_numbers(), vec![1, 1]);
        // acyclic: 0 -> R -id-> R -> 0
        let acyclic = ChainComplex::new(vec![1, 1], vec![im(&[&[1]])]).unwrap();
        assert_eq!(acyclic.betti_numbers(), vec![0, 0]);
    }

    #[test]
    fn lift_selection() {
        let c = ChainComplex::new(vec![1, 2], vec![im(&[&[1, 1]])]).unwrap();
        assert_eq!(c.boundary_lift(1).columns, vec![0]);
        assert_eq!(minimal_s2().boundary_lift(1).columns, Vec::<usize>::new());
        assert_eq!(hemispheric(2).boundary_lift(2).columns, vec![0]);
    }

    #[test]
    fn basis_verification() {
        let c = minimal_s2();
        let vol = PiRadical::new(rat(16, 1), 2).unwrap(); // 4 pi
        let h = GradedBasis::new(vec![
            vec![ScaledVector::new(vol.sqrt().unwrap(), vec![rat(1, 1)]).unwrap()],
            vec![],
            vec![ScaledVector::new(PiRadical::one() / vol.sqrt().unwrap(), vec![rat(1, 1)]).unwrap()],
        ]);
        assert!(c.verify_basis(&h).is_ok());

        // wrong count
        let empty = GradedBasis::empty(3);
        assert!(matches!(c.verify_basis(&empty), Err(BasisViolation::WrongCount { degree: 0, .. })));

        // non-cycle in a degree with nonzero boundary
        let acyclic = ChainComplex::new(vec![1, 1], vec![im(&[&[1]])]).unwrap();
        let fake = GradedBasis::new(vec![
            vec![],
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1)]).unwrap()],
        ]);
        let err = acyclic.verify_basis(&fake).unwrap_err();
        assert!(matches!(err, BasisViolation::WrongCount { degree: 1, .. }));

        let circle = hemispheric(1);
        let dependent = GradedBasis::new(vec![
            // the boundary image direction (1,-1): dependent modulo boundaries
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1), rat(-1, 1)]).unwrap()],
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1), rat(1, 1)]).unwrap()],
        ]);
        assert!(matches!(
            circle.verify_basis(&dependent),
            Err(BasisViolation::Dependent { degree: 0 })
        ));
        let non_cycle = GradedBasis::new(vec![
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1), rat(1, 1)]).unwrap()],
            vec![ScaledVector::new(PiRadical::one(), vec![rat(1, 1), rat(0, 1)]).unwrap()],
        ]);
        assert!(matches!(
            circle.verify_basis(&non_cycle),
            Err(BasisViolation::NotACycle { degree: 1, index: 0 })
        ));
    }

    #[test]
    fn word_reduction() {
        let w = GroupWord::new(vec![(0, 2), (0, -2), (1, 1)]);
        assert_eq!(w.letters(), &[(1, 1)]);
        let w = GroupWord::new(vec![(0, 1), (1, 0), (0, 1)]);
        assert_eq!(w.letters(), &[(0, 2)]);
        assert!(GroupWord::new(vec![(3, 5), (3, -5)]).is_identity());
    }

    #[test]
    fn word_evaluation() {
        let swap = Representation::new(2, vec![im(&[&[0, 1], &[1, 0]])]).unwrap();
        assert!(swap.evaluate_word(&GroupWord::identity()).unwrap().is_identity());
        let squared = swap.evaluate_word(&GroupWord::new(vec![(0, 2)])).unwrap();
        assert!(squared.is_identity());
        let trivial = Representation::trivial(3, 2);
        let any = GroupWord::new(vec![(0, 3), (1, -2)]);
        assert!(trivial.evaluate_word(&any).unwrap().is_identity());
        assert!(matches!(
            swap.evaluate_word(&GroupWord::new(vec![(1, 1)])),
            Err(ChainError::UnknownGenerator { index: 1, available: 1 })
        ));
    }

    #[test]
    fn orthogonality_enforced() {
        assert!(Representation::new(2, vec![im(&[&[1, 1], &[0, 1]])]).is_err());
        // rational rotation by the (3,4,5) triangle is exactly orthogonal
        let rot = RatMatrix::from_rows(vec![
            vec![rat(3, 5), rat(4, 5)],
            vec![rat(-4, 5), rat(3, 5)],
        ])
        .unwrap();
        assert!(Representation::new(2, vec![rot]).is_ok());
    }

    #[test]
    fn twist_circle_group_ring() {
        // universal cover of the circle: boundary entry g - e
        let mut b1 = GroupRingMatrix::zeros(1, 1);
        b1.set(
            0,
            0,
            GroupRingElement::new(vec![
                (rat(1, 1), GroupWord::new(vec![(0, 1)])),
                (rat(-1, 1), GroupWord::identity()),
            ]),
        );
        let boundaries = vec![b1];

        // trivial rank-2 twist collapses the boundary to zero
        let trivial = Representation::trivial(2, 1);
        let c = twist(&boundaries, &trivial).unwrap();
        assert_eq!(c.degrees(), &[2, 2]);
        assert!(c.boundary(1).unwrap().is_zero());
        assert_eq!(c.betti_numbers(), vec![2, 2]);

        // swap twist gives the expected 2x2 block
        let swap = Representation::new(2, vec![im(&[&[0, 1], &[1, 0]])]).unwrap();
        let c = twist(&boundaries, &swap).unwrap();
        assert_eq!(c.boundary(1).unwrap(), &im(&[&[-1, 1], &[1, -1]]));
    }

    #[test]
    fn twist_rank_one_identity() {
        let mut b1 = GroupRingMatrix::zeros(2, 2);
        for (i, j, v) in [(0, 0, 3), (0, 1, -3), (1, 0, -3), (1, 1, 3)] {
            b1.set(i, j, GroupRingElement::constant(rat(v, 1)));
        }
        let c = twist(&[b1], &Representation::trivial(1, 0)).unwrap();
        assert_eq!(
            c.boundary(1).unwrap(),
            &im(&[&[3, -3], &[-3, 3]])
        );
    }

    #[test]
    fn twist_minimal_sphere_presentation() {
        // one 0-cell and one 3-cell, all boundaries zero
        let boundaries = vec![
            GroupRingMatrix::zeros(1, 0),
            GroupRingMatrix::zeros(0, 0),
            GroupRingMatrix::zeros(0, 1),
        ];
        let c = twist(&boundaries, &Representation::trivial(2, 0)).unwrap();
        assert_eq!(c.degrees(), &[2, 0, 0, 2]);
        assert_eq!(c.betti_numbers(), vec![2, 0, 0, 2]);
    }

    #[test]
    fn twist_detects_inconsistency() {
        // ∂1 = ∂2 = [e] does not square to zero after twisting
        let mut b = GroupRingMatrix::zeros(1, 1);
        b.set(0, 0, GroupRingElement::constant(rat(1, 1)));
        let result = twist(&[b.clone(), b], &Representation::trivial(1, 0));
        assert_eq!(result, Err(ChainError::InconsistentPresentation { degree: 1 }));
    }
}
