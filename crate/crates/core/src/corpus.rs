//! Built-in model catalog and seeded random generators.
//!
//! The generators back both the self-check suites and the randomized tests.
//! Random complexes are built in a normal form that makes the boundary
//! condition automatic: each degree is split into homology, image and lift
//! slots, the canonical boundary maps lift slots onto the next image slots,
//! and every degree is conjugated by a random unimodular change of basis.
//! The homology basis comes out of the same construction, so the pair is
//! valid by construction.

use crate::chain::ChainComplex;
use crate::mat::{self, RatMatrix};
use crate::scalar::{rat, PiRadical, Rational};
use crate::sphere::{CellModel, SphereSpec};
use crate::torsion::{GradedBasis, ScaledVector};
use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// A ready-to-run model: complex, verified basis, and the expected torsion.
#[derive(Debug, Clone)]
pub struct NamedModel {
    pub name: String,
    pub complex: ChainComplex,
    pub basis: GradedBasis,
    pub expected: PiRadical,
}

/// Every built-in sphere model: both cell structures over a small grid of
/// dimensions, ranks and radii.
pub fn builtin_models() -> Vec<NamedModel> {
    let mut out = Vec::new();
    for model in [CellModel::Minimal, CellModel::Hemispheric] {
        for n in 1..=5 {
            for m in [1, 2, 3] {
                for radius in [rat(1, 1), rat(3, 2)] {
                    let spec = SphereSpec::new(n, radius.clone(), m, model).expect("valid spec");
                    out.push(NamedModel {
                        name: format!(
                            "{}-S{}(l={},m={})",
                            model.name(),
                            n,
                            crate::io::render_rational(&radius),
                            m
                        ),
                        complex: spec.complex(),
                        basis: spec.harmonic_basis(),
                        expected: spec.closed_torsion(),
                    });
                }
            }
        }
    }
    out
}

/// Random positive rational with small numerator and denominator.
pub fn random_positive_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(1..=30), rng.gen_range(1..=30))
}

/// Random rational in a small signed range.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Random freely reduced word over the given number of generators.
pub fn random_word(rng: &mut impl Rng, generators: usize, max_len: usize) -> crate::chain::GroupWord {
    let letters = (0..rng.gen_range(0..=max_len))
        .map(|_| (rng.gen_range(0..generators), *[-2i64, -1, 1, 2].choose(rng).unwrap()))
        .collect();
    crate::chain::GroupWord::new(letters)
}

/// Random exactly orthogonal rational matrix: a signed permutation composed
/// with rational Givens rotations from Pythagorean triples.
pub fn random_orthogonal(rng: &mut impl Rng, size: usize) -> RatMatrix {
    let mut indices: Vec<usize> = (0..size).collect();
    indices.shuffle(rng);
    let mut out = RatMatrix::zeros(size, size);
    for (i, &j) in indices.iter().enumerate() {
        let sign = if rng.gen_bool(0.5) { rat(1, 1) } else { rat(-1, 1) };
        out.set(i, j, sign);
    }
    if size < 2 {
        return out;
    }
    let triples = [(3i64, 4i64, 5i64), (5, 12, 13), (8, 15, 17), (20, 21, 29)];
    for _ in 0..rng.gen_range(1..=3) {
        let (a, b, c) = *triples.choose(rng).unwrap();
        let (cos, sin) = (rat(a, c), rat(b, c));
        let i = rng.gen_range(0..size);
        let mut j = rng.gen_range(0..size);
        while j == i {
            j = rng.gen_range(0..size);
        }
        let mut rotation = RatMatrix::identity(size);
        rotation.set(i, i, cos.clone());
        rotation.set(j, j, cos);
        rotation.set(i, j, sin.clone());
        rotation.set(j, i, -sin);
        out = rotation.matmul(&out);
    }
    out
}

/// Random unimodular integer matrix together with its exact inverse,
/// built from elementary row operations.
pub fn random_unimodular(rng: &mut impl Rng, size: usize) -> (RatMatrix, RatMatrix) {
    #[derive(Clone, Copy)]
    enum Op {
        AddRow { from: usize, to: usize, factor: i64 },
        SwapRows(usize, usize),
        NegateRow(usize),
    }
    let mut ops = Vec::new();
    if size >= 1 {
        for _ in 0..(2 * size) {
            let kind = rng.gen_range(0..3);
            match kind {
                0 if size >= 2 => {
                    let from = rng.gen_range(0..size);
                    let mut to = rng.gen_range(0..size);
                    while to == from {
                        to = rng.gen_range(0..size);
                    }
                    ops.push(Op::AddRow { from, to, factor: rng.gen_range(-2..=2) });
                }
                1 if size >= 2 => {
                    let a = rng.gen_range(0..size);
                    let mut b = rng.gen_range(0..size);
                    while b == a {
                        b = rng.gen_range(0..size);
                    }
                    ops.push(Op::SwapRows(a, b));
                }
                _ => ops.push(Op::NegateRow(rng.gen_range(0..size))),
            }
        }
    }
    let apply = |m: &mut RatMatrix, op: Op, invert: bool| match op {
        Op::AddRow { from, to, factor } => {
            let factor = rat(if invert { -factor } else { factor }, 1);
            for j in 0..m.cols() {
                let v = m.get(to, j) + &factor * m.get(from, j);
                m.set(to, j, v);
            }
        }
        Op::SwapRows(a, b) => {
            for j in 0..m.cols() {
                let va = m.get(a, j).clone();
                let vb = m.get(b, j).clone();
                m.set(a, j, vb);
                m.set(b, j, va);
            }
        }
        Op::NegateRow(i) => {
            for j in 0..m.cols() {
                let v = -m.get(i, j).clone();
                m.set(i, j, v);
            }
        }
    };
    let mut forward = RatMatrix::identity(size);
    for &op in &ops {
        apply(&mut forward, op, false);
    }
    let mut inverse = RatMatrix::identity(size);
    for &op in ops.iter().rev() {
        apply(&mut inverse, op, true);
    }
    (forward, inverse)
}

/// Random valid chain complex with a matching homology basis.
///
/// The total dimension stays at or below `max_total`; torsion preconditions
/// (boundary condition, verified basis) hold by construction.
pub fn random_complex(rng: &mut impl Rng, max_total: usize) -> (ChainComplex, GradedBasis) {
    loop {
        let top = rng.gen_range(0..=3usize);
        // slots per degree: homology, incoming image, outgoing lift
        let betti: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=2)).collect();
        let mut lift = vec![0usize; top + 1];
        for q in 1..=top {
            lift[q] = rng.gen_range(0..=2);
        }
        let dims: Vec<usize> = (0..=top)
            .map(|q| betti[q] + if q < top { lift[q + 1] } else { 0 } + lift[q])
            .collect();
        if dims.iter().sum::<usize>() > max_total || dims.iter().all(|&d| d == 0) {
            continue;
        }

        let bases: Vec<(RatMatrix, RatMatrix)> =
            dims.iter().map(|&d| random_unimodular(rng, d)).collect();

        let mut boundaries = Vec::with_capacity(top);
        for q in 1..=top {
            // canonical map: lift slots of degree q onto image slots of q-1
            let mut canonical = RatMatrix::zeros(dims[q - 1], dims[q]);
            let image_offset = betti[q - 1];
            let lift_offset = betti[q] + if q < top { lift[q + 1] } else { 0 };
            for t in 0..lift[q] {
                canonical.set(image_offset + t, lift_offset + t, Rational::one());
            }
            let boundary = bases[q - 1].0.matmul(&canonical).matmul(&bases[q].1);
            boundaries.push(boundary);
        }
        let complex = ChainComplex::new(dims.clone(), boundaries).expect("consistent shapes");
        debug_assert!(complex.validate().is_ok());

        let by_degree = (0..=top)
            .map(|q| {
                (0..betti[q])
                    .map(|t| {
                        ScaledVector::new(PiRadical::one(), bases[q].0.column(t))
                            .expect("unimodular columns are nonzero")
                    })
                    .collect()
            })
            .collect();
        let basis = GradedBasis::new(by_degree);
        debug_assert!(complex.verify_basis(&basis).is_ok());
        return (complex, basis);
    }
}

/// Random valid boundary lifts: for each positive degree, a random
/// independent column subset of the boundary of full boundary rank.
pub fn random_lifts(rng: &mut impl Rng, c: &ChainComplex) -> Vec<Vec<usize>> {
    (1..=c.top_degree())
        .map(|q| {
            let boundary = c.boundary(q).expect("degree in range");
            let want = c.boundary_rank(q);
            let mut order: Vec<usize> = (0..boundary.cols()).collect();
            order.shuffle(rng);
            let mut chosen: Vec<usize> = Vec::with_capacity(want);
            for j in order {
                if chosen.len() == want {
                    break;
                }
                let mut candidate = chosen.clone();
                candidate.push(j);
                candidate.sort_unstable();
                if mat::rank_of(&boundary.select_columns(&candidate)) == candidate.len() {
                    chosen = candidate;
                }
            }
            chosen
        })
        .collect()
}

/// Applies a rational-orthogonal change of coordinates to the basis list of
/// one degree: vector `i` becomes `sum_j Q[j][i] * old[j]`. All vectors in
/// the degree must share one scale, which is preserved.
pub fn mix_basis_degree(h: &GradedBasis, degree: usize, q_matrix: &RatMatrix) -> GradedBasis {
    let mut by_degree: Vec<Vec<ScaledVector>> = h.degrees().to_vec();
    let vectors = &by_degree[degree];
    let count = vectors.len();
    assert_eq!(q_matrix.rows(), count);
    assert_eq!(q_matrix.cols(), count);
    if count == 0 {
        return GradedBasis::new(by_degree);
    }
    let scale = vectors[0].scale().clone();
    assert!(
        vectors.iter().all(|v| v.scale() == &scale),
        "mixing requires a uniform scale in the degree"
    );
    let len = vectors[0].coords().len();
    let mixed = (0..count)
        .map(|i| {
            let coords: Vec<Rational> = (0..len)
                .map(|r| {
                    let mut acc = Rational::zero();
                    for j in 0..count {
                        if !q_matrix.get(j, i).is_zero() {
                            acc += q_matrix.get(j, i) * &vectors[j].coords()[r];
                        }
                    }
                    acc
                })
                .collect();
            ScaledVector::new(scale.clone(), coords).expect("orthogonal mix keeps vectors nonzero")
        })
        .collect();
    by_degree[degree] = mixed;
    GradedBasis::new(by_degree)
}
