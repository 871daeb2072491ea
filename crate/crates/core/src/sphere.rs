//! Round spheres: exact volumes, the two standard cell models, harmonic
//! homology bases, and the closed-form torsions they produce.
//!
//! The volume of the `n`-sphere of radius `l` is
//! `2 pi^((n+1)/2) l^n / Gamma((n+1)/2)`, which [`sphere_volume`] evaluates
//! exactly through half-integer Gamma values. The result always has a square
//! rational part and an even pi exponent, so its square root stays in the
//! scalar domain — that square root is exactly what the harmonic homology
//! basis needs.
//!
//! Two cell structures are provided: the minimal model (one 0-cell, one
//! top cell, all boundaries zero) and the hemispheric model (two cells in
//! every dimension). Both carry the homology basis induced by the round
//! metric's harmonic forms: the point class is scaled by `sqrt(Vol)` and the
//! fundamental class by `1/sqrt(Vol)`; in the hemispheric model the classes
//! spread over the two cells of the extreme degrees, with the same scales
//! split accordingly. The torsion of either model is `1` for even `n` and
//! `Vol^m` for odd `n`, where `m` is the rank of the (trivial) twisting
//! representation.

use crate::chain::ChainComplex;
use crate::mat::RatMatrix;
use crate::scalar::{rat, rational_to_f64, PiRadical, Rational};
use crate::torsion::{GradedBasis, ScaledVector};
use num::{BigInt, One, Signed, Zero};
use num::traits::Pow;

/// Cell structure used to model a sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellModel {
    /// One 0-cell and one top cell; all boundaries vanish.
    Minimal,
    /// Two cells in every dimension.
    Hemispheric,
}

impl CellModel {
    pub fn name(self) -> &'static str {
        match self {
            CellModel::Minimal => "minimal",
            CellModel::Hemispheric => "hemispheric",
        }
    }
}

/// A round sphere `S^n` of rational radius, twisted by the trivial
/// representation of the given rank, modeled by the given cell structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereSpec {
    n: usize,
    radius: Rational,
    rank: usize,
    model: CellModel,
}

impl SphereSpec {
    /// Requires `n >= 1`, `radius > 0`, `rank >= 1`.
    pub fn new(n: usize, radius: Rational, rank: usize, model: CellModel) -> Option<Self> {
        if n >= 1 && radius.is_positive() && rank >= 1 {
            Some(SphereSpec { n, radius, rank, model })
        } else {
            None
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn model(&self) -> CellModel {
        self.model
    }

    pub fn volume(&self) -> PiRadical {
        sphere_volume(self.n, &self.radius)
    }

    /// The chain complex of the chosen cell model.
    pub fn complex(&self) -> ChainComplex {
        match self.model {
            CellModel::Minimal => minimal_complex(self),
            CellModel::Hemispheric => hemispheric_complex(self),
        }
    }

    /// The homology basis induced by an orthonormal basis of harmonic forms.
    pub fn harmonic_basis(&self) -> GradedBasis {
        harmonic_homology_basis(self)
    }

    /// Closed-form torsion: `1` for even `n`, `Vol^rank` for odd `n`.
    pub fn closed_torsion(&self) -> PiRadical {
        if self.n % 2 == 0 {
            PiRadical::one()
        } else {
            self.volume().powi(self.rank as i64)
        }
    }
}

/// A product of two round spheres `S^n_a x S^k_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpec {
    n: usize,
    k: usize,
    a: Rational,
    b: Rational,
}

impl ProductSpec {
    pub fn new(n: usize, k: usize, a: Rational, b: Rational) -> Option<Self> {
        if n >= 1 && k >= 1 && a.is_positive() && b.is_positive() {
            Some(ProductSpec { n, k, a, b })
        } else {
            None
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n, self.k)
    }

    pub fn radii(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }
}

/// `Gamma(j/2)` exactly, for `j >= 1`.
///
/// Even `j = 2m` gives the factorial `(m-1)!`; odd `j = 2m+1` gives
/// `(2m)! / (4^m m!) * sqrt(pi)`.
pub fn gamma_half(j: u64) -> PiRadical {
    assert!(j >= 1, "gamma_half needs a positive argument");
    if j % 2 == 0 {
        let m = j / 2;
        PiRadical::from_rational(&Rational::from(factorial(m - 1))).expect("positive factorial")
    } else {
        let m = j / 2;
        let numer = factorial(2 * m);
        let denom = Pow::pow(BigInt::from(4), m as u32) * factorial(m);
        let r = Rational::new(numer, denom);
        PiRadical::new(&r * &r, 1).expect("positive coefficient")
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact volume of `S^n` of radius `l`: `2 pi^((n+1)/2) l^n / Gamma((n+1)/2)`.
///
/// The result always has even pi exponent and a square rational part, so
/// [`PiRadical::sqrt`] applies to it.
pub fn sphere_volume(n: usize, l: &Rational) -> PiRadical {
    assert!(n >= 1 && l.is_positive(), "sphere_volume needs n >= 1 and l > 0");
    let radius_power = Pow::pow(l.clone(), n as i32);
    let numerator = PiRadical::new(rat(4, 1), (n + 1) as i64).expect("positive")
        * PiRadical::from_rational(&radius_power).expect("positive radius power");
    numerator / gamma_half((n + 1) as u64)
}

/// `chi(S^n)`: 2 for even `n`, 0 for odd `n`.
pub fn euler_characteristic(n: usize) -> i64 {
    assert!(n >= 1);
    if n % 2 == 0 {
        2
    } else {
        0
    }
}

/// Composite-Simpson evaluation of the sphere volume through the polar
/// recursion `Vol(S^n) = Vol(S^(n-1)) * Int_0^pi sin^(n-1)`, with base
/// `Vol(S^1) = 2 pi`. Serves as an independent oracle for [`sphere_volume`].
///
/// `panels` is the Simpson panel count of the first level and doubles with
/// each recursion level; it must be even and at least 64.
pub fn volume_quadrature(n: usize, l: &Rational, panels: usize) -> f64 {
    assert!(n >= 1 && l.is_positive(), "volume_quadrature needs n >= 1 and l > 0");
    assert!(panels >= 64 && panels % 2 == 0, "panels must be even and >= 64");
    let radius = rational_to_f64(l).expect("radius in f64 range");
    let mut volume = std::f64::consts::TAU;
    let mut level_panels = panels;
    for j in 2..=n {
        volume *= simpson_sin_power(j - 1, level_panels);
        level_panels *= 2;
    }
    volume * radius.powi(n as i32)
}

/// `Int_0^pi sin^k(theta) dtheta` by composite Simpson with `panels` panels.
fn simpson_sin_power(k: usize, panels: usize) -> f64 {
    let h = std::f64::consts::PI / panels as f64;
    let f = |i: usize| (i as f64 * h).sin().powi(k as i32);
    let mut sum = f(0) + f(panels);
    for i in 1..panels {
        sum += f(i) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    sum * h / 3.0
}

/// The minimal cell model: rank-many copies of the point and top classes,
/// zero boundaries everywhere.
pub fn minimal_complex(spec: &SphereSpec) -> ChainComplex {
    let (n, m) = (spec.n, spec.rank);
    let mut degrees = vec![0usize; n + 1];
    degrees[0] = m;
    degrees[n] = m;
    let boundaries = (1..=n).map(|q| RatMatrix::zeros(degrees[q - 1], degrees[q])).collect();
    ChainComplex::new(degrees, boundaries).expect("consistent shape")
}

/// The hemispheric cell model: two cells per dimension, boundary blocks
/// `D_q = [[1, (-1)^q], [(-1)^q, 1]]` tensored with the identity of the rank.
pub fn hemispheric_complex(spec: &SphereSpec) -> ChainComplex {
    let (n, m) = (spec.n, spec.rank);
    let degrees = vec![2 * m; n + 1];
    let boundaries = (1..=n)
        .map(|q| {
            let sign = if q % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            RatMatrix::from_fn(2 * m, 2 * m, |r, c| {
                if r % m != c % m {
                    Rational::zero()
                } else if r / m == c / m {
                    Rational::one()
                } else {
                    sign.clone()
                }
            })
        })
        .collect();
    ChainComplex::new(degrees, boundaries).expect("consistent shape")
}

/// The homology basis induced by the de Rham map from an orthonormal basis
/// of harmonic forms, one vector per rank channel in degrees `0` and `n`.
pub fn harmonic_homology_basis(spec: &SphereSpec) -> GradedBasis {
    let (n, m) = (spec.n, spec.rank);
    let vol = spec.volume();
    let root = vol.sqrt().expect("sphere volumes are squares in the domain");
    let inverse_root = &PiRadical::one() / &root;
    let mut by_degree = vec![Vec::new(); n + 1];
    match spec.model {
        CellModel::Minimal => {
            for channel in 0..m {
                by_degree[0].push(unit_vector(&root, m, channel));
                by_degree[n].push(unit_vector(&inverse_root, m, channel));
            }
        }
        CellModel::Hemispheric => {
            // each dual top cell is a hemisphere carrying half the volume;
            // the top class pairs the two top cells with a parity sign
            let half_root = root / PiRadical::from_integer(2).unwrap();
            let top_sign = if n % 2 == 0 { rat(-1, 1) } else { rat(1, 1) };
            for channel in 0..m {
                let mut point = vec![Rational::zero(); 2 * m];
                point[channel] = Rational::one();
                point[m + channel] = Rational::one();
                by_degree[0].push(ScaledVector::new(half_root.clone(), point).unwrap());

                let mut top = vec![Rational::zero(); 2 * m];
                top[channel] = Rational::one();
                top[m + channel] = top_sign.clone();
                by_degree[n].push(ScaledVector::new(inverse_root.clone(), top).unwrap());
            }
        }
    }
    GradedBasis::new(by_degree)
}

fn unit_vector(scale: &PiRadical, len: usize, index: usize) -> ScaledVector {
    let mut coords = vec![Rational::zero(); len];
    coords[index] = Rational::one();
    ScaledVector::new(scale.clone(), coords).unwrap()
}

/// Closed-form torsion of a product of spheres with the product metric:
/// `Vol(S^k_b)^chi(S^n_a)` when `n` is even and `k` odd, symmetrically when
/// `k` is even and `n` odd, and `1` when the parities agree.
pub fn product_torsion_closed(spec: &ProductSpec) -> PiRadical {
    let (n, k) = spec.dims();
    let (a, b) = spec.radii();
    match (n % 2, k % 2) {
        (0, 1) => sphere_volume(k, b).powi(euler_characteristic(n)),
        (1, 0) => sphere_volume(n, a).powi(euler_characteristic(k)),
        _ => PiRadical::one(),
    }
}

/// The spectral-side closed form for odd spheres:
/// `2 pi^(k+1) l^(2k+1) / k!` for `S^(2k+1)` of radius `l`.
///
/// Equal to [`sphere_volume`]`(2k+1, l)` for every `k` and `l`.
pub fn weng_you_torsion(k: u64, l: &Rational) -> PiRadical {
    assert!(l.is_positive(), "radius must be positive");
    let radius_power = Pow::pow(l.clone(), (2 * k + 1) as i32);
    let coefficient = Rational::from(BigInt::from(2)) * radius_power
        / Rational::from(factorial(k));
    PiRadical::new(&coefficient * &coefficient, 2 * (k as i64 + 1)).expect("positive coefficient")
}
