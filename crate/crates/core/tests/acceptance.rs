//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its parameters once it holds. All exact comparisons are
//! component equality on the scalar domain, i.e. zero tolerance.

use num::traits::Pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;
use torsion_lab::corpus::{
    builtin_models, mix_basis_degree, random_complex, random_lifts, random_orthogonal,
    random_positive_rational,
};
use torsion_lab::io::{
    basis_to_document, complex_to_document, parse_basis_document, parse_complex_document,
    render_exact,
};
use torsion_lab::scalar::{rat, PiRadical};
use torsion_lab::sphere::{
    euler_characteristic, product_torsion_closed, sphere_volume, volume_quadrature,
    weng_you_torsion, CellModel, ProductSpec, SphereSpec,
};
use torsion_lab::torsion::{
    scale_basis, to_float_basis, to_float_complex, torsion_exact, torsion_exact_with_lifts,
    torsion_float, TorsionValue,
};

fn exact(t: &TorsionValue) -> &PiRadical {
    t.exact().expect("exact path yields exact values")
}

#[test]
fn c01_sphere_closed_form_exact_reproduction() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut cases = 0usize;
    for n in 1..=10 {
        for m in [1, 2, 3] {
            for model in [CellModel::Minimal, CellModel::Hemispheric] {
                for _ in 0..20 {
                    let l = random_positive_rational(&mut rng);
                    let spec = SphereSpec::new(n, l.clone(), m, model).unwrap();
                    let engine = torsion_exact(&spec.complex(), &spec.harmonic_basis()).unwrap();
                    assert_eq!(
                        exact(&engine),
                        &spec.closed_torsion(),
                        "n={n} m={m} l={l} model={}",
                        model.name()
                    );
                    cases += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "ran in {elapsed:?}, expected under 10s");
    println!("criterion 1 PASS: {cases} sphere cases match the closed form exactly ({elapsed:?})");
}

#[test]
fn c02_spot_values() {
    let s3 = SphereSpec::new(3, rat(1, 1), 1, CellModel::Minimal).unwrap();
    let t = torsion_exact(&s3.complex(), &s3.harmonic_basis()).unwrap();
    assert_eq!(render_exact(exact(&t)), "2*pi^2");

    for l in [rat(1, 1), rat(7, 2), rat(13, 5)] {
        for m in [1, 2, 5] {
            let s2 = SphereSpec::new(2, l.clone(), m, CellModel::Minimal).unwrap();
            let t = torsion_exact(&s2.complex(), &s2.harmonic_basis()).unwrap();
            assert_eq!(render_exact(exact(&t)), "1", "l={l} m={m}");
        }
    }

    let s1 = SphereSpec::new(1, rat(1, 1), 2, CellModel::Minimal).unwrap();
    let t = torsion_exact(&s1.complex(), &s1.harmonic_basis()).unwrap();
    assert_eq!(render_exact(exact(&t)), "4*pi^2");

    println!("criterion 2 PASS: S^3 -> 2*pi^2, S^2 -> 1, S^1 (rank 2) -> 4*pi^2");
}

#[test]
fn c03_weng_you_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut cases = 0usize;
    for k in 0..=10u64 {
        for _ in 0..20 {
            let l = random_positive_rational(&mut rng);
            assert_eq!(
                weng_you_torsion(k, &l),
                sphere_volume((2 * k + 1) as usize, &l),
                "k={k} l={l}"
            );
            cases += 1;
        }
    }
    println!("criterion 3 PASS: {cases} (k, l) pairs agree with the odd-sphere volume exactly");
}

#[test]
fn c04_decomposition_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let mut cases = 0usize;
    for n in 1..=10 {
        for m in [1, 2, 3] {
            for _ in 0..20 {
                let l = random_positive_rational(&mut rng);
                let minimal = SphereSpec::new(n, l.clone(), m, CellModel::Minimal).unwrap();
                let hemispheric =
                    SphereSpec::new(n, l.clone(), m, CellModel::Hemispheric).unwrap();
                let t_min =
                    torsion_exact(&minimal.complex(), &minimal.harmonic_basis()).unwrap();
                let t_hemi =
                    torsion_exact(&hemispheric.complex(), &hemispheric.harmonic_basis()).unwrap();
                assert_eq!(t_min, t_hemi, "n={n} m={m} l={l}");
                cases += 1;
            }
        }
    }
    println!("criterion 4 PASS: {cases} cases agree across the two cell decompositions exactly");
}

#[test]
fn c05_scaling_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for trial in 0..200 {
        let n = rng.gen_range(1..=8);
        let spec = SphereSpec::new(
            n,
            random_positive_rational(&mut rng),
            rng.gen_range(1..=2),
            CellModel::Minimal,
        )
        .unwrap();
        let complex = spec.complex();
        let basis = spec.harmonic_basis();
        // volume elements live on the degrees that carry homology
        let alphas: Vec<PiRadical> = complex
            .betti_numbers()
            .iter()
            .map(|&b| {
                if b > 0 {
                    PiRadical::from_rational(&random_positive_rational(&mut rng)).unwrap()
                } else {
                    PiRadical::one()
                }
            })
            .collect();
        let factor = alphas
            .iter()
            .enumerate()
            .fold(PiRadical::one(), |acc, (q, alpha)| {
                &acc * &alpha.powi(if q % 2 == 0 { 1 } else { -1 })
            });
        let base = torsion_exact(&complex, &basis).unwrap();
        let scaled = torsion_exact(&complex, &scale_basis(&basis, &alphas).unwrap()).unwrap();
        assert_eq!(
            exact(&scaled),
            &(&factor * exact(&base)),
            "trial {trial}: n={n}"
        );
    }
    println!("criterion 5 PASS: 200 randomized volume-element scalings follow the alternating law exactly");
}

#[test]
fn c06_lift_and_orthogonal_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut corpus: Vec<(String, torsion_lab::ChainComplex, torsion_lab::GradedBasis)> =
        Vec::new();
    for i in 0..20 {
        let (complex, basis) = random_complex(&mut rng, 24);
        corpus.push((format!("random-{i}"), complex, basis));
    }
    for model in builtin_models() {
        corpus.push((model.name, model.complex, model.basis));
    }
    let mut lift_trials = 0usize;
    let mut mix_trials = 0usize;
    for (name, complex, basis) in &corpus {
        let reference = torsion_exact(complex, basis).unwrap();
        for _ in 0..100 {
            let lifts = random_lifts(&mut rng, complex);
            let alternative = torsion_exact_with_lifts(complex, basis, &lifts).unwrap();
            assert_eq!(alternative, reference, "{name}: lift choice changed the torsion");
            lift_trials += 1;
        }
        for _ in 0..100 {
            let mut mixed = basis.clone();
            for q in 0..complex.degrees().len() {
                let count = mixed.degree(q).len();
                if count > 0 {
                    mixed = mix_basis_degree(&mixed, q, &random_orthogonal(&mut rng, count));
                }
            }
            let alternative = torsion_exact(complex, &mixed).unwrap();
            assert_eq!(alternative, reference, "{name}: orthogonal mix changed the torsion");
            mix_trials += 1;
        }
    }
    println!(
        "criterion 6 PASS: {lift_trials} lift choices and {mix_trials} orthogonal mixes over {} complexes left the torsion unchanged",
        corpus.len()
    );
}

#[test]
fn c07_product_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for n in 1..=6 {
        for k in 1..=6 {
            for _ in 0..5 {
                let a = random_positive_rational(&mut rng);
                let b = random_positive_rational(&mut rng);
                let spec = ProductSpec::new(n, k, a.clone(), b.clone()).unwrap();
                // the three-case table, written out independently
                let expected = match (n % 2 == 0, k % 2 == 0) {
                    (true, false) => sphere_volume(k, &b).powi(euler_characteristic(n)),
                    (false, true) => sphere_volume(n, &a).powi(euler_characteristic(k)),
                    _ => PiRadical::one(),
                };
                assert_eq!(product_torsion_closed(&spec), expected, "n={n} k={k}");
            }
        }
    }
    let spot = ProductSpec::new(2, 1, rat(1, 1), rat(1, 1)).unwrap();
    assert_eq!(render_exact(&product_torsion_closed(&spot)), "4*pi^2");
    let both_odd = ProductSpec::new(3, 1, rat(2, 3), rat(7, 4)).unwrap();
    assert_eq!(render_exact(&product_torsion_closed(&both_odd)), "1");
    let both_even = ProductSpec::new(2, 2, rat(2, 3), rat(7, 4)).unwrap();
    assert_eq!(render_exact(&product_torsion_closed(&both_even)), "1");
    println!("criterion 7 PASS: product torsion matches the three-case table for n,k <= 6");
}

#[test]
fn c08_volume_quadrature_oracle() {
    let start = Instant::now();
    for n in 1..=8 {
        let numeric = volume_quadrature(n, &rat(1, 1), 1024);
        let closed = sphere_volume(n, &rat(1, 1)).to_f64().unwrap();
        let relative = (numeric - closed).abs() / closed;
        assert!(relative <= 1e-9, "n={n}: quadrature {numeric} vs exact {closed} ({relative:e})");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "ran in {elapsed:?}, expected under 5s");
    println!("criterion 8 PASS: quadrature matches closed-form volumes to 1e-9 for n <= 8 ({elapsed:?})");
}

#[test]
fn c09_float_path_agreement() {
    let mut checked = 0usize;
    for model in builtin_models() {
        assert!(model.complex.total_dimension() <= 64, "{}", model.name);
        let reference = torsion_exact(&model.complex, &model.basis).unwrap().to_f64().unwrap();
        let fc = to_float_complex(&model.complex).unwrap();
        let fb = to_float_basis(&model.basis).unwrap();
        let TorsionValue::Float { value, .. } = torsion_float(&fc, &fb, 1e-9).unwrap() else {
            panic!("float path must return a float value");
        };
        let relative = (value - reference).abs() / reference;
        assert!(relative <= 1e-9, "{}: float {value} vs exact {reference}", model.name);
        checked += 1;
    }
    println!("criterion 9 PASS: float path within 1e-9 of exact on {checked} built-in models");
}

#[test]
fn c10_cli_round_trip_and_selfcheck() {
    for model in builtin_models() {
        let direct = torsion_exact(&model.complex, &model.basis).unwrap();
        let direct_text = render_exact(exact(&direct));

        let complex_json = serde_json::to_string(&complex_to_document(&model.complex)).unwrap();
        let basis_json = serde_json::to_string(&basis_to_document(&model.basis)).unwrap();
        let reparsed = parse_complex_document(&complex_json).unwrap();
        let complex = reparsed.complex();
        let basis = parse_basis_document(&basis_json, complex.degrees().len()).unwrap();
        let recomputed = torsion_exact(complex, &basis).unwrap();
        assert_eq!(
            render_exact(exact(&recomputed)),
            direct_text,
            "{}: round trip changed the exact string",
            model.name
        );
    }

    let status = std::process::Command::new(env!("CARGO_BIN_EXE_torsion-lab"))
        .arg("selfcheck")
        .stdout(std::process::Stdio::null())
        .stderr(std::process::Stdio::null())
        .status()
        .expect("selfcheck runs");
    assert!(status.success(), "selfcheck exited with {status}");
    println!("criterion 10 PASS: byte-identical round trips on all built-in models; selfcheck exits 0");
}

#[test]
fn volume_scaling_is_exact() {
    // supporting invariant used throughout: Vol(n, l) = l^n Vol(n, 1)
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for n in 1..=10 {
        for _ in 0..5 {
            let l = random_positive_rational(&mut rng);
            let factor = PiRadical::from_rational(&Pow::pow(l.clone(), n as i32)).unwrap();
            assert_eq!(sphere_volume(n, &l), sphere_volume(n, &rat(1, 1)) * factor);
        }
    }
}
