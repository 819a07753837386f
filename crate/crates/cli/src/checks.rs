//! Named checks. Exact checks run on Gaussian-integer forms and report the
//! number of mismatching coefficients against a threshold of 0; numerical
//! checks report a max-norm deviation against the configured tolerance.

use std::time::Instant;

use dkjoyce_core::clifford::{blade_product, clifford_mul, ConstantForm, UnitFormKind, METRIC};
use dkjoyce_core::complex4::{boundary, pair, Cell, DirectionSet, MultiIndex};
use dkjoyce_core::dirac_joyce::*;
use dkjoyce_core::forms::*;
use dkjoyce_core::planewave::*;
use dkjoyce_core::sample;
use dkjoyce_core::scalar::{gaussian, GaussianRational};
use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;

use crate::report::CheckResult;

type Q = GaussianRational;

/// Builds the four `(label, shape)` terms of a family at `(p, m)`.
pub type FamilyTerms = fn(Momentum, MassParam) -> [(WaveLabel, ConstantForm); 4];

/// Relative perturbation witness: residuals of a family built with `p₀ + 0.1`
/// must reach this fraction of `‖Φ‖`.
pub const PERTURBATION_FLOOR: f64 = 1e-2;
pub const PERTURBATION: f64 = 0.1;

/// Draw count per degree for the randomized identity checks.
pub const IDENTITY_SAMPLES: usize = 6;

pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let mut c = f();
    c.runtime = start.elapsed();
    c
}

fn count_diff(a: &DiscreteForm<Q>, b: &DiscreteForm<Q>) -> usize {
    a.minus(b).len()
}

fn count_diff_inh(a: &InhomogeneousForm<Q>, b: &InhomogeneousForm<Q>) -> usize {
    a.minus(b).iter().count()
}

fn exact(name: &str, mismatches: usize) -> CheckResult {
    CheckResult::measured(name, mismatches as f64, 0.0)
}

/// Degenerate denominators make a construction inapplicable rather than wrong.
fn unavailable(name: impl Into<String>, threshold: f64, e: &dkjoyce_core::Error) -> CheckResult {
    match e {
        dkjoyce_core::Error::DegenerateDenominator { .. } => CheckResult::skipped(name, threshold, e.to_string()),
        _ => CheckResult::error(name, threshold, e.to_string()),
    }
}

fn sign(even: bool) -> Q {
    if even {
        gaussian(1, 0)
    } else {
        gaussian(-1, 0)
    }
}

pub fn identity_checks(win: &Window, tol: f64, rng: &mut ChaCha8Rng) -> Vec<CheckResult> {
    let n = IDENTITY_SAMPLES;
    let region = win.region();
    let interior = win.interior();
    let mut out = Vec::new();

    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..=4 {
            for _ in 0..n {
                let w = sample::exact_form(rng, r, win);
                bad += coboundary(&coboundary(&w)).len();
            }
        }
        exact("identity/coboundary-nilpotent", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..=4 {
            for _ in 0..n {
                let w = sample::exact_form(rng, r, win);
                bad += codifferential(&codifferential(&w)).len();
            }
        }
        exact("identity/codifferential-nilpotent", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..=4 {
            for _ in 0..n {
                bad += boundary(&boundary(&sample::exact_chain(rng, r, &region, 16))).len();
            }
        }
        exact("identity/boundary-nilpotent", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..4 {
            for _ in 0..n {
                let c = sample::exact_chain(rng, r + 1, &region, 16);
                let w = sample::exact_form_on(rng, r, &region.expanded(1));
                bad += usize::from(pair(&boundary(&c), &w) != pair(&c, &coboundary(&w)));
            }
        }
        exact("identity/pairing-duality", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..4 {
            for _ in 0..n {
                let u = sample::exact_form_on(rng, r, &interior);
                let v = sample::exact_form_on(rng, r + 1, &interior);
                let lhs = inner_product(&coboundary(&u), &v, win);
                let rhs = inner_product(&u, &codifferential(&v), win);
                bad += usize::from(lhs.is_err() || lhs.ok() != rhs.ok());
            }
        }
        exact("identity/adjointness", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..=4 {
            for q in 0..=4 - r {
                for _ in 0..n {
                    let u = sample::exact_form(rng, r, win);
                    let v = sample::exact_form(rng, q, win);
                    let lhs = coboundary(&cup(&u, &v));
                    let rhs = cup(&coboundary(&u), &v).plus(&cup(&u, &coboundary(&v)).scaled(&sign(r % 2 == 0)));
                    bad += count_diff(&lhs, &rhs);
                }
            }
        }
        exact("identity/leibniz", bad)
    }));
    out.push(timed(|| exact("identity/star-defining-relation", star_relation_failures())));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 0..=4 {
            for _ in 0..n {
                let w = sample::exact_form(rng, r, win);
                let twice = hodge_star(&hodge_star(&w));
                bad += count_diff(&twice, &w.shifted_tau().scaled(&sign((r + 1) % 2 == 0)));
                bad += count_diff(&hodge_star_inverse(&hodge_star(&w)), &w);
            }
        }
        exact("identity/double-star", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 1..=4 {
            for _ in 0..n {
                let w = sample::exact_form(rng, r, win);
                bad += count_diff(&codifferential_via_star(&w), &codifferential(&w));
            }
        }
        exact("identity/codifferential-via-star", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for r in 1..=4 {
            for _ in 0..n {
                let w = sample::exact_form(rng, r, win);
                bad += count_diff(&star_d_star(&w), &codifferential(&w).shifted_tau());
            }
        }
        exact("identity/star-d-star-shift", bad)
    }));
    out.push(timed(|| exact("identity/clifford-anticommutator", anticommutator_failures())));
    out.push(timed(|| exact("identity/clifford-associativity", associativity_failures())));
    out.push(timed(|| {
        let x = ConstantForm::<Q>::unit(UnitFormKind::X);
        let mut bad = 0;
        for _ in 0..n {
            let w = sample::exact_inhomogeneous(rng, win);
            bad += count_diff_inh(&x.left_mul(&w), &w) + count_diff_inh(&x.right_mul(&w), &w);
        }
        exact("identity/clifford-unit", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for _ in 0..n {
            let w = sample::exact_inhomogeneous(rng, win);
            bad += count_diff_inh(&decomposition(&w), &d_plus_delta(&w));
        }
        exact("identity/decomposition", bad)
    }));
    out.push(timed(|| {
        let mut bad = 0;
        for _ in 0..n {
            let w = sample::exact_inhomogeneous(rng, win);
            bad += count_diff_inh(&d_plus_delta(&d_plus_delta(&w)).neg(), &laplacian(&w));
        }
        exact("identity/laplacian", bad)
    }));
    out.push(timed(|| {
        let mut worst = 0.0f64;
        for _ in 0..n {
            let m = MassParam::new(0.5 + rand::Rng::gen_range(rng, 0.0..2.0)).expect("positive");
            let o = sample::inhomogeneous(rng, win);
            worst = worst.max(dk_residual_form(&o, m).max_abs_diff(&dk_component_residual(&o, m)));
        }
        CheckResult::measured("identity/dirac-kahler-components", worst, tol)
    }));
    out.push(timed(|| {
        let mut worst = 0.0f64;
        for _ in 0..n {
            let m = MassParam::new(0.5 + rand::Rng::gen_range(rng, 0.0..2.0)).expect("positive");
            let o = sample::even(rng, win);
            let pipeline = joyce_residual_form(&o, &Complex64::new(m.value(), 0.0)).expect("even input");
            worst = worst.max(pipeline.max_abs_diff(&joyce_component_residual(&o, m).expect("even input")));
        }
        CheckResult::measured("identity/joyce-components", worst, tol)
    }));
    out.push(timed(|| {
        let m = gaussian(3, 0);
        let mut bad = 0;
        for _ in 0..n {
            let u = sample::exact_inhomogeneous(rng, win).even_part();
            let v = sample::exact_inhomogeneous(rng, win).even_part();
            let (a, b) = (sample::gaussian_int(rng), sample::gaussian_int(rng));
            let lhs = joyce_residual_form(&u.scaled(&a).plus(&v.scaled(&b)), &m).expect("even input");
            let rhs = joyce_residual_form(&u, &m)
                .expect("even input")
                .scaled(&a)
                .plus(&joyce_residual_form(&v, &m).expect("even input").scaled(&b));
            bad += count_diff_inh(&lhs, &rhs);
        }
        exact("identity/joyce-linearity", bad)
    }));
    out
}

/// Basis-exhaustive check of `s^k ∪ ∗s^k = Q(k₀) e^k` with `Q = −1` on
/// components containing the time axis.
pub fn star_relation_failures() -> usize {
    let k = MultiIndex::new(1, -2, 3, 0);
    DirectionSet::all()
        .filter(|&dirs| {
            let s = DiscreteForm::<Q>::basis(Cell::new(dirs, k));
            let expected = DiscreteForm::from_terms(4, [(k, DirectionSet::FULL, gaussian(i64::from(signature(dirs)), 0))]);
            cup(&s, &hodge_star(&s)) != expected
        })
        .count()
}

fn blade(dirs: DirectionSet) -> InhomogeneousForm<Q> {
    let mut w = InhomogeneousForm::zero();
    w.add(MultiIndex::ORIGIN, dirs, gaussian(1, 0));
    w
}

pub fn anticommutator_failures() -> usize {
    let mut bad = 0;
    for mu in 0..4 {
        for nu in 0..4 {
            let (a, b) = (blade(DirectionSet::single(mu)), blade(DirectionSet::single(nu)));
            let sum = clifford_mul(&a, &b).plus(&clifford_mul(&b, &a));
            let g = if mu == nu { 2 * i64::from(METRIC[mu]) } else { 0 };
            let expected = blade(DirectionSet::EMPTY).scaled(&gaussian(g, 0));
            bad += usize::from(sum != expected);
        }
    }
    bad
}

pub fn associativity_failures() -> usize {
    let mut bad = 0;
    for a in DirectionSet::all() {
        for b in DirectionSet::all() {
            for c in DirectionSet::all() {
                let (sab, ab) = blade_product(a, b);
                let (sabc, abc) = blade_product(ab, c);
                let (sbc, bc) = blade_product(b, c);
                let (sabc2, abc2) = blade_product(a, bc);
                bad += usize::from(abc != abc2 || sab * sabc != sbc * sabc2);
            }
        }
    }
    bad
}

/// Inputs of the plane-wave checks.
#[derive(Clone, Debug)]
pub struct WaveInputs {
    pub p: Momentum,
    pub m: MassParam,
    pub amplitudes: EvenAmplitudes,
}

impl WaveInputs {
    /// `a_i = α/(m − p₀)` over the `Φ₊` labels.
    pub fn plus_coefficients(&self) -> [Complex64; 4] {
        let d = self.m.value() - self.p.p0();
        WaveLabel::PLUS.map(|l| self.amplitudes.get(l) / d)
    }

    /// `b_i = α/(m + p₀)` over the `Φ₋` labels.
    pub fn minus_coefficients(&self) -> [Complex64; 4] {
        let s = self.m.value() + self.p.p0();
        WaveLabel::MINUS.map(|l| self.amplitudes.get(l) / s)
    }
}

fn perturbed_residual(terms: &[(WaveLabel, ConstantForm); 4], coeffs: &[Complex64; 4], p: Momentum, m: MassParam, win: &Window) -> f64 {
    let phi = family_form(terms, coeffs, p, win).normalized();
    joyce_residual(&phi, m, win).map(|r| r.interior_max).unwrap_or(f64::NAN)
}

pub fn planewave_checks(win: &Window, tol: f64, inputs: &WaveInputs) -> Vec<CheckResult> {
    let WaveInputs { p, m, amplitudes: a } = inputs.clone();
    let mut out = Vec::new();
    let gap = dispersion_gap(p, m);

    out.push(timed(|| {
        let worst = WaveLabel::ALL.iter().map(|&l| eigen_difference_check(l, p, win)).fold(0.0, f64::max);
        CheckResult::measured("planewave/eigen-differences", worst, tol)
    }));
    out.push(timed(|| {
        let phi = build_phi(&a, p, win).normalized();
        CheckResult::measured("planewave/eigen-relation", eigen_relation_residual(&phi, p, win), tol)
    }));
    out.push(timed(|| {
        let scale = 1.0 + p.0.iter().map(|x| x * x).sum::<f64>() + m.value() * m.value();
        CheckResult::measured("planewave/dispersion-gap", gap.abs(), DISPERSION_TOLERANCE * scale)
    }));
    out.push(timed(|| {
        let nullity = amplitude_nullity(p, m) as f64;
        let expected = if dispersion_gap(p, m).abs() < 1e-9 { 4.0 } else { 0.0 };
        CheckResult::measured("planewave/amplitude-nullity", (nullity - expected).abs(), 0.0)
            .with_detail(format!("nullity {nullity}"))
    }));

    let families: [(&str, FamilyTerms, [Complex64; 4]); 2] = [
        ("plus", family_plus_terms, inputs.plus_coefficients()),
        ("minus", family_minus_terms, inputs.minus_coefficients()),
    ];
    for (tag, terms_of, coeffs) in families {
        let build = |coeffs: &[Complex64; 4]| match tag {
            "plus" => family_plus(coeffs, p, m, win),
            _ => family_minus(coeffs, p, m, win),
        };
        let amplitudes = |coeffs: &[Complex64; 4]| match tag {
            "plus" => family_plus_amplitudes(coeffs, p, m),
            _ => family_minus_amplitudes(coeffs, p, m),
        };
        out.push(timed(|| match amplitudes(&coeffs) {
            Ok(amps) => {
                let worst = algebraic_system_residual(&amps, p, m).iter().map(|z| z.norm()).fold(0.0, f64::max);
                let scale = amps.to_array().iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
                CheckResult::measured(format!("planewave/family-{tag}-amplitude-system"), worst / scale, tol)
            }
            Err(e) => unavailable(format!("planewave/family-{tag}-amplitude-system"), tol, &e),
        }));
        out.push(timed(|| match build(&coeffs) {
            Ok(phi) => {
                let phi = phi.normalized();
                let r = joyce_residual(&phi, m, win).expect("family forms are even");
                CheckResult::measured(format!("planewave/family-{tag}-joyce-residual"), r.interior_max, tol)
            }
            Err(e) => unavailable(format!("planewave/family-{tag}-joyce-residual"), tol, &e),
        }));
        out.push(timed(|| {
            let name = format!("planewave/family-{tag}-perturbed");
            if let Err(e) = build(&coeffs) {
                return unavailable(name, PERTURBATION_FLOOR, &e);
            }
            let q = p.with_p0(p.p0() + PERTURBATION);
            CheckResult::at_least(name, perturbed_residual(&terms_of(q, m), &coeffs, q, m, win), PERTURBATION_FLOOR)
        }));
        out.push(timed(|| {
            let name = format!("planewave/family-{tag}-constraint");
            match build(&coeffs) {
                Ok(phi) => {
                    let (plus, minus) = split_even(&phi.normalized());
                    let mapped = if tag == "plus" {
                        constraint_minus_from_plus(&plus, p, m).map(|v| v.max_abs_diff(&minus))
                    } else {
                        constraint_plus_from_minus(&minus, p, m).map(|v| v.max_abs_diff(&plus))
                    };
                    match mapped {
                        Ok(v) => CheckResult::measured(name, v, tol),
                        Err(e) => unavailable(name, tol, &e),
                    }
                }
                Err(e) => unavailable(name, tol, &e),
            }
        }));
    }

    out.push(timed(|| {
        let name = "planewave/constraint-round-trip";
        let (plus, minus) = split_even(&build_phi(&a, p, win).normalized());
        let there_and_back = constraint_minus_from_plus(&plus, p, m)
            .and_then(|v| constraint_plus_from_minus(&v, p, m))
            .map(|v| v.max_abs_diff(&plus));
        let back_and_there = constraint_plus_from_minus(&minus, p, m)
            .and_then(|v| constraint_minus_from_plus(&v, p, m))
            .map(|v| v.max_abs_diff(&minus));
        match (there_and_back, back_and_there) {
            (Ok(x), Ok(y)) => CheckResult::measured(name, x.max(y), tol),
            (Err(e), _) | (_, Err(e)) => unavailable(name, tol, &e),
        }
    }));
    out.extend(equivalence_checks(win, tol, &inputs.minus_coefficients(), p, m));
    out
}

/// Matches a `(m + p₀)` family solution by a `(m − p₀)` one through the
/// coefficient map solved from constant amplitudes, then compares both the
/// amplitudes and the forms on the window.
pub fn equivalence_checks(win: &Window, tol: f64, b: &[Complex64; 4], p: Momentum, m: MassParam) -> Vec<CheckResult> {
    let amp_name = "planewave/family-equivalence-amplitudes";
    let form_name = "planewave/family-equivalence-forms";
    let a = match plus_coefficients_for(b, p, m) {
        Ok(a) => a,
        Err(e) => return vec![unavailable(amp_name, tol, &e), unavailable(form_name, tol, &e)],
    };
    let amp = timed(|| {
        let lhs = family_plus_amplitudes(&a, p, m).expect("checked above");
        let rhs = family_minus_amplitudes(b, p, m).expect("checked above");
        let scale = rhs.to_array().iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        CheckResult::measured(amp_name, lhs.max_abs_diff(&rhs) / scale, tol)
    });
    let form = timed(|| {
        let lhs = family_plus(&a, p, m, win).expect("checked above");
        let rhs = family_minus(b, p, m, win).expect("checked above");
        let scale = rhs.max_norm().max(f64::MIN_POSITIVE);
        CheckResult::measured(form_name, lhs.max_abs_diff(&rhs) / scale, tol)
    });
    vec![amp, form]
}

/// The `(m − p₀)` family on the negative branch and the `(m + p₀)` family on
/// the positive one, so neither denominator vanishes at rest.
pub fn scan_family(branch: Branch) -> (&'static str, FamilyTerms) {
    match branch {
        Branch::Plus => ("minus", family_minus_terms),
        Branch::Minus => ("plus", family_plus_terms),
    }
}

/// Interior Joyce residual of the branch's family with unit coefficients,
/// normalized to unit max-norm, and optionally the same with `p₀ + 0.1`.
pub fn scan_point(spatial: [f64; 3], branch: Branch, m: MassParam, win: &Window, perturb: bool) -> (Momentum, dkjoyce_core::Result<f64>, Option<f64>) {
    let p = Momentum::on_shell(spatial, m, branch);
    let (tag, terms_of) = scan_family(branch);
    let ones = [Complex64::new(1.0, 0.0); 4];
    let built = if tag == "plus" { family_plus(&ones, p, m, win) } else { family_minus(&ones, p, m, win) };
    let residual = built.map(|phi| joyce_residual(&phi.normalized(), m, win).expect("family forms are even").interior_max);
    let perturbed = perturb.then(|| {
        let q = p.with_p0(p.p0() + PERTURBATION);
        perturbed_residual(&terms_of(q, m), &ones, q, m, win)
    });
    (p, residual, perturbed)
}
