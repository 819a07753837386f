//! Acceptance gate. Prints one line per criterion and exits non-zero when any
//! of them fails.

use std::process::ExitCode;
use std::time::Instant;

use dkjoyce_cli::checks::{
    anticommutator_failures, associativity_failures, scan_point, star_relation_failures, PERTURBATION,
    PERTURBATION_FLOOR,
};
use dkjoyce_cli::config::{Format, SuiteConfig, SuiteName};
use dkjoyce_cli::{render, run_suite};
use dkjoyce_core::clifford::{ConstantForm, UnitFormKind};
use dkjoyce_core::complex4::{boundary, pair, Cell, DirectionSet, MultiIndex};
use dkjoyce_core::dirac_joyce::*;
use dkjoyce_core::forms::*;
use dkjoyce_core::planewave::*;
use dkjoyce_core::sample;
use dkjoyce_core::scalar::{gaussian, GaussianRational};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = GaussianRational;

struct Gate {
    failures: usize,
}

impl Gate {
    fn line(&mut self, id: &str, what: &str, ok: bool, measured: String, started: Instant) {
        if !ok {
            self.failures += 1;
        }
        let mark = if ok { "PASS" } else { "FAIL" };
        println!("{mark} {id:<4} {what:<68} {measured}  [{:.2} s]", started.elapsed().as_secs_f64());
    }
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn sign(even: bool) -> Q {
    gaussian(if even { 1 } else { -1 }, 0)
}

fn unit_spatial(g: &mut ChaCha8Rng) -> [f64; 3] {
    std::array::from_fn(|_| g.gen_range(-1.0..=1.0))
}

fn nilpotency(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(5);
    let mut g = rng(1);
    let mut bad = 0;
    let mut worst = 0.0f64;
    for r in 0..=4 {
        for _ in 0..200 {
            let w = sample::exact_form(&mut g, r, &win);
            bad += coboundary(&coboundary(&w)).len() + codifferential(&codifferential(&w)).len();
            let f = sample::form(&mut g, r, &win);
            worst = worst.max(coboundary(&coboundary(&f)).max_norm()).max(codifferential(&codifferential(&f)).max_norm());
        }
    }
    gate.line("1", "d∘d = 0 and δ∘δ = 0, 200 forms per degree on 5^4", bad == 0 && worst < 1e-12, format!("exact nonzero={bad} float max={worst:.2e}"), t);
}

fn duality(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(5);
    let mut g = rng(2);
    let mut bad = 0;
    for r in 0..4 {
        for _ in 0..100 {
            let c = sample::exact_chain(&mut g, r + 1, &win.region(), 32);
            let w = sample::exact_form_on(&mut g, r, &win.region().expanded(1));
            bad += usize::from(pair(&boundary(&c), &w) != pair(&c, &coboundary(&w)));
        }
    }
    gate.line("2a", "pairing <∂c, w> = <c, d w> on random chain/cochain pairs", bad == 0, format!("mismatches={bad}"), t);

    let t = Instant::now();
    let mut bad = 0;
    let mut worst = 0.0f64;
    for r in 0..4 {
        for _ in 0..100 {
            let u = sample::exact_form_on(&mut g, r, &win.interior());
            let v = sample::exact_form_on(&mut g, r + 1, &win.interior());
            let lhs = inner_product(&coboundary(&u), &v, &win).expect("interior support");
            let rhs = inner_product(&u, &codifferential(&v), &win).expect("interior support");
            bad += usize::from(lhs != rhs);
            let (fu, fv) = (sample::form_on(&mut g, r, &win.interior()), sample::form_on(&mut g, r + 1, &win.interior()));
            let lhs = inner_product(&coboundary(&fu), &fv, &win).expect("interior support");
            let rhs = inner_product(&fu, &codifferential(&fv), &win).expect("interior support");
            worst = worst.max((lhs - rhs).norm());
        }
    }
    gate.line("2b", "(d u, v) = (u, δ v) for all degree pairs, one-cell margin", bad == 0 && worst < 1e-12, format!("exact mismatches={bad} float max={worst:.2e}"), t);
}

fn leibniz(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(4);
    let mut g = rng(3);
    let mut bad = 0;
    for r in 0..=4 {
        for q in 0..=4 - r {
            for _ in 0..100 {
                let u = sample::exact_form(&mut g, r, &win);
                let v = sample::exact_form(&mut g, q, &win);
                let lhs = coboundary(&cup(&u, &v));
                let rhs = cup(&coboundary(&u), &v).plus(&cup(&u, &coboundary(&v)).scaled(&sign(r % 2 == 0)));
                bad += lhs.minus(&rhs).len();
            }
        }
    }
    gate.line("3", "Leibniz rule for all r+q <= 4, 100 pairs each, exact", bad == 0, format!("nonzero={bad}"), t);
}

fn star_algebra(gate: &mut Gate) {
    let t = Instant::now();
    let relation = star_relation_failures();
    let mut shift = 0;
    let mut inverse = 0;
    for k in [MultiIndex::new(0, 0, 0, 0), MultiIndex::new(3, -1, 2, -4)] {
        for dirs in DirectionSet::all() {
            let r = dirs.degree();
            let s = DiscreteForm::<Q>::basis(Cell::new(dirs, k));
            shift += usize::from(hodge_star(&hodge_star(&s)) != s.shifted_tau().scaled(&sign((r + 1) % 2 == 0)));
            inverse += usize::from(hodge_star_inverse(&hodge_star(&s)) != s);
        }
    }
    let bad = relation + shift + inverse;
    gate.line(
        "4",
        "star tables vs defining relation, ∗∗ shift, ∗⁻¹∘∗ = id",
        bad == 0,
        format!("failures relation={relation} shift={shift} inverse={inverse}"),
        t,
    );
}

fn codifferential_consistency(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(4);
    let mut g = rng(5);
    let (mut via_star, mut shifted) = (0, 0);
    for r in 0..=4 {
        for _ in 0..50 {
            let w = sample::exact_form(&mut g, r, &win);
            via_star += codifferential_via_star(&w).minus(&codifferential(&w)).len();
            shifted += star_d_star(&w).minus(&codifferential(&w).shifted_tau()).len();
        }
    }
    gate.line(
        "5",
        "explicit δ = signed ∗⁻¹d∗, and ∗d∗ = δ at the shifted site",
        via_star + shifted == 0,
        format!("nonzero via-star={via_star} star-d-star={shifted}"),
        t,
    );
}

fn clifford(gate: &mut Gate) {
    let t = Instant::now();
    let anti = anticommutator_failures();
    let assoc = associativity_failures();
    let x = ConstantForm::<Q>::unit(UnitFormKind::X);
    let mut unit = 0;
    for dirs in DirectionSet::all() {
        let mut b = InhomogeneousForm::<Q>::zero();
        b.add(MultiIndex::ORIGIN, dirs, gaussian(2, -1));
        unit += usize::from(x.left_mul(&b) != b) + usize::from(x.right_mul(&b) != b);
    }
    gate.line(
        "6",
        "anticommutators (16 pairs), associativity, two-sided unit x",
        anti + assoc + unit == 0,
        format!("failures anticommutator={anti} associativity={assoc} unit={unit}"),
        t,
    );
}

fn decomposition_check(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(4);
    let mut g = rng(7);
    let mut bad = 0;
    for _ in 0..100 {
        let w = sample::exact_inhomogeneous(&mut g, &win);
        bad += decomposition(&w).minus(&d_plus_delta(&w)).iter().count();
    }
    gate.line("7", "Σ e_μ-multiplied differences = d + δ, 100 forms on 4^4, exact", bad == 0, format!("nonzero={bad}"), t);
}

fn component_systems(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(4);
    let mut g = rng(8);
    let (mut dk, mut joyce) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let m = MassParam::new(g.gen_range(0.1..3.0)).expect("positive mass");
        let o = sample::inhomogeneous(&mut g, &win);
        dk = dk.max(dk_residual_form(&o, m).max_abs_diff(&dk_component_residual(&o, m)));
        let e = sample::even(&mut g, &win);
        let pipeline = joyce_residual_form(&e, &Complex64::new(m.value(), 0.0)).expect("even input");
        joyce = joyce.max(pipeline.max_abs_diff(&joyce_component_residual(&e, m).expect("even input")));
    }
    gate.line(
        "8",
        "16-row Dirac-Kähler and 8-row Joyce systems vs operator pipeline",
        dk < 1e-12 && joyce < 1e-12,
        format!("max dk={dk:.2e} joyce={joyce:.2e}"),
        t,
    );
}

fn eigen_relation(gate: &mut Gate) {
    let t = Instant::now();
    let win = Window::cube(8);
    let mut g = rng(9);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = sample::amplitudes(&mut g);
        let p = sample::momentum(&mut g, 2.0);
        let phi = build_phi(&a, p, &win).normalized();
        worst = worst.max(eigen_relation_residual(&phi, p, &win));
    }
    gate.line("9", "(d+δ)Φ = i(Σ p_μ e_μ)Φ, 50 draws with |p_μ| <= 2 on 8^4", worst < 1e-10, format!("max interior={worst:.2e} (unit max-norm Φ)"), t);
}

/// Draws on-shell momenta on both branches and returns every family that is
/// defined there, with random coefficients.
fn family_draws(g: &mut ChaCha8Rng, count: usize, m: MassParam) -> Vec<(&'static str, Momentum, [Complex64; 4])> {
    let mut out = Vec::new();
    for i in 0..count {
        let branch = Branch::BOTH[i % 2];
        let p = Momentum::on_shell(unit_spatial(g), m, branch);
        let coeffs: [Complex64; 4] = std::array::from_fn(|_| sample::complex(g));
        if (m.value() - p.p0()).abs() > DENOMINATOR_THRESHOLD {
            out.push(("plus", p, coeffs));
        }
        if (m.value() + p.p0()).abs() > DENOMINATOR_THRESHOLD {
            out.push(("minus", p, coeffs));
        }
    }
    out
}

fn build_family(tag: &str, coeffs: &[Complex64; 4], p: Momentum, m: MassParam, win: &Window) -> InhomogeneousForm {
    match tag {
        "plus" => family_plus(coeffs, p, m, win),
        _ => family_minus(coeffs, p, m, win),
    }
    .expect("dispersion holds and denominator is nonzero")
}

fn family_terms(tag: &str, p: Momentum, m: MassParam) -> [(WaveLabel, ConstantForm); 4] {
    match tag {
        "plus" => family_plus_terms(p, m),
        _ => family_minus_terms(p, m),
    }
}

fn plane_wave_solutions(gate: &mut Gate) {
    let win = Window::cube(6);
    let m = MassParam::new(1.0).expect("positive mass");
    let mut g = rng(10);
    let draws = family_draws(&mut g, 10, m);

    let t = Instant::now();
    let mut worst = 0.0f64;
    let mut rest = 0.0f64;
    for (tag, p, coeffs) in &draws {
        let phi = build_family(tag, coeffs, *p, m, &win).normalized();
        worst = worst.max(joyce_residual(&phi, m, &win).expect("even").interior_max);
    }
    for branch in Branch::BOTH {
        let (_, r, _) = scan_point([0.0; 3], branch, m, &win, false);
        rest = rest.max(r.expect("rest frame family"));
    }
    gate.line(
        "10a",
        "family solutions on shell: interior Joyce residual < 1e-10",
        worst < 1e-10 && rest < 1e-10,
        format!("max moving={worst:.2e} rest={rest:.2e}"),
        t,
    );

    let t = Instant::now();
    let mut weakest = f64::INFINITY;
    for (tag, p, coeffs) in &draws {
        let q = p.with_p0(p.p0() + PERTURBATION);
        let phi = family_form(&family_terms(tag, q, m), coeffs, q, &win).normalized();
        weakest = weakest.min(joyce_residual(&phi, m, &win).expect("even").interior_max);
    }
    gate.line(
        "10b",
        "p0 + 0.1 off shell: interior residual >= 1e-2 ‖Φ‖",
        weakest >= PERTURBATION_FLOOR,
        format!("min={weakest:.2e}"),
        t,
    );

    let t = Instant::now();
    let mut bad = 0;
    for i in 0..40 {
        let spatial = unit_spatial(&mut g);
        let p = if i % 2 == 0 {
            Momentum::on_shell(spatial, m, Branch::BOTH[i % 4 / 2])
        } else {
            sample::momentum(&mut g, 2.0)
        };
        let on_shell = dispersion_gap(p, m).abs() < DISPERSION_TOLERANCE;
        let nullity = amplitude_nullity(p, m);
        bad += usize::from((nullity == 4) != on_shell || (on_shell && nullity != 4));
    }
    gate.line("10c", "amplitude matrix nullity is 4 iff dispersion holds", bad == 0, format!("mismatches={bad} of 40"), t);
}

fn constraint_equivalence(gate: &mut Gate) {
    let win = Window::cube(6);
    let m = MassParam::new(1.0).expect("positive mass");
    let mut g = rng(11);

    let t = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..20 {
        let p = Momentum::on_shell(unit_spatial(&mut g), m, Branch::BOTH[i % 2]);
        let (plus, minus) = split_even(&sample::even(&mut g, &win));
        if (m.value() - p.p0()).abs() > DENOMINATOR_THRESHOLD {
            let back = constraint_plus_from_minus(&constraint_minus_from_plus(&plus, p, m).unwrap(), p, m).unwrap();
            worst = worst.max(back.max_abs_diff(&plus));
        }
        if (m.value() + p.p0()).abs() > DENOMINATOR_THRESHOLD {
            let back = constraint_minus_from_plus(&constraint_plus_from_minus(&minus, p, m).unwrap(), p, m).unwrap();
            worst = worst.max(back.max_abs_diff(&minus));
        }
    }
    gate.line("11a", "constraint maps between halves are mutually inverse on shell", worst < 1e-10, format!("max={worst:.2e}"), t);

    let mut amp = 0.0f64;
    let mut form = 0.0f64;
    let t = Instant::now();
    for i in 0..20 {
        let p = Momentum::on_shell(unit_spatial(&mut g), m, Branch::BOTH[i % 2]);
        if (m.value() - p.p0()).abs() <= DENOMINATOR_THRESHOLD || (m.value() + p.p0()).abs() <= DENOMINATOR_THRESHOLD {
            continue;
        }
        let b: [Complex64; 4] = std::array::from_fn(|_| sample::complex(&mut g));
        let a = plus_coefficients_for(&b, p, m).expect("solvable on shell");
        let (lhs, rhs) = (family_plus_amplitudes(&a, p, m).unwrap(), family_minus_amplitudes(&b, p, m).unwrap());
        let scale = rhs.to_array().iter().map(|z| z.norm()).fold(0.0, f64::max);
        amp = amp.max(lhs.max_abs_diff(&rhs) / scale);
        let (lhs, rhs) = (family_plus(&a, p, m, &win).unwrap(), family_minus(&b, p, m, &win).unwrap());
        form = form.max(lhs.max_abs_diff(&rhs) / rhs.max_norm());
    }
    gate.line("11b", "each (m+p0) family solution matched by a (m-p0) one: amplitudes", amp < 1e-10, format!("max relative={amp:.2e}"), t);
    gate.line("11c", "each (m+p0) family solution matched by a (m-p0) one: forms on 6^4", form < 1e-10, format!("max relative={form:.2e}"), t);
}

fn cli(gate: &mut Gate) {
    let t = Instant::now();
    let mut cfg = SuiteConfig::new(SuiteName::All, [4, 4, 4, 4], 42).expect("valid config");
    cfg.format = Format::Json;
    let first = render(&run_suite(&cfg), Format::Json).expect("json");
    let second = render(&run_suite(&cfg), Format::Json).expect("json");
    gate.line("12a", "identical seeds give byte-identical JSON reports", first == second, format!("{} bytes", first.len()), t);

    let t = Instant::now();
    let mut cfg = SuiteConfig::new(SuiteName::DispersionScan, [6, 6, 6, 6], 42).expect("valid config");
    cfg.grid = vec![0.0, 0.5];
    let report = run_suite(&cfg);
    let rows = report.scan.len();
    let worst = report.scan.iter().map(|r| r.residual_interior_max).fold(0.0, f64::max);
    let under = report.scan.iter().filter(|r| r.residual_interior_max < 1e-10).count();
    let elapsed = t.elapsed().as_secs_f64();
    gate.line(
        "12b",
        "dispersion scan over {0,0.5}^3, m=1, both branches: residual < 1e-10",
        rows == 16 && under == rows && elapsed < 60.0,
        format!("{under}/{rows} rows below, max={worst:.2e}, {elapsed:.1} s"),
        t,
    );
}

fn main() -> ExitCode {
    let mut gate = Gate { failures: 0 };
    nilpotency(&mut gate);
    duality(&mut gate);
    leibniz(&mut gate);
    star_algebra(&mut gate);
    codifferential_consistency(&mut gate);
    clifford(&mut gate);
    decomposition_check(&mut gate);
    component_systems(&mut gate);
    eigen_relation(&mut gate);
    plane_wave_solutions(&mut gate);
    constraint_equivalence(&mut gate);
    cli(&mut gate);
    println!("\n{} criterion line(s) failed", gate.failures);
    if gate.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
