//! Runtime property suites.
//!
//! Each check mirrors one acceptance property at full scale, written as
//! a plain function so both the integration tests and the command-line
//! `selftest` run exactly the same code. Checks return `Ok(summary)` or
//! `Err(what failed)`; nothing here is sampled lazily, so a fixed seed
//! gives a fixed verdict.

use num_bigint::BigInt;
use rand::Rng;

use crate::adjoint::{adjoint, assemble_dh, diff_step2, diff_step3, diff_step4, diff_step5};
use crate::counters;
use crate::division_free::{
    adjoint_division_free, adjoint_division_free_scheduled, det_division_free, EvalSchedule,
};
use crate::error::Error;
use crate::gradcheck;
use crate::hankel::{minpoly_from_sequence, ScalarSequence};
use crate::krylov::{det_forward, det_forward_randomized, determinant, PROJECTION_RETRIES};
use crate::linalg::{
    adjugate_oracle, companion_matrix, det_cofactor, det_gauss, outer, ColVector, Matrix, RowVector,
};
use crate::polymatrix::{invert_series_matrix, newton_inverse_oracle};
use crate::rings::{DualRing, IntegerRing, PrimeField, Ring, SeriesRing};
use crate::sample;

pub type CheckResult = std::result::Result<String, String>;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs every suite at full scale. The CLI prints one line per entry
/// and exits nonzero if any failed.
pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    let checks: Vec<(&'static str, CheckResult)> = vec![
        ("ring and module properties", module_properties(seed)),
        (
            "adjugate correctness, field mode",
            adjugate_field_mode(seed, 200, 8),
        ),
        ("gradient exactness", gradient_exactness(seed, 100)),
        ("division-free pipeline", division_free_exactness(seed, 100)),
        (
            "determinant agreement and sign",
            determinant_agreement(seed, 200),
        ),
        ("degenerate handling", degenerate_handling(seed)),
        ("cost shape of step-2 reversal", cost_shape(&[8, 16], seed)),
        ("partial evaluation safety", partial_eval_safety(seed, 100)),
        (
            "polynomial matrix inversion",
            polymatrix_agreement(seed, 50),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, result)| match result {
            Ok(detail) => CheckOutcome {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CheckOutcome {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

fn fail(msg: impl Into<String>) -> CheckResult {
    Err(msg.into())
}

/// Field-mode adjugates: a * adj = adj * a = det * I exactly on random
/// GF(10007) inputs with n cycling through 2..=30, and equality with
/// the signed-minor oracle up to `oracle_max_n`.
pub fn adjugate_field_mode(seed: u64, samples: usize, oracle_max_n: usize) -> CheckResult {
    let field = PrimeField::new(10007);
    let mut rng = sample::seeded_rng(seed ^ 0xadc1);
    let mut oracle_checked = 0;
    for trial in 0..samples {
        let n = 2 + trial % 29;
        let a = sample::gf_matrix(&field, n, &mut rng);
        let result = match adjoint(&a, seed.wrapping_add(trial as u64)) {
            Ok(r) => r,
            Err(e) => return fail(format!("sample {trial} (n={n}) failed: {e}")),
        };
        let det_i = Matrix::identity(field, n).scale(&result.det);
        if a.mul(&result.adjugate) != det_i || result.adjugate.mul(&a) != det_i {
            return fail(format!(
                "adjugate identity broken at sample {trial} (n={n})"
            ));
        }
        if n <= oracle_max_n {
            if result.adjugate != adjugate_oracle(&a) {
                return fail(format!("oracle mismatch at sample {trial} (n={n})"));
            }
            oracle_checked += 1;
        }
    }
    Ok(format!(
        "{samples} samples, n in 2..=30, {oracle_checked} checked against the minor oracle"
    ))
}

/// Every entry of the reverse-pass gradient equals the dual-number
/// derivative of the determinant, and each intermediate stage matches
/// its own truncated dual oracle. Zero tolerance.
pub fn gradient_exactness(seed: u64, samples: usize) -> CheckResult {
    let field = PrimeField::new(10007);
    let mut rng = sample::seeded_rng(seed ^ 0x94ad);
    for trial in 0..samples {
        let n = 1 + trial % 6;
        let a = loop {
            let a = sample::gf_matrix(&field, n, &mut rng);
            if det_gauss(&a).unwrap() != 0 {
                break a;
            }
        };
        let trace = match det_forward_randomized(&a, seed.wrapping_add(trial as u64)) {
            Ok(t) => t,
            Err(e) => return fail(format!("forward pass failed at sample {trial}: {e}")),
        };
        let dh = match diff_step5(&trace) {
            Ok(dh) => dh,
            Err(e) => return fail(format!("step-5 reversal failed at sample {trial}: {e}")),
        };
        for (k, dhk) in dh.iter().enumerate() {
            if *dhk != gradcheck::delta_eps_from_sequence(&trace, k) {
                return fail(format!("dh[{k}] mismatch at sample {trial} (n={n})"));
            }
        }
        let grid = assemble_dh(&trace, &dh);
        let (baby_grads, giant_grads) = diff_step4(&trace, &grid);
        for (i, g) in baby_grads.iter().enumerate() {
            for c in 0..n {
                if *g.at(c) != gradcheck::delta_eps_from_baby(&trace, i, c) {
                    return fail(format!(
                        "baby gradient ({i},{c}) mismatch at sample {trial}"
                    ));
                }
            }
        }
        for (j, g) in giant_grads.iter().enumerate() {
            for c in 0..n {
                if *g.at(c) != gradcheck::delta_eps_from_giant(&trace, j, c) {
                    return fail(format!(
                        "giant gradient ({j},{c}) mismatch at sample {trial}"
                    ));
                }
            }
        }
        let power_grad = diff_step3(&trace, &giant_grads);
        for i in 0..n {
            for j in 0..n {
                if power_grad[(i, j)] != gradcheck::delta_eps_from_power_entry(&trace, (i, j)) {
                    return fail(format!(
                        "power gradient ({i},{j}) mismatch at sample {trial}"
                    ));
                }
            }
        }
        let input_grad = diff_step2(&trace, power_grad);
        for i in 0..n {
            for j in 0..n {
                if input_grad[(i, j)] != gradcheck::delta_eps_through_power(&trace, (i, j)) {
                    return fail(format!(
                        "step-2 gradient ({i},{j}) mismatch at sample {trial}"
                    ));
                }
            }
        }
        let da = crate::adjoint::diff_step1(&trace, &baby_grads, input_grad);
        for i in 0..n {
            for j in 0..n {
                if da[(i, j)] != gradcheck::delta_eps_full(&trace, (i, j)) {
                    return fail(format!(
                        "full gradient ({i},{j}) mismatch at sample {trial}"
                    ));
                }
            }
        }
    }
    Ok(format!("{samples} instances, n in 1..=6, all stages exact"))
}

/// The instance list shared by the division-free and partial-evaluation
/// checks: seeded random integer matrices with entries in [-9, 9] plus
/// the structured fixtures at n = 4 and n = 10.
pub fn integer_fixtures(seed: u64, samples: usize) -> Vec<Matrix<IntegerRing>> {
    let z = IntegerRing;
    let mut rng = sample::seeded_rng(seed ^ 0xd1f);
    let mut out = Vec::with_capacity(samples + 10);
    for trial in 0..samples {
        let n = 1 + trial % 10;
        out.push(sample::int_matrix(n, -9, 9, &mut rng));
    }
    for n in [4usize, 10] {
        out.push(Matrix::identity(z, n));
        out.push(Matrix::zeros(z, n, n));
        // nilpotent shift
        let mut shift = Matrix::zeros(z, n, n);
        for i in 0..n - 1 {
            shift[(i, i + 1)] = z.one();
        }
        out.push(shift);
        // rank one
        let c = ColVector::new(z, (1..=n as i64).map(BigInt::from).collect());
        let r = RowVector::new(z, (1..=n as i64).map(|x| BigInt::from(2 * x - 1)).collect());
        out.push(outer(&c, &r));
        // rank n-2
        let mut low = Matrix::zeros(z, n, n);
        for i in 0..n - 2 {
            low[(i, i)] = z.from_i64(i as i64 + 1);
        }
        out.push(low);
    }
    out
}

/// Division-free determinant and adjugate against the cofactor oracle
/// on every fixture, with the division-violation counter pinned at 0.
pub fn division_free_exactness(seed: u64, samples: usize) -> CheckResult {
    let z = IntegerRing;
    let before = counters::snapshot();
    for (idx, a) in integer_fixtures(seed, samples).iter().enumerate() {
        let n = a.rows();
        let det_direct = det_division_free(a);
        let det_oracle = det_cofactor(a);
        if det_direct != det_oracle {
            return fail(format!("determinant mismatch at fixture {idx} (n={n})"));
        }
        let result = adjoint_division_free(a);
        if result.det != det_oracle {
            return fail(format!("adjoint det mismatch at fixture {idx} (n={n})"));
        }
        if result.adjugate != adjugate_oracle(a) {
            return fail(format!("adjugate mismatch at fixture {idx} (n={n})"));
        }
        let det_i = Matrix::identity(z, n).scale(&result.det);
        if a.mul(&result.adjugate) != det_i || result.adjugate.mul(a) != det_i {
            return fail(format!("adjugate identity broken at fixture {idx} (n={n})"));
        }
        if result.counters.division_violations != 0 {
            return fail(format!("division violation at fixture {idx} (n={n})"));
        }
    }
    let violations = before.delta().division_violations;
    if violations != 0 {
        return fail(format!("{violations} division violations across the run"));
    }
    Ok(format!(
        "{} fixtures (including identity, zero, shift, rank-1, rank n-2), zero divisions",
        samples + 10
    ))
}

/// determinant() against elimination, the sign of the minimal
/// polynomial constant term, and the Hankel ratio identity
/// det(H_shifted) = det(a) * det(H) on every successful trace.
pub fn determinant_agreement(seed: u64, samples: usize) -> CheckResult {
    let field = PrimeField::new(10007);
    let mut rng = sample::seeded_rng(seed ^ 0xde7);
    for trial in 0..samples {
        let n = 2 + trial % 29;
        let a = if trial % 5 == 0 {
            // singular but nonderogatory: companion with zero constant term
            let mut tail: Vec<u64> = (0..n).map(|_| sample::gf(&field, &mut rng)).collect();
            tail[0] = 0;
            companion_matrix(&field, &tail)
        } else {
            sample::gf_matrix(&field, n, &mut rng)
        };
        let run_seed = seed.wrapping_add(1000 + trial as u64);
        let trace = match det_forward_randomized(&a, run_seed) {
            Ok(t) => t,
            Err(e) => {
                return fail(format!(
                    "forward pass failed at sample {trial} (n={n}): {e}"
                ))
            }
        };
        let expected = det_gauss(&a).unwrap();
        if trace.det != expected {
            return fail(format!("determinant mismatch at sample {trial} (n={n})"));
        }
        match determinant(&a, run_seed) {
            Ok(d) if d == expected => {}
            other => {
                return fail(format!(
                    "determinant() disagreed at sample {trial}: {other:?}"
                ))
            }
        }
        let sign = field.from_i64(if n % 2 == 0 { 1 } else { -1 });
        if field.mul(&sign, trace.min_poly.constant_term()) != trace.det {
            return fail(format!("sign identity broken at sample {trial} (n={n})"));
        }
        if trace.det_h_shifted != field.mul(&expected, &trace.det_h) {
            return fail(format!("ratio identity broken at sample {trial} (n={n})"));
        }
    }
    Ok(format!(
        "{samples} samples, n in 2..=30, one in five singular"
    ))
}

/// Identity matrices are derogatory: field mode must fail within the
/// retry budget while division-free mode returns the exact adjugate.
pub fn degenerate_handling(seed: u64) -> CheckResult {
    let field = PrimeField::new(10007);
    let z = IntegerRing;
    let mut rng = sample::seeded_rng(seed ^ 0xdead);
    for n in 2..=8 {
        let id_gf = Matrix::identity(field, n);
        let u = sample::gf_row(&field, n, &mut rng);
        let v = sample::gf_col(&field, n, &mut rng);
        match det_forward(&id_gf, &u, &v) {
            Err(Error::SingularHankel) => {}
            other => {
                return fail(format!(
                    "identity n={n}: expected SingularHankel, got {other:?}"
                ))
            }
        }
        match adjoint(&id_gf, seed.wrapping_add(n as u64)) {
            Err(Error::DegenerateMinimalPolynomial { retries })
                if retries == PROJECTION_RETRIES => {}
            other => {
                return fail(format!(
                    "identity n={n}: expected retry exhaustion, got {other:?}"
                ))
            }
        }
        let id_z = Matrix::identity(z, n);
        let result = adjoint_division_free(&id_z);
        if result.adjugate != id_z || result.det != z.one() {
            return fail(format!(
                "division-free adjugate of identity broken at n={n}"
            ));
        }
        let gf_result = adjoint_division_free(&id_gf);
        if gf_result.adjugate != id_gf || gf_result.det != 1 {
            return fail(format!(
                "GF division-free adjugate of identity broken at n={n}"
            ));
        }
    }
    Ok("identity handled as specified for n in 2..=8".to_string())
}

/// Multiplication count of the step-2 reversal stays within 4x of
/// n^3 times the tape length.
pub fn cost_shape(sizes: &[usize], seed: u64) -> CheckResult {
    let field = PrimeField::new(10007);
    let mut rng = sample::seeded_rng(seed ^ 0xc057);
    let mut details = Vec::new();
    for &n in sizes {
        let a = sample::gf_matrix(&field, n, &mut rng);
        let trace = match det_forward_randomized(&a, seed.wrapping_add(n as u64)) {
            Ok(t) => t,
            Err(e) => return fail(format!("forward pass failed at n={n}: {e}")),
        };
        let dh = match diff_step5(&trace) {
            Ok(dh) => dh,
            Err(e) => return fail(format!("step-5 reversal failed at n={n}: {e}")),
        };
        let grid = assemble_dh(&trace, &dh);
        let (_, giant_grads) = diff_step4(&trace, &grid);
        let power_grad = diff_step3(&trace, &giant_grads);
        let tape_len = trace.tape.len() as u64;
        if tape_len == 0 {
            return fail(format!("empty power tape at n={n}"));
        }
        let mark = counters::snapshot();
        let _ = diff_step2(&trace, power_grad);
        let muls = mark.delta().ring_muls;
        let budget = 4 * (n as u64).pow(3) * tape_len;
        if muls > budget {
            return fail(format!(
                "step-2 reversal used {muls} multiplications at n={n}, budget {budget}"
            ));
        }
        details.push(format!(
            "n={n}: {muls} muls over {tape_len} records ({:.2}x n^3 per record)",
            muls as f64 / (tape_len as f64 * (n as f64).powi(3))
        ));
    }
    Ok(details.join("; "))
}

/// The conservative collapse schedule must not change a single bit of
/// the division-free outputs, and an over-aggressive schedule must be
/// caught as a watermark violation.
pub fn partial_eval_safety(seed: u64, samples: usize) -> CheckResult {
    for (idx, a) in integer_fixtures(seed, samples).iter().enumerate() {
        let n = a.rows();
        let plain = adjoint_division_free(a);
        let scheduled = match adjoint_division_free_scheduled(a, &EvalSchedule::conservative(n)) {
            Ok(r) => r,
            Err(e) => {
                return fail(format!(
                    "conservative schedule failed at fixture {idx}: {e}"
                ))
            }
        };
        if plain.adjugate != scheduled.adjugate || plain.det != scheduled.det {
            return fail(format!("scheduled output differs at fixture {idx} (n={n})"));
        }
    }
    let probe = sample::int_matrix(3, -9, 9, &mut sample::seeded_rng(seed ^ 0x9e1));
    let aggressive = EvalSchedule {
        sequence_gradients: 1,
        ..EvalSchedule::none()
    };
    match adjoint_division_free_scheduled(&probe, &aggressive) {
        Err(Error::WatermarkViolation) => {}
        other => return fail(format!("over-aggressive schedule not detected: {other:?}")),
    }
    Ok(format!(
        "{} fixtures bit-identical under the conservative schedule",
        samples + 10
    ))
}

/// The adjugate route for series-matrix inversion agrees exactly with
/// the Newton oracle and multiplies back to the identity.
pub fn polymatrix_agreement(seed: u64, samples: usize) -> CheckResult {
    let field = PrimeField::new(7);
    let mut rng = sample::seeded_rng(seed ^ 0x901f);
    for trial in 0..samples {
        let n = 1 + trial % 4;
        let trunc = 2 + trial % 11;
        let deg = (trial % 4).min(3).min(trunc);
        let series = SeriesRing::new(field, trunc);
        let a = loop {
            let a = sample::gf_series_matrix_deg(&series, n, deg, &mut rng);
            let at_zero = a.map(field, |s| *series.coeff(s, 0));
            if det_gauss(&at_zero).unwrap() != 0 {
                break a;
            }
        };
        let got = match invert_series_matrix(&a) {
            Ok(m) => m,
            Err(e) => return fail(format!("inversion failed at sample {trial}: {e}")),
        };
        let oracle = match newton_inverse_oracle(&a) {
            Ok(m) => m,
            Err(e) => return fail(format!("oracle failed at sample {trial}: {e}")),
        };
        if got != oracle {
            return fail(format!(
                "inverse mismatch at sample {trial} (n={n}, N={trunc})"
            ));
        }
        if a.mul(&got) != Matrix::identity(series.clone(), n) {
            return fail(format!("inverse does not multiply back at sample {trial}"));
        }
    }
    Ok(format!("{samples} instances, n <= 4, deg <= 3, N <= 12"))
}

/// Ring axioms on sampled triples, the series reciprocal and partial
/// evaluation contracts at volume, dual-number derivatives against
/// symbolic ones, the companion-matrix minimal polynomial property,
/// and forward-trace replay.
pub fn module_properties(seed: u64) -> CheckResult {
    let field = PrimeField::new(10007);
    let series = SeriesRing::new(field, 6);
    let dual = DualRing::new(field);
    let z = IntegerRing;
    let mut rng = sample::seeded_rng(seed ^ 0xa71);

    // ring axioms on random triples in all four domains
    for _ in 0..200 {
        let triple_gf: Vec<u64> = (0..3).map(|_| sample::gf(&field, &mut rng)).collect();
        if !axioms_hold(&field, &triple_gf) {
            return fail("ring axioms broken over GF(p)");
        }
        let triple_z: Vec<BigInt> = (0..3)
            .map(|_| BigInt::from(rng.random_range(-99i64..=99)))
            .collect();
        if !axioms_hold(&z, &triple_z) {
            return fail("ring axioms broken over the integers");
        }
        let triple_series: Vec<_> = (0..3)
            .map(|_| series.from_coeffs((0..=6).map(|_| sample::gf(&field, &mut rng)).collect()))
            .collect();
        if !axioms_hold(&series, &triple_series) {
            return fail("ring axioms broken over truncated series");
        }
        let triple_dual: Vec<_> = (0..3)
            .map(|_| crate::rings::Dual {
                re: sample::gf(&field, &mut rng),
                eps: sample::gf(&field, &mut rng),
            })
            .collect();
        if !axioms_hold(&dual, &triple_dual) {
            return fail("ring axioms broken over dual numbers");
        }
    }

    // 1000 reciprocals of unit-constant-term series
    for _ in 0..1000 {
        let mut coeffs: Vec<u64> = (0..=6).map(|_| sample::gf(&field, &mut rng)).collect();
        if coeffs[0] == 0 {
            coeffs[0] = 1 + rng.random_range(0..field.modulus() - 1);
        }
        let a = series.from_coeffs(coeffs);
        let r = match series.reciprocal(&a) {
            Ok(r) => r,
            Err(e) => return fail(format!("reciprocal failed on a unit series: {e}")),
        };
        if series.mul(&a, &r) != series.one() {
            return fail("series reciprocal does not multiply back to one");
        }
    }

    // 1000 partial evaluations preserve the value at z = 1
    for _ in 0..1000 {
        let a = series.from_coeffs((0..=6).map(|_| sample::gf(&field, &mut rng)).collect());
        let m = rng.random_range(0..=6);
        let collapsed = series.partial_evaluate(&a, m).unwrap();
        if series.eval_at_one(&collapsed) != series.eval_at_one(&a) {
            return fail("partial evaluation changed the value at z = 1");
        }
        for k in 0..m {
            if *series.coeff(&collapsed, k) != 0 {
                return fail("partial evaluation left data below the watermark");
            }
        }
    }

    // dual derivative of g(x) = 3x^4 + 2x^2 + 5 and of 1/(x^2+1)
    for _ in 0..50 {
        let x = sample::gf(&field, &mut rng);
        let v = dual.perturbed(x);
        let x2 = dual.mul(&v, &v);
        let x4 = dual.mul(&x2, &x2);
        let g = dual.add(
            &dual.add(
                &dual.mul(&dual.from_i64(3), &x4),
                &dual.mul(&dual.from_i64(2), &x2),
            ),
            &dual.from_i64(5),
        );
        let symbolic = field.add(
            &field.mul(&field.from_i64(12), &field.pow(x, 3)),
            &field.mul(&field.from_i64(4), &x),
        );
        if g.eps != symbolic {
            return fail("dual derivative of the quartic disagrees with the symbolic one");
        }
        let den = dual.add(&x2, &dual.one());
        let h = dual.inv(&den).unwrap();
        let den_re = field.add(&field.mul(&x, &x), &1);
        let symbolic = field.mul(
            &field.neg(&field.mul(&2, &x)),
            &field.inv(&field.mul(&den_re, &den_re)).unwrap(),
        );
        if h.eps != symbolic {
            return fail("dual derivative through inversion disagrees with the symbolic one");
        }
    }

    // companion matrices recover their polynomial as the sequence minimal polynomial
    for _ in 0..30 {
        let n = 1 + rng.random_range(0..12);
        let mut tail: Vec<u64> = (0..n).map(|_| sample::gf(&field, &mut rng)).collect();
        if tail[0] == 0 {
            tail[0] = 1;
        }
        let a = companion_matrix(&field, &tail);
        let u = RowVector::basis(field, n, 0);
        let v = ColVector::basis(field, n, 0);
        let mut terms = Vec::with_capacity(2 * n);
        let mut w = v.clone();
        for _ in 0..2 * n {
            terms.push(u.dot(&w));
            w = a.mul_col(&w);
        }
        let mp = match minpoly_from_sequence(&ScalarSequence::new(field, terms)) {
            Ok(mp) => mp,
            Err(e) => return fail(format!("companion minimal polynomial failed: {e}")),
        };
        let mut expected = tail;
        expected.push(1);
        if mp.coeffs() != expected.as_slice() {
            return fail("companion minimal polynomial mismatch");
        }
    }

    // forward traces replay bit-exactly
    for _ in 0..5 {
        let n = 2 + rng.random_range(0..10);
        let a = sample::gf_matrix(&field, n, &mut rng);
        let u = sample::gf_row(&field, n, &mut rng);
        let v = sample::gf_col(&field, n, &mut rng);
        let trace = match det_forward(&a, &u, &v) {
            Ok(t) => t,
            Err(Error::SingularHankel) => continue,
            Err(e) => return fail(format!("forward pass failed: {e}")),
        };
        let mut w = trace.v.clone();
        for i in 0..trace.params.baby_steps {
            if trace.baby_vectors[i] != w {
                return fail("baby vector replay mismatch");
            }
            w = trace.a.mul_col(&w);
        }
        for rec in &trace.tape.records {
            let lhs = trace.tape.operand(rec.lhs, &trace.a);
            let rhs = trace.tape.operand(rec.rhs, &trace.a);
            if lhs.mul(rhs) != rec.value {
                return fail("power tape replay mismatch");
            }
        }
        let mut g = trace.u.clone();
        for j in 0..trace.params.giant_steps {
            if trace.giant_vectors[j] != g {
                return fail("giant vector replay mismatch");
            }
            g = g.mul_mat(&trace.power);
        }
    }

    Ok(
        "axioms, reciprocal and collapse contracts, dual derivatives, \
        companion sequences, trace replay"
            .to_string(),
    )
}

fn axioms_hold<R: Ring>(ring: &R, t: &[R::Elem]) -> bool {
    let (a, b, c) = (&t[0], &t[1], &t[2]);
    ring.add(&ring.add(a, b), c) == ring.add(a, &ring.add(b, c))
        && ring.mul(&ring.mul(a, b), c) == ring.mul(a, &ring.mul(b, c))
        && ring.mul(a, &ring.add(b, c)) == ring.add(&ring.mul(a, b), &ring.mul(a, c))
        && ring.mul(a, b) == ring.mul(b, a)
        && ring.add(a, b) == ring.add(b, a)
        && ring.add(a, &ring.neg(a)) == ring.zero()
        && ring.mul(a, &ring.one()) == a.clone()
}
