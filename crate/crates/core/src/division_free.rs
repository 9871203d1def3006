//! Determinant and adjugate over an arbitrary commutative ring, without
//! divisions.
//!
//! The input is embedded into the series matrix `Z(z) = C + z*(A - C)`
//! over R\[z\]/(z^{n+1}), where C is the n-cycle permutation matrix and
//! the projections are first basis vectors. With that choice every
//! Hankel matrix met by the pipeline is a permutation matrix at z = 0,
//! so all eliminations pivot on unit-constant-term series and all
//! divisions are Newton reciprocals of units, no matter how degenerate
//! `A` is. The determinant of Z is a polynomial of degree at most n, so
//! nothing is lost to truncation, and evaluating at z = 1 (summing
//! coefficients) lands back on `A` itself: the summed determinant and
//! transposed, summed gradient are exactly det(A) and the adjugate.
//!
//! The division-violation counter is asserted to stay at zero by the
//! test suites; any would-be division by a non-unit series would tick it.

use crate::adjoint::{
    assemble_dh, diff_step1, diff_step2, diff_step3, diff_step4, diff_step5, AdjointResult,
    PipelineCounters,
};
use crate::counters;
use crate::error::{Error, Result};
use crate::krylov::{det_forward, DetTrace};
use crate::linalg::{ColVector, Matrix, MatrixInverse, RowVector};
use crate::rings::{Ring, Series, SeriesRing};

/// Matrix of truncated series, the carrier of the division-free passes.
pub type SeriesMatrix<R> = Matrix<SeriesRing<R>>;

/// The fixed embedding data: the n-cycle permutation and first-basis
/// projections. Chosen so that the projected sequence at z = 0 is
/// h_k = 1 exactly when n divides k, making both Hankel matrices
/// permutation matrices at z = 0 regardless of the input.
#[derive(Clone, PartialEq, Debug)]
pub struct ProjectionChoice<R: Ring> {
    /// The n-cycle: cycle * e_i = e_{i+1}, wrapping at n.
    pub cycle: Matrix<R>,
    /// e_1 as a row.
    pub row: RowVector<R>,
    /// e_1 as a column.
    pub col: ColVector<R>,
}

pub fn choose_projection<R: Ring>(ring: &R, n: usize) -> ProjectionChoice<R> {
    assert!(n >= 1);
    let mut cycle = Matrix::zeros(ring.clone(), n, n);
    for i in 0..n {
        cycle[((i + 1) % n, i)] = ring.one();
    }
    ProjectionChoice {
        cycle,
        row: RowVector::basis(ring.clone(), n, 0),
        col: ColVector::basis(ring.clone(), n, 0),
    }
}

/// `Z(z) = C + z*(A - C)` with truncation order n: constant term C,
/// linear term A - C. Z(0) = C and Z(1) = A entrywise.
pub fn build_z<R: Ring>(a: &Matrix<R>, c: &Matrix<R>) -> SeriesMatrix<R> {
    assert!(a.is_square());
    assert_eq!((a.rows(), a.cols()), (c.rows(), c.cols()));
    let ring = a.ring().clone();
    let n = a.rows();
    let series = SeriesRing::new(ring.clone(), n);
    let mut z = Matrix::zeros(series.clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            let constant = c[(i, j)].clone();
            let slope = ring.sub(&a[(i, j)], &c[(i, j)]);
            z[(i, j)] = series.from_coeffs(vec![constant, slope]);
        }
    }
    z
}

/// Runs the forward pass on the embedded series matrix with the fixed
/// projection. Cannot fail: the Hankel system is unit-invertible at
/// z = 0 by construction.
pub(crate) fn forward_trace<R: Ring>(a: &Matrix<R>) -> DetTrace<SeriesRing<R>> {
    assert!(a.is_square());
    let n = a.rows();
    let ring = a.ring().clone();
    let proj = choose_projection(&ring, n);
    let z = build_z(a, &proj.cycle);
    let series = z.ring().clone();
    let u = proj.row.map(series.clone(), |c| series.constant(c.clone()));
    let v = proj.col.map(series.clone(), |c| series.constant(c.clone()));
    det_forward(&z, &u, &v).expect("cyclic projection keeps the Hankel system unit-invertible")
}

/// Determinant of `a` over its ring using only additions,
/// multiplications, and reciprocals of unit-constant-term series.
/// Works for every square input, including singular and derogatory
/// ones.
pub fn det_division_free<R: Ring>(a: &Matrix<R>) -> R::Elem {
    let trace = forward_trace(a);
    let series = trace.a.ring();
    series.eval_at_one(&trace.det)
}

/// Per-stage collapse watermarks for the reverse pass over series.
/// Each watermark folds the low coefficients of the series produced by
/// that stage into a single slot (see
/// [`SeriesRing::partial_evaluate`]); 0 leaves them untouched.
///
/// Collapsing is only sound for series whose remaining use is the final
/// evaluation at z = 1. Collapsed slots are poisoned: a downstream
/// coefficient-level read surfaces as `WatermarkViolation`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct EvalSchedule {
    /// Collapse the 2n sequence gradients after the step-5 reversal.
    /// Always over-aggressive: step 4 still multiplies by them.
    pub sequence_gradients: usize,
    /// Collapse the vector gradients after the step-4 reversal.
    /// Over-aggressive: steps 3 and 1 still multiply by them.
    pub vector_gradients: usize,
    /// Collapse the determinant series and the gradient matrix right
    /// before the final evaluation. Safe at any watermark.
    pub outputs: usize,
}

impl EvalSchedule {
    /// No collapsing anywhere; the scheduled pipeline degenerates to
    /// the plain one.
    pub fn none() -> Self {
        EvalSchedule::default()
    }

    /// Collapse only the step-5 leftovers that feed the final
    /// evaluation: the determinant series and the finished gradient.
    pub fn conservative(trunc: usize) -> Self {
        EvalSchedule {
            sequence_gradients: 0,
            vector_gradients: 0,
            outputs: trunc,
        }
    }
}

/// Collapses every series in `items` below the watermark, poisoning the
/// folded slots. Watermark 0 is a no-op.
pub fn apply_partial_evaluation<R: Ring>(
    ring: &SeriesRing<R>,
    items: &mut [Series<R::Elem>],
    watermark: usize,
) -> Result<()> {
    if watermark == 0 {
        return Ok(());
    }
    for item in items.iter_mut() {
        *item = ring.collapse_below(item, watermark)?;
    }
    Ok(())
}

fn collapse_matrix<R: Ring>(
    ring: &SeriesRing<R>,
    m: &mut SeriesMatrix<R>,
    watermark: usize,
) -> Result<()> {
    if watermark == 0 {
        return Ok(());
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            m[(i, j)] = ring.collapse_below(&m[(i, j)], watermark)?;
        }
    }
    Ok(())
}

/// Adjugate and determinant of `a` over its ring, division-free, with
/// scheduled partial evaluation applied between reverse stages.
/// `WatermarkViolation` when a stage reads coefficients the schedule
/// collapsed.
pub fn adjoint_division_free_scheduled<R: MatrixInverse>(
    a: &Matrix<R>,
    schedule: &EvalSchedule,
) -> Result<AdjointResult<R>> {
    let overall = counters::snapshot();
    let trace = forward_trace(a);
    let series = trace.a.ring().clone();
    let guard = counters::snapshot();
    let violated = || guard.delta().watermark_violations > 0;

    let mut reverse_muls = [0u64; 5];
    let mark = counters::snapshot();
    let mut dh =
        diff_step5(&trace).expect("shifted Hankel matrix is unit-invertible by construction");
    reverse_muls[0] = mark.delta().ring_muls;
    apply_partial_evaluation(&series, &mut dh, schedule.sequence_gradients)?;

    let mark = counters::snapshot();
    let grid = assemble_dh(&trace, &dh);
    let (mut baby_grads, mut giant_grads) = diff_step4(&trace, &grid);
    reverse_muls[1] = mark.delta().ring_muls;
    if violated() {
        return Err(Error::WatermarkViolation);
    }
    if schedule.vector_gradients > 0 {
        for g in baby_grads.iter_mut() {
            for c in 0..g.dim() {
                g.set(
                    c,
                    series.collapse_below(g.at(c), schedule.vector_gradients)?,
                );
            }
        }
        for g in giant_grads.iter_mut() {
            for c in 0..g.dim() {
                g.set(
                    c,
                    series.collapse_below(g.at(c), schedule.vector_gradients)?,
                );
            }
        }
    }

    let mark = counters::snapshot();
    let power_grad = diff_step3(&trace, &giant_grads);
    reverse_muls[2] = mark.delta().ring_muls;
    if violated() {
        return Err(Error::WatermarkViolation);
    }

    let mark = counters::snapshot();
    let input_grad = diff_step2(&trace, power_grad);
    reverse_muls[3] = mark.delta().ring_muls;
    if violated() {
        return Err(Error::WatermarkViolation);
    }

    let mark = counters::snapshot();
    let mut gradient = diff_step1(&trace, &baby_grads, input_grad);
    reverse_muls[4] = mark.delta().ring_muls;
    if violated() {
        return Err(Error::WatermarkViolation);
    }

    let mut det_series = trace.det.clone();
    if schedule.outputs > 0 {
        det_series = series.collapse_below(&det_series, schedule.outputs)?;
        collapse_matrix(&series, &mut gradient, schedule.outputs)?;
    }

    let base = series.base().clone();
    let adjugate = gradient
        .transpose()
        .map(base.clone(), |s| series.eval_at_one(s));
    let det = series.eval_at_one(&det_series);
    if violated() {
        return Err(Error::WatermarkViolation);
    }
    Ok(AdjointResult {
        adjugate,
        det,
        counters: PipelineCounters {
            forward_muls: trace.stage_muls,
            reverse_muls,
            division_violations: overall.delta().division_violations,
        },
    })
}

/// Adjugate and determinant of `a` over its ring, division-free, for
/// every square input. `a * adjugate = adjugate * a = det * I` exactly.
pub fn adjoint_division_free<R: MatrixInverse>(a: &Matrix<R>) -> AdjointResult<R> {
    adjoint_division_free_scheduled(a, &EvalSchedule::none())
        .expect("an empty schedule cannot violate watermarks")
}
