//! Forward determinant pass: baby-steps/giant-steps Krylov projection.
//!
//! For an n x n matrix `a`, a row `u` and a column `v`, the pass runs
//! five steps and records every intermediate on a [`DetTrace`] so the
//! reverse pass can read them back:
//!
//! 1. baby vectors `v_i = a^i v` for `i < r`
//! 2. `b = a^r` by square-and-multiply, recorded on a product tape
//! 3. giant vectors `u_j = u b^j` for `j < s`
//! 4. projections `h_{i+jr} = u_j v_i`, kept for indices below 2n
//! 5. Hankel matrices of `{h_k}`, the determinant as
//!    `det(H_shifted) * det(H)^-1`, and the minimal polynomial of the
//!    sequence as a cross-check
//!
//! with `s = ceil(sqrt n)` and `r = ceil(2n/s)`, so `r*s >= 2n`.
//! The pass is exact over any ring whose eliminations meet only unit
//! pivots; randomized projections are only meaningful over fields.

use crate::counters;
use crate::error::{Error, Result};
use crate::hankel::{HankelPair, MinimalPolynomial, ScalarSequence};
use crate::linalg::{det_gauss, ColVector, Matrix, RowVector};
use crate::rings::{PrimeField, Ring};
use crate::sample;

/// How many fresh (u, v) draws randomized entry points attempt before
/// concluding the input is derogatory.
pub const PROJECTION_RETRIES: u32 = 8;

/// Baby/giant split of the 2n Krylov projections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BabyGiantParams {
    pub n: usize,
    /// r, the number of baby vectors.
    pub baby_steps: usize,
    /// s, the number of giant vectors.
    pub giant_steps: usize,
}

pub fn baby_giant_params(n: usize) -> BabyGiantParams {
    assert!(n >= 1);
    let mut s = 1usize;
    while s * s < n {
        s += 1;
    }
    let r = (2 * n).div_ceil(s);
    debug_assert!(r * s >= 2 * n && r >= 2);
    BabyGiantParams {
        n,
        baby_steps: r,
        giant_steps: s,
    }
}

/// Operand of a recorded matrix product: the input matrix itself or an
/// earlier product on the tape.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Operand {
    Input,
    Node(usize),
}

/// One recorded product `value = lhs * rhs`.
#[derive(Clone, PartialEq, Debug)]
pub struct ProductRecord<R: Ring> {
    pub lhs: Operand,
    pub rhs: Operand,
    pub value: Matrix<R>,
}

/// The square-and-multiply chain that produced `a^r`. Replaying it
/// forward from `a` reproduces the power exactly; walking it backward
/// drives the product-reversal rule of the reverse pass.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerTape<R: Ring> {
    pub records: Vec<ProductRecord<R>>,
}

impl<R: Ring> PowerTape<R> {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Resolves an operand reference against the tape.
    pub fn operand<'a>(&'a self, op: Operand, input: &'a Matrix<R>) -> &'a Matrix<R> {
        match op {
            Operand::Input => input,
            Operand::Node(k) => &self.records[k].value,
        }
    }

    /// The final power (the input itself for an empty tape).
    pub fn result<'a>(&'a self, input: &'a Matrix<R>) -> &'a Matrix<R> {
        self.records.last().map_or(input, |r| &r.value)
    }
}

/// `a^exp` together with the tape of the square-and-multiply products
/// that built it; at most `2*floor(log2 exp)` records.
pub fn power_with_tape<R: Ring>(a: &Matrix<R>, exp: u64) -> (Matrix<R>, PowerTape<R>) {
    assert!(a.is_square());
    assert!(exp >= 1);
    let mut tape = PowerTape {
        records: Vec::new(),
    };
    if exp == 1 {
        return (a.clone(), tape);
    }
    let top_bit = 63 - exp.leading_zeros();
    let mut acc = a.clone();
    let mut acc_ref = Operand::Input;
    for bit in (0..top_bit).rev() {
        let sq = acc.mul(&acc);
        tape.records.push(ProductRecord {
            lhs: acc_ref,
            rhs: acc_ref,
            value: sq,
        });
        acc_ref = Operand::Node(tape.records.len() - 1);
        acc = tape.records.last().unwrap().value.clone();
        if (exp >> bit) & 1 == 1 {
            let stepped = acc.mul(a);
            tape.records.push(ProductRecord {
                lhs: acc_ref,
                rhs: Operand::Input,
                value: stepped,
            });
            acc_ref = Operand::Node(tape.records.len() - 1);
            acc = tape.records.last().unwrap().value.clone();
        }
    }
    (acc, tape)
}

/// Everything the reverse pass reads: the input, both projection
/// vectors, all intermediates of steps 1-4 and the Hankel data of
/// step 5, plus per-step multiplication counts.
#[derive(Clone, PartialEq, Debug)]
pub struct DetTrace<R: Ring> {
    pub a: Matrix<R>,
    pub u: RowVector<R>,
    pub v: ColVector<R>,
    pub params: BabyGiantParams,
    /// v_i = a^i v for i < r.
    pub baby_vectors: Vec<ColVector<R>>,
    pub tape: PowerTape<R>,
    /// b = a^r.
    pub power: Matrix<R>,
    /// u_j = u b^j for j < s.
    pub giant_vectors: Vec<RowVector<R>>,
    /// h_0 .. h_{2n-1}.
    pub sequence: ScalarSequence<R>,
    pub hankel: HankelPair<R>,
    pub det_h: R::Elem,
    pub det_h_shifted: R::Elem,
    /// det(H_shifted) * det(H)^-1, the determinant of `a`.
    pub det: R::Elem,
    pub min_poly: MinimalPolynomial<R>,
    /// Base-ring multiplications spent in each of the five steps.
    pub stage_muls: [u64; 5],
}

/// Runs the five forward steps with the given projections.
///
/// Fails with `SingularHankel` when the projected sequence admits no
/// unique degree-n recurrence (derogatory input or unlucky projections).
pub fn det_forward<R: Ring>(
    a: &Matrix<R>,
    u: &RowVector<R>,
    v: &ColVector<R>,
) -> Result<DetTrace<R>> {
    assert!(a.is_square());
    let n = a.rows();
    assert!(n >= 1);
    assert_eq!(u.dim(), n);
    assert_eq!(v.dim(), n);
    let ring = a.ring().clone();
    let params = baby_giant_params(n);
    let (r, s) = (params.baby_steps, params.giant_steps);
    let mut stage_muls = [0u64; 5];

    // step 1: baby vectors
    let mark = counters::snapshot();
    let mut baby_vectors = Vec::with_capacity(r);
    baby_vectors.push(v.clone());
    for _ in 1..r {
        let next = a.mul_col(baby_vectors.last().unwrap());
        baby_vectors.push(next);
    }
    stage_muls[0] = mark.delta().ring_muls;

    // step 2: b = a^r on a tape
    let mark = counters::snapshot();
    let (power, tape) = power_with_tape(a, r as u64);
    stage_muls[1] = mark.delta().ring_muls;

    // step 3: giant vectors
    let mark = counters::snapshot();
    let mut giant_vectors = Vec::with_capacity(s);
    giant_vectors.push(u.clone());
    for _ in 1..s {
        let next = giant_vectors.last().unwrap().mul_mat(&power);
        giant_vectors.push(next);
    }
    stage_muls[2] = mark.delta().ring_muls;

    // step 4: the whole r x s grid is projected; only indices below 2n
    // are kept (higher ones carry no derivative either)
    let mark = counters::snapshot();
    let mut terms = vec![ring.zero(); 2 * n];
    for (j, uj) in giant_vectors.iter().enumerate() {
        for (i, vi) in baby_vectors.iter().enumerate() {
            let h = uj.dot(vi);
            let k = i + j * r;
            if k < 2 * n {
                terms[k] = h;
            }
        }
    }
    let sequence = ScalarSequence::new(ring.clone(), terms);
    stage_muls[3] = mark.delta().ring_muls;

    // step 5: Hankel data, determinant ratio, minimal polynomial
    let mark = counters::snapshot();
    let hankel = HankelPair::from_sequence(&sequence);
    let det_h = det_gauss(&hankel.h).map_err(map_singular)?;
    if !ring.is_unit(&det_h) {
        return Err(Error::SingularHankel);
    }
    let det_h_shifted = det_gauss(&hankel.h_shifted).map_err(map_singular)?;
    let det = ring.mul(
        &det_h_shifted,
        &ring.inv(&det_h).expect("unit checked above"),
    );
    let min_poly = crate::hankel::minpoly_from_sequence(&sequence)?;
    stage_muls[4] = mark.delta().ring_muls;

    Ok(DetTrace {
        a: a.clone(),
        u: u.clone(),
        v: v.clone(),
        params,
        baby_vectors,
        tape,
        power,
        giant_vectors,
        sequence,
        hankel,
        det_h,
        det_h_shifted,
        det,
        min_poly,
        stage_muls,
    })
}

fn map_singular(e: Error) -> Error {
    match e {
        Error::NoUnitPivot => Error::SingularHankel,
        other => other,
    }
}

/// Forward pass with seeded random projections, retried on singular
/// Hankel systems up to [`PROJECTION_RETRIES`] times.
pub fn det_forward_randomized(a: &Matrix<PrimeField>, seed: u64) -> Result<DetTrace<PrimeField>> {
    let n = a.rows();
    let field = *a.ring();
    let mut rng = sample::seeded_rng(seed);
    for _ in 0..PROJECTION_RETRIES {
        let u = sample::gf_row(&field, n, &mut rng);
        let v = sample::gf_col(&field, n, &mut rng);
        match det_forward(a, &u, &v) {
            Ok(trace) => return Ok(trace),
            Err(Error::SingularHankel) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(Error::DegenerateMinimalPolynomial {
        retries: PROJECTION_RETRIES,
    })
}

/// Determinant over a prime field with seeded random projections.
///
/// `DegenerateMinimalPolynomial` after all retries means the minimal
/// polynomial of `a` has degree below n, which no projection can fix;
/// division-free mode handles such inputs.
pub fn determinant(a: &Matrix<PrimeField>, seed: u64) -> Result<u64> {
    let trace = det_forward_randomized(a, seed)?;
    let field = *a.ring();
    let sign = field.from_i64(if a.rows().is_multiple_of(2) { 1 } else { -1 });
    assert_eq!(
        field.mul(&sign, trace.min_poly.constant_term()),
        trace.det,
        "minimal polynomial constant term disagrees with the determinant ratio"
    );
    Ok(trace.det)
}
