//! Forward-mode derivative oracles over dual numbers.
//!
//! Each function recomputes the determinant ratio with a single scalar
//! perturbed by eps, replaying the forward steps downstream of the
//! perturbation and holding everything upstream fixed at its traced
//! value. The eps part of the result is the exact partial derivative;
//! the reverse pass is checked against these stage by stage, with zero
//! tolerance. Nothing here touches the reverse-pass code paths.

use crate::hankel::{HankelPair, ScalarSequence};
use crate::krylov::{power_with_tape, DetTrace};
use crate::linalg::{det_gauss, ColVector, Matrix, RowVector};
use crate::rings::{DualRing, Ring};

/// det(H_shifted) * det(H)^-1 of a sequence over any ring.
fn hankel_ratio<D: Ring>(ring: &D, terms: Vec<D::Elem>) -> D::Elem {
    let seq = ScalarSequence::new(ring.clone(), terms);
    let pair = HankelPair::from_sequence(&seq);
    let det_h = det_gauss(&pair.h).expect("oracle elimination");
    let det_shifted = det_gauss(&pair.h_shifted).expect("oracle elimination");
    ring.mul(
        &det_shifted,
        &ring.inv(&det_h).expect("trace certified det(H) a unit"),
    )
}

/// Step-4 replay: projects the grid of giant-by-baby inner products
/// down to the 2n sequence terms.
fn project<D: Ring>(
    ring: &D,
    giants: &[RowVector<D>],
    babies: &[ColVector<D>],
    n: usize,
    r: usize,
) -> Vec<D::Elem> {
    let mut terms = vec![ring.zero(); 2 * n];
    for (j, uj) in giants.iter().enumerate() {
        for (i, vi) in babies.iter().enumerate() {
            let k = i + j * r;
            if k < 2 * n {
                terms[k] = uj.dot(vi);
            }
        }
    }
    terms
}

fn replay_giants<R: Ring>(
    dual: &DualRing<R>,
    trace: &DetTrace<R>,
    power: &Matrix<DualRing<R>>,
) -> Vec<RowVector<DualRing<R>>> {
    let s = trace.params.giant_steps;
    let mut giants = Vec::with_capacity(s);
    giants.push(trace.u.map(dual.clone(), |c| dual.lift(c.clone())));
    for _ in 1..s {
        let next = giants.last().unwrap().mul_mat(power);
        giants.push(next);
    }
    giants
}

fn lift_giants<R: Ring>(dual: &DualRing<R>, trace: &DetTrace<R>) -> Vec<RowVector<DualRing<R>>> {
    trace
        .giant_vectors
        .iter()
        .map(|u| u.map(dual.clone(), |c| dual.lift(c.clone())))
        .collect()
}

fn lift_babies<R: Ring>(dual: &DualRing<R>, trace: &DetTrace<R>) -> Vec<ColVector<DualRing<R>>> {
    trace
        .baby_vectors
        .iter()
        .map(|v| v.map(dual.clone(), |c| dual.lift(c.clone())))
        .collect()
}

/// d det / d h_k: step 5 alone, with the traced sequence perturbed at
/// index k.
pub fn delta_eps_from_sequence<R: Ring>(trace: &DetTrace<R>, k: usize) -> R::Elem {
    let dual = DualRing::new(trace.a.ring().clone());
    let terms = trace
        .sequence
        .terms()
        .iter()
        .enumerate()
        .map(|(idx, h)| {
            if idx == k {
                dual.perturbed(h.clone())
            } else {
                dual.lift(h.clone())
            }
        })
        .collect();
    hankel_ratio(&dual, terms).eps
}

/// d det / d (v_i)_c: steps 4-5 replayed with one baby-vector entry
/// perturbed.
pub fn delta_eps_from_baby<R: Ring>(trace: &DetTrace<R>, i: usize, c: usize) -> R::Elem {
    let dual = DualRing::new(trace.a.ring().clone());
    let giants = lift_giants(&dual, trace);
    let mut babies = lift_babies(&dual, trace);
    let entry = trace.baby_vectors[i].at(c).clone();
    babies[i].set(c, dual.perturbed(entry));
    let terms = project(
        &dual,
        &giants,
        &babies,
        trace.params.n,
        trace.params.baby_steps,
    );
    hankel_ratio(&dual, terms).eps
}

/// d det / d (u_j)_c: steps 4-5 replayed with one giant-vector entry
/// perturbed.
pub fn delta_eps_from_giant<R: Ring>(trace: &DetTrace<R>, j: usize, c: usize) -> R::Elem {
    let dual = DualRing::new(trace.a.ring().clone());
    let mut giants = lift_giants(&dual, trace);
    let entry = trace.giant_vectors[j].at(c).clone();
    giants[j].set(c, dual.perturbed(entry));
    let babies = lift_babies(&dual, trace);
    let terms = project(
        &dual,
        &giants,
        &babies,
        trace.params.n,
        trace.params.baby_steps,
    );
    hankel_ratio(&dual, terms).eps
}

/// d det / d b_{at}: steps 3-5 replayed with one entry of the power
/// matrix b perturbed.
pub fn delta_eps_from_power_entry<R: Ring>(trace: &DetTrace<R>, at: (usize, usize)) -> R::Elem {
    let dual = DualRing::new(trace.a.ring().clone());
    let mut power = trace.power.map(dual.clone(), |x| dual.lift(x.clone()));
    power[at] = dual.perturbed(trace.power[at].clone());
    let giants = replay_giants(&dual, trace, &power);
    let babies = lift_babies(&dual, trace);
    let terms = project(
        &dual,
        &giants,
        &babies,
        trace.params.n,
        trace.params.baby_steps,
    );
    hankel_ratio(&dual, terms).eps
}

/// d det / d a_{at} through steps 2-5 only: the power is recomputed
/// from the perturbed input, while the baby vectors stay fixed at their
/// traced values.
pub fn delta_eps_through_power<R: Ring>(trace: &DetTrace<R>, at: (usize, usize)) -> R::Elem {
    let dual = DualRing::new(trace.a.ring().clone());
    let mut a = trace.a.map(dual.clone(), |x| dual.lift(x.clone()));
    a[at] = dual.perturbed(trace.a[at].clone());
    let (power, _) = power_with_tape(&a, trace.params.baby_steps as u64);
    let giants = replay_giants(&dual, trace, &power);
    let babies = lift_babies(&dual, trace);
    let terms = project(
        &dual,
        &giants,
        &babies,
        trace.params.n,
        trace.params.baby_steps,
    );
    hankel_ratio(&dual, terms).eps
}

/// d det / d a_{at} through the whole pipeline, with the projections u
/// and v held constant.
pub fn delta_eps_full<R: Ring>(trace: &DetTrace<R>, at: (usize, usize)) -> R::Elem {
    let dual = DualRing::new(trace.a.ring().clone());
    let mut a = trace.a.map(dual.clone(), |x| dual.lift(x.clone()));
    a[at] = dual.perturbed(trace.a[at].clone());
    let r = trace.params.baby_steps;
    let mut babies = Vec::with_capacity(r);
    babies.push(trace.v.map(dual.clone(), |x| dual.lift(x.clone())));
    for _ in 1..r {
        let next = a.mul_col(babies.last().unwrap());
        babies.push(next);
    }
    let (power, _) = power_with_tape(&a, r as u64);
    let giants = replay_giants(&dual, trace, &power);
    let terms = project(&dual, &giants, &babies, trace.params.n, r);
    hankel_ratio(&dual, terms).eps
}
