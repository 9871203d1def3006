//! Brute-force determinant and adjugate, used as trusted cross-checks.
//!
//! These are deliberately independent of every elimination- and
//! Krylov-based code path: `det_cofactor` uses only ring additions and
//! multiplications, and the adjugate is assembled entry by entry from
//! signed minors. Costs are exponential respectively O(n^5), which is
//! fine at the desk scale they run at.

use crate::rings::Ring;

use super::{det_gauss, Matrix};

/// Determinant by cofactor expansion along the first remaining row,
/// memoized on the set of surviving columns. Division-free; valid over
/// any commutative ring.
///
/// # Panics
///
/// Panics beyond n = 16, where the memo table stops being desk-scale.
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> R::Elem {
    assert!(m.is_square());
    let n = m.rows();
    assert!(n <= 16, "cofactor oracle is limited to n <= 16");
    if n == 0 {
        return m.ring().one();
    }
    let mut memo: Vec<Option<R::Elem>> = vec![None; 1 << n];
    expand(m, (1usize << n) - 1, &mut memo)
}

fn expand<R: Ring>(m: &Matrix<R>, mask: usize, memo: &mut Vec<Option<R::Elem>>) -> R::Elem {
    let ring = m.ring().clone();
    if mask == 0 {
        return ring.one();
    }
    if let Some(v) = &memo[mask] {
        return v.clone();
    }
    let n = m.rows();
    let row = n - mask.count_ones() as usize;
    let mut acc = ring.zero();
    let mut negate = false;
    for j in 0..n {
        if mask & (1 << j) == 0 {
            continue;
        }
        let entry = &m[(row, j)];
        if !ring.is_zero(entry) {
            let sub = expand(m, mask & !(1 << j), memo);
            let term = ring.mul(entry, &sub);
            let signed = if negate { ring.neg(&term) } else { term };
            acc = ring.add(&acc, &signed);
        }
        negate = !negate;
    }
    memo[mask] = Some(acc.clone());
    acc
}

/// Adjugate from signed minors: entry (j, i) is (-1)^{i+j} times the
/// determinant of the input with row i and column j removed, so that
/// a * adjugate(a) = adjugate(a) * a = det(a) * I. Defined for singular
/// input too.
///
/// Minors are computed by elimination over fields and by cofactor
/// expansion elsewhere (capped at n = 12).
pub fn adjugate_oracle<R: Ring>(m: &Matrix<R>) -> Matrix<R> {
    assert!(m.is_square());
    let ring = m.ring().clone();
    let n = m.rows();
    assert!(n >= 1);
    if n == 1 {
        return Matrix::identity(ring, 1);
    }
    if !ring.is_field() {
        assert!(n <= 12, "non-field adjugate oracle is limited to n <= 12");
    }
    let mut adj = Matrix::zeros(ring.clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            let minor = delete_row_col(m, i, j);
            let d = if ring.is_field() {
                det_gauss(&minor).expect("fields always eliminate")
            } else {
                det_cofactor(&minor)
            };
            adj[(j, i)] = if (i + j) % 2 == 1 { ring.neg(&d) } else { d };
        }
    }
    adj
}

fn delete_row_col<R: Ring>(m: &Matrix<R>, row: usize, col: usize) -> Matrix<R> {
    let n = m.rows();
    let mut data = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        if i == row {
            continue;
        }
        for j in 0..n {
            if j == col {
                continue;
            }
            data.push(m[(i, j)].clone());
        }
    }
    Matrix::new(m.ring().clone(), n - 1, n - 1, data)
}

#[cfg(test)]
mod tests {
    use rand::Rng;
    use rand::SeedableRng;

    use super::*;
    use crate::rings::{IntegerRing, PrimeField};

    #[test]
    fn two_by_two_closed_form() {
        let z = IntegerRing;
        let m = Matrix::from_i64_rows(z, &[&[1, 2], &[3, 4]]);
        assert_eq!(det_cofactor(&m), z.from_i64(-2));
        let adj = adjugate_oracle(&m);
        assert_eq!(adj, Matrix::from_i64_rows(z, &[&[4, -2], &[-3, 1]]));
    }

    #[test]
    fn adjugate_of_identity_and_low_rank() {
        let z = IntegerRing;
        assert_eq!(
            adjugate_oracle(&Matrix::identity(z, 4)),
            Matrix::identity(z, 4)
        );
        // rank 1 <= n-2: every (n-1)-minor vanishes
        let ones = Matrix::from_i64_rows(z, &[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(adjugate_oracle(&ones), Matrix::zeros(z, 3, 3));
    }

    #[test]
    fn adjugate_identity_holds_over_a_field() {
        let f = PrimeField::new(10007);
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = rng.random_range(1..=8);
            let mut a = crate::sample::gf_matrix(&f, n, &mut rng);
            if trial % 4 == 0 && n >= 2 {
                // force singularity: duplicate a row
                let r0 = a.row(0);
                for j in 0..n {
                    a[(n - 1, j)] = *r0.at(j);
                }
            }
            let adj = adjugate_oracle(&a);
            let det = det_gauss(&a).unwrap();
            let expected = Matrix::identity(f, n).scale(&det);
            assert_eq!(a.mul(&adj), expected);
            assert_eq!(adj.mul(&a), expected);
        }
    }

    #[test]
    fn cofactor_det_agrees_with_elimination_over_gf() {
        let f = PrimeField::new(101);
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.random_range(1..=6);
            let a = crate::sample::gf_matrix(&f, n, &mut rng);
            assert_eq!(det_cofactor(&a), det_gauss(&a).unwrap());
        }
    }

    #[test]
    fn integer_determinant_of_known_matrix() {
        // cross-checked with a 10x10 matrix of known determinant
        let z = IntegerRing;
        let m = Matrix::from_i64_rows(
            z,
            &[
                &[14, 11, 22, 36, 31, 28, 15, 19, 15, 6],
                &[13, 16, 17, 9, 2, 4, 21, 35, 2, 35],
                &[14, 18, 19, 34, 4, 27, 5, 15, 11, 32],
                &[25, 19, 25, 11, 25, 27, 25, 32, 28, 11],
                &[27, 34, 28, 4, 9, 9, 7, 34, 32, 0],
                &[1, 30, 6, 8, 18, 28, 16, 0, 28, 0],
                &[14, 2, 29, 33, 13, 22, 19, 9, 16, 35],
                &[18, 36, 27, 31, 2, 28, 24, 16, 13, 5],
                &[23, 1, 25, 22, 0, 23, 8, 23, 23, 13],
                &[0, 16, 10, 30, 13, 35, 34, 22, 17, 22],
            ],
        );
        assert_eq!(det_cofactor(&m).to_string(), "14293689752795");
    }
}
