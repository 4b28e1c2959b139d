//! Dense Gaussian elimination over any [`Scalar`] field.
//!
//! Exact fields pivot on the first nonzero entry; numeric fields pivot on
//! the largest modulus and treat entries below `tol` as zero.

use crate::scalar::Scalar;

fn pivot_row<S: Scalar>(m: &[Vec<S>], col: usize, from: usize, tol: f64) -> Option<usize> {
    if S::EXACT {
        (from..m.len()).find(|&r| !m[r][col].is_zero())
    } else {
        let (best, mag) = (from..m.len())
            .map(|r| (r, m[r][col].magnitude()))
            .fold((None, 0.0), |(b, bm), (r, mag)| {
                if mag > bm {
                    (Some(r), mag)
                } else {
                    (b, bm)
                }
            });
        if mag > tol {
            best
        } else {
            None
        }
    }
}

/// Reduce `m` to row echelon form in place; returns the pivot columns.
pub fn row_reduce<S: Scalar>(m: &mut [Vec<S>], tol: f64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pivot_row(m, c, r, tol) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        for entry in m[r].iter_mut() {
            *entry = entry.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let delta = factor.clone() * m[r][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the row set.
pub fn rank<S: Scalar>(rows: &[Vec<S>], tol: f64) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m, tol).len()
}

/// Solve the square system `a x = b`; `None` when `a` is singular.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S], tol: f64) -> Option<Vec<S>> {
    let n = a.len();
    let mut aug: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, tol);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Determinant by elimination.
pub fn determinant<S: Scalar>(a: &[Vec<S>], tol: f64) -> S {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = S::one();
    for c in 0..n {
        let Some(p) = pivot_row(&m, c, c, tol) else {
            return S::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = det * m[c][c].clone();
        let inv = m[c][c].inverse().expect("pivot is nonzero");
        for i in (c + 1)..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone() * inv.clone();
            for j in c..n {
                let delta = factor.clone() * m[c][j].clone();
                m[i][j] = m[i][j].clone() - delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    #[test]
    fn exact_solve_and_det() {
        let a = vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(3, 1)],
        ];
        let x = solve(&a, &[rat(3, 1), rat(5, 1)], 0.0).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        assert_eq!(determinant(&a, 0.0), rat(5, 1));
    }

    #[test]
    fn singular_and_rank() {
        let a: Vec<Vec<Rational>> = vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(2, 1), rat(4, 1)],
        ];
        assert!(solve(&a, &[rat(1, 1), rat(1, 1)], 0.0).is_none());
        assert_eq!(rank(&a, 0.0), 1);
        assert_eq!(determinant(&a, 0.0), rat(0, 1));
    }

    #[test]
    fn numeric_pivoting() {
        let a = vec![vec![1e-20, 1.0], vec![1.0, 1.0]];
        let x = solve(&a, &[1.0, 2.0], 1e-14).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
        assert!((determinant(&a, 1e-14) + 1.0).abs() < 1e-12);
    }
}
