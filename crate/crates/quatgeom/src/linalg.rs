//! Dense linear algebra: exact Gauss–Jordan elimination over any [`Field`] and a
//! few floating-point helpers on top of `nalgebra`.

use nalgebra::DMatrix;

use crate::scalars::{Field, Ring};

/// Row-reduces `m` in place, visiting columns in `col_order`; returns the pivot columns.
pub fn rref_with_order<F: Field>(m: &mut [Vec<F>], col_order: &[usize]) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in col_order {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.sub(&f.mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rref<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let order: Vec<usize> = (0..cols).collect();
    rref_with_order(m, &order)
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

/// Basis of `{x : m·x = 0}`, one vector per free column.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = w[r][f].neg();
            }
            v
        })
        .collect()
}

/// Some solution of `a·x = b`, or `None` if the system is inconsistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let order: Vec<usize> = (0..=cols).collect();
    let pivots = rref_with_order(&mut aug, &order);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn mat_vec<F: Field>(a: &[Vec<F>], x: &[F]) -> Vec<F> {
    a.iter().map(|row| row.iter().zip(x).fold(F::zero(), |acc, (p, q)| acc.add(&p.mul(q)))).collect()
}

/// Is `v` in the row span of `basis`?
pub fn span_contains<F: Field>(basis: &[Vec<F>], v: &[F]) -> bool {
    let mut m = basis.to_vec();
    m.push(v.to_vec());
    rank(&m) == rank(basis)
}

/// Do the two lists of vectors span the same subspace?
pub fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> bool {
    let ra = rank(a);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rank(b) && ra == rank(&both)
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let order: Vec<usize> = (0..n).collect();
    if rref_with_order(&mut aug, &order).len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Product of two dense matrices over any ring.
pub fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![R::zero(); cols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        o.add_assign_ref(&x.mul(y));
                    }
                }
            }
            out
        })
        .collect()
}

/// Determinant by Laplace expansion along the sparsest row; intended for small
/// sparse matrices over rings without division (e.g. trigonometric polynomials).
pub fn det_sparse<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let row = (0..n).min_by_key(|&i| m[i].iter().filter(|x| !x.is_zero()).count()).unwrap_or(0);
    let mut acc = R::zero();
    for j in 0..n {
        if m[row][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = (0..n)
            .filter(|&i| i != row)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
            .collect();
        let term = m[row][j].mul(&det_sparse(&minor));
        if (row + j) % 2 == 0 {
            acc.add_assign_ref(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

pub fn to_dmatrix(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    DMatrix::from_fn(r, c, |i, j| rows[i][j])
}

/// Numerical rank via singular values relative to the largest one.
pub fn float_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |a, x| a.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat, Rational};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_rank_two_matrix() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| *x == int(0)));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = q(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let b = q(&[&[1, 1], &[2, 2]]);
        assert!(solve(&b, &[int(1), int(3)]).is_none());
        let _ = rat(1, 2);
    }

    #[test]
    fn pivot_order_does_not_change_rank() {
        let m = q(&[&[0, 1, 1, 0], &[1, 0, 1, 1], &[1, 1, 2, 1]]);
        let mut a = m.clone();
        let mut b = m.clone();
        let fwd = rref_with_order(&mut a, &[0, 1, 2, 3]).len();
        let rev = rref_with_order(&mut b, &[3, 2, 1, 0]).len();
        assert_eq!(fwd, rev);
        assert_eq!(fwd, 2);
    }
}
