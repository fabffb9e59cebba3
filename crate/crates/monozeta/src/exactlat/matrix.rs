//! Exact integer linear algebra: Hermite forms, integer kernels, lattice
//! saturation and rational solving. Everything here is deterministic; pivot
//! choices depend only on the input, never on hashing or timing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::num::is_zero_vec;
use crate::error::{Error, Result};

pub type Row = Vec<BigInt>;

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns a basis (zero rows dropped) of the integer row span: pivots are
/// positive, entries above each pivot are reduced into `[0, pivot)`. The
/// output is the canonical basis of the span, so two generating sets of the
/// same sublattice produce identical output. No saturation is performed; the
/// span of `{(2,2)}` stays `{(2,2)}`.
pub fn row_hnf(rows: &[Row]) -> Vec<Row> {
    let mut a: Vec<Row> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    if a.is_empty() {
        return Vec::new();
    }
    let n = a[0].len();
    let m = a.len();
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        // Reduce column `col` among rows r..m to a single nonzero entry (the gcd).
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if !a[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) if a[i][col].abs() < a[b][col].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(p) = best else { break };
            a.swap(r, p);
            let mut again = false;
            for i in r + 1..m {
                if !a[i][col].is_zero() {
                    let q = a[i][col].div_floor(&a[r][col]);
                    if !q.is_zero() {
                        for j in 0..n {
                            let s = &a[r][j] * &q;
                            a[i][j] -= s;
                        }
                    }
                    if !a[i][col].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if a[r][col].is_zero() {
            continue;
        }
        if a[r][col].is_negative() {
            for j in 0..n {
                a[r][j] = -&a[r][j];
            }
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if !q.is_zero() {
                for j in 0..n {
                    let s = &a[r][j] * &q;
                    a[i][j] -= s;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Rank of the integer (equivalently rational) row span.
pub fn rank(rows: &[Row]) -> usize {
    row_hnf(rows).len()
}

/// Basis of `{x in Z^n : <row, x> = 0 for every row}`, in HNF. Kernels of
/// integer matrices are saturated lattices, so the basis is primitive.
pub fn integer_kernel(rows: &[Row], n: usize) -> Vec<Row> {
    let m = rows.len();
    // Work on the transpose so that column operations become row operations,
    // tracking the transformation in `vt` (rows of V^T).
    let mut bt: Vec<Row> = (0..n)
        .map(|j| rows.iter().map(|row| row[j].clone()).collect())
        .collect();
    let mut vt: Vec<Row> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut r = 0;
    for col in 0..m {
        if r == n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..n {
                if !bt[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) if bt[i][col].abs() < bt[b][col].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(p) = best else { break };
            bt.swap(r, p);
            vt.swap(r, p);
            let mut again = false;
            for i in r + 1..n {
                if !bt[i][col].is_zero() {
                    let q = bt[i][col].div_floor(&bt[r][col]);
                    if !q.is_zero() {
                        for j in 0..m {
                            let s = &bt[r][j] * &q;
                            bt[i][j] -= s;
                        }
                        for j in 0..n {
                            let s = &vt[r][j] * &q;
                            vt[i][j] -= s;
                        }
                    }
                    if !bt[i][col].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if !bt[r][col].is_zero() {
            r += 1;
        }
    }
    row_hnf(&vt.split_off(r))
}

/// Basis of the saturation `Z^n ∩ (Q-span of rows)`, in HNF: the integer span
/// with all elementary-divisor content removed, computed as the kernel of the
/// kernel.
pub fn saturate(rows: &[Row], n: usize) -> Vec<Row> {
    let basis = row_hnf(rows);
    if basis.is_empty() {
        return Vec::new();
    }
    let perp = integer_kernel(&basis, n);
    integer_kernel(&perp, n)
}

/// One rational solution of `A x = b` (free variables set to 0), or None if
/// the system is inconsistent. Deterministic pivoting: first usable row per
/// column, columns left to right.
pub fn solve_rational(a: &[Row], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut aug: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = a[i]
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.push(BigRational::from_integer(b[i].clone()));
            row
        })
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut r = 0;
    for col in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][col].clone();
        for j in col..=n {
            let v = &aug[r][j] / &inv;
            aug[r][j] = v;
        }
        for i in 0..m {
            if i != r && !aug[i][col].is_zero() {
                let factor = aug[i][col].clone();
                for j in col..=n {
                    let s = &aug[r][j] * &factor;
                    aug[i][j] -= s;
                }
            }
        }
        pivot_of_col[col] = Some(r);
        r += 1;
    }
    for i in r..m {
        if !aug[i][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::from_integer(BigInt::zero()); n];
    for col in 0..n {
        if let Some(row) = pivot_of_col[col] {
            x[col] = aug[row][n].clone();
        }
    }
    Some(x)
}

/// Integer solution of `x * rows = target` where one is known to exist
/// (coordinates of a lattice vector in a spanning basis).
pub fn solve_left_integer(rows: &[Row], target: &Row) -> Result<Vec<BigInt>> {
    let d = rows.len();
    let n = target.len();
    // Transpose: solve rows^T * x^T = target^T.
    let at: Vec<Row> = (0..n).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    let sol = solve_rational(&at, target)
        .ok_or_else(|| Error::internal("point does not lie in the claimed lattice span"))?;
    debug_assert_eq!(sol.len(), d);
    sol.into_iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::internal(
                    "lattice coordinates came out non-integral against a spanning basis",
                ))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::num::vec_i64;

    fn rows(data: &[&[i64]]) -> Vec<Row> {
        data.iter().map(|r| vec_i64(r)).collect()
    }

    #[test]
    fn hnf_keeps_integer_span() {
        // span{(2,2)} is not saturated; HNF must not shrink it
        assert_eq!(row_hnf(&rows(&[&[2, 2]])), rows(&[&[2, 2]]));
        // a classic 2x2 reduction
        assert_eq!(row_hnf(&rows(&[&[2, 0], &[1, 1]])), rows(&[&[1, 1], &[0, 2]]));
        assert_eq!(rank(&rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&rows(&[&[1, 0], &[0, 1]])), 2);
    }

    #[test]
    fn saturation_removes_content() {
        assert_eq!(saturate(&rows(&[&[2, 2]]), 2), rows(&[&[1, 1]]));
        assert_eq!(saturate(&rows(&[&[2, 0], &[0, 3]]), 2), rows(&[&[1, 0], &[0, 1]]));
        // full-rank span saturates to Z^n
        assert_eq!(saturate(&rows(&[&[2, 1]]), 2), rows(&[&[2, 1]]));
        assert!(saturate(&[], 3).is_empty());
    }

    #[test]
    fn kernel_is_orthogonal_complement() {
        let a = rows(&[&[1, 1, 1]]);
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(crate::exactlat::num::dot(&a[0], v), BigInt::from(0));
        }
        // kernel of nothing is everything
        assert_eq!(integer_kernel(&[], 2).len(), 2);
    }

    #[test]
    fn rational_solve_roundtrip() {
        let a = rows(&[&[2, 1], &[0, 3]]);
        let b = vec_i64(&[5, 6]);
        let x = solve_rational(&a, &b).unwrap();
        // 2*x0 + x1 = 5, 3*x1 = 6
        assert_eq!(x[1], BigRational::from_integer(BigInt::from(2)));
        let lhs: Vec<BigRational> = a
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&x)
                    .map(|(c, xi)| BigRational::from_integer(c.clone()) * xi)
                    .sum()
            })
            .collect();
        assert_eq!(lhs[0], BigRational::from_integer(BigInt::from(5)));
        assert!(solve_rational(&rows(&[&[1, 1], &[1, 1]]), &vec_i64(&[0, 1])).is_none());
    }

    #[test]
    fn left_solve_in_basis() {
        let basis = rows(&[&[1, 2, 0], &[0, 0, 3]]);
        let x = solve_left_integer(&basis, &vec_i64(&[2, 4, 3])).unwrap();
        assert_eq!(x, vec_i64(&[2, 1]));
    }
}
