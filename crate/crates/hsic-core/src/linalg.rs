//! Small dense linear-algebra helpers: Cholesky factorization and
//! triangular products, enough for covariance sampling and PSD checks.

use ndarray::{Array1, Array2, ArrayView1};

/// Lower Cholesky factor of a symmetric positive definite matrix, or `None`
/// if a nonpositive pivot is met.
pub(crate) fn cholesky_lower(a: &Array2<f64>) -> Option<Array2<f64>> {
    let n = a.nrows();
    if a.ncols() != n {
        return None;
    }
    let mut l = Array2::<f64>::zeros((n, n));
    for j in 0..n {
        // Row slices of the partially built factor stay contiguous.
        let (head, tail) = l.view_mut().split_at(ndarray::Axis(0), j);
        let _ = head;
        let mut row_j = tail.row_mut(0).to_owned();
        let lj: Vec<f64> = l.row(j).iter().take(j).copied().collect();
        let mut d = a[[j, j]];
        for v in &lj {
            d -= v * v;
        }
        if d <= 0.0 || !d.is_finite() {
            return None;
        }
        let pivot = d.sqrt();
        row_j[j] = pivot;
        l[[j, j]] = pivot;
        for i in (j + 1)..n {
            let mut s = a[[i, j]];
            for k in 0..j {
                s -= l[[i, k]] * lj[k];
            }
            l[[i, j]] = s / pivot;
        }
    }
    Some(l)
}

/// `L z` for lower-triangular `L`.
pub(crate) fn lower_tri_matvec(l: &Array2<f64>, z: ArrayView1<f64>) -> Array1<f64> {
    let n = l.nrows();
    let mut out = Array1::<f64>::zeros(n);
    for i in 0..n {
        let row = l.row(i);
        let mut s = 0.0;
        for k in 0..=i {
            s += row[k] * z[k];
        }
        out[i] = s;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn cholesky_recovers_simple_factor() {
        let a = array![[4.0, 2.0], [2.0, 5.0]];
        let l = cholesky_lower(&a).unwrap();
        let prod = l.dot(&l.t());
        for i in 0..2 {
            for j in 0..2 {
                assert_abs_diff_eq!(prod[[i, j]], a[[i, j]], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = array![[1.0, 2.0], [2.0, 1.0]];
        assert!(cholesky_lower(&a).is_none());
    }

    #[test]
    fn triangular_matvec_matches_dense() {
        let a = array![[2.0, 0.0], [3.0, 1.0]];
        let z = array![1.0, -1.0];
        let v = lower_tri_matvec(&a, z.view());
        assert_eq!(v[0], 2.0);
        assert_eq!(v[1], 2.0);
    }
}
