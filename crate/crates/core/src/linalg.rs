//! Small dense linear-algebra helpers. Problem sizes here are tiny
//! (embedding dimension ~51, probe batches ~8), so hand-rolled routines
//! beat pulling in a full linear-algebra stack.

/// Solve `A x = b` for symmetric positive-definite `A` (row-major, n x n)
/// via Cholesky. Returns `None` when a pivot collapses.
pub fn solve_spd(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n);
    // Lower-triangular factor, in place on a copy.
    let mut l = a.to_vec();
    for j in 0..n {
        let mut diag = l[j * n + j];
        for k in 0..j {
            diag -= l[j * n + k] * l[j * n + k];
        }
        if diag <= 0.0 || !diag.is_finite() {
            return None;
        }
        let diag = diag.sqrt();
        l[j * n + j] = diag;
        for i in (j + 1)..n {
            let mut v = l[i * n + j];
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / diag;
        }
    }
    // Forward then backward substitution.
    let mut y = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            y[i] -= l[i * n + k] * y[k];
        }
        y[i] /= l[i * n + i];
    }
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            y[i] -= l[k * n + i] * y[k];
        }
        y[i] /= l[i * n + i];
    }
    Some(y)
}

/// Exact determinant of an integer matrix via fraction-free (Bareiss)
/// elimination. Returns `None` on i128 overflow; callers fall back to the
/// floating-point path. Intermediate values are minors of the input, so
/// for the 8x8 kernel matrices used by the proxy they fit comfortably.
pub fn det_i128(m: &[i128], n: usize) -> Option<i128> {
    debug_assert_eq!(m.len(), n * n);
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k] == 0 {
            // Pivot search below row k.
            let swap = ((k + 1)..n).find(|&r| a[r * n + k] != 0)?;
            for c in 0..n {
                a.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t1 = a[i * n + j].checked_mul(a[k * n + k])?;
                let t2 = a[i * n + k].checked_mul(a[k * n + j])?;
                a[i * n + j] = t1.checked_sub(t2)? / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    Some(sign * a[n * n - 1])
}

/// log(det A) for symmetric positive-definite `A` via Cholesky.
/// Returns `None` when the matrix is not numerically PD.
pub fn log_det_spd(a: &[f64], n: usize) -> Option<f64> {
    let mut l = a.to_vec();
    let mut acc = 0.0f64;
    for j in 0..n {
        let mut diag = l[j * n + j];
        for k in 0..j {
            diag -= l[j * n + k] * l[j * n + k];
        }
        if diag <= 0.0 || !diag.is_finite() {
            return None;
        }
        let root = diag.sqrt();
        acc += root.ln();
        l[j * n + j] = root;
        for i in (j + 1)..n {
            let mut v = l[i * n + j];
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / root;
        }
    }
    Some(2.0 * acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spd_solve_recovers_known_solution() {
        // A = [[4,1],[1,3]], x = [1,2] -> b = [6,7]
        let a = [4.0, 1.0, 1.0, 3.0];
        let b = [6.0, 7.0];
        let x = solve_spd(&a, &b, 2).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn spd_solve_rejects_indefinite() {
        let a = [1.0, 2.0, 2.0, 1.0]; // eigenvalues 3, -1
        assert!(solve_spd(&a, &[1.0, 1.0], 2).is_none());
    }

    #[test]
    fn integer_det_matches_hand_values() {
        assert_eq!(det_i128(&[4, 0, 0, 4], 2), Some(16));
        assert_eq!(det_i128(&[1, 2, 3, 4], 2), Some(-2));
        assert_eq!(det_i128(&[2, 1, 1, 1, 2, 1, 1, 1, 2], 3), Some(4));
        // Singular
        assert_eq!(det_i128(&[1, 1, 1, 1], 2), Some(0));
    }

    #[test]
    fn integer_det_needs_pivot_swap() {
        // Zero leading pivot forces the row swap path.
        assert_eq!(det_i128(&[0, 1, 1, 0], 2), Some(-1));
    }

    #[test]
    fn log_det_matches_integer_det() {
        let a = [4.0, 0.0, 0.0, 4.0];
        let ld = log_det_spd(&a, 2).unwrap();
        assert!((ld - 16f64.ln()).abs() < 1e-12);
        assert!(log_det_spd(&[1.0, 1.0, 1.0, 1.0], 2).is_none());
    }
}
