//! Dense nullspace helpers.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Orthonormal nullspace basis together with the numerical rank.
#[derive(Debug, Clone)]
pub struct Nullspace {
    /// Basis vectors as columns.
    pub basis: DMatrix<f64>,
    pub rank: usize,
    /// `|R_jj|` of the pivoted factorization, non-increasing.
    pub pivots: Vec<f64>,
}

/// Nullspace of `m` by Householder QR with column pivoting applied to `mᵀ`.
///
/// With `mᵀ Π = Q R` the first `rank` columns of `Q` span the row space of
/// `m`, so the remaining columns are an orthonormal basis of its nullspace.
/// The rank counts pivots with `|R_jj| > rel_tol · |R_00|`.
pub fn qrcp_nullspace(m: &DMatrix<f64>, rel_tol: f64) -> Nullspace {
    let mut a = m.transpose();
    let (rows, cols) = a.shape();
    let steps = rows.min(cols);
    let mut reflectors: Vec<Vec<f64>> = Vec::with_capacity(steps);
    let mut pivots = Vec::with_capacity(steps);

    for j in 0..steps {
        // Norms are recomputed each step rather than downdated, which keeps
        // them exact at the cost of O(n³) extra work.
        let (p, best) = (j..cols).map(|c| (c, a.view((j, c), (rows - j, 1)).norm())).fold((j, -1.0), |acc, x| {
            if x.1 > acc.1 {
                x
            } else {
                acc
            }
        });
        a.swap_columns(j, p);
        pivots.push(best);
        if best == 0.0 {
            break;
        }

        let mut v: Vec<f64> = (j..rows).map(|r| a[(r, j)]).collect();
        let alpha = if v[0] >= 0.0 { -best } else { best };
        v[0] -= alpha;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm > 0.0 {
            v.iter_mut().for_each(|x| *x /= vnorm);
            for c in j..cols {
                let dot: f64 = v.iter().enumerate().map(|(i, vi)| vi * a[(j + i, c)]).sum();
                for (i, vi) in v.iter().enumerate() {
                    a[(j + i, c)] -= 2.0 * vi * dot;
                }
            }
        }
        reflectors.push(v);
    }

    let top = pivots.first().copied().unwrap_or(0.0);
    let rank = pivots.iter().take_while(|&&r| r > rel_tol * top).count();

    // Q e_j = H_0 H_1 ... H_{t−1} e_j
    let null_dim = rows - rank;
    let mut basis = DMatrix::zeros(rows, null_dim);
    for (out, j) in (rank..rows).enumerate() {
        let mut e = vec![0.0; rows];
        e[j] = 1.0;
        for (h, v) in reflectors.iter().enumerate().rev() {
            let dot: f64 = v.iter().enumerate().map(|(i, vi)| vi * e[h + i]).sum();
            for (i, vi) in v.iter().enumerate() {
                e[h + i] -= 2.0 * vi * dot;
            }
        }
        basis.set_column(out, &nalgebra::DVector::from_vec(e));
    }
    Nullspace { basis, rank, pivots }
}

/// Orthonormal basis (as columns) of the vectors `x` with `‖m x‖` below
/// `abs_tol`, from a full SVD. Wide matrices are padded with zero rows.
pub fn complex_nullspace(m: &DMatrix<Complex64>, abs_tol: f64) -> DMatrix<Complex64> {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return DMatrix::zeros(0, 0);
    }
    let square = if rows < cols {
        let mut padded = DMatrix::zeros(cols, cols);
        padded.view_mut((0, 0), (rows, cols)).copy_from(m);
        padded
    } else {
        m.clone()
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let picks: Vec<usize> = (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] < abs_tol).collect();
    let mut basis = DMatrix::zeros(cols, picks.len());
    for (out, &i) in picks.iter().enumerate() {
        for c in 0..cols {
            basis[(c, out)] = v_t[(i, c)].conj();
        }
    }
    basis
}
