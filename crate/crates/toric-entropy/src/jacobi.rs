//! Cyclic Jacobi diagonalization for Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pair: a diagonal phase brings the
//! pivot entry onto the real axis, then a real Givens rotation annihilates
//! it. Sweeps repeat until the off-diagonal Frobenius norm drops below the
//! threshold. Eigenvalues only; eigenvectors are never accumulated.

use num_complex::Complex64;

pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix (given as dense rows), unsorted.
///
/// The strict lower triangle is ignored; the upper triangle and real
/// diagonal define the matrix.
pub fn hermitian_eigenvalues(mut a: Vec<Vec<Complex64>>, tol: f64) -> Vec<f64> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    // Work on the full matrix for simplicity.
    for i in 0..n {
        for j in 0..i {
            a[i][j] = a[j][i].conj();
        }
        a[i][i] = Complex64::new(a[i][i].re, 0.0);
    }
    let scale = frobenius(&a).max(1.0);
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= tol * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    (0..n).map(|i| a[i][i].re).collect()
}

fn frobenius(a: &[Vec<Complex64>]) -> f64 {
    a.iter()
        .flat_map(|r| r.iter())
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn off_norm(a: &[Vec<Complex64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += 2.0 * a[i][j].norm_sqr();
        }
    }
    s.sqrt()
}

/// Unitary similarity that annihilates a[p][q].
fn rotate(a: &mut [Vec<Complex64>], p: usize, q: usize) {
    let apq = a[p][q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // J = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on the (p,q) plane; A ← JᴴAJ.
    let n = a.len();
    let phase_conj = phase.conj();
    for i in 0..n {
        let aip = a[i][p];
        let aiq = a[i][q];
        a[i][p] = c * aip - s * phase_conj * aiq;
        a[i][q] = s * aip + c * phase_conj * aiq;
    }
    for j in 0..n {
        let apj = a[p][j];
        let aqj = a[q][j];
        a[p][j] = c * apj - s * phase * aqj;
        a[q][j] = s * apj + c * phase * aqj;
    }
    // Clean up roundoff on the pair we just zeroed.
    a[p][q] = Complex64::new(0.0, 0.0);
    a[q][p] = Complex64::new(0.0, 0.0);
    a[p][p] = Complex64::new(a[p][p].re, 0.0);
    a[q][q] = Complex64::new(a[q][q].re, 0.0);
}
