//! Dense complex linear algebra sized for character-table work.
//!
//! Everything here targets small matrices (a few hundred rows at most), so
//! the implementations favor robustness and determinism over asymptotics:
//! partial-pivot LU, a cyclic Jacobi eigensolver for Hermitian matrices, and
//! a shifted-QR iteration on the Hessenberg form for general eigenvalues.

use crate::{Error, Result};
use num_complex::Complex64;
use std::ops::{Index, IndexMut};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = CMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged row lengths");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend_from_slice(row);
        }
        CMat { rows: r, cols: c, data }
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let converted: Vec<Vec<C64>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| C64::new(v, 0.0)).collect())
            .collect();
        CMat::from_rows(&converted)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [C64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conjugate(&self) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &CMat) -> CMat {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mat(v: &[C64], m: &CMat) -> Vec<C64> {
        assert_eq!(v.len(), m.rows);
        (0..m.cols)
            .map(|j| (0..m.rows).map(|i| v[i] * m[(i, j)]).sum())
            .collect()
    }

    pub fn kron(&self, other: &CMat) -> CMat {
        let mut out = CMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for r in 0..other.rows {
                    for s in 0..other.cols {
                        out[(i * other.rows + r, j * other.cols + s)] = a * other[(r, s)];
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> CMat {
        CMat::from_fn(self.rows, self.cols, |i, j| s * self[(i, j)])
    }

    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &CMat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Real parts, row by row. Use after checking `max_imag`.
    pub fn real_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|z| z.re).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for CMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for CMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|z| crate::fmt_complex(*z)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// LU decomposition with partial pivoting.
pub struct Lu {
    lu: CMat,
    pivots: Vec<usize>,
    parity: f64,
    singular: bool,
}

impl Lu {
    pub fn new(a: &CMat) -> Self {
        assert!(a.is_square());
        let n = a.nrows();
        let mut lu = a.clone();
        let mut pivots: Vec<usize> = (0..n).collect();
        let mut parity = 1.0;
        let mut singular = false;
        for k in 0..n {
            let mut best = k;
            let mut best_mag = lu[(k, k)].norm();
            for i in k + 1..n {
                let mag = lu[(i, k)].norm();
                if mag > best_mag {
                    best = i;
                    best_mag = mag;
                }
            }
            if best_mag == 0.0 {
                singular = true;
                continue;
            }
            if best != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(best, j)];
                    lu[(best, j)] = tmp;
                }
                pivots.swap(k, best);
                parity = -parity;
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let factor = lu[(i, k)] / pivot;
                lu[(i, k)] = factor;
                for j in k + 1..n {
                    let sub = factor * lu[(k, j)];
                    lu[(i, j)] -= sub;
                }
            }
        }
        Lu { lu, pivots, parity, singular }
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    pub fn determinant(&self) -> C64 {
        if self.singular {
            return ZERO;
        }
        let n = self.lu.nrows();
        let mut det = C64::new(self.parity, 0.0);
        for k in 0..n {
            det *= self.lu[(k, k)];
        }
        det
    }

    pub fn solve_vec(&self, b: &[C64]) -> Result<Vec<C64>> {
        if self.singular {
            return Err(Error::NumericalDegeneracy("singular matrix in solve".into()));
        }
        let n = self.lu.nrows();
        assert_eq!(b.len(), n);
        let mut x: Vec<C64> = self.pivots.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for k in 0..i {
                let sub = self.lu[(i, k)] * x[k];
                x[i] -= sub;
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let sub = self.lu[(i, k)] * x[k];
                x[i] -= sub;
            }
            x[i] /= self.lu[(i, i)];
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<CMat> {
        let n = self.lu.nrows();
        let mut inv = CMat::zeros(n, n);
        let mut e = vec![ZERO; n];
        for j in 0..n {
            e[j] = ONE;
            let col = self.solve_vec(&e)?;
            e[j] = ZERO;
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Ok(inv)
    }
}

pub fn inverse(a: &CMat) -> Result<CMat> {
    Lu::new(a).inverse()
}

pub fn determinant(a: &CMat) -> C64 {
    Lu::new(a).determinant()
}

/// Infinity-norm condition estimate `||A|| * ||A^-1||`.
pub fn condition_inf(a: &CMat, a_inv: &CMat) -> f64 {
    a.inf_norm() * a_inv.inf_norm()
}

/// Determinant of a real square matrix by partial-pivot elimination.
pub fn det_real(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut det = 1.0;
    for k in 0..n {
        let mut best = k;
        for i in k + 1..n {
            if a[i][k].abs() > a[best][k].abs() {
                best = i;
            }
        }
        if a[best][k] == 0.0 {
            return 0.0;
        }
        if best != k {
            a.swap(k, best);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let factor = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= factor * a[k][j];
            }
        }
    }
    det
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order with the matching unitary column
/// basis. Deterministic: the pivot sweep order is fixed.
pub fn hermitian_eigen(a: &CMat) -> (Vec<f64>, CMat) {
    assert!(a.is_square());
    let n = a.nrows();
    let mut m = a.clone();
    let mut v = CMat::identity(n);
    if n > 1 {
        let scale = m.max_abs().max(1.0);
        let tol = 1e-14 * scale;
        let max_sweeps = 60;
        for _ in 0..max_sweeps {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in p + 1..n {
                    off = off.max(m[(p, q)].norm());
                }
            }
            if off <= tol {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    jacobi_rotate(&mut m, &mut v, p, q, tol);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let evals: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&x, &y| evals[x].partial_cmp(&evals[y]).unwrap());
    let sorted_vals: Vec<f64> = order.iter().map(|&i| evals[i]).collect();
    let sorted_vecs = CMat::from_fn(n, n, |i, j| v[(i, order[j])]);
    (sorted_vals, sorted_vecs)
}

/// One Jacobi rotation zeroing the (p,q) entry of the Hermitian matrix `m`,
/// accumulated into `v`. The rotation is J = P*R where P = diag(1, conj(u))
/// strips the phase of m[p][q] and R is the classic symmetric 2x2 rotation.
fn jacobi_rotate(m: &mut CMat, v: &mut CMat, p: usize, q: usize, tol: f64) {
    let g = m[(p, q)];
    let mag = g.norm();
    if mag <= tol {
        return;
    }
    let u = g / mag;
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let zeta = (aqq - app) / (2.0 * mag);
    let t = if zeta == 0.0 {
        1.0
    } else {
        zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // J[p][p]=c, J[p][q]=s, J[q][p]=-s*conj(u), J[q][q]=c*conj(u)
    let n = m.nrows();
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -s * u.conj();
    let jqq = c * u.conj();

    // m <- J^* m J: columns first, then rows.
    for r in 0..n {
        let mp = m[(r, p)];
        let mq = m[(r, q)];
        m[(r, p)] = mp * jpp + mq * jqp;
        m[(r, q)] = mp * jpq + mq * jqq;
    }
    for cidx in 0..n {
        let mp = m[(p, cidx)];
        let mq = m[(q, cidx)];
        m[(p, cidx)] = jpp.conj() * mp + jqp.conj() * mq;
        m[(q, cidx)] = jpq.conj() * mp + jqq.conj() * mq;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = C64::new(m[(q, q)].re, 0.0);

    for r in 0..n {
        let vp = v[(r, p)];
        let vq = v[(r, q)];
        v[(r, p)] = vp * jpp + vq * jqp;
        v[(r, q)] = vp * jpq + vq * jqq;
    }
}

/// Eigenvalues of a general complex matrix: Householder reduction to upper
/// Hessenberg form followed by shifted QR iteration with Givens rotations.
pub fn eigenvalues(a: &CMat) -> Result<Vec<C64>> {
    assert!(a.is_square());
    let n = a.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let mut h = a.clone();
    hessenberg(&mut h);
    qr_eigenvalues(&mut h)
}

fn hessenberg(a: &mut CMat) {
    let n = a.nrows();
    for k in 0..n.saturating_sub(2) {
        // Householder vector from column k below the subdiagonal.
        let mut norm_sq = 0.0;
        for i in k + 1..n {
            norm_sq += a[(i, k)].norm_sqr();
        }
        let norm = norm_sq.sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0 == ZERO { ONE } else { x0 / x0.norm() };
        let alpha = -phase * norm;
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        // A <- (I - 2vv*/|v|^2) A (I - 2vv*/|v|^2)
        for j in k..n {
            let dot: C64 = (0..v.len()).map(|i| v[i].conj() * a[(k + 1 + i, j)]).sum();
            let factor = dot * 2.0 / vnorm_sq;
            for i in 0..v.len() {
                let sub = factor * v[i];
                a[(k + 1 + i, j)] -= sub;
            }
        }
        for i in 0..n {
            let dot: C64 = (0..v.len()).map(|r| a[(i, k + 1 + r)] * v[r]).sum();
            let factor = dot * 2.0 / vnorm_sq;
            for r in 0..v.len() {
                let sub = factor * v[r].conj();
                a[(i, k + 1 + r)] -= sub;
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
        }
        a[(k + 1, k)] = alpha;
    }
}

fn qr_eigenvalues(h: &mut CMat) -> Result<Vec<C64>> {
    let n = h.nrows();
    let mut evs = vec![ZERO; n];
    let mut hi = n; // active block is rows/cols [0, hi)
    let mut iter_budget = 60 * n;
    let eps = f64::EPSILON;
    while hi > 0 {
        // Zero negligible subdiagonals.
        for m in 1..hi {
            let bound = eps * (h[(m - 1, m - 1)].norm() + h[(m, m)].norm()).max(1e-300);
            if h[(m, m - 1)].norm() <= bound {
                h[(m, m - 1)] = ZERO;
            }
        }
        if hi == 1 || h[(hi - 1, hi - 2)] == ZERO {
            evs[hi - 1] = h[(hi - 1, hi - 1)];
            hi -= 1;
            continue;
        }
        if hi == 2 || h[(hi - 2, hi - 3)] == ZERO {
            let (l1, l2) = eig2(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            );
            evs[hi - 2] = l1;
            evs[hi - 1] = l2;
            hi -= 2;
            continue;
        }
        if iter_budget == 0 {
            return Err(Error::NumericalDegeneracy(
                "QR eigenvalue iteration failed to converge".into(),
            ));
        }
        iter_budget -= 1;

        // Start of the unreduced block ending at hi-1.
        let mut lo = hi - 1;
        while lo > 0 && h[(lo, lo - 1)] != ZERO {
            lo -= 1;
        }
        // Wilkinson shift: eigenvalue of the trailing 2x2 closest to the corner.
        let (l1, l2) = eig2(
            h[(hi - 2, hi - 2)],
            h[(hi - 2, hi - 1)],
            h[(hi - 1, hi - 2)],
            h[(hi - 1, hi - 1)],
        );
        let corner = h[(hi - 1, hi - 1)];
        let mu = if (l1 - corner).norm() <= (l2 - corner).norm() { l1 } else { l2 };

        for i in lo..hi {
            h[(i, i)] -= mu;
        }
        // QR via Givens on the Hessenberg block, then RQ.
        let mut rot = Vec::with_capacity(hi - lo);
        for i in lo..hi - 1 {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            apply_givens_left(h, i, c, s, i, hi);
            rot.push((c, s));
        }
        for (idx, &(c, s)) in rot.iter().enumerate() {
            let i = lo + idx;
            apply_givens_right(h, i, c, s, lo, (i + 2).min(hi));
        }
        for i in lo..hi {
            h[(i, i)] += mu;
        }
    }
    Ok(evs)
}

/// Eigenvalues of [[a, b], [c, d]].
fn eig2(a: C64, b: C64, c: C64, d: C64) -> (C64, C64) {
    let half = (a + d) * 0.5;
    let m = (a - d) * 0.5;
    let sq = (m * m + b * c).sqrt();
    (half + sq, half - sq)
}

/// Unitary rotation [[c, s], [-conj(s), c]] with real c zeroing b in (a, b).
fn givens(a: C64, b: C64) -> (f64, C64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, ZERO);
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, ONE);
    }
    let r = (an * an + bn * bn).sqrt();
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

fn apply_givens_left(h: &mut CMat, i: usize, c: f64, s: C64, col_from: usize, col_to: usize) {
    for j in col_from..col_to {
        let top = h[(i, j)];
        let bot = h[(i + 1, j)];
        h[(i, j)] = c * top + s * bot;
        h[(i + 1, j)] = -s.conj() * top + c * bot;
    }
}

fn apply_givens_right(h: &mut CMat, i: usize, c: f64, s: C64, row_from: usize, row_to: usize) {
    // Multiply by the adjoint rotation acting on columns (i, i+1).
    for r in row_from..row_to {
        let left = h[(r, i)];
        let right = h[(r, i + 1)];
        h[(r, i)] = c * left + s.conj() * right;
        h[(r, i + 1)] = -s * left + c * right;
    }
}

/// Compares two complex multisets within a per-element tolerance.
///
/// Primary pairing sorts both lists by (re, im); if that fails a greedy
/// nearest-match pass decides, which tolerates reordering from rounding.
pub fn multisets_close(a: &[C64], b: &[C64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let key = |z: &C64| (z.re, z.im);
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    sb.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    if sa.iter().zip(&sb).all(|(x, y)| (x - y).norm() <= tol) {
        return true;
    }
    let mut used = vec![false; sb.len()];
    'outer: for x in &sa {
        for (j, y) in sb.iter().enumerate() {
            if !used[j] && (x - y).norm() <= tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
