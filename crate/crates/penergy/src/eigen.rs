//! Dense symmetric eigendecomposition: Householder reduction to
//! tridiagonal form followed by implicit-shift QL iteration, with
//! optional accumulation of the orthogonal transform for eigenvector
//! queries.
//!
//! The routines follow the classical EISPACK tred2/tql2 scheme. The
//! eigenvalue-only path skips transform accumulation entirely.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// QL sweeps allowed per eigenvalue before giving up on the input.
const MAX_SWEEPS: usize = 30;

/// Default zero-classification tolerance, relative to [`Spectrum::scale`].
///
/// Chosen so that exact spectral zeros of integer matrices (perturbed by
/// roundoff at a few ulps of the scale) classify as zero while genuine
/// small eigenvalues of desk-scale graphs stay clear of the threshold.
/// Validated against the exact rational signature in `exact`.
pub fn default_zero_tol(n: usize) -> f64 {
    64.0 * f64::EPSILON * n as f64
}

/// Eigenvalues in non-increasing order plus the scale estimate the
/// tolerances are measured against.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    scale: f64,
}

impl Spectrum {
    /// Wraps a value list, sorting it non-increasing.
    pub fn new(mut values: Vec<f64>, scale: f64) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
        Self { values, scale }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Non-increasing eigenvalue list.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Spectral-radius estimate used for tolerance scaling.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        self.values[0]
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        *self.values.last().expect("spectrum is nonempty")
    }

    /// Counts of positive, zero and negative eigenvalues under the given
    /// relative tolerance: values above `tol * scale` count positive,
    /// below `-tol * scale` negative, the rest zero.
    pub fn inertia(&self, tol: f64) -> Inertia {
        debug_assert!(tol >= 0.0);
        let t = tol * self.scale;
        let mut inertia = Inertia::default();
        for &v in &self.values {
            if v > t {
                inertia.n_pos += 1;
            } else if v < -t {
                inertia.n_neg += 1;
            } else {
                inertia.n_zero += 1;
            }
        }
        inertia
    }
}

/// Signature of a symmetric matrix: counts of positive, zero and negative
/// eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }
}

/// All eigenvalues of `m`, sorted non-increasing.
pub fn eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum> {
    let (d, _) = decompose(m, false)?;
    Ok(Spectrum { values: d, scale: m.scale() })
}

/// Splits `m` into its positive and negative semidefinite parts
/// `(B, C)` with `m = B - C` and `BC = CB = 0`, built from an
/// orthonormal eigenbasis. Eigenvalues within `tol * scale` of zero are
/// assigned to neither part.
pub fn spectral_parts(m: &SymmetricMatrix, tol: f64) -> Result<(SymmetricMatrix, SymmetricMatrix)> {
    let n = m.order();
    let (d, v) = decompose(m, true)?;
    let v = v.expect("vectors were requested");
    let t = tol * m.scale();
    let b = SymmetricMatrix::from_fn(n, |i, j| {
        d.iter()
            .enumerate()
            .filter(|(_, &lam)| lam > t)
            .map(|(k, &lam)| lam * v[i * n + k] * v[j * n + k])
            .sum()
    })?;
    let c = SymmetricMatrix::from_fn(n, |i, j| {
        d.iter()
            .enumerate()
            .filter(|(_, &lam)| lam < -t)
            .map(|(k, &lam)| -lam * v[i * n + k] * v[j * n + k])
            .sum()
    })?;
    Ok((b, c))
}

/// Eigenvalues (non-increasing) and, when requested, the matrix whose
/// column `k` is the eigenvector for the k-th eigenvalue.
fn decompose(m: &SymmetricMatrix, vectors: bool) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let n = m.order();
    let mut v = m.as_slice().to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e, n, vectors);
    ql_implicit_shift(&mut d, &mut e, &mut v, n, vectors)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[b].partial_cmp(&d[a]).expect("eigenvalues are finite"));
    let sorted: Vec<f64> = order.iter().map(|&k| d[k]).collect();
    let vecs = vectors.then(|| {
        let mut w = vec![0.0; n * n];
        for (col, &k) in order.iter().enumerate() {
            for row in 0..n {
                w[row * n + col] = v[row * n + k];
            }
        }
        w
    });
    Ok((sorted, vecs))
}

/// Householder reduction of the symmetric matrix stored in `v` to
/// tridiagonal form: diagonal in `d`, subdiagonal in `e[1..]`. When
/// `accumulate` is set, `v` is overwritten with the orthogonal transform.
fn tridiagonalize(v: &mut [f64], d: &mut [f64], e: &mut [f64], n: usize, accumulate: bool) {
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
    }

    for i in (1..n).rev() {
        // Scale to avoid under/overflow in the norm of the row.
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
                v[j * n + i] = 0.0;
            }
        } else {
            // Generate the Householder vector.
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }

            // Apply the similarity transformation to the leading block.
            for j in 0..i {
                f = d[j];
                v[j * n + i] = f;
                g = e[j] + v[j * n + j] * f;
                for k in (j + 1)..i {
                    g += v[k * n + j] * d[k];
                    e[k] += v[k * n + j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k * n + j] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
            }
        }
        d[i] = h;
    }

    if accumulate {
        for i in 0..n.saturating_sub(1) {
            v[(n - 1) * n + i] = v[i * n + i];
            v[i * n + i] = 1.0;
            let h = d[i + 1];
            if h != 0.0 {
                for k in 0..=i {
                    d[k] = v[k * n + i + 1] / h;
                }
                for j in 0..=i {
                    let mut g = 0.0;
                    for k in 0..=i {
                        g += v[k * n + i + 1] * v[k * n + j];
                    }
                    for k in 0..=i {
                        v[k * n + j] -= g * d[k];
                    }
                }
            }
            for k in 0..=i {
                v[k * n + i + 1] = 0.0;
            }
        }
        for j in 0..n {
            d[j] = v[(n - 1) * n + j];
            v[(n - 1) * n + j] = 0.0;
        }
        v[(n - 1) * n + n - 1] = 1.0;
    } else {
        // the transformations never move the diagonal of the reduced matrix
        for j in 0..n {
            d[j] = v[j * n + j];
        }
    }
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on the tridiagonal form, rotating the
/// accumulated transform alongside when `vectors` is set.
fn ql_implicit_shift(
    d: &mut [f64],
    e: &mut [f64],
    v: &mut [f64],
    n: usize,
    vectors: bool,
) -> Result<()> {
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::IterationLimit { index: l, sweeps: MAX_SWEEPS });
                }

                // Implicit Wilkinson-style shift.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // One implicit QL sweep from m-1 down to l.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    if vectors {
                        for k in 0..n {
                            h = v[k * n + i + 1];
                            v[k * n + i + 1] = s * v[k * n + i] + c * h;
                            v[k * n + i] = c * v[k * n + i] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn complete(n: usize) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { 1.0 }).unwrap()
    }

    fn path(n: usize) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(n, |i, j| if j == i + 1 { 1.0 } else { 0.0 }).unwrap()
    }

    #[test]
    fn k3_spectrum() {
        // char. poly of J - I: (lambda - 2)(lambda + 1)^2
        let s = eigenvalues(&complete(3)).unwrap();
        assert_abs_diff_eq!(s.values()[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values()[1], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values()[2], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn one_by_one() {
        let m = SymmetricMatrix::from_flat(1, vec![-3.25]).unwrap();
        let s = eigenvalues(&m).unwrap();
        assert_eq!(s.values(), &[-3.25]);
    }

    #[test]
    fn p3_spectrum_matches_closed_form() {
        // char. poly lambda^3 - 2 lambda; closed form 2 cos(k pi / 4)
        let s = eigenvalues(&path(3)).unwrap();
        let sqrt2 = 2.0f64.sqrt();
        assert_abs_diff_eq!(s.values()[0], sqrt2, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values()[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.values()[2], -sqrt2, epsilon = 1e-12);
        for (k, &v) in s.values().iter().enumerate() {
            let closed = 2.0 * (std::f64::consts::PI * (k + 1) as f64 / 4.0).cos();
            assert_abs_diff_eq!(v, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn trace_and_moment_identities() {
        let m = SymmetricMatrix::from_rows(&[
            vec![1.5, -0.25, 2.0],
            vec![-0.25, 0.0, 1.0],
            vec![2.0, 1.0, -3.0],
        ])
        .unwrap();
        let s = eigenvalues(&m).unwrap();
        let sum: f64 = s.values().iter().sum();
        let sq: f64 = s.values().iter().map(|v| v * v).sum();
        assert_abs_diff_eq!(sum, m.trace(), epsilon = 1e-9 * 3.0 * s.scale());
        assert_abs_diff_eq!(sq, m.frobenius_sq(), epsilon = 1e-9 * s.scale() * s.scale());
    }

    #[test]
    fn inertia_classification() {
        let k3 = eigenvalues(&complete(3)).unwrap();
        assert_eq!(k3.inertia(1e-12), Inertia { n_pos: 1, n_zero: 0, n_neg: 2 });

        let p3 = eigenvalues(&path(3)).unwrap();
        assert_eq!(p3.inertia(default_zero_tol(3)), Inertia { n_pos: 1, n_zero: 1, n_neg: 1 });

        let z = eigenvalues(&SymmetricMatrix::zeros(4).unwrap()).unwrap();
        assert_eq!(z.inertia(default_zero_tol(4)), Inertia { n_pos: 0, n_zero: 4, n_neg: 0 });
    }

    #[test]
    fn spectral_parts_of_k2() {
        // eigenvectors (1, +-1)/sqrt(2) give rank-1 projectors
        let k2 = complete(2);
        let (b, c) = spectral_parts(&k2, default_zero_tol(2)).unwrap();
        for (i, j, want) in [(0, 0, 0.5), (0, 1, 0.5), (1, 1, 0.5)] {
            assert_abs_diff_eq!(b.get(i, j), want, epsilon = 1e-12);
        }
        for (i, j, want) in [(0, 0, 0.5), (0, 1, -0.5), (1, 1, 0.5)] {
            assert_abs_diff_eq!(c.get(i, j), want, epsilon = 1e-12);
        }
    }

    #[test]
    fn spectral_parts_identities() {
        let m = SymmetricMatrix::from_rows(&[
            vec![0.0, 1.0, 0.5, -1.0],
            vec![1.0, 0.0, 1.0, 0.0],
            vec![0.5, 1.0, 0.0, 1.0],
            vec![-1.0, 0.0, 1.0, 0.0],
        ])
        .unwrap();
        let scale = m.scale();
        let (b, c) = spectral_parts(&m, default_zero_tol(4)).unwrap();
        let n = m.order();

        // A = B - C
        let diff = SymmetricMatrix::from_fn(n, |i, j| b.get(i, j) - c.get(i, j)).unwrap();
        assert!(diff.max_abs_diff(&m) <= 1e-9 * scale);

        // BC = 0
        let mut max_prod = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let p: f64 = (0..n).map(|k| b.get(i, k) * c.get(k, j)).sum();
                max_prod = max_prod.max(p.abs());
            }
        }
        assert!(max_prod <= 1e-9 * scale * scale);

        // B, C positive semidefinite
        let sb = eigenvalues(&b).unwrap();
        let sc = eigenvalues(&c).unwrap();
        assert!(sb.min() >= -1e-9 * scale);
        assert!(sc.min() >= -1e-9 * scale);
    }

    #[test]
    fn psd_input_has_trivial_negative_part() {
        // Gram matrix, positive semidefinite by construction.
        let m = SymmetricMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let (b, c) = spectral_parts(&m, default_zero_tol(2)).unwrap();
        assert!(b.max_abs_diff(&m) <= 1e-9 * m.scale());
        assert!(c.frobenius_sq().sqrt() <= 1e-9 * m.scale());
    }
}
