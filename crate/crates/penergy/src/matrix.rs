//! Dense real symmetric matrices and the real embedding of complex
//! Hermitian matrices.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};

/// Hard cap on the order accepted by the dense eigensolver path.
pub const ORDER_CAP: usize = 4096;

/// Dense real symmetric matrix, row-major storage.
///
/// Symmetry is enforced at construction; every operation in the crate
/// assumes it and returns matrices that satisfy it exactly.
#[derive(Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds from full row-major data, checking exact symmetry.
    pub fn from_flat(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 || n > ORDER_CAP {
            return Err(Error::OrderOutOfRange { n, cap: ORDER_CAP });
        }
        assert_eq!(data.len(), n * n, "flat data length must be n*n");
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                if a != b {
                    return Err(Error::NotSymmetric { i, j, a, b });
                }
            }
        }
        Ok(Self { n, data })
    }

    /// Builds from rows, checking exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "rows must form a square matrix");
            data.extend_from_slice(row);
        }
        Self::from_flat(n, data)
    }

    /// Builds the matrix entry-wise from `f(i, j)` with `i <= j`, mirroring
    /// the strict upper triangle so the result is exactly symmetric.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        if n == 0 || n > ORDER_CAP {
            return Err(Error::OrderOutOfRange { n, cap: ORDER_CAP });
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(Self { n, data })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 || n > ORDER_CAP {
            return Err(Error::OrderOutOfRange { n, cap: ORDER_CAP });
        }
        Ok(Self { n, data: vec![0.0; n * n] })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Sum of squared entries, i.e. the squared Frobenius norm.
    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    /// Maximum row sum of absolute entries; an upper bound on the spectral
    /// radius, used as the scale for all relative tolerances.
    pub fn scale(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// True when every entry is an exact integer.
    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|x| x.fract() == 0.0 && x.abs() < 2f64.powi(53))
    }

    /// Restriction to the rows and columns in `keep`, order preserved.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<SymmetricMatrix> {
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&bad) = keep.iter().find(|&&k| k >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        SymmetricMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]))
    }

    /// Parses the matrix text format: first line `n`, then `n` rows of
    /// whitespace-separated values. Integer inputs must be exactly
    /// symmetric; floating inputs are accepted within 1e-12 of the largest
    /// entry and symmetrized.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::MatrixParse("empty input".into()))?
            .parse()
            .map_err(|e| Error::MatrixParse(format!("bad order line: {e}")))?;
        if n == 0 || n > ORDER_CAP {
            return Err(Error::OrderOutOfRange { n, cap: ORDER_CAP });
        }
        let mut data = Vec::with_capacity(n * n);
        let mut all_integer = true;
        for _ in 0..n * n {
            let tok = tokens
                .next()
                .ok_or_else(|| Error::MatrixParse(format!("expected {} entries", n * n)))?;
            all_integer &= !tok.contains(['.', 'e', 'E']);
            let v: f64 = tok
                .parse()
                .map_err(|e| Error::MatrixParse(format!("bad entry {tok:?}: {e}")))?;
            data.push(v);
        }
        if tokens.next().is_some() {
            return Err(Error::MatrixParse("trailing entries after matrix".into()));
        }
        let max_abs = data.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                let tol = if all_integer { 0.0 } else { 1e-12 * max_abs };
                if (a - b).abs() > tol {
                    return Err(Error::NotSymmetric { i, j, a, b });
                }
                let avg = 0.5 * (a + b);
                data[i * n + j] = avg;
                data[j * n + i] = avg;
            }
        }
        Ok(Self { n, data })
    }

    pub fn read_text_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_text(&std::fs::read_to_string(path)?)
    }

    /// Writes the matrix text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format!("{}", self.get(i, j))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Max-norm distance to another matrix of the same order.
    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymmetricMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format!("{:.4}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Complex Hermitian matrix stored as symmetric real part plus
/// antisymmetric imaginary part.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    n: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl HermitianMatrix {
    /// Builds from row-major real and imaginary parts; `re` must be
    /// symmetric and `im` antisymmetric (so the matrix equals its
    /// conjugate transpose).
    pub fn from_parts(n: usize, re: Vec<f64>, im: Vec<f64>) -> Result<Self> {
        if n == 0 || n > ORDER_CAP / 2 {
            return Err(Error::OrderOutOfRange { n, cap: ORDER_CAP / 2 });
        }
        assert_eq!(re.len(), n * n);
        assert_eq!(im.len(), n * n);
        for i in 0..n {
            for j in i..n {
                if re[i * n + j] != re[j * n + i] {
                    return Err(Error::NotSymmetric {
                        i,
                        j,
                        a: re[i * n + j],
                        b: re[j * n + i],
                    });
                }
                if im[i * n + j] != -im[j * n + i] {
                    return Err(Error::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(Self { n, re, im })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn re(&self, i: usize, j: usize) -> f64 {
        self.re[i * self.n + j]
    }

    pub fn im(&self, i: usize, j: usize) -> f64 {
        self.im[i * self.n + j]
    }

    /// Real symmetric embedding `[[X, -Y], [Y, X]]` of `X + iY`.
    ///
    /// Its spectrum is the spectrum of the Hermitian matrix with every
    /// multiplicity doubled, so each p-energy of the embedding is exactly
    /// twice the corresponding p-energy of the original.
    pub fn embed(&self) -> SymmetricMatrix {
        let n = self.n;
        SymmetricMatrix::from_fn(2 * n, |i, j| {
            let (bi, ii) = (i / n, i % n);
            let (bj, ij) = (j / n, j % n);
            match (bi, bj) {
                (0, 0) | (1, 1) => self.re(ii, ij),
                (0, 1) => -self.im(ii, ij),
                (1, 0) => self.im(ii, ij),
                _ => unreachable!(),
            }
        })
        .expect("embedding order is valid by construction")
    }
}
