//! Exact signature of integer symmetric matrices via rational symmetric
//! elimination. Serves as the oracle that validates the floating-point
//! zero-classification tolerance.

use crate::eigen::Inertia;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Order cap for the exact path.
pub const EXACT_ORDER_CAP: usize = 64;

/// Reduced fraction over i128 with positive denominator. All arithmetic
/// is checked; exceeding i128 reports [`Error::ExactOverflow`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Ratio {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Ratio {
    const ZERO: Ratio = Ratio { num: 0, den: 1 };

    fn from_int(v: i128) -> Ratio {
        Ratio { num: v, den: 1 }
    }

    fn reduce(num: i128, den: i128) -> Ratio {
        debug_assert!(den != 0);
        let g = gcd(num, den);
        let sign = if den < 0 { -1 } else { 1 };
        Ratio { num: sign * num / g, den: sign * den / g }
    }

    fn is_zero(&self) -> bool {
        self.num == 0
    }

    fn signum(&self) -> i32 {
        self.num.signum() as i32
    }

    fn sub(self, other: Ratio) -> Result<Ratio> {
        let a = self.num.checked_mul(other.den).ok_or(Error::ExactOverflow)?;
        let b = other.num.checked_mul(self.den).ok_or(Error::ExactOverflow)?;
        let num = a.checked_sub(b).ok_or(Error::ExactOverflow)?;
        let den = self.den.checked_mul(other.den).ok_or(Error::ExactOverflow)?;
        Ok(Ratio::reduce(num, den))
    }

    fn mul(self, other: Ratio) -> Result<Ratio> {
        // Cross-reduce first to keep intermediates small.
        let g1 = gcd(self.num, other.den);
        let g2 = gcd(other.num, self.den);
        let num = (self.num / g1).checked_mul(other.num / g2).ok_or(Error::ExactOverflow)?;
        let den = (self.den / g2).checked_mul(other.den / g1).ok_or(Error::ExactOverflow)?;
        Ok(Ratio::reduce(num, den))
    }

    fn div(self, other: Ratio) -> Result<Ratio> {
        debug_assert!(!other.is_zero());
        self.mul(Ratio { num: other.den, den: other.num })
    }

    /// Comparison by absolute value, for pivot selection.
    fn abs_cmp(&self, other: &Ratio) -> std::cmp::Ordering {
        let a = (self.num.unsigned_abs()) as u128 * other.den as u128;
        let b = (other.num.unsigned_abs()) as u128 * self.den as u128;
        a.cmp(&b)
    }
}

/// Exact inertia of an integer symmetric matrix, computed by LDL^T-style
/// symmetric congruence elimination over the rationals with symmetric
/// pivoting. Congruence preserves the signature, so the signs of the
/// pivots give the exact counts.
pub fn exact_inertia(m: &SymmetricMatrix) -> Result<Inertia> {
    let n = m.order();
    if n > EXACT_ORDER_CAP {
        return Err(Error::OrderOutOfRange { n, cap: EXACT_ORDER_CAP });
    }
    let mut a = vec![Ratio::ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v.fract() != 0.0 || v.abs() >= 2f64.powi(53) {
                return Err(Error::NonIntegerEntry { i, j, value: v });
            }
            a[i * n + j] = Ratio::from_int(v as i128);
        }
    }

    let mut inertia = Inertia::default();
    let mut k = 0;
    while k < n {
        // Largest-magnitude diagonal pivot in the trailing block.
        let pivot = (k..n)
            .filter(|&j| !a[j * n + j].is_zero())
            .max_by(|&x, &y| a[x * n + x].abs_cmp(&a[y * n + y]));

        if let Some(p) = pivot {
            swap_sym(&mut a, n, k, p);
            let d = a[k * n + k];
            if d.signum() > 0 {
                inertia.n_pos += 1;
            } else {
                inertia.n_neg += 1;
            }
            for i in (k + 1)..n {
                if a[i * n + k].is_zero() {
                    continue;
                }
                let f = a[i * n + k].div(d)?;
                for j in (k + 1)..n {
                    let delta = f.mul(a[k * n + j])?;
                    a[i * n + j] = a[i * n + j].sub(delta)?;
                }
                a[i * n + k] = Ratio::ZERO;
                a[k * n + i] = Ratio::ZERO;
            }
            k += 1;
        } else {
            // Zero diagonal throughout the trailing block. Any nonzero
            // off-diagonal pair (i, j) forms a [[0, a], [a, 0]] pivot
            // contributing one positive and one negative eigenvalue.
            let mut off = None;
            'search: for i in k..n {
                for j in (i + 1)..n {
                    if !a[i * n + j].is_zero() {
                        off = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((pi, pj)) = off else {
                inertia.n_zero += n - k;
                break;
            };
            // pj > pi >= k, so the first swap cannot move row pj.
            swap_sym(&mut a, n, k, pi);
            swap_sym(&mut a, n, k + 1, pj);
            debug_assert!(!a[k * n + k + 1].is_zero());
            let b = a[k * n + k + 1];
            inertia.n_pos += 1;
            inertia.n_neg += 1;
            for i in (k + 2)..n {
                let u = a[i * n + k];
                let w = a[i * n + k + 1];
                if u.is_zero() && w.is_zero() {
                    continue;
                }
                // Subtract [u w] * inv([[0,b],[b,0]]) * rows(k, k+1):
                // inv = [[0, 1/b], [1/b, 0]].
                let fu = u.div(b)?;
                let fw = w.div(b)?;
                for j in (k + 2)..n {
                    let t1 = fw.mul(a[k * n + j])?;
                    let t2 = fu.mul(a[(k + 1) * n + j])?;
                    a[i * n + j] = a[i * n + j].sub(t1)?.sub(t2)?;
                }
                a[i * n + k] = Ratio::ZERO;
                a[k * n + i] = Ratio::ZERO;
                a[i * n + k + 1] = Ratio::ZERO;
                a[(k + 1) * n + i] = Ratio::ZERO;
            }
            k += 2;
        }
    }
    debug_assert_eq!(inertia.total(), n);
    Ok(inertia)
}

fn swap_sym(a: &mut [Ratio], n: usize, x: usize, y: usize) {
    if x == y {
        return;
    }
    for j in 0..n {
        a.swap(x * n + j, y * n + j);
    }
    for i in 0..n {
        a.swap(i * n + x, i * n + y);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(n, |i, j| {
            let e = edges.iter().any(|&(u, v)| (u, v) == (i, j) || (v, u) == (i, j));
            if e {
                1.0
            } else {
                0.0
            }
        })
        .unwrap()
    }

    #[test]
    fn p3_signature() {
        // char. poly lambda^3 - 2 lambda: one positive, one zero, one negative
        let m = adjacency(3, &[(0, 1), (1, 2)]);
        assert_eq!(exact_inertia(&m).unwrap(), Inertia { n_pos: 1, n_zero: 1, n_neg: 1 });
    }

    #[test]
    fn k4_signature() {
        // J - I spectrum {3, -1, -1, -1}
        let edges: Vec<_> = (0..4).flat_map(|i| ((i + 1)..4).map(move |j| (i, j))).collect();
        let m = adjacency(4, &edges);
        assert_eq!(exact_inertia(&m).unwrap(), Inertia { n_pos: 1, n_zero: 0, n_neg: 3 });
    }

    #[test]
    fn zero_matrix_signature() {
        let m = SymmetricMatrix::zeros(5).unwrap();
        assert_eq!(exact_inertia(&m).unwrap(), Inertia { n_pos: 0, n_zero: 5, n_neg: 0 });
    }

    #[test]
    fn zero_diagonal_off_pivot() {
        // [[0,2],[2,0]] has eigenvalues +-2.
        let m = SymmetricMatrix::from_rows(&[vec![0.0, 2.0], vec![2.0, 0.0]]).unwrap();
        assert_eq!(exact_inertia(&m).unwrap(), Inertia { n_pos: 1, n_zero: 0, n_neg: 1 });
    }

    #[test]
    fn rejects_non_integer() {
        let m = SymmetricMatrix::from_rows(&[vec![0.5]]).unwrap();
        assert!(matches!(exact_inertia(&m), Err(Error::NonIntegerEntry { .. })));
    }

    #[test]
    fn matches_float_inertia_on_small_integers() {
        use crate::eigen::{default_zero_tol, eigenvalues};
        // a few hand-picked integer matrices with zero eigenvalues
        let cases: Vec<SymmetricMatrix> = vec![
            adjacency(4, &[(0, 1), (1, 2), (2, 3)]),
            adjacency(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            SymmetricMatrix::from_rows(&[
                vec![1.0, 1.0, 0.0],
                vec![1.0, 1.0, 0.0],
                vec![0.0, 0.0, -2.0],
            ])
            .unwrap(),
        ];
        for m in cases {
            let exact = exact_inertia(&m).unwrap();
            let float = eigenvalues(&m).unwrap().inertia(default_zero_tol(m.order()));
            assert_eq!(exact, float);
        }
    }
}
