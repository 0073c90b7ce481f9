//! Positive and negative p-energies, Schatten norms, and the
//! Hölder/scaling bounds that relate energies at different exponents.

use serde::Serialize;

use crate::eigen::{Inertia, Spectrum};
use crate::error::{Error, Result};

/// Positive, negative and total p-energy of a spectrum together with the
/// sign classification that produced them.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EnergyReport {
    pub p: f64,
    pub e_pos: f64,
    pub e_neg: f64,
    pub e_total: f64,
    #[serde(flatten)]
    pub inertia: Inertia,
}

/// |x|^p with exact handling of x = 0 (a zero never contributes, even
/// for p where powf would return NaN on negative bases).
#[inline]
fn abs_pow(x: f64, p: f64) -> f64 {
    let a = x.abs();
    if a == 0.0 {
        0.0
    } else {
        a.powf(p)
    }
}

/// Sums lambda^p over eigenvalues classified positive and |lambda|^p over
/// eigenvalues classified negative. Zero-classified eigenvalues (those
/// within `tol * scale` of zero) contribute to neither side.
pub fn p_energy(s: &Spectrum, p: f64, tol: f64) -> Result<EnergyReport> {
    if p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    let t = tol * s.scale();
    let mut e_pos = 0.0;
    let mut e_neg = 0.0;
    let mut inertia = Inertia::default();
    for &v in s.values() {
        if v > t {
            e_pos += abs_pow(v, p);
            inertia.n_pos += 1;
        } else if v < -t {
            e_neg += abs_pow(v, p);
            inertia.n_neg += 1;
        } else {
            inertia.n_zero += 1;
        }
    }
    Ok(EnergyReport { p, e_pos, e_neg, e_total: e_pos + e_neg, inertia })
}

/// p-energies with an explicit sign split: the largest `n_pos` values are
/// positive and the smallest `n_neg` negative. Used to re-evaluate
/// near-threshold slacks with the exact rational signature.
pub fn p_energy_with_inertia(s: &Spectrum, p: f64, inertia: Inertia) -> Result<EnergyReport> {
    if p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    assert_eq!(inertia.total(), s.len(), "inertia must classify every eigenvalue");
    let vals = s.values();
    let e_pos: f64 = vals[..inertia.n_pos].iter().map(|&v| abs_pow(v, p)).sum();
    let e_neg: f64 = vals[s.len() - inertia.n_neg..].iter().map(|&v| abs_pow(v, p)).sum();
    Ok(EnergyReport { p, e_pos, e_neg, e_total: e_pos + e_neg, inertia })
}

/// Schatten p-norm `(sum |lambda_i|^p)^(1/p)`; for Hermitian input the
/// singular values are the absolute eigenvalues.
pub fn schatten_norm(s: &Spectrum, p: f64) -> Result<f64> {
    if p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    let total: f64 = s.values().iter().map(|&v| abs_pow(v, p)).sum();
    Ok(total.powf(1.0 / p))
}

/// p-th power of the Schatten p-norm, the quantity the pinching
/// inequality is stated for.
pub fn schatten_norm_pow(s: &Spectrum, p: f64) -> Result<f64> {
    if p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    Ok(s.values().iter().map(|&v| abs_pow(v, p)).sum())
}

/// Both sides of the norm inequality
/// `||x||_p <= ||x||_q <= n^(1/q - 1/p) ||x||_p` for `1 <= q <= p`, and
/// whether `||x||_q` lies between them up to 1e-12 relative slack.
pub fn pnorm_sandwich(x: &[f64], p: f64, q: f64) -> Result<(f64, f64, bool)> {
    if q < 1.0 || q > p {
        return Err(Error::InvalidExponentPair { p, q });
    }
    let norm = |r: f64| -> f64 {
        x.iter().map(|&v| abs_pow(v, r)).sum::<f64>().powf(1.0 / r)
    };
    let norm_p = norm(p);
    let norm_q = norm(q);
    let lower = norm_p;
    let upper = (x.len() as f64).powf(1.0 / q - 1.0 / p) * norm_p;
    let slack = 1e-12;
    let holds = norm_q >= lower * (1.0 - slack) && norm_q <= upper * (1.0 + slack);
    Ok((lower, upper, holds))
}

/// Interval bounds on E_p derived from a report at a smaller exponent q:
/// `(E_q)^(p/q) / (n_sign)^(p/q - 1) <= E_p <= (E_q)^(p/q)`, separately
/// for the positive and negative sides. An empty side yields (0, 0).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingBounds {
    pub lower_pos: f64,
    pub upper_pos: f64,
    pub lower_neg: f64,
    pub upper_neg: f64,
}

pub fn scaling_bounds(report_q: &EnergyReport, p: f64) -> Result<ScalingBounds> {
    let q = report_q.p;
    if p < q {
        return Err(Error::ExponentNotAbove { p, q });
    }
    let r = p / q;
    let side = |e_q: f64, count: usize| -> (f64, f64) {
        if count == 0 {
            (0.0, 0.0)
        } else {
            let upper = e_q.powf(r);
            (upper / (count as f64).powf(r - 1.0), upper)
        }
    };
    let (lower_pos, upper_pos) = side(report_q.e_pos, report_q.inertia.n_pos);
    let (lower_neg, upper_neg) = side(report_q.e_neg, report_q.inertia.n_neg);
    Ok(ScalingBounds { lower_pos, upper_pos, lower_neg, upper_neg })
}

/// Graph-energy upper bounds `((n-1)^p, (n/2)^p)` for order n and p >= 2.
pub fn energy_upper_bounds(n: usize, p: f64) -> (f64, f64) {
    debug_assert!(n >= 1 && p >= 2.0);
    (((n - 1) as f64).powf(p), (n as f64 / 2.0).powf(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{default_zero_tol, eigenvalues};
    use crate::matrix::SymmetricMatrix;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn spectrum_of(edges: &[(usize, usize)], n: usize) -> Spectrum {
        let m = SymmetricMatrix::from_fn(n, |i, j| {
            if edges.iter().any(|&(u, v)| (u, v) == (i, j) || (v, u) == (i, j)) {
                1.0
            } else {
                0.0
            }
        })
        .unwrap();
        eigenvalues(&m).unwrap()
    }

    fn complete_spectrum(n: usize) -> Spectrum {
        let edges: Vec<_> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        spectrum_of(&edges, n)
    }

    #[test]
    fn complete_graph_energies() {
        // K_n spectrum {n-1, (-1) x (n-1)}
        for n in [3, 5, 7] {
            let r = p_energy(&complete_spectrum(n), 4.0, default_zero_tol(n)).unwrap();
            assert_relative_eq!(r.e_pos, ((n - 1) as f64).powi(4), max_relative = 1e-12);
            assert_relative_eq!(r.e_neg, (n - 1) as f64, max_relative = 1e-12);
            assert_eq!(r.e_total, r.e_pos + r.e_neg);
        }
    }

    #[test]
    fn path_energies() {
        let p3 = spectrum_of(&[(0, 1), (1, 2)], 3);
        let r = p_energy(&p3, 4.0, default_zero_tol(3)).unwrap();
        assert_abs_diff_eq!(r.e_pos, 4.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r.e_neg, 4.0, epsilon = 1e-10);

        // golden-ratio spectrum of P_4: phi^4 + phi^-4 = 7
        let p4 = spectrum_of(&[(0, 1), (1, 2), (2, 3)], 4);
        let r = p_energy(&p4, 4.0, default_zero_tol(4)).unwrap();
        assert_abs_diff_eq!(r.e_neg, 7.0, epsilon = 1e-10);
    }

    #[test]
    fn two_energy_counts_edges() {
        // sum of lambda^2 equals twice the edge count
        let cases: Vec<(Vec<(usize, usize)>, usize)> =
            vec![(vec![(0, 1), (1, 2), (0, 2)], 3), (vec![(0, 1), (1, 2), (2, 3)], 4)];
        for (edges, n) in cases {
            let s = spectrum_of(&edges, n);
            let r = p_energy(&s, 2.0, default_zero_tol(n)).unwrap();
            assert_abs_diff_eq!(r.e_pos + r.e_neg, 2.0 * edges.len() as f64, epsilon = 1e-8);
        }
    }

    #[test]
    fn rejects_sub_unit_exponent() {
        let s = complete_spectrum(3);
        assert!(matches!(p_energy(&s, 0.5, 0.0), Err(Error::InvalidExponent { .. })));
        assert!(matches!(schatten_norm(&s, 0.99), Err(Error::InvalidExponent { .. })));
    }

    #[test]
    fn schatten_values() {
        let k2 = complete_spectrum(2);
        assert_relative_eq!(schatten_norm(&k2, 2.0).unwrap(), 2f64.sqrt(), max_relative = 1e-12);

        let k3 = complete_spectrum(3);
        assert_relative_eq!(schatten_norm(&k3, 1.0).unwrap(), 4.0, max_relative = 1e-12);

        // p = 2 equals the Frobenius norm of the originating matrix
        let m = SymmetricMatrix::from_rows(&[vec![1.0, -2.0], vec![-2.0, 0.5]]).unwrap();
        let s = eigenvalues(&m).unwrap();
        assert_relative_eq!(
            schatten_norm(&s, 2.0).unwrap(),
            m.frobenius_sq().sqrt(),
            max_relative = 1e-9
        );
    }

    #[test]
    fn sandwich_examples() {
        // constant vector saturates the upper side
        let ones = vec![1.0; 6];
        let (lo, hi, holds) = pnorm_sandwich(&ones, 3.0, 1.5).unwrap();
        assert!(holds);
        let norm_q: f64 = ones.iter().map(|v| v.abs().powf(1.5)).sum::<f64>().powf(1.0 / 1.5);
        assert_relative_eq!(norm_q, hi, max_relative = 1e-12);
        assert!(lo <= norm_q);

        // single support saturates the lower side
        let e1 = [1.0, 0.0, 0.0, 0.0];
        let (lo, _, holds) = pnorm_sandwich(&e1, 4.0, 2.0).unwrap();
        assert!(holds);
        assert_relative_eq!(lo, 1.0, max_relative = 1e-12);

        // direct arithmetic on (3, 4)
        let (lo, hi, holds) = pnorm_sandwich(&[3.0, 4.0], 2.0, 1.0).unwrap();
        assert!(holds);
        assert_relative_eq!(lo, 5.0, max_relative = 1e-12);
        assert_relative_eq!(hi, 2f64.sqrt() * 5.0, max_relative = 1e-12);

        assert!(pnorm_sandwich(&[1.0], 1.0, 2.0).is_err());
        assert!(pnorm_sandwich(&[1.0], 2.0, 0.5).is_err());
    }

    #[test]
    fn scaling_bound_equalities() {
        // K_3 has a single positive eigenvalue, forcing equality at p=4
        let k3 = complete_spectrum(3);
        let rq = p_energy(&k3, 2.0, default_zero_tol(3)).unwrap();
        assert_abs_diff_eq!(rq.e_pos, 4.0, epsilon = 1e-10);
        let b = scaling_bounds(&rq, 4.0).unwrap();
        assert_relative_eq!(b.lower_pos, 16.0, max_relative = 1e-10);
        assert_relative_eq!(b.upper_pos, 16.0, max_relative = 1e-10);

        // P_3 negative side: single negative eigenvalue, bounds pin E_4^- = 4
        let p3 = spectrum_of(&[(0, 1), (1, 2)], 3);
        let rq = p_energy(&p3, 2.0, default_zero_tol(3)).unwrap();
        let b = scaling_bounds(&rq, 4.0).unwrap();
        assert_relative_eq!(b.lower_neg, 4.0, max_relative = 1e-10);
        assert_relative_eq!(b.upper_neg, 4.0, max_relative = 1e-10);

        // edgeless graph: both sides empty
        let z = eigenvalues(&SymmetricMatrix::zeros(4).unwrap()).unwrap();
        let rq = p_energy(&z, 2.0, default_zero_tol(4)).unwrap();
        let b = scaling_bounds(&rq, 4.0).unwrap();
        assert_eq!(b, ScalingBounds { lower_pos: 0.0, upper_pos: 0.0, lower_neg: 0.0, upper_neg: 0.0 });

        assert!(scaling_bounds(&rq, 1.5).is_err());
    }

    #[test]
    fn upper_bounds_formula() {
        assert_eq!(energy_upper_bounds(4, 2.0), (9.0, 4.0));
        assert_eq!(energy_upper_bounds(2, 2.0), (1.0, 1.0));
        assert_eq!(energy_upper_bounds(1, 2.0).0, 0.0);
    }

    #[test]
    fn report_serializes_flat() {
        let s = complete_spectrum(3);
        let r = p_energy(&s, 2.0, default_zero_tol(3)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["n_pos"], 1);
        assert_eq!(json["n_neg"], 2);
        assert_eq!(json["n_zero"], 0);
        assert!(json["e_pos"].is_f64());
    }
}
