//! Small numerical helpers: dense solves and polynomial evaluation.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Solves the `n x n` system `a x = b` by Gaussian elimination with partial pivoting.
///
/// `a` is row-major. Intended for the 2x2 and 3x3 moment systems; no attempt
/// is made at blocking or refinement.
pub fn solve_dense<T: Scalar>(a: &[T], b: &[T]) -> Result<Vec<T>> {
    let n = b.len();
    if a.len() != n * n {
        return Err(Error::InvalidParameter(format!(
            "matrix has {} entries, expected {}",
            a.len(),
            n * n
        )));
    }
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                m[i * n + col]
                    .abs()
                    .partial_cmp(&m[j * n + col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(col);
        if m[pivot * n + col] == T::zero() || !m[pivot * n + col].is_finite() {
            return Err(Error::InvalidParameter("singular matrix".into()));
        }
        if pivot != col {
            for k in 0..n {
                m.swap(col * n + k, pivot * n + k);
            }
            x.swap(col, pivot);
        }
        let diag = m[col * n + col];
        for row in col + 1..n {
            let f = m[row * n + col] / diag;
            if f == T::zero() {
                continue;
            }
            for k in col..n {
                let v = m[col * n + k];
                m[row * n + k] = m[row * n + k] - f * v;
            }
            x[row] = x[row] - f * x[col];
        }
    }
    for row in (0..n).rev() {
        let mut acc = x[row];
        for k in row + 1..n {
            acc = acc - m[row * n + k] * x[k];
        }
        x[row] = acc / m[row * n + row];
    }
    Ok(x)
}

/// Evaluates a polynomial with coefficients ordered from the highest degree down.
pub fn horner<T: Scalar>(coeffs: &[T], x: T) -> T {
    coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
}

/// Value and first derivative at `z`, coefficients highest degree first.
pub(crate) fn horner_with_derivative<T: Scalar>(
    coeffs: &[T],
    z: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let mut p = Complex::new(T::zero(), T::zero());
    let mut dp = p;
    for &c in coeffs {
        dp = dp * z + p;
        p = p * z + Complex::new(c, T::zero());
    }
    (p, dp)
}

/// All complex roots of a real polynomial (highest degree first, leading
/// coefficient non-zero) by simultaneous Aberth–Ehrlich iteration.
///
/// Starting points lie on a circle sized by the Fujiwara bound, so the
/// iteration does not depend on user seeds.
pub(crate) fn polynomial_roots<T: Scalar>(coeffs: &[T]) -> Vec<Complex<T>> {
    let lead = coeffs[0];
    let monic: Vec<T> = coeffs.iter().map(|&c| c / lead).collect();
    let n = monic.len() - 1;
    if n == 0 {
        return Vec::new();
    }

    let two = T::lit(2.0);
    let bound = monic[1..]
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let c = if k + 1 == n { c.abs() / two } else { c.abs() };
            c.powf(T::one() / T::from_usize(k + 1).unwrap())
        })
        .fold(T::zero(), T::max)
        * two;
    let radius = if bound > T::zero() { bound } else { T::one() };

    let nf = T::from_usize(n).unwrap();
    let mut z: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let angle = T::TAU() * T::from_usize(k).unwrap() / nf + T::lit(0.4);
            Complex::from_polar(radius, angle)
        })
        .collect();

    let eps = T::epsilon();
    for _ in 0..500 {
        let mut converged = true;
        for k in 0..n {
            let (p, dp) = horner_with_derivative(&monic, z[k]);
            if p.norm() == T::zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion = (0..n)
                .filter(|&j| j != k)
                .fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                    acc + (z[k] - z[j]).inv()
                });
            let step = ratio / (Complex::new(T::one(), T::zero()) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[k] = z[k] - step;
            if step.norm() > eps * T::lit(4.0) * z[k].norm() {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    z
}

/// Newton polish of a simple real root; returns the input if Newton wanders off.
pub(crate) fn polish_real_root<T: Scalar>(coeffs: &[T], mut x: T) -> T {
    let start = x;
    let deriv: Vec<T> = {
        let n = coeffs.len() - 1;
        coeffs[..n]
            .iter()
            .enumerate()
            .map(|(k, &c)| c * T::from_usize(n - k).unwrap())
            .collect()
    };
    for _ in 0..8 {
        let p = horner(coeffs, x);
        let dp = horner(&deriv, x);
        if dp == T::zero() {
            break;
        }
        let next = x - p / dp;
        if !next.is_finite() {
            break;
        }
        let done = (next - x).abs() <= T::epsilon() * x.abs();
        x = next;
        if done {
            break;
        }
    }
    if (x - start).abs() > T::lit(1e-3) * start.abs().max(T::epsilon()) {
        start
    } else {
        x
    }
}
