//! Axial decay constants.
//!
//! Every steady solution decays along the channel as `exp(-beta xi)`. The
//! constants come from:
//!
//! * the quadratic `beta^2 + pe beta - 4 (d+1)(d+3)/(d+5) = 0` for the
//!   fourth-order isothermal-wall expansion,
//! * the quartic `r^4 - pe r^3 - (39+17d) r^2 + 11(3+d) pe r + 18(d+1)(5+3d) = 0`
//!   for the sixth-order expansion (its two negative roots give `beta1 < beta2`),
//! * the quadratic `beta^2 + (2 alpha pe/(3+d)) beta - (1-alpha)(d+1)(d+3) = 0`
//!   for the exchange wall.
//!
//! The quadratics are evaluated in the cancellation-free form
//! `2c / (b + sqrt(b^2 + 4c))`, which also covers `pe = 0` without a special case.
//!
//! The large-`pe` limit of the quartic's small root is `18(d+1)(5+3d) / (11(3+d) pe)`
//! (dominant balance of the two lowest-order terms). Some published statements
//! of this limit drop the `11(3+d)` factor; [`Asymptote::QuarticSlowRoot`] uses
//! the balanced form and the quartic solve is always the primary answer.

use crate::error::{Error, Result};
use crate::numeric::{horner, polish_real_root, polynomial_roots};
use crate::problem::Geometry;
use crate::scalar::Scalar;

/// Decay constants of one solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayConstants<T = f64> {
    pub beta1: T,
    /// Present for the sixth-order solution only; always `> beta1`.
    pub beta2: Option<T>,
}

fn check_pe<T: Scalar>(pe: T) -> Result<()> {
    if pe.is_nan() || pe < T::zero() {
        return Err(Error::InvalidParameter(format!("pe must be >= 0, got {pe}")));
    }
    Ok(())
}

/// Positive root of `beta^2 + b beta - c = 0` for `b, c >= 0`.
fn positive_quadratic_root<T: Scalar>(b: T, c: T) -> T {
    if c == T::zero() {
        return T::zero();
    }
    if b.is_infinite() {
        return T::zero();
    }
    let two = T::lit(2.0);
    two * c / (b + (b * b + T::lit(4.0) * c).sqrt())
}

/// `4 (d+1)(d+3)/(d+5)`, the reaction coefficient of the fourth-order centerline equation.
pub(crate) fn order4_reaction<T: Scalar>(geometry: Geometry) -> T {
    let d: T = geometry.d();
    T::lit(4.0) * (d + T::one()) * (d + T::lit(3.0)) / (d + T::lit(5.0))
}

/// Fourth-order isothermal-wall decay constant.
pub fn beta1_wall_order4<T: Scalar>(pe: T, geometry: Geometry) -> Result<T> {
    check_pe(pe)?;
    Ok(positive_quadratic_root(pe, order4_reaction(geometry)))
}

/// Coefficients of the sixth-order characteristic quartic, highest degree first.
pub fn wall_order6_quartic<T: Scalar>(pe: T, geometry: Geometry) -> [T; 5] {
    let d: T = geometry.d();
    let one = T::one();
    [
        one,
        -pe,
        -(T::lit(39.0) + T::lit(17.0) * d),
        T::lit(11.0) * (T::lit(3.0) + d) * pe,
        T::lit(18.0) * (d + one) * (T::lit(5.0) + T::lit(3.0) * d),
    ]
}

/// Rescaling kicks in above this Peclet number (`r = pe s`).
const RESCALE_ABOVE_PE: f64 = 100.0;

/// Two decay constants of the sixth-order isothermal-wall solution.
///
/// All four roots of the quartic are found simultaneously, real roots are
/// those with `|im| <= 1e-8 |root|`, and the two negative ones are negated and
/// sorted. Anything other than exactly two negative real roots is reported as
/// [`Error::RootStructure`].
pub fn solve_quartic_wall_order6<T: Scalar>(pe: T, geometry: Geometry) -> Result<DecayConstants<T>> {
    check_pe(pe)?;
    if pe.is_infinite() {
        return Err(Error::InvalidParameter("pe must be finite for the quartic solve".into()));
    }
    let coeffs = wall_order6_quartic(pe, geometry);

    // For large pe the roots split into O(pe), O(1) and O(1/pe) groups.
    // Solving for s = r / pe keeps the coefficient range bounded.
    let scale = if pe > T::lit(RESCALE_ABOVE_PE) { pe } else { T::one() };
    let scaled: Vec<T> = coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| c / scale.powi(k as i32))
        .collect();

    let tol = T::lit(1e-8);
    let mut negative: Vec<T> = polynomial_roots(&scaled)
        .into_iter()
        .filter(|z| z.im.abs() <= tol * z.norm() && z.re < T::zero())
        .map(|z| polish_real_root(&coeffs, z.re * scale))
        .collect();

    if negative.len() != 2 {
        return Err(Error::RootStructure { pe: pe.as_f64(), d: geometry.flag(), found: negative.len() });
    }
    negative.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    Ok(DecayConstants { beta1: -negative[0], beta2: Some(-negative[1]) })
}

/// Residual of the sixth-order quartic at `r`.
pub fn wall_order6_residual<T: Scalar>(pe: T, geometry: Geometry, r: T) -> T {
    horner(&wall_order6_quartic(pe, geometry), r)
}

/// Exchange-wall decay constant.
///
/// `alpha = 1` (insulated wall) gives `beta1 = 0`; `pe alpha -> 0` reduces to
/// `sqrt((1-alpha)(d+1)(d+3))`.
pub fn beta1_exchange<T: Scalar>(pe: T, alpha: T, geometry: Geometry) -> Result<T> {
    check_pe(pe)?;
    if !(alpha > T::zero() && alpha <= T::one()) {
        return Err(Error::InvalidParameter(format!("alpha must be in (0, 1], got {alpha}")));
    }
    Ok(beta1_exchange_split(pe, alpha, T::one() - alpha, geometry))
}

/// Same as [`beta1_exchange`] with `1 - alpha` supplied separately to avoid
/// cancellation when alpha is close to one. `alpha = 0` is allowed here.
pub(crate) fn beta1_exchange_split<T: Scalar>(pe: T, alpha: T, one_minus_alpha: T, geometry: Geometry) -> T {
    let d: T = geometry.d();
    let b = T::lit(2.0) * alpha * pe / (T::lit(3.0) + d);
    let c = one_minus_alpha * (d + T::one()) * (d + T::lit(3.0));
    positive_quadratic_root(b, c)
}

/// Published limit formulas for the decay constants. These serve as
/// cross-checks only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Asymptote {
    /// Fourth-order wall, negligible axial conduction: `4 (d+1)(d+3) / ((d+5) pe)`.
    WallOrder4Advective,
    /// Sixth-order wall, small root for `pe -> inf`: `18(d+1)(5+3d) / (11(3+d) pe)`.
    QuarticSlowRoot,
    /// Sixth-order wall, large root for `pe -> inf`: `sqrt(11 (d+3))`.
    QuarticFastRoot,
    /// Exchange wall, advection dominated: `(1-alpha)(d+1)(d+3)^2 / (2 alpha pe)`.
    ExchangeAdvective,
    /// Exchange wall, exchange dominated: `sqrt((1-alpha)(d+1)(d+3))`.
    ExchangeDominated,
}

pub fn asymptote<T: Scalar>(kind: Asymptote, pe: T, alpha: T, geometry: Geometry) -> T {
    let d: T = geometry.d();
    let one = T::one();
    let three = T::lit(3.0);
    match kind {
        Asymptote::WallOrder4Advective => order4_reaction::<T>(geometry) / pe,
        Asymptote::QuarticSlowRoot => {
            T::lit(18.0) * (d + one) * (T::lit(5.0) + three * d) / (T::lit(11.0) * (three + d) * pe)
        }
        Asymptote::QuarticFastRoot => (T::lit(11.0) * (d + three)).sqrt(),
        Asymptote::ExchangeAdvective => {
            (one - alpha) * (d + one) * (d + three) * (d + three) / (T::lit(2.0) * alpha * pe)
        }
        Asymptote::ExchangeDominated => ((one - alpha) * (d + one) * (d + three)).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const PLATES: Geometry = Geometry::Plates;
    const TUBE: Geometry = Geometry::Tube;

    #[test]
    fn order4_zero_pe_limits() {
        assert_relative_eq!(beta1_wall_order4(0.0, PLATES).unwrap(), 2.0 * (3.0f64 / 5.0).sqrt(), max_relative = 1e-15);
        assert_relative_eq!(beta1_wall_order4(0.0, TUBE).unwrap(), 2.0 * (8.0f64 / 6.0).sqrt(), max_relative = 1e-15);
        assert!((beta1_wall_order4::<f64>(0.0, PLATES).unwrap() - 1.549193).abs() < 1e-6);
        assert!((beta1_wall_order4::<f64>(0.0, TUBE).unwrap() - 2.309401).abs() < 1e-6);
    }

    #[test]
    fn order4_large_pe_matches_advective_limit() {
        // frozen from a 40-digit evaluation
        let b = beta1_wall_order4::<f64>(100.0, PLATES).unwrap();
        assert_relative_eq!(b, 0.023_994_242_763_142_234, max_relative = 1e-13);
        let lim = asymptote::<f64>(Asymptote::WallOrder4Advective, 100.0, 0.0, PLATES);
        assert!(((b - lim) / lim).abs() < 1e-3);

        let mut last = f64::INFINITY;
        for pe in [1e3, 1e4, 1e5] {
            let b = beta1_wall_order4::<f64>(pe, PLATES).unwrap();
            let err = ((b - asymptote::<f64>(Asymptote::WallOrder4Advective, pe, 0.0, PLATES)) / b).abs();
            assert!(err < last);
            last = err;
        }
    }

    #[test]
    fn order4_rejects_negative_pe() {
        assert!(beta1_wall_order4::<f64>(-1.0, PLATES).is_err());
        assert!(beta1_wall_order4::<f64>(f64::NAN, PLATES).is_err());
    }

    #[test]
    fn quartic_roots_at_zero_pe() {
        let c = solve_quartic_wall_order6(0.0, PLATES).unwrap();
        assert_relative_eq!(c.beta1, 1.569_482_386_839_43, max_relative = 1e-13);
        assert_relative_eq!(c.beta2.unwrap(), 6.044_561_608_371_68, max_relative = 1e-13);
        let c = solve_quartic_wall_order6(0.0, TUBE).unwrap();
        assert_relative_eq!(c.beta1, 2.393_520_952_212_43, max_relative = 1e-13);
        assert_relative_eq!(c.beta2.unwrap(), 7.090_208_561_905_64, max_relative = 1e-13);
    }

    #[test]
    fn quartic_roots_across_regimes() {
        // (pe, d, beta1, beta2) from a 40-digit polynomial solve
        let cases = [
            (1.0, PLATES, 1.182_957_134_412_25, 6.0),
            (10.0, PLATES, 0.265_006_464_481_127, 5.851_902_172_361_21),
            (50.0, TUBE, 0.130_526_092_682_719, 6.682_391_342_026_2),
            (1000.0, PLATES, 0.002_727_264_551_650_52, 5.746_190_659_832_21),
            (1e6, PLATES, 2.727_272_727_264_55e-6, 5.744_564_282_893_27),
            (1e6, TUBE, 6.545_454_545_406_39e-6, 6.633_252_307_968_69),
        ];
        for (pe, g, b1, b2) in cases {
            let c = solve_quartic_wall_order6(pe, g).unwrap();
            assert_relative_eq!(c.beta1, b1, max_relative = 1e-11);
            assert_relative_eq!(c.beta2.unwrap(), b2, max_relative = 1e-11);
        }
    }

    #[test]
    fn quartic_large_root_approaches_fast_limit() {
        for g in [PLATES, TUBE] {
            let b2 = solve_quartic_wall_order6(1e6, g).unwrap().beta2.unwrap();
            assert!((b2 - asymptote::<f64>(Asymptote::QuarticFastRoot, 1e6, 0.0, g)).abs() < 1e-3);
        }
        assert!((asymptote::<f64>(Asymptote::QuarticFastRoot, 0.0, 0.0, PLATES) - 5.744563).abs() < 1e-6);
    }

    #[test]
    fn quartic_small_root_scales_as_inverse_pe() {
        for g in [PLATES, TUBE] {
            let p1 = solve_quartic_wall_order6(1e4, g).unwrap().beta1 * 1e4;
            let p2 = solve_quartic_wall_order6(1e5, g).unwrap().beta1 * 1e5;
            let lim = asymptote::<f64>(Asymptote::QuarticSlowRoot, 1.0, 0.0, g);
            assert!((p2 - lim).abs() < (p1 - lim).abs());
            assert!(((p2 - lim) / lim).abs() < 1e-3);
        }
    }

    #[test]
    fn exchange_limits() {
        assert_eq!(beta1_exchange::<f64>(10.0, 1.0, PLATES).unwrap(), 0.0);
        assert_relative_eq!(beta1_exchange::<f64>(0.0, 0.5, PLATES).unwrap(), 1.5f64.sqrt(), max_relative = 1e-15);
        assert!((beta1_exchange::<f64>(0.0, 0.5, PLATES).unwrap() - 1.224745).abs() < 1e-6);
        assert_relative_eq!(beta1_exchange_split(3.0, 0.0, 1.0, TUBE), 8.0f64.sqrt(), max_relative = 1e-15);
        assert!(beta1_exchange::<f64>(1.0, 0.0, PLATES).is_err());
        assert!(beta1_exchange(1.0, 1.5, PLATES).is_err());
    }

    #[test]
    fn asymptote_spot_values() {
        assert_relative_eq!(asymptote(Asymptote::ExchangeAdvective, 1000.0, 0.9, PLATES), 5.0e-4, max_relative = 1e-12);
        assert_relative_eq!(asymptote(Asymptote::ExchangeDominated, 0.0, 0.0, PLATES), 3.0f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(asymptote(Asymptote::WallOrder4Advective, 10.0, 0.0, TUBE), 0.4 * 8.0 / 6.0, max_relative = 1e-15);
    }

    #[test]
    fn f32_path_agrees_with_f64() {
        let b64 = solve_quartic_wall_order6(0.0f64, PLATES).unwrap();
        let b32 = solve_quartic_wall_order6(0.0f32, PLATES).unwrap();
        assert!((b32.beta1 as f64 - b64.beta1).abs() < 1e-5);
        assert!((b32.beta2.unwrap() as f64 - b64.beta2.unwrap()).abs() < 1e-4);
    }

    fn geometry(d: u8) -> Geometry {
        Geometry::from_flag(d).unwrap()
    }

    proptest! {
        #[test]
        fn order4_satisfies_quadratic(pe in 0.0f64..1e5, d in 0u8..2) {
            let g = geometry(d);
            let b = beta1_wall_order4(pe, g).unwrap();
            let c = order4_reaction::<f64>(g);
            prop_assert!((b * b + pe * b - c).abs() <= 1e-12 * c);
        }

        #[test]
        fn exchange_satisfies_quadratic(pe in 0.0f64..1e4, alpha in 1e-3f64..0.999, d in 0u8..2) {
            let g = geometry(d);
            let df = d as f64;
            let b = beta1_exchange(pe, alpha, g).unwrap();
            let c = (1.0 - alpha) * (df + 1.0) * (df + 3.0);
            let lin = 2.0 * alpha * pe / (3.0 + df);
            prop_assert!((b * b + lin * b - c).abs() <= 1e-12 * c);
        }

        #[test]
        fn quartic_roots_are_roots(pe in 0.0f64..1e5, d in 0u8..2) {
            let g = geometry(d);
            let c = solve_quartic_wall_order6(pe, g).unwrap();
            let b2 = c.beta2.unwrap();
            prop_assert!(b2 > c.beta1 && c.beta1 > 0.0);
            let coeffs = wall_order6_quartic(pe, g);
            let cmax = coeffs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            for beta in [c.beta1, b2] {
                prop_assert!(wall_order6_residual(pe, g, -beta).abs() <= 1e-9 * cmax);
            }
        }

        #[test]
        fn beta1_non_increasing_in_pe(pe in 0.0f64..1e4, dpe in 1e-3f64..100.0, d in 0u8..2) {
            let g = geometry(d);
            prop_assert!(beta1_wall_order4(pe + dpe, g).unwrap() <= beta1_wall_order4(pe, g).unwrap());
            let lo = solve_quartic_wall_order6(pe, g).unwrap().beta1;
            let hi = solve_quartic_wall_order6(pe + dpe, g).unwrap().beta1;
            prop_assert!(hi <= lo * (1.0 + 1e-12));
        }
    }
}
