//! Closed-form optimal values on complete and complete bipartite graphs.

use crate::extendibility::{check_nd, ExtendibilityValue, Method, StateFamily};
use crate::{int, ratio, Error, Rational, Result};

/// Thermodynamic limit of the Werner value on even cycles at `d = 2`.
pub const LN_2: f64 = std::f64::consts::LN_2;

/// `n + (n mod 2) − 1`: `n − 1` for even `n`, `n` for odd `n`.
fn odd_part(n: usize) -> i128 {
    (n + n % 2 - 1) as i128
}

/// Werner value on `K_n`, with `k = n mod d`:
/// `(d−1)/(2d) · (n+k+d)(n−k)/(n(n−1)) + k(k−1)/(n(n−1))`.
pub fn p_w_complete(n: usize, d: usize) -> Rational {
    let (ni, di) = (n as i128, d as i128);
    let k = (n % d) as i128;
    let denom = ni * (ni - 1);
    ratio(di - 1, 2 * di) * ratio((ni + k + di) * (ni - k), denom) + ratio(k * (k - 1), denom)
}

/// Brauer value on `K_n`: `1/d + 1/s − 1/(d s)` with `s = n + n mod 2 − 1`.
pub fn p_b_complete(n: usize, d: usize) -> Rational {
    let (s, di) = (odd_part(n), d as i128);
    ratio(1, di) + ratio(1, s) - ratio(1, di * s)
}

/// Isotropic value on `K_n` in the `p′` parametrization.
pub fn p_iso_prime(n: usize, d: usize) -> Rational {
    let (ni, di) = (n as i128, d as i128);
    if d > n || d.is_multiple_of(2) || n.is_multiple_of(2) {
        ratio(1, odd_part(n))
    } else {
        ratio(2 * di + 1, 2 * di * ni + 1).min(ratio(1, ni - 1))
    }
}

/// Isotropic value on `K_n`: `p = 1/d² + (1 − 1/d²) p′`.
pub fn p_iso(n: usize, d: usize) -> Rational {
    iso_from_prime(p_iso_prime(n, d), d)
}

pub fn iso_from_prime(p_prime: Rational, d: usize) -> Rational {
    let inv = ratio(1, (d * d) as i128);
    inv + (int(1) - inv) * p_prime
}

pub fn iso_to_prime(p: Rational, d: usize) -> Rational {
    let inv = ratio(1, (d * d) as i128);
    (p - inv) / (int(1) - inv)
}

/// Isotropic (and Brauer) value on `K_{n,m}`: `1/d + (d−1)/(d max{n,m})`.
pub fn p_iso_bipartite(n: usize, m: usize, d: usize) -> Rational {
    let di = d as i128;
    ratio(1, di) + ratio(di - 1, di * n.max(m) as i128)
}

/// Closed-form value on `K_n` as a tagged result.
pub fn value(family: StateFamily, n: usize, d: usize) -> Result<ExtendibilityValue> {
    check_nd(n, d)?;
    let v = match family {
        StateFamily::Werner => p_w_complete(n, d),
        StateFamily::Brauer => p_b_complete(n, d),
        StateFamily::Isotropic => p_iso(n, d),
        StateFamily::IsotropicPrime => p_iso_prime(n, d),
    };
    Ok(ExtendibilityValue {
        value: v,
        family,
        graph: format!("K_{n}"),
        n,
        d,
        method: Method::ClosedForm,
        certificate: None,
    })
}

/// Closed-form value on `K_{n,m}`.
pub fn bipartite_value(n: usize, m: usize, d: usize) -> Result<ExtendibilityValue> {
    if n < 1 || m < 1 || d < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n, m ≥ 1 and d ≥ 2, got n = {n}, m = {m}, d = {d}"
        )));
    }
    Ok(ExtendibilityValue {
        value: p_iso_bipartite(n, m, d),
        family: StateFamily::Isotropic,
        graph: format!("K_{{{n},{m}}}"),
        n: n + m,
        d,
        method: Method::ClosedForm,
        certificate: None,
    })
}

/// Which parameter is sent to infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    /// `d → ∞` at fixed `n`.
    LargeDimension { n: usize },
    /// `n → ∞` at fixed `d`.
    ManySites { d: usize },
}

/// Limits of the closed forms.
pub fn asymptotic_limit(family: StateFamily, limit: Limit) -> Result<Rational> {
    match limit {
        Limit::LargeDimension { n } => {
            check_nd(n, 2)?;
            Ok(match family {
                StateFamily::Werner => int(1),
                StateFamily::Brauer | StateFamily::Isotropic | StateFamily::IsotropicPrime => {
                    ratio(1, odd_part(n))
                }
            })
        }
        Limit::ManySites { d } => {
            check_nd(2, d)?;
            let di = d as i128;
            Ok(match family {
                StateFamily::Werner => ratio(di - 1, 2 * di),
                StateFamily::Brauer => ratio(1, di),
                StateFamily::Isotropic => ratio(1, di * di),
                StateFamily::IsotropicPrime => int(0),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::to_f64;

    #[test]
    fn spot_values() {
        assert_eq!(p_w_complete(5, 2), ratio(2, 5));
        assert_eq!(p_w_complete(7, 3), ratio(11, 21));
        assert_eq!(p_b_complete(3, 3), ratio(5, 9));
        assert_eq!(p_b_complete(5, 4), ratio(2, 5));
        assert_eq!(p_iso_prime(3, 3), ratio(7, 19));
        assert_eq!(p_iso(3, 3), ratio(25, 57));
        assert_eq!(p_iso_prime(9, 7), ratio(15, 127));
        assert_eq!(p_iso_bipartite(2, 3, 2), ratio(2, 3));
        for d in 2..=9 {
            assert_eq!(p_w_complete(2, d), int(1));
            assert_eq!(p_b_complete(2, d), int(1));
            assert_eq!(p_iso_prime(2, d), int(1));
            assert_eq!(p_iso_bipartite(1, 1, d), int(1));
        }
    }

    #[test]
    fn prime_round_trip() {
        for d in 2..=9 {
            for n in 2..=9 {
                let p = p_iso(n, d);
                assert_eq!(iso_to_prime(p, d), p_iso_prime(n, d));
            }
        }
    }

    #[test]
    fn limits() {
        assert_eq!(asymptotic_limit(StateFamily::Werner, Limit::ManySites { d: 2 }).unwrap(), ratio(1, 4));
        assert_eq!(asymptotic_limit(StateFamily::IsotropicPrime, Limit::ManySites { d: 5 }).unwrap(), int(0));
        assert_eq!(asymptotic_limit(StateFamily::Brauer, Limit::LargeDimension { n: 6 }).unwrap(), ratio(1, 5));
        for n in 2..=9 {
            let gap50 = to_f64(p_b_complete(n, 50) - p_iso(n, 50)).abs();
            let gap100 = to_f64(p_b_complete(n, 100) - p_iso(n, 100)).abs();
            assert!(gap100 <= gap50 && gap100 < 0.02, "n={n}: {gap50} {gap100}");
        }
        // the Werner limit is approached from above along n ≡ 0 mod d
        let w = to_f64(p_w_complete(2000, 2));
        assert!((w - 0.25).abs() < 1e-3);
    }

    #[test]
    fn brauer_value_exceeds_separable_bound() {
        for d in 2..=9 {
            for n in 2..=40 {
                assert!(p_b_complete(n, d) > ratio(1, d as i128));
            }
        }
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(value(StateFamily::Werner, 1, 2).is_err());
        assert!(value(StateFamily::Werner, 3, 1).is_err());
        assert_eq!(value(StateFamily::Werner, 7, 3).unwrap().value, ratio(11, 21));
        assert!(bipartite_value(0, 2, 2).is_err());
    }
}
