//! The two-parameter family of Brauer states
//! `ρ = p·Π_∅ + q·Π_(1,1)/Tr Π_(1,1) + (1 − p − q)·Π_(2)/Tr Π_(2)`
//! and its alternative form `p′·W/d + q′·F/d + (1 − p′ − q′)·I/d²`.

use crate::diagram::pair_operators;
use crate::operator::PairOperator;
use crate::{int, ratio, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `(p, q) → (p′, q′)`.
    ToPrime,
    /// `(p′, q′) → (p, q)`.
    FromPrime,
}

/// A Brauer state in both parametrizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrauerParams {
    pub d: usize,
    pub p: Rational,
    pub q: Rational,
    pub p_prime: Rational,
    pub q_prime: Rational,
}

impl BrauerParams {
    pub fn from_projector(p: Rational, q: Rational, d: usize) -> Result<Self> {
        check_d(d)?;
        let (pp, qp) = to_prime(p, q, d);
        Ok(BrauerParams { d, p, q, p_prime: pp, q_prime: qp })
    }

    pub fn from_prime(p_prime: Rational, q_prime: Rational, d: usize) -> Result<Self> {
        check_d(d)?;
        let (p, q) = from_prime(p_prime, q_prime, d);
        Ok(BrauerParams { d, p, q, p_prime, q_prime })
    }

    /// `p + q ≤ 1`, `p, q ≥ 0`.
    pub fn is_valid_state(&self) -> bool {
        self.p >= int(0) && self.q >= int(0) && self.p + self.q <= int(1)
    }

    /// The two-qudit operator `p′·W/d + q′·F/d + (1 − p′ − q′)·I/d²`.
    pub fn operator(&self) -> Result<PairOperator> {
        let (w, i, f) = pair_operators(self.d)?;
        let di = self.d as i128;
        let rest = int(1) - self.p_prime - self.q_prime;
        Ok(&(&w.scaled(self.p_prime / int(di)) + &f.scaled(self.q_prime / int(di)))
            + &i.scaled(rest / int(di * di)))
    }
}

/// Converts a parameter pair in the given direction.
pub fn brauer_params_convert(a: Rational, b: Rational, d: usize, direction: Direction) -> Result<BrauerParams> {
    match direction {
        Direction::ToPrime => BrauerParams::from_projector(a, b, d),
        Direction::FromPrime => BrauerParams::from_prime(a, b, d),
    }
}

fn to_prime(p: Rational, q: Rational, d: usize) -> (Rational, Rational) {
    let di = d as i128;
    let big_d = int(di * (di + 1) - 2);
    let rest = int(1) - p - q;
    let pp = p - int(2) * rest / big_d;
    let qp = -q / int(di - 1) + int(di) * rest / big_d;
    (pp, qp)
}

fn from_prime(pp: Rational, qp: Rational, d: usize) -> (Rational, Rational) {
    let di = d as i128;
    let p = (pp * int(di * di - 1) + qp * int(di - 1) + int(1)) / int(di * di);
    let q = -(pp * int(di - 1) + qp * int(di * di - 1) - int(di) + int(1)) / int(2 * di);
    (p, q)
}

/// Separability of a valid Brauer state: `q ≤ 1/2` and `p ≤ 1/d`.
pub fn brauer_is_separable(p: Rational, q: Rational, d: usize) -> Result<bool> {
    check_d(d)?;
    if p < int(0) || q < int(0) || p + q > int(1) {
        return Err(Error::InvalidParameters(format!("(p, q) = ({p}, {q}) is not a state")));
    }
    Ok(q <= ratio(1, 2) && p <= ratio(1, d as i128))
}

/// Positivity of `p′·W/d + q′·F/d + (1 − p′ − q′)·I/d²`, via its three
/// eigenvalue conditions.
pub fn is_positive_brauer_prime(pp: Rational, qp: Rational, d: usize) -> bool {
    let di = d as i128;
    let c1 = pp * int(di * di - 1) + qp * int(di - 1) + int(1) >= int(0);
    let c2 = -pp - qp * int(di + 1) + int(1) >= int(0);
    let c3 = pp - qp * int(di - 1) <= int(1);
    c1 && c2 && c3
}

fn check_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameters(format!("local dimension {d} < 2")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::projectors;
    use crate::spectral::sym_eigen;
    use proptest::prelude::*;

    #[test]
    fn anchor_points() {
        for d in 2..=5usize {
            let di = d as i128;
            let mixed = BrauerParams::from_prime(int(0), int(0), d).unwrap();
            assert_eq!(mixed.p, ratio(1, di * di));
            assert_eq!(mixed.operator().unwrap(), crate::operator::SiteOperator::identity(2, d).scaled(ratio(1, di * di)));
        }
        let ent = BrauerParams::from_prime(int(1), int(0), 2).unwrap();
        assert_eq!((ent.p, ent.q), (int(1), int(0)));
    }

    #[test]
    fn projector_form_matches_prime_form() {
        for d in 2..=4usize {
            let (p0, pa, ps) = projectors(d).unwrap();
            let (ta, ts) = (pa.trace(), ps.trace());
            for (p, q) in [(ratio(1, 3), ratio(1, 5)), (int(0), int(1)), (ratio(1, 2), int(0))] {
                let params = BrauerParams::from_projector(p, q, d).unwrap();
                let direct = &(&p0.scaled(p) + &pa.scaled(q / ta)) + &ps.scaled((int(1) - p - q) / ts);
                assert_eq!(params.operator().unwrap(), direct);
            }
        }
    }

    #[test]
    fn separability_examples() {
        assert!(!brauer_is_separable(ratio(3, 5), ratio(1, 10), 2).unwrap());
        assert!(brauer_is_separable(int(0), int(0), 2).unwrap());
        assert!(brauer_is_separable(ratio(1, 2), ratio(1, 2), 2).unwrap());
        assert!(brauer_is_separable(ratio(1, 3), ratio(1, 2), 3).unwrap());
        assert!(brauer_is_separable(int(1), int(1), 2).is_err());
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive_brauer_prime(int(0), int(0), 2));
        assert!(is_positive_brauer_prime(int(1), int(0), 2));
        assert!(!is_positive_brauer_prime(ratio(11, 10), int(0), 2));
        for (a, b) in [(ratio(-1, 2), ratio(1, 2)), (int(0), int(-1)), (int(1), int(0))] {
            assert!(is_positive_brauer_prime(a, b, 2), "({a}, {b})");
        }
    }

    #[test]
    fn positivity_matches_spectrum() {
        for d in 2..=3usize {
            for i in -6..=6i128 {
                for j in -6..=6i128 {
                    let (a, b) = (ratio(i, 4), ratio(j, 4));
                    let op = BrauerParams::from_prime(a, b, d).unwrap().operator().unwrap();
                    let min = sym_eigen(&op).unwrap().min();
                    if min.abs() > 1e-12 {
                        assert_eq!(is_positive_brauer_prime(a, b, d), min > 0.0, "d={d} ({a}, {b})");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn conversion_round_trips(pn in -50i128..=50, pd in 1i128..=20, qn in -50i128..=50, qd in 1i128..=20, d in 2usize..=9) {
            let (p, q) = (ratio(pn, pd), ratio(qn, qd));
            let fwd = BrauerParams::from_projector(p, q, d).unwrap();
            let back = BrauerParams::from_prime(fwd.p_prime, fwd.q_prime, d).unwrap();
            prop_assert_eq!((back.p, back.q), (p, q));
        }
    }
}
