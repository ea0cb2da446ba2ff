//! Exact minimization of the upper envelope of affine functions.

use std::fmt;

use num_traits::Zero;

use crate::partitions::Partition;
use crate::{Error, Rational, Result};

/// `x ↦ offset + slope·x`, tagged with the irrep pair `(λ, μ)` it came from
/// and `r = (n − |λ|)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFn {
    pub slope: Rational,
    pub offset: Rational,
    pub lambda: Partition,
    pub mu: Partition,
    pub r: usize,
}

impl AffineFn {
    pub fn eval(&self, x: Rational) -> Rational {
        self.offset + self.slope * x
    }
}

impl fmt::Display for AffineFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[μ={}, λ={}](x) = {} + {}·x", self.mu, self.lambda, self.offset, self.slope)
    }
}

/// Minimum of `max_i f_i` and the set of minimizers `[lo, hi]`; a missing
/// bound means the minimum extends to infinity on that side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeMin {
    pub value: Rational,
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
    /// Indices of the input functions attaining the maximum at the minimizer
    /// (at `lo`, or anywhere when unbounded below).
    pub active: Vec<usize>,
}

/// `min_x max_i f_i(x)`, exactly.
///
/// Builds the upper envelope with the convex-hull trick (slopes ascending),
/// then locates the piece where the slope changes sign.
pub fn minimize_max(fns: &[AffineFn]) -> Result<EnvelopeMin> {
    let lines: Vec<(Rational, Rational)> = fns.iter().map(|f| (f.slope, f.offset)).collect();
    minimize_max_lines(&lines)
}

/// As [`minimize_max`] on bare `(slope, offset)` pairs.
pub fn minimize_max_lines(lines: &[(Rational, Rational)]) -> Result<EnvelopeMin> {
    if lines.is_empty() {
        return Err(Error::InvalidParameters("empty affine family".into()));
    }
    let has_nonneg = lines.iter().any(|l| l.0 >= Rational::zero());
    let has_nonpos = lines.iter().any(|l| l.0 <= Rational::zero());
    if !has_nonneg || !has_nonpos {
        return Err(Error::Unbounded);
    }

    let mut order: Vec<usize> = (0..lines.len()).collect();
    order.sort_by(|&a, &b| lines[a].0.cmp(&lines[b].0).then(lines[a].1.cmp(&lines[b].1)));
    // keep the highest offset per slope
    let mut dedup: Vec<usize> = Vec::new();
    for idx in order {
        if let Some(&last) = dedup.last() {
            if lines[last].0 == lines[idx].0 {
                dedup.pop();
            }
        }
        dedup.push(idx);
    }

    let cross = |a: usize, b: usize| -> Rational {
        (lines[b].1 - lines[a].1) / (lines[a].0 - lines[b].0)
    };
    let mut hull: Vec<usize> = Vec::new();
    for idx in dedup {
        while hull.len() >= 2 {
            let (p, q) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            if cross(p, idx) <= cross(p, q) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(idx);
    }

    let j = hull
        .iter()
        .position(|&i| lines[i].0 >= Rational::zero())
        .expect("a nonnegative slope exists");
    let left = (j > 0).then(|| cross(hull[j - 1], hull[j]));
    let (value, lo, hi) = if lines[hull[j]].0.is_zero() {
        let right = (j + 1 < hull.len()).then(|| cross(hull[j], hull[j + 1]));
        (lines[hull[j]].1, left, right)
    } else {
        let x = left.ok_or(Error::Unbounded)?;
        let v = lines[hull[j]].1 + lines[hull[j]].0 * x;
        (v, Some(x), Some(x))
    };

    let active = match lo {
        Some(x) => (0..lines.len())
            .filter(|&i| lines[i].1 + lines[i].0 * x == value)
            .collect(),
        None => (0..lines.len())
            .filter(|&i| lines[i].0.is_zero() && lines[i].1 == value)
            .collect(),
    };
    Ok(EnvelopeMin { value, lo, hi, active })
}

/// `max_i f_i(x)` at a point.
pub fn envelope_at(fns: &[AffineFn], x: Rational) -> Option<Rational> {
    fns.iter().map(|f| f.eval(x)).max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, ratio};
    use proptest::prelude::*;

    fn l(s: Rational, o: Rational) -> (Rational, Rational) {
        (s, o)
    }

    #[test]
    fn two_line_crossing() {
        let m = minimize_max_lines(&[l(int(16), int(1)), l(int(-15), ratio(-1, 2))]).unwrap();
        assert_eq!(m.lo, Some(ratio(-3, 62)));
        assert_eq!(m.hi, Some(ratio(-3, 62)));
        assert_eq!(m.value, ratio(7, 31));
        assert_eq!(m.active, vec![0, 1]);
    }

    #[test]
    fn flat_piece_and_rays() {
        let m = minimize_max_lines(&[l(int(0), int(1)), l(int(1), int(0)), l(int(-1), int(-3))]).unwrap();
        assert_eq!(m.value, int(1));
        assert_eq!(m.lo, Some(int(-4)));
        assert_eq!(m.hi, Some(int(1)));
        let ray = minimize_max_lines(&[l(int(0), int(2)), l(int(3), int(0))]).unwrap();
        assert_eq!(ray.value, int(2));
        assert_eq!(ray.lo, None);
        assert_eq!(ray.hi, Some(ratio(2, 3)));
        assert_eq!(ray.active, vec![0]);
    }

    #[test]
    fn unbounded_families() {
        assert_eq!(minimize_max_lines(&[l(int(1), int(0)), l(int(2), int(5))]), Err(Error::Unbounded));
        assert_eq!(minimize_max_lines(&[l(int(-1), int(0))]), Err(Error::Unbounded));
    }

    proptest! {
        #[test]
        fn matches_breakpoint_scan(raw in prop::collection::vec((-6i128..=6, -10i128..=10, 1i128..=4), 2..8)) {
            let mut lines: Vec<(Rational, Rational)> = raw.iter().map(|&(s, o, q)| (int(s), ratio(o, q))).collect();
            lines.push((int(1), int(0)));
            lines.push((int(-1), int(0)));
            let m = minimize_max_lines(&lines).unwrap();
            let f = |x: Rational| lines.iter().map(|&(s, o)| o + s * x).max().unwrap();
            // the minimum of a convex piecewise-linear function is at a breakpoint
            let mut best: Option<Rational> = None;
            for a in &lines {
                for b in &lines {
                    if a.0 != b.0 {
                        let x = (b.1 - a.1) / (a.0 - b.0);
                        let v = f(x);
                        best = Some(best.map_or(v, |bv: Rational| bv.min(v)));
                    }
                }
            }
            prop_assert_eq!(m.value, best.unwrap());
            if let Some(x) = m.lo {
                prop_assert_eq!(f(x), m.value);
            }
        }
    }
}
