//! Froberg sequences and exact truncated power-series arithmetic.
//!
//! A Froberg sequence `|n; d_1, ..., d_m|` is the coefficient sequence of
//!
//! `| (1 - z^{d_1}) ... (1 - z^{d_m}) / (1 - z)^n |`
//!
//! where `|.|` zeroes every coefficient from the first non-positive one
//! onward. Coefficients are exact `i128` integers; any overflow is reported
//! rather than wrapped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::sequence::HilbertSeq;
use crate::synthesis::{synthesize, SynthesisLevel, SynthesisTrace};

/// The pair `(n; d_1, ..., d_m)` naming a Froberg sequence. Degrees are
/// kept sorted ascending; `m = 0` is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FroebergSpec {
    n: usize,
    degrees: Vec<usize>,
}

impl FroebergSpec {
    pub fn new(n: usize, mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::Parse("degrees must be positive".into()));
        }
        degrees.sort_unstable();
        Ok(Self { n, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Removes degree-1 entries, decrementing `n` per removal while `n > 0`;
    /// adjoining a linear form cuts one variable. If ones remain at `n = 0`
    /// the sequence has already collapsed to `(1, 0, ...)`.
    pub fn normalize(&self) -> FroebergSpec {
        let mut n = self.n;
        let mut degrees = Vec::with_capacity(self.degrees.len());
        for &d in &self.degrees {
            if d == 1 && n > 0 {
                n -= 1;
            } else {
                degrees.push(d);
            }
        }
        FroebergSpec { n, degrees }
    }

    /// True when every value past degree zero vanishes.
    pub fn is_degenerate(&self) -> bool {
        self.normalize().n == 0
    }

    /// The spec backing the derived sequence: one variable fewer, same
    /// degrees.
    pub fn derived(&self) -> Result<FroebergSpec> {
        if self.n == 0 {
            return Err(Error::CannotDerive);
        }
        Ok(FroebergSpec {
            n: self.n - 1,
            degrees: self.degrees.clone(),
        })
    }
}

impl fmt::Display for FroebergSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{};", self.n)?;
        if self.degrees.is_empty() {
            write!(f, "-|")
        } else {
            let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
            write!(f, "{}|", parts.join(","))
        }
    }
}

/// A formal power series held as exact integer coefficients up to a working
/// horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<i128>,
}

impl TruncatedSeries {
    pub fn from_coefficients(coefficients: Vec<i128>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }

    /// The raw (untruncated) series of `prod (1 - z^{d_i}) / (1 - z)^n` up
    /// to the horizon.
    pub fn raw_froberg(spec: &FroebergSpec, horizon: usize) -> Result<Self> {
        let len = horizon + 1;
        let mut coeffs = vec![0i128; len];
        coeffs[0] = 1;
        for &d in &spec.degrees {
            // multiply by (1 - z^d)
            for k in (0..len).rev() {
                if k >= d {
                    let shifted = coeffs[k - d];
                    coeffs[k] = coeffs[k]
                        .checked_sub(shifted)
                        .ok_or_else(|| Error::Overflow("series coefficient".into()))?;
                }
            }
        }
        for _ in 0..spec.n {
            // divide by (1 - z): prefix sums
            for k in 1..len {
                coeffs[k] = coeffs[k]
                    .checked_add(coeffs[k - 1])
                    .ok_or_else(|| Error::Overflow("series coefficient".into()))?;
            }
        }
        Ok(Self {
            coefficients: coeffs,
        })
    }

    /// Zeroes every coefficient from the first non-positive one onward.
    /// Idempotent.
    pub fn truncate_positive(&self) -> TruncatedSeries {
        let mut out = self.coefficients.clone();
        if let Some(t) = out.iter().position(|&c| c <= 0) {
            for c in out.iter_mut().skip(t) {
                *c = 0;
            }
        }
        TruncatedSeries { coefficients: out }
    }
}

/// Values `h_0, ..., h_{up_to}` of the Froberg sequence.
///
/// The working horizon is extended to `max(up_to, sum(d_i) - n + 2)` so that
/// when `m >= n` the truncation point certainly lies inside the computed
/// window.
///
/// ```
/// use arl_core::froberg::{froberg_values, FroebergSpec};
///
/// let spec = FroebergSpec::new(3, vec![3, 3, 5])?;
/// assert_eq!(froberg_values(&spec, 9)?, vec![1, 3, 6, 8, 9, 8, 6, 3, 1, 0]);
/// # Ok::<(), arl_core::Error>(())
/// ```
pub fn froberg_values(spec: &FroebergSpec, up_to: usize) -> Result<Vec<u64>> {
    let internal = up_to.max((spec.degree_sum() + 2).saturating_sub(spec.n));
    let raw = TruncatedSeries::raw_froberg(spec, internal)?;
    let truncated = raw.truncate_positive();
    if spec.degrees.len() >= spec.n {
        debug_assert!(
            raw.coefficients().iter().any(|&c| c <= 0),
            "with m >= n a non-positive coefficient must appear within the horizon"
        );
    }
    truncated.coefficients()[..=up_to]
        .iter()
        .map(|&c| u64::try_from(c).map_err(|_| Error::Overflow("sequence value out of u64".into())))
        .collect()
}

/// Eventual behavior of a Froberg sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailClass {
    /// Zero from `zero_from` onward.
    EventuallyZero { zero_from: usize },
    /// Constant `value` from `reached_at` onward.
    EventuallyConstant { reached_at: usize, value: u64 },
    /// Eventual polynomial growth of the given degree.
    Unbounded { poly_degree: usize },
}

impl TailClass {
    /// Degree from which the sequence is exactly constant (or zero), when
    /// that happens.
    pub fn stabilization_degree(&self) -> Option<usize> {
        match self {
            TailClass::EventuallyZero { zero_from } => Some(*zero_from),
            TailClass::EventuallyConstant { reached_at, .. } => Some(*reached_at),
            TailClass::Unbounded { .. } => None,
        }
    }
}

/// Classifies the tail of a Froberg sequence, normalizing first.
///
/// With `m >= n` the numerator forces a non-positive raw coefficient, so the
/// sequence is eventually zero; `m = n - 1` plateaus at the product of the
/// degrees once the numerator polynomial is summed out; `m < n - 1` grows
/// like a degree `n - m - 1` polynomial. Each branch is verified against
/// evaluated coefficients before being reported.
pub fn classify_tail(spec: &FroebergSpec) -> Result<TailClass> {
    let norm = spec.normalize();
    let (n, m) = (norm.n, norm.degrees.len());
    if n == 0 {
        // (1, 0, ...)
        let values = froberg_values(&norm, 1)?;
        debug_assert_eq!(values, vec![1, 0]);
        return Ok(TailClass::EventuallyZero { zero_from: 1 });
    }
    if m >= n {
        let window = (norm.degree_sum() + 2).saturating_sub(n);
        let values = froberg_values(&norm, window)?;
        let zero_from = values
            .iter()
            .position(|&v| v == 0)
            .expect("an eventually-zero sequence must vanish within the window");
        debug_assert!(values[zero_from..].iter().all(|&v| v == 0));
        return Ok(TailClass::EventuallyZero { zero_from });
    }
    if m == n - 1 {
        let value = norm
            .degrees
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
            .ok_or_else(|| Error::Overflow("plateau value".into()))?;
        let reached_at = norm.degree_sum() - m;
        let values = froberg_values(&norm, reached_at + 1)?;
        debug_assert_eq!(values[reached_at], value);
        debug_assert_eq!(values[reached_at + 1], value);
        debug_assert!(reached_at == 0 || values[reached_at - 1] < value);
        return Ok(TailClass::EventuallyConstant { reached_at, value });
    }
    Ok(TailClass::Unbounded {
        poly_degree: n - m - 1,
    })
}

/// Realizes a Froberg sequence as an almost reverse lexicographic ideal in
/// `l` variables, `l = max(n, 1)`.
///
/// The normalized sequence is synthesized in `h_1` variables; when `l`
/// exceeds `h_1` the ideal is padded with the leading variables
/// `x_1, ..., x_{l - h_1}` and the synthesized generators are re-indexed
/// into the trailing positions.
pub fn froberg_to_ideal(
    spec: &FroebergSpec,
    horizon: usize,
) -> Result<(MonomialIdeal, SynthesisTrace)> {
    let l = spec.n.max(1);
    let norm = spec.normalize();
    if norm.n == 0 {
        // (1, 0, ...) comes from the irrelevant ideal
        let gens: Vec<Monomial> = (1..=l).map(|i| Monomial::variable(i, l)).collect();
        let ideal = MonomialIdeal::new(l, gens)?;
        let trace = SynthesisTrace {
            levels: vec![SynthesisLevel {
                num_vars: l,
                start: ideal.clone(),
                steps: Vec::new(),
                result: ideal.clone(),
            }],
            final_ideal: ideal.clone(),
        };
        return Ok((ideal, trace));
    }
    let seq = HilbertSeq::series(norm.clone());
    let (synthesized, mut trace) = synthesize(&seq, horizon)?;
    let h1 = synthesized.num_vars();
    debug_assert_eq!(h1, norm.n);
    if l == h1 {
        return Ok((synthesized, trace));
    }
    let shift = l - h1;
    let mut gens: Vec<Monomial> = (1..=shift).map(|i| Monomial::variable(i, l)).collect();
    gens.extend(synthesized.generators().iter().map(|g| g.shift_right(l)));
    let padded = MonomialIdeal::new(l, gens)?;
    trace.levels.push(SynthesisLevel {
        num_vars: l,
        start: padded.clone(),
        steps: Vec::new(),
        result: padded.clone(),
    });
    trace.final_ideal = padded.clone();
    Ok((padded, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_values;
    use crate::test_fixtures::*;

    fn spec(n: usize, degrees: &[usize]) -> FroebergSpec {
        FroebergSpec::new(n, degrees.to_vec()).unwrap()
    }

    #[test]
    fn truncation_examples() {
        let s = TruncatedSeries::from_coefficients(vec![1, -2, 1, 0]);
        assert_eq!(s.truncate_positive().coefficients(), &[1, 0, 0, 0]);

        let all_positive = TruncatedSeries::from_coefficients(vec![1, 2, 3]);
        assert_eq!(all_positive.truncate_positive(), all_positive);
        // idempotent
        let once = s.truncate_positive();
        assert_eq!(once.truncate_positive(), once);
    }

    #[test]
    fn froberg_values_examples() {
        assert_eq!(
            froberg_values(&spec(3, &[3, 3, 5]), 10).unwrap(),
            vec![1, 3, 6, 8, 9, 8, 6, 3, 1, 0, 0]
        );
        // no degrees: binomial growth
        assert_eq!(
            froberg_values(&spec(3, &[]), 5).unwrap(),
            vec![1, 3, 6, 10, 15, 21]
        );
        // zero variables
        assert_eq!(
            froberg_values(&spec(0, &[2, 3]), 4).unwrap(),
            vec![1, 0, 0, 0, 0]
        );
        assert_eq!(froberg_values(&spec(0, &[]), 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn raw_series_of_the_worked_example() {
        // (1-z^3)^2 (1-z^5) / (1-z)^3 truncates to the printed values
        let raw = TruncatedSeries::raw_froberg(&spec(3, &[3, 3, 5]), 10).unwrap();
        let truncated = raw.truncate_positive();
        assert_eq!(
            truncated.coefficients()[..10],
            [1, 3, 6, 8, 9, 8, 6, 3, 1, 0]
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(spec(3, &[2, 1]).normalize(), spec(2, &[2]));
        assert_eq!(spec(2, &[1, 1]).normalize(), spec(0, &[]));
        assert_eq!(spec(3, &[3, 3, 5]).normalize(), spec(3, &[3, 3, 5]));
        // a leftover 1 at n = 0 is degenerate
        let leftover = spec(1, &[1, 1]).normalize();
        assert_eq!(leftover.n(), 0);
        assert!(leftover.is_degenerate());
        assert_eq!(froberg_values(&leftover, 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_tail(&spec(3, &[3, 3, 5])).unwrap(),
            TailClass::EventuallyZero { zero_from: 9 }
        );
        assert_eq!(
            classify_tail(&spec(2, &[3])).unwrap(),
            TailClass::EventuallyConstant {
                reached_at: 2,
                value: 3
            }
        );
        assert_eq!(
            classify_tail(&spec(3, &[])).unwrap(),
            TailClass::Unbounded { poly_degree: 2 }
        );
        // normalization happens first
        assert_eq!(
            classify_tail(&spec(3, &[2, 1])).unwrap(),
            TailClass::EventuallyConstant {
                reached_at: 1,
                value: 2
            }
        );
    }

    #[test]
    fn derived_spec_values_match_derived_values() {
        let base = spec(3, &[3, 3, 5]);
        let derived = base.derived().unwrap();
        assert_eq!(derived, spec(2, &[3, 3, 5]));
        let horizon = 14;
        let h = froberg_values(&base, horizon).unwrap();
        let g = froberg_values(&derived, horizon).unwrap();
        assert_eq!(g[0], 1);
        for d in 1..=horizon {
            assert_eq!(g[d], h[d].saturating_sub(h[d - 1]), "degree {d}");
        }
        assert!(spec(0, &[2]).derived().is_err());
    }

    #[test]
    fn froberg_to_ideal_matches_the_printed_generators() {
        let (ideal, trace) = froberg_to_ideal(&spec(3, &[3, 3, 5]), 12).unwrap();
        assert_eq!(ideal, ex_4_6_ideal());
        assert_eq!(
            hilbert_values(&ideal, 10),
            froberg_values(&spec(3, &[3, 3, 5]), 10).unwrap()
        );
        // five augmentation steps at the top (3-variable) level
        let top = trace.levels.last().unwrap();
        assert_eq!(top.num_vars, 3);
        let shape: Vec<(usize, usize)> = top.steps.iter().map(|s| (s.degree, s.count)).collect();
        assert_eq!(shape, vec![(5, 1), (6, 2), (7, 3), (8, 2), (9, 1)]);
        // the 2-variable level below it runs the shorter chain
        let two_vars = &trace.levels[1];
        assert_eq!(two_vars.num_vars, 2);
        let shape: Vec<(usize, usize)> =
            two_vars.steps.iter().map(|s| (s.degree, s.count)).collect();
        assert_eq!(shape, vec![(3, 1), (4, 1), (5, 1)]);
    }

    #[test]
    fn froberg_to_ideal_single_variable() {
        let (ideal, _) = froberg_to_ideal(&spec(1, &[3]), 8).unwrap();
        assert_eq!(exponent_rows(&ideal), vec![vec![3]]);
    }

    #[test]
    fn froberg_to_ideal_pads_extra_variables() {
        let (ideal, _) = froberg_to_ideal(&spec(3, &[1]), 8).unwrap();
        assert_eq!(exponent_rows(&ideal), vec![vec![1, 0, 0]]);
        assert_eq!(hilbert_values(&ideal, 5), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn froberg_to_ideal_degenerate() {
        let (ideal, _) = froberg_to_ideal(&spec(2, &[1, 1]), 8).unwrap();
        assert_eq!(exponent_rows(&ideal), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(hilbert_values(&ideal, 3), vec![1, 0, 0, 0]);
        let (ideal, _) = froberg_to_ideal(&spec(0, &[2]), 8).unwrap();
        assert_eq!(exponent_rows(&ideal), vec![vec![1]]);
    }
}
