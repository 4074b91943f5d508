//! Exact Hilbert function evaluation and the structural identities tying
//! Hilbert drops to generator counts.
//!
//! `H(R/I, d)` is computed by enumerating the standard monomials of degree
//! `d` (those outside the ideal). The recursion fixes exponents variable by
//! variable, discards generators that can no longer divide, cuts the branch
//! as soon as some generator divides every completion, and switches to a
//! closed-form count once no generator is left. This enumeration is the
//! trusted oracle the rest of the crate is checked against.

use serde::Serialize;

use crate::arl::is_arl_fast;
use crate::error::{Error, Result};
use crate::ideal::{FValue, MonomialIdeal};

/// Binomial coefficient as an exact `u64`; panics on overflow since every
/// in-range use is bounded by the enumeration scale.
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    u64::try_from(acc).expect("binomial out of u64 range")
}

/// Number of degree-`d` monomials in `n` variables outside the ideal.
pub fn hilbert_function(ideal: &MonomialIdeal, d: usize) -> u64 {
    let n = ideal.num_vars();
    let gens: Vec<&[usize]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    count_standard(n, 0, d, &gens)
}

/// `H(R/I, d)` for `d = 0..=up_to`.
pub fn hilbert_values(ideal: &MonomialIdeal, up_to: usize) -> Vec<u64> {
    (0..=up_to).map(|d| hilbert_function(ideal, d)).collect()
}

fn count_standard(n: usize, var: usize, remaining: usize, active: &[&[usize]]) -> u64 {
    // A generator with no exponent left to satisfy divides every completion.
    if active.iter().any(|g| g[var..].iter().all(|&e| e == 0)) {
        return 0;
    }
    if active.is_empty() {
        // all completions are standard
        return binomial(n - var - 1 + remaining, remaining);
    }
    if var + 1 == n {
        // a single exponent remains; active generators already match the
        // prefix, so membership is decided by their last exponent
        let divisible = active.iter().any(|g| g[n - 1] <= remaining);
        return u64::from(!divisible);
    }
    let mut total = 0u64;
    let mut survivors: Vec<&[usize]> = Vec::with_capacity(active.len());
    for e in 0..=remaining {
        survivors.clear();
        survivors.extend(active.iter().copied().filter(|g| g[var] <= e));
        total += count_standard(n, var + 1, remaining - e, &survivors);
    }
    total
}

/// Dimension of the degree-`d` slice of `(I : x_n) / I`, i.e. the number of
/// degree-`d` monomials in the colon ideal but outside `I`.
///
/// Requires a strongly stable ideal whose last generator involves the last
/// variable; the count then equals the number of minimal generators with
/// max-index `n` and degree `d + 1`.
pub fn quotient_slice_dimension(ideal: &MonomialIdeal, d: usize) -> Result<usize> {
    if let Some(w) = ideal.strong_stability_witness() {
        return Err(Error::HypothesisNotMet(format!(
            "ideal is not strongly stable: x{}*{}/x{} is outside the ideal",
            w.j, w.generator, w.i
        )));
    }
    let n = ideal.num_vars();
    let last = ideal
        .last_generator()
        .map_err(|e| Error::HypothesisNotMet(format!("last generator unavailable: {e}")))?;
    if last.mu != n {
        return Err(Error::HypothesisNotMet(format!(
            "last generator {} does not involve x{n}",
            last.monomial
        )));
    }
    let colon = ideal.colon_by_last_variable();
    let inside_colon = hilbert_function(ideal, d) - hilbert_function(&colon, d);
    let by_generators = ideal.count_generators_by(n, d + 1);
    debug_assert_eq!(inside_colon as usize, by_generators);
    Ok(inside_colon as usize)
}

/// Degree from which `H(R/I, d)` is constant, together with that constant,
/// for an ARL ideal whose last generator is a pure power of `x_{n-1}`.
///
/// The degree is `t = f_{n-1}(0)` and the constant is the sum of
/// `f_{n-1}(alpha)` over the level-(n-2) index set.
pub fn stabilized_value(ideal: &MonomialIdeal) -> Result<(usize, u64)> {
    let n = ideal.num_vars();
    if n < 2 {
        return Err(Error::HypothesisNotMet(
            "stabilization analysis needs at least two variables".into(),
        ));
    }
    let last = ideal
        .last_generator()
        .map_err(|e| Error::HypothesisNotMet(format!("last generator unavailable: {e}")))?;
    let exps = last.monomial.exponents();
    let pure_power = exps[n - 2] > 0 && exps.iter().enumerate().all(|(j, &e)| j == n - 2 || e == 0);
    if !pure_power {
        return Err(Error::HypothesisNotMet(format!(
            "last generator {} is not a pure power of x{}",
            last.monomial,
            n - 1
        )));
    }
    if !is_arl_fast(ideal) {
        return Err(Error::HypothesisNotMet(
            "ideal is not almost reverse lexicographic".into(),
        ));
    }
    let t = exps[n - 2];
    let mut total: u64 = 0;
    for alpha in ideal.prefix_index_set(n - 2)? {
        match ideal.f_eval(n - 1, &alpha)? {
            FValue::Finite(v) => total += v as u64,
            FValue::Infinite => {
                return Err(Error::HypothesisNotMet(format!(
                    "f_{} is infinite at {:?}",
                    n - 1,
                    alpha
                )))
            }
        }
    }
    Ok((t, total))
}

/// Measurements relating the Hilbert drop at one degree to the count of
/// top-variable generators of that degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DropReport {
    pub degree: usize,
    /// `f_{n-1}(0)`: the first degree with a weak descent.
    pub threshold: usize,
    pub h_prev: u64,
    pub h_at: u64,
    /// Present when `degree >= threshold`: the number of generators with
    /// max-index `n` and this degree, which must equal the drop.
    pub generator_count: Option<usize>,
    /// First degree where `H` weakly descends, measured directly.
    pub min_drop_degree: usize,
    pub holds: bool,
}

/// Verifies, for an ARL ideal whose last generator involves `x_n`, the
/// drop identities at `degree`: above the threshold the Hilbert function
/// drops by exactly the number of top-variable generators of that degree,
/// below it the function strictly grows, and the threshold is the first
/// weak descent.
pub fn drop_equals_generator_count(ideal: &MonomialIdeal, degree: usize) -> Result<DropReport> {
    let n = ideal.num_vars();
    if n < 2 {
        return Err(Error::HypothesisNotMet(
            "drop analysis needs at least two variables".into(),
        ));
    }
    let last = ideal
        .last_generator()
        .map_err(|e| Error::HypothesisNotMet(format!("last generator unavailable: {e}")))?;
    if last.mu != n {
        return Err(Error::HypothesisNotMet(format!(
            "last generator {} does not involve x{n}",
            last.monomial
        )));
    }
    if !is_arl_fast(ideal) {
        return Err(Error::HypothesisNotMet(
            "ideal is not almost reverse lexicographic".into(),
        ));
    }
    let threshold = match ideal.f_eval(n - 1, &vec![0; n.saturating_sub(2)])? {
        FValue::Finite(v) => v,
        FValue::Infinite => {
            return Err(Error::HypothesisNotMet(format!(
                "no positive power of x{} lies in the ideal",
                n - 1
            )))
        }
    };
    let h_at = hilbert_function(ideal, degree);
    let h_prev = if degree == 0 {
        0
    } else {
        hilbert_function(ideal, degree - 1)
    };

    let mut min_drop_degree = 0;
    let mut prev = 0u64;
    loop {
        let value = hilbert_function(ideal, min_drop_degree);
        if min_drop_degree > 0 && value <= prev {
            break;
        }
        prev = value;
        min_drop_degree += 1;
        assert!(
            min_drop_degree <= threshold + 1,
            "descent must appear by the threshold"
        );
    }

    let (generator_count, local_holds) = if degree >= threshold {
        let count = ideal.count_generators_by(n, degree);
        (
            Some(count),
            h_prev >= h_at && (h_prev - h_at) as usize == count,
        )
    } else {
        (None, h_at > h_prev)
    };
    Ok(DropReport {
        degree,
        threshold,
        h_prev,
        h_at,
        generator_count,
        min_drop_degree,
        holds: local_holds && min_drop_degree == threshold,
    })
}
