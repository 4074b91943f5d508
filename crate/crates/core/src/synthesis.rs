//! Construction of an almost reverse lexicographic ideal realizing a given
//! unimodal-at-each-tail sequence as its Hilbert function.
//!
//! The construction recurses on the derived sequence: realize it one
//! variable down, lift the result, and, while the lifted ideal's Hilbert
//! function overshoots the target, adjoin generators for the largest unused
//! index tuples at the first overshoot degree. Every step is validated by
//! the augmentation checks and, in debug builds, by direct Hilbert
//! evaluation.

use serde::Serialize;

use crate::arl::{augment, t_set, AugmentationPlan};
use crate::error::{Error, Result};
use crate::hilbert::hilbert_function;
use crate::ideal::{FValue, MonomialIdeal};
use crate::monomial::Monomial;
use crate::sequence::HilbertSeq;

/// One tuple taken from the T set, with its assigned last-variable exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChosenTuple {
    pub tuple: Vec<usize>,
    pub g: usize,
}

/// One augmentation iteration: the overshoot degree `d_i`, the number of
/// tuples taken, and the generators added (all of degree `d_i`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SynthesisStep {
    pub degree: usize,
    pub count: usize,
    pub chosen: Vec<ChosenTuple>,
    pub added: Vec<Monomial>,
}

/// One recursion level: the ring size, the lifted ideal the level starts
/// from, its augmentation steps, and the level result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SynthesisLevel {
    pub num_vars: usize,
    pub start: MonomialIdeal,
    pub steps: Vec<SynthesisStep>,
    pub result: MonomialIdeal,
}

/// Full record of a synthesis run, innermost ring first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SynthesisTrace {
    pub levels: Vec<SynthesisLevel>,
    pub final_ideal: MonomialIdeal,
}

impl SynthesisTrace {
    /// Augmentation steps of the outermost ring.
    pub fn top_steps(&self) -> &[SynthesisStep] {
        self.levels
            .last()
            .map(|level| level.steps.as_slice())
            .unwrap_or(&[])
    }
}

/// Builds an ARL ideal in `max(1, h_1)` variables whose Hilbert function is
/// the given sequence. Fails with a witness if the sequence is not unimodal
/// at each tail.
pub fn synthesize(h: &HilbertSeq, horizon: usize) -> Result<(MonomialIdeal, SynthesisTrace)> {
    let report = h.is_unimodal_at_each_tail(horizon)?;
    if let Some((level, degree)) = report.witness {
        return Err(Error::NotUnimodal { level, degree });
    }
    let mut levels = Vec::new();
    let ideal = build(h, horizon, &mut levels)?;
    let trace = SynthesisTrace {
        levels,
        final_ideal: ideal.clone(),
    };
    Ok((ideal, trace))
}

fn build(
    h: &HilbertSeq,
    horizon: usize,
    levels: &mut Vec<SynthesisLevel>,
) -> Result<MonomialIdeal> {
    let h1 = h.h1()? as usize;
    if h1 <= 1 {
        // the sequence is 1,...,1 forever or 1,...,1,0,...; realize it in
        // one variable
        let ideal = match h.first_zero()? {
            Some(f1) => MonomialIdeal::new(1, vec![Monomial::new(vec![f1])])?,
            None => MonomialIdeal::zero(1),
        };
        levels.push(SynthesisLevel {
            num_vars: 1,
            start: ideal.clone(),
            steps: Vec::new(),
            result: ideal.clone(),
        });
        return Ok(ideal);
    }

    let below = build(&h.derived()?, horizon, levels)?;
    let n = h1;
    let start = below.lift(n);

    let analysis = h.tail_analysis(horizon)?;
    let r0 = match analysis.r[0] {
        FValue::Infinite => {
            // the lift is already exact: the last variable stays regular
            levels.push(SynthesisLevel {
                num_vars: n,
                start: start.clone(),
                steps: Vec::new(),
                result: start.clone(),
            });
            return Ok(start);
        }
        FValue::Finite(r) => r,
    };

    let tuples = t_set(&start)?;
    let stabilization = h
        .stabilization_degree()?
        .expect("a sequence with finite r_0 stabilizes");
    let scan_to = stabilization.max(r0);
    let mut used = 0usize;
    let mut current = start.clone();
    let mut steps: Vec<SynthesisStep> = Vec::new();
    let mut d_prev = r0;

    loop {
        let mut found = None;
        for d in d_prev..=scan_to {
            let have = hilbert_function(&current, d);
            let want = h.value_at(d)?;
            debug_assert!(have >= want, "the running ideal can never undershoot");
            if have > want {
                found = Some((d, have, want));
                break;
            }
        }
        // beyond the scan range both sides are constant, so equality there
        // is equality everywhere
        let Some((d_i, have, want)) = found else {
            break;
        };
        let t_i = (have - want) as usize;
        assert!(
            used + t_i <= tuples.len(),
            "the T set cannot run out before the target is met"
        );
        let chosen: Vec<(Vec<usize>, usize)> = tuples[used..used + t_i]
            .iter()
            .map(|tuple| {
                let weight: usize = tuple.iter().sum();
                debug_assert!(d_i > weight, "assigned exponents stay positive");
                (tuple.clone(), d_i - weight)
            })
            .collect();
        let next = augment(&AugmentationPlan::new(current.clone(), chosen.clone()))?;
        used += t_i;

        #[cfg(debug_assertions)]
        {
            // agreement below d_i, flat at h_{d_i} from d_i on
            for d in 0..=d_i + 1 {
                let expect = if d < d_i { h.value_at(d)? } else { want };
                assert_eq!(hilbert_function(&next, d), expect, "degree {d}");
            }
            assert_eq!((tuples.len() - used) as u64, hilbert_function(&next, d_i));
        }

        let added: Vec<Monomial> = chosen
            .iter()
            .map(|(tuple, g)| {
                let mut exps = vec![0usize; n];
                exps[..n - 1].copy_from_slice(tuple);
                exps[n - 1] = *g;
                Monomial::new(exps)
            })
            .collect();
        steps.push(SynthesisStep {
            degree: d_i,
            count: t_i,
            chosen: chosen
                .into_iter()
                .map(|(tuple, g)| ChosenTuple { tuple, g })
                .collect(),
            added,
        });
        current = next;
        d_prev = d_i;
    }

    levels.push(SynthesisLevel {
        num_vars: n,
        start,
        steps,
        result: current.clone(),
    });
    Ok(current)
}
