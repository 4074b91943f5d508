//! Almost reverse lexicographic (ARL) checks and generator augmentation.
//!
//! An ideal is ARL when it contains every monomial that is degrevlex-greater
//! than some minimal generator of the same degree. That definition is
//! checked directly by finite enumeration per generator degree. For strongly
//! stable ideals whose index sets are finite there is an equivalent pairwise
//! criterion on the index-set tuples: whenever `alpha > beta` in some `I_i`,
//!
//! `|alpha| + f_{i+1}(alpha) <= |beta| + f_{i+1}(beta)`.
//!
//! The augmentation step extends an ARL ideal whose last generator is a pure
//! power of the next-to-last variable by new generators involving the last
//! variable, one per chosen index tuple, and is the engine of the synthesis
//! algorithm.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{FValue, MonomialIdeal};
use crate::monomial::{degrevlex, monomials_of_degree_desc, Monomial};
use std::cmp::Ordering;

/// Witness against the definition: `monomial` has the same degree as the
/// minimal generator `generator`, is degrevlex-greater, and lies outside the
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArlWitness {
    pub monomial: Monomial,
    pub generator: Monomial,
}

/// Outcome of the definition check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArlVerdict {
    pub is_arl: bool,
    pub witness: Option<ArlWitness>,
}

/// Checks the definition by enumeration.
///
/// Generators are scanned in descending degrevlex order; for each generator
/// `N` the monomials of the same degree above `N` are scanned in descending
/// degrevlex order and tested for membership, so the returned witness is
/// deterministic.
pub fn check_arl_definition(ideal: &MonomialIdeal) -> ArlVerdict {
    let n = ideal.num_vars();
    let mut gens: Vec<&Monomial> = ideal.generators().iter().collect();
    gens.sort_by(|a, b| degrevlex(b.exponents(), a.exponents()));
    for generator in gens {
        let degree = generator.total_degree();
        for candidate in monomials_of_degree_desc(n, degree) {
            if candidate == *generator {
                break;
            }
            if !ideal.contains_exponents(candidate.exponents()) {
                return ArlVerdict {
                    is_arl: false,
                    witness: Some(ArlWitness {
                        monomial: candidate,
                        generator: generator.clone(),
                    }),
                };
            }
        }
    }
    ArlVerdict {
        is_arl: true,
        witness: None,
    }
}

/// Witness against the pairwise criterion: `greater > lesser` in the level-i
/// index set, but `|greater| + f_{i+1}(greater)` exceeds
/// `|lesser| + f_{i+1}(lesser)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionWitness {
    pub level: usize,
    pub greater: Vec<usize>,
    pub lesser: Vec<usize>,
    pub greater_sum: FValue,
    pub lesser_sum: FValue,
}

/// Outcome of the criterion check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub is_arl: bool,
    pub witness: Option<CriterionWitness>,
}

/// Checks the pairwise criterion on the index sets.
///
/// Requires a strongly stable ideal whose index sets are finite (some
/// positive power of `x_{mu-1}` lies in the ideal). With `mu = 1` the
/// condition is vacuous.
pub fn check_arl_criterion(ideal: &MonomialIdeal) -> Result<CriterionVerdict> {
    let last = ideal.last_generator().map_err(|e| match e {
        Error::NoLastGenerator => {
            Error::HypothesisNotMet("the zero ideal has no last generator".into())
        }
        Error::UnitIdeal => Error::HypothesisNotMet("the unit ideal has no last generator".into()),
        other => other,
    })?;
    if ideal.strong_stability_witness().is_some() {
        return Err(Error::HypothesisNotMet(
            "ideal is not strongly stable".into(),
        ));
    }
    if last.mu == 1 {
        return Ok(CriterionVerdict {
            is_arl: true,
            witness: None,
        });
    }
    let sets = ideal.index_sets()?;
    for (idx, set) in sets.iter().enumerate() {
        let level = idx + 1;
        let sums: Vec<FValue> = set
            .iter()
            .map(|alpha| {
                let offset: usize = alpha.iter().sum();
                Ok(ideal.f_eval(level + 1, alpha)?.plus(offset))
            })
            .collect::<Result<_>>()?;
        for j in 0..set.len() {
            for k in j + 1..set.len() {
                if sums[j] > sums[k] {
                    return Ok(CriterionVerdict {
                        is_arl: false,
                        witness: Some(CriterionWitness {
                            level,
                            greater: set[j].clone(),
                            lesser: set[k].clone(),
                            greater_sum: sums[j],
                            lesser_sum: sums[k],
                        }),
                    });
                }
            }
        }
    }
    Ok(CriterionVerdict {
        is_arl: true,
        witness: None,
    })
}

/// ARL test preferring the cheap pairwise criterion, falling back to the
/// enumeration check when the criterion's hypotheses fail. The two agree
/// wherever both apply.
pub(crate) fn is_arl_fast(ideal: &MonomialIdeal) -> bool {
    match check_arl_criterion(ideal) {
        Ok(verdict) => verdict.is_arl,
        Err(_) => check_arl_definition(ideal).is_arl,
    }
}

/// A violation of the two-sided degree inequalities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CorollaryViolation {
    /// `|alpha| + f_i(alpha) > f_i(0)` for some level-(i-1) tuple.
    Left {
        level: usize,
        alpha: Vec<usize>,
        sum: FValue,
        f_at_zero: FValue,
    },
    /// `f_i(0) > |beta| + f_{i+1}(beta)` for some level-i tuple.
    Right {
        level: usize,
        beta: Vec<usize>,
        f_at_zero: FValue,
        sum: FValue,
    },
    /// Generators where a strictly larger max-index comes with a strictly
    /// smaller degree.
    DegreeOrder {
        smaller_max: Monomial,
        larger_max: Monomial,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub holds: bool,
    pub violation: Option<CorollaryViolation>,
}

/// Verifies the sandwich
/// `|alpha| + f_i(alpha) <= f_i(0) <= |beta| + f_{i+1}(beta)` over all
/// `alpha` in `I_{i-1}`, `beta` in `I_i`, `1 <= i <= mu-1`, together with
/// its consequence that generators with larger max-index have weakly larger
/// degree.
///
/// The inequalities are guaranteed for ARL ideals; the check itself only
/// needs a strongly stable ideal with finite index sets.
pub fn corollary_inequalities(ideal: &MonomialIdeal) -> Result<CorollaryReport> {
    if ideal.strong_stability_witness().is_some() {
        return Err(Error::HypothesisNotMet(
            "ideal is not strongly stable".into(),
        ));
    }
    let last = match ideal.last_generator() {
        Ok(last) => last,
        // The zero ideal satisfies everything vacuously.
        Err(Error::NoLastGenerator) => {
            return Ok(CorollaryReport {
                holds: true,
                violation: None,
            })
        }
        Err(e) => return Err(e),
    };
    let mu = last.mu;
    if mu >= 2 {
        let sets = ideal.index_sets()?;
        for level in 1..=mu - 1 {
            let f_at_zero = ideal.f_eval(level, &vec![0; level - 1])?;
            let lower = ideal.prefix_index_set(level - 1)?;
            for alpha in &lower {
                let offset: usize = alpha.iter().sum();
                let sum = ideal.f_eval(level, alpha)?.plus(offset);
                if sum > f_at_zero {
                    return Ok(CorollaryReport {
                        holds: false,
                        violation: Some(CorollaryViolation::Left {
                            level,
                            alpha: alpha.clone(),
                            sum,
                            f_at_zero,
                        }),
                    });
                }
            }
            for beta in &sets[level - 1] {
                let offset: usize = beta.iter().sum();
                let sum = ideal.f_eval(level + 1, beta)?.plus(offset);
                if f_at_zero > sum {
                    return Ok(CorollaryReport {
                        holds: false,
                        violation: Some(CorollaryViolation::Right {
                            level,
                            beta: beta.clone(),
                            f_at_zero,
                            sum,
                        }),
                    });
                }
            }
        }
    }
    for a in ideal.generators() {
        for b in ideal.generators() {
            let (ma, mb) = match (a.max_index(), b.max_index()) {
                (Some(ma), Some(mb)) => (ma, mb),
                _ => continue,
            };
            if ma < mb && a.total_degree() > b.total_degree() {
                return Ok(CorollaryReport {
                    holds: false,
                    violation: Some(CorollaryViolation::DegreeOrder {
                        smaller_max: a.clone(),
                        larger_max: b.clone(),
                    }),
                });
            }
        }
    }
    Ok(CorollaryReport {
        holds: true,
        violation: None,
    })
}

/// The T set of an ideal generated away from the last variable: all tuples
/// `(alpha, b)` with `alpha` in `I_{n-2}` and `0 <= b < f_{n-1}(alpha)`,
/// sorted in descending degrevlex. These are the candidate index tuples for
/// new last-variable generators.
pub fn t_set(core: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let n = core.num_vars();
    if n < 2 {
        return Err(Error::HypothesisNotMet(
            "the T set needs at least two variables".into(),
        ));
    }
    let prefixes = core.prefix_index_set(n - 2)?;
    let mut out = Vec::new();
    for alpha in prefixes {
        let bound = core.f_eval(n - 1, &alpha)?.finite().ok_or_else(|| {
            Error::HypothesisNotMet(format!("no positive power of x{} lies in the ideal", n - 1))
        })?;
        for b in 0..bound {
            let mut tuple = alpha.clone();
            tuple.push(b);
            out.push(tuple);
        }
    }
    out.sort_by(|a, b| degrevlex(b, a));
    Ok(out)
}

/// A plan for adjoining last-variable generators to an ARL base whose
/// generators avoid the last variable except for tuples already taken from
/// the T set.
///
/// `chosen` lists new tuples `A` with their positive exponents `g(A)`,
/// strictly descending in degrevlex. Together with the tuples already
/// present in the base they must form the largest elements of the T set, and
/// the degree condition must hold: with `t` the pure power of `x_{n-1}`
/// generating the top of the base,
/// `t <= |A| + g(A) <= |B| + g(B)` whenever `A > B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationPlan {
    pub base: MonomialIdeal,
    pub chosen: Vec<(Vec<usize>, usize)>,
}

impl AugmentationPlan {
    pub fn new(base: MonomialIdeal, chosen: Vec<(Vec<usize>, usize)>) -> Self {
        Self { base, chosen }
    }
}

/// Validates the plan and returns the augmented ideal. The plan invariants
/// are re-checked here rather than trusted.
pub fn augment(plan: &AugmentationPlan) -> Result<MonomialIdeal> {
    let base = &plan.base;
    let n = base.num_vars();
    if n < 2 {
        return Err(Error::InvalidPlan(
            "ambient ring needs at least two variables".into(),
        ));
    }
    if plan.chosen.is_empty() {
        return Ok(base.clone());
    }

    // Split the base into its x_n-free core and the tuples already chosen.
    let mut core_gens: Vec<Monomial> = Vec::new();
    let mut existing: Vec<(Vec<usize>, usize)> = Vec::new();
    for g in base.generators() {
        let exps = g.exponents();
        if exps[n - 1] == 0 {
            core_gens.push(g.clone());
        } else {
            existing.push((exps[..n - 1].to_vec(), exps[n - 1]));
        }
    }
    let core = MonomialIdeal::new(n, core_gens)?;
    let last = core.last_generator().map_err(|_| {
        Error::InvalidPlan("base has no generator away from the last variable".into())
    })?;
    let exps = last.monomial.exponents();
    let t = exps[n - 2];
    if t == 0 || exps[..n - 2].iter().any(|&e| e > 0) {
        return Err(Error::InvalidPlan(format!(
            "the top generator of the base core must be a pure power of x{}, found {}",
            n - 1,
            last.monomial
        )));
    }

    for (tuple, g) in &plan.chosen {
        if tuple.len() != n - 1 {
            return Err(Error::InvalidPlan(format!(
                "tuple {:?} has length {}, expected {}",
                tuple,
                tuple.len(),
                n - 1
            )));
        }
        if *g == 0 {
            return Err(Error::InvalidPlan(format!("g({tuple:?}) must be positive")));
        }
    }
    for pair in plan.chosen.windows(2) {
        if degrevlex(&pair[0].0, &pair[1].0) != Ordering::Greater {
            return Err(Error::InvalidPlan(
                "chosen tuples must be strictly descending".into(),
            ));
        }
    }

    let t_tuples = t_set(&core).map_err(|e| Error::InvalidPlan(e.to_string()))?;
    let mut combined: Vec<(Vec<usize>, usize)> = existing;
    combined.extend(plan.chosen.iter().cloned());
    combined.sort_by(|a, b| degrevlex(&b.0, &a.0));
    for pair in combined.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::InvalidPlan(format!(
                "tuple {:?} chosen twice",
                pair[0].0
            )));
        }
    }
    if combined.len() > t_tuples.len() {
        return Err(Error::InvalidPlan(
            "more tuples chosen than the T set holds".into(),
        ));
    }
    for (picked, expected) in combined.iter().zip(t_tuples.iter()) {
        if picked.0 != *expected {
            return Err(Error::InvalidPlan(format!(
                "chosen tuples must be the degrevlex-largest elements of the T set; \
                 expected {:?}, found {:?}",
                expected, picked.0
            )));
        }
    }

    let sums: Vec<usize> = combined
        .iter()
        .map(|(tuple, g)| tuple.iter().sum::<usize>() + g)
        .collect();
    if let Some(&first) = sums.first() {
        if first < t {
            return Err(Error::InvalidPlan(format!(
                "degree condition violated: |A| + g(A) = {first} < t = {t}"
            )));
        }
    }
    for pair in sums.windows(2) {
        if pair[0] > pair[1] {
            return Err(Error::InvalidPlan(format!(
                "degree condition violated: sums must not decrease along descending tuples \
                 ({} > {})",
                pair[0], pair[1]
            )));
        }
    }

    let new_gens: Vec<Monomial> = plan
        .chosen
        .iter()
        .map(|(tuple, g)| {
            let mut exps = vec![0usize; n];
            exps[..n - 1].copy_from_slice(tuple);
            exps[n - 1] = *g;
            Monomial::new(exps)
        })
        .collect();
    let augmented = base.adjoin(&new_gens)?;
    if augmented.generators().len() != base.generators().len() + plan.chosen.len() {
        return Err(Error::InvalidPlan(
            "a planned generator is redundant in the union".into(),
        ));
    }
    Ok(augmented)
}
