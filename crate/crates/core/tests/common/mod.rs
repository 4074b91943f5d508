//! Shared helpers for the integration suites: worked fixtures, a
//! deterministic PRNG, and random generators for strongly stable ideals,
//! ARL augmentation chains, and candidate sequences.

#![allow(dead_code)]

use arl_core::arl::{augment, t_set, AugmentationPlan};
use arl_core::hilbert::hilbert_values;
use arl_core::ideal::MonomialIdeal;
use arl_core::monomial::Monomial;
use arl_core::sequence::{HilbertSeq, Tail};

pub fn ideal_from(n: usize, rows: &[&[usize]]) -> MonomialIdeal {
    let gens = rows.iter().map(|r| Monomial::new(r.to_vec())).collect();
    MonomialIdeal::new(n, gens).unwrap()
}

pub fn exponent_rows(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

/// x^3, x^2y, xy^3, y^5, y^4z^2, xy^2z^3, x^2z^5.
pub fn seven_generator_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 2],
            &[1, 2, 3],
            &[2, 0, 5],
        ],
    )
}

/// x^3, x^2y, xy^3, y^5, y^4z^2, xy^2z^2, y^3z^3, x^2z^5: strongly stable
/// but not ARL.
pub fn eight_generator_non_arl_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 2],
            &[1, 2, 2],
            &[0, 3, 3],
            &[2, 0, 5],
        ],
    )
}

/// x^3, x^2y, xy^3, y^5 in two variables.
pub fn four_generator_plane_ideal() -> MonomialIdeal {
    ideal_from(2, &[&[3, 0], &[2, 1], &[1, 3], &[0, 5]])
}

/// The eight-generator ARL ideal realizing (1,3,6,8,9,9,6,5,5,...).
pub fn eight_generator_arl_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 2],
            &[1, 2, 3],
            &[0, 3, 3],
            &[2, 0, 5],
        ],
    )
}

/// The thirteen-generator ARL ideal realizing (1,3,6,8,9,8,6,3,1,0,...).
pub fn thirteen_generator_ideal() -> MonomialIdeal {
    ideal_from(
        3,
        &[
            &[3, 0, 0],
            &[2, 1, 0],
            &[1, 3, 0],
            &[0, 5, 0],
            &[0, 4, 1],
            &[1, 2, 3],
            &[0, 3, 3],
            &[2, 0, 5],
            &[1, 1, 5],
            &[0, 2, 5],
            &[1, 0, 7],
            &[0, 1, 7],
            &[0, 0, 9],
        ],
    )
}

/// SplitMix64: small, fast, and fully reproducible across runs.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`, `bound > 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }
}

/// The smallest strongly stable ideal containing the seed monomials:
/// close the seeds under single moves `x_j * M / x_i` with `j < i`, then
/// minimalize.
pub fn borel_closure(n: usize, seeds: Vec<Vec<usize>>) -> MonomialIdeal {
    let mut seen: std::collections::BTreeSet<Vec<usize>> = seeds.iter().cloned().collect();
    let mut queue: Vec<Vec<usize>> = seeds;
    while let Some(exps) = queue.pop() {
        for i in 1..n {
            if exps[i] == 0 {
                continue;
            }
            for j in 0..i {
                let mut moved = exps.clone();
                moved[i] -= 1;
                moved[j] += 1;
                if seen.insert(moved.clone()) {
                    queue.push(moved);
                }
            }
        }
    }
    let gens = seen.into_iter().map(Monomial::new).collect();
    MonomialIdeal::new(n, gens).unwrap()
}

/// A random strongly stable ideal with `num_vars` variables and generator
/// degrees at most `max_degree`.
pub fn random_strongly_stable(
    rng: &mut TestRng,
    num_vars: usize,
    max_degree: usize,
) -> MonomialIdeal {
    let seed_count = rng.range(1, 3);
    let mut seeds = Vec::with_capacity(seed_count);
    for _ in 0..seed_count {
        let degree = rng.range(1, max_degree);
        let mut exps = vec![0usize; num_vars];
        for _ in 0..degree {
            exps[rng.below(num_vars)] += 1;
        }
        seeds.push(exps);
    }
    borel_closure(num_vars, seeds)
}

/// True when the ideal is nonzero, non-unit, and contains a positive power
/// of `x_{mu-1}` (so its index sets are finite). With `mu = 1` there is
/// nothing to require.
pub fn satisfies_index_hypotheses(ideal: &MonomialIdeal) -> bool {
    let last = match ideal.last_generator() {
        Ok(last) => last,
        Err(_) => return false,
    };
    if last.mu == 1 {
        return true;
    }
    ideal
        .f_eval(last.mu - 1, &vec![0; last.mu - 2])
        .map(|f| f.is_finite())
        .unwrap_or(false)
}

/// A random ARL ideal built by a chain of full-T augmentations, so its last
/// generator is a pure power of `x_{num_vars}`. Also returns the lifted
/// base the final augmentation started from (whose last generator is a pure
/// power of `x_{num_vars - 1}`) when `num_vars >= 2`.
pub fn random_arl_chain(
    rng: &mut TestRng,
    num_vars: usize,
    max_power: usize,
) -> (MonomialIdeal, Option<MonomialIdeal>) {
    if num_vars == 1 {
        let f = rng.range(1, max_power);
        let ideal = MonomialIdeal::new(1, vec![Monomial::new(vec![f])]).unwrap();
        return (ideal, None);
    }
    let (below, _) = random_arl_chain(rng, num_vars - 1, max_power);
    let base = below.lift(num_vars);
    let tuples = t_set(&base).unwrap();
    let t0 = base
        .f_eval(num_vars - 1, &vec![0; num_vars - 2])
        .unwrap()
        .finite()
        .unwrap();
    let mut sum = t0 + rng.below(3);
    let mut chosen = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let weight: usize = tuple.iter().sum();
        assert!(sum > weight, "assigned exponents stay positive");
        chosen.push((tuple.clone(), sum - weight));
        sum += rng.below(2);
    }
    let augmented = augment(&AugmentationPlan::new(base.clone(), chosen)).unwrap();
    (augmented, Some(base))
}

/// The Hilbert sequence of an eventually-constant quotient, read off as a
/// prefix plus constant tail. Works for any ideal whose Hilbert function is
/// constant past the maximal generator degree.
pub fn sequence_of_ideal(ideal: &MonomialIdeal) -> HilbertSeq {
    let top_degree = ideal
        .generators()
        .iter()
        .map(Monomial::total_degree)
        .max()
        .unwrap_or(0);
    let values = hilbert_values(ideal, top_degree + 1);
    debug_assert_eq!(values[top_degree], values[top_degree + 1]);
    let constant = *values.last().unwrap();
    HilbertSeq::new(values, Tail::Constant { value: constant }).unwrap()
}

/// A random prefix sequence biased toward the unimodal shape: a rise, a
/// fall, then a constant or zero tail. Not guaranteed unimodal at each
/// tail; callers filter.
pub fn random_candidate_sequence(rng: &mut TestRng, max_h1: usize, max_len: usize) -> HilbertSeq {
    let h1 = rng.below(max_h1 + 1) as u64;
    let mut prefix: Vec<u64> = vec![1];
    if h1 == 0 {
        return HilbertSeq::new(prefix, Tail::Zero).unwrap();
    }
    prefix.push(h1);
    let len = rng.range(2, max_len);
    let mut rising = true;
    while prefix.len() < len {
        let last = *prefix.last().unwrap();
        let next = if rising && rng.below(4) < 3 {
            last + rng.below(3) as u64
        } else {
            rising = false;
            last.saturating_sub(rng.below(3) as u64)
        };
        prefix.push(next);
        if next == 0 {
            break;
        }
    }
    let tail = if *prefix.last().unwrap() == 0 || rng.below(2) == 0 {
        // zero tails must not resurrect: cut at the first zero
        if let Some(z) = prefix.iter().position(|&v| v == 0) {
            prefix.truncate(z + 1);
        }
        Tail::Zero
    } else {
        Tail::Constant {
            value: *prefix.last().unwrap(),
        }
    };
    HilbertSeq::new(prefix, tail).unwrap()
}
