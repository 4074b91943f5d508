//! Monomial ideals with canonical minimal generating sets.
//!
//! An ideal is stored as its ambient variable count together with the unique
//! minimal generating set, kept in canonical order: ascending total degree,
//! descending degrevlex within a degree. The last element of the list is
//! therefore the last generator `M_omega` (maximal degree, degrevlex-minimal
//! among that degree).
//!
//! On top of membership and stability checks this module evaluates the
//! generator-degree functions
//!
//! `f_i(a_1, ..., a_{i-1}) = min { t | x_1^{a_1} ... x_{i-1}^{a_{i-1}} x_i^t
//! lies in the ideal }`
//!
//! and enumerates the index sets `I_1, ..., I_{mu-1}` of prefix tuples that
//! stay strictly below every `f`-bound; these parameterize the minimal
//! generators by their largest variable.

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{canonical_cmp, degrevlex, Monomial};

/// Value of an `f_i` evaluation: a finite minimal exponent or infinity when
/// no exponent works.
///
/// Serialized as a JSON number, or the string `"inf"` for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FValue {
    Finite(usize),
    Infinite,
}

impl FValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, FValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            FValue::Finite(v) => Some(*v),
            FValue::Infinite => None,
        }
    }

    /// `|alpha| + f(alpha)` with infinity absorbing.
    pub fn plus(&self, offset: usize) -> FValue {
        match self {
            FValue::Finite(v) => FValue::Finite(v + offset),
            FValue::Infinite => FValue::Infinite,
        }
    }
}

impl PartialOrd for FValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FValue::Finite(a), FValue::Finite(b)) => a.cmp(b),
            (FValue::Finite(_), FValue::Infinite) => Ordering::Less,
            (FValue::Infinite, FValue::Finite(_)) => Ordering::Greater,
            (FValue::Infinite, FValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for FValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FValue::Finite(v) => write!(f, "{v}"),
            FValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for FValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FValue::Finite(v) => serializer.serialize_u64(*v as u64),
            FValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for FValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(v) => Ok(FValue::Finite(v as usize)),
            Raw::Text(s) if s == "inf" => Ok(FValue::Infinite),
            Raw::Text(s) => Err(D::Error::custom(format!(
                "expected a number or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// The last generator of a nonzero ideal: the degrevlex-minimal generator
/// among those of maximal degree, together with `mu`, its largest variable
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LastGenerator {
    pub monomial: Monomial,
    pub mu: usize,
}

/// Witness for a strong-stability failure: generator `M` contains `x_i`,
/// but `x_j * M / x_i` is outside the ideal for some `j < i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityWitness {
    pub generator: Monomial,
    pub i: usize,
    pub j: usize,
}

/// A monomial ideal in `k[x_1, ..., x_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`: redundant generators (those
    /// divisible by another) are dropped, duplicates removed, and the rest
    /// sorted canonically.
    pub fn new(num_vars: usize, raw: Vec<Monomial>) -> Result<Self> {
        assert!(num_vars >= 1, "ambient ring needs at least one variable");
        for g in &raw {
            if g.num_vars() != num_vars {
                return Err(Error::AmbientMismatch {
                    expected: num_vars,
                    actual: g.num_vars(),
                });
            }
        }
        let mut sorted = raw;
        sorted.sort_by(|a, b| canonical_cmp(a.exponents(), b.exponents()));
        sorted.dedup();
        let mut generators: Vec<Monomial> = Vec::with_capacity(sorted.len());
        // Scanning by ascending degree, any divisor of a candidate has
        // already been kept.
        'next: for candidate in sorted {
            for kept in &generators {
                if kept.divides(&candidate)? {
                    continue 'next;
                }
            }
            generators.push(candidate);
        }
        Ok(Self {
            num_vars,
            generators,
        })
    }

    /// The zero ideal (no generators).
    pub fn zero(num_vars: usize) -> Self {
        assert!(num_vars >= 1);
        Self {
            num_vars,
            generators: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Canonical minimal generating set.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    /// Union with extra generators, re-minimalized.
    pub fn adjoin(&self, extra: &[Monomial]) -> Result<Self> {
        let mut all = self.generators.clone();
        all.extend_from_slice(extra);
        Self::new(self.num_vars, all)
    }

    /// Embeds every generator into a ring with `n >= num_vars` variables by
    /// trailing zeros.
    pub fn lift(&self, n: usize) -> Self {
        assert!(n >= self.num_vars);
        Self {
            num_vars: n,
            generators: self.generators.iter().map(|g| g.lift(n)).collect(),
        }
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.num_vars() != self.num_vars {
            return Err(Error::AmbientMismatch {
                expected: self.num_vars,
                actual: m.num_vars(),
            });
        }
        Ok(self.contains_exponents(m.exponents()))
    }

    pub(crate) fn contains_exponents(&self, exps: &[usize]) -> bool {
        debug_assert_eq!(exps.len(), self.num_vars);
        self.generators
            .iter()
            .any(|g| g.exponents().iter().zip(exps).all(|(a, b)| a <= b))
    }

    /// Checks strong stability: replacing any variable of a member by an
    /// earlier variable stays in the ideal. Checking the generators
    /// suffices. Returns the first violating triple if any.
    pub fn strong_stability_witness(&self) -> Option<StabilityWitness> {
        for g in &self.generators {
            let exps = g.exponents();
            for i in 1..=self.num_vars {
                if exps[i - 1] == 0 {
                    continue;
                }
                for j in 1..i {
                    let mut moved = exps.to_vec();
                    moved[i - 1] -= 1;
                    moved[j - 1] += 1;
                    if !self.contains_exponents(&moved) {
                        return Some(StabilityWitness {
                            generator: g.clone(),
                            i,
                            j,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.strong_stability_witness().is_none()
    }

    /// Last generator of a nonzero, non-unit ideal.
    pub fn last_generator(&self) -> Result<LastGenerator> {
        let last = self.generators.last().ok_or(Error::NoLastGenerator)?;
        let mu = last.max_index().ok_or(Error::UnitIdeal)?;
        Ok(LastGenerator {
            monomial: last.clone(),
            mu,
        })
    }

    /// Evaluates `f_i` at the prefix tuple `alpha` of length `i - 1`.
    ///
    /// Computed in closed form: the minimum of `g_i` over all generators `g`
    /// with `g_j <= alpha_j` for `j < i` and `g_j = 0` for `j > i`, or
    /// infinity when no generator qualifies.
    pub fn f_eval(&self, i: usize, alpha: &[usize]) -> Result<FValue> {
        if i < 1 || i > self.num_vars {
            return Err(Error::IndexOutOfRange {
                index: i,
                num_vars: self.num_vars,
            });
        }
        if alpha.len() != i - 1 {
            return Err(Error::AmbientMismatch {
                expected: i - 1,
                actual: alpha.len(),
            });
        }
        let mut best: Option<usize> = None;
        for g in &self.generators {
            let exps = g.exponents();
            let prefix_ok = exps[..i - 1].iter().zip(alpha).all(|(a, b)| a <= b);
            let suffix_zero = exps[i..].iter().all(|&e| e == 0);
            if prefix_ok && suffix_zero {
                let candidate = exps[i - 1];
                best = Some(best.map_or(candidate, |b: usize| b.min(candidate)));
            }
        }
        Ok(best.map_or(FValue::Infinite, FValue::Finite))
    }

    /// Index sets `I_1, ..., I_{mu-1}`, each sorted in descending degrevlex.
    ///
    /// Level `i < mu-1` holds all tuples strictly below the `f`-bounds at
    /// every coordinate; level `mu-1` is additionally filtered to the tuples
    /// that are degrevlex `>=` the first `mu-1` coordinates of the last
    /// generator.
    ///
    /// Requires a strongly stable, nonzero, non-unit ideal that contains
    /// some positive power of `x_{mu-1}`; otherwise the level-`(mu-1)` set
    /// would be infinite. An ideal with `mu = 1` has no index sets.
    pub fn index_sets(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let last = self.last_generator()?;
        if let Some(w) = self.strong_stability_witness() {
            return Err(Error::HypothesisNotMet(format!(
                "ideal is not strongly stable: x{}*{}/x{} is outside the ideal",
                w.j, w.generator, w.i
            )));
        }
        let mu = last.mu;
        if mu == 1 {
            return Ok(Vec::new());
        }
        // Finiteness hypothesis: some positive power of x_{mu-1} lies in the
        // ideal, i.e. f_{mu-1}(0) is finite.
        if self.f_eval(mu - 1, &vec![0; mu - 2])? == FValue::Infinite {
            return Err(Error::InfiniteIndexSet {
                level: mu - 1,
                variable: mu - 1,
            });
        }
        let omega_prefix = &last.monomial.exponents()[..mu - 1];
        let mut sets: Vec<Vec<Vec<usize>>> = Vec::with_capacity(mu - 1);
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        for level in 1..=mu - 1 {
            let mut next: Vec<Vec<usize>> = Vec::new();
            for prefix in &frontier {
                let bound = match self.f_eval(level, prefix)? {
                    FValue::Finite(b) => b,
                    FValue::Infinite => {
                        return Err(Error::InfiniteIndexSet {
                            level,
                            variable: level,
                        })
                    }
                };
                for a in 0..bound {
                    let mut tuple = prefix.clone();
                    tuple.push(a);
                    next.push(tuple);
                }
            }
            if level == mu - 1 {
                next.retain(|tuple| degrevlex(tuple, omega_prefix) != Ordering::Less);
            }
            next.sort_by(|a, b| degrevlex(b, a));
            frontier = next.clone();
            sets.push(next);
        }
        Ok(sets)
    }

    /// The index set at one level: level 0 is the singleton empty tuple,
    /// level `i >= 1` is `I_i` as produced by [`Self::index_sets`].
    pub fn prefix_index_set(&self, level: usize) -> Result<Vec<Vec<usize>>> {
        if level == 0 {
            return Ok(vec![Vec::new()]);
        }
        let sets = self.index_sets()?;
        sets.get(level - 1)
            .cloned()
            .ok_or_else(|| Error::HypothesisNotMet(format!("no index set at level {level}")))
    }

    /// Rebuilds the generating set purely from `f`-values and index sets:
    /// `x_1^{f_1}` plus, for every level-`i` tuple `alpha` with a finite
    /// bound, `x^alpha * x_{i+1}^{f_{i+1}(alpha)}`. Tuples with an infinite
    /// bound contribute no generator.
    pub fn reconstruct_generators(&self) -> Result<MonomialIdeal> {
        let f1 = match self.f_eval(1, &[])? {
            FValue::Finite(v) => v,
            FValue::Infinite => {
                return Err(Error::HypothesisNotMet(
                    "no pure power of x1 lies in the ideal".into(),
                ))
            }
        };
        let mut exps = vec![0usize; self.num_vars];
        exps[0] = f1;
        let mut gens = vec![Monomial::new(exps)];
        for (idx, set) in self.index_sets()?.iter().enumerate() {
            let level = idx + 1;
            for alpha in set {
                match self.f_eval(level + 1, alpha)? {
                    FValue::Finite(t) => {
                        debug_assert!(t > 0, "index-set tuples denote monomials outside the ideal");
                        let mut exps = vec![0usize; self.num_vars];
                        exps[..level].copy_from_slice(alpha);
                        exps[level] = t;
                        gens.push(Monomial::new(exps));
                    }
                    FValue::Infinite => {}
                }
            }
        }
        MonomialIdeal::new(self.num_vars, gens)
    }

    /// The colon ideal `(I : x_n)`: divide each generator once by the last
    /// variable where possible, then re-minimalize.
    pub fn colon_by_last_variable(&self) -> MonomialIdeal {
        let n = self.num_vars;
        let quotients: Vec<Monomial> = self
            .generators
            .iter()
            .map(|g| {
                let mut exps = g.exponents().to_vec();
                if exps[n - 1] > 0 {
                    exps[n - 1] -= 1;
                }
                Monomial::new(exps)
            })
            .collect();
        MonomialIdeal::new(n, quotients).expect("quotients stay in the same ring")
    }

    /// Number of minimal generators with the given largest variable index
    /// and total degree.
    pub fn count_generators_by(&self, max_index: usize, degree: usize) -> usize {
        self.generators
            .iter()
            .filter(|g| g.max_index() == Some(max_index) && g.total_degree() == degree)
            .count()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize)]
struct IdealRepr {
    n: usize,
    generators: Vec<Vec<usize>>,
}

/// Generators are accepted either as exponent lists or as symbolic text
/// like `"x1^2*x3^5"`.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawGenerator {
    Exponents(Vec<usize>),
    Symbolic(String),
}

#[derive(Deserialize)]
struct RawIdeal {
    n: usize,
    generators: Vec<RawGenerator>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            n: self.num_vars,
            generators: self
                .generators
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RawIdeal::deserialize(deserializer)?;
        if repr.n == 0 {
            return Err(D::Error::custom("ambient ring needs at least one variable"));
        }
        let gens = repr
            .generators
            .into_iter()
            .map(|raw| match raw {
                RawGenerator::Exponents(exps) if exps.is_empty() => {
                    Err(Error::Parse("empty exponent list".into()))
                }
                RawGenerator::Exponents(exps) => Ok(Monomial::new(exps)),
                RawGenerator::Symbolic(text) => Monomial::parse(&text, repr.n),
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        MonomialIdeal::new(repr.n, gens).map_err(|e| D::Error::custom(e.to_string()))
    }
}
