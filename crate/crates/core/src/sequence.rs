//! Integer sequences with declared tails, derived sequences, and the
//! unimodal-at-each-tail predicate.
//!
//! A sequence is a finite prefix plus a tail rule: eventually zero,
//! eventually constant, or backed by a Froberg series. The derived sequence
//! is `h^(i)_d = max(0, h^(i-1)_d - h^(i-1)_{d-1})` with position zero reset
//! to 1; `r_i` is the first degree where `h^(i)` weakly descends and the
//! depth `D` is the first level with finite `r_i`.
//!
//! Every answer here is exact. Prefix-backed tails force a descent at the
//! prefix boundary, so all `r_i` are finite and found inside a bounded
//! window. Series-backed sequences delegate to the tail classification of
//! the Froberg module: a level is certified strictly increasing (`r = inf`)
//! or stabilizes at a known degree, and the numeric window is cross-checked
//! against the per-level series.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::froberg::{classify_tail, froberg_values, FroebergSpec};
use crate::ideal::FValue;

/// Tail rule of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tail {
    /// Zero from the end of the prefix onward.
    Zero,
    /// Constant `value` from the end of the prefix onward.
    Constant { value: u64 },
    /// Values continue as the Froberg sequence of `spec`.
    Series { spec: FroebergSpec },
}

/// A nonnegative integer sequence `(h_0, h_1, ...)` with `h_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeq {
    prefix: Vec<u64>,
    tail: Tail,
}

/// Result of computing every `r_i` and the depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailAnalysis {
    /// `r_0, ..., r_{K-1}` for `K = max(1, h_1)`.
    pub r: Vec<FValue>,
    /// First level with a finite descent degree.
    pub depth: usize,
    /// Largest degree examined numerically.
    pub horizon: usize,
}

/// Verdict of the unimodal-at-each-tail check; the witness is the first
/// `(level, degree)` where a derived sequence rises again past its descent
/// point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnimodalReport {
    pub unimodal: bool,
    pub witness: Option<(usize, usize)>,
}

struct Analysis {
    r: Vec<FValue>,
    depth: usize,
    horizon: usize,
    witness: Option<(usize, usize)>,
}

fn first_descent(values: &[u64]) -> Option<usize> {
    (1..values.len()).find(|&d| values[d] <= values[d - 1])
}

fn first_rise_after(values: &[u64], r: usize) -> Option<usize> {
    (r + 1..values.len()).find(|&d| values[d] > values[d - 1])
}

fn derive_values(values: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(values.len());
    out.push(1);
    for d in 1..values.len() {
        out.push(values[d].saturating_sub(values[d - 1]));
    }
    out
}

fn canonicalize(mut prefix: Vec<u64>, tail: Tail) -> (Vec<u64>, Tail) {
    let tail = match tail {
        Tail::Constant { value: 0 } => Tail::Zero,
        other => other,
    };
    match &tail {
        Tail::Zero => {
            while prefix.len() > 1 && *prefix.last().unwrap() == 0 {
                prefix.pop();
            }
        }
        Tail::Constant { value } => {
            while prefix.len() > 1 && prefix.last() == Some(value) {
                prefix.pop();
            }
            if *value > *prefix.last().unwrap() {
                prefix.push(*value);
            }
        }
        Tail::Series { .. } => {
            prefix = vec![1];
        }
    }
    (prefix, tail)
}

impl HilbertSeq {
    /// Validates and canonicalizes. The prefix must be nonempty with
    /// `h_0 = 1`; an eventually-zero sequence cannot return after a zero; a
    /// constant tail cannot exceed the last prefix entry; a series-backed
    /// prefix must agree with the series values.
    pub fn new(prefix: Vec<u64>, tail: Tail) -> Result<Self> {
        if prefix.is_empty() {
            return Err(Error::InvalidSequence("prefix must be nonempty".into()));
        }
        if prefix[0] != 1 {
            return Err(Error::InvalidSequence("h_0 must be 1".into()));
        }
        match &tail {
            Tail::Zero => {
                if let Some(z) = prefix.iter().position(|&v| v == 0) {
                    if prefix[z..].iter().any(|&v| v > 0) {
                        return Err(Error::InvalidSequence(
                            "values cannot return after reaching zero".into(),
                        ));
                    }
                }
            }
            Tail::Constant { value } => {
                if *value > *prefix.last().unwrap() {
                    return Err(Error::InvalidSequence(
                        "constant tail exceeds the last prefix entry".into(),
                    ));
                }
            }
            Tail::Series { spec } => {
                let values = froberg_values(spec, prefix.len() - 1)?;
                if values != prefix {
                    return Err(Error::InvalidSequence(
                        "prefix disagrees with the series values".into(),
                    ));
                }
            }
        }
        Ok(Self::new_unchecked(prefix, tail))
    }

    /// Canonicalizes without structural validation; derived sequences of
    /// non-unimodal inputs may legitimately resurrect after a zero.
    pub(crate) fn new_unchecked(prefix: Vec<u64>, tail: Tail) -> Self {
        let (prefix, tail) = canonicalize(prefix, tail);
        Self { prefix, tail }
    }

    /// The sequence backed entirely by a Froberg series.
    pub fn series(spec: FroebergSpec) -> Self {
        Self {
            prefix: vec![1],
            tail: Tail::Series { spec },
        }
    }

    pub fn prefix(&self) -> &[u64] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    pub fn value_at(&self, d: usize) -> Result<u64> {
        match &self.tail {
            Tail::Zero => Ok(self.prefix.get(d).copied().unwrap_or(0)),
            Tail::Constant { value } => Ok(self.prefix.get(d).copied().unwrap_or(*value)),
            Tail::Series { spec } => Ok(froberg_values(spec, d)?[d]),
        }
    }

    /// Values `h_0, ..., h_{up_to}`.
    pub fn values(&self, up_to: usize) -> Result<Vec<u64>> {
        match &self.tail {
            Tail::Series { spec } => froberg_values(spec, up_to),
            _ => (0..=up_to).map(|d| self.value_at(d)).collect(),
        }
    }

    pub fn h1(&self) -> Result<u64> {
        self.value_at(1)
    }

    /// Degree from which the value is exactly constant (or zero), when the
    /// sequence stabilizes at all.
    pub fn stabilization_degree(&self) -> Result<Option<usize>> {
        match &self.tail {
            Tail::Zero | Tail::Constant { .. } => Ok(Some(self.prefix.len())),
            Tail::Series { spec } => Ok(classify_tail(spec)?.stabilization_degree()),
        }
    }

    /// First degree with value zero, if the sequence ever vanishes.
    pub(crate) fn first_zero(&self) -> Result<Option<usize>> {
        match &self.tail {
            Tail::Zero => Ok(Some(
                self.prefix
                    .iter()
                    .position(|&v| v == 0)
                    .unwrap_or(self.prefix.len()),
            )),
            Tail::Constant { .. } => Ok(self.prefix.iter().position(|&v| v == 0)),
            Tail::Series { spec } => Ok(match classify_tail(spec)? {
                crate::froberg::TailClass::EventuallyZero { zero_from } => Some(zero_from),
                _ => None,
            }),
        }
    }

    /// The derived sequence: pointwise `max(0, h_d - h_{d-1})` with position
    /// zero reset to 1. Constant tails become zero tails; a series tail
    /// drops one variable.
    pub fn derived(&self) -> Result<HilbertSeq> {
        match &self.tail {
            Tail::Series { spec } => {
                if spec.is_degenerate() {
                    // values are (1, 0, ...), a fixed point of derivation
                    Ok(Self::new_unchecked(vec![1], Tail::Zero))
                } else {
                    Ok(Self::series(spec.derived()?))
                }
            }
            _ => {
                let len = self.prefix.len();
                let values = self.values(len)?;
                Ok(Self::new_unchecked(derive_values(&values), Tail::Zero))
            }
        }
    }

    fn analyze(&self, horizon: usize) -> Result<Analysis> {
        let analysis = match &self.tail {
            Tail::Zero | Tail::Constant { .. } => self.analyze_window(horizon)?,
            Tail::Series { spec } => {
                let norm = spec.normalize();
                if norm.n() == 0 {
                    Self::new_unchecked(vec![1], Tail::Zero).analyze_window(horizon)?
                } else {
                    self.analyze_series(&norm, horizon)?
                }
            }
        };
        debug_assert!(
            analysis.depth as u64 <= self.h1()?,
            "the depth never exceeds h_1"
        );
        Ok(analysis)
    }

    fn analyze_window(&self, horizon: usize) -> Result<Analysis> {
        let len = self.prefix.len();
        let window = horizon.max(len + 1);
        let level_count = (self.h1()?.max(1)) as usize;
        let mut values = self.values(window)?;
        let mut r = Vec::with_capacity(level_count);
        let mut witness = None;
        for level in 0..level_count {
            // the tail forces a weak descent at the prefix boundary, and
            // every derived level vanishes just past it
            let r_level = first_descent(&values)
                .expect("a prefix-backed sequence descends within its window");
            r.push(FValue::Finite(r_level));
            if witness.is_none() {
                if let Some(d) = first_rise_after(&values, r_level) {
                    witness = Some((level, d));
                }
            }
            if level + 1 < level_count {
                values = derive_values(&values);
            }
        }
        Ok(Analysis {
            r,
            depth: 0,
            horizon: window,
            witness,
        })
    }

    fn analyze_series(&self, norm: &FroebergSpec, horizon: usize) -> Result<Analysis> {
        let n = norm.n();
        let level_count = n;
        let window = horizon.max(norm.degree_sum() + 2).max(2);
        let mut values = froberg_values(norm, window)?;
        let mut r = Vec::with_capacity(level_count);
        let mut depth = None;
        let mut witness = None;
        for level in 0..level_count {
            let level_spec = FroebergSpec::new(n - level, norm.degrees().to_vec())?;
            #[cfg(debug_assertions)]
            {
                // each numeric derivation must land on its own series
                let direct = froberg_values(&level_spec, window)?;
                debug_assert_eq!(values, direct, "derived values drift at level {level}");
            }
            match classify_tail(&level_spec)?.stabilization_degree() {
                None => {
                    debug_assert!(
                        first_descent(&values).is_none(),
                        "an unbounded level cannot descend"
                    );
                    r.push(FValue::Infinite);
                }
                Some(stabilization) => {
                    let r_level = first_descent(&values).expect("a stabilizing level descends");
                    debug_assert!(r_level <= stabilization + 1);
                    r.push(FValue::Finite(r_level));
                    if depth.is_none() {
                        depth = Some(level);
                    }
                    if witness.is_none() {
                        if let Some(d) = first_rise_after(&values, r_level) {
                            witness = Some((level, d));
                        }
                    }
                }
            }
            if level + 1 < level_count {
                values = derive_values(&values);
            }
        }
        let depth = depth.expect("the last level is eventually constant");
        Ok(Analysis {
            r,
            depth,
            horizon: window,
            witness,
        })
    }

    /// Computes `r_0, ..., r_{K-1}` and the depth, exactly.
    pub fn tail_analysis(&self, horizon: usize) -> Result<TailAnalysis> {
        let analysis = self.analyze(horizon)?;
        Ok(TailAnalysis {
            r: analysis.r,
            depth: analysis.depth,
            horizon: analysis.horizon,
        })
    }

    /// True iff every derived sequence from the depth onward is
    /// non-increasing past its first weak descent.
    pub fn is_unimodal_at_each_tail(&self, horizon: usize) -> Result<UnimodalReport> {
        let analysis = self.analyze(horizon)?;
        Ok(UnimodalReport {
            unimodal: analysis.witness.is_none(),
            witness: analysis.witness,
        })
    }
}

impl<'de> Deserialize<'de> for HilbertSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            prefix: Vec<u64>,
            tail: Tail,
        }
        let repr = Repr::deserialize(deserializer)?;
        HilbertSeq::new(repr.prefix, repr.tail).map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(prefix: &[u64], tail: Tail) -> HilbertSeq {
        HilbertSeq::new(prefix.to_vec(), tail).unwrap()
    }

    fn constant(value: u64) -> Tail {
        Tail::Constant { value }
    }

    #[test]
    fn value_at_examples() {
        let plateau = seq(&[1, 3, 6, 8, 9, 9, 6, 5], constant(5));
        assert_eq!(plateau.value_at(20).unwrap(), 5);
        assert_eq!(plateau.value_at(4).unwrap(), 9);

        let vanishing = seq(&[1, 2, 3, 2, 1, 0], Tail::Zero);
        assert_eq!(vanishing.value_at(9).unwrap(), 0);
        assert_eq!(vanishing.value_at(0).unwrap(), 1);
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            HilbertSeq::new(vec![], Tail::Zero),
            Err(Error::InvalidSequence(_))
        ));
        assert!(matches!(
            HilbertSeq::new(vec![2, 1], Tail::Zero),
            Err(Error::InvalidSequence(_))
        ));
        // resurrection after zero
        assert!(matches!(
            HilbertSeq::new(vec![1, 0, 2], Tail::Zero),
            Err(Error::InvalidSequence(_))
        ));
        // constant above the last entry
        assert!(matches!(
            HilbertSeq::new(vec![1, 3], constant(5)),
            Err(Error::InvalidSequence(_))
        ));
        // series prefix mismatch
        let spec = FroebergSpec::new(3, vec![3, 3, 5]).unwrap();
        assert!(matches!(
            HilbertSeq::new(vec![1, 4], Tail::Series { spec }),
            Err(Error::InvalidSequence(_))
        ));
    }

    #[test]
    fn canonical_forms() {
        let padded = seq(&[1, 2, 0, 0, 0], Tail::Zero);
        assert_eq!(padded.prefix(), &[1, 2]);

        let repeated = seq(&[1, 3, 5, 5, 5], constant(5));
        assert_eq!(repeated.prefix(), &[1, 3, 5]);

        let const_zero = seq(&[1, 1, 0], constant(0));
        assert_eq!(const_zero.tail(), &Tail::Zero);
        assert_eq!(const_zero.prefix(), &[1, 1]);
    }

    #[test]
    fn derived_examples() {
        let h = seq(&[1, 3, 6, 8, 9, 9, 6, 5], constant(5));
        let d1 = h.derived().unwrap();
        assert_eq!(d1.values(8).unwrap(), vec![1, 2, 3, 2, 1, 0, 0, 0, 0]);
        let d2 = d1.derived().unwrap();
        assert_eq!(d2.values(5).unwrap(), vec![1, 1, 1, 0, 0, 0]);

        let ones = seq(&[1], constant(1));
        assert_eq!(
            ones.derived().unwrap().values(4).unwrap(),
            vec![1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn derived_fixes_the_point_mass() {
        let point = seq(&[1], Tail::Zero);
        assert_eq!(point.derived().unwrap(), point);
    }

    #[test]
    fn derived_of_series_drops_one_variable() {
        let spec = FroebergSpec::new(3, vec![3, 3, 5]).unwrap();
        let h = HilbertSeq::series(spec);
        let d1 = h.derived().unwrap();
        assert_eq!(d1.values(7).unwrap(), vec![1, 2, 3, 2, 1, 0, 0, 0]);

        let one_var = HilbertSeq::series(FroebergSpec::new(1, vec![4]).unwrap());
        let d = one_var.derived().unwrap();
        assert_eq!(d.values(3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn tail_analysis_examples() {
        let vanishing = seq(&[1, 2, 3, 2, 1, 0], Tail::Zero);
        let analysis = vanishing.tail_analysis(16).unwrap();
        assert_eq!(analysis.r[0], FValue::Finite(3));
        assert_eq!(analysis.depth, 0);

        let plateau = seq(&[1, 3, 6, 8, 9, 9, 6, 5], constant(5));
        let analysis = plateau.tail_analysis(16).unwrap();
        assert_eq!(analysis.r[0], FValue::Finite(5));
        assert_eq!(analysis.depth, 0);

        let ones = seq(&[1], constant(1));
        let analysis = ones.tail_analysis(16).unwrap();
        assert_eq!(analysis.r, vec![FValue::Finite(1)]);
        assert_eq!(analysis.depth, 0);
    }

    #[test]
    fn tail_analysis_of_unbounded_series() {
        let h = HilbertSeq::series(FroebergSpec::new(3, vec![]).unwrap());
        let analysis = h.tail_analysis(16).unwrap();
        assert_eq!(
            analysis.r,
            vec![FValue::Infinite, FValue::Infinite, FValue::Finite(1)]
        );
        assert_eq!(analysis.depth, 2);
        assert!(h.is_unimodal_at_each_tail(16).unwrap().unimodal);
    }

    #[test]
    fn unimodal_examples() {
        let plateau = seq(&[1, 3, 6, 8, 9, 9, 6, 5], constant(5));
        assert!(plateau.is_unimodal_at_each_tail(16).unwrap().unimodal);

        let vanishing = seq(&[1, 2, 3, 2, 1, 0], Tail::Zero);
        assert!(vanishing.is_unimodal_at_each_tail(16).unwrap().unimodal);

        let bumpy = seq(&[1, 2, 1, 2], constant(2));
        let report = bumpy.is_unimodal_at_each_tail(16).unwrap();
        assert!(!report.unimodal);
        assert_eq!(report.witness, Some((0, 3)));
    }

    #[test]
    fn unimodal_on_the_series_grid_sample() {
        let spec = FroebergSpec::new(3, vec![3, 3, 5]).unwrap();
        let h = HilbertSeq::series(spec);
        let analysis = h.tail_analysis(12).unwrap();
        assert_eq!(analysis.r[0], FValue::Finite(5));
        assert_eq!(analysis.depth, 0);
        assert!(h.is_unimodal_at_each_tail(12).unwrap().unimodal);
    }

    #[test]
    fn constant_tail_descends_by_the_prefix_boundary() {
        for prefix in [vec![1, 4, 6], vec![1, 2, 2], vec![1, 9, 9, 9]] {
            let value = *prefix.last().unwrap();
            let h = seq(&prefix, constant(value));
            let analysis = h.tail_analysis(8).unwrap();
            match analysis.r[0] {
                FValue::Finite(r0) => assert!(r0 <= h.prefix().len()),
                FValue::Infinite => panic!("constant tails always descend"),
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let h = seq(&[1, 3, 6, 8, 9, 9, 6, 5], constant(5));
        let text = serde_json::to_string(&h).unwrap();
        let back: HilbertSeq = serde_json::from_str(&text).unwrap();
        assert_eq!(back, h);

        let parsed: HilbertSeq =
            serde_json::from_str(r#"{"prefix":[1,2,3,2,1,0],"tail":{"kind":"zero"}}"#).unwrap();
        assert_eq!(parsed, seq(&[1, 2, 3, 2, 1, 0], Tail::Zero));
        assert!(serde_json::from_str::<HilbertSeq>(
            r#"{"prefix":[1,2,1,5],"tail":{"kind":"zero"}}"#
        )
        .is_ok());
    }
}
