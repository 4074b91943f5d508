//! Exponent-vector monomials and the degree reverse lexicographic order.
//!
//! A monomial in `k[x_1, ..., x_n]` is a fixed-length vector of nonnegative
//! exponents; position `j` (0-based) holds the exponent of `x_{j+1}`. The
//! same comparison extends to plain integer tuples of any fixed length, which
//! is how index-set elements are ordered.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Compare two equal-length exponent tuples in degree reverse lexicographic
/// order.
///
/// Higher total degree wins. At equal degree the tuples are scanned from the
/// last coordinate down; at the largest index where they differ, the tuple
/// with the *smaller* exponent is the greater one.
pub fn degrevlex(a: &[usize], b: &[usize]) -> Ordering {
    debug_assert_eq!(a.len(), b.len(), "degrevlex on tuples of unequal length");
    let da: usize = a.iter().sum();
    let db: usize = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b.iter()).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

/// Ordering used for canonical generator lists: ascending total degree,
/// and descending degrevlex among monomials of equal degree.
///
/// Under this order the final block of a generator list is the block of
/// maximal degree and its last element is the degrevlex-minimal generator
/// of that degree, i.e. the last generator of the ideal.
pub(crate) fn canonical_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let da: usize = a.iter().sum();
    let db: usize = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => degrevlex(b, a),
        other => other,
    }
}

/// A monomial as a vector of nonnegative exponents of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<usize>,
}

impl Monomial {
    /// Wraps an exponent vector. The vector length fixes the ambient
    /// variable count.
    pub fn new(exponents: Vec<usize>) -> Self {
        assert!(
            !exponents.is_empty(),
            "a monomial needs at least one variable"
        );
        Self { exponents }
    }

    /// The unit monomial 1 in `n` variables.
    pub fn unit(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn variable(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index out of range");
        let mut exponents = vec![0; n];
        exponents[i - 1] = 1;
        Self::new(exponents)
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> usize {
        self.exponents[i - 1]
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> usize {
        self.exponents.iter().sum()
    }

    /// 1-based largest index with positive exponent; `None` for the unit
    /// monomial.
    pub fn max_index(&self) -> Option<usize> {
        self.exponents
            .iter()
            .rposition(|&e| e > 0)
            .map(|pos| pos + 1)
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::AmbientMismatch {
                expected: self.num_vars(),
                actual: other.num_vars(),
            });
        }
        Ok(())
    }

    /// True iff `self` divides `other` entrywise.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self
            .exponents
            .iter()
            .zip(other.exponents.iter())
            .all(|(a, b)| a <= b))
    }

    /// Entrywise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::new(
            self.exponents
                .iter()
                .zip(other.exponents.iter())
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Degree reverse lexicographic comparison.
    pub fn degrevlex_cmp(&self, other: &Self) -> Result<Ordering> {
        self.check_ambient(other)?;
        Ok(degrevlex(&self.exponents, &other.exponents))
    }

    /// Embeds into a ring with `n` variables by appending trailing zero
    /// exponents. `n` must be at least the current variable count.
    pub fn lift(&self, n: usize) -> Self {
        assert!(n >= self.num_vars(), "cannot lift into a smaller ring");
        let mut exponents = self.exponents.clone();
        exponents.resize(n, 0);
        Self::new(exponents)
    }

    /// Re-indexes into a ring with `n` variables by prepending `n - k` zero
    /// exponents, so variable `x_j` becomes `x_{j + n - k}`.
    pub fn shift_right(&self, n: usize) -> Self {
        let k = self.num_vars();
        assert!(n >= k, "cannot shift into a smaller ring");
        let mut exponents = vec![0; n - k];
        exponents.extend_from_slice(&self.exponents);
        Self::new(exponents)
    }

    /// Parses either a compact exponent list `[2,0,5]` or symbolic syntax
    /// `x1^2*x3^5` (`^1` optional, unit monomial `1`), in `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if text.starts_with('[') {
            if !text.ends_with(']') {
                return Err(Error::Parse(format!("unterminated exponent list: {text}")));
            }
            let inner = &text[1..text.len() - 1];
            let mut exponents = Vec::new();
            if !inner.trim().is_empty() {
                for item in inner.split(',') {
                    let e: usize = item
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent: {item}")))?;
                    exponents.push(e);
                }
            }
            if exponents.len() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    actual: exponents.len(),
                });
            }
            return Ok(Self::new(exponents));
        }
        if text == "1" {
            return Ok(Self::unit(n));
        }
        let mut exponents = vec![0usize; n];
        for factor in text.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad factor: {factor}")))?;
            let (index_part, exp_part) = match rest.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (rest, None),
            };
            let index: usize = index_part
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in: {factor}")))?;
            if index < 1 || index > n {
                return Err(Error::IndexOutOfRange { index, num_vars: n });
            }
            let exp: usize = match exp_part {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in: {factor}")))?,
                None => 1,
            };
            exponents[index - 1] += exp;
        }
        Ok(Self::new(exponents))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.exponents.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let exponents = Vec::<usize>::deserialize(deserializer)?;
        if exponents.is_empty() {
            return Err(serde::de::Error::custom(
                "a monomial needs at least one variable",
            ));
        }
        Ok(Self::new(exponents))
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in no
/// particular order.
pub fn compositions(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; n];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, var: usize, remaining: usize) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(current.clone());
        current[var] = 0;
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

/// All monomials of total degree `d` in `n` variables, sorted in descending
/// degrevlex order.
pub fn monomials_of_degree_desc(n: usize, d: usize) -> Vec<Monomial> {
    let mut all = compositions(n, d);
    all.sort_by(|a, b| degrevlex(b, a));
    all.into_iter().map(Monomial::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[usize]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn total_degree_examples() {
        assert_eq!(m(&[2, 0, 5]).total_degree(), 7);
        assert_eq!(m(&[0, 0, 0]).total_degree(), 0);
        assert_eq!(m(&[0, 4]).total_degree(), 4);
    }

    #[test]
    fn max_index_examples() {
        assert_eq!(m(&[2, 0, 5]).max_index(), Some(3));
        assert_eq!(m(&[0, 0, 0]).max_index(), None);
        assert_eq!(m(&[3, 0, 0]).max_index(), Some(1));
    }

    #[test]
    fn divides_examples() {
        assert!(m(&[2, 1, 0]).divides(&m(&[2, 1, 3])).unwrap());
        assert!(!m(&[2, 1, 0]).divides(&m(&[1, 5, 5])).unwrap());
        assert!(m(&[0, 0, 0]).divides(&m(&[9, 9, 9])).unwrap());
        assert!(matches!(
            m(&[1, 0]).divides(&m(&[1, 0, 0])),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn degrevlex_chain_in_two_variables() {
        // (0,4) > (1,2) > (0,3) > (2,0) > (1,1) > (0,2) > (1,0) > (0,1) > (0,0)
        let chain = [
            [0, 4],
            [1, 2],
            [0, 3],
            [2, 0],
            [1, 1],
            [0, 2],
            [1, 0],
            [0, 1],
            [0, 0],
        ];
        for pair in chain.windows(2) {
            assert_eq!(
                degrevlex(&pair[0], &pair[1]),
                Ordering::Greater,
                "{:?} should be greater than {:?}",
                pair[0],
                pair[1]
            );
        }
    }

    #[test]
    fn degrevlex_examples() {
        assert_eq!(
            m(&[1, 1]).degrevlex_cmp(&m(&[1, 1])).unwrap(),
            Ordering::Equal
        );
        // x^2*y vs x*y^2: at the largest differing index, 1 < 2
        assert_eq!(
            m(&[2, 1, 0]).degrevlex_cmp(&m(&[1, 2, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn canonical_order_sorts_by_degree_then_degrevlex_desc() {
        let mut gens = vec![vec![0, 5], vec![1, 3], vec![3, 0], vec![2, 1]];
        gens.sort_by(|a, b| canonical_cmp(a, b));
        assert_eq!(gens, vec![vec![3, 0], vec![2, 1], vec![1, 3], vec![0, 5]]);
    }

    #[test]
    fn parse_and_print_round_trip() {
        let cases = ["1", "x1^2*x3^5", "x2", "x1*x2^3"];
        for text in cases {
            let mono = Monomial::parse(text, 3).unwrap();
            assert_eq!(mono.to_string(), *text);
            assert_eq!(Monomial::parse(&mono.to_string(), 3).unwrap(), mono);
        }
        assert_eq!(Monomial::parse("[2,0,5]", 3).unwrap(), m(&[2, 0, 5]));
        assert_eq!(Monomial::parse(" x1^1 ", 3).unwrap(), m(&[1, 0, 0]));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("[1,2]", 3).is_err());
        assert!(Monomial::parse("y2", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
    }

    #[test]
    fn compositions_count_matches_binomial() {
        // C(n-1+d, d) monomials of degree d in n variables
        assert_eq!(compositions(3, 4).len(), 15);
        assert_eq!(compositions(1, 7).len(), 1);
        assert_eq!(compositions(4, 0).len(), 1);
    }

    #[test]
    fn monomials_sorted_desc_starts_at_first_variable_power() {
        let sorted = monomials_of_degree_desc(3, 3);
        assert_eq!(sorted[0], m(&[3, 0, 0]));
        assert_eq!(sorted.last().unwrap(), &m(&[0, 0, 3]));
        assert_eq!(sorted.len(), 10);
    }
}
