//! Membership pairs and discrete pseudo fuzzy sets.
//!
//! A pseudo fuzzy element carries two grades: a positive membership `mu` in
//! `[0, 1]` and a negative membership `lambda` in `[-1, 0]`. The magnitude sum
//! `|mu| + |lambda|` lies in `[0, 2]` and sorts every pair into one of three
//! cases (see [`CaseLabel`]).

use std::fmt;

use crate::error::{finite, Error, Result};

/// Default absolute comparison tolerance.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Absolute tolerance used by every approximate comparison in the crate.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    #[inline]
    pub fn eps(self) -> f64 {
        self.0
    }

    /// `|a - b| <= eps`
    #[inline]
    pub fn approx_eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_EPS)
    }
}

/// A validated `(mu, lambda)` pair.
///
/// The fields are private so that a `MembershipPair` in hand always satisfies
/// `0 <= mu <= 1` and `-1 <= lambda <= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipPair {
    mu: f64,
    lambda: f64,
}

impl MembershipPair {
    /// Validates a raw pair. Non-finite input is rejected before any range
    /// check so NaN never reaches a comparison.
    pub fn new(mu: f64, lambda: f64) -> Result<Self> {
        finite("mu", mu)?;
        finite("lambda", lambda)?;
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::MuOutOfRange(mu));
        }
        if !(-1.0..=0.0).contains(&lambda) {
            return Err(Error::LambdaOutOfRange(lambda));
        }
        Ok(MembershipPair { mu, lambda })
    }

    /// Builds a pair from values that are in range by construction.
    pub(crate) fn from_parts_unchecked(mu: f64, lambda: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&mu), "mu = {mu}");
        debug_assert!((-1.0..=0.0).contains(&lambda), "lambda = {lambda}");
        MembershipPair { mu, lambda }
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `|mu| + |lambda|`, always in `[0, 2]`.
    #[inline]
    pub fn magnitude_sum(&self) -> f64 {
        self.mu.abs() + self.lambda.abs()
    }

    pub fn classify(&self, tol: Tolerance) -> CaseLabel {
        let s = self.magnitude_sum();
        if tol.approx_eq(s, 1.0) {
            CaseLabel::CaseB
        } else if s < 1.0 {
            CaseLabel::CaseA
        } else {
            CaseLabel::CaseC
        }
    }

    /// True when the two grades are complementary, `|mu| + |lambda| = 1`.
    pub fn is_dependent(&self, tol: Tolerance) -> bool {
        tol.approx_eq(self.magnitude_sum(), 1.0)
    }
}

/// Free-function form of [`MembershipPair::new`].
pub fn validate_pair(mu: f64, lambda: f64) -> Result<MembershipPair> {
    MembershipPair::new(mu, lambda)
}

pub fn magnitude_sum(pair: &MembershipPair) -> f64 {
    pair.magnitude_sum()
}

pub fn classify_case(pair: &MembershipPair, tol: Tolerance) -> CaseLabel {
    pair.classify(tol)
}

pub fn is_dependent_pair(pair: &MembershipPair, tol: Tolerance) -> bool {
    pair.is_dependent(tol)
}

/// The three magnitude cases, ordered by the size of `|mu| + |lambda|`.
///
/// The sum `1` itself belongs to [`CaseLabel::CaseB`], as does everything
/// within the tolerance band around it; this keeps the cases a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// `|mu| + |lambda| < 1`
    CaseA,
    /// `|mu| + |lambda| = 1`
    CaseB,
    /// `|mu| + |lambda| > 1`
    CaseC,
}

impl CaseLabel {
    pub fn letter(self) -> char {
        match self {
            CaseLabel::CaseA => 'A',
            CaseLabel::CaseB => 'B',
            CaseLabel::CaseC => 'C',
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The triplet `(x, mu, lambda)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoFuzzyElement {
    pub x: f64,
    pub pair: MembershipPair,
}

impl PseudoFuzzyElement {
    pub fn new(x: f64, pair: MembershipPair) -> Result<Self> {
        finite("x", x)?;
        Ok(PseudoFuzzyElement { x, pair })
    }

    pub fn from_triplet(x: f64, mu: f64, lambda: f64) -> Result<Self> {
        Self::new(x, MembershipPair::new(mu, lambda)?)
    }
}

/// A pseudo fuzzy set sampled at finitely many support points, kept in
/// strictly increasing `x` order.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePseudoFuzzySet {
    elements: Vec<PseudoFuzzyElement>,
}

impl DiscretePseudoFuzzySet {
    pub fn new(elements: Vec<PseudoFuzzyElement>) -> Result<Self> {
        check_order(elements.iter().map(|e| e.x))?;
        Ok(DiscretePseudoFuzzySet { elements })
    }

    /// Validates raw `(x, mu, lambda)` triplets. Pair and finiteness errors
    /// are reported with the index of the offending triplet.
    pub fn from_triplets<I>(triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64, f64)>,
    {
        let elements = triplets
            .into_iter()
            .enumerate()
            .map(|(index, (x, mu, lambda))| {
                PseudoFuzzyElement::from_triplet(x, mu, lambda).map_err(|e| Error::InvalidElement {
                    index,
                    source: Box::new(e),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }

    pub fn elements(&self) -> &[PseudoFuzzyElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PseudoFuzzyElement> {
        self.elements.iter()
    }

    /// Looks up the pair stored at exactly `x`.
    pub fn get(&self, x: f64) -> Option<&MembershipPair> {
        self.elements
            .binary_search_by(|e| e.x.total_cmp(&x))
            .ok()
            .map(|i| &self.elements[i].pair)
    }

    pub fn into_elements(self) -> Vec<PseudoFuzzyElement> {
        self.elements
    }
}

impl<'a> IntoIterator for &'a DiscretePseudoFuzzySet {
    type Item = &'a PseudoFuzzyElement;
    type IntoIter = std::slice::Iter<'a, PseudoFuzzyElement>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Free-function form of [`DiscretePseudoFuzzySet::from_triplets`].
pub fn validate_set<I>(triplets: I) -> Result<DiscretePseudoFuzzySet>
where
    I: IntoIterator<Item = (f64, f64, f64)>,
{
    DiscretePseudoFuzzySet::from_triplets(triplets)
}

fn check_order(xs: impl Iterator<Item = f64>) -> Result<()> {
    let mut prev: Option<f64> = None;
    for (index, x) in xs.enumerate() {
        if let Some(p) = prev {
            if x == p {
                return Err(Error::DuplicateSupportPoint { index });
            }
            if x < p {
                return Err(Error::UnsortedSupport { index });
            }
        }
        prev = Some(x);
    }
    Ok(())
}
