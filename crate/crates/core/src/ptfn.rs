//! Pseudo triangular fuzzy numbers.
//!
//! A [`PseudoTfn`] pairs a triangular positive membership on `(a, b, c)` with
//! a negative membership whose profile depends on the [`Kind`]:
//!
//! | kind        | outside `[a, c]` | rising side       | falling side      | peak |
//! |-------------|------------------|-------------------|-------------------|------|
//! | dependent   | `-1`             | `(x - b)/(b - a)` | `(b - x)/(c - b)` | `0`  |
//! | independent | `0`              | `(a - x)/(b - a)` | `(x - c)/(c - b)` | `-1` |
//!
//! Branch by branch these reduce to `lambda = mu - 1` (dependent) and
//! `lambda = -mu` (independent), which is how they are evaluated here: each
//! branch computes its normalized coordinate once and derives both grades
//! from it.

use std::fmt;
use std::str::FromStr;

use crate::error::{finite, Error, Result};
use crate::interval::Interval;
use crate::membership::{DiscretePseudoFuzzySet, MembershipPair, PseudoFuzzyElement, Tolerance};

/// Vertices `a <= b <= c` of a triangle with `a < c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleShape {
    a: f64,
    b: f64,
    c: f64,
}

impl TriangleShape {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        finite("a", a)?;
        finite("b", b)?;
        finite("c", c)?;
        if !(a <= b && b <= c) {
            return Err(Error::UnorderedShape { a, b, c });
        }
        if a == c {
            return Err(Error::ZeroWidth(a));
        }
        if !(c - a).is_finite() {
            return Err(Error::NonFinite {
                what: "support width",
                value: c - a,
            });
        }
        Ok(TriangleShape { a, b, c })
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn c(&self) -> f64 {
        self.c
    }

    /// `[a, c]`
    pub fn support(&self) -> Interval {
        Interval::from_bounds_unchecked(self.a, self.c)
    }

    pub fn width(&self) -> f64 {
        self.c - self.a
    }

    pub fn vertices(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    fn locate(&self, x: f64) -> Branch {
        let TriangleShape { a, b, c } = *self;
        if x < a || x > c {
            Branch::Outside
        } else if x < b {
            // a <= x < b, so b - a > 0 and x - a <= b - a
            Branch::Side((x - a) / (b - a))
        } else if x == b {
            Branch::Peak
        } else {
            Branch::Side((c - x) / (c - b))
        }
    }
}

/// Where `x` falls relative to the triangle; `Side` carries the value of `mu`.
enum Branch {
    Outside,
    Side(f64),
    Peak,
}

/// How the negative membership is tied to the positive one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Complementary grades: `|mu| + |lambda| = 1` everywhere.
    Dependent,
    /// Mirrored grades: `lambda = -mu` everywhere.
    Independent,
}

impl Kind {
    /// The negative membership this kind attaches to a given `mu`.
    #[inline]
    pub fn lambda_from_mu(self, mu: f64) -> f64 {
        match self {
            Kind::Dependent => mu - 1.0,
            // + 0.0 turns -0.0 into 0.0
            Kind::Independent => -mu + 0.0,
        }
    }

    pub fn pair_from_mu(self, mu: f64) -> MembershipPair {
        MembershipPair::from_parts_unchecked(mu, self.lambda_from_mu(mu))
    }

    /// Whether `pair` obeys this kind's identity within `tol`.
    pub fn admits(self, pair: &MembershipPair, tol: Tolerance) -> bool {
        match self {
            Kind::Dependent => tol.approx_eq(pair.magnitude_sum(), 1.0),
            Kind::Independent => (pair.lambda() + pair.mu()).abs() <= tol.eps(),
        }
    }

    /// First support point of `set` that breaks this kind's identity.
    pub fn first_violation(self, set: &DiscretePseudoFuzzySet, tol: Tolerance) -> Option<f64> {
        set.iter().find(|e| !self.admits(&e.pair, tol)).map(|e| e.x)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Dependent => "dependent",
            Kind::Independent => "independent",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownKind(pub String);

impl fmt::Display for UnknownKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown kind {:?}, expected \"dependent\" or \"independent\"",
            self.0
        )
    }
}

impl std::error::Error for UnknownKind {}

impl FromStr for Kind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dependent" => Ok(Kind::Dependent),
            "independent" => Ok(Kind::Independent),
            other => Err(UnknownKind(other.to_owned())),
        }
    }
}

/// A pseudo triangular fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoTfn {
    shape: TriangleShape,
    kind: Kind,
}

impl PseudoTfn {
    pub fn new(shape: TriangleShape, kind: Kind) -> Self {
        PseudoTfn { shape, kind }
    }

    pub fn from_vertices(a: f64, b: f64, c: f64, kind: Kind) -> Result<Self> {
        Ok(Self::new(TriangleShape::new(a, b, c)?, kind))
    }

    pub fn dependent(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_vertices(a, b, c, Kind::Dependent)
    }

    pub fn independent(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_vertices(a, b, c, Kind::Independent)
    }

    #[inline]
    pub fn shape(&self) -> &TriangleShape {
        &self.shape
    }

    #[inline]
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn with_kind(&self, kind: Kind) -> Self {
        PseudoTfn { kind, ..*self }
    }

    /// Positive membership. Degenerate sides are steps: with `a == b`,
    /// `mu(a) = 1` and `mu(x) = 0` for `x < a`.
    pub fn mu_at(&self, x: f64) -> Result<f64> {
        finite("x", x)?;
        Ok(self.mu_unchecked(x))
    }

    pub fn lambda_at(&self, x: f64) -> Result<f64> {
        Ok(self.pair_at(x)?.lambda())
    }

    pub fn pair_at(&self, x: f64) -> Result<MembershipPair> {
        finite("x", x)?;
        Ok(self.kind.pair_from_mu(self.mu_unchecked(x)))
    }

    pub(crate) fn mu_unchecked(&self, x: f64) -> f64 {
        match self.shape.locate(x) {
            Branch::Outside => 0.0,
            Branch::Side(t) => t,
            Branch::Peak => 1.0,
        }
    }

    /// `{x : mu(x) >= alpha}`, i.e. `[a + alpha (b - a), c - alpha (c - b)]`.
    ///
    /// Endpoints are monotone in `alpha` under rounding and the level-1 cut
    /// is exactly `[b, b]`, so cuts of increasing level nest exactly.
    pub fn alpha_cut(&self, alpha: f64) -> Result<Interval> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let TriangleShape { a, b, c } = self.shape;
        if alpha == 1.0 {
            return Ok(Interval::from_bounds_unchecked(b, b));
        }
        let lo = (a + alpha * (b - a)).min(b);
        let hi = (c - alpha * (c - b)).max(b);
        Ok(Interval::from_bounds_unchecked(lo, hi))
    }

    /// Level set of the negative membership, oriented by kind.
    ///
    /// Dependent numbers return `{x : lambda(x) >= beta}`, the region where
    /// the negative grade is weakest; this is the alpha-cut at `beta + 1`.
    /// Independent numbers return `{x : lambda(x) <= beta}`, where the
    /// negative grade is strongest; this is the alpha-cut at `-beta`.
    pub fn beta_cut(&self, beta: f64) -> Result<Interval> {
        if !(-1.0..=0.0).contains(&beta) {
            return Err(Error::BetaOutOfRange(beta));
        }
        match self.kind {
            Kind::Dependent => {
                let TriangleShape { a, b, c } = self.shape;
                let lo = (b + beta * (b - a)).max(a);
                let hi = (b - beta * (c - b)).min(c);
                Ok(Interval::from_bounds_unchecked(lo, hi))
            }
            Kind::Independent => self.alpha_cut(-beta + 0.0),
        }
    }

    /// Crisp point `lo + s (hi - lo)` inside the alpha-cut at level `r`.
    ///
    /// `r` picks the level and `s` sweeps the cut from its lower to its upper
    /// end, so the whole number is covered by `(r, s)` in the unit square.
    pub fn parametric_point(&self, r: f64, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::ParamOutOfRange(r));
        }
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::ParamOutOfRange(s));
        }
        let cut = self.alpha_cut(r)?;
        if s == 1.0 {
            return Ok(cut.hi());
        }
        Ok((cut.lo() + s * cut.width()).min(cut.hi()))
    }

    /// Samples `n` evenly spaced points of `[xmin, xmax]`, both ends included.
    pub fn discretize(&self, n: usize, xmin: f64, xmax: f64) -> Result<DiscretePseudoFuzzySet> {
        if n < 2 {
            return Err(Error::BadCount {
                what: "point count",
                min: 2,
                got: n,
            });
        }
        let span = xmax - xmin;
        if !span.is_finite() || span <= 0.0 {
            return Err(Error::BadRange {
                min: xmin,
                max: xmax,
            });
        }
        let last = (n - 1) as f64;
        let elements = (0..n)
            .map(|i| {
                let x = if i == n - 1 {
                    xmax
                } else {
                    xmin + span * i as f64 / last
                };
                PseudoFuzzyElement {
                    x,
                    pair: self.kind.pair_from_mu(self.mu_unchecked(x)),
                }
            })
            .collect();
        DiscretePseudoFuzzySet::new(elements)
    }

    /// `[a - w, c + w]` with `w = c - a`: the support plus one width on each
    /// side, so the constant outer branches get sampled too.
    pub fn verification_window(&self) -> (f64, f64) {
        let w = self.shape.width();
        (self.shape.a - w, self.shape.c + w)
    }

    /// First sample in the verification window where this number breaks its
    /// own kind identity.
    pub fn first_kind_violation(&self, grid: usize, tol: Tolerance) -> Result<Option<f64>> {
        let (lo, hi) = self.verification_window();
        let set = self.discretize(grid, lo, hi)?;
        Ok(self.kind.first_violation(&set, tol))
    }

    pub fn verify_kind(&self, grid: usize, tol: Tolerance) -> Result<bool> {
        Ok(self.first_kind_violation(grid, tol)?.is_none())
    }
}

impl fmt::Display for PseudoTfn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.shape.vertices();
        write!(f, "{} ({a}, {b}, {c})", self.kind)
    }
}

pub fn mu_at(p: &PseudoTfn, x: f64) -> Result<f64> {
    p.mu_at(x)
}

pub fn lambda_at(p: &PseudoTfn, x: f64) -> Result<f64> {
    p.lambda_at(x)
}

pub fn pair_at(p: &PseudoTfn, x: f64) -> Result<MembershipPair> {
    p.pair_at(x)
}

pub fn alpha_cut_mu(p: &PseudoTfn, alpha: f64) -> Result<Interval> {
    p.alpha_cut(alpha)
}

pub fn beta_cut_lambda(p: &PseudoTfn, beta: f64) -> Result<Interval> {
    p.beta_cut(beta)
}

pub fn parametric_point(p: &PseudoTfn, r: f64, s: f64) -> Result<f64> {
    p.parametric_point(r, s)
}

pub fn discretize(p: &PseudoTfn, n: usize, xmin: f64, xmax: f64) -> Result<DiscretePseudoFuzzySet> {
    p.discretize(n, xmin, xmax)
}

pub fn verify_kind(p: &PseudoTfn, grid: usize, tol: Tolerance) -> Result<bool> {
    p.verify_kind(grid, tol)
}
