//! Level-cut arithmetic on pseudo triangular fuzzy numbers.
//!
//! Addition, subtraction and scaling of triangular numbers are triangular
//! again and have closed forms on the vertices. Products and quotients are
//! not triangular, so [`mul`] and [`div`] return a [`CutTable`]: the interval
//! result at a ladder of alpha levels.
//!
//! The negative membership never needs its own arithmetic. Both operands
//! share a kind, the kind fixes `lambda` as a function of `mu`, and the
//! result inherits the kind (see [`lambda_of_result`]).
//!
//! [`extension_oracle`] recomputes any of these results by brute force from
//! the membership functions alone and serves as the reference in tests.

use std::fmt;
use std::str::FromStr;

use crate::error::{finite, Error, Result};
use crate::interval::Interval;
use crate::membership::MembershipPair;
use crate::ptfn::{Kind, PseudoTfn, TriangleShape};

pub const DEFAULT_LEVELS: usize = 11;
pub const DEFAULT_ORACLE_GRID: usize = 256;
pub const MIN_ORACLE_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOpCode {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinaryOpCode {
    #[inline]
    pub fn apply(self, x: f64, y: f64) -> f64 {
        match self {
            BinaryOpCode::Add => x + y,
            BinaryOpCode::Sub => x - y,
            BinaryOpCode::Mul => x * y,
            BinaryOpCode::Div => x / y,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BinaryOpCode::Add => "add",
            BinaryOpCode::Sub => "sub",
            BinaryOpCode::Mul => "mul",
            BinaryOpCode::Div => "div",
        }
    }
}

impl fmt::Display for BinaryOpCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BinaryOpCode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "add" => Ok(BinaryOpCode::Add),
            "sub" => Ok(BinaryOpCode::Sub),
            "mul" => Ok(BinaryOpCode::Mul),
            "div" => Ok(BinaryOpCode::Div),
            other => Err(format!("unknown operation {other:?}")),
        }
    }
}

/// Alpha-cuts of a fuzzy result at increasing levels, from 0 to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CutTable {
    rows: Vec<(f64, Interval)>,
    kind: Kind,
}

impl CutTable {
    /// Checks that levels run strictly upward from exactly 0 to exactly 1 and
    /// that every row is contained in the one before it.
    pub fn new(rows: Vec<(f64, Interval)>, kind: Kind) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::BadCount {
                what: "cut table rows",
                min: 2,
                got: rows.len(),
            });
        }
        if rows[0].0 != 0.0 {
            return Err(Error::BadLevels { row: 0 });
        }
        if rows[rows.len() - 1].0 != 1.0 {
            return Err(Error::BadLevels {
                row: rows.len() - 1,
            });
        }
        for (row, w) in rows.windows(2).enumerate() {
            if w[0].0.partial_cmp(&w[1].0) != Some(std::cmp::Ordering::Less) {
                return Err(Error::BadLevels { row: row + 1 });
            }
            if !w[1].1.is_subset_of(&w[0].1) {
                return Err(Error::NotNested { row: row + 1 });
            }
        }
        Ok(CutTable { rows, kind })
    }

    /// Alpha-cuts of `p` at `levels` evenly spaced levels.
    pub fn of(p: &PseudoTfn, levels: usize) -> Result<Self> {
        let rows = alpha_levels(levels)?
            .into_iter()
            .map(|alpha| Ok((alpha, p.alpha_cut(alpha)?)))
            .collect::<Result<Vec<_>>>()?;
        CutTable::new(rows, p.kind())
    }

    pub fn rows(&self) -> &[(f64, Interval)] {
        &self.rows
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The level-0 interval.
    pub fn support(&self) -> Interval {
        self.rows[0].1
    }

    /// The level-1 interval.
    pub fn core(&self) -> Interval {
        self.rows[self.rows.len() - 1].1
    }

    /// Largest endpoint gap between two tables over the same levels, or
    /// `None` if the level ladders differ.
    pub fn max_distance(&self, other: &CutTable) -> Option<f64> {
        if self.rows.len() != other.rows.len() {
            return None;
        }
        self.rows
            .iter()
            .zip(&other.rows)
            .try_fold(0.0f64, |acc, ((a1, i1), (a2, i2))| {
                (a1 == a2).then(|| acc.max(i1.distance(i2)))
            })
    }

    /// Positive membership reconstructed from the cuts, interpolating
    /// linearly between adjacent levels; zero outside the level-0 cut.
    pub fn mu_at(&self, x: f64) -> f64 {
        let Some(top) = self.rows.iter().rposition(|(_, cut)| cut.contains(x)) else {
            return 0.0;
        };
        if top == self.rows.len() - 1 {
            return self.rows[top].0;
        }
        let (alpha, cut) = self.rows[top];
        let (next_alpha, next) = self.rows[top + 1];
        let frac = if x < next.lo() {
            (x - cut.lo()) / (next.lo() - cut.lo())
        } else {
            (cut.hi() - x) / (cut.hi() - next.hi())
        };
        (alpha + (next_alpha - alpha) * frac).clamp(alpha, next_alpha)
    }

    pub fn pair_at(&self, x: f64) -> MembershipPair {
        self.kind.pair_from_mu(self.mu_at(x))
    }
}

/// `n` evenly spaced levels `i / (n - 1)`; the first is exactly 0 and the last
/// exactly 1.
pub fn alpha_levels(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::BadCount {
            what: "levels",
            min: 2,
            got: n,
        });
    }
    let last = (n - 1) as f64;
    Ok((0..n).map(|i| i as f64 / last).collect())
}

fn same_kind(p: &PseudoTfn, q: &PseudoTfn) -> Result<Kind> {
    if p.kind() == q.kind() {
        Ok(p.kind())
    } else {
        Err(Error::KindMismatch {
            left: p.kind(),
            right: q.kind(),
        })
    }
}

fn check_divisor(q: &PseudoTfn) -> Result<()> {
    let support = q.shape().support();
    if support.contains_zero() {
        Err(Error::DivisorStraddlesZero {
            lo: support.lo(),
            hi: support.hi(),
        })
    } else {
        Ok(())
    }
}

/// `(a1 + a2, b1 + b2, c1 + c2)`
pub fn add(p: &PseudoTfn, q: &PseudoTfn) -> Result<PseudoTfn> {
    let kind = same_kind(p, q)?;
    let (s, t) = (p.shape(), q.shape());
    let shape = TriangleShape::new(s.a() + t.a(), s.b() + t.b(), s.c() + t.c())?;
    Ok(PseudoTfn::new(shape, kind))
}

/// `(a1 - c2, b1 - b2, c1 - a2)`. Note `p - p` is not zero: the spread adds.
pub fn sub(p: &PseudoTfn, q: &PseudoTfn) -> Result<PseudoTfn> {
    let kind = same_kind(p, q)?;
    let (s, t) = (p.shape(), q.shape());
    let shape = TriangleShape::new(s.a() - t.c(), s.b() - t.b(), s.c() - t.a())?;
    Ok(PseudoTfn::new(shape, kind))
}

/// `k * p`; a negative factor mirrors the triangle.
pub fn scale(p: &PseudoTfn, k: f64) -> Result<PseudoTfn> {
    finite("scale factor", k)?;
    if k == 0.0 {
        return Err(Error::ZeroScale);
    }
    let (a, b, c) = p.shape().vertices();
    let shape = if k > 0.0 {
        TriangleShape::new(k * a, k * b, k * c)?
    } else {
        TriangleShape::new(k * c, k * b, k * a)?
    };
    Ok(PseudoTfn::new(shape, p.kind()))
}

fn cutwise<F>(p: &PseudoTfn, q: &PseudoTfn, levels: usize, combine: F) -> Result<CutTable>
where
    F: Fn(&Interval, &Interval) -> Result<Interval>,
{
    let kind = same_kind(p, q)?;
    let rows = alpha_levels(levels)?
        .into_iter()
        .map(|alpha| {
            let cut = combine(&p.alpha_cut(alpha)?, &q.alpha_cut(alpha)?)?;
            Ok((alpha, cut))
        })
        .collect::<Result<Vec<_>>>()?;
    CutTable::new(rows, kind)
}

pub fn mul(p: &PseudoTfn, q: &PseudoTfn, levels: usize) -> Result<CutTable> {
    cutwise(p, q, levels, |x, y| Ok(x.mul(y)))
}

/// Requires the divisor's support `[a, c]` to exclude zero.
pub fn div(p: &PseudoTfn, q: &PseudoTfn, levels: usize) -> Result<CutTable> {
    same_kind(p, q)?;
    check_divisor(q)?;
    cutwise(p, q, levels, |x, y| x.div(y))
}

/// Any binary operation as a cut table. Add and sub are evaluated in closed
/// form and tabulated.
pub fn binary_table(
    p: &PseudoTfn,
    q: &PseudoTfn,
    op: BinaryOpCode,
    levels: usize,
) -> Result<CutTable> {
    match op {
        BinaryOpCode::Add => CutTable::of(&add(p, q)?, levels),
        BinaryOpCode::Sub => CutTable::of(&sub(p, q)?, levels),
        BinaryOpCode::Mul => mul(p, q, levels),
        BinaryOpCode::Div => div(p, q, levels),
    }
}

/// Membership pair at `x` for a result given as a cut table.
pub fn lambda_of_result(table: &CutTable, x: f64) -> MembershipPair {
    table.pair_at(x)
}

/// `grid + 1` evenly spaced points across the support, plus the peak.
fn support_samples(p: &PseudoTfn, grid: usize) -> Vec<(f64, f64)> {
    let (a, b, c) = p.shape().vertices();
    let w = c - a;
    let mut xs: Vec<f64> = (0..=grid)
        .map(|i| {
            if i == grid {
                c
            } else {
                a + w * i as f64 / grid as f64
            }
        })
        .collect();
    xs.push(b);
    xs.into_iter().map(|x| (x, p.mu_unchecked(x))).collect()
}

/// Highest level index `i` with `levels[i] <= m`.
fn level_index(levels: &[f64], m: f64) -> usize {
    let last = levels.len() - 1;
    let mut k = ((m * last as f64).floor() as usize).min(last);
    while k < last && levels[k + 1] <= m {
        k += 1;
    }
    while k > 0 && levels[k] > m {
        k -= 1;
    }
    k
}

/// Collects `(value, membership)` samples into nested level intervals.
fn sup_min_table<I>(samples: I, levels: usize, kind: Kind) -> Result<CutTable>
where
    I: IntoIterator<Item = (f64, f64)>,
{
    let alphas = alpha_levels(levels)?;
    let mut buckets = vec![(f64::INFINITY, f64::NEG_INFINITY); levels];
    for (v, m) in samples {
        let k = level_index(&alphas, m);
        let b = &mut buckets[k];
        b.0 = b.0.min(v);
        b.1 = b.1.max(v);
    }
    // a sample at level k belongs to every cut at or below k
    for k in (0..levels - 1).rev() {
        let above = buckets[k + 1];
        let b = &mut buckets[k];
        b.0 = b.0.min(above.0);
        b.1 = b.1.max(above.1);
    }
    let rows = alphas
        .into_iter()
        .zip(buckets)
        .map(|(alpha, (lo, hi))| Ok((alpha, Interval::new(lo, hi)?)))
        .collect::<Result<Vec<_>>>()?;
    CutTable::new(rows, kind)
}

fn check_grid(grid: usize) -> Result<()> {
    if grid < MIN_ORACLE_GRID {
        return Err(Error::BadCount {
            what: "oracle grid",
            min: MIN_ORACLE_GRID,
            got: grid,
        });
    }
    Ok(())
}

/// Brute-force sup-min extension of `op` to two fuzzy numbers.
///
/// Each support is sampled at `grid + 1` evenly spaced points plus the peak.
/// Every pair of samples contributes `op(x, y)` with membership
/// `min(mu_p(x), mu_q(y))`, and the cut at level `alpha` is the hull of the
/// values whose membership reaches `alpha`. Only the membership functions
/// are used, never the cuts, so the result is independent of the closed
/// forms above. Endpoints converge at the rate of the grid spacing.
pub fn extension_oracle(
    p: &PseudoTfn,
    q: &PseudoTfn,
    op: BinaryOpCode,
    grid: usize,
    levels: usize,
) -> Result<CutTable> {
    let kind = same_kind(p, q)?;
    if op == BinaryOpCode::Div {
        check_divisor(q)?;
    }
    check_grid(grid)?;
    alpha_levels(levels)?;
    let xs = support_samples(p, grid);
    let ys = support_samples(q, grid);
    let pairs = xs
        .iter()
        .flat_map(|&(x, mx)| ys.iter().map(move |&(y, my)| (op.apply(x, y), mx.min(my))));
    sup_min_table(pairs, levels, kind)
}

/// Unary counterpart of [`extension_oracle`] for a crisp map `f`.
pub fn extension_oracle_unary<F>(
    p: &PseudoTfn,
    f: F,
    grid: usize,
    levels: usize,
) -> Result<CutTable>
where
    F: Fn(f64) -> f64,
{
    check_grid(grid)?;
    let samples = support_samples(p, grid).into_iter().map(|(x, m)| (f(x), m));
    sup_min_table(samples, levels, p.kind())
}
