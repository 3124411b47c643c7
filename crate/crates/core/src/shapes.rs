//! Partitions with an explicit ambient length, skew and rotated shapes,
//! staircase (rational) shapes, and the monoids indexing branching sums.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing tuple of nonnegative integers. The number of stored
/// parts is the ambient length, so `(2,1,0)` and `(2,1)` are different values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The empty partition of ambient length `n`.
    pub fn zero(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn ambient(&self) -> usize {
        self.parts.len()
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// The part in (0-based) position `i`, zero past the ambient length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Number of boxes in (0-based) column `c`.
    pub fn column_length(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > c).count()
    }

    /// Pads with zeros or drops trailing zeros to reach ambient length `n`.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        let len = self.length();
        if len > n {
            return Err(Error::TooLong { len, n });
        }
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// (λ_n, ..., λ_1), the lowest weight w₀(λ) as a plain tuple.
    pub fn reversed(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    /// Componentwise sum; both sides must share the ambient length.
    pub fn plus(&self, other: &Partition) -> Result<Partition> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a + b)
            .collect();
        Partition::new(parts)
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::zero(0));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Transpose of the diagram. The result has ambient length λ₁.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (0..lambda.first())
        .map(|c| lambda.column_length(c))
        .collect();
    Partition { parts }
}

/// λ^π, the diagram rotated by 180 degrees.
pub fn pi_rotate(lambda: &Partition) -> SkewShape {
    SkewShape::rotated(lambda.clone())
}

/// Cellwise containment μ ⊆ λ.
pub fn contains(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.ambient() != mu.ambient() {
        return Err(Error::AmbientMismatch(lambda.ambient(), mu.ambient()));
    }
    Ok(lambda.parts.iter().zip(&mu.parts).all(|(l, m)| m <= l))
}

/// One row of a diagram in the normalized grid: columns `start..start+len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowSpan {
    pub start: usize,
    pub len: usize,
    pub barred: bool,
}

impl RowSpan {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn covers(&self, col: usize) -> bool {
        col >= self.start && col < self.end()
    }
}

/// λ/μ, or its rotation λ^π/μ^π when `rotated` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewRepr", into = "SkewRepr")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    rotated: bool,
}

#[derive(Clone, Serialize, Deserialize)]
struct SkewRepr {
    outer: Partition,
    inner: Partition,
    rotated: bool,
}

impl TryFrom<SkewRepr> for SkewShape {
    type Error = Error;
    fn try_from(r: SkewRepr) -> Result<Self> {
        SkewShape::new(r.outer, r.inner, r.rotated)
    }
}

impl From<SkewShape> for SkewRepr {
    fn from(s: SkewShape) -> Self {
        SkewRepr {
            outer: s.outer,
            inner: s.inner,
            rotated: s.rotated,
        }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition, rotated: bool) -> Result<Self> {
        if !contains(&outer, &inner)? {
            return Err(Error::NotContained);
        }
        Ok(SkewShape {
            outer,
            inner,
            rotated,
        })
    }

    pub fn straight(lambda: Partition) -> Self {
        let inner = Partition::zero(lambda.ambient());
        SkewShape {
            outer: lambda,
            inner,
            rotated: false,
        }
    }

    pub fn rotated(lambda: Partition) -> Self {
        let inner = Partition::zero(lambda.ambient());
        SkewShape {
            outer: lambda,
            inner,
            rotated: true,
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_rotated(&self) -> bool {
        self.rotated
    }

    pub fn rank(&self) -> usize {
        self.outer.ambient()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// A plain Young diagram: empty inner shape and not rotated.
    pub fn is_straight(&self) -> bool {
        !self.rotated && self.inner.is_zero()
    }

    /// The same cells turned by 180 degrees.
    pub fn rotate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
            rotated: !self.rotated,
        }
    }

    /// Row lengths top to bottom as drawn.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.spans().iter().map(|s| s.len).collect()
    }

    /// Row spans top to bottom. Rotated shapes are right-justified against
    /// column λ₁.
    pub fn spans(&self) -> Vec<RowSpan> {
        let n = self.rank();
        let w = self.outer.first();
        (0..n)
            .map(|r| {
                if self.rotated {
                    let k = n - 1 - r;
                    let start = w - self.outer.part(k);
                    RowSpan {
                        start,
                        len: self.outer.part(k) - self.inner.part(k),
                        barred: false,
                    }
                } else {
                    let start = self.inner.part(r);
                    RowSpan {
                        start,
                        len: self.outer.part(r) - start,
                        barred: false,
                    }
                }
            })
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = if self.rotated { "^pi" } else { "" };
        if self.inner.is_zero() {
            write!(f, "({}){}", self.outer, pi)
        } else {
            write!(f, "({}){}/({}){}", self.outer, pi, self.inner, pi)
        }
    }
}

/// A rational GL_n label (λ⁺, λ⁻) drawn as a staircase: λ⁺ top-left, λ⁻
/// rotated into the bottom rows to the left of the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct RationalShape {
    plus: Partition,
    minus: Partition,
}

#[derive(Clone, Serialize, Deserialize)]
struct RationalRepr {
    plus: Partition,
    minus: Partition,
    n: usize,
}

impl TryFrom<RationalRepr> for RationalShape {
    type Error = Error;
    fn try_from(r: RationalRepr) -> Result<Self> {
        RationalShape::new(r.plus.with_ambient(r.n)?, r.minus.with_ambient(r.n)?)
    }
}

impl From<RationalShape> for RationalRepr {
    fn from(s: RationalShape) -> Self {
        let n = s.rank();
        RationalRepr {
            plus: s.plus,
            minus: s.minus,
            n,
        }
    }
}

impl RationalShape {
    pub fn new(plus: Partition, minus: Partition) -> Result<Self> {
        let n = plus.ambient();
        if minus.ambient() != n {
            return Err(Error::AmbientMismatch(n, minus.ambient()));
        }
        if plus.length() + minus.length() > n {
            return Err(Error::StaircaseOverflow(n));
        }
        Ok(RationalShape { plus, minus })
    }

    pub fn polynomial(lambda: Partition) -> Self {
        let minus = Partition::zero(lambda.ambient());
        RationalShape {
            plus: lambda,
            minus,
        }
    }

    /// Reads a staircase weight (λ⁺₁, ..., -λ⁻₂, -λ⁻₁).
    pub fn from_staircase(weight: &[i64]) -> Result<Self> {
        let n = weight.len();
        if weight.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{weight:?}")));
        }
        let plus = weight.iter().map(|&w| w.max(0) as usize).collect();
        let minus = weight.iter().rev().map(|&w| (-w).max(0) as usize).collect();
        RationalShape::new(Partition::new(plus)?, Partition::new(minus)?).inspect(|s| {
            debug_assert_eq!(s.rank(), n);
        })
    }

    pub fn plus(&self) -> &Partition {
        &self.plus
    }

    pub fn minus(&self) -> &Partition {
        &self.minus
    }

    pub fn rank(&self) -> usize {
        self.plus.ambient()
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }

    pub fn is_polynomial(&self) -> bool {
        self.minus.is_zero()
    }

    /// λ*, the contragredient label (plus and minus swapped).
    pub fn dual(&self) -> RationalShape {
        RationalShape {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// The highest weight (λ⁺₁, ..., -λ⁻₂, -λ⁻₁) in ε-coordinates.
    pub fn staircase(&self) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| self.plus.part(i) as i64 - self.minus.part(n - 1 - i) as i64)
            .collect()
    }

    /// Row spans of the staircase. Barred cells occupy columns `0..λ⁻₁`,
    /// unbarred cells start at column λ⁻₁.
    pub fn spans(&self) -> Vec<RowSpan> {
        let n = self.rank();
        let axis = self.minus.first();
        (0..n)
            .map(|r| {
                let p = self.plus.part(r);
                let m = self.minus.part(n - 1 - r);
                if m > 0 {
                    RowSpan {
                        start: axis - m,
                        len: m,
                        barred: true,
                    }
                } else {
                    RowSpan {
                        start: axis,
                        len: p,
                        barred: false,
                    }
                }
            })
            .collect()
    }
}

impl fmt::Display for RationalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let trim = |p: &Partition| {
            let v: Vec<String> = p.parts()[..p.length()]
                .iter()
                .map(|x| x.to_string())
                .collect();
            v.join(",")
        };
        write!(
            f,
            "{}|{}@{}",
            trim(&self.plus),
            trim(&self.minus),
            self.rank()
        )
    }
}

impl FromStr for RationalShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (body, n) = s.split_once('@').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let (plus, minus) = body.split_once('|').ok_or_else(bad)?;
        let plus: Partition = plus.parse()?;
        let minus: Partition = minus.parse()?;
        RationalShape::new(plus.with_ambient(n)?, minus.with_ambient(n)?)
    }
}

/// The shape of a tableau: a (possibly rotated) skew shape or a staircase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shape {
    Skew(SkewShape),
    Staircase(RationalShape),
}

impl Shape {
    pub fn rank(&self) -> usize {
        match self {
            Shape::Skew(s) => s.rank(),
            Shape::Staircase(s) => s.rank(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Shape::Skew(s) => s.size(),
            Shape::Staircase(s) => s.size(),
        }
    }

    pub fn spans(&self) -> Vec<RowSpan> {
        match self {
            Shape::Skew(s) => s.spans(),
            Shape::Staircase(s) => s.spans(),
        }
    }

    pub fn is_straight(&self) -> bool {
        matches!(self, Shape::Skew(s) if s.is_straight())
    }

    /// The partition of a straight shape.
    pub fn straight_partition(&self) -> Option<&Partition> {
        match self {
            Shape::Skew(s) if s.is_straight() => Some(s.outer()),
            _ => None,
        }
    }

    pub fn as_skew(&self) -> Option<&SkewShape> {
        match self {
            Shape::Skew(s) => Some(s),
            Shape::Staircase(_) => None,
        }
    }

    pub fn as_staircase(&self) -> Option<&RationalShape> {
        match self {
            Shape::Staircase(s) => Some(s),
            Shape::Skew(_) => None,
        }
    }
}

impl From<Partition> for Shape {
    fn from(p: Partition) -> Self {
        Shape::Skew(SkewShape::straight(p))
    }
}

impl From<SkewShape> for Shape {
    fn from(s: SkewShape) -> Self {
        Shape::Skew(s)
    }
}

impl From<RationalShape> for Shape {
    fn from(s: RationalShape) -> Self {
        Shape::Staircase(s)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Skew(s) if s.is_straight() => write!(f, "{}", s.outer()),
            Shape::Skew(s) => write!(f, "{s}"),
            Shape::Staircase(s) => write!(f, "{s}"),
        }
    }
}

/// The three monoids of partitions indexing the spectra of the symmetric pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Monoid {
    /// P^(2)_n, even rows.
    EvenRows,
    /// P_n.
    All,
    /// P^(1,1)_2n, even columns.
    EvenColumns,
}

pub fn in_monoid(lambda: &Partition, q: Monoid) -> bool {
    match q {
        Monoid::All => true,
        Monoid::EvenRows => lambda.parts().iter().all(|p| p % 2 == 0),
        Monoid::EvenColumns => lambda.parts().chunks(2).all(|c| match c {
            [a, b] => a == b,
            [a] => *a == 0,
            _ => true,
        }),
    }
}

/// Degree of a monoid element: |λ| for `All`, |λ|/2 otherwise.
pub fn monoid_degree(lambda: &Partition, q: Monoid) -> usize {
    match q {
        Monoid::All => lambda.size(),
        _ => lambda.size() / 2,
    }
}

/// All partitions of `k` with ambient length `n` lying in `q` and inside
/// `bound`, in lexicographically decreasing order.
pub fn enumerate_partitions(
    k: usize,
    n: usize,
    q: Monoid,
    bound: Option<&Partition>,
) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        cap: usize,
        parts: &mut Vec<usize>,
        n: usize,
        bound: Option<&Partition>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = parts.len();
        if i == n {
            if remaining == 0 {
                out.push(parts.clone());
            }
            return;
        }
        let mut top = cap.min(remaining);
        if let Some(b) = bound {
            top = top.min(b.part(i));
        }
        // the rest of the rows can hold at most (n - i) * top boxes
        for p in (0..=top).rev() {
            if p * (n - i) < remaining {
                break;
            }
            parts.push(p);
            rec(remaining - p, p, parts, n, bound, out);
            parts.pop();
        }
    }
    if let Some(b) = bound {
        if b.ambient() != n {
            return Vec::new();
        }
    }
    let mut raw = Vec::new();
    rec(k, k, &mut Vec::with_capacity(n), n, bound, &mut raw);
    raw.into_iter()
        .map(|parts| Partition { parts })
        .filter(|p| in_monoid(p, q))
        .collect()
}

/// The free generators of `q` in degrees 1..n. For `EvenColumns` the
/// ambient length is 2n.
pub fn monoid_generators(n: usize, q: Monoid) -> Vec<Partition> {
    (1..=n)
        .map(|k| {
            let parts = match q {
                Monoid::EvenRows => (0..n).map(|i| if i < k { 2 } else { 0 }).collect(),
                Monoid::All => (0..n).map(|i| usize::from(i < k)).collect(),
                Monoid::EvenColumns => (0..2 * n).map(|i| usize::from(i < 2 * k)).collect(),
            };
            Partition { parts }
        })
        .collect()
}
