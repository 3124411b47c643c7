//! Letters, words, weights and tableaux on skew, rotated and staircase
//! shapes, together with the K-tableau families and their M-weights.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Monoid, Partition, RationalShape, RowSpan, Shape, SkewShape};

/// An entry `i` or `ī`. Stored as a signed code, negative when barred, so the
/// integer order is the crystal alphabet order n̄ < ... < 1̄ < 1 < ... < n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(value: usize) -> Letter {
        assert!(value > 0, "letters start at 1");
        Letter(value as i32)
    }

    pub fn bar(value: usize) -> Letter {
        assert!(value > 0, "letters start at 1");
        Letter(-(value as i32))
    }

    /// Inverse of [`Letter::code`]; zero is not a letter.
    pub fn from_code(code: i32) -> Option<Letter> {
        (code != 0).then_some(Letter(code))
    }

    pub fn code(self) -> i32 {
        self.0
    }

    pub fn value(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}\u{0304}", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

/// A finite sequence of letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Builds a word from signed codes (negative for barred letters).
    pub fn from_codes(codes: &[i32]) -> Result<Word> {
        codes
            .iter()
            .map(|&c| Letter::from_code(c).ok_or_else(|| Error::Parse(format!("{codes:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_unbarred(&self) -> bool {
        self.0.iter().all(|l| !l.is_barred())
    }

    pub fn codes(&self) -> Vec<i32> {
        self.0.iter().map(|l| l.code()).collect()
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        if s.trim().is_empty() {
            return Ok(Word::default());
        }
        let codes = s
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Word::from_codes(&codes)
    }
}

/// A GL_n weight in ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        WeightVector(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// ⟨wt, h_i⟩ = w_i - w_{i+1} for 1 ≤ i < n.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }

    /// Coordinates of wt_ss in the fundamental weights ϖ_1..ϖ_{n-1}.
    pub fn semisimple(&self) -> Vec<i64> {
        (1..self.rank()).map(|i| self.pairing(i)).collect()
    }

    /// The longest Weyl group element reverses the coordinates.
    pub fn w0(&self) -> WeightVector {
        WeightVector(self.0.iter().rev().copied().collect())
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// α_i = ε_i - ε_{i+1}.
    pub fn simple_root(n: usize, i: usize) -> WeightVector {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v[i] = -1;
        WeightVector(v)
    }
}

impl From<&Partition> for WeightVector {
    fn from(p: &Partition) -> Self {
        WeightVector(p.as_i64())
    }
}

/// One of the three symmetric pairs. `Sp(n)` stands for (GL_2n, Sp_2n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Pair {
    O(usize),
    GL(usize),
    Sp(usize),
}

impl Pair {
    /// The group rank n for O_n and GL_n, and n for Sp_2n.
    pub fn n(self) -> usize {
        match self {
            Pair::O(n) | Pair::GL(n) | Pair::Sp(n) => n,
        }
    }

    /// Size of the tableau alphabet: n, or 2n for Sp_2n.
    pub fn alphabet(self) -> usize {
        match self {
            Pair::O(n) | Pair::GL(n) => n,
            Pair::Sp(n) => 2 * n,
        }
    }

    /// The monoid Q indexing the spectrum of C[p].
    pub fn monoid(self) -> Monoid {
        match self {
            Pair::O(_) => Monoid::EvenRows,
            Pair::GL(_) => Monoid::All,
            Pair::Sp(_) => Monoid::EvenColumns,
        }
    }

    /// The tableau family T^λ_K parameterizing M-types.
    pub fn tableau_kind(self) -> KTableauKind {
        match self {
            Pair::O(n) => KTableauKind::O(n),
            Pair::GL(n) => KTableauKind::GlRat(n),
            Pair::Sp(n) => KTableauKind::SpBallot(n),
        }
    }

    /// Whether `shape` is a label in K̂, with the ambient length expected by
    /// [`Pair::normalize`].
    pub fn contains_label(self, shape: &Shape) -> bool {
        match (self, shape) {
            (Pair::O(n), Shape::Skew(s)) if s.is_straight() && s.rank() == n => {
                let l = s.outer();
                l.column_length(0) + l.column_length(1) <= n
            }
            (Pair::Sp(n), Shape::Skew(s)) if s.is_straight() && s.rank() == 2 * n => {
                s.outer().length() <= n
            }
            (Pair::GL(n), Shape::Staircase(s)) => s.rank() == n,
            _ => false,
        }
    }

    /// Brings a label to canonical form: straight of ambient n (O_n) or 2n
    /// (Sp_2n), or a staircase of rank n (GL_n). Polynomial labels for GL_n
    /// become staircases with empty minus part.
    pub fn normalize(self, shape: &Shape) -> Result<Shape> {
        let not_in = || Error::NotInDual {
            shape: shape.to_string(),
            pair: self.to_string(),
        };
        let out: Shape = match (self, shape) {
            (Pair::GL(n), Shape::Staircase(s)) if s.rank() == n => shape.clone(),
            (Pair::GL(n), Shape::Skew(s)) if s.is_straight() => {
                RationalShape::polynomial(s.outer().with_ambient(n).map_err(|_| not_in())?).into()
            }
            (Pair::O(n), Shape::Skew(s)) if s.is_straight() => {
                s.outer().with_ambient(n).map_err(|_| not_in())?.into()
            }
            (Pair::Sp(n), Shape::Skew(s)) if s.is_straight() => {
                s.outer().with_ambient(2 * n).map_err(|_| not_in())?.into()
            }
            _ => return Err(not_in()),
        };
        if self.contains_label(&out) {
            Ok(out)
        } else {
            Err(not_in())
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pair::O(n) => write!(f, "O{n}"),
            Pair::GL(n) => write!(f, "GL{n}"),
            Pair::Sp(n) => write!(f, "Sp{}", 2 * n),
        }
    }
}

impl FromStr for Pair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Pair> {
        let bad = || Error::UnknownPair(s.to_string());
        let t = s.trim();
        let (tag, num) = if let Some(r) = t.strip_prefix("GL") {
            ("GL", r)
        } else if let Some(r) = t.strip_prefix("Sp") {
            ("Sp", r)
        } else if let Some(r) = t.strip_prefix('O') {
            ("O", r)
        } else {
            return Err(bad());
        };
        let k: usize = num.parse().map_err(|_| bad())?;
        match tag {
            "O" if k >= 1 => Ok(Pair::O(k)),
            "GL" if k >= 1 => Ok(Pair::GL(k)),
            "Sp" if k >= 2 && k.is_multiple_of(2) => Ok(Pair::Sp(k / 2)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Pair {
    type Error = Error;
    fn try_from(s: String) -> Result<Pair> {
        s.parse()
    }
}

impl From<Pair> for String {
    fn from(p: Pair) -> String {
        p.to_string()
    }
}

/// The flag conditions on tableaux. For the symplectic kinds the parameter
/// is n in Sp_2n, so the alphabet is [2n].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KTableauKind {
    O(usize),
    GlRat(usize),
    SpH(usize),
    SpBallot(usize),
}

impl fmt::Display for KTableauKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KTableauKind::O(n) => write!(f, "O{n}"),
            KTableauKind::GlRat(n) => write!(f, "GL{n}"),
            KTableauKind::SpH(n) => write!(f, "Sp{}", 2 * n),
            KTableauKind::SpBallot(n) => write!(f, "Sp{}-ballot", 2 * n),
        }
    }
}

/// The M-weight δ of a K-tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MWeight {
    pub pair: Pair,
    pub vector: Vec<i64>,
}

impl MWeight {
    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(|&v| v == 0)
    }

    /// Dimension of the irreducible M-module with this highest weight.
    pub fn dimension(&self) -> usize {
        match self.pair {
            Pair::Sp(_) => self.vector.iter().map(|&v| v as usize + 1).product(),
            _ => 1,
        }
    }
}

/// A filling of a shape, stored row by row over the normalized grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: Shape,
    spans: Vec<RowSpan>,
    rows: Vec<Vec<Letter>>,
}

#[derive(Clone, Serialize, Deserialize)]
struct TableauRepr {
    shape: Shape,
    rows: Vec<Vec<i32>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(r: TableauRepr) -> Result<Tableau> {
        Tableau::from_codes(r.shape, r.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        let rows = t
            .rows
            .iter()
            .map(|r| r.iter().map(|l| l.code()).collect())
            .collect();
        TableauRepr {
            shape: t.shape,
            rows,
        }
    }
}

impl Tableau {
    /// Checks row lengths, the alphabet of each region and semistandardness.
    pub fn new(shape: Shape, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let spans = shape.spans();
        let n = shape.rank();
        if rows.len() != spans.len() {
            return Err(Error::RowLength {
                row: rows.len(),
                got: rows.len(),
                expected: spans.len(),
            });
        }
        for (r, (row, span)) in rows.iter().zip(&spans).enumerate() {
            if row.len() != span.len {
                return Err(Error::RowLength {
                    row: r + 1,
                    got: row.len(),
                    expected: span.len,
                });
            }
            for &l in row {
                if l.is_barred() != span.barred || l.value() == 0 || l.value() > n {
                    return Err(Error::Alphabet {
                        letter: l.code(),
                        row: r + 1,
                        rank: n,
                    });
                }
            }
        }
        let t = Tableau { shape, spans, rows };
        t.check_semistandard()?;
        Ok(t)
    }

    /// Like [`Tableau::new`] with barred entries given as negative integers.
    pub fn from_codes(shape: Shape, rows: Vec<Vec<i32>>) -> Result<Tableau> {
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| Letter::from_code(c).ok_or_else(|| Error::Parse("0".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape, rows)
    }

    /// A straight tableau from its nonempty rows, over the alphabet [n].
    pub fn from_rows(rows: &[&[usize]], n: usize) -> Result<Tableau> {
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape = Partition::new(lengths)?.with_ambient(n)?;
        let mut full: Vec<Vec<Letter>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| if v == 0 { Letter(0) } else { Letter::new(v) })
                    .collect()
            })
            .collect();
        full.resize(n, Vec::new());
        Tableau::new(shape.into(), full)
    }

    /// The empty filling of an empty shape of rank `n`.
    pub fn empty(n: usize) -> Tableau {
        Tableau::unchecked(Partition::zero(n).into(), vec![Vec::new(); n])
    }

    pub(crate) fn unchecked(shape: Shape, rows: Vec<Vec<Letter>>) -> Tableau {
        let spans = shape.spans();
        debug_assert_eq!(rows.len(), spans.len());
        Tableau { shape, spans, rows }
    }

    fn check_semistandard(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            let span = self.spans[r];
            for (k, &l) in row.iter().enumerate() {
                let c = span.start + k;
                if k > 0 && row[k - 1] > l {
                    return Err(Error::NotSemistandard {
                        row: r + 1,
                        col: c + 1,
                    });
                }
                if r > 0 {
                    if let Some(above) = self.get(r - 1, c) {
                        if above.is_barred() == l.is_barred() && above >= l {
                            return Err(Error::NotSemistandard {
                                row: r + 1,
                                col: c + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn spans(&self) -> &[RowSpan] {
        &self.spans
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Alphabet size n.
    pub fn rank(&self) -> usize {
        self.shape.rank()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entry at (0-based) row `r`, normalized column `c`.
    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        let span = self.spans.get(r)?;
        span.covers(c).then(|| self.rows[r][c - span.start])
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<Letter> {
        (0..self.rows.len())
            .filter_map(|r| self.get(r, c))
            .collect()
    }

    /// Entries read left to right, bottom to top.
    pub fn row_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Cell coordinates in row-word order.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in (0..self.rows.len()).rev() {
            let span = self.spans[r];
            out.extend((span.start..span.end()).map(|c| (r, c)));
        }
        out
    }

    /// Refills the cells from a word in row-word order.
    pub(crate) fn with_word(&self, word: &[Letter]) -> Tableau {
        debug_assert_eq!(word.len(), self.size());
        let mut rows = self.rows.clone();
        let mut it = word.iter();
        for row in rows.iter_mut().rev() {
            for slot in row.iter_mut() {
                *slot = *it.next().expect("word is long enough");
            }
        }
        Tableau {
            shape: self.shape.clone(),
            spans: self.spans.clone(),
            rows,
        }
    }

    /// ε-coordinates; a barred ī contributes -ε_i.
    pub fn weight(&self) -> WeightVector {
        let mut w = vec![0i64; self.rank()];
        for l in self.rows.iter().flatten() {
            w[l.value() - 1] += if l.is_barred() { -1 } else { 1 };
        }
        WeightVector(w)
    }

    /// Number of entries equal to the unbarred value `v`.
    pub fn count(&self, v: usize) -> usize {
        self.rows
            .iter()
            .flatten()
            .filter(|l| !l.is_barred() && l.value() == v)
            .count()
    }

    pub fn is_unbarred(&self) -> bool {
        self.rows.iter().flatten().all(|l| !l.is_barred())
    }

    /// Row-word order key used for deterministic listings.
    pub fn sort_key(&self) -> Word {
        self.row_word()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .zip(&self.spans)
            .map(|(row, span)| {
                let mut cells: Vec<String> = vec![".".to_string(); span.start];
                cells.extend(row.iter().map(|l| l.to_string()));
                cells.join(" ")
            })
            .collect();
        write!(f, "{}", lines.join(" / "))
    }
}

/// All semistandard fillings of `shape` over the alphabet [n], where n is the
/// rank of the shape. Staircase cells take barred letters, and for staircase
/// shapes only the GL_n-tableaux are kept, which is the crystal B^λ_n.
/// Sorted by row word.
pub fn enumerate_ssyt(shape: &Shape) -> Vec<Tableau> {
    fill_shape(shape, None)
}

/// The fillings of `shape` with the given weight (staircase cells count
/// negatively), pruning the search by the multiplicity of each letter.
pub fn enumerate_ssyt_of_weight(shape: &Shape, weight: &WeightVector) -> Vec<Tableau> {
    if weight.rank() != shape.rank() {
        return Vec::new();
    }
    match shape {
        Shape::Skew(_) => {
            if weight.coeffs().iter().any(|&c| c < 0) || weight.total() != shape.size() as i64 {
                return Vec::new();
            }
            let caps: Vec<usize> = weight.coeffs().iter().map(|&c| c as usize).collect();
            fill_shape(shape, Some(&caps))
        }
        Shape::Staircase(_) => fill_shape(shape, None)
            .into_iter()
            .filter(|t| &t.weight() == weight)
            .collect(),
    }
}

fn fill_shape(shape: &Shape, caps: Option<&[usize]>) -> Vec<Tableau> {
    let spans = shape.spans();
    let n = shape.rank() as i32;
    struct Cell {
        left: Option<usize>,
        above: Option<usize>,
        lo: i32,
        hi: i32,
    }
    let mut cells = Vec::new();
    let mut index_of = vec![Vec::new(); spans.len()];
    for (r, span) in spans.iter().enumerate() {
        for c in span.start..span.end() {
            let left = (c > span.start).then(|| cells.len() - 1);
            let above = (r > 0 && spans[r - 1].covers(c) && spans[r - 1].barred == span.barred)
                .then(|| index_of[r - 1][c - spans[r - 1].start]);
            let (lo, hi) = if span.barred { (-n, -1) } else { (1, n) };
            index_of[r].push(cells.len());
            cells.push(Cell {
                left,
                above,
                lo,
                hi,
            });
        }
    }
    struct Search<'a> {
        cells: &'a [Cell],
        caps: Option<&'a [usize]>,
        counts: Vec<usize>,
    }
    fn rec(k: usize, st: &mut Search, vals: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        let cells = st.cells;
        if k == cells.len() {
            out.push(vals.clone());
            return;
        }
        let cell = &cells[k];
        let mut lo = cell.lo;
        if let Some(l) = cell.left {
            lo = lo.max(vals[l]);
        }
        if let Some(a) = cell.above {
            lo = lo.max(vals[a] + 1);
        }
        for v in lo..=cell.hi {
            if let Some(caps) = st.caps {
                let idx = v.unsigned_abs() as usize - 1;
                if v < 0 || st.counts[idx] == caps[idx] {
                    continue;
                }
                st.counts[idx] += 1;
                vals.push(v);
                rec(k + 1, st, vals, out);
                vals.pop();
                st.counts[idx] -= 1;
            } else {
                vals.push(v);
                rec(k + 1, st, vals, out);
                vals.pop();
            }
        }
    }
    let mut raw = Vec::new();
    let mut st = Search {
        cells: &cells,
        caps,
        counts: vec![0; shape.rank()],
    };
    rec(0, &mut st, &mut Vec::with_capacity(cells.len()), &mut raw);
    let mut out: Vec<Tableau> = raw
        .into_iter()
        .map(|vals| {
            let mut it = vals.into_iter();
            let rows = spans
                .iter()
                .map(|s| (0..s.len).map(|_| Letter(it.next().unwrap())).collect())
                .collect();
            Tableau::unchecked(shape.clone(), rows)
        })
        .collect();
    if let Shape::Staircase(_) = shape {
        out.retain(gl_flag_condition);
    }
    out.sort_by_cached_key(|t| t.row_word());
    out
}

/// Number of boxes in the same column and region above / below a cell.
fn column_neighbors(spans: &[RowSpan], r: usize, c: usize) -> (usize, usize) {
    let barred = spans[r].barred;
    let hit = |s: &RowSpan| s.covers(c) && s.barred == barred;
    let above = spans[..r].iter().filter(|s| hit(s)).count();
    let below = spans[r + 1..].iter().filter(|s| hit(s)).count();
    (above, below)
}

fn extremal_tableau(shape: &Shape, highest: bool) -> Result<Tableau> {
    if let Shape::Skew(s) = shape {
        if !s.inner().is_zero() {
            return Err(Error::NotStraight);
        }
    }
    let spans = shape.spans();
    let n = shape.rank();
    let rows = spans
        .iter()
        .enumerate()
        .map(|(r, span)| {
            (span.start..span.end())
                .map(|c| {
                    let (above, below) = column_neighbors(&spans, r, c);
                    match (span.barred, highest) {
                        (false, true) => Letter::new(above + 1),
                        (false, false) => Letter::new(n - below),
                        (true, true) => Letter::bar(n - above),
                        (true, false) => Letter::bar(below + 1),
                    }
                })
                .collect()
        })
        .collect();
    Ok(Tableau::unchecked(shape.clone(), rows))
}

/// H^λ_n: the unique highest weight element on a straight, rotated or
/// staircase shape.
pub fn highest_tableau(shape: &Shape) -> Result<Tableau> {
    extremal_tableau(shape, true)
}

/// L^λ_n: the unique lowest weight element on a straight, rotated or
/// staircase shape.
pub fn lowest_tableau(shape: &Shape) -> Result<Tableau> {
    extremal_tableau(shape, false)
}

fn at_most(values: &[usize], step: usize, limit: usize) -> bool {
    (1..=limit).all(|i| values.iter().filter(|&&v| v <= step * i).count() <= i)
}

fn gl_flag_condition(t: &Tableau) -> bool {
    let Shape::Staircase(s) = t.shape() else {
        return false;
    };
    let axis = s.minus().first();
    let mut firsts: Vec<usize> = t.column(axis).iter().map(|l| l.value()).collect();
    if axis > 0 {
        firsts.extend(t.column(axis - 1).iter().map(|l| l.value()));
    }
    at_most(&firsts, 1, s.rank())
}

fn is_ballot(t: &Tableau) -> bool {
    let mut counts = vec![0usize; t.rank() + 2];
    for l in t.row_word().iter().rev() {
        let v = l.value();
        counts[v] += 1;
        if v % 2 == 0 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// The row-bound form of the Sp_2n condition: entries of row i are ≥ 2i-1.
pub fn sp_row_bound(t: &Tableau) -> bool {
    t.rows()
        .iter()
        .enumerate()
        .all(|(r, row)| row.iter().all(|l| l.value() > 2 * r))
}

/// Membership in T^λ_K for the given flag condition.
pub fn is_k_tableau(t: &Tableau, kind: KTableauKind) -> Result<bool> {
    let incompatible = || Error::IncompatibleShape(kind.to_string());
    match kind {
        KTableauKind::O(n) => {
            if !t.shape().is_straight() || t.rank() != n {
                return Err(incompatible());
            }
            let mut firsts: Vec<usize> = t.column(0).iter().map(|l| l.value()).collect();
            firsts.extend(t.column(1).iter().map(|l| l.value()));
            Ok(at_most(&firsts, 1, n))
        }
        KTableauKind::GlRat(n) => match t.shape() {
            Shape::Staircase(s) if s.rank() == n => Ok(gl_flag_condition(t)),
            _ => Err(incompatible()),
        },
        KTableauKind::SpH(n) | KTableauKind::SpBallot(n) => {
            if !t.shape().is_straight() || t.rank() != 2 * n {
                return Err(incompatible());
            }
            let firsts: Vec<usize> = t.column(0).iter().map(|l| l.value()).collect();
            let flag = at_most(&firsts, 2, n);
            Ok(flag && (matches!(kind, KTableauKind::SpH(_)) || is_ballot(t)))
        }
    }
}

/// mwt_K(T). For Sp_2n the tableau must be a ballot tableau.
pub fn m_weight(t: &Tableau, pair: Pair) -> Result<MWeight> {
    let kind = pair.tableau_kind();
    if !is_k_tableau(t, kind)? {
        return Err(Error::NotKTableau(kind.to_string()));
    }
    let vector = match pair {
        Pair::O(n) => (1..=n).map(|i| (t.count(i) % 2) as i64).collect(),
        Pair::GL(_) => t.weight().coeffs().to_vec(),
        Pair::Sp(n) => (1..=n)
            .map(|i| t.count(2 * i - 1) as i64 - t.count(2 * i) as i64)
            .collect(),
    };
    Ok(MWeight { pair, vector })
}

/// All tableaux of the given flag kind on `shape`.
pub fn k_tableaux(shape: &Shape, kind: KTableauKind) -> Result<Vec<Tableau>> {
    let all = enumerate_ssyt(shape);
    let mut out = Vec::new();
    for t in all {
        if is_k_tableau(&t, kind)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// (T^ν_K)_0, the K-tableaux on ν of M-weight zero.
pub fn zero_weight_tableaux(nu: &Shape, pair: Pair) -> Result<Vec<Tableau>> {
    let nu = pair.normalize(nu)?;
    if !matches!(pair, Pair::GL(_)) && nu.size() % 2 == 1 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in k_tableaux(&nu, pair.tableau_kind())? {
        if m_weight(&t, pair)?.is_zero() {
            out.push(t);
        }
    }
    Ok(out)
}

/// The M-polynomial as a map δ ↦ #(T^λ_K)_δ.
pub fn m_polynomial(lambda: &Shape, pair: Pair) -> Result<BTreeMap<MWeight, usize>> {
    let lambda = pair.normalize(lambda)?;
    let mut out = BTreeMap::new();
    for t in k_tableaux(&lambda, pair.tableau_kind())? {
        *out.entry(m_weight(&t, pair)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// dim π^λ_K, by counting O_n-, GL_n- or (non-ballot) Sp_2n-tableaux.
pub fn dim_k(lambda: &Shape, pair: Pair) -> Result<usize> {
    let lambda = pair.normalize(lambda)?;
    let kind = match pair {
        Pair::Sp(n) => KTableauKind::SpH(n),
        _ => pair.tableau_kind(),
    };
    Ok(k_tableaux(&lambda, kind)?.len())
}

/// Convenience for a straight shape from parts.
pub fn straight(parts: &[usize]) -> Result<Shape> {
    Ok(Partition::new(parts.to_vec())?.into())
}

/// Convenience for a skew shape λ/μ or λ^π/μ^π.
pub fn skew(outer: &[usize], inner: &[usize], rotated: bool) -> Result<Shape> {
    Ok(SkewShape::new(
        Partition::new(outer.to_vec())?,
        Partition::new(inner.to_vec())?,
        rotated,
    )?
    .into())
}
