//! Row insertion, jeu de taquin and the plactic product of tableaux.

use crate::error::{Error, Result};
use crate::shapes::{Partition, Shape};
use crate::tableaux::{Letter, Tableau, Word};

fn require_unbarred(t: &Tableau) -> Result<()> {
    if matches!(t.shape(), Shape::Staircase(_)) || !t.is_unbarred() {
        return Err(Error::Barred);
    }
    Ok(())
}

fn straight_from_rows(mut rows: Vec<Vec<Letter>>, n: usize) -> Result<Tableau> {
    while rows.len() > n {
        match rows.pop() {
            Some(r) if r.is_empty() => {}
            _ => {
                return Err(Error::TooLong {
                    len: rows.len() + 1,
                    n,
                })
            }
        }
    }
    rows.resize(n, Vec::new());
    let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
    Ok(Tableau::unchecked(shape.into(), rows))
}

fn bump(rows: &mut Vec<Vec<Letter>>, mut x: Letter) {
    for row in rows.iter_mut() {
        match row.iter().position(|&y| y > x) {
            Some(k) => x = std::mem::replace(&mut row[k], x),
            None => {
                row.push(x);
                return;
            }
        }
    }
    rows.push(vec![x]);
}

/// T ← x, Schensted row insertion into a straight tableau.
pub fn row_insert(t: &Tableau, x: Letter) -> Result<Tableau> {
    require_unbarred(t)?;
    if !t.shape().is_straight() {
        return Err(Error::NotStraight);
    }
    if x.is_barred() || x.value() > t.rank() {
        return Err(Error::Alphabet {
            letter: x.code(),
            row: 0,
            rank: t.rank(),
        });
    }
    let mut rows: Vec<Vec<Letter>> = t.rows().iter().filter(|r| !r.is_empty()).cloned().collect();
    bump(&mut rows, x);
    straight_from_rows(rows, t.rank())
}

/// P(w), the insertion tableau of an unbarred word over [n].
pub fn insertion_tableau(w: &Word, n: usize) -> Result<Tableau> {
    if let Some(l) = w.iter().find(|l| l.is_barred() || l.value() > n) {
        return Err(Error::Alphabet {
            letter: l.code(),
            row: 0,
            rank: n,
        });
    }
    let mut rows = Vec::new();
    for &x in w.iter() {
        bump(&mut rows, x);
    }
    straight_from_rows(rows, n)
}

/// Jeu de taquin on a grid whose row `r` holds `rows[r]` starting at column
/// `inner[r]`. Inner corners are vacated topmost first.
fn rectify_grid(mut inner: Vec<usize>, rows: Vec<Vec<Letter>>, n: usize) -> Result<Tableau> {
    let h = rows.len();
    let mut outer: Vec<usize> = inner.iter().zip(&rows).map(|(a, r)| a + r.len()).collect();
    let mut grid: Vec<Vec<Option<Letter>>> = rows
        .into_iter()
        .zip(&inner)
        .map(|(r, &a)| {
            std::iter::repeat_n(None, a)
                .chain(r.into_iter().map(Some))
                .collect()
        })
        .collect();
    while let Some(r0) = (0..h).find(|&r| inner[r] > 0 && (r + 1 == h || inner[r + 1] < inner[r])) {
        inner[r0] -= 1;
        let (mut r, mut c) = (r0, inner[r0]);
        loop {
            let below = (r + 1 < h && c < outer[r + 1])
                .then(|| grid[r + 1][c])
                .flatten();
            let right = (c + 1 < outer[r]).then(|| grid[r][c + 1]).flatten();
            match (below, right) {
                (None, None) => {
                    grid[r].pop();
                    outer[r] -= 1;
                    break;
                }
                (Some(b), rt) if rt.is_none_or(|x| b <= x) => {
                    grid[r][c] = Some(b);
                    grid[r + 1][c] = None;
                    r += 1;
                }
                (_, Some(x)) => {
                    grid[r][c] = Some(x);
                    grid[r][c + 1] = None;
                    c += 1;
                }
                (Some(_), None) => unreachable!(),
            }
        }
    }
    let rows = grid
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.expect("filled cell")).collect())
        .collect();
    straight_from_rows(rows, n)
}

/// Rect(T): slide a skew (possibly rotated) tableau to straight shape.
pub fn rectify(t: &Tableau) -> Result<Tableau> {
    require_unbarred(t)?;
    let inner = t.spans().iter().map(|s| s.start).collect();
    rectify_grid(inner, t.rows().to_vec(), t.rank())
}

/// The three constructions of the plactic product T1 · T2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMethod {
    /// P(w(T1) w(T2)).
    ConcatWord,
    /// Rect(T1) ← w(T2).
    Insert,
    /// Rect(T1 * T2), with T2 placed above and to the right of T1.
    StarRect,
}

pub fn product(t1: &Tableau, t2: &Tableau, method: ProductMethod) -> Result<Tableau> {
    require_unbarred(t1)?;
    require_unbarred(t2)?;
    let n = t1.rank();
    if t2.rank() != n {
        return Err(Error::RankMismatch(n, t2.rank()));
    }
    match method {
        ProductMethod::ConcatWord => insertion_tableau(&t1.row_word().concat(&t2.row_word()), n),
        ProductMethod::Insert => {
            let base = rectify(t1)?;
            let mut rows: Vec<Vec<Letter>> = base
                .rows()
                .iter()
                .filter(|r| !r.is_empty())
                .cloned()
                .collect();
            for &x in t2.row_word().iter() {
                bump(&mut rows, x);
            }
            straight_from_rows(rows, n)
        }
        ProductMethod::StarRect => {
            let width = t1.spans().iter().map(|s| s.end()).max().unwrap_or(0);
            let mut inner: Vec<usize> = t2.spans().iter().map(|s| width + s.start).collect();
            inner.extend(t1.spans().iter().map(|s| s.start));
            let mut rows = t2.rows().to_vec();
            rows.extend(t1.rows().iter().cloned());
            rectify_grid(inner, rows, n)
        }
    }
}

/// Knuth equivalence, decided by comparing insertion tableaux.
pub fn knuth_equivalent(w1: &Word, w2: &Word) -> bool {
    let n = w1
        .iter()
        .chain(w2.iter())
        .map(|l| l.value())
        .max()
        .unwrap_or(1);
    match (insertion_tableau(w1, n), insertion_tableau(w2, n)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Every word reachable from `w` by one elementary Knuth transformation
/// yzx ↔ yxz (x < y ≤ z) or xzy ↔ zxy (x ≤ y < z).
pub fn knuth_moves(w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let l = w.letters();
    for j in 0..l.len().saturating_sub(2) {
        let (a, b, c) = (l[j], l[j + 1], l[j + 2]);
        let mut swap = |k: usize| {
            let mut v = l.to_vec();
            v.swap(k, k + 1);
            out.push(Word::new(v));
        };
        // (y, z, x) -> (y, x, z) and back
        if c < a && a <= b {
            swap(j + 1);
        }
        if b < a && a <= c {
            swap(j + 1);
        }
        // (x, z, y) -> (z, x, y) and back
        if a <= c && c < b {
            swap(j);
        }
        if b <= c && c < a {
            swap(j);
        }
    }
    out
}
