//! Kashiwara operators on words and tableaux by the signature rule, tensor
//! products, and the anti-isomorphisms S and S^π.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::plactic::rectify;
use crate::shapes::Shape;
use crate::tableaux::{Letter, Tableau, WeightVector, Word};

/// Survivors of the bracket cancellation for one index i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub eps: usize,
    pub phi: usize,
    /// Position e_i acts on (leftmost surviving +).
    pub raise_at: Option<usize>,
    /// Position f_i acts on (rightmost surviving −).
    pub lower_at: Option<usize>,
}

fn sign(l: Letter, i: usize) -> i8 {
    match (l.is_barred(), l.value()) {
        (false, v) if v == i => -1,
        (false, v) if v == i + 1 => 1,
        (true, v) if v == i + 1 => -1,
        (true, v) if v == i => 1,
        _ => 0,
    }
}

pub fn signature(letters: &[Letter], i: usize) -> Signature {
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (k, &l) in letters.iter().enumerate() {
        match sign(l, i) {
            1 => plus.push(k),
            -1 if plus.pop().is_none() => {
                minus.push(k);
            }
            _ => {}
        }
    }
    Signature {
        eps: plus.len(),
        phi: minus.len(),
        raise_at: plus.first().copied(),
        lower_at: minus.last().copied(),
    }
}

fn raised(l: Letter) -> Letter {
    if l.is_barred() {
        Letter::bar(l.value() + 1)
    } else {
        Letter::new(l.value() - 1)
    }
}

fn lowered(l: Letter) -> Letter {
    if l.is_barred() {
        Letter::bar(l.value() - 1)
    } else {
        Letter::new(l.value() + 1)
    }
}

/// Anything whose crystal structure is read off a word in the alphabet of
/// rank n: words, tensor products of words, and tableaux via the row word.
pub trait Crystal: Clone {
    fn rank(&self) -> usize;
    fn letters(&self) -> Vec<Letter>;
    /// The same element with the letter at reading position `pos` replaced.
    fn with_letter(&self, pos: usize, letter: Letter) -> Self;

    fn eps_phi(&self, i: usize) -> Result<(usize, usize)> {
        if i == 0 || i >= self.rank() {
            return Err(Error::IndexOutOfRange { i, n: self.rank() });
        }
        let s = signature(&self.letters(), i);
        Ok((s.eps, s.phi))
    }

    /// e_i. Panics when i is outside 1..n.
    fn raise(&self, i: usize) -> Option<Self> {
        assert!(i >= 1 && i < self.rank(), "crystal index {i} out of range");
        let w = self.letters();
        let k = signature(&w, i).raise_at?;
        Some(self.with_letter(k, raised(w[k])))
    }

    /// f_i. Panics when i is outside 1..n.
    fn lower(&self, i: usize) -> Option<Self> {
        assert!(i >= 1 && i < self.rank(), "crystal index {i} out of range");
        let w = self.letters();
        let k = signature(&w, i).lower_at?;
        Some(self.with_letter(k, lowered(w[k])))
    }

    fn weight(&self) -> WeightVector {
        let mut v = vec![0i64; self.rank()];
        for l in self.letters() {
            v[l.value() - 1] += if l.is_barred() { -1 } else { 1 };
        }
        WeightVector::new(v)
    }

    fn eps_vector(&self) -> Vec<usize> {
        let w = self.letters();
        (1..self.rank()).map(|i| signature(&w, i).eps).collect()
    }

    fn phi_vector(&self) -> Vec<usize> {
        let w = self.letters();
        (1..self.rank()).map(|i| signature(&w, i).phi).collect()
    }

    fn is_highest(&self) -> bool {
        self.eps_vector().iter().all(|&e| e == 0)
    }

    fn is_lowest(&self) -> bool {
        self.phi_vector().iter().all(|&p| p == 0)
    }
}

/// A pure tensor x_1 ⊗ … ⊗ x_k of words over the same alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalElement {
    segments: Vec<Word>,
    rank: usize,
}

impl CrystalElement {
    pub fn new(segments: Vec<Word>, rank: usize) -> Result<Self> {
        for (s, w) in segments.iter().enumerate() {
            if let Some(l) = w.iter().find(|l| l.value() == 0 || l.value() > rank) {
                return Err(Error::Alphabet {
                    letter: l.code(),
                    row: s + 1,
                    rank,
                });
            }
        }
        Ok(CrystalElement { segments, rank })
    }

    /// A single word as an element of B_n^{⊗k} (or its barred analogue).
    pub fn word(w: Word, rank: usize) -> Result<Self> {
        CrystalElement::new(vec![w], rank)
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        CrystalElement {
            segments: vec![t.row_word()],
            rank: t.rank(),
        }
    }

    pub fn segments(&self) -> &[Word] {
        &self.segments
    }

    /// The concatenated word.
    pub fn flat(&self) -> Word {
        Word::new(self.letters())
    }

    pub fn tensor(&self, other: &CrystalElement) -> Result<CrystalElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut segments = self.segments.clone();
        segments.extend(other.segments.iter().cloned());
        Ok(CrystalElement {
            segments,
            rank: self.rank,
        })
    }

    /// (segment, offset) of a position in the flat word.
    pub fn locate(&self, mut pos: usize) -> Option<(usize, usize)> {
        for (s, w) in self.segments.iter().enumerate() {
            if pos < w.len() {
                return Some((s, pos));
            }
            pos -= w.len();
        }
        None
    }
}

impl Crystal for CrystalElement {
    fn rank(&self) -> usize {
        self.rank
    }

    fn letters(&self) -> Vec<Letter> {
        self.segments
            .iter()
            .flat_map(|w| w.iter().copied())
            .collect()
    }

    fn with_letter(&self, pos: usize, letter: Letter) -> Self {
        let (s, k) = self.locate(pos).expect("position inside the word");
        let mut out = self.clone();
        let mut v = out.segments[s].letters().to_vec();
        v[k] = letter;
        out.segments[s] = Word::new(v);
        out
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

impl Crystal for Tableau {
    fn rank(&self) -> usize {
        Tableau::rank(self)
    }

    fn letters(&self) -> Vec<Letter> {
        self.row_word().into_letters()
    }

    fn with_letter(&self, pos: usize, letter: Letter) -> Self {
        let mut w = self.row_word().into_letters();
        w[pos] = letter;
        self.with_word(&w)
    }

    fn weight(&self) -> WeightVector {
        Tableau::weight(self)
    }
}

/// (ε, φ) of x ⊗ y from those of the factors.
pub fn tensor_rule(x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
    let (ex, px) = x;
    let (ey, py) = y;
    (ey + ex.saturating_sub(py), px + py.saturating_sub(ex))
}

/// φ of x_1 ⊗ … ⊗ x_k from per-factor (ε, φ), with the factor f acts on:
/// the first j maximizing Σ_{h≤j} φ_h − Σ_{h<j} ε_h.
pub fn k_fold_phi(stats: &[(usize, usize)]) -> (usize, Option<usize>) {
    let mut best: Option<(i64, usize)> = None;
    let (mut phis, mut epss) = (0i64, 0i64);
    for (j, &(e, p)) in stats.iter().enumerate() {
        phis += p as i64;
        let value = phis - epss;
        if best.is_none_or(|(b, _)| value > b) {
            best = Some((value, j));
        }
        epss += e as i64;
    }
    match best {
        Some((v, j)) => (v.max(0) as usize, (v > 0).then_some(j)),
        None => (0, None),
    }
}

/// ε of x_1 ⊗ … ⊗ x_k and the factor e acts on, scanning from the right.
pub fn k_fold_eps(stats: &[(usize, usize)]) -> (usize, Option<usize>) {
    let mirrored: Vec<(usize, usize)> = stats.iter().rev().map(|&(e, p)| (p, e)).collect();
    let (v, j) = k_fold_phi(&mirrored);
    (v, j.map(|j| stats.len() - 1 - j))
}

/// Every suffix has at least as many i's as (i+1)'s.
pub fn is_yamanouchi(w: &[Letter], n: usize) -> bool {
    let mut counts = vec![0usize; n + 2];
    for l in w.iter().rev() {
        let v = l.value();
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Every prefix has at least as many (i+1)'s as i's.
pub fn is_anti_yamanouchi(w: &[Letter], n: usize) -> bool {
    let mut counts = vec![0usize; n + 2];
    for l in w {
        let v = l.value();
        counts[v] += 1;
        if v < n && counts[v] > counts[v + 1] {
            return false;
        }
    }
    true
}

/// S^π: rotate by 180° and complement v ↦ n+1−v. Lands on the rotated shape.
pub fn rotate_complement(t: &Tableau) -> Result<Tableau> {
    let Shape::Skew(s) = t.shape() else {
        return Err(Error::IncompatibleShape("rotate_complement".into()));
    };
    if !t.is_unbarred() {
        return Err(Error::Barred);
    }
    let n = t.rank();
    let rows = t
        .rows()
        .iter()
        .rev()
        .map(|row| {
            row.iter()
                .rev()
                .map(|l| Letter::new(n + 1 - l.value()))
                .collect()
        })
        .collect();
    Ok(Tableau::unchecked(s.rotate().into(), rows))
}

/// S, Schützenberger's evacuation: rectify(S^π(T)).
pub fn evacuation(t: &Tableau) -> Result<Tableau> {
    match t.shape() {
        Shape::Skew(s) if s.is_straight() => rectify(&rotate_complement(t)?),
        _ => Err(Error::NotStraight),
    }
}

/// S(x_1 ⊗ … ⊗ x_k) = S(x_k) ⊗ … ⊗ S(x_1).
pub fn tensor_anti_iso(factors: &[Tableau]) -> Result<Vec<Tableau>> {
    factors.iter().rev().map(evacuation).collect()
}

/// Raises to the highest weight element, recording the indices applied.
pub fn raise_to_highest<C: Crystal>(x: &C) -> (C, Vec<usize>) {
    let mut cur = x.clone();
    let mut path = Vec::new();
    'outer: loop {
        for i in 1..cur.rank() {
            if let Some(y) = cur.raise(i) {
                cur = y;
                path.push(i);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

/// x and y sit at the same place of isomorphic connected components.
pub fn plactic_equivalent<C: Crystal, D: Crystal>(x: &C, y: &D) -> bool {
    if x.rank() != y.rank() {
        return false;
    }
    let (hx, path) = raise_to_highest(x);
    let (hy, _) = raise_to_highest(y);
    if hx.weight() != hy.weight() {
        return false;
    }
    let mut z = hy;
    for &i in path.iter().rev() {
        match z.lower(i) {
            Some(next) => z = next,
            None => return false,
        }
    }
    z.letters() == y.letters()
}

/// The connected component of `x`, in breadth-first order.
pub fn connected_component<C: Crystal + Eq + Hash>(x: &C) -> Vec<C> {
    let mut seen: HashSet<C> = HashSet::from([x.clone()]);
    let mut order = vec![x.clone()];
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for i in 1..y.rank() {
            for z in [y.raise(i), y.lower(i)].into_iter().flatten() {
                if seen.insert(z.clone()) {
                    order.push(z.clone());
                    queue.push_back(z);
                }
            }
        }
    }
    order
}

/// Crystal graph in DOT, with an edge x → f_i(x) labelled i.
pub fn to_dot<C: Crystal + Eq + Hash + fmt::Display>(elements: &[C]) -> String {
    let index: HashMap<&C, usize> = elements.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut out = String::from("digraph crystal {\n");
    for (k, x) in elements.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{k} [label=\"{}\"];",
            x.to_string().replace('"', "\\\"").replace('\n', "\\n")
        );
    }
    for (k, x) in elements.iter().enumerate() {
        for i in 1..x.rank() {
            if let Some(j) = x.lower(i).and_then(|y| index.get(&y).copied()) {
                let _ = writeln!(out, "  n{k} -> n{j} [label=\"{i}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}
