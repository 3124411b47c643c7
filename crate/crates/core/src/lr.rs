//! Companion tableaux and Littlewood-Richardson tableaux: the sets HC, LC, HL
//! and LL, the transposition bijection between LC and HL, and the ordinary,
//! orthogonal, symplectic and rational LR coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{evacuation, is_anti_yamanouchi, is_yamanouchi, Crystal, CrystalElement};
use crate::error::{Error, Result};
use crate::shapes::{contains, Partition, RationalShape, Shape, SkewShape};
use crate::tableaux::{
    enumerate_ssyt_of_weight, is_k_tableau, lowest_tableau, KTableauKind, Letter, Tableau,
    WeightVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    GL,
    O,
    Sp,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::GL => "GL",
            Variant::O => "O",
            Variant::Sp => "Sp",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Variant::GL),
            "o" => Ok(Variant::O),
            "sp" => Ok(Variant::Sp),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// A triple (λ, μ, ν) of polynomial shapes with a common ambient length n.
/// For `Sp` the ambient length is the alphabet size 2n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub variant: Variant,
}

impl LrQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition, variant: Variant) -> Result<Self> {
        let n = lambda.ambient();
        for p in [&mu, &nu] {
            if p.ambient() != n {
                return Err(Error::AmbientMismatch(n, p.ambient()));
            }
        }
        if variant == Variant::Sp && n % 2 == 1 {
            return Err(Error::IncompatibleShape(format!(
                "Sp with odd alphabet {n}"
            )));
        }
        Ok(LrQuery {
            lambda,
            mu,
            nu,
            variant,
        })
    }

    pub fn gl(lambda: &[usize], mu: &[usize], nu: &[usize]) -> Result<Self> {
        Self::with(lambda, mu, nu, Variant::GL)
    }

    pub fn with(lambda: &[usize], mu: &[usize], nu: &[usize], variant: Variant) -> Result<Self> {
        LrQuery::new(
            Partition::new(lambda.to_vec())?,
            Partition::new(mu.to_vec())?,
            Partition::new(nu.to_vec())?,
            variant,
        )
    }

    pub fn n(&self) -> usize {
        self.lambda.ambient()
    }

    fn k_kind(&self) -> Option<KTableauKind> {
        match self.variant {
            Variant::GL => None,
            Variant::O => Some(KTableauKind::O(self.n())),
            Variant::Sp => Some(KTableauKind::SpH(self.n() / 2)),
        }
    }

    fn require_gl(&self, what: &str) -> Result<()> {
        match self.variant {
            Variant::GL => Ok(()),
            v => Err(Error::IncompatibleShape(format!("{what} for variant {v}"))),
        }
    }

    /// wt of a companion tableau: w0(λ) − w0(μ).
    fn companion_weight(&self) -> WeightVector {
        WeightVector::from(&self.lambda)
            .w0()
            .sub(&WeightVector::from(&self.mu).w0())
    }

    fn rotated_skew(&self) -> Result<Shape> {
        Ok(SkewShape::new(self.lambda.clone(), self.mu.clone(), true)?.into())
    }

    fn straight_skew(&self) -> Result<Shape> {
        Ok(SkewShape::new(self.lambda.clone(), self.mu.clone(), false)?.into())
    }

    fn contained(&self) -> Result<bool> {
        contains(&self.lambda, &self.mu)
    }
}

/// φ_{n−j}(T) ≤ m_j − m_{j+1} for every j, where m is the dominant weight
/// of the left factor.
fn phi_bounded(t: &Tableau, m: &[i64]) -> bool {
    let n = m.len();
    let phi = t.phi_vector();
    (1..n).all(|j| phi[n - j - 1] as i64 <= m[j - 1] - m[j])
}

/// ε_i(T) ≤ μ_i − μ_{i+1} for every i.
fn eps_bounded(t: &Tableau, mu: &[i64]) -> bool {
    let eps = t.eps_vector();
    (1..mu.len()).all(|i| eps[i - 1] as i64 <= mu[i - 1] - mu[i])
}

/// LC^λ_{μν}: T ∈ B^ν with L^μ ⊗ T ≡ L^λ, restricted to K-tableaux for the
/// O and Sp variants.
pub fn lowest_companions(q: &LrQuery) -> Result<Vec<Tableau>> {
    let nu: Shape = q.nu.clone().into();
    let m = q.mu.as_i64();
    let mut out = Vec::new();
    for t in enumerate_ssyt_of_weight(&nu, &q.companion_weight()) {
        if !phi_bounded(&t, &m) {
            continue;
        }
        if let Some(kind) = q.k_kind() {
            if !is_k_tableau(&t, kind)? {
                continue;
            }
        }
        out.push(t);
    }
    Ok(out)
}

/// The same set as [`lowest_companions`] (GL), decided by building L^μ ⊗ T
/// and testing lowest-ness of the tensor word directly.
pub fn lowest_companions_by_word(q: &LrQuery) -> Result<Vec<Tableau>> {
    q.require_gl("tensor test")?;
    let low = CrystalElement::from_tableau(&lowest_tableau(&q.mu.clone().into())?);
    let target = WeightVector::from(&q.lambda).w0();
    let mut out = Vec::new();
    for t in crate::tableaux::enumerate_ssyt(&q.nu.clone().into()) {
        let x = low.tensor(&CrystalElement::from_tableau(&t))?;
        if x.weight() == target && is_anti_yamanouchi(&x.letters(), q.n()) {
            out.push(t);
        }
    }
    Ok(out)
}

fn highest_companions_on(q: &LrQuery, nu: Shape) -> Result<Vec<Tableau>> {
    q.require_gl("highest companions")?;
    let mu = q.mu.as_i64();
    let wt = WeightVector::from(&q.lambda).sub(&WeightVector::from(&q.mu));
    Ok(enumerate_ssyt_of_weight(&nu, &wt)
        .into_iter()
        .filter(|t| eps_bounded(t, &mu))
        .collect())
}

/// HC^λ_{νμ}: T ∈ B^ν with T ⊗ H^μ ≡ H^λ.
pub fn highest_companions(q: &LrQuery) -> Result<Vec<Tableau>> {
    highest_companions_on(q, q.nu.clone().into())
}

/// HC^λ_{ν^π μ}: the same on the rotated shape ν^π.
pub fn highest_companions_rotated(q: &LrQuery) -> Result<Vec<Tableau>> {
    highest_companions_on(q, SkewShape::rotated(q.nu.clone()).into())
}

/// Boxes highlighted for the variant: the first (Sp) or first two (O)
/// occurrences of each value, reading w(T) right to left.
pub fn highlighted_cells(t: &Tableau, variant: Variant) -> Vec<(usize, usize)> {
    let keep = match variant {
        Variant::GL => return Vec::new(),
        Variant::O => 2,
        Variant::Sp => 1,
    };
    let mut seen = vec![0usize; t.rank() + 1];
    let mut out = Vec::new();
    for (r, c) in t.reading_cells().into_iter().rev() {
        let v = t.get(r, c).expect("cell in shape").value();
        seen[v] += 1;
        if seen[v] <= keep {
            out.push((r, c));
        }
    }
    out
}

/// Counting condition on highlighted boxes: at most i in the top i rows (O),
/// at most i in the top 2i rows (Sp).
pub fn highlight_condition(t: &Tableau, variant: Variant) -> bool {
    let cells = highlighted_cells(t, variant);
    let in_top = |rows: usize| cells.iter().filter(|(r, _)| *r < rows).count();
    let n = t.rank();
    match variant {
        Variant::GL => true,
        Variant::O => (1..=n).all(|i| in_top(i) <= i),
        Variant::Sp => (1..=n / 2).all(|i| in_top(2 * i) <= i),
    }
}

fn lr_on(shape: Shape, weight: &WeightVector, yamanouchi: bool) -> Vec<Tableau> {
    let n = shape.rank();
    enumerate_ssyt_of_weight(&shape, weight)
        .into_iter()
        .filter(|t| {
            let w = t.row_word();
            if yamanouchi {
                is_yamanouchi(&w, n)
            } else {
                is_anti_yamanouchi(&w, n)
            }
        })
        .collect()
}

/// HL^{λ^π}_{μ^π ν}: tableaux on λ^π/μ^π of weight ν with a Yamanouchi
/// row word, filtered by the highlighted-box condition for O and Sp.
pub fn hl_tableaux(q: &LrQuery) -> Result<Vec<Tableau>> {
    if !q.contained()? {
        return Ok(Vec::new());
    }
    let all = lr_on(q.rotated_skew()?, &WeightVector::from(&q.nu), true);
    Ok(all
        .into_iter()
        .filter(|t| highlight_condition(t, q.variant))
        .collect())
}

/// HL^λ_{μν}: classical LR tableaux on λ/μ.
pub fn hl_straight(q: &LrQuery) -> Result<Vec<Tableau>> {
    q.require_gl("LR tableaux on λ/μ")?;
    if !q.contained()? {
        return Ok(Vec::new());
    }
    Ok(lr_on(q.straight_skew()?, &WeightVector::from(&q.nu), true))
}

/// LL^λ_{μν}: tableaux on λ/μ of weight w0(ν) with an anti-Yamanouchi word.
pub fn lowest_lr(q: &LrQuery) -> Result<Vec<Tableau>> {
    q.require_gl("lowest LR tableaux")?;
    if !q.contained()? {
        return Ok(Vec::new());
    }
    Ok(lr_on(
        q.straight_skew()?,
        &WeightVector::from(&q.nu).w0(),
        false,
    ))
}

/// LL^{λ^π}_{μ^π ν}: the same on λ^π/μ^π.
pub fn lowest_lr_rotated(q: &LrQuery) -> Result<Vec<Tableau>> {
    q.require_gl("lowest LR tableaux")?;
    if !q.contained()? {
        return Ok(Vec::new());
    }
    Ok(lr_on(
        q.rotated_skew()?,
        &WeightVector::from(&q.nu).w0(),
        false,
    ))
}

/// c^λ_{μν}, or its O_n / Sp_2n modification.
pub fn lr_coefficient(q: &LrQuery) -> Result<usize> {
    let lc = lowest_companions(q)?;
    debug_assert_eq!(lc.len(), hl_tableaux(q)?.len(), "|LC| = |HL| for {q:?}");
    Ok(lc.len())
}

/// An entry i in row j becomes an entry j in row i; rows are then sorted.
fn transpose_entries(t: &Tableau, rows: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new(); rows];
    for (j, row) in t.rows().iter().enumerate() {
        for l in row {
            out[l.value() - 1].push(Letter::new(j + 1));
        }
    }
    for r in out.iter_mut() {
        r.sort();
    }
    out
}

/// φ: LC^λ_{μν} → HL^{λ^π}_{μ^π ν}.
pub fn companion_to_lr(t: &Tableau, q: &LrQuery) -> Result<Tableau> {
    let nu: Shape = q.nu.clone().into();
    if t.shape() != &nu || !phi_bounded(t, &q.mu.as_i64()) || t.weight() != q.companion_weight() {
        return Err(Error::NotCompanion);
    }
    Tableau::new(q.rotated_skew()?, transpose_entries(t, q.n()))
}

/// φ⁻¹: HL^{λ^π}_{μ^π ν} → LC^λ_{μν}, the same transposition read back.
pub fn lr_to_companion(t: &Tableau, q: &LrQuery) -> Result<Tableau> {
    if t.shape() != &q.rotated_skew()? || t.weight() != WeightVector::from(&q.nu) {
        return Err(Error::NotCompanion);
    }
    Tableau::new(q.nu.clone().into(), transpose_entries(t, q.n()))
}

/// S: HC^λ_{νμ} → LC^λ_{μν}, applied elementwise.
pub fn evacuate_companions(hc: &[Tableau]) -> Result<Vec<Tableau>> {
    hc.iter().map(evacuation).collect()
}

fn check_rank(shapes: [&RationalShape; 3]) -> Result<usize> {
    let n = shapes[0].rank();
    for s in &shapes[1..] {
        if s.rank() != n {
            return Err(Error::RankMismatch(n, s.rank()));
        }
    }
    Ok(n)
}

/// LC^λ_{μν}(GL_n) for rational shapes, on the staircase crystal B^ν.
pub fn rational_lowest_companions(
    lambda: &RationalShape,
    mu: &RationalShape,
    nu: &RationalShape,
) -> Result<Vec<Tableau>> {
    check_rank([lambda, mu, nu])?;
    let m = mu.staircase();
    let wt = WeightVector::new(lambda.staircase())
        .w0()
        .sub(&WeightVector::new(m.clone()).w0());
    let shape: Shape = nu.clone().into();
    Ok(enumerate_ssyt_of_weight(&shape, &wt)
        .into_iter()
        .filter(|t| phi_bounded(t, &m))
        .collect())
}

/// c^λ_{μν} for rational shapes.
pub fn rational_lr(
    lambda: &RationalShape,
    mu: &RationalShape,
    nu: &RationalShape,
) -> Result<usize> {
    Ok(rational_lowest_companions(lambda, mu, nu)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_ssyt;

    #[test]
    fn worked_companion_example() {
        let q = LrQuery::gl(&[4, 4, 2, 1, 0], &[3, 1, 0, 0, 0], &[4, 2, 1, 0, 0]).unwrap();
        let lc = lowest_companions(&q).unwrap();
        let t = Tableau::from_rows(&[&[2, 3, 4, 4], &[3, 5], &[4]], 5).unwrap();
        assert!(lc.contains(&t));
        let lr = companion_to_lr(&t, &q).unwrap();
        assert!(hl_tableaux(&q).unwrap().contains(&lr));
        assert_eq!(lr_to_companion(&lr, &q).unwrap(), t);
        assert_eq!(lc.len(), hl_tableaux(&q).unwrap().len());
        assert_eq!(lc, lowest_companions_by_word(&q).unwrap());
    }

    #[test]
    fn trivial_queries() {
        let q = LrQuery::gl(&[3, 1, 0], &[3, 1, 0], &[0, 0, 0]).unwrap();
        assert_eq!(lowest_companions(&q).unwrap(), vec![Tableau::empty(3)]);
        assert_eq!(hl_tableaux(&q).unwrap().len(), 1);
        let q = LrQuery::gl(&[3, 1, 0], &[0, 0, 0], &[3, 1, 0]).unwrap();
        assert_eq!(lr_coefficient(&q).unwrap(), 1);
        let e = Tableau::empty(3);
        let q = LrQuery::gl(&[0; 3], &[0; 3], &[0; 3]).unwrap();
        assert_eq!(companion_to_lr(&e, &q).unwrap().size(), 0);
    }

    #[test]
    fn classical_coefficients() {
        assert_eq!(
            lr_coefficient(&LrQuery::gl(&[2, 2], &[2, 0], &[2, 0]).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            lr_coefficient(&LrQuery::gl(&[3, 2, 1], &[2, 1, 0], &[2, 1, 0]).unwrap()).unwrap(),
            2
        );
        let q = LrQuery::gl(&[3, 2, 1], &[2, 1, 0], &[2, 1, 0]).unwrap();
        for f in [
            highest_companions,
            highest_companions_rotated,
            hl_straight,
            lowest_lr,
            lowest_lr_rotated,
        ] {
            assert_eq!(f(&q).unwrap().len(), 2);
        }
    }

    #[test]
    fn orthogonal_examples() {
        let o4 = LrQuery::with(&[7, 3, 3, 3], &[2, 2, 2, 0], &[5, 3, 1, 1], Variant::O).unwrap();
        assert!(lowest_companions(&o4).unwrap().is_empty());
        assert!(hl_tableaux(&o4).unwrap().is_empty());
        let gl4 = LrQuery::with(&[7, 3, 3, 3], &[2, 2, 2, 0], &[5, 3, 1, 1], Variant::GL).unwrap();
        assert_eq!(hl_tableaux(&gl4).unwrap().len(), 1);
        let o6 = LrQuery::with(
            &[7, 3, 3, 3, 0, 0],
            &[2, 2, 2, 0, 0, 0],
            &[5, 3, 1, 1, 0, 0],
            Variant::O,
        )
        .unwrap();
        assert_eq!(hl_tableaux(&o6).unwrap().len(), 1);
        assert_eq!(lr_coefficient(&o6).unwrap(), 1);
        let o5 = LrQuery::with(
            &[7, 3, 3, 3, 0],
            &[2, 2, 2, 0, 0],
            &[5, 3, 1, 1, 0],
            Variant::O,
        )
        .unwrap();
        assert_eq!(lr_coefficient(&o5).unwrap(), 0);
    }

    #[test]
    fn symplectic_example() {
        let sp4 = LrQuery::with(&[5, 4, 3, 2], &[2, 2, 1, 1], &[4, 3, 1, 0], Variant::Sp).unwrap();
        assert!(hl_tableaux(&sp4).unwrap().is_empty());
        assert!(lowest_companions(&sp4).unwrap().is_empty());
        let sp6 = LrQuery::with(
            &[5, 4, 3, 2, 0, 0],
            &[2, 2, 1, 1, 0, 0],
            &[4, 3, 1, 0, 0, 0],
            Variant::Sp,
        )
        .unwrap();
        assert_eq!(
            hl_tableaux(&sp6).unwrap().len(),
            lowest_companions(&sp6).unwrap().len()
        );
        assert!(!hl_tableaux(&sp6).unwrap().is_empty());
        assert!(LrQuery::with(&[1, 0, 0], &[0; 3], &[1, 0, 0], Variant::Sp).is_err());
    }

    #[test]
    fn evacuation_carries_hc_to_lc() {
        let q = LrQuery::gl(&[3, 2, 1], &[2, 1, 0], &[2, 1, 0]).unwrap();
        let mut s = evacuate_companions(&highest_companions(&q).unwrap()).unwrap();
        s.sort_by_key(|t| t.sort_key());
        assert_eq!(s, lowest_companions(&q).unwrap());
    }

    #[test]
    fn rational_examples() {
        let triv: RationalShape = "0,0,0|0,0,0@3".parse().unwrap();
        let lam: RationalShape = "2,1,0|0,0,0@3".parse().unwrap();
        assert_eq!(rational_lr(&lam, &lam, &triv).unwrap(), 1);
        let adj: RationalShape = "1,0,0|1,0,0@3".parse().unwrap();
        assert_eq!(enumerate_ssyt(&adj.clone().into()).len(), 8);
        // The adjoint appears once in V ⊗ V* via c^{adj}_{(1),(1)*}.
        let v: RationalShape = "1,0,0|0,0,0@3".parse().unwrap();
        assert_eq!(rational_lr(&adj, &v, &v.dual()).unwrap(), 1);
        assert_eq!(rational_lr(&triv, &v, &v.dual()).unwrap(), 1);
    }
}
