//! Graded multiplicities m^{ν,0}(q) of K-types in the harmonics: the d(T)
//! statistic, μ_min and λ_min, the series identity against the branching
//! rules, and the O₄ / SO₄ tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{PrimInt, Signed};
use serde::{Deserialize, Serialize};

use crate::branching::{branch_gl2_to_gl, branch_multiplicity};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::shapes::{
    enumerate_partitions, in_monoid, monoid_degree, Partition, RationalShape, Shape,
};
use crate::tableaux::{
    enumerate_ssyt, is_k_tableau, m_weight, zero_weight_tableaux, Pair, Tableau, WeightVector,
};

/// A polynomial in q with integer coefficients, stored densely by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedPoly<C> {
    coeffs: Vec<C>,
}

impl<C: PrimInt + Signed> GradedPoly<C> {
    pub fn zero() -> Self {
        GradedPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn monomial(degree: usize, c: C) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        GradedPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        GradedPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> C {
        self.coeffs.get(d).copied().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add_term(&mut self, degree: usize, c: C) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, C::zero());
        }
        self.coeffs[degree] = self.coeffs[degree] + c;
        *self = GradedPoly::from_coeffs(std::mem::take(&mut self.coeffs));
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        GradedPoly::from_coeffs((0..len).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        GradedPoly::from_coeffs(out)
    }

    /// Drops all terms of degree > `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        GradedPoly::from_coeffs(self.coeffs.iter().take(max_degree + 1).copied().collect())
    }

    /// Value at q = 1.
    pub fn eval_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |a, &b| a + b)
    }

    /// Palindromic after dividing out the lowest power of q.
    pub fn is_palindromic(&self) -> bool {
        match self.min_degree() {
            None => true,
            Some(lo) => {
                let body = &self.coeffs[lo..];
                body.iter().eq(body.iter().rev())
            }
        }
    }

    /// ∏_{i=1}^{n} (1 − q^i).
    pub fn euler_product(n: usize) -> Self {
        (1..=n).fold(Self::one(), |acc, i| {
            let mut f = Self::one();
            f.add_term(i, -C::one());
            acc.mul(&f)
        })
    }

    pub fn convert<D: PrimInt + Signed>(&self) -> Option<GradedPoly<D>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| D::from(*c))
            .collect::<Option<Vec<D>>>()?;
        Some(GradedPoly::from_coeffs(coeffs))
    }
}

impl<C: PrimInt + Signed + fmt::Display> fmt::Display for GradedPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = a.is_one();
            match d {
                0 => write!(f, "{a}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{a}q")?,
                _ if unit => write!(f, "q^{d}")?,
                _ => write!(f, "{a}q^{d}")?,
            }
        }
        Ok(())
    }
}

impl<C: PrimInt + Signed + FromStr> FromStr for GradedPoly<C> {
    type Err = Error;
    /// Parses the printed form, e.g. `q^2 + q^3 + 2q^4` or `1 - q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Self::zero();
        let mut terms = Vec::new();
        let mut start = 0;
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 {
                terms.push(&compact[start..k]);
                start = k;
            }
        }
        terms.push(&compact[start..]);
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, deg) = match body.split_once('q') {
                None => (body, 0),
                Some((c, rest)) => {
                    let deg = match rest.strip_prefix('^') {
                        Some(e) => e.parse::<usize>().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, deg)
                }
            };
            let mut c = if coef.is_empty() {
                C::one()
            } else {
                coef.parse::<C>().map_err(|_| bad())?
            };
            if neg {
                c = -c;
            }
            out.add_term(deg, c);
        }
        Ok(out)
    }
}

fn gamma(k: usize, n: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(i < k)).collect()
}

fn check_zero_weight(t: &Tableau, pair: Pair) -> Result<()> {
    if !m_weight(t, pair)?.is_zero() {
        return Err(Error::NonzeroMWeight);
    }
    Ok(())
}

fn round_up_even(x: usize) -> usize {
    x + x % 2
}

/// For the symplectic pair the odd-index φ must vanish on zero-weight tableaux.
fn symplectic_phi(t: &Tableau) -> Result<Vec<usize>> {
    let phi = t.phi_vector();
    if let Some(i) = (1..=phi.len()).step_by(2).find(|&i| phi[i - 1] != 0) {
        return Err(Error::OddPhi(i));
    }
    Ok(phi)
}

/// d(T) for T ∈ (T^ν_K)₀.
pub fn d_statistic(t: &Tableau, pair: Pair) -> Result<usize> {
    check_zero_weight(t, pair)?;
    let nu = t.size();
    match pair {
        Pair::O(n) => {
            let phi = t.phi_vector();
            let s: usize = (1..n).map(|i| (n - i) * round_up_even(phi[i - 1])).sum();
            assert!((nu + s).is_multiple_of(2), "half-integral degree");
            Ok((nu + s) / 2)
        }
        Pair::GL(n) => {
            let phi = t.phi_vector();
            Ok((1..n).map(|i| (n - i) * phi[i - 1]).sum())
        }
        Pair::Sp(n) => {
            let phi = symplectic_phi(t)?;
            let s: usize = (1..n).map(|i| (2 * n - 2 * i) * phi[2 * i - 1]).sum();
            assert!((nu + s).is_multiple_of(2), "half-integral degree");
            Ok((nu + s) / 2)
        }
    }
}

/// μ_min(T), the least μ ∈ Q whose lowest weight dominates φ(T)*.
pub fn mu_min(t: &Tableau, pair: Pair) -> Result<Partition> {
    check_zero_weight(t, pair)?;
    let a = pair.alphabet();
    let mut mu = vec![0i64; a];
    let mut add = |coef: usize, k: usize| {
        for (m, g) in mu.iter_mut().zip(gamma(k, a)) {
            *m += coef as i64 * g;
        }
    };
    match pair {
        Pair::O(n) => {
            let phi = t.phi_vector();
            (1..n).for_each(|i| add(round_up_even(phi[i - 1]), n - i));
        }
        Pair::GL(n) => {
            let phi = t.phi_vector();
            (1..n).for_each(|i| add(phi[i - 1], n - i));
        }
        Pair::Sp(n) => {
            let phi = symplectic_phi(t)?;
            (1..n).for_each(|i| add(phi[2 * i - 1], 2 * n - 2 * i));
        }
    }
    Partition::new(mu.into_iter().map(|x| x as usize).collect())
}

/// λ_min(T) = μ_min(T) + w0(wt T).
pub fn lambda_min(t: &Tableau, pair: Pair) -> Result<Partition> {
    let mu = mu_min(t, pair)?;
    let lam = WeightVector::from(&mu).add(&t.weight().w0());
    let parts = lam
        .coeffs()
        .iter()
        .map(|&x| usize::try_from(x).map_err(|_| Error::NotPartition(vec![])));
    Partition::new(parts.collect::<Result<Vec<_>>>()?)
}

/// Degree of λ_min in the grading of C[p].
pub fn lambda_min_degree(t: &Tableau, pair: Pair) -> Result<usize> {
    let lam = lambda_min(t, pair)?;
    Ok(monoid_degree(&lam, pair.monoid()))
}

/// m^{ν,0}(q) = Σ_{T ∈ (T^ν_K)₀} q^{d(T)}.
pub fn graded_multiplicity(nu: &Shape, pair: Pair) -> Result<QPoly> {
    let mut out = QPoly::zero();
    for t in zero_weight_tableaux(nu, pair)? {
        out.add_term(d_statistic(&t, pair)?, 1);
    }
    Ok(out)
}

/// The K-type appearing in degree one of the harmonics.
pub fn degree_one_label(pair: Pair) -> Result<Shape> {
    let n = pair.n();
    let shape: Shape = match pair {
        Pair::GL(_) => {
            let mut plus = vec![0; n];
            let mut minus = vec![0; n];
            plus[0] = 1;
            minus[0] = 1;
            RationalShape::new(Partition::new(plus)?, Partition::new(minus)?)?.into()
        }
        Pair::O(_) => {
            let mut v = vec![0; n];
            v[0] = 2;
            Partition::new(v)?.into()
        }
        Pair::Sp(_) => {
            let mut v = vec![0; 2 * n];
            v[0] = 1;
            v[1] = 1;
            Partition::new(v)?.into()
        }
    };
    Ok(shape)
}

/// Graded multiplicity of the degree-one K-type.
pub fn degree_one_check(pair: Pair) -> Result<QPoly> {
    graded_multiplicity(&degree_one_label(pair)?, pair)
}

/// q + q² + ⋯ + q^{n−1}.
pub fn degree_one_expected(n: usize) -> QPoly {
    QPoly::from_coeffs((0..n).map(|d| i64::from(d > 0)).collect())
}

/// Σ_{λ ∈ Spec C[p], deg λ ≤ D} q^{deg λ} b^λ_ν, using the branching rules.
pub fn series_lhs(nu: &Shape, pair: Pair, max_degree: usize) -> Result<QPoly> {
    let nu = pair.normalize(nu)?;
    let mut out = QPoly::zero();
    let a = pair.alphabet();
    let scale = if matches!(pair, Pair::GL(_)) { 1 } else { 2 };
    for deg in 0..=max_degree {
        for lam in enumerate_partitions(scale * deg, a, pair.monoid(), None) {
            let b = match (&nu, pair) {
                (Shape::Staircase(nu), Pair::GL(_)) => {
                    let l = RationalShape::polynomial(lam.clone());
                    branch_gl2_to_gl(&l.dual(), &l, nu)?
                }
                (nu, _) => branch_multiplicity(
                    &lam,
                    nu.straight_partition().expect("straight label"),
                    pair,
                )?,
            };
            if b > 0 {
                out.add_term(deg, b as i64);
            }
        }
    }
    Ok(out)
}

/// The series identity truncated at degree D: the branching sum times
/// ∏(1 − q^i) agrees with m^{ν,0}(q) up to q^D.
pub fn series_identity_check(nu: &Shape, pair: Pair, max_degree: usize) -> Result<bool> {
    let lhs = series_lhs(nu, pair, max_degree)?
        .mul(&QPoly::euler_product(pair.n()))
        .truncate(max_degree);
    let rhs = graded_multiplicity(nu, pair)?.truncate(max_degree);
    Ok(lhs == rhs)
}

/// The pairs (μ, T) with T ∈ LC^{λ(μ,T)}_{μν}(K) and μ, λ(μ,T) ∈ Q, for μ up
/// to the given size, projected to T.
pub fn image_of_p(nu: &Shape, pair: Pair, max_mu: usize) -> Result<Vec<Tableau>> {
    let nu = pair.normalize(nu)?;
    let a = pair.alphabet();
    let monoid = pair.monoid();
    let kind = match pair {
        Pair::Sp(n) => crate::tableaux::KTableauKind::SpH(n),
        _ => pair.tableau_kind(),
    };
    let candidates: Vec<Tableau> = enumerate_ssyt(&nu)
        .into_iter()
        .filter(|t| is_k_tableau(t, kind).unwrap_or(false))
        .collect();
    let mut out = BTreeMap::new();
    for size in 0..=max_mu {
        for mu in enumerate_partitions(size, a, monoid, None) {
            let m = mu.as_i64();
            for t in &candidates {
                let phi = t.phi_vector();
                if !(1..a).all(|j| phi[a - j - 1] as i64 <= m[j - 1] - m[j]) {
                    continue;
                }
                let lam = WeightVector::from(&mu).add(&t.weight().w0());
                let in_q = match pair {
                    Pair::GL(_) => lam.coeffs() == m.as_slice(),
                    _ => {
                        let parts: Option<Vec<usize>> = lam
                            .coeffs()
                            .iter()
                            .map(|&x| usize::try_from(x).ok())
                            .collect();
                        parts
                            .and_then(|p| Partition::new(p).ok())
                            .is_some_and(|p| in_monoid(&p, monoid))
                    }
                };
                if in_q {
                    out.entry(t.row_word().codes()).or_insert_with(|| t.clone());
                }
            }
        }
    }
    Ok(out.into_values().collect())
}

/// A μ-size bound that reaches μ_min(T) for every T on ν.
pub fn image_search_bound(nu: &Shape, pair: Pair) -> usize {
    let a = pair.alphabet();
    (nu.size() + 1) * a * (a - 1) / 2
}

/// A table of optional graded multiplicities, indexed by row then column.
pub type PolyTable = Vec<Vec<Option<QPoly>>>;

/// The two intermediate O₄ tables: entry (i, j), i ≤ j, of the first is the
/// graded multiplicity of ν = (i+j, j−i, 0, 0); the second holds ν̄ = (2i,1,1,0)
/// on the diagonal for i ≥ 1.
pub fn o4_tables(rows: usize, cols: usize) -> Result<(PolyTable, PolyTable)> {
    let pair = Pair::O(4);
    let mut first = vec![vec![None; cols]; rows];
    let mut second = vec![vec![None; cols]; rows];
    for (i, row) in first.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().skip(i) {
            let nu = Partition::new(vec![i + j, j - i, 0, 0])?;
            *cell = Some(graded_multiplicity(&nu.into(), pair)?);
            if i == j && i > 0 {
                let bar = Partition::new(vec![2 * i, 1, 1, 0])?;
                second[i][i] = Some(graded_multiplicity(&bar.into(), pair)?);
            }
        }
    }
    Ok((first, second))
}

/// SO₄ graded multiplicities for highest weight 2iϖ₁ + 2jϖ₂: the first O₄
/// table reflected across the diagonal, with ν̄ added on the diagonal.
pub fn so4_table(rows: usize, cols: usize) -> Result<Vec<Vec<QPoly>>> {
    let m = rows.max(cols);
    let (first, _) = o4_tables(m, m)?;
    let pair = Pair::O(4);
    let mut out = vec![vec![QPoly::zero(); cols]; rows];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let (a, b) = (i.min(j), i.max(j));
            let mut v = first[a][b].clone().expect("upper triangle");
            if i == j {
                let bar = associated(&Partition::new(vec![2 * i, 0, 0, 0])?)?;
                v = v.add(&graded_multiplicity(&bar.into(), pair)?);
            }
            *cell = v;
        }
    }
    Ok(out)
}

/// ν̄ for O₄: the first column length ℓ becomes 4 − ℓ.
pub fn associated(nu: &Partition) -> Result<Partition> {
    let nu = nu.with_ambient(4)?;
    let l = nu.length();
    let new_len = 4 - l;
    let mut parts: Vec<usize> = (0..4)
        .map(|r| {
            let rest = nu.part(r).saturating_sub(1);
            rest + usize::from(r < new_len)
        })
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts)
}

pub type QPoly = GradedPoly<i64>;
pub type WidePoly = GradedPoly<i128>;
