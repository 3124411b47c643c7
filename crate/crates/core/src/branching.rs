//! Restriction of polynomial GL representations to O_n and Sp_2n, the
//! GL_n × GL_n → GL_n rule, and the Jang-Kwon predicates.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, rational_lr, LrQuery, Variant};
use crate::shapes::{enumerate_partitions, Monoid, Partition, RationalShape, Shape};
use crate::tableaux::{Pair, Tableau};

/// (ambient length, monoid of μ, LR variant) for a restriction pair.
fn setup(pair: Pair) -> Result<(usize, Monoid, Variant)> {
    match pair {
        Pair::O(n) => Ok((n, Monoid::EvenRows, Variant::O)),
        Pair::Sp(n) => Ok((2 * n, Monoid::EvenColumns, Variant::Sp)),
        Pair::GL(_) => Err(Error::IncompatibleShape(
            "use branch_gl2_to_gl for the GL pair".into(),
        )),
    }
}

fn normalized_label(nu: &Partition, pair: Pair) -> Result<Partition> {
    let shape = pair.normalize(&Shape::from(nu.clone()))?;
    Ok(shape.straight_partition().expect("straight label").clone())
}

fn sum_over_mu(lambda: &Partition, nu: &Partition, pair: Pair, variant: Variant) -> Result<usize> {
    let (n, monoid, _) = setup(pair)?;
    let lambda = lambda.with_ambient(n)?;
    let Some(k) = lambda.size().checked_sub(nu.size()) else {
        return Ok(0);
    };
    let mut total = 0;
    for mu in enumerate_partitions(k, n, monoid, Some(&lambda)) {
        total += lr_coefficient(&LrQuery::new(lambda.clone(), mu, nu.clone(), variant)?)?;
    }
    Ok(total)
}

/// mult(π^ν_K, π^λ_GL) = Σ_{μ ∈ Q} c^λ_{μν}(K).
pub fn branch_multiplicity(lambda: &Partition, nu: &Partition, pair: Pair) -> Result<usize> {
    let (_, _, variant) = setup(pair)?;
    let nu = normalized_label(nu, pair)?;
    sum_over_mu(lambda, &nu, pair, variant)
}

/// The full restriction of π^λ_GL to K as ν ↦ multiplicity.
pub fn branch_decompose(lambda: &Partition, pair: Pair) -> Result<BTreeMap<Partition, usize>> {
    let (n, monoid, variant) = setup(pair)?;
    let lambda = lambda.with_ambient(n)?;
    let mut out = BTreeMap::new();
    for size in 0..=lambda.size() {
        for mu in enumerate_partitions(size, n, monoid, Some(&lambda)) {
            let k = lambda.size() - size;
            for nu in enumerate_partitions(k, n, Monoid::All, Some(&lambda)) {
                if !pair.contains_label(&Shape::from(nu.clone())) {
                    continue;
                }
                let c = lr_coefficient(&LrQuery::new(
                    lambda.clone(),
                    mu.clone(),
                    nu.clone(),
                    variant,
                )?)?;
                if c > 0 {
                    *out.entry(nu).or_insert(0) += c;
                }
            }
        }
    }
    Ok(out)
}

/// b^{[λ1,λ2]}_ν = |LC^ν_{λ1 λ2}(GL_n)|.
pub fn branch_gl2_to_gl(
    lambda1: &RationalShape,
    lambda2: &RationalShape,
    nu: &RationalShape,
) -> Result<usize> {
    rational_lr(nu, lambda1, lambda2)
}

/// The classical Littlewood restriction sum Σ_μ c^λ_{μν} with unmodified
/// coefficients. Only valid for ℓ(λ) ≤ n/2 (O_n) or ℓ(λ) ≤ n (Sp_2n).
pub fn stable_littlewood(lambda: &Partition, nu: &Partition, pair: Pair) -> Result<usize> {
    let stable = match pair {
        Pair::O(n) => 2 * lambda.length() <= n,
        Pair::Sp(n) => lambda.length() <= n,
        Pair::GL(_) => false,
    };
    if !stable {
        return Err(Error::Unstable(format!("l({lambda}) too large for {pair}")));
    }
    let nu = normalized_label(nu, pair)?;
    sum_over_mu(lambda, &nu, pair, Variant::GL)
}

fn columns(t: &Tableau, cols: [usize; 2]) -> (Vec<usize>, Vec<usize>) {
    let vals = |c| t.column(c).iter().map(|l| l.value()).collect();
    (vals(cols[0]), vals(cols[1]))
}

/// Rotated Jang-Kwon tableau on a straight shape: τ_j ≥ n_j, where n_j is
/// the j-th smallest element of {j+1..n} minus {σ_{j+1}, ...}.
pub fn is_rjk(t: &Tableau, n: usize) -> Result<bool> {
    if !t.shape().is_straight() || t.rank() != n {
        return Err(Error::IncompatibleShape(format!(
            "RJK needs a straight shape of rank {n}"
        )));
    }
    let (sigma, tau) = columns(t, [0, 1]);
    for (j0, &tj) in tau.iter().enumerate() {
        let j = j0 + 1;
        let below = &sigma[j.min(sigma.len())..];
        let nj = (j + 1..=n).filter(|v| !below.contains(v)).nth(j - 1);
        match nj {
            Some(nj) if tj >= nj => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Jang-Kwon tableau on a rotated shape ν^π: at most i entries ≥ n+1−i in
/// the right two columns, for every i.
pub fn is_jk(t: &Tableau, n: usize) -> Result<bool> {
    let Shape::Skew(s) = t.shape() else {
        return Err(Error::IncompatibleShape("JK needs a rotated shape".into()));
    };
    if !s.is_rotated() || !s.inner().is_zero() || t.rank() != n {
        return Err(Error::IncompatibleShape(format!(
            "JK needs a rotated straight shape of rank {n}"
        )));
    }
    let w = s.outer().first();
    let mut vals: Vec<usize> = Vec::new();
    for c in w.saturating_sub(2)..w {
        vals.extend(t.column(c).iter().map(|l| l.value()));
    }
    Ok((1..=n).all(|i| vals.iter().filter(|&&v| v + i > n).count() <= i))
}
