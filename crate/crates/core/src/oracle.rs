//! Brute-force verifiers built only on shape and tableau enumeration: Schur
//! polynomials as monomial maps, Schur-basis decomposition, the Weyl
//! dimension formula, and the `verify_all` runner.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{PrimInt, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{enumerate_partitions, Monoid, Partition, RationalShape, Shape};
use crate::tableaux::{enumerate_ssyt, Pair, Tableau};

/// A polynomial in x₁, …, xₙ keyed by exponent vectors of length n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap<C> {
    n: usize,
    terms: BTreeMap<Vec<usize>, C>,
}

impl<C: PrimInt + Signed> MonomialMap<C> {
    pub fn zero(n: usize) -> Self {
        MonomialMap {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[usize]) -> C {
        self.terms.get(exp).copied().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exp: Vec<usize>, c: C) {
        assert_eq!(exp.len(), self.n, "exponent length");
        let e = self.terms.entry(exp).or_insert_with(C::zero);
        *e = *e + c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self, scale: C) -> Self {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c * scale);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count");
        let mut out = Self::zero(self.n);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb);
            }
        }
        out
    }

    /// f(1, …, 1).
    pub fn eval_ones(&self) -> C {
        self.terms.values().fold(C::zero(), |a, &b| a + b)
    }

    /// Invariance under every adjacent transposition of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, &c)| {
            (1..self.n).all(|i| {
                let mut s = e.clone();
                s.swap(i - 1, i);
                self.coeff(&s) == c
            })
        })
    }
}

impl<C: PrimInt + Signed + fmt::Display> fmt::Display for MonomialMap<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => f.write_str(&mono.join(""))?,
                (false, false) => write!(f, "{a}{}", mono.join(""))?,
            }
        }
        Ok(())
    }
}

/// s^λ_n as a sum of x^{wt T} over SSYT of shape λ in [n].
pub fn schur_polynomial<C: PrimInt + Signed>(
    lambda: &Partition,
    n: usize,
) -> Result<MonomialMap<C>> {
    let lambda = lambda.with_ambient(n)?;
    let mut out = MonomialMap::zero(n);
    for t in enumerate_ssyt(&lambda.into()) {
        let exp = (1..=n).map(|v| t.count(v)).collect();
        out.add_term(exp, C::one());
    }
    Ok(out)
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly peeling
/// off the lexicographically largest monomial.
pub fn decompose_into_schur<C: PrimInt + Signed>(
    f: &MonomialMap<C>,
) -> Result<BTreeMap<Partition, C>> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = f.n();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = rest.terms.last_key_value() {
        let lead = lead.clone();
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(lead));
        }
        let lambda = Partition::new(lead)?;
        rest = rest.add(&schur_polynomial(&lambda, n)?, -c);
        out.insert(lambda, c);
    }
    Ok(out)
}

/// ∏_{i<j} (λ_i − λ_j + j − i)/(j − i), evaluated in exact rationals.
pub fn weyl_dimension(lambda: &Partition, n: usize) -> Result<u128> {
    let l: Vec<i128> = lambda
        .with_ambient(n)?
        .parts()
        .iter()
        .map(|&x| x as i128)
        .collect();
    let mut d = Ratio::from_integer(1i128);
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i128;
            d *= Ratio::new(l[i] - l[j] + gap, gap);
        }
    }
    assert!(d.is_integer(), "non-integral dimension");
    Ok(d.to_integer() as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub level: Level,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

const MAX_FAILURES: usize = 10;

struct Suite {
    report: SuiteReport,
}

impl Suite {
    fn new(name: &str) -> Self {
        Suite {
            report: SuiteReport {
                name: name.into(),
                cases: 0,
                passed: true,
                failures: Vec::new(),
            },
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok {
            self.report.passed = false;
            if self.report.failures.len() < MAX_FAILURES {
                self.report.failures.push(describe());
            }
        }
    }

    fn error(&mut self, e: Error) {
        self.check(false, || format!("error: {e}"));
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

fn partitions_up_to(max: usize, n: usize) -> impl Iterator<Item = Partition> {
    (0..=max).flat_map(move |k| enumerate_partitions(k, n, Monoid::All, None))
}

/// c^λ_{μν} from every set-valued construction in `lr`, compared with the
/// Schur expansion of s_μ s_ν.
pub fn lr_oracle_suite(max_size: usize, max_n: usize) -> SuiteReport {
    use crate::lr::{
        highest_companions, highest_companions_rotated, hl_straight, hl_tableaux,
        lowest_companions, lowest_companions_by_word, lowest_lr, lowest_lr_rotated, LrQuery,
        Variant,
    };
    let mut suite = Suite::new("lr_vs_schur");
    for n in 1..=max_n {
        for mu in partitions_up_to(max_size, n) {
            for nu in partitions_up_to(max_size - mu.size(), n) {
                let product = match (
                    schur_polynomial::<i64>(&mu, n),
                    schur_polynomial::<i64>(&nu, n),
                ) {
                    (Ok(a), Ok(b)) => a.mul(&b),
                    (Err(e), _) | (_, Err(e)) => return fail_with(suite, e),
                };
                let expected = match decompose_into_schur(&product) {
                    Ok(d) => d,
                    Err(e) => return fail_with(suite, e),
                };
                for lambda in enumerate_partitions(mu.size() + nu.size(), n, Monoid::All, None) {
                    let want = expected.get(&lambda).copied().unwrap_or(0) as usize;
                    let q = match LrQuery::new(lambda.clone(), mu.clone(), nu.clone(), Variant::GL)
                    {
                        Ok(q) => q,
                        Err(e) => return fail_with(suite, e),
                    };
                    let sizes = [
                        lowest_companions(&q),
                        lowest_companions_by_word(&q),
                        highest_companions(&q),
                        highest_companions_rotated(&q),
                        hl_tableaux(&q),
                        hl_straight(&q),
                        lowest_lr(&q),
                        lowest_lr_rotated(&q),
                    ]
                    .map(|r| r.map(|v| v.len()));
                    match sizes.iter().cloned().collect::<Result<Vec<usize>>>() {
                        Ok(got) => suite.check(got.iter().all(|&c| c == want), || {
                            format!("c^{lambda}_{{{mu},{nu}}}: oracle {want}, LC/LCw/HC/HCpi/HLpi/HL/LL/LLpi {got:?}")
                        }),
                        Err(e) => suite.check(false, || format!("c^{lambda}_{{{mu},{nu}}}: {e}")),
                    }
                }
            }
        }
    }
    suite.finish()
}

fn fail_with(mut suite: Suite, e: Error) -> SuiteReport {
    suite.error(e);
    suite.finish()
}

/// s_λ(1, …, 1) = #SSYT = Weyl dimension.
pub fn dimension_suite(max_size: usize, max_n: usize) -> SuiteReport {
    let mut suite = Suite::new("schur_dimension");
    for n in 1..=max_n {
        for lambda in partitions_up_to(max_size, n) {
            let count = enumerate_ssyt(&lambda.clone().into()).len() as u128;
            match (
                schur_polynomial::<i64>(&lambda, n),
                weyl_dimension(&lambda, n),
            ) {
                (Ok(s), Ok(w)) => suite.check(s.eval_ones() as u128 == count && w == count, || {
                    format!("{lambda}: s(1) {}, #SSYT {count}, Weyl {w}", s.eval_ones())
                }),
                (Err(e), _) | (_, Err(e)) => suite.error(e),
            }
        }
    }
    suite.finish()
}

/// Σ_ν mult(ν) · dim_K(ν) = dim π^λ for GL_n ↓ O_n and GL_2n ↓ Sp_2n.
pub fn branching_dimension_suite(max_size: usize, max_o: usize, max_sp: usize) -> SuiteReport {
    use crate::branching::branch_decompose;
    use crate::tableaux::dim_k;
    let mut suite = Suite::new("branching_dimension");
    let pairs = (1..=max_o).map(Pair::O).chain((1..=max_sp).map(Pair::Sp));
    for pair in pairs {
        let a = pair.alphabet();
        for lambda in partitions_up_to(max_size, a) {
            let count = enumerate_ssyt(&lambda.clone().into()).len();
            let total: Result<usize> = branch_decompose(&lambda, pair).and_then(|d| {
                d.iter()
                    .map(|(nu, &m)| dim_k(&nu.clone().into(), pair).map(|k| m * k))
                    .sum()
            });
            match total {
                Ok(t) => suite.check(t == count, || {
                    format!("{lambda} to {pair}: sum {t}, dim {count}")
                }),
                Err(e) => suite.error(e),
            }
        }
    }
    suite.finish()
}

/// Every K-type label ν of the pair with |ν| ≤ max_size.
pub fn k_labels(pair: Pair, max_size: usize) -> Vec<Shape> {
    let a = pair.alphabet();
    match pair {
        Pair::GL(n) => {
            let mut out = Vec::new();
            for total in 0..=max_size {
                for k in 0..=total {
                    for plus in enumerate_partitions(k, n, Monoid::All, None) {
                        for minus in enumerate_partitions(total - k, n, Monoid::All, None) {
                            if plus.length() + minus.length() <= n {
                                if let Ok(r) = RationalShape::new(plus.clone(), minus) {
                                    out.push(r.into());
                                }
                            }
                        }
                    }
                }
            }
            out
        }
        _ => partitions_up_to(max_size, a)
            .map(Shape::from)
            .filter(|s| pair.contains_label(s))
            .collect(),
    }
}

/// The series identity relating branching multiplicities to m^{ν,0}(q).
pub fn series_suite(pairs: &[Pair], max_size: usize, max_degree: usize) -> SuiteReport {
    use crate::graded::series_identity_check;
    let mut suite = Suite::new("series_identity");
    for &pair in pairs {
        for nu in k_labels(pair, max_size) {
            match series_identity_check(&nu, pair, max_degree) {
                Ok(ok) => suite.check(ok, || format!("{nu} for {pair} at D={max_degree}")),
                Err(e) => suite.error(e),
            }
        }
    }
    suite.finish()
}

/// RJK tableaux coincide with O_n-tableaux.
pub fn rjk_suite(max_size: usize, max_n: usize) -> SuiteReport {
    use crate::branching::is_rjk;
    use crate::tableaux::{is_k_tableau, KTableauKind};
    let mut suite = Suite::new("rjk_equality");
    for n in 1..=max_n {
        for lambda in partitions_up_to(max_size, n) {
            for t in enumerate_ssyt(&lambda.into()) {
                match (is_rjk(&t, n), is_k_tableau(&t, KTableauKind::O(n))) {
                    (Ok(a), Ok(b)) => {
                        suite.check(a == b, || format!("{t}: RJK {a}, O-tableau {b}"))
                    }
                    (Err(e), _) | (_, Err(e)) => suite.error(e),
                }
            }
        }
    }
    suite.finish()
}

/// The three constructions of the plactic product agree.
pub fn product_suite(max_size: usize, max_n: usize) -> SuiteReport {
    use crate::plactic::{product, ProductMethod};
    let mut suite = Suite::new("product_agreement");
    for n in 1..=max_n {
        let tabs: Vec<Tableau> = partitions_up_to(max_size, n)
            .flat_map(|l| enumerate_ssyt(&l.into()))
            .collect();
        for t1 in &tabs {
            for t2 in tabs.iter().filter(|t| t.size() + t1.size() <= max_size) {
                let r = [
                    ProductMethod::ConcatWord,
                    ProductMethod::Insert,
                    ProductMethod::StarRect,
                ]
                .map(|m| product(t1, t2, m));
                match r {
                    [Ok(a), Ok(b), Ok(c)] => {
                        suite.check(a == b && b == c, || format!("{t1} · {t2}"))
                    }
                    _ => suite.check(false, || format!("{t1} · {t2}: construction failed")),
                }
            }
        }
    }
    suite.finish()
}

pub fn verify_all(level: Level) -> VerifyReport {
    let suites = match level {
        Level::Fast => vec![
            lr_oracle_suite(4, 3),
            dimension_suite(4, 3),
            branching_dimension_suite(4, 3, 1),
            series_suite(&[Pair::O(3), Pair::GL(2), Pair::Sp(2)], 2, 4),
            rjk_suite(4, 3),
            product_suite(3, 3),
        ],
        Level::Full => vec![
            lr_oracle_suite(6, 4),
            dimension_suite(6, 4),
            branching_dimension_suite(6, 4, 2),
            series_suite(
                &[
                    Pair::O(3),
                    Pair::O(4),
                    Pair::Sp(2),
                    Pair::GL(2),
                    Pair::GL(3),
                ],
                4,
                6,
            ),
            rjk_suite(6, 4),
            product_suite(4, 3),
        ],
    };
    VerifyReport {
        level,
        passed: suites.iter().all(|s| s.passed),
        suites,
    }
}
