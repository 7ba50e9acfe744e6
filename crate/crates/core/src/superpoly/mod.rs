//! Polynomials in commuting variables `x_1..x_N` and anticommuting variables
//! `θ_1..θ_N` with exact rational coefficients.
//!
//! Indices are 0-based in the API; text output is 1-based.

mod monomial;

pub use monomial::{Monomial, MAX_VARS};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use rayon::prelude::*;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    nvars: usize,
    terms: FxHashMap<Monomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        SuperPolynomial {
            nvars,
            terms: FxHashMap::default(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(), c);
        p
    }

    /// Checked constructor for a variable count.
    pub fn try_zero(nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables { got: nvars, max: MAX_VARS });
        }
        Ok(Self::zero(nvars))
    }

    pub fn x(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::monomial(nvars, Monomial::x(i, 1), Rational::one())
    }

    pub fn theta(nvars: usize, j: usize) -> Self {
        assert!(j < nvars);
        Self::monomial(nvars, Monomial::theta(j), Rational::one())
    }

    pub fn monomial(nvars: usize, mono: Monomial, c: Rational) -> Self {
        debug_assert!(mono.span() <= nvars);
        let mut p = Self::zero(nvars);
        p.add_term(mono, c);
        p
    }

    /// Builds a polynomial from `(θ indices in the written order, exponents,
    /// coefficient)` triples, folding reordering signs into the coefficients.
    pub fn from_terms<'a>(
        nvars: usize,
        terms: impl IntoIterator<Item = (&'a [usize], &'a [(usize, u32)], Rational)>,
    ) -> Result<Self> {
        let mut p = Self::try_zero(nvars)?;
        for (theta, exps, c) in terms {
            for &i in theta.iter().chain(exps.iter().map(|(i, _)| i)) {
                if i >= nvars {
                    return Err(Error::IndexOutOfRange { index: i, nvars });
                }
            }
            if let Some((odd, mono)) = Monomial::from_parts(theta, exps) {
                p.add_term(mono, if odd { -c } else { c });
            }
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SuperPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Distributive product; θ-products are normalised with the sign of the
    /// sorting permutation and vanish when an index repeats.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_filtered(other, |_| true)
    }

    /// Product keeping only the monomials accepted by `keep`.
    ///
    /// `keep` must be closed under division (if it rejects `m`, it rejects
    /// every multiple of `m`); inputs are pre-filtered with it, which makes the
    /// kept coefficients exact.
    pub fn multiply_filtered(&self, other: &Self, keep: impl Fn(&Monomial) -> bool) -> Result<Self> {
        self.check_nvars(other)?;
        let left: Vec<_> = self.terms.iter().filter(|(m, _)| keep(m)).collect();
        let right: Vec<_> = other.terms.iter().filter(|(m, _)| keep(m)).collect();
        let mut out = Self::zero(self.nvars);
        out.terms.reserve(left.len().max(right.len()));
        for (ma, ca) in &left {
            for (mb, cb) in &right {
                if let Some((odd, m)) = ma.mul(mb) {
                    if !keep(&m) {
                        continue;
                    }
                    let c = *ca * *cb;
                    out.add_term(m, if odd { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// [`multiply_filtered`](Self::multiply_filtered) spread over threads by
    /// chunks of `self`'s terms.
    pub fn par_multiply_filtered(&self, other: &Self, keep: impl Fn(&Monomial) -> bool + Sync) -> Result<Self> {
        self.check_nvars(other)?;
        let left: Vec<_> = self.terms.iter().filter(|(m, _)| keep(m)).collect();
        let right: Vec<_> = other.terms.iter().filter(|(m, _)| keep(m)).collect();
        let chunk = (left.len() / (4 * rayon::current_num_threads())).max(64);
        let partials: Vec<FxHashMap<Monomial, Rational>> = left
            .par_chunks(chunk)
            .map(|part| {
                let mut acc = Self::zero(self.nvars);
                for (ma, ca) in part {
                    for (mb, cb) in &right {
                        if let Some((odd, m)) = ma.mul(mb) {
                            if keep(&m) {
                                let c = *ca * *cb;
                                acc.add_term(m, if odd { -c } else { c });
                            }
                        }
                    }
                }
                acc.terms
            })
            .collect();
        let mut out = Self::zero(self.nvars);
        for part in partials {
            if out.terms.is_empty() {
                out.terms = part;
                continue;
            }
            for (m, c) in part {
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    /// Keeps the terms accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        SuperPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of total bosonic degree above `max_bosonic_degree`.
    pub fn truncate(&self, max_bosonic_degree: usize) -> Self {
        self.filter(|m| m.bosonic_degree() <= max_bosonic_degree)
    }

    /// `Σ_{k≥0} u^k` where every product is filtered by `keep`. Terminates when
    /// a power of `u` filters to zero, so `keep` must bound the degree or `u`
    /// must be nilpotent.
    pub fn geometric_series(u: &Self, keep: impl Fn(&Monomial) -> bool + Copy) -> Result<Self> {
        let mut sum = Self::one(u.nvars).filter(keep);
        let mut power = sum.clone();
        loop {
            power = power.multiply_filtered(u, keep)?;
            if power.is_zero() {
                return Ok(sum);
            }
            sum = sum.try_add(&power)?;
        }
    }

    /// `f^k` with products filtered by `keep`.
    pub fn pow_filtered(&self, k: usize, keep: impl Fn(&Monomial) -> bool + Copy) -> Result<Self> {
        let mut out = Self::one(self.nvars).filter(keep);
        for _ in 0..k {
            out = out.multiply_filtered(self, keep)?;
        }
        Ok(out)
    }

    /// Reverses the θ order in every term: multiplies a term of fermionic
    /// degree `m` by `(-1)^{m(m-1)/2}`.
    pub fn arrow(&self) -> Self {
        SuperPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let f = m.fermionic_degree();
                    let c = if arrow_negates(f) { -c.clone() } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Applies `K_σ`: variable `k` (of both kinds) becomes variable `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let (odd, pm) = m.permuted(perm);
            out.add_term(pm, if odd { -c.clone() } else { c.clone() });
        }
        out
    }

    /// `𝒦_{i,i+1}`: exchanges `x_i ↔ x_{i+1}` and `θ_i ↔ θ_{i+1}` (0-based `i`).
    pub fn apply_exchange(&self, i: usize) -> Result<Self> {
        if i + 1 >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                nvars: self.nvars,
            });
        }
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, i + 1);
        Ok(self.permute(&perm))
    }

    /// Invariance under every adjacent exchange.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.apply_exchange(i).expect("index in range") == *self)
    }

    /// `(n, m)` if every term has the same bosonic and fermionic degree. The
    /// zero polynomial has every bidegree and returns `None`.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut degrees = self.terms.keys().map(|m| (m.bosonic_degree(), m.fermionic_degree()));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The homogeneous component of bidegree `(n|m)`.
    pub fn component(&self, n: usize, m: usize) -> Self {
        self.filter(|mono| mono.bosonic_degree() == n && mono.fermionic_degree() == m)
    }

    /// Copies into a ring with `nvars` variables, shifting every index by
    /// `offset`. Relative θ order is kept, so no signs arise.
    pub fn embed(&self, nvars: usize, offset: usize) -> Result<Self> {
        let span = self.terms.keys().map(Monomial::span).max().unwrap_or(0);
        if span + offset > nvars {
            return Err(Error::IndexOutOfRange {
                index: span + offset - 1,
                nvars,
            });
        }
        let mut out = Self::try_zero(nvars)?;
        out.terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.shifted(offset), c.clone()))
            .collect();
        Ok(out)
    }

    /// Multiplies each term by `weight(monomial)`.
    pub fn map_coefficients(&self, weight: impl Fn(&Monomial) -> Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * weight(m));
        }
        out
    }
}

/// `(-1)^{m(m-1)/2} = -1`?
pub fn arrow_negates(m: usize) -> bool {
    (m * m.saturating_sub(1) / 2) % 2 == 1
}

impl fmt::Display for SuperPolynomial {
    /// `c * x1^a1 * ... * t{j1} t{j2}` per term, canonical order, joined by
    /// ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                if *m == Monomial::one() {
                    rational::format(c)
                } else {
                    format!("{} * {}", rational::format(c), m)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[N={}] {}", self.nvars, self)
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: Self) -> SuperPolynomial {
        self.try_add(rhs).expect("variable counts agree")
    }
}

impl AddAssign<&SuperPolynomial> for SuperPolynomial {
    fn add_assign(&mut self, rhs: &SuperPolynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable counts agree");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&SuperPolynomial> for SuperPolynomial {
    fn sub_assign(&mut self, rhs: &SuperPolynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable counts agree");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: Self) -> SuperPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: Self) -> SuperPolynomial {
        self.multiply(rhs).expect("variable counts agree")
    }
}
