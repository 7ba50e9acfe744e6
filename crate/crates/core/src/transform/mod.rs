//! Expansions in the classical bases and conversions between them.
//!
//! Every conversion goes through the monomial basis: each basis element of a
//! bidegree block is built at `N = n + m + 1` and its monomial coefficients are
//! read off from the leading terms `θ_1···θ_m x^Ω`.

mod blocks;
pub mod fillings;
pub mod identities;

pub use fillings::{fillings, mono_product, mono_product_fillings, Filling, Letter, RowFill};
pub use identities::{
    determinant_formulas, triangularity_check, verify_determinants, verify_recursions, DeterminantFormula,
};

use crate::bases::{self, BasisName};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::superpartition::SuperPartition;
use crate::superpoly::{arrow_negates, Monomial, SuperPolynomial};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A homogeneous symmetric superpolynomial written in one basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawExpansion", into = "RawExpansion")]
pub struct BasisExpansion {
    basis: BasisName,
    n: usize,
    m: usize,
    coeffs: BTreeMap<SuperPartition, Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawExpansion {
    basis: BasisName,
    n: usize,
    m: usize,
    terms: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    spar: SuperPartition,
    coeff: String,
}

impl TryFrom<RawExpansion> for BasisExpansion {
    type Error = Error;
    fn try_from(raw: RawExpansion) -> Result<Self> {
        let mut out = BasisExpansion::new(raw.basis, raw.n, raw.m);
        for term in raw.terms {
            let c = rational::parse(&term.coeff).ok_or_else(|| Error::Parse {
                input: term.coeff.clone(),
                token: term.coeff.clone(),
            })?;
            out.add_term(term.spar, c)?;
        }
        Ok(out)
    }
}

impl From<BasisExpansion> for RawExpansion {
    fn from(x: BasisExpansion) -> Self {
        let terms = x
            .terms()
            .into_iter()
            .map(|(sp, c)| RawTerm { spar: sp.clone(), coeff: rational::format(c) })
            .collect();
        RawExpansion { basis: x.basis, n: x.n, m: x.m, terms }
    }
}

impl BasisExpansion {
    pub fn new(basis: BasisName, n: usize, m: usize) -> Self {
        BasisExpansion { basis, n, m, coeffs: BTreeMap::new() }
    }

    /// The basis element `b_Λ` itself.
    pub fn single(basis: BasisName, sp: &SuperPartition) -> Self {
        let (n, m) = sp.bidegree();
        let mut out = Self::new(basis, n, m);
        out.coeffs.insert(sp.clone(), Rational::from_integer(1.into()));
        out
    }

    pub fn basis(&self) -> BasisName {
        self.basis
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn get(&self, sp: &SuperPartition) -> Rational {
        self.coeffs.get(sp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in listing order (largest `C[Λ]` first).
    pub fn terms(&self) -> Vec<(&SuperPartition, &Rational)> {
        let mut out: Vec<_> = self.coeffs.iter().collect();
        out.sort_by(|a, b| b.0.listing_cmp(a.0));
        out
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · b_sp`; `sp` must have the bidegree of the expansion.
    pub fn add_term(&mut self, sp: SuperPartition, c: Rational) -> Result<()> {
        if sp.bidegree() != (self.n, self.m) {
            return Err(Error::BidegreeMismatch { left: (self.n, self.m), right: sp.bidegree() });
        }
        let entry = self.coeffs.entry(sp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new(self.basis, self.n, self.m);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// Sum of two expansions in the same basis and bidegree.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::UnsupportedBasis(format!("cannot add {} and {} expansions", self.basis, other.basis)));
        }
        if self.bidegree() != other.bidegree() && !self.is_zero() && !other.is_zero() {
            return Err(Error::BidegreeMismatch { left: self.bidegree(), right: other.bidegree() });
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (k, v) in &other.coeffs {
                out.add_term(k.clone(), v.clone())?;
            }
        }
        Ok(out)
    }

    /// Multiplies by the arrow sign `(-1)^{m(m-1)/2}`.
    pub fn arrow(&self) -> Self {
        if arrow_negates(self.m) {
            self.scale(&rational::int(-1))
        } else {
            self.clone()
        }
    }

    /// `Σ c_Λ b_Λ` built in `nvars` variables.
    pub fn to_polynomial(&self, nvars: usize) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::try_zero(nvars)?;
        for (sp, c) in &self.coeffs {
            let b = match self.basis {
                BasisName::M => bases::monomial_or_zero(sp, nvars),
                other => bases::multiplicative(other, sp, nvars, false)?,
            };
            out += &b.scale(c);
        }
        Ok(out)
    }

    /// Re-expands in the basis `to`.
    pub fn change_basis(&self, to: BasisName) -> BasisExpansion {
        change_basis(self, to)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(sp, c)| format!("{} * {}{}", rational::format(c), self.basis, sp))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Largest length of a superpartition of bidegree `(n|m)`, if any exists.
pub(crate) fn max_length(n: usize, m: usize) -> Option<usize> {
    let minimal = m * m.saturating_sub(1) / 2;
    (n >= minimal).then(|| m + n - minimal)
}

/// `θ_1···θ_m x^Λ` with the parts of `Λ` in the leading positions.
pub(crate) fn leading_monomial(sp: &SuperPartition) -> Monomial {
    let theta: Vec<usize> = (0..sp.fermionic_degree()).collect();
    let exps: Vec<(usize, u32)> = sp.parts().enumerate().map(|(i, p)| (i, p as u32)).collect();
    Monomial::from_parts(&theta, &exps).expect("distinct positions").1
}

/// Monomial expansion of a symmetric polynomial homogeneous of bidegree
/// `(n|m)`. The zero polynomial gives the empty expansion of bidegree `(0|0)`.
pub fn expand_in_monomials(f: &SuperPolynomial) -> Result<BasisExpansion> {
    if f.is_zero() {
        return Ok(BasisExpansion::new(BasisName::M, 0, 0));
    }
    let (n, m) = f.bidegree().ok_or(Error::NotHomogeneous)?;
    expand_in_monomials_at(f, n, m)
}

/// [`expand_in_monomials`] with the bidegree given explicitly (so that zero is
/// accepted in any bidegree).
pub fn expand_in_monomials_at(f: &SuperPolynomial, n: usize, m: usize) -> Result<BasisExpansion> {
    if let Some(needed) = max_length(n, m) {
        if f.nvars() < needed {
            return Err(Error::TooFewVariables {
                what: format!("a monomial expansion in bidegree ({n}|{m})"),
                nvars: f.nvars(),
                needed,
            });
        }
    }
    if f.component(n, m) != *f {
        return Err(Error::NotHomogeneous);
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut out = BasisExpansion::new(BasisName::M, n, m);
    for sp in crate::superpartition::enumerate(n, m, None) {
        let c = f.coefficient(&leading_monomial(&sp));
        if !c.is_zero() {
            out.coeffs.insert(sp, c);
        }
    }
    Ok(out)
}

/// Exact re-expansion of `x` in the basis `to`, pivoting through monomials.
pub fn change_basis(x: &BasisExpansion, to: BasisName) -> BasisExpansion {
    if x.basis == to || x.is_zero() {
        return BasisExpansion { basis: to, ..x.clone() };
    }
    let (n, m) = x.bidegree();
    let from = blocks::block(x.basis, n, m);
    let target = blocks::block(to, n, m);
    let mut v = vec![Rational::zero(); from.index.len()];
    for (sp, c) in &x.coeffs {
        v[from.pos[sp]] = c.clone();
    }
    let mono = crate::linalg::row_times(&v, &from.to_mono);
    let coeffs = crate::linalg::row_times(&mono, &target.from_mono);
    let mut out = BasisExpansion::new(to, n, m);
    for (sp, c) in target.index.iter().zip(coeffs) {
        if !c.is_zero() {
            out.coeffs.insert(sp.clone(), c);
        }
    }
    out
}

/// Monomial coefficients of `b_Λ` for every `Λ ⊢ (n|m)`, rows indexed in
/// listing order. This is the basis-change block used by [`change_basis`].
pub fn transition_matrix(basis: BasisName, n: usize, m: usize) -> (Vec<SuperPartition>, Vec<Vec<Rational>>) {
    let b = blocks::block(basis, n, m);
    (b.index.clone(), b.to_mono.clone())
}

#[cfg(test)]
mod tests;
