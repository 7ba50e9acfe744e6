//! The scalar product on symmetric superpolynomials, the involution `ω̂`,
//! dual bases and the Cauchy kernels.
//!
//! `scalar_product(f, g)` is `⟨⟨←f|→g⟩⟩`: writing `f = Σ f_Λ p_Λ` and
//! `g = Σ g_Λ p_Λ` in the plain power-sum basis, it equals `Σ z_Λ f_Λ g_Λ`.
//! The raw pairing `Σ (-1)^{m(m-1)/2} z_Λ f_Λ g_Λ` (no arrow on `f`) is
//! available through [`Pairing::Raw`].

use crate::bases::{self, BasisName};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{int, Rational};
use crate::report::Report;
use crate::superpartition::{enumerate, SuperPartition};
use crate::superpoly::{arrow_negates, Monomial, SuperPolynomial};
use crate::transform::{change_basis, expand_in_monomials, BasisExpansion};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

/// `z_Λ` together with the arrow sign of the sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZNormalization {
    pub value: Rational,
    pub arrow_sign: i64,
}

/// `z_Λ = Π_k k^{n_k} n_k!` over the multiplicities `n_k` of `Λ^s`.
pub fn z_lambda(sp: &SuperPartition) -> Rational {
    let mut z = 1i128;
    for (k, count) in sp.sym_multiplicities() {
        for c in 1..=count {
            z *= (k * c) as i128;
        }
    }
    Rational::from_integer(z.into())
}

pub fn z_normalization(sp: &SuperPartition) -> ZNormalization {
    ZNormalization {
        value: z_lambda(sp),
        arrow_sign: if arrow_negates(sp.fermionic_degree()) { -1 } else { 1 },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaSign(pub i64);

/// `ω_Λ = (-1)^{|Λ| + m - ℓ(Λ)}`, the eigenvalue of `ω̂` on `p_Λ`.
pub fn omega_sign(sp: &SuperPartition) -> OmegaSign {
    let exponent = sp.degree() + sp.fermionic_degree() - sp.len();
    OmegaSign(if exponent % 2 == 0 { 1 } else { -1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pairing {
    #[default]
    Arrowed,
    Raw,
}

/// Anything that can be written in the power-sum basis.
pub trait ScalarOperand {
    fn power_sums(&self) -> Result<BasisExpansion>;
}

impl ScalarOperand for BasisExpansion {
    fn power_sums(&self) -> Result<BasisExpansion> {
        Ok(change_basis(self, BasisName::P))
    }
}

impl ScalarOperand for SuperPolynomial {
    fn power_sums(&self) -> Result<BasisExpansion> {
        Ok(change_basis(&expand_in_monomials(self)?, BasisName::P))
    }
}

/// `⟨⟨←f|→g⟩⟩`; zero when the bidegrees differ.
pub fn scalar_product(f: &impl ScalarOperand, g: &impl ScalarOperand) -> Result<Rational> {
    scalar_product_with(f, g, Pairing::Arrowed)
}

pub fn scalar_product_with(f: &impl ScalarOperand, g: &impl ScalarOperand, pairing: Pairing) -> Result<Rational> {
    Ok(pair_power_sums(&f.power_sums()?, &g.power_sums()?, pairing))
}

fn pair_power_sums(f: &BasisExpansion, g: &BasisExpansion, pairing: Pairing) -> Rational {
    if f.bidegree() != g.bidegree() {
        return Rational::zero();
    }
    let mut sum = Rational::zero();
    for (sp, c) in f.terms() {
        let d = g.get(sp);
        if !d.is_zero() {
            sum += z_lambda(sp) * c * d;
        }
    }
    if pairing == Pairing::Raw && arrow_negates(f.bidegree().1) {
        -sum
    } else {
        sum
    }
}

/// `ω̂(x)` in the basis of `x`, computed on power sums.
pub fn omega(x: &BasisExpansion) -> BasisExpansion {
    let p = change_basis(x, BasisName::P);
    let (n, m) = p.bidegree();
    let mut out = BasisExpansion::new(BasisName::P, n, m);
    for (sp, c) in p.terms() {
        out.add_term(sp.clone(), c * int(omega_sign(sp).0)).expect("same bidegree");
    }
    change_basis(&out, x.basis())
}

/// `ω̂(x)` from its definition: rewrite in `e`, then read `e_Λ` as `h_Λ`.
pub fn omega_by_definition(x: &BasisExpansion) -> BasisExpansion {
    let e = change_basis(x, BasisName::E);
    let (n, m) = e.bidegree();
    let mut h = BasisExpansion::new(BasisName::H, n, m);
    for (sp, c) in e.terms() {
        h.add_term(sp.clone(), c.clone()).expect("same bidegree");
    }
    change_basis(&h, x.basis())
}

/// Closed-form power-sum expansions `h_n = Σ z_Λ^{-1} p_Λ`,
/// `e_n = Σ z_Λ^{-1} ω_Λ p_Λ` over `SPar(n|0)`, and the fermionic versions over
/// `SPar(n|1)`.
pub fn eh_in_p(n: usize, fermionic: bool, which: BasisName) -> Result<BasisExpansion> {
    let with_omega = match which {
        BasisName::E => true,
        BasisName::H => false,
        other => return Err(Error::UnsupportedBasis(format!("{other} has no closed form here; use e or h"))),
    };
    let m = usize::from(fermionic);
    let mut out = BasisExpansion::new(BasisName::P, n, m);
    for sp in enumerate(n, m, None) {
        let mut c = z_lambda(&sp).recip();
        if with_omega {
            c *= int(omega_sign(&sp).0);
        }
        out.add_term(sp, c)?;
    }
    Ok(out)
}

/// A basis usable in Gram matrices: one of the named bases, or `p_Λ / z_Λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GramBasis {
    Named(BasisName),
    NormalizedPowerSum,
}

impl From<BasisName> for GramBasis {
    fn from(b: BasisName) -> Self {
        GramBasis::Named(b)
    }
}

impl FromStr for GramBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "p/z" {
            Ok(GramBasis::NormalizedPowerSum)
        } else {
            s.parse().map(GramBasis::Named)
        }
    }
}

impl fmt::Display for GramBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramBasis::Named(b) => write!(f, "{b}"),
            GramBasis::NormalizedPowerSum => f.write_str("p/z"),
        }
    }
}

fn gram_element(b: GramBasis, sp: &SuperPartition) -> BasisExpansion {
    match b {
        GramBasis::Named(name) => change_basis(&BasisExpansion::single(name, sp), BasisName::P),
        GramBasis::NormalizedPowerSum => BasisExpansion::single(BasisName::P, sp).scale(&z_lambda(sp).recip()),
    }
}

/// `G[Λ][Ω] = ⟨⟨←u_Λ|→v_Ω⟩⟩` over `Λ, Ω ⊢ (n|m)` in listing order.
pub fn gram(n: usize, m: usize, u: GramBasis, v: GramBasis) -> (Vec<SuperPartition>, Matrix) {
    let index = enumerate(n, m, None);
    let us: Vec<BasisExpansion> = index.par_iter().map(|sp| gram_element(u, sp)).collect();
    let vs: Vec<BasisExpansion> = index.par_iter().map(|sp| gram_element(v, sp)).collect();
    let matrix = us
        .par_iter()
        .map(|a| vs.iter().map(|b| pair_power_sums(a, b, Pairing::Arrowed)).collect())
        .collect();
    (index, matrix)
}

/// Whether `⟨⟨←u_Λ|→v_Ω⟩⟩ = δ_{ΛΩ}` on the block `(n|m)`.
pub fn dual_bases_check(n: usize, m: usize, u: impl Into<GramBasis>, v: impl Into<GramBasis>) -> bool {
    let (_, g) = gram(n, m, u.into(), v.into());
    g.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
    })
}

/// On every block `(n|m)` with `n ≤ n_max`, `m ≤ m_max`:
/// `⟨⟨←p_Λ|→p_Ω⟩⟩ = z_Λ δ`, `⟨⟨←h_Λ|→m_Ω⟩⟩ = δ`, `⟨⟨←p_Λ|→p_Ω/z_Ω⟩⟩ = δ`,
/// `ω̂` on power sums agrees with its definition through `e ↦ h`, `ω̂² = 1` on
/// every `e_Λ` and `h_Λ`, and `ω̂` preserves the Gram matrix of the `e` basis.
pub fn duality_check(n_max: usize, m_max: usize) -> Report {
    let mut report = Report::new("duality").param("n_max", n_max).param("m_max", m_max);
    let mut blocks = 0usize;
    for n in 0..=n_max {
        for m in 0..=m_max {
            let index = enumerate(n, m, None);
            if index.is_empty() {
                continue;
            }
            blocks += 1;
            let (_, pp) = gram(n, m, BasisName::P.into(), BasisName::P.into());
            for (i, row) in pp.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    let expected = if i == j { z_lambda(&index[i]) } else { Rational::zero() };
                    report.check(*c == expected, || {
                        format!("<p_{}|p_{}> = {c} in ({n}|{m})", index[i], index[j])
                    });
                }
            }
            report.check(dual_bases_check(n, m, BasisName::H, BasisName::M), || {
                format!("h and m are not dual in ({n}|{m})")
            });
            report.check(dual_bases_check(n, m, BasisName::P, GramBasis::NormalizedPowerSum), || {
                format!("p and p/z are not dual in ({n}|{m})")
            });
            let results: Vec<Option<String>> = index
                .par_iter()
                .map(|sp| {
                    for basis in [BasisName::E, BasisName::H, BasisName::P, BasisName::M] {
                        let x = BasisExpansion::single(basis, sp);
                        let w = omega(&x);
                        if w != omega_by_definition(&x) {
                            return Some(format!("omega on p disagrees with e -> h on {basis}_{sp}"));
                        }
                        if omega(&w) != x {
                            return Some(format!("omega is not an involution on {basis}_{sp}"));
                        }
                    }
                    let e = BasisExpansion::single(BasisName::E, sp);
                    let h = BasisExpansion::single(BasisName::H, sp);
                    if omega(&e) != change_basis(&h, BasisName::E) {
                        return Some(format!("omega(e_{sp}) is not h_{sp}"));
                    }
                    None
                })
                .collect();
            for failure in results.into_iter().flatten() {
                report.fail(failure);
            }
            let es: Vec<BasisExpansion> = index.iter().map(|sp| BasisExpansion::single(BasisName::E, sp)).collect();
            let images: Vec<BasisExpansion> = es.iter().map(omega).collect();
            for (a, wa) in es.iter().zip(&images) {
                for (b, wb) in es.iter().zip(&images) {
                    let before = scalar_product(a, b).expect("expansions");
                    let after = scalar_product(wa, wb).expect("expansions");
                    report.check(before == after, || format!("omega changes <{a}|{b}>"));
                }
            }
        }
    }
    report.param("blocks", blocks)
}

/// Bosonic/fermionic variables `0..N` form the alphabet `(x, θ)`, `N..2N`
/// the alphabet `(y, φ)`.
struct DoubleAlphabet {
    nvars: usize,
    degree: usize,
}

impl DoubleAlphabet {
    fn total(&self) -> usize {
        2 * self.nvars
    }

    fn keep(&self) -> impl Fn(&Monomial) -> bool + Copy {
        let mask = (1u64 << self.nvars) - 1;
        let d = self.degree;
        move |m: &Monomial| m.degree_in(mask) <= d
    }

    /// `sign · (x_i y_j + θ_i φ_j)`
    fn pair(&self, i: usize, j: usize, sign: i64) -> SuperPolynomial {
        let y = self.nvars + j;
        let mut u = SuperPolynomial::zero(self.total());
        u.add_term(Monomial::from_parts(&[], &[(i, 1), (y, 1)]).unwrap().1, int(sign));
        u.add_term(Monomial::from_parts(&[i, y], &[]).unwrap().1, int(sign));
        u
    }

    /// `Π_{i,j} (1 - x_i y_j - θ_i φ_j)^{-1}` up to x-degree `d`.
    fn kernel(&self) -> Result<SuperPolynomial> {
        let rows: Vec<SuperPolynomial> = (0..self.nvars)
            .into_par_iter()
            .map(|i| {
                let mut row = SuperPolynomial::one(self.total());
                for j in 0..self.nvars {
                    let factor = SuperPolynomial::geometric_series(&self.pair(i, j, 1), self.keep())?;
                    row = row.multiply_filtered(&factor, self.keep())?;
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        self.product(rows)
    }

    /// `Π_{i,j} (1 + x_i y_j + θ_i φ_j)` up to x-degree `d`.
    fn inverse_kernel(&self) -> Result<SuperPolynomial> {
        let rows: Vec<SuperPolynomial> = (0..self.nvars)
            .into_par_iter()
            .map(|i| {
                let mut row = SuperPolynomial::one(self.total());
                for j in 0..self.nvars {
                    let factor = &SuperPolynomial::one(self.total()) + &self.pair(i, j, 1);
                    row = row.multiply_filtered(&factor, self.keep())?;
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        self.product(rows)
    }

    fn product(&self, factors: Vec<SuperPolynomial>) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::one(self.total());
        for f in factors {
            out = out.par_multiply_filtered(&f, self.keep())?;
        }
        Ok(out)
    }

    fn left(&self, f: &SuperPolynomial) -> SuperPolynomial {
        f.embed(self.total(), 0).expect("fits")
    }

    fn right(&self, f: &SuperPolynomial) -> SuperPolynomial {
        f.embed(self.total(), self.nvars).expect("fits")
    }

    /// Every superpartition that can appear below x-degree `d`.
    fn superpartitions(&self) -> Vec<SuperPartition> {
        (0..=self.degree)
            .flat_map(|n| (0..=self.nvars).flat_map(move |m| enumerate(n, m, None)))
            .collect()
    }

    /// `Σ_Λ c_Λ · ←u_Λ(x, θ) · v_Λ(y, φ)`.
    fn expansion(
        &self,
        weight: impl Fn(&SuperPartition) -> Rational + Sync,
        u: impl Fn(&SuperPartition) -> Result<SuperPolynomial> + Sync,
        v: impl Fn(&SuperPartition) -> Result<SuperPolynomial> + Sync,
    ) -> Result<SuperPolynomial> {
        let parts: Vec<SuperPolynomial> = self
            .superpartitions()
            .par_iter()
            .map(|sp| {
                let c = weight(sp);
                let x = self.left(&u(sp)?).arrow();
                let y = self.right(&v(sp)?);
                Ok(x.multiply(&y)?.scale(&c))
            })
            .collect::<Result<_>>()?;
        let mut out = SuperPolynomial::zero(self.total());
        for p in &parts {
            out += p;
        }
        Ok(out)
    }
}

/// Expands the Cauchy kernel and its inverse in `N` variables per alphabet to
/// x-degree `d`, and compares with `Σ z_Λ^{-1} ←p_Λ(x,θ) p_Λ(y,φ)`,
/// `Σ ←m_Λ(x,θ) h_Λ(y,φ)`, `Σ ω_Λ z_Λ^{-1} ←p_Λ(x,θ) p_Λ(y,φ)` and
/// `Σ ←m_Λ(x,θ) e_Λ(y,φ)`. Also checks `⟨⟨K|m_Λ⟩⟩ = m_Λ(y,φ)` for
/// `|Λ| ≤ min(d, 3)` whenever every superpartition of that bidegree fits in
/// `N` variables.
pub fn kernel_check(nvars: usize, degree: usize) -> Result<Report> {
    if 2 * nvars > crate::superpoly::MAX_VARS {
        return Err(Error::TooManyVariables { got: 2 * nvars, max: crate::superpoly::MAX_VARS });
    }
    let ab = DoubleAlphabet { nvars, degree };
    let mut report = Report::new("kernel").param("nvars", nvars).param("degree", degree);
    let n = nvars;
    let inv_z = |sp: &SuperPartition| z_lambda(sp).recip();
    let p = |sp: &SuperPartition| bases::multiplicative(BasisName::P, sp, n, false);
    let m = |sp: &SuperPartition| Ok(bases::monomial_or_zero(sp, n));

    let kernel = ab.kernel()?;
    report = report.param("kernel_terms", kernel.len());
    let pp = ab.expansion(inv_z, p, p)?;
    report.check(pp == kernel, || "K differs from sum z^-1 <-p(x) p(y)".into());
    let mh = ab.expansion(|_| Rational::one(), m, |sp| bases::multiplicative(BasisName::H, sp, n, false))?;
    report.check(mh == kernel, || "K differs from sum <-m(x) h(y)".into());

    let inverse = ab.inverse_kernel()?;
    let pp = ab.expansion(|sp| inv_z(sp) * int(omega_sign(sp).0), p, p)?;
    report.check(pp == inverse, || "inverse kernel differs from sum omega z^-1 <-p(x) p(y)".into());
    let me = ab.expansion(|_| Rational::one(), m, |sp| bases::multiplicative(BasisName::E, sp, n, false))?;
    report.check(me == inverse, || "inverse kernel differs from sum <-m(x) e(y)".into());

    report.absorb(&reproducing_check(&ab, &kernel)?);
    Ok(report)
}

/// `⟨⟨K|f⟩⟩ = Σ_Ω ⟨⟨←m_Ω|f⟩⟩_raw C_Ω(y)`, where `C_Ω(y)` is the coefficient
/// of `θ_1···θ_m x^Ω` in `K`.
fn reproducing_check(ab: &DoubleAlphabet, kernel: &SuperPolynomial) -> Result<Report> {
    let mut report = Report::new("reproducing");
    let mut columns: HashMap<Monomial, SuperPolynomial> = HashMap::new();
    for (mono, c) in kernel.terms() {
        let (x, y) = mono.split_at(ab.nvars);
        columns.entry(x).or_insert_with(|| SuperPolynomial::zero(ab.total())).add_term(y, c.clone());
    }
    let mut checked = 0usize;
    for sp in ab.superpartitions() {
        let (n, m) = sp.bidegree();
        let fits = crate::transform::max_length(n, m).is_some_and(|l| l <= ab.nvars);
        if n > 3 || !fits {
            continue;
        }
        let f = BasisExpansion::single(BasisName::M, &sp);
        let mut lhs = SuperPolynomial::zero(ab.total());
        for om in enumerate(n, m, None) {
            let c = scalar_product_with(&BasisExpansion::single(BasisName::M, &om), &f, Pairing::Raw)?;
            if c.is_zero() {
                continue;
            }
            if let Some(col) = columns.get(&crate::transform::leading_monomial(&om)) {
                lhs += &col.scale(&c);
            }
        }
        let expected = ab.right(&bases::monomial_or_zero(&sp, ab.nvars));
        report.check(lhs == expected, || format!("<<K|m_{sp}>> differs from m_{sp}(y)"));
        checked += 1;
    }
    Ok(report.param("checked", checked))
}
