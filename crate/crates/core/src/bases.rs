//! The classical superbases as explicit polynomials in `N` variables.
//!
//! Single functions: `e_n`, `ẽ_n`, `h_n`, `h̃_n`, `p_n`, `p̃_n`. Multiplicative
//! functions `e_Λ = ẽ_{Λ1}···ẽ_{Λm} e_{Λm+1}···` (and likewise for `h`, `p`)
//! multiply left to right, fermionic factors first, in the order of `Λ^a`.

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::report::Report;
use crate::superpartition::{enumerate, SuperPartition};
use crate::superpoly::{Monomial, SuperPolynomial};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisName {
    M,
    E,
    H,
    P,
}

impl BasisName {
    pub const ALL: [BasisName; 4] = [BasisName::M, BasisName::E, BasisName::H, BasisName::P];

    pub fn as_str(self) -> &'static str {
        match self {
            BasisName::M => "m",
            BasisName::E => "e",
            BasisName::H => "h",
            BasisName::P => "p",
        }
    }
}

impl fmt::Display for BasisName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasisName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(BasisName::M),
            "e" => Ok(BasisName::E),
            "h" => Ok(BasisName::H),
            "p" => Ok(BasisName::P),
            other => Err(Error::UnsupportedBasis(other.to_string())),
        }
    }
}

/// Default variable count for objects indexed by `Λ ⊢ (n|m)`: `n + m`, which
/// is at least `ℓ(Λ)`.
pub fn default_nvars(sp: &SuperPartition) -> usize {
    sp.degree() + sp.fermionic_degree()
}

fn combinations(pool: &[usize], k: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            visit(acc);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - acc.len() {
                break;
            }
            acc.push(pool[i]);
            rec(pool, k, i + 1, acc, visit);
            acc.pop();
        }
    }
    rec(pool, k, 0, &mut Vec::new(), &mut visit);
}

/// `m_Λ` in `nvars` variables: the sum of the distinct terms
/// `θ_{σ(1)}···θ_{σ(m)} x^{σ(Λ)}`, so that `θ_1···θ_m x^Λ` has coefficient 1.
pub fn monomial(sp: &SuperPartition, nvars: usize) -> Result<SuperPolynomial> {
    if nvars < sp.len() {
        return Err(Error::TooFewVariables {
            what: format!("m_{sp}"),
            nvars,
            needed: sp.len(),
        });
    }
    let mut out = SuperPolynomial::try_zero(nvars)?;
    let antisym = sp.antisym();
    let groups = sp.sym_multiplicities();

    // Fermionic parts go to an ordered tuple of distinct positions; the
    // symmetric parts are then spread over the free positions, one subset per
    // distinct value.
    fn place_sym(
        groups: &[(usize, usize)],
        free: &[usize],
        exps: &mut Vec<(usize, u32)>,
        theta: &[usize],
        out: &mut SuperPolynomial,
    ) {
        let Some((&(value, count), rest)) = groups.split_first() else {
            let (odd, mono) = Monomial::from_parts(theta, exps).expect("distinct positions");
            out.add_term(mono, if odd { -Rational::one() } else { Rational::one() });
            return;
        };
        combinations(free, count, |chosen| {
            let remaining: Vec<usize> = free.iter().copied().filter(|p| !chosen.contains(p)).collect();
            let before = exps.len();
            exps.extend(chosen.iter().map(|&p| (p, value as u32)));
            place_sym(rest, &remaining, exps, theta, out);
            exps.truncate(before);
        });
    }

    fn place_antisym(
        antisym: &[usize],
        groups: &[(usize, usize)],
        nvars: usize,
        theta: &mut Vec<usize>,
        exps: &mut Vec<(usize, u32)>,
        out: &mut SuperPolynomial,
    ) {
        if theta.len() == antisym.len() {
            let free: Vec<usize> = (0..nvars).filter(|p| !theta.contains(p)).collect();
            place_sym(groups, &free, exps, theta, out);
            return;
        }
        let part = antisym[theta.len()];
        for pos in 0..nvars {
            if theta.contains(&pos) {
                continue;
            }
            theta.push(pos);
            exps.push((pos, part as u32));
            place_antisym(antisym, groups, nvars, theta, exps, out);
            exps.pop();
            theta.pop();
        }
    }

    place_antisym(antisym, &groups, nvars, &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// `m_Λ`, or zero when `ℓ(Λ) > nvars` (the monomial has no terms there).
pub(crate) fn monomial_or_zero(sp: &SuperPartition, nvars: usize) -> SuperPolynomial {
    monomial(sp, nvars).unwrap_or_else(|_| SuperPolynomial::zero(nvars))
}

/// `e_n = Σ_{|J|=n} x_J` or `ẽ_n = Σ_i Σ_{|J|=n, i∉J} θ_i x_J`; `e_0 = 1`,
/// `ẽ_0 = Σ θ_i`.
pub fn elementary(n: usize, fermionic: bool, nvars: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(nvars);
    let all: Vec<usize> = (0..nvars).collect();
    if !fermionic {
        combinations(&all, n, |j| {
            let exps: Vec<(usize, u32)> = j.iter().map(|&v| (v, 1)).collect();
            out.add_term(Monomial::from_parts(&[], &exps).unwrap().1, Rational::one());
        });
        return out;
    }
    for i in 0..nvars {
        let pool: Vec<usize> = all.iter().copied().filter(|&v| v != i).collect();
        combinations(&pool, n, |j| {
            let exps: Vec<(usize, u32)> = j.iter().map(|&v| (v, 1)).collect();
            out.add_term(Monomial::from_parts(&[i], &exps).unwrap().1, Rational::one());
        });
    }
    out
}

/// `h_n = Σ_{λ⊢n} m_λ` or `h̃_n = Σ_{Λ⊢(n|1)} (Λ_1 + 1) m_Λ`; `h_0 = 1`.
pub fn complete(n: usize, fermionic: bool, nvars: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(nvars);
    for sp in enumerate(n, usize::from(fermionic), Some(nvars)) {
        let weight = if fermionic { int(sp.antisym()[0] as i64 + 1) } else { Rational::one() };
        out += &monomial_or_zero(&sp, nvars).scale(&weight);
    }
    out
}

/// `p_n = Σ x_i^n` with `p_0 = 0`, or `p̃_n = Σ θ_i x_i^n`.
pub fn powersum(n: usize, fermionic: bool, nvars: usize) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(nvars);
    if !fermionic && n == 0 {
        return out;
    }
    for i in 0..nvars {
        let theta: &[usize] = if fermionic { &[i] } else { &[] };
        out.add_term(Monomial::from_parts(theta, &[(i, n as u32)]).unwrap().1, Rational::one());
    }
    out
}

/// The single function `b_n` or `b̃_n` of a multiplicative basis.
pub fn single(basis: BasisName, n: usize, fermionic: bool, nvars: usize) -> Result<SuperPolynomial> {
    match basis {
        BasisName::E => Ok(elementary(n, fermionic, nvars)),
        BasisName::H => Ok(complete(n, fermionic, nvars)),
        BasisName::P => Ok(powersum(n, fermionic, nvars)),
        BasisName::M => Err(Error::UnsupportedBasis("m is not multiplicative".into())),
    }
}

/// `b_Λ = b̃_{Λ1}···b̃_{Λm} b_{Λm+1}···b_{Λℓ}` multiplied left to right. With
/// `arrowed`, the fermionic factors are taken in reverse order, which
/// multiplies the product by `(-1)^{m(m-1)/2}`.
pub fn multiplicative(basis: BasisName, sp: &SuperPartition, nvars: usize, arrowed: bool) -> Result<SuperPolynomial> {
    multiplicative_filtered(basis, sp, nvars, arrowed, |_| true)
}

/// [`multiplicative`] with every product filtered by `keep` (see
/// [`SuperPolynomial::multiply_filtered`]).
pub(crate) fn multiplicative_filtered(
    basis: BasisName,
    sp: &SuperPartition,
    nvars: usize,
    arrowed: bool,
    keep: impl Fn(&Monomial) -> bool + Copy,
) -> Result<SuperPolynomial> {
    if basis == BasisName::M {
        return monomial(sp, nvars).map(|f| if arrowed { f.arrow() } else { f });
    }
    let mut fermionic: Vec<usize> = sp.antisym().to_vec();
    if arrowed {
        fermionic.reverse();
    }
    let mut out = SuperPolynomial::try_zero(nvars)?;
    out.add_term(Monomial::one(), Rational::one());
    for (part, odd) in fermionic.iter().map(|&p| (p, true)).chain(sp.sym().iter().map(|&p| (p, false))) {
        let factor = single(basis, part, odd, nvars)?.filter(keep);
        out = out.multiply_filtered(&factor, keep)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesTruncation {
    pub max_t_degree: usize,
    pub with_tau: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingKind {
    E,
    H,
    P,
}

/// The ring used for generating functions: `x_1..x_N, θ_1..θ_N` plus `t` as
/// bosonic variable `N` and `τ` as fermionic variable `N`.
struct SeriesRing {
    nvars: usize,
    trunc: SeriesTruncation,
}

impl SeriesRing {
    fn total(&self) -> usize {
        self.nvars + 1
    }

    fn t(&self) -> usize {
        self.nvars
    }

    fn keep(&self) -> impl Fn(&Monomial) -> bool + Copy {
        let (t, d) = (self.t(), self.trunc.max_t_degree as u32);
        move |m: &Monomial| m.exponent(t) <= d
    }

    /// `sign · (t x_i + τ θ_i)`.
    fn linear(&self, i: usize, sign: i64) -> SuperPolynomial {
        let n = self.total();
        let mut u = SuperPolynomial::zero(n);
        u.add_term(Monomial::from_parts(&[], &[(i, 1), (self.t(), 1)]).unwrap().1, int(sign));
        if self.trunc.with_tau {
            // τ θ_i = -θ_i τ in canonical order.
            u.add_term(Monomial::from_parts(&[i, self.t()], &[]).unwrap().1, int(-sign));
        }
        u
    }

    /// `∏ (1 + sign·(t x_i + τ θ_i))`.
    fn e_series(&self, sign: i64) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::one(self.total());
        for i in 0..self.nvars {
            let factor = &SuperPolynomial::one(self.total()) + &self.linear(i, sign);
            out = out.multiply_filtered(&factor, self.keep())?;
        }
        Ok(out)
    }

    /// `∏ 1/(1 - sign·(t x_i + τ θ_i))`.
    fn h_series(&self, sign: i64) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::one(self.total());
        for i in 0..self.nvars {
            let factor = SuperPolynomial::geometric_series(&self.linear(i, sign), self.keep())?;
            out = out.multiply_filtered(&factor, self.keep())?;
        }
        Ok(out)
    }

    /// `Σ_i u_i/(1 - u_i)` with `u_i = sign·(t x_i + τ θ_i)`.
    fn p_series(&self, sign: i64) -> Result<SuperPolynomial> {
        let mut out = SuperPolynomial::zero(self.total());
        for i in 0..self.nvars {
            let u = self.linear(i, sign);
            let geometric = SuperPolynomial::geometric_series(&u, self.keep())?;
            out += &(&geometric - &SuperPolynomial::one(self.total()));
        }
        Ok(out)
    }

    /// Coefficient of `t^n` free of `τ`.
    fn coefficient_t(&self, f: &SuperPolynomial, n: usize) -> SuperPolynomial {
        let (t, tau_bit) = (self.t(), 1u64 << self.t());
        let mut out = SuperPolynomial::zero(self.total());
        for (m, c) in f.terms() {
            if m.exponent(t) as usize == n && m.theta_mask() & tau_bit == 0 {
                out.add_term(m.without(tau_bit, 0), c.clone());
            }
        }
        out
    }

    /// `g` in `f = ... + τ t^n g + ...`, with `τ` pulled to the far left.
    fn coefficient_tau_t(&self, f: &SuperPolynomial, n: usize) -> SuperPolynomial {
        let (t, tau_bit) = (self.t(), 1u64 << self.t());
        let mut out = SuperPolynomial::zero(self.total());
        for (m, c) in f.terms() {
            if m.exponent(t) as usize == n && m.theta_mask() & tau_bit != 0 {
                let rest = m.without(tau_bit, tau_bit);
                // θ_J τ = (-1)^{|J|} τ θ_J
                let c = if rest.fermionic_degree() % 2 == 1 { -c.clone() } else { c.clone() };
                out.add_term(rest, c);
            }
        }
        out
    }

    /// `(t∂_t + τ∂_τ) f`: weights each term by its degree in `t` and `τ`.
    fn euler(&self, f: &SuperPolynomial) -> SuperPolynomial {
        let t = self.t();
        f.map_coefficients(|m| int(m.exponent(t) as i64 + i64::from(m.has_theta(t))))
    }

    fn lift(&self, f: SuperPolynomial) -> SuperPolynomial {
        f.embed(self.total(), 0).expect("fits in the larger ring")
    }
}

/// Expands `E(t,τ)`, `H(t,τ)` or `P(t,τ)` as a product/sum over the variables
/// and compares its coefficients with the single functions, up to `t`-degree
/// `trunc.max_t_degree`. The `H` check also verifies `H(t,τ)E(-t,-τ) = 1`; the
/// `P` check verifies `HP = (t∂_t + τ∂_τ)H` and `E(t,τ)P(-t,-τ) =
/// -(t∂_t + τ∂_τ)E`.
pub fn generating_check(kind: GeneratingKind, trunc: SeriesTruncation, nvars: usize) -> Result<Report> {
    let ring = SeriesRing { nvars, trunc };
    let name = match kind {
        GeneratingKind::E => "generating_E",
        GeneratingKind::H => "generating_H",
        GeneratingKind::P => "generating_P",
    };
    let mut report = Report::new(name)
        .param("max_t_degree", trunc.max_t_degree)
        .param("with_tau", trunc.with_tau)
        .param("nvars", nvars);
    let (series, basis) = match kind {
        GeneratingKind::E => (ring.e_series(1)?, BasisName::E),
        GeneratingKind::H => (ring.h_series(1)?, BasisName::H),
        GeneratingKind::P => (ring.p_series(1)?, BasisName::P),
    };
    for n in 0..=trunc.max_t_degree {
        let bosonic = ring.lift(single(basis, n, false, nvars)?);
        let got = ring.coefficient_t(&series, n);
        report.check(got == bosonic, || format!("coefficient of t^{n} is {got}, expected {basis}_{n}"));
        if trunc.with_tau {
            let weight = if kind == GeneratingKind::P { int(n as i64 + 1) } else { Rational::one() };
            let fermionic = ring.lift(single(basis, n, true, nvars)?).scale(&weight);
            let got = ring.coefficient_tau_t(&series, n);
            report.check(got == fermionic, || {
                format!("coefficient of τt^{n} is {got}, expected {weight}·{basis}~_{n}")
            });
        }
    }
    let keep = ring.keep();
    match kind {
        GeneratingKind::E => {}
        GeneratingKind::H => {
            let product = series.multiply_filtered(&ring.e_series(-1)?, keep)?;
            report.check(product == SuperPolynomial::one(ring.total()), || {
                format!("H(t,τ)E(-t,-τ) = {product}")
            });
        }
        GeneratingKind::P => {
            let h = ring.h_series(1)?;
            let lhs = h.multiply_filtered(&series, keep)?;
            let rhs = ring.euler(&h);
            report.check(lhs == rhs, || "H·P differs from (t∂t+τ∂τ)H".to_string());
            let e = ring.e_series(1)?;
            let lhs = e.multiply_filtered(&ring.p_series(-1)?, keep)?;
            let rhs = -&ring.euler(&e);
            report.check(lhs == rhs, || "E(t,τ)·P(-t,-τ) differs from -(t∂t+τ∂τ)E".to_string());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[usize], &[(usize, u32)], i64)]) -> SuperPolynomial {
        SuperPolynomial::from_terms(nvars, terms.iter().map(|&(t, e, c)| (t, e, int(c)))).unwrap()
    }

    /// `m_Λ = (1/n_Λ!) Σ_{σ∈S_N} 𝒦_σ(θ_1···θ_m x^Λ)`, with `n_Λ!` counting the
    /// zeros of `Λ^s` padded to `N - m` entries.
    fn monomial_by_symmetrisation(sp: &SuperPartition, nvars: usize) -> SuperPolynomial {
        let m = sp.fermionic_degree();
        let theta: Vec<usize> = (0..m).collect();
        let exps: Vec<(usize, u32)> = sp.parts().enumerate().map(|(i, p)| (i, p as u32)).collect();
        let seed = SuperPolynomial::from_terms(nvars, [(&theta[..], &exps[..], Rational::one())]).unwrap();
        let mut sum = SuperPolynomial::zero(nvars);
        let mut perm: Vec<usize> = (0..nvars).collect();
        permutations(&mut perm, 0, &mut |p| sum += &seed.permute(p));
        let mut padded: Vec<usize> = sp.sym().to_vec();
        padded.resize(nvars - m, 0);
        let mut norm = 1i64;
        let mut i = 0;
        while i < padded.len() {
            let run = padded[i..].iter().take_while(|&&v| v == padded[i]).count();
            norm *= (1..=run as i64).product::<i64>();
            i += run;
        }
        sum.scale(&crate::rational::ratio(1, norm))
    }

    fn permutations(perm: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == perm.len() {
            visit(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permutations(perm, k + 1, visit);
            perm.swap(k, i);
        }
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomial(&sp("(;1,1)"), 2).unwrap(), poly(2, &[(&[], &[(0, 1), (1, 1)], 1)]));
        assert_eq!(monomial(&sp("(0;)"), 2).unwrap(), poly(2, &[(&[0], &[], 1), (&[1], &[], 1)]));
        // θ1θ2(x1 - x2)
        assert_eq!(
            monomial(&sp("(1,0;)"), 2).unwrap(),
            poly(2, &[(&[0, 1], &[(0, 1)], 1), (&[0, 1], &[(1, 1)], -1)])
        );
        assert!(matches!(monomial(&sp("(1,0;1)"), 2), Err(Error::TooFewVariables { .. })));
    }

    #[test]
    fn monomial_coefficients() {
        let m11 = monomial(&sp("(;1,1)"), 3).unwrap();
        let x1x2 = Monomial::from_parts(&[], &[(0, 1), (1, 1)]).unwrap().1;
        assert_eq!(m11.coefficient(&x1x2), int(1));
        let m = monomial(&sp("(2;1,1)"), 3).unwrap();
        let lead = Monomial::from_parts(&[0], &[(0, 2), (1, 1), (2, 1)]).unwrap().1;
        assert_eq!(m.coefficient(&lead), int(1));
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn monomial_matches_symmetrisation() {
        for n in 0..=4 {
            for m in 0..=3 {
                for lam in enumerate(n, m, None) {
                    for nvars in lam.len().max(1)..=lam.len().max(1) + 1 {
                        if nvars > 5 {
                            continue;
                        }
                        let direct = monomial(&lam, nvars).unwrap();
                        assert_eq!(direct, monomial_by_symmetrisation(&lam, nvars), "{lam} N={nvars}");
                        assert!(direct.is_symmetric(), "{lam}");
                        let theta: Vec<usize> = (0..m).collect();
                        let exps: Vec<(usize, u32)> = lam.parts().enumerate().map(|(i, p)| (i, p as u32)).collect();
                        let lead = Monomial::from_parts(&theta, &exps).unwrap().1;
                        assert_eq!(direct.coefficient(&lead), int(1));
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(
            elementary(2, false, 3),
            poly(3, &[(&[], &[(0, 1), (1, 1)], 1), (&[], &[(0, 1), (2, 1)], 1), (&[], &[(1, 1), (2, 1)], 1)])
        );
        assert_eq!(elementary(1, true, 2), poly(2, &[(&[0], &[(1, 1)], 1), (&[1], &[(0, 1)], 1)]));
        assert_eq!(
            elementary(2, true, 3),
            poly(
                3,
                &[(&[0], &[(1, 1), (2, 1)], 1), (&[1], &[(0, 1), (2, 1)], 1), (&[2], &[(0, 1), (1, 1)], 1)]
            )
        );
        assert_eq!(elementary(0, false, 3), SuperPolynomial::one(3));
        assert_eq!(elementary(0, true, 2), monomial(&sp("(0;)"), 2).unwrap());
    }

    #[test]
    fn complete_examples() {
        assert_eq!(
            complete(2, false, 2),
            poly(2, &[(&[], &[(0, 2)], 1), (&[], &[(0, 1), (1, 1)], 1), (&[], &[(1, 2)], 1)])
        );
        assert_eq!(complete(0, true, 3), monomial(&sp("(0;)"), 3).unwrap());
        assert_eq!(
            complete(1, true, 2),
            poly(
                2,
                &[(&[0], &[(0, 1)], 2), (&[1], &[(1, 1)], 2), (&[0], &[(1, 1)], 1), (&[1], &[(0, 1)], 1)]
            )
        );
        assert_eq!(complete(0, false, 2), SuperPolynomial::one(2));
    }

    #[test]
    fn powersum_examples() {
        assert!(powersum(0, false, 3).is_zero());
        assert_eq!(powersum(0, true, 2), monomial(&sp("(0;)"), 2).unwrap());
        assert_eq!(powersum(2, false, 2), poly(2, &[(&[], &[(0, 2)], 1), (&[], &[(1, 2)], 1)]));
    }

    #[test]
    fn singles_are_monomials() {
        for n in 0..=6 {
            let nvars = n + 1;
            let ones = vec![1; n];
            assert_eq!(elementary(n, false, nvars), monomial(&SuperPartition::bosonic(ones.clone()).unwrap(), nvars).unwrap());
            assert_eq!(elementary(n, true, nvars), monomial(&SuperPartition::new(vec![0], ones).unwrap(), nvars).unwrap());
            if n > 0 {
                assert_eq!(powersum(n, false, nvars), monomial(&SuperPartition::bosonic(vec![n]).unwrap(), nvars).unwrap());
            }
            assert_eq!(powersum(n, true, nvars), monomial(&SuperPartition::new(vec![n], vec![]).unwrap(), nvars).unwrap());
        }
    }

    #[test]
    fn multiplicative_ordering() {
        let nvars = 4;
        let lam = sp("(3,0;4,1)");
        let e = multiplicative(BasisName::E, &lam, 9, false).unwrap();
        let e3 = elementary(3, true, 9);
        let e0 = elementary(0, true, 9);
        let tail = &elementary(4, false, 9) * &elementary(1, false, 9);
        assert_eq!(e, &(&e3 * &e0) * &tail);
        assert_eq!(e, -&(&(&e0 * &e3) * &tail));
        assert_eq!(multiplicative(BasisName::E, &lam, 9, true).unwrap(), -&e);
        assert_eq!(multiplicative(BasisName::P, &SuperPartition::empty(), nvars, false).unwrap(), SuperPolynomial::one(nvars));
    }

    #[test]
    fn fermionic_factor_exchange_negates() {
        for basis in [BasisName::E, BasisName::H, BasisName::P] {
            for (a, b) in [(2usize, 0usize), (1, 0), (3, 1)] {
                let nvars = 5;
                let fa = single(basis, a, true, nvars).unwrap();
                let fb = single(basis, b, true, nvars).unwrap();
                assert_eq!(&fa * &fb, -&(&fb * &fa), "{basis} {a} {b}");
            }
        }
    }

    #[test]
    fn everything_is_symmetric_and_graded() {
        for n in 0..=4 {
            for m in 0..=2 {
                for lam in enumerate(n, m, None) {
                    let nvars = default_nvars(&lam).max(1);
                    for basis in BasisName::ALL {
                        let f = multiplicative(basis, &lam, nvars, false).unwrap();
                        assert!(f.is_symmetric(), "{basis}_{lam}");
                        if !f.is_zero() {
                            assert_eq!(f.bidegree(), Some((n, m)), "{basis}_{lam}");
                        }
                    }
                }
            }
            assert_eq!(complete(n, true, 4).bidegree(), Some((n, 1)));
            assert_eq!(elementary(n, true, n + 1).bidegree(), Some((n, 1)));
        }
    }

    #[test]
    fn h_1_0_1_expands() {
        // h_(1,0;1) = h̃_1 h̃_0 h_1
        let nvars = 3;
        let f = multiplicative(BasisName::H, &sp("(1,0;1)"), nvars, false).unwrap();
        let g = &(&complete(1, true, nvars) * &complete(0, true, nvars)) * &complete(1, false, nvars);
        assert_eq!(f, g);
        assert!(!f.is_zero());
    }

    #[test]
    fn generating_functions_small() {
        let trunc = SeriesTruncation { max_t_degree: 3, with_tau: true };
        for kind in [GeneratingKind::E, GeneratingKind::H, GeneratingKind::P] {
            let r = generating_check(kind, trunc, 3).unwrap();
            assert!(r.pass, "{r}");
        }
        let bosonic = SeriesTruncation { max_t_degree: 3, with_tau: false };
        assert!(generating_check(GeneratingKind::H, bosonic, 3).unwrap().pass);
    }
}
