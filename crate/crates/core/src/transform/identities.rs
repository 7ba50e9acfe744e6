//! Recursions and determinantal formulas linking `e`, `h` and `p`, and the
//! triangularity of the elementary basis.

use super::{change_basis, BasisExpansion};
use crate::bases::{complete, elementary, powersum, BasisName};
use crate::rational::{int, Rational};
use crate::report::Report;
use crate::superpartition::{bruhat_leq, enumerate};
use crate::superpoly::SuperPolynomial;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

/// The single functions `e_r, ẽ_r, h_r, h̃_r, p_r, p̃_r` for `r ≤ n_max`.
struct Singles {
    e: Vec<SuperPolynomial>,
    et: Vec<SuperPolynomial>,
    h: Vec<SuperPolynomial>,
    ht: Vec<SuperPolynomial>,
    p: Vec<SuperPolynomial>,
    pt: Vec<SuperPolynomial>,
}

impl Singles {
    fn new(n_max: usize, nvars: usize) -> Self {
        let build = |f: fn(usize, bool, usize) -> SuperPolynomial, fermionic: bool| -> Vec<SuperPolynomial> {
            (0..=n_max).into_par_iter().map(|r| f(r, fermionic, nvars)).collect()
        };
        Singles {
            e: build(elementary, false),
            et: build(elementary, true),
            h: build(complete, false),
            ht: build(complete, true),
            p: build(powersum, false),
            pt: build(powersum, true),
        }
    }
}

fn alternating(r: usize) -> Rational {
    if r % 2 == 0 {
        Rational::one()
    } else {
        int(-1)
    }
}

fn lincomb(nvars: usize, terms: impl IntoIterator<Item = (Rational, SuperPolynomial)>) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(nvars);
    for (c, f) in terms {
        out += &f.scale(&c);
    }
    out
}

/// Checks, for `n ≤ n_max` at `N = n_max + 2`:
///
/// - `Σ_r (-1)^r e_r h_{n-r} = 0` (n ≥ 1)
/// - `Σ_r (-1)^r (e_r h̃_{n-r} - ẽ_r h_{n-r}) = 0`
/// - `n h_n = Σ_{r≥1} p_r h_{n-r}` (n ≥ 1)
/// - `n e_n = Σ_{r≥1} (-1)^{r+1} p_r e_{n-r}` (n ≥ 1)
/// - `(n+1) h̃_n = Σ_r [p_r h̃_{n-r} + (r+1) p̃_r h_{n-r}]`
/// - `(n+1) ẽ_n = Σ_r (-1)^{r+1} [p_r ẽ_{n-r} - (r+1) p̃_r e_{n-r}]`
pub fn verify_recursions(n_max: usize) -> Report {
    let nvars = n_max + 2;
    let s = Singles::new(n_max, nvars);
    let mut report = Report::new("recursions").param("n_max", n_max).param("nvars", nvars);
    let results: Vec<(usize, &str, bool)> = (0..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            let s = &s;
            let range = 0..=n;
            let mut out = Vec::new();
            if n >= 1 {
                let lhs = lincomb(nvars, range.clone().map(|r| (alternating(r), &s.e[r] * &s.h[n - r])));
                out.push((n, "sum (-1)^r e_r h_(n-r) = 0", lhs.is_zero()));
                let rhs = lincomb(nvars, (1..=n).map(|r| (Rational::one(), &s.p[r] * &s.h[n - r])));
                out.push((n, "n h_n = sum p_r h_(n-r)", rhs == s.h[n].scale(&int(n as i64))));
                let rhs = lincomb(nvars, (1..=n).map(|r| (-alternating(r), &s.p[r] * &s.e[n - r])));
                out.push((n, "n e_n = sum (-1)^(r+1) p_r e_(n-r)", rhs == s.e[n].scale(&int(n as i64))));
            }
            let lhs = lincomb(
                nvars,
                range.clone().flat_map(|r| {
                    [(alternating(r), &s.e[r] * &s.ht[n - r]), (-alternating(r), &s.et[r] * &s.h[n - r])]
                }),
            );
            out.push((n, "sum (-1)^r (e_r h~_(n-r) - e~_r h_(n-r)) = 0", lhs.is_zero()));
            let rhs = lincomb(
                nvars,
                range.clone().flat_map(|r| {
                    [(Rational::one(), &s.p[r] * &s.ht[n - r]), (int(r as i64 + 1), &s.pt[r] * &s.h[n - r])]
                }),
            );
            out.push((n, "(n+1) h~_n = sum [p_r h~_(n-r) + (r+1) p~_r h_(n-r)]", rhs == s.ht[n].scale(&int(n as i64 + 1))));
            let rhs = lincomb(
                nvars,
                range.flat_map(|r| {
                    let sign = -alternating(r);
                    [(sign.clone(), &s.p[r] * &s.et[n - r]), (-sign * int(r as i64 + 1), &s.pt[r] * &s.e[n - r])]
                }),
            );
            out.push((n, "(n+1) e~_n = sum (-1)^(r+1) [p_r e~_(n-r) - (r+1) p~_r e_(n-r)]", rhs == s.et[n].scale(&int(n as i64 + 1))));
            out
        })
        .collect();
    for (n, name, ok) in results {
        report.check(ok, || format!("{name} fails at n={n}"));
    }
    report
}

/// The determinantal formulas; each is checked together with its image under
/// `ω̂` (`e ↔ h`, `ẽ ↔ h̃`, `p_k ↦ (-1)^{k-1} p_k`, `p̃_k ↦ (-1)^k p̃_k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeterminantFormula {
    /// `e_n` from `h_1..h_n`.
    EFromH,
    /// `ẽ_n` from `h̃_0..h̃_n` and `h`, with the `1/n!` prefactor.
    ETildeFromH,
    /// `p_n` from `e`.
    PFromE,
    /// `n! e_n` from `p`.
    EFromP,
    /// `p̃_n` from `ẽ` and `e`.
    PTildeFromE,
    /// `n! ẽ_n` from `p̃` and `p`.
    ETildeFromP,
}

impl DeterminantFormula {
    pub const ALL: [DeterminantFormula; 6] = [
        DeterminantFormula::EFromH,
        DeterminantFormula::ETildeFromH,
        DeterminantFormula::PFromE,
        DeterminantFormula::EFromP,
        DeterminantFormula::PTildeFromE,
        DeterminantFormula::ETildeFromP,
    ];

    fn name(self) -> &'static str {
        match self {
            DeterminantFormula::EFromH => "e_n from h",
            DeterminantFormula::ETildeFromH => "e~_n from h~, h",
            DeterminantFormula::PFromE => "p_n from e",
            DeterminantFormula::EFromP => "n! e_n from p",
            DeterminantFormula::PTildeFromE => "p~_n from e~, e",
            DeterminantFormula::ETildeFromP => "n! e~_n from p~, p",
        }
    }

    fn valid_for(self, n: usize) -> bool {
        match self {
            DeterminantFormula::EFromH | DeterminantFormula::PFromE | DeterminantFormula::EFromP => n >= 1,
            _ => true,
        }
    }
}

/// Matrix entries in one of two alphabets of single functions: `Plain` is the
/// alphabet of the formula, `Dual` its `ω̂`-image.
struct Alphabet<'a> {
    s: &'a Singles,
    dual: bool,
}

impl Alphabet<'_> {
    fn e(&self, r: usize) -> &SuperPolynomial {
        if self.dual { &self.s.h[r] } else { &self.s.e[r] }
    }
    fn et(&self, r: usize) -> &SuperPolynomial {
        if self.dual { &self.s.ht[r] } else { &self.s.et[r] }
    }
    fn h(&self, r: usize) -> &SuperPolynomial {
        if self.dual { &self.s.e[r] } else { &self.s.h[r] }
    }
    fn ht(&self, r: usize) -> &SuperPolynomial {
        if self.dual { &self.s.et[r] } else { &self.s.ht[r] }
    }
    fn p(&self, r: usize) -> SuperPolynomial {
        if self.dual && r % 2 == 0 { -&self.s.p[r] } else { self.s.p[r].clone() }
    }
    fn pt(&self, r: usize) -> SuperPolynomial {
        if self.dual && r % 2 == 1 { -&self.s.pt[r] } else { self.s.pt[r].clone() }
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).fold(Rational::one(), |a, b| a * b)
}

/// Square matrix whose first row may be fermionic; every other entry commutes
/// with everything.
struct Det {
    size: usize,
    entries: Vec<Vec<Option<SuperPolynomial>>>,
    nvars: usize,
}

impl Det {
    fn new(size: usize, nvars: usize, entry: impl Fn(usize, usize) -> Option<SuperPolynomial>) -> Self {
        let entries = (0..size).map(|i| (0..size).map(|j| entry(i, j)).collect()).collect();
        Det { size, entries, nvars }
    }

    /// Cofactor expansion along rows top to bottom, memoised on the set of
    /// columns still free. Entries multiply on the left of their minor, so the
    /// first row keeps its place in every product.
    fn evaluate(&self) -> SuperPolynomial {
        // last row with a nonzero entry in each column; a free column nobody
        // below can use makes the minor vanish.
        let last_row: Vec<usize> = (0..self.size)
            .map(|j| (0..self.size).rev().find(|&i| self.entries[i][j].is_some()).unwrap_or(0))
            .collect();
        let full = if self.size == 64 { u64::MAX } else { (1u64 << self.size) - 1 };
        self.minor(0, full, &last_row, &mut HashMap::new())
    }

    fn minor(&self, row: usize, cols: u64, last_row: &[usize], memo: &mut HashMap<u64, SuperPolynomial>) -> SuperPolynomial {
        if row == self.size {
            return SuperPolynomial::one(self.nvars);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut out = SuperPolynomial::zero(self.nvars);
        let dead = (0..self.size).any(|j| cols & (1 << j) != 0 && last_row[j] < row);
        if !dead {
            let mut position = 0;
            for j in 0..self.size {
                if cols & (1 << j) == 0 {
                    continue;
                }
                if let Some(entry) = &self.entries[row][j] {
                    let rest = self.minor(row + 1, cols & !(1 << j), last_row, memo);
                    if !rest.is_zero() {
                        let term = entry * &rest;
                        if position % 2 == 0 {
                            out += &term;
                        } else {
                            out -= &term;
                        }
                    }
                }
                position += 1;
            }
        }
        memo.insert(cols, out.clone());
        out
    }
}

fn constant(nvars: usize, c: i64) -> Option<SuperPolynomial> {
    (c != 0).then(|| SuperPolynomial::constant(nvars, int(c)))
}

fn scaled(f: &SuperPolynomial, c: i64) -> Option<SuperPolynomial> {
    (c != 0 && !f.is_zero()).then(|| f.scale(&int(c)))
}

fn nonzero(f: SuperPolynomial) -> Option<SuperPolynomial> {
    (!f.is_zero()).then_some(f)
}

/// `(determinant, expected value)` for one formula in one alphabet.
fn formula_sides(which: DeterminantFormula, n: usize, a: &Alphabet, nvars: usize) -> (SuperPolynomial, SuperPolynomial) {
    use DeterminantFormula::*;
    let sub = |k: usize, j: usize| j + 1 >= k && j + 1 - k <= n;
    let det = match which {
        EFromH => Det::new(n, nvars, |i, j| match i {
            0 => nonzero(a.h(j + 1).clone()),
            k if j + 1 == k => constant(nvars, 1),
            k if j >= k => nonzero(a.h(j - k + 1).clone()),
            _ => None,
        }),
        ETildeFromH => Det::new(n + 1, nvars, |i, j| match i {
            0 => nonzero(a.ht(j).clone()),
            k if j + 1 == k => constant(nvars, (n - k + 1) as i64),
            k if j >= k && sub(k, j) => scaled(a.h(j - k + 1), (n + j + 2 - 2 * k) as i64),
            _ => None,
        }),
        PFromE => Det::new(n, nvars, |i, j| match i {
            0 => scaled(a.e(j + 1), j as i64 + 1),
            k if j + 1 == k => constant(nvars, 1),
            k if j >= k => nonzero(a.e(j - k + 1).clone()),
            _ => None,
        }),
        EFromP => Det::new(n, nvars, |i, j| match i {
            0 => nonzero(a.p(j + 1)),
            k if j + 1 == k => constant(nvars, k as i64),
            k if j >= k => nonzero(a.p(j - k + 1)),
            _ => None,
        }),
        PTildeFromE => Det::new(n + 1, nvars, |i, j| match i {
            0 => nonzero(a.et(j).clone()),
            k if j + 1 == k => constant(nvars, 1),
            k if j >= k => nonzero(a.e(j - k + 1).clone()),
            _ => None,
        }),
        ETildeFromP => Det::new(n + 1, nvars, |i, j| match i {
            0 => nonzero(a.pt(j)),
            k if j + 1 == k => constant(nvars, (n - k + 1) as i64),
            k if j >= k => nonzero(a.p(j - k + 1)),
            _ => None,
        }),
    };
    let value = det.evaluate();
    let expected = match which {
        EFromH => a.e(n).clone(),
        ETildeFromH => a.et(n).scale(&factorial(n)),
        PFromE => a.p(n),
        EFromP => a.e(n).scale(&factorial(n)),
        PTildeFromE => a.pt(n),
        ETildeFromP => a.et(n).scale(&factorial(n)),
    };
    (value, expected)
}

/// Checks one determinantal formula and its `ω̂`-image at degree `n` in
/// `nvars` variables. The formulas with a `1/n!` or `n!` prefactor are
/// compared after clearing it.
pub fn determinant_formulas(n: usize, which: DeterminantFormula, nvars: usize) -> Report {
    let mut report = Report::new("determinant")
        .param("formula", which.name())
        .param("n", n)
        .param("nvars", nvars);
    if !which.valid_for(n) {
        return report;
    }
    let s = Singles::new(n, nvars);
    for dual in [false, true] {
        let (value, expected) = formula_sides(which, n, &Alphabet { s: &s, dual }, nvars);
        report.check(value == expected, || {
            format!("{}{} at n={n}", which.name(), if dual { " (omega image)" } else { "" })
        });
    }
    report
}

/// All six formulas and their `ω̂`-images for `n ≤ n_max` at `N = n_max + 2`.
pub fn verify_determinants(n_max: usize) -> Report {
    let nvars = n_max + 2;
    let s = Singles::new(n_max, nvars);
    let mut report = Report::new("determinants").param("n_max", n_max).param("nvars", nvars);
    let jobs: Vec<(DeterminantFormula, usize, bool)> = DeterminantFormula::ALL
        .iter()
        .flat_map(|&w| (0..=n_max).filter(move |&n| w.valid_for(n)).flat_map(move |n| [(w, n, false), (w, n, true)]))
        .collect();
    let results: Vec<(DeterminantFormula, usize, bool, bool)> = jobs
        .into_par_iter()
        .map(|(w, n, dual)| {
            let (value, expected) = formula_sides(w, n, &Alphabet { s: &s, dual }, nvars);
            (w, n, dual, value == expected)
        })
        .collect();
    for (w, n, dual, ok) in results {
        report.check(ok, || format!("{}{} at n={n}", w.name(), if dual { " (omega image)" } else { "" }));
    }
    report
}

/// For every `Λ ⊢ (n|m)` with `n ≤ n_max`: `←e_Λ` expanded in monomials has
/// coefficient 1 on `m_{Λ'}`, integer coefficients, and support strictly below
/// `Λ'` in the Bruhat order. The count of negative coefficients is reported as
/// the parameter `negative_coefficients` without affecting the outcome.
pub fn triangularity_check(n_max: usize) -> Report {
    let mut report = Report::new("triangularity").param("n_max", n_max);
    let mut checked = 0usize;
    let mut negative = 0usize;
    for n in 0..=n_max {
        for m in 0..=n + 1 {
            let lambdas = enumerate(n, m, None);
            if lambdas.is_empty() {
                continue;
            }
            let results: Vec<(String, Option<String>, usize)> = lambdas
                .par_iter()
                .map(|lam| {
                    let x = change_basis(&BasisExpansion::single(BasisName::E, lam).arrow(), BasisName::M);
                    let lead = lam.conjugate();
                    let mut failure = None;
                    let mut negative = 0;
                    if x.get(&lead) != Rational::one() {
                        failure = Some(format!("coefficient of m_{lead} in <-e_{lam} is {}", x.get(&lead)));
                    }
                    for (om, c) in x.terms() {
                        if !c.is_integer() {
                            failure.get_or_insert_with(|| format!("non-integer coefficient {c} of m_{om} in <-e_{lam}"));
                        }
                        if *c < Rational::zero() {
                            negative += 1;
                        }
                        if *om != lead && !(bruhat_leq(om, &lead).unwrap_or(false)) {
                            failure.get_or_insert_with(|| format!("m_{om} in <-e_{lam} is not below {lead}"));
                        }
                    }
                    (lam.to_string(), failure, negative)
                })
                .collect();
            for (_, failure, neg) in results {
                checked += 1;
                negative += neg;
                if let Some(f) = failure {
                    report.fail(f);
                }
            }
        }
    }
    report.param("superpartitions", checked).param("negative_coefficients", negative)
}
