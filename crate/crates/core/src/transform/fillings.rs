//! Structure constants of the monomial basis from signed fillings.
//!
//! The rows of `D[Λ]` (letters `a`) and of `D[Ω]` (letters `b`) are placed
//! whole into distinct rows of `D[Γ]`; a circled row of `Γ` takes exactly one
//! labeled row, an uncircled one none. Within a row the unlabeled `a`s come
//! first, so a filling is determined by which source rows land in which target
//! row. Unlabeled source rows of equal length are interchangeable.

use super::BasisExpansion;
use crate::bases::BasisName;
use crate::rational::{int, Rational};
use crate::superpartition::{enumerate, Diagram, SuperPartition};
use std::collections::HashMap;
use std::fmt;

/// A labeled letter: `a_i` or `b_j`, labels starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    A(usize),
    B(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A(i) => write!(f, "a{i}"),
            Letter::B(j) => write!(f, "b{j}"),
        }
    }
}

/// Content of one row of `D[Γ]`: the lengths of the `a` and `b` rows placed
/// in it, and the letter in its circle if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowFill {
    pub a_len: Option<usize>,
    pub b_len: Option<usize>,
    pub circle: Option<Letter>,
}

impl fmt::Display for RowFill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<String> = Vec::new();
        cells.extend(std::iter::repeat("a".to_string()).take(self.a_len.unwrap_or(0)));
        cells.extend(std::iter::repeat("b".to_string()).take(self.b_len.unwrap_or(0)));
        if let Some(l) = self.circle {
            cells.push(format!("({l})"));
        }
        f.write_str(&cells.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filling {
    pub target: Diagram,
    pub rows: Vec<RowFill>,
    pub weight: i64,
}

impl Filling {
    /// Labeled letters read top to bottom.
    pub fn circle_word(&self) -> Vec<Letter> {
        self.rows.iter().filter_map(|r| r.circle).collect()
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}] weight {}", rows.join(" | "), self.weight)
    }
}

/// Source rows still to be placed from one diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Source {
    /// `counts[l]`: unlabeled rows of length `l` (index 0 unused).
    counts: Vec<u8>,
    /// Lengths of the labeled rows, label `i + 1` at index `i`.
    labeled: Vec<usize>,
    used: u64,
}

impl Source {
    fn new(sp: &SuperPartition, width: usize) -> Self {
        let mut counts = vec![0u8; width + 1];
        for &p in sp.sym() {
            counts[p] += 1;
        }
        Source { counts, labeled: sp.antisym().to_vec(), used: 0 }
    }

    fn exhausted(&self) -> bool {
        self.counts.iter().all(|&c| c == 0) && self.used.count_ones() as usize == self.labeled.len()
    }

    /// `(length, label)` options for one target row of length at most `len`;
    /// `None` is always an option.
    fn options(&self, len: usize) -> Vec<Option<(usize, Option<usize>)>> {
        let mut out = vec![None];
        for (l, &c) in self.counts.iter().enumerate().skip(1) {
            if c > 0 && l <= len {
                out.push(Some((l, None)));
            }
        }
        for (i, &l) in self.labeled.iter().enumerate() {
            if self.used & (1 << i) == 0 && l <= len {
                out.push(Some((l, Some(i))));
            }
        }
        out
    }

    fn take(&self, choice: Option<(usize, Option<usize>)>) -> Source {
        let mut next = self.clone();
        match choice {
            None => {}
            Some((l, None)) => next.counts[l] -= 1,
            Some((_, Some(i))) => next.used |= 1 << i,
        }
        next
    }
}

struct Problem {
    rows: Vec<(usize, bool)>,
    m_a: usize,
}

type Choice = Option<(usize, Option<usize>)>;

impl Problem {
    fn new(g: &SuperPartition, m_a: usize) -> Self {
        Problem { rows: g.circled_parts(), m_a }
    }

    /// Valid `(a, b, circled letter code)` choices for target row `r`.
    fn choices(&self, r: usize, a: &Source, b: &Source) -> Vec<(Choice, Choice, Option<usize>)> {
        let (len, circled) = self.rows[r];
        let mut out = Vec::new();
        for ca in a.options(len) {
            for cb in b.options(len) {
                let total = ca.map_or(0, |c| c.0) + cb.map_or(0, |c| c.0);
                let label_a = ca.and_then(|c| c.1);
                let label_b = cb.and_then(|c| c.1);
                let labels = usize::from(label_a.is_some()) + usize::from(label_b.is_some());
                if total != len || labels != usize::from(circled) || (ca.is_none() && cb.is_none()) {
                    continue;
                }
                let code = label_a.or(label_b.map(|j| self.m_a + j));
                out.push((ca, cb, code));
            }
        }
        out
    }

    fn count(&self, r: usize, a: Source, b: Source, placed: u64, memo: &mut HashMap<(usize, Source, Source, u64), i64>) -> i64 {
        if r == self.rows.len() {
            return i64::from(a.exhausted() && b.exhausted());
        }
        let key = (r, a, b, placed);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let (_, a, b, _) = &key;
        let mut total = 0;
        for (ca, cb, code) in self.choices(r, a, b) {
            let (sign, placed) = place(placed, code);
            total += sign * self.count(r + 1, a.take(ca), b.take(cb), placed, memo);
        }
        memo.insert(key.clone(), total);
        total
    }

    fn list(&self, r: usize, a: &Source, b: &Source, placed: u64, sign: i64, acc: &mut Vec<RowFill>, out: &mut Vec<Vec<RowFill>>, signs: &mut Vec<i64>) {
        if r == self.rows.len() {
            if a.exhausted() && b.exhausted() {
                out.push(acc.clone());
                signs.push(sign);
            }
            return;
        }
        for (ca, cb, code) in self.choices(r, a, b) {
            let (s, next) = place(placed, code);
            let circle = code.map(|c| if c < self.m_a { Letter::A(c + 1) } else { Letter::B(c - self.m_a + 1) });
            acc.push(RowFill { a_len: ca.map(|c| c.0), b_len: cb.map(|c| c.0), circle });
            self.list(r + 1, &a.take(ca), &b.take(cb), next, sign * s, acc, out, signs);
            acc.pop();
        }
    }
}

/// Appends a letter with sorting code `code` below the ones in `placed`; the
/// sign counts the earlier letters that must move past it.
fn place(placed: u64, code: Option<usize>) -> (i64, u64) {
    match code {
        None => (1, placed),
        Some(c) => {
            let inversions = (placed >> (c + 1)).count_ones();
            (if inversions % 2 == 1 { -1 } else { 1 }, placed | (1 << c))
        }
    }
}

fn compatible(a: &SuperPartition, b: &SuperPartition, g: &SuperPartition) -> bool {
    let (n1, m1) = a.bidegree();
    let (n2, m2) = b.bidegree();
    g.bidegree() == (n1 + n2, m1 + m2)
}

fn sources(a: &SuperPartition, b: &SuperPartition, g: &SuperPartition) -> (Source, Source) {
    let width = a.parts().chain(b.parts()).chain(g.parts()).max().unwrap_or(0);
    (Source::new(a, width), Source::new(b, width))
}

/// `N^Γ_{Λ,Ω}`: the signed number of fillings of `D[Γ]` by `D[Λ]` and `D[Ω]`.
/// Zero when the bidegrees do not add up.
pub fn mono_product_fillings(a: &SuperPartition, b: &SuperPartition, g: &SuperPartition) -> Rational {
    if !compatible(a, b, g) {
        return int(0);
    }
    let problem = Problem::new(g, a.fermionic_degree());
    let (sa, sb) = sources(a, b, g);
    int(problem.count(0, sa, sb, 0, &mut HashMap::new()))
}

/// Every filling of `D[Γ]` by `D[Λ]` and `D[Ω]`, with its weight.
pub fn fillings(a: &SuperPartition, b: &SuperPartition, g: &SuperPartition) -> Vec<Filling> {
    if !compatible(a, b, g) {
        return Vec::new();
    }
    let problem = Problem::new(g, a.fermionic_degree());
    let (sa, sb) = sources(a, b, g);
    let (mut rows, mut signs) = (Vec::new(), Vec::new());
    problem.list(0, &sa, &sb, 0, 1, &mut Vec::new(), &mut rows, &mut signs);
    rows.into_iter()
        .zip(signs)
        .map(|(rows, weight)| Filling { target: g.diagram(), rows, weight })
        .collect()
}

/// `m_Λ m_Ω = Σ_Γ N^Γ_{Λ,Ω} m_Γ`.
pub fn mono_product(a: &SuperPartition, b: &SuperPartition) -> BasisExpansion {
    let (n1, m1) = a.bidegree();
    let (n2, m2) = b.bidegree();
    let (n, m) = (n1 + n2, m1 + m2);
    let mut out = BasisExpansion::new(BasisName::M, n, m);
    for g in enumerate(n, m, Some(a.len() + b.len())) {
        let c = mono_product_fillings(a, b, &g);
        out.add_term(g, c).expect("bidegree matches");
    }
    out
}
