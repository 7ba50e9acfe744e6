//! Enumeration of `SPar(n|m)` and the check of its counting series.

use super::SuperPartition;
use crate::report::Report;

/// Strictly decreasing sequences of `len` non-negative parts below `bound`
/// summing to `total`.
fn distinct_parts(total: usize, len: usize, bound: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if len == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    // The remaining len-1 parts are distinct and below `part`; the smallest
    // they can sum to is (len-1)(len-2)/2.
    let floor = (len - 1) * len.saturating_sub(2) / 2;
    for part in (0..bound.min(total + 1)).rev() {
        if part + 1 < len || part + floor > total {
            continue;
        }
        prefix.push(part);
        distinct_parts(total - part, len - 1, part, prefix, out);
        prefix.pop();
    }
}

/// Partitions of `total` with parts at most `bound` and at most `max_parts`
/// parts, in reverse lexicographic order.
fn partitions(total: usize, bound: usize, max_parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    if max_parts == 0 {
        return;
    }
    for part in (1..=bound.min(total)).rev() {
        prefix.push(part);
        partitions(total - part, part, max_parts - 1, prefix, out);
        prefix.pop();
    }
}

/// All `Λ ⊢ (n|m)`, optionally with `ℓ(Λ) ≤ max_len`.
///
/// The list is sorted by `C[Λ]` in decreasing lexicographic order, where a
/// circled entry ranks just above an uncircled entry of the same value (see
/// [`SuperPartition::listing_cmp`]). For `SPar(3|2)` this gives
/// `(3,0;) (2,1;) (2,0;1) (1,0;2) (1,0;1,1)`.
pub fn enumerate(n: usize, m: usize, max_len: Option<usize>) -> Vec<SuperPartition> {
    let max_len = max_len.unwrap_or(usize::MAX);
    if m > max_len || n < m * m.saturating_sub(1) / 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let min_antisym = m * m.saturating_sub(1) / 2;
    for antisym_total in min_antisym..=n {
        let mut antisyms = Vec::new();
        distinct_parts(antisym_total, m, antisym_total + 1, &mut Vec::new(), &mut antisyms);
        if antisyms.is_empty() {
            continue;
        }
        let mut syms = Vec::new();
        let rest = n - antisym_total;
        partitions(rest, rest, max_len - m, &mut Vec::new(), &mut syms);
        for a in &antisyms {
            for s in &syms {
                out.push(SuperPartition {
                    antisym: a.clone(),
                    sym: s.clone(),
                });
            }
        }
    }
    out.sort_by(|a, b| b.listing_cmp(a));
    out
}

/// Coefficients `[m][p][n]` of `(-z;q)_∞ / (yq;q)_∞` up to `q^n_max`,
/// expanded directly from the two products.
pub fn generating_coefficients(n_max: usize) -> Vec<Vec<Vec<u128>>> {
    let m_max = (0..=n_max + 1).take_while(|m| m * m.saturating_sub(1) / 2 <= n_max).count();
    let p_max = n_max;
    // numerator: ∏_{k≥0} (1 + z q^k), indexed [m][n]
    let mut fermions = vec![vec![0u128; n_max + 1]; m_max + 1];
    fermions[0][0] = 1;
    for k in 0..=n_max {
        for m in (1..=m_max).rev() {
            for n in (k..=n_max).rev() {
                fermions[m][n] += fermions[m - 1][n - k];
            }
        }
    }
    // denominator: ∏_{k≥1} 1/(1 - y q^k), indexed [p][n]
    let mut bosons = vec![vec![0u128; n_max + 1]; p_max + 1];
    bosons[0][0] = 1;
    for k in 1..=n_max {
        for p in 1..=p_max {
            for n in k..=n_max {
                bosons[p][n] += bosons[p - 1][n - k];
            }
        }
    }
    let mut out = vec![vec![vec![0u128; n_max + 1]; p_max + 1]; m_max + 1];
    for m in 0..=m_max {
        for p in 0..=p_max {
            for n in 0..=n_max {
                out[m][p][n] = (0..=n).map(|k| fermions[m][k] * bosons[p][n - k]).sum();
            }
        }
    }
    out
}

/// Compares enumeration counts against the series `(-z;q)_∞/(yq;q)_∞` for
/// every `n ≤ n_max`.
///
/// The coefficient of `z^m y^p q^n` counts superpartitions of `(n|m)` with
/// length exactly `m + p`; it is compared with
/// `|enumerate(n, m, m+p)| - |enumerate(n, m, m+p-1)|`. The cumulative counts
/// `|enumerate(n, m, m+p)|` are compared with the same series divided by
/// `1 - y`.
pub fn count_check(n_max: usize) -> Report {
    let mut report = Report::new("counting").param("n_max", n_max);
    let coeffs = generating_coefficients(n_max);
    let mut compared = 0usize;
    for (m, by_p) in coeffs.iter().enumerate() {
        for n in 0..=n_max {
            let total = enumerate(n, m, None).len() as u128;
            let mut cumulative_series = 0u128;
            let mut previous = if m == 0 { 0 } else { enumerate(n, m, Some(m - 1)).len() as u128 };
            for (p, by_n) in by_p.iter().enumerate() {
                let bounded = enumerate(n, m, Some(m + p)).len() as u128;
                let exact = bounded - previous;
                previous = bounded;
                cumulative_series += by_n[n];
                compared += 1;
                report.check(exact == by_n[n], || {
                    format!("z^{m} y^{p} q^{n}: series {} vs {} superpartitions of length {}", by_n[n], exact, m + p)
                });
                report.check(bounded == cumulative_series, || {
                    format!("s_{}({n}|{m}) = {bounded} vs cumulative series {cumulative_series}", m + p)
                });
            }
            // p ranges far enough that every superpartition has been counted.
            report.check(previous == total, || format!("SPar({n}|{m}) has {total} elements, counted {previous}"));
        }
    }
    report.param("coefficients_compared", compared)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sps(list: &[&str]) -> Vec<SuperPartition> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn spar_3_2_in_listing_order() {
        assert_eq!(
            enumerate(3, 2, None),
            sps(&["(3,0;)", "(2,1;)", "(2,0;1)", "(1,0;2)", "(1,0;1,1)"])
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate(0, 1, None), sps(&["(0;)"]));
        assert_eq!(enumerate(0, 0, None), vec![SuperPartition::empty()]);
        assert!(enumerate(1, 3, None).is_empty());
        assert_eq!(enumerate(2, 1, None), sps(&["(2;)", "(0;2)", "(1;1)", "(0;1,1)"]));
        assert_eq!(enumerate(3, 2, Some(3)).len(), 4);
    }

    #[test]
    fn empty_exactly_below_threshold() {
        for m in 0..6 {
            for n in 0..12 {
                assert_eq!(enumerate(n, m, None).is_empty(), n < m * m.saturating_sub(1) / 2, "({n}|{m})");
            }
        }
    }

    #[test]
    fn series_low_orders() {
        let c = generating_coefficients(4);
        assert_eq!(c[1][0][0], 1);
        assert_eq!(c[0][0][0], 1);
        // partitions of 4 with exactly 2 parts: (3,1), (2,2)
        assert_eq!(c[0][2][4], 2);
    }

    #[test]
    fn counting_matches_series() {
        let r = count_check(8);
        assert!(r.pass, "{r}");
    }
}
