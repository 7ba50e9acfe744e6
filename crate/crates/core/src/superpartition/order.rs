//! Orders on superpartitions.
//!
//! [`bruhat_leq`] uses the characterisation through `Λ*` and `sh(D[Λ])`;
//! [`bruhat_leq_by_moves`] recomputes the same relation by closing compositions
//! under the elementary `S` and `T` moves, and exists to cross-check it.

use super::{conjugate_partition, enumerate, Composition, Partition, SuperPartition};
use crate::report::Report;
use crate::error::{Error, Result};
use std::collections::{HashSet, VecDeque};

/// Dominance `a ≤ b` for partitions of the same size (shorter ones padded with
/// zeros).
pub fn partition_dominates(b: &[usize], a: &[usize]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for k in 0..len {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

fn same_bidegree(a: &SuperPartition, b: &SuperPartition) -> Result<()> {
    if a.bidegree() != b.bidegree() {
        return Err(Error::BidegreeMismatch {
            left: a.bidegree(),
            right: b.bidegree(),
        });
    }
    Ok(())
}

/// Bruhat order `a ≤ b`: `a* < b*` in dominance, or `a* = b*` and
/// `sh(D[a]) ≤ sh(D[b])`.
pub fn bruhat_leq(a: &SuperPartition, b: &SuperPartition) -> Result<bool> {
    same_bidegree(a, b)?;
    let (sa, sb) = (a.star(), b.star());
    if sa != sb {
        return Ok(partition_dominates(&sb, &sa));
    }
    Ok(partition_dominates(&b.diagram().shape(), &a.diagram().shape()))
}

/// The older dominance order `≤_D`: `a* < b*`, or `a* = b*` and the partial sums
/// of `a^c` are bounded by those of `b^c`. Strictly coarser than Bruhat.
pub fn dominance_leq(a: &SuperPartition, b: &SuperPartition) -> Result<bool> {
    same_bidegree(a, b)?;
    let (sa, sb) = (a.star(), b.star());
    if sa != sb {
        return Ok(partition_dominates(&sb, &sa));
    }
    let ca: Vec<usize> = a.parts().collect();
    let cb: Vec<usize> = b.parts().collect();
    Ok(partition_dominates(&cb, &ca))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// `S_ij`: move one unit from position `i` to `j` when `λ_i - λ_j > 1`.
    S,
    /// `T_ij`: swap positions `i` and `j` when `λ_i > λ_j`.
    T,
}

/// Applies `S_ij` or `T_ij` (0-based `i < j`); the identity when the move's
/// condition fails.
pub fn apply_move(kind: Move, i: usize, j: usize, c: &Composition) -> Composition {
    assert!(i < j && j < c.0.len(), "move indices out of range");
    let mut out = c.clone();
    let (li, lj) = (c.0[i], c.0[j]);
    match kind {
        Move::S if li > lj + 1 => {
            out.0[i] -= 1;
            out.0[j] += 1;
        }
        Move::T if li > lj => out.0.swap(i, j),
        _ => {}
    }
    out
}

fn closure(start: Composition, kind: Move) -> HashSet<Composition> {
    let len = start.0.len();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for i in 0..len {
            for j in i + 1..len {
                let next = apply_move(kind, i, j, &c);
                if next != c && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Bruhat order recomputed from move closures: `a ≤ b` iff `a*` is reachable
/// from `b*` by `S` moves (with `a* ≠ b*`), or `a^c` is reachable from `b^c` by
/// `T` moves. Compositions are padded to length `n + m`. Exponential; intended
/// as a reference for small degrees.
pub fn bruhat_leq_by_moves(a: &SuperPartition, b: &SuperPartition) -> Result<bool> {
    same_bidegree(a, b)?;
    let (n, m) = a.bidegree();
    let len = (n + m).max(1);
    let (sa, sb) = (a.star(), b.star());
    if sa != sb {
        let pad = |p: Partition| Composition(p).padded(len);
        return Ok(closure(pad(sb), Move::S).contains(&pad(sa)));
    }
    let target = a.composition().padded(len);
    Ok(closure(b.composition().padded(len), Move::T).contains(&target))
}

/// Exhaustive order properties on `SPar(n|m)` for `n ≤ n_max`: conjugation is
/// an involution commuting with `*`, the Bruhat order is anti-conjugate and
/// implies dominance, and for `n ≤ moves_max` it agrees with the move-closure
/// characterization.
pub fn order_check(n_max: usize, moves_max: usize) -> Report {
    let mut report = Report::new("orders").param("n_max", n_max).param("moves_max", moves_max);
    let mut pairs = 0usize;
    for n in 0..=n_max {
        for m in 0..=n + 1 {
            let all = enumerate(n, m, None);
            for lam in &all {
                let conj = lam.conjugate();
                report.check(conj.conjugate() == *lam, || format!("{lam}'' != {lam}"));
                report.check(conjugate_partition(&lam.star()) == conj.star(), || {
                    format!("conjugation does not commute with * on {lam}")
                });
                for om in &all {
                    pairs += 1;
                    let leq = bruhat_leq(om, lam).expect("same bidegree");
                    let anti = bruhat_leq(&conj, &om.conjugate()).expect("same bidegree");
                    report.check(leq == anti, || format!("anti-conjugation fails for {om} <= {lam}"));
                    if leq {
                        report.check(dominance_leq(om, lam).expect("same bidegree"), || {
                            format!("{om} <= {lam} in Bruhat but not in dominance")
                        });
                    }
                    if n <= moves_max {
                        let by_moves = bruhat_leq_by_moves(om, lam).expect("same bidegree");
                        report.check(leq == by_moves, || format!("move closure disagrees on {om} <= {lam}"));
                    }
                }
            }
        }
    }
    report.param("pairs", pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn moves() {
        assert_eq!(
            apply_move(Move::S, 0, 1, &Composition(vec![3, 0])),
            Composition(vec![2, 1])
        );
        assert_eq!(
            apply_move(Move::T, 0, 1, &Composition(vec![2, 1])),
            Composition(vec![1, 2])
        );
        assert_eq!(
            apply_move(Move::S, 0, 1, &Composition(vec![2, 1])),
            Composition(vec![2, 1])
        );
        assert_eq!(
            apply_move(Move::T, 0, 1, &Composition(vec![1, 2])),
            Composition(vec![1, 2])
        );
    }

    #[test]
    fn dominance_counterexample() {
        let lam = sp("(5,2,1;4,3,3)");
        let om = sp("(4,3,0;5,3,2,1)");
        assert!(!bruhat_leq(&om, &lam).unwrap());
        assert!(!bruhat_leq(&lam, &om).unwrap());
        assert!(dominance_leq(&om, &lam).unwrap());
        assert!(!dominance_leq(&lam, &om).unwrap());
    }

    #[test]
    fn mismatched_bidegrees_are_errors() {
        assert!(bruhat_leq(&sp("(1;)"), &sp("(;1)")).is_err());
        assert!(dominance_leq(&sp("(1;)"), &sp("(;2)")).is_err());
    }

    #[test]
    fn small_chain() {
        // SPar(1|1) = {(1;), (0;1)} with (0;1) < (1;).
        assert!(bruhat_leq(&sp("(0;1)"), &sp("(1;)")).unwrap());
        assert!(!bruhat_leq(&sp("(1;)"), &sp("(0;1)")).unwrap());
        assert!(bruhat_leq_by_moves(&sp("(0;1)"), &sp("(1;)")).unwrap());
        assert!(!bruhat_leq_by_moves(&sp("(1;)"), &sp("(0;1)")).unwrap());
    }

    #[test]
    fn order_properties_small() {
        let r = order_check(4, 4);
        assert!(r.pass, "{r}");
    }
}
