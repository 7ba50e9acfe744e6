use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of variables of each kind.
pub const MAX_VARS: usize = 64;

/// `θ_{j1}···θ_{jm} x^μ` with `j1 < ... < jm`.
///
/// The fermionic indices are held as a bit set, which fixes the canonical
/// increasing order; exponents are a sparse list sorted by variable index with
/// no zero entries. Any sign produced by reordering θ's is carried by the
/// coefficient, never by the monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    theta: u64,
    exps: SmallVec<[(u16, u16); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds the monomial for `θ_{j1}···θ_{jm}` (in the given order) times
    /// `x^exps`. Returns `None` when an index repeats, otherwise the sign of the
    /// reordering (`true` for odd) and the canonical monomial.
    pub fn from_parts(theta: &[usize], exps: &[(usize, u32)]) -> Option<(bool, Monomial)> {
        let mut set = 0u64;
        let mut odd = false;
        for &j in theta {
            let bit = 1u64 << j;
            if set & bit != 0 {
                return None;
            }
            // θ_j moves left past every already-placed index greater than j.
            odd ^= (set & !(bit | (bit - 1))).count_ones() % 2 == 1;
            set |= bit;
        }
        let mut list: SmallVec<[(u16, u16); 6]> = SmallVec::new();
        for &(i, e) in exps {
            if e == 0 {
                continue;
            }
            list.push((i as u16, e as u16));
        }
        list.sort_unstable();
        let mut merged: SmallVec<[(u16, u16); 6]> = SmallVec::new();
        for (i, e) in list {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => merged.push((i, e)),
            }
        }
        Some((odd, Monomial { theta: set, exps: merged }))
    }

    pub fn theta(j: usize) -> Self {
        Monomial {
            theta: 1 << j,
            exps: SmallVec::new(),
        }
    }

    pub fn x(i: usize, e: u32) -> Self {
        let mut exps = SmallVec::new();
        if e > 0 {
            exps.push((i as u16, e as u16));
        }
        Monomial { theta: 0, exps }
    }

    pub fn theta_mask(&self) -> u64 {
        self.theta
    }

    pub fn theta_indices(&self) -> Vec<usize> {
        bits(self.theta).collect()
    }

    pub fn has_theta(&self, j: usize) -> bool {
        self.theta & (1 << j) != 0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v as usize == i)
            .map_or(0, |&(_, e)| e as u32)
    }

    /// Non-zero `(index, exponent)` pairs in increasing index order.
    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|&(i, e)| (i as usize, e as u32))
    }

    pub fn fermionic_degree(&self) -> usize {
        self.theta.count_ones() as usize
    }

    pub fn bosonic_degree(&self) -> usize {
        self.exps.iter().map(|&(_, e)| e as usize).sum()
    }

    /// Total exponent of the bosonic variables selected by `mask`.
    pub fn degree_in(&self, mask: u64) -> usize {
        self.exps
            .iter()
            .filter(|&&(i, _)| mask & (1 << i) != 0)
            .map(|&(_, e)| e as usize)
            .sum()
    }

    /// Highest variable index used, plus one.
    pub fn span(&self) -> usize {
        let t = 64 - self.theta.leading_zeros() as usize;
        let x = self.exps.last().map_or(0, |&(i, _)| i as usize + 1);
        t.max(x)
    }

    /// Product `self · other`: `None` if a θ repeats, else the sign of bringing
    /// the concatenated θ's into increasing order and the product monomial.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        if self.theta & other.theta != 0 {
            return None;
        }
        let mut odd = false;
        let mut rest = other.theta;
        while rest != 0 {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            let above = if j == 63 { 0 } else { self.theta >> (j + 1) };
            odd ^= above.count_ones() % 2 == 1;
        }
        let mut exps: SmallVec<[(u16, u16); 6]> = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Some((odd, Monomial { theta: self.theta | other.theta, exps }))
    }

    /// Relabels variable `k` as `perm[k]` for both kinds. Returns the sign of
    /// re-sorting the θ's.
    pub fn permuted(&self, perm: &[usize]) -> (bool, Monomial) {
        let theta: Vec<usize> = bits(self.theta).map(|j| perm[j]).collect();
        let exps: Vec<(usize, u32)> = self.exponents().map(|(i, e)| (perm[i], e)).collect();
        Monomial::from_parts(&theta, &exps).expect("permutation keeps θ indices distinct")
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Monomial {
        Monomial {
            theta: self.theta << offset,
            exps: self.exps.iter().map(|&(i, e)| (i + offset as u16, e)).collect(),
        }
    }

    /// Removes the bosonic variables in `mask` and the fermionic variables in
    /// `theta_mask`, returning what is left.
    pub fn without(&self, mask: u64, theta_mask: u64) -> Monomial {
        Monomial {
            theta: self.theta & !theta_mask,
            exps: self
                .exps
                .iter()
                .copied()
                .filter(|&(i, _)| mask & (1 << i) == 0)
                .collect(),
        }
    }

    /// Splits into the factor using only variables below `cut` and the rest.
    pub fn split_at(&self, cut: usize) -> (Monomial, Monomial) {
        let low_mask = if cut >= 64 { u64::MAX } else { (1u64 << cut) - 1 };
        let low = Monomial {
            theta: self.theta & low_mask,
            exps: self.exps.iter().copied().filter(|&(i, _)| (i as usize) < cut).collect(),
        };
        let high = Monomial {
            theta: self.theta & !low_mask,
            exps: self.exps.iter().copied().filter(|&(i, _)| (i as usize) >= cut).collect(),
        };
        (low, high)
    }
}

pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let j = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(j)
        }
    })
}

impl Ord for Monomial {
    /// Fermionic degree, then θ indices lexicographically, then bosonic
    /// degree (high first), then exponents by variable index.
    fn cmp(&self, other: &Self) -> Ordering {
        self.fermionic_degree()
            .cmp(&other.fermionic_degree())
            .then_with(|| bits(self.theta).cmp(bits(other.theta)))
            .then_with(|| other.bosonic_degree().cmp(&self.bosonic_degree()))
            .then_with(|| {
                let dense = |m: &Monomial| {
                    let mut v = vec![0u16; m.span()];
                    for &(i, e) in &m.exps {
                        v[i as usize] = e;
                    }
                    v
                };
                dense(other).cmp(&dense(self))
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x1^2 * x3 * t1 t2`, indices 1-based; `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = self
            .exponents()
            .map(|(i, e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        if self.theta != 0 {
            factors.push(bits(self.theta).map(|j| format!("t{}", j + 1)).collect::<Vec<_>>().join(" "));
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join(" * "))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
