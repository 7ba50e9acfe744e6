use super::leading_monomial;
use crate::bases::{self, BasisName};
use crate::linalg::{invert, Matrix};
use crate::rational::Rational;
use crate::superpartition::{enumerate, SuperPartition};
use crate::superpoly::{Monomial, MAX_VARS};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) struct Block {
    pub index: Vec<SuperPartition>,
    pub pos: HashMap<SuperPartition, usize>,
    /// Row `Λ` holds the monomial coefficients of `b_Λ`.
    pub to_mono: Matrix,
    pub from_mono: Matrix,
}

type Cache = RwLock<HashMap<(BasisName, usize, usize), Arc<Block>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn block(basis: BasisName, n: usize, m: usize) -> Arc<Block> {
    if let Some(b) = cache().read().unwrap().get(&(basis, n, m)) {
        return b.clone();
    }
    let built = Arc::new(build(basis, n, m));
    cache().write().unwrap().entry((basis, n, m)).or_insert(built).clone()
}

/// Accepts the monomials that divide some `θ_1···θ_m x^Ω` with `Ω ⊢ (n|m)`:
/// θ's only in the first `m` positions, and the cheapest way to complete the
/// exponents into such a shape costs at most `n`.
pub(crate) fn divides_leading(n: usize, m: usize, nvars: usize) -> impl Fn(&Monomial) -> bool + Copy {
    let allowed: u64 = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
    move |mono: &Monomial| {
        if mono.theta_mask() & !allowed != 0 {
            return false;
        }
        let mut e = [0u32; MAX_VARS];
        for (i, p) in mono.exponents() {
            e[i] = p;
        }
        let mut total = 0usize;
        let mut below: Option<u32> = None;
        for &v in e[..m].iter().rev() {
            let v = below.map_or(v, |w| v.max(w + 1));
            total += v as usize;
            below = Some(v);
        }
        let mut run = 0u32;
        for &v in e[m..nvars].iter().rev() {
            run = run.max(v);
            total += run as usize;
        }
        total <= n
    }
}

fn build(basis: BasisName, n: usize, m: usize) -> Block {
    let index = enumerate(n, m, None);
    let pos: HashMap<SuperPartition, usize> = index.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let size = index.len();
    let to_mono: Matrix = if basis == BasisName::M {
        (0..size)
            .map(|i| (0..size).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        let nvars = n + m + 1;
        let keep = divides_leading(n, m, nvars);
        let leads: Vec<Monomial> = index.iter().map(leading_monomial).collect();
        index
            .par_iter()
            .map(|sp| {
                let f = bases::multiplicative_filtered(basis, sp, nvars, false, keep).expect("nvars within bounds");
                leads.iter().map(|lead| f.coefficient(lead)).collect()
            })
            .collect()
    };
    let from_mono = invert(&to_mono).expect("basis block is invertible");
    Block { index, pos, to_mono, from_mono }
}
