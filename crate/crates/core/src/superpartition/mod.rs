//! Superpartitions and their circled diagrams.
//!
//! A superpartition `(Λ^a; Λ^s)` pairs a strictly decreasing sequence (which may
//! end in `0`) with an ordinary partition. Its text form is
//! `(a1,...,am;s1,...,sk)`; either side may be empty. Its JSON form is
//! `{"a": [...], "s": [...]}`.

mod enumerate;
mod order;

pub use enumerate::{count_check, enumerate, generating_coefficients};
pub use order::{
    apply_move, bruhat_leq, bruhat_leq_by_moves, dominance_leq, order_check, partition_dominates, Move,
};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// An ordinary partition: weakly decreasing, no zero parts.
pub type Partition = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSuperPartition", into = "RawSuperPartition")]
pub struct SuperPartition {
    antisym: Vec<usize>,
    sym: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawSuperPartition {
    a: Vec<usize>,
    s: Vec<usize>,
}

impl TryFrom<RawSuperPartition> for SuperPartition {
    type Error = Error;

    fn try_from(raw: RawSuperPartition) -> Result<Self> {
        SuperPartition::new(raw.a, raw.s)
    }
}

impl From<SuperPartition> for RawSuperPartition {
    fn from(sp: SuperPartition) -> Self {
        RawSuperPartition {
            a: sp.antisym,
            s: sp.sym,
        }
    }
}

impl SuperPartition {
    /// Builds a superpartition, stripping trailing zeros from the symmetric
    /// part. Zeros in the antisymmetric part are kept: they are fermions.
    pub fn new(antisym: Vec<usize>, mut sym: Vec<usize>) -> Result<Self> {
        if antisym.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::AntisymNotStrict(antisym));
        }
        if sym.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::SymNotDecreasing(sym));
        }
        while sym.last() == Some(&0) {
            sym.pop();
        }
        Ok(SuperPartition { antisym, sym })
    }

    /// A superpartition in the zero-fermion sector.
    pub fn bosonic(parts: Vec<usize>) -> Result<Self> {
        SuperPartition::new(Vec::new(), parts)
    }

    pub fn empty() -> Self {
        SuperPartition {
            antisym: Vec::new(),
            sym: Vec::new(),
        }
    }

    pub fn antisym(&self) -> &[usize] {
        &self.antisym
    }

    pub fn sym(&self) -> &[usize] {
        &self.sym
    }

    /// Bosonic degree `|Λ|`.
    pub fn degree(&self) -> usize {
        self.antisym.iter().sum::<usize>() + self.sym.iter().sum::<usize>()
    }

    /// Fermionic degree `m`.
    pub fn fermionic_degree(&self) -> usize {
        self.antisym.len()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.degree(), self.fermionic_degree())
    }

    /// `ℓ(Λ) = m + #{nonzero symmetric parts}`; a zero fermion counts.
    pub fn len(&self) -> usize {
        self.antisym.len() + self.sym.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The parts in superpartition order `(Λ^a, Λ^s)`, i.e. the composition
    /// `Λ^c`.
    pub fn parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.antisym.iter().chain(self.sym.iter()).copied()
    }

    pub fn composition(&self) -> Composition {
        Composition(self.parts().collect())
    }

    /// `Λ*`: all parts reordered, zeros dropped.
    pub fn star(&self) -> Partition {
        let mut parts: Vec<usize> = self.parts().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// `C[Λ]` as `(value, circled)` pairs. Among equal values the circled entry
    /// comes first, so circled zeros close the list.
    pub fn circled_parts(&self) -> Vec<(usize, bool)> {
        let mut entries: Vec<(usize, bool)> = self
            .antisym
            .iter()
            .map(|&v| (v, true))
            .chain(self.sym.iter().map(|&v| (v, false)))
            .collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        entries
    }

    /// The circled Ferrers diagram `D[Λ]`.
    pub fn diagram(&self) -> Diagram {
        let entries = self.circled_parts();
        Diagram {
            rows: entries.iter().map(|e| e.0).collect(),
            circled: entries.iter().map(|e| e.1).collect(),
        }
    }

    /// Transposes `D[Λ]`, circles included.
    pub fn conjugate(&self) -> SuperPartition {
        let diagram = self.diagram();
        let shape = diagram.shape();
        let transposed = conjugate_partition(&shape);
        // A circle closing row i (of length L) lands at the end of transposed row L.
        let mut circled = vec![false; transposed.len()];
        for (row, &len) in diagram.rows.iter().enumerate() {
            if diagram.circled[row] {
                debug_assert_eq!(transposed[len], row + 1);
                circled[len] = true;
            }
        }
        let mut antisym = Vec::new();
        let mut sym = Vec::new();
        for (r, &len) in transposed.iter().enumerate() {
            if circled[r] {
                antisym.push(len - 1);
            } else {
                sym.push(len);
            }
        }
        SuperPartition { antisym, sym }
    }

    /// Ordering key used by [`enumerate`]: `C[Λ]` compared lexicographically,
    /// a circled entry ranking above an uncircled one of the same value.
    pub fn listing_cmp(&self, other: &Self) -> Ordering {
        self.circled_parts().cmp(&other.circled_parts())
    }

    /// Run lengths `(value, count)` of the nonzero symmetric parts.
    pub(crate) fn sym_multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.sym {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Conjugate of an ordinary partition.
pub fn conjugate_partition(p: &[usize]) -> Partition {
    let width = p.first().copied().unwrap_or(0);
    (0..width)
        .map(|c| p.iter().take_while(|&&r| r > c).count())
        .collect()
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({};{})", join(&self.antisym), join(&self.sym))
    }
}

impl FromStr for SuperPartition {
    type Err = Error;

    /// Accepts `(a;s)` with either side empty, and `(s)` for the zero-fermion
    /// sector.
    fn from_str(input: &str) -> Result<Self> {
        let err = |token: &str| Error::Parse {
            input: input.to_string(),
            token: token.to_string(),
        };
        let trimmed = input.trim();
        let body = trimmed
            .strip_prefix('(')
            .ok_or_else(|| err(trimmed.get(..1).unwrap_or("")))?;
        let body = body.strip_suffix(')').ok_or_else(|| {
            let last = body.chars().last().map(|c| c.to_string());
            err(last.as_deref().unwrap_or("<end of input>"))
        })?;
        let parse_side = |side: &str| -> Result<Vec<usize>> {
            let side = side.trim();
            if side.is_empty() {
                return Ok(Vec::new());
            }
            side.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| err(tok.trim())))
                .collect()
        };
        let mut sides = body.split(';');
        let first = sides.next().unwrap_or("");
        let (antisym, sym) = match (sides.next(), sides.next()) {
            (None, _) => (Vec::new(), parse_side(first)?),
            (Some(second), None) => (parse_side(first)?, parse_side(second)?),
            (Some(_), Some(_)) => return Err(err(";")),
        };
        SuperPartition::new(antisym, sym).map_err(|e| match e {
            Error::AntisymNotStrict(v) | Error::SymNotDecreasing(v) => err(&format!("{v:?}")),
            other => other,
        })
    }
}

/// The circled diagram `D[Λ]`: row lengths, and which rows end in a circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    rows: Vec<usize>,
    circled: Vec<bool>,
}

impl Diagram {
    /// Box counts per row, circles excluded.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_circled(&self, row: usize) -> bool {
        self.circled.get(row).copied().unwrap_or(false)
    }

    /// Circled rows, 1-based as in printed diagrams.
    pub fn circled_rows(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| self.circled[r])
            .map(|r| r + 1)
            .collect()
    }

    /// `sh(D[Λ])`: each circle counts as a cell.
    pub fn shape(&self) -> Partition {
        self.rows
            .iter()
            .zip(&self.circled)
            .map(|(&r, &c)| r + usize::from(c))
            .collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&r, &c)) in self.rows.iter().zip(&self.circled).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}{}", "□".repeat(r), if c { "○" } else { "" })?;
        }
        Ok(())
    }
}

/// A finite sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn padded(mut self, len: usize) -> Self {
        if self.0.len() < len {
            self.0.resize(len, 0);
        }
        self
    }

    /// `λ^+`: parts sorted decreasingly, zeros dropped.
    pub fn sorted(&self) -> Partition {
        let mut p: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SuperPartition {
        s.parse().unwrap()
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            sp("(5,2,1,0;6,5,5,2,2,1)").star(),
            vec![6, 5, 5, 5, 2, 2, 2, 1, 1]
        );
        assert!(sp("(0;)").star().is_empty());
        assert_eq!(sp("(3,1,0;4,3,2,1)").star(), vec![4, 3, 3, 2, 1, 1]);
    }

    #[test]
    fn diagram_examples() {
        let d = sp("(3,1,0;4,3,2,1)").diagram();
        assert_eq!(d.rows(), &[4, 3, 3, 2, 1, 1, 0]);
        assert_eq!(d.circled_rows(), vec![2, 5, 7]);
        assert_eq!(d.shape(), vec![4, 4, 3, 2, 2, 1, 1]);

        let d = sp("(0;)").diagram();
        assert_eq!(d.rows(), &[0]);
        assert_eq!(d.circled_rows(), vec![1]);
        assert_eq!(d.shape(), vec![1]);

        let d = sp("(2,1;2)").diagram();
        assert_eq!(d.rows(), &[2, 2, 1]);
        assert_eq!(d.circled_rows(), vec![1, 3]);

        assert_eq!(sp("(5,2,1;4,3,3)").diagram().shape(), vec![6, 4, 3, 3, 3, 2]);
        assert_eq!(
            sp("(4,3,0;5,3,2,1)").diagram().shape(),
            vec![5, 5, 4, 3, 2, 1, 1]
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(sp("(3,1,0;4,3,2,1)").conjugate(), sp("(6,4,1;3)"));
        assert_eq!(sp("(0;)").conjugate(), sp("(0;)"));
        // D[(2,0;)] has rows ②, ⓪ with shape (3,1); the transpose has shape
        // (2,1,1) with circles closing rows 1 and 3.
        assert_eq!(sp("(2,0;)").conjugate(), sp("(1,0;1)"));
        assert_eq!(sp("(1,0;1)").conjugate(), sp("(2,0;)"));
        assert_eq!(sp("(;2,1)").conjugate(), sp("(;2,1)"));
        assert_eq!(sp("(;3)").conjugate(), sp("(;1,1,1)"));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(sp("(3,1;)").to_string(), "(3,1;)");
        assert_eq!(sp("(;2,1)").to_string(), "(;2,1)");
        assert_eq!(sp("(2,1)"), sp("(;2,1)"));
        assert_eq!(sp("(0;0)"), sp("(0;)"));
        assert_eq!(sp("( 1 , 0 ; 2 )").to_string(), "(1,0;2)");
        assert_eq!(sp("()"), SuperPartition::empty());
        assert_eq!(sp("(;)"), SuperPartition::empty());
    }

    #[test]
    fn parse_errors_name_the_token() {
        let e = "(3,x;1)".parse::<SuperPartition>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == "x"), "{e}");
        let e = "3,1;1)".parse::<SuperPartition>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == "3"), "{e}");
        let e = "(1,1;)".parse::<SuperPartition>().unwrap_err();
        assert!(matches!(e, Error::Parse { .. }), "{e}");
        let e = "(1;2;3)".parse::<SuperPartition>().unwrap_err();
        assert!(matches!(e, Error::Parse { ref token, .. } if token == ";"), "{e}");
        assert!("(1;1,2)".parse::<SuperPartition>().is_err());
    }

    #[test]
    fn json_form() {
        let s = sp("(2,1;3)");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"a":[2,1],"s":[3]}"#);
        let back: SuperPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<SuperPartition>(r#"{"a":[1,2],"s":[]}"#).is_err());
        let stripped: SuperPartition = serde_json::from_str(r#"{"a":[0],"s":[1,0]}"#).unwrap();
        assert_eq!(stripped, sp("(0;1)"));
    }

    #[test]
    fn length_counts_zero_fermions() {
        assert_eq!(sp("(1,0;1,1)").len(), 4);
        assert_eq!(sp("(1,0;1,1)").bidegree(), (3, 2));
    }
}
