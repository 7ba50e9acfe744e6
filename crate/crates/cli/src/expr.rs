//! Linear combinations such as `2*p(;2) - 1/2*m(1;)`.

use supersym::transform::change_basis;
use supersym::{rational, BasisExpansion, BasisName, Error, Rational, Result, SuperPartition};

fn fail(input: &str, reason: impl Into<String>) -> Error {
    Error::Expression { input: input.to_string(), reason: reason.into() }
}

/// Parses a combination of basis elements and returns it in the power-sum
/// basis. Every term must have the same bidegree.
pub fn parse(input: &str) -> Result<BasisExpansion> {
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    let mut total: Option<BasisExpansion> = None;
    let skip = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip(&mut i);
        let mut negative = false;
        if i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            negative = chars[i] == '-';
            i += 1;
            skip(&mut i);
        } else if total.is_some() {
            return Err(fail(input, format!("expected + or - at position {}", i + 1)));
        }
        let mut coeff = Rational::from_integer(1.into());
        if i < chars.len() && chars[i].is_ascii_digit() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            coeff = rational::parse(&text).ok_or_else(|| fail(input, format!("bad coefficient {text:?}")))?;
            skip(&mut i);
            if i >= chars.len() || chars[i] != '*' {
                return Err(fail(input, format!("expected * after coefficient {text}")));
            }
            i += 1;
            skip(&mut i);
        }
        let Some(&letter) = chars.get(i) else {
            return Err(fail(input, "expected a basis name"));
        };
        let basis: BasisName = letter.to_string().parse().map_err(|_| fail(input, format!("unknown basis {letter:?}")))?;
        i += 1;
        skip(&mut i);
        if chars.get(i) != Some(&'(') {
            return Err(fail(input, format!("expected ( after {basis}")));
        }
        let close = chars[i..]
            .iter()
            .position(|&c| c == ')')
            .map(|p| p + i)
            .ok_or_else(|| fail(input, "unclosed parenthesis"))?;
        let text: String = chars[i..=close].iter().collect();
        let sp: SuperPartition = text.parse()?;
        i = close + 1;
        if negative {
            coeff = -coeff;
        }
        let term = change_basis(&BasisExpansion::single(basis, &sp).scale(&coeff), BasisName::P);
        total = Some(match total {
            None => term,
            Some(acc) => acc
                .try_add(&term)
                .map_err(|_| fail(input, format!("term {basis}{sp} has a different bidegree")))?,
        });
        skip(&mut i);
        if i == chars.len() {
            return total.ok_or_else(|| fail(input, "empty expression"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use supersym::rational::{int, ratio};

    #[test]
    fn parses_combinations() {
        let x = parse("2*p(;2) - 1/2*p(;1,1)").unwrap();
        assert_eq!(x.get(&"(;2)".parse().unwrap()), int(2));
        assert_eq!(x.get(&"(;1,1)".parse().unwrap()), ratio(-1, 2));
        let e = parse("e(;2)").unwrap();
        assert_eq!(e.get(&"(;2)".parse().unwrap()), ratio(-1, 2));
        assert!(parse("-m(1;)").is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("").is_err());
        assert!(parse("2 p(;2)").is_err());
        assert!(parse("q(;2)").is_err());
        assert!(parse("p(;2) + p(1;)").is_err());
        assert!(parse("p(;2) p(;1,1)").is_err());
        assert!(matches!(parse("p(2,x)"), Err(Error::Parse { .. })));
    }
}
