use super::*;
use crate::bases::{complete, elementary, monomial};
use crate::rational::{int, ratio};
use crate::superpartition::enumerate;

fn sp(s: &str) -> SuperPartition {
    s.parse().unwrap()
}

fn expansion(basis: BasisName, n: usize, m: usize, terms: &[(&str, Rational)]) -> BasisExpansion {
    let mut out = BasisExpansion::new(basis, n, m);
    for (s, c) in terms {
        out.add_term(sp(s), c.clone()).unwrap();
    }
    out
}

#[test]
fn expand_examples() {
    let h1 = expand_in_monomials(&complete(1, true, 3)).unwrap();
    assert_eq!(h1, expansion(BasisName::M, 1, 1, &[("(1;)", int(2)), ("(0;1)", int(1))]));
    let e2 = expand_in_monomials(&elementary(2, true, 4)).unwrap();
    assert_eq!(e2, expansion(BasisName::M, 2, 1, &[("(0;1,1)", int(1))]));
    for lam in enumerate(4, 2, None) {
        let f = monomial(&lam, 7).unwrap();
        assert_eq!(expand_in_monomials(&f).unwrap(), BasisExpansion::single(BasisName::M, &lam));
    }
}

#[test]
fn expand_errors() {
    let x1 = SuperPolynomial::x(3, 0);
    assert!(matches!(expand_in_monomials(&x1), Err(Error::NotSymmetric)));
    let mixed = &elementary(1, false, 3) + &elementary(2, false, 3);
    assert!(matches!(expand_in_monomials(&mixed), Err(Error::NotHomogeneous)));
    assert!(matches!(
        expand_in_monomials(&complete(2, false, 1)),
        Err(Error::TooFewVariables { .. })
    ));
}

#[test]
fn expansion_reconstructs() {
    let f = &(&complete(1, true, 5) * &elementary(2, false, 5)) * &complete(1, false, 5);
    let x = expand_in_monomials(&f).unwrap();
    assert_eq!(x.to_polynomial(5).unwrap(), f);
}

#[test]
fn worked_filling_coefficients() {
    let (a, b) = (sp("(1,0;1)"), sp("(0;2,1,1)"));
    let g1 = sp("(2,1,0;1,1,1)");
    let g2 = sp("(3,1,0;1,1)");
    assert_eq!(mono_product_fillings(&a, &b, &g1), int(-3));
    assert_eq!(mono_product_fillings(&a, &b, &g2), int(1));
    let listed = fillings(&a, &b, &g1);
    assert_eq!(listed.len(), 3);
    assert!(listed.iter().all(|t| t.weight == -1));
    let listed = fillings(&a, &b, &g2);
    let mut weights: Vec<i64> = listed.iter().map(|t| t.weight).collect();
    weights.sort();
    assert_eq!(weights, vec![-1, 1, 1]);
    let odd = listed.iter().find(|t| t.weight == -1).unwrap();
    assert_eq!(odd.circle_word(), vec![Letter::A(1), Letter::B(1), Letter::A(2)]);
    let product = mono_product(&a, &b);
    assert_eq!(product.get(&g1), int(-3));
    assert_eq!(product.get(&g2), int(1));
}

#[test]
fn filling_edge_cases() {
    let lam = sp("(2,0;1)");
    assert_eq!(mono_product_fillings(&SuperPartition::empty(), &lam, &lam), int(1));
    assert_eq!(mono_product(&SuperPartition::empty(), &lam), BasisExpansion::single(BasisName::M, &lam));
    assert_eq!(mono_product_fillings(&lam, &lam, &sp("(3;)")), int(0));
}

#[test]
fn fillings_match_engine_small() {
    for n in 0..=3 {
        for m in 0..=2 {
            for n1 in 0..=n {
                for m1 in 0..=m {
                    for a in enumerate(n1, m1, None) {
                        for b in enumerate(n - n1, m - m1, None) {
                            let nvars = (n + m).max(1);
                            let engine = &monomial(&a, nvars).unwrap() * &monomial(&b, nvars).unwrap();
                            let expected = expand_in_monomials_at(&engine, n, m).unwrap();
                            assert_eq!(mono_product(&a, &b), expected, "{a} * {b}");
                            let swapped = mono_product(&b, &a);
                            let sign = if m1 * (m - m1) % 2 == 1 { int(-1) } else { int(1) };
                            assert_eq!(swapped.scale(&sign), expected, "{b} * {a}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn e2_in_power_sums() {
    let e2 = BasisExpansion::single(BasisName::E, &sp("(;2)"));
    let p = change_basis(&e2, BasisName::P);
    assert_eq!(p, expansion(BasisName::P, 2, 0, &[("(;2)", ratio(-1, 2)), ("(;1,1)", ratio(1, 2))]));
}

#[test]
fn round_trips() {
    for n in 0..=3 {
        for m in 0..=2 {
            for lam in enumerate(n, m, None) {
                for from in BasisName::ALL {
                    let x = BasisExpansion::single(from, &lam);
                    for to in BasisName::ALL {
                        let y = change_basis(&x, to);
                        assert_eq!(change_basis(&y, from), x, "{from}{lam} via {to}");
                        let nvars = n + m + 1;
                        assert_eq!(y.to_polynomial(nvars).unwrap(), x.to_polynomial(nvars).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn json_format() {
    let x = expansion(BasisName::M, 3, 2, &[("(2,1;)", int(-3)), ("(1,0;2)", ratio(1, 2))]);
    let json = serde_json::to_value(&x).unwrap();
    assert_eq!(
        json,
        serde_json::json!({"basis": "m", "n": 3, "m": 2, "terms": [
            {"spar": {"a": [2, 1], "s": []}, "coeff": "-3"},
            {"spar": {"a": [1, 0], "s": [2]}, "coeff": "1/2"}
        ]})
    );
    let back: BasisExpansion = serde_json::from_value(json).unwrap();
    assert_eq!(back, x);
    let bad = serde_json::json!({"basis": "m", "n": 3, "m": 2, "terms": [{"spar": {"a": [1], "s": []}, "coeff": "1"}]});
    assert!(serde_json::from_value::<BasisExpansion>(bad).is_err());
}

#[test]
fn recursions_small() {
    let r = verify_recursions(4);
    assert!(r.pass, "{r}");
}

#[test]
fn determinants_small() {
    for which in DeterminantFormula::ALL {
        for n in 0..=3 {
            let r = determinant_formulas(n, which, n + 2);
            assert!(r.pass, "{r}");
        }
    }
    assert!(determinant_formulas(1, DeterminantFormula::EFromH, 3).pass);
}

#[test]
fn triangularity_small() {
    let r = triangularity_check(4);
    assert!(r.pass, "{r}");
}

#[test]
fn arrowed_e_leads_with_conjugate() {
    let lam = sp("(2,0;1)");
    let x = change_basis(&BasisExpansion::single(BasisName::E, &lam).arrow(), BasisName::M);
    assert_eq!(x.get(&lam.conjugate()), int(1));
}
