//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p supersym --test acceptance`. All comparisons are
//! exact (rational arithmetic, zero tolerance).

use rayon::prelude::*;
use std::process::ExitCode;
use std::time::{Duration, Instant};
use supersym::bases::{generating_check, monomial, GeneratingKind, SeriesTruncation};
use supersym::inner::{duality_check, kernel_check};
use supersym::rational::{int, ratio};
use supersym::superpartition::{bruhat_leq, count_check, dominance_leq, enumerate, order_check};
use supersym::transform::{
    change_basis, expand_in_monomials_at, mono_product, mono_product_fillings, triangularity_check,
    verify_determinants, verify_recursions,
};
use supersym::{BasisExpansion, BasisName, Report, SuperPartition};

struct Outcome {
    pass: bool,
    detail: String,
}

impl From<Report> for Outcome {
    fn from(r: Report) -> Self {
        Outcome { pass: r.pass, detail: r.to_string() }
    }
}

fn sp(s: &str) -> SuperPartition {
    s.parse().expect("valid superpartition")
}

fn worked_examples() -> Outcome {
    let mut r = Report::new("examples");
    let lam = sp("(5,2,1,0;6,5,5,2,2,1)");
    r.check(lam.star() == vec![6, 5, 5, 5, 2, 2, 2, 1, 1], || format!("star {:?}", lam.star()));

    let lam = sp("(3,1,0;4,3,2,1)");
    let d = lam.diagram();
    let circled: Vec<(usize, bool)> = lam.circled_parts();
    let expected_c = vec![(4, false), (3, true), (3, false), (2, false), (1, true), (1, false), (0, true)];
    r.check(circled == expected_c, || format!("C[Λ] = {circled:?}"));
    r.check(d.shape() == vec![4, 4, 3, 2, 2, 1, 1], || format!("sh(D[Λ]) = {:?}", d.shape()));
    r.check(lam.conjugate() == sp("(6,4,1;3)"), || format!("conjugate {}", lam.conjugate()));

    let listed: Vec<SuperPartition> = ["(3,0;)", "(2,1;)", "(2,0;1)", "(1,0;2)", "(1,0;1,1)"].iter().map(|s| sp(s)).collect();
    r.check(enumerate(3, 2, None) == listed, || "SPar(3|2) differs".into());

    let (a, b) = (sp("(1,0;1)"), sp("(0;2,1,1)"));
    r.check(mono_product_fillings(&a, &b, &sp("(2,1,0;1,1,1)")) == int(-3), || "N = -3 not reproduced".into());
    r.check(mono_product_fillings(&a, &b, &sp("(3,1,0;1,1)")) == int(1), || "N = +1 not reproduced".into());

    // The exact expansion is e_2 = p_1²/2 - p_2/2; the displayed "- p_2" is
    // checked to be off so that a silent change would be noticed.
    let e2 = change_basis(&BasisExpansion::single(BasisName::E, &sp("(;2)")), BasisName::P);
    r.check(e2.get(&sp("(;1,1)")) == ratio(1, 2) && e2.get(&sp("(;2)")) == ratio(-1, 2) && e2.len() == 2, || {
        format!("e_2 = {e2}")
    });
    r.check(e2.get(&sp("(;2)")) != int(-1), || "e_2 has p_2 coefficient -1".into());

    let (l, o) = (sp("(5,2,1;4,3,3)"), sp("(4,3,0;5,3,2,1)"));
    let incomparable = !bruhat_leq(&o, &l).unwrap() && !bruhat_leq(&l, &o).unwrap();
    r.check(incomparable && dominance_leq(&o, &l).unwrap(), || "counterexample pair".into());
    let mut out = Outcome::from(r);
    out.detail.push_str(" (e_2 verified as p_1^2/2 - p_2/2)");
    out
}

fn filling_oracle(n_max: usize, m_max: usize) -> Outcome {
    let mut jobs = Vec::new();
    for n in 0..=n_max {
        for m in 0..=m_max {
            for n1 in 0..=n {
                for m1 in 0..=m {
                    for a in enumerate(n1, m1, None) {
                        for b in enumerate(n - n1, m - m1, None) {
                            jobs.push((a.clone(), b, n, m));
                        }
                    }
                }
            }
        }
    }
    let total = jobs.len();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(a, b, n, m)| {
            let nvars = (n + m).max(1);
            let engine = monomial(a, nvars).unwrap().multiply(&monomial(b, nvars).unwrap()).unwrap();
            let expected = expand_in_monomials_at(&engine, *n, *m).unwrap();
            let got = mono_product(a, b);
            (got != expected).then(|| format!("m_{a} m_{b}: fillings {got} vs engine {expected}"))
        })
        .collect();
    Outcome {
        pass: failures.is_empty(),
        detail: format!("{total} pairs, {} mismatches{}", failures.len(), failures.first().map(|f| format!(" ({f})")).unwrap_or_default()),
    }
}

fn generating() -> Outcome {
    let trunc = SeriesTruncation { max_t_degree: 4, with_tau: true };
    let mut r = Report::new("generating").param("max_t_degree", 4).param("nvars", 5);
    for kind in [GeneratingKind::E, GeneratingKind::H, GeneratingKind::P] {
        r.absorb(&generating_check(kind, trunc, 5).unwrap());
    }
    r.into()
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("1 worked examples", Box::new(worked_examples)),
        ("2 filling rule = engine product (n<=5, m<=3)", Box::new(|| filling_oracle(5, 3))),
        ("3 triangularity of <-e in m (n<=6)", Box::new(|| triangularity_check(6).into())),
        ("4 six recursions (n<=6, N=8)", Box::new(|| verify_recursions(6).into())),
        ("5 six determinants and omega images (n<=6, N=8)", Box::new(|| verify_determinants(6).into())),
        ("6 generating functions E, H, P (t-degree 4, N=5)", Box::new(generating)),
        ("7 orthogonality, duality, omega (n<=5, m<=3)", Box::new(|| duality_check(5, 3).into())),
        ("8 Cauchy kernels (x-degree 4, N=5)", Box::new(|| kernel_check(5, 4).unwrap().into())),
        ("9 superpartition counts (n<=12)", Box::new(|| count_check(12).into())),
        ("10 order properties (n<=6)", Box::new(|| order_check(6, 5).into())),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed: Duration = start.elapsed();
        all &= outcome.pass;
        println!(
            "criterion {name}: {} [{:.2}s] {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
