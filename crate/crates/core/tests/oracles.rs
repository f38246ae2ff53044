//! Checks against independent reference computations: factorials,
//! brute-force composition sums, closed-form binomial coefficients, and the
//! command-line surface.

use num_bigint::BigInt;
use tutte_cas::arith::{int, parse_expr, rat, solve_over_field, RatFun, Rational, Zero};
use tutte_cas::cli::{self, Cli, Status};
use tutte_cas::domain::{
    closed_form_a, default_sample_count, quartic, ratio_samples, tutte_coeff, tutte_numbers, tutte_ratio, tutte_series,
};
use tutte_cas::guess::{guess_recurrence, GuessConfig};
use tutte_cas::holonomic::{
    algeq_to_ode, derivative_vectors, hyperterm_to_rec, ode_to_rec, rec_check, rec_unroll, AlgebraicEquation,
};
use tutte_cas::series::Series;
use tutte_cas::telescope::{
    gosper, numeric_sum_check, verify_certificate, zeilberger, HyperTerm1, HyperTerm2, Support,
};

fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::from(1), |acc, i| acc * i)
}

fn binomial(n: u64, k: u64) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

#[test]
fn counts_match_factorial_formula() {
    let t = tutte_numbers(300);
    assert_eq!(t[0], BigInt::from(0));
    for n in 1..=300u64 {
        let direct = factorial(4 * n + 1) * 2 / (factorial(n + 1) * factorial(3 * n + 2));
        assert_eq!(t[n as usize], direct, "n = {n}");
    }
    assert!(tutte_coeff(0).is_zero() && tutte_coeff(-3).is_zero());
}

/// Sum over all compositions n = k_1 + ... + k_r of prod a(k_i).
fn composition_sum(a: &[Rational], n: usize, r: usize) -> Rational {
    if r == 0 {
        return if n == 0 { int(1) } else { int(0) };
    }
    (0..=n).map(|k| &a[k] * composition_sum(a, n - k, r - 1)).sum()
}

#[test]
fn powers_match_composition_sums() {
    let others = [
        tutte_series(12),
        Series::new((0..=12).map(|i| rat(i * i - 3, i + 1)).collect(), 12),
        Series::new((0..=12).map(|i| int(if i % 3 == 0 { 2 } else { -1 })).collect(), 12),
    ];
    for s in &others {
        for r in 1..=5u32 {
            let p = s.pow(r).unwrap();
            for n in 0..=12 {
                assert_eq!(
                    p.coeffs()[n],
                    composition_sum(s.coeffs(), n, r as usize),
                    "r = {r}, n = {n}"
                );
            }
        }
    }
}

#[test]
fn ratio_times_count_is_power_coefficient() {
    for r in 2..=5u32 {
        let samples = ratio_samples(r, 40).unwrap();
        let g = tutte_series(40);
        let gr = g.pow(r).unwrap();
        for (n, a) in samples {
            let direct: Rational = composition_sum(g.coeffs(), n as usize, r as usize);
            assert_eq!(&a * &g.coeffs()[n as usize], direct, "r = {r}, n = {n}");
            assert_eq!(direct, gr.coeffs()[n as usize]);
        }
    }
}

#[test]
fn closed_form_numerators_vanish_below_r() {
    for r in 2..=11u32 {
        let report = closed_form_a(r, default_sample_count(r)).unwrap();
        let f: RatFun = report.formula.expect("closed form");
        for n in 1..r as i64 {
            assert!(f.num().eval(&int(n)).is_zero(), "r = {r}: numerator nonzero at n = {n}");
        }
        let b = report.limit.unwrap();
        assert_eq!(b, int(r as i64) * num_traits::pow(rat(5, 27), r as usize - 1));
    }
}

struct KnownRoot {
    equation: &'static str,
    coefficient: fn(u64) -> Rational,
}

fn known_roots() -> Vec<KnownRoot> {
    vec![
        KnownRoot {
            equation: "(1 - x)*y - 1",
            coefficient: |_| int(1),
        },
        KnownRoot {
            equation: "x*y^2 - y + 1",
            coefficient: |n| Rational::from_integer(binomial(2 * n, n)) / int(n as i64 + 1),
        },
        KnownRoot {
            // sqrt(1 - 4x)
            equation: "y^2 - 1 + 4*x",
            coefficient: |n| -Rational::from_integer(binomial(2 * n, n)) / int(2 * n as i64 - 1),
        },
        KnownRoot {
            equation: "x*(x^2+11*x-1) + (4*x^3+25*x^2-14*x+1)*y + x*(6*x^2+17*x+3)*y^2 + x^2*(4*x+3)*y^3 + x^3*y^4",
            coefficient: |n| tutte_coeff(n as i64),
        },
    ]
}

#[test]
fn algebraic_to_recurrence_pipeline() {
    for root in known_roots() {
        let p = parse_expr(root.equation, &["x", "y"]).unwrap().into_bipoly().unwrap();
        let eq = AlgebraicEquation::new(p).unwrap();
        let ode = algeq_to_ode(&eq).unwrap();
        let rec = ode_to_rec(&ode);
        let seq: Vec<Rational> = (0..120).map(root.coefficient).collect();
        let from = rec.valid_from().max(0);
        assert!(rec_check(&rec, &seq, from).unwrap().all_zero(), "{}", root.equation);

        // unrolling from the right initial segment reproduces the series
        let start = from as usize;
        let init = &seq[start..start + rec.order()];
        let lead_vanishes = (start as i64..100).any(|n| rec.coeffs().last().unwrap().eval(&int(n)).is_zero());
        if !lead_vanishes {
            let out = rec_unroll(&rec, start as i64, init, 60).unwrap();
            assert_eq!(&out[..], &seq[start..start + 60], "{}", root.equation);
        }

        // minimality: y, y', ..., y^(k-1) independent, with y^(k) dependent
        let k = ode.order();
        let vectors = derivative_vectors(&eq, k + 1).unwrap();
        let kernel_dim = |cols: usize| {
            let dim = vectors[0].len();
            let matrix: Vec<Vec<RatFun>> = (0..dim)
                .map(|i| (0..cols).map(|j| vectors[j][i].clone()).collect())
                .collect();
            solve_over_field(&matrix, cols, None).map_or(0, |(_, null)| null.len())
        };
        assert_eq!(kernel_dim(k), 0, "{}: order {k} is not minimal", root.equation);
        assert!(kernel_dim(k + 1) >= 1, "{}", root.equation);
    }
}

#[test]
fn quartic_ode_has_order_four_and_unrolls_counts() {
    let ode = algeq_to_ode(&AlgebraicEquation::new(quartic().p).unwrap()).unwrap();
    assert_eq!(ode.order(), 4);
    let rec = ode_to_rec(&ode);
    let out = rec_unroll(&rec, 1, &[int(1)], 200).unwrap();
    let counts: Vec<Rational> = tutte_numbers(200)
        .into_iter()
        .skip(1)
        .map(Rational::from_integer)
        .collect();
    assert_eq!(out, counts);
}

#[test]
fn guessing_agrees_with_term_ratio_and_is_stable() {
    let counts: Vec<Rational> = tutte_numbers(140)
        .into_iter()
        .skip(1)
        .map(Rational::from_integer)
        .collect();
    let expected = hyperterm_to_rec(&tutte_ratio()).unwrap();
    let cfg = GuessConfig::default();
    let first = guess_recurrence(&counts[..100], 1, &cfg).unwrap();
    assert!(first.equivalent(&expected), "guessed {first}, expected {expected}");
    for len in [110, 125, 140] {
        assert_eq!(
            guess_recurrence(&counts[..len], 1, &cfg).unwrap(),
            first,
            "prefix {len}"
        );
    }
}

#[test]
fn gosper_positive_and_negative_cases() {
    let summable = [
        ("(k+1)^2/k", "1/k"),
        ("(k+1)/k", "(k-1)/2"),
        ("2", "1"),
        ("k/(k+2)", "-(k+1)"),
    ];
    for (ratio, cert) in summable {
        let term = HyperTerm1::new(tutte_cas::arith::parse_ratfun(ratio, "k").unwrap()).unwrap();
        let r = gosper(&term).unwrap_or_else(|| panic!("{ratio} should be summable"));
        assert_eq!(r, tutte_cas::arith::parse_ratfun(cert, "k").unwrap(), "{ratio}");
        // R(k+1) ratio(k) - R(k) = 1
        let lhs = &(&r.shift_int(1) * term.ratio()) - &r;
        assert_eq!(lhs, RatFun::constant(int(1)));
    }
    for ratio in ["k+1", "(2*k+1)/(k+1)", "1/(k+1)", "(4*k+2)/(k+1)"] {
        let term = HyperTerm1::new(tutte_cas::arith::parse_ratfun(ratio, "k").unwrap()).unwrap();
        assert!(gosper(&term).is_none(), "{ratio} should not be summable");
    }
}

fn natural_term(ratio_n: &str, ratio_k: &str) -> HyperTerm2 {
    HyperTerm2::new(
        tutte_cas::arith::parse_ratfun2(ratio_n, "n", "k").unwrap(),
        tutte_cas::arith::parse_ratfun2(ratio_k, "n", "k").unwrap(),
        Support::Natural { lower: 0 },
        (0, int(1)),
    )
    .unwrap()
}

#[test]
fn zeilberger_on_binomial_sums() {
    // sum_k C(n,k) = 2^n and sum_k C(n,k)^2 = C(2n,n)
    let cases = [
        (
            natural_term("(n+1)/(n+1-k)", "(n-k)/(k+1)"),
            (|n: u64| Rational::from_integer(BigInt::from(2).pow(n as u32))) as fn(u64) -> Rational,
        ),
        (natural_term("(n+1)^2/(n+1-k)^2", "(n-k)^2/(k+1)^2"), |n| {
            Rational::from_integer(binomial(2 * n, n))
        }),
    ];
    for (term, closed) in cases {
        let cert = zeilberger(&term, 2).unwrap();
        assert_eq!(cert.operator.order(), 1);
        assert!(verify_certificate(&term, &cert));
        assert!(numeric_sum_check(&term, &cert.operator, 0, 300).unwrap().all_zero());
        let values: Vec<Rational> = (0..=60).map(closed).collect();
        assert!(rec_check(&cert.operator, &values, 0).unwrap().all_zero());
    }
}

/// Evidence for the boundary analysis of the convolution: the order-2
/// telescoper is exact for the natural-support sum, not the windowed one.
#[test]
fn convolution_telescoper_and_boundary_terms() {
    let term = tutte_cas::domain::g_squared_term();
    let cert = zeilberger(&term, 3).unwrap();
    assert_eq!(cert.operator.order(), 2);
    assert!(verify_certificate(&term, &cert));

    let g = tutte_series(303);
    let s = g.mul(&g);
    let t: Vec<Rational> = tutte_numbers(303).into_iter().map(Rational::from_integer).collect();
    let natural = |n: i64| {
        let n = n as usize;
        let mut u = &s.coeffs()[n] + &t[n] * int(2) + &t[n + 1] * rat(3, 2);
        if n == 0 {
            u += int(1);
        }
        u
    };
    for n in 0..=300 {
        assert!(cert.operator.residual_with(n, natural).is_zero(), "n = {n}");
    }
    let windowed = numeric_sum_check(&term, &cert.operator, 3, 300).unwrap();
    assert_eq!(windowed.first_failure, Some(3));
}

fn cli_report(args: &[&str]) -> cli::RunReport {
    use clap::Parser;
    let parsed = Cli::try_parse_from(std::iter::once("tutte-cas").chain(args.iter().copied())).unwrap();
    cli::execute(&parsed.command).unwrap()
}

#[test]
fn cli_outputs_are_deterministic_and_exact() {
    let mut a = cli_report(&["table"]);
    let mut b = cli_report(&["table"]);
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.status, Status::Value);
    assert_eq!(a.exit_code(), 0);
    assert_eq!(a.items[9].actual, "107421875/205891132094649, 0.0000005217411450");

    let z = cli_report(&["zeilberger", "--term", "binomial", "--check-to", "30"]);
    assert_eq!(z.status, Status::Pass);
    let z = cli_report(&["zeilberger", "--check-to", "20"]);
    assert_eq!(z.status, Status::Fail);
    assert_ne!(z.exit_code(), 0);

    let custom = cli_report(&[
        "zeilberger",
        "--ratio-n",
        "(n+1)/(n+1-k)",
        "--ratio-k",
        "(n-k)/(k+1)",
        "--check-to",
        "25",
    ]);
    assert_eq!(custom.status, Status::Pass);

    let json: serde_json::Value = serde_json::from_str(&cli_report(&["limit", "--r", "11"]).to_json()).unwrap();
    assert_eq!(json["items"][0]["actual"], "107421875/205891132094649");
    assert_eq!(json["command"], "limit");

    // y' = y gives (n+1) a(n+1) = a(n)
    let ode = cli_report(&["ode2rec", "--ode", "-1; 1"]);
    let actual: Vec<&str> = ode.items.iter().map(|i| i.actual.as_str()).collect();
    assert_eq!(actual, ["-1", "n + 1", "0"]);
}

#[test]
fn cli_reports_errors_with_usage_code() {
    assert_eq!(cli::run(["tutte-cas", "ratio", "--r", "1", "--n", "3"]), 2);
    assert_eq!(cli::run(["tutte-cas", "no-such-command"]), 2);
    assert_eq!(cli::run(["tutte-cas", "eval-quartic", "--x", "x+"]), 2);
}
