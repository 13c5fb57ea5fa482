//! Acceptance suite. Every check is exact. Prints one line per criterion and
//! exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;

use faulhaber::arithprog::{ap_oracle, ap_series, ap_via_numerator, APParams};
use faulhaber::bernoulli::{bernoulli, det_matrix, det_prefactor, BernoulliMethod};
use faulhaber::chebyshev::{
    cheb_u, cheb_u_derivative_at_1, even_binomial_coefficients, faa_even, faa_odd,
    powersum_via_chebyshev_series,
};
use faulhaber::combinatorics::factorial;
use faulhaber::poly::Polynomial;
use faulhaber::powersum::{
    coefficient_matrix, doubling_identities, eval_faulhaber, exotic_powersum, faulhaber_poly,
    faulhaber_poly_with_matrix, pk_polynomial, powersum_oracle, powersum_via_operator,
    powersum_via_q, powersum_via_stirling, q_polynomial, solve_power_sum_recurrence, Basis, Factor,
    Parity, QForm,
};
use faulhaber::rational::{int, rat, to_integer, Rational};
use faulhaber::series::{powersum_from_egf, EgfRoute, TruncatedSeries};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(got: T, expected: T, what: impl FnOnce() -> String) -> Check {
    ensure(got == expected, || {
        format!("{}: got {got:?}, expected {expected:?}", what())
    })
}

fn poly(coeffs: &[(i64, i64)]) -> Polynomial {
    Polynomial::from_coeffs(coeffs.iter().map(|&(p, q)| rat(p, q)).collect())
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn c1_sweep() -> Check {
    for k in 1..=10u32 {
        let forms: Vec<_> = [Parity::Even, Parity::Odd]
            .into_iter()
            .map(|p| {
                (
                    p,
                    faulhaber_poly(p, k, Basis::N),
                    faulhaber_poly(p, k, Basis::S1),
                )
            })
            .collect();
        for n in 1..=20u64 {
            for (parity, n_form, s_form) in &forms {
                let power = parity.power(k);
                let expected = powersum_oracle(power, n);
                let as_int = |r: Rational| to_integer(&r, "faulhaber").map_err(|e| e.to_string());
                let mut got: Vec<(&str, BigInt)> = vec![
                    (
                        "solve_power_sum_recurrence",
                        solve_power_sum_recurrence(*parity, k, n)
                            .map_err(|e| e.to_string())?
                            .pop()
                            .unwrap(),
                    ),
                    ("eval_faulhaber[N]", as_int(eval_faulhaber(n_form, n))?),
                    ("eval_faulhaber[S1]", as_int(eval_faulhaber(s_form, n))?),
                ];
                let routes: Vec<(&str, faulhaber::error::Result<BigInt>)> = vec![
                    ("q[stirling]", powersum_via_q(power, n, QForm::Stirling)),
                    ("q[eulerian]", powersum_via_q(power, n, QForm::Eulerian)),
                    ("operator", powersum_via_operator(power, n)),
                    ("stirling", powersum_via_stirling(power, n)),
                    (
                        "egf[direct]",
                        powersum_from_egf(power, n, EgfRoute::DirectSum),
                    ),
                    (
                        "egf[division]",
                        powersum_from_egf(power, n, EgfRoute::Division),
                    ),
                    ("chebyshev-series", powersum_via_chebyshev_series(power, n)),
                    (
                        "faa",
                        match parity {
                            Parity::Even => faa_even(k, n),
                            Parity::Odd => faa_odd(k, n),
                        },
                    ),
                ];
                for (name, r) in routes {
                    got.push((name, r.map_err(|e| format!("{name} S_{power}({n}): {e}"))?));
                }
                if *parity == Parity::Even {
                    got.push(("exotic", exotic_powersum(k, n).map_err(|e| e.to_string())?));
                }
                for (name, v) in got {
                    eq(&v, &expected, || format!("{name} S_{power}({n})"))?;
                }
            }
        }
    }
    Ok(())
}

fn c2_displayed_values() -> Check {
    let s10 = faulhaber_poly(Parity::Even, 5, Basis::N);
    eq(
        squash(&s10.body.to_latex("N")),
        squash(
            r"\frac{1}{11}N^{11} - \frac{5}{12}N^9 + \frac{7}{8}N^7 - \frac{31}{32}N^5 + \frac{127}{256}N^3 - \frac{2555}{33792}N",
        ),
        || "S_10 in N".into(),
    )?;
    let s9 = faulhaber_poly(Parity::Odd, 5, Basis::N);
    eq(
        squash(&s9.body.to_latex("N")),
        squash(
            r"\frac{1}{10}N^{10} - \frac{3}{8}N^8 + \frac{49}{80}N^6 - \frac{31}{64}N^4 + \frac{381}{2560}N^2 - \frac{31}{2048}",
        ),
        || "S_9 in N".into(),
    )?;
    let s10s = faulhaber_poly(Parity::Even, 5, Basis::S1);
    eq(s10s.factor, Factor::S2, || "S_10 factor".into())?;
    eq(
        s10s.body,
        poly(&[(5, 11), (-30, 11), (68, 11), (-80, 11), (48, 11)]),
        || "S_10 in S_1".into(),
    )?;
    let s9s = faulhaber_poly(Parity::Odd, 5, Basis::S1);
    eq(s9s.factor, Factor::S1Squared, || "S_9 factor".into())?;
    eq(
        s9s.body,
        poly(&[(-3, 5), (12, 5), (-4, 1), (16, 5)]),
        || "S_9 in S_1".into(),
    )?;

    for m in [
        BernoulliMethod::Determinant,
        BernoulliMethod::VanMalderen,
        BernoulliMethod::Faulhaber,
        BernoulliMethod::Oracle,
    ] {
        eq(bernoulli(6, m).value, rat(-691, 2730), || {
            format!("B_12 via {m:?}")
        })?;
    }

    let p5 = Polynomial::from_ints(&[0, 496, -2370, 4095, -3150, 945]);
    eq(pk_polynomial(5), p5, || "P_5".into())?;

    for n in 1..=12u64 {
        let ni = n as i64;
        let mut c = vec![0i64; n as usize + 4];
        c[1] = 1;
        c[2] += 1;
        c[n as usize + 1] -= (ni + 1).pow(2);
        c[n as usize + 2] += 2 * ni * ni + 2 * ni - 1;
        c[n as usize + 3] -= ni * ni;
        let expected = Polynomial::from_ints(&c);
        for form in [QForm::Stirling, QForm::Eulerian] {
            eq(q_polynomial(2, n, form), expected.clone(), || {
                format!("Q_{n}(x;2) {form:?}")
            })?;
        }
    }

    for a in 1..=4i64 {
        for d in 1..=4i64 {
            for n in 1..=4i64 {
                let expected = rat(4 * a.pow(3) - 6 * a * a * d + 2 * a * d * d, 4) * int(n)
                    + rat(6 * a * a * d - 6 * a * d * d + d.pow(3), 4) * int(n * n)
                    + rat(4 * a * d * d - 2 * d.pow(3), 4) * int(n.pow(3))
                    + rat(d.pow(3), 4) * int(n.pow(4));
                let p = APParams::new(a as u64, d as u64, n as u64).unwrap();
                let got = int(ap_via_numerator(3, &p).map_err(|e| e.to_string())?);
                eq(&got, &expected, || format!("S_3^{{{a},{d}}}({n})"))?;
                eq(int(ap_oracle(3, &p)), expected, || {
                    format!("S_3^{{{a},{d}}}({n}) oracle")
                })?;
            }
        }
    }
    Ok(())
}

fn c3_misprinted_entry() -> Check {
    let mut printed = coefficient_matrix(Parity::Even, 5);
    eq(printed.get(4, 2).clone(), int(462), || {
        "C(11,6) entry".into()
    })?;
    printed.set(4, 2, int(463));

    for basis in [Basis::N, Basis::S1] {
        let good = faulhaber_poly(Parity::Even, 5, basis);
        let bad = faulhaber_poly_with_matrix(Parity::Even, 5, basis, &printed)
            .map_err(|e| e.to_string())?;
        ensure(bad.body != good.body, || {
            format!("463 reproduced S_10 in {basis:?}")
        })?;
        ensure(
            (1..=6).any(|n| bad.eval(n) != int(powersum_oracle(10, n))),
            || format!("463 still matches S_10 values in {basis:?}"),
        )?;
        ensure(
            (1..=20).all(|n| good.eval(n) == int(powersum_oracle(10, n))),
            || format!("462 fails S_10 in {basis:?}"),
        )?;
    }

    // The odd system never contains C(11,6), so S_9 is untouched.
    let odd = coefficient_matrix(Parity::Odd, 5);
    let has_462 = (0..5).any(|i| (0..5).any(|j| odd.get(i, j) == &int(462)));
    ensure(!has_462, || "odd matrix unexpectedly contains 462".into())?;
    ensure(
        (1..=20).all(|n| {
            faulhaber_poly(Parity::Odd, 5, Basis::N).eval(n) == int(powersum_oracle(9, n))
        }),
        || "S_9 mismatch".into(),
    )?;

    let good = det_matrix(6);
    eq(good.get(4, 2).clone(), int(462), || {
        "B_12 matrix entry".into()
    })?;
    eq(good.determinant(), int(-70_050_816), || {
        "B_12 determinant".into()
    })?;
    eq(
        det_prefactor(6) * good.determinant(),
        rat(-691, 2730),
        || "B_12 with 462".into(),
    )?;
    let mut bad = good.clone();
    bad.set(4, 2, int(463));
    let b = det_prefactor(6) * bad.determinant();
    ensure(b != rat(-691, 2730), || "463 reproduced B_12".into())
}

fn s(k: u32, n: u64) -> Rational {
    int(powersum_oracle(k, n))
}

fn c4_ratio() -> Check {
    for n in 1..=50u64 {
        let num = int(9) * s(2, n) + int(126) * s(4, n) + int(336) * s(6, n) + int(144) * s(8, n);
        let den = s(1, n) + int(28) * s(3, n) + int(112) * s(5, n) + int(64) * s(7, n);
        eq(num / den, int(2 * n + 1), || format!("ratio at n = {n}"))?;
    }
    Ok(())
}

fn c5_structure() -> Check {
    for k in 1..=10 {
        ensure(
            faulhaber_poly(Parity::Even, k, Basis::N)
                .body
                .has_parity(true),
            || format!("S_{} not odd in N", 2 * k),
        )?;
        ensure(
            faulhaber_poly(Parity::Odd, k, Basis::N)
                .body
                .has_parity(false),
            || format!("S_{} not even in N", 2 * k - 1),
        )?;
    }
    for k in 2..=10 {
        let slope = faulhaber_poly(Parity::Odd, k, Basis::N)
            .body
            .derivative(1)
            .eval(&rat(1, 2));
        eq(slope, int(0), || format!("S'_{} at n = 0", 2 * k - 1))?;
    }
    for k in 1..=8u32 {
        let top = even_binomial_coefficients(k)[k as usize - 1].clone();
        let expected = Rational::new(factorial(2 * k), BigInt::from(2u32).pow(2 * k + 1));
        eq(top, expected, || format!("p_{{{k},{k}}}"))?;
        let sum: Rational = pk_polynomial(k).coeffs().iter().sum();
        eq(sum, int(BigInt::from(2u32).pow(k - 1)), || {
            format!("P_{k} coefficient sum")
        })?;
    }
    for n in 0..=16u32 {
        let u = cheb_u(n).poly;
        eq(u.eval(&int(1)), int(n + 1), || format!("U_{n}(1)"))?;
        for j in 0..=6u32 {
            let direct = u.derivative(j as usize).eval(&int(1));
            eq(int(cheb_u_derivative_at_1(n, j)), direct, || {
                format!("U_{n}^({j})(1)")
            })?;
        }
    }
    Ok(())
}

fn c6_series() -> Check {
    let order = 12;
    let half = rat(1, 2);
    for n in 1..=6u64 {
        let big_n = int(n) + &half;
        let f = (1..=n).fold(TruncatedSeries::zero(order), |acc, r| {
            &acc + &TruncatedSeries::cos(&int(r), order)
        });
        let g = (1..=n).fold(TruncatedSeries::zero(order), |acc, r| {
            &acc + &TruncatedSeries::sin(&int(r), order)
        });
        let two_sin_half = TruncatedSeries::sin(&half, order + 1).scale(&int(2));

        let lhs1 = (&TruncatedSeries::sin(&big_n, order + 1)
            - &TruncatedSeries::sin(&half, order + 1))
            .div(&two_sin_half)
            .map_err(|e| e.to_string())?;
        eq(&lhs1, &f, || format!("cosine sum identity, n = {n}"))?;
        let lhs2 = (&TruncatedSeries::cos(&half, order + 1)
            - &TruncatedSeries::cos(&big_n, order + 1))
            .div(&two_sin_half)
            .map_err(|e| e.to_string())?;
        eq(&lhs2, &g, || format!("sine sum identity, n = {n}"))?;

        for j in 0..=order {
            let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
            let sum = int(sign) * s(j as u32, n);
            let (fj, gj) = (f.derivative_at_zero(j), g.derivative_at_zero(j));
            if j % 2 == 0 {
                eq((fj, gj), (sum, int(0)), || {
                    format!("even split, j = {j}, n = {n}")
                })?;
            } else {
                eq((fj, gj), (int(0), sum), || {
                    format!("odd split, j = {j}, n = {n}")
                })?;
            }
        }

        let kernel = TruncatedSeries::sin(&big_n, order + 1)
            .div(&TruncatedSeries::sin(&half, order + 1))
            .map_err(|e| e.to_string())?;
        let composed =
            TruncatedSeries::cos(&half, order).compose_polynomial(&cheb_u(2 * n as u32).poly);
        eq(&kernel, &composed, || format!("Dirichlet kernel, n = {n}"))?;
        // F_n = f_n + 1/2 is half the kernel.
        let big_f = &f + &TruncatedSeries::constant(half.clone(), order);
        eq(big_f, kernel.scale(&half), || format!("F_n, n = {n}"))?;
    }
    Ok(())
}

fn c7_bernoulli() -> Check {
    for k in 1..=25 {
        let oracle = bernoulli(k, BernoulliMethod::Oracle);
        ensure(oracle.satisfies_staudt_clausen(), || {
            format!("von Staudt-Clausen B_{}", 2 * k)
        })?;
        ensure((oracle.value > int(0)) == (k % 2 == 1), || {
            format!("sign of B_{}", 2 * k)
        })?;
        for m in [
            BernoulliMethod::Determinant,
            BernoulliMethod::VanMalderen,
            BernoulliMethod::Faulhaber,
        ] {
            eq(bernoulli(k, m).value, oracle.value.clone(), || {
                format!("B_{} via {m:?}", 2 * k)
            })?;
        }
    }
    Ok(())
}

fn c8_progressions() -> Check {
    for k in 0..=8 {
        for a in 0..=4 {
            for d in 1..=4 {
                for n in 1..=10 {
                    let p = APParams::new(a, d, n).unwrap();
                    let o = ap_oracle(k, &p);
                    let label = || format!("S_{k}^{{{a},{d}}}({n})");
                    eq(
                        ap_series(k, &p).map_err(|e| e.to_string())?,
                        o.clone(),
                        || format!("series {}", label()),
                    )?;
                    eq(
                        ap_via_numerator(k, &p).map_err(|e| e.to_string())?,
                        o.clone(),
                        || format!("numerator {}", label()),
                    )?;
                    if a == 1 && d == 1 && k >= 1 {
                        eq(o, powersum_oracle(k, n), || format!("collapse {}", label()))?;
                        let (parity, half) = Parity::split(k);
                        let f = faulhaber_poly(parity, half, Basis::N).eval(n);
                        eq(f, s(k, n), || format!("collapse to Faulhaber {}", label()))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn c9_doubling() -> Check {
    for k in 1..=8 {
        for n in 1..=15 {
            let forms = doubling_identities(k, n);
            let target = powersum_oracle(2 * k - 1, 2 * n);
            for (name, v) in [
                ("even", &forms.even_sums),
                ("all", &forms.all_sums),
                ("odd", &forms.odd_sums),
            ] {
                eq(v, &target, || {
                    format!("{name} form of S_{}({})", 2 * k - 1, 2 * n)
                })?;
            }
        }
    }
    Ok(())
}

fn c10_cli_goldens() -> Check {
    let runs = golden_runs_checked()?;
    ensure(runs == common::CASES.len() * common::FORMATS.len(), || {
        "missing golden runs".into()
    })
}

fn golden_runs_checked() -> std::result::Result<usize, String> {
    let runs = common::golden_runs();
    for (label, got, expected) in &runs {
        ensure(got == expected, || {
            format!("{label} differs: got {got:?}, expected {expected:?}")
        })?;
    }
    Ok(runs.len())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cross-method sweep, k = 1..10, n = 1..20", c1_sweep),
        ("displayed polynomials and values", c2_displayed_values),
        (
            "463 in place of C(11,6) breaks S_10 and B_12, 462 restores them",
            c3_misprinted_entry,
        ),
        (
            "even/odd weighted ratio equals 2n+1 for n = 1..50",
            c4_ratio,
        ),
        ("structural invariants", c5_structure),
        (
            "trigonometric sum identities as series to order 12",
            c6_series,
        ),
        ("Bernoulli routes agree for k = 1..25", c7_bernoulli),
        ("arithmetic progression routes agree", c8_progressions),
        ("doubling identities", c9_doubling),
        ("CLI golden outputs", c10_cli_goldens),
    ];
    let mut failed = 0;
    for (i, (desc, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("[PASS] criterion {}: {desc} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] criterion {}: {desc} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
