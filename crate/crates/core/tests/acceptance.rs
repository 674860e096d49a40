//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::{c, m_coefficients, schur_q_oracle, Coeff};
use peakqsym::bases::*;
use peakqsym::compositions::{peak_compositions, strict_partitions, Composition, SubsetOfRange};
use peakqsym::qsym::{
    equal, is_symmetric, multiply, peak_fn, word_to_fundamental, Basis, QSymExpr,
};
use peakqsym::tableaux::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn peak_shapes(max: u32) -> Vec<Composition> {
    (1..=max).flat_map(peak_compositions).collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn worked_example() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_pqsym"))
        .args([
            "expand", "--family", "hatP", "--index", "2,1", "--basis", "M",
        ])
        .output()
        .map_err(err)?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || {
        format!("exit status {}", out.status)
    })?;
    ensure(text == "M_(2,1)+M_(1,2)+2M_(1,1,1)\n", || {
        format!("got {text:?}")
    })?;
    Ok(text.trim().to_string())
}

fn four_routes() -> Outcome {
    let shapes = peak_shapes(7);
    for alpha in &shapes {
        let reference = hat_p_monomial(alpha, Route::Statistic).map_err(err)?;
        let others = [
            ("marked", hat_p_monomial(alpha, Route::Marked).map_err(err)?),
            ("fundamental", hat_p_fundamental(alpha).map_err(err)?),
            ("peak", hat_p_peak(alpha).map_err(err)?),
        ];
        for (name, e) in others {
            ensure(equal(&e, &reference), || {
                format!("{name} route differs at {alpha}")
            })?;
        }
    }
    Ok(format!("{} peak compositions", shapes.len()))
}

fn unitriangularity() -> Outcome {
    let shapes = peak_shapes(7);
    for alpha in &shapes {
        let g = hat_p_peak(alpha).map_err(err)?;
        ensure(g.is_in_basis(Basis::G), || format!("{alpha}: not in G"))?;
        ensure(g.coefficient(Basis::G, alpha).is_one(), || {
            format!("{alpha}: leading coefficient")
        })?;
        for (t, coeff) in g.terms() {
            ensure(coeff.is_integer() && coeff.is_positive(), || {
                format!("{alpha}: coefficient {coeff}")
            })?;
            ensure(t.index <= *alpha, || {
                format!("{alpha}: support {}", t.index)
            })?;
        }
    }
    Ok(format!("{} peak compositions", shapes.len()))
}

fn counterexamples() -> Outcome {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for check in reference_checks().map_err(err)?.into_iter().take(2) {
        let mut line = format!(
            "{}: residual_zero={} negative={} exact={} matches_printed={}",
            check.name,
            check.report.residual_zero,
            check.report.has_negative_coefficient(),
            check.exact_match,
            check.matches_printed
        );
        for d in &check.diff {
            line.push_str(&format!(
                "; at {} printed {} computed {}",
                d.index, d.printed, d.computed
            ));
        }
        if !(check.report.residual_zero
            && check.report.has_negative_coefficient()
            && check.matches_printed)
        {
            line.push_str(&format!("; computed {}", check.report.to_text()));
            failures.push(line);
        } else {
            notes.push(line);
        }
    }
    if failures.is_empty() {
        Ok(notes.join(" | "))
    } else {
        Err(failures.join(" | "))
    }
}

fn positive_difference() -> Outcome {
    let e = hat_p_monomial(&c(&[3, 2, 1]), Route::Statistic)
        .map_err(err)?
        .sub(&hat_p_monomial(&c(&[2, 3, 1]), Route::Statistic).map_err(err)?)
        .map_err(err)?;
    let report = expand_in_family(&e, Family::YoungQuasischur).map_err(err)?;
    let text = report.to_text();
    ensure(report.residual_zero, || "residual nonzero".into())?;
    ensure(
        text == "s^_(3,2,1)+s^_(3,1,2)+s^_(2,3,1)+s^_(2,1,3)+s^_(1,3,2)+s^_(1,2,3)",
        || text.clone(),
    )?;
    Ok(text)
}

fn multiplication() -> Outcome {
    let product = multiply(
        &hat_p_monomial(&c(&[1]), Route::Statistic).map_err(err)?,
        &schur_p(&c(&[3, 1])).map_err(err)?,
    );
    let report = expand_in_family(&product, Family::HatP).map_err(err)?;
    let text = report.to_text();
    ensure(report.residual_zero, || "residual nonzero".into())?;
    ensure(text == "P^_(4,1)+P^_(3,2)-P^_(2,3)", || text.clone())?;
    Ok(text)
}

fn schur_symmetry_and_oracle() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for lambda in strict_partitions(n) {
            let qf = schur_q(&lambda).map_err(err)?;
            ensure(is_symmetric(&qf), || format!("{lambda}: not symmetric"))?;
            ensure(
                m_coefficients(&qf) == schur_q_oracle(lambda.parts()),
                || format!("{lambda}: oracle differs"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} strict partitions"))
}

fn cardinalities() -> Outcome {
    let shape = c(&[2, 1]);
    let pct = enumerate_pct(&shape).map_err(err)?.len();
    let star = enumerate_mpct(&shape, true).map_err(err)?.len();
    ensure(pct == 3, || format!("|PCT(2,1)| = {pct}"))?;
    ensure(star == 4, || format!("|MPCT*(2,1)| = {star}"))?;
    let shapes = peak_shapes(6);
    for alpha in &shapes {
        let star = enumerate_mpct(alpha, true).map_err(err)?.len();
        let full = enumerate_mpct(alpha, false).map_err(err)?.len();
        ensure(full == star << alpha.len(), || {
            format!("{alpha}: {full} vs 2^l * {star}")
        })?;
        let mut weighted = Coeff::from_integer(0.into());
        for t in enumerate_pct(alpha).map_err(err)? {
            let (p, m) = stats_p_m(&t).map_err(err)?;
            weighted += Coeff::from_integer(BigInt::from(1u64 << p))
                / Coeff::from_integer(BigInt::from(1u64 << m));
        }
        ensure(weighted == Coeff::from_integer(star.into()), || {
            format!("{alpha}: weighted PCT count {weighted} vs {star}")
        })?;
    }
    Ok(format!(
        "|PCT(2,1)|=3, |MPCT*(2,1)|=4, {} shapes",
        shapes.len()
    ))
}

fn descent_fixtures() -> Outcome {
    let s1: Tableau = "1 2 8' / 3 4' / 5 6 7' / 9'".parse().map_err(err)?;
    let rw = reading_word(&s1);
    ensure(rw.to_string() == "1 3 5 9' 2 4' 6 8' 7'", || {
        format!("rw = {rw}")
    })?;
    let des = descent_set(&rw).map_err(err)?;
    ensure(des.elements() == [2, 3, 6], || format!("Des = {des}"))?;
    let peak = peak_set_of_tableau(&s1).map_err(err)?;
    ensure(peak.elements() == [2, 6], || format!("Peak = {peak}"))?;
    let t: Tableau = "1 2 5' / 3 4' / 4 4 5' / 5'".parse().map_err(err)?;
    let st = standardize(&t).map_err(err)?;
    ensure(st == s1, || format!("St' = {st}"))?;
    Ok(format!("rw = {rw}, Des = {des}, Peak = {peak}"))
}

fn marking_identity(w: &MarkedWord) -> Result<bool, String> {
    let n = w.len() as u32;
    let des = descent_set(w).map_err(err)?;
    let peak: Vec<u32> = des
        .elements()
        .iter()
        .copied()
        .filter(|&i| i > 1 && !des.contains(i - 1))
        .collect();
    let lhs = peak_fn(&SubsetOfRange::new(n, peak.clone()).map_err(err)?).map_err(err)?;
    let mut rhs = QSymExpr::zero(n);
    for marked in enumerate_word_markings(w).map_err(err)? {
        rhs = rhs
            .add(&word_to_fundamental(&marked).map_err(err)?)
            .map_err(err)?;
    }
    let factor = Coeff::new(1.into(), BigInt::from(1u64 << (peak.len() + 1)));
    Ok(equal(&lhs, &rhs.scale(&factor)))
}

fn word_markings() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let k = rng.gen_range(1..=6u32);
        let mut values: Vec<u32> = (1..=k).collect();
        values.shuffle(&mut rng);
        let w = MarkedWord::from_values(&values);
        ensure(marking_identity(&w)?, || format!("identity fails for {w}"))?;
    }
    Ok("200 words".into())
}

type Criterion = (u32, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 10] = [
    (1, "worked example", 1, worked_example),
    (2, "four-route agreement", 60, four_routes),
    (3, "unitriangularity", 60, unitriangularity),
    (4, "counterexample reproduction", 30, counterexamples),
    (5, "positive difference", 30, positive_difference),
    (6, "multiplication counterexample", 10, multiplication),
    (
        7,
        "schur Q symmetry and oracle",
        120,
        schur_symmetry_and_oracle,
    ),
    (8, "cardinalities", 60, cardinalities),
    (9, "descent and peak fixtures", 1, descent_fixtures),
    (10, "word-marking identity", 30, word_markings),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, name, limit, run) in CRITERIA {
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over {limit} s limit; {d}")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} {id:>2} {name} ({:.3} s): {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
