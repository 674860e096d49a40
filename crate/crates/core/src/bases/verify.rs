//! Cross-checks between the independent constructions of `P̂`, `Q̂` and `Q`.

use std::cmp::Ordering;

use num_traits::{One, Signed};
use serde::Serialize;

use crate::compositions::{peak_compositions, strict_partitions, Composition};
use crate::error::Result;
use crate::par::{self, Execution};
use crate::qsym::{equal, is_symmetric, pow2, to_monomial, Basis, QSymExpr};

use super::{
    hat_p_fundamental, hat_p_monomial, hat_p_peak, hat_q_fundamental, hat_q_monomial_marked,
    schur_p, schur_q, Route,
};

pub type RouteFn = fn(&Composition) -> Result<QSymExpr>;

/// The four constructions of `P̂_α` being compared.
#[derive(Clone, Copy)]
pub struct Routes {
    pub statistic: RouteFn,
    pub marked: RouteFn,
    pub fundamental: RouteFn,
    pub peak: RouteFn,
}

impl Default for Routes {
    fn default() -> Self {
        Routes {
            statistic: |a| hat_p_monomial(a, Route::Statistic),
            marked: |a| hat_p_monomial(a, Route::Marked),
            fundamental: hat_p_fundamental,
            peak: hat_p_peak,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub index: Vec<u32>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: u32,
    pub shapes_checked: usize,
    pub partitions_checked: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_identities(n_max: u32) -> VerifyReport {
    verify_identities_with(n_max, &Routes::default(), Execution::default())
}

pub fn verify_identities_with(n_max: u32, routes: &Routes, mode: Execution) -> VerifyReport {
    let shapes: Vec<Composition> = (1..=n_max).flat_map(peak_compositions).collect();
    let partitions: Vec<Composition> = (1..=n_max).flat_map(strict_partitions).collect();

    let mut violations: Vec<Violation> = par::map(&shapes, mode, |a| check_shape(a, routes))
        .into_iter()
        .flatten()
        .chain(
            par::map(&partitions, mode, check_partition)
                .into_iter()
                .flatten(),
        )
        .collect();
    violations.sort_by(|x, y| {
        (x.index.iter().sum::<u32>(), &x.index, x.check).cmp(&(
            y.index.iter().sum::<u32>(),
            &y.index,
            y.check,
        ))
    });
    VerifyReport {
        n_max,
        shapes_checked: shapes.len(),
        partitions_checked: partitions.len(),
        violations,
    }
}

fn violation(check: &'static str, index: &Composition, detail: impl Into<String>) -> Violation {
    Violation {
        check,
        index: index.parts().to_vec(),
        detail: detail.into(),
    }
}

fn check_shape(alpha: &Composition, routes: &Routes) -> Vec<Violation> {
    let mut out = Vec::new();
    let run = |name: &'static str, f: RouteFn, out: &mut Vec<Violation>| match f(alpha) {
        Ok(e) => Some(e),
        Err(err) => {
            out.push(violation(name, alpha, format!("route failed: {err}")));
            None
        }
    };
    let Some(reference) = run("statistic route", routes.statistic, &mut out) else {
        return out;
    };
    for (name, f) in [
        ("marked route", routes.marked),
        ("fundamental route", routes.fundamental),
        ("peak route", routes.peak),
    ] {
        if let Some(e) = run(name, f, &mut out) {
            if !equal(&e, &reference) {
                out.push(violation(
                    name,
                    alpha,
                    format!("{} != {}", to_monomial(&e), reference),
                ));
            }
        }
    }

    // leading monomial
    match reference.terms().next() {
        Some((t, c)) if t.index == *alpha && c.is_one() => {}
        _ => out.push(violation("leading monomial", alpha, reference.to_string())),
    }

    // Q̂ = 2^ℓ P̂ through the unrestricted marked tableaux and their standard forms
    let q = reference.scale(&pow2(alpha.len() as i64));
    for (name, result) in [
        ("hatQ marked route", hat_q_monomial_marked(alpha)),
        ("hatQ fundamental route", hat_q_fundamental(alpha)),
    ] {
        match result {
            Ok(e) if equal(&e, &q) => {}
            Ok(e) => out.push(violation(
                name,
                alpha,
                format!("{} != {}", to_monomial(&e), q),
            )),
            Err(err) => out.push(violation(name, alpha, err.to_string())),
        }
    }

    // unitriangularity of the peak expansion
    if let Ok(g) = (routes.peak)(alpha) {
        if let Some(why) = unitriangular_failure(&g, alpha) {
            out.push(violation("peak unitriangularity", alpha, why));
        }
    }
    out
}

/// Why `g` fails to be a positive integral unitriangular `G`-expansion led by `alpha`.
pub(crate) fn unitriangular_failure(g: &QSymExpr, alpha: &Composition) -> Option<String> {
    if !g.is_in_basis(Basis::G) {
        return Some(format!("not a G-expansion: {g}"));
    }
    if !g.coefficient(Basis::G, alpha).is_one() {
        return Some(format!("coefficient at {alpha} is not 1: {g}"));
    }
    for (t, c) in g.terms() {
        if !c.is_integer() || !c.is_positive() {
            return Some(format!(
                "coefficient {c} at {} is not a positive integer",
                t.index
            ));
        }
        if t.index != *alpha && t.index.cmp(alpha) != Ordering::Less {
            return Some(format!("support {} is not below {alpha}", t.index));
        }
    }
    None
}

fn check_partition(lambda: &Composition) -> Vec<Violation> {
    let mut out = Vec::new();
    match schur_q(lambda) {
        Ok(q) if is_symmetric(&q) => {}
        Ok(q) => out.push(violation("schurQ symmetry", lambda, q.to_string())),
        Err(err) => out.push(violation("schurQ symmetry", lambda, err.to_string())),
    }
    match schur_p(lambda) {
        Ok(p) if p.is_integral() => {}
        Ok(p) => out.push(violation("schurP integrality", lambda, p.to_string())),
        Err(err) => out.push(violation("schurP integrality", lambda, err.to_string())),
    }
    out
}
