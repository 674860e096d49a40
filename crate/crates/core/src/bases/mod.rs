//! Quasisymmetric Schur P/Q-functions and related families.
//!
//! `P̂_α` can be built four ways, which must agree:
//!
//! * [`Route::Statistic`]: `Σ_{T ∈ PCT(α)} 2^{p(T) − m(T)} M_{wt(T)}`
//! * [`Route::Marked`]: `Σ_{T ∈ MPCT*(α)} M_{wt(T)}`
//! * [`hat_p_fundamental`]: `Σ_{S ∈ SMPCT*(α)} F_{Des(S)}`
//! * [`hat_p_peak`]: `2^{−ℓ(α)} Σ_{S ∈ SPCT(α)} 2^{|Peak(S)|+1} G_{Peak(S)}`
//!
//! Schur's Q-functions are assembled from `Q̂` by the signed sum over peak
//! rearrangements of a strict partition.

mod golden;
mod solve;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::compositions::{
    is_peak_composition, is_strict_partition, peak_compositions, rearrangements, sort_to_partition,
    strict_partitions, Composition,
};
use crate::error::{Error, Result};
use crate::qsym::{
    fundamental, monomial, peak_fn, pow2, to_monomial, Basis, Coeff, QSymExpr, Term,
};
use crate::tableaux::{
    descent_set, enumerate_mpct, enumerate_pct, enumerate_ssyct, enumerate_standard,
    peak_set_of_tableau, reading_word, stats_p_m, weight,
};

pub use golden::{
    reference_checks, ReferenceCheck, ReferenceExpansion, Sign, TermDiff, REFERENCE_EXPANSIONS,
};
pub use solve::{expand_in_family, expand_in_family_with, ExpansionReport};
pub use verify::{verify_identities, verify_identities_with, Routes, VerifyReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Statistic,
    Marked,
}

fn require_peak(alpha: &Composition) -> Result<()> {
    if is_peak_composition(alpha) {
        Ok(())
    } else {
        Err(Error::NotPeakComposition(alpha.clone()))
    }
}

fn require_strict(lambda: &Composition) -> Result<()> {
    if is_strict_partition(lambda) {
        Ok(())
    } else {
        Err(Error::NotStrictPartition(lambda.clone()))
    }
}

fn m_term(index: Composition) -> Term {
    Term {
        basis: Basis::M,
        index,
    }
}

/// `P̂_α` in the monomial basis.
pub fn hat_p_monomial(alpha: &Composition, route: Route) -> Result<QSymExpr> {
    require_peak(alpha)?;
    let mut out = QSymExpr::zero(alpha.size());
    match route {
        Route::Statistic => {
            for t in enumerate_pct(alpha)? {
                let (p, m) = stats_p_m(&t)?;
                out.add_term(m_term(weight(&t)?), pow2(p as i64 - m as i64));
            }
        }
        Route::Marked => {
            for t in enumerate_mpct(alpha, true)? {
                out.add_term(m_term(weight(&t)?), Coeff::one());
            }
        }
    }
    Ok(out)
}

/// `Q̂_α = 2^{ℓ(α)} P̂_α` in the monomial basis.
pub fn hat_q_monomial(alpha: &Composition) -> Result<QSymExpr> {
    Ok(hat_p_monomial(alpha, Route::Statistic)?.scale(&pow2(alpha.len() as i64)))
}

/// `Q̂_α` as the weight generating function of `MPCT(α)`.
pub fn hat_q_monomial_marked(alpha: &Composition) -> Result<QSymExpr> {
    require_peak(alpha)?;
    let mut out = QSymExpr::zero(alpha.size());
    for t in enumerate_mpct(alpha, false)? {
        out.add_term(m_term(weight(&t)?), Coeff::one());
    }
    Ok(out)
}

fn fundamental_sum(alpha: &Composition, star: bool) -> Result<QSymExpr> {
    require_peak(alpha)?;
    let mut out = QSymExpr::zero(alpha.size());
    for s in enumerate_standard(alpha, true, star)? {
        let d = descent_set(&reading_word(&s))?;
        out = out.add(&fundamental(&d))?;
    }
    Ok(out)
}

/// `P̂_α = Σ_{S ∈ SMPCT*(α)} F_{Des(S)}`.
pub fn hat_p_fundamental(alpha: &Composition) -> Result<QSymExpr> {
    fundamental_sum(alpha, true)
}

/// `Q̂_α = Σ_{S ∈ SMPCT(α)} F_{Des(S)}`.
pub fn hat_q_fundamental(alpha: &Composition) -> Result<QSymExpr> {
    fundamental_sum(alpha, false)
}

/// `P̂_α` in the peak basis, from the standard unmarked tableaux of shape `α`.
pub fn hat_p_peak(alpha: &Composition) -> Result<QSymExpr> {
    require_peak(alpha)?;
    let mut out = QSymExpr::zero(alpha.size());
    for s in enumerate_standard(alpha, false, false)? {
        let peak = peak_set_of_tableau(&s)?;
        let weight = pow2(peak.len() as i64 + 1 - alpha.len() as i64);
        out = out.add(&peak_fn(&peak)?.scale(&weight))?;
    }
    Ok(out)
}

/// Schur's `Q_λ` as the signed sum of `Q̂_α` over peak compositions `α`
/// rearranging `λ`, the sign being that of the sorting permutation.
pub fn schur_q(lambda: &Composition) -> Result<QSymExpr> {
    require_strict(lambda)?;
    let mut out = QSymExpr::zero(lambda.size());
    for alpha in rearrangements(lambda) {
        if !is_peak_composition(&alpha) {
            continue;
        }
        let (_, inversions) = sort_to_partition(&alpha)?;
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        out = out.add(&hat_q_monomial(&alpha)?.scale(&crate::qsym::int(sign)))?;
    }
    Ok(out)
}

/// `P_λ = 2^{−ℓ(λ)} Q_λ`.
pub fn schur_p(lambda: &Composition) -> Result<QSymExpr> {
    Ok(schur_q(lambda)?.scale(&pow2(-(lambda.len() as i64))))
}

/// Young quasischur function: the strong-weight generating function of
/// semistandard Young composition tableaux of shape `beta`.
pub fn young_quasischur(beta: &Composition) -> QSymExpr {
    let mut out = QSymExpr::zero(beta.size());
    for t in enumerate_ssyct(beta) {
        if let Ok(w) = weight(&t) {
            out.add_term(m_term(w), Coeff::one());
        }
    }
    out
}

/// Families that expressions can be built from or expanded into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    HatP,
    HatQ,
    SchurP,
    SchurQ,
    YoungQuasischur,
    Basis(Basis),
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::HatP,
        Family::HatQ,
        Family::SchurP,
        Family::SchurQ,
        Family::YoungQuasischur,
        Family::Basis(Basis::M),
        Family::Basis(Basis::F),
        Family::Basis(Basis::G),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::HatP => "hatP",
            Family::HatQ => "hatQ",
            Family::SchurP => "schurP",
            Family::SchurQ => "schurQ",
            Family::YoungQuasischur => "youngQS",
            Family::Basis(b) => b.symbol(),
        }
    }

    /// Display symbol used when writing an expansion out as text.
    fn symbol(self) -> &'static str {
        match self {
            Family::HatP => "P^",
            Family::HatQ => "Q^",
            Family::SchurP => "P",
            Family::SchurQ => "Q",
            Family::YoungQuasischur => "s^",
            Family::Basis(b) => b.symbol(),
        }
    }

    /// Checks that `index` is a legal index for this family.
    pub fn validate(self, index: &Composition) -> Result<()> {
        if index.is_empty() {
            return Err(Error::InvalidIndex {
                family: self.name(),
                reason: "empty index".into(),
            });
        }
        match self {
            Family::HatP | Family::HatQ | Family::Basis(Basis::G) => require_peak(index),
            Family::SchurP | Family::SchurQ => require_strict(index),
            Family::YoungQuasischur | Family::Basis(_) => Ok(()),
        }
    }

    /// Every legal index of degree `n`, ascending lexicographically.
    pub fn indices(self, n: u32) -> Vec<Composition> {
        match self {
            Family::HatP | Family::HatQ | Family::Basis(Basis::G) => peak_compositions(n),
            Family::SchurP | Family::SchurQ => strict_partitions(n),
            Family::YoungQuasischur | Family::Basis(_) => {
                if n == 0 {
                    Vec::new()
                } else {
                    Composition::all(n)
                }
            }
        }
    }

    /// The family member at `index`, written in its native basis: `M` for the
    /// tableau families, `F`/`G` for the basis families.
    pub fn element(self, index: &Composition) -> Result<QSymExpr> {
        self.validate(index)?;
        match self {
            Family::HatP => hat_p_monomial(index, Route::Statistic),
            Family::HatQ => hat_q_monomial(index),
            Family::SchurP => schur_p(index),
            Family::SchurQ => schur_q(index),
            Family::YoungQuasischur => Ok(young_quasischur(index)),
            Family::Basis(Basis::M) => Ok(monomial(index)),
            Family::Basis(Basis::F) => Ok(fundamental(&crate::compositions::subset_of_comp(index))),
            Family::Basis(Basis::G) => peak_fn(&crate::compositions::subset_of_comp(index)),
        }
    }

    /// The family member at `index` in the monomial basis.
    pub fn element_monomial(self, index: &Composition) -> Result<QSymExpr> {
        Ok(to_monomial(&self.element(index)?))
    }

    pub fn label(self, index: &Composition) -> String {
        match self {
            Family::Basis(Basis::F) | Family::Basis(Basis::G) => {
                format!(
                    "{}_{}",
                    self.symbol(),
                    crate::compositions::subset_of_comp(index)
                )
            }
            _ => format!("{}_{}", self.symbol(), index),
        }
    }

    /// Whether indices are written as subsets rather than compositions.
    pub fn indexed_by_subsets(self) -> bool {
        matches!(self, Family::Basis(Basis::F) | Family::Basis(Basis::G))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}
