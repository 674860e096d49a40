//! Homogeneous quasisymmetric expressions over exact rationals.
//!
//! An expression is a finite linear combination of monomial (`M`),
//! fundamental (`F`) and peak (`G`) basis elements of one degree. Terms in
//! different bases may coexist; [`to_monomial`] resolves them.
//!
//! Every index is stored as a [`Composition`]. For `F_D` and `G_P` this is
//! `comp(D)` / `comp(P)`; the subset view is recovered with
//! [`Term::subset`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::{
    comp_of_mask, comp_of_subset, is_peak_composition, subset_of_comp, Composition, SubsetOfRange,
};
use crate::error::{Error, Result};
use crate::tableaux::{descent_set, MarkedWord};

pub type Coeff = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    F,
    G,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::G => "G",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A basis element. Ordered by basis (`M < F < G`), then by index in
/// descending lexicographic order, which is the order terms are printed in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub basis: Basis,
    pub index: Composition,
}

impl Term {
    pub fn subset(&self) -> SubsetOfRange {
        subset_of_comp(&self.index)
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.basis
            .cmp(&other.basis)
            .then_with(|| other.index.cmp(&self.index))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymExpr {
    degree: u32,
    terms: BTreeMap<Term, Coeff>,
}

pub(crate) fn int(k: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(k))
}

/// `2^e` for a possibly negative exponent.
pub(crate) fn pow2(e: i64) -> Coeff {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

impl QSymExpr {
    pub fn zero(degree: u32) -> Self {
        QSymExpr {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`, of degree zero.
    pub fn unit() -> Self {
        let mut e = QSymExpr::zero(0);
        e.terms.insert(
            Term {
                basis: Basis::M,
                index: Composition::default(),
            },
            Coeff::one(),
        );
        e
    }

    /// Builds an expression from raw terms, validating every index.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Term, Coeff)>) -> Result<Self> {
        let mut e = QSymExpr::zero(degree);
        for (term, c) in terms {
            if term.index.size() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: term.index.size(),
                });
            }
            if term.basis == Basis::G && !is_peak_composition(&term.index) {
                return Err(Error::NotPeakComposition(term.index));
            }
            e.add_term(term, c);
        }
        Ok(e)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, basis: Basis, index: &Composition) -> Coeff {
        self.terms
            .get(&Term {
                basis,
                index: index.clone(),
            })
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// Whether every term lives in `basis`.
    pub fn is_in_basis(&self, basis: Basis) -> bool {
        self.terms.keys().all(|t| t.basis == basis)
    }

    pub(crate) fn add_term(&mut self, term: Term, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &QSymExpr) -> Result<QSymExpr> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QSymExpr) -> Result<QSymExpr> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> QSymExpr {
        if c.is_zero() {
            return QSymExpr::zero(self.degree);
        }
        QSymExpr {
            degree: self.degree,
            terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect(),
        }
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

pub fn monomial(beta: &Composition) -> QSymExpr {
    if beta.is_empty() {
        return QSymExpr::unit();
    }
    let mut e = QSymExpr::zero(beta.size());
    e.add_term(
        Term {
            basis: Basis::M,
            index: beta.clone(),
        },
        Coeff::one(),
    );
    e
}

pub fn fundamental(d: &SubsetOfRange) -> QSymExpr {
    let mut e = QSymExpr::zero(d.ambient());
    e.add_term(
        Term {
            basis: Basis::F,
            index: comp_of_subset(d),
        },
        Coeff::one(),
    );
    e
}

/// `G_P`; `comp(P)` must be a peak composition.
pub fn peak_fn(p: &SubsetOfRange) -> Result<QSymExpr> {
    let index = comp_of_subset(p);
    if !is_peak_composition(&index) {
        return Err(Error::InvalidIndex {
            family: "G",
            reason: format!("{p} contains 1 or two consecutive integers"),
        });
    }
    let mut e = QSymExpr::zero(p.ambient());
    e.add_term(
        Term {
            basis: Basis::G,
            index,
        },
        Coeff::one(),
    );
    Ok(e)
}

/// Iterates the supersets of `mask` inside `full`.
fn supersets(mask: u64, full: u64) -> impl Iterator<Item = u64> {
    let free = full & !mask;
    let mut sub = free;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = mask | sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & free;
        }
        Some(out)
    })
}

/// For each `gamma` (by partial-sum mask), how many times `M_gamma` occurs in
/// the expansion of one `F` or `G` basis element.
fn monomial_counts(term: &Term, n: u32) -> Vec<(u64, u64)> {
    let full = (1u64 << (n - 1)) - 1;
    let mask = term.index.mask();
    match term.basis {
        Basis::M => vec![(mask, 1)],
        Basis::F => supersets(mask, full).map(|g| (g, 1)).collect(),
        Basis::G => {
            // F_D for every D with P inside D Δ (D + 1); elements of D + 1 above n - 1
            // never matter because P lies in [n - 1]
            let mut counts = vec![0u64; 1 << (n - 1)];
            for d in 0..=full {
                if mask & !(d ^ (d << 1)) == 0 {
                    for g in supersets(d, full) {
                        counts[g as usize] += 1;
                    }
                }
            }
            counts
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c > 0)
                .map(|(g, c)| (g as u64, c))
                .collect()
        }
    }
}

/// Rewrites every term in the monomial basis.
pub fn to_monomial(e: &QSymExpr) -> QSymExpr {
    if e.degree == 0 || e.is_in_basis(Basis::M) {
        return e.clone();
    }
    let n = e.degree;
    let mut acc: BTreeMap<u64, Coeff> = BTreeMap::new();
    for (term, c) in &e.terms {
        for (g, count) in monomial_counts(term, n) {
            *acc.entry(g).or_insert_with(Coeff::zero) += c * int(count as i64);
        }
    }
    let mut out = QSymExpr::zero(n);
    for (g, c) in acc {
        out.add_term(
            Term {
                basis: Basis::M,
                index: comp_of_mask(n, g),
            },
            c,
        );
    }
    out
}

/// Quasi-shuffles of two part lists, with multiplicity.
fn quasi_shuffle(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, u64>) {
    match (a.split_first(), b.split_first()) {
        (None, None) => *out.entry(prefix.clone()).or_insert(0) += 1,
        (Some((&x, ra)), None) => {
            prefix.push(x);
            quasi_shuffle(ra, b, prefix, out);
            prefix.pop();
        }
        (None, Some((&y, rb))) => {
            prefix.push(y);
            quasi_shuffle(a, rb, prefix, out);
            prefix.pop();
        }
        (Some((&x, ra)), Some((&y, rb))) => {
            prefix.push(x);
            quasi_shuffle(ra, b, prefix, out);
            prefix.pop();
            prefix.push(y);
            quasi_shuffle(a, rb, prefix, out);
            prefix.pop();
            prefix.push(x + y);
            quasi_shuffle(ra, rb, prefix, out);
            prefix.pop();
        }
    }
}

/// Product of two expressions, computed in the monomial basis.
pub fn multiply(a: &QSymExpr, b: &QSymExpr) -> QSymExpr {
    let (ma, mb) = (to_monomial(a), to_monomial(b));
    let degree = a.degree + b.degree;
    let mut out = QSymExpr::zero(degree);
    for (ta, ca) in &ma.terms {
        for (tb, cb) in &mb.terms {
            let mut shuffles = BTreeMap::new();
            quasi_shuffle(
                ta.index.parts(),
                tb.index.parts(),
                &mut Vec::new(),
                &mut shuffles,
            );
            let c = ca * cb;
            for (parts, mult) in shuffles {
                out.add_term(
                    Term {
                        basis: Basis::M,
                        index: Composition::from_parts_unchecked(parts),
                    },
                    &c * int(mult as i64),
                );
            }
        }
    }
    out
}

/// Equality as quasisymmetric functions.
pub fn equal(a: &QSymExpr, b: &QSymExpr) -> bool {
    a.degree == b.degree && to_monomial(a).terms == to_monomial(b).terms
}

/// Whether rearrangements of the same composition share one monomial coefficient.
pub fn is_symmetric(e: &QSymExpr) -> bool {
    let m = to_monomial(e);
    let mut class_value: BTreeMap<Vec<u32>, Coeff> = BTreeMap::new();
    for gamma in Composition::all(m.degree) {
        let mut key = gamma.parts().to_vec();
        key.sort_unstable();
        let c = m.coefficient(Basis::M, &gamma);
        match class_value.get(&key) {
            Some(seen) if *seen != c => return false,
            Some(_) => {}
            None => {
                class_value.insert(key, c);
            }
        }
    }
    true
}

/// `F_{Des(w)}` for a word with standard content.
pub fn word_to_fundamental(w: &MarkedWord) -> Result<QSymExpr> {
    Ok(fundamental(&descent_set(w)?))
}
