//! Exact change of basis.
//!
//! `P̂`/`Q̂` targets use lexicographic triangular elimination: the monomial
//! expansion of `P̂_α` has coefficient 1 at `M_α` and is otherwise supported
//! strictly below `α`. That property is checked for every member used; if it
//! ever fails the solver falls back to the dense route. All other targets
//! use a dense fraction-free elimination over the full monomial coordinates.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::compositions::{is_peak_composition, Composition};
use crate::error::Result;
use crate::par::{self, Execution};
use crate::qsym::{pow2, to_monomial, Basis, Coeff, QSymExpr};
use crate::render::{linear_combination, Style};

use super::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub family: Family,
    pub degree: u32,
    /// Nonzero coefficients, keyed by family index.
    pub coefficients: BTreeMap<Composition, Coeff>,
    /// `input − Σ coefficient · member`, in the monomial basis.
    pub residual: QSymExpr,
    pub residual_zero: bool,
}

impl ExpansionReport {
    fn empty(family: Family, degree: u32) -> Self {
        ExpansionReport {
            family,
            degree,
            coefficients: BTreeMap::new(),
            residual: QSymExpr::zero(degree),
            residual_zero: true,
        }
    }

    pub fn coefficient(&self, index: &Composition) -> Coeff {
        self.coefficients
            .get(index)
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.coefficients.values().any(|c| c.is_negative())
    }

    /// `Σ coefficient · member`, in the monomial basis.
    pub fn recombine(&self) -> Result<QSymExpr> {
        let mut out = QSymExpr::zero(self.degree);
        for (index, c) in &self.coefficients {
            out = out.add(&self.family.element_monomial(index)?.scale(c))?;
        }
        Ok(out)
    }

    /// Text form, terms in descending lexicographic order of index.
    pub fn to_text(&self) -> String {
        linear_combination(
            self.coefficients
                .iter()
                .rev()
                .map(|(index, c)| (self.family.label(index), c)),
            Style::Text,
        )
    }
}

pub fn expand_in_family(e: &QSymExpr, family: Family) -> Result<ExpansionReport> {
    expand_in_family_with(e, family, Execution::default())
}

pub fn expand_in_family_with(
    e: &QSymExpr,
    family: Family,
    mode: Execution,
) -> Result<ExpansionReport> {
    if e.degree() == 0 {
        return Ok(ExpansionReport::empty(family, 0));
    }
    match family {
        Family::HatP | Family::HatQ => match triangular(e, family)? {
            Some(report) => Ok(report),
            None => dense(e, family, mode),
        },
        Family::Basis(Basis::M) => {
            let m = to_monomial(e);
            let mut report = ExpansionReport::empty(family, e.degree());
            report.coefficients = m
                .terms()
                .map(|(t, c)| (t.index.clone(), c.clone()))
                .collect();
            Ok(report)
        }
        _ => dense(e, family, mode),
    }
}

/// Greedy elimination of the lexicographically largest monomial. Returns
/// `None` if some member lacks the unit leading term.
fn triangular(e: &QSymExpr, family: Family) -> Result<Option<ExpansionReport>> {
    let mut residual = to_monomial(e);
    let mut report = ExpansionReport::empty(family, e.degree());
    let mut cache: HashMap<Composition, QSymExpr> = HashMap::new();
    // terms iterate in descending index order, so the first is the leader
    loop {
        let Some((lead, c)) = residual
            .terms()
            .next()
            .map(|(t, c)| (t.index.clone(), c.clone()))
        else {
            break;
        };
        if !is_peak_composition(&lead) {
            break;
        }
        let member = match cache.get(&lead) {
            Some(m) => m.clone(),
            None => {
                let m = family.element_monomial(&lead)?;
                cache.insert(lead.clone(), m.clone());
                m
            }
        };
        let leading = match family {
            Family::HatQ => pow2(lead.len() as i64),
            _ => Coeff::one(),
        };
        let unit_leader = member
            .terms()
            .next()
            .is_some_and(|(t, x)| t.index == lead && *x == leading);
        if !unit_leader {
            return Ok(None);
        }
        let factor = c / leading;
        residual = residual.sub(&member.scale(&factor))?;
        *report.coefficients.entry(lead).or_insert_with(Coeff::zero) += factor;
    }
    report.coefficients.retain(|_, c| !c.is_zero());
    report.residual_zero = residual.is_zero();
    report.residual = residual;
    Ok(Some(report))
}

/// Dense solve on the monomial coordinates of degree `n`.
fn dense(e: &QSymExpr, family: Family, mode: Execution) -> Result<ExpansionReport> {
    let n = e.degree();
    let target = to_monomial(e);
    let indices = family.indices(n);
    let members = par::map(&indices, mode, |idx| family.element_monomial(idx))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let rows = Composition::all(n);
    let row_of: HashMap<&Composition, usize> =
        rows.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let cols = indices.len();

    // clear denominators column by column, and in the right-hand side
    let mut col_scale = Vec::with_capacity(cols);
    let mut matrix = vec![vec![BigInt::zero(); cols + 1]; rows.len()];
    for (j, m) in members.iter().enumerate() {
        let d = m
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        for (t, c) in m.terms() {
            matrix[row_of[&t.index]][j] = (c * Coeff::from_integer(d.clone())).to_integer();
        }
        col_scale.push(d);
    }
    let rhs_scale = target
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    for (t, c) in target.terms() {
        matrix[row_of[&t.index]][cols] = (c * Coeff::from_integer(rhs_scale.clone())).to_integer();
    }

    let pivots = eliminate(&mut matrix, cols);

    let mut report = ExpansionReport::empty(family, n);
    for &(r, j) in &pivots {
        let x = Coeff::new(matrix[r][cols].clone(), matrix[r][j].clone());
        let c = x * Coeff::new(col_scale[j].clone(), rhs_scale.clone());
        if !c.is_zero() {
            report.coefficients.insert(indices[j].clone(), c);
        }
    }
    let residual = target.sub(&report.recombine()?)?;
    report.residual_zero = residual.is_zero();
    report.residual = residual;
    Ok(report)
}

/// Fraction-free Gauss-Jordan elimination on an integer matrix whose last
/// column is the right-hand side. Returns `(row, column)` pivot positions.
fn eliminate(matrix: &mut [Vec<BigInt>], cols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for j in 0..cols {
        let Some(p) = (next..matrix.len()).find(|&r| !matrix[r][j].is_zero()) else {
            continue;
        };
        matrix.swap(next, p);
        let pivot_row = matrix[next].clone();
        for (r, row) in matrix.iter_mut().enumerate() {
            if r == next || row[j].is_zero() {
                continue;
            }
            let a = pivot_row[j].clone();
            let b = row[j].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &a - y * &b;
            }
            normalize(row);
        }
        pivots.push((next, j));
        next += 1;
    }
    pivots
}

/// Divides a row by the gcd of its entries.
fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}
