//! Compositions, subsets of `{1, ..., n-1}`, and the maps between them.
//!
//! A composition of `n` is an ordered list of positive parts summing to `n`.
//! Subsets of `[n-1]` correspond bijectively to compositions of `n` via
//! partial sums; descent sets and peak sets live on the subset side.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An ordered list of positive integers.
///
/// The derived `Ord` is lexicographic on the parts, which agrees with the
/// lexicographic order on compositions of a fixed size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// All compositions of `n`, in ascending lexicographic order.
    pub fn all(n: u32) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::default()];
        }
        let mut out: Vec<Composition> = (0..1u64 << (n - 1))
            .map(|mask| comp_of_mask(n, mask))
            .collect();
        out.sort();
        out
    }

    /// Bitmask of the partial-sum set: bit `i - 1` is set iff `i` is a partial sum.
    pub(crate) fn mask(&self) -> u64 {
        let mut acc = 0u32;
        let mut mask = 0u64;
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            mask |= 1 << (acc - 1);
        }
        mask
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts, optionally wrapped in parentheses: `2,1` or `(2,1)`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// A subset of `{1, ..., ambient - 1}`, stored as a strictly increasing list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetOfRange {
    ambient: u32,
    elements: Vec<u32>,
}

impl SubsetOfRange {
    pub fn new(ambient: u32, elements: Vec<u32>) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::EmptyAmbient);
        }
        for &e in &elements {
            if e == 0 || e >= ambient {
                return Err(Error::SubsetOutOfRange {
                    element: e,
                    max: ambient - 1,
                });
            }
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::SubsetNotIncreasing(elements));
        }
        Ok(SubsetOfRange { ambient, elements })
    }

    pub fn empty(ambient: u32) -> Result<Self> {
        SubsetOfRange::new(ambient, Vec::new())
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_superset_of(&self, other: &SubsetOfRange) -> bool {
        other.elements.iter().all(|&e| self.contains(e))
    }

    pub(crate) fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &e| m | 1 << (e - 1))
    }
}

impl fmt::Display for SubsetOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn comp_of_mask(n: u32, mask: u64) -> Composition {
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..n {
        if mask >> (i - 1) & 1 == 1 {
            parts.push(i - last);
            last = i;
        }
    }
    parts.push(n - last);
    Composition(parts)
}

/// The composition of `D.ambient` whose partial sums are the elements of `D`.
pub fn comp_of_subset(d: &SubsetOfRange) -> Composition {
    comp_of_mask(d.ambient, d.mask())
}

/// The set of proper partial sums of `beta`. `beta` must be nonempty.
pub fn subset_of_comp(beta: &Composition) -> SubsetOfRange {
    let mut acc = 0;
    let mut elements = Vec::with_capacity(beta.len().saturating_sub(1));
    for &p in beta.parts().iter().take(beta.len().saturating_sub(1)) {
        acc += p;
        elements.push(acc);
    }
    SubsetOfRange {
        ambient: beta.size().max(1),
        elements,
    }
}

/// `gamma ⪯ beta`: consecutive blocks of `gamma` sum to the parts of `beta`.
pub fn refines(gamma: &Composition, beta: &Composition) -> bool {
    if gamma.size() != beta.size() {
        return false;
    }
    let mut blocks = gamma.parts().iter();
    for &target in beta.parts() {
        let mut acc = 0;
        while acc < target {
            match blocks.next() {
                Some(&g) => acc += g,
                None => return false,
            }
        }
        if acc != target {
            return false;
        }
    }
    blocks.next().is_none()
}

/// Every composition refining `beta`, in ascending lexicographic order.
///
/// There are `2^(|beta| - len(beta))` of them: each part `b` splits independently
/// along its `b - 1` interior cut points.
pub fn refinements(beta: &Composition) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for &b in beta.parts() {
        let pieces = Composition::all(b);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |piece| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(piece.parts());
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<Composition> = out.into_iter().map(Composition).collect();
    out.sort();
    out
}

/// Every part except possibly the last is at least 2.
pub fn is_peak_composition(beta: &Composition) -> bool {
    !beta.is_empty() && beta.parts()[..beta.len() - 1].iter().all(|&p| p >= 2)
}

/// All peak compositions of `n`, ascending lexicographically.
pub fn peak_compositions(n: u32) -> Vec<Composition> {
    fn go(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        // last part: anything
        prefix.push(remaining);
        out.push(Composition(prefix.clone()));
        prefix.pop();
        for p in 2..remaining {
            prefix.push(p);
            go(remaining - p, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `{ i in D : i - 1 not in D }`.
pub fn peak_set(d: &SubsetOfRange) -> SubsetOfRange {
    let elements = d
        .elements
        .iter()
        .copied()
        .filter(|&i| i == 1 || !d.contains(i - 1))
        .collect();
    SubsetOfRange {
        ambient: d.ambient,
        elements,
    }
}

/// Lexicographic comparison of two compositions of the same size.
pub fn lex_compare(alpha: &Composition, beta: &Composition) -> Result<Ordering> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            left: alpha.size(),
            right: beta.size(),
        });
    }
    Ok(alpha.cmp(beta))
}

/// Sorts `alpha` into a weakly decreasing partition and returns the number of
/// inversions of the sorting permutation. Parts must be distinct.
pub fn sort_to_partition(alpha: &Composition) -> Result<(Composition, usize)> {
    let parts = alpha.parts();
    let mut inversions = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            match parts[i].cmp(&parts[j]) {
                Ordering::Less => inversions += 1,
                Ordering::Equal => return Err(Error::RepeatedParts(alpha.clone())),
                Ordering::Greater => {}
            }
        }
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok((Composition(sorted), inversions))
}

pub fn is_strict_partition(lambda: &Composition) -> bool {
    !lambda.is_empty() && lambda.parts().windows(2).all(|w| w[0] > w[1])
}

/// All strict partitions of `n`, ascending lexicographically.
pub fn strict_partitions(n: u32) -> Vec<Composition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p - 1, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Distinct rearrangements of `lambda`'s parts.
pub(crate) fn rearrangements(lambda: &Composition) -> Vec<Composition> {
    let mut parts = lambda.parts().to_vec();
    parts.sort_unstable();
    let mut out = vec![Composition(parts.clone())];
    // next_permutation over the sorted multiset
    while let Some(i) = (0..parts.len().saturating_sub(1))
        .rev()
        .find(|&i| parts[i] < parts[i + 1])
    {
        let j = (i + 1..parts.len())
            .rev()
            .find(|&j| parts[j] > parts[i])
            .unwrap();
        parts.swap(i, j);
        parts[i + 1..].reverse();
        out.push(Composition(parts.clone()));
    }
    out
}
