//! Test oracles. Everything here is written directly from the definitions and
//! avoids the library's own predicates and enumerators.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use peakqsym::compositions::Composition;
use peakqsym::qsym::{to_monomial, QSymExpr};
use peakqsym::tableaux::{Entry, MarkedWord, Tableau};

pub type Coeff = BigRational;

pub fn c(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

pub fn q(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// All compositions of `n`, by brute force over cut sets.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0u64..1 << (n - 1))
        .map(|cuts| {
            let mut parts = vec![];
            let mut run = 1;
            for i in 0..n - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

pub fn is_peak(parts: &[u32]) -> bool {
    !parts.is_empty() && parts[..parts.len() - 1].iter().all(|&p| p >= 2)
}

pub fn partial_sums(parts: &[u32]) -> BTreeSet<u32> {
    let mut acc = 0;
    parts[..parts.len().saturating_sub(1)]
        .iter()
        .map(|p| {
            acc += p;
            acc
        })
        .collect()
}

// ---------------------------------------------------------------- tableaux

fn rank(e: Entry) -> u32 {
    2 * e.value - u32::from(e.marked)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavour {
    /// Conditions 1 to 3, no marks.
    Pct,
    /// Conditions 1 to 4 in the marked alphabet.
    Mpct,
    /// As `Mpct`, no marks in the first column.
    MpctStar,
}

fn row_ok(row: &[Entry], marked: bool) -> bool {
    row.windows(2).all(|w| {
        if marked {
            rank(w[0]) < rank(w[1]) || (w[0] == w[1] && !w[0].marked)
        } else {
            w[0].value <= w[1].value
        }
    })
}

/// The three (or four) defining conditions, checked from scratch.
pub fn satisfies(rows: &[Vec<Entry>], flavour: Flavour) -> bool {
    let marked = flavour != Flavour::Pct;
    if !marked && rows.iter().flatten().any(|e| e.marked) {
        return false;
    }
    if !rows.iter().all(|r| row_ok(r, marked)) {
        return false;
    }
    if rows.windows(2).any(|w| rank(w[0][0]) >= rank(w[1][0])) {
        return false;
    }
    let max = rows.iter().flatten().map(|e| e.value).max().unwrap_or(0);
    for k in 1..=max {
        let counts: Vec<u32> = rows
            .iter()
            .map(|r| r.iter().filter(|e| e.value <= k).count() as u32)
            .collect();
        // left-justified: the cells <= k in each row are a prefix
        for r in rows {
            let inside: Vec<bool> = r.iter().map(|e| e.value <= k).collect();
            if inside.windows(2).any(|w| !w[0] && w[1]) {
                return false;
            }
        }
        let used: Vec<u32> = counts.iter().copied().take_while(|&x| x > 0).collect();
        if counts[used.len()..].iter().any(|&x| x > 0) || !(used.is_empty() || is_peak(&used)) {
            return false;
        }
    }
    if marked {
        for i in 0..rows.len().saturating_sub(1) {
            if let Some(right) = rows[i].get(1) {
                let below = rows[i + 1][0];
                if !right.marked && right.value == below.value {
                    return false;
                }
            }
        }
    }
    if flavour == Flavour::MpctStar && rows.iter().any(|r| r[0].marked) {
        return false;
    }
    true
}

pub fn strong_weight(rows: &[Vec<Entry>]) -> bool {
    let values: BTreeSet<u32> = rows.iter().flatten().map(|e| e.value).collect();
    let max = values.iter().copied().max().unwrap_or(0);
    values.len() as u32 == max
}

pub fn standard_content(rows: &[Vec<Entry>]) -> bool {
    let mut values: Vec<u32> = rows.iter().flatten().map(|e| e.value).collect();
    values.sort();
    values.iter().copied().eq(1..=values.len() as u32)
}

/// Rows of length `len` over `alphabet` satisfying the row condition.
fn rows(len: usize, alphabet: &[Entry], marked: bool) -> Vec<Vec<Entry>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Entry>| {
                alphabet.iter().filter_map(move |&e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    row_ok(&p, marked).then_some(p)
                })
            })
            .collect();
    }
    out
}

/// Every filling of `shape` with letters of value at most `|shape|` that
/// satisfies the flavour's conditions and has strong weight, sorted.
pub fn brute_force(shape: &[u32], flavour: Flavour, standard: bool) -> Vec<Tableau> {
    let n: u32 = shape.iter().sum();
    let mut alphabet = vec![];
    for v in 1..=n {
        if flavour != Flavour::Pct {
            alphabet.push(Entry {
                value: v,
                marked: true,
            });
        }
        alphabet.push(Entry {
            value: v,
            marked: false,
        });
    }
    let marked = flavour != Flavour::Pct;
    let row_choices: Vec<Vec<Vec<Entry>>> = shape
        .iter()
        .map(|&len| rows(len as usize, &alphabet, marked))
        .collect();
    let mut out = vec![];
    let mut idx = vec![0usize; shape.len()];
    'outer: loop {
        let rows: Vec<Vec<Entry>> = idx
            .iter()
            .enumerate()
            .map(|(i, &j)| row_choices[i][j].clone())
            .collect();
        if strong_weight(&rows)
            && (!standard || standard_content(&rows))
            && satisfies(&rows, flavour)
        {
            out.push(Tableau::new(rows).unwrap());
        }
        for i in (0..idx.len()).rev() {
            idx[i] += 1;
            if idx[i] < row_choices[i].len() {
                continue 'outer;
            }
            idx[i] = 0;
        }
        break;
    }
    out.sort();
    out
}

// ---------------------------------------------------------------- words

/// Descent set of a marked standard word by the local rule: when `i` follows
/// `i+1`, `i` is a descent iff it is unmarked; when `i` precedes `i+1`, iff
/// `i+1` is marked.
pub fn local_descents(w: &MarkedWord) -> BTreeSet<u32> {
    let n = w.letters.len() as u32;
    let pos = |v: u32| w.letters.iter().position(|e| e.value == v).unwrap();
    (1..n)
        .filter(|&i| {
            let (a, b) = (pos(i), pos(i + 1));
            if a > b {
                !w.letters[a].marked
            } else {
                w.letters[b].marked
            }
        })
        .collect()
}

pub fn permutations(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut r = p.clone();
            r.insert(i, n);
            out.push(r);
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------- quasisymmetric functions

/// `F_D` as monomial coefficients: `M_γ` appears iff the partial sums of `γ`
/// contain `D`.
pub fn fundamental_oracle(n: u32, d: &BTreeSet<u32>) -> BTreeMap<Vec<u32>, Coeff> {
    compositions(n)
        .into_iter()
        .filter(|g| partial_sums(g).is_superset(d))
        .map(|g| (g, q(1)))
        .collect()
}

/// `G_P` straight from its definition, over all `D ⊆ {1..n-1}`.
pub fn peak_oracle(n: u32, p: &BTreeSet<u32>) -> BTreeMap<Vec<u32>, Coeff> {
    let mut out: BTreeMap<Vec<u32>, Coeff> = BTreeMap::new();
    for g in compositions(n) {
        let d = partial_sums(&g);
        let shifted: BTreeSet<u32> = d.iter().map(|x| x + 1).collect();
        let sym: BTreeSet<u32> = d.symmetric_difference(&shifted).copied().collect();
        if p.is_subset(&sym) {
            for (k, v) in fundamental_oracle(n, &d) {
                *out.entry(k).or_insert_with(Coeff::zero) += v;
            }
        }
    }
    out
}

/// Monomial coefficients of an expression, keyed by parts.
pub fn m_coefficients(e: &QSymExpr) -> BTreeMap<Vec<u32>, Coeff> {
    to_monomial(e)
        .terms()
        .map(|(t, c)| (t.index.parts().to_vec(), c.clone()))
        .collect()
}

/// A polynomial in finitely many variables, keyed by exponent vector.
pub type Poly = BTreeMap<Vec<u32>, Coeff>;

fn increasing_tuples(len: usize, k: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for t in increasing_tuples(len - 1, k) {
        let start = t.last().map_or(0, |&x| x + 1);
        for i in start..k {
            let mut u = t.clone();
            u.push(i);
            out.push(u);
        }
    }
    out
}

/// Specialises an expression to `k` variables.
pub fn to_poly(e: &QSymExpr, k: usize) -> Poly {
    let mut out = Poly::new();
    for (beta, c) in m_coefficients(e) {
        for idx in increasing_tuples(beta.len(), k) {
            let mut exps = vec![0; k];
            for (&i, &b) in idx.iter().zip(&beta) {
                exps[i] = b;
            }
            *out.entry(exps).or_insert_with(Coeff::zero) += c.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Coeff::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

// ---------------------------------------------------------------- Schur Q

/// Monomial coefficients of Schur's `Q_λ`, counted as marked shifted
/// semistandard tableaux of shape `λ` with strong content; primes allowed on
/// the diagonal.
pub fn schur_q_oracle(lambda: &[u32]) -> BTreeMap<Vec<u32>, Coeff> {
    let n: u32 = lambda.iter().sum();
    // cells in row-major order; row i starts at column i
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, i + j)))
        .collect();
    let mut grid: BTreeMap<(usize, usize), Entry> = BTreeMap::new();
    let mut out: BTreeMap<Vec<u32>, Coeff> = BTreeMap::new();
    fill(&cells, 0, n, &mut grid, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    at: usize,
    n: u32,
    grid: &mut BTreeMap<(usize, usize), Entry>,
    out: &mut BTreeMap<Vec<u32>, Coeff>,
) {
    if at == cells.len() {
        let mut content = vec![0u32; n as usize];
        for e in grid.values() {
            content[e.value as usize - 1] += 1;
        }
        let len = content.iter().take_while(|&&x| x > 0).count();
        if content[len..].iter().all(|&x| x == 0) {
            *out.entry(content[..len].to_vec())
                .or_insert_with(Coeff::zero) += q(1);
        }
        return;
    }
    let (r, col) = cells[at];
    for v in 1..=n {
        for marked in [true, false] {
            let e = Entry { value: v, marked };
            if let Some(&left) = grid.get(&(r, col.wrapping_sub(1))) {
                // weakly increasing; a primed letter at most once per row
                if rank(left) > rank(e) || (left == e && marked) {
                    continue;
                }
            }
            if r > 0 {
                if let Some(&up) = grid.get(&(r - 1, col)) {
                    // weakly increasing; an unprimed letter at most once per column
                    if rank(up) > rank(e) || (up == e && !marked) {
                        continue;
                    }
                }
            }
            grid.insert((r, col), e);
            fill(cells, at + 1, n, grid, out);
            grid.remove(&(r, col));
        }
    }
}
