//! Semistandard Young composition tableaux.

use crate::compositions::Composition;

use super::{weight, Entry, Tableau};

/// Rows weakly increase, the first column strictly increases downward, and
/// for every cell `a` at `(r1, c)` and `b` at `(r2, c - 1)` with `r2 > r1` and
/// `a >= b`, the cell `(r2, c)` exists and holds a value below `a`.
pub fn is_ssyct(t: &Tableau) -> bool {
    if t.has_marks() {
        return false;
    }
    let rows = t.rows();
    let rows_ok = rows
        .iter()
        .all(|r| r.windows(2).all(|w| w[0].value <= w[1].value));
    let column_ok = rows.windows(2).all(|w| w[0][0].value < w[1][0].value);
    rows_ok && column_ok && triples_ok(rows)
}

fn triples_ok(rows: &[Vec<Entry>]) -> bool {
    for (r1, upper) in rows.iter().enumerate() {
        for (c, a) in upper.iter().enumerate().skip(1) {
            for lower in &rows[r1 + 1..] {
                let Some(b) = lower.get(c - 1) else { continue };
                if a.value >= b.value && !lower.get(c).is_some_and(|x| a.value > x.value) {
                    return false;
                }
            }
        }
    }
    true
}

/// Semistandard Young composition tableaux of shape `beta` whose weight is a
/// strong composition, sorted row-major.
pub fn enumerate_ssyct(beta: &Composition) -> Vec<Tableau> {
    let n = beta.size();
    let mut rows: Vec<Vec<Entry>> = beta
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p as usize))
        .collect();
    let mut out = Vec::new();
    fill(beta.parts(), n, 0, &mut rows, &mut out);
    out.sort();
    out
}

fn fill(shape: &[u32], n: u32, r: usize, rows: &mut Vec<Vec<Entry>>, out: &mut Vec<Tableau>) {
    if r == shape.len() {
        let t = Tableau::from_rows_unchecked(rows.clone());
        if triples_ok(rows) && weight(&t).is_ok() {
            out.push(t);
        }
        return;
    }
    if rows[r].len() == shape[r] as usize {
        // a finished row can already be checked against the rows above it
        if triples_ok(&rows[..=r]) {
            fill(shape, n, r + 1, rows, out);
        }
        return;
    }
    let lo = match rows[r].last() {
        Some(e) => e.value,
        None if r > 0 => rows[r - 1][0].value + 1,
        None => 1,
    };
    for v in lo..=n {
        rows[r].push(Entry::plain(v));
        fill(shape, n, r, rows, out);
        rows[r].pop();
    }
}
