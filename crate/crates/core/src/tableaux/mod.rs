//! Peak composition tableaux and their marked and standard variants.
//!
//! One [`Tableau`] type carries every flavour of filling; membership in a
//! family (PCT, MPCT, standard, ...) is decided by predicates. Entries come
//! from the marked alphabet `1' < 1 < 2' < 2 < ...`.

mod enumerate;
mod standard;
mod young;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::compositions::{is_peak_composition, Composition, SubsetOfRange};
use crate::error::{Error, Result};

pub use enumerate::{
    enumerate_mpct, enumerate_pct, enumerate_standard, enumerate_word_markings, markings_of,
};
pub use standard::{destandardize, is_standard, peak_set_of_tableau, standardize, superstandard};
pub use young::{enumerate_ssyct, is_ssyct};

/// A letter of the marked alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub value: u32,
    pub marked: bool,
}

impl Entry {
    pub const fn plain(value: u32) -> Self {
        Entry {
            value,
            marked: false,
        }
    }

    pub const fn primed(value: u32) -> Self {
        Entry {
            value,
            marked: true,
        }
    }

    /// Position in the alphabet `1' < 1 < 2' < 2 < ...`.
    fn rank(self) -> u64 {
        2 * self.value as u64 - self.marked as u64
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, marked) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u32 = digits
            .parse()
            .map_err(|e| Error::Parse(format!("bad entry {s:?}: {e}")))?;
        if value == 0 {
            return Err(Error::ZeroEntry);
        }
        Ok(Entry { value, marked })
    }
}

/// A left-justified filling of a composition diagram (English notation).
///
/// Equality is structural: shape, entries and marks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<Entry>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Entry>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::ZeroPart(
                rows.iter().map(|r| r.len() as u32).collect(),
            ));
        }
        if rows.iter().flatten().any(|e| e.value == 0) {
            return Err(Error::ZeroEntry);
        }
        Ok(Tableau { rows })
    }

    /// Builds an unmarked tableau from plain values.
    pub fn from_values(rows: &[&[u32]]) -> Result<Self> {
        Tableau::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| Entry::plain(v)).collect())
                .collect(),
        )
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Entry>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> Composition {
        Composition::from_parts_unchecked(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Entry> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn has_marks(&self) -> bool {
        self.entries().any(|e| e.marked)
    }

    pub fn max_value(&self) -> u32 {
        self.entries().map(|e| e.value).max().unwrap_or(0)
    }

    /// The same filling with every mark erased.
    pub fn unmarked(&self) -> Tableau {
        Tableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|e| Entry::plain(e.value)).collect())
                .collect(),
        }
    }

    /// Cells in reading order: columns left to right, each top to bottom.
    pub(crate) fn reading_cells(&self) -> Vec<(usize, usize)> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut cells = Vec::with_capacity(self.num_cells());
        for c in 0..width {
            for (r, row) in self.rows.iter().enumerate() {
                if c < row.len() {
                    cells.push((r, c));
                }
            }
        }
        cells
    }
}

/// Rows separated by `/`, entries by whitespace: `"1 2 8' / 3 4'"`.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(str::parse)
                    .collect::<Result<Vec<Entry>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// A word over the marked alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedWord {
    pub letters: Vec<Entry>,
}

impl MarkedWord {
    pub fn new(letters: Vec<Entry>) -> Self {
        MarkedWord { letters }
    }

    pub fn from_values(values: &[u32]) -> Self {
        MarkedWord {
            letters: values.iter().map(|&v| Entry::plain(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for MarkedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(MarkedWord {
            letters: s
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<_>>()?,
        })
    }
}

/// Checks that the cells holding values `<= k` form a peak composition diagram,
/// for every `k` up to the largest value.
fn prefix_shapes_are_peak(t: &Tableau) -> bool {
    let max = t.max_value();
    (1..=max).all(|k| {
        let counts: Vec<u32> = t
            .rows
            .iter()
            .map(|r| r.iter().filter(|e| e.value <= k).count() as u32)
            .collect();
        let started = counts.iter().take_while(|&&c| c > 0).count();
        if counts[started..].iter().any(|&c| c > 0) {
            return false;
        }
        started == 0
            || is_peak_composition(&Composition::from_parts_unchecked(
                counts[..started].to_vec(),
            ))
    })
}

/// Peak composition tableau: rows weakly increase, first column strictly
/// increases downward, and every value threshold cuts out a peak composition.
pub fn is_pct(t: &Tableau) -> Result<bool> {
    if t.has_marks() {
        return Err(Error::MarkedEntry);
    }
    if !is_peak_composition(&t.shape()) {
        return Ok(false);
    }
    let rows_ok = t
        .rows
        .iter()
        .all(|r| r.windows(2).all(|w| w[0].value <= w[1].value));
    let column_ok = t.rows.windows(2).all(|w| w[0][0].value < w[1][0].value);
    Ok(rows_ok && column_ok && prefix_shapes_are_peak(t))
}

/// Marked peak composition tableau.
pub fn is_mpct(t: &Tableau) -> bool {
    if !is_peak_composition(&t.shape()) {
        return false;
    }
    let rows_ok = t.rows.iter().all(|r| {
        r.windows(2)
            .all(|w| w[0] <= w[1] && !(w[0] == w[1] && w[0].marked))
    });
    let column_ok = t.rows.windows(2).all(|w| w[0][0] < w[1][0]);
    rows_ok && column_ok && prefix_shapes_are_peak(t) && adjacency_ok(t)
}

/// No first-column cell has an unmarked `i` to its right and `i` or `i'` below.
fn adjacency_ok(t: &Tableau) -> bool {
    t.rows.windows(2).all(|w| match w[0].get(1) {
        Some(right) => right.marked || right.value != w[1][0].value,
        None => true,
    })
}

/// Number of cells carrying `i` or `i'`, for `i = 1..max`. The weight must be strong.
pub fn weight(t: &Tableau) -> Result<Composition> {
    let max = t.max_value();
    let mut counts = vec![0u32; max as usize];
    for e in t.entries() {
        counts[e.value as usize - 1] += 1;
    }
    if let Some(i) = counts.iter().position(|&c| c == 0) {
        return Err(Error::WeakWeight(i as u32 + 1));
    }
    Composition::new(counts)
}

/// `(p, m)`: `p` sums (distinct values in the row − 1) over rows; `m` counts
/// first-column cells whose right and lower neighbours hold equal values.
pub fn stats_p_m(t: &Tableau) -> Result<(u32, u32)> {
    if !is_pct(t)? {
        return Err(Error::NotPct);
    }
    let p = t
        .rows
        .iter()
        .map(|r| {
            let mut distinct = r.iter().map(|e| e.value).collect::<Vec<_>>();
            distinct.dedup();
            distinct.len() as u32 - 1
        })
        .sum();
    let m = t
        .rows
        .windows(2)
        .filter(|w| {
            w[0].get(1)
                .is_some_and(|right| right.value == w[1][0].value)
        })
        .count() as u32;
    Ok((p, m))
}

/// Columns left to right, each read top to bottom.
pub fn reading_word(t: &Tableau) -> MarkedWord {
    MarkedWord {
        letters: t
            .reading_cells()
            .into_iter()
            .map(|(r, c)| t.rows[r][c])
            .collect(),
    }
}

/// Checks that `w` holds each of `1..=n` exactly once, ignoring marks.
pub(crate) fn check_standard_content(w: &MarkedWord) -> Result<()> {
    let n = w.len();
    let mut seen = vec![false; n];
    for e in &w.letters {
        let v = e.value as usize;
        if v == 0 || v > n || seen[v - 1] {
            return Err(Error::NotStandard(n));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// Descent set of a word with standard content.
///
/// Marked letters are moved to the front in reverse order of occurrence, marks
/// are erased, and `i` is a descent when `i + 1` precedes `i`.
pub fn descent_set(w: &MarkedWord) -> Result<SubsetOfRange> {
    check_standard_content(w)?;
    let n = w.len() as u32;
    if n == 0 {
        return Err(Error::NotStandard(0));
    }
    let mut position = vec![0usize; n as usize + 1];
    let marked = w.letters.iter().rev().filter(|e| e.marked);
    let unmarked = w.letters.iter().filter(|e| !e.marked);
    for (pos, e) in marked.chain(unmarked).enumerate() {
        position[e.value as usize] = pos;
    }
    let elements = (1..n)
        .filter(|&i| position[i as usize + 1] < position[i as usize])
        .collect();
    SubsetOfRange::new(n, elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn entry_order() {
        assert!(Entry::primed(1) < Entry::plain(1));
        assert!(Entry::plain(1) < Entry::primed(2));
        assert_eq!("4'".parse::<Entry>().unwrap(), Entry::primed(4));
        assert!("0".parse::<Entry>().is_err());
    }

    #[test]
    fn pct_predicate() {
        assert!(is_pct(&t("1 2 6 / 3 4 / 4 4 5 / 5")).unwrap());
        assert!(!is_pct(&t("1 3 / 2")).unwrap());
        assert!(is_pct(&t("1 1 / 2")).unwrap());
        assert!(is_pct(&t("1 2 / 2")).unwrap());
        assert_eq!(is_pct(&t("1 2' / 3")), Err(Error::MarkedEntry));
        // first column must strictly increase
        assert!(!is_pct(&t("2 2 / 1")).unwrap());
        // non-peak shape
        assert!(!is_pct(&t("1 / 2 3")).unwrap());
    }

    #[test]
    fn mpct_predicate() {
        assert!(is_mpct(&t("1 2' / 2")));
        assert!(!is_mpct(&t("1 2 / 2")));
        assert!(!is_mpct(&t("1 1' / 2")));
        assert!(!is_mpct(&t("1 2' 2' / 3")));
        assert!(is_mpct(&t("1 2 5' / 3 4' / 4 4 5' / 5'")));
    }

    #[test]
    fn weights() {
        assert_eq!(
            weight(&t("1 2 6 / 3 4 / 4 4 5 / 5")).unwrap().parts(),
            &[1, 1, 1, 3, 2, 1]
        );
        assert_eq!(weight(&t("1 1 / 2")).unwrap().parts(), &[2, 1]);
        assert_eq!(weight(&t("1 2' / 3")).unwrap().parts(), &[1, 1, 1]);
        assert_eq!(weight(&t("1 1 / 3")), Err(Error::WeakWeight(2)));
    }

    #[test]
    fn statistics() {
        assert_eq!(stats_p_m(&t("1 2 / 3")).unwrap(), (1, 0));
        assert_eq!(stats_p_m(&t("1 2 / 2")).unwrap(), (1, 1));
        assert_eq!(stats_p_m(&t("1 1 / 2")).unwrap(), (0, 0));
        assert_eq!(stats_p_m(&t("1 3 / 2")), Err(Error::NotPct));
    }

    #[test]
    fn reading_words() {
        let s1 = t("1 2 8' / 3 4' / 5 6 7' / 9'");
        assert_eq!(reading_word(&s1).to_string(), "1 3 5 9' 2 4' 6 8' 7'");
        assert_eq!(reading_word(&t("1 2 / 3")).to_string(), "1 3 2");
        assert_eq!(reading_word(&t("1")).to_string(), "1");
    }

    #[test]
    fn descents() {
        let w: MarkedWord = "1 3 5 9' 2 4' 6 8' 7'".parse().unwrap();
        assert_eq!(descent_set(&w).unwrap().elements(), &[2, 3, 6]);
        let id = MarkedWord::from_values(&[1, 2, 3, 4]);
        assert!(descent_set(&id).unwrap().is_empty());
        assert_eq!(
            descent_set(&MarkedWord::from_values(&[1, 3, 2]))
                .unwrap()
                .elements(),
            &[2]
        );
        assert!(descent_set(&MarkedWord::from_values(&[1, 1])).is_err());
        assert!(descent_set(&MarkedWord::from_values(&[1, 3])).is_err());
    }
}
