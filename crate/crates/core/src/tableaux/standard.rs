//! Standard fillings, the standardization map and its inverse.

use crate::compositions::{
    is_peak_composition, peak_set, subset_of_comp, Composition, SubsetOfRange,
};
use crate::error::{Error, Result};

use super::{check_standard_content, descent_set, is_mpct, reading_word, weight, Entry, Tableau};

/// A marked peak composition tableau holding each of `1..=n` exactly once.
/// With `allow_marks == false` no entry may be marked.
pub fn is_standard(t: &Tableau, allow_marks: bool) -> bool {
    if !allow_marks && t.has_marks() {
        return false;
    }
    is_mpct(t) && check_standard_content(&reading_word(t)).is_ok()
}

/// Peak set of the descent set of the reading word.
pub fn peak_set_of_tableau(s: &Tableau) -> Result<SubsetOfRange> {
    if !is_standard(s, true) {
        return Err(Error::NotStandard(s.num_cells()));
    }
    Ok(peak_set(&descent_set(&reading_word(s))?))
}

/// Relabels the cells by `1..=n` following the alphabet order. Cells sharing
/// an unmarked value are numbered in reading order, cells sharing a marked
/// value in reverse reading order. Marks are carried over.
pub fn standardize(t: &Tableau) -> Result<Tableau> {
    if !is_mpct(t) {
        return Err(Error::NotMpct);
    }
    weight(t)?;
    let cells = t.reading_cells();
    let mut order: Vec<(Entry, isize, usize, usize)> = cells
        .iter()
        .enumerate()
        .map(|(pos, &(r, c))| {
            let e = t.rows()[r][c];
            // marked runs go backwards through the reading word
            let key = if e.marked {
                -(pos as isize)
            } else {
                pos as isize
            };
            (e, key, r, c)
        })
        .collect();
    order.sort();
    let mut rows = t.rows().to_vec();
    for (label, &(e, _, r, c)) in order.iter().enumerate() {
        rows[r][c] = Entry {
            value: label as u32 + 1,
            marked: e.marked,
        };
    }
    Ok(Tableau::from_rows_unchecked(rows))
}

/// `T_{S,beta}`: collapses the labels of `s` into blocks of sizes `beta`.
///
/// Returns `None` unless the partial sums of `beta` contain the descent set of `s`.
pub fn destandardize(s: &Tableau, beta: &Composition) -> Result<Option<Tableau>> {
    if !is_standard(s, true) {
        return Err(Error::NotStandard(s.num_cells()));
    }
    let n = s.num_cells() as u32;
    if beta.size() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: beta.size(),
        });
    }
    let des = descent_set(&reading_word(s))?;
    if !subset_of_comp(beta).is_superset_of(&des) {
        return Ok(None);
    }
    let mut block = Vec::with_capacity(n as usize + 1);
    block.push(0);
    for (i, &part) in beta.parts().iter().enumerate() {
        block.extend(std::iter::repeat_n(i as u32 + 1, part as usize));
    }
    let rows = s
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| Entry {
                    value: block[e.value as usize],
                    marked: e.marked,
                })
                .collect()
        })
        .collect();
    Ok(Some(Tableau::from_rows_unchecked(rows)))
}

/// The row-by-row filling `1..=n` of a peak composition diagram.
pub fn superstandard(alpha: &Composition) -> Result<Tableau> {
    if !is_peak_composition(alpha) {
        return Err(Error::NotPeakComposition(alpha.clone()));
    }
    let mut next = 0;
    let rows = alpha
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    next += 1;
                    Entry::plain(next)
                })
                .collect()
        })
        .collect();
    Ok(Tableau::from_rows_unchecked(rows))
}
