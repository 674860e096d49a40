use crate::compositions::{is_peak_composition, Composition};
use crate::error::{Error, Result};

use super::{adjacency_ok, is_mpct, is_pct, Entry, MarkedWord, Tableau};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Alphabet {
    /// Plain values only; no adjacency rule (PCT).
    Plain,
    /// Marked alphabet, first column unmarked (MPCT*).
    MarkedInterior,
    /// Marked alphabet everywhere (MPCT).
    Marked,
}

/// Builds fillings value by value, in the order `1', 1, 2', 2, ...`.
///
/// Each level extends some rows by a contiguous run of cells, so rows are
/// weakly increasing by construction. A row may only be started after the row
/// above it, one new row per level, which keeps the first column strictly
/// increasing. After every unmarked level the filled cells must form a peak
/// composition.
struct Generator<'a> {
    shape: &'a [u32],
    total: u32,
    alphabet: Alphabet,
    standard: bool,
    rows: Vec<Vec<Entry>>,
    filled: u32,
    out: Vec<Tableau>,
}

impl<'a> Generator<'a> {
    fn new(shape: &'a [u32], alphabet: Alphabet, standard: bool) -> Self {
        Generator {
            shape,
            total: shape.iter().sum(),
            alphabet,
            standard,
            rows: vec![Vec::new(); shape.len()],
            filled: 0,
            out: Vec::new(),
        }
    }

    fn run(mut self) -> Vec<Tableau> {
        self.value(1);
        self.out.sort();
        self.out
    }

    fn started(&self) -> usize {
        self.rows.iter().take_while(|r| !r.is_empty()).count()
    }

    /// Every way to extend the open rows at one level. `budget` caps the total.
    fn choices(&self, marked: bool, budget: u32) -> Vec<Vec<u32>> {
        let open = (self.started() + 1).min(self.shape.len());
        let caps: Vec<u32> = (0..open)
            .map(|r| {
                let room = self.shape[r] - self.rows[r].len() as u32;
                if !marked {
                    room
                } else if self.rows[r].is_empty() && self.alphabet == Alphabet::MarkedInterior {
                    0
                } else {
                    room.min(1)
                }
            })
            .collect();
        let mut out = Vec::new();
        let mut current = vec![0u32; open];
        fn go(r: usize, caps: &[u32], left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if r == caps.len() {
                out.push(current.clone());
                return;
            }
            for a in 0..=caps[r].min(left) {
                current[r] = a;
                go(r + 1, caps, left - a, current, out);
            }
            current[r] = 0;
        }
        go(0, &caps, budget, &mut current, &mut out);
        out
    }

    fn apply(&mut self, adds: &[u32], entry: Entry) {
        for (r, &a) in adds.iter().enumerate() {
            for _ in 0..a {
                self.rows[r].push(entry);
            }
            self.filled += a;
        }
    }

    fn undo(&mut self, adds: &[u32]) {
        for (r, &a) in adds.iter().enumerate() {
            let len = self.rows[r].len();
            self.rows[r].truncate(len - a as usize);
            self.filled -= a;
        }
    }

    fn filled_is_peak(&self) -> bool {
        let counts: Vec<u32> = self.rows[..self.started()]
            .iter()
            .map(|r| r.len() as u32)
            .collect();
        is_peak_composition(&Composition::from_parts_unchecked(counts))
    }

    fn value(&mut self, k: u32) {
        if k > self.total {
            return;
        }
        let remaining = self.total - self.filled;
        let budget = if self.standard { 1 } else { remaining };
        let primed_choices = if self.alphabet == Alphabet::Plain {
            vec![vec![]]
        } else {
            self.choices(true, budget)
        };
        for primed in primed_choices {
            let used: u32 = primed.iter().sum();
            self.apply(&primed, Entry::primed(k));
            for plain in self.choices(false, budget - used) {
                let added = used + plain.iter().sum::<u32>();
                if added == 0 {
                    continue;
                }
                self.apply(&plain, Entry::plain(k));
                if self.filled_is_peak() {
                    if self.filled == self.total {
                        self.emit();
                    } else {
                        self.value(k + 1);
                    }
                }
                self.undo(&plain);
            }
            self.undo(&primed);
        }
    }

    fn emit(&mut self) {
        let t = Tableau::from_rows_unchecked(self.rows.clone());
        if self.alphabet == Alphabet::Plain || adjacency_ok(&t) {
            self.out.push(t);
        }
    }
}

fn require_peak(alpha: &Composition) -> Result<()> {
    if is_peak_composition(alpha) {
        Ok(())
    } else {
        Err(Error::NotPeakComposition(alpha.clone()))
    }
}

/// `PCT(alpha)`: unmarked peak composition tableaux of shape `alpha` with strong weight.
pub fn enumerate_pct(alpha: &Composition) -> Result<Vec<Tableau>> {
    require_peak(alpha)?;
    Ok(Generator::new(alpha.parts(), Alphabet::Plain, false).run())
}

/// `MPCT(alpha)`, or `MPCT*(alpha)` (no marks in the first column) when `star`.
pub fn enumerate_mpct(alpha: &Composition, star: bool) -> Result<Vec<Tableau>> {
    require_peak(alpha)?;
    let alphabet = if star {
        Alphabet::MarkedInterior
    } else {
        Alphabet::Marked
    };
    Ok(Generator::new(alpha.parts(), alphabet, false).run())
}

/// `SPCT(alpha)` when `!marked`; otherwise `SMPCT(alpha)` or `SMPCT*(alpha)`.
pub fn enumerate_standard(alpha: &Composition, marked: bool, star: bool) -> Result<Vec<Tableau>> {
    require_peak(alpha)?;
    let alphabet = match (marked, star) {
        (false, _) => Alphabet::Plain,
        (true, true) => Alphabet::MarkedInterior,
        (true, false) => Alphabet::Marked,
    };
    Ok(Generator::new(alpha.parts(), alphabet, true).run())
}

/// All marked tableaux whose unmarking is `t`.
///
/// Within a row only the leftmost cell of each value can carry a mark. The
/// second cell of a row is forced to be marked when the cell below the row
/// start holds the same value. With `star` the first column stays unmarked;
/// otherwise each first-column cell is marked or not independently.
pub fn markings_of(t: &Tableau, star: bool) -> Result<Vec<Tableau>> {
    if !is_pct(t)? {
        return Err(Error::NotPct);
    }
    let rows = t.rows();
    let mut free = Vec::new();
    let mut forced = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for c in 1..row.len() {
            if row[c - 1].value == row[c].value {
                continue;
            }
            let below_matches =
                c == 1 && rows.get(r + 1).is_some_and(|b| b[0].value == row[c].value);
            if below_matches {
                forced.push((r, c));
            } else {
                free.push((r, c));
            }
        }
    }
    let first_column: Vec<(usize, usize)> = if star {
        Vec::new()
    } else {
        (0..rows.len()).map(|r| (r, 0)).collect()
    };
    free.extend(first_column);

    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u64..1 << free.len() {
        let mut marked = rows.to_vec();
        for &(r, c) in &forced {
            marked[r][c].marked = true;
        }
        for (bit, &(r, c)) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                marked[r][c].marked = true;
            }
        }
        let candidate = Tableau::from_rows_unchecked(marked);
        if is_mpct(&candidate) {
            out.push(candidate);
        }
    }
    out.sort();
    Ok(out)
}

/// All `2^k` ways of marking the letters of an unmarked word.
pub fn enumerate_word_markings(w: &MarkedWord) -> Result<Vec<MarkedWord>> {
    if w.letters.iter().any(|e| e.marked) {
        return Err(Error::MarkedEntry);
    }
    let k = w.len();
    Ok((0u64..1 << k)
        .map(|mask| MarkedWord {
            letters: w
                .letters
                .iter()
                .enumerate()
                .map(|(i, e)| Entry {
                    value: e.value,
                    marked: mask >> i & 1 == 1,
                })
                .collect(),
        })
        .collect())
}
