//! Plain-text and LaTeX renderings of expressions and tableaux.

use std::fmt;

use num_traits::{One, Signed};

use crate::qsym::{Basis, Coeff, QSymExpr, Term};
use crate::tableaux::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

/// Joins `(label, coefficient)` pairs into `a+2b-c`; `0` when empty.
pub fn linear_combination<'a, I>(terms: I, style: Style) -> String
where
    I: IntoIterator<Item = (String, &'a Coeff)>,
{
    let mut out = String::new();
    for (label, c) in terms {
        let magnitude = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !magnitude.is_one() {
            out.push_str(&coefficient(&magnitude, style));
        }
        out.push_str(&label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coefficient(c: &Coeff, style: Style) -> String {
    if c.is_integer() {
        return c.numer().to_string();
    }
    match style {
        Style::Text => format!("({}/{})", c.numer(), c.denom()),
        Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

pub fn term_label(term: &Term, style: Style) -> String {
    match (term.basis, style) {
        (Basis::M, Style::Text) => format!("M_{}", term.index),
        (Basis::M, Style::Latex) => format!("M_{{{}}}", term.index),
        (b, Style::Text) => format!("{}_{}", b, term.subset()),
        (b, Style::Latex) => {
            let d = term.subset();
            if d.is_empty() {
                format!("{b}_{{\\emptyset}}")
            } else {
                let inner: Vec<String> = d.elements().iter().map(u32::to_string).collect();
                format!("{b}_{{\\{{{}\\}}}}", inner.join(","))
            }
        }
    }
}

pub fn expression(e: &QSymExpr, style: Style) -> String {
    linear_combination(e.terms().map(|(t, c)| (term_label(t, style), c)), style)
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&expression(self, Style::Text))
    }
}

/// Rows of right-aligned tokens, one line per row.
pub fn tableau_ascii(t: &Tableau) -> String {
    let width = t.entries().map(|e| e.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in t.rows() {
        let tokens: Vec<String> = row
            .iter()
            .map(|e| format!("{:>width$}", e.to_string()))
            .collect();
        out.push_str(tokens.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// A `ytableau` environment; marked entries are primed.
pub fn tableau_latex(t: &Tableau) -> String {
    let mut out = String::from("\\begin{ytableau}\n");
    for row in t.rows() {
        let tokens: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&tokens.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{ytableau}\n");
    out
}
