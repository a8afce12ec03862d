//! Exact polynomial arithmetic over a field: univariate, binary forms,
//! bihomogeneous forms and sparse multivariate polynomials, together with
//! gcd, square-free splitting, resultants and discriminants.

mod bihom;
mod hom;
mod multi;
mod parse;
mod roots;
mod uni;

use std::fmt;

use thiserror::Error;

use crate::field::Field;

pub use bihom::BiHomPoly;
pub use hom::{HomPoly, SquarefreeSplit, Vars};
pub use multi::MPoly;
pub use parse::{parse_hom, parse_hom_with_degree, ParseError};
pub use roots::{integer_roots_monic, rational_roots};
pub use uni::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} is below the required {needed}")]
    DegreeTooLow { degree: usize, needed: usize },
}

/// `gcd(p, q)`, monic, with `gcd(0, 0) = 0`.
pub fn gcd_poly<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
    p.gcd(q)
}

/// Square-free decomposition of a binary form.
pub fn squarefree_split<F: Field>(p: &HomPoly<F>) -> Result<SquarefreeSplit<F>, PolyError> {
    p.squarefree_split()
}

pub fn resultant<F: Field>(p: &Poly<F>, q: &Poly<F>) -> F {
    p.resultant(q)
}

pub fn discriminant_univ<F: Field>(p: &Poly<F>) -> Result<F, PolyError> {
    p.discriminant()
}

/// Refine the factors of a split so that every piece has a uniform
/// valuation in `q`.
pub fn refine_against<F: Field>(split: &[(HomPoly<F>, u32)], q: &HomPoly<F>) -> Vec<(HomPoly<F>, u32)> {
    hom::refine_against(split, q)
}

/// Shared term printer: `terms` are (coefficient, [(variable, exponent)]).
pub(crate) fn write_terms<F: Field>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(F, Vec<(&str, usize)>)],
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let vars: Vec<String> = mono
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if vars.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == "1" {
            write!(f, "{}", vars.join("*"))?;
        } else {
            write!(f, "{mag}*{}", vars.join("*"))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
