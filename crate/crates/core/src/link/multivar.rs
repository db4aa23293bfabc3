//! Alexander polynomials of knots and two-component links via Fox calculus.

use std::fmt;

use crate::algebra::{determinant, LaurentPoly1, LaurentPoly2};
use crate::error::{Error, Result};
use crate::link::pd::PdCode;
use crate::link::wirtinger::{alexander_matrix, fundamental_identity_holds, wirtinger, WirtingerData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkPolynomial {
    /// Knots: a polynomial in `t`.
    Knot(LaurentPoly1),
    /// Two-component links: a polynomial in `x` (first component) and `y`.
    Link(LaurentPoly2),
}

impl LinkPolynomial {
    pub fn as_knot(&self) -> Option<&LaurentPoly1> {
        match self {
            LinkPolynomial::Knot(p) => Some(p),
            LinkPolynomial::Link(_) => None,
        }
    }

    pub fn as_link(&self) -> Option<&LaurentPoly2> {
        match self {
            LinkPolynomial::Link(p) => Some(p),
            LinkPolynomial::Knot(_) => None,
        }
    }
}

impl fmt::Display for LinkPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkPolynomial::Knot(p) => write!(f, "{p}"),
            LinkPolynomial::Link(p) => write!(f, "{p}"),
        }
    }
}

/// Square minor of the Alexander matrix with generator column `drop` removed
/// and surplus relator rows removed from the bottom. Zero when there are too
/// few relators.
fn minor_without(matrix: &[Vec<LaurentPoly2>], generators: usize, drop: usize) -> LaurentPoly2 {
    let size = generators - 1;
    if matrix.len() < size {
        return LaurentPoly2::zero();
    }
    let rows = matrix[..size]
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != drop)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    determinant(rows)
}

fn normalized2(p: LaurentPoly2) -> LaurentPoly2 {
    if p.is_zero() {
        p
    } else {
        p.normalize_units().expect("nonzero")
    }
}

fn checked_matrix(w: &WirtingerData) -> Result<(Vec<LaurentPoly2>, Vec<Vec<LaurentPoly2>>)> {
    let ab = w.meridians();
    let m = alexander_matrix(w, &ab);
    if !fundamental_identity_holds(w, &m, &ab) {
        return Err(Error::InconsistentOrientation(
            "Fox matrix violates the fundamental identity".into(),
        ));
    }
    Ok((ab, m))
}

/// Alexander polynomial of a knot or two-component link, up to units,
/// returned in normalized form.
pub fn multivar_alexander(pd: &PdCode) -> Result<LinkPolynomial> {
    if pd.components() > 2 {
        return Err(Error::UnsupportedComponentCount(pd.components()));
    }
    let w = wirtinger(pd);
    let (ab, m) = checked_matrix(&w)?;
    let g = w.generator_count();
    if w.components == 1 {
        let minor = minor_without(&m, g, 0).diagonal();
        let delta = if minor.is_zero() { minor } else { minor.normalize_units()? };
        return Ok(LinkPolynomial::Knot(delta));
    }

    // Deleting generator v leaves Δ·(v̄ - 1); do it once per component.
    let mut candidates = Vec::with_capacity(2);
    for component in 0..2 {
        let v = w
            .generator_component
            .iter()
            .position(|&c| c == component)
            .expect("every component carries a generator");
        let minor = minor_without(&m, g, v);
        let divisor = &ab[v] - &LaurentPoly2::one();
        let q = minor.div_exact(&divisor).ok_or_else(|| {
            Error::DivisionFailed(format!(
                "minor {minor} is not divisible by {divisor}"
            ))
        })?;
        candidates.push(normalized2(q));
    }
    if candidates[0] != candidates[1] {
        return Err(Error::DivisionFailed(format!(
            "column deletions disagree: {} vs {}",
            candidates[0], candidates[1]
        )));
    }
    Ok(LinkPolynomial::Link(candidates.swap_remove(0)))
}
