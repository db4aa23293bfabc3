//! Seifert matrices of braid closures from the Bennequin surface.
//!
//! The surface has one disk per strand and one half-twisted band per letter.
//! Its first homology has a basis of loops, one for every pair of
//! consecutive bands joining the same two disks. Loops are ordered by
//! generator index, then by position in the word.

use num_bigint::BigInt;

use crate::algebra::IntMatrix;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A loop through bands at word positions `first < second`, both on
/// generator `column`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct BandLoop {
    column: usize,
    first: usize,
    second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    matrix: IntMatrix,
    braid: Option<BraidWord>,
}

impl SeifertMatrix {
    /// Wrap an arbitrary square matrix (no source braid).
    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidArgument(format!(
                "Seifert matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(SeifertMatrix {
            matrix,
            braid: None,
        })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        self.braid.as_ref()
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// Genus of the surface, `size / 2`.
    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    /// `A + A^T`, the symmetrized form.
    pub fn symmetrized(&self) -> IntMatrix {
        &self.matrix + &self.matrix.transpose()
    }

    /// Block-diagonal sum, the Seifert matrix of a boundary connected sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        SeifertMatrix {
            matrix: self.matrix.direct_sum(&other.matrix),
            braid: None,
        }
    }
}

fn band_loops(b: &BraidWord) -> Vec<BandLoop> {
    let mut out = Vec::new();
    for column in 1..b.strands() {
        let positions: Vec<usize> = b
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.unsigned_abs() as usize == column)
            .map(|(p, _)| p)
            .collect();
        out.extend(positions.windows(2).map(|w| BandLoop {
            column,
            first: w[0],
            second: w[1],
        }));
    }
    out
}

/// Seifert matrix of the closure of `b`, of size `letters - strands + 1`.
///
/// With `s_p = ±1` the sign of the letter at position `p`:
///
/// * a loop through bands `p < q` has self-linking `-(s_p + s_q) / 2`;
/// * consecutive loops in one column sharing band `q` link once, in the
///   direction picked by `s_q`;
/// * loops in adjacent columns link when their bands interleave.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertMatrix> {
    // A missing generator also splits the closure, so this is tested first
    // to report the more specific failure.
    if let Some(missing) = b.generators_used().iter().position(|used| !used) {
        return Err(Error::DisconnectedSurface(missing + 1));
    }
    b.require_knot()?;
    let sign = |p: usize| b.letters()[p].signum();
    let loops = band_loops(b);
    let m = loops.len();
    let mut a = IntMatrix::zeros(m, m);
    for (x, lx) in loops.iter().enumerate() {
        a.set(x, x, BigInt::from(-(sign(lx.first) + sign(lx.second)) / 2));
        for (y, ly) in loops.iter().enumerate() {
            if ly.column == lx.column && ly.first == lx.second {
                if sign(lx.second) > 0 {
                    a.set(x, y, BigInt::from(1));
                } else {
                    a.set(y, x, BigInt::from(-1));
                }
            } else if ly.column == lx.column + 1 {
                let (p1, p2, q1, q2) = (lx.first, lx.second, ly.first, ly.second);
                if p1 < q1 && q1 < p2 && p2 < q2 {
                    a.set(x, y, BigInt::from(-1));
                } else if q1 < p1 && p1 < q2 && q2 < p2 {
                    a.set(x, y, BigInt::from(1));
                }
            }
        }
    }
    Ok(SeifertMatrix {
        matrix: a,
        braid: Some(b.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use num_traits::One;

    fn seif(text: &str) -> Result<SeifertMatrix> {
        seifert_matrix(&parse_braid(text).unwrap())
    }

    #[test]
    fn unknot_is_empty() {
        let s = seif("n=1:").unwrap();
        assert_eq!(s.size(), 0);
        assert_eq!(s.genus(), 0);
    }

    #[test]
    fn trefoil() {
        let s = seif("n=2: 1 1 1").unwrap();
        assert_eq!(s.matrix().to_string(), "[[-1,1],[0,-1]]");
        assert_eq!(s.symmetrized().to_string(), "[[-2,1],[1,-2]]");
        assert_eq!(s.genus(), 1);
    }

    #[test]
    fn figure_eight_shape() {
        let s = seif("n=3: 1 -2 1 -2").unwrap();
        assert_eq!(s.size(), 2);
        let a = s.matrix();
        assert!((a - &a.transpose()).determinant().is_one());
    }

    #[test]
    fn errors() {
        assert_eq!(
            seif("n=2: 1 1").unwrap_err(),
            Error::NotAKnot { components: 2 }
        );
        assert_eq!(seif("n=3: 1 1 1").unwrap_err(), Error::DisconnectedSurface(2));
        assert_eq!(seif("n=2:").unwrap_err(), Error::DisconnectedSurface(1));
    }

    #[test]
    fn size_is_letters_minus_strands_plus_one() {
        for text in ["n=3: 1 2 1 2 -1 2 -1 2", "n=4: 1 2 3 -1 2", "n=4: 1 2 3", "n=2: -1 -1 -1 -1 -1"] {
            let b = parse_braid(text).unwrap();
            let s = seifert_matrix(&b).unwrap();
            assert_eq!(s.size(), b.len() + 1 - b.strands(), "{text}");
        }
    }
}
