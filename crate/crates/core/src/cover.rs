//! Invariants of the contact n-fold cyclic branched cover of a transverse
//! braid closure.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{cyclic_quotient, resultant, smith_normal_form, AbelianGroup, IntMatrix, LaurentPoly1};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::{alexander, signature_sum};
use crate::seifert::{seifert_matrix, SeifertMatrix};

pub const NOTE_EULER: &str =
    "Euler class of the cover's contact structure vanishes (Plamenevskaya; Harvey-Kawamuro-Plamenevskaya), so d3 is defined";
pub const NOTE_GAMMA: &str =
    "Gamma = 0 for the spin structure given by the empty characteristic sublink of the cover's contact surgery diagram (Gompf)";
pub const NOTE_INFINITE_H1: &str =
    "H1 is infinite; d3 is still defined because the Euler class vanishes";
pub const NOTE_STABILIZED: &str =
    "braid asserted to be a negative stabilization: the cover is overtwisted (Eliashberg's classification of tight structures on S^3 for the unknot case)";
pub const NOTE_HOMOTOPIC: &str =
    "smoothly isotopic by assertion with equal sl: the covers are homotopic as 2-plane fields (Gompf), and contactomorphic if they are overtwisted (Eliashberg)";

fn validate_n(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cover order must be >= 2, got {n}")));
    }
    Ok(())
}

/// `|Res(Δ, 1 + t + ... + t^{n-1})|`.
pub fn resultant_order(delta: &LaurentPoly1, n: u64) -> Result<BigInt> {
    validate_n(n)?;
    Ok(resultant(delta, &cyclic_quotient(n as usize))?.abs())
}

/// Block tridiagonal presentation of `H_1` of the n-fold cover: `n-1`
/// diagonal blocks `A + A^T`, `A^T` above and `A` below the diagonal.
pub fn cover_presentation(a: &SeifertMatrix, n: u64) -> IntMatrix {
    let g = a.size();
    let k = (n as usize).saturating_sub(1);
    let s = a.symmetrized();
    let at = a.matrix().transpose();
    let mut m = IntMatrix::zeros(g * k, g * k);
    for b in 0..k {
        m.place(b * g, b * g, &s);
        if b + 1 < k {
            m.place(b * g, (b + 1) * g, &at);
            m.place((b + 1) * g, b * g, a.matrix());
        }
    }
    m
}

/// First homology of the n-fold cyclic branched cover, cross-checked against
/// the resultant of the Alexander polynomial.
pub fn h1_cyclic_cover(a: &SeifertMatrix, n: u64) -> Result<AbelianGroup> {
    validate_n(n)?;
    let (group, _) = smith_normal_form(&cover_presentation(a, n));
    let expected = resultant_order(&alexander(a), n)?;
    let consistent = match group.order() {
        Some(order) => order == expected,
        None => expected.is_zero(),
    };
    if !consistent {
        return Err(Error::PresentationInconsistent {
            presentation: group.to_string(),
            resultant: expected.to_string(),
        });
    }
    Ok(group)
}

/// `-(3/4) S - (n-1)(sl+1)/2` for signature sum `S`.
pub fn d3_formula(signature_sum: i64, sl: i64, n: u64) -> BigRational {
    let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    -(r(3, 4) * r(signature_sum, 1)) - r((n as i64 - 1) * (sl + 1), 2)
}

/// d3-invariant of the contact n-fold cyclic branched cover of `b`.
pub fn d3_cover(b: &BraidWord, n: u64) -> Result<BigRational> {
    validate_n(n)?;
    let sl = b.self_linking()?;
    let a = seifert_matrix(b)?;
    Ok(d3_formula(signature_sum(&a, n), sl, n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub braid: BraidWord,
    pub n: u64,
    pub h1: AbelianGroup,
    /// `None` when `H_1` is infinite.
    pub h1_order: Option<BigInt>,
    pub d3: BigRational,
    pub euler_class_zero: bool,
    pub sl: i64,
    pub signature_sum: i64,
    pub alexander: LaurentPoly1,
    pub annotations: Vec<String>,
}

/// Options the tool cannot decide and takes on the user's word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Assertions {
    pub stabilized: bool,
}

pub fn cover_report(b: &BraidWord, n: u64, assertions: Assertions) -> Result<CoverReport> {
    validate_n(n)?;
    let sl = b.self_linking()?;
    let a = seifert_matrix(b)?;
    let h1 = h1_cyclic_cover(&a, n)?;
    let sig = signature_sum(&a, n);
    let mut annotations = vec![NOTE_EULER.to_string(), NOTE_GAMMA.to_string()];
    if !h1.is_finite() {
        annotations.push(NOTE_INFINITE_H1.to_string());
    }
    if assertions.stabilized {
        annotations.push(NOTE_STABILIZED.to_string());
    }
    Ok(CoverReport {
        braid: b.clone(),
        n,
        h1_order: h1.order(),
        h1,
        d3: d3_formula(sig, sl, n),
        euler_class_zero: true,
        sl,
        signature_sum: sig,
        alexander: alexander(&a),
        annotations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SmoothWitness {
    Alexander,
    SignatureSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CompareVerdict {
    DistinguishedByH1,
    DistinguishedByD3,
    DistinguishedSmoothly(SmoothWitness),
    PlaneFieldsHomotopic,
    Inconclusive,
}

impl CompareVerdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(
            self,
            CompareVerdict::DistinguishedByH1
                | CompareVerdict::DistinguishedByD3
                | CompareVerdict::DistinguishedSmoothly(_)
        )
    }
}

impl fmt::Display for CompareVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompareVerdict::DistinguishedByH1 => f.write_str("DistinguishedByH1"),
            CompareVerdict::DistinguishedByD3 => f.write_str("DistinguishedByD3"),
            CompareVerdict::DistinguishedSmoothly(w) => write!(f, "DistinguishedSmoothly({w:?})"),
            CompareVerdict::PlaneFieldsHomotopic => f.write_str("PlaneFieldsHomotopic"),
            CompareVerdict::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: CompareVerdict,
    pub first: CoverReport,
    pub second: CoverReport,
    pub annotations: Vec<String>,
}

/// Verdict from two finished reports; `smoothly_isotopic` is the user's
/// assertion that the underlying smooth knots are isotopic.
pub fn verdict(first: &CoverReport, second: &CoverReport, smoothly_isotopic: bool) -> CompareVerdict {
    if first.h1 != second.h1 {
        CompareVerdict::DistinguishedByH1
    } else if first.d3 != second.d3 {
        CompareVerdict::DistinguishedByD3
    } else if smoothly_isotopic && first.sl == second.sl {
        CompareVerdict::PlaneFieldsHomotopic
    } else if !first.alexander.unit_equivalent(&second.alexander) {
        CompareVerdict::DistinguishedSmoothly(SmoothWitness::Alexander)
    } else if first.signature_sum != second.signature_sum {
        CompareVerdict::DistinguishedSmoothly(SmoothWitness::SignatureSum)
    } else {
        CompareVerdict::Inconclusive
    }
}

pub fn compare_covers(
    b1: &BraidWord,
    b2: &BraidWord,
    n: u64,
    smoothly_isotopic: bool,
) -> Result<Comparison> {
    let first = cover_report(b1, n, Assertions::default())?;
    let second = cover_report(b2, n, Assertions::default())?;
    let verdict = verdict(&first, &second, smoothly_isotopic);
    let annotations = match verdict {
        CompareVerdict::PlaneFieldsHomotopic => vec![NOTE_HOMOTOPIC.to_string()],
        _ => Vec::new(),
    };
    Ok(Comparison {
        verdict,
        first,
        second,
        annotations,
    })
}
