//! Murasugi's lifting formula and the twin report built on it.
//!
//! For a two-component link `L_1 ∪ L_2` with Alexander polynomial `Δ(x, y)`
//! and `L_2` unknotted, the preimage of `L_1` in the n-fold cyclic cover
//! branched over `L_2` has Alexander polynomial `∏_{i=1}^{n-1} Δ(t, ω^i)`,
//! `ω` a primitive n-th root of unity. The product is the resultant of `Δ`
//! against `1 + y + ... + y^{n-1}`, so it is computed over the integers.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{cyclic_quotient, parse_poly2, resultant_y, LaurentPoly1, LaurentPoly2};
use crate::error::{Error, Result};
use crate::link::{multivar_alexander, LinkPolynomial, PdCode};

/// Contents of `data/delta_U.txt`: the two-variable polynomial of the
/// cover-twin example (`x`, `y` the meridians of its unknotted components).
pub const DELTA_U_TEXT: &str = include_str!("../../../data/delta_U.txt");

pub fn delta_u() -> LaurentPoly2 {
    parse_poly2(DELTA_U_TEXT).expect("shipped polynomial parses")
}

/// Variable whose roots of unity are plugged in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    X,
    Y,
}

impl FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Branch::X),
            "y" | "Y" => Ok(Branch::Y),
            other => Err(Error::Parse(format!("branch must be x or y, got {other:?}"))),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::X => "x",
            Branch::Y => "y",
        })
    }
}

/// Raw `∏_{i=1}^{n-1} Δ(t, ω^i)` (branch `y`) or `∏ Δ(ω^i, t)` (branch `x`).
pub fn murasugi_product(delta: &LaurentPoly2, n: u64, branch: Branch) -> Result<LaurentPoly1> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cover order must be >= 2, got {n}")));
    }
    let p = match branch {
        Branch::Y => delta.clone(),
        Branch::X => delta.swap_variables(),
    };
    resultant_y(&p, &cyclic_quotient(n as usize))
}

/// Unit-normalized lift. A lift that vanishes identically is returned as 0.
pub fn murasugi_lift(delta: &LaurentPoly2, n: u64, branch: Branch) -> Result<LaurentPoly1> {
    let raw = murasugi_product(delta, n, branch)?;
    if raw.is_zero() {
        return Ok(raw);
    }
    raw.normalize_units()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwinVerdict {
    SmoothlyDistinct,
    NotDistinguished,
}

impl fmt::Display for TwinVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinVerdict::SmoothlyDistinct => "SmoothlyDistinct",
            TwinVerdict::NotDistinguished => "NotDistinguished",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinReport {
    pub n: u64,
    /// Lift along the `y` branch (preimage of the first component).
    pub lift1: LaurentPoly1,
    /// Lift along the `x` branch.
    pub lift2: LaurentPoly1,
    pub breadth1: i64,
    pub breadth2: i64,
    /// `(n-1)` times the `x`- resp. `y`-breadth of the input polynomial.
    pub bound1: i64,
    pub bound2: i64,
    pub verdict: TwinVerdict,
    pub linking_number: Option<i64>,
    pub provenance: String,
    pub annotations: Vec<String>,
}

/// Twin report for a two-variable polynomial.
pub fn ns_twin_report(delta: &LaurentPoly2, n: u64, provenance: &str) -> Result<TwinReport> {
    let lift1 = murasugi_lift(delta, n, Branch::Y)?;
    let lift2 = murasugi_lift(delta, n, Branch::X)?;
    let breadth1 = lift1.breadth()?;
    let breadth2 = lift2.breadth()?;
    let k = n as i64 - 1;
    let bound1 = k * delta.breadth_in(0)?;
    let bound2 = k * delta.breadth_in(1)?;
    let verdict = if lift1 != lift2 {
        TwinVerdict::SmoothlyDistinct
    } else {
        TwinVerdict::NotDistinguished
    };
    let relation = |b: i64, bound: i64| if b == bound { "attains" } else { "is below" };
    let annotations = vec![
        format!(
            "y-branch lift breadth {breadth1} {} the bound (n-1)*breadth_x = {bound1}",
            relation(breadth1, bound1)
        ),
        format!(
            "x-branch lift breadth {breadth2} {} the bound (n-1)*breadth_y = {bound2}",
            relation(breadth2, bound2)
        ),
    ];
    Ok(TwinReport {
        n,
        lift1,
        lift2,
        breadth1,
        breadth2,
        bound1,
        bound2,
        verdict,
        linking_number: None,
        provenance: provenance.to_string(),
        annotations,
    })
}

/// Twin report for a two-component link diagram. The components are taken to
/// be unknotted on the caller's word; the linking number is checked.
pub fn ns_twin_report_pd(pd: &PdCode, n: u64, provenance: &str) -> Result<TwinReport> {
    if pd.components() != 2 {
        return Err(Error::UnsupportedComponentCount(pd.components()));
    }
    let lk = pd.linking_number()?;
    if lk.abs() != 1 {
        return Err(Error::LinkingNumberNotUnit(lk));
    }
    let delta = match multivar_alexander(pd)? {
        LinkPolynomial::Link(p) => p,
        LinkPolynomial::Knot(_) => unreachable!("two components"),
    };
    let mut report = ns_twin_report(&delta, n, provenance)?;
    report.linking_number = Some(lk);
    report
        .annotations
        .push("both components unknotted by user assertion (not verified)".to_string());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly1;

    /// Grouped by powers of `y`; differs from the shipped polynomial by
    /// negating both variables.
    const DELTA_U_Y_GROUPED: &str =
        "y^2(-x^3-2x^2+2x+1)+y(x^5+x^4-3x^3+x^2+x)+(x^6+2x^5-2x^4-x^3)";

    #[test]
    fn shipped_polynomial() {
        let d = delta_u();
        assert_eq!(d.len(), 13);
        assert_eq!(d.breadth_in(0), Ok(6));
        assert_eq!(d.breadth_in(1), Ok(2));
        // the x-grouped display agrees with the expanded one
        let grouped = parse_poly2(
            "x^6+x^5 (y-2)-x^4(y+2)+x^3(y^2-3y+1)-x^2(2y^2+y)+x(y-2y^2)+y^2",
        )
        .unwrap();
        assert_eq!(grouped, d);
    }

    #[test]
    fn n2_lifts_of_the_y_grouped_form() {
        let d = parse_poly2(DELTA_U_Y_GROUPED).unwrap();
        assert_eq!(
            murasugi_lift(&d, 2, Branch::Y).unwrap(),
            parse_poly1("t^6+t^5-3t^4+t^3-3t^2+t+1").unwrap()
        );
        assert_eq!(
            murasugi_product(&d, 2, Branch::X).unwrap(),
            parse_poly1("-2t^2+3t-2").unwrap()
        );
        assert_eq!(
            murasugi_lift(&d, 2, Branch::X).unwrap(),
            parse_poly1("2t^2-3t+2").unwrap()
        );
        // it is the expanded form with both variables negated
        let negated = LaurentPoly2::from_terms(delta_u().terms().map(|((a, b), c)| {
            let c = if (a + b) % 2 == 0 { c.clone() } else { -c };
            ((a, b), c)
        }));
        assert_eq!(d, negated);
    }

    #[test]
    fn n2_lifts_of_the_expanded_form() {
        let d = delta_u();
        assert_eq!(
            murasugi_lift(&d, 2, Branch::Y).unwrap(),
            parse_poly1("t^6-3t^5-t^4+5t^3-t^2-3t+1").unwrap()
        );
        assert_eq!(murasugi_product(&d, 2, Branch::X).unwrap(), parse_poly1("-t").unwrap());
    }

    #[test]
    fn constant_and_errors() {
        assert!(murasugi_lift(&LaurentPoly2::one(), 5, Branch::Y).unwrap().is_one());
        assert_eq!(
            murasugi_lift(&LaurentPoly2::zero(), 2, Branch::Y),
            Err(Error::ZeroPolynomial)
        );
        assert!(murasugi_lift(&LaurentPoly2::one(), 1, Branch::Y).is_err());
        assert_eq!("x".parse::<Branch>(), Ok(Branch::X));
        assert!("z".parse::<Branch>().is_err());
    }

    #[test]
    fn twin_reports() {
        for n in 2..=6 {
            let r = ns_twin_report(&delta_u(), n, "data").unwrap();
            assert_eq!(r.breadth1, 6 * (n as i64 - 1), "n={n}");
            assert!(r.breadth2 <= 2 * (n as i64 - 1), "n={n}");
            assert_eq!(r.verdict, TwinVerdict::SmoothlyDistinct);
        }
        let hopf = ns_twin_report(&LaurentPoly2::one(), 3, "hopf").unwrap();
        assert_eq!((hopf.breadth1, hopf.breadth2), (0, 0));
        assert_eq!(hopf.verdict, TwinVerdict::NotDistinguished);
    }

    #[test]
    fn twin_report_from_diagrams() {
        use crate::link::parse_pd;
        let hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap();
        let r = ns_twin_report_pd(&hopf, 2, "hopf").unwrap();
        assert_eq!(r.linking_number, Some(1));
        assert!(r.lift1.is_one() && r.lift2.is_one());
        // (2,4) torus link has lk = 2
        let t24 = crate::link::braid_to_pd(&crate::braid::parse_braid("n=2: 1 1 1 1").unwrap());
        assert_eq!(ns_twin_report_pd(&t24, 2, "t24"), Err(Error::LinkingNumberNotUnit(2)));
    }
}
