//! Wirtinger presentations and Fox free differential calculus.

use crate::algebra::LaurentPoly2;
use crate::link::pd::PdCode;

/// A letter `g^{±1}` in the free group on the Wirtinger generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(generator: usize) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }
}

pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WirtingerData {
    /// Component of each generator.
    pub generator_component: Vec<usize>,
    pub relators: Vec<Word>,
    pub components: usize,
}

impl WirtingerData {
    pub fn generator_count(&self) -> usize {
        self.generator_component.len()
    }

    /// Abelianization sending each generator to the meridian of its
    /// component: `x` for the first, `y` for the second.
    pub fn meridians(&self) -> Vec<LaurentPoly2> {
        self.generator_component
            .iter()
            .map(|&c| match c {
                0 => LaurentPoly2::x(),
                _ => LaurentPoly2::y(),
            })
            .collect()
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// One generator per arc (maximal over-passing strand), numbered by the
/// smallest edge label on the arc; one relator per crossing.
pub fn wirtinger(pd: &PdCode) -> WirtingerData {
    let edges = pd.edge_count();
    if edges == 0 {
        return WirtingerData {
            generator_component: vec![0],
            relators: Vec::new(),
            components: 1,
        };
    }
    let mut parent: Vec<usize> = (0..=edges).collect();
    for &[_, b, _, d] in pd.crossings() {
        let (rb, rd) = (find(&mut parent, b), find(&mut parent, d));
        if rb != rd {
            parent[rb.max(rd)] = rb.min(rd);
        }
    }
    let mut index = vec![usize::MAX; edges + 1];
    let mut generator_component = Vec::new();
    for label in 1..=edges {
        let r = find(&mut parent, label);
        if index[r] == usize::MAX {
            index[r] = generator_component.len();
            generator_component.push(pd.component_of(label));
        }
    }
    let arc = |parent: &mut [usize], e: usize| index[find(parent, e)];

    let mut relators = Vec::with_capacity(pd.crossing_count());
    for (i, &[a, b, c, _]) in pd.crossings().iter().enumerate() {
        let over = arc(&mut parent, b);
        let incoming = arc(&mut parent, a);
        let outgoing = arc(&mut parent, c);
        // over^e * in * over^-e * out^-1 with e the crossing sign
        let (first, last) = if pd.sign(i) > 0 {
            (Letter::gen(over), Letter::inv(over))
        } else {
            (Letter::inv(over), Letter::gen(over))
        };
        relators.push(vec![first, Letter::gen(incoming), last, Letter::inv(outgoing)]);
    }
    WirtingerData {
        generator_component,
        relators,
        components: pd.components(),
    }
}

/// Image of a word under `abelianization` (a monomial).
pub fn abelianize(word: &[Letter], abelianization: &[LaurentPoly2]) -> LaurentPoly2 {
    let mut acc = LaurentPoly2::one();
    for l in word {
        let v = &abelianization[l.generator];
        acc = if l.inverse {
            &acc * &v.unit_inverse().expect("meridians are monomials")
        } else {
            &acc * v
        };
    }
    acc
}

/// Fox derivative `∂word/∂generator`, abelianized.
///
/// Uses `∂(uv) = ∂u + ū ∂v`, `∂g/∂g = 1` and `∂g⁻¹/∂g = -ḡ⁻¹`.
pub fn fox_derivative(word: &[Letter], generator: usize, abelianization: &[LaurentPoly2]) -> LaurentPoly2 {
    let mut prefix = LaurentPoly2::one();
    let mut out = LaurentPoly2::zero();
    for l in word {
        let v = &abelianization[l.generator];
        let v_inv = v.unit_inverse().expect("meridians are monomials");
        if l.inverse {
            prefix = &prefix * &v_inv;
            if l.generator == generator {
                out = &out - &prefix;
            }
        } else {
            if l.generator == generator {
                out = &out + &prefix;
            }
            prefix = &prefix * v;
        }
    }
    out
}

/// Matrix of Fox derivatives: one row per relator, one column per generator.
pub fn alexander_matrix(w: &WirtingerData, abelianization: &[LaurentPoly2]) -> Vec<Vec<LaurentPoly2>> {
    w.relators
        .iter()
        .map(|r| {
            (0..w.generator_count())
                .map(|g| fox_derivative(r, g, abelianization))
                .collect()
        })
        .collect()
}

/// `∑_j ∂r/∂x_j (x̄_j - 1) = r̄ - 1`, which vanishes for relators.
pub fn fundamental_identity_holds(w: &WirtingerData, matrix: &[Vec<LaurentPoly2>], abelianization: &[LaurentPoly2]) -> bool {
    matrix.iter().zip(&w.relators).all(|(row, r)| {
        let lhs = row
            .iter()
            .zip(abelianization)
            .fold(LaurentPoly2::zero(), |acc, (d, v)| &acc + &(d * &(v - &LaurentPoly2::one())));
        let rhs = &abelianize(r, abelianization) - &LaurentPoly2::one();
        lhs == rhs && rhs.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::pd::{braid_to_pd, parse_pd};
    use crate::braid::parse_braid;

    #[test]
    fn fox_rules() {
        let ab = vec![LaurentPoly2::x(), LaurentPoly2::y()];
        let g = Letter::gen(0);
        let h = Letter::gen(1);
        assert!(fox_derivative(&[g], 0, &ab).is_one());
        assert_eq!(
            fox_derivative(&[Letter::inv(0)], 0, &ab),
            -LaurentPoly2::monomial((-1, 0), 1)
        );
        assert!(fox_derivative(&[h], 0, &ab).is_zero());
        // ∂(g h g⁻¹ h⁻¹)/∂g = 1 - h̄
        let comm = [g, h, Letter::inv(0), Letter::inv(1)];
        assert_eq!(fox_derivative(&comm, 0, &ab), &LaurentPoly2::one() - &LaurentPoly2::y());
    }

    #[test]
    fn presentations() {
        let u = wirtinger(&parse_pd("").unwrap());
        assert_eq!((u.generator_count(), u.relators.len()), (1, 0));
        let hopf = wirtinger(&parse_pd("X[1,3,2,4] X[3,1,4,2]").unwrap());
        assert_eq!((hopf.generator_count(), hopf.relators.len(), hopf.components), (2, 2, 2));
        let tre = wirtinger(&braid_to_pd(&parse_braid("n=2: 1 1 1").unwrap()));
        assert_eq!((tre.generator_count(), tre.relators.len()), (3, 3));
        assert!(tre.generator_component.iter().all(|&c| c == 0));
    }

    #[test]
    fn identity_on_sample_links() {
        for text in ["n=2: 1 1 1", "n=3: 1 -2 1 -2", "n=2: 1 1", "n=3: 1 2 -1 2 2 -1"] {
            let w = wirtinger(&braid_to_pd(&parse_braid(text).unwrap()));
            let ab = w.meridians();
            let m = alexander_matrix(&w, &ab);
            assert!(fundamental_identity_holds(&w, &m, &ab), "{text}");
        }
    }
}
