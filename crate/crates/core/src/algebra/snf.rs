//! Smith normal form over the integers and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// A finitely generated abelian group `Z/d_1 + ... + Z/d_r + Z^b` with
/// `d_1 | d_2 | ... | d_r` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// Group from an already reduced invariant-factor list.
    ///
    /// Returns `None` when the list is not a divisibility chain of factors `>= 2`.
    pub fn new(invariant_factors: Vec<BigInt>, free_rank: usize) -> Option<Self> {
        let two = BigInt::from(2);
        let chain_ok = invariant_factors.iter().all(|d| *d >= two)
            && invariant_factors
                .windows(2)
                .all(|w| (&w[1] % &w[0]).is_zero());
        chain_ok.then_some(AbelianGroup {
            invariant_factors,
            free_rank,
        })
    }

    /// `Z/c_1 + ... + Z/c_k + Z^b` for arbitrary cyclic orders `c_i` (zeros
    /// count as free summands, units are dropped).
    pub fn from_cyclic_orders(orders: &[BigInt], free_rank: usize) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, c) in orders.iter().enumerate() {
            m.set(i, i, c.clone());
        }
        let (g, _) = smith_normal_form(&m);
        AbelianGroup {
            invariant_factors: g.invariant_factors,
            free_rank: g.free_rank + free_rank,
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        Self::from_cyclic_orders(&orders, self.free_rank + other.free_rank)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{b}")),
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Smith normal form of `m`, viewed as a map `Z^cols -> Z^rows`.
///
/// Returns the cokernel and the full diagonal (length `min(rows, cols)`,
/// nonnegative, each entry dividing the next, zeros last).
pub fn smith_normal_form(m: &IntMatrix) -> (AbelianGroup, Vec<BigInt>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_rows();
    let k = rows.min(cols);

    for t in 0..k {
        let Some((pi, pj)) = smallest_entry(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(&mut a, j, t, &q);
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder smaller than the pivot survived; move the
                // smallest one from the pivot row/column into place.
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero())
            });
            match bad_row {
                Some(i) => {
                    // pivot row += row i, then re-reduce
                    row_axpy(&mut a, t, i, &BigInt::from(-1));
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t][t] = -a[t][t].clone();
        }
    }

    let diagonal: Vec<BigInt> = (0..k).map(|i| a[i][i].abs()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    let invariant_factors = diagonal
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    (
        AbelianGroup {
            invariant_factors,
            free_rank: rows - rank,
        },
        diagonal,
    )
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| mag < *b) {
                best = Some((i, j, mag));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t, a[t][t].abs());
    for (i, row) in a.iter().enumerate().skip(t + 1) {
        if !row[t].is_zero() && row[t].abs() < best.2 {
            best = (i, t, row[t].abs());
        }
    }
    for (j, v) in a[t].iter().enumerate().skip(t + 1) {
        if !v.is_zero() && v.abs() < best.2 {
            best = (t, j, v.abs());
        }
    }
    (best.0, best.1)
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// row `dst` -= q * row `src`
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let src_row = a[src].clone();
    for (d, s) in a[dst].iter_mut().zip(&src_row) {
        *d -= q * s;
    }
}

/// column `dst` -= q * column `src`
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_is_trivial() {
        let (g, d) = smith_normal_form(&IntMatrix::identity(2));
        assert!(g.is_trivial());
        assert_eq!(d, ints(&[1, 1]));
    }

    #[test]
    fn diag_2_3_is_cyclic_6() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let (g, d) = smith_normal_form(&m);
        assert_eq!(d, ints(&[1, 6]));
        assert_eq!(g.invariant_factors(), &ints(&[6])[..]);
        assert_eq!(g.order(), Some(BigInt::from(6)));
    }

    #[test]
    fn zero_row_map_leaves_free_summand() {
        let (g, d) = smith_normal_form(&IntMatrix::zeros(1, 2));
        assert_eq!(d, ints(&[0]));
        assert_eq!(g.free_rank(), 1);
        assert!(g.invariant_factors().is_empty());
        assert_eq!(g.order(), None);
    }

    #[test]
    fn empty_matrices() {
        let (g, d) = smith_normal_form(&IntMatrix::zeros(0, 0));
        assert!(g.is_trivial() && d.is_empty());
        let (g, _) = smith_normal_form(&IntMatrix::zeros(3, 0));
        assert_eq!(g.free_rank(), 3);
    }

    #[test]
    fn non_diagonal_example() {
        // cokernel of [[2,4,4],[-6,6,12],[10,-4,-16]] is Z/2 + Z/6 + Z/12
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let (g, d) = smith_normal_form(&m);
        assert_eq!(d, ints(&[2, 6, 12]));
        assert_eq!(g.to_string(), "Z/2 + Z/6 + Z/12");
    }

    #[test]
    fn direct_sum_recombines() {
        let a = AbelianGroup::from_cyclic_orders(&ints(&[4]), 0);
        let b = AbelianGroup::from_cyclic_orders(&ints(&[6]), 1);
        let s = a.direct_sum(&b);
        assert_eq!(s.invariant_factors(), &ints(&[2, 12])[..]);
        assert_eq!(s.free_rank(), 1);
        assert_eq!(s.to_string(), "Z/2 + Z/12 + Z");
    }

    #[test]
    fn new_validates_chain() {
        assert!(AbelianGroup::new(ints(&[2, 4]), 0).is_some());
        assert!(AbelianGroup::new(ints(&[4, 2]), 0).is_none());
        assert!(AbelianGroup::new(ints(&[1]), 0).is_none());
    }
}
