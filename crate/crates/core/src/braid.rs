//! Braid words in Artin generators and their transverse closures.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A word in `sigma_1, ..., sigma_{n-1}` and their inverses.
///
/// Letter `i > 0` is the positive (right-handed) crossing `sigma_i`, `-i` its
/// inverse. Every letter satisfies `1 <= |i| < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::InvalidGenerator {
                letter: bad,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on one strand; its closure is the transverse unknot
    /// with `sl = -1`.
    pub fn unknot() -> Self {
        BraidWord {
            strands: 1,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// Permutation induced on strand positions: `perm[p]` is where the strand
    /// entering at position `p` (0-based, top) leaves the braid.
    pub fn permutation(&self) -> Vec<usize> {
        // track the strand currently sitting at each position
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Self-linking number of the transverse closure: exponent sum minus
    /// strand count.
    pub fn self_linking(&self) -> Result<i64> {
        self.require_knot()?;
        Ok(self.exponent_sum() - self.strands as i64)
    }

    /// Markov stabilization: add a strand and append `sigma_n^{sign}`.
    pub fn stabilize(&self, sign: i64) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!(
                "stabilization sign must be +1 or -1, got {sign}"
            )));
        }
        let mut letters = self.letters.clone();
        letters.push(sign * self.strands as i64);
        Ok(BraidWord {
            strands: self.strands + 1,
            letters,
        })
    }

    /// Shift-and-concatenate connected sum: `other` is placed on strands
    /// `n_1 .. n_1 + n_2 - 1`, sharing strand `n_1` with `self`.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        self.require_knot()?;
        other.require_knot()?;
        let offset = self.strands as i64 - 1;
        let letters = self
            .letters
            .iter()
            .copied()
            .chain(other.letters.iter().map(|&l| l + l.signum() * offset))
            .collect();
        Ok(BraidWord {
            strands: self.strands + other.strands - 1,
            letters,
        })
    }

    /// Concatenation on a common strand count.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::InvalidArgument(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Letters `i` used at least once (as `sigma_i` or its inverse).
    pub fn generators_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.strands.saturating_sub(1)];
        for &l in &self.letters {
            used[l.unsigned_abs() as usize - 1] = true;
        }
        used
    }
}

impl fmt::Display for BraidWord {
    /// Canonical text form `n=<strands>: <letters>`, accepted by [`parse_braid`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

fn parse_letters(body: &str) -> Result<Vec<i64>> {
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
        })
        .collect()
}

/// Parse `n=<strands>: <letters>` with letters separated by whitespace or
/// commas, e.g. `n=3: 1 -2 1 -2`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let text = text.trim();
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected 'n=<strands>: <letters>', got {text:?}")))?;
    let strands = head
        .trim()
        .strip_prefix('n')
        .and_then(|r| r.trim_start().strip_prefix('='))
        .map(str::trim)
        .ok_or_else(|| Error::Parse(format!("expected 'n=<strands>' before ':', got {head:?}")))?;
    let strands: usize = strands
        .parse()
        .map_err(|_| Error::Parse(format!("bad strand count {strands:?}")))?;
    if strands == 0 {
        return Err(Error::Parse("strand count must be positive".into()));
    }
    BraidWord::new(strands, parse_letters(body)?)
}

/// Parse the bracket form `[1,1,1]`. Without a strand count the smallest
/// admissible one (largest index plus one) is used.
pub fn parse_braid_brackets(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected '[...]', got {text:?}")))?;
    let letters = parse_letters(inner)?;
    let strands = strands.unwrap_or_else(|| {
        letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1
    });
    if strands == 0 {
        return Err(Error::Parse("strand count must be positive".into()));
    }
    BraidWord::new(strands, letters)
}
