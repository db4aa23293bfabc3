#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tcover::braid::BraidWord;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn braid(text: &str) -> BraidWord {
    tcover::braid::parse_braid(text).unwrap()
}

pub fn trefoil() -> BraidWord {
    braid("n=2: 1 1 1")
}

pub fn figure_eight() -> BraidWord {
    braid("n=3: 1 -2 1 -2")
}

/// Random word of `len` letters on `strands` strands whose closure is a knot
/// and which uses every generator. A knot closure needs `len` and
/// `strands - 1` of equal parity.
pub fn random_knot_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2 && len >= strands - 1 && (len + strands) % 2 == 1);
    loop {
        let letters: Vec<i64> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i64);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let b = BraidWord::new(strands, letters).unwrap();
        if b.is_knot() && b.generators_used().iter().all(|&u| u) {
            return b;
        }
    }
}

/// Random word whose closure has exactly two components.
pub fn random_two_component_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2 && (len + strands).is_multiple_of(2));
    loop {
        let letters: Vec<i64> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i64);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let b = BraidWord::new(strands, letters).unwrap();
        if b.closure_components() == 2 {
            return b;
        }
    }
}
