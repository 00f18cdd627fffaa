//! Benchmark fixtures.

use atm_core::corpus::{sample_corpus, CorpusShape};
use atm_core::transforms::{dual, one_sided, Side};
use atm_core::{zoo, Machine};

pub const SEED: u64 = 0xbe_0c;

pub fn corpus(count: usize) -> Vec<Machine> {
    sample_corpus(SEED, count, &CorpusShape::default())
}

/// The one-sided acceptor and rejector pair for even-length words.
pub fn parity_pair() -> (Machine, Machine) {
    let m0 = one_sided(&zoo::even_length_acceptor(), Side::Plus).expect("single tape");
    let m1 = dual(&one_sided(&zoo::odd_length_acceptor(), Side::Plus).expect("single tape"));
    (m0, m1)
}
