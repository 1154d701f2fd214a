//! Exhaustive and seeded-random streams of Cayley tables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Largest order enumerated exhaustively without an explicit override.
pub const MAX_EXHAUSTIVE_ORDER: usize = 3;

/// Samples drawn from one generator stream. Stream `b` yields samples
/// `b * SAMPLE_BLOCK ..`, so any sample can be regenerated without the ones
/// before its block.
pub const SAMPLE_BLOCK: u64 = 4096;

/// Recorded in sweep reports so sampled runs can be reproduced elsewhere.
pub const GENERATOR: &str = "ChaCha8 (rand_chacha 0.3): seed_from_u64(seed), stream = sample index / 4096; \
each table filled row-major with gen_range(0..n)";

/// Number of tables of order `n`, or `None` if it overflows `u64`.
pub fn table_count(n: usize) -> Option<u64> {
    (n as u64).checked_pow(u32::try_from(n * n).ok()?)
}

/// The `index`-th table of order `n` in lexicographic order of the
/// row-major entry sequence.
pub fn table_at(n: usize, mut index: u64) -> Groupoid {
    let mut table = vec![0; n * n];
    for cell in table.iter_mut().rev() {
        *cell = (index % n as u64) as usize;
        index /= n as u64;
    }
    Groupoid::new(n, table).expect("digits are below n")
}

/// All `n^(n²)` tables of order `n`, lexicographically.
///
/// Orders above [`MAX_EXHAUSTIVE_ORDER`] are refused with `OrderTooLarge`
/// unless `acknowledge_large` is set.
pub fn enumerate_groupoids(n: usize, acknowledge_large: bool) -> Result<impl Iterator<Item = Groupoid>> {
    if n == 0 || (n > MAX_EXHAUSTIVE_ORDER && !acknowledge_large) {
        return Err(Error::OrderTooLarge { order: n, limit: MAX_EXHAUSTIVE_ORDER });
    }
    let count = table_count(n).ok_or(Error::OrderTooLarge { order: n, limit: MAX_EXHAUSTIVE_ORDER })?;
    Ok((0..count).map(move |i| table_at(n, i)))
}

/// Samples `start..end` of the seeded stream of uniform random tables.
pub fn random_groupoid_range(n: usize, seed: u64, start: u64, end: u64) -> Vec<Groupoid> {
    let mut out = Vec::with_capacity(end.saturating_sub(start) as usize);
    let mut i = start;
    while i < end {
        let block = i / SAMPLE_BLOCK;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(block);
        let block_start = block * SAMPLE_BLOCK;
        let block_end = (block_start + SAMPLE_BLOCK).min(end);
        for j in block_start..block_end {
            let table: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
            if j >= i {
                out.push(Groupoid::new(n, table).expect("entries below n"));
            }
        }
        i = block_end;
    }
    out
}

/// `count` uniform random tables of order `n`, deterministic in `seed`.
pub fn random_groupoids(n: usize, count: u64, seed: u64) -> impl Iterator<Item = Groupoid> {
    let blocks = count.div_ceil(SAMPLE_BLOCK);
    (0..blocks).flat_map(move |b| {
        let start = b * SAMPLE_BLOCK;
        random_groupoid_range(n, seed, start, (start + SAMPLE_BLOCK).min(count))
    })
}
