//! Counter-based random streams.
//!
//! Every track draws from its own ChaCha8 stream selected by
//! `(seed, stream = track index)`. ChaCha's keystream is a pure function of
//! key, stream id and block counter, so a track's draws never depend on how
//! work is split across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
