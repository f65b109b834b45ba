//! Seed-derivation discipline.
//!
//! One master seed drives an entire experiment. Every subsystem derives its
//! own stream as `hash(master, label, index)`, so results do not depend on
//! the order in which subsystems consume randomness or on how work is
//! scheduled across threads.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Derives an independent, reproducible RNG stream from a master seed.
///
/// The same `(master, label, index)` triple always yields the same stream,
/// on every platform.
pub fn derive_rng(master: u64, label: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(derive_seed(master, label, index))
}

/// 32-byte seed underlying [`derive_rng`]; exposed for persistence/tests.
pub fn derive_seed(master: u64, label: &str, index: u64) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(master.to_le_bytes());
    h.update([label.len() as u8]);
    h.update(label.as_bytes());
    h.update(index.to_le_bytes());
    h.finalize().into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_triple_same_stream() {
        let a: Vec<u64> = derive_rng(42, "trial", 7).sample_iter(rand::distributions::Standard).take(8).collect();
        let b: Vec<u64> = derive_rng(42, "trial", 7).sample_iter(rand::distributions::Standard).take(8).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn distinct_labels_and_indices_decorrelate() {
        let mut base = derive_rng(42, "trial", 0);
        let mut other_idx = derive_rng(42, "trial", 1);
        let mut other_lbl = derive_rng(42, "shuffle", 0);
        let x: u64 = base.gen();
        assert_ne!(x, other_idx.gen::<u64>());
        assert_ne!(x, other_lbl.gen::<u64>());
    }
}
