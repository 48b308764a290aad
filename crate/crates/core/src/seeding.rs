//! Deterministic seed derivation. All randomness in a run flows from one
//! user-supplied seed; sub-seeds are derived from (seed, purpose tag) or
//! (seed, index) so independent jobs stay reproducible regardless of the
//! order they are scheduled in.

/// SplitMix64 finalizer. Good avalanche behavior, stable across platforms.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// FNV-1a over the tag bytes; stable, dependency-free string hash.
fn fnv1a(tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Derive a sub-seed for a named purpose ("forecast:b0", "bootstrap", ...).
pub fn derive(seed: u64, tag: &str) -> u64 {
    splitmix64(seed ^ fnv1a(tag))
}

/// Derive a sub-seed for the i-th item of a purpose (tree index, instance index).
pub fn derive_indexed(seed: u64, tag: &str, index: u64) -> u64 {
    splitmix64(derive(seed, tag) ^ splitmix64(index))
}
