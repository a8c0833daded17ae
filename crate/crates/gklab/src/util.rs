//! Small shared helpers.

/// FNV-1a 64-bit hash rendered as fixed-width hex. Used for the stable
/// presentation and frame fingerprints carried by serialized output.
pub(crate) fn fingerprint64(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}
