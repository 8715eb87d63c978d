//! Small shared helpers: content hashing for provenance tags and the float
//! formatting used by the text file formats.

/// FNV-1a over raw bytes. Used to derive stable provenance ids for networks
/// and datasets; not cryptographic.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// Format a float with 17 significant digits so that parsing the text
/// recovers the exact bit pattern.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_matches_reference_vector() {
        // Standard FNV-1a test vectors.
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
    }

    #[test]
    fn fmt_round_trips_exactly() {
        for v in [0.0, 1.0, -1.5, 0.1, 1e-300, std::f64::consts::PI, 0.484322104837852] {
            let s = fmt_f64(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{s}");
        }
    }
}
