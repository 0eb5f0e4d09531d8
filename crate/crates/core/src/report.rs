//! JSON helpers shared by the report types.

use serde::{Serialize, Serializer};

/// Largest integer a JSON consumer can hold exactly in a double.
pub const MAX_SAFE: i128 = (1i128 << 53) - 1;

/// An exact integer that serializes as a JSON number when it is safe for
/// double-based consumers and as a decimal string otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Int(pub i128);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= MAX_SAFE {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl From<i128> for Int {
    fn from(v: i128) -> Self {
        Int(v)
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int(v as i128)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        Int(v as i128)
    }
}

pub fn ints<T: Copy + Into<Int>>(v: &[T]) -> Vec<Int> {
    v.iter().map(|&x| x.into()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_values_become_strings() {
        assert_eq!(serde_json::to_string(&Int(42)).unwrap(), "42");
        assert_eq!(serde_json::to_string(&Int(-MAX_SAFE)).unwrap(), "-9007199254740991");
        assert_eq!(
            serde_json::to_string(&Int(MAX_SAFE + 1)).unwrap(),
            "\"9007199254740992\""
        );
    }
}
