use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of edge indices of some host graph, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn full(edge_count: usize) -> Self {
        debug_assert!(edge_count <= 64);
        if edge_count == 64 {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << edge_count) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        EdgeSubset(indices.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        EdgeSubset(self.0 | 1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn minus(self, other: Self) -> Self {
        EdgeSubset(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }
}

impl Serialize for EdgeSubset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for EdgeSubset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i >= 64) {
            return Err(serde::de::Error::custom(format!("edge index {bad} too large")));
        }
        Ok(EdgeSubset::from_indices(v))
    }
}
