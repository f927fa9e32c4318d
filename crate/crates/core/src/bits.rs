//! Fixed-length bit vectors used for tower sets and orientation bits.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits::zeros(len);
        for i in 0..len {
            b.set(i, true);
        }
        b
    }

    /// Low `len` bits of `index`, bit `i` of the integer becoming entry `i`.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(len <= 64, "index form holds at most 64 bits");
        let mut b = Bits::zeros(len);
        if len > 0 {
            let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            b.words[0] = index & mask;
        }
        b
    }

    pub fn from_bools(values: &[bool]) -> Self {
        let mut b = Bits::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            b.set(i, v);
        }
        b
    }

    pub fn from_members(len: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::zeros(len);
        for m in members {
            b.set(m, true);
        }
        b
    }

    /// Parses a string over `{0,1}`; returns `None` on any other character.
    pub fn parse01(s: &str) -> Option<Self> {
        let mut b = Bits::zeros(s.len());
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => b.set(i, true),
                _ => return None,
            }
        }
        Some(b)
    }

    /// Inverse of `from_index`; `None` when longer than 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let w = &mut self.words[i / 64];
        if value {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        let v = self.get(i);
        self.set(i, !v);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + tz)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Positions where `self` and `other` differ, ascending.
    pub fn diff_positions(&self, other: &Bits) -> Vec<usize> {
        assert_eq!(self.len, other.len);
        (0..self.len).filter(|&i| self.get(i) != other.get(i)).collect()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits(\"{self}\")")
    }
}

/// Renders as a `{0,1}` string, entry 0 first.
impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn index_roundtrip_and_display() {
        let b = Bits::from_index(0b1011, 5);
        assert_eq!(b.to_string(), "11010");
        assert_eq!(b.to_index(), Some(0b1011));
        assert_eq!(Bits::parse01("11010"), Some(b));
        assert_eq!(Bits::parse01("1x"), None);
    }

    #[test]
    fn ones_across_words() {
        let b = Bits::from_members(130, [0, 63, 64, 129]);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(b.count_ones(), 4);
        assert_eq!(b.to_index(), None);
        assert_eq!(Bits::ones(70).count_ones(), 70);
    }
}
