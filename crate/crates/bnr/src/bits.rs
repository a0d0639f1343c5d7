//! Fixed-size bit vectors backed by `u64` blocks.
//!
//! Truth tables and state sets are both characteristic functions over
//! `2^n` states, so they share this storage.

/// A bit vector of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: u64,
    blocks: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: u64) -> Self {
        let nblocks = (len as usize).div_ceil(64).max(1);
        Bits {
            len,
            blocks: vec![0; nblocks],
        }
    }

    pub fn from_fn(len: u64, f: impl Fn(u64) -> bool) -> Self {
        let mut b = Bits::zeros(len);
        for i in 0..len {
            if f(i) {
                b.set(i, true);
            }
        }
        b
    }

    pub fn from_blocks(len: u64, blocks: Vec<u64>) -> Self {
        debug_assert_eq!(blocks.len(), (len as usize).div_ceil(64).max(1));
        let mut b = Bits { len, blocks };
        b.mask_tail();
        b
    }

    fn mask_tail(&mut self) {
        let rem = (self.len % 64) as u32;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        (self.blocks[(i / 64) as usize] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: u64, value: bool) {
        debug_assert!(i < self.len);
        let block = &mut self.blocks[(i / 64) as usize];
        let mask = 1u64 << (i % 64);
        if value {
            *block |= mask;
        } else {
            *block &= !mask;
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|b| b.count_ones() as u64).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = u64> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let base = bi as u64 * 64;
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(base + tz)
            })
        })
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut b = Bits::zeros(130);
        b.set(0, true);
        b.set(63, true);
        b.set(64, true);
        b.set(129, true);
        assert!(b.get(0) && b.get(63) && b.get(64) && b.get(129));
        assert!(!b.get(1) && !b.get(128));
        assert_eq!(b.count_ones(), 4);
        assert_eq!(b.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        b.set(64, false);
        assert!(!b.get(64));
    }

    #[test]
    fn tail_masking() {
        let b = Bits::from_blocks(3, vec![0b11111]);
        assert_eq!(b.count_ones(), 3);
    }
}
