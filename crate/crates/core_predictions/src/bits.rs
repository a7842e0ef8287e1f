//! Extended Hamming distance between bit-strings.

use crate::error::{Error, Result};

/// Maximal interval on which both strings are constant and differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    /// First position, 1-based.
    pub lo: usize,
    /// Last position, 1-based, inclusive.
    pub hi: usize,
    /// `t[hi] − s[hi]`, either −1 or +1.
    pub sign: i8,
}

/// Parses a string of `0`/`1` characters.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::BadBit(other)),
        })
        .collect()
}

/// Renders bits as `0`/`1` characters.
pub fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Blocks of the common constant-run refinement on which `s` and `t` differ.
pub fn eh_blocks(s: &[bool], t: &[bool]) -> Result<Vec<Block>> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    let n = s.len();
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < n {
        let mut hi = lo;
        while hi + 1 < n && s[hi + 1] == s[lo] && t[hi + 1] == t[lo] {
            hi += 1;
        }
        if s[lo] != t[lo] {
            let sign = if t[hi] { 1 } else { -1 };
            out.push(Block { lo: lo + 1, hi: hi + 1, sign });
        }
        lo = hi + 1;
    }
    Ok(out)
}

/// Number of maximal common constant-run blocks on which `s` and `t` differ.
pub fn extended_hamming(s: &[bool], t: &[bool]) -> Result<usize> {
    eh_blocks(s, t).map(|b| b.len())
}

/// Plain Hamming distance.
pub fn hamming(s: &[bool], t: &[bool]) -> Result<usize> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { left: s.len(), right: t.len() });
    }
    Ok(s.iter().zip(t).filter(|(a, b)| a != b).count())
}
