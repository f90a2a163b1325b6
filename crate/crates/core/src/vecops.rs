//! Checked helpers for small dense integer vectors.

use crate::error::{Error, Result};

pub fn checked_add(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow))
        .collect()
}

pub fn checked_sub(a: &[i64], b: &[i64]) -> Result<Vec<i64>> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_sub(y).ok_or(Error::Overflow))
        .collect()
}

/// a - k*b, in place on a copy.
pub fn checked_sub_mul(a: &[i64], k: i64, b: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            k.checked_mul(y)
                .and_then(|p| x.checked_sub(p))
                .ok_or(Error::Overflow)
        })
        .collect()
}

pub fn checked_scale(a: &[i64], k: i64) -> Result<Vec<i64>> {
    a.iter()
        .map(|&x| x.checked_mul(k).ok_or(Error::Overflow))
        .collect()
}

pub fn checked_dot(a: &[i64], b: &[i64]) -> Result<i64> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc: i64 = 0;
    for (&x, &y) in a.iter().zip(b) {
        let p = x.checked_mul(y).ok_or(Error::Overflow)?;
        acc = acc.checked_add(p).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

pub fn one_norm(a: &[i64]) -> Result<i64> {
    let mut acc: i64 = 0;
    for &x in a {
        acc = acc
            .checked_add(x.checked_abs().ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

pub fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|&x| -x).collect()
}

pub fn is_zero(a: &[i64]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Positive part max(v, 0) componentwise.
pub fn positive_part(a: &[i64]) -> Vec<i64> {
    a.iter().map(|&x| x.max(0)).collect()
}

pub fn negative_part(a: &[i64]) -> Vec<i64> {
    a.iter().map(|&x| (-x).max(0)).collect()
}

/// Support masks, valid for vectors of length <= 128.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignMask {
    pub pos: u128,
    pub neg: u128,
}

impl SignMask {
    pub fn of(v: &[i64]) -> SignMask {
        debug_assert!(v.len() <= 128);
        let mut pos = 0u128;
        let mut neg = 0u128;
        for (i, &x) in v.iter().enumerate() {
            if x > 0 {
                pos |= 1 << i;
            } else if x < 0 {
                neg |= 1 << i;
            }
        }
        SignMask { pos, neg }
    }

    /// Masks of -v.
    pub fn negated(self) -> SignMask {
        SignMask {
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// Necessary condition for conformal s <= v (same-sign support containment).
    #[inline]
    pub fn fits_in(self, other: SignMask) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    /// True when the two sign patterns clash in at least one coordinate.
    #[inline]
    pub fn conflicts(self, other: SignMask) -> bool {
        self.pos & other.neg != 0 || self.neg & other.pos != 0
    }
}
