//! Blow-up and blow-down rewriting of curve chains.
//!
//! A chain holds the negated self-intersections of a linear configuration of
//! rational curves. Blowing up between two curves (or at an end) inserts a 1
//! and increments the neighbors; blowing down removes a 1 and decrements the
//! neighbors. [`Chain::reduce`] contracts 1-entries left to right until none
//! remain, which is how a blown-up configuration is recognized: the normal
//! form of any iterated blow-up of a point is the single chain `[0]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cfrac::{display_entries, CFrac, Fraction};
use crate::wahl::WahlPair;
use crate::{Error, Result};

/// Which end of a chain an end blow-up touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Left,
    Right,
}

/// A linear chain of curves, stored as non-negative negated self-intersections.
///
/// Entries equal to 1 are (-1)-curves and can be contracted; 0 occurs as the
/// terminal normal form `[0]` (and transiently during reduction).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    entries: Vec<BigInt>,
}

impl Chain {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        for e in &entries {
            if e < &BigInt::zero() {
                return Err(Error::NegativeEntry(e.clone()));
            }
        }
        Ok(Chain { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn empty() -> Self {
        Chain {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reversed(&self) -> Chain {
        Chain {
            entries: self.entries.iter().rev().cloned().collect(),
        }
    }

    /// Contracts the (-1)-curve at `index`: removes the entry (which must be 1)
    /// and decrements both neighbors. A lone `[1]` contracts to the empty
    /// chain. Fails if a neighbor would drop below zero.
    pub fn blow_down_at(&self, index: usize) -> Result<Chain> {
        let len = self.entries.len();
        if index >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
        if !self.entries[index].is_one() {
            return Err(Error::NotContractible {
                index,
                entry: self.entries[index].clone(),
            });
        }
        let mut out = Vec::with_capacity(len - 1);
        out.extend_from_slice(&self.entries[..index]);
        out.extend_from_slice(&self.entries[index + 1..]);
        // After removal the old neighbors sit at index-1 and index.
        if index > 0 {
            if out[index - 1].is_zero() {
                return Err(Error::NeighborUnderflow);
            }
            out[index - 1] -= 1;
        }
        if index < out.len() {
            if out[index].is_zero() {
                return Err(Error::NeighborUnderflow);
            }
            out[index] -= 1;
        }
        Ok(Chain { entries: out })
    }

    /// Contracts 1-entries, leftmost first, until none remain.
    ///
    /// `[1,1]` normalizes to `[0]` and a lone `[1]` to the empty chain; `[0]`
    /// is terminal. Chains that do not come from blowing up a smaller
    /// configuration fail with a neighbor underflow.
    pub fn reduce(&self) -> Result<Chain> {
        let mut current = self.clone();
        loop {
            match current.entries.iter().position(|e| e.is_one()) {
                Some(i) => current = current.blow_down_at(i)?,
                None => return Ok(current),
            }
        }
    }

    /// Blows up between positions `index` and `index + 1`: inserts a 1 and
    /// increments both neighbors.
    pub fn blow_up_between(&self, index: usize) -> Result<Chain> {
        let len = self.entries.len();
        if index + 1 >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
        let mut out = self.entries.clone();
        out[index] += 1;
        out[index + 1] += 1;
        out.insert(index + 1, BigInt::one());
        Ok(Chain { entries: out })
    }

    /// Blows up at an end of the chain: appends a 1 there and increments the
    /// single neighbor.
    pub fn blow_up_at_end(&self, end: End) -> Chain {
        let mut out = self.entries.clone();
        match end {
            End::Left => {
                if let Some(first) = out.first_mut() {
                    *first += 1;
                }
                out.insert(0, BigInt::one());
            }
            End::Right => {
                if let Some(last) = out.last_mut() {
                    *last += 1;
                }
                out.push(BigInt::one());
            }
        }
        Chain { entries: out }
    }

    /// The chain obtained from the minimal resolution of n/a by blowing up at
    /// the right end until the leading segment becomes the Wahl chain of
    /// (n,a):
    ///
    /// ```text
    /// [a_1,...,a_{p-1}, a_p + b_q, b_{q-1},...,b_1, 1, a_1,...,a_p]
    /// ```
    ///
    /// where n/a = [a_1,...,a_p] and n/(n-a) = [b_1,...,b_q]. The segment
    /// before the 1 is exactly `WahlPair::new(n,a).chain()`, and reducing the
    /// whole chain recovers [a_1,...,a_p].
    pub fn blown_up_chain(f: &Fraction) -> Result<Chain> {
        let w = WahlPair::new(f.num().clone(), f.den().clone())?;
        let mut entries: Vec<BigInt> = w.chain()?.entries().to_vec();
        entries.push(BigInt::one());
        entries.extend_from_slice(f.expansion().entries());
        Ok(Chain { entries })
    }

    pub fn as_cfrac(&self) -> Result<CFrac> {
        CFrac::new(self.entries.clone())
    }
}

impl From<&CFrac> for Chain {
    fn from(c: &CFrac) -> Self {
        Chain {
            entries: c.entries().to_vec(),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", display_entries(&self.entries))
    }
}
