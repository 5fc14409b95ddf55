//! Hirzebruch-Jung continued fractions.
//!
//! A fraction n/a with n > a >= 1 coprime has a unique expansion
//!
//! ```text
//! n/a = e_1 - 1/(e_2 - 1/(... - 1/e_s))     with every e_i >= 2,
//! ```
//!
//! written `[e_1,...,e_s]`. These are the self-intersection numbers (negated)
//! of the exceptional curves resolving the cyclic quotient singularity of type
//! 1/n(1,a). The dual fraction n/(n-a) expands to the complementary chain.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::{Error, Result};

/// A reduced fraction n/a with n > a >= 1, the type of a cyclic quotient
/// singularity 1/n(1,a).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds n/a, rejecting pairs that are out of range or not coprime.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den < BigInt::one() || num <= den {
            return Err(Error::FractionRange { num, den });
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::FractionNotReduced { num, den });
        }
        Ok(Fraction { num, den })
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// The Hirzebruch-Jung expansion `[e_1,...,e_s]` of this fraction.
    ///
    /// Greedy: e_1 is the ceiling of n/a and the tail expands a/(e_1*a - n).
    /// Every entry is >= 2 and the expansion is unique.
    pub fn expansion(&self) -> CFrac {
        let mut n = self.num.clone();
        let mut a = self.den.clone();
        let mut entries = Vec::new();
        loop {
            if a.is_one() {
                entries.push(n);
                break;
            }
            let e = n.div_ceil(&a);
            let r = &e * &a - &n;
            entries.push(e);
            n = a;
            a = r;
        }
        CFrac { entries }
    }

    /// The dual fraction n/(n-a). Applying it twice gives the fraction back.
    pub fn dual(&self) -> Fraction {
        // gcd(n, n-a) = gcd(n, a) = 1 and 1 <= n-a < n, so this cannot fail.
        Fraction {
            num: self.num.clone(),
            den: &self.num - &self.den,
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.num, self.den)
    }
}

/// A Hirzebruch-Jung continued fraction: a nonempty list of entries, all >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CFrac {
    entries: Vec<BigInt>,
}

impl CFrac {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyCFrac);
        }
        for e in &entries {
            if *e < BigInt::from(2) {
                return Err(Error::EntryTooSmall(e.clone()));
            }
        }
        Ok(CFrac { entries })
    }

    /// Convenience constructor for small test values.
    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    /// Evaluates the continued fraction back to its value n/a.
    ///
    /// Runs right to left: `[e] = e/1` and `[e, tail] = e - 1/[tail]`.
    pub fn value(&self) -> Fraction {
        let mut n = self.entries.last().expect("nonempty").clone();
        let mut a = BigInt::one();
        for e in self.entries.iter().rev().skip(1) {
            let next = e * &n - &a;
            a = std::mem::replace(&mut n, next);
        }
        debug_assert!(n.gcd(&a).is_one());
        Fraction { num: n, den: a }
    }

    pub fn reversed(&self) -> CFrac {
        CFrac {
            entries: self.entries.iter().rev().cloned().collect(),
        }
    }
}

impl fmt::Display for CFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", display_entries(&self.entries))
    }
}

/// Formats a slice of entries as `[e,e,e]`.
pub(crate) fn display_entries(entries: &[BigInt]) -> String {
    let inner: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    format!("[{}]", inner.join(","))
}
