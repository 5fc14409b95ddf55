//! Wahl singularities and their exceptional chains.
//!
//! A Wahl singularity is the cyclic quotient of type m^2/(ma-1) for coprime
//! 0 < a < m; these are exactly the quotient singularities admitting a
//! Q-Gorenstein smoothing with Milnor fiber a rational homology ball B_{m,a}.
//! The pair (1,1) is kept around as a sentinel for a smooth point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cfrac::CFrac;
use crate::cfrac::Fraction;
use crate::{Error, Result};

/// The pair (m,a) of a Wahl singularity m^2/(ma-1), or (1,1) for a smooth
/// point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WahlPair {
    m: BigInt,
    a: BigInt,
}

impl WahlPair {
    pub fn new(m: impl Into<BigInt>, a: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        let a = a.into();
        let valid =
            (m.is_one() && a.is_one()) || (a >= BigInt::one() && m > a && m.gcd(&a).is_one());
        if valid {
            Ok(WahlPair { m, a })
        } else {
            Err(Error::InvalidWahlPair { m, a })
        }
    }

    /// The smooth-point sentinel (1,1).
    pub fn smooth() -> Self {
        WahlPair {
            m: BigInt::one(),
            a: BigInt::one(),
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.m.is_one()
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// The fraction m^2/(ma-1) resolved by the chain of this singularity.
    pub fn fraction(&self) -> Result<Fraction> {
        if self.is_smooth() {
            return Err(Error::SmoothPair);
        }
        Fraction::new(&self.m * &self.m, &self.m * &self.a - 1)
    }

    /// The exceptional chain of (m,a), read from the end that sits against
    /// the flipping curve in an extremal neighborhood.
    ///
    /// Computed twice: as the expansion of m^2/(ma-1), and by gluing the
    /// expansions of m/a = [a_1,...,a_p] and m/(m-a) = [b_1,...,b_q] into
    /// [a_1,...,a_{p-1}, a_p + b_q, b_{q-1},...,b_1]. The two must agree.
    pub fn chain(&self) -> Result<CFrac> {
        if self.is_smooth() {
            return Err(Error::SmoothPair);
        }
        let direct = self.fraction()?.expansion();

        let na = Fraction::new(self.m.clone(), self.a.clone())?.expansion();
        let nb = Fraction::new(self.m.clone(), &self.m - &self.a)?.expansion();
        let (a_entries, b_entries) = (na.entries(), nb.entries());
        let mut glued: Vec<BigInt> = a_entries[..a_entries.len() - 1].to_vec();
        glued.push(a_entries.last().unwrap() + b_entries.last().unwrap());
        glued.extend(b_entries[..b_entries.len() - 1].iter().rev().cloned());

        if glued != direct.entries() {
            return Err(Error::Internal(format!(
                "chain of ({},{}) differs between routes: {:?} vs {:?}",
                self.m,
                self.a,
                direct.entries(),
                glued
            )));
        }
        Ok(direct)
    }

    /// The pair (m, m-a), whose chain is this one's reversed.
    pub fn conjugate(&self) -> WahlPair {
        if self.is_smooth() {
            return self.clone();
        }
        WahlPair {
            m: self.m.clone(),
            a: &self.m - &self.a,
        }
    }

    /// The representative of {(m,a), (m,m-a)} with the smaller second entry;
    /// used when naming the rational homology ball B_{m,a}.
    pub fn canonical(&self) -> WahlPair {
        let conj = self.conjugate();
        if conj.a < self.a {
            conj
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for WahlPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.a)
    }
}

/// Decides whether a continued fraction is the chain of a Wahl singularity,
/// and if so of which pair.
pub fn recognize(c: &CFrac) -> Option<WahlPair> {
    let f = c.value();
    let m = f.num().sqrt();
    if &(&m * &m) != f.num() {
        return None;
    }
    let a_times_m = f.den() + 1u32;
    if !(&a_times_m % &m).is_zero() {
        return None;
    }
    let a = a_times_m / &m;
    if a < BigInt::one() || a >= m || !m.gcd(&a).is_one() {
        return None;
    }
    let w = WahlPair { m, a };
    match w.chain() {
        Ok(chain) if &chain == c => Some(w),
        _ => None,
    }
}
