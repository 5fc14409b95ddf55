//! Extremal neighborhoods, Mori sequences, flips and P-resolutions.
//!
//! An extremal neighborhood of type mk2A is a flipping curve passing through
//! two Wahl singularities (m_1,a_1) and (m_2,a_2); mk1A is the degenerate
//! case where the first point is smooth, encoded by the sentinel (1,1). The
//! basic invariant is
//!
//! ```text
//! delta = m_2 a_1 + m_1 a_2 - m_1 m_2  >= 1,     K.C = -delta / (m_1 m_2).
//! ```
//!
//! Every such neighborhood lies on a Mori sequence driven by the linear
//! recursion d(i+1) = delta d(i) - d(i-1). The sequence is generated forward
//! from an initial member, which is either flipping (it admits an extremal
//! P-resolution, the flip) or divisorial (it contracts onto a Wahl
//! singularity). All members of a flipping family share one flip.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cfrac::{display_entries, CFrac, Fraction};
use crate::chains::Chain;
use crate::wahl::WahlPair;
use crate::{Error, Result};

/// Where a neighborhood sits in its Mori sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Initial, and the associated contraction is a flip.
    Flipping,
    /// Initial, and the associated contraction is divisorial.
    Divisorial,
    /// A later member of some Mori sequence.
    NonInitial,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Flipping => "flipping",
            Kind::Divisorial => "divisorial",
            Kind::NonInitial => "non-initial",
        }
    }
}

/// An extremal neighborhood: a flipping curve through the singular points
/// `w1` (possibly smooth) and `w2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalNbhd {
    w1: WahlPair,
    w2: WahlPair,
    delta: BigInt,
}

fn delta_of(w1: &WahlPair, w2: &WahlPair) -> BigInt {
    w2.m() * w1.a() + w1.m() * w2.a() - w1.m() * w2.m()
}

impl ExtremalNbhd {
    /// Builds an initial-position neighborhood: when `w1` is singular the
    /// second index must dominate (m_2 > m_1).
    pub fn initial(w1: WahlPair, w2: WahlPair) -> Result<Self> {
        if !w1.is_smooth() && w2.m() <= w1.m() {
            return Err(Error::PairOrder {
                m1: w1.m().clone(),
                m2: w2.m().clone(),
            });
        }
        Self::member(w1, w2)
    }

    /// Builds any Mori-sequence member; only delta >= 1 is demanded. A smooth
    /// point in the second slot is moved to the first (reading the
    /// configuration from the other end).
    pub fn member(w1: WahlPair, w2: WahlPair) -> Result<Self> {
        let (w1, w2) = if w2.is_smooth() && !w1.is_smooth() {
            (w2, w1)
        } else {
            (w1, w2)
        };
        if w2.is_smooth() {
            return Err(Error::NoSingularSide);
        }
        let delta = delta_of(&w1, &w2);
        if delta < BigInt::one() {
            return Err(Error::NonPositiveDelta { delta });
        }
        Ok(ExtremalNbhd { w1, w2, delta })
    }

    pub fn w1(&self) -> &WahlPair {
        &self.w1
    }

    pub fn w2(&self) -> &WahlPair {
        &self.w2
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    /// The intersection number K.C = -delta/(m_1 m_2), always negative.
    pub fn kc(&self) -> BigRational {
        BigRational::new(-self.delta.clone(), self.w1.m() * self.w2.m())
    }

    /// Classifies by the sign of delta m_1 - m_2: negative means initial
    /// flipping, zero initial divisorial, positive a non-initial member.
    pub fn classify(&self) -> Result<Kind> {
        let t = &self.delta * self.w1.m() - self.w2.m();
        if t.is_negative() {
            Ok(Kind::Flipping)
        } else if t.is_zero() {
            // The divisorial shape m_1 = delta, m_2 = delta^2,
            // a_2 = delta^2 - (delta a_1 - 1) is forced; verify it.
            let d = &self.delta;
            let shape_ok = self.w1.m() == d
                && self.w2.m() == &(d * d)
                && self.w2.a() == &(d * d - (d * self.w1.a() - 1));
            if !shape_ok {
                return Err(Error::Internal(format!(
                    "divisorial member {self} fails the forced shape"
                )));
            }
            Ok(Kind::Divisorial)
        } else {
            Ok(Kind::NonInitial)
        }
    }

    /// The Mori sequence generated from this initial neighborhood, truncated
    /// to at most `count` members. For delta = 1 the sequence has exactly two
    /// members; for delta >= 2 it is infinite.
    ///
    /// Member i carries the pairs (d(i), c(i)) and (d(i+1), d(i+1) - c(i+1)),
    /// where d starts (m_1, m_2) and c starts (a_1, m_2 - a_2), both following
    /// x(i+1) = delta x(i) - x(i-1).
    pub fn mori_sequence(&self, count: usize) -> Result<Vec<MoriStep>> {
        match self.classify()? {
            Kind::Flipping | Kind::Divisorial => {}
            Kind::NonInitial => return Err(Error::NotInitial),
        }
        let delta = &self.delta;
        let mut d_prev = self.w1.m().clone();
        let mut c_prev = self.w1.a().clone();
        let mut d_cur = self.w2.m().clone();
        let mut c_cur = self.w2.m() - self.w2.a();
        let mut steps = Vec::new();
        for index in 1..=count {
            let first = WahlPair::new(d_prev.clone(), c_prev.clone()).map_err(step_bug)?;
            let second = WahlPair::new(d_cur.clone(), &d_cur - &c_cur).map_err(step_bug)?;
            steps.push(MoriStep {
                index,
                first,
                second,
                d: d_prev.clone(),
                c: c_prev.clone(),
            });
            if delta.is_one() && index == 2 {
                break;
            }
            let d_next = delta * &d_cur - &d_prev;
            let c_next = delta * &c_cur - &c_prev;
            d_prev = std::mem::replace(&mut d_cur, d_next);
            c_prev = std::mem::replace(&mut c_cur, c_next);
        }
        Ok(steps)
    }

    /// Walks the recursion backwards to the initial member of the Mori
    /// sequence through this neighborhood.
    pub fn rewind_to_initial(&self) -> Result<ExtremalNbhd> {
        let delta = &self.delta;
        let mut dl = self.w1.m().clone();
        let mut cl = self.w1.a().clone();
        let mut dr = self.w2.m().clone();
        let mut cr = self.w2.m() - self.w2.a();
        loop {
            let d_back = delta * &dl - &dr;
            if !d_back.is_positive() {
                break;
            }
            // Genuine sequences grow strictly forward, so the rewind must
            // shrink; anything else never lay on a sequence.
            if d_back >= dl {
                return Err(Error::NotMoriMember);
            }
            let c_back = delta * &cl - &cr;
            if !c_back.is_positive() || c_back > d_back {
                return Err(Error::NotMoriMember);
            }
            dr = std::mem::replace(&mut dl, d_back);
            cr = std::mem::replace(&mut cl, c_back);
        }
        let w1 = WahlPair::new(dl, cl).map_err(|_| Error::NotMoriMember)?;
        let w2 = WahlPair::new(dr.clone(), &dr - &cr).map_err(|_| Error::NotMoriMember)?;
        let initial = ExtremalNbhd::member(w1, w2)?;
        if initial.delta != self.delta {
            return Err(Error::NotMoriMember);
        }
        Ok(initial)
    }

    /// The flip of (the family of) this neighborhood: the extremal
    /// P-resolution shared by every member of a flipping Mori sequence.
    ///
    /// From the initial member, one side of the flip is (m_1, m_1 - a_1)
    /// (smooth when m_1 = 1), the other has index m_1' = m_2 - delta m_1 and
    /// a_1' = m_2 - a_2 - delta a_1 mod m_1'; the central curve is pinned by
    /// delta = c m_1' m_2' - m_1' a_2' - m_2' a_1'.
    pub fn flip(&self) -> Result<PResolution> {
        let initial = self.rewind_to_initial()?;
        match initial.classify()? {
            Kind::Flipping => {}
            Kind::Divisorial => return Err(Error::NotFlippingFamily),
            Kind::NonInitial => unreachable!("rewound to an initial member"),
        }
        let delta = &initial.delta;
        let (m1, a1) = (initial.w1.m(), initial.w1.a());
        let (m2, a2) = (initial.w2.m(), initial.w2.a());

        let curve_side = if initial.w1.is_smooth() {
            WahlPair::smooth()
        } else {
            WahlPair::new(m1.clone(), m1 - a1).map_err(step_bug)?
        };
        let m1p = m2 - delta * m1;
        debug_assert!(m1p.is_positive());
        let far_side = if m1p.is_one() {
            WahlPair::smooth()
        } else {
            let a1p = (m2 - a2 - delta * a1).mod_floor(&m1p);
            WahlPair::new(m1p, a1p).map_err(step_bug)?
        };

        let c_num = delta + far_side.m() * curve_side.a() + curve_side.m() * far_side.a();
        let c_den = far_side.m() * curve_side.m();
        let (c, rem) = c_num.div_rem(&c_den);
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "flip of {initial} has non-integral central curve {c_num}/{c_den}"
            )));
        }
        PResolution::new(curve_side, far_side, c)
    }

    /// For a member of a divisorial family, the Wahl singularity the family
    /// contracts onto: the pair (m_1, a_1) = (delta, a_1) of the initial
    /// member.
    pub fn divisorial_target(&self) -> Result<WahlPair> {
        let initial = self.rewind_to_initial()?;
        match initial.classify()? {
            Kind::Divisorial => Ok(initial.w1.clone()),
            Kind::Flipping => Err(Error::NotDivisorialFamily),
            Kind::NonInitial => unreachable!("rewound to an initial member"),
        }
    }

    /// Prints `[chain of w2, reversed]-[chain of w1]`, with a smooth first
    /// point shown as the empty symbol.
    pub fn display(&self) -> Result<String> {
        let left = display_entries(self.w2.chain()?.reversed().entries());
        let right = if self.w1.is_smooth() {
            "\u{2205}".to_string()
        } else {
            display_entries(self.w1.chain()?.entries())
        };
        Ok(format!("{left}-{right}"))
    }
}

fn step_bug(e: Error) -> Error {
    Error::Internal(format!("sequence produced an invalid pair: {e}"))
}

impl fmt::Display for ExtremalNbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.w1, self.w2)
    }
}

/// One member of a Mori sequence: the pairs of the i-th neighborhood together
/// with the recursion values d(i), c(i) that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoriStep {
    index: usize,
    first: WahlPair,
    second: WahlPair,
    d: BigInt,
    c: BigInt,
}

impl MoriStep {
    pub fn index(&self) -> usize {
        self.index
    }

    /// The pair (d(i), c(i)).
    pub fn first(&self) -> &WahlPair {
        &self.first
    }

    /// The pair (d(i+1), d(i+1) - c(i+1)).
    pub fn second(&self) -> &WahlPair {
        &self.second
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// This member as an extremal neighborhood.
    pub fn neighborhood(&self) -> Result<ExtremalNbhd> {
        ExtremalNbhd::member(self.first.clone(), self.second.clone())
    }

    /// Prints the member like a neighborhood.
    pub fn display(&self) -> Result<String> {
        self.neighborhood()?.display()
    }
}

/// An extremal P-resolution: a curve of self-intersection -c with a Wahl
/// singularity or smooth point on each side.
///
/// Reading the configuration from the other end merely swaps the two sides,
/// so construction canonicalizes: the side with the lexicographically larger
/// pair is stored on the displayed left. The invariant
/// `delta = c m_l m_r - m_l a_r - m_r a_l` must be positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PResolution {
    left: WahlPair,
    right: WahlPair,
    c: BigInt,
    delta: BigInt,
}

impl PResolution {
    pub fn new(side_a: WahlPair, side_b: WahlPair, c: impl Into<BigInt>) -> Result<Self> {
        let c = c.into();
        // Only positivity of c is demanded outright: the delta invariant
        // below already forces c >= 2 when a side is smooth (delta would be
        // -a_r or c - 2 otherwise), while two singular sides genuinely admit
        // c = 1, with the -1 central curve contracting away in the minimal
        // resolution.
        if c < BigInt::one() {
            return Err(Error::CentralCurveTooSmall(c));
        }
        let delta =
            &c * (side_a.m() * side_b.m()) - side_a.m() * side_b.a() - side_b.m() * side_a.a();
        if !delta.is_positive() {
            return Err(Error::NotExtremal { delta });
        }
        let (left, right) = if (side_a.m(), side_a.a()) < (side_b.m(), side_b.a()) {
            (side_b, side_a)
        } else {
            (side_a, side_b)
        };
        Ok(PResolution {
            left,
            right,
            c,
            delta,
        })
    }

    pub fn left(&self) -> &WahlPair {
        &self.left
    }

    pub fn right(&self) -> &WahlPair {
        &self.right
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    /// The full exceptional chain in the minimal resolution: left chain
    /// reversed, then the central -c curve, then the right chain. A -1
    /// central curve is not part of the minimal resolution, so for c = 1 the
    /// configuration is blown down first; blow-downs preserve the evaluated
    /// fraction.
    pub fn resolution_chain(&self) -> Result<CFrac> {
        let mut entries: Vec<BigInt> = Vec::new();
        if !self.left.is_smooth() {
            entries.extend(self.left.chain()?.reversed().entries().iter().cloned());
        }
        entries.push(self.c.clone());
        if !self.right.is_smooth() {
            entries.extend(self.right.chain()?.entries().iter().cloned());
        }
        Chain::new(entries)?.reduce()?.as_cfrac()
    }

    /// The cyclic quotient type (N, A) the P-resolution contracts onto,
    /// evaluated from the full exceptional chain.
    pub fn target(&self) -> Result<Fraction> {
        Ok(self.resolution_chain()?.value())
    }

    /// The one or two initial flipping neighborhoods whose flip is this
    /// P-resolution, inverting the flip formula once per side.
    pub fn initial_neighborhoods(&self) -> Result<Vec<ExtremalNbhd>> {
        let delta = &self.delta;
        let mut out: Vec<ExtremalNbhd> = Vec::new();
        for (side, other) in [(&self.right, &self.left), (&self.left, &self.right)] {
            let (m1, a1) = if side.is_smooth() {
                (BigInt::one(), BigInt::one())
            } else {
                (side.m().clone(), side.m() - side.a())
            };
            let m2 = other.m() + delta * &m1;
            let num = delta + &m1 * &m2 - &m2 * &a1;
            let (a2, rem) = num.div_rem(&m1);
            if !rem.is_zero() {
                return Err(Error::Internal(format!(
                    "inverting the flip of {self} gave a non-integral a_2"
                )));
            }
            let w1 = WahlPair::new(m1, a1).map_err(step_bug)?;
            let w2 = WahlPair::new(m2, a2).map_err(step_bug)?;
            let nbhd = ExtremalNbhd::initial(w1, w2)?;
            if nbhd.classify()? != Kind::Flipping || &nbhd.flip()? != self {
                return Err(Error::Internal(format!(
                    "inverting the flip of {self} produced {nbhd}, which does not flip back"
                )));
            }
            if !out.contains(&nbhd) {
                out.push(nbhd);
            }
        }
        Ok(out)
    }

    /// Prints `[left chain, reversed]-c-[right chain]` with smooth sides as
    /// the empty symbol.
    pub fn display(&self) -> Result<String> {
        let left = if self.left.is_smooth() {
            "\u{2205}".to_string()
        } else {
            display_entries(self.left.chain()?.reversed().entries())
        };
        let right = if self.right.is_smooth() {
            "\u{2205}".to_string()
        } else {
            display_entries(self.right.chain()?.entries())
        };
        Ok(format!("{left}-{}-{right}", self.c))
    }
}

impl fmt::Display for PResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.display() {
            Ok(s) => write!(f, "{s}"),
            Err(_) => write!(f, "{},{} curve {}", self.left, self.right, self.c),
        }
    }
}

/// One step of the usual flip of a Wahl singularity `w`, working on the chain
/// read with the marked curve at the tail (the reversed chain of `w`,
/// equivalently the chain of its conjugate).
///
/// With that chain `[e_1,...,e_s]` and i_0 the last index carrying an entry
/// of 3 or more, the flip data is the central curve e_1 together with the
/// Wahl singularity of the chain `[e_2,...,e_{i_0} - 1]`; when i_0 = 1 the
/// whole tail is 2s and the result degenerates to (e_1 - 1, smooth).
pub fn usual_flip_step(w: &WahlPair) -> Result<(BigInt, WahlPair)> {
    if w.is_smooth() {
        return Err(Error::SmoothPair);
    }
    let display = w.conjugate().chain()?;
    let entries = display.entries();
    let i0 = entries
        .iter()
        .rposition(|e| *e >= BigInt::from(3))
        .expect("every Wahl chain has an entry >= 3");
    if i0 == 0 {
        return Ok((entries[0].clone() - 1, WahlPair::smooth()));
    }
    let mut truncated = entries[1..=i0].to_vec();
    *truncated.last_mut().unwrap() -= 1;
    let sub = CFrac::new(truncated)
        .map_err(|e| Error::Internal(format!("usual flip truncation of {w} invalid: {e}")))?;
    let next = crate::wahl::recognize(&sub).ok_or_else(|| {
        Error::Internal(format!("usual flip truncation of {w} is not a Wahl chain"))
    })?;
    Ok((entries[0].clone(), next))
}
