//! Enumerations of embedded rational homology balls.
//!
//! Three constructions are provided, each enumerating pairwise-disjoint
//! pairs of rational homology balls B(p,q) inside a fixed 4-manifold:
//!
//! * [`embed_linear`] — balls in the regular neighborhood of a negative
//!   linear chain of 2-spheres;
//! * [`embed_blowup`] — balls in a one-point blow-up of B(n,a);
//! * [`embed_milnor`] — balls in the Milnor fiber of the smoothing attached
//!   to an extremal P-resolution.
//!
//! In every case the pairs are consecutive members of a Mori sequence, so
//! the enumeration reduces to building the right initial extremal
//! neighborhood and running the recursion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::cfrac::{CFrac, Fraction};
use crate::mori::{usual_flip_step, ExtremalNbhd, Kind, MoriStep, PResolution};
use crate::wahl::WahlPair;
use crate::{Error, Result};

/// The ambient 4-manifold an embedding report refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    /// Regular neighborhood of the linear chain with these magnitudes.
    ChainNbhd(CFrac),
    /// The rational homology ball B(n,a) blown up in one point.
    BlownUpBall(WahlPair),
    /// The Milnor fiber of the smoothing picked out by an extremal
    /// P-resolution of the cyclic quotient singularity `q_type`.
    MilnorFiber {
        presolution: PResolution,
        q_type: Fraction,
    },
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::ChainNbhd(gamma) => write!(f, "chain {gamma}"),
            Target::BlownUpBall(w) => write!(f, "B{w} # blowup"),
            Target::MilnorFiber {
                presolution,
                q_type,
            } => {
                let shown = presolution
                    .display()
                    .unwrap_or_else(|_| "<invalid>".to_string());
                write!(f, "Milnor fiber of {shown} (q-type {q_type})")
            }
        }
    }
}

/// How the embedded balls sit with respect to blow-ups of the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicity {
    /// Every reported embedding rationally blows up to ordinary blow-ups.
    Simple,
    /// All but the first reported embedding are simple.
    SimpleAfterFirst,
    /// None of the reported embeddings is simple.
    NonSimple,
    /// No embeddings are reported, so no label applies.
    None,
}

impl Simplicity {
    pub fn label(&self) -> &'static str {
        match self {
            Simplicity::Simple => "simple",
            Simplicity::SimpleAfterFirst => "simple-for-i>1",
            Simplicity::NonSimple => "non-simple",
            Simplicity::None => "none",
        }
    }
}

/// The result of one embedding enumeration: the ambient target, the Mori
/// steps realizing the ball pairs, and bookkeeping flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    target: Target,
    delta: Option<BigInt>,
    infinite: bool,
    simplicity: Simplicity,
    steps: Vec<MoriStep>,
    reason: Option<String>,
}

impl EmbeddingReport {
    pub fn target(&self) -> &Target {
        &self.target
    }

    /// The common delta of the enumerated family; absent for empty reports.
    pub fn delta(&self) -> Option<&BigInt> {
        self.delta.as_ref()
    }

    /// True when the family goes on forever (delta >= 2) and `steps` is a
    /// truncation; false when the listed steps are all there are.
    pub fn is_infinite(&self) -> bool {
        self.infinite
    }

    pub fn is_finite(&self) -> bool {
        !self.infinite
    }

    pub fn simplicity(&self) -> Simplicity {
        self.simplicity
    }

    pub fn steps(&self) -> &[MoriStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Why the report is empty, when it is.
    pub fn reason(&self) -> Option<&str> {
        self.reason.as_deref()
    }

    /// The ball pairs of each step in canonical (smallest second index) form.
    pub fn canonical_pairs(&self) -> Vec<(WahlPair, WahlPair)> {
        self.steps
            .iter()
            .map(|s| (s.first().canonical(), s.second().canonical()))
            .collect()
    }
}

/// The initial flipping neighborhood attached to a linear chain whose last
/// entry is at least 3: evaluate the chain with its last entry lowered by
/// one to (n,a) and form the pair ((1,1),(n,n-a)), which has delta = n - a.
pub fn usual_initial(gamma: &CFrac) -> Result<ExtremalNbhd> {
    let entries = gamma.entries();
    let last = entries.last().expect("chains are nonempty");
    if *last < BigInt::from(3) {
        return Err(Error::NoUsualInitial);
    }
    let mut lowered = entries.to_vec();
    *lowered.last_mut().unwrap() -= 1;
    let na = CFrac::new(lowered)?.value();
    let (n, a) = (na.num().clone(), na.den().clone());
    let w2 = WahlPair::new(n.clone(), n - a)
        .map_err(|e| Error::Internal(format!("usual initial pair of {gamma} invalid: {e}")))?;
    let nbhd = ExtremalNbhd::initial(WahlPair::smooth(), w2)?;
    debug_assert_eq!(nbhd.classify()?, Kind::Flipping);
    Ok(nbhd)
}

/// Iterates single flip steps from the Wahl datum of `usual_initial(gamma)`
/// down to the smooth state. The emitted curve values, read in order,
/// reproduce `gamma` exactly.
pub fn usual_flip_sequence(gamma: &CFrac) -> Result<Vec<(BigInt, WahlPair)>> {
    let initial = usual_initial(gamma)?;
    let mut w = initial.w2().clone();
    let mut out = Vec::new();
    loop {
        let (c, next) = usual_flip_step(&w)?;
        let done = next.is_smooth();
        out.push((c, next.clone()));
        if done {
            return Ok(out);
        }
        w = next.conjugate();
    }
}

fn empty_report(target: Target, reason: String) -> EmbeddingReport {
    EmbeddingReport {
        target,
        delta: None,
        infinite: false,
        simplicity: Simplicity::None,
        steps: Vec::new(),
        reason: Some(reason),
    }
}

/// Enumerates up to `k` disjoint ball pairs embedded in the neighborhood of
/// the linear chain `gamma`: the Mori sequence of its usual initial
/// neighborhood. Chains ending in 2 admit no such neighborhood and yield an
/// empty report carrying the reason.
pub fn embed_linear(gamma: &CFrac, k: usize) -> Result<EmbeddingReport> {
    let target = Target::ChainNbhd(gamma.clone());
    let last = gamma.entries().last().expect("chains are nonempty");
    if *last < BigInt::from(3) {
        let two = BigInt::from(2);
        let reason = if gamma.entries().iter().all(|e| *e == two) {
            "every entry is 2: a chain of (-2)-curves admits no extremal \
             P-resolution, so it bounds no embedded rational homology ball pairs"
                .to_string()
        } else {
            "the last entry is 2, so the chain has no usual initial flipping \
             neighborhood"
                .to_string()
        };
        return Ok(empty_report(target, reason));
    }
    let initial = usual_initial(gamma)?;
    let delta = initial.delta().clone();
    let steps = initial.mori_sequence(k)?;
    Ok(EmbeddingReport {
        target,
        infinite: delta > BigInt::one(),
        delta: Some(delta),
        simplicity: Simplicity::Simple,
        steps,
        reason: None,
    })
}

/// Enumerates up to `k` disjoint ball pairs embedded in the one-point
/// blow-up of B(n,a): the Mori sequence of the divisorial neighborhood with
/// pairs (n,a) and (n^2, n^2 - (na-1)), whose delta is n.
pub fn embed_blowup(w: &WahlPair, k: usize) -> Result<EmbeddingReport> {
    if w.is_smooth() {
        return Err(Error::SmoothPair);
    }
    let (n, a) = (w.m(), w.a());
    let m2 = n * n;
    let a2 = &m2 - (n * a - 1);
    let w2 = WahlPair::new(m2, a2)
        .map_err(|e| Error::Internal(format!("blow-up companion pair of {w} invalid: {e}")))?;
    let initial = ExtremalNbhd::initial(w.clone(), w2)?;
    if initial.classify()? != Kind::Divisorial || initial.delta() != n {
        return Err(Error::Internal(format!(
            "blow-up neighborhood of {w} is not divisorial with delta = {n}"
        )));
    }
    let steps = initial.mori_sequence(k)?;
    Ok(EmbeddingReport {
        target: Target::BlownUpBall(w.clone()),
        delta: Some(initial.delta().clone()),
        infinite: true,
        simplicity: Simplicity::SimpleAfterFirst,
        steps,
        reason: None,
    })
}

/// Enumerates up to `k` disjoint ball pairs embedded in the Milnor fiber
/// attached to an extremal P-resolution with exactly one singular side: one
/// report per initial neighborhood over the P-resolution (one or two
/// families).
pub fn embed_milnor(p: &PResolution, k: usize) -> Result<Vec<EmbeddingReport>> {
    match (p.left().is_smooth(), p.right().is_smooth()) {
        (false, false) => return Err(Error::TwoSingularSides),
        (true, true) => return Err(Error::NoWahlSide),
        _ => {}
    }
    let q_type = p.target()?;
    let mut reports = Vec::new();
    for family in p.initial_neighborhoods()? {
        let steps = family.mori_sequence(k)?;
        reports.push(EmbeddingReport {
            target: Target::MilnorFiber {
                presolution: p.clone(),
                q_type: q_type.clone(),
            },
            delta: Some(p.delta().clone()),
            infinite: p.delta() > &BigInt::one(),
            simplicity: Simplicity::NonSimple,
            steps,
            reason: None,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(entries: &[i64]) -> CFrac {
        CFrac::from_ints(entries).unwrap()
    }

    fn pair(m: i64, a: i64) -> WahlPair {
        WahlPair::new(m, a).unwrap()
    }

    fn canonical_as_ints(report: &EmbeddingReport) -> Vec<((i64, i64), (i64, i64))> {
        report
            .canonical_pairs()
            .iter()
            .map(|(x, y)| {
                (
                    (i64::try_from(x.m()).unwrap(), i64::try_from(x.a()).unwrap()),
                    (i64::try_from(y.m()).unwrap(), i64::try_from(y.a()).unwrap()),
                )
            })
            .collect()
    }

    #[test]
    fn usual_initial_examples() {
        let e = usual_initial(&gamma(&[3, 3])).unwrap();
        assert_eq!((e.w1(), e.w2()), (&WahlPair::smooth(), &pair(5, 3)));
        assert_eq!(e.delta(), &BigInt::from(3));

        let e = usual_initial(&gamma(&[4])).unwrap();
        assert_eq!(e.w2(), &pair(3, 2));
        assert_eq!(e.delta(), &BigInt::from(2));

        let e = usual_initial(&gamma(&[2, 2, 3])).unwrap();
        assert_eq!(e.w2(), &pair(4, 1));
        assert_eq!(e.delta(), &BigInt::one());

        assert_eq!(usual_initial(&gamma(&[3, 2])), Err(Error::NoUsualInitial));
        assert_eq!(usual_initial(&gamma(&[2, 2])), Err(Error::NoUsualInitial));
    }

    #[test]
    fn usual_flip_sequence_examples() {
        let seq = usual_flip_sequence(&gamma(&[3, 3])).unwrap();
        assert_eq!(seq.len(), 2);
        assert_eq!((&seq[0].0, &seq[0].1), (&BigInt::from(3), &pair(2, 1)));
        assert_eq!(seq[1].0, BigInt::from(3));
        assert!(seq[1].1.is_smooth());

        let seq = usual_flip_sequence(&gamma(&[4])).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(seq[0].0, BigInt::from(4));
        assert!(seq[0].1.is_smooth());

        let seq = usual_flip_sequence(&gamma(&[3, 4])).unwrap();
        assert_eq!((&seq[0].0, &seq[0].1), (&BigInt::from(3), &pair(3, 1)));
        assert_eq!(seq[1].0, BigInt::from(4));
        assert!(seq[1].1.is_smooth());

        let seq = usual_flip_sequence(&gamma(&[2, 2, 3])).unwrap();
        assert_eq!((&seq[0].0, &seq[0].1), (&BigInt::from(2), &pair(3, 2)));
        assert_eq!((&seq[1].0, &seq[1].1), (&BigInt::from(2), &pair(2, 1)));
        assert_eq!(seq[2].0, BigInt::from(3));
        assert!(seq[2].1.is_smooth());
    }

    #[test]
    fn flip_sequence_curves_reconstruct_the_chain() {
        // Exhaustive over entries in [2,5], length <= 3, last entry >= 3;
        // the length-4 layer runs in the full acceptance suite.
        let mut cases = 0;
        for len in 1..=3usize {
            let mut idx = vec![2i64; len];
            loop {
                if *idx.last().unwrap() >= 3 {
                    cases += 1;
                    let g = gamma(&idx);
                    let cs: Vec<BigInt> = usual_flip_sequence(&g)
                        .unwrap()
                        .into_iter()
                        .map(|(c, _)| c)
                        .collect();
                    assert_eq!(cs, g.entries().to_vec(), "gamma {g}");
                }
                let mut k = 0;
                loop {
                    if k == len {
                        break;
                    }
                    idx[k] += 1;
                    if idx[k] <= 5 {
                        break;
                    }
                    idx[k] = 2;
                    k += 1;
                }
                if k == len {
                    break;
                }
            }
        }
        assert_eq!(cases, 3 + 12 + 48);
    }

    #[test]
    fn embed_linear_minus_four_chain() {
        let report = embed_linear(&gamma(&[4]), 3).unwrap();
        assert_eq!(report.target(), &Target::ChainNbhd(gamma(&[4])));
        assert_eq!(report.delta(), Some(&BigInt::from(2)));
        assert!(report.is_infinite());
        assert_eq!(report.simplicity(), Simplicity::Simple);
        assert_eq!(
            canonical_as_ints(&report),
            vec![((1, 1), (3, 1)), ((3, 1), (5, 1)), ((5, 1), (7, 1)),]
        );
        assert_eq!(report.steps()[0].display().unwrap(), "[5,2]-\u{2205}");
    }

    #[test]
    fn embed_linear_first_ball_for_single_entry_chains() {
        for n in 4i64..=10 {
            let report = embed_linear(&gamma(&[n]), 1).unwrap();
            let pairs = canonical_as_ints(&report);
            assert_eq!(pairs, vec![((1, 1), (n - 1, 1))], "chain [{n}]");
        }
    }

    #[test]
    fn embed_linear_finite_family() {
        let report = embed_linear(&gamma(&[2, 2, 3]), 10).unwrap();
        assert_eq!(report.steps().len(), 2);
        assert!(report.is_finite());
        assert_eq!(report.delta(), Some(&BigInt::one()));
        assert_eq!(
            canonical_as_ints(&report),
            vec![((1, 1), (4, 1)), ((4, 1), (3, 1))]
        );
    }

    #[test]
    fn embed_linear_empty_reports() {
        for j in 1..=6usize {
            let report = embed_linear(&gamma(&vec![2i64; j]), 4).unwrap();
            assert!(report.is_empty(), "[2]*{j}");
            assert!(report.reason().unwrap().contains("(-2)-curves"));
            assert_eq!(report.simplicity(), Simplicity::None);
            assert_eq!(report.delta(), None);
            assert!(report.is_finite());
        }
        let report = embed_linear(&gamma(&[3, 2]), 4).unwrap();
        assert!(report.is_empty());
        assert!(report.reason().unwrap().contains("last entry is 2"));
    }

    #[test]
    fn embed_blowup_examples() {
        let report = embed_blowup(&pair(2, 1), 3).unwrap();
        assert_eq!(report.target(), &Target::BlownUpBall(pair(2, 1)));
        assert_eq!(report.delta(), Some(&BigInt::from(2)));
        assert!(report.is_infinite());
        assert_eq!(report.simplicity(), Simplicity::SimpleAfterFirst);
        assert_eq!(
            canonical_as_ints(&report),
            vec![((2, 1), (4, 1)), ((4, 1), (6, 1)), ((6, 1), (8, 1)),]
        );
        assert_eq!(report.steps()[0].display().unwrap(), "[6,2,2]-[4]");

        let report = embed_blowup(&pair(3, 1), 1).unwrap();
        assert_eq!(canonical_as_ints(&report), vec![((3, 1), (9, 2))]);
        // The raw second pair is (n^2, n^2 - (na - 1)).
        assert_eq!(report.steps()[0].second(), &pair(9, 7));

        assert_eq!(embed_blowup(&WahlPair::smooth(), 1), Err(Error::SmoothPair));
    }

    #[test]
    fn embed_blowup_general_first_step() {
        for n in 2i64..=12 {
            for a in 1..n {
                if num_integer::gcd(n, a) != 1 {
                    continue;
                }
                let report = embed_blowup(&pair(n, a), 1).unwrap();
                assert_eq!(report.delta().unwrap(), &BigInt::from(n));
                let s = &report.steps()[0];
                assert_eq!(s.first(), &pair(n, a));
                assert_eq!(s.second(), &pair(n * n, n * n - (n * a - 1)));
            }
        }
    }

    #[test]
    fn embed_milnor_two_families() {
        let p = PResolution::new(pair(2, 1), WahlPair::smooth(), 3).unwrap();
        let reports = embed_milnor(&p, 2).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(
                r.target(),
                &Target::MilnorFiber {
                    presolution: p.clone(),
                    q_type: Fraction::new(11, 3).unwrap(),
                }
            );
            assert_eq!(r.simplicity(), Simplicity::NonSimple);
            assert!(r.is_infinite());
            assert_eq!(r.delta(), Some(&BigInt::from(3)));
        }
        assert_eq!(
            canonical_as_ints(&reports[0]),
            vec![((1, 1), (5, 2)), ((5, 2), (14, 5))]
        );
        assert_eq!(
            canonical_as_ints(&reports[1]),
            vec![((2, 1), (7, 2)), ((7, 2), (19, 5))]
        );
    }

    #[test]
    fn embed_milnor_finite_presolution() {
        let p = PResolution::new(pair(3, 2), WahlPair::smooth(), 2).unwrap();
        let reports = embed_milnor(&p, 5).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.steps().len(), 2);
            assert!(r.is_finite());
        }
        match reports[0].target() {
            Target::MilnorFiber { q_type, .. } => {
                assert_eq!(q_type, &Fraction::new(13, 3).unwrap());
            }
            other => panic!("unexpected target {other:?}"),
        }
    }

    #[test]
    fn embed_milnor_side_requirements() {
        let two_sided = PResolution::new(pair(2, 1), pair(2, 1), 3).unwrap();
        assert_eq!(embed_milnor(&two_sided, 1), Err(Error::TwoSingularSides));
        let bare = PResolution::new(WahlPair::smooth(), WahlPair::smooth(), 4).unwrap();
        assert_eq!(embed_milnor(&bare, 1), Err(Error::NoWahlSide));
    }

    #[test]
    fn report_steps_chain_together() {
        for report in [
            embed_linear(&gamma(&[4]), 6).unwrap(),
            embed_linear(&gamma(&[3, 3]), 6).unwrap(),
            embed_blowup(&pair(2, 1), 6).unwrap(),
            embed_blowup(&pair(5, 2), 6).unwrap(),
        ] {
            for win in report.steps().windows(2) {
                assert_eq!(win[0].second().conjugate(), *win[1].first());
            }
        }
    }

    #[test]
    fn target_and_labels_display() {
        assert_eq!(
            Target::ChainNbhd(gamma(&[2, 2, 3])).to_string(),
            "chain [2,2,3]"
        );
        assert_eq!(
            Target::BlownUpBall(pair(2, 1)).to_string(),
            "B(2,1) # blowup"
        );
        let p = PResolution::new(pair(2, 1), WahlPair::smooth(), 3).unwrap();
        let t = Target::MilnorFiber {
            presolution: p.clone(),
            q_type: p.target().unwrap(),
        };
        assert_eq!(
            t.to_string(),
            "Milnor fiber of [4]-3-\u{2205} (q-type (11,3))"
        );
        assert_eq!(Simplicity::SimpleAfterFirst.label(), "simple-for-i>1");
    }
}
