//! Forbidden-substructure patterns and exact detectors.
//!
//! All detectors work on [`BitGraph`] (at most 64 vertices). The
//! `PlaneGraph` entry points convert and run without a budget; the
//! `*_within` variants take an explicit [`Budget`].

mod bitgraph;
pub mod detect;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use bitgraph::{bits, low_mask, BitGraph, MAX_BIT_VERTICES};

use crate::budget::{Budget, BudgetExceeded};
use crate::embed::PlaneGraph;

/// A forbidden pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// The cycle `C_k`.
    ExactCycle(usize),
    /// `θ_k`: a `k`-cycle with a chord between vertices at distance 2.
    Theta(usize),
    /// A `k`-cycle with a chord between vertices at distance `d`.
    ThetaMember(usize, usize),
    /// "Circumference less than `k`": matches when every cycle is shorter than `k`.
    CircumferenceLess(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unrecognized pattern `{0}` (expected c<k>, theta<k>, theta<k>.<d> or circ<k>)")]
    Syntax(String),
    #[error("cycle length {k} out of range (need at least {min})")]
    LengthOutOfRange { k: usize, min: usize },
    #[error("chord distance {d} out of range for k={k} (need 2 <= d <= k/2)")]
    DistanceOutOfRange { k: usize, d: usize },
}

impl Pattern {
    /// Builds `ThetaMember(k, d)`, normalizing `d = 2` to `Theta(k)`.
    pub fn theta_member(k: usize, d: usize) -> Result<Pattern, PatternError> {
        let p = if d == 2 { Pattern::Theta(k) } else { Pattern::ThetaMember(k, d) };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), PatternError> {
        let (k, min) = match *self {
            Pattern::ExactCycle(k) | Pattern::CircumferenceLess(k) => (k, 3),
            Pattern::Theta(k) => (k, 4),
            Pattern::ThetaMember(k, d) => {
                if k >= 4 && !(2..=k / 2).contains(&d) {
                    return Err(PatternError::DistanceOutOfRange { k, d });
                }
                (k, 4)
            }
        };
        if k < min {
            return Err(PatternError::LengthOutOfRange { k, min });
        }
        Ok(())
    }

    /// Equal patterns up to the `ThetaMember(k, 2) = Theta(k)` identification.
    pub fn normalized(self) -> Pattern {
        match self {
            Pattern::ThetaMember(k, 2) => Pattern::Theta(k),
            p => p,
        }
    }

    pub fn k(&self) -> usize {
        match *self {
            Pattern::ExactCycle(k)
            | Pattern::Theta(k)
            | Pattern::ThetaMember(k, _)
            | Pattern::CircumferenceLess(k) => k,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.normalized() {
            Pattern::ExactCycle(k) => write!(f, "c{k}"),
            Pattern::Theta(k) => write!(f, "theta{k}"),
            Pattern::ThetaMember(k, d) => write!(f, "theta{k}.{d}"),
            Pattern::CircumferenceLess(k) => write!(f, "circ{k}"),
        }
    }
}

fn number(s: &str, whole: &str) -> Result<usize, PatternError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return Err(PatternError::Syntax(whole.to_string()));
    }
    s.parse().map_err(|_| PatternError::Syntax(whole.to_string()))
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p = if let Some(rest) = s.strip_prefix("theta") {
            match rest.split_once('.') {
                Some((k, d)) => return Pattern::theta_member(number(k, s)?, number(d, s)?),
                None => Pattern::Theta(number(rest, s)?),
            }
        } else if let Some(rest) = s.strip_prefix("circ") {
            Pattern::CircumferenceLess(number(rest, s)?)
        } else if let Some(rest) = s.strip_prefix('c') {
            Pattern::ExactCycle(number(rest, s)?)
        } else {
            return Err(PatternError::Syntax(s.to_string()));
        };
        p.validate()?;
        Ok(p)
    }
}

/// A `k`-cycle plus one chord.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaWitness {
    pub cycle: Vec<usize>,
    pub chord: (usize, usize),
}

impl ThetaWitness {
    /// Cycle distance between the chord endpoints.
    pub fn distance(&self) -> Option<usize> {
        let k = self.cycle.len();
        let i = self.cycle.iter().position(|&v| v == self.chord.0)?;
        let j = self.cycle.iter().position(|&v| v == self.chord.1)?;
        let d = i.abs_diff(j);
        Some(d.min(k - d))
    }

    /// Checks the witness against `g` for chord distance `d`.
    pub fn is_valid_in(&self, g: &BitGraph, d: usize) -> bool {
        is_cycle_in(g, &self.cycle)
            && self.chord.0 != self.chord.1
            && self.chord.0 < g.n()
            && self.chord.1 < g.n()
            && g.has_edge(self.chord.0, self.chord.1)
            && self.distance() == Some(d)
    }
}

/// True when `c` is a simple cycle (length ≥ 3) of `g`.
pub fn is_cycle_in(g: &BitGraph, c: &[usize]) -> bool {
    let k = c.len();
    if k < 3 || c.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = 0u64;
    for &v in c {
        if seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..k).all(|i| g.has_edge(c[i], c[(i + 1) % k]))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("graph has no cycle")]
    Acyclic,
    #[error("graph has {n} vertices; detectors support at most 64")]
    TooLarge { n: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Witness attached to a [`Match`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Cycle(Vec<usize>),
    Theta(ThetaWitness),
}

/// Result of [`matches`]. For `CircumferenceLess(k)` the witness, when
/// present, is a cycle of length at least `k` refuting the match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub present: bool,
    pub witness: Option<Witness>,
}

fn bit(g: &PlaneGraph) -> Result<BitGraph, DetectError> {
    BitGraph::from_plane(g).ok_or(DetectError::TooLarge { n: g.n() })
}

pub fn has_cycle_of_length(g: &PlaneGraph, k: usize) -> Result<Option<Vec<usize>>, DetectError> {
    assert!(k >= 3, "cycle length must be at least 3");
    Ok(detect::cycle_of_length(&bit(g)?, k, &mut Budget::unlimited())?)
}

pub fn has_theta(g: &PlaneGraph, k: usize, d: usize) -> Result<Option<ThetaWitness>, DetectError> {
    assert!(k >= 4 && (2..=k / 2).contains(&d), "theta parameters out of range");
    Ok(detect::theta(&bit(g)?, k, d, &mut Budget::unlimited())?)
}

/// Exact circumference with a longest cycle.
pub fn circumference(g: &PlaneGraph) -> Result<(usize, Vec<usize>), DetectError> {
    circumference_within(&bit(g)?, &mut Budget::unlimited())
}

pub fn circumference_within(g: &BitGraph, budget: &mut Budget) -> Result<(usize, Vec<usize>), DetectError> {
    let c = detect::longest_cycle(g, budget)?.ok_or(DetectError::Acyclic)?;
    Ok((c.len(), c))
}

pub fn girth(g: &PlaneGraph) -> Result<usize, DetectError> {
    detect::girth(&bit(g)?).ok_or(DetectError::Acyclic)
}

pub fn matches(g: &PlaneGraph, p: Pattern) -> Result<Match, DetectError> {
    matches_within(&bit(g)?, p, &mut Budget::unlimited())
}

pub fn matches_within(g: &BitGraph, p: Pattern, budget: &mut Budget) -> Result<Match, DetectError> {
    assert!(p.validate().is_ok(), "invalid pattern {p:?}");
    let m = match p.normalized() {
        Pattern::ExactCycle(k) => {
            let w = detect::cycle_of_length(g, k, budget)?;
            Match { present: w.is_some(), witness: w.map(Witness::Cycle) }
        }
        Pattern::Theta(k) => {
            let w = detect::theta(g, k, 2, budget)?;
            Match { present: w.is_some(), witness: w.map(Witness::Theta) }
        }
        Pattern::ThetaMember(k, d) => {
            let w = detect::theta(g, k, d, budget)?;
            Match { present: w.is_some(), witness: w.map(Witness::Theta) }
        }
        Pattern::CircumferenceLess(k) => {
            let w = detect::cycle_at_least(g, k, budget)?;
            Match { present: w.is_none(), witness: w.map(Witness::Cycle) }
        }
    };
    Ok(m)
}

#[cfg(test)]
pub(crate) mod oracle;

#[cfg(test)]
mod tests {
    use super::oracle;
    use super::*;
    use proptest::prelude::*;

    fn k4() -> BitGraph {
        BitGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn cube() -> BitGraph {
        let mut e = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                let w = v ^ (1 << b);
                if v < w {
                    e.push((v, w));
                }
            }
        }
        BitGraph::from_edges(8, &e)
    }

    fn cycle(n: usize) -> BitGraph {
        BitGraph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn u() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn pattern_syntax() {
        assert_eq!("c5".parse::<Pattern>(), Ok(Pattern::ExactCycle(5)));
        assert_eq!("theta7".parse::<Pattern>(), Ok(Pattern::Theta(7)));
        assert_eq!("theta12.6".parse::<Pattern>(), Ok(Pattern::ThetaMember(12, 6)));
        assert_eq!("theta12.2".parse::<Pattern>(), Ok(Pattern::Theta(12)));
        assert_eq!("circ6".parse::<Pattern>(), Ok(Pattern::CircumferenceLess(6)));
        for bad in ["", "c", "c2", "theta3", "theta8.5", "theta8.1", "c05", "x4", "circ-1", "theta8."] {
            assert!(bad.parse::<Pattern>().is_err(), "{bad}");
        }
        for s in ["c3", "theta4", "theta9.3", "circ5"] {
            assert_eq!(s.parse::<Pattern>().unwrap().to_string(), s);
        }
        assert_eq!(Pattern::ThetaMember(6, 2).to_string(), "theta6");
    }

    #[test]
    fn trivial_examples() {
        assert!(detect::cycle_of_length(&k4(), 4, &mut u()).unwrap().is_some());
        assert!(detect::cycle_of_length(&cube(), 5, &mut u()).unwrap().is_none());
        let w = detect::theta(&k4(), 4, 2, &mut u()).unwrap().unwrap();
        assert!(w.is_valid_in(&k4(), 2));
        assert_eq!(detect::longest_cycle(&k4(), &mut u()).unwrap().unwrap().len(), 4);
        assert_eq!(detect::longest_cycle(&cube(), &mut u()).unwrap().unwrap().len(), 8);
        assert_eq!(detect::girth(&k4()), Some(3));
        assert_eq!(detect::girth(&cube()), Some(4));
        assert_eq!(detect::girth(&cycle(9)), Some(9));
        let path = BitGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(detect::girth(&path), None);
        assert_eq!(circumference_within(&path, &mut u()), Err(DetectError::Acyclic));
    }

    #[test]
    fn matches_dispatch() {
        let m = matches_within(&k4(), Pattern::ExactCycle(3), &mut u()).unwrap();
        assert!(m.present);
        let m = matches_within(&cycle(5), Pattern::CircumferenceLess(6), &mut u()).unwrap();
        assert!(m.present && m.witness.is_none());
        let m = matches_within(&cycle(5), Pattern::CircumferenceLess(5), &mut u()).unwrap();
        assert!(!m.present);
        assert_eq!(m.witness, Some(Witness::Cycle(vec![0, 1, 2, 3, 4])));
    }

    #[test]
    fn lexicographic_first_witness() {
        let c = detect::cycle_of_length(&k4(), 3, &mut u()).unwrap().unwrap();
        assert_eq!(c, vec![0, 1, 2]);
        let c = detect::cycle_of_length(&k4(), 4, &mut u()).unwrap().unwrap();
        assert_eq!(c, vec![0, 1, 2, 3]);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let mut b = Budget::nodes(3);
        assert!(detect::longest_cycle(&cube(), &mut b).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = BitGraph> {
        (3..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = BitGraph::empty(n);
                let mut i = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[i] {
                            g.add_edge(a, b);
                        }
                        i += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn detectors_agree_with_oracle(g in arb_graph(7)) {
            let n = g.n();
            for k in 3..=n {
                let fast = detect::cycle_of_length(&g, k, &mut u()).unwrap();
                prop_assert_eq!(fast.is_some(), oracle::has_cycle(&g, k));
                if let Some(c) = fast {
                    prop_assert!(is_cycle_in(&g, &c) && c.len() == k);
                    prop_assert_eq!(Some(c), oracle::first_cycle(&g, k));
                }
                for d in 2..=k / 2 {
                    if k < 4 { continue; }
                    let fast = detect::theta(&g, k, d, &mut u()).unwrap();
                    prop_assert_eq!(fast.is_some(), oracle::has_theta(&g, k, d));
                    if let Some(w) = &fast {
                        prop_assert!(w.is_valid_in(&g, d));
                    }
                    if d == 2 && fast.is_some() {
                        prop_assert!(detect::cycle_of_length(&g, k, &mut u()).unwrap().is_some());
                    }
                }
            }
            let circ = detect::longest_cycle(&g, &mut u()).unwrap();
            prop_assert_eq!(circ.as_ref().map(|c| c.len()), oracle::circumference(&g));
            if let Some(c) = &circ {
                prop_assert!(is_cycle_in(&g, c));
            }
            prop_assert_eq!(detect::girth(&g), oracle::girth(&g));
            for k in 3..=n + 1 {
                let m = matches_within(&g, Pattern::CircumferenceLess(k), &mut u()).unwrap();
                let c = circ.as_ref().map_or(0, |c| c.len());
                prop_assert_eq!(m.present, c < k);
                if let Some(Witness::Cycle(w)) = m.witness {
                    prop_assert!(is_cycle_in(&g, &w) && w.len() >= k);
                }
            }
        }

        #[test]
        fn pattern_display_roundtrip(k in 3usize..40, d in 2usize..20, kind in 0u8..4) {
            let p = match kind {
                0 => Pattern::ExactCycle(k),
                1 => Pattern::Theta(k.max(4)),
                2 => Pattern::ThetaMember(k.max(2 * d).max(4), d),
                _ => Pattern::CircumferenceLess(k),
            };
            prop_assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p.normalized());
        }
    }
}
