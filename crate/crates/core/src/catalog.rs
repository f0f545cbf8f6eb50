//! Built-in test frames: chains, Boolean lattices, grids, and the two
//! classical non-distributive posets used as negative controls.

use std::sync::Arc;

use crate::frame::{validate_frame, FiniteFrame};
use crate::poset::Poset;

fn ids(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// The chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> FiniteFrame {
    assert!(n >= 1, "a frame needs at least one element");
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(String, String)> = (1..n)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    validate_frame(Poset::from_relation(labels, &pairs).unwrap()).unwrap()
}

/// The four-element Boolean lattice `{0, a, b, 1}`.
pub fn boolean_square() -> FiniteFrame {
    let p = Poset::from_relation(
        ids(&["0", "a", "b", "1"]),
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    .unwrap();
    validate_frame(p).unwrap()
}

/// The eight-element Boolean lattice on three atoms.
pub fn boolean_cube() -> FiniteFrame {
    let p = Poset::from_relation(
        ids(&["0", "a", "b", "c", "ab", "ac", "bc", "1"]),
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "ab"),
            ("a", "ac"),
            ("b", "ab"),
            ("b", "bc"),
            ("c", "ac"),
            ("c", "bc"),
            ("ab", "1"),
            ("ac", "1"),
            ("bc", "1"),
        ],
    )
    .unwrap();
    validate_frame(p).unwrap()
}

/// Product of two chains.
pub fn grid(rows: usize, cols: usize) -> FiniteFrame {
    chain(rows).product(&chain(cols))
}

/// The diamond M3: not distributive, every atom triple is a witness.
pub fn diamond_m3() -> Poset {
    Poset::from_relation(
        ids(&["0", "a", "b", "c", "1"]),
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    )
    .unwrap()
}

/// The pentagon N5: the other minimal non-distributive lattice.
pub fn pentagon_n5() -> Poset {
    Poset::from_relation(
        ids(&["0", "a", "b", "c", "1"]),
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .unwrap()
}

/// A named collection of frames to quantify oracles over, plus designated
/// negative posets that must be rejected by validation.
#[derive(Debug, Clone)]
pub struct Catalog {
    frames: Vec<(String, Arc<FiniteFrame>)>,
    negatives: Vec<(String, Poset)>,
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog {
            frames: Vec::new(),
            negatives: Vec::new(),
        }
    }

    /// Chains C1–C5, the Boolean square and cube, two grids, and the
    /// negative examples M3 and N5.
    pub fn builtin() -> Self {
        let mut cat = Catalog::empty();
        for n in 1..=5 {
            cat.insert(format!("C{n}"), chain(n));
        }
        cat.insert("B2".to_string(), boolean_square());
        cat.insert("B3".to_string(), boolean_cube());
        cat.insert("G2x3".to_string(), grid(2, 3));
        cat.insert("G3x3".to_string(), grid(3, 3));
        cat.negatives.push(("M3".to_string(), diamond_m3()));
        cat.negatives.push(("N5".to_string(), pentagon_n5()));
        cat
    }

    /// Register a frame, replacing any previous entry with the same name.
    pub fn insert(&mut self, name: String, frame: FiniteFrame) {
        self.frames.retain(|(n, _)| *n != name);
        self.frames.push((name, Arc::new(frame)));
    }

    pub fn get(&self, name: &str) -> Option<&Arc<FiniteFrame>> {
        self.frames.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn frames(&self) -> impl Iterator<Item = (&str, &Arc<FiniteFrame>)> {
        self.frames.iter().map(|(n, f)| (n.as_str(), f))
    }

    /// Frames with at most `max` elements, in insertion order.
    pub fn frames_up_to(&self, max: usize) -> Vec<(&str, &Arc<FiniteFrame>)> {
        self.frames()
            .filter(|(_, f)| f.len() <= max)
            .collect()
    }

    pub fn negatives(&self) -> impl Iterator<Item = (&str, &Poset)> {
        self.negatives.iter().map(|(n, p)| (n.as_str(), p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{validate_frame, FrameError};

    #[test]
    fn builtin_positives_validate_and_negatives_do_not() {
        let cat = Catalog::builtin();
        assert_eq!(cat.frames().count(), 9);
        for (name, frame) in cat.frames() {
            assert!(
                validate_frame(frame.poset().clone()).is_ok(),
                "catalog frame {name} failed validation"
            );
        }
        for (name, poset) in cat.negatives() {
            let err = validate_frame(poset.clone()).unwrap_err();
            assert!(
                matches!(err, FrameError::NotDistributive { .. }),
                "negative {name} rejected for the wrong reason: {err:?}"
            );
        }
    }

    #[test]
    fn sizes() {
        let cat = Catalog::builtin();
        assert_eq!(cat.get("C3").unwrap().len(), 3);
        assert_eq!(cat.get("B3").unwrap().len(), 8);
        assert_eq!(cat.get("G2x3").unwrap().len(), 6);
        assert_eq!(cat.frames_up_to(6).len(), 7);
    }
}
