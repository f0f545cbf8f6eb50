//! Finite frames: bounded distributive lattices with all operation tables
//! precomputed.
//!
//! At this scale a frame is exactly a bounded distributive lattice, and the
//! Heyting implication always exists; `validate_frame` materializes the meet,
//! join and implication tables once so every later operation is a lookup.

use std::fmt;

use thiserror::Error;

use crate::poset::{Elem, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("elements `{x}` and `{y}` have no {which}")]
    NotALattice { x: String, y: String, which: BoundKind },
    #[error("distributivity fails at ({x}, {y}, {z}): {x} ∧ ({y} ∨ {z}) ≠ ({x} ∧ {y}) ∨ ({x} ∧ {z})")]
    NotDistributive { x: String, y: String, z: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "greatest lower bound"),
            BoundKind::Join => write!(f, "least upper bound"),
        }
    }
}

/// A finite frame. Equality compares the underlying poset only; the tables
/// are derived data.
#[derive(Debug, Clone)]
pub struct FiniteFrame {
    poset: Poset,
    bottom: Elem,
    top: Elem,
    meet_table: Vec<Vec<Elem>>,
    join_table: Vec<Vec<Elem>>,
    impl_table: Vec<Vec<Elem>>,
}

impl PartialEq for FiniteFrame {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for FiniteFrame {}

/// Check that `p` is a bounded distributive lattice and precompute all tables.
///
/// Rejections carry the first witness found: a pair without a unique
/// meet/join, or a triple violating distributivity.
pub fn validate_frame(p: Poset) -> Result<FiniteFrame, FrameError> {
    let n = p.len();
    let mut meet_table = vec![vec![Elem(0); n]; n];
    let mut join_table = vec![vec![Elem(0); n]; n];

    for x in p.elems() {
        for y in p.elems() {
            meet_table[x.index()][y.index()] =
                bound(&p, x, y, BoundKind::Meet).ok_or_else(|| FrameError::NotALattice {
                    x: p.id(x).to_string(),
                    y: p.id(y).to_string(),
                    which: BoundKind::Meet,
                })?;
            join_table[x.index()][y.index()] =
                bound(&p, x, y, BoundKind::Join).ok_or_else(|| FrameError::NotALattice {
                    x: p.id(x).to_string(),
                    y: p.id(y).to_string(),
                    which: BoundKind::Join,
                })?;
        }
    }

    let bottom = p
        .elems()
        .reduce(|a, b| meet_table[a.index()][b.index()])
        .expect("poset is nonempty");
    let top = p
        .elems()
        .reduce(|a, b| join_table[a.index()][b.index()])
        .expect("poset is nonempty");

    // full triple scan; fine at desk scale
    for x in p.elems() {
        for y in p.elems() {
            for z in p.elems() {
                let lhs = meet_table[x.index()][join_table[y.index()][z.index()].index()];
                let rhs = join_table[meet_table[x.index()][y.index()].index()]
                    [meet_table[x.index()][z.index()].index()];
                if lhs != rhs {
                    return Err(FrameError::NotDistributive {
                        x: p.id(x).to_string(),
                        y: p.id(y).to_string(),
                        z: p.id(z).to_string(),
                    });
                }
            }
        }
    }

    // u ⇒ y is the join of every z with z ∧ u <= y; distributivity makes the
    // join itself satisfy the bound, so this is the Heyting implication.
    let mut impl_table = vec![vec![Elem(0); n]; n];
    for u in p.elems() {
        for y in p.elems() {
            let best = p
                .elems()
                .filter(|&z| p.leq(meet_table[z.index()][u.index()], y))
                .reduce(|a, b| join_table[a.index()][b.index()])
                .expect("bottom always satisfies z ∧ u <= y");
            impl_table[u.index()][y.index()] = best;
        }
    }

    Ok(FiniteFrame {
        poset: p,
        bottom,
        top,
        meet_table,
        join_table,
        impl_table,
    })
}

fn bound(p: &Poset, x: Elem, y: Elem, which: BoundKind) -> Option<Elem> {
    let cmp = |a: Elem, b: Elem| match which {
        BoundKind::Meet => p.leq(a, b),
        BoundKind::Join => p.leq(b, a),
    };
    let candidates: Vec<Elem> = p.elems().filter(|&z| cmp(z, x) && cmp(z, y)).collect();
    candidates
        .iter()
        .copied()
        .find(|&m| candidates.iter().all(|&w| cmp(w, m)))
}

impl FiniteFrame {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + '_ {
        self.poset.elems()
    }

    pub fn elem(&self, id: &str) -> Option<Elem> {
        self.poset.elem(id)
    }

    /// Like [`elem`](Self::elem) but with a reportable error.
    pub fn require(&self, id: &str) -> Result<Elem, FrameError> {
        self.elem(id)
            .ok_or_else(|| FrameError::UnknownElement(id.to_string()))
    }

    pub fn id(&self, e: Elem) -> &str {
        self.poset.id(e)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet_table[a.index()][b.index()]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join_table[a.index()][b.index()]
    }

    /// Heyting implication: the largest `z` with `z ∧ u <= y`.
    pub fn heyting(&self, u: Elem, y: Elem) -> Elem {
        self.impl_table[u.index()][y.index()]
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    /// The frame on `{x : x <= u}`, with `u` as top. Ids are shared with
    /// `self`, so the inclusion is the identity on ids.
    pub fn down_set(&self, u: Elem) -> FiniteFrame {
        let keep: Vec<Elem> = self.elems().filter(|&x| self.leq(x, u)).collect();
        validate_frame(self.poset.restrict(&keep))
            .expect("down-set of a frame is a frame")
    }

    /// The frame on `{x : u <= x}`, with `u` as bottom. Dual of [`down_set`](Self::down_set).
    pub fn up_set(&self, u: Elem) -> FiniteFrame {
        let keep: Vec<Elem> = self.elems().filter(|&x| self.leq(u, x)).collect();
        validate_frame(self.poset.restrict(&keep))
            .expect("up-set of a frame is a frame")
    }

    /// Componentwise product. Element ids are the pair strings `(a,b)` in
    /// left-major order, matching the glueing carrier convention.
    pub fn product(&self, other: &FiniteFrame) -> FiniteFrame {
        let mut ids = Vec::with_capacity(self.len() * other.len());
        for a in self.elems() {
            for b in other.elems() {
                ids.push(pair_id(self.id(a), other.id(b)));
            }
        }
        let pairs: Vec<(Elem, Elem)> = self
            .elems()
            .flat_map(|a| other.elems().map(move |b| (a, b)))
            .collect();
        let leq: Vec<Vec<bool>> = pairs
            .iter()
            .map(|&(a, b)| {
                pairs
                    .iter()
                    .map(|&(c, d)| self.leq(a, c) && other.leq(b, d))
                    .collect()
            })
            .collect();
        let poset = Poset::new(ids, leq).expect("product order is a poset");
        validate_frame(poset).expect("product of frames is a frame")
    }
}

/// Id of a pair element in products and glueing carriers.
pub fn pair_id(a: &str, b: &str) -> String {
    format!("({},{})", a, b)
}
