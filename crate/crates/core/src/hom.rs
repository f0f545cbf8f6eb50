//! Finite-meet-preserving maps between frames, their meet-semilattice
//! enrichment, adjoints, exhaustive enumeration and isomorphism search.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::frame::FiniteFrame;
use crate::poset::Elem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("domain/codomain mismatch")]
    DomainMismatch,
    #[error("top not preserved: 1 ↦ `{image}`")]
    TopNotPreserved { image: String },
    #[error("meets not preserved at (`{x}`, `{y}`)")]
    MeetNotPreserved { x: String, y: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("no image given for element `{0}`")]
    MissingImage(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdjointError {
    #[error("adjunction law fails at ({x}, {y})")]
    NoAdjoint { x: String, y: String },
}

/// A finite-meet-preserving map between frames: preserves binary meets and
/// the empty meet (top). Joins and bottom need not be preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetHom {
    dom: Arc<FiniteFrame>,
    cod: Arc<FiniteFrame>,
    map: Vec<Elem>,
}

impl MeetHom {
    /// Check the two preservation laws and build the map; the error carries
    /// the first violation witness.
    pub fn validate(
        dom: Arc<FiniteFrame>,
        cod: Arc<FiniteFrame>,
        map: Vec<Elem>,
    ) -> Result<Self, HomError> {
        assert_eq!(map.len(), dom.len(), "image list has wrong length");
        if map[dom.top().index()] != cod.top() {
            return Err(HomError::TopNotPreserved {
                image: cod.id(map[dom.top().index()]).to_string(),
            });
        }
        for x in dom.elems() {
            for y in dom.elems() {
                let lhs = map[dom.meet(x, y).index()];
                let rhs = cod.meet(map[x.index()], map[y.index()]);
                if lhs != rhs {
                    return Err(HomError::MeetNotPreserved {
                        x: dom.id(x).to_string(),
                        y: dom.id(y).to_string(),
                    });
                }
            }
        }
        Ok(MeetHom { dom, cod, map })
    }

    pub fn from_fn(
        dom: Arc<FiniteFrame>,
        cod: Arc<FiniteFrame>,
        f: impl Fn(Elem) -> Elem,
    ) -> Result<Self, HomError> {
        let map = dom.elems().map(f).collect();
        Self::validate(dom, cod, map)
    }

    /// Build from id pairs, e.g. when loading a map file.
    pub fn from_ids<'a>(
        dom: Arc<FiniteFrame>,
        cod: Arc<FiniteFrame>,
        assignments: impl Fn(&str) -> Option<&'a str>,
    ) -> Result<Self, HomError> {
        let mut map = Vec::with_capacity(dom.len());
        for x in dom.elems() {
            let image = assignments(dom.id(x))
                .ok_or_else(|| HomError::MissingImage(dom.id(x).to_string()))?;
            map.push(
                cod.elem(image)
                    .ok_or_else(|| HomError::UnknownElement(image.to_string()))?,
            );
        }
        Self::validate(dom, cod, map)
    }

    pub fn identity(frame: &Arc<FiniteFrame>) -> Self {
        MeetHom {
            dom: frame.clone(),
            cod: frame.clone(),
            map: frame.elems().collect(),
        }
    }

    /// The constant-top map, the zero morphism of the category.
    pub fn top(dom: &Arc<FiniteFrame>, cod: &Arc<FiniteFrame>) -> Self {
        MeetHom {
            dom: dom.clone(),
            cod: cod.clone(),
            map: vec![cod.top(); dom.len()],
        }
    }

    pub fn dom(&self) -> &Arc<FiniteFrame> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteFrame> {
        &self.cod
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e.index()]
    }

    pub fn images(&self) -> &[Elem] {
        &self.map
    }

    pub fn is_top(&self) -> bool {
        self.map.iter().all(|&e| e == self.cod.top())
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.dom.elems().all(|x| self.apply(x) == x)
    }

    pub fn is_surjective(&self) -> bool {
        self.cod.elems().all(|y| self.map.contains(&y))
    }

    /// Whether arbitrary (finite) joins are preserved as well, i.e. whether
    /// this is a frame homomorphism.
    pub fn preserves_joins(&self) -> bool {
        if self.apply(self.dom.bottom()) != self.cod.bottom() {
            return false;
        }
        self.dom.elems().all(|x| {
            self.dom.elems().all(|y| {
                self.apply(self.dom.join(x, y)) == self.cod.join(self.apply(x), self.apply(y))
            })
        })
    }
}

impl fmt::Display for MeetHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.dom.elems().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}↦{}", self.dom.id(x), self.cod.id(self.apply(x)))?;
        }
        write!(f, "}}")
    }
}

/// Composite `g ∘ f`; fails unless `cod(f) = dom(g)`.
pub fn compose(g: &MeetHom, f: &MeetHom) -> Result<MeetHom, HomError> {
    if f.cod != g.dom {
        return Err(HomError::DomainMismatch);
    }
    Ok(MeetHom {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        map: f.map.iter().map(|&x| g.apply(x)).collect(),
    })
}

/// Pointwise meet `(f ∧ g)(x) = f(x) ∧ g(x)`; again a meet-preserving map.
pub fn pointwise_meet(f: &MeetHom, g: &MeetHom) -> Result<MeetHom, HomError> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(HomError::DomainMismatch);
    }
    Ok(MeetHom {
        dom: f.dom.clone(),
        cod: f.cod.clone(),
        map: f
            .map
            .iter()
            .zip(&g.map)
            .map(|(&a, &b)| f.cod.meet(a, b))
            .collect(),
    })
}

/// Pointwise order on parallel maps.
pub fn pointwise_leq(f: &MeetHom, g: &MeetHom) -> Result<bool, HomError> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(HomError::DomainMismatch);
    }
    Ok(f.map
        .iter()
        .zip(&g.map)
        .all(|(&a, &b)| f.cod.leq(a, b)))
}

/// Right adjoint of `f`, computed as `g(y) = ⋁{x : f(x) <= y}` and then
/// verified against the adjunction law.
pub fn right_adjoint(f: &MeetHom) -> Result<MeetHom, AdjointError> {
    let map: Vec<Elem> = f
        .cod
        .elems()
        .map(|y| {
            f.dom
                .join_all(f.dom.elems().filter(|&x| f.cod.leq(f.apply(x), y)))
        })
        .collect();
    for x in f.dom.elems() {
        for y in f.cod.elems() {
            if f.cod.leq(f.apply(x), y) != f.dom.leq(x, map[y.index()]) {
                return Err(AdjointError::NoAdjoint {
                    x: f.dom.id(x).to_string(),
                    y: f.cod.id(y).to_string(),
                });
            }
        }
    }
    MeetHom::validate(f.cod.clone(), f.dom.clone(), map).map_err(|_| AdjointError::NoAdjoint {
        x: f.dom.id(f.dom.top()).to_string(),
        y: f.cod.id(f.cod.top()).to_string(),
    })
}

/// A bare element map; used for left adjoints, which are monotone but not
/// meet-preserving in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    dom: Arc<FiniteFrame>,
    cod: Arc<FiniteFrame>,
    map: Vec<Elem>,
}

impl MonotoneMap {
    pub fn dom(&self) -> &Arc<FiniteFrame> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteFrame> {
        &self.cod
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[e.index()]
    }

    /// Upgrade to a [`MeetHom`] when the map does preserve finite meets.
    pub fn into_meet_hom(self) -> Result<MeetHom, HomError> {
        MeetHom::validate(self.dom, self.cod, self.map)
    }
}

/// Left adjoint of `f`, computed as `l(y) = ⋀{x : y <= f(x)}` and verified.
/// Returned raw: callers that expect meet preservation upgrade it explicitly.
pub fn left_adjoint(f: &MeetHom) -> Result<MonotoneMap, AdjointError> {
    let map: Vec<Elem> = f
        .cod
        .elems()
        .map(|y| {
            f.dom
                .meet_all(f.dom.elems().filter(|&x| f.cod.leq(y, f.apply(x))))
        })
        .collect();
    for y in f.cod.elems() {
        for x in f.dom.elems() {
            if f.dom.leq(map[y.index()], x) != f.cod.leq(y, f.apply(x)) {
                return Err(AdjointError::NoAdjoint {
                    x: f.dom.id(x).to_string(),
                    y: f.cod.id(y).to_string(),
                });
            }
        }
    }
    Ok(MonotoneMap {
        dom: f.cod.clone(),
        cod: f.dom.clone(),
        map,
    })
}

/// All finite-meet-preserving maps `dom → cod`, without duplicates, sorted
/// lexicographically by images in element order.
///
/// The search extends partial maps down a linear extension of `dom`. Working
/// top-down means that when an element is reached, every pair meeting to it
/// is already assigned, so the incremental monotonicity and meet checks are
/// complete and no post-validation pass is needed.
pub fn enumerate_meet_homs(dom: &Arc<FiniteFrame>, cod: &Arc<FiniteFrame>) -> Vec<MeetHom> {
    let order = descending_order(dom);
    let mut assigned: Vec<Option<Elem>> = vec![None; dom.len()];
    let mut maps: Vec<Vec<Elem>> = Vec::new();
    extend(dom, cod, &order, 0, &mut assigned, &mut maps);
    maps.sort();
    maps.into_iter()
        .map(|map| {
            debug_assert!(
                MeetHom::validate(dom.clone(), cod.clone(), map.clone()).is_ok(),
                "enumeration produced an invalid map"
            );
            MeetHom {
                dom: dom.clone(),
                cod: cod.clone(),
                map,
            }
        })
        .collect()
}

/// A linear extension of the dual order: every element appears after all
/// elements strictly above it. Ties broken by element index.
fn descending_order(frame: &FiniteFrame) -> Vec<Elem> {
    let n = frame.len();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = frame
            .elems()
            .find(|&x| {
                !placed[x.index()]
                    && frame
                        .elems()
                        .all(|y| y == x || !frame.leq(x, y) || placed[y.index()])
            })
            .expect("a finite poset always has a maximal unplaced element");
        placed[next.index()] = true;
        out.push(next);
    }
    out
}

fn extend(
    dom: &FiniteFrame,
    cod: &FiniteFrame,
    order: &[Elem],
    pos: usize,
    assigned: &mut Vec<Option<Elem>>,
    maps: &mut Vec<Vec<Elem>>,
) {
    if pos == order.len() {
        maps.push(assigned.iter().map(|v| v.unwrap()).collect());
        return;
    }
    let z = order[pos];
    let placed = &order[..pos];

    // monotonicity bound: image must lie below every assigned strict upper bound
    let ub = cod.meet_all(
        placed
            .iter()
            .filter(|&&y| dom.leq(z, y))
            .map(|&y| assigned[y.index()].unwrap()),
    );

    // pairs of assigned elements meeting exactly to z pin the image
    let mut pinned: Option<Elem> = None;
    for (i, &x) in placed.iter().enumerate() {
        for &y in &placed[i..] {
            if dom.meet(x, y) != z {
                continue;
            }
            let v = cod.meet(
                assigned[x.index()].unwrap(),
                assigned[y.index()].unwrap(),
            );
            match pinned {
                None => pinned = Some(v),
                Some(p) if p != v => return,
                _ => {}
            }
        }
    }

    let try_value = |c: Elem, assigned: &mut Vec<Option<Elem>>, maps: &mut Vec<Vec<Elem>>| {
        assigned[z.index()] = Some(c);
        extend(dom, cod, order, pos + 1, assigned, maps);
        assigned[z.index()] = None;
    };

    match pinned {
        Some(v) => {
            if cod.leq(v, ub) {
                try_value(v, assigned, maps);
            }
        }
        None if z == dom.top() => try_value(cod.top(), assigned, maps),
        None => {
            for c in cod.elems().filter(|&c| cod.leq(c, ub)) {
                try_value(c, assigned, maps);
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsoError {
    #[error("domain/codomain mismatch")]
    DomainMismatch,
    #[error("composite is not the identity at `{0}`")]
    NotInverse(String),
    #[error("joins not preserved at (`{x}`, `{y}`)")]
    JoinsNotPreserved { x: String, y: String },
}

/// An isomorphism of frames: a meet-preserving bijection whose inverse is
/// also meet-preserving, and which preserves joins (an order isomorphism).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameIso {
    forward: MeetHom,
    backward: MeetHom,
}

impl FrameIso {
    pub fn new(forward: MeetHom, backward: MeetHom) -> Result<Self, IsoError> {
        if forward.dom != backward.cod || forward.cod != backward.dom {
            return Err(IsoError::DomainMismatch);
        }
        for x in forward.dom.elems() {
            if backward.apply(forward.apply(x)) != x {
                return Err(IsoError::NotInverse(forward.dom.id(x).to_string()));
            }
        }
        for y in forward.cod.elems() {
            if forward.apply(backward.apply(y)) != y {
                return Err(IsoError::NotInverse(forward.cod.id(y).to_string()));
            }
        }
        for dir in [&forward, &backward] {
            for x in dir.dom.elems() {
                for y in dir.dom.elems() {
                    if dir.apply(dir.dom.join(x, y)) != dir.cod.join(dir.apply(x), dir.apply(y)) {
                        return Err(IsoError::JoinsNotPreserved {
                            x: dir.dom.id(x).to_string(),
                            y: dir.dom.id(y).to_string(),
                        });
                    }
                }
            }
        }
        Ok(FrameIso { forward, backward })
    }

    pub fn identity(frame: &Arc<FiniteFrame>) -> Self {
        FrameIso {
            forward: MeetHom::identity(frame),
            backward: MeetHom::identity(frame),
        }
    }

    pub fn forward(&self) -> &MeetHom {
        &self.forward
    }

    pub fn backward(&self) -> &MeetHom {
        &self.backward
    }
}

/// Search for a lattice isomorphism by backtracking over bijections, pruning
/// with per-element order invariants (height, down-set and up-set sizes).
pub fn find_frame_isomorphism(a: &FiniteFrame, b: &FiniteFrame) -> Option<FrameIso> {
    if a.len() != b.len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }

    let mut image: Vec<Option<Elem>> = vec![None; a.len()];
    let mut used = vec![false; b.len()];
    if !match_elems(a, b, &sig_a, &sig_b, 0, &mut image, &mut used) {
        return None;
    }
    let map: Vec<Elem> = image.into_iter().map(|v| v.unwrap()).collect();
    let mut inverse = vec![Elem(0); b.len()];
    for x in a.elems() {
        inverse[map[x.index()].index()] = x;
    }
    let fa = Arc::new(a.clone());
    let fb = Arc::new(b.clone());
    let forward =
        MeetHom::validate(fa.clone(), fb.clone(), map).expect("order iso preserves meets");
    let backward =
        MeetHom::validate(fb, fa, inverse).expect("order iso preserves meets");
    Some(FrameIso::new(forward, backward).expect("order iso is a frame iso"))
}

fn signatures(f: &FiniteFrame) -> Vec<(usize, usize, usize)> {
    let heights = f.poset().heights();
    f.elems()
        .map(|x| {
            let down = f.elems().filter(|&y| f.leq(y, x)).count();
            let up = f.elems().filter(|&y| f.leq(x, y)).count();
            (heights[x.index()], down, up)
        })
        .collect()
}

fn match_elems(
    a: &FiniteFrame,
    b: &FiniteFrame,
    sig_a: &[(usize, usize, usize)],
    sig_b: &[(usize, usize, usize)],
    pos: usize,
    image: &mut Vec<Option<Elem>>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == a.len() {
        return true;
    }
    let x = Elem(pos);
    for cand in b.elems() {
        if used[cand.index()] || sig_a[pos] != sig_b[cand.index()] {
            continue;
        }
        let consistent = (0..pos).all(|i| {
            let y = Elem(i);
            let u = image[i].unwrap();
            a.leq(x, y) == b.leq(cand, u) && a.leq(y, x) == b.leq(u, cand)
        });
        if !consistent {
            continue;
        }
        image[pos] = Some(cand);
        used[cand.index()] = true;
        if match_elems(a, b, sig_a, sig_b, pos + 1, image, used) {
            return true;
        }
        image[pos] = None;
        used[cand.index()] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_square, chain};

    #[test]
    fn validate_accepts_identity_and_top() {
        let f = Arc::new(boolean_square());
        let c3 = Arc::new(chain(3));
        assert!(MeetHom::from_fn(f.clone(), f.clone(), |x| x).is_ok());
        let top = MeetHom::top(&f, &c3);
        assert!(MeetHom::validate(f.clone(), c3.clone(), top.images().to_vec()).is_ok());
    }

    #[test]
    fn validate_rejects_top_violation() {
        let c2 = Arc::new(chain(2));
        let err =
            MeetHom::from_fn(c2.clone(), c2.clone(), |_| c2.bottom()).unwrap_err();
        assert!(matches!(err, HomError::TopNotPreserved { .. }));
    }

    #[test]
    fn validate_rejects_meet_violation() {
        // square -> 2-chain sending both atoms to 1 but their meet to 0
        let sq = Arc::new(boolean_square());
        let c2 = Arc::new(chain(2));
        let one = c2.top();
        let zero = c2.bottom();
        let err = MeetHom::from_fn(sq.clone(), c2, |x| {
            if x == sq.bottom() {
                zero
            } else {
                one
            }
        })
        .unwrap_err();
        match err {
            HomError::MeetNotPreserved { x, y } => {
                assert!(["a", "b"].contains(&x.as_str()) && ["a", "b"].contains(&y.as_str()));
            }
            other => panic!("expected meet violation, got {other:?}"),
        }
    }

    #[test]
    fn top_morphism_is_absorbing_and_maximal() {
        let c2 = Arc::new(chain(2));
        let c3 = Arc::new(chain(3));
        let sq = Arc::new(boolean_square());

        for f in enumerate_meet_homs(&c2, &c3) {
            let lhs = compose(&MeetHom::top(&c3, &sq), &f).unwrap();
            assert_eq!(lhs, MeetHom::top(&c2, &sq));
            let rhs = compose(&f, &MeetHom::top(&sq, &c2)).unwrap();
            assert_eq!(rhs, MeetHom::top(&sq, &c3));
        }

        let all = enumerate_meet_homs(&c3, &c3);
        let top = MeetHom::top(&c3, &c3);
        for f in &all {
            assert!(pointwise_leq(f, &top).unwrap());
        }
        assert!(pointwise_leq(&MeetHom::identity(&c3), &top).unwrap());
    }

    #[test]
    fn composition_laws() {
        let c3 = Arc::new(chain(3));
        let sq = Arc::new(boolean_square());
        let id3 = MeetHom::identity(&c3);
        for f in enumerate_meet_homs(&c3, &sq) {
            assert_eq!(compose(&f, &id3).unwrap(), f);
            assert_eq!(compose(&MeetHom::identity(&sq), &f).unwrap(), f);
        }
        // associativity over a small triple of hom-sets
        for f in enumerate_meet_homs(&c3, &c3) {
            for g in enumerate_meet_homs(&c3, &sq) {
                for h in enumerate_meet_homs(&sq, &c3) {
                    let lhs = compose(&h, &compose(&g, &f).unwrap()).unwrap();
                    let rhs = compose(&compose(&h, &g).unwrap(), &f).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert_eq!(
            compose(&id3, &MeetHom::identity(&sq)).unwrap_err(),
            HomError::DomainMismatch
        );
    }

    #[test]
    fn pointwise_meet_example_on_three_chain() {
        let c3 = Arc::new(chain(3));
        let f = MeetHom::from_ids(c3.clone(), c3.clone(), |x| {
            Some(match x {
                "0" => "0",
                "1" => "2",
                _ => "2",
            })
        })
        .unwrap();
        let g = MeetHom::from_ids(c3.clone(), c3.clone(), |x| {
            Some(match x {
                "0" => "1",
                "1" => "1",
                _ => "2",
            })
        })
        .unwrap();
        let m = pointwise_meet(&f, &g).unwrap();
        assert_eq!(m, MeetHom::identity(&c3));
        assert_eq!(pointwise_meet(&f, &f).unwrap(), f);
        let top = MeetHom::top(&c3, &c3);
        assert_eq!(pointwise_meet(&f, &top).unwrap(), f);
    }

    #[test]
    fn right_adjoint_of_meet_with_u_is_heyting() {
        let sq = Arc::new(boolean_square());
        let a = sq.elem("a").unwrap();
        let down = Arc::new(sq.down_set(a));
        let e = MeetHom::from_fn(sq.clone(), down.clone(), |x| {
            down.elem(sq.id(sq.meet(x, a))).unwrap()
        })
        .unwrap();
        let adj = right_adjoint(&e).unwrap();
        for y in down.elems() {
            let expected = sq.heyting(a, sq.elem(down.id(y)).unwrap());
            assert_eq!(adj.apply(y), expected);
        }
        // the adjoint section splits the surjection
        assert_eq!(compose(&e, &adj).unwrap(), MeetHom::identity(&down));
    }

    #[test]
    fn right_adjoint_of_identity() {
        let c3 = Arc::new(chain(3));
        let id = MeetHom::identity(&c3);
        assert_eq!(right_adjoint(&id).unwrap(), id);
    }

    #[test]
    fn left_adjoint_of_upset_inclusion_is_join_with_u() {
        let sq = Arc::new(boolean_square());
        let a = sq.elem("a").unwrap();
        let up = Arc::new(sq.up_set(a));
        let k = MeetHom::from_fn(up.clone(), sq.clone(), |x| {
            sq.elem(up.id(x)).unwrap()
        })
        .unwrap();
        let l = left_adjoint(&k).unwrap();
        for x in sq.elems() {
            let expected = up.elem(sq.id(sq.join(x, a))).unwrap();
            assert_eq!(l.apply(x), expected);
        }
        // and this particular left adjoint preserves finite meets
        assert!(l.into_meet_hom().is_ok());
    }

    #[test]
    fn surjective_join_preserving_maps_split() {
        // every surjection that preserves all joins has a right adjoint
        // section
        let frames = [
            Arc::new(chain(2)),
            Arc::new(chain(3)),
            Arc::new(boolean_square()),
        ];
        let mut seen = 0;
        for dom in &frames {
            for cod in &frames {
                for f in enumerate_meet_homs(dom, cod) {
                    if !f.is_surjective() || !f.preserves_joins() {
                        continue;
                    }
                    seen += 1;
                    let adj = right_adjoint(&f).expect("a frame quotient splits");
                    assert!(compose(&f, &adj).unwrap().is_identity());
                }
            }
        }
        assert!(seen > 3, "the sweep must hit nontrivial quotients");
    }

    #[test]
    fn no_adjoint_witness() {
        // bottom of the 2-chain maps nothing to 0, so the join formula for a
        // right adjoint of the top morphism fails the law when |cod| > 1
        let c2 = Arc::new(chain(2));
        let sq = Arc::new(boolean_square());
        let top = MeetHom::top(&sq, &c2);
        assert!(matches!(
            right_adjoint(&top),
            Err(AdjointError::NoAdjoint { .. })
        ));
    }

    /// Naive oracle: all |cod|^|dom| functions, filtered by validation.
    fn naive_homs(dom: &Arc<FiniteFrame>, cod: &Arc<FiniteFrame>) -> Vec<Vec<Elem>> {
        let n = dom.len();
        let base = cod.len();
        let total = base.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let map: Vec<Elem> = (0..n)
                .map(|_| {
                    let e = Elem(c % base);
                    c /= base;
                    e
                })
                .collect();
            if MeetHom::validate(dom.clone(), cod.clone(), map.clone()).is_ok() {
                out.push(map);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_naive_oracle() {
        let c2 = Arc::new(chain(2));
        let c3 = Arc::new(chain(3));
        let sq = Arc::new(boolean_square());
        let c1 = Arc::new(chain(1));

        for (dom, cod, expected) in [
            (&c2, &c2, 2usize),
            (&c3, &c3, 6),
            (&c2, &c1, 1),
            (&sq, &c1, 1),
        ] {
            let fast: Vec<Vec<Elem>> = enumerate_meet_homs(dom, cod)
                .iter()
                .map(|h| h.images().to_vec())
                .collect();
            let naive = naive_homs(dom, cod);
            assert_eq!(fast, naive);
            assert_eq!(fast.len(), expected);
        }

        // non-chain pairs, checked against the naive scan only
        let cube = Arc::new(crate::catalog::boolean_cube());
        let grid = Arc::new(crate::catalog::grid(2, 3));
        let c4 = Arc::new(chain(4));
        for (dom, cod) in [
            (&sq, &c3),
            (&sq, &sq),
            (&c4, &sq),
            (&grid, &sq),
            (&cube, &c2),
        ] {
            let fast: Vec<Vec<Elem>> = enumerate_meet_homs(dom, cod)
                .iter()
                .map(|h| h.images().to_vec())
                .collect();
            assert_eq!(fast, naive_homs(dom, cod), "{:?} -> {:?}", dom.poset().ids(), cod.poset().ids());
        }
    }

    #[test]
    fn hom_set_is_a_meet_semilattice_with_top() {
        let c3 = Arc::new(chain(3));
        let homs = enumerate_meet_homs(&c3, &c3);
        assert!(homs.contains(&MeetHom::top(&c3, &c3)));
        for f in &homs {
            for g in &homs {
                let m = pointwise_meet(f, g).unwrap();
                assert!(homs.contains(&m), "{f} ∧ {g} = {m} escaped the hom-set");
            }
        }
    }

    #[test]
    fn composition_is_monotone() {
        let c2 = Arc::new(chain(2));
        let c3 = Arc::new(chain(3));
        let left = enumerate_meet_homs(&c2, &c3);
        let right = enumerate_meet_homs(&c3, &c2);
        for f in &right {
            for g in &right {
                if !pointwise_leq(f, g).unwrap() {
                    continue;
                }
                for h in &left {
                    let hf = compose(h, f).unwrap();
                    let hg = compose(h, g).unwrap();
                    assert!(pointwise_leq(&hf, &hg).unwrap());
                    let fh2 = compose(f, h).unwrap();
                    let gh2 = compose(g, h).unwrap();
                    assert!(pointwise_leq(&fh2, &gh2).unwrap());
                }
            }
        }
    }

    #[test]
    fn iso_search_examples() {
        let sq = boolean_square();
        let c2 = chain(2);
        let c3 = chain(3);

        assert!(find_frame_isomorphism(&c2.product(&c2), &sq).is_some());
        assert!(find_frame_isomorphism(&c3, &sq).is_none());

        let iso = find_frame_isomorphism(&sq, &sq).unwrap();
        assert!(iso.forward().is_identity());
    }

    #[test]
    fn iso_needs_order_not_just_size() {
        let c4 = chain(4);
        let sq = boolean_square();
        assert_eq!(c4.len(), sq.len());
        assert!(find_frame_isomorphism(&c4, &sq).is_none());
    }
}
