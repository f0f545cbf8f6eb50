//! The Artin glueing of a finite-meet-preserving map, with its projections
//! and their right adjoints.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::extension::AdjointExtension;
use crate::frame::{pair_id, validate_frame, FiniteFrame};
use crate::hom::{compose, MeetHom};
use crate::poset::{Elem, Poset};

/// The glued frame of pairs `(n, h)` with `n <= alpha(h)`, where
/// `alpha: H → N`, together with the four canonical maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glueing {
    alpha: MeetHom,
    carrier: Arc<FiniteFrame>,
    pairs: Vec<(Elem, Elem)>,
    index: BTreeMap<(Elem, Elem), Elem>,
    pi1: MeetHom,
    pi2: MeetHom,
    pi1_star: MeetHom,
    pi2_star: MeetHom,
}

/// Construct the glueing along `alpha`. Any meet-preserving map glues; meets
/// and joins in the carrier are componentwise, which is asserted here.
pub fn glue(alpha: &MeetHom) -> Glueing {
    let h = alpha.dom().clone();
    let n = alpha.cod().clone();

    let mut ids = Vec::new();
    let mut pairs = Vec::new();
    for ne in n.elems() {
        for he in h.elems() {
            if n.leq(ne, alpha.apply(he)) {
                ids.push(pair_id(n.id(ne), h.id(he)));
                pairs.push((ne, he));
            }
        }
    }
    let leq: Vec<Vec<bool>> = pairs
        .iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .map(|&(c, d)| n.leq(a, c) && h.leq(b, d))
                .collect()
        })
        .collect();
    let carrier = Arc::new(
        validate_frame(Poset::new(ids, leq).expect("glueing order is a poset"))
            .expect("glueing carrier is a frame"),
    );

    for (i, &(n1, h1)) in pairs.iter().enumerate() {
        for (j, &(n2, h2)) in pairs.iter().enumerate() {
            let m = carrier.meet(Elem(i), Elem(j));
            assert_eq!(
                pairs[m.index()],
                (n.meet(n1, n2), h.meet(h1, h2)),
                "carrier meets must be componentwise"
            );
            // joins stay inside the carrier by monotonicity of alpha:
            // n1 ∨ n2 <= alpha(h1) ∨ alpha(h2) <= alpha(h1 ∨ h2)
            let jn = carrier.join(Elem(i), Elem(j));
            assert_eq!(
                pairs[jn.index()],
                (n.join(n1, n2), h.join(h1, h2)),
                "carrier joins must be componentwise"
            );
        }
    }

    let index: BTreeMap<(Elem, Elem), Elem> = pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, Elem(i)))
        .collect();

    let pi1 = MeetHom::validate(
        carrier.clone(),
        n.clone(),
        pairs.iter().map(|&(ne, _)| ne).collect(),
    )
    .expect("first projection preserves finite meets");
    let pi2 = MeetHom::validate(
        carrier.clone(),
        h.clone(),
        pairs.iter().map(|&(_, he)| he).collect(),
    )
    .expect("second projection preserves finite meets");
    let pi1_star = MeetHom::validate(
        n.clone(),
        carrier.clone(),
        n.elems().map(|ne| index[&(ne, h.top())]).collect(),
    )
    .expect("n ↦ (n,1) preserves finite meets");
    let pi2_star = MeetHom::validate(
        h.clone(),
        carrier.clone(),
        h.elems().map(|he| index[&(alpha.apply(he), he)]).collect(),
    )
    .expect("h ↦ (alpha(h),h) preserves finite meets");

    Glueing {
        alpha: alpha.clone(),
        carrier,
        pairs,
        index,
        pi1,
        pi2,
        pi1_star,
        pi2_star,
    }
}

impl Glueing {
    pub fn alpha(&self) -> &MeetHom {
        &self.alpha
    }

    pub fn carrier(&self) -> &Arc<FiniteFrame> {
        &self.carrier
    }

    /// The components `(n, h)` of a carrier element.
    pub fn components(&self, e: Elem) -> (Elem, Elem) {
        self.pairs[e.index()]
    }

    /// The carrier element for `(n, h)`, if `n <= alpha(h)`.
    pub fn pair(&self, n: Elem, h: Elem) -> Option<Elem> {
        self.index.get(&(n, h)).copied()
    }

    pub fn pi1(&self) -> &MeetHom {
        &self.pi1
    }

    pub fn pi2(&self) -> &MeetHom {
        &self.pi2
    }

    pub fn pi1_star(&self) -> &MeetHom {
        &self.pi1_star
    }

    pub fn pi2_star(&self) -> &MeetHom {
        &self.pi2_star
    }

    /// Read `alpha` back off the glueing as `π₁ ∘ π₂₊`.
    pub fn recover_alpha(&self) -> MeetHom {
        compose(&self.pi1, &self.pi2_star).expect("projection composes with section")
    }

    /// Package the glueing as the split extension `N → Gl(α) → H` with the
    /// projections' adjoints as section and retraction.
    pub fn as_extension(&self) -> AdjointExtension {
        let ext = AdjointExtension::new_unchecked(
            self.pi1_star.clone(),
            self.pi2.clone(),
            self.pi2_star.clone(),
            self.pi1.clone(),
        );
        ext.verify()
            .expect("a glueing always yields an adjoint extension");
        ext
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_square, chain};
    use crate::hom::{
        enumerate_meet_homs, find_frame_isomorphism, pointwise_leq, right_adjoint, MeetHom,
    };

    #[test]
    fn glue_top_is_the_product() {
        let c2 = Arc::new(chain(2));
        let g = glue(&MeetHom::top(&c2, &c2));
        assert_eq!(g.carrier().len(), 4);
        assert!(find_frame_isomorphism(g.carrier(), &boolean_square()).is_some());
        assert_eq!(**g.carrier(), c2.product(&c2));
    }

    #[test]
    fn glue_identity_on_two_chain_is_three_chain() {
        let c2 = Arc::new(chain(2));
        let g = glue(&MeetHom::identity(&c2));
        let ids: Vec<&str> = g.carrier().elems().map(|e| g.carrier().id(e)).collect();
        assert_eq!(ids, vec!["(0,0)", "(0,1)", "(1,1)"]);
        assert!(find_frame_isomorphism(g.carrier(), &chain(3)).is_some());
    }

    #[test]
    fn glue_into_one_element_frame_keeps_the_domain() {
        let c1 = Arc::new(chain(1));
        let sq = Arc::new(boolean_square());
        let g = glue(&MeetHom::top(&sq, &c1));
        assert!(find_frame_isomorphism(g.carrier(), &sq).is_some());
    }

    #[test]
    fn carrier_size_formula() {
        let c3 = Arc::new(chain(3));
        for alpha in enumerate_meet_homs(&c3, &c3) {
            let g = glue(&alpha);
            let expected: usize = c3
                .elems()
                .map(|h| c3.elems().filter(|&n| c3.leq(n, alpha.apply(h))).count())
                .sum();
            assert_eq!(g.carrier().len(), expected);
        }
    }

    #[test]
    fn projections_are_adjoint_pairs() {
        let c2 = Arc::new(chain(2));
        let c3 = Arc::new(chain(3));
        for alpha in enumerate_meet_homs(&c3, &c2) {
            let g = glue(&alpha);
            assert_eq!(right_adjoint(g.pi1()).unwrap(), *g.pi1_star());
            assert_eq!(right_adjoint(g.pi2()).unwrap(), *g.pi2_star());
        }
    }

    #[test]
    fn alpha_recovered_for_every_map() {
        let c2 = Arc::new(chain(2));
        let c3 = Arc::new(chain(3));
        for alpha in enumerate_meet_homs(&c2, &c2) {
            assert_eq!(glue(&alpha).recover_alpha(), alpha);
        }
        let id3 = MeetHom::identity(&c3);
        assert_eq!(glue(&id3).recover_alpha(), id3);
        let top = MeetHom::top(&c2, &c3);
        assert_eq!(glue(&top).recover_alpha(), top);
    }

    #[test]
    fn extension_shape() {
        let c2 = Arc::new(chain(2));

        // alpha = ⊤: kernel image is {(n,1)}, quotient is H
        let g = glue(&MeetHom::top(&c2, &c2));
        let ext = g.as_extension();
        for n in c2.elems() {
            let img = ext.kernel().apply(n);
            let (np, hp) = g.components(img);
            assert_eq!(np, n);
            assert_eq!(hp, c2.top());
        }
        assert_eq!(ext.quotient(), &c2);

        // alpha = id: a 3-chain extension of the 2-chain by the 2-chain
        let ext = glue(&MeetHom::identity(&c2)).as_extension();
        assert_eq!(ext.total().len(), 3);

        // the section splits the projection for every alpha
        for alpha in enumerate_meet_homs(&c2, &c2) {
            let g = glue(&alpha);
            let composite = compose(g.pi2(), g.pi2_star()).unwrap();
            assert!(composite.is_identity());
        }
    }

    #[test]
    fn carrier_grows_with_alpha() {
        let c3 = Arc::new(chain(3));
        let homs = enumerate_meet_homs(&c3, &c3);
        for a in &homs {
            for b in &homs {
                if pointwise_leq(a, b).unwrap() {
                    assert!(glue(a).carrier().len() <= glue(b).carrier().len());
                }
            }
        }
    }
}
