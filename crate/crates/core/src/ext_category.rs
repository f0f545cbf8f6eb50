//! Morphisms of extensions and of adjoint extensions, the contravariant
//! order equivalence, and the failure of the split short five lemma.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::catalog::chain;
use crate::extension::{characteristic_map, AdjointExtension, ExtensionClass};
use crate::frame::FiniteFrame;
use crate::functorial::ExtensionSet;
use crate::glueing::glue;
use crate::hom::{
    compose, enumerate_meet_homs, find_frame_isomorphism, pointwise_leq, MeetHom,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareKind {
    Kernel,
    Cokernel,
    Section,
}

impl fmt::Display for SquareKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareKind::Kernel => write!(f, "kernel"),
            SquareKind::Cokernel => write!(f, "cokernel"),
            SquareKind::Section => write!(f, "section"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtCatError {
    #[error("the {square} square fails at `{at}`: got `{got}`, want `{want}`")]
    Square {
        square: SquareKind,
        at: String,
        got: String,
        want: String,
    },
    #[error("extensions do not share their end frames")]
    EndsMismatch,
    #[error("map does not go between the total frames")]
    MapMismatch,
    #[error("classes are not ordered: the first must lie below the second")]
    NotLeq,
}

/// A morphism of extensions over fixed `N` and `H`: a meet-preserving map
/// of total frames commuting with kernels and cokernels. The splitting need
/// not be preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtMorphism {
    src: AdjointExtension,
    dst: AdjointExtension,
    map: MeetHom,
}

impl ExtMorphism {
    pub fn new(
        src: AdjointExtension,
        dst: AdjointExtension,
        map: MeetHom,
    ) -> Result<Self, ExtCatError> {
        is_ext_morphism(&src, &dst, &map)?;
        Ok(ExtMorphism { src, dst, map })
    }

    pub fn src(&self) -> &AdjointExtension {
        &self.src
    }

    pub fn dst(&self) -> &AdjointExtension {
        &self.dst
    }

    pub fn map(&self) -> &MeetHom {
        &self.map
    }
}

/// A morphism of adjoint extensions: additionally preserves the splitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjExtMorphism {
    inner: ExtMorphism,
}

impl AdjExtMorphism {
    pub fn new(
        src: AdjointExtension,
        dst: AdjointExtension,
        map: MeetHom,
    ) -> Result<Self, ExtCatError> {
        is_adjext_morphism(&src, &dst, &map)?;
        Ok(AdjExtMorphism {
            inner: ExtMorphism { src, dst, map },
        })
    }

    pub fn src(&self) -> &AdjointExtension {
        &self.inner.src
    }

    pub fn dst(&self) -> &AdjointExtension {
        &self.inner.dst
    }

    pub fn map(&self) -> &MeetHom {
        &self.inner.map
    }

    pub fn as_ext_morphism(&self) -> &ExtMorphism {
        &self.inner
    }
}

fn check_square(
    square: SquareKind,
    got: &MeetHom,
    want: &MeetHom,
) -> Result<(), ExtCatError> {
    debug_assert_eq!(got.dom(), want.dom());
    for x in got.dom().elems() {
        if got.apply(x) != want.apply(x) {
            return Err(ExtCatError::Square {
                square,
                at: got.dom().id(x).to_string(),
                got: got.cod().id(got.apply(x)).to_string(),
                want: want.cod().id(want.apply(x)).to_string(),
            });
        }
    }
    Ok(())
}

/// Square-by-square check of the two-square (kernel, cokernel) condition,
/// with identities on the end frames.
pub fn is_ext_morphism(
    src: &AdjointExtension,
    dst: &AdjointExtension,
    map: &MeetHom,
) -> Result<(), ExtCatError> {
    if src.normal() != dst.normal() || src.quotient() != dst.quotient() {
        return Err(ExtCatError::EndsMismatch);
    }
    if map.dom() != src.total() || map.cod() != dst.total() {
        return Err(ExtCatError::MapMismatch);
    }
    check_square(
        SquareKind::Kernel,
        &compose(map, src.kernel()).expect("shapes agree"),
        dst.kernel(),
    )?;
    check_square(
        SquareKind::Cokernel,
        &compose(dst.cokernel(), map).expect("shapes agree"),
        src.cokernel(),
    )?;
    Ok(())
}

/// The three-square condition: an ext-morphism that also carries the
/// section of `src` to the section of `dst`.
pub fn is_adjext_morphism(
    src: &AdjointExtension,
    dst: &AdjointExtension,
    map: &MeetHom,
) -> Result<(), ExtCatError> {
    is_ext_morphism(src, dst, map)?;
    check_square(
        SquareKind::Section,
        &compose(map, src.section()).expect("shapes agree"),
        dst.section(),
    )?;
    Ok(())
}

/// All morphisms of extensions from `src` to `dst`, in hom enumeration order.
pub fn ext_morphisms(src: &AdjointExtension, dst: &AdjointExtension) -> Vec<ExtMorphism> {
    enumerate_meet_homs(src.total(), dst.total())
        .into_iter()
        .filter(|map| is_ext_morphism(src, dst, map).is_ok())
        .map(|map| ExtMorphism {
            src: src.clone(),
            dst: dst.clone(),
            map,
        })
        .collect()
}

/// For `α <= β` pointwise, the inclusion `Gl(α) ↪ Gl(β)` given by the
/// identity on pairs. It is a frame homomorphism (preserves all joins),
/// and a morphism of extensions, but not of adjoint extensions in general.
pub fn inclusion_from_order(
    sub: &ExtensionClass,
    sup: &ExtensionClass,
) -> Result<ExtMorphism, ExtCatError> {
    if sub.quotient() != sup.quotient() || sub.normal() != sup.normal() {
        return Err(ExtCatError::EndsMismatch);
    }
    if !pointwise_leq(sub.alpha(), sup.alpha()).expect("parallel maps") {
        return Err(ExtCatError::NotLeq);
    }
    let small = glue(sub.alpha());
    let large = glue(sup.alpha());
    let map = MeetHom::validate(
        small.carrier().clone(),
        large.carrier().clone(),
        small
            .carrier()
            .elems()
            .map(|e| {
                let (n, h) = small.components(e);
                large
                    .pair(n, h)
                    .expect("pairs of the smaller glueing lie in the larger one")
            })
            .collect(),
    )
    .expect("pair inclusion preserves finite meets");
    assert!(
        map.preserves_joins(),
        "the inclusion of glueings is a frame homomorphism"
    );
    ExtMorphism::new(small.as_extension(), large.as_extension(), map)
}

/// The right adjoint of [`inclusion_from_order`], `(n,h) ↦ (n ∧ α(h), h)`:
/// a morphism of adjoint extensions `Gl(β) → Gl(α)`.
pub fn right_adjoint_inclusion(
    sub: &ExtensionClass,
    sup: &ExtensionClass,
) -> Result<AdjExtMorphism, ExtCatError> {
    let inclusion = inclusion_from_order(sub, sup)?;
    let small = glue(sub.alpha());
    let large = glue(sup.alpha());
    let map = MeetHom::validate(
        large.carrier().clone(),
        small.carrier().clone(),
        large
            .carrier()
            .elems()
            .map(|e| {
                let (n, h) = large.components(e);
                let clipped = sub.normal().meet(n, sub.alpha().apply(h));
                small
                    .pair(clipped, h)
                    .expect("clipped pairs satisfy the glueing condition")
            })
            .collect(),
    )
    .expect("clipping preserves finite meets");

    // adjunction against the inclusion
    for x in small.carrier().elems() {
        for y in large.carrier().elems() {
            let lhs = large.carrier().leq(inclusion.map().apply(x), y);
            let rhs = small.carrier().leq(x, map.apply(y));
            assert_eq!(lhs, rhs, "clipping must be right adjoint to the inclusion");
        }
    }

    AdjExtMorphism::new(large.as_extension(), small.as_extension(), map)
}

/// Search all meet-preserving maps between the total frames for morphisms of
/// adjoint extensions. The classification theorems make this set a preorder:
/// there is at most one morphism, and it exists exactly when the
/// characteristic maps are ordered the other way round.
pub fn hom_adjext(src: &AdjointExtension, dst: &AdjointExtension) -> Option<AdjExtMorphism> {
    assert!(
        src.normal() == dst.normal() && src.quotient() == dst.quotient(),
        "hom_adjext compares extensions over the same frames"
    );
    let found: Vec<MeetHom> = enumerate_meet_homs(src.total(), dst.total())
        .into_iter()
        .filter(|map| is_adjext_morphism(src, dst, map).is_ok())
        .collect();
    assert!(
        found.len() <= 1,
        "there can be at most one morphism of adjoint extensions"
    );
    let expected = pointwise_leq(&characteristic_map(dst), &characteristic_map(src))
        .expect("parallel characteristic maps");
    assert_eq!(
        !found.is_empty(),
        expected,
        "a morphism of adjoint extensions exists exactly against the order"
    );
    found.into_iter().next().map(|map| AdjExtMorphism {
        inner: ExtMorphism {
            src: src.clone(),
            dst: dst.clone(),
            map,
        },
    })
}

/// The canonical failure of the split short five lemma: a morphism of
/// adjoint extensions `Gl(⊤) → Gl(id)` over the 2-chain with identities on
/// both ends, between non-isomorphic extensions.
pub fn split_short_five_counterexample() -> (AdjointExtension, AdjointExtension, AdjExtMorphism) {
    let c2 = Arc::new(chain(2));
    let id_class = ExtensionClass::new(MeetHom::identity(&c2));
    let top_class = ExtensionClass::new(MeetHom::top(&c2, &c2));
    let collapse =
        right_adjoint_inclusion(&id_class, &top_class).expect("id <= ⊤ pointwise");
    let src = collapse.src().clone();
    let dst = collapse.dst().clone();
    assert_eq!(src.total().len(), 4);
    assert_eq!(dst.total().len(), 3);
    assert!(
        find_frame_isomorphism(src.total(), dst.total()).is_none(),
        "the two totals must not be isomorphic"
    );
    (src, dst, collapse)
}

/// An adjoint pair of ext-morphisms; `left ⊣ right` with `right : src → dst`
/// and `left : dst → src`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtAdjunction {
    pub left: ExtMorphism,
    pub right: ExtMorphism,
}

/// Enumerate the adjunctions in the category of extensions of `H` by `N`:
/// pairs of ext-morphisms `(f*, f)` with `f* ⊣ f`. The right adjoints are
/// exactly the morphisms of adjoint extensions.
pub fn adjunctions_in_ext(
    quotient: &Arc<FiniteFrame>,
    normal: &Arc<FiniteFrame>,
) -> Vec<ExtAdjunction> {
    let set = ExtensionSet::enumerate(quotient, normal);
    let reps: Vec<AdjointExtension> = set
        .classes()
        .iter()
        .map(|c| c.representative())
        .collect();
    let mut out = Vec::new();
    for src in &reps {
        for dst in &reps {
            for right in ext_morphisms(src, dst) {
                for left in ext_morphisms(dst, src) {
                    let adjoint = src.total().elems().all(|x| {
                        dst.total().elems().all(|y| {
                            src.total().leq(left.map().apply(y), x)
                                == dst.total().leq(y, right.map().apply(x))
                        })
                    });
                    if adjoint {
                        out.push(ExtAdjunction {
                            left: left.clone(),
                            right: right.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// The pointwise order on parallel ext-morphisms.
pub fn ext_hom_order(f: &ExtMorphism, g: &ExtMorphism) -> Result<bool, ExtCatError> {
    if f.src() != g.src() || f.dst() != g.dst() {
        return Err(ExtCatError::MapMismatch);
    }
    Ok(pointwise_leq(f.map(), g.map()).expect("parallel maps"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::is_weakly_schreier;
    use crate::hom::left_adjoint;

    fn two_chain_classes() -> (ExtensionClass, ExtensionClass) {
        let c2 = Arc::new(chain(2));
        (
            ExtensionClass::new(MeetHom::identity(&c2)),
            ExtensionClass::new(MeetHom::top(&c2, &c2)),
        )
    }

    #[test]
    fn identity_is_a_morphism_of_both_kinds() {
        let (id_class, _) = two_chain_classes();
        let ext = id_class.representative();
        let id = MeetHom::identity(ext.total());
        assert!(is_ext_morphism(&ext, &ext, &id).is_ok());
        assert!(is_adjext_morphism(&ext, &ext, &id).is_ok());
    }

    #[test]
    fn inclusion_is_ext_but_not_adjext() {
        let (id_class, top_class) = two_chain_classes();
        let inclusion = inclusion_from_order(&id_class, &top_class).unwrap();
        assert_eq!(inclusion.src().total().len(), 3);
        assert_eq!(inclusion.dst().total().len(), 4);
        let err = is_adjext_morphism(
            inclusion.src(),
            inclusion.dst(),
            inclusion.map(),
        )
        .unwrap_err();
        assert!(
            matches!(
                err,
                ExtCatError::Square {
                    square: SquareKind::Section,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn inclusion_requires_order() {
        let (id_class, top_class) = two_chain_classes();
        assert!(matches!(
            inclusion_from_order(&top_class, &id_class),
            Err(ExtCatError::NotLeq)
        ));
        // equal classes give the identity
        let same = inclusion_from_order(&id_class, &id_class).unwrap();
        assert!(same.map().is_identity());
    }

    #[test]
    fn clipping_map_is_adjext_morphism() {
        let (id_class, top_class) = two_chain_classes();
        let collapse = right_adjoint_inclusion(&id_class, &top_class).unwrap();
        // explicit table on Gl(⊤): (n,h) ↦ (n ∧ id(h), h)
        let square = collapse.src().total().clone();
        let three = collapse.dst().total().clone();
        let expect = [("(0,0)", "(0,0)"), ("(0,1)", "(0,1)"), ("(1,0)", "(0,0)"), ("(1,1)", "(1,1)")];
        for (from, to) in expect {
            let e = square.elem(from).unwrap();
            assert_eq!(three.id(collapse.map().apply(e)), to);
        }
        // identical classes give the identity
        let same = right_adjoint_inclusion(&id_class, &id_class).unwrap();
        assert!(same.map().is_identity());
    }

    #[test]
    fn general_form_of_adjext_morphisms() {
        // any morphism of adjoint extensions Gl(β) → Gl(α) clips the first
        // component by α
        let c2 = Arc::new(chain(2));
        let set = ExtensionSet::enumerate(&c2, &c2);
        for beta in set.classes() {
            for alpha in set.classes() {
                let src = beta.representative();
                let dst = alpha.representative();
                let Some(found) = hom_adjext(&src, &dst) else {
                    continue;
                };
                let expected = right_adjoint_inclusion(alpha, beta).unwrap();
                assert_eq!(found.map(), expected.map());
            }
        }
    }

    #[test]
    fn hom_adjext_on_two_chain_classes() {
        let (id_class, top_class) = two_chain_classes();
        let from_top = hom_adjext(&top_class.representative(), &id_class.representative());
        assert!(from_top.is_some());
        let from_id = hom_adjext(&id_class.representative(), &top_class.representative());
        assert!(from_id.is_none());
        let same = hom_adjext(&id_class.representative(), &id_class.representative());
        assert!(same.unwrap().map().is_identity());
    }

    #[test]
    fn split_short_five_fails() {
        let (src, dst, collapse) = split_short_five_counterexample();
        assert!(is_adjext_morphism(&src, &dst, collapse.map()).is_ok());
        assert!(is_weakly_schreier(&src) && is_weakly_schreier(&dst));
        assert_ne!(src.total().len(), dst.total().len());
    }

    #[test]
    fn adjunction_enumeration_matches_hom_adjext() {
        let c2 = Arc::new(chain(2));
        let adjunctions = adjunctions_in_ext(&c2, &c2);
        // identity pairs on each of the two classes, plus inclusion ⊣ collapse
        assert_eq!(adjunctions.len(), 3);
        for adj in &adjunctions {
            // the right adjoint preserves the splitting
            assert!(is_adjext_morphism(
                adj.right.src(),
                adj.right.dst(),
                adj.right.map()
            )
            .is_ok());
            // and has a left adjoint that is itself an ext-morphism
            let raw = left_adjoint(adj.right.map()).unwrap();
            for y in adj.right.dst().total().elems() {
                assert_eq!(raw.apply(y), adj.left.map().apply(y));
            }
        }
        // counts agree with the unique-morphism search, object pair by pair
        let set = ExtensionSet::enumerate(&c2, &c2);
        let mut expected = 0;
        for a in set.classes() {
            for b in set.classes() {
                if hom_adjext(&a.representative(), &b.representative()).is_some() {
                    expected += 1;
                }
            }
        }
        assert_eq!(adjunctions.len(), expected);
    }

    #[test]
    fn single_class_has_no_counterexample() {
        // when there is only one extension class, the only adjunction is an
        // isomorphism pair, so no short-five failure can occur
        let c2 = Arc::new(chain(2));
        let c1 = Arc::new(chain(1));
        let set = ExtensionSet::enumerate(&c2, &c1);
        assert_eq!(set.len(), 1);
        let adjunctions = adjunctions_in_ext(&c2, &c1);
        assert_eq!(adjunctions.len(), 1);
        assert!(adjunctions[0].right.map().is_identity());
    }

    #[test]
    fn counterexample_is_the_only_one_over_the_two_chain() {
        // exhaustive search over (C2, C2): the only morphism of adjoint
        // extensions between distinct classes is the canonical collapse
        let c2 = Arc::new(chain(2));
        let set = ExtensionSet::enumerate(&c2, &c2);
        let mut strict = Vec::new();
        for beta in set.classes() {
            for alpha in set.classes() {
                if alpha == beta {
                    continue;
                }
                if let Some(m) = hom_adjext(&beta.representative(), &alpha.representative()) {
                    strict.push(m);
                }
            }
        }
        assert_eq!(strict.len(), 1);
        let (_, _, canonical) = split_short_five_counterexample();
        assert_eq!(strict[0].map(), canonical.map());
    }

    #[test]
    fn ext_hom_order_is_reflexive_and_detects_strict_order() {
        let (id_class, top_class) = two_chain_classes();
        let inclusion = inclusion_from_order(&id_class, &top_class).unwrap();
        assert!(ext_hom_order(&inclusion, &inclusion).unwrap());

        // two parallel ext-morphisms on a 3-class instance
        let c3 = Arc::new(chain(3));
        let set = ExtensionSet::enumerate(&c3, &c3);
        let mut seen_strict = false;
        for a in set.classes() {
            let src = a.representative();
            for b in set.classes() {
                let dst = b.representative();
                let morphisms = ext_morphisms(&src, &dst);
                for f in &morphisms {
                    for g in &morphisms {
                        let fg = ext_hom_order(f, g).unwrap();
                        let gf = ext_hom_order(g, f).unwrap();
                        if fg && gf {
                            assert_eq!(f.map(), g.map());
                        }
                        if fg && !gf {
                            seen_strict = true;
                        }
                    }
                }
            }
        }
        assert!(seen_strict, "expected a strictly ordered pair of morphisms");
    }
}
