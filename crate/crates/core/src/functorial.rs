//! Pullback and pushout actions on adjoint extensions, bifunctor coherence,
//! the natural isomorphism with hom-sets, and Baer meets.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::extension::{
    characteristic_map, AdjointExtension, ExtensionClass, UniversalViolation,
};
use crate::frame::FiniteFrame;
use crate::glueing::{glue, Glueing};
use crate::hom::{compose, enumerate_meet_homs, pointwise_meet, HomError, MeetHom};
use crate::poset::Elem;
use crate::report::LawReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctorialError {
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("bifunctor coherence failure: {0}")]
    Coherence(String),
}

/// All isomorphism classes of adjoint extensions of `H` by `N`, in the
/// canonical enumeration order of their characteristic maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSet {
    quotient: Arc<FiniteFrame>,
    normal: Arc<FiniteFrame>,
    classes: Vec<ExtensionClass>,
}

impl ExtensionSet {
    pub fn enumerate(quotient: &Arc<FiniteFrame>, normal: &Arc<FiniteFrame>) -> Self {
        let classes = enumerate_meet_homs(quotient, normal)
            .into_iter()
            .map(ExtensionClass::new)
            .collect();
        ExtensionSet {
            quotient: quotient.clone(),
            normal: normal.clone(),
            classes,
        }
    }

    pub fn quotient(&self) -> &Arc<FiniteFrame> {
        &self.quotient
    }

    pub fn normal(&self) -> &Arc<FiniteFrame> {
        &self.normal
    }

    pub fn classes(&self) -> &[ExtensionClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn position(&self, class: &ExtensionClass) -> Option<usize> {
        self.classes.iter().position(|c| c == class)
    }
}

/// The class of the product extension `N → N × H → H`, the top element.
pub fn top_extension(quotient: &Arc<FiniteFrame>, normal: &Arc<FiniteFrame>) -> ExtensionClass {
    ExtensionClass::new(MeetHom::top(quotient, normal))
}

/// Pull an extension of `H` by `N` back along `f : H′ → H`: the glueing
/// along `α ∘ f`.
pub fn pullback_extension(
    ext: &AdjointExtension,
    f: &MeetHom,
) -> Result<AdjointExtension, FunctorialError> {
    let alpha = characteristic_map(ext);
    if f.cod() != alpha.dom() {
        return Err(HomError::DomainMismatch.into());
    }
    Ok(glue(&compose(&alpha, f)?).as_extension())
}

/// Push an extension of `H` by `N` out along `g : N → N′`: the glueing
/// along `g ∘ α`.
pub fn pushout_extension(
    ext: &AdjointExtension,
    g: &MeetHom,
) -> Result<AdjointExtension, FunctorialError> {
    let alpha = characteristic_map(ext);
    if g.dom() != alpha.cod() {
        return Err(HomError::DomainMismatch.into());
    }
    Ok(glue(&compose(g, &alpha)?).as_extension())
}

/// Apply `f : H′ → H` and `g : N → N′` in both orders, check that the two
/// composites agree on characteristic maps, and return the common value.
/// Disagreement would be an implementation bug, reported as [`FunctorialError::Coherence`].
pub fn bifunctor_action(
    ext: &AdjointExtension,
    f: &MeetHom,
    g: &MeetHom,
) -> Result<AdjointExtension, FunctorialError> {
    let first = pushout_extension(&pullback_extension(ext, f)?, g)?;
    let second = pullback_extension(&pushout_extension(ext, g)?, f)?;
    let alpha_first = characteristic_map(&first);
    let alpha_second = characteristic_map(&second);
    if alpha_first != alpha_second {
        return Err(FunctorialError::Coherence(format!(
            "pullback-then-pushout gives {alpha_first}, pushout-then-pullback gives {alpha_second}"
        )));
    }
    let direct = compose(&compose(g, &characteristic_map(ext))?, f)?;
    if alpha_first != direct {
        return Err(FunctorialError::Coherence(format!(
            "composite characteristic map is {alpha_first}, expected {direct}"
        )));
    }
    Ok(first)
}

/// Index a weakly Schreier extension's elements by their canonical
/// `(retract, cokernel)` components.
fn component_index(ext: &AdjointExtension) -> Option<BTreeMap<(Elem, Elem), Elem>> {
    let mut index = BTreeMap::new();
    for x in ext.total().elems() {
        let key = (ext.retract().apply(x), ext.cokernel().apply(x));
        if index.insert(key, x).is_some() {
            return None;
        }
    }
    Some(index)
}

/// The canonical comparison from the claimed pullback into the base glueing:
/// `x ↦ (k*(x), f(e(x)))`.
pub fn pullback_comparison(
    base: &Glueing,
    f: &MeetHom,
    candidate: &AdjointExtension,
) -> Result<MeetHom, UniversalViolation> {
    let total = candidate.total().clone();
    let mut map = Vec::with_capacity(total.len());
    for x in total.elems() {
        let n = candidate.retract().apply(x);
        let h = f.apply(candidate.cokernel().apply(x));
        let pair = base.pair(n, h).ok_or_else(|| {
            UniversalViolation::new(format!(
                "comparison image of `{}` leaves the base glueing",
                total.id(x)
            ))
        })?;
        map.push(pair);
    }
    MeetHom::validate(total, base.carrier().clone(), map)
        .map_err(|e| UniversalViolation::new(format!("comparison map invalid: {e}")))
}

/// Brute-force pullback check of `candidate` against the square
/// `π₂ : Gl(α) → H` along `f : H′ → H`.
///
/// The concrete pullback is computed in meet-semilattices as the set of
/// pairs `(p, h′)` with `π₂(p) = f(h′)`; the candidate must biject with it
/// order-isomorphically, and every cone from a probe frame must factor
/// through the candidate by exactly one map.
pub fn verify_pullback_universal(
    ext: &AdjointExtension,
    f: &MeetHom,
    candidate: &AdjointExtension,
    probes: &[Arc<FiniteFrame>],
) -> Result<(), UniversalViolation> {
    let base = glue(&characteristic_map(ext));
    let quotient2 = f.dom().clone();
    if candidate.quotient() != &quotient2 {
        return Err(UniversalViolation::new(
            "candidate is not an extension of the pulled-back quotient",
        ));
    }
    if candidate.normal() != ext.normal() {
        return Err(UniversalViolation::new(
            "candidate does not keep the normal frame fixed",
        ));
    }
    let comparison = pullback_comparison(&base, f, candidate)?;

    // cone squares
    let left = compose(base.pi2(), &comparison).expect("shapes agree");
    let right = compose(f, candidate.cokernel()).expect("shapes agree");
    if left != right {
        return Err(UniversalViolation::new(
            "π₂ ∘ comparison differs from f ∘ cokernel",
        ));
    }
    let kernel_left = compose(&comparison, candidate.kernel()).expect("shapes agree");
    if kernel_left != *base.pi1_star() {
        return Err(UniversalViolation::new(
            "comparison does not carry the kernel to π₁₊",
        ));
    }

    // bijection with the concrete pullback of meet-semilattices
    let concrete: Vec<(Elem, Elem)> = base
        .carrier()
        .elems()
        .flat_map(|p| {
            let f = &f;
            let base = &base;
            quotient2
                .elems()
                .filter(move |&h2| base.pi2().apply(p) == f.apply(h2))
                .map(move |h2| (p, h2))
        })
        .collect();
    if concrete.len() != candidate.total().len() {
        return Err(UniversalViolation::new(format!(
            "candidate has {} elements, the concrete pullback has {}",
            candidate.total().len(),
            concrete.len()
        )));
    }
    let image: Vec<(Elem, Elem)> = candidate
        .total()
        .elems()
        .map(|x| (comparison.apply(x), candidate.cokernel().apply(x)))
        .collect();
    for (i, x) in candidate.total().elems().enumerate() {
        if !concrete.contains(&image[i]) {
            return Err(UniversalViolation::new(format!(
                "image of `{}` is not in the concrete pullback",
                candidate.total().id(x)
            )));
        }
        for (j, y) in candidate.total().elems().enumerate() {
            let lhs = candidate.total().leq(x, y);
            let rhs = base.carrier().leq(image[i].0, image[j].0)
                && quotient2.leq(image[i].1, image[j].1);
            if lhs != rhs {
                return Err(UniversalViolation::new(format!(
                    "candidate order disagrees with the pullback order at (`{}`, `{}`)",
                    candidate.total().id(x),
                    candidate.total().id(y)
                )));
            }
        }
    }
    {
        let mut seen = image.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != image.len() {
            return Err(UniversalViolation::new(
                "comparison is not injective into the concrete pullback",
            ));
        }
    }

    // universal property against every competing cone
    for x in probes {
        let to_carrier = enumerate_meet_homs(x, base.carrier());
        let to_quotient2 = enumerate_meet_homs(x, &quotient2);
        let to_candidate = enumerate_meet_homs(x, candidate.total());
        for a in &to_carrier {
            let pa = compose(base.pi2(), a).expect("shapes agree");
            for b in &to_quotient2 {
                if pa != compose(f, b).expect("shapes agree") {
                    continue;
                }
                let mediators = to_candidate
                    .iter()
                    .filter(|m| {
                        compose(&comparison, m).expect("shapes agree") == *a
                            && compose(candidate.cokernel(), m).expect("shapes agree") == *b
                    })
                    .count();
                if mediators != 1 {
                    return Err(UniversalViolation::new(format!(
                        "cone ({a}, {b}) from the {}-element probe has {mediators} mediating maps",
                        x.len()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The canonical comparison from the base glueing into the claimed pushout:
/// `(n, h) ↦` the element with components `(g(n), h)`.
pub fn pushout_comparison(
    base: &Glueing,
    g: &MeetHom,
    candidate: &AdjointExtension,
) -> Result<MeetHom, UniversalViolation> {
    let index = component_index(candidate).ok_or_else(|| {
        UniversalViolation::new("candidate elements are not determined by their components")
    })?;
    let carrier = base.carrier().clone();
    let mut map = Vec::with_capacity(carrier.len());
    for p in carrier.elems() {
        let (n, h) = base.components(p);
        let target = index.get(&(g.apply(n), h)).copied().ok_or_else(|| {
            UniversalViolation::new(format!(
                "no candidate element with components (g({}), {})",
                base.alpha().cod().id(n),
                base.alpha().dom().id(h)
            ))
        })?;
        map.push(target);
    }
    MeetHom::validate(carrier, candidate.total().clone(), map)
        .map_err(|e| UniversalViolation::new(format!("comparison map invalid: {e}")))
}

/// Brute-force pushout check with the canonical comparison map.
pub fn verify_pushout_universal(
    ext: &AdjointExtension,
    g: &MeetHom,
    candidate: &AdjointExtension,
    probes: &[Arc<FiniteFrame>],
) -> Result<(), UniversalViolation> {
    let base = glue(&characteristic_map(ext));
    let comparison = pushout_comparison(&base, g, candidate)?;
    verify_pushout_universal_with(ext, g, candidate, &comparison, probes)
}

/// Brute-force pushout check of `candidate` against the square formed by
/// `π₁₊ : N → Gl(α)` and `g : N → N′`, with an explicit comparison map
/// `Gl(α) → candidate` (canonically `(n,h) ↦ (g(n),h)`).
///
/// Every cocone `(p, q)` from a probe frame with `p ∘ π₁₊ = q ∘ g` must
/// factor uniquely; the mediating map is also constructed directly as
/// `x ↦ p(π₂₊(e′(x))) ∧ q(k′*(x))` and checked.
pub fn verify_pushout_universal_with(
    ext: &AdjointExtension,
    g: &MeetHom,
    candidate: &AdjointExtension,
    comparison: &MeetHom,
    probes: &[Arc<FiniteFrame>],
) -> Result<(), UniversalViolation> {
    let base = glue(&characteristic_map(ext));
    let normal2 = g.cod().clone();
    if candidate.quotient() != ext.quotient() {
        return Err(UniversalViolation::new(
            "candidate does not keep the quotient frame fixed",
        ));
    }
    if candidate.normal() != &normal2 {
        return Err(UniversalViolation::new(
            "candidate is not an extension by the pushed-out normal frame",
        ));
    }
    if comparison.dom() != base.carrier() || comparison.cod() != candidate.total() {
        return Err(UniversalViolation::new("comparison map has the wrong shape"));
    }

    // pushout square: comparison ∘ π₁₊ = k′ ∘ g
    let left = compose(comparison, base.pi1_star()).expect("shapes agree");
    let right = compose(candidate.kernel(), g).expect("shapes agree");
    if left != right {
        return Err(UniversalViolation::new(
            "comparison ∘ π₁₊ differs from kernel ∘ g",
        ));
    }

    for x in probes {
        let from_carrier = enumerate_meet_homs(base.carrier(), x);
        let from_normal2 = enumerate_meet_homs(&normal2, x);
        let from_candidate = enumerate_meet_homs(candidate.total(), x);
        for p in &from_carrier {
            let pk = compose(p, base.pi1_star()).expect("shapes agree");
            for q in &from_normal2 {
                if pk != compose(q, g).expect("shapes agree") {
                    continue;
                }
                // mediating map by the decomposition (n,h) = (g α(h), h) ∧ (n, 1)
                let mediator = MeetHom::validate(
                    candidate.total().clone(),
                    x.clone(),
                    candidate
                        .total()
                        .elems()
                        .map(|c| {
                            let h = candidate.cokernel().apply(c);
                            let n2 = candidate.retract().apply(c);
                            x.meet(
                                p.apply(base.pi2_star().apply(h)),
                                q.apply(n2),
                            )
                        })
                        .collect(),
                );
                let mediator = match mediator {
                    Ok(m) => m,
                    Err(e) => {
                        return Err(UniversalViolation::new(format!(
                            "constructed mediating map is not meet-preserving for cocone ({p}, {q}): {e}"
                        )))
                    }
                };
                if compose(&mediator, comparison).expect("shapes agree") != *p {
                    return Err(UniversalViolation::new(format!(
                        "mediating map does not restrict to p along the comparison for cocone ({p}, {q})"
                    )));
                }
                if compose(&mediator, candidate.kernel()).expect("shapes agree") != *q {
                    return Err(UniversalViolation::new(format!(
                        "mediating map does not restrict to q along the kernel for cocone ({p}, {q})"
                    )));
                }
                let count = from_candidate
                    .iter()
                    .filter(|m| {
                        compose(m, comparison).expect("shapes agree") == *p
                            && compose(m, candidate.kernel()).expect("shapes agree") == *q
                    })
                    .count();
                if count != 1 {
                    return Err(UniversalViolation::new(format!(
                        "cocone ({p}, {q}) from the {}-element probe has {count} mediating maps",
                        x.len()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The Baer meet of two extension classes: the class of the pointwise meet
/// of characteristic maps. The carrier of the meet is literally the
/// intersection of the two carriers inside `N × H`, which is asserted.
pub fn baer_meet(
    c1: &ExtensionClass,
    c2: &ExtensionClass,
) -> Result<ExtensionClass, HomError> {
    let alpha = pointwise_meet(c1.alpha(), c2.alpha())?;
    let meet_carrier = glue(&alpha);
    let left = glue(c1.alpha());
    let right = glue(c2.alpha());
    let ids = |g: &Glueing| -> Vec<String> {
        g.carrier()
            .elems()
            .map(|e| g.carrier().id(e).to_string())
            .collect()
    };
    let meet_ids = ids(&meet_carrier);
    let intersection: Vec<String> = ids(&left)
        .into_iter()
        .filter(|id| ids(&right).contains(id))
        .collect();
    assert_eq!(
        meet_ids, intersection,
        "Gl(α ∧ β) must be the intersection of Gl(α) and Gl(β)"
    );
    Ok(ExtensionClass::new(alpha))
}

/// Check the natural isomorphism between extension classes and hom-sets for
/// one `(H, N)` pair: characteristic maps classify, and pullback/pushout
/// transport characteristic maps by composition.
pub fn nat_iso_check(
    quotient: &Arc<FiniteFrame>,
    normal: &Arc<FiniteFrame>,
    probes: &[Arc<FiniteFrame>],
) -> Vec<LawReport> {
    let mut reports = Vec::new();
    let set = ExtensionSet::enumerate(quotient, normal);
    for class in set.classes() {
        let instance = format!("alpha={}", class.alpha());
        let rep = class.representative();
        let recovered = characteristic_map(&rep);
        if recovered == *class.alpha() {
            reports.push(LawReport::pass("characteristic_map_roundtrip", &instance));
        } else {
            reports.push(LawReport::fail(
                "characteristic_map_roundtrip",
                &instance,
                format!("recovered {recovered}"),
            ));
        }
        for probe in probes {
            for f in enumerate_meet_homs(probe, quotient) {
                let pulled = pullback_extension(&rep, &f).expect("shapes agree");
                let expected = compose(class.alpha(), &f).expect("shapes agree");
                let got = characteristic_map(&pulled);
                let instance = format!("alpha={}, f={}", class.alpha(), f);
                if got == expected {
                    reports.push(LawReport::pass("pullback_naturality", instance));
                } else {
                    reports.push(LawReport::fail(
                        "pullback_naturality",
                        instance,
                        format!("characteristic map {got}, expected {expected}"),
                    ));
                }
            }
            for g in enumerate_meet_homs(normal, probe) {
                let pushed = pushout_extension(&rep, &g).expect("shapes agree");
                let expected = compose(&g, class.alpha()).expect("shapes agree");
                let got = characteristic_map(&pushed);
                let instance = format!("alpha={}, g={}", class.alpha(), g);
                if got == expected {
                    reports.push(LawReport::pass("pushout_naturality", instance));
                } else {
                    reports.push(LawReport::fail(
                        "pushout_naturality",
                        instance,
                        format!("characteristic map {got}, expected {expected}"),
                    ));
                }
            }
        }
    }
    reports
}
