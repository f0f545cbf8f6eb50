//! Split extensions in the category of frames with finite-meet-preserving
//! maps: kernels, cokernels, adjoint splittings, the weakly Schreier
//! condition and the classification of adjoint extensions by glueings.

use std::sync::Arc;

use thiserror::Error;

use crate::frame::FiniteFrame;
use crate::glueing::{glue, Glueing};
use crate::hom::{compose, enumerate_meet_homs, FrameIso, MeetHom};
use crate::poset::Elem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("maps do not line up: {0}")]
    Shape(String),
    #[error("cokernel ∘ kernel is not the top morphism at `{at}`")]
    KernelNotKilled { at: String },
    #[error("the section does not split the cokernel at `{at}`")]
    NotSection { at: String },
    #[error("the section is not right adjoint to the cokernel at ({x}, {y})")]
    SectionNotAdjoint { x: String, y: String },
    #[error("the retraction is not left adjoint to the kernel at ({x}, {y})")]
    RetractNotAdjoint { x: String, y: String },
    #[error("the cokernel map is not a normal epimorphism ({0})")]
    NotNormalEpi(String),
    #[error("the kernel map is not the kernel of the cokernel ({0})")]
    WrongKernel(String),
    #[error("weakly Schreier decomposition fails at `{at}`")]
    NotWeaklySchreier { at: String },
    #[error("map is not of the form x ↦ x ∧ u onto a down-set: {0}")]
    NotMeetWithU(String),
    #[error("`{equation}` fails at `{at}`")]
    VerificationFailed { equation: String, at: String },
}

/// A split extension `N → G → H` whose splitting is right adjoint to the
/// cokernel map, together with the left adjoint of the kernel.
///
/// Construction by [`new_unchecked`](Self::new_unchecked) does not validate;
/// [`verify`](Self::verify) checks every defining law and is run by all the
/// canonical constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointExtension {
    kernel: MeetHom,   // N → G
    cokernel: MeetHom, // G → H
    section: MeetHom,  // H → G
    retract: MeetHom,  // G → N
}

impl AdjointExtension {
    pub fn new_unchecked(
        kernel: MeetHom,
        cokernel: MeetHom,
        section: MeetHom,
        retract: MeetHom,
    ) -> Self {
        AdjointExtension {
            kernel,
            cokernel,
            section,
            retract,
        }
    }

    pub fn verified(
        kernel: MeetHom,
        cokernel: MeetHom,
        section: MeetHom,
        retract: MeetHom,
    ) -> Result<Self, ExtensionError> {
        let ext = Self::new_unchecked(kernel, cokernel, section, retract);
        ext.verify()?;
        Ok(ext)
    }

    pub fn normal(&self) -> &Arc<FiniteFrame> {
        self.kernel.dom()
    }

    pub fn total(&self) -> &Arc<FiniteFrame> {
        self.kernel.cod()
    }

    pub fn quotient(&self) -> &Arc<FiniteFrame> {
        self.cokernel.cod()
    }

    pub fn kernel(&self) -> &MeetHom {
        &self.kernel
    }

    pub fn cokernel(&self) -> &MeetHom {
        &self.cokernel
    }

    pub fn section(&self) -> &MeetHom {
        &self.section
    }

    pub fn retract(&self) -> &MeetHom {
        &self.retract
    }

    /// Check every defining law of an adjoint extension, reporting the first
    /// failure with a witness element.
    pub fn verify(&self) -> Result<(), ExtensionError> {
        let n = self.normal().clone();
        let g = self.total().clone();
        let h = self.quotient().clone();
        if self.cokernel.dom() != &g {
            return Err(ExtensionError::Shape(
                "cokernel domain is not the total frame".into(),
            ));
        }
        if self.section.dom() != &h || self.section.cod() != &g {
            return Err(ExtensionError::Shape(
                "section must map the quotient frame into the total frame".into(),
            ));
        }
        if self.retract.dom() != &g || self.retract.cod() != &n {
            return Err(ExtensionError::Shape(
                "retraction must map the total frame onto the normal frame".into(),
            ));
        }

        for x in n.elems() {
            if self.cokernel.apply(self.kernel.apply(x)) != h.top() {
                return Err(ExtensionError::KernelNotKilled {
                    at: n.id(x).to_string(),
                });
            }
        }
        for y in h.elems() {
            if self.cokernel.apply(self.section.apply(y)) != y {
                return Err(ExtensionError::NotSection {
                    at: h.id(y).to_string(),
                });
            }
        }
        for x in g.elems() {
            for y in h.elems() {
                if h.leq(self.cokernel.apply(x), y) != g.leq(x, self.section.apply(y)) {
                    return Err(ExtensionError::SectionNotAdjoint {
                        x: g.id(x).to_string(),
                        y: h.id(y).to_string(),
                    });
                }
            }
        }
        for x in g.elems() {
            for y in n.elems() {
                if n.leq(self.retract.apply(x), y) != g.leq(x, self.kernel.apply(y)) {
                    return Err(ExtensionError::RetractNotAdjoint {
                        x: g.id(x).to_string(),
                        y: n.id(y).to_string(),
                    });
                }
            }
        }

        // the cokernel must be a normal epi, i.e. isomorphic over G to
        // x ↦ x ∧ u for u the least element sent to the top
        let u = normal_epi_root(&self.cokernel, &self.section)
            .map_err(ExtensionError::NotNormalEpi)?;

        // the kernel must embed N as exactly the up-set of u
        let image: Vec<Elem> = n.elems().map(|x| self.kernel.apply(x)).collect();
        for x in n.elems() {
            for y in n.elems() {
                if n.leq(x, y) != g.leq(self.kernel.apply(x), self.kernel.apply(y)) {
                    return Err(ExtensionError::WrongKernel(format!(
                        "kernel is not an order embedding at ({}, {})",
                        n.id(x),
                        n.id(y)
                    )));
                }
            }
        }
        for z in g.elems() {
            let in_image = image.contains(&z);
            let above_u = g.leq(u, z);
            if in_image != above_u {
                return Err(ExtensionError::WrongKernel(format!(
                    "kernel image and up-set of `{}` differ at `{}`",
                    g.id(u),
                    g.id(z)
                )));
            }
        }

        for x in g.elems() {
            let recomposed = g.meet(
                self.kernel.apply(self.retract.apply(x)),
                self.section.apply(self.cokernel.apply(x)),
            );
            if recomposed != x {
                return Err(ExtensionError::NotWeaklySchreier {
                    at: g.id(x).to_string(),
                });
            }
        }
        Ok(())
    }
}

/// For a map `e` with right adjoint `s` that splits it, find `u` such that
/// `e` is isomorphic to `x ↦ x ∧ u : G → ↓u`, or say why there is none.
fn normal_epi_root(e: &MeetHom, s: &MeetHom) -> Result<Elem, String> {
    let g = e.dom();
    let h = e.cod();
    let fiber: Vec<Elem> = g
        .elems()
        .filter(|&x| e.apply(x) == h.top())
        .collect();
    let u = fiber
        .iter()
        .copied()
        .find(|&m| fiber.iter().all(|&x| g.leq(m, x)))
        .ok_or_else(|| "the preimage of the top element has no least element".to_string())?;

    // h ↦ s(h) ∧ u must be an order isomorphism onto the down-set of u
    // carrying e to x ↦ x ∧ u
    let embed: Vec<Elem> = h.elems().map(|y| g.meet(s.apply(y), u)).collect();
    for y in h.elems() {
        for y2 in h.elems() {
            if h.leq(y, y2) != g.leq(embed[y.index()], embed[y2.index()]) {
                return Err(format!(
                    "the quotient does not embed order-faithfully at ({}, {})",
                    h.id(y),
                    h.id(y2)
                ));
            }
        }
    }
    let mut down: Vec<Elem> = g.elems().filter(|&x| g.leq(x, u)).collect();
    let mut sorted = embed.clone();
    sorted.sort_unstable();
    down.sort_unstable();
    if sorted != down {
        return Err(format!(
            "the quotient is not isomorphic to the down-set of `{}`",
            g.id(u)
        ));
    }
    for x in g.elems() {
        if embed[e.apply(x).index()] != g.meet(x, u) {
            return Err(format!(
                "the map differs from x ↦ x ∧ {} at `{}`",
                g.id(u),
                g.id(x)
            ));
        }
    }
    Ok(u)
}

/// Is `e` a cokernel? Normal epimorphisms are exactly the maps isomorphic to
/// `x ↦ x ∧ u : G → ↓u`.
pub fn is_normal_epi(e: &MeetHom) -> bool {
    match crate::hom::right_adjoint(e) {
        Ok(s) => normal_epi_root(e, &s).is_ok(),
        Err(_) => false,
    }
}

/// Is `k` a kernel? Normal monomorphisms are exactly the maps isomorphic to
/// the inclusion of an up-set `↑u ↪ G`.
pub fn is_normal_mono(k: &MeetHom) -> bool {
    let n = k.dom();
    let g = k.cod();
    let u = k.apply(n.bottom());
    for x in n.elems() {
        for y in n.elems() {
            if n.leq(x, y) != g.leq(k.apply(x), k.apply(y)) {
                return false;
            }
        }
    }
    let image: Vec<Elem> = n.elems().map(|x| k.apply(x)).collect();
    g.elems().all(|z| image.contains(&z) == g.leq(u, z))
}

/// The cokernel of `f : N → G`: with `u = f(0)`, the map `x ↦ x ∧ u` onto
/// the down-set of `u`, together with its right adjoint section `y ↦ (u ⇒ y)`.
pub fn cokernel(f: &MeetHom) -> (MeetHom, MeetHom) {
    let g = f.cod().clone();
    let u = f.apply(f.dom().bottom());
    let down = Arc::new(g.down_set(u));
    let e = MeetHom::from_fn(g.clone(), down.clone(), |x| {
        down.elem(g.id(g.meet(x, u))).expect("x ∧ u lies below u")
    })
    .expect("x ↦ x ∧ u preserves finite meets");
    let e_star = MeetHom::from_fn(down.clone(), g.clone(), |y| {
        g.heyting(u, g.elem(down.id(y)).expect("down-set ids come from G"))
    })
    .expect("Heyting implication preserves finite meets in its second argument");
    (e, e_star)
}

/// The kernel of a normal epi given in the literal form `x ↦ x ∧ u : G → ↓u`:
/// the inclusion `↑u ↪ G` with its meet-preserving left adjoint `x ↦ x ∨ u`.
pub fn kernel_of_normal_epi(e: &MeetHom) -> Result<(MeetHom, MeetHom), ExtensionError> {
    let g = e.dom().clone();
    let down = e.cod();
    let u = g
        .elem(down.id(down.top()))
        .ok_or_else(|| ExtensionError::NotMeetWithU("codomain top is not an element of the domain".into()))?;
    if **down != g.down_set(u) {
        return Err(ExtensionError::NotMeetWithU(format!(
            "codomain is not the down-set of `{}`",
            g.id(u)
        )));
    }
    for x in g.elems() {
        let expected = g.meet(x, u);
        if down.elem(g.id(expected)) != Some(e.apply(x)) {
            return Err(ExtensionError::NotMeetWithU(format!(
                "image of `{}` is not `{}`",
                g.id(x),
                g.id(expected)
            )));
        }
    }
    let up = Arc::new(g.up_set(u));
    let k = MeetHom::from_fn(up.clone(), g.clone(), |x| {
        g.elem(up.id(x)).expect("up-set ids come from G")
    })
    .expect("up-set inclusion preserves finite meets");
    let k_star = MeetHom::from_fn(g.clone(), up.clone(), |x| {
        up.elem(g.id(g.join(x, u))).expect("x ∨ u lies above u")
    })
    .expect("x ↦ x ∨ u preserves finite meets by distributivity");
    Ok((k, k_star))
}

/// The canonical adjoint extension carried by an element `u` of `G`:
/// `↑u → G → ↓u` with the inclusion, `x ↦ x ∧ u`, `y ↦ (u ⇒ y)` and
/// `x ↦ x ∨ u`.
pub fn extension_from_element(g: &Arc<FiniteFrame>, u: Elem) -> AdjointExtension {
    let up = Arc::new(g.up_set(u));
    let down = Arc::new(g.down_set(u));
    let kernel = MeetHom::from_fn(up.clone(), g.clone(), |x| {
        g.elem(up.id(x)).expect("up-set ids come from G")
    })
    .expect("up-set inclusion preserves finite meets");
    let cokernel = MeetHom::from_fn(g.clone(), down.clone(), |x| {
        down.elem(g.id(g.meet(x, u))).expect("x ∧ u lies below u")
    })
    .expect("x ↦ x ∧ u preserves finite meets");
    let section = MeetHom::from_fn(down.clone(), g.clone(), |y| {
        g.heyting(u, g.elem(down.id(y)).expect("down-set ids come from G"))
    })
    .expect("the Heyting section preserves finite meets");
    let retract = MeetHom::from_fn(g.clone(), up.clone(), |x| {
        up.elem(g.id(g.join(x, u))).expect("x ∨ u lies above u")
    })
    .expect("x ↦ x ∨ u preserves finite meets by distributivity");
    AdjointExtension::verified(kernel, cokernel, section, retract)
        .expect("every element of a frame carries an adjoint extension")
}

/// The weakly Schreier condition with its canonical witnesses: every `x`
/// must equal `k(k*(x)) ∧ s(e(x))`.
pub fn is_weakly_schreier(ext: &AdjointExtension) -> bool {
    let g = ext.total();
    g.elems().all(|x| {
        g.meet(
            ext.kernel().apply(ext.retract().apply(x)),
            ext.section().apply(ext.cokernel().apply(x)),
        ) == x
    })
}

/// The meet-preserving map `k* ∘ s : H → N` classifying the extension.
pub fn characteristic_map(ext: &AdjointExtension) -> MeetHom {
    compose(ext.retract(), ext.section()).expect("section and retraction compose")
}

/// The isomorphism `G ≅ Gl(k*s)` of the classification theorem:
/// `x ↦ (k*(x), e(x))` with inverse `(n,h) ↦ k(n) ∧ s(h)`.
///
/// All five equations (the two inverse laws and the three commuting squares
/// against the glueing extension) are checked; the first failure is reported,
/// which signals a corrupted input extension.
pub fn canonical_glue_iso(ext: &AdjointExtension) -> Result<FrameIso, ExtensionError> {
    let glueing = glue(&characteristic_map(ext));
    canonical_glue_iso_against(ext, &glueing)
}

pub fn canonical_glue_iso_against(
    ext: &AdjointExtension,
    glueing: &Glueing,
) -> Result<FrameIso, ExtensionError> {
    let g = ext.total().clone();
    let carrier = glueing.carrier().clone();

    let fail = |equation: &str, at: String| ExtensionError::VerificationFailed {
        equation: equation.to_string(),
        at,
    };

    let mut forward_map = Vec::with_capacity(g.len());
    for x in g.elems() {
        let n = ext.retract().apply(x);
        let h = ext.cokernel().apply(x);
        let pair = glueing
            .pair(n, h)
            .ok_or_else(|| fail("(k*(x), e(x)) lands in the glueing", g.id(x).to_string()))?;
        forward_map.push(pair);
    }
    let forward = MeetHom::validate(g.clone(), carrier.clone(), forward_map)
        .map_err(|e| fail("x ↦ (k*(x), e(x)) preserves finite meets", e.to_string()))?;

    let mut backward_map = Vec::with_capacity(carrier.len());
    for p in carrier.elems() {
        let (n, h) = glueing.components(p);
        backward_map.push(g.meet(ext.kernel().apply(n), ext.section().apply(h)));
    }
    let backward = MeetHom::validate(carrier.clone(), g.clone(), backward_map)
        .map_err(|e| fail("(n,h) ↦ k(n) ∧ s(h) preserves finite meets", e.to_string()))?;

    for x in g.elems() {
        if backward.apply(forward.apply(x)) != x {
            return Err(fail("f′ ∘ f = id", g.id(x).to_string()));
        }
    }
    for p in carrier.elems() {
        if forward.apply(backward.apply(p)) != p {
            return Err(fail("f ∘ f′ = id", carrier.id(p).to_string()));
        }
    }

    for n in ext.normal().elems() {
        if forward.apply(ext.kernel().apply(n)) != glueing.pi1_star().apply(n) {
            return Err(fail("f ∘ k = π₁₊", ext.normal().id(n).to_string()));
        }
    }
    for x in g.elems() {
        if glueing.pi2().apply(forward.apply(x)) != ext.cokernel().apply(x) {
            return Err(fail("π₂ ∘ f = e", g.id(x).to_string()));
        }
    }
    for h in ext.quotient().elems() {
        if forward.apply(ext.section().apply(h)) != glueing.pi2_star().apply(h) {
            return Err(fail("f ∘ s = π₂₊", ext.quotient().id(h).to_string()));
        }
    }

    FrameIso::new(forward, backward)
        .map_err(|e| fail("the comparison maps form a frame isomorphism", e.to_string()))
}

/// An isomorphism class of adjoint extensions of `H` by `N`, keyed by its
/// characteristic map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionClass {
    alpha: MeetHom,
}

impl ExtensionClass {
    pub fn new(alpha: MeetHom) -> Self {
        ExtensionClass { alpha }
    }

    pub fn alpha(&self) -> &MeetHom {
        &self.alpha
    }

    pub fn quotient(&self) -> &Arc<FiniteFrame> {
        self.alpha.dom()
    }

    pub fn normal(&self) -> &Arc<FiniteFrame> {
        self.alpha.cod()
    }

    /// The canonical representative: the glueing extension along `alpha`.
    pub fn representative(&self) -> AdjointExtension {
        glue(&self.alpha).as_extension()
    }
}

/// Violation report from a brute-force universal-property check.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("universal property fails: {detail}")]
pub struct UniversalViolation {
    pub detail: String,
}

impl UniversalViolation {
    pub fn new(detail: impl Into<String>) -> Self {
        UniversalViolation {
            detail: detail.into(),
        }
    }
}

/// Brute-force cokernel check: against every probe frame `X`, every
/// `g : G → X` killing `f` must factor through `e` by exactly one map.
pub fn verify_cokernel_universal(
    f: &MeetHom,
    e: &MeetHom,
    probes: &[Arc<FiniteFrame>],
) -> Result<(), UniversalViolation> {
    let g_frame = f.cod().clone();
    if e.dom() != &g_frame {
        return Err(UniversalViolation::new("candidate does not start at the codomain of f"));
    }
    let killed = compose(e, f).map_err(|_| UniversalViolation::new("e does not compose with f"))?;
    if !killed.is_top() {
        return Err(UniversalViolation::new(format!(
            "e ∘ f is not the top morphism: {killed}"
        )));
    }
    for x in probes {
        let from_g = enumerate_meet_homs(&g_frame, x);
        let from_cod = enumerate_meet_homs(e.cod(), x);
        for g in &from_g {
            if !compose(g, f).expect("shapes agree").is_top() {
                continue;
            }
            let factorisations = from_cod
                .iter()
                .filter(|m| compose(m, e).expect("shapes agree") == *g)
                .count();
            if factorisations != 1 {
                return Err(UniversalViolation::new(format!(
                    "map {g} into the {}-element probe factors through the candidate {factorisations} times",
                    x.len()
                )));
            }
        }
    }
    Ok(())
}

/// Brute-force kernel check: against every probe frame `X`, every
/// `f : X → G` killed by `e` must factor through `k` by exactly one map.
pub fn verify_kernel_universal(
    e: &MeetHom,
    k: &MeetHom,
    probes: &[Arc<FiniteFrame>],
) -> Result<(), UniversalViolation> {
    let g_frame = e.dom().clone();
    if k.cod() != &g_frame {
        return Err(UniversalViolation::new("candidate does not end at the domain of e"));
    }
    let killed = compose(e, k).map_err(|_| UniversalViolation::new("e does not compose with k"))?;
    if !killed.is_top() {
        return Err(UniversalViolation::new(format!(
            "e ∘ k is not the top morphism: {killed}"
        )));
    }
    for x in probes {
        let into_g = enumerate_meet_homs(x, &g_frame);
        let into_n = enumerate_meet_homs(x, k.dom());
        for f in &into_g {
            if !compose(e, f).expect("shapes agree").is_top() {
                continue;
            }
            let factorisations = into_n
                .iter()
                .filter(|m| compose(k, m).expect("shapes agree") == *f)
                .count();
            if factorisations != 1 {
                return Err(UniversalViolation::new(format!(
                    "map {f} from the {}-element probe factors through the candidate {factorisations} times",
                    x.len()
                )));
            }
        }
    }
    Ok(())
}
