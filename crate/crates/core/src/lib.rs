//! Finite frames, finite-meet-preserving maps, Artin glueings, and their
//! split extensions — with brute-force verification of the universal
//! properties and structure theorems at desk scale.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod catalog;
pub mod ext_category;
pub mod extension;
pub mod frame;
pub mod functorial;
pub mod glueing;
pub mod hom;
pub mod io;
pub mod laws;
pub mod poset;
pub mod report;

pub use catalog::Catalog;
pub use extension::{AdjointExtension, ExtensionClass};
pub use frame::{validate_frame, FiniteFrame, FrameError};
pub use glueing::{glue, Glueing};
pub use hom::{
    compose, enumerate_meet_homs, find_frame_isomorphism, pointwise_leq, pointwise_meet,
    FrameIso, MeetHom,
};
pub use poset::{Elem, Poset};
pub use report::{LawReport, Verdict};
