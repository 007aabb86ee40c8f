//! Artinian local algebras, modules over them, and the freeness tests that
//! characterise jump loci through maps `Spec A → 𝔸^q`.

mod algebra;
mod map;
mod module;
mod verify;

pub use algebra::{invert, ArtinianAlgebra, CompositionSeries, Element};
pub use map::MapSpec;
pub use module::{
    image_module, module_cohomology, specialize_complex, AComplex, AMatrix, ArtinianModule,
};
pub use verify::{
    verify_lemma_image, verify_prop21, LemmaImageVerdict, Prop21Sides, Prop21Verdict,
};
