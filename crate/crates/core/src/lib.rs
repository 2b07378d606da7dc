pub mod fixtures;
pub mod geometry;
pub mod homology;
pub mod lifting;
pub mod quasi;
pub mod shadow;
pub mod simplicial;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-geometry.md")]
    mod exact_geometry {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    mod complexes {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/shadows.md")]
    mod shadows {}
    #[doc = include_str!("../../../book/src/lifting.md")]
    mod lifting {}
    #[doc = include_str!("../../../book/src/quasi-rips.md")]
    mod quasi_rips {}
    #[doc = include_str!("../../../book/src/fixtures.md")]
    mod fixtures {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
