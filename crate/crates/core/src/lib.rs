pub mod axioms;
pub mod chainhom;
pub mod dualops;
pub mod exactlin;
pub mod genseries;
pub mod hopfcop;
pub mod kgonal;
pub mod mdend;
pub mod mtetra;
pub mod opdual;
pub mod trees;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/dendriform.md")]
    mod dendriform {}
    #[doc = include_str!("../../../book/src/hopf.md")]
    mod hopf {}
    #[doc = include_str!("../../../book/src/tetrahedral.md")]
    mod tetrahedral {}
    #[doc = include_str!("../../../book/src/gonal.md")]
    mod gonal {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
}
