//! Compiles the book's code snippets as doc-tests so the guide can never
//! drift from the library. Each chapter of `book/src` becomes one module.

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/words-and-fox-calculus.md")]
mod words_and_fox_calculus {}

#[doc = include_str!("../../../book/src/forms-and-lie-algebras.md")]
mod forms_and_lie_algebras {}

#[doc = include_str!("../../../book/src/cohomology-pipeline.md")]
mod cohomology_pipeline {}

#[doc = include_str!("../../../book/src/cli-and-manifests.md")]
mod cli_and_manifests {}
