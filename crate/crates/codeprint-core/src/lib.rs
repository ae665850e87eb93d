//! Core library for attributing code snippets to the model that generated
//! them. Everything in this crate is pure computation over in-memory data:
//! corpus handling and splits, the refinement pipeline, stylometric metrics,
//! the token-embedding encoder, the disentangled attribution network and its
//! training loop, the evaluation harness, and the synthetic oracle corpus.
//!
//! File and terminal I/O live in the companion `codeprint` crate.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std` feature
//! only widens error-trait integration for downstream users.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod corpus;
pub mod dcan;
pub mod encoder;
pub mod eval;
pub mod keywords;
pub mod linalg;
pub mod math;
pub mod refine;
pub mod rng;
pub mod stylometry;
pub mod synth;

pub use corpus::{CodeSample, Language, Manifest, SampleStatus, Setting, SplitSpec};
pub use dcan::{DcanParams, ModelParams, TrainConfig};
pub use encoder::{EncoderParams, TokenSeq};
pub use eval::EvalReport;
pub use refine::{LexSpan, RawResponse, RefinementReport, SampleKey, SpanKind};
pub use stylometry::StyleProfile;
pub use synth::SynthConfig;

/// Version of the manifest / checkpoint / report schemas this build reads
/// and writes.
pub const SCHEMA_VERSION: u32 = 1;
