//! Exact computations with real simple Lie algebras: root systems, Chevalley
//! bases and classical matrix forms, sl2-triples and their gradations, Satake
//! diagrams, contact gradations and the contactization of non-conical orbits.
//!
//! All arithmetic is over `Q`. A typical session:
//!
//! ```
//! use contactgrad::registry::{algebra, root_triple, RootChoice};
//! use contactgrad::sl2kit::{ad_h_gradation, is_contact_gradation};
//!
//! let b = algebra("g2-split").unwrap();
//! let t = root_triple(&b, &RootChoice::Short).unwrap();
//! let g = ad_h_gradation(&b.algebra, &t.h).unwrap();
//! assert_eq!(g.depth(), 3);
//! assert!(!is_contact_gradation(&b.algebra, &g).is_contact);
//! ```
//!
//! The `classify` module rebuilds the reference tables shipped in
//! `data/tables/` and reports each row as match, mismatch or data-only.

pub mod exact;
pub mod liealg;
pub mod linalg;
pub mod rootsys;
pub mod sl2kit;
pub mod satake;
pub mod contactize;
pub mod template;
pub mod registry;
pub mod classify;
