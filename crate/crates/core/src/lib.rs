//! Exact computational Lie theory for Hessenberg ideal fibers.
//!
//! The crate builds root systems and Weyl groups from Cartan matrices,
//! constructs Chevalley bases with exact structure constants, attaches
//! sl2 data to nilpotent orbits, paves Hessenberg ideal fibers by affine
//! cells, and computes the dot action of the Weyl group of G2 on the
//! cohomology of regular semisimple Hessenberg varieties.
//!
//! All arithmetic is over the integers or the rationals.

#![allow(clippy::needless_range_loop)]

pub mod chevalley;
pub mod error;
pub mod hessfibers;
pub mod linalg;
pub mod orbitctx;
pub mod poly;
pub mod reptheory;
pub mod rootcore;
pub mod weylgrp;

pub use error::{LieError, Result};
pub use linalg::Q;
pub use rootcore::{Root, RootId, RootLength, RootSystem, Subsystem};
pub use weylgrp::{bruhat_leq, parabolic_decompose, WeylElement, WeylGroup};
pub use chevalley::{build_structure_table, Basis, LiePoly, Sl2Triple, StructureTable};
pub use poly::Poly;
pub use orbitctx::{grading_spaces, orbit_context, GradingSpaces, OrbitContext};
pub use reptheory::{char_table_g2, dot_action, dot_action_all, CharacterTable, ClassFunction, DotAction, GradedCharacter, ICSummand};
