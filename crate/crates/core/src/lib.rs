//! Crossings and nestings of perfect matchings.
//!
//! A matching on `[2n]` is grown from the empty matching by repeatedly
//! inserting a new first edge into one of its gaps; this gives the tree of
//! matchings. The crate computes the group-valued statistic
//! `cr·α + ne·β` on the levels of that tree, the sequences that predict those
//! distributions, the resulting similarity classes, Dyck-path encodings and
//! the width-minimal nesting/crossing exchanges, and checks the identities
//! relating them by exhaustive enumeration.
//!
//! ```
//! use matchstat::{Matching, Preset, seq, SeqMethod};
//!
//! let m: Matching = "1-4,2-7,3-8,5-6,9-10".parse().unwrap();
//! assert_eq!((m.crossings(), m.nestings()), (3, 2));
//! let s = seq(&m, &Preset::Cr.spec(), SeqMethod::Direct);
//! assert_eq!(s.len(), 2 * m.n() + 1);
//! ```

pub mod cli;
pub mod counting;
pub mod dyck;
pub mod error;
pub mod group;
pub mod limits;
pub mod matching;
pub mod multiset;
pub mod sequence;
pub mod similarity;
pub mod transforms;
pub mod verify;

pub use dyck::{to_dyck, DyckPath, Profile, Step, Tunnel};
pub use error::{Error, Result};
pub use group::{preset, AbelianGroup, GroupElement, GroupSpec, IntGroup, Preset};
pub use limits::Limits;
pub use matching::{enumerate_matchings, level, par_enumerate_matchings, par_level, CrossNest, GapProfile, Matching};
pub use multiset::Multiset;
pub use sequence::{f_r_gamma, g_r, level_distribution, r_all, r_iterate, r_step, seq, statistic, DistributionMethod, GroupSequence, SeqMethod};
pub use similarity::{are_similar, are_swap_similar, partition_classes, similarity_key, SimilarityClass, SimilarityKey};
pub use transforms::{cn_transform, min_width_pair, nc_transform, PairKind};
pub use verify::{check_named, check_theorem1, Report, Status};
