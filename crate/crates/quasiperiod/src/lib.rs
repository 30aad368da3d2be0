//! Covers (quasiperiods) of regular and indeterminate strings, computed from
//! prefix tables.
//!
//! * [`regular::pcr`] turns the prefix table of a regular string into its cover
//!   array in linear time.
//! * [`indet::pcind`] finds every rooted cover of an indeterminate string from its
//!   prefix table.
//! * [`regular::cover_array_oracle`], [`indet::rooted_covers_oracle`] and
//!   [`indet::sliding_cover_check`] work directly on strings and serve as
//!   brute-force references.
//! * [`bench`] runs the average-case scaling experiment for `pcind`.
//!
//! All arrays are 1-based in meaning: `values()[i - 1]` holds entry `i`.

/// An integer array indexed from 1, printed as comma-separated decimals.
macro_rules! int_array {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash)]
        pub struct $name(Vec<usize>);

        impl $name {
            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Entry `i`, counting from 1.
            pub fn at(&self, i: usize) -> usize {
                self.0[i - 1]
            }

            pub fn values(&self) -> &[usize] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<usize> {
                self.0
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(&$crate::prefix::format_csv(&self.0))
            }
        }

        impl PartialEq<[usize]> for $name {
            fn eq(&self, other: &[usize]) -> bool {
                self.0 == other
            }
        }

        impl<const N: usize> PartialEq<[usize; N]> for $name {
            fn eq(&self, other: &[usize; N]) -> bool {
                self.0 == other
            }
        }
    };
}

pub mod bench;
pub mod error;
pub mod indet;
pub mod prefix;
pub mod regular;
pub mod strings;

pub use error::{Error, Result};
pub use indet::{pcind, RootedCoverSet};
pub use prefix::{BorderArray, PrefixTable};
pub use regular::{pcr, CoverArray};
pub use strings::{IndeterminateString, RegularString, Symbol, SymbolSet};
