//! H1 persistence barcodes and persistent 1-cycles.
//!
//! Build a [`Filtration`] from a point cloud ([`builders::build_rips`]), a
//! grayscale image ([`builders::build_lower_star_cubical`]) or a text file
//! ([`builders::parse_filtration_file`]), then wrap it in an
//! [`Analysis`](cycles::Analysis) to get the barcode and a representative
//! cycle for any bar.
//!
//! ```
//! use pcycles_core::builders::parse_filtration_file;
//! use pcycles_core::cycles::Analysis;
//!
//! let f = parse_filtration_file("v\nv\nv\ne 1 2\ne 2 3\ne 1 3\nf 4 5 6\n").unwrap();
//! let analysis = Analysis::new(f);
//! let bar = analysis.barcode().intervals[0];
//! assert_eq!((bar.birth, bar.death), (6, Some(7)));
//! let cycle = analysis.persistent_cycle_for(&bar).unwrap();
//! assert_eq!(cycle.chain.ids(), &[4, 5, 6]);
//! assert!(analysis.verify(&bar, &cycle.chain).is_accept());
//! ```

pub mod builders;
pub mod cycles;
pub mod error;
pub mod filtration;
pub mod persistence;
mod sparse;

pub use cycles::{Analysis, PersistentCycle};
pub use error::{Error, Result};
pub use filtration::{Cell, Chain, Filtration, FiltrationBuilder, Interval};
pub use persistence::{barcode_h1, compute_pairs, Barcode, Pairing, Reduction};
