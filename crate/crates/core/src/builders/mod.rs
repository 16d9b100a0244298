//! Filtrations from point clouds, grayscale images and text files.

pub mod cubical;
pub mod rips;
pub mod text;

pub use cubical::{build_lower_star_cubical, lower_star_with_vertices, GrayImage};
pub use rips::{build_rips, PointCloud};
pub use text::{parse_filtration_file, parse_pgm, parse_points, write_filtration_file, write_pgm};
