//! Two-color symmetry analysis of 2-way 2-fold weave designs.
//!
//! A design records, for every crossing of the square grid, whether the weft
//! or the warp strand is on top. Its color group is split into symmetries
//! that keep the front of the weave in front and those that turn it over;
//! the pair of plane groups determines the layer group of the weave.

pub mod analysis;
pub mod catalog;
pub mod design;
pub mod diagram;
pub mod error;
pub mod generate;
pub mod isometry;
pub mod layer;
pub mod lattice;
pub mod plane;
pub mod report;
pub mod search;
pub mod weave;

pub use analysis::{color_group, side_split_rule, translation_lattices, ColorGroupAnalysis, Side};
pub use design::{parse_design, serialize_design, Design};
pub use error::{Error, Result};
pub use isometry::{color_action, Chi, GridIsometry, PointOp};
pub use lattice::{HalfPoint, Hnf, IVec2};
pub use weave::{Faces, View, WeaveStructure};
pub use layer::{layer_group_name, lift_table1, LayerElement, LayerElementKind, LayerGroupName, PairTable};
pub use plane::{plane_group_name, PlaneGroupName, PlaneGroupType};
pub use generate::{gen_striped_coloring, gen_twill};
pub use search::{search_designs, SearchOptions, SearchOutcome, SearchTarget};
pub use diagram::{emit_color_group_svg, emit_layer_svg, DiagramSpec, Window};
pub use catalog::{catalog_stats, verify_catalog, Catalog, CatalogEntry};
pub use report::{classify, Classification, Report};
