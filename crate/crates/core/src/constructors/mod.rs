//! Explicit complexes and the operations that build new ones from old.

mod basic;
mod product;
mod sum;
mod tight;

pub use basic::{barycentric_subdivision, cycle, fixture, grid_facets, octahedral_sphere, Coloring, Fixture};
pub use product::{product_vertex, staircase_facets, staircase_product, staircase_product_ordered};
pub use sum::{
    boundary_isomorphisms, edge_star_connected_sum, edge_star_connected_sum_with_maps,
    edge_star_handle_addition_with_map, flag_connected_sum, flag_connected_sum_with_maps, flag_handle_addition,
    flag_handle_addition_with_map, induced_ball, vertex_star_connected_sum_with_maps, BoundaryIsomorphism, Colors,
    Gluing, InducedBall,
};
pub use tight::{
    delta16, delta4, far_four_cycle_edges, gamma_handle, gamma_tight, surface_min, surface_min_with_hook, Delta16,
    Delta4,
};
