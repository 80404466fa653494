//! Tree structure: mirror-bridges, branches, recursive cutting, `S_F` sets,
//! min-multisets, and recognition/generation of recursively bridge-mirrored
//! trees.

mod branches;
mod cutting;
mod rbm;

pub(crate) use branches::component_mirror_bridge;
pub use branches::{branch, half_branches, min_multiset, mirror_bridge, Branch, MinMultiset};
pub use cutting::{cut_minus_edge, recursive_cutting, s_set, CutTrace};
pub use rbm::{
    generate_rbm, generate_rbm_undirected, is_rbm, is_rbm_undirected, odd_automorphism, MAX_RBM_DEPTH,
};
