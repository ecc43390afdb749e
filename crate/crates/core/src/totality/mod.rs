//! Abstract groups and the bounded probe of total k-closedness.

mod abstract_group;
mod prober;

pub use abstract_group::{
    cayley_table, core, coset_action, subgroup_classes, subgroups, AbstractGroup, Subgroup,
};
pub use prober::{
    classify, classify_abelian, classify_two_closed, combine_sylow_witness,
    faithful_representations, probe_totally_k_closed, sylow_parts, theorem_b_classify,
    verify_chnl_product, Citation, FaithfulRepresentations, Representation, SylowPart, Verdict,
};
