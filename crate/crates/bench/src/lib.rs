//! Shared inputs for the benchmarks in `benches/`.

use unipotent_core::classical_maps::enumerate_unipotents;
use unipotent_core::weyl_classes::enumerate_classes;
use unipotent_core::{CharVariant, ClassSymbol, Family, GroupContext, UnipotentSymbol};

pub fn context(family: Family, rank: u32, variant: CharVariant) -> GroupContext {
    GroupContext::new(family, rank, variant).expect("benchmark context")
}

pub fn classes(ctx: &GroupContext) -> Vec<ClassSymbol> {
    enumerate_classes(ctx).expect("classes enumerate")
}

pub fn unipotents(ctx: &GroupContext) -> Vec<UnipotentSymbol> {
    enumerate_unipotents(ctx).expect("unipotents enumerate")
}
