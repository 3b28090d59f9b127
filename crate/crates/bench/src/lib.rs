//! Shared inputs for the criterion benchmarks in `benches/`.
//!
//! Building a structure table is itself benchmarked, so the helpers here
//! only wrap the fallible constructors that every benchmark needs.

use liehess::hessfibers::{enumerate_ideals, HessenbergIdeal};
use liehess::{build_structure_table, orbit_context, OrbitContext, RootSystem, StructureTable};

/// Root system of the given type; panics on an unknown label.
pub fn root_system(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap_or_else(|e| panic!("{label}: {e}"))
}

/// Structure table of the given type; panics on an unknown label.
pub fn structure_table(label: &str) -> StructureTable {
    build_structure_table(&root_system(label)).unwrap_or_else(|e| panic!("{label}: {e}"))
}

/// Every registered orbit of a structure table, in increasing dimension.
pub fn orbits(st: &StructureTable) -> Vec<OrbitContext> {
    liehess::orbitctx::registered_orbits(st.rs())
        .into_iter()
        .map(|key| orbit_context(st, key).unwrap_or_else(|e| panic!("{key}: {e}")))
        .collect()
}

/// Every Hessenberg ideal of a structure table's root system.
pub fn ideals(st: &StructureTable) -> Vec<HessenbergIdeal> {
    enumerate_ideals(st.rs())
}
