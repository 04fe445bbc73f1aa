//! Fixtures shared by the benchmarks.

use heawood_core::{circular_ladder, CubicGraph, EmbeddedCubicGraph, HeawoodSystem};

/// Circular ladders with their face systems.
pub fn ladder_systems(sizes: &[usize]) -> Vec<(usize, EmbeddedCubicGraph, HeawoodSystem)> {
    sizes
        .iter()
        .map(|&n| {
            let g = circular_ladder(n).expect("n >= 3");
            let sys = HeawoodSystem::build(&g).expect("ladders are valid");
            (n, g, sys)
        })
        .collect()
}

pub fn ladder_cubic(n: usize) -> CubicGraph {
    CubicGraph::from_embedded(&circular_ladder(n).expect("n >= 3")).expect("ladders are cubic")
}
