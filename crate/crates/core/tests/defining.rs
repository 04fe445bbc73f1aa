mod common;

use common::{all_subsets, set};
use heawood_core::{
    catalog, circular_ladder, combination_support, k4, DefiningAnalyzer, DefiningMode, EmbeddedCubicGraph, VertexSet,
};
use proptest::prelude::*;

// figure labels 1..6 -> generator ids
const FIG: [usize; 6] = [0, 1, 2, 4, 5, 3];

fn fig(labels: &[usize]) -> VertexSet {
    labels.iter().map(|&l| FIG[l - 1]).collect()
}

fn small_planar(max_vertices: usize) -> Vec<(String, EmbeddedCubicGraph)> {
    catalog()
        .into_iter()
        .filter_map(|e| e.embedded().cloned().map(|g| (e.name.clone(), g)))
        .filter(|(_, g)| g.n_vertices() <= max_vertices)
        .collect()
}

fn complement(nv: usize, s: &VertexSet) -> Vec<usize> {
    (0..nv).filter(|v| !s.contains(v)).collect()
}

#[test]
fn three_duality_computations_agree() {
    for (name, g) in small_planar(10) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        let kernel = common::kernel_brute(&a.system().matrix);
        let nv = g.n_vertices();
        for s in all_subsets(nv) {
            let by_rank = a.is_linear_defining(&s).unwrap();
            let by_scan = common::linear_defining_brute(&kernel, &s);
            let sub = a.system().matrix.select_columns(&complement(nv, &s)).unwrap();
            let by_nullspace = sub.nullspace_basis().is_empty();
            assert_eq!(by_rank, by_scan, "{name} {s:?}");
            assert_eq!(by_rank, by_nullspace, "{name} {s:?}");
        }
    }
}

#[test]
fn witness_exists_exactly_when_complement_rank_drops() {
    for (name, g) in small_planar(10) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        let rows = a.system().matrix.rows();
        let nv = g.n_vertices();
        for t in all_subsets(nv) {
            let rank = a.system().matrix.column_submatrix_rank(&complement(nv, &t)).unwrap();
            let w = a.zebra_witness(&t).unwrap();
            assert_eq!(w.is_some(), rank < rows, "{name} {t:?}");
            if let Some(w) = w {
                assert!(w.row_coefficients.iter().any(|c| !c.is_zero()));
                assert!(w.support.is_subset(&t));
                assert_eq!(combination_support(a.system(), &w.row_coefficients).unwrap(), w.support);
            }
        }
    }
}

#[test]
fn witnesses_and_defining_sets_of_size_n_minus_one_are_complementary() {
    for (name, g) in small_planar(12) {
        if g.is_bipartite().is_some() {
            continue;
        }
        let a = DefiningAnalyzer::new(&g).unwrap();
        for s in all_subsets(g.n_vertices()).into_iter().filter(|s| s.len() == g.n() - 1) {
            let has_zebra = a.zebra_witness(&s).unwrap().is_some();
            assert_eq!(a.is_linear_defining(&s).unwrap(), !has_zebra, "{name} {s:?}");
        }
    }
}

#[test]
fn monotonicity() {
    for (name, g) in small_planar(10) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        let nv = g.n_vertices();
        for mode in [DefiningMode::Linear, DefiningMode::Heawood] {
            let table: Vec<bool> = (0u32..1 << nv)
                .map(|m| a.is_defining(&(0..nv).filter(|&v| m >> v & 1 == 1).collect(), mode).unwrap())
                .collect();
            for m in 0..table.len() {
                for v in 0..nv {
                    let sup = m | 1 << v;
                    assert!(!table[m] || table[sup], "{name} {mode:?} {m:b}");
                }
            }
        }
    }
}

#[test]
fn linear_defining_implies_heawood_defining() {
    for (name, g) in small_planar(12) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        for s in all_subsets(g.n_vertices()) {
            if a.is_linear_defining(&s).unwrap() {
                assert!(a.is_heawood_defining(&s).unwrap(), "{name} {s:?}");
            }
        }
    }
}

#[test]
fn cl3_singletons_are_heawood_but_not_linear_defining() {
    let a = DefiningAnalyzer::new(&circular_ladder(3).unwrap()).unwrap();
    for v in 0..6 {
        let s = set(&[v]);
        assert!(a.is_heawood_defining(&s).unwrap());
        assert!(!a.is_linear_defining(&s).unwrap());
    }
}

#[test]
fn cl3_linear_minimal_sets_from_kernel_scan() {
    let a = DefiningAnalyzer::new(&circular_ladder(3).unwrap()).unwrap();
    let kernel = common::kernel_brute(&a.system().matrix);
    let defining: Vec<VertexSet> = all_subsets(6)
        .into_iter()
        .filter(|s| common::linear_defining_brute(&kernel, s))
        .collect();
    let mut expected: Vec<VertexSet> = defining
        .iter()
        .filter(|s| s.iter().all(|v| !defining.contains(&s.iter().copied().filter(|x| x != v).collect())))
        .cloned()
        .collect();
    expected.sort_by(|x, y| x.len().cmp(&y.len()).then(x.cmp(y)));
    let got = a.minimal_defining_sets(DefiningMode::Linear, 6).unwrap();
    assert_eq!(got, expected);
    assert_eq!(got.len(), 12);
    assert!(got.iter().all(|s| s.len() == 2));
    for z in [[1, 6], [2, 4], [3, 5]] {
        assert!(!got.contains(&fig(&z)));
    }
}

#[test]
fn n_subsets_always_carry_a_witness() {
    for (name, g) in small_planar(12) {
        if g.is_bipartite().is_some() {
            continue;
        }
        let a = DefiningAnalyzer::new(&g).unwrap();
        for s in all_subsets(g.n_vertices()).into_iter().filter(|s| s.len() == g.n()) {
            let w = a.zebra_witness(&s).unwrap().unwrap_or_else(|| panic!("{name} {s:?}"));
            assert!(!w.support.is_empty());
        }
    }
}

#[test]
fn empty_support_only_for_bipartite_graphs() {
    for (name, g) in small_planar(12) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        let w = a.zebra_witness(&VertexSet::new()).unwrap();
        assert_eq!(w.is_some(), g.is_bipartite().is_some(), "{name}");
    }
    assert!(DefiningAnalyzer::new(&k4()).unwrap().zebra_witness(&VertexSet::new()).unwrap().is_none());
}

#[test]
fn free_variable_sets_are_linear_defining() {
    for (name, g) in small_planar(20) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        let f = a.free_variable_defining_set();
        let expected = if f.bipartite { g.n() } else { g.n() - 1 };
        assert_eq!(f.vertices.len(), expected, "{name}");
        assert!(a.is_linear_defining(&f.vertices).unwrap(), "{name}");
    }
}

proptest! {
    #[test]
    fn heawood_defining_is_injectivity(n in 3usize..6, mask in any::<u16>()) {
        let g = circular_ladder(n).unwrap();
        let a = DefiningAnalyzer::new(&g).unwrap();
        let s: VertexSet = (0..2 * n).filter(|&v| mask >> v & 1 == 1).collect();
        let vs = a.vectors();
        let mut collide = false;
        for (i, x) in vs.iter().enumerate() {
            for y in &vs[i + 1..] {
                collide |= s.iter().all(|&v| x.spins[v] == y.spins[v]);
            }
        }
        prop_assert_eq!(a.is_heawood_defining(&s).unwrap(), !collide);
    }
}

#[test]
fn free_variable_sets_are_minimal_linear_defining() {
    for (name, g) in small_planar(16) {
        let a = DefiningAnalyzer::new(&g).unwrap();
        let f = a.free_variable_defining_set().vertices;
        for v in &f {
            let mut smaller = f.clone();
            smaller.remove(v);
            assert!(!a.is_linear_defining(&smaller).unwrap(), "{name} without {v}");
        }
    }
}
