mod common;

use heawood_core::{build_main_sle, circular_ladder, Gf3, Gf3Matrix};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = Gf3Matrix> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(0u8..3, r * c).prop_map(move |vals| {
            let rows: Vec<Vec<Gf3>> = vals
                .chunks(c)
                .map(|ch| ch.iter().map(|&v| Gf3::new(v as i64)).collect())
                .collect();
            Gf3Matrix::from_rows(&rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(m in matrix_strategy()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_is_idempotent(m in matrix_strategy()) {
        let once = m.rref();
        let twice = once.rref.rref();
        prop_assert_eq!(&twice.rref, &once.rref);
        prop_assert_eq!(twice.pivot_cols, once.pivot_cols);
    }

    #[test]
    fn rref_structure(m in matrix_strategy()) {
        let r = m.rref();
        prop_assert_eq!(r.rank, r.pivot_cols.len());
        prop_assert!(r.pivot_cols.windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in r.pivot_cols.iter().enumerate() {
            for k in 0..m.rows() {
                let expect = if k == i { Gf3::ONE } else { Gf3::ZERO };
                prop_assert_eq!(r.rref[(k, p)], expect);
            }
        }
    }

    #[test]
    fn nullspace_dimension_and_membership(m in matrix_strategy()) {
        let basis = m.nullspace_basis();
        prop_assert_eq!(basis.len() + m.rank(), m.cols());
        for x in &basis {
            prop_assert!(m.mul_vec(x).unwrap().iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn rank_matches_kernel_count(m in matrix_strategy()) {
        prop_assert_eq!(m.rank(), common::rank_brute(&m));
    }

    #[test]
    fn parametric_extension_is_a_kernel_vector(m in matrix_strategy(), seed in any::<u64>()) {
        let p = m.solve_parametric();
        let free: Vec<Gf3> = (0..p.free_cols.len()).map(|j| Gf3::new((seed >> (2 * j)) as i64)).collect();
        let x = p.evaluate(&free).unwrap();
        prop_assert!(m.mul_vec(&x).unwrap().iter().all(|v| v.is_zero()));
        let zero = p.evaluate(&vec![Gf3::ZERO; p.free_cols.len()]).unwrap();
        prop_assert!(zero.iter().all(|v| v.is_zero()));
    }
}

#[test]
fn cl3_kernel_is_two_dimensional() {
    let sys = build_main_sle(&circular_ladder(3).unwrap()).unwrap();
    assert_eq!(sys.rank(), 4);
    let kernel = common::kernel_brute(&sys.matrix);
    assert_eq!(kernel.len(), 9);
    assert_eq!(sys.matrix.nullspace_basis().len(), 2);
}

#[test]
fn cl3_zebra_complement_columns_are_dependent() {
    // figure labels {2,3,4,5} are v2 v3 w2 w3 = 1 2 4 5
    let sys = build_main_sle(&circular_ladder(3).unwrap()).unwrap();
    let sub = sys.matrix.select_columns(&[1, 2, 4, 5]).unwrap();
    let expected = common::rank_brute(&sub);
    assert_eq!(expected, 3);
    assert_eq!(sys.matrix.column_submatrix_rank(&[1, 2, 4, 5]).unwrap(), expected);
}

#[test]
fn cl3_constant_free_assignments_give_the_nonzero_vectors() {
    let sys = build_main_sle(&circular_ladder(3).unwrap()).unwrap();
    let p = sys.parametric();
    assert_eq!(p.free_cols.len(), 2);
    let mut nonzero = Vec::new();
    for a in Gf3::elements() {
        for b in Gf3::elements() {
            let x = p.evaluate(&[a, b]).unwrap();
            if x.iter().all(|v| !v.is_zero()) {
                nonzero.push(((a.value(), b.value()), x));
            }
        }
    }
    let assignments: Vec<_> = nonzero.iter().map(|(ab, _)| *ab).collect();
    assert_eq!(assignments, vec![(1, 1), (2, 2)]);
    let v: Vec<u8> = nonzero[1].1.iter().map(|x| x.value()).collect();
    assert_eq!(v, vec![1, 1, 1, 2, 2, 2]);
}
