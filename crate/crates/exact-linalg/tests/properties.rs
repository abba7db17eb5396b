use exact_linalg::{Matrix, Polynomial, Scalar};
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-5i64..=5, rows * cols).prop_map(move |v| {
        Matrix::from_vec(rows, cols, v.into_iter().map(Scalar::from_int).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| small_matrix(r, c))) {
        let k = m.nullspace();
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_round_trip(
        a in small_matrix(4, 3),
        x in small_matrix(3, 2),
    ) {
        let b = &a * &x;
        let sol = a.solve(&b).expect("constructed to be solvable");
        prop_assert_eq!(&a * &sol, b);
    }

    #[test]
    fn cayley_hamilton(m in (1usize..=5).prop_flat_map(|n| small_matrix(n, n))) {
        let p = m.char_poly();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(m.rows()));
        prop_assert!(p.eval_matrix(&m).is_zero());
    }

    #[test]
    fn min_poly_annihilates(m in (1usize..=4).prop_flat_map(|n| small_matrix(n, n))) {
        let p = m.min_poly();
        prop_assert!(p.eval_matrix(&m).is_zero());
        prop_assert!(m.char_poly().div_rem(&p).1.is_zero());
    }

    #[test]
    fn squarefree_multiplies_back(coeffs in proptest::collection::vec(-4i64..=4, 1..=6)) {
        let p = Polynomial::new(coeffs.into_iter().map(Scalar::from_int).collect());
        prop_assume!(!p.is_zero());
        let mut prod = Polynomial::one();
        let factors = p.squarefree_split();
        for (f, mult) in &factors {
            prop_assert!(f.is_monic());
            prop_assert!(f.gcd(&f.derivative()).degree() == Some(0) || f.degree() == Some(0));
            for _ in 0..*mult {
                prod = prod.mul(f);
            }
        }
        prop_assert_eq!(prod, p.monic());
        // pairwise coprime
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                prop_assert_eq!(factors[i].0.gcd(&factors[j].0).degree(), Some(0));
            }
        }
    }
}
