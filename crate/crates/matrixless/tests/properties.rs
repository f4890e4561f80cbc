//! Property tests for the structural invariants.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use matrixless::{
    build_toeplitz, eval_symbol, nested_sizes, project_real_sorted, recover, solve_dense,
    vandermonde_solve, Complex, DenseMatrix, ExpansionTable, PrecisionContext, SampledGrid,
    SortOrder, Symbol, TableMeta,
};

fn small_coeff() -> impl Strategy<Value = f64> {
    // exact dyadic rationals keep the matrices reproducible
    (-64i32..=64).prop_map(|v| v as f64 / 8.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn toeplitz_has_constant_diagonals(
        n in 1usize..=20,
        r in 0i64..=3,
        s in 0i64..=3,
        coeffs in proptest::collection::vec(small_coeff(), 1..=7),
    ) {
        let width = (r + s + 1) as usize;
        let mut c: Vec<f64> = coeffs.into_iter().cycle().take(width).collect();
        if c.iter().all(|x| *x == 0.0) {
            c[0] = 1.0;
        }
        let sym = Symbol::new(-r, c).unwrap();
        let t = build_toeplitz(&sym, n);
        for i in 0..n {
            for j in 0..n {
                let k = i as i64 - j as i64;
                let want = sym.coeff(k).copied().unwrap_or(0.0);
                prop_assert_eq!(*t.at(i, j), want);
            }
        }
    }

    #[test]
    fn symmetric_band_evaluates_real(
        theta in 0.0f64..std::f64::consts::PI,
        half in proptest::collection::vec(small_coeff(), 1..=3),
        center in small_coeff(),
    ) {
        let mut coeffs: Vec<f64> = half.iter().rev().copied().collect();
        coeffs.push(center);
        coeffs.extend(half.iter());
        if coeffs.iter().all(|x| *x == 0.0) {
            return Ok(());
        }
        let r = half.len() as i64;
        let sym = Symbol::new(-r, coeffs.clone()).unwrap();
        let v = eval_symbol(&sym, &theta);
        let scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
        prop_assert!(v.im.abs() <= 2.0f64.powi(-48) * scale.max(1.0));
    }

    #[test]
    fn vandermonde_round_trip_is_exact(
        n0 in 2usize..=10,
        alpha in 0usize..=6,
        values in proptest::collection::vec(-4.0f64..4.0, 7 * 11),
    ) {
        // invent a c_k table, synthesize E = V * C, recover C
        let sizes = nested_sizes(n0, alpha).unwrap();
        let hs: Vec<f64> = sizes.iter().map(|nk| 1.0 / (*nk as f64 + 1.0)).collect();
        let mut c = DenseMatrix::<f64>::zeros(alpha + 1, n0, 53);
        for k in 0..=alpha {
            for j in 0..n0 {
                *c.at_mut(k, j) = values[k * n0 + j];
            }
        }
        let mut e = DenseMatrix::<f64>::zeros(alpha + 1, n0, 53);
        for (lvl, h) in hs.iter().enumerate() {
            for j in 0..n0 {
                let mut acc = 0.0;
                for k in (0..=alpha).rev() {
                    acc = acc * h + c.at(k, j);
                }
                *e.at_mut(lvl, j) = acc;
            }
        }
        let back = vandermonde_solve(&hs, &e).unwrap();
        // solver roundoff is amplified by the conditioning of the
        // Vandermonde, so bound the forward error by kappa_inf(V)
        let levels = alpha + 1;
        let mut v = DenseMatrix::<f64>::zeros(levels, levels, 53);
        for i in 0..levels {
            for j in 0..levels {
                *v.at_mut(i, j) = hs[i].powi(j as i32);
            }
        }
        let vinv = solve_dense(&v, &DenseMatrix::identity(levels, 53)).unwrap();
        let kappa = v.norm_inf() * vinv.norm_inf();
        let scale = (0..=alpha)
            .flat_map(|k| (0..n0).map(move |j| k * n0 + j))
            .fold(1.0f64, |acc, idx| acc.max(values[idx].abs()));
        let tol = 100.0 * 2.0f64.powi(-52) * kappa * scale;
        for k in 0..=alpha {
            for j in 0..n0 {
                prop_assert!(
                    (back.at(k, j) - c.at(k, j)).abs() < tol,
                    "k={} j={} kappa={:.2e}: {} vs {}", k, j, kappa, back.at(k, j), c.at(k, j)
                );
            }
        }
    }

    #[test]
    fn projection_preserves_length_and_order(
        mut res in proptest::collection::vec(-100.0f64..100.0, 1..40),
        descending in any::<bool>(),
    ) {
        let ctx = PrecisionContext::double();
        let eigs: Vec<Complex<f64>> = res.iter().map(|r| Complex::real(*r)).collect();
        let order = if descending { SortOrder::Descending } else { SortOrder::Ascending };
        let sample = project_real_sorted(&eigs, &ctx, order).unwrap();
        prop_assert_eq!(sample.values.len(), res.len());
        res.sort_by(f64::total_cmp);
        if descending {
            res.reverse();
        }
        prop_assert_eq!(sample.values, res);
    }

    #[test]
    fn solve_multiply_back_residual_is_bounded(
        n in 1usize..=12,
        m in 1usize..=3,
        entries in proptest::collection::vec(-1.0f64..1.0, 12 * 12 + 12 * 3),
    ) {
        let mut a = DenseMatrix::<f64>::zeros(n, n, 53);
        let mut b = DenseMatrix::<f64>::zeros(n, m, 53);
        for i in 0..n {
            for j in 0..n {
                *a.at_mut(i, j) = entries[i * n + j];
            }
            *a.at_mut(i, i) += 8.0; // keep it comfortably nonsingular
            for j in 0..m {
                *b.at_mut(i, j) = entries[n * n + i * m + j];
            }
        }
        let x = solve_dense(&a, &b).unwrap();
        let r = a.residual_inf(&x, &b).unwrap();
        let eps = 2.0f64.powi(-52);
        let c = 100.0;
        prop_assert!(r <= c * (n as f64) * eps * a.norm_inf() * x.norm_inf().max(1.0));
    }

    #[test]
    fn rctp_recovery_hits_coefficients_and_degree(
        degree in 0usize..=10,
        raw in proptest::collection::vec(-2.0f64..2.0, 11),
    ) {
        // random even cosine polynomial of the given degree on n0 = 64
        let n0 = 64usize;
        let mut ghat = vec![0.0f64; n0];
        ghat[..=degree].copy_from_slice(&raw[..=degree]);
        // make the leading coefficient unambiguous
        if degree > 0 && ghat[degree].abs() < 0.25 {
            ghat[degree] = 0.5_f64.copysign(raw[degree] + 0.1);
        }
        let grid = SampledGrid::<f64>::new(n0, 53);
        let c0: Vec<f64> = grid
            .points
            .iter()
            .map(|t| {
                let mut acc = ghat[0];
                for (k, g) in ghat.iter().enumerate().take(degree + 1).skip(1) {
                    acc += 2.0 * g * (k as f64 * t).cos();
                }
                acc
            })
            .collect();
        let meta = TableMeta {
            n0,
            alpha: 0,
            bits: 53,
            order: SortOrder::Ascending,
            sizes: vec![n0],
        };
        let table = ExpansionTable::from_parts(
            meta,
            DenseMatrix::from_vec(1, n0, c0).unwrap(),
        )
        .unwrap();
        let rs = recover(&table).unwrap();
        for k in 0..n0 {
            let want = if k <= degree { ghat[k] } else { 0.0 };
            prop_assert!(
                (rs.ghat[k] - want).abs() < 1e-10,
                "k={}: {} vs {}", k, rs.ghat[k], want
            );
        }
        prop_assert_eq!(rs.rctp_degree, Some(degree));
    }
}
