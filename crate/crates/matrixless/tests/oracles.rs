//! Cross-module oracle tests: closed forms, quadrature references, and
//! cross-method consistency checks at moderate sizes.

use matrixless::{
    build_toeplitz, eigenvalues, extract, fourier_coefficients_by_quadrature, perfect_grid,
    predict, project_real_sorted, recover, sample_eigenvalues, symmetrize_tridiagonal,
    tridiag_exact_eigenvalues, Big, PrecisionContext, Scalar, SortOrder, SpectrumSample, Symbol,
};

fn tridiag53() -> Symbol<f64> {
    Symbol::from_decimal(-1, &["-2", "2", "-1"], 53).unwrap()
}

fn bilaplacian53() -> Symbol<f64> {
    Symbol::from_decimal(-2, &["1", "-4", "6", "-4", "1"], 53).unwrap()
}

/// `g` of the shifted bi-Laplacian: `-sin^4 t / (sin(t/4) sin^3(3t/4))`.
fn shifted_bilaplacian_g<T: Scalar>(theta: &T) -> T {
    let bits = theta.bits();
    let four = T::from_int(4, bits);
    let three = T::from_int(3, bits);
    let s1 = theta.sin();
    let s4 = theta.div(&four).sin();
    let s34 = three.mul(theta).div(&four).sin();
    s1.powi(4).div(&s4.mul(&s34.powi(3))).neg()
}

#[test]
fn balance_preserves_example_spectrum_at_n5() {
    // spectrum {2-sqrt6, 2-sqrt2, 2, 2+sqrt2, 2+sqrt6}
    let s = tridiag53();
    let t = build_toeplitz(&s, 5);
    let b = matrixless::balance(&t).unwrap();
    let ctx = PrecisionContext::double();
    let eigs = eigenvalues(&b, &ctx).unwrap();
    let sp = project_real_sorted(&eigs, &ctx, SortOrder::Ascending).unwrap();
    let exact = tridiag_exact_eigenvalues(&s, 5).unwrap();
    for (a, b) in sp.values.iter().zip(&exact.values) {
        assert!((a - b).abs() < 1e-13);
    }
}

#[test]
fn closed_form_matches_eigensolver_across_orders_f64() {
    // similarity of T_n(f) and T_n(g): same eigenvalues, tolerance 10^(-0.25 bits)
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let tol = 10f64.powf(-0.25 * 53.0);
    for n in [5usize, 31, 100] {
        let t = build_toeplitz(&s, n);
        let eigs = eigenvalues(&t, &ctx).unwrap();
        let sp = project_real_sorted(&eigs, &ctx, SortOrder::Ascending).unwrap();
        let exact = tridiag_exact_eigenvalues(&s, n).unwrap();
        for (a, b) in sp.values.iter().zip(&exact.values) {
            assert!((a - b).abs() <= tol, "n={n}: {a} vs {b}");
        }
    }
}

#[test]
fn eigensolver_at_128_bits_hits_closed_form_to_1e20() {
    let bits = 128;
    let s = Symbol::<Big>::from_decimal(-1, &["-2", "2", "-1"], bits).unwrap();
    let ctx = PrecisionContext::new(bits).unwrap();
    let t = build_toeplitz(&s, 100);
    let eigs = eigenvalues(&t, &ctx).unwrap();
    let sp = project_real_sorted(&eigs, &ctx, SortOrder::Ascending).unwrap();
    let exact = tridiag_exact_eigenvalues(&s, 100).unwrap();
    let bound = Big::parse_decimal("1e-20", bits).unwrap();
    for (a, b) in sp.values.iter().zip(&exact.values) {
        let rel = a.sub(b).abs().div(&b.abs().max_val(&Big::one(bits)));
        assert!(rel < bound, "relative error {}", rel.to_decimal());
    }
}

#[test]
fn imaginary_spectrum_fails_realness_at_any_precision() {
    // f_1 * f_-1 < 0 gives a genuinely complex spectrum; the realness
    // gate must reject it and suggest the remedy
    let s = Symbol::<f64>::from_decimal(-1, &["-1", "0", "1"], 53).unwrap();
    let ctx = PrecisionContext::double();
    let t = build_toeplitz(&s, 12);
    let eigs = eigenvalues(&t, &ctx).unwrap();
    match project_real_sorted(&eigs, &ctx, SortOrder::Ascending) {
        Err(matrixless::Error::SpectrumNotReal {
            order: 12,
            bits: 53,
            ..
        }) => {}
        other => panic!("unexpected: {other:?}"),
    }
}

#[test]
fn perfect_grid_bilaplacian_closed_form() {
    // xi_j = 2 asin(lambda_j^(1/4) / 2), here at n = 50 to 1e-12
    let s = bilaplacian53();
    let ctx = PrecisionContext::double();
    let n = 50;
    let t = build_toeplitz(&s, n);
    let eigs = eigenvalues(&t, &ctx).unwrap();
    let sp = project_real_sorted(&eigs, &ctx, SortOrder::Ascending).unwrap();
    let g = |t: &f64| 6.0 - 8.0 * t.cos() + 2.0 * (2.0 * t).cos();
    let tol = 1e-12;
    let pg = perfect_grid(g, &sp, &tol).unwrap();
    for (xi, lam) in pg.xi.iter().zip(&sp.values) {
        let closed = 2.0 * (lam.powf(0.25) / 2.0).asin();
        assert!((xi - closed).abs() < 1e-12, "xi {xi} vs {closed}");
    }
}

#[test]
fn perfect_grid_shifted_bilaplacian_at_128_bits() {
    let bits = 128;
    let ctx = PrecisionContext::new(bits).unwrap();
    let s = Symbol::<Big>::from_decimal(-3, &["1", "-4", "6", "-4", "1"], bits).unwrap();
    let t = build_toeplitz(&s, 5);
    let eigs = eigenvalues(&t, &ctx).unwrap();
    let sp = project_real_sorted(&eigs, &ctx, SortOrder::Ascending).unwrap();
    let tol = Big::parse_decimal("1e-20", bits).unwrap();
    let pg = perfect_grid(shifted_bilaplacian_g::<Big>, &sp, &tol).unwrap();
    for r in &pg.residuals {
        assert!(*r < tol, "residual {}", r.to_decimal());
    }
    // the grid must be interior and increasing for an increasing g
    let pi = Big::pi(bits);
    for w in pg.xi.windows(2) {
        assert!(w[0] < w[1]);
    }
    assert!(pg.xi[0] > Big::zero(bits) && pg.xi[4] < pi);
}

#[test]
fn quadrature_reproduces_known_cosine_polynomial() {
    // g = 6 - 8 cos + 2 cos 2t -> (6, -4, 1, 0, ...)
    let coeffs = fourier_coefficients_by_quadrature(
        |t: &f64| 6.0 - 8.0 * t.cos() + 2.0 * (2.0 * t).cos(),
        8,
        1 << 10,
        53,
    )
    .unwrap();
    let want = [6.0, -4.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    for (c, w) in coeffs.iter().zip(want) {
        assert!((c - w).abs() < 1e-12);
    }
}

#[test]
fn quadrature_matches_reference_table_at_128_bits() {
    // first three cosine coefficients of the shifted bi-Laplacian g
    let bits = 128;
    let coeffs =
        fourier_coefficients_by_quadrature(shifted_bilaplacian_g::<Big>, 3, 1 << 16, bits).unwrap();
    let want = [
        "-4.000000000000000",
        "-2.423215805461417",
        "-0.354481702999765",
    ];
    // the reference values are 16-digit prints, so agreement is capped
    // at their rounding level
    let tol = Big::parse_decimal("2e-15", bits).unwrap();
    for (c, w) in coeffs.iter().zip(want) {
        let w = Big::parse_decimal(w, bits).unwrap();
        assert!(
            c.sub(&w).abs() < tol,
            "coefficient {} vs reference {}",
            c.to_decimal(),
            w.to_decimal()
        );
    }
}

#[test]
fn extraction_rows_vanish_for_exact_grid_symbol_f64() {
    // eigenvalues sit exactly on g(theta_j), so c_k = 0 for k >= 1
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let table = extract(&s, 31, 2, &ctx, SortOrder::Ascending).unwrap();
    let g = symmetrize_tridiagonal(&s).unwrap();
    let grid = table.grid();
    // row 0 is g on the grid
    for (j, theta) in grid.points.iter().enumerate() {
        let want = matrixless::eval_symbol(&g, theta).re;
        assert!((table.row(0)[j] - want).abs() < 1e-7, "j={j}");
    }
    let scale = table.row_max_abs(0);
    for k in 1..=2 {
        assert!(
            table.row_max_abs(k) <= 1e-6 * scale,
            "row {k} should vanish"
        );
    }
}

#[test]
fn descending_extraction_reverses_row0_and_flips_odd_coefficients() {
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let asc = extract(&s, 15, 1, &ctx, SortOrder::Ascending).unwrap();
    let desc = extract(&s, 15, 1, &ctx, SortOrder::Descending).unwrap();
    let mut reversed: Vec<f64> = desc.row(0).to_vec();
    reversed.reverse();
    for (a, b) in asc.row(0).iter().zip(&reversed) {
        assert!((a - b).abs() < 1e-9);
    }
    // recovery duality: odd-k coefficients flip sign only
    let ra = recover(&asc).unwrap();
    let rd = recover(&desc).unwrap();
    for k in 0..6 {
        let want = if k % 2 == 1 { -rd.ghat[k] } else { rd.ghat[k] };
        assert!((ra.ghat[k] - want).abs() < 1e-7, "k={k}");
    }
}

#[test]
fn alpha_zero_sampling_is_plain_sorted_spectrum() {
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let e = sample_eigenvalues(&s, 9, 0, &ctx, SortOrder::Ascending).unwrap();
    let exact = tridiag_exact_eigenvalues(&s, 9).unwrap();
    for j in 0..9 {
        assert!((e.at(0, j) - exact.values[j]).abs() < 1e-12);
    }
}

#[test]
fn prediction_hits_closed_form_at_n200_from_small_table() {
    let bits = 128;
    let s = Symbol::<Big>::from_decimal(-1, &["-2", "2", "-1"], bits).unwrap();
    let ctx = PrecisionContext::new(bits).unwrap();
    let table = extract(&s, 31, 2, &ctx, SortOrder::Ascending).unwrap();
    // degree 8: the n0 = 31 grid is coarse, degree 4 stalls near 1e-7
    let pred = predict(&table, 200, 8).unwrap();
    let exact = tridiag_exact_eigenvalues(&s, 200).unwrap();
    let bound = Big::parse_decimal("1e-8", bits).unwrap();
    let mut worst = Big::zero(bits);
    for (p, e) in pred.values.iter().zip(&exact.values) {
        worst = worst.max_val(&p.sub(e).abs());
    }
    assert!(worst < bound, "max prediction error {}", worst.to_decimal());
}

#[test]
fn interpolation_agrees_with_recovered_series_away_from_ends() {
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let table = extract(&s, 31, 2, &ctx, SortOrder::Ascending).unwrap();
    let rs = recover(&table).unwrap();
    assert_eq!(rs.rctp_degree, Some(1));
    let pi = std::f64::consts::PI;
    for frac in [0.2, 0.35, 0.5, 0.65, 0.8] {
        let theta = pi * frac;
        let a = matrixless::interpolate_row(&table, 0, &theta, 4);
        let b = matrixless::eval_recovered(&rs, &theta, None);
        assert!((a - b).abs() < 1e-6, "theta={theta}: {a} vs {b}");
    }
}

#[test]
fn identical_inputs_give_bit_identical_outputs() {
    // native doubles
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let a = extract(&s, 9, 2, &ctx, SortOrder::Ascending).unwrap();
    let b = extract(&s, 9, 2, &ctx, SortOrder::Ascending).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());

    // software floats
    let bits = 128;
    let ctx = PrecisionContext::new(bits).unwrap();
    let s = Symbol::<Big>::from_decimal(-4, &["-1", "2", "-2", "9", "0", "7", "-1", "1"], bits)
        .unwrap();
    let t = build_toeplitz(&s, 24);
    let e1 = eigenvalues(&t, &ctx).unwrap();
    let e2 = eigenvalues(&t, &ctx).unwrap();
    for (x, y) in e1.iter().zip(&e2) {
        assert_eq!(x.re.to_decimal(), y.re.to_decimal());
        assert_eq!(x.im.to_decimal(), y.im.to_decimal());
    }
}

#[test]
fn compare_flags_low_precision_reference() {
    let s = tridiag53();
    let ctx = PrecisionContext::double();
    let table = extract(&s, 15, 1, &ctx, SortOrder::Ascending).unwrap();
    let pred = predict(&table, 40, 4).unwrap();
    let exact = tridiag_exact_eigenvalues(&s, 40).unwrap();
    let report = matrixless::compare(&pred, &exact).unwrap();
    assert!(report.low_precision_reference);
    // n0 = 15 with degree 4 leaves visible endpoint interpolation error
    assert!(report.max_abs < 1e-3);
    assert_eq!(report.abs_errors.len(), 40);

    let exact_sample = SpectrumSample::from_real(exact.values.clone(), SortOrder::Ascending, 128);
    let report = matrixless::compare(&pred, &exact_sample).unwrap();
    assert!(!report.low_precision_reference);
}
