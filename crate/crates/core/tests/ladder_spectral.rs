//! The ladder closed form against vectors built on actual ladder graphs.

use grovermaze::graph::{DecoratedGraph, Ladder, LadderArc};
use grovermaze::ladder::{
    chebyshev_u, decorated_ladder, kappa, psi_coefficients, residual_norm_sq, ClosedForm, LadderParams,
};
use grovermaze::spectral::{cycle_eigenvector, navigation_vector, path_eigenvector};
use grovermaze::walk::ArcVector;

fn params(m: usize, l: usize, k: usize) -> LadderParams {
    LadderParams::new(m, l, k).unwrap()
}

fn unit(v: ArcVector) -> ArcVector {
    let n = v.norm();
    &v * (1.0 / n)
}

fn gammas(ladder: &Ladder, g: &DecoratedGraph) -> Vec<ArcVector> {
    ladder.cycles.iter().map(|c| unit(cycle_eigenvector(g, c).unwrap())).collect()
}

fn dot(a: &ArcVector, b: &ArcVector) -> f64 {
    a.inner(b).re
}

fn grid() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=4).flat_map(|m| (1..=4).flat_map(move |l| (0..=5).map(move |k| (m, l, k))))
}

#[test]
fn cycle_vector_overlaps() {
    for (m, l, k) in grid() {
        let (ladder, g) = decorated_ladder(params(m, l, k));
        let gs = gammas(&ladder, &g);
        let xi = unit(path_eigenvector(&g, &ladder.route).unwrap());
        let expected = m as f64 / (2.0 * (l + m) as f64 * (m + 3) as f64).sqrt();
        assert!((dot(&gs[0], &xi) - expected).abs() < 1e-12);
        for (s, a) in gs.iter().enumerate() {
            let nonzero: Vec<f64> = a.iter().filter(|z| z.norm() > 0.0).map(|z| z.norm()).collect();
            assert_eq!(nonzero.len(), 4 * (l + m));
            let mag = 1.0 / (2.0 * ((l + m) as f64).sqrt());
            assert!(nonzero.iter().all(|x| (x - mag).abs() < 1e-15));
            for (t, b) in gs.iter().enumerate() {
                let expected = match s.abs_diff(t) {
                    0 => 1.0,
                    1 => kappa(m, l),
                    _ => 0.0,
                };
                assert!((dot(a, b) - expected).abs() < 1e-12, "({m},{l},{k}) <gamma_{s}, gamma_{t}>");
            }
        }
    }
}

#[test]
fn kappa_against_generated_cycles() {
    for ((m, l), expected) in [((2, 1), 1.0 / 3.0), ((1, 1), 0.25)] {
        let (ladder, g) = decorated_ladder(params(m, l, 1));
        let gs = gammas(&ladder, &g);
        assert!((dot(&gs[0], &gs[1]) - expected).abs() < 1e-15);
        assert!((kappa(m, l) - expected).abs() < 1e-15);
    }
}

fn psis(form: &ClosedForm, gs: &[ArcVector]) -> Vec<ArcVector> {
    (0..gs.len())
        .map(|n| {
            let coeffs = psi_coefficients(&form.params(), n).unwrap();
            let mut psi = ArcVector::zeros(gs[0].len());
            for (c, gamma) in coeffs.iter().zip(gs) {
                psi = &psi + &(gamma * *c);
            }
            psi
        })
        .collect()
}

#[test]
fn assembled_psi_family_is_orthonormal() {
    for (m, l, k) in grid() {
        let form = ClosedForm::new(params(m, l, k)).unwrap();
        let (ladder, g) = decorated_ladder(form.params());
        let gs = gammas(&ladder, &g);
        let ps = psis(&form, &gs);
        for (a, pa) in ps.iter().enumerate() {
            for (b, pb) in ps.iter().enumerate() {
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((dot(pa, pb) - expected).abs() < 1e-10, "({m},{l},{k}) <psi_{a}, psi_{b}>");
            }
            for (t, gamma) in gs.iter().enumerate().skip(a + 2) {
                assert!(dot(pa, gamma).abs() < 1e-12, "<psi_{a}, gamma_{t}>");
            }
        }
        // γ_n = a_n ψ_{n−1} + b_n ψ_n
        let kap = form.params().kappa();
        let u = |n: isize| form.cache().get(n);
        for n in 0..=k {
            let b_n = dot(&gs[n], &ps[n]);
            assert!((b_n * b_n - kap * u(n as isize + 1) / u(n as isize)).abs() < 1e-12);
            if n > 0 {
                let a_n = dot(&gs[n], &ps[n - 1]);
                assert!((a_n * a_n - kap * u(n as isize - 1) / u(n as isize)).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn residual_identity() {
    for (m, l, k) in grid() {
        let form = ClosedForm::new(params(m, l, k)).unwrap();
        let (ladder, g) = decorated_ladder(form.params());
        let gs = gammas(&ladder, &g);
        let xi = unit(path_eigenvector(&g, &ladder.route).unwrap());
        let projected: f64 = psis(&form, &gs).iter().map(|p| dot(p, &xi).powi(2)).sum();
        assert!((form.residual_norm_sq() - (1.0 - projected)).abs() < 1e-12, "({m},{l},{k})");

        // φ(s) = ξ(s) / ‖(I − Π_k)ξ‖ for the numerically computed φ
        let nav = navigation_vector(&g).unwrap();
        let from_spectral = xi[g.start_loop()].re.powi(2) / nav.start_amplitude.powi(2);
        assert!((form.residual_norm_sq() - from_spectral).abs() < 1e-12, "({m},{l},{k})");
    }
}

#[test]
fn residual_examples() {
    assert!((residual_norm_sq(&params(2, 1, 1)).unwrap() - 0.85).abs() < 1e-12);
    assert!((residual_norm_sq(&params(2, 1, 0)).unwrap() - 13.0 / 15.0).abs() < 1e-12);
    assert_eq!(chebyshev_u(&params(2, 1, 0), 3).unwrap(), 21.0);
}

#[test]
fn signed_closed_form_equals_spectral_vector() {
    for (m, l, k) in grid() {
        let form = ClosedForm::new(params(m, l, k)).unwrap();
        let (ladder, g) = decorated_ladder(form.params());
        let nav = navigation_vector(&g).unwrap();
        let closed = form.assemble(&ladder, &g);
        let dev = nav.vector.max_abs_diff(&closed);
        assert!(dev < 1e-10, "({m},{l},{k}) deviation {dev:.2e}");
    }
}

#[test]
fn first_rung_amplitude_2_1_1() {
    let (ladder, g) = decorated_ladder(params(2, 1, 1));
    let nav = navigation_vector(&g).unwrap();
    let rung0 = (0..g.base().arc_count()).find(|&a| ladder.role(a) == LadderArc::Rung(0)).unwrap();
    let expected = 5.0 / (8.0 * 10f64.sqrt()) / 0.85f64.sqrt();
    assert!((nav.vector[rung0].norm() - expected).abs() < 1e-10);
}
