//! Cross-module consistency checks that tie the independent computation
//! routes together on graphs beyond the unit-test fixtures.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sympoly_core::ehrhart::{h_star, polar_dual_points, DEFAULT_LATTICE_VERTEX_CAP};
use sympoly_core::exact::factorial;
use sympoly_core::facets::count_facets;
use sympoly_core::families::{edge_join_facets, edge_join_hstar, gamma_convolution};
use sympoly_core::flows::dual_points_via_mobius;
use sympoly_core::graph::{
    complete, cycle, edge_join, path, vertex_join, wheel, Graph, DEFAULT_CYCLE_BUDGET,
    DEFAULT_FLATS_EDGE_CAP,
};
use sympoly_core::volume::normalized_volume;

fn random_connected(rng: &mut StdRng, max_n: usize, max_m: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.55) {
                    edges.push((u, v));
                }
            }
        }
        if edges.len() > max_m {
            continue;
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// The central cross-method check: triangulation count equals
/// (n-1)! times the Ehrhart leading coefficient.
#[test]
fn volume_equals_scaled_ehrhart_leading_coefficient() {
    let mut graphs = vec![
        cycle(4),
        cycle(5),
        cycle(6),
        complete(4),
        wheel(4),
        path(5),
        edge_join(&cycle(3), (0, 1), &cycle(3), (0, 1)).unwrap(),
    ];
    let mut rng = StdRng::seed_from_u64(2024_0001);
    for _ in 0..8 {
        graphs.push(random_connected(&mut rng, 6, 12));
    }
    for g in &graphs {
        let tri = BigInt::from(normalized_volume(g, DEFAULT_CYCLE_BUDGET).unwrap());
        let data = h_star(g, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        let lead = data.ehrhart.leading().cloned().unwrap_or_else(BigRational::zero)
            * BigRational::from_integer(factorial(data.dim as u64));
        assert!(lead.is_integer(), "{g:?}");
        assert_eq!(lead.to_integer(), tri, "{g:?}");
        assert_eq!(data.volume(), tri, "{g:?}");
    }
}

/// Edge joins with a bipartite factor: facet and volume products, the h*
/// quotient identity, and the gamma convolution.
#[test]
fn edge_join_identities() {
    // (C4, C4) and (K3, C4) admit the full interpolation cross-check.
    for g1 in [cycle(4), complete(3)] {
        let joined = edge_join(&g1, (0, 1), &cycle(4), (0, 1)).unwrap();
        let h1 = h_star(&g1, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        let h2 = h_star(&cycle(4), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        let joined_data = h_star(&joined, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
        assert_eq!(
            edge_join_hstar(&h1.hstar, &h2.hstar).unwrap(),
            joined_data.hstar
        );
        let conv = gamma_convolution(&h1.gamma, &h2.gamma);
        assert_eq!(conv[..joined_data.gamma.len()], joined_data.gamma);
        assert!(conv[joined_data.gamma.len()..].iter().all(Zero::is_zero));
    }

    // (C4, C6) is out of reach for dilate interpolation (dimension 7), so
    // check the facet product, the triangulated volume and h*(1) instead.
    let joined = edge_join(&cycle(4), (0, 1), &cycle(6), (0, 1)).unwrap();
    let f = count_facets(&joined).unwrap();
    assert_eq!(BigInt::from(f), edge_join_facets(&BigInt::from(6), &BigInt::from(20)));
    let vol = normalized_volume(&joined, DEFAULT_CYCLE_BUDGET).unwrap();
    assert_eq!(vol, 12 * 60 / 2);
    let h_c4 = h_star(&cycle(4), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
    let h_c6 = h_star(&cycle(6), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
    let predicted = edge_join_hstar(&h_c4.hstar, &h_c6.hstar).unwrap();
    let predicted_vol: BigInt = predicted.coeffs().iter().sum();
    assert_eq!(predicted_vol, BigInt::from(vol));
}

/// Identifying a vertex multiplies h* (and so volume); the disjoint-sum
/// polytope is the same.
#[test]
fn vertex_join_multiplies_hstar() {
    let joined = vertex_join(&cycle(3), 0, &cycle(4), 0).unwrap();
    let h1 = h_star(&cycle(3), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
    let h2 = h_star(&cycle(4), DEFAULT_LATTICE_VERTEX_CAP).unwrap();
    let joined_data = h_star(&joined, DEFAULT_LATTICE_VERTEX_CAP).unwrap();
    assert_eq!(&h1.hstar * &h2.hstar, joined_data.hstar);
}

/// Facet parity and the bipartite bound on random graphs.
#[test]
fn facet_counts_structural_properties() {
    let mut rng = StdRng::seed_from_u64(2024_0002);
    for _ in 0..40 {
        let g = random_connected(&mut rng, 7, 14);
        let count = count_facets(&g).unwrap();
        assert_eq!(count % 2, 0, "{g:?}");
        if g.is_bipartite() {
            assert!(count <= 1 << (g.n() - 1), "{g:?}");
        }
    }
}

/// The Moebius route agrees with the direct dual count on every connected
/// graph in reach, planar or not.
#[test]
fn dual_points_routes_agree_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(2024_0003);
    for _ in 0..25 {
        let g = random_connected(&mut rng, 6, 11);
        let flats = g.flats(DEFAULT_FLATS_EDGE_CAP).unwrap();
        assert_eq!(
            polar_dual_points(&g).unwrap(),
            dual_points_via_mobius(&g, &flats).unwrap(),
            "{g:?}"
        );
    }
}

/// The even-cycle f-vector formula against the face lattice, one size past
/// the acceptance gate.
#[test]
fn c8_face_lattice_matches_formula() {
    use sympoly_core::facets::{face_lattice, incidence_structure, DEFAULT_FACE_DIM_CAP};
    use sympoly_core::families::cycle_invariants;
    let formula = cycle_invariants(4).unwrap().fvector;
    let inc = incidence_structure(&cycle(8)).unwrap();
    let (fvec, _) = face_lattice(&inc, DEFAULT_FACE_DIM_CAP).unwrap();
    let brute: Vec<BigInt> = fvec.iter().map(|&x| BigInt::from(x)).collect();
    assert_eq!(formula, brute);
}

/// Wheel closed forms against the general machinery up to n = 7.
#[test]
fn wheel_formulas_match_general_machinery() {
    use sympoly_core::families::{wheel_facets, wheel_volume};
    for n in 3..=7usize {
        let g = wheel(n);
        assert_eq!(
            BigInt::from(count_facets(&g).unwrap()),
            wheel_facets(n as u64).unwrap()
        );
        assert_eq!(
            BigInt::from(normalized_volume(&g, DEFAULT_CYCLE_BUDGET).unwrap()),
            wheel_volume(n as u64).unwrap()
        );
    }
}

/// Named fixtures for the dual-point agreement, one size past the gate.
#[test]
fn dual_points_routes_agree_on_fixtures() {
    let fixtures = [
        path(4),
        path(5),
        edge_join(&cycle(4), (0, 1), &cycle(4), (0, 1)).unwrap(),
        edge_join(&cycle(3), (0, 1), &cycle(3), (0, 1)).unwrap(),
        complete(4),
        wheel(5),
        wheel(6),
    ];
    for g in &fixtures {
        let flats = g.flats(DEFAULT_FLATS_EDGE_CAP).unwrap();
        assert_eq!(
            polar_dual_points(g).unwrap(),
            dual_points_via_mobius(g, &flats).unwrap(),
            "{g:?}"
        );
    }
}

/// Per-facet volumes are antipode-invariant and sum to the total.
#[test]
fn facet_volumes_sum_and_antipodes() {
    use sympoly_core::facets::enumerate_facets;
    use sympoly_core::volume::{facet_volume, forbidden_sets};
    for g in [cycle(4), cycle(5), complete(4), wheel(4)] {
        let forb = forbidden_sets(&g, DEFAULT_CYCLE_BUDGET).unwrap();
        let facets = enumerate_facets(&g).unwrap();
        let mut total = 0u64;
        for f in &facets {
            let (v, _) = facet_volume(&g, f, &forb).unwrap();
            let (va, _) = facet_volume(&g, &f.antipode(), &forb).unwrap();
            assert_eq!(v, va);
            total += v;
        }
        assert_eq!(total, normalized_volume(&g, DEFAULT_CYCLE_BUDGET).unwrap());
    }
}
