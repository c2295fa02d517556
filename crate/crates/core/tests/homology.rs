use binedge_core::binomial::GraphIdealContext;
use binedge_core::graph::{connected_graphs, Family, Graph};
use binedge_core::homology::*;
use binedge_core::poly::{Fp, MonomialOrder, Rational, DEFAULT_PRIME};
use binedge_core::primes::{heights, krull_dimension};
use binedge_core::Limits;

const Q: RankField = RankField::Rational;

fn ctx(g: Graph) -> GraphIdealContext<Rational> {
    GraphIdealContext::new(g, MonomialOrder::LEX, ()).unwrap()
}

fn pd(g: Graph) -> PdReport {
    projective_dimension(&ctx(g), Q, &Limits::default()).unwrap()
}

#[test]
fn initial_ideal_examples() {
    let lim = Limits::default();
    let p2 = ctx(Family::Path(2).generate().unwrap());
    // x1 y2 with x1 at bit 0 and y2 at bit 3
    assert_eq!(initial_ideal(p2.binomial_edge_ideal(), &lim).unwrap().gens(), [0b1001]);
    let c4 = ctx(Family::Cycle(4).generate().unwrap());
    let mi = initial_ideal(c4.binomial_edge_ideal(), &lim).unwrap();
    assert!(mi.gens().len() > 4);
    let k3 = ctx(Family::Complete(3).generate().unwrap());
    let mi = initial_ideal(k3.binomial_edge_ideal(), &lim).unwrap();
    assert_eq!(graded_betti(&mi, Q, false, &lim).unwrap().pd(), 2);
}

#[test]
fn complete_intersections_have_pd_equal_to_generator_count() {
    let lim = Limits::default();
    for k in 1..=5 {
        // k disjoint pairs of variables
        let gens = (0..k).map(|i| 0b11 << (2 * i)).collect();
        let mi = MonomialIdeal::new(2 * k, gens).unwrap();
        assert!(mi.is_complete_intersection());
        let t = graded_betti(&mi, Q, false, &lim).unwrap();
        assert_eq!(t.pd(), k);
        assert_eq!(pd_of_monomial_ideal(&mi, Q, &lim).unwrap(), k);
        // Koszul: β_i = C(k, i)
        assert_eq!(t.total(k), 1);
    }
}

#[test]
fn pd_matches_closed_forms() {
    let cases = [
        (Family::Path(3), PdFamily::Block(3)),
        (Family::Path(4), PdFamily::Block(4)),
        (Family::Path(5), PdFamily::Block(5)),
        (Family::Path(6), PdFamily::Block(6)),
        (Family::Complete(4), PdFamily::Block(4)),
        (Family::Cycle(4), PdFamily::Cycle(4)),
        (Family::Cycle(5), PdFamily::Cycle(5)),
        (Family::Cycle(6), PdFamily::Cycle(6)),
        (Family::Crown(3), PdFamily::Crown(3)),
        (Family::CompleteMultipartite(vec![2, 2]), PdFamily::CompleteMultipartite(vec![2, 2])),
        (Family::CompleteMultipartite(vec![2, 3]), PdFamily::CompleteMultipartite(vec![2, 3])),
        (Family::Wheel(4), PdFamily::Wheel(4)),
        (Family::Wheel(5), PdFamily::Wheel(5)),
    ];
    for (fam, closed) in cases {
        let r = pd(fam.generate().unwrap());
        assert_eq!(r.pd, pd_closed_form(&closed).unwrap(), "{fam:?}");
        assert!(r.equal, "{fam:?}");
    }
}

#[test]
fn cones_over_disconnected_graphs() {
    // cone over P_2 ⊔ P_2: max(4, 2 + 2)
    let base = Family::Path(2).generate().unwrap().disjoint_union(&Family::Path(2).generate().unwrap()).unwrap();
    let base_pd = pd(base.clone()).pd;
    let cone = Family::Empty(1).generate().unwrap().join(&base).unwrap();
    let closed = pd_closed_form(&PdFamily::Cone { n: 4, connected: false, base_pd }).unwrap();
    assert_eq!(pd(cone).pd, closed);
    // cone over P_3 ⊔ K_1: max(4, 2 + 2)
    let base = Family::Path(3).generate().unwrap().disjoint_union(&Family::Empty(1).generate().unwrap()).unwrap();
    let base_pd = pd(base.clone()).pd;
    let cone = Family::Empty(1).generate().unwrap().join(&base).unwrap();
    assert_eq!(pd(cone).pd, pd_closed_form(&PdFamily::Cone { n: 4, connected: false, base_pd }).unwrap());
}

#[test]
fn cones_over_connected_graphs() {
    let base = Family::Path(4).generate().unwrap();
    let cone = Family::Empty(1).generate().unwrap().join(&base).unwrap();
    let closed = pd_closed_form(&PdFamily::Cone { n: 4, connected: true, base_pd: 3 }).unwrap();
    assert_eq!(pd(cone).pd, closed);
}

#[test]
fn trees_have_pd_n_minus_1_and_paths_are_cohen_macaulay() {
    let lim = Limits::default();
    for n in 2..=6 {
        for g in connected_graphs(n).into_iter().filter(|g| g.edge_count() == n - 1) {
            let r = pd(g.clone());
            assert_eq!(r.pd, n - 1);
            // depth <= dim, with equality exactly for paths among trees
            let codim = 2 * n - krull_dimension(&g, &lim).unwrap();
            let path = (1..=n).all(|v| g.degree(v) <= 2);
            assert!(r.pd >= codim);
            assert_eq!(r.pd == codim, path, "{g:?}");
        }
    }
}

#[test]
fn lattice_support_agrees_with_exhaustive_table() {
    let lim = Limits::default();
    for n in 3..=5 {
        for g in connected_graphs(n) {
            let mi = initial_ideal(ctx(g.clone()).binomial_edge_ideal(), &lim).unwrap();
            let a = graded_betti(&mi, Q, false, &lim).unwrap();
            let b = graded_betti(&mi, Q, true, &lim).unwrap();
            assert_eq!(a, b, "{g:?}");
            assert_eq!(a.pd(), pd_of_monomial_ideal(&mi, Q, &lim).unwrap());
            // β_1 counts the minimal generators
            assert_eq!(a.total(1), mi.gens().len());
        }
    }
}

#[test]
fn pd_bounds_on_small_graphs() {
    let lim = Limits::default();
    for n in 4..=5 {
        for g in connected_graphs(n) {
            let c = GraphIdealContext::<Fp>::new(g.clone(), MonomialOrder::LEX, DEFAULT_PRIME).unwrap();
            let r = projective_dimension(&c, RankField::Prime(DEFAULT_PRIME), &lim).unwrap();
            assert!(r.pd >= heights(&g, &lim).unwrap().bigheight);
            assert!(r.pd <= 2 * n - 4);
            assert_eq!(r.pd == 2 * n - 4, is_join_with_2k1(&g), "{g:?}");
        }
    }
}

#[test]
fn prime_field_ranks_agree_on_families() {
    let lim = Limits::default();
    for fam in [Family::Crown(3), Family::Cycle(6), Family::Wheel(4)] {
        let g = fam.generate().unwrap();
        let mi = initial_ideal(ctx(g).binomial_edge_ideal(), &lim).unwrap();
        let q = graded_betti(&mi, Q, false, &lim).unwrap();
        let p = graded_betti(&mi, RankField::Prime(2), false, &lim).unwrap();
        assert_eq!(q, p, "{fam:?}");
    }
}

#[test]
fn face_cap_surfaces_as_resource_error() {
    let g = Family::Crown(3).generate().unwrap();
    let lim = Limits { max_faces: 10, ..Limits::default() };
    assert!(projective_dimension(&ctx(g), Q, &lim).unwrap_err().is_resource());
}
