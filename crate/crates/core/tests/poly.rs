mod common;

use binedge_core::binomial::GraphIdealContext;
use binedge_core::graph::{Family, VertexSet};
use binedge_core::poly::*;
use binedge_core::{Error, Limits};
use common::*;

const LEX: MonomialOrder = MonomialOrder::LEX;

// two vertices: x1, x2, y1, y2 in slots 1..=4
fn f12() -> P {
    poly(4, LEX, &[(1, &[(1, 1), (4, 1)]), (-1, &[(2, 1), (3, 1)])])
}

fn ctx(f: Family) -> GraphIdealContext<Rational> {
    GraphIdealContext::new(f.generate().unwrap(), LEX, ()).unwrap()
}

#[test]
fn normal_form_examples() {
    let b = [f12()];
    assert!(normal_form(&f12(), &b, LEX).unwrap().is_zero());
    assert_eq!(normal_form(&var(4, 3), &b, LEX).unwrap(), var(4, 3));
    let f = poly(4, LEX, &[(1, &[(1, 1), (2, 1), (3, 1), (4, 1)])]);
    assert_eq!(normal_form(&f, &b, LEX).unwrap(), poly(4, LEX, &[(1, &[(2, 2), (3, 2)])]));
}

#[test]
fn buchberger_examples() {
    let lim = Limits::default();
    let scaled = f12().scale(&Rational::from_i64(-3, ()));
    assert_eq!(buchberger(&[scaled], LEX, &lim).unwrap(), [f12()]);

    let k3 = ctx(Family::Complete(3));
    let gb = k3.binomial_edge_ideal().groebner_basis(&lim).unwrap();
    assert_eq!(gb.len(), 3);
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        assert!(gb.contains(&k3.minor(i, j).unwrap()));
    }
    assert!(is_reduced_basis(gb));

    let gb = buchberger(&[var(4, 1), f12()], LEX, &lim).unwrap();
    let x2y1 = poly(4, LEX, &[(1, &[(2, 1), (3, 1)])]);
    assert_eq!(gb, [x2y1, var(4, 1)]);
    assert!(buchberger::<Rational>(&[], LEX, &lim).unwrap().is_empty());
}

#[test]
fn buchberger_respects_pair_cap() {
    let c = ctx(Family::Crown(3));
    let lim = Limits { max_pairs: 3, ..Limits::default() };
    let err = buchberger(c.binomial_edge_ideal().gens(), LEX, &lim).unwrap_err();
    assert!(err.is_resource());
}

#[test]
fn membership_and_equality() {
    let lim = Limits::default();
    let j = ideal(4, vec![f12()]);
    assert!(ideal_member(&f12(), &j, &lim).unwrap());
    assert!(!ideal_member(&var(4, 1), &j, &lim).unwrap());
    let a = ideal(4, vec![var(4, 1), var(4, 3)]);
    let b = ideal(4, vec![var(4, 3), var(4, 1)]);
    assert!(ideal_equal(&a, &b, &lim).unwrap());

    let c4 = ctx(Family::Cycle(4));
    let p0 = c4.minimal_prime_ideal(VertexSet::EMPTY).unwrap();
    assert!(!ideal_equal(c4.binomial_edge_ideal(), &p0, &lim).unwrap());
    assert!(c4.binomial_edge_ideal().is_subset(&p0, &lim).unwrap());
}

#[test]
fn intersection_examples() {
    let lim = Limits::default();
    let x1 = ideal(4, vec![var(4, 1)]);
    let y1 = ideal(4, vec![var(4, 3)]);
    let meet = intersect(&x1, &y1, &lim).unwrap();
    assert!(ideal_equal(&meet, &monomial_ideal(4, &[0b0101]), &lim).unwrap());
    let j = ctx(Family::Crown(3)).binomial_edge_ideal().clone();
    assert!(ideal_equal(&intersect(&j, &j, &lim).unwrap(), &j, &lim).unwrap());
}

#[test]
fn colon_examples() {
    let lim = Limits::default();
    let i = monomial_ideal(4, &[0b0101]);
    let c = colon_poly(&i, &var(4, 1), &lim).unwrap();
    assert!(ideal_equal(&c, &ideal(4, vec![var(4, 3)]), &lim).unwrap());
    assert!(colon_poly(&i, &i.gens()[0], &lim).unwrap().is_unit(&lim).unwrap());
    assert!(matches!(colon_poly(&i, &P::zero(4, LEX, ()), &lim), Err(Error::DivisionByZero)));

    let j = ctx(Family::Crown(3)).binomial_edge_ideal().clone();
    let unit = Ideal::unit(12, LEX, ());
    assert!(ideal_equal(&colon_ideal(&j, &unit, &lim).unwrap(), &j, &lim).unwrap());
}

#[test]
fn colon_of_monomial_ideals_matches_oracle() {
    let lim = Limits::default();
    // <x1 y1, x1 y2> : <y1, y2> with x1, x2, y1, y2 at bits 0..4
    let a = [0b0101, 0b1001];
    let b = [0b0100, 0b1000];
    let expect = monomial_oracle::colon(&a, &b);
    assert_eq!(expect, [0b0001]);
    let got = colon_ideal(&monomial_ideal(4, &a), &monomial_ideal(4, &b), &lim).unwrap();
    let mut masks: Vec<u32> = got.groebner_basis(&lim).unwrap().iter().map(mask_of).collect();
    masks.sort_unstable();
    assert_eq!(masks, expect);
}

#[test]
fn hilbert_examples() {
    let lim = Limits::default();
    let zero = Ideal::<Rational>::zero(5, LEX, ());
    // C(d + 4, d)
    for (d, c) in [(0, 1), (1, 5), (2, 15), (3, 35), (6, 210)] {
        assert_eq!(hilbert_value(&zero, d, &lim).unwrap(), c);
    }
    assert_eq!(hilbert_value(&ideal(4, vec![f12()]), 2, &lim).unwrap(), 9);
    assert_eq!(hilbert_value(&ideal(7, vec![var(7, 1)]), 1, &lim).unwrap(), 6);
    assert_eq!(hilbert_value(&Ideal::<Rational>::unit(3, LEX, ()), 0, &lim).unwrap(), 0);
}

#[test]
fn hilbert_matches_linear_algebra() {
    let lim = Limits::default();
    for f in [Family::Cycle(4), Family::Path(3), Family::Complete(3), Family::Crown(3)] {
        let c = ctx(f);
        let j = c.binomial_edge_ideal();
        let d_max = if c.nvars() > 8 { 3 } else { 4 };
        for d in 0..=d_max {
            assert_eq!(hilbert_value(j, d, &lim).unwrap(), hilbert_by_linear_algebra(c.nvars(), j.gens(), d), "{d}");
        }
    }
}

#[test]
fn hilbert_node_cap_is_reported() {
    let zero = Ideal::<Rational>::zero(10, LEX, ());
    let lim = Limits { max_hilbert_nodes: 10, ..Limits::default() };
    let j = ctx(Family::Crown(3)).binomial_edge_ideal().clone();
    j.groebner_basis(&Limits::default()).unwrap();
    assert!(hilbert_value(&j, 6, &lim).unwrap_err().is_resource());
    // with no leading terms the count is closed form and needs no search
    assert_eq!(hilbert_value(&zero, 8, &lim).unwrap(), 24310);
}

#[test]
fn initial_degree_gap_examples() {
    let lim = Limits::default();
    for (f, gap) in [(Family::Cycle(4), 2), (Family::Complete(3), 1)] {
        let c = ctx(f);
        let j = c.binomial_edge_ideal();
        let p = c.minimal_prime_ideal(VertexSet::EMPTY).unwrap();
        let outer = colon_ideal(j, &p, &lim).unwrap();
        assert_eq!(initial_degree_gap(j, &outer, &lim).unwrap(), gap);
    }
    let j = ideal(4, vec![f12()]);
    assert!(matches!(initial_degree_gap(&j, &j, &lim), Err(Error::GapUndefined(_))));
    let inhomogeneous = ideal(4, vec![f12().checked_add(&var(4, 1)).unwrap()]);
    assert!(matches!(initial_degree_gap(&inhomogeneous, &Ideal::unit(4, LEX, ()), &lim), Err(Error::NotHomogeneous)));
    let larger = ideal(4, vec![var(4, 1)]);
    assert!(matches!(initial_degree_gap(&larger, &j, &lim), Err(Error::Precondition(_))));
}

#[test]
fn prime_field_agrees_with_rationals() {
    let lim = Limits::default();
    let g = Family::Crown(3).generate().unwrap();
    let q = GraphIdealContext::<Rational>::new(g.clone(), LEX, ()).unwrap();
    let p = GraphIdealContext::<Fp>::new(g, LEX, DEFAULT_PRIME).unwrap();
    let lead = |b: &[Polynomial<Rational>]| b.iter().map(|g| *g.leading_monomial().unwrap()).collect::<Vec<_>>();
    let lead_p = |b: &[Polynomial<Fp>]| b.iter().map(|g| *g.leading_monomial().unwrap()).collect::<Vec<_>>();
    assert_eq!(
        lead(q.binomial_edge_ideal().groebner_basis(&lim).unwrap()),
        lead_p(p.binomial_edge_ideal().groebner_basis(&lim).unwrap())
    );
}

#[test]
fn degrevlex_basis_generates_the_same_ideal() {
    let lim = Limits::default();
    let c = ctx(Family::Cycle(5));
    let j = c.binomial_edge_ideal();
    let drl = j.with_order(MonomialOrder::DEGREVLEX);
    for g in drl.groebner_basis(&lim).unwrap() {
        assert!(j.contains(&g.with_order(LEX), &lim).unwrap());
    }
    for d in 0..=4 {
        assert_eq!(hilbert_value(j, d, &lim).unwrap(), hilbert_value(&drl, d, &lim).unwrap());
    }
}
