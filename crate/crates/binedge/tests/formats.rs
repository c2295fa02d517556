use binedge::format::{GraphDoc, IdealDoc};
use binedge::text::{format_polynomial, parse_polynomial};
use binedge_core::binomial::binomial_edge_ideal;
use binedge_core::graph::Family;
use binedge_core::poly::{ideal_equal, Fp, MonomialOrder, Rational};
use binedge_core::Limits;
use proptest::prelude::*;

#[test]
fn ideal_document_round_trip() {
    let g = Family::Crown(3).generate().unwrap();
    let j = binomial_edge_ideal::<Rational>(&g, MonomialOrder::LEX, ()).unwrap();
    let doc = IdealDoc::from_ideal(&j);
    assert_eq!(doc.gens[0], "x1*y4 - x4*y1");
    let text = serde_json::to_string(&doc).unwrap();
    let back: IdealDoc = serde_json::from_str(&text).unwrap();
    let k = back.to_ideal::<Rational>(()).unwrap();
    assert!(ideal_equal(&j, &k, &Limits::default()).unwrap());
    assert!(back.to_ideal::<Fp>(7).is_err());
}

proptest! {
    #[test]
    fn graph_documents_round_trip(n in 1usize..10, bits in any::<u64>()) {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push([a, b]);
                }
                k += 1;
            }
        }
        let doc = GraphDoc { n, edges };
        let g = doc.to_graph().unwrap();
        let again = GraphDoc::from_graph(&g);
        prop_assert_eq!(&again, &doc);
        let json = serde_json::to_string(&again).unwrap();
        prop_assert_eq!(serde_json::from_str::<GraphDoc>(&json).unwrap(), doc);
    }

    #[test]
    fn polynomial_text_round_trip(terms in prop::collection::vec((-20i64..20, 1usize..=4, 0u8..3, 1usize..=4, 0u8..3), 0..6)) {
        let mut s = String::from("0");
        for &(c, i, a, j, b) in &terms {
            let sign = if c < 0 { '-' } else { '+' };
            s.push_str(&format!(" {sign} {}*x{i}^{a}*y{j}^{b}", c.abs()));
        }
        let f = parse_polynomial::<Rational>(&s, 4, MonomialOrder::LEX, ()).unwrap();
        let printed = format_polynomial(&f, 4);
        let g = parse_polynomial::<Rational>(&printed, 4, MonomialOrder::LEX, ()).unwrap();
        prop_assert_eq!(f, g);
    }
}
