mod common;

use vcwidth_core::{
    emit_td, enumerate_small_graphs, is_valid_triple, make_nice, parse_td, pathwidth_cvc, pathwidth_vc,
    trace_of_node, treewidth_vc_3k, treewidth_vc_4k, validate, CoverGraph, CoverMask, DecompositionKind, Graph,
    NiceKind, Solution, ValidTriple, VertexSet,
};

fn solutions(g: &Graph) -> Vec<(&'static str, Solution)> {
    vec![
        ("4k", treewidth_vc_4k(g, None).unwrap()),
        ("3k", treewidth_vc_3k(g, None).unwrap()),
        ("pw", pathwidth_vc(g, None).unwrap()),
        ("cvc", pathwidth_cvc(g).unwrap()),
    ]
}

#[test]
fn witnesses_validate_and_round_trip_through_td() {
    let mut rng = common::rng(3);
    let graphs: Vec<Graph> = (0..=4)
        .flat_map(enumerate_small_graphs)
        .chain((0..40).map(|i| common::erdos_renyi(&mut rng, 6 + i % 4, 0.4)))
        .collect();
    for g in &graphs {
        for (name, sol) in solutions(g) {
            assert_eq!(validate(g, &sol.witness), Ok(sol.width), "{name} on {g:?}");
            if name == "pw" || name == "cvc" {
                assert_eq!(sol.witness.kind, DecompositionKind::Path);
            }
            let doc = parse_td(emit_td(&sol.witness, g.n()).as_bytes()).unwrap();
            assert_eq!(doc.n, g.n());
            assert_eq!(doc.decomposition.kind, sol.witness.kind);
            assert_eq!(doc.decomposition.bags, sol.witness.bags);
            assert_eq!(validate(g, &doc.decomposition), Ok(sol.width));
        }
    }
}

#[test]
fn nice_form_keeps_width() {
    let mut rng = common::rng(4);
    for i in 0..30 {
        let g = common::erdos_renyi(&mut rng, 4 + i % 5, 0.5);
        for (name, sol) in solutions(&g) {
            let nd = make_nice(&g, &sol.witness).unwrap();
            assert!(nd.is_nice(), "{name}");
            assert_eq!(nd.width(), sol.width, "{name}");
            assert_eq!(validate(&g, &nd.to_decomposition()), Ok(sol.width));
            if sol.witness.kind == DecompositionKind::Path {
                assert!(nd.nodes.iter().all(|x| x.kind != NiceKind::Join));
            }
        }
    }
}

#[test]
fn traces_are_valid_triples() {
    let mut rng = common::rng(5);
    for i in 0..30 {
        let g = common::with_universal(&common::erdos_renyi(&mut rng, 4 + i % 4, 0.4));
        let cover = vcwidth_core::minimum_vertex_cover(&g).vertices;
        let cg = CoverGraph::new(&g, &cover).unwrap();
        let to_mask = |s: &VertexSet| CoverMask(s.iter().fold(0, |m, v| m | 1 << cg.index_of(v).unwrap()));
        let sol = treewidth_vc_4k(&g, None).unwrap();
        let nd = make_nice(&g, &sol.witness).unwrap();
        for node in 0..nd.nodes.len() {
            let t = trace_of_node(&nd, node, &cover);
            let triple = ValidTriple { l: to_mask(&t.lower), x: to_mask(&t.bag), r: to_mask(&t.rest) };
            assert_eq!(is_valid_triple(&cg, &triple), Ok(true), "node {node} of {g:?}");
        }
    }
}
