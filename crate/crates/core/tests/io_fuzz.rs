mod common;

use vcwidth_core::{emit_gr, parse_cover, parse_gr, parse_td};

#[test]
fn damaged_documents_are_rejected_with_lines() {
    let mut rng = common::rng(10);
    for doc in common::fuzz_corpus(&mut rng, 1500) {
        for e in [parse_gr(&doc).err(), parse_td(&doc).err()].into_iter().flatten() {
            assert!(e.line >= 1, "{e}");
            assert!(e.to_string().starts_with(&format!("line {}", e.line)));
        }
        if let Ok(g) = parse_gr(&doc) {
            assert_eq!(parse_gr(emit_gr(&g).as_bytes()), Ok(g));
        }
        let _ = parse_cover(&doc, 10);
    }
}

#[test]
fn accepted_graphs_round_trip() {
    let mut rng = common::rng(11);
    for n in 0..12 {
        let g = common::erdos_renyi(&mut rng, n, 0.4);
        assert_eq!(parse_gr(emit_gr(&g).as_bytes()), Ok(g));
    }
}
