mod common;

use rand::RngExt;
use vcwidth_core::{
    enumerate_small_graphs, minimum_vertex_cover, pathwidth_cvc, pathwidth_exact, pathwidth_vc, treewidth_exact,
    treewidth_vc_3k, treewidth_vc_4k, Graph,
};

fn check(g: &Graph) {
    let tw = treewidth_exact(g).unwrap();
    let pw = pathwidth_exact(g).unwrap();
    assert_eq!(treewidth_vc_4k(g, None).unwrap().width, tw, "4k on {g:?}");
    assert_eq!(treewidth_vc_3k(g, None).unwrap().width, tw, "3k on {g:?}");
    assert_eq!(pathwidth_vc(g, None).unwrap().width, pw, "pw on {g:?}");
}

#[test]
fn all_graphs_up_to_five_vertices() {
    for n in 0..=5 {
        for g in enumerate_small_graphs(n) {
            check(&g);
            assert_eq!(pathwidth_cvc(&g).unwrap().width, pathwidth_exact(&g).unwrap());
        }
    }
}

#[test]
fn random_graphs_seven_to_nine() {
    let mut rng = common::rng(1);
    for n in 7..=9 {
        for p in [0.2, 0.5, 0.8] {
            for _ in 0..15 {
                check(&common::erdos_renyi(&mut rng, n, p));
            }
        }
    }
}

#[test]
fn complement_cover_on_dense_graphs() {
    let mut rng = common::rng(2);
    for _ in 0..60 {
        let n = rng.random_range(7..=10);
        let g = common::erdos_renyi(&mut rng, n, 0.8);
        if minimum_vertex_cover(&g.complement()).k() <= 8 {
            assert_eq!(pathwidth_cvc(&g).unwrap().width, pathwidth_exact(&g).unwrap(), "{g:?}");
        }
    }
    for blocks in 1..=3 {
        let g = common::dense_complement(&mut rng, blocks, 0.3);
        assert_eq!(pathwidth_cvc(&g).unwrap().width, pathwidth_exact(&g).unwrap());
    }
}

#[test]
fn named_graphs() {
    let grid = |r: usize, c: usize| {
        let mut e = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                if j + 1 < c {
                    e.push((v, v + 1));
                }
                if i + 1 < r {
                    e.push((v, v + c));
                }
            }
        }
        Graph::from_edges(r * c, e).unwrap()
    };
    let g = grid(3, 3);
    assert_eq!(treewidth_vc_3k(&g, None).unwrap().width, 3);
    assert_eq!(pathwidth_vc(&g, None).unwrap().width, 3);
    let star = Graph::from_edges(8, (1..8).map(|v| (0, v))).unwrap();
    assert_eq!(treewidth_vc_3k(&star, None).unwrap().width, 1);
    assert_eq!(pathwidth_vc(&star, None).unwrap().width, 1);
    let tree: Vec<(usize, usize)> = (1..15).map(|v| ((v - 1) / 2, v)).collect();
    let tree = Graph::from_edges(15, tree).unwrap();
    assert_eq!(treewidth_vc_4k(&tree, None).unwrap().width, 1);
    assert_eq!(pathwidth_vc(&tree, None).unwrap().width, pathwidth_exact(&tree).unwrap());
}
