mod common;

use common::*;
use impartial::graph::{enumerate_sub_f, sgn_between, Sign};
use impartial::impartiality::{random_expected_count, transitive_count};
use impartial::structure::{branch, cut_minus_edge, half_branches, mirror_bridge, recursive_cutting, s_set};
use impartial::{census, is_impartial, CensusMode, UndirectedGraph};
use num_bigint::BigUint;
use num_rational::BigRational;

type Edge = (usize, usize);

fn edges(g: &UndirectedGraph) -> Vec<Edge> {
    g.edges().to_vec()
}

fn sorted(mut e: Vec<Edge>) -> Vec<Edge> {
    e.sort_unstable();
    e
}

#[test]
fn intro_example_has_three_copies_everywhere() {
    let h = corpus_digraph("intro-ex1");
    let report = census(&h, 4, CensusMode::Exact).unwrap();
    assert_eq!(report.distribution.into_iter().collect::<Vec<_>>(), vec![(3, 64)]);
    assert_eq!(transitive_count(&h, 4).unwrap(), BigUint::from(3u32));
    assert_eq!(random_expected_count(&h, 4).unwrap(), BigRational::from_integer(3.into()));
}

#[test]
fn single_vertex_and_edge_counts() {
    let v = corpus_digraph("vertex");
    assert_eq!(census(&v, 2, CensusMode::Exact).unwrap().distribution.into_iter().collect::<Vec<_>>(), vec![(2, 2)]);
    assert_eq!(census(&v, 1, CensusMode::Exact).unwrap().distribution.into_iter().collect::<Vec<_>>(), vec![(1, 1)]);
    let e = corpus_digraph("edge");
    assert_eq!(census(&e, 3, CensusMode::Exact).unwrap().distribution.into_iter().collect::<Vec<_>>(), vec![(3, 8)]);
}

#[test]
fn two_step_path_census() {
    // the transitive triangle hosts one copy of a 2-step path, the cyclic one three
    let h = corpus_digraph("pathaa");
    let report = census(&h, 3, CensusMode::Exact).unwrap();
    assert!(!report.is_constant);
    assert_eq!(report.distribution.into_iter().collect::<Vec<_>>(), vec![(1, 6), (3, 2)]);
}

#[test]
fn corpus_verdicts() {
    for name in ["vertex", "edge", "intro-ex1", "intro-ex2", "pathaab", "pathbaa"] {
        assert!(is_impartial(&corpus_digraph(name)).impartial, "{name}");
    }
    for name in ["pathaa", "pathab", "pathba", "pathaaa", "pathaba", "sec4-H", "sec5-F-directed", "transitive-triangle", "cyclic-triangle"] {
        assert!(!is_impartial(&corpus_digraph(name)).impartial, "{name}");
    }
}

#[test]
fn mirror_bridge_examples() {
    assert_eq!(mirror_bridge(&corpus_graph("sec5-mirror")).unwrap(), Some((0, 5)));
    assert_eq!(mirror_bridge(&corpus_graph("sec5-no-mirror")).unwrap(), None);
    let (a, b) = half_branches(&corpus_graph("sec5-mirror")).unwrap();
    assert_eq!((a.vertices, a.root), (vec![0, 1, 2, 3, 4], 0));
    assert_eq!((b.vertices, b.root), (vec![5, 6, 7, 8, 9], 5));
    assert!(half_branches(&corpus_graph("sec5-no-mirror")).is_err());
}

#[test]
fn branch_example() {
    let b = branch(&corpus_graph("sec5-branch"), 3, 4).unwrap();
    assert_eq!(b.vertices, vec![4, 5, 6]);
    assert_eq!(b.root, 4);
    assert_eq!(b.cut_edge, (3, 4));
    assert_eq!(branch(&corpus_graph("sec5-branch"), 4, 3).unwrap().order(), 4);
}

#[test]
fn recursive_cutting_trace() {
    let f = corpus_graph("sec5-F");
    let trace = recursive_cutting(&f).unwrap();
    let f1 = f.without_edges(&[(8, 9), (15, 16)]);
    let f2 = f1.without_edges(&[(2, 8), (3, 9)]);
    assert_eq!(trace.stages.len(), 3);
    assert_eq!(edges(&trace.stages[0]), edges(&f));
    assert_eq!(edges(&trace.stages[1]), edges(&f1));
    assert_eq!(edges(&trace.stages[2]), edges(&f2));
    assert_eq!(trace.removed, vec![vec![(8, 9), (15, 16)], vec![(2, 8), (3, 9)], vec![]]);
}

#[test]
fn cutting_order_of_sec7_g() {
    let trace = recursive_cutting(&corpus_graph("sec7-G")).unwrap();
    assert_eq!(trace.removed[0], vec![(11, 12)]);
    assert_eq!(trace.removed[1], vec![(3, 11), (4, 12)]);
    assert!(trace.result().edges().is_empty());
}

#[test]
fn s_sets_on_the_eight_vertex_path() {
    let t = corpus_graph("path8");
    let s = |e: Edge| s_set(&t, &cut_minus_edge(&t, e).unwrap()).unwrap();
    assert_eq!(s((0, 1)), vec![(0, 1), (6, 7)]);
    assert_eq!(s((2, 3)), vec![(2, 3), (4, 5)]);
    assert_eq!(s((1, 2)), vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]);
    assert_eq!(edges(&cut_minus_edge(&t, (0, 1)).unwrap()), vec![(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]);
    assert_eq!(edges(&cut_minus_edge(&t, (1, 2)).unwrap()), vec![(2, 3), (3, 4), (5, 6), (6, 7)]);
}

#[test]
fn subgraph_copies_of_sec4_f_in_sec4_h() {
    let h = corpus_digraph("sec4-H");
    let f = corpus_graph("sec4-F");
    let copies = enumerate_sub_f(&h, &f).unwrap();
    let ours: Vec<Vec<Edge>> = copies.iter().map(|c| sorted(edges(&c.underlying()))).collect();
    assert_eq!(ours, brute_sub_copies(&h.underlying(), &f));
    assert_eq!(copies.len(), 6);

    // four of the copies, in the order the golden vector lists them
    let listed: [&[Edge]; 4] = [
        &[(0, 4), (1, 5), (4, 5), (5, 6)],
        &[(1, 5), (2, 6), (4, 5), (5, 6)],
        &[(1, 5), (2, 6), (5, 6), (6, 7)],
        &[(2, 6), (3, 7), (5, 6), (6, 7)],
    ];
    let reference = &copies[0];
    let mut signs = Vec::new();
    for d in listed {
        let i = ours.iter().position(|c| c.as_slice() == d).expect("listed copy present");
        signs.push(sgn_between(reference, &copies[i]).unwrap().value());
    }
    assert_eq!(signs, vec![1, 1, 1, -1]);

    // the other two copies
    let rest: Vec<i64> = copies
        .iter()
        .zip(&ours)
        .filter(|(_, c)| !listed.contains(&c.as_slice()))
        .map(|(d, _)| sgn_between(reference, d).unwrap().value())
        .collect();
    assert_eq!(rest, vec![-1, 1]);
    assert_eq!(sgn_between(reference, reference).unwrap(), Sign::Plus);
}
