use num::{BigInt, One, Signed, Zero};
use otsym::graph::{connected_graphs, f_polynomial, h_polynomial, ChromaticMemo, Graph};
use otsym::rep::poincare_product;
use proptest::prelude::*;
use rayon::prelude::*;

/// Whitney's expansion `P(t) = Σ_{S ⊆ E} (-1)^{|S|} t^{c(S)}`.
fn whitney(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut p = vec![BigInt::zero(); n + 1];
    for mask in 0u64..(1 << edges.len()) {
        let chosen: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let c = Graph::from_edges(n, &chosen).unwrap().components().len();
        if chosen.len() % 2 == 0 {
            p[c] += 1;
        } else {
            p[c] -= 1;
        }
    }
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<_> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chromatic_matches_whitney(g in graph(7)) {
        let memo = ChromaticMemo::new();
        prop_assert_eq!(memo.chromatic(&g), whitney(&g));
    }

    #[test]
    fn cone_identity_on_random_graphs(g in graph(8)) {
        prop_assume!(g.is_connected());
        let memo = ChromaticMemo::new();
        prop_assert!(memo.cone_identity(&g).unwrap());
    }
}

fn assert_nonnegative_with_unit_constant(label: &str, g: &Graph, p: &[BigInt]) {
    assert!(p[0].is_one(), "{label} {g}");
    assert!(p.iter().all(|c| !c.is_negative()), "{label} {g}");
}

#[test]
fn f_and_h_are_nonnegative_with_unit_constant_term() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let f = f_polynomial(&g).unwrap();
            assert_eq!(f.len(), n, "{g}");
            assert_nonnegative_with_unit_constant("f", &g, &f);
            assert_nonnegative_with_unit_constant("h", &g, &h_polynomial(&g).unwrap());
        }
    }
}

#[test]
fn h_at_one_counts_nbc_bases_and_f_at_one_counts_regions() {
    // For K_n: f(1) = n! and h(1) = (n-1)!.
    for n in 2..=8 {
        let k = Graph::complete(n).unwrap();
        let f1: BigInt = f_polynomial(&k).unwrap().iter().sum();
        let h1: BigInt = h_polynomial(&k).unwrap().iter().sum();
        let fact = |m: usize| (1..=m).fold(BigInt::one(), |a, x| a * x);
        assert_eq!(f1, fact(n));
        assert_eq!(h1, fact(n - 1));
        assert_eq!(
            h_polynomial(&k).unwrap(),
            poincare_product(n - 2, n - 2).to_integers().unwrap()
        );
    }
}

#[test]
fn shared_memo_is_consistent_under_concurrency() {
    let memo = ChromaticMemo::new();
    let graphs: Vec<Graph> = connected_graphs(5).collect();
    let parallel: Vec<_> = graphs.par_iter().map(|g| memo.chromatic(g)).collect();
    let fresh = ChromaticMemo::new();
    let serial: Vec<_> = graphs.iter().map(|g| fresh.chromatic(g)).collect();
    assert_eq!(parallel, serial);
    assert!(!memo.is_empty());
}
