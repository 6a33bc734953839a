use pcolor::bent::BooleanFunction;
use pcolor::designs::{BlockDesign, HadamardMatrix, SubspaceDesign};
use pcolor::families::{enumerate_subspaces, AbelianGroup};
use pcolor::{Coloring, Hypergraph, Multigraph};
use pcolor_cli::io::{load, parse, save, sparse_multigraph, to_json, Instance};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn multigraph() -> impl Strategy<Value = Multigraph> {
    (1usize..8).prop_flat_map(|n| {
        proptest::collection::vec(0u32..4, n * (n + 1) / 2).prop_map(move |upper| {
            let mut flat = vec![0; n * n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let m = it.next().unwrap();
                    flat[i * n + j] = m;
                    flat[j * n + i] = m;
                }
            }
            Multigraph::from_flat(n, flat).unwrap()
        })
    })
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..9).prop_flat_map(|n| {
        proptest::collection::vec(subsequence((0..n).collect::<Vec<_>>(), 1..=n), 0..10)
            .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn design() -> impl Strategy<Value = BlockDesign> {
    (2usize..8).prop_flat_map(|n| {
        (1..=n).prop_flat_map(move |k| {
            (
                0..=k,
                0usize..4,
                proptest::collection::vec(subsequence((0..n).collect::<Vec<_>>(), k), 0..8),
            )
                .prop_map(move |(t, lambda, blocks)| BlockDesign::new(n, k, t, lambda, blocks).unwrap())
        })
    })
}

fn qdesign() -> impl Strategy<Value = SubspaceDesign> {
    let lines = enumerate_subspaces(4, 2, 2).unwrap();
    subsequence(lines, 0..10).prop_map(|s| SubspaceDesign::new(4, 2, 1, 1, 2, s).unwrap())
}

fn boolfun() -> impl Strategy<Value = BooleanFunction> {
    (0usize..=6, any::<u64>()).prop_map(|(n, bits)| {
        let mask = if n == 6 { u64::MAX } else { (1u64 << (1 << n)) - 1 };
        BooleanFunction::from_bits(n, bits & mask).unwrap()
    })
}

fn hadamard() -> impl Strategy<Value = HadamardMatrix> {
    (1usize..9).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n), n)
            .prop_map(|rows| HadamardMatrix::new(rows).unwrap())
    })
}

fn diffset() -> impl Strategy<Value = Instance> {
    proptest::collection::vec(2usize..5, 1..4).prop_flat_map(|orders| {
        let group = AbelianGroup::new(orders).unwrap();
        let all: Vec<usize> = (0..group.order()).collect();
        subsequence(all.clone(), 0..=all.len()).prop_map(move |set| Instance::DiffSet {
            group: group.clone(),
            set,
        })
    })
}

fn instance() -> impl Strategy<Value = Instance> {
    prop_oneof![
        multigraph().prop_map(Instance::Multigraph),
        hypergraph().prop_map(Instance::Hypergraph),
        proptest::collection::vec(0usize..5, 0..20).prop_map(|l| Instance::Coloring(Coloring::from_labels(&l))),
        design().prop_map(Instance::Design),
        qdesign().prop_map(Instance::QDesign),
        boolfun().prop_map(Instance::BoolFun),
        hadamard().prop_map(Instance::Hadamard),
        diffset(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn load_inverts_save(x in instance()) {
        let text = to_json(&x);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &x);
        // canonical text is a fixed point, and whitespace does not matter
        prop_assert_eq!(to_json(&back), text.clone());
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(parse(&serde_json::to_string_pretty(&value).unwrap()).unwrap(), x);
    }

    #[test]
    fn sparse_form_loads_to_the_same_graph(g in multigraph()) {
        let text = serde_json::to_string(&sparse_multigraph(&g)).unwrap();
        prop_assert_eq!(parse(&text).unwrap(), Instance::Multigraph(g));
    }
}

#[test]
fn files_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.json");
    let x = Instance::Multigraph(pcolor::families::petersen());
    save(&x, &path).unwrap();
    assert_eq!(load(&path).unwrap(), x);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.trim_end(), to_json(&x));
}
