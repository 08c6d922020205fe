use lyruns::harness::two_period_matches_oracle;
use lyruns::oracle::{naive_longest_lyndon, naive_runs, naive_sentinel_tree};
use lyruns::{
    compute_all_runs, generate, LyndonArray, LyndonTree, Order, SuffixContext, Text, TwoPeriodIndex,
};
use proptest::prelude::*;

fn text_strategy(max_sigma: u32, max_len: usize) -> impl Strategy<Value = Text> {
    (1..=max_sigma).prop_flat_map(move |sigma| {
        prop::collection::vec(0..sigma, 1..=max_len).prop_map(move |v| Text::new(v, sigma).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn runs_match_brute_force(t in text_strategy(4, 120)) {
        let fast = compute_all_runs(&t).unwrap();
        prop_assert_eq!(fast.runs().to_vec(), naive_runs(&t).unwrap());
    }

    #[test]
    fn lyndon_ends_match_brute_force(t in text_strategy(3, 40)) {
        let ctx = SuffixContext::build(&t).unwrap();
        let arr = LyndonArray::compute(&ctx);
        for order in Order::BOTH {
            for i in 1..=t.len() {
                prop_assert_eq!(arr.end(order, i), naive_longest_lyndon(&t, order, i).unwrap());
            }
        }
    }

    #[test]
    fn trees_match_standard_factorization(t in text_strategy(4, 48)) {
        for order in Order::BOTH {
            let fast = LyndonTree::from_text(&t, order).unwrap();
            let naive = naive_sentinel_tree(&t, order).unwrap();
            prop_assert_eq!(fast.splits(), naive.splits());
            prop_assert_eq!(fast.node_count(), naive.node_count());
        }
    }

    #[test]
    fn two_period_queries_match_brute_force(t in text_strategy(3, 48)) {
        let index = TwoPeriodIndex::build(&t).unwrap();
        prop_assert_eq!(two_period_matches_oracle(&t, &index), Ok(()));
    }
}

#[test]
fn structured_inputs_match_brute_force() {
    for n in [1, 2, 3, 10, 55, 144, 300] {
        for t in [
            generate::fibonacci(n),
            generate::thue_morse(n),
            generate::unary(n),
        ] {
            assert_eq!(
                compute_all_runs(&t).unwrap().runs(),
                naive_runs(&t).unwrap().as_slice(),
                "{t:?}"
            );
            let index = TwoPeriodIndex::build(&t).unwrap();
            if n <= 144 {
                assert_eq!(two_period_matches_oracle(&t, &index), Ok(()));
            }
        }
    }
}

#[test]
fn large_alphabet() {
    let t = generate::random(400, 300, 5);
    assert_eq!(
        compute_all_runs(&t).unwrap().runs(),
        naive_runs(&t).unwrap().as_slice()
    );
    let t = Text::new((0..200).map(|k| (k % 7) * 1000).collect(), 7000).unwrap();
    assert_eq!(
        compute_all_runs(&t).unwrap().runs(),
        naive_runs(&t).unwrap().as_slice()
    );
}
