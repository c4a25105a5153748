use cubelift::weak::{parse_word_list, write_word_list};
use cubelift::{covers_a, covers_b, inv_a, inv_b, perms, signed_perms, weak_leq_by_inversions, CoxeterWord, InversionSet, SignedWord, Word, WeakOrder};
use proptest::prelude::*;

fn word(n: usize) -> impl Strategy<Value = Word> {
    Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle().prop_map(|l| Word::new(l).unwrap())
}

fn signed_word(n: usize) -> impl Strategy<Value = SignedWord> {
    (Just((1..=n as i8).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
        .prop_map(|(l, s)| SignedWord::new(l.into_iter().zip(s).map(|(a, neg)| if neg { -a } else { a }).collect()).unwrap())
}

/// Inversions straight from the pairwise definition on positions.
fn inversion_pairs(w: &Word) -> Vec<(u8, u8)> {
    let l = w.letters();
    let mut out = Vec::new();
    for p in 0..l.len() {
        for q in p + 1..l.len() {
            if l[p] > l[q] {
                out.push((l[p], l[q]));
            }
        }
    }
    out.sort_unstable();
    out
}

#[test]
fn group_orders() {
    let factorial = |n: usize| (1..=n).product::<usize>();
    for n in 1..=6 {
        assert_eq!(perms(n).unwrap().len(), factorial(n));
    }
    for n in 0..=5 {
        assert_eq!(signed_perms(n).unwrap().len(), (1 << n) * factorial(n));
    }
    assert!(perms(8).is_err());
    assert!(signed_perms(6).is_err());
}

#[test]
fn cover_counts() {
    // each word has one cover per ascent: (n-1) n!/2 covers in S_n
    for (n, covers) in [(3, 6), (4, 36)] {
        let order = WeakOrder::from_words(perms(n).unwrap()).unwrap();
        assert_eq!(order.poset().covers().len(), covers);
    }
    // W_n is a Coxeter group of rank n: n 2^n n!/2 covers
    let order = WeakOrder::from_words(signed_perms(2).unwrap()).unwrap();
    assert_eq!(order.poset().covers().len(), 8);
}

#[test]
fn word_lists_round_trip() {
    let words = signed_perms(2).unwrap();
    let text = write_word_list(&words);
    assert_eq!(parse_word_list::<SignedWord>(&text).unwrap(), words);
    assert!(parse_word_list::<Word>("1 2\n1 1\n").is_err());
}

proptest! {
    #[test]
    fn inversions_match_pair_definition(w in (1usize..=7).prop_flat_map(word)) {
        let inv = inv_a(&w);
        let symbols: Vec<(u8, u8)> = inv.symbols().into_iter().map(|(j, i)| (j as u8, i as u8)).collect();
        let mut symbols = symbols;
        symbols.sort_unstable();
        prop_assert_eq!(symbols, inversion_pairs(&w));
    }

    #[test]
    fn covers_add_one_inversion_a(w in (2usize..=7).prop_flat_map(word)) {
        for v in covers_a(&w) {
            let (a, b) = (inv_a(&w), inv_a(&v));
            prop_assert!(a.is_subset(&b));
            prop_assert_eq!(a.len() + 1, b.len());
        }
    }

    #[test]
    fn covers_add_one_inversion_b(w in (1usize..=5).prop_flat_map(signed_word)) {
        for v in covers_b(&w) {
            let (a, b) = (inv_b(&w), inv_b(&v));
            prop_assert!(a.is_subset(&b));
            prop_assert_eq!(a.len() + 1, b.len());
            prop_assert!(weak_leq_by_inversions(&w, &v).unwrap());
        }
    }

    #[test]
    fn deletion_keeps_order_of_remaining_letters(w in (2usize..=7).prop_flat_map(word)) {
        let n = w.rank() as u8;
        let expected: Vec<u8> = w.letters().iter().copied().filter(|&l| l != n).collect();
        let deleted = w.delete_largest();
        prop_assert_eq!(deleted.letters(), &expected[..]);
    }

    #[test]
    fn signed_words_parse_back(w in (1usize..=5).prop_flat_map(signed_word)) {
        prop_assert_eq!(w.to_string().parse::<SignedWord>().unwrap(), w.clone());
        prop_assert_eq!(w.label().replace(',', " ").parse::<SignedWord>().unwrap(), w);
    }
}
