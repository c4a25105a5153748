use cubelift::type_a::{class_subset, nu_a, successor_a, successor_witness, SubsetClass};
use cubelift::type_b::{
    bits_b, class_b, enumerate_classes, n_inversions, n_symbols, nu_b, phi, phi_inverse, successor_b, successor_chain,
    witness_b, ClassB,
};
use cubelift::{deletion_a, deletion_b, CoxeterWord, InversionSet, SignedWord, Word};
use proptest::prelude::*;

#[test]
fn type_a_successor_counts_up() {
    for n in 2..=7 {
        for mask in 0..(1u64 << (n - 1)) - 1 {
            let a = SubsetClass::from_mask(mask);
            assert_eq!(nu_a(successor_a(a, n).unwrap()), mask + 1);
        }
    }
}

#[test]
fn type_a_witnesses_are_incomparable_and_decreasing() {
    for n in 3..=6 {
        let d = deletion_a(n).unwrap();
        for mask in (1..(1u64 << (n - 1)) - 1).filter(|m| m & 1 == 1) {
            let a = SubsetClass::from_mask(mask);
            let (v, w) = successor_witness(a, n).unwrap();
            assert_eq!(class_subset(&v), a);
            assert_eq!(class_subset(&w), successor_a(a, n).unwrap());
            let (iv, iw) = (d.upper().index_of(&v).unwrap(), d.upper().index_of(&w).unwrap());
            assert!(!d.upper().poset().comparable(iv, iw));
            let pr = d.projection();
            assert!(d.lower().poset().lt(pr.image(iw), pr.image(iv)));
        }
    }
}

#[test]
fn type_b_chain_is_a_permutation_of_the_classes() {
    for n in 2..=5 {
        let mut chain = successor_chain(n).unwrap();
        let mut all = enumerate_classes(n).unwrap();
        assert!(chain.windows(2).all(|p| nu_b(p[0], n) < nu_b(p[1], n)));
        chain.sort();
        all.sort();
        assert_eq!(chain, all);
    }
}

#[test]
fn type_b_witnesses_are_incomparable_and_decreasing() {
    for n in 2..=4 {
        let d = deletion_b(n).unwrap();
        let pr = d.projection();
        for x in enumerate_classes(n).unwrap() {
            let Ok((y, case)) = successor_b(x, n) else { continue };
            match witness_b(x, n) {
                Ok((u, w)) => {
                    assert!(!case.is_plain());
                    assert_eq!((class_b(&u), class_b(&w)), (x, y));
                    let (iu, iw) = (d.upper().index_of(&u).unwrap(), d.upper().index_of(&w).unwrap());
                    assert!(!u.inversions().is_subset(&w.inversions()) && !w.inversions().is_subset(&u.inversions()));
                    assert!(d.lower().poset().lt(pr.image(iw), pr.image(iu)), "{x}: {u} / {w}");
                }
                Err(_) => assert!(case.is_plain()),
            }
        }
    }
}

fn signed_word(n: usize) -> impl Strategy<Value = SignedWord> {
    (Just((1..=n as i8).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
        .prop_map(|(l, s)| SignedWord::new(l.into_iter().zip(s).map(|(a, neg)| if neg { -a } else { a }).collect()).unwrap())
}

fn class(n: usize) -> impl Strategy<Value = ClassB> {
    (any::<bool>(), proptest::collection::vec(0u8..3, n - 1)).prop_map(|(negative, digits)| {
        let (mut pos, mut neg) = (0, 0);
        for (i, d) in digits.into_iter().enumerate() {
            match d {
                1 => pos |= 1 << i,
                2 => neg |= 1 << i,
                _ => {}
            }
        }
        ClassB::new(negative, pos, neg).unwrap()
    })
}

proptest! {
    #[test]
    fn bits_are_the_n_inversions(w in (1usize..=5).prop_flat_map(signed_word)) {
        let n = w.rank();
        let inv = n_inversions(&w);
        let expected: String = n_symbols(n).iter().map(|s| if inv.contains(s) { '1' } else { '0' }).collect();
        prop_assert_eq!(bits_b(class_b(&w), n), expected);
    }

    #[test]
    fn phi_round_trips(x in (2usize..=5).prop_flat_map(|n| (Just(n), class(n)))) {
        let (n, x) = x;
        let o = phi(x, n);
        prop_assert!(o.is_acyclic(n));
        prop_assert_eq!(phi_inverse(o, n).unwrap(), x);
    }

    #[test]
    fn successor_increases_nu(x in (2usize..=5).prop_flat_map(|n| (Just(n), class(n)))) {
        let (n, x) = x;
        if let Ok((y, _)) = successor_b(x, n) {
            prop_assert!(nu_b(y, n) > nu_b(x, n));
        } else {
            prop_assert_eq!(x, ClassB::new(true, 0, 0).unwrap());
        }
    }

    #[test]
    fn subsets_of_words_are_right_of_n(l in (2usize..=7).prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())) {
        let w = Word::new(l.clone()).unwrap();
        let p = l.iter().position(|&x| x as usize == l.len()).unwrap();
        let a = class_subset(&w);
        prop_assert_eq!(a.len(), l.len() - 1 - p);
        prop_assert!(l[p + 1..].iter().all(|&x| a.contains(x as usize)));
    }
}
