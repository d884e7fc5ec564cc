mod common;

use cfmonoid::catalog::{build_dehn_example, build_mn, list_catalog, lookup};
use cfmonoid::matcher::{FactorMatcher, Occurrence};
use cfmonoid::{Alphabet, Element, Letter, Presentation, Strategy as Rewrite, Word};
use proptest::prelude::*;

use common::{all_words, ClosureOracle};

fn naive_occurrences(text: &[Letter], patterns: &[Vec<Letter>]) -> Vec<Occurrence> {
    let mut out = Vec::new();
    for pos in 0..text.len() {
        for (i, p) in patterns.iter().enumerate() {
            if !p.is_empty() && text[pos..].starts_with(p) {
                out.push(Occurrence { pos, pattern: i });
            }
        }
    }
    out
}

fn word_strategy(k: u8, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0..k, 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn matcher_agrees_with_naive_scan(
        patterns in prop::collection::vec(prop::collection::vec(0u8..3, 1..5), 1..6),
        text in word_strategy(3, 30),
    ) {
        let m = FactorMatcher::new(3, &patterns);
        prop_assert_eq!(m.find_all(&text), naive_occurrences(&text, &patterns));
        prop_assert_eq!(m.contains_any(&text), !naive_occurrences(&text, &patterns).is_empty());
    }

    #[test]
    fn strategies_reach_the_same_normal_form(w in word_strategy(4, 24), seed in any::<u64>()) {
        for name in list_catalog() {
            let s = lookup(&name).unwrap().system();
            let left = s.normalize(&w);
            prop_assert_eq!(&s.normalize_with(&w, Rewrite::Rightmost), &left);
            prop_assert_eq!(&s.normalize_with(&w, Rewrite::Random(seed)), &left);
            if let Element::Word(nf) = &left {
                prop_assert!(s.is_normal(nf));
            }
        }
    }

    #[test]
    fn normalization_is_a_monoid_morphism(u in word_strategy(4, 10), v in word_strategy(4, 10)) {
        let s = build_mn(2).unwrap().system();
        let uv: Vec<Letter> = u.iter().chain(&v).copied().collect();
        let prod = s.product(&s.normalize(&u), &s.normalize(&v));
        prop_assert_eq!(s.normalize(&uv), prod);
    }

    #[test]
    fn presentation_text_round_trips(
        rels in prop::collection::vec(
            (word_strategy(3, 4), prop::option::of(word_strategy(3, 3))),
            0..6,
        ),
        reversed in any::<bool>(),
    ) {
        let mut alphabet = Alphabet::new(&['x', 'y', 'z']).unwrap();
        if reversed {
            alphabet = alphabet.with_precedence(&['z', 'y', 'x']).unwrap();
        }
        let relations = rels
            .into_iter()
            .filter(|(l, _)| !l.is_empty())
            .map(|(l, r)| cfmonoid::Relation::new(Word(l), r.map_or(Element::Zero, |w| Element::Word(Word(w)))))
            .collect();
        let p = Presentation::new(alphabet, relations);
        let back = Presentation::parse(&p.to_text()).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn equality_matches_bounded_relation_closure() {
    for name in list_catalog() {
        let entry = lookup(&name).unwrap();
        let s = entry.system();
        let mut oracle = ClosureOracle::new(&entry.presentation, 10);
        let words = all_words(4, 5);
        let values: Vec<Element> = words.iter().map(|w| s.normalize(w)).collect();
        let classes: Vec<usize> = words.iter().map(|w| oracle.class(w)).collect();
        for i in 0..words.len() {
            assert_eq!(values[i].is_zero(), oracle.is_zero(&words[i]), "{name}");
            for j in i + 1..words.len() {
                assert_eq!(
                    values[i] == values[j],
                    classes[i] == classes[j],
                    "{name}: {:?} vs {:?}",
                    words[i],
                    words[j]
                );
            }
        }
    }
}

#[test]
fn mn_derivations_to_normal_form_are_short() {
    for n in 1..=3 {
        let s = build_mn(n).unwrap().system();
        for w in all_words(4, 8) {
            let (_, steps) = s.normalize_counted(&w);
            assert!(steps <= w.len(), "M{n}: {w:?} took {steps} steps");
        }
    }
}

#[test]
fn dehn_example_normal_forms_sort_b_before_a() {
    let s = build_dehn_example().system();
    let a = s.alphabet();
    let w = a.parse_word("aabbab").unwrap();
    assert_eq!(a.render_element(&s.normalize(&w)), "bbbaaa");
    assert_eq!(
        a.render_element(&s.normalize(&a.parse_word("cbbaad").unwrap())),
        "1"
    );
}

#[test]
fn parse_errors_carry_positions() {
    let err = Presentation::parse("generators: a b\nrelations:\nab = c\n").unwrap_err();
    assert!(matches!(
        err,
        cfmonoid::Error::UnknownLetter {
            letter: 'c',
            line: 3,
            ..
        }
    ));
    assert!(Presentation::parse("relations:\n").is_err());
    assert!(Presentation::parse("generators: a a\nrelations:\n").is_err());
}
