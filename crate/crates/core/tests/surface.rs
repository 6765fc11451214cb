use crosscap_core::surface::{
    abelianize, dihedral_eval, iota_translate, relations_for, relations_with_reading, special_word,
    AbelianGenerator, DihedralElement, Generator, N4Reading, RelationFamily, Surface, Word,
};
use proptest::prelude::*;

fn word(text: &str, g: usize) -> Word {
    Word::parse(text, Surface::closed(g)).unwrap()
}

#[test]
fn relation_instances() {
    let rels = relations_for(5, 0).unwrap();
    let r4 = rels
        .iter()
        .find(|r| r.family == RelationFamily::R4 && r.lhs == word("d1 d2 d1", 5));
    assert_eq!(r4.unwrap().rhs, word("d2 d1 d2", 5));
    let r5: Vec<_> = rels
        .iter()
        .filter(|r| r.family == RelationFamily::R5)
        .collect();
    assert!(r5.iter().any(|r| r.lhs == word("e2 d4 e2", 5)));
    assert!(r5
        .iter()
        .all(|r| r.generators().all(|g| g != Generator::TEps(3))));

    let g3 = relations_for(3, 0).unwrap();
    assert!(g3.iter().all(|r| r.family != RelationFamily::R1));
    assert!(relations_for(2, 0).is_err());
    assert!(relations_for(5, 2).is_err());
}

#[test]
fn r12_and_r10_present() {
    let rels = relations_for(6, 1).unwrap();
    assert!(rels.iter().any(|r| r.family == RelationFamily::R12
        && r.lhs
            == Word::parse(
                "d3 u3 d3",
                Surface::Nonorientable {
                    genus: 6,
                    boundary: 1
                }
            )
            .unwrap()));
    assert!(rels.iter().any(|r| r.family == RelationFamily::R10));
}

#[test]
fn parsing() {
    let s = word("d1 d2 d3 d4", 5);
    assert_eq!(s, special_word("s", 5).unwrap());
    assert!(word("u3^-1 u3", 5).is_empty());
    let e = word("e2^2", 5);
    assert_eq!(e.len(), 1);
    assert_eq!(e.letters()[0].generator, Generator::TEps(2));
    assert_eq!(e.letters()[0].exponent, 2);
    assert_eq!(word(&s.to_string(), 5), s);
    assert!(Word::parse("d5", Surface::closed(5)).is_err());
    assert!(Word::parse("e3", Surface::closed(5)).is_err());
    assert!(Word::parse("d1 ^", Surface::closed(5)).is_err());
    assert!(Word::parse("q1", Surface::closed(5)).is_err());
}

#[test]
fn special_words() {
    assert_eq!(special_word("s", 3).unwrap(), word("d1 d2", 3));
    assert!(special_word("t", 5).is_err());
    assert!(abelianize(&special_word("s", 7).unwrap())
        .unwrap()
        .is_zero());
}

#[test]
fn abelianization_examples() {
    assert!(abelianize(&word("d1", 7)).unwrap().is_zero());
    assert!(abelianize(&word("u3 u5", 8)).unwrap().is_zero());
    let c = abelianize(&word("d2 e2 u1", 5)).unwrap();
    assert_eq!(c.coordinate(AbelianGenerator::Delta1), Some(false));
    assert_eq!(c.coordinate(AbelianGenerator::U1), Some(true));
    let g4 = abelianize(&word("e2", 4)).unwrap();
    assert_eq!(g4.coordinate(AbelianGenerator::Eps2), Some(true));
    assert_eq!(g4.coordinate(AbelianGenerator::Delta1), Some(false));
}

#[test]
fn abelianization_kills_relators() {
    for g in 3..=9 {
        for n in 0..=1 {
            for rel in relations_for(g, n).unwrap() {
                assert!(
                    abelianize(&rel.relator()).unwrap().is_zero(),
                    "g={g}: {rel}"
                );
            }
        }
    }
}

#[test]
fn dihedral_examples() {
    let e2 = dihedral_eval(&word("e2", 4)).unwrap();
    assert_eq!(e2, DihedralElement::xy());
    assert_eq!(e2.order(), None);
    assert!(dihedral_eval(&word("", 4)).unwrap().is_identity());
    assert!(dihedral_eval(&word("u1 u2", 4)).unwrap().is_identity());
    assert!(dihedral_eval(&word("d1", 5)).is_err());
}

#[test]
fn dihedral_quotient_kills_relators() {
    // The dihedral images of every u_i coincide, so both readings of the
    // extra genus-4 family are killed; the mod 2 action separates them.
    for reading in [N4Reading::Literal, N4Reading::Corrected] {
        for rel in relations_with_reading(4, 0, reading).unwrap() {
            assert!(
                dihedral_eval(&rel.relator()).unwrap().is_identity(),
                "{rel}"
            );
        }
    }
    assert_eq!(
        crosscap_core::mod2::consistent_n4_readings().unwrap(),
        vec![N4Reading::default()]
    );
}

#[test]
fn xy_has_infinite_order() {
    let xy = DihedralElement::xy();
    let mut acc = DihedralElement::IDENTITY;
    for n in 1..=10_000 {
        acc = acc.mul(xy);
        assert!(!acc.is_identity(), "n = {n}");
    }
    assert_eq!(
        DihedralElement::x().mul(DihedralElement::x()),
        DihedralElement::IDENTITY
    );
    assert_eq!(
        DihedralElement::y().mul(DihedralElement::y()),
        DihedralElement::IDENTITY
    );
}

#[test]
fn iota_examples() {
    let beta = Word::parse("b1", Surface::Piece { genus: 5 }).unwrap();
    assert_eq!(iota_translate(&beta, 0).unwrap(), word("d2", 5));
    let empty = Word::parse("", Surface::Piece { genus: 5 }).unwrap();
    assert!(iota_translate(&empty, 0).unwrap().is_empty());
    let w = Word::parse("g1 a2^-1", Surface::Piece { genus: 6 }).unwrap();
    assert_eq!(iota_translate(&w, 0).unwrap(), word("d3 e2^-1", 6));
    assert!(Word::parse("b3", Surface::Piece { genus: 5 }).is_err());
    assert!(iota_translate(&word("d1", 5), 0).is_err());
}

fn arb_genus4_word() -> impl Strategy<Value = Word> {
    let letters = ["d1", "d2", "d3", "e1", "e2", "u1", "u2", "u3"];
    prop::collection::vec((0..letters.len(), -3i64..=3), 0..12).prop_map(move |v| {
        let text: Vec<String> = v
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .map(|(i, e)| format!("{}^{e}", letters[i]))
            .collect();
        word(&text.join(" "), 4)
    })
}

proptest! {
    #[test]
    fn dihedral_eval_is_a_homomorphism(a in arb_genus4_word(), b in arb_genus4_word()) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(
            dihedral_eval(&ab).unwrap(),
            dihedral_eval(&a).unwrap().mul(dihedral_eval(&b).unwrap())
        );
        prop_assert!(dihedral_eval(&a.concat(&a.inverse()).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn abelianize_is_a_homomorphism(a in arb_genus4_word(), b in arb_genus4_word()) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(abelianize(&ab).unwrap(), abelianize(&a).unwrap().add(&abelianize(&b).unwrap()));
    }

    #[test]
    fn word_printing_round_trips(a in arb_genus4_word()) {
        prop_assert_eq!(word(&a.to_string(), 4), a);
    }
}
