use crosscap_core::algebra::standard;
use crosscap_core::homology::{
    block_decompose, check_covering_involution, conjugacy_between, conjugacy_obstruction,
    covering_involution, derive_psi, ef_basis_is_symplectic, homology_maps, liftable_twists,
    pairing, psi_top_delta_display, psi_u_display, rep_table, theta_word, transvection,
    verify_relations, HomologyContext, HomologyVector, RelationStatus, RepName,
};
use crosscap_core::surface::{special_word, Generator, Surface, Word};
use crosscap_core::{IntMatrix, Matrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_i64_rows(rows).unwrap()
}

fn pad(block: IntMatrix, n: usize) -> IntMatrix {
    let k = block.rows();
    let mut out = Matrix::identity(n);
    for i in 0..k {
        for j in 0..k {
            out.set(n - k + i, n - k + j, block.get(i, j).clone());
        }
    }
    out
}

#[test]
fn transvection_examples() {
    for g in [5usize, 6, 9] {
        let h = g - 1;
        let m = 2 * h;
        assert_eq!(
            transvection(&HomologyVector::a(1, h)).unwrap(),
            standard::a(1, m).unwrap()
        );
        assert_eq!(
            transvection(&HomologyVector::b(2, h)).unwrap(),
            standard::b(2, m).unwrap()
        );
        let diff = &HomologyVector::a(1, h) - &HomologyVector::a(2, h);
        assert_eq!(transvection(&diff).unwrap(), standard::c(1, m).unwrap());
        assert!(
            transvection(&HomologyVector::zero(HomologyContext::Orientable {
                genus: h
            }))
            .unwrap()
            .is_identity()
        );
    }
}

#[test]
fn theta_examples() {
    let s5 = Surface::Orientable { genus: 4 };
    assert_eq!(
        theta_word(Generator::TEps(1), 5).unwrap(),
        Word::parse("a1 a4^-1", s5).unwrap()
    );
    let s6 = Surface::Orientable { genus: 5 };
    assert_eq!(
        theta_word(Generator::TDelta(2), 6).unwrap(),
        Word::parse("b1 b5^-1", s6).unwrap()
    );
    assert_eq!(
        theta_word(Generator::TDelta(3), 5).unwrap(),
        Word::parse("g1 g3^-1", s5).unwrap()
    );
    assert!(theta_word(Generator::U(4), 5).is_err());
}

#[test]
fn homology_map_examples() {
    let maps = homology_maps(5).unwrap();
    let e1 = &HomologyVector::a(1, 4) + &HomologyVector::a(4, 4);
    assert!(maps.reduce(&e1).is_zero());
    let maps6 = homology_maps(6).unwrap();
    let image = maps6.push_forward(&HomologyVector::b(3, 5));
    assert_eq!(image, HomologyVector::x(6, 6).scale(2));
    for g in 5..=12 {
        assert!(ef_basis_is_symplectic(g).unwrap(), "g = {g}");
        let maps = homology_maps(g).unwrap();
        for (i, e) in maps.k_basis.iter().enumerate() {
            for (j, f) in maps.f_basis.iter().enumerate() {
                assert_eq!(pairing(e, f).unwrap(), i64::from(i == j));
            }
            for e2 in &maps.k_basis {
                assert_eq!(pairing(e, e2).unwrap(), 0);
            }
        }
    }
}

#[test]
fn rep_table_examples() {
    let p1 = rep_table(RepName::Psi1, 5).unwrap();
    assert_eq!(
        p1.image(Generator::U(4)).unwrap(),
        &pad(int(&[&[1, 0], &[1, -1]]), 4)
    );
    let p2 = rep_table(RepName::Psi2, 6).unwrap();
    assert_eq!(
        p2.image(Generator::TDelta(5)).unwrap(),
        &pad(int(&[&[1, 1, -2], &[0, 1, 0], &[0, 0, 1]]), 5)
    );
    let p1p = rep_table(RepName::Psi1Prime, 7).unwrap();
    let p1_7 = rep_table(RepName::Psi1, 7).unwrap();
    assert_eq!(
        p1p.image(Generator::TDelta(1)),
        p1_7.image(Generator::TDelta(1))
    );
    assert_eq!(
        p1p.image(Generator::U(6)).unwrap(),
        &-p1_7.image(Generator::U(6)).unwrap().clone()
    );
    assert!(rep_table(RepName::Psi1, 4).is_err());
    assert!(rep_table(RepName::Custom, 6).is_err());
    assert_eq!(psi_u_display(5, 1), pad(int(&[&[1, 0], &[1, -1]]), 4));
    assert_eq!(
        psi_top_delta_display(6, 2),
        pad(int(&[&[1, 1, -2], &[0, 1, 0], &[0, 0, 1]]), 5)
    );
}

#[test]
fn determinants() {
    for g in 5..=10 {
        for name in [RepName::Psi1, RepName::Psi2] {
            let t = rep_table(name, g).unwrap();
            for (gen, m) in t.entries() {
                let det = m.det().unwrap();
                if gen.is_twist() {
                    assert_eq!(det, BigInt::from(1));
                } else {
                    assert!(det == BigInt::from(1) || det == BigInt::from(-1));
                }
            }
            if g % 2 == 1 && name == RepName::Psi1 {
                assert_eq!(
                    t.image(Generator::U(g - 1)).unwrap().det().unwrap(),
                    BigInt::from(-1)
                );
            }
        }
    }
}

#[test]
fn eval_examples() {
    let t = rep_table(RepName::Psi1, 5).unwrap();
    let s = Surface::closed(5);
    assert!(t.eval(&Word::empty(s)).unwrap().is_identity());
    let w = Word::parse("d4 u4 d4", s).unwrap();
    assert_eq!(&t.eval(&w).unwrap(), t.image(Generator::U(4)).unwrap());
    let t6 = rep_table(RepName::Psi1, 6).unwrap();
    let sm = t6.eval(&special_word("s", 6).unwrap()).unwrap();
    assert!(sm.pow(6).unwrap().is_identity());
    assert!(t
        .eval(&Word::parse("d1", Surface::closed(6)).unwrap())
        .is_err());
}

#[test]
fn relation_suites_hold() {
    for g in [5usize, 6, 7, 8] {
        for name in [
            RepName::Psi1,
            RepName::Psi2,
            RepName::Psi1Prime,
            RepName::Psi2Prime,
            RepName::Phi,
        ] {
            let checks = verify_relations(&rep_table(name, g).unwrap()).unwrap();
            assert!(
                checks.iter().all(|c| c.status != RelationStatus::Fails),
                "{name} g={g}"
            );
        }
    }
}

#[test]
fn derived_tables_match() {
    for g in 5..=8 {
        for k in 1..=2 {
            let derived = derive_psi(g, k).unwrap();
            let table = rep_table(if k == 1 { RepName::Psi1 } else { RepName::Psi2 }, g).unwrap();
            for (gen, m) in derived.entries() {
                assert_eq!(Some(m), table.image(gen), "g={g} k={k} {gen}");
            }
            assert_eq!(
                derived.image(Generator::TDelta(1)).unwrap(),
                &standard::a(1, g - 1).unwrap()
            );
        }
    }
    assert!(derive_psi(4, 1).is_err());
    assert!(derive_psi(5, 3).is_err());
}

#[test]
fn block_structure_examples() {
    let d = block_decompose(5, &Word::parse("d1", Surface::closed(5)).unwrap()).unwrap();
    assert!(d.is_upper_triangular() && d.blocks_dual());
    let e = block_decompose(5, &Word::empty(Surface::closed(5))).unwrap();
    assert!(e.x1.is_identity() && e.x2.is_identity() && e.y.is_zero());
    let w = block_decompose(7, &Word::parse("e2 d3^-1", Surface::closed(7)).unwrap()).unwrap();
    assert!(w.is_upper_triangular());
}

#[test]
fn covering_involution_postconditions() {
    for g in 3..=10 {
        let checks = check_covering_involution(g).unwrap();
        assert!(checks.all(), "g = {g}: {checks:?}");
    }
    let j = covering_involution(5).unwrap();
    assert!((&j * &j).is_identity());
}

#[test]
fn non_conjugacy() {
    for g in 5..=8 {
        let report = conjugacy_obstruction(g).unwrap();
        assert!(!report.conjugate, "g = {g}");
        assert_eq!(report.intertwiner_dim, if g % 2 == 1 { 1 } else { 2 });
    }
    let p1 = rep_table(RepName::Psi1, 7).unwrap();
    assert!(conjugacy_between(&p1, &p1).unwrap().conjugate);
}

fn twist_word(g: usize) -> impl Strategy<Value = (usize, Word)> {
    let gens = liftable_twists(g);
    prop::collection::vec((0..gens.len(), -2i64..=2), 0..10).prop_map(move |v| {
        let letters = v
            .into_iter()
            .filter(|(_, e)| *e != 0)
            .map(|(i, e)| (gens[i], e));
        (g, Word::from_letters(Surface::closed(g), letters).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn block_invariant_on_random_words((g, w) in (5usize..=8).prop_flat_map(twist_word)) {
        let d = block_decompose(g, &w).unwrap();
        prop_assert!(d.is_upper_triangular());
        prop_assert!(d.blocks_dual());
    }
}
