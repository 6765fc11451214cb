//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{random_symplectic, random_twist_word, random_w, rng};
use crosscap_core::algebra::{commutant_basis, standard, RatMatrix};
use crosscap_core::homology::{
    block_decompose, check_covering_involution, conjugacy_obstruction, derive_psi, homology_maps,
    liftable_twists, pairing, rep_table, transvection, verify_relations, HomologyVector,
    RelationStatus, RepName,
};
use crosscap_core::mod2::{
    brute_force_isov, consistent_n4_readings, decompose, epsilon_word, make_a, make_b, rho,
    special_vectors, ModTwoVector,
};
use crosscap_core::scenarios::{run_scenario, scenario_matrix, DerivationReport, ScenarioId};
use crosscap_core::surface::{
    dihedral_eval, relations_for, relations_with_reading, special_word, DihedralElement, Generator,
    Surface, Word,
};
use crosscap_core::{Gf2, Matrix};

type Outcome = Result<(), String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const PSI: [RepName; 4] = [
    RepName::Psi1,
    RepName::Psi2,
    RepName::Psi1Prime,
    RepName::Psi2Prime,
];

fn a1() -> Outcome {
    for g in 5..=12 {
        for name in PSI {
            let checks = verify_relations(&rep_table(name, g).map_err(err)?).map_err(err)?;
            if let Some(c) = checks.iter().find(|c| c.status == RelationStatus::Fails) {
                return Err(format!("{name} g={g}: {}", c.relation));
            }
            let held = checks
                .iter()
                .filter(|c| c.status == RelationStatus::Holds)
                .count();
            ensure(held > 0, || format!("{name} g={g}: nothing checked"))?;
            for c in checks
                .iter()
                .filter(|c| c.status == RelationStatus::Skipped)
            {
                ensure(
                    g % 2 == 0 && c.relation.generators().any(|x| x == Generator::TEps(g / 2)),
                    || format!("{name} g={g}: unexpected skip {}", c.relation),
                )?;
            }
        }
    }
    Ok(())
}

fn a2() -> Outcome {
    for g in 5..=12 {
        for k in 1..=2 {
            let derived = derive_psi(g, k).map_err(err)?;
            let table =
                rep_table(if k == 1 { RepName::Psi1 } else { RepName::Psi2 }, g).map_err(err)?;
            for (gen, m) in derived.entries() {
                ensure(table.image(gen) == Some(m), || format!("g={g} k={k} {gen}"))?;
            }
            ensure(
                derived.entries().count() == liftable_twists(g).len(),
                || format!("g={g}: twist count"),
            )?;
        }
    }
    Ok(())
}

fn a3() -> Outcome {
    let mut r = rng(2024);
    for g in 5..=8 {
        let s = Surface::closed(g);
        let mut words: Vec<Word> = liftable_twists(g)
            .into_iter()
            .map(|gen| Word::product(s, &[gen]).map_err(err))
            .collect::<Result<_, _>>()?;
        words.extend((0..200).map(|_| random_twist_word(&mut r, g, 8)));
        for w in &words {
            let d = block_decompose(g, w).map_err(err)?;
            ensure(d.is_upper_triangular() && d.blocks_dual(), || {
                format!("g={g} w={w}")
            })?;
        }
        let inv = check_covering_involution(g).map_err(err)?;
        ensure(inv.all(), || format!("g={g}: {inv:?}"))?;
    }
    Ok(())
}

fn a4() -> Outcome {
    for g in 5..=12 {
        let maps = homology_maps(g).map_err(err)?;
        let (e, f) = (&maps.k_basis, &maps.f_basis);
        ensure(e.len() == f.len() && !e.is_empty(), || {
            format!("g={g}: basis sizes")
        })?;
        for i in 0..e.len() {
            for j in 0..e.len() {
                let want = i64::from(i == j);
                ensure(pairing(&e[i], &f[j]).map_err(err)? == want, || {
                    format!("g={g} <e{i},f{j}>")
                })?;
                ensure(pairing(&e[i], &e[j]).map_err(err)? == 0, || {
                    format!("g={g} <e{i},e{j}>")
                })?;
                ensure(pairing(&f[i], &f[j]).map_err(err)? == 0, || {
                    format!("g={g} <f{i},f{j}>")
                })?;
            }
        }
    }
    Ok(())
}

fn a5() -> Outcome {
    for g in 5..=10 {
        let c = conjugacy_obstruction(g).map_err(err)?;
        let want = if g % 2 == 1 { 1 } else { 2 };
        ensure(!c.conjugate, || format!("g={g}: reported conjugate"))?;
        ensure(c.intertwiner_dim == want, || {
            format!("g={g}: intertwiner dim {}", c.intertwiner_dim)
        })?;
    }
    Ok(())
}

fn a6() -> Outcome {
    for g in 5..=10 {
        let s = special_word("s", g).map_err(err)?;
        let n = if g % 2 == 0 { g } else { 2 * g } as i64;
        for name in [RepName::Psi1, RepName::Psi2] {
            let m = rep_table(name, g).map_err(err)?.eval(&s).map_err(err)?;
            ensure(m.pow(n).map_err(err)?.is_identity(), || {
                format!("{name} g={g}")
            })?;
        }
    }
    Ok(())
}

fn scenario(id: ScenarioId) -> Result<DerivationReport, String> {
    let r = run_scenario(id).map_err(err)?;
    let failed: Vec<&str> = r.failures().map(|s| s.id.as_str()).collect();
    ensure(failed.is_empty(), || format!("{id}: {failed:?}"))?;
    Ok(r)
}

fn step(r: &DerivationReport, id: &str) -> Outcome {
    ensure(r.step(id).is_some_and(|s| s.passed), || {
        format!("{}: step {id}", r.scenario)
    })
}

fn a7() -> Outcome {
    let r = scenario(ScenarioId::Lemma51)?;
    for id in [
        "nilpotent.x",
        "nilpotent.y",
        "nilpotent.shared",
        "terminal.case1",
        "terminal.case2",
        "terminal.case3",
    ] {
        step(&r, id)?;
    }
    Ok(())
}

fn a8() -> Outcome {
    for rr in [3, 4] {
        let r = scenario(ScenarioId::Sec7Odd(rr))?;
        for id in [
            "commutator",
            "x-squared",
            "x=1.defect",
            "x=-1.defect",
            "x=1.table",
            "x=-1.table",
        ] {
            step(&r, id)?;
        }
    }
    Ok(())
}

fn a9() -> Outcome {
    let id = ScenarioId::Sec7Even(4);
    let r = scenario(id)?;
    for s in [
        "D.det",
        "D_r.shape",
        "D_r.excluded",
        "case1.table",
        "case2.table",
        "case1.alpha",
        "case2.alpha",
    ] {
        step(&r, s)?;
    }
    for k in 1..=2 {
        let table =
            rep_table(if k == 1 { RepName::Psi1 } else { RepName::Psi2 }, 10).map_err(err)?;
        for (name, gen) in [
            (format!("D_r-case{k}"), Generator::TDelta(9)),
            (format!("U_{{2r+1}}-case{k}"), Generator::U(9)),
        ] {
            let m = scenario_matrix(id, &name).map_err(err)?;
            let want = table.image(gen).ok_or("missing image")?;
            let lifted = Matrix::from_fn(9, 9, |i, j| {
                crosscap_core::Poly::constant(want.get(i, j).clone().into())
            });
            ensure(m == lifted, || format!("{name} differs from the table"))?;
        }
    }
    Ok(())
}

fn a10() -> Outcome {
    let r = scenario(ScenarioId::Lemma83)?;
    for id in [
        "symmetric.relations",
        "symmetric.irreducible",
        "M.commute",
        "M.reject-plus",
        "M.accept-minus",
        "U7.reject-minus-identity",
    ] {
        step(&r, id)?;
    }
    ensure(r.conclusion == "M = U_7 = L_7", || r.conclusion.clone())?;
    let ls: Vec<RatMatrix> = (1..=7)
        .map(|i| {
            let m = scenario_matrix(ScenarioId::Lemma83, &format!("L{i}")).map_err(err)?;
            Ok(m.map(|p| p.as_constant().expect("constant entries")))
        })
        .collect::<Result<_, String>>()?;
    ensure(
        commutant_basis(&ls, 7).map_err(err)?.dimension() == 1,
        || "commutant dimension".into(),
    )
}

fn a11() -> Outcome {
    for r in 1..=3 {
        let sv = special_vectors(r).map_err(err)?;
        let zs: Vec<ModTwoVector> = ModTwoVector::all(2 * r)
            .map(|y| sv.from_w_coords(&y))
            .collect();
        let mut bs = Vec::new();
        for x in [Gf2::ZERO, Gf2::ONE] {
            for z in &zs {
                bs.push((x, z.clone(), make_b(&sv, x, z).map_err(err)?));
            }
        }
        for (x1, z1, b1) in &bs {
            for (x2, z2, b2) in &bs {
                let want = make_b(&sv, *x1 + *x2 + z1.dot(z2), &(z1 + z2)).map_err(err)?;
                ensure(b1 * b2 == want, || format!("r={r}: B group law"))?;
            }
        }
    }
    let mut g = rng(99);
    for i in 0..100 {
        let sv = special_vectors(1 + i % 3).map_err(err)?;
        let rm = random_symplectic(&mut g, &sv);
        let x = Gf2(rand::Rng::gen(&mut g));
        let z = random_w(&mut g, &sv);
        let a = make_a(&sv, &rm).map_err(err)?;
        let lhs = &(&a * &make_b(&sv, x, &z).map_err(err)?) * &a.inverse().map_err(err)?;
        let rz = sv.from_w_coords(&ModTwoVector::apply(&rm, &sv.coordinates(&z).0));
        ensure(lhs == make_b(&sv, x, &rz).map_err(err)?, || {
            "conjugation action".into()
        })?;
    }
    for i in 0..1000 {
        let sv = special_vectors(1 + i % 3).map_err(err)?;
        let rm = random_symplectic(&mut g, &sv);
        let x = Gf2(rand::Rng::gen(&mut g));
        let z = random_w(&mut g, &sv);
        let l = &make_b(&sv, x, &z).map_err(err)? * &make_a(&sv, &rm).map_err(err)?;
        let d = decompose(&sv, &l).map_err(err)?;
        ensure(d.x == x && d.z == z && d.r == rm, || {
            "decomposition round trip".into()
        })?;
    }
    let b = brute_force_isov(1).map_err(err)?;
    ensure(
        b.order == 48 && b.matches_constructive && b.all_fix_d,
        || format!("{b:?}"),
    )
}

fn a12() -> Outcome {
    let s = Surface::closed(8);
    for rel in relations_for(8, 0).map_err(err)? {
        ensure(
            epsilon_word(8, &rel.relator()).map_err(err)?.is_identity(),
            || format!("{rel}"),
        )?;
    }
    for w in ["d7 u7", "d7 e3^-1"] {
        let m = epsilon_word(8, &Word::parse(w, s).map_err(err)?).map_err(err)?;
        ensure(m.is_identity() && m.rows() == 6, || format!("epsilon({w})"))?;
    }
    let sv = special_vectors(3).map_err(err)?;
    let b = make_b(&sv, Gf2::ONE, &sv.v[2]).map_err(err)?;
    let lhs = rho(8, Generator::TDelta(7)).map_err(err)?;
    ensure(
        lhs == &b * &rho(8, Generator::TEps(3)).map_err(err)?,
        || "rho(d7) = B rho(e3)".into(),
    )
}

fn a13() -> Outcome {
    let readings = consistent_n4_readings().map_err(err)?;
    ensure(readings.len() == 1, || {
        format!("{} readings survive", readings.len())
    })?;
    for rel in relations_with_reading(4, 0, readings[0]).map_err(err)? {
        ensure(
            dihedral_eval(&rel.relator()).map_err(err)?.is_identity(),
            || format!("{rel}"),
        )?;
    }
    let xy = DihedralElement::xy();
    let mut acc = DihedralElement::IDENTITY;
    for n in 1..=10_000 {
        acc = acc.mul(xy);
        ensure(!acc.is_identity(), || format!("(xy)^{n} = 1"))?;
    }
    Ok(())
}

fn a14() -> Outcome {
    for g in 5..=10 {
        let h = g - 1;
        let m = 2 * h;
        for i in 1..=h {
            ensure(
                transvection(&HomologyVector::a(i, h)).map_err(err)?
                    == standard::a(i, m).map_err(err)?,
                || format!("g={g} a{i}"),
            )?;
            ensure(
                transvection(&HomologyVector::b(i, h)).map_err(err)?
                    == standard::b(i, m).map_err(err)?,
                || format!("g={g} b{i}"),
            )?;
        }
        for j in 1..h {
            let v = &HomologyVector::a(j, h) - &HomologyVector::a(j + 1, h);
            ensure(
                transvection(&v).map_err(err)? == standard::c(j, m).map_err(err)?,
                || format!("g={g} c{j}"),
            )?;
        }
    }
    Ok(())
}

fn a15() -> Outcome {
    for g in 5..=10 {
        for name in [RepName::Psi1, RepName::Psi2] {
            let t = rep_table(name, g).map_err(err)?;
            let d1 = t.image(Generator::TDelta(1)).ok_or("missing d1")?;
            ensure(!(d1 * d1).is_identity(), || {
                format!("{name} g={g}: d1^2 = I")
            })?;
            for i in 1..=(g - 1) / 2 {
                let Some(e) = t.image(Generator::TEps(i)) else {
                    continue;
                };
                for j in 2 * i + 1..g {
                    let d = t.image(Generator::TDelta(j)).ok_or("missing twist")?;
                    ensure(e != d, || format!("{name} g={g}: e{i} = d{j}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 15] = [
        (
            "A1",
            "relation suite under the four Psi variants, g = 5..12",
            a1,
        ),
        (
            "A2",
            "derived twist images equal the displayed tables, g = 5..12",
            a2,
        ),
        (
            "A3",
            "block triangularity on generators and random words; covering involution",
            a3,
        ),
        ("A4", "(e, f) is a symplectic basis, g = 5..12", a4),
        ("A5", "Psi_1 and Psi_2 are not conjugate, g = 5..10", a5),
        ("A6", "order of Psi_k(s) divides g or 2g", a6),
        ("A7", "lemma51 scenario", a7),
        ("A8", "odd genus scenario, r = 3, 4", a8),
        ("A9", "even genus scenario, r = 4", a9),
        ("A10", "lemma83 scenario", a10),
        ("A11", "Iso(V) = N x| Sp(W)", a11),
        ("A12", "epsilon is well defined at g = 8", a12),
        (
            "A13",
            "dihedral quotient of M(N_4) and infinite order of xy",
            a13,
        ),
        (
            "A14",
            "transvections of a_i, b_i, a_j - a_{j+1}, g = 5..10",
            a14,
        ),
        (
            "A15",
            "twist images are distinct and t_d1 has infinite order, g = 5..10",
            a15,
        ),
    ];
    let mut failed = 0;
    for (id, desc, f) in criteria {
        let started = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {id} — {desc} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} — {desc}: {why}");
            }
        }
    }
    println!("{} of 15 criteria pass", 15 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
