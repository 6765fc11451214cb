//! Genus 8 into `GL(7, C)` when `f(t_{δ_1})` has order two: the symmetric
//! group part is the standard representation twisted by the sign.

use super::{
    braid_system, commute_system, constant, evidence, ints, lift, p, product, Builder, PolyMatrix,
};
use crate::algebra::{commutant_basis, IntMatrix, Matrix, Poly};
use crate::constraints::{extract, verify_assignment, ConstraintSystem, Substitution};
use crate::error::Result;

fn minus_identity(k: usize) -> Option<IntMatrix> {
    (k > 0).then(|| Matrix::identity(k).scale(&(-1).into()))
}

fn block(parts: Vec<Option<IntMatrix>>) -> Result<IntMatrix> {
    let parts: Vec<IntMatrix> = parts.into_iter().flatten().collect();
    Matrix::block_diag(&parts)
}

/// `L_1, ..., L_7`, indexed from zero.
pub(crate) fn symmetric_group_images() -> Result<Vec<IntMatrix>> {
    let a = ints(&[&[1, -1], &[0, -1]]);
    let b = ints(&[&[-1, 0], &[-1, 1]]);
    let c = ints(&[&[-1, 0, 0], &[-1, 1, -1], &[0, 0, -1]]);
    let mut out = vec![block(vec![Some(a), minus_identity(5)])?];
    for i in 2..=6 {
        out.push(block(vec![
            minus_identity(i - 2),
            Some(c.clone()),
            minus_identity(6 - i),
        ])?);
    }
    out.push(block(vec![minus_identity(5), Some(b)])?);
    Ok(out)
}

fn var_subst(pairs: Vec<(String, Poly)>) -> Substitution {
    pairs.into_iter().collect()
}

pub(super) fn run(b: &mut Builder) -> Result<String> {
    let ls: Vec<PolyMatrix> = symmetric_group_images()?.iter().map(lift).collect();
    b.keep("A", &lift(&ints(&[&[1, -1], &[0, -1]])));
    b.keep("B", &lift(&ints(&[&[-1, 0], &[-1, 1]])));
    b.keep("C", &lift(&ints(&[&[-1, 0, 0], &[-1, 1, -1], &[0, 0, -1]])));
    for (i, l) in ls.iter().enumerate() {
        b.keep(format!("L{}", i + 1), l);
    }

    let mut ok = true;
    let mut failures = Vec::new();
    for i in 0..7 {
        if !(&ls[i] * &ls[i]).is_identity() {
            ok = false;
            failures.push(format!("L{}^2 != I", i + 1));
        }
        for j in i + 1..7 {
            let holds = if j == i + 1 {
                braid_system(&ls[i], &ls[j])?.is_empty()
            } else {
                commute_system(&ls[i], &ls[j])?.is_empty()
            };
            if !holds {
                ok = false;
                failures.push(format!("relation between L{} and L{} fails", i + 1, j + 1));
            }
        }
    }
    b.step(
        "symmetric.relations",
        "L_i^2 = I, L_i L_j = L_j L_i for |i - j| > 1, L_i L_{i+1} L_i = L_{i+1} L_i L_{i+1}",
        "all relations of the symmetric group on 8 letters hold",
        ok,
        failures,
    );

    let rat: Vec<_> = symmetric_group_images()?.iter().map(Matrix::lift).collect();
    let comm = commutant_basis(&rat, 7)?;
    b.step(
        "symmetric.irreducible",
        "commutant of L_1, ..., L_7",
        "dimension 1",
        comm.dimension() == 1,
        vec![format!("dimension {}", comm.dimension())],
    );

    // M = f(t_{ε_3}).
    let m = Matrix::from_fn(7, 7, |i, j| {
        if j == 5 {
            Poly::var(&format!("y{}", i + 1))
        } else if i == j {
            Poly::var(&format!("x{}", i + 1))
        } else {
            Poly::zero()
        }
    });
    b.keep("M", &m);
    let units = ["x1", "x2", "x3", "x4", "x5", "x7"];
    let mut sys = ConstraintSystem::new();
    for i in [0, 1, 2, 3, 4, 6] {
        sys.extend(&commute_system(&m, &ls[i])?);
    }
    let res = b.solve(&sys, &units)?;
    let mut expected: Vec<Poly> = (2..=5)
        .flat_map(|i| [p(&format!("x{i} - x1")), p(&format!("y{i} - {i}*y1"))])
        .collect();
    expected.push(p("y6 - x1 - 6*y1"));
    expected.push(p("x7 - y6 + 2*y7"));
    b.step(
        "M.commute",
        "M L_i = L_i M for i = 1..5 and i = 7",
        "x_i = x_1, y_i = i y_1 for i <= 5, y_6 = x_1 + 6 y_1, x_7 = y_6 - 2 y_7",
        res.is_fully_solved() && res.branches.len() == 1 && expected.iter().all(|e| res.implies(e)),
        evidence(&sys, &res),
    );

    // Same spectrum as L_i: x_1 = -1 and {y_6, x_7} = {-1, 1}.
    let mut eig = sys.clone();
    for e in ["x1 + 1", "y6 + x7", "y6^2 - 1"] {
        eig.push(p(e));
    }
    let res = b.solve(&eig, &units)?;
    let branch_with = |v: i64| {
        res.branches
            .iter()
            .find(|br| br.value("y6") == constant(v))
            .cloned()
    };
    let (plus, minus) = (branch_with(1), branch_with(-1));
    let l6 = &ls[5];
    let mut ev = evidence(&eig, &res);
    let rejected = match &plus {
        Some(br) => {
            let mm = br.apply(&m);
            let defect = braid_system(&mm, l6)?;
            ev.push(format!("braid defect at y6 = 1: {defect}"));
            br.value("y1") == p("1/3") && br.value("y7") == constant(1) && !defect.is_empty()
        }
        None => false,
    };
    b.step(
        "M.reject-plus",
        "y6 = 1 in M L6 M = L6 M L6",
        "y1 = 1/3, y7 = 1 and the braid relation fails",
        rejected,
        ev,
    );
    let accepted = match &minus {
        Some(br) => {
            let mm = br.apply(&m);
            br.value("y1").is_zero()
                && br.value("y7") == constant(-1)
                && braid_system(&mm, l6)?.is_empty()
                && mm == ls[6]
        }
        None => false,
    };
    b.step(
        "M.accept-minus",
        "y6 = -1",
        "y1 = 0, y7 = -1 and M = L7",
        accepted,
        minus.iter().map(|br| format!("branch: {br}")).collect(),
    );

    // U_7 = f(u_7), of the same shape as M.
    let u7 = Matrix::from_fn(7, 7, |i, j| match (i, j) {
        (i, 5) if i < 5 => p(&format!("{}*y", i + 1)),
        (5, 5) => p("x + 6*y"),
        (6, 5) => p("z"),
        (6, 6) => p("x + 6*y - 2*z"),
        (i, j) if i == j => p("x"),
        _ => Poly::zero(),
    });
    b.keep("U7", &u7);
    let mut shape = vec![
        ("x7".to_string(), p("x + 6*y - 2*z")),
        ("y6".to_string(), p("x + 6*y")),
        ("y7".to_string(), p("z")),
    ];
    for i in 1..=5 {
        shape.push((format!("x{i}"), p("x")));
        shape.push((format!("y{i}"), p(&format!("{i}*y"))));
    }
    let shape = var_subst(shape);
    b.step(
        "U7.shape",
        "U7 commutes with L_1..L_5 and with M = L7",
        "U7 is the displayed three-parameter matrix",
        verify_assignment(&sys, &shape) && m.map(|e| e.substitute(&shape)) == u7,
        vec![format!("U7 = {u7}")],
    );

    let u7 = u7.map(|e| e.subst("x", &constant(-1)));
    let conj = product(&[l6, &ls[6], &ls[4], l6]);
    let u5 = u7.conjugate_by(&conj)?;
    b.keep("U5", &u5);
    let sys = commute_system(&u5, &u7)?;
    let res = b.solve(&sys, &[])?;
    b.step(
        "U7.y",
        "x = -1 and U5 U7 = U7 U5 with U5 = (L6 L7 L5 L6)^-1 U7 (L6 L7 L5 L6)",
        "y = 0",
        res.implies(&p("y")),
        evidence(&sys, &res),
    );

    let u7 = u7.map(|e| e.subst("y", &Poly::zero()));
    let det = u7.det()?;
    let sys = ConstraintSystem::from_polys([&(&det * &det) - &constant(1)]);
    let res = b.solve(&sys, &[])?;
    let zs: Vec<Poly> = res.branches.iter().map(|br| br.value("z")).collect();
    b.step(
        "U7.det",
        "det U7 = -1 - 2z must be 1 or -1",
        "z = -1 or z = 0",
        det == p("-1 - 2*z") && zs == [constant(-1), Poly::zero()],
        evidence(&sys, &res),
    );

    let minus_i = PolyMatrix::identity(7).scale(&constant(-1));
    let zero_case = u7.map(|e| e.subst("z", &Poly::zero()));
    let u6 = minus_i.clone();
    let r10 = extract(
        &product(&[l6, &zero_case, &u6]),
        &product(&[&zero_case, &u6, &ls[6]]),
    )?;
    b.step(
        "U7.reject-minus-identity",
        "z = 0 gives U7 = -I, so U6 = -I and L6 U7 U6 = U7 U6 L7",
        "L6 = L7, a contradiction",
        zero_case == minus_i && !r10.is_empty(),
        vec![format!("R10 defect: {r10}")],
    );

    let final_u7 = u7.map(|e| e.subst("z", &constant(-1)));
    let m_final = minus.map(|br| br.apply(&m));
    b.step(
        "conclusion",
        "z = -1",
        "M = U_7 = L_7",
        final_u7 == ls[6] && m_final.as_ref() == Some(&ls[6]),
        vec![format!("U7 = {final_u7}")],
    );
    Ok("M = U_7 = L_7".into())
}
