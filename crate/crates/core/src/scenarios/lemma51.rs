//! Homomorphisms from the mapping class group of `N_{4,n}` to `GL(2, C)`.

use num_traits::Zero;

use super::{
    braid_system, constant, evidence, ints, lift, p, pm, product, subst_matrix, Builder, PolyMatrix,
};
use crate::algebra::{intertwiner_basis, Matrix};
use crate::error::Result;

fn squares_to_identity(m: &PolyMatrix) -> bool {
    (m * m).is_identity()
}

pub(super) fn run(b: &mut Builder) -> Result<String> {
    let lam_sq = p("l^2 - 1");

    // One eigenvalue, E(L1) != E(L2).
    let l1 = pm(&[&["l", "1"], &["0", "l"]]);
    let l2 = pm(&[&["l", "0"], &["x", "l"]]);
    b.keep("L1", &l1);
    b.keep("L2", &l2);
    let mut sys = braid_system(&l1, &l2)?;
    sys.push(lam_sq.clone());
    let res = b.solve(&sys, &["l"])?;
    b.step(
        "nilpotent.x",
        "L1 = (l 1; 0 l), L2 = (l 0; x l), l^2 = 1 and L1 L2 L1 = L2 L1 L2",
        "x = -1",
        res.is_fully_solved() && res.implies(&p("x + 1")),
        evidence(&sys, &res),
    );

    let l2 = subst_matrix(&l2, &[("x", constant(-1))]);
    let l3 = pm(&[&["l", "y"], &["0", "l"]]);
    b.keep("L3", &l3);
    let mut sys = braid_system(&l2, &l3)?;
    sys.push(lam_sq.clone());
    let res = b.solve(&sys, &["l"])?;
    let same = res.branches.iter().all(|br| br.apply(&l3) == br.apply(&l1));
    b.step(
        "nilpotent.y",
        "L3 = (l y; 0 l) commutes with L1 and L2 L3 L2 = L3 L2 L3",
        "y = 1, hence L1 = L3",
        res.is_fully_solved() && res.implies(&p("y - 1")) && same,
        evidence(&sys, &res),
    );

    let squares: Vec<PolyMatrix> = [1, -1]
        .iter()
        .map(|&v| {
            let m = subst_matrix(&l1, &[("l", constant(v))]);
            &m * &m
        })
        .collect();
    b.step(
        "nilpotent.contradiction",
        "L1 = L3 forces L1^2 = I, but L1^2 is a nontrivial unipotent matrix",
        "L1^2 != I for l = 1 and l = -1",
        squares.iter().all(|m| !m.is_identity()),
        squares.iter().map(|m| format!("L1^2 = {m}")).collect(),
    );

    // One eigenvalue, E(L1) = E(L2).
    let l2 = pm(&[&["l", "x"], &["0", "l"]]);
    let mut sys = braid_system(&l1, &l2)?;
    sys.push(lam_sq.clone());
    let res_x = b.solve(&sys, &["l"])?;
    let l2 = subst_matrix(&l2, &[("x", constant(1))]);
    let mut sys3 = braid_system(&l2, &l3)?;
    sys3.push(lam_sq);
    let res_y = b.solve(&sys3, &["l"])?;
    let mut ev = evidence(&sys, &res_x);
    ev.extend(evidence(&sys3, &res_y));
    b.step(
        "nilpotent.shared",
        "L1 = (l 1; 0 l), L2 = (l x; 0 l), L3 = (l y; 0 l) with the braid relations",
        "x = y = 1, so L1 = L2 = L3 and the same contradiction applies",
        res_x.implies(&p("x - 1")) && res_y.implies(&p("y - 1")),
        ev,
    );

    // Two eigenvalues: L3 = -L1 is impossible.
    let d = lift(&ints(&[&[1, 0], &[0, -1]]));
    let neg = -&d;
    let g = pm(&[&["p", "q"], &["s", "t"]]);
    let defect = |x: &PolyMatrix| &product(&[x, &g, x]) - &product(&[&g, x, &g]);
    let lhs = &defect(&neg) - &defect(&d);
    let rhs = product(&[&g, &d, &g]).scale(&constant(2));
    b.step(
        "two-eigenvalues.sign",
        "L1 = diag(1, -1), L3 = -L1: subtracting the two braid defects",
        "2 L2 L1 L2, so both braid relations force L2 L1 L2 = 0 and L3 = L1",
        lhs == rhs,
        vec![format!("difference of defects = {lhs}")],
    );

    // Two eigenvalues, E(L1, 1) != E(L2, 1).
    let l1c = pm(&[&["1", "1"], &["0", "-1"]]);
    let l2c = pm(&[&["-1", "0"], &["x", "1"]]);
    b.keep("L1-case3", &l1c);
    let sys = braid_system(&l1c, &l2c)?;
    let res = b.solve(&sys, &[])?;
    b.step(
        "case3.x",
        "L1 = (1 1; 0 -1), L2 = (-1 0; x 1) and L1 L2 L1 = L2 L1 L2",
        "x = 1",
        res.is_fully_solved() && res.implies(&p("x - 1")),
        evidence(&sys, &res),
    );
    let l2c = subst_matrix(&l2c, &[("x", constant(1))]);
    b.keep("L2-case3", &l2c);

    let x1 = ints(&[&[1, 1], &[0, -1]]);
    let x2 = ints(&[&[-1, 0], &[1, 1]]);
    let y1 = ints(&[&[-1, 1], &[0, 1]]);
    let y2 = ints(&[&[1, 0], &[1, -1]]);
    let pairs = [
        (Matrix::lift(&x1), Matrix::lift(&y1)),
        (Matrix::lift(&x2), Matrix::lift(&y2)),
    ];
    let basis = intertwiner_basis(&pairs, 2)?;
    let invertible = basis
        .iter()
        .any(|m| m.det().map(|d| !d.is_zero()).unwrap_or(false));
    let braided = braid_system(&lift(&y1), &lift(&y2))?.is_empty();
    b.step(
        "case3.alternative",
        "L1 = (-1 1; 0 1), L2 = (1 0; 1 -1) when E(L1, -1) != E(L2, -1)",
        "the braid relation holds and the pair is conjugate to case (3)",
        braided && invertible,
        basis.iter().map(|m| format!("intertwiner {m}")).collect(),
    );

    // Terminal cases.
    let case1: Vec<PolyMatrix> = [1, -1]
        .iter()
        .map(|&v| PolyMatrix::identity(2).scale(&constant(v)))
        .collect();
    b.step(
        "terminal.case1",
        "L1 = L2 = L3 = l I with l in {-1, 1}",
        "L1^2 = I",
        case1.iter().all(squares_to_identity),
        vec![],
    );
    b.step(
        "terminal.case2",
        "L1 = L2 = L3 = diag(1, -1)",
        "L1^2 = I",
        squares_to_identity(&d),
        vec![],
    );
    b.step(
        "terminal.case3",
        "L1 = L3 = (1 1; 0 -1), L2 = (-1 0; 1 1)",
        "L1^2 = I and the braid relation holds",
        squares_to_identity(&l1c) && braid_system(&l1c, &l2c)?.is_empty(),
        vec![format!("L1 = {l1c}"), format!("L2 = {l2c}")],
    );
    Ok("f(t_d1)^2 = 1 in all three cases".into())
}
