//! Genus `g` into `GL(g - 1, C)`: recovering `Ψ_1` and `Ψ_2` from the
//! homological representation of the orientable subsurface.

use super::{
    braid_system, commute_system, constant, embed, evidence, lift, p, pm, product, std_a, std_b,
    std_c, subst_matrix, Builder, PolyMatrix,
};
use num_rational::BigRational;

use crate::algebra::{Matrix, Poly};
use crate::constraints::{differences, extract, ConstraintSystem, Substitution};
use crate::error::Result;
use crate::homology::{psi_top_delta_display, psi_u_display, rep_table, GeneratorTable, RepName};
use crate::surface::Generator;

fn psi(k: usize) -> RepName {
    if k == 1 {
        RepName::Psi1
    } else {
        RepName::Psi2
    }
}

fn matches(table: &GeneratorTable, gen: Generator, m: &PolyMatrix) -> bool {
    table.image(gen).map(|x| lift(x) == *m).unwrap_or(false)
}

/// Compares the twist images shared by both parities with the stored table.
fn twist_images_match(table: &GeneratorTable, r: usize, m: usize) -> Result<bool> {
    let mut ok = true;
    for i in 1..=r {
        ok &= matches(table, Generator::TEps(i), &std_a(i, m)?);
        ok &= matches(table, Generator::TDelta(2 * i), &std_b(i, m)?);
    }
    for j in 1..r {
        ok &= matches(table, Generator::TDelta(2 * j + 1), &std_c(j, m)?);
    }
    Ok(ok)
}

pub(super) fn run_odd(b: &mut Builder, r: usize) -> Result<String> {
    let m = 2 * r;
    let g = 2 * r + 1;
    let br = std_b(r, m)?;
    let br1 = std_b(r - 1, m)?;
    let cr1 = std_c(r - 1, m)?;

    let generic = embed(&pm(&[&["p", "q"], &["s", "t"]]), m - 2, m);
    let sys = extract(&product(&[&br, &generic, &br]), &generic)?;
    let res = b.solve(&sys, &[])?;
    b.step(
        "R12",
        "U_{2r} = diag(I, X) with B_r U_{2r} B_r = U_{2r}",
        "X = (x 0; y -x)",
        res.is_fully_solved() && res.implies(&p("q")) && res.implies(&p("t + p")),
        evidence(&sys, &res),
    );

    let x_block = pm(&[&["x", "0"], &["y", "-x"]]);
    let u = embed(&x_block, m - 2, m);
    b.keep("X", &x_block);
    b.keep("U_{2r}", &u);

    let u_prev = u.conjugate_by(&product(&[&cr1, &br, &br1, &cr1]))?;
    b.keep("U_{2r-2}", &u_prev);
    let comm = &(&u * &u_prev) - &(&u_prev * &u);
    let mut expected = PolyMatrix::zeros(m, m);
    let factor = p("1 - x^2");
    expected.set(2 * r - 1, 2 * r - 4, factor.clone());
    expected.set(2 * r - 3, 2 * r - 2, factor);
    let zero = PolyMatrix::zeros(m, m);
    let positions: Vec<(usize, usize)> = differences(&comm, &zero)?
        .into_iter()
        .map(|(at, _)| at)
        .collect();
    b.step(
        "commutator",
        "U_{2r} U_{2r-2} - U_{2r-2} U_{2r} with U_{2r-2} conjugated by C_{r-1} B_r B_{r-1} C_{r-1}",
        "(1 - x^2)(E_{2r,2r-3} + E_{2r-2,2r-1})",
        comm == expected && positions == [(2 * r - 2, 2 * r - 1), (2 * r, 2 * r - 3)],
        vec![format!("nonzero entries at {positions:?}")],
    );

    let sys = extract(&comm, &zero)?;
    let res = b.solve(&sys, &[])?;
    let xs: Vec<Poly> = res.branches.iter().map(|br| br.value("x")).collect();
    b.step(
        "x-squared",
        "the commutator vanishes",
        "x = -1 or x = 1",
        res.is_fully_solved() && xs == [constant(-1), constant(1)],
        evidence(&sys, &res),
    );

    let mut conclusions = Vec::new();
    for (x, k) in [(1i64, 1usize), (-1, 2)] {
        let ux = subst_matrix(&u, &[("x", constant(x))]);
        let involution = (&ux * &ux).is_identity();
        let u_mid = ux.conjugate_by(&(&cr1 * &br))?;
        let defect = &product(&[&ux, &u_mid, &ux]) - &product(&[&u_mid, &ux, &u_mid]);
        let square = (&p("y") - &constant(x)).pow(2);
        let quotient: Option<Vec<Poly>> = defect
            .entries()
            .iter()
            .map(|e| e.div_exact(&square))
            .collect();
        let (divisible, z_nonzero) = match &quotient {
            Some(q) => {
                let z = Matrix::new(m, m, q.clone())?;
                let at = z.map(|e| e.subst("y", &constant(x)));
                (true, !at.is_zero())
            }
            None => (false, false),
        };
        b.step(
            format!("x={x}.defect"),
            format!("x = {x}: U_{{2r}} U_{{2r-1}} U_{{2r}} - U_{{2r-1}} U_{{2r}} U_{{2r-1}}"),
            "(y - x)^2 Z with Z nonzero at y = x",
            involution && divisible && z_nonzero,
            vec![],
        );
        let sys = extract(&defect, &zero)?;
        let res = b.solve(&sys, &[])?;
        b.step(
            format!("x={x}.y"),
            format!("x = {x}: solving the braid defect"),
            "y = x",
            res.is_fully_solved() && res.implies(&(&p("y") - &constant(x))),
            evidence(&sys, &res),
        );
        let final_u = subst_matrix(&ux, &[("y", constant(x))]);
        let table = rep_table(psi(k), g)?;
        b.step(
            format!("x={x}.table"),
            format!("x = {x}: A_i, B_i, C_j and U_{{2r}} against Ψ_{k} at genus {g}"),
            format!("U_{{2r}} = Ψ_{k}(u_{{2r}}) and the twists agree"),
            matches(&table, Generator::U(2 * r), &final_u)
                && final_u == lift(&psi_u_display(g, k))
                && twist_images_match(&table, r, m)?,
            vec![format!("U_{{2r}} = {final_u}")],
        );
        conclusions.push(format!("x = {x}: U_{{2r}} = Ψ_{k}(u_{{2r}})"));
    }
    Ok(conclusions.join("; "))
}

/// The displayed shape of `D_i` before the braid relations are imposed.
fn d_shape(i: usize, m: usize, names: [&str; 11]) -> PolyMatrix {
    let [s1, t1, v1, x1, v2, s2, t2, x2, y1, y2, z] = names.map(p);
    let a = 2 * i - 2;
    let last = m - 1;
    let mut d = PolyMatrix::identity(m);
    for (at, e) in [
        ((a, a), s1.clone()),
        ((a, a + 1), t1),
        ((a + 1, a + 1), s1),
        ((a, a + 3), v1),
        ((a, last), x1),
        ((a + 2, a + 1), v2),
        ((a + 2, a + 2), s2.clone()),
        ((a + 2, a + 3), t2),
        ((a + 3, a + 3), s2),
        ((a + 2, last), x2),
        ((last, a + 1), y1),
        ((last, a + 3), y2),
        ((last, last), z),
    ] {
        d.set(at.0, at.1, e);
    }
    d
}

const SHAPE: [&str; 11] = [
    "s1", "t1", "v1", "x1", "v2", "s2", "t2", "x2", "y1", "y2", "z",
];

/// `D_i` after the braid relations, with `α_i^{-1}` written as `b_i`.
fn d_alpha(i: usize, m: usize) -> PolyMatrix {
    let (al, inv, x, y) = (
        format!("a{i}"),
        format!("b{i}"),
        format!("x{i}"),
        format!("y{i}"),
    );
    d_shape(
        i,
        m,
        [
            "1",
            "1",
            &al,
            &format!("{al}*{x}"),
            &inv,
            "1",
            "1",
            &x,
            &y,
            &format!("{al}*{y}"),
            "1",
        ],
    )
}

fn d_last(r: usize, m: usize) -> PolyMatrix {
    embed(
        &pm(&[
            &["1", "1", &format!("x{r}")],
            &["0", "1", "0"],
            &["0", &format!("y{r}"), "1"],
        ]),
        m - 3,
        m,
    )
}

fn reduce_matrix(mat: &PolyMatrix, rels: &[Poly]) -> PolyMatrix {
    mat.map(|e| e.reduce(rels))
}

fn diagonal(entries: &[Poly]) -> PolyMatrix {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            entries[i].clone()
        } else {
            Poly::zero()
        }
    })
}

pub(super) fn run_even(b: &mut Builder, r: usize) -> Result<String> {
    let m = 2 * r + 1;
    let g = 2 * r + 2;
    let last = m - 1;
    if r == 3 {
        b.step(
            "hypothesis",
            "r = 3: 1 is taken to be the unique eigenvalue of f(t_{δ_1})",
            "assumed, not derived",
            true,
            vec![],
        );
    }

    // Shape of D_i from D_i A_i = A_i D_i and D_i A_{i+1} = A_{i+1} D_i.
    for i in 1..r {
        let a = 2 * i - 2;
        let idx = [a, a + 1, a + 2, a + 3, last];
        let mut d = PolyMatrix::identity(m);
        for &u in &idx {
            for &v in &idx {
                d.set(u, v, Poly::var(&format!("d{}_{}", u + 1, v + 1)));
            }
        }
        let mut sys = commute_system(&d, &std_a(i, m)?)?;
        sys.extend(&commute_system(&d, &std_a(i + 1, m)?)?);
        let res = b.solve(&sys, &[])?;
        let ok = match res.branches.as_slice() {
            [br] if res.is_fully_solved() => {
                let solved = br.apply(&d);
                let spots = [
                    (a, a),
                    (a, a + 1),
                    (a, a + 3),
                    (a, last),
                    (a + 2, a + 1),
                    (a + 2, a + 2),
                    (a + 2, a + 3),
                    (a + 2, last),
                    (last, a + 1),
                    (last, a + 3),
                    (last, last),
                ];
                let mut rename = Substitution::new();
                for (at, name) in spots.iter().zip(SHAPE) {
                    let e = solved.get(at.0, at.1);
                    let vars = e.variables();
                    if vars.len() == 1 && *e == Poly::var(&vars.iter().next().expect("one")[..]) {
                        rename.insert(
                            vars.iter().next().expect("one").to_string(),
                            Poly::var(name),
                        );
                    }
                }
                rename.len() == SHAPE.len()
                    && solved.map(|e| e.substitute(&rename)) == d_shape(i, m, SHAPE)
            }
            _ => false,
        };
        b.step(
            format!("D{i}.shape"),
            format!("D_{i} commutes with A_{i} and A_{}", i + 1),
            "F_11, F_22 upper triangular with equal diagonal, F_12, F_21, X_k, Y_l with one entry each",
            ok,
            evidence(&sys, &res),
        );
    }
    let generic = d_shape(1, m, SHAPE);
    b.keep("D_i-shape", &generic);
    let det = subst_matrix(&generic, &[("s1", constant(1)), ("s2", constant(1))]).det()?;
    b.step(
        "D.det",
        "det D_i with s1 = s2 = 1",
        "det D_i = z, hence z = 1",
        det == p("z"),
        vec![format!("det = {det}")],
    );

    let expected = [
        "t1 - 1",
        "t2 - 1",
        "v1*v2 - 1",
        "y2 - y1*v1",
        "x2 - x1*v2",
        "x1*y1",
    ]
    .map(p);
    for i in 1..r {
        let d = d_shape(
            i,
            m,
            [
                "1", "t1", "v1", "x1", "v2", "1", "t2", "x2", "y1", "y2", "1",
            ],
        );
        let mut sys = braid_system(&std_b(i, m)?, &d)?;
        sys.extend(&braid_system(&std_b(i + 1, m)?, &d)?);
        let res = b.solve(&sys, &["v1", "v2"])?;
        let derived = expected.iter().all(|e| res.implies(e));
        let display = d_alpha(i, m);
        let rels = [p(&format!("a{i}*b{i} - 1")), p(&format!("x{i}*y{i}"))];
        let mut check = braid_system(&std_b(i, m)?, &display)?;
        check.extend(&braid_system(&std_b(i + 1, m)?, &display)?);
        check.extend(&commute_system(&display, &std_a(i, m)?)?);
        check.extend(&commute_system(&display, &std_a(i + 1, m)?)?);
        let consistent = check.polys().iter().all(|e| e.reduce(&rels).is_zero());
        b.step(
            format!("D{i}.braid"),
            format!(
                "B_{i} D_{i} B_{i} = D_{i} B_{i} D_{i} and B_{} D_{i} B_{} = D_{i} B_{} D_{i}",
                i + 1,
                i + 1,
                i + 1
            ),
            "t1 = t2 = 1, v1 v2 = 1, y2 = y1 v1, x2 = x1 v2, x1 y1 = 0",
            derived && consistent,
            evidence(&sys, &res),
        );
        b.keep(format!("D_{i}"), &display);
    }
    b.keep("D_i", &d_alpha(1, m));

    // D_r.
    let q: Vec<String> = (1..=9).map(|k| format!("q{k}")).collect();
    let y = Matrix::from_fn(3, 3, |u, v| Poly::var(&q[3 * u + v]));
    let dr = embed(&y, m - 3, m);
    let sys = commute_system(&dr, &std_a(r, m)?)?;
    let res = b.solve(&sys, &[])?;
    let shape_ok = res.is_fully_solved()
        && ["q4", "q6", "q7", "q5 - q1"]
            .iter()
            .all(|e| res.implies(&p(e)));
    let mut ev = evidence(&sys, &res);
    let braid_ok = match res.branches.first() {
        Some(br) => {
            let unipotent =
                subst_matrix(&br.apply(&dr), &[("q1", constant(1)), ("q9", constant(1))]);
            let sys = braid_system(&std_b(r, m)?, &unipotent)?;
            let res = b.solve(&sys, &[])?;
            ev.extend(evidence(&sys, &res));
            res.implies(&p("q2 - 1")) && res.implies(&p("q3*q8"))
        }
        None => false,
    };
    let display = d_last(r, m);
    b.keep("D_r", &display);
    let display_sys = braid_system(&std_b(r, m)?, &display)?;
    b.step(
        "D_r.shape",
        "D_r = diag(I, Y) commutes with A_r, has unique eigenvalue 1 and braids with B_r",
        "D_r = (1 1 x_r; 0 1 0; 0 y_r 1) with x_r y_r = 0",
        shape_ok
            && braid_ok
            && display_sys == ConstraintSystem::from_polys([p(&format!("x{r}*y{r}"))]),
        ev,
    );
    let trivial = subst_matrix(
        &display,
        &[
            (&format!("x{r}"), Poly::zero()),
            (&format!("y{r}"), Poly::zero()),
        ],
    );
    b.step(
        "D_r.excluded",
        "x_r = y_r = 0",
        "D_r = A_r, excluded",
        trivial == std_a(r, m)?,
        vec![],
    );

    for i in 1..r {
        let mut sys = commute_system(&d_alpha(i, m), &display)?;
        sys.push(p(&format!("a{i}*b{i} - 1")));
        let units = [format!("a{i}"), format!("b{i}")];
        let units: Vec<&str> = units.iter().map(String::as_str).collect();
        let res = b.solve(&sys, &units)?;
        b.step(
            format!("D{i}.cross"),
            format!("D_{i} D_r = D_r D_{i}"),
            format!("x_{i} y_r = 0 and x_r y_{i} = 0"),
            res.implies(&p(&format!("x{i}*y{r}"))) && res.implies(&p(&format!("x{r}*y{i}"))),
            evidence(&sys, &res),
        );
    }

    let mut conclusions = Vec::new();
    for case in [1usize, 2] {
        // Basis change.
        let (zeroed, pivot) = if case == 1 {
            ("x", format!("y{r}"))
        } else {
            ("y", format!("x{r}"))
        };
        let inv_name = format!("{pivot}inv");
        let mut vanish = Substitution::new();
        for i in 1..=r {
            vanish.insert(format!("{zeroed}{i}"), Poly::zero());
        }
        let alphas = |i: usize, letter: char| -> Poly {
            (i..r).fold(constant(1), |acc, k| {
                &acc * &Poly::var(&format!("{letter}{k}"))
            })
        };
        let sign = |e: usize| constant(if e.is_multiple_of(2) { 1 } else { -1 });
        let pivot_half = Poly::var(&pivot).scale(&"1/2".parse().expect("rational"));
        let pivot_inv2 = Poly::var(&inv_name).scale(&BigRational::from_integer(2.into()));
        let mut scale = Vec::new();
        let mut scale_inv = Vec::new();
        for i in 1..=r {
            let (s, si) = match (case, i == r) {
                (1, false) => (
                    &sign(r - i) * &alphas(i, 'a'),
                    &sign(r - i) * &alphas(i, 'b'),
                ),
                (1, true) => (constant(1), constant(1)),
                (_, false) => (
                    &(&sign(r - i + 1) * &alphas(i, 'a')) * &pivot_half,
                    &(&sign(r - i + 1) * &alphas(i, 'b')) * &pivot_inv2,
                ),
                (_, true) => (-&pivot_half, -&pivot_inv2),
            };
            scale.extend([s.clone(), s]);
            scale_inv.extend([si.clone(), si]);
        }
        if case == 1 {
            scale.push(-&pivot_half);
            scale_inv.push(-&pivot_inv2);
        } else {
            scale.push(constant(1));
            scale_inv.push(constant(1));
        }
        let mut rels: Vec<Poly> = (1..r).map(|i| p(&format!("a{i}*b{i} - 1"))).collect();
        rels.push(p(&format!("{pivot}*{inv_name} - 1")));
        let pmat = diagonal(&scale);
        let pinv = diagonal(&scale_inv);
        let inverse_ok = reduce_matrix(&(&pinv * &pmat), &rels).is_identity();
        let change = |d: &PolyMatrix| {
            let d = d.map(|e| e.substitute(&vanish));
            reduce_matrix(&product(&[&pinv, &d, &pmat]), &rels)
        };
        let dr_new = change(&display);
        let top = lift(&psi_top_delta_display(g, case));
        let mut ok = inverse_ok && dr_new == top;
        let mut ev = vec![format!("D_r' = {dr_new}")];
        for i in 1..r {
            let di = change(&d_alpha(i, m));
            b.keep(format!("D_{i}-case{case}"), &di);
            let diff = &di - &std_c(i, m)?;
            let spots = if case == 1 {
                [(last, 2 * i - 1), (last, 2 * i + 1)]
            } else {
                [(2 * i - 2, last), (2 * i, last)]
            };
            let mut rest = diff.clone();
            for (u, v) in spots {
                rest.set(u, v, Poly::zero());
            }
            let opposite = diff.get(spots[0].0, spots[0].1) == &-diff.get(spots[1].0, spots[1].1);
            ok &= rest.is_zero() && opposite;
            ev.push(format!(
                "D_{i}' - C_{i} = {}",
                diff.get(spots[0].0, spots[0].1)
            ));
        }
        b.keep(format!("D_r-case{case}"), &dr_new);
        b.step(
            format!("case{case}.basis"),
            format!("{zeroed}_i = 0 for all i and the displayed rescaling of the basis"),
            format!("D_r = Ψ_{case}(t_{{δ_{{2r+1}}}}) and D_i = C_i + x'_i (E - E)"),
            ok,
            ev,
        );

        // Shape of U_{2r+1}.
        let lams: Vec<String> = (1..r).map(|i| format!("lam{i}")).collect();
        let pv: Vec<String> = (1..=9).map(|k| format!("p{k}")).collect();
        let mut blocks: Vec<PolyMatrix> = lams
            .iter()
            .map(|l| PolyMatrix::identity(2).scale(&Poly::var(l)))
            .collect();
        blocks.push(Matrix::from_fn(3, 3, |u, v| Poly::var(&pv[3 * u + v])));
        let u = Matrix::block_diag(&blocks)?;
        let mut sys = commute_system(&std_a(r, m)?, &u)?;
        sys.extend(&extract(&product(&[&top, &u, &top]), &u)?);
        let lam_refs: Vec<&str> = lams.iter().map(String::as_str).collect();
        let res = b.solve(&sys, &lam_refs)?;
        let shape = if case == 1 {
            ["p4", "p6", "p7", "p5 - p1", "p9 + p1", "p3 - p1"]
        } else {
            ["p4", "p6", "p7", "p5 - p1", "p9 + p1", "p8 - p1"]
        };
        let shape_ok = res.is_fully_solved() && shape.iter().all(|e| res.implies(&p(e)));
        b.step(
            format!("case{case}.U-shape"),
            "A_r U = U A_r and D_r U D_r = U for U = diag(λ_1 I, ..., λ_{r-1} I, X)",
            if case == 1 {
                "X = (λ_r α λ_r; 0 λ_r 0; 0 β -λ_r)"
            } else {
                "X = (λ_r α β; 0 λ_r 0; 0 λ_r -λ_r)"
            },
            shape_ok,
            evidence(&sys, &res),
        );
        let Some(branch) = res.branches.first() else {
            continue;
        };
        let u = branch.apply(&u);
        b.keep(format!("U_{{2r+1}}-shape-case{case}"), &u);
        b.keep(format!("X-case{case}"), &u.submatrix(m - 3, m - 3, 3, 3)?);

        let mut sys = ConstraintSystem::new();
        for i in 1..r {
            let mut d = std_c(i, m)?;
            let xp = Poly::var(&format!("xp{i}"));
            let spots = if case == 1 {
                [(last, 2 * i - 1), (last, 2 * i + 1)]
            } else {
                [(2 * i - 2, last), (2 * i, last)]
            };
            let first = d.get(spots[0].0, spots[0].1) + &xp;
            let second = d.get(spots[1].0, spots[1].1) - &xp;
            d.set(spots[0].0, spots[0].1, first);
            d.set(spots[1].0, spots[1].1, second);
            sys.extend(&commute_system(&d, &u)?);
        }
        let mut units = lam_refs.clone();
        units.push("p1");
        let res = b.solve(&sys, &units)?;
        let mut want: Vec<Poly> = (1..r).map(|i| p(&format!("xp{i}"))).collect();
        for i in 1..r {
            let next = if i + 1 < r {
                format!("lam{}", i + 1)
            } else {
                "p1".into()
            };
            want.push(p(&format!("lam{i} - {next}")));
        }
        b.step(
            format!("case{case}.D-commute"),
            "D_i U_{2r+1} = U_{2r+1} D_i for i < r",
            "λ_i = λ_{i+1} and x'_i = 0, hence D_i = C_i",
            res.is_fully_solved() && want.iter().all(|e| res.implies(e)),
            evidence(&sys, &res),
        );

        // α and β with λ_r = 1.
        let x = if case == 1 {
            pm(&[&["1", "al", "1"], &["0", "1", "0"], &["0", "be", "-1"]])
        } else {
            pm(&[&["1", "al", "be"], &["0", "1", "0"], &["0", "1", "-1"]])
        };
        let u = embed(&x, m - 3, m);
        let brm = std_b(r, m)?;
        let u_odd = u.conjugate_by(&product(&[&brm, &top, &std_c(r - 1, m)?, &brm]))?;
        let sys = commute_system(&u, &u_odd)?;
        let res = b.solve(&sys, &[])?;
        b.step(
            format!("case{case}.beta"),
            "U_{2r+1} U_{2r-1} = U_{2r-1} U_{2r+1} with U_{2r-1} from (R11)",
            "β = -2α",
            res.is_fully_solved() && res.implies(&p("be + 2*al")),
            evidence(&sys, &res),
        );
        let u = subst_matrix(&u, &[("be", p("-2*al"))]);
        let u_even = u.inverse()?.conjugate_by(&(&brm * &top))?;
        let sys = braid_system(&u, &u_even)?;
        let res = b.solve(&sys, &[])?;
        let alpha = if case == 1 { -1 } else { 1 };
        b.step(
            format!("case{case}.alpha"),
            "U_{2r+1} U_{2r} U_{2r+1} = U_{2r} U_{2r+1} U_{2r} with U_{2r} from (R11)",
            format!("α = {alpha}"),
            res.is_fully_solved() && res.implies(&(&p("al") - &constant(alpha))),
            evidence(&sys, &res),
        );

        let final_u = subst_matrix(&u, &[("al", constant(alpha))]);
        b.keep(format!("U_{{2r+1}}-case{case}"), &final_u);
        let table = rep_table(psi(case), g)?;
        let mut ok = matches(&table, Generator::U(2 * r + 1), &final_u)
            && final_u == lift(&psi_u_display(g, case))
            && matches(&table, Generator::TDelta(2 * r + 1), &top)
            && twist_images_match(&table, r, m)?;
        ok &= (1..r).all(|i| {
            matches(
                &table,
                Generator::TDelta(2 * i + 1),
                &std_c(i, m).expect("C_i"),
            )
        });
        b.step(
            format!("case{case}.table"),
            format!("case {case}: A_i, B_i, C_i, D_r and U_{{2r+1}} against Ψ_{case} at genus {g}"),
            format!("the generators agree with Ψ_{case}"),
            ok,
            vec![format!("U_{{2r+1}} = {final_u}")],
        );
        conclusions.push(format!("case {case}: f = Ψ_{case} on generators"));
    }
    Ok(conclusions.join("; "))
}
