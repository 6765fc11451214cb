//! Genus 6 into `GL(4, C)`: the cases where `L_1` has eigenvalues `-1` and
//! `1` with multiplicities one and three.

use super::{
    braid_system, commute_system, constant, evidence, p, pm, product, subst_matrix, Builder,
};
use crate::constraints::ConstraintSystem;
use crate::error::Result;

pub(super) fn run(b: &mut Builder) -> Result<String> {
    // Case (ii).
    let m = pm(&[
        &["x1", "0", "0", "0"],
        &["0", "x2", "v1", "v2"],
        &["0", "0", "x3", "v3"],
        &["0", "0", "0", "x4"],
    ]);
    let l4 = pm(&[
        &["y1", "0", "0", "0"],
        &["0", "y2", "w1", "w2"],
        &["0", "0", "y3", "w3"],
        &["0", "0", "0", "y4"],
    ]);
    b.keep("M-ii", &m);
    b.keep("L4-ii", &l4);
    let units = ["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"];
    let full = braid_system(&m, &l4)?;
    let defect = &product(&[&m, &l4, &m]) - &product(&[&l4, &m, &l4]);
    let diag = ConstraintSystem::from_polys((0..4).map(|i| defect.get(i, i).clone()));
    let res = b.solve(&diag, &units)?;
    let eq = (1..=4).all(|i| res.implies(&p(&format!("x{i} - y{i}"))));
    b.step(
        "ii.diagonal",
        "diagonal of M L4 M - L4 M L4 with upper triangular M, L4",
        "x_i = y_i for 1 <= i <= 4",
        res.is_fully_solved() && eq,
        evidence(&diag, &res),
    );
    for sign in [1i64, -1] {
        let vals = [
            ("x1", constant(sign)),
            ("x2", constant(-sign)),
            ("x3", constant(1)),
            ("x4", constant(1)),
            ("y1", constant(sign)),
            ("y2", constant(-sign)),
            ("y3", constant(1)),
            ("y4", constant(1)),
        ];
        let sys = full.substitute(
            &vals
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        );
        let res = b.solve(&sys, &[])?;
        let equal = res.branches.len() == 1
            && res.branches[0].apply(&subst_matrix(&m, &vals))
                == res.branches[0].apply(&subst_matrix(&l4, &vals));
        b.step(
            format!("ii.x1={sign}"),
            format!(
                "x1 = {sign}, x2 = {}, x3 = x4 = 1 in M L4 M = L4 M L4",
                -sign
            ),
            "M = L4",
            res.is_fully_solved() && equal,
            evidence(&sys, &res),
        );
    }

    // Sub-cases (iiia) and (iiib).
    for (name, corner) in [("iiia", ["-1", "1"]), ("iiib", ["1", "-1"])] {
        let mm = pm(&[
            &[corner[0], "0", "0", "0"],
            &["0", corner[1], "0", "x1"],
            &["0", "0", "1", "x2"],
            &["0", "0", "0", "1"],
        ]);
        let ll = pm(&[
            &[corner[0], "0", "0", "0"],
            &["0", corner[1], "0", "y1"],
            &["0", "0", "1", "y2"],
            &["0", "0", "0", "1"],
        ]);
        let sys = braid_system(&mm, &ll)?;
        let res = b.solve(&sys, &[])?;
        let equal = res.branches.iter().all(|br| br.apply(&mm) == br.apply(&ll));
        b.step(
            format!("{name}.braid"),
            format!("sub-case ({name}): M L4 M = L4 M L4"),
            "M = L4",
            res.is_fully_solved() && equal,
            evidence(&sys, &res),
        );
    }

    // Sub-case (iiic).
    let m = pm(&[
        &["1", "0", "0", "0"],
        &["0", "1", "1", "x1"],
        &["0", "0", "-1", "x2"],
        &["0", "0", "0", "1"],
    ]);
    let l4 = pm(&[
        &["1", "0", "0", "0"],
        &["0", "-1", "0", "y1"],
        &["0", "1", "1", "y2"],
        &["0", "0", "0", "1"],
    ]);
    let l5 = pm(&[
        &["1", "0", "0", "0"],
        &["0", "1", "1", "z1"],
        &["0", "0", "-1", "z2"],
        &["0", "0", "0", "1"],
    ]);
    b.keep("M-iiic", &m);
    b.keep("L4-iiic", &l4);
    b.keep("L5-iiic", &l5);
    let mut sys = braid_system(&m, &l4)?;
    sys.extend(&braid_system(&l5, &l4)?);
    let res = b.solve(&sys, &[])?;
    b.step(
        "iiic.braids",
        "M L4 M = L4 M L4 and L5 L4 L5 = L4 L5 L4",
        "x2 = -(2 x1 + y1 + 2 y2), z2 = -(2 z1 + y1 + 2 y2)",
        res.is_fully_solved()
            && res.implies(&p("x2 + 2*x1 + y1 + 2*y2"))
            && res.implies(&p("z2 + 2*z1 + y1 + 2*y2")),
        evidence(&sys, &res),
    );
    sys.extend(&commute_system(&m, &l5)?);
    let res = b.solve(&sys, &[])?;
    let equal = res.branches.iter().all(|br| br.apply(&m) == br.apply(&l5));
    b.step(
        "iiic.commute",
        "adding M L5 = L5 M",
        "x2 = z2, hence M = L5",
        res.is_fully_solved() && res.implies(&p("x2 - z2")) && equal,
        evidence(&sys, &res),
    );
    Ok("M = L4 in case (ii) and sub-cases (iiia), (iiib); M = L5 in sub-case (iiic)".into())
}
