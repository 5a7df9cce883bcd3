use num_traits::Signed;
use std::time::Instant;

use kzrat_core::chains::ChainRegistry;
use kzrat_core::linalg::Vec3;
use kzrat_core::model::{build_s3_system, symbolic_system, transposition_matrix, KZSystem};
use kzrat_core::pipeline::{construct, BasisSolution};
use kzrat_core::residue::moments_from_residues;
use kzrat_core::scalar::rational::{int, rat};
use kzrat_core::scalar::{ParamScalar, Rational};
use kzrat_core::series::SeriesEngine;
use kzrat_core::verifier::{differentiate, independence, residual, superpose, ZPoly, ZRational};

fn basis(sys: &KZSystem, k_max: i64) -> Vec<BasisSolution> {
    let eng = SeriesEngine::new(sys).unwrap();
    ChainRegistry::standard()
        .iter()
        .map(|c| construct(&eng, c, k_max).unwrap())
        .collect()
}

#[test]
fn symbolic_basis_has_zero_residuals() {
    let t = Instant::now();
    let sys = symbolic_system();
    for b in basis(&sys, 12) {
        let r = residual(&sys, &b.solution).unwrap();
        assert!(r.is_zero, "{} residual {:?}", b.label, r.residual_entries);
    }
    eprintln!("symbolic basis + residuals: {:?}", t.elapsed());
}

#[test]
fn truncation_identity_past_reconstruction_order() {
    let sys = symbolic_system();
    for b in basis(&sys, 12) {
        for k in 5..=12 {
            let m = moments_from_residues(&b.residues, sys.z1(), sys.z2(), k).unwrap();
            assert_eq!(m, b.table.get(k), "{} order {k}", b.label);
        }
    }
}

#[test]
fn perturbed_w1_has_nonzero_residual() {
    let sys = symbolic_system();
    let mut w1 = basis(&sys, 5).remove(0).solution;
    w1.residues.r1 = std::array::from_fn(|i| &w1.residues.r1[i] + &ParamScalar::from_int(1));
    assert!(!residual(&sys, &w1).unwrap().is_zero);
}

#[test]
fn w3_derivative_matches_chain_rule() {
    // f = ((z - z1)(z - z2))^-2, f' = -2 f (1/(z - z1) + 1/(z - z2))
    //    = -2 (2z - z1 - z2) / ((z - z1)(z - z2))^3
    let sys = symbolic_system();
    let w3 = basis(&sys, 5).remove(2).solution;
    let d = differentiate(&w3).unwrap();
    let q = &ZPoly::linear_root(ParamScalar::z1()) * &ZPoly::linear_root(ParamScalar::z2());
    let num = ZPoly::from_coeffs(vec![
        ParamScalar::parse("2*z1 + 2*z2").unwrap(),
        ParamScalar::from_int(-4),
    ]);
    let expected = ZRational::new(num, q.pow(3)).unwrap();
    for entry in &d {
        assert_eq!(entry, &expected);
    }
}

#[test]
fn independence_and_dependence() {
    let sys = symbolic_system();
    let b = basis(&sys, 5);
    let ws: Vec<_> = b.iter().map(|x| x.solution.clone()).collect();
    let rep = independence(&ws).unwrap();
    assert!(rep.independent);
    assert!(!rep.determinant.is_zero());

    let rep = independence(&[ws[0].clone(), ws[0].clone(), ws[2].clone()]).unwrap();
    assert!(!rep.independent);
    let combo = superpose(&[ws[0].clone(), ws[2].clone()], &[ParamScalar::from_int(2), ParamScalar::from_int(1)]).unwrap();
    let rep = independence(&[ws[0].clone(), combo, ws[2].clone()]).unwrap();
    assert!(!rep.independent);
    assert!(independence(&ws[..2]).is_err());
}

#[test]
fn residual_is_linear() {
    let sys = symbolic_system();
    let b = basis(&sys, 5);
    let mut w = b[0].solution.clone();
    w.residues.r2[1] = &w.residues.r2[1] + &ParamScalar::z1();
    let mut v = b[1].solution.clone();
    v.poly_part[2][0] = ParamScalar::from_int(3);
    let (alpha, beta) = (rat(3, 7), rat(-5, 2));
    let combo = superpose(&[w.clone(), v.clone()], &[alpha.clone().into(), beta.clone().into()]).unwrap();
    let rc = residual(&sys, &combo).unwrap();
    let rw = residual(&sys, &w).unwrap();
    let rv = residual(&sys, &v).unwrap();
    let (z, z1, z2) = (rat(13, 3), int(2), rat(-1, 5));
    for i in 0..3 {
        let lhs = rc.residual_entries[i].evaluate(&z, &z1, &z2).unwrap();
        let rhs = &alpha * rw.residual_entries[i].evaluate(&z, &z1, &z2).unwrap()
            + &beta * rv.residual_entries[i].evaluate(&z, &z1, &z2).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn z1_z2_symmetry_of_w1_residues() {
    // swapping z1 <-> z2 and conjugating by (2 3) maps (R1, R2, R3, R4) to (R3, R4, R1, R2)
    let sys = symbolic_system();
    let l = basis(&sys, 5).remove(0).residues;
    let c = transposition_matrix(2, 3, 3).unwrap();
    let swap = |v: &Vec3<ParamScalar>| -> Vec3<ParamScalar> {
        let swapped: Vec<ParamScalar> = v
            .iter()
            .map(|s| s.compose(&ParamScalar::z2(), &ParamScalar::z1()).unwrap())
            .collect();
        let lifted = kzrat_core::linalg::lift_matrix(&c);
        kzrat_core::linalg::to_vec3(lifted.mul_vec(&swapped).unwrap())
    };
    assert_eq!(swap(&l.r1), l.r3);
    assert_eq!(swap(&l.r2), l.r4);
    assert_eq!(swap(&l.r3), l.r1);
    assert_eq!(swap(&l.r4), l.r2);
}

#[test]
fn numeric_instantiation_matches_substitution() {
    let sys = build_s3_system(ParamScalar::from_int(0), ParamScalar::from_int(1)).unwrap();
    let numeric = basis(&sys, 5);
    let symbolic = basis(&symbolic_system(), 5);
    for (n, s) in numeric.iter().zip(&symbolic) {
        let inst = s.solution.instantiate(&int(0), &int(1)).unwrap();
        assert_eq!(n.solution, inst, "{}", n.label);
        assert!(residual(&sys, &n.solution).unwrap().is_zero);
    }
    // W3 = (1,1,1) / (z^2 (z - 1)^2)
    let w3 = &numeric[2].solution;
    let z = rat(7, 3);
    let expected: Rational = (z.clone() * z.clone() * (z.clone() - int(1)) * (z.clone() - int(1))).recip();
    assert_eq!(w3.evaluate_numeric(&z).unwrap(), [expected.clone(), expected.clone(), expected]);
}

#[test]
fn difference_quotient_is_first_order() {
    let sys = symbolic_system();
    let (z, z1, z2) = (rat(11, 2), rat(1, 3), int(-2));
    let h = rat(1, 1_000_000);
    for b in basis(&sys, 5) {
        let d = differentiate(&b.solution).unwrap();
        let w = |x: &Rational| b.solution.evaluate(x, &z1, &z2).unwrap();
        let w0 = w(&z);
        let err = |h: &Rational| -> Rational {
            let wh = w(&(&z + h));
            (0..3)
                .map(|i| {
                    let dq = (&wh[i] - &w0[i]) / h;
                    (dq - d[i].evaluate(&z, &z1, &z2).unwrap()).abs()
                })
                .max()
                .unwrap()
        };
        let e1 = err(&h);
        let e2 = err(&(&h / int(2)));
        let ratio = &e1 / &e2;
        assert!(ratio > rat(19, 10) && ratio < rat(21, 10), "{} ratio {ratio}", b.label);
    }
}
