use confalg::builtins::*;
use confalg::confcore::*;
use confalg::exactmath::{parse_poly, Affine, MultiPoly, Var};
use confalg::{Error, Exec};

fn lam() -> Affine {
    Affine::var(Var::Lambda)
}

#[test]
fn catalog_algebras_pass_their_axioms() {
    for name in TABLE_NAMES {
        let c = table_algebra(name).unwrap();
        let r = match c.kind() {
            Kind::Associative => check_associativity(&c, Exec::default()),
            Kind::Lie => check_lie(&c, Exec::default()),
        };
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn current_algebra_tables() {
    let q = table_algebra("curr_q").unwrap();
    assert_eq!(q.display(&q.basis_product(0, 0)), "e");
    let s = table_algebra("curr_solv2").unwrap();
    assert_eq!(s.display(&s.basis_product(0, 1)), "b");
    assert_eq!(s.display(&s.basis_product(1, 0)), "-b");
    assert!(s.basis_product(0, 0).is_zero() && s.basis_product(1, 1).is_zero());
    let bad = OrdinaryAlgebra::new(
        Kind::Lie,
        vec!["a".into()],
        vec![(0, 0, 0, confalg::exactmath::rat(1))],
        None,
    )
    .unwrap();
    assert!(matches!(current_algebra(&bad), Err(Error::Precondition(_))));
}

#[test]
fn commutator_commutes_with_current() {
    let m2 = current_algebra(&matrices(2)).unwrap();
    let lhs = commutator_algebra(&m2, Exec::default()).unwrap();
    assert_eq!(lhs, current_algebra(&gl2()).unwrap());
}

#[test]
fn virasoro_n_products() {
    let v = virasoro();
    let x = v.element("x").unwrap();
    assert_eq!(v.display(&v.n_product(&x, &x, 0).unwrap()), "D*x");
    assert_eq!(v.display(&v.n_product(&x, &x, 1).unwrap()), "2*x");
    assert!(check_lie(&v, Exec::Sequential).passed());
}

#[test]
fn differential_algebras() {
    // d/dx does not survive the quotient by x³.
    assert!(matches!(
        differential_algebra(&x3_d_dx()),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        differential_algebra(&m2_dual_d_dx()),
        Err(Error::Precondition(_))
    ));
    let c = differential_algebra(&x3_x2_d_dx()).unwrap();
    let x = c.element("x").unwrap();
    // x∘_n x = x·∂ⁿ(x): x², then x·x² = 0.
    assert_eq!(c.display(&c.n_product(&x, &x, 0).unwrap()), "x2");
    let one = c.element("one").unwrap();
    assert_eq!(c.display(&c.n_product(&one, &x, 1).unwrap()), "x2");
    assert!(check_associativity(
        &differential_algebra(&m2_dual_ad_e12()).unwrap(),
        Exec::default()
    )
    .passed());
    // ∂ = 0 gives back the current algebra.
    let mut a = matrices(2);
    a.derivation = Some(vec![vec![confalg::exactmath::rat(0); 4]; 4]);
    assert_eq!(
        differential_algebra(&a).unwrap(),
        current_algebra(&matrices(2)).unwrap()
    );
    // A non-nilpotent derivation is rejected.
    let mut q = rationals();
    q.derivation = Some(vec![vec![confalg::exactmath::rat(0)]]);
    assert!(differential_algebra(&q).is_ok());
    let sl = sl2();
    assert!(differential_algebra(&sl).is_err());
}

#[test]
fn non_nilpotent_derivation_is_rejected() {
    // x·d/dx on Q[x]/(x³) is a derivation but ∂x = x.
    let a = truncated_x3([[0, 0, 0], [0, 1, 0], [0, 0, 2]]);
    assert!(a.check_derivation().passed());
    match differential_algebra(&a) {
        Err(Error::Precondition(m)) => assert!(m.contains("nilpotent")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn weyl_associativity_on_monomials() {
    let mut monos = Vec::new();
    for a in 0..=4u32 {
        for b in 0..=(4 - a) {
            monos.push(MatrixConfElem::scalar(
                &MultiPoly::var_pow(Var::D, a) * &MultiPoly::var_pow(Var::X, b),
            ));
        }
    }
    let mu = Affine::var(Var::Mu);
    for p in &monos {
        for q in &monos {
            for r in &monos {
                let lhs = cend_product_at(p, &cend_product_at(q, r, &mu).unwrap(), &lam()).unwrap();
                let rhs =
                    cend_product_at(&cend_product_at(p, q, &lam()).unwrap(), r, &lam().add(&mu))
                        .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn identity_matrix_is_two_sided_unit() {
    let one = MatrixConfElem::identity(2);
    let b = MatrixConfElem::parse(&[&["D*x", "1"], &["x^2", "D + 3"]]).unwrap();
    let zero = cend_n_product(&one, &b, 0).unwrap();
    assert_eq!(zero, b);
    let braced = cend_braced_at(&b, &one, &lam())
        .unwrap()
        .divided_coefficient(0);
    assert_eq!(braced, b);
    assert_eq!(
        cend_product(&one, &one).unwrap().degree_in(Var::Lambda),
        Some(0)
    );
}

#[test]
fn product_specializes_to_action() {
    // An x-free right factor with a single nonzero column behaves like a vector.
    let a = MatrixConfElem::parse(&[&["x*D + 1", "x^2"], &["D", "2x"]]).unwrap();
    let h = [parse_poly("D^2 + 1").unwrap(), parse_poly("3D").unwrap()];
    let col = MatrixConfElem::from_rows(vec![
        vec![h[0].clone(), MultiPoly::zero()],
        vec![h[1].clone(), MultiPoly::zero()],
    ])
    .unwrap();
    let prod = cend_product(&a, &col).unwrap();
    let act = cend_act(&a, &h).unwrap();
    // Φ: x ↦ D turns the product into the action.
    let phi = confalg::exactmath::Substitution::new().with(Var::X, Affine::var(Var::D));
    for i in 0..2 {
        assert_eq!(phi.apply(prod.get(i, 0)), act[i]);
    }
}

#[test]
fn example_3_5_vectors() {
    let e2 = vec![MultiPoly::zero(), MultiPoly::one()];
    for k in 0..=5u32 {
        let a = MatrixConfElem::unit(
            2,
            0,
            1,
            MultiPoly::var_pow(Var::X, k)
                .scale(&(confalg::exactmath::rat(1) / confalg::exactmath::factorial(k))),
        );
        assert!(in_c0(&a));
        let v = cend_act(&a, &e2).unwrap();
        let v0: Vec<MultiPoly> = v.iter().map(|p| p.coefficient_of(Var::Lambda, 0)).collect();
        let expect = MultiPoly::var_pow(Var::D, k)
            .scale(&(confalg::exactmath::rat(1) / confalg::exactmath::factorial(k)));
        assert_eq!(v0, vec![expect, MultiPoly::zero()]);
    }
}

#[test]
fn ideals_are_closed() {
    let p = MatrixConfElem::parse(&[&["x"]]).unwrap();
    let samples = ["D + x", "x^2 D", "1", "D^2 - x"];
    for s in samples {
        for t in samples {
            let a = MatrixConfElem::parse(&[&[s]]).unwrap();
            let b = MatrixConfElem::parse(&[&[t]]).unwrap();
            let r = cend_ideal_element(IdealSide::Right, &p, &a).unwrap();
            let prod = cend_product(&r, &b).unwrap();
            assert!(prod
                .get(0, 0)
                .div_exact(&parse_poly("x").unwrap())
                .is_some());
            let l = cend_ideal_element(IdealSide::Left, &p, &a).unwrap();
            let prod = cend_product(&b, &l).unwrap();
            assert!(prod
                .get(0, 0)
                .div_exact(&parse_poly("x - D").unwrap())
                .is_some());
        }
    }
}

#[test]
fn split_null_extension() {
    let x = SplitNullElem {
        alg: MatrixConfElem::parse(&[&["x"]]).unwrap(),
        module: vec![MultiPoly::zero()],
    };
    let v = SplitNullElem {
        alg: MatrixConfElem::zero(1),
        module: vec![MultiPoly::one()],
    };
    let p = split_null_product(SplitNullBase::Full, &x, &v).unwrap();
    assert!(p.alg.is_zero());
    assert_eq!(
        p.module[0].coefficient_of(Var::Lambda, 0),
        parse_poly("D").unwrap()
    );
    let one = SplitNullElem {
        alg: MatrixConfElem::identity(1),
        module: vec![MultiPoly::zero()],
    };
    let w = SplitNullElem {
        alg: MatrixConfElem::parse(&[&["D x + 1"]]).unwrap(),
        module: vec![parse_poly("D^2").unwrap()],
    };
    let p = split_null_product(SplitNullBase::Full, &one, &w).unwrap();
    let p0 = SplitNullElem {
        alg: p.alg.divided_coefficient(0),
        module: p
            .module
            .iter()
            .map(|q| q.coefficient_of(Var::Lambda, 0))
            .collect(),
    };
    assert_eq!(p0, w);
    let z = split_null_product(SplitNullBase::Full, &v, &w).unwrap();
    assert!(z.alg.is_zero() && z.module[0].is_zero());
}
