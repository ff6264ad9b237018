//! One line per acceptance criterion. Every comparison is exact.

use std::panic::{catch_unwind, AssertUnwindSafe};

use confalg::builtins::*;
use confalg::confcore::*;
use confalg::constructions::*;
use confalg::exactmath::qlinalg::rank;
use confalg::exactmath::*;
use confalg::hlinalg::*;
use confalg::repr::*;
use confalg::Exec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{brute_kernel, brute_syzygies};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> MultiPoly {
    parse_poly(s).unwrap()
}

fn lam() -> Affine {
    Affine::var(Var::Lambda)
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &[Var], max_deg: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for _ in 0..rng.gen_range(0..4) {
        let mut m = MultiPoly::int(rng.gen_range(-3..=3));
        let mut left = max_deg;
        for v in vars {
            let e = rng.gen_range(0..=left);
            left -= e;
            m = &m * &MultiPoly::var_pow(*v, e);
        }
        out += &m;
    }
    out
}

fn random_cend2(rng: &mut ChaCha8Rng) -> MatrixConfElem {
    let mut rows = Vec::new();
    for _ in 0..2 {
        rows.push(
            (0..2)
                .map(|_| random_poly(rng, &[Var::D, Var::X], 3))
                .collect(),
        );
    }
    MatrixConfElem::from_rows(rows).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng) -> PolyMatrix {
    let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let rows = (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    let deg = rng.gen_range(0..=3usize);
                    let cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
                    UPoly::from_ints(&cs)
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(Var::D, c, rows).unwrap()
}

fn weyl_and_cend() -> Outcome {
    let x = MatrixConfElem::parse(&[&["x"]]).unwrap();
    let xx = cend_product(&x, &x).unwrap();
    ensure!(*xx.get(0, 0) == p("x^2 + l*x"), "x∘_λ x = {}", xx.get(0, 0));

    let mut monos = Vec::new();
    for a in 0..=4u32 {
        for b in 0..=(4 - a) {
            monos.push(MatrixConfElem::scalar(
                &MultiPoly::var_pow(Var::D, a) * &MultiPoly::var_pow(Var::X, b),
            ));
        }
    }
    let mu = Affine::var(Var::Mu);
    for f in &monos {
        for g in &monos {
            let fg = cend_product_at(f, g, &lam()).unwrap();
            for h in &monos {
                let lhs = cend_product_at(f, &cend_product_at(g, h, &mu).unwrap(), &lam()).unwrap();
                let rhs = cend_product_at(&fg, h, &lam().add(&mu)).unwrap();
                ensure!(
                    lhs == rhs,
                    "associativity fails on ({:?}, {:?}, {:?})",
                    f.get(0, 0),
                    g.get(0, 0),
                    h.get(0, 0)
                );
            }
        }
    }

    let one = MatrixConfElem::identity(2);
    ensure!(
        cend_product(&one, &one).unwrap().degree_in(Var::Lambda) == Some(0),
        "N(1, 1) != 1"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..20 {
        let b = random_cend2(&mut rng);
        ensure!(cend_n_product(&one, &b, 0).unwrap() == b, "1∘_0 b != b");
        let braced = cend_braced_at(&b, &one, &lam())
            .unwrap()
            .divided_coefficient(0);
        ensure!(braced == b, "{{b∘_0 1}} != b");
    }
    Ok(())
}

fn virasoro_checks() -> Outcome {
    let v = virasoro();
    ensure!(check_lie(&v, Exec::default()).passed(), "check_lie fails");
    let x = v.element("x").unwrap();
    ensure!(
        v.display(&v.n_product(&x, &x, 0).unwrap()) == "D*x",
        "x∘_0 x"
    );
    ensure!(
        v.display(&v.n_product(&x, &x, 1).unwrap()) == "2*x",
        "x∘_1 x"
    );
    for k in 1..=3u32 {
        let (_, viol) = pbw_violations(&v, &LocalityBound(vec![k]), None, Exec::default()).unwrap();
        ensure!(!viol.is_empty(), "N(x) = {k} passes");
        ensure!(
            viol[0].m == k,
            "N(x) = {k}: first witness at m = {}",
            viol[0].m
        );
    }
    Ok(())
}

fn current_algebras() -> Outcome {
    for name in ["curr_q", "curr_dual", "curr_m2", "curr_sl2", "curr_solv2"] {
        let c = table_algebra(name).unwrap();
        let r = match c.kind() {
            Kind::Associative => check_associativity(&c, Exec::default()),
            Kind::Lie => {
                let pbw = check_central_pbw(
                    &c,
                    &LocalityBound::uniform(c.dim(), 1),
                    None,
                    Exec::default(),
                )
                .unwrap();
                ensure!(pbw.passed(), "{name}: {pbw}");
                check_lie(&c, Exec::default())
            }
        };
        ensure!(r.passed(), "{name}: {r}");
    }
    Ok(())
}

fn adjoined_unit() -> Outcome {
    for name in ["curr_q", "curr_dual", "curr_m2", "diff_x3"] {
        let c = table_algebra(name).unwrap();
        let u = adjoin_unit_rep(&c, None, Exec::default()).unwrap();
        let expect = 1 + c.dim() * (u.degree_bound as usize + 1);
        ensure!(
            u.rep.rank() == expect,
            "{name}: rank {} != {expect}",
            u.rep.rank()
        );
        ensure!(u.rep.module().is_free(), "{name}: module not free");
        ensure!(
            check_rep(&u.rep, Exec::default()).passed(),
            "{name}: check_rep"
        );
        ensure!(
            rep_kernel(&u.rep).is_zero(),
            "{name}: kernel {}",
            rep_kernel(&u.rep)
        );
    }
    let c = table_algebra("curr_m2").unwrap();
    let u = adjoin_unit_rep(&c, Some(0), Exec::default()).unwrap();
    ensure!(u.degree_bound == 0, "M = {}", u.degree_bound);
    ensure!(
        u.warning
            .as_deref()
            .is_some_and(|w| w.contains("not guaranteed")),
        "M' = 0 carries no warning"
    );
    Ok(())
}

fn double_construction() -> Outcome {
    for name in ["curr_sl2", "curr_gl2", "curr_solv2", "abelian"] {
        let l = table_algebra(name).unwrap();
        let v = trivial_rep(&l, HModulePresentation::free(names(&["u"])));
        let m = regular_rep(&l);
        let pr = Pairing::canonical(&l);
        let rep = check_double_conditions(&l, &v, &m, &pr, Exec::default()).unwrap();
        ensure!(rep.passed(), "{name}: {rep}");
        let d = double_rep(&l, &v, &m, &pr, Exec::default()).unwrap();
        ensure!(check_rep(&d, Exec::default()).passed(), "{name}: check_rep");
        ensure!(is_faithful(&d).0, "{name}: not faithful");
        let mut u = vec![MultiPoly::zero(); d.rank()];
        u[0] = MultiPoly::one();
        for a in 0..l.dim() {
            let mut expect = vec![MultiPoly::zero(); d.rank()];
            expect[1 + a] = MultiPoly::var(Var::Lambda);
            ensure!(
                d.act(&ConfElement::basis(l.dim(), a), &u) == expect,
                "{name}: a∘_λ u != λa"
            );
        }
    }
    let l = virasoro();
    let v = trivial_rep(&l, HModulePresentation::free(names(&["u"])));
    let rep = check_double_conditions(
        &l,
        &v,
        &regular_rep(&l),
        &Pairing::canonical(&l),
        Exec::default(),
    )
    .unwrap();
    let w = rep.first().ok_or("Virasoro passes")?;
    ensure!(
        w.location.starts_with("pairing compatibility"),
        "wrong failure {}",
        w.location
    );
    ensure!(w.residual != "0", "zero residual");
    Ok(())
}

fn solvable_pipeline() -> Outcome {
    let l = solv_xy();
    let bound = solvable_bounds(&l, 1).unwrap();
    ensure!(
        bound == LocalityBound(vec![2, 1]),
        "bounds {}",
        bound.display(l.basis())
    );
    ensure!(
        check_central_pbw(&l, &bound, None, Exec::default())
            .unwrap()
            .passed(),
        "invariance"
    );
    let r = solvable_faithful_rep(&l, 1, Exec::default()).unwrap();
    ensure!(r.rank() == 4, "rank {}", r.rank());
    ensure!(check_rep(&r, Exec::default()).passed(), "check_rep");
    ensure!(rep_kernel(&r).is_zero(), "kernel nonzero");
    let k = brute_kernel(&r, 3);
    ensure!(k.is_empty(), "brute force finds {}", l.display(&k[0]));
    Ok(())
}

fn restriction_of_scalars() -> Outcome {
    let c = ConfAlgebra::new(Kind::Lie, names(&["h"]), vec![]).unwrap();
    let ctx = FieldContext::new(UPoly::from_ints(&[1, 0, 1])).unwrap();
    let i = ExtPoly::from_terms(&ctx, &[(ExtFieldElem::alpha(&ctx), MultiPoly::one())]).unwrap();
    let ext = ExtRep {
        algebra: c,
        module: HModulePresentation::free(names(&["e"])),
        field: ctx,
        action: vec![vec![vec![(0, i)]]],
    };
    let r = restrict_scalars(&ext).unwrap();
    ensure!(r.rank() == 2, "rank {}", r.rank());
    let e0 = vec![MultiPoly::one(), MultiPoly::zero()];
    let e1 = vec![MultiPoly::zero(), MultiPoly::one()];
    let h = ConfElement::basis(1, 0);
    ensure!(
        r.act(&h, &e0) == e1,
        "h∘_λ e0 = {}",
        r.display_vec(&r.act(&h, &e0))
    );
    ensure!(
        r.act(&h, &e1) == vec![MultiPoly::int(-1), MultiPoly::zero()],
        "h∘_λ e1"
    );
    ensure!(check_rep(&r, Exec::default()).passed(), "check_rep");
    ensure!(rep_kernel(&r).is_zero(), "kernel nonzero");
    Ok(())
}

fn example_ingredients() -> Outcome {
    let x = SplitNullElem {
        alg: MatrixConfElem::parse(&[&["x"]]).unwrap(),
        module: vec![MultiPoly::zero()],
    };
    let v = SplitNullElem {
        alg: MatrixConfElem::zero(1),
        module: vec![MultiPoly::one()],
    };
    let xv = split_null_product(SplitNullBase::Full, &x, &v).unwrap();
    ensure!(
        xv.module[0].coefficient_of(Var::Lambda, 0) == p("D"),
        "x∘_0 v = {}",
        xv.module[0]
    );

    let e2 = vec![MultiPoly::zero(), MultiPoly::one()];
    for k in 0..=5u32 {
        let c = rat(1) / factorial(k);
        let a = MatrixConfElem::unit(2, 0, 1, MultiPoly::var_pow(Var::X, k).scale(&c));
        let img: Vec<MultiPoly> = cend_act(&a, &e2)
            .unwrap()
            .iter()
            .map(|q| q.coefficient_of(Var::Lambda, 0))
            .collect();
        ensure!(
            img == vec![MultiPoly::var_pow(Var::D, k).scale(&c), MultiPoly::zero()],
            "a_{k}∘_0 e2"
        );
    }

    let rel = PolyMatrix::parse(Var::D, &[&["0", "D"]]).unwrap();
    let t = torsion_decomposition(&rel);
    ensure!(t.free_rank == 1, "free rank {}", t.free_rank);
    ensure!(
        t.invariant_factors == vec![UPoly::x()],
        "invariant factors {:?}",
        t.invariant_factors
    );

    let m = HModulePresentation::parse(&[("1", ""), ("vbar", "D")]).unwrap();
    let act = vec![
        (
            "one".to_string(),
            "1".to_string(),
            "1".to_string(),
            MultiPoly::one(),
        ),
        (
            "v".to_string(),
            "1".to_string(),
            "vbar".to_string(),
            MultiPoly::one(),
        ),
    ];
    let r = make_right_rep(&ex3_2(), m, act).map_err(|e| e.to_string())?;
    ensure!(check_rep(&r, Exec::default()).passed(), "right module law");
    ensure!(is_faithful(&r).0, "right module not faithful");
    Ok(())
}

fn tau_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let elems: Vec<MatrixConfElem> = (0..20).map(|_| random_cend2(&mut rng)).collect();
    for a in &elems {
        ensure!(tau_transpose(&tau_transpose(a)) == *a, "τ² != id");
    }
    for a in &elems {
        for b in &elems {
            let lhs = cend_right_braced(&tau_transpose(b), &tau_transpose(a)).unwrap();
            let rhs = tau_transpose(&cend_product(a, b).unwrap());
            for n in 0..=4 {
                ensure!(
                    lhs.divided_coefficient(n) == rhs.divided_coefficient(n),
                    "n = {n}"
                );
            }
        }
    }
    Ok(())
}

fn linear_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for k in 0..100 {
        let m = random_matrix(&mut rng);
        let (h, u) = hermite_normal_form(&m);
        ensure!(u.mul(&m).unwrap() == h && u.is_unimodular(), "Hermite #{k}");
        let (s, u, v) = smith_normal_form(&m);
        ensure!(u.mul(&m).unwrap().mul(&v).unwrap() == s, "Smith #{k}");
        ensure!(
            u.is_unimodular() && v.is_unimodular(),
            "Smith transforms #{k}"
        );
        let ker = syzygy_kernel(&m);
        for g in ker.generators() {
            ensure!(
                m.left_apply(g).unwrap().iter().all(UPoly::is_zero),
                "syzygy #{k}"
            );
        }
        for w in brute_syzygies(&m) {
            ensure!(ker.contains(&w).unwrap(), "missing kernel vector #{k}");
        }
    }
    Ok(())
}

/// Rank over `Q(D)` of sparse `Q[D]`-vectors, by evaluating `D` at several
/// random points and keeping the largest rank.
fn generic_rank(rows: &[std::collections::BTreeMap<usize, UPoly>], rng: &mut ChaCha8Rng) -> usize {
    let keys: std::collections::BTreeSet<usize> =
        rows.iter().flat_map(|r| r.keys().copied()).collect();
    (0..3)
        .map(|_| {
            let d = rat(rng.gen_range(-1000..=1000));
            let m: Vec<Vec<Rational>> = rows
                .iter()
                .map(|r| {
                    keys.iter()
                        .map(|k| r.get(k).map_or(rat(0), |q| q.eval(&d)))
                        .collect()
                })
                .collect();
            rank(&m)
        })
        .max()
        .unwrap_or(0)
}

fn growth() -> Outcome {
    let amb = Cend { n: 1 };
    let x = MatrixConfElem::parse(&[&["x"]]).unwrap();
    let profile =
        growth_profile(&amb, &[x.clone()], 6, Exec::default()).map_err(|e| e.to_string())?;
    // Every monomial of length n, each level deduplicated up to scalars.
    let mut levels: Vec<Vec<MatrixConfElem>> = vec![vec![x]];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut span = Vec::new();
    for n in 1..=6usize {
        if n > 1 {
            let mut level: Vec<MatrixConfElem> = Vec::new();
            for i in 1..n {
                for a in &levels[i - 1] {
                    for b in &levels[n - i - 1] {
                        let prod = cend_product(a, b).unwrap();
                        for k in 0..=prod.degree_in(Var::Lambda).unwrap_or(0) {
                            let c = prod.divided_coefficient(k);
                            if c.is_zero() {
                                continue;
                            }
                            let lc = c.get(0, 0).terms().last().unwrap().1.clone();
                            let c = c.mul_poly(&MultiPoly::constant(rat(1) / lc));
                            if !level.contains(&c) {
                                level.push(c);
                            }
                        }
                    }
                }
            }
            levels.push(level);
        }
        span.extend(levels[n - 1].iter().map(|e| amb.coords(e)));
        let r = generic_rank(&span, &mut rng);
        ensure!(
            profile[n - 1] == r,
            "n = {n}: profile {} vs oracle {r}",
            profile[n - 1]
        );
        ensure!(r <= 2 * n, "n = {n}: rank {r} > 2n");
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        (
            "Weyl product, Cend associativity, identity unit in Cend2",
            weyl_and_cend,
        ),
        (
            "Virasoro axioms, n-products, central PBW witnesses",
            virasoro_checks,
        ),
        (
            "current algebra axioms and central PBW with N = 1",
            current_algebras,
        ),
        ("adjoined unit representations", adjoined_unit),
        ("double construction", double_construction),
        ("solvable pipeline for [x y] = l y", solvable_pipeline),
        ("restriction of scalars from Q(i)", restriction_of_scalars),
        ("Cend1 extension ingredients", example_ingredients),
        ("tau involution and braced identity", tau_identity),
        ("Hermite, Smith and syzygy kernels", linear_algebra),
        ("growth of Cend1 generated by x", growth),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match out {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
