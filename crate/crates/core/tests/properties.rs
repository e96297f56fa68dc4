use proptest::prelude::*;

use lambdaf::eigengroup::{eigengroup, eigengroup_closed, group_elements, AffineAut, EigengroupDesc, ShiftSpace};
use lambdaf::lambda_aut::LambdaAut;
use lambdaf::poly::{f_v, multiplier_field, split_in};
use lambdaf::{Field, FieldRef, FpSpace, Fq, OreAlgebra, OreElement, Poly};

const FIELDS: [(u32, u32); 6] = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)];

fn field(i: usize) -> FieldRef {
    let (p, m) = FIELDS[i % FIELDS.len()];
    Field::new(p, m).unwrap()
}

fn elt(k: &FieldRef, raw: u32) -> Fq {
    k.from_index(raw % k.size())
}

fn nonzero(k: &FieldRef, raw: u32) -> Fq {
    k.from_index(1 + raw % (k.size() - 1))
}

fn monic(k: &FieldRef, raw: &[u32]) -> Poly {
    let mut coeffs: Vec<Fq> = raw.iter().map(|&r| elt(k, r)).collect();
    coeffs.push(k.one());
    Poly::from_coeffs(k, coeffs)
}

fn poly(k: &FieldRef, raw: &[u32]) -> Poly {
    Poly::from_coeffs(k, raw.iter().map(|&r| elt(k, r)).collect())
}

fn ore(k: &FieldRef, raw: &[Vec<u32>]) -> OreElement {
    OreElement::from_terms(k, raw.iter().map(|c| poly(k, c)).collect())
}

fn raw_poly() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(any::<u32>(), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(fi in 0usize..6, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let k = field(fi);
        let (a, b, c) = (elt(&k, a), elt(&k, b), elt(&k, c));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.pow(k.pth_root(a), k.characteristic() as u64), a);
        if !a.is_zero() {
            prop_assert_eq!(k.mul(a, k.inv(a)), k.one());
        }
    }

    #[test]
    fn poly_text_round_trip(fi in 0usize..6, raw in raw_poly()) {
        let k = field(fi);
        let f = poly(&k, &raw);
        prop_assert_eq!(Poly::parse(&k, &f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(Poly::parse(&k, &f.format_vector()).unwrap(), f);
    }

    #[test]
    fn affine_composition_matches_substitution(
        fi in 0usize..6, l1 in any::<u32>(), m1 in any::<u32>(), l2 in any::<u32>(), m2 in any::<u32>(), raw in raw_poly()
    ) {
        let k = field(fi);
        let a = AffineAut { lambda: nonzero(&k, l1), mu: elt(&k, m1) };
        let b = AffineAut { lambda: nonzero(&k, l2), mu: elt(&k, m2) };
        let f = monic(&k, &raw);
        prop_assert_eq!(a.compose(&k, &b).apply(&f), a.apply(&b.apply(&f)));
        prop_assert_eq!(a.compose(&k, &a.inverse(&k)), AffineAut::identity(&k));
        let mut power = a;
        let mut order = 1;
        while power != AffineAut::identity(&k) {
            power = power.compose(&k, &a);
            order += 1;
        }
        prop_assert_eq!(a.order(&k), order);
    }

    #[test]
    fn shift_spaces_are_closed(fi in 0usize..6, gens in prop::collection::vec(any::<u32>(), 1..3)) {
        let k = field(fi);
        let v = FpSpace::span(&k, &gens.iter().map(|&g| elt(&k, g)).collect::<Vec<_>>());
        let elems = v.elements();
        for &a in &elems {
            for &b in &elems {
                prop_assert!(v.contains(k.add(a, b)));
            }
        }
        if v.dim() > 0 {
            let e = multiplier_field(&v).unwrap();
            let m = k.degree();
            for cand in (1..=m).filter(|c| m % c == 0) {
                let gen = k.subfield_generator(cand);
                let stable = elems.iter().all(|&a| v.contains(k.mul(gen, a)));
                prop_assert_eq!(stable, cand <= e && e % cand == 0 || cand == e, "subfield degree {}", cand);
            }
            let fv = f_v(&v, k.zero());
            for &a in &elems {
                prop_assert!(fv.eval(a).is_zero());
            }
        }
    }

    #[test]
    fn root_product_identity(fi in 3usize..6, gen in any::<u32>(), rho in any::<u32>(), nu in any::<u32>(), pick in any::<u32>()) {
        let k = field(fi);
        let v = FpSpace::subfield(&k, 1).map(&k, |a| k.mul(a, nonzero(&k, gen)));
        let e = multiplier_field(&v).unwrap();
        let top = (k.characteristic() as u64).pow(e) - 1;
        let divs = lambdaf::gf::divisors(top);
        let n = divs[pick as usize % divs.len()];
        let lambda = k.primitive_root_of_unity(n).unwrap();
        let (rho, nu) = (elt(&k, rho), elt(&k, nu));
        let base = f_v(&v, nu);
        let lhs = &base.pow(n) - &Poly::constant(&k, k.pow(f_v(&v, k.zero()).eval(rho), n));
        let mut rhs = Poly::one(&k);
        for i in 0..n {
            let shift = k.add(nu, k.mul(k.pow(lambda, i), rho));
            for w in v.elements() {
                rhs = &rhs * &Poly::linear(&k, k.add(shift, w));
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ore_multiplication_is_associative(
        fi in 0usize..4, f in raw_poly(),
        a in prop::collection::vec(raw_poly(), 0..3),
        b in prop::collection::vec(raw_poly(), 0..3),
        c in prop::collection::vec(raw_poly(), 0..3),
    ) {
        let k = field(fi);
        let alg = OreAlgebra::new(monic(&k, &f)).unwrap();
        let (a, b, c) = (ore(&k, &a), ore(&k, &b), ore(&k, &c));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        prop_assert_eq!(alg.parse(&a.to_string()).unwrap(), a);
        let rel = alg.commutator(&alg.y(), &alg.x());
        prop_assert_eq!(rel, OreElement::from_poly(alg.f()));
    }

    #[test]
    fn lambda_aut_group_laws(
        fi in 0usize..4, d in 1usize..4,
        l in prop::collection::vec(any::<u32>(), 3), m in prop::collection::vec(any::<u32>(), 3),
        s in prop::collection::vec(raw_poly(), 3),
        a in prop::collection::vec(raw_poly(), 0..3),
    ) {
        let k = field(fi);
        let f = Poly::monomial(&k, k.one(), d);
        let alg = OreAlgebra::new(f).unwrap();
        let auts: Vec<LambdaAut> = (0..3)
            .map(|i| LambdaAut { lambda: nonzero(&k, l[i]), mu: elt(&k, m[i]), shift: poly(&k, &s[i]) })
            .collect();
        let (x, y, z) = (&auts[0], &auts[1], &auts[2]);
        prop_assert_eq!(x.compose(y, d).compose(z, d), x.compose(&y.compose(z, d), d));
        prop_assert_eq!(x.compose(&x.inverse(d), d), LambdaAut::identity(&k));
        prop_assert_eq!(x.inverse(d).compose(x, d), LambdaAut::identity(&k));
        let elt = ore(&k, &a);
        prop_assert_eq!(x.compose(y, d).apply(&alg, &elt), x.apply(&alg, &y.apply(&alg, &elt)));
        let prod = alg.mul(&elt, &alg.y());
        prop_assert_eq!(x.apply(&alg, &prod), alg.mul(&x.apply(&alg, &elt), &x.apply(&alg, &alg.y())));
    }

    #[test]
    fn automorphisms_are_exactly_eigengroup_lifts(fi in 0usize..4, raw in prop::collection::vec(any::<u32>(), 1..4), l in any::<u32>(), m in any::<u32>(), s in raw_poly()) {
        let k = field(fi);
        let f = monic(&k, &raw);
        let alg = OreAlgebra::new(f.clone()).unwrap();
        let a = AffineAut { lambda: nonzero(&k, l), mu: elt(&k, m) };
        let member = eigengroup(&f).unwrap().elements_in_base().unwrap().contains(&a);
        let sigma = LambdaAut { lambda: a.lambda, mu: a.mu, shift: poly(&k, &s) };
        prop_assert_eq!(sigma.is_automorphism(&alg), member);
    }

    #[test]
    fn eigengroups_are_groups_and_maximal(fi in 0usize..4, raw in prop::collection::vec(any::<u32>(), 1..5)) {
        let k = field(fi);
        let f = monic(&k, &raw);
        let res = eigengroup(&f).unwrap();
        let l = res.split.ext().clone();
        let elems = res.elements().unwrap();
        for a in &elems {
            for b in &elems {
                prop_assert!(elems.binary_search(&a.compose(&l, b)).is_ok());
            }
        }
        let single_root = res.split.roots.len() == 1;
        prop_assert_eq!(res.closed.order().is_none(), single_root);
        if let EigengroupDesc::Finite { v, nu, .. } = &res.closed.desc {
            if v.dim() > 0 {
                let top = (l.characteristic() as u64).pow(v.e) - 1;
                let max = lambdaf::Eigengroup {
                    field: l.clone(),
                    level: res.closed.level,
                    desc: EigengroupDesc::Finite {
                        v: ShiftSpace::new(v.space.clone()),
                        n: top,
                        lambda_n: l.primitive_root_of_unity(top).unwrap(),
                        nu: *nu,
                    },
                };
                let max_elems = group_elements(&max).unwrap();
                for a in group_elements(&res.closed).unwrap() {
                    prop_assert!(max_elems.binary_search(&a).is_ok());
                }
            }
        }
    }

    #[test]
    fn quadratic_extension_oracle(fi in 0usize..3, raw in prop::collection::vec(any::<u32>(), 1..4)) {
        let k = field(fi);
        let f = monic(&k, &raw);
        let res = lambdaf::eigengroup::eigengroup_over_extension(&f, 2).unwrap();
        let brute = lambdaf::eigengroup::eigengroup_bruteforce_in(&res.split.poly, 2 * k.degree()).unwrap();
        prop_assert_eq!(res.elements().unwrap(), brute);
    }

    #[test]
    fn frobenius_powers_keep_the_eigengroup(fi in 0usize..2, raw in prop::collection::vec(any::<u32>(), 1..3)) {
        let k = field(fi);
        let f = monic(&k, &raw);
        let p = k.characteristic() as u64;
        let g = eigengroup(&f).unwrap().elements_in_base().unwrap();
        prop_assert_eq!(eigengroup(&f.pow(p * p)).unwrap().elements_in_base().unwrap(), g);
    }

    #[test]
    fn closed_result_matches_split(fi in 0usize..4, raw in prop::collection::vec(any::<u32>(), 1..4)) {
        let k = field(fi);
        let f = monic(&k, &raw);
        let split = split_in(&f, 1).unwrap();
        let (group, form) = eigengroup_closed(&split.poly).unwrap();
        if let Some(g) = form.expand(split.ext()) {
            prop_assert_eq!(g, split.poly.clone());
        }
        if let EigengroupDesc::Finite { .. } = group.desc {
            for sigma in group.generators() {
                prop_assert!(sigma.apply(&split.poly).is_proportional(&split.poly).is_some());
            }
        }
    }
}
