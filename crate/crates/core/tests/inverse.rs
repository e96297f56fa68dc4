use lambdaf::eigengroup::{eigengroup, group_elements, inverse_eigengroup, SubgroupSpec};
use lambdaf::gf::divisors;
use lambdaf::poly::multiplier_field;
use lambdaf::{Field, FieldRef, FpSpace, Fq};

fn subspaces(k: &FieldRef) -> Vec<FpSpace> {
    let mut out: Vec<FpSpace> = Vec::new();
    let elems: Vec<Fq> = k.elements().collect();
    for &a in &elems {
        for &b in &elems {
            let s = FpSpace::span(k, &[a, b]);
            if s.dim() > 0 && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.push(FpSpace::subfield(k, k.degree()));
    out.dedup();
    out
}

fn specs(k: &FieldRef) -> Vec<SubgroupSpec> {
    let q = k.size() as u64;
    let p = k.characteristic() as u64;
    let nus: Vec<Fq> = k.elements().take(3).collect();
    let mut out = vec![SubgroupSpec::Trivial, SubgroupSpec::Full];
    for &nu in &nus {
        out.push(SubgroupSpec::Torus { nu });
        for n in divisors(q - 1).into_iter().filter(|&n| n >= 2) {
            out.push(SubgroupSpec::Cyclic { n, nu });
        }
    }
    for v in subspaces(k) {
        let e = multiplier_field(&v).unwrap();
        for nu in k.elements() {
            out.push(SubgroupSpec::ShiftOffImage { v: v.clone(), nu });
            if !v.contains(nu) {
                out.push(SubgroupSpec::ShiftDoubleCoset { v: v.clone(), nu });
            }
            for n in divisors(p.pow(e) - 1) {
                out.push(SubgroupSpec::ShiftCyclic { v: v.clone(), n, nu });
            }
        }
    }
    out
}

#[test]
fn witnesses_realise_their_groups() {
    for (p, m) in [(3, 1), (2, 2), (5, 1), (2, 3)] {
        let k = Field::new(p, m).unwrap();
        let all = specs(&k);
        for spec in all {
            let f = inverse_eigengroup(&spec, &k).unwrap();
            let expected = group_elements(&spec.to_group(&k).unwrap()).unwrap();
            let got = eigengroup(&f).unwrap().elements_in_base().unwrap();
            assert_eq!(got, expected, "{spec:?} over {} via {f}", k.spec());
        }
    }
}
