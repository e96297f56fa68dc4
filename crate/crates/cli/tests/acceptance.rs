//! Acceptance suite: one line per criterion, then a single overall assertion.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lambdaf::eigengroup::{
    eigengroup, eigengroup_bruteforce, group_elements, inverse_eigengroup, AffineAut, SubgroupSpec,
};
use lambdaf::gf::divisors;
use lambdaf::lambda_aut::{are_isomorphic, transports_relation};
use lambdaf::modules::{minimal_primes, simple_module_off_f, simple_module_on_f};
use lambdaf::poly::{monic_polys, multiplier_field};
use lambdaf::{Field, FieldRef, FpSpace, Fq, OreAlgebra, OreElement, Poly};

type Check = Result<String, String>;

fn field(p: u32, m: u32) -> FieldRef {
    Field::new(p, m).unwrap()
}

fn random_monic(k: &FieldRef, degree: usize, rng: &mut ChaCha8Rng) -> Poly {
    let mut coeffs: Vec<Fq> = (0..degree).map(|_| k.from_index(rng.gen_range(0..k.size()))).collect();
    coeffs.push(k.one());
    Poly::from_coeffs(k, coeffs)
}

fn structured(f: &Poly) -> Result<Vec<AffineAut>, String> {
    eigengroup(f).and_then(|r| r.elements_in_base()).map_err(|e| format!("{f}: {e}"))
}

fn sweep_polys() -> Vec<Poly> {
    let mut polys = Vec::new();
    for k in [field(2, 1), field(3, 1)] {
        for d in 1..=5 {
            polys.extend(monic_polys(&k, d));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2020);
    for k in [field(5, 1), field(2, 2)] {
        for _ in 0..50 {
            let d = rng.gen_range(1..=4);
            polys.push(random_monic(&k, d, &mut rng));
        }
    }
    polys
}

fn oracle_sweep() -> Check {
    let polys = sweep_polys();
    for f in &polys {
        let fast = structured(f)?;
        let slow = eigengroup_bruteforce(f).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{f} over {}: structured {} vs exhaustive {}", f.field().spec(), fast.len(), slow.len()));
        }
    }
    Ok(format!("{} polynomials agree with exhaustive enumeration", polys.len()))
}

fn subspaces(k: &FieldRef) -> Vec<FpSpace> {
    let elems: Vec<Fq> = k.elements().collect();
    let mut out: Vec<FpSpace> = Vec::new();
    for &a in &elems {
        for &b in &elems {
            let s = FpSpace::span(k, &[a, b]);
            if s.dim() > 0 && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    let whole = FpSpace::subfield(k, k.degree());
    if !out.contains(&whole) {
        out.push(whole);
    }
    out
}

fn subgroup_specs(k: &FieldRef) -> Vec<SubgroupSpec> {
    let q = k.size() as u64;
    let p = k.characteristic() as u64;
    let mut out = vec![SubgroupSpec::Trivial, SubgroupSpec::Full];
    for nu in k.elements() {
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

fn inverse_round_trip() -> Check {
    let mut count = 0;
    let mut shapes = BTreeSet::new();
    for k in [field(3, 1), field(2, 2), field(5, 1), field(2, 3)] {
        for spec in subgroup_specs(&k) {
            let f = inverse_eigengroup(&spec, &k).map_err(|e| format!("{spec:?}: {e}"))?;
            let expected = group_elements(&spec.to_group(&k).unwrap()).unwrap();
            let got = structured(&f)?;
            if got != expected {
                return Err(format!("{spec:?} over {}: witness {f} has a different eigengroup", k.spec()));
            }
            shapes.insert(format!("{spec:?}").split([' ', '{']).next().unwrap().to_string());
            count += 1;
        }
    }
    Ok(format!("{count} subgroups over F3, F4, F5, F8 in {} shapes realised exactly", shapes.len()))
}

fn centre_identities() -> Check {
    let mut count = 0;
    for k in [field(2, 1), field(3, 1), field(5, 1)] {
        let p = k.characteristic() as usize;
        for d in 1..=3 {
            for f in monic_polys(&k, d) {
                let alg = OreAlgebra::new(f.clone()).unwrap();
                let delta = |g: &Poly| &f * &g.derivative();
                let mut inner = f.clone();
                for _ in 0..p - 2 {
                    inner = delta(&inner);
                }
                let c = inner.derivative();
                let z2 = alg.pow(&alg.y(), p as u64).sub(&OreElement::term(&c, 1));
                if !alg.commutator(&z2, &alg.x()).is_zero() || !alg.commutator(&z2, &alg.y()).is_zero() {
                    return Err(format!("z2 = {z2} is not central in Λ({f}) over {}", k.spec()));
                }
                let mut lhs = Poly::x(&k);
                for _ in 0..p {
                    lhs = delta(&lhs);
                }
                if lhs != &c * &f {
                    return Err(format!("δ^p(x) = {lhs} ≠ ({c})·({f}) over {}", k.spec()));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} polynomials: z2 central and δ^p(x) = (δ^(p−2)(f))′·f"))
}

fn eigenform_fidelity() -> Check {
    let polys = sweep_polys();
    let mut cases: BTreeMap<&'static str, usize> = BTreeMap::new();
    for f in &polys {
        let res = eigengroup(f).map_err(|e| e.to_string())?;
        let l = res.split.ext();
        if let Some(g) = res.form.expand(l) {
            if g != res.split.poly {
                return Err(format!("{f}: eigenform expands to {g}"));
            }
        }
        if let Some((sigma, i)) = res.form.eigenvalue_law(l).map_err(|e| e.to_string())? {
            let lhs = sigma.apply(&res.split.poly);
            let rhs = res.split.poly.scale(l.pow(sigma.lambda, i as u64));
            if lhs != rhs {
                return Err(format!("{f}: σ(f) ≠ λn^i·f"));
            }
        }
        *cases.entry(res.form.case_name()).or_default() += 1;
    }
    let summary: Vec<String> = cases.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    Ok(format!("{} forms expand exactly and obey their eigenvalue law ({})", polys.len(), summary.join(", ")))
}

fn iso_partition() -> Check {
    let start = Instant::now();
    let k = field(3, 1);
    let cubics = monic_polys(&k, 3);
    let index = |g: &Poly| cubics.iter().position(|c| c == g).unwrap();
    let mut orbit_of = vec![usize::MAX; cubics.len()];
    let mut orbits = 0;
    for (i, f) in cubics.iter().enumerate() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        for alpha in k.elements().filter(|a| !a.is_zero()) {
            for beta in k.elements() {
                orbit_of[index(&f.affine_substitute(alpha, beta).monic())] = orbits;
            }
        }
        orbits += 1;
    }
    let mut witnesses = 0;
    for (i, f) in cubics.iter().enumerate() {
        for (j, g) in cubics.iter().enumerate() {
            let w = are_isomorphic(f, g).map_err(|e| e.to_string())?;
            if w.is_some() != (orbit_of[i] == orbit_of[j]) {
                return Err(format!("{f} vs {g}: answer disagrees with the affine orbit partition"));
            }
            if let Some(w) = w {
                if &f.affine_substitute(w.alpha, w.beta).scale(w.lambda) != g {
                    return Err(format!("{f} vs {g}: witness does not reproduce g"));
                }
                if !transports_relation(f, g, w.alpha, w.beta, w.y_scale).map_err(|e| e.to_string())? {
                    return Err(format!("{f} vs {g}: relation transport fails"));
                }
                witnesses += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed > 10.0 {
        return Err(format!("took {elapsed:.1} s"));
    }
    Ok(format!("27 cubics over F3 fall into {orbits} classes; {witnesses} witnesses transport the relation ({elapsed:.2} s)"))
}

fn simple_modules() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut off = 0;
    let fields = [field(2, 2), field(3, 2)];
    while off < 20 {
        let k = &fields[off % 2];
        let d = rng.gen_range(1..=3);
        let f = random_monic(k, d, &mut rng);
        let xi = k.from_index(rng.gen_range(0..k.size()));
        let rho = k.from_index(rng.gen_range(0..k.size()));
        if f.eval(k.pth_root(xi)).is_zero() {
            continue;
        }
        let m = simple_module_off_f(&f, xi, rho).map_err(|e| format!("{f}: {e}"))?;
        let p = k.characteristic() as usize;
        let c = OreAlgebra::new(f.clone()).unwrap().centre_generators().unwrap().c;
        let irr = m.irreducibility();
        let ok = m.relation_holds(&f)
            && m.dim() == p
            && m.x.pow(p as u64).is_scalar(xi)
            && m.y.pow(p as u64).sub(&m.x.eval_poly(&c).mul(&m.y)).is_scalar(rho)
            && irr.full_span
            && irr.simple == Some(true);
        if !ok {
            return Err(format!("off-f module for {f}, ξ = {}, ρ = {} fails: {irr:?}", k.format(xi), k.format(rho)));
        }
        off += 1;
    }
    let mut on = 0;
    let mut absolutely_simple = 0;
    let bases = [field(3, 1), field(2, 1), field(5, 1), field(2, 2)];
    while on < 20 {
        let k = &bases[on % bases.len()];
        let f = random_monic(k, rng.gen_range(1..=3), &mut rng);
        let primes = minimal_primes(&f).map_err(|e| e.to_string())?;
        let factor = primes[rng.gen_range(0..primes.len())].poly.clone();
        let qdeg = rng.gen_range(1..=2);
        let mut terms: Vec<Poly> = (0..qdeg).map(|_| random_monic(k, factor.deg(), &mut rng).rem(&factor)).collect();
        terms.push(Poly::one(k));
        let q = OreElement::from_terms(k, terms);
        let Ok(m) = simple_module_on_f(&f, &factor, &q) else { continue };
        let irr = m.irreducibility();
        let embedded_relation = {
            let tower = lambdaf::FieldTower::new(k.clone(), m.field.clone()).unwrap();
            m.relation_holds(&f.embed(&tower))
        };
        let spanning = if m.dim() == 1 { irr.full_span } else { irr.density_holds() && irr.simple == Some(true) };
        if !embedded_relation || m.dim() != q.y_degree().unwrap() || !spanning {
            return Err(format!("on-f module for {f}, p_i = {factor}, q = {q} fails: {irr:?}"));
        }
        if irr.full_span {
            absolutely_simple += 1;
        }
        on += 1;
    }
    Ok(format!(
        "20 off-f modules (F4, F9) and 20 on-f modules verified; full matrix span for all off-f and {absolutely_simple} on-f modules, the rest (deg q ≥ 2) span End over their commutant field and are simple"
    ))
}

fn frobenius_stability() -> Check {
    let mut count = 0;
    for k in [field(2, 1), field(3, 1)] {
        let p = k.characteristic() as u64;
        for d in 1..=4 {
            for f in monic_polys(&k, d) {
                if structured(&f)? != structured(&f.pow(p))? {
                    return Err(format!("G_(f^p) ≠ G_f for f = {f} over {}", k.spec()));
                }
                count += 1;
            }
        }
    }
    Ok(format!("G_(f^p) = G_f for {count} polynomials"))
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_lambdaf");
    let jobs: Vec<Vec<&str>> = vec![
        vec!["eigengroup", "--field", "GF(9)", "--f", "x^3 - x", "--seed", "7"],
        vec!["aut-group", "--field", "GF(5)", "--f", "x^4 - 1", "--degree-bound", "2", "--seed", "7"],
        vec!["spectrum", "--field", "GF(3)", "--f", "x^2 + 1", "--degree-bound", "2", "--seed", "7"],
        vec!["simple-module", "--field", "GF(4)", "--f", "x^2 + x + t", "--xi", "t", "--rho", "1", "--seed", "7", "--format", "text"],
        vec!["oracle", "--field", "GF(8)", "--f", "x^4 + x", "--seed", "7"],
    ];
    for args in &jobs {
        let a = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        let b = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        if !a.status.success() {
            return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&a.stderr)));
        }
        if a.stdout != b.stdout || a.stderr != b.stderr || a.status != b.status {
            return Err(format!("{args:?} produced different output on a rerun"));
        }
    }
    Ok(format!("{} commands byte-identical across reruns", jobs.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("oracle sweep", oracle_sweep),
        ("inverse problem round trip", inverse_round_trip),
        ("centre", centre_identities),
        ("eigenform fidelity", eigenform_fidelity),
        ("isomorphism test", iso_partition),
        ("simple modules", simple_modules),
        ("Frobenius stability", frobenius_stability),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({secs:.2} s) {detail}", i + 1),
            Err(detail) => {
                println!("criterion {} [{name}]: FAIL ({secs:.2} s) {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
