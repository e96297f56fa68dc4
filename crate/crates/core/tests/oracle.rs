use lambdaf::eigengroup::{eigengroup, eigengroup_bruteforce, AffineAut};
use lambdaf::poly::monic_polys;
use lambdaf::{Field, FieldRef, Poly, Result};

fn structured_in_base(f: &Poly) -> Result<Vec<AffineAut>> {
    let res = eigengroup(f)?;
    let tower = &res.split.tower;
    let mut out: Vec<AffineAut> = res
        .elements()?
        .into_iter()
        .map(|s| s.map(|a| tower.restrict(a).expect("group element lies in the base field")))
        .collect();
    out.sort();
    Ok(out)
}

fn sweep(k: &FieldRef, max_degree: usize) {
    for d in 1..=max_degree {
        for f in monic_polys(k, d) {
            let fast = structured_in_base(&f).unwrap_or_else(|e| panic!("{f} over {}: {e}", k.spec()));
            let slow = eigengroup_bruteforce(&f).unwrap();
            assert_eq!(fast, slow, "{f} over {}", k.spec());
        }
    }
}

#[test]
fn exhaustive_over_f2() {
    sweep(&Field::new(2, 1).unwrap(), 5);
}

#[test]
fn exhaustive_over_f3() {
    sweep(&Field::new(3, 1).unwrap(), 5);
}

#[test]
fn exhaustive_over_f4() {
    sweep(&Field::new(2, 2).unwrap(), 3);
}

#[test]
fn exhaustive_over_f5() {
    sweep(&Field::new(5, 1).unwrap(), 3);
}

#[test]
#[ignore]
fn wide_sweep() {
    for (p, m, d) in [(2, 2, 5), (5, 1, 5), (3, 2, 4), (2, 3, 4), (7, 1, 4), (2, 4, 3), (3, 1, 7), (2, 1, 9)] {
        let t = std::time::Instant::now();
        sweep(&Field::new(p, m).unwrap(), d);
        eprintln!("GF({p}^{m}) up to degree {d}: {:?}", t.elapsed());
    }
}
