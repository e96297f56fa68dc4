//! Simple `Λ(f)`-modules and the prime spectrum.
//!
//! Off `V(f^p)` the simple module attached to a maximal ideal
//! `(x^p − ξ, z2 − ρ)` of the centre has basis `y^i·1̄`, `0 ≤ i < p`, with
//! `x·1̄ = ξ^{1/p}·1̄`. The parameter `ρ` is the value of the central
//! element `z2 = y^p − c(x)·y`; on the module `y^p·1̄ = ρ·1̄ + c(x)·y·1̄`.
//!
//! On `f = 0` the simple modules are `F_i[y]/(q)` with `F_i = K[x]/(p_i)`,
//! realised over `E ≅ F_i` with `x` acting as a root `θ` of `p_i`.

use crate::error::{Error, Result};
use crate::gf::{FieldRef, FieldTower, Fq};
use crate::matrix::{null_space, Matrix, SpanBuilder};
use crate::ore::{binom_mod, OreAlgebra, OreElement};
use crate::poly::{roots_with_multiplicity, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// `Λ/(Λ𝔪 + Λ(x − ξ^{1/p}))` for `𝔪 = (x^p − ξ, z2 − ρ)`.
    OffF { xi: Fq, rho: Fq, root: Fq },
    /// `Λ/(p_i, q)`; `q` is the reduction over `E`, `theta` the image of `x`.
    OnF { factor: Poly, q: Poly, theta: Fq },
}

#[derive(Clone, Debug)]
pub struct SimpleModule {
    /// Field of the matrix entries.
    pub field: FieldRef,
    pub kind: ModuleKind,
    pub x: Matrix,
    pub y: Matrix,
}

impl SimpleModule {
    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    /// `YX − XY = f(X)`, with `f` embedded in the matrix field.
    pub fn relation_holds(&self, f: &Poly) -> bool {
        self.y.mul(&self.x).sub(&self.x.mul(&self.y)) == self.x.eval_poly(f)
    }

    pub fn irreducibility(&self) -> Irreducibility {
        irreducibility(&self.x, &self.y)
    }
}

/// Spanning and simplicity data for the pair `(X, Y)` of `d×d` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub dim: usize,
    /// Dimension of the algebra generated by `X` and `Y`.
    pub word_span: usize,
    /// Dimension of the commutant `{B : BX = XB, BY = YB}`.
    pub commutant: usize,
    /// Whether the word span is all `d×d` matrices.
    pub full_span: bool,
    /// Exhaustive check that every nonzero vector generates the module;
    /// `None` when the vector space is too large to enumerate.
    pub simple: Option<bool>,
}

impl Irreducibility {
    /// Density theorem form: for a simple module with commutant field `D`,
    /// the generated algebra is `End_D(M)`, of dimension `d²/[D:E]`.
    pub fn density_holds(&self) -> bool {
        self.word_span * self.commutant == self.dim * self.dim
    }
}

const SIMPLICITY_LIMIT: u64 = 1 << 18;

fn as_vector(m: &Matrix) -> Vec<Fq> {
    m.entries().to_vec()
}

fn word_basis(x: &Matrix, y: &Matrix) -> Vec<Matrix> {
    let k = x.field();
    let d = x.rows();
    let mut span = SpanBuilder::new(k);
    let id = Matrix::identity(k, d);
    span.insert(&as_vector(&id));
    let mut basis = vec![id];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in [x, y] {
                let cand = g.mul(w);
                if span.insert(&as_vector(&cand)) {
                    next.push(cand.clone());
                    basis.push(cand);
                }
            }
        }
        frontier = next;
    }
    basis
}

fn commutant_dim(x: &Matrix, y: &Matrix) -> usize {
    let k = x.field();
    let d = x.rows();
    let mut rows = Vec::new();
    for g in [x, y] {
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![k.zero(); d * d];
                for t in 0..d {
                    row[r * d + t] = k.add(row[r * d + t], g.get(t, c));
                    row[t * d + c] = k.sub(row[t * d + c], g.get(r, t));
                }
                rows.push(row);
            }
        }
    }
    null_space(k, &rows, d * d).len()
}

pub fn irreducibility(x: &Matrix, y: &Matrix) -> Irreducibility {
    let k = x.field();
    let d = x.rows();
    let words = word_basis(x, y);
    let commutant = commutant_dim(x, y);
    let q = k.size() as u64;
    let simple = q.checked_pow(d as u32).filter(|&n| n <= SIMPLICITY_LIMIT).map(|_| {
        let total = q.pow(d as u32);
        (1..total).all(|code| {
            let mut c = code;
            let v: Vec<Fq> = (0..d)
                .map(|_| {
                    let a = k.from_index((c % q) as u32);
                    c /= q;
                    a
                })
                .collect();
            let lead = v.iter().rev().find(|a| !a.is_zero()).copied().expect("nonzero vector");
            if lead != k.one() {
                return true;
            }
            let mut span = SpanBuilder::new(k);
            for w in &words {
                span.insert(&w.apply(&v));
            }
            span.dim() == d
        })
    });
    Irreducibility { dim: d, word_span: words.len(), commutant, full_span: words.len() == d * d, simple }
}

/// The action of `x` on `y^i·1̄` read from the closed formula:
/// `x·y^i·1̄ = a·y^i·1̄ + Σ_{j<i} C(i,j)(−1)^{i−j}·δ^{i−j−1}(f)(a)·y^j·1̄`.
fn x_action_table(alg: &OreAlgebra, a: Fq) -> Matrix {
    let k = alg.field();
    let p = alg.characteristic();
    let mut m = Matrix::zero(k, p, p);
    for i in 0..p {
        m.set(i, i, a);
        for j in 0..i {
            let c = binom_mod(i as u64, j as u64, p as u64);
            let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
            let phi = alg.delta_power(alg.f(), i - j - 1).eval(a);
            m.set(j, i, k.mul(k.from_int(sign * c as i64), phi));
        }
    }
    m
}

/// The same action derived by rewriting `x·y^i = Σ_j y^j·b_j(x)` in `Λ(f)`.
fn x_action_rewritten(alg: &OreAlgebra, a: Fq) -> Matrix {
    let k = alg.field();
    let p = alg.characteristic();
    let mut m = Matrix::zero(k, p, p);
    for i in 0..p {
        let elt = OreElement::term(&Poly::x(k), i);
        for (j, b) in alg.right_normal_form(&elt).iter().enumerate() {
            m.set(j, i, b.eval(a));
        }
    }
    m
}

/// The `p`-dimensional simple module for `𝔪 = (x^p − ξ, z2 − ρ)` with
/// `f(ξ^{1/p}) ≠ 0`; `ξ, ρ` lie in the coefficient field of `f`.
pub fn simple_module_off_f(f: &Poly, xi: Fq, rho: Fq) -> Result<SimpleModule> {
    let alg = OreAlgebra::new(f.clone())?;
    let k = f.field().clone();
    let p = alg.characteristic();
    let a = k.pth_root(xi);
    if f.eval(a).is_zero() {
        return Err(Error::domain(format!(
            "f(ξ^(1/p)) = 0 for ξ = {}: the ideal lies over V(f^p); use the on-f construction",
            k.format(xi)
        )));
    }
    let x = x_action_table(&alg, a);
    if x != x_action_rewritten(&alg, a) {
        return Err(Error::internal("the closed x-action table disagrees with the rewritten action"));
    }
    let centre = alg.centre_generators()?;
    let mut y = Matrix::zero(&k, p, p);
    for i in 0..p - 1 {
        y.set(i + 1, i, k.one());
    }
    let mut e1 = vec![k.zero(); p];
    e1[1] = k.one();
    let top = x.eval_poly(&centre.c).apply(&e1);
    for (j, v) in top.into_iter().enumerate() {
        let v = if j == 0 { k.add(v, rho) } else { v };
        y.set(j, p - 1, v);
    }
    let module = SimpleModule { field: k.clone(), kind: ModuleKind::OffF { xi, rho, root: a }, x, y };
    check_off_f(&module, f, &centre.c, xi, rho)?;
    Ok(module)
}

fn check_off_f(m: &SimpleModule, f: &Poly, c: &Poly, xi: Fq, rho: Fq) -> Result<()> {
    let p = f.field().characteristic() as u64;
    if !m.relation_holds(f) {
        return Err(Error::internal("YX − XY ≠ f(X) on the constructed module"));
    }
    if !m.x.pow(p).is_scalar(xi) {
        return Err(Error::internal("x^p does not act by ξ"));
    }
    if !m.y.pow(p).sub(&m.x.eval_poly(c).mul(&m.y)).is_scalar(rho) {
        return Err(Error::internal("z2 does not act by ρ"));
    }
    Ok(())
}

/// Tower over which `F_i = K[x]/(p_i)` is realised, with `θ` the least root of `p_i`.
pub fn residue_field(factor: &Poly) -> Result<(FieldTower, Fq)> {
    if !factor.is_monic() || factor.is_constant() || !factor.is_irreducible() {
        return Err(Error::domain(format!("{factor} is not a monic irreducible polynomial")));
    }
    let k = factor.field();
    let tower = FieldTower::with_degree(k.clone(), k.degree() * factor.deg() as u32)?;
    let theta = factor.embed(&tower).roots_in_field()[0];
    Ok((tower, theta))
}

/// `L(p_i, q) ≅ F_i[y]/(q)` for a monic irreducible factor `p_i` of `f` and
/// `q ∈ Λ(f)` whose reduction mod `p_i` is irreducible over `F_i`.
pub fn simple_module_on_f(f: &Poly, factor: &Poly, q: &OreElement) -> Result<SimpleModule> {
    if !factor.divides(f) {
        return Err(Error::domain(format!("{factor} does not divide {f}")));
    }
    let (tower, theta) = residue_field(factor)?;
    let e = tower.ext().clone();
    let coeffs: Vec<Fq> = q.terms().iter().map(|t| t.embed(&tower).eval(theta)).collect();
    let q_e = Poly::from_coeffs(&e, coeffs);
    if q_e.is_constant() {
        return Err(Error::domain("q reduces to a constant modulo p_i"));
    }
    let q_e = q_e.monic();
    if !q_e.is_irreducible() {
        return Err(Error::domain(format!("q reduces to {q_e}, which is reducible over F_i = {}", e.spec())));
    }
    let d = q_e.deg();
    let module = SimpleModule {
        field: e.clone(),
        kind: ModuleKind::OnF { factor: factor.clone(), q: q_e.clone(), theta },
        x: Matrix::scalar(&e, d, theta),
        y: Matrix::companion(&q_e),
    };
    if !module.relation_holds(&f.embed(&tower)) {
        return Err(Error::internal("YX − XY ≠ f(X) on the on-f module"));
    }
    Ok(module)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrime {
    pub poly: Poly,
    pub mult: usize,
}

/// A maximal ideal `(x^p − ξ, z2 − ρ)` of the centre with residue degree
/// `degree` over `K`, represented by the least point of its Frobenius orbit.
#[derive(Clone, Debug)]
pub struct CentralPoint {
    pub degree: u32,
    pub field: FieldRef,
    pub xi: Fq,
    pub rho: Fq,
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub min_primes: Vec<MinimalPrime>,
    pub spec_c: Vec<String>,
    pub ht1: Vec<Poly>,
    pub max_off_f: Vec<CentralPoint>,
    pub truncated: bool,
}

const SPECTRUM_POINT_LIMIT: usize = 4096;

/// Irreducible factors of `f` over `K` from Frobenius orbits of its roots.
pub fn minimal_primes(f: &Poly) -> Result<Vec<MinimalPrime>> {
    let split = roots_with_multiplicity(f)?;
    let l = split.ext();
    let k_deg = f.field().degree();
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for &(r, mult) in &split.roots {
        if seen.contains(&r) {
            continue;
        }
        let mut orbit = vec![r];
        let mut c = l.frobenius(r, k_deg);
        while c != r {
            orbit.push(c);
            c = l.frobenius(c, k_deg);
        }
        seen.extend(&orbit);
        let prod = orbit.iter().fold(Poly::one(l), |acc, &a| &acc * &Poly::linear(l, a));
        let poly = prod
            .restrict(&split.tower)
            .ok_or_else(|| Error::internal("Frobenius orbit product has coefficients outside K"))?;
        out.push(MinimalPrime { poly, mult });
    }
    out.sort_by(|a, b| (a.poly.deg(), a.poly.coeffs()).cmp(&(b.poly.deg(), b.poly.coeffs())));
    let product = out.iter().fold(Poly::one(f.field()), |acc, m| &acc * &m.poly.pow(m.mult as u64));
    if &product != f {
        return Err(Error::internal(format!("the factorization of {f} does not multiply back")));
    }
    for m in &out {
        if !m.poly.is_irreducible() {
            return Err(Error::internal(format!("{} is not irreducible", m.poly)));
        }
        if !(f * &m.poly.derivative()).rem(&m.poly).is_zero() {
            return Err(Error::internal(format!("{} is not normal in Λ(f)", m.poly)));
        }
    }
    Ok(out)
}

pub fn spectrum(f: &Poly, degree_bound: u32) -> Result<Spectrum> {
    if f.is_constant() || !f.is_monic() {
        return Err(Error::domain(format!("the spectrum is computed for monic nonscalar f, got {f}")));
    }
    let min_primes = minimal_primes(f)?;
    let mut spec_c = vec!["0".to_string()];
    for m in &min_primes {
        spec_c.push(format!("({})", m.poly));
    }
    for m in &min_primes {
        spec_c.push(format!("({}, q) : q monic irreducible in F_i[y], F_i = K[x]/({})", m.poly, m.poly));
    }
    let ht1 = min_primes.iter().map(|m| m.poly.clone()).collect();
    let k = f.field();
    let k_deg = k.degree();
    let mut max_off_f = Vec::new();
    let mut truncated = false;
    'outer: for j in 1..=degree_bound {
        let tower = FieldTower::with_degree(k.clone(), k_deg * j)?;
        let e = tower.ext().clone();
        let fe = f.embed(&tower);
        for xi in e.elements() {
            if fe.eval(e.pth_root(xi)).is_zero() {
                continue;
            }
            for rho in e.elements() {
                let mut orbit = vec![(xi, rho)];
                let mut cur = (e.frobenius(xi, k_deg), e.frobenius(rho, k_deg));
                while cur != (xi, rho) {
                    orbit.push(cur);
                    cur = (e.frobenius(cur.0, k_deg), e.frobenius(cur.1, k_deg));
                }
                if orbit.len() as u32 != j || orbit.iter().min() != Some(&(xi, rho)) {
                    continue;
                }
                if max_off_f.len() == SPECTRUM_POINT_LIMIT {
                    truncated = true;
                    break 'outer;
                }
                max_off_f.push(CentralPoint { degree: j, field: e.clone(), xi, rho });
            }
        }
    }
    Ok(Spectrum { min_primes, spec_c, ht1, max_off_f, truncated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn off_f_module_over_f4() {
        let k = Field::new(2, 2).unwrap();
        let f = Poly::parse(&k, "x^2 + 1").unwrap();
        assert!(simple_module_off_f(&f, k.one(), k.zero()).is_err());
        let m = simple_module_off_f(&f, k.generator(), k.one()).unwrap();
        assert_eq!(m.dim(), 2);
        assert!(m.relation_holds(&f));
        let irr = m.irreducibility();
        assert!(irr.full_span && irr.simple == Some(true));
    }

    #[test]
    fn off_f_module_over_f9() {
        let k = Field::new(3, 2).unwrap();
        let f = Poly::parse(&k, "x^2 + t*x").unwrap();
        let m = simple_module_off_f(&f, k.one(), k.from_int(2)).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.x.get(0, 0), k.one());
        assert_eq!(m.y.get(1, 0), k.one());
        assert!(m.irreducibility().full_span);
    }

    #[test]
    fn on_f_modules() {
        let k = Field::new(3, 1).unwrap();
        let f = Poly::parse(&k, "x^2").unwrap();
        let alg = OreAlgebra::new(f.clone()).unwrap();
        let x = Poly::x(&k);
        let m = simple_module_on_f(&f, &x, &alg.parse("y").unwrap()).unwrap();
        assert_eq!((m.dim(), m.x.get(0, 0), m.y.get(0, 0)), (1, k.zero(), k.zero()));
        let m = simple_module_on_f(&f, &x, &alg.parse("y - 2").unwrap()).unwrap();
        assert_eq!(m.y.get(0, 0), k.from_int(2));
        let m = simple_module_on_f(&f, &x, &alg.parse("y^2 + 1").unwrap()).unwrap();
        assert_eq!(m.dim(), 2);
        let irr = m.irreducibility();
        assert!(!irr.full_span && irr.simple == Some(true) && irr.density_holds());
        assert!(simple_module_on_f(&f, &x, &alg.parse("y^2 - 1").unwrap()).is_err());
        assert!(simple_module_on_f(&f, &Poly::parse(&k, "x+1").unwrap(), &alg.y()).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let k = Field::new(3, 1).unwrap();
        let s = spectrum(&Poly::parse(&k, "x^2*(x+1)").unwrap(), 1).unwrap();
        assert_eq!(
            s.min_primes,
            vec![
                MinimalPrime { poly: Poly::parse(&k, "x").unwrap(), mult: 2 },
                MinimalPrime { poly: Poly::parse(&k, "x+1").unwrap(), mult: 1 }
            ]
        );
        assert_eq!(s.max_off_f.len(), 3);
        let s = spectrum(&Poly::parse(&k, "x^2+1").unwrap(), 2).unwrap();
        assert_eq!(s.min_primes.len(), 1);
        assert_eq!(s.max_off_f.iter().filter(|p| p.degree == 1).count(), 9);
        assert_eq!(s.max_off_f.iter().filter(|p| p.degree == 2).count(), 27);
    }
}
