//! Automorphisms of `Λ(f)` and the isomorphism test between `Λ(f)` and `Λ(g)`.
//!
//! `σ_{λ,μ,p}` sends `x ↦ λx + μ` and `y ↦ λ^{d−1}y + p(x)` with `d = deg f`.
//! Maps compose as functions on the algebra: `(σ_1 ∘ σ_2)(a) = σ_1(σ_2(a))`.

use crate::eigengroup::{eigengroup, AffineAut, Eigengroup};
use crate::error::{Error, Result};
use crate::gf::{FieldRef, Fq};
use crate::ore::{OreAlgebra, OreElement};
use crate::poly::Poly;
use crate::space::FpSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaAut {
    pub lambda: Fq,
    pub mu: Fq,
    pub shift: Poly,
}

impl LambdaAut {
    pub fn identity(field: &FieldRef) -> Self {
        LambdaAut { lambda: field.one(), mu: field.zero(), shift: Poly::zero(field) }
    }

    /// `s_p: x ↦ x, y ↦ y + p`.
    pub fn shift_by(p: &Poly) -> Self {
        let k = p.field();
        LambdaAut { lambda: k.one(), mu: k.zero(), shift: p.clone() }
    }

    pub fn from_affine(field: &FieldRef, a: &AffineAut) -> Self {
        LambdaAut { lambda: a.lambda, mu: a.mu, shift: Poly::zero(field) }
    }

    pub fn affine(&self) -> AffineAut {
        AffineAut { lambda: self.lambda, mu: self.mu }
    }

    fn y_scale(&self, d: usize) -> Fq {
        let k = self.shift.field();
        k.pow(self.lambda, (d as u64).saturating_sub(1))
    }

    pub fn x_image(&self, alg: &OreAlgebra) -> OreElement {
        let k = alg.field();
        OreElement::from_poly(&Poly::from_coeffs(k, vec![self.mu, self.lambda]))
    }

    pub fn y_image(&self, alg: &OreAlgebra) -> OreElement {
        alg.y().scale(self.y_scale(alg.f().deg())).add(&OreElement::from_poly(&self.shift))
    }

    pub fn apply(&self, alg: &OreAlgebra, a: &OreElement) -> OreElement {
        alg.substitute(a, &self.x_image(alg), &self.y_image(alg))
    }

    /// `self ∘ other = σ_{λ_1λ_2, λ_2μ_1 + μ_2, λ_2^{d−1}p_1 + p_2(λ_1x + μ_1)}`.
    pub fn compose(&self, other: &LambdaAut, d: usize) -> LambdaAut {
        let k = self.shift.field();
        LambdaAut {
            lambda: k.mul(self.lambda, other.lambda),
            mu: k.add(k.mul(other.lambda, self.mu), other.mu),
            shift: &self.shift.scale(other.y_scale(d)) + &other.shift.affine_substitute(self.lambda, self.mu),
        }
    }

    /// `σ_{λ^{−1}, −λ^{−1}μ, q}` with `q(x) = −λ^{1−d}·p(λ^{−1}(x − μ))`.
    pub fn inverse(&self, d: usize) -> LambdaAut {
        let k = self.shift.field();
        let inv = k.inv(self.lambda);
        let mu = k.neg(k.mul(inv, self.mu));
        let c = k.neg(k.pow(inv, (d as u64).saturating_sub(1)));
        LambdaAut { lambda: inv, mu, shift: self.shift.affine_substitute(inv, mu).scale(c) }
    }

    /// Whether `σ(y)σ(x) − σ(x)σ(y) = f(σ(x))` holds in `Λ(f)`.
    pub fn is_automorphism(&self, alg: &OreAlgebra) -> bool {
        let x = self.x_image(alg);
        let y = self.y_image(alg);
        alg.commutator(&y, &x) == alg.eval_poly(alg.f(), &x)
    }
}

/// `Aut_K(Λ(f)) = S(K) ⋊ G_f(K)`, with `S(K) ≅ (K[x], +)` kept symbolic.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub f: Poly,
    /// `G_f(K)` as computed over the splitting field.
    pub eigen: Eigengroup,
    /// Elements of `G_f(K)` in the coordinates of `K`.
    pub eigen_elements: Vec<AffineAut>,
    /// Generators of `G_f(K)` in the coordinates of `K`.
    pub eigen_generators: Vec<AffineAut>,
}

impl AutGroup {
    /// Generators with shift polynomials `c·x^j`, `j ≤ bound`, `c` running
    /// over an `F_p`-basis of `K`, followed by the lifts of `G_f(K)`.
    pub fn generators(&self, bound: usize) -> Vec<LambdaAut> {
        let k = self.f.field();
        let basis = FpSpace::subfield(k, k.degree()).basis();
        let mut out = Vec::new();
        for j in 0..=bound {
            for &c in &basis {
                out.push(LambdaAut::shift_by(&Poly::monomial(k, c, j)));
            }
        }
        out.extend(self.eigen_generators.iter().map(|a| LambdaAut::from_affine(k, a)));
        out
    }
}

pub fn aut_group(f: &Poly) -> Result<AutGroup> {
    if f.is_constant() {
        return Err(Error::domain("Λ(f) for scalar f (the polynomial algebra and the Weyl algebra) is out of scope"));
    }
    if !f.is_monic() {
        return Err(Error::domain(format!("f must be monic, got {f}")));
    }
    let res = eigengroup(f)?;
    Ok(AutGroup {
        f: f.clone(),
        eigen: res.over_base.clone(),
        eigen_elements: res.elements_in_base()?,
        eigen_generators: res.generators_in_base()?,
    })
}

/// `g(x) = λ·f(αx + β)`, realised by `Λ(f) → Λ(g)`, `x ↦ αx + β`, `y ↦ y_scale·y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub lambda: Fq,
    pub alpha: Fq,
    pub beta: Fq,
    pub y_scale: Fq,
}

/// Checks that `x ↦ αx + β`, `y ↦ c·y` carries the relation of `Λ(f)` to
/// `Λ(g)`: in `Λ(g)`, `[cy, αx + β] = f(αx + β)`.
pub fn transports_relation(f: &Poly, g: &Poly, alpha: Fq, beta: Fq, c: Fq) -> Result<bool> {
    let alg = OreAlgebra::new(g.clone())?;
    let k = g.field();
    let x = OreElement::from_poly(&Poly::from_coeffs(k, vec![beta, alpha]));
    let y = alg.y().scale(c);
    Ok(alg.commutator(&y, &x) == alg.eval_poly(f, &x))
}

/// Exhaustive search over `α ∈ K^×, β ∈ K`; every witness is checked by
/// relation transport, trying `y ↦ α^{d−1}y` and then `y ↦ α^{1−d}y`.
pub fn are_isomorphic(f: &Poly, g: &Poly) -> Result<Option<IsoWitness>> {
    if !crate::poly::same_field(f.field(), g.field()) {
        return Err(Error::domain("both polynomials must be over the same field"));
    }
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::domain("both polynomials must be monic"));
    }
    if f.deg() != g.deg() {
        return Ok(None);
    }
    let k = f.field();
    let d = f.deg() as i64;
    for alpha in k.elements().filter(|a| !a.is_zero()) {
        for beta in k.elements() {
            let image = f.affine_substitute(alpha, beta);
            let Some(scale) = g.is_proportional(&image) else { continue };
            let lambda = scale;
            let candidates = [pow_signed(k, alpha, d - 1), pow_signed(k, alpha, 1 - d)];
            for c in candidates {
                if transports_relation(f, g, alpha, beta, c)? {
                    return Ok(Some(IsoWitness { lambda, alpha, beta, y_scale: c }));
                }
            }
            return Err(Error::internal(format!(
                "{g} = λ·{f}(αx+β) but neither y-scaling transports the relation"
            )));
        }
    }
    Ok(None)
}

fn pow_signed(k: &FieldRef, a: Fq, e: i64) -> Fq {
    if e >= 0 {
        k.pow(a, e as u64)
    } else {
        k.pow(k.inv(a), (-e) as u64)
    }
}
