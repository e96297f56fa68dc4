//! Eigengroups `G_f = {σ ∈ Aut_K(K[x]) : σ(f) ∈ K^×·f}` of polynomials,
//! their eigenforms, descent from the splitting field to the base field,
//! an exhaustive oracle, and witness polynomials for prescribed groups.
//!
//! An affine automorphism `σ_{λ,μ}` acts by substitution,
//! `σ(g)(x) = g(λx + μ)`. Composition `σ_1 ∘ σ_2` (apply `σ_2` first) is
//! then `σ_{λ_1λ_2, λ_2μ_1 + μ_2}`.
//!
//! The structured computation runs over a finite field `L` in which `f`
//! splits. When `f` has at least two distinct roots every element of
//! `G_f(K̄)` is defined over `L`, so `L` stands in for the algebraic
//! closure; the single-root case is the torus, which is infinite over `K̄`
//! and is kept symbolic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gf::{divisors, gcd, FieldRef, Fq};
use crate::poly::{exponent_decomp, f_v, multiplier_field, split_in, Poly, Split};
use crate::space::FpSpace;

/// `σ_{λ,μ}: x ↦ λx + μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineAut {
    pub lambda: Fq,
    pub mu: Fq,
}

impl AffineAut {
    pub fn identity(field: &FieldRef) -> Self {
        AffineAut { lambda: field.one(), mu: field.zero() }
    }

    /// `σ_{λ, (1−λ)ν}`, the dilation by `λ` fixing `ν`.
    pub fn dilation(field: &FieldRef, lambda: Fq, nu: Fq) -> Self {
        AffineAut { lambda, mu: field.mul(field.sub(field.one(), lambda), nu) }
    }

    pub fn translation(field: &FieldRef, v: Fq) -> Self {
        AffineAut { lambda: field.one(), mu: v }
    }

    /// `self ∘ other`.
    pub fn compose(&self, field: &FieldRef, other: &AffineAut) -> AffineAut {
        AffineAut {
            lambda: field.mul(self.lambda, other.lambda),
            mu: field.add(field.mul(other.lambda, self.mu), other.mu),
        }
    }

    pub fn inverse(&self, field: &FieldRef) -> AffineAut {
        let inv = field.inv(self.lambda);
        AffineAut { lambda: inv, mu: field.neg(field.mul(inv, self.mu)) }
    }

    /// `g(λx + μ)`.
    pub fn apply(&self, g: &Poly) -> Poly {
        g.affine_substitute(self.lambda, self.mu)
    }

    /// `ord(λ)` if `λ ≠ 1`, `p` for a nonzero translation, 1 for the identity.
    pub fn order(&self, field: &FieldRef) -> u64 {
        if self.lambda != field.one() {
            field.order(self.lambda)
        } else if !self.mu.is_zero() {
            field.characteristic() as u64
        } else {
            1
        }
    }

    pub fn map(&self, f: impl Fn(Fq) -> Fq) -> AffineAut {
        AffineAut { lambda: f(self.lambda), mu: f(self.mu) }
    }
}

/// The shift space `V` with its multiplier exponent `e` (0 when `V = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftSpace {
    pub space: FpSpace,
    pub e: u32,
}

impl ShiftSpace {
    pub fn new(space: FpSpace) -> Self {
        let e = if space.dim() == 0 { 0 } else { multiplier_field(&space).expect("nonzero space") };
        ShiftSpace { space, e }
    }

    pub fn zero(field: &FieldRef) -> Self {
        ShiftSpace { space: FpSpace::zero(field), e: 0 }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Shape of an eigengroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigengroupDesc {
    /// All of `Aut_K(K[x])`.
    Full,
    /// `T_ν = {σ_{λ,(1−λ)ν}}`.
    Torus { nu: Fq },
    /// `Sh_V ⋊ ⟨σ_{λn,(1−λn)ν}⟩`; `n = 1` (with `λn = 1`, `ν = 0`) means no
    /// dilation part, so `V = 0, n = 1` is the trivial group.
    Finite { v: ShiftSpace, n: u64, lambda_n: Fq, nu: Fq },
}

/// Field over which a group is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// The algebraic closure, realised by the ambient splitting field.
    Closure,
    /// The subfield `F_{p^k}` of the ambient field.
    Subfield(u32),
}

/// An eigengroup whose scalars live in `field`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigengroup {
    pub field: FieldRef,
    pub level: Level,
    pub desc: EigengroupDesc,
}

impl Eigengroup {
    pub fn trivial(field: &FieldRef, level: Level) -> Self {
        Eigengroup {
            field: field.clone(),
            level,
            desc: EigengroupDesc::Finite {
                v: ShiftSpace::zero(field),
                n: 1,
                lambda_n: field.one(),
                nu: field.zero(),
            },
        }
    }

    fn level_size(&self) -> Option<u64> {
        match self.level {
            Level::Closure => None,
            Level::Subfield(k) => Some((self.field.characteristic() as u64).pow(k)),
        }
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match &self.desc {
            EigengroupDesc::Finite { v, n, .. } => {
                Some(n * (self.field.characteristic() as u64).pow(v.dim() as u32))
            }
            EigengroupDesc::Torus { .. } => self.level_size().map(|q| q - 1),
            EigengroupDesc::Full => self.level_size().map(|q| q * (q - 1)),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == Some(1)
    }

    /// Generators: the dilation (if any) followed by translations by a basis of `V`.
    pub fn generators(&self) -> Vec<AffineAut> {
        let k = &self.field;
        match &self.desc {
            EigengroupDesc::Finite { v, n, lambda_n, nu } => {
                let mut gens = Vec::new();
                if *n > 1 {
                    gens.push(AffineAut::dilation(k, *lambda_n, *nu));
                }
                gens.extend(v.space.basis().into_iter().map(|b| AffineAut::translation(k, b)));
                gens
            }
            EigengroupDesc::Torus { nu } => match self.level {
                Level::Subfield(deg) => {
                    let gen = k.subfield_generator(deg);
                    vec![AffineAut::dilation(k, gen, *nu)]
                }
                Level::Closure => Vec::new(),
            },
            EigengroupDesc::Full => match self.level {
                Level::Subfield(deg) => {
                    let gen = k.subfield_generator(deg);
                    let mut gens = vec![AffineAut::dilation(k, gen, k.zero())];
                    gens.extend(FpSpace::subfield(k, deg).basis().into_iter().map(|b| AffineAut::translation(k, b)));
                    gens
                }
                Level::Closure => Vec::new(),
            },
        }
    }

    /// Text presentation such as `Sh_V ⋊ ⟨σ_{λ,μ}⟩, order 18`.
    pub fn describe(&self, render: &dyn Fn(Fq) -> String) -> String {
        let order = self.order().map_or("infinite".to_string(), |o| o.to_string());
        match &self.desc {
            EigengroupDesc::Full => format!("Aut(K[x]), order {order}"),
            EigengroupDesc::Torus { nu } => format!("T_{}, order {order}", render(*nu)),
            EigengroupDesc::Finite { v, n, lambda_n, nu } => {
                let basis: Vec<String> = v.space.basis().into_iter().map(render).collect();
                let shift = if v.dim() == 0 { None } else { Some(format!("Sh_V with V = span{{{}}}", basis.join(", "))) };
                let k = &self.field;
                let dil = (*n > 1).then(|| {
                    let g = AffineAut::dilation(k, *lambda_n, *nu);
                    format!("⟨σ_{{{},{}}}⟩ (n = {n})", render(g.lambda), render(g.mu))
                });
                let body = match (shift, dil) {
                    (None, None) => "{e}".to_string(),
                    (Some(s), None) => s,
                    (None, Some(d)) => d,
                    (Some(s), Some(d)) => format!("{s} ⋊ {d}"),
                };
                format!("{body}, order {order}")
            }
        }
    }
}

/// Canonical presentation of `f` read off from its eigengroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigenform {
    /// `f = f_V^i(x−ν) · g(f_V^n(x−ν))`.
    A10 { v: ShiftSpace, i: usize, nu: Fq, n: u64, g: Poly },
    /// `f = (x−ν)^i · g((x−ν)^n)`.
    A11 { i: usize, nu: Fq, n: u64, g: Poly },
    /// `f = g^{p^s}(f_V(x))`.
    B11 { v: ShiftSpace, s: u32, g: Poly },
    /// `f = (x−ν)^d`.
    SingleRoot { nu: Fq, d: usize },
    /// `G_f` is trivial.
    NoForm,
}

impl Eigenform {
    pub fn case_name(&self) -> &'static str {
        match self {
            Eigenform::A10 { .. } => "A10",
            Eigenform::A11 { .. } => "A11",
            Eigenform::B11 { .. } => "B11",
            Eigenform::SingleRoot { .. } => "single_root",
            Eigenform::NoForm => "none",
        }
    }

    /// Multiplies the stored form back out; `None` for [`Eigenform::NoForm`].
    pub fn expand(&self, field: &FieldRef) -> Option<Poly> {
        let p = field.characteristic() as u64;
        match self {
            Eigenform::A10 { v, i, nu, n, g } => {
                let base = f_v(&v.space, *nu);
                Some(&base.pow(*i as u64) * &g.compose(&base.pow(*n)))
            }
            Eigenform::A11 { i, nu, n, g } => {
                let base = Poly::linear(field, *nu);
                Some(&base.pow(*i as u64) * &g.compose(&base.pow(*n)))
            }
            Eigenform::B11 { v, s, g } => {
                Some(g.pow(p.pow(*s)).compose(&f_v(&v.space, field.zero())))
            }
            Eigenform::SingleRoot { nu, d } => Some(Poly::linear(field, *nu).pow(*d as u64)),
            Eigenform::NoForm => None,
        }
    }

    /// For dilation forms, the generator `σ_{λn,(1−λn)ν}` and the exponent
    /// `i` of the law `σ(f) = λn^i·f`.
    pub fn eigenvalue_law(&self, field: &FieldRef) -> Result<Option<(AffineAut, usize)>> {
        match self {
            Eigenform::A10 { i, nu, n, .. } | Eigenform::A11 { i, nu, n, .. } => {
                let lambda = field.primitive_root_of_unity(*n)?;
                Ok(Some((AffineAut::dilation(field, lambda, *nu), *i)))
            }
            _ => Ok(None),
        }
    }
}

fn check_input(f: &Poly) -> Result<()> {
    if f.is_constant() || !f.is_monic() {
        return Err(Error::domain(format!("eigengroups are computed for monic nonscalar polynomials, got {f}")));
    }
    Ok(())
}

/// Distinct roots with multiplicities, requiring `f` to split in its field.
fn split_roots(f: &Poly) -> Result<Vec<(Fq, usize)>> {
    let roots = f.roots_with_multiplicity_in_field();
    let total: usize = roots.iter().map(|&(_, m)| m).sum();
    if total != f.deg() {
        return Err(Error::domain(format!(
            "{f} does not split over {}; enlarge the field first",
            f.field().spec()
        )));
    }
    Ok(roots)
}

fn shift_space_from_roots(field: &FieldRef, roots: &[(Fq, usize)], k: u32) -> FpSpace {
    let mult = |a: Fq| roots.iter().find(|&&(r, _)| r == a).map_or(0, |&(_, m)| m);
    let r0 = roots[0].0;
    let shifts: Vec<Fq> = roots
        .iter()
        .map(|&(r, _)| field.sub(r, r0))
        .filter(|&d| !d.is_zero() && field.in_subfield(d, k))
        .filter(|&d| roots.iter().all(|&(r, m)| mult(field.add(r, d)) == m))
        .collect();
    FpSpace::span(field, &shifts)
}

/// The `K`-shift space `V(f, K)` for `f` split over its field and
/// `K = F_{p^k}` a subfield; pass the full degree for the closure version.
pub fn shift_space(f: &Poly, k: u32) -> Result<ShiftSpace> {
    check_input(f)?;
    let roots = split_roots(f)?;
    if roots.len() < 2 {
        return Err(Error::domain("shift spaces need at least two distinct roots; single-root inputs have the torus as eigengroup"));
    }
    if f.field().degree() % k != 0 {
        return Err(Error::domain(format!("degree {k} does not divide {}", f.field().degree())));
    }
    Ok(ShiftSpace::new(shift_space_from_roots(f.field(), &roots, k)))
}

/// Every `σ_{λ,μ}` with `λ, μ ∈ F_{p^k} ⊆ field(f)` and `σ(f) ∝ f`, sorted.
pub fn eigengroup_bruteforce_in(f: &Poly, k: u32) -> Result<Vec<AffineAut>> {
    check_input(f)?;
    let field = f.field();
    if field.degree() % k != 0 {
        return Err(Error::domain(format!("degree {k} does not divide {}", field.degree())));
    }
    let size = (field.characteristic() as u64).pow(k);
    if size > field.caps().max_size {
        return Err(Error::FieldTooLarge { size, cap: field.caps().max_size });
    }
    let elems = field.subfield_elements(k);
    let d = f.deg() as u64;
    let mut out = Vec::new();
    for &lambda in elems.iter().filter(|a| !a.is_zero()) {
        let target = f.scale(field.pow(lambda, d));
        for &mu in &elems {
            if f.affine_substitute(lambda, mu) == target {
                out.push(AffineAut { lambda, mu });
            }
        }
    }
    Ok(out)
}

/// Exhaustive eigengroup of `f` over its own coefficient field.
pub fn eigengroup_bruteforce(f: &Poly) -> Result<Vec<AffineAut>> {
    eigengroup_bruteforce_in(f, f.field().degree())
}

/// Conditions of the triviality criterion: at every root `ν` of `f1` and
/// every root of `f1′` off `f1`, the shifted polynomial (with the power of
/// `x` removed) has `gcd_p = 1`, and there are no shift pairs.
fn triviality_criterion(f: &Poly, roots: &[(Fq, usize)], shifts: &FpSpace) -> Result<bool> {
    let f1 = exponent_decomp(f)?.f1;
    let at_roots = roots.iter().all(|&(nu, _)| {
        let h = f1.shift(nu);
        h.shift_down(h.x_valuation()).gcd_p() == 1
    });
    let at_critical = f1
        .derivative()
        .roots_in_field()
        .into_iter()
        .filter(|&nu| !f1.eval(nu).is_zero())
        .all(|nu| f1.shift(nu).gcd_p() == 1);
    Ok(at_roots && at_critical && shifts.dim() == 0)
}

/// Candidate centres: distinct roots of `f` (ascending), then roots of
/// `f1′` that are not roots of `f` (ascending).
fn centre_candidates(f: &Poly, roots: &[(Fq, usize)]) -> Result<Vec<Fq>> {
    let f1 = exponent_decomp(f)?.f1;
    let mut out: Vec<Fq> = roots.iter().map(|&(r, _)| r).collect();
    let d = f1.derivative();
    if !d.is_constant() {
        out.extend(d.roots_in_field().into_iter().filter(|&a| f.eval(a) != f.field().zero()));
    }
    Ok(out)
}

/// `g` with `h(t) = g(t^n)`.
fn contract(h: &Poly, n: u64) -> Poly {
    let n = n as usize;
    Poly::from_coeffs(h.field(), (0..=h.deg() / n).map(|j| h.coeff(j * n)).collect())
}

fn verify_law(f: &Poly, form: &Eigenform) -> Result<()> {
    let field = f.field();
    if let Some((sigma, i)) = form.eigenvalue_law(field)? {
        let expected = f.scale(field.pow(sigma.lambda, i as u64));
        if sigma.apply(f) != expected {
            return Err(Error::internal(format!("eigenvalue law fails for {f} in case {}", form.case_name())));
        }
    }
    if let Some(g) = form.expand(field) {
        if &g != f {
            return Err(Error::internal(format!("eigenform of {f} expands to {g}")));
        }
    }
    Ok(())
}

/// `G_f(K̄)` and the eigenform of a monic nonscalar `f` that splits over its
/// coefficient field.
pub fn eigengroup_closed(f: &Poly) -> Result<(Eigengroup, Eigenform)> {
    check_input(f)?;
    let field = f.field();
    let p = field.characteristic() as u64;
    let roots = split_roots(f)?;

    if roots.len() == 1 {
        let nu = roots[0].0;
        let group = Eigengroup { field: field.clone(), level: Level::Closure, desc: EigengroupDesc::Torus { nu } };
        return Ok((group, Eigenform::SingleRoot { nu, d: f.deg() }));
    }

    let shifts = shift_space_from_roots(field, &roots, field.degree());
    let trivial_by_criterion = triviality_criterion(f, &roots, &shifts)?;
    let candidates = centre_candidates(f, &roots)?;

    let (group, form) = if shifts.dim() == 0 {
        let mut found: Vec<(Fq, usize, u64, Poly)> = Vec::new();
        for &nu in &candidates {
            let h = f.shift(nu);
            let i = h.x_valuation();
            let rest = h.shift_down(i);
            let n = rest.gcd_p();
            if n >= 2 {
                found.push((nu, i, n, contract(&rest, n)));
            }
        }
        if found.len() > 1 {
            return Err(Error::internal(format!("several dilation centres found for {f}")));
        }
        match found.pop() {
            Some((nu, i, n, g)) => {
                let lambda_n = field
                    .primitive_root_of_unity(n)
                    .map_err(|_| Error::internal(format!("no primitive {n}-th root of unity in the splitting field")))?;
                let group = Eigengroup {
                    field: field.clone(),
                    level: Level::Closure,
                    desc: EigengroupDesc::Finite { v: ShiftSpace::zero(field), n, lambda_n, nu },
                };
                (group, Eigenform::A11 { i, nu, n, g })
            }
            None => (Eigengroup::trivial(field, Level::Closure), Eigenform::NoForm),
        }
    } else {
        let v = ShiftSpace::new(shifts.clone());
        let top = p.pow(v.e) - 1;
        let fv = f_v(&shifts, field.zero());
        let mut reps: Vec<Fq> = candidates.iter().map(|&a| shifts.coset_min(a)).collect();
        reps.dedup();
        let mut seen = BTreeSet::new();
        reps.retain(|a| seen.insert(*a));
        let mut found: Vec<(Fq, usize, u64, Poly)> = Vec::new();
        for &nu in &reps {
            let outer = f
                .shift(nu)
                .decompose_through(&fv)
                .ok_or_else(|| Error::internal(format!("{f} is not a polynomial in f_V")))?;
            let i = outer.x_valuation();
            let h = outer.shift_down(i);
            let n = if h.is_constant() { top } else { gcd(top, h.gcd_p()) };
            if n >= 2 {
                found.push((nu, i, n, contract(&h, n)));
            }
        }
        if found.len() > 1 {
            return Err(Error::internal(format!("several dilation centres modulo V found for {f}")));
        }
        let b11 = b11_criterion(f, &v, &fv)?;
        if b11 != found.is_empty() {
            return Err(Error::internal(format!(
                "the B11 test says {} but the centre search found {} dilation centres for {f}",
                if b11 { "no dilations" } else { "dilations" },
                found.len()
            )));
        }
        match found.pop() {
            Some((nu, i, n, g)) => {
                let lambda_n = field.primitive_root_of_unity(n)?;
                let group = Eigengroup {
                    field: field.clone(),
                    level: Level::Closure,
                    desc: EigengroupDesc::Finite { v: v.clone(), n, lambda_n, nu },
                };
                (group, Eigenform::A10 { v, i, nu, n, g })
            }
            None => {
                let ed = exponent_decomp(f)?;
                let g = ed
                    .f1
                    .decompose_through(&fv)
                    .ok_or_else(|| Error::internal(format!("f1 of {f} is not a polynomial in f_V")))?;
                let group = Eigengroup {
                    field: field.clone(),
                    level: Level::Closure,
                    desc: EigengroupDesc::Finite { v: v.clone(), n: 1, lambda_n: field.one(), nu: field.zero() },
                };
                (group, Eigenform::B11 { v, s: ed.s, g })
            }
        }
    };

    if trivial_by_criterion != group.is_trivial() {
        return Err(Error::internal(format!(
            "triviality criterion ({trivial_by_criterion}) disagrees with the structured search for {f}"
        )));
    }
    verify_law(f, &form)?;
    if let EigengroupDesc::Finite { .. } = group.desc {
        for sigma in group.generators() {
            if sigma.apply(f).is_proportional(f).is_none() {
                return Err(Error::internal(format!("generator does not preserve {f} up to a scalar")));
            }
        }
    }
    Ok((group, form))
}

/// Literal reading of the criterion for `Ḡ_f = e` when `V ≠ 0`: writing
/// `f1 = g(f_V)`, either `g` has one distinct root and `(p, e) = (2, 1)`,
/// or `g` has several and `gcd(p^e − 1, gcd_p(g_ν)) = 1` for all roots `ν`
/// of `f1` and `f1′`, where `f1 = f_V^{i}(x−ν)·g_ν(f_V(x−ν))`.
fn b11_criterion(f: &Poly, v: &ShiftSpace, fv: &Poly) -> Result<bool> {
    let field = f.field();
    let p = field.characteristic() as u64;
    let f1 = exponent_decomp(f)?.f1;
    let g = f1
        .decompose_through(fv)
        .ok_or_else(|| Error::internal("f1 is not a polynomial in f_V"))?;
    let g_roots = g.roots_in_field();
    if g_roots.len() == 1 {
        return Ok(p == 2 && v.e == 1);
    }
    let top = p.pow(v.e) - 1;
    let mut nus = f1.roots_in_field();
    let d = f1.derivative();
    if !d.is_constant() {
        nus.extend(d.roots_in_field());
    }
    for nu in nus {
        let outer = f1
            .shift(nu)
            .decompose_through(fv)
            .ok_or_else(|| Error::internal("shifted f1 is not a polynomial in f_V"))?;
        let g_nu = outer.shift_down(outer.x_valuation());
        let n = if g_nu.is_constant() { top } else { gcd(top, g_nu.gcd_p()) };
        if n != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restricts a closure-level group over `L` to `K = F_{p^k} ⊆ L`.
pub fn eigengroup_descend(group: &Eigengroup, k: u32) -> Result<Eigengroup> {
    let field = &group.field;
    if field.degree() % k != 0 {
        return Err(Error::domain(format!("degree {k} does not divide {}", field.degree())));
    }
    let level = Level::Subfield(k);
    let desc = match &group.desc {
        EigengroupDesc::Full => EigengroupDesc::Full,
        EigengroupDesc::Torus { nu } => {
            if field.in_subfield(*nu, k) {
                EigengroupDesc::Torus { nu: *nu }
            } else {
                return Ok(Eigengroup::trivial(field, level));
            }
        }
        EigengroupDesc::Finite { v, n, lambda_n, nu } => {
            let v_k = ShiftSpace::new(v.space.intersect_subfield(k));
            let base = FpSpace::subfield(field, k);
            let mut chosen = None;
            for i in divisors(*n).into_iter().filter(|&i| i < *n) {
                let lambda = field.pow(*lambda_n, i);
                if !field.in_subfield(lambda, k) {
                    continue;
                }
                let w = field.mul(field.sub(field.one(), lambda), *nu);
                if let Some((_, in_k)) = v.space.split_sum(&base, w) {
                    chosen = Some((i, lambda, in_k));
                    break;
                }
            }
            match chosen {
                Some((i, lambda, mu)) => {
                    let centre = field.div(mu, field.sub(field.one(), lambda));
                    EigengroupDesc::Finite { nu: v_k.space.coset_min(centre), v: v_k, n: n / i, lambda_n: lambda }
                }
                None => EigengroupDesc::Finite { v: v_k, n: 1, lambda_n: field.one(), nu: field.zero() },
            }
        }
    };
    Ok(Eigengroup { field: field.clone(), level, desc })
}

/// All elements of a group taken over a finite level, sorted.
pub fn group_elements(group: &Eigengroup) -> Result<Vec<AffineAut>> {
    let k = &group.field;
    let mut out = match &group.desc {
        EigengroupDesc::Finite { v, n, lambda_n, nu } => {
            let shifts = v.space.elements();
            let mut out = Vec::with_capacity(shifts.len() * *n as usize);
            for i in 0..*n {
                let dil = AffineAut::dilation(k, k.pow(*lambda_n, i), *nu);
                for &s in &shifts {
                    out.push(dil.compose(k, &AffineAut::translation(k, s)));
                }
            }
            out
        }
        EigengroupDesc::Torus { nu } => match group.level {
            Level::Closure => return Err(Error::domain("the torus over the algebraic closure is infinite")),
            Level::Subfield(deg) => k
                .subfield_elements(deg)
                .into_iter()
                .filter(|a| !a.is_zero())
                .map(|l| AffineAut::dilation(k, l, *nu))
                .collect(),
        },
        EigengroupDesc::Full => match group.level {
            Level::Closure => return Err(Error::domain("Aut(K̄[x]) is infinite")),
            Level::Subfield(deg) => {
                let elems = k.subfield_elements(deg);
                let mut out = Vec::new();
                for &l in elems.iter().filter(|a| !a.is_zero()) {
                    for &m in &elems {
                        out.push(AffineAut { lambda: l, mu: m });
                    }
                }
                out
            }
        },
    };
    out.sort();
    out.dedup();
    Ok(out)
}

/// Everything computed for `f ∈ K[x]`.
#[derive(Clone, Debug)]
pub struct EigengroupResult {
    pub split: Split,
    pub closed: Eigengroup,
    pub form: Eigenform,
    /// The group over the target field `F_{p^{k·extra}}`.
    pub over_base: Eigengroup,
}

impl EigengroupResult {
    /// Elements of [`over_base`](Self::over_base), as maps over the splitting field.
    pub fn elements(&self) -> Result<Vec<AffineAut>> {
        group_elements(&self.over_base)
    }

    /// [`elements`](Self::elements) rewritten in the coordinates of the
    /// coefficient field of `f`; only meaningful when `extra = 1`.
    pub fn elements_in_base(&self) -> Result<Vec<AffineAut>> {
        let mut out = self.elements()?.into_iter().map(|s| self.restrict(s)).collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// Generators of [`over_base`](Self::over_base) in base coordinates.
    pub fn generators_in_base(&self) -> Result<Vec<AffineAut>> {
        self.over_base.generators().into_iter().map(|s| self.restrict(s)).collect()
    }

    fn restrict(&self, s: AffineAut) -> Result<AffineAut> {
        let tower = &self.split.tower;
        match (tower.restrict(s.lambda), tower.restrict(s.mu)) {
            (Some(lambda), Some(mu)) => Ok(AffineAut { lambda, mu }),
            _ => Err(Error::internal("group element over K has coordinates outside K")),
        }
    }
}

/// `G_f` over the coefficient field of `f`.
pub fn eigengroup(f: &Poly) -> Result<EigengroupResult> {
    eigengroup_over_extension(f, 1)
}

/// `G_f` over the extension of degree `extra` of the coefficient field.
pub fn eigengroup_over_extension(f: &Poly, extra: u32) -> Result<EigengroupResult> {
    check_input(f)?;
    let split = split_in(f, extra)?;
    let (closed, form) = eigengroup_closed(&split.poly)?;
    let over_base = eigengroup_descend(&closed, f.field().degree() * extra)?;
    Ok(EigengroupResult { split, closed, form, over_base })
}

/// Subgroups of `Aut_K(K[x])` that occur as eigengroups, with data in `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    Trivial,
    /// `⟨σ_{λn,(1−λn)ν}⟩` with `λn` the field's fixed primitive `n`-th root.
    Cyclic { n: u64, nu: Fq },
    /// `Sh_V`, witnessed by `f_V(x−ν) − ρ` with `ρ` off the image of `f_V(·−ν)` on `K`.
    ShiftOffImage { v: FpSpace, nu: Fq },
    /// `Sh_V`, witnessed by `f_V(x)·f_V(x−ν)^2` with `ν ∉ V`.
    ShiftDoubleCoset { v: FpSpace, nu: Fq },
    /// `Sh_V ⋊ ⟨σ_{λn,(1−λn)ν}⟩` with `n | p^e − 1`.
    ShiftCyclic { v: FpSpace, n: u64, nu: Fq },
    Torus { nu: Fq },
    Full,
}

impl SubgroupSpec {
    /// The subgroup as a group over its own field `K`.
    pub fn to_group(&self, k: &FieldRef) -> Result<Eigengroup> {
        let level = Level::Subfield(k.degree());
        let finite = |v: &FpSpace, n: u64, nu: Fq| -> Result<Eigengroup> {
            let lambda_n = k.primitive_root_of_unity(n)?;
            let nu = if n == 1 { k.zero() } else { nu };
            Ok(Eigengroup {
                field: k.clone(),
                level,
                desc: EigengroupDesc::Finite { v: ShiftSpace::new(v.clone()), n, lambda_n, nu },
            })
        };
        match self {
            SubgroupSpec::Trivial => Ok(Eigengroup::trivial(k, level)),
            SubgroupSpec::Cyclic { n, nu } => finite(&FpSpace::zero(k), *n, *nu),
            SubgroupSpec::ShiftOffImage { v, .. } | SubgroupSpec::ShiftDoubleCoset { v, .. } => {
                finite(v, 1, k.zero())
            }
            SubgroupSpec::ShiftCyclic { v, n, nu } => finite(v, *n, *nu),
            SubgroupSpec::Torus { nu } => {
                Ok(Eigengroup { field: k.clone(), level, desc: EigengroupDesc::Torus { nu: *nu } })
            }
            SubgroupSpec::Full => Ok(Eigengroup { field: k.clone(), level, desc: EigengroupDesc::Full }),
        }
    }
}

fn check_space(k: &FieldRef, v: &FpSpace) -> Result<()> {
    if !crate::poly::same_field(k, v.field()) {
        return Err(Error::domain("the shift space must lie in the base field"));
    }
    if v.dim() == 0 {
        return Err(Error::domain("shift subgroups need a nonzero space V"));
    }
    Ok(())
}

/// A monic `f_H ∈ K[x]` whose eigengroup over `K` is exactly `H`.
pub fn inverse_eigengroup(spec: &SubgroupSpec, k: &FieldRef) -> Result<Poly> {
    let x = Poly::x(k);
    match spec {
        SubgroupSpec::Trivial => {
            let x1 = Poly::linear(k, k.from_int(-1));
            Ok(&x * &x1.pow(2))
        }
        SubgroupSpec::Cyclic { n, nu } => {
            if *n < 2 {
                return Err(Error::domain("cyclic subgroups need n ≥ 2"));
            }
            k.primitive_root_of_unity(*n)?;
            Ok(&Poly::linear(k, *nu).pow(*n) - &Poly::one(k))
        }
        SubgroupSpec::ShiftOffImage { v, nu } => {
            check_space(k, v)?;
            let base = f_v(v, *nu);
            let image: BTreeSet<Fq> = k.elements().map(|a| base.eval(a)).collect();
            let rho = k
                .elements()
                .find(|a| !image.contains(a))
                .ok_or_else(|| Error::domain("f_V is onto K, so no ρ off the image exists"))?;
            Ok(&base - &Poly::constant(k, rho))
        }
        SubgroupSpec::ShiftDoubleCoset { v, nu } => {
            check_space(k, v)?;
            if v.contains(*nu) {
                return Err(Error::domain("the double-coset witness needs ν ∉ V"));
            }
            Ok(&f_v(v, k.zero()) * &f_v(v, *nu).pow(2))
        }
        SubgroupSpec::ShiftCyclic { v, n, nu } => {
            check_space(k, v)?;
            let e = multiplier_field(v)?;
            let top = (k.characteristic() as u64).pow(e) - 1;
            if *n == 0 || top % n != 0 {
                return Err(Error::domain(format!("n = {n} must divide p^e − 1 = {top}")));
            }
            let base = f_v(v, *nu);
            if *n == top {
                Ok(base)
            } else {
                Ok(&base.pow(*n) + &Poly::one(k))
            }
        }
        SubgroupSpec::Torus { nu } => Ok(Poly::linear(k, *nu)),
        SubgroupSpec::Full => {
            let q = k.size() as usize;
            Ok(&Poly::monomial(k, k.one(), q) - &x)
        }
    }
}
