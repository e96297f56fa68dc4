//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{gcd, lcm, FieldRef, FieldTower, Fq};
use crate::space::FpSpace;

/// Polynomial with coefficients low degree first; never has a zero leading
/// coefficient.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<Fq>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

pub(crate) fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
    std::sync::Arc::ptr_eq(a, b) || **a == **b
}

fn check_field(a: &FieldRef, b: &FieldRef) {
    assert!(same_field(a, b), "polynomials over different fields: {} vs {}", a.spec(), b.spec());
}

impl Poly {
    pub fn from_coeffs(field: &FieldRef, coeffs: Vec<Fq>) -> Self {
        let mut p = Poly { field: field.clone(), coeffs };
        p.normalize();
        p
    }

    /// Coefficients given as prime-field integers, low degree first.
    pub fn from_ints(field: &FieldRef, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FieldRef) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &FieldRef, c: Fq) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn x(field: &FieldRef) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &FieldRef, c: Fq, deg: usize) -> Self {
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `x - a`.
    pub fn linear(field: &FieldRef, a: Fq) -> Self {
        Self::from_coeffs(field, vec![field.neg(a), field.one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Fq {
        self.coeffs.last().copied().unwrap_or(self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == self.field.one()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lead()))
    }

    pub fn scale(&self, c: Fq) -> Self {
        let k = &self.field;
        Self::from_coeffs(k, self.coeffs.iter().map(|&a| k.mul(a, c)).collect())
    }

    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        check_field(&self.field, &divisor.field);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let k = &self.field;
        let db = divisor.deg();
        let inv = k.inv(divisor.lead());
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (Poly::zero(k), self.clone());
        }
        let mut quot = vec![k.zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = k.mul(rem[i + db], inv);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(rem[i + j], k.mul(c, b));
            }
        }
        rem.truncate(db);
        (Self::from_coeffs(k, quot), Self::from_coeffs(k, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    /// Quotient when `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self^e mod modulus`.
    pub fn powmod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut result = Poly::one(&self.field).rem(modulus);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus);
            }
        }
        result
    }

    pub fn derivative(&self) -> Poly {
        let k = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| k.mul(c, k.from_int(i as i64)))
            .collect();
        Self::from_coeffs(k, coeffs)
    }

    pub fn eval(&self, a: Fq) -> Fq {
        let k = &self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, &c| k.add(k.mul(acc, a), c))
    }

    /// `self(h(x))`.
    pub fn compose(&self, h: &Poly) -> Poly {
        check_field(&self.field, &h.field);
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * h) + &Poly::constant(&self.field, c);
        }
        acc
    }

    /// `self(λx + μ)`.
    pub fn affine_substitute(&self, lambda: Fq, mu: Fq) -> Poly {
        let k = &self.field;
        self.compose(&Poly::from_coeffs(k, vec![mu, lambda]))
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: Fq) -> Poly {
        self.affine_substitute(self.field.one(), a)
    }

    /// Largest `i` with `x^i | self` (0 for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// `self / x^i`, dropping lower terms.
    pub fn shift_down(&self, i: usize) -> Poly {
        Self::from_coeffs(&self.field, self.coeffs.iter().skip(i).copied().collect())
    }

    /// Coefficients mapped through the tower embedding.
    pub fn embed(&self, tower: &FieldTower) -> Poly {
        check_field(&self.field, tower.base());
        Self::from_coeffs(tower.ext(), self.coeffs.iter().map(|&c| tower.embed(c)).collect())
    }

    /// Inverse of [`embed`](Self::embed) when every coefficient lies in the base.
    pub fn restrict(&self, tower: &FieldTower) -> Option<Poly> {
        check_field(&self.field, tower.ext());
        let coeffs = self.coeffs.iter().map(|&c| tower.restrict(c)).collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(tower.base(), coeffs))
    }

    /// Whether `self` and `other` differ by a nonzero scalar factor.
    pub fn is_proportional(&self, other: &Poly) -> Option<Fq> {
        if self.is_zero() || other.is_zero() || self.degree() != other.degree() {
            return None;
        }
        let c = self.field.div(self.lead(), other.lead());
        (other.scale(c) == *self).then_some(c)
    }

    /// `gcd{i ≥ 1 : a_i ≠ 0}`; 0 when `self` is constant.
    pub fn index_gcd(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .fold(0, |g, (i, _)| gcd(g, i as u64))
    }

    /// The part of [`index_gcd`](Self::index_gcd) prime to the characteristic.
    pub fn gcd_p(&self) -> u64 {
        let mut g = self.index_gcd();
        let p = self.field.characteristic() as u64;
        while g != 0 && g % p == 0 {
            g /= p;
        }
        g
    }

    /// Distinct roots lying in the coefficient field, ascending.
    pub fn roots_in_field(&self) -> Vec<Fq> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        self.field.elements().filter(|&a| self.eval(a).is_zero()).collect()
    }

    /// Roots in the coefficient field with multiplicities, ascending.
    pub fn roots_with_multiplicity_in_field(&self) -> Vec<(Fq, usize)> {
        self.roots_in_field()
            .into_iter()
            .map(|r| {
                let lin = Poly::linear(&self.field, r);
                let mut rest = self.clone();
                let mut mult = 0;
                while let Some(q) = rest.div_exact(&lin) {
                    rest = q;
                    mult += 1;
                }
                (r, mult)
            })
            .collect()
    }

    /// Degrees of the irreducible factors over the coefficient field,
    /// found by distinct-degree splitting with `gcd(f, x^{q^k} - x)`.
    pub fn factor_degrees(&self) -> Vec<usize> {
        assert!(!self.is_zero(), "factor degrees of the zero polynomial");
        let k = &self.field;
        let q = k.size() as u64;
        let x = Poly::x(k);
        let mut rest = self.monic();
        let mut frob = x.clone();
        let mut degrees = Vec::new();
        let mut d = 0;
        while rest.deg() > 0 {
            d += 1;
            frob = frob.powmod(q, &rest);
            let g = rest.gcd(&(&frob - &x));
            if g.deg() > 0 {
                degrees.push(d);
                loop {
                    let common = rest.gcd(&g);
                    if common.deg() == 0 {
                        break;
                    }
                    rest = rest.div_exact(&common).expect("gcd divides");
                }
                if rest.deg() > 0 {
                    frob = frob.rem(&rest);
                }
            }
        }
        degrees
    }

    /// Irreducibility over the coefficient field.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        let k = &self.field;
        let q = k.size() as u64;
        let x = Poly::x(k);
        let f = self.monic();
        let mut frob = x.clone();
        for _ in 1..=n / 2 {
            frob = frob.powmod(q, &f);
            if f.gcd(&(&frob - &x)).deg() > 0 {
                return false;
            }
        }
        true
    }

    /// Degree over `F_p` of the smallest extension of the coefficient field
    /// in which `self` splits.
    pub fn splitting_degree(&self) -> u32 {
        let l = self.factor_degrees().into_iter().fold(1u64, |acc, d| lcm(acc, d as u64));
        self.field.degree() * l as u32
    }

    /// Unique `g` with `self = g(h)`, by repeatedly peeling off the top
    /// power of `h`.
    pub fn decompose_through(&self, h: &Poly) -> Option<Poly> {
        check_field(&self.field, &h.field);
        let k = &self.field;
        let dh = h.degree().filter(|&d| d >= 1)?;
        let inv = k.inv(h.lead());
        let mut powers = vec![Poly::one(k)];
        let mut rest = self.clone();
        let mut g = vec![k.zero(); self.deg() / dh + 1];
        while !rest.is_zero() {
            let d = rest.deg();
            if d % dh != 0 {
                return None;
            }
            let j = d / dh;
            while powers.len() <= j {
                let next = powers.last().unwrap() * h;
                powers.push(next);
            }
            let c = k.mul(rest.lead(), k.pow(inv, j as u64));
            g[j] = c;
            rest = &rest - &powers[j].scale(c);
        }
        Some(Self::from_coeffs(k, g))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with("x"))
    }
}

impl Poly {
    /// Text form in descending degree using `var` as the variable name.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let k = &self.field;
        if self.deg() == 0 && k.as_prime(self.coeffs[0]).is_none() {
            // a bare "[c0,c1]" would read back as a coefficient vector
            return format!("({})", k.format(self.coeffs[0]));
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coeff = k.format_short(c);
            terms.push(if i == 0 {
                coeff
            } else if c == k.one() {
                mono
            } else {
                format!("{coeff}*{mono}")
            });
        }
        terms.join(" + ")
    }

    /// Coefficient-vector form `[a0,a1,…]`.
    pub fn format_vector(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.field.format_short(c)).collect();
        format!("[{}]", parts.join(","))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        check_field(&self.field, &other.field);
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| k.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(k, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        check_field(&self.field, &other.field);
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| k.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(k, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let k = &self.field;
        Poly::from_coeffs(k, self.coeffs.iter().map(|&c| k.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        check_field(&self.field, &other.field);
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(k);
        }
        let mut coeffs = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = k.add(coeffs[i + j], k.mul(a, b));
            }
        }
        Poly::from_coeffs(k, coeffs)
    }
}

/// Roots of a polynomial over `K`, computed in a splitting field `L ⊇ K`.
#[derive(Clone, Debug)]
pub struct Split {
    pub tower: FieldTower,
    /// The input with coefficients embedded in `L`.
    pub poly: Poly,
    /// Distinct roots in `L` (ascending) with multiplicities.
    pub roots: Vec<(Fq, usize)>,
}

impl Split {
    pub fn ext(&self) -> &FieldRef {
        self.tower.ext()
    }

    pub fn distinct_roots(&self) -> Vec<Fq> {
        self.roots.iter().map(|&(r, _)| r).collect()
    }

    pub fn multiplicity(&self, a: Fq) -> usize {
        self.roots.iter().find(|&&(r, _)| r == a).map_or(0, |&(_, m)| m)
    }
}

/// Splits `f` over the smallest `L = F_{p^M}` containing its roots.
pub fn roots_with_multiplicity(f: &Poly) -> Result<Split> {
    split_in(f, 1)
}

/// Like [`roots_with_multiplicity`] but with `M` also divisible by `extra`
/// times the base degree, so that `L` contains `F_{p^{k·extra}}`.
pub fn split_in(f: &Poly, extra: u32) -> Result<Split> {
    if f.is_zero() {
        return Err(Error::domain("the zero polynomial has no root multiset"));
    }
    let k = f.field();
    let degree = lcm(f.splitting_degree() as u64, (k.degree() * extra) as u64) as u32;
    let tower = FieldTower::with_degree(k.clone(), degree)?;
    let poly = f.embed(&tower);
    let roots = poly.roots_with_multiplicity_in_field();
    let total: usize = roots.iter().map(|&(_, m)| m).sum();
    if total != poly.deg() {
        return Err(Error::internal(format!(
            "{f} should split over {} but only {total} roots were found",
            tower.ext().spec()
        )));
    }
    Ok(Split { tower, poly, roots })
}

/// `f = f1^{p^s}` with `gcd(f) = p^s · gcd_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentDecomp {
    pub s: u32,
    pub gcd_p: u64,
    pub f1: Poly,
}

pub fn exponent_decomp(f: &Poly) -> Result<ExponentDecomp> {
    if !f.is_monic() || f.is_constant() {
        return Err(Error::domain(format!("exponent decomposition needs a monic nonscalar polynomial, got {f}")));
    }
    let k = f.field();
    let p = k.characteristic() as u64;
    let mut g = f.index_gcd();
    let mut s = 0;
    while g % p == 0 {
        g /= p;
        s += 1;
    }
    let step = p.pow(s) as usize;
    let coeffs = (0..=f.deg() / step)
        .map(|i| {
            let mut c = f.coeff(i * step);
            for _ in 0..s {
                c = k.pth_root(c);
            }
            c
        })
        .collect();
    let f1 = Poly::from_coeffs(k, coeffs);
    debug_assert_eq!(&f1.pow(step as u64), f);
    Ok(ExponentDecomp { s, gcd_p: g, f1 })
}

/// `∏_{v ∈ V} (x − ν − v)`.
pub fn f_v(space: &FpSpace, nu: Fq) -> Poly {
    let k = space.field();
    space
        .elements()
        .into_iter()
        .fold(Poly::one(k), |acc, v| &acc * &Poly::linear(k, k.add(nu, v)))
}

/// Largest `e` with `F_{p^e} · V ⊆ V`; `V` must be nonzero.
pub fn multiplier_field(space: &FpSpace) -> Result<u32> {
    if space.dim() == 0 {
        return Err(Error::domain("the multiplier field of the zero space is undefined"));
    }
    let k = space.field();
    let m = k.degree();
    let best = (1..=m)
        .filter(|e| m % e == 0 && space.dim() % (*e as usize) == 0)
        .filter(|&e| {
            let gen = k.subfield_generator(e);
            space.basis().iter().all(|&b| space.contains(k.mul(gen, b)))
        })
        .max()
        .unwrap_or(1);
    Ok(best)
}

/// Monic polynomials of a given degree over a field, in a fixed order.
pub fn monic_polys(field: &FieldRef, degree: usize) -> Vec<Poly> {
    let q = field.size() as u64;
    let count = q.pow(degree as u32);
    (0..count)
        .map(|code| {
            let mut c = code;
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(field.from_index((c % q) as u32));
                c /= q;
            }
            coeffs.push(field.one());
            Poly::from_coeffs(field, coeffs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn roots_listed_with_multiplicity() {
        let k = Field::new(5, 1).unwrap();
        let a = Poly::linear(&k, k.from_int(1)).pow(2);
        let b = Poly::linear(&k, k.from_int(2)).pow(3);
        let split = roots_with_multiplicity(&(&a * &b)).unwrap();
        assert_eq!(split.tower.ext().degree(), 1);
        assert_eq!(split.roots, vec![(k.from_int(1), 2), (k.from_int(2), 3)]);
    }

    #[test]
    fn roots_of_x() {
        let k = Field::new(7, 1).unwrap();
        let split = roots_with_multiplicity(&Poly::x(&k)).unwrap();
        assert_eq!(split.roots, vec![(k.zero(), 1)]);
    }

    #[test]
    fn quadratic_over_f3_splits_in_f9() {
        let k = Field::new(3, 1).unwrap();
        let f = Poly::from_ints(&k, &[1, 0, 1]);
        let split = roots_with_multiplicity(&f).unwrap();
        assert_eq!(split.tower.ext().degree(), 2);
        assert_eq!(split.roots.len(), 2);
        assert!(split.roots.iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn exponent_decomposition_examples() {
        let k = Field::new(3, 1).unwrap();
        let d = exponent_decomp(&Poly::monomial(&k, k.one(), 6)).unwrap();
        assert_eq!((d.s, d.gcd_p), (1, 2));
        assert_eq!(d.f1, Poly::monomial(&k, k.one(), 2));
        let k2 = Field::new(2, 1).unwrap();
        let d = exponent_decomp(&Poly::from_ints(&k2, &[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(d.s, 1);
        assert_eq!(d.f1, Poly::from_ints(&k2, &[0, 1, 1]));
        let f = Poly::from_ints(&k, &[1, 1, 0, 1]);
        let d = exponent_decomp(&f).unwrap();
        assert_eq!((d.s, d.f1), (0, f));
        assert!(exponent_decomp(&Poly::one(&k)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let k = Field::new(3, 1).unwrap();
        let h = Poly::from_ints(&k, &[0, -1, 0, 1]);
        assert_eq!(h.decompose_through(&h), Some(Poly::x(&k)));
        let f = &h.pow(2) + &Poly::one(&k);
        assert_eq!(f.decompose_through(&h), Some(Poly::from_ints(&k, &[1, 0, 1])));
        let f = Poly::from_ints(&k, &[0, 1, 1]);
        assert_eq!(f.decompose_through(&Poly::from_ints(&k, &[0, 0, 1])), None);
    }

    #[test]
    fn f_v_examples() {
        let k = Field::new(3, 2).unwrap();
        let mu = k.generator();
        let line = FpSpace::span(&k, &[mu]);
        let expect = &Poly::monomial(&k, k.one(), 3) - &Poly::monomial(&k, k.pow(mu, 2), 1);
        assert_eq!(f_v(&line, k.zero()), expect);
        let whole = FpSpace::span(&k, &[k.one(), k.generator()]);
        let expect = &Poly::monomial(&k, k.one(), 9) - &Poly::monomial(&k, k.pow(k.one(), 8), 1);
        assert_eq!(f_v(&whole, k.zero()), expect);
        let nu = k.from_int(2);
        assert_eq!(f_v(&FpSpace::zero(&k), nu), Poly::linear(&k, nu));
    }

    #[test]
    fn multiplier_examples() {
        let k = Field::new(3, 2).unwrap();
        assert_eq!(multiplier_field(&FpSpace::span(&k, &[k.one()])).unwrap(), 1);
        assert_eq!(multiplier_field(&FpSpace::span(&k, &[k.one(), k.generator()])).unwrap(), 2);
        let k8 = Field::new(2, 3).unwrap();
        assert_eq!(multiplier_field(&FpSpace::span(&k8, &[k8.one(), k8.generator()])).unwrap(), 1);
        assert!(multiplier_field(&FpSpace::zero(&k)).is_err());
    }

    #[test]
    fn irreducibility() {
        let k = Field::new(3, 1).unwrap();
        assert!(Poly::from_ints(&k, &[1, 0, 1]).is_irreducible());
        assert!(!Poly::from_ints(&k, &[2, 0, 1]).is_irreducible());
        assert_eq!(Poly::from_ints(&k, &[1, 0, 1]).factor_degrees(), vec![2]);
    }
}
