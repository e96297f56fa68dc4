//! Normal-form arithmetic in `Λ(f) = K[x][y; δ]`, `δ = f·d/dx`, and its centre.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldRef, Fq};
use crate::poly::{same_field, Poly};

/// `C(n, k) mod p` by Lucas' theorem.
pub fn binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut result = 1u64;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        let mut c = 1u64;
        for j in 0..ki {
            c = c * (ni - j) % p;
        }
        for j in 1..=ki {
            c = c * inv_mod(j % p, p) % p;
        }
        result = result * c % p;
        n /= p;
        k /= p;
    }
    result
}

fn inv_mod(a: u64, p: u64) -> u64 {
    (1..p).find(|&b| a * b % p == 1).expect("invertible residue")
}

/// `Σ a_i(x) y^i`, coefficients on the left of the `y`-powers.
#[derive(Clone)]
pub struct OreElement {
    field: FieldRef,
    terms: Vec<Poly>,
}

impl PartialEq for OreElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.terms == other.terms
    }
}

impl Eq for OreElement {}

impl fmt::Debug for OreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OreElement({self})")
    }
}

impl OreElement {
    pub fn from_terms(field: &FieldRef, terms: Vec<Poly>) -> Self {
        let mut e = OreElement { field: field.clone(), terms };
        while e.terms.last().is_some_and(|t| t.is_zero()) {
            e.terms.pop();
        }
        e
    }

    pub fn zero(field: &FieldRef) -> Self {
        OreElement { field: field.clone(), terms: Vec::new() }
    }

    pub fn from_poly(a: &Poly) -> Self {
        Self::from_terms(a.field(), vec![a.clone()])
    }

    /// `a(x) · y^i`.
    pub fn term(a: &Poly, i: usize) -> Self {
        let mut terms = vec![Poly::zero(a.field()); i];
        terms.push(a.clone());
        Self::from_terms(a.field(), terms)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn terms(&self) -> &[Poly] {
        &self.terms
    }

    /// Coefficient of `y^i`.
    pub fn coeff(&self, i: usize) -> Poly {
        self.terms.get(i).cloned().unwrap_or_else(|| Poly::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in `y`; `None` for zero.
    pub fn y_degree(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    pub fn add(&self, other: &OreElement) -> OreElement {
        let n = self.terms.len().max(other.terms.len());
        Self::from_terms(&self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &OreElement) -> OreElement {
        let n = self.terms.len().max(other.terms.len());
        Self::from_terms(&self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn neg(&self) -> OreElement {
        Self::from_terms(&self.field, self.terms.iter().map(|t| -t).collect())
    }

    pub fn scale(&self, c: Fq) -> OreElement {
        Self::from_terms(&self.field, self.terms.iter().map(|t| t.scale(c)).collect())
    }

    /// Left multiplication by a polynomial in `x` (no rewriting needed).
    pub fn left_mul_poly(&self, a: &Poly) -> OreElement {
        Self::from_terms(&self.field, self.terms.iter().map(|t| a * t).collect())
    }
}

impl fmt::Display for OreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, a) in self.terms.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if i == 0 {
                parts.push(a.to_string());
                continue;
            }
            let ypow = if i == 1 { "y".to_string() } else { format!("y^{i}") };
            let single = a.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            parts.push(if *a == Poly::one(&self.field) {
                ypow
            } else if single {
                format!("{a}*{ypow}")
            } else {
                format!("({a})*{ypow}")
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The algebra `Λ(f)`.
#[derive(Clone, Debug)]
pub struct OreAlgebra {
    f: Poly,
}

/// Generators `z1 = x^p`, `z2 = y^p − c(x)·y` of the centre, with `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentreGens {
    pub z1: OreElement,
    pub z2: OreElement,
    pub c: Poly,
}

/// Coordinates of an element over the centre: for each `(i, j)` with
/// `0 ≤ i, j < p`, a polynomial in `(z1, z2)` stored as a map from
/// exponent pairs to coefficients.
pub type CentreCoordinates = BTreeMap<(usize, usize), BTreeMap<(usize, usize), Fq>>;

impl OreAlgebra {
    /// `f` must be monic, or zero for the commutative case.
    pub fn new(f: Poly) -> Result<Self> {
        if !f.is_zero() && !f.is_monic() {
            return Err(Error::domain(format!("the defining polynomial {f} must be monic")));
        }
        Ok(OreAlgebra { f })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn field(&self) -> &FieldRef {
        self.f.field()
    }

    pub fn characteristic(&self) -> usize {
        self.field().characteristic() as usize
    }

    pub fn x(&self) -> OreElement {
        OreElement::from_poly(&Poly::x(self.field()))
    }

    pub fn y(&self) -> OreElement {
        OreElement::term(&Poly::one(self.field()), 1)
    }

    pub fn one(&self) -> OreElement {
        OreElement::from_poly(&Poly::one(self.field()))
    }

    pub fn zero(&self) -> OreElement {
        OreElement::zero(self.field())
    }

    /// `δ(g) = f·g′`.
    pub fn delta(&self, g: &Poly) -> Poly {
        &self.f * &g.derivative()
    }

    /// `δ^k(g)`.
    pub fn delta_power(&self, g: &Poly, k: usize) -> Poly {
        (0..k).fold(g.clone(), |acc, _| self.delta(&acc))
    }

    fn check(&self, a: &OreElement) -> Result<()> {
        if same_field(self.field(), a.field()) {
            Ok(())
        } else {
            Err(Error::domain("element belongs to an algebra over a different field"))
        }
    }

    /// Product in normal form, using `y^i·b = Σ_k C(i,k) δ^k(b) y^{i−k}`.
    pub fn mul(&self, a: &OreElement, b: &OreElement) -> OreElement {
        assert!(self.check(a).is_ok() && self.check(b).is_ok(), "mismatched algebras");
        let field = self.field();
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let p = self.characteristic() as u64;
        let da = a.terms.len() - 1;
        let db = b.terms.len() - 1;
        let mut out = vec![Poly::zero(field); da + db + 1];
        for (j, bj) in b.terms.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let mut deltas = vec![bj.clone()];
            for _ in 0..da {
                let next = self.delta(deltas.last().unwrap());
                deltas.push(next);
            }
            for (i, ai) in a.terms.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (k, dk) in deltas.iter().enumerate().take(i + 1) {
                    if dk.is_zero() {
                        continue;
                    }
                    let c = binom_mod(i as u64, k as u64, p);
                    if c == 0 {
                        continue;
                    }
                    let prod = (ai * dk).scale(field.from_int(c as i64));
                    let idx = i - k + j;
                    out[idx] = &out[idx] + &prod;
                }
            }
        }
        OreElement::from_terms(field, out)
    }

    pub fn pow(&self, a: &OreElement, e: u64) -> OreElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `ab − ba`.
    pub fn commutator(&self, a: &OreElement, b: &OreElement) -> OreElement {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Central iff it commutes with the generators `x` and `y`.
    pub fn is_central(&self, a: &OreElement) -> bool {
        self.commutator(a, &self.x()).is_zero() && self.commutator(a, &self.y()).is_zero()
    }

    /// `z1 = x^p`, `z2 = y^p − (δ^{p−2}(f))′·y`, both checked to be central.
    pub fn centre_generators(&self) -> Result<CentreGens> {
        if self.f.is_zero() {
            return Err(Error::domain("the centre is only computed for nonzero f"));
        }
        let field = self.field();
        let p = self.characteristic();
        let c = self.delta_power(&self.f, p - 2).derivative();
        let z1 = OreElement::from_poly(&Poly::monomial(field, field.one(), p));
        let z2 = OreElement::term(&Poly::one(field), p).sub(&OreElement::term(&c, 1));
        let gens = CentreGens { z1, z2, c };
        if !self.is_central(&gens.z1) || !self.is_central(&gens.z2) {
            return Err(Error::internal("centre generators failed the commutator test"));
        }
        Ok(gens)
    }

    /// Image of `a` under the algebra map `x ↦ X`, `y ↦ Y`.
    pub fn substitute(&self, a: &OreElement, x_image: &OreElement, y_image: &OreElement) -> OreElement {
        let mut acc = self.zero();
        for coeff in a.terms.iter().rev() {
            acc = self.mul(&acc, y_image);
            acc = acc.add(&self.eval_poly(coeff, x_image));
        }
        acc
    }

    /// `g(X)` by Horner's rule.
    pub fn eval_poly(&self, g: &Poly, x_image: &OreElement) -> OreElement {
        let mut acc = self.zero();
        for &c in g.coeffs().iter().rev() {
            acc = self.mul(&acc, x_image).add(&OreElement::from_poly(&Poly::constant(self.field(), c)));
        }
        acc
    }

    /// Conjugation by the normal element `f`: `x ↦ x`, `y ↦ y − f′`; the
    /// identity `f·a = ω_f(a)·f` is verified before returning.
    pub fn omega_f(&self, a: &OreElement) -> Result<OreElement> {
        if self.f.is_zero() {
            return Err(Error::domain("ω_f needs a nonzero f"));
        }
        let y_image = self.y().sub(&OreElement::from_poly(&self.f.derivative()));
        let image = self.substitute(a, &self.x(), &y_image);
        let fa = OreElement::from_poly(&self.f);
        if self.mul(&fa, a) != self.mul(&image, &fa) {
            return Err(Error::internal("f·a ≠ ω_f(a)·f"));
        }
        Ok(image)
    }

    /// Coefficients `b_j` with `a = Σ_j y^j · b_j(x)`.
    pub fn right_normal_form(&self, a: &OreElement) -> Vec<Poly> {
        let field = self.field();
        let p = self.characteristic() as u64;
        let n = a.terms.len();
        let mut out = vec![Poly::zero(field); n];
        for (i, ai) in a.terms.iter().enumerate() {
            let mut d = ai.clone();
            for k in 0..=i {
                let c = binom_mod(i as u64, k as u64, p);
                if c != 0 && !d.is_zero() {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let scaled = d.scale(field.from_int(sign * c as i64));
                    out[i - k] = &out[i - k] + &scaled;
                }
                d = self.delta(&d);
            }
        }
        while out.last().is_some_and(|t| t.is_zero()) {
            out.pop();
        }
        out
    }

    /// Writes `a = Σ_{i,j<p} c_{ij}(z1, z2)·x^i y^j`.
    pub fn centre_decompose(&self, a: &OreElement) -> Result<CentreCoordinates> {
        let gens = self.centre_generators()?;
        let field = self.field();
        let p = self.characteristic();
        let mut rest = a.clone();
        let mut coords: CentreCoordinates = BTreeMap::new();
        let mut z2_powers = vec![self.one()];
        while let Some(d) = rest.y_degree() {
            let (qd, j) = (d / p, d % p);
            while z2_powers.len() <= qd {
                let next = self.mul(z2_powers.last().unwrap(), &gens.z2);
                z2_powers.push(next);
            }
            let base = self.mul(&z2_powers[qd], &OreElement::term(&Poly::one(field), j));
            let lead = rest.coeff(d);
            let mut peeled = self.zero();
            for (idx, &c) in lead.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, a_exp) = (idx % p, idx / p);
                *coords.entry((i, j)).or_default().entry((a_exp, qd)).or_insert(field.zero()) = c;
                peeled = peeled.add(&base.left_mul_poly(&Poly::monomial(field, c, idx)));
            }
            let next = rest.sub(&peeled);
            if next.y_degree() >= Some(d) {
                return Err(Error::internal("centre decomposition failed to lower the y-degree"));
            }
            rest = next;
        }
        coords.retain(|_, m| {
            m.retain(|_, c| !c.is_zero());
            !m.is_empty()
        });
        Ok(coords)
    }

    /// Inverse of [`centre_decompose`](Self::centre_decompose).
    pub fn centre_recompose(&self, coords: &CentreCoordinates) -> Result<OreElement> {
        let gens = self.centre_generators()?;
        let field = self.field();
        let mut acc = self.zero();
        for (&(i, j), poly) in coords {
            for (&(a_exp, b_exp), &c) in poly {
                let z = self.mul(&self.pow(&gens.z1, a_exp as u64), &self.pow(&gens.z2, b_exp as u64));
                let basis = OreElement::term(&Poly::monomial(field, c, i), j);
                acc = acc.add(&self.mul(&z, &basis));
            }
        }
        Ok(acc)
    }

    pub fn parse(&self, text: &str) -> Result<OreElement> {
        crate::expr::parse_ore(self, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn algebra(p: u32, f: &[i64]) -> OreAlgebra {
        let k = Field::new(p, 1).unwrap();
        OreAlgebra::new(Poly::from_ints(&k, f)).unwrap()
    }

    #[test]
    fn defining_relation() {
        let a = algebra(5, &[1, 2, 1]);
        let yx = a.mul(&a.y(), &a.x());
        let expect = a.mul(&a.x(), &a.y()).add(&OreElement::from_poly(a.f()));
        assert_eq!(yx, expect);
        let one = a.one();
        assert_eq!(a.mul(&one, &yx), yx);
    }

    #[test]
    fn char_two_square() {
        let a = algebra(2, &[0, 0, 1]);
        let x2 = OreElement::from_poly(a.f());
        assert_eq!(a.mul(&a.y(), &x2), a.mul(&x2, &a.y()));
    }

    #[test]
    fn delta_powers() {
        let a = algebra(3, &[0, 0, 1]);
        let k = a.field().clone();
        let x = Poly::x(&k);
        assert_eq!(a.delta_power(&x, 0), x);
        assert_eq!(a.delta(&x), *a.f());
        assert_eq!(a.delta(a.f()), Poly::from_ints(&k, &[0, 0, 0, 2]));
        assert!(a.delta_power(&x, 3).is_zero());
    }

    #[test]
    fn centre_examples() {
        let weyl = algebra(5, &[1]);
        let g = weyl.centre_generators().unwrap();
        assert!(g.c.is_zero());
        let a = algebra(2, &[0, 0, 1]);
        assert!(a.centre_generators().unwrap().c.is_zero());
        let a = algebra(3, &[0, 1]);
        let g = a.centre_generators().unwrap();
        assert_eq!(g.c, Poly::one(a.field()));
        assert_eq!(g.z2.to_string(), "y^3 + 2*y");
        assert!(a.is_central(&a.one()));
        assert!(!a.is_central(&a.y()));
    }

    #[test]
    fn omega_examples() {
        let a = algebra(2, &[0, 0, 1]);
        assert_eq!(a.omega_f(&a.x()).unwrap(), a.x());
        assert_eq!(a.omega_f(&a.one()).unwrap(), a.one());
        assert_eq!(a.omega_f(&a.y()).unwrap(), a.y());
    }

    #[test]
    fn printing() {
        let a = algebra(5, &[1, 0, 1]);
        let k = a.field().clone();
        let e = OreElement::from_terms(
            &k,
            vec![Poly::from_ints(&k, &[3]), Poly::x(&k), Poly::from_ints(&k, &[1, 0, 1])],
        );
        assert_eq!(e.to_string(), "(x^2 + 1)*y^2 + x*y + 3");
        assert_eq!(a.parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn lucas() {
        assert_eq!(binom_mod(4, 2, 3), 0);
        assert_eq!(binom_mod(5, 2, 7), 3);
        assert_eq!(binom_mod(3, 1, 2), 1);
    }
}
