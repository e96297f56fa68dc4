//! Finite fields `F_{p^m}` and two-level towers `K ⊆ L`.
//!
//! Elements are small integer handles ([`Fq`]) interpreted relative to a
//! [`Field`]. The handle encodes the coordinate vector `(c_0, …, c_{m-1})`
//! with respect to the power basis `1, t, …, t^{m-1}` so that the derived
//! integer order on handles is the lexicographic order on coordinate
//! vectors (`c_0` compared first). Multiplication goes through log/exp
//! tables built once per field.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Size limits applied when constructing fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest admissible characteristic.
    pub max_char: u32,
    /// Largest admissible field size `p^m`.
    pub max_size: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_char: 13, max_size: 1 << 20 }
    }
}

/// Element handle of some [`Field`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(u32);

impl Fq {
    /// Raw handle; `0` is always the zero element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub type FieldRef = Arc<Field>;

/// The field `F_p[t]/(modulus)` with `deg modulus = m`.
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    weights: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    caps: Caps,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Positive divisors, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Smallest `m ≥ 1` with `n | p^m - 1`, i.e. the degree of the smallest
/// field of characteristic `p` holding a primitive `n`-th root of unity.
pub fn min_field_of_unity(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::domain("order of a root of unity must be positive"));
    }
    if n % p == 0 {
        return Err(Error::domain(format!(
            "no primitive {n}-th root of unity exists in characteristic {p}"
        )));
    }
    let mut m = 1;
    let mut power = p % n;
    while power % n != 1 % n {
        power = power * p % n;
        m += 1;
    }
    Ok(m)
}

// Dense F_p polynomials on u32 residues, low degree first, used only while
// choosing and checking moduli.
fn fp_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    let inv_lead = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * inv_lead % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Irreducibility of a monic polynomial over `F_p` by trial division
/// against every monic polynomial of degree at most `deg/2`.
pub fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut c = code;
            for gi in g.iter_mut().take(d) {
                *gi = (c % p as u64) as u32;
                c /= p as u64;
            }
            g[d] = 1;
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `m` over `F_p`, ordering candidates
/// by the integer `Σ c_i p^i` of their lower coefficients.
pub fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for code in 0..count {
        let mut f = vec![0u32; m as usize + 1];
        let mut c = code;
        for fi in f.iter_mut().take(m as usize) {
            *fi = (c % p as u64) as u32;
            c /= p as u64;
        }
        f[m as usize] = 1;
        if fp_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// `F_{p^m}` with the default modulus and default caps.
    pub fn new(p: u32, m: u32) -> Result<FieldRef> {
        Self::with_caps(p, m, Caps::default())
    }

    pub fn with_caps(p: u32, m: u32, caps: Caps) -> Result<FieldRef> {
        Self::check_size(p, m, caps)?;
        Self::build(p, default_modulus(p, m), caps)
    }

    /// Field defined by an explicit monic modulus (coefficients low first).
    pub fn with_modulus(p: u32, modulus: Vec<u32>, caps: Caps) -> Result<FieldRef> {
        if modulus.len() < 2 {
            return Err(Error::domain("modulus must have degree at least 1"));
        }
        let m = (modulus.len() - 1) as u32;
        Self::check_size(p, m, caps)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::domain(format!("modulus coefficients must lie in 0..{p}")));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::domain("modulus must be monic"));
        }
        if !fp_is_irreducible(&modulus, p) {
            return Err(Error::domain("modulus is not irreducible over the prime field"));
        }
        Self::build(p, modulus, caps)
    }

    fn check_size(p: u32, m: u32, caps: Caps) -> Result<()> {
        if !is_prime(p as u64) {
            return Err(Error::domain(format!("characteristic {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::domain("extension degree must be at least 1"));
        }
        if p > caps.max_char {
            return Err(Error::domain(format!(
                "characteristic {p} exceeds the cap {}",
                caps.max_char
            )));
        }
        let size = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        let cap = caps.max_size.min(u32::MAX as u64);
        if size > cap {
            return Err(Error::FieldTooLarge { size, cap });
        }
        Ok(())
    }

    fn build(p: u32, modulus: Vec<u32>, caps: Caps) -> Result<FieldRef> {
        let m = (modulus.len() - 1) as u32;
        let q = p.pow(m);
        let weights: Vec<u32> = (0..m).map(|i| p.pow(m - 1 - i)).collect();
        let mut field = Field { p, m, q, modulus, weights, exp: Vec::new(), log: Vec::new(), caps };
        field.build_tables();
        Ok(Arc::new(field))
    }

    fn mul_coords(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let m = self.m as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * m];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let sub = c * self.modulus[i] as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
            }
        }
        prod.truncate(m);
        prod.into_iter().map(|c| c as u32).collect()
    }

    fn slow_pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut one = vec![0u32; self.m as usize];
        one[0] = 1;
        let mut r = one;
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_coords(&r, &base);
            }
            base = self.mul_coords(&base, &base);
            e >>= 1;
        }
        r
    }

    fn build_tables(&mut self) {
        let q = self.q as u64;
        let order = q - 1;
        let primes = prime_factors(order);
        let m = self.m as usize;
        let mut one = vec![0u32; m];
        one[0] = 1;
        let is_primitive = |field: &Field, g: &[u32]| {
            g.iter().any(|&c| c != 0)
                && primes.iter().all(|&r| field.slow_pow(g, order / r) != one)
        };
        // Prefer generators of degree at most one: they keep table building linear.
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        for c1 in [1u32, 0] {
            for c0 in 0..self.p {
                if m == 1 && c1 == 1 {
                    continue;
                }
                let mut g = vec![0u32; m];
                g[0] = c0;
                if m > 1 {
                    g[1] = c1;
                }
                candidates.push(g);
            }
        }
        let mut generator = candidates.into_iter().find(|g| is_primitive(self, g));
        if generator.is_none() {
            generator = (1..self.q).map(|v| self.coords(Fq(v))).find(|g| is_primitive(self, g));
        }
        let g = generator.expect("finite fields have cyclic multiplicative groups");
        let n = order as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![u32::MAX; self.q as usize];
        let mut cur = one;
        for i in 0..n {
            let v = self.encode(&cur);
            exp[i] = v;
            exp[i + n] = v;
            log[v as usize] = i as u32;
            cur = self.mul_coords(&cur, &g);
        }
        self.exp = exp;
        self.log = log;
    }

    fn encode(&self, coords: &[u32]) -> u32 {
        coords.iter().zip(&self.weights).map(|(&c, &w)| c * w).sum()
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Defining polynomial over `F_p`, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Canonical text form, e.g. `GF(3^2) mod=1,0,1`.
    pub fn spec(&self) -> String {
        if self.m == 1 {
            format!("GF({})", self.p)
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            format!("GF({}^{}) mod={}", self.p, self.m, coeffs.join(","))
        }
    }

    /// `F_{p^M}` sharing this field's characteristic and caps.
    pub fn extension_of_degree(&self, degree: u32) -> Result<FieldRef> {
        Field::with_caps(self.p, degree, self.caps)
    }

    pub fn zero(&self) -> Fq {
        Fq(0)
    }

    pub fn one(&self) -> Fq {
        Fq(self.weights[0])
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fq {
        let r = n.rem_euclid(self.p as i64) as u32;
        Fq(r * self.weights[0])
    }

    /// The class `t` of the variable, the root of the modulus.
    pub fn generator(&self) -> Fq {
        if self.m == 1 {
            self.from_int(-(self.modulus[0] as i64))
        } else {
            Fq(self.weights[1])
        }
    }

    pub fn from_index(&self, index: u32) -> Fq {
        assert!(index < self.q, "element index out of range");
        Fq(index)
    }

    pub fn coords(&self, a: Fq) -> Vec<u32> {
        self.weights.iter().map(|&w| a.0 / w % self.p).collect()
    }

    /// Element with the given coordinates (extra trailing entries must be zero).
    pub fn from_coords(&self, coords: &[u32]) -> Result<Fq> {
        if coords.len() > self.m as usize && coords[self.m as usize..].iter().any(|&c| c % self.p != 0) {
            return Err(Error::domain(format!(
                "element has {} coordinates but the field has degree {}",
                coords.len(),
                self.m
            )));
        }
        let reduced: Vec<u32> = coords.iter().take(self.m as usize).map(|&c| c % self.p).collect();
        Ok(Fq(self.encode(&reduced)))
    }

    /// Prime-field value of an element lying in `F_p`.
    pub fn as_prime(&self, a: Fq) -> Option<u32> {
        if a.0 % self.weights[0] == 0 {
            Some(a.0 / self.weights[0])
        } else {
            None
        }
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        let p = self.p;
        let mut r = 0;
        for &w in &self.weights {
            let d = (a.0 / w % p + b.0 / w % p) % p;
            r += d * w;
        }
        Fq(r)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut r = 0;
        for &w in &self.weights {
            let d = (p - a.0 / w % p) % p;
            r += d * w;
        }
        Fq(r)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq(0);
        }
        let i = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fq(self.exp[i as usize])
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Fq) -> Fq {
        assert!(a.0 != 0, "inverse of zero");
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Fq(self.exp[((n - l) % n) as usize])
    }

    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return Fq(0);
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Fq(self.exp[(l * (e % n) % n) as usize])
    }

    /// `a^{p^k}`.
    pub fn frobenius(&self, a: Fq, k: u32) -> Fq {
        let e = (self.p as u64).pow(k % self.m);
        self.pow(a, e)
    }

    /// The unique `b` with `b^p = a`, namely `a^{p^{m-1}}`.
    pub fn pth_root(&self, a: Fq) -> Fq {
        self.frobenius(a, self.m - 1)
    }

    /// Whether `a` lies in the subfield `F_{p^k}`; requires `k | m`.
    pub fn in_subfield(&self, a: Fq, k: u32) -> bool {
        debug_assert!(self.m % k == 0, "subfield degree must divide the field degree");
        self.frobenius(a, k) == a
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fq) -> u64 {
        assert!(a.0 != 0, "order of zero");
        let n = (self.q - 1) as u64;
        n / gcd(self.log[a.0 as usize] as u64, n)
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fq {
        Fq(self.exp[if self.q == 2 { 0 } else { 1 }])
    }

    /// The primitive `n`-th root of unity `g^{(q-1)/n}` for the fixed generator `g`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Fq> {
        let order = (self.q - 1) as u64;
        if n == 0 || order % n != 0 {
            return Err(Error::domain(format!(
                "{n} does not divide {order}, so {} has no primitive {n}-th root of unity",
                self.spec()
            )));
        }
        Ok(Fq(self.exp[(order / n) as usize]))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    /// All elements of the subfield `F_{p^k}`, ascending.
    pub fn subfield_elements(&self, k: u32) -> Vec<Fq> {
        assert!(self.m % k == 0, "subfield degree must divide the field degree");
        let sub = (self.p as u64).pow(k) - 1;
        let step = (self.q as u64 - 1) / sub;
        let mut out: Vec<Fq> = (0..sub).map(|i| Fq(self.exp[(i * step) as usize])).collect();
        out.push(Fq(0));
        out.sort();
        out
    }

    /// An element generating `F_{p^k}` over `F_p`.
    pub fn subfield_generator(&self, k: u32) -> Fq {
        assert!(self.m % k == 0, "subfield degree must divide the field degree");
        let sub = (self.p as u64).pow(k) - 1;
        Fq(self.exp[((self.q as u64 - 1) / sub) as usize % (self.q as usize - 1).max(1)])
    }

    /// `[c0,c1,…]` with trailing zero coordinates dropped.
    pub fn format(&self, a: Fq) -> String {
        let mut c = self.coords(a);
        while c.len() > 1 && *c.last().unwrap() == 0 {
            c.pop();
        }
        let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Integer for prime-field elements, bracket form otherwise.
    pub fn format_short(&self, a: Fq) -> String {
        match self.as_prime(a) {
            Some(v) => v.to_string(),
            None => self.format(a),
        }
    }

    /// Parses `[c0,c1,…]` or a bare integer.
    pub fn parse_element(&self, s: &str) -> Result<Fq> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::parse(t.len(), "missing closing ']'"))?;
            let mut coords = Vec::new();
            let mut offset = 1;
            for part in inner.split(',') {
                let v: u64 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(offset, format!("invalid coordinate '{}'", part.trim())))?;
                coords.push((v % self.p as u64) as u32);
                offset += part.len() + 1;
            }
            if coords.len() > self.m as usize {
                return Err(Error::parse(0, format!("too many coordinates for {}", self.spec())));
            }
            self.from_coords(&coords)
        } else {
            let v: i64 = t.parse().map_err(|_| Error::parse(0, format!("invalid element '{t}'")))?;
            Ok(self.from_int(v))
        }
    }
}

/// Parses `GF(p)`, `GF(p^m)` or `GF(q)` with optional ` mod=c0,c1,…`.
pub fn parse_field(spec: &str, caps: Caps) -> Result<FieldRef> {
    let s = spec.trim();
    let body = s
        .strip_prefix("GF(")
        .or_else(|| s.strip_prefix("gf("))
        .ok_or_else(|| Error::parse(0, "field spec must start with 'GF('"))?;
    let close = body.find(')').ok_or_else(|| Error::parse(s.len(), "missing ')'"))?;
    let inner = &body[..close];
    let rest = body[close + 1..].trim();
    let num = |t: &str, pos: usize| -> Result<u64> {
        t.trim().parse::<u64>().map_err(|_| Error::parse(pos, format!("expected a number, found '{}'", t.trim())))
    };
    let (p, m) = match inner.split_once('^') {
        Some((a, b)) => (num(a, 3)?, num(b, 4 + a.len())?),
        None => {
            let q = num(inner, 3)?;
            let primes = prime_factors(q);
            if primes.len() != 1 {
                return Err(Error::parse(3, format!("{q} is not a prime power")));
            }
            let p = primes[0];
            let mut m = 0;
            let mut r = q;
            while r > 1 {
                r /= p;
                m += 1;
            }
            (p, m)
        }
    };
    if p > u32::MAX as u64 || m > 64 {
        return Err(Error::domain("field parameters out of range"));
    }
    if rest.is_empty() {
        return Field::with_caps(p as u32, m as u32, caps);
    }
    let list = rest
        .strip_prefix("mod=")
        .ok_or_else(|| Error::parse(s.len() - rest.len(), "expected 'mod=' after the field"))?;
    let mut modulus = Vec::new();
    for part in list.split(',') {
        let v = num(part, s.len() - list.len())?;
        modulus.push((v % p) as u32);
    }
    if modulus.len() as u64 != m + 1 {
        return Err(Error::domain(format!(
            "modulus has degree {} but the field spec asks for degree {m}",
            modulus.len().saturating_sub(1)
        )));
    }
    Field::with_modulus(p as u32, modulus, caps)
}

/// A base field `K = F_{p^k}` embedded in `L = F_{p^M}`.
#[derive(Clone, Debug)]
pub struct FieldTower {
    base: FieldRef,
    ext: FieldRef,
    theta: Fq,
    image: Vec<Fq>,
    preimage: HashMap<Fq, Fq>,
}

impl FieldTower {
    /// Embeds `base` into `ext` by sending `t` to the smallest root of the
    /// base modulus in `ext`.
    pub fn new(base: FieldRef, ext: FieldRef) -> Result<Self> {
        if base.p != ext.p || ext.m % base.m != 0 {
            return Err(Error::domain(format!(
                "{} does not embed into {}",
                base.spec(),
                ext.spec()
            )));
        }
        let theta = ext
            .subfield_elements(base.m)
            .into_iter()
            .find(|&r| {
                let mut acc = ext.zero();
                for &c in base.modulus.iter().rev() {
                    acc = ext.add(ext.mul(acc, r), ext.from_int(c as i64));
                }
                acc.is_zero()
            })
            .ok_or_else(|| Error::internal("base modulus has no root in the extension"))?;
        let mut powers = Vec::with_capacity(base.m as usize);
        let mut cur = ext.one();
        for _ in 0..base.m {
            powers.push(cur);
            cur = ext.mul(cur, theta);
        }
        let mut image = Vec::with_capacity(base.q as usize);
        let mut preimage = HashMap::with_capacity(base.q as usize);
        for a in base.elements() {
            let mut acc = ext.zero();
            for (c, &pw) in base.coords(a).iter().zip(&powers) {
                acc = ext.add(acc, ext.mul(ext.from_int(*c as i64), pw));
            }
            image.push(acc);
            preimage.insert(acc, a);
        }
        Ok(FieldTower { base, ext, theta, image, preimage })
    }

    /// Tower over `base` whose extension has degree `degree` over `F_p`.
    pub fn with_degree(base: FieldRef, degree: u32) -> Result<Self> {
        let ext = base.extension_of_degree(degree)?;
        Self::new(base, ext)
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn ext(&self) -> &FieldRef {
        &self.ext
    }

    /// Image of the base generator `t` in the extension.
    pub fn theta(&self) -> Fq {
        self.theta
    }

    pub fn base_degree(&self) -> u32 {
        self.base.m
    }

    pub fn embed(&self, a: Fq) -> Fq {
        self.image[a.0 as usize]
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn restrict(&self, a: Fq) -> Option<Fq> {
        self.preimage.get(&a).copied()
    }

    pub fn contains(&self, a: Fq) -> bool {
        self.ext.in_subfield(a, self.base.m)
    }
}
