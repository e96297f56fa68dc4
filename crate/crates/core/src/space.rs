//! `F_p`-subspaces of a finite field and small linear algebra over `F_p`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldRef, Fq};
use crate::poly::same_field;

/// Solves `Σ c_j · columns[j] = target` over `F_p`; vectors are coordinate
/// lists of equal length.
pub fn fp_solve(columns: &[Vec<u32>], target: &[u32], p: u32) -> Option<Vec<u32>> {
    let rows = target.len();
    let cols = columns.len();
    let mut mat: Vec<Vec<u32>> = (0..rows)
        .map(|r| {
            let mut row: Vec<u32> = columns.iter().map(|c| c[r] % p).collect();
            row.push(target[r] % p);
            row
        })
        .collect();
    let pivots = fp_reduce(&mut mat, cols, p);
    if mat.iter().any(|row| row[..cols].iter().all(|&v| v == 0) && row[cols] != 0) {
        return None;
    }
    let mut sol = vec![0u32; cols];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = mat[r][cols];
    }
    Some(sol)
}

/// Basis of `{c : Σ c_j · columns[j] = 0}` over `F_p`.
pub fn fp_kernel(columns: &[Vec<u32>], dim: usize, p: u32) -> Vec<Vec<u32>> {
    let cols = columns.len();
    let mut mat: Vec<Vec<u32>> = (0..dim).map(|r| columns.iter().map(|c| c[r] % p).collect()).collect();
    let pivots = fp_reduce(&mut mat, cols, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; cols];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (p - mat[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Reduced row echelon form on the first `cols` columns; returns pivot columns.
fn fp_reduce(mat: &mut [Vec<u32>], cols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(sel) = (row..mat.len()).find(|&r| mat[r][col] != 0) else { continue };
        mat.swap(row, sel);
        let inv = inv_mod(mat[row][col], p);
        for v in mat[row].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..mat.len() {
            if r != row && mat[r][col] != 0 {
                let factor = mat[r][col];
                let pivot_row = mat[row].clone();
                for (v, pv) in mat[r].iter_mut().zip(pivot_row) {
                    *v = (*v + p * p - factor * pv % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == mat.len() {
            break;
        }
    }
    pivots
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residues are invertible")
}

/// A finite `F_p`-subspace of a field, kept as a reduced echelon basis on
/// coordinate vectors.
#[derive(Clone)]
pub struct FpSpace {
    field: FieldRef,
    rows: Vec<(usize, Vec<u32>)>,
}

impl PartialEq for FpSpace {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.rows == other.rows
    }
}

impl Eq for FpSpace {}

impl fmt::Debug for FpSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = self.basis().iter().map(|&b| self.field.format(b)).collect();
        write!(f, "FpSpace[{}]", basis.join(", "))
    }
}

impl FpSpace {
    pub fn zero(field: &FieldRef) -> Self {
        FpSpace { field: field.clone(), rows: Vec::new() }
    }

    pub fn span(field: &FieldRef, generators: &[Fq]) -> Self {
        let mut s = Self::zero(field);
        for &g in generators {
            s.insert(g);
        }
        s
    }

    /// The subfield `F_{p^k}` viewed as an `F_p`-space.
    pub fn subfield(field: &FieldRef, k: u32) -> Self {
        let gen = field.subfield_generator(k);
        let powers: Vec<Fq> = (0..k).map(|i| field.pow(gen, i as u64)).collect();
        Self::span(field, &powers)
    }

    /// Builds the space from a complete element list, rejecting lists that
    /// are not closed under addition and `F_p`-scaling.
    pub fn from_elements(field: &FieldRef, elements: &[Fq]) -> Result<Self> {
        let space = Self::span(field, elements);
        let mut given: Vec<Fq> = elements.to_vec();
        given.sort();
        given.dedup();
        if given != space.elements() {
            return Err(Error::domain("the given elements do not form an F_p-subspace"));
        }
        Ok(space)
    }

    fn reduce(&self, coords: &mut [u32]) {
        let p = self.field.characteristic();
        for (pivot, row) in &self.rows {
            let c = coords[*pivot];
            if c != 0 {
                for (v, r) in coords.iter_mut().zip(row) {
                    *v = (*v + p * p - c * r % p) % p;
                }
            }
        }
    }

    /// Adds a generator; returns whether the dimension grew.
    pub fn insert(&mut self, a: Fq) -> bool {
        let p = self.field.characteristic();
        let mut v = self.field.coords(a);
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|&c| c != 0) else { return false };
        let inv = inv_mod(v[pivot], p);
        for c in v.iter_mut() {
            *c = *c * inv % p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for (r, nv) in row.iter_mut().zip(&v) {
                    *r = (*r + p * p - c * nv % p) % p;
                }
            }
        }
        let at = self.rows.iter().position(|(pv, _)| *pv > pivot).unwrap_or(self.rows.len());
        self.rows.insert(at, (pivot, v));
        true
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Fq> {
        self.rows.iter().map(|(_, r)| self.field.from_coords(r).expect("coordinates fit")).collect()
    }

    pub fn contains(&self, a: Fq) -> bool {
        let mut v = self.field.coords(a);
        self.reduce(&mut v);
        v.iter().all(|&c| c == 0)
    }

    /// All `p^dim` elements, ascending.
    pub fn elements(&self) -> Vec<Fq> {
        let k = &self.field;
        let p = k.characteristic() as u64;
        let basis = self.basis();
        let count = p.pow(basis.len() as u32);
        let mut out: Vec<Fq> = (0..count)
            .map(|code| {
                let mut c = code;
                let mut acc = k.zero();
                for &b in &basis {
                    acc = k.add(acc, k.mul(k.from_int((c % p) as i64), b));
                    c /= p;
                }
                acc
            })
            .collect();
        out.sort();
        out
    }

    /// `V ∩ F_{p^k}`, computed as the kernel of `a ↦ a^{p^k} − a` on `V`.
    pub fn intersect_subfield(&self, k: u32) -> Self {
        let field = &self.field;
        let basis = self.basis();
        let images: Vec<Vec<u32>> =
            basis.iter().map(|&b| field.coords(field.sub(field.frobenius(b, k), b))).collect();
        let kernel = fp_kernel(&images, field.degree() as usize, field.characteristic());
        let gens: Vec<Fq> = kernel
            .iter()
            .map(|c| {
                c.iter().zip(&basis).fold(field.zero(), |acc, (&ci, &b)| {
                    field.add(acc, field.mul(field.from_int(ci as i64), b))
                })
            })
            .collect();
        Self::span(field, &gens)
    }

    /// Writes `w = v + u` with `v ∈ self`, `u ∈ other` when possible.
    pub fn split_sum(&self, other: &FpSpace, w: Fq) -> Option<(Fq, Fq)> {
        let field = &self.field;
        let mine = self.basis();
        let theirs = other.basis();
        let columns: Vec<Vec<u32>> = mine.iter().chain(&theirs).map(|&b| field.coords(b)).collect();
        let sol = fp_solve(&columns, &field.coords(w), field.characteristic())?;
        let combine = |coeffs: &[u32], basis: &[Fq]| {
            coeffs.iter().zip(basis).fold(field.zero(), |acc, (&c, &b)| {
                field.add(acc, field.mul(field.from_int(c as i64), b))
            })
        };
        Some((combine(&sol[..mine.len()], &mine), combine(&sol[mine.len()..], &theirs)))
    }

    /// Lexicographically smallest element of the coset `a + V`.
    pub fn coset_min(&self, a: Fq) -> Fq {
        self.elements().into_iter().map(|v| self.field.add(a, v)).min().unwrap_or(a)
    }

    /// Image of the space under an injective map on basis vectors.
    pub fn map(&self, field: &FieldRef, f: impl Fn(Fq) -> Fq) -> Self {
        let images: Vec<Fq> = self.basis().into_iter().map(f).collect();
        Self::span(field, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn span_and_membership() {
        let k = Field::new(3, 2).unwrap();
        let v = FpSpace::span(&k, &[k.generator(), k.add(k.generator(), k.generator())]);
        assert_eq!(v.dim(), 1);
        assert_eq!(v.elements().len(), 3);
        assert!(v.contains(k.neg(k.generator())));
        assert!(!v.contains(k.one()));
    }

    #[test]
    fn subfield_intersection() {
        let k = Field::new(2, 4).unwrap();
        let whole = FpSpace::subfield(&k, 4);
        assert_eq!(whole.dim(), 4);
        assert_eq!(whole.intersect_subfield(2), FpSpace::subfield(&k, 2));
        assert_eq!(whole.intersect_subfield(1).dim(), 1);
    }

    #[test]
    fn rejects_non_subspace() {
        let k = Field::new(3, 1).unwrap();
        assert!(FpSpace::from_elements(&k, &[k.zero(), k.one()]).is_err());
        assert!(FpSpace::from_elements(&k, &[k.zero()]).is_ok());
    }

    #[test]
    fn solving() {
        assert_eq!(fp_solve(&[vec![1, 0], vec![0, 1]], &[2, 1], 3), Some(vec![2, 1]));
        assert_eq!(fp_solve(&[vec![1, 1]], &[1, 0], 3), None);
        assert_eq!(fp_kernel(&[vec![1, 1], vec![2, 2]], 2, 3), vec![vec![1, 1]]);
    }
}
