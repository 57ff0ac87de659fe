//! Dense linear algebra over GF(2^k) with bit-plane packed rows.
//!
//! A matrix stores k planes; plane m holds bit m of every entry, packed 64
//! columns per word. Row addition over GF(2) is then a word XOR, and scalar
//! multiplication becomes a fixed GF(2)-linear recombination of planes.

use crate::error::{Error, Result};
use crate::field::{Field, Fq};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    k: usize,
    wpr: usize,
    /// planes[m] is rows * wpr words.
    planes: Vec<Vec<u64>>,
}

pub struct RowReduction {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub rref: Matrix,
    /// Columns form a basis of the right kernel {v : A v = 0}.
    pub kernel: Matrix,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Matrix {
        let k = field.k() as usize;
        let wpr = cols.div_ceil(64).max(1);
        Matrix { rows, cols, k, wpr, planes: vec![vec![0; rows * wpr]; k] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Fq::ONE);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Fq>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Build from integer literals; entries are field bitmasks.
    pub fn from_ints(field: &Field, rows: &[&[u16]]) -> Matrix {
        let data: Vec<Vec<Fq>> = rows.iter().map(|r| r.iter().map(|&v| Fq(v)).collect()).collect();
        Self::from_rows(field, &data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fq {
        let (w, b) = (c / 64, c % 64);
        let mut v = 0u16;
        for m in 0..self.k {
            v |= (((self.planes[m][r * self.wpr + w] >> b) & 1) as u16) << m;
        }
        Fq(v)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        let (w, b) = (c / 64, c % 64);
        for m in 0..self.k {
            let word = &mut self.planes[m][r * self.wpr + w];
            *word &= !(1u64 << b);
            *word |= (((v.0 >> m) & 1) as u64) << b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.planes.iter().all(|p| p.iter().all(|&w| w == 0))
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.planes.iter().all(|p| p[r * self.wpr..(r + 1) * self.wpr].iter().all(|&w| w == 0))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let mut out = self.clone();
        for m in 0..self.k {
            for (a, b) in out.planes[m].iter_mut().zip(&other.planes[m]) {
                *a ^= b;
            }
        }
        out
    }

    pub fn scale(&self, field: &Field, s: Fq) -> Matrix {
        let mut out = Self::zero(field, self.rows, self.cols);
        // plane j of s*A = XOR of planes m of A where bit j of s*x^m is set
        let masks: Vec<u16> = (0..self.k).map(|m| field.mul(s, Fq(1 << m)).0).collect();
        for j in 0..self.k {
            for (m, &mask) in masks.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (o, a) in out.planes[j].iter_mut().zip(&self.planes[m]) {
                        *o ^= a;
                    }
                }
            }
        }
        out
    }

    /// rows[dst] += s * rows[src], in place.
    fn row_addmul(&mut self, dst: usize, src: usize, s: Fq, field: &Field) {
        if s.is_zero() {
            return;
        }
        let masks: Vec<u16> = (0..self.k).map(|m| field.mul(s, Fq(1 << m)).0).collect();
        let src_rows: Vec<Vec<u64>> =
            (0..self.k).map(|m| self.planes[m][src * self.wpr..(src + 1) * self.wpr].to_vec()).collect();
        for j in 0..self.k {
            let drange = dst * self.wpr..(dst + 1) * self.wpr;
            for (m, &mask) in masks.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (o, a) in self.planes[j][drange.clone()].iter_mut().zip(&src_rows[m]) {
                        *o ^= a;
                    }
                }
            }
        }
    }

    fn row_scale(&mut self, r: usize, s: Fq, field: &Field) {
        let masks: Vec<u16> = (0..self.k).map(|m| field.mul(s, Fq(1 << m)).0).collect();
        let src_rows: Vec<Vec<u64>> =
            (0..self.k).map(|m| self.planes[m][r * self.wpr..(r + 1) * self.wpr].to_vec()).collect();
        for j in 0..self.k {
            let range = r * self.wpr..(r + 1) * self.wpr;
            for w in self.planes[j][range.clone()].iter_mut() {
                *w = 0;
            }
            for (m, &mask) in masks.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (o, a) in self.planes[j][range.clone()].iter_mut().zip(&src_rows[m]) {
                        *o ^= a;
                    }
                }
            }
        }
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for m in 0..self.k {
            for w in 0..self.wpr {
                self.planes[m].swap(a * self.wpr + w, b * self.wpr + w);
            }
        }
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zero(field, self.rows, other.cols);
        // C_{i,*} += a_{i,c} * B_{c,*}, with the scalar recombination per plane pair
        for i in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(i, c);
                if a.is_zero() {
                    continue;
                }
                let masks: Vec<u16> = (0..self.k).map(|m| field.mul(a, Fq(1 << m)).0).collect();
                for j in 0..self.k {
                    let orange = i * out.wpr..(i + 1) * out.wpr;
                    for (m, &mask) in masks.iter().enumerate() {
                        if mask >> j & 1 == 1 {
                            let brange = c * other.wpr..(c + 1) * other.wpr;
                            let (oplane, bplane) = (&mut out.planes[j], &other.planes[m]);
                            for (o, b) in oplane[orange.clone()].iter_mut().zip(&bplane[brange]) {
                                *o ^= b;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, field: &Field, v: &[Fq]) -> Vec<Fq> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        let mut out = vec![Fq::ZERO; self.rows];
        for (c, &x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                *o = field.add(*o, field.mul(self.get(r, c), x));
            }
        }
        out
    }

    pub fn transpose(&self, field: &Field) -> Matrix {
        let mut out = Self::zero(field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    out.set(c, r, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, field: &Field, e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut acc = Matrix::identity(field, self.rows);
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn row(&self, r: usize) -> Vec<Fq> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Fq> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn words_per_row(&self) -> usize {
        self.wpr
    }

    /// Plane-major packed copy of a row (k * wpr words).
    pub fn packed_row(&self, r: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.k * self.wpr];
        for m in 0..self.k {
            out[m * self.wpr..(m + 1) * self.wpr]
                .copy_from_slice(&self.planes[m][r * self.wpr..(r + 1) * self.wpr]);
        }
        out
    }

    /// Row-vector times matrix on packed vectors: v is packed over
    /// self.rows entries, the result over self.cols entries.
    pub fn row_apply(&self, field: &Field, v: &[u64]) -> Vec<u64> {
        let v_wpr = self.rows.div_ceil(64).max(1);
        let mut out = vec![0u64; self.k * self.wpr];
        for r in 0..self.rows {
            let (w, b) = (r / 64, r % 64);
            let mut bits = 0u16;
            for m in 0..self.k {
                bits |= (((v[m * v_wpr + w] >> b) & 1) as u16) << m;
            }
            let s = Fq(bits);
            if s.is_zero() {
                continue;
            }
            if self.k == 1 {
                for w2 in 0..self.wpr {
                    out[w2] ^= self.planes[0][r * self.wpr + w2];
                }
            } else {
                for j in 0..self.k {
                    for m in 0..self.k {
                        if field.mul(s, Fq(1 << m)).0 >> j & 1 == 1 {
                            for w2 in 0..self.wpr {
                                out[j * self.wpr + w2] ^= self.planes[m][r * self.wpr + w2];
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn row_reduce(&self, field: &Field) -> RowReduction {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..m.cols {
            let mut pivot = None;
            for r in rank..m.rows {
                if !m.get(r, col).is_zero() {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            m.row_swap(rank, p);
            let lead = m.get(rank, col);
            if lead != Fq::ONE {
                m.row_scale(rank, field.inv(lead).unwrap(), field);
            }
            for r in 0..m.rows {
                if r != rank {
                    let v = m.get(r, col);
                    if !v.is_zero() {
                        m.row_addmul(r, rank, v, field);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        // kernel basis from the free columns
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        let mut kernel = Matrix::zero(field, m.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            kernel.set(fc, j, Fq::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                kernel.set(pc, j, m.get(i, fc)); // char 2: -x = x
            }
        }
        RowReduction { rank, pivots, rref: m, kernel }
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.row_reduce(field).rank
    }

    /// Inverse, or None for a singular square matrix.
    pub fn invert(&self, field: &Field) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("invert of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Fq::ONE);
        }
        let red = aug.row_reduce(field);
        if red.pivots.iter().take_while(|&&c| c < n).count() < n {
            return Ok(None);
        }
        let mut out = Matrix::zero(field, n, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, red.rref.get(r, n + c));
            }
        }
        Ok(Some(out))
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A subspace of F^n held as a canonical reduced row-echelon basis with
/// word-packed rows. Equality of subspaces is equality of the stored bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    k: usize,
    wpr: usize,
    /// each row is k planes of wpr words
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Pack a scalar vector into plane-major words.
pub fn pack(k: usize, wpr: usize, v: &[Fq]) -> Vec<u64> {
    let mut out = vec![0u64; k * wpr];
    for (c, &x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (w, b) = (c / 64, c % 64);
        for m in 0..k {
            if x.0 >> m & 1 == 1 {
                out[m * wpr + w] |= 1 << b;
            }
        }
    }
    out
}

pub fn unpack(k: usize, wpr: usize, ambient: usize, row: &[u64]) -> Vec<Fq> {
    let mut v = vec![Fq::ZERO; ambient];
    for (c, x) in v.iter_mut().enumerate() {
        let (w, b) = (c / 64, c % 64);
        let mut bits = 0u16;
        for m in 0..k {
            bits |= (((row[m * wpr + w] >> b) & 1) as u16) << m;
        }
        *x = Fq(bits);
    }
    v
}

fn packed_get(k: usize, wpr: usize, row: &[u64], c: usize) -> Fq {
    let (w, b) = (c / 64, c % 64);
    let mut bits = 0u16;
    for m in 0..k {
        bits |= (((row[m * wpr + w] >> b) & 1) as u16) << m;
    }
    Fq(bits)
}

/// dst += scalar * src on packed rows, via the plane recombination masks.
fn packed_axpy(field: &Field, k: usize, wpr: usize, dst: &mut [u64], src: &[u64], s: Fq) {
    if s.is_zero() {
        return;
    }
    if k == 1 {
        for (d, a) in dst.iter_mut().zip(src) {
            *d ^= a;
        }
        return;
    }
    for j in 0..k {
        for m in 0..k {
            if field.mul(s, Fq(1 << m)).0 >> j & 1 == 1 {
                for w in 0..wpr {
                    dst[j * wpr + w] ^= src[m * wpr + w];
                }
            }
        }
    }
}

fn packed_scale(field: &Field, k: usize, wpr: usize, row: &mut [u64], s: Fq) {
    if s == Fq::ONE {
        return;
    }
    let src = row.to_vec();
    row.iter_mut().for_each(|w| *w = 0);
    packed_axpy(field, k, wpr, row, &src, s);
}

fn packed_first_nonzero(k: usize, wpr: usize, row: &[u64]) -> Option<usize> {
    for w in 0..wpr {
        let mut or = 0u64;
        for m in 0..k {
            or |= row[m * wpr + w];
        }
        if or != 0 {
            return Some(w * 64 + or.trailing_zeros() as usize);
        }
    }
    None
}

impl Subspace {
    pub fn empty(field: &Field, ambient: usize) -> Subspace {
        let k = field.k() as usize;
        Subspace { ambient, k, wpr: ambient.div_ceil(64).max(1), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec<Fq>> {
        self.rows.iter().map(|r| unpack(self.k, self.wpr, self.ambient, r)).collect()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Fq> {
        unpack(self.k, self.wpr, self.ambient, &self.rows[i])
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of v in the echelon basis, or None if v is outside.
    /// Because the basis is in reduced echelon form the coordinates are
    /// just the pivot entries of v.
    pub fn coords_of(&self, field: &Field, v: &[Fq]) -> Option<Vec<Fq>> {
        if !self.contains(field, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    fn reduce_packed(&self, field: &Field, v: &mut [u64]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = packed_get(self.k, self.wpr, v, p);
            if !c.is_zero() {
                packed_axpy(field, self.k, self.wpr, v, row, c);
            }
        }
    }

    /// Reduce v against the basis; returns the remainder.
    pub fn reduce(&self, field: &Field, v: &[Fq]) -> Vec<Fq> {
        let mut p = pack(self.k, self.wpr, v);
        self.reduce_packed(field, &mut p);
        unpack(self.k, self.wpr, self.ambient, &p)
    }

    pub fn insert_packed(&mut self, field: &Field, mut v: Vec<u64>) -> bool {
        self.reduce_packed(field, &mut v);
        let Some(p) = packed_first_nonzero(self.k, self.wpr, &v) else { return false };
        let lead = packed_get(self.k, self.wpr, &v, p);
        if lead != Fq::ONE {
            packed_scale(field, self.k, self.wpr, &mut v, field.inv(lead).unwrap());
        }
        for row in self.rows.iter_mut() {
            let c = packed_get(self.k, self.wpr, row, p);
            if !c.is_zero() {
                packed_axpy(field, self.k, self.wpr, row, &v, c);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Insert a vector; returns true if it enlarged the subspace.
    pub fn insert(&mut self, field: &Field, v: &[Fq]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        self.insert_packed(field, pack(self.k, self.wpr, v))
    }

    pub fn contains(&self, field: &Field, v: &[Fq]) -> bool {
        let mut p = pack(self.k, self.wpr, v);
        self.reduce_packed(field, &mut p);
        p.iter().all(|&w| w == 0)
    }

    pub fn contains_subspace(&self, field: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|r| {
            let mut p = r.clone();
            self.reduce_packed(field, &mut p);
            p.iter().all(|&w| w == 0)
        })
    }

    pub fn from_vectors(field: &Field, ambient: usize, vecs: &[Vec<Fq>]) -> Subspace {
        let mut s = Subspace::empty(field, ambient);
        for v in vecs {
            s.insert(field, v);
        }
        s
    }

    pub fn intersect(&self, field: &Field, other: &Subspace) -> Subspace {
        // Zassenhaus: row reduce [A | A; B | 0], intersection from rows with zero left half.
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let mut rows = Vec::new();
        for v in self.basis() {
            let mut r = v.clone();
            r.extend_from_slice(&v);
            rows.push(r);
        }
        for v in other.basis() {
            let mut r = v;
            r.extend(std::iter::repeat(Fq::ZERO).take(n));
            rows.push(r);
        }
        let m = Matrix::from_rows(field, &rows);
        let red = m.row_reduce(field);
        let mut out = Subspace::empty(field, n);
        for r in 0..red.rank {
            let left_zero = (0..n).all(|c| red.rref.get(r, c).is_zero());
            if left_zero {
                out.insert(field, &red.rref.row(r)[n..].to_vec());
            }
        }
        out
    }

    pub fn sum(&self, field: &Field, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(field, &v);
        }
        s
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_reduces_to_itself() {
        let f = Field::gf2();
        let id = Matrix::identity(&f, 3);
        let red = id.row_reduce(&f);
        assert_eq!(red.rank, 3);
        assert_eq!(red.kernel.cols(), 0);
        assert_eq!(red.rref, id);
    }

    #[test]
    fn zero_matrix_kernel() {
        let f = Field::gf2();
        let z = Matrix::zero(&f, 4, 4);
        let red = z.row_reduce(&f);
        assert_eq!(red.rank, 0);
        assert_eq!(red.kernel.cols(), 4);
    }

    #[test]
    fn nilpotent_three_by_three() {
        // the a-action on the 3-dimensional simple module
        let f = Field::gf2();
        let a = Matrix::from_ints(&f, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let red = a.row_reduce(&f);
        assert_eq!(red.rank, 2);
        assert_eq!(red.kernel.cols(), 1);
    }

    #[test]
    fn diagonal_with_zero_is_singular() {
        let f = Field::gf2();
        let c = Matrix::from_ints(&f, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        assert!(c.invert(&f).unwrap().is_none());
    }

    #[test]
    fn one_by_one_inverse_over_gf4() {
        let f = Field::with_modulus(2, Some(0b111)).unwrap();
        let m = Matrix::from_ints(&f, &[&[0b10]]);
        let inv = m.invert(&f).unwrap().unwrap();
        assert_eq!(inv.get(0, 0), Fq(0b11)); // w^{-1} = w + 1
    }

    #[test]
    fn non_square_invert_is_shape_error() {
        let f = Field::gf2();
        let m = Matrix::zero(&f, 2, 3);
        assert!(m.invert(&f).is_err());
    }

    fn random_matrix(field: &Field, rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, Fq(rng.gen_range(0..field.order()) as u16));
            }
        }
        m
    }

    #[test]
    fn randomized_reduction_properties() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for field in [Field::gf2(), Field::new(2).unwrap()] {
            for _ in 0..500 {
                let rows = rng.gen_range(1..=12);
                let cols = rng.gen_range(1..=12);
                let a = random_matrix(&field, &mut rng, rows, cols);
                let red = a.row_reduce(&field);
                assert_eq!(red.rank + red.kernel.cols(), cols);
                // rref(rref(A)) = rref(A)
                assert_eq!(red.rref.row_reduce(&field).rref, red.rref);
                // A * kernel = 0
                if red.kernel.cols() > 0 {
                    assert!(a.mul(&field, &red.kernel).is_zero());
                }
                if rows == cols && red.rank == rows {
                    let inv = a.invert(&field).unwrap().unwrap();
                    assert_eq!(inv.mul(&field, &a), Matrix::identity(&field, rows));
                    assert_eq!(a.mul(&field, &inv), Matrix::identity(&field, rows));
                }
            }
        }
    }

    #[test]
    fn large_gf2_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let f = Field::gf2();
        let a = random_matrix(&f, &mut rng, 64, 64);
        let red = a.row_reduce(&f);
        assert_eq!(red.rank + red.kernel.cols(), 64);
    }

    #[test]
    fn subspace_canonical_equality() {
        let f = Field::new(2).unwrap();
        let v1 = vec![Fq(1), Fq(2), Fq(0)];
        let v2 = vec![Fq(0), Fq(1), Fq(1)];
        let w = vec![Fq(1), Fq(3), Fq(1)]; // v1 + v2
        let s1 = Subspace::from_vectors(&f, 3, &[v1.clone(), v2.clone()]);
        let s2 = Subspace::from_vectors(&f, 3, &[w, v2.clone()]);
        assert_eq!(s1, s2);
        assert!(s1.contains(&f, &v1));
    }

    #[test]
    fn subspace_intersection() {
        let f = Field::gf2();
        let e1 = vec![Fq(1), Fq(0), Fq(0)];
        let e2 = vec![Fq(0), Fq(1), Fq(0)];
        let e3 = vec![Fq(0), Fq(0), Fq(1)];
        let s12 = Subspace::from_vectors(&f, 3, &[e1.clone(), e2.clone()]);
        let s23 = Subspace::from_vectors(&f, 3, &[e2.clone(), e3]);
        let meet = s12.intersect(&f, &s23);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&f, &e2));
        assert!(!meet.contains(&f, &e1));
    }
}
