//! Arithmetic in GF(2^k) with polynomial-residue elements.
//!
//! Elements are bitmasks of polynomials over GF(2) of degree < k, reduced
//! modulo an irreducible modulus of degree k. Addition is XOR; the
//! characteristic is 2 throughout the crate.

use crate::error::{Error, Result};

/// A scalar of GF(2^k), stored as the bitmask of its residue polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(pub u16);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Debug for Fq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Fq({:#x})", self.0)
    }
}

impl std::fmt::Display for Fq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            1 => write!(f, "1"),
            v => write!(f, "s{v:x}"),
        }
    }
}

/// GF(2^k), 1 <= k <= 16.
#[derive(Clone)]
pub struct Field {
    k: u32,
    modulus: u32,
    /// log/exp tables over a multiplicative generator, for k small enough.
    tables: Option<(Vec<u16>, Vec<u16>)>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF(2^{}) mod {:#b}", self.k, self.modulus)
    }
}

fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

/// Carryless product of two GF(2)[x] polynomials.
fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    let mut a = a as u64;
    let mut b = b;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    acc
}

fn poly_rem(mut a: u64, m: u32) -> u32 {
    let dm = poly_degree(m);
    while a != 0 {
        let da = 63 - a.leading_zeros() as i32;
        if da < dm {
            break;
        }
        a ^= (m as u64) << (da - dm);
    }
    a as u32
}

/// Exhaustive irreducibility over GF(2): no divisor of degree 1..=deg/2.
fn is_irreducible(p: u32) -> std::result::Result<(), u32> {
    let d = poly_degree(p);
    if d < 1 {
        return Err(1);
    }
    for dd in 1..=(d / 2) {
        for q in (1u32 << dd)..(1u32 << (dd + 1)) {
            if poly_rem(p as u64, q) == 0 {
                return Err(q);
            }
        }
    }
    Ok(())
}

/// Smallest irreducible polynomial of degree k, by bitmask value.
fn default_modulus(k: u32) -> u32 {
    for p in (1u32 << k)..(1u32 << (k + 1)) {
        if is_irreducible(p).is_ok() {
            return p;
        }
    }
    unreachable!("an irreducible polynomial of degree {k} exists")
}

impl Field {
    /// GF(2^k) with the built-in modulus for k.
    pub fn new(k: u32) -> Result<Field> {
        Self::with_modulus(k, None)
    }

    pub fn gf2() -> Field {
        Self::new(1).unwrap()
    }

    pub fn with_modulus(k: u32, modulus: Option<u32>) -> Result<Field> {
        if !(1..=16).contains(&k) {
            return Err(Error::BadExtensionDegree(k));
        }
        let modulus = match modulus {
            Some(m) => {
                if poly_degree(m) != k as i32 {
                    return Err(Error::Shape(format!(
                        "modulus {m:#b} does not have degree {k}"
                    )));
                }
                if let Err(factor) = is_irreducible(m) {
                    return Err(Error::ReducibleModulus { modulus: m, degree: k, factor });
                }
                m
            }
            None => default_modulus(k),
        };
        let mut field = Field { k, modulus, tables: None };
        if k <= 12 {
            field.build_tables();
        }
        Ok(field)
    }

    fn build_tables(&mut self) {
        let order = self.order() as usize;
        if order == 2 {
            self.tables = Some((vec![0, 0], vec![1]));
            return;
        }
        'gen: for g in 2..order as u32 {
            let g = Fq(g as u16);
            let mut exp = vec![0u16; order - 1];
            let mut log = vec![0u16; order];
            let mut x = Fq::ONE;
            for i in 0..order - 1 {
                exp[i] = x.0;
                if x == Fq::ONE && i > 0 {
                    continue 'gen; // not a generator
                }
                log[x.0 as usize] = i as u16;
                x = self.mul_raw(x, g);
            }
            self.tables = Some((log, exp));
            return;
        }
        unreachable!("GF(2^k)^x is cyclic");
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// |GF(2^k)| = 2^k.
    pub fn order(&self) -> u64 {
        1 << self.k
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        Fq(a.0 ^ b.0)
    }

    fn mul_raw(&self, a: Fq, b: Fq) -> Fq {
        Fq(poly_rem(clmul(a.0 as u32, b.0 as u32), self.modulus) as u16)
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.is_zero() || b.is_zero() {
            return Fq::ZERO;
        }
        if let Some((log, exp)) = &self.tables {
            let n = (self.order() - 1) as u32;
            let s = (log[a.0 as usize] as u32 + log[b.0 as usize] as u32) % n;
            Fq(exp[s as usize])
        } else {
            self.mul_raw(a, b)
        }
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return None;
        }
        if let Some((log, exp)) = &self.tables {
            let n = (self.order() - 1) as u32;
            let s = (n - log[a.0 as usize] as u32) % n;
            return Some(Fq(exp[s as usize]));
        }
        Some(self.pow(a, self.order() as i64 - 2))
    }

    pub fn pow(&self, a: Fq, e: i64) -> Fq {
        if e < 0 {
            let inv = self.inv(a).expect("inverse of zero");
            return self.pow(inv, -e);
        }
        let mut acc = Fq::ONE;
        let mut base = a;
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// x -> x^2, the Frobenius endomorphism (an automorphism here).
    pub fn frobenius(&self, a: Fq) -> Fq {
        self.mul(a, a)
    }

    /// All field elements, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.order() as u32).map(|v| Fq(v as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fq> {
        (1..self.order() as u32).map(|v| Fq(v as u16))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: schoolbook polynomial product reduced by long division.
    fn naive_mul(a: u16, b: u16, modulus: u32) -> u16 {
        let mut prod = [0u8; 64];
        for i in 0..16 {
            for j in 0..16 {
                if a >> i & 1 == 1 && b >> j & 1 == 1 {
                    prod[i + j] ^= 1;
                }
            }
        }
        let deg = poly_degree(modulus) as usize;
        for i in (deg..64).rev() {
            if prod[i] == 1 {
                for j in 0..=deg {
                    if modulus >> j & 1 == 1 {
                        prod[i - deg + j] ^= 1;
                    }
                }
            }
        }
        let mut out = 0u16;
        for i in 0..16 {
            out |= (prod[i] as u16) << i;
        }
        out
    }

    #[test]
    fn char_two() {
        let f = Field::new(1).unwrap();
        assert_eq!(f.add(Fq::ONE, Fq::ONE), Fq::ZERO);
    }

    #[test]
    fn gf4_against_reduction_oracle() {
        // modulus w^2 + w + 1; w * (w + 1) = w^2 + w = 1
        let f = Field::with_modulus(2, Some(0b111)).unwrap();
        let w = Fq(0b10);
        let w1 = Fq(0b11);
        assert_eq!(f.mul(w, w1), Fq::ONE);
        assert_eq!(f.mul(w, w1).0, naive_mul(w.0, w1.0, 0b111));
        // Frobenius w -> w^2 = w + 1
        assert_eq!(f.frobenius(w), w1);
        assert_eq!(f.inv(w), Some(w1));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2
        match Field::with_modulus(2, Some(0b101)) {
            Err(Error::ReducibleModulus { factor, .. }) => assert_eq!(factor, 0b11),
            other => panic!("expected reducible modulus error, got {other:?}"),
        }
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for k in 1..=16 {
            let f = Field::new(k).unwrap();
            assert_eq!(poly_degree(f.modulus()), k as i32);
            assert!(is_irreducible(f.modulus()).is_ok());
        }
    }

    #[test]
    fn frobenius_is_multiplicative_exhaustive() {
        for k in [2u32, 4] {
            let f = Field::new(k).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    let lhs = f.frobenius(f.mul(x, y));
                    let rhs = f.mul(f.frobenius(x), f.frobenius(y));
                    assert_eq!(lhs, rhs);
                    // (x+y)^2 = x^2 + y^2
                    assert_eq!(
                        f.frobenius(f.add(x, y)),
                        f.add(f.frobenius(x), f.frobenius(y))
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn field_axioms_gf16(a in 0u16..16, b in 0u16..16, c in 0u16..16) {
            let f = Field::new(4).unwrap();
            let (a, b, c) = (Fq(a), Fq(b), Fq(c));
            prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            if !a.is_zero() {
                let inv = f.inv(a).unwrap();
                prop_assert_eq!(f.mul(a, inv), Fq::ONE);
            }
        }

        #[test]
        fn mul_matches_naive_gf256(a in 0u16..256, b in 0u16..256) {
            let f = Field::new(8).unwrap();
            prop_assert_eq!(f.mul(Fq(a), Fq(b)).0, naive_mul(a, b, f.modulus()));
        }
    }
}
