//! PBW monomials (exponent vectors), words and finitely supported elements.

use crate::field::{Field, Fq};
use smallvec::SmallVec;
use std::collections::BTreeMap;

/// Index of a generator in the fixed PBW order of its presentation.
pub type GenId = u8;

/// Exponent cap of a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cap {
    /// x^n = 0
    Nilpotent(i32),
    /// x^period = x^replacement, replacement < period (g^2 = 1, c^2 = c)
    Periodic { period: i32, replacement: i32 },
    /// exponents range over the naturals
    UnboundedNat,
    /// invertible generator, exponents range over the integers
    UnboundedInt,
}

impl Cap {
    pub fn is_finite(self) -> bool {
        matches!(self, Cap::Nilpotent(_) | Cap::Periodic { .. })
    }

    /// Exponents of the reduced monomials for this generator, if finite.
    pub fn exponent_range(self) -> Option<i32> {
        match self {
            Cap::Nilpotent(n) => Some(n),
            Cap::Periodic { period, .. } => Some(period),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub cap: Cap,
}

/// A word: a sequence of generator-power blocks, not necessarily ordered.
pub type Word = Vec<(GenId, i32)>;

/// A PBW monomial: one exponent per generator, in PBW order.
///
/// Invariant (kept by the rewrite engine): exponents respect caps and
/// negative exponents appear only on unbounded-integer generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: SmallVec<[i32; 9]>,
}

impl Monomial {
    pub fn one(num_gens: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, num_gens) }
    }

    pub fn gen(num_gens: usize, g: GenId, e: i32) -> Monomial {
        let mut m = Self::one(num_gens);
        m.exps[g as usize] = e;
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total length: sum of |exponent|.
    pub fn length(&self) -> i64 {
        self.exps.iter().map(|&e| e.unsigned_abs() as i64).sum()
    }

    pub fn to_word(&self) -> Word {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| (g as GenId, e))
            .collect()
    }

    /// Nonzero blocks in order.
    pub fn blocks(&self) -> impl Iterator<Item = (GenId, i32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e != 0).map(|(g, &e)| (g as GenId, e))
    }
}

/// Letters of a word for lexicographic comparison: (generator, sign) repeated
/// |exponent| times. Sign orders g before g^{-1} at equal positions.
fn letters(w: &[(GenId, i32)]) -> impl Iterator<Item = (GenId, bool)> + '_ {
    w.iter().flat_map(|&(g, e)| std::iter::repeat((g, e < 0)).take(e.unsigned_abs() as usize))
}

pub fn word_length(w: &[(GenId, i32)]) -> i64 {
    w.iter().map(|&(_, e)| e.unsigned_abs() as i64).sum()
}

/// The graded PBW word order: total length first, then letterwise
/// lexicographic comparison with earlier PBW position smaller.
pub fn cmp_words(a: &[(GenId, i32)], b: &[(GenId, i32)]) -> std::cmp::Ordering {
    word_length(a).cmp(&word_length(b)).then_with(|| letters(a).cmp(letters(b)))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        cmp_words(&self.to_word(), &other.to_word())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.exps.as_slice())
    }
}

/// A finitely supported linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    pub terms: BTreeMap<Monomial, Fq>,
}

impl Element {
    pub fn zero() -> Element {
        Element { terms: BTreeMap::new() }
    }

    pub fn one(num_gens: usize) -> Element {
        Self::from_monomial(Monomial::one(num_gens), Fq::ONE)
    }

    pub fn from_monomial(m: Monomial, c: Fq) -> Element {
        let mut e = Element::zero();
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn generator(num_gens: usize, g: GenId) -> Element {
        Self::from_monomial(Monomial::gen(num_gens, g, 1), Fq::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, field: &Field, m: Monomial, c: Fq) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = field.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, field: &Field, other: &Element) {
        for (m, &c) in &other.terms {
            self.add_term(field, m.clone(), c);
        }
    }

    pub fn add(&self, field: &Field, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(field, other);
        out
    }

    pub fn scale(&self, field: &Field, s: Fq) -> Element {
        if s.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (m, &c) in &self.terms {
            out.terms.insert(m.clone(), field.mul(c, s));
        }
        out
    }

    /// Largest monomial in the PBW order, with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, Fq)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Fq {
        self.terms.get(m).copied().unwrap_or(Fq::ZERO)
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if *c == Fq::ONE { format!("{m:?}") } else { format!("{c}*{m:?}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_then_lex() {
        // x1 x2 < x2 x1 at equal length; shorter words are smaller
        let x1x2 = vec![(0 as GenId, 1), (2, 1)];
        let x2x1 = vec![(2 as GenId, 1), (0, 1)];
        let x21 = vec![(1 as GenId, 1)];
        assert_eq!(cmp_words(&x1x2, &x2x1), std::cmp::Ordering::Less);
        assert_eq!(cmp_words(&x21, &x1x2), std::cmp::Ordering::Less);
        assert_eq!(cmp_words(&x2x1, &x2x1), std::cmp::Ordering::Equal);
    }

    #[test]
    fn coefficients_cancel_in_characteristic_two() {
        let f = Field::gf2();
        let m = Monomial::one(3);
        let mut e = Element::zero();
        e.add_term(&f, m.clone(), Fq::ONE);
        e.add_term(&f, m, Fq::ONE);
        assert!(e.is_zero());
    }

    #[test]
    fn negative_exponents_count_in_length() {
        let g_minus_two = vec![(3 as GenId, -2)];
        let g_one = vec![(3 as GenId, 1)];
        assert_eq!(word_length(&g_minus_two), 2);
        assert_eq!(cmp_words(&g_one, &g_minus_two), std::cmp::Ordering::Less);
    }
}
