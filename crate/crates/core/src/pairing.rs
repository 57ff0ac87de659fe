//! The skew pairing tau between the infinite-dimensional halves Htilde and
//! Ktilde, computed by recursive coproduct expansion from its generator
//! values and memoized on monomial pairs.

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::hopf::Hopf;
use crate::monomial::{Element, GenId, Monomial};
use rand::Rng;
use std::collections::HashMap;
use std::sync::RwLock;

pub struct SkewPairing<'a> {
    pub htilde: &'a Hopf,
    pub ktilde: &'a Hopf,
    /// resource guard on the total degree of the arguments
    pub bound: i64,
    memo: RwLock<HashMap<(Monomial, Monomial), Fq>>,
    hx1: GenId,
    hx21: GenId,
    hx2: GenId,
    hg: GenId,
    kzeta: GenId,
    kw1: GenId,
    kw21: GenId,
    kw2: GenId,
}

impl<'a> SkewPairing<'a> {
    pub fn new(htilde: &'a Hopf, ktilde: &'a Hopf, bound: i64) -> Result<SkewPairing<'a>> {
        Ok(SkewPairing {
            hx1: htilde.alg.system.gen_id("x1")?,
            hx21: htilde.alg.system.gen_id("x21")?,
            hx2: htilde.alg.system.gen_id("x2")?,
            hg: htilde.alg.system.gen_id("g")?,
            kzeta: ktilde.alg.system.gen_id("zeta")?,
            kw1: ktilde.alg.system.gen_id("w1")?,
            kw21: ktilde.alg.system.gen_id("w21")?,
            kw2: ktilde.alg.system.gen_id("w2")?,
            htilde,
            ktilde,
            bound,
            memo: RwLock::new(HashMap::new()),
        })
    }

    fn field(&self) -> &Field {
        self.htilde.field()
    }

    /// tau on base letters: x1, x2, g^{+-} against zeta, w1, w2.
    fn base_letter(&self, hgen: GenId, hneg: bool, kgen: GenId) -> Fq {
        let _ = hneg; // both powers of g pair identically
        if hgen == self.hx1 {
            if kgen == self.kw2 {
                return Fq::ONE;
            }
            return Fq::ZERO;
        }
        if hgen == self.hx2 {
            if kgen == self.kw1 {
                return Fq::ONE;
            }
            return Fq::ZERO;
        }
        if hgen == self.hg {
            if kgen == self.kzeta {
                return Fq::ONE;
            }
            return Fq::ZERO;
        }
        unreachable!("unknown base letter");
    }

    fn h_letter_mono(&self, g: GenId, neg: bool) -> Monomial {
        Monomial::gen(self.htilde.alg.num_gens(), g, if neg { -1 } else { 1 })
    }

    fn k_letter_mono(&self, g: GenId) -> Monomial {
        Monomial::gen(self.ktilde.alg.num_gens(), g, 1)
    }

    /// tau of two single letters, deriving the x21 and w21 entries from
    /// their defining products.
    fn single_single(&self, hgen: GenId, hneg: bool, kgen: GenId) -> Result<Fq> {
        let f = self.field();
        if hgen == self.hx21 {
            // x21 = x1 x2 + x2 x1
            let k = self.k_letter_mono(kgen);
            let a = self.tau_word_pair(
                &[(self.hx1, false), (self.hx2, false)],
                &k,
            )?;
            let b = self.tau_word_pair(
                &[(self.hx2, false), (self.hx1, false)],
                &k,
            )?;
            return Ok(f.add(a, b));
        }
        if kgen == self.kw21 {
            // w21 = w1 w2 + w2 w1; tau(h, uv) = sum tau(h1, v) tau(h2, u)
            let h = self.h_letter_mono(hgen, hneg);
            let a = self.tau_k_product(&h, self.kw1, self.kw2)?;
            let b = self.tau_k_product(&h, self.kw2, self.kw1)?;
            return Ok(f.add(a, b));
        }
        Ok(self.base_letter(hgen, hneg, kgen))
    }

    /// tau(h (x) u v) for single k-letters u, v via the product axiom.
    fn tau_k_product(&self, h: &Monomial, u: GenId, v: GenId) -> Result<Fq> {
        let f = self.field();
        let mut acc = Fq::ZERO;
        for ((h1, h2), &c) in &self.htilde.delta_monomial(h).terms {
            let t1 = self.tau_mono(h1, &self.k_letter_mono(v))?;
            if t1.is_zero() {
                continue;
            }
            let t2 = self.tau_mono(h2, &self.k_letter_mono(u))?;
            acc = f.add(acc, f.mul(c, f.mul(t1, t2)));
        }
        Ok(acc)
    }

    /// tau of an explicit h-letter word against a k-monomial.
    fn tau_word_pair(&self, hword: &[(GenId, bool)], k: &Monomial) -> Result<Fq> {
        let f = self.field();
        match hword {
            [] => Ok(if k.is_one() { Fq::ONE } else { Fq::ZERO }),
            [(g, neg)] => self.tau_mono(&self.h_letter_mono(*g, *neg), k),
            [(g, neg), rest @ ..] => {
                let mut acc = Fq::ZERO;
                for ((k1, k2), &c) in &self.ktilde.delta_monomial(k).terms {
                    let t1 = self.tau_mono(&self.h_letter_mono(*g, *neg), k1)?;
                    if t1.is_zero() {
                        continue;
                    }
                    let t2 = self.tau_word_pair(rest, k2)?;
                    acc = f.add(acc, f.mul(c, f.mul(t1, t2)));
                }
                Ok(acc)
            }
        }
    }

    /// tau on a pair of PBW monomials.
    pub fn tau_mono(&self, h: &Monomial, k: &Monomial) -> Result<Fq> {
        if h.length() > self.bound || k.length() > self.bound {
            return Err(Error::Resource(format!(
                "pairing argument exceeds the degree bound {}",
                self.bound
            )));
        }
        let f = self.field();
        if h.is_one() {
            // tau(1, k) = eps(k); all Ktilde generators have counit 0
            return Ok(if k.is_one() { Fq::ONE } else { Fq::ZERO });
        }
        if k.is_one() {
            return Ok(self.htilde.counit_monomial(h));
        }
        if let Some(v) = self.memo.read().unwrap().get(&(h.clone(), k.clone())) {
            return Ok(*v);
        }
        let hblocks: Vec<(GenId, i32)> = h.blocks().collect();
        let single_h_letter = hblocks.len() == 1 && hblocks[0].1.abs() == 1;
        let v = if single_h_letter {
            let (hg, he) = hblocks[0];
            let kblocks: Vec<(GenId, i32)> = k.blocks().collect();
            if kblocks.len() == 1 && kblocks[0].1 == 1 {
                self.single_single(hg, he < 0, kblocks[0].0)?
            } else {
                // peel one letter off the front of k: k = kappa krest;
                // tau(h, kappa krest) = sum tau(h1, krest) tau(h2, kappa)
                let (kg, _) = kblocks[0];
                let mut krest = k.clone();
                krest.exps[kg as usize] -= 1;
                let kappa = self.k_letter_mono(kg);
                let hletter = self.h_letter_mono(hg, he < 0);
                let mut acc = Fq::ZERO;
                let delta_h = if he < 0 {
                    // Delta(g^{-1}) = g^{-1} (x) g^{-1}
                    let mut t = crate::hopf::Tensor2::zero();
                    t.add_term(f, (hletter.clone(), hletter.clone()), Fq::ONE);
                    t
                } else {
                    self.htilde.delta_monomial(&hletter)
                };
                for ((h1, h2), &c) in &delta_h.terms {
                    let t1 = self.tau_mono(h1, &krest)?;
                    if t1.is_zero() {
                        continue;
                    }
                    let t2 = self.tau_mono(h2, &kappa)?;
                    acc = f.add(acc, f.mul(c, f.mul(t1, t2)));
                }
                acc
            }
        } else {
            // peel one letter off the front of h:
            // tau(l hrest, k) = sum tau(l, k1) tau(hrest, k2)
            let (hg, he) = hblocks[0];
            let neg = he < 0;
            let mut hrest = h.clone();
            hrest.exps[hg as usize] += if neg { 1 } else { -1 };
            let hletter = self.h_letter_mono(hg, neg);
            let mut acc = Fq::ZERO;
            for ((k1, k2), &c) in &self.ktilde.delta_monomial(k).terms {
                let t1 = self.tau_mono(&hletter, k1)?;
                if t1.is_zero() {
                    continue;
                }
                let t2 = self.tau_mono(&hrest, k2)?;
                acc = f.add(acc, f.mul(c, f.mul(t1, t2)));
            }
            acc
        };
        self.memo.write().unwrap().insert((h.clone(), k.clone()), v);
        Ok(v)
    }

    /// Bilinear extension to elements.
    pub fn tau(&self, h: &Element, k: &Element) -> Result<Fq> {
        let f = self.field();
        let mut acc = Fq::ZERO;
        for (hm, &hc) in &h.terms {
            for (km, &kc) in &k.terms {
                let t = self.tau_mono(hm, km)?;
                acc = f.add(acc, f.mul(f.mul(hc, kc), t));
            }
        }
        Ok(acc)
    }

    /// Verify the four skew-pairing identities on random bounded monomial
    /// pairs; returns failures.
    pub fn check_axioms(&self, rng: &mut impl Rng, samples: usize, degree: i64) -> Vec<String> {
        let f = self.field();
        let mut fails = Vec::new();
        let mut hprobe = self.htilde.probe_monomials(rng, degree, samples.max(4));
        let mut kprobe = self.ktilde.probe_monomials(rng, degree, samples.max(4));
        hprobe.truncate(samples.max(4));
        kprobe.truncate(samples.max(4));
        let mut checked = 0usize;
        'outer: for round in 0..samples {
            let h1 = &hprobe[rng.gen_range(0..hprobe.len())];
            let h2 = &hprobe[rng.gen_range(0..hprobe.len())];
            let k1 = &kprobe[rng.gen_range(0..kprobe.len())];
            let k2 = &kprobe[rng.gen_range(0..kprobe.len())];
            let h1e = Element::from_monomial(h1.clone(), Fq::ONE);
            let h2e = Element::from_monomial(h2.clone(), Fq::ONE);
            let k1e = Element::from_monomial(k1.clone(), Fq::ONE);
            let k2e = Element::from_monomial(k2.clone(), Fq::ONE);

            // tau(h1 h2, k1) = sum tau(h1, k1_(1)) tau(h2, k1_(2))
            let prod_h = self.htilde.alg.mul(&h1e, &h2e);
            let lhs = match self.tau(&prod_h, &k1e) {
                Ok(v) => v,
                Err(_) => continue 'outer, // product exceeded the bound
            };
            let mut rhs = Fq::ZERO;
            for ((ka, kb), &c) in &self.ktilde.delta_monomial(k1).terms {
                let t1 = self.tau_mono(h1, ka).unwrap();
                let t2 = self.tau_mono(h2, kb).unwrap();
                rhs = f.add(rhs, f.mul(c, f.mul(t1, t2)));
            }
            if lhs != rhs {
                fails.push(format!("multiplicativity in H fails on sample {round}"));
            }

            // tau(h1, k1 k2) = sum tau(h1_(1), k2) tau(h1_(2), k1)
            let prod_k = self.ktilde.alg.mul(&k1e, &k2e);
            let lhs = match self.tau(&h1e, &prod_k) {
                Ok(v) => v,
                Err(_) => continue 'outer,
            };
            let mut rhs = Fq::ZERO;
            for ((ha, hb), &c) in &self.htilde.delta_monomial(h1).terms {
                let t1 = self.tau_mono(ha, k2).unwrap();
                let t2 = self.tau_mono(hb, k1).unwrap();
                rhs = f.add(rhs, f.mul(c, f.mul(t1, t2)));
            }
            if lhs != rhs {
                fails.push(format!("multiplicativity in K fails on sample {round}"));
            }

            // unit rows
            let one_h = self.htilde.alg.one();
            let one_k = self.ktilde.alg.one();
            if self.tau(&one_h, &k1e).unwrap() != self.ktilde.counit_monomial(k1) {
                fails.push(format!("tau(1, k) != eps(k) on sample {round}"));
            }
            if self.tau(&h1e, &one_k).unwrap() != self.htilde.counit_monomial(h1) {
                fails.push(format!("tau(h, 1) != eps(h) on sample {round}"));
            }
            checked += 1;
        }
        if checked < samples / 2 {
            fails.push(format!("only {checked} of {samples} samples fit the degree bound"));
        }
        fails
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn setup() -> (Hopf, Hopf) {
        let f = Field::gf2();
        let h = Hopf::build("Htilde", &f, 3).unwrap();
        let k = Hopf::build("Ktilde", &f, 3).unwrap();
        (h, k)
    }

    #[test]
    fn generator_values() {
        let (h, k) = setup();
        let tau = SkewPairing::new(&h, &k, 16).unwrap();
        let hv = |s: &str| h.alg.element(s).unwrap();
        let kv = |s: &str| k.alg.element(s).unwrap();
        let pairs = [
            ("x1", "w2", Fq::ONE),
            ("x1", "w1", Fq::ZERO),
            ("x1", "zeta", Fq::ZERO),
            ("x2", "w1", Fq::ONE),
            ("x2", "w2", Fq::ZERO),
            ("x2", "zeta", Fq::ZERO),
            ("g", "w1", Fq::ZERO),
            ("g", "w2", Fq::ZERO),
            ("g", "zeta", Fq::ONE),
            ("g^-1", "zeta", Fq::ONE),
        ];
        for (hs, ks, want) in pairs {
            assert_eq!(tau.tau(&hv(hs), &kv(ks)).unwrap(), want, "tau({hs}, {ks})");
        }
        // tau(1, w2) = eps(w2) = 0
        assert_eq!(tau.tau(&h.alg.one(), &kv("w2")).unwrap(), Fq::ZERO);
        // tau(g, zeta^2) = 1 from Delta(g) = g (x) g
        assert_eq!(tau.tau(&hv("g"), &kv("zeta^2")).unwrap(), Fq::ONE);
    }

    #[test]
    fn axioms_on_random_bounded_pairs() {
        let (h, k) = setup();
        let tau = SkewPairing::new(&h, &k, 24).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let fails = tau.check_axioms(&mut rng, 120, 4);
        assert!(fails.is_empty(), "{:?}", fails.first());
    }

    #[test]
    fn degree_guard_fires() {
        let (h, k) = setup();
        let tau = SkewPairing::new(&h, &k, 2).unwrap();
        let big = h.alg.element("x2^5").unwrap();
        let kv = k.alg.element("w2").unwrap();
        assert!(tau.tau(&big, &kv).is_err());
    }
}
