//! Hopf structure on the presented algebras: coproducts and antipodes on
//! generators with (anti)multiplicative extension, axiom checking, adjoint
//! actions, exact sequences of Hopf algebras, integrals and Hopf morphisms.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::matrix::{Matrix, Subspace};
use crate::monomial::{Cap, Element, GenId, Monomial};
use rand::Rng;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

/// An element of A (x) A with normal-formed components.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor2 {
    pub terms: BTreeMap<(Monomial, Monomial), Fq>,
}

impl Tensor2 {
    pub fn zero() -> Tensor2 {
        Tensor2::default()
    }

    pub fn add_term(&mut self, field: &Field, key: (Monomial, Monomial), c: Fq) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn add_assign(&mut self, field: &Field, other: &Tensor2) {
        for (k, &c) in &other.terms {
            self.add_term(field, k.clone(), c);
        }
    }

    pub fn scale(&self, field: &Field, s: Fq) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (k, &c) in &self.terms {
            out.add_term(field, k.clone(), field.mul(c, s));
        }
        out
    }

    pub fn from_elements(alg: &Algebra, left: &Element, right: &Element) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (ml, &cl) in &left.terms {
            for (mr, &cr) in &right.terms {
                out.add_term(&alg.field, (ml.clone(), mr.clone()), alg.field.mul(cl, cr));
            }
        }
        out
    }

    pub fn mul(&self, alg: &Algebra, other: &Tensor2) -> Tensor2 {
        let f = &alg.field;
        let mut out = Tensor2::zero();
        for ((a1, a2), &ca) in &self.terms {
            for ((b1, b2), &cb) in &other.terms {
                let left = alg.system.mul_monomials(f, a1, b1);
                let right = alg.system.mul_monomials(f, a2, b2);
                let c = f.mul(ca, cb);
                for (ml, &cl) in &left.terms {
                    for (mr, &cr) in &right.terms {
                        out.add_term(
                            f,
                            (ml.clone(), mr.clone()),
                            f.mul(c, f.mul(cl, cr)),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor3 {
    pub terms: BTreeMap<(Monomial, Monomial, Monomial), Fq>,
}

impl Tensor3 {
    fn add_term(&mut self, field: &Field, key: (Monomial, Monomial, Monomial), c: Fq) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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
}

/// Coproduct, counit and antipode on generators.
pub struct HopfData {
    pub delta: Vec<Tensor2>,
    pub counit: Vec<Fq>,
    pub antipode: Vec<Element>,
}

pub struct Hopf {
    pub alg: Algebra,
    pub data: HopfData,
    delta_memo: RwLock<HashMap<Monomial, Tensor2>>,
    antipode_memo: RwLock<HashMap<Monomial, Element>>,
}

impl Hopf {
    pub fn build(name: &str, field: &Field, bound: i32) -> Result<Hopf> {
        let alg = Algebra::build(name, field, bound)?;
        let data = hopf_data_for(&alg)?;
        Ok(Self::from_parts(alg, data))
    }

    pub fn from_parts(alg: Algebra, data: HopfData) -> Hopf {
        Hopf {
            alg,
            data,
            delta_memo: RwLock::new(HashMap::new()),
            antipode_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &Field {
        &self.alg.field
    }

    fn delta_block(&self, g: GenId, e: i32) -> Tensor2 {
        let f = self.field();
        if e < 0 {
            // negative powers only on grouplike invertible generators
            let m = Monomial::gen(self.alg.num_gens(), g, e);
            let glike = Tensor2::from_elements(
                &self.alg,
                &Element::from_monomial(m.clone(), Fq::ONE),
                &Element::from_monomial(m, Fq::ONE),
            );
            return glike;
        }
        let mut acc = Tensor2::from_elements(&self.alg, &self.alg.one(), &self.alg.one());
        for _ in 0..e {
            acc = acc.mul(&self.alg, &self.data.delta[g as usize]);
        }
        acc
    }

    /// Multiplicative extension of the coproduct, memoized per monomial.
    pub fn delta_monomial(&self, m: &Monomial) -> Tensor2 {
        if let Some(t) = self.delta_memo.read().unwrap().get(m) {
            return t.clone();
        }
        let mut acc = Tensor2::from_elements(&self.alg, &self.alg.one(), &self.alg.one());
        for (g, e) in m.blocks() {
            acc = acc.mul(&self.alg, &self.delta_block(g, e));
        }
        let mut memo = self.delta_memo.write().unwrap();
        if memo.len() < (1 << 17) {
            memo.insert(m.clone(), acc.clone());
        }
        acc
    }

    pub fn coproduct(&self, x: &Element) -> Tensor2 {
        let f = self.field();
        let mut out = Tensor2::zero();
        for (m, &c) in &x.terms {
            out.add_assign(f, &self.delta_monomial(m).scale(f, c));
        }
        out
    }

    pub fn counit_monomial(&self, m: &Monomial) -> Fq {
        let f = self.field();
        let mut acc = Fq::ONE;
        for (g, e) in m.blocks() {
            let ce = self.data.counit[g as usize];
            if e < 0 {
                assert_eq!(ce, Fq::ONE, "negative power of a generator with counit != 1");
                continue;
            }
            for _ in 0..e {
                acc = f.mul(acc, ce);
            }
        }
        acc
    }

    pub fn counit(&self, x: &Element) -> Fq {
        let f = self.field();
        let mut acc = Fq::ZERO;
        for (m, &c) in &x.terms {
            acc = f.add(acc, f.mul(c, self.counit_monomial(m)));
        }
        acc
    }

    fn antipode_block(&self, g: GenId, e: i32) -> Element {
        if self.alg.system.gens()[g as usize].cap == Cap::UnboundedInt {
            // S(g) must be g^{-1}; then S(g^e) = g^{-e}
            return Element::from_monomial(Monomial::gen(self.alg.num_gens(), g, -e), Fq::ONE);
        }
        assert!(e >= 0);
        self.alg.pow(&self.data.antipode[g as usize], e as u32)
    }

    /// Anti-multiplicative extension of the antipode, memoized.
    pub fn antipode_monomial(&self, m: &Monomial) -> Element {
        if let Some(e) = self.antipode_memo.read().unwrap().get(m) {
            return e.clone();
        }
        let mut acc = self.alg.one();
        let blocks: Vec<_> = m.blocks().collect();
        for &(g, e) in blocks.iter().rev() {
            acc = self.alg.mul(&acc, &self.antipode_block(g, e));
        }
        let mut memo = self.antipode_memo.write().unwrap();
        if memo.len() < (1 << 17) {
            memo.insert(m.clone(), acc.clone());
        }
        acc
    }

    pub fn antipode(&self, x: &Element) -> Element {
        let f = self.field();
        let mut out = Element::zero();
        for (m, &c) in &x.terms {
            out.add_assign(f, &self.antipode_monomial(m).scale(f, c));
        }
        out
    }

    /// Monomials to check axioms on: the full basis when finite, otherwise
    /// generators plus `samples` random bounded monomials.
    pub fn probe_monomials(&self, rng: &mut impl Rng, bound: i64, samples: usize) -> Vec<Monomial> {
        if self.alg.is_finite() {
            return self.alg.basis.clone();
        }
        let n = self.alg.num_gens();
        let mut out: Vec<Monomial> = (0..n).map(|g| Monomial::gen(n, g as GenId, 1)).collect();
        out.push(Monomial::one(n));
        while out.len() < samples {
            let mut m = Monomial::one(n);
            let mut budget = bound;
            for (g, spec) in self.alg.system.gens().iter().enumerate() {
                let e: i64 = match spec.cap {
                    Cap::Nilpotent(c) | Cap::Periodic { period: c, .. } => {
                        rng.gen_range(0..c as i64)
                    }
                    Cap::UnboundedNat => rng.gen_range(0..=budget.max(0).min(bound)),
                    Cap::UnboundedInt => rng.gen_range(-budget.max(0)..=budget.max(0)),
                };
                let e = e.min(budget);
                budget -= e.abs();
                m.exps[g] = e as i32;
            }
            if self.alg.system.is_normal(&m) {
                out.push(m);
            }
        }
        out
    }

    /// Coassociativity, counit law and the antipode axiom on the given
    /// monomials; Delta, counit and S must also kill every relation.
    pub fn check_axioms(&self, monomials: &[Monomial]) -> Vec<String> {
        use rayon::prelude::*;
        let f = self.field();
        let mut failures: Vec<String> = monomials
            .par_iter()
            .flat_map(|m| {
                let mut local = Vec::new();
                let d = self.delta_monomial(m);
                // coassociativity
                let mut lhs = Tensor3::default();
                let mut rhs = Tensor3::default();
                for ((m1, m2), &c) in &d.terms {
                    for ((n1, n2), &c2) in &self.delta_monomial(m1).terms {
                        lhs.add_term(f, (n1.clone(), n2.clone(), m2.clone()), f.mul(c, c2));
                    }
                    for ((n1, n2), &c2) in &self.delta_monomial(m2).terms {
                        rhs.add_term(f, (m1.clone(), n1.clone(), n2.clone()), f.mul(c, c2));
                    }
                }
                if lhs != rhs {
                    local.push(format!("coassociativity fails on {}", self.alg.system.word_to_string(&m.to_word())));
                }
                // counit law
                let mut left = Element::zero();
                let mut right = Element::zero();
                for ((m1, m2), &c) in &d.terms {
                    left.add_term(f, m2.clone(), f.mul(c, self.counit_monomial(m1)));
                    right.add_term(f, m1.clone(), f.mul(c, self.counit_monomial(m2)));
                }
                let me = Element::from_monomial(m.clone(), Fq::ONE);
                if left != me || right != me {
                    local.push(format!("counit law fails on {}", self.alg.system.word_to_string(&m.to_word())));
                }
                // antipode axiom
                let mut s_left = Element::zero();
                let mut s_right = Element::zero();
                for ((m1, m2), &c) in &d.terms {
                    let sm1 = self.antipode_monomial(m1);
                    let m2e = Element::from_monomial(m2.clone(), Fq::ONE);
                    s_left.add_assign(f, &self.alg.mul(&sm1, &m2e).scale(f, c));
                    let sm2 = self.antipode_monomial(m2);
                    let m1e = Element::from_monomial(m1.clone(), Fq::ONE);
                    s_right.add_assign(f, &self.alg.mul(&m1e, &sm2).scale(f, c));
                }
                let ue = self.alg.one().scale(f, self.counit_monomial(m));
                if s_left != ue || s_right != ue {
                    local.push(format!("antipode axiom fails on {}", self.alg.system.word_to_string(&m.to_word())));
                }
                local
            })
            .collect();
        // well-definedness on relations
        for rel in &self.alg.system.relations {
            let mut dsum = Tensor2::zero();
            let mut esum = Fq::ZERO;
            let mut ssum = Element::zero();
            for (c, w) in &rel.sum {
                let mut dt = Tensor2::from_elements(&self.alg, &self.alg.one(), &self.alg.one());
                let mut ev = Fq::ONE;
                let mut sv = self.alg.one();
                for &(g, e) in w {
                    dt = dt.mul(&self.alg, &self.delta_block(g, e));
                    let ce = self.data.counit[g as usize];
                    for _ in 0..e.abs() {
                        ev = f.mul(ev, ce);
                    }
                    sv = self.alg.mul(&self.antipode_block(g, e), &sv);
                }
                dsum.add_assign(f, &dt.scale(f, *c));
                esum = f.add(esum, f.mul(*c, ev));
                ssum.add_assign(f, &sv.scale(f, *c));
            }
            if !dsum.is_zero() {
                failures.push(format!("Delta not well-defined on `{}`", rel.source));
            }
            if !esum.is_zero() {
                failures.push(format!("counit not well-defined on `{}`", rel.source));
            }
            if !ssum.is_zero() {
                failures.push(format!("antipode not well-defined on `{}`", rel.source));
            }
        }
        failures
    }

    /// S^2 on the given monomials: identity, or conjugation by the element.
    pub fn s2_deviation(&self, monomials: &[Monomial], conj: Option<&Element>) -> Vec<String> {
        let f = self.field();
        let mut fails = Vec::new();
        for m in monomials {
            let me = Element::from_monomial(m.clone(), Fq::ONE);
            let s2 = self.antipode(&self.antipode(&me));
            let expect = match conj {
                None => me.clone(),
                Some(g) => {
                    let ginv = self.antipode(g); // S(g) = g^{-1} for grouplikes
                    self.alg.mul(g, &self.alg.mul(&me, &ginv))
                }
            };
            if s2 != expect {
                fails.push(format!(
                    "S^2 deviates on {}",
                    self.alg.system.word_to_string(&m.to_word())
                ));
            }
        }
        let _ = f;
        fails
    }

    /// ad_h(x) = h_(1) x S(h_(2)).
    pub fn adjoint(&self, h: &Element, x: &Element) -> Element {
        let f = self.field();
        let mut out = Element::zero();
        for (hm, &hc) in &h.terms {
            for ((m1, m2), &c) in &self.delta_monomial(hm).terms {
                let left = Element::from_monomial(m1.clone(), Fq::ONE);
                let s = self.antipode_monomial(m2);
                let prod = self.alg.mul(&left, &self.alg.mul(x, &s));
                out.add_assign(f, &prod.scale(f, f.mul(hc, c)));
            }
        }
        out
    }

    /// True iff ad_h(x) stays in the membership predicate for every
    /// generator h and every x in `sub`.
    pub fn adjoint_stable(
        &self,
        sub: &[Element],
        membership: impl Fn(&Element) -> bool,
    ) -> Option<String> {
        for g in 0..self.alg.num_gens() {
            let h = Element::generator(self.alg.num_gens(), g as GenId);
            for (i, x) in sub.iter().enumerate() {
                let ad = self.adjoint(&h, x);
                if !membership(&ad) {
                    return Some(format!(
                        "ad_{}(sub[{}]) = {} leaves the subspace",
                        self.alg.system.gen_name(g as GenId),
                        i,
                        self.alg.show(&ad)
                    ));
                }
            }
        }
        None
    }
}

/// A Hopf-algebra map given by generator images.
pub struct Morphism<'a> {
    pub source: &'a Hopf,
    pub target: &'a Hopf,
    /// image of each source generator
    pub images: Vec<Element>,
    /// inverse images for invertible generators (index-aligned, optional)
    pub inv_images: Vec<Option<Element>>,
}

impl<'a> Morphism<'a> {
    pub fn new(
        source: &'a Hopf,
        target: &'a Hopf,
        images: &[(&str, &str)],
    ) -> Result<Morphism<'a>> {
        let mut v = vec![Element::zero(); source.alg.num_gens()];
        let mut assigned = vec![false; source.alg.num_gens()];
        for (gname, expr) in images {
            let g = source.alg.system.gen_id(gname)?;
            v[g as usize] = parse_sum_in(&target.alg, expr)?;
            assigned[g as usize] = true;
        }
        if let Some(i) = assigned.iter().position(|a| !a) {
            return Err(Error::Parameter(format!(
                "no image for generator `{}`",
                source.alg.system.gen_name(i as GenId)
            )));
        }
        let mut inv = vec![None; source.alg.num_gens()];
        for (i, spec) in source.alg.system.gens().iter().enumerate() {
            if spec.cap == Cap::UnboundedInt {
                // find the inverse of the image by scanning small powers
                let img = &v[i];
                let mut p = img.clone();
                let mut found = None;
                for k in 1..=8 {
                    if p == source_one(target) {
                        // img^k = 1, so img^(k-1) is the inverse
                        found = Some(target.alg.pow(img, k - 1));
                        break;
                    }
                    p = target.alg.mul(&p, img);
                }
                if found.is_none() {
                    // try a literal inverse monomial g -> g^{-1}
                    if img.support_len() == 1 {
                        let (m, &c) = img.terms.iter().next().unwrap();
                        let mut inv_m = m.clone();
                        for e in inv_m.exps.iter_mut() {
                            *e = -*e;
                        }
                        if target.alg.system.is_normal(&inv_m) {
                            let cand = Element::from_monomial(inv_m, c);
                            if target
                                .alg
                                .mul(img, &cand)
                                .eq(&source_one(target))
                            {
                                found = Some(cand);
                            }
                        }
                    }
                }
                inv[i] = Some(found.ok_or_else(|| {
                    Error::Parameter(format!(
                        "image of invertible generator `{}` has no detectable inverse",
                        source.alg.system.gen_name(i as GenId)
                    ))
                })?);
            }
        }
        Ok(Morphism { source, target, images: v, inv_images: inv })
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Element {
        let mut acc = self.target.alg.one();
        for (g, e) in m.blocks() {
            let img = if e >= 0 {
                self.target.alg.pow(&self.images[g as usize], e as u32)
            } else {
                let inv = self.inv_images[g as usize]
                    .as_ref()
                    .expect("negative power of generator without inverse image");
                self.target.alg.pow(inv, (-e) as u32)
            };
            acc = self.target.alg.mul(&acc, &img);
        }
        acc
    }

    pub fn apply(&self, x: &Element) -> Element {
        let f = self.target.field();
        let mut out = Element::zero();
        for (m, &c) in &x.terms {
            out.add_assign(f, &self.apply_monomial(m).scale(f, c));
        }
        out
    }

    /// Relations map to zero; Delta and the counit commute with the map on
    /// generators. None on success, otherwise a witness.
    pub fn check(&self) -> Option<String> {
        let f = self.target.field();
        for rel in &self.source.alg.system.relations {
            let mut sum = Element::zero();
            for (c, w) in &rel.sum {
                let m = self.apply_word(w);
                sum.add_assign(f, &m.scale(f, *c));
            }
            if !sum.is_zero() {
                return Some(format!(
                    "relation `{}` maps to {}",
                    rel.source,
                    self.target.alg.show(&sum)
                ));
            }
        }
        for g in 0..self.source.alg.num_gens() {
            let gname = self.source.alg.system.gen_name(g as GenId);
            // Delta_B(f(g)) = (f (x) f)(Delta_A(g))
            let lhs = self.target.coproduct(&self.images[g]);
            let mut rhs = Tensor2::zero();
            for ((m1, m2), &c) in &self.source.data.delta[g].terms {
                let t = Tensor2::from_elements(
                    &self.target.alg,
                    &self.apply_monomial(m1),
                    &self.apply_monomial(m2),
                );
                rhs.add_assign(f, &t.scale(f, c));
            }
            if lhs != rhs {
                return Some(format!("coproduct does not commute with the map on `{gname}`"));
            }
            let eps_lhs = self.target.counit(&self.images[g]);
            if eps_lhs != self.source.data.counit[g] {
                return Some(format!("counit does not commute with the map on `{gname}`"));
            }
        }
        None
    }

    fn apply_word(&self, w: &[(GenId, i32)]) -> Element {
        let mut acc = self.target.alg.one();
        for &(g, e) in w {
            let img = if e >= 0 {
                self.target.alg.pow(&self.images[g as usize], e as u32)
            } else {
                let inv = self.inv_images[g as usize].as_ref().expect("inverse image");
                self.target.alg.pow(inv, (-e) as u32)
            };
            acc = self.target.alg.mul(&acc, &img);
        }
        acc
    }
}

fn source_one(h: &Hopf) -> Element {
    h.alg.one()
}

/// Parse `a b + c^2 + 1` as an element of the algebra.
pub fn parse_sum_in(alg: &Algebra, src: &str) -> Result<Element> {
    let mut out = Element::zero();
    for term in src.split('+') {
        let term = term.trim();
        if term == "0" {
            continue;
        }
        let e = if term == "1" { alg.one() } else { alg.element(term)? };
        out.add_assign(&alg.field, &e);
    }
    Ok(out)
}

/// Outcome of the four-stage exactness check for K -> A -> B.
#[derive(Debug)]
pub struct SequenceReport {
    pub map_ok: Option<String>,
    pub dims_ok: Option<String>,
    pub kernel_ok: Option<String>,
    pub coinvariants_ok: Option<String>,
    pub kernel_dim: usize,
}

impl SequenceReport {
    pub fn all_pass(&self) -> bool {
        self.map_ok.is_none()
            && self.dims_ok.is_none()
            && self.kernel_ok.is_none()
            && self.coinvariants_ok.is_none()
    }
}

/// Exactness of a sequence of finite-dimensional Hopf algebras:
/// (i) pi is a Hopf map, (ii) dim K * dim B = dim A,
/// (iii) A K+ = ker pi, (iv) K = A^{co pi}.
pub fn exact_sequence_check(
    sub_basis: &[Element],
    a: &Hopf,
    pi: &Morphism,
) -> SequenceReport {
    let f = a.field();
    let b = pi.target;
    let map_ok = pi.check();

    let dims_ok = if sub_basis.len() * b.alg.dim() == a.alg.dim() {
        None
    } else {
        Some(format!("{} * {} != {}", sub_basis.len(), b.alg.dim(), a.alg.dim()))
    };

    // matrix of pi on the basis of A
    let mut pim = Matrix::zero(f, b.alg.dim(), a.alg.dim());
    for (j, m) in a.alg.basis.iter().enumerate() {
        let img = pi.apply_monomial(m);
        for (mono, &c) in &img.terms {
            pim.set(b.alg.basis_index(mono), j, c);
        }
    }
    let rank = pim.rank(f);
    let kernel_dim = a.alg.dim() - rank;

    // span of A * K+ (K+ spanned by k - eps(k) 1)
    let mut ak = Subspace::empty(f, a.alg.dim());
    let kplus: Vec<Element> = sub_basis
        .iter()
        .map(|k| {
            let eps = a.counit(k);
            k.add(f, &a.alg.one().scale(f, eps))
        })
        .filter(|e| !e.is_zero())
        .collect();
    for am in &a.alg.basis {
        let ae = Element::from_monomial(am.clone(), Fq::ONE);
        for kp in &kplus {
            let prod = a.alg.mul(&ae, kp);
            ak.insert(f, &a.alg.to_vec(&prod));
        }
    }
    // pi kills A K+ automatically; equality needs matching dimension
    let kernel_ok = if ak.dim() == kernel_dim {
        None
    } else {
        Some(format!("dim A K+ = {} but dim ker pi = {}", ak.dim(), kernel_dim))
    };

    // coinvariants: x with (id (x) pi) Delta(x) = x (x) 1
    let bone = b.alg.basis_index(&Monomial::one(b.alg.num_gens()));
    let coords = a.alg.dim() * b.alg.dim();
    let mut sys = Matrix::zero(f, coords, a.alg.dim());
    for (j, m) in a.alg.basis.iter().enumerate() {
        let mut row: HashMap<(usize, usize), Fq> = HashMap::new();
        for ((m1, m2), &c) in &a.delta_monomial(m).terms {
            let img = pi.apply_monomial(m2);
            for (bm, &bc) in &img.terms {
                let key = (a.alg.basis_index(m1), b.alg.basis_index(bm));
                let v = row.entry(key).or_insert(Fq::ZERO);
                *v = f.add(*v, f.mul(c, bc));
            }
        }
        let key = (j, bone);
        let v = row.entry(key).or_insert(Fq::ZERO);
        *v = f.add(*v, Fq::ONE); // subtract x (x) 1
        for ((ai, bi), c) in row {
            sys.set(ai * b.alg.dim() + bi, j, c);
        }
    }
    let red = sys.row_reduce(f);
    let coinv_dim = red.kernel.cols();
    let mut coinv = Subspace::empty(f, a.alg.dim());
    for c in 0..red.kernel.cols() {
        coinv.insert(f, &red.kernel.col(c));
    }
    let mut sub_span = Subspace::empty(f, a.alg.dim());
    for k in sub_basis {
        sub_span.insert(f, &a.alg.to_vec(k));
    }
    let coinvariants_ok = if coinv == sub_span {
        None
    } else {
        Some(format!(
            "coinvariants have dim {} vs subalgebra dim {}",
            coinv_dim,
            sub_span.dim()
        ))
    };

    SequenceReport { map_ok, dims_ok, kernel_ok, coinvariants_ok, kernel_dim }
}

/// Left and right integral spaces of a finite-dimensional Hopf algebra,
/// found from the generator conditions x L = eps(x) L.
pub fn integral_spaces(h: &Hopf) -> (Subspace, Subspace, bool) {
    let f = h.field();
    let n = h.alg.dim();
    let gens: Vec<Element> =
        (0..h.alg.num_gens()).map(|g| Element::generator(h.alg.num_gens(), g as GenId)).collect();
    let stack = |left: bool| {
        let mut m = Matrix::zero(f, n * gens.len(), n);
        for (gi, g) in gens.iter().enumerate() {
            let mut op = if left { h.alg.left_mult_matrix(g) } else { h.alg.right_mult_matrix(g) };
            let eps = h.data.counit[gi];
            for d in 0..n {
                op.set(d, d, f.add(op.get(d, d), eps));
            }
            for r in 0..n {
                for c in 0..n {
                    let v = op.get(r, c);
                    if !v.is_zero() {
                        m.set(gi * n + r, c, v);
                    }
                }
            }
        }
        let red = m.row_reduce(f);
        let mut s = Subspace::empty(f, n);
        for c in 0..red.kernel.cols() {
            s.insert(f, &red.kernel.col(c));
        }
        s
    };
    let left = stack(true);
    let right = stack(false);
    let uni = left == right;
    (left, right, uni)
}

/// Coproducts, counits and antipodes of the shipped Hopf presets.
pub fn hopf_data_for(alg: &Algebra) -> Result<HopfData> {
    let n = alg.num_gens();
    let mut delta: Vec<Option<Tensor2>> = vec![None; n];
    let mut counit = vec![Fq::ZERO; n];
    let mut antipode: Vec<Option<Element>> = vec![None; n];
    let t2 = |pairs: &[(&str, &str)]| -> Result<Tensor2> {
        let f = &alg.field;
        let mut t = Tensor2::zero();
        for (l, r) in pairs {
            let le = parse_sum_in(alg, l)?;
            let re = parse_sum_in(alg, r)?;
            t.add_assign(f, &Tensor2::from_elements(alg, &le, &re));
        }
        Ok(t)
    };
    let mut set = |name: &str,
                   d: Tensor2,
                   eps: Fq,
                   s: Element|
     -> Result<()> {
        let g = alg.system.gen_id(name)? as usize;
        delta[g] = Some(d);
        counit[g] = eps;
        antipode[g] = Some(s);
        Ok(())
    };

    let primitive = |name: &str| -> Result<Tensor2> { t2(&[(name, "1"), ("1", name)]) };

    match alg.name.as_str() {
        "um" | "UG" => {
            for gname in ["a", "b", "c"] {
                set(gname, primitive(gname)?, Fq::ZERO, alg.element(gname)?)?;
            }
        }
        "H" | "Htilde" => {
            set("g", t2(&[("g", "g")])?, Fq::ONE, alg.element("g^-1")?)?;
            set("x1", t2(&[("x1", "1"), ("g", "x1")])?, Fq::ZERO, alg.element("g^-1 x1")?)?;
            set("x2", t2(&[("x2", "1"), ("g", "x2")])?, Fq::ZERO, alg.element("g^-1 x2")?)?;
            set(
                "x21",
                t2(&[("x21", "1"), ("g^2", "x21"), ("x1 g", "x1")])?,
                Fq::ZERO,
                alg.element("g^-2 x21")?,
            )?;
        }
        "Hstar" | "Ktilde" => {
            let zeta = if alg.name == "Hstar" { "gamma" } else { "zeta" };
            set(zeta, primitive(zeta)?, Fq::ZERO, alg.element(zeta)?)?;
            set("w1", primitive("w1")?, Fq::ZERO, alg.element("w1")?)?;
            set(
                "w21",
                t2(&[("w21", "1"), ("1", "w21"), ("w1", "w1")])?,
                Fq::ZERO,
                alg.element("w21")?,
            )?;
            let sw2 = parse_sum_in(alg, &format!("w2 + {zeta} w1"))?;
            set("w2", t2(&[("w2", "1"), ("1", "w2"), (zeta, "w1")])?, Fq::ZERO, sw2)?;
        }
        "DH" | "Dtilde" => {
            let zeta = if alg.name == "DH" { "gamma" } else { "zeta" };
            set("g", t2(&[("g", "g")])?, Fq::ONE, alg.element("g^-1")?)?;
            set("x1", t2(&[("x1", "1"), ("g", "x1")])?, Fq::ZERO, alg.element("g^-1 x1")?)?;
            set("x2", t2(&[("x2", "1"), ("g", "x2")])?, Fq::ZERO, alg.element("g^-1 x2")?)?;
            set(
                "x21",
                t2(&[("x21", "1"), ("g^2", "x21"), ("x1 g", "x1")])?,
                Fq::ZERO,
                alg.element("g^-2 x21")?,
            )?;
            set(zeta, primitive(zeta)?, Fq::ZERO, alg.element(zeta)?)?;
            set("w1", primitive("w1")?, Fq::ZERO, alg.element("w1")?)?;
            set(
                "w21",
                t2(&[("w21", "1"), ("1", "w21"), ("w1", "w1")])?,
                Fq::ZERO,
                alg.element("w21")?,
            )?;
            let sw2 = parse_sum_in(alg, &format!("w2 + {zeta} w1"))?;
            set("w2", t2(&[("w2", "1"), ("1", "w2"), (zeta, "w1")])?, Fq::ZERO, sw2)?;
        }
        "Kappa" => {
            set("g", t2(&[("g", "g")])?, Fq::ONE, alg.element("g")?)?;
            set("x1", t2(&[("x1", "1"), ("g", "x1")])?, Fq::ZERO, alg.element("g x1")?)?;
            set(
                "x21",
                t2(&[("x21", "1"), ("1", "x21"), ("x1 g", "x1")])?,
                Fq::ZERO,
                alg.element("x21")?,
            )?;
            set("w1", primitive("w1")?, Fq::ZERO, alg.element("w1")?)?;
            set(
                "w21",
                t2(&[("w21", "1"), ("1", "w21"), ("w1", "w1")])?,
                Fq::ZERO,
                alg.element("w21")?,
            )?;
        }
        "OG" => {
            set("T", t2(&[("T", "T")])?, Fq::ONE, alg.element("T^-1")?)?;
            set("X1", t2(&[("X1", "1"), ("T^2", "X1")])?, Fq::ZERO, alg.element("T^-2 X1")?)?;
            set("X2", primitive("X2")?, Fq::ZERO, alg.element("X2")?)?;
        }
        "OGfrak" => {
            set("T", t2(&[("T", "T")])?, Fq::ONE, alg.element("T^-1")?)?;
            set(
                "X1",
                t2(&[("X1", "1"), ("T^2", "X1"), ("Y1 T", "Y1")])?,
                Fq::ZERO,
                alg.element("T^-2 X1")?,
            )?;
            set("Y1", t2(&[("Y1", "1"), ("T", "Y1")])?, Fq::ZERO, alg.element("T^-1 Y1")?)?;
            set(
                "X2",
                t2(&[("X2", "1"), ("1", "X2"), ("Y2", "Y2")])?,
                Fq::ZERO,
                alg.element("X2")?,
            )?;
            set("Y2", primitive("Y2")?, Fq::ZERO, alg.element("Y2")?)?;
        }
        "OB" => {
            set("T", t2(&[("T", "T")])?, Fq::ONE, alg.element("T^-1")?)?;
            set("X1", t2(&[("X1", "1"), ("T^2", "X1")])?, Fq::ZERO, alg.element("T^-2 X1")?)?;
            set("X2", primitive("X2")?, Fq::ZERO, alg.element("X2")?)?;
            set("X3", t2(&[("X3", "1"), ("T^2", "X3")])?, Fq::ZERO, alg.element("T^-2 X3")?)?;
            let sx4 = parse_sum_in(alg, "X4 + X5 X2")?;
            set("X4", t2(&[("X4", "1"), ("1", "X4"), ("X5", "X2")])?, Fq::ZERO, sx4)?;
            set("X5", primitive("X5")?, Fq::ZERO, alg.element("X5")?)?;
        }
        "OGa3" => {
            for gname in ["X1", "X2", "X3"] {
                set(gname, primitive(gname)?, Fq::ZERO, alg.element(gname)?)?;
            }
        }
        other => {
            return Err(Error::Parameter(format!("preset `{other}` carries no Hopf structure")))
        }
    }

    let delta: Option<Vec<Tensor2>> = delta.into_iter().collect();
    let antipode: Option<Vec<Element>> = antipode.into_iter().collect();
    match (delta, antipode) {
        (Some(delta), Some(antipode)) => Ok(HopfData { delta, counit, antipode }),
        _ => Err(Error::Parameter(format!("incomplete Hopf data for {}", alg.name))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn hopf(name: &str) -> Hopf {
        Hopf::build(name, &Field::gf2(), 4).unwrap()
    }

    #[test]
    fn coproduct_examples_in_h() {
        let h = hopf("H");
        let g = h.alg.gen_element("g").unwrap();
        let dg = h.coproduct(&g);
        assert_eq!(dg.terms.len(), 1);
        let one = h.alg.one();
        let done = h.coproduct(&one);
        assert_eq!(done.terms.len(), 1);
        assert_eq!(h.counit(&one), Fq::ONE);
    }

    #[test]
    fn hopf_axioms_on_small_presets() {
        for name in ["um", "H", "Hstar", "Kappa"] {
            let h = hopf(name);
            let fails = h.check_axioms(&h.alg.basis.clone());
            assert!(fails.is_empty(), "{name}: {fails:?}");
        }
    }

    #[test]
    fn um_antipode_is_involutive_identity() {
        let h = hopf("um");
        assert!(h.s2_deviation(&h.alg.basis.clone(), None).is_empty());
    }

    #[test]
    fn double_s2_is_conjugation_by_g() {
        let h = hopf("DH");
        let g = h.alg.gen_element("g").unwrap();
        let fails = h.s2_deviation(&h.alg.basis.clone(), Some(&g));
        assert!(fails.is_empty(), "{:?}", fails.first());
        // and S^2(x2) = g x2 g^{-1} explicitly
        let x2 = h.alg.gen_element("x2").unwrap();
        let s2 = h.antipode(&h.antipode(&x2));
        let conj = h.alg.mul(&g, &h.alg.mul(&x2, &g));
        assert_eq!(s2, conj);
    }

    #[test]
    fn adjoint_of_x2_span_in_h_is_unstable() {
        let h = hopf("H");
        let f = h.field();
        let x2 = h.alg.gen_element("x2").unwrap();
        // span{1, x2, x2^2, x2^3}
        let sub: Vec<Element> =
            (0..4).map(|e| h.alg.pow(&x2, e)).collect();
        let mut span = Subspace::empty(f, h.alg.dim());
        for s in &sub {
            span.insert(f, &h.alg.to_vec(s));
        }
        let wit = h.adjoint_stable(&sub, |e| span.contains(f, &h.alg.to_vec(e)));
        assert!(wit.is_some());
        // the witness: ad_g(x2) = x2 + x1
        let g = h.alg.gen_element("g").unwrap();
        let ad = h.adjoint(&g, &x2);
        let x1 = h.alg.gen_element("x1").unwrap();
        assert_eq!(ad, x2.add(f, &x1));
    }

    #[test]
    fn trivial_exact_sequence() {
        let h = hopf("um");
        let pi = Morphism::new(&h, &h, &[("a", "a"), ("b", "b"), ("c", "c")]).unwrap();
        let report = exact_sequence_check(&[h.alg.one()], &h, &pi);
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.kernel_dim, 0);
    }

    #[test]
    fn group_algebra_integrals() {
        // k[Gamma] with Gamma of order 2: integral spans 1 + g, unimodular
        let pres = crate::presentation::parse("kGamma", "gen g periodic 2 0\n").unwrap();
        let f = Field::gf2();
        let alg = Algebra::from_system("kGamma", &f, pres.into_system().unwrap(), 4).unwrap();
        let mut delta = Vec::new();
        delta.push(Tensor2::from_elements(
            &alg,
            &alg.gen_element("g").unwrap(),
            &alg.gen_element("g").unwrap(),
        ));
        let data =
            HopfData { delta, counit: vec![Fq::ONE], antipode: vec![alg.gen_element("g").unwrap()] };
        let h = Hopf::from_parts(alg, data);
        let (left, right, uni) = integral_spaces(&h);
        assert!(uni);
        assert_eq!(left.dim(), 1);
        let lambda = h.alg.one().add(h.field(), &h.alg.gen_element("g").unwrap());
        assert!(left.contains(h.field(), &h.alg.to_vec(&lambda)));
        let _ = right;
    }

    #[test]
    fn dtilde_axioms_on_generators_and_samples() {
        let h = Hopf::build("Dtilde", &Field::gf2(), 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let probes = h.probe_monomials(&mut rng, 3, 60);
        let fails = h.check_axioms(&probes);
        assert!(fails.is_empty(), "{:?}", fails.first());
    }

    #[test]
    fn dtilde_s4_is_identity() {
        let h = Hopf::build("Dtilde", &Field::gf2(), 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let probes = h.probe_monomials(&mut rng, 3, 40);
        for m in probes {
            let e = Element::from_monomial(m.clone(), Fq::ONE);
            let s4 = h.antipode(&h.antipode(&h.antipode(&h.antipode(&e))));
            assert_eq!(s4, e, "S^4 != id on {:?}", m);
        }
    }
}
