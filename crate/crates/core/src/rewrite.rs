//! PBW straightening: oriented rewrite rules, normal forms, bounded
//! completion and local-confluence certification.
//!
//! Rules act on adjacent generator-power blocks. A base rule rewrites a
//! two-letter word `u v`; powers `u^j v^i` are derived on demand and
//! memoized. Invertible generators cross other generators through a
//! parity conjugation schema, which is what keeps words with g^n, n in Z,
//! rewritable without enumerating letters of negative sign.

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::monomial::{cmp_words, Cap, Element, GenId, GeneratorSpec, Monomial, Word};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::RwLock;

/// A linear combination of raw words, as read from a presentation file.
pub type WordSum = Vec<(Fq, Word)>;

#[derive(Clone, Debug)]
pub enum PairRule {
    /// u v -> sum of words
    Unit(WordSum),
    /// t^e v -> phi^(e mod 2)(v) t^e for the invertible generator t
    ConjLeft { odd: Element },
    /// u t^e -> t^e psi^(e mod 2)(u)
    ConjRight { odd: Element },
}

#[derive(Clone, Debug)]
pub struct Relation {
    /// lhs + rhs moved to one side; the relation asserts this sum is 0.
    pub sum: WordSum,
    pub source: String,
    pub oriented: bool,
}

#[derive(Debug, Clone)]
pub struct CriticalPair {
    pub word: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug)]
pub struct ConfluenceReport {
    pub bound: i32,
    pub base_rules: usize,
    pub derived_rules: usize,
    pub overlaps_checked: usize,
    pub unresolved: Vec<CriticalPair>,
    pub soundness_failures: Vec<String>,
}

impl ConfluenceReport {
    pub fn is_certified(&self) -> bool {
        self.unresolved.is_empty() && self.soundness_failures.is_empty()
    }
}

pub struct RewriteSystem {
    gens: Vec<GeneratorSpec>,
    names: HashMap<String, GenId>,
    rules: HashMap<(GenId, GenId), PairRule>,
    pub relations: Vec<Relation>,
    pair_memo: RwLock<HashMap<(GenId, i32, GenId, i32), Element>>,
    mono_memo: RwLock<HashMap<(Monomial, Monomial), Element>>,
    mono_memo_cap: usize,
}

enum Redex {
    CapFold(usize),
    Pair(usize),
}

impl RewriteSystem {
    pub fn new(gens: Vec<GeneratorSpec>) -> RewriteSystem {
        let names = gens.iter().enumerate().map(|(i, g)| (g.name.clone(), i as GenId)).collect();
        RewriteSystem {
            gens,
            names,
            rules: HashMap::new(),
            relations: Vec::new(),
            pair_memo: RwLock::new(HashMap::new()),
            mono_memo: RwLock::new(HashMap::new()),
            mono_memo_cap: 1 << 19,
        }
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn gen_name(&self, g: GenId) -> &str {
        &self.gens[g as usize].name
    }

    pub fn gen_id(&self, name: &str) -> Result<GenId> {
        self.names.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn has_rule(&self, u: GenId, v: GenId) -> bool {
        self.rules.contains_key(&(u, v))
    }

    pub fn rules(&self) -> &HashMap<(GenId, GenId), PairRule> {
        &self.rules
    }

    pub fn word_to_string(&self, w: &[(GenId, i32)]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.gen_name(g).to_string()
                } else {
                    format!("{}^{}", self.gen_name(g), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn element_to_string(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.terms
            .iter()
            .map(|(m, c)| {
                let w = self.word_to_string(&m.to_word());
                if *c == Fq::ONE {
                    w
                } else {
                    format!("{c} {w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Install a base rule for the adjacent pair (u, v). The rule must be
    /// strictly decreasing in the word order; checked on every application.
    pub fn add_rule(&mut self, u: GenId, v: GenId, rhs: WordSum) -> Result<()> {
        // invertible generators cross through a parity conjugation schema
        let u_int = self.gens[u as usize].cap == Cap::UnboundedInt;
        let v_int = self.gens[v as usize].cap == Cap::UnboundedInt;
        let rule = if u_int {
            let odd = self.conj_image(&rhs, u, true)?;
            PairRule::ConjLeft { odd }
        } else if v_int {
            let odd = self.conj_image(&rhs, v, false)?;
            PairRule::ConjRight { odd }
        } else {
            PairRule::Unit(rhs)
        };
        self.rules.insert((u, v), rule);
        Ok(())
    }

    /// Strip the invertible generator from each term of rhs, leaving the
    /// one-letter image of the crossing generator.
    fn conj_image(&self, rhs: &WordSum, t: GenId, t_trailing: bool) -> Result<Element> {
        let field = Field::gf2(); // coefficients of presentation rules are 0/1
        let mut img = Element::zero();
        for (c, w) in rhs {
            let stripped: Word = match (t_trailing, w.as_slice()) {
                (true, [rest @ .., (g, 1)]) if *g == t => rest.to_vec(),
                (false, [(g, 1), rest @ ..]) if *g == t => rest.to_vec(),
                _ => {
                    return Err(Error::Parameter(format!(
                        "rule crossing invertible `{}` must have every term {} it",
                        self.gen_name(t),
                        if t_trailing { "ending with" } else { "starting with" },
                    )))
                }
            };
            if stripped.len() != 1 || stripped[0].1 != 1 {
                return Err(Error::Parameter(format!(
                    "conjugation image must be a single letter, got `{}`",
                    self.word_to_string(&stripped)
                )));
            }
            let m = Monomial::gen(self.num_gens(), stripped[0].0, 1);
            img.add_term(&field, m, *c);
        }
        Ok(img)
    }

    /// Verify that the parity conjugations are involutive on the letters
    /// they move, so that g^n with negative n is handled correctly.
    pub fn check_conj_involutive(&self) -> Result<()> {
        let field = Field::gf2();
        for (&(u, v), rule) in &self.rules {
            let (t, moved, t_left) = match rule {
                PairRule::ConjLeft { .. } => (u, v, true),
                PairRule::ConjRight { .. } => (v, u, false),
                PairRule::Unit(_) => continue,
            };
            let phi = |letter: GenId| -> Result<Element> {
                let key = if t_left { (t, letter) } else { (letter, t) };
                match self.rules.get(&key) {
                    Some(PairRule::ConjLeft { odd }) | Some(PairRule::ConjRight { odd }) => {
                        Ok(odd.clone())
                    }
                    Some(PairRule::Unit(_)) => Err(Error::Parameter(format!(
                        "generator `{}` crosses `{}` without a conjugation schema",
                        self.gen_name(letter),
                        self.gen_name(t)
                    ))),
                    None => Ok(Element::generator(self.num_gens(), letter)),
                }
            };
            let mut twice = Element::zero();
            for (m, &c) in &phi(moved)?.terms {
                let blocks: Vec<_> = m.blocks().collect();
                if blocks.len() != 1 || blocks[0].1 != 1 {
                    return Err(Error::Parameter("conjugation image is not a letter".into()));
                }
                twice.add_assign(&field, &phi(blocks[0].0)?.scale(&field, c));
            }
            if twice != Element::generator(self.num_gens(), moved) {
                return Err(Error::Parameter(format!(
                    "conjugation by `{}` is not involutive on `{}`",
                    self.gen_name(t),
                    self.gen_name(moved)
                )));
            }
        }
        Ok(())
    }

    /// Merge adjacent equal-generator blocks and fold caps. None means the
    /// word was killed by a nilpotent cap.
    fn canonicalize(&self, w: &[(GenId, i32)]) -> Option<Word> {
        let mut out: Word = Vec::with_capacity(w.len());
        for &blk in w {
            let mut cur = blk;
            loop {
                if cur.1 == 0 {
                    break;
                }
                match self.fold_block(cur)? {
                    Some(folded) => {
                        cur = folded;
                        if cur.1 == 0 {
                            break;
                        }
                    }
                    None => {}
                }
                match out.last() {
                    Some(&(lg, le)) if lg == cur.0 => {
                        out.pop();
                        cur = (cur.0, le + cur.1);
                    }
                    _ => {
                        out.push(cur);
                        break;
                    }
                }
            }
        }
        Some(out)
    }

    /// None = killed by nilpotent cap; Some(Some(b)) = folded; Some(None) = unchanged.
    #[allow(clippy::option_option)]
    fn fold_block(&self, (g, e): (GenId, i32)) -> Option<Option<(GenId, i32)>> {
        match self.gens[g as usize].cap {
            Cap::Nilpotent(n) => {
                assert!(e >= 0, "negative exponent on nilpotent generator {}", self.gen_name(g));
                if e >= n {
                    None
                } else {
                    Some(None)
                }
            }
            Cap::Periodic { period, replacement } => {
                if replacement == 0 {
                    // x^period = 1: the generator is invertible
                    let folded = e.rem_euclid(period);
                    if folded == e {
                        Some(None)
                    } else {
                        Some(Some((g, folded)))
                    }
                } else {
                    assert!(
                        e >= 0,
                        "negative exponent on periodic generator {}",
                        self.gen_name(g)
                    );
                    if e >= period {
                        let folded = (e - replacement) % (period - replacement) + replacement;
                        Some(Some((g, folded)))
                    } else {
                        Some(None)
                    }
                }
            }
            Cap::UnboundedNat => {
                assert!(e >= 0, "negative exponent on generator {}", self.gen_name(g));
                Some(None)
            }
            Cap::UnboundedInt => Some(None),
        }
    }

    fn first_pair_redex(&self, w: &[(GenId, i32)]) -> Option<usize> {
        w.windows(2).position(|pair| self.rules.contains_key(&(pair[0].0, pair[1].0)))
    }

    /// All redexes of a raw word: cap folds and rule pairs.
    fn all_redexes(&self, w: &[(GenId, i32)]) -> Vec<Redex> {
        let mut out = Vec::new();
        for (i, &(g, e)) in w.iter().enumerate() {
            match self.gens[g as usize].cap {
                Cap::Nilpotent(n) if e >= n => out.push(Redex::CapFold(i)),
                Cap::Periodic { period, .. } if e >= period => out.push(Redex::CapFold(i)),
                _ => {}
            }
        }
        for i in 0..w.len().saturating_sub(1) {
            if self.rules.contains_key(&(w[i].0, w[i + 1].0)) {
                out.push(Redex::Pair(i));
            }
        }
        out
    }

    /// Perform one rewrite step at the given redex. Asserts the order drops.
    fn one_step(&self, field: &Field, w: &[(GenId, i32)], redex: &Redex) -> Vec<(Fq, Word)> {
        let produced: Vec<(Fq, Word)> = match *redex {
            Redex::CapFold(i) => {
                let (g, e) = w[i];
                match self.gens[g as usize].cap {
                    Cap::Nilpotent(n) => {
                        assert!(e >= n);
                        vec![]
                    }
                    Cap::Periodic { period, replacement } => {
                        assert!(e >= period);
                        let folded = (e - replacement) % (period - replacement) + replacement;
                        let mut nw = w.to_vec();
                        if folded == 0 {
                            nw.remove(i);
                        } else {
                            nw[i] = (g, folded);
                        }
                        vec![(Fq::ONE, nw)]
                    }
                    _ => unreachable!(),
                }
            }
            Redex::Pair(i) => {
                let (u, ju) = w[i];
                let (v, iv) = w[i + 1];
                let prefix = &w[..i];
                let suffix = &w[i + 2..];
                let splice = |mid: &[(GenId, i32)]| -> Word {
                    prefix.iter().chain(mid.iter()).chain(suffix.iter()).copied().collect()
                };
                match self.rules.get(&(u, v)).expect("redex has a rule") {
                    PairRule::Unit(rhs) => {
                        // peel one letter off each block
                        let mut terms = Vec::new();
                        for (c, rw) in rhs {
                            let mut mid: Word = Vec::new();
                            if ju > 1 {
                                mid.push((u, ju - 1));
                            }
                            mid.extend_from_slice(rw);
                            if iv > 1 {
                                mid.push((v, iv - 1));
                            }
                            terms.push((*c, splice(&mid)));
                        }
                        terms
                    }
                    PairRule::ConjLeft { odd } => {
                        // t^e v^i -> phi^e(v) t^e v^(i-1)
                        let img = if ju.rem_euclid(2) == 1 {
                            odd.clone()
                        } else {
                            Element::generator(self.num_gens(), v)
                        };
                        img.terms
                            .iter()
                            .map(|(m, &c)| {
                                let mut mid = m.to_word();
                                mid.push((u, ju));
                                if iv > 1 {
                                    mid.push((v, iv - 1));
                                }
                                (c, splice(&mid))
                            })
                            .collect()
                    }
                    PairRule::ConjRight { odd } => {
                        // u^j t^e -> u^(j-1) t^e psi^e(u)
                        let img = if iv.rem_euclid(2) == 1 {
                            odd.clone()
                        } else {
                            Element::generator(self.num_gens(), u)
                        };
                        img.terms
                            .iter()
                            .map(|(m, &c)| {
                                let mut mid: Word = Vec::new();
                                if ju > 1 {
                                    mid.push((u, ju - 1));
                                }
                                mid.push((v, iv));
                                mid.extend(m.to_word());
                                (c, splice(&mid))
                            })
                            .collect()
                    }
                }
            }
        };
        let _ = field;
        for (_, nw) in &produced {
            assert_eq!(
                cmp_words(nw, w),
                Ordering::Less,
                "rewrite step does not decrease the order: {} -> {}",
                self.word_to_string(w),
                self.word_to_string(nw),
            );
        }
        produced
    }

    /// Memoized normal form of the two-block word u^ju v^iv.
    fn pair_nf(&self, field: &Field, u: GenId, ju: i32, v: GenId, iv: i32) -> Element {
        let key = (u, ju, v, iv);
        if let Some(e) = self.pair_memo.read().unwrap().get(&key) {
            return e.clone();
        }
        let w: Word = vec![(u, ju), (v, iv)];
        let terms = self.one_step(field, &w, &Redex::Pair(0));
        let mut out = Element::zero();
        for (c, tw) in terms {
            out.add_assign(field, &self.normal_form_word(field, &tw).scale(field, c));
        }
        self.pair_memo.write().unwrap().insert(key, out.clone());
        out
    }

    /// Reduce a word to its normal form.
    pub fn normal_form_word(&self, field: &Field, word: &[(GenId, i32)]) -> Element {
        let mut out = Element::zero();
        let mut stack: Vec<(Fq, Word)> = vec![(Fq::ONE, word.to_vec())];
        while let Some((c, w)) = stack.pop() {
            let Some(w) = self.canonicalize(&w) else { continue };
            match self.first_pair_redex(&w) {
                None => {
                    out.add_term(field, self.word_to_monomial(&w), c);
                }
                Some(i) => {
                    let (u, ju) = w[i];
                    let (v, iv) = w[i + 1];
                    if matches!(self.rules[&(u, v)], PairRule::Unit(_)) {
                        let sub = self.pair_nf(field, u, ju, v, iv);
                        for (m, &mc) in &sub.terms {
                            let mut nw: Word = w[..i].to_vec();
                            nw.extend(m.to_word());
                            nw.extend_from_slice(&w[i + 2..]);
                            stack.push((field.mul(c, mc), nw));
                        }
                    } else {
                        for (tc, tw) in self.one_step(field, &w, &Redex::Pair(i)) {
                            stack.push((field.mul(c, tc), tw));
                        }
                    }
                }
            }
        }
        out
    }

    fn word_to_monomial(&self, w: &[(GenId, i32)]) -> Monomial {
        let mut m = Monomial::one(self.num_gens());
        let mut last: i32 = -1;
        for &(g, e) in w {
            assert!(
                (g as i32) > last,
                "irreducible word `{}` is not PBW-sorted; rule table is incomplete",
                self.word_to_string(w)
            );
            last = g as i32;
            m.exps[g as usize] = e;
        }
        m
    }

    pub fn normal_form_sum(&self, field: &Field, sum: &[(Fq, Word)]) -> Element {
        let mut out = Element::zero();
        for (c, w) in sum {
            out.add_assign(field, &self.normal_form_word(field, w).scale(field, *c));
        }
        out
    }

    pub fn normal_form_element(&self, field: &Field, e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, &c) in &e.terms {
            out.add_assign(field, &self.normal_form_word(field, &m.to_word()).scale(field, c));
        }
        out
    }

    /// Product of two normal monomials, memoized.
    pub fn mul_monomials(&self, field: &Field, a: &Monomial, b: &Monomial) -> Element {
        if a.is_one() {
            return Element::from_monomial(b.clone(), Fq::ONE);
        }
        if b.is_one() {
            return Element::from_monomial(a.clone(), Fq::ONE);
        }
        let key = (a.clone(), b.clone());
        if let Some(e) = self.mono_memo.read().unwrap().get(&key) {
            return e.clone();
        }
        let mut w = a.to_word();
        w.extend(b.to_word());
        let out = self.normal_form_word(field, &w);
        let mut memo = self.mono_memo.write().unwrap();
        if memo.len() < self.mono_memo_cap {
            memo.insert(key, out.clone());
        }
        out
    }

    pub fn mul(&self, field: &Field, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, &ca) in &a.terms {
            for (mb, &cb) in &b.terms {
                let c = field.mul(ca, cb);
                out.add_assign(field, &self.mul_monomials(field, ma, mb).scale(field, c));
            }
        }
        out
    }

    pub fn pow(&self, field: &Field, a: &Element, e: u32) -> Element {
        let mut acc = Element::one(self.num_gens());
        for _ in 0..e {
            acc = self.mul(field, &acc, a);
        }
        acc
    }

    /// True if the exponent vector is a normal monomial of this system.
    pub fn is_normal(&self, m: &Monomial) -> bool {
        for (g, e) in m.blocks() {
            match self.gens[g as usize].cap {
                Cap::Nilpotent(n) if e < 0 || e >= n => return false,
                Cap::Periodic { period, .. } if e < 0 || e >= period => return false,
                Cap::UnboundedNat if e < 0 => return false,
                _ => {}
            }
        }
        let blocks: Vec<_> = m.blocks().collect();
        blocks.windows(2).all(|p| !self.rules.contains_key(&(p[0].0, p[1].0)))
    }

    /// Enumerate normal monomials. For systems with unbounded generators a
    /// total-degree bound is required.
    pub fn enumerate_basis(&self, degree_bound: Option<i64>) -> Result<Vec<Monomial>> {
        if degree_bound.is_none() {
            if let Some(g) = self.gens.iter().find(|g| !g.cap.is_finite()) {
                return Err(Error::UnboundedBasis(g.name.clone()));
            }
        }
        let mut out = Vec::new();
        let mut current = Monomial::one(self.num_gens());
        self.enum_rec(0, degree_bound.unwrap_or(i64::MAX), &mut current, &mut out);
        out.sort();
        Ok(out)
    }

    fn enum_rec(&self, g: usize, budget: i64, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if g == self.num_gens() {
            if self.is_normal(current) {
                out.push(current.clone());
            }
            return;
        }
        let exps: Vec<i32> = match self.gens[g].cap {
            Cap::Nilpotent(n) => (0..n).collect(),
            Cap::Periodic { period, .. } => (0..period).collect(),
            Cap::UnboundedNat => (0..=budget.min(i32::MAX as i64) as i32).collect(),
            Cap::UnboundedInt => {
                let b = budget.min(i32::MAX as i64) as i32;
                (-b..=b).collect()
            }
        };
        for e in exps {
            let cost = e.unsigned_abs() as i64;
            if cost > budget {
                continue;
            }
            current.exps[g] = e;
            self.enum_rec(g + 1, budget - cost, current, out);
        }
        current.exps[g] = 0;
    }

    /// Check every stored relation normalizes to zero.
    pub fn check_soundness(&self, field: &Field) -> Vec<String> {
        let mut failures = Vec::new();
        for rel in &self.relations {
            let nf = self.normal_form_sum(field, &rel.sum);
            if !nf.is_zero() {
                failures.push(format!("{} -> {}", rel.source, self.element_to_string(&nf)));
            }
        }
        failures
    }

    fn exponent_probe_range(&self, g: GenId, bound: i32) -> Vec<i32> {
        match self.gens[g as usize].cap {
            // include the cap itself so cap/rule overlaps are exercised
            Cap::Nilpotent(n) => (1..=n).collect(),
            Cap::Periodic { period, .. } => (1..=period).collect(),
            Cap::UnboundedNat => (1..=bound).collect(),
            Cap::UnboundedInt => (-bound..=bound).filter(|&e| e != 0).collect(),
        }
    }

    /// All overlap words with exponents up to `bound`, reduced from every
    /// possible first step; any disagreement is a critical pair.
    pub fn certify_local_confluence(&self, field: &Field, bound: i32) -> ConfluenceReport {
        use rayon::prelude::*;
        let mut words: Vec<Word> = Vec::new();
        let pairs: Vec<(GenId, GenId)> = self.rules.keys().copied().collect();
        for &(u, v) in &pairs {
            for ju in self.exponent_probe_range(u, bound) {
                for iv in self.exponent_probe_range(v, bound) {
                    words.push(vec![(u, ju), (v, iv)]);
                }
            }
        }
        for &(t, u) in &pairs {
            for &(u2, v) in &pairs {
                if u2 != u || (t == u && u == v) {
                    continue;
                }
                for a in self.exponent_probe_range(t, bound) {
                    for b in self.exponent_probe_range(u, bound) {
                        for c in self.exponent_probe_range(v, bound) {
                            words.push(vec![(t, a), (u, b), (v, c)]);
                        }
                    }
                }
            }
        }

        // materialize pair powers sequentially so the parallel phase is
        // mostly memo reads
        for &(u, v) in &pairs {
            if matches!(self.rules[&(u, v)], PairRule::Unit(_)) {
                for ju in self.exponent_probe_range(u, bound) {
                    for iv in self.exponent_probe_range(v, bound) {
                        self.pair_nf(field, u, ju, v, iv);
                    }
                }
            }
        }

        let unresolved: Vec<CriticalPair> = words
            .par_iter()
            .filter_map(|w| {
                let mut results: Vec<Element> = Vec::new();
                for redex in self.all_redexes(w) {
                    let mut nf = Element::zero();
                    for (c, tw) in self.one_step(field, w, &redex) {
                        nf.add_assign(field, &self.normal_form_word(field, &tw).scale(field, c));
                    }
                    results.push(nf);
                }
                for r in &results[1..] {
                    if r != &results[0] {
                        return Some(CriticalPair {
                            word: self.word_to_string(w),
                            left: self.element_to_string(&results[0]),
                            right: self.element_to_string(r),
                        });
                    }
                }
                None
            })
            .collect();

        ConfluenceReport {
            bound,
            base_rules: self.rules.len(),
            derived_rules: self.pair_memo.read().unwrap().len(),
            overlaps_checked: words.len(),
            unresolved,
            soundness_failures: self.check_soundness(field),
        }
    }
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RewriteSystem({} gens, {} rules)", self.gens.len(), self.rules.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::load_preset;

    fn system(name: &str) -> RewriteSystem {
        load_preset(name).unwrap().into_system().unwrap()
    }

    fn nf(sys: &RewriteSystem, field: &Field, src: &str) -> String {
        let ids: HashMap<String, GenId> =
            sys.gens().iter().enumerate().map(|(i, g)| (g.name.clone(), i as GenId)).collect();
        let mut word = Vec::new();
        for tok in src.split_whitespace() {
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse().unwrap()),
                None => (tok, 1),
            };
            word.push((ids[name], e));
        }
        sys.element_to_string(&sys.normal_form_word(field, &word))
    }

    #[test]
    fn relbasic_examples_in_um() {
        let sys = system("um");
        let f = Field::gf2();
        assert_eq!(nf(&sys, &f, "b a"), "c + a b");
        assert_eq!(nf(&sys, &f, "b^2 a^2"), "c + a^2 b^2");
        // ba^3 = a^3 b + a^2 (1 + c)
        assert_eq!(nf(&sys, &f, "b a^3"), "a^2 + a^2 c + a^3 b");
    }

    #[test]
    fn squares_vanish_in_h() {
        let sys = system("H");
        let f = Field::gf2();
        assert_eq!(nf(&sys, &f, "x1 x1"), "0");
        assert_eq!(nf(&sys, &f, "x2^4"), "0");
        // an already normal monomial is a fixed point
        assert_eq!(nf(&sys, &f, "x1 x21 x2^3 g"), "x1 x21 x2^3 g");
    }

    #[test]
    fn dimensions_of_finite_presets() {
        for (name, dim) in
            [("um", 32), ("H", 32), ("Hstar", 32), ("DH", 1024), ("Kappa", 32), ("basic", 8), ("quiverQI", 8)]
        {
            let sys = system(name);
            let basis = sys.enumerate_basis(None).unwrap();
            assert_eq!(basis.len(), dim, "dimension of {name}");
        }
    }

    #[test]
    fn finite_presets_locally_confluent() {
        let f = Field::gf2();
        for name in ["um", "H", "Hstar", "Kappa", "basic", "quiverQI"] {
            let sys = system(name);
            let report = sys.certify_local_confluence(&f, 6);
            assert!(report.is_certified(), "{name}: {:?}", report.unresolved.first());
        }
    }

    #[test]
    fn double_locally_confluent() {
        let f = Field::gf2();
        let sys = system("DH");
        let report = sys.certify_local_confluence(&f, 6);
        assert!(report.is_certified(), "{:?}", report.unresolved.first());
    }

    #[test]
    fn invertible_generator_crossings() {
        let sys = system("Htilde");
        let f = Field::gf2();
        // odd powers of g conjugate x2 to x1 + x2, even powers commute
        assert_eq!(nf(&sys, &f, "g^3 x2"), "x1 g^3 + x2 g^3");
        assert_eq!(nf(&sys, &f, "g^-2 x2"), "x2 g^-2");
        assert_eq!(nf(&sys, &f, "g^-1 x2"), "x1 g^-1 + x2 g^-1");
        assert_eq!(nf(&sys, &f, "g g^-1"), "1");
        assert_eq!(nf(&sys, &f, "x2 g^-1 g x1"), "x21 + x1 x2");
    }

    #[test]
    fn htilde_degree_two_enumeration() {
        let sys = system("Htilde");
        let basis = sys.enumerate_basis(Some(2)).unwrap();
        // independent count: vectors (l, m1, m2, n), l <= 1, m1, m2 >= 0,
        // n in Z with l + m1 + m2 + |n| <= 2
        let mut expected = 0;
        for l in 0..=1i64 {
            for m1 in 0..=2i64 {
                for m2 in 0..=2i64 {
                    for n in -2..=2i64 {
                        if l + m1 + m2 + n.abs() <= 2 {
                            expected += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(basis.len(), expected);
        assert_eq!(expected, 19);
    }

    #[test]
    fn associativity_spot_check() {
        use rand::{Rng, SeedableRng};
        let f = Field::gf2();
        for name in ["um", "H", "DH"] {
            let sys = system(name);
            let basis = sys.enumerate_basis(None).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
            for _ in 0..500 {
                let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                    Element::from_monomial(basis[rng.gen_range(0..basis.len())].clone(), Fq::ONE)
                };
                let (u, v, w) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let uv_w = sys.mul(&f, &sys.mul(&f, &u, &v), &w);
                let u_vw = sys.mul(&f, &u, &sys.mul(&f, &v, &w));
                assert_eq!(uv_w, u_vw, "associativity in {name}");
            }
        }
    }
}
