//! Concrete algebras built from presentations: finite-dimensional ones
//! carry an enumerated PBW basis (and structure constants for small
//! dimensions); infinite-dimensional ones multiply through straightening.

use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::matrix::{Matrix, Subspace};
use crate::monomial::{Element, Monomial};
use crate::presentation::load_preset;
use crate::rewrite::{ConfluenceReport, PairRule, RewriteSystem};
use std::collections::HashMap;

pub struct Algebra {
    pub name: String,
    pub field: Field,
    pub system: RewriteSystem,
    /// PBW basis when every generator is capped.
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// materialized structure constants for small finite algebras
    table: Option<Vec<Vec<Element>>>,
    pub confluence: ConfluenceReport,
}

impl Algebra {
    /// Build a preset by name, certify local confluence up to `bound`, and
    /// enumerate the basis in the finite case.
    pub fn build(name: &str, field: &Field, bound: i32) -> Result<Algebra> {
        let pres = load_preset(name)?;
        Self::from_system(name, field, pres.into_system()?, bound)
    }

    /// Same as `build` for an already-assembled rewrite system.
    pub fn from_system(
        name: &str,
        field: &Field,
        system: RewriteSystem,
        bound: i32,
    ) -> Result<Algebra> {
        let report = system.certify_local_confluence(field, bound);
        if let Some(cp) = report.unresolved.first() {
            return Err(Error::Confluence {
                word: cp.word.clone(),
                left: cp.left.clone(),
                right: cp.right.clone(),
            });
        }
        if let Some(fail) = report.soundness_failures.first() {
            return Err(Error::Parameter(format!("presentation {name} unsound: {fail}")));
        }
        let finite = system.gens().iter().all(|g| g.cap.is_finite());
        let basis = if finite { system.enumerate_basis(None)? } else { Vec::new() };
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut alg = Algebra {
            name: name.to_string(),
            field: field.clone(),
            system,
            basis,
            index,
            table: None,
            confluence: report,
        };
        if alg.is_finite() && alg.dim() <= 64 {
            let table = alg
                .basis
                .iter()
                .map(|a| {
                    alg.basis
                        .iter()
                        .map(|b| alg.system.mul_monomials(&alg.field, a, b))
                        .collect()
                })
                .collect();
            alg.table = Some(table);
        }
        Ok(alg)
    }

    pub fn is_finite(&self) -> bool {
        !self.basis.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_gens(&self) -> usize {
        self.system.num_gens()
    }

    pub fn one(&self) -> Element {
        Element::one(self.num_gens())
    }

    pub fn gen_element(&self, name: &str) -> Result<Element> {
        Ok(Element::generator(self.num_gens(), self.system.gen_id(name)?))
    }

    pub fn basis_index(&self, m: &Monomial) -> usize {
        self.index[m]
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        if let Some(table) = &self.table {
            let mut out = Element::zero();
            for (ma, &ca) in &a.terms {
                for (mb, &cb) in &b.terms {
                    let c = self.field.mul(ca, cb);
                    let prod = &table[self.index[ma]][self.index[mb]];
                    out.add_assign(&self.field, &prod.scale(&self.field, c));
                }
            }
            out
        } else {
            self.system.mul(&self.field, a, b)
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(&self.field, b)
    }

    pub fn pow(&self, a: &Element, e: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Parse a single word like `a^3 b c` into a normal-formed element.
    pub fn element(&self, src: &str) -> Result<Element> {
        let mut word = Vec::new();
        for tok in src.split_whitespace() {
            let (name, e) = match tok.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i32>().map_err(|_| Error::Parameter(format!("bad token {tok}")))?,
                ),
                None => (tok, 1),
            };
            if name == "1" {
                continue;
            }
            word.push((self.system.gen_id(name)?, e));
        }
        Ok(self.system.normal_form_word(&self.field, &word))
    }

    pub fn to_vec(&self, e: &Element) -> Vec<Fq> {
        let mut v = vec![Fq::ZERO; self.dim()];
        for (m, &c) in &e.terms {
            v[self.index[m]] = c;
        }
        v
    }

    pub fn from_vec(&self, v: &[Fq]) -> Element {
        let mut e = Element::zero();
        for (i, &c) in v.iter().enumerate() {
            e.add_term(&self.field, self.basis[i].clone(), c);
        }
        e
    }

    /// Matrix of left multiplication by x on the regular module, columns
    /// indexed by the basis.
    pub fn left_mult_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(&self.field, n, n);
        for (j, b) in self.basis.iter().enumerate() {
            let prod = self.mul(x, &Element::from_monomial(b.clone(), Fq::ONE));
            for (mono, &c) in &prod.terms {
                m.set(self.index[mono], j, c);
            }
        }
        m
    }

    pub fn right_mult_matrix(&self, x: &Element) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(&self.field, n, n);
        for (j, b) in self.basis.iter().enumerate() {
            let prod = self.mul(&Element::from_monomial(b.clone(), Fq::ONE), x);
            for (mono, &c) in &prod.terms {
                m.set(self.index[mono], j, c);
            }
        }
        m
    }

    /// Closure of the span of products of the given elements (including the
    /// empty product 1), as a reduced basis.
    pub fn subalgebra_basis(&self, gens: &[Element]) -> Vec<Element> {
        let mut span = Subspace::empty(&self.field, self.dim());
        let mut frontier: Vec<Element> = vec![self.one()];
        span.insert(&self.field, &self.to_vec(&self.one()));
        for g in gens {
            if span.insert(&self.field, &self.to_vec(g)) {
                frontier.push(g.clone());
            }
        }
        while let Some(x) = frontier.pop() {
            for g in gens {
                let prod = self.mul(&x, g);
                if span.insert(&self.field, &self.to_vec(&prod)) {
                    frontier.push(prod);
                }
            }
        }
        span.basis().iter().map(|v| self.from_vec(v)).collect()
    }

    /// None if all pairs commute, else a violating pair with xy + yx.
    pub fn check_commutative(&self, elems: &[Element]) -> Option<(Element, Element, Element)> {
        for (i, x) in elems.iter().enumerate() {
            for y in &elems[i + 1..] {
                let xy = self.mul(x, y);
                let yx = self.mul(y, x);
                if xy != yx {
                    return Some((x.clone(), y.clone(), xy.add(&self.field, &yx)));
                }
            }
        }
        None
    }

    pub fn is_nilpotent_element(&self, x: &Element) -> bool {
        let mut p = x.clone();
        for _ in 0..=self.dim() {
            if p.is_zero() {
                return true;
            }
            p = self.mul(&p, x);
        }
        false
    }

    pub fn show(&self, e: &Element) -> String {
        self.system.element_to_string(e)
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_finite() {
            write!(f, "Algebra({}, dim {})", self.name, self.dim())
        } else {
            write!(f, "Algebra({}, infinite)", self.name)
        }
    }
}

/// Compare rule tables: the quotient must carry exactly the rules of the
/// cover (generator by generator), differing only in caps. This is the
/// structural content of u(m) = U(G)/(a^4, b^4, c^2 + c).
pub fn rules_extend(cover: &Algebra, quotient: &Algebra) -> bool {
    if cover.num_gens() != quotient.num_gens() {
        return false;
    }
    if cover.system.rules().len() != quotient.system.rules().len() {
        return false;
    }
    for (&(u, v), rule) in cover.system.rules() {
        let Some(qrule) = quotient.system.rules().get(&(u, v)) else { return false };
        match (rule, qrule) {
            (PairRule::Unit(a), PairRule::Unit(b)) => {
                if a != b {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

/// Idempotents, basis and anti-automorphism data of the basic algebra
/// e u(m) e, with every element living inside u(m).
pub struct BasicAlgebraData {
    pub e0: Element,
    pub e1: Element,
    /// e0, e1, ae0, a^3 e1, b^3 e0, b e1, a^3 b^3 e0, ab e1
    pub basis: Vec<(String, Element)>,
    /// psi on the basis, as index mapping into `basis`
    pub psi: Vec<usize>,
}

impl BasicAlgebraData {
    pub fn new(um: &Algebra) -> Result<BasicAlgebraData> {
        let f = &um.field;
        let a = um.gen_element("a")?;
        let b = um.gen_element("b")?;
        let c = um.gen_element("c")?;
        let one = um.one();
        let ab = um.mul(&a, &b);
        let a2b2 = um.mul(&um.pow(&a, 2), &um.pow(&b, 2));
        // e0 = (1 + ab + a^2 b^2)(1 + c), e1 = (1 + a^2 b^2) c
        let e0 = um.mul(&one.add(f, &ab).add(f, &a2b2), &one.add(f, &c));
        let e1 = um.mul(&one.add(f, &a2b2), &c);
        let a3 = um.pow(&a, 3);
        let b3 = um.pow(&b, 3);
        let named = |s: &str, e: Element| (s.to_string(), e);
        let basis = vec![
            named("e0", e0.clone()),
            named("e1", e1.clone()),
            named("ae0", um.mul(&a, &e0)),
            named("a3e1", um.mul(&a3, &e1)),
            named("b3e0", um.mul(&b3, &e0)),
            named("be1", um.mul(&b, &e1)),
            named("a3b3e0", um.mul(&a3, &um.mul(&b3, &e0))),
            named("abe1", um.mul(&ab, &e1)),
        ];
        // psi fixes e0, e1, a3b3e0, abe1 and swaps ae0 <-> a3e1, b3e0 <-> be1
        let psi = vec![0, 1, 3, 2, 5, 4, 6, 7];
        Ok(BasicAlgebraData { e0, e1, basis, psi })
    }

    pub fn element(&self, name: &str) -> &Element {
        &self.basis.iter().find(|(n, _)| n == name).expect("basic basis element").1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_um_and_double() {
        let f = Field::gf2();
        let um = Algebra::build("um", &f, 4).unwrap();
        assert_eq!(um.dim(), 32);
        assert!(um.table.is_some());
        let dh = Algebra::build("DH", &f, 4).unwrap();
        assert_eq!(dh.dim(), 1024);
        assert!(dh.table.is_none());
    }

    #[test]
    fn subalgebra_k_in_double_has_dimension_32() {
        let f = Field::gf2();
        let dh = Algebra::build("DH", &f, 4).unwrap();
        let gens: Vec<Element> =
            ["x1", "x21", "w1", "w21", "g"].iter().map(|n| dh.gen_element(n).unwrap()).collect();
        let basis = dh.subalgebra_basis(&gens);
        assert_eq!(basis.len(), 32);
        assert!(dh.check_commutative(&basis).is_none());
    }

    #[test]
    fn group_algebra_inside_h() {
        let f = Field::gf2();
        let h = Algebra::build("H", &f, 4).unwrap();
        let g = h.gen_element("g").unwrap();
        assert_eq!(h.subalgebra_basis(&[g]).len(), 2);
    }

    #[test]
    fn double_is_not_commutative() {
        let f = Field::gf2();
        let dh = Algebra::build("DH", &f, 4).unwrap();
        let w1 = dh.gen_element("w1").unwrap();
        let x2 = dh.gen_element("x2").unwrap();
        let wit = dh.check_commutative(&[x2, w1]);
        // w1 x2 + x2 w1 = 1 + g
        let diff = wit.expect("x2 and w1 do not commute").2;
        assert_eq!(dh.show(&diff), "1 + g");
    }

    #[test]
    fn um_extends_ug_by_caps() {
        let f = Field::gf2();
        let um = Algebra::build("um", &f, 4).unwrap();
        let ug = Algebra::build("UG", &f, 4).unwrap();
        assert!(rules_extend(&ug, &um));
    }

    #[test]
    fn basic_idempotents() {
        let f = Field::gf2();
        let um = Algebra::build("um", &f, 4).unwrap();
        let data = BasicAlgebraData::new(&um).unwrap();
        let e0 = &data.e0;
        let e1 = &data.e1;
        assert_eq!(&um.mul(e0, e0), e0);
        assert_eq!(&um.mul(e1, e1), e1);
        assert!(um.mul(e0, e1).is_zero());
        assert!(um.mul(e1, e0).is_zero());
        // the eight elements are linearly independent
        let vecs: Vec<Vec<Fq>> = data.basis.iter().map(|(_, e)| um.to_vec(e)).collect();
        assert_eq!(Subspace::from_vectors(&f, 32, &vecs).dim(), 8);
    }
}
