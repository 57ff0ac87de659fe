//! Module theory over the finite-dimensional presets: representations,
//! composition series, Hom and Ext spaces, projective covers,
//! indecomposability, duals and twists.
//!
//! Simple modules are found by a seeded Meataxe: split off proper
//! submodules spun from kernels of random algebra elements, with Norton's
//! irreducibility criterion certifying the simple leaves.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::hopf::Hopf;
use crate::matrix::{pack, unpack, Matrix, Subspace};
use crate::monomial::{Element, GenId, Monomial};
use rand::Rng;

pub struct Representation<'a> {
    pub alg: &'a Algebra,
    pub dim: usize,
    /// column convention: generator g sends v to action[g] * v
    pub action: Vec<Matrix>,
    /// transposes, for fast row-vector spinning
    action_t: Vec<Matrix>,
}

impl<'a> Clone for Representation<'a> {
    fn clone(&self) -> Self {
        Representation {
            alg: self.alg,
            dim: self.dim,
            action: self.action.clone(),
            action_t: self.action_t.clone(),
        }
    }
}

impl<'a> Representation<'a> {
    pub fn new(alg: &'a Algebra, action: Vec<Matrix>) -> Result<Representation<'a>> {
        if action.len() != alg.num_gens() {
            return Err(Error::Shape(format!(
                "expected {} generator matrices, got {}",
                alg.num_gens(),
                action.len()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape("action matrices must be square of equal size".into()));
            }
        }
        let action_t = action.iter().map(|m| m.transpose(&alg.field)).collect();
        Ok(Representation { alg, dim, action, action_t })
    }

    pub fn field(&self) -> &Field {
        &self.alg.field
    }

    /// Matrix of a generator power; negative exponents through the inverse.
    fn act_block(&self, g: GenId, e: i32) -> Matrix {
        let f = self.field();
        if e >= 0 {
            self.action[g as usize].pow(f, e as usize)
        } else {
            let inv = self.action[g as usize]
                .invert(f)
                .expect("square")
                .expect("invertible generator acts invertibly");
            inv.pow(f, (-e) as usize)
        }
    }

    pub fn act_monomial(&self, m: &Monomial) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::identity(f, self.dim);
        for (g, e) in m.blocks() {
            acc = acc.mul(f, &self.act_block(g, e));
        }
        acc
    }

    pub fn act_element(&self, x: &Element) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zero(f, self.dim, self.dim);
        for (m, &c) in &x.terms {
            acc = acc.add(&self.act_monomial(m).scale(f, c));
        }
        acc
    }

    /// Violated relations (empty iff the action is a representation).
    pub fn check(&self) -> Vec<String> {
        let f = self.field();
        let mut fails = Vec::new();
        for rel in &self.alg.system.relations {
            let mut acc = Matrix::zero(f, self.dim, self.dim);
            for (c, w) in &rel.sum {
                let mut p = Matrix::identity(f, self.dim);
                for &(g, e) in w {
                    p = p.mul(f, &self.act_block(g, e));
                }
                acc = acc.add(&p.scale(f, *c));
            }
            if !acc.is_zero() {
                fails.push(rel.source.clone());
            }
        }
        fails
    }

    fn wpr(&self) -> usize {
        self.dim.div_ceil(64).max(1)
    }

    /// Smallest submodule containing the seed vectors.
    pub fn spin(&self, seeds: &[Vec<Fq>]) -> Subspace {
        self.spin_with(&self.action_t, seeds)
    }

    /// Spin in the transpose module (right-module structure).
    pub fn spin_transpose(&self, seeds: &[Vec<Fq>]) -> Subspace {
        self.spin_with(&self.action, seeds)
    }

    fn spin_with(&self, mats: &[Matrix], seeds: &[Vec<Fq>]) -> Subspace {
        let f = self.field();
        let k = f.k() as usize;
        let wpr = self.wpr();
        let mut span = Subspace::empty(f, self.dim);
        let mut frontier: Vec<Vec<u64>> = Vec::new();
        for s in seeds {
            let p = pack(k, wpr, s);
            if span.insert_packed(f, p.clone()) {
                frontier.push(p);
            }
        }
        while let Some(v) = frontier.pop() {
            for m in mats {
                let w = m.row_apply(f, &v);
                if span.insert_packed(f, w.clone()) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    /// Restriction of the action to a submodule, in the basis of `sub`.
    pub fn sub(&self, sub: &Subspace) -> Representation<'a> {
        let f = self.field();
        let s = sub.dim();
        let mut action = Vec::with_capacity(self.action.len());
        for (g, mt) in self.action_t.iter().enumerate() {
            let mut m = Matrix::zero(f, s, s);
            for j in 0..s {
                let v = sub.basis_vec(j);
                let w = mt.row_apply(f, &pack(f.k() as usize, self.wpr(), &v));
                let w = unpack(f.k() as usize, self.wpr(), self.dim, &w);
                let coords = sub
                    .coords_of(f, &w)
                    .unwrap_or_else(|| panic!("subspace is not stable under generator {g}"));
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            action.push(m);
        }
        Representation::new(self.alg, action).expect("restriction shapes agree")
    }

    /// Quotient module V / sub in the basis of non-pivot coordinates.
    pub fn quotient(&self, sub: &Subspace) -> Representation<'a> {
        let f = self.field();
        let free: Vec<usize> =
            (0..self.dim).filter(|c| !sub.pivots().contains(c)).collect();
        let q = free.len();
        let mut action = Vec::with_capacity(self.action.len());
        for mt in &self.action_t {
            let mut m = Matrix::zero(f, q, q);
            for (j, &fj) in free.iter().enumerate() {
                let mut e = vec![Fq::ZERO; self.dim];
                e[fj] = Fq::ONE;
                let w = mt.row_apply(f, &pack(f.k() as usize, self.wpr(), &e));
                let w = unpack(f.k() as usize, self.wpr(), self.dim, &w);
                let r = sub.reduce(f, &w);
                for (i, &fi) in free.iter().enumerate() {
                    m.set(i, j, r[fi]);
                }
            }
            action.push(m);
        }
        Representation::new(self.alg, action).expect("quotient shapes agree")
    }

    pub fn direct_sum(&self, other: &Representation<'a>) -> Representation<'a> {
        let f = self.field();
        let n = self.dim + other.dim;
        let mut action = Vec::new();
        for (a, b) in self.action.iter().zip(&other.action) {
            let mut m = Matrix::zero(f, n, n);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    m.set(r, c, a.get(r, c));
                }
            }
            for r in 0..other.dim {
                for c in 0..other.dim {
                    m.set(self.dim + r, self.dim + c, b.get(r, c));
                }
            }
            action.push(m);
        }
        Representation::new(self.alg, action).expect("direct sum shapes agree")
    }

    /// Dual module with action through the antipode (or its inverse).
    pub fn dual(&self, hopf: &Hopf, use_inverse_antipode: bool) -> Representation<'a> {
        assert!(std::ptr::eq(self.alg as *const _, &hopf.alg as *const _) || self.alg.name == hopf.alg.name);
        let f = self.field();
        let mut action = Vec::new();
        for g in 0..self.alg.num_gens() {
            let mut s = Element::generator(self.alg.num_gens(), g as GenId);
            // S^4 = id for every Hopf preset here, so S^{-1} = S^3
            let times = if use_inverse_antipode { 3 } else { 1 };
            for _ in 0..times {
                s = hopf.antipode(&s);
            }
            action.push(self.act_element(&s).transpose(f));
        }
        Representation::new(self.alg, action).expect("dual shapes agree")
    }

    /// Twist the action by an algebra endomorphism given on generators.
    pub fn twist(&self, images: &[Element]) -> Representation<'a> {
        let action = images.iter().map(|img| self.act_element(img)).collect();
        Representation::new(self.alg, action).expect("twist shapes agree")
    }

    pub fn is_zero_action(&self) -> bool {
        self.action.iter().all(|m| m.is_zero())
    }

    /// rad V = Jac(A) V for the given radical basis.
    pub fn radical_subspace(&self, jac: &[Element]) -> Subspace {
        let f = self.field();
        let mut out = Subspace::empty(f, self.dim);
        for j in jac {
            let m = self.act_element(j);
            for c in 0..self.dim {
                out.insert(f, &m.col(c));
            }
        }
        out
    }

    /// soc V = {v : Jac(A) v = 0}.
    pub fn socle_subspace(&self, jac: &[Element]) -> Subspace {
        let f = self.field();
        let mut stacked = Matrix::zero(f, self.dim * jac.len(), self.dim);
        for (i, j) in jac.iter().enumerate() {
            let m = self.act_element(j);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    let v = m.get(r, c);
                    if !v.is_zero() {
                        stacked.set(i * self.dim + r, c, v);
                    }
                }
            }
        }
        let red = stacked.row_reduce(f);
        let mut s = Subspace::empty(f, self.dim);
        for c in 0..red.kernel.cols() {
            s.insert(f, &red.kernel.col(c));
        }
        s
    }
}

impl std::fmt::Debug for Representation<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Representation(dim {} over {})", self.dim, self.alg.name)
    }
}

/// The left regular module.
pub fn regular_representation(alg: &Algebra) -> Representation<'_> {
    let action = (0..alg.num_gens())
        .map(|g| alg.left_mult_matrix(&Element::generator(alg.num_gens(), g as GenId)))
        .collect();
    Representation::new(alg, action).expect("regular module shapes agree")
}

fn random_element_matrix(rep: &Representation, rng: &mut impl Rng) -> Matrix {
    let f = rep.field();
    let mut acc = Matrix::zero(f, rep.dim, rep.dim);
    for _ in 0..4 {
        let len = rng.gen_range(1..=3);
        let mut p = Matrix::identity(f, rep.dim);
        for _ in 0..len {
            let g = rng.gen_range(0..rep.action.len());
            p = p.mul(f, &rep.action[g]);
        }
        let c = Fq(rng.gen_range(1..f.order()) as u16);
        acc = acc.add(&p.scale(f, c));
    }
    acc
}

enum SimpleOrSplit {
    Simple,
    Split(Subspace),
}

/// Meataxe decision procedure for one module: either a certificate of
/// simplicity (Norton) or a proper nonzero submodule.
fn meataxe_step(rep: &Representation, rng: &mut impl Rng) -> Result<SimpleOrSplit> {
    let f = rep.field();
    if rep.dim == 0 {
        return Err(Error::Parameter("meataxe on the zero module".into()));
    }
    if rep.dim == 1 {
        return Ok(SimpleOrSplit::Simple);
    }
    for _ in 0..80 {
        let theta = random_element_matrix(rep, rng);
        let red = theta.row_reduce(f);
        if red.kernel.cols() == 0 || red.rank == 0 {
            continue;
        }
        // spin kernel vectors
        for c in 0..red.kernel.cols() {
            let w = rep.spin(&[red.kernel.col(c)]);
            if w.dim() < rep.dim {
                return Ok(SimpleOrSplit::Split(w));
            }
        }
        // Norton: every kernel vector of theta^T must spin (in the
        // transpose module) to everything, else its annihilator splits
        let tred = theta.transpose(f).row_reduce(f);
        for c in 0..tred.kernel.cols() {
            let wt = rep.spin_transpose(&[tred.kernel.col(c)]);
            if wt.dim() < rep.dim {
                let mut rows = Matrix::zero(f, wt.dim(), rep.dim);
                for (i, b) in wt.basis().iter().enumerate() {
                    for (j, &v) in b.iter().enumerate() {
                        rows.set(i, j, v);
                    }
                }
                let ann = rows.row_reduce(f);
                let mut s = Subspace::empty(f, rep.dim);
                for cc in 0..ann.kernel.cols() {
                    s.insert(f, &ann.kernel.col(cc));
                }
                debug_assert!(s.dim() > 0 && s.dim() < rep.dim);
                return Ok(SimpleOrSplit::Split(s));
            }
        }
        return Ok(SimpleOrSplit::Simple);
    }
    // no singular element found; exhaust small modules
    if f.order().pow(rep.dim as u32) <= (1 << 16) {
        let total = f.order().pow(rep.dim as u32);
        for idx in 1..total {
            let mut v = vec![Fq::ZERO; rep.dim];
            let mut t = idx;
            for x in v.iter_mut() {
                *x = Fq((t % f.order()) as u16);
                t /= f.order();
            }
            let w = rep.spin(&[v]);
            if w.dim() < rep.dim {
                return Ok(SimpleOrSplit::Split(w));
            }
        }
        return Ok(SimpleOrSplit::Simple);
    }
    Err(Error::Resource(
        "meataxe found no singular element; retry with a larger field extension".into(),
    ))
}

/// All simple modules of A (up to isomorphism), as composition factors of
/// the regular module, plus the factor multiset index-aligned with the
/// returned simples.
pub fn classify_simples<'a>(
    alg: &'a Algebra,
    rng: &mut impl Rng,
) -> Result<(Vec<Representation<'a>>, Vec<usize>)> {
    let regular = regular_representation(alg);
    let mut simples: Vec<Representation<'a>> = Vec::new();
    let mut factors: Vec<usize> = Vec::new();
    let mut stack = vec![regular];
    while let Some(v) = stack.pop() {
        if v.dim == 0 {
            continue;
        }
        match meataxe_step(&v, rng)? {
            SimpleOrSplit::Simple => {
                let mut found = None;
                for (i, s) in simples.iter().enumerate() {
                    if s.dim == v.dim && is_isomorphic(s, &v, rng).is_some() {
                        found = Some(i);
                        break;
                    }
                }
                let idx = match found {
                    Some(i) => i,
                    None => {
                        simples.push(v);
                        simples.len() - 1
                    }
                };
                factors.push(idx);
            }
            SimpleOrSplit::Split(w) => {
                stack.push(v.sub(&w));
                stack.push(v.quotient(&w));
            }
        }
    }
    Ok((simples, factors))
}

/// Jac(A) as the intersection of the annihilators of the simples,
/// verified nilpotent.
pub fn radical_of_algebra<'a>(
    alg: &'a Algebra,
    simples: &[Representation<'a>],
) -> Result<Vec<Element>> {
    let f = &alg.field;
    let cols: usize = simples.iter().map(|s| s.dim * s.dim).sum();
    let mut m = Matrix::zero(f, alg.dim(), cols);
    for (bi, bmono) in alg.basis.iter().enumerate() {
        let mut off = 0;
        for s in simples {
            let sm = s.act_monomial(bmono);
            for r in 0..s.dim {
                for c in 0..s.dim {
                    let v = sm.get(r, c);
                    if !v.is_zero() {
                        m.set(bi, off + r * s.dim + c, v);
                    }
                }
            }
            off += s.dim * s.dim;
        }
    }
    // radical = row kernel = kernel of the transpose
    let red = m.transpose(f).row_reduce(f);
    let jac: Vec<Element> =
        (0..red.kernel.cols()).map(|c| alg.from_vec(&red.kernel.col(c))).collect();
    // nilpotency: powers of the span must hit zero
    let mut power: Vec<Element> = jac.clone();
    for _ in 0..=alg.dim() {
        if power.is_empty() {
            return Ok(jac);
        }
        let mut next = Subspace::empty(f, alg.dim());
        for x in &power {
            for y in &jac {
                next.insert(f, &alg.to_vec(&alg.mul(x, y)));
            }
        }
        power = next.basis().iter().map(|v| alg.from_vec(v)).collect();
    }
    Err(Error::Parameter("radical candidate is not nilpotent".into()))
}

/// Basis of the space of intertwiners T with T r1(g) = r2(g) T.
pub fn hom_space(r1: &Representation, r2: &Representation) -> Vec<Matrix> {
    let f = r1.field();
    let (d1, d2) = (r1.dim, r2.dim);
    let unknowns = d1 * d2;
    let mut sys = Matrix::zero(f, r1.action.len() * unknowns, unknowns);
    let at = |i: usize, k: usize| i * d1 + k; // T[i][k] index
    for (g, (m1, m2)) in r1.action.iter().zip(&r2.action).enumerate() {
        for i in 0..d2 {
            for j in 0..d1 {
                let row = g * unknowns + i * d1 + j;
                // sum_k T[i][k] m1[k][j] + sum_k m2[i][k] T[k][j]
                for k in 0..d1 {
                    let v = m1.get(k, j);
                    if !v.is_zero() {
                        let col = at(i, k);
                        sys.set(row, col, f.add(sys.get(row, col), v));
                    }
                }
                for k in 0..d2 {
                    let v = m2.get(i, k);
                    if !v.is_zero() {
                        let col = at(k, j);
                        sys.set(row, col, f.add(sys.get(row, col), v));
                    }
                }
            }
        }
    }
    let red = sys.row_reduce(f);
    (0..red.kernel.cols())
        .map(|c| {
            let v = red.kernel.col(c);
            let mut t = Matrix::zero(f, d2, d1);
            for i in 0..d2 {
                for k in 0..d1 {
                    t.set(i, k, v[at(i, k)]);
                }
            }
            t
        })
        .collect()
}

/// An invertible intertwiner if one exists. Searches the hom space
/// exhaustively when small, else samples; `None` can mean
/// "probably not isomorphic" for large hom spaces (the callers here
/// always separate such pairs by dimension or series first).
pub fn is_isomorphic(r1: &Representation, r2: &Representation, rng: &mut impl Rng) -> Option<Matrix> {
    if r1.dim != r2.dim {
        return None;
    }
    if r1.dim == 0 {
        return Some(Matrix::zero(r1.field(), 0, 0));
    }
    let f = r1.field();
    let homs = hom_space(r1, r2);
    if homs.is_empty() {
        return None;
    }
    let h = homs.len() as u32;
    let total = f.order().checked_pow(h);
    if let Some(total) = total.filter(|&t| t <= (1 << 16)) {
        for idx in 1..total {
            let mut t = idx;
            let mut acc = Matrix::zero(f, r2.dim, r1.dim);
            for hm in &homs {
                let c = Fq((t % f.order()) as u16);
                t /= f.order();
                if !c.is_zero() {
                    acc = acc.add(&hm.scale(f, c));
                }
            }
            if acc.rank(f) == r1.dim {
                return Some(acc);
            }
        }
        None
    } else {
        for _ in 0..200 {
            let mut acc = Matrix::zero(f, r2.dim, r1.dim);
            for hm in &homs {
                let c = Fq(rng.gen_range(0..f.order()) as u16);
                if !c.is_zero() {
                    acc = acc.add(&hm.scale(f, c));
                }
            }
            if acc.rank(f) == r1.dim {
                return Some(acc);
            }
        }
        None
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum Indecomposability {
    Indecomposable,
    Decomposable,
    /// no splitting found but the endomorphism ring was too big to certify
    ProbablyIndecomposable,
}

/// End(V) is local iff the singular endomorphisms form a linear subspace.
/// Exhausts the endomorphism ring when |F|^dim End <= 2^20, otherwise
/// falls back to Fitting splittings over basis elements and pairwise sums.
pub fn is_indecomposable(rep: &Representation, _rng: &mut impl Rng) -> Indecomposability {
    let f = rep.field();
    if rep.dim == 0 {
        return Indecomposability::Decomposable;
    }
    let end = hom_space(rep, rep);
    let d = end.len() as u32;
    if let Some(total) = f.order().checked_pow(d).filter(|&t| t <= (1 << 20)) {
        let mut singular_span = Subspace::empty(f, end.len());
        let mut singular_count: u64 = 0;
        for idx in 0..total {
            let mut t = idx;
            let mut coeffs = vec![Fq::ZERO; end.len()];
            let mut acc = Matrix::zero(f, rep.dim, rep.dim);
            for (ci, hm) in end.iter().enumerate() {
                let c = Fq((t % f.order()) as u16);
                t /= f.order();
                coeffs[ci] = c;
                if !c.is_zero() {
                    acc = acc.add(&hm.scale(f, c));
                }
            }
            if acc.rank(f) < rep.dim {
                singular_count += 1;
                singular_span.insert(f, &coeffs);
            }
        }
        // closed under addition <=> the singular set is the whole span
        if singular_count == f.order().pow(singular_span.dim() as u32) {
            Indecomposability::Indecomposable
        } else {
            Indecomposability::Decomposable
        }
    } else {
        // Fitting: any endomorphism with a nontrivial stable kernel/image
        // splitting decomposes V
        let mut candidates: Vec<Matrix> = end.clone();
        for i in 0..end.len() {
            for j in i + 1..end.len() {
                candidates.push(end[i].add(&end[j]));
            }
        }
        for theta in &candidates {
            let stable = theta.pow(f, rep.dim);
            let red = stable.row_reduce(f);
            if red.rank > 0 && red.rank < rep.dim {
                // V = ker theta^n (+) im theta^n
                return Indecomposability::Decomposable;
            }
        }
        Indecomposability::ProbablyIndecomposable
    }
}

pub struct SeriesReport<'a> {
    /// V = rad^0 > rad^1 > ... > 0
    pub radical_series: Vec<Subspace>,
    pub socle_series: Vec<Subspace>,
    /// composition factors bottom-up, one multiset of simple indices per
    /// radical layer (bottom layer first)
    pub factors_bottom_up: Vec<Vec<usize>>,
    pub layers: Vec<Representation<'a>>,
}

/// Radical and socle series and the identified composition factors.
pub fn module_series<'a>(
    rep: &Representation<'a>,
    jac: &[Element],
    simples: &[Representation<'a>],
) -> SeriesReport<'a> {
    let f = rep.field();
    // radical series as subspaces of V
    let mut radical_series = vec![full_space(f, rep.dim)];
    loop {
        let current = radical_series.last().unwrap();
        if current.dim() == 0 {
            break;
        }
        let sub = rep.sub(current);
        let rad_in_sub = sub.radical_subspace(jac);
        // lift back to coordinates of V
        let mut lifted = Subspace::empty(f, rep.dim);
        for v in rad_in_sub.basis() {
            let mut w = vec![Fq::ZERO; rep.dim];
            for (c, base) in v.iter().zip(current.basis()) {
                for (wi, &bi) in w.iter_mut().zip(&base) {
                    *wi = f.add(*wi, f.mul(*c, bi));
                }
            }
            lifted.insert(f, &w);
        }
        let stop = lifted.dim() == 0;
        radical_series.push(lifted);
        if stop {
            break;
        }
    }
    // socle series
    let mut socle_series: Vec<Subspace> = Vec::new();
    let mut prev = Subspace::empty(f, rep.dim);
    loop {
        if prev.dim() == rep.dim {
            break;
        }
        let quot = rep.quotient(&prev);
        let soc_q = quot.socle_subspace(jac);
        // pull back: vectors whose class lies in soc(V/prev)
        let free: Vec<usize> = (0..rep.dim).filter(|c| !prev.pivots().contains(c)).collect();
        let mut next = prev.clone();
        for v in soc_q.basis() {
            let mut w = vec![Fq::ZERO; rep.dim];
            for (c, &fi) in v.iter().zip(&free) {
                w[fi] = *c;
            }
            next.insert(f, &w);
        }
        if next.dim() == prev.dim() {
            break;
        }
        socle_series.push(next.clone());
        prev = next;
    }
    // factors per radical layer, bottom-up
    let mut factors_bottom_up = Vec::new();
    let mut layers = Vec::new();
    for win in radical_series.windows(2).rev() {
        let (big, small) = (&win[0], &win[1]);
        if big.dim() == small.dim() {
            continue;
        }
        let sub = rep.sub(big);
        // coordinates of `small` inside `big`
        let mut small_in_big = Subspace::empty(f, big.dim());
        for v in small.basis() {
            let coords = big.coords_of(f, &v).expect("radical series is nested");
            small_in_big.insert(f, &coords);
        }
        let layer = sub.quotient(&small_in_big);
        let mut layer_factors = Vec::new();
        for (si, s) in simples.iter().enumerate() {
            // multiplicity of s in the semisimple layer = dim Hom(layer, s)
            debug_assert_eq!(hom_space(s, s).len(), 1, "simples must be absolutely simple");
            let mult = hom_space(&layer, s).len();
            for _ in 0..mult {
                layer_factors.push(si);
            }
        }
        let total: usize = layer_factors.iter().map(|&si| simples[si].dim).sum();
        assert_eq!(total, layer.dim, "layer is semisimple over the listed simples");
        factors_bottom_up.push(layer_factors);
        layers.push(layer);
    }
    SeriesReport { radical_series, socle_series, factors_bottom_up, layers }
}

pub fn full_space(f: &Field, dim: usize) -> Subspace {
    let mut s = Subspace::empty(f, dim);
    for i in 0..dim {
        let mut v = vec![Fq::ZERO; dim];
        v[i] = Fq::ONE;
        s.insert(f, &v);
    }
    s
}

/// Left module A e for an idempotent e, with the left multiplication action.
pub fn projective_from_idempotent<'a>(alg: &'a Algebra, e: &Element) -> Result<Representation<'a>> {
    let f = &alg.field;
    let e2 = alg.mul(e, e);
    if &e2 != e {
        return Err(Error::NotIdempotent(alg.show(e)));
    }
    // basis of A e
    let mut span = Subspace::empty(f, alg.dim());
    for b in &alg.basis {
        let prod = alg.mul(&Element::from_monomial(b.clone(), Fq::ONE), e);
        span.insert(f, &alg.to_vec(&prod));
    }
    let regular = regular_representation(alg);
    Ok(regular.sub(&span))
}

/// dim Ext^1(S, T) = dim Hom(rad P(S) / rad^2 P(S), T).
pub fn ext1(
    alg: &Algebra,
    e_s: &Element,
    t: &Representation,
    jac: &[Element],
) -> Result<usize> {
    let p = projective_from_idempotent(alg, e_s)?;
    let rad = p.radical_subspace(jac);
    let rad_rep = p.sub(&rad);
    let rad2_in_rad = rad_rep.radical_subspace(jac);
    let layer = rad_rep.quotient(&rad2_in_rad);
    Ok(hom_space(&layer, t).len())
}

/// Partition of a nilpotent matrix from the rank sequence of its powers.
pub fn jordan_type(field: &Field, m: &Matrix) -> Result<Vec<usize>> {
    let n = m.rows();
    if m.pow(field, n).rank(field) != 0 {
        return Err(Error::NotNilpotent);
    }
    let mut ranks = vec![n];
    let mut p = Matrix::identity(field, n);
    loop {
        p = p.mul(field, m);
        let r = p.rank(field);
        ranks.push(r);
        if r == 0 {
            break;
        }
    }
    // blocks of size >= i: d_i = rank(m^{i-1}) - rank(m^i)
    let mut parts = Vec::new();
    for i in 1..ranks.len() {
        let d_i = ranks[i - 1] - ranks[i];
        let d_next = if i + 1 < ranks.len() { ranks[i] - ranks[i + 1] } else { 0 };
        let exactly_i = d_i - d_next;
        for _ in 0..exactly_i {
            parts.push(i);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

/// Every radical layer is a single simple factor.
pub fn is_uniserial(
    rep: &Representation,
    jac: &[Element],
    simples: &[Representation],
) -> bool {
    let series = module_series(rep, jac, simples);
    series.factors_bottom_up.iter().all(|layer| layer.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn um() -> Algebra {
        Algebra::build("um", &Field::gf2(), 4).unwrap()
    }

    /// the matrices of the 3-dimensional simple module
    pub(crate) fn v1_action(f: &Field) -> (Matrix, Matrix, Matrix) {
        let a = Matrix::from_ints(f, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let b = Matrix::from_ints(f, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let c = Matrix::from_ints(f, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
        (a, b, c)
    }

    #[test]
    fn adjoint_matrices_satisfy_relations() {
        let alg = um();
        let f = &alg.field;
        let (a, b, c) = v1_action(f);
        let rep = Representation::new(&alg, vec![a, b, c]).unwrap();
        assert!(rep.check().is_empty());
    }

    #[test]
    fn swapping_a_and_b_is_the_chevalley_twist_and_still_valid() {
        // ab + ba = c is symmetric in a, b, so the swap is a twist by the
        // Chevalley involution, not a violation
        let alg = um();
        let f = &alg.field;
        let (a, b, c) = v1_action(f);
        let rep = Representation::new(&alg, vec![b, a, c]).unwrap();
        assert!(rep.check().is_empty());
    }

    #[test]
    fn swapping_b_and_c_violates_relations() {
        let alg = um();
        let f = &alg.field;
        let (a, b, c) = v1_action(f);
        let rep = Representation::new(&alg, vec![a, c, b]).unwrap();
        assert!(!rep.check().is_empty());
    }

    #[test]
    fn zero_action_is_the_trivial_module() {
        let alg = um();
        let f = &alg.field;
        let z = Matrix::zero(f, 1, 1);
        let rep = Representation::new(&alg, vec![z.clone(), z.clone(), z]).unwrap();
        assert!(rep.check().is_empty());
    }

    #[test]
    fn um_has_two_simples_of_dims_one_and_three() {
        let alg = um();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let (simples, factors) = classify_simples(&alg, &mut rng).unwrap();
        let mut dims: Vec<usize> = simples.iter().map(|s| s.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 3]);
        // 32 = 8 * 1 + 8 * 3 from the regular module
        let mut mult = [0usize; 2];
        for &i in &factors {
            mult[i] += 1;
        }
        let total: usize = factors.iter().map(|&i| simples[i].dim).sum();
        assert_eq!(total, 32);
        assert_eq!(mult, [8, 8]);
    }

    #[test]
    fn um_radical_has_dimension_22() {
        let alg = um();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let (simples, _) = classify_simples(&alg, &mut rng).unwrap();
        let jac = radical_of_algebra(&alg, &simples).unwrap();
        assert_eq!(jac.len(), 22);
    }

    #[test]
    fn schur_endomorphisms_of_v1() {
        let alg = um();
        let f = &alg.field;
        let (a, b, c) = v1_action(f);
        let rep = Representation::new(&alg, vec![a, b, c]).unwrap();
        assert_eq!(hom_space(&rep, &rep).len(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(is_indecomposable(&rep, &mut rng), Indecomposability::Indecomposable);
    }

    #[test]
    fn direct_sum_decomposes() {
        let alg = um();
        let f = &alg.field;
        let z = Matrix::zero(f, 1, 1);
        let v0 = Representation::new(&alg, vec![z.clone(), z.clone(), z]).unwrap();
        let sum = v0.direct_sum(&v0);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert_eq!(is_indecomposable(&sum, &mut rng), Indecomposability::Decomposable);
    }

    #[test]
    fn jordan_type_of_a_on_v1() {
        let alg = um();
        let f = &alg.field;
        let (a, _, _) = v1_action(f);
        assert_eq!(jordan_type(f, &a).unwrap(), vec![3]);
        let id = Matrix::identity(f, 2);
        assert!(jordan_type(f, &id).is_err());
    }

    #[test]
    fn dual_of_v1_is_v1() {
        let h = Hopf::build("um", &Field::gf2(), 4).unwrap();
        let f = h.field();
        let (a, b, c) = v1_action(f);
        let rep = Representation::new(&h.alg, vec![a, b, c]).unwrap();
        let dual = rep.dual(&h, false);
        assert!(dual.check().is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(is_isomorphic(&rep, &dual, &mut rng).is_some());
    }

    #[test]
    fn all_two_dimensional_um_modules_are_trivial() {
        // brute force over GF(2): every valid pair of generator images on
        // k^2 forces the zero action
        let alg = um();
        let f = &alg.field;
        let mats: Vec<Matrix> = (0..16u32)
            .map(|bits| {
                Matrix::from_ints(
                    f,
                    &[
                        &[(bits & 1) as u16, (bits >> 1 & 1) as u16],
                        &[(bits >> 2 & 1) as u16, (bits >> 3 & 1) as u16],
                    ],
                )
            })
            .collect();
        let mut valid = 0;
        for a in &mats {
            for b in &mats {
                for c in &mats {
                    let rep =
                        Representation::new(&alg, vec![a.clone(), b.clone(), c.clone()]).unwrap();
                    if rep.check().is_empty() {
                        valid += 1;
                        assert!(rep.is_zero_action());
                    }
                }
            }
        }
        assert_eq!(valid, 1);
    }
}
