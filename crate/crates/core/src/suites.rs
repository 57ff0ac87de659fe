//! Named verification suites with machine-readable reports.
//!
//! Each suite runs a batch of checks keyed by stable ids. Exit semantics:
//! a report is failing iff some check has status `fail`; bounded-evidence
//! and unverified entries (degree-limited checks on the
//! infinite-dimensional objects, and itemized reading discrepancies in the
//! printed relation families) do not fail a run but are always listed.

use crate::algebra::{rules_extend, Algebra, BasicAlgebraData};
use crate::error::{Error, Result};
use crate::field::{Field, Fq};
use crate::hopf::{exact_sequence_check, integral_spaces, Hopf, Morphism, Tensor2};
use crate::identities::{self, Reading};
use crate::matrix::Subspace;
use crate::monomial::{Element, GenId, Monomial};
use crate::pairing::SkewPairing;
use crate::quiver::{enumerate_bands, enumerate_strings, expected_strings, QuiverData};
use crate::rep::{
    classify_simples, hom_space, is_indecomposable, is_isomorphic, jordan_type, module_series,
    projective_from_idempotent, radical_of_algebra, regular_representation, ext1,
    Indecomposability, Representation,
};
use crate::zoo::{make_module, pullback_to_double, ModuleSpec, StringFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

pub const SUITE_NAMES: [&str; 13] = [
    "presentations",
    "hopf-axioms",
    "sequence-2-7",
    "simples",
    "ext-table",
    "projectives",
    "basic-quiver",
    "strings-bands",
    "zoo",
    "duality",
    "dtilde",
    "diagram-5-10",
    "all",
];

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SuiteConfig {
    pub field_ext: u32,
    pub exp_bound: i32,
    pub range: usize,
    pub nmax: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { field_ext: 1, exp_bound: 6, range: 3, nmax: 3, seed: 1 }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.field_ext == 0 || self.field_ext > 16 {
            return Err(Error::Parameter("field extension must be in 1..=16".into()));
        }
        if self.exp_bound < 1 || self.exp_bound > 10 {
            return Err(Error::Parameter("exponent bound must be in 1..=10".into()));
        }
        if self.range > 5 {
            return Err(Error::Parameter("range must be at most 5".into()));
        }
        if self.nmax > 5 {
            return Err(Error::Parameter("nmax must be at most 5".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "bounded-evidence")]
    BoundedEvidence,
    #[serde(rename = "unverified")]
    Unverified,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check_id: String,
    pub claim: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct Report {
    pub suite: String,
    pub config: SuiteConfig,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub duration_ms: u128,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        // serde_json maps are ordered, so serialization is stable
        serde_json::to_string_pretty(&serde_json::to_value(self).expect("serializable"))
            .expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite {} ({} checks, {} ms)\n", self.suite, self.checks.len(), self.duration_ms));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::BoundedEvidence => "bounded",
                Status::Unverified => "unverified",
            };
            out.push_str(&format!("  [{tag:10}] {}: {}", c.check_id, c.claim));
            if c.status != Status::Pass {
                out.push_str(&format!(" (expected {}, got {})", c.expected, c.actual));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!(" -- {w}"));
            }
            out.push('\n');
        }
        out
    }

    fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    }
}

fn check_eq<T: PartialEq + std::fmt::Debug>(
    id: impl Into<String>,
    claim: impl Into<String>,
    expected: T,
    actual: T,
) -> Check {
    let status = if expected == actual { Status::Pass } else { Status::Fail };
    Check {
        check_id: id.into(),
        claim: claim.into(),
        status,
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
        witness: None,
    }
}

fn check_true(id: impl Into<String>, claim: impl Into<String>, ok: bool, witness: Option<String>) -> Check {
    Check {
        check_id: id.into(),
        claim: claim.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        expected: "true".into(),
        actual: format!("{ok}"),
        witness,
    }
}

/// A check that verifies a property of an infinite object up to a bound.
fn check_bounded(id: impl Into<String>, claim: impl Into<String>, ok: bool, witness: String) -> Check {
    Check {
        check_id: id.into(),
        claim: claim.into(),
        status: if ok { Status::BoundedEvidence } else { Status::Fail },
        expected: "true (bounded)".into(),
        actual: format!("{ok}"),
        witness: Some(witness),
    }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let mut checks = match name {
        "presentations" => suite_presentations(config)?,
        "hopf-axioms" => suite_hopf_axioms(config)?,
        "sequence-2-7" => suite_sequence(config)?,
        "simples" => suite_simples(config)?,
        "ext-table" => suite_ext_table(config)?,
        "projectives" => suite_projectives(config)?,
        "basic-quiver" => suite_basic_quiver(config)?,
        "strings-bands" => suite_strings_bands(config)?,
        "zoo" => suite_zoo(config)?,
        "duality" => suite_duality(config)?,
        "dtilde" => suite_dtilde(config)?,
        "diagram-5-10" => suite_diagram(config)?,
        "all" => {
            let mut all = Vec::new();
            for s in SUITE_NAMES.iter().filter(|s| **s != "all") {
                let rep = run_suite(s, config)?;
                for mut c in rep.checks {
                    c.check_id = format!("{s}/{}", c.check_id);
                    all.push(c);
                }
            }
            all
        }
        other => return Err(Error::Parameter(format!("unknown suite `{other}`"))),
    };
    checks.iter_mut().for_each(|_| {});
    let mut report = Report {
        suite: name.to_string(),
        config: *config,
        checks,
        duration_ms: start.elapsed().as_millis(),
    };
    report.sort();
    Ok(report)
}

fn field_for(config: &SuiteConfig) -> Result<Field> {
    Field::new(config.field_ext)
}

// ---------------------------------------------------------------- suites

fn suite_presentations(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let mut dh_opt = None;
    let mut um_opt = None;
    for (name, dim) in
        [("um", 32), ("H", 32), ("Hstar", 32), ("DH", 1024), ("basic", 8), ("quiverQI", 8)]
    {
        let alg = Algebra::build(name, &f, config.exp_bound)?;
        let mut c = check_eq(
            format!("dim/{name}"),
            format!("dimension of {name} with certified local confluence"),
            dim,
            alg.dim(),
        );
        c.witness = Some(format!(
            "{} base rules, {} derived, {} overlaps joined",
            alg.confluence.base_rules, alg.confluence.derived_rules, alg.confluence.overlaps_checked
        ));
        checks.push(c);
        if name == "DH" {
            dh_opt = Some(alg);
        } else if name == "um" {
            um_opt = Some(alg);
        }
    }
    let dh = dh_opt.expect("DH built");
    let um = um_opt.expect("um built");

    // the subalgebra K of the double
    let kgens: Vec<Element> =
        ["x1", "x21", "w1", "w21", "g"].iter().map(|n| dh.gen_element(n).unwrap()).collect();
    let kbasis = dh.subalgebra_basis(&kgens);
    checks.push(check_eq(
        "dim/K-subalgebra",
        "the subalgebra of the double generated by x1, x21, w1, w21, g has dimension 32",
        32,
        kbasis.len(),
    ));

    // dim D(H) = dim H dim H* structurally: basis splits into H x H* halves
    let split_at = dh.system.gen_id("gamma").unwrap() as usize;
    let mut hside = std::collections::BTreeSet::new();
    let mut wside = std::collections::BTreeSet::new();
    for m in &dh.basis {
        hside.insert(m.exps[..split_at].to_vec());
        wside.insert(m.exps[split_at..].to_vec());
    }
    checks.push(check_true(
        "structure/double-factorizes",
        "the PBW basis of the double is the product of the bases of H and H*",
        hside.len() == 32 && wside.len() == 32 && hside.len() * wside.len() == dh.dim(),
        Some(format!("{} x {} = {}", hside.len(), wside.len(), dh.dim())),
    ));

    let ug = Algebra::build("UG", &f, config.exp_bound)?;
    checks.push(check_true(
        "structure/um-is-ug-mod-caps",
        "the straightening rules of u(m) are exactly those of U(G) plus exponent caps",
        rules_extend(&ug, &um),
        None,
    ));

    // the fifteen basic consequences
    for r in identities::check_rows(&um, &identities::um_rows(), config.exp_bound) {
        checks.push(identity_check("relbasic", &r));
    }

    // associativity: exhaustive on small algebras, sampled on the double
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for name in ["um", "H", "Hstar", "basic", "quiverQI"] {
        let alg = if name == "um" { &um } else { &Algebra::build(name, &f, config.exp_bound)? };
        let mut ok = true;
        'outer: for a in &alg.basis {
            let ae = Element::from_monomial(a.clone(), Fq::ONE);
            for b in &alg.basis {
                let be = Element::from_monomial(b.clone(), Fq::ONE);
                let ab = alg.mul(&ae, &be);
                for c in &alg.basis {
                    let ce = Element::from_monomial(c.clone(), Fq::ONE);
                    if alg.mul(&ab, &ce) != alg.mul(&ae, &alg.mul(&be, &ce)) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        checks.push(check_true(
            format!("assoc/{name}"),
            format!("associativity on all basis triples of {name}"),
            ok,
            None,
        ));
    }
    let mut ok = true;
    for _ in 0..10_000 {
        let pick = |rng: &mut ChaCha8Rng| {
            Element::from_monomial(dh.basis[rng.gen_range(0..dh.dim())].clone(), Fq::ONE)
        };
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if dh.mul(&dh.mul(&a, &b), &c) != dh.mul(&a, &dh.mul(&b, &c)) {
            ok = false;
            break;
        }
    }
    checks.push(check_true(
        "assoc/DH",
        "associativity on 10^4 sampled basis triples of the double",
        ok,
        None,
    ));
    Ok(checks)
}

fn identity_check(prefix: &str, r: &identities::RowResult) -> Check {
    let id = format!("{prefix}/{}", r.id);
    match r.holds_under {
        Some(Reading::Literal) => Check {
            check_id: id,
            claim: format!("identity {} holds for all exponents up to the bound", r.id),
            status: Status::Pass,
            expected: "identity".into(),
            actual: "identity".into(),
            witness: None,
        },
        Some(other) => Check {
            check_id: id,
            claim: format!("identity {} as printed needs a corrected reading", r.id),
            status: Status::Unverified,
            expected: "literal identity".into(),
            actual: format!("holds under: {}", other.label()),
            witness: Some(format!(
                "literal reading fails at (m, n) in {:?}; verified under `{}`",
                r.literal_failures,
                other.label()
            )),
        },
        None => Check {
            check_id: id,
            claim: format!("identity {} holds under some documented reading", r.id),
            status: Status::Fail,
            expected: "some reading verifies".into(),
            actual: "none".into(),
            witness: Some(format!("literal failures at {:?}", r.literal_failures)),
        },
    }
}

fn suite_hopf_axioms(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    for name in ["um", "H", "Hstar", "DH"] {
        let h = Hopf::build(name, &f, config.exp_bound)?;
        let fails = h.check_axioms(&h.alg.basis.clone());
        checks.push(check_true(
            format!("axioms/{name}"),
            format!("coassociativity, counit and antipode axioms on the full basis of {name}"),
            fails.is_empty(),
            fails.first().cloned(),
        ));
        if name == "um" {
            let s2 = h.s2_deviation(&h.alg.basis.clone(), None);
            checks.push(check_true(
                "antipode/um-involutory",
                "S^2 = id on the full basis of u(m)",
                s2.is_empty(),
                s2.first().cloned(),
            ));
        }
        if name == "DH" {
            let g = h.alg.gen_element("g")?;
            let s2 = h.s2_deviation(&h.alg.basis.clone(), Some(&g));
            checks.push(check_true(
                "antipode/double-s2-conj-g",
                "S^2 is conjugation by g on the full basis of the double",
                s2.is_empty(),
                s2.first().cloned(),
            ));
        }
    }
    // the infinite double: generators plus random bounded monomials
    let dt = Hopf::build("Dtilde", &f, 3.min(config.exp_bound))?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let probes = dt.probe_monomials(&mut rng, 4, 500);
    let fails = dt.check_axioms(&probes);
    checks.push(check_bounded(
        "axioms/Dtilde",
        "Hopf axioms on generators and 500 random bounded monomials of the infinite double",
        fails.is_empty(),
        fails.first().cloned().unwrap_or_else(|| format!("{} monomials checked", probes.len())),
    ));
    let mut s4_ok = true;
    let mut s4_witness = None;
    let mut s4probes = dt.probe_monomials(&mut rng, 4, 200);
    s4probes.truncate(200);
    for m in &s4probes {
        let e = Element::from_monomial(m.clone(), Fq::ONE);
        let s4 = dt.antipode(&dt.antipode(&dt.antipode(&dt.antipode(&e))));
        if s4 != e {
            s4_ok = false;
            s4_witness = Some(dt.alg.system.word_to_string(&m.to_word()));
            break;
        }
    }
    checks.push(check_true(
        "antipode/Dtilde-s4",
        "S^4 = id on the generators and 200 random bounded monomials of the infinite double",
        s4_ok,
        s4_witness,
    ));
    Ok(checks)
}

fn pi_double_to_um<'a>(dh: &'a Hopf, um: &'a Hopf) -> Result<Morphism<'a>> {
    Morphism::new(
        dh,
        um,
        &[
            ("x1", "0"),
            ("x21", "0"),
            ("x2", "a"),
            ("g", "1"),
            ("gamma", "c"),
            ("w1", "0"),
            ("w21", "0"),
            ("w2", "b"),
        ],
    )
}

fn suite_sequence(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let dh = Hopf::build("DH", &f, config.exp_bound)?;
    let um = Hopf::build("um", &f, config.exp_bound)?;
    let kgens: Vec<Element> =
        ["x1", "x21", "w1", "w21", "g"].iter().map(|n| dh.alg.gen_element(n).unwrap()).collect();
    let kbasis = dh.alg.subalgebra_basis(&kgens);

    let pi = pi_double_to_um(&dh, &um)?;
    let seq = exact_sequence_check(&kbasis, &dh, &pi);
    checks.push(check_true(
        "exact/stage-map",
        "pi is a well-defined Hopf algebra map onto u(m)",
        seq.map_ok.is_none(),
        seq.map_ok.clone(),
    ));
    checks.push(check_true(
        "exact/stage-dims",
        "dim K x dim u(m) = dim D(H)",
        seq.dims_ok.is_none(),
        seq.dims_ok.clone(),
    ));
    checks.push(check_true(
        "exact/stage-kernel",
        "D(H) K+ equals ker pi",
        seq.kernel_ok.is_none(),
        seq.kernel_ok.clone(),
    ));
    checks.push(check_true(
        "exact/stage-coinvariants",
        "K equals the coinvariants of pi",
        seq.coinvariants_ok.is_none(),
        seq.coinvariants_ok.clone(),
    ));
    checks.push(check_eq("exact/kernel-dim", "dim ker pi = 1024 - 32", 992, seq.kernel_dim));

    // K is local: all non-grouplike monomial basis elements are nilpotent
    let mut nilpotent_ok = true;
    let mut witness = None;
    for m in &dh.alg.basis {
        let in_k = {
            let x2 = dh.alg.system.gen_id("x2").unwrap() as usize;
            let w2 = dh.alg.system.gen_id("w2").unwrap() as usize;
            let ga = dh.alg.system.gen_id("gamma").unwrap() as usize;
            m.exps[x2] == 0 && m.exps[w2] == 0 && m.exps[ga] == 0
        };
        if !in_k {
            continue;
        }
        let only_group = m.blocks().all(|(g, _)| dh.alg.system.gen_name(g) == "g");
        if only_group {
            continue;
        }
        let e = Element::from_monomial(m.clone(), Fq::ONE);
        if !dh.alg.is_nilpotent_element(&e) {
            nilpotent_ok = false;
            witness = Some(dh.alg.system.word_to_string(&m.to_word()));
            break;
        }
    }
    let g = dh.alg.gen_element("g")?;
    let one_plus_g = dh.alg.one().add(&f, &g);
    let sq = dh.alg.mul(&one_plus_g, &one_plus_g);
    checks.push(check_true(
        "local/K-nilpotents",
        "every monomial basis element of K other than the grouplikes is nilpotent, and (1+g)^2 = 0",
        nilpotent_ok && sq.is_zero(),
        witness,
    ));

    // normality of K under the adjoint action
    let mut span = Subspace::empty(&f, dh.alg.dim());
    for k in &kbasis {
        span.insert(&f, &dh.alg.to_vec(k));
    }
    let adj = dh.adjoint_stable(&kbasis, |e| span.contains(&f, &dh.alg.to_vec(e)));
    checks.push(check_true(
        "normal/K-adjoint-stable",
        "K is stable under the left adjoint action of the double",
        adj.is_none(),
        adj,
    ));

    // the presented commutative model of K matches the subalgebra
    let kappa = Hopf::build("Kappa", &f, config.exp_bound)?;
    let iota = Morphism::new(
        &kappa,
        &dh,
        &[("x1", "x1"), ("x21", "x21"), ("w1", "w1"), ("w21", "w21"), ("g", "g")],
    )?;
    let iota_ok = iota.check();
    let mut inj_span = Subspace::empty(&f, dh.alg.dim());
    let mut inj = true;
    for m in &kappa.alg.basis {
        if !inj_span.insert(&f, &dh.alg.to_vec(&iota.apply_monomial(m))) {
            inj = false;
            break;
        }
    }
    checks.push(check_true(
        "structure/kappa-presentation",
        "the presented commutative algebra with x1^2 = x21^2 = w1^2 = w21^2 = 0, g^2 = 1 embeds as K",
        iota_ok.is_none() && inj && inj_span.dim() == 32,
        iota_ok,
    ));

    // integrals
    let (dl, dr, duni) = integral_spaces(&dh);
    checks.push(check_true(
        "integrals/double-unimodular",
        "the double is unimodular with one-dimensional coinciding integral spaces",
        duni && dl.dim() == 1 && dr.dim() == 1,
        Some(format!("left dim {}, right dim {}, equal: {}", dl.dim(), dr.dim(), duni)),
    ));
    let (ul, ur, uuni) = integral_spaces(&um);
    let mut c = check_eq(
        "integrals/um-dims",
        "u(m) has one-dimensional left and right integral spaces",
        (1usize, 1usize),
        (ul.dim(), ur.dim()),
    );
    c.witness = Some(format!("spaces coincide: {uuni} (reported, not asserted)"));
    checks.push(c);
    Ok(checks)
}

fn suite_simples(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let um = Algebra::build("um", &f, config.exp_bound)?;
    let (um_simples, um_factors) = classify_simples(&um, &mut rng)?;
    let mut dims: Vec<usize> = um_simples.iter().map(|s| s.dim).collect();
    dims.sort_unstable();
    let mut c = check_eq("simples/um", "u(m) has exactly two simples, of dimensions 1 and 3", vec![1, 3], dims);
    c.witness = Some(format!("meataxe seed {}", config.seed));
    checks.push(c);
    let mut mult = vec![0usize; um_simples.len()];
    for &i in &um_factors {
        mult[i] += 1;
    }
    mult.sort_unstable();
    checks.push(check_eq(
        "simples/um-regular-multiplicities",
        "the regular module of u(m) has each simple eight times among its composition factors",
        vec![8, 8],
        mult,
    ));

    let dh = Algebra::build("DH", &f, config.exp_bound)?;
    let (dh_simples, _) = classify_simples(&dh, &mut rng)?;
    let mut dims: Vec<usize> = dh_simples.iter().map(|s| s.dim).collect();
    dims.sort_unstable();
    checks.push(check_eq(
        "simples/double",
        "the double has exactly two simples, of dimensions 1 and 3",
        vec![1, 3],
        dims,
    ));

    // the explicit matrices of the corollary are the simples of the double
    let v0 = make_module(&um, &ModuleSpec::SimpleV0)?;
    let v1 = make_module(&um, &ModuleSpec::SimpleV1)?;
    let mut matched = 0;
    for target in [&v0, &v1] {
        let up = pullback_to_double(&dh, target)?;
        if dh_simples.iter().any(|s| is_isomorphic(s, &up, &mut rng).is_some()) {
            matched += 1;
        }
    }
    checks.push(check_eq(
        "simples/double-explicit-matrices",
        "the pullbacks of the trivial and the 3-dimensional module are the simples of the double",
        2,
        matched,
    ));

    let basic = Algebra::build("basic", &f, config.exp_bound)?;
    let (basic_simples, _) = classify_simples(&basic, &mut rng)?;
    let mut dims: Vec<usize> = basic_simples.iter().map(|s| s.dim).collect();
    dims.sort_unstable();
    checks.push(check_eq(
        "simples/basic",
        "the basic algebra has exactly two one-dimensional simples",
        vec![1, 1],
        dims,
    ));

    // brute force: every 2-dimensional module over GF(2) is trivial
    let gf2 = Field::gf2();
    let um2 = Algebra::build("um", &gf2, config.exp_bound)?;
    let mats: Vec<crate::matrix::Matrix> = (0..16u32)
        .map(|bits| {
            crate::matrix::Matrix::from_ints(
                &gf2,
                &[
                    &[(bits & 1) as u16, (bits >> 1 & 1) as u16],
                    &[(bits >> 2 & 1) as u16, (bits >> 3 & 1) as u16],
                ],
            )
        })
        .collect();
    let mut valid = 0;
    let mut all_trivial = true;
    for a in &mats {
        for b in &mats {
            for c in &mats {
                let rep =
                    Representation::new(&um2, vec![a.clone(), b.clone(), c.clone()]).unwrap();
                if rep.check().is_empty() {
                    valid += 1;
                    if !rep.is_zero_action() {
                        all_trivial = false;
                    }
                }
            }
        }
    }
    checks.push(check_true(
        "simples/dim2-brute-force",
        "all 2^12 candidate generator triples on k^2 leave only the trivial action",
        all_trivial && valid == 1,
        Some(format!("{valid} valid triples")),
    ));

    // V1 is self-dual
    let um_hopf = Hopf::build("um", &f, config.exp_bound)?;
    let v1_over = make_module(&um_hopf.alg, &ModuleSpec::SimpleV1)?;
    let dual = v1_over.dual(&um_hopf, false);
    checks.push(check_true(
        "simples/v1-self-dual",
        "the 3-dimensional simple is isomorphic to its dual",
        dual.check().is_empty() && is_isomorphic(&v1_over, &dual, &mut rng).is_some(),
        None,
    ));
    Ok(checks)
}

fn suite_ext_table(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let um = Algebra::build("um", &f, config.exp_bound)?;
    let (simples, _) = classify_simples(&um, &mut rng)?;
    let jac = radical_of_algebra(&um, &simples)?;
    let data = BasicAlgebraData::new(&um)?;
    let v0 = make_module(&um, &ModuleSpec::SimpleV0)?;
    let v1 = make_module(&um, &ModuleSpec::SimpleV1)?;

    for (id, e, t, expected) in [
        ("ext/v0-v0", &data.e0, &v0, 0usize),
        ("ext/v0-v1", &data.e0, &v1, 2),
        ("ext/v1-v0", &data.e1, &v0, 2),
        ("ext/v1-v1", &data.e1, &v1, 0),
    ] {
        let dim = ext1(&um, e, t, &jac)?;
        checks.push(check_eq(
            id,
            format!("dim Ext^1 = {expected} between the simples"),
            expected,
            dim,
        ));
    }

    // the explicit 4-dimensional extension family
    let mut family_ok = true;
    let mut indec_ok = true;
    let mut series_ok = true;
    let mut witness = None;
    for theta in f.elements() {
        for lambda in f.elements() {
            for mu in f.elements() {
                let rep = match make_module(&um, &ModuleSpec::Ext(theta, lambda, mu)) {
                    Ok(r) => r,
                    Err(e) => {
                        family_ok = false;
                        witness = Some(format!("{e}"));
                        continue;
                    }
                };
                let zero_params = theta.is_zero() && lambda.is_zero() && mu.is_zero();
                let verdict = is_indecomposable(&rep, &mut rng);
                let expect = if zero_params {
                    Indecomposability::Decomposable
                } else {
                    Indecomposability::Indecomposable
                };
                if verdict != expect {
                    indec_ok = false;
                    witness = Some(format!("({theta},{lambda},{mu}) -> {verdict:?}"));
                }
                // an extension of V0 by V1: factors bottom-up are V1 then V0
                let series = module_series(&rep, &jac, &simples);
                let flat: Vec<usize> =
                    series.factors_bottom_up.iter().flatten().copied().collect();
                let dims: Vec<usize> = flat.iter().map(|&i| simples[i].dim).collect();
                if dims != vec![3, 1] {
                    series_ok = false;
                    witness = Some(format!("({theta},{lambda},{mu}) factors {dims:?}"));
                }
            }
        }
    }
    checks.push(check_true(
        "ext/family-valid",
        "every member of the 4-dimensional family is a module",
        family_ok,
        witness.clone(),
    ));
    checks.push(check_true(
        "ext/family-indecomposable",
        "family members are indecomposable exactly when the parameters are nonzero",
        indec_ok,
        witness.clone(),
    ));
    checks.push(check_true(
        "ext/family-extension-shape",
        "every family member is an extension of the trivial by the 3-dimensional simple",
        series_ok,
        witness,
    ));
    Ok(checks)
}

fn suite_projectives(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let um = Algebra::build("um", &f, config.exp_bound)?;
    let (simples, _) = classify_simples(&um, &mut rng)?;
    let jac = radical_of_algebra(&um, &simples)?;
    let data = BasicAlgebraData::new(&um)?;
    let v0 = make_module(&um, &ModuleSpec::SimpleV0)?;
    let v1 = make_module(&um, &ModuleSpec::SimpleV1)?;
    let m_mod = make_module(&um, &ModuleSpec::ProjM)?;
    let n_mod = make_module(&um, &ModuleSpec::ProjN)?;

    let e0e1 = um.mul(&data.e0, &data.e1);
    checks.push(check_true(
        "idem/orthogonal-idempotents",
        "e0 and e1 are orthogonal idempotents",
        um.mul(&data.e0, &data.e0) == data.e0
            && um.mul(&data.e1, &data.e1) == data.e1
            && e0e1.is_zero(),
        None,
    ));

    let p0 = projective_from_idempotent(&um, &data.e0)?;
    let p1 = projective_from_idempotent(&um, &data.e1)?;
    checks.push(check_eq("proj/dims", "both projective covers have dimension 8", (8, 8), (p0.dim, p1.dim)));
    checks.push(check_true(
        "proj/p0-is-m",
        "u(m) e0 is isomorphic to the explicit module M",
        is_isomorphic(&p0, &m_mod, &mut rng).is_some(),
        None,
    ));
    checks.push(check_true(
        "proj/p1-is-n",
        "u(m) e1 is isomorphic to the explicit module N",
        is_isomorphic(&p1, &n_mod, &mut rng).is_some(),
        None,
    ));
    checks.push(check_eq(
        "proj/bookkeeping",
        "32 = dim P(V0) + 3 dim P(V1)",
        32,
        p0.dim + 3 * p1.dim,
    ));
    // the regular module is the direct sum P0 + 3 P1
    let regular = regular_representation(&um);
    let mut sum = p0.clone();
    for _ in 0..3 {
        sum = sum.direct_sum(&p1);
    }
    checks.push(check_true(
        "proj/regular-decomposition",
        "the regular module is isomorphic to P(V0) + 3 P(V1)",
        is_isomorphic(&regular, &sum, &mut rng).is_some(),
        None,
    ));

    let ident = |rep: &Representation, tgt: &Representation, rng: &mut ChaCha8Rng| {
        rep.dim == tgt.dim && is_isomorphic(rep, tgt, rng).is_some()
    };

    // series of M: socle V0, radical M2, factors V0 | V1 V1 | V0 bottom-up
    let m_series = module_series(&m_mod, &jac, &simples);
    let m_soc = m_mod.sub(&m_mod.socle_subspace(&jac));
    checks.push(check_true(
        "series/m-socle",
        "soc M is the trivial simple",
        ident(&m_soc, &v0, &mut rng),
        Some(format!("socle dim {}", m_soc.dim)),
    ));
    let m2 = Subspace::from_vectors(
        &f,
        8,
        &[0, 1, 2, 3, 5, 6, 7]
            .iter()
            .map(|&i| {
                let mut v = vec![Fq::ZERO; 8];
                v[i] = Fq::ONE;
                v
            })
            .collect::<Vec<_>>(),
    );
    checks.push(check_true(
        "series/m-radical",
        "rad M is the 7-dimensional submodule spanned by all basis vectors except the top",
        m_series.radical_series.len() > 1 && m_series.radical_series[1] == m2,
        Some(format!("rad M dim {}", m_series.radical_series[1].dim())),
    ));
    let m_flat: Vec<usize> = m_series
        .factors_bottom_up
        .iter()
        .flatten()
        .map(|&i| simples[i].dim)
        .collect();
    checks.push(check_eq(
        "series/m-factors",
        "composition factors of M bottom-up have dimensions 1, 3, 3, 1",
        vec![1, 3, 3, 1],
        m_flat,
    ));

    // series of N
    let n_series = module_series(&n_mod, &jac, &simples);
    let n_soc = n_mod.sub(&n_mod.socle_subspace(&jac));
    checks.push(check_true(
        "series/n-socle",
        "soc N is the 3-dimensional simple",
        ident(&n_soc, &v1, &mut rng),
        Some(format!("socle dim {}", n_soc.dim)),
    ));
    let n2 = Subspace::from_vectors(
        &f,
        8,
        &[0, 1, 2, 3, 7]
            .iter()
            .map(|&i| {
                let mut v = vec![Fq::ZERO; 8];
                v[i] = Fq::ONE;
                v
            })
            .collect::<Vec<_>>(),
    );
    checks.push(check_true(
        "series/n-radical",
        "rad N is the expected 5-dimensional submodule",
        n_series.radical_series.len() > 1 && n_series.radical_series[1] == n2,
        Some(format!("rad N dim {}", n_series.radical_series[1].dim())),
    ));
    let n_flat: Vec<usize> = n_series
        .factors_bottom_up
        .iter()
        .flatten()
        .map(|&i| simples[i].dim)
        .collect();
    checks.push(check_eq(
        "series/n-factors",
        "composition factors of N bottom-up have dimensions 3, 1, 1, 3",
        vec![3, 1, 1, 3],
        n_flat,
    ));

    // biseriality witnesses
    let span_of = |idx: &[usize]| {
        Subspace::from_vectors(
            &f,
            8,
            &idx.iter()
                .map(|&i| {
                    let mut v = vec![Fq::ZERO; 8];
                    v[i] = Fq::ONE;
                    v
                })
                .collect::<Vec<_>>(),
        )
    };
    let check_witness = |rep: &Representation,
                         u_idx: &[usize],
                         v_idx: &[usize],
                         rad: &Subspace,
                         meet_target: &Representation,
                         rng: &mut ChaCha8Rng|
     -> (bool, String) {
        let u = span_of(u_idx);
        let v = span_of(v_idx);
        // both stable under the action
        let stable = |s: &Subspace| {
            let seeds: Vec<Vec<Fq>> = s.basis();
            rep.spin(&seeds) == *s
        };
        if !stable(&u) || !stable(&v) {
            return (false, "witness subspaces are not submodules".into());
        }
        let uni_u = crate::rep::is_uniserial(&rep.sub(&u), &jac, &simples);
        let uni_v = crate::rep::is_uniserial(&rep.sub(&v), &jac, &simples);
        let sum = u.sum(&f, &v);
        let meet = u.intersect(&f, &v);
        let meet_rep = rep.sub(&meet);
        let meet_ok =
            meet_rep.dim == meet_target.dim && is_isomorphic(&meet_rep, meet_target, rng).is_some();
        (
            uni_u && uni_v && sum == *rad && meet_ok,
            format!(
                "uniserial: {uni_u}/{uni_v}, sum dim {}, intersection dim {}",
                sum.dim(),
                meet.dim()
            ),
        )
    };
    let (ok_m, wit_m) = check_witness(
        &m_mod,
        &[0, 1, 2, 3],
        &[3, 5, 6, 7],
        &m_series.radical_series[1],
        &v0,
        &mut rng,
    );
    checks.push(check_true(
        "biserial/m-witnesses",
        "rad M = U + V with U, V uniserial and simple trivial intersection",
        ok_m,
        Some(wit_m),
    ));
    let (ok_n, wit_n) = check_witness(
        &n_mod,
        &[0, 1, 2, 3],
        &[1, 2, 3, 7],
        &n_series.radical_series[1],
        &v1,
        &mut rng,
    );
    checks.push(check_true(
        "biserial/n-witnesses",
        "rad N = U' + V' with U', V' uniserial and simple 3-dimensional intersection",
        ok_n,
        Some(wit_n),
    ));

    // Jordan types of the a-action
    for (id, rep, expected) in [
        ("jordan/a-on-v1", &v1, vec![3usize]),
        ("jordan/a-on-m", &m_mod, vec![4, 4]),
        ("jordan/a-on-n", &n_mod, vec![4, 4]),
        ("jordan/a-on-regular", &regular, vec![4; 8]),
    ] {
        let jt = jordan_type(&f, &rep.action[0])?;
        let no_two = !jt.contains(&2);
        let mut c = check_eq(id, "Jordan type of the a-action has no block of size 2", expected, jt);
        if c.status == Status::Pass && !no_two {
            c.status = Status::Fail;
        }
        checks.push(c);
    }
    Ok(checks)
}

fn suite_basic_quiver(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let um = Algebra::build("um", &f, config.exp_bound)?;
    let data = BasicAlgebraData::new(&um)?;
    let e = data.e0.add(&f, &data.e1);

    // the eight listed elements span e u(m) e
    let mut listed = Subspace::empty(&f, 32);
    for (_, el) in &data.basis {
        listed.insert(&f, &um.to_vec(el));
    }
    let mut cut = Subspace::empty(&f, 32);
    for b in &um.basis {
        let be = Element::from_monomial(b.clone(), Fq::ONE);
        let ebe = um.mul(&e, &um.mul(&be, &e));
        cut.insert(&f, &um.to_vec(&ebe));
    }
    checks.push(check_true(
        "basis/e-cut",
        "the eight listed elements are a basis of e u(m) e",
        listed.dim() == 8 && listed == cut,
        Some(format!("listed dim {}, cut dim {}", listed.dim(), cut.dim())),
    ));

    // auxiliary identities around the idempotents
    let el = |s: &str| um.element(s).unwrap();
    let prod = |xs: &[&Element]| {
        let mut acc = um.one();
        for x in xs {
            acc = um.mul(&acc, x);
        }
        acc
    };
    let idem_rows: Vec<(&str, Element, Element)> = vec![
        ("ab3e0", prod(&[&el("a b^3"), &data.e0]), prod(&[&el("b^2"), &data.e0])),
        ("a2b3e0", prod(&[&el("a^2 b^3"), &data.e0]), prod(&[&el("b"), &data.e0])),
        (
            "a3b3e0",
            prod(&[&el("a^3 b^3"), &data.e0]),
            prod(&[&el("a b").add(&f, &el("c")), &data.e0]),
        ),
        ("ba3e0", prod(&[&el("b a^3"), &data.e0]), prod(&[&el("a^2"), &data.e0])),
        ("b2a3e0", prod(&[&el("b^2 a^3"), &data.e0]), prod(&[&el("a"), &data.e0])),
        (
            "b3a3e0",
            prod(&[&el("b^3 a^3"), &data.e0]),
            prod(&[&el("a b").add(&f, &el("c")), &data.e0]),
        ),
        ("ba3e1", prod(&[&el("b a^3"), &data.e1]), prod(&[&el("a^3 b"), &data.e1])),
        ("b2a3e1", prod(&[&el("b^2 a^3"), &data.e1]), prod(&[&el("a^2 b"), &data.e1])),
        ("b3a3e1", prod(&[&el("b^3 a^3"), &data.e1]), prod(&[&el("a b"), &data.e1])),
        (
            "ba2e1",
            prod(&[&el("b a^2"), &data.e1]),
            prod(&[&el("b a"), &data.e1]).add(&f, &prod(&[&el("b a^2 b"), &data.e1])),
        ),
        (
            "bae1",
            prod(&[&el("b a"), &data.e1]),
            prod(&[&el("b"), &data.e1]).add(&f, &prod(&[&el("b a b"), &data.e1])),
        ),
    ];
    let failures: Vec<&str> =
        idem_rows.iter().filter(|(_, l, r)| l != r).map(|(id, _, _)| *id).collect();
    checks.push(check_true(
        "idem/companion-relations",
        "the companion identities of the idempotent construction hold in u(m)",
        failures.is_empty(),
        if failures.is_empty() { None } else { Some(format!("failing: {failures:?}")) },
    ));

    // radical of the basic algebra via the presented model
    let basic = Algebra::build("basic", &f, config.exp_bound)?;
    let (bsimples, _) = classify_simples(&basic, &mut rng)?;
    let bjac = radical_of_algebra(&basic, &bsimples)?;
    // map the presented radical into u(m) through the generator names
    let to_um = |x: &Element| -> Element {
        let mut out = Element::zero();
        for (m, &c) in &x.terms {
            let mut acc = um.one();
            for (g, exp) in m.blocks() {
                let name = basic.system.gen_name(g);
                let img = data.element(name);
                for _ in 0..exp {
                    acc = um.mul(&acc, img);
                }
            }
            // e0 component of 1 = e0 + e1 is handled through the basis map
            out.add_assign(&f, &acc.scale(&f, c));
        }
        out
    };
    let mut jac_span = Subspace::empty(&f, 32);
    for j in &bjac {
        jac_span.insert(&f, &um.to_vec(&to_um(j)));
    }
    let mut listed_jac = Subspace::empty(&f, 32);
    for name in ["ae0", "a3e1", "b3e0", "be1", "a3b3e0", "abe1"] {
        listed_jac.insert(&f, &um.to_vec(data.element(name)));
    }
    checks.push(check_true(
        "radical/basic-jac",
        "the radical of the basic algebra is spanned by the six listed elements",
        bjac.len() == 6 && jac_span == listed_jac,
        Some(format!("computed dim {}, listed dim {}", jac_span.dim(), listed_jac.dim())),
    ));
    // Jac^2
    let mut jac2_span = Subspace::empty(&f, 32);
    for x in &bjac {
        for y in &bjac {
            jac2_span.insert(&f, &um.to_vec(&um.mul(&to_um(x), &to_um(y))));
        }
    }
    let mut listed_jac2 = Subspace::empty(&f, 32);
    for name in ["a3b3e0", "abe1"] {
        listed_jac2.insert(&f, &um.to_vec(data.element(name)));
    }
    checks.push(check_true(
        "radical/basic-jac2",
        "the square of the radical is spanned by the two loops",
        jac2_span == listed_jac2,
        Some(format!("dim {}", jac2_span.dim())),
    ));

    // phi: kQ/I -> e u(m) e, arrows to the four radical generators
    let quiver = Algebra::build("quiverQI", &f, config.exp_bound)?;
    let arrow_images = [
        ("a1", "a3e1"),
        ("a2", "be1"),
        ("b1", "ae0"),
        ("b2", "b3e0"),
        ("eps1", "e1"),
    ];
    let img_of = |g: GenId| -> Element {
        let name = quiver.system.gen_name(g);
        let target = arrow_images.iter().find(|(a, _)| *a == name).unwrap().1;
        data.element(target).clone()
    };
    let mut rel_ok = true;
    let mut rel_witness = None;
    for rel in &quiver.system.relations {
        let mut sum = Element::zero();
        for (c, w) in &rel.sum {
            let mut acc = um.one();
            for &(g, exp) in w {
                for _ in 0..exp {
                    acc = um.mul(&acc, &img_of(g));
                }
            }
            sum.add_assign(&f, &acc.scale(&f, *c));
        }
        if !sum.is_zero() {
            rel_ok = false;
            rel_witness = Some(rel.source.clone());
            break;
        }
    }
    checks.push(check_true(
        "phi/relations-vanish",
        "the six quiver relations and the vertex relations map to zero in u(m)",
        rel_ok,
        rel_witness,
    ));
    let mut image_span = Subspace::empty(&f, 32);
    for m in &quiver.basis {
        let mut acc = um.one();
        for (g, exp) in m.blocks() {
            for _ in 0..exp {
                acc = um.mul(&acc, &img_of(g));
            }
        }
        image_span.insert(&f, &um.to_vec(&acc));
    }
    checks.push(check_true(
        "phi/surjective",
        "phi maps the 8-dimensional bound quiver algebra onto e u(m) e",
        image_span.dim() == 8 && image_span == cut,
        Some(format!("image dim {}", image_span.dim())),
    ));
    checks.push(check_eq("phi/quiver-dim", "dim kQ/I = 8", 8, quiver.dim()));

    // psi is anti-multiplicative on all 64 basis pairs
    let mut basis_span = Subspace::empty(&f, 32);
    for (_, el) in &data.basis {
        basis_span.insert(&f, &um.to_vec(el));
    }
    let coords = |x: &Element| basis_span.coords_of(&f, &um.to_vec(x));
    let psi_of = |x: &Element| -> Option<Element> {
        let co = coords(x)?;
        // column i of the echelon basis corresponds to a combination of the
        // listed elements; express through the listed basis instead
        let mut out = Element::zero();
        // solve in terms of the listed basis directly
        let _ = co;
        // build the transition once per call (cheap at this size)
        let mut listed_vecs: Vec<Vec<Fq>> = Vec::new();
        for (_, el) in &data.basis {
            listed_vecs.push(um.to_vec(el));
        }
        let mut aug = crate::matrix::Matrix::zero(&f, 32, 9);
        for (j, v) in listed_vecs.iter().enumerate() {
            for (i, &val) in v.iter().enumerate() {
                aug.set(i, j, val);
            }
        }
        let xv = um.to_vec(x);
        for (i, &val) in xv.iter().enumerate() {
            aug.set(i, 8, val);
        }
        let red = aug.row_reduce(&f);
        // coefficients of x in the listed basis from the reduced system
        let mut coeffs = vec![Fq::ZERO; 8];
        for r in 0..red.rank {
            let Some(&p) = red.pivots.get(r) else { continue };
            if p < 8 {
                coeffs[p] = red.rref.get(r, 8);
            } else {
                return None; // inconsistent
            }
        }
        for (j, &cj) in coeffs.iter().enumerate() {
            if !cj.is_zero() {
                out.add_assign(&f, &data.basis[data.psi[j]].1.scale(&f, cj));
            }
        }
        Some(out)
    };
    let mut psi_ok = true;
    let mut psi_witness = None;
    'psi: for (xn, x) in &data.basis {
        for (yn, y) in &data.basis {
            let lhs = psi_of(&um.mul(x, y));
            let rhs = psi_of(y).zip(psi_of(x)).map(|(a, b)| um.mul(&a, &b));
            if lhs != rhs || lhs.is_none() {
                psi_ok = false;
                psi_witness = Some(format!("psi({xn} {yn})"));
                break 'psi;
            }
        }
    }
    checks.push(check_true(
        "psi/anti-automorphism",
        "psi is anti-multiplicative on all 64 basis pairs",
        psi_ok,
        psi_witness,
    ));

    // Gabriel data: arrow counts from the radical layers of the cut
    let quiver_arrows = {
        // e_i (Jac/Jac^2) e_j dimensions
        let mut dims = [[0usize; 2]; 2];
        let es = [&data.e0, &data.e1];
        for (i, ei) in es.iter().enumerate() {
            for (j, ej) in es.iter().enumerate() {
                let mut span = Subspace::empty(&f, 32);
                for v in listed_jac.basis() {
                    let x = um.from_vec(&v);
                    let cut_x = um.mul(ei, &um.mul(&x, ej));
                    // reduce modulo Jac^2
                    let r = listed_jac2.reduce(&f, &um.to_vec(&cut_x));
                    span.insert(&f, &r);
                }
                dims[i][j] = span.dim();
            }
        }
        dims
    };
    checks.push(check_eq(
        "quiver/gabriel-arrows",
        "the radical layer has two arrows each way and no loops",
        [[0, 2], [2, 0]],
        quiver_arrows,
    ));
    Ok(checks)
}

fn suite_strings_bands(config: &SuiteConfig) -> Result<Vec<Check>> {
    let _ = config;
    let q = QuiverData::new();
    let mut checks = Vec::new();
    let found = enumerate_strings(&q, 10)?;
    let expected = expected_strings(10);
    checks.push(check_true(
        "strings/enumeration-matches-families",
        "exhaustive string enumeration to length 10 reproduces the eight classified families",
        found == expected,
        Some(format!("{} strings found, {} expected", found.len(), expected.len())),
    ));
    let found2 = enumerate_strings(&q, 2)?;
    checks.push(check_eq(
        "strings/short-walks",
        "the strings of length at most 2 are the trivial paths, arrows, half-turns and inverses",
        18,
        found2.len(),
    ));
    let bands = enumerate_bands(&q);
    checks.push(check_eq(
        "bands/two-classes",
        "there are exactly two band classes up to rotation and inversion",
        2,
        bands.len(),
    ));
    checks.push(check_eq(
        "strings/eight-families",
        "the classification lists eight string families",
        8,
        [
            StringFamily::U1,
            StringFamily::U2,
            StringFamily::U3,
            StringFamily::U4,
            StringFamily::V1,
            StringFamily::V2,
            StringFamily::W1,
            StringFamily::W2,
        ]
        .len(),
    ));
    Ok(checks)
}

/// The zoo sweeps escalate the field so band parameters range over a
/// nontrivial set of scalars.
fn zoo_field(config: &SuiteConfig) -> Result<(Field, Option<Check>)> {
    if config.field_ext >= 4 {
        Ok((Field::new(config.field_ext)?, None))
    } else {
        let notice = Check {
            check_id: "config/field-escalation".into(),
            claim: "band and twist sweeps need at least GF(16); field extension escalated to 4"
                .into(),
            status: Status::Pass,
            expected: "k >= 4".into(),
            actual: format!("requested {}, using 4", config.field_ext),
            witness: None,
        };
        Ok((Field::new(4)?, Some(notice)))
    }
}

fn zoo_members(config: &SuiteConfig, field: &Field) -> Vec<ModuleSpec> {
    let mut specs = vec![
        ModuleSpec::SimpleV0,
        ModuleSpec::SimpleV1,
        ModuleSpec::ProjM,
        ModuleSpec::ProjN,
    ];
    for fam in [StringFamily::U1, StringFamily::U2, StringFamily::U3, StringFamily::U4] {
        for r in 1..=config.range {
            specs.push(ModuleSpec::String(fam, r));
        }
    }
    for fam in [StringFamily::V1, StringFamily::V2, StringFamily::W1, StringFamily::W2] {
        for t in 0..=config.range {
            specs.push(ModuleSpec::String(fam, t));
        }
    }
    for lambda in field.nonzero_elements() {
        for n in 1..=config.nmax {
            specs.push(ModuleSpec::BandA(lambda, n));
            specs.push(ModuleSpec::BandB(lambda, n));
        }
    }
    specs
}

fn suite_zoo(config: &SuiteConfig) -> Result<Vec<Check>> {
    use rayon::prelude::*;
    let (f, notice) = zoo_field(config)?;
    let mut checks = Vec::new();
    checks.extend(notice);
    let um = Algebra::build("um", &f, config.exp_bound)?;
    let specs = zoo_members(config, &f);

    // build everything once; the constructor validates the relations
    let mut reps = Vec::new();
    let mut valid_ok = true;
    let mut dim_ok = true;
    let mut witness = None;
    for spec in &specs {
        match make_module(&um, spec) {
            Ok(rep) => {
                if rep.dim != spec.dim() {
                    dim_ok = false;
                    witness = Some(spec.label());
                }
                reps.push((spec.clone(), rep));
            }
            Err(e) => {
                valid_ok = false;
                witness = Some(format!("{}: {e}", spec.label()));
            }
        }
    }
    checks.push(check_true(
        "zoo/all-valid",
        format!("all {} family members in range are modules over u(m)", specs.len()),
        valid_ok,
        witness.clone(),
    ));
    checks.push(check_true(
        "zoo/dimension-formulas",
        "every member has the dimension its family prescribes",
        dim_ok,
        witness,
    ));

    // c acts idempotently (diagonal 0/1 per the tables)
    let mut c_ok = true;
    for (spec, rep) in &reps {
        let c = &rep.action[2];
        if &c.mul(&f, c) != c {
            c_ok = false;
            checks.push(check_true(
                format!("zoo/c-idempotent/{}", spec.label()),
                "the c-action is idempotent",
                false,
                None,
            ));
        }
    }
    checks.push(check_true(
        "zoo/c-idempotent",
        "the c-action is an idempotent diagonal on every member",
        c_ok,
        None,
    ));

    // indecomposability and Jordan blocks, in parallel
    let results: Vec<(String, bool, bool, Option<String>)> = reps
        .par_iter()
        .map(|(spec, rep)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed);
            let verdict = is_indecomposable(rep, &mut rng);
            let indec = verdict == Indecomposability::Indecomposable;
            let jt = jordan_type(&f, &rep.action[0]).unwrap_or_default();
            let no_two = !jt.contains(&2);
            let wit = if indec && no_two {
                None
            } else {
                Some(format!("indecomposable: {verdict:?}, jordan {jt:?}"))
            };
            (spec.label(), indec, no_two, wit)
        })
        .collect();
    let indec_fail: Vec<&String> =
        results.iter().filter(|(_, i, _, _)| !i).map(|(l, _, _, _)| l).collect();
    checks.push(check_true(
        "zoo/all-indecomposable",
        "every member in range is indecomposable (certified through the endomorphism ring)",
        indec_fail.is_empty(),
        if indec_fail.is_empty() { None } else { Some(format!("{indec_fail:?}")) },
    ));
    let jordan_fail: Vec<&String> =
        results.iter().filter(|(_, _, j, _)| !j).map(|(l, _, _, _)| l).collect();
    checks.push(check_true(
        "zoo/no-jordan-two-blocks",
        "the a-action has no Jordan block of size 2 on any member",
        jordan_fail.is_empty(),
        if jordan_fail.is_empty() { None } else { Some(format!("{jordan_fail:?}")) },
    ));

    // pairwise non-isomorphic within equal dimension
    let mut by_dim: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, (_, rep)) in reps.iter().enumerate() {
        by_dim.entry(rep.dim).or_default().push(i);
    }
    let pairs: Vec<(usize, usize)> = by_dim
        .values()
        .flat_map(|ids| {
            let ids = ids.clone();
            (0..ids.len())
                .flat_map(move |i| {
                    let ids2 = ids.clone();
                    ((i + 1)..ids2.len()).map(move |j| (ids2[i], ids2[j]))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let iso_pairs: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (i as u64) << 20 ^ j as u64);
            if is_isomorphic(&reps[i].1, &reps[j].1, &mut rng).is_some() {
                Some(format!("{} = {}", reps[i].0.label(), reps[j].0.label()))
            } else {
                None
            }
        })
        .collect();
    checks.push(check_true(
        "zoo/pairwise-distinct",
        format!(
            "the {} equal-dimension pairs in range are pairwise non-isomorphic",
            pairs.len()
        ),
        iso_pairs.is_empty(),
        if iso_pairs.is_empty() { None } else { Some(format!("{iso_pairs:?}")) },
    ));

    // pullback along the projection from the double preserves validity and
    // indecomposability
    let dh = Algebra::build("DH", &f, config.exp_bound)?;
    let lambda = f.nonzero_elements().nth(1).unwrap_or(Fq::ONE);
    let mut up_ok = true;
    let mut up_witness = None;
    for spec in [
        ModuleSpec::SimpleV0,
        ModuleSpec::SimpleV1,
        ModuleSpec::String(StringFamily::U1, 1),
        ModuleSpec::BandA(lambda, 1),
    ] {
        let rep = make_module(&um, &spec)?;
        match pullback_to_double(&dh, &rep) {
            Ok(up) => {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                if is_indecomposable(&up, &mut rng) != Indecomposability::Indecomposable {
                    up_ok = false;
                    up_witness = Some(format!("{} decomposes upstairs", spec.label()));
                }
            }
            Err(e) => {
                up_ok = false;
                up_witness = Some(format!("{}: {e}", spec.label()));
            }
        }
    }
    checks.push(check_true(
        "zoo/pullback-indecomposable",
        "pulled back members stay valid and indecomposable over the double",
        up_ok,
        up_witness,
    ));
    Ok(checks)
}

fn suite_duality(config: &SuiteConfig) -> Result<Vec<Check>> {
    use rayon::prelude::*;
    let (f, notice) = zoo_field(config)?;
    let mut checks = Vec::new();
    checks.extend(notice);
    let um = Hopf::build("um", &f, config.exp_bound)?;
    let lambda_one = Fq::ONE;

    // the duality table
    let mut table: Vec<(String, ModuleSpec, ModuleSpec)> = Vec::new();
    for r in 1..=config.range {
        table.push((
            format!("u1-u4/r{r}"),
            ModuleSpec::String(StringFamily::U1, r),
            ModuleSpec::String(StringFamily::U4, r),
        ));
        table.push((
            format!("u2-u3/r{r}"),
            ModuleSpec::String(StringFamily::U2, r),
            ModuleSpec::String(StringFamily::U3, r),
        ));
    }
    for t in 0..=config.range {
        table.push((
            format!("v1-w1/t{t}"),
            ModuleSpec::String(StringFamily::V1, t),
            ModuleSpec::String(StringFamily::W1, t),
        ));
        table.push((
            format!("v2-w2/t{t}"),
            ModuleSpec::String(StringFamily::V2, t),
            ModuleSpec::String(StringFamily::W2, t),
        ));
    }
    for lambda in f.nonzero_elements() {
        for n in 1..=config.nmax {
            table.push((
                format!("a-b/l{}n{n}", lambda.0),
                ModuleSpec::BandA(lambda, n),
                ModuleSpec::BandB(lambda, n),
            ));
        }
    }
    let failures: Vec<String> = table
        .par_iter()
        .filter_map(|(id, src, dst)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let s = make_module(&um.alg, src).ok()?;
            let d = make_module(&um.alg, dst).ok()?;
            let dual = s.dual(&um, false);
            if !dual.check().is_empty() || is_isomorphic(&dual, &d, &mut rng).is_none() {
                Some(id.clone())
            } else {
                None
            }
        })
        .collect();
    checks.push(check_true(
        "duality/table",
        format!("the {} dual pairs of the classification match", table.len()),
        failures.is_empty(),
        if failures.is_empty() { None } else { Some(format!("{failures:?}")) },
    ));

    // double duals
    let mut dd_ok = true;
    let mut dd_witness = None;
    for spec in [
        ModuleSpec::SimpleV1,
        ModuleSpec::ProjM,
        ModuleSpec::String(StringFamily::U2, 1),
        ModuleSpec::BandA(lambda_one, 2),
    ] {
        let rep = make_module(&um.alg, &spec)?;
        let dd = rep.dual(&um, false).dual(&um, false);
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        if is_isomorphic(&rep, &dd, &mut rng).is_none() {
            dd_ok = false;
            dd_witness = Some(spec.label());
        }
    }
    checks.push(check_true(
        "duality/double-dual",
        "taking duals twice returns the module up to isomorphism",
        dd_ok,
        dd_witness,
    ));

    // the Chevalley twist inverts the band parameter
    let images = crate::zoo::chevalley_images(&um.alg)?;
    let twist_failures: Vec<String> = f
        .nonzero_elements()
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|&lambda| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let a = make_module(&um.alg, &ModuleSpec::BandA(lambda, 2)).ok()?;
            let twisted = a.twist(&images);
            if !twisted.check().is_empty() {
                return Some(format!("twist of A({},2) is not a module", lambda.0));
            }
            let inv = f.inv(lambda)?;
            let target = make_module(&um.alg, &ModuleSpec::BandA(inv, 2)).ok()?;
            if is_isomorphic(&twisted, &target, &mut rng).is_none() {
                Some(format!("A({},2)^theta != A({},2)", lambda.0, inv.0))
            } else {
                None
            }
        })
        .collect();
    let mut c = check_true(
        "duality/chevalley-twist",
        "twisting a band module by the Chevalley involution inverts the parameter",
        twist_failures.is_empty(),
        if twist_failures.is_empty() { None } else { Some(format!("{twist_failures:?}")) },
    );
    if c.witness.is_none() {
        c.witness = Some(
            "the involution equals its inverse, so both twist orientations coincide".into(),
        );
    }
    checks.push(c);

    // distinct band parameters give distinct modules
    let lambdas: Vec<Fq> = f.nonzero_elements().collect();
    let mut sep_ok = true;
    let mut sep_witness = None;
    'sep: for n in 1..=config.nmax.min(2) {
        for (i, &l1) in lambdas.iter().enumerate() {
            for &l2 in &lambdas[i + 1..] {
                let a1 = make_module(&um.alg, &ModuleSpec::BandA(l1, n))?;
                let a2 = make_module(&um.alg, &ModuleSpec::BandA(l2, n))?;
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                if is_isomorphic(&a1, &a2, &mut rng).is_some() {
                    sep_ok = false;
                    sep_witness = Some(format!("A({},{n}) = A({},{n})", l1.0, l2.0));
                    break 'sep;
                }
            }
        }
    }
    checks.push(check_true(
        "duality/band-parameters-distinct",
        "band modules with distinct parameters are non-isomorphic at fixed length",
        sep_ok,
        sep_witness,
    ));
    Ok(checks)
}

/// Membership in the commutative subalgebra N of the infinite double,
/// generated by x2^4, x21^2, g^{+-2}, w2^4, w21^2, zeta^2 + zeta: reduce
/// by the triangular basis of products.
fn n_membership(dt: &Algebra, x: &Element) -> bool {
    let f = &dt.field;
    let idx = |n: &str| dt.system.gen_id(n).unwrap() as usize;
    let (ix1, ix21, ix2, ig, iz, iw1, iw21, iw2) = (
        idx("x1"),
        idx("x21"),
        idx("x2"),
        idx("g"),
        idx("zeta"),
        idx("w1"),
        idx("w21"),
        idx("w2"),
    );
    let zeta2 = {
        let z = dt.gen_element("zeta").unwrap();
        dt.mul(&z, &z).add(f, &z)
    };
    let mut rem = x.clone();
    let mut steps = 0;
    while let Some((lead, coeff)) = rem.leading() {
        steps += 1;
        if steps > 10_000 {
            return false;
        }
        let e = &lead.exps;
        let fits = e[ix1] == 0
            && e[iw1] == 0
            && e[ix21] % 2 == 0
            && e[ix2] % 4 == 0
            && e[ig] % 2 == 0
            && e[iw21] % 2 == 0
            && e[iw2] % 4 == 0
            && e[iz] % 2 == 0
            && e[iz] >= 0;
        if !fits {
            return false;
        }
        // the product of generators with this leading monomial
        let mut prod = Element::one(dt.num_gens());
        let mut mono = Monomial::one(dt.num_gens());
        mono.exps[ix21] = e[ix21];
        mono.exps[ix2] = e[ix2];
        mono.exps[ig] = e[ig];
        mono.exps[iw21] = e[iw21];
        mono.exps[iw2] = e[iw2];
        prod = dt.mul(&prod, &Element::from_monomial(mono, Fq::ONE));
        for _ in 0..e[iz] / 2 {
            prod = dt.mul(&prod, &zeta2);
        }
        rem.add_assign(f, &prod.scale(f, coeff));
    }
    true
}

fn suite_dtilde(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let dt = Hopf::build("Dtilde", &f, config.exp_bound)?;
    {
        let r = &dt.alg.confluence;
        let mut c = check_true(
            "confluence/dtilde",
            format!("local confluence of the infinite double to exponent bound {}", r.bound),
            r.is_certified(),
            Some(format!(
                "{} base rules, {} derived, {} overlaps joined",
                r.base_rules, r.derived_rules, r.overlaps_checked
            )),
        );
        if c.status == Status::Pass {
            c.status = Status::BoundedEvidence;
        }
        checks.push(c);
    }

    // consequence identity families
    let ht = Algebra::build("Htilde", &f, 3.min(config.exp_bound))?;
    for r in identities::check_rows(&ht, &identities::x_side_rows(), config.exp_bound) {
        checks.push(identity_check("commutation-htilde", &r));
    }
    let kt = Algebra::build("Ktilde", &f, 3.min(config.exp_bound))?;
    for r in identities::check_rows(&kt, &identities::k_side_rows(), config.exp_bound) {
        checks.push(identity_check("relations-dual", &r));
    }
    for r in identities::check_rows(&dt.alg, &identities::x_side_rows(), config.exp_bound) {
        checks.push(identity_check("commutation-in-double", &r));
    }
    for r in identities::check_rows(&dt.alg, &identities::k_side_rows(), config.exp_bound) {
        checks.push(identity_check("relations-dual-in-double", &r));
    }
    for r in identities::check_rows(&dt.alg, &identities::dtilde_rows(), config.exp_bound) {
        checks.push(identity_check("commutation-double", &r));
    }

    // the projection onto the finite double and the map onto U(G)
    let dh = Hopf::build("DH", &f, config.exp_bound)?;
    let pr = Morphism::new(
        &dt,
        &dh,
        &[
            ("x1", "x1"),
            ("x21", "x21"),
            ("x2", "x2"),
            ("g", "g"),
            ("zeta", "gamma"),
            ("w1", "w1"),
            ("w21", "w21"),
            ("w2", "w2"),
        ],
    )?;
    let pr_ok = pr.check();
    checks.push(check_true(
        "morphism/projection-to-double",
        "imposing the caps is a Hopf epimorphism onto the finite double",
        pr_ok.is_none(),
        pr_ok,
    ));
    let ug = Hopf::build("UG", &f, config.exp_bound)?;
    let piu = Morphism::new(
        &dt,
        &ug,
        &[
            ("x1", "0"),
            ("x21", "0"),
            ("x2", "a"),
            ("g", "1"),
            ("zeta", "c"),
            ("w1", "0"),
            ("w21", "0"),
            ("w2", "b"),
        ],
    )?;
    let piu_ok = piu.check();
    checks.push(check_true(
        "morphism/onto-enveloping",
        "x2, w2, zeta map to a, b, c in a Hopf epimorphism onto U(G)",
        piu_ok.is_none(),
        piu_ok,
    ));

    // the commutative subalgebra N
    let ngens: Vec<(String, Element)> = vec![
        ("x2^4".into(), dt.alg.element("x2^4")?),
        ("x21^2".into(), dt.alg.element("x21^2")?),
        ("g^2".into(), dt.alg.element("g^2")?),
        ("w2^4".into(), dt.alg.element("w2^4")?),
        ("w21^2".into(), dt.alg.element("w21^2")?),
        ("zeta2".into(), {
            let z = dt.alg.gen_element("zeta")?;
            dt.alg.mul(&z, &z).add(&f, &z)
        }),
    ];
    let elems: Vec<Element> = ngens.iter().map(|(_, e)| e.clone()).collect();
    let comm = dt.alg.check_commutative(&elems);
    checks.push(check_true(
        "n/commutative",
        "the six generators of N commute",
        comm.is_none(),
        comm.map(|(_, _, d)| dt.alg.show(&d)),
    ));

    let adj = dt.adjoint_stable(&elems, |e| n_membership(&dt.alg, e));
    checks.push(check_true(
        "n/adjoint-stable",
        "N is stable under the adjoint action of every generator of the infinite double",
        adj.is_none(),
        adj,
    ));

    // coproducts of the N generators land in N (x) N
    let mut delta_ok = true;
    let mut delta_witness = None;
    for (name, gen) in &ngens {
        let d = dt.coproduct(gen);
        // row and column fibers must lie in N
        let mut lefts: std::collections::BTreeMap<Monomial, Element> = Default::default();
        let mut rights: std::collections::BTreeMap<Monomial, Element> = Default::default();
        for ((m1, m2), &c) in &d.terms {
            lefts
                .entry(m2.clone())
                .or_insert_with(Element::zero)
                .add_term(&f, m1.clone(), c);
            rights
                .entry(m1.clone())
                .or_insert_with(Element::zero)
                .add_term(&f, m2.clone(), c);
        }
        if !lefts.values().all(|e| n_membership(&dt.alg, e))
            || !rights.values().all(|e| n_membership(&dt.alg, e))
        {
            delta_ok = false;
            delta_witness = Some(name.clone());
        }
    }
    checks.push(check_true(
        "n/coproduct-closed",
        "the coproduct of every N generator lies in N (x) N",
        delta_ok,
        delta_witness,
    ));

    // free polynomial / Laurent evidence: products of the generators up to
    // a degree bound have pairwise distinct leading monomials
    let bound = config.exp_bound as i64;
    let mut leads = std::collections::BTreeSet::new();
    let mut count = 0usize;
    let mut indep = true;
    for a in 0..=bound / 4 {
        for b in 0..=bound / 2 {
            for c in -(bound / 2)..=bound / 2 {
                for d in 0..=bound / 4 {
                    for e2 in 0..=bound / 2 {
                        for ff in 0..=bound / 2 {
                            let mut prod = Element::one(dt.alg.num_gens());
                            let pw = |x: &Element, n: i64, acc: &Element| {
                                let mut out = acc.clone();
                                for _ in 0..n {
                                    out = dt.alg.mul(&out, x);
                                }
                                out
                            };
                            prod = pw(&elems[0], a, &prod);
                            prod = pw(&elems[1], b, &prod);
                            if c >= 0 {
                                prod = pw(&elems[2], c, &prod);
                            } else {
                                let ginv2 = dt.alg.element("g^-2")?;
                                prod = pw(&ginv2, -c, &prod);
                            }
                            prod = pw(&elems[3], d, &prod);
                            prod = pw(&elems[4], e2, &prod);
                            prod = pw(&elems[5], ff, &prod);
                            count += 1;
                            match prod.leading() {
                                Some((m, _)) => {
                                    if !leads.insert(m.clone()) {
                                        indep = false;
                                    }
                                }
                                None => indep = false,
                            }
                        }
                    }
                }
            }
        }
    }
    checks.push(check_bounded(
        "n/free-commutative",
        "monomials in the N generators are linearly independent up to the degree bound",
        indep,
        format!("{count} products, {} distinct leading monomials", leads.len()),
    ));

    // kernel side of the sequence through N: the projection kills N+
    let mut kill_ok = true;
    let mut kill_witness = None;
    for (name, gen) in &ngens {
        let eps = dt.counit(gen);
        let img = pr.apply(&gen.add(&f, &dh.alg.one().scale(&f, eps).into()));
        // gen - eps(gen) 1 maps to zero
        let shifted = gen.add(&f, &dt.alg.one().scale(&f, eps));
        let img = pr.apply(&shifted);
        if !img.is_zero() {
            kill_ok = false;
            kill_witness = Some(format!("{name} maps to {}", dh.alg.show(&img)));
        }
        let _ = img;
    }
    checks.push(check_true(
        "n/kernel-generators",
        "the projection to the finite double kills the augmentation ideal of N",
        kill_ok,
        kill_witness,
    ));

    // bounded coinvariants: inside the degree window, the coinvariants of
    // the projection are exactly the N monomials
    let window = 4.min(config.exp_bound) as i64;
    let coinv = bounded_coinvariants(&dt, &dh, &pr, window)?;
    let mut expected = Subspace::empty(&f, coinv.window.len());
    for (i, m) in coinv.window.iter().enumerate() {
        let e = Element::from_monomial(m.clone(), Fq::ONE);
        if n_membership(&dt.alg, &e) {
            let mut v = vec![Fq::ZERO; coinv.window.len()];
            v[i] = Fq::ONE;
            expected.insert(&f, &v);
        }
    }
    // N-elements inside the window span: compare against solved coinvariants
    checks.push(check_bounded(
        "n/coinvariants",
        "within the degree window the coinvariants of the projection form exactly N",
        coinv.space == expected,
        format!(
            "window of {} monomials, coinvariants dim {}, N dim {}",
            coinv.window.len(),
            coinv.space.dim(),
            expected.dim()
        ),
    ));
    Ok(checks)
}

struct BoundedCoinvariants {
    window: Vec<Monomial>,
    space: Subspace,
}

/// Solve (id (x) pi) Delta(x) = x (x) 1 for x in the span of source
/// monomials of total degree <= window, pi landing in a finite target.
fn bounded_coinvariants(
    a: &Hopf,
    b: &Hopf,
    pi: &Morphism,
    window: i64,
) -> Result<BoundedCoinvariants> {
    let f = a.field();
    let window_monos = a.alg.system.enumerate_basis(Some(window))?;
    let n = window_monos.len();
    let mono_index: std::collections::HashMap<Monomial, usize> =
        window_monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    // coordinates (left monomial of A, basis index of B)
    let mut coords: std::collections::HashMap<(Monomial, usize), usize> = Default::default();
    let mut rows: Vec<std::collections::HashMap<usize, Fq>> = Vec::with_capacity(n);
    let bone = b.alg.basis_index(&Monomial::one(b.alg.num_gens()));
    for m in &window_monos {
        let mut row: std::collections::HashMap<usize, Fq> = Default::default();
        let mut add = |coord: (Monomial, usize), c: Fq, coords: &mut std::collections::HashMap<(Monomial, usize), usize>| {
            let next = coords.len();
            let id = *coords.entry(coord).or_insert(next);
            let v = row.entry(id).or_insert(Fq::ZERO);
            *v = f.add(*v, c);
        };
        for ((m1, m2), &c) in &a.delta_monomial(m).terms {
            let img = pi.apply_monomial(m2);
            for (bm, &bc) in &img.terms {
                add((m1.clone(), b.alg.basis_index(bm)), f.mul(c, bc), &mut coords);
            }
        }
        add((m.clone(), bone), Fq::ONE, &mut coords);
        rows.push(row);
    }
    let mut sys = crate::matrix::Matrix::zero(f, coords.len(), n);
    for (j, row) in rows.iter().enumerate() {
        for (&cid, &c) in row {
            if !c.is_zero() {
                sys.set(cid, j, c);
            }
        }
    }
    let red = sys.row_reduce(f);
    let mut space = Subspace::empty(f, n);
    for c in 0..red.kernel.cols() {
        space.insert(f, &red.kernel.col(c));
    }
    let _ = mono_index;
    Ok(BoundedCoinvariants { window: window_monos, space })
}

fn suite_diagram(config: &SuiteConfig) -> Result<Vec<Check>> {
    let f = field_for(config)?;
    let mut checks = Vec::new();
    let bound = 3.min(config.exp_bound);
    let og = Hopf::build("OG", &f, bound)?;
    let ogfrak = Hopf::build("OGfrak", &f, bound)?;
    let ob = Hopf::build("OB", &f, bound)?;
    let oga3 = Hopf::build("OGa3", &f, bound)?;
    let kappa = Hopf::build("Kappa", &f, config.exp_bound)?;
    let ug = Hopf::build("UG", &f, bound)?;
    let um = Hopf::build("um", &f, config.exp_bound)?;
    let dt = Hopf::build("Dtilde", &f, bound)?;
    let dh = Hopf::build("DH", &f, config.exp_bound)?;
    let htilde = Hopf::build("Htilde", &f, bound)?;
    let ktilde = Hopf::build("Ktilde", &f, bound)?;

    // the nine Hopf maps of the commuting square
    let m_og_ob = Morphism::new(&og, &ob, &[("X1", "X1"), ("X2", "X2"), ("T", "T")])?;
    let m_og_ogfrak = Morphism::new(&og, &ogfrak, &[("X1", "X1^2"), ("X2", "X2^2"), ("T", "T^2")])?;
    let m_ogfrak_dt = Morphism::new(
        &ogfrak,
        &dt,
        &[("X1", "x21"), ("X2", "w21"), ("T", "g"), ("Y1", "x1"), ("Y2", "w1")],
    )?;
    let m_ogfrak_kappa = Morphism::new(
        &ogfrak,
        &kappa,
        &[("X1", "x21"), ("X2", "w21"), ("T", "g"), ("Y1", "x1"), ("Y2", "w1")],
    )?;
    let m_kappa_dh = Morphism::new(
        &kappa,
        &dh,
        &[("x1", "x1"), ("x21", "x21"), ("w1", "w1"), ("w21", "w21"), ("g", "g")],
    )?;
    let zeta2 = {
        let z = dt.alg.gen_element("zeta")?;
        dt.alg.mul(&z, &z).add(&f, &z)
    };
    let _ = zeta2;
    let m_ob_dt = Morphism::new(
        &ob,
        &dt,
        &[
            ("T", "g^2"),
            ("X1", "x21^2"),
            ("X2", "w21^2"),
            ("X3", "x2^4"),
            ("X4", "w2^4"),
            ("X5", "zeta^2 + zeta"),
        ],
    )?;
    let m_ob_oga3 = Morphism::new(
        &ob,
        &oga3,
        &[("T", "1"), ("X1", "0"), ("X2", "0"), ("X3", "X1"), ("X4", "X2"), ("X5", "X3")],
    )?;
    let m_oga3_ug =
        Morphism::new(&oga3, &ug, &[("X1", "a^4"), ("X2", "b^4"), ("X3", "c^2 + c")])?;
    let m_dt_ug = Morphism::new(
        &dt,
        &ug,
        &[
            ("x1", "0"),
            ("x21", "0"),
            ("x2", "a"),
            ("g", "1"),
            ("zeta", "c"),
            ("w1", "0"),
            ("w21", "0"),
            ("w2", "b"),
        ],
    )?;
    let m_dt_dh = Morphism::new(
        &dt,
        &dh,
        &[
            ("x1", "x1"),
            ("x21", "x21"),
            ("x2", "x2"),
            ("g", "g"),
            ("zeta", "gamma"),
            ("w1", "w1"),
            ("w21", "w21"),
            ("w2", "w2"),
        ],
    )?;
    let m_ug_um = Morphism::new(&ug, &um, &[("a", "a"), ("b", "b"), ("c", "c")])?;
    let m_dh_um = pi_double_to_um(&dh, &um)?;

    for (id, claim, m) in [
        ("morphism/og-to-ob", "the Frobenius-type embedding of O(G) into O(B)", &m_og_ob),
        ("morphism/og-to-ogfrak", "squaring embeds O(G) into the middle scheme algebra", &m_og_ogfrak),
        ("morphism/ogfrak-to-dtilde", "the middle scheme algebra embeds into the infinite double", &m_ogfrak_dt),
        ("morphism/ogfrak-to-kappa", "the middle scheme algebra surjects onto K", &m_ogfrak_kappa),
        ("morphism/kappa-to-double", "K embeds into the finite double", &m_kappa_dh),
        ("morphism/ob-to-dtilde", "O(B) embeds as N inside the infinite double", &m_ob_dt),
        ("morphism/ob-to-oga3", "O(B) surjects onto the functions of the additive cube", &m_ob_oga3),
        ("morphism/oga3-to-ug", "the additive cube embeds through the p-power centrals of U(G)", &m_oga3_ug),
        ("morphism/dtilde-to-ug", "the infinite double surjects onto U(G)", &m_dt_ug),
        ("morphism/dtilde-to-double", "the infinite double surjects onto the finite double", &m_dt_dh),
        ("morphism/ug-to-um", "U(G) surjects onto u(m)", &m_ug_um),
        ("morphism/double-to-um", "the finite double surjects onto u(m)", &m_dh_um),
    ] {
        let w = m.check();
        checks.push(check_true(id, claim, w.is_none(), w));
    }

    // the four commuting squares, on the generators of each corner
    let square = |name: &str,
                  src: &Hopf,
                  path1: &dyn Fn(&Element) -> Element,
                  path2: &dyn Fn(&Element) -> Element|
     -> Check {
        let mut ok = true;
        let mut witness = None;
        for g in 0..src.alg.num_gens() {
            let x = Element::generator(src.alg.num_gens(), g as GenId);
            let a = path1(&x);
            let b = path2(&x);
            if a != b {
                ok = false;
                witness = Some(format!(
                    "generator {} disagrees",
                    src.alg.system.gen_name(g as GenId)
                ));
                break;
            }
        }
        check_true(
            format!("square/{name}"),
            format!("both composites agree on the generators ({name})"),
            ok,
            witness,
        )
    };
    checks.push(square(
        "top-left",
        &og,
        &|x| m_ob_dt.apply(&m_og_ob.apply(x)),
        &|x| m_ogfrak_dt.apply(&m_og_ogfrak.apply(x)),
    ));
    checks.push(square(
        "top-right",
        &ob,
        &|x| m_oga3_ug.apply(&m_ob_oga3.apply(x)),
        &|x| m_dt_ug.apply(&m_ob_dt.apply(x)),
    ));
    checks.push(square(
        "bottom-left",
        &ogfrak,
        &|x| m_kappa_dh.apply(&m_ogfrak_kappa.apply(x)),
        &|x| m_dt_dh.apply(&m_ogfrak_dt.apply(x)),
    ));
    checks.push(square(
        "bottom-right",
        &dt,
        &|x| m_ug_um.apply(&m_dt_ug.apply(x)),
        &|x| m_dh_um.apply(&m_dt_dh.apply(x)),
    ));

    // left column: O(G) -> O(Gfrak) -> Kappa is exact at the bounded level
    {
        // kernel generators: pi(iota(X) - eps(X)) = 0
        let mut ok = true;
        for g in 0..og.alg.num_gens() {
            let x = Element::generator(og.alg.num_gens(), g as GenId);
            let eps = og.counit(&x);
            let img = m_ogfrak_kappa.apply(&m_og_ogfrak.apply(&x));
            let shifted = img.add(&f, &kappa.alg.one().scale(&f, eps));
            if !shifted.is_zero() {
                ok = false;
            }
        }
        checks.push(check_true(
            "leftcolumn/kernel-generators",
            "the composite kills the augmentation ideal of O(G)",
            ok,
            None,
        ));
        // bounded injectivity of iota
        let window = og.alg.system.enumerate_basis(Some(config.exp_bound as i64))?;
        let mut leads = std::collections::BTreeSet::new();
        let mut inj = true;
        for m in &window {
            let img = m_og_ogfrak.apply_monomial(m);
            match img.leading() {
                Some((lm, _)) => {
                    if !leads.insert(lm.clone()) {
                        inj = false;
                    }
                }
                None => inj = false,
            }
        }
        checks.push(check_bounded(
            "leftcolumn/iota-injective",
            "the squaring embedding is injective on the degree window",
            inj,
            format!("{} monomials checked", window.len()),
        ));
        let coinv = bounded_coinvariants(&ogfrak, &kappa, &m_ogfrak_kappa, config.exp_bound as i64)?;
        // expected: the span of images of O(G) monomials inside the window
        let index: std::collections::HashMap<Monomial, usize> =
            coinv.window.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut expected = Subspace::empty(&f, coinv.window.len());
        let mut representable = true;
        for m in &window {
            let img = m_og_ogfrak.apply_monomial(m);
            let mut v = vec![Fq::ZERO; coinv.window.len()];
            let mut fits = true;
            for (mono, &c) in &img.terms {
                match index.get(mono) {
                    Some(&i) => v[i] = c,
                    None => fits = false,
                }
            }
            if fits {
                expected.insert(&f, &v);
            } else {
                representable = false;
            }
        }
        let _ = representable;
        checks.push(check_bounded(
            "leftcolumn/coinvariants",
            "within the degree window the coinvariants are the image of O(G)",
            coinv.space == expected,
            format!(
                "window {} monomials, coinvariants dim {}, image dim {}",
                coinv.window.len(),
                coinv.space.dim(),
                expected.dim()
            ),
        ));
    }

    // middle row: O(Gfrak) -> Dtilde -> U(G), bounded stages
    {
        let mut ok = true;
        for g in 0..ogfrak.alg.num_gens() {
            let x = Element::generator(ogfrak.alg.num_gens(), g as GenId);
            let eps = ogfrak.counit(&x);
            let img = m_dt_ug.apply(&m_ogfrak_dt.apply(&x));
            let shifted = img.add(&f, &ug.alg.one().scale(&f, eps));
            if !shifted.is_zero() {
                ok = false;
            }
        }
        checks.push(check_true(
            "middlerow/kernel-generators",
            "the map onto U(G) kills the augmentation ideal of the middle scheme algebra",
            ok,
            None,
        ));
        let window = 4.min(config.exp_bound) as i64;
        let coinv = bounded_coinvariants_infinite(&dt, &ug, &m_dt_ug, window)?;
        let index: std::collections::HashMap<Monomial, usize> =
            coinv.window.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let cwindow = ogfrak.alg.system.enumerate_basis(Some(window))?;
        let mut expected = Subspace::empty(&f, coinv.window.len());
        for m in &cwindow {
            let img = m_ogfrak_dt.apply_monomial(m);
            let mut v = vec![Fq::ZERO; coinv.window.len()];
            let mut fits = true;
            for (mono, &c) in &img.terms {
                match index.get(mono) {
                    Some(&i) => v[i] = c,
                    None => fits = false,
                }
            }
            if fits {
                expected.insert(&f, &v);
            }
        }
        checks.push(check_bounded(
            "middlerow/coinvariants",
            "within the degree window the coinvariants over U(G) are the scheme subalgebra",
            coinv.space == expected,
            format!(
                "window {} monomials, coinvariants dim {}, subalgebra dim {}",
                coinv.window.len(),
                coinv.space.dim(),
                expected.dim()
            ),
        ));
    }

    // the skew pairing
    {
        let tau = SkewPairing::new(&htilde, &ktilde, 40)?;
        let hv = |s: &str| htilde.alg.element(s).unwrap();
        let kv = |s: &str| ktilde.alg.element(s).unwrap();
        let table = [
            ("x1", "w1", Fq::ZERO),
            ("x1", "w2", Fq::ONE),
            ("x1", "zeta", Fq::ZERO),
            ("x2", "w1", Fq::ONE),
            ("x2", "w2", Fq::ZERO),
            ("x2", "zeta", Fq::ZERO),
            ("g", "w1", Fq::ZERO),
            ("g", "w2", Fq::ZERO),
            ("g", "zeta", Fq::ONE),
            ("g^-1", "zeta", Fq::ONE),
        ];
        let mut ok = true;
        let mut witness = None;
        for (h, k, want) in table {
            let got = tau.tau(&hv(h), &kv(k))?;
            if got != want {
                ok = false;
                witness = Some(format!("tau({h}, {k}) = {got}"));
            }
        }
        if tau.tau(&hv("g"), &kv("zeta^2"))? != Fq::ONE {
            ok = false;
            witness = Some("tau(g, zeta^2) != 1".into());
        }
        checks.push(check_true(
            "pairing/generator-values",
            "the skew pairing takes its defining values on generators",
            ok,
            witness,
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let fails = tau.check_axioms(&mut rng, 500, 4);
        checks.push(check_true(
            "pairing/axioms",
            "the four skew-pairing identities hold on 500 random bounded pairs",
            fails.is_empty(),
            fails.first().cloned(),
        ));
    }
    Ok(checks)
}

/// Coinvariants for a map into an infinite target: same linear system,
/// with target monomials as coordinates.
fn bounded_coinvariants_infinite(
    a: &Hopf,
    b: &Hopf,
    pi: &Morphism,
    window: i64,
) -> Result<BoundedCoinvariants> {
    let f = a.field();
    let window_monos = a.alg.system.enumerate_basis(Some(window))?;
    let n = window_monos.len();
    let bone = Monomial::one(b.alg.num_gens());
    let mut coords: std::collections::HashMap<(Monomial, Monomial), usize> = Default::default();
    let mut rows: Vec<std::collections::HashMap<usize, Fq>> = Vec::with_capacity(n);
    for m in &window_monos {
        let mut row: std::collections::HashMap<usize, Fq> = Default::default();
        {
            let mut add = |coord: (Monomial, Monomial), c: Fq| {
                let next = coords.len();
                let id = *coords.entry(coord).or_insert(next);
                let v = row.entry(id).or_insert(Fq::ZERO);
                *v = f.add(*v, c);
            };
            for ((m1, m2), &c) in &a.delta_monomial(m).terms {
                let img = pi.apply_monomial(m2);
                for (bm, &bc) in &img.terms {
                    add((m1.clone(), bm.clone()), f.mul(c, bc));
                }
            }
            add((m.clone(), bone.clone()), Fq::ONE);
        }
        rows.push(row);
    }
    let mut sys = crate::matrix::Matrix::zero(f, coords.len(), n);
    for (j, row) in rows.iter().enumerate() {
        for (&cid, &c) in row {
            if !c.is_zero() {
                sys.set(cid, j, c);
            }
        }
    }
    let red = sys.row_reduce(f);
    let mut space = Subspace::empty(f, n);
    for c in 0..red.kernel.cols() {
        space.insert(f, &red.kernel.col(c));
    }
    Ok(BoundedCoinvariants { window: window_monos, space })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn guards_fire() {
        let mut cfg = SuiteConfig::default();
        cfg.exp_bound = 50;
        assert!(run_suite("strings-bands", &cfg).is_err());
    }

    #[test]
    fn strings_bands_suite_passes() {
        let rep = run_suite("strings-bands", &SuiteConfig::default()).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
    }

    #[test]
    fn report_json_is_deterministic() {
        let cfg = SuiteConfig::default();
        let a = run_suite("strings-bands", &cfg).unwrap().to_json();
        let b = run_suite("strings-bands", &cfg).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"check_id\""));
    }
}
