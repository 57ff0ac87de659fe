//! Constructors for the named modules over u(m): the simples, the
//! projective covers M and N, the extension family V_{theta,lambda,mu},
//! and the string and band families with coefficients from the
//! classification tables.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Fq;
use crate::matrix::Matrix;
use crate::rep::Representation;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StringFamily {
    U1,
    U2,
    U3,
    U4,
    V1,
    V2,
    W1,
    W2,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModuleSpec {
    SimpleV0,
    SimpleV1,
    ProjM,
    ProjN,
    /// the extension of V0 by V1 with parameters (theta, lambda, mu)
    Ext(Fq, Fq, Fq),
    /// U families take r >= 1, V/W families take t >= 0
    String(StringFamily, usize),
    BandA(Fq, usize),
    BandB(Fq, usize),
}

impl ModuleSpec {
    pub fn dim(&self) -> usize {
        match *self {
            ModuleSpec::SimpleV0 => 1,
            ModuleSpec::SimpleV1 => 3,
            ModuleSpec::ProjM | ModuleSpec::ProjN => 8,
            ModuleSpec::Ext(..) => 4,
            ModuleSpec::String(fam, p) => match fam {
                StringFamily::U1 | StringFamily::U4 => 4 * p + 1,
                StringFamily::U2 | StringFamily::U3 => 4 * p + 3,
                _ => 4 * (p + 1),
            },
            ModuleSpec::BandA(_, n) | ModuleSpec::BandB(_, n) => 4 * n,
        }
    }

    pub fn label(&self) -> String {
        match self {
            ModuleSpec::SimpleV0 => "V0".into(),
            ModuleSpec::SimpleV1 => "V1".into(),
            ModuleSpec::ProjM => "M".into(),
            ModuleSpec::ProjN => "N".into(),
            ModuleSpec::Ext(t, l, m) => format!("Vext({t},{l},{m})"),
            ModuleSpec::String(fam, p) => format!("{fam:?}[{p}]"),
            ModuleSpec::BandA(l, n) => format!("A({l},{n})"),
            ModuleSpec::BandB(l, n) => format!("B({l},{n})"),
        }
    }
}

/// kappa_i, mu_i, xi_i, nu_i for the string and band families. The tables
/// list where each coefficient VANISHES; these predicates return the value.
pub struct Coefficients {
    pub dim: usize,
    pub kappa: Box<dyn Fn(usize) -> bool>,
    pub mu: Box<dyn Fn(usize) -> bool>,
    pub xi: Box<dyn Fn(usize) -> bool>,
    pub nu: Box<dyn Fn(usize) -> bool>,
}

pub fn string_coefficients(fam: StringFamily, p: usize) -> Coefficients {
    use StringFamily::*;
    let d = ModuleSpec::String(fam, p).dim();
    let (kappa, mu, nu): (
        Box<dyn Fn(usize) -> bool>,
        Box<dyn Fn(usize) -> bool>,
        Box<dyn Fn(usize) -> bool>,
    ) = match fam {
        U1 => (
            Box::new(move |i| !(i % 4 == 0 || i == 4 * p + 1)),
            Box::new(|i| !(i % 4 == 2 || i == 1)),
            Box::new(|i| (i + 1) % 2 == 1),
        ),
        U2 => (
            Box::new(|i| i % 4 != 3),
            Box::new(|i| i % 4 != 1),
            Box::new(|i| i % 2 == 1),
        ),
        U3 => (
            Box::new(move |i| !(i % 4 == 0 || i == 4 * p + 3)),
            Box::new(|i| !(i % 4 == 0 || i == 1)),
            Box::new(|i| i % 2 == 1),
        ),
        U4 => (
            Box::new(|i| i % 4 != 1),
            Box::new(|i| i % 4 != 1),
            Box::new(|i| (i + 1) % 2 == 1),
        ),
        V1 => (
            Box::new(|i| i % 4 != 0),
            Box::new(|i| !(i % 4 == 2 || i == 1)),
            Box::new(|i| (i + 1) % 2 == 1),
        ),
        V2 => (
            Box::new(move |i| !(i % 4 == 3 || i == 4 * (p + 1))),
            Box::new(|i| i % 4 != 1),
            Box::new(|i| i % 2 == 1),
        ),
        W1 => (
            Box::new(move |i| !(i % 4 == 0 || i == 4 * (p + 1))),
            Box::new(|i| !(i % 4 == 0 || i == 1)),
            Box::new(|i| i % 2 == 1),
        ),
        W2 => (
            Box::new(move |i| !(i % 4 == 1 || i == 4 * (p + 1))),
            Box::new(|i| !(i % 4 == 1 || i == 1)),
            Box::new(|i| (i + 1) % 2 == 1),
        ),
    };
    Coefficients { dim: d, kappa, mu, xi: Box::new(|_| false), nu }
}

pub fn band_coefficients(is_a: bool, n: usize) -> Coefficients {
    let d = 4 * n;
    let mu: Box<dyn Fn(usize) -> bool> = if is_a {
        Box::new(|i| !(i % 4 == 2 || i == 1))
    } else {
        Box::new(|i| !(i % 4 == 0 || i == 1))
    };
    let nu: Box<dyn Fn(usize) -> bool> = if is_a {
        Box::new(|i| (i + 1) % 2 == 1)
    } else {
        Box::new(|i| i % 2 == 1)
    };
    Coefficients {
        dim: d,
        kappa: Box::new(|i| i % 4 != 0),
        mu,
        xi: Box::new(|i| i % 4 == 1),
        nu,
    }
}

/// Build the representation of a zoo member over u(m); the result is
/// validated against the presentation.
pub fn make_module<'a>(um: &'a Algebra, spec: &ModuleSpec) -> Result<Representation<'a>> {
    let f = &um.field;
    let rep = match spec {
        ModuleSpec::SimpleV0 => {
            let z = Matrix::zero(f, 1, 1);
            Representation::new(um, vec![z.clone(), z.clone(), z])?
        }
        ModuleSpec::SimpleV1 => {
            let a = Matrix::from_ints(f, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
            let b = Matrix::from_ints(f, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
            let c = Matrix::from_ints(f, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
            Representation::new(um, vec![a, b, c])?
        }
        ModuleSpec::ProjM => {
            // basis v1..v4 (0..3), w1..w4 (4..7)
            let mut a = Matrix::zero(f, 8, 8);
            let mut b = Matrix::zero(f, 8, 8);
            let mut c = Matrix::zero(f, 8, 8);
            for i in 0..3 {
                a.set(i + 1, i, Fq::ONE); // a v_i = v_{i+1}
                a.set(i + 5, i + 4, Fq::ONE); // a w_i = w_{i+1}
            }
            b.set(0, 1, Fq::ONE); // b v2 = v1
            b.set(1, 2, Fq::ONE); // b v3 = v2
            b.set(2, 4, Fq::ONE); // b w1 = v3
            b.set(3, 5, Fq::ONE); // b w2 = v4  (v_{i+2} for i = 1, 2)
            b.set(5, 6, Fq::ONE); // b w3 = w2
            b.set(6, 7, Fq::ONE); // b w4 = w3
            c.set(0, 0, Fq::ONE); // c v1 = v1
            c.set(2, 2, Fq::ONE); // c v3 = v3
            c.set(5, 5, Fq::ONE); // c w2 = w2
            c.set(7, 7, Fq::ONE); // c w4 = w4
            Representation::new(um, vec![a, b, c])?
        }
        ModuleSpec::ProjN => {
            let mut a = Matrix::zero(f, 8, 8);
            let mut b = Matrix::zero(f, 8, 8);
            let mut c = Matrix::zero(f, 8, 8);
            for i in 0..3 {
                a.set(i + 1, i, Fq::ONE);
                a.set(i + 5, i + 4, Fq::ONE);
            }
            b.set(1, 2, Fq::ONE); // b v3 = v2
            b.set(2, 3, Fq::ONE); // b v4 = v3
            b.set(0, 4, Fq::ONE); // b w1 = v1
            b.set(3, 7, Fq::ONE); // b w4 = v4
            b.set(1, 5, Fq::ONE); // b w2 = v2 + w1
            b.set(4, 5, Fq::ONE);
            b.set(2, 6, Fq::ONE); // b w3 = v3 + w2
            b.set(5, 6, Fq::ONE);
            c.set(1, 1, Fq::ONE); // c v2 = v2
            c.set(3, 3, Fq::ONE); // c v4 = v4
            c.set(4, 4, Fq::ONE); // c w1 = w1
            c.set(6, 6, Fq::ONE); // c w3 = w3
            Representation::new(um, vec![a, b, c])?
        }
        ModuleSpec::Ext(theta, lambda, mu) => {
            let mut a = Matrix::zero(f, 4, 4);
            a.set(1, 0, *theta);
            a.set(2, 1, Fq::ONE);
            a.set(3, 2, Fq::ONE);
            let mut b = Matrix::zero(f, 4, 4);
            b.set(1, 2, Fq::ONE);
            b.set(2, 0, *lambda);
            b.set(2, 3, Fq::ONE);
            b.set(3, 0, *mu);
            let mut c = Matrix::zero(f, 4, 4);
            c.set(1, 1, Fq::ONE);
            c.set(3, 0, *lambda);
            c.set(3, 3, Fq::ONE);
            Representation::new(um, vec![a, b, c])?
        }
        ModuleSpec::String(fam, p) => {
            if matches!(fam, StringFamily::U1 | StringFamily::U2 | StringFamily::U3 | StringFamily::U4)
                && *p < 1
            {
                return Err(Error::Parameter("string family U needs r >= 1".into()));
            }
            from_coefficients(um, &string_coefficients(*fam, *p), Fq::ZERO)?
        }
        ModuleSpec::BandA(lambda, n) | ModuleSpec::BandB(lambda, n) => {
            if lambda.is_zero() {
                return Err(Error::Parameter("band parameter lambda must be nonzero".into()));
            }
            if *n < 1 {
                return Err(Error::Parameter("band modules need n >= 1".into()));
            }
            let is_a = matches!(spec, ModuleSpec::BandA(..));
            from_coefficients(um, &band_coefficients(is_a, *n), *lambda)?
        }
    };
    let violations = rep.check();
    if !violations.is_empty() {
        return Err(Error::Parameter(format!(
            "module {} violates `{}` (table transcription bug)",
            spec.label(),
            violations[0]
        )));
    }
    Ok(rep)
}

/// a z_i = kappa_i z_{i+1}, b z_i = mu_i z_{i-1} + xi_i lambda z_{i+3},
/// c z_i = nu_i z_i. Indices are 1-based as in the tables.
fn from_coefficients<'a>(
    um: &'a Algebra,
    co: &Coefficients,
    lambda: Fq,
) -> Result<Representation<'a>> {
    let f = &um.field;
    let d = co.dim;
    let mut a = Matrix::zero(f, d, d);
    let mut b = Matrix::zero(f, d, d);
    let mut c = Matrix::zero(f, d, d);
    for i in 1..=d {
        if (co.kappa)(i) {
            assert!(i + 1 <= d, "kappa must vanish at the right edge");
            a.set(i, i - 1, Fq::ONE);
        }
        if (co.mu)(i) {
            assert!(i >= 2, "mu must vanish at the left edge");
            b.set(i - 2, i - 1, Fq::ONE);
        }
        if (co.xi)(i) {
            assert!(i + 3 <= d, "xi reaches past the right edge");
            b.set(i + 2, i - 1, lambda);
        }
        if (co.nu)(i) {
            c.set(i - 1, i - 1, Fq::ONE);
        }
    }
    Representation::new(um, vec![a, b, c])
}

/// Pull a u(m)-module back along pi: D(H) -> u(m):
/// x2 -> a, w2 -> b, gamma -> c, g -> 1, the rest -> 0.
pub fn pullback_to_double<'a>(
    dh: &'a Algebra,
    rep: &Representation,
) -> Result<Representation<'a>> {
    let f = &dh.field;
    let d = rep.dim;
    let zero = Matrix::zero(f, d, d);
    let id = Matrix::identity(f, d);
    let mut action = Vec::new();
    for g in 0..dh.num_gens() {
        let name = dh.system.gen_name(g as u8);
        let m = match name {
            "x2" => rep.action[0].clone(),
            "w2" => rep.action[1].clone(),
            "gamma" => rep.action[2].clone(),
            "g" => id.clone(),
            _ => zero.clone(),
        };
        action.push(m);
    }
    let out = Representation::new(dh, action)?;
    let violations = out.check();
    if !violations.is_empty() {
        return Err(Error::Parameter(format!("pullback violates `{}`", violations[0])));
    }
    Ok(out)
}

/// Chevalley twist images inside u(m): a -> b, b -> a, c -> c.
pub fn chevalley_images(um: &Algebra) -> Result<Vec<crate::monomial::Element>> {
    Ok(vec![um.gen_element("b")?, um.gen_element("a")?, um.gen_element("c")?])
}

/// Text rendering of a u(m)-module in the style of the paper's diagrams:
/// one line per basis vector with its c-mark, then the a- and b-arrows.
pub fn dump_module(um: &Algebra, rep: &Representation) -> String {
    let f = &um.field;
    let mut out = String::new();
    let c = &rep.action[2];
    out.push_str("digraph module {\n");
    for i in 0..rep.dim {
        let mark = if c.get(i, i).is_zero() { "o" } else { "*" };
        out.push_str(&format!("  z{} [c=\"{}\"];\n", i + 1, mark));
    }
    for (gen, name) in [(0usize, "a"), (1, "b")] {
        let m = &rep.action[gen];
        for j in 0..rep.dim {
            for i in 0..rep.dim {
                let v = m.get(i, j);
                if !v.is_zero() {
                    if v == Fq::ONE {
                        out.push_str(&format!("  z{} -> z{} [gen=\"{}\"];\n", j + 1, i + 1, name));
                    } else {
                        out.push_str(&format!(
                            "  z{} -> z{} [gen=\"{}\", coeff=\"{}\"];\n",
                            j + 1,
                            i + 1,
                            name,
                            v
                        ));
                    }
                }
            }
        }
    }
    let _ = f;
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn um() -> Algebra {
        Algebra::build("um", &Field::gf2(), 4).unwrap()
    }

    #[test]
    fn all_small_members_are_valid() {
        let alg = um();
        let mut specs = vec![
            ModuleSpec::SimpleV0,
            ModuleSpec::SimpleV1,
            ModuleSpec::ProjM,
            ModuleSpec::ProjN,
            ModuleSpec::Ext(Fq::ONE, Fq::ZERO, Fq::ZERO),
            ModuleSpec::Ext(Fq::ONE, Fq::ONE, Fq::ONE),
        ];
        for fam in [
            StringFamily::U1,
            StringFamily::U2,
            StringFamily::U3,
            StringFamily::U4,
        ] {
            for r in 1..=3 {
                specs.push(ModuleSpec::String(fam, r));
            }
        }
        for fam in [StringFamily::V1, StringFamily::V2, StringFamily::W1, StringFamily::W2] {
            for t in 0..=3 {
                specs.push(ModuleSpec::String(fam, t));
            }
        }
        specs.push(ModuleSpec::BandA(Fq::ONE, 1));
        specs.push(ModuleSpec::BandB(Fq::ONE, 2));
        for spec in specs {
            let rep = make_module(&alg, &spec).unwrap();
            assert_eq!(rep.dim, spec.dim(), "{}", spec.label());
        }
    }

    #[test]
    fn band_modules_over_gf16() {
        let alg = Algebra::build("um", &Field::new(4).unwrap(), 4).unwrap();
        for lambda in alg.field.nonzero_elements() {
            for n in 1..=3 {
                make_module(&alg, &ModuleSpec::BandA(lambda, n)).unwrap();
                make_module(&alg, &ModuleSpec::BandB(lambda, n)).unwrap();
            }
        }
    }

    #[test]
    fn u11_kappa_vanishes_at_the_top() {
        let alg = um();
        let rep = make_module(&alg, &ModuleSpec::String(StringFamily::U1, 1)).unwrap();
        assert_eq!(rep.dim, 5);
        // a z5 = 0: column 4 of the a-action is zero
        assert!(rep.action[0].col(4).iter().all(|v| v.is_zero()));
        // a z1 = z2
        assert_eq!(rep.action[0].get(1, 0), Fq::ONE);
    }

    #[test]
    fn band_a_action_on_z1_and_z5() {
        let alg = Algebra::build("um", &Field::new(4).unwrap(), 4).unwrap();
        let lambda = Fq(0b10);
        let rep = make_module(&alg, &ModuleSpec::BandA(lambda, 2)).unwrap();
        // b z1 = lambda z4
        let col = rep.action[1].col(0);
        assert_eq!(col[3], lambda);
        assert!(col.iter().enumerate().all(|(i, v)| i == 3 || v.is_zero()));
        // b z5 = z4 + lambda z8
        let col = rep.action[1].col(4);
        assert_eq!(col[3], Fq::ONE);
        assert_eq!(col[7], lambda);
    }

    #[test]
    fn pullback_of_v1_matches_the_double_simple() {
        let f = Field::gf2();
        let alg = um();
        let dh = Algebra::build("DH", &f, 4).unwrap();
        let v1 = make_module(&alg, &ModuleSpec::SimpleV1).unwrap();
        let up = pullback_to_double(&dh, &v1).unwrap();
        assert_eq!(up.dim, 3);
        // x1, x21, w1, w21 act by zero, g by the identity
        for name in ["x1", "x21", "w1", "w21"] {
            let g = dh.system.gen_id(name).unwrap();
            assert!(up.action[g as usize].is_zero());
        }
        let g = dh.system.gen_id("g").unwrap();
        assert_eq!(up.action[g as usize], Matrix::identity(&f, 3));
    }

    #[test]
    fn dump_module_renders_marks_and_arrows() {
        let alg = um();
        let rep = make_module(&alg, &ModuleSpec::SimpleV1).unwrap();
        let dot = dump_module(&alg, &rep);
        assert!(dot.contains("z1 [c=\"*\"]"));
        assert!(dot.contains("z1 -> z2 [gen=\"a\"]"));
    }
}
