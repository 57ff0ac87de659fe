//! Textual presentation format and the shipped presets.
//!
//! ```text
//! # comment
//! gen x2 nilpotent 4          # x2^4 = 0
//! gen g  periodic 2 0         # g^2 = g^0 = 1
//! gen c  periodic 2 1         # c^2 = c
//! gen x21 nat                 # unbounded natural exponents
//! gen t  int                  # invertible, integer exponents
//! rel  x2 x1 = x1 x2 + x21    # oriented into a rewrite rule
//! check x1 x2 x1 x2 = x2 x1 x2 x1   # verified after completion
//! ```
//!
//! `rel` lines must have a single two-letter word on the left which is the
//! largest term of the relation; they become base rewrite rules. `check`
//! lines are arbitrary equalities verified by normal form.

use crate::error::{Error, Result};
use crate::field::Fq;
use crate::monomial::{cmp_words, Cap, GeneratorSpec, Word};
use crate::rewrite::{Relation, RewriteSystem, WordSum};
use std::cmp::Ordering;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub gens: Vec<GeneratorSpec>,
    /// (lhs, rhs, orient-as-rule, source line)
    pub lines: Vec<(WordSum, WordSum, bool, String)>,
}

pub const PRESET_NAMES: [&str; 15] = [
    "um", "H", "Hstar", "DH", "Kappa", "basic", "quiverQI", "Htilde", "Ktilde", "Dtilde", "UG",
    "OG", "OGfrak", "OB", "OGa3",
];

pub fn preset_source(name: &str) -> Result<&'static str> {
    Ok(match name {
        "um" => include_str!("presets/um.pres"),
        "H" => include_str!("presets/H.pres"),
        "Hstar" => include_str!("presets/Hstar.pres"),
        "DH" => include_str!("presets/DH.pres"),
        "Kappa" => include_str!("presets/Kappa.pres"),
        "basic" => include_str!("presets/basic.pres"),
        "quiverQI" => include_str!("presets/quiverQI.pres"),
        "Htilde" => include_str!("presets/Htilde.pres"),
        "Ktilde" => include_str!("presets/Ktilde.pres"),
        "Dtilde" => include_str!("presets/Dtilde.pres"),
        "UG" => include_str!("presets/UG.pres"),
        "OG" => include_str!("presets/OG.pres"),
        "OGfrak" => include_str!("presets/OGfrak.pres"),
        "OB" => include_str!("presets/OB.pres"),
        "OGa3" => include_str!("presets/OGa3.pres"),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    })
}

pub fn load_preset(name: &str) -> Result<Presentation> {
    parse(name, preset_source(name)?)
}

pub fn parse(name: &str, src: &str) -> Result<Presentation> {
    let mut gens: Vec<GeneratorSpec> = Vec::new();
    let mut ids: HashMap<String, u8> = HashMap::new();
    let mut lines = Vec::new();

    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: lineno + 1, msg };
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("gen") => {
                let gname =
                    parts.next().ok_or_else(|| err("missing generator name".into()))?.to_string();
                let cap = match parts.next() {
                    Some("nilpotent") => {
                        let n: i32 = parts
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| err("nilpotent needs an exponent".into()))?;
                        if n < 2 {
                            return Err(err("nilpotent cap must be >= 2".into()));
                        }
                        Cap::Nilpotent(n)
                    }
                    Some("periodic") => {
                        let p: i32 = parts
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| err("periodic needs a period".into()))?;
                        let r: i32 = parts
                            .next()
                            .and_then(|s| s.parse().ok())
                            .ok_or_else(|| err("periodic needs a replacement exponent".into()))?;
                        if p < 2 || r < 0 || r >= p {
                            return Err(err("periodic needs period >= 2 and 0 <= r < period".into()));
                        }
                        Cap::Periodic { period: p, replacement: r }
                    }
                    Some("nat") => Cap::UnboundedNat,
                    Some("int") => Cap::UnboundedInt,
                    other => return Err(err(format!("unknown cap `{other:?}`"))),
                };
                if ids.contains_key(&gname) {
                    return Err(err(format!("duplicate generator `{gname}`")));
                }
                ids.insert(gname.clone(), gens.len() as u8);
                gens.push(GeneratorSpec { name: gname, cap });
            }
            Some(kw @ ("rel" | "check")) => {
                let rest = line[kw.len()..].trim();
                let (lhs_s, rhs_s) = rest
                    .split_once('=')
                    .ok_or_else(|| err("relation line needs `=`".into()))?;
                let lhs = parse_sum(lhs_s, &ids).map_err(|m| err(m))?;
                let rhs = parse_sum(rhs_s, &ids).map_err(|m| err(m))?;
                lines.push((lhs, rhs, kw == "rel", rest.to_string()));
            }
            Some(other) => return Err(err(format!("unknown keyword `{other}`"))),
            None => unreachable!(),
        }
    }
    Ok(Presentation { name: name.to_string(), gens, lines })
}

fn parse_sum(s: &str, ids: &HashMap<String, u8>) -> std::result::Result<WordSum, String> {
    let mut sum = WordSum::new();
    for term in s.split('+') {
        let term = term.trim();
        if term == "0" {
            continue;
        }
        let mut word: Word = Vec::new();
        if term != "1" {
            for tok in term.split_whitespace() {
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => {
                        (n, e.parse::<i32>().map_err(|_| format!("bad exponent in `{tok}`"))?)
                    }
                    None => (tok, 1),
                };
                let &id = ids.get(name).ok_or_else(|| format!("unknown generator `{name}`"))?;
                word.push((id, exp));
            }
        }
        sum.push((Fq::ONE, word));
    }
    Ok(sum)
}

impl Presentation {
    /// Build the rewrite system: install `rel` lines as rules, keep
    /// everything for soundness checking.
    pub fn into_system(&self) -> Result<RewriteSystem> {
        let mut sys = RewriteSystem::new(self.gens.clone());
        for (lhs, rhs, orient, source) in &self.lines {
            let mut sum = lhs.clone();
            sum.extend(rhs.iter().cloned()); // char 2: lhs + rhs = 0
            if *orient {
                if lhs.len() != 1 {
                    return Err(Error::Unorientable {
                        relation: source.clone(),
                        leading: format!("{} terms on the left", lhs.len()),
                    });
                }
                let lw = &lhs[0].1;
                let two_letters =
                    lw.len() == 2 && lw[0].1 == 1 && lw[1].1 == 1 && lw[0].0 != lw[1].0;
                let descends = rhs
                    .iter()
                    .all(|(_, w)| cmp_words(w, lw) == Ordering::Less);
                if !two_letters || !descends {
                    return Err(Error::Unorientable {
                        relation: source.clone(),
                        leading: sys.word_to_string(lw),
                    });
                }
                sys.add_rule(lw[0].0, lw[1].0, rhs.clone())?;
            }
            sys.relations.push(Relation { sum, source: source.clone(), oriented: *orient });
        }
        sys.check_conj_involutive()?;
        Ok(sys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn parse_and_build_um() {
        let p = load_preset("um").unwrap();
        assert_eq!(p.gens.len(), 3);
        let sys = p.into_system().unwrap();
        let f = Field::gf2();
        assert!(sys.check_soundness(&f).is_empty());
        let basis = sys.enumerate_basis(None).unwrap();
        assert_eq!(basis.len(), 32);
    }

    #[test]
    fn unknown_preset() {
        assert!(load_preset("nope").is_err());
    }

    #[test]
    fn unknown_generator_is_an_error() {
        let src = "gen a nilpotent 2\nrel b a = 0\n";
        assert!(parse("t", src).is_err());
    }

    #[test]
    fn all_presets_parse_and_build() {
        for name in PRESET_NAMES {
            let p = load_preset(name).unwrap();
            let sys = p.into_system().unwrap();
            assert!(sys.num_gens() > 0, "{name}");
        }
    }
}
