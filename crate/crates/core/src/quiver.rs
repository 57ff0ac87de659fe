//! The bound quiver (Q, I): two vertices, arrows a1, a2: 0 -> 1 and
//! b1, b2: 1 -> 0, with I generated by a1 b1, a2 b2, b1 a1, b2 a2,
//! a1 b2 + a2 b1, b1 a2 + b2 a1. Walk combinatorics: strings and bands.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

pub const ARROW_NAMES: [&str; 4] = ["a1", "a2", "b1", "b2"];
/// (source, target) per arrow
pub const ARROW_ENDS: [(usize, usize); 4] = [(0, 1), (0, 1), (1, 0), (1, 0)];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Step {
    pub arrow: u8,
    pub inverse: bool,
}

impl Step {
    pub fn source(&self) -> usize {
        let (s, t) = ARROW_ENDS[self.arrow as usize];
        if self.inverse {
            t
        } else {
            s
        }
    }

    pub fn target(&self) -> usize {
        let (s, t) = ARROW_ENDS[self.arrow as usize];
        if self.inverse {
            s
        } else {
            t
        }
    }

    pub fn inv(&self) -> Step {
        Step { arrow: self.arrow, inverse: !self.inverse }
    }
}

/// A walk: a start vertex and a sequence of composable steps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Walk {
    pub start: usize,
    pub steps: Vec<Step>,
}

/// The relation ideal: zero-relation paths and binomial pairs, as arrow
/// index sequences.
pub struct QuiverData {
    pub zero_relations: Vec<Vec<u8>>,
    pub binomials: Vec<(Vec<u8>, Vec<u8>)>,
}

impl Default for QuiverData {
    fn default() -> Self {
        Self::new()
    }
}

impl QuiverData {
    pub fn new() -> QuiverData {
        let (a1, a2, b1, b2) = (0u8, 1u8, 2u8, 3u8);
        QuiverData {
            zero_relations: vec![vec![a1, b1], vec![a2, b2], vec![b1, a1], vec![b2, a2]],
            binomials: vec![(vec![a1, b2], vec![a2, b1]), (vec![b1, a2], vec![b2, a1])],
        }
    }

    fn forbidden(&self, path: &[u8]) -> bool {
        self.zero_relations.iter().any(|p| p.as_slice() == path)
            || self
                .binomials
                .iter()
                .any(|(p, q)| p.as_slice() == path || q.as_slice() == path)
    }
}

impl Walk {
    pub fn trivial(vertex: usize) -> Walk {
        Walk { start: vertex, steps: Vec::new() }
    }

    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.target())
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_composable(&self) -> bool {
        let mut at = self.start;
        for s in &self.steps {
            if s.source() != at {
                return false;
            }
            at = s.target();
        }
        true
    }

    pub fn is_reduced(&self) -> bool {
        self.steps.windows(2).all(|w| w[1] != w[0].inv())
    }

    pub fn inverse(&self) -> Walk {
        Walk { start: self.end(), steps: self.steps.iter().rev().map(|s| s.inv()).collect() }
    }

    pub fn concat(&self, other: &Walk) -> Walk {
        assert_eq!(self.end(), other.start);
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Walk { start: self.start, steps }
    }

    pub fn power(&self, n: usize) -> Walk {
        let mut w = Walk::trivial(self.start);
        for _ in 0..n {
            w = w.concat(self);
        }
        w
    }

    /// Directed paths contained in the walk: maximal runs read forwards or
    /// backwards; a path p is contained if p or p^{-1} appears as a factor.
    fn contains_forbidden_path(&self, q: &QuiverData) -> bool {
        let n = self.steps.len();
        for i in 0..n {
            for j in i..n {
                let seg = &self.steps[i..=j];
                // forward read: all steps direct
                if seg.iter().all(|s| !s.inverse) {
                    let path: Vec<u8> = seg.iter().map(|s| s.arrow).collect();
                    if q.forbidden(&path) {
                        return true;
                    }
                }
                // backward read: all steps inverse; reversed is direct
                if seg.iter().all(|s| s.inverse) {
                    let path: Vec<u8> = seg.iter().rev().map(|s| s.arrow).collect();
                    if q.forbidden(&path) {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn is_string(&self, q: &QuiverData) -> bool {
        self.is_composable() && self.is_reduced() && !self.contains_forbidden_path(q)
    }

    /// Reduced cycle whose powers are strings, not a proper power.
    pub fn is_band(&self, q: &QuiverData) -> bool {
        if self.is_empty() || self.start != self.end() || !self.is_reduced() {
            return false;
        }
        if self.steps.last().unwrap().inv() == self.steps[0] {
            return false;
        }
        // square catches every wrap-around violation
        if !self.is_string(q) || !self.power(2).is_string(q) {
            return false;
        }
        // primitive: not a power of a shorter cycle
        let n = self.len();
        for d in 1..n {
            if n % d == 0 {
                let head = Walk { start: self.start, steps: self.steps[..d].to_vec() };
                if head.end() == head.start && head.power(n / d) == *self {
                    return false;
                }
            }
        }
        true
    }

    /// Canonical representative of the rotation + inversion class.
    pub fn band_class(&self) -> Walk {
        let mut best: Option<Walk> = None;
        for w in [self.clone(), self.inverse()] {
            for r in 0..w.len() {
                let mut steps = w.steps[r..].to_vec();
                steps.extend_from_slice(&w.steps[..r]);
                let rotated = Walk { start: steps[0].source(), steps };
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        best.unwrap()
    }

    pub fn display(&self) -> String {
        if self.is_empty() {
            return format!("eps{}", self.start);
        }
        self.steps
            .iter()
            .map(|s| {
                let n = ARROW_NAMES[s.arrow as usize];
                if s.inverse {
                    format!("{n}-")
                } else {
                    n.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All strings of length <= max_len, including the trivial walks and the
/// inverses of the listed families.
pub fn enumerate_strings(q: &QuiverData, max_len: usize) -> Result<Vec<Walk>> {
    if max_len > 12 {
        return Err(Error::Resource(format!("string enumeration capped at length 12, got {max_len}")));
    }
    let mut out = vec![Walk::trivial(0), Walk::trivial(1)];
    let all_steps: Vec<Step> = (0..4u8)
        .flat_map(|a| [Step { arrow: a, inverse: false }, Step { arrow: a, inverse: true }])
        .collect();
    let mut frontier: Vec<Walk> = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in &all_steps {
                if s.source() != w.end() {
                    continue;
                }
                let mut steps = w.steps.clone();
                steps.push(*s);
                let cand = Walk { start: w.start, steps };
                if cand.is_string(q) {
                    next.push(cand);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    Ok(out)
}

/// Band classes of (Q, I), up to rotation and inversion.
pub fn enumerate_bands(q: &QuiverData) -> Vec<Walk> {
    let mut classes: BTreeSet<Walk> = BTreeSet::new();
    // bands are strings, and every string here has length <= 12 only if it
    // avoids the relations; cycles longer than 8 repeat a class
    for w in enumerate_strings(q, 8).expect("guarded length") {
        if !w.is_empty() && w.is_band(q) {
            classes.insert(w.band_class());
        }
    }
    classes.into_iter().collect()
}

/// The string families of the classification: s_i^r, s_1^t a1, a2 s_2^t,
/// s_3^t b1, b2 s_4^t, and their inverses, truncated to max_len.
pub fn expected_strings(max_len: usize) -> Vec<Walk> {
    let step = |arrow: u8, inverse: bool| Step { arrow, inverse };
    let (a1, a2, b1, b2) = (0u8, 1u8, 2u8, 3u8);
    let mk = |steps: Vec<Step>| {
        let w = Walk { start: steps[0].source(), steps };
        debug_assert!(w.is_composable());
        w
    };
    let s1 = mk(vec![step(a1, false), step(a2, true)]);
    let s2 = mk(vec![step(a1, true), step(a2, false)]);
    let s3 = mk(vec![step(b1, false), step(b2, true)]);
    let s4 = mk(vec![step(b1, true), step(b2, false)]);
    let a1w = mk(vec![step(a1, false)]);
    let a2w = mk(vec![step(a2, false)]);
    let b1w = mk(vec![step(b1, false)]);
    let b2w = mk(vec![step(b2, false)]);

    let mut out: BTreeSet<Walk> = BTreeSet::new();
    out.insert(Walk::trivial(0));
    out.insert(Walk::trivial(1));
    let mut push = |w: Walk| {
        if w.len() <= max_len {
            out.insert(w.inverse());
            out.insert(w);
        }
    };
    let max_r = max_len / 2 + 1;
    for s in [&s1, &s2, &s3, &s4] {
        for r in 1..=max_r {
            push(s.power(r));
        }
    }
    for t in 0..=max_r {
        push(s1.power(t).concat(&a1w));
        push(a2w.concat(&s2.power(t)));
        push(s3.power(t).concat(&b1w));
        push(b2w.concat(&s4.power(t)));
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strings_up_to_length_two() {
        let q = QuiverData::new();
        let found = enumerate_strings(&q, 2).unwrap();
        let expected = expected_strings(2);
        assert_eq!(found, expected);
        // eps0, eps1, 4 arrows + 4 inverses, s1..s4 + inverses
        assert_eq!(found.len(), 2 + 8 + 8);
    }

    #[test]
    fn example_walk_is_not_a_string() {
        // a1 b2 a1 a2^{-1} contains the binomial maximal subpath a1 b2
        let q = QuiverData::new();
        let step = |arrow: u8, inverse: bool| Step { arrow, inverse };
        let w = Walk {
            start: 0,
            steps: vec![step(0, false), step(3, false), step(0, false), step(1, true)],
        };
        assert!(w.is_composable() && w.is_reduced());
        assert!(!w.is_string(&q));
        // but a1 a2^{-1} a1 is a string
        let v = Walk { start: 0, steps: vec![step(0, false), step(1, true), step(0, false)] };
        assert!(v.is_string(&q));
    }

    #[test]
    fn exactly_two_band_classes() {
        let q = QuiverData::new();
        let bands = enumerate_bands(&q);
        assert_eq!(bands.len(), 2);
        for b in &bands {
            assert_eq!(b.len(), 2);
        }
        // the classes of a1 a2^{-1} and b1 b2^{-1}
        let step = |arrow: u8, inverse: bool| Step { arrow, inverse };
        let u = Walk { start: 0, steps: vec![step(0, false), step(1, true)] };
        let v = Walk { start: 1, steps: vec![step(2, false), step(3, true)] };
        assert!(bands.contains(&u.band_class()));
        assert!(bands.contains(&v.band_class()));
    }

    #[test]
    fn strings_match_the_classified_families_up_to_length_ten() {
        let q = QuiverData::new();
        let found = enumerate_strings(&q, 10).unwrap();
        let expected = expected_strings(10);
        assert_eq!(found, expected);
    }
}
