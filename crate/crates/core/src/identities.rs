//! Exponent-parameterized consequence identities: the relation families
//! that hold in u(m), Htilde, Ktilde and Dtilde for all natural m, n,
//! verified here for all m, n up to a bound via normal forms.
//!
//! Some printed rows mix the symbols xi and zeta or carry typos that make
//! the literal reading false (it already fails at n = 0 or 1). Each row
//! therefore carries a list of readings: the literal one first, then
//! documented corrections. A row that only holds under a corrected
//! reading is reported as a discrepancy, never silently patched.

use crate::algebra::Algebra;
use crate::field::Fq;
use crate::monomial::Element;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reading {
    /// the row as printed, with xi read as zeta
    Literal,
    /// xi read as 1 + zeta
    XiOnePlusZeta,
    /// the trailing term x21^{2n} read as x21 x2^{2n}
    TrailingX21Power,
    /// the stray index m read as n
    MixedIndexMIsN,
    /// split by parity of the x2 exponent: xi = zeta for odd, plain
    /// commutation for even
    ParitySplit,
    /// the factor w2^{2n-1} read as w2^{2n-2}
    ExponentDrop,
}

impl Reading {
    pub fn label(self) -> &'static str {
        match self {
            Reading::Literal => "literal (xi = zeta)",
            Reading::XiOnePlusZeta => "xi = 1 + zeta",
            Reading::TrailingX21Power => "x21^{2n} read as x21 x2^{2n}",
            Reading::MixedIndexMIsN => "index m read as n",
            Reading::ParitySplit => "xi = zeta for odd exponents, commutation for even",
            Reading::ExponentDrop => "w2^{2n-1} read as w2^{2n-2}",
        }
    }
}

pub struct Row {
    pub id: &'static str,
    pub readings: Vec<Reading>,
    /// (algebra, m, n, reading) -> both sides
    pub build: Box<dyn Fn(&Algebra, i32, i32, Reading) -> (Element, Element) + Sync>,
}

pub struct RowResult {
    pub id: &'static str,
    /// the reading that held for every (m, n), if any
    pub holds_under: Option<Reading>,
    /// failures of the literal reading, as (m, n) pairs (truncated)
    pub literal_failures: Vec<(i32, i32)>,
}

/// Check the rows for all 0 <= m, n <= bound.
pub fn check_rows(alg: &Algebra, rows: &[Row], bound: i32) -> Vec<RowResult> {
    use rayon::prelude::*;
    rows.par_iter()
        .map(|row| {
            let mut literal_failures = Vec::new();
            let mut holds_under = None;
            for &reading in &row.readings {
                let mut ok = true;
                for m in 0..=bound {
                    for n in 0..=bound {
                        let (lhs, rhs) = (row.build)(alg, m, n, reading);
                        if lhs != rhs {
                            ok = false;
                            if reading == Reading::Literal && literal_failures.len() < 4 {
                                literal_failures.push((m, n));
                            }
                        }
                    }
                }
                if ok {
                    holds_under = Some(reading);
                    break;
                }
            }
            RowResult { id: row.id, holds_under, literal_failures }
        })
        .collect()
}

struct Ex<'b> {
    alg: &'b Algebra,
}

impl<'b> Ex<'b> {
    fn g(&self, name: &str) -> Element {
        self.alg.gen_element(name).unwrap()
    }

    fn one(&self) -> Element {
        self.alg.one()
    }

    fn zero(&self) -> Element {
        Element::zero()
    }

    fn mul(&self, xs: &[&Element]) -> Element {
        let mut acc = self.one();
        for x in xs {
            acc = self.alg.mul(&acc, x);
        }
        acc
    }

    fn pw(&self, x: &Element, e: i32) -> Element {
        assert!(e >= 0);
        self.alg.pow(x, e as u32)
    }

    fn sum(&self, xs: &[&Element]) -> Element {
        let mut acc = self.zero();
        for x in xs {
            acc = acc.add(&self.alg.field, x);
        }
        acc
    }

    /// n as a scalar of the prime field
    fn int(&self, n: i64) -> Element {
        if n.rem_euclid(2) == 1 {
            self.one()
        } else {
            self.zero()
        }
    }

    fn scale_int(&self, n: i64, x: &Element) -> Element {
        if n.rem_euclid(2) == 1 {
            x.clone()
        } else {
            self.zero()
        }
    }
}

fn binom_mod2(m: i32, j: i32) -> i64 {
    // Lucas: C(m, j) is odd iff j's bits are a submask of m's
    if j & !m == 0 {
        1
    } else {
        0
    }
}

/// The fifteen basic consequences in u(m), with cbar = 1 + c.
pub fn um_rows() -> Vec<Row> {
    let mut rows: Vec<Row> = Vec::new();
    let mut row = |id: &'static str,
                   f: Box<dyn Fn(&Algebra, i32, i32, Reading) -> (Element, Element) + Sync>| {
        rows.push(Row { id, readings: vec![Reading::Literal], build: f });
    };
    // (i, j, rhs builder) for b^i a^j
    let cases: Vec<(&'static str, i32, i32, Box<dyn Fn(&Ex) -> Element + Sync>)> = vec![
        ("ba", 1, 1, Box::new(|e| e.sum(&[&e.mul(&[&e.g("a"), &e.g("b")]), &e.g("c")]))),
        ("ba2", 1, 2, Box::new(|e| {
            e.sum(&[&e.mul(&[&e.pw(&e.g("a"), 2), &e.g("b")]), &e.g("a")])
        })),
        ("ba3", 1, 3, Box::new(|e| {
            let cbar = e.sum(&[&e.one(), &e.g("c")]);
            e.sum(&[&e.mul(&[&e.pw(&e.g("a"), 3), &e.g("b")]), &e.mul(&[&e.pw(&e.g("a"), 2), &cbar])])
        })),
        ("b2a", 2, 1, Box::new(|e| {
            e.sum(&[&e.mul(&[&e.g("a"), &e.pw(&e.g("b"), 2)]), &e.g("b")])
        })),
        ("b2a2", 2, 2, Box::new(|e| {
            e.sum(&[&e.mul(&[&e.pw(&e.g("a"), 2), &e.pw(&e.g("b"), 2)]), &e.g("c")])
        })),
        ("b2a3", 2, 3, Box::new(|e| {
            let cbar = e.sum(&[&e.one(), &e.g("c")]);
            e.sum(&[
                &e.mul(&[&e.pw(&e.g("a"), 3), &e.pw(&e.g("b"), 2)]),
                &e.mul(&[&e.pw(&e.g("a"), 2), &e.g("b")]),
                &e.mul(&[&e.g("a"), &cbar]),
            ])
        })),
        ("b3a", 3, 1, Box::new(|e| {
            let cbar = e.sum(&[&e.one(), &e.g("c")]);
            e.sum(&[&e.mul(&[&e.g("a"), &e.pw(&e.g("b"), 3)]), &e.mul(&[&e.pw(&e.g("b"), 2), &cbar])])
        })),
        ("b3a2", 3, 2, Box::new(|e| {
            e.sum(&[
                &e.mul(&[&e.pw(&e.g("a"), 2), &e.pw(&e.g("b"), 3)]),
                &e.mul(&[&e.g("a"), &e.pw(&e.g("b"), 2)]),
                &e.mul(&[&e.g("b"), &e.g("c")]),
            ])
        })),
        ("b3a3", 3, 3, Box::new(|e| {
            e.sum(&[
                &e.mul(&[&e.pw(&e.g("a"), 3), &e.pw(&e.g("b"), 3)]),
                &e.mul(&[&e.pw(&e.g("a"), 2), &e.pw(&e.g("b"), 2), &e.g("c")]),
                &e.mul(&[&e.g("a"), &e.g("b"), &e.g("c")]),
            ])
        })),
    ];
    for (id, i, j, rhs) in cases {
        row(id, Box::new(move |alg, _, _, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("b"), i), &e.pw(&e.g("a"), j)]);
            (lhs, rhs(&e))
        }));
    }
    let ccases: Vec<(&'static str, &'static str, i32, Box<dyn Fn(&Ex) -> Element + Sync>)> = vec![
        ("ca", "a", 1, Box::new(|e| e.sum(&[&e.mul(&[&e.g("a"), &e.g("c")]), &e.g("a")]))),
        ("ca2", "a", 2, Box::new(|e| e.mul(&[&e.pw(&e.g("a"), 2), &e.g("c")]))),
        ("ca3", "a", 3, Box::new(|e| {
            let cbar = e.sum(&[&e.one(), &e.g("c")]);
            e.mul(&[&e.pw(&e.g("a"), 3), &cbar])
        })),
        ("cb", "b", 1, Box::new(|e| e.sum(&[&e.mul(&[&e.g("b"), &e.g("c")]), &e.g("b")]))),
        ("cb2", "b", 2, Box::new(|e| e.mul(&[&e.pw(&e.g("b"), 2), &e.g("c")]))),
        ("cb3", "b", 3, Box::new(|e| {
            let cbar = e.sum(&[&e.one(), &e.g("c")]);
            e.mul(&[&e.pw(&e.g("b"), 3), &cbar])
        })),
    ];
    for (id, gen, p, rhs) in ccases {
        row(id, Box::new(move |alg, _, _, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.g("c"), &e.pw(&e.g(gen), p)]);
            (lhs, rhs(&e))
        }));
    }
    rows
}

/// The commutation rows of the x-side, valid in Htilde (and Dtilde).
pub fn x_side_rows() -> Vec<Row> {
    let mut rows: Vec<Row> = Vec::new();
    rows.push(Row {
        id: "x-even-power",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let x12 = e.sum(&[&e.g("x1"), &e.g("x2")]);
            let lhs = e.pw(&x12, 2 * n);
            let rhs = e.sum(&[
                &e.pw(&e.g("x2"), 2 * n),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.g("x21"), &e.pw(&e.g("x2"), 2 * n - 2)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "x-odd-power",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let x12 = e.sum(&[&e.g("x1"), &e.g("x2")]);
            let lhs = e.pw(&x12, 2 * n + 1);
            let rhs = e.sum(&[
                &e.pw(&e.g("x2"), 2 * n + 1),
                &e.mul(&[&e.g("x1"), &e.pw(&e.g("x2"), 2 * n)]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.g("x21"), &e.pw(&e.g("x2"), 2 * n - 1)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "x21-x1-commute",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, _, _| {
            let e = Ex { alg };
            (e.mul(&[&e.g("x21"), &e.g("x1")]), e.mul(&[&e.g("x1"), &e.g("x21")]))
        }),
    });
    rows.push(Row {
        id: "x2-past-odd-x21",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, n, _| {
            let e = Ex { alg };
            let x12 = e.sum(&[&e.g("x1"), &e.g("x2")]);
            let lhs = e.mul(&[&e.pw(&e.g("x2"), m), &e.pw(&e.g("x21"), 2 * n + 1)]);
            let rhs = e.mul(&[&e.pw(&e.g("x21"), 2 * n + 1), &e.pw(&x12, m)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "x2-even-past-x1",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("x2"), 2 * n), &e.g("x1")]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x1"), &e.pw(&e.g("x2"), 2 * n)]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.g("x1"), &e.g("x21"), &e.pw(&e.g("x2"), 2 * n - 2)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "x2-past-even-x21",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("x2"), m), &e.pw(&e.g("x21"), 2 * n)]);
            let rhs = e.mul(&[&e.pw(&e.g("x21"), 2 * n), &e.pw(&e.g("x2"), m)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "x2-odd-past-x1",
        readings: vec![Reading::Literal, Reading::TrailingX21Power],
        build: Box::new(|alg, _, n, reading| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("x2"), 2 * n + 1), &e.g("x1")]);
            let mid = if n >= 1 {
                e.mul(&[
                    &e.g("x21"),
                    &e.sum(&[
                        &e.pw(&e.g("x2"), 2 * n),
                        &e.mul(&[&e.g("x1"), &e.pw(&e.g("x2"), 2 * n - 1)]),
                        &e.mul(&[&e.g("x21"), &e.pw(&e.g("x2"), 2 * n - 2)]),
                    ]),
                ])
            } else {
                e.zero()
            };
            let tail = match reading {
                Reading::TrailingX21Power => {
                    e.mul(&[&e.g("x21"), &e.pw(&e.g("x2"), 2 * n)])
                }
                _ => e.pw(&e.g("x21"), 2 * n),
            };
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x1"), &e.pw(&e.g("x2"), 2 * n + 1)]),
                &e.scale_int(n as i64, &mid),
                &e.scale_int(n as i64 + 1, &tail),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "g-commutes-x1-x21",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, _, _| {
            let e = Ex { alg };
            let lhs = e.sum(&[
                &e.mul(&[&e.g("g"), &e.g("x1")]),
                &e.mul(&[&e.g("g"), &e.g("x21")]),
            ]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x1"), &e.g("g")]),
                &e.mul(&[&e.g("x21"), &e.g("g")]),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "g-odd-past-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, n, _| {
            let e = Ex { alg };
            let x12 = e.sum(&[&e.g("x1"), &e.g("x2")]);
            let lhs = e.mul(&[&e.pw(&e.g("g"), 2 * m + 1), &e.pw(&e.g("x2"), n)]);
            let rhs = e.mul(&[&e.pw(&x12, n), &e.pw(&e.g("g"), 2 * m + 1)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "g-even-past-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("g"), 2 * m), &e.pw(&e.g("x2"), n)]);
            let rhs = e.mul(&[&e.pw(&e.g("x2"), n), &e.pw(&e.g("g"), 2 * m)]);
            (lhs, rhs)
        }),
    });
    rows
}

/// The dual-side rows, valid in Ktilde (and Dtilde): zeta is the
/// polynomial generator name in both.
pub fn k_side_rows() -> Vec<Row> {
    let mut rows: Vec<Row> = Vec::new();
    rows.push(Row {
        id: "wi-past-zeta-power",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let zp1 = e.sum(&[&e.one(), &e.g("zeta")]);
            let mut ok = e.zero();
            let mut bad = e.zero();
            for w in ["w1", "w2"] {
                let lhs = e.mul(&[&e.g(w), &e.pw(&e.g("zeta"), n)]);
                let rhs = e.mul(&[&e.pw(&zp1, n), &e.g(w)]);
                ok = e.sum(&[&ok, &lhs]);
                bad = e.sum(&[&bad, &rhs]);
            }
            (ok, bad)
        }),
    });
    rows.push(Row {
        id: "w21-zeta-commute",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, _, _| {
            let e = Ex { alg };
            (e.mul(&[&e.g("w21"), &e.g("zeta")]), e.mul(&[&e.g("zeta"), &e.g("w21")]))
        }),
    });
    rows.push(Row {
        id: "w2-even-zeta-commute",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n), &e.g("zeta")]);
            let rhs = e.mul(&[&e.g("zeta"), &e.pw(&e.g("w2"), 2 * n)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-odd-zeta",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let zp1 = e.sum(&[&e.one(), &e.g("zeta")]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n + 1), &e.g("zeta")]);
            let rhs = e.mul(&[&zp1, &e.pw(&e.g("w2"), 2 * n + 1)]);
            (lhs, rhs)
        }),
    });
    rows
}

/// The cross rows of the full double Dtilde, with h = 1 + g, w = w1 + w2.
pub fn dtilde_rows() -> Vec<Row> {
    let mut rows: Vec<Row> = Vec::new();
    rows.push(Row {
        id: "small-commutations",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, _, _| {
            let e = Ex { alg };
            let lhs = e.sum(&[
                &e.mul(&[&e.g("zeta"), &e.g("x21")]),
                &e.mul(&[&e.g("w1"), &e.g("x21")]),
                &e.mul(&[&e.g("w21"), &e.g("x1")]),
                &e.mul(&[&e.g("w21"), &e.g("g")]),
            ]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x21"), &e.g("zeta")]),
                &e.mul(&[&e.g("x21"), &e.g("w1")]),
                &e.mul(&[&e.g("x1"), &e.g("w21")]),
                &e.mul(&[&e.g("g"), &e.g("w21")]),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "zeta-power-past-x1",
        readings: vec![Reading::Literal, Reading::XiOnePlusZeta],
        build: Box::new(|alg, _, n, reading| {
            let e = Ex { alg };
            let xi = match reading {
                Reading::XiOnePlusZeta => e.sum(&[&e.one(), &e.g("zeta")]),
                _ => e.g("zeta"),
            };
            let lhs = e.mul(&[&e.pw(&e.g("zeta"), n), &e.g("x1")]);
            let rhs = e.mul(&[&e.g("x1"), &e.pw(&xi, n)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "zeta-power-past-x2-power",
        readings: vec![Reading::Literal, Reading::XiOnePlusZeta, Reading::ParitySplit],
        build: Box::new(|alg, m, n, reading| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("zeta"), m), &e.pw(&e.g("x2"), n)]);
            let rhs = match reading {
                Reading::ParitySplit => {
                    // odd n: x2^n (1 + zeta)^m; even n: x2^n zeta^m
                    let zp1 = e.sum(&[&e.one(), &e.g("zeta")]);
                    if n % 2 == 1 {
                        e.mul(&[&e.pw(&e.g("x2"), n), &e.pw(&zp1, m)])
                    } else {
                        e.mul(&[&e.pw(&e.g("x2"), n), &e.pw(&e.g("zeta"), m)])
                    }
                }
                _ => {
                    let xi = match reading {
                        Reading::XiOnePlusZeta => e.sum(&[&e.one(), &e.g("zeta")]),
                        _ => e.g("zeta"),
                    };
                    let mut series = e.zero();
                    for j in 0..=m {
                        series = e.sum(&[
                            &series,
                            &e.scale_int(binom_mod2(m, j), &e.pw(&xi, j)),
                        ]);
                    }
                    e.mul(&[&e.pw(&e.g("x2"), n), &series])
                }
            };
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w1-past-even-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.g("w1"), &e.pw(&e.g("x2"), 2 * n)]);
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n), &e.g("w1")]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.g("x1"), &e.pw(&e.g("x2"), 2 * n - 2), &e.g("g")])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w1-past-odd-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.g("w1"), &e.pw(&e.g("x2"), 2 * n + 1)]);
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n + 1), &e.g("w1")]),
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n), &h]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.g("x1"), &e.pw(&e.g("x2"), 2 * n - 1), &e.g("g")])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w21-past-even-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.g("w21"), &e.pw(&e.g("x2"), 2 * n)]);
            let inner = e.sum(&[
                &e.mul(&[&e.g("x1"), &e.g("g"), &e.g("w1")]),
                &e.pw(&h, 2),
            ]);
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n), &e.g("w21")]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.pw(&e.g("x2"), 2 * n - 2), &inner])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w21-past-odd-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.g("w21"), &e.pw(&e.g("x2"), 2 * n + 1)]);
            let nterm = if n >= 1 {
                e.sum(&[
                    &e.mul(&[&e.pw(&e.g("x2"), 2 * n - 1), &e.pw(&h, 2)]),
                    &e.mul(&[
                        &e.g("x1"),
                        &e.sum(&[
                            &e.mul(&[&e.pw(&e.g("x2"), 2 * n - 1), &e.g("g"), &e.g("w1")]),
                            &e.mul(&[&e.pw(&e.g("x2"), 2 * n - 2), &e.g("g"), &h]),
                        ]),
                    ]),
                ])
            } else {
                e.zero()
            };
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n + 1), &e.g("w21")]),
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n), &h, &e.g("w1")]),
                &e.scale_int(n as i64, &nterm),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "even-w21-past-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("w21"), 2 * n), &e.g("x2")]);
            let rhs = e.mul(&[&e.g("x2"), &e.pw(&e.g("w21"), 2 * n)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "odd-w21-past-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.pw(&e.g("w21"), 2 * n + 1), &e.g("x2")]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x2"), &e.pw(&e.g("w21"), 2 * n + 1)]),
                &e.mul(&[&h, &e.g("w1"), &e.pw(&e.g("w21"), 2 * n)]),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "even-w2-past-x1",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let w = e.sum(&[&e.g("w1"), &e.g("w2")]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n), &e.g("x1")]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x1"), &e.pw(&w, 2 * n)]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&e.g("w1"), &e.pw(&e.g("w2"), 2 * n - 2)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "odd-w2-past-x1",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let w = e.sum(&[&e.g("w1"), &e.g("w2")]);
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let n_plus_h = e.sum(&[&e.int(n as i64), &h]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n + 1), &e.g("x1")]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x1"), &e.pw(&w, 2 * n + 1)]),
                &e.mul(&[&n_plus_h, &e.pw(&w, 2 * n)]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&w, &e.pw(&e.g("w2"), 2 * n - 1)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-past-even-x21",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, _, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.g("w2"), &e.pw(&e.g("x21"), 2 * m)]);
            let rhs = e.mul(&[&e.pw(&e.g("x21"), 2 * m), &e.g("w2")]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-past-odd-x21",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, _, _| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.g("w2"), &e.pw(&e.g("x21"), 2 * m + 1)]);
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x21"), 2 * m + 1), &e.g("w2")]),
                &e.mul(&[&e.pw(&e.g("x21"), 2 * m), &h, &e.g("x1")]),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "even-w2-past-x21",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n), &e.g("x21")]);
            let inner = e.sum(&[&e.mul(&[&e.g("x1"), &e.g("w1")]), &e.pw(&h, 2)]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x21"), &e.pw(&e.g("w2"), 2 * n)]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&inner, &e.pw(&e.g("w2"), 2 * n - 2)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "odd-w2-past-x21",
        readings: vec![Reading::Literal, Reading::ExponentDrop],
        build: Box::new(|alg, _, n, reading| {
            let e = Ex { alg };
            let h = e.sum(&[&e.one(), &e.g("g")]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n + 1), &e.g("x21")]);
            let tail_exp = match reading {
                Reading::ExponentDrop => 2 * n - 2,
                _ => 2 * n - 1,
            };
            let nterm = if n >= 1 {
                e.mul(&[
                    &e.sum(&[
                        &e.mul(&[
                            &e.g("x1"),
                            &e.sum(&[&e.mul(&[&e.g("w1"), &e.g("w2")]), &e.g("w21")]),
                        ]),
                        &e.mul(&[&h, &e.g("w1")]),
                        &e.mul(&[&e.pw(&h, 2), &e.g("w2")]),
                    ]),
                    &e.pw(&e.g("w2"), tail_exp),
                ])
            } else {
                e.zero()
            };
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x21"), &e.pw(&e.g("w2"), 2 * n + 1)]),
                &e.mul(&[&e.g("x1"), &h, &e.pw(&e.g("w2"), 2 * n)]),
                &e.scale_int(n as i64, &nterm),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-past-even-x2",
        readings: vec![Reading::Literal, Reading::XiOnePlusZeta],
        build: Box::new(|alg, _, n, reading| {
            let e = Ex { alg };
            let xi = match reading {
                Reading::XiOnePlusZeta => e.sum(&[&e.one(), &e.g("zeta")]),
                _ => e.g("zeta"),
            };
            let lhs = e.mul(&[&e.g("w2"), &e.pw(&e.g("x2"), 2 * n)]);
            let nterm = if n >= 1 {
                e.sum(&[
                    &e.pw(&e.g("x2"), 2 * n - 1),
                    &e.mul(&[&e.pw(&e.g("x2"), 2 * n - 2), &e.g("x1"), &e.g("g"), &xi]),
                ])
            } else {
                e.zero()
            };
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n), &e.g("w2")]),
                &e.scale_int(n as i64, &nterm),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-past-odd-x2",
        readings: vec![Reading::Literal, Reading::MixedIndexMIsN],
        build: Box::new(|alg, m, n, reading| {
            let e = Ex { alg };
            let w = e.sum(&[&e.g("w1"), &e.g("w2")]);
            // the printed row mixes m and n; the literal reading keeps the
            // free m, the corrected one binds m = n
            let mm = match reading {
                Reading::MixedIndexMIsN => n,
                _ => m,
            };
            let lhs = e.mul(&[&e.g("w2"), &e.pw(&e.g("x2"), 2 * n + 1)]);
            let nterm = if mm >= 1 {
                e.sum(&[
                    &e.pw(&e.g("x2"), 2 * mm),
                    &e.mul(&[
                        &e.g("x1"),
                        &e.pw(&e.g("x2"), 2 * mm - 1),
                        &e.g("g"),
                        &e.g("zeta"),
                    ]),
                ])
            } else if n >= 1 {
                // x2^0 term survives even when the gzeta term dies
                e.pw(&e.g("x2"), 2 * mm)
            } else {
                e.zero()
            };
            let rhs = e.sum(&[
                &e.mul(&[&e.pw(&e.g("x2"), 2 * n + 1), &w]),
                &e.mul(&[&e.pw(&e.g("x2"), 2 * mm), &e.g("g"), &e.g("zeta")]),
                &e.scale_int(n as i64, &nterm),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "even-w2-past-x2",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, _, n, _| {
            let e = Ex { alg };
            let w = e.sum(&[&e.g("w1"), &e.g("w2")]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n), &e.g("x2")]);
            let inner = e.sum(&[
                &e.mul(&[&e.g("x2"), &e.g("w21")]),
                &e.mul(&[&e.g("g"), &w]),
            ]);
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x2"), &e.pw(&e.g("w2"), 2 * n)]),
                &e.scale_int(n as i64, &if n >= 1 {
                    e.mul(&[&inner, &e.pw(&e.g("w2"), 2 * n - 2)])
                } else {
                    e.zero()
                }),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "odd-w2-past-x2",
        readings: vec![Reading::Literal, Reading::XiOnePlusZeta],
        build: Box::new(|alg, _, n, reading| {
            let e = Ex { alg };
            let xi = match reading {
                Reading::XiOnePlusZeta => e.sum(&[&e.one(), &e.g("zeta")]),
                _ => e.g("zeta"),
            };
            let lhs = e.mul(&[&e.pw(&e.g("w2"), 2 * n + 1), &e.g("x2")]);
            let nterm = if n >= 1 {
                e.sum(&[
                    &e.mul(&[&e.g("g"), &xi, &e.g("w21"), &e.pw(&e.g("w2"), 2 * n - 2)]),
                    &e.mul(&[&e.g("x2"), &e.g("w21"), &e.pw(&e.g("w2"), 2 * n - 1)]),
                    &e.mul(&[&e.g("g"), &e.pw(&e.g("w2"), 2 * n)]),
                ])
            } else {
                e.zero()
            };
            let rhs = e.sum(&[
                &e.mul(&[&e.g("x2"), &e.pw(&e.g("w2"), 2 * n + 1)]),
                &e.mul(&[
                    &e.sum(&[&e.mul(&[&e.g("x2"), &e.g("w1")]), &e.mul(&[&e.g("g"), &e.g("zeta")])]),
                    &e.pw(&e.g("w2"), 2 * n),
                ]),
                &e.scale_int(n as i64, &nterm),
            ]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-past-even-g",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, n, _| {
            let e = Ex { alg };
            let lhs = e.mul(&[&e.pw(&e.g("w2"), m), &e.pw(&e.g("g"), 2 * n)]);
            let rhs = e.mul(&[&e.pw(&e.g("g"), 2 * n), &e.pw(&e.g("w2"), m)]);
            (lhs, rhs)
        }),
    });
    rows.push(Row {
        id: "w2-past-odd-g",
        readings: vec![Reading::Literal],
        build: Box::new(|alg, m, n, _| {
            let e = Ex { alg };
            let w = e.sum(&[&e.g("w1"), &e.g("w2")]);
            let lhs = e.mul(&[&e.pw(&e.g("w2"), m), &e.pw(&e.g("g"), 2 * n + 1)]);
            let rhs = e.mul(&[&e.pw(&e.g("g"), 2 * n + 1), &e.pw(&w, m)]);
            (lhs, rhs)
        }),
    });
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn um_rows_all_literal() {
        let alg = Algebra::build("um", &Field::gf2(), 4).unwrap();
        for r in check_rows(&alg, &um_rows(), 3) {
            assert_eq!(r.holds_under, Some(Reading::Literal), "{}", r.id);
        }
    }

    #[test]
    fn x_side_rows_in_htilde() {
        let alg = Algebra::build("Htilde", &Field::gf2(), 3).unwrap();
        for r in check_rows(&alg, &x_side_rows(), 4) {
            match r.id {
                "x2-odd-past-x1" => {
                    assert_eq!(r.holds_under, Some(Reading::TrailingX21Power), "{}", r.id);
                    assert!(!r.literal_failures.is_empty());
                }
                _ => assert_eq!(r.holds_under, Some(Reading::Literal), "{}", r.id),
            }
        }
    }

    #[test]
    fn k_side_rows_in_ktilde() {
        let alg = Algebra::build("Ktilde", &Field::gf2(), 3).unwrap();
        for r in check_rows(&alg, &k_side_rows(), 4) {
            assert_eq!(r.holds_under, Some(Reading::Literal), "{}", r.id);
        }
    }

    #[test]
    fn dtilde_rows_with_documented_readings() {
        let alg = Algebra::build("Dtilde", &Field::gf2(), 3).unwrap();
        for r in check_rows(&alg, &dtilde_rows(), 4) {
            assert!(
                r.holds_under.is_some(),
                "{} holds under no reading; literal failures {:?}",
                r.id,
                r.literal_failures
            );
        }
    }
}
