//! The restricted Lie algebra m of dimension 5: basis b', b, c, a, a',
//! bracket extending [a,b] = c, [a,c] = a, [b,c] = b, and 2-operation
//! a -> a', b -> b', c -> c, a' -> 0, b' -> 0.

use crate::field::{Field, Fq};
use rand::Rng;

pub const DIM: usize = 5;
pub const BP: usize = 0; // b'
pub const B: usize = 1;
pub const C: usize = 2;
pub const A: usize = 3;
pub const AP: usize = 4; // a'

pub type Vec5 = [Fq; DIM];

pub fn basis_name(i: usize) -> &'static str {
    ["b'", "b", "c", "a", "a'"][i]
}

pub fn basis_vec(i: usize) -> Vec5 {
    let mut v = [Fq::ZERO; DIM];
    v[i] = Fq::ONE;
    v
}

pub struct RestrictedLieData {
    /// bracket[i][j] = [e_i, e_j]
    bracket: [[Vec5; DIM]; DIM],
    /// two_op_basis[i] = e_i^[2]
    two_op_basis: [Vec5; DIM],
}

impl Default for RestrictedLieData {
    fn default() -> Self {
        Self::new()
    }
}

impl RestrictedLieData {
    pub fn new() -> RestrictedLieData {
        let z = [Fq::ZERO; DIM];
        let mut bracket = [[z; DIM]; DIM];
        let mut set = |i: usize, j: usize, v: usize| {
            bracket[i][j] = basis_vec(v);
            bracket[j][i] = basis_vec(v); // characteristic 2
        };
        set(A, B, C);
        set(A, C, A);
        set(B, C, B);
        set(AP, B, A);
        set(AP, BP, C);
        set(A, BP, B);
        // [a',a] = [a',c] = [b',b] = [b',c] = 0 and the diagonal stay zero
        let mut two_op_basis = [z; DIM];
        two_op_basis[A] = basis_vec(AP);
        two_op_basis[B] = basis_vec(BP);
        two_op_basis[C] = basis_vec(C);
        RestrictedLieData { bracket, two_op_basis }
    }

    pub fn bracket(&self, field: &Field, x: &Vec5, y: &Vec5) -> Vec5 {
        let mut out = [Fq::ZERO; DIM];
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let c = field.mul(x[i], y[j]);
                for (o, &b) in out.iter_mut().zip(&self.bracket[i][j]) {
                    *o = field.add(*o, field.mul(c, b));
                }
            }
        }
        out
    }

    /// x^[2] for arbitrary x, via (sum l_i e_i)^[2] =
    /// sum l_i^2 e_i^[2] + sum_{i<j} l_i l_j [e_i, e_j].
    pub fn two_op(&self, field: &Field, x: &Vec5) -> Vec5 {
        let mut out = [Fq::ZERO; DIM];
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            let sq = field.mul(x[i], x[i]);
            for (o, &b) in out.iter_mut().zip(&self.two_op_basis[i]) {
                *o = field.add(*o, field.mul(sq, b));
            }
            for j in i + 1..DIM {
                if x[j].is_zero() {
                    continue;
                }
                let c = field.mul(x[i], x[j]);
                for (o, &b) in out.iter_mut().zip(&self.bracket[i][j]) {
                    *o = field.add(*o, field.mul(c, b));
                }
            }
        }
        out
    }

    fn apply(field: &Field, phi: &[Vec5; DIM], x: &Vec5) -> Vec5 {
        let mut out = [Fq::ZERO; DIM];
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(&phi[i]) {
                *o = field.add(*o, field.mul(x[i], b));
            }
        }
        out
    }

    /// True iff phi (given by basis images) preserves bracket and
    /// 2-operation on all basis pairs; None on success, else a witness.
    pub fn check_automorphism(&self, field: &Field, phi: &[Vec5; DIM]) -> Option<String> {
        for i in 0..DIM {
            for j in 0..DIM {
                let lhs = self.bracket(field, &phi[i], &phi[j]);
                let rhs = Self::apply(field, phi, &self.bracket[i][j]);
                if lhs != rhs {
                    return Some(format!(
                        "bracket broken on [{}, {}]",
                        basis_name(i),
                        basis_name(j)
                    ));
                }
            }
            let lhs = self.two_op(field, &phi[i]);
            let rhs = Self::apply(field, phi, &self.two_op_basis[i]);
            if lhs != rhs {
                return Some(format!("2-operation broken on {}", basis_name(i)));
            }
        }
        None
    }

    /// Verify the three 2-operation axioms on basis pairs and random pairs.
    pub fn check_axioms(&self, field: &Field, rng: &mut impl Rng, samples: usize) -> Option<String> {
        let mut pairs: Vec<(Vec5, Vec5)> = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                pairs.push((basis_vec(i), basis_vec(j)));
            }
        }
        for _ in 0..samples {
            let mut x = [Fq::ZERO; DIM];
            let mut y = [Fq::ZERO; DIM];
            for k in 0..DIM {
                x[k] = Fq(rng.gen_range(0..field.order()) as u16);
                y[k] = Fq(rng.gen_range(0..field.order()) as u16);
            }
            pairs.push((x, y));
        }
        let scale = |l: Fq, v: &Vec5| {
            let mut o = [Fq::ZERO; DIM];
            for (a, &b) in o.iter_mut().zip(v) {
                *a = field.mul(l, b);
            }
            o
        };
        let add = |u: &Vec5, v: &Vec5| {
            let mut o = [Fq::ZERO; DIM];
            for i in 0..DIM {
                o[i] = field.add(u[i], v[i]);
            }
            o
        };
        for (x, y) in &pairs {
            for l in field.elements() {
                // (l x)^[2] = l^2 x^[2]
                let lhs = self.two_op(field, &scale(l, x));
                let rhs = scale(field.mul(l, l), &self.two_op(field, x));
                if lhs != rhs {
                    return Some("(lx)^[2] = l^2 x^[2] fails".into());
                }
            }
            // ad_{x^[2]} = (ad_x)^2, probed on y
            let lhs = self.bracket(field, &self.two_op(field, x), y);
            let rhs = self.bracket(field, x, &self.bracket(field, x, y));
            if lhs != rhs {
                return Some("ad_{x^[2]} = (ad_x)^2 fails".into());
            }
            // (x+y)^[2] = x^[2] + y^[2] + [x,y]
            let lhs = self.two_op(field, &add(x, y));
            let rhs = add(
                &add(&self.two_op(field, x), &self.two_op(field, y)),
                &self.bracket(field, x, y),
            );
            if lhs != rhs {
                return Some("(x+y)^[2] expansion fails".into());
            }
        }
        None
    }
}

/// The automorphism phi_g attached to an SL(2) matrix (kappa lambda; mu zeta):
/// a -> kappa a + lambda b, b -> mu a + zeta b, c -> c,
/// a' -> kappa^2 a' + lambda^2 b' + kappa lambda c,
/// b' -> mu^2 a' + zeta^2 b' + mu zeta c.
pub fn phi_g(field: &Field, kappa: Fq, lambda: Fq, mu: Fq, zeta: Fq) -> [Vec5; DIM] {
    let mut phi = [[Fq::ZERO; DIM]; DIM];
    phi[A][A] = kappa;
    phi[A][B] = lambda;
    phi[B][A] = mu;
    phi[B][B] = zeta;
    phi[C][C] = Fq::ONE;
    phi[AP][AP] = field.mul(kappa, kappa);
    phi[AP][BP] = field.mul(lambda, lambda);
    phi[AP][C] = field.mul(kappa, lambda);
    phi[BP][AP] = field.mul(mu, mu);
    phi[BP][BP] = field.mul(zeta, zeta);
    phi[BP][C] = field.mul(mu, zeta);
    phi
}

/// The Chevalley involution a <-> b, c -> c (phi_g for the antidiagonal
/// SL(2) matrix).
pub fn chevalley(field: &Field) -> [Vec5; DIM] {
    phi_g(field, Fq::ZERO, Fq::ONE, Fq::ONE, Fq::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn axioms_hold_over_gf4() {
        let f = Field::new(2).unwrap();
        let m = RestrictedLieData::new();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        assert_eq!(m.check_axioms(&f, &mut rng, 100), None);
    }

    #[test]
    fn identity_and_chevalley_are_automorphisms() {
        let f = Field::new(2).unwrap();
        let m = RestrictedLieData::new();
        let id = phi_g(&f, Fq::ONE, Fq::ZERO, Fq::ZERO, Fq::ONE);
        assert_eq!(m.check_automorphism(&f, &id), None);
        assert_eq!(m.check_automorphism(&f, &chevalley(&f)), None);
    }

    #[test]
    fn sl2_family_over_gf4() {
        let f = Field::new(2).unwrap();
        let m = RestrictedLieData::new();
        for k in f.elements() {
            for l in f.elements() {
                for mu in f.elements() {
                    for z in f.elements() {
                        // det = kappa zeta + lambda mu
                        let det = f.add(f.mul(k, z), f.mul(l, mu));
                        if det == Fq::ONE {
                            let phi = phi_g(&f, k, l, mu, z);
                            assert_eq!(m.check_automorphism(&f, &phi), None);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shear_on_c_is_not_an_automorphism() {
        // a -> a, b -> b, c -> c + a breaks [a,b] = c
        let f = Field::gf2();
        let m = RestrictedLieData::new();
        let mut phi = phi_g(&f, Fq::ONE, Fq::ZERO, Fq::ZERO, Fq::ONE);
        phi[C][A] = Fq::ONE;
        let witness = m.check_automorphism(&f, &phi);
        assert!(witness.unwrap().contains("bracket"));
    }
}
