use rjp_core::algebra::Algebra;
use rjp_core::field::Field;
use rjp_core::identities::*;

fn main() {
    let f = Field::gf2();
    let alg = Algebra::build("Dtilde", &f, 3).unwrap();
    for r in check_rows(&alg, &dtilde_rows(), 5) {
        println!("{:28} -> {:?}", r.id, r.holds_under.map(|x| x.label()));
    }
    let h = Algebra::build("Htilde", &f, 3).unwrap();
    for r in check_rows(&h, &x_side_rows(), 5) {
        println!("H~ {:25} -> {:?}", r.id, r.holds_under.map(|x| x.label()));
    }
}
