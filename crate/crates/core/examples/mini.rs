use conormal_core::blowup::*;
use conormal_core::ideal::Ideal;
use conormal_core::matrix::PolyMatrix;
use conormal_core::monomial::MonomialOrder;
use conormal_core::ring::PolyRing;
use conormal_core::scalar::Field;

fn main() {
    let r = PolyRing::new(&["x","y","z","u","v"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
    let a = PolyMatrix::parse(&r, &[
        &["x", "v - u", "z"], &["y", "x", "v"], &["z", "u", "x"], &["u", "z", "y"],
    ]).unwrap();
    let mut gens = Vec::new();
    for i in 0..4 {
        let sub = a.without_row_col(Some(i), None);
        let d = sub.determinant().unwrap();
        gens.push(if i % 2 == 0 { d } else { d.neg() });
    }
    let p = Ideal::new(&r, gens);
    let g = associated_graded(&p).unwrap();
    eprintln!("defining gens:");
    for q in g.defining_ideal().generators() { eprintln!("  {}", q); }
    eprintln!("calling graded_component(2)...");
    let g2 = g.graded_component(2).unwrap();
    eprintln!("done: rank {} rels {}", g2.rank(), g2.relations().cols());
}
