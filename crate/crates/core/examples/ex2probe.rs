use conormal_core::blowup::*;
use conormal_core::ideal::{fitting_ideal, Ideal};
use conormal_core::matrix::PolyMatrix;
use conormal_core::module::*;
use conormal_core::monomial::MonomialOrder;
use conormal_core::ring::PolyRing;
use conormal_core::scalar::Field;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    eprintln!("probe start");
    let r = PolyRing::new(&["x","y","z","u","v"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
    let a = PolyMatrix::parse(&r, &[
        &["x", "v - u", "z"],
        &["y", "x", "v"],
        &["z", "u", "x"],
        &["u", "z", "y"],
    ]).unwrap();
    // p = ideal of 3x3 minors (signed, Hilbert-Burch order)
    let mut gens = Vec::new();
    for i in 0..4 {
        let sub = a.without_row_col(Some(i), None);
        let d = sub.determinant().unwrap();
        gens.push(if i % 2 == 0 { d } else { d.neg() });
    }
    let p = Ideal::new(&r, gens);
    eprintln!("[{:?}] p built: {} gens, degrees {:?}", t0.elapsed(), p.generators().len(),
        p.generators().iter().map(|g| g.degree().unwrap()).collect::<Vec<_>>());
    eprintln!("[{:?}] dim/height of p: {:?}", t0.elapsed(), p.dimension_and_height().unwrap());
    eprintln!("[{:?}] nu(p) = {}", t0.elapsed(), p.minimal_generator_count().unwrap());

    // Fitting ideals of the presentation (syzygy matrix should be A up to equivalence)
    let e = present_conormal(&p).unwrap();
    eprintln!("[{:?}] conormal rank {} rel cols {}", t0.elapsed(), e.rank(), e.relations().cols());
    let phi = {
        // presentation of p as R-module: syzygies of min gens
        let cols: Vec<Vec<_>> = p.minimal_generating_set().unwrap().iter().map(|g| vec![g.clone()]).collect();
        let syz = conormal_core::gb::module_syzygies(&r, 1, &cols).unwrap();
        PolyMatrix::from_columns(&r, cols.len(), &syz).unwrap()
    };
    eprintln!("[{:?}] syzygy matrix {}x{}", t0.elapsed(), phi.rows(), phi.cols());
    let i1 = fitting_ideal(&phi, 1);
    eprintln!("[{:?}] height I1 = {:?}", t0.elapsed(), i1.height().unwrap());
    let i2 = fitting_ideal(&phi, 2);
    eprintln!("[{:?}] height I2 = {:?}", t0.elapsed(), i2.height().unwrap());
    let i3 = fitting_ideal(&phi, 3);
    eprintln!("[{:?}] height I3 = {:?}", t0.elapsed(), i3.height().unwrap());

    // associated graded + G_2
    let g = associated_graded(&p).unwrap();
    eprintln!("[{:?}] G defining ideal: {} gens", t0.elapsed(), g.defining_ideal().generators().len());
    let g2 = g.graded_component(2).unwrap();
    eprintln!("[{:?}] G2: rank {} rels {}", t0.elapsed(), g2.rank(), g2.relations().cols());
    eprintln!("[{:?}] nu(G2) = {}", t0.elapsed(), g2.minimal_generators().unwrap());
    let rep = bidual_and_compare(&g2).unwrap();
    eprintln!("[{:?}] G2 reflexive: {} nu(G2**) = {}", t0.elapsed(), rep.is_reflexive,
        rep.bidual.minimal_generators().unwrap());
    eprintln!("[{:?}] defect dims: {:?}", t0.elapsed(), rep.defect.finite_length_dimensions().unwrap());
    // E = G1 reflexive per the paper
    let g1 = g.graded_component(1).unwrap();
    let rep1 = bidual_and_compare(&g1).unwrap();
    eprintln!("[{:?}] G1 reflexive: {}", t0.elapsed(), rep1.is_reflexive);
}
