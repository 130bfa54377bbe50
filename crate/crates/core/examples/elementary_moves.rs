//! Elementary moves h[β,γ], hole paths, and the generator x[β,γ].
//!
//! `cargo run --example elementary_moves`

use pgq::moves::{compose_path, elementary_move, involution_pairs, x_generator};
use pgq::{HolePath, Plane};

fn main() {
    let pl = Plane::with_order(5).unwrap();
    let pt = |c: [u32; 3]| pl.point_from_codes(c).unwrap();
    let (beta, gamma) = (pt([1, 1, 0]), pt([1, 0, 0]));
    let ell = pl.line_through(beta, gamma).unwrap();

    println!("q = 5, hole at {beta} <(1,1,0)>, target {gamma} <(1,0,0)>");
    println!("line {ell}: {:?}", pl.line(ell).unwrap().point_ids);
    println!("t pairs: {:?}", involution_pairs(&pl, beta, gamma).unwrap());
    let h = elementary_move(&pl, beta, gamma).unwrap();
    println!("h = {h}");
    println!("h is an involution: {}", h.then(&h).is_identity());

    // A closed hole path is an element of the hole group at its base point.
    let alpha = pt([0, 0, 1]);
    let path = HolePath::new(vec![alpha, beta, gamma, alpha]).unwrap();
    let loop_elt = compose_path(&pl, &path).unwrap();
    let x = x_generator(&pl, alpha, beta, gamma).unwrap();
    println!("\nloop {:?} based at {alpha}", path.points());
    println!("equals x[beta,gamma]: {}", loop_elt.perm() == &x);
    println!("x fixes alpha: {}, cycle type {}", x.fixes(alpha), x.full_cycle_type());

    let back = compose_path(&pl, &path.reversed()).unwrap();
    println!("reversed loop is the inverse: {}", loop_elt.concat(&back).unwrap().perm().is_identity());
}
