//! Points and lines of PG(2,q) and the counting facts that pin them down.
//!
//! `cargo run --example plane_incidence -- 5`

use pgq::Plane;

fn main() {
    let q: u64 = std::env::args().nth(1).map_or(3, |a| a.parse().expect("q must be an integer"));
    let pl = Plane::with_order(q).expect("odd prime power");
    let n = pl.num_points();
    println!("PG(2,{q}): {n} points, {} lines", pl.lines().len());

    let codes = |v: &[pgq::FieldElement; 3]| v.map(|c| c.code());
    if n <= 31 {
        for p in pl.points() {
            println!("  point {:>3} {:?}", p.id, codes(&p.coords));
        }
        for l in pl.lines() {
            println!("  line  {:>3} {:?} -> {:?}", l.id, codes(&l.covector), l.point_ids);
        }
    }

    let on_each_line = pl.lines().iter().all(|l| l.point_ids.len() == q as usize + 1);
    let through_each_point = (0..n).all(|p| pl.lines_through(p).len() == q as usize + 1);
    let mut unique = true;
    for a in 0..n {
        for b in a + 1..n {
            let l = pl.line_through(a, b).unwrap();
            unique &= pl.incident(a, l) && pl.incident(b, l);
        }
    }
    println!("q+1 points on every line: {on_each_line}");
    println!("q+1 lines through every point: {through_each_point}");
    println!("two points span a line containing both: {unique}");
}
