//! Scramble a board, then solve it by walking the hole back along its path.
//!
//! `cargo run --example puzzle_session -- 5 12 7` (q, scramble length, seed)

use std::sync::Arc;

use pgq::app::{PuzzleSession, SessionConfig};
use pgq::Plane;

fn show(s: &PuzzleSession) {
    let cells: Vec<String> = s
        .arrangement()
        .iter()
        .map(|l| l.map_or_else(|| "__".into(), |l| format!("{l:>2}")))
        .collect();
    println!("  hole {:>2}  solved {:<5}  [{}]", s.hole(), s.is_solved(), cells.join(" "));
}

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are integers"))
        .collect();
    let (q, len, seed) = (*args.first().unwrap_or(&5), *args.get(1).unwrap_or(&12), *args.get(2).unwrap_or(&7));
    let plane = Arc::new(Plane::with_order(q).expect("odd prime power"));
    let config = SessionConfig {
        q,
        alpha: None,
        scramble_length: Some(len as usize),
        seed: Some(seed),
    };
    let mut s = PuzzleSession::create(1, plane, &config).unwrap();
    println!("scrambled with seed {seed}, path {:?}", s.history().points());
    show(&s);

    let hole = s.hole();
    let target = if hole == 0 { 1 } else { 0 };
    let preview = s.preview(target).unwrap();
    println!("moving {target} into the hole swaps {:?} and the pairs {:?}", preview.swap, preview.pairs);
    s.make_move(target).unwrap();
    show(&s);
    s.undo().unwrap();

    // Walking the reversed path undoes every move.
    let back = s.history().reversed();
    for &p in &back.points()[1..] {
        s.make_move(p).unwrap();
    }
    println!("after walking the path backwards:");
    show(&s);
}
