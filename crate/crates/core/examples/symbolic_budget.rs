//! Set-variable usage of the symbolic universal algorithm with one set per
//! frame against the bit-sliced partition layout.

use univ_parity::game::Player;
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::solvers::{tree_heights, PruningRule};
use univ_parity::symbolic::{per_frame_budget, succinct_budget, sym_universal_solve, Layout};
use univ_parity::trees::TreeFamily;

fn main() {
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>10}",
        "d", "per-frame", "budget", "succinct", "budget"
    );
    for d in [2, 4, 8, 16, 32] {
        let game =
            generate(&GeneratorSpec::random(12, d, (1, 3), u64::from(d))).expect("valid spec");
        let n = game.vertex_count();
        let (he, ho) = tree_heights(&game, Player::Even);
        let te = TreeFamily::Succinct { n, h: he }.cursor().unwrap();
        let to = TreeFamily::Succinct { n, h: ho }.cursor().unwrap();
        let peak = |layout| {
            let r =
                sym_universal_solve(&game, Player::Even, &te, &to, PruningRule::EmptySet, layout)
                    .expect("solves");
            r.symbolic.expect("counters").peak_live_variables
        };
        println!(
            "{d:>3} {:>10} {:>10} {:>10} {:>10}",
            peak(Layout::PerFrame),
            per_frame_budget(he + ho),
            peak(Layout::Succinct),
            succinct_budget(he + ho)
        );
    }
}
