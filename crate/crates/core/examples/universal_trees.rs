//! The three universal tree families, how they grow, and the universal
//! algorithm run on each of them.

use univ_parity::game::Player;
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::solvers::{mcnaughton_zielonka, tree_heights, universal_solve, PruningRule};
use univ_parity::trees::TreeFamily;

fn main() {
    println!(
        "{:<10} {:>3} {:>3} {:>12} {:>12}",
        "family", "n", "h", "leaves", "nodes"
    );
    for (n, h) in [(4, 2), (8, 2), (8, 4), (32, 4), (256, 8)] {
        for (name, family) in [
            ("complete", TreeFamily::Complete { n, h }),
            ("parys", TreeFamily::Parys { n, h }),
            ("succinct", TreeFamily::Succinct { n, h }),
        ] {
            let stats = family.stats().expect("valid family");
            println!(
                "{name:<10} {n:>3} {h:>3} {:>12} {:>12}",
                stats.leaves, stats.nodes
            );
        }
    }

    let game = generate(&GeneratorSpec::random(10, 6, (1, 3), 7)).expect("valid spec");
    let n = game.vertex_count();
    let (he, ho) = tree_heights(&game, Player::Even);
    let expected = mcnaughton_zielonka(&game, Player::Even).w_even;
    println!();
    for (name, te, to) in [
        (
            "complete",
            TreeFamily::Complete { n, h: he },
            TreeFamily::Complete { n, h: ho },
        ),
        (
            "parys",
            TreeFamily::Parys { n, h: he },
            TreeFamily::Parys { n, h: ho },
        ),
        (
            "succinct",
            TreeFamily::Succinct { n, h: he },
            TreeFamily::Succinct { n, h: ho },
        ),
    ] {
        let (te, to) = (te.cursor().unwrap(), to.cursor().unwrap());
        for rule in [PruningRule::None, PruningRule::EmptySet] {
            let r = universal_solve(&game, Player::Even, &te, &to, rule).expect("solves");
            assert_eq!(r.w_even, expected);
            println!("{name:<10} {rule:?}: {} calls", r.stats.recursive_calls);
        }
    }
}
