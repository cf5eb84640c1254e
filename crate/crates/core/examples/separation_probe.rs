//! The subgames `G_1 ⊇ G_2 ⊇ ...` left after each iteration of the top-level
//! loop when the universal algorithm runs on small trees.

use univ_parity::game::Player;
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::solvers::{mcnaughton_zielonka, separation_probe};
use univ_parity::trees::{OrderedTree, TreeFamily};

fn main() {
    let game = generate(&GeneratorSpec::random(8, 3, (1, 2), 3)).expect("valid spec");
    let t_even: OrderedTree = "[[][]]".parse().unwrap();
    let t_odd: OrderedTree = "[[][][]]".parse().unwrap();
    let probe = separation_probe(
        &game,
        Player::Even,
        &TreeFamily::explicit(t_even).cursor().unwrap(),
        &TreeFamily::explicit(t_odd).cursor().unwrap(),
    )
    .expect("probe runs");
    for (i, kept) in &probe {
        println!("G_{} = {:?}", i + 1, kept.to_vec());
    }
    let w_even = mcnaughton_zielonka(&game, Player::Even).w_even;
    println!("winning set of Even: {:?}", w_even.to_vec());
}
