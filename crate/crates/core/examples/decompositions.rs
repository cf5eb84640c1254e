//! Attractor decompositions of both winning sets, their trees, and the
//! winning strategies read off them.

use univ_parity::decomposition::{decomposition_tree, dominion_from_decomposition, validate};
use univ_parity::game::{verify_dominion_strategy, Player};
use univ_parity::io::generate::{generate, GeneratorSpec};
use univ_parity::solvers::mcnaughton_zielonka_enhanced;

fn main() {
    let game = generate(&GeneratorSpec::random(9, 5, (1, 3), 42)).expect("valid spec");
    let full = game.full_subgame();
    let report = mcnaughton_zielonka_enhanced(&game, Player::Even);

    for player in [Player::Even, Player::Odd] {
        let region = report.winning(player);
        let dec = report
            .decomposition(player)
            .expect("enhanced runs decompose");
        validate(
            &full.restrict(region).expect("winning sets are subgames"),
            dec,
        )
        .expect("decomposition is valid");
        let sigma = dominion_from_decomposition(&full, region, dec).expect("strategy");
        let wins = verify_dominion_strategy(&full, region, &sigma).expect("well formed");

        println!("{player}: wins {:?}", region.to_vec());
        println!(
            "  degree {}, tree {}",
            dec.degree,
            decomposition_tree(dec).to_brackets()
        );
        println!("  strategy {:?} (verified: {wins})", sigma.edges);
    }
}
