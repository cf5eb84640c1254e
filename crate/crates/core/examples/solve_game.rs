//! Parse a game in PGSolver format and solve it with McNaughton-Zielonka.
//!
//! ```text
//! cargo run --example solve_game
//! ```

use univ_parity::game::Player;
use univ_parity::io::pgsolver::parse_pgsolver;
use univ_parity::solvers::mcnaughton_zielonka;

const GAME: &str = "\
parity 4;
0 2 0 1 \"a\";
1 1 1 0,2 \"b\";
2 3 0 3 \"c\";
3 4 1 2,4 \"d\";
4 0 0 4 \"e\";
";

fn main() {
    let game = parse_pgsolver(GAME).expect("valid game");
    let report = mcnaughton_zielonka(&game, Player::Even);
    for v in 0..game.vertex_count() {
        let winner = if report.w_even.contains(v) {
            "even"
        } else {
            "odd"
        };
        println!(
            "{:>2} {:<2} priority {} -> {winner}",
            v,
            game.name(v).unwrap_or("?"),
            game.priority(v)
        );
    }
    println!(
        "{} recursive calls, {} loop iterations",
        report.stats.recursive_calls, report.stats.loop_iterations
    );
}
