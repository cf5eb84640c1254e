//! Winning regions by exhaustive search over positional strategies.
//!
//! For a fixed positional strategy `σ` of a player, the largest dominion on
//! which `σ` wins is the set of vertices from which the opponent cannot reach
//! a cycle of the wrong parity in the graph restricted by `σ`. Taking the
//! union over all `σ` gives the player's winning region.

use super::{SolveError, SolveReport};
use crate::game::{
    losing_cycle_vertices, verify_dominion_strategy, ParityGame, Player, Strategy, Vertex,
    VertexSet,
};

pub const ORACLE_DEFAULT_BOUND: usize = 10;

/// Strategies per player beyond which the search is refused.
const STRATEGY_LIMIT: u128 = 1 << 22;

pub fn brute_force_oracle(game: &ParityGame) -> Result<SolveReport, SolveError> {
    brute_force_oracle_bounded(game, ORACLE_DEFAULT_BOUND)
}

pub fn brute_force_oracle_bounded(
    game: &ParityGame,
    bound: usize,
) -> Result<SolveReport, SolveError> {
    let n = game.vertex_count();
    if n > bound {
        return Err(SolveError::TooLarge {
            vertices: n,
            limit: bound,
        });
    }
    let w_even = winning_region(game, Player::Even)?;
    let w_odd = winning_region(game, Player::Odd)?;
    assert!(
        w_even.is_disjoint(&w_odd),
        "dominia of both players intersect: {w_even:?} {w_odd:?}"
    );
    assert_eq!(
        w_even.union(&w_odd),
        game.vertices(),
        "winning regions do not cover the game"
    );
    Ok(SolveReport::from_winning(game, Player::Even, w_even))
}

fn winning_region(game: &ParityGame, player: Player) -> Result<VertexSet, SolveError> {
    let n = game.vertex_count();
    let mine: Vec<Vertex> = (0..n).filter(|&v| game.owner(v) == player).collect();
    let count: u128 = mine
        .iter()
        .map(|&v| game.successors(v).len() as u128)
        .product();
    if count > STRATEGY_LIMIT {
        return Err(SolveError::TooLarge {
            vertices: n,
            limit: n,
        });
    }
    let full = game.full_subgame();
    let everything = game.vertices();
    let mut choice = vec![0usize; n];
    let mut winning = VertexSet::empty(n);
    loop {
        let moves = |v: Vertex| -> Vec<Vertex> {
            if game.owner(v) == player {
                vec![game.successors(v)[choice[v]]]
            } else {
                game.successors(v).to_vec()
            }
        };
        let bad = losing_cycle_vertices(game, &everything, player, moves);
        let lost = backward_closure(game, &bad, &moves);
        let safe = lost.complement();
        if !safe.is_empty() {
            let sigma = Strategy::from_edges(
                player,
                safe.iter()
                    .flat_map(|v| moves(v).into_iter().map(move |w| (v, w))),
            );
            assert!(
                verify_dominion_strategy(&full, &safe, &sigma).expect("well-formed strategy"),
                "strategy region {safe:?} fails verification"
            );
            winning.union_with(&safe);
        }
        // next strategy, odometer style
        let mut k = 0;
        loop {
            if k == mine.len() {
                return Ok(winning);
            }
            let v = mine[k];
            choice[v] += 1;
            if choice[v] < game.successors(v).len() {
                break;
            }
            choice[v] = 0;
            k += 1;
        }
    }
}

/// Vertices with a path to `targets` along `moves`.
fn backward_closure(
    game: &ParityGame,
    targets: &VertexSet,
    moves: &dyn Fn(Vertex) -> Vec<Vertex>,
) -> VertexSet {
    let n = game.vertex_count();
    let mut reverse = vec![Vec::new(); n];
    for v in 0..n {
        for w in moves(v) {
            reverse[w].push(v);
        }
    }
    let mut seen = targets.clone();
    let mut stack = targets.to_vec();
    while let Some(w) = stack.pop() {
        for &v in &reverse[w] {
            if seen.insert(v) {
                stack.push(v);
            }
        }
    }
    seen
}
