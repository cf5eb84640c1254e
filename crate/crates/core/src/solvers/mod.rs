//! McNaughton-Zielonka, the universal algorithm over ordered trees, and a
//! brute-force oracle.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::AttractorDecomposition;
use crate::game::{ParityGame, Player, VertexSet};
use crate::symbolic::SymbolicCounters;
use crate::trees::{OrderedTree, TreeCursor, TreeError};

mod config;
mod engine;
mod oracle;

pub use config::{SolverConfig, SolverKind, TreeChoice};

pub use oracle::{brute_force_oracle, brute_force_oracle_bounded, ORACLE_DEFAULT_BOUND};

pub(crate) use engine::{advance, check_rule};
use engine::{EngineConfig, EngineOutput, Mode};

/// Adaptive rules for cutting the loop of the universal algorithm short.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PruningRule {
    None,
    /// Stop a loop as soon as a recursive call returns the empty set.
    EmptySet,
    /// On Parys trees, an empty result inside the first or last block of
    /// children skips the rest of that block.
    ParysBlocks,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("the game has {vertices} vertices, the limit is {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SolveStats {
    /// Calls of the recursive procedure, the top-level call included.
    pub recursive_calls: u64,
    pub loop_iterations: u64,
    pub recursion_tree: Option<OrderedTree>,
}

/// One iteration of a main loop: `(player, d, G_i, D_i, Attr(D_i), U_i,
/// Attr_opponent(U_i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub player: Player,
    pub degree: i64,
    pub subgame: VertexSet,
    pub top: VertexSet,
    pub top_attractor: VertexSet,
    pub returned: VertexSet,
    pub removed: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub w_even: VertexSet,
    pub w_odd: VertexSet,
    pub even_decomposition: Option<AttractorDecomposition>,
    pub odd_decomposition: Option<AttractorDecomposition>,
    pub stats: SolveStats,
    pub trace: Option<Vec<TraceEntry>>,
    pub symbolic: Option<SymbolicCounters>,
}

impl SolveReport {
    pub(crate) fn from_winning(game: &ParityGame, player: Player, winning: VertexSet) -> Self {
        let rest = game.vertices().difference(&winning);
        let (w_even, w_odd) = match player {
            Player::Even => (winning, rest),
            Player::Odd => (rest, winning),
        };
        SolveReport {
            w_even,
            w_odd,
            even_decomposition: None,
            odd_decomposition: None,
            stats: SolveStats::default(),
            trace: None,
            symbolic: None,
        }
    }

    pub fn winning(&self, player: Player) -> &VertexSet {
        match player {
            Player::Even => &self.w_even,
            Player::Odd => &self.w_odd,
        }
    }

    pub fn decomposition(&self, player: Player) -> Option<&AttractorDecomposition> {
        match player {
            Player::Even => self.even_decomposition.as_ref(),
            Player::Odd => self.odd_decomposition.as_ref(),
        }
    }

    /// Whether the winning sets are disjoint and cover the game.
    pub fn is_partition_of(&self, game: &ParityGame) -> bool {
        self.w_even.is_disjoint(&self.w_odd) && self.w_even.union(&self.w_odd) == game.vertices()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub rule: PruningRule,
    pub record_tree: bool,
    pub record_trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            rule: PruningRule::None,
            record_tree: true,
            record_trace: false,
        }
    }
}

/// The maximum priority rounded up to the player's parity (`0` for Even and
/// `1` for Odd on the empty game).
pub fn entry_degree(game: &ParityGame, player: Player) -> i64 {
    player.round_up(i64::from(game.max_priority()))
}

/// Heights `(⌈d/2⌉, ⌊d/2⌋)` of the Even and Odd trees that make the
/// universal algorithm correct from `player`'s entry degree `d`.
pub fn tree_heights(game: &ParityGame, player: Player) -> (usize, usize) {
    let d = entry_degree(game, player) as usize;
    (d.div_ceil(2), d / 2)
}

fn report_from(
    game: &ParityGame,
    player: Player,
    out: EngineOutput,
    record_trace: bool,
) -> SolveReport {
    let mut report = SolveReport::from_winning(game, player, out.winning);
    report.stats = SolveStats {
        recursive_calls: out.recursive_calls,
        loop_iterations: out.loop_iterations,
        recursion_tree: out.tree,
    };
    if record_trace {
        report.trace = Some(out.trace);
    }
    if let (Some(mine), Some(theirs)) = (out.player_decomposition, out.opponent_decomposition) {
        let (even, odd) = match player {
            Player::Even => (mine, theirs),
            Player::Odd => (theirs, mine),
        };
        report.even_decomposition = Some(even);
        report.odd_decomposition = Some(odd);
    }
    report
}

fn run_zielonka(
    game: &ParityGame,
    player: Player,
    enhanced: bool,
    options: &SolveOptions,
) -> SolveReport {
    let config = EngineConfig {
        mode: Mode::Zielonka { enhanced },
        record_tree: options.record_tree,
        record_trace: options.record_trace,
        probe: false,
    };
    let out = engine::run(
        &game.full_subgame(),
        player,
        entry_degree(game, player),
        &config,
    )
    .expect("the Zielonka mode has no configuration errors");
    report_from(game, player, out, options.record_trace)
}

/// McNaughton-Zielonka from the point of view of `player`: the returned
/// set is that player's winning region.
pub fn mcnaughton_zielonka(game: &ParityGame, player: Player) -> SolveReport {
    run_zielonka(game, player, false, &SolveOptions::default())
}

pub fn mcnaughton_zielonka_with(
    game: &ParityGame,
    player: Player,
    options: &SolveOptions,
) -> SolveReport {
    run_zielonka(game, player, false, options)
}

/// McNaughton-Zielonka that also assembles a decomposition of each winning
/// region: the player's at the entry degree `d` and the opponent's at `d+1`.
pub fn mcnaughton_zielonka_enhanced(game: &ParityGame, player: Player) -> SolveReport {
    run_zielonka(game, player, true, &SolveOptions::default())
}

/// The universal algorithm: each loop runs once per child of the root of
/// the opponent's tree.
pub fn universal_solve(
    game: &ParityGame,
    player: Player,
    t_even: &TreeCursor,
    t_odd: &TreeCursor,
    rule: PruningRule,
) -> Result<SolveReport, SolveError> {
    universal_solve_with(
        game,
        player,
        t_even,
        t_odd,
        &SolveOptions {
            rule,
            ..SolveOptions::default()
        },
    )
}

pub fn universal_solve_with(
    game: &ParityGame,
    player: Player,
    t_even: &TreeCursor,
    t_odd: &TreeCursor,
    options: &SolveOptions,
) -> Result<SolveReport, SolveError> {
    let config = EngineConfig {
        mode: Mode::Trees {
            even: t_even.clone(),
            odd: t_odd.clone(),
            rule: options.rule,
        },
        record_tree: options.record_tree,
        record_trace: options.record_trace,
        probe: false,
    };
    let out = engine::run(
        &game.full_subgame(),
        player,
        entry_degree(game, player),
        &config,
    )?;
    Ok(report_from(game, player, out, options.record_trace))
}

/// The sets `G_{i+1}` left after each iteration of the top-level loop of
/// the universal algorithm (rule none), starting with `(0, V)`.
pub fn separation_probe(
    game: &ParityGame,
    player: Player,
    t_even: &TreeCursor,
    t_odd: &TreeCursor,
) -> Result<Vec<(usize, VertexSet)>, SolveError> {
    let config = EngineConfig {
        mode: Mode::Trees {
            even: t_even.clone(),
            odd: t_odd.clone(),
            rule: PruningRule::None,
        },
        record_tree: false,
        record_trace: false,
        probe: true,
    };
    Ok(engine::run(
        &game.full_subgame(),
        player,
        entry_degree(game, player),
        &config,
    )?
    .probe)
}
