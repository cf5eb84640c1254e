//! Versioned JSON reports and witness checking.

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::decomposition::{
    dominion_from_decomposition, validate, AttractorDecomposition, DecompositionItem,
};
use crate::game::{verify_dominion_strategy, ParityGame, Player, Strategy, Vertex, VertexSet};
use crate::solvers::{mcnaughton_zielonka, SolveReport};
use crate::symbolic::SymbolicCounters;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub player: Player,
    pub degree: i64,
    pub attractor: Vec<Vertex>,
    pub items: Vec<ItemJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemJson {
    pub dominion: Vec<Vertex>,
    pub sub: DecompositionJson,
    pub attractor: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub recursive_calls: u64,
    pub loop_iterations: u64,
    pub recursion_tree_height: Option<usize>,
    pub recursion_tree_leaves: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyJson {
    pub player: Player,
    pub edges: Vec<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub schema_version: u32,
    pub solver: String,
    pub vertices: usize,
    pub w_even: Vec<Vertex>,
    pub w_odd: Vec<Vertex>,
    pub stats: StatsJson,
    pub symbolic: Option<SymbolicCounters>,
    pub even_decomposition: Option<DecompositionJson>,
    pub odd_decomposition: Option<DecompositionJson>,
    /// Dominion strategies extracted from the decompositions, when present.
    pub strategies: Vec<StrategyJson>,
}

impl DecompositionJson {
    pub fn from_decomposition(dec: &AttractorDecomposition) -> Self {
        DecompositionJson {
            player: dec.player,
            degree: dec.degree,
            attractor: dec.attractor.to_vec(),
            items: dec
                .items
                .iter()
                .map(|item| ItemJson {
                    dominion: item.dominion.to_vec(),
                    sub: DecompositionJson::from_decomposition(&item.sub),
                    attractor: item.attractor.to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_decomposition(&self, n: usize) -> Result<AttractorDecomposition, IoError> {
        Ok(AttractorDecomposition {
            player: self.player,
            degree: self.degree,
            attractor: vertex_set(n, &self.attractor)?,
            items: self
                .items
                .iter()
                .map(|item| {
                    Ok(DecompositionItem {
                        dominion: vertex_set(n, &item.dominion)?,
                        sub: item.sub.to_decomposition(n)?,
                        attractor: vertex_set(n, &item.attractor)?,
                    })
                })
                .collect::<Result<_, IoError>>()?,
        })
    }
}

fn vertex_set(n: usize, vertices: &[Vertex]) -> Result<VertexSet, IoError> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        return Err(IoError::InvalidReport(format!(
            "vertex {v} out of range 0..{n}"
        )));
    }
    Ok(VertexSet::from_vertices(n, vertices.iter().copied()))
}

impl ReportJson {
    pub fn new(game: &ParityGame, report: &SolveReport, solver: &str) -> Self {
        let tree = report.stats.recursion_tree.as_ref();
        let mut strategies = Vec::new();
        for player in [Player::Even, Player::Odd] {
            if let Some(dec) = report.decomposition(player) {
                let sigma =
                    dominion_from_decomposition(&game.full_subgame(), report.winning(player), dec)
                        .expect("solver decompositions are valid");
                strategies.push(StrategyJson {
                    player,
                    edges: sigma.edges.into_iter().collect(),
                });
            }
        }
        ReportJson {
            schema_version: SCHEMA_VERSION,
            solver: solver.to_string(),
            vertices: game.vertex_count(),
            w_even: report.w_even.to_vec(),
            w_odd: report.w_odd.to_vec(),
            stats: StatsJson {
                recursive_calls: report.stats.recursive_calls,
                loop_iterations: report.stats.loop_iterations,
                recursion_tree_height: tree.map(|t| t.height()),
                recursion_tree_leaves: tree.map(|t| t.leaves()),
            },
            symbolic: report.symbolic.clone(),
            even_decomposition: report
                .even_decomposition
                .as_ref()
                .map(DecompositionJson::from_decomposition),
            odd_decomposition: report
                .odd_decomposition
                .as_ref()
                .map(DecompositionJson::from_decomposition),
            strategies,
        }
    }

    pub fn winning(&self, player: Player) -> &[Vertex] {
        match player {
            Player::Even => &self.w_even,
            Player::Odd => &self.w_odd,
        }
    }

    pub fn decomposition(&self, player: Player) -> Option<&DecompositionJson> {
        match player {
            Player::Even => self.even_decomposition.as_ref(),
            Player::Odd => self.odd_decomposition.as_ref(),
        }
    }
}

pub fn write_report_json(report: &ReportJson) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialise");
    text.push('\n');
    text
}

pub fn parse_report_json(text: &str) -> Result<ReportJson, IoError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value
        .get("schema_version")
        .and_then(serde_json::Value::as_u64)
    {
        Some(v) if v == u64::from(SCHEMA_VERSION) => {}
        Some(v) => {
            return Err(IoError::InvalidReport(format!(
                "unsupported schema version {v}"
            )))
        }
        None => return Err(IoError::InvalidReport("missing schema_version".into())),
    }
    Ok(serde_json::from_value(value)?)
}

/// Reasons a witness was rejected; empty when it is accepted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WitnessVerdict {
    pub problems: Vec<String>,
}

impl WitnessVerdict {
    pub fn accepted(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Checks a report against the game: the winning sets must partition the
/// vertices and agree with a fresh solve, every decomposition must be valid
/// for its winning set, and every strategy must win on it.
pub fn verify_witness(game: &ParityGame, witness: &ReportJson) -> Result<WitnessVerdict, IoError> {
    let n = game.vertex_count();
    if witness.vertices != n {
        return Err(IoError::InvalidReport(format!(
            "witness is for {} vertices, the game has {n}",
            witness.vertices
        )));
    }
    let mut problems = Vec::new();
    let w_even = vertex_set(n, &witness.w_even)?;
    let w_odd = vertex_set(n, &witness.w_odd)?;
    if !w_even.is_disjoint(&w_odd) || w_even.union(&w_odd) != game.vertices() {
        problems.push("winning sets do not partition the vertices".to_string());
    }
    let fresh = mcnaughton_zielonka(game, Player::Even);
    if fresh.w_even != w_even || fresh.w_odd != w_odd {
        problems.push(format!(
            "winning sets disagree with a fresh solve: w_even = {:?}",
            fresh.w_even
        ));
    }
    let full = game.full_subgame();
    for (player, region) in [(Player::Even, &w_even), (Player::Odd, &w_odd)] {
        if let Some(dec) = witness.decomposition(player) {
            let dec = dec.to_decomposition(n)?;
            if dec.player != player {
                problems.push(format!(
                    "the {player} decomposition belongs to {}",
                    dec.player
                ));
            } else {
                match full.restrict(region) {
                    Ok(sub) => {
                        if let Err(e) = validate(&sub, &dec) {
                            problems.push(format!("{player} decomposition: {e}"));
                        }
                    }
                    Err(e) => problems.push(format!("{player} region is not a subgame: {e}")),
                }
            }
        }
    }
    for strategy in &witness.strategies {
        let player = strategy.player;
        let sigma = Strategy::from_edges(player, strategy.edges.iter().copied());
        let region = match player {
            Player::Even => &w_even,
            Player::Odd => &w_odd,
        };
        match verify_dominion_strategy(&full, region, &sigma) {
            Ok(true) => {}
            Ok(false) => problems.push(format!("the {player} strategy does not win on its region")),
            Err(e) => problems.push(format!("the {player} strategy is malformed: {e}")),
        }
    }
    Ok(WitnessVerdict { problems })
}
