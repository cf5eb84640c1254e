//! Parity games, vertex sets, subgames and positional strategies.
//!
//! Vertices are dense ids `0..n`. A [`Subgame`] is a mask over its base
//! game rather than a re-indexed copy, so `G ∩ S` is literally the base game
//! viewed through `S`.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use petgraph::algo::tarjan_scc;
use petgraph::graphmap::DiGraphMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type Priority = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Even,
    Odd,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Even => Player::Odd,
            Player::Odd => Player::Even,
        }
    }

    /// The player favoured by a priority (or degree) of this parity.
    pub fn of_parity(value: i64) -> Player {
        if value.rem_euclid(2) == 0 {
            Player::Even
        } else {
            Player::Odd
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Even => 0,
            Player::Odd => 1,
        }
    }

    /// Smallest value `>= value` whose parity favours this player.
    pub fn round_up(self, value: i64) -> i64 {
        if Player::of_parity(value) == self {
            value
        } else {
            value + 1
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Even => write!(f, "even"),
            Player::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("vertex {0} has no outgoing edge")]
    DeadEnd(Vertex),
    #[error("vertex {vertex} has successor {successor} outside 0..{count}")]
    SuccessorOutOfRange {
        vertex: Vertex,
        successor: Vertex,
        count: usize,
    },
    #[error("vertex {vertex} lists successor {successor} twice")]
    DuplicateEdge { vertex: Vertex, successor: Vertex },
    #[error("owner, priority and successor tables disagree on the vertex count")]
    LengthMismatch,
    #[error("vertex {0} would have no successor inside the subgame")]
    NotASubgame(Vertex),
    #[error("vertex set is not contained in the current vertex set (first offender {0})")]
    OutOfRange(Vertex),
    #[error("vertex set over a universe of {found} vertices, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
}

/// A set of vertices over a fixed universe `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(universe: usize, vertices: I) -> Self {
        let mut set = VertexSet::empty(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn complement_in_place(&mut self) {
        self.bits.toggle_range(..);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        out.complement_in_place();
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// First element of `self` that is not in `other`.
    pub fn first_outside(&self, other: &VertexSet) -> Option<Vertex> {
        self.bits.difference(&other.bits).next()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A parity game with max-parity winning condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityGame {
    owners: Vec<Player>,
    priorities: Vec<Priority>,
    successors: Vec<Vec<Vertex>>,
    predecessors: Vec<Vec<Vertex>>,
    names: Vec<Option<String>>,
    max_priority: Priority,
}

impl ParityGame {
    pub fn new(
        owners: Vec<Player>,
        priorities: Vec<Priority>,
        successors: Vec<Vec<Vertex>>,
    ) -> Result<Self, GameError> {
        let n = owners.len();
        if priorities.len() != n || successors.len() != n {
            return Err(GameError::LengthMismatch);
        }
        let mut predecessors = vec![Vec::new(); n];
        let mut seen = FixedBitSet::with_capacity(n);
        for (v, succ) in successors.iter().enumerate() {
            if succ.is_empty() {
                return Err(GameError::DeadEnd(v));
            }
            seen.clear();
            for &w in succ {
                if w >= n {
                    return Err(GameError::SuccessorOutOfRange {
                        vertex: v,
                        successor: w,
                        count: n,
                    });
                }
                if seen.put(w) {
                    return Err(GameError::DuplicateEdge {
                        vertex: v,
                        successor: w,
                    });
                }
                predecessors[w].push(v);
            }
        }
        let max_priority = priorities.iter().copied().max().unwrap_or(0);
        Ok(ParityGame {
            owners,
            priorities,
            successors,
            predecessors,
            names: vec![None; n],
            max_priority,
        })
    }

    pub fn with_names(mut self, names: Vec<Option<String>>) -> Self {
        assert_eq!(names.len(), self.vertex_count());
        self.names = names;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.owners.len()
    }

    pub fn owner(&self, v: Vertex) -> Player {
        self.owners[v]
    }

    pub fn priority(&self, v: Vertex) -> Priority {
        self.priorities[v]
    }

    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.successors[v]
    }

    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.predecessors[v]
    }

    pub fn name(&self, v: Vertex) -> Option<&str> {
        self.names[v].as_deref()
    }

    /// Largest priority occurring in the game (0 for the empty game).
    pub fn max_priority(&self) -> Priority {
        self.max_priority
    }

    pub fn edge_count(&self) -> usize {
        self.successors.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// `π⁻¹(p)`; empty for negative `p`.
    pub fn priority_set(&self, p: i64) -> VertexSet {
        let n = self.vertex_count();
        if p < 0 {
            return VertexSet::empty(n);
        }
        VertexSet::from_vertices(n, (0..n).filter(|&v| i64::from(self.priorities[v]) == p))
    }

    pub fn full_subgame(&self) -> Subgame<'_> {
        Subgame {
            game: self,
            vertices: self.vertices(),
        }
    }
}

/// The restriction `G ∩ S` of a game to a vertex set in which every vertex
/// keeps at least one successor.
#[derive(Clone, Debug)]
pub struct Subgame<'g> {
    game: &'g ParityGame,
    vertices: VertexSet,
}

impl<'g> Subgame<'g> {
    pub fn new(game: &'g ParityGame, vertices: VertexSet) -> Result<Self, GameError> {
        if vertices.universe() != game.vertex_count() {
            return Err(GameError::UniverseMismatch {
                expected: game.vertex_count(),
                found: vertices.universe(),
            });
        }
        if let Some(v) = first_dead_end(game, &vertices) {
            return Err(GameError::NotASubgame(v));
        }
        Ok(Subgame { game, vertices })
    }

    /// Builds a subgame the caller knows to be well formed (for instance the
    /// complement of an attractor). Checked in debug builds.
    pub(crate) fn trusted(game: &'g ParityGame, vertices: VertexSet) -> Self {
        debug_assert_eq!(
            first_dead_end(game, &vertices),
            None,
            "dead end in trusted subgame"
        );
        Subgame { game, vertices }
    }

    pub fn game(&self) -> &'g ParityGame {
        self.game
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn into_vertices(self) -> VertexSet {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(v)
    }

    /// Successors of `v` that stay inside the subgame.
    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.game
            .successors(v)
            .iter()
            .copied()
            .filter(move |&w| self.vertices.contains(w))
    }

    pub fn check_within(&self, set: &VertexSet) -> Result<(), GameError> {
        if set.universe() != self.game.vertex_count() {
            return Err(GameError::UniverseMismatch {
                expected: self.game.vertex_count(),
                found: set.universe(),
            });
        }
        match set.first_outside(&self.vertices) {
            Some(v) => Err(GameError::OutOfRange(v)),
            None => Ok(()),
        }
    }

    /// `G ∩ keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Result<Subgame<'g>, GameError> {
        self.check_within(keep)?;
        Subgame::new(self.game, keep.clone())
    }

    /// `G ∖ remove`, for a `remove` whose complement is known to be a trap.
    pub(crate) fn minus_trusted(&self, remove: &VertexSet) -> Subgame<'g> {
        Subgame::trusted(self.game, self.vertices.difference(remove))
    }

    /// Vertices of priority `p` inside the subgame.
    pub fn priority_set(&self, p: i64) -> VertexSet {
        let mut set = self.game.priority_set(p);
        set.intersect_with(&self.vertices);
        set
    }

    pub fn max_priority(&self) -> Option<Priority> {
        self.vertices.iter().map(|v| self.game.priority(v)).max()
    }

    /// Whether `set` is a trap for `for_player`: vertices of `for_player` in
    /// `set` have all their successors in `set`, and the other player's
    /// vertices have at least one. The empty set is a trap.
    pub fn is_trap(&self, set: &VertexSet, for_player: Player) -> Result<bool, GameError> {
        self.check_within(set)?;
        Ok(set.iter().all(|v| {
            if self.game.owner(v) == for_player {
                self.successors(v).all(|w| set.contains(w))
            } else {
                self.successors(v).any(|w| set.contains(w))
            }
        }))
    }
}

impl PartialEq for Subgame<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.game, other.game) && self.vertices == other.vertices
    }
}

fn first_dead_end(game: &ParityGame, vertices: &VertexSet) -> Option<Vertex> {
    vertices
        .iter()
        .find(|&v| !game.successors(v).iter().any(|&w| vertices.contains(w)))
}

/// A positional strategy given as a set of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub player: Player,
    pub edges: BTreeSet<(Vertex, Vertex)>,
}

impl Strategy {
    pub fn new(player: Player) -> Self {
        Strategy {
            player,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(player: Player, edges: I) -> Self {
        Strategy {
            player,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn targets(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.range((v, 0)..=(v, Vertex::MAX)).map(|&(_, w)| w)
    }

    /// Checks the strategy shape on `domain`: each vertex of the player has an
    /// outgoing strategy edge, each opponent vertex has all of its edges in
    /// the strategy, and every strategy edge is an edge of the subgame.
    pub fn check_on(&self, sub: &Subgame<'_>, domain: &VertexSet) -> Result<(), GameError> {
        let game = sub.game();
        for &(v, w) in &self.edges {
            if !sub.contains(v) || !sub.contains(w) || !game.successors(v).contains(&w) {
                return Err(GameError::InvalidStrategy(format!(
                    "({v}, {w}) is not an edge of the subgame"
                )));
            }
        }
        for v in domain.iter() {
            if game.owner(v) == self.player {
                if self.targets(v).next().is_none() {
                    return Err(GameError::InvalidStrategy(format!(
                        "vertex {v} has no strategy edge"
                    )));
                }
            } else if let Some(w) = sub.successors(v).find(|&w| !self.edges.contains(&(v, w))) {
                return Err(GameError::InvalidStrategy(format!(
                    "opponent edge ({v}, {w}) missing from the strategy"
                )));
            }
        }
        Ok(())
    }
}

/// Whether `sigma` is a dominion strategy on `domain` for its player: no
/// strategy edge leaves `domain` and every cycle of the strategy subgraph on
/// `domain` is won by the player.
pub fn verify_dominion_strategy(
    sub: &Subgame<'_>,
    domain: &VertexSet,
    sigma: &Strategy,
) -> Result<bool, GameError> {
    sub.check_within(domain)?;
    sigma.check_on(sub, domain)?;
    for v in domain.iter() {
        if sigma.targets(v).any(|w| !domain.contains(w)) {
            return Ok(false);
        }
    }
    let bad = losing_cycle_vertices(sub.game(), domain, sigma.player, |v| {
        sigma.targets(v).collect::<Vec<_>>()
    });
    Ok(bad.is_empty())
}

/// Vertices of `domain` lying on a cycle (of the graph given by `edges`,
/// restricted to `domain`) whose top priority has the parity of
/// `player.opponent()`.
///
/// For each priority `p` of the wrong parity, look for a strongly connected
/// component of the subgraph of priorities `<= p` that contains a vertex of
/// priority `p` and has a cycle.
pub(crate) fn losing_cycle_vertices<F>(
    game: &ParityGame,
    domain: &VertexSet,
    player: Player,
    edges: F,
) -> VertexSet
where
    F: Fn(Vertex) -> Vec<Vertex>,
{
    let n = game.vertex_count();
    let mut bad = VertexSet::empty(n);
    let wrong: BTreeSet<Priority> = domain
        .iter()
        .map(|v| game.priority(v))
        .filter(|&p| Player::of_parity(i64::from(p)) != player)
        .collect();
    let adjacency: Vec<(Vertex, Vec<Vertex>)> = domain.iter().map(|v| (v, edges(v))).collect();
    for p in wrong {
        let mut graph = DiGraphMap::<Vertex, ()>::new();
        for (v, targets) in &adjacency {
            if game.priority(*v) > p {
                continue;
            }
            graph.add_node(*v);
            for &w in targets {
                if domain.contains(w) && game.priority(w) <= p {
                    graph.add_edge(*v, w, ());
                }
            }
        }
        for component in tarjan_scc(&graph) {
            let cyclic = component.len() > 1 || graph.contains_edge(component[0], component[0]);
            if !cyclic {
                continue;
            }
            for &v in &component {
                if game.priority(v) == p {
                    bad.insert(v);
                }
            }
        }
    }
    bad
}
