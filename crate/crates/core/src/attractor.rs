//! Attractors and controllable predecessors.

use crate::game::{GameError, Player, Subgame, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttractorResult {
    pub attractor: VertexSet,
    /// One edge per attracting-player vertex of `attractor ∖ target`,
    /// pointing to a vertex that entered the attractor earlier. Opponent
    /// vertices are not recorded.
    pub strategy_edges: Vec<(Vertex, Vertex)>,
}

/// Vertices of `sub` from which `player` can force the next move into `set`.
pub fn cpre(sub: &Subgame<'_>, set: &VertexSet, player: Player) -> Result<VertexSet, GameError> {
    sub.check_within(set)?;
    Ok(cpre_unchecked(sub, set, player))
}

pub(crate) fn cpre_unchecked(sub: &Subgame<'_>, set: &VertexSet, player: Player) -> VertexSet {
    let game = sub.game();
    VertexSet::from_vertices(
        game.vertex_count(),
        sub.vertices().iter().filter(|&v| {
            if game.owner(v) == player {
                sub.successors(v).any(|w| set.contains(w))
            } else {
                sub.successors(v).all(|w| set.contains(w))
            }
        }),
    )
}

/// `Attr_player(target)` in `sub`, computed with a predecessor worklist and
/// per-vertex counters of successors not yet attracted.
pub fn attract(
    sub: &Subgame<'_>,
    target: &VertexSet,
    player: Player,
) -> Result<AttractorResult, GameError> {
    sub.check_within(target)?;
    Ok(attract_unchecked(sub, target, player))
}

pub(crate) fn attract_unchecked(
    sub: &Subgame<'_>,
    target: &VertexSet,
    player: Player,
) -> AttractorResult {
    let game = sub.game();
    let mut attractor = target.clone();
    let mut strategy_edges = Vec::new();
    let mut remaining = vec![0u32; game.vertex_count()];
    for v in sub.vertices().iter() {
        if game.owner(v) != player {
            remaining[v] = sub.successors(v).count() as u32;
        }
    }

    let mut queue: Vec<Vertex> = target.to_vec();
    let mut head = 0;
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        for &v in game.predecessors(w) {
            if !sub.contains(v) || attractor.contains(v) {
                continue;
            }
            let joins = if game.owner(v) == player {
                true
            } else {
                remaining[v] -= 1;
                remaining[v] == 0
            };
            if joins {
                if game.owner(v) == player {
                    // lowest-numbered successor that is already attracted
                    let to = game
                        .successors(v)
                        .iter()
                        .copied()
                        .filter(|&u| attractor.contains(u))
                        .min()
                        .unwrap_or(w);
                    strategy_edges.push((v, to));
                }
                attractor.insert(v);
                queue.push(v);
            }
        }
    }
    AttractorResult {
        attractor,
        strategy_edges,
    }
}

/// Round-based evaluation of the same least fixpoint, `A ↦ B ∪ cpre(A)`.
/// Returns the attractor and the number of rounds until stabilisation.
#[cfg(test)]
pub(crate) fn attract_by_rounds(
    sub: &Subgame<'_>,
    target: &VertexSet,
    player: Player,
) -> (VertexSet, usize) {
    let mut current = target.clone();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut next = cpre_unchecked(sub, &current, player);
        next.union_with(target);
        next.union_with(&current);
        if next == current {
            return (current, rounds);
        }
        current = next;
    }
}
