//! Attractor decompositions: validation, trees, and dominion strategies.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::attractor::attract_unchecked;
use crate::game::{GameError, Player, Strategy, Subgame, Vertex, VertexSet};
use crate::trees::OrderedTree;

/// `⟨A, (S_1, H_1, A_1), …, (S_k, H_k, A_k)⟩` for `player` at `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttractorDecomposition {
    pub player: Player,
    pub degree: i64,
    pub attractor: VertexSet,
    pub items: Vec<DecompositionItem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionItem {
    /// `S_i`, a trap for the opponent.
    pub dominion: VertexSet,
    /// `H_i`, a decomposition of `S_i` at `degree - 2`.
    pub sub: AttractorDecomposition,
    /// `A_i`, the player's attractor to `S_i`.
    pub attractor: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    /// The degree is negative or its parity does not favour the player.
    Degree,
    /// A stored set is not inside the subgame it decomposes.
    OutsideSubgame,
    /// `A` differs from the attractor to the top-priority vertices.
    TopAttractor,
    /// Items are present although the degree leaves no room for them.
    ItemsAtBaseDegree,
    EmptyDominion,
    /// `S_i` is not inside the remaining subgame `G_i`.
    DominionOutsideRemainder,
    /// `S_i` is not a trap for the opponent in `G_i`.
    NotOpponentTrap,
    /// `S_i` has a vertex of priority above `degree - 2`.
    PriorityTooHigh,
    /// `H_i` has the wrong player or degree.
    SubDecompositionShape,
    /// `A_i` differs from the attractor to `S_i` in `G_i`.
    ItemAttractor,
    /// Vertices remain after the last item.
    NotExhausted,
}

/// First violated clause, located by the item indices leading to the
/// offending nested decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct InvalidDecomposition {
    pub path: Vec<usize>,
    pub clause: Clause,
    pub witness: Option<Vertex>,
}

impl fmt::Display for InvalidDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} violated at item path {:?}", self.clause, self.path)?;
        if let Some(v) = self.witness {
            write!(f, " (vertex {v})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("invalid decomposition: {0}")]
    Invalid(#[from] InvalidDecomposition),
    #[error("the domain is not a trap for {0}")]
    NotATrap(Player),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("exhaustive enumeration is limited to {limit} vertices, got {vertices}")]
    TooLarge { vertices: usize, limit: usize },
}

fn symmetric_witness(a: &VertexSet, b: &VertexSet) -> Option<Vertex> {
    a.first_outside(b).or_else(|| b.first_outside(a))
}

impl AttractorDecomposition {
    /// The decomposition `⟨A⟩` with no items.
    pub fn leaf(player: Player, degree: i64, attractor: VertexSet) -> Self {
        AttractorDecomposition {
            player,
            degree,
            attractor,
            items: Vec::new(),
        }
    }

    /// `⟨⟩` when there are no items, otherwise the sequence of the items'
    /// trees.
    pub fn tree(&self) -> OrderedTree {
        OrderedTree::node(self.items.iter().map(|item| item.sub.tree()).collect())
    }

    /// Union of every set mentioned at this level (the decomposed vertices).
    pub fn covered(&self) -> VertexSet {
        let mut all = self.attractor.clone();
        for item in &self.items {
            all.union_with(&item.attractor);
        }
        all
    }
}

pub fn decomposition_tree(dec: &AttractorDecomposition) -> OrderedTree {
    dec.tree()
}

/// Checks every clause of the definition, recomputing attractors and
/// comparing them with the stored sets.
pub fn validate(
    sub: &Subgame<'_>,
    dec: &AttractorDecomposition,
) -> Result<(), InvalidDecomposition> {
    let mut path = Vec::new();
    validate_at(sub, dec, &mut path)
}

pub fn is_valid(sub: &Subgame<'_>, dec: &AttractorDecomposition) -> bool {
    validate(sub, dec).is_ok()
}

fn validate_at(
    sub: &Subgame<'_>,
    dec: &AttractorDecomposition,
    path: &mut Vec<usize>,
) -> Result<(), InvalidDecomposition> {
    let fail = |path: &Vec<usize>, clause, witness| {
        Err(InvalidDecomposition {
            path: path.clone(),
            clause,
            witness,
        })
    };
    let (player, d) = (dec.player, dec.degree);
    if d < 0 || Player::of_parity(d) != player {
        return fail(path, Clause::Degree, None);
    }
    if let Some(v) = dec.attractor.first_outside(sub.vertices()) {
        return fail(path, Clause::OutsideSubgame, Some(v));
    }
    let top = attract_unchecked(sub, &sub.priority_set(d), player).attractor;
    if top != dec.attractor {
        return fail(
            path,
            Clause::TopAttractor,
            symmetric_witness(&top, &dec.attractor),
        );
    }
    if d < 2 && !dec.items.is_empty() {
        return fail(path, Clause::ItemsAtBaseDegree, None);
    }
    let mut rest = sub.minus_trusted(&top);
    for (i, item) in dec.items.iter().enumerate() {
        path.push(i);
        let s = &item.dominion;
        if s.is_empty() {
            return fail(path, Clause::EmptyDominion, None);
        }
        if let Some(v) = s.first_outside(rest.vertices()) {
            return fail(path, Clause::DominionOutsideRemainder, Some(v));
        }
        if !rest
            .is_trap(s, player.opponent())
            .expect("checked inclusion")
        {
            let witness = s.iter().find(|&v| {
                let mut succ = rest.successors(v);
                if sub.game().owner(v) == player {
                    !succ.any(|w| s.contains(w))
                } else {
                    !succ.all(|w| s.contains(w))
                }
            });
            return fail(path, Clause::NotOpponentTrap, witness);
        }
        if let Some(v) = s
            .iter()
            .find(|&v| i64::from(sub.game().priority(v)) > d - 2)
        {
            return fail(path, Clause::PriorityTooHigh, Some(v));
        }
        if item.sub.player != player || item.sub.degree != d - 2 {
            return fail(path, Clause::SubDecompositionShape, None);
        }
        let inner = rest.restrict(s).expect("traps induce subgames");
        validate_at(&inner, &item.sub, path)?;
        let a = attract_unchecked(&rest, s, player).attractor;
        if a != item.attractor {
            return fail(
                path,
                Clause::ItemAttractor,
                symmetric_witness(&a, &item.attractor),
            );
        }
        rest = rest.minus_trusted(&a);
        path.pop();
    }
    if let Some(v) = rest.vertices().first() {
        return fail(path, Clause::NotExhausted, Some(v));
    }
    Ok(())
}

/// The dominion strategy implicit in a decomposition of `sub ∩ domain`: the
/// union of the reachability strategies of all attractors, where a vertex of
/// top priority moves to its lowest-numbered successor at its level.
pub fn dominion_from_decomposition(
    sub: &Subgame<'_>,
    domain: &VertexSet,
    dec: &AttractorDecomposition,
) -> Result<Strategy, DecompositionError> {
    let inner = sub.restrict(domain)?;
    validate(&inner, dec)?;
    let player = dec.player;
    if !sub.is_trap(domain, player.opponent())? {
        return Err(DecompositionError::NotATrap(player.opponent()));
    }
    let mut strategy = Strategy::new(player);
    collect_edges(&inner, dec, &mut strategy);
    let game = sub.game();
    for v in domain.iter().filter(|&v| game.owner(v) != player) {
        strategy.edges.extend(sub.successors(v).map(|w| (v, w)));
    }
    Ok(strategy)
}

fn collect_edges(level: &Subgame<'_>, dec: &AttractorDecomposition, strategy: &mut Strategy) {
    let game = level.game();
    let player = dec.player;
    let top = level.priority_set(dec.degree);
    for v in top.iter().filter(|&v| game.owner(v) == player) {
        let w = level
            .successors(v)
            .min()
            .expect("subgames have no dead ends");
        strategy.edges.insert((v, w));
    }
    let attr = attract_unchecked(level, &top, player);
    strategy.edges.extend(attr.strategy_edges);
    let mut rest = level.minus_trusted(&attr.attractor);
    for item in &dec.items {
        let a = attract_unchecked(&rest, &item.dominion, player);
        strategy.edges.extend(a.strategy_edges);
        let inner = rest.restrict(&item.dominion).expect("validated");
        collect_edges(&inner, &item.sub, strategy);
        rest = rest.minus_trusted(&a.attractor);
    }
}

/// Every decomposition tree of the whole subgame `sub` for `player` at
/// `degree`, each with one witnessing decomposition. Exponential; refuses
/// subgames with more than [`ENUMERATION_LIMIT`] vertices.
pub fn enumerate_decompositions(
    sub: &Subgame<'_>,
    player: Player,
    degree: i64,
) -> Result<BTreeMap<OrderedTree, AttractorDecomposition>, DecompositionError> {
    if sub.len() > ENUMERATION_LIMIT {
        return Err(DecompositionError::TooLarge {
            vertices: sub.len(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut enumerator = Enumerator {
        player,
        trees: HashMap::new(),
        forests: HashMap::new(),
    };
    Ok((*enumerator.trees(sub, degree)).clone())
}

pub const ENUMERATION_LIMIT: usize = 6;

type Forests = BTreeMap<Vec<OrderedTree>, Vec<DecompositionItem>>;

struct Enumerator {
    player: Player,
    trees: HashMap<(VertexSet, i64), Rc<BTreeMap<OrderedTree, AttractorDecomposition>>>,
    forests: HashMap<(VertexSet, i64), Rc<Forests>>,
}

impl Enumerator {
    fn trees(
        &mut self,
        sub: &Subgame<'_>,
        d: i64,
    ) -> Rc<BTreeMap<OrderedTree, AttractorDecomposition>> {
        let key = (sub.vertices().clone(), d);
        if let Some(hit) = self.trees.get(&key) {
            return Rc::clone(hit);
        }
        let mut out = BTreeMap::new();
        if d >= 0 && Player::of_parity(d) == self.player {
            let top = attract_unchecked(sub, &sub.priority_set(d), self.player).attractor;
            let rest = sub.minus_trusted(&top);
            for (forest, items) in self.forests(&rest, d).iter() {
                let dec = AttractorDecomposition {
                    player: self.player,
                    degree: d,
                    attractor: top.clone(),
                    items: items.clone(),
                };
                out.entry(OrderedTree::node(forest.clone())).or_insert(dec);
            }
        }
        let out = Rc::new(out);
        self.trees.insert(key, Rc::clone(&out));
        out
    }

    /// Item sequences that exhaust `rest`, keyed by their list of subtrees.
    fn forests(&mut self, rest: &Subgame<'_>, d: i64) -> Rc<Forests> {
        let key = (rest.vertices().clone(), d);
        if let Some(hit) = self.forests.get(&key) {
            return Rc::clone(hit);
        }
        let mut out = Forests::new();
        if rest.is_empty() {
            out.insert(Vec::new(), Vec::new());
        } else if d >= 2 {
            let game = rest.game();
            let candidates: Vec<Vertex> = rest
                .vertices()
                .iter()
                .filter(|&v| i64::from(game.priority(v)) <= d - 2)
                .collect();
            for mask in 1u64..(1u64 << candidates.len()) {
                let s = VertexSet::from_vertices(
                    game.vertex_count(),
                    candidates
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| (mask >> k) & 1 == 1)
                        .map(|(_, &v)| v),
                );
                if !rest
                    .is_trap(&s, self.player.opponent())
                    .expect("candidates are inside")
                {
                    continue;
                }
                let inner = rest.restrict(&s).expect("traps induce subgames");
                let subs = self.trees(&inner, d - 2);
                if subs.is_empty() {
                    continue;
                }
                let a = attract_unchecked(rest, &s, self.player).attractor;
                let tails = self.forests(&rest.minus_trusted(&a), d);
                for (tree, h) in subs.iter() {
                    for (tail_forest, tail_items) in tails.iter() {
                        let mut forest = Vec::with_capacity(tail_forest.len() + 1);
                        forest.push(tree.clone());
                        forest.extend(tail_forest.iter().cloned());
                        if out.contains_key(&forest) {
                            continue;
                        }
                        let mut items = Vec::with_capacity(tail_items.len() + 1);
                        items.push(DecompositionItem {
                            dominion: s.clone(),
                            sub: h.clone(),
                            attractor: a.clone(),
                        });
                        items.extend(tail_items.iter().cloned());
                        out.insert(forest, items);
                    }
                }
            }
        }
        let out = Rc::new(out);
        self.forests.insert(key, Rc::clone(&out));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{verify_dominion_strategy, ParityGame};
    use Player::{Even, Odd};

    fn even_self_loop(priority: u32) -> ParityGame {
        ParityGame::new(vec![Even], vec![priority], vec![vec![0]]).unwrap()
    }

    #[test]
    fn empty_subgame_has_the_empty_decomposition() {
        let g = even_self_loop(2);
        let sub = g.full_subgame().restrict(&VertexSet::empty(1)).unwrap();
        assert!(is_valid(
            &sub,
            &AttractorDecomposition::leaf(Even, 2, VertexSet::empty(1))
        ));
    }

    #[test]
    fn self_loop_decomposition() {
        let g = even_self_loop(2);
        let sub = g.full_subgame();
        let good = AttractorDecomposition::leaf(Even, 2, g.vertices());
        assert_eq!(validate(&sub, &good), Ok(()));
        assert_eq!(good.tree(), OrderedTree::leaf());
        let bad = AttractorDecomposition::leaf(Even, 2, VertexSet::empty(1));
        assert_eq!(
            validate(&sub, &bad).unwrap_err().clause,
            Clause::TopAttractor
        );
        let wrong_parity = AttractorDecomposition::leaf(Even, 3, g.vertices());
        assert_eq!(
            validate(&sub, &wrong_parity).unwrap_err().clause,
            Clause::Degree
        );
        let sigma = dominion_from_decomposition(&sub, &g.vertices(), &good).unwrap();
        assert_eq!(sigma.edges.into_iter().collect::<Vec<_>>(), [(0, 0)]);
    }

    #[test]
    fn one_item_gives_a_one_child_tree() {
        // vertex 0 has priority 0 and loops; nothing has priority 2
        let g = ParityGame::new(vec![Even], vec![0], vec![vec![0]]).unwrap();
        let sub = g.full_subgame();
        let all = g.vertices();
        let dec = AttractorDecomposition {
            player: Even,
            degree: 2,
            attractor: VertexSet::empty(1),
            items: vec![DecompositionItem {
                dominion: all.clone(),
                sub: AttractorDecomposition::leaf(Even, 0, all.clone()),
                attractor: all.clone(),
            }],
        };
        assert_eq!(validate(&sub, &dec), Ok(()));
        assert_eq!(dec.tree().to_brackets(), "[[]]");
        let mut stale = dec.clone();
        stale.items[0].attractor = VertexSet::empty(1);
        assert_eq!(
            validate(&sub, &stale),
            Err(InvalidDecomposition {
                path: vec![0],
                clause: Clause::ItemAttractor,
                witness: Some(0)
            })
        );
        let mut base = dec.clone();
        base.degree = 0;
        base.attractor = all.clone();
        assert_eq!(
            validate(&sub, &base).unwrap_err().clause,
            Clause::ItemsAtBaseDegree
        );
    }

    #[test]
    fn two_cycle_strategy_follows_attractor_layers() {
        // 0 (priority 0) <-> 1 (priority 2), both Even, 0 also loops
        let g = ParityGame::new(vec![Even, Even], vec![0, 2], vec![vec![0, 1], vec![0]]).unwrap();
        let sub = g.full_subgame();
        let dec = AttractorDecomposition::leaf(Even, 2, g.vertices());
        let sigma = dominion_from_decomposition(&sub, &g.vertices(), &dec).unwrap();
        assert_eq!(
            sigma.edges.iter().copied().collect::<Vec<_>>(),
            [(0, 1), (1, 0)]
        );
        assert!(verify_dominion_strategy(&sub, &g.vertices(), &sigma).unwrap());
    }

    #[test]
    fn failures_name_the_clause() {
        // 0: Odd, priority 1, loops and moves to 1; 1: Even, priority 0, loops
        let g = ParityGame::new(vec![Odd, Even], vec![1, 0], vec![vec![0, 1], vec![1]]).unwrap();
        let sub = g.full_subgame();
        let leaf = |s: &VertexSet| AttractorDecomposition::leaf(Even, 0, s.clone());
        let only0 = VertexSet::from_vertices(2, [0]);
        let only1 = VertexSet::from_vertices(2, [1]);
        let not_trap = AttractorDecomposition {
            player: Even,
            degree: 2,
            attractor: VertexSet::empty(2),
            items: vec![DecompositionItem {
                dominion: only0.clone(),
                sub: leaf(&only0),
                attractor: only0.clone(),
            }],
        };
        assert_eq!(
            validate(&sub, &not_trap).unwrap_err().clause,
            Clause::NotOpponentTrap
        );
        let partial = AttractorDecomposition {
            player: Even,
            degree: 2,
            attractor: VertexSet::empty(2),
            items: vec![DecompositionItem {
                dominion: only1.clone(),
                sub: leaf(&only1),
                attractor: only1.clone(),
            }],
        };
        assert_eq!(
            validate(&sub, &partial),
            Err(InvalidDecomposition {
                path: vec![],
                clause: Clause::NotExhausted,
                witness: Some(0)
            })
        );
        let odd = AttractorDecomposition::leaf(Odd, 1, only0.clone());
        let odd_sub = sub.restrict(&only0).unwrap();
        assert_eq!(validate(&odd_sub, &odd), Ok(()));
        let tau = dominion_from_decomposition(&sub, &only0, &odd).unwrap();
        assert!(verify_dominion_strategy(&sub, &only0, &tau).unwrap());
        // the whole game is an Odd trap but not an Odd dominion
        let whole = AttractorDecomposition::leaf(Odd, 1, only0.clone());
        assert_eq!(
            validate(&sub, &whole).unwrap_err().clause,
            Clause::NotExhausted
        );
        let even_on_odd_vertex = AttractorDecomposition::leaf(Even, 0, only1.clone());
        assert!(matches!(
            dominion_from_decomposition(&sub, &only0, &even_on_odd_vertex),
            Err(DecompositionError::Invalid(_))
        ));
    }

    #[test]
    fn enumeration_finds_all_trees() {
        // three disjoint priority-0 self loops and nothing of priority 2
        let g =
            ParityGame::new(vec![Even; 3], vec![0; 3], vec![vec![0], vec![1], vec![2]]).unwrap();
        let sub = g.full_subgame();
        let all = enumerate_decompositions(&sub, Even, 2).unwrap();
        let trees: Vec<String> = all.keys().map(|t| t.to_brackets()).collect();
        assert_eq!(trees, ["[[]]", "[[][]]", "[[][][]]"]);
        for dec in all.values() {
            assert_eq!(validate(&sub, dec), Ok(()));
        }
        assert!(enumerate_decompositions(&sub, Odd, 3).unwrap().is_empty());
        let big =
            ParityGame::new(vec![Even; 7], vec![0; 7], (0..7).map(|v| vec![v]).collect()).unwrap();
        assert!(enumerate_decompositions(&big.full_subgame(), Even, 0).is_err());
    }
}
