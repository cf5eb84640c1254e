//! The attractor-decomposition loop shared by McNaughton-Zielonka and the
//! universal algorithm, run over an explicit frame stack.

use super::{PruningRule, SolveError, TraceEntry};
use crate::attractor::attract_unchecked;
use crate::decomposition::{AttractorDecomposition, DecompositionItem};
use crate::game::{Player, Subgame, VertexSet};
use crate::trees::{Block, OrderedTree, TreeCursor};

#[derive(Clone, Debug)]
pub(crate) enum Mode {
    /// Iterate until the recursive call returns the empty set.
    Zielonka { enhanced: bool },
    /// Iterate over the children of a tree root.
    Trees {
        even: TreeCursor,
        odd: TreeCursor,
        rule: PruningRule,
    },
}

#[derive(Clone, Debug)]
pub(crate) struct EngineConfig {
    pub mode: Mode,
    pub record_tree: bool,
    pub record_trace: bool,
    pub probe: bool,
}

#[derive(Debug)]
pub(crate) struct EngineOutput {
    pub winning: VertexSet,
    pub recursive_calls: u64,
    pub loop_iterations: u64,
    pub tree: Option<OrderedTree>,
    pub trace: Vec<TraceEntry>,
    pub probe: Vec<(usize, VertexSet)>,
    pub player_decomposition: Option<AttractorDecomposition>,
    pub opponent_decomposition: Option<AttractorDecomposition>,
}

struct InFlight {
    index: usize,
    g_before: VertexSet,
    top: VertexSet,
    top_attractor: VertexSet,
}

struct Frame<'g> {
    player: Player,
    d: i64,
    g: Subgame<'g>,
    cursors: Option<(TreeCursor, TreeCursor)>,
    next: usize,
    end: usize,
    finished: bool,
    in_flight: Option<InFlight>,
    children: Vec<OrderedTree>,
    opponent_items: Vec<DecompositionItem>,
    last_top_attractor: Option<VertexSet>,
    last_items: Vec<DecompositionItem>,
}

struct Returned {
    winning: VertexSet,
    tree: Option<OrderedTree>,
    player_decomposition: Option<AttractorDecomposition>,
    opponent_decomposition: Option<AttractorDecomposition>,
}

impl<'g> Frame<'g> {
    fn new(
        player: Player,
        d: i64,
        g: Subgame<'g>,
        cursors: Option<(TreeCursor, TreeCursor)>,
    ) -> Self {
        let (end, finished) = match &cursors {
            // the loop runs over the opponent's tree
            Some((even, odd)) => {
                let count = match player {
                    Player::Even => odd.child_count(),
                    Player::Odd => even.child_count(),
                };
                (count, count == 0)
            }
            None => (usize::MAX, player == Player::Even && d == 0),
        };
        Frame {
            player,
            d,
            g,
            cursors,
            next: 0,
            end,
            finished,
            in_flight: None,
            children: Vec::new(),
            opponent_items: Vec::new(),
            last_top_attractor: None,
            last_items: Vec::new(),
        }
    }

    fn iterated_cursor(&self) -> Option<&TreeCursor> {
        self.cursors.as_ref().map(|(even, odd)| match self.player {
            Player::Even => odd,
            Player::Odd => even,
        })
    }
}

pub(crate) fn check_rule(
    rule: PruningRule,
    even: &TreeCursor,
    odd: &TreeCursor,
) -> Result<(), SolveError> {
    if rule == PruningRule::ParysBlocks && !(even.is_parys() && odd.is_parys()) {
        return Err(SolveError::Config(
            "the parys-blocks rule needs Parys trees on both sides".into(),
        ));
    }
    Ok(())
}

/// Decides how a tree-driven loop continues after iteration `index`, whose
/// recursive call returned an empty set iff `empty`. Updates `next` and
/// returns whether the loop is over.
pub(crate) fn advance(
    rule: PruningRule,
    cursor: &TreeCursor,
    index: usize,
    empty: bool,
    next: &mut usize,
    end: usize,
) -> bool {
    if empty {
        match rule {
            PruningRule::None => {}
            PruningRule::EmptySet => return true,
            PruningRule::ParysBlocks => match cursor.block(index) {
                Some(Block::Left) => *next = cursor.block_end(index).expect("parys cursor"),
                Some(Block::Right) => return true,
                Some(Block::Middle) | None => {}
            },
        }
    }
    *next >= end
}

pub(crate) fn run(
    sub: &Subgame<'_>,
    player: Player,
    d: i64,
    config: &EngineConfig,
) -> Result<EngineOutput, SolveError> {
    let (cursors, rule, enhanced) = match &config.mode {
        Mode::Zielonka { enhanced } => (None, PruningRule::None, *enhanced),
        Mode::Trees { even, odd, rule } => {
            check_rule(*rule, even, odd)?;
            (Some((even.clone(), odd.clone())), *rule, false)
        }
    };
    let mut out = EngineOutput {
        winning: VertexSet::empty(0),
        recursive_calls: 1,
        loop_iterations: 0,
        tree: None,
        trace: Vec::new(),
        probe: Vec::new(),
        player_decomposition: None,
        opponent_decomposition: None,
    };
    if config.probe {
        out.probe.push((0, sub.vertices().clone()));
    }
    let mut stack = vec![Frame::new(player, d, sub.clone(), cursors)];
    let mut returned: Option<Returned> = None;

    loop {
        let depth = stack.len();
        let frame = stack.last_mut().expect("the root frame is popped last");
        if let Some(ret) = returned.take() {
            let index = absorb(frame, ret, rule, enhanced, config, &mut out);
            if config.probe && depth == 1 {
                out.probe.push((index + 1, frame.g.vertices().clone()));
            }
        }
        if !frame.finished {
            let child = spawn(frame);
            out.loop_iterations += 1;
            out.recursive_calls += 1;
            stack.push(child);
            continue;
        }
        let done = stack.pop().expect("non-empty");
        let ret = finish(done, enhanced, config.record_tree);
        if stack.is_empty() {
            out.winning = ret.winning;
            out.tree = ret.tree;
            out.player_decomposition = ret.player_decomposition;
            out.opponent_decomposition = ret.opponent_decomposition;
            return Ok(out);
        }
        returned = Some(ret);
    }
}

fn spawn<'g>(frame: &mut Frame<'g>) -> Frame<'g> {
    let index = frame.next;
    frame.next += 1;
    let top = frame.g.priority_set(frame.d);
    let top_attractor = attract_unchecked(&frame.g, &top, frame.player).attractor;
    let rest = frame.g.minus_trusted(&top_attractor);
    let cursors = frame
        .cursors
        .as_ref()
        .map(|(even, odd)| match frame.player {
            Player::Even => (
                even.clone(),
                odd.descend(index).expect("index below child count"),
            ),
            Player::Odd => (
                even.descend(index).expect("index below child count"),
                odd.clone(),
            ),
        });
    frame.in_flight = Some(InFlight {
        index,
        g_before: frame.g.vertices().clone(),
        top,
        top_attractor,
    });
    Frame::new(frame.player.opponent(), frame.d - 1, rest, cursors)
}

fn absorb(
    frame: &mut Frame<'_>,
    ret: Returned,
    rule: PruningRule,
    enhanced: bool,
    config: &EngineConfig,
    out: &mut EngineOutput,
) -> usize {
    let it = frame.in_flight.take().expect("a child was spawned");
    let opponent = frame.player.opponent();
    let removed = attract_unchecked(&frame.g, &ret.winning, opponent).attractor;
    frame.g = frame.g.minus_trusted(&removed);
    let empty = ret.winning.is_empty();
    if enhanced {
        if !empty {
            frame.opponent_items.push(DecompositionItem {
                dominion: ret.winning.clone(),
                sub: ret
                    .player_decomposition
                    .expect("enhanced children return decompositions"),
                attractor: removed.clone(),
            });
        }
        frame.last_top_attractor = Some(it.top_attractor.clone());
        frame.last_items = ret
            .opponent_decomposition
            .expect("enhanced children return decompositions")
            .items;
    }
    if config.record_trace {
        out.trace.push(TraceEntry {
            player: frame.player,
            degree: frame.d,
            subgame: it.g_before,
            top: it.top,
            top_attractor: it.top_attractor,
            returned: ret.winning,
            removed,
        });
    }
    if let Some(tree) = ret.tree {
        frame.children.push(tree);
    }

    if frame.cursors.is_none() {
        frame.finished = empty;
    } else {
        let cursor = frame.iterated_cursor().expect("tree mode").clone();
        frame.finished = advance(rule, &cursor, it.index, empty, &mut frame.next, frame.end);
    }
    it.index
}

fn finish(frame: Frame<'_>, enhanced: bool, record_tree: bool) -> Returned {
    let winning = frame.g.vertices().clone();
    let universe = winning.universe();
    let (player_decomposition, opponent_decomposition) = if !enhanced {
        (None, None)
    } else if let Some(top) = frame.last_top_attractor {
        (
            Some(AttractorDecomposition {
                player: frame.player,
                degree: frame.d,
                attractor: top,
                items: frame.last_items,
            }),
            Some(AttractorDecomposition {
                player: frame.player.opponent(),
                degree: frame.d + 1,
                attractor: VertexSet::empty(universe),
                items: frame.opponent_items,
            }),
        )
    } else {
        // the base case: every vertex has priority 0
        (
            Some(AttractorDecomposition::leaf(
                frame.player,
                frame.d,
                winning.clone(),
            )),
            Some(AttractorDecomposition::leaf(
                frame.player.opponent(),
                frame.d + 1,
                VertexSet::empty(universe),
            )),
        )
    };
    Returned {
        winning,
        tree: record_tree.then(|| OrderedTree::node(frame.children)),
        player_decomposition,
        opponent_decomposition,
    }
}
