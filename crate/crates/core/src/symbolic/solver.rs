//! The universal algorithm on set variables.
//!
//! The subgames of the calls on the recursion stack form a descending chain.
//! The per-frame layout keeps one variable for each of them; the succinct
//! layout keeps the differences of consecutive subgames as the parts of a
//! [`SuccinctPartitionStack`], so the innermost subgame is the part with
//! the lowest index in use and every part below it is empty.

use super::partition::SuccinctPartitionStack;
use super::store::{Layout, SetVar, SymbolicStore};
use crate::game::{ParityGame, Player};
use crate::solvers::{
    advance, check_rule, entry_degree, PruningRule, SolveError, SolveReport, SolveStats,
};
use crate::trees::TreeCursor;

/// Per-frame layout: at most `d + PER_FRAME_OFFSET` live variables when
/// the two trees have total height `d`.
pub const PER_FRAME_OFFSET: usize = 4;
/// Succinct layout: at most `⌈lg d⌉ + SUCCINCT_OFFSET` live variables when
/// the two trees have total height `d`.
pub const SUCCINCT_OFFSET: usize = 5;

fn ceil_lg(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

pub fn per_frame_budget(total_height: usize) -> usize {
    total_height + PER_FRAME_OFFSET
}

pub fn succinct_budget(total_height: usize) -> usize {
    ceil_lg(total_height) + SUCCINCT_OFFSET
}

/// Set operations outside attractor fixpoints charged to one recursive
/// call, amortised over a whole run.
pub fn per_call_op_budget(layout: Layout, total_height: usize) -> u64 {
    match layout {
        Layout::PerFrame => 8,
        Layout::Succinct => 7 * slice_count(total_height) as u64 + 4,
    }
}

fn slice_count(total_height: usize) -> usize {
    (total_height + 2)
        .max(2)
        .next_power_of_two()
        .trailing_zeros() as usize
}

/// `Attr_player(target)` inside the subgame held by `within`, by iterating
/// controllable predecessors. Consumes `target` and returns the attractor
/// and the number of rounds (one `cpre` each).
pub fn sym_attract(
    store: &mut SymbolicStore<'_>,
    within: &SetVar,
    target: SetVar,
    player: Player,
) -> (SetVar, usize) {
    let outer = store.set_in_attractor(true);
    let x = target;
    let step = store.empty();
    let mut rounds = 0;
    loop {
        rounds += 1;
        store.cpre_into(&step, &x, within, player);
        store.difference_into(&step, &x);
        if store.is_empty(&step) {
            break;
        }
        store.union_into(&x, &step);
    }
    store.free(step);
    store.set_in_attractor(outer);
    (x, rounds)
}

enum Chain {
    PerFrame(Vec<SetVar>),
    Succinct(SuccinctPartitionStack),
}

impl Chain {
    fn new(store: &mut SymbolicStore<'_>, layout: Layout, total_height: usize) -> Self {
        match layout {
            Layout::PerFrame => Chain::PerFrame(vec![store.full()]),
            Layout::Succinct => {
                // part `slots - 1` collects what the root discards; the root
                // call owns part `slots - 2`
                let slots = 1 << slice_count(total_height);
                let stack = SuccinctPartitionStack::new(store, slots, slots - 1);
                let empty = store.empty();
                stack.update_push(store, slots - 1, &empty);
                store.free(empty);
                Chain::Succinct(stack)
            }
        }
    }

    fn index(stack: &SuccinctPartitionStack, depth: usize) -> usize {
        stack.slots() - 2 - depth
    }

    /// A new variable holding the subgame of the innermost call, at `depth`.
    fn current(&self, store: &mut SymbolicStore<'_>, depth: usize) -> SetVar {
        match self {
            Chain::PerFrame(vars) => store.copy(&vars[depth]),
            Chain::Succinct(stack) => stack.read(store, Self::index(stack, depth)),
        }
    }

    /// Enters a call on the subgame of `depth` minus `removed`.
    fn push(&mut self, store: &mut SymbolicStore<'_>, depth: usize, removed: &SetVar) {
        match self {
            Chain::PerFrame(vars) => {
                let g = store.copy(&vars[depth]);
                store.difference_into(&g, removed);
                vars.push(g);
            }
            Chain::Succinct(stack) => stack.update_push(store, Self::index(stack, depth), removed),
        }
    }

    fn shrink(&mut self, store: &mut SymbolicStore<'_>, depth: usize, removed: &SetVar) {
        match self {
            Chain::PerFrame(vars) => store.difference_into(&vars[depth], removed),
            Chain::Succinct(stack) => {
                stack.update_replace(store, Self::index(stack, depth), removed)
            }
        }
    }

    /// Leaves the innermost call, at `depth`, returning its subgame.
    fn pop(&mut self, store: &mut SymbolicStore<'_>, depth: usize) -> SetVar {
        match self {
            Chain::PerFrame(vars) => vars.pop().expect("a frame per call"),
            Chain::Succinct(stack) => {
                let i = Self::index(stack, depth);
                let g = stack.read(store, i);
                stack.update_replace(store, i, &g);
                g
            }
        }
    }

    fn release(self, store: &mut SymbolicStore<'_>) {
        match self {
            Chain::PerFrame(vars) => vars.into_iter().for_each(|v| store.free(v)),
            Chain::Succinct(stack) => stack.release(store),
        }
    }
}

struct Frame {
    player: Player,
    d: i64,
    even: TreeCursor,
    odd: TreeCursor,
    next: usize,
    end: usize,
    finished: bool,
}

impl Frame {
    fn new(player: Player, d: i64, even: TreeCursor, odd: TreeCursor) -> Self {
        let end = match player {
            Player::Even => odd.child_count(),
            Player::Odd => even.child_count(),
        };
        Frame {
            player,
            d,
            even,
            odd,
            next: 0,
            end,
            finished: end == 0,
        }
    }
}

/// The universal algorithm executed on a [`SymbolicStore`]; the report
/// carries the store's counters.
pub fn sym_universal_solve(
    game: &ParityGame,
    player: Player,
    t_even: &TreeCursor,
    t_odd: &TreeCursor,
    rule: PruningRule,
    layout: Layout,
) -> Result<SolveReport, SolveError> {
    check_rule(rule, t_even, t_odd)?;
    let mut store = SymbolicStore::new(game);
    let total_height = t_even.height_bound() + t_odd.height_bound();
    let mut chain = Chain::new(&mut store, layout, total_height);
    let mut stats = SolveStats {
        recursive_calls: 1,
        ..SolveStats::default()
    };
    let mut cursor_bits = t_even.footprint_bits() + t_odd.footprint_bits();
    let mut stack = vec![Frame::new(
        player,
        entry_degree(game, player),
        t_even.clone(),
        t_odd.clone(),
    )];
    let mut returning = false;

    loop {
        let depth = stack.len() - 1;
        let frame = stack.last_mut().expect("the root frame is popped last");
        if returning {
            returning = false;
            let index = frame.next - 1;
            let u = chain.pop(&mut store, depth + 1);
            let empty = store.is_empty(&u);
            let g = chain.current(&mut store, depth);
            let (removed, _) = sym_attract(&mut store, &g, u, frame.player.opponent());
            store.free(g);
            chain.shrink(&mut store, depth, &removed);
            store.free(removed);
            let cursor = match frame.player {
                Player::Even => &frame.odd,
                Player::Odd => &frame.even,
            };
            frame.finished = advance(rule, cursor, index, empty, &mut frame.next, frame.end);
        }
        if !frame.finished {
            let index = frame.next;
            frame.next += 1;
            let g = chain.current(&mut store, depth);
            let top = store.priority(frame.d);
            store.intersect_into(&top, &g);
            let (attractor, _) = sym_attract(&mut store, &g, top, frame.player);
            store.free(g);
            chain.push(&mut store, depth, &attractor);
            store.free(attractor);
            let (even, odd) = match frame.player {
                Player::Even => (frame.even.clone(), frame.odd.descend(index)?),
                Player::Odd => (frame.even.descend(index)?, frame.odd.clone()),
            };
            cursor_bits = cursor_bits.max(even.footprint_bits() + odd.footprint_bits());
            let child = Frame::new(frame.player.opponent(), frame.d - 1, even, odd);
            stack.push(child);
            stats.recursive_calls += 1;
            stats.loop_iterations += 1;
            continue;
        }
        stack.pop();
        if stack.is_empty() {
            break;
        }
        returning = true;
    }

    let winning = {
        let g = chain.current(&mut store, 0);
        store.take(g)
    };
    chain.release(&mut store);
    let counters = store.counters_mut();
    counters.layout = Some(layout);
    counters.peak_cursor_bits = cursor_bits;
    let mut report = SolveReport::from_winning(game, player, winning);
    report.stats = stats;
    report.symbolic = Some(store.counters().clone());
    Ok(report)
}
