use serde::{Deserialize, Serialize};

use crate::attractor::cpre_unchecked;
use crate::game::{ParityGame, Player, Subgame, VertexSet};

/// Handle to a set variable of a [`SymbolicStore`]. Handles are not
/// copyable: a variable is released by passing its handle to
/// [`SymbolicStore::free`].
#[derive(Debug, PartialEq, Eq)]
pub struct SetVar(usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Layout {
    /// One set variable per recursive call on the stack.
    PerFrame,
    /// The stack of subgames is kept as bit-slices of a partition.
    Succinct,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCounters {
    pub peak_live_variables: usize,
    pub live_variables: usize,
    /// Union, intersection, difference, complement, copy, emptiness tests
    /// and loads of priority sets.
    pub set_ops: u64,
    pub cpre_ops: u64,
    /// The part of `set_ops` spent inside attractor fixpoints.
    pub attractor_set_ops: u64,
    pub layout: Option<Layout>,
    /// Largest number of bits held by the tree cursors of the innermost call.
    pub peak_cursor_bits: usize,
}

/// Set variables over the vertices of one game, counting every primitive
/// operation and the number of simultaneously allocated variables.
pub struct SymbolicStore<'g> {
    game: &'g ParityGame,
    slots: Vec<Option<VertexSet>>,
    vacant: Vec<usize>,
    counters: SymbolicCounters,
    in_attractor: bool,
}

impl<'g> SymbolicStore<'g> {
    pub fn new(game: &'g ParityGame) -> Self {
        SymbolicStore {
            game,
            slots: Vec::new(),
            vacant: Vec::new(),
            counters: SymbolicCounters::default(),
            in_attractor: false,
        }
    }

    pub fn game(&self) -> &'g ParityGame {
        self.game
    }

    pub fn counters(&self) -> &SymbolicCounters {
        &self.counters
    }

    pub(crate) fn counters_mut(&mut self) -> &mut SymbolicCounters {
        &mut self.counters
    }

    pub(crate) fn set_in_attractor(&mut self, flag: bool) -> bool {
        std::mem::replace(&mut self.in_attractor, flag)
    }

    fn count_op(&mut self) {
        self.counters.set_ops += 1;
        if self.in_attractor {
            self.counters.attractor_set_ops += 1;
        }
    }

    fn allocate(&mut self, value: VertexSet) -> SetVar {
        self.counters.live_variables += 1;
        self.counters.peak_live_variables = self
            .counters
            .peak_live_variables
            .max(self.counters.live_variables);
        match self.vacant.pop() {
            Some(i) => {
                self.slots[i] = Some(value);
                SetVar(i)
            }
            None => {
                self.slots.push(Some(value));
                SetVar(self.slots.len() - 1)
            }
        }
    }

    pub fn empty(&mut self) -> SetVar {
        self.allocate(VertexSet::empty(self.game.vertex_count()))
    }

    pub fn full(&mut self) -> SetVar {
        self.allocate(self.game.vertices())
    }

    /// A new variable holding the vertices of priority `p`.
    pub fn priority(&mut self, p: i64) -> SetVar {
        self.count_op();
        self.allocate(self.game.priority_set(p))
    }

    /// A new variable holding an arbitrary set.
    pub fn constant(&mut self, value: VertexSet) -> SetVar {
        assert_eq!(value.universe(), self.game.vertex_count());
        self.count_op();
        self.allocate(value)
    }

    pub fn copy(&mut self, var: &SetVar) -> SetVar {
        self.count_op();
        let value = self.get(var).clone();
        self.allocate(value)
    }

    pub fn free(&mut self, var: SetVar) {
        self.slots[var.0] = None;
        self.vacant.push(var.0);
        self.counters.live_variables -= 1;
    }

    /// Frees the variable and returns its contents.
    pub fn take(&mut self, var: SetVar) -> VertexSet {
        let value = self.slots[var.0].take().expect("live variable");
        self.vacant.push(var.0);
        self.counters.live_variables -= 1;
        value
    }

    pub fn get(&self, var: &SetVar) -> &VertexSet {
        self.slots[var.0].as_ref().expect("live variable")
    }

    fn binary(&mut self, dst: &SetVar, src: &SetVar, op: fn(&mut VertexSet, &VertexSet)) {
        self.count_op();
        let value = self.get(src).clone();
        op(self.slots[dst.0].as_mut().expect("live variable"), &value);
    }

    pub fn union_into(&mut self, dst: &SetVar, src: &SetVar) {
        self.binary(dst, src, VertexSet::union_with);
    }

    pub fn intersect_into(&mut self, dst: &SetVar, src: &SetVar) {
        self.binary(dst, src, VertexSet::intersect_with);
    }

    pub fn difference_into(&mut self, dst: &SetVar, src: &SetVar) {
        self.binary(dst, src, VertexSet::difference_with);
    }

    /// Replaces the contents with their complement in the vertex set.
    pub fn complement(&mut self, var: &SetVar) {
        self.count_op();
        self.slots[var.0]
            .as_mut()
            .expect("live variable")
            .complement_in_place();
    }

    pub fn is_empty(&mut self, var: &SetVar) -> bool {
        self.count_op();
        self.get(var).is_empty()
    }

    /// `dst := cpre(x)` computed in the subgame induced by `within`.
    pub fn cpre_into(&mut self, dst: &SetVar, x: &SetVar, within: &SetVar, player: Player) {
        self.counters.cpre_ops += 1;
        let sub = Subgame::trusted(self.game, self.get(within).clone());
        let value = cpre_unchecked(&sub, self.get(x), player);
        *self.slots[dst.0].as_mut().expect("live variable") = value;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting() {
        let g = ParityGame::new(
            vec![Player::Even; 3],
            vec![0, 1, 2],
            vec![vec![1], vec![2], vec![0]],
        )
        .unwrap();
        let mut store = SymbolicStore::new(&g);
        let a = store.priority(1);
        let b = store.full();
        store.difference_into(&b, &a);
        assert_eq!(store.get(&b).to_vec(), [0, 2]);
        store.complement(&b);
        assert!(!store.is_empty(&b));
        let c = store.copy(&b);
        store.free(a);
        assert_eq!(store.counters().live_variables, 2);
        assert_eq!(store.counters().peak_live_variables, 3);
        assert_eq!(store.counters().set_ops, 5);
        assert_eq!(store.take(c).to_vec(), [1]);
        store.free(b);
        assert_eq!(store.counters().live_variables, 0);
    }
}
