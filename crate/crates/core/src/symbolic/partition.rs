//! A partition `⟨H_{L-1}, …, H_0⟩` of the vertices stored in `lg L` set
//! variables: slice `S_k` is the union of the `H_i` whose index has bit `k`
//! set, so `H_i` is the intersection of `S_k` over the set bits of `i` and of
//! the complements of `S_k` over the clear bits.

use super::store::{SetVar, SymbolicStore};
use crate::game::VertexSet;

pub struct SuccinctPartitionStack {
    slices: Vec<SetVar>,
    slots: usize,
}

impl SuccinctPartitionStack {
    /// A partition with `slots` parts (rounded up to a power of two, at least
    /// 2) where part `initial` holds every vertex and the others are empty.
    pub fn new(store: &mut SymbolicStore<'_>, slots: usize, initial: usize) -> Self {
        let slots = slots.max(2).next_power_of_two();
        assert!(initial < slots, "initial part {initial} out of {slots}");
        let bits = slots.trailing_zeros() as usize;
        let slices = (0..bits)
            .map(|k| {
                if (initial >> k) & 1 == 1 {
                    store.full()
                } else {
                    store.empty()
                }
            })
            .collect();
        SuccinctPartitionStack { slices, slots }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn slice_count(&self) -> usize {
        self.slices.len()
    }

    /// A new variable holding `H_i`.
    pub fn read(&self, store: &mut SymbolicStore<'_>, i: usize) -> SetVar {
        let acc = store.full();
        for (k, slice) in self.slices.iter().enumerate() {
            if (i >> k) & 1 == 1 {
                store.intersect_into(&acc, slice);
            } else {
                store.difference_into(&acc, slice);
            }
        }
        acc
    }

    /// Moves `moved` (a subset of `H_from`) into `H_to`.
    fn transfer(&self, store: &mut SymbolicStore<'_>, from: usize, to: usize, moved: &SetVar) {
        for (k, slice) in self.slices.iter().enumerate() {
            match ((from >> k) & 1, (to >> k) & 1) {
                (0, 1) => store.union_into(slice, moved),
                (1, 0) => store.difference_into(slice, moved),
                _ => {}
            }
        }
    }

    /// `H_{i+1} := H_{i+1} ∪ B` and `H_i := H_i ∖ B`, for `B ⊆ H_i`.
    pub fn update_replace(&self, store: &mut SymbolicStore<'_>, i: usize, b: &SetVar) {
        assert!(i + 1 < self.slots);
        self.transfer(store, i, i + 1, b);
    }

    /// `H_i := B` and `H_{i-1} := H_i ∖ B`, for `B ⊆ H_i` and an empty
    /// `H_{i-1}`.
    pub fn update_push(&self, store: &mut SymbolicStore<'_>, i: usize, b: &SetVar) {
        assert!(i >= 1 && i < self.slots);
        let rest = self.read(store, i);
        store.difference_into(&rest, b);
        self.transfer(store, i, i - 1, &rest);
        store.free(rest);
    }

    /// All parts, without touching the operation counters.
    pub fn parts(&self, store: &SymbolicStore<'_>) -> Vec<VertexSet> {
        let n = store.game().vertex_count();
        (0..self.slots)
            .map(|i| {
                let mut h = VertexSet::full(n);
                for (k, slice) in self.slices.iter().enumerate() {
                    if (i >> k) & 1 == 1 {
                        h.intersect_with(store.get(slice));
                    } else {
                        h.difference_with(store.get(slice));
                    }
                }
                h
            })
            .collect()
    }

    pub fn release(self, store: &mut SymbolicStore<'_>) {
        for slice in self.slices {
            store.free(slice);
        }
    }
}
