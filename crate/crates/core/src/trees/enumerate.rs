use std::collections::HashMap;

use super::OrderedTree;

/// Every ordered tree with at most `n` leaves and height at most `h`, each
/// exactly once, sorted by bracket length and then lexicographically.
pub fn enumerate_small_trees(n: usize, h: usize) -> Vec<OrderedTree> {
    let mut memo = Memo::default();
    let mut out: Vec<(String, OrderedTree)> = (1..=n)
        .flat_map(|m| memo.trees(h, m))
        .map(|t| (t.to_brackets(), t))
        .collect();
    out.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.into_iter().map(|(_, t)| t).collect()
}

#[derive(Default)]
struct Memo {
    trees: HashMap<(usize, usize), Vec<OrderedTree>>,
    forests: HashMap<(usize, usize), Vec<Vec<OrderedTree>>>,
}

impl Memo {
    /// Trees of height at most `h` with exactly `m` leaves.
    fn trees(&mut self, h: usize, m: usize) -> Vec<OrderedTree> {
        if let Some(hit) = self.trees.get(&(h, m)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        if m == 1 {
            out.push(OrderedTree::leaf());
        }
        if h > 0 {
            out.extend(self.forests(h - 1, m).into_iter().map(OrderedTree::node));
        }
        self.trees.insert((h, m), out.clone());
        out
    }

    /// Non-empty sequences of trees of height at most `h` whose leaves sum to `m`.
    fn forests(&mut self, h: usize, m: usize) -> Vec<Vec<OrderedTree>> {
        if let Some(hit) = self.forests.get(&(h, m)) {
            return hit.clone();
        }
        let mut out = Vec::new();
        for first_leaves in 1..=m {
            let heads = self.trees(h, first_leaves);
            let tails = if first_leaves == m {
                vec![Vec::new()]
            } else {
                self.forests(h, m - first_leaves)
            };
            for head in &heads {
                for tail in &tails {
                    let mut forest = Vec::with_capacity(tail.len() + 1);
                    forest.push(head.clone());
                    forest.extend(tail.iter().cloned());
                    out.push(forest);
                }
            }
        }
        self.forests.insert((h, m), out.clone());
        out
    }
}

/// Number of (n,h)-small trees, by a recurrence over generating-function
/// coefficients: a tree of height ≤ h is a leaf or a non-empty sequence of
/// trees of height ≤ h-1.
pub fn count_small_trees(n: usize, h: usize) -> u128 {
    // exact[m] = trees of height ≤ current level with exactly m leaves
    let mut exact = vec![0u128; n + 1];
    if n >= 1 {
        exact[1] = 1;
    }
    for _ in 0..h {
        // seq[m] = non-empty sequences with m leaves in total
        let mut seq = vec![0u128; n + 1];
        for m in 1..=n {
            seq[m] = (1..=m)
                .map(|j| exact[j] * if j == m { 1 } else { seq[m - j] })
                .sum();
        }
        let mut next = seq;
        if n >= 1 {
            next[1] += 1;
        }
        exact = next;
    }
    exact.iter().sum()
}
