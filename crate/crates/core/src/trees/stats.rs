//! Size of a tree family member computed from its recursive shape.

use std::collections::HashMap;

use serde::Serialize;

use super::{TreeError, TreeFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub height: usize,
    /// Saturates at `u128::MAX`.
    pub leaves: u128,
    pub nodes: u128,
}

#[derive(Clone, Copy)]
struct Count {
    leaves: u128,
    nodes: u128,
}

impl Count {
    const LEAF: Count = Count {
        leaves: 1,
        nodes: 1,
    };
    const NONE: Count = Count {
        leaves: 0,
        nodes: 0,
    };

    fn plus(self, other: Count) -> Count {
        Count {
            leaves: self.leaves.saturating_add(other.leaves),
            nodes: self.nodes.saturating_add(other.nodes),
        }
    }

    fn times(self, k: usize) -> Count {
        let k = k as u128;
        Count {
            leaves: self.leaves.saturating_mul(k),
            nodes: self.nodes.saturating_mul(k),
        }
    }

    /// A root above this forest.
    fn rooted(self) -> Count {
        if self.nodes == 0 {
            Count::LEAF
        } else {
            Count {
                leaves: self.leaves,
                nodes: self.nodes.saturating_add(1),
            }
        }
    }
}

fn parys(n: usize, h: usize, memo: &mut HashMap<(usize, usize), Count>) -> Count {
    if h == 0 {
        return Count::LEAF;
    }
    if let Some(&c) = memo.get(&(n, h)) {
        return c;
    }
    let half = n / 2;
    let c = parys(half, h - 1, memo)
        .times(2 * half)
        .plus(parys(n, h - 1, memo))
        .rooted();
    memo.insert((n, h), c);
    c
}

fn succinct_forest(n: usize, h: usize, memo: &mut HashMap<(usize, usize), Count>) -> Count {
    if n == 0 {
        return Count::NONE;
    }
    if let Some(&c) = memo.get(&(n, h)) {
        return c;
    }
    let c = succinct_forest(n / 2, h, memo)
        .times(2)
        .plus(succinct(n, h - 1, memo));
    memo.insert((n, h), c);
    c
}

fn succinct(n: usize, h: usize, memo: &mut HashMap<(usize, usize), Count>) -> Count {
    if h == 0 {
        Count::LEAF
    } else {
        succinct_forest(n, h, memo).rooted()
    }
}

impl TreeFamily {
    pub fn stats(&self) -> Result<TreeStats, TreeError> {
        let mut memo = HashMap::new();
        let (height, count) = match self {
            TreeFamily::Complete { n, h } => {
                if *n == 0 {
                    return Err(TreeError::InvalidParams(
                        "complete trees need arity n >= 1".into(),
                    ));
                }
                let mut c = Count::LEAF;
                for _ in 0..*h {
                    c = c.times(*n).rooted();
                }
                (*h, c)
            }
            TreeFamily::Parys { n, h } => (*h, parys(*n, *h, &mut memo)),
            TreeFamily::Succinct { n, h } => {
                // S_{0,h} is a single leaf
                let height = if *n == 0 { 0 } else { *h };
                (height, succinct(*n, *h, &mut memo))
            }
            TreeFamily::Explicit(t) => (
                t.height(),
                Count {
                    leaves: t.leaves(),
                    nodes: t.node_count(),
                },
            ),
        };
        Ok(TreeStats {
            height,
            leaves: count.leaves,
            nodes: count.nodes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parys_two_two_has_five_leaves() {
        assert_eq!(TreeFamily::Parys { n: 2, h: 2 }.stats().unwrap().leaves, 5);
    }

    #[test]
    fn matches_materialized_trees() {
        for n in 0..=9 {
            for h in 0..=4 {
                let mut families = vec![TreeFamily::Parys { n, h }, TreeFamily::Succinct { n, h }];
                if n > 0 {
                    families.push(TreeFamily::Complete { n, h });
                }
                for f in families {
                    let t = f.materialize().unwrap();
                    let s = f.stats().unwrap();
                    assert_eq!(
                        (s.height, s.leaves, s.nodes),
                        (t.height(), t.leaves(), t.node_count()),
                        "{f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn huge_trees_saturate() {
        let s = TreeFamily::Complete { n: 1 << 20, h: 64 }.stats().unwrap();
        assert_eq!(s.leaves, u128::MAX);
        let s = TreeFamily::Succinct { n: 1 << 40, h: 64 }.stats().unwrap();
        assert_eq!(s.height, 64);
        assert!(s.leaves > 1 << 40);
    }
}
