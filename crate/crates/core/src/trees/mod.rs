//! Ordered trees, the complete / Parys / succinct universal families, the
//! interleaving product and the embedding order.
//!
//! Trees are written as balanced brackets: the trivial tree is `[]` and a
//! tree with children `t1 .. tk` is `[t1 .. tk]` with the children
//! juxtaposed, so `[[][]]` is the root with two leaf children.

mod cursor;
mod enumerate;
mod stats;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use cursor::{Block, TreeCursor, TreeFamily};
pub use enumerate::{count_small_trees, enumerate_small_trees};
pub use stats::TreeStats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("invalid tree parameters: {0}")]
    InvalidParams(String),
    #[error("invalid cursor path: {0}")]
    InvalidPath(String),
    #[error("malformed bracket string at byte {0}")]
    Parse(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

impl OrderedTree {
    /// The trivial tree `⟨⟩`.
    pub fn leaf() -> Self {
        OrderedTree {
            children: Vec::new(),
        }
    }

    pub fn node(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.height() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn leaves(&self) -> u128 {
        if self.children.is_empty() {
            1
        } else {
            self.children.iter().map(OrderedTree::leaves).sum()
        }
    }

    pub fn node_count(&self) -> u128 {
        1 + self
            .children
            .iter()
            .map(OrderedTree::node_count)
            .sum::<u128>()
    }

    /// `(n, h)`-small: height at most `h` and at most `n` leaves.
    pub fn is_small(&self, n: u128, h: usize) -> bool {
        self.height() <= h && self.leaves() <= n
    }

    /// `self ⋈ other`: `⟨⟩ ⋈ T = ⟨⟩` and
    /// `⟨T1, …, Tk⟩ ⋈ T = ⟨T ⋈ T1, …, T ⋈ Tk⟩`.
    pub fn interleave(&self, other: &OrderedTree) -> OrderedTree {
        OrderedTree {
            children: self.children.iter().map(|c| other.interleave(c)).collect(),
        }
    }

    /// Whether `small` can be obtained from `self` by pruning subtrees.
    ///
    /// Children are matched greedily left to right: taking the earliest child
    /// of `self` that embeds the next child of `small` never rules out a match
    /// that a later choice would allow.
    pub fn embeds(&self, small: &OrderedTree) -> bool {
        let mut wanted = small.children.iter().peekable();
        for child in &self.children {
            match wanted.peek() {
                None => break,
                Some(next) if child.embeds(next) => {
                    wanted.next();
                }
                Some(_) => {}
            }
        }
        wanted.peek().is_none()
    }

    /// The forest of the root's first `count` children, as a tree.
    pub fn prefix(&self, count: usize) -> OrderedTree {
        OrderedTree {
            children: self.children[..count.min(self.children.len())].to_vec(),
        }
    }

    pub fn to_brackets(&self) -> String {
        let mut out = String::new();
        self.write_brackets(&mut out);
        out
    }

    fn write_brackets(&self, out: &mut String) {
        out.push('[');
        for c in &self.children {
            c.write_brackets(out);
        }
        out.push(']');
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_brackets())
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_brackets())
    }
}

impl FromStr for OrderedTree {
    type Err = TreeError;

    /// Parses a bracket string; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut stack: Vec<Vec<OrderedTree>> = Vec::new();
        let mut done: Option<OrderedTree> = None;
        for (pos, ch) in s.char_indices() {
            match ch {
                c if c.is_whitespace() => {}
                '[' if done.is_none() => stack.push(Vec::new()),
                ']' => {
                    let children = stack.pop().ok_or(TreeError::Parse(pos))?;
                    let tree = OrderedTree { children };
                    match stack.last_mut() {
                        Some(parent) => parent.push(tree),
                        None => done = Some(tree),
                    }
                }
                _ => return Err(TreeError::Parse(pos)),
            }
        }
        match (done, stack.is_empty()) {
            (Some(tree), true) => Ok(tree),
            _ => Err(TreeError::Parse(s.len())),
        }
    }
}

/// `C_{n,h}`: `C_{n,0} = ⟨⟩`, `C_{n,h} = ⟨C_{n,h-1}⟩^n`.
pub fn complete_tree(n: usize, h: usize) -> Result<OrderedTree, TreeError> {
    if n == 0 {
        return Err(TreeError::InvalidParams(
            "complete trees need arity n >= 1".into(),
        ));
    }
    let mut tree = OrderedTree::leaf();
    for _ in 0..h {
        tree = OrderedTree {
            children: vec![tree; n],
        };
    }
    Ok(tree)
}

/// `P_{n,h}`: the root has `⌊n/2⌋` copies of `P_{⌊n/2⌋,h-1}`, then
/// `P_{n,h-1}`, then another `⌊n/2⌋` copies of `P_{⌊n/2⌋,h-1}`.
pub fn parys_tree(n: usize, h: usize) -> OrderedTree {
    if h == 0 {
        return OrderedTree::leaf();
    }
    let half = n / 2;
    let side = parys_tree(half, h - 1);
    let mut children = vec![side.clone(); half];
    children.push(parys_tree(n, h - 1));
    children.extend(std::iter::repeat_n(side, half));
    OrderedTree { children }
}

/// `S_{n,h}`. For `h > 0` the root's children form the forest
/// `S_{⌊n/2⌋,h} · ⟨S_{n,h-1}⟩ · S_{⌊n/2⌋,h}`, where a side term stands for
/// the children of its root and `S_{0,h}` contributes nothing.
pub fn succinct_tree(n: usize, h: usize) -> OrderedTree {
    if h == 0 {
        return OrderedTree::leaf();
    }
    OrderedTree {
        children: succinct_forest(n, h),
    }
}

fn succinct_forest(n: usize, h: usize) -> Vec<OrderedTree> {
    if n == 0 {
        return Vec::new();
    }
    let side = succinct_forest(n / 2, h);
    let mut children = side.clone();
    children.push(succinct_tree(n, h - 1));
    children.extend(side);
    children
}
