//! Lazy navigation of universal trees without materialising them.

use std::sync::Arc;

use super::{complete_tree, parys_tree, succinct_tree, OrderedTree, TreeError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeFamily {
    Complete { n: usize, h: usize },
    Parys { n: usize, h: usize },
    Succinct { n: usize, h: usize },
    Explicit(Arc<OrderedTree>),
}

impl TreeFamily {
    pub fn explicit(tree: OrderedTree) -> Self {
        TreeFamily::Explicit(Arc::new(tree))
    }

    pub fn materialize(&self) -> Result<OrderedTree, TreeError> {
        match self {
            TreeFamily::Complete { n, h } => complete_tree(*n, *h),
            TreeFamily::Parys { n, h } => Ok(parys_tree(*n, *h)),
            TreeFamily::Succinct { n, h } => Ok(succinct_tree(*n, *h)),
            TreeFamily::Explicit(t) => Ok((**t).clone()),
        }
    }

    pub fn cursor(&self) -> Result<TreeCursor, TreeError> {
        TreeCursor::root(self)
    }
}

/// Position of a child of a Parys node within the root's three blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Left,
    Middle,
    Right,
}

/// A node of a tree family, addressed by its path from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeCursor {
    /// Every node at depth `k` is `C_{n,h-k}`.
    Complete { n: usize, h: usize, depth: usize },
    /// The node is `P_{n >> halvings, h - depth}`; `halved[k]` records whether
    /// the `k`-th step went into a side block.
    Parys {
        n: usize,
        h: usize,
        halved: Vec<bool>,
    },
    /// The node is `S_{n >> path_len, h - depth}`. Each step down selects a
    /// child by a binary string (0 = left half, 1 = right half, end = middle);
    /// strings of all levels are concatenated in `path_bits` and their total
    /// length never exceeds `⌊lg n⌋`, so only levels with non-empty strings
    /// are recorded in `marks` as `(level, start offset)`.
    Succinct {
        n: usize,
        h: usize,
        depth: usize,
        path_bits: u64,
        path_len: u8,
        marks: Vec<(u32, u8)>,
    },
    Explicit {
        tree: Arc<OrderedTree>,
        path: Vec<usize>,
    },
}

/// Number of children of the root of `S_{m,g}` for `g > 0`.
fn succinct_width(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        (1usize << (usize::BITS - m.leading_zeros())) - 1
    }
}

fn bits_for(max_value: usize) -> usize {
    (usize::BITS - max_value.leading_zeros()) as usize
}

impl TreeCursor {
    pub fn root(family: &TreeFamily) -> Result<TreeCursor, TreeError> {
        Ok(match family {
            TreeFamily::Complete { n, h } => {
                if *n == 0 {
                    return Err(TreeError::InvalidParams(
                        "complete trees need arity n >= 1".into(),
                    ));
                }
                TreeCursor::Complete {
                    n: *n,
                    h: *h,
                    depth: 0,
                }
            }
            TreeFamily::Parys { n, h } => TreeCursor::Parys {
                n: *n,
                h: *h,
                halved: Vec::new(),
            },
            TreeFamily::Succinct { n, h } => {
                if *h > u32::MAX as usize {
                    return Err(TreeError::InvalidParams("height too large".into()));
                }
                TreeCursor::Succinct {
                    n: *n,
                    h: *h,
                    depth: 0,
                    path_bits: 0,
                    path_len: 0,
                    marks: Vec::new(),
                }
            }
            TreeFamily::Explicit(tree) => TreeCursor::Explicit {
                tree: Arc::clone(tree),
                path: Vec::new(),
            },
        })
    }

    pub fn depth(&self) -> usize {
        match self {
            TreeCursor::Complete { depth, .. } | TreeCursor::Succinct { depth, .. } => *depth,
            TreeCursor::Parys { halved, .. } => halved.len(),
            TreeCursor::Explicit { path, .. } => path.len(),
        }
    }

    fn explicit_node<'a>(tree: &'a OrderedTree, path: &[usize]) -> &'a OrderedTree {
        path.iter().fold(tree, |node, &i| &node.children()[i])
    }

    pub fn child_count(&self) -> usize {
        match self {
            TreeCursor::Complete { n, h, depth } => {
                if depth < h {
                    *n
                } else {
                    0
                }
            }
            TreeCursor::Parys { n, h, halved } => {
                if halved.len() < *h {
                    let m = n >> halved.iter().filter(|&&b| b).count();
                    2 * (m / 2) + 1
                } else {
                    0
                }
            }
            TreeCursor::Succinct {
                n,
                h,
                depth,
                path_len,
                ..
            } => {
                if depth < h {
                    succinct_width(n >> path_len)
                } else {
                    0
                }
            }
            TreeCursor::Explicit { tree, path } => Self::explicit_node(tree, path).children().len(),
        }
    }

    fn check_child(&self, i: usize) -> Result<(), TreeError> {
        let count = self.child_count();
        if i >= count {
            return Err(TreeError::InvalidPath(format!(
                "child {i} of a node with {count} children"
            )));
        }
        Ok(())
    }

    pub fn descend(&self, i: usize) -> Result<TreeCursor, TreeError> {
        self.check_child(i)?;
        Ok(match self {
            TreeCursor::Complete { n, h, depth } => TreeCursor::Complete {
                n: *n,
                h: *h,
                depth: depth + 1,
            },
            TreeCursor::Parys { n, h, halved } => {
                let m = n >> halved.iter().filter(|&&b| b).count();
                let mut halved = halved.clone();
                halved.push(i != m / 2);
                TreeCursor::Parys {
                    n: *n,
                    h: *h,
                    halved,
                }
            }
            TreeCursor::Succinct {
                n,
                h,
                depth,
                path_bits,
                path_len,
                marks,
            } => {
                let mut m = n >> path_len;
                let mut index = i;
                let mut bits = *path_bits;
                let mut len = *path_len;
                let start = *path_len;
                loop {
                    let side = succinct_width(m / 2);
                    if index < side {
                        len += 1;
                    } else if index == side {
                        break;
                    } else {
                        index -= side + 1;
                        bits |= 1 << len;
                        len += 1;
                    }
                    m /= 2;
                }
                let mut marks = marks.clone();
                if len > start {
                    marks.push(((depth + 1) as u32, start));
                }
                TreeCursor::Succinct {
                    n: *n,
                    h: *h,
                    depth: depth + 1,
                    path_bits: bits,
                    path_len: len,
                    marks,
                }
            }
            TreeCursor::Explicit { tree, path } => {
                let mut path = path.clone();
                path.push(i);
                TreeCursor::Explicit {
                    tree: Arc::clone(tree),
                    path,
                }
            }
        })
    }

    pub fn ascend(&self) -> Result<TreeCursor, TreeError> {
        if self.depth() == 0 {
            return Err(TreeError::InvalidPath("the root has no parent".into()));
        }
        Ok(match self {
            TreeCursor::Complete { n, h, depth } => TreeCursor::Complete {
                n: *n,
                h: *h,
                depth: depth - 1,
            },
            TreeCursor::Parys { n, h, halved } => TreeCursor::Parys {
                n: *n,
                h: *h,
                halved: halved[..halved.len() - 1].to_vec(),
            },
            TreeCursor::Succinct {
                n,
                h,
                depth,
                path_bits,
                path_len,
                marks,
            } => {
                let mut marks = marks.clone();
                let mut len = *path_len;
                if marks
                    .last()
                    .is_some_and(|&(level, _)| level as usize == *depth)
                {
                    len = marks.pop().map(|(_, start)| start).unwrap_or(0);
                }
                let bits = if len == 0 {
                    0
                } else {
                    path_bits & (u64::MAX >> (64 - u32::from(len)))
                };
                TreeCursor::Succinct {
                    n: *n,
                    h: *h,
                    depth: depth - 1,
                    path_bits: bits,
                    path_len: len,
                    marks,
                }
            }
            TreeCursor::Explicit { tree, path } => TreeCursor::Explicit {
                tree: Arc::clone(tree),
                path: path[..path.len() - 1].to_vec(),
            },
        })
    }

    /// Upper bound on the height of the subtree rooted at this node.
    pub fn height_bound(&self) -> usize {
        match self {
            TreeCursor::Complete { h, depth, .. } | TreeCursor::Succinct { h, depth, .. } => {
                h - depth
            }
            TreeCursor::Parys { h, halved, .. } => h - halved.len(),
            TreeCursor::Explicit { tree, path } => Self::explicit_node(tree, path).height(),
        }
    }

    /// Block of child `i` for Parys nodes, `None` for other families.
    pub fn block(&self, i: usize) -> Option<Block> {
        match self {
            TreeCursor::Parys { n, halved, .. } => {
                let half = (n >> halved.iter().filter(|&&b| b).count()) / 2;
                Some(if i < half {
                    Block::Left
                } else if i == half {
                    Block::Middle
                } else {
                    Block::Right
                })
            }
            _ => None,
        }
    }

    /// Index one past the end of the block containing child `i`.
    pub fn block_end(&self, i: usize) -> Option<usize> {
        let count = self.child_count();
        self.block(i).map(|block| match block {
            Block::Left => count / 2,
            Block::Middle => count / 2 + 1,
            Block::Right => count,
        })
    }

    pub fn is_parys(&self) -> bool {
        matches!(self, TreeCursor::Parys { .. })
    }

    /// The subtree rooted at this node, rebuilt by walking the cursor.
    pub fn materialize(&self) -> OrderedTree {
        let children = (0..self.child_count())
            .map(|i| {
                self.descend(i)
                    .expect("index below child_count")
                    .materialize()
            })
            .collect();
        OrderedTree::node(children)
    }

    /// Serialises a succinct cursor: depth, number of marked levels, then per
    /// marked level its index, string length and string bits. Returns `None`
    /// for other families.
    pub fn encode_succinct(&self) -> Option<Vec<bool>> {
        let TreeCursor::Succinct {
            n,
            h,
            depth,
            path_bits,
            path_len,
            marks,
        } = self
        else {
            return None;
        };
        let level_bits = bits_for(*h);
        let len_bits = bits_for(bits_for(*n));
        let mut out = Vec::new();
        let mut push = |value: usize, width: usize| {
            for k in 0..width {
                out.push((value >> k) & 1 == 1);
            }
        };
        push(*depth, level_bits);
        push(marks.len(), len_bits);
        for (k, &(level, start)) in marks.iter().enumerate() {
            let end = marks.get(k + 1).map_or(*path_len, |&(_, s)| s);
            push(level as usize, level_bits);
            push(usize::from(end - start), len_bits);
            for b in start..end {
                push(((path_bits >> b) & 1) as usize, 1);
            }
        }
        Some(out)
    }

    pub fn decode_succinct(n: usize, h: usize, bits: &[bool]) -> Result<TreeCursor, TreeError> {
        let level_bits = bits_for(h);
        let len_bits = bits_for(bits_for(n));
        let mut pos = 0;
        let mut take = |width: usize| -> Result<usize, TreeError> {
            if pos + width > bits.len() {
                return Err(TreeError::InvalidPath("truncated cursor encoding".into()));
            }
            let v = (0..width).fold(0usize, |acc, k| acc | (usize::from(bits[pos + k]) << k));
            pos += width;
            Ok(v)
        };
        let depth = take(level_bits)?;
        let count = take(len_bits)?;
        let mut marks = Vec::with_capacity(count);
        let mut path_bits = 0u64;
        let mut path_len = 0u8;
        for _ in 0..count {
            let level = take(level_bits)?;
            let len = take(len_bits)?;
            marks.push((level as u32, path_len));
            for _ in 0..len {
                if take(1)? == 1 {
                    path_bits |= 1 << path_len;
                }
                path_len += 1;
            }
        }
        if depth > h || marks.iter().any(|&(level, _)| level as usize > depth) {
            return Err(TreeError::InvalidPath(
                "cursor encoding out of range".into(),
            ));
        }
        Ok(TreeCursor::Succinct {
            n,
            h,
            depth,
            path_bits,
            path_len,
            marks,
        })
    }

    /// Size in bits of the compact encoding of the cursor position.
    pub fn footprint_bits(&self) -> usize {
        match self {
            TreeCursor::Succinct { .. } => self.encode_succinct().map_or(0, |b| b.len()),
            TreeCursor::Complete { h, .. } => bits_for(*h),
            TreeCursor::Parys { h, .. } => bits_for(*h) + self.depth(),
            TreeCursor::Explicit { path, .. } => path.len() * usize::BITS as usize,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ceil_lg(x: usize) -> usize {
        // ⌈lg x⌉ for x >= 1
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }

    #[test]
    fn root_child_counts() {
        let c = TreeFamily::Complete { n: 3, h: 2 }.cursor().unwrap();
        assert_eq!(c.child_count(), 3);
        let p = TreeFamily::Parys { n: 2, h: 1 }.cursor().unwrap();
        assert_eq!(p.child_count(), 3);
        let s = TreeFamily::Succinct { n: 2, h: 1 }.cursor().unwrap();
        assert_eq!(s.child_count(), 3);
        assert_eq!(s.materialize(), succinct_tree(2, 1));
        assert!(TreeFamily::Complete { n: 0, h: 1 }.cursor().is_err());
    }

    #[test]
    fn invalid_navigation() {
        let c = TreeFamily::Succinct { n: 2, h: 1 }.cursor().unwrap();
        assert!(c.descend(3).is_err());
        assert!(c.ascend().is_err());
        let leaf = c.descend(1).unwrap();
        assert!(leaf.descend(0).is_err());
        assert_eq!(leaf.ascend().unwrap(), c);
    }

    fn families(limit_nodes: u128) -> Vec<TreeFamily> {
        let mut out = Vec::new();
        for n in 0..=12 {
            for h in 0..=6 {
                let fams = [
                    TreeFamily::Complete { n, h },
                    TreeFamily::Parys { n, h },
                    TreeFamily::Succinct { n, h },
                ];
                for f in fams {
                    if let Ok(t) = f.materialize() {
                        if t.node_count() <= limit_nodes {
                            out.push(f);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn cursor_dfs_reconstructs_explicit_trees() {
        for family in families(100_000) {
            let explicit = family.materialize().unwrap();
            let cursor = family.cursor().unwrap();
            assert_eq!(cursor.materialize(), explicit, "{family:?}");
            let wrapped = TreeFamily::explicit(explicit.clone()).cursor().unwrap();
            assert_eq!(wrapped.materialize(), explicit);
        }
    }

    fn walk_all(cursor: &TreeCursor, visit: &mut dyn FnMut(&TreeCursor)) {
        visit(cursor);
        for i in 0..cursor.child_count() {
            let child = cursor.descend(i).unwrap();
            assert_eq!(&child.ascend().unwrap(), cursor);
            walk_all(&child, visit);
        }
    }

    #[test]
    fn succinct_footprint_and_encoding() {
        for (n, h) in [(1, 1), (7, 3), (16, 4), (100, 3), (1000, 2), (63, 5)] {
            let root = TreeFamily::Succinct { n, h }.cursor().unwrap();
            let lg_n = ceil_lg(n + 1);
            let lg_h = ceil_lg(h + 1);
            let lg_lg_n = ceil_lg(lg_n + 1);
            let ceiling = (lg_n + 1) * (lg_h + lg_lg_n) + lg_n;
            walk_all(&root, &mut |c| {
                let bits = c.encode_succinct().unwrap();
                assert!(
                    bits.len() <= ceiling,
                    "n={n} h={h}: {} > {ceiling}",
                    bits.len()
                );
                assert_eq!(&TreeCursor::decode_succinct(n, h, &bits).unwrap(), c);
                if let TreeCursor::Succinct { path_len, .. } = c {
                    assert!(usize::from(*path_len) < lg_n.max(1));
                }
            });
        }
    }

    #[test]
    fn succinct_cursor_navigates_huge_trees() {
        // S_{2^40, 64} has far too many nodes to build; walk its leftmost and
        // rightmost paths instead.
        let n = 1usize << 40;
        let root = TreeFamily::Succinct { n, h: 64 }.cursor().unwrap();
        assert_eq!(root.child_count(), (1 << 41) - 1);
        let mut c = root.clone();
        while c.child_count() > 0 {
            c = c.descend(c.child_count() - 1).unwrap();
        }
        assert_eq!(c.depth(), 64);
        assert!(c.footprint_bits() <= 2 * 41 * 7 + 7);
    }

    #[test]
    fn parys_blocks() {
        let c = TreeFamily::Parys { n: 4, h: 2 }.cursor().unwrap();
        assert_eq!(c.child_count(), 5);
        let blocks: Vec<_> = (0..5).map(|i| c.block(i).unwrap()).collect();
        assert_eq!(
            blocks,
            [
                Block::Left,
                Block::Left,
                Block::Middle,
                Block::Right,
                Block::Right
            ]
        );
        assert_eq!(c.block_end(0), Some(2));
        assert_eq!(c.block_end(2), Some(3));
        assert_eq!(c.block_end(3), Some(5));
        assert_eq!(
            TreeFamily::Complete { n: 2, h: 1 }
                .cursor()
                .unwrap()
                .block(0),
            None
        );
    }
}
