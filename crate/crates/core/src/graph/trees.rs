//! Free-tree enumeration.
//!
//! Rooted trees are generated as canonical level sequences in reverse
//! lexicographic order (Beyer–Hedetniemi successor rule). A rooted tree is
//! emitted only when its root is the centroid; for bicentroidal trees the
//! rooting whose root-side half has the larger level sequence wins, so every
//! free tree appears exactly once.

use super::{Graph, GraphError};

pub const DEFAULT_TREE_LIMIT: usize = 18;

/// Number of free trees on `n` vertices (OEIS A000055), for `n <= 20`.
pub fn free_tree_count(n: usize) -> Option<u64> {
    const COUNTS: [u64; 21] = [
        1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
        317955, 823065,
    ];
    COUNTS.get(n).copied()
}

pub fn enumerate_trees(n: usize) -> Result<TreeIter, GraphError> {
    TreeIter::with_limit(n, DEFAULT_TREE_LIMIT)
}

pub struct TreeIter {
    // levels[i] is the depth of vertex i, root at depth 1
    levels: Vec<usize>,
    done: bool,
}

impl TreeIter {
    pub fn with_limit(n: usize, limit: usize) -> Result<TreeIter, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidParameter("trees need n >= 1".into()));
        }
        if n > limit {
            return Err(GraphError::Capacity {
                requested: n,
                limit,
            });
        }
        Ok(TreeIter {
            levels: (1..=n).collect(),
            done: false,
        })
    }

    fn advance(&mut self) {
        let l = &mut self.levels;
        let n = l.len();
        let Some(p) = (1..n).rev().find(|&i| l[i] > 2) else {
            self.done = true;
            return;
        };
        let q = (0..p)
            .rev()
            .find(|&i| l[i] == l[p] - 1)
            .expect("parent exists");
        for i in p..n {
            l[i] = l[i - (p - q)];
        }
    }

    fn root_is_canonical_centroid(&self) -> bool {
        let l = &self.levels;
        let n = l.len();
        let starts: Vec<usize> = (1..n).filter(|&i| l[i] == 2).collect();
        let mut big = None;
        for (k, &s) in starts.iter().enumerate() {
            let end = starts.get(k + 1).copied().unwrap_or(n);
            let size = end - s;
            if 2 * size > n {
                return false;
            }
            if 2 * size == n {
                big = Some((s, end));
            }
        }
        let Some((s, e)) = big else { return true };
        let child: Vec<usize> = l[s..e].iter().map(|x| x - 1).collect();
        let rest: Vec<usize> = l[..s].iter().chain(&l[e..]).copied().collect();
        rest >= child
    }

    fn to_graph(&self) -> Graph {
        let l = &self.levels;
        let n = l.len();
        let mut g = Graph::empty(n);
        // last vertex seen at each depth
        let mut last = vec![0usize; n + 2];
        for i in 0..n {
            if i > 0 {
                g.add_edge(last[l[i] - 1], i);
            }
            last[l[i]] = i;
        }
        g
    }
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while !self.done {
            let keep = self.root_is_canonical_centroid();
            let g = keep.then(|| self.to_graph());
            self.advance();
            if g.is_some() {
                return g;
            }
        }
        None
    }
}
