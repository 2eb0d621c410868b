use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;

use super::Graph;

/// Canonical labeling certificate.
///
/// `bytes` is the graph6 encoding of the graph relabeled by `labeling`, so two
/// graphs have equal bytes exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
    pub aut_count: BigUint,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ascii")
    }
}

/// Forests use a center-rooted encoding per component; everything else goes
/// through individualization-refinement with an exhaustive leaf scan.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (labeling, aut_count) = if g.is_forest() {
        forest_canon(g)
    } else {
        ir_canon(g)
    };
    let bytes = g.permuted(&labeling).to_graph6().into_bytes();
    CanonicalForm {
        bytes,
        aut_count,
        labeling,
    }
}

impl Graph {
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n() == other.n()
            && self.edge_count() == other.edge_count()
            && canonical_form(self).bytes == canonical_form(other).bytes
    }
}

// ---- trees ---------------------------------------------------------------

fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

struct Rooted {
    code: Vec<u8>,
    aut: BigUint,
    // children in canonical order
    children: Vec<usize>,
}

/// Encodes the subtree at `v` hanging away from `parent`.
fn encode(g: &Graph, v: usize, parent: Option<usize>, out: &mut Vec<Option<Rooted>>) {
    let mut kids: Vec<usize> = g.neighbors(v).filter(|&w| Some(w) != parent).collect();
    for &w in &kids {
        encode(g, w, Some(v), out);
    }
    kids.sort_by(|&a, &b| {
        let ca = &out[a].as_ref().unwrap().code;
        let cb = &out[b].as_ref().unwrap().code;
        ca.cmp(cb)
    });
    let mut code = Vec::with_capacity(2);
    code.push(b'(');
    let mut aut = BigUint::one();
    let mut run = 0u32;
    for (i, &w) in kids.iter().enumerate() {
        let child = out[w].as_ref().unwrap();
        code.extend_from_slice(&child.code);
        aut *= &child.aut;
        if i > 0 && out[kids[i - 1]].as_ref().unwrap().code == child.code {
            run += 1;
            aut *= BigUint::from(run + 1);
        } else {
            run = 0;
        }
    }
    code.push(b')');
    out[v] = Some(Rooted {
        code,
        aut,
        children: kids,
    });
}

/// Returns the labeling, automorphism count and rooted code of a tree.
fn tree_canon(g: &Graph) -> (Vec<usize>, BigUint, Vec<u8>) {
    let n = g.n();
    let cs = centers(g);
    let mut table: Vec<Option<Rooted>> = (0..n).map(|_| None).collect();
    let (root, aut) = if cs.len() == 1 {
        encode(g, cs[0], None, &mut table);
        let aut = table[cs[0]].as_ref().unwrap().aut.clone();
        (cs[0], aut)
    } else {
        let (a, b) = (cs[0], cs[1]);
        encode(g, a, Some(b), &mut table);
        encode(g, b, Some(a), &mut table);
        let ra = table[a].as_ref().unwrap();
        let rb = table[b].as_ref().unwrap();
        let mut aut = &ra.aut * &rb.aut;
        let root = match ra.code.cmp(&rb.code) {
            Ordering::Less => a,
            Ordering::Greater => b,
            Ordering::Equal => {
                aut *= 2u32;
                a
            }
        };
        for t in table.iter_mut() {
            *t = None;
        }
        encode(g, root, None, &mut table);
        (root, aut)
    };
    // preorder over canonically sorted children
    let mut labeling = vec![usize::MAX; n];
    let mut stack = vec![root];
    let mut next = 0;
    while let Some(v) = stack.pop() {
        labeling[v] = next;
        next += 1;
        let node = table[v].as_ref().unwrap();
        stack.extend(node.children.iter().rev());
    }
    let code = table[root].take().unwrap().code;
    (labeling, aut, code)
}

/// Component vertices, their canonical labeling, automorphism count, code.
type Part = (Vec<usize>, Vec<usize>, BigUint, Vec<u8>);

fn forest_canon(g: &Graph) -> (Vec<usize>, BigUint) {
    let mut parts: Vec<Part> = g
        .components()
        .into_iter()
        .map(|comp| {
            let (lab, aut, code) = tree_canon(&g.induced(&comp));
            (comp, lab, aut, code)
        })
        .collect();
    parts.sort_by(|a, b| (a.0.len(), &a.3).cmp(&(b.0.len(), &b.3)));
    let mut labeling = vec![0; g.n()];
    let mut aut = BigUint::one();
    let mut offset = 0;
    let mut run = 0u32;
    for (i, (comp, lab, a, code)) in parts.iter().enumerate() {
        for (j, &v) in comp.iter().enumerate() {
            labeling[v] = offset + lab[j];
        }
        offset += comp.len();
        aut *= a;
        if i > 0 && parts[i - 1].3 == *code {
            run += 1;
            aut *= BigUint::from(run + 1);
        } else {
            run = 0;
        }
    }
    (labeling, aut)
}

// ---- general graphs ------------------------------------------------------

struct Search<'a> {
    g: &'a Graph,
    best: Option<Vec<u64>>,
    best_labeling: Vec<usize>,
    best_count: u64,
}

fn cell_count(cell: &[u32]) -> u32 {
    cell.iter().copied().max().map_or(0, |m| m + 1)
}

/// Colour refinement to the coarsest equitable partition finer than `cell`.
/// Cells are renumbered by (old cell, neighbour counts per cell), which keeps
/// the procedure label-invariant.
fn refine(g: &Graph, cell: &mut [u32]) {
    let n = g.n();
    let mut k = cell_count(cell);
    loop {
        let ku = k as usize;
        let mut counts = vec![0u32; n * ku];
        for v in 0..n {
            for w in g.neighbors(v) {
                counts[v * ku + cell[w] as usize] += 1;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        let key = |v: usize| (cell[v], &counts[v * ku..(v + 1) * ku]);
        order.sort_by(|&a, &b| key(a).cmp(&key(b)));
        let mut fresh = vec![0u32; n];
        let mut idx = 0u32;
        for i in 0..n {
            if i > 0 && key(order[i]) != key(order[i - 1]) {
                idx += 1;
            }
            fresh[order[i]] = idx;
        }
        let new_k = if n == 0 { 0 } else { idx + 1 };
        cell.copy_from_slice(&fresh);
        if new_k == k {
            break;
        }
        k = new_k;
    }
}

fn individualize(cell: &[u32], v: usize) -> Vec<u32> {
    let c = cell[v];
    cell.iter()
        .enumerate()
        .map(|(u, &x)| if x < c || u == v { x } else { x + 1 })
        .collect()
}

impl Search<'_> {
    fn certificate(&self, cell: &[u32]) -> Vec<u64> {
        let n = self.g.n();
        let mut inv = vec![0usize; n];
        for (v, &c) in cell.iter().enumerate() {
            inv[c as usize] = v;
        }
        let total = n * n.saturating_sub(1) / 2;
        let mut cert = vec![0u64; total.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.g.has_edge(inv[i], inv[j]) {
                    cert[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        cert
    }

    fn run(&mut self, mut cell: Vec<u32>) {
        refine(self.g, &mut cell);
        let n = self.g.n();
        let k = cell_count(&cell) as usize;
        if k == n {
            let cert = self.certificate(&cell);
            match self.best.as_ref().map(|b| cert.cmp(b)) {
                None | Some(Ordering::Less) => {
                    self.best = Some(cert);
                    self.best_labeling = cell.iter().map(|&c| c as usize).collect();
                    self.best_count = 1;
                }
                Some(Ordering::Equal) => self.best_count += 1,
                Some(Ordering::Greater) => {}
            }
            return;
        }
        let mut sizes = vec![0usize; k];
        for &c in &cell {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let members: Vec<usize> = (0..n).filter(|&v| cell[v] == target).collect();
        for v in members {
            self.run(individualize(&cell, v));
        }
    }
}

fn ir_canon(g: &Graph) -> (Vec<usize>, BigUint) {
    let mut s = Search {
        g,
        best: None,
        best_labeling: Vec::new(),
        best_count: 0,
    };
    s.run(vec![0; g.n()]);
    (s.best_labeling, BigUint::from(s.best_count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_aut(g: &Graph) -> u64 {
        fn rec(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut u64) {
            let k = perm.len();
            if k == g.n() {
                *count += 1;
                return;
            }
            for img in 0..g.n() {
                if used[img] || g.degree(img) != g.degree(k) {
                    continue;
                }
                if (0..k).all(|u| g.has_edge(u, k) == g.has_edge(perm[u], img)) {
                    used[img] = true;
                    perm.push(img);
                    rec(g, perm, used, count);
                    perm.pop();
                    used[img] = false;
                }
            }
        }
        let mut count = 0;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut count);
        count
    }

    #[test]
    fn p3_relabeling_invariant() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_form(&a).bytes, canonical_form(&b).bytes);
        assert_eq!(canonical_form(&a).aut_count, BigUint::from(2u32));
    }

    #[test]
    fn triangle_has_six_automorphisms() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&k3).aut_count, BigUint::from(6u32));
    }

    #[test]
    fn tree_aut_counts_match_brute_force() {
        let bicentral = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(brute_aut(&bicentral), 8);
        assert_eq!(canonical_form(&bicentral).aut_count, BigUint::from(8u32));
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(canonical_form(&k2).aut_count, BigUint::from(2u32));
        let k1 = Graph::empty(1);
        assert_eq!(canonical_form(&k1).aut_count, BigUint::from(1u32));
    }

    #[test]
    fn ir_aut_counts_match_brute_force() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let petersen_like =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
                .unwrap();
        let empty = Graph::empty(5);
        for g in [c5, petersen_like, empty] {
            assert_eq!(canonical_form(&g).aut_count, BigUint::from(brute_aut(&g)));
        }
    }

    #[test]
    fn forest_aut_counts_match_brute_force() {
        let forests = [
            Graph::empty(5),
            Graph::from_edges(7, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6), (4, 6)]).unwrap(),
        ];
        for g in forests {
            assert_eq!(canonical_form(&g).aut_count, BigUint::from(brute_aut(&g)));
        }
        let a = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(5, &[(4, 3), (3, 0)]).unwrap();
        let c = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(canonical_form(&a).bytes, canonical_form(&b).bytes);
        assert_ne!(canonical_form(&a).bytes, canonical_form(&c).bytes);
        assert!(canonical_form(&Graph::empty(0)).bytes == b"?");
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6).bytes, canonical_form(&two_k3).bytes);
        assert!(!c6.is_isomorphic(&two_k3));
    }
}
