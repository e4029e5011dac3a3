//! Cograph values and the operations that classify them.
//!
//! A cograph is a finite symmetric relation (loops permitted) whose quadruple
//! condition holds: whenever (w,x), (y,x), (y,z) are all edges, at least one of
//! (y,w), (w,z), (z,x) is an edge. Equivalently, the maximal irreflexive
//! subgraph has no induced path on four vertices; both recognizers live here
//! and the law suite checks they agree.

use crate::{IsolaError, Result};
use std::fmt;

/// Hard cap on vertex counts. Everything in this crate is desk scale.
pub const MAX_VERTICES: usize = 16;

/// The two sums: `Dsum` is disjoint union with no cross edges, `Csum` adds all
/// cross pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SumKind {
    Dsum,
    Csum,
}

/// A finite symmetric relation with loops on the diagonal, satisfying the
/// cograph quadruple condition. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cograph {
    n: usize,
    rows: Vec<u32>,
}

/// Quadruple condition over all (not necessarily distinct) w, x, y, z.
pub(crate) fn quadruple_condition(n: usize, rows: &[u32]) -> std::result::Result<(), (usize, usize, usize, usize)> {
    let has = |a: usize, b: usize| rows[a] >> b & 1 == 1;
    for w in 0..n {
        for x in 0..n {
            if !has(w, x) {
                continue;
            }
            for y in 0..n {
                if !has(y, x) {
                    continue;
                }
                for z in 0..n {
                    if !has(y, z) {
                        continue;
                    }
                    if !(has(y, w) || has(w, z) || has(z, x)) {
                        return Err((w, x, y, z));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Boolean form of the quadruple condition.
pub(crate) fn quad_ok(n: usize, rows: &[u32]) -> bool {
    quadruple_condition(n, rows).is_ok()
}

/// No induced P4 in the maximal irreflexive subgraph. The second recognition
/// route; must agree with `quadruple_condition` (law CG-EQUIV).
pub(crate) fn p4_free_irr(n: usize, rows: &[u32]) -> bool {
    let ir = |a: usize, b: usize| a != b && rows[a] >> b & 1 == 1;
    if n < 4 {
        return true;
    }
    // Ordered quadruples of distinct vertices forming a path a-b-c-d.
    for a in 0..n {
        for b in 0..n {
            if b == a || !ir(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !ir(b, c) || ir(a, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if ir(c, d) && !ir(a, d) && !ir(b, d) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Literal recognition on a raw boolean matrix. Rejects non-symmetric input.
pub fn is_cograph(matrix: &[Vec<bool>]) -> Result<bool> {
    let n = matrix.len();
    if n > MAX_VERTICES {
        return Err(IsolaError::TooManyVertices(n, MAX_VERTICES));
    }
    let mut rows = vec![0u32; n];
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(IsolaError::NotSymmetric);
        }
        for (j, &e) in row.iter().enumerate() {
            if e {
                rows[i] |= 1 << j;
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if (rows[i] >> j & 1) != (rows[j] >> i & 1) {
                return Err(IsolaError::NotSymmetric);
            }
        }
    }
    Ok(quadruple_condition(n, &rows).is_ok())
}

impl Cograph {
    /// Builds a cograph from 0-based edge and loop lists, validating the
    /// quadruple condition.
    pub fn new(n: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(IsolaError::TooManyVertices(n, MAX_VERTICES));
        }
        let mut rows = vec![0u32; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(IsolaError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(IsolaError::VertexOutOfRange(b, n));
            }
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        for &a in loops {
            if a >= n {
                return Err(IsolaError::VertexOutOfRange(a, n));
            }
            rows[a] |= 1 << a;
        }
        Self::from_rows(n, rows)
    }

    /// Builds from symmetric bit rows, validating the quadruple condition.
    pub fn from_rows(n: usize, rows: Vec<u32>) -> Result<Self> {
        debug_assert_eq!(rows.len(), n);
        for i in 0..n {
            for j in 0..n {
                if (rows[i] >> j & 1) != (rows[j] >> i & 1) {
                    return Err(IsolaError::NotSymmetric);
                }
            }
        }
        match quadruple_condition(n, &rows) {
            Ok(()) => Ok(Cograph { n, rows }),
            Err((w, x, y, z)) => Err(IsolaError::NotCograph(w, x, y, z)),
        }
    }

    /// Internal constructor for results of operations that are closed on
    /// cographs. Checked in debug builds.
    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<u32>) -> Self {
        debug_assert!(quadruple_condition(n, &rows).is_ok());
        Cograph { n, rows }
    }

    /// The empty cograph.
    pub fn empty() -> Self {
        Cograph { n: 0, rows: vec![] }
    }

    /// The trivial cograph on n vertices: no edges, no loops.
    pub fn trivial(n: usize) -> Self {
        Cograph { n, rows: vec![0; n] }
    }

    /// The complete cograph on n vertices, loops included.
    pub fn complete(n: usize) -> Self {
        let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
        Cograph { n, rows: vec![all; n] }
    }

    /// Maximal irreflexive subgraph of the complete cograph: the clique K_n.
    pub fn complete_irr(n: usize) -> Self {
        Cograph::complete(n).irr()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn has_loop(&self, a: usize) -> bool {
        self.has_edge(a, a)
    }

    pub(crate) fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// The adjacency rows as an owned vector, usable as a map key.
    pub(crate) fn rows_key(&self) -> Vec<u32> {
        self.rows.clone()
    }

    /// Off-diagonal edges as ordered pairs with a < b.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.has_loop(a)).collect()
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|a| !self.has_loop(a))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.has_loop(a))
    }

    /// Maximal irreflexive subgraph: drops the diagonal.
    pub fn irr(&self) -> Cograph {
        let rows = (0..self.n).map(|i| self.rows[i] & !(1 << i)).collect();
        Cograph::from_rows_unchecked(self.n, rows)
    }

    /// Reflexive hull: fills the diagonal.
    pub fn refl(&self) -> Cograph {
        let rows = (0..self.n).map(|i| self.rows[i] | (1 << i)).collect();
        Cograph::from_rows_unchecked(self.n, rows)
    }

    /// Complement of the relation, loops included. Always a cograph again.
    pub fn neg(&self) -> Cograph {
        let all = if self.n == 0 { 0 } else { (1u32 << self.n) - 1 };
        let rows = self.rows.iter().map(|r| !r & all).collect();
        Cograph::from_rows_unchecked(self.n, rows)
    }

    /// Disconnected or connected sum. Vertices of `a` come first.
    pub fn sum(kind: SumKind, a: &Cograph, b: &Cograph) -> Cograph {
        Cograph::sum_many(kind, &[a.clone(), b.clone()])
    }

    /// n-ary sum of the given parts, in order.
    pub fn sum_many(kind: SumKind, parts: &[Cograph]) -> Cograph {
        let n: usize = parts.iter().map(|p| p.n).sum();
        assert!(n <= MAX_VERTICES, "sum exceeds vertex limit");
        let mut rows = vec![0u32; n];
        let mut offset = 0;
        let mut spans = vec![];
        for p in parts {
            for i in 0..p.n {
                rows[offset + i] = p.rows[i] << offset;
            }
            spans.push((offset, p.n));
            offset += p.n;
        }
        if kind == SumKind::Csum {
            for (sa, (oa, na)) in spans.iter().enumerate() {
                for (ob, nb) in spans.iter().skip(sa + 1) {
                    for i in *oa..oa + na {
                        for j in *ob..ob + nb {
                            rows[i] |= 1 << j;
                            rows[j] |= 1 << i;
                        }
                    }
                }
            }
        }
        Cograph::from_rows_unchecked(n, rows)
    }

    /// Indexed sum over a reflexive cograph: within part `a` the edges of
    /// `parts[a]`, between parts `a != b` all cross pairs exactly when (a,b) is
    /// an edge of the index.
    pub fn indexed_sum(lambda: &Cograph, parts: &[Cograph]) -> Result<Cograph> {
        if !lambda.is_reflexive() {
            return Err(IsolaError::NotReflexive);
        }
        if parts.len() != lambda.n {
            return Err(IsolaError::Invalid(format!(
                "expected {} parts, got {}",
                lambda.n,
                parts.len()
            )));
        }
        let n: usize = parts.iter().map(|p| p.n).sum();
        if n > MAX_VERTICES {
            return Err(IsolaError::TooManyVertices(n, MAX_VERTICES));
        }
        let mut offsets = vec![0usize; parts.len()];
        let mut off = 0;
        for (a, p) in parts.iter().enumerate() {
            offsets[a] = off;
            off += p.n;
        }
        let mut rows = vec![0u32; n];
        for (a, p) in parts.iter().enumerate() {
            for i in 0..p.n {
                rows[offsets[a] + i] |= p.rows[i] << offsets[a];
            }
            for (b, q) in parts.iter().enumerate().skip(a + 1) {
                if lambda.has_edge(a, b) {
                    for i in 0..p.n {
                        for j in 0..q.n {
                            rows[offsets[a] + i] |= 1 << (offsets[b] + j);
                            rows[offsets[b] + j] |= 1 << (offsets[a] + i);
                        }
                    }
                }
            }
        }
        // Closure under indexed sums follows from the cograph condition on the
        // index and the parts; keep the checked constructor anyway.
        Cograph::from_rows(n, rows)
    }

    /// Induced subgraph on the given vertices, relabeled 0.. in list order.
    pub fn induced(&self, verts: &[usize]) -> Cograph {
        let m = verts.len();
        let mut rows = vec![0u32; m];
        for (i, &v) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate() {
                if self.has_edge(v, w) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Cograph::from_rows_unchecked(m, rows)
    }

    /// Relabels vertices: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Cograph {
        let mut rows = vec![0u32; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                if self.has_edge(a, b) {
                    rows[perm[a]] |= 1 << perm[b];
                }
            }
        }
        Cograph::from_rows_unchecked(self.n, rows)
    }

    /// Connected components (of the relation) or co-connected components (of
    /// the complement), as sorted blocks ordered by least vertex.
    pub fn components(&self, co: bool) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..self.n {
            for b in a + 1..self.n {
                let joined = if co { !self.has_edge(a, b) } else { self.has_edge(a, b) };
                if joined {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = vec![];
        let mut index = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(vec![]);
            }
            blocks[index[r]].push(v);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.components(false).len() == 1
    }

    pub fn is_co_connected(&self) -> bool {
        self.n >= 1 && self.components(true).len() == 1
    }

    /// The largest k such that the paw on k vertices embeds as an induced
    /// subgraph of the irreflexive part. Search over extensions of partial
    /// paws, pruned by the count of remaining vertices.
    pub fn depth(&self) -> usize {
        let ir = |a: usize, b: usize| a != b && self.has_edge(a, b);
        let mut best = 0usize;
        let n = self.n;
        // seq holds a partial paw; position j (1-based) joins all earlier
        // vertices iff j is even.
        fn extend(
            n: usize,
            ir: &dyn Fn(usize, usize) -> bool,
            seq: &mut Vec<usize>,
            used: &mut Vec<bool>,
            best: &mut usize,
        ) {
            if seq.len() > *best {
                *best = seq.len();
            }
            if seq.len() + (n - seq.len()) <= *best {
                return;
            }
            let j = seq.len() + 1;
            let want = j % 2 == 0;
            for v in 0..n {
                if used[v] {
                    continue;
                }
                if seq.iter().all(|&u| ir(u, v) == want) {
                    seq.push(v);
                    used[v] = true;
                    extend(n, ir, seq, used, best);
                    used[v] = false;
                    seq.pop();
                }
            }
        }
        let mut used = vec![false; n];
        for v in 0..n {
            let mut seq = vec![v];
            used[v] = true;
            extend(n, &ir, &mut seq, &mut used, &mut best);
            used[v] = false;
        }
        best
    }

    /// Depth of the complement.
    pub fn codepth(&self) -> usize {
        self.neg().depth()
    }

    /// Largest k with a paw embedding starting at vertex w.
    pub fn vertex_depth(&self, w: usize) -> usize {
        let ir = |a: usize, b: usize| a != b && self.has_edge(a, b);
        let mut best = 0usize;
        let n = self.n;
        fn extend(
            n: usize,
            ir: &dyn Fn(usize, usize) -> bool,
            seq: &mut Vec<usize>,
            used: &mut Vec<bool>,
            best: &mut usize,
        ) {
            if seq.len() > *best {
                *best = seq.len();
            }
            if seq.len() + (n - seq.len()) <= *best {
                return;
            }
            let j = seq.len() + 1;
            let want = j % 2 == 0;
            for v in 0..n {
                if used[v] {
                    continue;
                }
                if seq.iter().all(|&u| ir(u, v) == want) {
                    seq.push(v);
                    used[v] = true;
                    extend(n, ir, seq, used, best);
                    used[v] = false;
                    seq.pop();
                }
            }
        }
        let mut used = vec![false; n];
        let mut seq = vec![w];
        used[w] = true;
        extend(n, &ir, &mut seq, &mut used, &mut best);
        best
    }

    /// Full classification: flavor flags plus depth and codepth.
    pub fn classify(&self) -> CographClass {
        let depth = self.depth();
        let codepth = self.codepth();
        CographClass {
            irreflexive: self.is_irreflexive(),
            reflexive: self.is_reflexive(),
            apartness: self.is_irreflexive() && depth <= 2,
            equivalence: self.is_reflexive() && codepth <= 2,
            connected: self.is_connected(),
            co_connected: self.is_co_connected(),
            depth,
            codepth,
        }
    }
}

impl fmt::Debug for Cograph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cograph(n={}, edges={:?}, loops={:?})", self.n, self.edges(), self.loops())
    }
}

/// Flags and depth data for one cograph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CographClass {
    pub irreflexive: bool,
    pub reflexive: bool,
    pub apartness: bool,
    pub equivalence: bool,
    pub connected: bool,
    pub co_connected: bool,
    pub depth: usize,
    pub codepth: usize,
}

impl CographClass {
    /// Membership in the depth filtration layer k.
    pub fn in_depth_le(&self, k: usize) -> bool {
        self.depth <= k
    }

    /// Membership in the codepth filtration layer k.
    pub fn in_codepth_le(&self, k: usize) -> bool {
        self.codepth <= k
    }

    /// Irreflexive cographs of depth at most k.
    pub fn in_irr_depth_le(&self, k: usize) -> bool {
        self.irreflexive && self.depth <= k
    }

    /// Reflexive cographs of codepth at most k.
    pub fn in_refl_codepth_le(&self, k: usize) -> bool {
        self.reflexive && self.codepth <= k
    }
}

/// The paw on k vertices: for 1-based i < j there is an edge exactly when j is
/// even. No loops.
pub fn paw(k: usize) -> Cograph {
    assert!(k >= 1);
    let mut edges = vec![];
    for j in 2..=k {
        if j % 2 == 0 {
            for i in 1..j {
                edges.push((i - 1, j - 1));
            }
        }
    }
    Cograph::new(k, &edges, &[]).expect("paws are cographs")
}

/// The co-paw: maximal irreflexive subgraph of the negated paw. For 1-based
/// i < j there is an edge exactly when j is odd.
pub fn copaw(k: usize) -> Cograph {
    paw(k).neg().irr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; 4]; 4];
        for (a, b) in [(0, 1), (1, 2), (2, 3)] {
            m[a][b] = true;
            m[b][a] = true;
        }
        m
    }

    #[test]
    fn p4_is_not_a_cograph() {
        assert_eq!(is_cograph(&p4()).unwrap(), false);
        assert!(Cograph::new(4, &[(0, 1), (1, 2), (2, 3)], &[]).is_err());
    }

    #[test]
    fn k23_is_a_cograph() {
        // complete bipartite on 2 + 3 vertices
        let k23 = Cograph::sum(SumKind::Csum, &Cograph::trivial(2), &Cograph::trivial(3));
        assert_eq!(k23.edges().len(), 6);
        assert!(is_cograph(&(0..5).map(|i| (0..5).map(|j| k23.has_edge(i, j)).collect()).collect::<Vec<_>>()).unwrap());
    }

    #[test]
    fn empty_is_a_cograph() {
        assert_eq!(is_cograph(&[]).unwrap(), true);
        assert_eq!(Cograph::empty().depth(), 0);
        assert_eq!(Cograph::empty().codepth(), 0);
    }

    #[test]
    fn non_symmetric_rejected() {
        let mut m = vec![vec![false; 2]; 2];
        m[0][1] = true;
        assert_eq!(is_cograph(&m), Err(IsolaError::NotSymmetric));
    }

    #[test]
    fn negation_swaps_sums() {
        // neg(2 csum 3 trivials) = 2 csum... the complete duals
        let a = Cograph::sum(SumKind::Csum, &Cograph::trivial(2), &Cograph::trivial(3));
        let b = Cograph::sum(SumKind::Dsum, &Cograph::complete(2), &Cograph::complete(3));
        assert_eq!(a.neg(), b);
        assert_eq!(Cograph::trivial(4).neg(), Cograph::complete(4));
    }

    #[test]
    fn negation_is_an_involution() {
        for n in 0..4 {
            for c in crate::cotree::labeled_cographs(n, crate::cotree::Flavor::Any) {
                assert_eq!(c.neg().neg(), c);
            }
        }
    }

    #[test]
    fn dsum_with_empty_is_identity() {
        let c = Cograph::new(3, &[(0, 1)], &[2]).unwrap();
        assert_eq!(Cograph::sum(SumKind::Dsum, &c, &Cograph::empty()), c);
    }

    #[test]
    fn components_of_an_equivalence() {
        // 2 + 2 + 1 complete reflexive blocks, disconnected sum
        let c = Cograph::sum_many(
            SumKind::Dsum,
            &[Cograph::complete(2), Cograph::complete(2), Cograph::complete(1)],
        );
        assert_eq!(c.components(false), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert!(c.classify().equivalence);
        assert!(c.neg().classify().apartness);
    }

    #[test]
    fn paw_shapes() {
        assert_eq!(paw(2), Cograph::new(2, &[(0, 1)], &[]).unwrap());
        // paw(4): triangle on {1,2,4} plus edge (3,4) in 1-based labels
        let p4 = paw(4);
        assert_eq!(p4.edges(), vec![(0, 1), (0, 3), (1, 3), (2, 3)]);
        for k in 1..=6 {
            assert_eq!(copaw(k), paw(k).neg().irr());
        }
        // paws of even order are connected, odd are co-connected
        for n in 1..=3 {
            assert!(paw(2 * n).is_connected());
            assert!(paw(2 * n - 1).is_co_connected());
        }
    }

    #[test]
    fn depth_of_paws() {
        for k in 1..=6 {
            assert_eq!(paw(k).depth(), k);
            assert_eq!(copaw(k).depth(), k.saturating_sub(1).max(if k == 1 { 1 } else { 0 }));
        }
        assert_eq!(copaw(1).depth(), 1);
        for n in 1..=5 {
            assert_eq!(Cograph::trivial(n).depth(), 1);
        }
    }

    #[test]
    fn vertex_depth_realizes_graph_depth() {
        let c = paw(5);
        let max = (0..5).map(|v| c.vertex_depth(v)).max().unwrap();
        assert_eq!(max, c.depth());
        assert_eq!(c.vertex_depth(0), 5);
    }

    #[test]
    fn indexed_sum_flat_examples() {
        // index = two reflexive singletons, disconnected: plain dsum
        let lam = Cograph::sum(SumKind::Dsum, &Cograph::complete(1), &Cograph::complete(1));
        let m1 = Cograph::new(2, &[(0, 1)], &[]).unwrap();
        let m2 = Cograph::trivial(1);
        let s = Cograph::indexed_sum(&lam, &[m1.clone(), m2.clone()]).unwrap();
        assert_eq!(s, Cograph::sum(SumKind::Dsum, &m1, &m2));
        // singleton index
        let one = Cograph::complete(1);
        assert_eq!(Cograph::indexed_sum(&one, &[m1.clone()]).unwrap(), m1);
        // complete reflexive 2: csum
        let k2 = Cograph::complete(2);
        let s2 = Cograph::indexed_sum(&k2, &[Cograph::trivial(1), Cograph::trivial(1)]).unwrap();
        assert_eq!(s2, Cograph::new(2, &[(0, 1)], &[]).unwrap());
        // non-reflexive index rejected
        assert!(Cograph::indexed_sum(&Cograph::trivial(2), &[m2.clone(), m2.clone()]).is_err());
    }

    #[test]
    fn classify_singleton() {
        for c in [Cograph::trivial(1), Cograph::complete(1)] {
            let k = c.classify();
            assert!(k.connected && k.co_connected);
            assert_eq!((k.depth, k.codepth), (1, 1));
        }
    }
}
