//! Directed cographs: antisymmetric transitive relations satisfying the
//! oriented quadruple condition. Reflexive ones are series-parallel posets.
//! The symmetrization functor forgets directions; its fibers are the
//! 1-structures on a cograph, generated here blockwise from the cotree and
//! cross-checked against a brute-force orientation search.

use crate::cograph::{Cograph, SumKind};
use crate::cotree::{canonical_decomposition, permutations, CographExpr};
use crate::{IsolaError, Result};

/// A directed relation on 0..n with loops on the diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OneCograph {
    n: usize,
    rows: Vec<u32>,
}

impl std::fmt::Debug for OneCograph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OneCograph(n={}, dedges={:?}, loops={:?})", self.n, self.dedges(), self.loops())
    }
}

/// Checks the three conditions on raw bit rows: antisymmetry off the diagonal,
/// transitivity, and the oriented quadruple condition.
pub(crate) fn onecograph_violation(n: usize, rows: &[u32]) -> Option<String> {
    let has = |a: usize, b: usize| rows[a] >> b & 1 == 1;
    for a in 0..n {
        for b in 0..n {
            if a != b && has(a, b) && has(b, a) {
                return Some(format!("antisymmetry fails at ({a}, {b})"));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !has(a, b) || a == b {
                continue;
            }
            for c in 0..n {
                if b != c && has(b, c) && !has(a, c) {
                    return Some(format!("transitivity fails at ({a}, {b}, {c})"));
                }
            }
        }
    }
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
                        return Some(format!("oriented quadruple condition fails at ({w}, {x}, {y}, {z})"));
                    }
                }
            }
        }
    }
    None
}

/// Literal recognition on a raw boolean matrix.
pub fn is_onecograph(matrix: &[Vec<bool>]) -> bool {
    let n = matrix.len();
    if matrix.iter().any(|r| r.len() != n) {
        return false;
    }
    let mut rows = vec![0u32; n];
    for (i, row) in matrix.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e {
                rows[i] |= 1 << j;
            }
        }
    }
    onecograph_violation(n, &rows).is_none()
}

impl OneCograph {
    pub fn new(n: usize, dedges: &[(usize, usize)], loops: &[usize]) -> Result<Self> {
        let mut rows = vec![0u32; n];
        for &(a, b) in dedges {
            if a >= n {
                return Err(IsolaError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(IsolaError::VertexOutOfRange(b, n));
            }
            rows[a] |= 1 << b;
        }
        for &a in loops {
            if a >= n {
                return Err(IsolaError::VertexOutOfRange(a, n));
            }
            rows[a] |= 1 << a;
        }
        Self::from_rows(n, rows)
    }

    pub fn from_rows(n: usize, rows: Vec<u32>) -> Result<Self> {
        match onecograph_violation(n, &rows) {
            None => Ok(OneCograph { n, rows }),
            Some(msg) => Err(IsolaError::NotOneCograph(msg)),
        }
    }

    fn from_rows_unchecked(n: usize, rows: Vec<u32>) -> Self {
        debug_assert!(onecograph_violation(n, &rows).is_none());
        OneCograph { n, rows }
    }

    /// The trivial directed cograph: no relations at all.
    pub fn trivial(n: usize) -> Self {
        OneCograph { n, rows: vec![0; n] }
    }

    /// The totally ordered reflexive chain.
    pub fn chain(n: usize) -> Self {
        let rows = (0..n).map(|i| ((1u32 << n) - 1) & !((1 << i) - 1)).collect();
        OneCograph::from_rows_unchecked(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn dedges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.has(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.has(a, a)).collect()
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|a| !self.has(a, a))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.has(a, a))
    }

    /// Transpose.
    pub fn opposite(&self) -> OneCograph {
        let mut rows = vec![0u32; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                if self.has(a, b) {
                    rows[b] |= 1 << a;
                }
            }
        }
        OneCograph::from_rows_unchecked(self.n, rows)
    }

    /// Disconnected sum: no relations across.
    pub fn dsum(a: &OneCograph, b: &OneCograph) -> OneCograph {
        let n = a.n + b.n;
        let mut rows = vec![0u32; n];
        for i in 0..a.n {
            rows[i] = a.rows[i];
        }
        for i in 0..b.n {
            rows[a.n + i] = b.rows[i] << a.n;
        }
        OneCograph::from_rows_unchecked(n, rows)
    }

    /// Ordered connected sum: everything in `a` precedes everything in `b`.
    pub fn osum(a: &OneCograph, b: &OneCograph) -> OneCograph {
        let n = a.n + b.n;
        let mut rows = vec![0u32; n];
        let bmask = if b.n == 0 { 0 } else { ((1u32 << b.n) - 1) << a.n };
        for i in 0..a.n {
            rows[i] = a.rows[i] | bmask;
        }
        for i in 0..b.n {
            rows[a.n + i] = b.rows[i] << a.n;
        }
        OneCograph::from_rows_unchecked(n, rows)
    }

    pub fn relabel(&self, perm: &[usize]) -> OneCograph {
        let mut rows = vec![0u32; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                if self.has(a, b) {
                    rows[perm[a]] |= 1 << perm[b];
                }
            }
        }
        OneCograph::from_rows_unchecked(self.n, rows)
    }

    /// Forgets directions: the underlying cograph.
    pub fn symmetrize(&self) -> Cograph {
        let mut rows = vec![0u32; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                if self.has(a, b) || self.has(b, a) {
                    rows[a] |= 1 << b;
                }
            }
        }
        Cograph::from_rows(self.n, rows).expect("symmetrizations of directed cographs are cographs")
    }
}

/// The directed paw: alternating ordered connected and disconnected sums.
pub fn paw_directed(k: usize) -> OneCograph {
    assert!(k >= 1);
    let one = OneCograph::trivial(1);
    let mut acc = one.clone();
    for j in 2..=k {
        if j % 2 == 0 {
            acc = OneCograph::osum(&acc, &one);
        } else {
            acc = OneCograph::dsum(&acc, &one);
        }
    }
    acc
}

/// All 1-structures on a cograph, generated blockwise: each connected-sum node
/// of the cotree contributes a linear order on its children.
pub fn one_structures(lam: &Cograph) -> Vec<OneCograph> {
    let (expr, labels) = canonical_decomposition(lam);
    // relations returned on leaf positions, then mapped back through labels
    fn go(e: &CographExpr, lam: &Cograph, labels: &[usize], offset: usize) -> Vec<(usize, Vec<u32>)> {
        match e {
            CographExpr::Empty => vec![(0, vec![])],
            CographExpr::Leaf { looped } => {
                vec![(1, vec![if *looped { 1 } else { 0 }])]
            }
            CographExpr::Node { kind, children } => {
                let mut child_sets = vec![];
                let mut off = offset;
                for c in children {
                    child_sets.push(go(c, lam, labels, off));
                    off += c.leaf_count();
                }
                let sizes: Vec<usize> = children.iter().map(|c| c.leaf_count()).collect();
                let mut out = vec![];
                match kind {
                    SumKind::Dsum => {
                        // cartesian product, no cross relations
                        let mut acc: Vec<Vec<Vec<u32>>> = vec![vec![]];
                        for set in &child_sets {
                            let mut next = vec![];
                            for partial in &acc {
                                for (_, rows) in set {
                                    let mut p = partial.clone();
                                    p.push(rows.clone());
                                    next.push(p);
                                }
                            }
                            acc = next;
                        }
                        for chosen in acc {
                            let n: usize = sizes.iter().sum();
                            let mut rows = vec![0u32; n];
                            let mut off = 0;
                            for (ci, r) in chosen.iter().enumerate() {
                                for i in 0..sizes[ci] {
                                    rows[off + i] = r[i] << off;
                                }
                                off += sizes[ci];
                            }
                            out.push((n, rows));
                        }
                    }
                    SumKind::Csum => {
                        // a linear order on the children plus a choice per child
                        let k = children.len();
                        for perm in permutations(k) {
                            // perm[ci] = position of child ci in the series order
                            let mut acc: Vec<Vec<Vec<u32>>> = vec![vec![]];
                            for set in &child_sets {
                                let mut next = vec![];
                                for partial in &acc {
                                    for (_, rows) in set {
                                        let mut p = partial.clone();
                                        p.push(rows.clone());
                                        next.push(p);
                                    }
                                }
                                acc = next;
                            }
                            let n: usize = sizes.iter().sum();
                            let offsets: Vec<usize> = {
                                let mut o = vec![0usize; k];
                                let mut off = 0;
                                for ci in 0..k {
                                    o[ci] = off;
                                    off += sizes[ci];
                                }
                                o
                            };
                            for chosen in acc {
                                let mut rows = vec![0u32; n];
                                for (ci, r) in chosen.iter().enumerate() {
                                    for i in 0..sizes[ci] {
                                        rows[offsets[ci] + i] = r[i] << offsets[ci];
                                    }
                                }
                                for ci in 0..k {
                                    for cj in 0..k {
                                        if ci != cj && perm[ci] < perm[cj] {
                                            for i in 0..sizes[ci] {
                                                for j in 0..sizes[cj] {
                                                    rows[offsets[ci] + i] |= 1 << (offsets[cj] + j);
                                                }
                                            }
                                        }
                                    }
                                }
                                out.push((n, rows));
                            }
                        }
                    }
                }
                out
            }
        }
    }
    let raw = go(&expr, lam, &labels, 0);
    let mut out: Vec<OneCograph> = raw
        .into_iter()
        .map(|(n, rows)| {
            debug_assert_eq!(n, lam.n());
            // leaf position i corresponds to original vertex labels[i]
            let g = OneCograph::from_rows_unchecked(n, rows);
            g.relabel(&labels)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Brute-force orientation search; the oracle for `one_structures`.
pub fn one_structures_brute(lam: &Cograph) -> Vec<OneCograph> {
    let n = lam.n();
    let irr_edges: Vec<(usize, usize)> = lam.edges();
    let mut out = vec![];
    for mask in 0..1u64 << irr_edges.len() {
        let mut rows = vec![0u32; n];
        for v in 0..n {
            if lam.has_loop(v) {
                rows[v] |= 1 << v;
            }
        }
        for (k, &(a, b)) in irr_edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[a] |= 1 << b;
            } else {
                rows[b] |= 1 << a;
            }
        }
        if onecograph_violation(n, &rows).is_none() {
            out.push(OneCograph { n, rows });
        }
    }
    out.sort();
    out
}

/// The count predicted by the cotree: a factorial per connected-sum node.
pub fn one_structure_count_formula(lam: &Cograph) -> u64 {
    fn go(e: &CographExpr) -> u64 {
        match e {
            CographExpr::Empty | CographExpr::Leaf { .. } => 1,
            CographExpr::Node { kind, children } => {
                let sub: u64 = children.iter().map(go).product();
                match kind {
                    SumKind::Dsum => sub,
                    SumKind::Csum => sub * factorial(children.len() as u64),
                }
            }
        }
    }
    go(&crate::cotree::canonical_form(lam))
}

fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_orders_are_onecographs() {
        let c = OneCograph::chain(3);
        assert!(c.is_reflexive());
        assert!(is_onecograph(
            &(0..3).map(|i| (0..3).map(|j| c.has(i, j)).collect()).collect::<Vec<_>>()
        ));
    }

    #[test]
    fn the_n_poset_is_rejected() {
        // a<c, b<c, b<d: transitive and antisymmetric but fails the oriented
        // quadruple condition
        let mut m = vec![vec![false; 4]; 4];
        m[0][2] = true;
        m[1][2] = true;
        m[1][3] = true;
        assert!(!is_onecograph(&m));
        assert!(OneCograph::new(4, &[(0, 2), (1, 2), (1, 3)], &[]).is_err());
    }

    #[test]
    fn directed_paws_are_valid() {
        for k in 1..=6 {
            let p = paw_directed(k);
            assert_eq!(p.symmetrize(), crate::cograph::paw(k));
        }
    }

    #[test]
    fn opposite_is_an_involution_and_fixes_symmetrization() {
        for lam in crate::cotree::enumerate_cographs(4, crate::cotree::Flavor::Any) {
            for g in one_structures(&lam) {
                assert_eq!(g.opposite().opposite(), g);
                assert_eq!(g.opposite().symmetrize(), g.symmetrize());
            }
        }
    }

    #[test]
    fn opposite_reverses_osum() {
        let a = OneCograph::trivial(1);
        let e = OneCograph::osum(&a, &a);
        assert_eq!(e.dedges(), vec![(0, 1)]);
        assert_eq!(e.opposite().dedges(), vec![(1, 0)]);
        // (a osum b)^op = b^op osum a^op once the blocks are swapped back
        let b = OneCograph::chain(2);
        let lhs = OneCograph::osum(&a, &b).opposite();
        let swapped = OneCograph::osum(&b.opposite(), &a.opposite());
        let perm: Vec<usize> = (0..b.n()).map(|i| a.n() + i).chain((0..a.n()).map(|i| i)).collect();
        assert_eq!(lhs, swapped.relabel(&perm));
    }

    #[test]
    fn osum_associates() {
        let xs = [OneCograph::trivial(1), OneCograph::chain(2), OneCograph::trivial(2)];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    if a.n() + b.n() + c.n() > 4 {
                        continue;
                    }
                    assert_eq!(
                        OneCograph::osum(&OneCograph::osum(a, b), c),
                        OneCograph::osum(a, &OneCograph::osum(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn symmetrize_respects_sums() {
        let a = OneCograph::chain(2);
        let b = OneCograph::trivial(2);
        assert_eq!(
            OneCograph::osum(&a, &b).symmetrize(),
            Cograph::sum(SumKind::Csum, &a.symmetrize(), &b.symmetrize())
        );
        assert_eq!(
            OneCograph::dsum(&a, &b).symmetrize(),
            Cograph::sum(SumKind::Dsum, &a.symmetrize(), &b.symmetrize())
        );
        // total orders symmetrize to cliques
        let c = OneCograph::osum(&OneCograph::osum(&OneCograph::trivial(1), &OneCograph::trivial(1)), &OneCograph::trivial(1));
        assert_eq!(c.symmetrize(), Cograph::complete_irr(3));
    }

    #[test]
    fn one_structure_counts() {
        let edge = Cograph::new(2, &[(0, 1)], &[]).unwrap();
        assert_eq!(one_structures(&edge).len(), 2);
        assert_eq!(one_structures(&Cograph::trivial(3)).len(), 1);
        for n in 0..=4 {
            let kn = Cograph::complete_irr(n);
            assert_eq!(one_structures(&kn).len() as u64, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn blockwise_matches_brute_force() {
        for n in 0..=4 {
            for lam in crate::cotree::enumerate_cographs(n, crate::cotree::Flavor::Any) {
                assert_eq!(one_structures(&lam), one_structures_brute(&lam), "lam={lam:?}");
            }
        }
    }

    #[test]
    fn lost_transitivity_witness() {
        // the chain on three vertices restricted to a path loses transitivity
        let chain = OneCograph::new(3, &[(0, 1), (1, 2), (0, 2)], &[]).unwrap();
        assert_eq!(chain.symmetrize(), Cograph::complete_irr(3));
        // drop the pair (0,2): the induced orientation of the path
        let mut m = vec![vec![false; 3]; 3];
        m[0][1] = true;
        m[1][2] = true;
        assert!(!is_onecograph(&m));
    }
}
