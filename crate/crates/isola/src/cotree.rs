//! Canonical sum representations (cotrees), the encoding that serves as a
//! complete isomorphism invariant, and enumeration of cographs up to
//! isomorphism by two independent generators.

use crate::cograph::{quadruple_condition, Cograph, SumKind};
use crate::{IsolaError, Result};

/// Which diagonal pattern to admit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Irr,
    Refl,
    Any,
}

impl Flavor {
    fn admits(self, c: &Cograph) -> bool {
        match self {
            Flavor::Irr => c.is_irreflexive(),
            Flavor::Refl => c.is_reflexive(),
            Flavor::Any => true,
        }
    }
}

/// A cotree: leaves carry a loop flag, internal nodes alternate between the
/// two sums and keep their children sorted by encoding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CographExpr {
    Empty,
    Leaf { looped: bool },
    Node { kind: SumKind, children: Vec<CographExpr> },
}

impl CographExpr {
    pub fn leaf_count(&self) -> usize {
        match self {
            CographExpr::Empty => 0,
            CographExpr::Leaf { .. } => 1,
            CographExpr::Node { children, .. } => children.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    /// Byte encoding: total order on expressions, lexicographic in
    /// (tag, child count, child encodings). Children are stored sorted by this
    /// encoding, so equality of encodings is equality of canonical forms.
    pub fn encode(&self) -> Vec<u8> {
        let mut out = vec![];
        self.encode_into(&mut out);
        out
    }

    fn encode_into(&self, out: &mut Vec<u8>) {
        match self {
            CographExpr::Empty => out.push(0),
            CographExpr::Leaf { looped: false } => out.push(1),
            CographExpr::Leaf { looped: true } => out.push(2),
            CographExpr::Node { kind, children } => {
                out.push(match kind {
                    SumKind::Dsum => 3,
                    SumKind::Csum => 4,
                });
                out.push(children.len() as u8);
                for c in children {
                    c.encode_into(out);
                }
            }
        }
    }

    /// Structural well-formedness: alternation, arity, sortedness.
    pub fn is_canonical(&self) -> bool {
        fn go(e: &CographExpr, parent: Option<SumKind>) -> bool {
            match e {
                CographExpr::Empty => parent.is_none(),
                CographExpr::Leaf { .. } => true,
                CographExpr::Node { kind, children } => {
                    if Some(*kind) == parent || children.len() < 2 {
                        return false;
                    }
                    let encs: Vec<_> = children.iter().map(|c| c.encode()).collect();
                    if encs.windows(2).any(|w| w[0] > w[1]) {
                        return false;
                    }
                    children.iter().all(|c| go(c, Some(*kind)))
                }
            }
        }
        go(self, None)
    }

    /// Expands the tree back into a cograph, leaves numbered left to right.
    pub fn realize(&self) -> Cograph {
        match self {
            CographExpr::Empty => Cograph::empty(),
            CographExpr::Leaf { looped } => {
                if *looped {
                    Cograph::complete(1)
                } else {
                    Cograph::trivial(1)
                }
            }
            CographExpr::Node { kind, children } => {
                let parts: Vec<Cograph> = children.iter().map(|c| c.realize()).collect();
                Cograph::sum_many(*kind, &parts)
            }
        }
    }

    /// Depth read off the tree, as (max even paw, max odd paw). The brute
    /// force embedding search is the primary route; this is the second one.
    fn depth_eo(&self) -> (usize, usize) {
        match self {
            CographExpr::Empty => (0, 0),
            CographExpr::Leaf { .. } => (0, 1),
            CographExpr::Node { kind, children } => {
                let subs: Vec<(usize, usize)> = children.iter().map(|c| c.depth_eo()).collect();
                match kind {
                    SumKind::Dsum => {
                        let e = subs.iter().map(|s| s.0).max().unwrap();
                        let o = subs.iter().map(|s| s.1.max(s.0 + 1)).max().unwrap();
                        (e, o)
                    }
                    SumKind::Csum => {
                        let o = subs.iter().map(|s| s.1).max().unwrap();
                        (o + 1, o)
                    }
                }
            }
        }
    }

    /// Depth via the cotree formula (law DEPTH-COTREE checks agreement with
    /// the embedding search).
    pub fn depth(&self) -> usize {
        let (e, o) = self.depth_eo();
        e.max(o)
    }

    /// Compact text rendering: `.` leaf, `o` looped leaf, `d(...)`/`c(...)`.
    pub fn render(&self) -> String {
        match self {
            CographExpr::Empty => "empty".into(),
            CographExpr::Leaf { looped: false } => ".".into(),
            CographExpr::Leaf { looped: true } => "o".into(),
            CographExpr::Node { kind, children } => {
                let tag = match kind {
                    SumKind::Dsum => 'd',
                    SumKind::Csum => 'c',
                };
                let inner: Vec<String> = children.iter().map(|c| c.render()).collect();
                format!("{}({})", tag, inner.join(","))
            }
        }
    }
}

/// Canonical form plus the leaf labeling: entry i is the original vertex
/// sitting at leaf i (left to right).
pub fn canonical_decomposition(c: &Cograph) -> (CographExpr, Vec<usize>) {
    fn go(c: &Cograph, verts: &[usize]) -> (CographExpr, Vec<usize>) {
        match verts.len() {
            0 => (CographExpr::Empty, vec![]),
            1 => (
                CographExpr::Leaf { looped: c.has_loop(verts[0]) },
                vec![verts[0]],
            ),
            _ => {
                let sub = c.induced(verts);
                let conn = sub.components(false);
                let (kind, groups) = if conn.len() > 1 {
                    (SumKind::Dsum, conn)
                } else {
                    (SumKind::Csum, sub.components(true))
                };
                let mut parts: Vec<(Vec<u8>, CographExpr, Vec<usize>)> = groups
                    .into_iter()
                    .map(|g| {
                        let orig: Vec<usize> = g.iter().map(|&i| verts[i]).collect();
                        let (e, l) = go(c, &orig);
                        (e.encode(), e, l)
                    })
                    .collect();
                parts.sort();
                let mut children = vec![];
                let mut labels = vec![];
                for (_, e, l) in parts {
                    children.push(e);
                    labels.extend(l);
                }
                (CographExpr::Node { kind, children }, labels)
            }
        }
    }
    let verts: Vec<usize> = (0..c.n()).collect();
    go(c, &verts)
}

/// Canonical cotree of a cograph.
pub fn canonical_form(c: &Cograph) -> CographExpr {
    canonical_decomposition(c).0
}

/// Canonical key: the encoding of the canonical form.
pub fn canonical_key(c: &Cograph) -> Vec<u8> {
    canonical_form(c).encode()
}

/// Isomorphism via canonical keys.
pub fn is_isomorphic(a: &Cograph, b: &Cograph) -> bool {
    a.n() == b.n() && canonical_key(a) == canonical_key(b)
}

/// All permutations of 0..n.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    if n == 0 {
        return vec![vec![]];
    }
    out
}

/// Permutation brute force; the independent oracle for `is_isomorphic`.
pub fn brute_isomorphic(a: &Cograph, b: &Cograph) -> bool {
    if a.n() != b.n() {
        return false;
    }
    permutations(a.n()).iter().any(|p| &a.relabel(p) == b)
}

/// Minimum adjacency pattern over all relabelings. A second complete
/// invariant, independent of the cotree route.
pub fn perm_min_key(c: &Cograph) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for p in permutations(c.n()) {
        let r = c.relabel(&p);
        let key = r.rows().to_vec();
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap_or_default()
}

/// Calls `f` on every symmetric relation with the given diagonal flavor on n
/// labeled vertices, as bit rows.
pub fn for_each_sym_relation<F: FnMut(&[u32])>(n: usize, flavor: Flavor, mut f: F) {
    assert!(n <= 7, "exhaustive relation sweep is bounded at 7 vertices");
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let diag_masks: Vec<u32> = match flavor {
        Flavor::Irr => vec![0],
        Flavor::Refl => vec![if n == 0 { 0 } else { (1 << n) - 1 }],
        Flavor::Any => (0..1u32 << n).collect(),
    };
    let mut rows = vec![0u32; n];
    for emask in 0..1u64 << slots.len() {
        for d in &diag_masks {
            for r in rows.iter_mut() {
                *r = 0;
            }
            for (k, &(i, j)) in slots.iter().enumerate() {
                if emask >> k & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
            for i in 0..n {
                if d >> i & 1 == 1 {
                    rows[i] |= 1 << i;
                }
            }
            f(&rows);
        }
    }
}

/// Every labeled cograph on n vertices with the given flavor.
pub fn labeled_cographs(n: usize, flavor: Flavor) -> Vec<Cograph> {
    let mut out = vec![];
    for_each_sym_relation(n, flavor, |rows| {
        if quadruple_condition(n, rows).is_ok() {
            out.push(Cograph::from_rows_unchecked(n, rows.to_vec()));
        }
    });
    out
}

/// Generator one: filter all labeled relations and keep one representative per
/// canonical key.
pub fn enumerate_cographs_filter(n: usize, flavor: Flavor) -> Vec<Cograph> {
    let mut seen = std::collections::BTreeMap::new();
    for c in labeled_cographs(n, flavor) {
        seen.entry(canonical_key(&c)).or_insert(c);
    }
    seen.into_values().collect()
}

/// Generator two: build all canonical cotrees with n leaves directly.
pub fn enumerate_exprs(n: usize, flavor: Flavor) -> Vec<CographExpr> {
    if n == 0 {
        return vec![CographExpr::Empty];
    }
    let leaves: Vec<CographExpr> = match flavor {
        Flavor::Irr => vec![CographExpr::Leaf { looped: false }],
        Flavor::Refl => vec![CographExpr::Leaf { looped: true }],
        Flavor::Any => vec![CographExpr::Leaf { looped: false }, CographExpr::Leaf { looped: true }],
    };
    // exprs[m][root] = canonical expressions with m leaves whose root is a
    // leaf (root = 2) or a node of the given kind (0 = Dsum, 1 = Csum).
    fn pool(
        m: usize,
        leaves: &[CographExpr],
        memo: &mut Vec<Option<[Vec<CographExpr>; 3]>>,
    ) -> [Vec<CographExpr>; 3] {
        if let Some(p) = &memo[m] {
            return p.clone();
        }
        let mut out: [Vec<CographExpr>; 3] = [vec![], vec![], vec![]];
        if m == 1 {
            out[2] = leaves.to_vec();
        } else {
            for (slot, kind) in [(0usize, SumKind::Dsum), (1usize, SumKind::Csum)] {
                // children: sorted lists (by encoding) of >= 2 subtrees whose
                // roots are leaves or the opposite kind, leaf counts summing to m
                let other = 1 - slot;
                let mut candidates: Vec<(Vec<u8>, CographExpr)> = vec![];
                for k in 1..m {
                    let p = pool(k, leaves, memo);
                    for e in p[other].iter().chain(p[2].iter()) {
                        candidates.push((e.encode(), e.clone()));
                    }
                }
                candidates.sort();
                let mut acc: Vec<CographExpr> = vec![];
                fn build(
                    candidates: &[(Vec<u8>, CographExpr)],
                    start: usize,
                    remaining: usize,
                    acc: &mut Vec<CographExpr>,
                    kind: SumKind,
                    out: &mut Vec<CographExpr>,
                ) {
                    if remaining == 0 {
                        if acc.len() >= 2 {
                            out.push(CographExpr::Node { kind, children: acc.clone() });
                        }
                        return;
                    }
                    for idx in start..candidates.len() {
                        let lc = candidates[idx].1.leaf_count();
                        if lc <= remaining {
                            acc.push(candidates[idx].1.clone());
                            build(candidates, idx, remaining - lc, acc, kind, out);
                            acc.pop();
                        }
                    }
                }
                build(&candidates, 0, m, &mut acc, kind, &mut out[slot]);
            }
        }
        memo[m] = Some(out.clone());
        out
    }
    let mut memo: Vec<Option<[Vec<CographExpr>; 3]>> = vec![None; n + 1];
    let p = pool(n, &leaves, &mut memo);
    let mut all: Vec<CographExpr> = p[0].iter().chain(p[1].iter()).chain(p[2].iter()).cloned().collect();
    all.sort_by_key(|e| e.encode());
    all
}

/// One representative cograph per isomorphism class, via cotree generation.
pub fn enumerate_cographs(n: usize, flavor: Flavor) -> Vec<Cograph> {
    enumerate_exprs(n, flavor).iter().map(|e| e.realize()).collect()
}

/// One representative per isomorphism class for every vertex count up to the
/// bound, cotree-generated.
pub fn class_representatives_upto(max_n: usize, flavor: Flavor) -> Vec<Cograph> {
    (0..=max_n).flat_map(|n| enumerate_cographs(n, flavor)).collect()
}

/// Canonical form restricted to valid input flavors; rejects mismatches.
pub fn enumerate_checked(n: usize, flavor: Flavor) -> Result<Vec<Cograph>> {
    if n > 7 {
        return Err(IsolaError::BoundExceeded(format!("enumeration bounded at 7 vertices, got {n}")));
    }
    let out = enumerate_cographs(n, flavor);
    debug_assert!(out.iter().all(|c| flavor.admits(c)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::paw;

    #[test]
    fn canonical_form_of_k23() {
        let k23 = Cograph::sum(SumKind::Csum, &Cograph::trivial(2), &Cograph::trivial(3));
        let e = canonical_form(&k23);
        let expected = CographExpr::Node {
            kind: SumKind::Csum,
            children: vec![
                CographExpr::Node {
                    kind: SumKind::Dsum,
                    children: vec![CographExpr::Leaf { looped: false }; 2],
                },
                CographExpr::Node {
                    kind: SumKind::Dsum,
                    children: vec![CographExpr::Leaf { looped: false }; 3],
                },
            ],
        };
        assert_eq!(e, expected);
        assert!(e.is_canonical());
        assert_eq!(e.render(), "c(d(.,.),d(.,.,.))");
    }

    #[test]
    fn canonical_form_of_a_singleton() {
        assert_eq!(canonical_form(&Cograph::trivial(1)), CographExpr::Leaf { looped: false });
        assert_eq!(canonical_form(&Cograph::empty()), CographExpr::Empty);
    }

    #[test]
    fn realize_inverts_canonical_form() {
        for n in 0..=5 {
            for c in enumerate_cographs(n, Flavor::Any) {
                let e = canonical_form(&c);
                assert!(e.is_canonical());
                assert_eq!(e.leaf_count(), c.n());
                assert!(is_isomorphic(&e.realize(), &c));
            }
        }
    }

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        for c in enumerate_cographs(4, Flavor::Any) {
            let key = canonical_key(&c);
            for p in permutations(4) {
                assert_eq!(canonical_key(&c.relabel(&p)), key);
            }
        }
    }

    #[test]
    fn iso_examples() {
        let a = Cograph::sum(SumKind::Csum, &Cograph::trivial(1), &Cograph::trivial(2));
        let b = Cograph::sum(SumKind::Csum, &Cograph::trivial(2), &Cograph::trivial(1));
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&Cograph::trivial(3), &Cograph::complete_irr(3)));
    }

    #[test]
    fn four_vertex_classes_all_distinguished() {
        let classes = enumerate_cographs(4, Flavor::Irr);
        assert_eq!(classes.len(), 10);
        for (i, a) in classes.iter().enumerate() {
            for (j, b) in classes.iter().enumerate() {
                assert_eq!(is_isomorphic(a, b), i == j);
                assert_eq!(brute_isomorphic(a, b), i == j);
            }
        }
    }

    #[test]
    fn irr_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_cographs(n, Flavor::Irr).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 24]);
    }

    #[test]
    fn tiny_flavor_counts() {
        assert_eq!(enumerate_cographs(1, Flavor::Refl).len(), 1);
        assert_eq!(enumerate_cographs(1, Flavor::Any).len(), 2);
        assert_eq!(enumerate_cographs(0, Flavor::Any).len(), 1);
    }

    #[test]
    fn generators_agree_on_small_sizes() {
        for flavor in [Flavor::Irr, Flavor::Refl, Flavor::Any] {
            for n in 0..=4 {
                let a: Vec<Vec<u8>> = enumerate_cographs(n, flavor).iter().map(canonical_key).collect();
                let b: Vec<Vec<u8>> = enumerate_cographs_filter(n, flavor).iter().map(canonical_key).collect();
                assert_eq!(a, b, "n={n} flavor={flavor:?}");
            }
        }
    }

    #[test]
    fn cotree_depth_matches_search_on_paws() {
        for k in 1..=6 {
            assert_eq!(canonical_form(&paw(k)).depth(), k);
        }
    }
}
