//! The canonical isolability poset, envelopes of fibered families, the
//! combinatorial line poset of weak orders, its tensor powers, and an
//! independent geometric oracle built from grid points of euclidean space with
//! symbolic infinitesimal perturbations.

use crate::cograph::Cograph;
use crate::isolability::irr_supergraphs;
use crate::morphism::GraphMap;
use crate::onecograph::OneCograph;
use crate::poset::FinitePoset;
use crate::{IsolaError, Result};
use std::collections::{BTreeMap, BTreeSet};

/// An ordered set partition: blocks listed in precedence order, each block
/// sorted. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakOrder {
    blocks: Vec<Vec<usize>>,
}

impl WeakOrder {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(IsolaError::Invalid("weak order blocks must be nonempty".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if !seen.insert(v) {
                    return Err(IsolaError::Invalid("weak order blocks must be disjoint".into()));
                }
            }
        }
        Ok(WeakOrder { blocks })
    }

    /// The one-block order on 0..n, or the empty order.
    pub fn coarse(n: usize) -> Self {
        if n == 0 {
            WeakOrder { blocks: vec![] }
        } else {
            WeakOrder { blocks: vec![(0..n).collect()] }
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Block index of a vertex.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok()).expect("vertex in some block")
    }

    /// Distinct blocks.
    pub fn separates(&self, a: usize, b: usize) -> bool {
        self.block_of(a) != self.block_of(b)
    }

    /// Strictly before.
    pub fn before(&self, a: usize, b: usize) -> bool {
        self.block_of(a) < self.block_of(b)
    }

    /// Every strict precedence of `self` holds in `other`.
    pub fn refines_into(&self, other: &WeakOrder) -> bool {
        let n = self.n();
        if n != other.n() {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                if self.before(a, b) && !other.before(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Pullback along a vertex map: the blocks are the nonempty preimages in
    /// precedence order.
    pub fn pullback(&self, f: &[usize]) -> WeakOrder {
        let mut blocks = vec![];
        for b in &self.blocks {
            let pre: Vec<usize> = (0..f.len()).filter(|&v| b.binary_search(&f[v]).is_ok()).collect();
            if !pre.is_empty() {
                blocks.push(pre);
            }
        }
        WeakOrder { blocks }
    }

    /// The oriented apartness relation with an arrow between blocks in
    /// precedence order.
    pub fn to_onecograph(&self) -> OneCograph {
        let n = self.n();
        let mut dedges = vec![];
        for (i, b1) in self.blocks.iter().enumerate() {
            for b2 in self.blocks.iter().skip(i + 1) {
                for &a in b1 {
                    for &b in b2 {
                        dedges.push((a, b));
                    }
                }
            }
        }
        OneCograph::new(n, &dedges, &[]).expect("ordered partitions orient apartness relations")
    }

    /// Recovers the weak order from an oriented apartness relation.
    pub fn from_onecograph(g: &OneCograph) -> Result<WeakOrder> {
        let lam = g.symmetrize();
        if !(lam.is_irreflexive() && lam.depth() <= 2) {
            return Err(IsolaError::Invalid("not an oriented apartness relation".into()));
        }
        let mut groups = lam.neg().irr().components(false);
        // blocks = co-components; precedence read off the arrows
        groups.sort_by_key(|b| (0..g.n()).filter(|&v| g.has(v, b[0])).count());
        WeakOrder::new(groups)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","))
            .collect();
        if parts.is_empty() {
            "()".into()
        } else {
            parts.join("|")
        }
    }
}

/// All ordered set partitions of 0..n.
pub fn all_weak_orders(n: usize) -> Vec<WeakOrder> {
    fn rec(rem: &BTreeSet<usize>) -> Vec<Vec<Vec<usize>>> {
        if rem.is_empty() {
            return vec![vec![]];
        }
        let items: Vec<usize> = rem.iter().copied().collect();
        let mut out = vec![];
        // nonempty sublists as first block
        for mask in 1..1u32 << items.len() {
            let block: Vec<usize> = (0..items.len()).filter(|&k| mask >> k & 1 == 1).map(|k| items[k]).collect();
            let rest: BTreeSet<usize> = items
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 0)
                .map(|(_, &v)| v)
                .collect();
            for mut tail in rec(&rest) {
                let mut blocks = vec![block.clone()];
                blocks.append(&mut tail);
                out.push(blocks);
            }
        }
        out
    }
    let all: BTreeSet<usize> = (0..n).collect();
    let mut ws: Vec<WeakOrder> = rec(&all).into_iter().map(|blocks| WeakOrder { blocks }).collect();
    ws.sort();
    ws
}

/// The canonical isolability poset: irreflexive cograph supergraphs of the
/// index on the same vertices, ordered by edge inclusion.
pub fn k_poset(lam: &Cograph) -> Result<FinitePoset> {
    if !lam.is_irreflexive() {
        return Err(IsolaError::NotIrreflexive);
    }
    let sup = irr_supergraphs(lam);
    let labels: Vec<String> = sup.iter().map(edge_label).collect();
    let mut pairs = vec![];
    for (i, a) in sup.iter().enumerate() {
        for (j, b) in sup.iter().enumerate() {
            if i != j && edge_subset(a, b) {
                pairs.push((i, j));
            }
        }
    }
    FinitePoset::new(labels, &pairs)
}

pub(crate) fn edge_label(c: &Cograph) -> String {
    let es: Vec<String> = c.edges().iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
    if es.is_empty() {
        "e:".into()
    } else {
        format!("e:{}", es.join(","))
    }
}

fn edge_subset(a: &Cograph, b: &Cograph) -> bool {
    a.edges().iter().all(|&(x, y)| b.has_edge(x, y))
}

/// The line poset: weak orders whose blocks separate every edge of the index,
/// ordered by preservation of strict precedences.
pub fn line_poset(lam: &Cograph) -> Result<FinitePoset> {
    if !lam.is_irreflexive() {
        return Err(IsolaError::NotIrreflexive);
    }
    let elems: Vec<WeakOrder> = all_weak_orders(lam.n())
        .into_iter()
        .filter(|w| lam.edges().iter().all(|&(a, b)| w.separates(a, b)))
        .collect();
    weak_order_poset(&elems.iter().map(|w| vec![w.clone()]).collect::<Vec<_>>())
}

/// Tensor power of the line: tuples of weak orders jointly separating every
/// edge, ordered componentwise.
pub fn tensor_line(n: usize, lam: &Cograph) -> Result<FinitePoset> {
    if !lam.is_irreflexive() {
        return Err(IsolaError::NotIrreflexive);
    }
    if n == 0 {
        return Err(IsolaError::Invalid("tensor power must be positive".into()));
    }
    let ws = all_weak_orders(lam.n());
    let mut elems: Vec<Vec<WeakOrder>> = vec![vec![]];
    for _ in 0..n {
        let mut next = vec![];
        for tuple in &elems {
            for w in &ws {
                let mut t = tuple.clone();
                t.push(w.clone());
                next.push(t);
            }
        }
        elems = next;
    }
    let elems: Vec<Vec<WeakOrder>> = elems
        .into_iter()
        .filter(|tuple| lam.edges().iter().all(|&(a, b)| tuple.iter().any(|w| w.separates(a, b))))
        .collect();
    weak_order_poset(&elems)
}

fn tuple_label(tuple: &[WeakOrder]) -> String {
    tuple.iter().map(|w| w.label()).collect::<Vec<_>>().join(";")
}

fn weak_order_poset(elems: &[Vec<WeakOrder>]) -> Result<FinitePoset> {
    let labels: Vec<String> = elems.iter().map(|t| tuple_label(t)).collect();
    let mut pairs = vec![];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            if i != j && a.iter().zip(b.iter()).all(|(x, y)| x.refines_into(y)) {
                pairs.push((i, j));
            }
        }
    }
    FinitePoset::new(labels, &pairs)
}

/// Geometric oracle: enumerate integer grid configurations in n-space whose
/// coordinatewise weak orders jointly separate the edges, and generate the
/// relation by perturbing each configuration with symbolic infinitesimals in
/// every direction. Exact arithmetic throughout.
pub fn face_poset_oracle(lam: &Cograph, dims: usize) -> Result<FinitePoset> {
    if !lam.is_irreflexive() {
        return Err(IsolaError::NotIrreflexive);
    }
    if dims == 0 {
        return Err(IsolaError::Invalid("ambient dimension must be positive".into()));
    }
    let v = lam.n();
    let coords = v * dims;
    let grid = v + 1;
    if grid.pow(coords as u32) > 2_000_000 {
        return Err(IsolaError::BoundExceeded("grid too large for the geometric oracle".into()));
    }
    let edges = lam.edges();

    // the label of a perturbed configuration, as block ranks per axis: entry
    // c*v + vert is the rank of that vertex on axis c, ordering the exact
    // pairs (value, infinitesimal direction) lexicographically
    let mut idx_buf: Vec<usize> = (0..v).collect();
    let mut label_of = move |point: &[i64], dir: &[i64]| -> Vec<u8> {
        let mut ranks = vec![0u8; coords];
        for c in 0..dims {
            let key = |vert: usize| (point[vert * dims + c], dir[vert * dims + c]);
            idx_buf.sort_by_key(|&i| key(i));
            let mut rank = 0u8;
            for k in 0..v {
                if k > 0 && key(idx_buf[k]) != key(idx_buf[k - 1]) {
                    rank += 1;
                }
                ranks[c * v + idx_buf[k]] = rank;
            }
        }
        ranks
    };

    let admissible = |ranks: &[u8]| {
        edges.iter().all(|&(a, b)| (0..dims).any(|c| ranks[c * v + a] != ranks[c * v + b]))
    };

    let mut ids: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut relation: BTreeSet<(usize, usize)> = BTreeSet::new();
    let intern = |ids: &mut BTreeMap<Vec<u8>, usize>, ranks: Vec<u8>| -> usize {
        let next = ids.len();
        *ids.entry(ranks).or_insert(next)
    };

    let mut point = vec![0i64; coords];
    let zero_dir = vec![0i64; coords];
    loop {
        let base = label_of(&point, &zero_dir);
        if admissible(&base) {
            let base_id = intern(&mut ids, base);
            let mut dir = vec![-1i64; coords];
            loop {
                let lab = label_of(&point, &dir);
                if admissible(&lab) {
                    let id = intern(&mut ids, lab);
                    relation.insert((base_id, id));
                }
                let mut i = 0;
                loop {
                    if i == coords {
                        break;
                    }
                    dir[i] += 1;
                    if dir[i] <= 1 {
                        break;
                    }
                    dir[i] = -1;
                    i += 1;
                }
                if i == coords {
                    break;
                }
            }
        }
        let mut i = 0;
        loop {
            if i == coords {
                break;
            }
            point[i] += 1;
            if point[i] < grid as i64 {
                break;
            }
            point[i] = 0;
            i += 1;
        }
        if i == coords {
            break;
        }
    }

    // rebuild weak orders from the rank vectors for the poset labels
    let mut labels = vec![String::new(); ids.len()];
    for (ranks, &id) in &ids {
        let tuple: Vec<WeakOrder> = (0..dims)
            .map(|c| {
                let axis = &ranks[c * v..(c + 1) * v];
                let blocks: Vec<Vec<usize>> = match axis.iter().copied().max() {
                    None => vec![],
                    Some(max) => (0..=max).map(|r| (0..v).filter(|&vert| axis[vert] == r).collect()).collect(),
                };
                WeakOrder { blocks }
            })
            .collect();
        labels[id] = tuple_label(&tuple);
    }
    let pairs: Vec<(usize, usize)> = relation.into_iter().collect();
    FinitePoset::new(labels, &pairs)
}

/// A fibered family with fibers over every irreflexive cograph, cartesian
/// transport along accretive maps, and a hom relation over dispersive maps.
pub trait ParaFamily {
    type Elem: Clone + Ord + std::fmt::Debug;

    /// The fiber over a cograph; may be empty.
    fn fiber(&self, mu: &Cograph) -> Vec<Self::Elem>;

    /// Cartesian transport: pulls an element over the target of an accretive
    /// map back to its source.
    fn transport_accretive(&self, f: &GraphMap, elem: &Self::Elem) -> Self::Elem;

    /// Whether a morphism of the family covers the dispersive map `theta`.
    fn hom_over_dispersive(&self, theta: &GraphMap, x: &Self::Elem, y: &Self::Elem) -> bool;

    fn label(&self, e: &Self::Elem) -> String;
}

/// The terminal family: one element everywhere. Its envelope is the canonical
/// isolability poset.
pub struct TrivialFamily;

impl ParaFamily for TrivialFamily {
    type Elem = ();

    fn fiber(&self, _mu: &Cograph) -> Vec<()> {
        vec![()]
    }

    fn transport_accretive(&self, _f: &GraphMap, _elem: &()) {}

    fn hom_over_dispersive(&self, _theta: &GraphMap, _x: &(), _y: &()) -> bool {
        true
    }

    fn label(&self, _e: &()) -> String {
        "*".into()
    }
}

/// Oriented apartness relations fibered over their symmetrizations.
pub struct OrientedApartnessFamily;

impl ParaFamily for OrientedApartnessFamily {
    type Elem = OneCograph;

    fn fiber(&self, mu: &Cograph) -> Vec<OneCograph> {
        if !(mu.is_irreflexive() && mu.depth() <= 2) {
            return vec![];
        }
        crate::onecograph::one_structures(mu)
    }

    fn transport_accretive(&self, f: &GraphMap, elem: &OneCograph) -> OneCograph {
        // orientation pulled back along the vertex map
        let n = f.src().n();
        let mut dedges = vec![];
        for a in 0..n {
            for b in 0..n {
                if a != b && f.src().has_edge(a, b) && elem.has(f.apply(a), f.apply(b)) {
                    dedges.push((a, b));
                }
            }
        }
        OneCograph::new(n, &dedges, &[]).expect("cartesian lifts of 1-structures along accretive maps")
    }

    fn hom_over_dispersive(&self, theta: &GraphMap, x: &OneCograph, y: &OneCograph) -> bool {
        // direction-preserving over the vertex map
        let n = theta.src().n();
        (0..n).all(|a| (0..n).all(|b| !x.has(a, b) || y.has(theta.apply(a), theta.apply(b))))
    }

    fn label(&self, e: &OneCograph) -> String {
        WeakOrder::from_onecograph(e).expect("fibers are oriented apartness relations").label()
    }
}

/// The envelope of a fibered family at an index: pairs of a supergraph of the
/// index and a fiber element over it, ordered by edge inclusion together with
/// the family's homs over the dispersive inclusions.
pub fn envelope<F: ParaFamily>(family: &F, lam: &Cograph) -> Result<FinitePoset> {
    if !lam.is_irreflexive() {
        return Err(IsolaError::NotIrreflexive);
    }
    let mut elems: Vec<(Cograph, F::Elem)> = vec![];
    for mu in irr_supergraphs(lam) {
        for x in family.fiber(&mu) {
            elems.push((mu.clone(), x));
        }
    }
    let labels: Vec<String> =
        elems.iter().map(|(mu, x)| format!("{}@{}", edge_label(mu), family.label(x))).collect();
    let mut pairs = vec![];
    for (i, (mu1, x1)) in elems.iter().enumerate() {
        for (j, (mu2, x2)) in elems.iter().enumerate() {
            if i == j || !edge_subset(mu1, mu2) {
                continue;
            }
            let incl = GraphMap::new(mu1.clone(), mu2.clone(), (0..mu1.n()).collect())
                .expect("edge inclusions are dispersive maps");
            if family.hom_over_dispersive(&incl, x1, x2) {
                pairs.push((i, j));
            }
        }
    }
    FinitePoset::new(labels, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge2() -> Cograph {
        Cograph::new(2, &[(0, 1)], &[]).unwrap()
    }

    #[test]
    fn weak_order_counts() {
        assert_eq!(all_weak_orders(0).len(), 1);
        assert_eq!(all_weak_orders(1).len(), 1);
        assert_eq!(all_weak_orders(2).len(), 3);
        assert_eq!(all_weak_orders(3).len(), 13);
        assert_eq!(all_weak_orders(4).len(), 75);
    }

    #[test]
    fn k_poset_examples() {
        let p = k_poset(&Cograph::trivial(2)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.leq_labels("e:", "e:1-2"), Some(true));
        let p3 = k_poset(&Cograph::trivial(3)).unwrap();
        assert_eq!(p3.len(), 8);
        // the boolean lattice on three edge slots
        let labels: Vec<String> = (0..8)
            .map(|m: u32| {
                let es: Vec<&str> = [(m & 1, "1-2"), (m >> 1 & 1, "1-3"), (m >> 2 & 1, "2-3")]
                    .iter()
                    .filter(|&&(b, _)| b == 1)
                    .map(|&(_, e)| e)
                    .collect();
                format!("s{}", es.join(","))
            })
            .collect();
        let mut pairs = vec![];
        for a in 0..8u32 {
            for b in 0..8u32 {
                if a != b && a & b == a {
                    pairs.push((a as usize, b as usize));
                }
            }
        }
        let cube = FinitePoset::new(labels, &pairs).unwrap();
        assert!(p3.is_isomorphic(&cube));
        assert_eq!(k_poset(&edge2()).unwrap().len(), 1);
        assert!(k_poset(&Cograph::complete(1)).is_err());
    }

    #[test]
    fn line_poset_examples() {
        let p = line_poset(&Cograph::trivial(2)).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.leq_labels("1,2", "1|2"), Some(true));
        assert_eq!(p.leq_labels("1,2", "2|1"), Some(true));
        assert_eq!(p.leq_labels("1|2", "2|1"), Some(false));
        let q = line_poset(&edge2()).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.leq_labels("1|2", "2|1"), Some(false));
        assert_eq!(line_poset(&Cograph::trivial(3)).unwrap().len(), 13);
    }

    #[test]
    fn tensor_line_examples() {
        let lam = edge2();
        let t = tensor_line(2, &lam).unwrap();
        assert_eq!(t.len(), 8);
        let t1 = tensor_line(1, &lam).unwrap();
        let l = line_poset(&lam).unwrap();
        assert_eq!(t1.len(), l.len());
        assert!(t1.is_isomorphic(&l));
        // padding with the coarse order embeds one power into the next
        let t1_triv = tensor_line(1, &Cograph::trivial(2)).unwrap();
        let t2_triv = tensor_line(2, &Cograph::trivial(2)).unwrap();
        for a in t1_triv.labels() {
            for b in t1_triv.labels() {
                let pad = |l: &str| format!("{};{}", l, WeakOrder::coarse(2).label());
                assert_eq!(
                    t1_triv.leq_labels(a, b),
                    t2_triv.leq_labels(&pad(a), &pad(b)),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn oracle_matches_line_poset() {
        for lam in [Cograph::trivial(2), edge2(), Cograph::trivial(3), crate::cograph::paw(3)] {
            let l = line_poset(&lam).unwrap();
            let o = face_poset_oracle(&lam, 1).unwrap();
            assert_eq!(l, o, "lam={lam:?}");
        }
    }

    #[test]
    fn oracle_matches_tensor_line() {
        for lam in [Cograph::trivial(2), edge2()] {
            let t = tensor_line(2, &lam).unwrap();
            let o = face_poset_oracle(&lam, 2).unwrap();
            assert_eq!(t, o, "lam={lam:?}");
        }
        assert_eq!(face_poset_oracle(&Cograph::trivial(2), 2).unwrap().len(), 9);
    }

    #[test]
    fn envelope_of_trivial_family_is_k_poset() {
        for lam in [Cograph::trivial(2), edge2(), Cograph::trivial(3)] {
            let e = envelope(&TrivialFamily, &lam).unwrap();
            let k = k_poset(&lam).unwrap();
            assert!(e.isomorphic_via(&k, |l| l.trim_end_matches("@*").to_string()), "lam={lam:?}");
        }
    }

    #[test]
    fn envelope_of_oriented_apartness_is_the_line() {
        for lam in [Cograph::trivial(2), edge2(), Cograph::trivial(3), crate::cograph::paw(3)] {
            let e = envelope(&OrientedApartnessFamily, &lam).unwrap();
            let l = line_poset(&lam).unwrap();
            assert!(
                e.isomorphic_via(&l, |label| label.split('@').nth(1).unwrap().to_string()),
                "lam={lam:?}"
            );
        }
    }

    #[test]
    fn weak_order_onecograph_roundtrip() {
        for w in all_weak_orders(4) {
            let g = w.to_onecograph();
            assert_eq!(WeakOrder::from_onecograph(&g).unwrap(), w);
        }
    }

    #[test]
    fn pullback_is_monotone() {
        let f = vec![0usize, 0, 1];
        for w1 in all_weak_orders(2) {
            for w2 in all_weak_orders(2) {
                if w1.refines_into(&w2) {
                    assert!(w1.pullback(&f).refines_into(&w2.pullback(&f)));
                }
            }
        }
    }

    #[test]
    fn oracle_rejects_reflexive_indices() {
        assert!(face_poset_oracle(&Cograph::complete(2), 1).is_err());
    }
}
