//! Relation-preserving maps of cographs and the dispersive/accretive
//! factorization system.
//!
//! A map is dispersive when its vertex map is a bijection, accretive when the
//! source relation is exactly the preimage of the target relation. Every map
//! factors uniquely as accretive after dispersive; the middle object carries
//! the pulled-back relation and is always a cograph.

use crate::cograph::Cograph;
use crate::{IsolaError, Result};

/// A total relation-preserving vertex map between cographs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphMap {
    src: Cograph,
    tgt: Cograph,
    f: Vec<usize>,
}

/// Classification flags for one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapClass {
    pub dispersive: bool,
    pub accretive: bool,
    pub surjective: bool,
    pub injective: bool,
    pub fibration: bool,
    pub attached: bool,
    pub inert: bool,
    pub active: bool,
}

impl GraphMap {
    pub fn new(src: Cograph, tgt: Cograph, f: Vec<usize>) -> Result<Self> {
        if f.len() != src.n() {
            return Err(IsolaError::Invalid(format!(
                "map length {} does not match source size {}",
                f.len(),
                src.n()
            )));
        }
        for &v in &f {
            if v >= tgt.n() {
                return Err(IsolaError::VertexOutOfRange(v, tgt.n()));
            }
        }
        for a in 0..src.n() {
            for b in a..src.n() {
                if src.has_edge(a, b) && !tgt.has_edge(f[a], f[b]) {
                    return Err(IsolaError::NotRelationPreserving(a, b));
                }
            }
        }
        Ok(GraphMap { src, tgt, f })
    }

    pub fn identity(c: &Cograph) -> Self {
        GraphMap { src: c.clone(), tgt: c.clone(), f: (0..c.n()).collect() }
    }

    /// g after f.
    pub fn compose(g: &GraphMap, f: &GraphMap) -> Result<GraphMap> {
        if f.tgt != g.src {
            return Err(IsolaError::EndpointMismatch("compose: target of first is not source of second".into()));
        }
        let comp: Vec<usize> = f.f.iter().map(|&v| g.f[v]).collect();
        Ok(GraphMap { src: f.src.clone(), tgt: g.tgt.clone(), f: comp })
    }

    pub fn src(&self) -> &Cograph {
        &self.src
    }

    pub fn tgt(&self) -> &Cograph {
        &self.tgt
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn apply(&self, v: usize) -> usize {
        self.f[v]
    }

    pub fn is_dispersive(&self) -> bool {
        if self.src.n() != self.tgt.n() {
            return false;
        }
        let mut seen = vec![false; self.tgt.n()];
        for &v in &self.f {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_accretive(&self) -> bool {
        for a in 0..self.src.n() {
            for b in a..self.src.n() {
                if src_tgt_differ(self, a, b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.tgt.n()];
        for &v in &self.f {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.tgt.n()];
        for &v in &self.f {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Fibration: the pullback to the irreflexive part of the target is
    /// accretive. Concretely, any target edge between distinct image points is
    /// already an edge upstairs.
    pub fn is_fibration(&self) -> bool {
        for a in 0..self.src.n() {
            for b in 0..self.src.n() {
                if self.f[a] != self.f[b] && self.tgt.has_edge(self.f[a], self.f[b]) && !self.src.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Attached: endpoints nonempty and every image vertex joined to every
    /// vertex outside the image.
    pub fn is_attached(&self) -> bool {
        if self.src.n() == 0 || self.tgt.n() == 0 {
            return false;
        }
        let mut image = vec![false; self.tgt.n()];
        for &v in &self.f {
            image[v] = true;
        }
        for w in 0..self.tgt.n() {
            if !image[w] {
                continue;
            }
            for v in 0..self.tgt.n() {
                if !image[v] && !self.tgt.has_edge(w, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Relation isomorphism onto the target.
    pub fn is_isomorphism(&self) -> bool {
        self.is_dispersive() && self.is_accretive()
    }

    pub fn classify(&self) -> MapClass {
        MapClass {
            dispersive: self.is_dispersive(),
            accretive: self.is_accretive(),
            surjective: self.is_surjective(),
            injective: self.is_injective(),
            fibration: self.is_fibration(),
            attached: self.is_attached(),
            inert: self.is_isomorphism(),
            active: true,
        }
    }

    /// Unique factorization into a dispersive map followed by an accretive
    /// one. The middle cograph keeps the source vertices and carries the
    /// pulled-back relation.
    pub fn factor_da(&self) -> (GraphMap, GraphMap) {
        let middle = cartesian_lift(self.src.n(), &self.f, &self.tgt).expect("pullback of a cograph relation");
        let disp = GraphMap {
            src: self.src.clone(),
            tgt: middle.clone(),
            f: (0..self.src.n()).collect(),
        };
        let accr = GraphMap { src: middle, tgt: self.tgt.clone(), f: self.f.clone() };
        (disp, accr)
    }

    /// Fibers over each target vertex, as sorted vertex lists.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]; self.tgt.n()];
        for (v, &w) in self.f.iter().enumerate() {
            out[w].push(v);
        }
        out
    }
}

fn src_tgt_differ(m: &GraphMap, a: usize, b: usize) -> bool {
    m.src.has_edge(a, b) != m.tgt.has_edge(m.f[a], m.f[b])
}

/// The pullback relation along an arbitrary vertex map into a cograph. Always
/// a cograph (law PULLBACK-CLOSED).
pub fn cartesian_lift(n_src: usize, f: &[usize], tgt: &Cograph) -> Result<Cograph> {
    if f.len() != n_src {
        return Err(IsolaError::Invalid("vertex map length mismatch".into()));
    }
    for &v in f {
        if v >= tgt.n() {
            return Err(IsolaError::VertexOutOfRange(v, tgt.n()));
        }
    }
    let mut rows = vec![0u32; n_src];
    for a in 0..n_src {
        for b in 0..n_src {
            if tgt.has_edge(f[a], f[b]) {
                rows[a] |= 1 << b;
            }
        }
    }
    Cograph::from_rows(n_src, rows)
}

/// Two maps out of a common source are incompatible when some source pair is
/// separated by one map and collapsed by the other; such spans have no square
/// over them among irreflexive cographs.
pub fn incompatible(phi: &GraphMap, f: &GraphMap) -> Result<bool> {
    if phi.src() != f.src() {
        return Err(IsolaError::EndpointMismatch("incompatible: maps must share their source".into()));
    }
    let n = phi.src().n();
    for i in 0..n {
        for j in 0..n {
            if i != j && phi.tgt().has_edge(phi.f[i], phi.f[j]) && f.f[i] == f.f[j] {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All relation-preserving maps from a to b.
pub fn hom_maps(a: &Cograph, b: &Cograph) -> Vec<GraphMap> {
    let n = a.n();
    let m = b.n();
    let mut out = vec![];
    if n == 0 {
        return vec![GraphMap { src: a.clone(), tgt: b.clone(), f: vec![] }];
    }
    if m == 0 {
        return vec![];
    }
    let mut f = vec![0usize; n];
    loop {
        let ok = (0..n).all(|x| (x..n).all(|y| !a.has_edge(x, y) || b.has_edge(f[x], f[y])));
        if ok {
            out.push(GraphMap { src: a.clone(), tgt: b.clone(), f: f.clone() });
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

pub fn hom_count(a: &Cograph, b: &Cograph) -> usize {
    hom_maps(a, b).len()
}

/// All relation isomorphisms a -> b, as vertex permutations.
pub fn isomorphisms_between(a: &Cograph, b: &Cograph) -> Vec<Vec<usize>> {
    if a.n() != b.n() {
        return vec![];
    }
    crate::cotree::permutations(a.n())
        .into_iter()
        .filter(|p| &a.relabel(p) == b)
        .collect()
}

/// All surjective accretive maps out of `c`, one per kernel partition that
/// induces a genuine quotient cograph.
pub fn accretive_surjections(c: &Cograph) -> Vec<GraphMap> {
    let mut out = vec![];
    for part in partitions(c.n()) {
        let m = part.iter().copied().max().map_or(0, |x| x + 1);
        let mut rows = vec![0u32; m];
        for a in 0..c.n() {
            for b in 0..c.n() {
                if c.has_edge(a, b) {
                    rows[part[a]] |= 1 << part[b];
                }
            }
        }
        if let Ok(tgt) = Cograph::from_rows(m, rows) {
            if let Ok(map) = GraphMap::new(c.clone(), tgt, part.clone()) {
                if map.is_accretive() {
                    out.push(map);
                }
            }
        }
    }
    out
}

/// All partitions of 0..n as canonical block index vectors (restricted
/// growth strings).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![0usize; n];
    fn go(i: usize, maxb: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=maxb {
            cur[i] = b;
            go(i + 1, maxb.max(b + 1), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    go(0, 0, &mut cur, &mut out);
    out
}

/// Builds the disjoint union map structure used by fibration checks: the
/// indexed sum of the fibers of a fibration over a reflexive index, together
/// with the vertex correspondence.
pub fn fibration_as_indexed_sum(m: &GraphMap) -> Result<(Cograph, Vec<usize>)> {
    if !m.tgt().is_reflexive() {
        return Err(IsolaError::NotReflexive);
    }
    if !m.is_fibration() {
        return Err(IsolaError::Invalid("map is not a fibration".into()));
    }
    let fibers = m.fibers();
    let parts: Vec<Cograph> = fibers.iter().map(|f| m.src().induced(f)).collect();
    let sum = Cograph::indexed_sum(m.tgt(), &parts)?;
    // position of source vertex v inside the concatenated fiber blocks
    let mut pos = vec![0usize; m.src().n()];
    let mut offset = 0;
    for f in &fibers {
        for (i, &v) in f.iter().enumerate() {
            pos[v] = offset + i;
        }
        offset += f.len();
    }
    Ok((sum, pos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::SumKind;

    fn edge() -> Cograph {
        Cograph::new(2, &[(0, 1)], &[]).unwrap()
    }

    #[test]
    fn hom_counts() {
        assert_eq!(hom_count(&Cograph::trivial(2), &Cograph::trivial(1)), 1);
        assert_eq!(hom_count(&edge(), &Cograph::trivial(1)), 0);
        assert_eq!(hom_count(&Cograph::trivial(2), &edge()), 4);
    }

    #[test]
    fn dispersive_but_not_accretive() {
        let m = GraphMap::new(Cograph::trivial(2), edge(), vec![0, 1]).unwrap();
        let k = m.classify();
        assert!(k.dispersive && !k.accretive);
    }

    #[test]
    fn accretive_implies_fibration() {
        for src in crate::cotree::labeled_cographs(3, crate::cotree::Flavor::Any) {
            for tgt in crate::cotree::labeled_cographs(2, crate::cotree::Flavor::Any) {
                for m in hom_maps(&src, &tgt) {
                    let k = m.classify();
                    if k.accretive {
                        assert!(k.fibration);
                    }
                }
            }
        }
    }

    #[test]
    fn cross_edge_breaks_fibration() {
        let src = Cograph::sum(SumKind::Dsum, &Cograph::complete(1), &Cograph::complete(1));
        let m = GraphMap::new(src, Cograph::complete(2), vec![0, 1]).unwrap();
        assert!(!m.is_fibration());
    }

    #[test]
    fn factorization_example() {
        // collapse of the trivial pair onto a looped point passes through the
        // complete pair
        let m = GraphMap::new(Cograph::trivial(2), Cograph::complete(1), vec![0, 0]).unwrap();
        let (d, a) = m.factor_da();
        assert_eq!(d.tgt(), &Cograph::complete(2));
        assert!(d.is_dispersive());
        assert!(a.is_accretive());
        assert_eq!(GraphMap::compose(&a, &d).unwrap(), m);
    }

    #[test]
    fn factorization_of_special_maps() {
        let accr = GraphMap::new(edge(), Cograph::complete_irr(2), vec![0, 1]).unwrap();
        assert!(accr.is_accretive());
        let (d, _) = accr.factor_da();
        assert_eq!(d, GraphMap::identity(&edge()));
        let disp = GraphMap::new(Cograph::trivial(2), edge(), vec![0, 1]).unwrap();
        let (_, a) = disp.factor_da();
        assert!(a.is_isomorphism());
    }

    #[test]
    fn cartesian_lift_examples() {
        // lift of complete along any map is complete
        let lift = cartesian_lift(3, &[0, 0, 1], &Cograph::complete(2)).unwrap();
        assert_eq!(lift, Cograph::complete(3));
        // lift of an edge along a constant map is edgeless
        let lift = cartesian_lift(3, &[0, 0, 0], &edge()).unwrap();
        assert_eq!(lift, Cograph::trivial(3));
    }

    #[test]
    fn incompatibility_example() {
        // the first map separates the pair, the second collapses it: the span
        // admits no square among irreflexive cographs
        let collapse = GraphMap::new(Cograph::trivial(2), Cograph::trivial(1), vec![0, 0]).unwrap();
        let separate = GraphMap::new(Cograph::trivial(2), Cograph::complete_irr(2), vec![0, 1]).unwrap();
        assert!(incompatible(&separate, &collapse).unwrap());
        // the predicate reads its arguments asymmetrically: edges from the
        // first, identifications from the second
        assert!(!incompatible(&collapse, &separate).unwrap());
        // an injective second map never identifies anything
        for m in hom_maps(&Cograph::trivial(2), &Cograph::complete_irr(2)) {
            if m.is_injective() {
                assert!(!incompatible(&separate, &m).unwrap());
            }
        }
        // an edgeless first target never separates anything
        for m in hom_maps(&Cograph::trivial(2), &Cograph::trivial(2)) {
            assert!(!incompatible(&m, &collapse).unwrap());
        }
    }

    #[test]
    fn fibration_decomposes_as_indexed_sum() {
        // fibration onto the complete reflexive pair
        let src = Cograph::new(3, &[(0, 1), (0, 2), (1, 2)], &[]).unwrap();
        let tgt = Cograph::complete(2);
        let m = GraphMap::new(src.clone(), tgt, vec![0, 0, 1]).unwrap();
        assert!(m.is_fibration());
        let (sum, pos) = fibration_as_indexed_sum(&m).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(src.has_edge(a, b), sum.has_edge(pos[a], pos[b]));
            }
        }
    }
}
