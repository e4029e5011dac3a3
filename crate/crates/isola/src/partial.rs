//! Partial maps of cographs: maps defined on an induced subgraph, with Kleisli
//! composition and the inert/active factorization.

use crate::cograph::Cograph;
use crate::morphism::GraphMap;
use crate::{IsolaError, Result};

/// A map defined on an induced subgraph of the source. `domain` is the sorted
/// list of source vertices carrying the map; `map` goes out of the induced
/// subgraph on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGraphMap {
    src: Cograph,
    domain: Vec<usize>,
    map: GraphMap,
}

impl PartialGraphMap {
    pub fn new(src: Cograph, mut domain: Vec<usize>, tgt: Cograph, values: Vec<usize>) -> Result<Self> {
        domain.sort_unstable();
        domain.dedup();
        for &v in &domain {
            if v >= src.n() {
                return Err(IsolaError::VertexOutOfRange(v, src.n()));
            }
        }
        if values.len() != domain.len() {
            return Err(IsolaError::Invalid("values must match the domain".into()));
        }
        let induced = src.induced(&domain);
        let map = GraphMap::new(induced, tgt, values)?;
        Ok(PartialGraphMap { src, domain, map })
    }

    /// A total map, seen as a partial one.
    pub fn total(map: GraphMap) -> Self {
        let src = map.src().clone();
        let domain: Vec<usize> = (0..src.n()).collect();
        PartialGraphMap { src, domain, map }
    }

    /// The nowhere-defined map.
    pub fn empty(src: Cograph, tgt: Cograph) -> Self {
        let map = GraphMap::new(Cograph::empty(), tgt, vec![]).expect("empty map");
        PartialGraphMap { src, domain: vec![], map }
    }

    pub fn src(&self) -> &Cograph {
        &self.src
    }

    pub fn tgt(&self) -> &Cograph {
        self.map.tgt()
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn map(&self) -> &GraphMap {
        &self.map
    }

    pub fn is_total(&self) -> bool {
        self.domain.len() == self.src.n()
    }

    /// Value at a source vertex, when defined.
    pub fn value(&self, v: usize) -> Option<usize> {
        self.domain.binary_search(&v).ok().map(|i| self.map.apply(i))
    }

    /// Kleisli composition: g after f. The composite is defined where f is
    /// defined and lands in the domain of g.
    pub fn compose(g: &PartialGraphMap, f: &PartialGraphMap) -> Result<PartialGraphMap> {
        if f.tgt() != g.src() {
            return Err(IsolaError::EndpointMismatch("compose: target of first is not source of second".into()));
        }
        let mut domain = vec![];
        let mut values = vec![];
        for (i, &v) in f.domain.iter().enumerate() {
            let fv = f.map.apply(i);
            if let Some(gv) = g.value(fv) {
                domain.push(v);
                values.push(gv);
            }
        }
        PartialGraphMap::new(f.src.clone(), domain, g.tgt().clone(), values)
    }

    /// Inert part (restriction to the domain, identity values) followed by the
    /// active part (the total map out of the induced subgraph).
    pub fn inert_active_factor(&self) -> (PartialGraphMap, GraphMap) {
        let induced = self.src.induced(&self.domain);
        let inert = PartialGraphMap {
            src: self.src.clone(),
            domain: self.domain.clone(),
            map: GraphMap::identity(&induced),
        };
        (inert, self.map.clone())
    }

    /// Inert: opposite of an accretive injection, i.e. the values form an
    /// isomorphism onto the target.
    pub fn is_inert(&self) -> bool {
        self.map.is_isomorphism()
    }

    pub fn is_active(&self) -> bool {
        self.is_total()
    }
}

/// Whether the composite of the two composable partial maps is a thin
/// configuration: the induced map from the composite's domain to the domain of
/// the second map must be a fibration. Empty domains are vacuously thin.
pub fn is_thin(f: &PartialGraphMap, g: &PartialGraphMap) -> Result<bool> {
    if f.tgt() != g.src() {
        return Err(IsolaError::EndpointMismatch("is_thin: maps are not composable".into()));
    }
    let h = PartialGraphMap::compose(g, f)?;
    let src_ind = f.src().induced(h.domain());
    let tgt_ind = g.src().induced(g.domain());
    let values: Vec<usize> = h
        .domain()
        .iter()
        .map(|&v| {
            let fv = f.value(v).expect("composite domain lies in the domain of f");
            g.domain().binary_search(&fv).expect("f lands in the domain of g")
        })
        .collect();
    let induced = GraphMap::new(src_ind, tgt_ind, values)?;
    Ok(induced.is_fibration())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::SumKind;

    #[test]
    fn compose_with_identity_total() {
        let src = Cograph::new(3, &[(0, 1)], &[]).unwrap();
        let f = PartialGraphMap::new(src.clone(), vec![0, 2], Cograph::trivial(2), vec![1, 0]).unwrap();
        let idt = PartialGraphMap::total(GraphMap::identity(&Cograph::trivial(2)));
        assert_eq!(PartialGraphMap::compose(&idt, &f).unwrap(), f);
    }

    #[test]
    fn compose_with_empty_domain() {
        let src = Cograph::trivial(2);
        let mid = Cograph::trivial(2);
        let tgt = Cograph::trivial(1);
        let e = PartialGraphMap::empty(src.clone(), mid.clone());
        let g = PartialGraphMap::total(GraphMap::new(mid, tgt.clone(), vec![0, 0]).unwrap());
        let c = PartialGraphMap::compose(&g, &e).unwrap();
        assert!(c.domain().is_empty());
    }

    #[test]
    fn vertex_projection_factors() {
        // the partial map from a reflexive cograph onto the looped singleton,
        // defined at one vertex
        let lam = Cograph::complete(3);
        let chi = PartialGraphMap::new(lam.clone(), vec![1], Cograph::complete(1), vec![0]).unwrap();
        let (inert, active) = chi.inert_active_factor();
        assert!(inert.is_inert());
        assert!(active.is_isomorphism());
        let recomposed = PartialGraphMap::compose(&PartialGraphMap::total(active), &inert).unwrap();
        assert_eq!(recomposed, chi);
    }

    #[test]
    fn total_map_has_identity_inert_part() {
        let m = GraphMap::new(Cograph::trivial(2), Cograph::trivial(1), vec![0, 0]).unwrap();
        let p = PartialGraphMap::total(m.clone());
        let (inert, active) = p.inert_active_factor();
        assert!(inert.is_total());
        assert_eq!(active, m);
    }

    #[test]
    fn thinness_examples() {
        // a total accretive second map gives a thin composite
        let edge = Cograph::new(2, &[(0, 1)], &[]).unwrap();
        let f = PartialGraphMap::total(GraphMap::identity(&edge));
        let g = PartialGraphMap::total(GraphMap::new(edge.clone(), Cograph::complete_irr(2), vec![0, 1]).unwrap());
        assert!(is_thin(&f, &g).unwrap());
        // the non-fibration witness: disconnected reflexive pair into the
        // complete reflexive pair
        let dsum = Cograph::sum(SumKind::Dsum, &Cograph::complete(1), &Cograph::complete(1));
        let f = PartialGraphMap::total(GraphMap::new(dsum, Cograph::complete(2), vec![0, 1]).unwrap());
        let g = PartialGraphMap::total(GraphMap::identity(&Cograph::complete(2)));
        assert!(!is_thin(&f, &g).unwrap());
        // empty-domain degeneracy is vacuously thin
        let e = PartialGraphMap::empty(Cograph::trivial(2), Cograph::complete(2));
        assert!(is_thin(&e, &g).unwrap());
    }
}
