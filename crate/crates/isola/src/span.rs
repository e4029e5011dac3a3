//! Spans of cograph maps and their composition by pullback.
//!
//! Two flavors are used. In the vertical-opposite flavor the backward leg is
//! dispersive and the forward leg is accretive; in the horizontal-opposite
//! flavor the backward leg is accretive and the forward leg is dispersive.
//! Composition forms the square whose vertex set is pulled back and whose
//! relation is the cartesian lift along the accretive side.

use crate::cograph::Cograph;
use crate::morphism::{cartesian_lift, isomorphisms_between, GraphMap};
use crate::{IsolaError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanFlavor {
    /// backward dispersive, forward accretive
    Vop,
    /// backward accretive, forward dispersive
    Hop,
}

/// A span apex with its two legs. `left` points at the source of the span
/// morphism, `right` at the target; both have the apex as their source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    left: GraphMap,
    right: GraphMap,
}

impl Span {
    pub fn new(left: GraphMap, right: GraphMap, flavor: SpanFlavor) -> Result<Self> {
        if left.src() != right.src() {
            return Err(IsolaError::EndpointMismatch("span legs must share their apex".into()));
        }
        let ok = match flavor {
            SpanFlavor::Vop => left.is_dispersive() && right.is_accretive(),
            SpanFlavor::Hop => left.is_accretive() && right.is_dispersive(),
        };
        if !ok {
            return Err(IsolaError::Invalid("span legs have the wrong classes for this flavor".into()));
        }
        Ok(Span { left, right })
    }

    pub fn identity(c: &Cograph, flavor: SpanFlavor) -> Self {
        let _ = flavor;
        Span { left: GraphMap::identity(c), right: GraphMap::identity(c) }
    }

    pub fn apex(&self) -> &Cograph {
        self.left.src()
    }

    pub fn source(&self) -> &Cograph {
        self.left.tgt()
    }

    pub fn target(&self) -> &Cograph {
        self.right.tgt()
    }

    pub fn left(&self) -> &GraphMap {
        &self.left
    }

    pub fn right(&self) -> &GraphMap {
        &self.right
    }

    /// Equality of spans as morphisms: an apex isomorphism commuting with both
    /// legs, found by brute force.
    pub fn equivalent(&self, other: &Span) -> bool {
        if self.source() != other.source() || self.target() != other.target() {
            return false;
        }
        isomorphisms_between(self.apex(), other.apex()).iter().any(|p| {
            (0..self.apex().n()).all(|v| {
                self.left.apply(v) == other.left.apply(p[v]) && self.right.apply(v) == other.right.apply(p[v])
            })
        })
    }

    /// Composite of `s` then `t`, by the dispersion/accretion pullback square.
    pub fn compose(s: &Span, t: &Span, flavor: SpanFlavor) -> Result<Span> {
        if s.target() != t.source() {
            return Err(IsolaError::EndpointMismatch("span composition endpoints do not match".into()));
        }
        match flavor {
            SpanFlavor::Vop => {
                // pull the accretive forward leg of s back along the dispersive
                // backward leg of t
                if !(s.left.is_dispersive() && s.right.is_accretive() && t.left.is_dispersive() && t.right.is_accretive()) {
                    return Err(IsolaError::Invalid("span legs have the wrong classes for this flavor".into()));
                }
                let inv = invert(t.left.f(), t.left.tgt().n());
                // apex vertices are those of s's apex; w-component determined
                let to_w: Vec<usize> = (0..s.apex().n()).map(|u| inv[s.right.apply(u)]).collect();
                let apex = cartesian_lift(s.apex().n(), &map_compose(&to_w, t.right.f()), t.right.tgt())?;
                let left = GraphMap::new(apex.clone(), s.source().clone(), s.left.f().to_vec())?;
                let right = GraphMap::new(apex, t.target().clone(), map_compose(&to_w, t.right.f()))?;
                Span::new(left, right, flavor)
            }
            SpanFlavor::Hop => {
                if !(s.left.is_accretive() && s.right.is_dispersive() && t.left.is_accretive() && t.right.is_dispersive()) {
                    return Err(IsolaError::Invalid("span legs have the wrong classes for this flavor".into()));
                }
                let inv = invert(s.right.f(), s.right.tgt().n());
                // apex vertices are those of t's apex
                let to_u: Vec<usize> = (0..t.apex().n()).map(|w| inv[t.left.apply(w)]).collect();
                let apex = cartesian_lift(t.apex().n(), &map_compose(&to_u, s.left.f()), s.source())?;
                let left = GraphMap::new(apex.clone(), s.source().clone(), map_compose(&to_u, s.left.f()))?;
                let right = GraphMap::new(apex, t.target().clone(), t.right.f().to_vec())?;
                Span::new(left, right, flavor)
            }
        }
    }
}

fn invert(f: &[usize], n: usize) -> Vec<usize> {
    let mut inv = vec![usize::MAX; n];
    for (i, &v) in f.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn map_compose(first: &[usize], second: &[usize]) -> Vec<usize> {
    first.iter().map(|&v| second[v]).collect()
}

/// All vertical-opposite spans from a to b up to span equivalence. The apex is
/// normalized so the backward leg is the identity on vertices.
pub fn vop_hom_spans(a: &Cograph, b: &Cograph) -> Vec<Span> {
    let n = a.n();
    let mut out: Vec<Span> = vec![];
    let mut keys = std::collections::BTreeSet::new();
    // enumerate candidate apexes as subrelations of a, with accretive forward
    // legs; every span is equivalent to one of this shape
    for sub in subrelations(a) {
        for fwd in crate::morphism::hom_maps(&sub, b) {
            if !fwd.is_accretive() {
                continue;
            }
            let left = GraphMap::new(sub.clone(), a.clone(), (0..n).collect()).expect("subrelation inclusion");
            if !left.is_dispersive() {
                continue;
            }
            let key = (sub.clone(), fwd.f().to_vec());
            if keys.insert(key) {
                out.push(Span { left, right: fwd });
            }
        }
    }
    out
}

/// All symmetric subrelations of `a` on the same vertices that are cographs.
fn subrelations(a: &Cograph) -> Vec<Cograph> {
    let n = a.n();
    let mut slots = vec![];
    for i in 0..n {
        for j in i..n {
            if a.has_edge(i, j) {
                slots.push((i, j));
            }
        }
    }
    let mut out = vec![];
    for mask in 0..1u64 << slots.len() {
        let mut rows = vec![0u32; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if let Ok(c) = Cograph::from_rows(n, rows) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::SumKind;
    use crate::cotree::{labeled_cographs, Flavor};
    use crate::morphism::hom_count;

    #[test]
    fn compose_with_identity() {
        let a = Cograph::new(3, &[(0, 1)], &[2]).unwrap();
        let b = Cograph::complete(2);
        for s in vop_hom_spans(&a, &b) {
            let idl = Span::identity(&a, SpanFlavor::Vop);
            let idr = Span::identity(&b, SpanFlavor::Vop);
            assert!(Span::compose(&idl, &s, SpanFlavor::Vop).unwrap().equivalent(&s));
            assert!(Span::compose(&s, &idr, SpanFlavor::Vop).unwrap().equivalent(&s));
        }
    }

    #[test]
    fn paper_pullback_square() {
        // the simplest nontrivial dispersion/accretion square: pulling the
        // collapse of a 2+1 connected sum back along the trivial pair
        let i = Cograph::sum(SumKind::Csum, &Cograph::trivial(2), &Cograph::trivial(1));
        let j = Cograph::sum(SumKind::Csum, &Cograph::trivial(1), &Cograph::trivial(1));
        let f = GraphMap::new(i.clone(), j.clone(), vec![0, 0, 1]).unwrap();
        assert!(f.is_accretive() && f.is_surjective());
        let jp = Cograph::trivial(2);
        let phi = GraphMap::new(jp.clone(), j.clone(), vec![0, 1]).unwrap();
        assert!(phi.is_dispersive());
        // pullback apex: vertices of i paired over j with jp
        let inv = vec![0usize, 1];
        let to_jp: Vec<usize> = (0..3).map(|u| inv[f.apply(u)]).collect();
        let apex = cartesian_lift(3, &to_jp, &jp).unwrap();
        assert_eq!(apex, Cograph::trivial(3));
    }

    #[test]
    fn vop_hom_counts_match_negated_homs() {
        for a in labeled_cographs(2, Flavor::Any) {
            for b in labeled_cographs(2, Flavor::Any) {
                assert_eq!(
                    vop_hom_spans(&a, &b).len(),
                    hom_count(&a.neg(), &b.neg()),
                    "a={a:?} b={b:?}"
                );
            }
        }
    }

    #[test]
    fn vop_composition_associates() {
        let a = Cograph::new(2, &[(0, 1)], &[]).unwrap();
        let b = Cograph::complete_irr(2);
        let c = Cograph::complete_irr(2);
        let d = Cograph::complete(2);
        for s in vop_hom_spans(&a, &b) {
            for t in vop_hom_spans(&b, &c) {
                for u in vop_hom_spans(&c, &d) {
                    let l = Span::compose(&Span::compose(&s, &t, SpanFlavor::Vop).unwrap(), &u, SpanFlavor::Vop).unwrap();
                    let r = Span::compose(&s, &Span::compose(&t, &u, SpanFlavor::Vop).unwrap(), SpanFlavor::Vop).unwrap();
                    assert!(l.equivalent(&r));
                }
            }
        }
    }
}
