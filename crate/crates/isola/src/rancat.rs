//! The truncated unital Ran category of a configuration family: objects are
//! configurations over complete irreflexive cographs, morphisms are spans with
//! an accretive backward leg over a set map and a dispersive forward leg,
//! composed through dispersion/accretion pullbacks.

use crate::cograph::Cograph;
use crate::morphism::GraphMap;
use crate::span::{Span, SpanFlavor};
use crate::stratline::WeakOrder;
use crate::{IsolaError, Result};
use std::collections::BTreeMap;

/// A finite category presented by objects, labeled morphisms, and a full
/// composition table.
#[derive(Debug, Clone)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    /// composition[(f, g)] = g after f, keyed on composable pairs only
    pub composition: BTreeMap<(usize, usize), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
}

impl FiniteCategory {
    pub fn hom_count(&self, src: usize, tgt: usize) -> usize {
        self.morphisms.iter().filter(|m| m.src == src && m.tgt == tgt).count()
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    /// Unit and associativity laws plus closure of the table.
    pub fn verify(&self) -> Result<()> {
        for (o, &i) in self.identities.iter().enumerate() {
            let m = &self.morphisms[i];
            if m.src != o || m.tgt != o {
                return Err(IsolaError::Invalid(format!("identity of object {o} has wrong endpoints")));
            }
        }
        for (f, mf) in self.morphisms.iter().enumerate() {
            let idl = self.identities[mf.src];
            let idr = self.identities[mf.tgt];
            if self.composition.get(&(idl, f)) != Some(&f) {
                return Err(IsolaError::Invalid(format!("left unit fails at morphism {f}")));
            }
            if self.composition.get(&(f, idr)) != Some(&f) {
                return Err(IsolaError::Invalid(format!("right unit fails at morphism {f}")));
            }
        }
        for (&(f, g), &h) in &self.composition {
            let (mf, mg, mh) = (&self.morphisms[f], &self.morphisms[g], &self.morphisms[h]);
            if mf.tgt != mg.src || mh.src != mf.src || mh.tgt != mg.tgt {
                return Err(IsolaError::Invalid(format!("composition table entry ({f},{g}) is ill-typed")));
            }
        }
        // closure: every composable pair has an entry
        for (f, mf) in self.morphisms.iter().enumerate() {
            for (g, mg) in self.morphisms.iter().enumerate() {
                if mf.tgt == mg.src && !self.composition.contains_key(&(f, g)) {
                    return Err(IsolaError::Invalid(format!("missing composite for ({f},{g})")));
                }
            }
        }
        // associativity over all composable triples
        for (&(f, g), &fg) in &self.composition {
            for (h, mh) in self.morphisms.iter().enumerate() {
                if self.morphisms[g].tgt != mh.src {
                    continue;
                }
                let gh = self.composition[&(g, h)];
                let left = self.composition[&(fg, h)];
                let right = self.composition[&(f, gh)];
                if left != right {
                    return Err(IsolaError::Invalid(format!("associativity fails at ({f},{g},{h})")));
                }
            }
        }
        Ok(())
    }

    /// Structural equality on labels: same objects, same labeled hom sets,
    /// and the same composition table under the label matching.
    pub fn same_presentation(&self, other: &FiniteCategory) -> bool {
        if self.objects != other.objects {
            return false;
        }
        let key = |c: &FiniteCategory, i: usize| -> (usize, usize, String) {
            let m = &c.morphisms[i];
            (m.src, m.tgt, m.label.clone())
        };
        let mut mine: Vec<(usize, usize, String)> = (0..self.morphisms.len()).map(|i| key(self, i)).collect();
        let mut theirs: Vec<(usize, usize, String)> = (0..other.morphisms.len()).map(|i| key(other, i)).collect();
        mine.sort();
        theirs.sort();
        if mine != theirs {
            return false;
        }
        let index_by_key = |c: &FiniteCategory| -> BTreeMap<(usize, usize, String), usize> {
            (0..c.morphisms.len()).map(|i| (key(c, i), i)).collect()
        };
        let mi = index_by_key(self);
        let ti = index_by_key(other);
        for (&(f, g), &h) in &self.composition {
            let fk = key(self, f);
            let gk = key(self, g);
            let hk = key(self, h);
            match other.composition.get(&(ti[&fk], ti[&gk])) {
                Some(&h2) if key(other, h2) == hk => {}
                _ => return false,
            }
        }
        let _ = mi;
        true
    }

    pub fn to_json(&self) -> serde_json::Value {
        let homs: Vec<serde_json::Value> = self
            .morphisms
            .iter()
            .map(|m| serde_json::json!({"src": self.objects[m.src], "tgt": self.objects[m.tgt], "label": m.label}))
            .collect();
        let comp: Vec<serde_json::Value> = self
            .composition
            .iter()
            .map(|(&(f, g), &h)| serde_json::json!([f, g, h]))
            .collect();
        let mut hom_counts: Vec<serde_json::Value> = vec![];
        for s in 0..self.objects.len() {
            for t in 0..self.objects.len() {
                let c = self.hom_count(s, t);
                if c > 0 {
                    hom_counts.push(serde_json::json!([self.objects[s], self.objects[t], c]));
                }
            }
        }
        serde_json::json!({
            "objects": self.objects,
            "morphisms": homs,
            "hom_counts": hom_counts,
            "composition": comp,
        })
    }
}

/// A family of configurations over irreflexive cographs with contravariant
/// restriction and a partial order on each carrier. Discrete families use
/// equality.
pub trait RanFamily {
    type Elem: Clone + Ord + std::fmt::Debug;

    fn carrier(&self, lam: &Cograph) -> Result<Vec<Self::Elem>>;

    /// Restriction along any map, contravariantly.
    fn restrict_along(&self, m: &GraphMap, elem: &Self::Elem) -> Self::Elem;

    fn fiber_leq(&self, lam: &Cograph, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn label(&self, e: &Self::Elem) -> String;
}

/// The line family: weak orders separating the edges of the index.
pub struct LineRanFamily;

impl RanFamily for LineRanFamily {
    type Elem = WeakOrder;

    fn carrier(&self, lam: &Cograph) -> Result<Vec<WeakOrder>> {
        Ok(crate::stratline::all_weak_orders(lam.n())
            .into_iter()
            .filter(|w| lam.edges().iter().all(|&(a, b)| w.separates(a, b)))
            .collect())
    }

    fn restrict_along(&self, m: &GraphMap, elem: &WeakOrder) -> WeakOrder {
        elem.pullback(m.f())
    }

    fn fiber_leq(&self, _lam: &Cograph, a: &WeakOrder, b: &WeakOrder) -> bool {
        a.refines_into(b)
    }

    fn label(&self, e: &WeakOrder) -> String {
        e.label()
    }
}

/// A discrete family built from an isolability object: configurations with
/// restriction by precomposition, ordered by equality.
pub struct ObjectRanFamily {
    pub object: std::sync::Arc<dyn crate::isolability::IsolabilityObject>,
}

impl RanFamily for ObjectRanFamily {
    type Elem = crate::isolability::Config;

    fn carrier(&self, lam: &Cograph) -> Result<Vec<crate::isolability::Config>> {
        Ok(self.object.carrier(lam)?.as_ref().clone())
    }

    fn restrict_along(&self, m: &GraphMap, elem: &crate::isolability::Config) -> crate::isolability::Config {
        m.f().iter().map(|&v| elem[v].clone()).collect()
    }

    fn fiber_leq(&self, _lam: &Cograph, a: &crate::isolability::Config, b: &crate::isolability::Config) -> bool {
        a == b
    }

    fn label(&self, e: &crate::isolability::Config) -> String {
        let parts: Vec<String> = e.iter().map(|v| v.to_json().to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// One morphism datum of the truncated Ran category before numbering.
struct RanMorphism<E> {
    src: usize,
    tgt: usize,
    /// backward set map from the target index into the source index
    base: Vec<usize>,
    apex_elem: E,
}

/// Builds the unital Ran category truncated at the given object size.
///
/// Objects are pairs of a size n <= max_n and a carrier element over the
/// complete irreflexive cograph on n vertices. A morphism (n,x) -> (m,y) is a
/// span whose backward leg is the accretive lift of a set map a from m to n
/// (its apex is the apartness pattern of a, carrying the cartesian transport
/// of x) and whose forward leg is a fiber morphism over the dispersive map
/// into the complete cograph on m, which exists exactly when the transported
/// element precedes y.
pub fn ran_unital<F: RanFamily>(family: &F, max_n: usize) -> Result<FiniteCategory> {
    if max_n > 4 {
        return Err(IsolaError::BoundExceeded("the truncated Ran category is bounded at size 4".into()));
    }
    let mut objects: Vec<(usize, F::Elem, String)> = vec![];
    for n in 0..=max_n {
        let kn = Cograph::complete_irr(n);
        for x in family.carrier(&kn)? {
            let label = format!("{}:{}", n, family.label(&x));
            objects.push((n, x, label));
        }
    }
    let mut morphisms: Vec<RanMorphism<F::Elem>> = vec![];
    for (si, (n, x, _)) in objects.iter().enumerate() {
        for (ti, (m, y, _)) in objects.iter().enumerate() {
            for base in all_maps(*m, *n) {
                let apex = crate::morphism::cartesian_lift(*m, &base, &Cograph::complete_irr(*n))
                    .expect("pullbacks of complete relations");
                let back = GraphMap::new(apex.clone(), Cograph::complete_irr(*n), base.clone())
                    .expect("accretive lift over the base map");
                debug_assert!(back.is_accretive());
                let z = family.restrict_along(&back, x);
                let fwd_disp = GraphMap::new(apex.clone(), Cograph::complete_irr(*m), (0..*m).collect())
                    .expect("identity vertex maps into the complete cograph are dispersive");
                let y_restricted = family.restrict_along(&fwd_disp, y);
                if family.fiber_leq(&apex, &z, &y_restricted) {
                    morphisms.push(RanMorphism { src: si, tgt: ti, base, apex_elem: z });
                }
            }
        }
    }
    // identities: the identity base map
    let mut identities = vec![usize::MAX; objects.len()];
    for (i, m) in morphisms.iter().enumerate() {
        if m.src == m.tgt && m.base.iter().enumerate().all(|(a, &b)| a == b) {
            identities[m.src] = i;
        }
    }
    if identities.iter().any(|&i| i == usize::MAX) {
        return Err(IsolaError::Invalid("missing identity in the Ran category".into()));
    }
    // composition via span composition over the base cographs
    let index: BTreeMap<(usize, usize, Vec<usize>), usize> = morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| ((m.src, m.tgt, m.base.clone()), i))
        .collect();
    let mut composition = BTreeMap::new();
    for (fi, f) in morphisms.iter().enumerate() {
        for (gi, g) in morphisms.iter().enumerate() {
            if f.tgt != g.src {
                continue;
            }
            let (n_f, _, _) = &objects[f.src];
            let (m_f, _, _) = &objects[f.tgt];
            let (k_g, _, _) = &objects[g.tgt];
            // spans composed through the dispersion/accretion pullback
            let sf = base_span(*n_f, *m_f, &f.base);
            let sg = base_span(*m_f, *k_g, &g.base);
            let comp = Span::compose(&sf, &sg, SpanFlavor::Hop).expect("composable base spans");
            let base: Vec<usize> = comp.left().f().to_vec();
            let hi = *index
                .get(&(f.src, g.tgt, base))
                .ok_or_else(|| IsolaError::Invalid("composite span is not a morphism".into()))?;
            composition.insert((fi, gi), hi);
        }
    }
    let labels: Vec<String> = objects.iter().map(|(_, _, l)| l.clone()).collect();
    let morphs: Vec<Morphism> = morphisms
        .iter()
        .map(|m| Morphism {
            src: m.src,
            tgt: m.tgt,
            label: format!(
                "a=[{}] z={}",
                m.base.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","),
                family.label(&m.apex_elem)
            ),
        })
        .collect();
    Ok(FiniteCategory { objects: labels, morphisms: morphs, identities, composition })
}

/// The horizontal span over a base set map: backward accretive over the map,
/// forward dispersive into the complete cograph.
fn base_span(n: usize, m: usize, base: &[usize]) -> Span {
    let apex = crate::morphism::cartesian_lift(m, base, &Cograph::complete_irr(n)).expect("pullback");
    let back = GraphMap::new(apex.clone(), Cograph::complete_irr(n), base.to_vec()).expect("accretive leg");
    let fwd = GraphMap::new(apex, Cograph::complete_irr(m), (0..m).collect()).expect("dispersive leg");
    Span::new(back, fwd, SpanFlavor::Hop).expect("hop span")
}

fn all_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    if from == 0 {
        return vec![vec![]];
    }
    if to == 0 {
        return vec![];
    }
    let mut out = vec![];
    let mut cur = vec![0usize; from];
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == from {
                return out;
            }
            cur[i] += 1;
            if cur[i] < to {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// The number of morphisms between the standard chain objects, computed by
/// span enumeration without building the whole category.
pub fn ran_hom_count_std(n: usize, m: usize) -> usize {
    let family = LineRanFamily;
    let x = standard_order(n);
    let y = standard_order(m);
    let mut count = 0;
    for base in all_maps(m, n) {
        let apex = crate::morphism::cartesian_lift(m, &base, &Cograph::complete_irr(n)).expect("pullback");
        let back = GraphMap::new(apex.clone(), Cograph::complete_irr(n), base.clone()).expect("leg");
        let z = family.restrict_along(&back, &x);
        let fwd = GraphMap::new(apex.clone(), Cograph::complete_irr(m), (0..m).collect()).expect("leg");
        let w = family.restrict_along(&fwd, &y);
        if family.fiber_leq(&apex, &z, &w) {
            count += 1;
        }
    }
    count
}

/// The linear order 1 < 2 < ... < n as a weak order.
pub fn standard_order(n: usize) -> WeakOrder {
    WeakOrder::new((0..n).map(|v| vec![v]).collect()).expect("singleton blocks")
}

/// Binomial coefficient, the expected hom count.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_counts_between_standard_orders() {
        assert_eq!(ran_hom_count_std(2, 1), 2);
        assert_eq!(ran_hom_count_std(1, 2), 1);
        for n in 0..=4 {
            for m in 0..=4 {
                let expected = if n == 0 { usize::from(m == 0) } else { binomial(n + m - 1, m) };
                assert_eq!(ran_hom_count_std(n, m), expected, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn truncated_line_category_is_a_category() {
        let cat = ran_unital(&LineRanFamily, 3).unwrap();
        cat.verify().unwrap();
        // objects over size n are the linear orders
        for n in 0..=3usize {
            let count = cat.objects.iter().filter(|o| o.starts_with(&format!("{n}:"))).count();
            assert_eq!(count, (1..=n).product::<usize>().max(1));
        }
    }

    #[test]
    fn point_family_category() {
        let object: std::sync::Arc<dyn crate::isolability::IsolabilityObject> =
            std::sync::Arc::new(crate::isolability::PointIsolation::new(3));
        let cat = ran_unital(&ObjectRanFamily { object }, 2).unwrap();
        cat.verify().unwrap();
        // objects: 1 empty + 3 singletons + 6 ordered distinct pairs
        assert_eq!(cat.objects.len(), 10);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(ran_unital(&LineRanFamily, 5).is_err());
    }
}
