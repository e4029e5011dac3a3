//! Isolability objects on finite sets: families of configuration carriers
//! indexed by irreflexive cographs, contravariant along relation-preserving
//! maps by precomposition.
//!
//! Two concrete instances are provided. Point isolation carries a cograph to
//! the maps into a finite set that send edge-related vertices to distinct
//! points. Subset isolation carries it to tuples of subsets disjoint along
//! edges. Skeleta, the 1-coskeleton, and the tensor product wrap any instance.

use crate::cograph::{quad_ok, Cograph};
use crate::morphism::GraphMap;
use crate::{IsolaError, Result};
use std::collections::BTreeSet;
use std::sync::RwLock;

/// One coordinate of a configuration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    /// An element of the underlying finite set, 0-based.
    Atom(u32),
    /// A subset of the underlying finite set, as a bitmask.
    Subset(u32),
    /// A coordinate of a tensor configuration.
    Pair(Box<Value>, Box<Value>),
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Atom(a) => serde_json::json!(a + 1),
            Value::Subset(m) => {
                let elems: Vec<u32> = (0..32).filter(|k| m >> k & 1 == 1).map(|k| k + 1).collect();
                serde_json::json!(elems)
            }
            Value::Pair(a, b) => serde_json::json!([a.to_json(), b.to_json()]),
        }
    }
}

/// A configuration: one value per vertex.
pub type Config = Vec<Value>;

/// A shared, immutable carrier.
pub type Carrier = std::sync::Arc<Vec<Config>>;

/// A functor from irreflexive cographs to finite configuration sets, with
/// restriction given by precomposition with the vertex map.
pub trait IsolabilityObject: Send + Sync {
    /// The carrier over an irreflexive cograph, as a shared sorted set.
    fn carrier(&self, lam: &Cograph) -> Result<Carrier>;

    /// Contravariant restriction along `m`: carries configurations over the
    /// target of `m` to configurations over its source.
    fn restrict(&self, m: &GraphMap, cfg: &Config) -> Result<Config> {
        let tgt_carrier = self.carrier(m.tgt())?;
        if tgt_carrier.binary_search(cfg).is_err() {
            return Err(IsolaError::NotInCarrier);
        }
        let out: Config = m.f().iter().map(|&v| cfg[v].clone()).collect();
        let src_carrier = self.carrier(m.src())?;
        if src_carrier.binary_search(&out).is_err() {
            return Err(IsolaError::NotInCarrier);
        }
        Ok(out)
    }

    /// A short name for reports.
    fn name(&self) -> String;
}

fn require_irreflexive(lam: &Cograph) -> Result<()> {
    if lam.is_irreflexive() {
        Ok(())
    } else {
        Err(IsolaError::NotIrreflexive)
    }
}

/// Carrier cache keyed by the adjacency rows; carriers never change once
/// computed, so concurrent readers are fine.
#[derive(Default)]
pub struct CarrierCache {
    map: RwLock<std::collections::BTreeMap<(usize, Vec<u32>), Carrier>>,
}

impl CarrierCache {
    pub fn get_or_compute<F: FnOnce() -> Result<Vec<Config>>>(
        &self,
        lam: &Cograph,
        compute: F,
    ) -> Result<Carrier> {
        let key = (lam.n(), lam.rows_key());
        if let Some(v) = self.map.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let computed: Carrier = std::sync::Arc::new(compute()?);
        self.map.write().unwrap().insert(key, computed.clone());
        Ok(computed)
    }
}

/// Maps into a finite set separating every edge.
pub struct PointIsolation {
    size: u32,
    cache: CarrierCache,
}

impl PointIsolation {
    pub fn new(size: u32) -> Self {
        PointIsolation { size, cache: CarrierCache::default() }
    }

    pub fn size(&self) -> u32 {
        self.size
    }
}

impl IsolabilityObject for PointIsolation {
    fn carrier(&self, lam: &Cograph) -> Result<Carrier> {
        require_irreflexive(lam)?;
        self.cache.get_or_compute(lam, || {
            let n = lam.n();
            let mut out = vec![];
            if self.size == 0 && n > 0 {
                return Ok(vec![]);
            }
            let mut cur = vec![0u32; n];
            loop {
                let ok = lam.edges().iter().all(|&(a, b)| cur[a] != cur[b]);
                if ok {
                    out.push(cur.iter().map(|&v| Value::Atom(v)).collect());
                }
                let mut i = 0;
                loop {
                    if i == n {
                        out.sort();
                        return Ok(out);
                    }
                    cur[i] += 1;
                    if cur[i] < self.size {
                        break;
                    }
                    cur[i] = 0;
                    i += 1;
                }
            }
        })
    }

    fn name(&self) -> String {
        format!("point[{}]", self.size)
    }
}

/// Tuples of subsets of a finite set, disjoint along every edge. The empty
/// subset is allowed unless the nonempty flag is set.
pub struct SubsetIsolation {
    size: u32,
    nonempty: bool,
    cache: CarrierCache,
}

impl SubsetIsolation {
    pub fn new(size: u32) -> Self {
        SubsetIsolation { size, nonempty: false, cache: CarrierCache::default() }
    }

    pub fn nonempty(size: u32) -> Self {
        SubsetIsolation { size, nonempty: true, cache: CarrierCache::default() }
    }
}

impl IsolabilityObject for SubsetIsolation {
    fn carrier(&self, lam: &Cograph) -> Result<Carrier> {
        require_irreflexive(lam)?;
        self.cache.get_or_compute(lam, || {
            let n = lam.n();
            let total = 1u32 << self.size;
            let start = if self.nonempty { 1 } else { 0 };
            let mut out = vec![];
            if start >= total && n > 0 {
                return Ok(vec![]);
            }
            let mut cur = vec![start; n];
            loop {
                let ok = lam.edges().iter().all(|&(a, b)| cur[a] & cur[b] == 0);
                if ok {
                    out.push(cur.iter().map(|&v| Value::Subset(v)).collect());
                }
                let mut i = 0;
                loop {
                    if i == n {
                        out.sort();
                        return Ok(out);
                    }
                    cur[i] += 1;
                    if cur[i] < total {
                        break;
                    }
                    cur[i] = start;
                    i += 1;
                }
            }
        })
    }

    fn name(&self) -> String {
        format!("subset[{}{}]", self.size, if self.nonempty { ",nonempty" } else { "" })
    }
}

/// All irreflexive cograph supergraphs of `lam` on the same vertices.
pub fn irr_supergraphs(lam: &Cograph) -> Vec<Cograph> {
    let n = lam.n();
    let mut missing = vec![];
    for i in 0..n {
        for j in i + 1..n {
            if !lam.has_edge(i, j) {
                missing.push((i, j));
            }
        }
    }
    let base: Vec<u32> = lam.rows_key();
    let mut out = vec![];
    for mask in 0..1u64 << missing.len() {
        let mut rows = base.clone();
        for (k, &(i, j)) in missing.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if quad_ok(n, &rows) {
            out.push(Cograph::from_rows(n, rows).expect("checked"));
        }
    }
    out
}

/// The k-skeleton: the union of the base carriers over supergraphs of the
/// index with depth at most k.
pub struct Skeleton {
    k: usize,
    base: std::sync::Arc<dyn IsolabilityObject>,
    cache: CarrierCache,
}

/// k-skeleton of an isolability object.
pub fn skeleton(k: usize, base: std::sync::Arc<dyn IsolabilityObject>) -> Skeleton {
    assert!(k >= 1);
    Skeleton { k, base, cache: CarrierCache::default() }
}

impl IsolabilityObject for Skeleton {
    fn carrier(&self, lam: &Cograph) -> Result<Carrier> {
        require_irreflexive(lam)?;
        self.cache.get_or_compute(lam, || {
            let mut out = BTreeSet::new();
            for mu in irr_supergraphs(lam) {
                if mu.depth() <= self.k {
                    for cfg in self.base.carrier(&mu)?.iter() {
                        out.insert(cfg.clone());
                    }
                }
            }
            Ok(out.into_iter().collect())
        })
    }

    fn name(&self) -> String {
        format!("sk{}({})", self.k, self.base.name())
    }
}

/// The 1-coskeleton: the base carrier over the edgeless cograph, regardless of
/// edges. Dispersive restrictions become bijections.
pub struct Coskeleton1 {
    base: std::sync::Arc<dyn IsolabilityObject>,
}

pub fn coskeleton1(base: std::sync::Arc<dyn IsolabilityObject>) -> Coskeleton1 {
    Coskeleton1 { base }
}

impl IsolabilityObject for Coskeleton1 {
    fn carrier(&self, lam: &Cograph) -> Result<Carrier> {
        require_irreflexive(lam)?;
        self.base.carrier(&Cograph::trivial(lam.n()))
    }

    fn name(&self) -> String {
        format!("cosk1({})", self.base.name())
    }
}

/// The tensor product: pairs of unconstrained configurations such that every
/// edge is separated by at least one of the two sides. Separation means
/// membership in the carrier over the single-edge graph.
pub struct TensorObject {
    a: std::sync::Arc<dyn IsolabilityObject>,
    b: std::sync::Arc<dyn IsolabilityObject>,
    cache: CarrierCache,
}

pub fn tensor(a: std::sync::Arc<dyn IsolabilityObject>, b: std::sync::Arc<dyn IsolabilityObject>) -> TensorObject {
    TensorObject { a, b, cache: CarrierCache::default() }
}

fn single_edge_graph(n: usize, e: (usize, usize)) -> Cograph {
    Cograph::new(n, &[e], &[]).expect("single edges are cographs")
}

fn zip_pair(x: &Config, y: &Config) -> Config {
    x.iter()
        .zip(y.iter())
        .map(|(a, b)| Value::Pair(Box::new(a.clone()), Box::new(b.clone())))
        .collect()
}

impl IsolabilityObject for TensorObject {
    fn carrier(&self, lam: &Cograph) -> Result<Carrier> {
        require_irreflexive(lam)?;
        self.cache.get_or_compute(lam, || {
            let n = lam.n();
            let triv = Cograph::trivial(n);
            let xs = self.a.carrier(&triv)?;
            let ys = self.b.carrier(&triv)?;
            let edges = lam.edges();
            let mut x_sep: Vec<Vec<bool>> = vec![vec![true; xs.len()]; edges.len()];
            let mut y_sep: Vec<Vec<bool>> = vec![vec![true; ys.len()]; edges.len()];
            for (ei, &e) in edges.iter().enumerate() {
                let g = single_edge_graph(n, e);
                let cx = self.a.carrier(&g)?;
                for (i, x) in xs.iter().enumerate() {
                    x_sep[ei][i] = cx.binary_search(x).is_ok();
                }
                let cy = self.b.carrier(&g)?;
                for (i, y) in ys.iter().enumerate() {
                    y_sep[ei][i] = cy.binary_search(y).is_ok();
                }
            }
            let mut out = vec![];
            for (i, x) in xs.iter().enumerate() {
                for (j, y) in ys.iter().enumerate() {
                    if (0..edges.len()).all(|ei| x_sep[ei][i] || y_sep[ei][j]) {
                        out.push(zip_pair(x, y));
                    }
                }
            }
            out.sort();
            Ok(out)
        })
    }

    fn name(&self) -> String {
        format!("tensor({},{})", self.a.name(), self.b.name())
    }
}

/// A wrapper that removes one configuration from one carrier; used to watch
/// the law suite catch a seeded corruption.
pub struct CorruptedObject {
    base: std::sync::Arc<dyn IsolabilityObject>,
    target: Cograph,
    drop_index: usize,
}

pub fn corrupt(
    base: std::sync::Arc<dyn IsolabilityObject>,
    target: Cograph,
    drop_index: usize,
) -> CorruptedObject {
    CorruptedObject { base, target, drop_index }
}

impl IsolabilityObject for CorruptedObject {
    fn carrier(&self, lam: &Cograph) -> Result<Carrier> {
        let base = self.base.carrier(lam)?;
        if lam == &self.target && !base.is_empty() {
            let mut out = base.as_ref().clone();
            out.remove(self.drop_index % out.len());
            return Ok(std::sync::Arc::new(out));
        }
        Ok(base)
    }

    fn name(&self) -> String {
        format!("corrupt({})", self.base.name())
    }
}

/// Outcome of a batch of verified identity instances.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the pullback condition for every gluing square up to the vertex
/// bound: a quotient of an induced subgraph against the inclusion of that
/// subgraph, glued to a cograph, must pull carriers back.
pub fn check_regular(obj: &dyn IsolabilityObject, bound: usize) -> Result<CheckReport> {
    let mut checked = 0;
    let mut failures = vec![];
    let mut seen_squares = BTreeSet::new();
    for n in 1..=bound {
        for lamp in crate::cotree::labeled_cographs(n, crate::cotree::Flavor::Irr) {
            for wmask in 0..1u32 << n {
                let w: Vec<usize> = (0..n).filter(|&v| wmask >> v & 1 == 1).collect();
                if w.is_empty() {
                    continue;
                }
                let lam = lamp.induced(&w);
                for part in crate::morphism::partitions(w.len()) {
                    let m = part.iter().copied().max().map_or(0, |x| x + 1);
                    if lam.edges().iter().any(|&(a, b)| part[a] == part[b]) {
                        continue;
                    }
                    for mu in mu_structures(&lam, &part, m) {
                        if let Some((mu_prime, h, incl)) = glue(&lamp, &w, &part, &mu) {
                            if !dedupe_square(&mut seen_squares, &lamp, &w, &part, &mu) {
                                continue;
                            }
                            checked += 1;
                            if let Some(msg) =
                                regular_square_fails(obj, &lamp, &mu, &mu_prime, &w, &part, &h, &incl)?
                            {
                                failures.push(msg);
                                if failures.len() > 4 {
                                    return Ok(CheckReport { checked, failures });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CheckReport { checked, failures })
}

/// Cograph structures on the quotient making the projection a map of
/// irreflexive cographs.
fn mu_structures(lam: &Cograph, part: &[usize], m: usize) -> Vec<Cograph> {
    let mut required = vec![0u32; m];
    for &(a, b) in &lam.edges() {
        required[part[a]] |= 1 << part[b];
        required[part[b]] |= 1 << part[a];
    }
    let mut optional = vec![];
    for i in 0..m {
        for j in i + 1..m {
            if required[i] >> j & 1 == 0 {
                optional.push((i, j));
            }
        }
    }
    let mut out = vec![];
    for mask in 0..1u64 << optional.len() {
        let mut rows = required.clone();
        for (k, &(i, j)) in optional.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if quad_ok(m, &rows) {
            out.push(Cograph::from_rows(m, rows).expect("checked"));
        }
    }
    out
}

/// Glues the quotient target onto the ambient cograph along the subgraph.
/// Returns the glued cograph with the two vertex maps when the gluing is
/// again an irreflexive cograph.
fn glue(
    lamp: &Cograph,
    w: &[usize],
    part: &[usize],
    mu: &Cograph,
) -> Option<(Cograph, Vec<usize>, Vec<usize>)> {
    let n = lamp.n();
    let m = mu.n();
    let outside: Vec<usize> = (0..n).filter(|v| !w.contains(v)).collect();
    let total = m + outside.len();
    if total > crate::cograph::MAX_VERTICES {
        return None;
    }
    let mut h = vec![usize::MAX; n];
    for (i, &v) in w.iter().enumerate() {
        h[v] = part[i];
    }
    for (k, &v) in outside.iter().enumerate() {
        h[v] = m + k;
    }
    let mut rows = vec![0u32; total];
    for a in 0..m {
        for b in 0..m {
            if mu.has_edge(a, b) {
                rows[a] |= 1 << b;
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if lamp.has_edge(a, b) {
                if h[a] == h[b] {
                    return None;
                }
                rows[h[a]] |= 1 << h[b];
                rows[h[b]] |= 1 << h[a];
            }
        }
    }
    if !quad_ok(total, &rows) {
        return None;
    }
    let glued = Cograph::from_rows(total, rows).expect("checked");
    let incl: Vec<usize> = (0..m).collect();
    Some((glued, h, incl))
}

/// Canonical dedup of squares under relabelings of the ambient graph.
fn dedupe_square(
    seen: &mut BTreeSet<Vec<u8>>,
    lamp: &Cograph,
    w: &[usize],
    part: &[usize],
    mu: &Cograph,
) -> bool {
    let n = lamp.n();
    let mut best: Option<Vec<u8>> = None;
    for p in crate::cotree::permutations(n) {
        let mut key = vec![];
        let r = lamp.relabel(&p);
        for row in r.rows_key() {
            key.extend_from_slice(&row.to_le_bytes());
        }
        let mut wp: Vec<(usize, usize)> = w.iter().enumerate().map(|(i, &v)| (p[v], part[i])).collect();
        wp.sort();
        let mut rename = std::collections::BTreeMap::new();
        for &(_, b) in &wp {
            let next = rename.len();
            rename.entry(b).or_insert(next);
        }
        for &(v, b) in &wp {
            key.push(v as u8);
            key.push(rename[&b] as u8);
        }
        let mut me: Vec<(usize, usize)> = mu
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (rename[&a], rename[&b]);
                (x.min(y), x.max(y))
            })
            .collect();
        me.sort();
        for (a, b) in me {
            key.push(a as u8);
            key.push(b as u8);
        }
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
    }
    seen.insert(best.unwrap())
}

#[allow(clippy::too_many_arguments)]
fn regular_square_fails(
    obj: &dyn IsolabilityObject,
    lamp: &Cograph,
    mu: &Cograph,
    mu_prime: &Cograph,
    w: &[usize],
    part: &[usize],
    h: &[usize],
    incl: &[usize],
) -> Result<Option<String>> {
    let c_lamp = obj.carrier(lamp)?;
    let c_mu = obj.carrier(mu)?;
    let c_mup = obj.carrier(mu_prime)?;
    // keys: restriction of an ambient configuration to the subgraph, and of a
    // quotient configuration along the projection
    let key_from_lamp = |cfg: &Config| -> Config { w.iter().map(|&v| cfg[v].clone()).collect() };
    let key_from_mu = |cfg: &Config| -> Config { part.iter().map(|&b| cfg[b].clone()).collect() };
    let mut lamp_groups: std::collections::BTreeMap<Config, usize> = Default::default();
    for cfg in c_lamp.iter() {
        *lamp_groups.entry(key_from_lamp(cfg)).or_default() += 1;
    }
    let mut mu_groups: std::collections::BTreeMap<Config, usize> = Default::default();
    for cfg in c_mu.iter() {
        *mu_groups.entry(key_from_mu(cfg)).or_default() += 1;
    }
    let mut expected = 0usize;
    for (k, c) in &lamp_groups {
        if let Some(c2) = mu_groups.get(k) {
            expected += c * c2;
        }
    }
    let mut images = BTreeSet::new();
    for cfg in c_mup.iter() {
        let to_lamp: Config = h.iter().map(|&x| cfg[x].clone()).collect();
        let to_mu: Config = incl.iter().map(|&x| cfg[x].clone()).collect();
        if c_lamp.binary_search(&to_lamp).is_err() || c_mu.binary_search(&to_mu).is_err() {
            return Ok(Some(format!(
                "square over {lamp:?} / {mu:?}: image of {cfg:?} escapes the fiber product"
            )));
        }
        if key_from_lamp(&to_lamp) != key_from_mu(&to_mu) {
            return Ok(Some(format!(
                "square over {lamp:?} / {mu:?}: restrictions of {cfg:?} disagree on the overlap"
            )));
        }
        images.insert((to_lamp, to_mu));
    }
    if images.len() != c_mup.len() {
        return Ok(Some(format!("square over {lamp:?} / {mu:?}: canonical map is not injective")));
    }
    if expected != c_mup.len() {
        return Ok(Some(format!(
            "square over {lamp:?} / {mu:?} (w={w:?}, part={part:?}): glued carrier has {} points, fiber product has {expected}",
            c_mup.len()
        )));
    }
    Ok(None)
}

/// Additivity: the carrier of a disconnected sum is the product of the
/// carriers, via the two restriction maps.
pub fn check_additive(obj: &dyn IsolabilityObject, bound: usize) -> Result<CheckReport> {
    let mut checked = 0;
    let mut failures = vec![];
    for total in 0..=bound {
        for na in 0..=total {
            let nb = total - na;
            for a in crate::cotree::enumerate_cographs(na, crate::cotree::Flavor::Irr) {
                for b in crate::cotree::enumerate_cographs(nb, crate::cotree::Flavor::Irr) {
                    checked += 1;
                    let sum = Cograph::sum(crate::cograph::SumKind::Dsum, &a, &b);
                    let cs = obj.carrier(&sum)?;
                    let ca = obj.carrier(&a)?;
                    let cb = obj.carrier(&b)?;
                    if cs.len() != ca.len() * cb.len() {
                        failures.push(format!(
                            "additivity fails at {a:?} + {b:?}: {} vs {} * {}",
                            cs.len(),
                            ca.len(),
                            cb.len()
                        ));
                        continue;
                    }
                    let mut seen = BTreeSet::new();
                    for cfg in cs.iter() {
                        let xa: Config = cfg[..na].to_vec();
                        let xb: Config = cfg[na..].to_vec();
                        if ca.binary_search(&xa).is_err() || cb.binary_search(&xb).is_err() {
                            failures.push(format!("additivity: projection of {cfg:?} escapes the factors"));
                            break;
                        }
                        seen.insert((xa, xb));
                    }
                    if seen.len() != cs.len() {
                        failures.push(format!("additivity: projections collide over {a:?} + {b:?}"));
                    }
                }
            }
        }
    }
    Ok(CheckReport { checked, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn edge2() -> Cograph {
        Cograph::new(2, &[(0, 1)], &[]).unwrap()
    }

    #[test]
    fn point_carriers() {
        let p = PointIsolation::new(2);
        assert_eq!(p.carrier(&edge2()).unwrap().len(), 2);
        assert_eq!(p.carrier(&Cograph::trivial(2)).unwrap().len(), 4);
        assert!(p.carrier(&Cograph::complete(1)).is_err());
    }

    #[test]
    fn subset_carriers() {
        let s = SubsetIsolation::new(2);
        assert_eq!(s.carrier(&edge2()).unwrap().len(), 9);
        let sn = SubsetIsolation::nonempty(2);
        assert_eq!(sn.carrier(&edge2()).unwrap().len(), 2);
    }

    #[test]
    fn restriction_examples() {
        let p = PointIsolation::new(3);
        // along the accretive collapse, restriction duplicates: the diagonal
        let collapse = GraphMap::new(Cograph::trivial(2), Cograph::trivial(1), vec![0, 0]).unwrap();
        let cfg = vec![Value::Atom(1)];
        assert_eq!(p.restrict(&collapse, &cfg).unwrap(), vec![Value::Atom(1), Value::Atom(1)]);
        // along an inclusion, restriction projects
        let incl = GraphMap::new(Cograph::trivial(1), edge2(), vec![1]).unwrap();
        let cfg = vec![Value::Atom(0), Value::Atom(2)];
        assert_eq!(p.restrict(&incl, &cfg).unwrap(), vec![Value::Atom(2)]);
        // identity
        let idm = GraphMap::identity(&edge2());
        assert_eq!(p.restrict(&idm, &cfg).unwrap(), cfg);
        // ill-typed configurations are rejected
        let bad = vec![Value::Atom(0), Value::Atom(0)];
        assert!(p.restrict(&idm, &bad).is_err());
    }

    #[test]
    fn regularity_of_both_instances() {
        let p = PointIsolation::new(2);
        let r = check_regular(&p, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checked > 0);
        let s = SubsetIsolation::new(2);
        let r = check_regular(&s, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn corrupted_instance_fails_regularity() {
        let base: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(2));
        let c = corrupt(base, Cograph::trivial(2), 0);
        let r = check_regular(&c, 3).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn additivity_of_both_instances() {
        let p = PointIsolation::new(3);
        let r = check_additive(&p, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let s = SubsetIsolation::new(2);
        let r = check_additive(&s, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn sk2_of_subset_is_not_additive() {
        let base: Arc<dyn IsolabilityObject> = Arc::new(SubsetIsolation::new(2));
        let sk = skeleton(2, base);
        let r = check_additive(&sk, 4).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn sk2_excludes_the_subset_witness_at_paw3() {
        let base: Arc<dyn IsolabilityObject> = Arc::new(SubsetIsolation::new(2));
        let sk = skeleton(2, base.clone());
        let paw3 = crate::cograph::paw(3);
        let witness: Config = vec![Value::Subset(0b01), Value::Subset(0b10), Value::Subset(0b11)];
        let full = base.carrier(&paw3).unwrap();
        assert!(full.binary_search(&witness).is_ok());
        let sk_carrier = sk.carrier(&paw3).unwrap();
        assert!(sk_carrier.binary_search(&witness).is_err());
    }

    #[test]
    fn sk2_fixes_point_isolation() {
        let base: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(2));
        let sk = skeleton(2, base.clone());
        for n in 0..=4 {
            for lam in crate::cotree::enumerate_cographs(n, crate::cotree::Flavor::Irr) {
                assert_eq!(sk.carrier(&lam).unwrap(), base.carrier(&lam).unwrap());
            }
        }
    }

    #[test]
    fn coskeleton_forgets_edges() {
        let base: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(2));
        let ck = coskeleton1(base.clone());
        assert_eq!(ck.carrier(&edge2()).unwrap().len(), 4);
        assert_eq!(ck.carrier(&Cograph::trivial(2)).unwrap(), base.carrier(&Cograph::trivial(2)).unwrap());
        // dispersive restrictions become bijections
        let disp = GraphMap::new(Cograph::trivial(2), edge2(), vec![0, 1]).unwrap();
        let mut images = BTreeSet::new();
        for cfg in ck.carrier(&edge2()).unwrap().iter() {
            images.insert(ck.restrict(&disp, cfg).unwrap());
        }
        assert_eq!(images.len(), ck.carrier(&Cograph::trivial(2)).unwrap().len());
    }

    #[test]
    fn tensor_excludes_double_diagonals() {
        let x: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(2));
        let y: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(2));
        let t = tensor(x, y);
        assert_eq!(t.carrier(&edge2()).unwrap().len(), 12);
    }

    #[test]
    fn tensor_with_one_point_object_is_identity_on_carrier_sizes() {
        let x: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(3));
        let unit: Arc<dyn IsolabilityObject> = Arc::new(PointIsolation::new(1));
        let t = tensor(x.clone(), unit);
        for n in 0..=3 {
            for lam in crate::cotree::enumerate_cographs(n, crate::cotree::Flavor::Irr) {
                assert_eq!(t.carrier(&lam).unwrap().len(), x.carrier(&lam).unwrap().len());
            }
        }
    }
}
