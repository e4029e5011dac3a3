//! Set-level factorization checks: families over the attached subcategory,
//! the ravioli construction, Hecke families of bundle modifications, and the
//! Grassmannian fiber.
//!
//! A family assigns to every nonempty irreflexive cograph a finite carrier
//! with a projection to point configurations, restricts along surjections, and
//! splits over connected sums. The two factorization conditions are verified
//! by explicit bijection at desk scale.

use crate::cograph::{Cograph, SumKind};
use crate::morphism::GraphMap;
use crate::{IsolaError, Result};
use std::collections::{BTreeMap, BTreeSet};

/// A finite set with a finite fiber over each point; bundles are the sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleData {
    fibers: Vec<u32>,
}

impl BundleData {
    pub fn new(fibers: Vec<u32>) -> Self {
        BundleData { fibers }
    }

    pub fn constant(base_size: usize, fiber: u32) -> Self {
        BundleData { fibers: vec![fiber; base_size] }
    }

    pub fn base_size(&self) -> usize {
        self.fibers.len()
    }

    pub fn fiber(&self, x: usize) -> u32 {
        self.fibers[x]
    }

    /// All global sections. Nonempty exactly when every fiber is nonempty.
    pub fn bundles(&self) -> Vec<Vec<u32>> {
        let n = self.fibers.len();
        if self.fibers.iter().any(|&f| f == 0) && n > 0 {
            return vec![];
        }
        let mut out = vec![];
        let mut cur = vec![0u32; n];
        loop {
            out.push(cur.clone());
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < self.fibers[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

/// A point of the doubled space: either a common point off the configuration
/// or one of the two copies of a configuration point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RavioliPoint {
    Common(usize),
    Split(usize, u8),
}

impl RavioliPoint {
    pub fn collapse(&self) -> usize {
        match self {
            RavioliPoint::Common(x) | RavioliPoint::Split(x, _) => *x,
        }
    }
}

/// The space obtained by doubling the base along the image of a configuration,
/// with its collapse to the base and the two inclusions of the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ravioli {
    base_size: usize,
    doubled: Vec<usize>,
}

impl Ravioli {
    pub fn points(&self) -> Vec<RavioliPoint> {
        let mut out = vec![];
        for x in 0..self.base_size {
            if self.doubled.binary_search(&x).is_ok() {
                out.push(RavioliPoint::Split(x, 1));
                out.push(RavioliPoint::Split(x, 2));
            } else {
                out.push(RavioliPoint::Common(x));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.base_size + self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The inclusion of the base on the given side (1 or 2).
    pub fn include(&self, side: u8, x: usize) -> RavioliPoint {
        if self.doubled.binary_search(&x).is_ok() {
            RavioliPoint::Split(x, side)
        } else {
            RavioliPoint::Common(x)
        }
    }

    pub fn doubled(&self) -> &[usize] {
        &self.doubled
    }
}

/// The ravioli space of a separating configuration: the base with the image
/// of the configuration doubled.
pub fn ravioli(base_size: usize, lam: &Cograph, z: &[usize]) -> Result<Ravioli> {
    if !lam.is_irreflexive() {
        return Err(IsolaError::NotIrreflexive);
    }
    if z.len() != lam.n() {
        return Err(IsolaError::Invalid("configuration length must match the index".into()));
    }
    for &x in z {
        if x >= base_size {
            return Err(IsolaError::VertexOutOfRange(x, base_size));
        }
    }
    for &(a, b) in &lam.edges() {
        if z[a] == z[b] {
            return Err(IsolaError::NotInCarrier);
        }
    }
    let mut doubled: Vec<usize> = z.to_vec();
    doubled.sort_unstable();
    doubled.dedup();
    Ok(Ravioli { base_size, doubled })
}

/// Sections of a bundle over the doubled space.
pub fn ravioli_sections(bd: &BundleData, r: &Ravioli) -> Vec<BTreeMap<RavioliPoint, u32>> {
    let pts = r.points();
    let mut out = vec![];
    let sizes: Vec<u32> = pts.iter().map(|p| bd.fiber(p.collapse())).collect();
    if sizes.iter().any(|&s| s == 0) && !pts.is_empty() {
        return vec![];
    }
    let mut cur = vec![0u32; pts.len()];
    loop {
        out.push(pts.iter().cloned().zip(cur.iter().copied()).collect());
        let mut i = 0;
        loop {
            if i == pts.len() {
                return out;
            }
            cur[i] += 1;
            if cur[i] < sizes[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// A family over the attached subcategory, projecting to point configurations
/// and optionally to a pair of object labels for groupoid checks.
pub trait AttachedFamily {
    type Elem: Clone + Ord + std::fmt::Debug;

    /// Carrier over a nonempty irreflexive cograph.
    fn carrier(&self, lam: &Cograph) -> Result<Vec<Self::Elem>>;

    /// Projection to the configuration.
    fn project(&self, lam: &Cograph, e: &Self::Elem) -> Vec<usize>;

    /// The pair of object labels, for groupoid checks, in (first, second)
    /// order.
    fn object_pair(&self, lam: &Cograph, e: &Self::Elem) -> Option<(String, String)>;

    /// Restriction along a surjective map of the attached subcategory.
    fn restrict_surjection(&self, f: &GraphMap, e: &Self::Elem) -> Self::Elem;

    /// The two restrictions over a connected sum: the part on the first block
    /// and the part on the second. For groupoid families the first-object
    /// label of the left part must match the second-object label of the right
    /// part.
    fn split_csum(&self, left: &Cograph, right: &Cograph, e: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Restriction along an arbitrary attached map, factored through its
    /// image: split off the attached complement, then restrict along the
    /// surjection onto the image.
    fn restrict_attached(&self, f: &GraphMap, e: &Self::Elem) -> Result<Self::Elem> {
        if !f.is_attached() {
            return Err(IsolaError::Invalid("map is not attached".into()));
        }
        let tgt = f.tgt();
        let mut img: Vec<usize> = f.f().to_vec();
        img.sort_unstable();
        img.dedup();
        let restricted = if img.len() == tgt.n() {
            e.clone()
        } else {
            let rest: Vec<usize> = (0..tgt.n()).filter(|v| img.binary_search(v).is_err()).collect();
            let left = tgt.induced(&img);
            let right = tgt.induced(&rest);
            // reorder the carrier element to the block layout before splitting
            let perm: Vec<usize> = img.iter().chain(rest.iter()).copied().collect();
            let reordered = self.reorder(tgt, &perm, e)?;
            self.split_csum(&left, &right, &reordered).0
        };
        let img_graph = tgt.induced(&img);
        let surj: Vec<usize> = f.f().iter().map(|v| img.binary_search(v).unwrap()).collect();
        let fmap = GraphMap::new(f.src().clone(), img_graph, surj)?;
        Ok(self.restrict_surjection(&fmap, &restricted))
    }

    /// Transport along a relabeling of the index: `perm[i]` is the vertex of
    /// `lam` placed at position i of the relabeled index.
    fn reorder(&self, lam: &Cograph, perm: &[usize], e: &Self::Elem) -> Result<Self::Elem>;
}

/// How the observer worked into a Hecke family reads configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observer {
    /// Configurations are points; the modified region is the image.
    Points,
    /// Configurations are subsets (bitmasks); the modified region is their
    /// union, the empty subset optionally excluded.
    Subsets { nonempty: bool },
}

/// The Hecke family of a bundle: triples of a configuration and two bundles
/// agreeing off the modified region.
pub struct HeckeFamily {
    pub bd: BundleData,
    pub observer: Observer,
}

/// A carrier element of a Hecke family.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeckeElem {
    pub z: Vec<u32>,
    pub e1: Vec<u32>,
    pub e2: Vec<u32>,
}

impl HeckeFamily {
    pub fn new(bd: BundleData, observer: Observer) -> Self {
        HeckeFamily { bd, observer }
    }

    fn configs(&self, lam: &Cograph) -> Vec<Vec<u32>> {
        let n = lam.n();
        let base = self.bd.base_size() as u32;
        let (lo, hi) = match self.observer {
            Observer::Points => (0u32, base),
            Observer::Subsets { nonempty } => (u32::from(nonempty), 1u32 << base),
        };
        let mut out = vec![];
        if n == 0 {
            return vec![vec![]];
        }
        if lo >= hi {
            return vec![];
        }
        let mut cur = vec![lo; n];
        loop {
            let ok = lam.edges().iter().all(|&(a, b)| match self.observer {
                Observer::Points => cur[a] != cur[b],
                Observer::Subsets { .. } => cur[a] & cur[b] == 0,
            });
            if ok {
                out.push(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < hi {
                    break;
                }
                cur[i] = lo;
                i += 1;
            }
        }
    }

    /// The set of base points covered by the configuration.
    fn region(&self, z: &[u32]) -> Vec<usize> {
        let mut out: Vec<usize> = match self.observer {
            Observer::Points => z.iter().map(|&x| x as usize).collect(),
            Observer::Subsets { .. } => {
                let mut mask = 0u32;
                for &m in z {
                    mask |= m;
                }
                (0..self.bd.base_size()).filter(|&k| mask >> k & 1 == 1).collect()
            }
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl AttachedFamily for HeckeFamily {
    type Elem = HeckeElem;

    fn carrier(&self, lam: &Cograph) -> Result<Vec<HeckeElem>> {
        if !lam.is_irreflexive() {
            return Err(IsolaError::NotIrreflexive);
        }
        if lam.n() == 0 {
            return Err(IsolaError::Invalid("attached families live over nonempty cographs".into()));
        }
        let bundles = self.bd.bundles();
        let mut out = vec![];
        for z in self.configs(lam) {
            let region = self.region(&z);
            for e1 in &bundles {
                for e2 in &bundles {
                    let agree = (0..self.bd.base_size())
                        .all(|x| region.binary_search(&x).is_ok() || e1[x] == e2[x]);
                    if agree {
                        out.push(HeckeElem { z: z.clone(), e1: e1.clone(), e2: e2.clone() });
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn project(&self, _lam: &Cograph, e: &HeckeElem) -> Vec<usize> {
        e.z.iter().map(|&x| x as usize).collect()
    }

    fn object_pair(&self, _lam: &Cograph, e: &HeckeElem) -> Option<(String, String)> {
        Some((format!("{:?}", e.e1), format!("{:?}", e.e2)))
    }

    fn restrict_surjection(&self, f: &GraphMap, e: &HeckeElem) -> HeckeElem {
        let z = f.f().iter().map(|&v| e.z[v]).collect();
        HeckeElem { z, e1: e.e1.clone(), e2: e.e2.clone() }
    }

    fn split_csum(&self, left: &Cograph, right: &Cograph, e: &HeckeElem) -> (HeckeElem, HeckeElem) {
        let zl: Vec<u32> = e.z[..left.n()].to_vec();
        let zr: Vec<u32> = e.z[left.n()..left.n() + right.n()].to_vec();
        let rl = self.region(&zl);
        let rr = self.region(&zr);
        // the mediating bundle: the target bundle on the right region, the
        // source bundle elsewhere
        let mid: Vec<u32> = (0..self.bd.base_size())
            .map(|x| if rr.binary_search(&x).is_ok() { e.e2[x] } else { e.e1[x] })
            .collect();
        let _ = rl;
        (
            HeckeElem { z: zl, e1: mid.clone(), e2: e.e2.clone() },
            HeckeElem { z: zr, e1: e.e1.clone(), e2: mid },
        )
    }

    fn reorder(&self, _lam: &Cograph, perm: &[usize], e: &HeckeElem) -> Result<HeckeElem> {
        let z = perm.iter().map(|&v| e.z[v]).collect();
        Ok(HeckeElem { z, e1: e.e1.clone(), e2: e.e2.clone() })
    }
}

/// The restriction of the additive configuration family of a subset of the
/// base: separating tuples valued in the subset, projecting by inclusion.
/// With the full subset this is the identity family on configurations.
pub struct SubobjectFamily {
    pub base_size: usize,
    pub subset: Vec<usize>,
}

impl SubobjectFamily {
    pub fn full(base_size: usize) -> Self {
        SubobjectFamily { base_size, subset: (0..base_size).collect() }
    }
}

impl AttachedFamily for SubobjectFamily {
    type Elem = Vec<u32>;

    fn carrier(&self, lam: &Cograph) -> Result<Vec<Vec<u32>>> {
        if !lam.is_irreflexive() {
            return Err(IsolaError::NotIrreflexive);
        }
        if lam.n() == 0 {
            return Err(IsolaError::Invalid("attached families live over nonempty cographs".into()));
        }
        let mut out: Vec<Vec<u32>> = point_configs(self.base_size, lam)
            .into_iter()
            .filter(|z| z.iter().all(|x| self.subset.contains(x)))
            .map(|z| z.into_iter().map(|x| x as u32).collect())
            .collect();
        out.sort();
        Ok(out)
    }

    fn project(&self, _lam: &Cograph, e: &Vec<u32>) -> Vec<usize> {
        e.iter().map(|&x| x as usize).collect()
    }

    fn object_pair(&self, _lam: &Cograph, _e: &Vec<u32>) -> Option<(String, String)> {
        None
    }

    fn restrict_surjection(&self, f: &GraphMap, e: &Vec<u32>) -> Vec<u32> {
        f.f().iter().map(|&v| e[v]).collect()
    }

    fn split_csum(&self, left: &Cograph, right: &Cograph, e: &Vec<u32>) -> (Vec<u32>, Vec<u32>) {
        (e[..left.n()].to_vec(), e[left.n()..left.n() + right.n()].to_vec())
    }

    fn reorder(&self, _lam: &Cograph, perm: &[usize], e: &Vec<u32>) -> Result<Vec<u32>> {
        Ok(perm.iter().map(|&v| e[v]).collect())
    }
}

/// The diagonal groupoid family: a configuration with a single object label on
/// both sides. Passes the factorization-groupoid conditions.
pub struct DiagonalFamily {
    pub base_size: usize,
    pub objects: u32,
}

impl AttachedFamily for DiagonalFamily {
    type Elem = (Vec<u32>, u32);

    fn carrier(&self, lam: &Cograph) -> Result<Vec<(Vec<u32>, u32)>> {
        if !lam.is_irreflexive() {
            return Err(IsolaError::NotIrreflexive);
        }
        if lam.n() == 0 {
            return Err(IsolaError::Invalid("attached families live over nonempty cographs".into()));
        }
        let hecke = HeckeFamily::new(BundleData::constant(self.base_size, 1), Observer::Points);
        let mut out = vec![];
        for z in hecke.configs(lam) {
            for u in 0..self.objects {
                out.push((z.clone(), u));
            }
        }
        out.sort();
        Ok(out)
    }

    fn project(&self, _lam: &Cograph, e: &(Vec<u32>, u32)) -> Vec<usize> {
        e.0.iter().map(|&x| x as usize).collect()
    }

    fn object_pair(&self, _lam: &Cograph, e: &(Vec<u32>, u32)) -> Option<(String, String)> {
        Some((e.1.to_string(), e.1.to_string()))
    }

    fn restrict_surjection(&self, f: &GraphMap, e: &(Vec<u32>, u32)) -> (Vec<u32>, u32) {
        (f.f().iter().map(|&v| e.0[v]).collect(), e.1)
    }

    fn split_csum(&self, left: &Cograph, right: &Cograph, e: &(Vec<u32>, u32)) -> ((Vec<u32>, u32), (Vec<u32>, u32)) {
        (
            (e.0[..left.n()].to_vec(), e.1),
            (e.0[left.n()..left.n() + right.n()].to_vec(), e.1),
        )
    }

    fn reorder(&self, _lam: &Cograph, perm: &[usize], e: &(Vec<u32>, u32)) -> Result<(Vec<u32>, u32)> {
        Ok((perm.iter().map(|&v| e.0[v]).collect(), e.1))
    }
}

/// Removes one element from one carrier of a wrapped family.
pub struct CorruptedFamily<F: AttachedFamily> {
    pub base: F,
    pub target: Cograph,
    pub drop_index: usize,
}

impl<F: AttachedFamily> AttachedFamily for CorruptedFamily<F> {
    type Elem = F::Elem;

    fn carrier(&self, lam: &Cograph) -> Result<Vec<F::Elem>> {
        let mut out = self.base.carrier(lam)?;
        if lam == &self.target && !out.is_empty() {
            out.remove(self.drop_index % out.len());
        }
        Ok(out)
    }

    fn project(&self, lam: &Cograph, e: &F::Elem) -> Vec<usize> {
        self.base.project(lam, e)
    }

    fn object_pair(&self, lam: &Cograph, e: &F::Elem) -> Option<(String, String)> {
        self.base.object_pair(lam, e)
    }

    fn restrict_surjection(&self, f: &GraphMap, e: &F::Elem) -> F::Elem {
        self.base.restrict_surjection(f, e)
    }

    fn split_csum(&self, left: &Cograph, right: &Cograph, e: &F::Elem) -> (F::Elem, F::Elem) {
        self.base.split_csum(left, right, e)
    }

    fn reorder(&self, lam: &Cograph, perm: &[usize], e: &F::Elem) -> Result<F::Elem> {
        self.base.reorder(lam, perm, e)
    }
}

/// Outcome of a factorization check.
#[derive(Debug, Clone)]
pub struct FactReport {
    pub surjection_squares: usize,
    pub gluing_squares: usize,
    pub failures: Vec<String>,
}

impl FactReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn point_configs(base_size: usize, lam: &Cograph) -> Vec<Vec<usize>> {
    let n = lam.n();
    if n == 0 {
        return vec![vec![]];
    }
    if base_size == 0 {
        return vec![];
    }
    let mut out = vec![];
    let mut cur = vec![0usize; n];
    loop {
        if lam.edges().iter().all(|&(a, b)| cur[a] != cur[b]) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cur[i] += 1;
            if cur[i] < base_size {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Condition on surjections: the carrier over the quotient must be the fiber
/// product of the carrier upstairs with the configurations downstairs.
fn check_surjections<F: AttachedFamily>(
    fam: &F,
    base_size: usize,
    bound: usize,
    report: &mut FactReport,
) -> Result<()> {
    for n in 1..=bound {
        for lam in crate::cotree::enumerate_cographs(n, crate::cotree::Flavor::Irr) {
            for part in crate::morphism::partitions(n) {
                let m = part.iter().copied().max().map_or(0, |x| x + 1);
                if m == 0 {
                    continue;
                }
                if lam.edges().iter().any(|&(a, b)| part[a] == part[b]) {
                    continue;
                }
                // the image structure: lam's edges pushed down, when a cograph
                let mut rows = vec![0u32; m];
                for &(a, b) in &lam.edges() {
                    rows[part[a]] |= 1 << part[b];
                    rows[part[b]] |= 1 << part[a];
                }
                let mu = match Cograph::from_rows(m, rows) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                let f = match GraphMap::new(lam.clone(), mu.clone(), part.clone()) {
                    Ok(f) => f,
                    Err(_) => continue,
                };
                if !f.is_surjective() {
                    continue;
                }
                report.surjection_squares += 1;
                let upstairs = fam.carrier(&lam)?;
                let downstairs = fam.carrier(&mu)?;
                // canonical map: (restriction along f, projection)
                let mut images = BTreeSet::new();
                for e in &downstairs {
                    let up = fam.restrict_surjection(&f, e);
                    if upstairs.binary_search(&up).is_err() {
                        report.failures.push(format!(
                            "surjection square over {lam:?} -> {mu:?}: restriction of {e:?} escapes the carrier"
                        ));
                        return Ok(());
                    }
                    let zmu = fam.project(&mu, e);
                    let zup = fam.project(&lam, &up);
                    let expected: Vec<usize> = part.iter().map(|&b| zmu[b]).collect();
                    if zup != expected {
                        report.failures.push(format!(
                            "surjection square over {lam:?} -> {mu:?}: projections of {e:?} disagree"
                        ));
                        return Ok(());
                    }
                    images.insert((up, zmu));
                }
                if images.len() != downstairs.len() {
                    report
                        .failures
                        .push(format!("surjection square over {lam:?} -> {mu:?}: map is not injective"));
                    return Ok(());
                }
                // expected size: pairs (y upstairs, z downstairs config)
                // whose projections match along f
                let configs_mu = point_configs(base_size, &mu);
                let mut by_key: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
                for z in &configs_mu {
                    let pulled: Vec<usize> = part.iter().map(|&b| z[b]).collect();
                    *by_key.entry(pulled).or_default() += 1;
                }
                let mut expected = 0usize;
                for y in &upstairs {
                    if let Some(c) = by_key.get(&fam.project(&lam, y)) {
                        expected += c;
                    }
                }
                if expected != downstairs.len() {
                    report.failures.push(format!(
                        "surjection square over {lam:?} -> {mu:?}: carrier has {} points, fiber product has {expected}",
                        downstairs.len()
                    ));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Condition on connected sums: the carrier over a connected sum must be the
/// fiber product of the two restricted carriers (matched over the object
/// labels when checking a groupoid) with the configurations over the sum.
fn check_gluing<F: AttachedFamily>(
    fam: &F,
    base_size: usize,
    bound: usize,
    groupoid: bool,
    report: &mut FactReport,
) -> Result<()> {
    for na in 1..=bound {
        for nb in 1..=bound {
            if na + nb > bound {
                continue;
            }
            for a in crate::cotree::enumerate_cographs(na, crate::cotree::Flavor::Irr) {
                for b in crate::cotree::enumerate_cographs(nb, crate::cotree::Flavor::Irr) {
                    report.gluing_squares += 1;
                    let sum = Cograph::sum(SumKind::Csum, &a, &b);
                    let cs = fam.carrier(&sum)?;
                    let ca = fam.carrier(&a)?;
                    let cb = fam.carrier(&b)?;
                    let mut images = BTreeSet::new();
                    for e in &cs {
                        let (ea, eb) = fam.split_csum(&a, &b, e);
                        if ca.binary_search(&ea).is_err() || cb.binary_search(&eb).is_err() {
                            report.failures.push(format!(
                                "gluing square over {a:?} (+) {b:?}: split of {e:?} escapes the carriers"
                            ));
                            return Ok(());
                        }
                        if groupoid {
                            let pa = fam.object_pair(&a, &ea);
                            let pb = fam.object_pair(&b, &eb);
                            match (pa, pb) {
                                (Some((first_a, _)), Some((_, second_b))) => {
                                    if first_a != second_b {
                                        report.failures.push(format!(
                                            "gluing square over {a:?} (+) {b:?}: split of {e:?} does not match over the object set"
                                        ));
                                        return Ok(());
                                    }
                                }
                                _ => {
                                    report.failures.push("groupoid check needs object labels".into());
                                    return Ok(());
                                }
                            }
                        }
                        let z = fam.project(&sum, e);
                        let za = fam.project(&a, &ea);
                        let zb = fam.project(&b, &eb);
                        if z[..na] != za[..] || z[na..] != zb[..] {
                            report.failures.push(format!(
                                "gluing square over {a:?} (+) {b:?}: projections of {e:?} disagree"
                            ));
                            return Ok(());
                        }
                        images.insert((ea, eb, z));
                    }
                    if images.len() != cs.len() {
                        report
                            .failures
                            .push(format!("gluing square over {a:?} (+) {b:?}: map is not injective"));
                        return Ok(());
                    }
                    // expected: pairs matched over the object set and over a
                    // configuration of the sum
                    let configs = point_configs(base_size, &sum);
                    let mut expected = 0usize;
                    for ea in &ca {
                        for eb in &cb {
                            if groupoid {
                                let (first_a, _) = fam.object_pair(&a, ea).expect("labels");
                                let (_, second_b) = fam.object_pair(&b, eb).expect("labels");
                                if first_a != second_b {
                                    continue;
                                }
                            }
                            let za = fam.project(&a, ea);
                            let zb = fam.project(&b, eb);
                            let matching = configs
                                .iter()
                                .filter(|z| z[..na] == za[..] && z[na..] == zb[..])
                                .count();
                            expected += matching;
                        }
                    }
                    if expected != cs.len() {
                        report.failures.push(format!(
                            "gluing square over {a:?} (+) {b:?}: carrier has {} points, fiber product has {expected}",
                            cs.len()
                        ));
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// Verifies the surjection condition alone up to the vertex bound.
pub fn check_surjection_condition<F: AttachedFamily>(
    fam: &F,
    base_size: usize,
    bound: usize,
) -> Result<FactReport> {
    let mut report = FactReport { surjection_squares: 0, gluing_squares: 0, failures: vec![] };
    check_surjections(fam, base_size, bound, &mut report)?;
    Ok(report)
}

/// Verifies the two factorization-stack conditions up to the vertex bound.
pub fn check_factorization_stack<F: AttachedFamily>(
    fam: &F,
    base_size: usize,
    bound: usize,
) -> Result<FactReport> {
    let mut report = FactReport { surjection_squares: 0, gluing_squares: 0, failures: vec![] };
    check_surjections(fam, base_size, bound, &mut report)?;
    if report.passed() {
        check_gluing(fam, base_size, bound, false, &mut report)?;
    }
    Ok(report)
}

/// Verifies the factorization-groupoid conditions: as for stacks, with the
/// gluing fiber product taken over the object set.
pub fn check_factorization_groupoid<F: AttachedFamily>(
    fam: &F,
    base_size: usize,
    bound: usize,
) -> Result<FactReport> {
    let mut report = FactReport { surjection_squares: 0, gluing_squares: 0, failures: vec![] };
    check_surjections(fam, base_size, bound, &mut report)?;
    if report.passed() {
        check_gluing(fam, base_size, bound, true, &mut report)?;
    }
    Ok(report)
}

/// The Grassmannian fiber: configurations with a bundle agreeing with the
/// chosen section off the configuration.
pub fn grassmannian(bd: &BundleData, section: &[u32], lam: &Cograph) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
    if section.len() != bd.base_size() {
        return Err(IsolaError::Invalid("section length must match the base".into()));
    }
    for (x, &s) in section.iter().enumerate() {
        if s >= bd.fiber(x) {
            return Err(IsolaError::Invalid("section escapes the fibers".into()));
        }
    }
    let hecke = HeckeFamily::new(bd.clone(), Observer::Points);
    let mut out = vec![];
    for e in hecke.carrier(lam)? {
        if e.e1 == section {
            out.push((e.z, e.e2));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge2() -> Cograph {
        Cograph::new(2, &[(0, 1)], &[]).unwrap()
    }

    #[test]
    fn ravioli_shapes() {
        // empty configuration: the base itself
        let r = ravioli(3, &Cograph::empty(), &[]).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.doubled().is_empty());
        // one doubled point
        let r = ravioli(2, &Cograph::trivial(1), &[0]).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.include(1, 0), RavioliPoint::Split(0, 1));
        assert_eq!(r.include(2, 1), RavioliPoint::Common(1));
        // size formula
        for base in 1..=4usize {
            for lam in crate::cotree::enumerate_cographs(2, crate::cotree::Flavor::Irr) {
                for z in point_configs(base, &lam) {
                    let zz: Vec<usize> = z.clone();
                    let r = ravioli(base, &lam, &zz).unwrap();
                    let mut img = zz.clone();
                    img.sort_unstable();
                    img.dedup();
                    assert_eq!(r.len(), base + img.len());
                }
            }
        }
        // non-separating configurations are rejected
        assert!(ravioli(2, &edge2(), &[0, 0]).is_err());
    }

    #[test]
    fn sections_match_bundle_pairs() {
        // sections over the doubled space = pairs of bundles agreeing off the
        // configuration
        let bd = BundleData::constant(3, 2);
        let lam = edge2();
        for z in point_configs(3, &lam) {
            let r = ravioli(3, &lam, &z).unwrap();
            let sections = ravioli_sections(&bd, &r);
            let mut pairs = BTreeSet::new();
            for s in &sections {
                let e1: Vec<u32> = (0..3).map(|x| s[&r.include(1, x)]).collect();
                let e2: Vec<u32> = (0..3).map(|x| s[&r.include(2, x)]).collect();
                assert!(pairs.insert((e1, e2)));
            }
            let hecke = HeckeFamily::new(bd.clone(), Observer::Points);
            let direct: BTreeSet<(Vec<u32>, Vec<u32>)> = hecke
                .carrier(&lam)
                .unwrap()
                .into_iter()
                .filter(|e| e.z.iter().map(|&v| v as usize).collect::<Vec<_>>() == z)
                .map(|e| (e.e1, e.e2))
                .collect();
            assert_eq!(pairs, direct);
        }
    }

    #[test]
    fn hecke_singleton_total_size() {
        let hecke = HeckeFamily::new(BundleData::constant(2, 2), Observer::Points);
        let c = hecke.carrier(&Cograph::trivial(1)).unwrap();
        assert_eq!(c.len(), 16);
    }

    #[test]
    fn hecke_with_singleton_fibers_is_the_configuration_space() {
        let hecke = HeckeFamily::new(BundleData::constant(3, 1), Observer::Points);
        for lam in crate::cotree::enumerate_cographs(2, crate::cotree::Flavor::Irr) {
            let c = hecke.carrier(&lam).unwrap();
            assert_eq!(c.len(), point_configs(3, &lam).len());
        }
    }

    #[test]
    fn hecke_is_a_factorization_groupoid() {
        let hecke = HeckeFamily::new(BundleData::constant(2, 2), Observer::Points);
        let r = check_factorization_groupoid(&hecke, 2, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.surjection_squares > 0 && r.gluing_squares > 0);
    }

    #[test]
    fn identity_family_is_a_factorization_stack() {
        let fam = SubobjectFamily::full(3);
        let r = check_factorization_stack(&fam, 3, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn subobject_family_is_a_factorization_stack() {
        let fam = SubobjectFamily { base_size: 3, subset: vec![0, 2] };
        let r = check_factorization_stack(&fam, 3, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn diagonal_family_is_a_factorization_groupoid() {
        let fam = DiagonalFamily { base_size: 2, objects: 3 };
        let r = check_factorization_groupoid(&fam, 2, 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn corrupted_hecke_fails() {
        let hecke = HeckeFamily::new(BundleData::constant(2, 2), Observer::Points);
        let target = edge2();
        let corrupted = CorruptedFamily { base: hecke, target, drop_index: 0 };
        let r = check_factorization_groupoid(&corrupted, 2, 3).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn attached_transport_composes() {
        let hecke = HeckeFamily::new(BundleData::constant(3, 2), Observer::Points);
        // attached maps among small cographs
        let mut maps = vec![];
        for n in 1..=3usize {
            for src in crate::cotree::enumerate_cographs(n, crate::cotree::Flavor::Irr) {
                for m in 1..=3usize {
                    for tgt in crate::cotree::enumerate_cographs(m, crate::cotree::Flavor::Irr) {
                        for f in crate::morphism::hom_maps(&src, &tgt) {
                            if f.is_attached() {
                                maps.push(f);
                            }
                        }
                    }
                }
            }
        }
        let mut composable = 0;
        for f in &maps {
            for g in &maps {
                if f.tgt() != g.src() {
                    continue;
                }
                let gf = GraphMap::compose(g, f).unwrap();
                if !gf.is_attached() {
                    continue;
                }
                composable += 1;
                for e in hecke.carrier(g.tgt()).unwrap() {
                    let via_g = hecke.restrict_attached(g, &e).unwrap();
                    let via_both = hecke.restrict_attached(f, &via_g).unwrap();
                    let direct = hecke.restrict_attached(&gf, &e).unwrap();
                    assert_eq!(via_both, direct, "f={f:?} g={g:?}");
                }
            }
        }
        assert!(composable > 0);
    }

    #[test]
    fn grassmannian_counts() {
        let bd = BundleData::constant(2, 2);
        let section = vec![0, 0];
        let g = grassmannian(&bd, &section, &Cograph::trivial(1)).unwrap();
        assert_eq!(g.len(), 4);
        // singleton fibers: one bundle, so the fiber is the configuration space
        let bd1 = BundleData::constant(3, 1);
        let g = grassmannian(&bd1, &[0, 0, 0], &edge2()).unwrap();
        assert_eq!(g.len(), point_configs(3, &edge2()).len());
    }

    #[test]
    fn grassmannian_factorizes() {
        // the fiber over a connected sum is in bijection with pairs of
        // single-point fibers whose configurations are disjoint: each side
        // modifies the section at its own point
        for base in 2..=3usize {
            let bd = BundleData::constant(base, 2);
            let section: Vec<u32> = vec![0; base];
            let one = Cograph::trivial(1);
            let g1 = grassmannian(&bd, &section, &one).unwrap();
            let sum = edge2();
            let gs: BTreeSet<(Vec<u32>, Vec<u32>)> = grassmannian(&bd, &section, &sum).unwrap().into_iter().collect();
            let mut glued = BTreeSet::new();
            for (za, ea) in &g1 {
                for (zb, eb) in &g1 {
                    if za[0] == zb[0] {
                        continue;
                    }
                    let z = vec![za[0], zb[0]];
                    let e2: Vec<u32> = (0..base)
                        .map(|x| {
                            if x as u32 == za[0] {
                                ea[x]
                            } else if x as u32 == zb[0] {
                                eb[x]
                            } else {
                                section[x]
                            }
                        })
                        .collect();
                    assert!(glued.insert((z, e2)));
                }
            }
            assert_eq!(gs, glued, "base={base}");
        }
    }
}
