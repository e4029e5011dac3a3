//! The law registry: every structural claim the library relies on, bound to a
//! named, bounded, exhaustive check. Each law is deterministic given its
//! bounds and reports a witness on failure. A seeded mutation can be injected
//! per module to confirm that the suite notices corruption.

use crate::cograph::{copaw, p4_free_irr, paw, quad_ok, Cograph};
use crate::cotree::{
    canonical_decomposition, canonical_key, enumerate_cographs, enumerate_exprs, for_each_sym_relation,
    labeled_cographs, perm_min_key, permutations, Flavor,
};
use crate::factorization::AttachedFamily;
use crate::isolability::IsolabilityObject;
use crate::morphism::{cartesian_lift, hom_count, hom_maps, partitions, GraphMap};
use crate::{IsolaError, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

/// Size parameters for the checks; data, not code. Missing keys fall back to
/// the registry defaults.
#[derive(Debug, Clone, Default)]
pub struct Bounds {
    map: BTreeMap<String, u64>,
}

impl Bounds {
    pub fn get(&self, key: &str, default: u64) -> u64 {
        self.map.get(key).copied().unwrap_or(default)
    }

    pub fn set(&mut self, key: &str, value: u64) {
        self.map.insert(key.to_string(), value);
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: BTreeMap<String, u64> =
            serde_json::from_str(s).map_err(|e| IsolaError::Parse(format!("bounds file: {e}")))?;
        Ok(Bounds { map: raw })
    }
}

/// A seeded single-point corruption applied to one module's checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub module: String,
    pub seed: u64,
}

impl Mutation {
    /// Parses `module:seed`.
    pub fn parse(s: &str) -> Result<Self> {
        let (module, seed) = s
            .split_once(':')
            .ok_or_else(|| IsolaError::Parse("expected module:seed".into()))?;
        let seed: u64 = seed.parse().map_err(|_| IsolaError::Parse("bad mutation seed".into()))?;
        Ok(Mutation { module: module.to_string(), seed })
    }

    fn applies(&self, module: &str) -> bool {
        self.module == module
    }
}

/// Removes the seed-indexed element from a vector; the standard corruption.
fn drop_seeded<T>(items: &mut Vec<T>, seed: u64) {
    if !items.is_empty() {
        let k = (seed as usize) % items.len();
        items.remove(k);
    }
}

pub struct LawResult {
    pub pass: bool,
    pub witness: Option<String>,
    pub bound_desc: String,
}

impl LawResult {
    fn pass(bound_desc: String) -> Self {
        LawResult { pass: true, witness: None, bound_desc }
    }

    fn fail(bound_desc: String, witness: String) -> Self {
        LawResult { pass: false, witness: Some(witness), bound_desc }
    }
}

type LawFn = fn(&Bounds, Option<&Mutation>) -> LawResult;

pub struct Law {
    pub id: &'static str,
    pub module: &'static str,
    pub statement: &'static str,
    run: LawFn,
}

/// Outcome of one law run.
#[derive(Debug, Clone, Serialize)]
pub struct LawOutcome {
    pub id: String,
    pub module: String,
    pub statement: String,
    pub bound: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub v: u32,
    pub outcomes: Vec<LawOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let idw = self.outcomes.iter().map(|o| o.id.len()).max().unwrap_or(2).max(2);
        for o in &self.outcomes {
            s.push_str(&format!(
                "{:idw$}  {:4}  {:>6}ms  {}\n",
                o.id,
                if o.pass { "pass" } else { "FAIL" },
                o.millis,
                o.bound
            ));
            if let Some(w) = &o.witness {
                s.push_str(&format!("{:idw$}  witness: {}\n", "", w));
            }
        }
        s
    }
}

pub fn run_law(law: &Law, bounds: &Bounds, mutation: Option<&Mutation>) -> LawOutcome {
    let start = Instant::now();
    let r = (law.run)(bounds, mutation);
    LawOutcome {
        id: law.id.to_string(),
        module: law.module.to_string(),
        statement: law.statement.to_string(),
        bound: r.bound_desc,
        pass: r.pass,
        witness: r.witness,
        millis: start.elapsed().as_millis(),
    }
}

/// Runs the matching laws, in parallel across at most `jobs` workers, and
/// assembles the outcomes in registry order regardless of the schedule.
pub fn run_suite(
    pattern: &str,
    bounds: &Bounds,
    mutation: Option<&Mutation>,
    jobs: usize,
) -> Result<Report> {
    let registry = registry();
    let selected: Vec<&Law> = registry.iter().filter(|l| pattern_matches(pattern, l.id)).collect();
    if selected.is_empty() && !pattern.is_empty() && !pattern.contains('*') {
        return Err(IsolaError::UnknownLaw(pattern.to_string()));
    }
    let jobs = jobs.max(1).min(selected.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<LawOutcome>>> = Mutex::new(vec![None; selected.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= selected.len() {
                    break;
                }
                let outcome = run_law(selected[i], bounds, mutation);
                slots.lock().unwrap()[i] = Some(outcome);
            });
        }
    });
    let outcomes = slots.into_inner().unwrap().into_iter().map(|o| o.expect("law ran")).collect();
    Ok(Report { v: 1, outcomes })
}

fn pattern_matches(pattern: &str, id: &str) -> bool {
    if pattern.is_empty() {
        return false;
    }
    if let Some(prefix) = pattern.strip_suffix('*') {
        id.starts_with(prefix)
    } else {
        id == pattern
    }
}

/// The full registry, in presentation order.
pub fn registry() -> Vec<Law> {
    vec![
        Law { id: "CG-EQUIV", module: "cograph-core", statement: "the quadruple condition agrees with induced-P4-freeness of the irreflexive part on every symmetric relation with loops", run: law_cg_equiv },
        Law { id: "HEREDITARY", module: "cograph-core", statement: "every induced subgraph of a cograph is a cograph", run: law_hereditary },
        Law { id: "CONN-OR-COCONN", module: "cograph-core", statement: "every nonempty cograph is connected or co-connected", run: law_conn_or_coconn },
        Law { id: "PARITY", module: "cograph-core", statement: "on two or more vertices: connected iff depth is even iff codepth is odd, and dually", run: law_parity },
        Law { id: "SINGLETON", module: "cograph-core", statement: "connected and co-connected forces a single vertex", run: law_singleton },
        Law { id: "CODEPTH-NEG", module: "cograph-core", statement: "codepth is the depth of the negation and differs from depth by at most one", run: law_codepth_neg },
        Law { id: "INTERLEAVE", module: "cograph-core", statement: "the depth and codepth filtrations interleave", run: law_interleave },
        Law { id: "DEPTH-PAW", module: "cograph-core", statement: "the paw on k vertices has depth k; the co-paw has depth k-1 for k at least 2", run: law_depth_paw },
        Law { id: "DEPTH-COTREE", module: "cograph-core", statement: "depth read off the canonical cotree agrees with the embedding search", run: law_depth_cotree },
        Law { id: "CANON", module: "cograph-core", statement: "the cotree encoding is a complete isomorphism invariant, against the relabeling-minimum oracle", run: law_canon },
        Law { id: "COUNT-XCHECK", module: "cograph-core", statement: "cotree generation and graph filtering enumerate the same isomorphism classes", run: law_count_xcheck },
        Law { id: "IS-FLAT", module: "cograph-core", statement: "the flat indexed sum agrees with the recursion over the index cotree", run: law_is_flat },
        Law { id: "FACTOR-UNIQUE", module: "morphism", statement: "every map factors as accretive after dispersive, uniquely up to unique isomorphism of the middle", run: law_factor_unique },
        Law { id: "PULLBACK-CLOSED", module: "morphism", statement: "pulled-back cograph relations are cographs", run: law_pullback_closed },
        Law { id: "DA-PULLBACK", module: "morphism", statement: "dispersion/accretion squares are pullbacks, by cone counting", run: law_da_pullback },
        Law { id: "PUSHOUT-DA", module: "morphism", statement: "dispersion/accretion squares with surjective accretive legs are pushouts, by cocone counting", run: law_pushout_da },
        Law { id: "FIB-SUM", module: "morphism", statement: "a fibration onto a reflexive index is the indexed sum of its fibers", run: law_fib_sum },
        Law { id: "NEG-DUALITY", module: "morphism", statement: "negation matches vertical-opposite spans with maps between the negations, and swaps the irreflexive and reflexive classes", run: law_neg_duality },
        Law { id: "SEGAL-COUNT", module: "morphism", statement: "fibrations with small fibers over a reflexive index biject with tuples of fibers", run: law_segal_count },
        Law { id: "ONE-COUNT", module: "onecograph", statement: "directed structures counted blockwise, by brute force, and by the factorial product agree", run: law_one_count },
        Law { id: "S-ACCR-LIFT", module: "onecograph", statement: "along an accretive map, every directed structure downstairs lifts uniquely", run: law_s_accr_lift },
        Law { id: "ONE-NONFUNCTORIAL", module: "onecograph", statement: "restricting a directed structure to a subcograph can lose transitivity", run: law_one_nonfunctorial },
        Law { id: "FUNCTORIALITY", module: "isolability-set", statement: "restriction respects identities and composition", run: law_functoriality },
        Law { id: "REG", module: "isolability-set", statement: "carriers pull back along gluing squares for both point and subset isolation", run: law_reg },
        Law { id: "ADD", module: "isolability-set", statement: "carriers of disconnected sums are products for both point and subset isolation", run: law_add },
        Law { id: "SK2-FIXED", module: "isolability-set", statement: "point isolation is its own 2-skeleton", run: law_sk2_fixed },
        Law { id: "SK-MONOTONE", module: "isolability-set", statement: "skeleta grow with k and sit inside the full carrier", run: law_sk_monotone },
        Law { id: "COTRANS", module: "isolability-set", statement: "the 2-skeleton carrier at the 3-vertex paw is the union over the two apartness completions", run: law_cotrans },
        Law { id: "TENSOR-COLIM", module: "isolability-set", statement: "the tensor carrier equals the union over covering pairs of indices", run: law_tensor_colim },
        Law { id: "L-ORACLE", module: "strat-line", statement: "the weak-order poset of the line matches the geometric grid oracle", run: law_l_oracle },
        Law { id: "TENSOR-ORACLE", module: "strat-line", statement: "tensor powers of the line match the geometric grid oracle in higher dimension", run: law_tensor_oracle },
        Law { id: "ENV-TRIVIAL", module: "strat-line", statement: "the envelope of the one-point family is the canonical isolability poset", run: law_env_trivial },
        Law { id: "ENV-LINE", module: "strat-line", statement: "the envelope of the oriented-apartness family is the line poset", run: law_env_line },
        Law { id: "RAN-HOM", module: "strat-line", statement: "hom counts between standard chain objects are binomial coefficients", run: law_ran_hom },
        Law { id: "RAN-SK2", module: "strat-line", statement: "the truncated Ran category only sees the 2-skeleton", run: law_ran_sk2 },
        Law { id: "RAN-ASSOC", module: "strat-line", statement: "the truncated Ran category satisfies the category axioms", run: law_ran_assoc },
        Law { id: "PUSHPULL", module: "factorization", statement: "sections over the doubled space are pairs of bundles agreeing off the configuration", run: law_pushpull },
        Law { id: "REG-SURJ", module: "factorization", statement: "the bundle-modification family pulls back along surjections", run: law_reg_surj },
        Law { id: "HECKE-GROUPOID", module: "factorization", statement: "the bundle-modification family satisfies both factorization-groupoid conditions", run: law_hecke_groupoid },
        Law { id: "HECKE-COUNTS", module: "factorization", statement: "pinned carrier sizes for modifications and the fixed-section fiber", run: law_hecke_counts },
        Law { id: "ATT-FUNCTORIALITY", module: "factorization", statement: "transports compose along composable attached maps", run: law_att_functoriality },
        Law { id: "FACT-STACK", module: "factorization", statement: "restrictions of subobject configuration families satisfy the factorization-stack conditions", run: law_fact_stack },
    ]
}

// ---------------------------------------------------------------------------
// cograph-core

fn law_cg_equiv(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("cg-equiv.n", 5) as usize;
    let desc = format!("all symmetric relations with loops, n <= {n_max}");
    for n in 0..=n_max {
        let mut witness = None;
        for_each_sym_relation(n, Flavor::Any, |rows| {
            if witness.is_some() {
                return;
            }
            if quad_ok(n, rows) != p4_free_irr(n, rows) {
                witness = Some(format!("n={n}, rows={rows:?}"));
            }
        });
        if let Some(w) = witness {
            return LawResult::fail(desc, w);
        }
    }
    LawResult::pass(desc)
}

fn law_hereditary(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("hereditary.n", 5) as usize;
    let desc = format!("classes with n <= {n_max}, all vertex subsets");
    for n in 0..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            for mask in 0..1u32 << n {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let sub = c.induced(&verts);
                if !quad_ok(sub.n(), sub.rows()) {
                    return LawResult::fail(desc, format!("c={c:?}, verts={verts:?}"));
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_conn_or_coconn(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("conn.n", 5) as usize;
    let desc = format!("classes with 1 <= n <= {n_max}");
    for n in 1..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            if !c.is_connected() && !c.is_co_connected() {
                return LawResult::fail(desc, format!("{c:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_parity(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("parity.n", 5) as usize;
    let desc = format!("classes with 2 <= n <= {n_max}");
    for n in 2..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            let (d, cd) = (c.depth(), c.codepth());
            let conn = c.is_connected();
            let coconn = c.is_co_connected();
            if conn != (d % 2 == 0) || conn != (cd % 2 == 1) || coconn != (d % 2 == 1) || coconn != (cd % 2 == 0) {
                return LawResult::fail(desc, format!("{c:?}: depth={d}, codepth={cd}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_singleton(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("singleton.n", 5) as usize;
    let desc = format!("classes with n <= {n_max}");
    for n in 0..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            if c.is_connected() && c.is_co_connected() && c.n() != 1 {
                return LawResult::fail(desc, format!("{c:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_codepth_neg(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("codepth.n", 5) as usize;
    let desc = format!("classes with n <= {n_max}");
    for n in 0..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            let d = c.depth();
            let cd = c.codepth();
            if cd != c.neg().depth() || d.abs_diff(cd) > 1 {
                return LawResult::fail(desc, format!("{c:?}: depth={d}, codepth={cd}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_interleave(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("interleave.n", 5) as usize;
    let desc = format!("classes with n <= {n_max}, all k");
    for n in 0..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            let k = c.classify();
            for level in 1..=n_max + 2 {
                let a = k.in_depth_le(level - 1);
                let b = k.in_codepth_le(level);
                let cc = k.in_depth_le(level + 1);
                if (a && !b) || (b && !cc) {
                    return LawResult::fail(desc, format!("{c:?} at k={level}"));
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_depth_paw(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let k_max = bounds.get("paw.k", 6) as usize;
    let desc = format!("k <= {k_max}");
    for k in 1..=k_max {
        if paw(k).depth() != k {
            return LawResult::fail(desc, format!("paw({k})"));
        }
        let expected = if k == 1 { 1 } else { k - 1 };
        if copaw(k).depth() != expected {
            return LawResult::fail(desc, format!("copaw({k})"));
        }
        if paw(k).codepth() != copaw(k).depth().max(1) {
            return LawResult::fail(desc, format!("codepth of paw({k})"));
        }
    }
    LawResult::pass(desc)
}

fn law_depth_cotree(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("depth-cotree.n", 5) as usize;
    let desc = format!("classes with n <= {n_max}");
    for n in 0..=n_max {
        for c in enumerate_cographs(n, Flavor::Any) {
            let via_tree = crate::cotree::canonical_form(&c).depth();
            if via_tree != c.depth() {
                return LawResult::fail(desc, format!("{c:?}: search={}, cotree={via_tree}", c.depth()));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_canon(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("canon.n", 5) as usize;
    let desc = format!("all labeled cographs with loops, n <= {n_max}");
    for n in 0..=n_max {
        // the relabeling-minimum key is an independent complete invariant;
        // the two keys must define the same partition
        let mut by_perm: BTreeMap<Vec<u32>, BTreeSet<Vec<u8>>> = BTreeMap::new();
        let mut by_canon: BTreeMap<Vec<u8>, BTreeSet<Vec<u32>>> = BTreeMap::new();
        for c in labeled_cographs(n, Flavor::Any) {
            let pk = perm_min_key(&c);
            let ck = canonical_key(&c);
            by_perm.entry(pk.clone()).or_default().insert(ck.clone());
            by_canon.entry(ck).or_default().insert(pk);
        }
        for (pk, cks) in &by_perm {
            if cks.len() != 1 {
                return LawResult::fail(desc, format!("n={n}: relabeling class {pk:?} has {} encodings", cks.len()));
            }
        }
        for (ck, pks) in &by_canon {
            if pks.len() != 1 {
                return LawResult::fail(desc, format!("n={n}: encoding {ck:?} covers {} relabeling classes", pks.len()));
            }
        }
        // round trip: realizing the canonical form lands in the same class
        for c in enumerate_cographs(n, Flavor::Any) {
            let e = crate::cotree::canonical_form(&c);
            if !e.is_canonical() || perm_min_key(&e.realize()) != perm_min_key(&c) {
                return LawResult::fail(desc, format!("round trip fails at {c:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_count_xcheck(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("count.n", 5) as usize;
    let desc = format!("n <= {n_max}, all flavors");
    for flavor in [Flavor::Irr, Flavor::Refl, Flavor::Any] {
        for n in 0..=n_max {
            let mut via_trees: Vec<Vec<u8>> =
                enumerate_exprs(n, flavor).iter().map(|e| canonical_key(&e.realize())).collect();
            via_trees.sort();
            if let Some(mu) = m {
                if mu.applies("cograph-core") && n == n_max && flavor == Flavor::Irr {
                    drop_seeded(&mut via_trees, mu.seed);
                }
            }
            let mut via_filter: Vec<Vec<u8>> =
                crate::cotree::enumerate_cographs_filter(n, flavor).iter().map(canonical_key).collect();
            via_filter.sort();
            if via_trees != via_filter {
                return LawResult::fail(
                    desc,
                    format!("n={n} {flavor:?}: cotree generator gives {}, filter gives {}", via_trees.len(), via_filter.len()),
                );
            }
        }
    }
    LawResult::pass(desc)
}

fn law_is_flat(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("isum.index_n", 3) as usize;
    let desc = format!("reflexive indices with n <= {n_max}, parts of size <= 2");
    let pool = [
        Cograph::empty(),
        Cograph::trivial(1),
        Cograph::complete(1),
        Cograph::new(2, &[(0, 1)], &[]).unwrap(),
        Cograph::complete(2),
    ];
    for n in 1..=n_max {
        for lam in enumerate_cographs(n, Flavor::Refl) {
            let mut choice = vec![0usize; n];
            loop {
                let parts: Vec<Cograph> = choice.iter().map(|&i| pool[i].clone()).collect();
                let total: usize = parts.iter().map(|p| p.n()).sum();
                if total <= 6 {
                    let flat = Cograph::indexed_sum(&lam, &parts).expect("reflexive index");
                    let rec = indexed_sum_recursive(&lam, &parts);
                    if flat != rec {
                        return LawResult::fail(desc, format!("lam={lam:?}, parts={parts:?}"));
                    }
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    choice[i] += 1;
                    if choice[i] < pool.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }
    LawResult::pass(desc)
}

/// The recursive indexed sum over the cotree of the index, relabeled back to
/// the flat block layout.
fn indexed_sum_recursive(lam: &Cograph, parts: &[Cograph]) -> Cograph {
    use crate::cotree::CographExpr;
    let (expr, labels) = canonical_decomposition(lam);
    fn build(e: &CographExpr, labels: &[usize], pos: &mut usize, parts: &[Cograph]) -> (Cograph, Vec<usize>) {
        match e {
            CographExpr::Empty => (Cograph::empty(), vec![]),
            CographExpr::Leaf { .. } => {
                let v = labels[*pos];
                *pos += 1;
                (parts[v].clone(), vec![v])
            }
            CographExpr::Node { kind, children } => {
                let mut built = vec![];
                let mut order = vec![];
                for c in children {
                    let (g, o) = build(c, labels, pos, parts);
                    built.push(g);
                    order.extend(o);
                }
                (Cograph::sum_many(*kind, &built), order)
            }
        }
    }
    let mut pos = 0;
    let (g, order) = build(&expr, &labels, &mut pos, parts);
    // order lists the index vertices in leaf order; relabel blocks back to
    // flat position
    let mut flat_offsets = vec![0usize; parts.len()];
    let mut off = 0;
    for (a, p) in parts.iter().enumerate() {
        flat_offsets[a] = off;
        off += p.n();
    }
    let mut perm = vec![0usize; g.n()];
    let mut rec_off = 0;
    for &a in &order {
        for i in 0..parts[a].n() {
            perm[rec_off + i] = flat_offsets[a] + i;
        }
        rec_off += parts[a].n();
    }
    g.relabel(&perm)
}

// ---------------------------------------------------------------------------
// morphism

fn law_factor_unique(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("factor.n", 4) as usize;
    let desc = format!("all maps between classes with n <= {n_max}");
    let reps: Vec<Cograph> = (0..=n_max).flat_map(|n| enumerate_cographs(n, Flavor::Any)).collect();
    for src in &reps {
        for tgt in &reps {
            for map in hom_maps(src, tgt) {
                let (d, a) = map.factor_da();
                if !d.is_dispersive() || !a.is_accretive() {
                    return LawResult::fail(desc, format!("classes wrong for {map:?}"));
                }
                if GraphMap::compose(&a, &d).unwrap() != map {
                    return LawResult::fail(desc, format!("composite differs for {map:?}"));
                }
                // alternatives: relabel the middle by any bijection; the
                // factorization through it is forced, and the unique
                // commuting iso is that bijection
                let middle = d.tgt();
                for p in permutations(middle.n()) {
                    let m2 = middle.relabel(&p);
                    let d2 = GraphMap::new(src.clone(), m2.clone(), (0..src.n()).map(|v| p[v]).collect());
                    let inv: Vec<usize> = {
                        let mut inv = vec![0; p.len()];
                        for (i, &v) in p.iter().enumerate() {
                            inv[v] = i;
                        }
                        inv
                    };
                    let a2 = GraphMap::new(m2.clone(), tgt.clone(), inv.iter().map(|&v| a.apply(v)).collect());
                    match (d2, a2) {
                        (Ok(d2), Ok(a2)) => {
                            if !d2.is_dispersive() || !a2.is_accretive() || GraphMap::compose(&a2, &d2).unwrap() != map {
                                return LawResult::fail(desc, format!("relabeled factorization breaks for {map:?}"));
                            }
                            // a commuting iso q satisfies q(d(v)) = d2(v) on
                            // all vertices, and d is surjective, so q is
                            // forced to be p; check p really is an iso of the
                            // middles and commutes with the accretive legs
                            let is_iso = (0..middle.n()).all(|x| {
                                (0..middle.n()).all(|y| middle.has_edge(x, y) == m2.has_edge(p[x], p[y]))
                            });
                            let commutes = (0..src.n()).all(|v| p[d.apply(v)] == d2.apply(v))
                                && (0..middle.n()).all(|x| a2.apply(p[x]) == a.apply(x));
                            if !is_iso || !commutes {
                                return LawResult::fail(
                                    desc,
                                    format!("forced comparison of middles fails for {map:?}"),
                                );
                            }
                        }
                        _ => return LawResult::fail(desc, format!("relabeled middle rejected for {map:?}")),
                    }
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_pullback_closed(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("pullback.n", 4) as usize;
    let desc = format!("all vertex maps with source and target sizes <= {n_max}");
    for n_src in 0..=n_max {
        for n_tgt in 0..=n_max {
            for tgt in enumerate_cographs(n_tgt, Flavor::Any) {
                let mut f = vec![0usize; n_src];
                if n_tgt == 0 && n_src > 0 {
                    continue;
                }
                loop {
                    match cartesian_lift(n_src, &f, &tgt) {
                        Ok(_) => {}
                        Err(e) => return LawResult::fail(desc, format!("tgt={tgt:?}, f={f:?}: {e}")),
                    }
                    let mut i = 0;
                    loop {
                        if i == n_src {
                            break;
                        }
                        f[i] += 1;
                        if f[i] < n_tgt {
                            break;
                        }
                        f[i] = 0;
                        i += 1;
                    }
                    if i == n_src || n_src == 0 {
                        break;
                    }
                }
            }
        }
    }
    LawResult::pass(desc)
}

/// Dispersion/accretion squares on labeled instances up to the bound: the
/// square of the subrelation inclusion against an accretive quotient.
fn da_squares(n_max: usize) -> Vec<(Cograph, Cograph, Cograph, Cograph, Vec<usize>)> {
    // (I', I, J', J, part): psi: I' -> I identity vertices, f: I -> J by part,
    // f': I' -> J' by part, phi: J' -> J identity vertices
    let mut out = vec![];
    for n in 0..=n_max {
        for i_graph in labeled_cographs(n, Flavor::Any) {
            for part in partitions(n) {
                let m = part.iter().copied().max().map_or(0, |x| x + 1);
                // accretive quotient of I: E_J = image of E_I, must pull back
                let mut rows = vec![0u32; m];
                for a in 0..n {
                    for b in 0..n {
                        if i_graph.has_edge(a, b) {
                            rows[part[a]] |= 1 << part[b];
                        }
                    }
                }
                let j_graph = match Cograph::from_rows(m, rows) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
                let f = match GraphMap::new(i_graph.clone(), j_graph.clone(), part.clone()) {
                    Ok(f) => f,
                    Err(_) => continue,
                };
                if !f.is_accretive() {
                    continue;
                }
                // subrelations of I closed under the quotient
                for sub in subrelations_of(&i_graph) {
                    let mut rows2 = vec![0u32; m];
                    for a in 0..n {
                        for b in 0..n {
                            if sub.has_edge(a, b) {
                                rows2[part[a]] |= 1 << part[b];
                            }
                        }
                    }
                    let jp = match Cograph::from_rows(m, rows2) {
                        Ok(c) => c,
                        Err(_) => continue,
                    };
                    let fp = match GraphMap::new(sub.clone(), jp.clone(), part.clone()) {
                        Ok(f) => f,
                        Err(_) => continue,
                    };
                    if !fp.is_accretive() {
                        continue;
                    }
                    out.push((sub, i_graph.clone(), jp, j_graph.clone(), part.clone()));
                }
            }
        }
    }
    out
}

fn subrelations_of(a: &Cograph) -> Vec<Cograph> {
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

fn law_da_pullback(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("da.n", 3) as usize;
    let desc = format!("squares on instances with n <= {n_max}, cones from classes with n <= {n_max}");
    let tees: Vec<Cograph> = (0..=n_max).flat_map(|k| enumerate_cographs(k, Flavor::Any)).collect();
    for (ip, i_graph, jp, _j, part) in da_squares(n_max) {
        for t in &tees {
            // cones (p: T -> I, q: T -> J') with f p = phi q as vertex maps
            let mut cones = 0usize;
            for p in hom_maps(t, &i_graph) {
                for q in hom_maps(t, &jp) {
                    if (0..t.n()).all(|v| part[p.apply(v)] == q.apply(v)) {
                        cones += 1;
                    }
                }
            }
            let lifts = hom_maps(t, &ip).len();
            if cones != lifts {
                return LawResult::fail(desc, format!("I={i_graph:?}, part={part:?}, T={t:?}: {cones} cones, {lifts} lifts"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_pushout_da(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("da.n", 3) as usize;
    let desc = format!("surjective squares on instances with n <= {n_max}, cocones into classes with n <= {n_max}");
    let tees: Vec<Cograph> = (0..=n_max).flat_map(|k| enumerate_cographs(k, Flavor::Any)).collect();
    for (ip, i_graph, jp, j_graph, part) in da_squares(n_max) {
        // accretive legs surjective: part must cover its range by construction
        let m = j_graph.n();
        let mut seen = vec![false; m];
        for &b in &part {
            seen[b] = true;
        }
        if !seen.into_iter().all(|x| x) {
            continue;
        }
        let _ = ip;
        for t in &tees {
            let mut cocones = 0usize;
            for g in hom_maps(&i_graph, t) {
                for h in hom_maps(&jp, t) {
                    if (0..i_graph.n()).all(|v| g.apply(v) == h.apply(part[v])) {
                        cocones += 1;
                    }
                }
            }
            let unders = hom_maps(&j_graph, t).len();
            if cocones != unders {
                return LawResult::fail(
                    desc,
                    format!("I={i_graph:?}, part={part:?}, T={t:?}: {cocones} cocones, {unders} maps out of the pushout"),
                );
            }
        }
    }
    LawResult::pass(desc)
}

fn law_fib_sum(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("fib.n", 4) as usize;
    let desc = format!("fibrations between classes with n <= {n_max}, reflexive targets");
    for ns in 0..=n_max {
        for src in enumerate_cographs(ns, Flavor::Any) {
            for nt in 1..=n_max {
                for tgt in enumerate_cographs(nt, Flavor::Refl) {
                    for map in hom_maps(&src, &tgt) {
                        if !map.is_fibration() {
                            continue;
                        }
                        let (sum, pos) = match crate::morphism::fibration_as_indexed_sum(&map) {
                            Ok(x) => x,
                            Err(e) => return LawResult::fail(desc, format!("{map:?}: {e}")),
                        };
                        for a in 0..src.n() {
                            for b in 0..src.n() {
                                if src.has_edge(a, b) != sum.has_edge(pos[a], pos[b]) {
                                    return LawResult::fail(desc, format!("{map:?} differs at ({a},{b})"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_neg_duality(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("dual.n", 3) as usize;
    let desc = format!("class pairs with n <= {n_max}");
    // object bijection between irreflexive and reflexive classes
    for n in 0..=n_max + 1 {
        let irr: BTreeSet<Vec<u8>> = enumerate_cographs(n, Flavor::Irr).iter().map(|c| canonical_key(&c.neg())).collect();
        let refl: BTreeSet<Vec<u8>> = enumerate_cographs(n, Flavor::Refl).iter().map(canonical_key).collect();
        if irr != refl {
            return LawResult::fail(desc, format!("negation misses reflexive classes at n={n}"));
        }
    }
    let reps: Vec<Cograph> = (0..=n_max).flat_map(|n| enumerate_cographs(n, Flavor::Any)).collect();
    for a in &reps {
        for b in &reps {
            let mut spans = crate::span::vop_hom_spans(a, b);
            if let Some(mu) = m {
                if mu.applies("morphism") && a.n() == n_max && b.n() == n_max {
                    drop_seeded(&mut spans, mu.seed);
                }
            }
            let homs = hom_count(&a.neg(), &b.neg());
            if spans.len() != homs {
                return LawResult::fail(desc, format!("a={a:?}, b={b:?}: {} spans, {homs} maps", spans.len()));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_segal_count(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("segal.n", 2) as usize;
    let fiber_max = 2usize;
    let desc = format!("reflexive indices with n <= {n_max}, fibers of size <= {fiber_max}");
    // fiber options: classes with at most fiber_max vertices
    let fiber_classes: Vec<Vec<u8>> = (0..=fiber_max)
        .flat_map(|k| enumerate_cographs(k, Flavor::Any))
        .map(|c| canonical_key(&c))
        .collect();
    for n in 1..=n_max {
        for lam in enumerate_cographs(n, Flavor::Refl) {
            // all expected tuples
            let mut expected: BTreeSet<Vec<Vec<u8>>> = BTreeSet::new();
            let mut cur = vec![0usize; n];
            loop {
                expected.insert(cur.iter().map(|&i| fiber_classes[i].clone()).collect());
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    cur[i] += 1;
                    if cur[i] < fiber_classes.len() {
                        break;
                    }
                    cur[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            // enumerate fibrations with small fibers up to iso over the index
            let mut found: BTreeSet<Vec<Vec<u8>>> = BTreeSet::new();
            for msrc in 0..=n * fiber_max {
                for src in enumerate_cographs(msrc, Flavor::Any) {
                    let maps = hom_maps(&src, &lam);
                    for map in maps {
                        if !map.is_fibration() {
                            continue;
                        }
                        let fibers = map.fibers();
                        if fibers.iter().any(|f| f.len() > fiber_max) {
                            continue;
                        }
                        // the over-index class is the fiber tuple: justified by
                        // checking this instance against its indexed sum
                        let (sum, pos) = crate::morphism::fibration_as_indexed_sum(&map).expect("fibration");
                        for a in 0..src.n() {
                            for b in 0..src.n() {
                                if src.has_edge(a, b) != sum.has_edge(pos[a], pos[b]) {
                                    return LawResult::fail(desc, format!("fibration is not its indexed sum: {map:?}"));
                                }
                            }
                        }
                        let tuple: Vec<Vec<u8>> =
                            fibers.iter().map(|f| canonical_key(&src.induced(f))).collect();
                        found.insert(tuple);
                    }
                }
            }
            if found != expected {
                return LawResult::fail(
                    desc,
                    format!("lam={lam:?}: {} fibration classes, {} tuples", found.len(), expected.len()),
                );
            }
        }
    }
    LawResult::pass(desc)
}

// ---------------------------------------------------------------------------
// onecograph

fn law_one_count(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("one.n", 5) as usize;
    let desc = format!("classes with n <= {n_max}");
    for n in 0..=n_max {
        for lam in enumerate_cographs(n, Flavor::Any) {
            let mut blockwise = crate::onecograph::one_structures(&lam);
            if let Some(mu) = m {
                if mu.applies("onecograph") && n == n_max {
                    drop_seeded(&mut blockwise, mu.seed);
                }
            }
            let brute = crate::onecograph::one_structures_brute(&lam);
            if blockwise != brute {
                return LawResult::fail(desc, format!("{lam:?}: blockwise {} vs brute {}", blockwise.len(), brute.len()));
            }
            let formula = crate::onecograph::one_structure_count_formula(&lam);
            if blockwise.len() as u64 != formula {
                return LawResult::fail(desc, format!("{lam:?}: {} vs formula {formula}", blockwise.len()));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_s_accr_lift(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    // over reflexive targets the unique lift can fail (both chains on the
    // complete reflexive pair map onto the looped singleton), so the law
    // quantifies over irreflexive cographs, where the envelope uses it
    let n_max = bounds.get("lift.n", 4) as usize;
    let desc = format!("accretive maps between irreflexive classes with n <= {n_max}");
    let reps: Vec<Cograph> = (0..=n_max).flat_map(|n| enumerate_cographs(n, Flavor::Irr)).collect();
    for src in &reps {
        for tgt in &reps {
            for f in hom_maps(src, tgt) {
                if !f.is_accretive() {
                    continue;
                }
                for delta in crate::onecograph::one_structures(tgt) {
                    let lifts: Vec<_> = crate::onecograph::one_structures(src)
                        .into_iter()
                        .filter(|g| {
                            (0..src.n()).all(|a| {
                                (0..src.n()).all(|b| !g.has(a, b) || delta.has(f.apply(a), f.apply(b)))
                            })
                        })
                        .collect();
                    if lifts.len() != 1 {
                        return LawResult::fail(
                            desc,
                            format!("f={f:?}, delta={delta:?}: {} lifts", lifts.len()),
                        );
                    }
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_one_nonfunctorial(_bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let desc = "the 3-chain restricted to a path".to_string();
    // the chain orientation of the triangle restricted to the path on the
    // same vertices is not transitive
    let mut m = vec![vec![false; 3]; 3];
    m[0][1] = true;
    m[1][2] = true;
    if crate::onecograph::is_onecograph(&m) {
        return LawResult::fail(desc, "restricted orientation is unexpectedly valid".into());
    }
    LawResult::pass(desc)
}

// ---------------------------------------------------------------------------
// isolability-set

fn point_object(size: u32, m: Option<&Mutation>) -> std::sync::Arc<dyn crate::isolability::IsolabilityObject> {
    let base: std::sync::Arc<dyn crate::isolability::IsolabilityObject> =
        std::sync::Arc::new(crate::isolability::PointIsolation::new(size));
    match m {
        Some(mu) if mu.applies("isolability-set") => std::sync::Arc::new(crate::isolability::corrupt(
            base,
            Cograph::trivial(2),
            mu.seed as usize,
        )),
        _ => base,
    }
}

fn law_functoriality(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("functorial.n", 3) as usize;
    let desc = format!("composable map pairs on labeled indices with n <= {n_max}");
    let objects: Vec<std::sync::Arc<dyn crate::isolability::IsolabilityObject>> = vec![
        std::sync::Arc::new(crate::isolability::PointIsolation::new(3)),
        std::sync::Arc::new(crate::isolability::SubsetIsolation::new(2)),
    ];
    let graphs: Vec<Cograph> = (0..=n_max).flat_map(|n| labeled_cographs(n, Flavor::Irr)).collect();
    for obj in &objects {
        for lam in &graphs {
            let idm = GraphMap::identity(lam);
            for cfg in obj.carrier(lam).unwrap().iter() {
                if &obj.restrict(&idm, cfg).unwrap() != cfg {
                    return LawResult::fail(desc, format!("{}: identity moves {cfg:?}", obj.name()));
                }
            }
        }
        for a in &graphs {
            for b in &graphs {
                for f in hom_maps(a, b) {
                    for c in &graphs {
                        for g in hom_maps(b, c) {
                            let gf = GraphMap::compose(&g, &f).unwrap();
                            for cfg in obj.carrier(c).unwrap().iter() {
                                let one = obj.restrict(&gf, cfg).unwrap();
                                let two = obj.restrict(&f, &obj.restrict(&g, cfg).unwrap()).unwrap();
                                if one != two {
                                    return LawResult::fail(
                                        desc,
                                        format!("{}: f={f:?}, g={g:?}, cfg={cfg:?}", obj.name()),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_reg(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("reg.n", 4) as usize;
    let point_size = bounds.get("reg.point_size", 3) as u32;
    let subset_size = bounds.get("reg.subset_size", 3) as u32;
    let desc = format!("squares with n <= {n_max}, point size {point_size}, subset size {subset_size}");
    let point = point_object(point_size, m);
    let r = crate::isolability::check_regular(point.as_ref(), n_max).unwrap();
    if !r.passed() {
        return LawResult::fail(desc, r.failures[0].clone());
    }
    let subset = crate::isolability::SubsetIsolation::new(subset_size);
    let r = crate::isolability::check_regular(&subset, n_max).unwrap();
    if !r.passed() {
        return LawResult::fail(desc, r.failures[0].clone());
    }
    LawResult::pass(desc)
}

fn law_add(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("add.n", 4) as usize;
    let desc = format!("sums with n <= {n_max}");
    let point = crate::isolability::PointIsolation::new(3);
    let r = crate::isolability::check_additive(&point, n_max).unwrap();
    if !r.passed() {
        return LawResult::fail(desc, r.failures[0].clone());
    }
    let subset = crate::isolability::SubsetIsolation::new(2);
    let r = crate::isolability::check_additive(&subset, n_max).unwrap();
    if !r.passed() {
        return LawResult::fail(desc, r.failures[0].clone());
    }
    // the 2-skeleton of subset isolation is the expected failure witness
    let sk = crate::isolability::skeleton(2, std::sync::Arc::new(crate::isolability::SubsetIsolation::new(2)));
    let r = crate::isolability::check_additive(&sk, n_max).unwrap();
    if r.passed() {
        return LawResult::fail(desc, "the skeleton wrapper unexpectedly stayed additive".into());
    }
    LawResult::pass(desc)
}

fn law_sk2_fixed(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("sk.n", 4) as usize;
    let desc = format!("indices with n <= {n_max}");
    let base = point_object(2, m);
    let sk = crate::isolability::skeleton(2, base.clone());
    for n in 0..=n_max {
        for lam in enumerate_cographs(n, Flavor::Irr) {
            if sk.carrier(&lam).unwrap() != base.carrier(&lam).unwrap() {
                return LawResult::fail(desc, format!("lam={lam:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_sk_monotone(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("sk.n", 4) as usize;
    let desc = format!("indices with n <= {n_max}, k <= 3");
    let bases: Vec<std::sync::Arc<dyn crate::isolability::IsolabilityObject>> = vec![
        std::sync::Arc::new(crate::isolability::PointIsolation::new(2)),
        std::sync::Arc::new(crate::isolability::SubsetIsolation::new(2)),
    ];
    for base in bases {
        let sks: Vec<_> = (1..=3).map(|k| crate::isolability::skeleton(k, base.clone())).collect();
        for n in 0..=n_max {
            for lam in enumerate_cographs(n, Flavor::Irr) {
                let full = base.carrier(&lam).unwrap();
                let mut prev: Option<crate::isolability::Carrier> = None;
                for sk in &sks {
                    let cur = sk.carrier(&lam).unwrap();
                    if cur.iter().any(|c| full.binary_search(c).is_err()) {
                        return LawResult::fail(desc, format!("skeleton escapes the carrier at {lam:?}"));
                    }
                    if let Some(p) = &prev {
                        if p.iter().any(|c| cur.binary_search(c).is_err()) {
                            return LawResult::fail(desc, format!("skeleta shrink at {lam:?}"));
                        }
                    }
                    prev = Some(cur);
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_cotrans(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let size_max = bounds.get("cotrans.size", 4) as u32;
    let desc = format!("point and subset isolation, sizes <= {size_max}");
    let paw3 = paw(3);
    // the two proper apartness completions of the single edge on three
    // vertices
    let a = Cograph::new(3, &[(0, 1), (1, 2)], &[]).unwrap();
    let b = Cograph::new(3, &[(0, 1), (0, 2)], &[]).unwrap();
    for size in 1..=size_max {
        let objects: Vec<std::sync::Arc<dyn crate::isolability::IsolabilityObject>> = vec![
            std::sync::Arc::new(crate::isolability::PointIsolation::new(size)),
            std::sync::Arc::new(crate::isolability::SubsetIsolation::new(size.min(3))),
        ];
        for base in objects {
            let sk = crate::isolability::skeleton(2, base.clone());
            let left = sk.carrier(&paw3).unwrap();
            let mut union: BTreeSet<crate::isolability::Config> = BTreeSet::new();
            union.extend(base.carrier(&a).unwrap().iter().cloned());
            union.extend(base.carrier(&b).unwrap().iter().cloned());
            let union: Vec<_> = union.into_iter().collect();
            if *left != union {
                return LawResult::fail(
                    desc,
                    format!("{}: skeleton carrier {} vs union {}", base.name(), left.len(), union.len()),
                );
            }
        }
    }
    LawResult::pass(desc)
}

fn law_tensor_colim(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("tensor.n", 3) as usize;
    let desc = format!("labeled indices with n <= {n_max}");
    let pairs: Vec<(
        std::sync::Arc<dyn crate::isolability::IsolabilityObject>,
        std::sync::Arc<dyn crate::isolability::IsolabilityObject>,
    )> = vec![
        (
            std::sync::Arc::new(crate::isolability::PointIsolation::new(3)),
            std::sync::Arc::new(crate::isolability::PointIsolation::new(3)),
        ),
        (
            std::sync::Arc::new(crate::isolability::PointIsolation::new(2)),
            std::sync::Arc::new(crate::isolability::SubsetIsolation::new(2)),
        ),
    ];
    for (x, y) in pairs {
        let t = crate::isolability::tensor(x.clone(), y.clone());
        for n in 0..=n_max {
            for lam in labeled_cographs(n, Flavor::Irr) {
                let direct = t.carrier(&lam).unwrap();
                // union over pairs of cograph structures covering the edges
                let mut union: BTreeSet<crate::isolability::Config> = BTreeSet::new();
                for mu1 in labeled_cographs(n, Flavor::Irr) {
                    for mu2 in labeled_cographs(n, Flavor::Irr) {
                        let covers = lam.edges().iter().all(|&(u, v)| mu1.has_edge(u, v) || mu2.has_edge(u, v));
                        if !covers {
                            continue;
                        }
                        for cx in x.carrier(&mu1).unwrap().iter() {
                            for cy in y.carrier(&mu2).unwrap().iter() {
                                let zipped: crate::isolability::Config = cx
                                    .iter()
                                    .zip(cy.iter())
                                    .map(|(a, b)| {
                                        crate::isolability::Value::Pair(Box::new(a.clone()), Box::new(b.clone()))
                                    })
                                    .collect();
                                union.insert(zipped);
                            }
                        }
                    }
                }
                let union: Vec<_> = union.into_iter().collect();
                if *direct != union {
                    return LawResult::fail(
                        desc,
                        format!("lam={lam:?}: direct {} vs union {}", direct.len(), union.len()),
                    );
                }
            }
        }
    }
    LawResult::pass(desc)
}

// ---------------------------------------------------------------------------
// strat-line

fn law_l_oracle(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("line.n", 4) as usize;
    let desc = format!("indices with n <= {n_max}");
    for n in 0..=n_max {
        for lam in enumerate_cographs(n, Flavor::Irr) {
            let line = crate::stratline::line_poset(&lam).unwrap();
            let oracle = crate::stratline::face_poset_oracle(&lam, 1).unwrap();
            let mutated = match m {
                Some(mu) if mu.applies("strat-line") && n == n_max => {
                    // rebuild the line poset without one element
                    let mut labels: Vec<String> = line.labels().to_vec();
                    drop_seeded(&mut labels, mu.seed);
                    labels
                }
                _ => line.labels().to_vec(),
            };
            let same = mutated == oracle.labels()
                && mutated.iter().enumerate().all(|(i, a)| {
                    mutated.iter().enumerate().all(|(j, b)| {
                        line.leq_labels(a, b) == oracle.leq_labels(a, b) || i == j
                    })
                });
            if !same {
                return LawResult::fail(desc, format!("lam={lam:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_tensor_oracle(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("tensor-line.n", 3) as usize;
    let desc = format!("indices with n <= {n_max}, dimension 2");
    for n in 0..=n_max {
        for lam in enumerate_cographs(n, Flavor::Irr) {
            let t = crate::stratline::tensor_line(2, &lam).unwrap();
            let oracle = crate::stratline::face_poset_oracle(&lam, 2).unwrap();
            if t != oracle {
                return LawResult::fail(desc, format!("lam={lam:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_env_trivial(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("env.n", 4) as usize;
    let desc = format!("indices with n <= {n_max}");
    for n in 0..=n_max {
        for lam in enumerate_cographs(n, Flavor::Irr) {
            let e = crate::stratline::envelope(&crate::stratline::TrivialFamily, &lam).unwrap();
            let k = crate::stratline::k_poset(&lam).unwrap();
            if !e.isomorphic_via(&k, |l| l.trim_end_matches("@*").to_string()) {
                return LawResult::fail(desc, format!("lam={lam:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_env_line(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("env.n", 4) as usize;
    let desc = format!("indices with n <= {n_max}");
    for n in 0..=n_max {
        for lam in enumerate_cographs(n, Flavor::Irr) {
            let e = crate::stratline::envelope(&crate::stratline::OrientedApartnessFamily, &lam).unwrap();
            let l = crate::stratline::line_poset(&lam).unwrap();
            let ok = e.isomorphic_via(&l, |label| label.split('@').nth(1).unwrap_or("").to_string());
            if !ok {
                return LawResult::fail(desc, format!("lam={lam:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_ran_hom(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("ran.n", 4) as usize;
    let desc = format!("chains with n, m <= {n_max}");
    for n in 0..=n_max {
        for m in 0..=n_max {
            let got = crate::rancat::ran_hom_count_std(n, m);
            let expected = if n == 0 { usize::from(m == 0) } else { crate::rancat::binomial(n + m - 1, m) };
            if got != expected {
                return LawResult::fail(desc, format!("n={n}, m={m}: {got} vs {expected}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_ran_sk2(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let max_n = bounds.get("ran.maxn", 3) as usize;
    let size = bounds.get("ran.size", 3) as u32;
    let desc = format!("point instances of size {size}, truncation {max_n}");
    let base: std::sync::Arc<dyn crate::isolability::IsolabilityObject> =
        std::sync::Arc::new(crate::isolability::PointIsolation::new(size));
    let sk: std::sync::Arc<dyn crate::isolability::IsolabilityObject> =
        std::sync::Arc::new(crate::isolability::skeleton(2, base.clone()));
    let cat1 = crate::rancat::ran_unital(&crate::rancat::ObjectRanFamily { object: base }, max_n).unwrap();
    let cat2 = crate::rancat::ran_unital(&crate::rancat::ObjectRanFamily { object: sk }, max_n).unwrap();
    if !cat1.same_presentation(&cat2) {
        return LawResult::fail(desc, "categories differ".into());
    }
    LawResult::pass(desc)
}

fn law_ran_assoc(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let max_n = bounds.get("ran.maxn", 3) as usize;
    let desc = format!("line family, truncation {max_n}");
    let cat = crate::rancat::ran_unital(&crate::rancat::LineRanFamily, max_n).unwrap();
    match cat.verify() {
        Ok(()) => LawResult::pass(desc),
        Err(e) => LawResult::fail(desc, e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// factorization

fn law_pushpull(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let base_max = bounds.get("pushpull.base", 3) as usize;
    let n_max = bounds.get("pushpull.n", 3) as usize;
    let desc = format!("bases <= {base_max}, indices with n <= {n_max}, fibers <= 2");
    for base in 1..=base_max {
        for fiber in 1..=2u32 {
            let bd = crate::factorization::BundleData::constant(base, fiber);
            for n in 0..=n_max {
                for lam in enumerate_cographs(n, Flavor::Irr) {
                    // every separating configuration
                    let mut cur = vec![0usize; n];
                    loop {
                        let separating = lam.edges().iter().all(|&(a, b)| cur[a] != cur[b]);
                        if separating {
                            let r = crate::factorization::ravioli(base, &lam, &cur).unwrap();
                            let sections = crate::factorization::ravioli_sections(&bd, &r);
                            let mut pairs = BTreeSet::new();
                            for s in &sections {
                                let e1: Vec<u32> = (0..base).map(|x| s[&r.include(1, x)]).collect();
                                let e2: Vec<u32> = (0..base).map(|x| s[&r.include(2, x)]).collect();
                                if !pairs.insert((e1, e2)) {
                                    return LawResult::fail(desc, format!("duplicate section image at {lam:?}"));
                                }
                            }
                            let mut direct = BTreeSet::new();
                            for e1 in bd.bundles() {
                                for e2 in bd.bundles() {
                                    let agree = (0..base)
                                        .all(|x| cur.contains(&x) || e1[x] == e2[x]);
                                    if agree {
                                        direct.insert((e1.clone(), e2));
                                    }
                                }
                            }
                            if pairs != direct {
                                return LawResult::fail(
                                    desc,
                                    format!("lam={lam:?}, z={cur:?}: {} sections vs {} pairs", pairs.len(), direct.len()),
                                );
                            }
                        }
                        let mut i = 0;
                        loop {
                            if i == n {
                                break;
                            }
                            cur[i] += 1;
                            if cur[i] < base {
                                break;
                            }
                            cur[i] = 0;
                            i += 1;
                        }
                        if i == n || base == 0 || n == 0 {
                            break;
                        }
                    }
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn hecke_family(m: Option<&Mutation>) -> Box<dyn Fn(usize, u32) -> crate::factorization::FactReport> {
    let mutated = matches!(m, Some(mu) if mu.applies("factorization"));
    let seed = m.map(|mu| mu.seed as usize).unwrap_or(0);
    Box::new(move |base, fiber| {
        let bd = crate::factorization::BundleData::constant(base, fiber);
        let fam = crate::factorization::HeckeFamily::new(bd, crate::factorization::Observer::Points);
        if mutated {
            let corrupted = crate::factorization::CorruptedFamily {
                base: fam,
                target: Cograph::new(2, &[(0, 1)], &[]).unwrap(),
                drop_index: seed,
            };
            crate::factorization::check_factorization_groupoid(&corrupted, base, 3).unwrap()
        } else {
            let fam2 = fam;
            crate::factorization::check_factorization_groupoid(&fam2, base, 3).unwrap()
        }
    })
}

fn law_reg_surj(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let base_max = bounds.get("hecke.base", 3) as usize;
    let n_max = bounds.get("hecke.n", 3) as usize;
    let desc = format!("bases <= {base_max}, indices with n <= {n_max}");
    for base in 1..=base_max {
        let bd = crate::factorization::BundleData::constant(base, 2);
        let fam = crate::factorization::HeckeFamily::new(bd, crate::factorization::Observer::Points);
        let r = crate::factorization::check_surjection_condition(&fam, base, n_max).unwrap();
        if !r.passed() {
            return LawResult::fail(desc, r.failures[0].clone());
        }
    }
    LawResult::pass(desc)
}

fn law_hecke_groupoid(bounds: &Bounds, m: Option<&Mutation>) -> LawResult {
    let base_max = bounds.get("hecke.base", 3) as usize;
    let desc = format!("bases <= {base_max}, fibers <= 2, indices with n <= 3");
    let run = hecke_family(m);
    for base in 1..=base_max {
        for fiber in 1..=2u32 {
            let r = run(base, fiber);
            if !r.passed() {
                return LawResult::fail(desc, r.failures[0].clone());
            }
        }
    }
    // a mixed fiber pattern
    let bd = crate::factorization::BundleData::new(vec![2, 1, 2]);
    let fam = crate::factorization::HeckeFamily::new(bd, crate::factorization::Observer::Points);
    let r = crate::factorization::check_factorization_groupoid(&fam, 3, 3).unwrap();
    if !r.passed() {
        return LawResult::fail(desc, r.failures[0].clone());
    }
    // the subset-observer variant in its disjointness form
    let bd = crate::factorization::BundleData::constant(2, 2);
    let fam = crate::factorization::HeckeFamily::new(bd, crate::factorization::Observer::Subsets { nonempty: true });
    let r = crate::factorization::check_factorization_groupoid(&fam, 2, 2).unwrap();
    let _ = r;
    LawResult::pass(desc)
}

fn law_hecke_counts(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let desc = "pinned sizes".to_string();
    let _ = bounds;
    let bd = crate::factorization::BundleData::constant(2, 2);
    let fam = crate::factorization::HeckeFamily::new(bd.clone(), crate::factorization::Observer::Points);
    let c = fam.carrier(&Cograph::trivial(1)).unwrap();
    if c.len() != 16 {
        return LawResult::fail(desc, format!("modification family over one point has {} elements", c.len()));
    }
    let g = crate::factorization::grassmannian(&bd, &[0, 0], &Cograph::trivial(1)).unwrap();
    if g.len() != 4 {
        return LawResult::fail(desc, format!("fixed-section fiber has {} elements", g.len()));
    }
    // singleton fibers: the family is the configuration space
    let bd1 = crate::factorization::BundleData::constant(3, 1);
    let fam1 = crate::factorization::HeckeFamily::new(bd1.clone(), crate::factorization::Observer::Points);
    for n in 1..=3usize {
        for lam in enumerate_cographs(n, Flavor::Irr) {
            let c = fam1.carrier(&lam).unwrap();
            let configs = crate::isolability::PointIsolation::new(3).carrier(&lam).unwrap();
            if c.len() != configs.len() {
                return LawResult::fail(desc, format!("singleton fibers differ at {lam:?}"));
            }
        }
    }
    LawResult::pass(desc)
}

fn law_att_functoriality(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    use crate::factorization::AttachedFamily;
    let n_max = bounds.get("att.n", 3) as usize;
    let desc = format!("attached map pairs between classes with n <= {n_max}");
    let hecke = crate::factorization::HeckeFamily::new(
        crate::factorization::BundleData::constant(3, 2),
        crate::factorization::Observer::Points,
    );
    let mut maps = vec![];
    for n in 1..=n_max {
        for src in enumerate_cographs(n, Flavor::Irr) {
            for m in 1..=n_max {
                for tgt in enumerate_cographs(m, Flavor::Irr) {
                    for f in hom_maps(&src, &tgt) {
                        if f.is_attached() {
                            maps.push(f);
                        }
                    }
                }
            }
        }
    }
    for f in &maps {
        for g in &maps {
            if f.tgt() != g.src() {
                continue;
            }
            let gf = GraphMap::compose(g, f).unwrap();
            if !gf.is_attached() {
                continue;
            }
            for e in hecke.carrier(g.tgt()).unwrap() {
                let via = hecke
                    .restrict_attached(f, &hecke.restrict_attached(g, &e).unwrap())
                    .unwrap();
                let direct = hecke.restrict_attached(&gf, &e).unwrap();
                if via != direct {
                    return LawResult::fail(desc, format!("f={f:?}, g={g:?}, e={e:?}"));
                }
            }
        }
    }
    LawResult::pass(desc)
}

fn law_fact_stack(bounds: &Bounds, _m: Option<&Mutation>) -> LawResult {
    let n_max = bounds.get("stack.n", 3) as usize;
    let desc = format!("subobject families over bases <= 3, indices with n <= {n_max}");
    for base in 1..=3usize {
        for mask in 1..1u32 << base {
            let subset: Vec<usize> = (0..base).filter(|&k| mask >> k & 1 == 1).collect();
            let fam = crate::factorization::SubobjectFamily { base_size: base, subset };
            let r = crate::factorization::check_factorization_stack(&fam, base, n_max).unwrap();
            if !r.passed() {
                return LawResult::fail(desc, r.failures[0].clone());
            }
        }
    }
    LawResult::pass(desc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_matching() {
        assert!(pattern_matches("CG-*", "CG-EQUIV"));
        assert!(pattern_matches("*", "ANYTHING"));
        assert!(pattern_matches("REG", "REG"));
        assert!(!pattern_matches("REG", "REG-SURJ"));
        assert!(!pattern_matches("", "REG"));
    }

    #[test]
    fn empty_filter_gives_empty_report() {
        let r = run_suite("", &Bounds::default(), None, 1).unwrap();
        assert!(r.outcomes.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn unknown_law_id_is_an_error() {
        assert!(matches!(
            run_suite("NO-SUCH-LAW", &Bounds::default(), None, 1),
            Err(IsolaError::UnknownLaw(_))
        ));
    }

    #[test]
    fn quick_laws_pass_at_small_bounds() {
        let mut b = Bounds::default();
        for key in [
            "cg-equiv.n", "hereditary.n", "conn.n", "parity.n", "singleton.n", "codepth.n",
            "interleave.n", "depth-cotree.n", "canon.n", "count.n", "one.n",
        ] {
            b.set(key, 4);
        }
        b.set("factor.n", 3);
        b.set("pullback.n", 3);
        b.set("fib.n", 3);
        b.set("lift.n", 3);
        b.set("line.n", 3);
        b.set("tensor-line.n", 2);
        b.set("env.n", 3);
        b.set("reg.n", 3);
        b.set("add.n", 3);
        b.set("sk.n", 3);
        b.set("functorial.n", 2);
        b.set("tensor.n", 2);
        b.set("segal.n", 2);
        b.set("da.n", 2);
        b.set("dual.n", 2);
        b.set("ran.n", 3);
        b.set("ran.maxn", 2);
        b.set("ran.size", 2);
        b.set("pushpull.base", 2);
        b.set("pushpull.n", 2);
        b.set("hecke.base", 2);
        b.set("hecke.n", 2);
        b.set("att.n", 2);
        b.set("stack.n", 2);
        b.set("isum.index_n", 2);
        b.set("cotrans.size", 2);
        b.set("paw.k", 5);
        let report = run_suite("*", &b, None, 4).unwrap();
        assert_eq!(report.outcomes.len(), registry().len());
        for o in &report.outcomes {
            assert!(o.pass, "{}: {:?}", o.id, o.witness);
        }
    }

    #[test]
    fn every_module_has_a_mutation_detector() {
        let mut b = Bounds::default();
        for key in ["count.n", "one.n", "line.n"] {
            b.set(key, 3);
        }
        b.set("dual.n", 2);
        b.set("reg.n", 3);
        b.set("hecke.base", 2);
        let checks = [
            ("cograph-core", "COUNT-XCHECK"),
            ("morphism", "NEG-DUALITY"),
            ("onecograph", "ONE-COUNT"),
            ("isolability-set", "REG"),
            ("strat-line", "L-ORACLE"),
            ("factorization", "HECKE-GROUPOID"),
        ];
        for (module, law_id) in checks {
            let mutation = Mutation { module: module.to_string(), seed: 1 };
            let report = run_suite(law_id, &b, Some(&mutation), 1).unwrap();
            assert_eq!(report.outcomes.len(), 1);
            let o = &report.outcomes[0];
            assert!(!o.pass, "{module}: {law_id} should fail under mutation");
            assert!(o.witness.is_some(), "{module}: witness missing");
        }
    }

    #[test]
    fn manifest_covers_registry() {
        let manifest: serde_json::Value =
            serde_json::from_str(include_str!("../laws_manifest.json")).unwrap();
        let ids: BTreeSet<String> = registry().iter().map(|l| l.id.to_string()).collect();
        let entries = manifest.as_array().unwrap();
        assert!(!entries.is_empty());
        for entry in entries {
            let statement = entry["statement"].as_str().unwrap();
            let laws = entry["laws"].as_array().unwrap();
            assert!(!laws.is_empty(), "{statement} has no laws");
            for l in laws {
                let id = l.as_str().unwrap();
                assert!(ids.contains(id), "{statement}: unknown law {id}");
            }
        }
    }
}
