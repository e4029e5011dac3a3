//! Acceptance suite: one test per criterion, each running the corresponding
//! registry laws at their pinned bounds, asserting the stated time budget,
//! and printing one pass line. Run with `--nocapture` to see the lines.

use isola::cograph::Cograph;
use isola::cotree::Flavor;
use isola::isolability::IsolabilityObject;
use isola::laws::{registry, run_law, Bounds, LawOutcome, Mutation};

fn run(id: &str) -> LawOutcome {
    let reg = registry();
    let law = reg.iter().find(|l| l.id == id).unwrap_or_else(|| panic!("unknown law {id}"));
    let o = run_law(law, &Bounds::default(), None);
    assert!(o.pass, "{id} failed: {:?}", o.witness);
    o
}

fn criterion(n: usize, name: &str, limit_ms: u128, laws: &[&str], extra_ms: u128) {
    let mut total = extra_ms;
    for id in laws {
        total += run(id).millis;
    }
    assert!(total < limit_ms, "criterion {n} took {total}ms, budget {limit_ms}ms");
    println!("criterion {n:2} ({name}): PASS in {total}ms (budget {limit_ms}ms)");
}

#[test]
fn criterion_01_recognition_agreement() {
    criterion(1, "CG-EQUIV", 60_000, &["CG-EQUIV"], 0);
}

#[test]
fn criterion_02_enumeration_cross_check() {
    let start = std::time::Instant::now();
    let counts: Vec<usize> = (1..=5).map(|n| isola::cotree::enumerate_cographs(n, Flavor::Irr).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 10, 24]);
    let by_filter: Vec<usize> =
        (1..=5).map(|n| isola::cotree::enumerate_cographs_filter(n, Flavor::Irr).len()).collect();
    assert_eq!(by_filter, vec![1, 2, 4, 10, 24]);
    let elapsed = start.elapsed().as_millis();
    criterion(2, "enumeration cross-check", 30_000, &["COUNT-XCHECK"], elapsed);
}

#[test]
fn criterion_03_canonical_form() {
    criterion(3, "canonical form", 120_000, &["CANON"], 0);
}

#[test]
fn criterion_04_depth_laws() {
    criterion(
        4,
        "depth laws",
        120_000,
        &["CONN-OR-COCONN", "PARITY", "SINGLETON", "CODEPTH-NEG", "INTERLEAVE", "DEPTH-PAW"],
        0,
    );
}

#[test]
fn criterion_05_factorization_system() {
    criterion(5, "factorization system", 120_000, &["FACTOR-UNIQUE", "PULLBACK-CLOSED", "PUSHOUT-DA"], 0);
}

#[test]
fn criterion_06_duality() {
    criterion(6, "duality", 60_000, &["NEG-DUALITY"], 0);
}

#[test]
fn criterion_07_fibrations_are_indexed_sums() {
    criterion(7, "fibrations as indexed sums", 60_000, &["FIB-SUM"], 0);
}

#[test]
fn criterion_08_one_structure_counts() {
    let start = std::time::Instant::now();
    for n in 0..=4usize {
        let kn = Cograph::complete_irr(n);
        let expected: usize = (1..=n).product::<usize>().max(1);
        assert_eq!(isola::onecograph::one_structures(&kn).len(), expected);
    }
    let elapsed = start.elapsed().as_millis();
    criterion(8, "directed structure counts", 60_000, &["ONE-COUNT"], elapsed);
}

#[test]
fn criterion_09_set_level_carriers() {
    let start = std::time::Instant::now();
    // the subset witness at the 3-vertex paw: in the full carrier, excluded
    // by the 2-skeleton
    let base: std::sync::Arc<dyn IsolabilityObject> =
        std::sync::Arc::new(isola::isolability::SubsetIsolation::new(2));
    let sk = isola::isolability::skeleton(2, base.clone());
    let paw3 = isola::cograph::paw(3);
    let witness = vec![
        isola::isolability::Value::Subset(0b01),
        isola::isolability::Value::Subset(0b10),
        isola::isolability::Value::Subset(0b11),
    ];
    assert!(base.carrier(&paw3).unwrap().binary_search(&witness).is_ok());
    assert!(sk.carrier(&paw3).unwrap().binary_search(&witness).is_err());
    let elapsed = start.elapsed().as_millis();
    criterion(9, "set-level carriers", 120_000, &["REG", "SK2-FIXED", "COTRANS", "TENSOR-COLIM"], elapsed);
}

#[test]
fn criterion_10_line_posets() {
    let start = std::time::Instant::now();
    assert_eq!(isola::stratline::line_poset(&Cograph::trivial(3)).unwrap().len(), 13);
    let elapsed = start.elapsed().as_millis();
    criterion(10, "line posets", 120_000, &["L-ORACLE", "TENSOR-ORACLE"], elapsed);
}

#[test]
fn criterion_11_ran_category() {
    criterion(11, "truncated Ran category", 180_000, &["RAN-HOM", "RAN-SK2", "RAN-ASSOC"], 0);
}

#[test]
fn criterion_12_factorization_families() {
    let start = std::time::Instant::now();
    use isola::factorization::{grassmannian, AttachedFamily, BundleData, HeckeFamily, Observer};
    let bd = BundleData::constant(2, 2);
    let fam = HeckeFamily::new(bd.clone(), Observer::Points);
    assert_eq!(fam.carrier(&Cograph::trivial(1)).unwrap().len(), 16);
    assert_eq!(grassmannian(&bd, &[0, 0], &Cograph::trivial(1)).unwrap().len(), 4);
    let elapsed = start.elapsed().as_millis();
    criterion(12, "factorization families", 120_000, &["PUSHPULL", "HECKE-GROUPOID", "HECKE-COUNTS"], elapsed);
}

#[test]
fn criterion_13_mutation_sanity() {
    let start = std::time::Instant::now();
    // reduced bounds: a corruption is detected at any size
    let mut b = Bounds::default();
    b.set("count.n", 3);
    b.set("dual.n", 2);
    b.set("one.n", 3);
    b.set("reg.n", 3);
    b.set("line.n", 3);
    b.set("hecke.base", 2);
    let detectors = [
        ("cograph-core", "COUNT-XCHECK"),
        ("morphism", "NEG-DUALITY"),
        ("onecograph", "ONE-COUNT"),
        ("isolability-set", "REG"),
        ("strat-line", "L-ORACLE"),
        ("factorization", "HECKE-GROUPOID"),
    ];
    let reg = registry();
    for (module, id) in detectors {
        for seed in [0u64, 1, 7] {
            let mutation = Mutation { module: module.to_string(), seed };
            let law = reg.iter().find(|l| l.id == id).unwrap();
            let o = run_law(law, &b, Some(&mutation));
            assert!(!o.pass, "{module}: {id} missed the mutation with seed {seed}");
            assert!(o.witness.is_some(), "{module}: {id} failed without a witness");
        }
    }
    let elapsed = start.elapsed().as_millis();
    assert!(elapsed < 120_000, "criterion 13 took {elapsed}ms");
    println!("criterion 13 (mutation sanity): PASS in {elapsed}ms (budget 120000ms)");
}
