//! Command-line surface: every subcommand is a thin adapter over one library
//! operation, with JSON output by default and deterministic field order.
//! Exit codes: 0 on success, 1 on a domain error, 2 on a law failure.

use clap::{Parser, Subcommand};
use isola::cograph::{copaw, paw, Cograph, SumKind};
use isola::io::{
    parse_cograph_auto, parse_graph6, CographJson, GraphMapJson, OneCographJson, PartialMapJson,
};
use isola::isolability::IsolabilityObject;
use isola::laws::{Bounds, Mutation};
use isola::{IsolaError, Result};
use serde_json::json;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "isola", version, about = "finite cographs, isolability carriers, and their law suite")]
struct Cli {
    /// Output format: json, text, or dot where applicable.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Worker bound for enumeration-heavy commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Recognize a symmetric relation with loops.
    Check {
        #[arg(long)]
        graph: Option<String>,
        /// graph6 input for the loopless part.
        #[arg(long)]
        graph6: Option<String>,
        /// 1-based loop list to add to graph6 input.
        #[arg(long, default_value = "")]
        loops: String,
    },
    /// Canonical cotree of a cograph.
    Canon {
        #[arg(long)]
        graph: String,
    },
    /// Isomorphism of two cographs.
    Iso {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Complement, loops included.
    Neg {
        #[arg(long)]
        graph: String,
    },
    /// Disconnected (d) or connected (c) sum.
    Sum {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Depth and codepth.
    Depth {
        #[arg(long)]
        graph: String,
    },
    /// The paw and co-paw on k vertices.
    Paws {
        #[arg(long)]
        k: usize,
    },
    /// Representatives of the isomorphism classes on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "any")]
        flavor: String,
        #[arg(long)]
        count: bool,
        #[arg(long, default_value = "cotree")]
        generator: String,
    },
    /// Relation-preserving maps between two cographs.
    Hom {
        #[arg(long)]
        src: String,
        #[arg(long)]
        tgt: String,
        #[arg(long)]
        count: bool,
    },
    /// Dispersive/accretive factorization of a map given as JSON.
    Factor {
        #[arg(long)]
        map: String,
    },
    /// Classification flags of a map given as JSON.
    Classify {
        #[arg(long)]
        map: String,
    },
    /// Composition of two partial maps given as JSON.
    ComposePartial {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Directed structures on a cograph.
    OneStructures {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        count: bool,
    },
    /// Separating configurations of an observer over an index.
    Points {
        #[arg(long, default_value = "point")]
        observer: String,
        #[arg(long)]
        size: u32,
        #[arg(long)]
        nonempty: bool,
        #[arg(long)]
        graph: String,
    },
    /// Carrier of the k-skeleton of an observer.
    Skeleton {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "point")]
        observer: String,
        #[arg(long)]
        size: u32,
        #[arg(long)]
        nonempty: bool,
        #[arg(long)]
        graph: String,
    },
    /// Carrier of the tensor product of two point observers.
    Tensor {
        #[arg(long)]
        x_size: u32,
        #[arg(long)]
        y_size: u32,
        #[arg(long)]
        graph: String,
    },
    /// The canonical isolability poset of an index.
    Kposet {
        #[arg(long)]
        graph: String,
    },
    /// The weak-order poset of the line over an index; --dims for powers.
    Line {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1)]
        dims: usize,
        /// Use the geometric grid oracle instead of the direct enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// The truncated unital Ran category.
    Ran {
        #[arg(long, default_value = "line")]
        family: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        size: u32,
    },
    /// Carrier of the bundle-modification family over an index.
    Hecke {
        #[arg(long)]
        base: usize,
        /// Comma-separated fiber sizes, or a single size for all points.
        #[arg(long)]
        fibers: String,
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "point")]
        observer: String,
        #[arg(long)]
        nonempty: bool,
    },
    /// The fixed-section fiber of the modification family.
    Grass {
        #[arg(long)]
        base: usize,
        #[arg(long)]
        fibers: String,
        /// Comma-separated 1-based section values.
        #[arg(long)]
        section: String,
        #[arg(long)]
        graph: String,
    },
    /// Run the law suite.
    Verify {
        #[arg(long, default_value = "*")]
        filter: String,
        /// Seeded corruption, as module:seed.
        #[arg(long)]
        mutate: Option<String>,
        /// Bounds file; also read from ISOLA_BOUNDS.
        #[arg(long)]
        bounds: Option<String>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep exit code 2 reserved for law failures
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            let kind = match &e {
                IsolaError::Parse(_) => "parse",
                IsolaError::UnknownLaw(_) => "unknown-law",
                _ => "domain",
            };
            println!("{}", json!({"error": {"kind": kind, "message": e.to_string()}}));
            std::process::exit(1);
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| IsolaError::Parse(format!("bad number {t:?}"))))
        .collect()
}

fn parse_flavor(s: &str) -> Result<isola::cotree::Flavor> {
    match s {
        "irr" => Ok(isola::cotree::Flavor::Irr),
        "refl" => Ok(isola::cotree::Flavor::Refl),
        "any" => Ok(isola::cotree::Flavor::Any),
        _ => Err(IsolaError::Parse(format!("unknown flavor {s:?}"))),
    }
}

fn observer(kind: &str, size: u32, nonempty: bool) -> Result<Arc<dyn IsolabilityObject>> {
    match kind {
        "point" => Ok(Arc::new(isola::isolability::PointIsolation::new(size))),
        "subset" if nonempty => Ok(Arc::new(isola::isolability::SubsetIsolation::nonempty(size))),
        "subset" => Ok(Arc::new(isola::isolability::SubsetIsolation::new(size))),
        _ => Err(IsolaError::Parse(format!("unknown observer {kind:?}"))),
    }
}

fn carrier_json(lam: &Cograph, carrier: &[isola::isolability::Config]) -> serde_json::Value {
    let points: Vec<serde_json::Value> = carrier
        .iter()
        .map(|cfg| serde_json::Value::Array(cfg.iter().map(|v| v.to_json()).collect()))
        .collect();
    json!({"lambda": CographJson::from_cograph(lam), "points": points})
}

fn poset_out(p: &isola::poset::FinitePoset, format: &str) -> String {
    match format {
        "dot" => p.to_dot(),
        _ => serde_json::to_string(&p.to_json()).expect("poset serializes"),
    }
}

fn run(cli: Cli) -> Result<i32> {
    let format = cli.format.as_str();
    match cli.cmd {
        Cmd::Check { graph, graph6, loops } => {
            let verdict = match (graph, graph6) {
                (Some(g), None) => match parse_cograph_auto(&g) {
                    Ok(_) => true,
                    Err(IsolaError::NotCograph(..)) => false,
                    Err(e) => return Err(e),
                },
                (None, Some(g6)) => match parse_graph6(&g6, &parse_list(&loops)?) {
                    Ok(_) => true,
                    Err(IsolaError::NotCograph(..)) => false,
                    Err(e) => return Err(e),
                },
                _ => return Err(IsolaError::Parse("provide exactly one of --graph or --graph6".into())),
            };
            println!("{}", json!({"cograph": verdict}));
        }
        Cmd::Canon { graph } => {
            let c = parse_cograph_auto(&graph)?;
            let e = isola::cotree::canonical_form(&c);
            let key: String = e.encode().iter().map(|b| format!("{b:02x}")).collect();
            println!("{}", json!({"canon": e.render(), "key": key}));
        }
        Cmd::Iso { a, b } => {
            let (a, b) = (parse_cograph_auto(&a)?, parse_cograph_auto(&b)?);
            println!("{}", json!({"isomorphic": isola::cotree::is_isomorphic(&a, &b)}));
        }
        Cmd::Neg { graph } => {
            let c = parse_cograph_auto(&graph)?;
            match format {
                "text" => println!("{}", isola::io::render_cograph_text(&c.neg())),
                _ => println!("{}", serde_json::to_string(&CographJson::from_cograph(&c.neg())).unwrap()),
            }
        }
        Cmd::Sum { kind, a, b } => {
            let kind = match kind.as_str() {
                "d" | "dsum" => SumKind::Dsum,
                "c" | "csum" => SumKind::Csum,
                _ => return Err(IsolaError::Parse(format!("unknown sum kind {kind:?}"))),
            };
            let s = Cograph::sum(kind, &parse_cograph_auto(&a)?, &parse_cograph_auto(&b)?);
            match format {
                "text" => println!("{}", isola::io::render_cograph_text(&s)),
                _ => println!("{}", serde_json::to_string(&CographJson::from_cograph(&s)).unwrap()),
            }
        }
        Cmd::Depth { graph } => {
            let c = parse_cograph_auto(&graph)?;
            println!("{}", json!({"depth": c.depth(), "codepth": c.codepth()}));
        }
        Cmd::Paws { k } => {
            if k == 0 {
                return Err(IsolaError::Invalid("k must be positive".into()));
            }
            println!(
                "{}",
                json!({
                    "paw": CographJson::from_cograph(&paw(k)),
                    "copaw": CographJson::from_cograph(&copaw(k)),
                })
            );
        }
        Cmd::Enumerate { n, flavor, count, generator } => {
            let flavor = parse_flavor(&flavor)?;
            let classes = match generator.as_str() {
                "cotree" => isola::cotree::enumerate_checked(n, flavor)?,
                "filter" => {
                    if n > 6 {
                        return Err(IsolaError::BoundExceeded("filter generator is bounded at 6 vertices".into()));
                    }
                    isola::cotree::enumerate_cographs_filter(n, flavor)
                }
                _ => return Err(IsolaError::Parse(format!("unknown generator {generator:?}"))),
            };
            if count {
                println!("{}", json!({"count": classes.len()}));
            } else {
                let list: Vec<CographJson> = classes.iter().map(CographJson::from_cograph).collect();
                println!("{}", serde_json::to_string(&json!({"cographs": list})).unwrap());
            }
        }
        Cmd::Hom { src, tgt, count } => {
            let (s, t) = (parse_cograph_auto(&src)?, parse_cograph_auto(&tgt)?);
            let maps = isola::morphism::hom_maps(&s, &t);
            if count {
                println!("{}", json!({"count": maps.len()}));
            } else {
                let list: Vec<GraphMapJson> = maps.iter().map(GraphMapJson::from_map).collect();
                println!("{}", serde_json::to_string(&json!({"maps": list})).unwrap());
            }
        }
        Cmd::Factor { map } => {
            let m: GraphMapJson =
                serde_json::from_str(&map).map_err(|e| IsolaError::Parse(e.to_string()))?;
            let m = m.to_map()?;
            let (d, a) = m.factor_da();
            println!(
                "{}",
                json!({"dispersive": GraphMapJson::from_map(&d), "accretive": GraphMapJson::from_map(&a)})
            );
        }
        Cmd::Classify { map } => {
            let m: GraphMapJson =
                serde_json::from_str(&map).map_err(|e| IsolaError::Parse(e.to_string()))?;
            let k = m.to_map()?.classify();
            println!(
                "{}",
                json!({
                    "dispersive": k.dispersive, "accretive": k.accretive,
                    "surjective": k.surjective, "injective": k.injective,
                    "fibration": k.fibration, "attached": k.attached,
                    "inert": k.inert, "active": k.active,
                })
            );
        }
        Cmd::ComposePartial { first, second } => {
            let f: PartialMapJson =
                serde_json::from_str(&first).map_err(|e| IsolaError::Parse(e.to_string()))?;
            let g: PartialMapJson =
                serde_json::from_str(&second).map_err(|e| IsolaError::Parse(e.to_string()))?;
            let c = isola::partial::PartialGraphMap::compose(&g.to_partial()?, &f.to_partial()?)?;
            println!("{}", serde_json::to_string(&PartialMapJson::from_partial(&c)).unwrap());
        }
        Cmd::OneStructures { graph, count } => {
            let lam = parse_cograph_auto(&graph)?;
            let structures = isola::onecograph::one_structures(&lam);
            if count {
                println!("{}", json!({"count": structures.len()}));
            } else {
                let list: Vec<OneCographJson> =
                    structures.iter().map(OneCographJson::from_onecograph).collect();
                println!("{}", serde_json::to_string(&json!({"structures": list})).unwrap());
            }
        }
        Cmd::Points { observer: obs, size, nonempty, graph } => {
            let lam = parse_cograph_auto(&graph)?;
            let obj = observer(&obs, size, nonempty)?;
            let carrier = obj.carrier(&lam)?;
            println!("{}", serde_json::to_string(&carrier_json(&lam, &carrier)).unwrap());
        }
        Cmd::Skeleton { k, observer: obs, size, nonempty, graph } => {
            let lam = parse_cograph_auto(&graph)?;
            let obj = isola::isolability::skeleton(k, observer(&obs, size, nonempty)?);
            let carrier = obj.carrier(&lam)?;
            println!("{}", serde_json::to_string(&carrier_json(&lam, &carrier)).unwrap());
        }
        Cmd::Tensor { x_size, y_size, graph } => {
            let lam = parse_cograph_auto(&graph)?;
            let t = isola::isolability::tensor(
                Arc::new(isola::isolability::PointIsolation::new(x_size)),
                Arc::new(isola::isolability::PointIsolation::new(y_size)),
            );
            let carrier = t.carrier(&lam)?;
            println!("{}", serde_json::to_string(&carrier_json(&lam, &carrier)).unwrap());
        }
        Cmd::Kposet { graph } => {
            let lam = parse_cograph_auto(&graph)?;
            println!("{}", poset_out(&isola::stratline::k_poset(&lam)?, format));
        }
        Cmd::Line { graph, dims, oracle } => {
            let lam = parse_cograph_auto(&graph)?;
            let p = if oracle {
                isola::stratline::face_poset_oracle(&lam, dims)?
            } else if dims == 1 {
                isola::stratline::line_poset(&lam)?
            } else {
                isola::stratline::tensor_line(dims, &lam)?
            };
            println!("{}", poset_out(&p, format));
        }
        Cmd::Ran { family, max_n, size } => {
            let cat = match family.as_str() {
                "line" => isola::rancat::ran_unital(&isola::rancat::LineRanFamily, max_n)?,
                "point" => {
                    let object: Arc<dyn IsolabilityObject> =
                        Arc::new(isola::isolability::PointIsolation::new(size));
                    isola::rancat::ran_unital(&isola::rancat::ObjectRanFamily { object }, max_n)?
                }
                _ => return Err(IsolaError::Parse(format!("unknown family {family:?}"))),
            };
            println!("{}", serde_json::to_string(&cat.to_json()).unwrap());
        }
        Cmd::Hecke { base, fibers, graph, observer: obs, nonempty } => {
            let lam = parse_cograph_auto(&graph)?;
            let bd = bundle_data(base, &fibers)?;
            let observer = match obs.as_str() {
                "point" => isola::factorization::Observer::Points,
                "subset" => isola::factorization::Observer::Subsets { nonempty },
                _ => return Err(IsolaError::Parse(format!("unknown observer {obs:?}"))),
            };
            use isola::factorization::AttachedFamily;
            let fam = isola::factorization::HeckeFamily::new(bd, observer);
            let carrier = fam.carrier(&lam)?;
            let elements: Vec<serde_json::Value> = carrier
                .iter()
                .map(|e| {
                    json!({
                        "z": e.z.iter().map(|&x| x + 1).collect::<Vec<u32>>(),
                        "e1": e.e1.iter().map(|&x| x + 1).collect::<Vec<u32>>(),
                        "e2": e.e2.iter().map(|&x| x + 1).collect::<Vec<u32>>(),
                    })
                })
                .collect();
            println!("{}", json!({"total": carrier.len(), "elements": elements}));
        }
        Cmd::Grass { base, fibers, section, graph } => {
            let lam = parse_cograph_auto(&graph)?;
            let bd = bundle_data(base, &fibers)?;
            let section: Vec<u32> = parse_list(&section)?
                .into_iter()
                .map(|v| {
                    if v == 0 {
                        Err(IsolaError::Parse("section values are 1-based".into()))
                    } else {
                        Ok((v - 1) as u32)
                    }
                })
                .collect::<Result<_>>()?;
            let fiber = isola::factorization::grassmannian(&bd, &section, &lam)?;
            let elements: Vec<serde_json::Value> = fiber
                .iter()
                .map(|(z, e2)| {
                    json!({
                        "z": z.iter().map(|&x| x + 1).collect::<Vec<u32>>(),
                        "e2": e2.iter().map(|&x| x + 1).collect::<Vec<u32>>(),
                    })
                })
                .collect();
            println!("{}", json!({"count": fiber.len(), "elements": elements}));
        }
        Cmd::Verify { filter, mutate, bounds } => {
            let mut b = Bounds::default();
            let path = bounds.or_else(|| std::env::var("ISOLA_BOUNDS").ok());
            if let Some(path) = path {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| IsolaError::Parse(format!("bounds file {path}: {e}")))?;
                b = Bounds::from_json(&text)?;
            }
            let mutation = mutate.as_deref().map(Mutation::parse).transpose()?;
            let jobs = cli.jobs.unwrap_or_else(|| {
                std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
            });
            let report = isola::laws::run_suite(&filter, &b, mutation.as_ref(), jobs)?;
            match format {
                "text" => print!("{}", report.to_table()),
                _ => println!("{}", serde_json::to_string(&report).unwrap()),
            }
            if !report.passed() {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn bundle_data(base: usize, fibers: &str) -> Result<isola::factorization::BundleData> {
    let sizes = parse_list(fibers)?;
    let fibers: Vec<u32> = if sizes.len() == 1 {
        vec![sizes[0] as u32; base]
    } else if sizes.len() == base {
        sizes.into_iter().map(|v| v as u32).collect()
    } else {
        return Err(IsolaError::Parse("fiber list must have one entry or one per base point".into()));
    };
    Ok(isola::factorization::BundleData::new(fibers))
}
