//! Text, JSON, and graph6 input/output. Vertices are 1-based in every
//! external format and 0-based internally.

use crate::cograph::Cograph;
use crate::morphism::GraphMap;
use crate::onecograph::OneCograph;
use crate::partial::PartialGraphMap;
use crate::{IsolaError, Result};
use serde::{Deserialize, Serialize};

/// JSON shape for a cograph: `{"n":k,"edges":[[i,j],...],"loops":[i,...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CographJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub loops: Vec<usize>,
}

impl CographJson {
    pub fn from_cograph(c: &Cograph) -> Self {
        CographJson {
            n: c.n(),
            edges: c.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
            loops: c.loops().iter().map(|&a| a + 1).collect(),
        }
    }

    pub fn to_cograph(&self) -> Result<Cograph> {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                if a == 0 || b == 0 {
                    Err(IsolaError::Parse("vertices are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<_>>()?;
        let loops: Vec<usize> = self
            .loops
            .iter()
            .map(|&a| if a == 0 { Err(IsolaError::Parse("vertices are 1-based".into())) } else { Ok(a - 1) })
            .collect::<Result<_>>()?;
        Cograph::new(self.n, &edges, &loops)
    }
}

/// JSON shape for a directed cograph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OneCographJson {
    pub n: usize,
    pub dedges: Vec<(usize, usize)>,
    pub loops: Vec<usize>,
}

impl OneCographJson {
    pub fn from_onecograph(g: &OneCograph) -> Self {
        OneCographJson {
            n: g.n(),
            dedges: g.dedges().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
            loops: g.loops().iter().map(|&a| a + 1).collect(),
        }
    }

    pub fn to_onecograph(&self) -> Result<OneCograph> {
        let dedges: Vec<(usize, usize)> = self
            .dedges
            .iter()
            .map(|&(a, b)| {
                if a == 0 || b == 0 {
                    Err(IsolaError::Parse("vertices are 1-based".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<_>>()?;
        let loops: Vec<usize> = self
            .loops
            .iter()
            .map(|&a| if a == 0 { Err(IsolaError::Parse("vertices are 1-based".into())) } else { Ok(a - 1) })
            .collect::<Result<_>>()?;
        OneCograph::new(self.n, &dedges, &loops)
    }
}

/// JSON shape for a total map: `{"src":...,"tgt":...,"f":[...]}` with 1-based
/// values indexed by source vertex order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphMapJson {
    pub src: CographJson,
    pub tgt: CographJson,
    pub f: Vec<usize>,
}

impl GraphMapJson {
    pub fn from_map(m: &GraphMap) -> Self {
        GraphMapJson {
            src: CographJson::from_cograph(m.src()),
            tgt: CographJson::from_cograph(m.tgt()),
            f: m.f().iter().map(|&v| v + 1).collect(),
        }
    }

    pub fn to_map(&self) -> Result<GraphMap> {
        let src = self.src.to_cograph()?;
        let tgt = self.tgt.to_cograph()?;
        let f: Vec<usize> = self
            .f
            .iter()
            .map(|&v| if v == 0 { Err(IsolaError::Parse("vertices are 1-based".into())) } else { Ok(v - 1) })
            .collect::<Result<_>>()?;
        GraphMap::new(src, tgt, f)
    }
}

/// JSON shape for a partial map; adds the 1-based domain list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartialMapJson {
    pub src: CographJson,
    pub tgt: CographJson,
    pub domain: Vec<usize>,
    pub f: Vec<usize>,
}

impl PartialMapJson {
    pub fn from_partial(p: &PartialGraphMap) -> Self {
        PartialMapJson {
            src: CographJson::from_cograph(p.src()),
            tgt: CographJson::from_cograph(p.tgt()),
            domain: p.domain().iter().map(|&v| v + 1).collect(),
            f: (0..p.domain().len()).map(|i| p.map().apply(i) + 1).collect(),
        }
    }

    pub fn to_partial(&self) -> Result<PartialGraphMap> {
        let src = self.src.to_cograph()?;
        let tgt = self.tgt.to_cograph()?;
        let domain: Vec<usize> = self
            .domain
            .iter()
            .map(|&v| if v == 0 { Err(IsolaError::Parse("vertices are 1-based".into())) } else { Ok(v - 1) })
            .collect::<Result<_>>()?;
        let f: Vec<usize> = self
            .f
            .iter()
            .map(|&v| if v == 0 { Err(IsolaError::Parse("vertices are 1-based".into())) } else { Ok(v - 1) })
            .collect::<Result<_>>()?;
        PartialGraphMap::new(src, domain, tgt, f)
    }
}

/// Parses `n=<k>; edges=<i-j,...>; loops=<i,...>`. The edges and loops
/// sections may be empty or omitted.
pub fn parse_cograph_text(s: &str) -> Result<Cograph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = vec![];
    let mut loops: Vec<usize> = vec![];
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| IsolaError::Parse(format!("expected key=value, got {part:?}")))?;
        match key.trim() {
            "n" => {
                n = Some(
                    value
                        .trim()
                        .parse()
                        .map_err(|_| IsolaError::Parse(format!("bad vertex count {value:?}")))?,
                );
            }
            "edges" => {
                for e in value.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                    let (a, b) = e
                        .split_once('-')
                        .ok_or_else(|| IsolaError::Parse(format!("bad edge {e:?}")))?;
                    let a: usize = a.trim().parse().map_err(|_| IsolaError::Parse(format!("bad edge {e:?}")))?;
                    let b: usize = b.trim().parse().map_err(|_| IsolaError::Parse(format!("bad edge {e:?}")))?;
                    if a == 0 || b == 0 {
                        return Err(IsolaError::Parse("vertices are 1-based".into()));
                    }
                    edges.push((a - 1, b - 1));
                }
            }
            "loops" => {
                for l in value.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                    let a: usize = l.parse().map_err(|_| IsolaError::Parse(format!("bad loop {l:?}")))?;
                    if a == 0 {
                        return Err(IsolaError::Parse("vertices are 1-based".into()));
                    }
                    loops.push(a - 1);
                }
            }
            other => return Err(IsolaError::Parse(format!("unknown section {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| IsolaError::Parse("missing n=<k>".into()))?;
    Cograph::new(n, &edges, &loops)
}

/// Renders the text format, 1-based.
pub fn render_cograph_text(c: &Cograph) -> String {
    let edges: Vec<String> = c.edges().iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
    let loops: Vec<String> = c.loops().iter().map(|&a| (a + 1).to_string()).collect();
    format!("n={}; edges={}; loops={}", c.n(), edges.join(","), loops.join(","))
}

/// Decodes a graph6 string into a loopless cograph; loops can be supplied
/// separately (1-based).
pub fn parse_graph6(s: &str, loops: &[usize]) -> Result<Cograph> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(IsolaError::Parse("empty graph6 string".into()));
    }
    let (n, mut idx) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(IsolaError::Parse("truncated graph6 header".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12) | (((bytes[2] - 63) as usize) << 6) | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let mut bits = vec![];
    for &b in &bytes[idx..] {
        if !(63..=126).contains(&b) {
            return Err(IsolaError::Parse("invalid graph6 byte".into()));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    idx = 0;
    let mut edges = vec![];
    for j in 1..n {
        for i in 0..j {
            if idx >= bits.len() {
                return Err(IsolaError::Parse("truncated graph6 bit vector".into()));
            }
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    let loops0: Vec<usize> = loops
        .iter()
        .map(|&a| if a == 0 { Err(IsolaError::Parse("vertices are 1-based".into())) } else { Ok(a - 1) })
        .collect::<Result<_>>()?;
    Cograph::new(n, &edges, &loops0)
}

/// Reads a cograph from any of the accepted syntaxes: JSON when the string
/// starts with `{`, otherwise the text format.
pub fn parse_cograph_auto(s: &str) -> Result<Cograph> {
    let t = s.trim();
    if t.starts_with('{') {
        let j: CographJson = serde_json::from_str(t).map_err(|e| IsolaError::Parse(e.to_string()))?;
        j.to_cograph()
    } else {
        parse_cograph_text(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let c = Cograph::new(4, &[(0, 1), (1, 2)], &[3]).unwrap();
        let s = render_cograph_text(&c);
        assert_eq!(s, "n=4; edges=1-2,2-3; loops=4");
        assert_eq!(parse_cograph_text(&s).unwrap(), c);
    }

    #[test]
    fn empty_sections() {
        assert_eq!(parse_cograph_text("n=2; edges=").unwrap(), Cograph::trivial(2));
        assert_eq!(parse_cograph_text("n=0").unwrap(), Cograph::empty());
    }

    #[test]
    fn p4_text_is_rejected_as_cograph() {
        assert!(parse_cograph_text("n=4; edges=1-2,2-3,3-4").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let c = Cograph::new(3, &[(0, 2)], &[1]).unwrap();
        let j = CographJson::from_cograph(&c);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[1,3]],"loops":[2]}"#);
        let back: CographJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_cograph().unwrap(), c);
    }

    #[test]
    fn graph6_decode() {
        // "A_" is the single edge on two vertices
        let c = parse_graph6("A_", &[]).unwrap();
        assert_eq!(c, Cograph::new(2, &[(0, 1)], &[]).unwrap());
        // triangle plus isolated vertex: "Cw" wait; use K3: "Bw"
        let k3 = parse_graph6("Bw", &[]).unwrap();
        assert_eq!(k3, Cograph::complete_irr(3));
        // with loops supplied separately
        let c = parse_graph6("A_", &[1, 2]).unwrap();
        assert_eq!(c, Cograph::complete(2));
    }
}
