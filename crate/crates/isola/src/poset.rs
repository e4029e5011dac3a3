//! Finite posets with labeled elements, DOT and JSON export, and a brute
//! isomorphism check for small instances.

use crate::{IsolaError, Result};
use serde::Serialize;

/// Elements are kept sorted by label; `leq` is the full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds from labeled pairs, checking the poset axioms.
    pub fn new(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(IsolaError::VertexOutOfRange(a.max(b), n));
            }
            leq[a][b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(IsolaError::NotPoset(format!(
                        "antisymmetry fails between {:?} and {:?}",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        // sort by label for a canonical presentation
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        for w in order.windows(2) {
            if labels[w[0]] == labels[w[1]] {
                return Err(IsolaError::NotPoset(format!("duplicate label {:?}", labels[w[0]])));
            }
        }
        let sorted_labels: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let sorted_leq: Vec<Vec<bool>> =
            order.iter().map(|&i| order.iter().map(|&j| leq[i][j]).collect()).collect();
        Ok(FinitePoset { labels: sorted_labels, leq: sorted_leq })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn leq_labels(&self, a: &str, b: &str) -> Option<bool> {
        Some(self.leq(self.index_of(a)?, self.index_of(b)?))
    }

    /// Covering pairs (a < b with nothing strictly between).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = vec![];
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]);
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// DOT rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{} [label=\"{}\"];\n", i, l.replace('"', "\\\"")));
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            leq: self.leq.iter().map(|r| r.iter().map(|&b| if b { 1 } else { 0 }).collect()).collect(),
        }
    }

    /// Order isomorphism through an explicit relabeling of elements.
    pub fn isomorphic_via<F: Fn(&str) -> String>(&self, other: &FinitePoset, map: F) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.len()];
        for (i, l) in self.labels.iter().enumerate() {
            match other.index_of(&map(l)) {
                Some(j) => image[i] = j,
                None => return false,
            }
        }
        let mut seen = vec![false; self.len()];
        for &j in &image {
            if seen[j] {
                return false;
            }
            seen[j] = true;
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.leq[a][b] != other.leq[image[a]][image[b]] {
                    return false;
                }
            }
        }
        true
    }

    /// Brute isomorphism with invariant pruning; intended for small posets.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let sig = |p: &FinitePoset| -> Vec<(usize, usize)> {
            (0..n)
                .map(|i| {
                    let down = (0..n).filter(|&j| p.leq[j][i]).count();
                    let up = (0..n).filter(|&j| p.leq[i][j]).count();
                    (down, up)
                })
                .collect()
        };
        let sa = sig(self);
        let sb = sig(other);
        {
            let mut ka = sa.clone();
            let mut kb = sb.clone();
            ka.sort();
            kb.sort();
            if ka != kb {
                return false;
            }
        }
        let mut assign = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            a: &FinitePoset,
            b: &FinitePoset,
            sa: &[(usize, usize)],
            sb: &[(usize, usize)],
            i: usize,
            assign: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = a.len();
            if i == n {
                return true;
            }
            for j in 0..n {
                if used[j] || sa[i] != sb[j] {
                    continue;
                }
                let ok = (0..i).all(|k| {
                    a.leq[k][i] == b.leq[assign[k]][j] && a.leq[i][k] == b.leq[j][assign[k]]
                });
                if ok {
                    assign[i] = j;
                    used[j] = true;
                    if go(a, b, sa, sb, i + 1, assign, used) {
                        return true;
                    }
                    used[j] = false;
                    assign[i] = usize::MAX;
                }
            }
            false
        }
        go(self, other, &sa, &sb, 0, &mut assign, &mut used)
    }
}

/// JSON shape: `{"elements":[...],"leq":[[0|1,...],...]}`.
#[derive(Debug, Clone, Serialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<u8>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        FinitePoset::new(labels, &pairs).unwrap()
    }

    #[test]
    fn transitive_closure_and_covers() {
        let p = chain(3);
        let a = p.index_of("c0").unwrap();
        let c = p.index_of("c2").unwrap();
        assert!(p.leq(a, c));
        assert_eq!(p.covers().len(), 2);
    }

    #[test]
    fn antisymmetry_enforced() {
        let r = FinitePoset::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]);
        assert!(r.is_err());
    }

    #[test]
    fn iso_distinguishes_shapes() {
        let v = FinitePoset::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (0, 2)]).unwrap();
        let ch = chain(3);
        assert!(!v.is_isomorphic(&ch));
        assert!(v.is_isomorphic(&v));
        let v2 = FinitePoset::new(vec!["x".into(), "y".into(), "z".into()], &[(2, 0), (2, 1)]).unwrap();
        assert!(v.is_isomorphic(&v2));
    }

    #[test]
    fn dot_contains_hasse_edges() {
        let p = chain(2);
        let dot = p.to_dot();
        assert!(dot.contains("n0 -> n1"));
    }
}
