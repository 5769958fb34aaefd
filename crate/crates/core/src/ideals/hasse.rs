use std::fmt::Write as _;

use super::{enumerate_primes, saturated_cls, PrimeIdeal};
use crate::cls::{Cls, EnumBounds};
use crate::weights::Series;

/// Covering relations of `⊆` on enumerated primes. Edges run from the
/// smaller ideal to the one covering it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub family: Series,
    pub nodes: Vec<PrimeIdeal>,
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph ideals_{} {{", self.family).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{n}\"];").unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Strict order matrix `lt[i][j]` meaning `nodes[i] ⊊ nodes[j]`.
fn strict_order(sats: &[Cls]) -> Vec<Vec<bool>> {
    let n = sats.len();
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                lt[i][j] = sats[i].contains(&sats[j]).expect("single family");
            }
        }
    }
    lt
}

pub fn hasse_diagram(family: Series, bounds: EnumBounds) -> HasseDiagram {
    let nodes = enumerate_primes(family, bounds);
    let sats: Vec<Cls> = nodes.iter().map(saturated_cls).collect();
    let lt = strict_order(&sats);
    let n = nodes.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                edges.push((i, j));
            }
        }
    }
    HasseDiagram {
        family,
        nodes,
        edges,
    }
}

/// Enumerated primes contained in no other enumerated prime.
pub fn maximal_primes(family: Series, bounds: EnumBounds) -> Vec<PrimeIdeal> {
    let nodes = enumerate_primes(family, bounds);
    let sats: Vec<Cls> = nodes.iter().map(saturated_cls).collect();
    maxima(&sats)
        .into_iter()
        .map(|i| nodes[i].clone())
        .collect()
}

fn maxima(sats: &[Cls]) -> Vec<usize> {
    (0..sats.len())
        .filter(|&i| {
            !(0..sats.len())
                .any(|j| j != i && sats[i].contains(&sats[j]).expect("single family"))
        })
        .collect()
}

/// Enumerated primes strictly contained only in maximal ones.
pub fn submaximal_primes(family: Series, bounds: EnumBounds) -> Vec<PrimeIdeal> {
    let nodes = enumerate_primes(family, bounds);
    let sats: Vec<Cls> = nodes.iter().map(saturated_cls).collect();
    let max = maxima(&sats);
    // small saturations first: an intermediate ideal is usually found early
    let mut order: Vec<usize> = (0..nodes.len()).filter(|i| !max.contains(i)).collect();
    order.sort_by_key(|&i| weight_of(&sats[i]));
    let below_max = |i: usize| max.iter().any(|&m| sats[i].contains(&sats[m]).expect("single family"));
    order
        .iter()
        .copied()
        .filter(|&i| {
            below_max(i)
                && !order
                    .iter()
                    .any(|&j| j != i && sats[i].contains(&sats[j]).expect("single family"))
        })
        .map(|i| nodes[i].clone())
        .collect()
}

/// Rough size of a c.l.s., used only to order the search.
fn weight_of(c: &Cls) -> u32 {
    c.components()
        .iter()
        .map(|q| {
            q.v() * 8
                + q.w() * 8
                + q.m() * 4
                + q.x().values().sum::<u32>()
                + q.z().values().sum::<u32>()
        })
        .sum()
}
