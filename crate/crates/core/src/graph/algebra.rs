// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use super::{Graph, PartialMatching, Subgraph, VertexSet};
use crate::error::{Error, Result};

fn check_shape(g: &Graph, h: &Graph, mu: &PartialMatching) -> Result<()> {
    if mu.source_n() != g.n() || mu.target_n() != h.n() {
        return Err(Error::MatchingShape(format!(
            "matching {}→{} used between graphs on {} and {} vertices",
            mu.source_n(),
            mu.target_n(),
            g.n(),
            h.n()
        )));
    }
    Ok(())
}

/// Edges `{l, m}` of `g` inside `mu`'s domain whose image `{mu(l), mu(m)}`
/// is an edge of `h`. Labels are `g`'s.
pub fn intersection_graph(g: &Graph, h: &Graph, mu: &PartialMatching) -> Result<Subgraph> {
    check_shape(g, h, mu)?;
    let edges = g.edges().filter(|&(u, v)| match (mu.get(u), mu.get(v)) {
        (Some(x), Some(y)) => h.has_edge(x, y),
        _ => false,
    });
    Ok(Subgraph {
        graph: Graph::from_edges(g.n(), edges)?,
        vertices: mu.domain(),
    })
}

/// Union over `graphs[i]` pulled back through `matchings[i]`, all maps
/// starting in `graphs[0]`'s labels. `matchings[0]` is normally the identity
/// on the common domain; every matching must have that same domain.
pub fn union_graph(graphs: &[&Graph], matchings: &[PartialMatching]) -> Result<Subgraph> {
    if graphs.is_empty() || graphs.len() != matchings.len() {
        return Err(Error::MatchingShape(format!(
            "{} graphs with {} matchings",
            graphs.len(),
            matchings.len()
        )));
    }
    let base = graphs[0];
    for (h, mu) in graphs.iter().zip(matchings) {
        check_shape(base, h, mu)?;
    }
    let domain = matchings[0].domain();
    if matchings[1..].iter().any(|mu| mu.domain() != domain) {
        return Err(Error::InconsistentDomains);
    }

    let mut edges = Vec::new();
    for (h, mu) in graphs.iter().zip(matchings) {
        let back = mu.inverse();
        for (x, y) in h.edges() {
            if let (Some(l), Some(m)) = (back.get(x), back.get(y)) {
                edges.push((l, m));
            }
        }
    }
    Ok(Subgraph {
        graph: Graph::from_edges(base.n(), edges)?,
        vertices: domain,
    })
}

/// Edges of `g` inside `restrict_to` that are absent from every subtracted
/// graph. A pair with an endpoint outside a matching's domain counts as
/// absent from that graph, so the edge survives.
pub fn difference_graph(
    g: &Graph,
    subtracted: &[(&Graph, &PartialMatching)],
    restrict_to: &VertexSet,
) -> Result<Subgraph> {
    if restrict_to.is_empty() {
        return Err(Error::EmptyRestriction);
    }
    for (h, mu) in subtracted {
        check_shape(g, h, mu)?;
    }
    let edges = g
        .edges()
        .filter(|&(u, v)| restrict_to.contains(u) && restrict_to.contains(v))
        .filter(|&(u, v)| {
            subtracted
                .iter()
                .all(|(h, mu)| match (mu.get(u), mu.get(v)) {
                    (Some(x), Some(y)) => !h.has_edge(x, y),
                    _ => true,
                })
        });
    Ok(Subgraph {
        graph: Graph::from_edges(g.n(), edges)?,
        vertices: restrict_to.clone(),
    })
}

/// `Σ labels[j]` over neighbors `j` of `i` that lie in `restrict_to`.
pub fn neighborhood_majority(g: &Graph, labels: &[i8], i: usize, restrict_to: &VertexSet) -> i64 {
    g.neighbors(i)
        .iter()
        .filter(|&&j| restrict_to.contains(j))
        .map(|&j| labels[j] as i64)
        .sum()
}
