use serde::Serialize;

use super::{Graph, NodeId};

/// Connected-component labeling. Component ids follow the smallest internal
/// node id they contain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentLabeling {
    pub component_of: Vec<u32>,
    pub component_sizes: Vec<usize>,
    pub giant_id: usize,
}

impl ComponentLabeling {
    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn giant_size(&self) -> usize {
        self.component_sizes.get(self.giant_id).copied().unwrap_or(0)
    }

    /// Internal ids of the members of component `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        self.component_of
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x as usize == c)
            .map(|(v, _)| v)
            .collect()
    }
}

pub fn connected_components(g: &Graph) -> ComponentLabeling {
    let n = g.node_count();
    let mut component_of = vec![u32::MAX; n];
    let mut component_sizes = Vec::new();
    let mut queue: Vec<NodeId> = Vec::new();
    for root in 0..n {
        if component_of[root] != u32::MAX {
            continue;
        }
        let id = component_sizes.len() as u32;
        component_of[root] = id;
        queue.clear();
        queue.push(root as NodeId);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head] as usize;
            head += 1;
            for &w in g.neighbors(u) {
                if component_of[w as usize] == u32::MAX {
                    component_of[w as usize] = id;
                    queue.push(w);
                }
            }
        }
        component_sizes.push(queue.len());
    }
    // max_by_key keeps the last maximum; scan manually for the first.
    let mut giant_id = 0;
    for (c, &s) in component_sizes.iter().enumerate() {
        if s > component_sizes[giant_id] {
            giant_id = c;
        }
    }
    ComponentLabeling {
        component_of,
        component_sizes,
        giant_id,
    }
}

/// Induced subgraph on the giant component plus the map from new internal
/// ids to the internal ids of `g`.
pub fn extract_giant(g: &Graph, labels: &ComponentLabeling) -> (Graph, Vec<usize>) {
    let nodes = labels.members(labels.giant_id);
    let sub = g.induced_subgraph(&nodes);
    (sub, nodes)
}
