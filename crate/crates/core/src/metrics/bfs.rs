use crate::graph::{Graph, NodeId};

pub(crate) const UNREACHED: u32 = u32::MAX;

/// Reusable BFS state. After `run`, `order()` lists the reached nodes in
/// nondecreasing distance and `dist` is valid for them.
pub(crate) struct Bfs {
    dist: Vec<u32>,
    queue: Vec<NodeId>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Bfs {
            dist: vec![UNREACHED; n],
            queue: Vec::with_capacity(n.min(1 << 16)),
        }
    }

    /// Returns the eccentricity of `source` within its component.
    pub fn run(&mut self, g: &Graph, source: usize) -> u32 {
        for &v in &self.queue {
            self.dist[v as usize] = UNREACHED;
        }
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source as NodeId);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            let next = self.dist[u] + 1;
            for &w in g.neighbors(u) {
                let slot = &mut self.dist[w as usize];
                if *slot == UNREACHED {
                    *slot = next;
                    self.queue.push(w);
                }
            }
        }
        self.dist[*self.queue.last().unwrap() as usize]
    }

    pub fn order(&self) -> &[NodeId] {
        &self.queue
    }

    #[inline]
    pub fn dist(&self, v: usize) -> u32 {
        self.dist[v]
    }

    /// Last node reached, one of the farthest from the source.
    pub fn farthest(&self) -> usize {
        *self.queue.last().unwrap() as usize
    }

    /// Adds the number of reached nodes at each distance >= 1 to `counts`.
    pub fn accumulate_levels(&self, counts: &mut Vec<u64>) {
        for &v in &self.queue[1..] {
            let d = self.dist[v as usize] as usize;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
    }

    /// Walks back from `target` toward the source along a shortest path and
    /// returns the node `steps` hops before `target`.
    pub fn walk_back(&self, g: &Graph, target: usize, steps: u32) -> usize {
        let mut v = target;
        for _ in 0..steps {
            let d = self.dist[v];
            v = g
                .neighbors(v)
                .iter()
                .map(|&w| w as usize)
                .find(|&w| self.dist[w] + 1 == d)
                .expect("a shortest-path predecessor exists");
        }
        v
    }
}
