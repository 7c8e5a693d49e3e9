//! Ground-truth community covers and the per-node / per-pair quantities
//! derived from them (membership number, overlap size, community size).

use std::io::BufRead;
use std::path::Path;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::histogram::IntegerHistogram;
use crate::io::open_text;

pub type CommunityId = u32;

/// Node to community membership in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityCover {
    communities: Vec<Vec<NodeId>>,
    memberships: Vec<Vec<CommunityId>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSummary {
    pub communities: usize,
    pub empty_lines_skipped: usize,
    pub duplicates_dropped: usize,
}

impl CommunityCover {
    /// Builds a cover over nodes `0..node_count`. Members are sorted and
    /// deduplicated; empty communities are rejected.
    pub fn from_communities(node_count: usize, communities: Vec<Vec<NodeId>>) -> Result<Self> {
        Ok(Self::build(node_count, communities)?.0)
    }

    fn build(node_count: usize, mut communities: Vec<Vec<NodeId>>) -> Result<(Self, usize)> {
        let mut duplicates = 0;
        for (c, members) in communities.iter_mut().enumerate() {
            if members.is_empty() {
                return Err(Error::InvalidArgument(format!("community {c} is empty")));
            }
            if let Some(&v) = members.iter().find(|&&v| v as usize >= node_count) {
                return Err(Error::InvalidNode(v as usize));
            }
            members.sort_unstable();
            let before = members.len();
            members.dedup();
            duplicates += before - members.len();
        }
        let mut memberships = vec![Vec::new(); node_count];
        for (c, members) in communities.iter().enumerate() {
            for &v in members {
                memberships[v as usize].push(c as CommunityId);
            }
        }
        Ok((
            CommunityCover {
                communities,
                memberships,
            },
            duplicates,
        ))
    }

    pub fn community_count(&self) -> usize {
        self.communities.len()
    }

    pub fn node_count(&self) -> usize {
        self.memberships.len()
    }

    pub fn members(&self, c: usize) -> &[NodeId] {
        &self.communities[c]
    }

    pub fn memberships(&self, v: usize) -> &[CommunityId] {
        &self.memberships[v]
    }

    pub fn communities(&self) -> impl Iterator<Item = &[NodeId]> {
        self.communities.iter().map(Vec::as_slice)
    }

    pub fn max_membership(&self) -> usize {
        self.memberships.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of nodes that belong to no community.
    pub fn uncovered_nodes(&self) -> usize {
        self.memberships.iter().filter(|m| m.is_empty()).count()
    }

    /// Sum over nodes of C(m_v, 2): the number of (node, community pair)
    /// incidences, which equals the sum of all pairwise overlap sizes.
    pub fn pair_incidences(&self) -> u64 {
        self.memberships
            .iter()
            .map(|m| {
                let k = m.len() as u64;
                k * k.saturating_sub(1) / 2
            })
            .sum()
    }

    /// Keeps the communities accepted by `keep`, renumbering them densely.
    pub fn retain_communities<F>(&self, mut keep: F) -> CommunityCover
    where
        F: FnMut(&[NodeId]) -> bool,
    {
        let kept = self
            .communities
            .iter()
            .filter(|c| keep(c))
            .cloned()
            .collect();
        Self::build(self.node_count(), kept)
            .expect("subset of a valid cover")
            .0
    }

    /// Checks that both directions of the membership map agree exactly.
    pub fn check_inversion(&self) -> bool {
        let forward: usize = self.communities.iter().map(Vec::len).sum();
        let backward: usize = self.memberships.iter().map(Vec::len).sum();
        forward == backward
            && self.communities.iter().all(|m| !m.is_empty() && m.windows(2).all(|w| w[0] < w[1]))
            && self.memberships.iter().enumerate().all(|(v, cs)| {
                cs.windows(2).all(|w| w[0] < w[1])
                    && cs
                        .iter()
                        .all(|&c| self.communities[c as usize].binary_search(&(v as NodeId)).is_ok())
            })
    }
}

/// Parses a SNAP `.cmty` file: one community per line, node labels
/// separated by whitespace. Labels are resolved through `g`.
pub fn parse_cover<R: BufRead>(reader: R, g: &Graph) -> Result<(CommunityCover, CoverSummary)> {
    let mut communities = Vec::new();
    let mut empty = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            empty += 1;
            continue;
        }
        let mut members = Vec::new();
        for tok in line.split_whitespace() {
            let label: u64 = tok.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("invalid node id {tok:?}"),
            })?;
            let v = g.node_of_label(label).ok_or(Error::UnknownNode {
                id: label,
                line: idx + 1,
            })?;
            members.push(v as NodeId);
        }
        communities.push(members);
    }
    let (cover, duplicates_dropped) = CommunityCover::build(g.node_count(), communities)?;
    let summary = CoverSummary {
        communities: cover.community_count(),
        empty_lines_skipped: empty,
        duplicates_dropped,
    };
    Ok((cover, summary))
}

pub fn read_cover(path: &Path, g: &Graph) -> Result<(CommunityCover, CoverSummary)> {
    parse_cover(open_text(path)?, g)
}

/// Histogram of membership numbers over covered nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipHistogram {
    pub histogram: IntegerHistogram,
    pub uncovered_nodes: usize,
}

pub fn membership_histogram(cover: &CommunityCover) -> MembershipHistogram {
    let histogram = cover
        .memberships
        .iter()
        .map(|m| m.len() as u64)
        .filter(|&k| k > 0)
        .collect();
    MembershipHistogram {
        histogram,
        uncovered_nodes: cover.uncovered_nodes(),
    }
}

pub fn community_size_histogram(cover: &CommunityCover) -> IntegerHistogram {
    cover.communities.iter().map(|c| c.len() as u64).collect()
}

/// Overlap size of every community pair that shares at least one node.
pub fn overlap_size_histogram(cover: &CommunityCover) -> IntegerHistogram {
    pairwise_overlaps(cover)
        .pairs
        .iter()
        .map(|&(_, _, w)| w as u64)
        .collect()
}

/// Nonzero pairwise overlaps, `(a, b, |C_a ∩ C_b|)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairOverlaps {
    pub pairs: Vec<(CommunityId, CommunityId, u32)>,
    pub max_membership: usize,
}

#[inline]
fn pair_key(a: CommunityId, b: CommunityId) -> u64 {
    (a as u64) << 32 | b as u64
}

/// Node-centric overlap join: each node adds one to every pair of the
/// communities it belongs to. Work is sharded over node ranges and the
/// per-shard counters are merged by addition, so the result does not depend
/// on the number of workers.
pub fn pairwise_overlaps(cover: &CommunityCover) -> PairOverlaps {
    let n = cover.node_count();
    let shard = (n / (4 * rayon::current_num_threads())).max(4096);
    let merged = cover
        .memberships
        .par_chunks(shard)
        .map(|chunk| {
            let mut acc: FxHashMap<u64, u32> = FxHashMap::default();
            for ms in chunk {
                for (i, &a) in ms.iter().enumerate() {
                    for &b in &ms[i + 1..] {
                        *acc.entry(pair_key(a, b)).or_insert(0) += 1;
                    }
                }
            }
            acc
        })
        .reduce(FxHashMap::default, |mut x, mut y| {
            if x.len() < y.len() {
                std::mem::swap(&mut x, &mut y);
            }
            for (k, c) in y {
                *x.entry(k).or_insert(0) += c;
            }
            x
        });
    let mut pairs: Vec<_> = merged
        .into_iter()
        .map(|(k, c)| ((k >> 32) as CommunityId, k as u32, c))
        .collect();
    pairs.sort_unstable();
    PairOverlaps {
        pairs,
        max_membership: cover.max_membership(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn labeled_graph() -> Graph {
        parse_edge_list("1 2\n2 3\n3 4\n4 5\n".as_bytes()).unwrap().0
    }

    fn cover_from(n: usize, cs: &[&[u32]]) -> CommunityCover {
        CommunityCover::from_communities(n, cs.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn parse_builds_both_directions() {
        let g = labeled_graph();
        let (cover, summary) = parse_cover("1 2 3\n3 4\n5\n".as_bytes(), &g).unwrap();
        assert_eq!(summary.communities, 3);
        let v3 = g.node_of_label(3).unwrap();
        assert_eq!(cover.memberships(v3), &[0, 1]);
        assert!(cover.check_inversion());
    }

    #[test]
    fn parse_dedups_within_line() {
        let g = labeled_graph();
        let (cover, summary) = parse_cover("1 1 2\n".as_bytes(), &g).unwrap();
        assert_eq!(cover.members(0).len(), 2);
        assert_eq!(summary.duplicates_dropped, 1);
    }

    #[test]
    fn parse_skips_empty_lines() {
        let g = labeled_graph();
        let (cover, summary) = parse_cover("1 2\n\n3 4\n".as_bytes(), &g).unwrap();
        assert_eq!(cover.community_count(), 2);
        assert_eq!(summary.empty_lines_skipped, 1);
    }

    #[test]
    fn parse_unknown_node_names_id_and_line() {
        let g = labeled_graph();
        match parse_cover("1 2\n3 99\n".as_bytes(), &g) {
            Err(Error::UnknownNode { id, line }) => assert_eq!((id, line), (99, 2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn toy_histograms() {
        // A={1,2,3} B={3,4} C={5} with labels 1..5 -> ids 0..4
        let cover = cover_from(5, &[&[0, 1, 2], &[2, 3], &[4]]);
        let m = membership_histogram(&cover);
        assert_eq!(m.histogram.bins().iter().map(|(&a, &b)| (a, b)).collect::<Vec<_>>(), vec![(1, 4), (2, 1)]);
        assert_eq!(m.uncovered_nodes, 0);
        let s = community_size_histogram(&cover);
        assert_eq!(s.bins().iter().map(|(&a, &b)| (a, b)).collect::<Vec<_>>(), vec![(1, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn overlap_toy() {
        let cover = cover_from(5, &[&[0, 1, 2], &[1, 2, 3], &[4]]);
        let h = overlap_size_histogram(&cover);
        assert_eq!(h.bins().iter().map(|(&a, &b)| (a, b)).collect::<Vec<_>>(), vec![(2, 1)]);
        assert_eq!(pairwise_overlaps(&cover).pairs, vec![(0, 1, 2)]);
    }

    #[test]
    fn disjoint_cover_has_no_overlaps() {
        let cover = cover_from(4, &[&[0, 1], &[2], &[3]]);
        assert!(overlap_size_histogram(&cover).is_empty());
    }

    #[test]
    fn single_community_and_copies() {
        let cover = cover_from(6, &[&[0, 1, 2, 3, 4, 5]]);
        assert_eq!(membership_histogram(&cover).histogram.get(1), 6);
        let copies = cover_from(4, &[&[0, 1], &[0, 1], &[0, 1]]);
        assert_eq!(community_size_histogram(&copies).get(2), 3);
    }

    #[test]
    fn uncovered_nodes_counted_separately() {
        let cover = cover_from(5, &[&[0, 1]]);
        let m = membership_histogram(&cover);
        assert_eq!(m.uncovered_nodes, 3);
        assert_eq!(m.histogram.total() as usize + m.uncovered_nodes, 5);
    }

    #[test]
    fn counting_identity_on_toy() {
        let cover = cover_from(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 4], &[2, 3]]);
        let total: u64 = pairwise_overlaps(&cover).pairs.iter().map(|p| p.2 as u64).sum();
        assert_eq!(total, cover.pair_incidences());
    }

    #[test]
    fn retain_keeps_inversion() {
        let cover = cover_from(5, &[&[0, 1, 2], &[1], &[2, 4]]);
        let big = cover.retain_communities(|m| m.len() >= 2);
        assert_eq!(big.community_count(), 2);
        assert!(big.check_inversion());
        assert_eq!(big.memberships(4), &[1]);
    }

    #[test]
    fn empty_community_rejected() {
        assert!(CommunityCover::from_communities(3, vec![vec![0], vec![]]).is_err());
        assert!(CommunityCover::from_communities(3, vec![vec![3]]).is_err());
    }
}
