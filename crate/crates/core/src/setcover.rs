//! Set-cover costs for every subset of a small ground set.

use crate::error::{Error, Limits, Result};
use crate::graph::VertexSet;

const INF: u32 = u32::MAX;
const NONE: u32 = u32::MAX;

/// Minimum number of sets covering each subset of the ground set.
#[derive(Debug, Clone)]
pub struct SetCoverTables {
    ground: Vec<usize>,
    sets: Vec<u64>,
    cost: Vec<u32>,
    last: Vec<u32>,
}

/// Set-cover DP over all subsets of `ground`; members of `sets` outside the
/// ground set are ignored.
pub fn set_cover_dp(ground: &VertexSet, sets: &[VertexSet]) -> Result<SetCoverTables> {
    set_cover_dp_with(ground, sets, &Limits::default())
}

pub fn set_cover_dp_with(
    ground: &VertexSet,
    sets: &[VertexSet],
    limits: &Limits,
) -> Result<SetCoverTables> {
    let elements = ground.to_vec();
    if elements.len() > limits.ground_limit.min(63) {
        return Err(Error::GroundLimit { size: elements.len(), limit: limits.ground_limit.min(63) });
    }
    let index = |v: usize| elements.binary_search(&v).ok();
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().filter_map(index).fold(0u64, |m, i| m | 1 << i))
        .collect();
    Ok(SetCoverTables::from_masks(elements, masks))
}

impl SetCoverTables {
    /// DP over bitmask-encoded sets; `ground.len()` must stay small.
    pub(crate) fn from_masks(ground: Vec<usize>, sets: Vec<u64>) -> Self {
        let size = 1usize << ground.len();
        let mut cost = vec![INF; size];
        let mut last = vec![NONE; size];
        cost[0] = 0;
        // cost[S; j] = min(cost[S; j-1], cost[S \ S_j; j-1] + 1), rolled over j;
        // descending S keeps cost[S \ S_j] at its j-1 value
        for (j, &sj) in sets.iter().enumerate() {
            if sj == 0 {
                continue;
            }
            for s in (1..size).rev() {
                let sub = s & !(sj as usize);
                if sub == s || cost[sub] == INF {
                    continue;
                }
                if cost[sub] + 1 < cost[s] {
                    cost[s] = cost[sub] + 1;
                    last[s] = j as u32;
                }
            }
        }
        SetCoverTables { ground, sets, cost, last }
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// Bitmask of `s` over the ground-set order, or `None` if `s` leaves the ground set.
    pub fn mask_of(&self, s: &VertexSet) -> Option<u64> {
        let mut m = 0u64;
        for v in s {
            m |= 1 << self.ground.binary_search(&v).ok()?;
        }
        Some(m)
    }

    pub(crate) fn cost_mask(&self, mask: u64) -> Option<usize> {
        match self.cost[mask as usize] {
            INF => None,
            c => Some(c as usize),
        }
    }

    /// Indices of an optimal covering family for `mask`.
    pub(crate) fn family_mask(&self, mut mask: u64) -> Option<Vec<usize>> {
        self.cost_mask(mask)?;
        let mut out = Vec::new();
        while mask != 0 {
            let j = self.last[mask as usize] as usize;
            out.push(j);
            mask &= !self.sets[j];
        }
        out.sort_unstable();
        Some(out)
    }

    /// Minimum number of sets covering `s`; `None` when `s` cannot be covered
    /// or is not a subset of the ground set.
    pub fn cost(&self, s: &VertexSet) -> Option<usize> {
        self.cost_mask(self.mask_of(s)?)
    }

    /// One optimal family (set indices) covering `s`.
    pub fn cover(&self, s: &VertexSet) -> Option<Vec<usize>> {
        self.family_mask(self.mask_of(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(8, vs.iter().copied())
    }

    #[test]
    fn empty_costs_nothing() {
        let t = set_cover_dp(&set(&[0, 1, 2]), &[set(&[0])]).unwrap();
        assert_eq!(t.cost(&set(&[])), Some(0));
        assert_eq!(t.cover(&set(&[])), Some(vec![]));
        assert_eq!(t.cost(&set(&[1])), None);
    }

    #[test]
    fn singletons() {
        let t = set_cover_dp(&set(&[0, 1]), &[set(&[0]), set(&[1])]).unwrap();
        assert_eq!(t.cost(&set(&[0, 1])), Some(2));
        assert_eq!(t.cover(&set(&[0, 1])), Some(vec![0, 1]));
    }

    #[test]
    fn big_set_wins() {
        let t = set_cover_dp(&set(&[0, 1, 2]), &[set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]).unwrap();
        assert_eq!(t.cost(&set(&[0, 1, 2])), Some(1));
        assert_eq!(t.cover(&set(&[0, 1, 2])), Some(vec![2]));
        assert_eq!(t.cost(&set(&[5])), None);
    }

    #[test]
    fn ground_limit() {
        let limits = Limits { ground_limit: 2, ..Limits::builtin() };
        let err = set_cover_dp_with(&set(&[0, 1, 2]), &[], &limits).unwrap_err();
        assert_eq!(err, Error::GroundLimit { size: 3, limit: 2 });
    }
}
