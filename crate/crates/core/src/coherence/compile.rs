use std::collections::BTreeSet;

use super::Quantity;
use crate::error::{Error, Result};
use crate::event::{constituent_table, ConstituentTable, Universe};
use crate::rational::Rational;

/// Family evaluated on a universe. Region `regions.len()` of a member is its
/// void region.
#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    /// Value of each member on each non-void region.
    pub values: Vec<Vec<Rational>>,
    pub table: ConstituentTable,
}

impl Compiled {
    pub fn new(members: &[Quantity], u: &Universe) -> Result<Self> {
        let mut partitions = Vec::with_capacity(members.len());
        let mut void = Vec::with_capacity(members.len());
        let mut values = Vec::with_capacity(members.len());
        for q in members {
            let cond = u.truth_set(&q.conditioning)?;
            if cond.is_clear() {
                return Err(Error::EmptyConditioning(q.label.clone()));
            }
            let mut regions = Vec::with_capacity(q.regions.len() + 1);
            let mut covered = u.empty_set();
            for (f, _) in &q.regions {
                let mut r = u.truth_set(f)?;
                r.intersect_with(&cond);
                if !covered.is_disjoint(&r) {
                    return Err(Error::NotAPartition(q.label.clone()));
                }
                covered.union_with(&r);
                regions.push(r);
            }
            if covered != cond {
                return Err(Error::NotAPartition(q.label.clone()));
            }
            let mut rest = cond;
            rest.toggle_range(..);
            regions.push(rest);
            void.push(q.regions.len());
            partitions.push(regions);
            values.push(q.regions.iter().map(|(_, v)| v.clone()).collect());
        }
        let table = constituent_table(u, &partitions, &void)?;
        Ok(Compiled { values, table })
    }

    pub fn is_void(&self, member: usize, region: usize) -> bool {
        region == self.values[member].len()
    }

    /// Distinct choice vectors of `subset` other than the all-void one, in
    /// lexicographic order.
    pub fn choices(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let set: BTreeSet<Vec<usize>> = self
            .table
            .constituents
            .iter()
            .map(|c| subset.iter().map(|&i| c.choice[i]).collect::<Vec<_>>())
            .filter(|ch: &Vec<usize>| ch.iter().zip(subset).any(|(&r, &i)| !self.is_void(i, r)))
            .collect();
        set.into_iter().collect()
    }

    /// `Q_h` for each choice vector of `subset`.
    pub fn points(&self, subset: &[usize], choices: &[Vec<usize>], values: &[Rational]) -> Vec<Vec<Rational>> {
        choices
            .iter()
            .map(|ch| {
                ch.iter()
                    .zip(subset)
                    .map(|(&r, &i)| if self.is_void(i, r) { values[i].clone() } else { self.values[i][r].clone() })
                    .collect()
            })
            .collect()
    }
}

/// Nonempty subsets of `0..n` by increasing size, then lexicographically.
pub(crate) fn subfamilies(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity((1usize << n).saturating_sub(1));
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.clone());
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}
