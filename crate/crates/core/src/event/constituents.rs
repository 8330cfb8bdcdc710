use super::formula::Formula;
use super::universe::{Universe, WorldSet};
use crate::error::{Error, Result};

/// Nonempty cell of the product partition generated by a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constituent {
    /// `0` for the all-void constituent, `1..=m` for the others in table order.
    pub index: usize,
    /// Region chosen for each member.
    pub choice: Vec<usize>,
    pub worlds: WorldSet,
    /// Every member is void here.
    pub is_c0: bool,
}

/// Constituents in lexicographic order of their choice vectors.
#[derive(Clone, Debug)]
pub struct ConstituentTable {
    pub constituents: Vec<Constituent>,
}

impl ConstituentTable {
    pub fn c0(&self) -> Option<&Constituent> {
        self.constituents.iter().find(|c| c.is_c0)
    }

    /// Constituents other than the all-void one.
    pub fn proper(&self) -> impl Iterator<Item = &Constituent> {
        self.constituents.iter().filter(|c| !c.is_c0)
    }

    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }
}

/// Refines the universe by each member's regions in turn. `members[i]` lists
/// the regions of member `i`, which must partition the universe; `void[i]` is
/// the index of its void region.
pub fn constituent_table(u: &Universe, members: &[Vec<WorldSet>], void: &[usize]) -> Result<ConstituentTable> {
    let full = u.full_set();
    for (i, regions) in members.iter().enumerate() {
        let mut union = u.empty_set();
        for r in regions {
            if !union.is_disjoint(r) {
                return Err(Error::NotAPartition(format!("member {}", i + 1)));
            }
            union.union_with(r);
        }
        if union != full {
            return Err(Error::NotAPartition(format!("member {}", i + 1)));
        }
    }
    let mut cells = vec![(Vec::new(), full)];
    for regions in members {
        let mut next = Vec::with_capacity(cells.len() * regions.len());
        for (choice, set) in &cells {
            for (r, region) in regions.iter().enumerate() {
                let mut cell: WorldSet = set.clone();
                cell.intersect_with(region);
                if !cell.is_clear() {
                    let mut c: Vec<usize> = choice.clone();
                    c.push(r);
                    next.push((c, cell));
                }
            }
        }
        cells = next;
    }
    let mut index = 0;
    let constituents = cells
        .into_iter()
        .map(|(choice, worlds)| {
            let is_c0 = choice.iter().zip(void).all(|(c, v)| c == v);
            if !is_c0 {
                index += 1;
            }
            Constituent { index: if is_c0 { 0 } else { index }, choice, worlds, is_c0 }
        })
        .collect();
    Ok(ConstituentTable { constituents })
}

/// Constituents of a family of conditional events given as
/// (consequent, antecedent) pairs. Each member contributes the regions
/// `E∧H`, `¬E∧H`, `¬H` in that order.
pub fn enumerate_constituents(family: &[(Formula, Formula)], u: &Universe) -> Result<ConstituentTable> {
    let mut members = Vec::with_capacity(family.len());
    for (i, (e, h)) in family.iter().enumerate() {
        let hs = u.truth_set(h)?;
        if hs.is_clear() {
            return Err(Error::EmptyConditioning(format!("member {}", i + 1)));
        }
        let es = u.truth_set(e)?;
        let mut t = es.clone();
        t.intersect_with(&hs);
        let mut f = hs.clone();
        f.difference_with(&es);
        let mut v = hs;
        v.toggle_range(..);
        members.push(vec![t, f, v]);
    }
    constituent_table(u, &members, &vec![2; family.len()])
}
