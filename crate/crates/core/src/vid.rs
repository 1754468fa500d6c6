use alloc::vec::Vec;
use core::ops::Deref;

use crate::graph::Vid;

/// Sorted, duplicate-free list of database vertex IDs.
///
/// Materializes the match set of a pattern so that joins can be pruned by
/// intersecting the lists of their two inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VidList(Vec<Vid>);

impl VidList {
    pub const fn new() -> Self {
        VidList(Vec::new())
    }

    /// Wraps an already strictly ascending vector.
    pub fn from_sorted(ids: Vec<Vid>) -> Self {
        debug_assert!(
            ids.windows(2).all(|w| w[0] < w[1]),
            "VidList must be strictly ascending"
        );
        VidList(ids)
    }

    pub fn from_unsorted(mut ids: Vec<Vid>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VidList(ids)
    }

    /// `0..n`
    pub fn all(n: usize) -> Self {
        VidList((0..n as Vid).collect())
    }

    pub fn as_slice(&self) -> &[Vid] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vid> {
        self.0
    }

    pub fn contains(&self, v: Vid) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Linear-time merge intersection.
    pub fn intersect(&self, other: &VidList) -> VidList {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len().min(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VidList(out)
    }

    /// Size of the intersection without materializing it.
    pub fn intersection_len(&self, other: &VidList) -> usize {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn is_superset_of(&self, other: &VidList) -> bool {
        self.intersection_len(other) == other.len()
    }
}

impl Deref for VidList {
    type Target = [Vid];

    fn deref(&self) -> &[Vid] {
        &self.0
    }
}

impl FromIterator<Vid> for VidList {
    fn from_iter<I: IntoIterator<Item = Vid>>(iter: I) -> Self {
        VidList::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VidList {
    type Item = &'a Vid;
    type IntoIter = core::slice::Iter<'a, Vid>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
