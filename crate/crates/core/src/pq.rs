//! Addressable min-priority structures over vertex ids `0..n`.
//!
//! Keys are `f64` and may change in either direction. Ties on the key are
//! broken by the smaller id, so both backends pop in exactly the same order.

use std::cmp::Ordering;

pub trait MinQueue {
    /// Queue holding every id `0..keys.len()` with the given keys.
    fn from_keys(keys: &[f64]) -> Self;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn contains(&self, id: usize) -> bool;
    fn peek_min(&self) -> Option<(usize, f64)>;
    fn pop_min(&mut self) -> Option<(usize, f64)>;
    /// Changes the key of a queued id.
    fn set_key(&mut self, id: usize, key: f64);
    fn key(&self, id: usize) -> f64;
}

#[inline]
fn less(ka: f64, a: usize, kb: f64, b: usize) -> bool {
    match ka.total_cmp(&kb) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a < b,
    }
}

const NONE: usize = usize::MAX;

/// Tournament-style segment tree: each internal node stores the id of the
/// minimum leaf below it. O(log n) updates, O(1) minimum.
#[derive(Clone, Debug)]
pub struct SegmentTree {
    size: usize,
    keys: Vec<f64>,
    present: Vec<bool>,
    winner: Vec<usize>,
    len: usize,
}

impl SegmentTree {
    fn pick(&self, a: usize, b: usize) -> usize {
        match (a, b) {
            (NONE, _) => b,
            (_, NONE) => a,
            _ => {
                if less(self.keys[b], b, self.keys[a], a) {
                    b
                } else {
                    a
                }
            }
        }
    }

    fn refresh(&mut self, id: usize) {
        let mut node = (self.size + id) / 2;
        while node >= 1 {
            self.winner[node] = self.pick(self.winner[2 * node], self.winner[2 * node + 1]);
            node /= 2;
        }
    }
}

impl MinQueue for SegmentTree {
    fn from_keys(keys: &[f64]) -> Self {
        let n = keys.len();
        let size = n.next_power_of_two().max(1);
        let mut t = SegmentTree {
            size,
            keys: keys.to_vec(),
            present: vec![true; n],
            winner: vec![NONE; 2 * size],
            len: n,
        };
        for i in 0..n {
            t.winner[size + i] = i;
        }
        for node in (1..size).rev() {
            t.winner[node] = t.pick(t.winner[2 * node], t.winner[2 * node + 1]);
        }
        t
    }

    fn len(&self) -> usize {
        self.len
    }

    fn contains(&self, id: usize) -> bool {
        self.present[id]
    }

    fn peek_min(&self) -> Option<(usize, f64)> {
        match self.winner[1] {
            NONE => None,
            id => Some((id, self.keys[id])),
        }
    }

    fn pop_min(&mut self) -> Option<(usize, f64)> {
        let top = self.peek_min()?;
        self.present[top.0] = false;
        self.winner[self.size + top.0] = NONE;
        self.len -= 1;
        self.refresh(top.0);
        Some(top)
    }

    fn set_key(&mut self, id: usize, key: f64) {
        debug_assert!(self.present[id]);
        self.keys[id] = key;
        self.refresh(id);
    }

    fn key(&self, id: usize) -> f64 {
        self.keys[id]
    }
}

/// Binary heap with a position index for O(log n) key changes.
#[derive(Clone, Debug)]
pub struct IndexedHeap {
    heap: Vec<usize>,
    pos: Vec<usize>,
    keys: Vec<f64>,
}

impl IndexedHeap {
    fn lt(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.heap[i], self.heap[j]);
        less(self.keys[a], a, self.keys[b], b)
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.pos[self.heap[i]] = i;
        self.pos[self.heap[j]] = j;
    }

    fn sift_up(&mut self, mut i: usize) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.lt(i, parent) {
                self.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    fn sift_down(&mut self, mut i: usize) {
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < self.heap.len() && self.lt(l, best) {
                best = l;
            }
            if r < self.heap.len() && self.lt(r, best) {
                best = r;
            }
            if best == i {
                break;
            }
            self.swap(i, best);
            i = best;
        }
    }
}

impl MinQueue for IndexedHeap {
    fn from_keys(keys: &[f64]) -> Self {
        let n = keys.len();
        let mut h = IndexedHeap {
            heap: (0..n).collect(),
            pos: (0..n).collect(),
            keys: keys.to_vec(),
        };
        for i in (0..n / 2).rev() {
            h.sift_down(i);
        }
        h
    }

    fn len(&self) -> usize {
        self.heap.len()
    }

    fn contains(&self, id: usize) -> bool {
        self.pos[id] != NONE
    }

    fn peek_min(&self) -> Option<(usize, f64)> {
        self.heap.first().map(|&id| (id, self.keys[id]))
    }

    fn pop_min(&mut self) -> Option<(usize, f64)> {
        let top = self.peek_min()?;
        let last = self.heap.len() - 1;
        self.swap(0, last);
        self.heap.pop();
        self.pos[top.0] = NONE;
        if !self.heap.is_empty() {
            self.sift_down(0);
        }
        Some(top)
    }

    fn set_key(&mut self, id: usize, key: f64) {
        let i = self.pos[id];
        debug_assert!(i != NONE);
        let old = self.keys[id];
        self.keys[id] = key;
        if key < old {
            self.sift_up(i);
        } else {
            self.sift_down(i);
        }
    }

    fn key(&self, id: usize) -> f64 {
        self.keys[id]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn drain<Q: MinQueue>(mut q: Q) -> Vec<(usize, f64)> {
        std::iter::from_fn(|| q.pop_min()).collect()
    }

    #[test]
    fn ties_pop_by_id() {
        let keys = [2.0, 1.0, 1.0, -3.0, 1.0];
        let expect = vec![(3, -3.0), (1, 1.0), (2, 1.0), (4, 1.0), (0, 2.0)];
        assert_eq!(drain(SegmentTree::from_keys(&keys)), expect);
        assert_eq!(drain(IndexedHeap::from_keys(&keys)), expect);
    }

    #[test]
    fn empty_queue() {
        assert!(SegmentTree::from_keys(&[]).pop_min().is_none());
        assert!(IndexedHeap::from_keys(&[]).pop_min().is_none());
    }

    proptest! {
        #[test]
        fn backends_agree(
            keys in prop::collection::vec(-5i32..5, 1..40),
            ops in prop::collection::vec((0usize..40, -5i32..5, any::<bool>()), 0..80),
        ) {
            let keys: Vec<f64> = keys.into_iter().map(f64::from).collect();
            let mut a = SegmentTree::from_keys(&keys);
            let mut b = IndexedHeap::from_keys(&keys);
            for (id, k, pop) in ops {
                if pop {
                    prop_assert_eq!(a.pop_min(), b.pop_min());
                } else {
                    let id = id % keys.len();
                    if a.contains(id) {
                        a.set_key(id, f64::from(k));
                        b.set_key(id, f64::from(k));
                    }
                }
                prop_assert_eq!(a.len(), b.len());
                prop_assert_eq!(a.peek_min(), b.peek_min());
            }
            prop_assert_eq!(drain(a), drain(b));
        }
    }
}
