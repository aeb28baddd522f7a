use std::sync::atomic::{AtomicU32, Ordering};

/// Lock-free disjoint sets over `0..len`.
///
/// Roots are always linked under the smaller index, so the root of every
/// set is its minimum element. Finds use path halving with CAS; a failed
/// CAS only means another thread already shortened the path.
pub struct ConcurrentUnionFind {
    parent: Vec<AtomicU32>,
}

impl ConcurrentUnionFind {
    pub fn new(len: usize) -> Self {
        assert!(len <= u32::MAX as usize);
        ConcurrentUnionFind { parent: (0..len as u32).map(AtomicU32::new).collect() }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&self, mut x: u32) -> u32 {
        loop {
            let p = self.parent[x as usize].load(Ordering::Acquire);
            if p == x {
                return x;
            }
            let gp = self.parent[p as usize].load(Ordering::Acquire);
            if gp != p {
                let _ = self.parent[x as usize].compare_exchange(
                    p,
                    gp,
                    Ordering::AcqRel,
                    Ordering::Relaxed,
                );
            }
            x = gp;
        }
    }

    pub fn union(&self, a: u32, b: u32) {
        let (mut a, mut b) = (a, b);
        loop {
            a = self.find(a);
            b = self.find(b);
            if a == b {
                return;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            if self.parent[hi as usize]
                .compare_exchange(hi, lo, Ordering::AcqRel, Ordering::Acquire)
                .is_ok()
            {
                return;
            }
        }
    }

    /// Flattens every element onto its root and returns the root table.
    /// Requires exclusive access; afterwards `roots[x]` is the minimum of x's set.
    pub fn into_roots(self) -> Vec<u32> {
        let mut roots: Vec<u32> = self.parent.into_iter().map(AtomicU32::into_inner).collect();
        // parent[x] <= x, so a forward sweep sees each parent already resolved.
        for x in 0..roots.len() {
            let p = roots[x] as usize;
            roots[x] = roots[p];
        }
        roots
    }
}
