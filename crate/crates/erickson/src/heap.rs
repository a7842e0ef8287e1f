//! Addressable binary max-heap over keys `0..n`.

/// Max-heap of `(key, value)` with a key-to-position map.
/// Ties between equal values prefer the smaller key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxHeap {
    heap: Vec<u32>,
    pos: Vec<usize>,
    val: Vec<i64>,
}

impl MaxHeap {
    /// Heap over keys `0..values.len()` built in linear time.
    pub fn from_values(values: Vec<i64>) -> Self {
        let n = values.len();
        let mut h = MaxHeap { heap: (0..n as u32).collect(), pos: (0..n).collect(), val: values };
        for i in (0..n / 2).rev() {
            h.sift_down(i);
        }
        h
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    pub fn value(&self, key: u32) -> i64 {
        self.val[key as usize]
    }

    /// Top `(key, value)`.
    pub fn max(&self) -> Option<(u32, i64)> {
        self.heap.first().map(|&k| (k, self.val[k as usize]))
    }

    /// Sets the value of `key`, moving it up or down.
    pub fn update_key(&mut self, key: u32, value: i64) {
        let old = std::mem::replace(&mut self.val[key as usize], value);
        let p = self.pos[key as usize];
        if value > old {
            self.sift_up(p);
        } else {
            self.sift_down(p);
        }
    }

    fn beats(&self, a: u32, b: u32) -> bool {
        let (va, vb) = (self.val[a as usize], self.val[b as usize]);
        va > vb || (va == vb && a < b)
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.heap.swap(i, j);
        self.pos[self.heap[i] as usize] = i;
        self.pos[self.heap[j] as usize] = j;
    }

    fn sift_up(&mut self, mut i: usize) {
        while i > 0 {
            let parent = (i - 1) / 2;
            if !self.beats(self.heap[i], self.heap[parent]) {
                break;
            }
            self.swap(i, parent);
            i = parent;
        }
    }

    fn sift_down(&mut self, mut i: usize) {
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut best = i;
            if l < self.heap.len() && self.beats(self.heap[l], self.heap[best]) {
                best = l;
            }
            if r < self.heap.len() && self.beats(self.heap[r], self.heap[best]) {
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
