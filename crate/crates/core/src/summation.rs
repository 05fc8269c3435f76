//! Summation helpers shared by the evaluators and integrators.

/// Pairwise (tree) sum of `term(i)` for `i` in `lo..hi`.
///
/// Rounding error grows like `O(log n)` ulp instead of `O(n)`; no allocation.
pub fn pairwise_sum<F>(lo: usize, hi: usize, term: &F) -> f64
where
    F: Fn(usize) -> f64,
{
    const LEAF: usize = 16;
    if hi <= lo {
        return 0.0;
    }
    if hi - lo <= LEAF {
        let mut acc = 0.0;
        for i in lo..hi {
            acc += term(i);
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term)
}

/// Neumaier's compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}
