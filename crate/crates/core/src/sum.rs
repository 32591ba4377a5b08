//! Compensated floating-point accumulation.

use std::iter::Sum;
use std::ops::AddAssign;

/// Neumaier's variant of Kahan summation. Results depend on the order in
/// which terms are added, so callers feed terms in a fixed order.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another accumulator in, keeping both compensation terms.
    pub fn merge(&mut self, other: &NeumaierSum) {
        self.add(other.sum);
        self.add(other.comp);
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, x: f64) {
        self.add(x);
    }
}

impl Sum<f64> for NeumaierSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::new();
        iter.for_each(|x| s.add(x));
        s
    }
}

/// Compensated sum of a slice in index order.
pub fn compensated_sum(xs: &[f64]) -> f64 {
    xs.iter().copied().sum::<NeumaierSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_terms() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(compensated_sum(&xs), 2.0);
        assert_ne!(xs.iter().sum::<f64>(), 2.0);
    }

    #[test]
    fn harmonic_tail_matches_reverse_order() {
        let xs: Vec<f64> = (1..=100_000).map(|n| 1.0 / (n as f64 * n as f64)).collect();
        let fwd = compensated_sum(&xs);
        let rev: Vec<f64> = xs.iter().rev().copied().collect();
        assert!((fwd - compensated_sum(&rev)).abs() < 1e-15);
    }

    #[test]
    fn merge_is_exact_for_split_input() {
        let xs: Vec<f64> = (1..=1000).map(|n| (n as f64).sin()).collect();
        let (a, b) = xs.split_at(400);
        let mut left: NeumaierSum = a.iter().copied().sum();
        let right: NeumaierSum = b.iter().copied().sum();
        left.merge(&right);
        assert!((left.value() - compensated_sum(&xs)).abs() < 1e-14);
    }
}
