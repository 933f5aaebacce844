use serde::{Deserialize, Serialize};

use super::Interval;

/// Axis-aligned box: one interval per coordinate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalBox(pub Vec<Interval>);

impl IntervalBox {
    pub fn new(coords: Vec<Interval>) -> Self {
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Interval] {
        &self.0
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.dim() && self.0.iter().zip(p).all(|(i, &v)| i.contains(v))
    }

    /// Index and width of the widest coordinate. Ties go to the lowest index.
    pub fn widest(&self) -> (usize, f64) {
        self.0
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, c)| {
                let w = c.width();
                if w > best.1 {
                    (i, w)
                } else {
                    best
                }
            })
    }

    pub fn width(&self) -> f64 {
        self.widest().1
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.0.iter().map(Interval::mid).collect()
    }

    /// Split along the widest coordinate. The lower half comes first.
    pub fn bisect(&self) -> (IntervalBox, IntervalBox) {
        self.bisect_along(self.widest().0)
    }

    pub fn bisect_along(&self, axis: usize) -> (IntervalBox, IntervalBox) {
        let (a, b) = self.0[axis].bisect();
        let mut lower = self.clone();
        let mut upper = self.clone();
        lower.0[axis] = a;
        upper.0[axis] = b;
        (lower, upper)
    }

    /// Degenerate box at `p`.
    pub fn point(p: &[f64]) -> Self {
        Self(p.iter().map(|&v| Interval::point(v)).collect())
    }
}

impl From<Vec<Interval>> for IntervalBox {
    fn from(v: Vec<Interval>) -> Self {
        Self(v)
    }
}
