use serde_json::{json, Value};

use crate::linalg::Matrix;

/// Vector space with a labelled basis and an `L`-weight per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    labels: Vec<String>,
    weights: Vec<i64>,
}

impl GradedSpace {
    pub fn new(labels: Vec<String>, weights: Vec<i64>) -> Self {
        assert_eq!(labels.len(), weights.len(), "one weight per basis vector");
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len(), "basis labels must be unique");
        Self { labels, weights }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn to_json(&self) -> Value {
        json!({ "labels": self.labels, "weights": self.weights })
    }
}

/// Linear map between graded spaces. An image vector with target basis
/// weight `w` is counted with weight `w + twist`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOp {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub matrix: Matrix,
    pub twist: i64,
}

impl LinOp {
    pub fn new(source: GradedSpace, target: GradedSpace, matrix: Matrix, twist: i64) -> Self {
        assert_eq!(matrix.rows(), target.dim());
        assert_eq!(matrix.cols(), source.dim());
        Self {
            source,
            target,
            matrix,
            twist,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Composition `self ∘ other`; twists add.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        assert_eq!(other.target, self.source);
        LinOp::new(
            other.source.clone(),
            self.target.clone(),
            self.matrix.mul(&other.matrix),
            self.twist + other.twist,
        )
    }

    /// Nonzero entries respect the grading: target weight plus twist equals
    /// source weight.
    pub fn respects_weights(&self) -> bool {
        (0..self.matrix.rows()).all(|r| {
            (0..self.matrix.cols()).all(|c| {
                num_traits::Zero::is_zero(self.matrix.get(r, c))
                    || self.target.weights()[r] + self.twist == self.source.weights()[c]
            })
        })
    }

    /// Debug dump: basis labels, weights, twist and rows of exact rationals.
    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "twist": self.twist,
            "rows": self.matrix.string_rows(),
        })
    }
}
