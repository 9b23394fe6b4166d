//! One-hidden-layer relu/softmax classifier trained from scratch.

mod grad;
mod grid;
mod metrics;
mod model;
mod train;

pub use grad::{batch_loss, gradient, Gradients, Sample};
pub use grid::{grid_search, Grid, GridSearch};
pub use metrics::{evaluate, Metrics};
pub use model::{init_model, softmax, MlpModel};
pub use train::{train, train_samples, TrainConfig};

/// Index of the largest entry; ties go to the lowest index.
pub fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::argmax;

    #[test]
    fn argmax_ties_to_lowest() {
        assert_eq!(argmax(&[0.5, 0.5]), 0);
        assert_eq!(argmax(&[0.1, 0.7, 0.7]), 1);
    }
}
