/// Cosine distance between a binary mask and the all-ones vector of the same
/// length: `1 - sqrt(k / d)` for `k` ones. The all-zero mask is at distance 1.
pub fn cosine_distance_to_origin_mask(mask: &[bool]) -> f64 {
    let d = mask.len();
    let k = mask.iter().filter(|&&m| m).count();
    if k == 0 || d == 0 {
        return 1.0;
    }
    1.0 - (k as f64 / d as f64).sqrt()
}

/// `exp(-distance² / width²)`, floored at the smallest normal double so very
/// narrow kernels still give every sample a positive weight.
pub fn kernel_weight(distance: f64, width: f64) -> f64 {
    (-(distance * distance) / (width * width)).exp().max(f64::MIN_POSITIVE)
}
