//! Kernel feature encoding for the energy regressors.

use super::{KernelConfig, KernelPattern};

/// Raw features per kernel: [H, W, Cin, Cout, KS, stride, MACs, output_bytes].
pub const BASE_FEATURE_DIM: usize = 8;

/// Model input width: base features plus a pattern one-hot, so one model
/// can serve all patterns (per-pattern models simply see a constant
/// one-hot block).
pub const FEATURE_DIM: usize = BASE_FEATURE_DIM + 3;

/// Multiply-accumulate count for one kernel.
///
/// conv:    H_out * W_out * Cout * Cin * KS^2
/// dwconv:  H_out * W_out * Cout * KS^2        (depthwise: no Cin term)
/// avgpool: H_out * W_out * Cout * KS^2        (KS^2 window per output)
pub fn kernel_macs(config: &KernelConfig) -> u64 {
    let spatial = u64::from(config.h_out()) * u64::from(config.w_out());
    let window = u64::from(config.ks) * u64::from(config.ks);
    match config.pattern {
        KernelPattern::ConvBnRelu => {
            spatial * u64::from(config.cout) * u64::from(config.cin) * window
        }
        KernelPattern::DwConvBnRelu | KernelPattern::AvgPool => {
            spatial * u64::from(config.cout) * window
        }
    }
}

/// Output tensor size in bytes (f32 elements).
pub fn kernel_output_bytes(config: &KernelConfig) -> u64 {
    u64::from(config.h_out()) * u64::from(config.w_out()) * u64::from(config.cout) * 4
}

/// Input tensor size in bytes (f32 elements).
pub fn kernel_input_bytes(config: &KernelConfig) -> u64 {
    u64::from(config.h) * u64::from(config.w) * u64::from(config.cin) * 4
}

/// Raw (un-normalized) feature vector. Z-scoring happens inside the
/// predictor using its stored feature statistics.
pub fn featurize(config: &KernelConfig) -> [f64; BASE_FEATURE_DIM] {
    [
        f64::from(config.h),
        f64::from(config.w),
        f64::from(config.cin),
        f64::from(config.cout),
        f64::from(config.ks),
        f64::from(config.stride),
        kernel_macs(config) as f64,
        kernel_output_bytes(config) as f64,
    ]
}

/// Full model input: raw features plus pattern one-hot.
pub fn model_features(config: &KernelConfig) -> [f64; FEATURE_DIM] {
    let base = featurize(config);
    let mut out = [0.0; FEATURE_DIM];
    out[..BASE_FEATURE_DIM].copy_from_slice(&base);
    let slot = match config.pattern {
        KernelPattern::ConvBnRelu => 0,
        KernelPattern::DwConvBnRelu => 1,
        KernelPattern::AvgPool => 2,
    };
    out[BASE_FEATURE_DIM + slot] = 1.0;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conv(h: u32, w: u32, cin: u32, cout: u32, ks: u32, stride: u32) -> KernelConfig {
        KernelConfig {
            pattern: KernelPattern::ConvBnRelu,
            h,
            w,
            cin,
            cout,
            ks,
            stride,
        }
    }

    #[test]
    fn macs_match_hand_arithmetic() {
        // 32*32*16*16*9
        assert_eq!(kernel_macs(&conv(32, 32, 16, 16, 3, 1)), 2_359_296);
        // Degenerate 1x1 everything.
        assert_eq!(kernel_macs(&conv(1, 1, 1, 1, 1, 1)), 1);
    }

    #[test]
    fn stride_two_halves_spatial_term() {
        // H_out = ceil(32/2) = 16 enters the product.
        let k = conv(32, 32, 16, 8, 3, 2);
        assert_eq!(kernel_macs(&k), 16 * 16 * 8 * 16 * 9);
        assert_eq!(kernel_output_bytes(&k), 16 * 16 * 8 * 4);
    }

    // Independent oracle: count MACs by literally iterating every
    // (output position, output channel, tap) tuple.
    fn macs_by_loop(k: &KernelConfig) -> u64 {
        let mut count = 0u64;
        for _y in 0..k.h_out() {
            for _x in 0..k.w_out() {
                for _co in 0..k.cout {
                    let cin_span = match k.pattern {
                        KernelPattern::ConvBnRelu => k.cin,
                        _ => 1,
                    };
                    for _ci in 0..cin_span {
                        for _ky in 0..k.ks {
                            for _kx in 0..k.ks {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn macs_formula_matches_nested_loop_counter() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let patterns = KernelPattern::ALL;
        for _ in 0..60 {
            let pattern = patterns[rng.gen_range(0..3)];
            let cin = rng.gen_range(1..12);
            let k = KernelConfig {
                pattern,
                h: rng.gen_range(1..20),
                w: rng.gen_range(1..20),
                cin,
                cout: if pattern == KernelPattern::AvgPool {
                    cin
                } else {
                    rng.gen_range(1..12)
                },
                ks: [1, 3, 5, 7][rng.gen_range(0..4)],
                stride: [1, 2][rng.gen_range(0..2)],
            };
            assert_eq!(kernel_macs(&k), macs_by_loop(&k), "config: {k:?}");
        }
    }

    #[test]
    fn pattern_one_hot_occupies_distinct_slots() {
        let base = conv(8, 8, 4, 4, 3, 1);
        let f_conv = model_features(&base);
        let f_dw = model_features(&KernelConfig {
            pattern: KernelPattern::DwConvBnRelu,
            ..base
        });
        assert_eq!(f_conv[BASE_FEATURE_DIM], 1.0);
        assert_eq!(f_dw[BASE_FEATURE_DIM + 1], 1.0);
        assert_eq!(f_dw[BASE_FEATURE_DIM], 0.0);
    }
}
