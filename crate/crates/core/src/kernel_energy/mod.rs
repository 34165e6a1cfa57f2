//! Kernel-level energy prediction.
//!
//! A "kernel" is one operator instance (conv/dwconv/avgpool with concrete
//! tensor shapes). Small feed-forward regressors trained on measured
//! kernel energies estimate per-kernel and whole-model energy without
//! deploying anything, plus the ranking/regression metrics used to judge
//! predictor quality.

mod dataset;
mod features;
mod metrics;
mod mlp;
mod predictor;

pub use dataset::{
    generate_configs, read_samples_csv, write_configs_csv, write_samples_csv, ConfigRanges,
};
pub use features::{
    featurize, kernel_input_bytes, kernel_macs, kernel_output_bytes, BASE_FEATURE_DIM,
    FEATURE_DIM,
};
pub use metrics::{acc_at_k, evaluate_predictions, rmse, EvalMetrics};
pub use predictor::{
    predict_kernel, predict_model_energy, train_predictor, FeatureStats, PredictorModel,
    TargetTransform, TrainConfig, TrainingMeta,
};

use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

/// Operator pattern of a kernel. The string forms are the on-disk names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KernelPattern {
    #[serde(rename = "conv+bn+relu")]
    ConvBnRelu,
    #[serde(rename = "dwconv+bn+relu")]
    DwConvBnRelu,
    #[serde(rename = "avgpool")]
    AvgPool,
}

impl KernelPattern {
    pub const ALL: [KernelPattern; 3] = [
        KernelPattern::ConvBnRelu,
        KernelPattern::DwConvBnRelu,
        KernelPattern::AvgPool,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            KernelPattern::ConvBnRelu => "conv+bn+relu",
            KernelPattern::DwConvBnRelu => "dwconv+bn+relu",
            KernelPattern::AvgPool => "avgpool",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "conv+bn+relu" => Ok(KernelPattern::ConvBnRelu),
            "dwconv+bn+relu" => Ok(KernelPattern::DwConvBnRelu),
            "avgpool" => Ok(KernelPattern::AvgPool),
            other => Err(CoreError::invalid(format!("unknown kernel pattern {other:?}"))),
        }
    }

    /// Conv-family patterns dominate the energy budget and get calibration
    /// priority.
    pub fn is_conv_family(&self) -> bool {
        matches!(self, KernelPattern::ConvBnRelu | KernelPattern::DwConvBnRelu)
    }
}

impl std::fmt::Display for KernelPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Compute backend a sample or predictor belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Backend {
    #[serde(rename = "CPU")]
    Cpu,
    #[serde(rename = "GPU")]
    Gpu,
}

impl Backend {
    pub fn as_str(&self) -> &'static str {
        match self {
            Backend::Cpu => "CPU",
            Backend::Gpu => "GPU",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "CPU" => Ok(Backend::Cpu),
            "GPU" => Ok(Backend::Gpu),
            other => Err(CoreError::invalid(format!("unknown backend {other:?}"))),
        }
    }
}

impl std::fmt::Display for Backend {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One operator instance: the unit of energy prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KernelConfig {
    pub pattern: KernelPattern,
    /// Input height, px.
    pub h: u32,
    /// Input width, px.
    pub w: u32,
    pub cin: u32,
    pub cout: u32,
    /// Kernel size; one of {1, 3, 5, 7}.
    pub ks: u32,
    /// Stride; 1 or 2.
    pub stride: u32,
}

pub const VALID_KERNEL_SIZES: [u32; 4] = [1, 3, 5, 7];
pub const VALID_STRIDES: [u32; 2] = [1, 2];

impl KernelConfig {
    pub fn validate(&self) -> Result<()> {
        if self.h < 1 || self.w < 1 || self.cin < 1 || self.cout < 1 {
            return Err(CoreError::invalid(format!(
                "kernel dims must be >= 1, got {self:?}"
            )));
        }
        if !VALID_KERNEL_SIZES.contains(&self.ks) {
            return Err(CoreError::invalid(format!(
                "kernel size {} not in {{1,3,5,7}}",
                self.ks
            )));
        }
        if !VALID_STRIDES.contains(&self.stride) {
            return Err(CoreError::invalid(format!(
                "stride {} not in {{1,2}}",
                self.stride
            )));
        }
        if self.pattern == KernelPattern::AvgPool && self.cout != self.cin {
            return Err(CoreError::invalid(format!(
                "avgpool must preserve channels, got cin={} cout={}",
                self.cin, self.cout
            )));
        }
        Ok(())
    }

    /// Output spatial height under "same" padding.
    pub fn h_out(&self) -> u32 {
        self.h.div_ceil(self.stride)
    }

    pub fn w_out(&self) -> u32 {
        self.w.div_ceil(self.stride)
    }
}

/// One measured kernel energy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergySample {
    pub config: KernelConfig,
    pub energy_mj: f64,
    pub backend: Backend,
    pub device_id: String,
}

impl EnergySample {
    pub fn validate(&self) -> Result<()> {
        self.config.validate()?;
        if !self.energy_mj.is_finite() || self.energy_mj < 0.0 {
            return Err(CoreError::invalid(format!(
                "energy_mj must be finite and >= 0, got {}",
                self.energy_mj
            )));
        }
        Ok(())
    }
}
