//! Per-channel squared-exponential covariance over whole landing
//! trajectories, with an optional causal time weight, plus Gram-matrix
//! assembly.
//!
//! An input point is the full recording of the six input channels over the
//! landing, `x ∈ R^{6(T+1)}`. The kernel compares two landings channel by
//! channel through the weighted squared distance
//!
//! ```text
//! d_k(a, b) = Σ_{t'} w(t') (a_k^{t'} - b_k^{t'})²
//! ```
//!
//! and combines the six distances as
//!
//! ```text
//! κ(a, b) = τ² exp( - Σ_k d_k(a, b) / (2 l_k) )
//! ```
//!
//! With the uniform weight `w ≡ 1` the distance is the squared Frobenius
//! norm of the channel difference; the causal box weight at time `t` zeroes
//! every sample after `t`, so predictions at `t` ignore future inputs. The
//! box weight at `t = T` reproduces the uniform kernel exactly.
//!
//! Summation order is fixed (time ascending, channel ascending), which makes
//! `κ(a, b) == κ(b, a)` bit-exact.

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;

/// Number of input channels (mass, kinetic energy, speed, thrust, brake,
/// drag).
pub const NUM_CHANNELS: usize = 6;

/// Kernel and noise hyperparameters: `σ` (measurement-noise std), `τ`
/// (output scale) and one length scale per channel. All strictly positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperparameters {
    pub noise_std: f64,
    pub amplitude: f64,
    pub length_scales: [f64; NUM_CHANNELS],
}

impl Hyperparameters {
    pub fn new(noise_std: f64, amplitude: f64, length_scales: [f64; NUM_CHANNELS]) -> Self {
        let theta = Hyperparameters {
            noise_std,
            amplitude,
            length_scales,
        };
        theta.validate().expect("invalid hyperparameters");
        theta
    }

    pub fn validate(&self) -> Result<(), String> {
        let mut all = vec![self.noise_std, self.amplitude];
        all.extend_from_slice(&self.length_scales);
        for (i, v) in all.iter().enumerate() {
            if !(v.is_finite() && *v > 0.0) {
                return Err(format!("hyperparameter {i} must be positive and finite, got {v}"));
            }
        }
        Ok(())
    }

    /// Diagonal jitter added to every Gram matrix before factorization, so
    /// that duplicate landings stay factorizable as σ → 0.
    pub fn jitter(&self) -> f64 {
        1e-8 * self.amplitude * self.amplitude
    }

    /// Packs `(log σ, log τ, log l_1..l_6)`; the optimizer works in this
    /// space so positivity never needs explicit constraints.
    pub fn to_log(&self) -> [f64; 8] {
        let mut z = [0.0; 8];
        z[0] = self.noise_std.ln();
        z[1] = self.amplitude.ln();
        for k in 0..NUM_CHANNELS {
            z[2 + k] = self.length_scales[k].ln();
        }
        z
    }

    pub fn from_log(z: &[f64; 8]) -> Self {
        let mut length_scales = [0.0; NUM_CHANNELS];
        for k in 0..NUM_CHANNELS {
            length_scales[k] = z[2 + k].exp();
        }
        Hyperparameters {
            noise_std: z[0].exp(),
            amplitude: z[1].exp(),
            length_scales,
        }
    }
}

/// One model input: the six channel trajectories of a landing, each of
/// length `T+1`. The two scalar quantities (mass, initial kinetic energy)
/// are stored replicated over time so that every channel enters the kernel
/// through the same trajectory norm.
#[derive(Debug, Clone, PartialEq)]
pub struct InputVector {
    channels: [Vec<f64>; NUM_CHANNELS],
}

impl InputVector {
    pub fn new(channels: [Vec<f64>; NUM_CHANNELS]) -> Self {
        let len = channels[0].len();
        assert!(len > 0, "empty input vector");
        assert!(
            channels.iter().all(|c| c.len() == len),
            "channels must share one horizon"
        );
        assert!(
            channels.iter().flatten().all(|v| v.is_finite()),
            "non-finite input entry"
        );
        InputVector { channels }
    }

    /// Horizon `T` (the channels hold `T+1` samples).
    pub fn horizon(&self) -> usize {
        self.channels[0].len() - 1
    }

    pub fn channel(&self, k: usize) -> &[f64] {
        &self.channels[k]
    }
}

/// Time weight for the kernel's per-channel semi-norm.
#[derive(Debug, Clone, PartialEq)]
pub enum TimeWeight {
    /// `w ≡ 1`: the plain squared Frobenius norm.
    Uniform,
    /// `w(t') = 1` for `t' ≤ t`, `0` after: inputs later than `t` are
    /// invisible.
    CausalBox { t: usize },
    /// Arbitrary non-negative weights, one per sample.
    Custom(Vec<f64>),
}

impl TimeWeight {
    pub fn weight(&self, t_prime: usize) -> f64 {
        match self {
            TimeWeight::Uniform => 1.0,
            TimeWeight::CausalBox { t } => {
                if t_prime <= *t {
                    1.0
                } else {
                    0.0
                }
            }
            TimeWeight::Custom(w) => w[t_prime],
        }
    }

    pub fn validate(&self, horizon: usize) -> Result<(), String> {
        if let TimeWeight::Custom(w) = self {
            if w.len() != horizon + 1 {
                return Err(format!(
                    "custom weight has {} entries, horizon needs {}",
                    w.len(),
                    horizon + 1
                ));
            }
            if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err("custom weights must be finite and non-negative".into());
            }
        }
        Ok(())
    }
}

/// How a fitted model weights time at prediction: either the uniform kernel
/// everywhere, or the causal box ending at each prediction instant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMode {
    Uniform,
    Causal,
}

impl WeightMode {
    /// The concrete weight used for time step `t`.
    pub fn weight_at(&self, t: usize) -> TimeWeight {
        match self {
            WeightMode::Uniform => TimeWeight::Uniform,
            WeightMode::Causal => TimeWeight::CausalBox { t },
        }
    }
}

/// Weighted squared distance between the `k`-th channel trajectories.
///
/// Panics if `channel >= 6` or the horizons differ.
pub fn channel_sq_dist(a: &InputVector, b: &InputVector, channel: usize, w: &TimeWeight) -> f64 {
    assert!(channel < NUM_CHANNELS, "channel index {channel} out of range");
    assert_eq!(a.horizon(), b.horizon(), "horizon mismatch");
    let (ca, cb) = (a.channel(channel), b.channel(channel));
    let mut sum = 0.0;
    for t in 0..ca.len() {
        let diff = ca[t] - cb[t];
        sum += w.weight(t) * diff * diff;
    }
    sum
}

/// Kernel value `κ(a, b)`.
pub fn kernel_eval(a: &InputVector, b: &InputVector, theta: &Hyperparameters, w: &TimeWeight) -> f64 {
    let mut exponent = 0.0;
    for k in 0..NUM_CHANNELS {
        exponent += channel_sq_dist(a, b, k, w) / (2.0 * theta.length_scales[k]);
    }
    theta.amplitude * theta.amplitude * (-exponent).exp()
}

/// Per-channel squared-distance matrices for a training set, computed once
/// and reused across every hyperparameter evaluation (the distances do not
/// depend on θ).
#[derive(Debug, Clone)]
pub struct ChannelDistances {
    n: usize,
    dists: [Matrix; NUM_CHANNELS],
}

impl ChannelDistances {
    pub fn from_inputs(inputs: &[InputVector], w: &TimeWeight) -> Self {
        let n = inputs.len();
        let mut dists: [Matrix; NUM_CHANNELS] =
            std::array::from_fn(|_| Matrix::zeros(n, n));
        for i in 0..n {
            for j in i + 1..n {
                for (k, d) in dists.iter_mut().enumerate() {
                    let v = channel_sq_dist(&inputs[i], &inputs[j], k, w);
                    d[(i, j)] = v;
                    d[(j, i)] = v;
                }
            }
        }
        ChannelDistances { n, dists }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn channel(&self, k: usize) -> &Matrix {
        &self.dists[k]
    }

    /// Gram matrix for the stored distances under `θ`. Diagonal is exactly
    /// `τ²` and the result is bit-exact symmetric.
    pub fn gram(&self, theta: &Hyperparameters) -> Matrix {
        let n = self.n;
        let tau2 = theta.amplitude * theta.amplitude;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            out[(i, i)] = tau2;
            for j in i + 1..n {
                let mut exponent = 0.0;
                for k in 0..NUM_CHANNELS {
                    exponent += self.dists[k][(i, j)] / (2.0 * theta.length_scales[k]);
                }
                let v = tau2 * (-exponent).exp();
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        out
    }
}

/// Gram matrix `K(i, j) = κ(x_i, x_j)`.
pub fn gram(inputs: &[InputVector], theta: &Hyperparameters, w: &TimeWeight) -> Matrix {
    assert!(!inputs.is_empty(), "gram of an empty input set");
    ChannelDistances::from_inputs(inputs, w).gram(theta)
}

/// Rectangular kernel matrix between two input sets;
/// `cross_gram(a, b)ᵀ == cross_gram(b, a)` entry for entry.
pub fn cross_gram(
    x1: &[InputVector],
    x2: &[InputVector],
    theta: &Hyperparameters,
    w: &TimeWeight,
) -> Matrix {
    assert!(!x1.is_empty() && !x2.is_empty(), "cross_gram of empty set");
    Matrix::from_fn(x1.len(), x2.len(), |i, j| {
        kernel_eval(&x1[i], &x2[j], theta, w)
    })
}

/// Optional per-channel standardization of inputs before they enter the
/// kernel. Off by default; length scales already absorb channel scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelScaler {
    pub mean: [f64; NUM_CHANNELS],
    pub std: [f64; NUM_CHANNELS],
}

impl ChannelScaler {
    /// Fits per-channel mean and standard deviation over every sample of
    /// every input. Channels with zero spread keep a unit scale.
    pub fn fit(inputs: &[InputVector]) -> Self {
        let mut mean = [0.0; NUM_CHANNELS];
        let mut std = [1.0; NUM_CHANNELS];
        if inputs.is_empty() {
            return ChannelScaler { mean, std };
        }
        let count = (inputs.len() * (inputs[0].horizon() + 1)) as f64;
        for k in 0..NUM_CHANNELS {
            let sum: f64 = inputs.iter().map(|x| x.channel(k).iter().sum::<f64>()).sum();
            let m = sum / count;
            let var: f64 = inputs
                .iter()
                .map(|x| x.channel(k).iter().map(|v| (v - m) * (v - m)).sum::<f64>())
                .sum::<f64>()
                / count;
            mean[k] = m;
            std[k] = if var > 0.0 { var.sqrt() } else { 1.0 };
        }
        ChannelScaler { mean, std }
    }

    pub fn transform(&self, input: &InputVector) -> InputVector {
        let channels = std::array::from_fn(|k| {
            input
                .channel(k)
                .iter()
                .map(|v| (v - self.mean[k]) / self.std[k])
                .collect()
        });
        InputVector::new(channels)
    }

    pub fn transform_all(&self, inputs: &[InputVector]) -> Vec<InputVector> {
        inputs.iter().map(|x| self.transform(x)).collect()
    }
}
