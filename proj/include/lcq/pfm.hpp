// Copyright 2026 The lcquant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>

#include "lcq/quantizer.hpp"
#include "lcq/signals.hpp"
#include "lcq/waveform.hpp"

namespace lcq {

/// Integral pulse-frequency modulator. `integrator_initial` ∈ [0, delta) is
/// the integrator content at t = 0.
struct PfmConfig {
  double delta = 1.0;
  double integrator_initial = 0.0;

  void validate() const;
};

/// Unipolar PFM of a strictly positive input: an impulse of weight +Δ each
/// time the running integral accumulates Δ. The first impulse needs only
/// Δ − integrator_initial.
EventTrain encode_unipolar(const PfmConfig& cfg, const SinusoidSpec& input, double t_end);

/// Bipolar PFM of w(t) = d/dt x(t), where `signal` describes x. The
/// integrator holds u = integrator_initial + ∫w − Σ weights inside [0, Δ):
/// reaching Δ fires +Δ, dropping below 0 fires −Δ. w is integrated exactly
/// (∫w = Δx), never by quadrature.
EventTrain encode_bipolar(const PfmConfig& cfg, const SinusoidSpec& signal, double t_end);

/// y_p(t) = initial_level + Σ_{t_k ≤ t} w_k.
StepWaveform integrate_events(const EventTrain& train, double initial_level,
                              std::span<const double> grid);

/// f_0 = v_m/Δ, the impulse rate under a constant input v_m.
double rest_frequency(const PfmConfig& cfg, double v_m);

/// Bipolar PFM configuration reproducing quantizer `q` driven by `s`: the
/// integrator starts at x(0) minus the lower threshold of x(0)'s cell.
PfmConfig bipolar_config_for(const QuantizerSpec& q, const SinusoidSpec& s);

/// Quantized starting value carried by integrate_events for the
/// differential–integral model (the causal DC step at t = 0).
double bipolar_initial_level(const QuantizerSpec& q, const SinusoidSpec& s);

}  // namespace lcq
