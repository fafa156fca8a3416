// Copyright 2026 The rksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rksim/observables.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace rksim {

std::vector<double> flippable_values(const std::vector<Orbit> &basis) {
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto &o : basis) {
        out.push_back(static_cast<double>(o.flippable));
    }
    return out;
}

std::vector<double> correlation_values(const std::vector<Orbit> &basis, size_t n_plaquettes, size_t r) {
    if (r < 1 || r > n_plaquettes / 2) {
        throw std::out_of_range("correlation distance r=" + std::to_string(r) + " outside 1.." +
                                std::to_string(n_plaquettes / 2));
    }
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto &o : basis) {
        double first = 0.0;
        for (size_t p = 1; p <= n_plaquettes; p++) {
            size_t q = (p - 1 + r) % n_plaquettes + 1;
            double sum = 0.0;
            for (const auto &s : o.members) {
                sum += (plaquette_flippable(s, p) && plaquette_flippable(s, q)) ? 1.0 : 0.0;
            }
            double value = sum / static_cast<double>(o.size);
            if (p == 1) {
                first = value;
            } else if (std::abs(value - first) > 1e-12) {
                throw std::logic_error("correlation depends on the anchor plaquette in family " + o.label());
            }
        }
        out.push_back(first);
    }
    return out;
}

Estimate expect_diagonal(std::span<const double> probs, std::span<const double> values) {
    if (probs.size() < values.size()) {
        throw std::invalid_argument("distribution shorter than the physical basis");
    }
    double kept = 0.0;
    double total = 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); i++) {
        total += probs[i];
        if (i < values.size()) {
            kept += probs[i];
            acc += probs[i] * values[i];
        }
    }
    if (!(kept > 0.0)) {
        throw std::runtime_error("all probability lies outside the physical basis");
    }
    return Estimate{acc / kept, 0.0, total > 0.0 ? 1.0 - kept / total : 0.0};
}

Estimate expect_diagonal(const Counts &counts, std::span<const double> values) {
    std::uint64_t kept = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto &[idx, n] : counts.histogram) {
        if (idx < values.size()) {
            kept += n;
            double v = values[idx];
            sum += static_cast<double>(n) * v;
            sum_sq += static_cast<double>(n) * v * v;
        }
    }
    if (kept == 0) {
        throw std::runtime_error("all shots were discarded as unphysical");
    }
    double k = static_cast<double>(kept);
    double mean = sum / k;
    double var = std::max(0.0, sum_sq / k - mean * mean);
    double total = static_cast<double>(counts.total());
    return Estimate{mean, std::sqrt(var / k), 1.0 - k / total};
}

std::vector<double> probabilities(const Eigen::VectorXcd &amplitudes) {
    std::vector<double> p(static_cast<size_t>(amplitudes.size()));
    for (size_t i = 0; i < p.size(); i++) {
        p[i] = std::norm(amplitudes[static_cast<Eigen::Index>(i)]);
    }
    return p;
}

Estimate expect_F(std::span<const double> probs, const std::vector<Orbit> &basis) {
    return expect_diagonal(probs, flippable_values(basis));
}

Estimate expect_F(const Counts &counts, const std::vector<Orbit> &basis) {
    return expect_diagonal(counts, flippable_values(basis));
}

Estimate expect_Cr(std::span<const double> probs, const std::vector<Orbit> &basis, size_t n_plaquettes, size_t r) {
    return expect_diagonal(probs, correlation_values(basis, n_plaquettes, r));
}

Estimate expect_Cr(const Counts &counts, const std::vector<Orbit> &basis, size_t n_plaquettes, size_t r) {
    return expect_diagonal(counts, correlation_values(basis, n_plaquettes, r));
}

}  // namespace rksim
