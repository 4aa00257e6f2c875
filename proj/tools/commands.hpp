// Copyright 2026 The qmetro Authors
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

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qmetro::cli {

struct RunConfig {
    std::string command;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::vector<double> sigmas;
    std::vector<double> deltas;
    double theta0 = 0.0;
    std::string out;
    double tol = 1e-10;
    int jobs = 1;
    std::uint64_t seed = 20260611;
    std::string pattern = "all";
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for arguments that parse but make no sense (empty range, bad sigma).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 12 significant digits, "nan" and "inf" spelled out.
std::string format_value(double v);

/// Runs fn(i) for i in [0, count) on `jobs` threads; results keep index order.
std::vector<std::string> parallel_rows(int count, int jobs, const std::function<std::string(int)> &fn);

int cmd_local(const RunConfig &cfg, std::ostream &out);
int cmd_bayes_phase(const RunConfig &cfg, std::ostream &out);
int cmd_bayes_freq(const RunConfig &cfg, std::ostream &out);
int cmd_mse_limit(const RunConfig &cfg, std::ostream &out);
int cmd_compress_verify(const RunConfig &cfg, std::ostream &out);
int cmd_mbqc_verify(const RunConfig &cfg, std::ostream &out);
int cmd_holevo(const RunConfig &cfg, std::ostream &out);

/// Parses argv, dispatches, and maps errors to exit codes.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qmetro::cli
