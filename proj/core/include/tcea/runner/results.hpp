/*
 * Copyright 2026 The tcea Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tcea/runner/config.hpp"
#include "tcea/runner/experiment.hpp"

namespace tcea::runner {

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

inline constexpr const char* kAggregateHeader =
    "method,acc_mean,acc_std,prec_mean,prec_std,rec_mean,rec_std,spec_mean,spec_std,f1_mean,"
    "f1_std,auc_mean,auc_std";

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
void write_winners(std::ostream& out, const std::vector<RunRecord>& records);
void write_manifest(std::ostream& out, const ExperimentConfig& config);
void write_timings_csv(std::ostream& out, const std::vector<RunRecord>& records);

// Writes runs.csv, aggregate.csv, winners.txt, manifest.txt, timings.csv and,
// when histories were kept, history/run_<r>.csv into `dir` (created when
// missing). Wall-clock times live only in timings.csv so every other file is
// reproducible byte for byte. Throws IoError when a file cannot be written.
void emit_results(const ExperimentResult& result, const ExperimentConfig& config,
                  const std::filesystem::path& dir);

// Long format: rate,method,metric,mean,std. Realized injection rates appear
// with method "data" and metric "realized_missing_rate".
void write_sweep_csv(std::ostream& out, const std::vector<SweepBlock>& blocks);

// sweep.csv plus one emit_results directory per rate (rate_<r>/).
void emit_sweep(const std::vector<SweepBlock>& blocks, const ExperimentConfig& config,
                const std::filesystem::path& dir);

}  // namespace tcea::runner
