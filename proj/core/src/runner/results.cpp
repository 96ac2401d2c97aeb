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

#include "tcea/runner/results.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>

#include "tcea/error.hpp"

namespace tcea::runner {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed while writing " + path.string());
}

}  // namespace

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "method,run,seed,status,accuracy,precision,recall,specificity,f1,auc,"
         "realized_missing_rate,formula,error\n";
  for (const RunRecord& r : records) {
    const auto& m = r.report;
    out << to_string(r.method) << ',' << r.run << ',' << r.seed << ','
        << (r.failed ? "failed" : "ok") << ',' << format_double(m.accuracy) << ','
        << format_double(m.precision) << ',' << format_double(m.recall) << ','
        << format_double(m.specificity) << ',' << format_double(m.f1) << ','
        << format_double(m.auc) << ',' << format_double(r.realized_missing_rate) << ','
        << quoted(r.formula) << ',' << quoted(r.error) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << kAggregateHeader << '\n';
  for (const AggregateRow& row : rows) {
    out << to_string(row.method);
    for (const MetricSummary* s : {&row.accuracy, &row.precision, &row.recall, &row.specificity,
                                   &row.f1, &row.auc}) {
      out << ',' << format_double(s->mean) << ',' << format_double(s->std);
    }
    out << '\n';
  }
}

void write_winners(std::ostream& out, const std::vector<RunRecord>& records) {
  for (const RunRecord& r : records) {
    if (r.method == Method::ThreeChannel && !r.failed) out << r.formula << '\n';
  }
}

void write_manifest(std::ostream& out, const ExperimentConfig& config) {
  out << "# experiment manifest; every key below is a valid configuration entry\n";
  const data::KeyValueFile kv = to_key_value(config);
  for (const auto& [key, value] : kv.entries()) {
    out << key << " = " << value << '\n';
  }
  out << "# run seeds:";
  for (std::size_t r = 0; r < config.runs; ++r) out << ' ' << config.base_seed + r;
  out << '\n';
}

void write_timings_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "method,run,seed,wall_seconds\n";
  for (const RunRecord& r : records) {
    out << to_string(r.method) << ',' << r.run << ',' << r.seed << ','
        << format_double(r.wall_seconds) << '\n';
  }
}

void emit_results(const ExperimentResult& result, const ExperimentConfig& config,
                  const std::filesystem::path& dir) {
  if (result.records.empty()) throw ConfigError("emit_results: no run records");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  const auto write = [&](const std::string& name, auto&& body) {
    const auto path = dir / name;
    std::ofstream out = open_for_write(path);
    body(out);
    finish(out, path);
  };
  write("runs.csv", [&](std::ostream& o) { write_runs_csv(o, result.records); });
  write("aggregate.csv", [&](std::ostream& o) { write_aggregate_csv(o, result.aggregate); });
  write("winners.txt", [&](std::ostream& o) { write_winners(o, result.records); });
  write("manifest.txt", [&](std::ostream& o) { write_manifest(o, config); });
  write("timings.csv", [&](std::ostream& o) { write_timings_csv(o, result.records); });

  bool any_history = false;
  for (const RunRecord& r : result.records) any_history = any_history || !r.history.empty();
  if (!any_history) return;
  const auto history_dir = dir / "history";
  std::filesystem::create_directories(history_dir, ec);
  if (ec) throw IoError("cannot create " + history_dir.string() + ": " + ec.message());
  for (const RunRecord& r : result.records) {
    if (r.history.empty()) continue;
    const auto path = history_dir / ("run_" + std::to_string(r.run) + ".csv");
    std::ofstream out = open_for_write(path);
    gp::write_history_csv(out, r.history);
    finish(out, path);
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepBlock>& blocks) {
  out << "rate,method,metric,mean,std\n";
  for (const SweepBlock& block : blocks) {
    const std::string rate = format_double(block.rate);
    out << rate << ",data,realized_missing_rate," << format_double(block.mean_realized_rate)
        << ",0\n";
    for (const AggregateRow& row : block.result.aggregate) {
      const std::pair<const char*, const MetricSummary*> metrics[] = {
          {"accuracy", &row.accuracy}, {"precision", &row.precision}, {"recall", &row.recall},
          {"specificity", &row.specificity}, {"f1", &row.f1}, {"auc", &row.auc}};
      for (const auto& [name, s] : metrics) {
        out << rate << ',' << to_string(row.method) << ',' << name << ','
            << format_double(s->mean) << ',' << format_double(s->std) << '\n';
      }
    }
  }
}

void emit_sweep(const std::vector<SweepBlock>& blocks, const ExperimentConfig& config,
                const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const auto path = dir / "sweep.csv";
  {
    std::ofstream out = open_for_write(path);
    write_sweep_csv(out, blocks);
    finish(out, path);
  }
  for (const SweepBlock& block : blocks) {
    ExperimentConfig cfg = config;
    missingness::MissingnessSpec spec = cfg.missingness.value_or(missingness::MissingnessSpec{});
    spec.rate = block.rate;
    cfg.missingness = spec;
    emit_results(block.result, cfg, dir / ("rate_" + format_double(block.rate)));
  }
}

}  // namespace tcea::runner
