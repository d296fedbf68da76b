// Copyright 2026 The qcat Authors
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

// Compares the serial reference campaign runner against the OpenMP path and
// confirms the reports stay byte-identical while doing so.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "qcat/verify.hpp"

using namespace qcat;

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_once(Fn&& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  auto layout = std::make_shared<const ConcatLayout>(concatenate(build_steane(), build_rm15()));
  DecodeTables tables = DecodeTables::build(*layout);

  struct Row {
    std::string name;
    ExRec exrec;
    bool block_model;
  };
  std::vector<Row> rows;
  rows.push_back({"T single-fault",
                  build_exrec(build_logical_t_gadget(*layout), layout, tables), false});
  rows.push_back({"CNOT single-fault",
                  build_exrec(build_logical_cnot_gadget(*layout), layout, tables), false});
  rows.push_back({"H block-error",
                  build_exrec(build_logical_h_gadget(*layout), layout, tables), true});

  unsigned hw = std::thread::hardware_concurrency();
  std::vector<int> job_counts = {1, 2};
  if (hw > 2) job_counts.push_back(static_cast<int>(hw));

  std::printf("%-18s %10s", "campaign", "cases");
  for (int jobs : job_counts) std::printf("   jobs=%-2d", jobs);
  std::printf("   identical\n");

  for (const Row& row : rows) {
    std::string reference;
    std::vector<double> times;
    uint64_t cases = 0;
    bool identical = true;
    for (int jobs : job_counts) {
      VerificationReport report;
      times.push_back(time_once([&] {
        report = row.block_model ? run_block_error_campaign(row.exrec, jobs)
                                 : run_single_fault_campaign(row.exrec, jobs);
      }));
      cases = report.cases;
      std::string json = report_to_json(report);
      if (reference.empty()) {
        reference = json;
      } else if (json != reference) {
        identical = false;
      }
    }
    std::printf("%-18s %10llu", row.name.c_str(), static_cast<unsigned long long>(cases));
    for (double t : times) std::printf("  %7.3fs", t);
    std::printf("   %s\n", identical ? "yes" : "NO");
    if (!identical) return 1;
  }
  return 0;
}
