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

#include "qcat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string class_string(std::pair<bool, bool> cls) {
  std::string s;
  s += cls.first ? '1' : '0';
  s += cls.second ? '1' : '0';
  return s;
}

std::string hash_hex(uint64_t h) {
  std::string out(16, '0');
  for (int d = 0; d < 16; ++d) {
    out[15 - d] = "0123456789abcdef"[(h >> (4 * d)) & 0xf];
  }
  return out;
}

std::string campaign_hash(const ExRec& ex, std::string_view kind, uint64_t budget) {
  std::ostringstream cfg;
  cfg << "qcat;campaign=" << kind << ";gadget=" << ex.name << ";budget=" << budget
      << ";registers=" << ex.registers << ";outer_n=" << ex.layout->outer.n()
      << ";inner_n=" << ex.layout->inner.n()
      << ";inner_table=" << ex.tables.inner->content_hash()
      << ";outer_table=" << ex.tables.outer->content_hash();
  return hash_hex(fnv1a64(cfg.str()));
}

CaseOutcome check_branches(const ExRec& ex, std::span<const Branch> branches) {
  CaseOutcome out;
  size_t width = ex.register_qubits();
  for (size_t i = 0; i < branches.size(); ++i) {
    for (int r = 0; r < ex.registers; ++r) {
      Pauli part = branches[i].residual.slice(static_cast<size_t>(r) * width, width);
      if (!syndrome(ex.layout->lifted, part).is_zero()) {
        throw std::logic_error("exrec case: nonzero syndrome after the ideal round");
      }
      auto cls = logical_class(ex.layout->lifted, part)[0];
      if (cls.first || cls.second) {
        out.pass = false;
        out.failed_branch = static_cast<int>(i);
        out.residual = branches[i].residual.to_string();
        std::string full;
        for (int rr = 0; rr < ex.registers; ++rr) {
          Pauli pp = branches[i].residual.slice(static_cast<size_t>(rr) * width, width);
          if (rr) full += '|';
          full += class_string(logical_class(ex.layout->lifted, pp)[0]);
        }
        out.logical_class = full;
        return out;
      }
    }
  }
  return out;
}

CaseOutcome run_block_residual(const ExRec& ex, const Pauli& injected) {
  PipelineOutcome pipe = residual_logical_action(*ex.layout, std::span(&injected, 1),
                                                 ex.gadget.schedule, ex.tables);
  CaseOutcome out;
  if (!pipe.pass) {
    out.pass = false;
    out.failed_branch = pipe.failed_branch;
    out.residual = pipe.residual.to_string();
    out.logical_class = class_string(pipe.cls);
  }
  return out;
}

struct BlockErrorIndex {
  size_t block;
  int class_idx;  // (a, c) = (idx & 1, idx >> 1)
  uint64_t syndrome;
};

BlockErrorIndex split_block_case(const ExRec& ex, uint64_t case_index) {
  uint64_t per_class = uint64_t{1} << ex.tables.inner->syndrome_bits;
  uint64_t per_block = 4 * per_class;
  BlockErrorIndex out;
  out.block = case_index / per_block;
  uint64_t rem = case_index % per_block;
  out.class_idx = static_cast<int>(rem / per_class);
  out.syndrome = rem % per_class;
  return out;
}

Pauli make_block_error(const ExRec& ex, const BlockErrorIndex& idx) {
  const ConcatLayout& lay = *ex.layout;
  Pauli block = ex.tables.inner->correction(idx.syndrome);
  if (idx.class_idx & 1) block.mul_at(Pauli::x_type(lay.inner.lx[0]), 0);
  if (idx.class_idx & 2) block.mul_at(Pauli::z_type(lay.inner.lz[0]), 0);
  return block.embedded(lay.total_qubits, idx.block * lay.inner.n());
}

std::string block_error_description(const BlockErrorIndex& idx, const Pauli& block_err) {
  std::ostringstream out;
  out << "block " << idx.block << " class "
      << class_string({(idx.class_idx & 1) != 0, (idx.class_idx & 2) != 0}) << " syndrome "
      << idx.syndrome << " : " << block_err.to_string();
  return out.str();
}

/// Shared campaign driver: evaluates cases [0, n) with a deterministic merge.
template <typename EvalFn>
void drive_cases(uint64_t n_cases, int jobs, VerificationReport& report, EvalFn&& eval) {
  report.cases = n_cases;
#ifdef _OPENMP
  if (jobs > 1) {
    std::vector<std::vector<FailureRecord>> buckets(static_cast<size_t>(jobs));
    uint64_t passes = 0;
#pragma omp parallel for schedule(static) num_threads(jobs) reduction(+ : passes)
    for (int64_t i = 0; i < static_cast<int64_t>(n_cases); ++i) {
      std::optional<FailureRecord> fail = eval(static_cast<uint64_t>(i));
      if (!fail) {
        ++passes;
      } else {
        buckets[static_cast<size_t>(omp_get_thread_num())].push_back(std::move(*fail));
      }
    }
    report.passes = passes;
    for (auto& b : buckets) {
      report.failures.insert(report.failures.end(), b.begin(), b.end());
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const FailureRecord& a, const FailureRecord& b) {
                return a.case_index < b.case_index;
              });
    return;
  }
#else
  (void)jobs;
#endif
  // Serial reference implementation.
  for (uint64_t i = 0; i < n_cases; ++i) {
    std::optional<FailureRecord> fail = eval(i);
    if (!fail) {
      ++report.passes;
    } else {
      report.failures.push_back(std::move(*fail));
    }
  }
}

}  // namespace

uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

CaseOutcome run_case(const ExRec& ex, std::span<const FaultEvent> faults) {
  std::vector<Branch> branches = propagate(ex.circuit, faults);
  return check_branches(ex, branches);
}

Pauli block_error_case(const ExRec& ex, uint64_t case_index) {
  return make_block_error(ex, split_block_case(ex, case_index));
}

VerificationReport run_single_fault_campaign(const ExRec& ex, int jobs) {
  if (ex.fault_model != FaultModel::Locations) {
    throw std::invalid_argument("single-fault campaign requires a location fault model");
  }
  auto start = Clock::now();
  std::vector<FaultEvent> events;
  for (const Location& loc : enumerate_locations(ex.circuit)) {
    for (FaultEvent& f : fault_alphabet(ex.circuit, loc)) {
      events.push_back(std::move(f));
    }
  }

  VerificationReport report;
  report.gadget = ex.name;
  report.config_hash = campaign_hash(ex, "single-fault", 0);
  drive_cases(events.size(), jobs, report, [&](uint64_t i) -> std::optional<FailureRecord> {
    CaseOutcome out = run_case(ex, std::span(&events[i], 1));
    if (out.pass) return std::nullopt;
    FailureRecord rec;
    rec.case_index = i;
    rec.faults = {location_to_string(ex.circuit, events[i].location) + " : " +
                  (events[i].pauli.n() ? events[i].pauli.to_string() : std::string("flip"))};
    rec.branch = out.failed_branch;
    rec.residual_pauli = out.residual;
    rec.logical_class = out.logical_class;
    return rec;
  });
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport run_block_error_campaign(const ExRec& ex, int jobs) {
  auto start = Clock::now();
  uint64_t per_class = uint64_t{1} << ex.tables.inner->syndrome_bits;
  uint64_t n_cases = ex.layout->block_count * 4 * per_class;

  VerificationReport report;
  report.gadget = ex.name;
  report.config_hash = campaign_hash(ex, "block-error", 0);
  drive_cases(n_cases, jobs, report, [&](uint64_t i) -> std::optional<FailureRecord> {
    BlockErrorIndex idx = split_block_case(ex, i);
    Pauli injected = make_block_error(ex, idx);
    CaseOutcome out = run_block_residual(ex, injected);
    if (out.pass) return std::nullopt;
    FailureRecord rec;
    rec.case_index = i;
    rec.faults = {block_error_description(idx, injected)};
    rec.branch = out.failed_branch;
    rec.residual_pauli = out.residual;
    rec.logical_class = out.logical_class;
    return rec;
  });
  report.wall_seconds = seconds_since(start);
  return report;
}

namespace {

/// Block index a location-model fault is confined to, if it is confined.
std::optional<uint32_t> single_block_of(const ExRec& ex, const FaultEvent& f) {
  size_t inner_n = ex.layout->inner.n();
  if (f.location.kind == Location::Kind::MeasurementFlip) {
    return std::nullopt;
  }
  std::optional<uint32_t> block;
  for (size_t q = 0; q < f.pauli.n(); ++q) {
    if (f.pauli.at(q) != 'I') {
      uint32_t b = static_cast<uint32_t>(q / inner_n);
      if (block && *block != b) return std::nullopt;
      block = b;
    }
  }
  return block;
}

struct PairStream {
  // phase 0: priority pairs, phase 1: the rest, in (i, j) lex order each.
  int phase = 0;
  uint64_t i = 0;
  uint64_t j = 1;
  uint64_t n = 0;

  template <typename PriorityFn>
  std::optional<std::pair<uint64_t, uint64_t>> next(PriorityFn&& priority) {
    while (phase < 2) {
      while (i + 1 < n) {
        while (j < n) {
          uint64_t jj = j++;
          bool pri = priority(i, jj);
          if ((phase == 0) == pri) return std::make_pair(i, jj);
        }
        ++i;
        j = i + 1;
      }
      ++phase;
      i = 0;
      j = 1;
    }
    return std::nullopt;
  }
};

}  // namespace

DoubleFaultOutcome search_double_fault(const ExRec& ex, uint64_t budget, int jobs) {
  auto start = Clock::now();
  DoubleFaultOutcome out;
  out.report.gadget = ex.name;
  out.report.config_hash = campaign_hash(ex, "double-fault", budget);

  if (ex.fault_model == FaultModel::Locations) {
    std::vector<FaultEvent> events;
    for (const Location& loc : enumerate_locations(ex.circuit)) {
      for (FaultEvent& f : fault_alphabet(ex.circuit, loc)) {
        events.push_back(std::move(f));
      }
    }
    std::vector<int32_t> block(events.size(), -1);
    for (size_t i = 0; i < events.size(); ++i) {
      auto b = single_block_of(ex, events[i]);
      if (b) block[i] = static_cast<int32_t>(*b);
    }
    // Same-block pairs first: two faults on one codeblock can spread to
    // correlated errors on several codeblocks.
    auto priority = [&](uint64_t a, uint64_t b) {
      return block[a] >= 0 && block[a] == block[b];
    };
    PairStream stream;
    stream.n = events.size();
    std::vector<std::pair<uint64_t, uint64_t>> chunk;
    const size_t kChunk = 2048;
    while (out.examined < budget) {
      chunk.clear();
      while (chunk.size() < kChunk && out.examined + chunk.size() < budget) {
        auto p = stream.next(priority);
        if (!p) break;
        chunk.push_back(*p);
      }
      if (chunk.empty()) {
        out.exhausted = true;
        break;
      }
      std::vector<int64_t> hit(chunk.size(), 0);
      std::vector<CaseOutcome> results(chunk.size());
      auto eval_one = [&](size_t c) {
        FaultEvent pair[2] = {events[chunk[c].first], events[chunk[c].second]};
        results[c] = run_case(ex, pair);
        hit[c] = results[c].pass ? 0 : 1;
      };
#ifdef _OPENMP
      if (jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs)
        for (int64_t c = 0; c < static_cast<int64_t>(chunk.size()); ++c) {
          eval_one(static_cast<size_t>(c));
        }
      } else
#else
      (void)jobs;
#endif
      {
        for (size_t c = 0; c < chunk.size(); ++c) eval_one(c);
      }
      size_t winner = chunk.size();
      for (size_t c = 0; c < chunk.size(); ++c) {
        if (hit[c]) {
          winner = c;
          break;
        }
      }
      if (winner < chunk.size()) {
        out.examined += winner + 1;
        FailureRecord rec;
        rec.case_index = out.examined - 1;
        rec.faults = {
            location_to_string(ex.circuit, events[chunk[winner].first].location) + " : " +
                events[chunk[winner].first].pauli.to_string(),
            location_to_string(ex.circuit, events[chunk[winner].second].location) + " : " +
                events[chunk[winner].second].pauli.to_string()};
        rec.branch = results[winner].failed_branch;
        rec.residual_pauli = results[winner].residual;
        rec.logical_class = results[winner].logical_class;
        out.witness_faults = {events[chunk[winner].first], events[chunk[winner].second]};
        out.witness = std::move(rec);
        break;
      }
      out.examined += chunk.size();
    }
    if (!out.witness && !out.exhausted) out.exhausted = true;
  } else {
    // Block-error pairs; distinct blocks first, nontrivial classes first.
    uint64_t per_class = uint64_t{1} << ex.tables.inner->syndrome_bits;
    uint64_t per_block = 3 * per_class;
    uint64_t nontrivial = ex.layout->block_count * per_block;
    uint64_t total = ex.layout->block_count * 4 * per_class;
    auto decode_event = [&](uint64_t e) -> BlockErrorIndex {
      BlockErrorIndex idx;
      if (e < nontrivial) {
        idx.block = e / per_block;
        uint64_t rem = e % per_block;
        idx.class_idx = 1 + static_cast<int>(rem / per_class);
        idx.syndrome = rem % per_class;
      } else {
        uint64_t rem = e - nontrivial;
        idx.block = rem / per_class;
        idx.class_idx = 0;
        idx.syndrome = rem % per_class;
      }
      return idx;
    };
    auto priority = [&](uint64_t a, uint64_t b) {
      return decode_event(a).block != decode_event(b).block;
    };
    PairStream stream;
    stream.n = total;
    while (out.examined < budget) {
      auto p = stream.next(priority);
      if (!p) {
        out.exhausted = true;
        break;
      }
      BlockErrorIndex ia = decode_event(p->first);
      BlockErrorIndex ib = decode_event(p->second);
      Pauli ea = make_block_error(ex, ia);
      Pauli eb = make_block_error(ex, ib);
      Pauli combined = ea * eb;
      ++out.examined;
      CaseOutcome res = run_block_residual(ex, combined);
      if (!res.pass) {
        FailureRecord rec;
        rec.case_index = out.examined - 1;
        rec.faults = {block_error_description(ia, ea), block_error_description(ib, eb)};
        rec.branch = res.failed_branch;
        rec.residual_pauli = res.residual;
        rec.logical_class = res.logical_class;
        out.witness_block_errors = {std::move(ea), std::move(eb)};
        out.witness = std::move(rec);
        break;
      }
    }
    if (!out.witness && !out.exhausted && out.examined >= budget) {
      out.exhausted = true;
    }
  }

  out.report.cases = out.examined;
  out.report.passes = out.examined - (out.witness ? 1 : 0);
  if (out.witness) out.report.failures.push_back(*out.witness);
  out.report.wall_seconds = seconds_since(start);
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["gadget"] = report.gadget;
  j["cases"] = report.cases;
  j["passes"] = report.passes;
  j["config_hash"] = report.config_hash;
  j["failures"] = nlohmann::json::array();
  for (const FailureRecord& f : report.failures) {
    nlohmann::json jf;
    jf["case_index"] = f.case_index;
    jf["faults"] = f.faults;
    jf["branch"] = f.branch;
    jf["residual_pauli"] = f.residual_pauli;
    jf["logical_class"] = f.logical_class;
    j["failures"].push_back(jf);
  }
  return j.dump(2) + "\n";
}

}  // namespace qcat
