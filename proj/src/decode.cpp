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

#include "qcat/decode.hpp"

#include <sstream>
#include <stdexcept>

namespace qcat {

namespace {

uint64_t fnv1a_accumulate(uint64_t h, const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Candidate is better when lighter, or equal weight with smaller (x, z) value.
bool better_entry(const Pauli& candidate, const Pauli& incumbent) {
  size_t wc = candidate.weight();
  size_t wi = incumbent.weight();
  if (wc != wi) return wc < wi;
  if (candidate.x() != incumbent.x()) return candidate.x() < incumbent.x();
  return candidate.z() < incumbent.z();
}

}  // namespace

uint64_t LookupTable::content_hash() const {
  uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a_accumulate(h, &width, sizeof(width));
  for (const Pauli& p : entries) {
    std::string s = p.to_string();
    h = fnv1a_accumulate(h, s.data(), s.size());
  }
  return h;
}

std::shared_ptr<const LookupTable> build_lookup(const CssCode& c, size_t max_syndrome_bits) {
  size_t bits = c.generator_count();
  if (bits > max_syndrome_bits) {
    throw EnumerationBudgetExceeded("lookup table over 2^" + std::to_string(bits) +
                                    " syndromes refused");
  }
  auto table = std::make_shared<LookupTable>();
  table->width = c.n();
  table->syndrome_bits = bits;
  table->entries.assign(uint64_t{1} << bits, Pauli());
  size_t filled = 0;

  std::vector<char> kinds = {'X', 'Y', 'Z'};
  std::vector<uint32_t> support;
  std::vector<size_t> assignment;

  // Weight-layered scan: within a layer every candidate is examined, so the
  // per-syndrome winner is exact under better_entry.
  auto try_pauli = [&](const Pauli& p) {
    uint64_t s = syndrome_bits(c, p);
    Pauli& slot = table->entries[s];
    if (slot.n() == 0) {
      slot = p;
      ++filled;
    } else if (better_entry(p, slot)) {
      slot = p;
    }
  };

  try_pauli(Pauli::identity(c.n()));
  for (size_t w = 1; w <= c.n() && filled < table->entries.size(); ++w) {
    support.assign(w, 0);
    for (size_t i = 0; i < w; ++i) support[i] = static_cast<uint32_t>(i);
    while (true) {
      assignment.assign(w, 0);
      while (true) {
        Pauli p = Pauli::identity(c.n());
        for (size_t i = 0; i < w; ++i) {
          p.mul_at(Pauli::single(c.n(), support[i], kinds[assignment[i]]), 0);
        }
        try_pauli(p);
        size_t d = w;
        while (d > 0 && assignment[d - 1] == 2) --d;
        if (d == 0) break;
        ++assignment[d - 1];
        for (size_t i = d; i < w; ++i) assignment[i] = 0;
      }
      // next support combination
      size_t i = w;
      while (i > 0 && support[i - 1] == c.n() - (w - (i - 1))) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  }
  if (filled != table->entries.size()) {
    throw std::logic_error("build_lookup: syndrome space not covered");
  }
  return table;
}

std::string table_to_text(const LookupTable& t) {
  std::ostringstream out;
  size_t hex_digits = (t.syndrome_bits + 3) / 4;
  for (uint64_t s = 0; s < t.entries.size(); ++s) {
    std::string hex(hex_digits, '0');
    for (size_t d = 0; d < hex_digits; ++d) {
      hex[hex_digits - 1 - d] = "0123456789abcdef"[(s >> (4 * d)) & 0xf];
    }
    out << hex << ' ' << t.entries[s].to_string() << '\n';
  }
  return out.str();
}

DecodeTables DecodeTables::build(const ConcatLayout& layout) {
  DecodeTables t;
  t.inner = build_lookup(layout.inner);
  t.outer = build_lookup(layout.outer);
  return t;
}

std::vector<BlockDecodeOutcome> decode_inner(const ConcatLayout& layout, Pauli& residual,
                                             const LookupTable& inner_table) {
  std::vector<BlockDecodeOutcome> out;
  out.reserve(layout.block_count);
  for (size_t b = 0; b < layout.block_count; ++b) {
    BlockDecodeOutcome o;
    o.block = b;
    size_t offset = b * layout.inner.n();
    Pauli block = residual.slice(offset, layout.inner.n());
    o.syndrome = syndrome_bits(layout.inner, block);
    o.correction = inner_table.correction(o.syndrome);
    residual.mul_at(o.correction, offset);
    block.mul_at(o.correction, 0);
    o.cls = logical_class(layout.inner, block)[0];
    out.push_back(std::move(o));
  }
  return out;
}

OuterDecodeOutcome decode_outer(const ConcatLayout& layout,
                                const std::vector<std::pair<bool, bool>>& block_classes,
                                const LookupTable& outer_table) {
  if (block_classes.size() != layout.block_count) {
    throw std::invalid_argument("decode_outer: wrong class count");
  }
  BitVector bare_x(layout.block_count);
  BitVector bare_z(layout.block_count);
  for (size_t b = 0; b < layout.block_count; ++b) {
    if (block_classes[b].first) bare_x.set(b, true);
    if (block_classes[b].second) bare_z.set(b, true);
  }
  Pauli bare = Pauli::from_xz(bare_x, bare_z);
  OuterDecodeOutcome o;
  o.syndrome = syndrome_bits(layout.outer, bare);
  o.bare_correction = outer_table.correction(o.syndrome);
  Pauli corrected = bare * o.bare_correction;
  o.global_class = logical_class(layout.outer, corrected)[0];
  return o;
}

uint64_t apply_outer_ec(const ConcatLayout& layout, const LookupTable& outer_table,
                        Pauli& residual) {
  // Bit k < |outer hz|: lifted Z observable for outer hz row k (X-class side),
  // then the lifted X observables; matches the outer table's syndrome packing.
  uint64_t s = 0;
  size_t bit = 0;
  for (const BitVector& support : layout.outer_lifted_z) {
    if (residual.x().dot(support)) s |= uint64_t{1} << bit;
    ++bit;
  }
  for (const BitVector& support : layout.outer_lifted_x) {
    if (residual.z().dot(support)) s |= uint64_t{1} << bit;
    ++bit;
  }
  const Pauli& bare = outer_table.correction(s);
  for (size_t b = 0; b < layout.block_count; ++b) {
    if (bare.x().get(b)) residual.mul_at(layout.block_logical_x(b), 0);
    if (bare.z().get(b)) residual.mul_at(layout.block_logical_z(b), 0);
  }
  return s;
}

uint64_t apply_inner_ec(const ConcatLayout& layout, const LookupTable& inner_table,
                        size_t block, Pauli& residual) {
  size_t offset = block * layout.inner.n();
  uint64_t s = syndrome_bits(layout.inner, residual.slice(offset, layout.inner.n()));
  residual.mul_at(inner_table.correction(s), offset);
  return s;
}

PipelineOutcome residual_logical_action(const ConcatLayout& layout,
                                        std::span<const Pauli> branches,
                                        EcSchedule schedule, const DecodeTables& tables) {
  PipelineOutcome out;
  for (size_t i = 0; i < branches.size(); ++i) {
    Pauli r = branches[i];
    if (r.n() != layout.total_qubits) {
      throw std::invalid_argument("residual_logical_action: width mismatch");
    }
    // Scheduled error correction.
    for (size_t b = 0; b < layout.block_count; ++b) {
      apply_inner_ec(layout, *tables.inner, b, r);
    }
    if (schedule == EcSchedule::InnerThenOuter) {
      apply_outer_ec(layout, *tables.outer, r);
    }
    // Trailing ideal round, both levels; defines the correctness predicate.
    for (size_t b = 0; b < layout.block_count; ++b) {
      apply_inner_ec(layout, *tables.inner, b, r);
    }
    apply_outer_ec(layout, *tables.outer, r);

    if (!syndrome(layout.lifted, r).is_zero()) {
      throw std::logic_error("residual_logical_action: nonzero syndrome after ideal round");
    }
    auto cls = logical_class(layout.lifted, r)[0];
    if (cls.first || cls.second) {
      out.pass = false;
      out.failed_branch = static_cast<int>(i);
      out.residual = std::move(r);
      out.cls = cls;
      return out;
    }
  }
  return out;
}

}  // namespace qcat
