// Copyright 2026 The sinksub Authors
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

#include "sinksub/word.hpp"

#include <sstream>

#include "sinksub/period.hpp"

namespace sinksub {

PeriodWord::PeriodWord(std::vector<Factor> factors, std::vector<BlockEntry> blocks)
    : blocks_(std::move(blocks)) {
  for (const Factor& f : factors) {
    if (f.length == 0) continue;
    if (!factors_.empty() && factors_.back().symbol == f.symbol) {
      factors_.back().length += f.length;
    } else {
      factors_.push_back(f);
    }
    total_ += f.length;
  }
}

PeriodWord PeriodWord::from_values(std::span<const Nimber> values) {
  std::vector<Factor> factors;
  for (Nimber v : values) {
    if (!factors.empty() && factors.back().symbol == v) {
      ++factors.back().length;
    } else {
      factors.push_back({v, 1});
    }
  }
  return PeriodWord(std::move(factors));
}

std::vector<Nimber> PeriodWord::expand() const {
  std::vector<Nimber> out;
  out.reserve(total_);
  for (const Factor& f : factors_) out.insert(out.end(), f.length, f.symbol);
  return out;
}

std::string PeriodWord::digits() const { return word_digits(expand()); }

std::string PeriodWord::run_length() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << ' ';
    out << factors_[i].symbol << '^' << factors_[i].length;
  }
  return out.str();
}

std::string PeriodWord::block_string() const {
  std::string out;
  out.reserve(blocks_.size());
  for (const BlockEntry& b : blocks_) out.push_back(static_cast<char>(b.tag));
  return out;
}

}  // namespace sinksub
