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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sinksub/nim.hpp"

namespace sinksub {

// A run x^y of a single symbol.
struct Factor {
  Nimber symbol = 0;
  std::uint64_t length = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class BlockTag : char { B = 'B', C = 'C', Z = 'Z' };

struct BlockEntry {
  BlockTag tag;
  std::uint32_t index;   // block index i
  std::uint64_t offset;  // first position of the block, 0-based in the word
  std::uint64_t length;

  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

// Run-length word. Construction drops empty factors and merges equal
// neighbours, so adjacent factors always carry distinct symbols.
class PeriodWord {
 public:
  PeriodWord() = default;
  explicit PeriodWord(std::vector<Factor> factors, std::vector<BlockEntry> blocks = {});

  static PeriodWord from_values(std::span<const Nimber> values);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] const std::vector<BlockEntry>& blocks() const { return blocks_; }
  [[nodiscard]] std::uint64_t total_length() const { return total_; }
  [[nodiscard]] bool empty() const { return total_ == 0; }

  [[nodiscard]] std::vector<Nimber> expand() const;
  // "1230"
  [[nodiscard]] std::string digits() const;
  // "1^5 2^5 1^4 3^1 ..."
  [[nodiscard]] std::string run_length() const;
  // "BCCCBZ"; empty when the word has no block decomposition.
  [[nodiscard]] std::string block_string() const;

  // Equality compares the symbol sequence only.
  friend bool operator==(const PeriodWord& a, const PeriodWord& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  std::vector<BlockEntry> blocks_;
  std::uint64_t total_ = 0;
};

}  // namespace sinksub
