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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sinksub {

using Nimber = std::uint32_t;

// Slot marker for positions a wall forbids. Never a legal nim-value.
inline constexpr Nimber kAbsent = ~Nimber{0};

// Least nonnegative integer not present in `values`. Entries equal to
// kAbsent are ignored.
[[nodiscard]] Nimber mex(std::span<const Nimber> values);
[[nodiscard]] inline Nimber mex(std::initializer_list<Nimber> values) {
  return mex(std::span<const Nimber>(values.begin(), values.size()));
}

// A finite move set. Moves are kept sorted and distinct.
class SubtractionSet {
 public:
  // Throws std::invalid_argument on an empty set, a zero move or a repeat.
  // Input order does not matter.
  explicit SubtractionSet(std::vector<std::uint64_t> moves);
  SubtractionSet(std::initializer_list<std::uint64_t> moves)
      : SubtractionSet(std::vector<std::uint64_t>(moves)) {}

  // Parses "2,5" or "2, 5". Throws std::invalid_argument.
  static SubtractionSet parse(const std::string& text);

  [[nodiscard]] std::span<const std::uint64_t> moves() const { return moves_; }
  [[nodiscard]] std::uint64_t max_move() const { return moves_.back(); }
  [[nodiscard]] std::size_t size() const { return moves_.size(); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const SubtractionSet&, const SubtractionSet&) = default;

 private:
  std::vector<std::uint64_t> moves_;
};

enum class Convention { Sink, Wall };

[[nodiscard]] const char* to_string(Convention c);
// Accepts "sink" or "wall". Throws std::invalid_argument.
[[nodiscard]] Convention parse_convention(const std::string& text);

// Sink sequences are reported from x = 1, wall sequences from x = 0.
[[nodiscard]] constexpr std::int64_t start_index(Convention c) {
  return c == Convention::Sink ? 1 : 0;
}

struct GrundySequence {
  SubtractionSet set;
  Convention convention;
  std::int64_t start_index;
  std::vector<Nimber> values;

  // Value at absolute position x; x must lie in the computed range.
  [[nodiscard]] Nimber at(std::int64_t x) const {
    return values.at(static_cast<std::size_t>(x - start_index));
  }
};

// Streams nim-values one position at a time, keeping only the last
// max_move values. Under Sink, every slot before position 1 holds 0; under
// Wall, every slot before position 0 holds kAbsent.
class NimGenerator {
 public:
  NimGenerator(const SubtractionSet& set, Convention convention);

  // Position whose value the next call to next() returns.
  [[nodiscard]] std::int64_t position() const { return position_; }

  // Window of option slots for position(): oldest first, i.e. the values at
  // position()-max_move .. position()-1.
  void window(std::vector<Nimber>& out) const;

  Nimber next();

 private:
  std::vector<std::uint64_t> moves_;
  std::vector<Nimber> ring_;
  std::vector<Nimber> scratch_;
  std::size_t head_ = 0;  // slot holding value at position()-max_move
  std::int64_t position_;
};

// First `count` values: v(1..count) under Sink, v(0..count-1) under Wall.
[[nodiscard]] GrundySequence grundy_sequence(const SubtractionSet& set,
                                             Convention convention,
                                             std::size_t count);

}  // namespace sinksub
