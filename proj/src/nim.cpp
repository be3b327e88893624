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

#include "sinksub/nim.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sinksub {

Nimber mex(std::span<const Nimber> values) {
  // mex of n values is at most n, so a presence table of n+1 entries suffices.
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values) {
    if (v != kAbsent && v < seen.size()) seen[v] = true;
  }
  Nimber result = 0;
  while (seen[result]) ++result;
  return result;
}

SubtractionSet::SubtractionSet(std::vector<std::uint64_t> moves)
    : moves_(std::move(moves)) {
  if (moves_.empty()) throw std::invalid_argument("subtraction set is empty");
  std::sort(moves_.begin(), moves_.end());
  if (moves_.front() == 0) {
    throw std::invalid_argument("subtraction set contains a zero move");
  }
  if (std::adjacent_find(moves_.begin(), moves_.end()) != moves_.end()) {
    throw std::invalid_argument("subtraction set contains a repeated move");
  }
}

SubtractionSet SubtractionSet::parse(const std::string& text) {
  std::vector<std::uint64_t> moves;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("empty entry in move list '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw std::invalid_argument("bad move '" + item + "'");
    }
    moves.push_back(value);
    pos = comma + 1;
  }
  return SubtractionSet(std::move(moves));
}

std::string SubtractionSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (i) out << ',';
    out << moves_[i];
  }
  out << '}';
  return out.str();
}

const char* to_string(Convention c) {
  return c == Convention::Sink ? "sink" : "wall";
}

Convention parse_convention(const std::string& text) {
  if (text == "sink") return Convention::Sink;
  if (text == "wall") return Convention::Wall;
  throw std::invalid_argument("unknown convention '" + text + "'");
}

NimGenerator::NimGenerator(const SubtractionSet& set, Convention convention)
    : moves_(set.moves().begin(), set.moves().end()),
      ring_(set.max_move(), convention == Convention::Sink ? Nimber{0} : kAbsent),
      scratch_(set.size()),
      position_(start_index(convention)) {}

void NimGenerator::window(std::vector<Nimber>& out) const {
  out.resize(ring_.size());
  const std::size_t n = ring_.size();
  for (std::size_t j = 0; j < n; ++j) out[j] = ring_[(head_ + j) % n];
}

Nimber NimGenerator::next() {
  const std::size_t n = ring_.size();
  for (std::size_t j = 0; j < moves_.size(); ++j) {
    // The value at position()-s sits max_move-s slots after the oldest one.
    scratch_[j] = ring_[(head_ + n - moves_[j]) % n];
  }
  const Nimber value = mex(scratch_);
  ring_[head_] = value;
  head_ = (head_ + 1) % n;
  ++position_;
  return value;
}

GrundySequence grundy_sequence(const SubtractionSet& set, Convention convention,
                               std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  GrundySequence seq{set, convention, start_index(convention), {}};
  seq.values.reserve(count);
  NimGenerator gen(set, convention);
  for (std::size_t i = 0; i < count; ++i) seq.values.push_back(gen.next());
  return seq;
}

}  // namespace sinksub
