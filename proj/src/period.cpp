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

#include "sinksub/period.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "sinksub/additive.hpp"

namespace sinksub {
namespace {

std::string power_bound(std::size_t rho, std::uint64_t max_move) {
  std::ostringstream out;
  out << rho << '^' << max_move;
  const long double log10_bound =
      static_cast<long double>(max_move) * std::log10(static_cast<long double>(rho));
  if (log10_bound < 18.0L) {
    std::uint64_t value = 1;
    for (std::uint64_t i = 0; i < max_move; ++i) value *= rho;
    out << '=' << value;
  }
  return out.str();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      primes.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

HorizonExhausted::HorizonExhausted(std::uint64_t horizon, std::string theoretical_bound)
    : std::runtime_error("HorizonExhausted: no window repetition within " +
                         std::to_string(horizon) +
                         " positions (theoretical bound " + theoretical_bound + ")"),
      horizon_(horizon),
      bound_(std::move(theoretical_bound)) {}

std::uint64_t default_horizon(const SubtractionSet& set) {
  const std::uint64_t floor = 2 * set.max_move() + 2;
  if (auto params = as_additive(set)) {
    return std::max<std::uint64_t>(8 * period_formula(*params), floor);
  }
  return std::max<std::uint64_t>(1'000'000, floor);
}

PeriodInfo detect_period(const SubtractionSet& set, Convention convention,
                         std::optional<std::uint64_t> horizon_opt) {
  const std::uint64_t width = set.max_move();
  const std::uint64_t horizon = horizon_opt.value_or(default_horizon(set));
  if (horizon < 2 * width + 2) {
    throw std::invalid_argument("horizon must be at least 2*max_move+2");
  }

  // vals[j] is the value at position start + j - width; the first `width`
  // entries are the sink or wall padding.
  std::vector<Nimber> vals(width, convention == Convention::Sink ? Nimber{0} : kAbsent);
  NimGenerator gen(set, convention);

  constexpr std::uint64_t kBase = 0x100000001b3ULL;
  std::uint64_t top_power = 1;  // kBase^(width-1)
  for (std::uint64_t j = 1; j < width; ++j) top_power *= kBase;
  std::uint64_t hash = 0;
  for (std::uint64_t j = 0; j < width; ++j) hash = hash * kBase + vals[j];

  auto same_window = [&](std::uint64_t a, std::uint64_t b) {
    return std::equal(vals.begin() + a, vals.begin() + a + width, vals.begin() + b);
  };

  std::unordered_multimap<std::uint64_t, std::uint64_t> first_seen;
  std::optional<std::uint64_t> first;
  std::uint64_t offset = 0;
  for (; offset <= horizon; ++offset) {
    auto [lo, hi] = first_seen.equal_range(hash);
    for (auto it = lo; it != hi; ++it) {
      if (same_window(it->second, offset)) {
        first = it->second;
        break;
      }
    }
    if (first) break;
    first_seen.emplace(hash, offset);
    if (offset == horizon) break;
    vals.push_back(gen.next());
    hash = (hash - vals[offset] * top_power) * kBase + vals[offset + width];
  }
  if (!first) {
    throw HorizonExhausted(horizon, power_bound(set.size(), width));
  }
  first_seen.clear();

  std::uint64_t preperiod = *first;
  std::uint64_t period = offset - *first;
  // Positions up to preperiod + 2*period cover every comparison below.
  while (vals.size() < width + preperiod + 2 * period) vals.push_back(gen.next());
  auto v = [&](std::uint64_t rel) { return vals[width + rel]; };

  while (preperiod > 0 && v(preperiod - 1) == v(preperiod - 1 + period)) --preperiod;

  // One full period of agreement with a shift that divides the period
  // proves the shift is a period of the whole tail.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::uint64_t q : prime_factors(period)) {
      const std::uint64_t shift = period / q;
      bool ok = true;
      for (std::uint64_t x = preperiod; x < preperiod + period && ok; ++x) {
        ok = v(x) == v(x + shift);
      }
      if (ok) {
        period = shift;
        shrunk = true;
        break;
      }
    }
  }

  PeriodInfo info;
  info.preperiod = preperiod;
  info.period = period;
  info.start_index = start_index(convention);
  info.period_word.assign(vals.begin() + width + preperiod,
                          vals.begin() + width + preperiod + period);
  return info;
}

std::size_t least_rotation(std::span<const Nimber> word) {
  const std::size_t n = word.size();
  if (n == 0) return 0;
  // Booth's algorithm over the doubled word.
  std::vector<std::ptrdiff_t> failure(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t j) { return word[j % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Nimber sj = at(j);
    std::ptrdiff_t i = failure[j - k - 1];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = failure[i];
    }
    if (sj != at(k + i + 1)) {  // i == -1
      if (sj < at(k)) k = j;
      failure[j - k] = -1;
    } else {
      failure[j - k] = i + 1;
    }
  }
  return k % n;
}

bool minimal_rotation_equivalent(std::span<const Nimber> a, std::span<const Nimber> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  const std::size_t ra = least_rotation(a);
  const std::size_t rb = least_rotation(b);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[(ra + j) % n] != b[(rb + j) % n]) return false;
  }
  return true;
}

std::string word_digits(std::span<const Nimber> word) {
  std::string out;
  out.reserve(word.size());
  for (Nimber v : word) {
    if (v < 10) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      out += '[' + std::to_string(v) + ']';
    }
  }
  return out;
}

std::vector<Nimber> parse_word_digits(const std::string& text) {
  std::vector<Nimber> word;
  word.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("bad word symbol '") + c + "'");
    }
    word.push_back(static_cast<Nimber>(c - '0'));
  }
  return word;
}

}  // namespace sinksub
