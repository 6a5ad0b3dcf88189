// Copyright 2026 The sqisw-synth Authors
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

#include "sqisw/prune.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace sqisw {

namespace {

// Positions encoded base 3: 0 <-> (0,1), 1 <-> (0,2), 2 <-> (1,2);
// the code is 2 minus the excluded qubit.
using Code = std::vector<int8_t>;

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int pair_code(const QubitPair& p) {
  if (p.b > 2) throw std::invalid_argument("prune: 3-qubit structures only");
  return 2 - (3 - p.a - p.b);
}

QubitPair code_pair(int code) {
  const int excluded = 2 - code;
  const int a = excluded == 0 ? 1 : 0;
  const int b = excluded == 2 ? 1 : 2;
  return QubitPair(a, b);
}

Code encode(const CircuitStructure& c) {
  Code out(c.size());
  for (size_t i = 0; i < c.size(); ++i)
    out[i] = static_cast<int8_t>(pair_code(c[i]));
  return out;
}

CircuitStructure decode(const Code& code) {
  CircuitStructure out;
  out.reserve(code.size());
  for (int8_t d : code) out.push_back(code_pair(d));
  return out;
}

/// Code-level action of a qubit permutation: the excluded qubit moves with
/// the permutation.
std::array<int8_t, 3> code_table(const std::array<int, 3>& perm) {
  std::array<int8_t, 3> t{};
  for (int code = 0; code < 3; ++code)
    t[code] = static_cast<int8_t>(2 - perm[2 - code]);
  return t;
}

Code apply_table(const Code& c, const std::array<int8_t, 3>& t) {
  Code out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = t[c[i]];
  return out;
}

std::vector<Code> orbit(const Code& c) {
  std::vector<Code> out;
  Code rev(c.rbegin(), c.rend());
  for (const auto& perm : kPerms) {
    const auto t = code_table(perm);
    out.push_back(apply_table(c, t));
    out.push_back(apply_table(rev, t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<CircuitStructure> rearrangements(const CircuitStructure& c) {
  const Code code = encode(c);
  std::vector<Code> codes;
  for (const auto& perm : kPerms)
    codes.push_back(apply_table(code, code_table(perm)));
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<CircuitStructure> out;
  out.reserve(codes.size());
  for (const Code& k : codes) out.push_back(decode(k));
  return out;
}

CircuitStructure reverse_structure(const CircuitStructure& c) {
  return CircuitStructure(c.rbegin(), c.rend());
}

CircuitStructure canonical_representative(const CircuitStructure& c) {
  return decode(orbit(encode(c)).front());
}

std::vector<CircuitStructure> enumerate_pruned(int N) {
  if (N < 0) throw std::invalid_argument("enumerate_pruned: N >= 0");
  if (N > 15) throw std::length_error("enumerate_pruned: N > 15 unsupported");
  std::vector<CircuitStructure> out;
  Code code(N, 0);
  // Counting base 3 with the first gate as the most significant digit
  // enumerates structures in lexicographic order.
  while (true) {
    if (orbit(code).front() == code) out.push_back(decode(code));
    int i = N - 1;
    while (i >= 0 && code[i] == 2) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  return out;
}

ClosureCensus closure_census(int N) {
  if (N < 1) throw std::invalid_argument("closure_census: N >= 1");
  if (N > 12) throw std::length_error("closure_census: N > 12 unsupported");
  ClosureCensus census;
  census.N = N;
  Code code(N, 0);
  while (true) {
    const std::vector<Code> orb = orbit(code);
    if (orb.front() == code) {
      switch (orb.size()) {
        case 3:
          ++census.count3;
          break;
        case 6:
          ++census.count6;
          break;
        case 12:
          ++census.count12;
          break;
        default:
          throw std::logic_error("closure_census: orbit size not in {3,6,12}");
      }
    }
    int i = N - 1;
    while (i >= 0 && code[i] == 2) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
  return census;
}

Rational theorem3_prediction(int N, Theorem3Variant v) {
  if (N < 1) throw std::invalid_argument("theorem3_prediction: N >= 1");
  const Rational base = Rational(ipow(3, N), 12) + Rational(1, 4);
  if (v == Theorem3Variant::STATEMENT || N % 2 == 0)
    return base + Rational(ipow(3, (N - 1) / 2));
  return base + Rational(ipow(3, N / 2), 2);
}

}  // namespace sqisw
