#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringops {

// Rank of a 1-based tuple in lexicographic order over the given sizes,
// last coordinate varying fastest.  Ranks are 1-based; the product of
// sizes is the total count (empty tuple -> total 1, rank 1).
int lex_rank(std::span<const int> tuple, std::span<const int> sizes);
std::vector<int> lex_unrank(int rank, std::span<const int> sizes);
long long lex_total(std::span<const int> sizes);

// Canonical tuple encoding: "(a,b,c)". Splitting respects nested
// (), [] so labels built from tuples and permutation images round-trip.
std::string encode_tuple(std::span<const std::string> parts);
std::vector<std::string> decode_tuple(const std::string& s);

std::string encode_ints(std::span<const int> xs);
std::vector<int> decode_ints(const std::string& s);

struct CheckFailure {
  std::string law;
  std::string witness;
};

// Result of an axiom/property suite.  A failing suite always carries at
// least one witness; `exhaustive` records whether the enumeration window
// provably covered all instances or was a sample.
struct CheckReport {
  std::string suite;
  long long cases_checked = 0;
  bool exhaustive = true;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  void fail(std::string law, std::string witness) {
    failures.push_back({std::move(law), std::move(witness)});
  }
  std::string summary() const;
};

// Enumeration window for free-object evaluation.  m_max bounds the
// source arity, r_max the inner object sizes.  Evaluations report back
// whether finite support made the window provably exhaustive.
struct Window {
  int m_max = 4;
  int r_max = 3;
};

template <typename T>
struct Enumerated {
  std::vector<T> values;
  bool exhaustive = true;
};

}  // namespace ringops
