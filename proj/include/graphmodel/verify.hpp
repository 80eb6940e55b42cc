#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphmodel/model.hpp"

namespace graphmodel {

inline constexpr std::uint64_t kDefaultVerifySeed = 20240607;

struct VerifyOptions {
  /// exhaustive corpus: all graphs with at most this many vertices
  int max_n = 3;
  /// random morphisms between graphs on sample_n vertices
  int samples = 200;
  int sample_n = 4;
  /// sampled morphisms are checked against corpus arrows up to this size
  int partner_max_n = 2;
  std::uint64_t seed = kDefaultVerifySeed;
};

struct AxiomResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// checks abandoned because a search ran past its budget
  std::size_t skipped = 0;
  std::optional<std::string> witness;
  bool passed() const noexcept { return failures == 0; }
};

struct AxiomReport {
  std::string structure;
  int max_n = 0;
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// some check was skipped, so the report covers a subset
  bool sampled = false;
  std::vector<AxiomResult> axioms;

  bool passed() const noexcept;
  /// Line-oriented text: header fields, one `axiom` line per check, then `result PASS|FAIL`.
  std::string render() const;
};

/// Two-of-three on every composable pair, lifting for every (cof, afib) and
/// (acof, fib) pair, soundness of both factorizations, closure of we, cof
/// and fib under retracts, and structure-specific cross-checks, all over
/// the morphisms between graphs with at most max_n vertices; then the same
/// checks on pseudo-random morphisms of larger graphs against small partners.
AxiomReport verify_model_axioms(const ModelStructure& m, const VerifyOptions& options = {});

}  // namespace graphmodel
