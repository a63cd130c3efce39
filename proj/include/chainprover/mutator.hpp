#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainprover/verifier.hpp"

namespace chainprover::mutator {

struct NotMutableError : std::runtime_error {
  explicit NotMutableError(const std::string& why)
      : std::runtime_error("chain not mutable: " + why) {}
};

enum class MutationKind { T2, T3, T4 };

const char* to_string(MutationKind kind);
MutationKind mutation_kind_from_string(const std::string& name);

struct MutationSpec {
  MutationKind kind;
  std::uint64_t rng_seed = 0;
};

/// A synthetic chain that verifies as T1: an implication ladder
/// p0(c), forall x (p_i(x) -> p_{i+1}(x)) with steps p_1(c)..p_depth(c),
/// conclusion p_depth(c), plus one spare premise left unused by the chain.
/// Predicate and constant names are nonsense words derived from the seed.
verify::Instance synthesize_gold(int depth, std::uint64_t seed);

/// Derive a chain whose verification category is spec.kind:
///  T2: insert the negation of a premise as an extra (False) step;
///  T3: delete the final step, append a restatement of the spare premise;
///  T4: both edits.
/// Deterministic in (chain, spec). The input must look like a gold chain
/// (non-empty steps, final step equal to the conclusion).
verify::Instance mutate(const verify::Instance& chain,
                        const MutationSpec& spec);

}  // namespace chainprover::mutator
