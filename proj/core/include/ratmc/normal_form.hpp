#pragma once

#include <cstddef>

#include "ratmc/formula.hpp"

namespace ratmc {

/// Negation normal form. Implications are rewritten first, then negations
/// are pushed through the boolean connectives and the modal dualities
/// (<R>/[R], inverses, U, D, @). Counting and program modalities are opaque:
/// negation stays in front of them, except that ~count(R,>=k) becomes
/// count(R,<=k-1) and ~count(R,<=k) becomes count(R,>=k+1). Their
/// arguments are normalized recursively.
Formula nnf(const Formula& f);

/// True if every negation sits directly on an atom, nominal, letter literal,
/// or an opaque (counting/program) modality.
bool is_nnf(const Formula& f);

/// Maximum nesting depth of modal operators, computed on nnf(f). Relational
/// boxes/diamonds, U, D and @ count as modalities; counting and program
/// modalities are rank-0 leaves.
std::size_t modal_rank(const Formula& f);

struct AlternatingRanks {
  std::size_t box = 0;
  std::size_t diamond = 0;
  friend bool operator==(const AlternatingRanks&, const AlternatingRanks&) = default;
};

/// Alternating box and diamond ranks, computed on nnf(f). <U>, <D> count as
/// diamonds; [U], [D] and @ count as boxes.
AlternatingRanks alternating_ranks(const Formula& f);

/// max(box rank, diamond rank).
std::size_t alternation_rank(const Formula& f);

}  // namespace ratmc
