#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lensfill/arith.hpp"
#include "lensfill/lattice.hpp"

namespace lensfill {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// A lattice embedding of a chain into -Z^target_rank: images[i] is the image
// of the i-th chain vertex.
struct Embedding {
  ChainLattice source;
  std::size_t target_rank = 0;
  std::vector<DiagVector> images;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Thrown when a search runs out of nodes before finishing.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t nodes);
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

// Thrown when a chain weight is too large for the search's coordinate type.
class SearchRangeExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whether the images realise the chain's Gram matrix.
bool verify_embedding(const Embedding& e);

// Representative of the orbit of e under signed coordinate permutations:
// flip each coordinate so its first nonzero entry (in chain order) is
// positive, then sort the coordinates by descending column.
Embedding canonicalize(const Embedding& e);

// Total order on canonical embeddings of the same chain.
bool embedding_less(const Embedding& a, const Embedding& b);

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Every embedding of the chain into -Z^target_rank up to signed coordinate
// permutations, canonicalized and sorted.  Needs target_rank >= chain
// length.  Throws BudgetExhausted once more than `budget` nodes are visited.
std::vector<Embedding> enumerate_embeddings(const ChainLattice& chain,
                                            std::size_t target_rank,
                                            std::uint64_t budget = kDefaultBudget,
                                            SearchStats* stats = nullptr);

struct ComplementGenerator {
  DiagVector vector;
  Int square;

  friend bool operator==(const ComplementGenerator&,
                         const ComplementGenerator&) = default;
};

// Primitive generator of the orthogonal complement of a corank-one
// embedding, first nonzero coordinate positive.
ComplementGenerator complement_generator(const Embedding& e);

// sigma0 = 1 and sigma_i <= 1 + sigma0 + ... + sigma_{i-1} for the sorted
// sequence.  Expects a non-decreasing, non-negative sequence.
bool is_changemaker(std::span<const Int> sorted);

// Whether sorting the absolute coordinates gives a changemaker sequence.
bool maps_to_changemaker(const DiagVector& v);

enum class Status { Obstructed, CriterionSatisfied, Indeterminate };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Witness {
  Embedding embedding;
  ComplementGenerator generator;
  bool changemaker = false;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Status status = Status::Indeterminate;
  std::vector<Witness> witnesses;
  std::string notes;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// CRITERION_SATISFIED when some corank-one embedding of the chain of
// L(p, q) or L(p, q') has a complement generator of square -p that sorts
// to a changemaker; OBSTRUCTED when the searches finish without one.
Verdict classify_dehn(const LensSpace& lens,
                      std::uint64_t budget = kDefaultBudget);

// OBSTRUCTED when no corank-one embedding has a complement generator of
// square -p (the image is never primitive); otherwise CRITERION_SATISFIED.
Verdict h1_filling_obstruction(const LensSpace& lens,
                               std::uint64_t budget = kDefaultBudget);

}  // namespace lensfill
