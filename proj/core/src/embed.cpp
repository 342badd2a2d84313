#include "lensfill/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "lensfill/intlin.hpp"

namespace lensfill {

namespace mp = boost::multiprecision;

BudgetExhausted::BudgetExhausted(std::uint64_t nodes)
    : std::runtime_error("search budget exhausted after " +
                         std::to_string(nodes) + " nodes"),
      nodes_(nodes) {}

bool verify_embedding(const Embedding& e) {
  const std::size_t l = e.source.size();
  if (e.images.size() != l) return false;
  for (const DiagVector& v : e.images)
    if (v.size() != e.target_rank) return false;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j)
      if (pairing(e.images[i], e.images[j]) != e.source.gram(i, j)) return false;
  return true;
}

Embedding canonicalize(const Embedding& e) {
  const std::size_t l = e.images.size();
  const std::size_t n = e.target_rank;
  std::vector<std::vector<Int>> cols(n, std::vector<Int>(l));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < l; ++i) cols[c][i] = e.images[i][c];
    auto first = std::find_if(cols[c].begin(), cols[c].end(),
                              [](const Int& x) { return x != 0; });
    if (first != cols[c].end() && *first < 0)
      for (Int& x : cols[c]) x = -x;
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  Embedding out{e.source, n, std::vector<DiagVector>(l, DiagVector(n))};
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < l; ++i) out.images[i][c] = cols[c][i];
  return out;
}

bool embedding_less(const Embedding& a, const Embedding& b) {
  return a.images < b.images;
}

namespace {

using Coord = std::int64_t;
using Wide = __int128;

// Keeps every intermediate product of the search well inside 128 bits.
constexpr Coord kMaxSearchWeight = Coord(1) << 30;

Coord isqrt(Coord x) {
  Coord r = static_cast<Coord>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Depth-first placement of chain vertices in ascending-weight order.  The
// partial image matrix is kept with every column's first nonzero entry
// positive, so its stabiliser is generated by permutations of identical
// columns and sign changes of all-zero columns.  Candidates for the next
// vertex are taken non-increasing within each block of identical columns
// and non-negative on the zero block, which picks one vector per orbit.
class Search {
 public:
  Search(const ChainLattice& chain, std::size_t rank, std::uint64_t budget)
      : chain_(chain), rank_(rank), budget_(budget) {
    const std::size_t l = chain.size();
    weights_.resize(l);
    for (std::size_t i = 0; i < l; ++i) {
      if (chain.weight(i) > kMaxSearchWeight)
        throw SearchRangeExceeded("chain weight " + chain.weight(i).str() +
                                  " exceeds the search range");
      weights_[i] = chain.weight(i).convert_to<Coord>();
    }
    order_.resize(l);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return weights_[a] < weights_[b];
                     });
  }

  std::vector<Embedding> run() {
    place();
    std::sort(found_.begin(), found_.end(), embedding_less);
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Frame {
    std::size_t depth = 0;
    std::vector<std::size_t> seq;  // coordinates, grouped by column
    std::vector<char> same_as_prev;
    std::vector<char> zero;
    // nonzero column entries per position: (placed row, value)
    std::vector<std::vector<std::pair<std::size_t, Coord>>> entries;
    std::vector<std::vector<Coord>> suffix;  // suffix[pos][row]
    std::vector<Coord> resid;
    std::vector<Coord> x;
    std::vector<std::vector<Coord>> out;
  };

  void tick() {
    if (++nodes_ > budget_) throw BudgetExhausted(nodes_);
  }

  void place() {
    tick();
    const std::size_t depth = rows_.size();
    if (depth == order_.size()) {
      record();
      return;
    }
    Frame f = make_frame(depth);
    generate(f, 0, weights_[order_[depth]], 0);
    for (auto& x : f.out) {
      rows_.push_back(std::move(x));
      place();
      rows_.pop_back();
    }
  }

  Frame make_frame(std::size_t depth) {
    Frame f;
    f.depth = depth;
    const std::size_t v = order_[depth];
    std::vector<std::vector<Coord>> cols(rank_, std::vector<Coord>(depth));
    for (std::size_t c = 0; c < rank_; ++c)
      for (std::size_t j = 0; j < depth; ++j) cols[c][j] = rows_[j][c];

    f.seq.resize(rank_);
    std::iota(f.seq.begin(), f.seq.end(), std::size_t{0});
    // Descending lexicographic order puts the zero columns last since every
    // nonzero column has a positive leading entry.
    std::stable_sort(f.seq.begin(), f.seq.end(),
                     [&](std::size_t a, std::size_t b) { return cols[a] > cols[b]; });
    f.same_as_prev.assign(rank_, 0);
    f.zero.assign(rank_, 0);
    f.entries.resize(rank_);
    for (std::size_t pos = 0; pos < rank_; ++pos) {
      const auto& col = cols[f.seq[pos]];
      if (pos > 0 && col == cols[f.seq[pos - 1]]) f.same_as_prev[pos] = 1;
      bool all_zero = true;
      for (std::size_t j = 0; j < depth; ++j)
        if (col[j] != 0) {
          all_zero = false;
          f.entries[pos].emplace_back(j, col[j]);
        }
      f.zero[pos] = all_zero;
    }
    f.suffix.assign(rank_ + 1, std::vector<Coord>(depth, 0));
    for (std::size_t pos = rank_; pos-- > 0;) {
      f.suffix[pos] = f.suffix[pos + 1];
      for (auto [j, val] : f.entries[pos]) f.suffix[pos][j] += val * val;
    }
    // x . image(u) must equal -gram(v, u).
    f.resid.resize(depth);
    for (std::size_t j = 0; j < depth; ++j)
      f.resid[j] = -chain_.gram(v, order_[j]).convert_to<Coord>();
    f.x.assign(rank_, 0);
    return f;
  }

  void generate(Frame& f, std::size_t pos, Coord norm, Coord prev) {
    tick();
    for (std::size_t j = 0; j < f.depth; ++j) {
      const Coord r = f.resid[j];
      if (r != 0 && Wide(r) * r > Wide(norm) * f.suffix[pos][j]) return;
    }
    if (pos == rank_) {
      if (norm == 0) f.out.push_back(f.x);
      return;
    }
    Coord hi = isqrt(norm);
    Coord lo = -hi;
    if (f.same_as_prev[pos]) hi = std::min(hi, prev);
    if (f.zero[pos]) {
      lo = 0;
      // Remaining coordinates are all zero-block and non-increasing.
      if (Wide(rank_ - pos) * hi * hi < norm) return;
      if (norm == 0) {
        f.out.push_back(f.x);
        return;
      }
    }
    const std::size_t c = f.seq[pos];
    for (Coord val = hi; val >= lo; --val) {
      f.x[c] = val;
      for (auto [j, e] : f.entries[pos]) f.resid[j] -= e * val;
      generate(f, pos + 1, norm - val * val, val);
      for (auto [j, e] : f.entries[pos]) f.resid[j] += e * val;
    }
    f.x[c] = 0;
  }

  void record() {
    Embedding e{chain_, rank_, std::vector<DiagVector>(order_.size())};
    for (std::size_t k = 0; k < order_.size(); ++k) {
      std::vector<Int> coords(rows_[k].begin(), rows_[k].end());
      e.images[order_[k]] = DiagVector(std::move(coords));
    }
    if (!verify_embedding(e))
      throw std::logic_error("embedding search produced an invalid embedding");
    found_.push_back(canonicalize(e));
  }

  const ChainLattice& chain_;
  std::size_t rank_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Coord> weights_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Coord>> rows_;
  std::vector<Embedding> found_;
};

}  // namespace

std::vector<Embedding> enumerate_embeddings(const ChainLattice& chain,
                                            std::size_t target_rank,
                                            std::uint64_t budget,
                                            SearchStats* stats) {
  if (target_rank < chain.size())
    throw std::invalid_argument("target rank is smaller than the chain");
  Search search(chain, target_rank, budget);
  try {
    auto out = search.run();
    if (stats) stats->nodes = search.nodes();
    return out;
  } catch (const BudgetExhausted&) {
    if (stats) stats->nodes = search.nodes();
    throw;
  }
}

ComplementGenerator complement_generator(const Embedding& e) {
  IntMatrix m(e.images.size(), e.target_rank);
  for (std::size_t i = 0; i < e.images.size(); ++i) {
    if (e.images[i].size() != e.target_rank)
      throw std::invalid_argument("image has the wrong rank");
    for (std::size_t c = 0; c < e.target_rank; ++c) m(i, c) = e.images[i][c];
  }
  auto kernel = integer_kernel(m);
  if (kernel.size() != 1)
    throw std::invalid_argument("embedding is not of corank one");
  ComplementGenerator g{DiagVector(std::move(kernel.front())), 0};
  g.square = g.vector.square();
  return g;
}

bool is_changemaker(std::span<const Int> sorted) {
  if (sorted.empty()) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || (i > 0 && sorted[i] < sorted[i - 1]))
      throw std::invalid_argument("is_changemaker expects a sorted sequence");
  }
  if (sorted.front() != 1) return false;
  Int partial = 0;
  for (const Int& s : sorted) {
    if (s > partial + 1) return false;
    partial += s;
  }
  return true;
}

bool maps_to_changemaker(const DiagVector& v) {
  std::vector<Int> a;
  a.reserve(v.size());
  for (const Int& x : v.coords()) a.push_back(mp::abs(x));
  std::sort(a.begin(), a.end());
  return is_changemaker(a);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Obstructed: return "OBSTRUCTED";
    case Status::CriterionSatisfied: return "CRITERION_SATISFIED";
    case Status::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

Status status_from_string(const std::string& s) {
  if (s == "OBSTRUCTED") return Status::Obstructed;
  if (s == "CRITERION_SATISFIED") return Status::CriterionSatisfied;
  if (s == "INDETERMINATE") return Status::Indeterminate;
  throw std::invalid_argument("unknown status '" + s + "'");
}

namespace {

// Corank-one embeddings of the chain of `lens` as witnesses.  Returns false
// and fills `why` when the search could not finish.
bool collect(const LensSpace& lens, std::uint64_t& budget,
             std::vector<Witness>& out, std::string& notes, std::string& why) {
  const ChainLattice chain = ChainLattice::from_lens(lens);
  const std::size_t rank = chain.size() + 1;
  SearchStats stats;
  std::vector<Embedding> found;
  try {
    found = enumerate_embeddings(chain, rank, budget, &stats);
  } catch (const BudgetExhausted& ex) {
    why = lens.to_string() + ": " + ex.what();
    budget = 0;
    return false;
  } catch (const SearchRangeExceeded& ex) {
    why = lens.to_string() + ": " + ex.what();
    return false;
  }
  budget -= std::min(budget, stats.nodes);
  for (Embedding& e : found) {
    ComplementGenerator g = complement_generator(e);
    const bool cm = maps_to_changemaker(g.vector);
    out.push_back({std::move(e), std::move(g), cm});
  }
  if (!notes.empty()) notes += "; ";
  notes += lens.to_string() + ": " + std::to_string(found.size()) +
           " embedding(s) of " + chain.weights().to_string() + " into -Z^" +
           std::to_string(rank) + " (" + std::to_string(stats.nodes) +
           " nodes)";
  return true;
}

}  // namespace

Verdict classify_dehn(const LensSpace& lens, std::uint64_t budget) {
  Verdict v;
  std::vector<LensSpace> targets{lens};
  const LensSpace inv = lens.inverse();
  if (inv.q() != lens.q()) targets.push_back(inv);
  std::string why;
  for (const LensSpace& l : targets) {
    if (!collect(l, budget, v.witnesses, v.notes, why)) {
      v.status = Status::Indeterminate;
      v.notes += (v.notes.empty() ? "" : "; ") + why;
      return v;
    }
  }
  const Int target = -lens.p();
  const bool hit = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                               [&](const Witness& w) {
                                 return w.generator.square == target && w.changemaker;
                               });
  v.status = hit ? Status::CriterionSatisfied : Status::Obstructed;
  v.notes += hit ? "; a complement generator of square -p is a changemaker"
                 : "; no complement generator of square -p is a changemaker";
  return v;
}

Verdict h1_filling_obstruction(const LensSpace& lens, std::uint64_t budget) {
  Verdict v;
  std::string why;
  if (!collect(lens, budget, v.witnesses, v.notes, why)) {
    v.status = Status::Indeterminate;
    v.notes += (v.notes.empty() ? "" : "; ") + why;
    return v;
  }
  const Int target = -lens.p();
  const bool hit = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                               [&](const Witness& w) { return w.generator.square == target; });
  v.status = hit ? Status::CriterionSatisfied : Status::Obstructed;
  v.notes += hit ? "; some complement generator has square -p"
                 : "; no complement generator has square -p";
  return v;
}

}  // namespace lensfill
