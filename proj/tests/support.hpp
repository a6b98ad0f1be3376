#pragma once

// Shared helpers for the test suites: terse constructors, seeded random
// instance generators, and brute-force oracles that stay independent of the
// library's search code.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/filtration.hpp"
#include "stanley/ideal.hpp"
#include "stanley/io.hpp"
#include "stanley/poset.hpp"
#include "stanley/simplicial.hpp"

namespace testsupport {

using namespace stanley;

using Rng = std::mt19937_64;

inline VariableSet vars(std::vector<std::string> names) {
  return VariableSet(std::move(names));
}

inline Monomial mono(const VariableSet& vs, std::string_view text) {
  return io::parse_monomial(text, vs);
}

inline MonomialIdeal ideal_of(const VariableSet& vs, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  ms.reserve(gens.size());
  for (const auto& g : gens)
    ms.push_back(mono(vs, g));
  return MonomialIdeal::make(vs, std::move(ms));
}

inline MonomialPrime prime_of(const VariableSet& vs, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names)
    idx.push_back(*vs.index_of(n));
  return MonomialPrime(vs, std::move(idx));
}

inline StanleySpace space_of(const VariableSet& vs, std::string_view offset,
                             const std::vector<std::string>& free) {
  std::vector<std::size_t> idx;
  for (const auto& n : free)
    idx.push_back(*vs.index_of(n));
  return StanleySpace(mono(vs, offset), std::move(idx));
}

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline VariableSet random_vars(Rng& rng, int min_n, int max_n) {
  static const std::vector<std::string> pool = {"x", "y", "z", "w", "u", "v"};
  int n = rand_int(rng, min_n, max_n);
  return VariableSet({pool.begin(), pool.begin() + n});
}

inline Monomial random_monomial(Rng& rng, const VariableSet& vs, int max_exp) {
  std::vector<int> e(vs.size());
  for (auto& x : e)
    x = rand_int(rng, 0, max_exp);
  return Monomial(vs, std::move(e));
}

/// Proper nonzero random ideal: between 1 and max_gens generators, none of
/// them the monomial 1.
inline MonomialIdeal random_proper_ideal(Rng& rng, const VariableSet& vs, int max_exp,
                                         int max_gens) {
  for (;;) {
    int k = rand_int(rng, 1, max_gens);
    std::vector<Monomial> gens;
    for (int i = 0; i < k; ++i) {
      Monomial m = random_monomial(rng, vs, max_exp);
      if (!m.is_one())
        gens.push_back(std::move(m));
    }
    if (gens.empty())
      continue;
    return MonomialIdeal::make(vs, std::move(gens));
  }
}

/// Random complex with at least the empty face (never void). Vertex names
/// follow the complex file format (x1, x2, ...).
inline SimplicialComplex random_complex(Rng& rng, int min_vertices, int max_vertices) {
  int n = rand_int(rng, min_vertices, max_vertices);
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j)
    names.push_back("x" + std::to_string(j));
  VariableSet vs(std::move(names));
  int count = rand_int(rng, 1, 5);
  std::vector<std::vector<std::size_t>> faces;
  faces.push_back({});
  for (int i = 0; i < count; ++i) {
    std::vector<std::size_t> f;
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (rand_int(rng, 0, 1))
        f.push_back(v);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(vs), std::move(faces));
}

// ------------------------------------------------------------------ oracles

/// Minimal transversals of the generator supports by full subset
/// enumeration. Usable up to a handful of variables.
inline std::vector<std::vector<std::size_t>> minimal_primes_oracle(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient().size();
  std::vector<std::uint32_t> hitting;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool hits_all = true;
    for (const auto& g : ideal.generators()) {
      std::uint32_t support = 0;
      for (std::size_t j : g.support())
        support |= 1u << j;
      if ((support & mask) == 0) {
        hits_all = false;
        break;
      }
    }
    if (hits_all)
      hitting.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> minimal;
  for (std::uint32_t m : hitting) {
    bool is_minimal = std::none_of(hitting.begin(), hitting.end(), [&](std::uint32_t o) {
      return o != m && (o & m) == o;
    });
    if (!is_minimal)
      continue;
    std::vector<std::size_t> set;
    for (std::size_t j = 0; j < n; ++j)
      if (m & (1u << j))
        set.push_back(j);
    minimal.push_back(std::move(set));
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return minimal;
}

/// Exhaustive maximin over every interval partition of the poset, with no
/// pruning. Each partition is produced exactly once by always covering the
/// lexicographically least uncovered point, whose covering interval must
/// start there.
inline int sdepth_exhaustive_oracle(const CharacteristicPoset& poset) {
  const std::size_t n = poset.size();
  std::vector<char> covered(n, 0);
  int best = -1;

  auto dominates = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] < b[j])
        return false;
    return true;
  };

  std::vector<std::size_t> members;
  auto interval_members = [&](std::size_t lo, std::size_t hi) {
    members.clear();
    const auto& lower = poset.point(lo);
    const auto& upper = poset.point(hi);
    for (std::size_t q = lo; q <= hi; ++q) {
      const auto& p = poset.point(q);
      if (dominates(p, lower) && dominates(upper, p))
        members.push_back(q);
    }
  };

  std::vector<std::size_t> stack_members;
  auto rec = [&](auto&& self, int current_min) -> void {
    std::size_t first = 0;
    while (first < n && covered[first])
      ++first;
    if (first == n) {
      best = std::max(best, current_min);
      return;
    }
    for (std::size_t q = first; q < n; ++q) {
      if (!dominates(poset.point(q), poset.point(first)))
        continue;
      interval_members(first, q);
      bool free = std::all_of(members.begin(), members.end(),
                              [&](std::size_t m) { return !covered[m]; });
      if (!free)
        continue;
      std::vector<std::size_t> mine = members;
      for (std::size_t m : mine)
        covered[m] = 1;
      self(self, std::min(current_min, poset.rho(q)));
      for (std::size_t m : mine)
        covered[m] = 0;
    }
  };
  rec(rec, std::numeric_limits<int>::max());
  return best;
}

/// Exhaustive maximum of min dim S/P over every prime filtration whose
/// offsets stay in the given box, with no pruning. Small inputs only.
inline int fdepth_exhaustive_oracle(const MonomialIdeal& ideal, const std::vector<int>& box) {
  const VariableSet& vs = ideal.ambient();
  int best = -1;

  auto rec = [&](auto&& self, const MonomialIdeal& current, int current_min) -> void {
    if (current.is_unit()) {
      best = std::max(best, current_min);
      return;
    }
    std::vector<int> a(box.size(), 0);
    for (;;) {
      if (!current.contains_exponents(a)) {
        Monomial offset(vs, a);
        auto prime = current.colon(offset).as_prime();
        if (prime)
          self(self, current.adjoin(offset),
               std::min(current_min, static_cast<int>(prime->quotient_dim())));
      }
      bool more = false;
      for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] < box[j]) {
          ++a[j];
          std::fill(a.begin() + static_cast<std::ptrdiff_t>(j) + 1, a.end(), 0);
          more = true;
          break;
        }
      }
      if (!more)
        break;
    }
  };
  rec(rec, ideal, std::numeric_limits<int>::max());
  return best;
}

/// All monomials of total degree <= bound, for membership sweeps.
inline std::vector<Monomial> monomials_up_to_degree(const VariableSet& vs, int bound) {
  std::vector<Monomial> out;
  std::vector<int> e(vs.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j == e.size()) {
      out.emplace_back(vs, e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[j] = k;
      self(self, j + 1, remaining - k);
    }
    e[j] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

}  // namespace testsupport
