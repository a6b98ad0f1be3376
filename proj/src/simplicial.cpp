#include "stanley/simplicial.hpp"

#include <algorithm>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

constexpr std::size_t kMaxSubsetVertices = 25;

void require_subset_scale(const VariableSet& vertices, const char* op) {
  if (vertices.size() > kMaxSubsetVertices)
    throw ResourceLimitError(std::string(op) + ": vertex set too large for subset enumeration");
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_subset(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<std::size_t> subset_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < n; ++j)
    if (mask & (1u << j))
      s.push_back(j);
  return s;
}

bool face_order(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(VariableSet vertices,
                                     std::vector<std::vector<std::size_t>> facets)
    : vertices_(std::move(vertices)) {
  for (auto& f : facets) {
    f = sorted_unique(std::move(f));
    if (!f.empty() && f.back() >= vertices_.size())
      throw DomainError("facet vertex index out of range");
  }
  std::sort(facets.begin(), facets.end(), face_order);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets) {
    bool dominated = std::any_of(facets.begin(), facets.end(), [&](const auto& g) {
      return g != f && contains_subset(g, f);
    });
    if (!dominated)
      facets_.push_back(f);
  }
}

SimplicialComplex SimplicialComplex::full_simplex(VariableSet vertices) {
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t j = 0; j < all.size(); ++j)
    all[j] = j;
  return SimplicialComplex(std::move(vertices), {all});
}

SimplicialComplex SimplicialComplex::void_complex(VariableSet vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::empty_complex(VariableSet vertices) {
  return SimplicialComplex(std::move(vertices), {{}});
}

bool SimplicialComplex::is_face(std::span<const std::size_t> face) const {
  std::vector<std::size_t> f = sorted_unique({face.begin(), face.end()});
  if (!f.empty() && f.back() >= vertices_.size())
    return false;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const auto& g) { return contains_subset(g, f); });
}

std::vector<std::vector<std::size_t>> SimplicialComplex::faces() const {
  require_subset_scale(vertices_, "face enumeration");
  std::vector<std::vector<std::size_t>> out;
  const std::uint32_t limit = 1u << vertices_.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    auto s = subset_from_mask(vertices_.size(), mask);
    if (is_face(s))
      out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

SimplicialComplex SimplicialComplex::link(std::span<const std::size_t> face) const {
  std::vector<std::size_t> f = sorted_unique({face.begin(), face.end()});
  if (!is_face(f))
    throw DomainError("link requires a face of the complex");

  // Facets of the link are exactly facet \ face over the facets containing
  // the face: distinct facets give incomparable differences.
  std::vector<std::vector<std::size_t>> link_facets;
  for (const auto& g : facets_) {
    if (!contains_subset(g, f))
      continue;
    std::vector<std::size_t> diff;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(diff));
    link_facets.push_back(std::move(diff));
  }

  // Renumber into the vertex set with the face's vertices removed.
  VariableSet rest = vertices_;
  for (std::size_t k = f.size(); k-- > 0;)
    rest = rest.project(f[k]);
  for (auto& g : link_facets)
    for (auto& v : g)
      v -= static_cast<std::size_t>(
          std::count_if(f.begin(), f.end(), [&](std::size_t w) { return w < v; }));
  return SimplicialComplex(std::move(rest), std::move(link_facets));
}

MonomialIdeal SimplicialComplex::stanley_reisner_ideal() const {
  if (is_void())
    throw DomainError("the void complex has no Stanley-Reisner ring");
  require_subset_scale(vertices_, "minimal non-face enumeration");
  const std::size_t n = vertices_.size();
  std::vector<Monomial> gens;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    auto s = subset_from_mask(n, mask);
    if (is_face(s))
      continue;
    // Minimal non-face: every one-smaller subset is a face.
    bool minimal = true;
    for (std::size_t k = 0; k < s.size() && minimal; ++k) {
      std::vector<std::size_t> sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!is_face(sub))
        minimal = false;
    }
    if (!minimal)
      continue;
    std::vector<int> e(n, 0);
    for (std::size_t v : s)
      e[v] = 1;
    gens.emplace_back(vertices_, std::move(e));
  }
  return MonomialIdeal::make(vertices_, std::move(gens));
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    throw DomainError("the unit ideal corresponds to no complex");
  for (const auto& g : ideal.generators())
    for (int e : g.exponents())
      if (e > 1)
        throw DomainError("Stanley-Reisner correspondence requires squarefree generators");
  require_subset_scale(ideal.ambient(), "face reconstruction");

  const std::size_t n = ideal.ambient().size();
  std::vector<std::vector<std::size_t>> faces;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    auto s = subset_from_mask(n, mask);
    std::vector<int> e(n, 0);
    for (std::size_t v : s)
      e[v] = 1;
    if (!ideal.contains_exponents(e))
      faces.push_back(std::move(s));
  }
  // The constructor keeps only the maximal ones.
  return SimplicialComplex(ideal.ambient(), std::move(faces));
}

bool check_link_lemma(const SimplicialComplex& complex, std::size_t v) {
  std::size_t face[] = {v};
  if (!complex.is_face(face))
    throw DomainError("link lemma check requires {v} to be a face");
  MonomialIdeal localized = complex.stanley_reisner_ideal().localize(v);
  MonomialIdeal of_link = complex.link(face).stanley_reisner_ideal();
  return localized == of_link;
}

}  // namespace stanley
