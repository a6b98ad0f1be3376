#pragma once

#include <span>
#include <vector>

#include "stanley/ideal.hpp"

namespace stanley {

/// A simplicial complex given by its facets (inclusion-maximal faces) over a
/// vertex set that doubles as the variable set of its Stanley-Reisner ring.
///
/// The void complex (no facets at all) and the empty complex (single facet
/// {}) are distinct legal values; only the void complex has no faces.
class SimplicialComplex {
public:
  /// Facets are normalized: sorted, deduplicated, reduced to the maximal
  /// antichain. Passing any family of faces is fine.
  SimplicialComplex(VariableSet vertices, std::vector<std::vector<std::size_t>> facets);

  static SimplicialComplex full_simplex(VariableSet vertices);
  static SimplicialComplex void_complex(VariableSet vertices);
  static SimplicialComplex empty_complex(VariableSet vertices);

  const VariableSet& vertices() const { return vertices_; }
  std::span<const std::vector<std::size_t>> facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  bool is_face(std::span<const std::size_t> face) const;
  /// All faces, smallest first. Exponential in the vertex count; guarded.
  std::vector<std::vector<std::size_t>> faces() const;

  /// Link of a face: the faces disjoint from it whose union with it is a
  /// face, over the vertex set with the face's vertices removed.
  SimplicialComplex link(std::span<const std::size_t> face) const;

  /// The squarefree ideal generated by the minimal non-faces. Undefined
  /// (domain error) for the void complex.
  MonomialIdeal stanley_reisner_ideal() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
    return !(a == b);
  }

private:
  VariableSet vertices_;
  std::vector<std::vector<std::size_t>> facets_;
};

/// The complex whose faces are the squarefree monomials outside the ideal.
/// Inverse of stanley_reisner_ideal. Requires a proper ideal with squarefree
/// generators.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal);

/// Localizing the Stanley-Reisner ideal at a vertex equals taking the
/// Stanley-Reisner ideal of the link at that vertex; this checks the two
/// sides for exact equality. Requires {v} to be a face.
bool check_link_lemma(const SimplicialComplex& complex, std::size_t v);

}  // namespace stanley
