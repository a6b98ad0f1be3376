#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/filtration.hpp"
#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"
#include "stanley/simplicial.hpp"

namespace stanley::io {

// ------------------------------------------------------------- strings

/// "x^2*y", "1". Factors joined by '*', exponent suffix only when > 1.
std::string to_string(const Monomial& m);
/// "(x*y, z)"; "(0)" for the zero ideal, "(1)" for the unit ideal.
std::string to_string(const MonomialIdeal& ideal);
/// "(x, z)"; "(0)" for the prime on no variables.
std::string to_string(const MonomialPrime& prime);

/// Inverse of to_string(Monomial): '1' or '*'-joined factors name or
/// name^k with k >= 1. Repeated names multiply.
Monomial parse_monomial(std::string_view text, const VariableSet& ambient);

// ------------------------------------------------------------- text files
//
// Shared conventions: '#' begins a comment line, the first significant line
// declares the variables, directives follow one per line.
//
//   ideal:          vars x y        decomposition:  vars x y
//                   gen x^2*y                       gen x*y
//                                                   space 1 | y
//                                                   space x | x
//
//   filtration:     vars x y        complex:        vertices 3
//                   gen x*y                         facet 1 2
//                   step y | x                      facet 2 3
//                   step 1 | y
//
// Decompositions and filtrations may replace their inline gen lines with a
// single `ideal <path>` reference, resolved relative to the referring file.

MonomialIdeal read_ideal(std::istream& in);
MonomialIdeal read_ideal_file(const std::filesystem::path& path);
void write_ideal(std::ostream& out, const MonomialIdeal& ideal);

StanleyDecomposition read_decomposition(std::istream& in,
                                        const std::filesystem::path& base_dir = ".");
StanleyDecomposition read_decomposition_file(const std::filesystem::path& path);
void write_decomposition(std::ostream& out, const StanleyDecomposition& d);

PrimeFiltration read_filtration(std::istream& in, const std::filesystem::path& base_dir = ".");
PrimeFiltration read_filtration_file(const std::filesystem::path& path);
void write_filtration(std::ostream& out, const PrimeFiltration& f);

SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::filesystem::path& path);
void write_complex(std::ostream& out, const SimplicialComplex& complex);

enum class FileKind { ideal, decomposition, filtration, complex };

/// Classify a file by the directives it uses.
FileKind detect_kind(const std::filesystem::path& path);

// ------------------------------------------------------------- json

nlohmann::json json_of(const MonomialIdeal& ideal);
nlohmann::json json_of(const StanleyDecomposition& d);
nlohmann::json json_of(const PrimeFiltration& f);
nlohmann::json json_of(const SimplicialComplex& complex);
nlohmann::json json_of(const IntervalPartition& partition, std::span<const int> g, int value);

}  // namespace stanley::io
