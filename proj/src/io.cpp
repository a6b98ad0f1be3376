#include "stanley/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "stanley/errors.hpp"

namespace stanley::io {

namespace {

std::string exponent_factor(const std::string& name, int e) {
  if (e == 1)
    return name;
  return name + "^" + std::to_string(e);
}

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;

  const std::string& directive() const { return tokens.front(); }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("line " + std::to_string(number) + ": " + why);
  }
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    std::string t;
    while (words >> t)
      tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#')
      continue;
    lines.push_back(Line{number, std::move(tokens)});
  }
  return lines;
}

VariableSet parse_vars_header(const std::vector<Line>& lines) {
  if (lines.empty())
    throw ParseError("empty input: expected a 'vars' line");
  const Line& head = lines.front();
  if (head.directive() != "vars")
    head.fail("expected 'vars <name>...' as the first significant line");
  if (head.tokens.size() < 2)
    head.fail("'vars' needs at least one variable name");
  std::vector<std::string> names(head.tokens.begin() + 1, head.tokens.end());
  try {
    return VariableSet(std::move(names));
  } catch (const Error& e) {
    head.fail(e.what());
  }
}

int parse_exponent(std::string_view text, const Line* where) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    std::string why = "exponent '" + std::string(text) + "' is not a positive integer";
    if (where)
      where->fail(why);
    throw ParseError(why);
  }
  long long value = 0;
  for (char c : text) {
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<int>::max())
      throw OverflowError("exponent '" + std::string(text) + "' out of range");
  }
  if (value < 1) {
    std::string why = "exponent must be at least 1";
    if (where)
      where->fail(why);
    throw ParseError(why);
  }
  return static_cast<int>(value);
}

Monomial parse_monomial_impl(std::string_view text, const VariableSet& ambient,
                             const Line* where) {
  auto fail = [&](const std::string& why) -> void {
    if (where)
      where->fail(why);
    throw ParseError(why);
  };
  if (text.empty())
    fail("empty monomial");
  if (text == "1")
    return Monomial::one(ambient);

  std::vector<int> exps(ambient.size(), 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view factor = text.substr(pos, star == std::string_view::npos ? std::string_view::npos
                                                                              : star - pos);
    if (factor.empty())
      fail("empty factor in monomial '" + std::string(text) + "'");
    std::size_t caret = factor.find('^');
    std::string_view name = factor.substr(0, caret);
    int e = 1;
    if (caret != std::string_view::npos)
      e = parse_exponent(factor.substr(caret + 1), where);
    auto idx = ambient.index_of(name);
    if (!idx)
      fail("unknown variable '" + std::string(name) + "'");
    if (exps[*idx] > std::numeric_limits<int>::max() - e)
      throw OverflowError("exponent overflow in monomial '" + std::string(text) + "'");
    exps[*idx] += e;
    if (star == std::string_view::npos)
      break;
    pos = star + 1;
  }
  return Monomial(ambient, std::move(exps));
}

std::vector<std::size_t> parse_variable_list(const Line& line, std::size_t from,
                                             const VariableSet& ambient) {
  std::vector<std::size_t> vars;
  for (std::size_t k = from; k < line.tokens.size(); ++k) {
    auto idx = ambient.index_of(line.tokens[k]);
    if (!idx)
      line.fail("unknown variable '" + line.tokens[k] + "'");
    vars.push_back(*idx);
  }
  return vars;
}

// Parses `<directive> <monomial> | <var>...` lines (spaces and steps).
std::pair<Monomial, std::vector<std::size_t>> parse_pipe_line(const Line& line,
                                                              const VariableSet& ambient) {
  if (line.tokens.size() < 3 || line.tokens[2] != "|")
    line.fail("expected '" + line.directive() + " <monomial> | <var>...'");
  Monomial m = parse_monomial_impl(line.tokens[1], ambient, &line);
  return {std::move(m), parse_variable_list(line, 3, ambient)};
}

// Shared by decompositions and filtrations: the underlying ideal comes from
// inline gen lines or from one referenced ideal file.
MonomialIdeal parse_underlying_ideal(const std::vector<Line>& lines, const VariableSet& ambient,
                                     const std::filesystem::path& base_dir,
                                     std::string_view allowed_directive) {
  std::vector<Monomial> gens;
  bool saw_gen = false;
  bool saw_ref = false;
  MonomialIdeal ideal = MonomialIdeal::zero(ambient);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.directive() == "gen") {
      if (saw_ref)
        line.fail("cannot mix inline 'gen' lines with an 'ideal' reference");
      if (line.tokens.size() != 2)
        line.fail("expected 'gen <monomial>'");
      gens.push_back(parse_monomial_impl(line.tokens[1], ambient, &line));
      saw_gen = true;
    } else if (line.directive() == "ideal") {
      if (saw_gen)
        line.fail("cannot mix inline 'gen' lines with an 'ideal' reference");
      if (saw_ref)
        line.fail("only one 'ideal' reference is allowed");
      if (line.tokens.size() != 2)
        line.fail("expected 'ideal <path>'");
      std::filesystem::path ref = base_dir / line.tokens[1];
      MonomialIdeal loaded = read_ideal_file(ref);
      if (loaded.ambient() != ambient)
        line.fail("referenced ideal uses a different variable set");
      ideal = std::move(loaded);
      saw_ref = true;
    } else if (line.directive() != allowed_directive) {
      line.fail("unknown directive '" + line.directive() + "'");
    }
  }
  if (saw_gen)
    ideal = MonomialIdeal::make(ambient, std::move(gens));
  return ideal;
}

}  // namespace

// ---------------------------------------------------------------- strings

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.exponent(j) == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += exponent_factor(m.ambient().name(j), m.exponent(j));
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first)
      out += ", ";
    out += to_string(g);
    first = false;
  }
  return out + ")";
}

std::string to_string(const MonomialPrime& prime) {
  if (prime.variables().empty())
    return "(0)";
  std::string out = "(";
  bool first = true;
  for (std::size_t v : prime.variables()) {
    if (!first)
      out += ", ";
    out += prime.ambient().name(v);
    first = false;
  }
  return out + ")";
}

Monomial parse_monomial(std::string_view text, const VariableSet& ambient) {
  return parse_monomial_impl(text, ambient, nullptr);
}

// ---------------------------------------------------------------- ideals

MonomialIdeal read_ideal(std::istream& in) {
  std::vector<Line> lines = significant_lines(in);
  VariableSet vars = parse_vars_header(lines);
  std::vector<Monomial> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.directive() != "gen")
      line.fail("unknown directive '" + line.directive() + "' in an ideal file");
    if (line.tokens.size() != 2)
      line.fail("expected 'gen <monomial>'");
    gens.push_back(parse_monomial_impl(line.tokens[1], vars, &line));
  }
  return MonomialIdeal::make(vars, std::move(gens));
}

namespace {

std::ifstream open_or_fail(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

MonomialIdeal read_ideal_file(const std::filesystem::path& path) {
  auto in = open_or_fail(path);
  return read_ideal(in);
}

void write_ideal(std::ostream& out, const MonomialIdeal& ideal) {
  out << "vars";
  for (const auto& n : ideal.ambient().names())
    out << ' ' << n;
  out << '\n';
  for (const auto& g : ideal.generators())
    out << "gen " << to_string(g) << '\n';
}

// ---------------------------------------------------------- decompositions

StanleyDecomposition read_decomposition(std::istream& in,
                                        const std::filesystem::path& base_dir) {
  std::vector<Line> lines = significant_lines(in);
  VariableSet vars = parse_vars_header(lines);
  MonomialIdeal ideal = parse_underlying_ideal(lines, vars, base_dir, "space");
  std::vector<StanleySpace> spaces;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.directive() != "space")
      continue;
    auto [offset, free] = parse_pipe_line(line, vars);
    spaces.emplace_back(std::move(offset), std::move(free));
  }
  return StanleyDecomposition(std::move(ideal), std::move(spaces));
}

StanleyDecomposition read_decomposition_file(const std::filesystem::path& path) {
  auto in = open_or_fail(path);
  return read_decomposition(in, path.parent_path().empty() ? "." : path.parent_path());
}

void write_decomposition(std::ostream& out, const StanleyDecomposition& d) {
  write_ideal(out, d.ideal());
  for (const auto& s : d.spaces()) {
    out << "space " << to_string(s.offset()) << " |";
    for (std::size_t v : s.free_vars())
      out << ' ' << d.ambient().name(v);
    out << '\n';
  }
}

// ------------------------------------------------------------- filtrations

PrimeFiltration read_filtration(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<Line> lines = significant_lines(in);
  VariableSet vars = parse_vars_header(lines);
  MonomialIdeal ideal = parse_underlying_ideal(lines, vars, base_dir, "step");
  std::vector<FiltrationStep> steps;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.directive() != "step")
      continue;
    auto [offset, prime_vars] = parse_pipe_line(line, vars);
    steps.push_back(FiltrationStep{std::move(offset), MonomialPrime(vars, std::move(prime_vars))});
  }
  return PrimeFiltration(std::move(ideal), std::move(steps));
}

PrimeFiltration read_filtration_file(const std::filesystem::path& path) {
  auto in = open_or_fail(path);
  return read_filtration(in, path.parent_path().empty() ? "." : path.parent_path());
}

void write_filtration(std::ostream& out, const PrimeFiltration& f) {
  write_ideal(out, f.ideal());
  for (const auto& s : f.steps()) {
    out << "step " << to_string(s.offset) << " |";
    for (std::size_t v : s.prime.variables())
      out << ' ' << f.ambient().name(v);
    out << '\n';
  }
}

// ---------------------------------------------------------------- complexes

SimplicialComplex read_complex(std::istream& in) {
  std::vector<Line> lines = significant_lines(in);
  if (lines.empty())
    throw ParseError("empty input: expected a 'vertices' line");
  const Line& head = lines.front();
  if (head.directive() != "vertices" || head.tokens.size() != 2)
    head.fail("expected 'vertices <count>' as the first significant line");
  int n = parse_exponent(head.tokens[1], &head);

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    names.push_back("x" + std::to_string(j));
  VariableSet vertices(std::move(names));

  std::vector<std::vector<std::size_t>> facets;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.directive() != "facet")
      line.fail("unknown directive '" + line.directive() + "' in a complex file");
    std::vector<std::size_t> facet;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      int v = parse_exponent(line.tokens[t], &line);
      if (v > n)
        line.fail("vertex " + std::to_string(v) + " out of range");
      facet.push_back(static_cast<std::size_t>(v - 1));
    }
    facets.push_back(std::move(facet));
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

SimplicialComplex read_complex_file(const std::filesystem::path& path) {
  auto in = open_or_fail(path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
  out << "vertices " << complex.vertices().size() << '\n';
  for (const auto& f : complex.facets()) {
    out << "facet";
    for (std::size_t v : f)
      out << ' ' << (v + 1);
    out << '\n';
  }
}

// ---------------------------------------------------------------- detection

FileKind detect_kind(const std::filesystem::path& path) {
  auto in = open_or_fail(path);
  std::vector<Line> lines = significant_lines(in);
  for (const auto& line : lines) {
    if (line.directive() == "space")
      return FileKind::decomposition;
    if (line.directive() == "step")
      return FileKind::filtration;
    if (line.directive() == "vertices" || line.directive() == "facet")
      return FileKind::complex;
  }
  return FileKind::ideal;
}

// ---------------------------------------------------------------- json

nlohmann::json json_of(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(to_string(g));
  return {{"vars", ideal.ambient().names()}, {"gens", std::move(gens)}};
}

nlohmann::json json_of(const StanleyDecomposition& d) {
  nlohmann::json spaces = nlohmann::json::array();
  for (const auto& s : d.spaces()) {
    nlohmann::json free = nlohmann::json::array();
    for (std::size_t v : s.free_vars())
      free.push_back(d.ambient().name(v));
    spaces.push_back({{"offset", to_string(s.offset())}, {"free", std::move(free)}});
  }
  nlohmann::json out = json_of(d.ideal());
  out["spaces"] = std::move(spaces);
  return out;
}

nlohmann::json json_of(const PrimeFiltration& f) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : f.steps()) {
    nlohmann::json prime = nlohmann::json::array();
    for (std::size_t v : s.prime.variables())
      prime.push_back(f.ambient().name(v));
    steps.push_back({{"offset", to_string(s.offset)}, {"prime", std::move(prime)}});
  }
  nlohmann::json out = json_of(f.ideal());
  out["steps"] = std::move(steps);
  return out;
}

nlohmann::json json_of(const SimplicialComplex& complex) {
  nlohmann::json facets = nlohmann::json::array();
  for (const auto& f : complex.facets()) {
    nlohmann::json facet = nlohmann::json::array();
    for (std::size_t v : f)
      facet.push_back(v + 1);
    facets.push_back(std::move(facet));
  }
  return {{"vertices", complex.vertices().size()}, {"facets", std::move(facets)}};
}

nlohmann::json json_of(const IntervalPartition& partition, std::span<const int> g, int value) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& iv : partition.intervals)
    intervals.push_back({{"lower", iv.lower}, {"upper", iv.upper}});
  return {{"g", std::vector<int>(g.begin(), g.end())},
          {"value", value},
          {"intervals", std::move(intervals)}};
}

}  // namespace stanley::io
