#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "stanley/errors.hpp"
#include "stanley/sdepth.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("stanley-io-test-" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::filesystem::path file(const std::string& name, const std::string& content) const {
    std::filesystem::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p;
  }
};

}  // namespace

TEST_CASE("monomial strings") {
  VariableSet vs = vars({"x", "y"});
  CHECK(io::to_string(mono(vs, "x^2*y")) == "x^2*y");
  CHECK(io::to_string(mono(vs, "1")) == "1");
  CHECK(io::parse_monomial("x*x^2", vs) == mono(vs, "x^3"));
  CHECK(io::parse_monomial("y", vs) == Monomial::variable(vs, 1));
  CHECK_THROWS_AS(io::parse_monomial("q", vs), ParseError);
  CHECK_THROWS_AS(io::parse_monomial("x^0", vs), ParseError);
  CHECK_THROWS_AS(io::parse_monomial("x^-1", vs), ParseError);
  CHECK_THROWS_AS(io::parse_monomial("x**y", vs), ParseError);
  CHECK_THROWS_AS(io::parse_monomial("", vs), ParseError);
}

TEST_CASE("ideal and prime strings") {
  VariableSet vs = vars({"x", "y", "z"});
  CHECK(io::to_string(ideal_of(vs, {"x*y", "z"})) == "(z, x*y)");
  CHECK(io::to_string(MonomialIdeal::zero(vs)) == "(0)");
  CHECK(io::to_string(MonomialIdeal::unit(vs)) == "(1)");
  CHECK(io::to_string(prime_of(vs, {"x", "z"})) == "(x, z)");
  CHECK(io::to_string(prime_of(vs, {})) == "(0)");
}

TEST_CASE("ideal files") {
  std::istringstream in("# a comment\nvars x y\ngen x^2*y\ngen x^3\n");
  MonomialIdeal ideal = io::read_ideal(in);
  CHECK(ideal == ideal_of(vars({"x", "y"}), {"x^2*y", "x^3"}));

  std::ostringstream out;
  io::write_ideal(out, ideal);
  std::istringstream back(out.str());
  CHECK(io::read_ideal(back) == ideal);

  std::istringstream zero("vars x y\n");
  CHECK(io::read_ideal(zero).is_zero());

  std::istringstream unit("vars x\ngen 1\n");
  CHECK(io::read_ideal(unit).is_unit());
}

TEST_CASE("ideal file errors") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_ideal(in), ParseError);
  };
  fails("");
  fails("gen x\n");
  fails("vars\n");
  fails("vars x x\n");
  fails("vars x\nfoo x\n");
  fails("vars x\ngen\n");
  fails("vars x\ngen x y\n");
  fails("vars x\ngen y\n");
}

TEST_CASE("decomposition files") {
  std::istringstream in(
      "vars x y\n"
      "gen x*y\n"
      "space x | x\n"
      "space 1 | y\n");
  StanleyDecomposition d = io::read_decomposition(in);
  CHECK(d.ideal() == ideal_of(vars({"x", "y"}), {"x*y"}));
  CHECK(d.verify().ok());

  std::ostringstream out;
  io::write_decomposition(out, d);
  std::istringstream back(out.str());
  CHECK(io::read_decomposition(back) == d);

  // Empty free list keeps its trailing pipe.
  VariableSet vs = vars({"x"});
  StanleyDecomposition point(ideal_of(vs, {"x"}), {space_of(vs, "1", {})});
  std::ostringstream pout;
  io::write_decomposition(pout, point);
  CHECK(pout.str().find("space 1 |\n") != std::string::npos);
  std::istringstream pback(pout.str());
  CHECK(io::read_decomposition(pback) == point);
}

TEST_CASE("decomposition with a referenced ideal") {
  TempDir dir;
  dir.file("ideal.txt", "vars x y\ngen x*y\n");
  auto path = dir.file("decomp.txt",
                       "vars x y\n"
                       "ideal ideal.txt\n"
                       "space x | x\n"
                       "space 1 | y\n");
  StanleyDecomposition d = io::read_decomposition_file(path);
  CHECK(d.ideal() == ideal_of(vars({"x", "y"}), {"x*y"}));
  CHECK(d.verify().ok());

  auto mixed = dir.file("mixed.txt", "vars x y\ngen x\nideal ideal.txt\n");
  CHECK_THROWS_AS(io::read_decomposition_file(mixed), ParseError);
  auto other_vars = dir.file("other.txt", "vars a b\ngen a\n");
  auto mismatched = dir.file("mismatched.txt", "vars x y\nideal other.txt\nspace 1 | y\n");
  CHECK_THROWS_AS(io::read_decomposition_file(mismatched), ParseError);
  auto missing = dir.file("missing.txt", "vars x y\nideal nowhere.txt\n");
  CHECK_THROWS_AS(io::read_decomposition_file(missing), ParseError);
}

TEST_CASE("decomposition file errors") {
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_decomposition(in), ParseError);
  };
  fails("vars x\nspace x\n");        // missing pipe
  fails("vars x\nspace x x\n");      // pipe expected
  fails("vars x\nspace x | q\n");    // unknown variable
  fails("vars x\nstep x | x\n");     // wrong directive for this format
}

TEST_CASE("filtration files") {
  std::istringstream in(
      "vars x y\n"
      "gen x*y\n"
      "step y | x\n"
      "step 1 | y\n");
  PrimeFiltration f = io::read_filtration(in);
  CHECK(f.verify().ok());
  CHECK(f.fdepth() == 1);

  std::ostringstream out;
  io::write_filtration(out, f);
  std::istringstream back(out.str());
  CHECK(io::read_filtration(back) == f);
}

TEST_CASE("complex files") {
  std::istringstream in("vertices 3\nfacet 1 2\nfacet 2 3\n");
  SimplicialComplex c = io::read_complex(in);
  CHECK(c.vertices().names() == std::vector<std::string>{"x1", "x2", "x3"});
  REQUIRE(c.facets().size() == 2);

  std::ostringstream out;
  io::write_complex(out, c);
  std::istringstream back(out.str());
  CHECK(io::read_complex(back) == c);

  std::istringstream void_in("vertices 2\n");
  CHECK(io::read_complex(void_in).is_void());

  std::istringstream empty_in("vertices 2\nfacet\n");
  SimplicialComplex empty_c = io::read_complex(empty_in);
  CHECK(empty_c == SimplicialComplex::empty_complex(vars({"x1", "x2"})));

  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_complex(in), ParseError);
  };
  fails("vertices\n");
  fails("vertices 0\n");
  fails("vertices 2\nfacet 3\n");
  fails("vertices 2\ngen x\n");
}

TEST_CASE("round trips on random values") {
  Rng rng(2024050);
  for (int trial = 0; trial < 30; ++trial) {
    VariableSet vs = random_vars(rng, 1, 4);
    MonomialIdeal ideal = random_proper_ideal(rng, vs, 3, 5);
    std::ostringstream out;
    io::write_ideal(out, ideal);
    std::istringstream back(out.str());
    CHECK(io::read_ideal(back) == ideal);
  }
  for (int trial = 0; trial < 20; ++trial) {
    VariableSet vs = random_vars(rng, 1, 3);
    MonomialIdeal ideal = random_proper_ideal(rng, vs, 2, 4);
    StanleyDecomposition d = partition_to_decomposition(ideal, sdepth(ideal).partition);
    std::ostringstream out;
    io::write_decomposition(out, d);
    std::istringstream back(out.str());
    CHECK(io::read_decomposition(back) == d);
  }
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialComplex complex = random_complex(rng, 1, 6);
    std::ostringstream out;
    io::write_complex(out, complex);
    std::istringstream back(out.str());
    CHECK(io::read_complex(back) == complex);
  }
}

TEST_CASE("file kind detection") {
  TempDir dir;
  CHECK(io::detect_kind(dir.file("i.txt", "vars x\ngen x\n")) == io::FileKind::ideal);
  CHECK(io::detect_kind(dir.file("d.txt", "vars x\nspace 1 |\n")) ==
        io::FileKind::decomposition);
  CHECK(io::detect_kind(dir.file("f.txt", "vars x\nstep 1 | x\n")) == io::FileKind::filtration);
  CHECK(io::detect_kind(dir.file("c.txt", "vertices 2\nfacet 1\n")) == io::FileKind::complex);
}

TEST_CASE("json mirrors") {
  VariableSet vs = vars({"x", "y"});
  MonomialIdeal ideal = ideal_of(vs, {"x*y"});

  nlohmann::json ij = io::json_of(ideal);
  CHECK(ij["vars"] == nlohmann::json({"x", "y"}));
  CHECK(ij["gens"] == nlohmann::json({"x*y"}));

  StanleyDecomposition d(ideal, {space_of(vs, "x", {"x"}), space_of(vs, "1", {"y"})});
  nlohmann::json dj = io::json_of(d);
  CHECK(dj["spaces"].size() == 2);
  CHECK(dj["spaces"][0]["offset"] == "x");
  CHECK(dj["spaces"][0]["free"] == nlohmann::json({"x"}));

  PrimeFiltration f(ideal, {FiltrationStep{mono(vs, "y"), prime_of(vs, {"x"})},
                            FiltrationStep{mono(vs, "1"), prime_of(vs, {"y"})}});
  nlohmann::json fj = io::json_of(f);
  CHECK(fj["steps"][0]["prime"] == nlohmann::json({"x"}));

  SdepthResult found = sdepth(ideal);
  CharacteristicPoset poset = CharacteristicPoset::build(ideal);
  nlohmann::json pj = io::json_of(found.partition, poset.g(), found.value);
  CHECK(pj["value"] == 1);
  CHECK(pj["g"] == nlohmann::json({1, 1}));
  CHECK(pj["intervals"].size() == found.partition.intervals.size());

  SimplicialComplex path(vars({"x1", "x2", "x3"}), {{0, 1}, {1, 2}});
  nlohmann::json cj = io::json_of(path);
  CHECK(cj["vertices"] == 3);
  CHECK(cj["facets"] == nlohmann::json({{1, 2}, {2, 3}}));
}
