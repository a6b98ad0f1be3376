// Command-line front end: parse ideals, decompositions, filtrations, and
// complexes, run the exact engines, and re-verify every certificate before
// it is emitted.
//
// Exit codes: 0 success/PASS, 1 input error, 2 verification or inequality
// failure, 3 resource limit.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stanley/errors.hpp"
#include "stanley/filtration.hpp"
#include "stanley/io.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/simplicial.hpp"

namespace {

using namespace stanley;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

struct Options {
  bool json_output = false;
  std::optional<std::uint64_t> seed;
  std::size_t max_poset = SearchLimits{}.max_poset_points;
  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  int fdepth_box_margin = 0;

  std::string file;
  std::string variable;
  bool certificate = false;
  bool sdepth_both = false;
  bool check = false;
  std::vector<int> vertices;

  SearchLimits limits() const { return SearchLimits{max_poset, max_nodes}; }
};

std::string bracketed(std::span<const int> v) {
  std::string out = "[";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j)
      out += ", ";
    out += std::to_string(v[j]);
  }
  return out + "]";
}

void print_seed(const Options& opt) {
  if (opt.seed)
    std::cout << "# seed = " << *opt.seed << "\n";
}

void attach_seed(const Options& opt, json& out) {
  if (opt.seed)
    out["seed"] = *opt.seed;
}

MonomialIdeal read_proper_nonzero_ideal(const std::string& path) {
  MonomialIdeal ideal = io::read_ideal_file(path);
  if (ideal.is_unit())
    throw DomainError("the unit ideal has no Stanley decomposition; need a proper ideal");
  if (ideal.is_zero())
    throw DomainError("the zero ideal gives a free quotient; need a nonzero ideal");
  return ideal;
}

std::size_t variable_index(const VariableSet& vs, const std::string& name) {
  auto idx = vs.index_of(name);
  if (!idx)
    throw DomainError("unknown variable '" + name + "'");
  return *idx;
}

// ------------------------------------------------------------------ sdepth

int run_sdepth(const Options& opt) {
  MonomialIdeal ideal = read_proper_nonzero_ideal(opt.file);
  SdepthResult result = sdepth(ideal, opt.limits());
  CharacteristicPoset poset = CharacteristicPoset::build(ideal, opt.max_poset);

  if (opt.json_output) {
    json out{{"ideal", io::json_of(ideal)}, {"sdepth", result.value}};
    if (opt.certificate) {
      out["certificate"] = io::json_of(result.partition, poset.g(), result.value);
      out["decomposition"] =
          io::json_of(partition_to_decomposition(ideal, result.partition, opt.limits()));
    }
    attach_seed(opt, out);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  print_seed(opt);
  if (!opt.certificate) {
    std::cout << "sdepth = " << result.value << "\n";
    return kExitOk;
  }
  // Certificate output doubles as a decomposition file: results go into
  // comment lines, the decomposition itself into directives.
  StanleyDecomposition d = partition_to_decomposition(ideal, result.partition, opt.limits());
  std::cout << "# sdepth = " << result.value << "\n";
  std::cout << "# g = " << bracketed(poset.g()) << "\n";
  for (const auto& iv : result.partition.intervals)
    std::cout << "# interval " << bracketed(iv.lower) << " .. " << bracketed(iv.upper) << "\n";
  io::write_decomposition(std::cout, d);
  return kExitOk;
}

// ------------------------------------------------------------------ fdepth

int run_fdepth(const Options& opt) {
  MonomialIdeal ideal = read_proper_nonzero_ideal(opt.file);
  FdepthResult result = fdepth(ideal, opt.limits(), opt.fdepth_box_margin);

  if (opt.json_output) {
    json out{{"ideal", io::json_of(ideal)},
             {"fdepth", result.value},
             {"offset_box", result.offset_box},
             {"box_margin", opt.fdepth_box_margin}};
    if (opt.certificate)
      out["filtration"] = io::json_of(result.filtration);
    attach_seed(opt, out);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  print_seed(opt);
  if (!opt.certificate) {
    std::cout << "fdepth = " << result.value << "\n";
    std::cout << "offset box = " << bracketed(result.offset_box) << " (margin "
              << opt.fdepth_box_margin << ")\n";
    return kExitOk;
  }
  std::cout << "# fdepth = " << result.value << "\n";
  std::cout << "# offset box = " << bracketed(result.offset_box) << " (margin "
            << opt.fdepth_box_margin << ")\n";
  io::write_filtration(std::cout, result.filtration);
  return kExitOk;
}

// ---------------------------------------------------------------- localize

int run_localize(const Options& opt) {
  MonomialIdeal ideal = read_proper_nonzero_ideal(opt.file);
  std::size_t j = variable_index(ideal.ambient(), opt.variable);
  MonomialIdeal image = ideal.localize(j);

  int before = 0;
  std::optional<int> after;
  bool pass = true;
  std::string note;
  if (opt.sdepth_both) {
    before = sdepth(ideal, opt.limits()).value;
    if (image.is_unit()) {
      note = "image is the unit ideal (zero quotient); inequality trivial";
    } else {
      after = sdepth(image, opt.limits()).value;
      pass = *after >= before - 1;
      if (*after > before)
        note = "strict increase";
      else if (*after == before)
        note = "unchanged";
      else
        note = "drops by one";
    }
  }

  if (opt.json_output) {
    json out{{"ideal", io::json_of(ideal)},
             {"var", opt.variable},
             {"image", io::json_of(image)}};
    if (opt.sdepth_both) {
      out["sdepth_before"] = before;
      if (after)
        out["sdepth_after"] = *after;
      out["pass"] = pass;
      out["note"] = note;
    }
    attach_seed(opt, out);
    std::cout << out.dump(2) << "\n";
    return pass ? kExitOk : kExitVerification;
  }

  print_seed(opt);
  std::cout << "phi(" << io::to_string(ideal) << ") = " << io::to_string(image) << "  over";
  if (image.ambient().empty())
    std::cout << " no variables";
  for (const auto& n : image.ambient().names())
    std::cout << ' ' << n;
  std::cout << "\n";
  if (opt.sdepth_both) {
    std::cout << "sdepth before = " << before << "\n";
    if (after)
      std::cout << "sdepth after  = " << *after << "\n";
    std::cout << "inequality sdepth' >= sdepth - 1: " << (pass ? "PASS" : "FAIL");
    if (!note.empty())
      std::cout << " (" << note << ")";
    std::cout << "\n";
  }
  return pass ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------ verify

int run_verify(const Options& opt) {
  io::FileKind kind = io::detect_kind(opt.file);
  if (kind == io::FileKind::decomposition) {
    StanleyDecomposition d = io::read_decomposition_file(opt.file);
    VerifyResult r = d.verify();
    if (opt.json_output) {
      json out{{"kind", "decomposition"}, {"verdict", r.describe()}};
      if (r.witness)
        out["witness"] = io::to_string(*r.witness);
      std::cout << out.dump(2) << "\n";
    } else if (r.ok()) {
      std::cout << "Valid\n";
    } else {
      std::cout << r.describe() << ": " << io::to_string(*r.witness) << "\n";
    }
    return r.ok() ? kExitOk : kExitVerification;
  }
  if (kind == io::FileKind::filtration) {
    PrimeFiltration f = io::read_filtration_file(opt.file);
    FiltrationVerifyResult r = f.verify();
    if (opt.json_output) {
      json out{{"kind", "filtration"}, {"verdict", r.ok() ? "Valid" : r.describe()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << r.describe() << "\n";
    }
    return r.ok() ? kExitOk : kExitVerification;
  }
  throw ParseError("'" + opt.file + "' contains neither spaces nor steps; nothing to verify");
}

// --------------------------------------------------------------- transform

int run_transform(const Options& opt) {
  io::FileKind kind = io::detect_kind(opt.file);
  if (kind == io::FileKind::decomposition) {
    StanleyDecomposition d = io::read_decomposition_file(opt.file);
    std::size_t j = variable_index(d.ambient(), opt.variable);
    VerifyResult input = d.verify();
    if (!input.ok()) {
      std::cerr << "error: input decomposition is invalid; " << input.describe() << ": "
                << io::to_string(*input.witness) << "\n";
      return kExitVerification;
    }
    StanleyDecomposition image = d.localize(j);  // re-verified inside
    if (opt.json_output) {
      json out{{"kind", "decomposition"},
               {"var", opt.variable},
               {"result", io::json_of(image)},
               {"verdict", "Valid"}};
      attach_seed(opt, out);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "# localized at " << opt.variable << "; verdict: Valid\n";
      io::write_decomposition(std::cout, image);
    }
    return kExitOk;
  }
  if (kind == io::FileKind::filtration) {
    PrimeFiltration f = io::read_filtration_file(opt.file);
    std::size_t j = variable_index(f.ambient(), opt.variable);
    FiltrationVerifyResult input = f.verify();
    if (!input.ok()) {
      std::cerr << "error: input filtration is invalid; " << input.describe() << "\n";
      return kExitVerification;
    }
    PrimeFiltration image = f.localize(j);  // re-verified inside
    if (opt.json_output) {
      json out{{"kind", "filtration"},
               {"var", opt.variable},
               {"result", io::json_of(image)},
               {"verdict", "Valid"}};
      attach_seed(opt, out);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "# localized at " << opt.variable << "; verdict: Valid\n";
      io::write_filtration(std::cout, image);
    }
    return kExitOk;
  }
  throw ParseError("'" + opt.file + "' contains neither spaces nor steps; nothing to transform");
}

// -------------------------------------------------------------------- link

int run_link(const Options& opt) {
  SimplicialComplex complex = io::read_complex_file(opt.file);
  std::vector<std::size_t> face;
  for (int v : opt.vertices) {
    if (v < 1 || static_cast<std::size_t>(v) > complex.vertices().size())
      throw DomainError("vertex " + std::to_string(v) + " out of range");
    face.push_back(static_cast<std::size_t>(v - 1));
  }
  SimplicialComplex link = complex.link(face);
  MonomialIdeal link_ideal = link.stanley_reisner_ideal();

  bool all_pass = true;
  json checks = json::array();
  std::ostringstream report;
  if (opt.check) {
    for (std::size_t v = 0; v < complex.vertices().size(); ++v) {
      std::size_t single[] = {v};
      if (!complex.is_face(single))
        continue;
      bool ok = check_link_lemma(complex, v);
      all_pass = all_pass && ok;
      report << "# link identity at " << complex.vertices().name(v) << ": "
             << (ok ? "PASS" : "FAIL") << "\n";
      checks.push_back({{"vertex", complex.vertices().name(v)},
                        {"identity", ok}});
    }

    int base = sdepth_quotient(complex.stanley_reisner_ideal(), opt.limits());
    int linked = sdepth_quotient(link_ideal, opt.limits());
    bool inequality = linked >= base - static_cast<int>(face.size());
    all_pass = all_pass && inequality;

    // The same link through one vertex at a time must agree exactly.
    SimplicialComplex iterated = complex;
    std::vector<std::size_t> remaining = face;
    std::sort(remaining.begin(), remaining.end());
    std::size_t removed_below = 0;
    for (std::size_t v : remaining) {
      std::size_t shifted[] = {v - removed_below};
      iterated = iterated.link(shifted);
      ++removed_below;
    }
    bool routes_agree = iterated == link;
    all_pass = all_pass && routes_agree;

    report << "# sdepth of the complex quotient = " << base << "\n";
    report << "# sdepth of the link quotient    = " << linked << "\n";
    report << "# inequality sdepth(link) >= sdepth - |F|: "
           << (inequality ? "PASS" : "FAIL") << "\n";
    report << "# iterated and direct links agree: " << (routes_agree ? "PASS" : "FAIL") << "\n";
    checks.push_back({{"sdepth_complex", base},
                      {"sdepth_link", linked},
                      {"inequality", inequality},
                      {"iterated_link_agrees", routes_agree}});
  }

  if (opt.json_output) {
    json out{{"complex", io::json_of(complex)},
             {"face", opt.vertices},
             {"link", io::json_of(link)},
             {"link_ideal", io::json_of(link_ideal)}};
    if (opt.check)
      out["checks"] = std::move(checks);
    attach_seed(opt, out);
    std::cout << out.dump(2) << "\n";
  } else {
    print_seed(opt);
    std::cout << "# link vertices:";
    if (link.vertices().empty())
      std::cout << " (none)";
    for (const auto& n : link.vertices().names())
      std::cout << ' ' << n;
    std::cout << "\n";
    std::cout << "# link ideal: " << io::to_string(link_ideal) << "\n";
    std::cout << report.str();
    io::write_complex(std::cout, link);
  }
  return all_pass ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------- paper-examples

struct BuiltinExample {
  const char* vars;
  const char* gens;
  const char* localize_at;
  const char* expected_image;
  int expected_before;
  int expected_after;
};

// The four bundled worked examples with their published values.
constexpr BuiltinExample kExamples[] = {
    {"x y", "x*y", "x", "y", 1, 0},
    {"x y", "x^2, x*y", "y", "x", 0, 0},
    {"x y z", "x*y*z", "z", "x*y", 2, 1},
    {"x y z w", "x*y, x*z, x*w", "w", "x", 1, 2},
};

int run_paper_examples(const Options& opt) {
  bool all_pass = true;
  json rows = json::array();
  std::ostringstream table;
  table << "ideal                 sdepth  var  image        sdepth'  expected  status\n";

  for (const BuiltinExample& ex : kExamples) {
    std::istringstream vars_in(ex.vars);
    std::vector<std::string> names;
    std::string n;
    while (vars_in >> n)
      names.push_back(n);
    VariableSet vs(std::move(names));

    std::vector<Monomial> gens;
    std::istringstream gens_in(ex.gens);
    std::string g;
    while (std::getline(gens_in, g, ',')) {
      g.erase(0, g.find_first_not_of(' '));
      gens.push_back(io::parse_monomial(g, vs));
    }
    MonomialIdeal ideal = MonomialIdeal::make(vs, std::move(gens));
    std::size_t j = variable_index(vs, ex.localize_at);

    int before = sdepth(ideal, opt.limits()).value;
    MonomialIdeal image = ideal.localize(j);
    MonomialIdeal expected_image =
        MonomialIdeal::make(image.ambient(),
                            {io::parse_monomial(ex.expected_image, image.ambient())});
    int after = sdepth(image, opt.limits()).value;

    bool row_pass = before == ex.expected_before && after == ex.expected_after &&
                    image == expected_image && after >= before - 1;
    all_pass = all_pass && row_pass;

    std::string status = row_pass ? "PASS" : "FAIL";
    if (row_pass && after > before)
      status += " (strict increase)";

    std::ostringstream row;
    row.setf(std::ios::left);
    row.width(22);
    row << io::to_string(ideal);
    row.width(8);
    row << before;
    row.width(5);
    row << ex.localize_at;
    row.width(13);
    row << io::to_string(image);
    row.width(9);
    row << after;
    row << ex.expected_before << " -> " << ex.expected_after << "    " << status;
    table << row.str() << "\n";

    rows.push_back({{"ideal", io::json_of(ideal)},
                    {"sdepth", before},
                    {"var", ex.localize_at},
                    {"image", io::json_of(image)},
                    {"sdepth_after", after},
                    {"expected_sdepth", ex.expected_before},
                    {"expected_sdepth_after", ex.expected_after},
                    {"pass", row_pass}});
  }

  if (opt.json_output) {
    json out{{"examples", std::move(rows)}, {"pass", all_pass}};
    attach_seed(opt, out);
    std::cout << out.dump(2) << "\n";
  } else {
    print_seed(opt);
    std::cout << table.str();
    std::cout << (all_pass ? "all examples reproduce the published values"
                           : "MISMATCH against the published values")
              << "\n";
  }
  return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stanley decompositions, prime filtrations, and localization "
               "of monomial ideals"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json_output, "emit machine-readable JSON");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps; echoed in the output");
  app.add_option("--max-poset", opt.max_poset, "characteristic poset point limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-nodes", opt.max_nodes, "search node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--fdepth-box-margin", opt.fdepth_box_margin,
                 "widen the fdepth offset box beyond the generator lcm")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth of S/I");
  sdepth_cmd->add_option("ideal-file", opt.file, "ideal in the text format")->required();
  sdepth_cmd->add_flag("--certificate", opt.certificate,
                       "emit the optimal interval partition and its decomposition");

  auto* fdepth_cmd = app.add_subcommand("fdepth", "prime filtration depth of S/I");
  fdepth_cmd->add_option("ideal-file", opt.file, "ideal in the text format")->required();
  fdepth_cmd->add_flag("--certificate", opt.certificate, "emit the witness filtration");

  auto* localize_cmd = app.add_subcommand("localize", "apply the map sending one variable to 1");
  localize_cmd->add_option("ideal-file", opt.file)->required();
  localize_cmd->add_option("--var", opt.variable, "variable to send to 1")->required();
  localize_cmd->add_flag("--sdepth-both", opt.sdepth_both,
                         "compare sdepth before and after localization");

  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition or filtration file");
  verify_cmd->add_option("file", opt.file)->required();

  auto* transform_cmd =
      app.add_subcommand("transform", "localize a decomposition or filtration file");
  transform_cmd->add_option("file", opt.file)->required();
  transform_cmd->add_option("--var", opt.variable)->required();

  auto* link_cmd = app.add_subcommand("link", "link of a face of a simplicial complex");
  link_cmd->add_option("complex-file", opt.file)->required();
  link_cmd->add_option("--vertices", opt.vertices, "1-based vertices of the face");
  link_cmd->add_flag("--check", opt.check,
                     "verify the localization identity and the link sdepth inequality");

  auto* examples_cmd =
      app.add_subcommand("paper-examples", "reproduce the bundled worked examples");

  for (auto* cmd : {sdepth_cmd, fdepth_cmd, localize_cmd, verify_cmd, transform_cmd, link_cmd,
                    examples_cmd})
    cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (sdepth_cmd->parsed())
      return run_sdepth(opt);
    if (fdepth_cmd->parsed())
      return run_fdepth(opt);
    if (localize_cmd->parsed())
      return run_localize(opt);
    if (verify_cmd->parsed())
      return run_verify(opt);
    if (transform_cmd->parsed())
      return run_transform(opt);
    if (link_cmd->parsed())
      return run_link(opt);
    if (examples_cmd->parsed())
      return run_paper_examples(opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const AmbientMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
