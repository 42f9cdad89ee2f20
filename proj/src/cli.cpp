#include "loopkit/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopkit/autotopism.hpp"
#include "loopkit/error.hpp"
#include "loopkit/identities.hpp"
#include "loopkit/parastrophe.hpp"
#include "loopkit/sts.hpp"

namespace loopkit::cli {

namespace {

const CayleyTable& demo_table() {
  static const CayleyTable table = CayleyTable::from_rows({
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
      {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9},
      {2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10},
      {3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8},
      {4, 5, 3, 1, 2, 0, 10, 11, 9, 7, 8, 6},
      {5, 3, 4, 2, 0, 1, 11, 9, 10, 8, 6, 7},
      {6, 7, 8, 10, 11, 9, 0, 1, 2, 5, 3, 4},
      {7, 8, 6, 11, 9, 10, 1, 2, 0, 3, 4, 5},
      {8, 6, 7, 9, 10, 11, 2, 0, 1, 4, 5, 3},
      {9, 10, 11, 8, 6, 7, 3, 4, 5, 2, 0, 1},
      {10, 11, 9, 6, 7, 8, 4, 5, 3, 0, 1, 2},
      {11, 9, 10, 7, 8, 6, 5, 3, 4, 1, 2, 0},
  });
  return table;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("io", "cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Loop load_loop(const std::string& path) {
  return as_loop(read_table_file(slurp(path)));
}

std::string bool_text(bool value) { return value ? "true" : "false"; }
std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string witness_text(const std::vector<unsigned>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(witness[i]);
  }
  out += ")";
  return out;
}

void print_report(std::ostream& out, const IdentityReport& report) {
  out << report.identity << ": holds=" << bool_text(report.holds);
  if (!report.holds) {
    out << " witness=" << witness_text(report.witness) << " [" << report.detail << "]";
  }
  out << "\n";
}

/// Names a permutation R<i> when it equals a right translation of the loop.
std::optional<unsigned> right_translation_index(const Loop& loop, const Perm& p) {
  for (unsigned i = 0; i < loop.order(); ++i) {
    if (loop.right_translation(i) == p) return i;
  }
  return std::nullopt;
}

int cmd_check(const Loop& loop, const std::string& which, std::ostream& out) {
  out << "table: order " << loop.order() << ", identity " << loop.identity() << "\n";
  struct Entry {
    const char* name;
    IdentityReport (*checker)(const Loop&);
  };
  static const Entry kCheckers[] = {
      {"lc", is_lc},
      {"rc", is_rc},
      {"c", is_c},
      {"left-alternative", is_left_alternative},
      {"right-alternative", is_right_alternative},
      {"power-associative", is_power_associative},
      {"nuclear-square", is_nuclear_square},
      {"steiner", is_steiner},
      {"associative", is_associative},
  };
  for (const Entry& entry : kCheckers) {
    if (!which.empty() && which != entry.name) continue;
    print_report(out, entry.checker(loop));
  }
  return 0;
}

void print_constructed(const ConstructedPair& pair, std::ostream& out) {
  out << "x = " << pair.source_element << ", x^2 = " << pair.square
      << ", trivial = " << bool_text(pair.trivial) << "\n";
  out << "alpha1S2 = " << format_cycles(pair.forward.u()) << "\n";
  out << "beta1T2 = " << format_cycles(pair.forward.v()) << "\n";
  out << "gamma1R2 = " << format_cycles(pair.forward.w()) << "\n";
  out << "forward = " << to_string(pair.forward) << "\n";
  out << "inverse = " << to_string(pair.inverse) << "\n";
}

int cmd_autotopism(const Loop& loop, unsigned x, std::ostream& out) {
  print_constructed(constructed_autotopism(loop, x), out);
  return 0;
}

int cmd_demo(std::ostream& out) {
  const Loop loop = as_loop(demo_table());
  const ConstructedPair pair = constructed_autotopism(loop, 4);
  out << "demo: constructed autotopism of the embedded order-12 C-loop at x = 4\n";
  out << "alpha1S2 = " << format_cycles(pair.forward.u()) << "\n";
  out << "beta1T2 = " << format_cycles(pair.forward.v()) << "\n";
  out << "gamma1R2 = " << format_cycles(pair.forward.w()) << "\n";
  const auto ru = right_translation_index(loop, pair.forward.u());
  const auto rv = right_translation_index(loop, pair.forward.v());
  const auto rw = right_translation_index(loop, pair.forward.w());
  if (ru && rv && rw) {
    out << "triple = (R" << *ru << ", R" << *rv << ", R" << *rw << ") in Aut(L)\n";
  }
  out << "verified: autotopism of the order-12 loop\n";
  return 0;
}

int cmd_parastrophe(const CayleyTable& table, ParastropheKind kind, std::ostream& out) {
  out << write_table_file(parastrophe(table, kind));
  return 0;
}

int cmd_equiv_report(const Loop& loop, std::ostream& out) {
  const EquivalenceReport report = equivalence_report(loop);
  out << "equivalence report: order " << loop.order() << ", identity "
      << loop.identity() << "\n";
  for (const auto& row : report.components) {
    out << "x=" << row.x << " alpha1S2=" << format_cycles(row.alpha1_s2)
        << " beta2T1=" << format_cycles(row.beta2_t1) << "\n";
  }
  out << "(i) all components identity: " << yes_no(report.components_identity) << "\n";
  out << "(ii) rdiv = L: " << yes_no(report.rdiv_equal)
      << ", ldiv = L: " << yes_no(report.ldiv_equal) << " => "
      << yes_no(report.first_two_equal) << "\n";
  out << "(iii) star = L: " << yes_no(report.star_equal)
      << ", rdiv-star = L: " << yes_no(report.rdiv_star_equal)
      << ", ldiv-star = L: " << yes_no(report.ldiv_star_equal) << " => "
      << yes_no(report.other_three_equal) << "\n";
  out << "(i) <=> (ii): ok\n";
  out << "(ii) => (iii): ok\n";
  out << "steiner criterion: " << yes_no(report.components_identity) << "\n";
  return 0;
}

std::vector<Autotopism> load_bases(const Loop& loop, const std::string& path) {
  // One base per line: three cycle-notation components separated by commas.
  const std::string text = slurp(path);
  std::vector<Autotopism> bases;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) {
        parts.push_back(line.substr(start));
        break;
      }
      parts.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    if (parts.size() != 3) {
      throw Error("tbl-format", "bases file line " + std::to_string(line_no) +
                                    ": expected three comma-separated components");
    }
    bases.push_back(verify(loop, parse_cycles(parts[0], loop.order()),
                           parse_cycles(parts[1], loop.order()),
                           parse_cycles(parts[2], loop.order())));
  }
  return bases;
}

int cmd_sts(const Loop& loop, const std::string& bases_path, std::ostream& out) {
  std::vector<Autotopism> bases;
  if (!bases_path.empty()) {
    bases = load_bases(loop, bases_path);
  }
  const CsFamily family = build_cs_family(loop, bases);
  const TripleSystem& system = family.system;
  out << "cs-autotopism family: order " << loop.order() << ", bases "
      << (bases.empty() ? 1 : bases.size()) << "\n";
  out << "note: triples enumerate the finite (base, x) grid in order, x with x^2 != e\n";
  for (std::size_t i = 0; i < system.ground.size(); ++i) {
    out << "ground[" << i << "] = " << to_string(system.ground[i]) << "\n";
  }
  for (std::size_t t = 0; t < system.triples.size(); ++t) {
    const auto& tri = system.triples[t];
    out << "triple[" << t << "] = {" << tri[0] << ", " << tri[1] << ", " << tri[2]
        << "}\n";
  }
  for (const CsProvenance& p : family.provenance) {
    out << "provenance: base " << p.base_index << " x " << p.x << " -> (" << p.members[0]
        << ", " << p.members[1] << ", " << p.members[2] << ")\n";
  }
  for (const std::string& reason : family.dropped) {
    out << "dropped: " << reason << "\n";
  }
  const StsReport report = verify_sts(system);
  out << "axiom i (distinct members): " << (report.distinct_ok ? "pass" : "fail");
  if (report.bad_triple) out << " triple=" << *report.bad_triple;
  out << "\n";
  out << "axiom ii (unique pair cover): " << (report.cover_ok ? "pass" : "fail");
  if (report.bad_pair) {
    out << " pair={" << report.bad_pair->first << ", " << report.bad_pair->second
        << "} covered " << report.bad_pair_cover_count << " times";
  }
  out << "\n";
  const CardinalityReport card = cardinality_check(system);
  out << "triples r = " << card.triple_count << ", r mod 6 = " << card.residue_mod6
      << ", admissible(1 or 3 mod 6): " << yes_no(card.admissible) << "\n";
  return 0;
}

int cmd_enumerate(const Loop& loop, std::ostream& out) {
  const std::vector<Autotopism> all = enumerate_autotopisms(loop);
  out << "autotopism count: " << all.size() << "\n";
  for (const Autotopism& a : all) {
    out << to_string(a) << "\n";
  }
  return 0;
}

}  // namespace

const CayleyTable& embedded_demo_table() { return demo_table(); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite loops: identities, autotopisms, parastrophes, triple systems"};
  app.name("loopkit");
  app.require_subcommand(1);

  static const std::vector<std::string> kIdentityNames = {
      "lc", "rc", "c", "left-alternative", "right-alternative",
      "power-associative", "nuclear-square", "steiner", "associative"};

  std::string table_path;
  std::string identity_name;
  std::string kind_name;
  std::string bases_path;
  unsigned element = 0;

  CLI::App* check = app.add_subcommand("check", "identity checks for a table");
  check->add_option("--table", table_path, "table file")->required();
  check->add_option("--identity", identity_name, "single identity to check")
      ->check(CLI::IsMember(kIdentityNames));

  CLI::App* autotopism = app.add_subcommand(
      "autotopism", "construct the autotopism pair generated by an element");
  autotopism->add_option("--table", table_path, "table file")->required();
  autotopism->add_option("--x", element, "source element")->required();

  CLI::App* para = app.add_subcommand("parastrophe", "emit a conjugate table");
  para->add_option("--table", table_path, "table file")->required();
  para->add_option("--kind", kind_name, "star|rdiv|ldiv|rdiv-star|ldiv-star")
      ->required()
      ->check(CLI::IsMember({"star", "rdiv", "ldiv", "rdiv-star", "ldiv-star"}));

  CLI::App* equiv = app.add_subcommand(
      "equiv-report", "parastrophe equivalence report for a C-loop");
  equiv->add_option("--table", table_path, "table file")->required();

  CLI::App* sts = app.add_subcommand(
      "sts", "CS-autotopism triple family of a non-Steiner C-loop");
  sts->add_option("--table", table_path, "table file")->required();
  sts->add_option("--bases", bases_path, "base autotopisms file");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "brute-force enumeration of all autotopisms (order <= 8)");
  enumerate->add_option("--table", table_path, "table file")->required();

  app.add_subcommand("demo", "replay the embedded order-12 construction at x = 4");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& parse_error) {
    err << "ERROR usage: " << parse_error.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) {
      return cmd_check(load_loop(table_path), identity_name, out);
    }
    if (autotopism->parsed()) {
      return cmd_autotopism(load_loop(table_path), element, out);
    }
    if (para->parsed()) {
      const CayleyTable table = read_table_file(slurp(table_path));
      return cmd_parastrophe(table, *parse_parastrophe_kind(kind_name), out);
    }
    if (equiv->parsed()) {
      return cmd_equiv_report(load_loop(table_path), out);
    }
    if (sts->parsed()) {
      return cmd_sts(load_loop(table_path), bases_path, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(load_loop(table_path), out);
    }
    return cmd_demo(out);
  } catch (const Error& error) {
    err << "ERROR " << error.kind() << ": " << error.what() << "\n";
    if (!error.witness().empty()) {
      err << "witness: " << witness_text(error.witness()) << "\n";
    }
    return 1;
  }
}

}  // namespace loopkit::cli
