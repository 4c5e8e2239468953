// adnil: count and list ad-nilpotent ideals of standard parabolic
// subalgebras from the root poset.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 bad arguments,
// 3 unknown type or missing golden table.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "adnil/adnil.hpp"
#include "adnil/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitNoGolden = 3;

struct Options {
  std::string type;
  std::string format = "markdown";
  std::vector<int> parabolic;
  bool abelian_only = false;
  unsigned threads = 0;
  bool oracle = false;
  std::string golden_file;
};

struct ArgError {
  std::string message;
};

adnil::SimpleType parse_type(const std::string& s) {
  try {
    return adnil::parse_simple_type(s);
  } catch (const adnil::UnsupportedType& e) {
    throw ArgError{e.what()};
  }
}

adnil::OutputFormat parse_format(const std::string& s) {
  if (auto f = adnil::parse_output_format(s)) return *f;
  throw ArgError{"unknown format '" + s + "' (expected markdown, csv or json)"};
}

adnil::ParabolicMask parse_mask(const adnil::SimpleType& t, const std::vector<int>& labels) {
  try {
    return adnil::ParabolicMask::from_labels(t.rank, labels);
  } catch (const std::out_of_range& e) {
    throw ArgError{e.what()};
  }
}

unsigned thread_count(const Options& o) {
  if (o.threads > 0) return o.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

bool oracle_fits(const adnil::RootSystem& rs, const Options& o) {
  if (!o.oracle) return false;
  if (rs.size() <= adnil::oracle::kMaxSubsetScanRoots) return true;
  std::cerr << "warning: " << rs.type().name() << " has " << rs.size()
            << " positive roots; too many for the brute-force path, using the antichain enumeration\n";
  return false;
}

std::vector<adnil::TableRow> compute_rows(const adnil::RootSystem& rs, const Options& o) {
  if (oracle_fits(rs, o)) return adnil::oracle::brute_force_tabulate(rs);
  return adnil::tabulate(rs, thread_count(o));
}

int cmd_tabulate(const Options& o) {
  const auto t = parse_type(o.type);
  const auto format = parse_format(o.format);
  if (!adnil::golden_table(t)) std::cerr << "warning: no golden table for " << t.name() << "\n";
  const auto rs = adnil::build_root_system(t);
  const auto rows = compute_rows(rs, o);
  std::cout << adnil::render_table(t, rows, format);
  return kExitOk;
}

int cmd_count(const Options& o) {
  const auto t = parse_type(o.type);
  const auto mask = parse_mask(t, o.parabolic);
  const auto rs = adnil::build_root_system(t);
  const auto rows = compute_rows(rs, o);
  const auto& row = rows.at(mask.bits());
  std::cout << (o.abelian_only ? row.ab_count : row.n_count) << '\n';
  return kExitOk;
}

int cmd_list(const Options& o) {
  const auto t = parse_type(o.type);
  const auto mask = parse_mask(t, o.parabolic);
  const auto format = parse_format(o.format);
  const auto rs = adnil::build_root_system(t);
  const auto poset = adnil::build_poset(rs);
  const auto ideals = oracle_fits(rs, o) ? adnil::oracle::list_ideals(rs, mask, o.abelian_only)
                                         : adnil::list_ideals(rs, poset, mask, o.abelian_only);
  std::cout << adnil::render_ideals(rs, mask, o.abelian_only, ideals, format);
  return kExitOk;
}

void print_report(const adnil::VerificationReport& r) {
  std::cout << r.type.name() << ": " << r.rows_checked << " rows, " << r.mismatches.size() << " mismatches\n";
  for (const auto& m : r.mismatches)
    std::cout << "  mismatch " << r.type.name() << " I=" << adnil::mask_set_notation(m.mask) << ": expected "
              << m.expected_n << "," << m.expected_ab << " got " << m.got_n << "," << m.got_ab << "\n";
}

int cmd_verify(const Options& o) {
  std::vector<adnil::GoldenTable> tables;
  if (!o.golden_file.empty()) {
    std::ifstream in(o.golden_file);
    if (!in) {
      std::cerr << "error: cannot read golden file " << o.golden_file << "\n";
      return kExitNoGolden;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      tables.push_back(adnil::parse_table_json(buf.str()));
    } catch (const std::invalid_argument& e) {
      throw ArgError{e.what()};
    }
    if (!o.type.empty() && o.type != "all" && !(parse_type(o.type) == tables.back().type))
      throw ArgError{"golden file holds " + tables.back().type.name() + ", not " + o.type};
  } else if (o.type == "all") {
    for (const auto& t : adnil::golden_types()) tables.push_back(*adnil::golden_table(t));
  } else {
    adnil::SimpleType t;
    try {
      t = adnil::parse_simple_type(o.type);
    } catch (const adnil::UnsupportedType& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitNoGolden;
    }
    auto g = adnil::golden_table(t);
    if (!g) {
      std::cerr << "error: no golden table for " << t.name() << "\n";
      return kExitNoGolden;
    }
    tables.push_back(*g);
  }

  std::size_t rows = 0, mismatches = 0;
  for (const auto& g : tables) {
    const auto rs = adnil::build_root_system(g.type);
    const auto report = adnil::verify_rows(g, compute_rows(rs, o));
    print_report(report);
    rows += report.rows_checked;
    mismatches += report.mismatches.size();
  }
  std::cout << tables.size() << (tables.size() == 1 ? " table, " : " tables, ") << rows << " rows, " << mismatches
            << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ad-nilpotent and abelian ideals of parabolic subalgebras, via root poset antichains"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (default: hardware concurrency)");
    sub->add_flag("--oracle", o.oracle, "Use the brute-force subset scan where the root system is small enough");
  };

  auto* tab = app.add_subcommand("tabulate", "Print #N_I and #Ab_I for every parabolic I");
  tab->add_option("--type", o.type, "Root system type, e.g. E8, F4, A3")->required();
  tab->add_option("--format", o.format, "markdown, csv or json");
  add_common(tab);

  auto* ver = app.add_subcommand("verify", "Check computed tables against the reference tables");
  ver->add_option("--type", o.type, "G2, F4, E6, E7, E8 or all")->default_val("all");
  ver->add_option("--golden", o.golden_file, "Verify against a table in the json format instead");
  add_common(ver);

  auto* lst = app.add_subcommand("list", "List the ideals of p_I");
  lst->add_option("--type", o.type, "Root system type")->required();
  lst->add_option("--parabolic", o.parabolic, "Comma-separated 1-based simple root indices")->delimiter(',');
  lst->add_flag("--abelian-only", o.abelian_only, "Only abelian ideals");
  lst->add_option("--format", o.format, "markdown, csv or json");
  add_common(lst);

  auto* cnt = app.add_subcommand("count", "Print #N_I (or #Ab_I) for one parabolic I");
  cnt->add_option("--type", o.type, "Root system type")->required();
  cnt->add_option("--parabolic", o.parabolic, "Comma-separated 1-based simple root indices")->delimiter(',');
  cnt->add_flag("--abelian-only", o.abelian_only, "Count abelian ideals");
  add_common(cnt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (tab->parsed()) return cmd_tabulate(o);
    if (ver->parsed()) return cmd_verify(o);
    if (lst->parsed()) return cmd_list(o);
    if (cnt->parsed()) return cmd_count(o);
  } catch (const ArgError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitBadArgs;
  } catch (const adnil::UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const adnil::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
