#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adnil/ideals.hpp"
#include "adnil/root_system.hpp"
#include "adnil/tabulate.hpp"

namespace adnil {

enum class OutputFormat { markdown, csv, json };

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  return std::nullopt;
}

/// "{α1,α3}", or "∅".
inline std::string mask_set_notation(ParabolicMask m) {
  const auto labels = m.labels();
  if (labels.empty()) return "∅";
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k) out += ',';
    out += "α" + std::to_string(labels[k]);
  }
  return out + "}";
}

/// "1;3", or "" for the empty mask.
inline std::string mask_csv(ParabolicMask m) {
  std::string out;
  for (int a : m.labels()) {
    if (!out.empty()) out += ';';
    out += std::to_string(a);
  }
  return out;
}

/// Dynkin pictograph with • on members of I. E-types list the branch node
/// α2 first, then the chain α1 α3 α4 ...
inline std::string mask_diagram(SimpleType t, ParabolicMask m) {
  auto node = [&](int label) -> std::string { return m.contains(label - 1) ? "•" : "∘"; };
  std::string out;
  if (t.kind == Kind::E) {
    out = "α2:" + node(2) + " ";
    out += node(1);
    for (int a = 3; a <= t.rank; ++a) out += node(a);
    return out;
  }
  for (int a = 1; a <= t.rank; ++a) out += node(a);
  return out;
}

inline std::string render_table(SimpleType t, std::span<const TableRow> rows, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown:
      os << "## " << t.name() << "\n\n";
      os << "| I | diagram | #N_I | #Ab_I |\n";
      os << "|---|---|---:|---:|\n";
      for (const auto& r : rows)
        os << "| " << mask_set_notation(r.mask) << " | " << mask_diagram(t, r.mask) << " | " << r.n_count << " | "
           << r.ab_count << " |\n";
      break;
    case OutputFormat::csv:
      os << "mask,n_count,ab_count\n";
      for (const auto& r : rows) os << mask_csv(r.mask) << ',' << r.n_count << ',' << r.ab_count << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["type"] = t.name();
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : rows)
        doc["rows"].push_back({{"I", r.mask.labels()}, {"n", r.n_count}, {"ab", r.ab_count}});
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

inline std::string render_ideals(const RootSystem& rs, ParabolicMask I, bool abelian_only,
                                 std::span<const IdealRecord> ideals, OutputFormat f) {
  auto min_roots = [&](const IdealRecord& rec) {
    std::vector<std::string> out;
    rec.min_roots.for_each([&](std::size_t i) { out.push_back(rs.format_root(i)); });
    return out;
  };
  auto joined = [](const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out += sep;
      out += parts[k];
    }
    return out;
  };

  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown: {
      os << "## " << rs.type().name() << ", I = " << mask_set_notation(I) << (abelian_only ? ", abelian only" : "")
         << "\n\n";
      os << "| # | Φ_min | size | abelian |\n";
      os << "|---:|---|---:|---|\n";
      std::size_t k = 0;
      for (const auto& rec : ideals) {
        const auto roots = min_roots(rec);
        os << "| " << ++k << " | " << (roots.empty() ? "∅" : "{" + joined(roots, ", ") + "}") << " | " << rec.size
           << " | " << (rec.abelian ? "yes" : "no") << " |\n";
      }
      os << "\ncount: " << ideals.size() << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "size,abelian,min_roots\n";
      for (const auto& rec : ideals)
        os << rec.size << ',' << (rec.abelian ? 1 : 0) << ',' << joined(min_roots(rec), ";") << '\n';
      os << "# count: " << ideals.size() << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json doc;
      doc["type"] = rs.type().name();
      doc["I"] = I.labels();
      doc["abelian_only"] = abelian_only;
      doc["ideals"] = nlohmann::ordered_json::array();
      for (const auto& rec : ideals) {
        auto coords = nlohmann::ordered_json::array();
        rec.min_roots.for_each([&](std::size_t i) { coords.push_back(rs.root(i).coords); });
        doc["ideals"].push_back({{"min_roots", coords}, {"size", rec.size}, {"abelian", rec.abelian}});
      }
      doc["count"] = ideals.size();
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

/// Parse a table in the json rendering. Throws std::invalid_argument on
/// malformed input.
inline GoldenTable parse_table_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    GoldenTable g{parse_simple_type(doc.at("type").get<std::string>()), {}};
    for (const auto& row : doc.at("rows")) {
      const auto mask = ParabolicMask::from_labels(g.type.rank, row.at("I").get<std::vector<int>>());
      g.rows.push_back(GoldenRow{mask.bits(), row.at("n").get<std::uint64_t>(), row.at("ab").get<std::uint64_t>()});
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed table json: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed table json: ") + e.what());
  }
}

/// Parse the csv rendering; the type is not part of the csv and must be given.
inline GoldenTable parse_table_csv(SimpleType t, std::string_view text) {
  GoldenTable g{t, {}};
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "mask,n_count,ab_count")
    throw std::invalid_argument("csv table lacks the mask,n_count,ab_count header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument("bad csv row: " + line);
    std::vector<int> labels;
    std::istringstream ms(line.substr(0, c1));
    for (std::string tok; std::getline(ms, tok, ';');) labels.push_back(std::stoi(tok));
    g.rows.push_back(GoldenRow{ParabolicMask::from_labels(t.rank, labels).bits(),
                               std::stoull(line.substr(c1 + 1, c2 - c1 - 1)), std::stoull(line.substr(c2 + 1))});
  }
  return g;
}

}  // namespace adnil
