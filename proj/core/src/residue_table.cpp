#include "denum/residue_table.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "denum/errors.hpp"

namespace denum {

namespace {

std::size_t to_index(const Int& value, const char* what) {
  if (!value.fits_ulong_p()) {
    throw ResourceError(std::string(what) + " of " + value.get_str() +
                        " does not fit in memory indices");
  }
  return static_cast<std::size_t>(value.get_ui());
}

// Decimal integer with an optional leading minus; sign constraints are the
// validator's job, digit strictness is the parser's.
Int parse_decimal_entry(const std::string& text, const std::string& where) {
  try {
    if (!text.empty() && text[0] == '-') {
      return -parse_unsigned_decimal(text.substr(1));
    }
    return parse_unsigned_decimal(text);
  } catch (const InvalidInputError& e) {
    throw ParseError("table parse: " + where + ": " + e.what());
  }
}

}  // namespace

BoundedProfile::BoundedProfile(EquationSpec spec, std::vector<Count> counts)
    : spec_(std::move(spec)), counts_(std::move(counts)) {
  Int expected = spec_.modulus() * static_cast<unsigned long>(spec_.n()) + 1;
  for (const Int& a : spec_.coefficients()) {
    expected -= a;
  }
  if (Int(static_cast<unsigned long>(counts_.size())) != expected) {
    throw InvalidInputError("bounded profile: count array has length " +
                            std::to_string(counts_.size()) + ", expected " +
                            expected.get_str());
  }
}

Int BoundedProfile::max_sum() const {
  return Int(static_cast<unsigned long>(counts_.size()) - 1);
}

Count BoundedProfile::at(const Int& c) const {
  if (c < 0 || c >= static_cast<unsigned long>(counts_.size())) {
    return 0;
  }
  return counts_[static_cast<std::size_t>(c.get_ui())];
}

std::size_t BoundedProfile::support_size() const {
  std::size_t nonzero = 0;
  for (const Count& v : counts_) {
    if (v != 0) {
      ++nonzero;
    }
  }
  return nonzero;
}

BoundedProfile bounded_profile(const EquationSpec& spec,
                               const TableBuildOptions& options) {
  if (spec.modulus() > options.modulus_cap) {
    throw ResourceError(
        "residue table: modulus " + spec.modulus().get_str() +
        " exceeds the build cap of " + options.modulus_cap.get_str() +
        "; use the direct formula or the DP oracle for this instance, or "
        "raise the cap");
  }

  Int top = spec.modulus() * static_cast<unsigned long>(spec.n());
  for (const Int& a : spec.coefficients()) {
    top -= a;
  }
  const std::size_t len = to_index(top, "profile array length") + 1;
  const std::size_t window = to_index(spec.modulus(), "modulus");

  // One pass per variable: multiply the running polynomial by
  // 1 + x^a + x^(2a) + ... + x^((d-1)a). Since a*d = M for every variable,
  // next[c] = next[c-a] + ways[c] - ways[c-M].
  std::vector<Count> ways(len, Count(0));
  std::vector<Count> next(len, Count(0));
  ways[0] = 1;
  for (const Int& coefficient : spec.coefficients()) {
    const std::size_t step = to_index(coefficient, "coefficient");
    for (std::size_t c = 0; c < len; ++c) {
      Count value = ways[c];
      if (c >= window) {
        value -= ways[c - window];
      }
      if (c >= step) {
        value += next[c - step];
      }
      next[c] = value;
    }
    ways.swap(next);
  }
  for (const Count& v : ways) {
    if (v < 0) {
      throw std::logic_error("bounded profile: negative cell after DP");
    }
  }
  return BoundedProfile(spec, std::move(ways));
}

ResidueTable build_table(const EquationSpec& spec,
                         const TableBuildOptions& options) {
  const BoundedProfile profile = bounded_profile(spec, options);
  const std::size_t modulus = to_index(spec.modulus(), "modulus");

  ResidueTable table;
  table.coefficients = spec.coefficients();
  table.modulus = spec.modulus();
  table.rows.resize(modulus);
  for (std::size_t r = 0; r < modulus; ++r) {
    table.rows[r].reserve(spec.n());
    for (std::size_t i = 0; i < spec.n(); ++i) {
      table.rows[r].push_back(
          profile.at(Int(static_cast<unsigned long>(r)) +
                     spec.modulus() * static_cast<unsigned long>(i)));
    }
  }
  return table;
}

void ResidueTable::validate() const {
  if (coefficients.empty()) {
    throw ValidationError("table: empty coefficient list");
  }
  if (modulus < 1) {
    throw ValidationError("table: modulus must be positive, got " +
                          modulus.get_str());
  }
  Count radix_product = 1;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] < 1) {
      throw ValidationError("table: coefficient a[" + std::to_string(i + 1) +
                            "] = " + coefficients[i].get_str() +
                            " must be positive");
    }
    if (modulus % coefficients[i] != 0) {
      throw ValidationError("table: coefficient a[" + std::to_string(i + 1) +
                            "] = " + coefficients[i].get_str() +
                            " does not divide the modulus " +
                            modulus.get_str());
    }
    radix_product *= modulus / coefficients[i];
  }
  if (Int(static_cast<unsigned long>(rows.size())) != modulus) {
    throw ValidationError("table: expected " + modulus.get_str() +
                          " rows, found " + std::to_string(rows.size()));
  }
  Count entry_total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != coefficients.size()) {
      throw ValidationError("table: row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) +
                            " entries, expected " +
                            std::to_string(coefficients.size()));
    }
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (rows[r][i] < 0) {
        throw ValidationError("table: negative entry at row " +
                              std::to_string(r) + ", column " +
                              std::to_string(i + 1));
      }
      entry_total += rows[r][i];
    }
  }
  if (entry_total != radix_product) {
    throw ValidationError("table: entries sum to " + entry_total.get_str() +
                          ", expected the radix product " +
                          radix_product.get_str());
  }
}

Count query_table(const ResidueTable& table, const Int& b) {
  if (b < 0) {
    throw InvalidInputError("query: b must be non-negative, got " +
                            b.get_str());
  }
  Int b_prime;
  Int residue;
  mpz_fdiv_qr(b_prime.get_mpz_t(), residue.get_mpz_t(), b.get_mpz_t(),
              table.modulus.get_mpz_t());
  const auto& row = table.rows.at(static_cast<std::size_t>(residue.get_ui()));
  const unsigned long poly_len = table.n() - 1;
  Count total = 0;
  for (std::size_t i = 0; i < table.n(); ++i) {
    if (row[i] == 0) {
      continue;
    }
    Int k = b_prime + 1;
    k -= static_cast<unsigned long>(i);
    total += row[i] * rising_binomial(k, poly_len);
  }
  return total;
}

void save_table(const ResidueTable& table, std::ostream& out) {
  nlohmann::json doc;
  doc["format_version"] = "1";
  nlohmann::json coefficients = nlohmann::json::array();
  for (const Int& a : table.coefficients) {
    coefficients.push_back(a.get_str());
  }
  doc["coefficients"] = std::move(coefficients);
  doc["modulus"] = table.modulus.get_str();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Count& v : row) {
      cells.push_back(v.get_str());
    }
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(1, '\t') << '\n';
}

void save_table(const ResidueTable& table,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  save_table(table, out);
  out.flush();
  if (!out.good()) {
    throw IoError("write failed for " + path.string());
  }
}

ResidueTable load_table(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("table parse: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("table parse: top-level value is not an object");
  }
  const auto field = [&](const char* name) -> const nlohmann::json& {
    auto it = doc.find(name);
    if (it == doc.end()) {
      throw ParseError(std::string("table parse: missing field \"") + name +
                       "\"");
    }
    return *it;
  };

  const auto& version = field("format_version");
  if (!version.is_string() || version.get<std::string>() != "1") {
    throw ParseError("table parse: unsupported format_version " +
                     version.dump());
  }

  ResidueTable table;
  const auto& coefficients = field("coefficients");
  if (!coefficients.is_array()) {
    throw ParseError("table parse: \"coefficients\" is not an array");
  }
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_string()) {
      throw ParseError("table parse: coefficients[" + std::to_string(i) +
                       "] is not a decimal string");
    }
    table.coefficients.push_back(
        parse_decimal_entry(coefficients[i].get<std::string>(),
                            "coefficients[" + std::to_string(i) + "]"));
  }

  const auto& modulus = field("modulus");
  if (!modulus.is_string()) {
    throw ParseError("table parse: \"modulus\" is not a decimal string");
  }
  table.modulus = parse_decimal_entry(modulus.get<std::string>(), "modulus");

  const auto& rows = field("rows");
  if (!rows.is_array()) {
    throw ParseError("table parse: \"rows\" is not an array");
  }
  table.rows.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) {
      throw ParseError("table parse: rows[" + std::to_string(r) +
                       "] is not an array");
    }
    std::vector<Count> row;
    row.reserve(rows[r].size());
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      const auto& cell = rows[r][i];
      if (!cell.is_string()) {
        throw ParseError("table parse: rows[" + std::to_string(r) + "][" +
                         std::to_string(i) + "] is not a decimal string");
      }
      row.push_back(parse_decimal_entry(
          cell.get<std::string>(),
          "rows[" + std::to_string(r) + "][" + std::to_string(i) + "]"));
    }
    table.rows.push_back(std::move(row));
  }

  table.validate();
  return table;
}

ResidueTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  return load_table(in);
}

}  // namespace denum
