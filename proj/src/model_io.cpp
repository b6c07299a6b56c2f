#include "omni/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "omni/errors.hpp"

namespace omni {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::size_t parse_id(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ModelFileError(line, "bad user id '" + t + "'");
  }
  if (t.size() > 3) throw ModelFileError(line, "user id '" + t + "' too large");
  std::size_t id = std::stoul(t);
  if (id == 0) throw ModelFileError(line, "user ids start at 1");
  return id;
}

SourceModel build_bitpool(const std::map<std::size_t, std::pair<std::size_t, std::vector<std::string>>>& users) {
  const std::size_t n = users.empty() ? 0 : users.rbegin()->first;
  for (std::size_t id = 1; id <= n; ++id) {
    if (!users.count(id)) throw ModelFileError(0, "user " + std::to_string(id) + " is missing");
  }
  if (n < 2) throw ModelFileError(0, "a model needs at least 2 users");
  if (n > UserSet::kMaxUsers) throw CapacityError("bit-pool files support at most 32 users");
  std::vector<std::vector<std::string>> bits;
  for (const auto& [id, entry] : users) bits.push_back(entry.second);
  return SourceModel(BitPoolSource(bits));
}

SourceModel build_table(const std::vector<std::pair<std::size_t, std::pair<std::vector<std::size_t>, Rational>>>& rows) {
  std::size_t n = 0;
  for (const auto& row : rows) {
    for (std::size_t id : row.second.first) n = std::max(n, id);
  }
  if (n > EntropyTable::kMaxUsers) {
    throw CapacityError("entropy tables support at most " + std::to_string(EntropyTable::kMaxUsers) + " users, got " +
                        std::to_string(n));
  }
  std::vector<std::optional<Rational>> values(std::size_t{1} << n);
  values[0] = Rational(0);
  for (const auto& [line, entry] : rows) {
    UserSet set;
    for (std::size_t id : entry.first) {
      if (set.contains(id - 1)) throw ModelFileError(line, "user " + std::to_string(id) + " listed twice");
      set = set.with(id - 1);
    }
    if (values[set.bits()]) throw ModelFileError(line, "H" + to_string(set) + " given twice");
    values[set.bits()] = entry.second;
  }
  if (n < 2) throw ModelFileError(0, "a model needs at least 2 users");
  for (std::size_t id = 1; id <= n; ++id) {
    if (!values[UserSet::single(id - 1).bits()]) {
      throw ModelFileError(0, "user " + std::to_string(id) + " is missing (no H{" + std::to_string(id) + "} entry)");
    }
  }
  std::vector<Rational> table;
  table.reserve(values.size());
  for (std::size_t mask = 0; mask < values.size(); ++mask) {
    if (!values[mask]) {
      throw ModelFileError(0, "no entropy given for " + to_string(UserSet(static_cast<std::uint32_t>(mask))));
    }
    table.push_back(*values[mask]);
  }
  return SourceModel(EntropyTable(n, std::move(table)));
}

}  // namespace

SourceModel read_model(std::istream& in) {
  enum class Kind { unknown, bitpool, table };
  Kind kind = Kind::unknown;
  std::map<std::size_t, std::pair<std::size_t, std::vector<std::string>>> users;
  std::vector<std::pair<std::size_t, std::pair<std::vector<std::size_t>, Rational>>> rows;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;

    if (kind == Kind::unknown) {
      auto eq = text.find('=');
      if (eq == std::string::npos || trim(text.substr(0, eq)) != "type") {
        throw ModelFileError(line, "expected 'type=bitpool' or 'type=table' before any data");
      }
      const std::string value = trim(text.substr(eq + 1));
      if (value == "bitpool") {
        kind = Kind::bitpool;
      } else if (value == "table") {
        kind = Kind::table;
      } else {
        throw ModelFileError(line, "unknown model type '" + value + "'");
      }
      continue;
    }

    if (kind == Kind::bitpool) {
      if (text.rfind("user", 0) != 0) throw ModelFileError(line, "expected 'user <id>: <bits>'");
      auto colon = text.find(':');
      if (colon == std::string::npos) throw ModelFileError(line, "missing ':' after the user id");
      std::size_t id = parse_id(text.substr(4, colon - 4), line);
      if (users.count(id)) throw ModelFileError(line, "user " + std::to_string(id) + " declared twice");
      std::istringstream tokens(text.substr(colon + 1));
      std::vector<std::string> bits;
      for (std::string tok; tokens >> tok;) bits.push_back(tok);
      if (bits.empty()) throw ModelFileError(line, "user " + std::to_string(id) + " observes no bits");
      std::sort(bits.begin(), bits.end());
      bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
      users[id] = {line, std::move(bits)};
    } else {
      if (text.front() != 'H' || text.size() < 2 || !std::isspace(static_cast<unsigned char>(text[1]))) {
        throw ModelFileError(line, "expected 'H <ids> = <value>'");
      }
      auto eq = text.find('=');
      if (eq == std::string::npos) throw ModelFileError(line, "missing '='");
      std::vector<std::size_t> ids;
      std::stringstream list(text.substr(1, eq - 1));
      for (std::string item; std::getline(list, item, ',');) ids.push_back(parse_id(item, line));
      Rational value;
      try {
        value = parse_rational(text.substr(eq + 1));
      } catch (const std::invalid_argument& e) {
        throw ModelFileError(line, e.what());
      }
      rows.push_back({line, {std::move(ids), std::move(value)}});
    }
  }

  if (kind == Kind::unknown) throw ModelFileError(0, "empty model file");
  return kind == Kind::bitpool ? build_bitpool(users) : build_table(rows);
}

SourceModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  return read_model(in);
}

std::string write_bitpool(const BitPoolSource& source) {
  std::string out = "type=bitpool\n";
  for (std::size_t k = 0; k < source.size(); ++k) {
    out += "user " + std::to_string(k + 1) + ":";
    for (const auto& b : source.bits_of(k)) out += " " + b;
    out += "\n";
  }
  return out;
}

std::string write_table(const SourceModel& model) {
  std::string out = "type=table\n";
  const std::uint32_t full = model.ground().bits();
  for (std::uint32_t bits = 1; bits <= full; ++bits) {
    UserSet set(bits);
    out += "H ";
    bool first = true;
    for (std::size_t m : set.members()) {
      if (!first) out += ",";
      out += std::to_string(m + 1);
      first = false;
    }
    out += " = " + to_string(model.entropy(set)) + "\n";
  }
  return out;
}

}  // namespace omni
