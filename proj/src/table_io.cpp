#include "bratteli/table_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "bratteli/errors.hpp"

namespace bratteli {

std::string table_to_csv(const CountTable& t) {
  std::string out = "j,i,count\n";
  t.for_each([&](const CountTable::Entry& e) {
    out += std::to_string(e.j);
    out += ',';
    out += std::to_string(e.i);
    out += ',';
    out += e.count.get_str();
    out += '\n';
  });
  return out;
}

std::string table_to_json(const CountTable& t) {
  nlohmann::ordered_json doc;
  doc["k"] = t.k();
  doc["jmax"] = t.jmax();
  auto entries = nlohmann::ordered_json::array();
  t.for_each([&](const CountTable::Entry& e) {
    entries.push_back({{"i", e.i}, {"j", e.j}, {"count", e.count.get_str()}});
  });
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

namespace {

std::uint32_t read_index(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_unsigned())
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  const auto v = it->get<std::uint64_t>();
  if (v > std::numeric_limits<std::uint32_t>::max())
    throw ParseError(std::string("field \"") + key + "\" is out of range");
  return static_cast<std::uint32_t>(v);
}

Count read_count(const nlohmann::json& obj) {
  const auto it = obj.find("count");
  if (it == obj.end() || !it->is_string())
    throw ParseError("field \"count\" must be a decimal string");
  const auto& s = it->get_ref<const std::string&>();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("count \"" + s + "\" is not a nonnegative decimal integer");
  return Count(s, 10);
}

}  // namespace

CountTable table_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("table document must be a JSON object");
  const Level k = read_index(doc, "k");
  const std::uint32_t jmax = read_index(doc, "jmax");
  const auto entries = doc.find("entries");
  if (entries == doc.end() || !entries->is_array())
    throw ParseError("field \"entries\" must be an array");
  if (entries->size() != table_entry_count(k, jmax))
    throw ParseError("expected " + std::to_string(table_entry_count(k, jmax)) +
                     " entries, found " + std::to_string(entries->size()));
  CountTableBuilder builder(k, jmax);
  for (const auto& e : *entries) {
    if (!e.is_object()) throw ParseError("table entries must be objects");
    builder.add(read_index(e, "i"), read_index(e, "j"), read_count(e));
  }
  return std::move(builder).finish();
}

std::string table_to_pretty(const CountTable& t, bool color) {
  std::size_t width = 1;
  t.for_each([&](const CountTable::Entry& e) { width = std::max(width, e.count.get_str().size()); });
  width = std::max(width, std::to_string(t.jmax()).size());
  const std::size_t label = std::to_string(t.k()).size();

  std::ostringstream out;
  for (std::uint32_t i = t.k() + 1; i-- > 0;) {
    std::string row = "i=" + std::string(label - std::to_string(i).size(), ' ') + std::to_string(i) + " |";
    for (std::uint32_t j = 0; j <= t.jmax(); ++j) {
      const Count* c = t.find(i, j);
      const std::string cell = c ? c->get_str() : "";
      row += ' ';
      row += std::string(width - cell.size(), ' ');
      if (c && color)
        row += "\x1b[1;36m" + cell + "\x1b[0m";
      else
        row += cell;
    }
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << row << '\n';
  }
  std::string axis = std::string(label + 2, ' ') + " +";
  std::string ticks = std::string(label + 2, ' ') + "  ";
  for (std::uint32_t j = 0; j <= t.jmax(); ++j) {
    axis += std::string(width + 1, '-');
    const std::string s = std::to_string(j);
    ticks += std::string(width + 1 - s.size(), ' ') + s;
  }
  out << axis << '\n' << ticks << "  (j)\n";
  return out.str();
}

}  // namespace bratteli
