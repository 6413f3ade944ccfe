#include "morseshed/stack_file.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace morseshed {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class Int>
bool parse_int(std::string_view token, Int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

ValuedComplex parse_stack_file(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  int d = -1;
  std::unordered_map<Simplex, Value, SimplexHash> values;
  std::unordered_map<Simplex, std::size_t, SimplexHash> where;
  SimplexSet listed;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (d < 0) {
      constexpr std::string_view kHeader = "pseudomanifold d=";
      if (line.substr(0, kHeader.size()) != kHeader || !parse_int(line.substr(kHeader.size()), d)) {
        throw ParseError(lineno, "expected header 'pseudomanifold d=<int>'");
      }
      if (d < 1) throw ParseError(lineno, "dimension must be >= 1");
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected '<vertices> : <value>'");
    std::vector<VertexId> verts;
    for (auto tok : split_ws(line.substr(0, colon))) {
      VertexId v{};
      if (!parse_int(tok, v)) throw ParseError(lineno, "bad vertex id '" + std::string(tok) + "'");
      verts.push_back(v);
    }
    const auto value_tokens = split_ws(line.substr(colon + 1));
    Value value{};
    if (value_tokens.size() != 1 || !parse_int(value_tokens[0], value)) {
      throw ParseError(lineno, "expected exactly one integer value after ':'");
    }
    std::optional<Simplex> s;
    try {
      s.emplace(std::move(verts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    if (!values.emplace(*s, value).second) {
      throw ParseError(lineno, "duplicate record for {" + s->to_string() + "} (first at line " +
                                   std::to_string(where.at(*s)) + ")");
    }
    where.emplace(*s, lineno);
    listed.insert(*s);
  }
  if (d < 0) throw ParseError(lineno, "missing header 'pseudomanifold d=<int>'");

  for (const auto& s : listed.sorted()) {
    if (auto missing = first_missing_facet(listed, s)) {
      throw ParseError(where.at(s), "no record for {" + missing->to_string() + "}, a face of {" +
                                        s.to_string() + "}");
    }
  }
  auto [space, report] = validate_pseudomanifold(Complex::from_closed(listed), d);
  if (!space) {
    std::string msg = "not a " + std::to_string(d) + "-pseudomanifold:";
    for (const auto& v : report.violations()) msg += " " + v.describe() + ";";
    throw ParseError(0, msg);
  }
  return ValuedComplex::from_map(std::move(space), values);
}

ValuedComplex parse_stack_text(const std::string& text) {
  std::istringstream in(text);
  return parse_stack_file(in);
}

void write_stack_file(std::ostream& out, const ValuedComplex& v) {
  out << "pseudomanifold d=" << v.d() << '\n';
  const auto& lat = v.lattice();
  for (SimplexId id = 0; id < lat.size(); ++id) {
    out << lat.at(id).to_string() << " : " << v[id] << '\n';
  }
}

std::string serialize_stack_file(const ValuedComplex& v) {
  std::ostringstream out;
  write_stack_file(out, v);
  return out.str();
}

}  // namespace morseshed
