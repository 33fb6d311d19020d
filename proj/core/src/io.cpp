#include "locale_lab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "locale_lab/errors.hpp"

namespace lab {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

ParsedInput parse_input_text(std::string_view text,
                             std::string_view source_name) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  bool is_space = false;
  std::string name;
  bool header_seen = false, points_seen = false;
  std::vector<std::string> points;
  std::map<std::string, int> point_index;
  std::vector<uint64_t> opens;
  std::vector<std::pair<int, int>> le_pairs;

  auto index_of = [&](const std::string& p, int at_line) {
    auto it = point_index.find(p);
    if (it == point_index.end())
      throw ParseError(at_line, "undeclared point '" + p + "'");
    return it->second;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks[0] != "space" && toks[0] != "poset")
        throw ParseError(lineno, "expected 'space <name>' or 'poset <name>'");
      if (toks.size() != 2)
        throw ParseError(lineno, "header takes exactly one name");
      is_space = toks[0] == "space";
      name = toks[1];
      header_seen = true;
      continue;
    }
    if (toks[0] == "points:") {
      if (points_seen) throw ParseError(lineno, "duplicate points: line");
      points_seen = true;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (point_index.count(toks[i]))
          throw ParseError(lineno, "duplicate point '" + toks[i] + "'");
        point_index[toks[i]] = static_cast<int>(points.size());
        points.push_back(toks[i]);
      }
      if (points.size() > 64)
        throw ParseError(lineno, "at most 64 points are supported");
      continue;
    }
    if (!points_seen)
      throw ParseError(lineno, "points: must come before " + toks[0]);
    if (toks[0] == "open:") {
      if (!is_space) throw ParseError(lineno, "open: is only valid in a space");
      uint64_t mask = 0;
      for (size_t i = 1; i < toks.size(); ++i)
        mask |= uint64_t{1} << index_of(toks[i], lineno);
      opens.push_back(mask);
      continue;
    }
    if (toks[0] == "le:") {
      if (is_space) throw ParseError(lineno, "le: is only valid in a poset");
      if (toks.size() != 3) throw ParseError(lineno, "le: takes two points");
      le_pairs.emplace_back(index_of(toks[1], lineno),
                            index_of(toks[2], lineno));
      continue;
    }
    throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
  }
  if (!header_seen)
    throw ParseError(lineno == 0 ? 1 : lineno, "empty input: missing header");
  if (!points_seen)
    throw ParseError(lineno, "missing points: line in " +
                                 std::string(source_name));

  if (is_space) {
    FiniteSpace X;
    X.points = std::move(points);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    X.opens = std::move(opens);
    X.validate();
    return ParsedInput{std::move(name), std::move(X)};
  }

  const int n = static_cast<int>(points.size());
  Poset P;
  P.names = std::move(points);
  P.leq_rows.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a) P.leq_rows[a].set(a);
  for (auto [a, b] : le_pairs) P.leq_rows[a].set(b);
  // Reflexive-transitive closure (Warshall over bit rows).
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (P.leq_rows[a].test(k)) P.leq_rows[a] |= P.leq_rows[k];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (P.leq_rows[a].test(b) && P.leq_rows[b].test(a))
        throw NotAPartialOrder("order cycle through '" + P.names[a] +
                               "' and '" + P.names[b] + "'");
  return ParsedInput{std::move(name), std::move(P)};
}

ParsedInput parse_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), path.string());
}

}  // namespace lab
