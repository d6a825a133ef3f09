#include "chordlab/clutter_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool parse_int(std::string_view s, std::int64_t& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

ClutterFile parse_clutter(std::string_view text, const std::string& source) {
  auto fail = [&](std::size_t line, const std::string& what) -> InputError {
    return InputError(source + ":" + std::to_string(line) + ": " + what);
  };
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> rows;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0].rfind("n=", 0) != 0 || tokens[1].rfind("d=", 0) != 0 ||
          !parse_int(std::string_view(tokens[0]).substr(2), n) || !parse_int(std::string_view(tokens[1]).substr(2), d))
        throw fail(line_no, "expected header 'n=<int> d=<int>'");
      if (n < 0 || n > kMaxVertices) throw fail(line_no, "n must lie in 0..63");
      if (d < -1 || d >= n) throw fail(line_no, "d must satisfy -1 <= d < n");
      have_header = true;
      continue;
    }
    std::vector<std::int64_t> labels;
    if (tokens.size() == 1 && d >= 1 && tokens[0].size() == static_cast<std::size_t>(d + 1) && all_digits(tokens[0])) {
      for (char ch : tokens[0]) labels.push_back(ch - '0');
    } else {
      for (const auto& tok : tokens) {
        std::int64_t v = 0;
        if (!parse_int(tok, v) || v < 0) throw fail(line_no, "bad vertex label '" + tok + "'");
        labels.push_back(v);
      }
    }
    if (static_cast<std::int64_t>(labels.size()) != d + 1)
      throw fail(line_no, "expected " + std::to_string(d + 1) + " labels per circuit, got " + std::to_string(labels.size()));
    std::vector<std::int64_t> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw fail(line_no, "repeated label in circuit");
    rows.emplace_back(line_no, std::move(sorted));
  }
  if (!have_header) throw fail(line_no, "missing header 'n=<int> d=<int>'");

  std::set<std::int64_t> seen;
  for (const auto& [_, labels] : rows) seen.insert(labels.begin(), labels.end());
  const int vertices = static_cast<int>(n);
  LabelMap map;
  if (seen.empty() || (*seen.begin() >= 1 && *seen.rbegin() <= n)) {
    map = LabelMap::one_based(vertices);
  } else if (*seen.rbegin() <= n - 1) {
    map = LabelMap::zero_based(vertices);
  } else if (static_cast<std::int64_t>(seen.size()) == n) {
    map = LabelMap(std::vector<std::int64_t>(seen.begin(), seen.end()));
  } else {
    throw fail(line_no, "labels fit neither 1..n nor 0..n-1 and there are not exactly n distinct labels");
  }

  std::set<FaceSet> circuits;
  for (const auto& [line, labels] : rows) {
    const FaceSet f = map.to_internal(labels);
    if (!circuits.insert(f).second) throw fail(line, "duplicate circuit");
  }
  return {Clutter(vertices, static_cast<int>(d), std::vector<FaceSet>(circuits.begin(), circuits.end())), map};
}

ClutterFile read_clutter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_clutter(buf.str(), path);
}

std::string format_clutter(const Clutter& c, const LabelMap& labels) {
  std::ostringstream out;
  out << "n=" << c.n() << " d=" << c.d() << '\n';
  for (FaceSet f : c) {
    const auto ext = labels.to_external(f);
    for (std::size_t i = 0; i < ext.size(); ++i) out << (i ? " " : "") << ext[i];
    out << '\n';
  }
  return out.str();
}

std::vector<FaceSet> parse_set_list(std::string_view text, int k, const LabelMap& labels) {
  std::vector<FaceSet> out;
  for (const auto& tok : split_whitespace(text)) {
    std::vector<std::int64_t> items;
    if (tok.find(',') != std::string::npos) {
      std::string_view rest = tok;
      if (rest.front() == '{' && rest.back() == '}') rest = rest.substr(1, rest.size() - 2);
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::int64_t v = 0;
        if (!parse_int(rest.substr(0, comma), v)) throw InputError("bad label in '" + tok + "'");
        items.push_back(v);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    } else if (all_digits(tok) && static_cast<int>(tok.size()) == k) {
      for (char ch : tok) items.push_back(ch - '0');
    } else if (k == 1) {
      std::int64_t v = 0;
      if (!parse_int(tok, v)) throw InputError("bad label '" + tok + "'");
      items.push_back(v);
    } else {
      throw InputError("cannot read '" + tok + "' as a set of " + std::to_string(k) + " labels");
    }
    const FaceSet f = labels.to_internal(items);
    if (static_cast<int>(f.size()) != k) throw InputError("'" + tok + "' does not have " + std::to_string(k) + " labels");
    out.push_back(f);
  }
  return out;
}

}  // namespace chordlab
