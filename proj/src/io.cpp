#include "oaparity/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace oaparity {

namespace {

// Non-blank, non-comment lines split into tokens, with 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t line = 0, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line;
      std::string_view raw = text.substr(start, end - start);
      std::vector<std::string> tokens;
      std::istringstream is{std::string(raw)};
      for (std::string tok; is >> tok;) tokens.push_back(tok);
      if (!tokens.empty() && tokens.front()[0] != '#') lines_.push_back({line, std::move(tokens)});
      start = end + 1;
    }
  }

  bool done() const { return next_ == lines_.size(); }
  std::size_t line() const { return done() ? (lines_.empty() ? 1 : lines_.back().number) : lines_[next_].number; }

  const std::vector<std::string>& take(const char* what) {
    if (done()) throw ParseError(line(), std::string("unexpected end of input, expected ") + what);
    return lines_[next_++].tokens;
  }

  int integer(const std::string& tok, std::size_t line) const {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
  }

  std::vector<int> integers(std::size_t count, const char* what) {
    const std::size_t at = line();
    const auto& tokens = take(what);
    if (tokens.size() != count) {
      throw ParseError(at, std::string("expected ") + std::to_string(count) + " values in " + what + ", got " +
                               std::to_string(tokens.size()));
    }
    std::vector<int> out;
    for (const auto& t : tokens) out.push_back(integer(t, at));
    return out;
  }

  void expect_end() const {
    if (!done()) throw ParseError(line(), "unexpected trailing content");
  }

 private:
  struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
  };
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

int check_base(int base, std::size_t line) {
  if (base != 0 && base != 1) throw ParseError(line, "base must be 0 or 1");
  return base;
}

std::vector<int> shift(std::vector<int> v, int base, int n, std::size_t line) {
  for (int& x : v) {
    x -= base;
    if (x < 0 || x >= n) throw ParseError(line, "symbol " + std::to_string(x + base) + " out of range for n = " + std::to_string(n));
  }
  return v;
}

LatinSquare read_square(LineReader& in, int n, int base) {
  std::vector<int> cells;
  for (int r = 0; r < n; ++r) {
    const std::size_t at = in.line();
    auto row = shift(in.integers(static_cast<std::size_t>(n), "Latin square row"), base, n, at);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  const std::size_t at = in.line();
  try {
    return LatinSquare(n, std::move(cells));
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw DomainError("square ending before line " + std::to_string(at) + ": " + e.what());
  }
}

std::string lowercase(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

bool looks_like_json(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string_view::npos && text[p] == '{';
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(1, std::string("JSON field '") + key + "' is missing");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(1, std::string("JSON field '") + key + "' has the wrong type: " + e.what());
  }
}

}  // namespace

OrthogonalArray parse_oa_text(std::string_view text) {
  LineReader in(text);
  const std::size_t at = in.line();
  const auto& head = in.take("OA header");
  if (head.size() != 4 || head[0] != "OA") throw ParseError(at, "expected header 'OA k n base'");
  const int k = in.integer(head[1], at), n = in.integer(head[2], at), base = check_base(in.integer(head[3], at), at);
  if (k < 3 || n < 2 || n > 1024) throw ParseError(at, "need k >= 3 and 2 <= n <= 1024");
  std::vector<int> rows;
  for (int r = 0; r < n * n; ++r) {
    const std::size_t row_line = in.line();
    auto row = shift(in.integers(static_cast<std::size_t>(k), "OA row"), base, n, row_line);
    rows.insert(rows.end(), row.begin(), row.end());
  }
  in.expect_end();
  return OrthogonalArray(k, n, std::move(rows));
}

std::string format_oa_text(const OrthogonalArray& a, int base) {
  std::ostringstream os;
  os << "OA " << a.columns() << ' ' << a.order() << ' ' << base << '\n';
  for (int r = 0; r < a.row_count(); ++r) {
    for (int c = 0; c < a.columns(); ++c) os << (c ? " " : "") << a.at(r, c) + base;
    os << '\n';
  }
  return os.str();
}

LatinSquare parse_ls_text(std::string_view text) {
  LineReader in(text);
  const std::size_t at = in.line();
  const auto& head = in.take("LS header");
  if (head.size() != 3 || head[0] != "LS") throw ParseError(at, "expected header 'LS n base'");
  const int n = in.integer(head[1], at), base = check_base(in.integer(head[2], at), at);
  if (n < 1 || n > 1024) throw ParseError(at, "need 1 <= n <= 1024");
  LatinSquare s = read_square(in, n, base);
  in.expect_end();
  return s;
}

std::string format_ls_text(const LatinSquare& s, int base) {
  std::ostringstream os;
  os << "LS " << s.order() << ' ' << base << '\n';
  for (int r = 0; r < s.order(); ++r) {
    for (int c = 0; c < s.order(); ++c) os << (c ? " " : "") << s.at(r, c) + base;
    os << '\n';
  }
  return os.str();
}

SigmaMatrix parse_sigma_text(std::string_view text) {
  LineReader in(text);
  const std::size_t at = in.line();
  const auto& head = in.take("SIGMA header");
  if (head.size() != 3 || head[0] != "SIGMA") throw ParseError(at, "expected header 'SIGMA k n'");
  const int k = in.integer(head[1], at), n = in.integer(head[2], at);
  if (k < 3 || n < 2) throw ParseError(at, "need k >= 3 and n >= 2");
  SigmaMatrix m(k, n);
  for (int i = 0; i < k; ++i) {
    const std::size_t row_line = in.line();
    const auto row = in.integers(static_cast<std::size_t>(k), "sigma row");
    for (int j = 0; j < k; ++j) {
      const int v = row[static_cast<std::size_t>(j)];
      if (v != 0 && v != 1) throw ParseError(row_line, "sigma entries must be 0 or 1");
      if (i == j) {
        if (v) throw ParseError(row_line, "sigma diagonal must be 0");
      } else {
        m.set(i, j, static_cast<Bit>(v));
      }
    }
  }
  in.expect_end();
  if (!m.satisfies_pair_law()) throw DomainError("sigma matrix violates the transpose law for n = " + std::to_string(n));
  return m;
}

std::string format_sigma_text(const SigmaMatrix& s) {
  std::ostringstream os;
  os << "SIGMA " << s.columns() << ' ' << s.order() << '\n';
  for (int i = 0; i < s.columns(); ++i) {
    for (int j = 0; j < s.columns(); ++j) os << (j ? " " : "") << int{s.at(i, j)};
    os << '\n';
  }
  return os.str();
}

Json oa_to_json(const OrthogonalArray& a, int base) {
  Json rows = Json::array();
  for (int r = 0; r < a.row_count(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.columns(); ++c) row.push_back(a.at(r, c) + base);
    rows.push_back(std::move(row));
  }
  return Json{{"format", "oa"}, {"k", a.columns()}, {"n", a.order()}, {"base", base}, {"rows", std::move(rows)}};
}

OrthogonalArray oa_from_json(const Json& j) {
  const int k = field<int>(j, "k"), n = field<int>(j, "n");
  const int base = check_base(j.value("base", 0), 1);
  const auto rows = field<std::vector<std::vector<int>>>(j, "rows");
  if (k < 3 || n < 2 || n > 1024) throw ParseError(1, "need k >= 3 and 2 <= n <= 1024");
  if (rows.size() != static_cast<std::size_t>(n * n)) throw ParseError(1, "an OA needs n^2 rows");
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(k)) throw ParseError(1, "every OA row needs k entries");
    auto shifted = shift(r, base, n, 1);
    flat.insert(flat.end(), shifted.begin(), shifted.end());
  }
  return OrthogonalArray(k, n, std::move(flat));
}

Json ls_to_json(const LatinSquare& s, int base) {
  Json cells = Json::array();
  for (int r = 0; r < s.order(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < s.order(); ++c) row.push_back(s.at(r, c) + base);
    cells.push_back(std::move(row));
  }
  return Json{{"format", "ls"}, {"n", s.order()}, {"base", base}, {"cells", std::move(cells)}};
}

LatinSquare ls_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  const int base = check_base(j.value("base", 0), 1);
  const auto cells = field<std::vector<std::vector<int>>>(j, "cells");
  if (n < 1 || n > 1024 || cells.size() != static_cast<std::size_t>(n)) throw ParseError(1, "a Latin square needs n rows");
  std::vector<int> flat;
  for (const auto& r : cells) {
    if (r.size() != static_cast<std::size_t>(n)) throw ParseError(1, "every Latin square row needs n entries");
    auto shifted = shift(r, base, n, 1);
    flat.insert(flat.end(), shifted.begin(), shifted.end());
  }
  return LatinSquare(n, std::move(flat));
}

Json sigma_to_json(const SigmaMatrix& s) {
  Json rows = Json::array();
  for (int i = 0; i < s.columns(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < s.columns(); ++j) row.push_back(int{s.at(i, j)});
    rows.push_back(std::move(row));
  }
  return Json{{"format", "sigma"}, {"k", s.columns()}, {"n", s.order()}, {"matrix", std::move(rows)}};
}

SigmaMatrix sigma_from_json(const Json& j) {
  const int k = field<int>(j, "k"), n = field<int>(j, "n");
  const auto rows = field<std::vector<std::vector<int>>>(j, "matrix");
  if (k < 3 || n < 2 || rows.size() != static_cast<std::size_t>(k)) throw ParseError(1, "sigma matrix needs k rows");
  SigmaMatrix m(k, n);
  for (int i = 0; i < k; ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(k)) throw ParseError(1, "sigma rows need k entries");
    for (int c = 0; c < k; ++c) {
      const int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (v != 0 && v != 1) throw ParseError(1, "sigma entries must be 0 or 1");
      if (i == c) {
        if (v) throw ParseError(1, "sigma diagonal must be 0");
      } else {
        m.set(i, c, static_cast<Bit>(v));
      }
    }
  }
  if (!m.satisfies_pair_law()) throw DomainError("sigma matrix violates the transpose law for n = " + std::to_string(n));
  return m;
}

namespace {

Json tau_entries(const TauVector& t) {
  Json entries = Json::array();
  for (int c = 0; c < t.columns(); ++c)
    for (int i = 0; i < t.columns(); ++i)
      for (int j = i + 1; j < t.columns(); ++j)
        if (i != c && j != c) entries.push_back(Json::array({c + 1, i + 1, j + 1, int{t.get(c, i, j)}}));
  return entries;
}

}  // namespace

Json tau_to_json(const TauVector& t) {
  return Json{{"format", "tau"}, {"k", t.columns()}, {"n", t.order()}, {"tau", tau_entries(t)}};
}

TauVector tau_from_json(const Json& j) {
  const int k = field<int>(j, "k"), n = field<int>(j, "n");
  if (k < 3 || n < 2) throw ParseError(1, "need k >= 3 and n >= 2");
  TauVector t(k, n);
  const auto entries = field<std::vector<std::vector<int>>>(j, "tau");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(k * k * k), 0);
  for (const auto& e : entries) {
    if (e.size() != 4) throw ParseError(1, "tau entries are [c, i, j, bit]");
    const int c = e[0] - 1, i = e[1] - 1, jj = e[2] - 1, bit = e[3];
    if (c < 0 || i < 0 || jj < 0 || c >= k || i >= k || jj >= k || c == i || c == jj || i == jj) {
      throw ParseError(1, "tau index out of range");
    }
    if (bit != 0 && bit != 1) throw ParseError(1, "tau bits must be 0 or 1");
    t.set(c, i, jj, static_cast<Bit>(bit));
    seen[static_cast<std::size_t>((c * k + std::min(i, jj)) * k + std::max(i, jj))] = 1;
  }
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < k; ++i)
      for (int jj = i + 1; jj < k; ++jj)
        if (i != c && jj != c && !seen[static_cast<std::size_t>((c * k + i) * k + jj)]) {
          throw ParseError(1, "tau entry (" + std::to_string(c + 1) + "," + std::to_string(i + 1) + "," +
                                  std::to_string(jj + 1) + ") is missing");
        }
  return t;
}

Json parity_report_json(const TauVector& t) {
  const auto report = check_plausible(t);
  Json sigma = Json::array();
  if (report.plausible) {
    const StandardSigma s = sigma_from_tau(t);
    for (int i = 0; i < t.columns(); ++i)
      for (int j = i + 1; j < t.columns(); ++j) sigma.push_back(Json::array({i + 1, j + 1, int{s.upper(i, j)}}));
  }
  return Json{{"tau", tau_entries(t)},
              {"sigma_standard", std::move(sigma)},
              {"plausible", report.plausible},
              {"pp_plausible", to_string(report.pp_plausible)}};
}

Json census_to_json(const EnsembleCensus& c) {
  Json types = Json::object();
  for (int code = 0; code < 8; ++code) types[ParityTriple::from_code(code).label()] = c.type_counts[static_cast<std::size_t>(code)];
  return Json{{"k", c.k}, {"n", c.n}, {"type_counts", std::move(types)}, {"x", c.x}, {"T", c.T}, {"mu", c.mu}};
}

Json section6_to_json(const Section6Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return checks;
}

Json orbit_to_json(const OrbitSummary& o) {
  return Json{{"k", o.canonical.k}, {"nmod4", o.canonical.nmod4}, {"size", o.size}, {"canonical", o.canonical.bits}};
}

Json class_table_to_json(const ClassTable& t) {
  Json entries = Json::array();
  for (const auto& [size, count] : t.entries) entries.push_back(Json{{"size", size}, {"count", count}});
  return Json{{"k", t.k}, {"nmod4", t.nmod4}, {"classes", t.total_classes}, {"entries", std::move(entries)}};
}

ArrayInput parse_array(std::string_view text) {
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    const std::string format = lowercase(j.value("format", std::string("oa")));
    if (format == "oa") return {oa_from_json(j), false};
    if (format == "ls") {
      const std::vector<LatinSquare> one{ls_from_json(j)};
      return {mols_to_oa(one), true};
    }
    throw ParseError(1, "unknown JSON format '" + format + "'");
  }
  LineReader peek(text);
  if (peek.done()) throw ParseError(1, "empty input");
  const std::string head = peek.take("header").front();
  if (head == "OA") return {parse_oa_text(text), false};
  if (head == "LS") {
    const std::vector<LatinSquare> one{parse_ls_text(text)};
    return {mols_to_oa(one), true};
  }
  throw ParseError(peek.line(), "expected an 'OA' or 'LS' header, got '" + head + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ArrayInput read_array(const std::filesystem::path& path) { return parse_array(read_file(path)); }

TauVector parse_parity(std::string_view text) {
  if (looks_like_json(text)) {
    const Json j = parse_json(text);
    const std::string format = lowercase(j.value("format", std::string(j.contains("tau") ? "tau" : "sigma")));
    if (format == "tau") return tau_from_json(j);
    if (format == "sigma") return tau_from_sigma(sigma_from_json(j));
    throw ParseError(1, "expected a sigma or tau JSON document, got format '" + format + "'");
  }
  return tau_from_sigma(parse_sigma_text(text));
}

std::vector<CatalogueEntry> parse_catalogue(std::string_view text) {
  LineReader in(text);
  std::vector<CatalogueEntry> out;
  while (!in.done()) {
    const std::size_t at = in.line();
    const auto head = in.take("MOLSSET header");
    if (head.size() < 5 || head[0] != "MOLSSET") throw ParseError(at, "expected header 'MOLSSET label n count base'");
    CatalogueEntry e;
    e.label = head[1];
    const int n = in.integer(head[2], at), count = in.integer(head[3], at), base = check_base(in.integer(head[4], at), at);
    if (n < 2 || n > 1024) throw ParseError(at, "need 2 <= n <= 1024");
    if (count < 1 || count > n - 1) throw ParseError(at, "a set of MOLS(n) holds between 1 and n-1 squares");
    for (std::size_t t = 5; t < head.size(); ++t) e.note += (t > 5 ? " " : "") + head[t];
    for (int s = 0; s < count; ++s) e.squares.push_back(read_square(in, n, base));
    try {
      (void)mols_to_oa(e.squares);
    } catch (const DomainError& err) {
      throw DomainError("set '" + e.label + "': " + err.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogueEntry> ingest_catalogue(const std::filesystem::path& path) { return parse_catalogue(read_file(path)); }

std::string format_catalogue_entry(const CatalogueEntry& e, int base) {
  std::ostringstream os;
  const int n = e.squares.empty() ? 0 : e.squares.front().order();
  os << "MOLSSET " << e.label << ' ' << n << ' ' << e.squares.size() << ' ' << base;
  if (!e.note.empty()) os << ' ' << e.note;
  os << '\n';
  for (const auto& s : e.squares) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) os << (c ? " " : "") << s.at(r, c) + base;
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace oaparity
