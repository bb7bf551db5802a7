#include "syzgap/io.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "syzgap/error.hpp"

namespace syzgap {

namespace {

void need_two_axes(const FractalGrid& g, const char* what) {
  if (g.axes() != 2) throw Error(std::string(what) + " needs a two-axis grid, got " + std::to_string(g.axes()));
}

std::int64_t to_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("csv line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
}

}  // namespace

void write_csv(std::ostream& out, const FractalGrid& g) {
  const int k = g.axes();
  for (int i = 0; i < k; ++i) out << 'a' << i + 1 << ',';
  out << "num,den\n";
  for (std::size_t f = 0; f < g.values.size(); ++f) {
    for (int a : g.index(f)) out << a << ',';
    out << g.values[f] << ',' << g.q << '\n';
  }
}

FractalGrid read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("csv: empty input");
  std::vector<std::string> head;
  boost::split(head, line, boost::is_any_of(","));
  if (head.size() < 2 || head[head.size() - 2] != "num" || head.back() != "den")
    throw Error("csv: header must end with num,den");
  const int k = static_cast<int>(head.size()) - 2;
  for (int i = 0; i < k; ++i)
    if (head[static_cast<std::size_t>(i)] != "a" + std::to_string(i + 1))
      throw Error("csv: unexpected column '" + head[static_cast<std::size_t>(i)] + "'");

  FractalGrid g;
  g.slice = Slice::identity(k);
  std::vector<std::pair<std::vector<int>, std::int64_t>> rows;
  std::size_t ln = 1;
  bool have_q = false;
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    std::vector<std::string> f;
    boost::split(f, line, boost::is_any_of(","));
    if (f.size() != head.size()) throw Error("csv line " + std::to_string(ln) + ": wrong field count");
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(static_cast<int>(to_int(f[static_cast<std::size_t>(i)], ln)));
    std::int64_t den = to_int(f.back(), ln);
    if (den < 1) throw Error("csv line " + std::to_string(ln) + ": bad denominator");
    if (!have_q) g.q = static_cast<std::uint64_t>(den), have_q = true;
    if (static_cast<std::uint64_t>(den) != g.q) throw Error("csv line " + std::to_string(ln) + ": mixed levels");
    rows.emplace_back(std::move(idx), to_int(f[f.size() - 2], ln));
  }
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= g.side();
  if (rows.size() != total) throw Error("csv: expected " + std::to_string(total) + " rows, got " + std::to_string(rows.size()));
  g.values.assign(total, 0);
  std::vector<bool> seen(total, false);
  for (auto& [idx, v] : rows) {
    for (int a : idx)
      if (a < 0 || static_cast<std::size_t>(a) >= g.side()) throw Error("csv: index outside the grid");
    std::size_t f = g.flat(idx);
    if (seen[f]) throw Error("csv: duplicate point");
    seen[f] = true;
    g.values[f] = v;
  }
  return g;
}

std::string rational_str(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json to_json(const RationalPoint& t) { return t.str(); }

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations)
    v.push_back({{"point", to_json(x.point)},
                 {"expected", rational_str(x.expected.value())},
                 {"actual", rational_str(x.actual.value())}});
  return {{"theorem", r.theorem}, {"q", r.q}, {"checked", r.checked}, {"violations", v}};
}

nlohmann::json to_json(const OrbitGraph& g) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& n : g.nodes) {
    nlohmann::json j{{"id", n.id}, {"depth", n.depth}, {"linear", n.linear}};
    j["cell"] = format_poly(n.rep.F) + ";" + format_poly(n.rep.G) + ";" + format_poly(n.rep.H);
    nodes.push_back(j);
  }
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"b", e.b}});
  return {{"closed", g.closed}, {"nodes", nodes}, {"edges", edges}};
}

void write_pgm(std::ostream& out, const FractalGrid& g, bool binary) {
  need_two_axes(g, "pgm output");
  const auto side = g.side();
  const std::int64_t top = std::max<std::int64_t>(0, *std::max_element(g.values.begin(), g.values.end()));
  auto pixel = [&](int a1, int a2) -> int {
    std::int64_t v = g.at({a1, a2});
    if (top == 0 || v <= 0) return 0;
    return static_cast<int>((510 * v + top) / (2 * top));  // round half up
  };
  out << (binary ? "P5" : "P2") << '\n' << side << ' ' << side << "\n255\n";
  for (auto r = static_cast<int>(side) - 1; r >= 0; --r) {
    for (int c = 0; c < static_cast<int>(side); ++c) {
      int px = pixel(c, r);
      if (binary) {
        out.put(static_cast<char>(px));
      } else {
        if (c) out << ' ';
        out << px;
      }
    }
    if (!binary) out << '\n';
  }
}

std::string ascii_table(const FractalGrid& g, const TableOptions& opt) {
  need_two_axes(g, "table output");
  const int q = static_cast<int>(g.q);
  const int hi1 = opt.hi1 < 0 ? q : opt.hi1, hi2 = opt.hi2 < 0 ? q : opt.hi2;
  if (opt.lo1 < 0 || opt.lo2 < 0 || opt.lo1 > hi1 || opt.lo2 > hi2 || hi1 > q || hi2 > q)
    throw Error("table window must lie in [0," + std::to_string(q) + "]^2");
  std::size_t width = 1;
  std::vector<std::vector<std::string>> cells;
  for (int r = hi2; r >= opt.lo2; --r) {
    std::vector<std::string> row;
    for (int c = opt.lo1; c <= hi1; ++c) {
      std::string s;
      if (opt.mask_linear && c + r >= q) {
        s = "";
      } else {
        std::int64_t v = g.at({c, r});
        if (opt.halve) {
          if (v % 2) throw Error("odd value at (" + std::to_string(c) + "," + std::to_string(r) + ") cannot be halved");
          v /= 2;
        }
        s = v == 0 ? "." : std::to_string(v);
      }
      width = std::max(width, s.size());
      row.push_back(s);
    }
    cells.push_back(std::move(row));
  }
  const std::size_t label = std::to_string(hi2).size();
  width = std::max(width, std::to_string(hi1).size());
  std::string body;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::ostringstream os;
    os << std::setw(static_cast<int>(label)) << hi2 - static_cast<int>(k) << " |";
    for (const auto& s : cells[k]) os << ' ' << std::setw(static_cast<int>(width)) << s;
    std::string line = os.str();
    boost::trim_right(line);
    body += line + '\n';
  }
  std::ostringstream foot;
  foot << std::string(label, ' ') << " +" << std::string((width + 1) * (static_cast<std::size_t>(hi1 - opt.lo1) + 1), '-')
       << '\n'
       << std::string(label + 2, ' ');
  for (int c = opt.lo1; c <= hi1; ++c) foot << ' ' << std::setw(static_cast<int>(width)) << c;
  foot << '\n';
  return body + foot.str();
}

}  // namespace syzgap
