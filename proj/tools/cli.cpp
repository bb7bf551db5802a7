#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <boost/algorithm/string.hpp>

#include "syzgap/han.hpp"
#include "syzgap/hilbert_kunz.hpp"
#include "syzgap/io.hpp"
#include "syzgap/operators.hpp"
#include "syzgap/syzygy.hpp"

namespace syzgap {

namespace {

using nlohmann::json;

// Error tagged with the flag it came from.
Error flag_error(const std::string& flag, const std::string& token, const std::string& what) {
  return Error(flag + " '" + token + "': " + what);
}

std::vector<std::string> split(const std::string& text, const char* sep) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(sep));
  for (auto& s : parts) boost::trim(s);
  return parts;
}

struct FieldArgs {
  std::uint64_t p = 3;
  unsigned e = 1;
  std::string modulus;

  void add(CLI::App* app) {
    app->add_option("--p", p, "characteristic")->capture_default_str();
    app->add_option("--e", e, "extension degree")->capture_default_str();
    app->add_option("--modulus", modulus, "defining polynomial in e, e.g. \"e^2+2e+2\"");
  }

  FieldPtr field() const {
    try {
      if (modulus.empty()) return e == 1 ? FieldSpec::prime(p) : FieldSpec::make(p, e, FieldSpec::default_modulus(p, e));
      return FieldSpec::parse(p, e, modulus);
    } catch (const Error& ex) {
      throw flag_error("--modulus", modulus, ex.what());
    }
  }
};

HomogPoly poly_arg(const std::string& flag, const std::string& text, const FieldPtr& f) {
  try {
    return parse_poly(text, f);
  } catch (const Error& ex) {
    throw flag_error(flag, text, ex.what());
  }
}

std::vector<HomogPoly> forms_arg(const std::string& text, const FieldPtr& f) {
  std::vector<HomogPoly> forms;
  for (const auto& t : split(text, ",")) {
    HomogPoly l = poly_arg("--forms", t, f);
    if (l.degree() != 1) throw flag_error("--forms", t, "not a linear form");
    forms.push_back(l);
  }
  if (!pairwise_prime(forms)) throw flag_error("--forms", text, "forms must be pairwise prime");
  return forms;
}

std::vector<int> ints_arg(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split(text, ",")) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw flag_error(flag, t, "not an integer");
    }
  }
  return out;
}

struct CellArgs {
  FieldArgs fa;
  std::string forms, cell;

  void add(CLI::App* app, bool required = true) {
    fa.add(app);
    auto* f = app->add_option("--forms", forms, "comma-separated linear forms");
    auto* c = app->add_option("--cell", cell, "\"F;G;H\" with H optional");
    if (required) {
      f->required();
      c->required();
    }
  }

  Cell make() const {
    FieldPtr f = fa.field();
    auto ls = forms_arg(forms, f);
    auto parts = split(cell, ";");
    if (parts.size() < 2 || parts.size() > 3) throw flag_error("--cell", cell, "expected F;G or F;G;H");
    if (parts.size() == 2) parts.push_back("1");
    try {
      return Cell::make(poly_arg("--cell", parts[0], f), poly_arg("--cell", parts[1], f),
                        poly_arg("--cell", parts[2], f), ls);
    } catch (const Error& ex) {
      throw flag_error("--cell", cell, ex.what());
    }
  }
};

RationalPoint point_arg(const std::string& text, std::uint64_t p, std::size_t n) {
  RationalPoint t;
  try {
    t = parse_point(text, p);
  } catch (const Error& ex) {
    throw flag_error("--point", text, ex.what());
  }
  if (t.n() != n) throw flag_error("--point", text, "expected " + std::to_string(n) + " coordinates");
  return t;
}

Slice slice_arg(const std::string& text, int n) {
  if (text.empty()) return Slice::identity(n);
  try {
    return Slice::parse(text, n);
  } catch (const Error& ex) {
    throw flag_error("--slice", text, ex.what());
  }
}

std::string cell_str(const Cell& c) { return format_poly(c.F) + ";" + format_poly(c.G) + ";" + format_poly(c.H); }

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path, bool binary = false) : out_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, binary ? std::ios::binary : std::ios::out);
    if (!file_) throw flag_error("--out", path, "cannot open for writing");
    out_ = &file_;
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

json maxima_json(const FractalGrid& g) {
  json arr = json::array();
  for (const auto& [pt, v] : local_maxima(g)) arr.push_back({{"point", pt.str()}, {"value", rational_str(v.value())}});
  return arr;
}

int report_exit(const VerificationReport& r) { return r.passed() ? 0 : 1; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syzygy gap fractals over finite fields"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  CellArgs ca;
  std::string point, slice, format = "csv", outpath, b_text, window;
  std::uint64_t q = 9, q2 = 0;
  int axis = 1, depth = 3;
  bool binary = false, cross = false, full = false, raw = false, large = false;

  auto* eval = app.add_subcommand("eval", "delta_C at one point");
  ca.add(eval);
  eval->add_option("--point", point, "a1/q,...,an/q")->required();

  auto* grid = app.add_subcommand("grid", "delta_C over a slice of X_q");
  ca.add(grid);
  grid->add_option("--q", q)->required();
  grid->add_option("--slice", slice, "e.g. t1,t1,t2,t2 (default: all axes)");
  grid->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "pgm", "ascii"}))->capture_default_str();
  grid->add_option("--out", outpath);

  auto* zeros = app.add_subcommand("zeros", "zero set on a slice of X_q");
  ca.add(zeros);
  zeros->add_option("--q", q)->required();
  zeros->add_option("--slice", slice);

  auto* maxima = app.add_subcommand("maxima", "strict local maxima on a slice of X_q");
  ca.add(maxima);
  maxima->add_option("--q", q)->required();
  maxima->add_option("--slice", slice);

  auto* verify = app.add_subcommand("verify", "structure theorem verifiers");
  verify->require_subcommand(1);
  auto* vA = verify->add_subcommand("A", "delta_C is the taxicab distance to the zero set");
  auto* vB = verify->add_subcommand("B", "cone around a local maximum");
  auto* vC = verify->add_subcommand("C", "q delta_C <= n - 2 at reduced maxima");
  for (auto* s : {vA, vC}) {
    ca.add(s);
    s->add_option("--q", q)->required();
  }
  ca.add(vB);
  vB->add_option("--point", point, "the local maximum")->required();
  vB->add_option("--q2", q2, "refinement level (default 3q)");

  auto* han = app.add_subcommand("han", "Han's delta* for (x^a1, y^a2, (x+y)^a3)");
  std::uint64_t hp = 3;
  han->add_option("--p", hp)->capture_default_str();
  han->add_option("--point", point, "t1,t2,t3");
  han->add_flag("--cross-check", cross, "compare with the syzygy gap on all of X_q");
  han->add_option("--q", q);

  auto* reflect_cmd = app.add_subcommand("reflect", "cell for t_i -> 1 - t_i");
  ca.add(reflect_cmd);
  reflect_cmd->add_option("--axis", axis, "1-based coordinate")->required();

  auto* magnify_cmd = app.add_subcommand("magnify", "cell of T_{q|b}");
  ca.add(magnify_cmd);
  magnify_cmd->add_option("--q", q)->required();
  magnify_cmd->add_option("--b", b_text, "b1,...,bn")->required();

  auto* canon = app.add_subcommand("canon", "colon reduction and canonical representative");
  ca.add(canon);

  auto* orbit = app.add_subcommand("orbit", "closure under the magnifications T_{p|b}");
  ca.add(orbit);
  orbit->add_option("--depth", depth)->capture_default_str();
  orbit->add_option("--out", outpath);

  auto* hk = app.add_subcommand("hk", "Hilbert-Kunz functions");
  hk->require_subcommand(1);
  auto* hphi = hk->add_subcommand("phi", "phi_C and phi_I at a point");
  ca.add(hphi);
  hphi->add_option("--point", point)->required();
  auto* hid = hk->add_subcommand("identity", "phi identities on all of X_q");
  ca.add(hid);
  hid->add_option("--q", q)->required();
  auto* hnb = hk->add_subcommand("newbound", "three-colength inequality");
  ca.add(hnb);
  hnb->add_option("--point", point)->required();
  hnb->add_option("--axis", axis, "1-based coordinate")->capture_default_str();
  auto* hsurf = hk->add_subcommand("surface", "colength of (l^c - z^m H, U^q, V^q, z^q)");
  FieldArgs sf;
  std::string su, sv, sforms, sc, shlin;
  int sm = 1;
  sf.add(hsurf);
  hsurf->add_option("--U", su)->required();
  hsurf->add_option("--V", sv)->required();
  hsurf->add_option("--forms", sforms)->required();
  hsurf->add_option("--c", sc, "exponents c1,...,cn")->required();
  hsurf->add_option("--m", sm)->capture_default_str();
  hsurf->add_option("--hlin", shlin, "form of degree r - m")->required();
  hsurf->add_option("--q", q)->required();
  hsurf->add_flag("--large", large, "allow q > p^2");

  auto* plot = app.add_subcommand("plot", "PGM relief of a two-axis slice");
  ca.add(plot);
  plot->add_option("--q", q)->required();
  plot->add_option("--slice", slice)->required();
  plot->add_flag("--binary", binary, "P5 instead of P2");
  plot->add_option("--out", outpath);

  auto* table = app.add_subcommand("table", "integer table of Delta/2 on a two-axis slice");
  CellArgs ta;
  ta.fa.e = 2;
  ta.fa.modulus = "e^2+2e+2";
  ta.forms = "x,y,x+y,x+e*y";
  ta.cell = "x;y";
  ta.add(table, false);
  std::uint64_t tq = 81;
  std::string tslice = "t1,t1,t2,t2";
  table->add_option("--q", tq)->capture_default_str();
  table->add_option("--slice", tslice)->capture_default_str();
  table->add_option("--window", window, "i0:i1,j0:j1");
  table->add_flag("--full", full, "keep the region a1 + a2 >= q");
  table->add_flag("--raw", raw, "print Delta instead of Delta/2");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      Cell c = ca.make();
      auto t = point_arg(point, c.field()->characteristic(), c.forms.size());
      GapValue v = delta_at(c, t);
      out << rational_str(v.value()) << '\n';
      return 0;
    }
    if (*grid || *zeros || *maxima || *plot) {
      Cell c = ca.make();
      FractalGrid g = grid_eval(c, q, slice_arg(slice, c.n()));
      if (*zeros) {
        for (const auto& t : zero_set(g)) out << t.str() << '\n';
        return 0;
      }
      if (*maxima) {
        for (const auto& [t, v] : local_maxima(g)) out << t.str() << ' ' << rational_str(v.value()) << '\n';
        return 0;
      }
      if (*plot) format = "pgm";
      Output o(out, outpath, binary);
      if (format == "csv") write_csv(*o, g);
      if (format == "pgm") write_pgm(*o, g, binary);
      if (format == "ascii") *o << ascii_table(g);
      if (format == "json") {
        json j{{"q", g.q}, {"slice", g.slice.str()}, {"values", g.values}};
        *o << j.dump() << '\n';
      }
      return 0;
    }
    if (*vA || *vC) {
      Cell c = ca.make();
      FractalGrid g = grid_eval(c, q, Slice::identity(c.n()));
      VerificationReport r = *vA ? verify_theorem_A(c, g) : verify_theorem_C(c, g);
      json j = to_json(r);
      if (*vC) j["maxima"] = maxima_json(g);
      out << j.dump(2) << '\n';
      return report_exit(r);
    }
    if (*vB) {
      Cell c = ca.make();
      auto u = point_arg(point, c.field()->characteristic(), c.forms.size());
      VerificationReport r = verify_theorem_B(c, u, q2 ? q2 : 3 * u.q);
      out << to_json(r).dump(2) << '\n';
      return report_exit(r);
    }
    if (*han) {
      if (cross) {
        VerificationReport r = han_cross_check(q, hp);
        out << to_json(r).dump(2) << '\n';
        return report_exit(r);
      }
      if (point.empty()) throw Error("han needs --point or --cross-check");
      auto t = point_arg(point, hp, 3);
      out << rational_str(han_delta_star({t.coord(0), t.coord(1), t.coord(2)}, hp)) << '\n';
      return 0;
    }
    if (*reflect_cmd) {
      Cell c = ca.make();
      if (axis < 1 || axis > c.n()) throw flag_error("--axis", std::to_string(axis), "out of range");
      out << cell_str(reflect(c, axis - 1)) << '\n';
      return 0;
    }
    if (*magnify_cmd) {
      Cell c = ca.make();
      out << cell_str(magnify(c, q, ints_arg("--b", b_text))) << '\n';
      return 0;
    }
    if (*canon) {
      CanonicalCell r = canonicalize(ca.make());
      out << cell_str(r.cell) << '\n' << "linear: " << (r.linear ? "true" : "false") << '\n';
      return 0;
    }
    if (*orbit) {
      OrbitGraph g = orbit_explore(ca.make(), depth);
      Output o(out, outpath);
      *o << to_json(g).dump(2) << '\n';
      return 0;
    }
    if (*hphi) {
      Cell c = ca.make();
      auto t = point_arg(point, c.field()->characteristic(), c.forms.size());
      json j{{"point", t.str()},
             {"phi_C", rational_str(phi_C(c, t))},
             {"phi_I", rational_str(phi_I(colon_ideal(c.F, c.G, c.H), c.forms, t))},
             {"delta_C", rational_str(delta_at(c, t).value())}};
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*hid) {
      Cell c = ca.make();
      FractalGrid g{q, Slice::identity(c.n()), {}};
      std::size_t total = 1;
      for (int i = 0; i < c.n(); ++i) total *= g.side();
      std::vector<RationalPoint> pts;
      for (std::size_t f = 0; f < total; ++f) pts.push_back(g.point(f));
      VerificationReport r = verify_hk_identities(c, pts);
      out << to_json(r).dump(2) << '\n';
      return report_exit(r);
    }
    if (*hnb) {
      Cell c = ca.make();
      auto t = point_arg(point, c.field()->characteristic(), c.forms.size());
      VerificationReport r = newbound_check(c, t, axis - 1);
      json j = to_json(r);
      j["lhs"] = newbound_lhs(c, t, axis - 1);
      j["bound"] = c.n() - 2;
      out << j.dump(2) << '\n';
      return report_exit(r);
    }
    if (*hsurf) {
      FieldPtr f = sf.field();
      SurfaceInstance s;
      s.U = poly_arg("--U", su, f);
      s.V = poly_arg("--V", sv, f);
      s.forms = forms_arg(sforms, f);
      s.c = ints_arg("--c", sc);
      s.m = sm;
      s.Hlin = poly_arg("--hlin", shlin, f);
      std::uint64_t len = surface_colength(s, q, large);
      Rational norm(static_cast<std::int64_t>(len), static_cast<std::int64_t>(q * q));
      json j{{"q", q}, {"colength", len}, {"normalized", rational_str(norm)}};
      if (auto mu = surface_mu(s)) {
        j["delta_star"] = rational_str(*surface_delta_star(s));
        j["mu"] = rational_str(*mu);
        j["difference"] = rational_str(boost::abs(norm - *mu));
      } else {
        j["mu"] = nullptr;
        j["note"] = "c/m has a denominator prime to p; delta* not computed";
      }
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*table) {
      Cell c = ta.make();
      FractalGrid g = grid_eval(c, tq, slice_arg(tslice, c.n()));
      TableOptions opt;
      opt.halve = !raw;
      opt.mask_linear = !full;
      if (!window.empty()) {
        auto parts = split(window, ",");
        if (parts.size() != 2) throw flag_error("--window", window, "expected i0:i1,j0:j1");
        auto r1 = split(parts[0], ":"), r2 = split(parts[1], ":");
        if (r1.size() != 2 || r2.size() != 2) throw flag_error("--window", window, "expected i0:i1,j0:j1");
        auto a = ints_arg("--window", r1[0] + "," + r1[1]), b = ints_arg("--window", r2[0] + "," + r2[1]);
        opt.lo1 = a[0], opt.hi1 = a[1], opt.lo2 = b[0], opt.hi2 = b[1];
        const int Q = static_cast<int>(tq);
        for (int v : {a[0], a[1], b[0], b[1]})
          if (v < 0 || v > Q) throw flag_error("--window", window, "exceeds [0," + std::to_string(Q) + "]");
      }
      out << ascii_table(g, opt);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace syzgap
