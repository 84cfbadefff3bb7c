#include "mdt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "mdt/dtinv.hpp"
#include "mdt/errors.hpp"
#include "mdt/jsonio.hpp"
#include "mdt/repcount.hpp"
#include "mdt/verify.hpp"

namespace mdt {

namespace {

// polynomial in the counting variable, highest power first: "q + 1"
std::string poly_text_q(const LaurentZ& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    mpz_class c = p.coeff_at(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string monomial_text(const Grading& g, const std::vector<int>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += g.vars[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

void print_series(std::ostream& out, const MSeries& f) {
  const Grading& g = f.grading();
  size_t w = 1;
  for (const auto& [e, c] : f.terms()) w = std::max(w, monomial_text(g, e).size());
  for (const auto& [e, c] : f.terms())
    out << std::left << std::setw((int)w + 2) << monomial_text(g, e) << c.text()
        << "\n";
}

std::string vec_text(const std::vector<int>& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

Quiver load_quiver(const std::string& target) {
  if (target == "jordan" || target == "kronecker") return builtin_quiver(target);
  if (target.rfind("affine:", 0) == 0) return from_type(target.substr(7)).diagram;
  std::ifstream in(target);
  if (!in) fail(Err::BadInput, "cannot open quiver file '" + target + "'");
  ojson j = ojson::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Err::BadInput, "quiver file '" + target + "' is not JSON");
  return parse_quiver(j);
}

Grading level_grading(int l, int N) {
  std::vector<std::string> vars;
  std::vector<int> w;
  for (int i = 0; i <= l; ++i) {
    vars.push_back("y" + std::to_string(i));
    w.push_back(i == 0 ? 1 : 0);
  }
  return Grading(vars, w, N);
}

void emit_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

int cmd_kac(const std::string& target, const std::vector<int>& dim,
            const std::vector<long>& qs, const std::string& format,
            std::ostream& out) {
  Quiver qv = load_quiver(target);
  std::vector<std::pair<long, mpz_class>> samples;
  for (long q : qs) samples.emplace_back(q, kac_bruteforce(qv, dim, q).count);
  int degree = 1 - (int)euler_form(qv, dim, dim);
  LaurentZ poly = interpolate_kac(samples, degree);
  if (format == "json") {
    ojson j;
    j["quiver"] = target;
    j["dim"] = dim;
    j["samples"] = ojson::array();
    for (const auto& [q, c] : samples) j["samples"].push_back({q, c.get_str()});
    j["polynomial"]["lowest"] = poly.is_zero() ? 0 : poly.low();
    j["polynomial"]["coeffs"] = ojson::array();
    for (const auto& c : poly.coeffs()) j["polynomial"]["coeffs"].push_back(c.get_str());
    emit_json(out, j);
  } else {
    out << poly_text_q(poly) << "\n";
  }
  return 0;
}

int cmd_universal(const std::string& type, const std::string& quiver, int order,
                  const std::string& format, std::ostream& out) {
  KacTable table;
  if (!type.empty()) {
    AffineRootSystem rs = from_type(type);
    table = affine_kac_table(rs, level_grading(rs.l, order), 1);
  } else if (quiver == "jordan") {
    // one vertex, every dimension imaginary: a_n = q
    table.cover = Grading({"y0"}, {1}, order);
    for (int n = 1; n <= order; ++n) table.entries[{n}] = LaurentZ::monomial(1, 1);
    table.source = "closed-form";
  } else {
    fail(Err::BadInput, "universal needs --type <TYPE> or --quiver jordan");
  }
  MSeries au = universal_series(table, table.cover);
  OmegaTable om = omega_extract(au);
  if (format == "json") {
    ojson j;
    j["universal"] = series_json(au);
    j["omega"] = ojson::array();
    for (const auto& [root, val] : om.entries)
      j["omega"].push_back({{"root", root}, {"value", scalar_json(val)}});
    emit_json(out, j);
  } else {
    out << "universal series, levels 1.." << order << ":\n";
    print_series(out, au);
    out << "BPS values:\n";
    size_t w = 1;
    for (const auto& [root, val] : om.entries) w = std::max(w, vec_text(root).size());
    for (const auto& [root, val] : om.entries)
      out << std::left << std::setw((int)w + 2) << vec_text(root) << val.text() << "\n";
  }
  return 0;
}

int cmd_series(const std::string& type, const std::string& mode, int order,
               const std::string& format, std::ostream& out) {
  SQSeries z = mckay_series(from_type(type), parse_mode(mode), order);
  if (format == "json") {
    emit_json(out, sqseries_json(z));
  } else {
    out << "convention: " << convention_name(z.convention) << "\n";
    print_series(out, z.series);
  }
  return 0;
}

int cmd_euler(const std::string& type, const std::string& mode, int order,
              const std::string& format, std::ostream& out) {
  MSeries e = euler_limit(mckay_series(from_type(type), parse_mode(mode), order));
  if (format == "json")
    emit_json(out, series_json(e));
  else
    print_series(out, e);
  return 0;
}

int cmd_hilb(const std::string& type, const std::string& group, int order,
             const std::string& format, std::ostream& out) {
  int l = 0;
  if (!type.empty())
    l = from_type(type).l;
  else if (!group.empty())
    l = from_mckay_group(group).l;
  else
    fail(Err::BadInput, "hilb needs --type <TYPE> or --group <G>");
  SQSeries z = hilbert_series_ZY(l, order);
  if (format == "json")
    emit_json(out, sqseries_json(z));
  else
    print_series(out, z.series);
  return 0;
}

int cmd_gv(const std::string& type, int order, const std::string& format,
           std::ostream& out) {
  AffineRootSystem rs = from_type(type);
  // reduced PT input: Exp of L/(1-L)^2 on each finite positive root
  std::vector<std::vector<int>> roots;
  int bound = 0;
  for (const auto& full : rs.finite_pos) {
    std::vector<int> beta(full.begin() + 1, full.end());
    int ht = 0;
    for (int x : beta) ht += x;
    bound = std::max(bound, ht);
    roots.push_back(std::move(beta));
  }
  if (order >= 0) bound = std::min(bound, order);
  // Exp/Log cost scales with the square of the lattice-point count; refuse
  // requests that would grind for minutes instead of answering
  double points = 1;
  for (int i = 1; i <= rs.l; ++i) points *= (double)(bound + i) / i;
  if (points * points * std::max(bound, 1) > 8e6)
    fail(Err::TooLarge, "degree-" + std::to_string(bound) + " table for " + type +
                            " is over the extraction budget; pass a smaller --order");
  std::vector<std::string> vars;
  for (int i = 1; i <= rs.l; ++i) vars.push_back("Q" + std::to_string(i));
  Grading g(vars, std::vector<int>(rs.l, 1), bound);
  MSeries s = ms_zero(g);
  MotiveScalar fb =
      MotiveScalar::L_power(1) * MotiveScalar::inv_one_minus_v(2, 2);
  for (const auto& beta : roots) s.add_term(beta, fb);
  auto gv = gv_extract(exp_lambda(s));
  if (format == "json") {
    ojson j = ojson::array();
    for (const auto& [beta, ns] : gv) {
      ojson row;
      row["beta"] = beta;
      row["n"] = ojson::array();
      for (const auto& n : ns) row["n"].push_back(n.get_str());
      j.push_back(row);
    }
    emit_json(out, j);
  } else {
    size_t w = 1;
    for (const auto& [beta, ns] : gv) w = std::max(w, vec_text(beta).size());
    for (const auto& [beta, ns] : gv) {
      out << std::left << std::setw((int)w + 2) << vec_text(beta);
      for (size_t i = 0; i < ns.size(); ++i) out << (i ? " " : "") << ns[i].get_str();
      out << "\n";
    }
  }
  return 0;
}

int cmd_repcount(const std::string& target, const std::vector<int>& dim, long q,
                 const std::string& what, const std::string& format,
                 std::ostream& out) {
  Quiver qv = load_quiver(target);
  CountReport r;
  if (what == "preprojective")
    r = count_preprojective(qv, dim, q);
  else if (what == "fiber0")
    r = count_potential_fiber(loop_double(qv), dim, q, 0);
  else if (what == "fiber1")
    r = count_potential_fiber(loop_double(qv), dim, q, 1);
  else
    r = kac_bruteforce(qv, dim, q);
  if (format == "text")
    out << "count = " << r.count.get_str() << "  method = " << r.method << "\n";
  else
    emit_json(out, report_json(r));
  return 0;
}

int cmd_verify(const std::string& suite, const std::vector<long>& qs,
               std::ostream& out) {
  VerifyOptions opts{qs};
  auto checks = select_checks(suite);
  size_t w = 1;
  for (const auto* c : checks) w = std::max(w, c->name.size());
  std::string first_fail;
  size_t passed = 0;
  for (const auto* c : checks) {
    std::string msg = c->run(opts);
    out << (msg.empty() ? "PASS  " : "FAIL  ") << std::left << std::setw((int)w + 2)
        << c->name << c->title;
    if (!msg.empty()) out << ": " << msg;
    out << "\n";
    if (msg.empty())
      ++passed;
    else if (first_fail.empty())
      first_fail = c->name;
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  if (!first_fail.empty()) {
    out << "first failing identity: " << first_fail << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact motivic curve-counting series for loop-double quivers"};
  app.require_subcommand(1);

  std::string quiver, type, group, mode = "pt", what = "preprojective";
  std::string format = "text", suite;
  std::vector<int> dim;
  std::vector<long> qs;
  int order = 3;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* kac = app.add_subcommand("kac", "brute-force and interpolated Kac polynomial");
  kac->add_option("--quiver", quiver, "quiver: file, jordan, kronecker or affine:<TYPE>")
      ->required();
  kac->add_option("--dim", dim, "dimension vector")->required()->delimiter(',');
  kac->add_option("--q", qs, "prime powers to count over")->required()->delimiter(',');

  CLI::App* uni = app.add_subcommand("universal", "universal series and its BPS table");
  uni->add_option("--type", type, "affine type, e.g. A1~");
  uni->add_option("--quiver", quiver, "alternatively: jordan");
  uni->add_option("--order", order, "truncation order in s");

  CLI::App* ser = app.add_subcommand("series", "framed series in the (s, Q) variables");
  ser->add_option("--type", type, "affine type")->required();
  ser->add_option("--mode", mode, "pt, dt or ncdt")->required();
  ser->add_option("--order", order, "truncation order in s");

  CLI::App* eul = app.add_subcommand("euler", "Euler specialization of a framed series");
  eul->add_option("--type", type, "affine type")->required();
  eul->add_option("--mode", mode, "pt, dt or ncdt");
  eul->add_option("--order", order, "truncation order in s");

  CLI::App* gv = app.add_subcommand("gv", "genus/degree table of the reduced series");
  gv->add_option("--type", type, "affine type")->required();
  int gv_order = -1; // full table unless the user trims it
  gv->add_option("--order", gv_order, "bound on the total degree in Q");

  CLI::App* hil = app.add_subcommand("hilb", "series of the resolved orbifold");
  hil->add_option("--type", type, "affine type");
  hil->add_option("--group", group, "finite subgroup, e.g. cyclic:3, bintet");
  hil->add_option("--order", order, "truncation order in s");

  CLI::App* rep = app.add_subcommand("repcount", "finite-field point counts");
  rep->add_option("--quiver", quiver, "quiver: file, jordan, kronecker or affine:<TYPE>")
      ->required();
  rep->add_option("--dim", dim, "dimension vector")->required()->delimiter(',');
  rep->add_option("--q", qs, "prime power")->required()->expected(1);
  rep->add_option("--what", what, "preprojective, fiber0, fiber1 or kac")
      ->check(CLI::IsMember({"preprojective", "fiber0", "fiber1", "kac"}));

  CLI::App* ver = app.add_subcommand("verify", "run the named identity checks");
  ver->add_option("--suite", suite, "check name or prefix; all when omitted");
  ver->add_option("--q", qs, "override the sample points of oracle checks")
      ->delimiter(',');

  add_format(kac);
  add_format(uni);
  add_format(ser);
  add_format(eul);
  add_format(gv);
  add_format(hil);
  add_format(rep);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (kac->parsed()) return cmd_kac(quiver, dim, qs, format, out);
    if (uni->parsed()) return cmd_universal(type, quiver, order, format, out);
    if (ser->parsed()) return cmd_series(type, mode, order, format, out);
    if (eul->parsed()) return cmd_euler(type, mode, order, format, out);
    if (gv->parsed()) return cmd_gv(type, gv_order, format, out);
    if (hil->parsed()) return cmd_hilb(type, group, order, format, out);
    if (rep->parsed()) {
      // point counts default to the machine-readable report
      if (!rep->count("--format")) format = "json";
      return cmd_repcount(quiver, dim, qs.at(0), what, format, out);
    }
    if (ver->parsed()) return cmd_verify(suite, qs, out);
  } catch (const MdtError& e) {
    err << e.what() << "\n";
    return e.kind() == Err::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace mdt
