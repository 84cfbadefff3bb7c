#include "mdt/jsonio.hpp"

#include <algorithm>

#include "mdt/errors.hpp"

namespace mdt {

namespace {

long long to_i64(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p())
    fail(Err::SerializationOverflow, std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

ojson laurent_json(const LaurentZ& p) {
  ojson coeffs = ojson::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_i64(c, "coefficient"));
  return ojson{{"lowest", p.is_zero() ? 0 : p.low()}, {"coeffs", std::move(coeffs)}};
}

LaurentZ parse_laurent(const ojson& j) {
  if (!j.is_object() || !j.contains("lowest") || !j.contains("coeffs"))
    fail(Err::BadInput, "polynomial needs lowest and coeffs");
  std::vector<mpz_class> cs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_number_integer()) fail(Err::BadInput, "coefficients must be integers");
    cs.emplace_back((long)c.get<long long>());
  }
  return LaurentZ::from_coeffs(j.at("lowest").get<int>(), std::move(cs));
}

std::vector<int> parse_exp(const ojson& j) {
  std::vector<int> e;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(Err::BadInput, "exponents must be integers");
    e.push_back(x.get<int>());
  }
  return e;
}

} // namespace

ojson scalar_json(const MotiveScalar& c) {
  auto red = c.reduced();
  return ojson{{"num", laurent_json(red.num)}, {"den", laurent_json(red.den)}};
}

MotiveScalar parse_scalar(const ojson& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(Err::BadInput, "scalar needs num and den");
  return MotiveScalar::fraction(parse_laurent(j.at("num")), parse_laurent(j.at("den")));
}

ojson series_json(const MSeries& f) {
  const Grading& g = f.grading();
  std::vector<const std::vector<int>*> order;
  for (const auto& [e, c] : f.terms()) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const std::vector<int>* a, const std::vector<int>* b) { return *a < *b; });
  ojson terms = ojson::array();
  for (const auto* e : order)
    terms.push_back(ojson{{"exp", *e}, {"coeff", scalar_json(f.terms().at(*e))}});
  return ojson{{"vars", g.vars},
               {"weights", g.weights},
               {"bound", g.bound},
               {"terms", std::move(terms)}};
}

MSeries parse_series(const ojson& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("weights") ||
      !j.contains("bound") || !j.contains("terms"))
    fail(Err::BadInput, "series needs vars, weights, bound, terms");
  Grading g(j.at("vars").get<std::vector<std::string>>(),
            j.at("weights").get<std::vector<int>>(), j.at("bound").get<long long>());
  MSeries f = ms_zero(g);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("exp") || !t.contains("coeff"))
      fail(Err::BadInput, "term needs exp and coeff");
    std::vector<int> e = parse_exp(t.at("exp"));
    if (e.size() != g.arity()) fail(Err::BadInput, "term exponent arity mismatch");
    if (g.wdeg(e) > g.bound) fail(Err::BadInput, "term exponent out of region");
    f.add_term(e, parse_scalar(t.at("coeff")));
  }
  return f;
}

ojson sqseries_json(const SQSeries& z) {
  ojson j = series_json(z.series);
  j["convention"] = convention_name(z.convention);
  j["roots_type"] = z.roots_type;
  return j;
}

SQSeries parse_sqseries(const ojson& j) {
  if (!j.contains("convention") || !j.contains("roots_type"))
    fail(Err::BadInput, "series needs convention and roots_type tags");
  std::string conv = j.at("convention").get<std::string>();
  SignConvention c;
  if (conv == "minus_s")
    c = SignConvention::MinusS;
  else if (conv == "plus_s")
    c = SignConvention::PlusS;
  else
    fail(Err::BadInput, "unknown convention " + conv);
  return SQSeries{parse_series(j), c, j.at("roots_type").get<std::string>()};
}

ojson quiver_json(const Quiver& q) {
  ojson arrows = ojson::array();
  for (const auto& [s, t] : q.arrows) arrows.push_back(ojson::array({s, t}));
  return ojson{{"vertices", q.n}, {"arrows", std::move(arrows)}};
}

Quiver parse_quiver(const ojson& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    fail(Err::BadInput, "quiver needs vertices and arrows");
  Quiver q;
  q.n = j.at("vertices").get<int>();
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2)
      fail(Err::BadInput, "arrows must be [source, target] pairs");
    q.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  validate_quiver(q);
  return q;
}

ojson report_json(const CountReport& r) {
  return ojson{{"quiver", quiver_json(r.quiver)},
               {"dim", r.dimvec},
               {"q", r.q},
               {"count", to_i64(r.count, "count")},
               {"method", r.method}};
}

} // namespace mdt
