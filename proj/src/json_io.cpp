#include "t3dt/json_io.hpp"

namespace t3dt {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw parse_error("expected a rational string");
  return parse_rational(j.get<std::string>());
}

Json gaussian_json(const GaussianRational& z) {
  return Json{{"re", rational_json(z.re)}, {"im", rational_json(z.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return GaussianRational(rational_from_json(j));
  return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

Json series_json(const GradedSeries& s) {
  // Entire series serialize their support window, truncated ones their
  // full known window; the zero series as a single zero at degree 0.
  int lo = s.support_min();
  int hi = s.entire() ? std::max(lo, s.stored_max()) : s.known_max();
  if (s.is_known_zero()) {
    lo = 0;
    hi = 0;
  }
  Json coeffs = Json::array();
  for (int d = lo; d <= hi; ++d) coeffs.push_back(rational_json(s.coeff(d)));
  return Json{{"vars", 1}, {"min", lo}, {"max", hi}, {"coeffs", std::move(coeffs)}};
}

GradedSeries series_from_json(const Json& j) {
  if (j.at("vars").get<int>() != 1) throw parse_error("expected a univariate series");
  int lo = j.at("min").get<int>();
  int hi = j.at("max").get<int>();
  const Json& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != hi - lo + 1)
    throw parse_error("series coefficient count does not match its window");
  std::vector<Rational> cs;
  for (const auto& c : coeffs) cs.push_back(rational_from_json(c));
  return GradedSeries::truncated(lo, std::move(cs));
}

Json bivariate_json(const BivariateSeries& s) {
  // Common rectangle: everything below the smallest support is known
  // zero, everything up to the narrowest known window is exact.
  int lo = 0, hi = GradedSeries::kUnbounded, top = 0;
  for (int n = 0; n <= s.x_max(); ++n) {
    const GradedSeries& row = s.row(n);
    lo = std::min(lo, row.support_min());
    hi = std::min(hi, row.known_max());
    top = std::max(top, row.stored_max());
  }
  if (hi >= GradedSeries::kUnbounded) hi = std::max(lo, top);
  Json rows = Json::array();
  for (int n = 0; n <= s.x_max(); ++n) {
    Json row = Json::array();
    for (int d = lo; d <= hi; ++d) row.push_back(rational_json(s.row(n).coeff(d)));
    rows.push_back(std::move(row));
  }
  return Json{{"vars", 2},
              {"min", Json::array({0, lo})},
              {"max", Json::array({s.x_max(), hi})},
              {"coeffs", std::move(rows)}};
}

Json partition_json(const Partition& p) {
  Json a = Json::array();
  for (int x : p.parts()) a.push_back(x);
  return a;
}

Partition partition_from_json(const Json& j) {
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(parts);
}

Json levi_json(const LeviDescriptor& d) {
  return Json{{"kind", kind_name(d.kind)},
              {"partition", partition_json(d.lambda)},
              {"dim_centre", d.dim_centre},
              {"weyl_order", to_string(d.weyl_order)}};
}

Json matrix_json(const GMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("expected a matrix as a row list");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  GMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols)
      throw parse_error("ragged matrix rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = j.at(i).at(c);
      m(i, c) = e.is_number_integer() ? GaussianRational(Rational(e.get<long>()))
                                      : parse_gaussian(e.get<std::string>());
    }
  }
  return m;
}

Json complex_json(const BasedComplex& c) {
  Json diffs = Json::array();
  for (const auto& d : c.diffs) diffs.push_back(matrix_json(d));
  Json dims = Json::array();
  for (int d : c.dims) dims.push_back(d);
  return Json{{"dims", std::move(dims)}, {"differentials", std::move(diffs)}};
}

BasedComplex complex_from_json(const Json& j) {
  std::vector<int> dims;
  for (const auto& d : j.at("dims")) dims.push_back(d.get<int>());
  std::vector<GMatrix> diffs;
  for (const auto& m : j.at("differentials")) diffs.push_back(matrix_from_json(m));
  if (j.contains("indexing") && j.at("indexing").get<std::string>() == "cochain") {
    std::reverse(dims.begin(), dims.end());
    std::reverse(diffs.begin(), diffs.end());
  }
  return BasedComplex(std::move(dims), std::move(diffs));
}

OperatorTriple triple_from_json(const Json& j) {
  const Json& ms = j.at("matrices");
  if (ms.size() != 3) throw parse_error("monodromy file needs exactly three matrices");
  return OperatorTriple(matrix_from_json(ms.at(0)), matrix_from_json(ms.at(1)),
                        matrix_from_json(ms.at(2)));
}

Json sympoint_json(const SymPoint& p) {
  Json triples = Json::array();
  for (const auto& t : p.triples) {
    Json triple = Json::array();
    for (int c = 0; c < 3; ++c)
      triple.push_back(Json{{"r", to_string(t[c].r)}, {"theta", to_string(t[c].theta)}});
    triples.push_back(std::move(triple));
  }
  return Json{{"kind", kind_name(p.kind)}, {"triples", std::move(triples)}};
}

SymPoint sympoint_from_json(const Json& j) {
  GroupKind kind = kind_from_name(j.at("kind").get<std::string>());
  std::vector<TorusTriple> triples;
  for (const auto& t : j.at("triples")) {
    if (t.size() != 3) throw parse_error("each point entry needs three torus elements");
    TorusTriple triple;
    for (int c = 0; c < 3; ++c)
      triple[c] = TorusElem(rational_from_json(t.at(c).at("r")),
                            rational_from_json(t.at(c).at("theta")));
    triples.push_back(triple);
  }
  return SymPoint(kind, std::move(triples));
}

Json eigenlist_json(const EigenList& e) {
  Json a = Json::array();
  for (const auto& v : e)
    a.push_back(Json{{"a", gaussian_json(v.a)}, {"s", rational_json(v.s)}});
  return a;
}

EigenList eigenlist_from_json(const Json& j) {
  EigenList e;
  for (const auto& v : j)
    e.push_back({gaussian_from_json(v.at("a")), rational_from_json(v.at("s"))});
  return e;
}

Json integrality_report_json(const IntegralityReport& r) {
  Json results = Json::array();
  for (const auto& row : r.rows) {
    results.push_back(Json{{"n", row.n},
                           {"levi_sum", series_json(row.levi_sum)},
                           {"pe_coeff", series_json(row.pe_coeff)},
                           {"equal", row.equal}});
  }
  return Json{{"kind", kind_name(r.kind)},
              {"parity", parity_name(r.parity)},
              {"window", Json{{"min", r.lo}, {"max", r.hi}}},
              {"results", std::move(results)}};
}

Json langlands_json(const LanglandsResult& r) {
  return Json{{"n", r.n},
              {"equal", r.verdict},
              {"sl", series_json(r.sl)},
              {"pgl_twisted", series_json(r.pgl_twisted)},
              {"pgl_untwisted", series_json(r.pgl_untwisted)}};
}

}  // namespace t3dt
