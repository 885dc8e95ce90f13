#pragma once

// JSON representations of every external surface: rationals as "p/q"
// strings, Gaussian rationals as {"re","im"}, series with explicit
// windows, complexes, monodromy triples, symmetric-power points,
// eigenvalue lists, and the verification reports.

#include <json.hpp>

#include "t3dt/complexes.hpp"
#include "t3dt/exp_map.hpp"
#include "t3dt/integrality.hpp"
#include "t3dt/moduli.hpp"

namespace t3dt {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json gaussian_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

// {"vars":1, "min":lo, "max":hi, "coeffs":["...", ...]} listing the
// window from min to max; an entire series serializes its support.
Json series_json(const GradedSeries& s);
GradedSeries series_from_json(const Json& j);

// {"vars":2, "min":[0,lo], "max":[x_max,hi], "coeffs":[row 0 ..]}
// restricted to the common rectangular window.
Json bivariate_json(const BivariateSeries& s);

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json levi_json(const LeviDescriptor& d);

Json matrix_json(const GMatrix& m);
GMatrix matrix_from_json(const Json& j);

// {"dims":[...], "differentials":[matrix,...]}; set "indexing":"cochain"
// to list terms with index-raising maps instead.
Json complex_json(const BasedComplex& c);
BasedComplex complex_from_json(const Json& j);

// {"matrices":[m1,m2,m3]} of commuting monodromy operators.
OperatorTriple triple_from_json(const Json& j);

Json sympoint_json(const SymPoint& p);
SymPoint sympoint_from_json(const Json& j);

Json eigenlist_json(const EigenList& e);
EigenList eigenlist_from_json(const Json& j);

Json integrality_report_json(const IntegralityReport& r);
Json langlands_json(const LanglandsResult& r);

}  // namespace t3dt
