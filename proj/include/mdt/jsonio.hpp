#pragma once

#include <json.hpp>

#include "mdt/dtinv.hpp"
#include "mdt/quiver.hpp"
#include "mdt/repcount.hpp"
#include "mdt/series.hpp"

namespace mdt {

// Canonical JSON forms. Serialization always starts from the reduced
// representation, so serialize(parse(serialize(x))) is byte-identical to
// serialize(x). Coefficients outside int64 raise SerializationOverflow.
using ojson = nlohmann::ordered_json;

ojson scalar_json(const MotiveScalar& c);
MotiveScalar parse_scalar(const ojson& j);

// terms are listed in lexicographic exponent order, not internal order
ojson series_json(const MSeries& f);
MSeries parse_series(const ojson& j);

ojson sqseries_json(const SQSeries& z);
SQSeries parse_sqseries(const ojson& j);

ojson quiver_json(const Quiver& q);
Quiver parse_quiver(const ojson& j);

ojson report_json(const CountReport& r);

} // namespace mdt
