#pragma once

#include <string>

#include "json.hpp"
#include "tetratrig/chokim.hpp"
#include "tetratrig/picard.hpp"
#include "tetratrig/suites.hpp"

namespace tetratrig::io {

using Json = nlohmann::ordered_json;

// Malformed input; the CLI maps it to exit code 2.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json real_json(double x);  // non-finite values become {"inf": true}
Json to_json(cplx z);      // {"re": .., "im": ..}
Json to_json(const P1& z);
Json to_json(const MobiusMap& m);
Json to_json(const Config8& c);
Json to_json(const CKFn& f);
Json to_json(const LatticeVec& v);  // doubled coordinates
Json to_json(const PicClass& c);
Json to_json(const MetricSpec& s);
Json to_json(const MarkedTetra& T);
Json to_json(const Solution& s);
Json to_json(const SuiteReport& r);

cplx cplx_from_json(const Json& j);
P1 p1_from_json(const Json& j);
MetricSpec metric_from_json(const Json& j);  // validates shape only, not realizability

// "e13", "eI", "e0", "regge", or eight comma-separated doubled coordinates.
LatticeVec parse_lattice_vec(const std::string& text);
// Sums of basis terms such as "l+r-u13-2u24", or ten comma-separated integers.
PicClass parse_pic_class(const std::string& text);

Json read_json(const std::string& path);  // "-" reads stdin
void write_output(const Json& j, const std::string& path);  // "-" writes stdout

}  // namespace tetratrig::io
