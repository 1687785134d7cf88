#ifndef MOTIVIC_JSON_IO_HPP
#define MOTIVIC_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "motivic/analytic.hpp"
#include "motivic/errors.hpp"
#include "motivic/measures.hpp"
#include "motivic/motive.hpp"
#include "motivic/numerical_k0.hpp"
#include "motivic/reconstruct.hpp"
#include "motivic/series.hpp"
#include "motivic/variety.hpp"

/*
 * JSON conventions: rationals are strings "a/b" ("a" when integral),
 * polynomials ascending coefficient arrays, matrices arrays of rows,
 * complex numbers {"re", "im"}. Floats are rounded to 12 significant
 * digits so that output is byte-stable, magnitudes below 1e-15 print as 0
 * and infinities become "inf"/"-inf".
 * Objects use sorted keys.
 */
namespace motivic::json_io {

using nlohmann::json;

/* parse failures name the offending JSON path */
struct InputError : ValidationError {
    InputError(const std::string& path, const std::string& msg) : ValidationError(path + ": " + msg, "bad_input"), path(path) {}
    std::string path;
};

json number(long double x);
json to_json(const Rational& r);
json to_json(const BigInt& r);
json to_json(const Polynomial& p);
json to_json(const RatMatrix& m);
json to_json(const TruncatedSeries& s);
json to_json(const RationalFunction& f);
json to_json(const Complex& z);
json to_json(const TracedMotive& m);
json to_json(const Reconstruction& r);
json to_json(const FunctionalEquationReport& r);
json to_json(const Cyclotomic& c);
json to_json(const LSeries& l);
json to_json(const OrbifoldReport& r);
json to_json(const WeilReport& r);
json to_json(const ComplexSpectrum& s);
json to_json(const MeromorphicReport& r);
json to_json(const ThetaData& t);
json to_json(const RegDetReport& r);
json to_json(const IntMatrix& m);
json to_json(const EulerGram& g);
json to_json(const NumK0Report& r);
json to_json(const MeasureClass& c);
json to_json(const EpsilonElement& e);
json to_json(const WitnessReport& r);

Rational rational_from(const json& j, const std::string& path);
std::vector<Rational> rationals_from(const json& j, const std::string& path);
RatMatrix matrix_from(const json& j, const std::string& path);
TruncatedSeries series_from(const json& j, const std::string& path);
TracedMotive motive_from(const json& j, const std::string& path = "$");
VarietySpec variety_from(const json& j, const std::string& path = "$");
/* {"elements": [matrix, ...]} or a bare list of matrices */
std::vector<std::vector<std::vector<std::int64_t>>> group_from(const json& j, const std::string& path);
/* {"m": m, "classes": [[i, ...], ...], "values": [[coord, ...], ...]} */
CharacterTable character_from(const json& j, const GroupAction& action, const std::string& path);
Complex complex_from(const json& j, const std::string& path);
EulerGram gram_from(const json& j, const std::string& path = "$");
/* {"op": "point"|"affine"|"projective"|"torus"|"sum"|"difference"|"product"|"scale", ...} */
MeasureClass measure_from(const json& j, const std::string& path = "$");

/* canonical text: sorted keys, two-space indent, trailing newline */
std::string dump(const json& j);

}  // namespace motivic::json_io

#endif
