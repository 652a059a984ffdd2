#pragma once

#include <istream>

#include "json.hpp"
#include "dwork/deformation.hpp"
#include "dwork/family.hpp"
#include "dwork/operators.hpp"
#include "dwork/padic.hpp"

namespace dwork {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const TruncSeries& s);
Json to_json(const FamilyData& f);
Json to_json(const DiffOperator& op);
Json to_json(const HypParams& h);
Json to_json(const RationalMatrix& m);
Json to_json(const RatFunMatrix& m);
Json to_json(const SeriesMatrix& m);
Json to_json(const PadicMatrix& m);

// r×c array of "p/q" strings (plain JSON integers are accepted too).
RationalMatrix rational_matrix_from_json(const Json& j);
RationalMatrix read_rational_matrix(std::istream& in);

}  // namespace dwork
