#include "dwork/json_io.hpp"

#include "dwork/errors.hpp"

namespace dwork {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const TruncSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const FamilyData& f) {
  return Json{{"n", f.n}, {"d", f.d}, {"w", f.w}, {"b", f.b}, {"dW", f.dW}};
}

Json to_json(const DiffOperator& op) {
  Json terms = Json::array();
  for (int j = 0; j <= op.order(); ++j) {
    const Poly& c = op.coeffs()[j];
    if (c.is_zero()) continue;
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(to_string(x));
    terms.push_back(Json{{"dpow", j}, {"coeffs", coeffs}});
  }
  return Json{{"variable", variable_name(op.variable())}, {"terms", terms}};
}

Json to_json(const HypParams& h) {
  Json a = Json::array();
  Json b = Json::array();
  for (const auto& x : h.alphas) a.push_back(to_string(x));
  for (const auto& x : h.betas) b.push_back(to_string(x));
  return Json{{"alphas", a}, {"betas", b}};
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const RatFunMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const SeriesMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const PadicMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.entries[i * m.cols + j].get_str());
    rows.push_back(row);
  }
  return Json{{"denominator_valuation", m.valuation}, {"entries", rows}};
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw UsageError("F0 must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  RationalMatrix m(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw UsageError("F0 rows must all have the same length");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = j[i][k];
      if (e.is_string()) {
        m(i, k) = parse_rational(e.get<std::string>());
      } else if (e.is_number_integer()) {
        m(i, k) = Rational(e.get<long>());
      } else {
        throw UsageError("F0 entries must be \"p/q\" strings or integers");
      }
    }
  }
  return m;
}

RationalMatrix read_rational_matrix(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed F0 JSON: ") + e.what());
  }
  return rational_matrix_from_json(j);
}

}  // namespace dwork
