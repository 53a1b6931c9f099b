#pragma once

// JSON encodings of the exact types (reports and the CLI only).

#include <json.hpp>

#include "gformlab/abelian_groups.hpp"
#include "gformlab/cyclotomic.hpp"
#include "gformlab/group_ring.hpp"
#include "gformlab/linalg.hpp"
#include "gformlab/number_fields.hpp"
#include "gformlab/stickelberger.hpp"

namespace gformlab::json_io {

using nlohmann::json;

inline json encode(const mpq_class& q) { return q.get_str(); }
inline json encode(const mpz_class& z) { return z.get_str(); }

inline json encode(const std::vector<mpq_class>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(q.get_str());
  return a;
}
inline json encode(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(z.get_str());
  return a;
}

template <class T>
json encode(const Matrix<T>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row(i)));
  return a;
}

/// {level, coefficients: ["n/d", ...]} in the power basis.
inline json encode(const CyclotomicNumber& x) {
  return json{{"level", x.level()}, {"coefficients", encode(x.coefficients())}};
}

inline CyclotomicNumber decode_cyclotomic(const json& j) {
  std::vector<mpq_class> c;
  for (const auto& s : j.at("coefficients")) {
    mpq_class q(s.get<std::string>(), 10);
    q.canonicalize();
    c.push_back(q);
  }
  return CyclotomicNumber::from_coefficients(j.at("level").get<std::int64_t>(), std::move(c));
}

inline json encode(const GroupElement& s) { return s.exponents; }

template <class R>
json encode(const GroupRingElement<R>& x) {
  json a = json::array();
  const auto& g = x.group();
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    if (ring_is_zero(x.coefficients()[i])) continue;
    a.push_back(json{{"element", g.element_at(i).exponents}, {"coefficient", encode(x.coefficients()[i])}});
  }
  return a;
}

inline json encode(const FractionalIdeal& l) {
  return json{{"denominator", l.denominator().get_str()}, {"hnf", encode(l.hnf())}};
}

}  // namespace gformlab::json_io
