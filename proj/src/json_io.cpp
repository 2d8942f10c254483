#include "mzv/json_io.hpp"

#include <stdexcept>

namespace mzv {

namespace {

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("bad type for field \"") + key + "\"");
  }
}

}  // namespace

Json relation_to_json(const RelationSet& rel, bool with_parity) {
  Json j;
  j["q"] = rel.q;
  j["a"] = rel.a;
  j["b"] = rel.b;
  Json pairs = Json::array();
  for (const auto& pr : rel.pairs) pairs.push_back(Json::array({pr.f, pr.index}));
  j["pairs"] = std::move(pairs);
  if (with_parity) {
    Json parity = Json::array();
    for (const auto& pr : rel.pairs) parity.push_back((rel.a + rel.b - pr.index) % static_cast<std::int64_t>(rel.q - 1) == 0);
    j["parity"] = std::move(parity);
  }
  return j;
}

RelationSet relation_from_json(const Json& j) {
  const auto q = required<std::uint64_t>(j, "q");
  const FieldCtx ctx = make_field_for_order(q);
  RelationSet rel{q, ctx.p(), required<std::int64_t>(j, "a"), required<std::int64_t>(j, "b"), {}};
  const Json& pairs = j.at("pairs");
  if (!pairs.is_array()) throw std::invalid_argument("\"pairs\" must be an array");
  for (const auto& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() || !pr[1].is_number_integer()) {
      throw std::invalid_argument("each pair must be [f, a_i]");
    }
    const auto f = pr[0].get<std::int64_t>();
    if (f < 1 || f >= ctx.p()) throw std::invalid_argument("pair coefficient outside [1, p)");
    rel.pairs.push_back({static_cast<std::uint32_t>(f), pr[1].get<std::int64_t>()});
  }
  if (!rel.well_formed()) throw std::invalid_argument("pairs are not strictly decreasing below a + b");
  return rel;
}

Json laurent_to_json(const LaurentTail& x) {
  const FieldCtx& ctx = x.field();
  Json j;
  j["q"] = ctx.q();
  j["valuation"] = x.valuation();
  j["precision"] = x.precision();
  Json coeffs = Json::array();
  for (std::int64_t e = x.valuation(); e <= x.precision(); ++e) {
    const Code c = x.coeff(e);
    if (ctx.is_prime_field()) {
      coeffs.push_back(c);
    } else {
      coeffs.push_back(ctx.coords(c));
    }
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

LaurentTail laurent_from_json(const Json& j, const FieldCtx& ctx) {
  if (required<std::uint64_t>(j, "q") != ctx.q()) throw std::invalid_argument("Laurent tail belongs to another field");
  const auto v = required<std::int64_t>(j, "valuation");
  const auto n = required<std::int64_t>(j, "precision");
  const Json& cs = j.at("coefficients");
  if (!cs.is_array()) throw std::invalid_argument("\"coefficients\" must be an array");
  std::vector<Code> coeffs;
  for (const auto& c : cs) {
    if (ctx.is_prime_field()) {
      if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= ctx.p()) throw std::invalid_argument("bad coefficient");
      coeffs.push_back(c.get<Code>());
    } else {
      if (!c.is_array()) throw std::invalid_argument("coefficients over F_q must be coordinate arrays");
      coeffs.push_back(ctx.from_coords(c.get<std::vector<std::uint32_t>>()));
    }
  }
  if (v > n + 1 || static_cast<std::int64_t>(coeffs.size()) > n - v + 1) {
    throw std::invalid_argument("coefficients run past the stated precision");
  }
  return LaurentTail(ctx, v, std::move(coeffs), n);
}

}  // namespace mzv
