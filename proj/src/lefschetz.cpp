#include "coincidence/lefschetz.hpp"

#include <optional>

namespace coincidence::lefschetz {

using exterior::ExteriorElement;

void TorusMapModel::validate() const {
  if (k() < 2)
    throw Error(Errc::DimensionMismatch,
                "torus model needs at least two maps, got " +
                    std::to_string(k()));
  if (m <= 0 || n <= 0)
    throw Error(Errc::DimensionMismatch, "torus dimensions must be positive");
  for (int i = 0; i < k(); ++i) {
    const auto &a = matrices[static_cast<std::size_t>(i)];
    if (a.rows() != n || a.cols() != m)
      throw Error(Errc::DimensionMismatch,
                  "matrix " + std::to_string(i + 1) + " is " +
                      std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + ", expected " +
                      std::to_string(n) + "x" + std::to_string(m));
  }
}

ClassValue ClassValue::integer(int64_t value, std::string provenance) {
  return {Kind::Integer, value, {}, std::move(provenance)};
}

ClassValue ClassValue::zero(std::string reason, std::string provenance) {
  return {Kind::Zero, 0, std::move(reason), std::move(provenance)};
}

ClassValue ClassValue::unknown(std::string reason, std::string provenance) {
  if (reason.empty())
    throw Error(Errc::InvalidArgument, "Unknown class values need a reason");
  return {Kind::Unknown, 0, std::move(reason), std::move(provenance)};
}

std::string kind_name(ClassValue::Kind kind) {
  switch (kind) {
  case ClassValue::Kind::Integer: return "Integer";
  case ClassValue::Kind::Zero: return "Zero";
  case ClassValue::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

ExteriorElement pair_class_torus(const TorusMapModel &model, int i) {
  model.validate();
  if (i < 2 || i > model.k())
    throw Error(Errc::IndexOutOfRange,
                "pair index " + std::to_string(i) + " outside [2, " +
                    std::to_string(model.k()) + "]");
  const IntegerMatrix diff =
      model.matrices[static_cast<std::size_t>(i - 1)] - model.matrices.front();
  return exterior::pullback(diff, ExteriorElement::top(model.n));
}

ClassValue multi_class_torus(const TorusMapModel &model) {
  model.validate();
  if (model.m != (model.k() - 1) * model.n)
    throw Error(Errc::DimensionMismatch,
                "source dimension " + std::to_string(model.m) +
                    " != (k-1)n = " + std::to_string((model.k() - 1) * model.n));
  ExteriorElement product = ExteriorElement::scalar(model.m, 1);
  for (int i = 2; i <= model.k(); ++i) {
    product = exterior::wedge(product, pair_class_torus(model, i));
    if (product.is_zero())
      break;
  }
  return ClassValue::integer(
      exterior::top_coefficient(product),
      "torus model: cup product of difference-map pair classes");
}

ClassValue sphere_class(int n, int k, const std::vector<int64_t> &hat_degrees) {
  if (k < 2 || n < 1)
    throw Error(Errc::InvalidArgument, "sphere formula needs k >= 2, n >= 1");
  if (static_cast<int>(hat_degrees.size()) != k)
    throw Error(Errc::ArityMismatch,
                "expected " + std::to_string(k) + " degrees, got " +
                    std::to_string(hat_degrees.size()));
  int64_t sum = 0;
  for (int i = 0; i < k; ++i) {
    const int64_t d = hat_degrees[static_cast<std::size_t>(k - i - 1)];
    const bool negative = (static_cast<int64_t>(i) * n) % 2 != 0;
    sum = negative ? checked_sub(sum, d) : checked_add(sum, d);
  }
  return ClassValue::integer(sum, "sphere degree formula");
}

namespace {

// 0-based position of a declared map, or UnknownIdentifier.
std::size_t map_position(const FactModel &model, const std::string &id) {
  for (std::size_t i = 0; i < model.maps.size(); ++i)
    if (model.maps[i].id == id)
      return i;
  throw Error(Errc::UnknownIdentifier, "fact refers to undeclared map \"" +
                                           id + "\"");
}

std::optional<std::string> vanishing_reason(const FactModel &model,
                                            const CohomologyFact &fact) {
  const int k = model.k();
  const int n = model.n;

  if (const auto *f =
          std::get_if<PullbackOfFundamentalClassVanishes>(&fact.statement)) {
    const std::size_t p = map_position(model, f->map_id);
    const auto &base = model.maps.front();
    // (f_1, f_j) with one side constant and the other killing [N] pulls the
    // Thom class back to +-p^*[N] = 0.
    if (p == 0) {
      for (std::size_t j = 1; j < model.maps.size(); ++j)
        if (model.maps[j].constant)
          return "pair class of (" + base.id + ", " + model.maps[j].id +
                 ") vanishes: " + base.id + "^*[" + model.target +
                 "]=0 and " + model.maps[j].id + " is constant";
    } else if (base.constant) {
      return "pair class of (" + base.id + ", " + model.maps[p].id +
             ") vanishes: " + model.maps[p].id + "^*[" + model.target +
             "]=0 and " + base.id + " is constant";
    }
    return std::nullopt;
  }

  if (const auto *f = std::get_if<CohomologyGroupVanishes>(&fact.statement)) {
    if (f->space_id != model.source && f->space_id != model.target)
      throw Error(Errc::UnknownIdentifier, "fact refers to undeclared space \"" +
                                               f->space_id + "\"");
    if (f->space_id != model.source)
      return std::nullopt;
    const std::string group =
        "H^" + std::to_string(f->degree) + "(" + f->space_id + ")=0";
    if (f->degree == n)
      return group + " forces all pair classes to vanish";
    if (f->degree == (k - 1) * n)
      return group + " leaves no room for the class";
    return std::nullopt;
  }

  const auto &f = std::get<PairClassZero>(fact.statement);
  if (f.i < 1 || f.i > k || f.j < 1 || f.j > k)
    throw Error(Errc::UnknownIdentifier,
                "pair (" + std::to_string(f.i) + ", " + std::to_string(f.j) +
                    ") outside 1.." + std::to_string(k));
  if (f.i != f.j && (f.i == 1 || f.j == 1)) {
    const int other = f.i == 1 ? f.j : f.i;
    return "pair class of (" + model.maps.front().id + ", " +
           model.maps[static_cast<std::size_t>(other - 1)].id +
           ") vanishes, hence so does the cup product";
  }
  return std::nullopt;
}

} // namespace

ClassValue class_from_facts(const FactModel &model) {
  if (model.k() < 2)
    throw Error(Errc::DimensionMismatch, "at least two maps are required");
  // Validate every fact before concluding anything.
  std::optional<ClassValue> result;
  for (const auto &fact : model.facts) {
    auto reason = vanishing_reason(model, fact);
    if (reason && !result)
      result = ClassValue::zero(std::move(*reason), fact.justification);
  }
  if (result)
    return *result;
  return ClassValue::unknown("insufficient facts");
}

} // namespace coincidence::lefschetz
