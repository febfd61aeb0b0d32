#include "coincidence/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace coincidence::scenario {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string &path, const std::string &msg) {
  throw Error(Errc::Schema, path + ": " + msg);
}

std::string child(const std::string &path, const std::string &key) {
  return path.empty() ? key : path + "." + key;
}

std::string child(const std::string &path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void require_object(const json &j, const std::string &path,
                    std::initializer_list<const char *> required,
                    std::initializer_list<const char *> optional) {
  if (!j.is_object())
    schema_error(path.empty() ? "<root>" : path, "expected an object");
  std::set<std::string> allowed;
  for (const char *k : required) {
    allowed.insert(k);
    if (!j.contains(k))
      schema_error(child(path, k), "required field missing");
  }
  for (const char *k : optional)
    allowed.insert(k);
  for (const auto &[key, value] : j.items())
    if (!allowed.contains(key))
      schema_error(child(path, key), "unknown field");
}

int64_t read_int(const json &j, const std::string &path) {
  if (!j.is_number_integer())
    schema_error(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<uint64_t>() > INT64_MAX)
    throw Error(Errc::IntegerOverflow, path + ": integer exceeds int64");
  return j.get<int64_t>();
}

int read_small_int(const json &j, const std::string &path, int min) {
  const int64_t v = read_int(j, path);
  if (v < min || v > 1 << 16)
    schema_error(path, "expected an integer in [" + std::to_string(min) +
                           ", 65536]");
  return static_cast<int>(v);
}

bool read_bool(const json &j, const std::string &path) {
  if (!j.is_boolean())
    schema_error(path, "expected a boolean");
  return j.get<bool>();
}

std::string read_string(const json &j, const std::string &path) {
  if (!j.is_string())
    schema_error(path, "expected a string");
  return j.get<std::string>();
}

const json &read_array(const json &j, const std::string &path) {
  if (!j.is_array())
    schema_error(path, "expected an array");
  return j;
}

Rational read_rational(const json &j, const std::string &path) {
  if (j.is_number_integer())
    return {read_int(j, path)};
  if (!j.is_string())
    schema_error(path, "expected an integer or a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error &e) {
    if (e.code() == Errc::Schema)
      schema_error(path, e.what());
    throw;
  }
}

IntegerMatrix read_matrix(const json &j, const std::string &path, int rows,
                          int cols) {
  read_array(j, path);
  if (static_cast<int>(j.size()) != rows)
    throw Error(Errc::DimensionMismatch,
                path + ": expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(j.size()));
  std::vector<int64_t> entries;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto rp = child(path, r);
    read_array(j[r], rp);
    if (static_cast<int>(j[r].size()) != cols)
      throw Error(Errc::DimensionMismatch,
                  rp + ": expected " + std::to_string(cols) +
                      " columns, got " + std::to_string(j[r].size()));
    for (std::size_t c = 0; c < j[r].size(); ++c)
      entries.push_back(read_int(j[r][c], child(rp, c)));
  }
  return {rows, cols, std::move(entries)};
}

TorusAffineModel parse_torus(const json &doc) {
  require_object(doc, "", {"model", "m", "n", "maps"},
                 {"decider", "description"});
  TorusAffineModel model{read_small_int(doc["m"], "m", 1),
                         read_small_int(doc["n"], "n", 1),
                         {}};
  const auto &maps = read_array(doc["maps"], "maps");
  if (maps.size() < 2)
    throw Error(Errc::DimensionMismatch, "maps: at least two maps required");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto p = child("maps", i);
    require_object(maps[i], p, {"matrix"}, {"translation"});
    auto matrix = read_matrix(maps[i]["matrix"], child(p, "matrix"), model.n,
                              model.m);
    std::vector<Rational> translation(static_cast<std::size_t>(model.n));
    if (maps[i].contains("translation")) {
      const auto tp = child(p, "translation");
      const auto &t = read_array(maps[i]["translation"], tp);
      if (static_cast<int>(t.size()) != model.n)
        throw Error(Errc::DimensionMismatch,
                    tp + ": expected " + std::to_string(model.n) +
                        " entries, got " + std::to_string(t.size()));
      for (std::size_t c = 0; c < t.size(); ++c)
        translation[c] = read_rational(t[c], child(tp, c));
    }
    model.maps.emplace_back(std::move(matrix), std::move(translation));
  }
  return model;
}

SphereDegreesModel parse_sphere(const json &doc) {
  require_object(doc, "", {"model", "n", "k", "degrees"},
                 {"decider", "description"});
  SphereDegreesModel model{read_small_int(doc["n"], "n", 1),
                           read_small_int(doc["k"], "k", 2),
                           {}};
  const auto &degrees = read_array(doc["degrees"], "degrees");
  for (std::size_t i = 0; i < degrees.size(); ++i)
    model.degrees.push_back(read_int(degrees[i], child("degrees", i)));
  if (static_cast<int>(model.degrees.size()) != model.k)
    throw Error(Errc::ArityMismatch,
                "degrees: expected k = " + std::to_string(model.k) +
                    " entries, got " + std::to_string(model.degrees.size()));
  return model;
}

lefschetz::CohomologyFact parse_fact(const json &j, const std::string &p) {
  if (!j.is_object() || !j.contains("kind"))
    schema_error(child(p, "kind"), "required field missing");
  const auto kind = read_string(j["kind"], child(p, "kind"));
  lefschetz::CohomologyFact fact;
  if (kind == "PullbackOfFundamentalClassVanishes") {
    require_object(j, p, {"kind", "map", "justification"}, {});
    fact.statement = lefschetz::PullbackOfFundamentalClassVanishes{
        read_string(j["map"], child(p, "map"))};
  } else if (kind == "CohomologyGroupVanishes") {
    require_object(j, p, {"kind", "space", "degree", "justification"}, {});
    fact.statement = lefschetz::CohomologyGroupVanishes{
        read_string(j["space"], child(p, "space")),
        read_small_int(j["degree"], child(p, "degree"), 0)};
  } else if (kind == "PairClassZero") {
    require_object(j, p, {"kind", "i", "j", "justification"}, {});
    fact.statement =
        lefschetz::PairClassZero{read_small_int(j["i"], child(p, "i"), 1),
                                 read_small_int(j["j"], child(p, "j"), 1)};
  } else {
    schema_error(child(p, "kind"), "unknown fact kind \"" + kind + "\"");
  }
  fact.justification = read_string(j["justification"], child(p, "justification"));
  return fact;
}

lefschetz::FactModel parse_facts(const json &doc) {
  require_object(doc, "", {"model", "n", "source", "target", "maps", "facts"},
                 {"decider", "description"});
  lefschetz::FactModel model{read_small_int(doc["n"], "n", 1),
                             read_string(doc["source"], "source"),
                             read_string(doc["target"], "target"),
                             {},
                             {}};
  const auto &maps = read_array(doc["maps"], "maps");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto p = child("maps", i);
    require_object(maps[i], p, {"id"}, {"constant", "description"});
    lefschetz::DeclaredMap decl{read_string(maps[i]["id"], child(p, "id")),
                                false};
    if (maps[i].contains("constant"))
      decl.constant = read_bool(maps[i]["constant"], child(p, "constant"));
    if (!ids.insert(decl.id).second)
      schema_error(child(p, "id"), "duplicate map id \"" + decl.id + "\"");
    model.maps.push_back(std::move(decl));
  }
  if (model.maps.size() < 2)
    throw Error(Errc::DimensionMismatch, "maps: at least two maps required");
  const auto &facts = read_array(doc["facts"], "facts");
  for (std::size_t i = 0; i < facts.size(); ++i)
    model.facts.push_back(parse_fact(facts[i], child("facts", i)));
  return model;
}

DeciderBlock parse_decider(const json &j) {
  const std::string p = "decider";
  require_object(j, p, {"k", "n", "dim_M", "M", "N"},
                 {"obstruction_known_zero", "remarks"});
  DeciderBlock block{read_small_int(j["k"], child(p, "k"), 2),
                     read_small_int(j["n"], child(p, "n"), 1),
                     read_small_int(j["dim_M"], child(p, "dim_M"), 1),
                     {},
                     {},
                     std::nullopt,
                     {}};
  const auto mp = child(p, "M");
  require_object(j["M"], mp, {"closed", "connected", "oriented"}, {});
  block.m_flags = {read_bool(j["M"]["closed"], child(mp, "closed")),
                   read_bool(j["M"]["connected"], child(mp, "connected")),
                   read_bool(j["M"]["oriented"], child(mp, "oriented"))};
  const auto np = child(p, "N");
  require_object(j["N"], np,
                 {"closed", "connected", "orientable", "simply_connected",
                  "jiang_type", "aspherical"},
                 {});
  const auto &n = j["N"];
  block.n_flags.closed = read_bool(n["closed"], child(np, "closed"));
  block.n_flags.connected = read_bool(n["connected"], child(np, "connected"));
  block.n_flags.orientable = read_bool(n["orientable"], child(np, "orientable"));
  block.n_flags.simply_connected =
      read_bool(n["simply_connected"], child(np, "simply_connected"));
  try {
    block.n_flags.jiang_type = decider::parse_jiang_type(
        read_string(n["jiang_type"], child(np, "jiang_type")));
  } catch (const Error &e) {
    if (e.code() == Errc::Schema)
      schema_error(child(np, "jiang_type"), e.what());
    throw;
  }
  block.n_flags.aspherical = read_bool(n["aspherical"], child(np, "aspherical"));
  if (j.contains("obstruction_known_zero"))
    block.obstruction_known_zero = read_bool(
        j["obstruction_known_zero"], child(p, "obstruction_known_zero"));
  if (j.contains("remarks")) {
    const auto rp = child(p, "remarks");
    const auto &remarks = read_array(j["remarks"], rp);
    for (std::size_t i = 0; i < remarks.size(); ++i)
      block.remarks.push_back(read_string(remarks[i], child(rp, i)));
  }
  return block;
}

int model_k(const Model &model) {
  if (const auto *t = std::get_if<TorusAffineModel>(&model))
    return static_cast<int>(t->maps.size());
  if (const auto *sph = std::get_if<SphereDegreesModel>(&model))
    return sph->k;
  return std::get<lefschetz::FactModel>(model).k();
}

void check_consistency(const Model &model, const DeciderBlock &block) {
  const int k = model_k(model);
  const int n = std::visit([](const auto &m) { return m.n; }, model);
  if (block.k != k)
    throw Error(Errc::DimensionMismatch,
                "decider.k: " + std::to_string(block.k) +
                    " does not match the model's " + std::to_string(k) +
                    " maps");
  if (block.n != n)
    throw Error(Errc::DimensionMismatch,
                "decider.n: " + std::to_string(block.n) +
                    " does not match the model's n = " + std::to_string(n));
  if (const auto *t = std::get_if<TorusAffineModel>(&model);
      t && block.dim_m != t->m)
    throw Error(Errc::DimensionMismatch,
                "decider.dim_M: " + std::to_string(block.dim_m) +
                    " does not match the model's m = " + std::to_string(t->m));
}

json class_json(const lefschetz::ClassValue &c) {
  json out{{"kind", lefschetz::kind_name(c.kind())},
           {"provenance", c.provenance()}};
  if (c.kind() == lefschetz::ClassValue::Kind::Integer)
    out["value"] = c.value();
  else
    out["reason"] = c.reason();
  return out;
}

json points_json(const std::vector<affine::CoincidencePoint> &points) {
  json out = json::array();
  for (const auto &p : points) {
    json coords = json::array();
    for (const auto &c : p.coordinates)
      coords.push_back(c.to_string());
    out.push_back({{"coordinates", coords}, {"local_index", p.local_index}});
  }
  return out;
}

lefschetz::ClassValue compute_class(const ScenarioFile &scenario,
                                    json &report) {
  return std::visit(
      [&](const auto &m) -> lefschetz::ClassValue {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, TorusAffineModel>) {
          const auto model = m.matrices();
          json pairs = json::array();
          for (int i = 2; i <= model.k(); ++i)
            pairs.push_back(
                {{"i", i},
                 {"class", lefschetz::pair_class_torus(model, i).to_string()}});
          report["pair_classes"] = pairs;
          return lefschetz::multi_class_torus(model);
        } else if constexpr (std::is_same_v<T, SphereDegreesModel>) {
          return lefschetz::sphere_class(m.n, m.k, m.degrees);
        } else {
          return lefschetz::class_from_facts(m);
        }
      },
      scenario.model);
}

void solver_cross_check(const TorusAffineModel &m,
                        const lefschetz::ClassValue &cls, json &report) {
  const int64_t det = affine::stacked_difference(m.maps).determinant();
  report["stacked_determinant"] = det;
  report["transverse"] = det != 0;
  if (det == 0)
    return;
  const auto points = affine::solve_coincidences(m.maps);
  const int64_t sum = affine::index_sum(points);
  report["index_sum"] = sum;
  report["oracle_agrees"] = sum == cls.value();
}

} // namespace

lefschetz::TorusMapModel TorusAffineModel::matrices() const {
  lefschetz::TorusMapModel out{m, n, {}};
  for (const auto &f : maps)
    out.matrices.push_back(f.matrix());
  return out;
}

ScenarioFile parse_scenario(const json &doc) {
  if (!doc.is_object())
    schema_error("<root>", "expected an object");
  if (!doc.contains("model"))
    schema_error("model", "required field missing");
  const auto kind = read_string(doc["model"], "model");
  ScenarioFile out{SphereDegreesModel{}, std::nullopt, doc};
  if (kind == "torus-affine")
    out.model = parse_torus(doc);
  else if (kind == "sphere-degrees")
    out.model = parse_sphere(doc);
  else if (kind == "facts")
    out.model = parse_facts(doc);
  else
    schema_error("model", "expected \"torus-affine\", \"sphere-degrees\" or "
                          "\"facts\", got \"" + kind + "\"");
  if (doc.contains("description"))
    read_string(doc["description"], "description");
  if (doc.contains("decider")) {
    out.decider = parse_decider(doc["decider"]);
    check_consistency(out.model, *out.decider);
  }
  return out;
}

json build_report(Command cmd, const ScenarioFile &scenario) {
  json report;
  report["inputs_echo"] = scenario.source;
  report["model"] = scenario.source["model"];

  switch (cmd) {
  case Command::Class: {
    report["command"] = "class";
    const auto cls = compute_class(scenario, report);
    report["class"] = class_json(cls);
    if (const auto *t = std::get_if<TorusAffineModel>(&scenario.model))
      solver_cross_check(*t, cls, report);
    break;
  }
  case Command::Solve: {
    report["command"] = "solve";
    const auto *t = std::get_if<TorusAffineModel>(&scenario.model);
    if (!t)
      throw Error(Errc::Schema,
                  "model: solve requires \"torus-affine\", got \"" +
                      scenario.source["model"].get<std::string>() + "\"");
    const int64_t det = affine::stacked_difference(t->maps).determinant();
    const auto points = affine::solve_coincidences(t->maps);
    report["stacked_determinant"] = det;
    report["coincidence_points"] = points_json(points);
    report["point_count"] = points.size();
    report["index_sum"] = affine::index_sum(points);
    break;
  }
  case Command::Decide: {
    report["command"] = "decide";
    if (!scenario.decider)
      throw Error(Errc::Schema, "decider: required for decide");
    const auto cls = compute_class(scenario, report);
    report["class"] = class_json(cls);
    const auto &b = *scenario.decider;
    const decider::Scenario s{b.k,       b.n,
                              b.dim_m,   b.m_flags,
                              b.n_flags, cls,
                              b.obstruction_known_zero, b.remarks};
    json hyps = json::array();
    for (const auto &h : decider::check_hypotheses(s))
      hyps.push_back(
          {{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
    report["hypotheses"] = hyps;
    const auto verdict = decider::decide(s);
    report["verdict"] = {{"decision", decider::decision_name(verdict.decision)},
                         {"rule", verdict.rule},
                         {"notes", verdict.notes}};
    break;
  }
  }
  return report;
}

std::string render(const json &report) { return report.dump(2) + "\n"; }

int exit_code_for(Errc code) {
  switch (code) {
  case Errc::Schema:
  case Errc::UnknownIdentifier:
    return 2;
  case Errc::DimensionMismatch:
  case Errc::RankMismatch:
  case Errc::ArityMismatch:
  case Errc::IndexOutOfRange:
  case Errc::GroupMismatch:
    return 3;
  case Errc::NonTransverse:
    return 4;
  case Errc::IntegerOverflow:
    return 5;
  case Errc::InvalidArgument:
    return 1;
  }
  return 1;
}

RunOutcome run_document(Command cmd, const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    return {2, {}, std::string("Schema: invalid JSON: ") + e.what()};
  }
  try {
    const auto scenario = parse_scenario(doc);
    return {0, render(build_report(cmd, scenario)), {}};
  } catch (const Error &e) {
    return {exit_code_for(e.code()), {}, e.what()};
  } catch (const std::exception &e) {
    return {1, {}, e.what()};
  }
}

RunOutcome run(Command cmd, const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return {1, {}, "cannot open " + path.string()};
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_document(cmd, buf.str());
}

} // namespace coincidence::scenario
