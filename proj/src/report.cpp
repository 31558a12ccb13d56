#include "hollab/report.hpp"

#include "hollab/cycle_notation.hpp"
#include "hollab/errors.hpp"

namespace hollab::report {

using criterion::Conclusion;
using criterion::InconclusiveKind;

namespace {

std::string kind_name(InconclusiveKind k) {
  switch (k) {
  case InconclusiveKind::None:
    return "none";
  case InconclusiveKind::Mathematical:
    return "mathematical";
  case InconclusiveKind::AtScale:
    return "at scale";
  }
  return "none";
}

} // namespace

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["tool"] = "hollab";
  j["version"] = kVersion;
  j["seed"] = 0;
  j["command"] = command;
  return j;
}

Json group_json(const Group& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["generators"] = format_generators(g);
  return j;
}

Group group_from_json(const Json& j) {
  try {
    const std::size_t degree = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& s : j.at("generators"))
      gens.push_back(parse_perm(s.get<std::string>(), degree));
    Group g(degree, gens);
    if (j.contains("order") && g.order() != j.at("order").get<std::uint64_t>())
      throw InputError("group order does not match the recorded order");
    return g;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed group in report: ") + e.what());
  }
}

Json witness_json(const criterion::CriterionWitness& w) {
  Json j;
  j["part"] = w.part == criterion::Part::A ? "a" : "b";
  j["P"] = group_json(w.P);
  j["A"] = group_json(w.A);
  j["B"] = group_json(w.B);
  j["complement"] = w.complement ? group_json(*w.complement) : Json(nullptr);
  return j;
}

criterion::CriterionWitness witness_from_json(const Json& j) {
  criterion::CriterionWitness w{group_from_json(j.at("P")), group_from_json(j.at("A")),
                                group_from_json(j.at("B")),
                                j.at("part") == "b" ? criterion::Part::B : criterion::Part::A,
                                std::nullopt};
  if (!j.at("complement").is_null())
    w.complement = group_from_json(j.at("complement"));
  return w;
}

Json verdict_json(const std::string& name, const Group& N, const criterion::Verdict& v) {
  Json j;
  j["N"] = name;
  j["N_group"] = group_json(N);
  j["tuple"] = criterion::format_tuple(v);
  j["index"] = v.index;
  j["normal"] = v.normal;
  j["n_order"] = v.n_order;
  j["conclusion"] = criterion::to_string(v.conclusion);
  j["inconclusive_kind"] = kind_name(v.kind);
  j["reason"] = v.reason;
  Json rows = Json::array();
  for (const auto& r : v.rows) {
    Json row;
    row["P"] = group_json(r.P);
    row["part_a"] = r.part_a;
    row["part_b"] = r.part_b;
    row["at_scale"] = r.at_scale;
    row["reason"] = r.reason;
    row["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
    rows.push_back(row);
  }
  j["rows"] = rows;
  Json ws = Json::array();
  for (const auto& w : v.witnesses)
    ws.push_back(witness_json(w));
  j["witnesses"] = ws;
  return j;
}

criterion::Verdict verdict_from_json(const Json& j) {
  criterion::Verdict v;
  v.index = j.at("index").get<std::uint64_t>();
  v.normal = j.at("normal").get<bool>();
  v.n_order = j.at("n_order").get<std::uint64_t>();
  const auto c = j.at("conclusion").get<std::string>();
  v.conclusion = c == "true" ? Conclusion::True : c == "false" ? Conclusion::False : Conclusion::Inconclusive;
  const auto k = j.at("inconclusive_kind").get<std::string>();
  v.kind = k == "mathematical" ? InconclusiveKind::Mathematical
           : k == "at scale"   ? InconclusiveKind::AtScale
                               : InconclusiveKind::None;
  v.reason = j.at("reason").get<std::string>();
  for (const auto& w : j.at("witnesses"))
    v.witnesses.push_back(witness_from_json(w));
  return v;
}

Json theorem_witness_json(const psl2::TheoremWitness& w) {
  Json j;
  j["case"] = psl2::to_string(w.case_tag);
  j["N"] = group_json(w.N);
  j["P"] = group_json(w.P);
  j["A"] = group_json(w.A);
  j["B"] = group_json(w.B);
  j["E"] = group_json(w.E);
  j["complement"] = group_json(w.complement);
  j["checks"] = {{"P=AB", w.checks.product},
                 {"A meet B = 1", w.checks.trivial_meet},
                 {"AN=BN", w.checks.same_join},
                 {"A splits over A meet N", w.checks.splits},
                 {"coprime", w.checks.coprime_split}};
  return j;
}

Json search_json(const holomorph::SearchResult& r) {
  Json j;
  j["status"] = holomorph::to_string(r.status);
  j["reason"] = r.reason;
  if (r.witness) {
    Json w = group_json(r.witness->G);
    w["solvable"] = r.witness->solvable;
    w["fingerprint"] = holomorph::to_string(r.witness->hint);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  Json classes = Json::array();
  for (const auto& g : r.regular_classes) {
    Json c = group_json(g);
    c["exponent"] = exponent(g);
    c["abelian"] = is_abelian(g);
    classes.push_back(c);
  }
  j["regular_classes"] = classes;
  return j;
}

} // namespace hollab::report
