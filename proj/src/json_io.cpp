#include "fatpoints/json_io.hpp"

#include <stdexcept>

namespace fatpoints {

Json rational_to_json(const mpq_class& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

mpq_class rational_from_json(const Json& j) {
  mpq_class q(mpz_class(j.at("num").get<std::string>()),
              mpz_class(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

Json to_json(const ExponentVector& v) {
  Json arr = Json::array();
  for (int k = 0; k < v.size(); ++k) arr.push_back(v[k]);
  return arr;
}

ExponentVector exponent_from_json(const Json& j) {
  return ExponentVector(j.get<std::vector<int>>());
}

Json to_json(const PointSet& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

PointSet points_from_json(const Json& j) {
  PointSet out;
  for (const auto& item : j) out.push_back(exponent_from_json(item));
  return out;
}

Json to_json(const Triple& t) {
  Json j{{"n", t.n}, {"d", t.d}, {"m", t.m}};
  j["D"] = t.is_full() ? Json("full") : to_json(t.D);
  return j;
}

Triple triple_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  std::vector<int> m = j.at("m").get<std::vector<int>>();
  if (j.at("D").is_string() && j.at("D").get<std::string>() == "full")
    return Triple::full(n, d, std::move(m));
  return Triple(n, d, points_from_json(j.at("D")), std::move(m));
}

Json to_json(const MonomialOrdering& ord) { return Json(ord.str()); }

MonomialOrdering ordering_from_json(const Json& j) {
  return MonomialOrdering::parse(j.get<std::string>());
}

Json to_json(const OracleResult& r) {
  return Json{{"dimension", r.dimension},
              {"certified_nonspecial", r.certified_nonspecial},
              {"trials_used", r.trials_used},
              {"seed", r.seed}};
}

OracleResult oracle_from_json(const Json& j) {
  OracleResult r;
  r.dimension = j.at("dimension").get<long long>();
  r.certified_nonspecial = j.at("certified_nonspecial").get<bool>();
  r.trials_used = j.at("trials_used").get<int>();
  r.seed = j.at("seed").get<uint64_t>();
  return r;
}

Json to_json(const ReductionStep& s) {
  Json j{{"point", s.point_index},
         {"multiplicity", s.multiplicity},
         {"removed", to_json(s.removed)},
         {"augmentation", s.augmentation}};
  if (s.ordering) j["ordering"] = to_json(*s.ordering);
  if (s.chosen_c) j["c"] = *s.chosen_c;
  if (!s.rows.empty()) {
    Json rows = Json::array();
    for (const auto& r : s.rows) {
      rows.push_back(Json{{"level", r.level},
                          {"row_size", r.row_size},
                          {"u", r.u},
                          {"u_prime", r.u_prime},
                          {"omega", r.omega}});
    }
    j["rows"] = rows;
  }
  return j;
}

Json to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  return Json{{"initial", to_json(t.initial)},
              {"steps", steps},
              {"final", to_json(t.final_set)}};
}

Json to_json(const CertificationResult& r) {
  return Json{{"bound", r.bound},
              {"status", r.status == CertStatus::nonspecial ? "nonspecial" : "undecided"},
              {"edim", r.edim},
              {"trace", to_json(r.trace)}};
}

namespace {

ReductionStep step_from_json(const Json& j) {
  ReductionStep s;
  s.point_index = j.at("point").get<int>();
  s.multiplicity = j.at("multiplicity").get<int>();
  s.removed = points_from_json(j.at("removed"));
  s.augmentation = j.at("augmentation").get<int>();
  if (j.contains("ordering")) s.ordering = ordering_from_json(j.at("ordering"));
  if (j.contains("c")) s.chosen_c = j.at("c").get<int>();
  if (j.contains("rows")) {
    for (const auto& rj : j.at("rows")) {
      RowReductionRecord r;
      r.level = rj.at("level").get<long long>();
      r.row_size = rj.at("row_size").get<int>();
      r.u = rj.at("u").get<int>();
      r.u_prime = rj.at("u_prime").get<int>();
      r.omega = rj.at("omega").get<std::vector<int>>();
      s.rows.push_back(std::move(r));
    }
  }
  return s;
}

}  // namespace

CertificationResult certification_from_json(const Json& j) {
  CertificationResult r;
  r.bound = j.at("bound").get<long long>();
  r.status = j.at("status").get<std::string>() == "nonspecial" ? CertStatus::nonspecial
                                                               : CertStatus::undecided;
  r.edim = j.at("edim").get<long long>();
  const Json& tj = j.at("trace");
  r.trace.initial = points_from_json(tj.at("initial"));
  for (const auto& sj : tj.at("steps")) r.trace.steps.push_back(step_from_json(sj));
  r.trace.final_set = points_from_json(tj.at("final"));
  return r;
}

Json to_json(const PartitionPlan& p) {
  Json parts = Json::array(), rows = Json::array();
  for (const auto& e : p.parts) parts.push_back(to_json(e));
  for (const auto& u : p.row_selection) rows.push_back(to_json(u));
  return Json{{"triple", to_json(p.triple)}, {"parts", parts}, {"rows", rows}};
}

PartitionPlan plan_from_json(const Json& j) {
  PartitionPlan p;
  p.triple = triple_from_json(j.at("triple"));
  for (const auto& e : j.at("parts")) p.parts.push_back(points_from_json(e));
  for (const auto& u : j.at("rows")) p.row_selection.push_back(points_from_json(u));
  p.validate();
  return p;
}

Json to_json(const VerifyOutcome& v) {
  Json j{{"nodes", v.nodes}};
  switch (v.verdict) {
    case ExceptionalVerdict::exceptional: j["verdict"] = "exceptional"; break;
    case ExceptionalVerdict::not_exceptional: j["verdict"] = "not_exceptional"; break;
    case ExceptionalVerdict::budget_exceeded: j["verdict"] = "budget_exceeded"; break;
  }
  if (v.witness) {
    Json w = Json::array();
    for (const auto& part : *v.witness) w.push_back(to_json(part));
    j["witness"] = w;
  }
  return j;
}

Json to_json(const PlanRunOutcome& o) {
  Json steps = Json::array();
  for (const auto& s : o.steps) {
    Json sj{{"first_point", s.first_point},
            {"last_point", s.last_point},
            {"kind", s.is_partition ? "partition" : "reduce"},
            {"verified", s.verified},
            {"removed", s.removed}};
    steps.push_back(sj);
  }
  return Json{{"result", to_json(o.cert)}, {"steps", steps}};
}

Json to_json(const SeshadriReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    Json oj{{"d", o.d},
            {"m", o.m},
            {"certified", o.certified},
            {"bound", o.bound},
            {"tuples_tried", o.tuples_tried}};
    if (o.certifying_ords) oj["ords"] = format_ordering_list(*o.certifying_ords);
    outcomes.push_back(oj);
  }
  Json j{{"r", r.r},
         {"seed", r.seed},
         {"candidates", outcomes},
         {"all_certified", r.all_certified}};
  if (r.e) j["e"] = rational_to_json(*r.e);
  if (r.f) {
    j["f"] = rational_to_json(*r.f);
    j["f_approx"] = approx2(*r.f);
  }
  return j;
}

SeshadriReport seshadri_from_json(const Json& j) {
  SeshadriReport r;
  r.r = j.at("r").get<int>();
  r.seed = j.at("seed").get<uint64_t>();
  r.all_certified = j.at("all_certified").get<bool>();
  for (const auto& oj : j.at("candidates")) {
    CandidateOutcome o;
    o.d = oj.at("d").get<int>();
    o.m = oj.at("m").get<std::vector<int>>();
    o.certified = oj.at("certified").get<bool>();
    o.bound = oj.at("bound").get<long long>();
    o.tuples_tried = oj.at("tuples_tried").get<int>();
    if (oj.contains("ords"))
      o.certifying_ords = parse_ordering_list(oj.at("ords").get<std::string>());
    r.outcomes.push_back(std::move(o));
  }
  if (j.contains("e")) r.e = rational_from_json(j.at("e"));
  if (j.contains("f")) r.f = rational_from_json(j.at("f"));
  return r;
}

std::string approx2(const mpq_class& q) {
  mpq_class scaled = q * 100;
  mpz_class twice_num = scaled.get_num() * 2 + scaled.get_den();  // round half up
  mpz_class hundredths = twice_num / (scaled.get_den() * 2);
  mpz_class whole = hundredths / 100;
  mpz_class frac = hundredths % 100;
  std::string fs = frac.get_str();
  if (fs.size() < 2) fs.insert(fs.begin(), 2 - fs.size(), '0');
  return whole.get_str() + "." + fs;
}

}  // namespace fatpoints
