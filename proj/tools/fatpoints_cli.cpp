// fatpoints: exact dimension computations and non-speciality certificates for
// linear systems of hypersurfaces with fat base points at general points.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fatpoints/cache.hpp"
#include "fatpoints/combinat.hpp"
#include "fatpoints/jet.hpp"
#include "fatpoints/json_io.hpp"
#include "fatpoints/partition.hpp"
#include "fatpoints/reduction.hpp"
#include "fatpoints/seshadri.hpp"

using namespace fatpoints;
using nlohmann::json;

namespace {

json parse_json_arg(const std::string& arg) {
  // inline JSON when it looks like JSON, otherwise a file path
  if (!arg.empty() && (arg.front() == '[' || arg.front() == '{'))
    return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open file '" + arg + "'");
  json j;
  in >> j;
  return j;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

void emit(const json& report, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << report.dump() << "\n";
  else
    std::cout << text << "\n";
}

std::optional<ResultCache> open_cache(const std::string& flag) {
  if (!flag.empty()) return ResultCache(flag);
  if (const char* env = std::getenv("FATPOINTS_CACHE"); env && *env)
    return ResultCache(env);
  return std::nullopt;
}

json cached(std::optional<ResultCache>& cache, const json& key,
            const std::function<json()>& compute) {
  if (cache) return cache->get_or_compute(key, compute);
  return compute();
}

Triple triple_from_flags(int n, int d, const std::vector<int>& m,
                         const std::string& d_set) {
  if (d_set.empty()) return Triple::full(n, d, m);
  return Triple(n, d, points_from_json(parse_json_arg(d_set)), m);
}

std::string status_str(CertStatus s) {
  return s == CertStatus::nonspecial ? "nonspecial" : "undecided";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension oracle and non-speciality certificates for fat-point linear systems"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool as_json = false;
  std::string cache_path;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--cache", cache_path, "append-only JSON-lines result cache");

  // ---- dim ----
  auto* dim = app.add_subcommand("dim", "randomized-evaluation exact dimension");
  int dim_n = 2, dim_d = 1, dim_trials = 3;
  uint64_t dim_seed = 0;
  std::string dim_m, dim_D;
  dim->add_option("--n", dim_n, "ambient projective dimension")->required();
  dim->add_option("--d", dim_d, "degree")->required();
  dim->add_option("--m", dim_m, "multiplicities, e.g. 3,3,3")->required();
  dim->add_option("--D", dim_D, "point set JSON (file or inline); omit for all of D(d)");
  dim->add_option("--trials", dim_trials, "independent random evaluations");
  dim->add_option("--seed", dim_seed, "random seed");

  // ---- wdim ----
  auto* wdim = app.add_subcommand("wdim", "dim of degree-(m-1) forms vanishing on E");
  int w_n = 2, w_m = 1;
  std::string w_points;
  wdim->add_option("--n", w_n)->required();
  wdim->add_option("--m", w_m)->required();
  wdim->add_option("--points", w_points, "E as JSON array of exponent vectors")->required();

  // ---- check-single ----
  auto* single = app.add_subcommand("check-single", "single-fat-point speciality test");
  int cs_n = 2, cs_m = 1;
  std::string cs_points;
  single->add_option("--n", cs_n)->required();
  single->add_option("--m", cs_m)->required();
  single->add_option("--points", cs_points)->required();

  // ---- af ----
  auto* af = app.add_subcommand("af", "n=2 parallel-row classification");
  int af_m = 1;
  std::string af_points;
  af->add_option("--m", af_m)->required();
  af->add_option("--points", af_points)->required();

  // ---- reduce ----
  auto* red = app.add_subcommand("reduce", "one row-filling (m,<=)-reduction step");
  int red_d = 1, red_m = 1;
  std::string red_ord, red_D;
  red->add_option("--d", red_d)->required();
  red->add_option("--m", red_m)->required();
  red->add_option("--ord", red_ord, "ordering, e.g. lex(0,1,2)")->required();
  red->add_option("--D", red_D, "point set JSON; omit for all of D(d)");

  // ---- alg1 ----
  auto* alg1 = app.add_subcommand("alg1", "row-filling reduction chain on D(d)");
  int a1_n = 2, a1_d = 1;
  std::string a1_m, a1_ords;
  alg1->add_option("--n", a1_n, "must be 2");
  alg1->add_option("--d", a1_d)->required();
  alg1->add_option("--m", a1_m)->required();
  alg1->add_option("--ords", a1_ords, "orderings in execution order")->required();

  // ---- alg0 ----
  auto* alg0 = app.add_subcommand("alg0", "minimal-subset reduction chain");
  int a0_n = 2, a0_d = 1;
  std::string a0_m, a0_ords, a0_D;
  alg0->add_option("--n", a0_n)->required();
  alg0->add_option("--d", a0_d)->required();
  alg0->add_option("--m", a0_m)->required();
  alg0->add_option("--ords", a0_ords)->required();
  alg0->add_option("--D", a0_D, "point set JSON; omit for all of D(d)");

  // ---- verify-partition ----
  auto* verify = app.add_subcommand("verify-partition", "exceptionality check of a plan");
  std::string v_plan;
  uint64_t v_budget = 100'000'000ULL;
  verify->add_option("--plan", v_plan, "PartitionPlan JSON")->required();
  verify->add_option("--budget", v_budget, "search-node limit");

  // ---- strict-partition ----
  auto* strict = app.add_subcommand("strict-partition", "hyperplane-cut plan for d < m*s");
  int sp_n = 2, sp_d = 1, sp_m = 1, sp_s = 1;
  std::string sp_mu;
  bool sp_verify = false;
  strict->add_option("--n", sp_n)->required();
  strict->add_option("--d", sp_d)->required();
  strict->add_option("--m", sp_m)->required();
  strict->add_option("--s", sp_s)->required();
  strict->add_option("--mu", sp_mu, "cutting threshold as p/q (default: derived)");
  strict->add_flag("--verify", sp_verify, "also run the exceptionality check");

  // ---- plan ----
  auto* plan = app.add_subcommand("plan", "run a generalized reduction plan");
  std::string p_triple, p_steps;
  uint64_t p_budget = 100'000'000ULL;
  plan->add_option("--triple", p_triple, "Triple JSON")->required();
  plan->add_option("--steps", p_steps,
                   "JSON list of {\"reduce\": \"lex(0,1,2)\"} or {\"partition\": {...}}")
      ->required();
  plan->add_option("--budget", p_budget);

  // ---- seshadri ----
  auto* sesh = app.add_subcommand("seshadri", "certify Seshadri candidate triples");
  int se_r = 0, se_budget = 0;
  uint64_t se_seed = 0;
  std::string se_cands, se_homog;
  sesh->add_option("--r", se_r, "point count")->required();
  sesh->add_option("--candidates", se_cands,
                   "JSON list of {\"d\":..,\"m\":[..],\"ords\":[\"lex(..),..\",..]}");
  sesh->add_option("--homogeneous", se_homog, "d,m: use the single candidate (d, m^r)");
  sesh->add_option("--budget", se_budget, "random ordering tuples per candidate");
  sesh->add_option("--seed", se_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    auto cache = open_cache(cache_path);

    if (*dim) {
      Triple t = triple_from_flags(dim_n, dim_d, parse_int_list(dim_m), dim_D);
      json key{{"method", "dim"},     {"n", t.n}, {"d", t.d},
               {"m", t.m},            {"D", ResultCache::point_set_digest(to_json(t.D))},
               {"trials", dim_trials}, {"seed", dim_seed}};
      json rep = cached(cache, key, [&] {
        return to_json(dim_linear_system(t, dim_trials, dim_seed));
      });
      OracleResult r = oracle_from_json(rep);
      std::ostringstream os;
      os << "dimension " << r.dimension
         << (r.certified_nonspecial ? " (certified non-special)" : " (upper bound)")
         << ", trials used " << r.trials_used;
      emit(rep, as_json, os.str());
    } else if (*wdim) {
      PointSet E = points_from_json(parse_json_arg(w_points));
      long long w = w_dimension(w_n, w_m, E);
      emit(json{{"w_dimension", w}}, as_json, "w_dimension " + std::to_string(w));
    } else if (*single) {
      PointSet E = points_from_json(parse_json_arg(cs_points));
      Speciality s = is_special_single(cs_n, E, cs_m);
      const char* txt = s == Speciality::special ? "special" : "nonspecial";
      emit(json{{"verdict", txt}}, as_json, txt);
    } else if (*af) {
      PointSet E = points_from_json(parse_json_arg(af_points));
      AfClass c = af_classify(E, af_m);
      const char* txt = c == AfClass::special      ? "special"
                        : c == AfClass::nonspecial ? "nonspecial"
                                                   : "inconclusive";
      emit(json{{"verdict", txt}}, as_json, txt);
    } else if (*red) {
      PointSet D = red_D.empty() ? enumerate_simplex(2, red_d)
                                 : points_from_json(parse_json_arg(red_D));
      MpReduction r = mp_reduction(D, red_m, MonomialOrdering::parse(red_ord));
      ReductionStep step;
      step.point_index = 1;
      step.multiplicity = red_m;
      step.ordering = MonomialOrdering::parse(red_ord);
      step.removed = r.removed;
      step.rows = r.rows;
      step.augmentation = r.augmentation;
      std::ostringstream os;
      os << "removed " << r.removed.size() << " points";
      emit(to_json(step), as_json, os.str());
    } else if (*alg1) {
      if (a1_n != 2) throw std::invalid_argument("alg1: only n = 2 is supported");
      std::vector<int> m = parse_int_list(a1_m);
      auto ords = parse_ordering_list(a1_ords);
      json key{{"method", "alg1"}, {"n", 2},      {"d", a1_d},
               {"m", m},           {"ords", a1_ords}, {"seed", 0}};
      json rep = cached(cache, key, [&] { return to_json(algorithm1(a1_d, m, ords)); });
      CertificationResult r = certification_from_json(rep);
      std::ostringstream os;
      os << status_str(r.status) << ", bound " << r.bound << " (edim " << r.edim << ")";
      emit(rep, as_json, os.str());
    } else if (*alg0) {
      std::vector<int> m = parse_int_list(a0_m);
      auto ords = parse_ordering_list(a0_ords);
      PointSet D = a0_D.empty() ? enumerate_simplex(a0_n, a0_d)
                                : points_from_json(parse_json_arg(a0_D));
      json key{{"method", "alg0"},  {"n", a0_n}, {"d", a0_d},
               {"m", m},            {"ords", a0_ords},
               {"D", ResultCache::point_set_digest(to_json(canonicalize(D)))},
               {"seed", 0}};
      json rep = cached(cache, key, [&] { return to_json(algorithm0(a0_n, D, m, ords)); });
      CertificationResult r = certification_from_json(rep);
      std::ostringstream os;
      os << status_str(r.status) << ", bound " << r.bound << " (edim " << r.edim << ")";
      emit(rep, as_json, os.str());
    } else if (*verify) {
      PartitionPlan p = plan_from_json(parse_json_arg(v_plan));
      VerifyOutcome v = verify_exceptional(p, v_budget);
      json rep = to_json(v);
      emit(rep, as_json, rep.at("verdict").get<std::string>() + " after " +
                             std::to_string(v.nodes) + " nodes");
    } else if (*strict) {
      StrictPartitionParams params;
      if (sp_mu.empty()) {
        params = StrictPartitionParams::with_defaults(sp_n, sp_d, sp_m, sp_s);
      } else {
        params.n = sp_n;
        params.d = sp_d;
        params.m = sp_m;
        params.s = sp_s;
        params.mu = mpq_class(sp_mu);
        params.mu.canonicalize();
      }
      PartitionPlan p = strict_partition(params);
      json rep = to_json(p);
      rep["mu"] = rational_to_json(params.mu);
      std::ostringstream os;
      os << p.parts.size() << " parts covering " << p.removed_count() << " points, mu = "
         << params.mu.get_num().get_str() << "/" << params.mu.get_den().get_str();
      if (sp_verify) {
        VerifyOutcome v = verify_exceptional(p);
        rep["verify"] = to_json(v);
        os << "; verification: "
           << to_json(v).at("verdict").get<std::string>();
      }
      emit(rep, as_json, os.str());
    } else if (*plan) {
      Triple t = triple_from_json(parse_json_arg(p_triple));
      std::vector<PlanStep> steps;
      for (const auto& sj : parse_json_arg(p_steps)) {
        PlanStep st;
        if (sj.contains("reduce"))
          st.action = MonomialOrdering::parse(sj.at("reduce").get<std::string>());
        else if (sj.contains("partition"))
          st.action = plan_from_json(sj.at("partition"));
        else
          throw std::invalid_argument("plan step needs 'reduce' or 'partition'");
        steps.push_back(std::move(st));
      }
      PlanRunOutcome o = run_generalized_plan(t, steps, p_budget);
      std::ostringstream os;
      os << status_str(o.cert.status) << ", bound " << o.cert.bound << " (edim "
         << o.cert.edim << ")";
      emit(to_json(o), as_json, os.str());
    } else if (*sesh) {
      std::vector<SeshadriCandidate> cands;
      if (!se_homog.empty()) {
        std::vector<int> dm = parse_int_list(se_homog);
        if (dm.size() != 2)
          throw std::invalid_argument("--homogeneous expects d,m");
        SeshadriCandidate c;
        c.d = dm[0];
        c.m.assign(static_cast<size_t>(se_r), dm[1]);
        cands.push_back(std::move(c));
      }
      if (!se_cands.empty()) {
        for (const auto& cj : parse_json_arg(se_cands)) {
          SeshadriCandidate c;
          c.d = cj.at("d").get<int>();
          c.m = cj.at("m").get<std::vector<int>>();
          if (cj.contains("ords"))
            for (const auto& oj : cj.at("ords"))
              c.pinned.push_back(parse_ordering_list(oj.get<std::string>()));
          cands.push_back(std::move(c));
        }
      }
      SeshadriReport rep = seshadri_verify(se_r, cands, se_budget, se_seed);
      json rj = to_json(rep);
      std::ostringstream os;
      size_t ok = 0;
      for (const auto& o : rep.outcomes) ok += o.certified;
      os << ok << "/" << rep.outcomes.size() << " candidates certified";
      if (rep.e) {
        os << "; e >= " << rep.e->get_num().get_str() << "/" << rep.e->get_den().get_str();
        if (rep.f)
          os << ", f = " << rep.f->get_num().get_str() << "/" << rep.f->get_den().get_str()
             << " (~" << approx2(*rep.f) << ")";
      }
      emit(rj, as_json, os.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
