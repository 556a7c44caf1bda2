#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fatpoints/cache.hpp"
#include "fatpoints/json_io.hpp"

using namespace fatpoints;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/fatpoints_test_" + name) {
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("rationals round-trip exactly") {
  mpq_class q(-355, 113);
  q.canonicalize();
  CHECK(rational_from_json(rational_to_json(q)) == q);
  mpq_class big("123456789012345678901234567890/7");
  big.canonicalize();
  CHECK(rational_from_json(rational_to_json(big)) == big);
}

TEST_CASE("two-decimal display") {
  CHECK(approx2(mpq_class(6912, 23)) == "300.52");
  CHECK(approx2(mpq_class(1, 2)) == "0.50");
  CHECK(approx2(mpq_class(199, 200)) == "1.00");  // rounds half up
}

TEST_CASE("triple JSON: full-set shorthand and explicit sets") {
  Triple full = Triple::full(2, 7, {3, 3});
  json jf = to_json(full);
  CHECK(jf.at("D") == json("full"));
  Triple back = triple_from_json(jf);
  CHECK(back.D == full.D);
  CHECK(back.m == full.m);

  Triple partial(2, 3, {ExponentVector({3, 0, 0}), ExponentVector({0, 2, 1})}, {1});
  Triple back2 = triple_from_json(to_json(partial));
  CHECK(back2.D == partial.D);
}

TEST_CASE("certification results round-trip through JSON") {
  auto ords = parse_ordering_list(
      "lex(1,2,0),lex(1,2,0),lex(1,2,0),lex(0,1,2),rlex(1,2,0),rlex(1,2,0)");
  CertificationResult r = algorithm1(7, std::vector<int>(6, 3), ords);
  json j = to_json(r);
  CertificationResult back = certification_from_json(j);
  CHECK(back.bound == r.bound);
  CHECK(back.status == r.status);
  CHECK(back.edim == r.edim);
  REQUIRE(back.trace.steps.size() == r.trace.steps.size());
  for (size_t k = 0; k < r.trace.steps.size(); ++k) {
    CHECK(back.trace.steps[k].removed == r.trace.steps[k].removed);
    CHECK(back.trace.steps[k].point_index == r.trace.steps[k].point_index);
    CHECK(back.trace.steps[k].ordering->str() == r.trace.steps[k].ordering->str());
  }
  CHECK(to_json(back) == j);  // dump equality, not just field equality
}

TEST_CASE("partition plans round-trip through JSON") {
  PartitionPlan plan = strict_partition(StrictPartitionParams::with_defaults(2, 5, 2, 3));
  json j = to_json(plan);
  PartitionPlan back = plan_from_json(j);
  CHECK(back.parts == plan.parts);
  CHECK(back.row_selection == plan.row_selection);
  CHECK(to_json(back) == j);
}

TEST_CASE("oracle results round-trip through JSON") {
  OracleResult r = dim_linear_system(Triple::full(2, 4, {2, 2}), 2, 77);
  OracleResult back = oracle_from_json(to_json(r));
  CHECK(back.dimension == r.dimension);
  CHECK(back.certified_nonspecial == r.certified_nonspecial);
  CHECK(back.trials_used == r.trials_used);
  CHECK(back.seed == r.seed);
}

TEST_CASE("f-value: exact computation and inversion") {
  // e = 83/288, r = 12: f = 1/(1 - 12 e^2) = 82944/276 = 6912/23
  mpq_class e(83, 288);
  auto f = f_value(12, e);
  REQUIRE(f.has_value());
  CHECK(*f == mpq_class(6912, 23));
  // plugging f back recovers e^2 exactly
  mpq_class recovered = (1 - 1 / *f) / 12;
  CHECK(recovered == e * e);

  CHECK(!f_value(9, mpq_class(1, 3)).has_value());  // r e^2 = 1
}

TEST_CASE("seshadri: the (83, 24^12) candidate with the pinned tuple") {
  SeshadriCandidate cand;
  cand.d = 83;
  cand.m.assign(12, 24);
  cand.pinned.push_back(parse_ordering_list(
      "lex(0,1,2),lex(1,2,0),lex(2,0,1),lex(0,1,2),lex(1,2,0),lex(2,0,1),"
      "lex(0,1,2),lex(1,2,0),lex(2,0,1),lex(0,2,1),lex(1,0,2),lex(1,0,2)"));
  SeshadriReport rep = seshadri_verify(12, {&cand, 1}, 0, 1);
  REQUIRE(rep.outcomes.size() == 1);
  CHECK(rep.outcomes[0].certified);
  CHECK(rep.outcomes[0].tuples_tried == 1);
  CHECK(rep.all_certified);
  REQUIRE(rep.e.has_value());
  CHECK(*rep.e == mpq_class(83, 288));
  REQUIRE(rep.f.has_value());
  CHECK(*rep.f == mpq_class(6912, 23));
  CHECK(approx2(*rep.f) == "300.52");

  SeshadriReport back = seshadri_from_json(to_json(rep));
  CHECK(to_json(back) == to_json(rep));
}

TEST_CASE("seshadri: no bound without certificates") {
  SeshadriCandidate cand;
  cand.d = 83;
  cand.m.assign(12, 24);
  SeshadriReport rep = seshadri_verify(12, {&cand, 1}, 0, 1);  // no pinned, no budget
  CHECK(!rep.outcomes[0].certified);
  CHECK(!rep.all_certified);
  CHECK(!rep.e.has_value());
  CHECK(!rep.f.has_value());
}

TEST_CASE("seshadri: under-determined candidates are rejected") {
  SeshadriCandidate cand;
  cand.d = 9;
  cand.m.assign(9, 3);  // edim 1
  CHECK_THROWS_AS(seshadri_verify(9, {&cand, 1}, 0, 1), std::invalid_argument);
}

TEST_CASE("seshadri: random tuples are deterministic per seed") {
  SeshadriCandidate cand;
  cand.d = 7;
  cand.m.assign(6, 3);
  SeshadriReport a = seshadri_verify(6, {&cand, 1}, 5, 12345);
  SeshadriReport b = seshadri_verify(6, {&cand, 1}, 5, 12345);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("cache: hits replay stored bytes, distinct seeds recompute") {
  TempFile tmp("cache.jsonl");
  int computes = 0;
  auto compute = [&] {
    ++computes;
    return json{{"value", computes}};
  };
  {
    ResultCache cache(tmp.path);
    json k1{{"method", "dim"}, {"seed", 1}};
    json first = cache.get_or_compute(k1, compute);
    json again = cache.get_or_compute(k1, compute);
    CHECK(computes == 1);
    CHECK(first.dump() == again.dump());
    cache.get_or_compute(json{{"method", "dim"}, {"seed", 2}}, compute);
    CHECK(computes == 2);
  }
  {
    ResultCache reloaded(tmp.path);  // replay across instances
    CHECK(reloaded.size() == 2);
    json v = reloaded.get_or_compute(json{{"method", "dim"}, {"seed", 1}}, compute);
    CHECK(computes == 2);
    CHECK(v.at("value") == 1);
  }
}

TEST_CASE("cache: corrupted lines are skipped") {
  TempFile tmp("corrupt.jsonl");
  {
    std::ofstream out(tmp.path);
    out << R"({"key":{"a":1},"value":{"ok":true}})" << "\n";
    out << "this is not json\n";
    out << R"({"missing":"value field"})" << "\n";
  }
  ResultCache cache(tmp.path);
  CHECK(cache.size() == 1);
  CHECK(cache.contains(json{{"a", 1}}));
}

TEST_SUITE_END();
