#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "chebdense/errors.hpp"
#include "chebdense/galois_context.hpp"
#include "support/brute.hpp"

using namespace chebdense;

namespace {

std::string class_id_of(const GaloisContext& ctx, u64 p) {
  const Classification c = classify_prime(ctx, p);
  if (c.is_excluded()) return "EXCLUDED:" + std::string(to_string(*c.excluded));
  return ctx.classes()[static_cast<std::size_t>(c.class_index)].id;
}

const char* kQuarticResidueDoc = R"({
  "label": "gaussian-via-mod-4",
  "mode": "residue",
  "modulus": 4,
  "poly": [1, 0, 1],
  "group_order": 2,
  "classes": [
    {"id": "split", "name": "p = 1 mod 4", "size": 1, "residues": [1]},
    {"id": "inert", "name": "p = 3 mod 4", "size": 1, "residues": [3]}
  ],
  "excluded_primes": [2]
})";

}  // namespace

TEST_SUITE("frobenius") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  // Phi_105 is the first with a coefficient of absolute value 2.
  CHECK(cyclotomic_polynomial(105)[7] == -2);
  for (u64 k = 1; k <= 60; ++k) CHECK(cyclotomic_polynomial(k).size() == euler_phi(k) + 1);
}

TEST_CASE("phi and multiplicative order") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(10, 7) == 6);
  CHECK_THROWS_AS(multiplicative_order(4, 6), PreconditionError);
}

TEST_CASE("classify_prime worked examples") {
  const GaloisContext c5 = cyclotomic_context(5);
  CHECK(class_id_of(c5, 7) == "2");
  CHECK(class_id_of(c5, 5) == "EXCLUDED:ramified");
  const GaloisContext s3 = s3_x3_2_context();
  CHECK(class_id_of(s3, 5) == "transpositions");
  CHECK(class_id_of(s3, 31) == "identity");
  CHECK(class_id_of(s3, 7) == "3-cycles");
  CHECK(class_id_of(s3, 3) == "EXCLUDED:ramified");
  CHECK(class_id_of(s3, 2) == "EXCLUDED:ramified");
  CHECK(*classify_prime(s3, 31).cycle_type == CycleType::of({1, 1, 1}));
  CHECK_THROWS_AS(classify_prime(s3, 1), PreconditionError);
}

TEST_CASE("S3 classification agrees with exhaustive root counting") {
  const GaloisContext s3 = s3_x3_2_context();
  for (u64 p = 5; p < 20000; ++p) {
    if (!brute::is_prime(p)) continue;
    REQUIRE(classify_prime(s3, p).class_index == brute::s3_class(p));
  }
}

TEST_CASE("cyclotomic factor degrees equal the order of p") {
  for (u64 k : {3ull, 4ull, 5ull, 7ull, 8ull, 12ull, 15ull, 16ull}) {
    const auto phi = cyclotomic_polynomial(k);
    for (u64 p = 2; p < 3000; ++p) {
      if (!brute::is_prime(p) || brute::gcd(p, k) != 1) continue;
      const CycleType t = ddf_pattern(PolyModP::from_integers(p, phi));
      for (unsigned part : t.parts) REQUIRE(part == brute::order(p, k));
    }
  }
}

TEST_CASE("quadratic presets") {
  const GaloisContext q = quadratic_context(-1);
  CHECK(class_id_of(q, 2) == "EXCLUDED:ramified");
  CHECK(class_id_of(q, 5) == "split");
  CHECK(class_id_of(q, 7) == "inert");
  CHECK_THROWS_AS(quadratic_context(9), PreconditionError);
  const GaloisContext q5 = quadratic_context(5);
  CHECK(class_id_of(q5, 5) == "EXCLUDED:ramified");
  CHECK(class_id_of(q5, 11) == "split");
  CHECK(class_id_of(q5, 13) == "inert");
}

TEST_CASE("unlisted non-squarefree reductions are excluded") {
  // x^2 + 3 has discriminant -12, but the listed primes omit 3.
  const GaloisContext ctx = GaloisContext::create(
      "partial", {3, 0, 1}, 2,
      {{"split", "split", 1, {}, CycleType::of({1, 1})},
       {"inert", "inert", 1, {}, CycleType::of({2})}},
      ClassifierMode::cycle_type, 0, {2});
  const Classification c = classify_prime(ctx, 3);
  CHECK(c.is_excluded());
  CHECK(*c.excluded == ExclusionReason::nonsquarefree);
  CHECK(class_id_of(ctx, 7) == "split");

  const PrimeClassifier classifier(ctx, 100);
  CHECK(classifier.class_of(3) == -1);
  CHECK(classifier.class_of(7) == 0);
  CHECK(classifier.nonsquarefree_exclusions() >= 1);
}

TEST_CASE("contexts are validated on creation") {
  const auto bad = [](auto&&... args) {
    CHECK_THROWS_AS(GaloisContext::create(args...), ConfigError);
  };
  using CT = ClassifierMode;
  bad("not-monic", std::vector<std::int64_t>{1, 2}, u64{1},
      std::vector<ConjClassSpec>{{"a", "a", 1, {}, CycleType::of({1})}}, CT::cycle_type, u64{0},
      std::vector<u64>{});
  bad("sizes", std::vector<std::int64_t>{-2, 0, 0, 1}, u64{6},
      std::vector<ConjClassSpec>{{"a", "a", 1, {}, CycleType::of({1, 1, 1})},
                                 {"b", "b", 2, {}, CycleType::of({3})}},
      CT::cycle_type, u64{0}, std::vector<u64>{});
  bad("shared-cycle-type", std::vector<std::int64_t>{-2, 0, 0, 1}, u64{2},
      std::vector<ConjClassSpec>{{"a", "a", 1, {}, CycleType::of({3})},
                                 {"b", "b", 1, {}, CycleType::of({3})}},
      CT::cycle_type, u64{0}, std::vector<u64>{});
  bad("wrong-degree", std::vector<std::int64_t>{-2, 0, 0, 1}, u64{1},
      std::vector<ConjClassSpec>{{"a", "a", 1, {}, CycleType::of({1, 1})}}, CT::cycle_type,
      u64{0}, std::vector<u64>{});
  bad("uncovered", std::vector<std::int64_t>{1, 0, 1}, u64{1},
      std::vector<ConjClassSpec>{{"a", "a", 1, {3}, std::nullopt}}, CT::residue, u64{4},
      std::vector<u64>{2});
  bad("non-unit", std::vector<std::int64_t>{1, 0, 1}, u64{2},
      std::vector<ConjClassSpec>{{"a", "a", 1, {1}, std::nullopt},
                                 {"b", "b", 1, {2}, std::nullopt}},
      CT::residue, u64{4}, std::vector<u64>{2});
  bad("duplicate-id", std::vector<std::int64_t>{1, 0, 1}, u64{2},
      std::vector<ConjClassSpec>{{"a", "a", 1, {1}, std::nullopt},
                                 {"a", "a", 1, {3}, std::nullopt}},
      CT::residue, u64{4}, std::vector<u64>{2});
}

TEST_CASE("json contexts round-trip") {
  const GaloisContext ctx = context_from_json_text(kQuarticResidueDoc);
  CHECK(ctx.mode() == ClassifierMode::residue);
  CHECK(class_id_of(ctx, 13) == "split");
  CHECK(class_id_of(ctx, 19) == "inert");
  const GaloisContext again = context_from_json_text(context_to_json_text(ctx));
  CHECK(context_to_json_text(again) == context_to_json_text(ctx));

  const GaloisContext s3 = s3_x3_2_context();
  const GaloisContext s3b = context_from_json_text(context_to_json_text(s3));
  for (u64 p : {5ull, 7ull, 31ull, 101ull}) CHECK(class_id_of(s3b, p) == class_id_of(s3, p));

  CHECK_THROWS_AS(context_from_json_text("{"), ConfigError);
  CHECK_THROWS_AS(context_from_json_text(R"({"label": "x"})"), ConfigError);
}

TEST_CASE("context selectors") {
  CHECK(resolve_context("cyclotomic:12").classes().size() == 4);
  CHECK(resolve_context("quadratic:-3").group_order() == 2);
  CHECK(resolve_context("s3-x3-2").label() == "s3-x3-2");
  CHECK_THROWS_AS(resolve_context("cyclotomic:abc"), ConfigError);
  CHECK_THROWS_AS(resolve_context("/nonexistent/context.json"), ConfigError);

  const std::string path = "chebdense_test_context.json";
  {
    std::ofstream out(path);
    out << kQuarticResidueDoc;
  }
  CHECK(resolve_context(path).label() == "gaussian-via-mod-4");
  std::remove(path.c_str());
}

TEST_CASE("chebotarev frequencies") {
  const FrequencyCounts c4 = chebotarev_frequencies(cyclotomic_context(4), 10);
  CHECK(c4.class_counts == std::vector<u64>{1, 2});
  CHECK(c4.excluded == 1);
  CHECK(c4.classified() == 3);

  const FrequencyCounts two = chebotarev_frequencies(s3_x3_2_context(), 2);
  CHECK(two.class_counts == std::vector<u64>{0, 0, 0});
  CHECK(two.excluded == 1);
  CHECK_THROWS_AS(chebotarev_frequencies(s3_x3_2_context(), 1), PreconditionError);

  const FrequencyCounts s3 = chebotarev_frequencies(s3_x3_2_context(), 100000);
  CHECK(s3.classified() + s3.excluded == 9592);
  CHECK(std::abs(s3.frequency(0) - 1.0 / 6) < 0.01);
  CHECK(std::abs(s3.frequency(1) - 1.0 / 2) < 0.01);
  CHECK(std::abs(s3.frequency(2) - 1.0 / 3) < 0.01);
}

TEST_CASE("prime classifier agrees with classify_prime") {
  for (const GaloisContext& ctx : {cyclotomic_context(12), s3_x3_2_context()}) {
    const PrimeClassifier cached(ctx, 5000);
    const PrimeClassifier direct(ctx, 0);
    for (u64 p = 2; p < 10000; ++p) {
      if (!brute::is_prime(p)) continue;
      const int expect = classify_prime(ctx, p).class_index;
      REQUIRE(cached.class_of(p) == expect);
      REQUIRE(direct.class_of(p) == expect);
    }
  }
}

}  // TEST_SUITE
