#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fueterlab/catalog.hpp"
#include "fueterlab/errors.hpp"
#include "fueterlab/parallel.hpp"
#include "fueterlab/report.hpp"
#include "fueterlab/verify.hpp"

using namespace fueterlab;

TEST_CASE("catalog names resolve") {
    for (const WitnessEntry& e : witness_catalog()) CHECK(parse_function(e.name).name() == e.name);
    CHECK(parse_function("pow:-2").name() == "pow:-2");
    CHECK(parse_function("pow:+3").name() == "pow:3");
    CHECK(witness_catalog().size() == 12);
}

TEST_CASE("generator and combinator specs") {
    const Quaternion p(0.2, 0.4, -0.6, 0.5);
    CHECK(distance(parse_function("stem:2:1:0")(p), p * p) < 1e-13);
    CHECK(distance(parse_function("stem:0:1:0,1:2:0")(p), Quaternion(1.0) + p * 2.0) < 1e-13);
    CHECK(distance(parse_function("L:pow:3")(p), Quaternion(-6.0 * p.t) - p.imag() * 2.0) < 1e-12);
    CHECK(distance(parse_function("L:identity")(p), Quaternion()) < 1e-12);
    CHECK(parse_function("L:exp").kind() == FunctionKind::CI);
    CHECK(distance(parse_function("mirror:rho")(p), rho_function()(p.conj()).conj()) < 1e-14);
    CHECK(parse_function("chiral:rho").name() == "chiral:rho");
    CHECK(distance(parse_function("product:rho*pow:2")(p), rho_function()(p) * (p * p)) < 1e-13);
    CHECK(distance(parse_function("sum:pow:2+x-over-r-iota")(p), p * p + x_over_r_iota_function()(p)) < 1e-13);
    CHECK(distance(parse_function("product:stem:1:2:0*rho")(p), p * 2.0 * rho_function()(p)) < 1e-13);
}

TEST_CASE("bad specs are rejected") {
    for (const char* spec : {"", "nope", "pow:", "pow:x", "pow:1.5", "stem:", "stem:1:2", "stem:a:1:0", "L:foo",
                             "product:rho", "product:rho*nope", "sum:rho", "mirror:nope", "chiral:"})
        CHECK_THROWS_AS(parse_function(spec), SpecError);
    CHECK_THROWS_AS(parse_function("chiral:x-over-r-iota"), PreconditionError);
    const Quaternion p(0.1, 0.3, 0.2, -0.4);
    const double r = p.imag_norm();
    // L(i z) = -1/y - i x / y^2
    CHECK(distance(parse_function("L:stem:1:0:1")(p), Quaternion(-1.0 / r) - p.imag() * (p.t / (r * r * r))) < 1e-12);
    CHECK(parse_stem("logtan").form() == ComplexStem::Form::LogTan);
    CHECK(parse_stem("1:0:0").terms().size() == 1);
}

TEST_CASE("classification report document") {
    const SampleGrid g({-1, 1}, {0.5, 1.5}, {-2.5, 2.5}, {0.4, 2.7}, 3);
    const Json doc = to_json(classify(power_function(2), g));
    CHECK(doc.at("function") == "pow:2");
    CHECK(doc.at("class_III").at("verdict") == "pass");
    CHECK(doc.at("regular").at("verdict") == "fail");
    CHECK(doc.at("grid").at("points") == 81);
    CHECK(doc.at("inclusion_consistent") == true);
    // Deterministic output for identical inputs.
    CHECK(to_json(classify(rho_function(), g)).dump() == to_json(classify(rho_function(), g)).dump());
}

TEST_CASE("parallel map visits every index once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(100, [](std::size_t i) {
                        if (i == 37) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    parallel_for(0, [](std::size_t) { FAIL("no work expected"); });
    CHECK(worker_count() >= 1);
}

TEST_CASE("thread cap") {
    setenv("FUETERLAB_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    setenv("FUETERLAB_THREADS", "junk", 1);
    CHECK(worker_count() >= 1);
    unsetenv("FUETERLAB_THREADS");
}

TEST_CASE("random polynomial generator is seeded") {
    std::mt19937_64 a(5), b(5);
    const QFunction f = random_polynomial_function(a, "f");
    const QFunction g = random_polynomial_function(b, "g");
    const Quaternion p(0.1, 0.2, 0.3, 0.4);
    CHECK(f(p) == g(p));
    const SphericalPoint s = random_grid_point(a);
    CHECK(s.r >= 0.5);
    CHECK(s.r <= 1.5);
}
