#include <limits>

#include "doctest.h"
#include "json_io.hpp"

using namespace tetratrig;
using io::Json;

TEST_CASE("complex and projective values") {
    Json z = io::to_json(cplx(1.5, -2));
    CHECK(z.dump() == R"({"re":1.5,"im":-2.0})");
    CHECK(io::cplx_from_json(z) == cplx(1.5, -2));
    CHECK(io::cplx_from_json(Json(3.0)) == cplx(3.0));
    CHECK(io::to_json(P1::infinity()).dump() == R"({"inf":true})");
    CHECK(io::p1_from_json(Json{{"inf", true}}).is_infinite());
    CHECK(io::p1_from_json(io::to_json(P1::finite(cplx(0, 1)))).value() == cplx(0, 1));
    CHECK(io::real_json(std::numeric_limits<double>::infinity()).dump() == R"({"inf":true})");
    CHECK_THROWS_AS(io::cplx_from_json(Json("x")), io::BadInput);
    CHECK_THROWS_AS(io::cplx_from_json(Json{{"re", 1}}), io::BadInput);
}

TEST_CASE("metric spec parsing") {
    Json j = Json::parse(R"({"geometry":"hyperbolic","lengths":{"12":1,"13":1.2,"14":1.4,"23":1.1,"24":1.3,"34":1.5}})");
    MetricSpec s = io::metric_from_json(j);
    CHECK(s.geometry == Geometry::Hyperbolic);
    CHECK(s.lengths[5] == 1.5);
    CHECK(io::to_json(s) == j);
    Json missing = j;
    missing["lengths"].erase("34");
    CHECK_THROWS_AS(io::metric_from_json(missing), io::BadInput);
    Json neg = j;
    neg["lengths"]["12"] = -1;
    CHECK_THROWS_AS(io::metric_from_json(neg), io::BadInput);
    Json geo = j;
    geo["geometry"] = "euclidean";
    CHECK_THROWS_AS(io::metric_from_json(geo), io::BadInput);
}

TEST_CASE("lattice vector and Picard class parsing") {
    CHECK(io::parse_lattice_vec("e13") == LatticeVec::unit(k13));
    CHECK(io::parse_lattice_vec("e_I") == LatticeVec::unit(kI));
    CHECK(io::parse_lattice_vec("regge") == regge_root());
    CHECK(io::parse_lattice_vec("1,1,1,0,1,0,0,0").d == std::array<int, 8>{1, 1, 1, 0, 1, 0, 0, 0});
    CHECK_THROWS_AS(io::parse_lattice_vec("1,0,0,0,0,0,0,0"), io::BadInput);
    CHECK_THROWS_AS(io::parse_lattice_vec("e15"), io::BadInput);
    CHECK_THROWS_AS(io::parse_lattice_vec("1,2"), io::BadInput);
    PicClass c = io::parse_pic_class("l+r-u14-u41-2u24");
    CHECK(c.str() == "l+r-u14-u41-2u24");
    CHECK(io::parse_pic_class("1,1,0,0,-1,-1,0,0,-1,-1") == fiber_component_classes().F11);
    CHECK_THROWS_AS(io::parse_pic_class("l+x"), io::BadInput);
    CHECK_THROWS_AS(io::parse_pic_class(""), io::BadInput);
}

TEST_CASE("reports serialize deterministically") {
    RunConfig cfg;
    cfg.trials = 3;
    SuiteReport a = run_suite("thm11", cfg);
    cfg.jobs = 3;
    SuiteReport b = run_suite("thm11", cfg);
    CHECK(io::to_json(a).dump() == io::to_json(b).dump());
    Json j = io::to_json(a);
    CHECK(j["suite"] == "thm11");
    CHECK(j["trials"].size() == 6);
    CHECK(j["pass"] == true);
}
