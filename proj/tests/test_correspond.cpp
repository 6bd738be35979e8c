#include <numbers>

#include "doctest.h"
#include "tetratrig/correspond.hpp"
#include "tetratrig/suites.hpp"

using namespace tetratrig;

TEST_CASE("cross-ratio chains reproduce the character values") {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical})
        for (const auto& s : random_specs(g, 12, 40)) {
            Thm14Report rep = verify_thm14(s);
            REQUIRE(rep.chains.size() == 4);
            CHECK(rep.chain_residual < 1e-7);
            CHECK(rep.pattern_residual < 1e-7);
            for (const auto& c : rep.chains) {
                CHECK(c.links.size() >= 2);
                CHECK(c.residual < 1e-7);
                CHECK(is_root(c.root));
            }
            CHECK(rep.chains[3].concurrency < 1e-7);
            CHECK(rep.chains[3].incidences.size() == 6);
        }
}

TEST_CASE("vertex and dual-face recipes are the dual tetrahedron's face and edge recipes") {
    for (const auto& s : random_specs(Geometry::Hyperbolic, 10, 41)) CHECK(duality_residual(from_metric(s)) < 1e-8);
}

TEST_CASE("chains on the all-right spherical tetrahedron") {
    MetricSpec s;
    s.geometry = Geometry::Spherical;
    s.lengths.fill(std::numbers::pi / 2);
    for (const auto& c : all_chains(from_metric(s))) {
        CHECK(relative_residual(c.lhs, c.rhs) < 1e-9);
        CHECK(std::abs(c.rhs - cplx(0, -1)) < 1e-9);
    }
}

TEST_CASE("relative residual") {
    CHECK(relative_residual(0.0, 0.0) == 0.0);
    CHECK(relative_residual(1.0, 1.0) == 0.0);
    CHECK(relative_residual(2.0, 1.0) == doctest::Approx(0.5));
}
