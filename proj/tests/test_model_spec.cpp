#include <doctest.h>

#include <random>

#include "semitrans/classify.hpp"
#include "semitrans/curve_builder.hpp"
#include "semitrans/error.hpp"
#include "semitrans/model_spec.hpp"

using namespace semitrans;

namespace {

ErrorCode code_of(std::string_view text) {
    try {
        parse_model_spec(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::BadParameter;  // not reached in these tests
}

void same_gauge(const NormModel& a, const NormModel& b) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> N;
    for (int i = 0; i < 200; ++i) {
        const Vec2 v{N(rng), N(rng)};
        CHECK(a.gauge(v) == b.gauge(v));
    }
}

}  // namespace

TEST_CASE("parse examples") {
    const auto m = parse_model_spec("# max norm\nfamily = lp\np = inf\n");
    CHECK(m.family() == Family::Lp);
    CHECK(m.gauge({0.3, -2.0}) == doctest::Approx(2.0));
    const auto b = parse_model_spec("family = blend\neps = 1\nbase.family = lp\nbase.p = 4  # figure weights\n");
    CHECK(b.gauge({1.0, 0.0}) == doctest::Approx(std::sqrt(2.0)));
    const auto g = parse_model_spec("family = polar\nharmonics = 0 1 0; 4 0 0.0588235294117647\n");
    CHECK(g.gauge({1.0, 1.0}) == doctest::Approx(make_grandpa_pig().gauge({1.0, 1.0})).epsilon(1e-14));
}

TEST_CASE("parse errors") {
    CHECK(code_of("family = lp\n") == ErrorCode::ParseError);
    CHECK(code_of("family = lp\np = four\n") == ErrorCode::ParseError);
    CHECK(code_of("family = lp\np 4\n") == ErrorCode::ParseError);
    CHECK(code_of("family = lp\np = 4\np = 3\n") == ErrorCode::ParseError);
    CHECK(code_of("family = torus\n") == ErrorCode::ParseError);
    CHECK(code_of("family = polygon\nvertices = 1 0; 0 1 2\n") == ErrorCode::ParseError);
    CHECK(code_of("family = lp\np = 0.5\n") == ErrorCode::BadParameter);
    CHECK(code_of("family = polar\nharmonics = 0 1 0; 3 0.1 0\n") == ErrorCode::NotPeriodic);
    CHECK_THROWS_AS(load_model_spec("/nonexistent/model.txt"), Error);
}

TEST_CASE("round trip") {
    auto g = gallery();
    g.push_back({"dual", make_dual(make_lp(1.5)), true});
    g.push_back({"nobst", build_nobst(6), true});
    for (const auto& e : g) {
        CAPTURE(e.name);
        const std::string text = write_model_spec(e.model);
        const NormModel back = parse_model_spec(text);
        CHECK(back.family() == e.model.family());
        same_gauge(e.model, back);
        CHECK(write_model_spec(back) == text);
    }
}
