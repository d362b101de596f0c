#include "repstab/io.hpp"

#include <catch_amalgamated.hpp>

using namespace repstab;
using nlohmann::json;

TEST_CASE("integers and rationals", "[io]") {
    CHECK(io::to_json(Integer(42)) == json(42));
    const Integer huge = factorial(30);
    CHECK(io::to_json(huge) == json(huge.str()));
    CHECK(io::integer_from_json(io::to_json(huge)) == huge);
    CHECK(io::integer_from_json(json(-7)) == -7);
    CHECK_THROWS_AS(io::integer_from_json(json(1.5)), DomainError);

    CHECK(io::to_json(Rational(3, 6)) == json("1/2"));
    CHECK(io::to_json(Rational(-4)) == json("-4"));
    CHECK(io::rational_from_json(json("-2/6")) == Rational(-1, 3));
    CHECK(io::rational_from_json(json(5)) == 5);
    CHECK_THROWS_AS(io::rational_from_json(json("1/x")), DomainError);
    CHECK_THROWS_AS(io::rational_from_json(json::array()), DomainError);
}

TEST_CASE("partitions and decompositions round trip", "[io]") {
    CHECK(io::to_json(Partition{3, 1}) == json("[3,1]"));
    CHECK(io::partition_from_json(json("[]")) == Partition{});
    CHECK_THROWS_AS(io::partition_from_json(json(3)), DomainError);

    const IrrDecomp d(4, {{Partition{3, 1}, 1}, {Partition{2, 1, 1}, 2}});
    const json j = io::to_json(d);
    CHECK(j == json::parse(R"({"rank": 4, "terms": {"[3,1]": 1, "[2,1,1]": 2}})"));
    CHECK(io::decomp_from_json(j) == d);
    CHECK(io::decomp_from_json(json::parse(j.dump())) == d);

    for (int s = 0; s <= 7; ++s) {
        IrrDecomp all(s);
        int k = 1;
        for (const auto& lambda : enumerate(s)) all.add(lambda, k++);
        CHECK(io::decomp_from_json(json::parse(io::to_json(all).dump())) == all);
    }
}

TEST_CASE("character polynomials round trip", "[io]") {
    const CharPolynomial f = Rational(1, 12) * CharPolynomial::falling_factorial(1, 4) +
                             CharPolynomial::falling_factorial(2, 2) -
                             CharPolynomial::variable(1) * CharPolynomial::variable(3);
    const json j = io::to_json(f);
    CHECK(j.at("monomials").size() == f.terms().size());
    CHECK(io::charpoly_from_json(json::parse(j.dump())) == f);
    CHECK(io::charpoly_from_json(io::to_json(CharPolynomial())) == CharPolynomial());

    for (int size = 0; size <= 4; ++size)
        for (const auto& lambda : enumerate(size)) {
            const auto g = build_f_lambda(lambda);
            CHECK(io::charpoly_from_json(json::parse(io::to_json(g).dump())) == g);
        }
}

TEST_CASE("other payloads", "[io]") {
    const json table = io::to_json(character_table(3));
    CHECK(table.at("classes") == json::parse(R"(["[3]", "[2,1]", "[1,1,1]"])"));
    CHECK(table.at("table").at("[2,1]") == json::parse("[-1, 0, 2]"));

    CHECK(io::to_json(StabilityType{ExtInt::unknown(), 2}) == json::parse(R"({"injectivity": "*", "surjectivity": 2})"));

    const auto grid = SpectralGrid::from_rule(2, 1, 2, [](int p, int q) { return GridEntry{{p, 3}, q, {}}; });
    const json g = io::to_json(grid);
    CHECK(g.at("page") == 2);
    REQUIRE(g.at("entries").size() == 6);
    CHECK(g.at("entries")[5] == json::parse(R"({"p": 1, "q": 2, "injectivity": 1, "surjectivity": 3, "weight": 2})"));

    const json stable = io::to_json(gamma::rank1_decomp(2));
    CHECK(stable == json::parse(R"({"terms": {"[1,1]": 1}, "valid_from": 3})"));

    const json cf = io::to_json(character(Partition{2}));
    CHECK(cf.at("values").at("[1,1]") == json("1"));
}
