#include "oracles.hpp"
#include "repstab/symchar.hpp"

#include <catch_amalgamated.hpp>

#include <array>
#include <thread>

using namespace repstab;

namespace {

// Standard representation of S_3 on {x : x1 + x2 + x3 = 0}, basis e1-e2, e2-e3.
// Transposition (1 2) and 3-cycle (1 2 3) as explicit 2x2 integer matrices.
using Mat2 = std::array<std::array<int, 2>, 2>;
constexpr Mat2 kTransposition{{{-1, 1}, {0, 1}}};
constexpr Mat2 kThreeCycle{{{0, -1}, {1, -1}}};
constexpr int trace(const Mat2& m) { return m[0][0] + m[1][1]; }

ClassFunction permutation_character(int s) {
    return ClassFunction::from(s, [](const Partition& type) { return oracle::fixed_points(type.vec()); });
}

}  // namespace

TEST_CASE("CycleCounts round trips through cycle types", "[symchar]") {
    for (int s = 0; s <= 10; ++s)
        for (const auto& type : enumerate(s)) {
            const auto ct = CycleCounts::from_cycle_type(type);
            CHECK(ct.degree() == s);
            CHECK(ct.cycle_type() == type);
        }
    CHECK(CycleCounts({0, 2}).degree() == 4);
    CHECK(CycleCounts::identity(5).count(1) == 5);
    CHECK(CycleCounts({1, 0, 0}).max_cycle() == 1);
    CHECK_THROWS_AS(CycleCounts({-1}), DomainError);
}

TEST_CASE("class_size", "[symchar]") {
    CHECK(class_size(CycleCounts({0, 0, 1})) == 2);
    CHECK(class_size(CycleCounts({3})) == 1);
    CHECK(class_size(CycleCounts({0, 2})) == 3);

    SECTION("matches enumeration of S_n for n <= 7") {
        for (int n = 1; n <= 7; ++n)
            for (const auto& [type, count] : oracle::class_sizes(n))
                CHECK(class_size(CycleCounts::from_cycle_type(Partition(type))) == count);
    }
}

TEST_CASE("mn_character", "[symchar]") {
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == trace(kThreeCycle));
    CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == trace(kTransposition));
    CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(mn_character(Partition{}, Partition{}) == 1);
    for (int s = 1; s <= 9; ++s)
        for (const auto& type : enumerate(s)) CHECK(mn_character(Partition{s}, type) == 1);

    CHECK_THROWS_AS(mn_character(Partition{2, 1}, Partition{2}), DomainError);

    SECTION("agrees with the Jacobi-Trudi tabloid oracle for s <= 7") {
        for (int s = 0; s <= 7; ++s)
            for (const auto& lambda : enumerate(s))
                for (const auto& type : enumerate(s))
                    CHECK(mn_character(lambda, type) == oracle::jacobi_trudi_character(lambda.vec(), type.vec()));
    }

    SECTION("conjugation twists by the sign for s <= 8") {
        for (int s = 0; s <= 8; ++s)
            for (const auto& lambda : enumerate(s))
                for (const auto& type : enumerate(s)) {
                    const auto ct = CycleCounts::from_cycle_type(type);
                    CHECK(mn_character(conjugate(lambda), ct) == sign(ct) * mn_character(lambda, ct));
                }
    }
}

TEST_CASE("mn_character cache gives identical results under concurrent use", "[symchar][concurrency]") {
    const auto shapes = enumerate(11);
    const auto classes = enumerate(11);
    std::vector<std::vector<Integer>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < results.size(); ++t)
        workers.emplace_back([&, t] {
            // Each worker walks the table in a different order.
            for (std::size_t a = 0; a < shapes.size(); ++a) {
                const auto& lambda = shapes[(a * (t + 1)) % shapes.size()];
                for (const auto& type : classes) results[t].push_back(mn_character(lambda, type));
            }
        });
    for (auto& w : workers) w.join();

    for (std::size_t t = 0; t < results.size(); ++t) {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < shapes.size(); ++a) {
            const auto& lambda = shapes[(a * (t + 1)) % shapes.size()];
            for (const auto& type : classes) CHECK(results[t][idx++] == mn_character(lambda, type));
        }
    }
}

TEST_CASE("dim_irr", "[symchar]") {
    CHECK(dim_irr(Partition{2, 2, 2}) == 5);
    CHECK(dim_irr(Partition{3, 2, 1}) == 16);
    CHECK(dim_irr(Partition{7}) == 1);
    CHECK(dim_irr(Partition{}) == 1);

    SECTION("equals the character at the identity and sums of squares give s!") {
        for (int s = 0; s <= 10; ++s) {
            Integer squares = 0;
            for (const auto& lambda : enumerate(s)) {
                const Integer d = dim_irr(lambda);
                squares += d * d;
                if (s <= 8) CHECK(d == mn_character(lambda, CycleCounts::identity(s)));
            }
            CHECK(squares == factorial(s));
        }
    }
}

TEST_CASE("inner_product", "[symchar]") {
    CHECK(inner_product(character(Partition{2, 1}), character(Partition{2, 1})) == 1);
    CHECK(inner_product(character(Partition{3}), character(Partition{1, 1, 1})) == 0);

    const ClassFunction regular =
        ClassFunction::from(4, [](const Partition& type) { return type == Partition{1, 1, 1, 1} ? 24 : 0; });
    CHECK(inner_product(regular, character(Partition{2, 2})) == 2);
    for (const auto& lambda : enumerate(4)) CHECK(inner_product(regular, character(lambda)) == Rational(dim_irr(lambda)));

    CHECK_THROWS_AS(inner_product(character(Partition{2}), character(Partition{3})), DomainError);

    SECTION("irreducible characters are orthonormal for s <= 8") {
        for (int s = 0; s <= 8; ++s) {
            const auto shapes = enumerate(s);
            for (const auto& a : shapes)
                for (const auto& b : shapes) CHECK(inner_product(character(a), character(b)) == (a == b ? 1 : 0));
        }
    }
}

TEST_CASE("decompose", "[symchar]") {
    CHECK(decompose(permutation_character(3)) == IrrDecomp(3, {{Partition{3}, 1}, {Partition{2, 1}, 1}}));
    CHECK(decompose(ClassFunction(3)).empty());
    const ClassFunction square = character(Partition{2, 1}) * character(Partition{2, 1});
    CHECK(decompose(square) == IrrDecomp(3, {{Partition{3}, 1}, {Partition{2, 1}, 1}, {Partition{1, 1, 1}, 1}}));

    SECTION("rejects virtual and fractional class functions") {
        CHECK_THROWS_AS(decompose(character(Partition{3}) - character(Partition{2, 1})), DomainError);
        CHECK_THROWS_AS(decompose(Rational(1, 2) * character(Partition{3})), DomainError);
    }

    SECTION("decompose(χ_λ) = {λ: 1} for s <= 8") {
        for (int s = 0; s <= 8; ++s)
            for (const auto& lambda : enumerate(s)) CHECK(decompose(character(lambda)) == IrrDecomp(s, {{lambda, 1}}));
    }

    SECTION("the permutation character on s points is (s) + (s-1,1)") {
        for (int s = 2; s <= 8; ++s)
            CHECK(decompose(permutation_character(s)) == IrrDecomp(s, {{Partition{s}, 1}, {Partition{s - 1, 1}, 1}}));
    }
}

TEST_CASE("IrrDecomp bookkeeping", "[symchar]") {
    IrrDecomp d(3, {{Partition{3}, 1}, {Partition{2, 1}, 2}});
    CHECK(d.dimension() == 5);
    CHECK(d.str() == "P[3] + 2*P[2,1]");
    CHECK(decompose(d.character()) == d);
    CHECK_THROWS_AS(d.add(Partition{2}, 1), DomainError);
    CHECK_THROWS_AS(d.add(Partition{3}, -1), DomainError);
}

TEST_CASE("character_table", "[symchar]") {
    const auto t = character_table(3);
    CHECK(t.classes == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(t.rows.at(Partition{2, 1}) == std::vector<Integer>{-1, 0, 2});
    CHECK(t.rows.at(Partition{1, 1, 1}) == std::vector<Integer>{1, -1, 1});
}
