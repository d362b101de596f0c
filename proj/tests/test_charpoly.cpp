#include "oracles.hpp"
#include "repstab/charpoly.hpp"
#include "repstab/induct.hpp"

#include <catch_amalgamated.hpp>

using namespace repstab;

namespace {

CharPolynomial X(int j) { return CharPolynomial::variable(j); }
CharPolynomial C(Rational c) { return CharPolynomial(c); }
CharPolynomial ff(int j, int k) { return CharPolynomial::falling_factorial(j, k); }

// f_{2,1} and f_{4,2} in the falling-factorial basis, built by hand.
CharPolynomial f21() { return Rational(1, 2) * ff(1, 2) - X(1) - X(2) + C(1); }
CharPolynomial f42() { return Rational(1, 12) * ff(1, 4) + ff(2, 2) - X(1) * X(3); }

CycleCounts counts(std::vector<int> m) { return CycleCounts(std::move(m)); }

}  // namespace

TEST_CASE("CharPolynomial arithmetic and degree", "[charpoly]") {
    CHECK(CharPolynomial().degree() == -1);
    CHECK(C(3).degree() == 0);
    CHECK((X(1) * X(3)).degree() == 4);
    CHECK((X(2) * X(2) + X(1)).degree() == 4);
    CHECK(X(1) - X(1) == CharPolynomial());
    CHECK(ff(1, 2) == X(1) * X(1) - X(1));
    CHECK(CharPolynomial::binomial(2, 2) == Rational(1, 2) * (X(2) * X(2) - X(2)));
    CHECK((X(1) + C(1)) * (X(1) - C(1)) == X(1) * X(1) - C(1));
    CHECK(f21().str() == "1/2*X1^2 - 3/2*X1 - X2 + 1");
    CHECK(CharPolynomial().str() == "0");
    CHECK(C(Rational(-2, 3)).str() == "-2/3");
}

TEST_CASE("evaluate", "[charpoly]") {
    // (1 2)(3 4)(5 6 ... 100): two 2-cycles and one 96-cycle.
    std::vector<int> tau(96, 0);
    tau[1] = 2;
    tau[95] = 1;
    CHECK(evaluate(f42(), counts(tau)) == 2);
    CHECK(evaluate(C(1), counts({0, 0, 1})) == 1);
    CHECK(evaluate(X(5), counts({3})) == 0);
    for (int s = 0; s <= 20; ++s) CHECK(evaluate(f21(), CycleCounts::identity(s)) == Rational(s * (s - 1), 2) - s + 1);
    for (int s = 1; s <= 20; ++s) CHECK(evaluate(f21(), CycleCounts::identity(s)) == Rational(binomial(s - 1, 2)));
}

TEST_CASE("falling-factorial view", "[charpoly]") {
    CHECK(render_falling_factorials(f21()) == "1/2*(X1)_2 - X1 - X2 + 1");
    CHECK(render_falling_factorials(X(1)) == "X1");
    CHECK(render_falling_factorials(f42()) == "1/12*(X1)_4 + (X2)_2 - X1*X3");
    CHECK(render_falling_factorials(CharPolynomial()) == "0");
    CHECK(f21() == Rational(1, 2) * X(1) * X(1) - Rational(3, 2) * X(1) - X(2) + C(1));

    const FallingFactorialForm form{{{2}, Rational(1, 2)}, {{1}, -1}, {{0, 1}, -1}, {{}, 1}};
    CHECK(to_falling_factorials(f21()) == form);
    CHECK(from_falling_factorials(form) == f21());

    SECTION("round trips on products of powers") {
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int c = 0; c <= 2; ++c) {
                    CharPolynomial f = C(Rational(a + 1, b + 2));
                    for (int k = 0; k < a; ++k) f = f * X(1);
                    for (int k = 0; k < b; ++k) f = f * X(2);
                    for (int k = 0; k < c; ++k) f = f * X(4);
                    f += C(c) - X(3);
                    CHECK(from_falling_factorials(to_falling_factorials(f)) == f);
                }
    }
}

TEST_CASE("build_f_lambda examples", "[charpoly]") {
    CHECK(build_f_lambda(Partition{1}) == X(1) - C(1));
    CHECK(build_f_lambda(Partition{}) == C(1));
    CHECK(build_f_lambda(Partition{1, 1}) == f21());
    CHECK_THROWS_AS(build_f_lambda(Partition{2, 1}, 4), DomainError);

    SECTION("f_(1) is the permutation character minus the trivial one") {
        const auto f = build_f_lambda(Partition{1});
        for (int s = 2; s <= 9; ++s)
            for (const auto& type : enumerate(s))
                CHECK(evaluate(f, CycleCounts::from_cycle_type(type)) == oracle::fixed_points(type.vec()) - 1);
    }
}

TEST_CASE("sum_for_decomp", "[charpoly]") {
    CHECK(sum_for_decomp({{Partition{2}, 1}, {Partition{2, 1}, 1}, {Partition{2, 2}, 1}}) == f42());
    CHECK(sum_for_decomp({}) == CharPolynomial());
    CHECK(sum_for_decomp({{Partition{1, 1}, 1}}) == f21());
    CHECK(sum_for_decomp({{Partition{1}, 3}}) == Rational(3) * (X(1) - C(1)));
}

TEST_CASE("build_f_lambda properties", "[charpoly]") {
    SECTION("agrees with Murnaghan-Nakayama on every class in the stable range, |λ| <= 5") {
        for (int size = 0; size <= 5; ++size)
            for (const auto& lambda : enumerate(size)) {
                const auto f = build_f_lambda(lambda);
                CHECK(f.degree() <= size);
                for (int s = min_padding(lambda); s <= min_padding(lambda) + 4; ++s) {
                    const Partition full = pad(lambda, s).full();
                    for (const auto& type : enumerate(s))
                        CHECK(evaluate(f, CycleCounts::from_cycle_type(type)) == Rational(mn_character(full, type)));
                }
            }
    }

    SECTION("agrees with the Jacobi-Trudi oracle at the first stable rank, |λ| <= 3") {
        for (int size = 0; size <= 3; ++size)
            for (const auto& lambda : enumerate(size)) {
                const auto f = build_f_lambda(lambda);
                const int s = min_padding(lambda);
                for (const auto& type : enumerate(s))
                    CHECK(evaluate(f, CycleCounts::from_cycle_type(type)) ==
                          oracle::jacobi_trudi_character(pad(lambda, s).full().vec(), type.vec()));
            }
    }

    SECTION("independent of the anchor rank") {
        for (int size = 0; size <= 5; ++size)
            for (const auto& lambda : enumerate(size)) {
                const auto f = build_f_lambda(lambda);
                CHECK(build_f_lambda(lambda, min_padding(lambda)) == f);
                CHECK(build_f_lambda(lambda, default_anchor(lambda) + 3) == f);
            }
    }

    SECTION("dimension polynomial gives the hook-length dimension") {
        for (int size = 0; size <= 6; ++size)
            for (const auto& lambda : enumerate(size)) {
                const auto dim = dimension_polynomial(build_f_lambda(lambda));
                CHECK(dim.degree() == size);
                for (int s = min_padding(lambda); s <= min_padding(lambda) + 6; ++s)
                    CHECK(dim(s) == Rational(dim_irr(pad(lambda, s).full())));
            }
    }

    SECTION("insensitive to cycles longer than |λ|") {
        for (int size = 1; size <= 4; ++size)
            for (const auto& lambda : enumerate(size)) {
                const auto f = build_f_lambda(lambda);
                CHECK(f.num_variables() <= size);
                // Same short cycles, different long cycles, both in the stable range.
                for (const auto& shorts : enumerate(size)) {
                    std::vector<int> base = CycleCounts::from_cycle_type(shorts).counts();
                    base.resize(static_cast<std::size_t>(size) + 3, 0);
                    base[0] += size + 2;
                    std::vector<int> longer = base;
                    longer[static_cast<std::size_t>(size)] += 1;
                    longer[static_cast<std::size_t>(size) + 2] += 2;
                    const Rational v = evaluate(f, counts(base));
                    CHECK(v == evaluate(f, counts(longer)));
                    CHECK(v == Rational(mn_character(pad(lambda, counts(longer).degree()).full(), counts(longer))));
                }
            }
    }
}

TEST_CASE("dimension_polynomial", "[charpoly]") {
    const auto d21 = dimension_polynomial(f21());
    CHECK(d21 == UnivariatePolynomial({1, Rational(-3, 2), Rational(1, 2)}));
    CHECK(d21.str() == "1/2*s^2 - 3/2*s + 1");
    CHECK(dimension_polynomial(C(1)) == UnivariatePolynomial({1}));

    const auto d42 = dimension_polynomial(f42());
    CHECK(d42(6) == 30);
    CHECK(d42(6) == Rational(dim_irr(Partition{4, 2}) + dim_irr(Partition{3, 2, 1}) + dim_irr(Partition{2, 2, 2})));
    for (int s = 0; s <= 12; ++s) CHECK(d42(s) == Rational(s * (s - 1) * (s - 2) * (s - 3), 12));
}
