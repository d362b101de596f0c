// Prints character polynomials f_λ for small λ, and the stable character
// polynomials and dimensions of the known cohomology decompositions.

#include "repstab/repstab.hpp"

#include <iostream>

using namespace repstab;

int main() {
    std::cout << "Character polynomials of P(lambda), valid for s >= |lambda| + lambda_1\n";
    for (int size = 0; size <= 3; ++size)
        for (const auto& lambda : enumerate(size))
            std::cout << "  f" << lambda.str() << " = " << render_falling_factorials(build_f_lambda(lambda)) << '\n';

    std::cout << "\nStable cohomology\n";
    for (const auto& [n, i] : {std::pair{1, 2}, std::pair{1, 4}, std::pair{2, 4}}) {
        const gamma::GammaQuery query(n, i);
        const auto decomp = gamma::stored_decomposition(query);
        const auto f = gamma::stable_char_poly(query);
        std::cout << "  H^" << i << "(Gamma_{" << n << ",s}) = " << decomp.str() << "  for s >= " << decomp.valid_from
                  << '\n';
        std::cout << "    character polynomial: " << render_falling_factorials(f) << '\n';
        std::cout << "    dimension polynomial: " << dimension_polynomial(f).str() << '\n';
        std::cout << "    dimensions:";
        for (int s = n + i; s <= n + i + 5; ++s) std::cout << ' ' << gamma::stable_dimension(query, s);
        std::cout << '\n';
    }
}
