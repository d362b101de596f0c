// Runs the stability bookkeeping through the first pages of the spectral
// sequence for H^*(Γ_{n,s}) and prints the assembled bounds.

#include "repstab/repstab.hpp"

#include <cstdlib>
#include <iostream>

using namespace repstab;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2;
    if (n < 2) {
        std::cerr << "usage: spectral_pages [n >= 2]\n";
        return 2;
    }

    std::cout << "E_2 rows for n = " << n << ":\n";
    for (int q = 0; q <= 3; ++q) std::cout << "  q=" << q << ": " << gamma::e2_page(n, q).str() << '\n';
    std::cout << '\n';

    SpectralGrid grid = gamma::e2_grid(n, 5, 5);
    std::cout << grid.render() << '\n';
    for (int k = 0; k < 2; ++k) {
        grid = grid.turn_page();
        std::cout << grid.render() << '\n';
    }

    for (int i = 0; i <= 6; ++i) {
        const auto r = gamma::stability_bounds(gamma::GammaQuery(n, i));
        std::cout << "H^" << i << ": weight <= " << r.weight_bound << ", stability degree <= " << r.stability_degree
                  << ", stable for s >= " << r.stable_range << '\n';
    }
}
