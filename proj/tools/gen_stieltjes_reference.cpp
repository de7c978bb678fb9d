// Regenerates data/stieltjes_reference.txt: gamma_0..gamma_40 at 50
// significant digits, computed by the Euler-Maclaurin route at two
// independent cutoffs that must agree before anything is written.

#include <fstream>
#include <iostream>
#include <string>

#include "likeiper/stieltjes.hpp"

using namespace likeiper;

int main(int argc, char** argv) {
    const int max_n = 40;
    const int digits = 50;
    const std::string path = argc > 1 ? argv[1] : "stieltjes_reference.txt";

    const PrecisionContext ctx(digits, 15);
    const int wd = ctx.working_digits();
    const int m1 = 10 * wd;
    const int m2 = 16 * wd;

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    out << "# Stieltjes constants gamma_0..gamma_" << max_n << ", " << digits
        << " significant digits.\n";
    out << "# Euler-Maclaurin summation, cross-checked at cutoffs m=" << m1 << " and m=" << m2
        << ".\n";

    ScopedPrecision guard(ctx);
    for (int n = 0; n <= max_n; ++n) {
        const int internal1 = detail::stieltjes_internal_digits(n, wd, m1);
        const int internal2 = detail::stieltjes_internal_digits(n, wd, m2);
        Real v1 = stieltjes_euler_maclaurin(n, wd, m1, internal1);
        Real v2 = stieltjes_euler_maclaurin(n, wd, m2, internal2);
        if (abs(v1 - v2) > pow(Real(10), -(digits + 5))) {
            std::cerr << "cutoff disagreement at n=" << n << ": |v1-v2| = " << abs(v1 - v2)
                      << "\n";
            return 1;
        }
        out << n << " " << v1.str(digits) << "\n";
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}
