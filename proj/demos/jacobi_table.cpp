// Prints brute-force counts next to their closed forms for a few forms.

#include <iomanip>
#include <iostream>

#include "quadrep.hpp"

int main() {
    using namespace quadrep;
    const QuadForm sums_of_squares{1, 1, 1, 1};
    const QuadForm mixed{1, 2, 3, 6};

    std::cout << "  n   N(1,1,1,1)  closed   t(1,2,3,6)  closed\n";
    for (std::int64_t n = 1; n <= 12; ++n) {
        std::cout << std::setw(3) << n << std::setw(12) << count_N(sums_of_squares, n) << std::setw(8)
                  << closed_form_N(sums_of_squares, n) << std::setw(13) << count_t(mixed, n) << std::setw(8)
                  << closed_form_t(mixed, n) << '\n';
    }
}
