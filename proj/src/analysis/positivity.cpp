#include "nmswitch/analysis/positivity.hpp"

#include <algorithm>
#include <cmath>

#include "nmswitch/errors.hpp"

namespace nmswitch {

namespace {

void require_inputs(const LindbladRates& r, double epsilon, Complex phi1, Complex phi2)
{
    if (std::abs(std::norm(phi1) + std::norm(phi2) - 1.0) > 1e-12) {
        throw Error(ErrorCode::BadState, "|phi1|^2 + |phi2|^2 must equal 1");
    }
    const double largest = std::max({std::abs(r.g1), std::abs(r.g2), std::abs(r.g3)});
    if (!(epsilon >= 0.0) || !(epsilon * largest < 0.01)) {
        throw Error(ErrorCode::InvalidArgument, "epsilon must be >= 0 with eps * max|G| < 0.01");
    }
}

} // namespace

InfinitesimalOutput infinitesimal_map_output(const LindbladRates& r, double epsilon, Complex phi1, Complex phi2)
{
    require_inputs(r, epsilon, phi1, phi2);
    const double p1 = std::norm(phi1);
    const double p2 = std::norm(phi2);
    const double s = epsilon * (r.g1 + r.g2);
    const Complex c = phi1 * std::conj(phi2);
    const Complex off{c.real() * (1.0 - 2.0 * epsilon * (r.g2 + r.g3)),
                      c.imag() * (1.0 - 2.0 * epsilon * (r.g1 + r.g3))};

    ComplexMatrix out{{(1.0 - s) * p1 + s * p2, off}, {std::conj(off), s * p1 + (1.0 - s) * p2}};
    return InfinitesimalOutput{std::move(out), infinitesimal_determinant(r, epsilon, phi1, phi2)};
}

double infinitesimal_determinant(const LindbladRates& r, double epsilon, Complex phi1, Complex phi2)
{
    require_inputs(r, epsilon, phi1, phi2);
    const double p1 = std::norm(phi1);
    const double p2 = std::norm(phi2);
    const double s = epsilon * (r.g1 + r.g2);
    const double ab = 1.0 - 2.0 * epsilon * (r.g2 + r.g3);
    const double re = (phi1 * std::conj(phi2)).real();
    return s * (1.0 - s) * (p1 - p2) * (p1 - p2) + p1 * p2 * (1.0 - ab * ab) +
           4.0 * epsilon * (r.g1 - r.g2) * (1.0 - epsilon * (r.g1 + r.g2 + 2.0 * r.g3)) * (p1 * p2 - re * re);
}

GrowthFlags growth_condition(const LindbladRates& r)
{
    return GrowthFlags{r.g2 + r.g3 < 0.0, r.g1 + r.g3 < 0.0, r.g1 + r.g2 < 0.0};
}

} // namespace nmswitch
