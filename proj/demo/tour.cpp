// Decompose a cubic, expand a plane wave, transform the cubic, and check one Bochner value.
#include <zonalharm/zonalharm.hpp>

#include <cmath>
#include <iostream>

int main()
{
    using namespace zh;
    const int d = 3;
    const auto p = parse_polynomial("x1^3 + 2*x1*x2*x3 - x2^2*x3", d);

    std::cout << "P = " << to_text(p) << '\n';
    for (const auto& c : decompose(p).components) std::cout << "  r^" << 2 * c.k << " * (" << to_text(c.h) << ")\n";
    std::cout << "dim H^3 in R^3 = " << harmonic_dim(Alpha::from_dimension(d), 3) << "\n\n";

    const Alpha alpha = Alpha::from_dimension(d);
    const auto wave = expand(ZonalProfile::plane_wave(3.0), alpha, 30);
    const UnitVector eta = UnitVector::axis(d, 2);
    const UnitVector xi = UnitVector::normalized(std::vector<double>{1.0, 1.0, 1.0});
    const auto v = evaluate_expansion(wave, eta, xi);
    std::cout << "e^{3i(xi|eta)} by 30 zonal terms: " << v.value << ", exact " << std::exp(Complex(0.0, 3.0 * xi.dot(eta)))
              << ", tail bound " << v.tail_bound << "\n\n";

    const std::vector<double> x{1.5, -0.5, 2.0};
    std::cout.precision(15);
    std::cout << "FT(P dsigma)(x) components: " << sphere_ft_components(p, x).value << '\n';
    std::cout << "FT(P dsigma)(x) laplacian:  " << sphere_ft_laplacian(p, x).value << '\n';
    std::cout << "FT(P dsigma)(x) oracle:     " << sphere_ft_oracle(p, x, 1e-13).value << "\n\n";

    const auto h = parse_polynomial("x1*x2", d);
    const std::vector<double> y{0.3, 0.7, -0.2};
    const double r2 = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
    std::cout << "Bochner, e^{-s^2/2} x1*x2: " << bochner_components(RadialProfile::gaussian(0.5), h, y, 1e-12) << ", expected "
              << -std::exp(-r2 / 2.0) * evaluate(h, y) << '\n';
}
