#pragma once

#include <stdexcept>
#include <string>

namespace eyf {

// Parameters of the two-branch equilibrium income distribution: an
// exponential (Boltzmann-Gibbs) bulk that crosses over to a Pareto
// power law at m0, with a second power-law regime above m1.
//
//   p(m) ~ exp(-(m0/T ) atan(m/m0)) / (1+(m/m0)^2)^((alpha +1)/2)  for m <  m1
//   p(m) ~ exp(-(m0/T1) atan(m/m0)) / (1+(m/m0)^2)^((alpha1+1)/2)  for m >= m1
//
// All incomes are plain positive reals tagged with a currency string;
// no unit conversion happens anywhere in the library.
struct Params {
    double m0 = 0.0;      // low/medium class crossover income
    double m1 = 0.0;      // medium/high class crossover income
    double T = 0.0;       // average income of the low+medium classes
    double T1 = 0.0;      // temperature of the high branch (best fits tie T1 = m1)
    double alpha = 0.0;   // Pareto exponent of the medium class
    double alpha1 = 0.0;  // Pareto exponent of the high class
    std::string currency = "USD";

    void validate() const
    {
        if (!(m0 > 0.0)) throw std::invalid_argument("Params: m0 must be > 0");
        if (!(m1 > m0)) throw std::invalid_argument("Params: m1 must be > m0");
        if (!(T > 0.0)) throw std::invalid_argument("Params: T must be > 0");
        if (!(T1 > 0.0)) throw std::invalid_argument("Params: T1 must be > 0");
        if (!(alpha > 0.0)) throw std::invalid_argument("Params: alpha must be > 0");
        // alpha1 <= 0 makes the tail integrand ~ m^-(alpha1+1) non-normalizable.
        if (!(alpha1 > 0.0)) throw std::invalid_argument("Params: alpha1 must be > 0");
    }

    Params scaled(double c) const
    {
        Params p = *this;
        p.m0 *= c;
        p.m1 *= c;
        p.T *= c;
        p.T1 *= c;
        return p;
    }

    bool operator==(const Params&) const = default;
};

}  // namespace eyf
