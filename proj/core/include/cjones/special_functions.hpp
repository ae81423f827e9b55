#pragma once

#include <complex>

namespace cjones {

/// Clausen function Cl_2(theta) = sum_{n>=1} sin(n theta) / n^2, which is
/// also Im Li_2(exp(i theta)). 2 pi periodic and odd.
double clausen(double theta);

/// Lobachevsky function L(theta) = -int_0^theta log|2 sin t| dt = Cl_2(2 theta) / 2.
/// Odd and pi periodic. Throws std::domain_error for non-finite input.
double lobachevsky(double theta);

/// Im Li_2(exp(i theta)). Throws std::domain_error for non-finite input.
double im_li2_unit(double theta);

/// Principal-branch dilogarithm on the closed unit disk.
/// Throws std::domain_error when |z| > 1 (beyond rounding) or z is not finite.
std::complex<double> li2(std::complex<double> z);

/// Volume of an ideal hyperbolic tetrahedron from its dihedral angles
/// (alpha + beta + gamma = pi within 1e-9, else std::domain_error).
double ideal_tet_volume(double alpha, double beta, double gamma);

/// Volume of the regular ideal tetrahedron, 3 L(pi/3).
double regular_ideal_tet_volume();

}  // namespace cjones
