#pragma once

#include <array>

namespace atlas {

// Lambert-quadrilateral data for the square with corner angles pi/4. All
// lengths are halves/doubles of the two defining solutions
//   sinh^2(t) = cos(pi/4)      (distance between opposite sides is 2t)
//   tanh^2(alpha) = cos(pi/4)  (the side is 2*alpha)
struct SquareData {
    double t = 0.0;
    double opposite_side_distance = 0.0; // 2t
    double side_half = 0.0;              // alpha
    double side = 0.0;                   // 2*alpha
    double basic_pair_distance = 0.0;    // = side
    double systole_length = 0.0;         // 2*side
};

SquareData square_data();

// Right-angled pentagon with sides cyclically (s/2, s/6, s/4, b/4, c),
// c = s/12, subject to sinh(a_i) sinh(a_{i+1}) = cosh(a_{i+3}) mod 5.
struct PentagonData {
    double s = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::array<double, 5> sides{};     // (s/2, s/6, s/4, b/4, c)
    std::array<double, 5> residuals{}; // sinh(a_i) sinh(a_{i+1}) - cosh(a_{i+3})
    bool c_is_s_over_12 = true;        // false if the cross-check relations reject s/12
    double best_fit_c = 0.0;           // from sinh(s/6) sinh(s/4) = cosh(c)
};

PentagonData solve_pentagon(double tolerance = 1e-12);

// Shortest distance between the cuffs of lengths l1 and l2 on a hyperbolic
// pair of pants with boundary lengths (l1, l2, l3).
double pants_cuff_distance(double l1, double l2, double l3);

// Half-width of the embedded collar around a closed geodesic of length l.
double collar_width(double l);

// 2 arcsinh(1): the curve length whose collar exactly reproduces it.
double epsilon0();

} // namespace atlas
