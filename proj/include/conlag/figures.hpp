#pragma once

// The polynomials plotted in the figures, transcribed from their captions in
// x-space. They are evaluated directly from the caption formula so they
// serve as an oracle independent of the reduced-variable machinery.

#include <array>
#include <cmath>

namespace conlag {

struct FigureCaption {
  int figure;
  unsigned n;
  unsigned m;
  const char* caption;
  double (*formula)(double x, double a);
};

namespace detail {
inline double xa(double x, double a, int k) { return std::pow(x, k * a); }
}  // namespace detail

inline const std::array<FigureCaption, 11>& figure_captions() {
  using detail::xa;
  static const std::array<FigureCaption, 11> captions{{
      {1, 1, 0, "1 - x^a/a", [](double x, double a) { return 1.0 - xa(x, a, 1) / a; }},
      {2, 2, 0, "1 + x^(2a)/(2a^2) - 2x^a/a",
       [](double x, double a) { return 1.0 + xa(x, a, 2) / (2 * a * a) - 2 * xa(x, a, 1) / a; }},
      {3, 3, 0, "-(x^(3a) - 9a x^(2a) + 18a^2 x^a - 6a^3)/(6a^3)",
       [](double x, double a) {
         return -(xa(x, a, 3) - 9 * a * xa(x, a, 2) + 18 * a * a * xa(x, a, 1) - 6 * a * a * a) / (6 * a * a * a);
       }},
      {4, 4, 0, "1 + x^(4a)/(24a^4) - 2x^(3a)/(3a^3) + 3x^(2a)/a^2 - 4x^a/a",
       [](double x, double a) {
         return 1.0 + xa(x, a, 4) / (24 * std::pow(a, 4)) - 2 * xa(x, a, 3) / (3 * std::pow(a, 3)) +
                3 * xa(x, a, 2) / (a * a) - 4 * xa(x, a, 1) / a;
       }},
      {5, 5, 0, "1 - x^(5a)/(120a^5) + 5x^(4a)/(24a^4) - 5x^(3a)/(3a^3) + 5x^(2a)/a^2 - 5x^a/a",
       [](double x, double a) {
         return 1.0 - xa(x, a, 5) / (120 * std::pow(a, 5)) + 5 * xa(x, a, 4) / (24 * std::pow(a, 4)) -
                5 * xa(x, a, 3) / (3 * std::pow(a, 3)) + 5 * xa(x, a, 2) / (a * a) - 5 * xa(x, a, 1) / a;
       }},
      {6, 1, 1, "2 - x^a/a", [](double x, double a) { return 2.0 - xa(x, a, 1) / a; }},
      {7, 2, 1, "x^(2a)/(2a^2) - 3x^a/a + 3",
       [](double x, double a) { return xa(x, a, 2) / (2 * a * a) - 3 * xa(x, a, 1) / a + 3.0; }},
      {8, 2, 2, "x^(2a)/(2a^2) - 4x^a/a + 6",
       [](double x, double a) { return xa(x, a, 2) / (2 * a * a) - 4 * xa(x, a, 1) / a + 6.0; }},
      {9, 3, 1, "-x^(3a)/(6a^3) + 2x^(2a)/a^2 - 6x^a/a + 4",
       [](double x, double a) {
         return -xa(x, a, 3) / (6 * a * a * a) + 2 * xa(x, a, 2) / (a * a) - 6 * xa(x, a, 1) / a + 4.0;
       }},
      {10, 3, 2, "-x^(3a)/(6a^3) + 15x^(2a)/(6a^2) - 10x^a/a + 10",
       [](double x, double a) {
         return -xa(x, a, 3) / (6 * a * a * a) + 15 * xa(x, a, 2) / (6 * a * a) - 10 * xa(x, a, 1) / a + 10.0;
       }},
      {11, 3, 3, "-x^(3a)/(6a^3) + 3x^(2a)/a^2 - 15x^a/a + 20",
       [](double x, double a) {
         return -xa(x, a, 3) / (6 * a * a * a) + 3 * xa(x, a, 2) / (a * a) - 15 * xa(x, a, 1) / a + 20.0;
       }},
  }};
  return captions;
}

}  // namespace conlag
