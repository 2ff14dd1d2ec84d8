// Builds L_3 three ways, prints its x-space form and a few values for
// several conformable orders.

#include "conlag/conlag.hpp"

#include <iostream>

int main() {
  const auto closed = conlag::laguerre_closed(3);
  const auto rodrigues = conlag::laguerre_rodrigues(3);
  const auto transform = conlag::solve_laguerre_ode(3);

  std::cout << "L_3(u)   = " << closed.to_string() << '\n';
  std::cout << "x-form   = " << conlag::render_x_view(closed) << '\n';
  std::cout << "agree    = " << std::boolalpha << (closed == rodrigues && closed == transform) << '\n';
  std::cout << "L_3 image: " << conlag::transform(closed).to_string() << '\n';

  for (double a : {0.5, 0.75, 1.0}) {
    const conlag::AlphaValue alpha(a);
    std::cout << "a = " << a << ":";
    for (double x : {0.5, 1.0, 2.0}) std::cout << "  L_3(" << x << ") = " << conlag::eval(closed, x, alpha);
    std::cout << '\n';
  }
}
