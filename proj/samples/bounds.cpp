// Bounds and the FEM oracle for a few named triangles.

#include <cmath>
#include <iomanip>
#include <iostream>

#include "trispec/trispec.hpp"

int main() {
  using namespace trispec;
  struct Named {
    const char* name;
    double p, q;
  };
  const Named shapes[] = {{"right isosceles", 0.5, 0.5},
                          {"30-60-90", 0.75, std::sqrt(3.0) / 4},
                          {"obtuse (0.8, 0.25)", 0.8, 0.25},
                          {"flat (0.6, 0.08)", 0.6, 0.08}};
  std::cout << std::fixed << std::setprecision(4);
  for (const Named& s : shapes) {
    TriangleParam t = TriangleParam::from_double(s.p, s.q);
    BoundResult lo = best_lower(t);
    BoundResult up = best_upper(t);
    fem::Spectrum f = fem::oracle(s.p, s.q, 5);
    std::cout << s.name << " [Area " << to_string(area_label(t)) << "]\n"
              << "  lambda1 >= " << lo.value.lo_d() << " (" << to_string(lo.method) << "), FEM " << f.lambda1 << "\n"
              << "  lambda2 <= " << up.value.hi_d() << " (" << to_string(up.method) << "), FEM " << f.lambda2 << "\n"
              << "  ratio bound " << up.value.hi_d() / lo.value.lo_d() << ", FEM ratio " << f.extrapolated_ratio()
              << "\n";
  }
}
