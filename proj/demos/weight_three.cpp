// both weight 3 squares on one random six-point configuration in P^2
#include <iostream>
#include <random>

#include "grassmann/morphisms.hpp"

using namespace grassmann;

int main(int argc, char** argv) {
  std::mt19937_64 rng(argc > 1 ? std::stoull(argv[1]) : 1);
  auto names = default_variable_names(1);
  Context ctx(names, Derivation::parse({"D(t1) = t1^2 - 2"}, names));
  Configuration c = random_configuration(rng, 6, 3, 1);

  Configuration five = c.omit(5);
  bool lower = equals(ctx, tau0_n(ctx, boundary_d(five), 3), partial_mid(ctx, tau1_3(ctx, five)));
  std::cout << "tau0_3 o d = partial o tau1_3: " << (lower ? "yes" : "no") << "\n";

  Tau23Result t = tau2_3_detailed(c);
  std::cout << "tau2_3: " << t.terms << " terms, " << t.value.terms().size() << " after merging\n";
  TensorElement lhs = mid_left_tensor(ctx, partial3(ctx, t.value));
  TensorElement rhs = mid_left_tensor(ctx, tau1_3(ctx, boundary_d(c)));
  auto r = scalar_ratio(ctx, lhs, rhs);
  std::cout << "partial o tau2_3 = k * tau1_3 o d with k = " << (r ? r->get_str() : "none") << "\n";
}
