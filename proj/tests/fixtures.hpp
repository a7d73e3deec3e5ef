#ifndef OMEGA_TESTS_FIXTURES_HPP
#define OMEGA_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include <omega/poly.hpp>

namespace omega::fixtures {

struct FactorSpec {
  int color;
  int mult;
  std::vector<unsigned> powers; // exponent polynomial support
};

inline Monomial mono(std::initializer_list<FactorSpec> factors) {
  Monomial m;
  for (const auto& f : factors) {
    std::set<unsigned> support(f.powers.begin(), f.powers.end());
    m = m.times(Monomial::variable(VarIndex{f.color, f.mult},
                                   ExponentPoly::from_support(support)));
  }
  return m;
}

inline OmegaPoly poly(const PartitionSpec& spec,
                      std::initializer_list<std::initializer_list<FactorSpec>> terms) {
  OmegaPoly P(spec);
  for (const auto& t : terms) P.add_term(mono(t), 1);
  return P;
}

inline PartitionSpec spec23_b2() { return PartitionSpec(2, {2, 3}); }
inline PartitionSpec spec23_b3() { return PartitionSpec(3, {2, 3}); }
inline PartitionSpec spec23_b4() { return PartitionSpec(4, {2, 3}); }

// Omega for b=2, Lambda=(2,3), n = 0..5; color 1 renders as y (bound 2),
// color 2 as z (bound 3). Frozen by hand from the defining recurrence.
inline std::vector<OmegaPoly> table1() {
  const PartitionSpec s = spec23_b2();
  std::vector<OmegaPoly> rows;
  rows.push_back(OmegaPoly::one(s));
  // n=1: z1 + y1
  rows.push_back(poly(s, {{{2, 1, {0}}}, {{1, 1, {0}}}}));
  // n=2: z1^t1 + z2 + z1*y1 + y1^s1 + y2
  rows.push_back(poly(s, {{{2, 1, {1}}},
                          {{2, 2, {0}}},
                          {{2, 1, {0}}, {1, 1, {0}}},
                          {{1, 1, {1}}},
                          {{1, 2, {0}}}}));
  // n=3
  rows.push_back(poly(s, {{{2, 1, {0, 1}}},
                          {{2, 3, {0}}},
                          {{2, 1, {1}}, {1, 1, {0}}},
                          {{2, 2, {0}}, {1, 1, {0}}},
                          {{2, 1, {0}}, {1, 1, {1}}},
                          {{1, 1, {0, 1}}},
                          {{2, 1, {0}}, {1, 2, {0}}}}));
  // n=4
  rows.push_back(poly(s, {{{2, 1, {2}}},
                          {{2, 1, {1}}, {2, 2, {0}}},
                          {{2, 2, {1}}},
                          {{2, 1, {0, 1}}, {1, 1, {0}}},
                          {{2, 3, {0}}, {1, 1, {0}}},
                          {{2, 1, {1}}, {1, 1, {1}}},
                          {{2, 2, {0}}, {1, 1, {1}}},
                          {{1, 1, {2}}},
                          {{2, 1, {0}}, {1, 1, {0, 1}}},
                          {{2, 1, {1}}, {1, 2, {0}}},
                          {{2, 2, {0}}, {1, 2, {0}}},
                          {{1, 1, {1}}, {1, 2, {0}}},
                          {{1, 2, {1}}}}));
  // n=5
  rows.push_back(poly(s, {{{1, 1, {0, 2}}},
                          {{1, 1, {0}}, {1, 2, {1}}},
                          {{1, 1, {2}}, {2, 1, {0}}},
                          {{1, 1, {1}}, {1, 2, {0}}, {2, 1, {0}}},
                          {{1, 2, {1}}, {2, 1, {0}}},
                          {{1, 1, {0, 1}}, {2, 1, {1}}},
                          {{1, 1, {0}}, {2, 1, {2}}},
                          {{1, 1, {1}}, {2, 1, {0, 1}}},
                          {{1, 2, {0}}, {2, 1, {0, 1}}},
                          {{2, 1, {0, 2}}},
                          {{1, 1, {0, 1}}, {2, 2, {0}}},
                          {{1, 1, {0}}, {2, 1, {1}}, {2, 2, {0}}},
                          {{1, 1, {0}}, {2, 2, {1}}},
                          {{2, 1, {0}}, {2, 2, {1}}},
                          {{1, 1, {1}}, {2, 3, {0}}},
                          {{1, 2, {0}}, {2, 3, {0}}},
                          {{2, 1, {1}}, {2, 3, {0}}}}));
  return rows;
}

// Omega for b=3, Lambda=(2,3), n=6: the nine terms worked out from the
// explicit formula.
inline OmegaPoly example_b3_n6() {
  const PartitionSpec s = spec23_b3();
  return poly(s, {{{1, 2, {1}}},
                  {{1, 1, {1}}, {1, 2, {0}}, {2, 1, {0}}},
                  {{1, 1, {1}}, {2, 1, {1}}},
                  {{1, 2, {0}}, {2, 1, {0, 1}}},
                  {{1, 1, {0, 1}}, {2, 2, {0}}},
                  {{1, 1, {0}}, {2, 1, {1}}, {2, 2, {0}}},
                  {{2, 2, {1}}},
                  {{1, 1, {1}}, {2, 3, {0}}},
                  {{2, 1, {1}}, {2, 3, {0}}}});
}

// The five-monomial generalized Stern polynomial for n=11 (rho=1, b=2,
// lambda=2), i.e. Omega(10) of spec (2,(2)).
inline OmegaPoly stern_n11() {
  const PartitionSpec s(2, {2});
  return poly(s, {{{1, 2, {0, 2}}},
                  {{1, 1, {1}}, {1, 2, {2}}},
                  {{1, 1, {2}}, {1, 2, {0, 1}}},
                  {{1, 1, {3}}, {1, 2, {0}}},
                  {{1, 1, {1, 3}}}});
}

// Ten-monomial polynomials for n=3 with uniform Lambda = (b-1,b-1,b-1).
inline OmegaPoly uniform_n3_b2() {
  const PartitionSpec s(2, {1, 1, 1});
  return poly(s, {{{3, 1, {0, 1}}},
                  {{2, 1, {0}}, {3, 1, {1}}},
                  {{1, 1, {0}}, {3, 1, {1}}},
                  {{2, 1, {1}}, {3, 1, {0}}},
                  {{2, 1, {0, 1}}},
                  {{1, 1, {0}}, {2, 1, {1}}},
                  {{1, 1, {1}}, {3, 1, {0}}},
                  {{1, 1, {1}}, {2, 1, {0}}},
                  {{1, 1, {0, 1}}},
                  {{1, 1, {0}}, {2, 1, {0}}, {3, 1, {0}}}});
}

inline OmegaPoly uniform_n3_b3() {
  const PartitionSpec s(3, {2, 2, 2});
  return poly(s, {{{3, 1, {1}}},
                  {{2, 1, {1}}},
                  {{1, 1, {1}}},
                  {{2, 1, {0}}, {3, 2, {0}}},
                  {{1, 1, {0}}, {3, 2, {0}}},
                  {{2, 2, {0}}, {3, 1, {0}}},
                  {{1, 1, {0}}, {2, 1, {0}}, {3, 1, {0}}},
                  {{1, 2, {0}}, {3, 1, {0}}},
                  {{1, 1, {0}}, {2, 2, {0}}},
                  {{1, 2, {0}}, {2, 1, {0}}}});
}

inline OmegaPoly uniform_n3_b4plus(int b) {
  const PartitionSpec s(b, {b - 1, b - 1, b - 1});
  return poly(s, {{{3, 3, {0}}},
                  {{2, 1, {0}}, {3, 2, {0}}},
                  {{1, 1, {0}}, {3, 2, {0}}},
                  {{2, 2, {0}}, {3, 1, {0}}},
                  {{1, 1, {0}}, {2, 1, {0}}, {3, 1, {0}}},
                  {{1, 2, {0}}, {3, 1, {0}}},
                  {{2, 3, {0}}},
                  {{1, 1, {0}}, {2, 2, {0}}},
                  {{1, 2, {0}}, {2, 1, {0}}},
                  {{1, 3, {0}}}});
}

// Test grid of the engine-agreement and identity criteria.
inline std::vector<PartitionSpec> grid() {
  std::vector<PartitionSpec> specs;
  for (int b = 2; b <= 5; ++b)
    for (const auto& lambdas : std::vector<std::vector<int>>{
             {1}, {2}, {3}, {1, 1}, {2, 3}, {1, 1, 1}, {2, 2, 2},
             {b - 1, b - 1, b - 1}})
      specs.emplace_back(b, lambdas);
  return specs;
}

} // namespace omega::fixtures

#endif
