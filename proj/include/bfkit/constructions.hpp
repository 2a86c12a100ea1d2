#pragma once

#include "bfkit/vectorial.hpp"

namespace bfkit {

// One instance of the two-block composition f(x, y) = g(x) ^ h_{F(x)}(y):
// an outer function g on s variables, a selector F: F_2^s -> F_2^k and a
// family of 2^k inner functions on t variables.
class GeneralInstance {
public:
  GeneralInstance(TruthTable g, VectorialMap F, FunctionFamily H);

  const TruthTable& g() const { return g_; }
  const VectorialMap& F() const { return F_; }
  const FunctionFamily& H() const { return H_; }
  int s() const { return F_.s(); }
  int t() const { return H_.t(); }
  int k() const { return F_.k(); }
  int n() const { return s() + t(); }

private:
  TruthTable g_;
  VectorialMap F_;
  FunctionFamily H_;
};

// g(x) / h(y) viewed as functions of the concatenated point (x, y)
TruthTable lift_x(const TruthTable& g, int t);
TruthTable lift_y(const TruthTable& h, int s);

TruthTable direct_sum(const TruthTable& g, const TruthTable& h);
TruthTable indirect_sum(const TruthTable& g, const TruthTable& gp,
                        const TruthTable& h, const TruthTable& hp);
// f = g ^ h ^ (g^gp)(h^hp) ^ (gp^gpp)(hp^hpp), all products across the blocks
TruthTable gen1(const TruthTable& g, const TruthTable& gp, const TruthTable& gpp,
                const TruthTable& h, const TruthTable& hp, const TruthTable& hpp);
// gen1 plus the third correction term (gpp^gppp)(hpp^hppp)
TruthTable gen2(const TruthTable& g, const TruthTable& gp, const TruthTable& gpp,
                const TruthTable& gppp, const TruthTable& h, const TruthTable& hp,
                const TruthTable& hpp, const TruthTable& hppp);
// three-fiber selector written through difference functions; requires
// (g^gp)(g^gpp) == 0 so the fibers partition the x-domain
TruthTable size3_sum(const TruthTable& g, const TruthTable& gp,
                     const TruthTable& gpp, const TruthTable& h0,
                     const TruthTable& h1, const TruthTable& h2);
TruthTable general_construct(const GeneralInstance& inst);
// explicit multilinear expansions over the selector coordinates, k = 2 / 3
TruthTable expand_k2(const GeneralInstance& inst);
TruthTable expand_k3(const GeneralInstance& inst);
// for bijective F, folds g into the family (h'_u = h_u ^ g(F^-1(u))) so the
// same f is produced with outer part 0
GeneralInstance absorb_outer(const GeneralInstance& inst);

}  // namespace bfkit
