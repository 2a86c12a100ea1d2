#include "bfkit/constructions.hpp"

#include <stdexcept>
#include <string>

namespace bfkit {

GeneralInstance::GeneralInstance(TruthTable g, VectorialMap F, FunctionFamily H)
    : g_(std::move(g)), F_(std::move(F)), H_(std::move(H)) {
  if (g_.n_vars() != F_.s())
    throw std::invalid_argument("outer function and selector disagree on s");
  if (F_.k() != H_.k())
    throw std::invalid_argument("selector width and family index width differ");
  if (F_.s() + H_.t() > kMaxVars)
    throw std::invalid_argument("combined instance exceeds the variable cap");
}

TruthTable lift_x(const TruthTable& g, int t) {
  if (t < 0 || g.n_vars() + t > kMaxVars)
    throw std::invalid_argument("lift exceeds the variable cap");
  TruthTable out(g.n_vars() + t);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    if (!g.get(x)) continue;
    const std::uint64_t base = x << t;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << t); ++y)
      out.set(base | y, 1);
  }
  return out;
}

TruthTable lift_y(const TruthTable& h, int s) {
  if (s < 0 || h.n_vars() + s > kMaxVars)
    throw std::invalid_argument("lift exceeds the variable cap");
  TruthTable out(h.n_vars() + s);
  for (std::uint64_t y = 0; y < h.size(); ++y) {
    if (!h.get(y)) continue;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << s); ++x)
      out.set((x << h.n_vars()) | y, 1);
  }
  return out;
}

TruthTable direct_sum(const TruthTable& g, const TruthTable& h) {
  return lift_x(g, h.n_vars()) ^ lift_y(h, g.n_vars());
}

namespace {

void check_pair(const TruthTable& a, const TruthTable& b, const char* what) {
  if (a.n_vars() != b.n_vars())
    throw std::invalid_argument(std::string(what) +
                                " must share one variable count");
}

}  // namespace

TruthTable indirect_sum(const TruthTable& g, const TruthTable& gp,
                        const TruthTable& h, const TruthTable& hp) {
  check_pair(g, gp, "x-side functions");
  check_pair(h, hp, "y-side functions");
  const int s = g.n_vars(), t = h.n_vars();
  const TruthTable G = lift_x(g, t), G1 = lift_x(gp, t);
  const TruthTable H = lift_y(h, s), H1 = lift_y(hp, s);
  return G ^ H ^ ((G ^ G1) & (H ^ H1));
}

TruthTable gen1(const TruthTable& g, const TruthTable& gp, const TruthTable& gpp,
                const TruthTable& h, const TruthTable& hp, const TruthTable& hpp) {
  check_pair(g, gp, "x-side functions");
  check_pair(g, gpp, "x-side functions");
  check_pair(h, hp, "y-side functions");
  check_pair(h, hpp, "y-side functions");
  const int s = g.n_vars(), t = h.n_vars();
  const TruthTable G = lift_x(g, t), G1 = lift_x(gp, t), G2 = lift_x(gpp, t);
  const TruthTable H = lift_y(h, s), H1 = lift_y(hp, s), H2 = lift_y(hpp, s);
  return G ^ H ^ ((G ^ G1) & (H ^ H1)) ^ ((G1 ^ G2) & (H1 ^ H2));
}

TruthTable gen2(const TruthTable& g, const TruthTable& gp, const TruthTable& gpp,
                const TruthTable& gppp, const TruthTable& h, const TruthTable& hp,
                const TruthTable& hpp, const TruthTable& hppp) {
  check_pair(g, gp, "x-side functions");
  check_pair(g, gpp, "x-side functions");
  check_pair(g, gppp, "x-side functions");
  check_pair(h, hp, "y-side functions");
  check_pair(h, hpp, "y-side functions");
  check_pair(h, hppp, "y-side functions");
  const int s = g.n_vars(), t = h.n_vars();
  const TruthTable G = lift_x(g, t), G1 = lift_x(gp, t), G2 = lift_x(gpp, t),
                   G3 = lift_x(gppp, t);
  const TruthTable H = lift_y(h, s), H1 = lift_y(hp, s), H2 = lift_y(hpp, s),
                   H3 = lift_y(hppp, s);
  return G ^ H ^ ((G ^ G1) & (H ^ H1)) ^ ((G1 ^ G2) & (H1 ^ H2)) ^
         ((G2 ^ G3) & (H2 ^ H3));
}

TruthTable size3_sum(const TruthTable& g, const TruthTable& gp,
                     const TruthTable& gpp, const TruthTable& h0,
                     const TruthTable& h1, const TruthTable& h2) {
  check_pair(g, gp, "x-side functions");
  check_pair(g, gpp, "x-side functions");
  check_pair(h0, h1, "y-side functions");
  check_pair(h0, h2, "y-side functions");
  const TruthTable overlap = (g ^ gp) & (g ^ gpp);
  if (!overlap.is_zero()) {
    std::uint64_t witness = 0;
    while (!overlap.get(witness)) ++witness;
    throw std::invalid_argument(
        "difference functions overlap (fibers would not partition), e.g. at "
        "point " +
        std::to_string(witness));
  }
  const int s = g.n_vars(), t = h0.n_vars();
  const TruthTable G = lift_x(g, t), G1 = lift_x(gp, t), G2 = lift_x(gpp, t);
  const TruthTable H0 = lift_y(h0, s), H1 = lift_y(h1, s), H2 = lift_y(h2, s);
  return G ^ H0 ^ ((G ^ G1) & (H1 ^ H2)) ^ ((G1 ^ G2) & (H2 ^ H0));
}

TruthTable general_construct(const GeneralInstance& inst) {
  const int t = inst.t();
  TruthTable out(inst.n());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << inst.s()); ++x) {
    const TruthTable& member = inst.H().member(inst.F()(x));
    const int gx = inst.g().get(x);
    const std::uint64_t base = x << t;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << t); ++y)
      if (member.get(y) ^ gx) out.set(base | y, 1);
  }
  return out;
}

TruthTable expand_k2(const GeneralInstance& inst) {
  if (inst.k() != 2)
    throw std::invalid_argument("two-coordinate expansion needs k=2");
  const int s = inst.s(), t = inst.t();
  const TruthTable F1 = lift_x(inst.F().coord(1), t);
  const TruthTable F2 = lift_x(inst.F().coord(2), t);
  const TruthTable H00 = lift_y(inst.H().member(0), s);
  const TruthTable H01 = lift_y(inst.H().member(1), s);
  const TruthTable H10 = lift_y(inst.H().member(2), s);
  const TruthTable H11 = lift_y(inst.H().member(3), s);
  return lift_x(inst.g(), t) ^ H00 ^ ((F1 & F2) & (H00 ^ H01 ^ H10 ^ H11)) ^
         (F1 & (H00 ^ H10)) ^ (F2 & (H00 ^ H01));
}

TruthTable expand_k3(const GeneralInstance& inst) {
  if (inst.k() != 3)
    throw std::invalid_argument("three-coordinate expansion needs k=3");
  const int s = inst.s(), t = inst.t();
  const TruthTable F1 = lift_x(inst.F().coord(1), t);
  const TruthTable F2 = lift_x(inst.F().coord(2), t);
  const TruthTable F3 = lift_x(inst.F().coord(3), t);
  std::vector<TruthTable> H;
  H.reserve(8);
  for (std::uint32_t u = 0; u < 8; ++u)
    H.push_back(lift_y(inst.H().member(u), s));
  return lift_x(inst.g(), t) ^ H[0] ^
         ((F1 & F2 & F3) &
          (H[0] ^ H[1] ^ H[2] ^ H[3] ^ H[4] ^ H[5] ^ H[6] ^ H[7])) ^
         ((F1 & F2) & (H[0] ^ H[2] ^ H[4] ^ H[6])) ^
         ((F1 & F3) & (H[0] ^ H[1] ^ H[4] ^ H[5])) ^
         ((F2 & F3) & (H[0] ^ H[1] ^ H[2] ^ H[3])) ^
         (F1 & (H[0] ^ H[4])) ^ (F2 & (H[0] ^ H[2])) ^ (F3 & (H[0] ^ H[1]));
}

GeneralInstance absorb_outer(const GeneralInstance& inst) {
  if (!inst.F().is_bijective())
    throw std::invalid_argument("outer absorption needs a bijective selector");
  const auto values = inst.F().value_table();
  std::vector<std::uint64_t> x_of_u(values.size());
  for (std::uint64_t x = 0; x < values.size(); ++x) x_of_u[values[x]] = x;
  std::vector<TruthTable> members;
  members.reserve(inst.H().member_count());
  for (std::uint32_t u = 0; u < inst.H().member_count(); ++u) {
    TruthTable m = inst.H().member(u);
    if (inst.g().get(x_of_u[u])) m = ~m;
    members.push_back(std::move(m));
  }
  return GeneralInstance(TruthTable(inst.s()), inst.F(),
                         FunctionFamily(inst.t(), inst.k(), std::move(members)));
}

}  // namespace bfkit
