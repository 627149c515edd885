// Acceptance suite: one pass/fail line per criterion, each with a pinned
// wall-clock budget.  Exits nonzero if any criterion fails its checks or
// overruns its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "inertia/chern.hpp"
#include "inertia/localization.hpp"
#include "inertia/products.hpp"
#include "inertia/rings.hpp"
#include "inertia/stack.hpp"

using namespace inertia;

namespace {

Rat rat(long p, long q = 1) { return Rat(p, q); }

ActionSpec torus_action(std::vector<long> weights) {
  ActionSpec a;
  a.group.torus_rank = 1;
  a.space = SpaceKind::AffineMinusOrigin;
  for (long w : weights) a.weights.push_back(Character{{}, w});
  return a;
}

ActionSpec point_group(std::vector<long> orders) {
  ActionSpec a;
  a.group.finite_orders = std::move(orders);
  a.space = SpaceKind::Point;
  return a;
}

ActionSpec finite_affine(std::vector<long> orders, std::vector<std::vector<long>> weights) {
  ActionSpec a;
  a.group.finite_orders = std::move(orders);
  a.space = SpaceKind::AffineMinusOrigin;
  for (auto& w : weights) a.weights.push_back(Character{w, 0});
  return a;
}

Character chi(long k) { return Character{{}, k}; }

// the defining character of the acting group: the torus character when a
// torus factor is present, otherwise the first finite character
Character tautological(const Stack& s) {
  Character w;
  w.finite.assign(s.action().group.finite_orders.size(), 0);
  if (s.action().group.torus_rank == 1) {
    w.torus = 1;
  } else {
    w.finite.at(0) = 1;
  }
  return w;
}

InertiaChowClass scale_class(const InertiaChowClass& x, const Cyclo& c) {
  InertiaChowClass r = InertiaChowClass::zero(*x.stack);
  for (const auto& [sec, part] : x.parts) r.add_part(sec, part.scaled(c));
  return r;
}

// failure collector shared by all criteria
struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// the eight inertial pairs exercised by the axiom and associativity sweeps
std::vector<InertialPair> standard_pairs(const Stack& s) {
  VirtualBundle tl = VirtualBundle::line(tautological(s));
  return {
      InertialPair::orbifold(),
      InertialPair::virt(),
      InertialPair::vplus(s.tangent(), "T"),
      InertialPair::vplus(s.cotangent(), "T*"),
      InertialPair::vplus(tl, "chi"),
      InertialPair::vminus(s.tangent(), "T"),
      InertialPair::vminus(s.cotangent(), "T*"),
      InertialPair::vminus(tl, "chi"),
  };
}

// ---------------------------------------------------------------------------

// K-theory multiplication tables on the weight (1,3,3) projective stack for
// the orbifold, virtual and cotangent-twisted products, entry by entry.
void criterion1(Check& c) {
  Stack s(torus_action({1, 3, 3}));
  VirtualBundle line_chi = VirtualBundle::line(chi(1));
  VirtualBundle line_chi_inv = VirtualBundle::line(chi(-1));

  // expected entries as Euler-class exponents (a, b) meaning e(chi)^a * e(chi^-1)^b
  struct Entry {
    int a, b;
  };
  auto table = [&](const InertialPair& p, const Entry exp[3][3], const std::string& tag) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        InertiaKClass prod = product_k(s, p, InertiaKClass::sector_unit(s, i),
                                       InertiaKClass::sector_unit(s, j));
        int target = s.sector_index(s.mul(s.sector(i).element, s.sector(j).element));
        std::string where = tag + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
        c.require(prod.parts.size() == 1 && prod.parts.count(target) == 1,
                  where + ": single part on the product sector");
        if (prod.parts.count(target) == 0) continue;
        KRingPtr ring = prod.parts.at(target).ring();
        KClass want = KClass::one(ring);
        for (int r = 0; r < exp[i][j].a; ++r) want = want * euler_k(ring, line_chi);
        for (int r = 0; r < exp[i][j].b; ++r) want = want * euler_k(ring, line_chi_inv);
        c.require(prod.parts.at(target) == want, where + ": exact value");
      }
    }
  };

  const Entry orb[3][3] = {{{0, 0}, {0, 0}, {0, 0}},
                           {{0, 0}, {0, 0}, {1, 0}},
                           {{0, 0}, {1, 0}, {1, 0}}};
  const Entry virt[3][3] = {{{0, 0}, {0, 0}, {0, 0}},
                            {{0, 0}, {1, 0}, {2, 0}},
                            {{0, 0}, {2, 0}, {1, 0}}};
  const Entry cot[3][3] = {{{0, 0}, {0, 0}, {0, 0}},
                           {{0, 0}, {0, 1}, {1, 1}},
                           {{0, 0}, {1, 1}, {1, 0}}};
  table(InertialPair::orbifold(), orb, "orbifold");
  table(InertialPair::virt(), virt, "virtual");
  table(InertialPair::vplus(s.cotangent(), "T*"), cot, "cotangent");

  // ring presentations pinned alongside the values
  c.require(s.k_ring({0, 1, 2})->presentation() == "Z[X]/<(X - 1)*(X^3 - 1)^2>",
            "identity-sector ring presentation");
  c.require(s.k_ring({1, 2})->presentation() == "Z[X]/<(X^3 - 1)^2>",
            "twisted-sector ring presentation");
}

// Chow tables for the same stack: virtual product twisted entries (t, t^2, t)
// and cotangent-twisted entries (-t, -t^2, t).
void criterion2(Check& c) {
  Stack s(torus_action({1, 3, 3}));
  FieldPtr f = s.field();
  ChowRingPtr full = s.chow_ring({0, 1, 2});
  ChowRingPtr tw = s.chow_ring({1, 2});
  c.require(full->trunc == 3, "identity sector truncates at t^3");
  c.require(tw->trunc == 2, "twisted sectors truncate at t^2");

  auto t_pow = [&](const ChowRingPtr& r, long k, long sign) {
    return ChowClass::monomial(r, k, Cyclo::from_rat(f, rat(sign)));
  };
  auto unit = [&](int i) {
    InertiaChowClass u = InertiaChowClass::zero(s);
    u.add_part(i, ChowClass::one(s.chow_ring(s.sector(i).fixed)));
    return u;
  };
  auto entry = [&](const InertialPair& p, int i, int j) {
    InertiaChowClass prod = product_chow(s, p, unit(i), unit(j));
    int target = s.sector_index(s.mul(s.sector(i).element, s.sector(j).element));
    if (prod.parts.count(target) == 0) return ChowClass();
    return prod.parts.at(target);
  };

  InertialPair virt = InertialPair::virt();
  c.require(entry(virt, 1, 1) == t_pow(tw, 1, 1), "virtual (1,1) = t");
  c.require(entry(virt, 1, 2) == t_pow(full, 2, 1), "virtual (1,2) = t^2");
  c.require(entry(virt, 2, 2) == t_pow(tw, 1, 1), "virtual (2,2) = t");

  InertialPair cot = InertialPair::vplus(s.cotangent(), "T*");
  c.require(entry(cot, 1, 1) == t_pow(tw, 1, -1), "cotangent (1,1) = -t");
  c.require(entry(cot, 1, 2) == t_pow(full, 2, -1), "cotangent (1,2) = -t^2");
  c.require(entry(cot, 2, 2) == t_pow(tw, 1, 1), "cotangent (2,2) = t");
}

// The diagonal rescaling by e^{i pi rank L(g^{-1})T} — concretely 1 on the
// identity sector, e^{2 pi i/3} and e^{i pi/3} on the twisted sectors — is a
// ring isomorphism from the virtual Chow product to the cotangent-twisted one.
void criterion3(Check& c) {
  Stack s(torus_action({1, 3, 3}));
  FieldPtr f = s.field();
  const VirtualBundle& tv = s.tangent();

  c.require(theta_scalar(s, tv, s.sector(0).element) == Cyclo::one(f),
            "scalar on the identity sector is 1");
  c.require(theta_scalar(s, tv, s.sector(1).element) == Cyclo::root_of_unity(f, rat(1, 3)),
            "scalar on the first twisted sector is e^{2 pi i/3}");
  c.require(theta_scalar(s, tv, s.sector(2).element) == Cyclo::root_of_unity(f, rat(1, 6)),
            "scalar on the second twisted sector is e^{i pi/3}");

  InertialPair virt = InertialPair::virt();
  InertialPair cot = InertialPair::vplus(s.cotangent(), "T*");
  auto basis = chow_basis(s);
  long bad = 0;
  for (const InertiaChowClass& x : basis) {
    for (const InertiaChowClass& y : basis) {
      InertiaChowClass lhs = theta_twist(s, tv, product_chow(s, virt, x, y));
      InertiaChowClass rhs = product_chow(s, cot, theta_twist(s, tv, x), theta_twist(s, tv, y));
      if (!(lhs == rhs)) ++bad;
    }
  }
  c.require(bad == 0, "intertwining fails on " + std::to_string(bad) + " basis pairs");
}

// Localized K-theory table on the weight (1,2) projective stack, plus the
// Chern character of its only nontrivial entry.
void criterion4(Check& c) {
  Stack s(torus_action({1, 2}));
  InertiaKClass u0 = InertiaKClass::sector_unit(s, 0);
  InertiaKClass u1 = InertiaKClass::sector_unit(s, 1);

  c.require(localized_product(s, u0, u0) == u0, "unit row (0,0)");
  c.require(localized_product(s, u0, u1) == u1, "unit row (0,1)");
  c.require(localized_product(s, u1, u0) == u1, "unit row (1,0)");

  InertiaKClass d = localized_product(s, u1, u1);
  c.require(d.parts.size() == 1 && d.parts.count(0) == 1,
            "(1,1) lands on the identity sector");
  if (d.parts.count(0) == 1) {
    KRingPtr ring = s.k_ring({0, 1});
    KClass one = KClass::one(ring);
    KClass x = KClass::monomial(ring, chi(1));
    KClass expected = ((one + x) * (one + x) * euler_k(ring, VirtualBundle::line(chi(1))) +
                       (one - x) * (one - x))
                          .scaled(Cyclo::from_rat(s.field(), rat(1, 4)));
    c.require(d.parts.at(0) == expected,
              "(1,1) = ((1+chi)^2 e(chi) + (1-chi)^2)/4");

    ChowClass ch = chern_k(d.parts.at(0));
    c.require(ch.ring()->trunc == 2, "Chern character lives in C[t]/<t^2>");
    c.require(ch == ChowClass::monomial(ch.ring(), 1, Cyclo::one(s.field())),
              "Chern character of the (1,1) entry is t");
  }
}

// Axiom suite: identity, commutativity, cocycle, Chern compatibility and
// obstruction integrality for eight pairs on six stacks.
void criterion5(Check& c) {
  std::vector<std::pair<std::string, std::shared_ptr<Stack>>> stacks = {
      {"P(1,2)", std::make_shared<Stack>(torus_action({1, 2}))},
      {"P(1,3,3)", std::make_shared<Stack>(torus_action({1, 3, 3}))},
      {"B mu2", std::make_shared<Stack>(point_group({2}))},
      {"B mu3", std::make_shared<Stack>(point_group({3}))},
      {"B mu4", std::make_shared<Stack>(point_group({4}))},
      {"mu3 on A^2-0", std::make_shared<Stack>(finite_affine({3}, {{1}, {2}}))},
  };
  for (const auto& [name, sp] : stacks) {
    for (const InertialPair& p : standard_pairs(*sp)) {
      PairCheckReport rep = check_inertial_pair(*sp, p);
      std::string where = name + " / " + p.name;
      c.require(rep.obstructions_ok, where + ": obstruction integrality");
      c.require(rep.identity_ok, where + ": identity axiom");
      c.require(rep.symmetry_ok, where + ": commutativity");
      c.require(rep.cocycle_ok, where + ": cocycle identity");
      c.require(rep.chern_ok, where + ": Chern compatibility");
    }
  }
}

// Brute-force associativity over complete monomial bases, in both theories.
void criterion6(Check& c) {
  std::vector<std::pair<std::string, std::shared_ptr<Stack>>> stacks = {
      {"P(1,2)", std::make_shared<Stack>(torus_action({1, 2}))},
      {"P(1,3,3)", std::make_shared<Stack>(torus_action({1, 3, 3}))},
      {"B mu2", std::make_shared<Stack>(point_group({2}))},
      {"B mu3", std::make_shared<Stack>(point_group({3}))},
      {"B mu4", std::make_shared<Stack>(point_group({4}))},
      {"mu3 on A^2-0", std::make_shared<Stack>(finite_affine({3}, {{1}, {2}}))},
  };
  for (const auto& [name, sp] : stacks) {
    const Stack& s = *sp;
    for (const InertialPair& p : standard_pairs(s)) {
      {
        auto basis = k_basis(s);
        size_t m = basis.size();
        std::vector<std::vector<InertiaKClass>> tab(m, std::vector<InertiaKClass>(m));
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j) tab[i][j] = product_k(s, p, basis[i], basis[j]);
        long bad = 0;
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
              if (!(product_k(s, p, tab[i][j], basis[k]) ==
                    product_k(s, p, basis[i], tab[j][k])))
                ++bad;
        c.require(bad == 0, name + " / " + p.name + " (K): " + std::to_string(bad) +
                                " non-associative triples");
      }
      {
        auto basis = chow_basis(s);
        size_t m = basis.size();
        std::vector<std::vector<InertiaChowClass>> tab(m, std::vector<InertiaChowClass>(m));
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j) tab[i][j] = product_chow(s, p, basis[i], basis[j]);
        long bad = 0;
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
              if (!(product_chow(s, p, tab[i][j], basis[k]) ==
                    product_chow(s, p, basis[i], tab[j][k])))
                ++bad;
        c.require(bad == 0, name + " / " + p.name + " (Chow): " + std::to_string(bad) +
                                " non-associative triples");
      }
    }
  }
}

// The inertial Chern character is a ring homomorphism, and the inertial rank
// of the orbifold pair vanishes on every positive-age sector.
void criterion7(Check& c) {
  std::vector<std::pair<std::string, std::shared_ptr<Stack>>> stacks = {
      {"P(1,2)", std::make_shared<Stack>(torus_action({1, 2}))},
      {"P(1,3,3)", std::make_shared<Stack>(torus_action({1, 3, 3}))},
  };
  for (const auto& [name, sp] : stacks) {
    const Stack& s = *sp;
    for (const InertialPair& p : {InertialPair::orbifold(), InertialPair::virt()}) {
      auto basis = k_basis(s);
      size_t m = basis.size();
      std::vector<InertiaChowClass> ch(m);
      for (size_t i = 0; i < m; ++i) ch[i] = inertial_chern(s, p, basis[i]);
      long bad = 0;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
          if (!(inertial_chern(s, p, product_k(s, p, basis[i], basis[j])) ==
                product_chow(s, p, ch[i], ch[j])))
            ++bad;
      c.require(bad == 0, name + " / " + p.name + ": homomorphism fails on " +
                              std::to_string(bad) + " basis pairs");
    }
    // rank vanishing on twisted (positive-age) sectors for the orbifold pair
    InertialPair orb = InertialPair::orbifold();
    for (const InertiaKClass& b : k_basis(s)) {
      for (const auto& [sec, part] : b.parts) {
        if (!(s.sector(sec).age > 0)) continue;
        auto r = inertial_rank(s, orb, b);
        c.require(r.count(sec) == 1 && r.at(sec).is_zero(),
                  name + ": rank does not vanish on a positive-age sector");
      }
    }
  }
}

// Sign law: the tangent vminus product equals the cotangent vplus product up
// to (-1)^(a1 + a2 - a12), with every exponent a non-negative integer.
void criterion8(Check& c) {
  Stack s(torus_action({1, 3, 3}));
  FieldPtr f = s.field();
  InertialPair tminus = InertialPair::vminus(s.tangent(), "T");
  InertialPair tstarplus = InertialPair::vplus(s.cotangent(), "T*");

  auto basis = chow_basis(s);
  long bad = 0;
  for (const InertiaChowClass& x : basis) {
    for (const InertiaChowClass& y : basis) {
      int i = x.parts.begin()->first;
      int j = y.parts.begin()->first;
      const GroupElement& gi = s.sector(i).element;
      const GroupElement& gj = s.sector(j).element;
      // exponent = rank of the tangent vminus class = sum of inverse ages
      Rat e = s.age(s.inverse(gi)) + s.age(s.inverse(gj)) - s.age(s.inverse(s.mul(gi, gj)));
      c.require(e.get_den() == 1 && e >= 0,
                "exponent is a non-negative integer on sectors (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
      Cyclo sign = Cyclo::from_rat(f, e.get_num() % 2 == 0 ? rat(1) : rat(-1));
      InertiaChowClass lhs = product_chow(s, tminus, x, y);
      InertiaChowClass rhs = scale_class(product_chow(s, tstarplus, x, y), sign);
      if (!(lhs == rhs)) ++bad;
    }
  }
  c.require(bad == 0, "sign law fails on " + std::to_string(bad) + " basis pairs");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string description;
    double budget_s;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "weight (1,3,3) K-theory tables: orbifold, virtual, cotangent-twisted", 1.0, criterion1},
      {2, "weight (1,3,3) Chow tables: virtual (t, t^2, t), cotangent (-t, -t^2, t)", 1.0,
       criterion2},
      {3, "root-of-unity rescaling intertwines the virtual and cotangent Chow products", 1.0,
       criterion3},
      {4, "weight (1,2) localized K-theory table and its Chern character", 1.0, criterion4},
      {5, "inertial-pair axiom suite: eight pairs on six stacks", 10.0, criterion5},
      {6, "brute-force associativity over complete bases, K and Chow", 60.0, criterion6},
      {7, "inertial Chern character is a ring homomorphism; rank vanishes when age > 0", 30.0,
       criterion7},
      {8, "sign law between the tangent-minus and cotangent-plus Chow products", 1.0, criterion8},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > cr.budget_s) {
      check.failures.push_back("budget exceeded: " + std::to_string(elapsed) + "s > " +
                               std::to_string(cr.budget_s) + "s");
    }
    bool pass = check.failures.empty();
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", cr.number,
                cr.description.c_str(), elapsed);
    for (const std::string& f : check.failures) std::printf("       - %s\n", f.c_str());
  }
  return failures == 0 ? 0 : 1;
}
