#include "pillowcase/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

#include "pillowcase/errors.hpp"

namespace pillowcase {

AbelianGroup::AbelianGroup(std::vector<long long> invariant_factors)
    : moduli_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 1) throw InvalidInput("invariant factor must be >= 1");
    if (i + 1 < moduli_.size() && moduli_[i + 1] % moduli_[i] != 0)
      throw InvalidInput("invariant factors must form a divisibility chain");
  }
  // canonical form drops factors equal to 1
  std::erase(moduli_, 1);
  order_ = 1;
  for (long long m : moduli_) order_ *= m;
}

GroupElement AbelianGroup::reduce(GroupElement x) const {
  if (x.size() != rank()) throw InvalidInput("element has wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] %= moduli_[i];
    if (x[i] < 0) x[i] += moduli_[i];
  }
  return x;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  GroupElement r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = ((a[i] - b[i]) % moduli_[i] + moduli_[i]) % moduli_[i];
  return r;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const { return sub(zero(), a); }

GroupElement AbelianGroup::scalar_mul(long long n, const GroupElement& a) const {
  GroupElement r(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    long long v = (n % moduli_[i]) * (a[i] % moduli_[i]) % moduli_[i];
    r[i] = (v + moduli_[i]) % moduli_[i];
  }
  return r;
}

bool AbelianGroup::is_zero(const GroupElement& a) const {
  return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; });
}

GroupElement AbelianGroup::generator(std::size_t i) const {
  GroupElement e = zero();
  e[i] = 1;
  return e;
}

long long AbelianGroup::index_of(const GroupElement& a) const {
  long long idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * moduli_[i] + a[i];
  return idx;
}

GroupElement AbelianGroup::element_at(long long index) const {
  GroupElement a(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    a[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return a;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (long long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string AbelianGroup::element_str(const GroupElement& a) const {
  if (rank() == 0) return "0";
  if (rank() == 1) return std::to_string(a[0]);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

long long element_order(const AbelianGroup& G, const GroupElement& x) {
  long long n = 1;
  for (std::size_t i = 0; i < G.rank(); ++i) {
    long long m = G.moduli()[i];
    long long oi = m / std::gcd(m, x[i]);
    n = std::lcm(n, oi);
  }
  return n;
}

namespace {

// Subgroup order by closure; works for |G| up to the graph bounds.
long long subgroup_order(const AbelianGroup& G, const std::vector<GroupElement>& gens) {
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::vector<GroupElement> queue{G.zero()};
  seen[G.index_of(G.zero())] = 1;
  long long count = 1;
  while (!queue.empty()) {
    GroupElement x = queue.back();
    queue.pop_back();
    for (const GroupElement& g : gens) {
      GroupElement y = G.add(x, g);
      long long idx = G.index_of(y);
      if (!seen[idx]) {
        seen[idx] = 1;
        ++count;
        queue.push_back(std::move(y));
      }
    }
  }
  return count;
}

}  // namespace

bool generates(const AbelianGroup& G, const std::vector<GroupElement>& gens) {
  return subgroup_order(G, gens) == G.order();
}

Turn Character::value(const AbelianGroup& G, const GroupElement& g) const {
  Frac acc = Frac::integer(0);
  for (std::size_t i = 0; i < dual.size(); ++i)
    acc = acc + Frac(dual[i] * g[i], G.moduli()[i]);
  return Turn::of(acc);
}

bool Character::is_trivial() const {
  return std::all_of(dual.begin(), dual.end(), [](long long a) { return a == 0; });
}

Character Character::conj(const AbelianGroup& G) const {
  Character c;
  c.dual.resize(dual.size());
  for (std::size_t i = 0; i < dual.size(); ++i)
    c.dual[i] = (G.moduli()[i] - dual[i]) % G.moduli()[i];
  return c;
}

std::string Character::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dual.size(); ++i) os << (i ? "," : "") << dual[i];
  os << "]";
  return os.str();
}

std::vector<Character> enumerate_characters(const AbelianGroup& G) {
  std::vector<Character> out;
  out.reserve(G.order());
  for (long long i = 0; i < G.order(); ++i) out.push_back(Character{G.element_at(i)});
  return out;
}

GroupElement GroupAutomorphism::apply(const AbelianGroup& G, const GroupElement& x) const {
  GroupElement y = G.zero();
  for (std::size_t i = 0; i < images.size(); ++i)
    y = G.add(y, G.scalar_mul(x[i], images[i]));
  return y;
}

GroupAutomorphism GroupAutomorphism::compose(const AbelianGroup& G,
                                             const GroupAutomorphism& inner) const {
  GroupAutomorphism out;
  out.images.reserve(images.size());
  for (const GroupElement& img : inner.images) out.images.push_back(apply(G, img));
  return out;
}

GroupAutomorphism GroupAutomorphism::inverse(const AbelianGroup& G) const {
  // invert the induced permutation, then read off generator preimages
  std::vector<long long> perm(static_cast<std::size_t>(G.order()));
  for (long long i = 0; i < G.order(); ++i)
    perm[static_cast<std::size_t>(G.index_of(apply(G, G.element_at(i))))] = i;
  GroupAutomorphism inv;
  for (std::size_t i = 0; i < G.rank(); ++i)
    inv.images.push_back(G.element_at(perm[static_cast<std::size_t>(G.index_of(G.generator(i)))]));
  return inv;
}

bool GroupAutomorphism::is_identity(const AbelianGroup& G) const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != G.generator(i)) return false;
  return true;
}

std::string GroupAutomorphism::str(const AbelianGroup& G) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images.size(); ++i)
    os << (i ? "," : "") << "e" << i + 1 << "->" << G.element_str(images[i]);
  return os.str();
}

std::vector<GroupAutomorphism> enumerate_automorphisms(const AbelianGroup& G, long long bound) {
  if (G.order() > bound)
    throw CapabilityError("automorphism enumeration refused for |G| = " +
                          std::to_string(G.order()) + " > " + std::to_string(bound) +
                          "; use the Remark-2 sufficient tests instead");
  std::vector<GroupAutomorphism> out;
  if (G.is_trivial()) {
    out.push_back(GroupAutomorphism{});
    return out;
  }
  const auto elems = G.elements();
  // candidates per position: elements killed by m_i
  std::vector<std::vector<GroupElement>> candidates(G.rank());
  for (std::size_t i = 0; i < G.rank(); ++i)
    for (const GroupElement& x : elems)
      if (G.is_zero(G.scalar_mul(G.moduli()[i], x))) candidates[i].push_back(x);

  std::vector<GroupElement> chosen;
  long long partial_order = 1;
  constexpr long long kMaxResults = 2'000'000;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == G.rank()) {
      out.push_back(GroupAutomorphism{chosen});
      if (static_cast<long long>(out.size()) > kMaxResults)
        throw CapabilityError("automorphism group too large to enumerate");
      return;
    }
    for (const GroupElement& c : candidates[i]) {
      chosen.push_back(c);
      // injectivity of the partial map on <e_1..e_i>
      if (subgroup_order(G, chosen) == partial_order * G.moduli()[i]) {
        long long save = partial_order;
        partial_order *= G.moduli()[i];
        self(self, i + 1);
        partial_order = save;
      }
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Character compose_with_automorphism(const AbelianGroup& G, const Character& chi,
                                    const GroupAutomorphism& psi) {
  Character out;
  out.dual.resize(G.rank());
  for (std::size_t i = 0; i < G.rank(); ++i) {
    Turn t = chi.value(G, psi.images[i]);
    // chi(psi(e_i)) = a_i / m_i for some integer a_i since m_i kills psi(e_i)
    long long m = G.moduli()[i];
    if (m % t.order() != 0) throw ConsistencyError("character-automorphism composition failed");
    out.dual[i] = t.value.num * (m / t.value.den) % m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form over the integers.

namespace snf {

struct Decomposition {
  std::vector<std::vector<long long>> U, V;  // U * A * V = D
  std::vector<std::vector<long long>> D;
};

std::vector<std::vector<long long>> identity(std::size_t n) {
  std::vector<std::vector<long long>> I(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

Decomposition smith(std::vector<std::vector<long long>> A) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  Decomposition d;
  d.U = identity(m);
  d.V = identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(A[i], A[j]);
    std::swap(d.U[i], d.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(A[r][i], A[r][j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(d.V[r][i], d.V[r][j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t c = 0; c < n; ++c) A[dst][c] += f * A[src][c];
    for (std::size_t c = 0; c < m; ++c) d.U[dst][c] += f * d.U[src][c];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t r = 0; r < m; ++r) A[r][dst] += f * A[r][src];
    for (std::size_t r = 0; r < n; ++r) d.V[r][dst] += f * d.V[r][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& v : A[i]) v = -v;
    for (auto& v : d.U[i]) v = -v;
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // find smallest nonzero pivot in the remaining block
    std::size_t pi = t, pj = t;
    long long best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        long long v = std::llabs(A[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    if (A[t][t] < 0) negate_row(t);

    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i)
      if (A[i][t] % A[t][t] != 0) clean = true;
    // eliminate below and to the right; restart if a remainder appears
    bool again = false;
    for (std::size_t i = t + 1; i < m; ++i) {
      long long q = A[i][t] / A[t][t];
      if (q != 0) add_row(i, t, -q);
      if (A[i][t] != 0) again = true;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      long long q = A[t][j] / A[t][t];
      if (q != 0) add_col(j, t, -q);
      if (A[t][j] != 0) again = true;
    }
    if (again) continue;  // smaller pivot now exists in the block
    // divisibility: pivot must divide the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n && divides; ++j)
        if (A[i][j] % A[t][t] != 0) {
          add_row(t, i, 1);
          divides = false;
        }
    if (!divides) continue;
    (void)clean;
    ++t;
  }
  d.D = std::move(A);
  return d;
}

}  // namespace snf

CanonicalSubgroup canonicalize_subgroup(const std::vector<long long>& ambient_moduli,
                                        const std::vector<std::vector<long long>>& generators) {
  const std::size_t k = ambient_moduli.size();
  if (k == 0) {
    for (const auto& g : generators)
      if (!g.empty())
        throw InvalidInput("nonempty generators over empty ambient moduli");
    CanonicalSubgroup out;
    out.group = AbelianGroup({});
    out.generators.assign(generators.size(), GroupElement{});
    return out;
  }
  for (long long m : ambient_moduli)
    if (m < 1) throw InvalidInput("ambient modulus must be >= 1");
  for (const auto& g : generators)
    if (g.size() != k) throw InvalidInput("generator has wrong length for ambient moduli");

  const std::size_t r = generators.size();
  // columns: generator lifts, then the ambient relations m_i e_i
  std::vector<std::vector<long long>> M(k, std::vector<long long>(r + k, 0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      long long v = generators[j][i] % ambient_moduli[i];
      if (v < 0) v += ambient_moduli[i];
      M[i][j] = v;
    }
  for (std::size_t i = 0; i < k; ++i) M[i][r + i] = ambient_moduli[i];

  auto dec = snf::smith(M);
  // lattice basis B = U^{-1} diag(d); we only need B^{-1} = diag(1/d) U
  std::vector<long long> dvals(k);
  for (std::size_t i = 0; i < k; ++i) {
    dvals[i] = dec.D[i][i];
    if (dvals[i] == 0) throw ConsistencyError("subgroup lattice lost full rank");
  }
  // X = B^{-1} diag(ambient):  X[i][j] = U[i][j] * ambient[j] / d[i]
  std::vector<std::vector<long long>> X(k, std::vector<long long>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long long num = dec.U[i][j] * ambient_moduli[j];
      if (num % dvals[i] != 0) throw ConsistencyError("ambient relations not in lattice");
      X[i][j] = num / dvals[i];
    }
  auto dec2 = snf::smith(X);
  std::vector<long long> factors;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    long long e = std::llabs(dec2.D[i][i]);
    if (e == 0) throw ConsistencyError("quotient lattice degenerate");
    if (e > 1) {
      factors.push_back(e);
      kept.push_back(i);
    }
  }
  CanonicalSubgroup out;
  out.group = AbelianGroup(factors);

  auto recoordinate = [&](const std::vector<long long>& x) {
    // y = diag(1/d) U x ; z = U2 y ; keep positions with factor > 1
    std::vector<long long> y(k);
    for (std::size_t i = 0; i < k; ++i) {
      long long acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += dec.U[i][j] * x[j];
      if (acc % dvals[i] != 0) throw InvalidInput("element not in the subgroup");
      y[i] = acc / dvals[i];
    }
    GroupElement z(factors.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
      long long acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc += dec2.U[kept[a]][j] * y[j];
      long long m = factors[a];
      z[a] = ((acc % m) + m) % m;
    }
    return z;
  };
  for (const auto& g : generators) out.generators.push_back(recoordinate(g));
  return out;
}

std::string BranchTuple::str(const AbelianGroup& G) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < 4; ++i) os << (i ? "," : "") << G.element_str(g[i]);
  os << ")";
  return os.str();
}

void BranchTuple::validate(const AbelianGroup& G) const {
  GroupElement s = G.zero();
  for (const auto& gi : g) {
    if (gi.size() != G.rank()) throw InvalidInput("branch element has wrong rank");
    s = G.add(s, gi);
  }
  if (!G.is_zero(s))
    throw InvalidInput("branch tuple does not sum to zero (g1+g2+g3+g4 != 0)");
  if (!generates(G, {g.begin(), g.end()}))
    throw InvalidInput("branch tuple does not generate the deck group (cover disconnected)");
}

std::vector<Turn> BranchTuple::turns(const AbelianGroup& G, const Character& chi) const {
  std::vector<Turn> out(4);
  for (std::size_t j = 0; j < 4; ++j) out[j] = chi.value(G, g[j]);
  return out;
}

namespace {

// integer combinations representing each group element over the branch tuple
std::vector<std::array<long long, 4>> tuple_combinations(const AbelianGroup& G,
                                                         const BranchTuple& tuple) {
  std::vector<std::array<long long, 4>> combo(static_cast<std::size_t>(G.order()),
                                              {-1, -1, -1, -1});
  std::vector<char> seen(static_cast<std::size_t>(G.order()), 0);
  std::queue<GroupElement> q;
  combo[G.index_of(G.zero())] = {0, 0, 0, 0};
  seen[G.index_of(G.zero())] = 1;
  q.push(G.zero());
  while (!q.empty()) {
    GroupElement x = q.front();
    q.pop();
    auto cx = combo[G.index_of(x)];
    for (std::size_t j = 0; j < 4; ++j) {
      GroupElement y = G.add(x, tuple[j]);
      long long idx = G.index_of(y);
      if (!seen[idx]) {
        seen[idx] = 1;
        auto cy = cx;
        cy[j] += 1;
        combo[idx] = cy;
        q.push(std::move(y));
      }
    }
  }
  for (char s : seen)
    if (!s) throw InvalidInput("branch tuple does not generate the deck group");
  return combo;
}

}  // namespace

Character character_from_turns(const AbelianGroup& G, const BranchTuple& tuple,
                               const std::array<Turn, 4>& turns) {
  auto combos = tuple_combinations(G, tuple);
  Character chi;
  chi.dual.resize(G.rank());
  for (std::size_t i = 0; i < G.rank(); ++i) {
    auto c = combos[G.index_of(G.generator(i))];
    Frac acc = Frac::integer(0);
    for (std::size_t j = 0; j < 4; ++j) acc = acc + turns[j].value * Frac::integer(c[j]);
    Turn t = Turn::of(acc);
    long long m = G.moduli()[i];
    if (m % t.order() != 0)
      throw InvalidInput("turns are inconsistent: forced value on generator e" +
                         std::to_string(i + 1) + " has denominator " +
                         std::to_string(t.order()) + " not dividing " + std::to_string(m));
    chi.dual[i] = t.value.num * (m / t.value.den) % m;
  }
  // verify; on failure name a violated relation derived from the combinations
  for (std::size_t j = 0; j < 4; ++j) {
    if (chi.value(G, tuple[j]) == turns[j]) continue;
    auto c = combos[G.index_of(tuple[j])];
    std::ostringstream os;
    os << "turns violate the relation g" << j + 1 << " = ";
    for (std::size_t a = 0; a < 4; ++a)
      if (c[a] > 0) os << c[a] << "*g" << a + 1 << " ";
    os << "(mod relations): ";
    Frac forced = Frac::integer(0);
    for (std::size_t a = 0; a < 4; ++a) forced = forced + turns[a].value * Frac::integer(c[a]);
    os << "forced turn " << Turn::of(forced).str() << " but got " << turns[j].str();
    throw InvalidInput(os.str());
  }
  return chi;
}

std::optional<Character> tangent_character(const AbelianGroup& G, const BranchTuple& tuple) {
  Turn half = Turn::of(1, 2);
  try {
    return character_from_turns(G, tuple, {half, half, half, half});
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

}  // namespace pillowcase
