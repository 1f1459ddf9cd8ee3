#include "dirlim/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dirlim {

namespace {

std::string dup_check(const std::vector<std::string>& names, const char* kind) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  auto it = std::adjacent_find(sorted.begin(), sorted.end());
  if (it != sorted.end()) {
    std::ostringstream os;
    os << "duplicate " << kind << " name: " << *it;
    return os.str();
  }
  return {};
}

}  // namespace

FiniteCategory FiniteCategory::validated(
    std::vector<std::string> objects, std::vector<MorphismDecl> morphisms,
    const std::map<std::pair<MorId, MorId>, MorId>& compose) {
  FiniteCategory c;
  c.objects_ = std::move(objects);
  c.morphisms_ = std::move(morphisms);

  if (auto msg = dup_check(c.objects_, "object"); !msg.empty()) throw ValidationError(msg);
  {
    std::vector<std::string> mnames;
    mnames.reserve(c.morphisms_.size());
    for (const auto& m : c.morphisms_) mnames.push_back(m.name);
    if (auto msg = dup_check(mnames, "morphism"); !msg.empty()) throw ValidationError(msg);
  }

  const std::uint32_t no = c.n_objects();
  const std::uint32_t nm = c.n_morphisms();
  for (const auto& m : c.morphisms_) {
    if (m.dom >= no || m.cod >= no)
      throw ValidationError("morphism " + m.name + " has an out-of-range endpoint");
  }

  c.hom_.assign(static_cast<std::size_t>(no) * no, {});
  c.from_.assign(no, {});
  c.into_.assign(no, {});
  for (MorId a = 0; a < nm; ++a) {
    c.hom_[c.dom(a) * no + c.cod(a)].push_back(a);
    c.from_[c.dom(a)].push_back(a);
    c.into_[c.cod(a)].push_back(a);
  }

  // Composition: total on composable pairs, nothing else, tags consistent.
  c.compose_.assign(static_cast<std::size_t>(nm) * nm, kNone);
  for (const auto& [ab, r] : compose) {
    auto [a, b] = ab;
    if (a >= nm || b >= nm || r >= nm)
      throw ValidationError("composition entry references an unknown morphism");
    if (c.dom(a) != c.cod(b))
      throw ValidationError("composition entry for non-composable pair (" +
                            c.morphism_name(a) + ", " + c.morphism_name(b) + ")");
    if (c.dom(r) != c.dom(b) || c.cod(r) != c.cod(a))
      throw ValidationError("composite of (" + c.morphism_name(a) + ", " +
                            c.morphism_name(b) + ") has mismatched endpoints");
    c.compose_[a * nm + b] = r;
  }
  for (MorId a = 0; a < nm; ++a)
    for (MorId b = 0; b < nm; ++b)
      if (c.dom(a) == c.cod(b) && c.compose_[a * nm + b] == kNone)
        throw ValidationError("missing composite for (" + c.morphism_name(a) +
                              ", " + c.morphism_name(b) + ")");

  // Identities: for each object, the unique two-sided neutral endomorphism.
  c.identity_.assign(no, kNone);
  for (ObjId e = 0; e < no; ++e) {
    for (MorId cand : c.hom_[e * no + e]) {
      bool neutral = true;
      for (MorId f : c.from_[e])
        if (c.compose_[f * nm + cand] != f) { neutral = false; break; }
      if (neutral)
        for (MorId g : c.into_[e])
          if (c.compose_[cand * nm + g] != g) { neutral = false; break; }
      if (neutral) { c.identity_[e] = cand; break; }
    }
    if (c.identity_[e] == kNone)
      throw ValidationError("object " + c.objects_[e] + " has no identity morphism");
  }

  // Associativity on all composable triples.
  for (MorId a = 0; a < nm; ++a)
    for (MorId b : c.into_[c.dom(a)]) {
      const MorId ab = c.compose_[a * nm + b];
      for (MorId d : c.into_[c.dom(b)]) {
        const MorId bd = c.compose_[b * nm + d];
        if (c.compose_[ab * nm + d] != c.compose_[a * nm + bd])
          throw ValidationError("associativity fails at (" + c.morphism_name(a) +
                                ", " + c.morphism_name(b) + ", " + c.morphism_name(d) + ")");
      }
    }

  return c;
}

std::optional<ObjId> FiniteCategory::object_index(const std::string& name) const {
  for (ObjId e = 0; e < n_objects(); ++e)
    if (objects_[e] == name) return e;
  return std::nullopt;
}

std::optional<MorId> FiniteCategory::morphism_index(const std::string& name) const {
  for (MorId a = 0; a < n_morphisms(); ++a)
    if (morphisms_[a].name == name) return a;
  return std::nullopt;
}

Poset Poset::validated(std::vector<std::string> elements,
                       std::vector<std::vector<bool>> leq) {
  Poset p;
  p.elements_ = std::move(elements);
  p.leq_ = std::move(leq);
  const std::uint32_t n = p.n();

  if (auto msg = dup_check(p.elements_, "element"); !msg.empty()) throw ValidationError(msg);
  if (p.leq_.size() != n) throw ValidationError("leq matrix has wrong number of rows");
  for (const auto& row : p.leq_)
    if (row.size() != n) throw ValidationError("leq matrix has a row of wrong length");

  for (ElemId x = 0; x < n; ++x)
    if (!p.leq_[x][x]) throw ValidationError("leq not reflexive at " + p.elements_[x]);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (x != y && p.leq_[x][y] && p.leq_[y][x])
        throw ValidationError("leq not antisymmetric on {" + p.elements_[x] + ", " +
                              p.elements_[y] + "}");
      if (p.leq_[x][y])
        for (ElemId z = 0; z < n; ++z)
          if (p.leq_[y][z] && !p.leq_[x][z])
            throw ValidationError("leq not transitive via " + p.elements_[y]);
    }
  return p;
}

std::vector<ElemId> Poset::down(ElemId x) const {
  std::vector<ElemId> r;
  for (ElemId y = 0; y < n(); ++y)
    if (leq_[y][x]) r.push_back(y);
  return r;
}

std::vector<ElemId> Poset::up(ElemId x) const {
  std::vector<ElemId> r;
  for (ElemId y = 0; y < n(); ++y)
    if (leq_[x][y]) r.push_back(y);
  return r;
}

std::vector<ElemId> Poset::minimal_elements() const {
  std::vector<ElemId> r;
  for (ElemId x = 0; x < n(); ++x) {
    bool min = true;
    for (ElemId y = 0; y < n(); ++y)
      if (y != x && leq_[y][x]) { min = false; break; }
    if (min) r.push_back(x);
  }
  return r;
}

std::vector<ElemId> Poset::maximal_elements() const {
  std::vector<ElemId> r;
  for (ElemId x = 0; x < n(); ++x) {
    bool max = true;
    for (ElemId y = 0; y < n(); ++y)
      if (y != x && leq_[x][y]) { max = false; break; }
    if (max) r.push_back(x);
  }
  return r;
}

bool Poset::is_directed() const {
  if (n() == 0) return false;
  for (ElemId x = 0; x < n(); ++x)
    for (ElemId y = 0; y < n(); ++y) {
      bool bounded = false;
      for (ElemId z = 0; z < n(); ++z)
        if (leq_[x][z] && leq_[y][z]) { bounded = true; break; }
      if (!bounded) return false;
    }
  return true;
}

std::optional<ElemId> Poset::greatest_element() const {
  for (ElemId x = 0; x < n(); ++x) {
    bool top = true;
    for (ElemId y = 0; y < n(); ++y)
      if (!leq_[y][x]) { top = false; break; }
    if (top) return x;
  }
  return std::nullopt;
}

std::vector<std::pair<ElemId, ElemId>> Poset::covers() const {
  std::vector<std::pair<ElemId, ElemId>> r;
  for (ElemId x = 0; x < n(); ++x)
    for (ElemId y = 0; y < n(); ++y) {
      if (x == y || !leq_[x][y]) continue;
      bool cover = true;
      for (ElemId z = 0; z < n(); ++z)
        if (z != x && z != y && leq_[x][z] && leq_[z][y]) { cover = false; break; }
      if (cover) r.emplace_back(x, y);
    }
  return r;
}

std::optional<ElemId> Poset::index_of(const std::string& name) const {
  for (ElemId x = 0; x < n(); ++x)
    if (elements_[x] == name) return x;
  return std::nullopt;
}

FiniteMonoid FiniteMonoid::validated(std::vector<std::string> elements,
                                     std::vector<std::vector<ElemId>> table,
                                     ElemId one) {
  FiniteMonoid m;
  m.elements_ = std::move(elements);
  m.n_ = static_cast<std::uint32_t>(m.elements_.size());
  m.one_ = one;

  if (m.n_ == 0) throw ValidationError("a monoid needs at least its identity element");
  if (auto msg = dup_check(m.elements_, "element"); !msg.empty()) throw ValidationError(msg);
  if (one >= m.n_) throw ValidationError("identity index out of range");
  if (table.size() != m.n_) throw ValidationError("multiplication table has wrong number of rows");

  m.table_.assign(static_cast<std::size_t>(m.n_) * m.n_, 0);
  for (ElemId a = 0; a < m.n_; ++a) {
    if (table[a].size() != m.n_)
      throw ValidationError("multiplication table has a row of wrong length");
    for (ElemId b = 0; b < m.n_; ++b) {
      if (table[a][b] >= m.n_) throw ValidationError("table entry out of range");
      m.table_[a * m.n_ + b] = table[a][b];
    }
  }

  for (ElemId a = 0; a < m.n_; ++a)
    if (m.mult(one, a) != a || m.mult(a, one) != a)
      throw ValidationError("designated identity is not neutral at " + m.elements_[a]);
  for (ElemId a = 0; a < m.n_; ++a)
    for (ElemId b = 0; b < m.n_; ++b)
      for (ElemId c = 0; c < m.n_; ++c)
        if (m.mult(m.mult(a, b), c) != m.mult(a, m.mult(b, c)))
          throw ValidationError("associativity fails at (" + m.elements_[a] + ", " +
                                m.elements_[b] + ", " + m.elements_[c] + ")");
  return m;
}

FiniteMonoid FiniteMonoid::opposite() const {
  std::vector<std::vector<ElemId>> t(n_, std::vector<ElemId>(n_));
  for (ElemId a = 0; a < n_; ++a)
    for (ElemId b = 0; b < n_; ++b) t[a][b] = mult(b, a);
  return validated(elements_, std::move(t), one_);
}

bool FiniteMonoid::is_group() const {
  for (ElemId a = 0; a < n_; ++a) {
    bool has_inverse = false;
    for (ElemId b = 0; b < n_; ++b)
      if (mult(a, b) == one_ && mult(b, a) == one_) { has_inverse = true; break; }
    if (!has_inverse) return false;
  }
  return true;
}

std::vector<ElemId> FiniteMonoid::generated_submonoid(const std::vector<ElemId>& gens) const {
  std::vector<bool> in(n_, false);
  std::vector<ElemId> work;
  auto add = [&](ElemId x) {
    if (!in[x]) { in[x] = true; work.push_back(x); }
  };
  add(one_);
  for (ElemId g : gens) add(g);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(mult(work[i], work[j]));
      add(mult(work[j], work[i]));
    }
  std::vector<ElemId> r;
  for (ElemId x = 0; x < n_; ++x)
    if (in[x]) r.push_back(x);
  return r;
}

std::vector<ElemId> FiniteMonoid::left_ideal(ElemId a) const {
  std::vector<bool> in(n_, false);
  for (ElemId u = 0; u < n_; ++u) in[mult(u, a)] = true;
  std::vector<ElemId> r;
  for (ElemId x = 0; x < n_; ++x)
    if (in[x]) r.push_back(x);
  return r;
}

std::optional<ElemId> FiniteMonoid::index_of(const std::string& name) const {
  for (ElemId a = 0; a < n_; ++a)
    if (elements_[a] == name) return a;
  return std::nullopt;
}

FiniteGroup FiniteGroup::validated(FiniteMonoid m) {
  FiniteGroup g;
  g.inverse_.assign(m.n(), kNone);
  for (ElemId a = 0; a < m.n(); ++a) {
    for (ElemId b = 0; b < m.n(); ++b)
      if (m.mult(a, b) == m.one() && m.mult(b, a) == m.one()) { g.inverse_[a] = b; break; }
    if (g.inverse_[a] == kNone)
      throw ValidationError("element " + m.name(a) + " has no inverse");
  }
  g.m_ = std::move(m);
  return g;
}

PreorderQuotient preorder_quotient(const FiniteCategory& cat) {
  const std::uint32_t no = cat.n_objects();
  // hom existence is already reflexive and transitive.
  std::vector<ElemId> class_of(no, kNone);
  std::vector<ObjId> reps;
  for (ObjId e = 0; e < no; ++e) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      ObjId r = reps[k];
      if (!cat.hom(e, r).empty() && !cat.hom(r, e).empty()) {
        class_of[e] = static_cast<ElemId>(k);
        break;
      }
    }
    if (class_of[e] == kNone) {
      class_of[e] = static_cast<ElemId>(reps.size());
      reps.push_back(e);
    }
  }

  const std::uint32_t k = static_cast<std::uint32_t>(reps.size());
  std::vector<std::string> names;
  names.reserve(k);
  for (ObjId r : reps) names.push_back(cat.object_name(r));
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      leq[i][j] = !cat.hom(reps[i], reps[j]).empty();

  PreorderQuotient q{Poset::validated(std::move(names), std::move(leq)), std::move(class_of)};
  return q;
}

FiniteCategory poset_to_category(const Poset& p) {
  std::vector<std::string> objects = p.names();
  std::vector<MorphismDecl> morphisms;
  std::map<std::pair<ObjId, ObjId>, MorId> arrow;
  for (ElemId e = 0; e < p.n(); ++e)
    for (ElemId f = 0; f < p.n(); ++f)
      if (p.leq(e, f)) {
        arrow[{e, f}] = static_cast<MorId>(morphisms.size());
        morphisms.push_back({p.name(e) + "<=" + p.name(f), e, f});
      }
  std::map<std::pair<MorId, MorId>, MorId> compose;
  for (const auto& [ef, m1] : arrow)
    for (const auto& [fg, m2] : arrow)
      if (ef.second == fg.first) compose[{m2, m1}] = arrow.at({ef.first, fg.second});
  return FiniteCategory::validated(std::move(objects), std::move(morphisms), compose);
}

FiniteCategory monoid_to_category(const FiniteMonoid& m) {
  std::vector<MorphismDecl> morphisms;
  morphisms.reserve(m.n());
  for (ElemId a = 0; a < m.n(); ++a) morphisms.push_back({m.name(a), 0, 0});
  std::map<std::pair<MorId, MorId>, MorId> compose;
  for (ElemId a = 0; a < m.n(); ++a)
    for (ElemId b = 0; b < m.n(); ++b) compose[{a, b}] = m.mult(a, b);
  return FiniteCategory::validated({"*"}, std::move(morphisms), compose);
}

}  // namespace dirlim
