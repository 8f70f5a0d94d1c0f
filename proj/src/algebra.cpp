#include "bhopf/algebra.hpp"

#include <algorithm>

namespace bhopf {

Algebra::Algebra(Presentation p) : p_(std::move(p)) {
  const std::size_t n = p_.size();
  rule_at_.assign(n, std::vector<int>(n, -1));
  for (std::size_t r = 0; r < p_.rules.size(); ++r) {
    const auto& lhs = p_.rules[r].lhs;
    int& slot = rule_at_[lhs[0]][lhs[1]];
    if (slot < 0) slot = static_cast<int>(r);
  }
}

Element Algebra::normal_form(const Word& w) const {
  return normal_memo_.get(w, [&] {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const int r = rule_at_[w[k]][w[k + 1]];
      if (r < 0) continue;
      Element out;
      for (const auto& [rw, c] : p_.rules[static_cast<std::size_t>(r)].rhs.terms()) {
        Word next(w.begin(), w.begin() + static_cast<long>(k));
        next.insert(next.end(), rw.begin(), rw.end());
        next.insert(next.end(), w.begin() + static_cast<long>(k + 2), w.end());
        out.add(normal_form(next), c);
      }
      return out;
    }
    return Element(w);
  });
}

Element Algebra::normalize(const Element& e) const {
  Element out;
  for (const auto& [w, c] : e.terms()) out.add(normal_form(w), c);
  return out;
}

Element Algebra::mul(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(w);
}

Element Algebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add(mul(wa, wb), ca * cb);
  return out;
}

Element Algebra::involution(const Word& w) const {
  Word r(w.rbegin(), w.rend());
  for (auto& g : r) g = p_.star[g];
  return normal_form(r);
}

Element Algebra::involution(const Element& a) const {
  Element out;
  for (const auto& [w, c] : a.terms()) out.add(involution(w), c.conj());
  return out;
}

Element Algebra::antipode(const Word& w) const {
  if (w.empty()) return unit();
  return antipode_memo_.get(w, [&] {
    const Element head = normalize(p_.antipode[w[0]]);
    if (w.size() == 1) return head;
    const Element tail = antipode(Word(w.begin() + 1, w.end()));
    Element out;
    for (const auto& [a, ca] : head.terms())
      for (const auto& [b, cb] : tail.terms())
        out.add(mul(b, a), ca * cb * TPoly(braid_coeff(a, b)));
    return out;
  });
}

Element Algebra::antipode(const Element& a) const {
  Element out;
  for (const auto& [w, c] : a.terms()) out.add(antipode(w), c);
  return out;
}

const std::vector<Word>& Algebra::monomials(int max_degree) const {
  std::lock_guard<std::mutex> lock(monomial_mutex_);
  auto it = monomials_.find(max_degree);
  if (it != monomials_.end()) return it->second;
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t g = 0; g < p_.size(); ++g) {
        if (!w.empty() && rule_at_[w.back()][g] >= 0) continue;
        Word v = w;
        v.push_back(static_cast<Gen>(g));
        next.push_back(std::move(v));
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return monomials_.emplace(max_degree, std::move(out)).first->second;
}

unsigned Algebra::degree_grade(const Word& w) const {
  unsigned g = 0;
  for (Gen a : w) g += p_.grade[a];
  return g;
}

Scalar Algebra::braid_coeff(const Word& m, const Word& n, bool inverse) const {
  if (p_.braiding == BraidingKind::graded_sign) {
    const unsigned e = degree_grade(m) * degree_grade(n);
    return Scalar(e % 2 == 0 ? 1 : -1);
  }
  Scalar c(1);
  if (!inverse) {
    for (Gen a : m)
      for (Gen b : n) c *= p_.braid_table[a][b];
    return c;
  }
  for (Gen a : m)
    for (Gen b : n) c *= p_.braid_table[b][a];
  return c.inverse();
}

bool Algebra::braiding_is_symmetric() const {
  for (std::size_t a = 0; a < p_.size(); ++a)
    for (std::size_t b = 0; b < p_.size(); ++b) {
      const Word wa{static_cast<Gen>(a)};
      const Word wb{static_cast<Gen>(b)};
      if (!(braid_coeff(wa, wb) * braid_coeff(wb, wa)).is_one()) return false;
    }
  return true;
}

}  // namespace bhopf
