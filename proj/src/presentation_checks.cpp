#include "bhopf/algebra.hpp"
#include "bhopf/braid.hpp"
#include "bhopf/presentation.hpp"

#include <set>

namespace bhopf {

namespace {

// Every normal form reachable from w, over all redex positions and all rules
// with a matching left side.
class ReductionExplorer {
 public:
  explicit ReductionExplorer(const Presentation& p) : p_(p) {}

  const std::set<Element>& normal_forms(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    std::set<Element> out;
    bool reducible = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      for (const auto& rule : p_.rules) {
        if (rule.lhs[0] != w[k] || rule.lhs[1] != w[k + 1]) continue;
        reducible = true;
        std::set<Element> partial{Element()};
        for (const auto& [rw, c] : rule.rhs.terms()) {
          Word next(w.begin(), w.begin() + static_cast<long>(k));
          next.insert(next.end(), rw.begin(), rw.end());
          next.insert(next.end(), w.begin() + static_cast<long>(k + 2), w.end());
          std::set<Element> combined;
          for (const auto& choice : normal_forms(next))
            for (const auto& acc : partial) {
              Element e = acc;
              e.add(choice, c);
              combined.insert(std::move(e));
            }
          partial = std::move(combined);
        }
        out.insert(partial.begin(), partial.end());
      }
    if (!reducible) out.insert(Element(w));
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  const Presentation& p_;
  std::map<Word, std::set<Element>> memo_;
};

std::vector<Word> all_words(std::size_t n, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t g = 0; g < n; ++g) {
        Word v = w;
        v.push_back(static_cast<Gen>(g));
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

Element word_difference(const Rule& r) {
  Element diff(r.lhs);
  diff -= r.rhs;
  return diff;
}

std::string rule_text(const Presentation& p, const Rule& r) {
  return format_word(p, r.lhs) + " = " + format(p, r.rhs);
}

}  // namespace

Report check_confluence(const Presentation& p) {
  Report report{"confluence", Status::pass, 3, std::nullopt, ""};
  ReductionExplorer explorer(p);
  for (std::size_t length : {2u, 3u})
    for (const auto& w : all_words(p.size(), length)) {
      const auto& forms = explorer.normal_forms(w);
      if (forms.size() <= 1) continue;
      auto it = forms.begin();
      const Element first = *it++;
      report.status = Status::fail;
      report.witness = Witness{format_word(p, w), format(p, first), format(p, *it),
                               std::to_string(forms.size()) + " distinct normal forms"};
      report.message = "word '" + format_word(p, w) + "' has more than one normal form";
      return report;
    }
  return report;
}

Report check_quotient_compatibility(const Presentation& p, int max_degree) {
  Report report{"quotient", Status::pass, max_degree, std::nullopt, ""};
  const Algebra alg(p);
  auto fail = [&](const Rule& r, const std::string& sub, std::string lhs, std::string rhs, std::string note) {
    report.status = Status::fail;
    report.witness = Witness{rule_text(p, r), std::move(lhs), std::move(rhs), std::move(note)};
    report.message = "sub-check (" + sub + ") fails for rule " + rule_text(p, r);
    return report;
  };
  for (const auto& r : p.rules) {
    const Element diff = word_difference(r);

    // (a) coideal
    const Tensor d_lhs = comul(alg, r.lhs);
    Tensor d_rhs(2);
    for (const auto& [w, c] : r.rhs.terms()) d_rhs.add(comul(alg, w), c);
    const Tensor defect = d_lhs - d_rhs;
    if (!defect.is_zero())
      return fail(r, "a", format(p, d_lhs), format(p, d_rhs), "sub-check a: comultiplication defect " + format(p, defect));

    // (b) counit
    const TPoly e_lhs = alg.counit(Element(r.lhs));
    const TPoly e_rhs = r.rhs.coeff(Word{});
    if (!(e_lhs == e_rhs))
      return fail(r, "b", to_string(e_lhs), to_string(e_rhs), "sub-check b: counit differs");

    // (c) braiding stability
    for (const auto& m : alg.monomials(max_degree)) {
      Tensor right(2);
      Tensor left(2);
      for (const auto& [w, c] : diff.terms()) {
        right.add(outer(alg.normal_form(w), Element(m)), c * TPoly(alg.braid_coeff(m, w)));
        left.add(outer(Element(m), alg.normal_form(w)), c * TPoly(alg.braid_coeff(w, m)));
      }
      if (!right.is_zero())
        return fail(r, "c", format(p, right), "0",
                    "sub-check c: beta(" + format_word(p, m) + " ⊗ (lhs - rhs)) is not in the ideal");
      if (!left.is_zero())
        return fail(r, "c", format(p, left), "0",
                    "sub-check c: beta((lhs - rhs) ⊗ " + format_word(p, m) + ") is not in the ideal");
    }

    // (d) antipode
    const Element s_lhs = alg.antipode(r.lhs);
    Element s_rhs;
    for (const auto& [w, c] : r.rhs.terms()) s_rhs.add(alg.antipode(w), c);
    if (!(s_lhs == s_rhs))
      return fail(r, "d", format(p, s_lhs), format(p, s_rhs), "sub-check d: antipode differs");
  }
  return report;
}

}  // namespace bhopf
