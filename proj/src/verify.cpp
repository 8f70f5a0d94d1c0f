#include "bhopf/verify.hpp"

#include <json.hpp>

#include <sstream>

namespace bhopf {

bool is_hermitian(const std::vector<std::vector<Scalar>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) return false;
    for (std::size_t j = 0; j <= i; ++j)
      if (!(rows[j][i] == rows[i][j].conj())) return false;
  }
  return true;
}

HermitianMatrix::HermitianMatrix(std::vector<std::vector<Scalar>> rows) : rows_(std::move(rows)) {
  if (!is_hermitian(rows_)) throw std::invalid_argument("matrix is not hermitian");
}

Rational HermitianMatrix::quadratic_form(const std::vector<Scalar>& v) const {
  Scalar acc;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) acc += v[i].conj() * rows_[i][j] * v[j];
  return acc.re();
}

namespace {

using Rows = std::vector<std::vector<Scalar>>;

// Returns an empty vector when psd, otherwise a vector v with v* a v < 0.
std::vector<Scalar> negative_direction(const Rows& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  const Scalar& p = a[0][0];
  if (sgn(p.re()) < 0) {
    std::vector<Scalar> v(n);
    v[0] = Scalar(1);
    return v;
  }
  if (p.is_zero()) {
    for (std::size_t j = 1; j < n; ++j) {
      if (a[0][j].is_zero()) continue;
      // v = α e_0 + e_j: v* a v = -2 s |a_0j|^2 + a_jj < 0.
      const Rational s = (abs(a[j][j].re()) + 1) / a[0][j].norm();
      std::vector<Scalar> v(n);
      v[0] = -(Scalar(s) * a[0][j]);
      v[j] = Scalar(1);
      return v;
    }
    Rows sub(n - 1, std::vector<Scalar>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 1; j < n; ++j) sub[i - 1][j - 1] = a[i][j];
    auto w = negative_direction(sub);
    if (w.empty()) return {};
    w.insert(w.begin(), Scalar());
    return w;
  }
  const Scalar inv = p.inverse();
  Rows schur(n - 1, std::vector<Scalar>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) schur[i - 1][j - 1] = a[i][j] - a[i][0] * a[0][j] * inv;
  auto w = negative_direction(schur);
  if (w.empty()) return {};
  Scalar lead;
  for (std::size_t j = 1; j < n; ++j) lead += a[0][j] * w[j - 1];
  w.insert(w.begin(), -(lead * inv));
  return w;
}

}  // namespace

PsdResult psd_exact(const HermitianMatrix& g) {
  PsdResult out;
  auto v = negative_direction(g.rows());
  if (v.empty()) return out;
  for (const auto& c : v)
    if (!c.is_zero()) {
      const Scalar phase = c.conj();
      for (auto& x : v) x *= phase;
      break;
    }
  out.psd = false;
  out.value = g.quadratic_form(v);
  out.witness = std::move(v);
  return out;
}

namespace {

Element combination_of(const std::vector<Word>& basis, const std::vector<Scalar>& v) {
  Element e;
  for (std::size_t i = 0; i < basis.size(); ++i) e.add(basis[i], TPoly(v[i]));
  return e;
}

TPoly apply_functional(const LinearMap& f, const Element& e) { return f.value(Tensor::from_element(e)); }

void check_psi_hypotheses(const Algebra& alg, const std::map<Word, Scalar>& psi, const LinearMap& f, int degree) {
  const Presentation& p = alg.presentation();
  if (!f.value(Tuple{Word{}}).is_zero()) throw HypothesisError("psi(1) must be 0");
  for (const auto& m : alg.monomials(degree)) {
    const TPoly lhs = apply_functional(f, alg.involution(m));
    const TPoly rhs = f.value(Tuple{m}).conj();
    if (!(lhs == rhs))
      throw HypothesisError("psi is not hermitian: psi((" + format_word(p, m) + ")*) = " + to_string(lhs) +
                            " but conj(psi(" + format_word(p, m) + ")) = " + to_string(rhs));
  }
  for (const auto& [s, value] : psi)
    for (const auto& m : alg.monomials(degree)) {
      // (ψ ⊗ id) ∘ β (m ⊗ s) = m ψ(s) and (id ⊗ ψ) ∘ β (s ⊗ m) = ψ(s) m.
      const Tensor left = map_slots(braid_pair(alg, m, s), 0, 1, 0, [&](const Tuple& t) { return f.on_basis(t); });
      const Tensor right = map_slots(braid_pair(alg, s, m), 1, 1, 0, [&](const Tuple& t) { return f.on_basis(t); });
      const Tensor expected(1, Tuple{m}, TPoly(value));
      if (!(left == expected) || !(right == expected))
        throw HypothesisError("psi is not beta-invariant on " + format_word(p, m) + " and " + format_word(p, s));
    }
}

GramCheck gram_check(std::string label, std::vector<Word> basis, Rows gram) {
  if (!is_hermitian(gram)) throw HypothesisError(label + " is not hermitian");
  GramCheck out{std::move(label), std::move(basis), gram, {}};
  out.result = psd_exact(HermitianMatrix(std::move(gram)));
  return out;
}

Witness gram_witness(const Presentation& p, const GramCheck& g) {
  std::string note = g.label + " is not positive semidefinite";
  for (std::size_t i = 0; i < g.basis.size(); ++i)
    if (!g.result.witness[i].is_zero() && sgn(g.gram[i][i].re()) < 0) {
      note += "; diagonal entry at " + format_word(p, g.basis[i]) + " is " + to_string(g.gram[i][i]);
      break;
    }
  return Witness{"b = " + format(p, combination_of(g.basis, g.result.witness)),
                 "<b, b> = " + to_string(g.result.value), ">= 0", note};
}

}  // namespace

SchoenbergResult schoenberg_check(const Algebra& alg, const std::map<Word, Scalar>& psi, int max_degree,
                                  const std::vector<Rational>& samples) {
  const Presentation& p = alg.presentation();
  int key_degree = max_degree;
  for (const auto& [w, c] : psi) key_degree = std::max(key_degree, static_cast<int>(w.size()));
  const LinearMap f = monomial_functional(psi);
  check_psi_hypotheses(alg, psi, f, key_degree);

  const Deformation def(alg);
  const LinearMap& l = def.generator();
  SchoenbergResult out;
  out.samples = samples;

  std::vector<Word> kernel_basis;
  for (const auto& m : alg.monomials(max_degree))
    if (!m.empty()) kernel_basis.push_back(m);
  Rows cond(kernel_basis.size(), std::vector<Scalar>(kernel_basis.size()));
  for (std::size_t i = 0; i < kernel_basis.size(); ++i) {
    const Element bi = alg.involution(kernel_basis[i]);
    for (std::size_t j = 0; j < kernel_basis.size(); ++j) {
      const Element bj(kernel_basis[j]);
      const TPoly k = apply_functional(f, alg.mul(bi, bj)) + l.value(outer(bi, bj));
      cond[i][j] = k.constant_term();
    }
  }
  out.conditional = gram_check("Gram of psi∘mu + L on ker delta", kernel_basis, std::move(cond));
  out.conditionally_positive = out.conditional.result.psd;

  const ConvolutionExponential phi(alg, f, 1);
  const auto& basis = alg.monomials(max_degree);
  std::vector<std::vector<TPoly>> formal(basis.size(), std::vector<TPoly>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Element bi = alg.involution(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j)
      formal[i][j] = phi(Tensor::from_element(def.mu_t(bi, Element(basis[j]))));
  }
  out.states_psd = true;
  bool nonnegative_seen = false;
  bool nonnegative_psd = true;
  for (const auto& t : samples) {
    const Scalar at(t);
    out.unit_ok.push_back(phi(Tuple{Word{}}).eval(at).is_one());
    Rows g(basis.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = formal[i][j].eval(at);
    out.states.push_back(gram_check("state Gram at t = " + to_string(t), basis, std::move(g)));
    const bool ok = out.states.back().result.psd && out.unit_ok.back();
    out.states_psd = out.states_psd && ok;
    if (sgn(t) >= 0) {
      nonnegative_seen = true;
      nonnegative_psd = nonnegative_psd && ok;
    }
  }
  if (nonnegative_seen) out.agree = out.conditionally_positive == nonnegative_psd;

  Report& r = out.report;
  r.id = "schoenberg";
  r.degree = max_degree;
  r.status = out.conditionally_positive && out.states_psd ? Status::pass : Status::fail;
  if (!out.conditionally_positive) {
    r.witness = gram_witness(p, out.conditional);
    r.message = "not conditionally positive";
  } else {
    for (std::size_t k = 0; k < out.states.size(); ++k) {
      if (!out.unit_ok[k]) {
        r.witness = Witness{"1", "phi_t(1) != 1", "1", "t = " + to_string(out.samples[k])};
        r.message = "phi_t is not normalized";
        break;
      }
      if (!out.states[k].result.psd) {
        r.witness = gram_witness(p, out.states[k]);
        r.message = "phi_t is not positive at t = " + to_string(out.samples[k]);
        break;
      }
    }
  }
  return out;
}

const std::string& q_template() {
  static const std::string text = R"(# q-commutation relation x x* = q x* x with the diagonal braiding
# beta(x ⊗ x) = q x ⊗ x; instantiate by substituting {q} and {1/q}.
[algebra]
name = q{q}
generators = x xs
involution = x:xs
grade = x:1 xs:1

[braiding]
kind = diagonal
x x = {q}
x xs = {q}
xs x = {1/q}
xs xs = {1/q}

[relations]
xs x = {1/q} x xs

[antipode]
x = - x
xs = - xs
)";
  return text;
}

namespace {

// μ_t on slots (slot, slot + 1), defined only on multiples of
// x ⊗ xs - q xs ⊗ x, which it sends to t 1.
Tensor formal_deformed_product(const Tensor& u, std::size_t slot, const Scalar& q, const Rational& t) {
  const Word x{0};
  const Word xs{1};
  std::map<Tuple, Tensor> parts;  // remaining slots → pair part
  for (const auto& [k, c] : u.terms()) {
    Tuple rest = k;
    rest.erase(rest.begin() + static_cast<long>(slot), rest.begin() + static_cast<long>(slot + 2));
    auto [it, inserted] = parts.try_emplace(rest, 2);
    it->second.add(Tuple{k[slot], k[slot + 1]}, c);
  }
  Tensor out(u.rank() - 1);
  for (const auto& [rest, pair] : parts) {
    const TPoly lambda = pair.coeff(Tuple{x, xs});
    Tensor expected(2, Tuple{x, xs}, lambda);
    expected.add(Tuple{xs, x}, -(lambda * TPoly(q)));
    if (!(pair == expected)) throw std::logic_error("formal deformed product is undefined on this input");
    Tuple key = rest;
    key.insert(key.begin() + static_cast<long>(slot), Word{});
    out.add(key, lambda * TPoly(Scalar(t)));
  }
  return out;
}

}  // namespace

QnogoResult qnogo_eval(const Scalar& q, const Rational& t) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  QnogoResult out;
  out.presentation = parse_presentation(q_template(), q);
  const Algebra alg(out.presentation);
  const Word x{0};
  const Word xs{1};
  Tensor u(3, Tuple{x, x, xs});
  u.add(Tuple{x, xs, x}, -TPoly(q));
  out.lhs = formal_deformed_product(braid_mn(alg, u, 1, 2), 0, q, t);
  out.rhs = braid_at(alg, formal_deformed_product(u, 1, q, t), 0);
  out.equal = out.lhs == out.rhs;
  return out;
}

std::string reports_to_json(const std::string& name, int max_degree, const std::vector<Report>& reports) {
  nlohmann::ordered_json doc;
  doc["presentation"] = name;
  doc["max_degree"] = max_degree;
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["degree"] = r.degree;
    if (r.witness) {
      j["witness"] = {{"input", r.witness->input},
                      {"lhs", r.witness->lhs},
                      {"rhs", r.witness->rhs},
                      {"note", r.witness->note}};
    }
    doc["reports"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "SKIP") << "  " << r.id
       << "  (D = " << r.degree << ")";
    if (!r.message.empty()) os << "  " << r.message;
    os << "\n";
    if (r.witness) {
      os << "      input: " << r.witness->input << "\n"
         << "      lhs:   " << r.witness->lhs << "\n"
         << "      rhs:   " << r.witness->rhs << "\n";
      if (!r.witness->note.empty()) os << "      note:  " << r.witness->note << "\n";
    }
  }
  return os.str();
}

}  // namespace bhopf
