// Identity catalog, exact positive-semidefiniteness, the Schoenberg
// correspondence and the q-commutation obstruction.
#pragma once

#include "bhopf/deform.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bhopf {

class HermitianMatrix {
 public:
  /// Throws std::invalid_argument unless square with entry(j, i) = conj(entry(i, j)).
  explicit HermitianMatrix(std::vector<std::vector<Scalar>> rows);
  std::size_t size() const { return rows_.size(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  /// v* G v (real).
  Rational quadratic_form(const std::vector<Scalar>& v) const;

 private:
  std::vector<std::vector<Scalar>> rows_;
};

bool is_hermitian(const std::vector<std::vector<Scalar>>& rows);

struct PsdResult {
  bool psd = true;
  std::vector<Scalar> witness;  // v with v* G v < 0 when not psd
  Rational value;               // v* G v
};

/// Exact decision by pivoting with Schur complements.
PsdResult psd_exact(const HermitianMatrix& g);

class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GramCheck {
  std::string label;
  std::vector<Word> basis;
  std::vector<std::vector<Scalar>> gram;
  PsdResult result;
};

struct SchoenbergResult {
  GramCheck conditional;  // ψ∘μ + L over positive-degree monomials
  std::vector<Rational> samples;
  std::vector<bool> unit_ok;  // φ_t(1) = 1 per sample
  std::vector<GramCheck> states;
  bool conditionally_positive = false;
  bool states_psd = false;
  /// Whether both directions agree on the samples with t >= 0 (unset without such samples).
  std::optional<bool> agree;
  Report report;
};

/// Verifies the hypotheses on ψ first (HypothesisError on violation).
SchoenbergResult schoenberg_check(const Algebra& alg, const std::map<Word, Scalar>& psi, int max_degree,
                                  const std::vector<Rational>& samples);

struct QnogoResult {
  Presentation presentation;
  Tensor lhs{2};
  Tensor rhs{2};
  bool equal = false;
};

/// Text of the q-commutation template (placeholders `{q}` and `{1/q}`).
const std::string& q_template();
/// Throws std::invalid_argument for q = 0.
QnogoResult qnogo_eval(const Scalar& q, const Rational& t);

struct CheckContext;
using CheckRunner = std::function<Report(const CheckContext&)>;

struct CatalogEntry {
  std::string id;
  std::string description;
  /// The identity is derived from the cocycle condition on the generator.
  bool cocycle_dependent = false;
  CheckRunner run;
};

const std::vector<CatalogEntry>& catalog();
/// Throws std::invalid_argument for an unknown id. Empty ids selects all.
std::vector<Report> run_catalog(const Presentation& p, const std::vector<std::string>& ids, int max_degree);

std::string reports_to_json(const std::string& name, int max_degree, const std::vector<Report>& reports);
std::string reports_to_text(const std::vector<Report>& reports);

}  // namespace bhopf
