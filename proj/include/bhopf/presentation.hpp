// Declarative description of a presented braided Hopf *-algebra, its file
// grammar, and the checks that certify the quotient construction.
#pragma once

#include "bhopf/combination.hpp"
#include "bhopf/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bhopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class BraidingKind { graded_sign, diagonal };

/// lhs (two letters, out of normal order) rewrites to rhs.
struct Rule {
  Word lhs;
  Element rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

using PairKey = std::pair<Word, Word>;

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Gen> star;  // star[g] is the index of g*
  std::vector<unsigned> grade;
  BraidingKind braiding = BraidingKind::graded_sign;
  // Diagonal braiding: beta(g ⊗ h) = braid_table[g][h] h ⊗ g.
  std::vector<std::vector<Scalar>> braid_table;
  std::vector<Rule> rules;
  std::map<PairKey, Scalar> cocycle;
  std::vector<Element> antipode;  // S on each generator

  std::size_t size() const { return generators.size(); }
  std::optional<Gen> find(std::string_view symbol) const;
  /// True when no rule left side occurs as a factor.
  bool is_normal(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Throws ParseError with the offending line and column.
Presentation parse_presentation(std::string_view text);
/// Replaces `{q}` and `{1/q}` placeholders before parsing.
Presentation parse_presentation(std::string_view text, const Scalar& q);
std::string instantiate_template(std::string_view text, const Scalar& q);
Presentation load_presentation(const std::string& path, const std::optional<Scalar>& q = {});
std::string to_text(const Presentation& p);

/// Scalar-weighted words joined by + / -. Words are returned as written
/// (not normalized).
Element parse_element(const Presentation& p, std::string_view text);
/// Table keyed by single monomials (`x xs = 1`), as used for psi files.
std::map<Word, Scalar> parse_monomial_table(const Presentation& p, std::string_view text);

std::string format_word(const Presentation& p, const Word& w);
std::string format_tuple(const Presentation& p, const Tuple& t);
std::string format(const Presentation& p, const Element& e);
std::string format(const Presentation& p, const Tensor& u);

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
  std::string note;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Report {
  std::string id;
  Status status = Status::pass;
  int degree = 0;
  std::optional<Witness> witness;
  std::string message;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Every three-letter word containing a redex must have a single normal form
/// over all reduction orders; duplicate left sides are caught the same way.
Report check_confluence(const Presentation& p);
/// Coideal, counit, braiding-stability and antipode compatibility of each rule.
Report check_quotient_compatibility(const Presentation& p, int max_degree);

}  // namespace bhopf
