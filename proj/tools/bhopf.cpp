// bhopf: verify braided Hopf presentations and evaluate their deformations.
#include "bhopf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bhopf;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<Scalar> template_q(const std::string& q) {
  if (q.empty()) return std::nullopt;
  return parse_scalar(q);
}

struct VerifyArgs {
  std::string path;
  std::string q;
  std::string checks;
  int max_degree = 4;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  Presentation p;
  std::vector<Report> reports;
  try {
    p = load_presentation(a.path, template_q(a.q));
    reports = run_catalog(p, split_list(a.checks), a.max_degree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::cout << (a.format == "json" ? reports_to_json(p.name, a.max_degree, reports) + "\n" : reports_to_text(reports));
  for (const auto& r : reports)
    if (r.status == Status::fail) return kFail;
  return kPass;
}

struct EvalArgs {
  std::string path;
  std::string q;
  std::string op;
  std::string lhs;
  std::string rhs;
  std::string t;
};

int cmd_eval(const EvalArgs& a) {
  try {
    const Presentation p = load_presentation(a.path, template_q(a.q));
    const Algebra alg(p);
    const Element x = parse_element(p, a.lhs);
    const bool binary = a.op == "mul" || a.op == "mu_t" || a.op == "expL";
    if (binary && a.rhs.empty()) throw std::invalid_argument("--op " + a.op + " needs --rhs");
    if (!binary && !a.rhs.empty()) throw std::invalid_argument("--op " + a.op + " takes no --rhs");
    const Element y = binary ? parse_element(p, a.rhs) : Element();
    std::optional<Rational> t;
    if (!a.t.empty()) t = parse_rational(a.t);

    const Deformation def(alg);
    Tensor result(1);
    if (a.op == "mul") result = Tensor::from_element(alg.mul(x, y));
    else if (a.op == "mu_t") result = Tensor::from_element(def.mu_t(x, y));
    else if (a.op == "comul") result = comul(alg, x);
    else if (a.op == "antipode") result = Tensor::from_element(alg.antipode(x));
    else if (a.op == "s_t") result = Tensor::from_element(def.deformed_antipode(x));
    else if (a.op == "sigma") result = Tensor::scalar(def.sigma().value(Tensor::from_element(x)));
    else if (a.op == "expL") result = Tensor::scalar(def.exp_generator()(outer(x, y)));
    else throw std::invalid_argument("unknown op '" + a.op + "'");
    if (t) result = substitute(result, Scalar(*t));
    std::cout << format(p, result) << "\n";
    return kPass;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}

struct SchoenbergArgs {
  std::string path;
  std::string q;
  std::string psi;
  int max_degree = 2;
  std::string t = "0,1/2,1,2";
};

void print_gram(const Presentation& p, const GramCheck& g) {
  std::cout << "  " << g.label << ": " << (g.result.psd ? "positive semidefinite" : "NOT positive semidefinite")
            << " (" << g.basis.size() << " x " << g.basis.size() << ")\n";
  if (g.result.psd) return;
  Element b;
  for (std::size_t i = 0; i < g.basis.size(); ++i) b.add(g.basis[i], TPoly(g.result.witness[i]));
  std::cout << "    witness b = " << format(p, b) << ", <b, b> = " << to_string(g.result.value) << "\n";
  for (std::size_t i = 0; i < g.basis.size(); ++i)
    if (!g.result.witness[i].is_zero())
      std::cout << "    Gram entry at (" << format_word(p, g.basis[i]) << ", " << format_word(p, g.basis[i])
                << ") = " << to_string(g.gram[i][i]) << "\n";
}

int cmd_schoenberg(const SchoenbergArgs& a) {
  Presentation p;
  std::map<Word, Scalar> psi;
  std::vector<Rational> samples;
  try {
    p = load_presentation(a.path, template_q(a.q));
    psi = parse_monomial_table(p, read_file(a.psi));
    for (const auto& s : split_list(a.t)) samples.push_back(parse_rational(s));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const Algebra alg(p);
  SchoenbergResult r;
  try {
    r = schoenberg_check(alg, psi, a.max_degree, samples);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kInputError;
  }
  std::cout << "conditional positivity: " << (r.conditionally_positive ? "holds" : "fails") << "\n";
  print_gram(p, r.conditional);
  for (std::size_t k = 0; k < r.states.size(); ++k) {
    std::cout << "t = " << to_string(r.samples[k]) << ": phi_t "
              << (r.unit_ok[k] && r.states[k].result.psd ? "is a state" : "is not a state") << "\n";
    if (!r.unit_ok[k]) std::cout << "  phi_t(1) != 1\n";
    print_gram(p, r.states[k]);
  }
  if (r.agree) std::cout << "directions agree on samples with t >= 0: " << (*r.agree ? "yes" : "no") << "\n";
  return r.report.status == Status::pass ? kPass : kFail;
}

struct QnogoArgs {
  std::string q;
  std::string t = "1";
};

int cmd_qnogo(const QnogoArgs& a) {
  QnogoResult r;
  try {
    r = qnogo_eval(parse_scalar(a.q), parse_rational(a.t));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::cout << "lhs = " << format(r.presentation, r.lhs) << "\n";
  std::cout << "rhs = " << format(r.presentation, r.rhs) << "\n";
  std::cout << (r.equal ? "equal" : "unequal") << "\n";
  return r.equal ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braided Hopf algebra verifier and deformation evaluator"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the identity catalog on a presentation");
  verify->add_option("path", va.path, "presentation file")->required();
  verify->add_option("--q", va.q, "value for the {q} placeholders of a template");
  verify->add_option("--checks", va.checks, "comma-separated check ids (default: all)");
  verify->add_option("--max-degree", va.max_degree, "degree cutoff")->check(CLI::Range(0, 12));
  verify->add_option("--format", va.format, "output format")->check(CLI::IsMember({"text", "json"}));

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a structure map");
  eval->add_option("path", ea.path, "presentation file")->required();
  eval->add_option("--q", ea.q, "value for the {q} placeholders of a template");
  eval->add_option("--op", ea.op, "operation")
      ->required()
      ->check(CLI::IsMember({"mul", "mu_t", "comul", "antipode", "s_t", "sigma", "expL"}));
  eval->add_option("--lhs", ea.lhs, "first argument")->required();
  eval->add_option("--rhs", ea.rhs, "second argument");
  eval->add_option("--t", ea.t, "substitute this rational for t");

  SchoenbergArgs sa;
  auto* schoenberg = app.add_subcommand("schoenberg", "check both directions of the Schoenberg correspondence");
  schoenberg->add_option("path", sa.path, "presentation file")->required();
  schoenberg->add_option("--q", sa.q, "value for the {q} placeholders of a template");
  schoenberg->add_option("--psi", sa.psi, "monomial table for psi")->required();
  schoenberg->add_option("--max-degree", sa.max_degree, "degree cutoff")->check(CLI::Range(0, 8));
  schoenberg->add_option("--t", sa.t, "comma-separated sample values of t");

  QnogoArgs qa;
  auto* qnogo = app.add_subcommand("qnogo", "compare both sides of the q-commutation obstruction");
  qnogo->add_option("--q", qa.q, "nonzero scalar q")->required();
  qnogo->add_option("--t", qa.t, "rational t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*verify) return cmd_verify(va);
  if (*eval) return cmd_eval(ea);
  if (*schoenberg) return cmd_schoenberg(sa);
  return cmd_qnogo(qa);
}
