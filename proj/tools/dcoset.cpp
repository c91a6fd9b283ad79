// Command-line front end: evaluation, enumeration, atomic rexes, squashing
// and the verification suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dcoset/errors.hpp"
#include "dcoset/io.hpp"
#include "dcoset/verify.hpp"

namespace {

using namespace dcoset;
using nlohmann::json;

constexpr int kUsage = 2;
constexpr int kFailed = 1;

struct SystemFlags {
  std::string type = "A";
  int rank = -1;
  int bond = 0;

  void attach(CLI::App* app) {
    app->add_option("--type", type, "Cartan type: A, B or I2")->check(CLI::IsMember({"A", "B", "I2"}));
    app->add_option("--rank", rank, "number of simple reflections")->check(CLI::NonNegativeNumber);
    app->add_option("--bond", bond, "m for I2(m)")->check(CLI::Range(3, 1000));
  }

  CoxeterSystem build() const {
    switch (parse_cartan(type)) {
      case CartanType::A:
        if (rank < 0) throw InvalidArgument("--rank is required for type A");
        return CoxeterSystem::type_a(rank);
      case CartanType::B:
        if (rank < 0) throw InvalidArgument("--rank is required for type B");
        return CoxeterSystem::type_b(rank);
      case CartanType::I2:
        if (bond < 3) throw InvalidArgument("--bond is required for type I2");
        return CoxeterSystem::dihedral(bond);
    }
    throw InvalidArgument("unknown type");
  }
};

struct CosetFlags {
  SystemFlags system;
  std::string coset;
  std::string left;
  std::string right;
  std::string min;

  void attach(CLI::App* app) {
    system.attach(app);
    app->add_option("--coset", coset, "coset JSON");
    app->add_option("--left", left, "left frame, e.g. {1,3}");
    app->add_option("--right", right, "right frame");
    app->add_option("--min", min, "an element of the coset as an image list, e.g. [3,4,1,2]");
  }

  DoubleCoset build() const {
    if (!coset.empty()) return coset_from_json(parse_json(coset));
    if (left.empty() || right.empty() || min.empty())
      throw InvalidArgument("give --coset, or all of --left, --right and --min");
    CoxeterSystem sys = system.build();
    return coset_of(frame(sys, left), parse_element(sys, min), frame(sys, right));
  }

  static ParabolicSubset frame(const CoxeterSystem& sys, const std::string& text) {
    ParabolicSubset s = parse_subset(text);
    if (!sys.valid_subset(s)) throw InvalidArgument("frame " + text + " is not a subset of the simple reflections");
    return s;
  }

  static json parse_json(const std::string& text) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
  }
};

struct Output {
  bool as_json = false;

  void emit(const json& j, const std::string& text) const {
    if (as_json)
      std::cout << j.dump(2) << '\n';
    else
      std::cout << text;
  }
};

std::string coset_text(const DoubleCoset& p) {
  std::ostringstream os;
  os << "left  " << format_subset(p.left()) << '\n'
     << "min   " << format_element(p.min()) << '\n'
     << "right " << format_subset(p.right()) << '\n';
  return os.str();
}

std::string coset_line(const DoubleCoset& p) {
  return format_subset(p.left()) + " " + format_element(p.min()) + " " + format_subset(p.right());
}

json permutation_json(const Element& sigma) {
  json j = to_json(sigma.system());
  j["images"] = std::vector<int>(sigma.images().begin(), sigma.images().end());
  return j;
}

// A one-step expression for any coset: atomic rexes of the core, wrapped by
// the removals down to the redundancies.
OneStepExpression one_step_for(const DoubleCoset& p, const AtomicSequence& core_rex) {
  DoubleCoset c = core(p);
  MultistepExpression body = to_multistep(atomic_expression(c.left(), core_rex));
  MultistepExpression full = concatenate(MultistepExpression({p.left(), p.left(), c.left()}),
                                         concatenate(body, MultistepExpression({c.right(), p.right(), p.right()})));
  return to_onestep(full);
}

int cmd_eval(const Output& out, const SystemFlags& flags, const std::string& text) {
  CoxeterSystem sys = flags.build();
  Expression e = parse_expression(text);
  MultistepExpression m = to_multistep(e);
  for (ParabolicSubset f : m.frames())
    if (!sys.valid_subset(f)) throw InvalidArgument("frame " + format_subset(f) + " lies outside " + sys.name());
  DoubleCoset p = evaluate(sys, m);
  bool reduced = is_reduced(sys, m);
  json j{{"coset", to_json(p)},
         {"reduced", reduced},
         {"length", max_elem(p).length()},
         {"expected_length", expected_length(sys, m)}};
  std::ostringstream os;
  os << coset_text(p) << "max   " << format_element(max_elem(p)) << " (length " << max_elem(p).length() << ")\n"
     << "reduced " << (reduced ? "true" : "false") << '\n';
  out.emit(j, os.str());
  return 0;
}

int cmd_atomic_rex(const Output& out, const CosetFlags& flags, bool all) {
  DoubleCoset p = flags.build();
  DoubleCoset c = core(p);
  std::vector<AtomicSequence> rexes;
  if (all)
    rexes = all_atomic_rexes(c);
  else
    rexes.push_back(atomic_rex_of_core(c));
  json list = json::array();
  std::ostringstream os;
  for (const auto& seq : rexes) {
    std::string text = format_expression(one_step_for(p, seq));
    list.push_back(text);
    os << text << '\n';
  }
  if (all) os << "count " << rexes.size() << '\n';
  json j{{"coset", to_json(p)}, {"core", is_core(p)}};
  if (all)
    j["expressions"] = list;
  else
    j["expression"] = list.front();
  out.emit(j, os.str());
  return 0;
}

int cmd_squash(const Output& out, const CosetFlags& flags) {
  DoubleCoset p = flags.build();
  Element sigma = p.system().cartan() == CartanType::B ? squash_coset_b(p) : squash_coset(p);
  out.emit(permutation_json(sigma), format_element(sigma) + " in " + sigma.system().name() + "\n");
  return 0;
}

int cmd_unsquash(const Output& out, const SystemFlags& flags, const std::string& right, const std::string& perm) {
  CoxeterSystem sys = flags.build();
  ParabolicSubset j = CosetFlags::frame(sys, right);
  const int k = (sys.all_simples() - j).size();
  CoxeterSystem small = sys.cartan() == CartanType::B ? CoxeterSystem::type_b(k) : CoxeterSystem::type_a(k);
  Element sigma = parse_element(small, perm);
  DoubleCoset p = sys.cartan() == CartanType::B ? unsquash_b(sys, j, sigma) : unsquash(sys, j, sigma);
  out.emit(to_json(p), coset_text(p));
  return 0;
}

int cmd_enumerate_core(const Output& out, const SystemFlags& flags, const std::string& right) {
  CoxeterSystem sys = flags.build();
  ParabolicSubset j = CosetFlags::frame(sys, right);
  auto cores = enumerate_core_cosets(sys, j);
  json list = json::array();
  std::ostringstream os;
  for (const auto& p : cores) {
    list.push_back(to_json(p));
    os << coset_line(p) << '\n';
  }
  os << "count " << cores.size() << '\n';
  out.emit(json{{"right", to_json(j)}, {"cosets", list}, {"count", cores.size()}}, os.str());
  return 0;
}

int cmd_compose(const Output& out, const SystemFlags& flags, const std::string& path) {
  CoxeterSystem sys = flags.build();
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::vector<MultistepExpression> parts;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    parts.push_back(to_multistep(parse_expression(line)));
  }
  if (parts.empty()) throw InvalidArgument(path + " holds no expressions");

  json steps = json::array();
  std::ostringstream os;
  DoubleCoset acc = evaluate(sys, parts.front());
  MultistepExpression chain = parts.front();
  bool every_step_reduced = true;
  os << coset_line(acc) << '\n';
  steps.push_back(to_json(acc));
  for (std::size_t k = 1; k < parts.size(); ++k) {
    DoubleCoset next = evaluate(sys, parts[k]);
    every_step_reduced = every_step_reduced && is_reduced_composition(acc, next);
    chain = concatenate(chain, parts[k]);
    acc = star_compose(acc, next);
    os << "* " << coset_line(next) << '\n';
    steps.push_back(to_json(next));
  }
  bool reduced = is_reduced(sys, chain);
  os << "= " << coset_line(acc) << '\n' << "reduced " << (reduced ? "true" : "false") << '\n';
  out.emit(json{{"factors", steps},
                {"result", to_json(acc)},
                {"reduced", reduced},
                {"stepwise_reduced", every_step_reduced}},
           os.str());
  return 0;
}

int cmd_verify(const Output& out, const std::string& suite, const std::string& type, std::optional<int> max_rank,
               int max_bond) {
  SuiteOptions options;
  if (!type.empty()) options.type = parse_cartan(type);
  options.max_rank = max_rank;
  options.max_bond = max_bond;
  std::ostream& progress = out.as_json ? std::cerr : std::cout;
  SuiteReport report = run_suite(suite, options, [&](const CellResult& cell) {
    progress << (cell.passed() ? "ok   " : "FAIL ") << cell.system << " J=" << cell.frame << " checks=" << cell.checked
             << '\n';
    for (const auto& f : cell.failures) progress << "     " << f << '\n';
  });
  json cells = json::array();
  for (const auto& cell : report.cells)
    cells.push_back({{"system", cell.system}, {"frame", cell.frame}, {"checked", cell.checked}, {"failures", cell.failures}});
  std::ostringstream os;
  os << suite << ": " << report.cells.size() << " cells, " << report.checked() << " checks, " << report.failure_count()
     << " failures\n";
  out.emit(json{{"suite", suite}, {"passed", report.passed()}, {"checked", report.checked()},
                {"failures", report.failure_count()}, {"cells", cells}},
           os.str());
  return report.passed() ? 0 : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic double cosets, core cosets and atomic expressions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  SystemFlags eval_flags;
  std::string expr;
  auto* eval = app.add_subcommand("eval-expr", "evaluate a multistep or one-step expression");
  eval_flags.attach(eval);
  eval->add_option("--expr", expr, "expression text")->required();

  CosetFlags rex_flags;
  bool all = false;
  auto* rex = app.add_subcommand("atomic-rex", "atomic reduced expression of a coset (through its core)");
  rex_flags.attach(rex);
  rex->add_flag("--all", all, "list every atomic reduced expression");

  CosetFlags squash_flags;
  auto* squash = app.add_subcommand("squash", "squash a core coset to a permutation");
  squash_flags.attach(squash);

  SystemFlags unsquash_flags;
  std::string unsquash_right, perm;
  auto* unsq = app.add_subcommand("unsquash", "lift a permutation to the core coset with right frame J");
  unsquash_flags.attach(unsq);
  unsq->add_option("--right", unsquash_right, "right frame J")->required();
  unsq->add_option("--perm", perm, "squashed permutation as an image list")->required();

  SystemFlags enum_flags;
  std::string enum_right;
  auto* enumerate = app.add_subcommand("enumerate-core", "list the core cosets with right frame J");
  enum_flags.attach(enumerate);
  enumerate->add_option("--right", enum_right, "right frame J")->required();

  SystemFlags compose_flags;
  std::string exprs_path;
  auto* compose = app.add_subcommand("compose", "star-compose the expressions in a file, one per line");
  compose_flags.attach(compose);
  compose->add_option("--exprs", exprs_path, "file of expressions")->required();

  std::string suite, verify_type;
  std::optional<int> max_rank;
  int max_bond = 7;
  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--type", verify_type, "restrict to one type")->check(CLI::IsMember({"A", "B", "I2"}));
  verify->add_option("--max-rank", max_rank, "largest number of simple reflections")->check(CLI::PositiveNumber);
  verify->add_option("--max-bond", max_bond, "largest m for I2(m)")->check(CLI::Range(3, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  Output out{format == "json"};
  try {
    if (*eval) return cmd_eval(out, eval_flags, expr);
    if (*rex) return cmd_atomic_rex(out, rex_flags, all);
    if (*squash) return cmd_squash(out, squash_flags);
    if (*unsq) return cmd_unsquash(out, unsquash_flags, unsquash_right, perm);
    if (*enumerate) return cmd_enumerate_core(out, enum_flags, enum_right);
    if (*compose) return cmd_compose(out, compose_flags, exprs_path);
    if (*verify) return cmd_verify(out, suite, verify_type, max_rank, max_bond);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
