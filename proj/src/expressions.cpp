#include "dcoset/expressions.hpp"

#include <cctype>
#include <sstream>

#include "dcoset/errors.hpp"

namespace dcoset {

MultistepExpression::MultistepExpression(std::vector<ParabolicSubset> frames) : frames_(std::move(frames)) {
  if (frames_.empty() || frames_.size() % 2 == 0)
    throw InvalidArgument("multistep expression needs an odd number of frames");
  for (std::size_t k = 1; k < frames_.size(); k += 2) {
    if (!frames_[k - 1].subset_of(frames_[k]) || !frames_[k + 1].subset_of(frames_[k]))
      throw InvalidArgument("frame " + format_subset(frames_[k]) + " does not contain its neighbours");
  }
}

OneStepExpression::OneStepExpression(ParabolicSubset start, std::vector<Step> steps)
    : start_(start), steps_(std::move(steps)) {
  ParabolicSubset cur = start_;
  for (const auto& s : steps_) {
    if (s.add) {
      if (cur.contains(s.index)) throw InvalidArgument("+" + std::to_string(s.index) + " adds a present index");
      cur = cur.with(s.index);
    } else {
      if (!cur.contains(s.index)) throw InvalidArgument("-" + std::to_string(s.index) + " removes an absent index");
      cur = cur.without(s.index);
    }
  }
}

ParabolicSubset OneStepExpression::finish() const {
  ParabolicSubset cur = start_;
  for (const auto& s : steps_) cur = s.add ? cur.with(s.index) : cur.without(s.index);
  return cur;
}

MultistepExpression to_multistep(const OneStepExpression& e) {
  std::vector<ParabolicSubset> frames{e.start()};
  const auto& steps = e.steps();
  ParabolicSubset cur = e.start();
  std::size_t k = 0;
  while (k < steps.size()) {
    ParabolicSubset upper = cur;
    while (k < steps.size() && steps[k].add) upper = upper.with(steps[k++].index);
    ParabolicSubset lower = upper;
    while (k < steps.size() && !steps[k].add) lower = lower.without(steps[k++].index);
    frames.push_back(upper);
    frames.push_back(lower);
    cur = lower;
  }
  return MultistepExpression(std::move(frames));
}

OneStepExpression to_onestep(const MultistepExpression& m) {
  std::vector<Step> steps;
  for (int t = 1; t <= m.steps(); ++t) {
    ParabolicSubset prev = m.frames()[2 * t - 2];
    for (int s : (m.upper(t) - prev).indices()) steps.push_back({true, s});
    for (int s : (m.upper(t) - m.lower(t)).indices()) steps.push_back({false, s});
  }
  return OneStepExpression(m.start(), std::move(steps));
}

MultistepExpression to_multistep(const Expression& e) {
  if (const auto* m = std::get_if<MultistepExpression>(&e)) return *m;
  return to_multistep(std::get<OneStepExpression>(e));
}

namespace {

void require_valid_frames(const CoxeterSystem& system, const MultistepExpression& m) {
  for (auto f : m.frames())
    if (!system.valid_subset(f))
      throw InvalidArgument("frame " + format_subset(f) + " is not a set of simples of " + system.name());
}

}  // namespace

DoubleCoset evaluate(const CoxeterSystem& system, const MultistepExpression& m) {
  require_valid_frames(system, m);
  Element top = longest_element(system, m.start());
  for (int t = 1; t <= m.steps(); ++t) top = star_product(top, longest_element(system, m.upper(t)));
  return coset_of(m.start(), top, m.finish());
}

DoubleCoset evaluate(const CoxeterSystem& system, const Expression& e) { return evaluate(system, to_multistep(e)); }

Element expression_product(const CoxeterSystem& system, const MultistepExpression& m) {
  require_valid_frames(system, m);
  if (m.steps() == 0) return longest_element(system, m.start());
  Element e = longest_element(system, m.upper(1));
  for (int t = 2; t <= m.steps(); ++t)
    e = e * longest_element(system, m.lower(t - 1)) * longest_element(system, m.upper(t));
  return e;
}

int expected_length(const CoxeterSystem& system, const MultistepExpression& m) {
  if (m.steps() == 0) return parabolic_length(system, m.start());
  int total = parabolic_length(system, m.upper(1));
  for (int t = 2; t <= m.steps(); ++t)
    total += parabolic_length(system, m.upper(t)) - parabolic_length(system, m.lower(t - 1));
  return total;
}

bool is_reduced(const CoxeterSystem& system, const MultistepExpression& m) {
  Element e = expression_product(system, m);
  if (e.length() != expected_length(system, m)) return false;
  return e == max_elem(evaluate(system, m));
}

bool is_reduced(const CoxeterSystem& system, const Expression& e) { return is_reduced(system, to_multistep(e)); }

MultistepExpression concatenate(const MultistepExpression& m, const MultistepExpression& n) {
  if (m.finish() != n.start())
    throw FrameMismatch("cannot concatenate: " + format_subset(m.finish()) + " vs " + format_subset(n.start()));
  std::vector<ParabolicSubset> frames = m.frames();
  frames.insert(frames.end(), n.frames().begin() + 1, n.frames().end());
  return MultistepExpression(std::move(frames));
}

MultistepExpression reverse(const MultistepExpression& m) {
  return MultistepExpression(std::vector<ParabolicSubset>(m.frames().rbegin(), m.frames().rend()));
}

bool expressions_equivalent(const CoxeterSystem& system, const MultistepExpression& m, const MultistepExpression& n) {
  if (m.start() != n.start() || m.finish() != n.finish())
    throw FrameMismatch("expressions have different outer frames");
  return is_reduced(system, m) && is_reduced(system, n) && evaluate(system, m) == evaluate(system, n);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(const char* token) {
    skip();
    std::string_view t(token);
    if (text_.compare(pos_, t.size(), t) == 0) {
      pos_ += t.size();
      return true;
    }
    return false;
  }

  void expect(const char* token) {
    if (!consume(token)) throw ParseError(std::string("expected '") + token + "'", pos_);
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    int value = std::stoi(text_.substr(start, pos_ - start));
    if (value > ParabolicSubset::kMaxIndex) throw ParseError("simple index too large", start);
    return value;
  }

  ParabolicSubset frame() {
    expect("{");
    ParabolicSubset out;
    if (consume("}")) return out;
    for (;;) {
      std::size_t at = (skip(), pos_);
      int i = integer();
      if (out.contains(i)) throw ParseError("repeated index in frame", at);
      out = out.with(i);
      if (consume(",")) continue;
      expect("}");
      return out;
    }
  }

  bool at_end() {
    skip();
    return pos_ == text_.size();
  }

  std::size_t pos() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

MultistepExpression parse_multistep(Parser& p) {
  std::vector<ParabolicSubset> frames{p.frame()};
  while (!p.consume("]]")) {
    p.skip();
    std::size_t at = p.pos();
    bool up;
    if (p.consume("<"))
      up = true;
    else if (p.consume(">"))
      up = false;
    else
      throw ParseError("expected '<', '>' or ']]'", at);
    ParabolicSubset next = p.frame();
    ParabolicSubset prev = frames.back();
    if (up && !prev.subset_of(next)) throw ParseError("'<' requires containment", at);
    if (!up && !next.subset_of(prev)) throw ParseError("'>' requires containment", at);
    // Odd positions hold the upper frames; pad with a repeated frame when
    // two relations of the same direction are adjacent.
    bool expecting_upper = frames.size() % 2 == 1;
    if (up != expecting_upper) frames.push_back(prev);
    frames.push_back(next);
  }
  if (frames.size() % 2 == 0) frames.push_back(frames.back());
  return MultistepExpression(std::move(frames));
}

OneStepExpression parse_onestep(Parser& p) {
  ParabolicSubset start = p.frame();
  ParabolicSubset cur = start;
  std::vector<Step> steps;
  while (!p.consume("]")) {
    p.skip();
    std::size_t at = p.pos();
    bool add;
    if (p.consume("+"))
      add = true;
    else if (p.consume("-"))
      add = false;
    else
      throw ParseError("expected '+', '-' or ']'", at);
    int i = p.integer();
    if (add && cur.contains(i)) throw ParseError("addition of an index already present", at);
    if (!add && !cur.contains(i)) throw ParseError("removal of an absent index", at);
    cur = add ? cur.with(i) : cur.without(i);
    steps.push_back({add, i});
  }
  return OneStepExpression(start, std::move(steps));
}

}  // namespace

Expression parse_expression(const std::string& text) {
  Parser p(text);
  Expression out = OneStepExpression(ParabolicSubset{}, {});
  if (p.consume("[[")) {
    out = parse_multistep(p);
  } else if (p.consume("[")) {
    out = parse_onestep(p);
  } else {
    throw ParseError("expected '[' or '[['", p.pos());
  }
  if (!p.at_end()) throw ParseError("trailing characters", p.pos());
  return out;
}

std::string format_expression(const MultistepExpression& m) {
  std::ostringstream os;
  os << "[[" << format_subset(m.start());
  for (std::size_t k = 1; k < m.frames().size(); ++k) os << (k % 2 == 1 ? " < " : " > ") << format_subset(m.frames()[k]);
  os << "]]";
  return os.str();
}

std::string format_expression(const OneStepExpression& e) {
  std::ostringstream os;
  os << '[' << format_subset(e.start());
  for (const auto& s : e.steps()) os << ' ' << (s.add ? '+' : '-') << s.index;
  os << ']';
  return os.str();
}

std::string format_expression(const Expression& e) {
  return std::visit([](const auto& x) { return format_expression(x); }, e);
}

}  // namespace dcoset
