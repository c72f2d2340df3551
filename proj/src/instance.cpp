#include "mkga/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <sstream>

namespace mkga {

namespace {

struct Token {
  double value;
  std::size_t position;  // 1-based
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string word;
  std::size_t position = 0;
  while (in >> word) {
    ++position;
    double value = 0.0;
    const char* first = word.data();
    const char* last = word.data() + word.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      throw ParseError("non-numeric token '" + word + "' at position " +
                           std::to_string(position),
                       position);
    }
    tokens.push_back({value, position});
  }
  return tokens;
}

// Sequential reader over the token stream.
class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& tokens) : tokens_(tokens) {}

  std::size_t remaining() const { return tokens_.size() - next_; }
  bool done() const { return next_ == tokens_.size(); }

  const Token& take(const char* what) {
    if (done()) {
      throw ParseError(std::string("premature end of stream while reading ") +
                           what + " at position " +
                           std::to_string(tokens_.size() + 1),
                       tokens_.size() + 1);
    }
    return tokens_[next_++];
  }

  std::size_t take_count(const char* what) {
    const Token& t = take(what);
    if (t.value <= 0 || t.value != std::floor(t.value) || t.value > 1e9) {
      throw ParseError(std::string(what) + " must be a positive integer, got " +
                           format_number(t.value) + " at position " +
                           std::to_string(t.position),
                       t.position);
    }
    return static_cast<std::size_t>(t.value);
  }

  double take_nonnegative(const char* what) {
    const Token& t = take(what);
    if (t.value < 0) {
      throw ParseError(std::string("negative ") + what + " " +
                           format_number(t.value) + " at position " +
                           std::to_string(t.position),
                       t.position);
    }
    return t.value;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t next_ = 0;
};

void read_body(Cursor& cursor, Instance& instance) {
  instance.values.resize(instance.n);
  for (auto& v : instance.values) v = cursor.take_nonnegative("value");
  instance.weights.assign(instance.m, std::vector<double>(instance.n));
  for (auto& row : instance.weights)
    for (auto& w : row) w = cursor.take_nonnegative("weight");
  instance.capacities.resize(instance.m);
  for (auto& c : instance.capacities) c = cursor.take_nonnegative("capacity");
}

void check_length(const Instance& instance, const Selection& sel) {
  if (sel.size() != instance.n) {
    throw std::invalid_argument("selection has " + std::to_string(sel.size()) +
                                " bits, instance has " +
                                std::to_string(instance.n) + " objects");
  }
}

}  // namespace

std::size_t Selection::count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::vector<std::size_t> Selection::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

void Instance::validate() const {
  if (n == 0 || m == 0)
    throw std::invalid_argument("instance needs n >= 1 and m >= 1");
  if (values.size() != n)
    throw std::invalid_argument("values must have n entries");
  if (weights.size() != m)
    throw std::invalid_argument("weights must have m rows");
  for (const auto& row : weights)
    if (row.size() != n)
      throw std::invalid_argument("every weight row must have n entries");
  if (capacities.size() != m)
    throw std::invalid_argument("capacities must have m entries");
  auto bad = [](double x) { return !(x >= 0) || !std::isfinite(x); };
  for (double v : values)
    if (bad(v)) throw std::invalid_argument("values must be non-negative");
  for (const auto& row : weights)
    for (double w : row)
      if (bad(w)) throw std::invalid_argument("weights must be non-negative");
  for (double c : capacities)
    if (bad(c)) throw std::invalid_argument("capacities must be non-negative");
  if (known_optimum && bad(*known_optimum))
    throw std::invalid_argument("known optimum must be non-negative");
}

Instance parse_weing(std::istream& in, std::string name) {
  const auto tokens = tokenize(in);
  Cursor cursor(tokens);
  Instance instance;
  instance.name = std::move(name);
  instance.n = cursor.take_count("n");
  instance.m = cursor.take_count("m");

  const std::size_t expected = 2 + instance.n + instance.m * instance.n + instance.m;
  if (tokens.size() != expected && tokens.size() != expected + 1) {
    throw ParseError("token count mismatch: expected " + std::to_string(expected) +
                         " or " + std::to_string(expected + 1) + " tokens for n=" +
                         std::to_string(instance.n) + ", m=" +
                         std::to_string(instance.m) + ", found " +
                         std::to_string(tokens.size()) + " (at position " +
                         std::to_string(std::min(tokens.size(), expected) + 1) + ")",
                     std::min(tokens.size(), expected) + 1);
  }
  read_body(cursor, instance);
  if (!cursor.done()) instance.known_optimum = cursor.take_nonnegative("optimum");
  return instance;
}

Instance parse_weing(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  return parse_weing(in, std::move(name));
}

std::vector<Instance> parse_orlib(std::istream& in, const std::string& stem) {
  const auto tokens = tokenize(in);
  Cursor cursor(tokens);
  const std::size_t problems = cursor.take_count("problem count");

  std::vector<Instance> out;
  out.reserve(problems);
  for (std::size_t k = 0; k < problems; ++k) {
    Instance instance;
    instance.name = stem + "-" + std::to_string(k + 1);
    instance.n = cursor.take_count("n");
    instance.m = cursor.take_count("m");
    const double reference = cursor.take_nonnegative("reference value");
    if (reference > 0) instance.known_optimum = reference;

    const std::size_t body = instance.n + instance.m * instance.n + instance.m;
    if (cursor.remaining() < body) {
      throw ParseError("premature end of stream in problem " + std::to_string(k + 1) +
                           ": need " + std::to_string(body) + " tokens, found " +
                           std::to_string(cursor.remaining()) + " at position " +
                           std::to_string(tokens.size() + 1),
                       tokens.size() + 1);
    }
    read_body(cursor, instance);
    out.push_back(std::move(instance));
  }
  if (!cursor.done()) {
    const Token& extra = cursor.take("trailing token");
    throw ParseError("token count mismatch: " + std::to_string(tokens.size()) +
                         " tokens, but " + std::to_string(problems) +
                         " problem(s) end at position " +
                         std::to_string(extra.position - 1),
                     extra.position);
  }
  return out;
}

std::vector<Instance> parse_orlib(std::string_view text, const std::string& stem) {
  std::istringstream in{std::string(text)};
  return parse_orlib(in, stem);
}

std::string write_weing(const Instance& instance) {
  std::ostringstream out;
  out << instance.n << ' ' << instance.m << '\n';
  auto line = [&out](const std::vector<double>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      out << (i ? " " : "") << format_number(xs[i]);
    out << '\n';
  };
  line(instance.values);
  for (const auto& row : instance.weights) line(row);
  line(instance.capacities);
  if (instance.known_optimum) out << format_number(*instance.known_optimum) << '\n';
  return out.str();
}

double usage(const Instance& instance, const Selection& sel, std::size_t j) {
  check_length(instance, sel);
  if (j >= instance.m) {
    throw std::out_of_range("constraint index " + std::to_string(j) +
                            " out of range for m=" + std::to_string(instance.m));
  }
  const auto& row = instance.weights[j];
  double sum = 0.0;
  for (std::size_t i = 0; i < instance.n; ++i)
    if (sel.test(i)) sum += row[i];
  return sum;
}

double objective(const Instance& instance, const Selection& sel) {
  check_length(instance, sel);
  double sum = 0.0;
  for (std::size_t i = 0; i < instance.n; ++i)
    if (sel.test(i)) sum += instance.values[i];
  return sum;
}

bool is_feasible(const Instance& instance, const Selection& sel) {
  check_length(instance, sel);
  for (std::size_t j = 0; j < instance.m; ++j)
    if (usage(instance, sel, j) > instance.capacities[j]) return false;
  return true;
}

std::string format_number(double value) {
  if (value == 0) return "0";
  if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 1e18) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  // Prefer the shortest representation that round-trips.
  for (int precision = 1; precision <= 17; ++precision) {
    char probe[64];
    std::snprintf(probe, sizeof probe, "%.*g", precision, value);
    if (std::strtod(probe, nullptr) == value) return probe;
  }
  return buf;
}

}  // namespace mkga
