// 0/1 multidimensional knapsack instance model and file parsers.
//
// Two whitespace-token grammars are accepted:
//
//   weing:  n m  v_1..v_n  (m rows of n weights)  c_1..c_m  [optimum]
//   orlib:  K  then K times:  n m ref  v_1..v_n  (m rows of n weights)  c_1..c_m
//
// In orlib streams a reference value of 0 means the optimum is unknown.
// Comments are not skipped; any non-numeric token is a parse error.

#ifndef MKGA_INSTANCE_HPP
#define MKGA_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mkga {

// Thrown by the parsers. `token_position` is the 1-based index of the
// offending token in the stream, or 0 when the error is not tied to one.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t token_position)
      : std::runtime_error(what), token_position_(token_position) {}
  std::size_t token_position() const { return token_position_; }

 private:
  std::size_t token_position_;
};

// A length-n vector of 0/1 decisions, one per object.
class Selection {
 public:
  Selection() = default;
  explicit Selection(std::size_t n) : bits_(n, 0) {}
  explicit Selection(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  bool test(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool on = true) { bits_[i] = on ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  std::size_t count() const;
  std::vector<std::size_t> indices() const;
  std::span<const std::uint8_t> bits() const { return bits_; }

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Instance {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> values;                // v_i
  std::vector<std::vector<double>> weights;  // weights[j][i], constraint-major
  std::vector<double> capacities;            // c_j
  std::optional<double> known_optimum;

  // Throws std::invalid_argument when shapes disagree with n/m or any
  // entry is negative or non-finite.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance parse_weing(std::istream& in, std::string name);
Instance parse_weing(std::string_view text, std::string name);

// Instances are named "<stem>-1" .. "<stem>-K".
std::vector<Instance> parse_orlib(std::istream& in, const std::string& stem);
std::vector<Instance> parse_orlib(std::string_view text, const std::string& stem);

// Writes the weing grammar; parse_weing(write_weing(x)) == x up to the name.
std::string write_weing(const Instance& instance);

// Constraint index j is 0-based. Throws std::out_of_range / std::invalid_argument.
double usage(const Instance& instance, const Selection& sel, std::size_t j);
double objective(const Instance& instance, const Selection& sel);
bool is_feasible(const Instance& instance, const Selection& sel);

// Renders integral values without a decimal part, others with up to 17
// significant digits.
std::string format_number(double value);

}  // namespace mkga

#endif  // MKGA_INSTANCE_HPP
