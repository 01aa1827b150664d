#ifndef SLIDER_GROUP_TABLE_HPP_
#define SLIDER_GROUP_TABLE_HPP_

// Finite groups given extensionally by their multiplication table. This is
// the passive group B of the lamplighter constructions; the table doubles as
// an Alphabet so group words reuse the word machinery.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slider/word.hpp"

namespace slider {

class GroupTable {
 public:
  GroupTable() = default;

  // mult is row-major: mult[a * order + b] = a * b. Identity and inverses are
  // located during validation. The group laws are checked exhaustively up to
  // order 64 and on a fixed pseudorandom sample above that.
  GroupTable(std::size_t order, std::vector<Symbol> mult,
             std::optional<std::vector<std::string>> labels = std::nullopt);

  static GroupTable cyclic(std::size_t n);

  std::size_t order() const { return order_; }
  Symbol mul(Symbol a, Symbol b) const { return mult_[a * order_ + b]; }
  Symbol identity() const { return identity_; }
  Symbol inverse(Symbol a) const { return inverse_[a]; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Symbol>& table() const { return mult_; }

  bool operator==(const GroupTable&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<Symbol> mult_;
  Symbol identity_ = 0;
  std::vector<Symbol> inverse_;
  Alphabet alphabet_;
};

// Parses "z5"/"Z5" style names into cyclic groups.
std::optional<GroupTable> parse_cyclic_name(const std::string& name);

}  // namespace slider

#endif  // SLIDER_GROUP_TABLE_HPP_
