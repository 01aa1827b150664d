#include "slider/group_table.hpp"

#include <cctype>
#include <random>
#include <stdexcept>

namespace slider {

GroupTable::GroupTable(std::size_t order, std::vector<Symbol> mult,
                       std::optional<std::vector<std::string>> labels)
    : order_(order), mult_(std::move(mult)) {
  if (order_ == 0) {
    throw std::invalid_argument("group: order must be positive");
  }
  if (order_ > 65535) {
    throw std::invalid_argument("group: order exceeds the symbol range");
  }
  if (mult_.size() != order_ * order_) {
    throw std::invalid_argument("group: multiplication table has wrong size");
  }
  for (Symbol entry : mult_) {
    if (entry >= order_) {
      throw std::invalid_argument("group: table entry out of range");
    }
  }

  // Identity: the unique e with e*x = x*e = x for all x.
  std::optional<Symbol> identity;
  for (Symbol e = 0; e < order_; ++e) {
    bool ok = true;
    for (Symbol x = 0; ok && x < order_; ++x) {
      ok = mul(e, x) == x && mul(x, e) == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (!identity) {
    throw std::invalid_argument("group: no identity element");
  }
  identity_ = *identity;

  inverse_.assign(order_, 0);
  for (Symbol a = 0; a < order_; ++a) {
    bool found = false;
    for (Symbol b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("group: element " + std::to_string(a) +
                                  " has no inverse");
    }
  }

  auto check_assoc = [&](Symbol a, Symbol b, Symbol c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::invalid_argument("group: multiplication is not associative");
    }
  };
  if (order_ <= 64) {
    for (Symbol a = 0; a < order_; ++a) {
      for (Symbol b = 0; b < order_; ++b) {
        for (Symbol c = 0; c < order_; ++c) {
          check_assoc(a, b, c);
        }
      }
    }
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, order_ - 1);
    for (int i = 0; i < 4096; ++i) {
      check_assoc(static_cast<Symbol>(pick(rng)),
                  static_cast<Symbol>(pick(rng)),
                  static_cast<Symbol>(pick(rng)));
    }
  }

  if (labels) {
    if (labels->size() != order_) {
      throw std::invalid_argument("group: label count differs from order");
    }
    alphabet_ = Alphabet(std::move(*labels));
  } else {
    alphabet_ = Alphabet(order_);
  }
}

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cyclic group: order must be positive");
  }
  std::vector<Symbol> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      mult[a * n + b] = static_cast<Symbol>((a + b) % n);
    }
  }
  return GroupTable(n, std::move(mult));
}

std::optional<GroupTable> parse_cyclic_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'z' && name[0] != 'Z')) {
    return std::nullopt;
  }
  std::size_t n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      return std::nullopt;
    }
    n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    if (n > 65535) {
      return std::nullopt;
    }
  }
  if (n == 0) {
    return std::nullopt;
  }
  return GroupTable::cyclic(n);
}

}  // namespace slider
