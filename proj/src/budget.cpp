#include "mzv/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace mzv {

namespace {

template <typename T>
void read_env(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::string_view sv(raw);
  T value{};
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (ec != std::errc() || ptr != sv.data() + sv.size() || value <= 0) {
    throw std::invalid_argument(std::string("bad value for ") + name + ": " + raw);
  }
  out = value;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  read_env("MZV_ENUM_CAP", b.max_enumeration);
  read_env("MZV_PREC_CAP", b.max_precision);
  read_env("MZV_DEGREE_CAP", b.max_degree);
  return b;
}

void Budget::check_enumeration(std::uint64_t q, std::int64_t d) const {
  std::uint64_t count = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    if (count > max_enumeration / q) {
      throw BudgetExceeded("enumeration of q^" + std::to_string(d) + " monic polynomials (q=" +
                           std::to_string(q) + ") exceeds cap " + std::to_string(max_enumeration));
    }
    count *= q;
  }
}

void Budget::check_precision(std::int64_t n) const {
  if (n > max_precision) {
    throw BudgetExceeded("precision " + std::to_string(n) + " exceeds cap " +
                         std::to_string(max_precision));
  }
}

void Budget::check_degree(std::int64_t deg, const char* what) const {
  if (deg > max_degree) {
    throw BudgetExceeded(std::string(what) + ": degree " + std::to_string(deg) + " exceeds cap " +
                         std::to_string(max_degree));
  }
}

}  // namespace mzv
