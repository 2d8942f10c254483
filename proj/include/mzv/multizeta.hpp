#pragma once

// Multizeta values zeta(s_1, ..., s_r) in F_q((1/t)), truncated at u^N.

#include <cstdint>
#include <optional>
#include <vector>

#include "mzv/laurent.hpp"
#include "mzv/relations.hpp"

namespace mzv {

struct ZetaRequest {
  MZIndex index;
  std::int64_t precision = 20;
};

/// Degree chains d_1 > ... > d_r >= 0 that can contribute below u^{N+1},
/// i.e. whose summed valuation bounds stay <= N.
std::vector<std::vector<std::int64_t>> zeta_chains(std::uint64_t q, const MZIndex& index, std::int64_t precision);

/// sum over degree chains of S_{d_1}(s_1) ... S_{d_r}(s_r), exact through u^N.
/// Throws BudgetExceeded when N or the required degrees exceed the caps.
LaurentTail zeta_trunc(const FieldCtx& ctx, const ZetaRequest& req);

struct ShuffleCheck {
  bool ok = false;
  std::optional<std::int64_t> first_mismatch;
  MZExpression expansion;
};

/// Compares zeta(a) zeta(b) with shuffle_expand(a, b) through u^N.
ShuffleCheck verify_shuffle_numeric(const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t precision);

}  // namespace mzv
