#include "por/scheme.hpp"

#include <algorithm>
#include <string>

namespace por {

const char* scheme_kind_name(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::basic: return "basic";
    case SchemeKind::multiblock: return "multiblock";
    case SchemeKind::lc_v1: return "lcv1";
    case SchemeKind::lc_v2: return "lcv2";
    case SchemeKind::shacham_waters: return "sw";
  }
  return "?";
}

std::optional<SchemeKind> scheme_kind_from_name(const std::string& name) noexcept {
  if (name == "basic") return SchemeKind::basic;
  if (name == "multiblock") return SchemeKind::multiblock;
  if (name == "lcv1") return SchemeKind::lc_v1;
  if (name == "lcv2") return SchemeKind::lc_v2;
  if (name == "sw" || name == "shacham-waters") return SchemeKind::shacham_waters;
  return std::nullopt;
}

SchemeDescriptor::SchemeDescriptor(SchemeKind kind_, LinearCode code_,
                                   std::optional<std::uint32_t> ell_)
    : kind(kind_), code(std::move(code_)), ell(ell_) {
  const bool needs_ell = kind == SchemeKind::multiblock || kind == SchemeKind::lc_v2;
  const bool allows_ell = needs_ell || kind == SchemeKind::shacham_waters;
  if (needs_ell && !ell)
    fail(Errc::parameter_error, std::string(scheme_kind_name(kind)) + " scheme requires ell");
  if (!allows_ell && ell)
    fail(Errc::parameter_error, std::string(scheme_kind_name(kind)) + " scheme takes no ell");
  if (ell && (*ell < 1 || *ell > code.length()))
    fail(Errc::parameter_error, "ell must be in [1, n]");
}

std::size_t SchemeDescriptor::response_arity() const noexcept {
  return kind == SchemeKind::multiblock ? *ell : 1;
}

std::size_t SchemeDescriptor::wire_response_len() const noexcept {
  if (kind == SchemeKind::multiblock) return *ell;
  if (kind == SchemeKind::shacham_waters) return 2;
  return 1;
}

namespace {

bool is_weighted_lc(const SchemeDescriptor& s) {
  return s.kind == SchemeKind::lc_v2 ||
         (s.kind == SchemeKind::shacham_waters && s.ell.has_value());
}

bool is_full_lc(const SchemeDescriptor& s) {
  return s.kind == SchemeKind::lc_v1 ||
         (s.kind == SchemeKind::shacham_waters && !s.ell.has_value());
}

void check_sparse_shape(const SchemeDescriptor& scheme, const Challenge& c) {
  const std::uint64_t q = scheme.field().modulus();
  if (c.indices.size() != c.coeffs.size())
    fail(Errc::invalid_challenge, "index/coefficient count mismatch");
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    const std::uint32_t idx = c.indices[i];
    if (idx < 1 || idx > scheme.n()) fail(Errc::invalid_challenge, "index out of range");
    if (idx <= prev) fail(Errc::invalid_challenge, "indices must be strictly increasing");
    prev = idx;
    if (c.coeffs[i] == 0 || c.coeffs[i] >= q)
      fail(Errc::invalid_challenge, "coefficients must be nonzero canonical values");
  }
}

}  // namespace

void validate_challenge(const SchemeDescriptor& scheme, const Challenge& c) {
  switch (scheme.kind) {
    case SchemeKind::basic:
      if (!c.coeffs.empty() || c.indices.size() != 1)
        fail(Errc::invalid_challenge, "basic challenge is a single index");
      if (c.indices[0] < 1 || c.indices[0] > scheme.n())
        fail(Errc::invalid_challenge, "index out of range");
      return;
    case SchemeKind::multiblock: {
      if (!c.coeffs.empty()) fail(Errc::invalid_challenge, "multiblock challenge has no coefficients");
      if (c.indices.size() != *scheme.ell)
        fail(Errc::invalid_challenge, "multiblock challenge must have exactly ell indices");
      std::uint32_t prev = 0;
      for (std::uint32_t idx : c.indices) {
        if (idx < 1 || idx > scheme.n()) fail(Errc::invalid_challenge, "index out of range");
        if (idx <= prev) fail(Errc::invalid_challenge, "indices must be strictly increasing");
        prev = idx;
      }
      return;
    }
    default:
      check_sparse_shape(scheme, c);
      if (is_weighted_lc(scheme)) {
        if (c.indices.size() != *scheme.ell)
          fail(Errc::invalid_challenge, "challenge weight must equal ell");
      } else if (c.indices.empty()) {
        fail(Errc::invalid_challenge, "zero vector is not a valid challenge");
      }
      return;
  }
}

BigInt challenge_count(const SchemeDescriptor& scheme) {
  const BigInt q(scheme.field().modulus());
  const std::size_t n = scheme.n();
  switch (scheme.kind) {
    case SchemeKind::basic: return BigInt(n);
    case SchemeKind::multiblock: return binom(BigInt(n), *scheme.ell);
    default: break;
  }
  if (is_full_lc(scheme)) return ipow(q, n) - 1;
  return binom(BigInt(n), *scheme.ell) * ipow(q - 1, *scheme.ell);
}

namespace {

// --- multiblock: colexicographic subset ranking (combinatorial number
// system): rank(s_1 < ... < s_ell) = sum_i C(s_i - 1, i).

std::vector<std::uint32_t> colex_unrank(BigInt rank, std::uint32_t n, std::uint32_t ell) {
  std::vector<std::uint32_t> subset(ell);
  std::uint32_t hi = n;
  for (std::uint32_t i = ell; i >= 1; --i) {
    // Largest s with C(s-1, i) <= rank; s <= hi keeps elements decreasing.
    std::uint32_t s = hi;
    while (s >= i && binom(BigInt(s - 1), i) > rank) --s;
    subset[i - 1] = s;
    rank -= binom(BigInt(s - 1), i);
    hi = s - 1;
  }
  return subset;
}

BigInt colex_rank(const std::vector<std::uint32_t>& subset) {
  BigInt rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    rank += binom(BigInt(subset[i] - 1), static_cast<std::uint64_t>(i + 1));
  return rank;
}

// --- weight-ell vectors in lexicographic order (first coordinate most
// significant, values in natural order 0 < 1 < ... < q-1).

// Number of weight-`need` suffixes over `rest` free positions.
BigInt weighted_suffix_count(std::uint64_t q, std::uint32_t rest, std::int64_t need) {
  if (need < 0) return 0;
  return binom(BigInt(rest), static_cast<std::uint64_t>(need)) *
         ipow(BigInt(q - 1), static_cast<std::uint64_t>(need));
}

Challenge weighted_lc_unrank(const SchemeDescriptor& scheme, BigInt o) {
  const std::uint64_t q = scheme.field().modulus();
  const std::uint32_t n = static_cast<std::uint32_t>(scheme.n());
  const std::uint32_t ell = *scheme.ell;
  Challenge c;
  std::uint32_t weight = 0;
  for (std::uint32_t pos = 1; pos <= n; ++pos) {
    const std::uint32_t rest = n - pos;
    const BigInt zero_block = weighted_suffix_count(q, rest, static_cast<std::int64_t>(ell) - weight);
    if (o < zero_block) continue;  // this coordinate is 0
    o -= zero_block;
    const BigInt nonzero_block =
        weighted_suffix_count(q, rest, static_cast<std::int64_t>(ell) - weight - 1);
    const BigInt value_index = o / nonzero_block;  // 0-based among values 1..q-1
    o -= value_index * nonzero_block;
    c.indices.push_back(pos);
    c.coeffs.push_back(1 + to_u64(value_index));
    ++weight;
  }
  return c;
}

BigInt weighted_lc_rank(const SchemeDescriptor& scheme, const Challenge& c) {
  const std::uint64_t q = scheme.field().modulus();
  const std::uint32_t n = static_cast<std::uint32_t>(scheme.n());
  const std::uint32_t ell = *scheme.ell;
  BigInt rank = 0;
  std::uint32_t weight = 0;
  std::size_t next = 0;  // next sparse entry
  for (std::uint32_t pos = 1; pos <= n; ++pos) {
    const std::uint32_t rest = n - pos;
    const std::uint64_t value =
        (next < c.indices.size() && c.indices[next] == pos) ? c.coeffs[next] : 0;
    if (value != 0) {
      rank += weighted_suffix_count(q, rest, static_cast<std::int64_t>(ell) - weight);
      rank += BigInt(value - 1) *
              weighted_suffix_count(q, rest, static_cast<std::int64_t>(ell) - weight - 1);
      ++weight;
      ++next;
    }
    // value == 0 contributes nothing: 0 is the smallest coordinate value.
  }
  return rank;
}

// --- all nonzero vectors in lexicographic order: position o holds the
// base-q digits of o+1 (the zero vector would be first).

Challenge full_lc_unrank(const SchemeDescriptor& scheme, const BigInt& o) {
  const std::uint64_t q = scheme.field().modulus();
  const std::size_t n = scheme.n();
  BigInt v = o + 1;
  std::vector<std::uint64_t> dense(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    dense[i] = to_u64(v % q);
    v /= q;
  }
  Challenge c;
  for (std::size_t i = 0; i < n; ++i) {
    if (dense[i] != 0) {
      c.indices.push_back(static_cast<std::uint32_t>(i + 1));
      c.coeffs.push_back(dense[i]);
    }
  }
  return c;
}

BigInt full_lc_rank(const SchemeDescriptor& scheme, const Challenge& c) {
  const std::uint64_t q = scheme.field().modulus();
  BigInt v = 0;
  std::size_t next = 0;
  for (std::uint32_t pos = 1; pos <= scheme.n(); ++pos) {
    const std::uint64_t value =
        (next < c.indices.size() && c.indices[next] == pos) ? c.coeffs[next] : 0;
    if (value != 0) ++next;
    v = v * q + value;
  }
  return v - 1;
}

}  // namespace

Challenge challenge_at(const SchemeDescriptor& scheme, const BigInt& ordinal) {
  if (ordinal < 0 || ordinal >= challenge_count(scheme))
    fail(Errc::ordinal_out_of_range, "challenge ordinal " + ordinal.str());
  switch (scheme.kind) {
    case SchemeKind::basic:
      return Challenge{{static_cast<std::uint32_t>(to_u64(ordinal) + 1)}, {}};
    case SchemeKind::multiblock:
      return Challenge{colex_unrank(ordinal, static_cast<std::uint32_t>(scheme.n()), *scheme.ell),
                       {}};
    default:
      return is_full_lc(scheme) ? full_lc_unrank(scheme, ordinal)
                                : weighted_lc_unrank(scheme, ordinal);
  }
}

BigInt ordinal_of(const SchemeDescriptor& scheme, const Challenge& c) {
  validate_challenge(scheme, c);
  switch (scheme.kind) {
    case SchemeKind::basic: return BigInt(c.indices[0] - 1);
    case SchemeKind::multiblock: return colex_rank(c.indices);
    default:
      return is_full_lc(scheme) ? full_lc_rank(scheme, c) : weighted_lc_rank(scheme, c);
  }
}

std::vector<Challenge> enumerate_challenges(const SchemeDescriptor& scheme, std::uint64_t cap) {
  const BigInt gamma = challenge_count(scheme);
  if (gamma > cap)
    fail(Errc::too_large_to_enumerate, "gamma = " + gamma.str() + " exceeds cap " + std::to_string(cap));
  const std::uint64_t count = to_u64(gamma);
  std::vector<Challenge> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(challenge_at(scheme, BigInt(i)));
  return out;
}

Response respond(const SchemeDescriptor& scheme, const EncodedMessage& M, const Challenge& c) {
  validate_challenge(scheme, c);
  if (M.blocks.size() != scheme.n()) fail(Errc::length_mismatch, "encoded message length");
  const PrimeField& f = scheme.field();
  switch (scheme.kind) {
    case SchemeKind::basic:
      return Response{{M.blocks[c.indices[0] - 1]}};
    case SchemeKind::multiblock: {
      Response r;
      r.values.reserve(c.indices.size());
      for (std::uint32_t idx : c.indices) r.values.push_back(M.blocks[idx - 1]);
      return r;
    }
    default: {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < c.indices.size(); ++i)
        acc = f.add(acc, f.mul(c.coeffs[i], M.blocks[c.indices[i] - 1]));
      return Response{{acc}};
    }
  }
}

bool verify_response(const SchemeDescriptor& scheme, const Response& stored,
                     const Response& received) {
  const std::size_t expect = scheme.wire_response_len();
  if (stored.values.size() != expect || received.values.size() != expect)
    fail(Errc::shape_mismatch, "response shape for " + std::string(scheme_kind_name(scheme.kind)));
  return stored.values == received.values;
}

std::vector<std::uint64_t> response_vector(const SchemeDescriptor& scheme,
                                           const EncodedMessage& M, std::uint64_t cap) {
  const auto challenges = enumerate_challenges(scheme, cap);
  const std::size_t arity = scheme.response_arity();
  std::vector<std::uint64_t> out;
  out.reserve(challenges.size() * arity);
  for (const auto& c : challenges) {
    const Response r = respond(scheme, M, c);
    out.insert(out.end(), r.values.begin(), r.values.end());
  }
  return out;
}

ResponseCode build_response_code(const SchemeDescriptor& scheme, std::uint64_t gamma_cap,
                                 std::uint64_t message_cap) {
  const BigInt messages = scheme.code.codeword_count();
  if (messages > message_cap)
    fail(Errc::too_large_to_enumerate,
         "q^k = " + messages.str() + " exceeds cap " + std::to_string(message_cap));
  const auto challenges = enumerate_challenges(scheme, gamma_cap);
  const std::size_t arity = scheme.response_arity();

  ResponseCode rc;
  rc.arity = arity;
  rc.gamma = challenges.size();
  const std::uint64_t count = to_u64(messages);
  rc.codebook.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const EncodedMessage M = encode(scheme.code, message_at(scheme.code, BigInt(i)));
    std::vector<std::uint64_t> row;
    row.reserve(challenges.size() * arity);
    for (const auto& c : challenges) {
      const Response r = respond(scheme, M, c);
      row.insert(row.end(), r.values.begin(), r.values.end());
    }
    rc.codebook.push_back(std::move(row));
  }

  // Exhaustive pairwise minimum distance.
  std::uint64_t best = UINT64_MAX;
  for (std::size_t a = 0; a + 1 < rc.codebook.size(); ++a) {
    for (std::size_t b = a + 1; b < rc.codebook.size(); ++b) {
      std::uint64_t dist = 0;
      const auto& ra = rc.codebook[a];
      const auto& rb = rc.codebook[b];
      for (std::size_t cidx = 0; cidx < rc.gamma; ++cidx) {
        const std::size_t base = cidx * arity;
        for (std::size_t t = 0; t < arity; ++t) {
          if (ra[base + t] != rb[base + t]) {
            ++dist;
            break;
          }
        }
      }
      best = std::min(best, dist);
    }
  }
  rc.dstar = rc.codebook.size() < 2 ? rc.gamma : best;
  if (rc.codebook.size() >= 2 && rc.dstar == 0)
    fail(Errc::parameter_error, "response map is not injective on this code");
  return rc;
}

}  // namespace por
