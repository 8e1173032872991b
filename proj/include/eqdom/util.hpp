#ifndef EQDOM_UTIL_HPP
#define EQDOM_UTIL_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace eqdom {

// Error categories; the numeric value doubles as the CLI exit code.
enum class Errc {
  validation = 2,  // bad input: parse failures, broken tables, contract violations
  budget = 3,      // a configured size/sweep/closure budget was exceeded
  construction = 4 // a synthesis precondition does not hold for this input
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

struct NotAssociativeError : Error {
  int a, b, c;
  NotAssociativeError(int a_, int b_, int c_, const std::string& what)
      : Error(Errc::validation, what), a(a_), b(b_), c(c_) {}
};

struct IndexOutOfRangeError : Error {
  explicit IndexOutOfRangeError(const std::string& what) : Error(Errc::validation, what) {}
};

struct NotAGroupError : Error {
  explicit NotAGroupError(const std::string& what) : Error(Errc::validation, what) {}
};

struct NotAnIdealError : Error {
  explicit NotAnIdealError(const std::string& what) : Error(Errc::validation, what) {}
};

struct NotCompletelySimpleError : Error {
  explicit NotCompletelySimpleError(const std::string& what) : Error(Errc::validation, what) {}
};

struct FormulaMismatchError : Error {
  explicit FormulaMismatchError(const std::string& what) : Error(Errc::validation, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(Errc::validation, what) {}
};

struct SizeCapError : Error {
  explicit SizeCapError(const std::string& what) : Error(Errc::budget, what) {}
};

struct SweepBudgetError : Error {
  explicit SweepBudgetError(const std::string& what) : Error(Errc::budget, what) {}
};

struct ConstructionFailedError : Error {
  explicit ConstructionFailedError(const std::string& what) : Error(Errc::construction, what) {}
};

struct NotDistinguishableError : Error {
  explicit NotDistinguishableError(const std::string& what) : Error(Errc::construction, what) {}
};

// Fixed-universe bitset. All element sets in the library are bitsets over
// 0..n-1 element indices.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n, bool value = false)
      : n_(n), words_((n + 63) / 64, value ? ~std::uint64_t(0) : 0) {
    trim();
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Invokes f(i) for every set bit in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned tz = static_cast<unsigned>(__builtin_ctzll(bits));
        f(w * 64 + tz);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

 private:
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= (~std::uint64_t(0)) >> (64 - n_ % 64);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Carrier for ideals, kernels and other element subsets; always sized to the
// parent semigroup's universe.
using ElementSet = Bitset;

inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// Saturating multiply/pow for cardinality bounds that routinely overflow.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == std::numeric_limits<std::uint64_t>::max()) return r;
  }
  return r;
}

// Runs f(begin, end) over [0, total) split across `threads` workers. The
// workers write to disjoint slices, so results stay deterministic.
template <typename F>
void parallel_for(std::size_t total, int threads, F&& f) {
  if (threads <= 1 || total < 4096) {
    f(std::size_t(0), total);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (total + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&f, lo, hi] { f(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace eqdom

#endif  // EQDOM_UTIL_HPP
