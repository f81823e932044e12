#pragma once

// Thin RAII helpers over the C interface, private to the command-line tool.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bratteli/bratteli.h"

namespace bratteli::cli {

/// A failed library call; carries the library's diagnostic.
class ApiError : public std::runtime_error {
 public:
  explicit ApiError(bratteli_status status)
      : std::runtime_error(std::string(bratteli_status_name(status)) + ": " + bratteli_last_error()),
        status_(status) {}

  bratteli_status status() const noexcept { return status_; }

 private:
  bratteli_status status_;
};

inline void check(bratteli_status status) {
  if (status != BRATTELI_OK) throw ApiError(status);
}

/// Owns a library-allocated string.
class CString {
 public:
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { bratteli_string_free(ptr_); }

  char** out() noexcept { return &ptr_; }
  std::string str() const { return ptr_ ? std::string(ptr_) : std::string(); }

 private:
  char* ptr_ = nullptr;
};

struct TableDeleter {
  void operator()(bratteli_table* t) const noexcept { bratteli_table_free(t); }
};
struct GfDeleter {
  void operator()(bratteli_gf* g) const noexcept { bratteli_gf_free(g); }
};
struct SpectralDeleter {
  void operator()(bratteli_spectral* s) const noexcept { bratteli_spectral_free(s); }
};

using TablePtr = std::unique_ptr<bratteli_table, TableDeleter>;
using GfPtr = std::unique_ptr<bratteli_gf, GfDeleter>;
using SpectralPtr = std::unique_ptr<bratteli_spectral, SpectralDeleter>;

inline std::string count(bratteli_backend backend, std::uint32_t k, std::uint32_t i, std::uint32_t j) {
  CString s;
  check(bratteli_count(backend, k, i, j, nullptr, s.out()));
  return s.str();
}

struct VerifyOptions {
  std::uint32_t kmax = 0;
  std::uint32_t jmax = 0;
  std::vector<std::string> backends;
  unsigned jobs = 0;
};

struct SweepQuery {
  std::uint32_t k, i, j;
};

struct SweepOutcome {
  // One slot per backend; nullopt where the backend does not cover the query.
  std::vector<std::optional<std::string>> values;
  std::optional<std::string> error;
};

/// Prints per-pair agreement lines for a finished sweep, in canonical query
/// order, and returns kSuccess, or kMismatch if any two backends disagree.
int report_sweep(const VerifyOptions& opts, const std::vector<bratteli_backend>& backends,
                 const std::vector<SweepQuery>& queries, const std::vector<SweepOutcome>& outcomes,
                 std::ostream& out);

/// Sweeps every query with k <= kmax, i <= k, j <= jmax through each backend
/// and compares all pairs. Returns an ExitCode.
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Parses a backend name other than "auto".
bool parse_backend(const std::string& name, bratteli_backend& backend);
const char* backend_name(bratteli_backend backend);

}  // namespace bratteli::cli
