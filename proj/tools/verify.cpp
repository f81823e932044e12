#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <thread>

#include "api.hpp"
#include "cli.hpp"

namespace bratteli::cli {

namespace {

std::string describe(const SweepQuery& q) {
  return "(k=" + std::to_string(q.k) + ", i=" + std::to_string(q.i) + ", j=" + std::to_string(q.j) + ")";
}

bool covers(bratteli_backend b, const SweepQuery& q) {
  return b != BRATTELI_BACKEND_DYCK || q.j <= BRATTELI_DYCK_MAX_LENGTH;
}

}  // namespace

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<bratteli_backend> backends;
  std::set<std::string> seen;
  for (const auto& name : opts.backends) {
    bratteli_backend b;
    if (!parse_backend(name, b)) {
      err << "error: unknown backend '" << name << "'\n";
      return kUsageError;
    }
    if (!seen.insert(name).second) {
      err << "error: backend '" << name << "' listed twice\n";
      return kUsageError;
    }
    backends.push_back(b);
  }
  if (backends.size() < 2) {
    err << "error: verify needs at least two backends\n";
    return kUsageError;
  }

  std::vector<SweepQuery> queries;
  for (std::uint32_t k = 0; k <= opts.kmax; ++k)
    for (std::uint32_t i = 0; i <= k; ++i)
      for (std::uint32_t j = 0; j <= opts.jmax; ++j) queries.push_back({k, i, j});

  std::vector<SweepOutcome> outcomes(queries.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t n; !failed && (n = next.fetch_add(1)) < queries.size();) {
      const auto& q = queries[n];
      auto& slot = outcomes[n];
      slot.values.resize(backends.size());
      try {
        for (std::size_t b = 0; b < backends.size(); ++b)
          if (covers(backends[b], q)) slot.values[b] = count(backends[b], q.k, q.i, q.j);
      } catch (const ApiError& e) {
        slot.error = e.what();
        failed = true;
      }
    }
  };
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, queries.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  // Report in canonical query order regardless of scheduling.
  for (std::size_t n = 0; n < queries.size(); ++n)
    if (outcomes[n].error) {
      err << "error: " << describe(queries[n]) << ": " << *outcomes[n].error << '\n';
      return kUsageError;
    }

  return report_sweep(opts, backends, queries, outcomes, out);
}

int report_sweep(const VerifyOptions& opts, const std::vector<bratteli_backend>& backends,
                 const std::vector<SweepQuery>& queries, const std::vector<SweepOutcome>& outcomes,
                 std::ostream& out) {
  out << "verify: " << queries.size() << " queries, k <= " << opts.kmax << ", j <= " << opts.jmax
      << ", backends";
  for (std::size_t b = 0; b < backends.size(); ++b) out << (b ? "," : " ") << backend_name(backends[b]);
  out << '\n';
  if (std::find(backends.begin(), backends.end(), BRATTELI_BACKEND_DYCK) != backends.end() &&
      opts.jmax > BRATTELI_DYCK_MAX_LENGTH)
    out << "note: dyck covers only j <= " << BRATTELI_DYCK_MAX_LENGTH << '\n';

  std::optional<std::size_t> first_bad;
  for (std::size_t a = 0; a < backends.size(); ++a)
    for (std::size_t b = a + 1; b < backends.size(); ++b) {
      std::size_t compared = 0, mismatches = 0;
      std::optional<std::size_t> first;
      for (std::size_t n = 0; n < queries.size(); ++n) {
        const auto& va = outcomes[n].values[a];
        const auto& vb = outcomes[n].values[b];
        if (!va || !vb) continue;
        ++compared;
        if (*va != *vb) {
          ++mismatches;
          if (!first) first = n;
        }
      }
      const char* na = backend_name(backends[a]);
      const char* nb = backend_name(backends[b]);
      if (mismatches == 0) {
        out << na << " == " << nb << ": " << compared << " queries agree\n";
      } else {
        const auto& q = queries[*first];
        out << na << " != " << nb << ": " << mismatches << " of " << compared
            << " queries disagree; first " << describe(q) << ": " << na << '='
            << *outcomes[*first].values[a] << ' ' << nb << '=' << *outcomes[*first].values[b] << '\n';
        if (!first_bad || *first < *first_bad) first_bad = first;
      }
    }

  if (!first_bad) {
    out << "result: all backends agree\n";
    return kSuccess;
  }
  const auto& q = queries[*first_bad];
  out << "result: mismatch; first counterexample " << describe(q) << ':';
  for (std::size_t b = 0; b < backends.size(); ++b)
    if (outcomes[*first_bad].values[b])
      out << ' ' << backend_name(backends[b]) << '=' << *outcomes[*first_bad].values[b];
  out << '\n';
  return kMismatch;
}

}  // namespace bratteli::cli
