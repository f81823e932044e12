#include "bratteli/bratteli.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "bratteli/diagram.hpp"
#include "bratteli/dyck.hpp"
#include "bratteli/errors.hpp"
#include "bratteli/gf.hpp"
#include "bratteli/limits.hpp"
#include "bratteli/spectral.hpp"
#include "bratteli/table_io.hpp"

struct bratteli_table {
  bratteli::CountTable table;
};

struct bratteli_gf {
  bratteli::RationalGF gf;
};

struct bratteli_spectral {
  bratteli::SpectralDecomposition decomposition;
};

namespace {

thread_local std::string last_error;

bratteli_status fail(bratteli_status status, const char* message) {
  last_error = message;
  return status;
}

struct UnknownEnumerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <typename Fn>
bratteli_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return BRATTELI_OK;
  } catch (const UnknownEnumerator& e) {
    return fail(BRATTELI_ERR_ARGUMENT, e.what());
  } catch (const bratteli::DomainError& e) {
    return fail(BRATTELI_ERR_DOMAIN, e.what());
  } catch (const bratteli::BudgetExceeded& e) {
    return fail(BRATTELI_ERR_BUDGET, e.what());
  } catch (const bratteli::ResourceError& e) {
    return fail(BRATTELI_ERR_RESOURCE, e.what());
  } catch (const bratteli::PrecisionExhausted& e) {
    return fail(BRATTELI_ERR_PRECISION,
                (std::string(e.what()) + " (residual " + std::to_string(e.residual()) + ")").c_str());
  } catch (const bratteli::IntegralityError& e) {
    return fail(BRATTELI_ERR_INTEGRALITY, e.what());
  } catch (const bratteli::ParseError& e) {
    return fail(BRATTELI_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BRATTELI_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(BRATTELI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BRATTELI_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

#define BRATTELI_REQUIRE(ptr)                                             \
  do {                                                                    \
    if ((ptr) == nullptr) return fail(BRATTELI_ERR_ARGUMENT, #ptr " is NULL"); \
  } while (0)

bratteli::PrecisionPolicy policy_from(const bratteli_count_options* opts) {
  bratteli::PrecisionPolicy p;
  if (opts) {
    if (opts->initial_bits != 0) p.initial_bits = opts->initial_bits;
    if (opts->max_bits != 0) p.max_bits = opts->max_bits;
    if (opts->accept_distance != 0.0) p.accept_distance = opts->accept_distance;
  }
  return p;
}

std::string join(const std::vector<bratteli::Integer>& v) {
  std::string out;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (n) out += ' ';
    out += v[n].get_str();
  }
  return out;
}

}  // namespace

extern "C" {

const char* bratteli_version(void) { return "1.0.0"; }

const char* bratteli_status_name(bratteli_status status) {
  switch (status) {
    case BRATTELI_OK: return "ok";
    case BRATTELI_ERR_ARGUMENT: return "argument error";
    case BRATTELI_ERR_DOMAIN: return "domain error";
    case BRATTELI_ERR_BUDGET: return "budget exceeded";
    case BRATTELI_ERR_RESOURCE: return "resource error";
    case BRATTELI_ERR_PRECISION: return "precision exhausted";
    case BRATTELI_ERR_INTEGRALITY: return "integrality error";
    case BRATTELI_ERR_PARSE: return "parse error";
    case BRATTELI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bratteli_last_error(void) { return last_error.c_str(); }

void bratteli_string_free(char* s) { std::free(s); }

void bratteli_count_options_init(bratteli_count_options* opts) {
  if (!opts) return;
  const bratteli::PrecisionPolicy p;
  opts->dyck_budget = bratteli::dyck::kDefaultNodeBudget;
  opts->initial_bits = p.initial_bits;
  opts->max_bits = p.max_bits;
  opts->accept_distance = p.accept_distance;
}

bratteli_status bratteli_count(bratteli_backend backend, uint32_t k, uint32_t i, uint32_t j,
                               const bratteli_count_options* opts, char** out) {
  BRATTELI_REQUIRE(out);
  const bratteli::Query q{k, i, j};
  return guarded([&] {
    bratteli::Count c;
    switch (backend) {
      case BRATTELI_BACKEND_DP: c = bratteli::count_dp(q); break;
      case BRATTELI_BACKEND_DYCK:
        c = bratteli::dyck::enumerate_count(
            q, opts && opts->dyck_budget ? opts->dyck_budget : bratteli::dyck::kDefaultNodeBudget);
        break;
      case BRATTELI_BACKEND_GF: c = bratteli::count_gf(q); break;
      case BRATTELI_BACKEND_SPECTRAL: c = bratteli::count_spectral(q, policy_from(opts)); break;
      case BRATTELI_BACKEND_MATRIX: c = bratteli::count_matrix_power(q); break;
      default: throw UnknownEnumerator("unknown backend");
    }
    *out = dup(c.get_str());
  });
}

bratteli_status bratteli_degrees(uint32_t k, uint32_t i, uint32_t j, uint32_t* indegree,
                                 uint32_t* outdegree) {
  BRATTELI_REQUIRE(indegree);
  BRATTELI_REQUIRE(outdegree);
  return guarded([&] {
    const auto d = bratteli::degrees(k, i, j);
    *indegree = d.in;
    *outdegree = d.out;
  });
}

bratteli_status bratteli_special_case(int level, uint32_t i, uint32_t j, char** out) {
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    if (level != BRATTELI_LEVEL_UNBOUNDED && level < 0)
      throw bratteli::DomainError("no closed form is available for level " + std::to_string(level));
    const auto id = level == BRATTELI_LEVEL_UNBOUNDED
                        ? bratteli::SpecialCaseId::unbounded()
                        : bratteli::SpecialCaseId::level(static_cast<bratteli::Level>(level));
    *out = dup(bratteli::special_case(id, i, j).get_str());
  });
}

bratteli_status bratteli_factorize(const char* path, uint32_t k, char** out) {
  BRATTELI_REQUIRE(path);
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    const auto factors = bratteli::dyck::factorize(bratteli::dyck::StepPath::parse(path), k);
    std::string s;
    for (std::size_t n = 0; n < factors.size(); ++n) {
      if (n) s += '|';
      s += factors[n].str();
    }
    *out = dup(s);
  });
}

bratteli_status bratteli_table_build(uint32_t k, uint32_t jmax, size_t max_entries,
                                     bratteli_table** out) {
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    auto t = bratteli::build_table(k, jmax, max_entries ? max_entries : bratteli::kDefaultTableBudget);
    *out = new bratteli_table{std::move(t)};
  });
}

bratteli_status bratteli_table_from_json(const char* text, bratteli_table** out) {
  BRATTELI_REQUIRE(text);
  BRATTELI_REQUIRE(out);
  return guarded([&] { *out = new bratteli_table{bratteli::table_from_json(text)}; });
}

void bratteli_table_free(bratteli_table* t) { delete t; }

uint32_t bratteli_table_k(const bratteli_table* t) { return t ? t->table.k() : 0; }
uint32_t bratteli_table_jmax(const bratteli_table* t) { return t ? t->table.jmax() : 0; }
size_t bratteli_table_size(const bratteli_table* t) { return t ? t->table.size() : 0; }

bratteli_status bratteli_table_lookup(const bratteli_table* t, uint32_t i, uint32_t j, char** out) {
  BRATTELI_REQUIRE(t);
  BRATTELI_REQUIRE(out);
  return guarded([&] { *out = dup(t->table.at(i, j).get_str()); });
}

bratteli_status bratteli_table_render(const bratteli_table* t, bratteli_table_format format,
                                      char** out) {
  BRATTELI_REQUIRE(t);
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    switch (format) {
      case BRATTELI_FORMAT_CSV: *out = dup(bratteli::table_to_csv(t->table)); break;
      case BRATTELI_FORMAT_JSON: *out = dup(bratteli::table_to_json(t->table)); break;
      case BRATTELI_FORMAT_PRETTY: *out = dup(bratteli::table_to_pretty(t->table, false)); break;
      case BRATTELI_FORMAT_PRETTY_COLOR: *out = dup(bratteli::table_to_pretty(t->table, true)); break;
      default: throw UnknownEnumerator("unknown table format");
    }
  });
}

int bratteli_table_equal(const bratteli_table* a, const bratteli_table* b) {
  return a && b && a->table == b->table ? 1 : 0;
}

bratteli_status bratteli_gf_create(bratteli_gf_form form, uint32_t k, uint32_t i, bratteli_gf** out) {
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    switch (form) {
      case BRATTELI_GF_CLOSED: *out = new bratteli_gf{bratteli::gf_closed(k, i)}; break;
      case BRATTELI_GF_PRODUCT: *out = new bratteli_gf{bratteli::gf_product(k, i)}; break;
      default: throw UnknownEnumerator("unknown generating function form");
    }
  });
}

bratteli_status bratteli_gf_r(uint32_t k, bratteli_gf** out) {
  BRATTELI_REQUIRE(out);
  return guarded([&] { *out = new bratteli_gf{bratteli::r_k(k)}; });
}

bratteli_status bratteli_gf_even(const bratteli_gf* g, unsigned* shift, bratteli_gf** out) {
  BRATTELI_REQUIRE(g);
  BRATTELI_REQUIRE(shift);
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    auto form = bratteli::even_form(g->gf);
    *out = new bratteli_gf{std::move(form.compressed)};
    *shift = form.shift;
  });
}

void bratteli_gf_free(bratteli_gf* g) { delete g; }

int bratteli_gf_equal(const bratteli_gf* a, const bratteli_gf* b) {
  return a && b && a->gf == b->gf ? 1 : 0;
}

bratteli_status bratteli_gf_numerator(const bratteli_gf* g, char** out) {
  BRATTELI_REQUIRE(g);
  BRATTELI_REQUIRE(out);
  return guarded([&] { *out = dup(g->gf.num().str()); });
}

bratteli_status bratteli_gf_denominator(const bratteli_gf* g, char** out) {
  BRATTELI_REQUIRE(g);
  BRATTELI_REQUIRE(out);
  return guarded([&] { *out = dup(g->gf.den().str()); });
}

bratteli_status bratteli_gf_series(const bratteli_gf* g, size_t n, char** out) {
  BRATTELI_REQUIRE(g);
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    *out = dup(join(bratteli::series_coeffs(g->gf, n, bratteli::Expansion::Signed)));
  });
}

bratteli_status bratteli_gf_recurrence(const bratteli_gf* g, size_t* order, char** coeffs,
                                       char** initial) {
  BRATTELI_REQUIRE(g);
  BRATTELI_REQUIRE(order);
  BRATTELI_REQUIRE(coeffs);
  BRATTELI_REQUIRE(initial);
  return guarded([&] {
    const auto rec = bratteli::recurrence_from_gf(g->gf);
    char* c = dup(join(rec.coeffs));
    char* init = nullptr;
    try {
      init = dup(join(rec.initial));
    } catch (...) {
      std::free(c);
      throw;
    }
    *order = rec.order;
    *coeffs = c;
    *initial = init;
  });
}

bratteli_status bratteli_residues(uint32_t k, uint32_t i, long bits, bratteli_spectral** out) {
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    if (bits < MPFR_PREC_MIN || bits > (1L << 24))
      throw bratteli::DomainError("precision of " + std::to_string(bits) + " bits is out of range");
    *out = new bratteli_spectral{bratteli::residues(k, i, bits)};
  });
}

void bratteli_spectral_free(bratteli_spectral* s) { delete s; }

size_t bratteli_spectral_size(const bratteli_spectral* s) {
  return s ? s->decomposition.terms().size() : 0;
}

bratteli_status bratteli_spectral_term(const bratteli_spectral* s, size_t r, int digits,
                                       char** weight, char** pole) {
  BRATTELI_REQUIRE(s);
  BRATTELI_REQUIRE(weight);
  BRATTELI_REQUIRE(pole);
  return guarded([&] {
    const auto& terms = s->decomposition.terms();
    if (r == 0 || r > terms.size())
      throw bratteli::DomainError("term index " + std::to_string(r) + " is out of range");
    char* w = dup(terms[r - 1].weight.str(digits));
    char* p = nullptr;
    try {
      p = dup(terms[r - 1].pole.str(digits));
    } catch (...) {
      std::free(w);
      throw;
    }
    *weight = w;
    *pole = p;
  });
}

bratteli_status bratteli_spectral_weight_sum(const bratteli_spectral* s, int digits, char** out) {
  BRATTELI_REQUIRE(s);
  BRATTELI_REQUIRE(out);
  return guarded([&] { *out = dup(s->decomposition.weight_sum().str(digits)); });
}

bratteli_status bratteli_growth_rate(uint32_t k, long bits, int digits, char** out) {
  BRATTELI_REQUIRE(out);
  return guarded([&] {
    if (bits < MPFR_PREC_MIN || bits > (1L << 24))
      throw bratteli::DomainError("precision of " + std::to_string(bits) + " bits is out of range");
    *out = dup(bratteli::growth_rate(k, bits).str(digits));
  });
}

bratteli_status bratteli_empirical_rate(uint32_t k, uint32_t i, uint32_t jmax, long bits,
                                        int digits, char** rate, char** difference) {
  BRATTELI_REQUIRE(rate);
  return guarded([&] {
    if (bits < MPFR_PREC_MIN || bits > (1L << 24))
      throw bratteli::DomainError("precision of " + std::to_string(bits) + " bits is out of range");
    const auto empirical = bratteli::empirical_rate(k, i, jmax, bits);
    char* r = dup(empirical.str(digits));
    if (difference) {
      try {
        *difference = dup((empirical - bratteli::growth_rate(k, bits)).str(digits));
      } catch (...) {
        std::free(r);
        throw;
      }
    }
    *rate = r;
  });
}

}  // extern "C"
