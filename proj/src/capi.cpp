#include "kummerws.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "kummerws/codes.hpp"
#include "kummerws/families.hpp"
#include "kummerws/kummer.hpp"
#include "kummerws/order_bound.hpp"
#include "kummerws/semigroup.hpp"
#include "kummerws/tables.hpp"
#include "kummerws/two_point.hpp"
#include "kummerws/verify.hpp"

namespace {

thread_local std::string g_last_error;

template <typename F>
kws_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return KWS_EINVAL;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return KWS_EDOMAIN;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return KWS_EDOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KWS_ECHECK;
  }
}

kws::Place decode_place(const kws::KummerCurve& c, int place) {
  if (place == KWS_PLACE_INF)
    return kws::Place::infinity();
  if (place < 1 || static_cast<std::size_t>(place) > c.num_roots())
    throw std::invalid_argument("place index out of range");
  return kws::Place::ramified(static_cast<std::size_t>(place));
}

void encode_params(const kws::CodeParams& p, kws_code_params* out) {
  out->n = p.n;
  out->k = p.k;
  out->d_lower = p.d_lower;
  out->has_exact = p.d_exact.has_value();
  out->d_exact = p.d_exact.value_or(0);
  std::snprintf(out->provenance, sizeof(out->provenance), "%s", p.provenance.c_str());
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct kws_curve {
  kws::KummerCurve curve;
};

struct kws_intvec {
  std::vector<kws::Int> values;
};

struct kws_pairvec {
  std::vector<kws::PairPoint> values;
};

struct kws_family {
  kws::FamilyInstance instance;
  kws_curve curve_view;
};

extern "C" {

const char* kws_status_str(kws_status s) {
  switch (s) {
    case KWS_OK: return "ok";
    case KWS_EINVAL: return "invalid argument";
    case KWS_EDOMAIN: return "domain error";
    case KWS_ECHECK: return "consistency check failed";
  }
  return "unknown status";
}

const char* kws_last_error(void) { return g_last_error.c_str(); }

kws_status kws_curve_create(int64_t m, const int64_t* lambdas, size_t r, kws_curve** out) {
  return guarded([&] {
    if (!lambdas || !out)
      throw std::invalid_argument("null pointer argument");
    auto curve = kws::KummerCurve::create(m, std::vector<kws::Int>(lambdas, lambdas + r));
    *out = new kws_curve{std::move(curve)};
    return KWS_OK;
  });
}

void kws_curve_destroy(kws_curve* c) { delete c; }
int64_t kws_curve_m(const kws_curve* c) { return c->curve.m(); }
size_t kws_curve_r(const kws_curve* c) { return c->curve.num_roots(); }
int64_t kws_curve_genus(const kws_curve* c) { return c->curve.genus(); }

size_t kws_intvec_size(const kws_intvec* v) { return v->values.size(); }
int64_t kws_intvec_at(const kws_intvec* v, size_t i) { return v->values[i]; }
void kws_intvec_destroy(kws_intvec* v) { delete v; }

size_t kws_pairvec_size(const kws_pairvec* v) { return v->values.size(); }
void kws_pairvec_at(const kws_pairvec* v, size_t i, int64_t* a, int64_t* b) {
  *a = v->values[i].a;
  *b = v->values[i].b;
}
void kws_pairvec_destroy(kws_pairvec* v) { delete v; }

void kws_string_destroy(char* s) { delete[] s; }

kws_status kws_gap_set(const kws_curve* c, int place, kws_intvec** out) {
  return guarded([&] {
    const kws::GapSet gaps = kws::gap_set(c->curve, decode_place(c->curve, place));
    *out = new kws_intvec{gaps.values()};
    return KWS_OK;
  });
}

kws_status kws_is_gap(const kws_curve* c, int place, int64_t s, int* out) {
  return guarded([&] {
    *out = kws::gap_criterion(c->curve, decode_place(c->curve, place), s) ? 1 : 0;
    return KWS_OK;
  });
}

kws_status kws_gamma(const kws_curve* c, int place1, int place2, kws_pairvec** out) {
  return guarded([&] {
    const kws::GammaSet g =
        kws::gamma(c->curve, decode_place(c->curve, place1), decode_place(c->curve, place2));
    *out = new kws_pairvec{g.pairs.points()};
    return KWS_OK;
  });
}

kws_status kws_pure_gaps(const kws_curve* c, int place1, int place2, kws_puregap_method method,
                         kws_pairvec** out) {
  return guarded([&] {
    const kws::GammaSet g =
        kws::gamma(c->curve, decode_place(c->curve, place1), decode_place(c->curve, place2));
    kws::PairSet result;
    switch (method) {
      case KWS_PUREGAPS_GLB:
        result = kws::pure_gaps_glb(g);
        break;
      case KWS_PUREGAPS_SIGMA:
        result = kws::pure_gaps_sigma(g);
        break;
      case KWS_PUREGAPS_BOTH:
        result = kws::pure_gaps_glb(g);
        if (result != kws::pure_gaps_sigma(g))
          throw std::runtime_error("glb and sigma pure-gap computations disagree");
        break;
      default:
        throw std::invalid_argument("unknown pure-gap method");
    }
    *out = new kws_pairvec{result.points()};
    return KWS_OK;
  });
}

kws_status kws_family_create(const char* name, int64_t p, int64_t q, int64_t n, int64_t m,
                             kws_family** out) {
  return guarded([&] {
    if (!name || !out)
      throw std::invalid_argument("null pointer argument");
    const auto parsed = kws::family_name_parse(name);
    if (!parsed)
      throw std::invalid_argument("unknown family name");
    auto f = kws::instantiate(*parsed, {.p = p, .q = q, .n = n, .m = m});
    auto* handle = new kws_family{std::move(f), {kws::KummerCurve::create(2, {1, 1, 1})}};
    handle->curve_view.curve = handle->instance.curve;
    *out = handle;
    return KWS_OK;
  });
}

void kws_family_destroy(kws_family* f) { delete f; }
const kws_curve* kws_family_curve(const kws_family* f) { return &f->curve_view; }
int64_t kws_family_field_size(const kws_family* f) { return f->instance.field_size; }
int64_t kws_family_rational_places(const kws_family* f) { return f->instance.n_rational; }
int64_t kws_family_split_lines(const kws_family* f) { return f->instance.n_split; }

kws_status kws_family_is_maximal(const kws_family* f, int* out) {
  return guarded([&] {
    *out = kws::maximality_check(f->instance) ? 1 : 0;
    return KWS_OK;
  });
}

kws_status kws_one_point_code(const kws_family* f, int64_t a, kws_code_params* out) {
  return guarded([&] {
    encode_params(kws::one_point_code(f->instance, a), out);
    return KWS_OK;
  });
}

kws_status kws_corollary_code(const char* name, int64_t p, int64_t q, int64_t n, int64_t a,
                              kws_code_params* out) {
  return guarded([&] {
    const auto parsed = kws::family_name_parse(name ? name : "");
    if (!parsed)
      throw std::invalid_argument("unknown family name");
    encode_params(kws::corollary_closed_form(*parsed, {.p = p, .q = q, .n = n}, a), out);
    return KWS_OK;
  });
}

kws_status kws_bm_one_point_code(int64_t q, int64_t n, int64_t m, int64_t k_mult,
                                 kws_code_params* out) {
  return guarded([&] {
    encode_params(kws::bm_one_point_code(q, n, m, k_mult), out);
    return KWS_OK;
  });
}

kws_status kws_two_point_code_inf(int64_t q, int64_t n, int64_t a, kws_code_params* out) {
  return guarded([&] {
    encode_params(kws::two_point_code_inf(q, n, a), out);
    return KWS_OK;
  });
}

kws_status kws_two_point_code_01(int64_t n, int64_t c1, int64_t c2, kws_code_params* out) {
  return guarded([&] {
    encode_params(kws::two_point_code_01(n, c1, c2), out);
    return KWS_OK;
  });
}

kws_status kws_singleton_defect(const kws_code_params* p, int64_t* out) {
  return guarded([&] {
    if (!p->has_exact)
      throw std::domain_error("singleton defect needs an exact distance");
    *out = p->n + 1 - p->k - p->d_exact;
    return KWS_OK;
  });
}

kws_status kws_order_bound(const kws_curve* c, int place, int64_t ell, int64_t* rho_ell,
                           int64_t* d_ord_out) {
  return guarded([&] {
    const kws::NumericalSemigroup h(kws::gap_set(c->curve, decode_place(c->curve, place)));
    const kws::OrderBoundReport r = kws::d_ord(h, ell);
    if (rho_ell)
      *rho_ell = r.rho_ell;
    if (d_ord_out)
      *d_ord_out = r.d_ord;
    return KWS_OK;
  });
}

kws_status kws_dual_one_point_code(const kws_family* f, int place, int64_t ell,
                                   kws_code_params* out) {
  return guarded([&] {
    encode_params(
        kws::dual_one_point_code(f->instance, decode_place(f->instance.curve, place), ell), out);
    return KWS_OK;
  });
}

kws_status kws_table_csv(int which, char** out) {
  return guarded([&] {
    *out = dup_string(kws::table_csv(which));
    return KWS_OK;
  });
}

kws_status kws_table_check(int which, int* ok) {
  return guarded([&] {
    *ok = kws::table_check(which) ? 1 : 0;
    return KWS_OK;
  });
}

kws_status kws_verify_sweep(int64_t mmax, int64_t rmax, int threads, kws_verify_report* out,
                            char** message) {
  return guarded([&] {
    const kws::VerifyReport r = kws::verify_sweep(mmax, rmax, threads);
    if (out) {
      out->curves = r.curves;
      out->places = r.places;
      out->gamma_pairs = r.gamma_pairs;
      out->failures = r.failures;
    }
    if (message)
      *message = r.failure_messages.empty() ? nullptr : dup_string(r.failure_messages.front());
    if (r.failures > 0) {
      g_last_error = r.failure_messages.empty() ? "sweep failures" : r.failure_messages.front();
      return KWS_ECHECK;
    }
    return KWS_OK;
  });
}

}  // extern "C"
