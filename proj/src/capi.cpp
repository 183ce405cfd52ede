#include "edr/edr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "edr/document.hpp"
#include "edr/kaplansky.hpp"
#include "edr/matrix.hpp"
#include "edr/syntax.hpp"

struct edr_element {
  edr::Element value;
};
struct edr_matrix {
  edr::Matrix value;
};
struct edr_reduction {
  edr::DiagonalReduction value;
};

namespace {

thread_local std::string g_last_error;

edr_status status_of(edr::ErrorCode code) {
  return static_cast<edr_status>(static_cast<int>(code) + 1);
}

edr_status fail(edr_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
edr_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return EDR_OK;
  } catch (const edr::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EDR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EDR_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

edr::Ring to_ring(edr_ring r) {
  switch (r) {
    case EDR_RING_INT: return edr::Ring::Int;
    case EDR_RING_POLYQ: return edr::Ring::PolyQ;
    case EDR_RING_PULLBACK: return edr::Ring::Pullback;
  }
  throw edr::Error(edr::ErrorCode::InvalidArgument, "unknown ring tag");
}

edr_ring from_ring(edr::Ring r) {
  switch (r) {
    case edr::Ring::Int: return EDR_RING_INT;
    case edr::Ring::PolyQ: return EDR_RING_POLYQ;
    case edr::Ring::Pullback: return EDR_RING_PULLBACK;
  }
  return EDR_RING_INT;
}

void require(const void* p, const char* what) {
  if (!p) throw edr::Error(edr::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

void emit(edr_element** out, const edr::Element& e) {
  if (out) *out = new edr_element{e};
}

}  // namespace

extern "C" {

const char* edr_last_error(void) { return g_last_error.c_str(); }

const char* edr_status_name(edr_status status) {
  if (status == EDR_OK) return "Ok";
  if (status < EDR_OK || status > EDR_ERR_INTERNAL) return "Unknown";
  return edr::to_string(static_cast<edr::ErrorCode>(static_cast<int>(status) - 1));
}

void edr_string_free(char* s) { std::free(s); }

edr_status edr_ring_from_name(const char* name, edr_ring* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    auto r = edr::ring_from_name(name);
    if (!r) throw edr::Error(edr::ErrorCode::InvalidArgument,
                             std::string("unknown ring '") + name + "'");
    *out = from_ring(*r);
  });
}

edr_status edr_element_parse(edr_ring ring, const char* text, edr_element** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new edr_element{edr::parse_element(to_ring(ring), text)};
  });
}

void edr_element_free(edr_element* e) { delete e; }

edr_ring edr_element_ring(const edr_element* e) {
  return e ? from_ring(e->value.ring()) : EDR_RING_INT;
}

char* edr_element_format(const edr_element* e) {
  if (!e) return nullptr;
  return dup_string(edr::format_element(e->value));
}

int edr_element_equal(const edr_element* a, const edr_element* b) {
  return a && b && a->value == b->value;
}

edr_status edr_element_arith(const edr_element* a, const edr_element* b, edr_arith_op op,
                             edr_element** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    if (op < EDR_ADD || op > EDR_NEG)
      throw edr::Error(edr::ErrorCode::InvalidArgument, "unknown operation");
    if (op != EDR_NEG) require(b, "b");
    const edr::Element& rhs = op == EDR_NEG ? a->value : b->value;
    *out = new edr_element{
        edr::ring_arithmetic(a->value, rhs, static_cast<edr::ArithOp>(op))};
  });
}

edr_status edr_gcd(const edr_element* f, const edr_element* g, edr_element** d,
                   edr_element** alpha, edr_element** beta) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    edr::BezoutCertificate c = edr::gcd_certificate(f->value, g->value);
    emit(d, c.d);
    emit(alpha, c.alpha);
    emit(beta, c.beta);
  });
}

edr_status edr_kaplansky(const edr_element* a, const edr_element* b, const edr_element* c,
                         edr_element** p, edr_element** q) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(c, "c");
    edr::KaplanskyPair pq = edr::kaplansky_solve(a->value, b->value, c->value);
    emit(p, pq.p);
    emit(q, pq.q);
  });
}

edr_status edr_matrix_parse(edr_ring ring, const char* text, edr_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new edr_matrix{edr::parse_matrix(to_ring(ring), text)};
  });
}

void edr_matrix_free(edr_matrix* m) { delete m; }

size_t edr_matrix_rows(const edr_matrix* m) { return m ? m->value.rows() : 0; }

size_t edr_matrix_cols(const edr_matrix* m) { return m ? m->value.cols() : 0; }

edr_status edr_matrix_get(const edr_matrix* m, size_t i, size_t j, edr_element** out) {
  return guarded([&] {
    require(m, "m");
    require(out, "out");
    if (i >= m->value.rows() || j >= m->value.cols())
      throw edr::Error(edr::ErrorCode::InvalidArgument, "index out of range");
    *out = new edr_element{m->value(i, j)};
  });
}

char* edr_matrix_format(const edr_matrix* m) {
  if (!m) return nullptr;
  return dup_string(edr::format_matrix(m->value));
}

edr_status edr_diagonal_reduce(const edr_matrix* a, size_t cap, edr_reduction** out) {
  return guarded([&] {
    require(a, "a");
    require(out, "out");
    *out = new edr_reduction{
        edr::diagonal_reduce(a->value, cap == 0 ? edr::kDefaultPassCap : cap)};
  });
}

void edr_reduction_free(edr_reduction* r) { delete r; }

edr_status edr_reduction_matrix(const edr_reduction* r, char which, edr_matrix** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    switch (which) {
      case 'P': *out = new edr_matrix{r->value.P}; break;
      case 'Q': *out = new edr_matrix{r->value.Q}; break;
      case 'D': *out = new edr_matrix{r->value.D}; break;
      default: throw edr::Error(edr::ErrorCode::InvalidArgument, "which must be P, Q or D");
    }
  });
}

size_t edr_reduction_passes(const edr_reduction* r) { return r ? r->value.passes : 0; }

int edr_reduction_verify(const edr_matrix* a, const edr_reduction* r) {
  if (!a || !r) return 0;
  try {
    return edr::verify_reduction(a->value, r->value) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

edr_status edr_document(const char* command, edr_ring ring, const char* const* args,
                        size_t nargs, size_t cap, char** json, int* verified) {
  return guarded([&] {
    require(command, "command");
    require(json, "json");
    if (nargs) require(args, "args");
    edr::DocumentRequest req;
    req.command = command;
    req.ring = to_ring(ring);
    for (size_t i = 0; i < nargs; ++i) {
      require(args[i], "argument");
      req.args.emplace_back(args[i]);
    }
    req.cap = cap == 0 ? edr::kDefaultPassCap : cap;
    edr::Document doc = edr::build_document(req);
    char* s = dup_string(doc.json);
    if (!s) throw std::bad_alloc();
    *json = s;
    if (verified) *verified = doc.verified ? 1 : 0;
  });
}

}  // extern "C"
